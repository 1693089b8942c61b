//! A walk on the dual of the symmetric group: the state comes from the
//! permutation representation paired with a sharply-peaked unit vector, and
//! the upper bound lemma collapses to a sum over the group's points.

use qgwalk::bounds::{dual_sn_lower, dual_sn_upper, ubl_contributions, upper_bound};
use qgwalk::catalog;
use qgwalk::io::dual_sn_unit_vector;
use qgwalk::walks::permutation_vector_state;

fn main() -> qgwalk::Result<()> {
    let n = 4usize;
    let (table, perms) = catalog::symmetric_with_permutations(n)?;
    let ga = catalog::group_algebra(&table)?;
    println!(
        "C[S{n}] has Wedderburn blocks {:?}",
        ga.algebra.shape.dims()
    );

    let xi = dual_sn_unit_vector(n);
    let u = permutation_vector_state(&ga, &perms, &xi)?;
    let irreps = ga.irreps();

    let nn = (n as f64).powi(n as i32) as usize;
    for alpha in [1usize, 2] {
        let k = alpha * nn;
        let generic = upper_bound(&u, &irreps, k)?;
        let closed_sq = dual_sn_upper(n, alpha as f64)?.value;
        assert!(generic * generic <= closed_sq);
        println!(
            "k = {k:4}: generic ubl = {generic:.4e}, closed-form bound on tv^2 = {closed_sq:.4e}"
        );
    }
    let beta = 1.0;
    println!(
        "lower bound at k = {}: tv^2 >= {:.4e}",
        nn - 1,
        dual_sn_lower(n, beta)?.value
    );

    // the per-point contributions are |u(σ)|^{2k}
    let contributions = ubl_contributions(&u, &irreps, 2)?;
    let mut top: Vec<_> = contributions.iter().collect();
    top.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    println!("largest contributions at k=2:");
    for (name, v) in top.iter().take(4) {
        println!("  {name:<10} {v:.5}");
    }
    Ok(())
}
