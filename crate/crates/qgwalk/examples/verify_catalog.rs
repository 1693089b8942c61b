//! Run the full Hopf axiom suite over every catalog group and print the
//! residual report, including the one fixture that is supposed to fail.

use qgwalk::catalog;
use qgwalk::hopf::verify_descriptor;

fn main() -> qgwalk::Result<()> {
    let mut groups = vec![
        catalog::function_algebra(&catalog::cyclic(5)?)?,
        catalog::function_algebra(&catalog::symmetric(3)?)?,
        catalog::function_algebra(&catalog::dihedral(4)?)?,
        catalog::function_algebra(&catalog::quaternion()?)?,
        catalog::group_algebra(&catalog::symmetric(3)?)?.algebra,
        catalog::kac_paljutkin()?.0,
    ];
    for n in [1usize, 2, 3, 4, 5] {
        groups.push(catalog::sekine(n)?);
    }

    println!(
        "{:<10} {:>4}  {:>12}  {:>6} {:>6}  blocks",
        "group", "dim", "max residual", "comm", "cocomm"
    );
    for qg in &groups {
        let report = qg.verify()?;
        assert!(report.is_quantum_group(), "{} failed: {report:?}", qg.label);
        println!(
            "{:<10} {:>4}  {:>12.2e}  {:>6} {:>6}  {:?}",
            qg.label,
            qg.dim(),
            report.max_residual(),
            report.commutative,
            report.cocommutative,
            qg.shape.dims()
        );
    }

    // the four-dimensional Hopf algebra with S² ≠ I is rejected
    let sweedler = catalog::sweedler();
    let report = verify_descriptor(&sweedler);
    println!(
        "\n{}: kac residual {:.1} (S² ≠ I), quantum group: {}",
        sweedler.label,
        report.kac,
        report.is_quantum_group()
    );
    assert!(report.kac > 0.5 && !report.is_quantum_group());
    Ok(())
}
