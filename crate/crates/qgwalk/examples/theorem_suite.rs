//! Fourier-duality identities as numerical checks: the Plancherel identity,
//! the inversion formula through irrep traces, and both convolution theorems,
//! sampled over deterministic pseudo-random elements.

use qgwalk::catalog;
use qgwalk::fourier::{verify_convolution, verify_inversion, verify_plancherel};

fn main() -> qgwalk::Result<()> {
    let t7 = catalog::cyclic(7)?;
    let z7 = catalog::function_algebra(&t7)?;
    let z7_irreps = catalog::classical_irreps(&z7, &t7, None)?;

    let ga = catalog::group_algebra(&catalog::symmetric(4)?)?;
    let cs4_irreps = ga.irreps();

    let (kp, kp_irreps) = catalog::kac_paljutkin()?;
    let s5 = catalog::sekine(5)?;
    let s5_irreps = catalog::sekine_irreps(5)?;

    let suite: Vec<(&str, &qgwalk::QuantumGroup, &qgwalk::IrrepTable)> = vec![
        ("F(Z7)", &z7, &z7_irreps),
        ("C[S4]", &ga.algebra, &cs4_irreps),
        ("KP", &kp, &kp_irreps),
        ("KP_5", &s5, &s5_irreps),
    ];

    println!(
        "{:<8} {:>12} {:>12} {:>12} {:>12}",
        "group", "plancherel", "inversion", "dvd-conv", "vd-conv"
    );
    for (name, qg, irreps) in suite {
        let p = verify_plancherel(qg, 7, 50);
        let i = verify_inversion(qg, irreps, 8, 50);
        let (dvd, vd) = verify_convolution(qg, irreps, 9, 50);
        println!("{name:<8} {p:>12.2e} {i:>12.2e} {dvd:>12.2e} {vd:>12.2e}");
        assert!(p <= 1e-9 && i <= 1e-9 && dvd <= 1e-9 && vd <= 1e-9);
    }
    Ok(())
}
