//! The family walk on the Sekine quantum groups: exact spectral distance
//! against the closed-form envelope, for the order-98 member.

use qgwalk::bounds::{sekine_lower, sekine_upper, upper_bound};
use qgwalk::catalog;
use qgwalk::fourier::tv_distance;
use qgwalk::walks::Functional;
use qgwalk::walks::{convolution_power, sekine_walk_state};

fn main() -> qgwalk::Result<()> {
    let n = 7usize;
    let qg = catalog::sekine(n)?;
    let irreps = catalog::sekine_irreps(n)?;
    println!("KP_{n}: dimension {}, {} irreps", qg.dim(), irreps.irreps.len());

    let nu = sekine_walk_state(&qg, n)?;
    let pi = Functional::haar_state(&qg);

    for alpha in [1usize, 2] {
        let k = qgwalk::bounds::sekine_mixing_k(n, alpha as f64);
        let nk = convolution_power(&nu, k, &qg)?;
        let tv = tv_distance(nk.functional(), &pi, &qg);
        let ub = upper_bound(&nu, &irreps, k)?;
        let closed = sekine_upper(n, alpha as f64)?.value;
        assert!(tv <= ub && ub <= closed);
        println!("alpha={alpha}: k={k:3}  tv={tv:.3e} <= ubl={ub:.3e} <= {closed:.3e}");
    }

    println!("\nearly steps (lower bound is only effective for small k):");
    for k in 1..=8 {
        let nk = convolution_power(&nu, k, &qg)?;
        let tv = tv_distance(nk.functional(), &pi, &qg);
        let lower = sekine_lower(n, k)?.value;
        println!("k={k}  lower={lower:.4e}  tv={tv:.4e}");
    }
    Ok(())
}
