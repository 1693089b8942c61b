//! Cesàro means of a walk converge to an idempotent state — which need not
//! be the Haar state. The canonical counterexample is an idempotent on the
//! Kac–Paljutkin group that is not the Haar state of any subgroup.

use qgwalk::blockalg::cr;
use qgwalk::catalog;
use qgwalk::fourier::tv_distance;
use qgwalk::walks::{cesaro, convolve, kp_state, Functional};

fn main() -> qgwalk::Result<()> {
    let (kp, _) = catalog::kac_paljutkin()?;
    let pi = Functional::haar_state(&kp);

    // a mixing walk: Cesàro means head to the Haar state
    let nu = kp_state(&kp, [0.1, 0.1, 0.2, 0.2, 0.4], 0.6, 0.0, 0.3)?;
    println!("mixing walk:");
    for n in [1usize, 4, 16, 64, 256] {
        let mean = cesaro(&nu, n, &kp)?;
        println!("  n={n:4}  tv(cesaro, haar) = {:.4e}", tv_distance(mean.functional(), &pi, &kp));
    }

    // the periodic walk averages to ½(e²+ε), an idempotent that is not π
    let e2 = kp_state(&kp, [0.0, 1.0, 0.0, 0.0, 0.0], 0.0, 0.0, 0.0)?;
    let mean = cesaro(&e2, 1000, &kp)?;
    let again = convolve(mean.functional(), mean.functional(), &kp)?;
    let idem = qgwalk::blockalg::max_abs_diff(&again.coeffs, mean.coeffs());
    println!("\nperiodic walk: cesaro(1000) idempotency residual {idem:.1e}, tv to haar {:.3}",
        tv_distance(mean.functional(), &pi, &kp));

    // the idempotent state (e¹+e⁴)/4 + E¹¹/2 reproduces itself under convolution
    let mut coeffs = vec![cr(0.0); 8];
    coeffs[0] = cr(0.25);
    coeffs[3] = cr(0.25);
    coeffs[4] = cr(0.5);
    let phi = Functional::from_coeffs(&kp, coeffs)?;
    let conv = convolve(&phi, &phi, &kp)?;
    println!(
        "idempotent check for (e1+e4)/4 + E11/2: residual {:.1e}",
        qgwalk::blockalg::max_abs_diff(&conv.coeffs, &phi.coeffs)
    );
    Ok(())
}
