//! Nearest-neighbour walk on the hypercube: the closed-form bound at the
//! mixing time, plus a projection test element giving a lower bound before it.

use qgwalk::blockalg::AlgebraElement;
use qgwalk::bounds::{cube_mixing_k, cube_upper};
use qgwalk::catalog;
use qgwalk::fourier::{tv_distance, tv_lower_via_projection};
use qgwalk::walks::Functional;
use qgwalk::walks::{convolution_power, State};

fn main() -> qgwalk::Result<()> {
    let n = 6usize;
    let table = catalog::z2_power(n)?;
    let qg = catalog::function_algebra(&table)?;
    let order = 1usize << n;
    let mut probs = vec![0.0; order];
    for s in 0..order {
        if (s as u32).count_ones() <= 1 {
            probs[s] = 1.0 / (n as f64 + 1.0);
        }
    }
    let nu = State::classical(&qg, &probs)?;
    let pi = Functional::haar_state(&qg);

    // indicator of the weight window |n − 2w(s)| < β√n is a projection
    let beta = 1.0;
    let mut window = AlgebraElement::zero(&qg.shape);
    for s in 0..order {
        let w = (s as u32).count_ones() as f64;
        if (n as f64 - 2.0 * w).abs() < beta * (n as f64).sqrt() {
            window.blocks[s][(0, 0)] = qgwalk::blockalg::cr(1.0);
        }
    }

    for c in [1.0f64, 2.0, 3.0] {
        let k = cube_mixing_k(n, c).ceil() as usize;
        let nk = convolution_power(&nu, k, &qg)?;
        let tv = tv_distance(nk.functional(), &pi, &qg);
        let bound_sq = cube_upper(n, c)?.value;
        let lower = tv_lower_via_projection(&nk, &window, &qg)?;
        assert!(tv * tv <= bound_sq && lower <= tv + 1e-12);
        println!(
            "c={c}: k={k:2}  window-lower={lower:.4e}  tv={tv:.4e}  tv^2 <= {bound_sq:.4e}"
        );
    }
    Ok(())
}
