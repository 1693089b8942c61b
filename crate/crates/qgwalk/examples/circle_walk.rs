//! Simple walk on the cyclic group: exact total variation against the
//! closed-form upper and lower envelopes.

use qgwalk::bounds::{zn_lower, zn_upper};
use qgwalk::catalog;
use qgwalk::fourier::tv_distance;
use qgwalk::walks::Functional;
use qgwalk::walks::{convolution_power, State};

fn main() -> qgwalk::Result<()> {
    let n = 9usize;
    let table = catalog::cyclic(n)?;
    let qg = catalog::function_algebra(&table)?;
    let mut probs = vec![0.0; n];
    probs[1] = 0.5;
    probs[n - 1] = 0.5;
    let nu = State::classical(&qg, &probs)?;
    let pi = Functional::haar_state(&qg);

    let kmin = ((n * n) as f64 / 40.0).ceil() as usize;
    println!("simple walk on the {n}-cycle; bounds valid from k = {kmin}");
    for k in (kmin..=4 * n * n).step_by(n * n / 2) {
        let nk = convolution_power(&nu, k, &qg)?;
        let tv = tv_distance(nk.functional(), &pi, &qg);
        let upper = zn_upper(n, k)?.value;
        let lower = zn_lower(n, k)?.value;
        assert!(lower <= tv && tv <= upper);
        println!("k={k:4}  {lower:.4e} <= tv = {tv:.4e} <= {upper:.4e}");
    }
    Ok(())
}
