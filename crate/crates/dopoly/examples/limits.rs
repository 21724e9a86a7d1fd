//! Float diagnostics for the two classical limits: Krawtchouk polynomials as
//! the steep-parameter limit of Hahn polynomials, and the continuous
//! first-kind Chebyshev polynomials as the large-N limit of the discrete
//! ones. Everything is evaluated exactly and floated only at the end.
//!
//! ```bash
//! cargo run --example limits
//! ```

use dopoly::exact::{int, rat};
use dopoly::identities::{krawtchouk_limit_gap, trig_limit_gap};
use dopoly::polys::KrawtchoukParams;

fn main() {
    println!("Krawtchouk limit |Q_n(x, pt, qt, N) - k_n(x, p, N)|, p = 1/3, N = 6:");
    let kp = KrawtchoukParams::new(rat(1, 3), 6).unwrap();
    println!(
        "{:>4} {:>4} {:>12} {:>12} {:>12}",
        "n", "x", "t=10^2", "t=10^3", "t=10^4"
    );
    for degree in [1u32, 2, 3] {
        for x in [0i64, 3, 6] {
            let gaps: Vec<f64> = [100u32, 1000, 10000]
                .iter()
                .map(|&t| krawtchouk_limit_gap(degree, &int(x), &kp, t))
                .collect();
            println!(
                "{:>4} {:>4} {:>12.3e} {:>12.3e} {:>12.3e}",
                degree, x, gaps[0], gaps[1], gaps[2]
            );
        }
    }
    println!("(each column shrinks by ~10x: the gap decays like 1/t)\n");

    println!("trig limit |T_n(N(1-z)/2, N) - cos(n arccos z)|, z = 1/2:");
    println!(
        "{:>4} {:>12} {:>12} {:>12}",
        "n", "N=500", "N=1000", "N=2000"
    );
    for degree in [2u32, 3, 5] {
        let gaps: Vec<f64> = [500u32, 1000, 2000]
            .iter()
            .map(|&n| trig_limit_gap(degree, 0.5, n))
            .collect();
        println!(
            "{:>4} {:>12.3e} {:>12.3e} {:>12.3e}",
            degree, gaps[0], gaps[1], gaps[2]
        );
    }
    println!("(the discrete family converges to cos(n arccos z) like 1/N)");
}
