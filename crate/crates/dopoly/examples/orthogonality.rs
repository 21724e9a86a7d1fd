//! Exact orthogonality of the Hahn family, including the modified measures.
//!
//! ```bash
//! cargo run --example orthogonality
//! ```

use dopoly::exact::{format_rational, int, rat, Rational};
use dopoly::polys::{hahn_eval, norm_const_pi, weight_hahn, HahnParams};
use num_traits::{One, Zero};

fn main() {
    let p = HahnParams::classical(rat(1, 2), int(1), 6).unwrap();
    let n = p.n;
    println!("alpha = 1/2, beta = 1, N = 6");
    println!("normalization constants pi_n (inverse squared norms):");
    for degree in 0..=n {
        println!(
            "  pi_{degree} = {}",
            format_rational(&norm_const_pi(degree, &p).unwrap())
        );
    }

    // The inner product table under the probability weight is exactly
    // diagonal, with 1/pi_n on the diagonal.
    let weights: Vec<Rational> = (0..=n).map(|x| weight_hahn(x, &p).unwrap()).collect();
    let values: Vec<Vec<Rational>> = (0..=n)
        .map(|d| {
            (0..=n)
                .map(|x| hahn_eval(d, &int(x as i64), &p).unwrap())
                .collect()
        })
        .collect();
    let mut diagonal = true;
    for m in 0..=n as usize {
        for d in 0..=n as usize {
            let acc: Rational = (0..=n as usize)
                .map(|x| &weights[x] * &values[m][x] * &values[d][x])
                .sum();
            let expect = if m == d {
                Rational::one() / norm_const_pi(d as u32, &p).unwrap()
            } else {
                Rational::zero()
            };
            if acc != expect {
                diagonal = false;
            }
        }
    }
    println!("inner product table exactly diagonal: {diagonal}");

    // Shifted families are orthonormal under the x(N-x)-, x- and
    // (N-x)-modified measures once the squared prefactors are attached.
    // Checked here in squared form for the x(N-x) case.
    let s = p.s();
    let shifted = HahnParams::classical(&p.alpha + int(1), &p.beta + int(1), n - 2).unwrap();
    let prefactor_sq = (&s + int(2)) * (&s + int(3))
        / (int(n as i64) * int(n as i64 - 1) * (&p.alpha + int(1)) * (&p.beta + int(1)));
    let mut orthonormal = true;
    for m in 0..=(n - 2) as usize {
        for d in 0..=(n - 2) as usize {
            let mut acc = Rational::zero();
            for x in 0..=n {
                let w = int(x as i64) * int(n as i64 - x as i64) * &weights[x as usize];
                if w.is_zero() {
                    continue;
                }
                let shifted_x = int(x as i64 - 1);
                acc += w
                    * hahn_eval(m as u32, &shifted_x, &shifted).unwrap()
                    * hahn_eval(d as u32, &shifted_x, &shifted).unwrap();
            }
            let normalized = if m == d {
                acc * &prefactor_sq * norm_const_pi(m as u32, &shifted).unwrap()
            } else {
                acc
            };
            let expect = if m == d {
                Rational::one()
            } else {
                Rational::zero()
            };
            if normalized != expect {
                orthonormal = false;
                println!("  mismatch at ({m}, {d}): {}", format_rational(&normalized));
            }
        }
    }
    println!("shifted family orthonormal under x(N-x) d xi (squared form): {orthonormal}");
}
