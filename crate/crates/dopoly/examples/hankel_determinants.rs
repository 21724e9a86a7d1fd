//! Hankel moment determinants and their closed forms.
//!
//! ```bash
//! cargo run --example hankel_determinants
//! ```

use dopoly::exact::{format_rational, gen_binomial, int, rat, Rational};
use dopoly::moments::{
    c_plus_minus, dual_even_ratio_gap, dual_measure, hahn_det_ratio, hahn_measure, hankel_lower,
    hankel_upper, modified_dets, moments_of, HahnRatioKind, MomentSequence,
};
use dopoly::polys::HahnParams;

fn main() {
    // The arcsine moments c_j = C(2j, j)/4^j on [0, 1] give powers of 1/2.
    let c: Vec<Rational> = (0..=8u32)
        .map(|j| gen_binomial(&int(2 * j as i64), j) * rat(1, 4).pow(j as i32))
        .collect();
    println!(
        "arcsine moments: {:?}",
        c.iter().take(5).map(format_rational).collect::<Vec<_>>()
    );
    let arcsine = MomentSequence::new(int(1), c).unwrap();
    println!("arcsine Hankel determinants (lower = upper at every order):");
    for order in 1..=7i64 {
        println!(
            "  order {order}: lower {} upper {}",
            format_rational(&hankel_lower(&arcsine, order).unwrap()),
            format_rational(&hankel_upper(&arcsine, order).unwrap()),
        );
    }

    // Principal representation endpoints: the band of admissible next moments.
    let (plus, minus) = c_plus_minus(&arcsine, 2).unwrap();
    println!(
        "admissible second moment given c_1 = 1/2: [{}, {}] (actual 3/8)",
        format_rational(&minus),
        format_rational(&plus)
    );

    // Closed-form determinant ratios of the Hahn measure versus brute force.
    let p = HahnParams::classical(rat(1, 2), int(0), 5).unwrap();
    let ms = moments_of(&hahn_measure(&p).unwrap(), 10);
    println!("\nHahn measure alpha = 1/2, beta = 0, N = 5:");
    for n in 1..=4u32 {
        let brute =
            hankel_upper(&ms, 2 * n as i64).unwrap() / hankel_lower(&ms, 2 * n as i64).unwrap();
        let closed = hahn_det_ratio(HahnRatioKind::EvenUpperOverLower, n, &p).unwrap();
        println!(
            "  upper/lower at order {}: brute force {} closed form {} (equal: {})",
            2 * n,
            format_rational(&brute),
            format_rational(&closed),
            brute == closed
        );
    }
    let (lower_plus, upper_minus) = modified_dets(&ms, 6).unwrap();
    println!(
        "  modified determinants at order 6: lower-plus {} upper-minus {}",
        format_rational(&lower_plus),
        format_rational(&upper_minus)
    );

    // The spectral measure of the dual family and its ratio gaps.
    let p = HahnParams::classical(int(0), int(0), 4).unwrap();
    let spectral = dual_measure(&p).unwrap();
    println!("\ndual spectral measure, alpha = beta = 0, N = 4:");
    println!(
        "  support: {:?}",
        spectral
            .support()
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
    );
    println!(
        "  masses:  {:?}",
        spectral
            .masses()
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
    );
    let ms = moments_of(&spectral, 12);
    for l in 0..=2u32 {
        let brute = hankel_lower(&ms, 2 * l as i64).unwrap()
            / hankel_upper(&ms, 2 * l as i64).unwrap()
            - hankel_lower(&ms, 2 * l as i64 + 2).unwrap()
                / hankel_upper(&ms, 2 * l as i64 + 2).unwrap();
        let closed = dual_even_ratio_gap(l, &p).unwrap();
        println!(
            "  even ratio gap at l = {l}: {} (closed form agrees: {})",
            format_rational(&brute),
            brute == closed
        );
    }
}
