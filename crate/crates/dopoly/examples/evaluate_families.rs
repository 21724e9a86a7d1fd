//! Exact evaluation of every polynomial family.
//!
//! ```bash
//! cargo run --example evaluate_families
//! ```

use dopoly::exact::{format_rational, int, rat};
use dopoly::polys::{
    chebyshev_eval, dual_hahn_eval, dual_nodes, endpoint_values, hahn_eval, krawtchouk_eval,
    weight_hahn, ChebKind, HahnParams, KrawtchoukParams,
};

fn main() {
    // Hahn polynomials on {0, ..., 4} with alpha = beta = -1/2.
    let p = HahnParams::classical(rat(-1, 2), rat(-1, 2), 4).unwrap();
    println!("Hahn family, alpha = beta = -1/2, N = 4:");
    for degree in 0..=4 {
        let row: Vec<String> = (0..=4)
            .map(|x| format_rational(&hahn_eval(degree, &int(x), &p).unwrap()))
            .collect();
        println!("  Q_{degree} on 0..=4: [{}]", row.join(", "));
    }
    println!("  note Q_2(2) = -5/3: the family escapes the unit bound at an interior point\n");

    // Weights are an exact probability mass function.
    let total: dopoly::Rational = (0..=4).map(|x| weight_hahn(x, &p).unwrap()).sum();
    println!(
        "  weights: {:?}",
        (0..=4)
            .map(|x| format_rational(&weight_hahn(x, &p).unwrap()))
            .collect::<Vec<_>>()
    );
    println!("  total mass = {}\n", format_rational(&total));

    // Endpoint values in closed form.
    let p = HahnParams::classical(rat(-1, 2), rat(1, 2), 5).unwrap();
    let (at0, at_n) = endpoint_values(2, &p).unwrap();
    println!(
        "alpha = -1/2, beta = 1/2, N = 5: (Q_2(0), Q_2(5)) = ({}, {})",
        format_rational(&at0),
        format_rational(&at_n)
    );

    // Krawtchouk polynomials; the value at x = N is (-q/p)^n exactly.
    let kp = KrawtchoukParams::new(rat(1, 3), 5).unwrap();
    println!("\nKrawtchouk family, p = 1/3, N = 5:");
    for degree in 0..=3 {
        println!(
            "  k_{degree}(5) = {}",
            format_rational(&krawtchouk_eval(degree, &int(5), &kp).unwrap())
        );
    }

    // Dual Hahn polynomials live on the spectral nodes x(x + alpha + beta + 1).
    let p = HahnParams::classical(int(0), int(0), 4).unwrap();
    let nodes = dual_nodes(&p);
    println!("\nDual Hahn family, alpha = beta = 0, N = 4:");
    println!(
        "  spectral nodes: {:?}",
        nodes.iter().map(format_rational).collect::<Vec<_>>()
    );
    for (x, node) in nodes.iter().enumerate() {
        println!(
            "  R_2(lambda_{x}) = {}",
            format_rational(&dual_hahn_eval(2, node, &p).unwrap())
        );
    }

    // Discrete Chebyshev polynomials are the half-integer Hahn specializations.
    println!("\nDiscrete Chebyshev, N = 6:");
    for degree in 0..=3 {
        println!(
            "  T_{degree}(3) = {:>6}   U_{degree}(3) = {}",
            format_rational(&chebyshev_eval(ChebKind::T, degree, &int(3), 6).unwrap()),
            format_rational(&chebyshev_eval(ChebKind::U, degree, &int(3), 6).unwrap()),
        );
    }

    // Evaluation points can be any rational, not just support points.
    let p = HahnParams::classical(rat(1, 2), int(1), 6).unwrap();
    println!(
        "\nQ_3(7/3) at alpha = 1/2, beta = 1, N = 6: {}",
        format_rational(&hahn_eval(3, &rat(7, 3), &p).unwrap())
    );
}
