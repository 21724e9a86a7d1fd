//! Verifying the sum-of-squares identities exactly.
//!
//! Each identity states that a positive combination of squared family
//! members equals `1 - (weighted square)`, generalizing `sin^2 + cos^2 = 1`.
//! Both sides are polynomials in `x` of degree at most `2n + 2`, so checking
//! the residual at `2n + 3` rational points proves the identity outright.
//!
//! ```bash
//! cargo run --example sum_of_squares_identities
//! ```

use dopoly::exact::{format_rational, int, rat};
use dopoly::identities::{
    generic_residual, residual, verify, verify_perturbed, IdentityId, IdentityParams, VerifyStatus,
};
use dopoly::moments::DiscreteMeasure;
use dopoly::polys::{HahnParams, KrawtchoukParams};

fn main() {
    let hahn = IdentityParams::Hahn(HahnParams::classical(rat(1, 2), int(1), 6).unwrap());
    let kraw = IdentityParams::Krawtchouk(KrawtchoukParams::new(rat(1, 3), 6).unwrap());
    let cheb = IdentityParams::Chebyshev { n: 6 };

    println!("identity catalog over N = 6:");
    for id in IdentityId::ALL {
        let params = match id {
            IdentityId::C36a => &cheb,
            IdentityId::T41a | IdentityId::T41b | IdentityId::T41c | IdentityId::T41d => &kraw,
            _ => &hahn,
        };
        for degree in id.degree_range(6) {
            let result = verify(id, params, degree).unwrap();
            let status = match &result.status {
                VerifyStatus::ProvedZero => "proved-zero".to_string(),
                VerifyStatus::NonzeroResidual { witness, residual } => {
                    format!(
                        "NONZERO {} at x = {}",
                        format_rational(residual),
                        format_rational(witness)
                    )
                }
            };
            println!(
                "  {id} n={degree}: {status} ({} points)",
                result.points_checked
            );
        }
    }

    // The residual is an exact rational at any point, not just a boolean.
    let r = residual(IdentityId::T31c, &hahn, 2, &rat(7, 3)).unwrap();
    println!("\nresidual of T31c at x = 7/3: {}", format_rational(&r));

    // The generic identity holds for arbitrary measures on [0, R]; here a
    // lopsided three-atom measure on [0, 2].
    let measure = DiscreteMeasure::new(
        vec![
            (rat(1, 4), rat(1, 2)),
            (int(1), rat(1, 3)),
            (rat(7, 4), rat(1, 6)),
        ],
        int(2),
    )
    .unwrap();
    let ok = (0..=5).all(|j| generic_residual(&measure, 1, &rat(j, 2)).unwrap() == int(0));
    println!("generic identity on a lopsided 3-atom measure (degree 1): proved = {ok}");

    // Detector sanity: shifting the right-hand constant from 1 to 2 must be
    // caught immediately.
    let result = verify_perturbed(IdentityId::T41d, &kraw, 2).unwrap();
    match result.status {
        VerifyStatus::NonzeroResidual { witness, residual } => println!(
            "perturbed identity caught: residual {} at x = {}",
            format_rational(&residual),
            format_rational(&witness)
        ),
        VerifyStatus::ProvedZero => println!("BUG: perturbation not detected"),
    }
}
