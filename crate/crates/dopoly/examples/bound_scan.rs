//! Sup-norm bounds: thresholds in exact radical form, interval scans, and
//! the counterexample that shows why the degree condition matters.
//!
//! ```bash
//! cargo run --example bound_scan
//! ```

use dopoly::bounds::{
    bound_hahn_unrestricted, eberlein_threshold, hahn_threshold, scan, zaremba_admissible,
    BoundSpec,
};
use dopoly::exact::{format_rational, int, rat};
use dopoly::polys::HahnParams;

fn main() {
    // Degree threshold in exact radical form; the radicand here is a perfect
    // square, so the threshold is exactly 2.
    let p = HahnParams::classical(int(0), int(0), 4).unwrap();
    let t = hahn_threshold(&p).unwrap();
    println!(
        "alpha = beta = 0, N = 4: threshold = {t} ~= {:.4}",
        t.to_f64()
    );
    println!(
        "  admits degree 2: {}, degree 3: {}",
        t.admits(2),
        t.admits(3)
    );

    // Within the threshold the endpoint bound holds on the whole interval.
    let spec = BoundSpec::hahn32(2, p).unwrap();
    let report = scan(&spec, &rat(1, 8)).unwrap();
    println!(
        "  scan at step 1/8: worst ratio {} at x = {}, violations: {}",
        format_rational(&report.worst_ratio),
        format_rational(&report.worst_point),
        report.violations.len()
    );

    // Outside every guarantee: alpha = beta = -1/2, N = 4, degree 2. The
    // endpoint bound is 1 but the polynomial reaches -5/3 at x = 2.
    let p = HahnParams::classical(rat(-1, 2), rat(-1, 2), 4).unwrap();
    println!("\nalpha = beta = -1/2 (sum <= -1, no threshold applies):");
    println!(
        "  integer-grid admissibility at degree 2: {}",
        zaremba_admissible(2, &p)
    );
    let spec = BoundSpec::hahn_raw(2, p.clone()).unwrap();
    let report = scan(&spec, &int(1)).unwrap();
    for (x, value) in &report.violations {
        println!(
            "  violation: Q_2({}) = {}",
            format_rational(x),
            format_rational(value)
        );
    }

    // The degree-unrestricted bound covers that case, and it is sharp: the
    // scan's worst ratio is exactly 1, attained at the violating point above.
    let bound = bound_hahn_unrestricted(2, &p).unwrap();
    println!("  degree-unrestricted bound: {}", format_rational(&bound));
    let spec = BoundSpec::hahn34(2, p).unwrap();
    let report = scan(&spec, &rat(1, 8)).unwrap();
    println!(
        "  scan: worst ratio {} at x = {} (sharp)",
        format_rational(&report.worst_ratio),
        format_rational(&report.worst_point)
    );

    // Steep-parameter regime: the same endpoint bound, different threshold.
    let p = HahnParams::eberlein(int(-4), int(-4), 3).unwrap();
    let t = eberlein_threshold(&p).unwrap();
    println!(
        "\nsteep regime alpha = beta = -4, N = 3: threshold = {t} ~= {:.4}",
        t.to_f64()
    );
    let spec = BoundSpec::eberlein38(3, p).unwrap();
    let report = scan(&spec, &rat(1, 8)).unwrap();
    println!(
        "  scan degree 3: worst ratio {} ({} violations)",
        format_rational(&report.worst_ratio),
        report.violations.len()
    );

    // Dual family on its spectral interval [0, N(N+alpha+beta+1)].
    let p = HahnParams::classical(rat(1, 2), int(1), 4).unwrap();
    let spec = BoundSpec::dual39(2, p).unwrap();
    println!(
        "\ndual bound, alpha = 1/2, beta = 1, N = 4: interval end {} bound {}",
        format_rational(&spec.interval_end),
        format_rational(&spec.bound_value)
    );
    let report = scan(&spec, &rat(1, 8)).unwrap();
    println!(
        "  worst ratio {} at x = {} (attained at the right endpoint)",
        format_rational(&report.worst_ratio),
        format_rational(&report.worst_point)
    );
}
