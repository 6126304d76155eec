//! Run the verification suites against a hyperbolic matrix and print the
//! reports.
//!
//! Run with `cargo run --release --example verify_structure`.

use kacmoody::engine::GradedAlgebra;
use kacmoody::gcm::Gcm;
use kacmoody::verify::{
    ad_power_suite, bracket_dimension_suite, bracket_vanishing_suite, free_heisenberg_suite,
    nonzero_bracket_suite, orthogonal_real_pair_suite, regression_suite, VerifyParams,
};

fn main() {
    let gcm = Gcm::new(vec![vec![2, -3], vec![-3, 2]]).unwrap();
    let symm = gcm.symmetrize().unwrap();
    let params = VerifyParams {
        height: 7,
        samples: 40,
        seed: kacmoody::verify::DEFAULT_SEED,
    };
    let g = GradedAlgebra::build(&gcm, &symm, params.height).unwrap();

    let reports = [
        nonzero_bracket_suite(&g, &params),
        bracket_vanishing_suite(&g, &params),
        bracket_dimension_suite(&g, &params),
        ad_power_suite(&g, &params),
        free_heisenberg_suite(&g, &params),
        orthogonal_real_pair_suite(&g, &params),
        regression_suite(&params).unwrap(),
    ];
    for report in &reports {
        println!(
            "{:<16} {:?}  cases {:<6} skipped {:<4} violations {}",
            report.suite,
            report.verdict,
            report.cases_checked,
            report.skipped_truncation,
            report.violations.len()
        );
        for (regime, count) in &report.regimes {
            println!("    {regime}: {count}");
        }
        for v in report.violations.iter().take(3) {
            println!(
                "    violation: {} expected {} got {}",
                v.inputs, v.expected, v.actual
            );
        }
    }
}
