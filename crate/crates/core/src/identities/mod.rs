//! Executable identity checks with structured pass/fail reports.

mod checks;
mod report;

use rayon::prelude::*;

use crate::numbers::Parity;
pub use checks::*;
pub use report::{IdentityReport, Status, Witness};

/// A registered check: stable id plus the function running it up to `nmax`.
#[derive(Clone, Copy)]
pub struct IdentityDef {
    pub id: &'static str,
    pub run: fn(usize) -> IdentityReport,
}

pub fn registry() -> Vec<IdentityDef> {
    macro_rules! def {
        ($id:literal, $f:expr) => {
            IdentityDef { id: $id, run: $f }
        };
    }
    vec![
        def!("genocchi-central", check_genocchi_central),
        def!("cfact-to-euler-even", |n| check_cfact_to_euler(Parity::Even, n)),
        def!("cfact-to-euler-odd", |n| check_cfact_to_euler(Parity::Odd, n)),
        def!("half-shift-even", |n| check_half_shift(Parity::Even, n)),
        def!("half-shift-odd", |n| check_half_shift(Parity::Odd, n)),
        def!("triangle-recurrence-1", |n| check_triangle_recurrence(1, n)),
        def!("triangle-recurrence-2", |n| check_triangle_recurrence(2, n)),
        def!("triangle-recurrence-3", |n| check_triangle_recurrence(3, n)),
        def!("triangle-recurrence-4", |n| check_triangle_recurrence(4, n)),
        def!("convolution-even", |n| check_t_T_genocchi_convolution(Parity::Even, n)),
        def!("convolution-odd", |n| check_t_T_genocchi_convolution(Parity::Odd, n)),
        def!("factorials-to-eulers-1", |n| check_factorial_to_euler(1, n)),
        def!("factorials-to-eulers-2", |n| check_factorial_to_euler(2, n)),
        def!("factorials-to-eulers-3", |n| check_factorial_to_euler(3, n)),
        def!("factorials-to-eulers-4", |n| check_factorial_to_euler(4, n)),
        def!("final-pair-1", |n| check_final_pair_line(1, n)),
        def!("final-pair-2", |n| check_final_pair_line(2, n)),
        def!("genocchi-number-sum", check_genocchi_number_sum),
        def!("euler-number-sum", check_euler_number_sum),
        def!("kl-s-xp-euler", check_kl_xp_euler),
        def!("kl-c-xptilde-euler", check_kl_xptilde_euler),
        def!("kl-c-xp-half-shift", check_kl_c_xp),
        def!("kl-s-ptilde-half-shift", check_kl_s_ptilde),
    ]
}

/// Checks whose id equals `suite` or starts with it; `"all"` selects everything.
pub fn select(suite: &str) -> Vec<IdentityDef> {
    registry()
        .into_iter()
        .filter(|d| suite == "all" || d.id.starts_with(suite))
        .collect()
}

/// Runs the selected checks in parallel; the output order follows the registry.
pub fn run_suite(suite: &str, nmax: usize) -> Vec<IdentityReport> {
    select(suite).par_iter().map(|d| (d.run)(nmax)).collect()
}

pub fn run_all(nmax: usize) -> Vec<IdentityReport> {
    run_suite("all", nmax)
}

pub fn reports_json(reports: &[IdentityReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = registry().iter().map(|d| d.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), registry().len());
    }

    #[test]
    fn everything_passes_to_twelve() {
        for r in run_all(12) {
            assert!(r.passed(), "{r:?}");
            assert!(r.first_failure.is_none());
        }
    }

    #[test]
    fn merged_reports() {
        assert!(check_triangle_recurrences(8).passed());
        assert!(check_t_T_genocchi_convolutions(8).passed());
        assert!(check_factorials_to_eulers(8).passed());
        assert!(check_final_pair(8).passed());
    }

    #[test]
    fn prefix_selection() {
        let ids: Vec<_> = select("half-shift").iter().map(|d| d.id).collect();
        assert_eq!(ids, ["half-shift-even", "half-shift-odd"]);
        assert!(select("nope").is_empty());
    }

    #[test]
    fn failing_witness_is_minimal() {
        let r = IdentityReport::scan("demo", 10, |n| {
            report::compare(n, "", &(n < 4), &true)
        });
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.first_failure.unwrap().n, 4);
    }

    #[test]
    fn deterministic() {
        assert_eq!(run_all(6), run_all(6));
        let j = reports_json(&run_suite("genocchi-central", 2));
        assert!(j.contains(r#""status": "pass""#));
    }
}
