//! Upper and lower bounds on `A_q(n, d, w)` in exact arithmetic, generic
//! over the integer [`Scalar`].

mod arith;
mod chain;
mod exact;
mod formulas;
mod report;
mod value;

pub use arith::Scalar;
pub use chain::chain_upper;
pub use exact::{exact_value, is_odd_prime_power, is_power_of_two, n43_range, prime_power};
pub use formulas::{
    asymptotic_n43, b_value, corollary3_v, delta_n4, delta_n5, epsilon_n5, exact_2w, expected_conflicts_bound,
    gv_asymptotic, gv_lower, johnson_schonheim, large_q_regime, lemma15_upper, n32_exact, n43_upper, power_upper,
    prob_lower, prob_parameters, sphere_size, svanstrom_length, svanstrom_weight, u_bound, u_correction,
    JohnsonSchonheim, LargeQRegime,
};
pub use report::{bound_report, bound_report_with, BoundParams, BoundReport, ReportOptions};
pub use value::{BoundKind, BoundValue};
