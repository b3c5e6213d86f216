//! Exact arithmetic for the delta constant ledger: rationals with power-of-
//! two radicals, delta-power expressions, interval evaluation, and machine
//! certification of the inequality chain.

mod chain;
mod expr;
mod interval;
mod poly;
mod radical;

pub use chain::{
    compare_constants, delta_chain, final_bound_coeff, theorem_delta_max, verify_inequalities,
    ChainEntry, ChainReport, GuardReport, Method,
};
pub use expr::{numeric_eval, ConstantsError, DeltaExpr, Term};
pub use interval::{nth_root_interval, RatInterval};
pub use poly::RatPoly;
pub use radical::Coeff;
