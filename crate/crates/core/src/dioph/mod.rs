//! Empirical exponents of individual real matrices.
//!
//! For `M` of shape `m x (m+n)` both norms are sup-norms. Records are the
//! minimizers of `||M q||` over the dyadic shells `2^(j-1) < ||q|| <= 2^j`,
//! found either by exhaustive search or by lattice reduction of a rescaled
//! copy of `{ (M q, q) }`. Exact zero qualities are reported only for
//! rational matrices.

mod fit;
mod flow;
mod lattice;
mod real;
mod search;

pub use fit::{
    dirichlet_check, fit_exponent, fmt_beta, DirichletReport, ExponentEstimate, ShellBound,
    MIN_RECORDS,
};
pub use flow::{flow_grid, flow_shortest, flow_trace, trace_csv, FlowPoint};
pub use lattice::{enumerate_ball, is_lll_reduced, lll_reduce, GsoF64, LllOutput, DEFAULT_DELTA};
pub use real::{
    ln_f64, parse_decimal, real_f64, real_int, real_rational, to_f64, Real, RealEntry, RealMatrix,
    DEFAULT_PRECISION, MIN_PRECISION,
};
pub use search::{
    best_approx, best_approx_exhaustive, best_approx_lll, choose_split, exhaustive_cost,
    exhaustive_with_budget, shell_of, BestApproxRecord, Method, MethodChoice, Split,
    DEFAULT_BUDGET,
};
