//! Exact symbolic intersection theory for line congruences in projective
//! 3-space and their focal surfaces.
//!
//! The crate is organized as a small tower:
//!
//! * [`exact`] — arbitrary-precision rationals and sparse multivariate
//!   polynomials in named parameters (the coefficient ring);
//! * [`chow`] — finitely presented graded rings with a degree-top
//!   integration functional, products and projective bundles;
//! * [`sheaf`] — Chern-class calculus: duals, twists, tensor products,
//!   symmetric powers (with symbolic exponent for rank 2), Chern character,
//!   Todd class, Porteous classes;
//! * [`spaces`] — the catalog of varieties and bundles the scenario suite
//!   computes on;
//! * [`hrr`] — Euler characteristics and Hilbert polynomials via
//!   Hirzebruch–Riemann–Roch;
//! * [`oracle`] — independent verification engines: a splitting-principle
//!   oracle for symmetric powers and exact identity certification;
//! * [`scenarios`] — the reproduction suite that recomputes the published
//!   invariants of focal surfaces, compares them to the printed claims, and
//!   assembles a reconciliation ledger for the discrepancies;
//! * [`report`] — text/JSON/CSV rendering of scenario reports and the
//!   drivers behind the `focal` command-line tool.

pub mod chow;
pub mod exact;
pub mod hrr;
pub mod oracle;
pub mod report;
pub mod scenarios;
pub mod sheaf;
pub mod spaces;

pub use exact::{ParamCtx, ParamPoly, Rat};
