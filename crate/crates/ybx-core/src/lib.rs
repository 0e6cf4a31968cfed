//! Finite involutive nondegenerate set-theoretic solutions of the
//! Yang-Baxter equation and the combinatorics of their quadratic algebras.
//!
//! The crate is organized around a pipeline:
//!
//! * [`solution`] — the input object `(X, r)`: an order `n` together with a
//!   bijection of `{1..n}²`, plus validation of the defining properties
//!   (involutive, nondegenerate, braided, square-free).
//! * [`word`] — words over the generators, degree-lexicographic order,
//!   orbits of the position-wise maps `r^{i,i+1}`, orbit-minimum normal
//!   forms, and the extended left/right actions of the braided monoid.
//! * [`rewrite`] — binomial rewriting: oriented relations, reduction,
//!   degree-bounded completion to a reduced Groebner basis, and PBW /
//!   skew-polynomial-shape detection.
//! * [`veronese`] — the normalized d-Veronese solution on normal monomials
//!   of length `d`, the quadratic presentation of the d-Veronese subalgebra,
//!   and the generators of the Veronese-map kernel.
//! * [`catalog`] — exhaustive enumeration of small solutions and the JSON
//!   file format.
//!
//! With the default `parallel` feature the heavy sweeps (braid checks,
//! Veronese tables, catalog search) run on rayon; without it every code
//! path falls back to plain sequential iterators.

pub mod catalog;
#[cfg(test)]
mod fixtures;
mod par;
pub mod rewrite;
pub mod solution;
pub mod veronese;
pub mod word;

pub use solution::{Letter, Solution, SolutionError, ValidationReport};
pub use word::{GuardExceeded, Limits, OrbitReport, Word};
