//! Exact arithmetic for mod-2 Chern-Simons functionals and Dijkgraaf-Witten
//! invariants of real quadratic fields `Q(sqrt(p1 * ... * pr))` with every
//! `pi = 1 mod 4`, together with their topological counterparts for double
//! covers of the 3-sphere branched over a link.
//!
//! Everything is computed in exact integer arithmetic; no floating point
//! appears anywhere in the pipeline.
//!
//! The crate is organised along the two sides of the knots/primes analogy:
//!
//! - [`nt`] — Jacobi/Legendre symbols, deterministic 64-bit primality,
//!   mod-2 linking numbers of primes, and the explicit 3-cocycle on `Z/n`.
//! - [`pell`] — continued fractions of `sqrt(d)`, minimal Pell solutions,
//!   and the norm of the fundamental unit (the hypothesis gate for the
//!   arithmetic formulas).
//! - [`genus`] — the genus group `T+` of even-weight mod-2 vectors and its
//!   character group.
//! - [`linking`] — mod-2 and integer linking matrices, shared by both sides.
//! - [`arith`] — the arithmetic invariants: `CS` by three independent routes
//!   and the exact integer `Z = N0 - N1`.
//! - [`topo`] — the topological invariants: `CS`/`Z` from a linking matrix,
//!   the lens-space closed form, and the arithmetic/topological cross-check.

pub mod arith;
pub mod bit;
pub mod error;
pub mod genus;
pub mod linking;
pub mod nt;
pub mod pell;
pub mod topo;

pub use arith::{cs_additive, cs_multiplicative, cs_profile, cs_via_kummer, dw_invariant};
pub use arith::{CsProfile, DwValue, UnitNormPolicy};
pub use bit::Bit;
pub use error::{Error, Result};
pub use genus::{enumerate_characters, genus_vector, GenusCharacter, GenusElement};
pub use linking::{IntegerLinkingMatrix, LinkSource, Mod2LinkingMatrix};
pub use nt::{alpha_cochain, is_prime, jacobi, lk2, PrimeTuple};
pub use pell::{cf_sqrt, fundamental_pell_solution, fundamental_unit_norm, validate_field};
pub use pell::{ContinuedFraction, FieldReport, PellSolution};
pub use topo::{dictionary_check, induced_topological_profile, lens_cs, lens_dw};
pub use topo::{lens_signed_sum, topo_cs, topo_dw, topo_profile, LensSpaceParams};
