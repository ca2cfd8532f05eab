//! The arithmetic invariants of `Q(sqrt(p1 * ... * pr))`: the mod-2
//! Chern-Simons value of each genus character, computed by three
//! independent routes, and the exact integer Dijkgraaf-Witten sum.
//!
//! The three routes are
//!
//! 1. additive: `CS(rho) = sum_{i<j} rho(e_ij) lk2(p_i, p_j)`;
//! 2. multiplicative: `(-1)^CS(rho) = prod (p_j / p_i)` over the pairs
//!    `i < j` where `rho(e_ij) = 1` (the symbol oriented top-down);
//! 3. through the Kummer generator `v = prod_{j in J} p_j / prod_i p_i`
//!    of the quadratic extension cut out by `rho`, which evaluates to the
//!    double sum `sum_{l in J} sum_{i not in J} lk2(p_i, p_l)`.
//!
//! They agree identically (routes 1 and 2 by quadratic reciprocity for
//! primes `1 mod 4`); the equivalence is enforced by tests, never assumed
//! by the code.

use std::fmt;

use crate::bit::Bit;
use crate::error::{Error, Result};
use crate::genus::{enumerate_characters, GenusCharacter};
use crate::linking::{LinkSource, Mod2LinkingMatrix};
use crate::nt::{jacobi, PrimeTuple};
use crate::pell::validate_field;

/// Whether to insist on the unit-norm hypothesis before computing
/// invariants.
///
/// With [`UnitNormPolicy::Enforce`], a field whose fundamental unit has
/// norm +1 is rejected: the narrow and wide class groups then differ and
/// the genus-theoretic formulas are not justified. [`UnitNormPolicy::Override`]
/// computes anyway, for exploration; callers must label such output as
/// outside the supported hypothesis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnitNormPolicy {
    Enforce,
    Override,
}

/// Additive route: `sum_{i<j} rho(e_ij) * L[i][j] mod 2`.
pub fn cs_additive(rho: &GenusCharacter, l: &Mod2LinkingMatrix) -> Result<Bit> {
    if rho.arity() != l.r() {
        return Err(Error::ArityMismatch {
            expected: l.r(),
            got: rho.arity(),
        });
    }
    let mut acc = Bit::ZERO;
    for i in 0..l.r() {
        for j in i + 1..l.r() {
            if rho.eval_on_pair(i, j)?.is_one() {
                acc = acc ^ l.get(i, j);
            }
        }
    }
    Ok(acc)
}

/// Multiplicative route: the product of Legendre symbols `(p_j / p_i)`
/// over pairs `i < j` with `rho(e_ij) = 1`; an empty product gives 0.
pub fn cs_multiplicative(rho: &GenusCharacter, t: &PrimeTuple) -> Result<Bit> {
    if rho.arity() != t.len() {
        return Err(Error::ArityMismatch {
            expected: t.len(),
            got: rho.arity(),
        });
    }
    let ps = t.primes();
    let mut product: i8 = 1;
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            if rho.eval_on_pair(i, j)?.is_one() {
                product *= jacobi(ps[j] as i64, ps[i])?;
            }
        }
    }
    Ok(Bit::from(product == -1))
}

/// Kummer route: with `J` the support of `rho`, the value is
/// `sum_{l in J} sum_{i in {1..r} \ J} lk2(p_i, p_l) mod 2`.
pub fn cs_via_kummer(rho: &GenusCharacter, t: &PrimeTuple) -> Result<Bit> {
    if rho.arity() != t.len() {
        return Err(Error::ArityMismatch {
            expected: t.len(),
            got: rho.arity(),
        });
    }
    let ps = t.primes();
    let support = rho.support();
    let mut acc = Bit::ZERO;
    for &l in &support {
        for i in 0..t.len() {
            if !support.contains(&i) {
                acc = acc ^ crate::nt::lk2(ps[i], ps[l])?;
            }
        }
    }
    Ok(acc)
}

/// The full map `rho -> CS(rho)` over all `2^(r-1)` characters, in
/// canonical character order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsProfile {
    source: LinkSource,
    entries: Vec<(GenusCharacter, Bit)>,
}

impl CsProfile {
    /// Evaluates the additive formula for every character of the matrix's
    /// arity, in canonical order.
    pub fn from_matrix(l: &Mod2LinkingMatrix) -> Self {
        let entries = enumerate_characters(l.r())
            .into_iter()
            .map(|rho| {
                let cs = cs_additive(&rho, l).expect("enumerated arity matches");
                (rho, cs)
            })
            .collect();
        CsProfile {
            source: l.source().clone(),
            entries,
        }
    }

    pub fn source(&self) -> &LinkSource {
        &self.source
    }

    pub fn entries(&self) -> &[(GenusCharacter, Bit)] {
        &self.entries
    }

    pub fn arity(&self) -> usize {
        self.entries[0].0.arity()
    }

    /// The CS bits as a string in canonical character order, e.g. `"0101"`.
    pub fn bits(&self) -> String {
        self.entries.iter().map(|(_, b)| b.to_string()).collect()
    }

    pub fn dw(&self) -> DwValue {
        DwValue::from_bits(self.entries.iter().map(|&(_, b)| b))
    }
}

/// The exact Dijkgraaf-Witten sum `Z = sum_rho (-1)^CS(rho) = N0 - N1`,
/// kept as the pair of counts; never a float, since every summand is +-1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DwValue {
    n_even: u64,
    n_odd: u64,
}

impl DwValue {
    pub fn from_bits(bits: impl IntoIterator<Item = Bit>) -> Self {
        let mut n_even = 0;
        let mut n_odd = 0;
        for b in bits {
            if b.is_zero() {
                n_even += 1;
            } else {
                n_odd += 1;
            }
        }
        DwValue { n_even, n_odd }
    }

    /// Characters with `CS = 0`.
    pub fn n_even(&self) -> u64 {
        self.n_even
    }

    /// Characters with `CS = 1`.
    pub fn n_odd(&self) -> u64 {
        self.n_odd
    }

    /// `Z = N0 - N1`.
    pub fn value(&self) -> i64 {
        self.n_even as i64 - self.n_odd as i64
    }
}

impl fmt::Display for DwValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

fn gate(t: &PrimeTuple, policy: UnitNormPolicy) -> Result<()> {
    if policy == UnitNormPolicy::Enforce {
        let report = validate_field(t)?;
        if !report.narrow_equals_wide() {
            return Err(Error::NormNotMinusOne {
                d: t.discriminant(),
            });
        }
    }
    Ok(())
}

/// The full CS profile of the field defined by `t`, computed additively
/// from the mod-2 linking matrix. Fails with [`Error::NormNotMinusOne`]
/// when the unit-norm hypothesis does not hold, unless overridden.
pub fn cs_profile(t: &PrimeTuple, policy: UnitNormPolicy) -> Result<CsProfile> {
    gate(t, policy)?;
    let matrix = Mod2LinkingMatrix::from_primes(t)?;
    Ok(CsProfile::from_matrix(&matrix))
}

/// The mod-2 arithmetic Dijkgraaf-Witten invariant `Z = N0 - N1` of the
/// field defined by `t`.
pub fn dw_invariant(t: &PrimeTuple, policy: UnitNormPolicy) -> Result<DwValue> {
    Ok(cs_profile(t, policy)?.dw())
}
