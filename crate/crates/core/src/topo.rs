//! Invariants of double covers of the 3-sphere branched over a link.
//!
//! A link enters only through its pairwise linking numbers: the mod-2
//! Chern-Simons value of a character is `sum_{i<j} rho(e_ij) lk(K_i, K_j)
//! mod 2`, and the Dijkgraaf-Witten invariant is the signed count over all
//! characters, exactly as on the arithmetic side. Two-bridge links `B(a, b)`
//! (whose branched double covers are the lens spaces `L(a, b)`) admit a
//! closed form via a floor-function sum, implemented here as well, along
//! with the cross-check that a prime tuple and any link sharing its mod-2
//! linking matrix have identical invariants.

use crate::arith::{cs_profile, CsProfile, DwValue, UnitNormPolicy};
use crate::bit::Bit;
use crate::error::{Error, Result};
use crate::genus::GenusCharacter;
use crate::linking::{IntegerLinkingMatrix, LinkSource, Mod2LinkingMatrix};
use crate::nt::PrimeTuple;

/// `CS(rho) = sum_{i<j} rho(e_ij) * lk(K_i, K_j) mod 2` for a link given
/// by its integer linking matrix.
pub fn topo_cs(rho: &GenusCharacter, l: &IntegerLinkingMatrix) -> Result<Bit> {
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
                acc = acc ^ Bit::from_parity(l.get(i, j).rem_euclid(2) as u64);
            }
        }
    }
    Ok(acc)
}

/// The CS profile of the branched double cover, over all characters in
/// canonical order.
pub fn topo_profile(l: &IntegerLinkingMatrix, source: LinkSource) -> CsProfile {
    CsProfile::from_matrix(&l.reduce_mod2(source))
}

/// The mod-2 Dijkgraaf-Witten invariant `Z = N0 - N1` of the branched
/// double cover.
pub fn topo_dw(l: &IntegerLinkingMatrix) -> DwValue {
    topo_profile(l, LinkSource::Topological(String::new())).dw()
}

/// Parameters of a two-bridge link `B(a, b)`: `0 < a < b`, `b` even,
/// `gcd(a, b) = 1`. Its branched double cover is the lens space `L(a, b)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LensSpaceParams {
    a: u64,
    b: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl LensSpaceParams {
    pub fn new(a: u64, b: u64) -> Result<Self> {
        let reject = |reason| Err(Error::InvalidLensParams { a, b, reason });
        if a == 0 || a >= b {
            return reject("need 0 < a < b");
        }
        if b % 2 != 0 {
            return reject("b must be even");
        }
        if gcd(a, b) != 1 {
            return reject("a and b must be coprime");
        }
        Ok(LensSpaceParams { a, b })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }
}

/// The signed sum `sum_{k=1}^{b/2} (-1)^floor((2k-1) a / b)`. Every
/// summand is +-1, so the absolute value is at most `b/2` and the sum is
/// congruent to `b/2` mod 2.
pub fn lens_signed_sum(params: &LensSpaceParams) -> i64 {
    let (a, b) = (params.a as u128, params.b as u128);
    let mut sum: i64 = 0;
    for k in 1..=b / 2 {
        let floor = (2 * k - 1) * a / b;
        sum += if floor % 2 == 0 { 1 } else { -1 };
    }
    sum
}

/// `CS` of the unique nontrivial character of `L(a, b)`: the parity of the
/// signed sum, computed from the exact sum rather than shortcut.
pub fn lens_cs(params: &LensSpaceParams) -> Bit {
    Bit::from_parity(lens_signed_sum(params).rem_euclid(2) as u64)
}

/// The Dijkgraaf-Witten invariant of `L(a, b)`: 2 when the signed sum is
/// even, 0 when odd. (The two characters contribute `1 + (-1)^CS`.)
pub fn lens_dw(params: &LensSpaceParams) -> DwValue {
    DwValue::from_bits([Bit::ZERO, lens_cs(params)])
}

/// Cross-checks the two sides of the dictionary: the invariants of the
/// field defined by `t` must coincide with those of any link whose mod-2
/// linking matrix equals the tuple's. A failure signals an implementation
/// bug, not a discovery.
pub fn dictionary_check(t: &PrimeTuple, policy: UnitNormPolicy) -> Result<bool> {
    let arith = cs_profile(t, policy)?;
    let topo = induced_topological_profile(t)?;
    let entrywise = arith.entries() == topo.entries();
    Ok(entrywise && arith.dw() == topo.dw())
}

/// Profile of a link realizing the tuple's mod-2 linking data, computed
/// along the topological route.
pub fn induced_topological_profile(t: &PrimeTuple) -> Result<CsProfile> {
    let mod2 = Mod2LinkingMatrix::from_primes(t)?;
    let pairs: Vec<(usize, usize, i64)> = (0..t.len())
        .flat_map(|i| (i + 1..t.len()).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, mod2.get(i, j).value() as i64))
        .collect();
    let l = IntegerLinkingMatrix::from_pairs(t.len(), &pairs)?;
    Ok(topo_profile(
        &l,
        LinkSource::Topological(format!("induced by {t}")),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::enumerate_characters;
    use proptest::prelude::*;

    fn hopf() -> IntegerLinkingMatrix {
        IntegerLinkingMatrix::from_pairs(2, &[(0, 1, 1)]).unwrap()
    }

    #[test]
    fn topo_cs_examples() {
        let chars = enumerate_characters(2);
        assert_eq!(topo_cs(&chars[0], &hopf()).unwrap(), Bit::ZERO);
        assert_eq!(topo_cs(&chars[1], &hopf()).unwrap(), Bit::ONE);

        // r = 3, lk values (0, 1, 1) for pairs (1,2), (2,3), (1,3)
        let l = IntegerLinkingMatrix::from_pairs(3, &[(0, 1, 0), (1, 2, 1), (0, 2, 1)]).unwrap();
        let rho1 = &enumerate_characters(3)[1];
        assert_eq!(topo_cs(rho1, &l).unwrap(), Bit::ONE);
    }

    #[test]
    fn topo_dw_examples() {
        assert_eq!(topo_dw(&hopf()).value(), 0);
        for r in 1..=5 {
            assert_eq!(
                topo_dw(&IntegerLinkingMatrix::zero(r)).value(),
                1 << (r - 1),
                "unlink with {r} components"
            );
        }
        let l = IntegerLinkingMatrix::from_pairs(2, &[(0, 1, 2)]).unwrap();
        assert_eq!(topo_dw(&l).value(), 2);
    }

    #[test]
    fn unlink_attains_the_maximum() {
        // The maximum 2^(r-1) is attained exactly when every character has
        // CS = 0. The unlink always does; a nonzero matrix can too (the
        // all-ones matrix for r = 3 is the 5-13-73 configuration with
        // Z = 4), so vanishing of the matrix is sufficient, not necessary.
        // Exhaustive over all mod-2 matrices with r <= 4.
        for r in 1..=4usize {
            let n_pairs = r * (r - 1) / 2;
            for mask in 0u32..1 << n_pairs {
                let mut pairs = Vec::new();
                let mut idx = 0;
                for i in 0..r {
                    for j in i + 1..r {
                        pairs.push((i, j, (mask >> idx & 1) as i64));
                        idx += 1;
                    }
                }
                let l = IntegerLinkingMatrix::from_pairs(r, &pairs).unwrap();
                let z = topo_dw(&l).value();
                assert!(z <= 1 << (r - 1), "r={r} mask={mask:b}");
                let profile = topo_profile(&l, LinkSource::Topological(String::new()));
                let all_zero = profile.entries().iter().all(|&(_, b)| b.is_zero());
                assert_eq!(z == 1 << (r - 1), all_zero, "r={r} mask={mask:b}");
                if mask == 0 {
                    assert_eq!(z, 1 << (r - 1));
                }
            }
        }
        // the boundary case named above
        let all_ones =
            IntegerLinkingMatrix::from_pairs(3, &[(0, 1, 1), (0, 2, 1), (1, 2, 1)]).unwrap();
        assert_eq!(topo_dw(&all_ones).value(), 4);
    }

    proptest! {
        #[test]
        fn invariants_only_depend_on_mod2_data(
            lk01 in -20i64..20, lk02 in -20i64..20, lk12 in -20i64..20,
            s01 in -5i64..5, s02 in -5i64..5, s12 in -5i64..5,
        ) {
            let l = IntegerLinkingMatrix::from_pairs(
                3, &[(0, 1, lk01), (0, 2, lk02), (1, 2, lk12)]).unwrap();
            let shifted = IntegerLinkingMatrix::from_pairs(
                3,
                &[(0, 1, lk01 + 2 * s01), (0, 2, lk02 + 2 * s02), (1, 2, lk12 + 2 * s12)],
            ).unwrap();
            prop_assert_eq!(topo_dw(&l), topo_dw(&shifted));
            for rho in enumerate_characters(3) {
                prop_assert_eq!(
                    topo_cs(&rho, &l).unwrap(),
                    topo_cs(&rho, &shifted).unwrap()
                );
            }
        }
    }

    #[test]
    fn lens_params_validation() {
        assert!(LensSpaceParams::new(1, 2).is_ok());
        assert!(LensSpaceParams::new(3, 4).is_ok());
        for (a, b) in [(0, 2), (2, 2), (3, 2), (1, 3), (2, 4), (4, 6)] {
            assert!(
                matches!(
                    LensSpaceParams::new(a, b),
                    Err(Error::InvalidLensParams { .. })
                ),
                "accepted ({a}, {b})"
            );
        }
    }

    #[test]
    fn lens_hand_values() {
        let cases = [
            (1u64, 2u64, 1i64, 1u8, 0i64),
            (3, 4, 2, 0, 2),
            (1, 4, 2, 0, 2),
        ];
        for (a, b, sum, cs, z) in cases {
            let p = LensSpaceParams::new(a, b).unwrap();
            assert_eq!(lens_signed_sum(&p), sum, "B({a}, {b}) sum");
            assert_eq!(lens_cs(&p).value(), cs, "B({a}, {b}) cs");
            assert_eq!(lens_dw(&p).value(), z, "B({a}, {b}) z");
        }
    }

    #[test]
    fn lens_sum_bounds_and_parity() {
        for b in (2u64..=300).step_by(2) {
            for a in (1..b).filter(|&a| gcd(a, b) == 1) {
                let p = LensSpaceParams::new(a, b).unwrap();
                let s = lens_signed_sum(&p);
                let half = (b / 2) as i64;
                assert!(s.abs() <= half, "B({a}, {b})");
                assert_eq!(s.rem_euclid(2), half.rem_euclid(2), "B({a}, {b})");
            }
        }
    }

    #[test]
    fn lens_agrees_with_rank_two_matrix() {
        // The lens value must match topo_dw of the r = 2 matrix whose
        // off-diagonal entry is the CS bit of the nontrivial character.
        for b in (2u64..=200).step_by(2) {
            for a in (1..b).filter(|&a| gcd(a, b) == 1) {
                let p = LensSpaceParams::new(a, b).unwrap();
                let lk = lens_cs(&p).value() as i64;
                let l = IntegerLinkingMatrix::from_pairs(2, &[(0, 1, lk)]).unwrap();
                assert_eq!(lens_dw(&p), topo_dw(&l), "B({a}, {b})");
            }
        }
    }

    #[test]
    fn dictionary_on_worked_examples() {
        for ps in [&[5u64, 29, 37][..], &[5, 13, 73], &[5, 13]] {
            let t = PrimeTuple::new(ps.to_vec()).unwrap();
            assert!(dictionary_check(&t, UnitNormPolicy::Enforce).unwrap());
        }
    }

    #[test]
    fn dictionary_respects_the_gate() {
        let t = PrimeTuple::new(vec![5, 41]).unwrap();
        assert_eq!(
            dictionary_check(&t, UnitNormPolicy::Enforce),
            Err(Error::NormNotMinusOne { d: 205 })
        );
        assert!(dictionary_check(&t, UnitNormPolicy::Override).unwrap());
    }
}
