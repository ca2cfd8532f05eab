//! The genus group `T+` and its characters.
//!
//! `T+` is the even-weight subgroup of `(Z/2)^r`; by genus theory it is
//! isomorphic to `Cl+/2Cl+` for `Q(sqrt(p1 * ... * pr))` via the Legendre
//! symbols of ideal norms. Its dual is `(Z/2)^r` modulo the all-ones
//! vector, so every character has a unique coefficient vector with last
//! coordinate zero; that representative is the canonical one used
//! throughout.

use std::fmt;

use crate::bit::Bit;
use crate::error::{Error, Result};
use crate::nt::{jacobi, PrimeTuple};

/// An element of `T+`: a mod-2 vector of even weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusElement {
    bits: Vec<Bit>,
}

impl GenusElement {
    pub fn new(bits: Vec<Bit>) -> Result<Self> {
        let weight: u32 = bits.iter().map(|b| b.value() as u32).sum();
        if weight % 2 != 0 {
            return Err(Error::OddWeight);
        }
        Ok(GenusElement { bits })
    }

    /// The distinguished element with ones exactly in slots `i` and `j`
    /// (0-based, `i < j < r`).
    pub fn pair(i: usize, j: usize, r: usize) -> Result<Self> {
        if i >= j || j >= r {
            return Err(Error::IndexOutOfRange { i, j, arity: r });
        }
        let mut bits = vec![Bit::ZERO; r];
        bits[i] = Bit::ONE;
        bits[j] = Bit::ONE;
        Ok(GenusElement { bits })
    }

    /// Basis element `b_i` with ones in slots `i` and `r - 1`, for
    /// `i < r - 1`; the `b_i` form a basis of `T+`.
    pub fn basis(i: usize, r: usize) -> Result<Self> {
        Self::pair(i, r - 1, r)
    }

    pub fn bits(&self) -> &[Bit] {
        &self.bits
    }

    pub fn arity(&self) -> usize {
        self.bits.len()
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        if self.arity() != other.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: other.arity(),
            });
        }
        Ok(GenusElement {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| a ^ b)
                .collect(),
        })
    }
}

/// A character of `T+`, stored by its canonical coefficient vector
/// `(c1, ..., cr)` with `cr = 0`; it acts by `x -> sum_i c_i x_i mod 2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GenusCharacter {
    coeffs: Vec<Bit>,
}

impl GenusCharacter {
    /// Canonicalizes an arbitrary coefficient vector: adding the all-ones
    /// vector does not change the functional on `T+`, so a vector with
    /// last coordinate one is flipped wholesale.
    pub fn new(coeffs: Vec<Bit>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyTuple);
        }
        let coeffs = if coeffs.last() == Some(&Bit::ONE) {
            coeffs.into_iter().map(|b| b ^ Bit::ONE).collect()
        } else {
            coeffs
        };
        Ok(GenusCharacter { coeffs })
    }

    /// Character with support `J` among the first `r - 1` coordinates
    /// (0-based indices `< r - 1`).
    pub fn from_support(support: &[usize], r: usize) -> Result<Self> {
        let mut coeffs = vec![Bit::ZERO; r];
        for &i in support {
            if i + 1 >= r {
                return Err(Error::IndexOutOfRange { i, j: i, arity: r });
            }
            coeffs[i] = Bit::ONE;
        }
        Ok(GenusCharacter { coeffs })
    }

    pub fn coeffs(&self) -> &[Bit] {
        &self.coeffs
    }

    pub fn arity(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.coeffs.iter().all(|b| b.is_zero())
    }

    /// Evaluates the character: `sum_i c_i x_i mod 2`.
    pub fn eval(&self, x: &GenusElement) -> Result<Bit> {
        if x.arity() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: x.arity(),
            });
        }
        let sum: u32 = self
            .coeffs
            .iter()
            .zip(x.bits())
            .map(|(&c, &x)| (c.value() & x.value()) as u32)
            .sum();
        Ok(Bit::from_parity(sum as u64))
    }

    /// Value on the distinguished element with ones in slots `i` and `j`
    /// (0-based, `i < j`): simply `c_i + c_j mod 2`.
    pub fn eval_on_pair(&self, i: usize, j: usize) -> Result<Bit> {
        if i >= j || j >= self.arity() {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                arity: self.arity(),
            });
        }
        Ok(self.coeffs[i] ^ self.coeffs[j])
    }

    /// The support `J = { i < r - 1 : c_i = 1 }` (0-based). The character
    /// takes value 1 on a pair element iff exactly one index lies in `J`.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .take(self.arity() - 1)
            .enumerate()
            .filter_map(|(i, b)| b.is_one().then_some(i))
            .collect()
    }

    /// Compact coefficient string, e.g. `"110"`.
    pub fn coeff_string(&self) -> String {
        self.coeffs.iter().map(|b| b.to_string()).collect()
    }
}

impl fmt::Display for GenusCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeff_string())
    }
}

impl fmt::Debug for GenusCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenusCharacter({})", self.coeff_string())
    }
}

/// All `2^(r-1)` characters of `T+`, in canonical order: support sets
/// enumerated lexicographically as increasing index sequences
/// ({}, {1}, {1,2}, {1,2,3}, {1,3}, {2}, ...). The trivial character comes
/// first, and for `r = 3` the order matches the usual listing
/// `rho_0, rho_1, rho_2, rho_3` by value tables.
pub fn enumerate_characters(r: usize) -> Vec<GenusCharacter> {
    assert!(r >= 1, "arity must be at least 1");
    let mut supports = Vec::with_capacity(1 << (r - 1));
    let mut current = Vec::new();
    fn grow(start: usize, n: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(current.clone());
        for i in start..n {
            current.push(i);
            grow(i + 1, n, current, out);
            current.pop();
        }
    }
    grow(0, r - 1, &mut current, &mut supports);
    supports
        .iter()
        .map(|s| GenusCharacter::from_support(s, r).expect("support is in range"))
        .collect()
}

/// Image of an integer under the genus map: the vector of Legendre symbols
/// `((m/p1), ..., (m/pr))` written additively (bit 1 for symbol -1),
/// together with whether it lands in `T+`.
pub fn genus_vector(m: u64, t: &PrimeTuple) -> Result<(Vec<Bit>, bool)> {
    let mut bits = Vec::with_capacity(t.len());
    for &p in t.primes() {
        let s = jacobi((m % p) as i64, p)?;
        if s == 0 {
            return Err(Error::NotCoprime {
                m,
                d: t.discriminant(),
            });
        }
        bits.push(Bit::from(s == -1));
    }
    let weight: u32 = bits.iter().map(|b| b.value() as u32).sum();
    Ok((bits, weight % 2 == 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn bits(s: &str) -> Vec<Bit> {
        s.chars().map(|c| Bit::from(c == '1')).collect()
    }

    fn chr(s: &str) -> GenusCharacter {
        GenusCharacter::new(bits(s)).unwrap()
    }

    fn elt(s: &str) -> GenusElement {
        GenusElement::new(bits(s)).unwrap()
    }

    #[test]
    fn element_membership() {
        assert!(GenusElement::new(bits("110")).is_ok());
        assert_eq!(GenusElement::new(bits("100")), Err(Error::OddWeight));
        assert_eq!(GenusElement::pair(0, 1, 3).unwrap(), elt("110"));
        assert_eq!(GenusElement::basis(0, 3).unwrap(), elt("101"));
        assert!(matches!(
            GenusElement::pair(1, 1, 3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn canonical_representative() {
        // (0,1,1) and (1,0,0) induce the same functional on T+.
        assert_eq!(chr("011"), chr("100"));
        assert_eq!(chr("011").coeff_string(), "100");
        assert_eq!(chr("111").coeff_string(), "000");
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_characters(1), vec![chr("0")]);
        assert_eq!(enumerate_characters(2), vec![chr("00"), chr("10")]);
        let r3: Vec<String> = enumerate_characters(3)
            .iter()
            .map(|c| c.coeff_string())
            .collect();
        assert_eq!(r3, vec!["000", "100", "110", "010"]);
        for r in 1..=10 {
            let chars = enumerate_characters(r);
            assert_eq!(chars.len(), 1 << (r - 1));
            assert!(chars[0].is_trivial());
            // all canonical and pairwise distinct
            for c in &chars {
                assert!(c.coeffs().last().unwrap().is_zero());
            }
        }
    }

    #[test]
    fn rank_three_value_tables() {
        // rho_0 .. rho_3 on the elements (1,1,0), (0,1,1), (1,0,1)
        let rho: Vec<GenusCharacter> = enumerate_characters(3);
        let e12 = elt("110");
        let e23 = elt("011");
        let e13 = elt("101");
        let table: Vec<[u8; 3]> = rho
            .iter()
            .map(|c| {
                [
                    c.eval(&e12).unwrap().value(),
                    c.eval(&e23).unwrap().value(),
                    c.eval(&e13).unwrap().value(),
                ]
            })
            .collect();
        assert_eq!(
            table,
            vec![[0, 0, 0], [1, 0, 1], [0, 1, 1], [1, 1, 0]],
            "rho_0..rho_3 value tables"
        );
    }

    #[test]
    fn eval_on_pair_matches_eval() {
        let rho3 = chr("010");
        assert_eq!(rho3.eval_on_pair(1, 2).unwrap(), Bit::ONE);
        let rho2 = chr("110");
        assert_eq!(rho2.eval_on_pair(0, 2).unwrap(), Bit::ONE);
        assert_eq!(rho2.eval_on_pair(0, 1).unwrap(), Bit::ZERO);
        let trivial = chr("000");
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            assert_eq!(trivial.eval_on_pair(i, j).unwrap(), Bit::ZERO);
        }
        assert!(matches!(
            rho2.eval_on_pair(2, 2),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            rho2.eval_on_pair(0, 5),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn support_sets() {
        assert_eq!(chr("000").support(), Vec::<usize>::new());
        assert_eq!(chr("100").support(), vec![0]);
        assert_eq!(chr("110").support(), vec![0, 1]);
    }

    #[test]
    fn basis_consistency() {
        // eval(rho, b_i) = c_i, and the pair values decompose over the basis.
        for r in 2..=6 {
            for rho in enumerate_characters(r) {
                for i in 0..r - 1 {
                    let b = GenusElement::basis(i, r).unwrap();
                    assert_eq!(rho.eval(&b).unwrap(), rho.coeffs()[i]);
                }
                for i in 0..r {
                    for j in i + 1..r {
                        let via_pair = rho.eval_on_pair(i, j).unwrap();
                        let expected = if j == r - 1 {
                            rho.eval(&GenusElement::basis(i, r).unwrap()).unwrap()
                        } else {
                            rho.eval(&GenusElement::basis(i, r).unwrap()).unwrap()
                                ^ rho.eval(&GenusElement::basis(j, r).unwrap()).unwrap()
                        };
                        assert_eq!(via_pair, expected, "r={r} i={i} j={j}");
                    }
                }
            }
        }
    }

    #[test]
    fn characters_are_separated_by_pairs() {
        for r in 2..=6 {
            let chars = enumerate_characters(r);
            for (a, x) in chars.iter().enumerate() {
                for y in &chars[a + 1..] {
                    let mut differ = false;
                    for i in 0..r {
                        for j in i + 1..r {
                            differ |=
                                x.eval_on_pair(i, j).unwrap() != y.eval_on_pair(i, j).unwrap();
                        }
                    }
                    assert!(differ, "characters {x} and {y} agree on all pairs");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn characters_are_linear(r in 2usize..8, seed_x in any::<u64>(), seed_y in any::<u64>(), pick in any::<u16>()) {
            // random even-weight vectors via parity-fixed low bits of the seeds
            let make = |seed: u64| {
                let mut v: Vec<Bit> = (0..r).map(|i| Bit::from(seed >> i & 1 == 1)).collect();
                let w: u32 = v.iter().map(|b| b.value() as u32).sum();
                if w % 2 == 1 { let last = v[r - 1]; v[r - 1] = last ^ Bit::ONE; }
                GenusElement::new(v).unwrap()
            };
            let x = make(seed_x);
            let y = make(seed_y);
            let chars = enumerate_characters(r);
            let rho = &chars[pick as usize % chars.len()];
            let lhs = rho.eval(&x.xor(&y).unwrap()).unwrap();
            let rhs = rho.eval(&x).unwrap() ^ rho.eval(&y).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn genus_vector_examples() {
        let t = PrimeTuple::new(vec![5, 13]).unwrap();
        assert_eq!(genus_vector(1, &t).unwrap(), (bits("00"), true));
        assert_eq!(genus_vector(2, &t).unwrap(), (bits("11"), true));

        let t = PrimeTuple::new(vec![5, 29]).unwrap();
        assert_eq!(genus_vector(2, &t).unwrap(), (bits("11"), true));

        // a residue landing outside T+
        let t = PrimeTuple::new(vec![5, 13]).unwrap();
        let (v, in_t_plus) = genus_vector(3, &t).unwrap();
        assert_eq!(v, bits("10")); // (3/5) = -1, (3/13) = +1
        assert!(!in_t_plus);

        assert_eq!(
            genus_vector(10, &t),
            Err(Error::NotCoprime { m: 10, d: 65 })
        );
    }

    #[test]
    fn arity_mismatch_is_reported() {
        let rho = chr("10");
        let x = elt("110");
        assert_eq!(
            rho.eval(&x),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 3
            })
        );
    }
}
