//! Linking matrices, the shared data between the arithmetic and topological
//! sides: a set of primes and a link both reduce to the symmetric matrix of
//! pairwise mod-2 linking numbers.

use serde::Deserialize;

use crate::bit::Bit;
use crate::error::{Error, Result};
use crate::nt::{lk2, PrimeTuple};

/// Where a linking matrix (or a profile computed from one) came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinkSource {
    /// Pairwise mod-2 linking numbers of the primes of a tuple.
    Arithmetic(PrimeTuple),
    /// A link given by its linking numbers, identified by a label.
    Topological(String),
}

/// Symmetric matrix over `Z/2` of pairwise mod-2 linking numbers, with zero
/// diagonal (self-linking is never used).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mod2LinkingMatrix {
    r: usize,
    entries: Vec<Bit>,
    source: LinkSource,
}

impl Mod2LinkingMatrix {
    /// Assembles all pairwise `lk2(p_i, p_j)` of a prime tuple, evaluating
    /// the symbol canonically as `(p_i / p_j)` with `i < j` and mirroring.
    pub fn from_primes(t: &PrimeTuple) -> Result<Self> {
        let r = t.len();
        let ps = t.primes();
        let mut entries = vec![Bit::ZERO; r * r];
        for i in 0..r {
            for j in i + 1..r {
                let b = lk2(ps[i], ps[j])?;
                entries[i * r + j] = b;
                entries[j * r + i] = b;
            }
        }
        Ok(Mod2LinkingMatrix {
            r,
            entries,
            source: LinkSource::Arithmetic(t.clone()),
        })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize) -> Bit {
        assert!(i < self.r && j < self.r, "index out of range");
        self.entries[i * self.r + j]
    }

    pub fn source(&self) -> &LinkSource {
        &self.source
    }

    /// Upper-triangle entries in row-major pair order (0,1), (0,2), ...
    pub fn upper_triangle(&self) -> Vec<Bit> {
        let mut out = Vec::with_capacity(self.r * (self.r - 1) / 2);
        for i in 0..self.r {
            for j in i + 1..self.r {
                out.push(self.get(i, j));
            }
        }
        out
    }
}

/// Symmetric integer matrix of pairwise linking numbers of a tame link;
/// the diagonal (framing) is ignored and stored as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerLinkingMatrix {
    r: usize,
    entries: Vec<i64>,
}

impl IntegerLinkingMatrix {
    /// The r-component unlink.
    pub fn zero(r: usize) -> Self {
        IntegerLinkingMatrix {
            r,
            entries: vec![0; r * r],
        }
    }

    /// Builds a matrix from 0-based upper-triangle pairs `(i, j, lk)` with
    /// `i < j`; unlisted pairs are zero, duplicates are rejected.
    pub fn from_pairs(r: usize, pairs: &[(usize, usize, i64)]) -> Result<Self> {
        let mut m = Self::zero(r);
        let mut seen = vec![false; r * r];
        for &(i, j, v) in pairs {
            if i >= j || j >= r {
                return Err(Error::IndexOutOfRange { i, j, arity: r });
            }
            if seen[i * r + j] {
                return Err(Error::MatrixFormat(format!(
                    "duplicate entry for pair ({i}, {j})"
                )));
            }
            seen[i * r + j] = true;
            m.entries[i * r + j] = v;
            m.entries[j * r + i] = v;
        }
        Ok(m)
    }

    /// Builds a matrix from full rows, checking symmetry; diagonal entries
    /// are discarded.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != r {
                return Err(Error::ArityMismatch {
                    expected: r,
                    got: row.len(),
                });
            }
            for j in 0..r {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NonSymmetric { i, j });
                }
            }
        }
        let mut m = Self::zero(r);
        for i in 0..r {
            for j in 0..r {
                if i != j {
                    m.entries[i * r + j] = rows[i][j];
                }
            }
        }
        Ok(m)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        assert!(i < self.r && j < self.r, "index out of range");
        self.entries[i * self.r + j]
    }

    /// Reduction mod 2, tagged with the origin of the data.
    pub fn reduce_mod2(&self, source: LinkSource) -> Mod2LinkingMatrix {
        Mod2LinkingMatrix {
            r: self.r,
            entries: self
                .entries
                .iter()
                .map(|&v| Bit::from_parity(v.rem_euclid(2) as u64))
                .collect(),
            source,
        }
    }

    /// 0-based upper-triangle triples `(i, j, lk)` with `i < j`.
    pub fn pairs(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 0..self.r {
            for j in i + 1..self.r {
                out.push((i, j, self.get(i, j)));
            }
        }
        out
    }
}

/// On-disk JSON form of a linking matrix: `{"r": N, "lk": [[i, j, value],
/// ...]}` with 1-based pairs, `i < j`; unlisted pairs default to zero and
/// duplicate pairs are an error.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LinkingMatrixFile {
    r: usize,
    lk: Vec<(usize, usize, i64)>,
}

impl IntegerLinkingMatrix {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let file: LinkingMatrixFile =
            serde_json::from_str(s).map_err(|e| Error::MatrixFormat(e.to_string()))?;
        if file.r == 0 {
            return Err(Error::MatrixFormat("r must be at least 1".into()));
        }
        let mut pairs = Vec::with_capacity(file.lk.len());
        for &(i, j, v) in &file.lk {
            if i == 0 || j == 0 || i >= j || j > file.r {
                return Err(Error::MatrixFormat(format!(
                    "pair ({i}, {j}) out of range: need 1 <= i < j <= {}",
                    file.r
                )));
            }
            if file
                .lk
                .iter()
                .filter(|&&(a, b, _)| (a, b) == (i, j))
                .count()
                > 1
            {
                return Err(Error::MatrixFormat(format!(
                    "duplicate entry for pair ({i}, {j})"
                )));
            }
            pairs.push((i - 1, j - 1, v));
        }
        Self::from_pairs(file.r, &pairs)
    }
}
