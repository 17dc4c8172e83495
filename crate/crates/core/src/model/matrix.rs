use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::MAX_AGENTS;

/// How two agents regard each other, read off the sign of `fᵢⱼ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Friend,
    Enemy,
    Neutral,
}

impl Relation {
    pub fn of(weight: f64) -> Self {
        if weight > 0.0 {
            Relation::Friend
        } else if weight < 0.0 {
            Relation::Enemy
        } else {
            Relation::Neutral
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Friend => "friend",
            Relation::Enemy => "enemy",
            Relation::Neutral => "neutral",
        }
    }
}

/// Symmetric social range matrix `F`. Entry `fᵢⱼ` weights agent `j`'s raw
/// utility inside agent `i`'s perceived utility; the diagonal is strictly
/// positive.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SocialRangeMatrix {
    n: usize,
    #[serde(rename = "rows", serialize_with = "serialize_rows")]
    data: Vec<f64>,
}

fn serialize_rows<S: serde::Serializer>(data: &[f64], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let n = (data.len() as f64).sqrt() as usize;
    let mut seq = s.serialize_seq(Some(n))?;
    for row in data.chunks(n.max(1)) {
        seq.serialize_element(row)?;
    }
    seq.end()
}

impl SocialRangeMatrix {
    /// Validates squareness, finiteness, symmetry and a positive diagonal.
    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_AGENTS {
            return Err(Error::InvalidMatrix(format!(
                "{n} rows; expected between 1 and {MAX_AGENTS}"
            )));
        }
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries; expected {n}",
                    row.len()
                )));
            }
            if let Some(j) = row.iter().position(|v| !v.is_finite()) {
                return Err(Error::InvalidMatrix(format!(
                    "entry [{i}][{j}] is not finite"
                )));
            }
            data.extend(row);
        }
        let matrix = SocialRangeMatrix { n, data };
        for i in 0..n {
            if matrix.get(i, i) <= 0.0 {
                return Err(Error::InvalidMatrix(format!(
                    "diagonal entry [{i}][{i}] = {} must be positive",
                    matrix.get(i, i)
                )));
            }
            for j in i + 1..n {
                if matrix.get(i, j) != matrix.get(j, i) {
                    return Err(Error::InvalidMatrix(format!(
                        "asymmetric: [{i}][{j}] = {} but [{j}][{i}] = {}",
                        matrix.get(i, j),
                        matrix.get(j, i)
                    )));
                }
            }
        }
        Ok(matrix)
    }

    /// Like [`from_rows`](Self::from_rows), additionally requiring
    /// `fᵢᵢ < |fᵢⱼ|` for every nonzero off-diagonal entry.
    pub fn from_rows_strict(rows: Vec<Vec<f64>>) -> Result<Self> {
        let matrix = Self::from_rows(rows)?;
        matrix.check_strict_dominance()?;
        Ok(matrix)
    }

    /// Every pair are friends with weight 1; each agent weights itself `eps`.
    pub fn friends_all(n: usize, eps: f64) -> Result<Self> {
        Self::from_rows(
            (0..n)
                .map(|i| (0..n).map(|j| if i == j { eps } else { 1.0 }).collect())
                .collect(),
        )
    }

    /// Diagonal `eps`, off-diagonal entries `+1`, `-1` or `0` by sign.
    pub fn from_sign_pattern(eps: f64, signs: &[Vec<i8>]) -> Result<Self> {
        let rows = signs
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &s)| if i == j { eps } else { f64::from(s.signum()) })
                    .collect()
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn n_agents(&self) -> usize {
        self.n
    }

    /// `fᵢⱼ`. Panics if either index is out of range.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of range");
        self.data[i * self.n + j]
    }

    pub fn relation(&self, i: usize, j: usize) -> Relation {
        Relation::of(self.get(i, j))
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.data.chunks(self.n).map(<[f64]>::to_vec).collect()
    }

    pub fn check_strict_dominance(&self) -> Result<()> {
        for i in 0..self.n {
            for j in (0..self.n).filter(|&j| j != i) {
                let f = self.get(i, j);
                if f != 0.0 && self.get(i, i) >= f.abs() {
                    return Err(Error::InvalidMatrix(format!(
                        "strict dominance: [{i}][{i}] = {} is not below |[{i}][{j}]| = {}",
                        self.get(i, i),
                        f.abs()
                    )));
                }
            }
        }
        Ok(())
    }

    /// Applies the relabelling `agent i -> perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation of length {} for {} agents",
                perm.len(),
                self.n
            )));
        }
        let mut rows = vec![vec![0.0; self.n]; self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                rows[perm[i]][perm[j]] = self.get(i, j);
            }
        }
        Self::from_rows(rows)
    }
}
