//! Bilateral link addition and deletion conditions.
//!
//! A link `⟨ij⟩` is added only when both endpoints strictly gain perceived
//! utility, and deleted only when both strictly gain by removing it. Agents
//! other than `i` and `j` keep their degree, so only the two endpoint terms
//! of `ũ` change; the conditions therefore depend on the pair's degrees
//! alone. Comparisons are strict with no tolerance: a tie means no move.
//!
//! Two algebraically equivalent forms are provided. The delta form sums
//! weighted raw-utility changes; the inequality form compares
//! `fᵢᵢλ^nᵢ + fᵢⱼλ^nⱼ` against `(fᵢᵢ + fᵢⱼ)·c/((1-λ)β)` (times `λ` for
//! deletion). Decisions use the delta form.

use crate::model::{Params, SocialRangeMatrix};

/// Weights the conditions read from the matrix for the pair `(i, j)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairWeights {
    pub self_i: f64,
    pub self_j: f64,
    pub mutual: f64,
}

impl PairWeights {
    pub fn of(matrix: &SocialRangeMatrix, i: usize, j: usize) -> Self {
        PairWeights {
            self_i: matrix.get(i, i),
            self_j: matrix.get(j, j),
            mutual: matrix.get(i, j),
        }
    }
}

/// Signed slack of each endpoint's condition; the move happens iff both
/// are strictly positive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Margins {
    pub i: f64,
    pub j: f64,
}

impl Margins {
    pub fn both_positive(&self) -> bool {
        self.i > 0.0 && self.j > 0.0
    }

    pub fn min_abs(&self) -> f64 {
        self.i.abs().min(self.j.abs())
    }
}

/// Perceived-utility gains `fᵢᵢΔuᵢ + fᵢⱼΔuⱼ` and `fⱼⱼΔuⱼ + fᵢⱼΔuᵢ` of adding
/// the link when the endpoints currently have degrees `(ni, nj)`.
pub fn add_deltas(w: PairWeights, p: &Params, ni: usize, nj: usize) -> Margins {
    let du_i = p.marginal_add(ni);
    let du_j = p.marginal_add(nj);
    Margins {
        i: w.self_i * du_i + w.mutual * du_j,
        j: w.self_j * du_j + w.mutual * du_i,
    }
}

/// Perceived-utility gains of deleting the link when the endpoints have
/// degrees `(ni, nj)` with the link present (both at least 1).
pub fn delete_deltas(w: PairWeights, p: &Params, ni: usize, nj: usize) -> Margins {
    let du_i = p.marginal_delete(ni);
    let du_j = p.marginal_delete(nj);
    Margins {
        i: w.self_i * du_i + w.mutual * du_j,
        j: w.self_j * du_j + w.mutual * du_i,
    }
}

/// `LHS - RHS` of the addition inequalities
/// `fᵢᵢλ^nᵢ + fᵢⱼλ^nⱼ > (fᵢᵢ + fᵢⱼ)·c/((1-λ)β)` and its `i ↔ j` mirror.
pub fn add_inequality(w: PairWeights, p: &Params, ni: usize, nj: usize) -> Margins {
    let k = p.cost_benefit_factor();
    let (li, lj) = (p.lambda_pow(ni), p.lambda_pow(nj));
    Margins {
        i: (w.self_i * li + w.mutual * lj) - (w.self_i + w.mutual) * k,
        j: (w.self_j * lj + w.mutual * li) - (w.self_j + w.mutual) * k,
    }
}

/// `RHS - LHS` of the deletion inequalities
/// `fᵢᵢλ^nᵢ + fᵢⱼλ^nⱼ < (fᵢᵢ + fᵢⱼ)·cλ/((1-λ)β)` and its mirror, so that a
/// positive margin means the condition holds.
pub fn delete_inequality(w: PairWeights, p: &Params, ni: usize, nj: usize) -> Margins {
    let k = p.cost_benefit_factor() * p.lambda();
    let (li, lj) = (p.lambda_pow(ni), p.lambda_pow(nj));
    Margins {
        i: (w.self_i + w.mutual) * k - (w.self_i * li + w.mutual * lj),
        j: (w.self_j + w.mutual) * k - (w.self_j * lj + w.mutual * li),
    }
}

/// Whether both endpoints strictly gain from adding the link at degrees
/// `(ni, nj)`.
pub fn add_holds(w: PairWeights, p: &Params, ni: usize, nj: usize) -> bool {
    add_deltas(w, p, ni, nj).both_positive()
}

/// Whether both endpoints strictly gain from deleting the link at degrees
/// `(ni, nj)` (measured with the link present).
pub fn delete_holds(w: PairWeights, p: &Params, ni: usize, nj: usize) -> bool {
    delete_deltas(w, p, ni, nj).both_positive()
}
