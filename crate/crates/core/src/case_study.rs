//! The five-agent worked example: agents `a..e` mapped to `0..4`.

use crate::model::{Params, SocialRangeMatrix};

pub const EPSILON: f64 = 0.1;
pub const C: f64 = 0.01;
pub const BETA: f64 = 0.1;
pub const LAMBDA: f64 = 0.2;

/// Off-diagonal signs of the case-study matrix.
pub const SIGNS: [[i8; 5]; 5] = [
    [0, 1, -1, 1, -1],
    [1, 0, 1, -1, -1],
    [-1, 1, 0, -1, 1],
    [1, -1, -1, 0, 1],
    [-1, -1, 1, 1, 0],
];

pub fn social_matrix_with(eps: f64) -> SocialRangeMatrix {
    let signs: Vec<Vec<i8>> = SIGNS.iter().map(|r| r.to_vec()).collect();
    SocialRangeMatrix::from_sign_pattern(eps, &signs).expect("case-study matrix is valid")
}

pub fn social_matrix() -> SocialRangeMatrix {
    social_matrix_with(EPSILON)
}

pub fn params() -> Params {
    Params::new(C, BETA, LAMBDA).expect("case-study parameters are valid")
}
