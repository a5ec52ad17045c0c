//! The fragment of R^i ind_B^G used here: Kempf vanishing, the −1 rule, and
//! one simple reflection for R^1.

use crate::{RootSystem, Weight};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CohomologyValue {
    Zero,
    /// ∇(λ) with λ dominant.
    Costandard(Weight),
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyResult {
    pub degree: u32,
    pub value: CohomologyValue,
}

impl fmt::Display for CohomologyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyValue::Zero => write!(f, "0"),
            CohomologyValue::Costandard(w) => write!(f, "∇{w}"),
            CohomologyValue::Unknown => write!(f, "unknown"),
        }
    }
}

/// Which rule decided a weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Dominant,
    MinusOne,
    Reflection { simple: usize, image: Weight },
    ReflectionToWall { simple: usize, image: Weight },
    Undecided,
}

pub fn classify(rs: &RootSystem, sigma: Weight) -> Rule {
    if sigma.is_dominant() {
        return Rule::Dominant;
    }
    if (0..rs.rank).any(|i| sigma[i] == -1) {
        return Rule::MinusOne;
    }
    let low: Vec<usize> = (0..rs.rank).filter(|&i| sigma[i] <= -2).collect();
    if low.len() == 1 {
        let i = low[0];
        let image = rs.dot_reflect(rs.positive_root_index(rs.simple_roots[i]).unwrap(), sigma);
        if image.is_dominant() {
            return Rule::Reflection { simple: i, image };
        }
        if (0..rs.rank).any(|k| image[k] == -1) {
            return Rule::ReflectionToWall { simple: i, image };
        }
    }
    Rule::Undecided
}

/// R^i ind_B^G σ where the fragment decides it, `Unknown` otherwise.
pub fn r_ind(rs: &RootSystem, sigma: Weight, degree: u32) -> CohomologyResult {
    use CohomologyValue::*;
    let value = match classify(rs, sigma) {
        Rule::Dominant => if degree == 0 { Costandard(sigma) } else { Zero },
        Rule::MinusOne => Zero,
        Rule::Reflection { image, .. } => match degree {
            1 => Costandard(image),
            0 | 2 => Zero,
            _ => Unknown,
        },
        Rule::ReflectionToWall { .. } => if degree <= 2 { Zero } else { Unknown },
        Rule::Undecided => Unknown,
    };
    CohomologyResult { degree, value }
}

/// False guarantees R^1 ind σ = 0: no simple root pairs to ≤ −2.
pub fn r1_nonvanishing_possible(rs: &RootSystem, sigma: Weight) -> bool {
    (0..rs.rank).any(|i| sigma[i] <= -2)
}
