//! Integral weights in fundamental-weight coordinates.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

/// Largest rank handled by the crate.
pub const MAX_RANK: usize = 3;

/// An element of the weight lattice, stored as coefficients on the
/// fundamental weights. Coordinates beyond `rank` are always zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    c: [i64; MAX_RANK],
    rank: u8,
}

impl Weight {
    pub fn new(coords: &[i64]) -> Self {
        assert!(coords.len() <= MAX_RANK, "rank {} unsupported", coords.len());
        let mut c = [0; MAX_RANK];
        c[..coords.len()].copy_from_slice(coords);
        Weight { c, rank: coords.len() as u8 }
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(&vec![0; rank])
    }

    /// The weight (k,…,k); `splat(rank, 1)` is ρ.
    pub fn splat(rank: usize, k: i64) -> Self {
        Weight::new(&vec![k; rank])
    }

    pub fn rank(&self) -> usize {
        self.rank as usize
    }

    pub fn coords(&self) -> &[i64] {
        &self.c[..self.rank as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|&x| x == 0)
    }

    /// All coordinates nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|&x| x >= 0)
    }

    /// Dominant with every coordinate below `bound`.
    pub fn is_below(&self, bound: i64) -> bool {
        self.coords().iter().all(|&x| (0..bound).contains(&x))
    }

    pub fn dot(&self, v: &[i64]) -> i64 {
        self.coords().iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> Self {
        let mut w = *self;
        for x in w.c[..self.rank as usize].iter_mut() {
            *x = f(*x);
        }
        w
    }

    /// Exact division by `k`, if every coordinate is divisible.
    pub fn div_exact(&self, k: i64) -> Option<Self> {
        if self.coords().iter().all(|x| x % k == 0) {
            Some(self.map(|x| x / k))
        } else {
            None
        }
    }

    pub fn with(&self, i: usize, v: i64) -> Self {
        let mut w = *self;
        w.c[i] = v;
        w
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.coords()[i]
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, o: Weight) -> Weight {
        debug_assert_eq!(self.rank, o.rank);
        for i in 0..MAX_RANK {
            self.c[i] += o.c[i];
        }
        self
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, o: Weight) -> Weight {
        debug_assert_eq!(self.rank, o.rank);
        for i in 0..MAX_RANK {
            self.c[i] -= o.c[i];
        }
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, o: Weight) {
        *self = *self + o;
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, o: Weight) {
        *self = *self - o;
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.map(|x| -x)
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        w.map(|x| self * x)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.coords().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse weight {0:?}")]
pub struct ParseWeightError(pub String);

impl FromStr for Weight {
    type Err = ParseWeightError;

    /// Accepts `a,b[,c]`, optionally wrapped in parentheses or brackets.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let parts: Result<Vec<i64>, _> = t
            .split(',')
            .map(|x| x.trim().replace('−', "-").parse::<i64>())
            .collect();
        match parts {
            Ok(v) if !v.is_empty() && v.len() <= MAX_RANK => Ok(Weight::new(&v)),
            _ => Err(ParseWeightError(s.to_string())),
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        if v.is_empty() || v.len() > MAX_RANK {
            return Err(serde::de::Error::custom(format!("weight of length {}", v.len())));
        }
        Ok(Weight::new(&v))
    }
}

/// Shorthand constructor: `wt![2, -1]`.
#[macro_export]
macro_rules! wt {
    ($($x:expr),+ $(,)?) => {
        $crate::Weight::new(&[$($x as i64),+])
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let a = wt![2, -1];
        let b = wt![-3, 2];
        assert_eq!(a + b, wt![-1, 1]);
        assert_eq!(3 * a, wt![6, -3]);
        assert_eq!(format!("{}", -a), "(-2,1)");
    }

    #[test]
    fn parse_forms() {
        assert_eq!("2,3,3".parse::<Weight>().unwrap(), wt![2, 3, 3]);
        assert_eq!("(−2,1)".parse::<Weight>().unwrap(), wt![-2, 1]);
        assert!("1,x".parse::<Weight>().is_err());
    }

    #[test]
    fn serde_is_plain_array() {
        let s = serde_json::to_string(&wt![1, -2]).unwrap();
        assert_eq!(s, "[1,-2]");
        let w: Weight = serde_json::from_str("[0,4]").unwrap();
        assert_eq!(w, wt![0, 4]);
    }
}
