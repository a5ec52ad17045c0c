//! Formal characters: finite maps from weights to exact multiplicities.

use crate::{Coefficient, Error, Kind, Result, RootSystem, Weight};
use num_bigint::BigInt;
use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

/// A finite formal sum Σ c_λ e(λ). Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CharacterOf<C> {
    terms: BTreeMap<Weight, C>,
}

impl<C: Coefficient> CharacterOf<C> {
    pub fn new() -> Self {
        CharacterOf { terms: BTreeMap::new() }
    }

    /// e(λ).
    pub fn monomial(w: Weight) -> Self {
        Self::term(w, C::one())
    }

    pub fn term(w: Weight, c: C) -> Self {
        let mut x = Self::new();
        x.add_term(w, c);
        x
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Weight, C)>) -> Self {
        let mut x = Self::new();
        for (w, c) in it {
            x.add_term(w, c);
        }
        x
    }

    pub fn add_term(&mut self, w: Weight, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn get(&self, w: &Weight) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Weight, C> {
        self.terms.iter()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of all multiplicities.
    pub fn dim(&self) -> C {
        self.terms.values().fold(C::zero(), |a, b| a + b.clone())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// First weight (in storage order) with a negative coefficient.
    pub fn first_negative(&self) -> Option<Weight> {
        self.terms.iter().find(|(_, c)| c.is_negative()).map(|(w, _)| *w)
    }

    pub fn add_assign_scaled(&mut self, other: &Self, k: &C) {
        for (w, c) in &other.terms {
            self.add_term(*w, c.clone() * k.clone());
        }
    }

    /// Adds `k · other · e(shift)`.
    pub fn add_shifted(&mut self, other: &Self, shift: Weight, k: &C) {
        for (w, c) in &other.terms {
            self.add_term(*w + shift, c.clone() * k.clone());
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        let mut x = Self::new();
        x.add_assign_scaled(self, k);
        x
    }

    /// Multiplication by e(s).
    pub fn shift(&self, s: Weight) -> Self {
        CharacterOf { terms: self.terms.iter().map(|(w, c)| (*w + s, c.clone())).collect() }
    }

    /// Convolution product.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut x = Self::new();
        for (w, c) in &other.terms {
            x.add_shifted(self, *w, c);
        }
        x
    }

    /// Re-index the support by λ ↦ k·λ (Frobenius twist for k = p^r).
    pub fn twist(&self, k: i64) -> Self {
        CharacterOf { terms: self.terms.iter().map(|(w, c)| (k * *w, c.clone())).collect() }
    }

    /// The G2 half twist (a,b) ↦ (3b,a).
    pub fn g2_half_twist(&self, rs: &RootSystem) -> Result<Self> {
        if rs.kind != Kind::G2 {
            return Err(Error::WrongSystem { expected: "G2".into(), got: rs.kind.to_string() });
        }
        Ok(CharacterOf {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (Weight::new(&[3 * w[1], w[0]]), c.clone()))
                .collect(),
        })
    }

    /// multiplicity(w λ) = multiplicity(λ) for all w ∈ W.
    pub fn is_w_invariant(&self, rs: &RootSystem) -> bool {
        self.terms.iter().all(|(w, c)| {
            (0..rs.rank).all(|i| self.terms.get(&rs.reflect_simple(i, *w)) == Some(c))
        })
    }

    /// Restriction to dominant weights.
    pub fn dominant_part(&self) -> BTreeMap<Weight, C> {
        self.terms.iter().filter(|(w, _)| w.is_dominant()).map(|(w, c)| (*w, c.clone())).collect()
    }

    /// Weight with the largest height (a maximal element for dominance).
    pub fn top_weight(&self, rs: &RootSystem) -> Option<Weight> {
        self.terms.keys().copied().max_by_key(|w| (rs.scaled_height(*w), *w))
    }

    pub fn convert<D: Coefficient>(&self) -> CharacterOf<D> {
        CharacterOf {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (*w, convert_coeff::<C, D>(c)))
                .collect(),
        }
    }

    /// First weight at which `self` and `other` differ, in storage order.
    pub fn first_difference(&self, other: &Self) -> Option<(Weight, C, C)> {
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some((w, c)), None) => return Some((**w, (*c).clone(), C::zero())),
                (None, Some((w, c))) => return Some((**w, C::zero(), (*c).clone())),
                (Some((wa, ca)), Some((wb, cb))) => {
                    if wa < wb {
                        return Some((**wa, (*ca).clone(), C::zero()));
                    } else if wb < wa {
                        return Some((**wb, C::zero(), (*cb).clone()));
                    } else if ca != cb {
                        return Some((**wa, (*ca).clone(), (*cb).clone()));
                    }
                    a.next();
                    b.next();
                }
            }
        }
    }
}

pub(crate) fn convert_coeff<C: Coefficient, D: Coefficient>(c: &C) -> D {
    if let Some(v) = c.to_i128() {
        if let Some(d) = D::from_i128(v) {
            return d;
        }
    }
    let big: BigInt = c.to_string().parse().expect("integer coefficient");
    let s = big.to_string();
    D::from_str_radix(&s, 10).unwrap_or_else(|_| panic!("coefficient {s} overflows target ring"))
}

impl<C: Coefficient> Add for &CharacterOf<C> {
    type Output = CharacterOf<C>;
    fn add(self, o: &CharacterOf<C>) -> CharacterOf<C> {
        let mut x = self.clone();
        x.add_assign_scaled(o, &C::one());
        x
    }
}

impl<C: Coefficient> Sub for &CharacterOf<C> {
    type Output = CharacterOf<C>;
    fn sub(self, o: &CharacterOf<C>) -> CharacterOf<C> {
        let mut x = self.clone();
        x.add_assign_scaled(o, &-C::one());
        x
    }
}

impl<C: Coefficient> Neg for &CharacterOf<C> {
    type Output = CharacterOf<C>;
    fn neg(self) -> CharacterOf<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coefficient> fmt::Debug for CharacterOf<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<C: Coefficient> fmt::Display for CharacterOf<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "e{w}")?;
            } else {
                write!(f, "{c}·e{w}")?;
            }
        }
        Ok(())
    }
}

/// A virtual G-character written in the basis of Weyl characters:
/// Σ c_μ χ(μ) over dominant μ.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct WeylSum<C> {
    terms: BTreeMap<Weight, C>,
}

impl<C: Coefficient> WeylSum<C> {
    pub fn new() -> Self {
        WeylSum { terms: BTreeMap::new() }
    }

    pub fn chi(mu: Weight) -> Self {
        let mut x = Self::new();
        x.add_dominant(mu, C::one());
        x
    }

    /// Adds `c·χ(μ)` for dominant μ.
    pub fn add_dominant(&mut self, mu: Weight, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mu) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    /// Adds `c·χ(λ)` for arbitrary λ, straightening by the dot action.
    pub fn add_chi(&mut self, rs: &RootSystem, lambda: Weight, c: C) {
        if let Some((mu, sign)) = rs.dot_dominant(lambda) {
            let c = if sign < 0 { -c } else { c };
            self.add_dominant(mu, c);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, k: &C) {
        for (w, c) in &other.terms {
            self.add_dominant(*w, c.clone() * k.clone());
        }
    }

    pub fn get(&self, w: &Weight) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Weight, C> {
        self.terms.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn top_weight(&self, rs: &RootSystem) -> Option<Weight> {
        self.terms.keys().copied().max_by_key(|w| (rs.scaled_height(*w), *w))
    }

    /// Brauer–Klimyk product: (Σ c_ν χ(ν)) · ch M = Σ c_ν m_M(γ) χ(ν+γ).
    pub fn times_character(&self, rs: &RootSystem, m: &CharacterOf<C>) -> Self {
        let mut out = Self::new();
        for (nu, c) in &self.terms {
            for (g, k) in m.iter() {
                out.add_chi(rs, *nu + *g, c.clone() * k.clone());
            }
        }
        out
    }

    pub fn convert<D: Coefficient>(&self) -> WeylSum<D> {
        WeylSum { terms: self.terms.iter().map(|(w, c)| (*w, convert_coeff::<C, D>(c))).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{wt, Character};
    use num_traits::One;

    #[test]
    fn zero_terms_are_dropped() {
        let mut c = Character::monomial(wt![1, 0]);
        c.add_term(wt![1, 0], BigInt::from(-1));
        assert!(c.is_empty());
    }

    #[test]
    fn half_twist_examples() {
        let rs = RootSystem::get(Kind::G2);
        let c = Character::monomial(wt![1, 0]);
        assert_eq!(c.g2_half_twist(rs).unwrap(), Character::monomial(wt![0, 1]));
        let d = Character::monomial(wt![0, 1]);
        assert_eq!(d.g2_half_twist(rs).unwrap(), Character::monomial(wt![3, 0]));
        let a2 = RootSystem::get(Kind::A2);
        assert!(matches!(c.g2_half_twist(a2), Err(Error::WrongSystem { .. })));
    }

    #[test]
    fn tensor_is_convolution() {
        let a: Character = Character::from_terms([(wt![1], BigInt::one()), (wt![-1], BigInt::one())]);
        let sq = a.tensor(&a);
        assert_eq!(sq.get(&wt![0]), BigInt::from(2));
        assert_eq!(sq.dim(), BigInt::from(4));
    }

    #[test]
    fn first_difference_reports_weight() {
        let a = Character::monomial(wt![1, 1]);
        let b = Character::monomial(wt![2, 0]);
        assert_eq!(a.first_difference(&a), None);
        assert_eq!(a.first_difference(&b).unwrap().0, wt![1, 1]);
    }
}
