//! Baby Verma characters, G_1T composition factors, the bundled radical
//! tables and the inverse Kazhdan–Lusztig polynomials they encode.

use crate::alcove::{alcove_of, distance, linked, AlcoveId, SpecialPoint};
use crate::decomposition::{simple_character, DecompositionTable};
use crate::{Character, CharacterOf, Coefficient, Error, Kind, Result, RootSystem, Weight};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// ch Ẑ'(μ) = e(μ)·Π_{α>0}(1 + e(−α) + ⋯ + e(−(p−1)α)).
pub fn zhat_character<C: Coefficient>(rs: &RootSystem, p: i64, mu: Weight) -> CharacterOf<C> {
    let mut c = CharacterOf::monomial(mu);
    for &alpha in &rs.positive_roots {
        let mut next = CharacterOf::new();
        for k in 0..p {
            next.add_shifted(&c, -(k * alpha), &C::one());
        }
        c = next;
    }
    c
}

/// Composition factors L(σ0)⊗pσ1 of Ẑ'(μ) by peeling off maximal weights.
pub fn g1t_factors(
    rs: &RootSystem,
    p: i64,
    mu: Weight,
    table: &DecompositionTable,
) -> Result<Vec<(Weight, Weight, u64)>> {
    let mut rem: Character = zhat_character(rs, p, mu);
    let mut cache: BTreeMap<Weight, Character> = BTreeMap::new();
    let mut out: BTreeMap<(Weight, Weight), u64> = BTreeMap::new();
    while let Some(top) = rem.top_weight(rs) {
        let m = rem.get(&top);
        if m.is_negative() {
            return Err(Error::NegativeResidue { weight: top, coeff: m.to_string() });
        }
        let sigma0 = top.map(|x| x.rem_euclid(p));
        let sigma1 = (top - sigma0).div_exact(p).unwrap();
        if !cache.contains_key(&sigma0) {
            cache.insert(sigma0, simple_character(rs, p, sigma0, table)?);
        }
        rem.add_shifted(&cache[&sigma0], p * sigma1, &-m.clone());
        *out.entry((sigma0, sigma1)).or_default() += u64::try_from(m).unwrap();
    }
    Ok(out.into_iter().map(|((a, b), m)| (a, b, m)).collect())
}

/// One composition factor L(σ0)⊗7σ1 of rad_j Ẑ'(μ), with multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalEntry {
    pub sigma0: Weight,
    pub layer: u32,
    pub sigma1: Weight,
    /// σ1 for Ẑ'(μ + pρ), as printed in the second column.
    pub shifted_sigma1: Weight,
    pub mult: u64,
}

/// Radical layers of Ẑ'_1(μ) for G2, p = 7, for one labelled alcove.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalTable {
    pub system: Kind,
    pub prime: i64,
    pub alcove: u32,
    pub base_weight: Weight,
    pub shifted_weight: Weight,
    pub entries: Vec<RadicalEntry>,
}

impl RadicalTable {
    /// Σ mult·[rad_j : L(σ0)⊗pσ1] over the entries matching (σ0, σ1),
    /// keyed by layer.
    pub fn layers_of(&self, sigma0: Weight, sigma1: Weight) -> BTreeMap<u32, u64> {
        let mut m = BTreeMap::new();
        for e in &self.entries {
            if e.sigma0 == sigma0 && e.sigma1 == sigma1 {
                *m.entry(e.layer).or_default() += e.mult;
            }
        }
        m
    }

    pub fn max_layer(&self) -> u32 {
        self.entries.iter().map(|e| e.layer).max().unwrap_or(0)
    }

    /// Checks that do not need characters: the shifted column, the layer
    /// range, a unique head, restricted σ0, and that every factor is linked
    /// to the base weight.
    pub fn check_structure(&self, rs: &RootSystem) -> Result<()> {
        let p = self.prime;
        let err = |msg: String| Error::SchemaError { file: format!("alcove {}", self.alcove), msg };
        if self.system != Kind::G2 || rs.kind != Kind::G2 || p != 7 {
            return Err(err("radical tables are for G2 at p = 7".into()));
        }
        if self.shifted_weight != self.base_weight + p * rs.rho() {
            return Err(err(format!("shifted weight {} is not μ + 7ρ", self.shifted_weight)));
        }
        let bound = 2 * rs.num_positive_roots() as u32;
        for e in &self.entries {
            if e.shifted_sigma1 != e.sigma1 + rs.rho() {
                return Err(Error::OracleMismatch {
                    context: format!("alcove {} shifted column", self.alcove),
                    weight: e.sigma1,
                    expected: (e.sigma1 + rs.rho()).to_string(),
                    found: e.shifted_sigma1.to_string(),
                });
            }
            if e.layer > bound {
                return Err(err(format!("layer {} exceeds {bound}", e.layer)));
            }
            if e.mult == 0 {
                return Err(err(format!("zero multiplicity at {} ⊗ 7{}", e.sigma0, e.sigma1)));
            }
            if !e.sigma0.is_dominant() || !e.sigma0.is_below(p) {
                return Err(Error::NotRestricted(e.sigma0, p));
            }
            let w = e.sigma0 + p * e.sigma1;
            if !linked(rs, p, w, self.base_weight) {
                return Err(Error::OracleMismatch {
                    context: format!("alcove {}: factor not linked to {}", self.alcove, self.base_weight),
                    weight: w,
                    expected: "a weight in the W_p orbit".into(),
                    found: format!("{} + 7{}", e.sigma0, e.sigma1),
                });
            }
        }
        let heads: Vec<_> = self.entries.iter().filter(|e| e.layer == 0).collect();
        if heads.len() != 1 || heads[0].mult != 1 {
            return Err(err(format!("layer 0 must hold exactly one factor with multiplicity 1, found {}", describe(&heads))));
        }
        let top = self.max_layer();
        let socle: Vec<_> = self.entries.iter().filter(|e| e.layer == top).collect();
        if socle.len() != 1 || socle[0].mult != 1 {
            return Err(err(format!("layer {top} must hold exactly one factor with multiplicity 1, found {}", describe(&socle))));
        }
        Ok(())
    }

    /// Σ mult·ch L(σ0)·e(pσ1) over all entries.
    pub fn recompose(&self, simples: &BTreeMap<Weight, Character>) -> Result<Character> {
        let mut c = Character::new();
        for e in &self.entries {
            let s = simples.get(&e.sigma0).ok_or(Error::MissingKey(e.sigma0))?;
            c.add_shifted(s, self.prime * e.sigma1, &BigInt::from(e.mult));
        }
        Ok(c)
    }
}

fn describe(entries: &[&RadicalEntry]) -> String {
    let v: Vec<String> = entries.iter().map(|e| format!("{}×{}⊗7{}", e.mult, e.sigma0, e.sigma1)).collect();
    v.join(", ")
}

/// Simple characters for every σ0 occurring in the tables.
pub fn simples_for(rs: &RootSystem, tables: &[RadicalTable], decomp: &DecompositionTable) -> Result<BTreeMap<Weight, Character>> {
    let mut m = BTreeMap::new();
    for t in tables {
        for e in &t.entries {
            if !m.contains_key(&e.sigma0) {
                m.insert(e.sigma0, simple_character(rs, t.prime, e.sigma0, decomp)?);
            }
        }
    }
    Ok(m)
}

/// The master identity Σ mult·ch L(σ0)·e(7σ1) = ch Ẑ'(μ), together with the
/// structural checks.
pub fn validate_table(rs: &RootSystem, t: &RadicalTable, simples: &BTreeMap<Weight, Character>) -> Result<()> {
    t.check_structure(rs)?;
    let lhs = t.recompose(simples)?;
    let rhs: Character = zhat_character(rs, t.prime, t.base_weight);
    if lhs.first_difference(&rhs).is_some() {
        // a single wrong entry L(σ0)⊗7σ1 shows up at the top weight σ0 + 7σ1
        let mut diff = lhs.clone();
        diff.add_assign_scaled(&rhs, &BigInt::from(-1));
        let w = diff.top_weight(rs).unwrap();
        let culprit = t
            .entries
            .iter()
            .find(|e| e.sigma0 + t.prime * e.sigma1 == w)
            .map(|e| format!("entry {}⊗7{} (layer {})", e.sigma0, e.sigma1, e.layer))
            .unwrap_or_else(|| "no entry with that top weight".into());
        return Err(Error::OracleMismatch {
            context: format!("alcove {} against Ẑ'{}; {culprit}", t.alcove, t.base_weight),
            weight: w,
            expected: rhs.get(&w).to_string(),
            found: lhs.get(&w).to_string(),
        });
    }
    Ok(())
}

/// Solves the tables for the simple characters: each ch L(σ0) is the
/// unknown carried by the socle entry (σ0 = μ, σ1 = 0) of the table with
/// base weight μ, and every other entry only involves weights of strictly
/// smaller depth.
pub fn rederive_simples(rs: &RootSystem, tables: &[RadicalTable]) -> Result<BTreeMap<Weight, Character>> {
    let p = tables.first().map_or(7, |t| t.prime);
    let by_base: BTreeMap<Weight, &RadicalTable> = tables.iter().map(|t| (t.base_weight, t)).collect();
    let zhat: BTreeMap<Weight, Character> =
        by_base.keys().map(|&mu| (mu, zhat_character(rs, p, mu))).collect();
    for (mu, t) in &by_base {
        let own = t.entries.iter().filter(|e| e.sigma0 == *mu && e.sigma1.is_zero()).map(|e| e.mult).sum::<u64>();
        if own != 1 {
            return Err(Error::Data(format!("alcove {}: socle factor L{mu}⊗7(0,0) occurs {own} times", t.alcove)));
        }
        for e in &t.entries {
            if !by_base.contains_key(&e.sigma0) {
                return Err(Error::MissingKey(e.sigma0));
            }
        }
    }
    // x[σ0][δ] = multiplicity of σ0 − δ in L(σ0), δ in the root lattice.
    let mut x: BTreeMap<Weight, BTreeMap<Weight, BigInt>> = by_base.keys().map(|&m| (m, BTreeMap::new())).collect();
    let mut depths: BTreeMap<i64, Vec<Weight>> = BTreeMap::new();
    for (mu, z) in &zhat {
        for w in z.weights() {
            let d = *mu - *w;
            depths.entry(rs.scaled_height(d)).or_default().push(d);
        }
    }
    for ds in depths.values_mut() {
        ds.sort();
        ds.dedup();
    }
    for ds in depths.values() {
        for (&mu, t) in &by_base {
            for &d in ds {
                let w = mu - d;
                let mut v = zhat[&mu].get(&w);
                for e in &t.entries {
                    if e.sigma0 == mu && e.sigma1.is_zero() {
                        continue;
                    }
                    let dd = e.sigma0 + p * e.sigma1 - w;
                    if let Some(c) = x[&e.sigma0].get(&dd) {
                        v -= c * BigInt::from(e.mult);
                    }
                }
                if !v.is_zero() {
                    x.get_mut(&mu).unwrap().insert(d, v);
                }
            }
        }
    }
    Ok(x.into_iter()
        .map(|(mu, m)| (mu, Character::from_terms(m.into_iter().map(|(d, v)| (mu - d, v)))))
        .collect())
}

/// A Laurent polynomial in q with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentPoly {
    pub coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(0, 1)
    }

    pub fn term(e: i64, c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, BigInt::from(c));
        p
    }

    pub fn from_terms(t: &[(i64, i64)]) -> Self {
        let mut p = Self::zero();
        for &(e, c) in t {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        let v = self.coeffs.entry(e).or_insert_with(BigInt::zero);
        *v += c;
        if v.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    /// Nonnegative coefficients on nonnegative exponents only.
    pub fn is_positive_polynomial(&self) -> bool {
        self.coeffs.iter().all(|(e, c)| *e >= 0 && c.is_positive())
    }

    pub fn degree(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = if c.is_one() && *e != 0 { String::new() } else { c.to_string() };
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Q_{A,C} recovered from a radical table, with d(A,C) and the layers read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveredQ {
    pub q: LaurentPoly,
    pub d: i64,
    pub lambda: Weight,
    pub sigma0: Weight,
    pub sigma1: Weight,
    pub layers: BTreeMap<u32, u64>,
}

/// Reads Q_{A,C} = Σ_j q^{(d(A,C)−j)/2}[rad_j Ẑ'(μ) : L̂(w_ν·λ)] off the
/// table, where A is the alcove of the base weight and λ the p-regular
/// weight of C ⊂ Π_ν.
pub fn recover_q(rs: &RootSystem, t: &RadicalTable, nu: SpecialPoint, c: &AlcoveId) -> Result<RecoveredQ> {
    let p = t.prime;
    let a = alcove_of(rs, t.base_weight, p)?;
    let lambda = crate::alcove::box_regular_weights(rs, p, nu)
        .into_iter()
        .find(|(_, x)| x == c)
        .map(|(w, _)| w)
        .ok_or_else(|| Error::UnlabeledAlcove(format!("{c} is not in the box of {}", nu.nu)))?;
    let w = crate::alcove::w_nu_dot(nu, lambda);
    let sigma0 = w.map(|x| x.rem_euclid(p));
    let sigma1 = (w - sigma0).div_exact(p).unwrap();
    let d = distance(&a, c);
    let layers = t.layers_of(sigma0, sigma1);
    let mut q = LaurentPoly::zero();
    for (&j, &m) in &layers {
        let diff = d - j as i64;
        if diff.rem_euclid(2) != 0 {
            return Err(Error::ParityViolation { layer: j, distance: d, weight: w });
        }
        q.add_term(diff / 2, BigInt::from(m));
    }
    Ok(RecoveredQ { q, d, lambda, sigma0, sigma1, layers })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wt;

    #[test]
    fn zhat_dimension_and_translation() {
        let rs = RootSystem::get(Kind::G2);
        let z: CharacterOf<i64> = zhat_character(rs, 7, wt![0, 0]);
        assert_eq!(z.dim(), 117649);
        let z2: CharacterOf<i64> = zhat_character(rs, 7, wt![7, 7]);
        assert_eq!(z2, z.shift(wt![7, 7]));
        let b = RootSystem::get(Kind::B2);
        assert_eq!(zhat_character::<i64>(b, 5, wt![1, 2]).dim(), 625);
    }

    #[test]
    fn laurent_display() {
        assert_eq!(LaurentPoly::from_terms(&[(1, 1), (2, 1)]).to_string(), "q + q^2");
        assert_eq!(LaurentPoly::from_terms(&[(3, 3)]).to_string(), "3q^3");
        assert_eq!(LaurentPoly::one().to_string(), "1");
    }
}
