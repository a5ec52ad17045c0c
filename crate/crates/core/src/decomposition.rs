//! Decomposition numbers [∇(λ):L(μ)], simple characters, highest-weight
//! peeling, and the derivation of tables from Jantzen's sum formula.

use crate::alcove::linked;
use crate::character::{CharacterOf, WeylSum};
use crate::weyl::{dominant_multiplicities, dominant_part, expand, jantzen_sum_weyl};
use crate::{Character, Coefficient, Error, Kind, Result, RootSystem, Weight, WeylExpansion};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Rows λ ↦ [(μ, [∇(λ):L(μ)])] for a downward-closed set of dominant weights,
/// together with the simple characters they determine.
#[derive(Clone, Debug)]
pub struct DecompositionTable {
    pub kind: Kind,
    pub p: i64,
    rows: BTreeMap<Weight, Vec<(Weight, u64)>>,
    simples: BTreeMap<Weight, WeylExpansion>,
}

impl DecompositionTable {
    /// Checks the structural invariants and solves for the simple characters.
    pub fn new(kind: Kind, p: i64, rows: BTreeMap<Weight, Vec<(Weight, u64)>>) -> Result<Self> {
        let rs = RootSystem::get(kind);
        for (lam, row) in &rows {
            if lam.rank() != rs.rank || !lam.is_dominant() {
                return Err(Error::Data(format!("row key {lam} is not a dominant {kind} weight")));
            }
            let heads: Vec<_> = row.iter().filter(|(m, _)| m == lam).collect();
            if heads.len() != 1 || heads[0].1 != 1 {
                return Err(Error::Data(format!("row {lam}: [∇({lam}):L({lam})] must be 1")));
            }
            for (mu, m) in row {
                if *m == 0 {
                    return Err(Error::Data(format!("row {lam}: zero multiplicity for {mu}")));
                }
                if mu == lam {
                    continue;
                }
                if !rows.contains_key(mu) {
                    return Err(Error::MissingKey(*mu));
                }
                if !rs.dominance_leq(*mu, *lam) || !linked(rs, p, *mu, *lam) {
                    return Err(Error::Data(format!("row {lam}: factor {mu} is not linked below the head")));
                }
            }
        }
        let mut keys: Vec<Weight> = rows.keys().copied().collect();
        keys.sort_by_key(|w| (rs.scaled_height(*w), *w));
        let mut simples: BTreeMap<Weight, WeylExpansion> = BTreeMap::new();
        for lam in keys {
            let mut s = WeylExpansion::chi(lam);
            for (mu, m) in &rows[&lam] {
                if *mu != lam {
                    s.add_scaled(&simples[mu], &-BigInt::from(*m));
                }
            }
            simples.insert(lam, s);
        }
        Ok(DecompositionTable { kind, p, rows, simples })
    }

    pub fn rows(&self) -> &BTreeMap<Weight, Vec<(Weight, u64)>> {
        &self.rows
    }

    pub fn row(&self, lambda: Weight) -> Result<&[(Weight, u64)]> {
        self.rows.get(&lambda).map(|v| v.as_slice()).ok_or(Error::MissingKey(lambda))
    }

    pub fn contains(&self, lambda: Weight) -> bool {
        self.rows.contains_key(&lambda)
    }

    pub fn keys(&self) -> impl Iterator<Item = &Weight> {
        self.rows.keys()
    }

    /// ch L(λ) in the Weyl-character basis.
    pub fn simple_weyl(&self, lambda: Weight) -> Result<&WeylExpansion> {
        self.simples.get(&lambda).ok_or(Error::MissingKey(lambda))
    }

    pub fn root_system(&self) -> &'static RootSystem {
        RootSystem::get(self.kind)
    }

    /// Jantzen filtration check for every row: in the simple-module
    /// expansion Σ c_μ L(μ) of SF(λ), c_μ ≥ 0, and c_μ > 0 exactly for the
    /// non-head factors μ, with [∇(λ):L(μ)] ≤ c_μ.
    pub fn check_sum_formula(&self) -> Result<()> {
        let rs = self.root_system();
        for (lam, row) in &self.rows {
            let sf = jantzen_sum_weyl::<BigInt>(rs, self.p, *lam)?;
            let c: BTreeMap<Weight, BigInt> = decompose_weyl(rs, &sf, self)?.into_iter().collect();
            for (mu, v) in &c {
                if v.is_negative() {
                    return Err(Error::NegativeResidue { weight: *mu, coeff: v.to_string() });
                }
            }
            for (mu, m) in row {
                if mu == lam {
                    continue;
                }
                let have = c.get(mu).cloned().unwrap_or_default();
                if have < BigInt::from(*m) {
                    return Err(Error::OracleMismatch {
                        context: format!("sum formula for row {lam}"),
                        weight: *mu,
                        expected: format!("at least {m}"),
                        found: have.to_string(),
                    });
                }
            }
            for mu in c.keys() {
                if !row.iter().any(|(x, _)| x == mu) {
                    return Err(Error::OracleMismatch {
                        context: format!("sum formula for row {lam}"),
                        weight: *mu,
                        expected: "0".into(),
                        found: c[mu].to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Coefficients of SF(λ) in the basis of simple characters.
    pub fn sum_formula_coefficients(&self, lambda: Weight) -> Result<BTreeMap<Weight, BigInt>> {
        let sf = jantzen_sum_weyl::<BigInt>(self.root_system(), self.p, lambda)?;
        Ok(decompose_weyl(self.root_system(), &sf, self)?.into_iter().collect())
    }

    /// ch L(λ0 + pλ1) = ch L(λ0)·ch L(λ1)^{[p]} for every non-restricted key.
    pub fn check_steinberg(&self) -> Result<()> {
        let rs = self.root_system();
        for lam in self.rows.keys() {
            if lam.is_below(self.p) {
                continue;
            }
            let (l0, l1) = rs.restricted_split(*lam, self.p, 1)?;
            let lhs = simple_character(rs, self.p, *lam, self)?;
            let rhs = simple_character(rs, self.p, l0, self)?.tensor(&simple_character(rs, self.p, l1, self)?.twist(self.p));
            if let Some((w, found, expected)) = lhs.first_difference(&rhs) {
                return Err(Error::OracleMismatch {
                    context: format!("tensor product theorem for row {lam} = {l0} + {}·{l1}", self.p),
                    weight: w,
                    expected: expected.to_string(),
                    found: found.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Rows with p-regular restricted keys have all multiplicities 1.
    pub fn check_multiplicity_free(&self) -> Result<()> {
        let rs = self.root_system();
        for (lam, row) in &self.rows {
            if lam.is_below(self.p) && crate::alcove::is_p_regular(rs, *lam, self.p) {
                if let Some((mu, _)) = row.iter().find(|(_, m)| *m != 1) {
                    return Err(Error::OracleMismatch {
                        context: format!("multiplicity-free row {lam}"),
                        weight: *mu,
                        expected: "1".into(),
                        found: row.iter().find(|(x, _)| x == mu).unwrap().1.to_string(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// ch L(λ) for a key of the table.
pub fn simple_character(rs: &RootSystem, p: i64, lambda: Weight, table: &DecompositionTable) -> Result<Character> {
    if table.kind != rs.kind || table.p != p {
        return Err(Error::WrongSystem {
            expected: format!("{} p={}", table.kind, table.p),
            got: format!("{} p={p}", rs.kind),
        });
    }
    Ok(expand(rs, table.simple_weyl(lambda)?))
}

/// Dominant multiplicities of ch L(λ).
pub fn simple_dominant_part(rs: &RootSystem, lambda: Weight, table: &DecompositionTable) -> Result<BTreeMap<Weight, BigInt>> {
    Ok(dominant_part(rs, table.simple_weyl(lambda)?))
}

/// Writes a nonnegative G-character as Σ m_i ch L(μ_i) by repeatedly
/// subtracting the simple character at a maximal remaining weight.
/// Only the dominant part of `c` is consulted (it determines a W-invariant
/// character).
pub fn decompose<C: Coefficient>(
    rs: &RootSystem,
    c: &CharacterOf<C>,
    table: &DecompositionTable,
) -> Result<Vec<(Weight, C)>> {
    let mut rem: BTreeMap<Weight, BigInt> = c
        .iter()
        .filter(|(w, _)| w.is_dominant())
        .map(|(w, v)| (*w, crate::character::convert_coeff::<C, BigInt>(v)))
        .collect();
    let mut out = Vec::new();
    while let Some(top) = rem.keys().copied().max_by_key(|w| (rs.scaled_height(*w), *w)) {
        let m = rem[&top].clone();
        if m.is_negative() {
            return Err(Error::NegativeResidue { weight: top, coeff: m.to_string() });
        }
        let simple = dominant_part(rs, table.simple_weyl(top)?);
        for (w, v) in simple {
            let e = rem.entry(w).or_insert_with(BigInt::zero);
            *e -= &m * v;
            if e.is_zero() {
                rem.remove(&w);
            }
        }
        out.push((top, crate::character::convert_coeff::<BigInt, C>(&m)));
    }
    out.sort_by_key(|(w, _)| std::cmp::Reverse((rs.scaled_height(*w), *w)));
    Ok(out)
}

/// Expansion of a virtual character given in the Weyl basis as an integer
/// combination of simple characters (negative coefficients allowed).
pub fn decompose_weyl(rs: &RootSystem, s: &WeylExpansion, table: &DecompositionTable) -> Result<Vec<(Weight, BigInt)>> {
    let mut rem = s.clone();
    let mut out = Vec::new();
    while let Some(top) = rem.top_weight(rs) {
        let m = rem.get(&top);
        rem.add_scaled(table.simple_weyl(top)?, &-m.clone());
        out.push((top, m));
    }
    Ok(out)
}

/// How an entry left open by the sum formula was fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    /// Rank of the contravariant form on the weight space of Δ(λ).
    FormRank,
    /// Supplied by the caller's rule.
    Rule,
    /// Only value surviving the consistency search.
    Search,
    /// Several values survive; the first is kept.
    Open,
}

#[derive(Clone, Debug)]
pub struct Choice {
    pub row: Weight,
    pub factor: Weight,
    pub sf_coeff: u64,
    pub value: u64,
    pub source: Source,
}

/// Result of deriving a table from the sum formula.
#[derive(Clone, Debug)]
pub struct Derivation {
    pub rows: BTreeMap<Weight, Vec<(Weight, u64)>>,
    /// Entries with coefficient ≥ 2 in the sum formula of their row.
    pub choices: Vec<Choice>,
}

/// Ways to settle an entry the sum formula only bounds.
pub struct Resolver<'a> {
    /// dim L(λ)_μ if it can be computed.
    pub weight_space: &'a dyn Fn(Weight, Weight) -> Option<usize>,
    /// A value for [∇(λ):L(μ)] given by some external rule.
    pub rule: &'a dyn Fn(Weight, Weight) -> Option<u64>,
}

enum Step {
    Done(BTreeMap<Weight, Vec<(Weight, u64)>>, Vec<Choice>),
    Branch(u64),
    Fail,
}

/// Derives [∇(λ):L(μ)] for all dominant λ with ⟨λ,α0∨⟩ ≤ `bound`.
///
/// Restricted rows come from the sum formula: L(μ) with coefficient c in
/// SF(λ) has 1 ≤ [∇(λ):L(μ)] ≤ c, and is absent when c = 0. Non-restricted
/// rows follow from Steinberg's tensor product theorem. When c ≥ 2 the
/// resolver is asked first; failing that every value in 1..=c is tried and
/// an assignment is discarded as soon as some row violates the sum-formula
/// conditions or a simple character gets a negative multiplicity.
pub fn derive_from_sum_formula(kind: Kind, p: i64, bound: i64, resolver: &Resolver) -> Result<Derivation> {
    let rs = RootSystem::get(kind);
    let weights = rs.dominant_weights_up_to(bound);
    let mut survivors: Vec<(Vec<u64>, BTreeMap<Weight, Vec<(Weight, u64)>>, Vec<Choice>)> = Vec::new();
    let mut stack: Vec<Vec<u64>> = vec![vec![]];
    while let Some(prefix) = stack.pop() {
        match derive_step(rs, p, &weights, &prefix, resolver)? {
            Step::Done(rows, ch) => survivors.push((prefix, rows, ch)),
            Step::Branch(c) => {
                for d in (1..=c).rev() {
                    let mut next = prefix.clone();
                    next.push(d);
                    stack.push(next);
                }
            }
            Step::Fail => {}
        }
        if survivors.len() > 64 {
            return Err(Error::Data(format!("{kind} p={p}: too many consistent tables")));
        }
    }
    let (first, rows, mut choices) = survivors.first().cloned().ok_or_else(|| {
        Error::Data(format!("{kind} p={p}: no table is consistent with the sum formula"))
    })?;
    let mut k = 0;
    for (i, c) in choices.iter_mut().enumerate() {
        if c.source != Source::Search {
            continue;
        }
        let agree = survivors.iter().all(|(_, _, o)| {
            o.get(i).is_some_and(|x| x.row == c.row && x.factor == c.factor && x.value == c.value)
        });
        if !agree {
            c.source = Source::Open;
        }
        debug_assert_eq!(first[k], c.value);
        k += 1;
    }
    Ok(Derivation { rows, choices })
}

fn derive_step(rs: &RootSystem, p: i64, weights: &[Weight], prefix: &[u64], resolver: &Resolver) -> Result<Step> {
    let mut rows: BTreeMap<Weight, Vec<(Weight, u64)>> = BTreeMap::new();
    let mut simples: BTreeMap<Weight, WeylExpansion> = BTreeMap::new();
    let mut dominant: BTreeMap<Weight, BTreeMap<Weight, BigInt>> = BTreeMap::new();
    let mut choices = Vec::new();
    let mut used = 0;
    for &lam in weights {
        let sf = jantzen_sum_weyl::<BigInt>(rs, p, lam)?;
        let (row, simple) = if lam.is_below(p) {
            let coeffs = PartialTable { simples: &simples }.decompose(rs, &sf)?;
            let mut row = vec![(lam, 1u64)];
            let mut simple = WeylExpansion::chi(lam);
            for (mu, c) in coeffs {
                let Some(c) = c.to_u64() else { return Ok(Step::Fail) };
                let (d, source) = if c <= 1 {
                    (c, None)
                } else if let Some(dim) = (resolver.weight_space)(lam, mu) {
                    let weyl = dominant_multiplicities(rs, lam)?.get(&mu).copied().unwrap_or(0);
                    let mut d = weyl - dim as i64;
                    for (nu, m) in &row[1..] {
                        d -= *m as i64 * dominant[nu].get(&mu).and_then(|v| v.to_i64()).unwrap_or(0);
                    }
                    if d < 1 || d as u64 > c {
                        return Err(Error::OracleMismatch {
                            context: format!("row {lam}: form rank against sum formula bound {c}"),
                            weight: mu,
                            expected: format!("1..={c}"),
                            found: d.to_string(),
                        });
                    }
                    (d as u64, Some(Source::FormRank))
                } else if let Some(d) = (resolver.rule)(lam, mu) {
                    (d, Some(Source::Rule))
                } else {
                    match prefix.get(used) {
                        Some(&d) => {
                            used += 1;
                            (d, Some(Source::Search))
                        }
                        None => return Ok(Step::Branch(c)),
                    }
                };
                if let Some(source) = source {
                    choices.push(Choice { row: lam, factor: mu, sf_coeff: c, value: d, source });
                }
                if d > 0 {
                    row.push((mu, d));
                    simple.add_scaled(&simples[&mu], &-BigInt::from(d));
                }
            }
            (row, simple)
        } else {
            let (l0, l1) = rs.restricted_split(lam, p, 1)?;
            let outer: Character = expand(rs, &simples[&l1]).twist(p);
            let simple = simples[&l0].times_character(rs, &outer);
            let mut with_self = simples.clone();
            with_self.insert(lam, simple.clone());
            let coeffs = PartialTable { simples: &with_self }.decompose(rs, &WeylExpansion::chi(lam))?;
            let mut row = Vec::new();
            for (mu, c) in coeffs {
                match c.to_u64() {
                    Some(v) if v > 0 => row.push((mu, v)),
                    _ => return Ok(Step::Fail),
                }
            }
            let c: BTreeMap<Weight, BigInt> =
                PartialTable { simples: &simples }.decompose(rs, &sf)?.into_iter().collect();
            let consistent = c.values().all(|v| !v.is_negative())
                && row.iter().all(|(mu, d)| mu == &lam || c.get(mu).is_some_and(|v| *v >= BigInt::from(*d)))
                && c.keys().all(|mu| row.iter().any(|(x, _)| x == mu));
            if !consistent {
                return Ok(Step::Fail);
            }
            (row, simple)
        };
        let dom = dominant_part(rs, &simple);
        if dom.values().any(|v| v.is_negative()) {
            return Ok(Step::Fail);
        }
        rows.insert(lam, row);
        simples.insert(lam, simple);
        dominant.insert(lam, dom);
    }
    Ok(Step::Done(rows, choices))
}

struct PartialTable<'a> {
    simples: &'a BTreeMap<Weight, WeylExpansion>,
}

impl PartialTable<'_> {
    fn decompose(&self, rs: &RootSystem, s: &WeylExpansion) -> Result<Vec<(Weight, BigInt)>> {
        let mut rem = s.clone();
        let mut out = Vec::new();
        while let Some(top) = rem.top_weight(rs) {
            let m = rem.get(&top);
            let simple = self.simples.get(&top).ok_or(Error::MissingKey(top))?;
            rem.add_scaled(simple, &-m.clone());
            out.push((top, m));
        }
        Ok(out)
    }
}

/// Dimension of ch L(λ).
pub fn simple_dim(rs: &RootSystem, lambda: Weight, table: &DecompositionTable) -> Result<BigInt> {
    let s = table.simple_weyl(lambda)?;
    let mut d = BigInt::zero();
    for (mu, c) in s.iter() {
        d += c * crate::weyl::weyl_dim(rs, *mu)?;
    }
    Ok(d)
}

/// ch of a Weyl-basis sum restricted to weights, with multiplicity one at λ
/// checked: used by validators.
pub fn has_unit_top(rs: &RootSystem, s: &WeylSum<BigInt>, lambda: Weight) -> bool {
    s.top_weight(rs) == Some(lambda) && s.get(&lambda).is_one()
        && dominant_multiplicities(rs, lambda).is_ok()
}

/// Derives a table up to `bound`, settling open entries by the rank of the
/// contravariant form only. Fails if some entry stays open.
pub fn derive_table(kind: Kind, p: i64, bound: i64, max_words: usize) -> Result<DecompositionTable> {
    let rs = RootSystem::get(kind);
    let ws = |l, m| crate::shapovalov::simple_weight_multiplicity(rs, p, l, m, max_words).ok().flatten();
    let rule = |_, _| None;
    let d = derive_from_sum_formula(kind, p, bound, &Resolver { weight_space: &ws, rule: &rule })?;
    if let Some(c) = d.choices.iter().find(|c| c.source == Source::Open) {
        return Err(Error::Data(format!("{kind} p={p}: entry [{}:{}] left open", c.row, c.factor)));
    }
    DecompositionTable::new(kind, p, d.rows)
}
