//! The affine Weyl group W_p under the dot action: alcoves, linkage, boxes
//! and the signed distance between alcoves.

use crate::{Error, Result, RootSystem, Weight};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

/// s_{α,np}·λ = λ − (⟨λ+ρ,α∨⟩ − np)α for a positive root α.
pub fn affine_reflect(rs: &RootSystem, alpha: Weight, n: i64, p: i64, lambda: Weight) -> Result<Weight> {
    let i = rs.positive_root_index(alpha).ok_or(Error::NotARoot(alpha))?;
    Ok(affine_reflect_index(rs, i, n, p, lambda))
}

pub fn affine_reflect_index(rs: &RootSystem, i: usize, n: i64, p: i64, lambda: Weight) -> Weight {
    let k = rs.pairing_index(lambda + rs.rho(), i) - n * p;
    lambda - k * rs.positive_roots[i]
}

/// Location of a p-alcove: n_α with n_α·p < ⟨x+ρ,α∨⟩ < (n_α+1)·p, one entry
/// per positive root in the root system's order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlcoveId {
    pub levels: Vec<i64>,
    pub p: i64,
}

impl fmt::Display for AlcoveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} levels={:?}", self.p, self.levels)
    }
}

pub fn is_p_regular(rs: &RootSystem, lambda: Weight, p: i64) -> bool {
    (0..rs.num_positive_roots()).all(|i| rs.pairing_index(lambda + rs.rho(), i).rem_euclid(p) != 0)
}

pub fn alcove_of(rs: &RootSystem, lambda: Weight, p: i64) -> Result<AlcoveId> {
    let mut levels = Vec::with_capacity(rs.num_positive_roots());
    for i in 0..rs.num_positive_roots() {
        let x = rs.pairing_index(lambda + rs.rho(), i);
        if x.rem_euclid(p) == 0 {
            return Err(Error::OnWall { weight: lambda, root: rs.positive_roots[i], level: x / p });
        }
        levels.push(x.div_euclid(p));
    }
    Ok(AlcoveId { levels, p })
}

/// λ and μ lie in the same W_p dot-orbit.
pub fn linked(rs: &RootSystem, p: i64, lambda: Weight, mu: Weight) -> bool {
    let (x, y) = (lambda + rs.rho(), mu + rs.rho());
    rs.weyl_group.iter().any(|w| match rs.root_lattice_coords(w.apply(x) - y) {
        Some(c) => c.iter().all(|v| v % p == 0),
        None => false,
    })
}

/// Strong linkage λ ↑ μ for dominant weights, by memoized downward search
/// from μ through single affine reflections, pruned to the dominance
/// interval [λ, μ].
pub fn strongly_linked(rs: &RootSystem, p: i64, lambda: Weight, mu: Weight) -> bool {
    if lambda == mu {
        return true;
    }
    if !rs.dominance_leq(lambda, mu) || !linked(rs, p, lambda, mu) {
        return false;
    }
    let mut memo = HashMap::new();
    search_down(rs, p, lambda, mu, &mut memo)
}

fn search_down(rs: &RootSystem, p: i64, target: Weight, cur: Weight, memo: &mut HashMap<Weight, bool>) -> bool {
    if cur == target {
        return true;
    }
    if let Some(&v) = memo.get(&cur) {
        return v;
    }
    let found = reflections_between(rs, p, cur, target)
        .into_iter()
        .any(|nu| search_down(rs, p, target, nu, memo));
    memo.insert(cur, found);
    found
}

/// All s_{α,np}·λ strictly below λ and still ≥ `floor` in dominance order.
pub fn reflections_between(rs: &RootSystem, p: i64, lambda: Weight, floor: Weight) -> Vec<Weight> {
    let mut out = BTreeSet::new();
    for (i, &alpha) in rs.positive_roots.iter().enumerate() {
        let x = rs.pairing_index(lambda + rs.rho(), i);
        // s_{α,np}·λ = λ − kα with k = x − np ≡ x (mod p), k > 0.
        let mut k = x.rem_euclid(p);
        if k == 0 {
            k = p;
        }
        loop {
            let nu = lambda - k * alpha;
            if !rs.dominance_leq(floor, nu) {
                break;
            }
            out.insert(nu);
            k += p;
        }
    }
    out.into_iter().collect()
}

/// A weight ν with ν + ρ ∈ pX.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpecialPoint {
    pub nu: Weight,
}

impl SpecialPoint {
    pub fn new(rs: &RootSystem, p: i64, nu: Weight) -> Result<Self> {
        if (nu + rs.rho()).coords().iter().all(|x| x % p == 0) {
            Ok(SpecialPoint { nu })
        } else {
            Err(Error::Data(format!("{nu} is not special for p={p}")))
        }
    }

    /// ν̃ with ν = −ρ + p·ν̃.
    pub fn tilde(&self, rs: &RootSystem, p: i64) -> Weight {
        (self.nu + rs.rho()).div_exact(p).unwrap()
    }
}

/// The special point ν with λ in the open box ⟨ν,α_i∨⟩ < ⟨λ,α_i∨⟩ < ⟨ν,α_i∨⟩ + p.
pub fn box_of(rs: &RootSystem, p: i64, lambda: Weight) -> Result<SpecialPoint> {
    let mut nu = vec![0; rs.rank];
    for i in 0..rs.rank {
        let x = lambda[i] + 1;
        if x.rem_euclid(p) == 0 {
            return Err(Error::OnBoxWall(lambda));
        }
        nu[i] = x.div_euclid(p) * p - 1;
    }
    Ok(SpecialPoint { nu: Weight::new(&nu) })
}

/// The p-regular weights inside the box of ν, each with its alcove,
/// in coordinate order.
pub fn box_regular_weights(rs: &RootSystem, p: i64, nu: SpecialPoint) -> Vec<(Weight, AlcoveId)> {
    let mut out = Vec::new();
    let mut k = vec![1i64; rs.rank];
    loop {
        let w = nu.nu + Weight::new(&k);
        if let Ok(a) = alcove_of(rs, w, p) {
            out.push((w, a));
        }
        let mut i = 0;
        loop {
            if i == rs.rank {
                return out;
            }
            k[i] += 1;
            if k[i] < p {
                break;
            }
            k[i] = 1;
            i += 1;
        }
    }
}

/// All alcoves meeting the box of ν. Each contains a unique p-regular
/// integral weight, so they are read off from the regular weights.
pub fn box_alcoves(rs: &RootSystem, p: i64, nu: SpecialPoint) -> Vec<AlcoveId> {
    let set: BTreeSet<AlcoveId> = box_regular_weights(rs, p, nu).into_iter().map(|(_, a)| a).collect();
    set.into_iter().collect()
}

/// The unique p-regular weight of each alcove in a box.
pub fn box_alcove_weights(rs: &RootSystem, p: i64, nu: SpecialPoint) -> BTreeMap<AlcoveId, Vec<Weight>> {
    let mut m: BTreeMap<AlcoveId, Vec<Weight>> = BTreeMap::new();
    for (w, a) in box_regular_weights(rs, p, nu) {
        m.entry(a).or_default().push(w);
    }
    m
}

/// w_ν·λ = −λ + 2ν.
pub fn w_nu_dot(nu: SpecialPoint, lambda: Weight) -> Weight {
    2 * nu.nu - lambda
}

/// Signed count of affine hyperplanes separating A and C, each counted +1
/// when C lies on the side of larger ⟨x+ρ,α∨⟩.
pub fn distance(a: &AlcoveId, c: &AlcoveId) -> i64 {
    assert_eq!(a.p, c.p);
    a.levels.iter().zip(&c.levels).map(|(x, y)| y - x).sum()
}

/// Bundled G2 alcove labels: label ↦ the p-regular weight of that alcove.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct G2AlcoveLabels {
    pub labels: BTreeMap<u32, Weight>,
}

impl G2AlcoveLabels {
    /// Label of an alcove, up to translation by p·X (box translation).
    pub fn label(&self, rs: &RootSystem, a: &AlcoveId) -> Result<u32> {
        let simple: Vec<usize> =
            rs.simple_roots.iter().map(|&s| rs.positive_root_index(s).unwrap()).collect();
        for (&l, &w) in &self.labels {
            let b = alcove_of(rs, w, a.p)?;
            let t = Weight::new(&simple.iter().map(|&i| a.levels[i] - b.levels[i]).collect::<Vec<_>>());
            if (0..rs.num_positive_roots()).all(|j| a.levels[j] - b.levels[j] == rs.pairing_index(t, j)) {
                return Ok(l);
            }
        }
        Err(Error::UnlabeledAlcove(a.to_string()))
    }

    pub fn label_of_weight(&self, rs: &RootSystem, p: i64, lambda: Weight) -> Result<u32> {
        self.label(rs, &alcove_of(rs, lambda, p)?)
    }

    pub fn alcove_from_label(&self, rs: &RootSystem, p: i64, label: u32) -> Result<AlcoveId> {
        let w = self.labels.get(&label).ok_or_else(|| Error::UnlabeledAlcove(format!("label {label}")))?;
        alcove_of(rs, *w, p)
    }

    pub fn weight(&self, label: u32) -> Option<Weight> {
        self.labels.get(&label).copied()
    }
}
