//! Verification procedures: hat map, inequality criteria, Steinberg-weight
//! scans, linkage lemmas, the G2 isogeny calculus and the G2, p = 7 case
//! analysis.

use crate::alcove::{linked, strongly_linked};
use crate::babyverma::RadicalTable;
use crate::cohomology::{r_ind, CohomologyValue};
use crate::decomposition::{decompose, simple_character, simple_dim, DecompositionTable};
use crate::weyl::{weyl_character, weyl_dim};
use crate::{wt, Character, Error, Kind, Result, RootSystem, Weight};
use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Least ⟨η,α0∨⟩ over dominant η with Ext¹_G(k, L(η)) ≠ 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtGapDatum {
    pub system: Kind,
    pub prime: i64,
    pub d: i64,
    pub witness: Option<Weight>,
    pub citation: String,
}

impl ExtGapDatum {
    /// d ≥ 2(p−h+1) for p ≥ h, and a witness must realize d and be linked to 0.
    pub fn check(&self) -> Result<()> {
        let rs = RootSystem::get(self.system);
        let h = rs.coxeter_number;
        if self.prime >= h && self.d < 2 * (self.prime - h + 1) {
            return Err(Error::Data(format!("{} p={}: d={} below 2(p-h+1)", self.system, self.prime, self.d)));
        }
        if let Some(eta) = self.witness {
            if rs.pairing_alpha0(eta) != self.d {
                return Err(Error::OracleMismatch {
                    context: format!("{} p={} ext gap witness", self.system, self.prime),
                    weight: eta,
                    expected: self.d.to_string(),
                    found: rs.pairing_alpha0(eta).to_string(),
                });
            }
            if !linked(rs, self.prime, eta, rs.zero()) {
                return Err(Error::Data(format!("witness {eta} is not linked to 0")));
            }
        }
        Ok(())
    }
}

/// λ̂ = 2(p^r−1)ρ + w0λ.
pub fn hat(rs: &RootSystem, p: i64, r: u32, lambda: Weight) -> Result<Weight> {
    let q = p.pow(r);
    if !lambda.is_dominant() || !lambda.is_below(q) {
        return Err(Error::NotRestricted(lambda, q));
    }
    Ok(2 * (q - 1) * rs.rho() + rs.w0().apply(lambda))
}

/// (p^{r−1}−1)ρ + p^{r−1}·λ̂ (r = 1) against the r-th hat of
/// (p^{r−1}−1)ρ + p^{r−1}λ. False when the preconditions fail.
pub fn r_reduction_identity(rs: &RootSystem, p: i64, r: u32, lambda: Weight) -> bool {
    if r < 2 {
        return false;
    }
    let q = p.pow(r - 1);
    let Ok(h1) = hat(rs, p, 1, lambda) else { return false };
    let lhs = (q - 1) * rs.rho() + q * h1;
    match hat(rs, p, r, (q - 1) * rs.rho() + q * lambda) {
        Ok(rhs) => lhs == rhs,
        Err(_) => false,
    }
}

/// p·d > 2(p−1)(h−1).
pub fn jantzen_bound_check(datum: &ExtGapDatum) -> bool {
    let h = RootSystem::get(datum.system).coxeter_number;
    datum.prime * datum.d > 2 * (datum.prime - 1) * (h - 1)
}

/// A weight γ of St_1 for which the inequality
/// ⟨γ,α_i∨⟩ ≤ −2p − ⟨σ0,α̃∨⟩ − ⟨μ,α_i∨⟩ holds with γ + μ = pσ1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanViolation {
    pub gamma: Weight,
    pub simple: usize,
    pub mu: Weight,
    pub sigma0: Weight,
    pub sigma1: Weight,
    /// s_{α_i}·σ1.
    pub reflected: Weight,
    /// (p−1)ρ + μ.
    pub target: Weight,
}

impl ScanViolation {
    /// Recomputes both defining conditions from γ and μ.
    pub fn holds(&self, rs: &RootSystem, p: i64) -> bool {
        self.gamma + self.mu == p * self.sigma1
            && self.gamma[self.simple] <= -2 * p - rs.pairing_alpha_tilde(self.sigma0) - self.mu[self.simple]
            && self.target == (p - 1) * rs.rho() + self.mu
    }
}

/// Restricted weights μ whose target (p−1)ρ + μ the scan has to look at:
/// all of X_1, cut down to the principal block when p ≥ h.
pub fn scan_weights(rs: &RootSystem, p: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut k = vec![0i64; rs.rank];
    loop {
        let mu = Weight::new(&k);
        if p < rs.coxeter_number || linked(rs, p, (p - 1) * rs.rho() + mu, rs.zero()) {
            out.push(mu);
        }
        let mut i = rs.rank;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            k[i] += 1;
            if k[i] < p {
                break;
            }
            k[i] = 0;
        }
    }
}

/// Support of ch St_1 = χ((p−1)ρ).
pub fn steinberg_support(rs: &RootSystem, p: i64) -> Vec<Weight> {
    let st: Character = weyl_character(rs, (p - 1) * rs.rho()).expect("(p-1)ρ is dominant");
    st.iter().filter(|(_, c)| c.is_positive()).map(|(w, _)| *w).collect()
}

/// min ⟨γ,α_i∨⟩ over the support of St_1, per simple root.
pub fn steinberg_min_pairings(rs: &RootSystem, p: i64) -> Vec<i64> {
    let support = steinberg_support(rs, p);
    (0..rs.rank).map(|i| support.iter().map(|g| g[i]).min().unwrap()).collect()
}

/// Every (μ, γ, α_i) with γ + μ ∈ pX satisfying the inequality. Since
/// γ + μ − wσ0 ∈ pX forces σ0 = 0 here, σ1 = (γ+μ)/p. Ordered by μ, then
/// γ, then i.
pub fn steinberg_weight_scan(rs: &RootSystem, p: i64) -> Vec<ScanViolation> {
    let support = steinberg_support(rs, p);
    let mut out = Vec::new();
    for mu in scan_weights(rs, p) {
        for &gamma in &support {
            let Some(sigma1) = (gamma + mu).div_exact(p) else { continue };
            let sigma0 = rs.zero();
            for i in 0..rs.rank {
                if gamma[i] > -2 * p - rs.pairing_alpha_tilde(sigma0) - mu[i] {
                    continue;
                }
                let simple = rs.positive_root_index(rs.simple_roots[i]).unwrap();
                out.push(ScanViolation {
                    gamma,
                    simple: i,
                    mu,
                    sigma0,
                    sigma1,
                    reflected: rs.dot_reflect(simple, sigma1),
                    target: (p - 1) * rs.rho() + mu,
                });
            }
        }
    }
    out
}

/// For one scan row with R¹ind σ1 = ∇(τ): the dominant σ ≠ τ with
/// τ ↑-linked below σ and pσ ≤ (p−1)ρ + μ. A composition factor L(0)⊗pσ
/// that could cancel against ∇(τ) needs such a σ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CancellationCheck {
    pub tau: Weight,
    pub mu: Weight,
    pub target: Weight,
    /// Least dominant weight above τ and linked to it, other than τ.
    pub smallest_linked: Option<Weight>,
    pub candidates: Vec<Weight>,
}

impl CancellationCheck {
    pub fn clear(&self) -> bool {
        self.candidates.is_empty()
    }
}

pub fn no_cancellation_check(rs: &RootSystem, p: i64, violations: &[ScanViolation]) -> Vec<CancellationCheck> {
    let mut out = Vec::new();
    for v in violations {
        let tau = v.reflected;
        let above = |bound: i64| -> Vec<Weight> {
            rs.dominant_weights_up_to(bound)
                .into_iter()
                .filter(|&s| s != tau && rs.dominance_leq(tau, s) && linked(rs, p, s, tau))
                .collect()
        };
        let smallest_linked = if tau.is_dominant() {
            above(rs.pairing_alpha0(tau) + 2 * p * rs.coxeter_number)
                .into_iter()
                .min_by_key(|w| (rs.scaled_height(*w), *w))
        } else {
            None
        };
        let candidates = if tau.is_dominant() {
            above(rs.pairing_alpha0(v.target) / p + 1)
                .into_iter()
                .filter(|&s| rs.dominance_leq(p * s, v.target))
                .collect()
        } else {
            Vec::new()
        };
        out.push(CancellationCheck { tau, mu: v.mu, target: v.target, smallest_linked, candidates });
    }
    out
}

/// Least ⟨μ,α0∨⟩ over nonzero dominant μ ∈ W_p·0 with ⟨μ,α0∨⟩ ≤ 4h,
/// with every weight attaining it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinLinked {
    pub pairing: i64,
    pub witnesses: Vec<Weight>,
}

pub fn min_linked_pairing(rs: &RootSystem, p: i64) -> Result<MinLinked> {
    let found: Vec<Weight> = rs
        .dominant_weights_up_to(4 * rs.coxeter_number)
        .into_iter()
        .filter(|&mu| !mu.is_zero() && linked(rs, p, mu, rs.zero()))
        .collect();
    let pairing = found.iter().map(|&m| rs.pairing_alpha0(m)).min().ok_or(Error::SearchExhausted)?;
    let witnesses = found.into_iter().filter(|&m| rs.pairing_alpha0(m) == pairing).collect();
    Ok(MinLinked { pairing, witnesses })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageReport {
    pub top: Weight,
    /// (λ, ⟨λ,α0∨⟩) for every dominant λ with (p−1)ρ + λ ↑ top.
    pub linked: Vec<(Weight, i64)>,
    pub exception: Weight,
    pub bound: i64,
}

/// A3, p = 5: every dominant λ with 4ρ + λ ↑ 8ρ − α0 = (7,8,7) has
/// ⟨λ,α0∨⟩ < 10, except λ = 4ρ − α0 = (3,4,3).
pub fn a3p5_linkage_check() -> Result<LinkageReport> {
    let rs = RootSystem::get(Kind::A3);
    let p = 5;
    let base = (p - 1) * rs.rho();
    let top = 2 * base - rs.highest_short_root;
    let exception = base - rs.highest_short_root;
    let bound = p * (rs.coxeter_number - 2);
    let mut out = Vec::new();
    for nu in rs.dominant_weights_below(top) {
        let lambda = nu - base;
        if !lambda.is_dominant() || !strongly_linked(rs, p, nu, top) {
            continue;
        }
        let pairing = rs.pairing_alpha0(lambda);
        if lambda != exception && pairing >= bound {
            return Err(Error::CounterexampleFound(lambda));
        }
        out.push((lambda, pairing));
    }
    out.sort();
    Ok(LinkageReport { top, linked: out, exception, bound })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsogenyReport {
    /// (a,b) with dim L(a,b), each factorized as L(a,0)·L(b,0)^{(1/2)}.
    pub factorizations: Vec<(Weight, BigInt)>,
    pub half_restricted: Vec<Weight>,
}

/// G2, p = 3: ch L(a,b) = ch L(a,0)·ch L(b,0)^{(1/2)} for 0 ≤ a,b ≤ 2,
/// L(λ) = ∇(λ) on X_{1/2}, and dim L(2,2) = 27².
pub fn g2p3_isogeny_checks(table: &DecompositionTable) -> Result<IsogenyReport> {
    let rs = RootSystem::get(Kind::G2);
    if table.kind != Kind::G2 || table.p != 3 {
        return Err(Error::WrongSystem { expected: "G2 p=3".into(), got: format!("{} p={}", table.kind, table.p) });
    }
    let half = [wt![0, 0], wt![1, 0], wt![2, 0]];
    for &l in &half {
        if simple_character(rs, 3, l, table)? != weyl_character::<BigInt>(rs, l)? {
            return Err(Error::CharacterMismatch(l));
        }
    }
    let mut factorizations = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            let l = wt![a, b];
            let lhs = simple_character(rs, 3, l, table)?;
            let first = simple_character(rs, 3, wt![a, 0], table)?;
            let second = simple_character(rs, 3, wt![b, 0], table)?.g2_half_twist(rs)?;
            if lhs != first.tensor(&second) {
                return Err(Error::CharacterMismatch(l));
            }
            factorizations.push((l, lhs.dim()));
        }
    }
    let st = simple_dim(rs, wt![2, 2], table)?;
    if st != BigInt::from(729) {
        return Err(Error::OracleMismatch {
            context: "dim L(2,2)".into(),
            weight: wt![2, 2],
            expected: "729".into(),
            found: st.to_string(),
        });
    }
    Ok(IsogenyReport { factorizations, half_restricted: half.to_vec() })
}

/// σ1 values occurring in the radical tables (column for μ + 7ρ).
pub fn occurring_sigma1(tables: &[RadicalTable]) -> BTreeSet<Weight> {
    tables.iter().flat_map(|t| t.entries.iter().map(|e| e.shifted_sigma1)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sigma1Classification {
    /// Every occurring σ1 with ⟨σ1,α∨⟩ ≤ −2 for some simple α, with R^1 ind σ1.
    pub r1: Vec<(Weight, CohomologyValue)>,
    pub r1_nonzero: Vec<Weight>,
    /// Composition factors of ∇(σ1) for every dominant occurring σ1.
    pub nabla: Vec<(Weight, Vec<(Weight, u64)>)>,
    pub nabla_nonsimple: Vec<Weight>,
}

pub fn g2p7_sigma1_classification(tables: &[RadicalTable], decomp: &DecompositionTable) -> Result<Sigma1Classification> {
    let rs = RootSystem::get(Kind::G2);
    let mut out = Sigma1Classification { r1: vec![], r1_nonzero: vec![], nabla: vec![], nabla_nonsimple: vec![] };
    for s in occurring_sigma1(tables) {
        if s.coords().iter().any(|&x| x <= -2) {
            let v = r_ind(rs, s, 1).value;
            match v {
                CohomologyValue::Unknown => return Err(Error::UnknownCohomology(s)),
                CohomologyValue::Zero => {}
                CohomologyValue::Costandard(_) => out.r1_nonzero.push(s),
            }
            out.r1.push((s, v));
        }
        if s.is_dominant() {
            let f = nabla_factors(rs, s, decomp)?;
            if f.len() > 1 || f[0].1 > 1 {
                out.nabla_nonsimple.push(s);
            }
            out.nabla.push((s, f));
        }
    }
    Ok(out)
}

/// [∇(λ):L(μ)] for dominant λ, via the decomposition data.
pub fn nabla_factors(rs: &RootSystem, lambda: Weight, decomp: &DecompositionTable) -> Result<Vec<(Weight, u64)>> {
    let ch: Character = weyl_character(rs, lambda)?;
    decompose(rs, &ch, decomp)?
        .into_iter()
        .map(|(w, m)| u64::try_from(m).map(|m| (w, m)).map_err(|_| Error::NegativityDetected(w)))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Resolution {
    /// σ̃1 lies in a radical layer strictly nearer the head than σ1.
    HigherLayer,
    /// Same layer, and no weight that a connecting B-module would need occurs.
    SameLayerChainAbsent,
    Unresolved,
}

impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Resolution::HigherLayer => "higher layer",
            Resolution::SameLayerChainAbsent => "same layer, chain absent",
            Resolution::Unresolved => "unresolved",
        })
    }
}

/// A co-occurrence of σ1 and σ̃1 in one isotypic component L(σ0) of one
/// alcove's table. Layer 0 is the head.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseFinding {
    pub case_id: u8,
    pub alcove: u32,
    pub sigma0: Weight,
    pub sigma1: Weight,
    pub sigma1_tilde: Weight,
    pub layer_sigma1: u32,
    pub layer_sigma1_tilde: u32,
    pub resolution: Resolution,
}

impl fmt::Display for CaseFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "case {} alcove {} σ0={} σ1={} (layer {}) σ̃1={} (layer {}): {}",
            self.case_id,
            self.alcove,
            self.sigma0,
            self.sigma1,
            self.layer_sigma1,
            self.sigma1_tilde,
            self.layer_sigma1_tilde,
            self.resolution
        )
    }
}

/// One of the four pairs (σ1, σ̃1) where ∇(σ1) is not simple and R^1 ind σ̃1
/// could receive a nonzero non-isomorphic map from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasePattern {
    pub case_id: u8,
    pub sigma1: Weight,
    pub sigma1_tilde: Weight,
    pub sigma0: Vec<Weight>,
    /// Weights whose absence from the same component rules out the
    /// connecting B-module.
    pub chain: Vec<Weight>,
}

pub fn g2p7_case_patterns() -> Vec<CasePattern> {
    let pat = |case_id, sigma1, sigma1_tilde, sigma0: &[Weight], chain: &[Weight]| CasePattern {
        case_id,
        sigma1,
        sigma1_tilde,
        sigma0: sigma0.to_vec(),
        chain: chain.to_vec(),
    };
    let z = wt![0, 0];
    vec![
        pat(1, wt![2, 0], wt![3, -2], &[z], &[]),
        pat(2, wt![2, 0], wt![-2, 1], &[z, wt![2, 0], wt![1, 1], wt![1, 2], wt![2, 2]], &[wt![-5, 3]]),
        pat(3, wt![1, 1], wt![-4, 3], &[z], &[wt![-7, 5], wt![-5, 4], wt![-3, 3]]),
        pat(4, wt![1, 1], wt![5, -2], &[z], &[wt![7, -3]]),
    ]
}

/// Pairs (σ1, σ̃1) of occurring weights with ∇(σ1) not simple,
/// R^1 ind σ̃1 = ∇(τ), τ ≠ σ1 and [∇(σ1):L(τ)] ≠ 0.
pub fn g2p7_concern_pairs(class: &Sigma1Classification) -> Vec<(Weight, Weight)> {
    let mut out = Vec::new();
    for (s, f) in &class.nabla {
        if !class.nabla_nonsimple.contains(s) {
            continue;
        }
        for (t, v) in &class.r1 {
            if let CohomologyValue::Costandard(tau) = v {
                if tau != s && f.iter().any(|(w, _)| w == tau) {
                    out.push((*s, *t));
                }
            }
        }
    }
    out
}

/// Locates every co-occurrence of a concern pair in a common isotypic
/// component and resolves it by layers and chain absence.
pub fn g2p7_case_analysis(tables: &[RadicalTable], decomp: &DecompositionTable) -> Result<Vec<CaseFinding>> {
    let class = g2p7_sigma1_classification(tables, decomp)?;
    let patterns = g2p7_case_patterns();
    for (s, t) in g2p7_concern_pairs(&class) {
        if !patterns.iter().any(|c| c.sigma1 == s && c.sigma1_tilde == t) {
            return Err(Error::UnresolvedCase(format!("pair σ1={s}, σ̃1={t} matches no known case")));
        }
    }
    let mut out = Vec::new();
    for t in tables {
        let mut components: BTreeMap<Weight, Vec<(u32, Weight)>> = BTreeMap::new();
        for e in &t.entries {
            components.entry(e.sigma0).or_default().push((e.layer, e.shifted_sigma1));
        }
        for c in &patterns {
            for (s0, comp) in &components {
                let layers = |w: Weight| comp.iter().filter(|x| x.1 == w).map(|x| x.0).collect::<BTreeSet<_>>();
                let (l1, l2) = (layers(c.sigma1), layers(c.sigma1_tilde));
                for &a in &l1 {
                    for &b in &l2 {
                        let chain_absent = c.chain.iter().all(|w| layers(*w).is_empty());
                        let resolution = if !c.sigma0.contains(s0) {
                            Resolution::Unresolved
                        } else if b < a {
                            Resolution::HigherLayer
                        } else if b == a && !c.chain.is_empty() && chain_absent {
                            Resolution::SameLayerChainAbsent
                        } else {
                            Resolution::Unresolved
                        };
                        let f = CaseFinding {
                            case_id: c.case_id,
                            alcove: t.alcove,
                            sigma0: *s0,
                            sigma1: c.sigma1,
                            sigma1_tilde: c.sigma1_tilde,
                            layer_sigma1: a,
                            layer_sigma1_tilde: b,
                            resolution,
                        };
                        if resolution == Resolution::Unresolved {
                            return Err(Error::UnresolvedCase(f.to_string()));
                        }
                        out.push(f);
                    }
                }
            }
        }
    }
    out.sort_by_key(|f| (f.case_id, f.alcove, f.sigma0, f.layer_sigma1, f.layer_sigma1_tilde));
    Ok(out)
}

/// ch ∇(λ̂) − ch L(λ), the character of the kernel of ∇(λ̂) → L(λ).
pub fn residual_character(rs: &RootSystem, p: i64, lambda: Weight, decomp: &DecompositionTable) -> Result<Character> {
    let h = hat(rs, p, 1, lambda)?;
    let mut c: Character = weyl_character(rs, h)?;
    c.add_assign_scaled(&simple_character(rs, p, lambda, decomp)?, &BigInt::from(-1));
    if let Some(w) = c.first_negative() {
        return Err(Error::NegativityDetected(w));
    }
    Ok(c)
}

/// dim ∇(λ̂) − dim L(λ).
pub fn residual_dim(rs: &RootSystem, p: i64, lambda: Weight, decomp: &DecompositionTable) -> Result<BigInt> {
    Ok(weyl_dim(rs, hat(rs, p, 1, lambda)?)? - simple_dim(rs, lambda, decomp)?)
}

/// A composition factor L(μ_i)⊗pσ_i of a G_1B-module together with the
/// radical layer it lies in (0 = head). Factors in deeper layers come
/// earlier in a composition series; factors in one layer may come in
/// either order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LayeredFactor {
    pub mu: Weight,
    pub sigma: Weight,
    pub layer: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FiltrationCondition {
    CondA,
    CondB,
    CondCCandidate,
    Inconclusive,
}

impl fmt::Display for FiltrationCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiltrationCondition::CondA => "condition (a)",
            FiltrationCondition::CondB => "condition (b)",
            FiltrationCondition::CondCCandidate => "condition (c) candidate",
            FiltrationCondition::Inconclusive => "inconclusive",
        })
    }
}

/// Factors of the radical table for the module at μ + 7ρ, one per unit of
/// multiplicity.
pub fn layered_factors(t: &RadicalTable) -> Vec<LayeredFactor> {
    let mut out = Vec::new();
    for e in &t.entries {
        for _ in 0..e.mult {
            out.push(LayeredFactor { mu: e.sigma0, sigma: e.shifted_sigma1, layer: e.layer });
        }
    }
    out
}

/// Factors without layer information: every order is possible.
pub fn unlayered_factors(factors: &[(Weight, Weight, u64)]) -> Vec<LayeredFactor> {
    let mut out = Vec::new();
    for &(mu, sigma, m) in factors {
        for _ in 0..m {
            out.push(LayeredFactor { mu, sigma, layer: 0 });
        }
    }
    out
}

/// Which condition for ind_B^G to have a good (p,1)-filtration the factor
/// list meets. Hom_G(∇(σ_i), ∇(τ)) = 0 is certified when σ_i is not dominant
/// or [∇(σ_i):L(τ)] = 0. A nonzero map is forced to be an isomorphism when
/// ∇(σ_i) is simple, or when τ = σ_i since L(τ) occurs once in ∇(τ). Without decomposition data nothing beyond (a) is
/// certified.
pub fn filtration_condition_check(
    rs: &RootSystem,
    factors: &[LayeredFactor],
    decomp: Option<&DecompositionTable>,
) -> Result<FiltrationCondition> {
    let r1 = |s: Weight| match r_ind(rs, s, 1).value {
        CohomologyValue::Unknown => Err(Error::UnknownCohomology(s)),
        v => Ok(v),
    };
    let mut any_r1 = false;
    for f in factors {
        if r1(f.sigma)? != CohomologyValue::Zero {
            any_r1 = true;
        }
    }
    if !any_r1 {
        return Ok(FiltrationCondition::CondA);
    }
    let Some(decomp) = decomp else { return Ok(FiltrationCondition::Inconclusive) };
    let mut cache: BTreeMap<Weight, Vec<(Weight, u64)>> = BTreeMap::new();
    let mut b_holds = true;
    let mut c_holds = true;
    for (j, fj) in factors.iter().enumerate() {
        let CohomologyValue::Costandard(tau) = r1(fj.sigma)? else { continue };
        for (i, fi) in factors.iter().enumerate() {
            if i == j || fi.mu != fj.mu || fj.layer < fi.layer || !fi.sigma.is_dominant() {
                continue;
            }
            if !cache.contains_key(&fi.sigma) {
                cache.insert(fi.sigma, nabla_factors(rs, fi.sigma, decomp)?);
            }
            let nab = &cache[&fi.sigma];
            if nab.iter().all(|(w, _)| *w != tau) {
                continue;
            }
            b_holds = false;
            if tau != fi.sigma && !(nab.len() == 1 && nab[0].1 == 1) {
                c_holds = false;
            }
        }
    }
    if b_holds {
        return Ok(FiltrationCondition::CondB);
    }
    for f in factors {
        match r_ind(rs, f.sigma, 2).value {
            CohomologyValue::Zero => {}
            CohomologyValue::Unknown => return Err(Error::UnknownCohomology(f.sigma)),
            CohomologyValue::Costandard(_) => c_holds = false,
        }
    }
    Ok(if c_holds { FiltrationCondition::CondCCandidate } else { FiltrationCondition::Inconclusive })
}
