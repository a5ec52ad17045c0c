//! Weyl characters (two independent algorithms), dimensions, signed
//! characters at arbitrary weights, and the Jantzen sum formula.

use crate::character::{CharacterOf, WeylSum};
use crate::{Coefficient, Error, Kind, Result, RootSystem, Weight};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

type DomMults = Arc<BTreeMap<Weight, i64>>;

fn cache() -> &'static Mutex<HashMap<(Kind, Weight), DomMults>> {
    static C: OnceLock<Mutex<HashMap<(Kind, Weight), DomMults>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Dominant weight multiplicities of χ(λ) by Freudenthal's recursion (cached).
pub fn dominant_multiplicities(rs: &RootSystem, lambda: Weight) -> Result<DomMults> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    if let Some(m) = cache().lock().unwrap().get(&(rs.kind, lambda)) {
        return Ok(m.clone());
    }
    let m = Arc::new(freudenthal(rs, lambda));
    cache().lock().unwrap().insert((rs.kind, lambda), m.clone());
    Ok(m)
}

fn freudenthal(rs: &RootSystem, lambda: Weight) -> BTreeMap<Weight, i64> {
    let rho = rs.rho();
    let top = rs.scaled_form(lambda + rho, lambda + rho);
    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    for mu in rs.dominant_weights_below(lambda) {
        if mu == lambda {
            mult.insert(mu, 1);
            continue;
        }
        let mut num: i64 = 0;
        for &alpha in &rs.positive_roots {
            let mut nu = mu + alpha;
            loop {
                let d = rs.dominant_conjugate(nu);
                match mult.get(&d) {
                    Some(&m) => num += m * rs.scaled_form(nu, alpha),
                    None => break,
                }
                nu += alpha;
            }
        }
        let den = top - rs.scaled_form(mu + rho, mu + rho);
        assert!(den > 0 && (2 * num) % den == 0, "Freudenthal division at {mu}");
        let m = 2 * num / den;
        if m != 0 {
            mult.insert(mu, m);
        }
    }
    mult
}

/// Expands dominant multiplicities to the full W-invariant character.
pub fn expand_orbits<C: Coefficient>(rs: &RootSystem, dom: &BTreeMap<Weight, C>) -> CharacterOf<C> {
    let mut out = CharacterOf::new();
    for (mu, c) in dom {
        for w in rs.orbit(*mu) {
            out.add_term(w, c.clone());
        }
    }
    out
}

/// χ(λ) for dominant λ, via Freudenthal.
pub fn weyl_character<C: Coefficient>(rs: &RootSystem, lambda: Weight) -> Result<CharacterOf<C>> {
    let dom = dominant_multiplicities(rs, lambda)?;
    let conv: BTreeMap<Weight, C> =
        dom.iter().map(|(w, &m)| (*w, C::from_i64(m).unwrap())).collect();
    Ok(expand_orbits(rs, &conv))
}

/// χ(λ) for dominant λ as the exact quotient of the alternating sum
/// Σ_w sgn(w) e(w(λ+ρ)) by the Weyl denominator.
pub fn weyl_character_alternating<C: Coefficient>(
    rs: &RootSystem,
    lambda: Weight,
) -> Result<CharacterOf<C>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    let rho = rs.rho();
    let mut num: CharacterOf<C> = CharacterOf::new();
    for w in &rs.weyl_group {
        num.add_term(w.apply(lambda + rho), C::from_i64(w.sign()).unwrap());
    }
    // Σ sgn(w) e(wρ) = e(ρ) Π (1 − e(−α)).
    for i in 0..rs.num_positive_roots() {
        num = divide_one_minus(rs, &num, i)?;
    }
    Ok(num.shift(-rho))
}

/// Exact quotient of `n` by (1 − e(−α)) for the `i`-th positive root.
fn divide_one_minus<C: Coefficient>(
    rs: &RootSystem,
    n: &CharacterOf<C>,
    i: usize,
) -> Result<CharacterOf<C>> {
    let alpha = rs.positive_roots[i];
    let k = rs.root_coordinates(i);
    let j = k.iter().position(|&x| x != 0).unwrap();
    let step = rs.scale() * k[j];
    // Group the support into α-strings; t is the position along the string.
    let mut strings: BTreeMap<Weight, Vec<(i64, C)>> = BTreeMap::new();
    for (w, c) in n.iter() {
        let t = rs.scaled_root_coords(*w)[j].div_euclid(step);
        strings.entry(*w - t * alpha).or_default().push((t, c.clone()));
    }
    let mut q = CharacterOf::new();
    for (base, mut terms) in strings {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let (tmax, tmin) = (terms[0].0, terms[terms.len() - 1].0);
        let mut acc = C::zero();
        let mut it = terms.into_iter().peekable();
        for t in (tmin..=tmax).rev() {
            while let Some((_, c)) = it.next_if(|x| x.0 == t) {
                acc = acc + c;
            }
            q.add_term(base + t * alpha, acc.clone());
        }
        if !acc.is_zero() {
            return Err(Error::NotDivisible(base + tmin * alpha));
        }
    }
    Ok(q)
}

/// Weyl's dimension formula Π ⟨λ+ρ,α∨⟩ / ⟨ρ,α∨⟩.
pub fn weyl_dim(rs: &RootSystem, lambda: Weight) -> Result<BigInt> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    Ok(signed_weyl_dim(rs, lambda))
}

/// The same product evaluated at any weight (the dimension of the signed χ).
pub fn signed_weyl_dim(rs: &RootSystem, lambda: Weight) -> BigInt {
    let rho = rs.rho();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..rs.num_positive_roots() {
        num *= rs.pairing_index(lambda + rho, i);
        den *= rs.pairing_index(rho, i);
    }
    num / den
}

/// Signed Weyl character χ(λ) at an arbitrary weight: ±χ of the dominant
/// dot-conjugate, or zero if λ+ρ is singular.
pub fn chi<C: Coefficient>(rs: &RootSystem, lambda: Weight) -> CharacterOf<C> {
    match rs.dot_dominant(lambda) {
        None => CharacterOf::new(),
        Some((mu, sign)) => {
            let c: CharacterOf<C> = weyl_character(rs, mu).expect("dominant");
            if sign < 0 {
                -&c
            } else {
                c
            }
        }
    }
}

/// Expands a Weyl-basis sum into a full character.
pub fn expand<C: Coefficient>(rs: &RootSystem, s: &WeylSum<C>) -> CharacterOf<C> {
    let mut dom: BTreeMap<Weight, C> = BTreeMap::new();
    add_dominant_parts(rs, s, &mut dom);
    expand_orbits(rs, &dom)
}

/// Dominant multiplicities of a Weyl-basis sum.
pub fn dominant_part<C: Coefficient>(rs: &RootSystem, s: &WeylSum<C>) -> BTreeMap<Weight, C> {
    let mut dom = BTreeMap::new();
    add_dominant_parts(rs, s, &mut dom);
    dom
}

fn add_dominant_parts<C: Coefficient>(
    rs: &RootSystem,
    s: &WeylSum<C>,
    dom: &mut BTreeMap<Weight, C>,
) {
    for (mu, c) in s.iter() {
        let d = dominant_multiplicities(rs, *mu).expect("dominant");
        for (w, &m) in d.iter() {
            let e = dom.entry(*w).or_insert_with(C::zero);
            *e = e.clone() + c.clone() * C::from_i64(m).unwrap();
        }
    }
    dom.retain(|_, c| !c.is_zero());
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(mut n: i64, p: i64) -> u32 {
    assert!(n != 0);
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Jantzen's sum Σ_{α>0} Σ_{0<mp<⟨λ+ρ,α∨⟩} ν_p(mp) χ(s_{α,mp}·λ), in the
/// Weyl-character basis.
pub fn jantzen_sum_weyl<C: Coefficient>(rs: &RootSystem, p: i64, lambda: Weight) -> Result<WeylSum<C>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    let mut out = WeylSum::new();
    for (i, &alpha) in rs.positive_roots.iter().enumerate() {
        let n = rs.pairing_index(lambda + rs.rho(), i);
        let mut mp = p;
        while mp < n {
            let nu = lambda - (n - mp) * alpha;
            out.add_chi(rs, nu, C::from_u32(valuation(mp, p)).unwrap());
            mp += p;
        }
    }
    Ok(out)
}

/// The Jantzen sum as a (virtual) character.
pub fn jantzen_sum<C: Coefficient>(rs: &RootSystem, p: i64, lambda: Weight) -> Result<CharacterOf<C>> {
    Ok(expand(rs, &jantzen_sum_weyl(rs, p, lambda)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{wt, Character};

    #[test]
    fn dims() {
        let g2 = RootSystem::get(Kind::G2);
        assert_eq!(weyl_dim(g2, wt![1, 0]).unwrap(), BigInt::from(7));
        assert_eq!(weyl_dim(g2, wt![0, 1]).unwrap(), BigInt::from(14));
        assert_eq!(weyl_dim(g2, wt![2, 2]).unwrap(), BigInt::from(729));
        let c: Character = weyl_character(g2, wt![1, 0]).unwrap();
        assert_eq!(c.dim(), BigInt::from(7));
        assert_eq!(c.get(&wt![0, 0]), BigInt::one());
    }

    #[test]
    fn trivial_character() {
        for k in Kind::ALL {
            let rs = RootSystem::get(k);
            let c: Character = weyl_character(rs, rs.zero()).unwrap();
            assert_eq!(c, Character::monomial(rs.zero()));
        }
    }

    #[test]
    fn not_dominant() {
        let g2 = RootSystem::get(Kind::G2);
        assert!(matches!(weyl_character::<i64>(g2, wt![-1, 0]), Err(Error::NotDominant(_))));
    }

    #[test]
    fn methods_agree_small() {
        for k in Kind::ALL {
            let rs = RootSystem::get(k);
            for lam in rs.dominant_weights_up_to(4) {
                let a: CharacterOf<i64> = weyl_character(rs, lam).unwrap();
                let b: CharacterOf<i64> = weyl_character_alternating(rs, lam).unwrap();
                assert_eq!(a, b, "{k} {lam}");
            }
        }
    }

    #[test]
    fn lowest_alcove_sum_vanishes() {
        let g2 = RootSystem::get(Kind::G2);
        assert!(jantzen_sum_weyl::<i64>(g2, 7, wt![0, 0]).unwrap().is_empty());
        assert!(jantzen_sum_weyl::<i64>(g2, 7, wt![1, 0]).unwrap().is_empty());
    }
}
