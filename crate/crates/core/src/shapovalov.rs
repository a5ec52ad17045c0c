//! Weight multiplicities of simple modules in characteristic p from the
//! contravariant form on the Weyl module.
//!
//! Δ(λ) over Z is spanned by monomials F_{i1}^{(a1)}⋯F_{ik}^{(ak)}v in the
//! divided powers of the simple root vectors. The form is computed on plain
//! words in the F_i by moving each E_i to the right, and dim L(λ)_μ is the
//! rank mod p of the Gram matrix of the monomials of weight μ.

use crate::{Error, Result, RootSystem, Weight};
use std::collections::HashMap;

/// dim L(λ)_μ over a field of characteristic p. Returns `None` when the
/// number of plain words of weight λ − μ exceeds `max_words`.
pub fn simple_weight_multiplicity(
    rs: &RootSystem,
    p: i64,
    lambda: Weight,
    mu: Weight,
    max_words: usize,
) -> Result<Option<usize>> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda));
    }
    let Some(beta) = rs.root_lattice_coords(lambda - mu) else { return Ok(Some(0)) };
    if beta.iter().any(|&b| b < 0) {
        return Ok(Some(0));
    }
    let words: usize = multinomial(&beta);
    if words > max_words {
        return Ok(None);
    }
    let monomials = divided_monomials(&beta);
    let vp: Vec<u32> = monomials.iter().map(|m| m.iter().map(|&(_, a)| vp_factorial(a, p)).sum()).collect();
    let k_max = vp.iter().max().copied().unwrap_or(0) * 2;
    let modulus = (p as i128).pow(k_max + 1);
    let mut form = Form { rs, lambda, modulus, memo: HashMap::new() };
    let plain: Vec<Vec<u8>> = monomials.iter().map(|m| expand_word(m)).collect();
    let units: Vec<i128> = monomials.iter().map(|m| m.iter().map(|&(_, a)| unit_factorial(a, p, modulus)).product::<i128>() % modulus).collect();
    let n = monomials.len();
    let mut gram = vec![vec![0i64; n]; n];
    for a in 0..n {
        for b in a..n {
            let s = form.value(&plain[a], &plain[b]);
            let k = vp[a] + vp[b];
            let pk = (p as i128).pow(k);
            if s % pk != 0 {
                return Err(Error::Data(format!("form value not divisible by p^{k}")));
            }
            let u = (units[a] * units[b]).rem_euclid(p as i128);
            let g = ((s / pk).rem_euclid(p as i128) * inv_mod(u, p as i128)).rem_euclid(p as i128) as i64;
            gram[a][b] = g;
            gram[b][a] = g;
        }
    }
    Ok(Some(rank_mod_p(gram, p)))
}

struct Form<'a> {
    rs: &'a RootSystem,
    lambda: Weight,
    modulus: i128,
    memo: HashMap<(Vec<u8>, Vec<u8>), i128>,
}

impl Form<'_> {
    /// (F_w v, F_w' v) modulo `modulus`, where F_w = F_{w[0]} F_{w[1]} ⋯.
    fn value(&mut self, w: &[u8], w2: &[u8]) -> i128 {
        if w.is_empty() {
            return if w2.is_empty() { 1 } else { 0 };
        }
        if let Some(v) = self.memo.get(&(w.to_vec(), w2.to_vec())) {
            return *v;
        }
        let i = w[0] as usize;
        let mut pairing = self.lambda[i];
        let mut total = 0i128;
        let mut rest = w2.to_vec();
        for m in (0..w2.len()).rev() {
            if w2[m] as usize == i {
                rest.remove(m);
                let v = self.value(&w[1..], &rest);
                total = (total + pairing as i128 * v).rem_euclid(self.modulus);
                rest.insert(m, w2[m]);
            }
            pairing -= self.rs.cartan[w2[m] as usize][i];
        }
        self.memo.insert((w.to_vec(), w2.to_vec()), total);
        total
    }
}

fn multinomial(beta: &[i64]) -> usize {
    let mut r: f64 = 1.0;
    let mut n = 0i64;
    for &b in beta {
        for k in 1..=b {
            n += 1;
            r = r * n as f64 / k as f64;
        }
    }
    r.round().min(usize::MAX as f64) as usize
}

/// Sequences of (simple root, exponent) with neighbours distinct.
fn divided_monomials(beta: &[i64]) -> Vec<Vec<(u8, i64)>> {
    fn go(rem: &mut Vec<i64>, last: Option<u8>, cur: &mut Vec<(u8, i64)>, out: &mut Vec<Vec<(u8, i64)>>) {
        if rem.iter().all(|&r| r == 0) {
            out.push(cur.clone());
            return;
        }
        for i in 0..rem.len() {
            if Some(i as u8) == last || rem[i] == 0 {
                continue;
            }
            for a in 1..=rem[i] {
                rem[i] -= a;
                cur.push((i as u8, a));
                go(rem, Some(i as u8), cur, out);
                cur.pop();
                rem[i] += a;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut beta.to_vec(), None, &mut Vec::new(), &mut out);
    out
}

fn expand_word(m: &[(u8, i64)]) -> Vec<u8> {
    m.iter().flat_map(|&(i, a)| std::iter::repeat_n(i, a as usize)).collect()
}

fn vp_factorial(a: i64, p: i64) -> u32 {
    let mut v = 0;
    let mut q = p;
    while q <= a {
        v += (a / q) as u32;
        q *= p;
    }
    v
}

/// a! with all factors of p removed, modulo `modulus`.
fn unit_factorial(a: i64, p: i64, modulus: i128) -> i128 {
    let mut r = 1i128;
    for mut k in 1..=a {
        while k % p == 0 {
            k /= p;
        }
        r = r * k as i128 % modulus;
    }
    r
}

fn inv_mod(a: i128, p: i128) -> i128 {
    let mut r = 1i128;
    let mut b = a.rem_euclid(p);
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub(crate) fn rank_mod_p(mut m: Vec<Vec<i64>>, p: i64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c].rem_euclid(p) != 0) else { continue };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c] as i128, p as i128) as i64;
        for x in m[rank].iter_mut() {
            *x = (*x * inv).rem_euclid(p);
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] - f * m[rank][k]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{wt, Kind};

    #[test]
    fn sl2_weight_spaces() {
        // L(n) for SL2 in characteristic p: weight n−2k survives iff C(n,k) ≢ 0.
        let rs = RootSystem::get(Kind::A1);
        let m = |n, k| simple_weight_multiplicity(rs, 3, wt![n], wt![n - 2 * k], 1000).unwrap().unwrap();
        assert_eq!(m(3, 1), 0);
        assert_eq!(m(3, 0), 1);
        assert_eq!(m(4, 1), 1);
        assert_eq!(m(4, 2), 0);
        assert_eq!(m(5, 1), 1);
        assert_eq!(m(5, 2), 1);
        assert_eq!(m(2, 1), 1);
    }

    #[test]
    fn large_prime_gives_weyl_multiplicities() {
        for kind in [Kind::A2, Kind::B2, Kind::G2] {
            let rs = RootSystem::get(kind);
            let lam = wt![1, 1];
            let dom = crate::weyl::dominant_multiplicities(rs, lam).unwrap();
            for (mu, m) in dom.iter() {
                let r = simple_weight_multiplicity(rs, 101, lam, *mu, 100_000).unwrap().unwrap();
                assert_eq!(r as i64, *m, "{kind} {mu}");
            }
        }
    }
}
