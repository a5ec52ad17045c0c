//! The five supported root systems and elementary weight combinatorics.

use crate::scalar::solve_row;
use crate::{Error, Result, Weight, MAX_RANK};
use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A1,
    A2,
    A3,
    B2,
    G2,
}

impl Kind {
    pub const ALL: [Kind; 5] = [Kind::A1, Kind::A2, Kind::A3, Kind::B2, Kind::G2];

    fn cartan(self) -> Vec<Vec<i64>> {
        match self {
            Kind::A1 => vec![vec![2]],
            Kind::A2 => vec![vec![2, -1], vec![-1, 2]],
            Kind::A3 => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            // α1 long, α2 short.
            Kind::B2 => vec![vec![2, -2], vec![-1, 2]],
            // α1 short, α2 long.
            Kind::G2 => vec![vec![2, -1], vec![-3, 2]],
        }
    }

    /// Half squared lengths of the simple roots.
    fn symmetrizer(self) -> Vec<i64> {
        match self {
            Kind::A1 => vec![1],
            Kind::A2 => vec![1, 1],
            Kind::A3 => vec![1, 1, 1],
            Kind::B2 => vec![2, 1],
            Kind::G2 => vec![1, 3],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Kind> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A1" => Ok(Kind::A1),
            "A2" => Ok(Kind::A2),
            "A3" => Ok(Kind::A3),
            "B2" | "C2" => Ok(Kind::B2),
            "G2" => Ok(Kind::G2),
            other => Err(Error::UnsupportedCase(format!("root system {other}"))),
        }
    }
}

type Mat = [[i64; MAX_RANK]; MAX_RANK];

/// A Weyl group element as an integer matrix on fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub matrix: Mat,
    pub length: usize,
    rank: usize,
}

impl WeylElement {
    pub fn apply(&self, w: Weight) -> Weight {
        let n = self.rank;
        let mut out = [0i64; MAX_RANK];
        for (i, o) in out.iter_mut().enumerate().take(n) {
            *o = (0..n).map(|j| self.matrix[i][j] * w[j]).sum();
        }
        Weight::new(&out[..n])
    }

    pub fn sign(&self) -> i64 {
        if self.length % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.rank).map(|i| self.matrix[i][..self.rank].to_vec()).collect()
    }
}

#[derive(Debug)]
pub struct RootSystem {
    pub kind: Kind,
    pub rank: usize,
    /// `cartan[i][j] = ⟨α_i, α_j∨⟩`; row `i` is α_i in weight coordinates.
    pub cartan: Vec<Vec<i64>>,
    pub simple_roots: Vec<Weight>,
    /// Ordered by height, then lexicographically on simple-root coordinates.
    pub positive_roots: Vec<Weight>,
    pub weyl_group: Vec<WeylElement>,
    pub w0_index: usize,
    pub coxeter_number: i64,
    pub highest_short_root: Weight,
    pub highest_long_root: Weight,
    root_coords: Vec<[i64; MAX_RANK]>,
    /// Coefficients of α∨ on the simple coroots, one per positive root.
    coroots: Vec<[i64; MAX_RANK]>,
    half_len: Vec<i64>,
    root_index: HashMap<Weight, (usize, bool)>,
    /// Cartan inverse as `inv_num / inv_den`.
    inv_num: Mat,
    inv_den: i64,
    /// `inv_den · (ω_i, ω_j)`.
    gram: Mat,
}

impl RootSystem {
    /// Shared immutable instance for `kind`.
    pub fn get(kind: Kind) -> &'static RootSystem {
        static CELLS: [OnceLock<RootSystem>; 5] =
            [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
        let idx = Kind::ALL.iter().position(|&k| k == kind).unwrap();
        CELLS[idx].get_or_init(|| RootSystem::build(kind))
    }

    fn build(kind: Kind) -> RootSystem {
        let cartan = kind.cartan();
        let d = kind.symmetrizer();
        let n = cartan.len();
        let simple_roots: Vec<Weight> = cartan.iter().map(|r| Weight::new(r)).collect();

        // Root closure in simple-root coordinates.
        let mut seen: BTreeSet<[i64; MAX_RANK]> = BTreeSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut e = [0; MAX_RANK];
            e[i] = 1;
            seen.insert(e);
            queue.push_back(e);
        }
        while let Some(k) = queue.pop_front() {
            for i in 0..n {
                let pair: i64 = (0..n).map(|j| k[j] * cartan[j][i]).sum();
                let mut r = k;
                r[i] -= pair;
                if seen.insert(r) {
                    queue.push_back(r);
                }
            }
        }
        let mut pos: Vec<[i64; MAX_RANK]> =
            seen.into_iter().filter(|k| k.iter().all(|&x| x >= 0)).collect();
        pos.sort_by_key(|k| (k.iter().sum::<i64>(), *k));

        let to_weight = |k: &[i64; MAX_RANK]| {
            let mut c = vec![0; n];
            for (i, ci) in c.iter_mut().enumerate() {
                *ci = (0..n).map(|j| k[j] * cartan[j][i]).sum();
            }
            Weight::new(&c)
        };
        // (α_i, α_j) = d_i ⟨α_j, α_i∨⟩
        let ip = |a: &[i64; MAX_RANK], b: &[i64; MAX_RANK]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += a[i] * b[j] * d[i] * cartan[j][i];
                }
            }
            s
        };
        let mut coroots = Vec::new();
        let mut half_len = Vec::new();
        for k in &pos {
            let dl = ip(k, k) / 2;
            let mut c = [0; MAX_RANK];
            for i in 0..n {
                assert_eq!((k[i] * d[i]) % dl, 0);
                c[i] = k[i] * d[i] / dl;
            }
            coroots.push(c);
            half_len.push(dl);
        }
        let positive_roots: Vec<Weight> = pos.iter().map(to_weight).collect();
        let mut root_index = HashMap::new();
        for (i, r) in positive_roots.iter().enumerate() {
            root_index.insert(*r, (i, true));
            root_index.insert(-*r, (i, false));
        }
        let min_len = *half_len.iter().min().unwrap();
        let max_len = *half_len.iter().max().unwrap();
        // Roots are sorted by height, so the last of each length is highest.
        let short_idx = (0..pos.len()).rev().find(|&i| half_len[i] == min_len).unwrap();
        let long_idx = (0..pos.len()).rev().find(|&i| half_len[i] == max_len).unwrap();
        let rho = Weight::splat(n, 1);
        let coxeter_number = rho.dot(&coroots[short_idx][..n]) + 1;

        // Inverse Cartan matrix.
        let rat: Vec<Vec<Ratio<i64>>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect())
            .collect();
        let mut inv = vec![vec![Ratio::zero(); n]; n];
        for (i, row) in inv.iter_mut().enumerate() {
            let mut e = vec![Ratio::zero(); n];
            e[i] = Ratio::from_integer(1);
            *row = solve_row(&rat, &e).expect("Cartan matrix is invertible");
        }
        let inv_den = inv.iter().flatten().fold(1i64, |acc, q| lcm(acc, *q.denom()));
        let mut inv_num = [[0; MAX_RANK]; MAX_RANK];
        for i in 0..n {
            for j in 0..n {
                inv_num[i][j] = (inv[i][j] * inv_den).to_integer();
            }
        }
        let mut gram = [[0; MAX_RANK]; MAX_RANK];
        for i in 0..n {
            for j in 0..n {
                gram[i][j] = inv_num[j][i] * d[i];
            }
        }

        let weyl_group = generate_weyl_group(&cartan);
        let w0_index = (0..weyl_group.len()).max_by_key(|&i| weyl_group[i].length).unwrap();

        RootSystem {
            kind,
            rank: n,
            cartan,
            simple_roots,
            highest_short_root: positive_roots[short_idx],
            highest_long_root: positive_roots[long_idx],
            positive_roots,
            weyl_group,
            w0_index,
            coxeter_number,
            root_coords: pos,
            coroots,
            half_len,
            root_index,
            inv_num,
            inv_den,
            gram,
        }
    }

    pub fn rho(&self) -> Weight {
        Weight::splat(self.rank, 1)
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    pub fn w0(&self) -> &WeylElement {
        &self.weyl_group[self.w0_index]
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Coefficients of α∨ on the simple coroots for the `i`-th positive root.
    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i][..self.rank]
    }

    /// Coefficients of the `i`-th positive root on the simple roots.
    pub fn root_coordinates(&self, i: usize) -> &[i64] {
        &self.root_coords[i][..self.rank]
    }

    pub fn is_long(&self, i: usize) -> bool {
        self.half_len[i] == *self.half_len.iter().max().unwrap()
            && self.half_len.iter().min() != self.half_len.iter().max()
    }

    /// ⟨λ, α∨⟩ for the `i`-th positive root.
    pub fn pairing_index(&self, lambda: Weight, i: usize) -> i64 {
        lambda.dot(&self.coroots[i][..self.rank])
    }

    /// ⟨λ, α∨⟩ for any root α given in weight coordinates.
    pub fn pairing(&self, lambda: Weight, alpha: Weight) -> Result<i64> {
        let &(i, positive) = self.root_index.get(&alpha).ok_or(Error::NotARoot(alpha))?;
        let v = self.pairing_index(lambda, i);
        Ok(if positive { v } else { -v })
    }

    /// Index of a positive root, if `alpha` is one.
    pub fn positive_root_index(&self, alpha: Weight) -> Option<usize> {
        match self.root_index.get(&alpha) {
            Some(&(i, true)) => Some(i),
            _ => None,
        }
    }

    pub fn is_root(&self, alpha: Weight) -> bool {
        self.root_index.contains_key(&alpha)
    }

    pub fn highest_short_index(&self) -> usize {
        self.positive_root_index(self.highest_short_root).unwrap()
    }

    pub fn highest_long_index(&self) -> usize {
        self.positive_root_index(self.highest_long_root).unwrap()
    }

    /// ⟨λ, α0∨⟩ for the highest short root α0.
    pub fn pairing_alpha0(&self, lambda: Weight) -> i64 {
        self.pairing_index(lambda, self.highest_short_index())
    }

    /// ⟨λ, α̃∨⟩ for the highest long root α̃.
    pub fn pairing_alpha_tilde(&self, lambda: Weight) -> i64 {
        self.pairing_index(lambda, self.highest_long_index())
    }

    /// `inv_den` times the simple-root coordinates of λ.
    pub fn scaled_root_coords(&self, lambda: Weight) -> [i64; MAX_RANK] {
        let mut r = [0; MAX_RANK];
        for (j, rj) in r.iter_mut().enumerate().take(self.rank) {
            *rj = (0..self.rank).map(|i| lambda[i] * self.inv_num[i][j]).sum();
        }
        r
    }

    pub fn scale(&self) -> i64 {
        self.inv_den
    }

    /// `inv_den` times the height of λ (sum of simple-root coordinates).
    /// Strictly monotone for the dominance order.
    pub fn scaled_height(&self, lambda: Weight) -> i64 {
        self.scaled_root_coords(lambda).iter().sum()
    }

    /// Simple-root coordinates of λ when λ lies in the root lattice.
    pub fn root_lattice_coords(&self, lambda: Weight) -> Option<Vec<i64>> {
        let r = self.scaled_root_coords(lambda);
        r[..self.rank]
            .iter()
            .map(|&x| if x % self.inv_den == 0 { Some(x / self.inv_den) } else { None })
            .collect()
    }

    /// `inv_den · (x, y)` for the W-invariant form with (α,α) = 2 on short roots.
    pub fn scaled_form(&self, x: Weight, y: Weight) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                s += x[i] * self.gram[i][j] * y[j];
            }
        }
        s
    }

    /// μ − λ is a nonnegative integral combination of simple roots.
    pub fn dominance_leq(&self, lambda: Weight, mu: Weight) -> bool {
        let r = self.scaled_root_coords(mu - lambda);
        r[..self.rank].iter().all(|&x| x >= 0 && x % self.inv_den == 0)
    }

    /// μ − λ is a nonnegative rational combination of simple roots,
    /// decided by solving the rank-sized system exactly.
    pub fn leq_q(&self, lambda: Weight, mu: Weight) -> bool {
        let m: Vec<Vec<Ratio<BigInt>>> = self
            .cartan
            .iter()
            .map(|r| r.iter().map(|&x| Ratio::from_integer(BigInt::from(x))).collect())
            .collect();
        let b: Vec<Ratio<BigInt>> =
            (mu - lambda).coords().iter().map(|&x| Ratio::from_integer(BigInt::from(x))).collect();
        let x = solve_row(&m, &b).expect("Cartan matrix is invertible");
        x.iter().all(|q| !q.is_negative())
    }

    pub fn is_dominant(&self, lambda: Weight) -> bool {
        lambda.is_dominant()
    }

    pub fn is_restricted(&self, lambda: Weight, p: i64, r: u32) -> bool {
        lambda.is_below(p.pow(r))
    }

    /// λ = λ0 + p^r·λ1 with λ0 ∈ X_r.
    pub fn restricted_split(&self, lambda: Weight, p: i64, r: u32) -> Result<(Weight, Weight)> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda));
        }
        let q = p.pow(r);
        Ok((lambda.map(|x| x % q), lambda.map(|x| x / q)))
    }

    pub fn apply(&self, w: &WeylElement, lambda: Weight) -> Weight {
        w.apply(lambda)
    }

    /// w·λ = w(λ+ρ) − ρ.
    pub fn dot_apply(&self, w: &WeylElement, lambda: Weight) -> Weight {
        w.apply(lambda + self.rho()) - self.rho()
    }

    pub fn reflect_simple(&self, i: usize, lambda: Weight) -> Weight {
        lambda - lambda[i] * self.simple_roots[i]
    }

    /// s_α(λ) for the `i`-th positive root.
    pub fn reflect(&self, i: usize, lambda: Weight) -> Weight {
        lambda - self.pairing_index(lambda, i) * self.positive_roots[i]
    }

    /// s_α·λ for the `i`-th positive root.
    pub fn dot_reflect(&self, i: usize, lambda: Weight) -> Weight {
        self.reflect(i, lambda + self.rho()) - self.rho()
    }

    /// Dominant W-conjugate of λ under the linear action.
    pub fn dominant_conjugate(&self, mut lambda: Weight) -> Weight {
        'outer: loop {
            for i in 0..self.rank {
                if lambda[i] < 0 {
                    lambda = self.reflect_simple(i, lambda);
                    continue 'outer;
                }
            }
            return lambda;
        }
    }

    /// Dominant dot-conjugate of λ with the sign of the conjugating element,
    /// or `None` when λ+ρ lies on a wall.
    pub fn dot_dominant(&self, lambda: Weight) -> Option<(Weight, i64)> {
        let mut x = lambda + self.rho();
        let mut sign = 1;
        'outer: loop {
            for i in 0..self.rank {
                if x[i] < 0 {
                    x = self.reflect_simple(i, x);
                    sign = -sign;
                    continue 'outer;
                }
            }
            break;
        }
        if x.coords().contains(&0) {
            None
        } else {
            Some((x - self.rho(), sign))
        }
    }

    /// W-orbit of λ under the linear action, sorted.
    pub fn orbit(&self, lambda: Weight) -> Vec<Weight> {
        let set: BTreeSet<Weight> = self.weyl_group.iter().map(|w| w.apply(lambda)).collect();
        set.into_iter().collect()
    }

    /// Dominant weights μ ≤ λ (λ dominant), by increasing depth below λ.
    pub fn dominant_weights_below(&self, lambda: Weight) -> Vec<Weight> {
        let r = self.scaled_root_coords(lambda);
        let bounds: Vec<i64> = (0..self.rank).map(|i| r[i].div_euclid(self.inv_den)).collect();
        let mut out = Vec::new();
        let mut k = vec![0i64; self.rank];
        loop {
            let mut mu = lambda;
            for (i, &ki) in k.iter().enumerate() {
                mu -= ki * self.simple_roots[i];
            }
            if mu.is_dominant() {
                out.push(mu);
            }
            let mut i = 0;
            loop {
                if i == self.rank {
                    out.sort_by_key(|&m| (self.scaled_height(lambda - m), m));
                    return out;
                }
                k[i] += 1;
                if k[i] <= bounds[i] {
                    break;
                }
                k[i] = 0;
                i += 1;
            }
        }
    }

    /// All dominant weights with ⟨λ, α0∨⟩ ≤ bound, sorted by (height, coords).
    /// The set is closed downward for the dominance order.
    pub fn dominant_weights_up_to(&self, bound: i64) -> Vec<Weight> {
        let mut out = Vec::new();
        let c = self.coroot(self.highest_short_index()).to_vec();
        let mut k = vec![0i64; self.rank];
        loop {
            let w = Weight::new(&k);
            if w.dot(&c) <= bound {
                out.push(w);
            }
            let mut i = 0;
            loop {
                if i == self.rank {
                    out.sort_by_key(|&m| (self.scaled_height(m), m));
                    return out;
                }
                k[i] += 1;
                if k[i] * c[i] <= bound {
                    break;
                }
                k[i] = 0;
                i += 1;
            }
        }
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

fn generate_weyl_group(cartan: &[Vec<i64>]) -> Vec<WeylElement> {
    let n = cartan.len();
    let mut ident = [[0; MAX_RANK]; MAX_RANK];
    for (i, row) in ident.iter_mut().enumerate().take(n) {
        row[i] = 1;
    }
    // (s_i λ)_j = λ_j − λ_i·cartan[i][j]
    let gens: Vec<Mat> = (0..n)
        .map(|i| {
            let mut s = ident;
            for j in 0..n {
                s[j][i] -= cartan[i][j];
            }
            s
        })
        .collect();
    let mul = |a: &Mat, b: &Mat| -> Mat {
        let mut c = [[0; MAX_RANK]; MAX_RANK];
        for i in 0..n {
            for j in 0..n {
                c[i][j] = (0..n).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        c
    };
    let mut out = vec![WeylElement { matrix: ident, length: 0, rank: n }];
    let mut seen: BTreeSet<Mat> = BTreeSet::from([ident]);
    let mut frontier = vec![ident];
    let mut len = 0;
    while !frontier.is_empty() {
        len += 1;
        let mut next = Vec::new();
        for m in &frontier {
            for g in &gens {
                let x = mul(g, m);
                if seen.insert(x) {
                    out.push(WeylElement { matrix: x, length: len, rank: n });
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wt;

    #[test]
    fn sizes() {
        let expect = [(Kind::A1, 1, 2, 2), (Kind::A2, 3, 6, 3), (Kind::A3, 6, 24, 4), (Kind::B2, 4, 8, 4), (Kind::G2, 6, 12, 6)];
        for (k, np, nw, h) in expect {
            let rs = RootSystem::get(k);
            assert_eq!(rs.positive_roots.len(), np, "{k}");
            assert_eq!(rs.weyl_group.len(), nw, "{k}");
            assert_eq!(rs.coxeter_number, h, "{k}");
            assert_eq!(rs.pairing_alpha0(rs.rho()), h - 1);
        }
    }

    #[test]
    fn g2_data() {
        let rs = RootSystem::get(Kind::G2);
        assert_eq!(rs.simple_roots, vec![wt![2, -1], wt![-3, 2]]);
        assert_eq!(rs.highest_short_root, wt![1, 0]);
        assert_eq!(rs.highest_long_root, wt![0, 1]);
        assert_eq!(rs.pairing(wt![1, 0], wt![2, -1]).unwrap(), 1);
        assert_eq!(rs.pairing(wt![1, 1], rs.highest_short_root).unwrap(), 5);
        assert!(matches!(rs.pairing(wt![1, 1], wt![1, 1]), Err(Error::NotARoot(_))));
        assert_eq!(rs.w0().apply(wt![3, -4]), wt![-3, 4]);
    }

    #[test]
    fn a3_w0_flips() {
        let rs = RootSystem::get(Kind::A3);
        assert_eq!(rs.w0().apply(wt![1, 2, 3]), wt![-3, -2, -1]);
        assert_eq!(rs.pairing(wt![2, 3, 3], rs.highest_short_root).unwrap(), 8);
    }

    #[test]
    fn b2_lengths() {
        let rs = RootSystem::get(Kind::B2);
        assert_eq!(rs.highest_short_root, wt![1, 0]);
        assert_eq!(rs.highest_long_root, wt![0, 2]);
        assert_eq!(rs.pairing_alpha0(wt![1, 4]), 6);
    }

    #[test]
    fn gram_symmetric() {
        for k in Kind::ALL {
            let rs = RootSystem::get(k);
            for i in 0..rs.rank {
                for j in 0..rs.rank {
                    assert_eq!(rs.gram[i][j], rs.gram[j][i]);
                }
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let a3 = RootSystem::get(Kind::A3);
        assert!(a3.dominance_leq(wt![3, 3, 0], wt![2, 3, 3]));
        assert!(a3.leq_q(wt![3, 3, 0], wt![2, 3, 3]));
        let g2 = RootSystem::get(Kind::G2);
        assert!(g2.dominance_leq(wt![0, 0], wt![2, -1]));
        assert!(!g2.dominance_leq(wt![0, 0], wt![1, -1]));
        assert!(!g2.leq_q(wt![0, 0], wt![1, -1]));
    }

    #[test]
    fn restricted_split_examples() {
        let g2 = RootSystem::get(Kind::G2);
        assert_eq!(g2.restricted_split(wt![5, 5], 7, 1).unwrap(), (wt![5, 5], wt![0, 0]));
        assert_eq!(g2.restricted_split(wt![12, 8], 7, 1).unwrap(), (wt![5, 1], wt![1, 1]));
        let a3 = RootSystem::get(Kind::A3);
        assert_eq!(a3.restricted_split(wt![9, 0, 2], 3, 2).unwrap(), (wt![0, 0, 2], wt![1, 0, 0]));
        assert!(matches!(a3.restricted_split(wt![-1, 0, 2], 3, 1), Err(Error::NotDominant(_))));
    }
}
