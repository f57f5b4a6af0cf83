//! The Hopf pairing between the free algebras on `f_i` and on `e_i`, root
//! vectors as words, and the pairing constants `(f_γ^m, e_γ^m)`.
//!
//! The pairing of two words is computed by stripping the last `f` letter:
//!
//! ```text
//! (y f_j, e_{i_1} ⋯ e_{i_k}) = 1/(s_j − r_j) Σ_{t : i_t = j} Π_{u > t} Ω_{i_u, j} (y, e_{i_1} ⋯ ê_{i_t} ⋯ e_{i_k})
//! ```
//!
//! which follows from `(y y', x) = (y ⊗ y', Δ(x))` and pushing the Cartan
//! factor of `Δ(x)` to the right. No Serre relations are imposed.

use crate::lyndon::{lalonde_ram, minimal_pair, ConvexOrder, Word};
use crate::rootdata::{Family, RootSystem};
use crate::scalar::{rs_factorial, rs_integer_in, Scalar};
use std::collections::{BTreeMap, HashMap};

/// A linear combination of words in the letters `1..=n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeElem {
    pub terms: BTreeMap<Word, Scalar>,
}

impl FreeElem {
    pub fn zero() -> FreeElem {
        FreeElem::default()
    }

    pub fn one() -> FreeElem {
        FreeElem::word(Vec::new())
    }

    pub fn word(w: Word) -> FreeElem {
        FreeElem::term(w, Scalar::one())
    }

    pub fn term(w: Word, c: Scalar) -> FreeElem {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        FreeElem { terms }
    }

    pub fn letter(i: usize) -> FreeElem {
        FreeElem::word(vec![i as u8])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, w: Word, c: Scalar) {
        let sum = match self.terms.get(&w) {
            Some(v) => v + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    pub fn add(&self, o: &FreeElem) -> FreeElem {
        let mut out = self.clone();
        for (w, c) in &o.terms {
            out.accumulate(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> FreeElem {
        if k.is_zero() {
            return FreeElem::zero();
        }
        FreeElem { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * k)).collect() }
    }

    pub fn sub(&self, o: &FreeElem) -> FreeElem {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn mul(&self, o: &FreeElem) -> FreeElem {
        let mut out = FreeElem::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &o.terms {
                let w: Word = w1.iter().chain(w2).copied().collect();
                out.accumulate(w, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, m: u32) -> FreeElem {
        (0..m).fold(FreeElem::one(), |acc, _| acc.mul(self))
    }

    /// Letter multiset as a coefficient vector over the simple roots, if
    /// all words share it.
    pub fn degree(&self, n: usize) -> Option<Vec<i32>> {
        let mut out: Option<Vec<i32>> = None;
        for w in self.terms.keys() {
            let mut d = vec![0; n];
            for &l in w {
                d[l as usize - 1] += 1;
            }
            match &out {
                None => out = Some(d),
                Some(x) if *x == d => {}
                Some(_) => return None,
            }
        }
        out
    }
}

/// Pairing engine for one root system, caching word pairings.
pub struct Pairing<'a> {
    rs: &'a RootSystem,
    /// `Ω_{ab}` for simple roots.
    omega: Vec<Vec<Scalar>>,
    /// Laurent part of word pairings, without the `Π 1/(s_j − r_j)` prefactor.
    cache: HashMap<(Word, Word), Scalar>,
}

impl<'a> Pairing<'a> {
    pub fn new(rs: &'a RootSystem) -> Pairing<'a> {
        let n = rs.rank;
        let unit = |i: usize| {
            let mut a = vec![0; n];
            a[i] = 1;
            a
        };
        let omega = (0..n).map(|a| (0..n).map(|b| rs.omega_pairing_alpha(&unit(a), &unit(b))).collect()).collect();
        Pairing { rs, omega, cache: HashMap::new() }
    }

    /// `(y, x)` for a word `y` in the `f_i` and a word `x` in the `e_i`.
    pub fn words(&mut self, y: &[u8], x: &[u8]) -> Scalar {
        if y.len() != x.len() {
            return Scalar::zero();
        }
        let mut ys = y.to_vec();
        let mut xs = x.to_vec();
        ys.sort_unstable();
        xs.sort_unstable();
        if ys != xs {
            return Scalar::zero();
        }
        let laurent = self.laurent(y, x);
        if laurent.is_zero() {
            return laurent;
        }
        let pre = y.iter().fold(Scalar::one(), |acc, &j| {
            let j = j as usize;
            acc * (self.rs.s_i(j) - self.rs.r_i(j)).inv()
        });
        laurent * pre
    }

    fn laurent(&mut self, y: &[u8], x: &[u8]) -> Scalar {
        if y.is_empty() {
            return Scalar::one();
        }
        let key = (y.to_vec(), x.to_vec());
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let j = *y.last().unwrap();
        let head = &y[..y.len() - 1];
        let mut acc = Scalar::zero();
        let mut weight = Scalar::one();
        for t in (0..x.len()).rev() {
            if x[t] == j {
                let mut rest = x[..t].to_vec();
                rest.extend_from_slice(&x[t + 1..]);
                let sub = self.laurent(head, &rest);
                if !sub.is_zero() {
                    acc = &acc + &(&weight * &sub);
                }
            }
            weight = &weight * &self.omega[x[t] as usize - 1][j as usize - 1];
        }
        self.cache.insert(key, acc.clone());
        acc
    }

    /// Bilinear extension to linear combinations.
    pub fn pair(&mut self, y: &FreeElem, x: &FreeElem) -> Scalar {
        let mut acc = Scalar::zero();
        for (wy, cy) in &y.terms {
            for (wx, cx) in &x.terms {
                let p = self.words(wy, wx);
                if !p.is_zero() {
                    acc = &acc + &(cy * cx * p);
                }
            }
        }
        acc
    }
}

/// `e_γ` and `f_γ` as words.
#[derive(Clone, Debug)]
pub struct AbstractRootVector {
    pub e: FreeElem,
    pub f: FreeElem,
}

/// Root vectors for every positive root (indexed as in
/// [`RootSystem::positive_roots`]), built along minimal pairs.
pub fn abstract_root_vectors(rs: &RootSystem, co: &ConvexOrder) -> Vec<AbstractRootVector> {
    let roots = rs.positive_roots();
    let mut by_height: Vec<usize> = (0..roots.len()).collect();
    by_height.sort_by_key(|&k| roots[k].height());
    let mut out: Vec<Option<AbstractRootVector>> = vec![None; roots.len()];
    for &g in &by_height {
        let root = &roots[g];
        if root.is_simple() {
            let i = root.alpha.iter().position(|&c| c == 1).unwrap() + 1;
            out[g] = Some(AbstractRootVector { e: FreeElem::letter(i), f: FreeElem::letter(i) });
            continue;
        }
        let (a, b) = minimal_pair(rs, co, g).expect("non-simple root");
        let (va, vb) = (out[a].as_ref().unwrap(), out[b].as_ref().unwrap());
        let (aa, ab) = (&roots[a].alpha, &roots[b].alpha);
        let k_ba = rs.omega_pairing_alpha(ab, aa);
        let k_ab = rs.omega_pairing_alpha(aa, ab).inv();
        let e = va.e.mul(&vb.e).sub(&vb.e.mul(&va.e).scale(&k_ba));
        let f = vb.f.mul(&va.f).sub(&va.f.mul(&vb.f).scale(&k_ab));
        out[g] = Some(AbstractRootVector { e, f });
    }
    out.into_iter().map(Option::unwrap).collect()
}

/// `(f_γ^m, e_γ^m)` by direct pairing of the word expansions.
pub fn pairing_power(p: &mut Pairing<'_>, rv: &AbstractRootVector, m: u32) -> Scalar {
    p.pair(&rv.f.pow(m), &rv.e.pow(m))
}

/// `max{k ≥ 0 : α − kβ ∈ Φ}` over the full root system.
pub fn string_length(rs: &RootSystem, alpha: &[i32], beta: &[i32]) -> i32 {
    let mut k = 0;
    loop {
        let v: Vec<i32> = alpha.iter().zip(beta).map(|(a, b)| a - (k + 1) * b).collect();
        let neg: Vec<i32> = v.iter().map(|x| -x).collect();
        if rs.root_index(&v).is_some() || rs.root_index(&neg).is_some() {
            k += 1;
        } else {
            return k;
        }
    }
}

/// `c_γ` for every positive root by the minimal-pair recursion.
pub fn c_gamma_all(rs: &RootSystem, co: &ConvexOrder) -> Vec<Scalar> {
    let roots = rs.positive_roots();
    let mut by_height: Vec<usize> = (0..roots.len()).collect();
    by_height.sort_by_key(|&k| roots[k].height());
    let mut c: Vec<Option<Scalar>> = vec![None; roots.len()];
    let gap = |a: &[i32]| rs.s_gamma(a) - rs.r_gamma(a);
    for &g in &by_height {
        let root = &roots[g];
        if root.is_simple() {
            c[g] = Some(gap(&root.alpha).inv());
            continue;
        }
        let (a, b) = minimal_pair(rs, co, g).expect("non-simple root");
        let (aa, ab) = (&roots[a].alpha, &roots[b].alpha);
        let p = string_length(rs, aa, ab);
        let bracket = rs_integer_in((p + 1) as u32, &rs.r_gamma(aa), &rs.s_gamma(aa));
        let lead = Scalar::from_int(p as i64) * &bracket * &bracket * gap(aa) * gap(ab) / gap(&root.alpha);
        let factor = lead + rs.omega_pairing_alpha(ab, aa) - rs.omega_pairing_alpha(aa, ab).inv();
        let v = factor * c[a].as_ref().unwrap() * c[b].as_ref().unwrap();
        c[g] = Some(v);
    }
    c.into_iter().map(Option::unwrap).collect()
}

/// `s_γ^{-m(m-1)/2} c_γ^m [m]_{r_γ,s_γ}!`.
pub fn pairing_from_c(rs: &RootSystem, alpha: &[i32], c: &Scalar, m: u32) -> Scalar {
    let (r, s) = (rs.r_gamma(alpha), rs.s_gamma(alpha));
    let e = (m * m.saturating_sub(1) / 2) as i32;
    s.pow(-e) * c.pow(m as i32) * rs_factorial(m, &r, &s)
}

/// Closed form of `(f_γ^m, e_γ^m)`, looked up by root name.
pub fn closed_form(rs: &RootSystem, root: usize, m: u32) -> Scalar {
    let n = rs.rank as i32;
    let name = &rs.positive_roots()[root].name;
    let mut parts = name.split('_').skip(1).map(|x| x.parse::<i32>().unwrap());
    let (i, j) = (parts.next().unwrap(), parts.next().unwrap());
    let is_beta = name.starts_with("beta");
    let mi = m as i32;
    let sign = Scalar::from_int(if m % 2 == 0 { 1 } else { -1 });
    let (r, s) = (Scalar::r(), Scalar::s());
    let (r2, s2) = (Scalar::rs(2, 0), Scalar::rs(0, 2));
    let short = || &sign * Scalar::rs(0, -mi * (mi - 1) / 2) * rs_factorial(m, &r, &s) / (&r - &s).pow(mi);
    let long = || &sign * Scalar::rs(0, -mi * (mi - 1)) * rs_factorial(m, &r2, &s2) / (&r2 - &s2).pow(mi);
    let two = &r + &s;
    match (rs.family, is_beta) {
        (Family::A, _) => short(),
        (Family::B, false) if j < n => long(),
        (Family::B, false) => short(),
        (Family::B, true) => two.pow(2 * mi) * Scalar::rs(-2 * mi * (n - j), -2 * mi * (n - j)) * long(),
        (Family::C, false) if i == n && j == n => long(),
        (Family::C, false) => short(),
        (Family::C, true) if i == j => two.pow(2 * mi) * long(),
        (Family::C, true) => Scalar::rs(-mi * (n - j), -mi * (n - j)) * short(),
        (Family::D, false) => short(),
        (Family::D, true) => Scalar::rs(-mi * (n - j), -mi * (n - j)) * short(),
    }
}

/// One row of the pairing-constant table.
#[derive(Clone, Debug)]
pub struct PairingRow {
    pub root: String,
    pub m: u32,
    pub closed: Scalar,
    pub direct: Scalar,
    pub recursive: Scalar,
}

impl PairingRow {
    pub fn agrees(&self) -> bool {
        self.closed == self.direct && self.direct == self.recursive
    }
}

/// Closed form, direct pairing and `c_γ`-recursion values for every root
/// and `1 ≤ m ≤ max_m`.
pub fn pairing_table(rs: &RootSystem, max_m: u32) -> Vec<PairingRow> {
    let co = lalonde_ram(rs);
    let rvs = abstract_root_vectors(rs, &co);
    let cs = c_gamma_all(rs, &co);
    let mut p = Pairing::new(rs);
    let mut out = Vec::new();
    for &g in &co.order {
        let root = &rs.positive_roots()[g];
        for m in 1..=max_m {
            out.push(PairingRow {
                root: root.name.clone(),
                m,
                closed: closed_form(rs, g, m),
                direct: pairing_power(&mut p, &rvs[g], m),
                recursive: pairing_from_c(rs, &root.alpha, &cs[g], m),
            });
        }
    }
    out
}

/// Ordered PBW monomial `Π^← x_γ^{m_γ}` (largest root leftmost) from
/// exponents indexed by position in the convex order.
pub fn pbw_monomial(order: &ConvexOrder, vecs: &[FreeElem], exps: &[u32]) -> FreeElem {
    let mut acc = FreeElem::one();
    for pos in (0..order.len()).rev() {
        if exps[pos] > 0 {
            acc = acc.mul(&vecs[order.order[pos]].pow(exps[pos]));
        }
    }
    acc
}

/// All exponent vectors (over the convex order) of total height `h`.
pub fn pbw_exponents(rs: &RootSystem, order: &ConvexOrder, h: i32) -> Vec<Vec<u32>> {
    let heights: Vec<i32> = order.order.iter().map(|&g| rs.positive_roots()[g].height()).collect();
    let mut out = Vec::new();
    let mut cur = vec![0u32; heights.len()];
    fn rec(k: usize, left: i32, heights: &[i32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == heights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut m = 0;
        while m * heights[k] <= left {
            cur[k] = m as u32;
            rec(k + 1, left - m * heights[k], heights, cur, out);
            m += 1;
        }
        cur[k] = 0;
    }
    rec(0, h, &heights, &mut cur, &mut out);
    out
}

/// Checks the orthogonality of ordered PBW monomials of equal degree and
/// the product formula on the diagonal, for every total height up to
/// `max_height`. Returns the first failure.
pub fn verify_pbw_orthogonality(rs: &RootSystem, max_height: i32) -> Result<usize, String> {
    let co = lalonde_ram(rs);
    let rvs = abstract_root_vectors(rs, &co);
    let es: Vec<FreeElem> = rvs.iter().map(|v| v.e.clone()).collect();
    let fs: Vec<FreeElem> = rvs.iter().map(|v| v.f.clone()).collect();
    let mut p = Pairing::new(rs);
    let mut checked = 0;
    for h in 1..=max_height {
        let exps = pbw_exponents(rs, &co, h);
        let deg = |ex: &[u32]| -> Vec<i32> {
            let mut d = vec![0; rs.rank];
            for (pos, &m) in ex.iter().enumerate() {
                for (x, a) in d.iter_mut().zip(&rs.positive_roots()[co.order[pos]].alpha) {
                    *x += m as i32 * a;
                }
            }
            d
        };
        for ey in &exps {
            let y = pbw_monomial(&co, &fs, ey);
            for ex in &exps {
                if deg(ey) != deg(ex) {
                    continue;
                }
                let x = pbw_monomial(&co, &es, ex);
                let got = p.pair(&y, &x);
                let want = if ey == ex {
                    ey.iter().enumerate().fold(Scalar::one(), |acc, (pos, &m)| {
                        acc * pairing_power(&mut p, &rvs[co.order[pos]], m)
                    })
                } else {
                    Scalar::zero()
                };
                if got != want {
                    return Err(format!("exponents {:?} vs {:?}: got {}, want {}", ey, ex, got, want));
                }
                checked += 1;
            }
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_pairings() {
        let rs = RootSystem::new(Family::B, 2).unwrap();
        let mut p = Pairing::new(&rs);
        let want = (Scalar::rs(0, 2) - Scalar::rs(2, 0)).inv();
        assert_eq!(p.words(&[1], &[1]), want);
        assert!(p.words(&[1], &[2]).is_zero());
        assert!(p.words(&[1, 2], &[1]).is_zero());
    }

    #[test]
    fn a2_root_vector_words() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let co = lalonde_ram(&rs);
        let rvs = abstract_root_vectors(&rs, &co);
        let g = rs.root_index(&[1, 1]).unwrap();
        let want = FreeElem::word(vec![1, 2]).sub(&FreeElem::term(vec![2, 1], Scalar::s()));
        assert_eq!(rvs[g].e, want);
        assert_eq!(rvs[g].e.degree(2), Some(vec![1, 1]));
    }

    #[test]
    fn a2_first_power_is_one_over_s_minus_r() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let rows = pairing_table(&rs, 1);
        for row in rows {
            assert_eq!(row.direct, (Scalar::s() - Scalar::r()).inv(), "{}", row.root);
            assert!(row.agrees());
        }
    }

    #[test]
    fn string_lengths() {
        let rs = RootSystem::new(Family::B, 2).unwrap();
        assert_eq!(string_length(&rs, &[1, 1], &[0, 1]), 1);
        assert_eq!(string_length(&rs, &[1, 0], &[0, 1]), 0);
    }
}
