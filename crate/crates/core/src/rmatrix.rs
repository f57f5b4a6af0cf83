//! Braided R-matrices `R̂` on `V ⊗ V` for the first fundamental module.
//!
//! Two routes: the closed form, and the product `Θ ∘ f̃ ∘ τ` with `Θ` the
//! quasi-R-matrix assembled from root vectors.

use crate::lyndon::{lalonde_ram, ConvexOrder};
use crate::matrix::{flip, unit2, SparseMat};
use crate::pairing::{c_gamma_all, pairing_from_c};
use crate::rep::{self, coproduct, fundamental, Representation};
use crate::report::Check;
use crate::rootdata::{Family, RootError, RootSystem};
use crate::rootvec::{build_root_vector_matrices, RootVectorMatrices};
use crate::scalar::{Mono, Poly, Scalar, U, V};

fn rs(p: i32, q: i32) -> Scalar {
    Scalar::rs(p, q)
}

fn uv(p: i32, q: i32) -> Scalar {
    Scalar::uv(p, q)
}

/// Index bookkeeping and coefficient tables for one family and rank.
#[derive(Clone, Copy, Debug)]
pub struct Tables {
    pub family: Family,
    pub n: usize,
    pub dim: usize,
}

impl Tables {
    pub fn new(family: Family, n: usize) -> Tables {
        Tables { family, n, dim: family.module_dim(n) }
    }

    /// `i' = N + 1 - i`.
    pub fn prime(&self, i: usize) -> usize {
        self.dim + 1 - i
    }

    pub fn sigma(&self, i: usize) -> i32 {
        let n = self.n;
        match self.family {
            Family::A => 0,
            Family::B => match i.cmp(&(n + 1)) {
                std::cmp::Ordering::Less => -1,
                std::cmp::Ordering::Equal => 0,
                std::cmp::Ordering::Greater => 1,
            },
            Family::C | Family::D => {
                if i <= n {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn t(&self, i: usize) -> Scalar {
        let n = self.n as i32;
        let ii = i as i32;
        match self.family {
            Family::A => Scalar::one(),
            Family::B => match ii.cmp(&(n + 1)) {
                std::cmp::Ordering::Less => rs(0, 2 * (ii - n) - 1),
                std::cmp::Ordering::Equal => rs(0, -1),
                std::cmp::Ordering::Greater => rs(2 * (n + 1 - ii) + 1, 0),
            },
            Family::C => {
                if ii <= n {
                    rs(0, ii - n - 1)
                } else {
                    -rs(n - ii, 0)
                }
            }
            Family::D => {
                if ii <= n {
                    rs(0, ii - n)
                } else {
                    rs(n + 1 - ii, 0)
                }
            }
        }
    }

    /// `a_ij` for `j ≠ i, i'`.
    pub fn a(&self, i: usize, j: usize) -> Scalar {
        let jp = self.prime(j);
        let outer = (i < j && i < jp) || (i > j && i > jp);
        let ss = self.sigma(i) * self.sigma(j);
        let e = if outer { -ss } else { ss };
        match self.family {
            Family::A => match i.cmp(&j) {
                std::cmp::Ordering::Less => rs(0, -1),
                _ => rs(1, 0),
            },
            Family::B => rs(e, e),
            Family::C | Family::D => uv(e, e),
        }
    }

    /// Diagonal coefficient `p` of `E_ii ⊗ E_ii` (B, C, D).
    fn p(&self) -> Scalar {
        match self.family {
            Family::B => rs(-1, 1),
            _ => uv(-1, 1),
        }
    }

    /// Common factor `g` of the off-diagonal families (B, C, D).
    fn g(&self) -> Scalar {
        match self.family {
            Family::B => &(&rs(2, 0) - &rs(0, 2)) * &rs(-1, -1),
            _ => &(&Scalar::r() - &Scalar::s()) * &uv(-1, -1),
        }
    }

    /// Coefficient of `E_{i'i'} ⊗ E_{ii}` divided by `g`, for `i ≤ n`.
    fn c(&self, i: usize) -> Scalar {
        let (n, ii) = (self.n as i32, i as i32);
        let one = Scalar::one();
        match self.family {
            Family::B => &rs(2 * (n - ii) + 1, 2 * (ii - n) - 1) - &one,
            Family::C => -(&rs(n + 1 - ii, ii - n - 1) + &one),
            Family::D => -(&one - &rs(n - ii, ii - n)),
            Family::A => Scalar::zero(),
        }
    }

    /// Basis indices skipped on the diagonal: the middle vector of type B.
    fn is_middle(&self, i: usize) -> bool {
        self.family == Family::B && i == self.n + 1
    }
}

/// The closed-form `R̂`.
pub fn rhat_explicit(family: Family, n: usize) -> SparseMat {
    let tb = Tables::new(family, n);
    let d = tb.dim;
    let mut trip: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut put = |(r, c): (usize, usize), x: Scalar| trip.push((r, c, x));
    if family == Family::A {
        for i in 1..=d {
            put(unit2(d, i, i, i, i), Scalar::one());
            for j in i + 1..=d {
                put(unit2(d, j, i, i, j), Scalar::r());
                put(unit2(d, i, j, j, i), rs(0, -1));
                put(unit2(d, j, j, i, i), &Scalar::one() - &rs(1, -1));
            }
        }
        return SparseMat::from_triplets(d * d, d * d, trip);
    }
    let (p, g) = (tb.p(), tb.g());
    let pinv = p.inv();
    for i in 1..=d {
        let ip = tb.prime(i);
        if tb.is_middle(i) {
            put(unit2(d, i, i, i, i), Scalar::one());
        } else {
            put(unit2(d, i, i, i, i), p.clone());
            put(unit2(d, i, ip, ip, i), pinv.clone());
        }
        if i <= n {
            put(unit2(d, ip, ip, i, i), &g * &tb.c(i));
        }
        for j in 1..=d {
            let jp = tb.prime(j);
            if j != i && j != ip {
                put(unit2(d, i, j, j, i), tb.a(i, j));
                if i > j {
                    put(unit2(d, i, i, j, j), -&g);
                }
                if i < j {
                    put(unit2(d, ip, j, i, jp), &g * &(&tb.t(i) / &tb.t(j)));
                }
            }
        }
    }
    SparseMat::from_triplets(d * d, d * d, trip)
}

/// The closed-form inverse `R̄`. Type A uses the quadratic minimal polynomial.
pub fn rbar_explicit(family: Family, n: usize) -> SparseMat {
    let tb = Tables::new(family, n);
    let d = tb.dim;
    if family == Family::A {
        let (l1, l2) = (-rs(1, -1), Scalar::one());
        let k1 = -(&l1.inv() * &l2.inv());
        let k2 = &l1.inv() + &l2.inv();
        return rhat_explicit(family, n).scale(&k1).add(&SparseMat::identity(d * d).scale(&k2));
    }
    let (p, g) = (tb.p(), tb.g());
    let pinv = p.inv();
    let mut trip: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut put = |(r, c): (usize, usize), x: Scalar| trip.push((r, c, x));
    for i in 1..=d {
        let ip = tb.prime(i);
        if tb.is_middle(i) {
            put(unit2(d, i, i, i, i), Scalar::one());
        } else {
            put(unit2(d, i, i, i, i), pinv.clone());
            put(unit2(d, i, ip, ip, i), p.clone());
        }
        if i <= n {
            put(unit2(d, i, i, ip, ip), swap_rs(&(&g * &tb.c(i))));
        }
        for j in 1..=d {
            let jp = tb.prime(j);
            if j != i && j != ip {
                put(unit2(d, i, j, j, i), tb.a(i, j));
                if i < j {
                    put(unit2(d, i, i, j, j), g.clone());
                }
                if i > j {
                    put(unit2(d, ip, j, i, jp), -&(&g * &(&tb.t(i) / &tb.t(j))));
                }
            }
        }
    }
    SparseMat::from_triplets(d * d, d * d, trip)
}

/// Exchanges `r` and `s` in a scalar.
pub fn swap_rs(x: &Scalar) -> Scalar {
    let sw = |m: &Mono| {
        let mut e: Vec<i32> = (0..crate::scalar::NVARS).map(|k| m.exp(k)).collect();
        e.swap(U, V);
        Mono::from_slice(&e)
    };
    let num: Poly = x.numer().map_monomials(sw);
    let den: Poly = x.denom().map_monomials(sw);
    Scalar::from_parts(num, den).expect("nonzero denominator")
}

/// Eigenvalues on the highest weight vectors `w1, w2, w3` (A has two).
pub fn eigenvalues(family: Family, n: usize) -> Vec<Scalar> {
    let n = n as i32;
    match family {
        Family::A => vec![Scalar::one(), -rs(1, -1)],
        Family::B => vec![rs(-1, 1), -rs(1, -1), rs(2 * n, -2 * n)],
        Family::C => vec![uv(-1, 1), -uv(1, -1), -uv(2 * n + 1, -2 * n - 1)],
        Family::D => vec![uv(-1, 1), -uv(1, -1), uv(2 * n - 1, -2 * n + 1)],
    }
}

/// Everything needed for the factorized route.
pub struct Factorization {
    pub rs: RootSystem,
    pub rep: Representation,
    pub order: ConvexOrder,
    pub roots: RootVectorMatrices,
    pub c: Vec<Scalar>,
}

impl Factorization {
    pub fn new(family: Family, n: usize) -> Result<Factorization, RootError> {
        let rs = RootSystem::new(family, n)?;
        let rep = fundamental(family, n)?;
        let order = lalonde_ram(&rs);
        let roots = build_root_vector_matrices(&rs, &rep, &order);
        let c = c_gamma_all(&rs, &order);
        Ok(Factorization { rs, rep, order, roots, c })
    }

    /// `Σ_m f_γ^m ⊗ e_γ^m / (f_γ^m, e_γ^m)` for one root.
    pub fn theta_factor(&self, g: usize) -> SparseMat {
        let d = self.rep.dim;
        let alpha = &self.rs.positive_roots()[g].alpha;
        let (f, e) = (&self.roots.f[g], &self.roots.e[g]);
        let mut acc = SparseMat::identity(d * d);
        let (mut fm, mut em) = (f.clone(), e.clone());
        let mut m = 1;
        while !fm.is_zero() && !em.is_zero() {
            let k = pairing_from_c(&self.rs, alpha, &self.c[g], m).inv();
            acc = acc.add(&fm.kron(&em).scale(&k));
            fm = fm.mul(f);
            em = em.mul(e);
            m += 1;
        }
        acc
    }

    /// `Θ`, factors in decreasing convex order (largest root leftmost).
    pub fn theta(&self) -> SparseMat {
        let d = self.rep.dim;
        self.order
            .order
            .iter()
            .rev()
            .fold(SparseMat::identity(d * d), |acc, &g| acc.mul(&self.theta_factor(g)))
    }

    /// `f̃(v_a ⊗ v_b) = f(wt_a, wt_b) v_a ⊗ v_b`.
    pub fn ftilde(&self) -> SparseMat {
        let w = &self.rep.weights;
        let diag = w
            .iter()
            .flat_map(|a| w.iter().map(move |b| (a, b)))
            .map(|(a, b)| self.rs.f_function(a, b).expect("weights in lattice"))
            .collect();
        SparseMat::diagonal(diag)
    }

    pub fn rhat(&self) -> SparseMat {
        self.theta().mul(&self.ftilde()).mul(&flip(self.rep.dim))
    }

    /// `τ ∘ f̃^{-1} ∘ Θ̄` with `Θ̄` the `r ↔ s` image of `Θ`.
    pub fn rbar(&self) -> SparseMat {
        let fi = self.ftilde().diagonal_inverse().expect("invertible");
        flip(self.rep.dim).mul(&fi).mul(&self.theta().map(swap_rs))
    }
}

/// `R̂ = Θ ∘ f̃ ∘ τ`.
pub fn rhat_factorized(family: Family, n: usize) -> Result<SparseMat, RootError> {
    Ok(Factorization::new(family, n)?.rhat())
}

pub fn check_eigen(family: Family, n: usize, rhat: &SparseMat) -> Check {
    let vecs = rep::highest_weight_vectors(family, n);
    let lams = eigenvalues(family, n);
    for (k, (w, l)) in vecs.iter().zip(&lams).enumerate() {
        let lhs = rhat.apply(w);
        for (idx, (x, y)) in lhs.iter().zip(w).enumerate() {
            if *x != y * l {
                return Check::fail("eigen", format!("w{} at index {}: got {}, expected {}", k + 1, idx, x, y * l));
            }
        }
    }
    Check::pass("eigen")
}

/// `Π (R̂ - λ_k) = 0`.
pub fn check_min_poly(family: Family, n: usize, rhat: &SparseMat) -> Check {
    let id = SparseMat::identity(rhat.n_rows());
    let p = eigenvalues(family, n)
        .iter()
        .fold(id.clone(), |acc, l| acc.mul(&rhat.sub(&id.scale(l))));
    Check::from_witness("min-poly", p.first_nonzero())
}

/// `R̂ Δ(x) = Δ(x) R̂` for every generator.
pub fn check_intertwine(rep: &Representation, rhat: &SparseMat) -> Check {
    Check::all(
        "intertwine",
        rep.generators().into_iter().map(|g| {
            let dg = coproduct(rep, g);
            Check::equal(g.to_string(), &rhat.mul(&dg), &dg.mul(rhat))
        }),
    )
}

pub fn check_braid(rhat: &SparseMat, dim: usize) -> Check {
    let id = SparseMat::identity(dim);
    let r12 = rhat.kron(&id);
    let r23 = id.kron(rhat);
    Check::equal("braid", &r12.mul(&r23).mul(&r12), &r23.mul(&r12).mul(&r23))
}

pub fn check_inverse(rhat: &SparseMat, rbar: &SparseMat) -> Check {
    let id = SparseMat::identity(rhat.n_rows());
    Check::all(
        "inverse",
        [Check::equal("R̂R̄", &rhat.mul(rbar), &id), Check::equal("R̄R̂", &rbar.mul(rhat), &id)],
    )
}

/// Every nonzero entry maps `v_c ⊗ v_d` to `v_a ⊗ v_b` with equal total weight.
pub fn check_weight_preserving(rep: &Representation, m: &SparseMat) -> Check {
    let d = rep.dim;
    let w = &rep.weights;
    for (row, col, _) in m.entries() {
        let (a, b, c, e) = (row / d, row % d, col / d, col % d);
        if w[a].add(&w[b]) != w[c].add(&w[e]) {
            return Check::fail("weight", format!("entry ({}, {})", row, col));
        }
    }
    Check::pass("weight")
}

/// `a_ij a_ji = 1` and `a_ij = f(wt_i, wt_j)` for `j ≠ i, i'` (B, C, D).
pub fn check_coefficients(family: Family, n: usize) -> Result<Check, RootError> {
    if family == Family::A {
        return Ok(Check::pass("coefficients"));
    }
    let tb = Tables::new(family, n);
    let rsys = RootSystem::new(family, n)?;
    let w = rep::basis_weights(family, n);
    for i in 1..=tb.dim {
        for j in 1..=tb.dim {
            if j == i || j == tb.prime(i) {
                continue;
            }
            if !(&tb.a(i, j) * &tb.a(j, i)).is_one() {
                return Ok(Check::fail("coefficients", format!("a_{i}{j} a_{j}{i} != 1")));
            }
            if tb.a(i, j) != rsys.f_function(&w[i - 1], &w[j - 1])? {
                return Ok(Check::fail("coefficients", format!("a_{i}{j} != f(wt_{i}, wt_{j})")));
            }
        }
    }
    Ok(Check::pass("coefficients"))
}

/// Names accepted by [`verify`].
pub const CHECKS: &[&str] =
    &["eigen", "min-poly", "intertwine", "braid", "inverse", "route", "weight", "coefficients", "specialize"];

/// Runs the requested finite checks (all of them when `only` is empty).
pub fn verify(family: Family, n: usize, only: &[String]) -> Result<Vec<Check>, RootError> {
    let want = |c: &str| only.is_empty() || only.iter().any(|o| o == c);
    let fac = Factorization::new(family, n)?;
    let rhat = rhat_explicit(family, n);
    let mut out = Vec::new();
    if want("eigen") {
        out.push(check_eigen(family, n, &rhat));
    }
    if want("min-poly") {
        out.push(check_min_poly(family, n, &rhat));
    }
    if want("intertwine") {
        out.push(check_intertwine(&fac.rep, &rhat));
    }
    if want("braid") {
        out.push(check_braid(&rhat, fac.rep.dim));
    }
    if want("inverse") {
        out.push(check_inverse(&rhat, &rbar_explicit(family, n)));
    }
    if want("route") {
        out.push(Check::equal("route", &fac.rhat(), &rhat));
        out.push(Check::equal("route-inverse", &fac.rbar(), &rbar_explicit(family, n)));
    }
    if want("weight") {
        out.push(check_weight_preserving(&fac.rep, &rhat));
    }
    if want("coefficients") {
        out.push(check_coefficients(family, n)?);
    }
    if want("specialize") && matches!(family, Family::A | Family::B) {
        out.extend(crate::embed::specialize_checks(family, n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_exchanges_r_and_s() {
        assert_eq!(swap_rs(&rs(2, -1)), rs(-1, 2));
        let x = &(&Scalar::r() - &uv(0, 1)) / &(&Scalar::one() + &Scalar::s());
        assert_eq!(swap_rs(&swap_rs(&x)), x);
    }

    #[test]
    fn a_type_theta_is_one_plus_off_diagonal() {
        let fac = Factorization::new(Family::A, 2).unwrap();
        let d = 3;
        let mut expect = SparseMat::identity(9);
        for i in 1..=d {
            for j in i + 1..=d {
                let (r, c) = unit2(d, j, i, i, j);
                expect = expect.add(&SparseMat::from_triplets(9, 9, [(r, c, &Scalar::s() - &Scalar::r())]));
            }
        }
        assert_eq!(fac.theta(), expect);
    }

    #[test]
    fn routes_agree_in_rank_two() {
        for f in [Family::A, Family::B, Family::C] {
            let fac = Factorization::new(f, 2).unwrap();
            assert_eq!(fac.rhat().first_difference(&rhat_explicit(f, 2)), None, "{f}");
        }
    }

    #[test]
    fn explicit_inverse() {
        for (f, n) in [(Family::A, 2), (Family::B, 2), (Family::C, 2), (Family::D, 3)] {
            assert!(check_inverse(&rhat_explicit(f, n), &rbar_explicit(f, n)).passed(), "{f}{n}");
        }
    }
}
