//! The first fundamental module `V` and its evaluation extensions `V(x)`.
//!
//! Basis labels are 1-based; `i' = N + 1 - i`. In evaluation modules the
//! spectral variable lives in slot `X` (or `Y` for a second copy), and the
//! parameters `a, b` in slots `A, B`.

use crate::matrix::SparseMat;
use crate::report::Check;
use crate::rootdata::{AffineData, Family, RootError, RootSystem, Weight};
use crate::scalar::{self, rs_binomial, Scalar};

/// Generator of the (affine) algebra, indexed by node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E(usize),
    F(usize),
    /// `ω_i`.
    K(usize),
    /// `ω'_i`.
    Kp(usize),
}

impl std::fmt::Display for Gen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Gen::E(i) => write!(f, "e{}", i),
            Gen::F(i) => write!(f, "f{}", i),
            Gen::K(i) => write!(f, "w{}", i),
            Gen::Kp(i) => write!(f, "w'{}", i),
        }
    }
}

/// Matrices of the Chevalley generators on a module of dimension `dim`.
#[derive(Clone, Debug)]
pub struct Representation {
    pub family: Family,
    pub rank: usize,
    pub dim: usize,
    /// Node label of `e[0]`: 1 for `V`, 0 for `V(x)`.
    pub first: usize,
    pub e: Vec<SparseMat>,
    pub f: Vec<SparseMat>,
    pub k: Vec<SparseMat>,
    pub kp: Vec<SparseMat>,
    /// ε-weight of each basis vector.
    pub weights: Vec<Weight>,
}

impl Representation {
    pub fn nodes(&self) -> std::ops::RangeInclusive<usize> {
        self.first..=self.rank
    }

    pub fn gen(&self, g: Gen) -> &SparseMat {
        match g {
            Gen::E(i) => &self.e[i - self.first],
            Gen::F(i) => &self.f[i - self.first],
            Gen::K(i) => &self.k[i - self.first],
            Gen::Kp(i) => &self.kp[i - self.first],
        }
    }

    pub fn gen_mut(&mut self, g: Gen) -> &mut SparseMat {
        match g {
            Gen::E(i) => &mut self.e[i - self.first],
            Gen::F(i) => &mut self.f[i - self.first],
            Gen::K(i) => &mut self.k[i - self.first],
            Gen::Kp(i) => &mut self.kp[i - self.first],
        }
    }

    /// All generators, in the order `e, f, ω, ω'` per node.
    pub fn generators(&self) -> Vec<Gen> {
        self.nodes()
            .flat_map(|i| [Gen::E(i), Gen::F(i), Gen::K(i), Gen::Kp(i)])
            .collect()
    }

    /// Applies a scalar substitution to every generator.
    pub fn substitute(&self, bindings: &[(usize, Scalar)]) -> Result<Representation, scalar::ScalarError> {
        let sub = |v: &[SparseMat]| v.iter().map(|m| m.substitute(bindings)).collect::<Result<Vec<_>, _>>();
        Ok(Representation {
            e: sub(&self.e)?,
            f: sub(&self.f)?,
            k: sub(&self.k)?,
            kp: sub(&self.kp)?,
            ..self.clone()
        })
    }
}

/// `Δ(g)` on `V ⊗ V`: `e ⊗ 1 + ω ⊗ e`, `1 ⊗ f + f ⊗ ω'`, `ω ⊗ ω`.
pub fn coproduct(rep: &Representation, g: Gen) -> SparseMat {
    coproduct2(rep, rep, g)
}

/// `Δ(g)` on `V₁ ⊗ V₂` for two modules of the same shape.
pub fn coproduct2(v1: &Representation, v2: &Representation, g: Gen) -> SparseMat {
    let id1 = SparseMat::identity(v1.dim);
    let id2 = SparseMat::identity(v2.dim);
    match g {
        Gen::E(i) => v1.gen(g).kron(&id2).add(&v1.gen(Gen::K(i)).kron(v2.gen(g))),
        Gen::F(i) => id1.kron(v2.gen(g)).add(&v1.gen(g).kron(v2.gen(Gen::Kp(i)))),
        Gen::K(_) | Gen::Kp(_) => v1.gen(g).kron(v2.gen(g)),
    }
}

struct Builder {
    n: usize,
    trip: Vec<(usize, usize, Scalar)>,
}

impl Builder {
    fn new(n: usize) -> Builder {
        Builder { n, trip: Vec::new() }
    }

    fn put(&mut self, i: usize, j: usize, c: Scalar) -> &mut Builder {
        self.trip.push((i - 1, j - 1, c));
        self
    }

    fn one(&mut self, i: usize, j: usize) -> &mut Builder {
        self.put(i, j, Scalar::one())
    }

    fn build(&mut self) -> SparseMat {
        SparseMat::from_triplets(self.n, self.n, std::mem::take(&mut self.trip))
    }
}

/// Diagonal matrix equal to 1 except at the listed 1-based positions.
fn diag_with(n: usize, entries: &[(usize, Scalar)]) -> SparseMat {
    let mut d = vec![Scalar::one(); n];
    for (k, x) in entries {
        d[k - 1] = x.clone();
    }
    SparseMat::diagonal(d)
}

fn rs(p: i32, q: i32) -> Scalar {
    Scalar::rs(p, q)
}

/// ε-weights of the basis: `v_i ↦ ε_i`, `v_{i'} ↦ -ε_i`, middle vector of
/// type B ↦ 0.
pub fn basis_weights(family: Family, n: usize) -> Vec<Weight> {
    let dim = family.module_dim(n);
    match family {
        Family::A => (1..=dim).map(|k| Weight::eps(n + 1, k)).collect(),
        _ => (1..=dim)
            .map(|k| {
                if k <= n {
                    Weight::eps(n, k)
                } else if k > dim - n {
                    Weight::eps(n, dim + 1 - k).neg()
                } else {
                    Weight::zero(n)
                }
            })
            .collect(),
    }
}

/// The first fundamental module of `U_{r,s}(g)`.
pub fn fundamental(family: Family, n: usize) -> Result<Representation, RootError> {
    RootSystem::new(family, n)?;
    let dim = family.module_dim(n);
    let p = |i: usize| dim + 1 - i;
    let mut b = Builder::new(dim);
    let (mut e, mut f, mut k, mut kp) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
    match family {
        Family::A => {
            for i in 1..=n {
                e.push(b.one(i, i + 1).build());
                f.push(b.one(i + 1, i).build());
                k.push(diag_with(dim, &[(i, Scalar::r()), (i + 1, Scalar::s())]));
                kp.push(diag_with(dim, &[(i, Scalar::s()), (i + 1, Scalar::r())]));
            }
        }
        Family::B => {
            for i in 1..n {
                e.push(b.one(i, i + 1).put(p(i + 1), p(i), Scalar::from_int(-1)).build());
                f.push(b.one(i + 1, i).put(p(i), p(i + 1), -rs(-2, -2)).build());
                k.push(diag_with(dim, &[(i, rs(2, 0)), (i + 1, rs(0, 2)), (p(i), rs(-2, 0)), (p(i + 1), rs(0, -2))]));
                kp.push(diag_with(dim, &[(i, rs(0, 2)), (i + 1, rs(2, 0)), (p(i), rs(0, -2)), (p(i + 1), rs(-2, 0))]));
            }
            e.push(b.one(n, n + 1).put(n + 1, p(n), Scalar::from_int(-1)).build());
            let c = rs(-1, 0) + rs(0, -1);
            f.push(b.put(n + 1, n, c.clone()).put(p(n), n + 1, -c).build());
            let tail = |x: Scalar, y: Scalar| {
                let mut d: Vec<(usize, Scalar)> = vec![(n, x), (p(n), y)];
                for j in 1..n {
                    d.push((j, rs(-1, -1)));
                    d.push((p(j), rs(1, 1)));
                }
                diag_with(dim, &d)
            };
            k.push(tail(rs(1, -1), rs(-1, 1)));
            kp.push(tail(rs(-1, 1), rs(1, -1)));
        }
        Family::C | Family::D => {
            for i in 1..n {
                e.push(b.one(i, i + 1).put(p(i + 1), p(i), Scalar::from_int(-1)).build());
                f.push(b.one(i + 1, i).put(p(i), p(i + 1), -rs(-1, -1)).build());
                k.push(diag_with(dim, &[(i, rs(1, 0)), (i + 1, rs(0, 1)), (p(i), rs(-1, 0)), (p(i + 1), rs(0, -1))]));
                kp.push(diag_with(dim, &[(i, rs(0, 1)), (i + 1, rs(1, 0)), (p(i), rs(0, -1)), (p(i + 1), rs(-1, 0))]));
            }
            if family == Family::C {
                e.push(b.one(n, p(n)).build());
                f.push(b.put(p(n), n, rs(-1, -1)).build());
                let tail = |x: Scalar, y: Scalar| {
                    let mut d: Vec<(usize, Scalar)> = vec![(n, x), (p(n), y)];
                    for j in 1..n {
                        d.push((j, rs(-1, -1)));
                        d.push((p(j), rs(1, 1)));
                    }
                    diag_with(dim, &d)
                };
                k.push(tail(rs(1, -1), rs(-1, 1)));
                kp.push(tail(rs(-1, 1), rs(1, -1)));
            } else {
                e.push(b.put(n - 1, p(n), rs(-1, -1)).put(n, p(n - 1), Scalar::from_int(-1)).build());
                f.push(b.one(p(n), n - 1).put(p(n - 1), n, Scalar::from_int(-1)).build());
                let tail = |a: Scalar, bb: Scalar, c: Scalar, d: Scalar| {
                    let mut v: Vec<(usize, Scalar)> = vec![(n - 1, a), (n, bb), (p(n - 1), c), (p(n), d)];
                    for j in 1..n - 1 {
                        v.push((j, rs(-1, -1)));
                        v.push((p(j), rs(1, 1)));
                    }
                    diag_with(dim, &v)
                };
                k.push(tail(rs(0, -1), rs(1, 0), rs(0, 1), rs(-1, 0)));
                kp.push(tail(rs(-1, 0), rs(0, 1), rs(1, 0), rs(0, -1)));
            }
        }
    }
    Ok(Representation { family, rank: n, dim, first: 1, e, f, k, kp, weights: basis_weights(family, n) })
}

/// `κ` in `b = (rs)^{-κ} a^{-1}`: 2 for type B, 1 otherwise.
pub fn kappa(family: Family) -> i32 {
    if family == Family::B {
        2
    } else {
        1
    }
}

/// How the evaluation parameters `a, b` enter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalParams {
    /// `a` symbolic (slot `A`), `b = (rs)^{-κ} a^{-1}`.
    Symbolic,
    /// `a = 1`, `b = (rs)^{-κ}`.
    FixedA1,
    /// Independent symbolic `a, b` (slots `A, B`).
    Free,
}

impl EvalParams {
    pub fn ab(self, family: Family) -> (Scalar, Scalar) {
        let k = kappa(family);
        match self {
            EvalParams::Symbolic => {
                let a = Scalar::var(scalar::A);
                (a.clone(), rs(-k, -k) * a.inv())
            }
            EvalParams::FixedA1 => (Scalar::one(), rs(-k, -k)),
            EvalParams::Free => (Scalar::var(scalar::A), Scalar::var(scalar::B)),
        }
    }
}

/// Minimal rank at which the evaluation module is defined.
pub fn min_affine_rank(family: Family) -> usize {
    match family {
        Family::A => 1,
        Family::B | Family::C => 2,
        Family::D => 3,
    }
}

/// The evaluation module `V(x)` with `x` in `slot`.
pub fn evaluation(family: Family, n: usize, params: EvalParams, slot: usize) -> Result<Representation, RootError> {
    if n < min_affine_rank(family) {
        return Err(RootError::RankTooSmall { family, rank: n, min: min_affine_rank(family) });
    }
    let base = fundamental(family, n)?;
    let dim = base.dim;
    let p = |i: usize| dim + 1 - i;
    let (a, bpar) = params.ab(family);
    let x = Scalar::var(slot);
    let ax = &a * &x;
    let bx = &bpar * &x.inv();
    let c = match family {
        Family::B => rs(2, 2) * &a * &bpar,
        _ => rs(1, 1) * &a * &bpar,
    };
    let mut b = Builder::new(dim);
    let (e0, f0, k0, kp0);
    match family {
        Family::A => {
            e0 = b.put(n + 1, 1, ax).build();
            f0 = b.put(1, n + 1, bx).build();
            let mid = |x1: Scalar, x2: Scalar| {
                let mut d = vec![(1, x1), (n + 1, x2)];
                for i in 2..=n {
                    d.push((i, rs(-1, -1)));
                }
                diag_with(dim, &d).scale(&c)
            };
            k0 = mid(rs(-1, 0), rs(0, -1));
            kp0 = mid(rs(0, -1), rs(-1, 0));
        }
        Family::B | Family::D => {
            let (k2, t) = if family == Family::B { (2, 2) } else { (1, 1) };
            e0 = b.put(p(1), 2, ax.clone()).put(p(2), 1, -(rs(t, t) * &ax)).build();
            f0 = b.put(2, p(1), bx.clone()).put(1, p(2), -bx).build();
            let mid = |v1: Scalar, v2: Scalar, v2p: Scalar, v1p: Scalar| {
                let mut d = vec![(1, v1), (2, v2), (p(2), v2p), (p(1), v1p)];
                for i in 3..=n {
                    d.push((i, rs(-k2, -k2)));
                    d.push((p(i), rs(k2, k2)));
                }
                diag_with(dim, &d).scale(&c)
            };
            k0 = mid(rs(0, k2), rs(-k2, 0), rs(k2, 0), rs(0, -k2));
            kp0 = mid(rs(k2, 0), rs(0, -k2), rs(0, k2), rs(-k2, 0));
        }
        Family::C => {
            e0 = b.put(p(1), 1, ax).build();
            f0 = b.put(1, p(1), bx).build();
            let mid = |v1: Scalar, v1p: Scalar| {
                let mut d = vec![(1, v1), (p(1), v1p)];
                for i in 2..=n {
                    d.push((i, rs(-1, -1)));
                    d.push((p(i), rs(1, 1)));
                }
                diag_with(dim, &d).scale(&c)
            };
            k0 = mid(rs(-1, 1), rs(1, -1));
            kp0 = mid(rs(1, -1), rs(-1, 1));
        }
    }
    let prepend = |m: SparseMat, v: Vec<SparseMat>| std::iter::once(m).chain(v).collect::<Vec<_>>();
    Ok(Representation {
        family,
        rank: n,
        dim,
        first: 0,
        e: prepend(e0, base.e),
        f: prepend(f0, base.f),
        k: prepend(k0, base.k),
        kp: prepend(kp0, base.kp),
        weights: base.weights,
    })
}

/// Central charge `c` with `γ = γ' = c·Id` on `V(x)`.
pub fn central_charge(family: Family, params: EvalParams) -> Scalar {
    let (a, b) = params.ab(family);
    let k = if family == Family::B { 2 } else { 1 };
    rs(k, k) * a * b
}

/// Structure constants indexed by node: `Ω`, Cartan entries, `r_i`, `s_i`.
struct Nodes {
    omega: Vec<Vec<Scalar>>,
    cartan: Vec<Vec<i32>>,
    r: Vec<Scalar>,
    s: Vec<Scalar>,
}

fn nodes(rs_: &RootSystem, ad: &AffineData) -> Nodes {
    let n = rs_.rank;
    let mut r = vec![ad.r0.clone()];
    let mut s = vec![ad.s0.clone()];
    for i in 1..=n {
        r.push(rs_.r_i(i));
        s.push(rs_.s_i(i));
    }
    Nodes { omega: ad.omega.clone(), cartan: ad.cartan.clone(), r, s }
}

fn check_diagonal(rep: &Representation) -> Check {
    let mut cs = Vec::new();
    let ks: Vec<(Gen, &SparseMat)> =
        rep.nodes().flat_map(|i| [(Gen::K(i), rep.gen(Gen::K(i))), (Gen::Kp(i), rep.gen(Gen::Kp(i)))]).collect();
    for (g, m) in &ks {
        if m.diagonal_inverse().is_none() {
            cs.push(Check::fail(format!("{} invertible diagonal", g), "not an invertible diagonal matrix"));
        }
    }
    for (g, a) in &ks {
        for (h, b) in &ks {
            cs.push(Check::equal(format!("[{}, {}]", g, h), &a.mul(b), &b.mul(a)));
        }
    }
    Check::all("R1 torus", cs)
}

fn check_torus_action(rep: &Representation, nd: &Nodes) -> (Check, Check) {
    let mut r2 = Vec::new();
    let mut r3 = Vec::new();
    for i in rep.nodes() {
        for j in rep.nodes() {
            let w = &nd.omega[j][i];
            let wi = &nd.omega[i][j];
            let (k, kp) = (rep.gen(Gen::K(i)), rep.gen(Gen::Kp(i)));
            let (e, f) = (rep.gen(Gen::E(j)), rep.gen(Gen::F(j)));
            r2.push(Check::equal(format!("w{} e{}", i, j), &k.mul(e), &e.mul(k).scale(w)));
            r2.push(Check::equal(format!("w{} f{}", i, j), &k.mul(f), &f.mul(k).scale(&w.inv())));
            r3.push(Check::equal(format!("w'{} e{}", i, j), &kp.mul(e), &e.mul(kp).scale(&wi.inv())));
            r3.push(Check::equal(format!("w'{} f{}", i, j), &kp.mul(f), &f.mul(kp).scale(wi)));
        }
    }
    (Check::all("R2 conjugation by w", r2), Check::all("R3 conjugation by w'", r3))
}

fn check_commutators(rep: &Representation, nd: &Nodes) -> Check {
    let mut cs = Vec::new();
    for i in rep.nodes() {
        for j in rep.nodes() {
            let lhs = rep.gen(Gen::E(i)).commutator(rep.gen(Gen::F(j)));
            let rhs = if i == j {
                let d = (&nd.r[i] - &nd.s[i]).inv();
                rep.gen(Gen::K(i)).sub(rep.gen(Gen::Kp(i))).scale(&d)
            } else {
                SparseMat::zeros(rep.dim, rep.dim)
            };
            cs.push(Check::equal(format!("[e{}, f{}]", i, j), &lhs, &rhs));
        }
    }
    Check::all("R4 commutators", cs)
}

/// Coefficients of the `(r,s)`-Serre polynomial in `x_i^{m-k} x_j x_i^k`.
pub fn serre_coefficients(omega_ji: &Scalar, c_ij: i32, r_i: &Scalar, s_i: &Scalar) -> Vec<Scalar> {
    let m = (1 - c_ij) as u32;
    (0..=m)
        .map(|k| {
            let sign = if k % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
            let binom = rs_binomial(m, k, r_i, s_i).expect("k <= m");
            let kk = k as i32;
            sign * binom
                * (r_i * s_i).pow(kk * (kk - 1) / 2)
                * omega_ji.pow(kk)
                * s_i.pow(kk * c_ij)
        })
        .collect()
}

/// `Σ_k c_k x_i^{m-k} x_j x_i^k`, or with the outer powers swapped when
/// `reversed`.
pub fn serre_sum(xi: &SparseMat, xj: &SparseMat, coeffs: &[Scalar], reversed: bool) -> SparseMat {
    let m = coeffs.len() as u32 - 1;
    let mut acc = SparseMat::zeros(xi.n_rows(), xi.n_cols());
    for (k, c) in coeffs.iter().enumerate() {
        let k = k as u32;
        let (left, right) = if reversed { (k, m - k) } else { (m - k, k) };
        let term = xi.pow(left).mul(xj).mul(&xi.pow(right));
        acc = acc.add(&term.scale(c));
    }
    acc
}

/// The `f`-relations are checked in the mirrored order `f_i^k f_j f_i^{m-k}`.
fn check_serre(rep: &Representation, nd: &Nodes) -> Check {
    let mut cs = Vec::new();
    for i in rep.nodes() {
        for j in rep.nodes() {
            if i == j {
                continue;
            }
            let coeffs = serre_coefficients(&nd.omega[j][i], nd.cartan[i][j], &nd.r[i], &nd.s[i]);
            for (name, g, rev) in [("e", Gen::E as fn(usize) -> Gen, false), ("f", Gen::F as fn(usize) -> Gen, true)] {
                let s = serre_sum(rep.gen(g(i)), rep.gen(g(j)), &coeffs, rev);
                cs.push(Check::from_witness(format!("Serre {} i={} j={}", name, i, j), s.first_nonzero()));
            }
        }
    }
    Check::all("R5 Serre", cs)
}

/// Checks the defining relations of `U_{r,s}(g)` on a finite module.
pub fn verify_finite_relations(rep: &Representation) -> Result<Vec<Check>, RootError> {
    let rsys = RootSystem::new(rep.family, rep.rank)?;
    let nd = nodes(&rsys, &rsys.affine_data());
    let (r2, r3) = check_torus_action(rep, &nd);
    Ok(vec![check_diagonal(rep), r2, r3, check_commutators(rep, &nd), check_serre(rep, &nd)])
}

/// Checks the relations of `U_{r,s}(ĝ)` on an evaluation module, including
/// the degree operators realized as `x ↦ r_0 x` and `x ↦ s_0 x`.
pub fn verify_affine_relations(rep: &Representation, params: EvalParams, slot: usize) -> Result<Vec<Check>, RootError> {
    let rsys = RootSystem::new(rep.family, rep.rank)?;
    let ad = rsys.affine_data();
    let nd = nodes(&rsys, &ad);
    let c = central_charge(rep.family, params);
    let central = |prime: bool| {
        let kind = if prime { Gen::Kp } else { Gen::K };
        let mut m = rep.gen(kind(0)).clone();
        for (i, &t) in ad.theta.alpha.iter().enumerate() {
            m = m.mul(&rep.gen(kind(i + 1)).pow(t as u32));
        }
        m
    };
    let cid = SparseMat::identity(rep.dim).scale(&c);
    let r0 = Check::all(
        "R0 central elements",
        [Check::equal("gamma", &central(false), &cid), Check::equal("gamma'", &central(true), &cid)],
    );
    let (r2, r3) = check_torus_action(rep, &nd);
    let mut degree = Vec::new();
    for (label, q) in [("D", &ad.r0), ("D'", &ad.s0)] {
        let shifted = rep.substitute(&[(slot, q * &Scalar::var(slot))]).expect("substitution of a monomial");
        for g in rep.generators() {
            let factor = match g {
                Gen::E(0) => q.clone(),
                Gen::F(0) => q.inv(),
                _ => Scalar::one(),
            };
            degree.push(Check::equal(format!("{} {}", label, g), shifted.gen(g), &rep.gen(g).scale(&factor)));
        }
    }
    Ok(vec![
        r0,
        check_diagonal(rep),
        r2,
        r3,
        check_commutators(rep, &nd),
        check_serre(rep, &nd),
        Check::all("degree operators", degree),
    ])
}

/// Checks that each basis vector has the torus eigenvalues of its weight:
/// `ω_i v = (ω'_λ, ω_i) v`, `ω'_i v = (ω'_i, ω_λ)^{-1} v`.
pub fn verify_weights(rep: &Representation) -> Result<Check, RootError> {
    let rsys = RootSystem::new(rep.family, rep.rank)?;
    let mut cs = Vec::new();
    for i in 1..=rep.rank {
        let a = rsys.alpha_to_weight(&unit_alpha(rep.rank, i));
        let want_k: Vec<Scalar> =
            rep.weights.iter().map(|l| rsys.omega_pairing(l, &a)).collect::<Result<_, _>>()?;
        let want_kp: Vec<Scalar> =
            rep.weights.iter().map(|l| rsys.omega_pairing(&a, l).map(|x| x.inv())).collect::<Result<_, _>>()?;
        cs.push(Check::equal(format!("w{}", i), rep.gen(Gen::K(i)), &SparseMat::diagonal(want_k)));
        cs.push(Check::equal(format!("w'{}", i), rep.gen(Gen::Kp(i)), &SparseMat::diagonal(want_kp)));
    }
    Ok(Check::all("weights", cs))
}

fn unit_alpha(n: usize, i: usize) -> Vec<i32> {
    let mut a = vec![0; n];
    a[i - 1] = 1;
    a
}

/// Highest weight vectors of the summands of `V ⊗ V`: `w1` of weight `2ε_1`,
/// `w2` of weight `ε_1 + ε_2`, and for types B, C, D the invariant `w3`.
pub fn highest_weight_vectors(family: Family, n: usize) -> Vec<Vec<Scalar>> {
    let dim = family.module_dim(n);
    let p = |i: usize| dim + 1 - i;
    let idx = |i: usize, j: usize| crate::matrix::pair_index(dim, i, j);
    let mut out = Vec::new();
    let mut w1 = vec![Scalar::zero(); dim * dim];
    w1[idx(1, 1)] = Scalar::one();
    out.push(w1);
    if dim < 2 {
        return out;
    }
    let mut w2 = vec![Scalar::zero(); dim * dim];
    w2[idx(1, 2)] = Scalar::one();
    w2[idx(2, 1)] = match family {
        Family::B if n == 1 => -rs(1, -1),
        Family::B => -rs(2, 0),
        _ => -rs(1, 0),
    };
    out.push(w2);
    if family == Family::A {
        return out;
    }
    let ni = n as i32;
    let mut w3 = vec![Scalar::zero(); dim * dim];
    for i in 1..=n {
        let ii = i as i32;
        match family {
            Family::B => {
                w3[idx(i, p(i))] = rs(2 * (ii - 1), 0);
                w3[idx(p(i), i)] = rs(2 * ni - 1, 2 * (ii - ni) - 1);
            }
            Family::C => {
                w3[idx(i, p(i))] = rs(ii - 1, 0);
                w3[idx(p(i), i)] = -rs(ni, ii - ni - 1);
            }
            _ => {
                w3[idx(i, p(i))] = rs(ii - 1, 0);
                w3[idx(p(i), i)] = rs(ni - 1, ii - ni);
            }
        }
    }
    if family == Family::B {
        w3[idx(n + 1, n + 1)] = rs(2 * ni - 1, -1);
    }
    out.push(w3);
    out
}

/// Checks `Δ(e_i) w = 0` for every highest weight vector.
pub fn verify_highest_weight(rep: &Representation) -> Check {
    let hw = highest_weight_vectors(rep.family, rep.rank);
    let es: Vec<SparseMat> = (1..=rep.rank).map(|i| coproduct(rep, Gen::E(i))).collect();
    let mut cs = Vec::new();
    for (k, w) in hw.iter().enumerate() {
        for (i, e) in es.iter().enumerate() {
            let v = e.apply(w);
            match v.iter().position(|x| !x.is_zero()) {
                None => cs.push(Check::pass("")),
                Some(p) => cs.push(Check::fail(format!("e{} w{}", i + 1, k + 1), format!("component {} = {}", p, v[p]))),
            }
        }
    }
    Check::all("highest weight vectors", cs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_pass(cs: &[Check]) {
        for c in cs {
            assert!(c.passed(), "{}", c);
        }
    }

    #[test]
    fn finite_relations_hold() {
        for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::C, 2), (Family::C, 3), (Family::D, 3), (Family::D, 4)] {
            let rep = fundamental(f, n).unwrap();
            all_pass(&verify_finite_relations(&rep).unwrap());
            assert!(verify_weights(&rep).unwrap().passed(), "{}{}", f, n);
            assert!(verify_highest_weight(&rep).passed(), "{}{}", f, n);
        }
    }

    #[test]
    fn perturbed_generator_fails() {
        let mut rep = fundamental(Family::B, 2).unwrap();
        let e1 = rep.gen(Gen::E(1)).scale(&Scalar::r());
        *rep.gen_mut(Gen::E(1)) = e1;
        let cs = verify_finite_relations(&rep).unwrap();
        let r4 = cs.iter().find(|c| c.name.starts_with("R4")).unwrap();
        assert!(!r4.passed());
    }

    #[test]
    fn affine_relations_hold() {
        for (f, n) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::B, 3), (Family::C, 2), (Family::C, 3), (Family::D, 3), (Family::D, 4)] {
            for params in [EvalParams::Symbolic, EvalParams::FixedA1] {
                let rep = evaluation(f, n, params, scalar::X).unwrap();
                all_pass(&verify_affine_relations(&rep, params, scalar::X).unwrap());
            }
        }
    }

    #[test]
    fn unmirrored_f_serre_fails_on_the_spin_nodes() {
        let rep = fundamental(Family::D, 3).unwrap();
        let rsys = RootSystem::new(Family::D, 3).unwrap();
        let ad = rsys.affine_data();
        let coeffs = serre_coefficients(&ad.omega[3][2], ad.cartan[2][3], &rsys.r_i(2), &rsys.s_i(2));
        let (f2, f3) = (rep.gen(Gen::F(2)), rep.gen(Gen::F(3)));
        assert!(serre_sum(f2, f3, &coeffs, true).is_zero());
        assert!(!serre_sum(f2, f3, &coeffs, false).is_zero());
    }
}
