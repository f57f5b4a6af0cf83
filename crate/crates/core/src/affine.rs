//! Affine R-matrices `R̂(z)` on evaluation modules `V(x) ⊗ V(y)`, `z = x/y`.
//!
//! Entries are polynomials in the spectral slot `Z`; the intertwiner check
//! substitutes `z ↦ x/y` with `x, y` in slots `X, Y`.

use crate::matrix::{unit2, SparseMat};
use crate::rep::{coproduct2, evaluation, EvalParams, Gen, Representation};
use crate::report::Check;
use crate::rmatrix::{eigenvalues, rbar_explicit, rhat_explicit, Tables};
use crate::rootdata::{Family, RootError};
use crate::scalar::{Scalar, X, Y, Z};
use serde::Serialize;

fn rs(p: i32, q: i32) -> Scalar {
    Scalar::rs(p, q)
}

/// `ξ`, the second root of the diagonal coefficient.
pub fn xi(family: Family, n: usize) -> Scalar {
    let n = n as i32;
    match family {
        Family::A => Scalar::one(),
        Family::B => rs(-2 * n + 1, 2 * n - 1),
        Family::C => rs(-n - 1, n + 1),
        Family::D => rs(-n + 1, n - 1),
    }
}

/// The closed-form `R̂(z)` with `z` in slot `Z`.
pub fn rhat_z(family: Family, n: usize) -> SparseMat {
    let tb = Tables::new(family, n);
    let d = tb.dim;
    let z = Scalar::z();
    let one = Scalar::one();
    let zm1 = &z - &one;
    let mut trip: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut put = |(r, c): (usize, usize), x: Scalar| trip.push((r, c, x));
    if family == Family::A {
        let k = &one - &rs(1, -1);
        for i in 1..=d {
            put(unit2(d, i, i, i, i), &one - &(&z * &rs(1, -1)));
            for j in 1..=d {
                match i.cmp(&j) {
                    std::cmp::Ordering::Greater => {
                        put(unit2(d, i, j, j, i), -&(&zm1 * &Scalar::r()));
                        put(unit2(d, i, i, j, j), k.clone());
                    }
                    std::cmp::Ordering::Less => {
                        put(unit2(d, i, j, j, i), -&(&zm1 * &rs(0, -1)));
                        put(unit2(d, i, i, j, j), &k * &z);
                    }
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        return SparseMat::from_triplets(d * d, d * d, trip);
    }
    let (mu, p) = match family {
        Family::B => (rs(-2, 2), rs(-1, 1)),
        _ => (rs(-1, 1), Scalar::uv(-1, 1)),
    };
    let xi = xi(family, n);
    let zmx = &z - &xi;
    let om = &one - &mu;
    for i in 1..=d {
        let ip = tb.prime(i);
        let middle = family == Family::B && i == n + 1;
        if !middle {
            put(unit2(d, i, i, i, i), &(&z - &mu) * &zmx);
        }
        for j in 1..=d {
            let jp = tb.prime(j);
            if j != i && j != ip {
                put(unit2(d, i, j, j, i), &(&(&p * &zm1) * &zmx) * &tb.a(i, j));
                if i > j {
                    put(unit2(d, i, i, j, j), &om * &zmx);
                } else {
                    put(unit2(d, i, i, j, j), &(&om * &z) * &zmx);
                }
            }
            let delta = if i == jp { one.clone() } else { Scalar::zero() };
            let tt = &tb.t(i) / &tb.t(j);
            let b = match i.cmp(&j) {
                std::cmp::Ordering::Equal if middle => {
                    &(&(&p * &zm1) * &zmx) + &(&(&(&mu - &one) * &(&xi - &one)) * &z)
                }
                std::cmp::Ordering::Equal => &(&(&mu * &z) - &xi) * &zm1,
                std::cmp::Ordering::Less => &(&mu - &one) * &(&(&(&xi * &tt) * &zm1) - &(&delta * &zmx)),
                std::cmp::Ordering::Greater => {
                    &(&(&mu - &one) * &z) * &(&(&tt * &zm1) - &(&delta * &zmx))
                }
            };
            put(unit2(d, ip, j, i, jp), b);
        }
    }
    SparseMat::from_triplets(d * d, d * d, trip)
}

/// Substitutes a value for the spectral parameter.
pub fn at(m: &SparseMat, z: &Scalar) -> SparseMat {
    m.substitute(&[(Z, z.clone())]).expect("z substitution")
}

/// Ways of assembling `R̂(z)` from `R̂`, `R̂^{-1}` and the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    /// `λ2^{-1} R̂ + z λ1 R̂^{-1}` (two eigenvalues).
    TwoEigen,
    /// `λ1 z(z-1) R̂^{-1} + (1 + λ1/λ2 + λ1/λ3 + λ2/λ3) z − λ3^{-1}(z-1) R̂`.
    A,
    /// `λ1 z(z-1) R̂^{-1} + (1 + λ1/λ2 + λ1/λ3 + λ1²/(λ2λ3)) z − λ1/(λ2λ3) (z-1) R̂`.
    B,
}

impl Scheme {
    pub fn name(self) -> &'static str {
        match self {
            Scheme::TwoEigen => "two-eigen",
            Scheme::A => "a",
            Scheme::B => "b",
        }
    }

    /// The scheme whose output is the closed-form `R̂(z)`.
    pub fn for_family(family: Family) -> Scheme {
        match family {
            Family::A => Scheme::TwoEigen,
            Family::C => Scheme::B,
            Family::B | Family::D => Scheme::A,
        }
    }

    pub fn applicable(family: Family) -> &'static [Scheme] {
        match family {
            Family::A => &[Scheme::TwoEigen],
            _ => &[Scheme::A, Scheme::B],
        }
    }
}

/// The Baxterization of the finite `R̂`, with `z` in slot `Z`.
pub fn baxterize(family: Family, n: usize, scheme: Scheme) -> SparseMat {
    let rhat = rhat_explicit(family, n);
    let rinv = rbar_explicit(family, n);
    let id = SparseMat::identity(rhat.n_rows());
    let lam = eigenvalues(family, n);
    let z = Scalar::z();
    let one = Scalar::one();
    let zm1 = &z - &one;
    match scheme {
        // λ1 = -r/s lives on w2, λ2 = 1 on w1.
        Scheme::TwoEigen => rhat.scale(&lam[0].inv()).add(&rinv.scale(&(&z * &lam[1]))),
        Scheme::A | Scheme::B => {
            let (l1, l2, l3) = (&lam[0], &lam[1], &lam[2]);
            let last = if scheme == Scheme::A { l2 / l3 } else { &(l1 * l1) / &(l2 * l3) };
            let k_id = &(&(&(&one + &(l1 / l2)) + &(l1 / l3)) + &last) * &z;
            let k_r = if scheme == Scheme::A { l3.inv() } else { l1 / &(l2 * l3) };
            rinv.scale(&(&(l1 * &z) * &zm1)).add(&id.scale(&k_id)).sub(&rhat.scale(&(&k_r * &zm1)))
        }
    }
}

/// A pair of evaluation modules `V(x)`, `V(y)` sharing the parameters `a, b`.
pub struct EvalPair {
    pub vx: Representation,
    pub vy: Representation,
}

impl EvalPair {
    pub fn new(family: Family, n: usize, params: EvalParams) -> Result<EvalPair, RootError> {
        Ok(EvalPair { vx: evaluation(family, n, params, X)?, vy: evaluation(family, n, params, Y)? })
    }
}

/// `R̂(x/y) Δ_{x,y}(g) = Δ_{y,x}(g) R̂(x/y)` for one generator.
pub fn check_intertwine_gen(pair: &EvalPair, rz: &SparseMat, g: Gen) -> Check {
    let lhs = rz.mul(&coproduct2(&pair.vx, &pair.vy, g));
    let rhs = coproduct2(&pair.vy, &pair.vx, g).mul(rz);
    Check::equal(g.to_string(), &lhs, &rhs)
}

/// `R̂(x/y)` as an operator `V(x) ⊗ V(y) → V(y) ⊗ V(x)` for all generators.
pub fn check_intertwine(pair: &EvalPair, rz: &SparseMat) -> Check {
    let r = at(rz, &(&Scalar::var(X) / &Scalar::var(Y)));
    Check::all(
        "affine intertwine",
        pair.vx.generators().into_iter().map(|g| check_intertwine_gen(pair, &r, g)),
    )
}

/// `R̂12(y) R̂23(xy) R̂12(x) = R̂23(x) R̂12(xy) R̂23(y)`.
pub fn check_spectral_ybe(rz: &SparseMat, dim: usize) -> Check {
    let id = SparseMat::identity(dim);
    let (x, y) = (Scalar::var(X), Scalar::var(Y));
    let xy = &x * &y;
    let r12 = |w: &Scalar| at(rz, w).kron(&id);
    let r23 = |w: &Scalar| id.kron(&at(rz, w));
    let lhs = r12(&y).mul(&r23(&xy)).mul(&r12(&x));
    let rhs = r23(&x).mul(&r12(&xy)).mul(&r23(&y));
    Check::equal("spectral ybe", &lhs, &rhs)
}

/// `R̂(1)` is a scalar multiple of the identity.
pub fn check_unitarity_point(rz: &SparseMat) -> Check {
    let r1 = at(rz, &Scalar::one());
    let c = r1.get(0, 0);
    Check::equal("R(1) scalar", &r1, &SparseMat::identity(r1.n_rows()).scale(&c))
}

/// `R̂(0)` is a scalar multiple of the finite `R̂`.
pub fn check_zero_limit(family: Family, n: usize, rz: &SparseMat) -> Check {
    let r0 = at(rz, &Scalar::zero());
    let fin = rhat_explicit(family, n);
    let c = &r0.get(0, 0) / &fin.get(0, 0);
    Check::equal("R(0) finite", &r0, &fin.scale(&c))
}

#[derive(Clone, Debug, Serialize)]
pub struct SchemeOutcome {
    pub scheme: Scheme,
    pub matches_closed_form: bool,
    pub intertwines: bool,
}

/// Which Baxterization schemes reproduce the closed form and intertwine.
pub fn scheme_report(family: Family, n: usize) -> Result<Vec<SchemeOutcome>, RootError> {
    let closed = rhat_z(family, n);
    let pair = EvalPair::new(family, n, EvalParams::Symbolic)?;
    Ok(Scheme::applicable(family)
        .iter()
        .map(|&scheme| {
            let b = baxterize(family, n, scheme);
            SchemeOutcome {
                scheme,
                matches_closed_form: b == closed,
                intertwines: check_intertwine(&pair, &b).passed(),
            }
        })
        .collect())
}

pub const CHECKS: &[&str] = &["intertwine", "baxterize", "ybe", "unitarity", "zero-limit"];

/// Runs the requested affine checks (all of them when `only` is empty).
pub fn verify(family: Family, n: usize, only: &[String]) -> Result<Vec<Check>, RootError> {
    let want = |c: &str| only.is_empty() || only.iter().any(|o| o == c);
    let rz = rhat_z(family, n);
    let mut out = Vec::new();
    if want("intertwine") {
        let pair = EvalPair::new(family, n, EvalParams::Symbolic)?;
        out.push(check_intertwine(&pair, &rz));
    }
    if want("baxterize") {
        let scheme = Scheme::for_family(family);
        out.push(Check::equal(format!("baxterize ({})", scheme.name()), &baxterize(family, n, scheme), &rz));
    }
    if want("ybe") {
        out.push(check_spectral_ybe(&rz, family.module_dim(n)));
    }
    if want("unitarity") {
        out.push(check_unitarity_point(&rz));
    }
    if want("zero-limit") {
        out.push(check_zero_limit(family, n, &rz));
    }
    Ok(out)
}
