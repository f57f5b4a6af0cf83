//! Classical root systems with the standard ordering of simple roots, the
//! Ringel form, Cartan-element pairings and Weyl dimensions.
//!
//! Weights are stored in ε-coordinates: `ε_1..ε_{n+1}` for type A and
//! `ε_1..ε_n` otherwise. Roots additionally carry their simple-root
//! coefficients.

use crate::scalar::Scalar;
use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;

pub type R64 = Rational64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::A, Family::B, Family::C, Family::D];

    pub fn min_rank(self) -> usize {
        match self {
            Family::A | Family::B => 1,
            Family::C | Family::D => 2,
        }
    }

    /// Dimension of the first fundamental module.
    pub fn module_dim(self, n: usize) -> usize {
        match self {
            Family::A => n + 1,
            Family::B => 2 * n + 1,
            Family::C | Family::D => 2 * n,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
        };
        f.write_str(c)
    }
}

impl FromStr for Family {
    type Err = RootError;
    fn from_str(s: &str) -> Result<Family, RootError> {
        match s.trim() {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            other => Err(RootError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family}{rank}: rank must be at least {min}")]
    RankTooSmall { family: Family, rank: usize, min: usize },
    #[error("weight {0:?} is not dominant integral")]
    NotDominant(Vec<i32>),
    #[error("pairing exponent {0} is not a half-integer")]
    OffLattice(R64),
    #[error("{0:?} is not a positive root")]
    NotARoot(Vec<i32>),
}

/// A weight in ε-coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Weight(pub Vec<i32>);

impl Weight {
    pub fn zero(dim: usize) -> Weight {
        Weight(vec![0; dim])
    }

    /// `ε_k`, 1-based.
    pub fn eps(dim: usize, k: usize) -> Weight {
        let mut w = Weight::zero(dim);
        w.0[k - 1] = 1;
        w
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: i32) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Root {
    /// Coefficients over the simple roots.
    pub alpha: Vec<i32>,
    pub eps: Weight,
    /// `gamma_ij` / `beta_ij` label.
    pub name: String,
}

impl Root {
    pub fn height(&self) -> i32 {
        self.alpha.iter().sum()
    }

    pub fn is_simple(&self) -> bool {
        self.height() == 1
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    simple: Vec<Weight>,
    positive: Vec<Root>,
    d: Vec<i32>,
    cartan: Vec<Vec<i32>>,
    ringel: Vec<Vec<i32>>,
    /// `⟨ε_a, ε_b⟩`.
    eps_form: Vec<Vec<R64>>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<RootSystem, RootError> {
        let min = family.min_rank();
        if rank < min {
            return Err(RootError::RankTooSmall { family, rank, min });
        }
        let n = rank;
        let dim = eps_dim(family, n);
        let e = |k: usize| Weight::eps(dim, k);
        let simple: Vec<Weight> = (1..=n)
            .map(|i| match (family, i == n) {
                (Family::B, true) => e(n),
                (Family::C, true) => e(n).scale(2),
                (Family::D, true) => e(n - 1).add(&e(n)),
                _ => e(i).sub(&e(i + 1)),
            })
            .collect();
        let d: Vec<i32> = (1..=n)
            .map(|i| match family {
                Family::B if i < n => 2,
                Family::C if i == n => 2,
                _ => 1,
            })
            .collect();
        let sym = |a: &Weight, b: &Weight| -> i32 {
            let dot: i32 = a.0.iter().zip(&b.0).map(|(x, y)| x * y).sum();
            if family == Family::B {
                2 * dot
            } else {
                dot
            }
        };
        let cartan: Vec<Vec<i32>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * sym(&simple[i], &simple[j]) / sym(&simple[i], &simple[i])).collect())
            .collect();
        let ringel: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if family == Family::D && n >= 2 && i == n - 2 && j == n - 1 {
                            -1
                        } else if family == Family::D && n >= 2 && i == n - 1 && j == n - 2 {
                            1
                        } else if i < j {
                            d[i] * cartan[i][j]
                        } else if i == j {
                            d[i]
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();

        let mut rs = RootSystem {
            family,
            rank,
            simple,
            positive: Vec::new(),
            d,
            cartan,
            ringel,
            eps_form: Vec::new(),
        };
        rs.eps_form = rs.build_eps_form();
        rs.positive = rs.enumerate_positive();
        Ok(rs)
    }

    fn build_eps_form(&self) -> Vec<Vec<R64>> {
        let dim = self.eps_dim();
        if self.family == Family::A {
            return (0..dim)
                .map(|a| (0..dim).map(|b| if a < b { R64::from(-1) } else { R64::zero() }).collect())
                .collect();
        }
        let coords: Vec<Vec<R64>> = (1..=dim).map(|k| self.to_alpha(&Weight::eps(dim, k))).collect();
        (0..dim)
            .map(|a| (0..dim).map(|b| self.ringel_rational(&coords[a], &coords[b])).collect())
            .collect()
    }

    fn ringel_rational(&self, x: &[R64], y: &[R64]) -> R64 {
        let mut acc = R64::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += x[i] * y[j] * R64::from(self.ringel[i][j] as i64);
            }
        }
        acc
    }

    fn enumerate_positive(&self) -> Vec<Root> {
        let n = self.rank;
        let dim = self.eps_dim();
        let e = |k: usize| Weight::eps(dim, k);
        let mut out = Vec::new();
        let mut push = |w: Weight, name: String| {
            let alpha = self.to_alpha(&w).iter().map(|c| c.to_integer() as i32).collect();
            out.push(Root { alpha, eps: w, name });
        };
        for i in 1..=n {
            for j in i..=n {
                let w = match self.family {
                    Family::A => e(i).sub(&e(j + 1)),
                    _ if j < n => e(i).sub(&e(j + 1)),
                    Family::B => e(i),
                    Family::C => e(i).add(&e(n)),
                    Family::D => continue,
                };
                push(w, format!("gamma_{}_{}", i, j));
            }
        }
        match self.family {
            Family::B | Family::D => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        push(e(i).add(&e(j)), format!("beta_{}_{}", i, j));
                    }
                }
            }
            Family::C => {
                for i in 1..n {
                    for j in i..n {
                        push(e(i).add(&e(j)), format!("beta_{}_{}", i, j));
                    }
                }
            }
            Family::A => {}
        }
        out
    }

    pub fn eps_dim(&self) -> usize {
        eps_dim(self.family, self.rank)
    }

    /// Dimension `N` of the first fundamental module.
    pub fn module_dim(&self) -> usize {
        self.family.module_dim(self.rank)
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn symmetrizers(&self) -> &[i32] {
        &self.d
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn ringel_matrix(&self) -> &[Vec<i32>] {
        &self.ringel
    }

    /// Index of the positive root with the given simple-root coefficients.
    pub fn root_index(&self, alpha: &[i32]) -> Option<usize> {
        self.positive.iter().position(|r| r.alpha == alpha)
    }

    pub fn root_by_name(&self, name: &str) -> Option<usize> {
        self.positive.iter().position(|r| r.name == name)
    }

    /// Index of the `i`-th simple root (1-based) among the positive roots.
    pub fn simple_index(&self, i: usize) -> usize {
        let mut a = vec![0; self.rank];
        a[i - 1] = 1;
        self.root_index(&a).expect("simple roots are positive")
    }

    /// Converts ε-coordinates to simple-root coefficients. For type A the
    /// input must lie in the span of the roots (coordinate sum zero).
    pub fn to_alpha(&self, w: &Weight) -> Vec<R64> {
        let n = self.rank;
        let lam: Vec<R64> = w.0.iter().map(|&x| R64::from(x as i64)).collect();
        let prefix = |k: usize| lam[..k].iter().fold(R64::zero(), |a, b| a + b);
        let half = R64::new(1, 2);
        (1..=n)
            .map(|i| match self.family {
                Family::A | Family::B => prefix(i),
                Family::C if i == n => prefix(n) * half,
                Family::C => prefix(i),
                Family::D if i == n => prefix(n) * half,
                Family::D if i == n - 1 => (prefix(n - 1) - lam[n - 1]) * half,
                Family::D => prefix(i),
            })
            .collect()
    }

    pub fn alpha_to_weight(&self, alpha: &[i32]) -> Weight {
        let mut w = Weight::zero(self.eps_dim());
        for (i, &k) in alpha.iter().enumerate() {
            w = w.add(&self.simple[i].scale(k));
        }
        w
    }

    /// Ringel form on simple-root coefficient vectors.
    pub fn ringel_alpha(&self, a: &[i32], b: &[i32]) -> i32 {
        let mut acc = 0;
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += a[i] * b[j] * self.ringel[i][j];
            }
        }
        acc
    }

    /// Symmetric form `(μ, ν) = ⟨μ,ν⟩ + ⟨ν,μ⟩` on coefficient vectors.
    pub fn sym_alpha(&self, a: &[i32], b: &[i32]) -> i32 {
        self.ringel_alpha(a, b) + self.ringel_alpha(b, a)
    }

    /// Ringel form extended to ε-coordinates.
    pub fn ringel(&self, l: &Weight, m: &Weight) -> R64 {
        let mut acc = R64::zero();
        for (a, &x) in l.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (b, &y) in m.0.iter().enumerate() {
                if y != 0 {
                    acc += self.eps_form[a][b] * R64::from((x * y) as i64);
                }
            }
        }
        acc
    }

    /// The invariant form in ε-coordinates (`(ε_i,ε_i) = 2` in type B).
    pub fn sym_eps(&self, l: &[R64], m: &[R64]) -> R64 {
        let dot = l.iter().zip(m).fold(R64::zero(), |acc, (x, y)| acc + x * y);
        if self.family == Family::B {
            dot * R64::from(2)
        } else {
            dot
        }
    }

    /// `(ω'_λ, ω_μ) = r^{⟨λ,μ⟩} s^{-⟨μ,λ⟩}`.
    pub fn omega_pairing(&self, l: &Weight, m: &Weight) -> Result<Scalar, RootError> {
        let p = half_integer(self.ringel(l, m))?;
        let q = half_integer(self.ringel(m, l))?;
        Ok(Scalar::uv(p, -q))
    }

    /// Pairing on simple-root coefficient vectors; always a monomial in `r, s`.
    pub fn omega_pairing_alpha(&self, a: &[i32], b: &[i32]) -> Scalar {
        Scalar::rs(self.ringel_alpha(a, b), -self.ringel_alpha(b, a))
    }

    /// `f(λ, μ) = (ω'_μ, ω_λ)^{-1}`.
    pub fn f_function(&self, l: &Weight, m: &Weight) -> Result<Scalar, RootError> {
        Ok(self.omega_pairing(m, l)?.inv())
    }

    /// `r_i = r^{d_i}`, 1-based.
    pub fn r_i(&self, i: usize) -> Scalar {
        Scalar::rs(self.d[i - 1], 0)
    }

    pub fn s_i(&self, i: usize) -> Scalar {
        Scalar::rs(0, self.d[i - 1])
    }

    /// `(γ, γ) / 2` for a root given by coefficients.
    pub fn half_norm(&self, alpha: &[i32]) -> i32 {
        self.sym_alpha(alpha, alpha) / 2
    }

    pub fn r_gamma(&self, alpha: &[i32]) -> Scalar {
        Scalar::rs(self.half_norm(alpha), 0)
    }

    pub fn s_gamma(&self, alpha: &[i32]) -> Scalar {
        Scalar::rs(0, self.half_norm(alpha))
    }

    /// Half the sum of positive roots, in ε-coordinates.
    pub fn rho(&self) -> Vec<R64> {
        let mut acc = vec![R64::zero(); self.eps_dim()];
        for r in &self.positive {
            for (a, &x) in acc.iter_mut().zip(&r.eps.0) {
                *a += R64::new(x as i64, 2);
            }
        }
        acc
    }

    pub fn is_dominant(&self, l: &Weight) -> bool {
        let lr: Vec<R64> = l.0.iter().map(|&x| R64::from(x as i64)).collect();
        self.simple.iter().all(|a| {
            let ar: Vec<R64> = a.0.iter().map(|&x| R64::from(x as i64)).collect();
            let c = R64::from(2) * self.sym_eps(&lr, &ar) / self.sym_eps(&ar, &ar);
            c.is_integer() && !c.is_negative()
        })
    }

    /// Weyl dimension of the irreducible module with highest weight `λ`.
    pub fn weyl_dimension(&self, l: &Weight) -> Result<u64, RootError> {
        if !self.is_dominant(l) {
            return Err(RootError::NotDominant(l.0.clone()));
        }
        let rho = self.rho();
        let lr: Vec<R64> = l.0.iter().zip(&rho).map(|(&x, p)| R64::from(x as i64) + p).collect();
        let mut acc = R64::from(1);
        for r in &self.positive {
            let a: Vec<R64> = r.eps.0.iter().map(|&x| R64::from(x as i64)).collect();
            acc *= self.sym_eps(&lr, &a) / self.sym_eps(&rho, &a);
        }
        debug_assert!(acc.is_integer());
        Ok(acc.to_integer() as u64)
    }

    /// Highest weights of the irreducible summands of `V ⊗ V`.
    pub fn square_components(&self) -> Vec<Weight> {
        let d = self.eps_dim();
        let e1 = Weight::eps(d, 1);
        let e2 = Weight::eps(d, 2);
        let mut out = vec![e1.scale(2), e1.add(&e2)];
        if self.family != Family::A {
            out.push(Weight::zero(d));
        }
        out
    }

    /// Highest root: the positive root dominating all others coefficientwise.
    pub fn highest_root(&self) -> &Root {
        self.positive
            .iter()
            .find(|t| self.positive.iter().all(|r| r.alpha.iter().zip(&t.alpha).all(|(a, b)| a <= b)))
            .expect("a highest root exists for irreducible systems")
    }

    pub fn affine_data(&self) -> AffineData {
        let n = self.rank;
        let theta = self.highest_root().clone();
        let neg_theta: Vec<i32> = theta.alpha.iter().map(|x| -x).collect();
        let simple = |i: usize| -> Vec<i32> {
            if i == 0 {
                neg_theta.clone()
            } else {
                let mut a = vec![0; n];
                a[i - 1] = 1;
                a
            }
        };
        let omega = (0..=n)
            .map(|i| (0..=n).map(|j| self.omega_pairing_alpha(&simple(i), &simple(j))).collect())
            .collect();
        let cartan = (0..=n)
            .map(|i| {
                (0..=n)
                    .map(|j| 2 * self.sym_alpha(&simple(i), &simple(j)) / self.sym_alpha(&simple(i), &simple(i)))
                    .collect()
            })
            .collect();
        let d0 = self.half_norm(&theta.alpha);
        AffineData { theta, omega, cartan, d0, r0: Scalar::rs(d0, 0), s0: Scalar::rs(0, d0) }
    }
}

fn eps_dim(family: Family, n: usize) -> usize {
    if family == Family::A {
        n + 1
    } else {
        n
    }
}

fn half_integer(x: R64) -> Result<i32, RootError> {
    let d = x * R64::from(2);
    if d.is_integer() {
        Ok(d.to_integer() as i32)
    } else {
        Err(RootError::OffLattice(x))
    }
}

/// Structural constants of the untwisted affine extension. Index 0 is the
/// affine node `α_0 = δ − θ`.
#[derive(Clone, Debug)]
pub struct AffineData {
    pub theta: Root,
    /// `Ω_{ij}`, `0 ≤ i, j ≤ n`.
    pub omega: Vec<Vec<Scalar>>,
    /// Extended Cartan matrix.
    pub cartan: Vec<Vec<i32>>,
    pub d0: i32,
    pub r0: Scalar,
    pub s0: Scalar,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_root_counts() {
        for n in 1..=5 {
            assert_eq!(RootSystem::new(Family::A, n).unwrap().positive_roots().len(), n * (n + 1) / 2);
            assert_eq!(RootSystem::new(Family::B, n).unwrap().positive_roots().len(), n * n);
        }
        for n in 2..=5 {
            assert_eq!(RootSystem::new(Family::C, n).unwrap().positive_roots().len(), n * n);
            assert_eq!(RootSystem::new(Family::D, n).unwrap().positive_roots().len(), n * (n - 1));
        }
    }

    #[test]
    fn b2_roots() {
        let rs = RootSystem::new(Family::B, 2).unwrap();
        let mut got: Vec<Vec<i32>> = rs.positive_roots().iter().map(|r| r.alpha.clone()).collect();
        got.sort();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2]]);
    }

    #[test]
    fn rank_minimum() {
        assert!(RootSystem::new(Family::C, 1).is_err());
        assert!(RootSystem::new(Family::A, 0).is_err());
    }

    #[test]
    fn d_type_exception() {
        let rs = RootSystem::new(Family::D, 4).unwrap();
        let g = rs.ringel_matrix();
        assert_eq!((g[2][3], g[3][2]), (-1, 1));
    }

    #[test]
    fn simple_pairings() {
        let b = RootSystem::new(Family::B, 3).unwrap();
        let an = Weight::eps(3, 3);
        assert_eq!(b.omega_pairing(&an, &an).unwrap(), Scalar::rs(1, -1));
        let a = RootSystem::new(Family::A, 3).unwrap();
        let a2 = a.simple_roots()[1].clone();
        assert_eq!(a.omega_pairing(&a2, &a2).unwrap(), Scalar::rs(1, -1));
        assert!(a.omega_pairing(&Weight::zero(4), &a2).unwrap().is_one());
    }

    #[test]
    fn f_values() {
        let b = RootSystem::new(Family::B, 3).unwrap();
        let (e1, e2) = (Weight::eps(3, 1), Weight::eps(3, 2));
        assert_eq!(b.f_function(&e1, &e2).unwrap(), Scalar::rs(-1, -1));
        let c = RootSystem::new(Family::C, 3).unwrap();
        assert_eq!(c.f_function(&e1, &e1).unwrap(), Scalar::uv(-1, 1));
    }

    #[test]
    fn dimensions() {
        let b = RootSystem::new(Family::B, 3).unwrap();
        assert_eq!(b.weyl_dimension(&Weight(vec![2, 0, 0])).unwrap(), 27);
        let c = RootSystem::new(Family::C, 3).unwrap();
        assert_eq!(c.weyl_dimension(&Weight(vec![1, 1, 0])).unwrap(), 14);
        assert_eq!(c.weyl_dimension(&Weight::zero(3)).unwrap(), 1);
        assert!(c.weyl_dimension(&Weight(vec![0, 1, 0])).is_err());
    }

    #[test]
    fn affine_structure_values() {
        let c = RootSystem::new(Family::C, 3).unwrap().affine_data();
        assert_eq!(c.omega[1][0], Scalar::rs(0, 2));
        assert_eq!(c.omega[3][0], Scalar::rs(-2, -2));
        let b = RootSystem::new(Family::B, 3).unwrap().affine_data();
        assert_eq!((b.cartan[0][1], b.cartan[0][2]), (0, -1));
        assert_eq!(b.omega[1][0], Scalar::rs(2, 2));
    }
}
