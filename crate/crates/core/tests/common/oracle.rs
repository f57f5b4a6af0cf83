//! Hopf pairing computed by stripping the last `e` letter instead of the last
//! `f` letter:
//!
//! `(y, x e_j) = 1/(s_j − r_j) Σ_{t : y_t = j} Π_{u > t} Ω_{j, y_u} (y without t, x)`,
//!
//! from `(y, x x') = (Δ(y), x' ⊗ x)` and the Cartan rule
//! `(ω'_μ y, x) = (ω'_μ, ω_ν)(y, x)`.

use rsq::pairing::FreeElem;
use rsq::rootdata::RootSystem;
use rsq::Scalar;
use std::collections::HashMap;

pub struct Oracle<'a> {
    rs: &'a RootSystem,
    cache: HashMap<(Vec<u8>, Vec<u8>), Scalar>,
}

impl<'a> Oracle<'a> {
    pub fn new(rs: &'a RootSystem) -> Oracle<'a> {
        Oracle { rs, cache: HashMap::new() }
    }

    fn omega(&self, a: u8, b: u8) -> Scalar {
        let n = self.rs.rank;
        let unit = |i: u8| (1..=n).map(|k| (k == i as usize) as i32).collect::<Vec<_>>();
        self.rs.omega_pairing_alpha(&unit(a), &unit(b))
    }

    pub fn words(&mut self, y: &[u8], x: &[u8]) -> Scalar {
        if y.len() != x.len() {
            return Scalar::zero();
        }
        if x.is_empty() {
            return Scalar::one();
        }
        let key = (y.to_vec(), x.to_vec());
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let j = *x.last().unwrap();
        let head = &x[..x.len() - 1];
        let gen = (self.rs.s_i(j as usize) - self.rs.r_i(j as usize)).inv();
        let mut acc = Scalar::zero();
        for t in 0..y.len() {
            if y[t] != j {
                continue;
            }
            let mut rest = y[..t].to_vec();
            rest.extend_from_slice(&y[t + 1..]);
            let sub = self.words(&rest, head);
            if sub.is_zero() {
                continue;
            }
            let w = y[t + 1..].iter().fold(Scalar::one(), |acc, &u| acc * self.omega(j, u));
            acc = acc + w * sub * &gen;
        }
        self.cache.insert(key, acc.clone());
        acc
    }

    pub fn pair(&mut self, y: &FreeElem, x: &FreeElem) -> Scalar {
        let mut acc = Scalar::zero();
        for (wy, cy) in &y.terms {
            for (wx, cx) in &x.terms {
                let p = self.words(wy, wx);
                if !p.is_zero() {
                    acc = acc + cy * cx * p;
                }
            }
        }
        acc
    }
}
