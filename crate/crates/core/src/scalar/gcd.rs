//! Multivariate polynomial GCD over the rationals by recursive subresultant
//! pseudo-remainder sequences.
//!
//! Inputs are treated as polynomials in the Laurent ring, so monomial factors
//! are units and the result carries no monomial factor. The result is monic in
//! graded-lex order.

use super::mono::{Mono, NVARS};
use super::poly::{Poly, Q};
use num_traits::Zero;

/// Greatest common divisor in the Laurent ring. Monic, free of monomial
/// factors; `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let a = strip_monomial(a);
    let b = strip_monomial(b);
    gcd_poly(&a, &b)
}

fn strip_monomial(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let m = p.min_mono();
    p.shift(&m.inv())
}

/// Both inputs are polynomials without monomial content.
fn gcd_poly(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.is_monomial() || b.is_monomial() {
        return Poly::one();
    }
    if a == b {
        return a.monic();
    }
    // Cheap divisibility probes catch the common "one divides the other" case.
    if a.len() <= b.len() {
        if b.div_exact(a).is_some() {
            return a.monic();
        }
    } else if a.div_exact(b).is_some() {
        return b.monic();
    }

    if a.is_polynomial() && b.is_polynomial() && coprime_by_images(a, b) {
        return Poly::one();
    }

    let slot = match main_variable(a, b) {
        Some(s) => s,
        None => return Poly::one(),
    };
    let da = a.degree_in(slot);
    let db = b.degree_in(slot);
    if da == 0 {
        return gcd_poly(a, &strip_monomial(&content(b, slot)));
    }
    if db == 0 {
        return gcd_poly(&strip_monomial(&content(a, slot)), b);
    }
    let ca = content(a, slot);
    let cb = content(b, slot);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_poly(&strip_monomial(&ca), &strip_monomial(&cb));
    let g = subresultant(&pa, &pb, slot);
    let g = if g.degree_in(slot) == 0 {
        Poly::one()
    } else {
        let cg = content(&g, slot);
        strip_monomial(&g.div_exact(&cg).expect("content divides"))
    };
    c.mul(&g).monic()
}

/// Evaluation points for the coprimality probe; all coordinates nonzero.
const PROBES: [[i64; NVARS]; 3] = [
    [3, 5, 7, 11, 13, 17, 19, 23],
    [-2, 9, -4, 6, 29, -10, 31, 8],
    [37, -3, 14, -5, 2, 41, -7, 12],
];

/// Dense coefficients (lowest degree first) of `p` with every slot except
/// `keep` evaluated at `pt`. Exponents are nonnegative here.
fn image(p: &Poly, keep: usize, pt: &[i64; NVARS]) -> Vec<Q> {
    let mut out = vec![Q::zero(); p.degree_in(keep) as usize + 1];
    for (m, c) in p.terms() {
        let mut k = c.clone();
        for (s, &x) in pt.iter().enumerate() {
            let e = m.exp(s);
            if s != keep && e != 0 {
                k *= num_traits::pow(Q::from_integer(x.into()), e as usize);
            }
        }
        out[m.exp(keep) as usize] += k;
    }
    out
}

fn trim(mut p: Vec<Q>) -> Vec<Q> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Degree of the univariate GCD over `Q` by the Euclidean algorithm.
fn univariate_gcd_degree(a: Vec<Q>, b: Vec<Q>) -> usize {
    let (mut a, mut b) = (trim(a), trim(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let lb = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let k = a.last().unwrap() / &lb;
            let off = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                a[off + i] -= &k * c;
            }
            a.pop();
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Proves `gcd(a, b) = 1` through univariate images. For each variable, an
/// image preserving both degrees bounds the GCD's degree in that variable
/// from above. `false` means inconclusive.
fn coprime_by_images(a: &Poly, b: &Poly) -> bool {
    (0..NVARS).all(|slot| {
        let (da, db) = (a.degree_in(slot), b.degree_in(slot));
        if da == 0 || db == 0 {
            return true;
        }
        PROBES.iter().any(|pt| {
            let (ia, ib) = (image(a, slot, pt), image(b, slot, pt));
            !ia[da as usize].is_zero() && !ib[db as usize].is_zero() && univariate_gcd_degree(ia, ib) == 0
        })
    })
}

/// Variable of largest combined degree among those occurring in both inputs;
/// falls back to any variable that occurs at all.
fn main_variable(a: &Poly, b: &Poly) -> Option<usize> {
    let mut best: Option<(usize, i32)> = None;
    for slot in 0..NVARS {
        let (da, db) = (a.degree_in(slot), b.degree_in(slot));
        if da > 0 && db > 0 {
            let score = da + db;
            if best.map_or(true, |(_, s)| score > s) {
                best = Some((slot, score));
            }
        }
    }
    if best.is_some() {
        return best.map(|b| b.0);
    }
    (0..NVARS).find(|&s| a.degree_in(s) > 0 || b.degree_in(s) > 0)
}

/// GCD of the coefficients of `p` viewed as a polynomial in `slot`.
pub(crate) fn content(p: &Poly, slot: usize) -> Poly {
    let mut coeffs: Vec<Poly> = p.coeffs_in(slot).into_iter().filter(|c| !c.is_zero()).collect();
    let shared = coeffs
        .iter()
        .map(|c| c.min_mono())
        .reduce(|a, b| a.meet(&b))
        .unwrap_or(Mono::ONE);
    coeffs.sort_by_key(|c| c.len());
    let mut g = Poly::zero();
    for c in coeffs {
        let c = strip_monomial(&c);
        g = if g.is_zero() { c.monic() } else { gcd_poly(&g, &c) };
        if g.is_one() {
            break;
        }
    }
    g.shift(&shared)
}

fn lc_in(p: &Poly, slot: usize) -> Poly {
    p.coeff_of(slot, p.degree_in(slot))
}

/// Pseudo-remainder of `a` by `b` in the given variable.
fn prem(a: &Poly, b: &Poly, slot: usize) -> Poly {
    let n = b.degree_in(slot);
    let lb = lc_in(b, slot);
    let mut r = a.clone();
    let mut e = a.degree_in(slot) - n + 1;
    while !r.is_zero() && r.degree_in(slot) >= n {
        let dr = r.degree_in(slot);
        let lr = lc_in(&r, slot);
        let shifted = b.shift(&Mono::var(slot, dr - n)).mul(&lr);
        r = r.mul(&lb).sub(&shifted);
        e -= 1;
    }
    if e > 0 {
        r = r.mul(&lb.pow(e as u32));
    }
    r
}

/// Last nonzero element of the subresultant PRS of two primitive inputs.
fn subresultant(a: &Poly, b: &Poly, slot: usize) -> Poly {
    let (mut f1, mut f2) = if a.degree_in(slot) >= b.degree_in(slot) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut g = Poly::one();
    let mut h = Poly::one();
    loop {
        let delta = f1.degree_in(slot) - f2.degree_in(slot);
        let r = prem(&f1, &f2, slot);
        if r.is_zero() {
            return f2;
        }
        if r.degree_in(slot) == 0 {
            return Poly::one();
        }
        let divisor = g.mul(&h.pow(delta as u32));
        let next = r.div_exact(&divisor).expect("subresultant division is exact");
        f1 = f2;
        f2 = next;
        g = lc_in(&f1, slot);
        h = if delta == 0 {
            h
        } else if delta == 1 {
            g.clone()
        } else {
            g.pow(delta as u32)
                .div_exact(&h.pow(delta as u32 - 1))
                .expect("subresultant division is exact")
        };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::poly::Q;

    fn v(slot: usize, e: i32) -> Poly {
        Poly::monomial(Mono::var(slot, e))
    }
    fn c(k: i64) -> Poly {
        Poly::from_int(k)
    }

    #[test]
    fn univariate_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = v(0, 1).sub(&c(1)).mul(&v(0, 1).add(&c(2)));
        let b = v(0, 1).sub(&c(1)).mul(&v(0, 1).sub(&c(3)));
        assert_eq!(gcd(&a, &b), v(0, 1).sub(&c(1)));
    }

    #[test]
    fn bivariate_shared_factor() {
        let common = v(0, 2).sub(&v(1, 2)); // x^2 - y^2
        let a = common.mul(&v(0, 1).add(&v(1, 3)));
        let b = common.mul(&v(0, 2).mul(&v(1, 1)).add(&c(5)));
        assert_eq!(gcd(&a, &b), common.monic());
    }

    #[test]
    fn content_factor_in_other_variable() {
        // (y+1)(x+y) and (y+1)(x-y)
        let yp = v(1, 1).add(&c(1));
        let a = yp.mul(&v(0, 1).add(&v(1, 1)));
        let b = yp.mul(&v(0, 1).sub(&v(1, 1)));
        assert_eq!(gcd(&a, &b), yp);
    }

    #[test]
    fn monomials_are_units() {
        let a = v(0, 3).mul(&v(0, 1).add(&v(1, 1)));
        let b = v(0, 1).mul(&v(1, 2));
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn rational_coefficients() {
        let half = Poly::constant(Q::new(1.into(), 2.into()));
        let a = v(0, 1).add(&half).mul(&v(1, 1).sub(&c(1)));
        let b = v(0, 1).add(&half).mul(&v(1, 1).add(&c(1)));
        assert_eq!(gcd(&a, &b), v(0, 1).add(&half));
    }

    #[test]
    fn three_variables() {
        let f = v(0, 1).mul(&v(2, 1)).sub(&v(1, 2)).add(&c(1));
        let a = f.mul(&v(0, 1).add(&v(2, 2)));
        let b = f.mul(&f).mul(&v(1, 1).sub(&v(2, 1)));
        assert_eq!(gcd(&a, &b), f.monic());
    }
}
