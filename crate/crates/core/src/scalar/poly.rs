//! Sparse multivariate Laurent polynomials with arbitrary-precision rational
//! coefficients.

use super::mono::{Mono, NVARS};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

pub type Q = BigRational;

/// Terms are kept sorted strictly descending in graded-lex order, so the
/// leading term is `terms[0]`. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: Vec<(Mono, Q)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Q::one())
    }

    pub fn constant(c: Q) -> Poly {
        Poly::term(Mono::ONE, c)
    }

    pub fn from_int(c: i64) -> Poly {
        Poly::constant(Q::from_integer(BigInt::from(c)))
    }

    pub fn term(m: Mono, c: Q) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn monomial(m: Mono) -> Poly {
        Poly::term(m, Q::one())
    }

    /// Builds a polynomial from unsorted, possibly repeated terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Q)>>(it: I) -> Poly {
        let mut acc: HashMap<Mono, Q> = HashMap::new();
        for (m, c) in it {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(v) => *v += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<(Mono, Q)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, Q)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Mono, Q)> {
        self.terms.first()
    }

    pub fn lc(&self) -> Q {
        self.terms.first().map_or_else(Q::zero, |t| t.1.clone())
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_mono(&self) -> Mono {
        let mut it = self.terms.iter();
        let first = match it.next() {
            Some(t) => t.0,
            None => return Mono::ONE,
        };
        it.fold(first, |acc, t| acc.meet(&t.0))
    }

    pub fn max_mono(&self) -> Mono {
        let mut it = self.terms.iter();
        let first = match it.next() {
            Some(t) => t.0,
            None => return Mono::ONE,
        };
        it.fold(first, |acc, t| acc.join(&t.0))
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_polynomial())
    }

    pub fn arity(&self) -> usize {
        self.terms.iter().map(|t| t.0.arity()).max().unwrap_or(0)
    }

    pub fn mentions(&self, slot: usize) -> bool {
        self.terms.iter().any(|t| t.0.exp(slot) != 0)
    }

    /// Multiplication by a Laurent monomial keeps the term order.
    pub fn shift(&self, m: &Mono) -> Poly {
        if m.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(m, d)| (*m, d * c)).collect(),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.merge(o, true)
    }

    fn merge(&self, o: &Poly, negate: bool) -> Poly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        Poly { terms: out }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return o.shift(m).scale(c);
        }
        if o.terms.len() == 1 {
            let (m, c) = &o.terms[0];
            return self.shift(m).scale(c);
        }
        let mut acc: HashMap<Mono, Q> = HashMap::with_capacity(self.len() * o.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<(Mono, Q)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    /// Non-negative integer power by repeated squaring.
    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Exact division of polynomials (non-negative exponents). Returns `None`
    /// when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if d.terms.len() == 1 {
            let (m, c) = &d.terms[0];
            let inv = m.inv();
            let q = self.shift(&inv).scale(&c.recip());
            if q.is_polynomial() || !self.is_polynomial() {
                return Some(q);
            }
            return None;
        }
        let (dm, dc) = d.terms[0].clone();
        let dc_inv = dc.recip();
        let mut rem = self.clone();
        let mut quot: Vec<(Mono, Q)> = Vec::new();
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            if !dm.divides(&rm) {
                return None;
            }
            let qm = rm.div(&dm);
            let qc = &rc * &dc_inv;
            rem = rem.sub(&d.shift(&qm).scale(&qc));
            quot.push((qm, qc));
        }
        Some(Poly { terms: quot })
    }

    /// Exact division in the Laurent ring: monomial factors are units.
    pub fn div_exact_laurent(&self, d: &Poly) -> Option<Poly> {
        let ms = self.min_mono();
        let md = d.min_mono();
        let q = self.shift(&ms.inv()).div_exact(&d.shift(&md.inv()))?;
        Some(q.shift(&ms.div(&md)))
    }

    pub fn degree_in(&self, slot: usize) -> i32 {
        self.terms.iter().map(|t| t.0.exp(slot)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> i32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// Coefficients with respect to one variable (non-negative exponents);
    /// entry `k` multiplies `x^k` and no longer mentions the variable.
    pub fn coeffs_in(&self, slot: usize) -> Vec<Poly> {
        let deg = self.degree_in(slot).max(0) as usize;
        let mut buckets: Vec<Vec<(Mono, Q)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(slot);
            debug_assert!(e >= 0);
            let mut mm = *m;
            mm.0[slot] = 0;
            buckets[e as usize].push((mm, c.clone()));
        }
        buckets.into_iter().map(Poly::from_terms).collect()
    }

    /// Coefficient of `x^deg` in the given slot (leading coefficient when
    /// `deg` is the degree).
    pub fn coeff_of(&self, slot: usize, deg: i32) -> Poly {
        Poly::from_terms(self.terms.iter().filter(|t| t.0.exp(slot) == deg).map(|(m, c)| {
            let mut mm = *m;
            mm.0[slot] = 0;
            (mm, c.clone())
        }))
    }

    /// Makes the leading coefficient 1.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.lc();
        if lc.is_one() {
            return self.clone();
        }
        self.scale(&lc.recip())
    }

    /// Positive leading coefficient with coprime integer coefficients.
    pub fn primitive_integer_form(&self) -> (Q, Poly) {
        if self.is_zero() {
            return (Q::one(), Poly::zero());
        }
        use num_integer::Integer;
        let mut num_g = BigInt::zero();
        let mut den_l = BigInt::one();
        for (_, c) in &self.terms {
            num_g = num_g.gcd(c.numer());
            den_l = den_l.lcm(c.denom());
        }
        let mut content = Q::new(num_g, den_l);
        if self.lc().is_negative() {
            content = -content;
        }
        let p = self.scale(&content.recip());
        (content, p)
    }

    /// Integer-valued substitution of a whole variable slot by another
    /// polynomial is handled at the scalar level; here only monomial maps.
    pub fn map_monomials<F: Fn(&Mono) -> Mono>(&self, f: F) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    pub fn exps_fit(&self, nvars: usize) -> bool {
        nvars >= NVARS || self.arity() <= nvars
    }
}
