//! The fraction field of Laurent polynomials, kept in a canonical form so that
//! structural equality is mathematical equality.

use super::gcd::gcd;
use super::mono::Mono;
use super::poly::{Poly, Q};
use super::ScalarError;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// Slot of `u = r^{1/2}`.
pub const U: usize = 0;
/// Slot of `v = s^{1/2}`.
pub const V: usize = 1;
/// Slot of `w = (rs)^{1/4}`, used only where quarter powers are needed.
pub const W: usize = 2;
/// Slot of the spectral parameter `z`.
pub const Z: usize = 3;
/// Slots of the two evaluation / ratio variables.
pub const X: usize = 4;
pub const Y: usize = 5;
/// Slots of the evaluation-module parameters `a`, `b`.
pub const A: usize = 6;
pub const B: usize = 7;

/// An element of `Q(u, v, ...)`.
///
/// Canonical form: the denominator is an honest polynomial with no monomial
/// factor and leading coefficient 1 in graded-lex order; every monomial unit
/// lives in the numerator (which may carry negative exponents); numerator and
/// denominator are coprime.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Scalar {
        Scalar { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(c: i64) -> Scalar {
        Scalar::from_poly(Poly::from_int(c))
    }

    pub fn from_q(c: Q) -> Scalar {
        Scalar::from_poly(Poly::constant(c))
    }

    pub fn ratio(p: i64, q: i64) -> Scalar {
        assert!(q != 0, "zero denominator");
        Scalar::from_q(Q::new(BigInt::from(p), BigInt::from(q)))
    }

    /// A Laurent polynomial is already canonical.
    pub fn from_poly(p: Poly) -> Scalar {
        Scalar { num: p, den: Poly::one() }
    }

    pub fn mono(m: Mono) -> Scalar {
        Scalar::from_poly(Poly::monomial(m))
    }

    pub fn var(slot: usize) -> Scalar {
        Scalar::mono(Mono::var(slot, 1))
    }

    pub fn var_pow(slot: usize, e: i32) -> Scalar {
        Scalar::mono(Mono::var(slot, e))
    }

    /// `r^{p/2} s^{q/2}`, i.e. `u^p v^q`.
    pub fn uv(p: i32, q: i32) -> Scalar {
        Scalar::mono(Mono::from_slice(&[p, q]))
    }

    /// `r^p s^q` for integers `p`, `q`.
    pub fn rs(p: i32, q: i32) -> Scalar {
        Scalar::uv(2 * p, 2 * q)
    }

    pub fn r() -> Scalar {
        Scalar::rs(1, 0)
    }

    pub fn s() -> Scalar {
        Scalar::rs(0, 1)
    }

    pub fn z() -> Scalar {
        Scalar::var(Z)
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_constant()
    }

    pub fn constant_value(&self) -> Option<Q> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    /// The `(coefficient, monomial)` pair when this is a single term.
    pub fn as_monomial(&self) -> Option<(Q, Mono)> {
        if self.den.is_one() && self.num.is_monomial() {
            let (m, c) = &self.num.terms()[0];
            Some((c.clone(), *m))
        } else {
            None
        }
    }

    pub fn arity(&self) -> usize {
        self.num.arity().max(self.den.arity())
    }

    pub fn mentions(&self, slot: usize) -> bool {
        self.num.mentions(slot) || self.den.mentions(slot)
    }

    pub fn checked_inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.den.is_one() && self.num.is_monomial() {
            let (m, c) = &self.num.terms()[0];
            return Ok(Scalar::from_poly(Poly::term(m.inv(), c.recip())));
        }
        Ok(coprime(self.den.clone(), self.num.clone()))
    }

    pub fn inv(&self) -> Scalar {
        self.checked_inv().expect("inverse of zero")
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        if o.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        if o.den.is_one() && o.num.is_monomial() {
            let (m, c) = &o.num.terms()[0];
            let factor = Poly::term(m.inv(), c.recip());
            return Ok(Scalar { num: self.num.mul(&factor), den: self.den.clone() });
        }
        Ok(self * &o.inv())
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i32) -> Scalar {
        if e == 0 {
            return Scalar::one();
        }
        if e < 0 {
            return self.inv().pow(-e);
        }
        // Coprimality survives powers, so no reduction is needed.
        Scalar { num: self.num.pow(e as u32), den: self.den.pow(e as u32) }
    }

    /// Square root of a monomial with even exponents and square coefficient.
    pub fn sqrt_monomial(&self) -> Option<Scalar> {
        let (c, m) = self.as_monomial()?;
        let root = m.sqrt()?;
        if c.is_negative() {
            return None;
        }
        let (n, d) = (c.numer().sqrt(), c.denom().sqrt());
        if &(&n * &n) != c.numer() || &(&d * &d) != c.denom() {
            return None;
        }
        Some(Scalar::from_poly(Poly::term(root, Q::new(n, d))))
    }

    /// Simultaneous substitution of variables by scalars.
    pub fn substitute(&self, bindings: &[(usize, Scalar)]) -> Result<Scalar, ScalarError> {
        if bindings.is_empty() || self.is_zero() {
            return Ok(self.clone());
        }
        let mut cache: HashMap<(usize, i32), Scalar> = HashMap::new();
        let n = subst_poly(&self.num, bindings, &mut cache)?;
        if self.den.is_one() {
            return Ok(n);
        }
        let d = subst_poly(&self.den, bindings, &mut cache)?;
        n.checked_div(&d)
    }

    /// Substitution where every binding is a monomial (coefficient and all):
    /// a ring map that never needs GCD work on Laurent inputs.
    pub fn substitute_monomial(&self, bindings: &[(usize, Q, Mono)]) -> Scalar {
        let map = |p: &Poly| -> Poly {
            Poly::from_terms(p.terms().iter().map(|(m, c)| {
                let mut mm = *m;
                let mut cc = c.clone();
                for (slot, bc, bm) in bindings {
                    let e = m.exp(*slot);
                    if e != 0 {
                        mm.0[*slot] = 0;
                        mm = mm.mul(&bm.pow(e));
                        cc *= pow_q(bc, e);
                    }
                }
                (mm, cc)
            }))
        };
        let num = map(&self.num);
        if self.den.is_one() {
            return Scalar::from_poly(num);
        }
        normalize(num, map(&self.den))
    }

    /// Rewrites `w^2` as `u v` wherever the quarter-power variable appears.
    pub fn reduce_quarter(&self) -> Scalar {
        if !self.mentions(W) {
            return self.clone();
        }
        let fold = |p: &Poly| {
            p.map_monomials(|m| {
                let e = m.exp(W);
                let half = e.div_euclid(2);
                let mut mm = *m;
                mm.0[W] = (e - 2 * half) as i16;
                mm.mul(&Mono::from_slice(&[half, half]))
            })
        };
        normalize(fold(&self.num), fold(&self.den))
    }
}

fn pow_q(c: &Q, e: i32) -> Q {
    if e >= 0 {
        num_traits::pow(c.clone(), e as usize)
    } else {
        num_traits::pow(c.recip(), (-e) as usize)
    }
}

fn subst_poly(
    p: &Poly,
    bindings: &[(usize, Scalar)],
    cache: &mut HashMap<(usize, i32), Scalar>,
) -> Result<Scalar, ScalarError> {
    let mut acc = Scalar::zero();
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut term = Scalar::from_q(c.clone());
        for (slot, val) in bindings {
            let e = m.exp(*slot);
            if e == 0 {
                continue;
            }
            rest.0[*slot] = 0;
            let key = (*slot, e);
            let pw = match cache.get(&key) {
                Some(v) => v.clone(),
                None => {
                    if e < 0 && val.is_zero() {
                        return Err(ScalarError::ZeroToNegativePower);
                    }
                    let v = val.pow(e);
                    cache.insert(key, v.clone());
                    v
                }
            };
            term = &term * &pw;
        }
        acc = &acc + &(&term * &Scalar::mono(rest));
    }
    Ok(acc)
}

/// Brings `num / den` to canonical form. `den` must be nonzero.
fn normalize(num: Poly, den: Poly) -> Scalar {
    if num.is_zero() {
        return Scalar::zero();
    }
    let g = gcd(&num, &den);
    if g.is_one() {
        return coprime(num, den);
    }
    coprime(
        num.div_exact_laurent(&g).expect("gcd divides numerator"),
        den.div_exact_laurent(&g).expect("gcd divides denominator"),
    )
}

/// Canonical form of `num / den` for coprime inputs: monomial units move to
/// the numerator and the denominator is made monic.
fn coprime(mut num: Poly, mut den: Poly) -> Scalar {
    if num.is_zero() {
        return Scalar::zero();
    }
    let m = den.min_mono();
    if !m.is_one() {
        num = num.shift(&m.inv());
        den = den.shift(&m.inv());
    }
    let lc = den.lc();
    if !lc.is_one() {
        let inv = lc.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    Scalar { num, den }
}

fn quo(p: &Poly, g: &Poly) -> Poly {
    if g.is_one() {
        p.clone()
    } else {
        p.div_exact_laurent(g).expect("gcd divides")
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.add(&o.num), den: Poly::one() };
        }
        if self.den == o.den {
            return normalize(self.num.add(&o.num), self.den.clone());
        }
        // a/b + c/d with g = gcd(b, d): only g can cancel.
        let g = gcd(&self.den, &o.den);
        let (b, d) = (quo(&self.den, &g), quo(&o.den, &g));
        let t = self.num.mul(&d).add(&o.num.mul(&b));
        if g.is_one() {
            return coprime(t, b.mul(&d));
        }
        let h = gcd(&t, &g);
        coprime(quo(&t, &h), b.mul(&quo(&o.den, &h)))
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        self + &(-o)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.mul(&o.num), den: Poly::one() };
        }
        if (self.num.is_monomial() && self.den.is_one()) || (o.num.is_monomial() && o.den.is_one()) {
            // Units cannot share factors with a reduced denominator.
            return Scalar { num: self.num.mul(&o.num), den: self.den.mul(&o.den) };
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        coprime(
            quo(&self.num, &g1).mul(&quo(&o.num, &g2)),
            quo(&self.den, &g2).mul(&quo(&o.den, &g1)),
        )
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, o: &Scalar) -> Scalar {
        self.checked_div(o).expect("division by zero")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, o: &Scalar) -> Scalar {
                (&self).$f(o)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $f(self, o: Scalar) -> Scalar {
                self.$f(&o)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        *self = &*self + o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        *self = &*self - o;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Scalar {
        Scalar::from_int(c)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}
