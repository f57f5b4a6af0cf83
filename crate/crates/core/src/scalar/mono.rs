//! Laurent monomials over a fixed bank of variable slots.

use std::cmp::Ordering;

/// Number of variable slots carried by every monomial.
pub const NVARS: usize = 8;

/// Exponent vector of a Laurent monomial. Slot `k` is the `k`-th variable of
/// the ring in use; exponents may be negative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct Mono(pub [i16; NVARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; NVARS]);

    pub fn var(slot: usize, exp: i32) -> Mono {
        let mut m = Mono::ONE;
        m.0[slot] = narrow(exp);
        m
    }

    pub fn from_slice(exps: &[i32]) -> Mono {
        assert!(exps.len() <= NVARS, "too many exponents");
        let mut m = Mono::ONE;
        for (k, &e) in exps.iter().enumerate() {
            m.0[k] = narrow(e);
        }
        m
    }

    pub fn exp(&self, slot: usize) -> i32 {
        self.0[slot] as i32
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|&e| e as i32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut out = [0i16; NVARS];
        for k in 0..NVARS {
            out[k] = narrow(self.0[k] as i32 + o.0[k] as i32);
        }
        Mono(out)
    }

    pub fn div(&self, o: &Mono) -> Mono {
        let mut out = [0i16; NVARS];
        for k in 0..NVARS {
            out[k] = narrow(self.0[k] as i32 - o.0[k] as i32);
        }
        Mono(out)
    }

    pub fn inv(&self) -> Mono {
        Mono::ONE.div(self)
    }

    pub fn pow(&self, e: i32) -> Mono {
        let mut out = [0i16; NVARS];
        for k in 0..NVARS {
            out[k] = narrow(self.0[k] as i32 * e);
        }
        Mono(out)
    }

    /// Componentwise minimum.
    pub fn meet(&self, o: &Mono) -> Mono {
        let mut out = [0i16; NVARS];
        for k in 0..NVARS {
            out[k] = self.0[k].min(o.0[k]);
        }
        Mono(out)
    }

    /// Componentwise maximum.
    pub fn join(&self, o: &Mono) -> Mono {
        let mut out = [0i16; NVARS];
        for k in 0..NVARS {
            out[k] = self.0[k].max(o.0[k]);
        }
        Mono(out)
    }

    /// True when `self` divides `o` inside the polynomial (non-negative) monoid.
    pub fn divides(&self, o: &Mono) -> bool {
        (0..NVARS).all(|k| self.0[k] <= o.0[k])
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// Halves every exponent, if they are all even.
    pub fn sqrt(&self) -> Option<Mono> {
        let mut out = [0i16; NVARS];
        for k in 0..NVARS {
            if self.0[k] % 2 != 0 {
                return None;
            }
            out[k] = self.0[k] / 2;
        }
        Some(Mono(out))
    }

    /// Highest slot with a nonzero exponent, plus one.
    pub fn arity(&self) -> usize {
        (0..NVARS).rev().find(|&k| self.0[k] != 0).map_or(0, |k| k + 1)
    }
}

fn narrow(e: i32) -> i16 {
    i16::try_from(e).expect("monomial exponent out of range")
}

/// Graded lexicographic order: total degree first, then slot 0 dominates.
impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_prefers_degree_then_first_slot() {
        let x = Mono::var(0, 1);
        let y2 = Mono::var(1, 2);
        assert!(y2 > x);
        let xy = x.mul(&Mono::var(1, 1));
        assert!(Mono::var(0, 2) > xy);
        assert!(xy > y2);
    }

    #[test]
    fn order_is_multiplicative() {
        let a = Mono::from_slice(&[1, -2, 0]);
        let b = Mono::from_slice(&[0, 1, 1]);
        let c = Mono::from_slice(&[-3, 4, 2]);
        assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
    }
}
