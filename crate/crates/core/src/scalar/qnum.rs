//! Two-parameter integers, factorials and Gaussian binomials.

use super::frac::Scalar;
use super::ScalarError;

/// `[m]_{r,s} = r^{m-1} + r^{m-2}s + ... + s^{m-1}`.
pub fn rs_integer(m: u32) -> Scalar {
    rs_integer_in(m, &Scalar::r(), &Scalar::s())
}

/// `[m]` with `r`, `s` replaced by arbitrary scalars (e.g. `r_i`, `s_i`).
pub fn rs_integer_in(m: u32, r: &Scalar, s: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    for k in 0..m as i32 {
        acc = &acc + &(r.pow(m as i32 - 1 - k) * s.pow(k));
    }
    acc
}

pub fn rs_factorial(m: u32, r: &Scalar, s: &Scalar) -> Scalar {
    (1..=m).fold(Scalar::one(), |acc, k| acc * rs_integer_in(k, r, s))
}

pub fn rs_binomial(m: u32, k: u32, r: &Scalar, s: &Scalar) -> Result<Scalar, ScalarError> {
    if k > m {
        return Err(ScalarError::BinomialRange { m, k });
    }
    let den = rs_factorial(m - k, r, s) * rs_factorial(k, r, s);
    rs_factorial(m, r, s).checked_div(&den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_is_r_plus_s() {
        assert_eq!(rs_integer(2), Scalar::r() + Scalar::s());
    }

    #[test]
    fn binomial_edges() {
        let (r, s) = (Scalar::r(), Scalar::s());
        assert!(rs_binomial(4, 4, &r, &s).unwrap().is_one());
        assert!(rs_binomial(4, 0, &r, &s).unwrap().is_one());
        assert!(rs_binomial(2, 3, &r, &s).is_err());
    }

    #[test]
    fn three_choose_one() {
        let (r, s) = (Scalar::r(), Scalar::s());
        let want = &r * &r + &r * &s + &s * &s;
        assert_eq!(rs_binomial(3, 1, &r, &s).unwrap(), want);
    }
}
