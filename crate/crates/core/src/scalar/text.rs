//! Canonical text form: `c * r^p s^q z^k` terms, with `r`, `s` exponents in
//! halves printed as `r^(3/2)`.

use super::frac::Scalar;
use super::mono::{Mono, NVARS};
use super::poly::{Poly, Q};
use super::{ScalarError, ScalarRing};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use std::fmt::Write;

impl ScalarRing {
    /// Name printed for a slot together with its exponent divisor.
    fn display_name(&self, slot: usize) -> (&str, i32) {
        match self.names()[slot].as_str() {
            "u" => ("r", 2),
            "v" => ("s", 2),
            other => (other, 1),
        }
    }

    pub fn format_poly(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let factors = self.format_mono(m);
            if factors.is_empty() {
                out.push_str(&format_q(&a));
            } else if a.is_one() {
                out.push_str(&factors);
            } else {
                let _ = write!(out, "{} * {}", format_q(&a), factors);
            }
        }
        out
    }

    fn format_mono(&self, m: &Mono) -> String {
        let mut parts = Vec::new();
        for slot in 0..self.len() {
            let e = m.exp(slot);
            if e == 0 {
                continue;
            }
            let (name, div) = self.display_name(slot);
            let exp = if div == 2 && e % 2 != 0 {
                format!("({}/2)", e)
            } else {
                (e / div).to_string()
            };
            if exp == "1" {
                parts.push(name.to_string());
            } else {
                parts.push(format!("{}^{}", name, exp));
            }
        }
        parts.join(" ")
    }

    pub fn format(&self, x: &Scalar) -> String {
        if x.denom().is_one() {
            self.format_poly(x.numer())
        } else {
            format!("({}) / ({})", self.format_poly(x.numer()), self.format_poly(x.denom()))
        }
    }

    pub fn parse(&self, text: &str) -> Result<Scalar, ScalarError> {
        let mut p = Parser { s: text.as_bytes(), pos: 0, ring: self };
        p.ws();
        let out = if p.peek() == Some(b'(') {
            p.pos += 1;
            let num = p.poly()?;
            p.expect(b')')?;
            p.expect(b'/')?;
            p.expect(b'(')?;
            let den = p.poly()?;
            p.expect(b')')?;
            Scalar::from_parts(num, den)?
        } else {
            Scalar::from_poly(p.poly()?)
        };
        p.ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        self.check(&out)?;
        Ok(out)
    }

    fn resolve(&self, name: &str) -> Option<(usize, i32)> {
        for slot in 0..self.len() {
            let (shown, div) = self.display_name(slot);
            if shown == name {
                return Some((slot, div));
            }
        }
        None
    }
}

fn format_q(c: &Q) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    ring: &'a ScalarRing,
}

impl Parser<'_> {
    fn err(&self, what: &str) -> ScalarError {
        ScalarError::Parse(format!("{} at byte {}", what, self.pos))
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), ScalarError> {
        self.ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            self.ws();
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<BigInt, ScalarError> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        t.parse::<BigInt>().map_err(|_| self.err("expected integer"))
    }

    fn rational(&mut self) -> Result<Q, ScalarError> {
        let n = self.int()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let d = self.int()?;
            if d == BigInt::from(0) {
                return Err(self.err("zero denominator"));
            }
            return Ok(Q::new(n, d));
        }
        Ok(Q::from_integer(n))
    }

    fn poly(&mut self) -> Result<Poly, ScalarError> {
        self.ws();
        let mut terms = Vec::new();
        let mut negative = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negative = true;
            self.ws();
        }
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if negative { -c } else { c }));
            self.ws();
            match self.peek() {
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                _ => break,
            }
            self.pos += 1;
            self.ws();
        }
        Ok(Poly::from_terms(terms))
    }

    fn term(&mut self) -> Result<(Mono, Q), ScalarError> {
        let mut coeff = Q::one();
        let mut mono = Mono::ONE;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.rational()?;
            self.ws();
            if self.peek() != Some(b'*') {
                return Ok((mono, coeff));
            }
            self.pos += 1;
            self.ws();
        }
        let mut any = false;
        while self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_string();
            let (slot, div) = self.ring.resolve(&name).ok_or_else(|| self.err("unknown variable"))?;
            let mut exp = div;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                exp = self.exponent(div)?;
            }
            let e = mono.exp(slot) + exp;
            mono.0[slot] = i16::try_from(e).map_err(|_| self.err("exponent overflow"))?;
            any = true;
            self.ws();
        }
        if !any {
            return Err(self.err("expected a term"));
        }
        debug_assert!(mono.arity() <= NVARS);
        Ok((mono, coeff))
    }

    /// Returns the exponent scaled by `div`.
    fn exponent(&mut self, div: i32) -> Result<i32, ScalarError> {
        let paren = self.peek() == Some(b'(');
        if paren {
            self.pos += 1;
        }
        let q = self.rational()?;
        if paren {
            if self.peek() != Some(b')') {
                return Err(self.err("expected ')'"));
            }
            self.pos += 1;
        }
        let scaled = q * Q::from_integer(BigInt::from(div));
        if !scaled.is_integer() {
            return Err(self.err("exponent outside the lattice"));
        }
        i32::try_from(scaled.to_integer()).map_err(|_| self.err("exponent overflow"))
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&ScalarRing::standard().format(self))
    }
}
