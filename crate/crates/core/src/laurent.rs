//! Exact one-variable Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! The same type serves for `Z[v, v^-1]` (Hecke coefficients) and for the
//! ordinary polynomials in `q` and `t` produced by the weight-multiplicity
//! code; only the variable name used for printing differs.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sparse Laurent polynomial, stored as `(exponent, coefficient)` pairs sorted
/// by exponent with no zero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i32, BigInt)>,
}

const MAX_PARSED_EXPONENT: u32 = 1 << 20;

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * v^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(exp, c)],
            }
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs;
    /// repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut raw: Vec<(i32, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        raw.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i32, BigInt)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    pub fn terms(&self) -> &[(i32, BigInt)] {
        &self.terms
    }

    pub fn coeff(&self, exp: i32) -> BigInt {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Returns `Some((sign, k))` when the polynomial is a unit `±v^k` of
    /// `Z[v, v^-1]`.
    pub fn as_unit(&self) -> Option<(i8, i32)> {
        match self.terms.as_slice() {
            [(e, c)] if c.is_one() => Some((1, *e)),
            [(e, c)] if (-c).is_one() => Some((-1, *e)),
            _ => None,
        }
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// The ring involution `v -> v^-1`.
    pub fn bar(&self) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, c)| (-e, c.clone())).collect();
        terms.reverse();
        Self { terms }
    }

    /// Evaluation at `v = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Substitutes `v -> v^k` (`k` may be negative).
    pub fn substitute_power(&self, k: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|(e, c)| (e * k, c.clone())))
    }

    /// Inverse of [`substitute_power`](Self::substitute_power) for `k = 2`:
    /// returns `None` if some exponent is odd.
    pub fn halve_exponents(&self) -> Option<Self> {
        if self.terms.iter().any(|(e, _)| e % 2 != 0) {
            return None;
        }
        Some(Self {
            terms: self.terms.iter().map(|(e, c)| (e / 2, c.clone())).collect(),
        })
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// `self += c * v^k * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &BigInt, k: i32) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        let rhs: Vec<(i32, BigInt)> = other.terms.iter().map(|(e, x)| (e + k, x * c)).collect();
        self.merge(rhs);
    }

    fn merge(&mut self, rhs: Vec<(i32, BigInt)>) {
        if rhs.is_empty() {
            return;
        }
        if self.terms.is_empty() {
            self.terms = rhs;
            return;
        }
        let lhs = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(lhs.len() + rhs.len());
        let mut a = lhs.into_iter().peekable();
        let mut b = rhs.into_iter().peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => break,
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap()),
                Ordering::Greater => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (e, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + y;
                    if !s.is_zero() {
                        out.push((e, s));
                    }
                }
            }
        }
        self.terms = out;
    }

    /// Prints with the given variable name, ascending exponents, e.g.
    /// `v^-2 + 1 + 3*v^4`.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match *e {
                0 => None,
                1 => Some(var.to_string()),
                k => Some(format!("{var}^{k}")),
            };
            match mono {
                None => out.push_str(&mag.to_string()),
                Some(m) if mag.is_one() => out.push_str(&m),
                Some(m) => {
                    out.push_str(&mag.to_string());
                    out.push('*');
                    out.push_str(&m);
                }
            }
        }
        out
    }

    /// Parses the textual form written by [`to_string_var`](Self::to_string_var).
    /// Exponents are limited to `+-2^20` so that products cannot overflow.
    /// Terms may appear in any order and repeat; they are summed.
    pub fn parse_var(s: &str, var: char) -> Result<Self> {
        let raw: Vec<char> = s.trim().chars().collect();
        for (i, c) in raw.iter().enumerate() {
            if c.is_whitespace() {
                let prev = raw[..i].iter().rev().find(|c| !c.is_whitespace());
                let next = raw[i..].iter().find(|c| !c.is_whitespace());
                let joins_sign = |c: Option<&char>| matches!(c, Some('+') | Some('-'));
                if !joins_sign(prev) && !joins_sign(next) {
                    return Err(Error::parse("unexpected whitespace inside a term"));
                }
            }
        }
        let chars: Vec<char> = raw.into_iter().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(Error::parse("empty polynomial"));
        }
        let mut pos = 0;
        let mut terms: Vec<(i32, BigInt)> = Vec::new();
        let mut first = true;
        while pos < chars.len() {
            let mut negative = false;
            match chars[pos] {
                '+' if !first => pos += 1,
                '-' => {
                    negative = true;
                    pos += 1;
                }
                _ if first => {}
                c => return Err(Error::parse(format!("expected `+` or `-`, found `{c}`"))),
            }
            first = false;
            let digits_start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let coeff: Option<BigInt> = if pos > digits_start {
                let text: String = chars[digits_start..pos].iter().collect();
                Some(text.parse().map_err(|_| Error::parse("bad coefficient"))?)
            } else {
                None
            };
            let mut exp = 0i32;
            let has_var = if coeff.is_some() {
                if pos < chars.len() && chars[pos] == '*' {
                    pos += 1;
                    if pos >= chars.len() || chars[pos] != var {
                        return Err(Error::parse(format!("expected `{var}` after `*`")));
                    }
                    true
                } else {
                    false
                }
            } else if pos < chars.len() && chars[pos] == var {
                true
            } else {
                return Err(Error::parse(format!("expected a coefficient or `{var}`")));
            };
            if has_var {
                pos += 1;
                exp = 1;
                if pos < chars.len() && chars[pos] == '^' {
                    pos += 1;
                    let start = pos;
                    if pos < chars.len() && chars[pos] == '-' {
                        pos += 1;
                    }
                    let dstart = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if pos == dstart {
                        return Err(Error::parse("missing exponent"));
                    }
                    let text: String = chars[start..pos].iter().collect();
                    exp = text
                        .parse()
                        .ok()
                        .filter(|e: &i32| e.unsigned_abs() <= MAX_PARSED_EXPONENT)
                        .ok_or_else(|| Error::parse("exponent out of range"))?;
                }
            }
            let mut c = coeff.unwrap_or_else(BigInt::one);
            if negative {
                c = -c;
            }
            terms.push((exp, c));
        }
        Ok(Self::from_terms(terms))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("v"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_var(s, 'v')
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.merge(rhs.terms.clone());
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        self.merge(rhs.terms);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.merge(rhs.terms.iter().map(|(e, c)| (*e, -c)).collect());
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let [(e, c)] = rhs.terms.as_slice() {
            return LaurentPoly {
                terms: self.terms.iter().map(|(x, y)| (x + e, y * c)).collect(),
            };
        }
        let lo = self.min_exp().unwrap() + rhs.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + rhs.max_exp().unwrap();
        let mut dense = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                dense[(a + b - lo) as usize] += x * y;
            }
        }
        LaurentPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn exponent_range() {
        assert!("v^1048576".parse::<LaurentPoly>().is_ok());
        assert!("v^1048577".parse::<LaurentPoly>().is_err());
        assert!("v^-99999999999".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn prints_ascending_with_explicit_signs() {
        let x = LaurentPoly::from_terms([(4, 3), (0, 1), (-2, 1)]);
        assert_eq!(x.to_string(), "v^-2 + 1 + 3*v^4");
        let y = LaurentPoly::from_terms([(-1, -1), (0, 2), (2, -3), (1, 1)]);
        assert_eq!(y.to_string(), "-v^-1 + 2 + v - 3*v^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::monomial(-1, 0).to_string(), "-1");
    }

    #[test]
    fn parses_loose_input() {
        assert_eq!(p("3*v^4+1 +v^-2"), p("v^-2 + 1 + 3*v^4"));
        assert_eq!(p("v - v"), LaurentPoly::zero());
        assert_eq!(p("-v^-1"), LaurentPoly::monomial(-1, -1));
        assert_eq!(p("2*v"), LaurentPoly::monomial(2, 1));
        assert_eq!(p("123456789012345678901234567890").coeff(0).to_string(), "123456789012345678901234567890");
        for bad in ["", "+", "v^", "3*", "3*w", "v^x", "1 1", "v^-", "--1", "*v"] {
            assert!(LaurentPoly::from_str(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn quadratic_relation_coefficients() {
        // (v^2 - 1)^2 + v^2 * (v^2 - 1) ... spot-check the product routine
        let a = p("-1 + v^2");
        assert_eq!(&a * &a, p("1 - 2*v^2 + v^4"));
        assert_eq!(a.bar(), p("-1 + v^-2"));
        assert_eq!(a.eval_one(), BigInt::zero());
    }

    #[test]
    fn unit_detection() {
        assert_eq!(p("-v^3").as_unit(), Some((-1, 3)));
        assert_eq!(p("1").as_unit(), Some((1, 0)));
        assert_eq!(p("2").as_unit(), None);
        assert_eq!(p("v + 1").as_unit(), None);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i32..6, -5i64..5), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn text_round_trip(x in arb_poly()) {
            prop_assert_eq!(LaurentPoly::from_str(&x.to_string()).unwrap(), x.clone());
            prop_assert_eq!(LaurentPoly::parse_var(&x.to_string_var("q"), 'q').unwrap(), x);
        }

        #[test]
        fn ring_axioms(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x - &y) + &y, x.clone());
            prop_assert_eq!((&x * &y).bar(), &x.bar() * &y.bar());
            prop_assert_eq!(x.bar().bar(), x.clone());
            prop_assert_eq!((&x * &y).eval_one(), x.eval_one() * y.eval_one());
        }

        #[test]
        fn no_zero_terms_stored(x in arb_poly(), y in arb_poly()) {
            for t in [&x + &y, &x - &x, &x * &y] {
                prop_assert!(t.terms().iter().all(|(_, c)| !c.is_zero()));
                prop_assert!(t.terms().windows(2).all(|w| w[0].0 < w[1].0));
            }
        }
    }
}
