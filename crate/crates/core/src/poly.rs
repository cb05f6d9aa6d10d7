//! Dense univariate polynomials in `x` with arbitrary-precision integer
//! coefficients.
//!
//! Every bracket, closure and table row in this crate is a [`Polynomial`].
//! Values are kept canonical: no trailing zero coefficients, and the zero
//! polynomial is the empty coefficient vector.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial {0} is not divisible by {1}")]
    NotDivisible(String, String),
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Order in which terms are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TermOrder {
    #[default]
    Descending,
    Ascending,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c.into());
        Self::new(coeffs)
    }

    /// Builds a polynomial from ascending coefficients (index `k` is the
    /// coefficient of `x^k`), trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_coeffs<T: Into<BigInt>>(coeffs: impl IntoIterator<Item = T>) -> Self {
        Self::new(coeffs.into_iter().map(Into::into).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Value at `x = 1`, i.e. the sum of the coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact division by `x`. Fails when the constant term is nonzero.
    pub fn div_by_x_exact(&self) -> Result<Self, PolyError> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c) if c.is_zero() => Ok(Polynomial {
                coeffs: self.coeffs[1..].to_vec(),
            }),
            Some(_) => Err(PolyError::NotDivisible(self.to_string(), "x".into())),
        }
    }

    /// Exact division in `Z[x]`: returns `q` with `self = q * divisor`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Self, PolyError> {
        let (q, r) = self.div_rem_exact_lc(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(PolyError::NotDivisible(self.to_string(), divisor.to_string()))
        }
    }

    /// Long division requiring each leading-coefficient quotient to be an
    /// integer.
    fn div_rem_exact_lc(&self, divisor: &Polynomial) -> Result<(Self, Self), PolyError> {
        let dd = divisor.degree().ok_or(PolyError::DivisionByZero)?;
        let lc = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let Some(dr) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if dr < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); dr - dd + 1];
        for k in (dd..=dr).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let (q, r) = rem[k].div_rem(lc);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible(self.to_string(), divisor.to_string()));
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k - dd + j] -= &q * d;
            }
            quot[k - dd] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Flips the sign if needed so the leading coefficient is positive.
    pub fn normalized(&self) -> Self {
        if self.leading_coeff().is_some_and(|l| l.is_negative()) {
            -self
        } else {
            self.clone()
        }
    }

    /// Pseudo-remainder of `self` by `divisor` (nonzero), scaled by a power
    /// of the divisor's leading coefficient so that everything stays in `Z[x]`.
    fn pseudo_rem(&self, divisor: &Polynomial) -> Self {
        let dd = divisor.degree().expect("pseudo_rem by zero");
        let lc = &divisor.coeffs[dd];
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let lr = r.coeffs[dr].clone();
            r = &r.scale(lc) - &divisor.scale(&lr).shift_up(dr - dd);
        }
        r
    }

    /// Greatest common divisor over `Z[x]`: content gcd times the primitive
    /// gcd, with positive leading coefficient.
    pub fn gcd(p: &Polynomial, q: &Polynomial) -> Result<Self, PolyError> {
        match (p.is_zero(), q.is_zero()) {
            (true, true) => return Err(PolyError::BothZero),
            (true, false) => return Ok(q.normalized()),
            (false, true) => return Ok(p.normalized()),
            _ => {}
        }
        let content = p.content().gcd(&q.content());
        let (mut a, mut b) = (p.primitive_part(), q.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        Ok(a.primitive_part().scale(&content))
    }

    /// Coefficients of `x^0 ..= x^k_max`, zero-padded.
    pub fn coeff_row(&self, k_max: usize) -> Vec<BigInt> {
        (0..=k_max).map(|k| self.coeff(k)).collect()
    }

    pub fn to_string_ordered(&self, order: TermOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let terms: Vec<usize> = match order {
            TermOrder::Descending => (0..self.coeffs.len()).rev().collect(),
            TermOrder::Ascending => (0..self.coeffs.len()).collect(),
        };
        let mut out = String::new();
        for k in terms {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let abs = c.abs();
            if k == 0 || !abs.is_one() {
                out.push_str(&abs.to_string());
            }
            match k {
                0 => {}
                1 => out.push('x'),
                _ => {
                    out.push_str("x^");
                    out.push_str(&k.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_ordered(TermOrder::Descending))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Degree first, then coefficients from the top down. Only used to give
/// collections a deterministic order.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;

    /// Accepts sums of terms such as `2x^3-x+4`, `x^2 + 4*x + 3` or `0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PolyError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        if chars.is_empty() {
            return Err(err("empty input"));
        }
        let mut pos = 0;
        let mut acc: Vec<BigInt> = Vec::new();
        let digits = |pos: &mut usize| -> Option<String> {
            let start = *pos;
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            (*pos > start).then(|| chars[start..*pos].iter().collect())
        };
        while pos < chars.len() {
            let mut negative = false;
            match chars[pos] {
                '+' => pos += 1,
                '-' => {
                    negative = true;
                    pos += 1
                }
                _ if pos > 0 => return Err(err("expected '+' or '-' between terms")),
                _ => {}
            }
            let coeff = digits(&mut pos);
            let mut exp = 0usize;
            let has_x = if pos < chars.len() && (chars[pos] == 'x' || chars[pos] == '*') {
                if chars[pos] == '*' {
                    if coeff.is_none() {
                        return Err(err("'*' without a coefficient"));
                    }
                    pos += 1;
                    if chars.get(pos) != Some(&'x') {
                        return Err(err("expected 'x' after '*'"));
                    }
                }
                pos += 1;
                exp = 1;
                if chars.get(pos) == Some(&'^') {
                    pos += 1;
                    exp = digits(&mut pos)
                        .ok_or_else(|| err("expected exponent after '^'"))?
                        .parse()
                        .map_err(|_| err("exponent too large"))?;
                }
                true
            } else {
                false
            };
            if coeff.is_none() && !has_x {
                return Err(err("expected a term"));
            }
            let mut c: BigInt = match coeff {
                Some(d) => d.parse().map_err(|_| err("bad coefficient"))?,
                None => BigInt::one(),
            };
            if negative {
                c = -c;
            }
            if acc.len() <= exp {
                acc.resize(exp + 1, BigInt::zero());
            }
            acc[exp] += c;
        }
        Ok(Polynomial::new(acc))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Polynomial::new(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { (&self).$m(&rhs) }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial { (&self).$m(rhs) }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial { self.$m(&rhs) }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

/// Shorthand used throughout tests and data tables: `poly("x^2+4x+3")`.
///
/// Panics on malformed input, so keep it to literals.
pub fn poly(s: &str) -> Polynomial {
    s.parse().unwrap_or_else(|e| panic!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn add_examples() {
        assert_eq!(poly("x+1") + poly("x+1"), poly("2x+2"));
        assert_eq!(poly("x^2+4x+3") + Polynomial::zero(), poly("x^2+4x+3"));
        let z = poly("x^2+4x+3") + poly("-x^2-4x-3");
        assert!(z.is_zero());
        assert!(z.coeffs().is_empty());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(poly("x+1") * poly("x+1"), poly("x^2+2x+1"));
        assert_eq!(poly("x+1") * poly("x+2"), poly("x^2+3x+2"));
        assert!((poly("x^3+7") * Polynomial::zero()).is_zero());
    }

    #[test]
    fn pow_examples() {
        assert_eq!(poly("x+1").pow(3), poly("x^3+3x^2+3x+1"));
        assert_eq!(Polynomial::zero().pow(0), Polynomial::one());
        assert!(Polynomial::zero().pow(2).is_zero());
        assert_eq!(poly("2x+2").pow(2), poly("4x^2+8x+4"));
    }

    #[test]
    fn div_by_x_examples() {
        let p = poly("x+1").pow(2) - Polynomial::one();
        assert_eq!(p.div_by_x_exact().unwrap(), poly("x+2"));
        assert!(Polynomial::zero().div_by_x_exact().unwrap().is_zero());
        assert!(matches!(
            poly("x+1").div_by_x_exact(),
            Err(PolyError::NotDivisible(..))
        ));
    }

    #[test]
    fn gcd_examples() {
        let p = poly("x^2+4x+3");
        assert_eq!(Polynomial::gcd(&p, &p).unwrap(), p);
        assert_eq!(
            Polynomial::gcd(&poly("x^3+4x^2+5x+2"), &poly("x^2+2x+1")).unwrap(),
            poly("x^2+2x+1")
        );
        assert_eq!(Polynomial::gcd(&poly("-2x-2"), &Polynomial::zero()).unwrap(), poly("2x+2"));
        assert_eq!(Polynomial::gcd(&Polynomial::zero(), &Polynomial::zero()), Err(PolyError::BothZero));
    }

    #[test]
    fn gcd_keeps_content() {
        assert_eq!(Polynomial::gcd(&poly("2x+2"), &poly("2x+2")).unwrap(), poly("2x+2"));
        assert_eq!(
            Polynomial::gcd(&poly("2x+2"), &poly("2x^2+6x+4")).unwrap(),
            poly("2x+2")
        );
        assert_eq!(Polynomial::gcd(&poly("4x"), &poly("6")).unwrap(), poly("2"));
        assert_eq!(Polynomial::gcd(&poly("x+2"), &poly("2x+3")).unwrap(), Polynomial::one());
    }

    #[test]
    fn coeff_row_examples() {
        let x = Polynomial::x();
        assert_eq!((&x * &poly("x+1").pow(2)).coeff_row(3), ints(&[0, 1, 2, 1]));
        assert_eq!((&x * &poly("x+1").pow(3)).coeff_row(4), ints(&[0, 1, 3, 3, 1]));
        assert_eq!(Polynomial::zero().coeff_row(2), ints(&[0, 0, 0]));
    }

    #[test]
    fn div_exact_rejects_remainders() {
        assert_eq!(poly("x^3+4x^2+5x+2").div_exact(&poly("x+1")).unwrap(), poly("x^2+3x+2"));
        assert!(poly("x^2+1").div_exact(&poly("x+1")).is_err());
        assert!(poly("x+1").div_exact(&poly("2x+2")).is_err());
        assert_eq!(poly("x").div_exact(&Polynomial::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn printing() {
        assert_eq!(poly("x^5+4x^4+6x^3+4x^2+x").to_string(), "x^5+4x^4+6x^3+4x^2+x");
        assert_eq!(poly("x^2-1").to_string(), "x^2-1");
        assert_eq!(poly("-x+2").to_string(), "-x+2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(
            poly("x^2+4x+3").to_string_ordered(TermOrder::Ascending),
            "3+4x+x^2"
        );
        assert_eq!(poly(" 2 * x ^ 2 + x - x ").to_string(), "2x^2");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "x^", "2x3", "++x", "*x", "y"] {
            assert!(bad.parse::<Polynomial>().is_err(), "{bad:?} should not parse");
        }
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(-9i64..=9, 0..=5).prop_map(Polynomial::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        }

        #[test]
        fn pow_is_repeated_mul(p in small_poly(), n in 0u32..=8) {
            let folded = (0..n).fold(Polynomial::one(), |acc, _| &acc * &p);
            prop_assert_eq!(p.pow(n), folded);
        }

        #[test]
        fn div_by_x_undoes_mul_by_x(p in small_poly()) {
            prop_assert_eq!((&p * &Polynomial::x()).div_by_x_exact().unwrap(), p);
        }

        #[test]
        fn gcd_divides_and_cofactors_reconstruct(p in small_poly(), q in small_poly(), r in small_poly()) {
            prop_assume!(!(p.is_zero() && q.is_zero()));
            let (p, q) = (&p * &r, &q * &r);
            prop_assume!(!(p.is_zero() && q.is_zero()));
            let g = Polynomial::gcd(&p, &q).unwrap();
            prop_assert!(g.leading_coeff().unwrap().is_positive());
            let cp = p.div_exact(&g).unwrap();
            let cq = q.div_exact(&g).unwrap();
            prop_assert_eq!(&cp * &g, p);
            prop_assert_eq!(&cq * &g, q);
            // cofactors are coprime
            if !(cp.is_zero() && cq.is_zero()) {
                prop_assert!(Polynomial::gcd(&cp, &cq).unwrap().is_one());
            }
            // r divides both, so it divides the gcd
            if !r.is_zero() {
                prop_assert!(g.div_exact(&r).is_ok());
            }
        }

        #[test]
        fn coeff_row_round_trip(row in prop::collection::vec(-50i64..=50, 1..8)) {
            let k_max = row.len() - 1;
            let p = Polynomial::from_coeffs(row.clone());
            prop_assert_eq!(p.coeff_row(k_max), ints(&row));
        }

        #[test]
        fn display_parses_back(p in small_poly()) {
            prop_assert_eq!(p.to_string().parse::<Polynomial>().unwrap(), p.clone());
            prop_assert_eq!(p.to_string_ordered(TermOrder::Ascending).parse::<Polynomial>().unwrap(), p);
        }
    }
}
