//! Numerator, denominator and R closures, and the closed forms for the
//! n-fold horizontal sum `A_n = A + A + ... + A`.

use std::fmt;
use std::str::FromStr;

use crate::poly::{PolyError, Polynomial};
use crate::tangle::BracketPair;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClosureKind {
    /// `N(A)`: joins NW to NE and SW to SE.
    Numerator,
    /// `D(A)`: joins NW to SW and NE to SE.
    Denominator,
    /// `R(A) = N(A + [1])`.
    RClosure,
}

impl ClosureKind {
    pub const ALL: [ClosureKind; 3] = [
        ClosureKind::Denominator,
        ClosureKind::Numerator,
        ClosureKind::RClosure,
    ];

    pub fn letter(self) -> char {
        match self {
            ClosureKind::Numerator => 'N',
            ClosureKind::Denominator => 'D',
            ClosureKind::RClosure => 'R',
        }
    }
}

impl fmt::Display for ClosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for ClosureKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "N" | "n" | "numerator" => Ok(ClosureKind::Numerator),
            "D" | "d" | "denominator" => Ok(ClosureKind::Denominator),
            "R" | "r" | "rclosure" | "r-closure" => Ok(ClosureKind::RClosure),
            _ => Err(format!("unknown closure kind {s:?} (expected N, D or R)")),
        }
    }
}

fn x2_minus_1() -> Polynomial {
    Polynomial::from_coeffs([-1, 0, 1])
}

/// Bracket of a closure of a tangle with pair `p`:
/// `N = x^2 a + x b`, `D = x a + x^2 b`, `R = (x^2 + x)(a + b)`.
pub fn close(p: &BracketPair, kind: ClosureKind) -> Polynomial {
    match kind {
        ClosureKind::Numerator => p.a.shift_up(2) + p.b.shift_up(1),
        ClosureKind::Denominator => p.a.shift_up(1) + p.b.shift_up(2),
        ClosureKind::RClosure => Polynomial::from_coeffs([0, 1, 1]) * (&p.a + &p.b),
    }
}

/// `a + x b`, the `[inf]`-absorbing factor of a pair.
fn absorbed(p: &BracketPair) -> Polynomial {
    &p.a + &p.b.shift_up(1)
}

/// Pair of `A_n` in closed form: `(a^n, ((a + x b)^n - a^n) / x)`.
///
/// The division is exact for every pair; an error here means the input
/// polynomials were corrupted upstream.
pub fn repeat_pair(p: &BracketPair, n: u32) -> Result<BracketPair, PolyError> {
    let a_n = p.a.pow(n);
    let b_n = (absorbed(p).pow(n) - &a_n).div_by_x_exact()?;
    Ok(BracketPair::new(a_n, b_n))
}

/// Closure of `A_n` in closed form, with `0^0 = 1`:
///
/// * `D = x (a + x b)^n`
/// * `N = (a + x b)^n + (x^2 - 1) a^n`
/// * `R = (x + 1)(a + x b)^n + (x^2 - 1) a^n`
pub fn repeat_closure(p: &BracketPair, n: u32, kind: ClosureKind) -> Polynomial {
    let s_n = absorbed(p).pow(n);
    match kind {
        ClosureKind::Denominator => s_n.shift_up(1),
        ClosureKind::Numerator => s_n + x2_minus_1() * p.a.pow(n),
        ClosureKind::RClosure => Polynomial::from_coeffs([1, 1]) * s_n + x2_minus_1() * p.a.pow(n),
    }
}
