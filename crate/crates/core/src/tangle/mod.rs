//! Tangle expressions and their bracket pairs.
//!
//! A 2-tangle shadow `A` has bracket `<A> = a(A)<[0]> + b(A)<[inf]>`; the pair
//! `(a, b)` is a [`BracketPair`]. Expressions built from `[0]`, `[inf]`,
//! twists, horizontal and vertical sums, inverses, local knots and n-fold
//! repetition are evaluated to pairs by [`bracket_pair`].

mod parse;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::closures::repeat_pair;
use crate::poly::{PolyError, Polynomial};

pub use parse::{parse, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangleError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// `(a, b)` with `<A> = a<[0]> + b<[inf]>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BracketPair {
    pub a: Polynomial,
    pub b: Polynomial,
}

impl BracketPair {
    pub fn new(a: Polynomial, b: Polynomial) -> Self {
        BracketPair { a, b }
    }

    /// `[0]`: `(1, 0)`.
    pub fn zero_tangle() -> Self {
        Self::new(Polynomial::one(), Polynomial::zero())
    }

    /// `[inf]`: `(0, 1)`.
    pub fn infinity_tangle() -> Self {
        Self::new(Polynomial::zero(), Polynomial::one())
    }

    /// `[1]`: `<[1]> = <[0]> + <[inf]>`.
    pub fn crossing() -> Self {
        Self::new(Polynomial::one(), Polynomial::one())
    }

    /// `[n]` as `n` horizontal copies of `[1]`.
    pub fn twist(n: u32) -> Self {
        (0..n).fold(Self::zero_tangle(), |acc, _| acc.hsum(&Self::crossing()))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Horizontal sum `A + B`:
    /// `(a_A a_B, a_A b_B + b_A a_B + x b_A b_B)`.
    pub fn hsum(&self, other: &BracketPair) -> BracketPair {
        let a = &self.a * &other.a;
        let b = &(&self.a * &other.b) + &(&self.b * &other.a)
            + (&self.b * &other.b).shift_up(1);
        BracketPair::new(a, b)
    }

    /// Rotation by a quarter turn swaps the roles of `[0]` and `[inf]`.
    pub fn inverse(&self) -> BracketPair {
        BracketPair::new(self.b.clone(), self.a.clone())
    }

    /// Vertical sum `A * B`, the conjugate of `+` by rotation.
    pub fn vsum(&self, other: &BracketPair) -> BracketPair {
        self.inverse().hsum(&other.inverse()).inverse()
    }

    /// Connects a knot with bracket `knot` at some segment of the tangle:
    /// both components pick up the factor `x^-1 <K>`.
    pub fn connect_knot(&self, knot: &Polynomial) -> Result<BracketPair, PolyError> {
        let factor = knot.div_by_x_exact()?;
        Ok(BracketPair::new(&self.a * &factor, &self.b * &factor))
    }

    /// `a(1) + b(1)`, the number of smoothing states of the tangle.
    pub fn state_count(&self) -> BigInt {
        self.a.eval_one() + self.b.eval_one()
    }
}

impl fmt::Display for BracketPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a = {}, b = {}", self.a, self.b)
    }
}

/// Knot shadow classes with at most four crossings, identified by bracket.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KnotClass {
    K1,
    K2,
    K3,
    K4,
    K5,
    K6,
}

impl KnotClass {
    pub const ALL: [KnotClass; 6] = [
        KnotClass::K1,
        KnotClass::K2,
        KnotClass::K3,
        KnotClass::K4,
        KnotClass::K5,
        KnotClass::K6,
    ];

    pub fn bracket(self) -> Polynomial {
        let coeffs: &[i64] = match self {
            KnotClass::K1 => &[0, 1, 1],
            KnotClass::K2 => &[0, 1, 2, 1],
            KnotClass::K3 => &[0, 2, 2],
            KnotClass::K4 => &[0, 1, 3, 3, 1],
            KnotClass::K5 => &[0, 3, 4, 1],
            KnotClass::K6 => &[0, 2, 4, 2],
        };
        Polynomial::from_coeffs(coeffs.iter().copied())
    }

    /// Crossings of any diagram in the class (`<K>(1) = 2^c`).
    pub fn crossing_count(self) -> u32 {
        match self {
            KnotClass::K1 => 1,
            KnotClass::K2 | KnotClass::K3 => 2,
            KnotClass::K4 | KnotClass::K5 | KnotClass::K6 => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            KnotClass::K1 => "K1",
            KnotClass::K2 => "K2",
            KnotClass::K3 => "K3",
            KnotClass::K4 => "K4",
            KnotClass::K5 => "K5",
            KnotClass::K6 => "K6",
        }
    }

    pub fn from_bracket(p: &Polynomial) -> Option<KnotClass> {
        Self::ALL.into_iter().find(|k| &k.bracket() == p)
    }
}

impl fmt::Display for KnotClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KnotClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown knot class {s:?} (expected K1..K6)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TangleExpr {
    Zero,
    Infinity,
    /// `[n]`, `n >= 1`.
    Twist(u32),
    /// `1/[n]`, `n >= 1`.
    InvTwist(u32),
    HSum(Box<TangleExpr>, Box<TangleExpr>),
    VSum(Box<TangleExpr>, Box<TangleExpr>),
    Inverse(Box<TangleExpr>),
    ConnectKnot(Box<TangleExpr>, KnotClass),
    /// `A + A + ... + A` with `n` copies; `rep(A, 0)` is `[0]`.
    Rep(Box<TangleExpr>, u32),
}

impl TangleExpr {
    pub fn hsum(l: TangleExpr, r: TangleExpr) -> Self {
        TangleExpr::HSum(Box::new(l), Box::new(r))
    }

    pub fn vsum(l: TangleExpr, r: TangleExpr) -> Self {
        TangleExpr::VSum(Box::new(l), Box::new(r))
    }

    pub fn inverse(e: TangleExpr) -> Self {
        TangleExpr::Inverse(Box::new(e))
    }

    pub fn connect(e: TangleExpr, k: KnotClass) -> Self {
        TangleExpr::ConnectKnot(Box::new(e), k)
    }

    pub fn rep(e: TangleExpr, n: u32) -> Self {
        TangleExpr::Rep(Box::new(e), n)
    }

    /// Total number of crossings of the diagram the expression describes.
    pub fn crossing_count(&self) -> u64 {
        match self {
            TangleExpr::Zero | TangleExpr::Infinity => 0,
            TangleExpr::Twist(n) | TangleExpr::InvTwist(n) => u64::from(*n),
            TangleExpr::HSum(l, r) | TangleExpr::VSum(l, r) => {
                l.crossing_count() + r.crossing_count()
            }
            TangleExpr::Inverse(e) => e.crossing_count(),
            TangleExpr::ConnectKnot(e, k) => e.crossing_count() + u64::from(k.crossing_count()),
            TangleExpr::Rep(e, n) => e.crossing_count() * u64::from(*n),
        }
    }

    // Binding strength used by Display: 0 = sum, 1 = product, 2 = factor.
    fn precedence(&self) -> u8 {
        match self {
            TangleExpr::HSum(..) => 0,
            TangleExpr::VSum(..) => 1,
            _ => 2,
        }
    }

    fn fmt_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "(")?;
            self.fmt_at(f, 0)?;
            return write!(f, ")");
        }
        match self {
            TangleExpr::Zero => write!(f, "[0]"),
            TangleExpr::Infinity => write!(f, "[inf]"),
            TangleExpr::Twist(n) => write!(f, "[{n}]"),
            TangleExpr::InvTwist(n) => write!(f, "1/[{n}]"),
            TangleExpr::HSum(l, r) => {
                l.fmt_at(f, 0)?;
                write!(f, "+")?;
                r.fmt_at(f, 1)
            }
            TangleExpr::VSum(l, r) => {
                l.fmt_at(f, 1)?;
                write!(f, "*")?;
                r.fmt_at(f, 2)
            }
            TangleExpr::Inverse(e) => {
                write!(f, "1/")?;
                // `1/[n]` would read back as InvTwist
                if matches!(**e, TangleExpr::Twist(_)) {
                    write!(f, "({e})")
                } else {
                    e.fmt_at(f, 2)
                }
            }
            TangleExpr::ConnectKnot(e, k) => {
                if matches!(
                    **e,
                    TangleExpr::Inverse(_) | TangleExpr::InvTwist(_) | TangleExpr::HSum(..) | TangleExpr::VSum(..)
                ) {
                    write!(f, "({e})#{k}")
                } else {
                    write!(f, "{e}#{k}")
                }
            }
            TangleExpr::Rep(e, n) => write!(f, "rep({e},{n})"),
        }
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_at(f, 0)
    }
}

impl FromStr for TangleExpr {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Evaluates an expression to its bracket pair.
pub fn bracket_pair(e: &TangleExpr) -> Result<BracketPair, PolyError> {
    Ok(match e {
        TangleExpr::Zero => BracketPair::zero_tangle(),
        TangleExpr::Infinity => BracketPair::infinity_tangle(),
        TangleExpr::Twist(n) => BracketPair::twist(*n),
        TangleExpr::InvTwist(n) => BracketPair::twist(*n).inverse(),
        TangleExpr::HSum(l, r) => bracket_pair(l)?.hsum(&bracket_pair(r)?),
        TangleExpr::VSum(l, r) => bracket_pair(l)?.vsum(&bracket_pair(r)?),
        TangleExpr::Inverse(e) => bracket_pair(e)?.inverse(),
        TangleExpr::ConnectKnot(e, k) => bracket_pair(e)?.connect_knot(&k.bracket())?,
        TangleExpr::Rep(e, n) => repeat_pair(&bracket_pair(e)?, *n)?,
    })
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str) -> Result<BracketPair, TangleError> {
    Ok(bracket_pair(&parse(text)?)?)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::poly::poly;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    fn bp(a: &str, b: &str) -> BracketPair {
        BracketPair::new(poly(a), poly(b))
    }

    fn eval(s: &str) -> BracketPair {
        eval_str(s).unwrap()
    }

    #[test]
    fn hsum_examples() {
        let one = BracketPair::crossing();
        assert_eq!(one.hsum(&one), bp("1", "x+2"));
        let q = bp("3x+4", "x^2+4x+4");
        assert_eq!(BracketPair::zero_tangle().hsum(&q), q);
        assert_eq!(one.hsum(&eval("1/[2]")), bp("x+2", "2x+3"));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(bp("1", "x+2").inverse(), bp("x+2", "1"));
        assert_eq!(BracketPair::zero_tangle().inverse(), BracketPair::infinity_tangle());
        let p = bp("2x+3", "x+2");
        assert_eq!(p.inverse().inverse(), p);
    }

    #[test]
    fn vsum_examples() {
        assert_eq!(eval("[1]").vsum(&eval("[2]")), bp("2x+3", "x+2"));
        assert_eq!(eval("[2]").vsum(&eval("[2]")), bp("3x+4", "x^2+4x+4"));
        let q = bp("x^2+5x+5", "2x+3");
        assert_eq!(BracketPair::infinity_tangle().vsum(&q), q);
    }

    #[test]
    fn vsum_closed_form() {
        let (p, q) = (bp("x+2", "2x+3"), bp("x^2+3x+3", "1"));
        let a = &(&(&p.a * &q.b) + &(&p.b * &q.a)) + &(&p.a * &q.a).shift_up(1);
        assert_eq!(p.vsum(&q), BracketPair::new(a, &p.b * &q.b));
    }

    #[test]
    fn connect_knot_examples() {
        let k1 = KnotClass::K1.bracket();
        assert_eq!(BracketPair::crossing().connect_knot(&k1).unwrap(), bp("x+1", "x+1"));
        let p = bp("x^2+5x+5", "2x+3");
        assert_eq!(p.connect_knot(&Polynomial::x()).unwrap(), p);
        let twice = BracketPair::crossing()
            .connect_knot(&k1)
            .unwrap()
            .connect_knot(&k1)
            .unwrap();
        assert_eq!(twice, bp("x^2+2x+1", "x^2+2x+1"));
        assert!(BracketPair::crossing().connect_knot(&poly("x+1")).is_err());
    }

    #[test]
    fn bracket_pair_examples() {
        assert_eq!(eval("[3]"), bp("1", "x^2+3x+3"));
        assert_eq!(eval("1/[4]"), bp("x^3+4x^2+6x+4", "1"));
        let five = eval("rep([1], 5)");
        let expected_b = (poly("x+1").pow(5) - Polynomial::one()).div_by_x_exact().unwrap();
        assert_eq!(five, BracketPair::new(Polynomial::one(), expected_b));
        assert_eq!(five, eval("[1]+[1]+[1]+[1]+[1]"));
        assert_eq!(eval("[2]#K1"), bp("x+1", "x^2+3x+2"));
        assert_eq!(eval("rep([2], 0)"), BracketPair::zero_tangle());
    }

    #[test]
    fn knot_classes() {
        assert_eq!(KnotClass::K5.bracket(), poly("x^3+4x^2+3x"));
        for k in KnotClass::ALL {
            let b = k.bracket();
            assert!(b.coeff(0).is_zero() && !b.is_zero());
            assert_eq!(b.eval_one(), BigInt::from(1u32 << k.crossing_count()));
            assert_eq!(k.name().parse::<KnotClass>().unwrap(), k);
            assert_eq!(KnotClass::from_bracket(&b), Some(k));
        }
    }

    #[test]
    fn display_round_trips() {
        for s in [
            "[1]+1/[2]+[1]",
            "[1]*([1]+1/[2])",
            "(1/[2])#K1",
            "1/[2]#K1",
            "1/([3])",
            "rep([1]#K2,3)*[inf]",
            "[1]+([2]*[1])",
            "1/([1]+[2])",
        ] {
            let e = parse(s).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{s} -> {e}");
        }
    }

    pub(crate) fn arb_expr() -> impl Strategy<Value = TangleExpr> {
        let leaf = prop_oneof![
            Just(TangleExpr::Zero),
            Just(TangleExpr::Infinity),
            (1u32..=3).prop_map(TangleExpr::Twist),
            (1u32..=3).prop_map(TangleExpr::InvTwist),
        ];
        leaf.prop_recursive(3, 12, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(l, r)| TangleExpr::hsum(l, r)),
                (inner.clone(), inner.clone()).prop_map(|(l, r)| TangleExpr::vsum(l, r)),
                inner.clone().prop_map(TangleExpr::inverse),
                (inner.clone(), 0usize..6).prop_map(|(e, k)| TangleExpr::connect(e, KnotClass::ALL[k])),
                (inner, 0u32..=3).prop_map(|(e, n)| TangleExpr::rep(e, n)),
            ]
        })
    }

    proptest! {
        #[test]
        fn rep_matches_iterated_hsum(e in arb_expr(), n in 0u32..=6) {
            let p = bracket_pair(&e).unwrap();
            let iterated = (0..n).fold(BracketPair::zero_tangle(), |acc, _| acc.hsum(&p));
            prop_assert_eq!(bracket_pair(&TangleExpr::rep(e, n)).unwrap(), iterated);
        }

        #[test]
        fn state_count_is_power_of_two(e in arb_expr()) {
            let p = bracket_pair(&e).unwrap();
            prop_assert_eq!(p.state_count(), BigInt::one() << e.crossing_count());
        }

        #[test]
        fn sums_commute_and_associate(a in arb_expr(), b in arb_expr(), c in arb_expr()) {
            let (p, q, r) = (bracket_pair(&a).unwrap(), bracket_pair(&b).unwrap(), bracket_pair(&c).unwrap());
            prop_assert_eq!(p.hsum(&q), q.hsum(&p));
            prop_assert_eq!(p.vsum(&q), q.vsum(&p));
            prop_assert_eq!(p.hsum(&q).hsum(&r), p.hsum(&q.hsum(&r)));
            prop_assert_eq!(p.inverse().inverse(), p);
        }

        #[test]
        fn display_then_parse_is_identity(e in arb_expr()) {
            prop_assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }
}
