//! The polynomial fraction `F(A) = b(A) / a(A)`, skeletons of locally
//! knotted tangles and classification against the catalog.

use std::fmt;

use thiserror::Error;

use crate::catalog::{self, EntryId};
use crate::poly::Polynomial;
use crate::tangle::{BracketPair, KnotClass};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FractionError {
    #[error("both components of the bracket pair are zero")]
    InvalidPair,
}

/// A reduced element of `Q(x) ∪ {∞}` with integer polynomial parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TangleFraction {
    /// `gcd(num, den) = 1` over `Z[x]` and `den` has positive leading
    /// coefficient.
    Finite { num: Polynomial, den: Polynomial },
    Infinity,
}

impl TangleFraction {
    /// Reduces `num / den`; `None` for `0 / 0`.
    pub fn new(num: Polynomial, den: Polynomial) -> Option<TangleFraction> {
        if den.is_zero() {
            return (!num.is_zero()).then_some(TangleFraction::Infinity);
        }
        if num.is_zero() {
            return Some(TangleFraction::zero());
        }
        let g = Polynomial::gcd(&num, &den).expect("den is nonzero");
        let num = num.div_exact(&g).expect("gcd divides num");
        let den = den.div_exact(&g).expect("gcd divides den");
        Some(if den.leading_coeff().is_some_and(|l| l.sign() == num_bigint::Sign::Minus) {
            TangleFraction::Finite { num: -num, den: -den }
        } else {
            TangleFraction::Finite { num, den }
        })
    }

    pub fn from_poly(p: Polynomial) -> TangleFraction {
        TangleFraction::Finite {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> TangleFraction {
        TangleFraction::from_poly(Polynomial::zero())
    }

    pub fn one() -> TangleFraction {
        TangleFraction::from_poly(Polynomial::one())
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, TangleFraction::Infinity)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, TangleFraction::Finite { num, .. } if num.is_zero())
    }

    /// `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> TangleFraction {
        match self {
            TangleFraction::Infinity => TangleFraction::zero(),
            TangleFraction::Finite { num, den } => {
                TangleFraction::new(den.clone(), num.clone()).expect("den is nonzero")
            }
        }
    }

    /// `None` for `∞ + ∞`.
    pub fn checked_add(&self, other: &TangleFraction) -> Option<TangleFraction> {
        use TangleFraction::*;
        match (self, other) {
            (Infinity, Infinity) => None,
            (Infinity, _) | (_, Infinity) => Some(Infinity),
            (Finite { num: n1, den: d1 }, Finite { num: n2, den: d2 }) => {
                TangleFraction::new(n1 * d2 + n2 * d1, d1 * d2)
            }
        }
    }

    /// `None` for `0 · ∞`.
    pub fn checked_mul(&self, other: &TangleFraction) -> Option<TangleFraction> {
        use TangleFraction::*;
        match (self, other) {
            (Infinity, f) | (f, Infinity) => (!f.is_zero()).then_some(Infinity),
            (Finite { num: n1, den: d1 }, Finite { num: n2, den: d2 }) => TangleFraction::new(n1 * n2, d1 * d2),
        }
    }

    pub fn checked_sub(&self, other: &TangleFraction) -> Option<TangleFraction> {
        self.checked_add(&other.checked_mul(&TangleFraction::from_poly(Polynomial::constant(-1)))?)
    }

    /// `None` for `0 / 0` and `∞ / ∞`.
    pub fn checked_div(&self, other: &TangleFraction) -> Option<TangleFraction> {
        if self.is_zero() && other.is_zero() {
            return None;
        }
        self.checked_mul(&other.recip())
    }

    /// `None` for `∞^0`.
    pub fn checked_pow(&self, n: u32) -> Option<TangleFraction> {
        match self {
            TangleFraction::Infinity => (n > 0).then_some(TangleFraction::Infinity),
            TangleFraction::Finite { num, den } => Some(TangleFraction::Finite {
                num: num.pow(n),
                den: den.pow(n),
            }),
        }
    }
}

impl fmt::Display for TangleFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleFraction::Infinity => f.write_str("inf"),
            TangleFraction::Finite { num, den } if den.is_one() => write!(f, "{num}"),
            TangleFraction::Finite { num, den } => write!(f, "({num})/({den})"),
        }
    }
}

/// `F(A) = b / a`, infinite exactly when `a = 0`.
pub fn fraction(p: &BracketPair) -> Result<TangleFraction, FractionError> {
    TangleFraction::new(p.b.clone(), p.a.clone()).ok_or(FractionError::InvalidPair)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonReport {
    /// Coprime pair left after removing the common factor.
    pub skeleton: BracketPair,
    /// `x · gcd(a, b)`: the bracket of the knot shadow that splits off.
    pub knot_factor: Polynomial,
    pub is_prime: bool,
}

pub fn skeleton(p: &BracketPair) -> Result<SkeletonReport, FractionError> {
    let g = Polynomial::gcd(&p.a, &p.b).map_err(|_| FractionError::InvalidPair)?;
    let div = |q: &Polynomial| q.div_exact(&g).expect("gcd divides both components");
    Ok(SkeletonReport {
        skeleton: BracketPair::new(div(&p.a), div(&p.b)),
        is_prime: g.is_one(),
        knot_factor: g.shift_up(1),
    })
}

/// Writes `knot_factor` as `x^(1-m) <K_1> ... <K_m>`: a single class when
/// one matches outright, otherwise the first product found trying larger
/// classes first. `None` if no such product exists.
pub fn decompose_knot_factor(knot_factor: &Polynomial) -> Option<Vec<KnotClass>> {
    if let Some(k) = KnotClass::from_bracket(knot_factor) {
        return Some(vec![k]);
    }
    let rest = knot_factor.div_by_x_exact().ok()?;
    if rest.is_one() {
        return None;
    }
    let mut knots = split_off(&rest, KnotClass::ALL.len())?;
    knots.reverse();
    Some(knots)
}

/// Product of `<K>/x` over classes with index below `limit`, non-increasing.
fn split_off(rest: &Polynomial, limit: usize) -> Option<Vec<KnotClass>> {
    if rest.is_one() {
        return Some(Vec::new());
    }
    KnotClass::ALL[..limit].iter().enumerate().rev().find_map(|(i, k)| {
        let unit = k.bracket().div_by_x_exact().expect("knot brackets are divisible by x");
        let q = rest.div_exact(&unit).ok()?;
        let mut tail = split_off(&q, i + 1)?;
        tail.insert(0, *k);
        Some(tail)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// The pair is the pair of a catalog entry. `decomposition` is set for
    /// locally knotted entries.
    Exact {
        entry: EntryId,
        decomposition: Option<(EntryId, Vec<KnotClass>)>,
    },
    /// Not a catalog pair, but the skeleton is and the knot factor splits
    /// into knot classes.
    Decomposed { skeleton: EntryId, knots: Vec<KnotClass> },
    Unrecognized,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let knots = |f: &mut fmt::Formatter<'_>, ks: &[KnotClass]| {
            ks.iter().try_for_each(|k| write!(f, " # {k}"))
        };
        match self {
            Classification::Exact { entry, decomposition: None } => write!(f, "{entry}"),
            Classification::Exact {
                entry,
                decomposition: Some((skel, ks)),
            } => {
                write!(f, "{entry} = skeleton {skel}")?;
                knots(f, ks)
            }
            Classification::Decomposed { skeleton, knots: ks } => {
                write!(f, "skeleton {skeleton}")?;
                knots(f, ks)
            }
            Classification::Unrecognized => f.write_str("unrecognized"),
        }
    }
}

fn split(p: &BracketPair) -> Option<(EntryId, Vec<KnotClass>)> {
    let report = skeleton(p).ok()?;
    if report.is_prime {
        return None;
    }
    let skel = catalog::find_by_pair(&report.skeleton)?;
    Some((skel.id, decompose_knot_factor(&report.knot_factor)?))
}

/// Matches the exact pair against the catalog, then the skeleton plus a
/// knot-class decomposition of the common factor.
pub fn classify(p: &BracketPair) -> Classification {
    if let Some(e) = catalog::find_by_pair(p) {
        return Classification::Exact {
            entry: e.id,
            decomposition: split(p),
        };
    }
    match split(p) {
        Some((skeleton, knots)) => Classification::Decomposed { skeleton, knots },
        None => Classification::Unrecognized,
    }
}
