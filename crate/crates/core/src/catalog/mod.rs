//! The 35 tangle classes with at most four crossings, their printed closure
//! formulas and coefficient tables, and the harness that re-derives all of
//! it from the tangle algebra.

mod data;
pub mod oeis;
pub mod tables;
pub mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::closures::ClosureKind;
use crate::poly::{poly, Polynomial};
use crate::tangle::{bracket_pair, parse, BracketPair, KnotClass, TangleError};

use data::{RawFormula, Tail};

pub use tables::{reference_tables, table, PrintedRow, TableSpec};
pub use verify::{verify_catalog, Check, Status, VerificationReport};

/// Catalog entry number, shown as `A7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EntryId(pub u8);

impl fmt::Display for EntryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.0)
    }
}

impl FromStr for EntryId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.strip_prefix('A')
            .and_then(|n| n.parse::<u8>().ok())
            .filter(|n| (1..=35).contains(n))
            .map(EntryId)
            .ok_or_else(|| format!("unknown catalog entry {s:?} (expected A1..A35)"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Heading {
    Prime,
    /// Skeleton entry number and the knot class split off.
    Knotted(u8, KnotClass),
    /// `[0]` and `[inf]`.
    Trivial,
}

/// Which printed datum a typo sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TypoField {
    PairA,
    PairB,
    /// Leading factor of the R formula.
    RLead,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Typo {
    /// `B5`, `R33`, ...
    pub location: String,
    pub field: TypoField,
    /// The printed text, e.g. `x+3x+2`.
    pub printed_text: &'static str,
    pub printed: Polynomial,
    pub corrected: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaTail {
    None,
    /// `+ (x^2 - 1)`
    XSquaredMinusOne,
    /// `+ (x^2 - 1) base^(mult n)`
    Scaled(Polynomial, u32),
}

/// A closure formula in the shape it is printed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureFormula {
    /// `lead * base^(mult n + offset) + tail`
    Power {
        lead: Polynomial,
        base: Polynomial,
        mult: u32,
        offset: u32,
        tail: FormulaTail,
    },
    Constant(Polynomial),
    /// `at_zero` when `n = 0`, `general` otherwise.
    ZeroCase {
        at_zero: Polynomial,
        general: Box<ClosureFormula>,
    },
}

impl ClosureFormula {
    pub fn eval(&self, n: u32) -> Polynomial {
        let x2m1 = || Polynomial::from_coeffs([-1, 0, 1]);
        match self {
            ClosureFormula::Power {
                lead,
                base,
                mult,
                offset,
                tail,
            } => {
                let head = lead * base.pow(mult * n + offset);
                match tail {
                    FormulaTail::None => head,
                    FormulaTail::XSquaredMinusOne => head + x2m1(),
                    FormulaTail::Scaled(t, m) => head + x2m1() * t.pow(m * n),
                }
            }
            ClosureFormula::Constant(p) => p.clone(),
            ClosureFormula::ZeroCase { at_zero, general } => {
                if n == 0 {
                    at_zero.clone()
                } else {
                    general.eval(n)
                }
            }
        }
    }

    fn with_lead(&self, new_lead: Polynomial) -> ClosureFormula {
        match self {
            ClosureFormula::Power {
                base,
                mult,
                offset,
                tail,
                ..
            } => ClosureFormula::Power {
                lead: new_lead,
                base: base.clone(),
                mult: *mult,
                offset: *offset,
                tail: tail.clone(),
            },
            other => other.clone(),
        }
    }

    fn lead(&self) -> Option<&Polynomial> {
        match self {
            ClosureFormula::Power { lead, .. } => Some(lead),
            _ => None,
        }
    }

    fn from_raw(raw: &RawFormula) -> ClosureFormula {
        match raw {
            RawFormula::Power {
                lead,
                base,
                mult,
                offset,
                tail,
            } => ClosureFormula::Power {
                lead: poly(lead),
                base: poly(base),
                mult: *mult,
                offset: *offset,
                tail: match tail {
                    Tail::None => FormulaTail::None,
                    Tail::XSquaredMinusOne => FormulaTail::XSquaredMinusOne,
                    Tail::Scaled(t, m) => FormulaTail::Scaled(poly(t), *m),
                },
            },
            RawFormula::Constant(c) => ClosureFormula::Constant(poly(c)),
            RawFormula::ZeroCase(z, g) => ClosureFormula::ZeroCase {
                at_zero: poly(z),
                general: Box::new(ClosureFormula::from_raw(g)),
            },
        }
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: EntryId,
    /// Printed member expressions.
    pub members: Vec<&'static str>,
    /// The pair as printed.
    pub printed_pair: BracketPair,
    /// The pair with flagged typos corrected.
    pub pair: BracketPair,
    pub heading: Heading,
    /// Printed D, N, R formulas.
    pub printed_formulas: [ClosureFormula; 3],
    /// D, N, R formulas with flagged typos corrected.
    pub formulas: [ClosureFormula; 3],
    /// Table numbers for D, N, R.
    pub tables: Option<[u32; 3]>,
    /// Entries sharing the D table according to the printed cross-reference.
    pub d_cross_refs: Vec<EntryId>,
    pub typos: Vec<Typo>,
}

fn kind_index(kind: ClosureKind) -> usize {
    match kind {
        ClosureKind::Denominator => 0,
        ClosureKind::Numerator => 1,
        ClosureKind::RClosure => 2,
    }
}

impl CatalogEntry {
    pub fn formula(&self, kind: ClosureKind) -> &ClosureFormula {
        &self.formulas[kind_index(kind)]
    }

    pub fn printed_formula(&self, kind: ClosureKind) -> &ClosureFormula {
        &self.printed_formulas[kind_index(kind)]
    }

    pub fn table_no(&self, kind: ClosureKind) -> Option<u32> {
        self.tables.map(|t| t[kind_index(kind)])
    }

    /// Entries A1..A17.
    pub fn is_prime(&self) -> bool {
        self.heading == Heading::Prime
    }

    /// Maximum crossing count over the printed members.
    pub fn max_crossings(&self) -> u64 {
        self.members
            .iter()
            .map(|m| parse(m).expect("catalog members parse").crossing_count())
            .max()
            .unwrap_or(0)
    }
}

fn build() -> Vec<CatalogEntry> {
    data::raw_entries()
        .into_iter()
        .enumerate()
        .map(|(i, raw)| {
            let id = EntryId(i as u8 + 1);
            let printed_pair = BracketPair::new(poly(raw.a), poly(raw.b));
            let printed_formulas = [&raw.d, &raw.n, &raw.r].map(ClosureFormula::from_raw);
            let mut pair = printed_pair.clone();
            let mut formulas = printed_formulas.clone();
            let mut typos = Vec::new();
            for (_, field, corrected) in data::TYPOS.iter().filter(|t| t.0 == id.0) {
                let corrected = poly(corrected);
                let (letter, printed_text, printed) = match field {
                    TypoField::PairA => ('B', raw.a, std::mem::replace(&mut pair.a, corrected.clone())),
                    TypoField::PairB => ('B', raw.b, std::mem::replace(&mut pair.b, corrected.clone())),
                    TypoField::RLead => {
                        let printed = formulas[2].lead().expect("R formula has a lead").clone();
                        let RawFormula::Power { lead, .. } = raw.r else {
                            unreachable!("R formulas with typos are powers")
                        };
                        formulas[2] = formulas[2].with_lead(corrected.clone());
                        ('R', lead, printed)
                    }
                };
                typos.push(Typo {
                    location: format!("{letter}{}", id.0),
                    field: *field,
                    printed_text,
                    printed,
                    corrected,
                });
            }
            CatalogEntry {
                id,
                members: raw.members.to_vec(),
                printed_pair,
                pair,
                heading: raw.heading,
                printed_formulas,
                formulas,
                tables: raw.tables,
                d_cross_refs: raw.cf.iter().map(|&n| EntryId(n)).collect(),
                typos,
            }
        })
        .collect()
}

/// All 35 entries in order, built once.
pub fn load_catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn entry(id: EntryId) -> Option<&'static CatalogEntry> {
    load_catalog().get(usize::from(id.0).checked_sub(1)?)
}

/// The entry whose (corrected) pair equals `p`.
pub fn find_by_pair(p: &BracketPair) -> Option<&'static CatalogEntry> {
    load_catalog().iter().find(|e| &e.pair == p)
}

/// Knot classes with their brackets.
pub fn knot_classes() -> [(KnotClass, Polynomial); 6] {
    KnotClass::ALL.map(|k| (k, k.bracket()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketGroup {
    pub pair: BracketPair,
    pub members: Vec<String>,
}

/// Partitions expressions into classes of equal bracket pairs, in order of
/// first appearance.
pub fn group_by_bracket<S: AsRef<str>>(exprs: &[S]) -> Result<Vec<BracketGroup>, TangleError> {
    let mut groups: Vec<BracketGroup> = Vec::new();
    let mut index: BTreeMap<BracketPair, usize> = BTreeMap::new();
    for s in exprs {
        let s = s.as_ref();
        let pair = bracket_pair(&parse(s)?)?;
        match index.get(&pair) {
            Some(&i) => groups[i].members.push(s.to_string()),
            None => {
                index.insert(pair.clone(), groups.len());
                groups.push(BracketGroup {
                    pair,
                    members: vec![s.to_string()],
                });
            }
        }
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn load_examples() {
        let cat = load_catalog();
        assert_eq!(cat.len(), 35);
        assert_eq!(cat[0].pair, BracketPair::crossing());
        assert_eq!(
            entry(EntryId(12)).unwrap().members,
            vec!["[2]*1/[2]", "1/[2]*[2]", "[1]*[2]*[1]"]
        );
        assert_eq!(knot_classes()[4].1, poly("x^3+4x^2+3x"));
        assert_eq!("A7".parse::<EntryId>().unwrap(), EntryId(7));
        assert!("A36".parse::<EntryId>().is_err());
        assert_eq!(entry(EntryId(0)).map(|e| e.id), None);
    }

    #[test]
    fn typos_are_recorded_with_both_values() {
        let locations: Vec<String> = load_catalog()
            .iter()
            .flat_map(|e| e.typos.iter().map(|t| t.location.clone()))
            .collect();
        assert_eq!(locations, ["B5", "B19", "B20", "R33"]);
        let b5 = &entry(EntryId(5)).unwrap().typos[0];
        assert_eq!(b5.printed, poly("x^3+3x+3"));
        assert_eq!(b5.corrected, poly("x^2+3x+3"));
        let b19 = &entry(EntryId(19)).unwrap().typos[0];
        assert_eq!(b19.printed, poly("4x+2"));
        assert_eq!(b19.printed_text, "x+3x+2");
        let a33 = entry(EntryId(33)).unwrap();
        assert_eq!(a33.printed_formula(ClosureKind::RClosure).eval(0), poly("x^2+x+1"));
        assert_eq!(a33.formula(ClosureKind::RClosure).eval(0), poly("x^2+x"));
    }

    #[test]
    fn grouping_examples() {
        let g = group_by_bracket(&["[1]+1/[2]", "1/[2]+[1]"]).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(find_by_pair(&g[0].pair).unwrap().id, EntryId(6));
        assert_eq!(group_by_bracket(&["[2]", "1/[2]"]).unwrap().len(), 2);

        let members: Vec<&str> = (12..=15)
            .flat_map(|i| entry(EntryId(i)).unwrap().members.clone())
            .collect();
        let groups = group_by_bracket(&members).unwrap();
        assert_eq!(groups.len(), 4);
        for (g, i) in groups.iter().zip(12..=15) {
            let e = entry(EntryId(i)).unwrap();
            assert_eq!(g.members, e.members);
            assert_eq!(g.pair, e.pair);
        }
        assert!(group_by_bracket(&["[1"]).is_err());
    }
}
