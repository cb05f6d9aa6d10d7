//! Catalog entries transcribed as printed, typos included.

use crate::tangle::KnotClass;

use super::{Heading, TypoField};

pub(super) enum Tail {
    None,
    XSquaredMinusOne,
    Scaled(&'static str, u32),
}

pub(super) enum RawFormula {
    Power {
        lead: &'static str,
        base: &'static str,
        mult: u32,
        offset: u32,
        tail: Tail,
    },
    Constant(&'static str),
    ZeroCase(&'static str, Box<RawFormula>),
}

pub(super) struct RawEntry {
    pub members: &'static [&'static str],
    pub a: &'static str,
    pub b: &'static str,
    pub heading: Heading,
    pub d: RawFormula,
    pub n: RawFormula,
    pub r: RawFormula,
    /// Table numbers for D, N, R.
    pub tables: Option<[u32; 3]>,
    /// Entries whose D closure is listed as sharing the D table.
    pub cf: &'static [u8],
}

fn power(lead: &'static str, base: &'static str, mult: u32, offset: u32, tail: Tail) -> RawFormula {
    RawFormula::Power {
        lead,
        base,
        mult,
        offset,
        tail,
    }
}

/// `(entry, field, corrected value)`; the printed value is whatever the
/// entry holds.
pub(super) const TYPOS: [(u8, TypoField, &str); 4] = [
    (5, TypoField::PairA, "x^2+3x+3"),
    (19, TypoField::PairB, "x^2+3x+2"),
    (20, TypoField::PairA, "x^2+3x+2"),
    (33, TypoField::RLead, "x+1"),
];

pub(super) fn raw_entries() -> Vec<RawEntry> {
    vec![
        RawEntry {
            members: &["[1]"],
            a: "1",
            b: "1",
            heading: Heading::Prime,
            d: power("x", "x+1", 1, 0, Tail::None),
            n: power("1", "x+1", 1, 0, Tail::XSquaredMinusOne),
            r: power("1", "x+1", 1, 1, Tail::XSquaredMinusOne),
            tables: Some([1, 2, 3]),
            cf: &[],
        },
        RawEntry {
            members: &["[2]"],
            a: "1",
            b: "x+2",
            heading: Heading::Prime,
            d: power("x", "x+1", 2, 0, Tail::None),
            n: power("1", "x+1", 2, 0, Tail::XSquaredMinusOne),
            r: power("1", "x+1", 2, 1, Tail::XSquaredMinusOne),
            tables: Some([4, 5, 6]),
            cf: &[18],
        },
        RawEntry {
            members: &["1/[2]"],
            a: "x+2",
            b: "1",
            heading: Heading::Prime,
            d: power("x", "2x+2", 1, 0, Tail::None),
            n: power("1", "2x+2", 1, 0, Tail::Scaled("x+2", 1)),
            r: power("x+1", "2x+2", 1, 0, Tail::Scaled("x+2", 1)),
            tables: Some([7, 8, 9]),
            cf: &[],
        },
        RawEntry {
            members: &["[3]"],
            a: "1",
            b: "x^2+3x+3",
            heading: Heading::Prime,
            d: power("x", "x+1", 3, 0, Tail::None),
            n: power("1", "x+1", 3, 0, Tail::XSquaredMinusOne),
            r: power("1", "x+1", 3, 1, Tail::XSquaredMinusOne),
            tables: Some([10, 11, 12]),
            cf: &[25, 19],
        },
        RawEntry {
            members: &["1/[3]"],
            a: "x^3+3x+3",
            b: "1",
            heading: Heading::Prime,
            d: power("x", "x^2+4x+3", 1, 0, Tail::None),
            n: power("1", "x^2+4x+3", 1, 0, Tail::Scaled("x^2+3x+3", 1)),
            r: power("x+1", "x^2+4x+3", 1, 0, Tail::Scaled("x^2+3x+3", 1)),
            tables: Some([13, 14, 15]),
            cf: &[7],
        },
        RawEntry {
            members: &["[1]+1/[2]", "1/[2]+[1]"],
            a: "x+2",
            b: "2x+3",
            heading: Heading::Prime,
            d: power("x", "2x^2+4x+2", 1, 0, Tail::None),
            n: power("1", "2x^2+4x+2", 1, 0, Tail::Scaled("x+2", 1)),
            r: power("x+1", "2x^2+4x+2", 1, 0, Tail::Scaled("x+2", 1)),
            tables: Some([16, 17, 18]),
            cf: &[28, 20],
        },
        RawEntry {
            members: &["[1]*[2]", "[2]*[1]"],
            a: "2x+3",
            b: "x+2",
            heading: Heading::Prime,
            d: power("x", "x^2+4x+3", 1, 0, Tail::None),
            n: power("1", "x^2+4x+3", 1, 0, Tail::Scaled("2x+3", 1)),
            r: power("x+1", "x^2+4x+3", 1, 0, Tail::Scaled("2x+3", 1)),
            tables: Some([13, 19, 20]),
            cf: &[5],
        },
        RawEntry {
            members: &["[4]"],
            a: "1",
            b: "x^3+4x^2+6x+4",
            heading: Heading::Prime,
            d: power("x", "x+1", 4, 0, Tail::None),
            n: power("1", "x+1", 4, 0, Tail::XSquaredMinusOne),
            r: power("1", "x+1", 4, 1, Tail::XSquaredMinusOne),
            tables: Some([21, 22, 23]),
            cf: &[21, 26, 31],
        },
        RawEntry {
            members: &["1/[4]"],
            a: "x^3+4x^2+6x+4",
            b: "1",
            heading: Heading::Prime,
            d: power("x", "x^3+4x^2+7x+4", 1, 0, Tail::None),
            n: power("1", "x^3+4x^2+7x+4", 1, 0, Tail::Scaled("x^3+4x^2+6x+4", 1)),
            r: power("x+1", "x^3+4x^2+7x+4", 1, 0, Tail::Scaled("x^3+4x^2+6x+4", 1)),
            tables: Some([24, 25, 26]),
            cf: &[10, 17],
        },
        RawEntry {
            members: &["[2]*[2]"],
            a: "3x+4",
            b: "x^2+4x+4",
            heading: Heading::Prime,
            d: power("x", "x^3+4x^2+7x+4", 1, 0, Tail::None),
            n: power("1", "x^3+4x^2+7x+4", 1, 0, Tail::Scaled("3x+4", 1)),
            r: power("x+1", "x^3+4x^2+7x+4", 1, 0, Tail::Scaled("3x+4", 1)),
            tables: Some([24, 27, 28]),
            cf: &[9, 17],
        },
        RawEntry {
            members: &["1/[2]+1/[2]"],
            a: "x^2+4x+4",
            b: "3x+4",
            heading: Heading::Prime,
            d: power("x", "2x+2", 2, 0, Tail::None),
            n: power("1", "2x+2", 2, 0, Tail::Scaled("x+2", 2)),
            r: power("x+1", "2x+2", 2, 0, Tail::Scaled("x+2", 2)),
            tables: Some([29, 30, 31]),
            cf: &[30],
        },
        RawEntry {
            members: &["[2]*1/[2]", "1/[2]*[2]", "[1]*[2]*[1]"],
            a: "2x^2+6x+5",
            b: "x+2",
            heading: Heading::Prime,
            d: power("x", "3x^2+8x+5", 1, 0, Tail::None),
            n: power("1", "3x^2+8x+5", 1, 0, Tail::Scaled("2x^2+6x+5", 1)),
            r: power("x+1", "3x^2+8x+5", 1, 0, Tail::Scaled("2x^2+6x+5", 1)),
            tables: Some([32, 33, 34]),
            cf: &[14],
        },
        RawEntry {
            members: &["[2]+1/[2]", "1/[2]+[2]", "[1]+1/[2]+[1]"],
            a: "x+2",
            b: "2x^2+6x+5",
            heading: Heading::Prime,
            d: power("x", "2x^3+6x^2+6x+2", 1, 0, Tail::None),
            n: power("1", "2x^3+6x^2+6x+2", 1, 0, Tail::Scaled("x+2", 1)),
            r: power("x+1", "2x^3+6x^2+6x+2", 1, 0, Tail::Scaled("x+2", 1)),
            tables: Some([35, 36, 37]),
            cf: &[23, 27, 29, 33],
        },
        RawEntry {
            members: &["[1]*([1]+1/[2])", "([1]+1/[2])*[1]", "[1]*(1/[2]+[1])", "(1/[2]+[1])*[1]"],
            a: "x^2+5x+5",
            b: "2x+3",
            heading: Heading::Prime,
            d: power("x", "3x^2+8x+5", 1, 0, Tail::None),
            n: power("1", "3x^2+8x+5", 1, 0, Tail::Scaled("x^2+5x+5", 1)),
            r: power("x+1", "3x^2+8x+5", 1, 0, Tail::Scaled("x^2+5x+5", 1)),
            tables: Some([32, 38, 39]),
            cf: &[12],
        },
        RawEntry {
            members: &["[1]+([2]*[1])", "([2]*[1])+[1]", "[1]+([1]*[2])", "([1]*[2])+[1]"],
            a: "2x+3",
            b: "x^2+5x+5",
            heading: Heading::Prime,
            d: power("x", "x^3+5x^2+7x+3", 1, 0, Tail::None),
            n: power("1", "x^3+5x^2+7x+3", 1, 0, Tail::Scaled("2x+3", 1)),
            r: power("x+1", "x^3+5x^2+7x+3", 1, 0, Tail::Scaled("2x+3", 1)),
            tables: Some([40, 41, 42]),
            cf: &[16, 22, 24, 32],
        },
        RawEntry {
            members: &["[1]+1/[3]", "1/[3]+[1]"],
            a: "x^2+3x+3",
            b: "x^2+4x+4",
            heading: Heading::Prime,
            d: power("x", "x^3+5x^2+7x+3", 1, 0, Tail::None),
            n: power("1", "x^3+5x^2+7x+3", 1, 0, Tail::Scaled("x^2+3x+3", 1)),
            r: power("x+1", "x^3+5x^2+7x+3", 1, 0, Tail::Scaled("x^2+3x+3", 1)),
            tables: Some([40, 43, 44]),
            cf: &[15, 22, 24, 32],
        },
        RawEntry {
            members: &["[1]*[3]", "[3]*[1]"],
            a: "x^2+4x+4",
            b: "x^2+3x+3",
            heading: Heading::Prime,
            d: power("x", "x^3+4x^2+7x+4", 1, 0, Tail::None),
            n: power("1", "x^3+4x^2+7x+4", 1, 0, Tail::Scaled("x^2+4x+4", 1)),
            r: power("x+1", "x^3+4x^2+7x+4", 1, 0, Tail::Scaled("x^2+4x+4", 1)),
            tables: Some([24, 45, 46]),
            cf: &[9, 10],
        },
        RawEntry {
            members: &["[1]#K1"],
            a: "x+1",
            b: "x+1",
            heading: Heading::Knotted(1, KnotClass::K1),
            d: power("x", "x+1", 2, 0, Tail::None),
            n: power("1", "x+1", 2, 0, Tail::Scaled("x+1", 1)),
            r: power("1", "x+1", 2, 1, Tail::Scaled("x+1", 1)),
            tables: Some([4, 47, 48]),
            cf: &[2],
        },
        RawEntry {
            members: &["[2]#K1"],
            a: "x+1",
            b: "x+3x+2",
            heading: Heading::Knotted(2, KnotClass::K1),
            d: power("x", "x+1", 3, 0, Tail::None),
            n: power("1", "x+1", 3, 0, Tail::Scaled("x+1", 1)),
            r: power("1", "x+1", 3, 1, Tail::Scaled("x+1", 1)),
            tables: Some([10, 49, 50]),
            cf: &[4, 25],
        },
        RawEntry {
            members: &["(1/[2])#K1"],
            a: "x+3x+2",
            b: "x+1",
            heading: Heading::Knotted(3, KnotClass::K1),
            d: power("x", "2x^2+4x+2", 1, 0, Tail::None),
            n: power("1", "2x^2+4x+2", 1, 0, Tail::Scaled("x^2+3x+2", 1)),
            r: power("x+1", "2x^2+4x+2", 1, 0, Tail::Scaled("x^2+3x+2", 1)),
            tables: Some([16, 51, 52]),
            cf: &[6, 28],
        },
        RawEntry {
            members: &["[3]#K1"],
            a: "x+1",
            b: "x^3+4x^2+6x+3",
            heading: Heading::Knotted(4, KnotClass::K1),
            d: power("x", "x+1", 4, 0, Tail::None),
            n: power("1", "x+1", 4, 0, Tail::Scaled("x+1", 1)),
            r: power("1", "x+1", 4, 1, Tail::Scaled("x+1", 1)),
            tables: Some([21, 53, 54]),
            cf: &[8, 26, 31],
        },
        RawEntry {
            members: &["(1/[3])#K1"],
            a: "x^3+4x^2+6x+3",
            b: "x+1",
            heading: Heading::Knotted(5, KnotClass::K1),
            d: power("x", "x^3+5x^2+7x+3", 1, 0, Tail::None),
            n: power("1", "x^3+5x^2+7x+3", 1, 0, Tail::Scaled("x^3+4x^2+6x+3", 1)),
            r: power("x+1", "x^3+5x^2+7x+3", 1, 0, Tail::Scaled("x^3+4x^2+6x+3", 1)),
            tables: Some([40, 55, 56]),
            cf: &[15, 16, 24, 32],
        },
        RawEntry {
            members: &["([1]+1/[2])#K1", "(1/[2]+[1])#K1"],
            a: "x^2+3x+2",
            b: "2x^2+5x+3",
            heading: Heading::Knotted(6, KnotClass::K1),
            d: power("x", "2x^3+6x^2+6x+2", 1, 0, Tail::None),
            n: power("1", "2x^3+6x^2+6x+2", 1, 0, Tail::Scaled("x^2+3x+2", 1)),
            r: power("x+1", "2x^3+6x^2+6x+2", 1, 0, Tail::Scaled("x^2+3x+2", 1)),
            tables: Some([35, 57, 58]),
            cf: &[13, 27, 29, 33],
        },
        RawEntry {
            members: &["([1]*[2])#K1", "([2]*[1])#K1"],
            a: "2x^2+5x+3",
            b: "x^2+3x+2",
            heading: Heading::Knotted(7, KnotClass::K1),
            d: power("x", "x^3+5x^2+7x+3", 1, 0, Tail::None),
            n: power("1", "x^3+5x^2+7x+3", 1, 0, Tail::Scaled("2x^2+5x+3", 1)),
            r: power("x+1", "x^3+5x^2+7x+3", 1, 0, Tail::Scaled("2x^2+5x+3", 1)),
            tables: Some([40, 59, 60]),
            cf: &[15, 16, 22, 32],
        },
        RawEntry {
            members: &["[1]#K2"],
            a: "x^2+2x+1",
            b: "x^2+2x+1",
            heading: Heading::Knotted(1, KnotClass::K2),
            d: power("x", "x+1", 3, 0, Tail::None),
            n: power("1", "x+1", 3, 0, Tail::Scaled("x+1", 2)),
            r: power("1", "x+1", 3, 1, Tail::Scaled("x+1", 2)),
            tables: Some([10, 61, 62]),
            cf: &[4, 19],
        },
        RawEntry {
            members: &["[2]#K2"],
            a: "x^2+2x+1",
            b: "x^3+4x^2+5x+2",
            heading: Heading::Knotted(2, KnotClass::K2),
            d: power("x", "x+1", 4, 0, Tail::None),
            n: power("1", "x+1", 4, 0, Tail::Scaled("x+1", 2)),
            r: power("1", "x+1", 4, 1, Tail::Scaled("x+1", 2)),
            tables: Some([21, 63, 64]),
            cf: &[8, 21, 31],
        },
        RawEntry {
            members: &["(1/[2])#K2"],
            a: "x^3+4x^2+5x+2",
            b: "x^2+2x+1",
            heading: Heading::Knotted(3, KnotClass::K2),
            d: power("x", "2x^3+6x^2+6x+2", 1, 0, Tail::None),
            n: power("1", "2x^3+6x^2+6x+2", 1, 0, Tail::Scaled("x^3+4x^2+5x+2", 1)),
            r: power("x+1", "2x^3+6x^2+6x+2", 1, 0, Tail::Scaled("x^3+4x^2+5x+2", 1)),
            tables: Some([35, 65, 66]),
            cf: &[13, 23, 29, 33],
        },
        RawEntry {
            members: &["[1]#K3"],
            a: "2x+2",
            b: "2x+2",
            heading: Heading::Knotted(1, KnotClass::K3),
            d: power("x", "2x^2+4x+2", 1, 0, Tail::None),
            n: power("1", "2x^2+4x+2", 1, 0, Tail::Scaled("2x+2", 1)),
            r: power("x+1", "2x^2+4x+2", 1, 0, Tail::Scaled("2x+2", 1)),
            tables: Some([16, 67, 68]),
            cf: &[6, 20],
        },
        RawEntry {
            members: &["[2]#K3"],
            a: "2x+2",
            b: "2x^2+6x+4",
            heading: Heading::Knotted(2, KnotClass::K3),
            d: power("x", "2x^3+6x^2+6x+2", 1, 0, Tail::None),
            n: power("1", "2x^3+6x^2+6x+2", 1, 0, Tail::Scaled("2x+2", 1)),
            r: power("x+1", "2x^3+6x^2+6x+2", 1, 0, Tail::Scaled("2x+2", 1)),
            tables: Some([35, 69, 70]),
            cf: &[13, 23, 27, 33],
        },
        RawEntry {
            members: &["(1/[2])#K3"],
            a: "2x^2+6x+4",
            b: "2x+2",
            heading: Heading::Knotted(3, KnotClass::K3),
            d: power("x", "2x+2", 2, 0, Tail::None),
            n: power("1", "2x+2", 2, 0, Tail::Scaled("2x^2+6x+4", 1)),
            r: power("x+1", "2x+2", 2, 0, Tail::Scaled("2x^2+6x+4", 1)),
            tables: Some([29, 71, 72]),
            cf: &[11],
        },
        RawEntry {
            members: &["[1]#K4"],
            a: "x^3+3x^2+3x+1",
            b: "x^3+3x^2+3x+1",
            heading: Heading::Knotted(1, KnotClass::K4),
            d: power("x", "x+1", 4, 0, Tail::None),
            n: power("1", "x+1", 4, 0, Tail::Scaled("x+1", 3)),
            r: power("1", "x+1", 4, 1, Tail::Scaled("x+1", 3)),
            tables: Some([21, 73, 74]),
            cf: &[8, 21, 26],
        },
        RawEntry {
            members: &["[1]#K5"],
            a: "x^2+4x+3",
            b: "x^2+4x+3",
            heading: Heading::Knotted(1, KnotClass::K5),
            d: power("x", "x^3+5x^2+7x+3", 1, 0, Tail::None),
            n: power("1", "x^3+5x^2+7x+3", 1, 0, Tail::Scaled("x^2+4x+3", 1)),
            r: power("x+1", "x^3+5x^2+7x+3", 1, 0, Tail::Scaled("x^2+4x+3", 1)),
            tables: Some([40, 75, 76]),
            cf: &[15, 16, 22, 24],
        },
        RawEntry {
            members: &["[1]#K6"],
            a: "2x^2+4x+2",
            b: "2x^2+4x+2",
            heading: Heading::Knotted(1, KnotClass::K6),
            d: power("x", "2x^3+6x^2+6x+2", 1, 0, Tail::None),
            n: power("1", "2x^3+6x^2+6x+2", 1, 0, Tail::Scaled("2x^2+4x+2", 1)),
            r: power("x+2", "2x^3+6x^2+6x+2", 1, 0, Tail::Scaled("2x^2+4x+2", 1)),
            tables: Some([35, 77, 78]),
            cf: &[13, 23, 27, 29],
        },
        RawEntry {
            members: &["[0]"],
            a: "1",
            b: "0",
            heading: Heading::Trivial,
            d: RawFormula::Constant("x"),
            n: RawFormula::Constant("x^2"),
            r: RawFormula::Constant("x^2+x"),
            tables: None,
            cf: &[],
        },
        RawEntry {
            members: &["[inf]"],
            a: "0",
            b: "1",
            heading: Heading::Trivial,
            d: power("1", "x", 1, 1, Tail::None),
            n: RawFormula::ZeroCase("x^2", Box::new(power("1", "x", 1, 0, Tail::None))),
            r: RawFormula::ZeroCase("x^2+x", Box::new(power("x+1", "x", 1, 0, Tail::None))),
            tables: Some([79, 80, 81]),
            cf: &[],
        },
    ]
}
