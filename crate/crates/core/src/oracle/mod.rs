//! Brute-force state sums over planar shadow diagrams.
//!
//! Diagrams are wired up directly from tangle expressions, independent of
//! the bracket-pair algebra, and every one of the `2^c` smoothing states is
//! enumerated with a union-find over edge labels to count circles.

mod diagram;

use num_bigint::BigInt;
use rayon::prelude::*;
use thiserror::Error;

use crate::closures::ClosureKind;
use crate::poly::Polynomial;
use crate::tangle::{BracketPair, KnotClass, TangleExpr};

pub use diagram::{Corner, ShadowDiagram};
pub(crate) use diagram::Wiring;

/// Default cap on the number of smoothing states.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{crossings} crossings give 2^{crossings} states, over the budget of {budget}")]
    BudgetExceeded { crossings: u64, budget: u64 },
    #[error("state sum of a knot requires a diagram without endpoints")]
    HasEndpoints,
    #[error("tangle state sum requires a diagram with four endpoints")]
    HasNoEndpoints,
    #[error("a smoothing state joins NW to SE; the diagram is not planar")]
    NonplanarState,
    #[error("malformed diagram: {0}")]
    Malformed(String),
    #[error("diagram text line {line}: {msg}")]
    Format { line: usize, msg: String },
}

fn check_budget(crossings: u64, budget: u64) -> Result<(), OracleError> {
    let over = crossings >= 63 || (1u64 << crossings) > budget;
    if over {
        Err(OracleError::BudgetExceeded { crossings, budget })
    } else {
        Ok(())
    }
}

/// Closed reference diagrams for the knot classes.
fn knot_wiring(k: KnotClass) -> Wiring {
    let twist = |n: u32| (1..n).fold(Wiring::crossing(), |w, _| w.hsum(Wiring::crossing()));
    match k {
        KnotClass::K1 => Wiring::crossing().close(false),
        KnotClass::K2 => twist(2).close(false),
        KnotClass::K3 => twist(2).close(true),
        KnotClass::K4 => twist(3).close(false),
        KnotClass::K5 => twist(3).close(true),
        KnotClass::K6 => Wiring::crossing()
            .hsum(twist(2).rotate())
            .close(false),
    }
}

fn wire(e: &TangleExpr) -> Wiring {
    match e {
        TangleExpr::Zero => Wiring::zero(),
        TangleExpr::Infinity => Wiring::infinity(),
        TangleExpr::Twist(n) => (1..*n).fold(Wiring::crossing(), |w, _| w.hsum(Wiring::crossing())),
        TangleExpr::InvTwist(n) => wire(&TangleExpr::Twist(*n)).rotate(),
        TangleExpr::HSum(l, r) => wire(l).hsum(wire(r)),
        TangleExpr::VSum(l, r) => wire(l).vsum(wire(r)),
        TangleExpr::Inverse(e) => wire(e).rotate(),
        TangleExpr::ConnectKnot(e, k) => wire(e).splice_knot_at_sw(knot_wiring(*k)),
        TangleExpr::Rep(e, n) => {
            let piece = wire(e);
            (0..*n).fold(Wiring::zero(), |w, _| w.hsum(piece.clone()))
        }
    }
}

/// Planar diagram with four endpoints for `e`.
pub fn build_diagram(e: &TangleExpr, budget: u64) -> Result<ShadowDiagram, OracleError> {
    check_budget(e.crossing_count(), budget)?;
    Ok(wire(e).into_diagram())
}

/// Knot shadow obtained by closing the diagram of `e`.
pub fn build_closure_diagram(
    e: &TangleExpr,
    kind: ClosureKind,
    budget: u64,
) -> Result<ShadowDiagram, OracleError> {
    let extra = u64::from(kind == ClosureKind::RClosure);
    check_budget(e.crossing_count() + extra, budget)?;
    let w = match kind {
        ClosureKind::Numerator => wire(e).close(true),
        ClosureKind::Denominator => wire(e).close(false),
        ClosureKind::RClosure => wire(e).hsum(Wiring::crossing()).close(true),
    };
    Ok(w.into_diagram())
}

/// Reference knot diagram for a class.
pub fn knot_diagram(k: KnotClass) -> ShadowDiagram {
    knot_wiring(k).into_diagram()
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    /// Returns whether two classes were merged.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra as usize] = rb;
        true
    }
}

/// Boundary pattern of one smoothing state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Pattern {
    Closed,
    Zero,
    Infinity,
    Crossed,
}

/// Resolves state `state` (bit `i` = smoothing of crossing `i`) and returns
/// the boundary pattern with the number of closed circles.
fn resolve(d: &ShadowDiagram, edges: usize, state: u64, uf: &mut UnionFind) -> (Pattern, usize) {
    uf.reset();
    let mut merges = 0;
    for (i, &[s0, s1, s2, s3]) in d.crossings.iter().enumerate() {
        let (p, q) = if state >> i & 1 == 0 {
            ((s0, s1), (s2, s3))
        } else {
            ((s0, s3), (s1, s2))
        };
        merges += usize::from(uf.union(p.0, p.1));
        merges += usize::from(uf.union(q.0, q.1));
    }
    let components = edges - merges;
    let loops = d.free_loops as usize;
    match d.endpoints {
        None => (Pattern::Closed, components + loops),
        Some([nw, ne, sw, se]) => {
            let r = uf.find(nw);
            let pattern = if r == uf.find(ne) {
                Pattern::Zero
            } else if r == uf.find(sw) {
                Pattern::Infinity
            } else {
                debug_assert_eq!(r, uf.find(se));
                Pattern::Crossed
            };
            // two of the components are the arcs through the endpoints
            (pattern, components - 2 + loops)
        }
    }
}

/// Per-pattern circle-count histograms: `[closed/zero, infinity, crossed]`.
fn histograms(d: &ShadowDiagram) -> Result<[Vec<u64>; 3], OracleError> {
    d.validate()?;
    let (d, edges) = d.compacted();
    let c = d.crossing_count();
    if c >= 63 {
        return Err(OracleError::BudgetExceeded {
            crossings: c as u64,
            budget: u64::MAX,
        });
    }
    let bins = edges + d.free_loops as usize + 1;
    let empty = || [vec![0u64; bins], vec![0u64; bins], vec![0u64; bins]];
    let tally = |mut acc: [Vec<u64>; 3], (pattern, circles): (Pattern, usize)| {
        let slot = match pattern {
            Pattern::Closed | Pattern::Zero => 0,
            Pattern::Infinity => 1,
            Pattern::Crossed => 2,
        };
        acc[slot][circles] += 1;
        acc
    };
    let merge = |mut a: [Vec<u64>; 3], b: [Vec<u64>; 3]| {
        for (x, y) in a.iter_mut().zip(b) {
            for (s, t) in x.iter_mut().zip(y) {
                *s += t;
            }
        }
        a
    };
    let states = 1u64 << c;
    let hist = if c <= 10 {
        let mut uf = UnionFind::new(edges);
        (0..states).fold(empty(), |acc, s| tally(acc, resolve(&d, edges, s, &mut uf)))
    } else {
        (0..states)
            .into_par_iter()
            .fold(
                || (UnionFind::new(edges), empty()),
                |(mut uf, acc), s| {
                    let r = resolve(&d, edges, s, &mut uf);
                    (uf, tally(acc, r))
                },
            )
            .map(|(_, h)| h)
            .reduce(empty, merge)
    };
    Ok(hist)
}

fn to_poly(hist: &[u64]) -> Polynomial {
    Polynomial::new(hist.iter().map(|&n| BigInt::from(n)).collect())
}

/// `sum over states of x^(number of circles)` for a closed diagram.
pub fn state_sum_knot(d: &ShadowDiagram) -> Result<Polynomial, OracleError> {
    if d.is_tangle() {
        return Err(OracleError::HasEndpoints);
    }
    let [closed, _, _] = histograms(d)?;
    Ok(to_poly(&closed))
}

/// Bracket pair of a tangle diagram: states joining NW to NE feed `a`, those
/// joining NW to SW feed `b`.
pub fn state_sum_tangle(d: &ShadowDiagram) -> Result<BracketPair, OracleError> {
    if !d.is_tangle() {
        return Err(OracleError::HasNoEndpoints);
    }
    let [zero, infinity, crossed] = histograms(d)?;
    if crossed.iter().any(|&n| n > 0) {
        return Err(OracleError::NonplanarState);
    }
    Ok(BracketPair::new(to_poly(&zero), to_poly(&infinity)))
}

/// Builds and evaluates `e` in one step.
pub fn oracle_pair(e: &TangleExpr, budget: u64) -> Result<BracketPair, OracleError> {
    state_sum_tangle(&build_diagram(e, budget)?)
}
