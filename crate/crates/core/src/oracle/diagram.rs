//! Combinatorial 4-valent planar shadows.
//!
//! A [`ShadowDiagram`] names every edge with an integer label. Each crossing
//! lists the labels of its four incident edges in counter-clockwise order;
//! each label appears exactly twice among crossing slots and boundary
//! endpoints. Closed circles without crossings are kept as a count.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::OracleError;

/// Boundary endpoint of a 2-tangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Corner {
    NW,
    NE,
    SW,
    SE,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::NW, Corner::NE, Corner::SW, Corner::SE];

    fn index(self) -> usize {
        self as usize
    }

    fn name(self) -> &'static str {
        match self {
            Corner::NW => "NW",
            Corner::NE => "NE",
            Corner::SW => "SW",
            Corner::SE => "SE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowDiagram {
    /// Edge labels around each crossing, counter-clockwise.
    pub crossings: Vec<[u32; 4]>,
    /// Labels of the edges at NW, NE, SW, SE; `None` for a knot shadow.
    pub endpoints: Option<[u32; 4]>,
    /// Crossingless circles.
    pub free_loops: u32,
}

impl ShadowDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_tangle(&self) -> bool {
        self.endpoints.is_some()
    }

    pub fn endpoint(&self, c: Corner) -> Option<u32> {
        self.endpoints.map(|e| e[c.index()])
    }

    /// Checks that every label is used exactly twice.
    pub fn validate(&self) -> Result<(), OracleError> {
        let mut uses: BTreeMap<u32, usize> = BTreeMap::new();
        for l in self.crossings.iter().flatten().chain(self.endpoints.iter().flatten()) {
            *uses.entry(*l).or_default() += 1;
        }
        match uses.iter().find(|(_, &n)| n != 2) {
            Some((l, n)) => Err(OracleError::Malformed(format!(
                "edge label {l} is used {n} times (expected 2)"
            ))),
            None => Ok(()),
        }
    }

    /// Relabels edges to `0..edge_count` in order of first appearance.
    pub fn compacted(&self) -> (ShadowDiagram, usize) {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        let mut next = 0u32;
        let mut relabel = |l: u32| {
            *map.entry(l).or_insert_with(|| {
                next += 1;
                next - 1
            })
        };
        let crossings = self.crossings.iter().map(|c| c.map(&mut relabel)).collect();
        let endpoints = self.endpoints.map(|e| e.map(&mut relabel));
        let d = ShadowDiagram {
            crossings,
            endpoints,
            free_loops: self.free_loops,
        };
        (d, next as usize)
    }
}

impl fmt::Display for ShadowDiagram {
    /// Line-oriented text: a `tangle` or `knot` header, one `X a b c d` line
    /// per crossing, `E <corner> <label>` per endpoint and `L <n>` for free
    /// circles when there are any.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", if self.is_tangle() { "tangle" } else { "knot" })?;
        for [a, b, c, d] in &self.crossings {
            writeln!(f, "X {a} {b} {c} {d}")?;
        }
        if let Some(ends) = self.endpoints {
            for c in Corner::ALL {
                writeln!(f, "E {} {}", c.name(), ends[c.index()])?;
            }
        }
        if self.free_loops > 0 {
            writeln!(f, "L {}", self.free_loops)?;
        }
        Ok(())
    }
}

impl FromStr for ShadowDiagram {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |line: usize, msg: &str| OracleError::Format {
            line,
            msg: msg.to_string(),
        };
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
        let is_tangle = match header {
            "tangle" => true,
            "knot" => false,
            _ => return Err(err(hline, "header must be 'tangle' or 'knot'")),
        };
        let mut crossings = Vec::new();
        let mut ends: [Option<u32>; 4] = [None; 4];
        let mut free_loops = 0u32;
        for (ln, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<u32>().map_err(|_| err(ln, "expected a non-negative integer"));
            match fields.as_slice() {
                ["X", a, b, c, d] => crossings.push([num(a)?, num(b)?, num(c)?, num(d)?]),
                ["E", corner, l] => {
                    let c = Corner::ALL
                        .into_iter()
                        .find(|c| c.name() == *corner)
                        .ok_or_else(|| err(ln, "corner must be NW, NE, SW or SE"))?;
                    if !is_tangle {
                        return Err(err(ln, "knot diagrams have no endpoints"));
                    }
                    if ends[c.index()].replace(num(l)?).is_some() {
                        return Err(err(ln, "duplicate endpoint"));
                    }
                }
                ["L", n] => free_loops += num(n)?,
                _ => return Err(err(ln, "expected 'X a b c d', 'E <corner> <label>' or 'L <n>'")),
            }
        }
        let endpoints = if is_tangle {
            let mut e = [0u32; 4];
            for c in Corner::ALL {
                e[c.index()] = ends[c.index()]
                    .ok_or_else(|| err(0, &format!("missing endpoint {}", c.name())))?;
            }
            Some(e)
        } else {
            None
        };
        let d = ShadowDiagram {
            crossings,
            endpoints,
            free_loops,
        };
        d.validate()?;
        Ok(d)
    }
}

/// Half-edge attachment point used while wiring diagrams together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Port {
    Slot(usize, u8),
    End(usize),
}

/// A diagram under construction: a perfect matching on ports.
#[derive(Debug, Clone)]
pub(crate) struct Wiring {
    crossings: usize,
    ends_allocated: usize,
    partner: BTreeMap<Port, Port>,
    /// Ports currently at NW, NE, SW, SE; `None` once closed.
    corners: Option<[Port; 4]>,
    free_loops: u32,
}

impl Wiring {
    fn link(&mut self, p: Port, q: Port) {
        self.partner.insert(p, q);
        self.partner.insert(q, p);
    }

    fn partner(&self, p: Port) -> Port {
        self.partner[&p]
    }

    /// `[0]`: NW joined to NE, SW joined to SE.
    pub fn zero() -> Self {
        let mut w = Wiring::empty_tangle();
        w.link(Port::End(0), Port::End(1));
        w.link(Port::End(2), Port::End(3));
        w
    }

    /// `[inf]`: NW joined to SW, NE joined to SE.
    pub fn infinity() -> Self {
        let mut w = Wiring::empty_tangle();
        w.link(Port::End(0), Port::End(2));
        w.link(Port::End(1), Port::End(3));
        w
    }

    fn empty_tangle() -> Self {
        Wiring {
            crossings: 0,
            ends_allocated: 4,
            partner: BTreeMap::new(),
            corners: Some([Port::End(0), Port::End(1), Port::End(2), Port::End(3)]),
            free_loops: 0,
        }
    }

    /// `[1]`: one crossing whose counter-clockwise slots face NE, NW, SW, SE.
    /// Slot pairing (0,1)(2,3) yields `[0]`, pairing (0,3)(1,2) yields `[inf]`.
    pub fn crossing() -> Self {
        let mut w = Wiring::empty_tangle();
        w.crossings = 1;
        w.link(Port::Slot(0, 0), Port::End(1));
        w.link(Port::Slot(0, 1), Port::End(0));
        w.link(Port::Slot(0, 2), Port::End(2));
        w.link(Port::Slot(0, 3), Port::End(3));
        w
    }

    fn corner(&self, c: Corner) -> Port {
        self.corners.expect("wiring has no endpoints")[c.index()]
    }

    /// Shifts crossing and endpoint ids past those of `base`.
    fn offset_past(mut self, base: &Wiring) -> Wiring {
        let shift = |p: Port| match p {
            Port::Slot(c, s) => Port::Slot(c + base.crossings, s),
            Port::End(e) => Port::End(e + base.ends_allocated),
        };
        self.partner = self.partner.into_iter().map(|(p, q)| (shift(p), shift(q))).collect();
        self.corners = self.corners.map(|cs| cs.map(shift));
        self
    }

    /// Disjoint union keeping `self`'s corners; returns the shifted corners
    /// of `other`.
    fn juxtapose(mut self, other: Wiring) -> (Wiring, Option<[Port; 4]>) {
        let other = other.offset_past(&self);
        self.crossings += other.crossings;
        self.ends_allocated += other.ends_allocated;
        self.partner.extend(other.partner);
        self.free_loops += other.free_loops;
        (self, other.corners)
    }

    /// Identifies two endpoint ports, splicing their strands together.
    fn glue(&mut self, u: Port, v: Port) {
        let pu = self.partner(u);
        let pv = self.partner(v);
        self.partner.remove(&u);
        self.partner.remove(&v);
        if pu == v {
            self.free_loops += 1;
        } else {
            self.link(pu, pv);
        }
    }

    /// `A + B`: `B` placed to the right of `A`.
    pub fn hsum(self, other: Wiring) -> Wiring {
        let [a_nw, a_ne, a_sw, a_se] = self.corners.expect("left summand is closed");
        let (mut w, b) = self.juxtapose(other);
        let [b_nw, b_ne, b_sw, b_se] = b.expect("right summand is closed");
        w.glue(a_ne, b_nw);
        w.glue(a_se, b_sw);
        w.corners = Some([a_nw, b_ne, a_sw, b_se]);
        w
    }

    /// `A * B`: `B` placed below `A`.
    pub fn vsum(self, other: Wiring) -> Wiring {
        self.rotate().hsum(other.rotate()).rotate_back()
    }

    /// Quarter turn counter-clockwise: the NW port moves to SW, SW to SE,
    /// SE to NE and NE to NW.
    pub fn rotate(mut self) -> Wiring {
        let [nw, ne, sw, se] = self.corners.expect("cannot rotate a closed diagram");
        self.corners = Some([ne, se, nw, sw]);
        self
    }

    fn rotate_back(self) -> Wiring {
        self.rotate().rotate().rotate()
    }

    pub fn close(mut self, numerator: bool) -> Wiring {
        let [nw, ne, sw, se] = self.corners.take().expect("already closed");
        if numerator {
            self.glue(nw, ne);
            self.glue(sw, se);
        } else {
            self.glue(nw, sw);
            self.glue(ne, se);
        }
        self
    }

    /// Cuts the edge at slot 0 of the first crossing of the closed diagram
    /// `knot` and splices the resulting arc into the strand at SW.
    pub fn splice_knot_at_sw(self, knot: Wiring) -> Wiring {
        assert!(knot.corners.is_none() && knot.crossings > 0, "knot must be a closed diagram with crossings");
        let sw = self.corner(Corner::SW);
        let base_crossings = self.crossings;
        let (mut w, _) = self.juxtapose(knot);
        let p = Port::Slot(base_crossings, 0);
        let q = w.partner(p);
        w.partner.remove(&p);
        w.partner.remove(&q);
        let ps = w.partner(sw);
        w.partner.remove(&sw);
        w.partner.remove(&ps);
        w.link(ps, p);
        w.link(q, sw);
        w
    }

    pub fn into_diagram(self) -> ShadowDiagram {
        let mut labels: BTreeMap<Port, u32> = BTreeMap::new();
        let mut next = 0u32;
        let mut label_of = |p: Port, partner: &BTreeMap<Port, Port>| -> u32 {
            if let Some(&l) = labels.get(&p) {
                return l;
            }
            let l = next;
            next += 1;
            labels.insert(p, l);
            labels.insert(partner[&p], l);
            l
        };
        let mut crossings = Vec::with_capacity(self.crossings);
        for c in 0..self.crossings {
            let mut slots = [0u32; 4];
            for (s, slot) in slots.iter_mut().enumerate() {
                *slot = label_of(Port::Slot(c, s as u8), &self.partner);
            }
            crossings.push(slots);
        }
        let endpoints = self
            .corners
            .map(|cs| cs.map(|p| label_of(p, &self.partner)));
        ShadowDiagram {
            crossings,
            endpoints,
            free_loops: self.free_loops,
        }
    }
}
