//! Rack colorings of Gauss diagrams and their Boltzmann weights.
//!
//! A coloring assigns a rack element to every arc so that at each crossing
//! with over color `b`, inbound under color `a` and outbound under color `a'`
//!
//! ```text
//! a' = a ▷ b      (positive crossing)
//! a' = a ▷⁻¹ b    (negative crossing)
//! ```
//!
//! Colorings are enumerated exactly by propagating these relations in both
//! directions and branching on the lowest uncolored arc when propagation
//! stalls.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::cohomology::Cochain2;
use crate::link::{ArcIndexing, CrossingArcs, GaussDiagram, Sign};
use crate::rack::{Element, RackTable};

const UNSET: u8 = u8::MAX;

/// An arc-indexed assignment of rack elements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    colors: Vec<Element>,
}

impl Coloring {
    pub fn new(colors: Vec<Element>) -> Self {
        Coloring { colors }
    }

    pub fn colors(&self) -> &[Element] {
        &self.colors
    }

    /// Color of the 0-based arc `arc`.
    pub fn color(&self, arc: usize) -> Element {
        self.colors[arc]
    }
}

impl fmt::Display for Coloring {
    /// `arc=color` pairs, arcs numbered from 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}={}", i + 1, c)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {found} arcs, diagram has {expected}")]
    ArcCount { expected: usize, found: usize },
    #[error("color {color} is not an element of a rack of order {order}")]
    ColorOutOfRange { color: usize, order: usize },
    #[error("crossing relation fails at crossing {crossing}")]
    Relation { crossing: u32 },
    #[error("cochain is defined on {cochain} elements, rack has {rack}")]
    CochainShape { cochain: usize, rack: usize },
}

#[inline]
fn expected_out(rack: &RackTable, c: &CrossingArcs, a_in: usize, b: usize) -> usize {
    match c.sign {
        Sign::Positive => rack.op_index(a_in, b),
        Sign::Negative => rack.inv_op_index(a_in, b),
    }
}

#[inline]
fn expected_in(rack: &RackTable, c: &CrossingArcs, a_out: usize, b: usize) -> usize {
    match c.sign {
        Sign::Positive => rack.inv_op_index(a_out, b),
        Sign::Negative => rack.op_index(a_out, b),
    }
}

struct Search<'a> {
    rack: &'a RackTable,
    crossings: &'a [CrossingArcs],
    touching: Vec<Vec<usize>>,
    colors: Vec<u8>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(rack: &'a RackTable, arcs: &'a ArcIndexing) -> Self {
        let mut touching = vec![Vec::new(); arcs.arc_count];
        for (k, c) in arcs.crossings.iter().enumerate() {
            for arc in [c.over, c.under_in, c.under_out] {
                if !touching[arc].contains(&k) {
                    touching[arc].push(k);
                }
            }
        }
        Search {
            rack,
            crossings: &arcs.crossings,
            touching,
            colors: vec![UNSET; arcs.arc_count],
            trail: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn set(&mut self, arc: usize, color: usize) {
        self.colors[arc] = color as u8;
        self.trail.push(arc);
        self.queue.extend_from_slice(&self.touching[arc]);
    }

    fn undo(&mut self, mark: usize) {
        for arc in self.trail.drain(mark..) {
            self.colors[arc] = UNSET;
        }
    }

    /// Assigns `color` to `arc` and propagates; false on contradiction.
    fn assign(&mut self, arc: usize, color: usize) -> bool {
        self.queue.clear();
        self.set(arc, color);
        while let Some(k) = self.queue.pop() {
            let c = self.crossings[k];
            let b = self.colors[c.over];
            if b == UNSET {
                continue;
            }
            let (a_in, a_out) = (self.colors[c.under_in], self.colors[c.under_out]);
            if a_in != UNSET {
                let want = expected_out(self.rack, &c, a_in as usize, b as usize);
                if a_out == UNSET {
                    self.set(c.under_out, want);
                } else if a_out as usize != want {
                    return false;
                }
            } else if a_out != UNSET {
                let want = expected_in(self.rack, &c, a_out as usize, b as usize);
                self.set(c.under_in, want);
            }
        }
        true
    }

    fn run(&mut self, visit: &mut dyn FnMut(&[u8])) {
        let Some(arc) = self.colors.iter().position(|&c| c == UNSET) else {
            visit(&self.colors);
            return;
        };
        for color in 0..self.rack.order() {
            let mark = self.trail.len();
            if self.assign(arc, color) {
                self.run(visit);
            }
            self.undo(mark);
        }
    }
}

fn for_each_coloring(arcs: &ArcIndexing, rack: &RackTable, visit: &mut dyn FnMut(&[u8])) {
    Search::new(rack, arcs).run(visit);
}

/// Every coloring of `diagram` by `rack`, sorted lexicographically by
/// (arc id, color).
pub fn enumerate_colorings(diagram: &GaussDiagram, rack: &RackTable) -> Vec<Coloring> {
    let arcs = diagram.arcs();
    let mut out = Vec::new();
    for_each_coloring(&arcs, rack, &mut |colors| {
        out.push(Coloring {
            colors: colors
                .iter()
                .map(|&c| Element::from_index(c as usize))
                .collect(),
        });
    });
    out.sort();
    out
}

/// `|Hom(FR(D), T)|`, without materializing the colorings.
pub fn count_colorings(diagram: &GaussDiagram, rack: &RackTable) -> u64 {
    let arcs = diagram.arcs();
    let mut count = 0u64;
    for_each_coloring(&arcs, rack, &mut |_| count += 1);
    count
}

/// Calls `visit` with the Boltzmann weight of every coloring.
pub(crate) fn for_each_weight(
    diagram: &GaussDiagram,
    rack: &RackTable,
    phi: &Cochain2,
    visit: &mut dyn FnMut(u32),
) {
    let arcs = diagram.arcs();
    for_each_coloring(&arcs, rack, &mut |colors| {
        visit(raw_weight(&arcs.crossings, phi, colors));
    });
}

fn raw_weight(crossings: &[CrossingArcs], phi: &Cochain2, colors: &[u8]) -> u32 {
    let m = phi.modulus() as u64;
    let mut total = 0u64;
    for c in crossings {
        let b = colors[c.over] as usize;
        match c.sign {
            Sign::Positive => total += phi.at(colors[c.under_in] as usize, b) as u64,
            Sign::Negative => total += m - phi.at(colors[c.under_out] as usize, b) as u64,
        }
    }
    (total % m) as u32
}

/// `Σ sign(c) φ(a, b)` over the crossings, where `b` is the over color and
/// `a` the inbound under color at positive crossings, the outbound under
/// color at negative ones.
pub fn boltzmann_weight(
    diagram: &GaussDiagram,
    rack: &RackTable,
    phi: &Cochain2,
    coloring: &Coloring,
) -> Result<u32, ColoringError> {
    if phi.order() != rack.order() {
        return Err(ColoringError::CochainShape {
            cochain: phi.order(),
            rack: rack.order(),
        });
    }
    let arcs = diagram.arcs();
    let colors = check_coloring(&arcs, rack, coloring)?;
    Ok(raw_weight(&arcs.crossings, phi, &colors))
}

/// Checks the crossing relations; returns the 0-based colors.
pub fn check_coloring(
    arcs: &ArcIndexing,
    rack: &RackTable,
    coloring: &Coloring,
) -> Result<Vec<u8>, ColoringError> {
    if coloring.colors.len() != arcs.arc_count {
        return Err(ColoringError::ArcCount {
            expected: arcs.arc_count,
            found: coloring.colors.len(),
        });
    }
    let mut colors = Vec::with_capacity(arcs.arc_count);
    for c in &coloring.colors {
        if c.get() > rack.order() {
            return Err(ColoringError::ColorOutOfRange {
                color: c.get(),
                order: rack.order(),
            });
        }
        colors.push(c.index() as u8);
    }
    for c in &arcs.crossings {
        let want = expected_out(
            rack,
            c,
            colors[c.under_in] as usize,
            colors[c.over] as usize,
        );
        if want != colors[c.under_out] as usize {
            return Err(ColoringError::Relation { crossing: c.id });
        }
    }
    Ok(colors)
}
