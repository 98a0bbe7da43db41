//! Rack counting invariants and the 2-cocycle enhancement.
//!
//! For a rack `T` of rank `N` and a link with `c` components, every framing
//! class `w ∈ W = (Z_N)^c` has one representative diagram `(D, w)`; the
//! invariants aggregate over those:
//!
//! ```text
//! IR(L, T) = Σ_w |Hom(FR(D, w), T)|
//! PR(L, T) = Σ_w |Hom(FR(D, w), T)| q^w
//! Φ_φ(L, T) = Σ_w (Σ_f z^{BW(f)}) q^w
//! ```

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use thiserror::Error;

use crate::cohomology::{cocycle_violation, reduced_violation, Cochain2};
use crate::coloring::{count_colorings, for_each_weight};
use crate::link::GaussDiagram;
use crate::rack::{Element, RackTable};

pub use crate::link::WritheVector;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("cochain is not a 2-cocycle: δ²φ({x},{y},{z}) != 0")]
    NotCocycle { x: Element, y: Element, z: Element },
    #[error("cochain is not N-reduced: the sum along the orbit of {a} is nonzero")]
    NotReduced { a: Element },
    #[error("cochain is defined on {cochain} elements, rack has {rack}")]
    CochainShape { cochain: usize, rack: usize },
}

/// Writes `c·z^e·q^w` the way the invariants are usually printed: unit
/// coefficients and exponents omitted, `q` subscripts 1-based.
fn write_monomial(out: &mut String, coeff: u64, z: u32, w: &WritheVector) {
    let mut mono = String::new();
    if z > 0 {
        mono.push('z');
        if z > 1 {
            let _ = write!(mono, "^{z}");
        }
    }
    for (i, &e) in w.entries().iter().enumerate() {
        if e > 0 {
            let _ = write!(mono, "q{}", i + 1);
            if e > 1 {
                let _ = write!(mono, "^{e}");
            }
        }
    }
    if coeff != 1 || mono.is_empty() {
        let _ = write!(out, "{coeff}");
    }
    out.push_str(&mono);
}

/// `Σ_w a_w q^w` with exponents in `Z_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolynomial {
    rank: u64,
    components: usize,
    terms: BTreeMap<WritheVector, u64>,
}

impl QPolynomial {
    pub fn new(rank: u64, components: usize) -> Self {
        QPolynomial {
            rank,
            components,
            terms: BTreeMap::new(),
        }
    }

    /// Adds `multiplicity` to the coefficient of `q^w`.
    pub fn add_term(&mut self, w: WritheVector, multiplicity: u64) {
        assert_eq!(w.entries().len(), self.components);
        if multiplicity > 0 {
            *self.terms.entry(w).or_insert(0) += multiplicity;
        }
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn coefficient(&self, w: &WritheVector) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Nonzero terms in lexicographic order of `w`.
    pub fn terms(&self) -> impl Iterator<Item = (&WritheVector, u64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// Value at `q_i = 1`.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    /// `(w) 0 multiplicity` lines, matching the [`PhiPolynomial`] block with
    /// every z-exponent zero.
    pub fn machine_block(&self) -> String {
        let mut out = String::new();
        for (w, c) in self.terms() {
            let _ = writeln!(out, "{w} 0 {c}");
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            write_monomial(&mut out, c, 0, w);
        }
        f.write_str(&out)
    }
}

/// `Σ_w (Σ_k a_{w,k} z^k) q^w`, z-exponents in `Z_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiPolynomial {
    rank: u64,
    components: usize,
    modulus: u32,
    terms: BTreeMap<(WritheVector, u32), u64>,
}

impl PhiPolynomial {
    pub fn new(rank: u64, components: usize, modulus: u32) -> Self {
        PhiPolynomial {
            rank,
            components,
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, w: WritheVector, z: u32, multiplicity: u64) {
        assert_eq!(w.entries().len(), self.components);
        if multiplicity > 0 {
            *self.terms.entry((w, z % self.modulus)).or_insert(0) += multiplicity;
        }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coefficient(&self, w: &WritheVector, z: u32) -> u64 {
        self.terms.get(&(w.clone(), z)).copied().unwrap_or(0)
    }

    /// Nonzero terms ordered by writhe vector, then z-exponent.
    pub fn terms(&self) -> impl Iterator<Item = (&WritheVector, u32, u64)> {
        self.terms.iter().map(|((w, z), &c)| (w, *z, c))
    }

    /// Setting `z = 1`.
    pub fn specialize_z(&self) -> QPolynomial {
        let mut q = QPolynomial::new(self.rank, self.components);
        for (w, _, c) in self.terms() {
            q.add_term(w.clone(), c);
        }
        q
    }

    /// `(w) z multiplicity`, one term per line.
    pub fn machine_block(&self) -> String {
        let mut out = String::new();
        for (w, z, c) in self.terms() {
            let _ = writeln!(out, "{w} {z} {c}");
        }
        out
    }
}

impl fmt::Display for PhiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (i, (w, z, c)) in self.terms().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            write_monomial(&mut out, c, z, w);
        }
        f.write_str(&out)
    }
}

/// Coloring count of each framing representative, every `w ∈ (Z_N)^c` in
/// lexicographic order (zeros included).
pub fn framing_counts(diagram: &GaussDiagram, rack: &RackTable) -> Vec<(WritheVector, u64)> {
    diagram
        .framing_representatives(rack.rank())
        .into_iter()
        .map(|(w, d)| (w, count_colorings(&d, rack)))
        .collect()
}

/// `IR(L, T)`.
pub fn integer_counting(diagram: &GaussDiagram, rack: &RackTable) -> u64 {
    framing_counts(diagram, rack).iter().map(|(_, c)| c).sum()
}

/// `PR(L, T)`.
pub fn polynomial_counting(diagram: &GaussDiagram, rack: &RackTable) -> QPolynomial {
    let mut p = QPolynomial::new(rack.rank(), diagram.component_count());
    for (w, c) in framing_counts(diagram, rack) {
        p.add_term(w, c);
    }
    p
}

/// Checks that `phi` is an N-reduced 2-cocycle of `rack`.
pub fn check_admissible(rack: &RackTable, phi: &Cochain2) -> Result<(), InvariantError> {
    if phi.order() != rack.order() {
        return Err(InvariantError::CochainShape {
            cochain: phi.order(),
            rack: rack.order(),
        });
    }
    if let Some((x, y, z)) = cocycle_violation(rack, phi) {
        return Err(InvariantError::NotCocycle { x, y, z });
    }
    if let Some(a) = reduced_violation(rack, phi) {
        return Err(InvariantError::NotReduced { a });
    }
    Ok(())
}

/// `Φ_φ(L, T)`; refuses cochains that are not N-reduced 2-cocycles.
pub fn cocycle_invariant(
    diagram: &GaussDiagram,
    rack: &RackTable,
    phi: &Cochain2,
) -> Result<PhiPolynomial, InvariantError> {
    check_admissible(rack, phi)?;
    let rank = rack.rank();
    let mut p = PhiPolynomial::new(rank, diagram.component_count(), phi.modulus());
    for (w, d) in diagram.framing_representatives(rank) {
        let mut weights: BTreeMap<u32, u64> = BTreeMap::new();
        for_each_weight(&d, rack, phi, &mut |bw| {
            *weights.entry(bw).or_insert(0) += 1
        });
        for (z, c) in weights {
            p.add_term(w.clone(), z, c);
        }
    }
    Ok(p)
}

/// `N² q1^l q2^l` with `l = -lk mod N`: the polynomial counting invariant of
/// a two-component classical link under the constant-action rack of an
/// `N`-cycle.
pub fn constant_action_closed_form(rank: u64, linking_number: i64) -> QPolynomial {
    let l = (-(linking_number as i128)).rem_euclid(rank as i128) as i64;
    let mut p = QPolynomial::new(rank, 2);
    p.add_term(WritheVector::new(rank, &[l, l]), rank * rank);
    p
}

/// True when some term has different `q1` and `q2` exponents.
///
/// For `p = PR(L, T_σ)` with `σ` an `N`-cycle and `L` a two-component link,
/// this proves `L` is non-classical. The hypotheses are not checked here.
pub fn classicality_obstruction(p: &QPolynomial) -> bool {
    p.terms().any(|(w, _)| {
        let e = w.entries();
        e.len() >= 2 && e[0] != e[1]
    })
}
