//! Finite racks stored as operation tables.
//!
//! A rack matrix has entry `k` in row `i`, column `j` when `x_i ▷ x_j = x_k`.
//! Rows, columns and entries are 1-based. Internally the table is kept
//! 0-based together with the table of the dual operation `▷⁻¹`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::perm::{gcd, Permutation};

/// Largest supported rack cardinality; elements fit in one byte.
pub const MAX_ORDER: usize = 255;

/// A rack element, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u8);

impl Element {
    /// # Panics
    /// If `value` is not in `1..=255`.
    pub fn new(value: usize) -> Self {
        Self::try_new(value).expect("rack elements are 1-based and at most 255")
    }

    pub fn try_new(value: usize) -> Option<Self> {
        if (1..=MAX_ORDER).contains(&value) {
            Some(Element(value as u8))
        } else {
            None
        }
    }

    pub(crate) fn from_index(index: usize) -> Self {
        debug_assert!(index < MAX_ORDER);
        Element(index as u8 + 1)
    }

    /// The 1-based value.
    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// The 0-based position in the table.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A failed rack axiom, with its witness (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// Axiom (i): column `column` is not a permutation; `value` occurs in
    /// rows `rows.0` and `rows.1`.
    ColumnNotBijective {
        column: usize,
        value: usize,
        rows: (usize, usize),
    },
    /// Axiom (ii): `(i ▷ j) ▷ k != (i ▷ k) ▷ (j ▷ k)`.
    SelfDistributivity { i: usize, j: usize, k: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomViolation::ColumnNotBijective { column, value, rows } => write!(
                f,
                "axiom (i): column {column} is not a permutation ({value} appears in rows {} and {})",
                rows.0, rows.1
            ),
            AxiomViolation::SelfDistributivity { i, j, k } => write!(
                f,
                "axiom (ii): ({i}▷{j})▷{k} != ({i}▷{k})▷({j}▷{k})"
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RackError {
    #[error("empty operation table")]
    Empty,
    #[error("rack of order {0} exceeds the supported maximum of 255")]
    TooLarge(usize),
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry {value} at row {row}, column {col} is outside 1..={n}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },
    #[error("{} rack axiom violation(s), first: {}", .0.len(), .0[0])]
    Axioms(Vec<AxiomViolation>),
    #[error("invalid (t,s)-rack parameters for Z_{modulus}: {reason}")]
    TsParameters {
        modulus: usize,
        reason: &'static str,
    },
}

/// A validated finite rack.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RackTable {
    n: usize,
    table: Vec<u8>,
    dual: Vec<u8>,
}

impl fmt::Debug for RackTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RackTable")
            .field("n", &self.n)
            .field("rows", &self.rows())
            .finish()
    }
}

impl RackTable {
    /// Validates a 1-based rack matrix given row by row.
    ///
    /// Structural problems (not square, out of range) are reported first;
    /// otherwise every axiom violation is collected with its witness.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self, RackError> {
        let n = rows.len();
        if n == 0 {
            return Err(RackError::Empty);
        }
        if n > MAX_ORDER {
            return Err(RackError::TooLarge(n));
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(RackError::NotSquare {
                    row: i + 1,
                    len: row.len(),
                    expected: n,
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if v == 0 || v > n {
                    return Err(RackError::EntryOutOfRange {
                        row: i + 1,
                        col: j + 1,
                        value: v,
                        n,
                    });
                }
                table.push((v - 1) as u8);
            }
        }
        let violations = axiom_violations(n, &table);
        if !violations.is_empty() {
            return Err(RackError::Axioms(violations));
        }
        let mut dual = vec![0u8; n * n];
        for j in 0..n {
            for i in 0..n {
                let k = table[i * n + j] as usize;
                dual[k * n + j] = i as u8;
            }
        }
        Ok(RackTable { n, table, dual })
    }

    /// The trivial quandle `T_n`: `x ▷ y = x`.
    pub fn trivial(n: usize) -> Result<Self, RackError> {
        let rows: Vec<Vec<usize>> = (1..=n).map(|i| vec![i; n]).collect();
        Self::from_rows(&rows)
    }

    /// The constant-action rack `T_σ`: `x_i ▷ x_j = x_σ(i)`.
    pub fn constant_action(sigma: &Permutation) -> Result<Self, RackError> {
        let n = sigma.len();
        let rows: Vec<Vec<usize>> = (0..n).map(|i| vec![sigma.apply(i) + 1; n]).collect();
        Self::from_rows(&rows)
    }

    /// The `(t,s)`-rack on `Z_modulus` with `x ▷ y = t x + s y`.
    ///
    /// Index `i` stands for the residue `i`, and index `modulus` for the
    /// residue `0`.
    pub fn ts_rack(modulus: usize, t: i64, s: i64) -> Result<Self, RackError> {
        if modulus == 0 {
            return Err(RackError::Empty);
        }
        if modulus > MAX_ORDER {
            return Err(RackError::TooLarge(modulus));
        }
        let m = modulus as i64;
        let t = t.rem_euclid(m);
        let s = s.rem_euclid(m);
        if gcd(modulus as u64, t as u64) != 1 {
            return Err(RackError::TsParameters {
                modulus,
                reason: "t must be a unit (gcd(modulus, t) = 1)",
            });
        }
        if (s * s - (1 - t) * s).rem_euclid(m) != 0 {
            return Err(RackError::TsParameters {
                modulus,
                reason: "s^2 must equal (1 - t) s",
            });
        }
        let to_index = |r: i64| {
            let r = r.rem_euclid(m);
            if r == 0 {
                modulus
            } else {
                r as usize
            }
        };
        let rows: Vec<Vec<usize>> = (1..=m)
            .map(|x| (1..=m).map(|y| to_index(t * x + s * y)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// Cardinality `|T|`.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.n).map(Element::from_index)
    }

    /// `x ▷ y`.
    pub fn op(&self, x: Element, y: Element) -> Element {
        Element::from_index(self.op_index(x.index(), y.index()))
    }

    /// `x ▷⁻¹ y`, the unique `z` with `z ▷ y = x`.
    pub fn inv_op(&self, x: Element, y: Element) -> Element {
        Element::from_index(self.inv_op_index(x.index(), y.index()))
    }

    #[inline]
    pub(crate) fn op_index(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    #[inline]
    pub(crate) fn inv_op_index(&self, x: usize, y: usize) -> usize {
        self.dual[x * self.n + y] as usize
    }

    /// The matrix as 1-based rows.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.n)
            .map(|r| r.iter().map(|&v| v as usize + 1).collect())
            .collect()
    }

    /// The dual rack `(T, ▷⁻¹)`.
    pub fn dual(&self) -> RackTable {
        RackTable {
            n: self.n,
            table: self.dual.clone(),
            dual: self.table.clone(),
        }
    }

    /// The diagonal `x ↦ x ▷ x`, always a permutation for a rack.
    pub fn diagonal(&self) -> Permutation {
        let images = (0..self.n).map(|i| self.op_index(i, i)).collect();
        Permutation::from_images(images).expect("rack diagonal is a permutation")
    }

    /// `x^{▷k}`, with `x^{▷1} = x ▷ x` and `x^{▷(k+1)} = x^{▷k} ▷ x^{▷k}`.
    pub fn triangle_power(&self, x: Element, k: u64) -> Element {
        Element::from_index(self.triangle_power_index(x.index(), k))
    }

    pub(crate) fn triangle_power_index(&self, x: usize, k: u64) -> usize {
        let diag = self.diagonal();
        let k = k % diag.orbit_len(x) as u64;
        let mut y = x;
        for _ in 0..k {
            y = self.op_index(y, y);
        }
        y
    }

    /// Rack rank `N(T)`: the order of the diagonal permutation.
    pub fn rank(&self) -> u64 {
        self.diagonal().order()
    }

    pub fn is_quandle(&self) -> bool {
        (0..self.n).all(|i| self.op_index(i, i) == i)
    }

    /// Operator-equivalence classes (identical columns), each sorted, ordered
    /// by least member.
    pub fn operator_classes(&self) -> Vec<Vec<Element>> {
        let (class_of, count) = self.operator_class_map();
        let mut classes = vec![Vec::new(); count];
        for (i, &c) in class_of.iter().enumerate() {
            classes[c].push(Element::from_index(i));
        }
        classes
    }

    fn operator_class_map(&self) -> (Vec<usize>, usize) {
        let n = self.n;
        let column = |j: usize| (0..n).map(move |i| self.table[i * n + j]);
        let mut reps: Vec<usize> = Vec::new();
        let class_of = (0..n)
            .map(|j| {
                reps.iter()
                    .position(|&r| column(r).eq(column(j)))
                    .unwrap_or_else(|| {
                        reps.push(j);
                        reps.len() - 1
                    })
            })
            .collect();
        (class_of, reps.len())
    }

    /// The quandle of operator-equivalence classes, `[x] ▷ [y] = [x ▷ y]`,
    /// together with the class of each element (0-based class ids, in the
    /// order of [`RackTable::operator_classes`]).
    pub fn operator_quotient(&self) -> (RackTable, Vec<usize>) {
        let (class_of, count) = self.operator_class_map();
        let mut rep = vec![0; count];
        for i in (0..self.n).rev() {
            rep[class_of[i]] = i;
        }
        let rows: Vec<Vec<usize>> = (0..count)
            .map(|a| {
                (0..count)
                    .map(|b| class_of[self.op_index(rep[a], rep[b])] + 1)
                    .collect()
            })
            .collect();
        let quotient = RackTable::from_rows(&rows).expect("operator quotient is a rack");
        (quotient, class_of)
    }

    /// Structural summary: rank, exponents, diagonal and operator classes.
    pub fn profile(&self) -> RackProfile {
        let diagonal = self.diagonal();
        let exponents: Vec<u64> = (0..self.n).map(|i| diagonal.orbit_len(i) as u64).collect();
        RackProfile {
            rank: diagonal.order(),
            is_quandle: diagonal.is_identity(),
            exponents,
            diagonal,
            operator_classes: self.operator_classes(),
        }
    }
}

fn axiom_violations(n: usize, table: &[u8]) -> Vec<AxiomViolation> {
    let at = |i: usize, j: usize| table[i * n + j] as usize;
    let mut out = Vec::new();
    for j in 0..n {
        let mut first_row = vec![usize::MAX; n];
        for i in 0..n {
            let v = at(i, j);
            if first_row[v] != usize::MAX {
                out.push(AxiomViolation::ColumnNotBijective {
                    column: j + 1,
                    value: v + 1,
                    rows: (first_row[v] + 1, i + 1),
                });
                break;
            }
            first_row[v] = i;
        }
    }
    for i in 0..n {
        for j in 0..n {
            let ij = at(i, j);
            for k in 0..n {
                if at(ij, k) != at(at(i, k), at(j, k)) {
                    out.push(AxiomViolation::SelfDistributivity {
                        i: i + 1,
                        j: j + 1,
                        k: k + 1,
                    });
                }
            }
        }
    }
    out
}

/// Derived structure of a rack.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RackProfile {
    /// `N(T)`, the lcm of all rack exponents.
    pub rank: u64,
    /// `ρ(x)` for each element, indexed 0-based.
    pub exponents: Vec<u64>,
    pub is_quandle: bool,
    pub diagonal: Permutation,
    pub operator_classes: Vec<Vec<Element>>,
}

impl RackProfile {
    pub fn exponent(&self, x: Element) -> u64 {
        self.exponents[x.index()]
    }
}
