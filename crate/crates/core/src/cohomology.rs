//! Rack cochains with `Z_m` coefficients and the coboundaries δ¹ and δ².
//!
//! With `x ▷ y` the rack operation,
//!
//! ```text
//! (δ¹f)(x, y)    = f(x ▷ y) - f(x)
//! (δ²φ)(x, y, z) = φ(x, y) - φ(x, z) + φ(x ▷ y, z) - φ(x ▷ z, y ▷ z)
//! ```
//!
//! A 2-cochain `φ` is *N-reduced* when `Σ_{k=1}^{N} φ(a^{▷k}, a^{▷k}) = 0`
//! for every `a`, where `N` is the rack rank. N-reduced 2-cocycles are the
//! admissible Boltzmann weights for the cocycle invariant.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Add;

use thiserror::Error;

use crate::modular;
use crate::rack::{Element, RackTable};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CochainError {
    #[error("modulus must be at least 2, got {0}")]
    Modulus(u64),
    #[error("expected a {expected}x{expected} table, found a row of length {found}")]
    Shape { expected: usize, found: usize },
}

fn check_modulus(m: u32) -> Result<(), CochainError> {
    if m < 2 {
        Err(CochainError::Modulus(m as u64))
    } else {
        Ok(())
    }
}

/// `f : T → Z_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain1 {
    modulus: u32,
    values: Vec<u32>,
}

impl Cochain1 {
    pub fn new(modulus: u32, values: &[u64]) -> Result<Self, CochainError> {
        check_modulus(modulus)?;
        let values = values
            .iter()
            .map(|&v| (v % modulus as u64) as u32)
            .collect();
        Ok(Cochain1 { modulus, values })
    }

    pub fn zero(n: usize, modulus: u32) -> Result<Self, CochainError> {
        check_modulus(modulus)?;
        Ok(Cochain1 {
            modulus,
            values: vec![0; n],
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, x: Element) -> u32 {
        self.values[x.index()]
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

/// `φ : T × T → Z_m`, stored row-major with `values[i][j] = φ(x_i, x_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cochain2 {
    n: usize,
    modulus: u32,
    values: Vec<u32>,
}

impl Cochain2 {
    pub fn zero(n: usize, modulus: u32) -> Result<Self, CochainError> {
        check_modulus(modulus)?;
        Ok(Cochain2 {
            n,
            modulus,
            values: vec![0; n * n],
        })
    }

    /// The characteristic cochain `χ_(i,j)`.
    pub fn chi(n: usize, modulus: u32, i: Element, j: Element) -> Result<Self, CochainError> {
        let mut c = Self::zero(n, modulus)?;
        c.values[i.index() * n + j.index()] = 1;
        Ok(c)
    }

    /// Builds a cochain from rows of (not necessarily reduced) residues.
    pub fn from_rows<R: AsRef<[u64]>>(modulus: u32, rows: &[R]) -> Result<Self, CochainError> {
        check_modulus(modulus)?;
        let n = rows.len();
        let mut values = Vec::with_capacity(n * n);
        for row in rows {
            let row = row.as_ref();
            if row.len() != n {
                return Err(CochainError::Shape {
                    expected: n,
                    found: row.len(),
                });
            }
            values.extend(row.iter().map(|&v| (v % modulus as u64) as u32));
        }
        Ok(Cochain2 { n, modulus, values })
    }

    pub(crate) fn from_flat(n: usize, modulus: u32, flat: &[u64]) -> Self {
        Cochain2 {
            n,
            modulus,
            values: flat.iter().map(|&v| (v % modulus as u64) as u32).collect(),
        }
    }

    /// Number of rack elements the cochain is defined on.
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, x: Element, y: Element) -> u32 {
        self.at(x.index(), y.index())
    }

    #[inline]
    pub(crate) fn at(&self, i: usize, j: usize) -> u32 {
        self.values[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.values
            .chunks(self.n.max(1))
            .map(<[u32]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn scale(&self, k: u64) -> Self {
        let m = self.modulus as u64;
        Cochain2 {
            n: self.n,
            modulus: self.modulus,
            values: self
                .values
                .iter()
                .map(|&v| (v as u64 * (k % m) % m) as u32)
                .collect(),
        }
    }
}

impl Add for &Cochain2 {
    type Output = Cochain2;

    /// # Panics
    /// If the shapes or moduli differ.
    fn add(self, rhs: &Cochain2) -> Cochain2 {
        assert_eq!(self.n, rhs.n, "cochains on different racks");
        assert_eq!(self.modulus, rhs.modulus, "cochains with different moduli");
        let m = self.modulus as u64;
        Cochain2 {
            n: self.n,
            modulus: self.modulus,
            values: self
                .values
                .iter()
                .zip(&rhs.values)
                .map(|(&a, &b)| ((a as u64 + b as u64) % m) as u32)
                .collect(),
        }
    }
}

impl fmt::Display for Cochain2 {
    /// Rows of residues, space separated, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.values.chunks(self.n.max(1)).enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// `ψ : T × T × T → Z_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain3 {
    n: usize,
    modulus: u32,
    values: Vec<u32>,
}

impl Cochain3 {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, x: Element, y: Element, z: Element) -> u32 {
        let n = self.n;
        self.values[(x.index() * n + y.index()) * n + z.index()]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// First `(x, y, z)` in lexicographic order with a nonzero value.
    pub fn first_nonzero(&self) -> Option<(Element, Element, Element)> {
        let n = self.n;
        let k = self.values.iter().position(|&v| v != 0)?;
        Some((
            Element::from_index(k / (n * n)),
            Element::from_index(k / n % n),
            Element::from_index(k % n),
        ))
    }
}

#[inline]
fn sub_mod(a: u32, b: u32, m: u32) -> u32 {
    ((a as u64 + m as u64 - b as u64) % m as u64) as u32
}

/// `(δ¹f)(x, y) = f(x ▷ y) - f(x)`.
pub fn delta1(rack: &RackTable, f: &Cochain1) -> Cochain2 {
    let n = rack.order();
    let m = f.modulus;
    let mut values = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            values.push(sub_mod(f.values[rack.op_index(x, y)], f.values[x], m));
        }
    }
    Cochain2 {
        n,
        modulus: m,
        values,
    }
}

/// `(δ²φ)(x, y, z) = φ(x, y) - φ(x, z) + φ(x ▷ y, z) - φ(x ▷ z, y ▷ z)`.
pub fn delta2(rack: &RackTable, phi: &Cochain2) -> Cochain3 {
    let n = rack.order();
    let m = phi.modulus as u64;
    let mut values = Vec::with_capacity(n * n * n);
    for x in 0..n {
        for y in 0..n {
            let xy = rack.op_index(x, y);
            for z in 0..n {
                let pos = phi.at(x, y) as u64 + phi.at(xy, z) as u64;
                let neg =
                    phi.at(x, z) as u64 + phi.at(rack.op_index(x, z), rack.op_index(y, z)) as u64;
                values.push(((pos + 2 * m - neg) % m) as u32);
            }
        }
    }
    Cochain3 {
        n,
        modulus: phi.modulus,
        values,
    }
}

pub fn is_cocycle(rack: &RackTable, phi: &Cochain2) -> bool {
    cocycle_violation(rack, phi).is_none()
}

/// A triple where `δ²φ` does not vanish, if any.
pub fn cocycle_violation(rack: &RackTable, phi: &Cochain2) -> Option<(Element, Element, Element)> {
    delta2(rack, phi).first_nonzero()
}

pub fn is_n_reduced(rack: &RackTable, phi: &Cochain2) -> bool {
    reduced_violation(rack, phi).is_none()
}

/// The first element `a` whose N-reduced sum is nonzero, if any.
pub fn reduced_violation(rack: &RackTable, phi: &Cochain2) -> Option<Element> {
    let m = phi.modulus as u64;
    (0..rack.order())
        .find(|&a| {
            let (orbit, times) = diagonal_orbit(rack, a);
            let sum: u64 = orbit.iter().map(|&b| phi.at(b, b) as u64).sum::<u64>() % m;
            !(sum * (times % m)).is_multiple_of(m)
        })
        .map(Element::from_index)
}

/// The orbit `a^{▷1}, .., a^{▷ρ(a)}` and how often the `N`-term sum runs
/// around it, `N / ρ(a)`.
fn diagonal_orbit(rack: &RackTable, a: usize) -> (Vec<usize>, u64) {
    let mut orbit = Vec::new();
    let mut b = a;
    loop {
        b = rack.op_index(b, b);
        orbit.push(b);
        if b == a {
            break;
        }
    }
    let times = rack.rank() / orbit.len() as u64;
    (orbit, times)
}

/// Default cap on materialized solutions.
pub const MATERIALIZE_CAP: usize = 1_000_000;

/// The module of N-reduced 2-cocycles of a rack over `Z_m`.
#[derive(Clone, Debug)]
pub struct CocycleSpace {
    n: usize,
    modulus: u32,
    // independent generators with their additive orders
    basis: Vec<(Cochain2, u64)>,
    generators: Vec<Cochain2>,
}

impl CocycleSpace {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// A generating set in echelon form (reduced row echelon form when the
    /// modulus is prime). Empty when only the zero cochain solves.
    pub fn generators(&self) -> &[Cochain2] {
        &self.generators
    }

    /// Orders of the cyclic summands; the module is `⊕ Z_order`.
    pub fn invariant_orders(&self) -> Vec<u64> {
        let mut orders: Vec<u64> = self.basis.iter().map(|(_, o)| *o).collect();
        orders.sort_unstable();
        orders
    }

    /// Number of solutions, or `None` if it does not fit in a `u128`.
    pub fn cardinality(&self) -> Option<u128> {
        self.basis
            .iter()
            .try_fold(1u128, |acc, (_, o)| acc.checked_mul(*o as u128))
    }

    pub fn contains(&self, rack: &RackTable, phi: &Cochain2) -> bool {
        phi.n == self.n
            && phi.modulus == self.modulus
            && is_cocycle(rack, phi)
            && is_n_reduced(rack, phi)
    }

    /// Lists distinct solutions, at most `limit` of them (the zero cochain
    /// first), in increasing order of their coefficient vectors.
    pub fn materialize(&self, limit: usize) -> Vec<Cochain2> {
        let zero = Cochain2 {
            n: self.n,
            modulus: self.modulus,
            values: vec![0; self.n * self.n],
        };
        let mut out = Vec::new();
        if limit == 0 {
            return out;
        }
        let mut coeffs = vec![0u64; self.basis.len()];
        loop {
            let mut acc = zero.clone();
            for ((g, _), &c) in self.basis.iter().zip(&coeffs) {
                if c != 0 {
                    acc = &acc + &g.scale(c);
                }
            }
            out.push(acc);
            if out.len() >= limit {
                break;
            }
            // mixed-radix increment
            let mut k = 0;
            loop {
                if k == coeffs.len() {
                    return out;
                }
                coeffs[k] += 1;
                if coeffs[k] < self.basis[k].1 {
                    break;
                }
                coeffs[k] = 0;
                k += 1;
            }
        }
        out
    }
}

impl fmt::Display for CocycleSpace {
    /// The group structure, e.g. `Z13^4` or `Z2 + Z4^2`; `0` for the trivial
    /// module.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let orders = self.invariant_orders();
        if orders.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut i = 0;
        while i < orders.len() {
            let o = orders[i];
            let run = orders[i..].iter().take_while(|&&x| x == o).count();
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "Z{o}")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            first = false;
            i += run;
        }
        Ok(())
    }
}

/// Solves for all N-reduced 2-cocycles of `rack` over `Z_m`.
///
/// The `n²` values of `φ` are the unknowns; the `n³` equations `δ²φ = 0`
/// and the `n` N-reduced equations are diagonalized over `Z_m`.
pub fn enumerate_reduced_cocycles(
    rack: &RackTable,
    modulus: u32,
) -> Result<CocycleSpace, CochainError> {
    check_modulus(modulus)?;
    let n = rack.order();
    let m = modulus as u64;
    let unknowns = n * n;
    let var = |i: usize, j: usize| i * n + j;
    let mut equations = modular::RowReducer::new(unknowns, m);
    for x in 0..n {
        for y in 0..n {
            let xy = rack.op_index(x, y);
            for z in 0..n {
                let mut row = vec![0u64; unknowns];
                let mut bump = |k: usize, up: bool| {
                    row[k] = if up {
                        (row[k] + 1) % m
                    } else {
                        (row[k] + m - 1) % m
                    };
                };
                bump(var(x, y), true);
                bump(var(x, z), false);
                bump(var(xy, z), true);
                bump(var(rack.op_index(x, z), rack.op_index(y, z)), false);
                equations.insert(row);
            }
        }
    }
    for a in 0..n {
        let mut row = vec![0u64; unknowns];
        let (orbit, times) = diagonal_orbit(rack, a);
        for b in orbit {
            row[var(b, b)] = (row[var(b, b)] + times % m) % m;
        }
        equations.insert(row);
    }
    let rows = equations.into_rows();

    let basis: Vec<(Cochain2, u64)> = modular::kernel(&rows, unknowns, m)
        .into_iter()
        .map(|(v, order)| (Cochain2::from_flat(n, modulus, &v), order))
        .collect();
    let flat: Vec<Vec<u64>> = basis
        .iter()
        .map(|(c, _)| c.values.iter().map(|&v| v as u64).collect())
        .collect();
    let generators = modular::echelon(flat, m)
        .iter()
        .map(|v| Cochain2::from_flat(n, modulus, v))
        .collect();
    Ok(CocycleSpace {
        n,
        modulus,
        basis,
        generators,
    })
}
