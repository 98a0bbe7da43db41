//! Linear algebra over `Z_m` for arbitrary (also composite) `m`.
//!
//! Every elimination step is an integer-unimodular 2x2 transform, so it stays
//! invertible after reduction mod `m`.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::gcd;

/// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

#[inline]
fn reduce(x: i128, m: u64) -> u64 {
    x.rem_euclid(m as i128) as u64
}

/// Applies `[x, y] <- [p*x + q*y, r*x + s*y]` entrywise mod `m`.
fn mix(x: &mut u64, y: &mut u64, p: i128, q: i128, r: i128, s: i128, m: u64) {
    let (a, b) = (*x as i128, *y as i128);
    *x = reduce(p * a + q * b, m);
    *y = reduce(r * a + s * b, m);
}

/// Unimodular coefficients that turn `(a, b)` into `(g, 0)`.
fn gcd_transform(a: u64, b: u64) -> (i128, i128, i128, i128) {
    let (a, b) = (a as i128, b as i128);
    if a != 0 && b % a == 0 {
        return (1, 0, -(b / a), 1);
    }
    let (g, s, t) = ext_gcd(a, b);
    (s, t, -(b / g), a / g)
}

/// A unit `u` of `Z_m` with `u * a ≡ gcd(a, m) (mod m)`.
fn normalizing_unit(a: u64, m: u64) -> u64 {
    let g = gcd(a, m);
    let m_g = m / g;
    let a_g = (a / g) % m_g.max(1);
    let base = if m_g == 1 {
        1
    } else {
        let (_, s, _) = ext_gcd(a_g as i128, m_g as i128);
        reduce(s, m_g)
    };
    let mut u = base;
    while gcd(u, m) != 1 {
        u += m_g;
    }
    u % m
}

/// A generating set of a submodule of `Z_m^k`, kept with at most one row per
/// leading column so memory stays at `k²` however many rows are inserted.
/// Rows are only combined by unimodular transforms, so the spanned module
/// is exactly the one spanned by everything inserted.
pub(crate) struct RowReducer {
    m: u64,
    pivots: Vec<Option<Vec<u64>>>,
}

impl RowReducer {
    pub(crate) fn new(ncols: usize, m: u64) -> Self {
        RowReducer {
            m,
            pivots: vec![None; ncols],
        }
    }

    pub(crate) fn insert(&mut self, mut v: Vec<u64>) {
        let m = self.m;
        for x in v.iter_mut() {
            *x %= m;
        }
        let mut col = 0;
        loop {
            let Some(lead) = (col..v.len()).find(|&j| v[j] != 0) else {
                return;
            };
            col = lead;
            let Some(row) = self.pivots[col].as_mut() else {
                let u = normalizing_unit(v[col], m);
                if u != 1 {
                    for x in v[col..].iter_mut() {
                        *x = mul_mod(*x, u, m);
                    }
                }
                self.pivots[col] = Some(v);
                return;
            };
            if v[col].is_multiple_of(row[col]) {
                let k = m - v[col] / row[col];
                for (x, &y) in v[col..].iter_mut().zip(&row[col..]) {
                    *x = ((*x as u128 + k as u128 * y as u128) % m as u128) as u64;
                }
            } else {
                let (p, q, r, s) = gcd_transform(row[col], v[col]);
                for (x, y) in row[col..].iter_mut().zip(v[col..].iter_mut()) {
                    mix(x, y, p, q, r, s, m);
                }
            }
            col += 1;
        }
    }

    pub(crate) fn into_rows(self) -> Vec<Vec<u64>> {
        self.pivots.into_iter().flatten().collect()
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

/// Independent generators of `{x : A x ≡ 0 (mod m)}` with their additive
/// orders; the solution module is the direct sum of the cyclic groups they
/// generate.
pub(crate) fn kernel(rows: &[Vec<u64>], ncols: usize, m: u64) -> Vec<(Vec<u64>, u64)> {
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v % m).collect::<Vec<_>>())
        .filter(|r| r.iter().any(|&v| v != 0))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let nrows = a.len();
    // q[j] is column j of the accumulated column transform
    let mut q: Vec<Vec<u64>> = (0..ncols)
        .map(|j| {
            let mut c = vec![0; ncols];
            c[j] = 1 % m;
            c
        })
        .collect();

    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        let Some((pi, pj)) = best_pivot(&a, t, ncols, m) else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        q.swap(t, pj);

        loop {
            for i in t + 1..nrows {
                if a[i][t] == 0 {
                    continue;
                }
                let (p, qq, r, s) = gcd_transform(a[t][t], a[i][t]);
                let (top, rest) = a.split_at_mut(i);
                for (x, y) in top[t].iter_mut().zip(rest[0].iter_mut()) {
                    mix(x, y, p, qq, r, s, m);
                }
            }
            for j in t + 1..ncols {
                if a[t][j] == 0 {
                    continue;
                }
                let (p, qq, r, s) = gcd_transform(a[t][t], a[t][j]);
                for row in a.iter_mut() {
                    let (left, right) = row.split_at_mut(j);
                    mix(&mut left[t], &mut right[0], p, qq, r, s, m);
                }
                let (left, right) = q.split_at_mut(j);
                for (x, y) in left[t].iter_mut().zip(right[0].iter_mut()) {
                    mix(x, y, p, qq, r, s, m);
                }
            }
            if (t + 1..nrows).all(|i| a[i][t] == 0) {
                break;
            }
        }
        diag.push(a[t][t]);
        t += 1;
    }

    let mut gens = Vec::new();
    for (j, column) in q.into_iter().enumerate() {
        let order = match diag.get(j) {
            Some(&d) => gcd(d, m),
            None => m,
        };
        if order <= 1 {
            continue;
        }
        let scale = m / order;
        gens.push((column.iter().map(|&v| v * scale % m).collect(), order));
    }
    gens
}

fn best_pivot(a: &[Vec<u64>], t: usize, ncols: usize, m: u64) -> Option<(usize, usize)> {
    let mut best: Option<(u64, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &v) in row.iter().enumerate().take(ncols).skip(t) {
            if v == 0 {
                continue;
            }
            let g = gcd(v, m);
            if best.is_none_or(|(bg, _, _)| g < bg) {
                best = Some((g, i, j));
                if g == 1 {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

/// Echelon (Hermite-style) form over `Z_m` of the module spanned by `rows`.
///
/// Leading entries are normalized to divisors of `m` and entries above them
/// are reduced below the pivot; for prime `m` this is the reduced row echelon
/// form, hence canonical. Zero rows are dropped.
pub(crate) fn echelon(mut rows: Vec<Vec<u64>>, m: u64) -> Vec<Vec<u64>> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            if rows[i][col] == 0 {
                continue;
            }
            let (p, q, s, t) = gcd_transform(rows[r][col], rows[i][col]);
            let (top, rest) = rows.split_at_mut(i);
            for (x, y) in top[r].iter_mut().zip(rest[0].iter_mut()) {
                mix(x, y, p, q, s, t, m);
            }
        }
        let u = normalizing_unit(rows[r][col], m);
        for x in rows[r].iter_mut() {
            *x = *x * u % m;
        }
        let lead = rows[r][col];
        let pivot_row = rows[r].clone();
        for row in rows.iter_mut().take(r) {
            let k = row[col] / lead;
            if k == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = reduce(*x as i128 - (k as i128) * (y as i128), m);
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows.retain(|row| row.iter().any(|&v| v != 0));
    rows
}
