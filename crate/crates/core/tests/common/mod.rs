#![allow(dead_code)]

use proptest::prelude::*;
use rackinv_core::link::Sign;
use rackinv_core::{GaussDiagram, Permutation, RackTable, Visit};

pub const UNKNOT: &str = "0";
pub const KINKED_UNKNOT: &str = "O1+,U1+";
pub const TREFOIL: &str = "O1+,U2+,O3+,U1+,O2+,U3+";
pub const TREFOIL_W4: &str = "O4+,U4+,O1+,U2+,O3+,U1+,O2+,U3+";
pub const HOPF: &str = "O1+,U2+ | U1+,O2+";
pub const UNLINK2: &str = "0 | 0";
pub const T42: &str = "O1+,U2+,O3+,U4+ | U1+,O2+,U3+,O4+";
pub const FOUR_CROSSING: &str = "O1-,U2+,O3-,U4+,O2+,U1-,O4+,U3-";
pub const VIRTUAL_TREFOIL: &str = "O1+,U2+,U1+,O2+";

pub const ALL_FIXTURES: &[&str] = &[
    UNKNOT,
    KINKED_UNKNOT,
    TREFOIL,
    TREFOIL_W4,
    HOPF,
    UNLINK2,
    T42,
    FOUR_CROSSING,
    VIRTUAL_TREFOIL,
];

pub fn d(s: &str) -> GaussDiagram {
    s.parse().unwrap()
}

pub fn t_ex6() -> RackTable {
    RackTable::from_rows(&[
        [1, 3, 2, 1, 1, 1, 1],
        [3, 2, 1, 2, 2, 2, 2],
        [2, 1, 3, 3, 3, 3, 3],
        [4, 4, 4, 6, 4, 6, 4],
        [5, 5, 5, 5, 7, 5, 7],
        [6, 6, 6, 4, 6, 4, 6],
        [7, 7, 7, 7, 5, 7, 5],
    ])
    .unwrap()
}

pub fn m_t() -> RackTable {
    RackTable::from_rows(&[[3, 1, 3, 1], [2, 4, 2, 4], [1, 3, 1, 3], [4, 2, 4, 2]]).unwrap()
}

pub fn cycle_rack(n: usize) -> RackTable {
    let cycle: Vec<usize> = (1..=n).collect();
    RackTable::constant_action(&Permutation::from_cycles(n, &[&cycle]).unwrap()).unwrap()
}

/// A handful of small racks and quandles of various ranks.
pub fn small_racks() -> Vec<RackTable> {
    vec![
        RackTable::trivial(1).unwrap(),
        RackTable::trivial(3).unwrap(),
        cycle_rack(2),
        cycle_rack(3),
        m_t(),
        RackTable::ts_rack(3, 2, 2).unwrap(), // dihedral quandle R_3
        RackTable::ts_rack(4, 3, 2).unwrap(),
        RackTable::ts_rack(5, 2, 4).unwrap(),
        RackTable::constant_action(&Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap())
            .unwrap(),
    ]
}

/// Brute-force axiom check on a 0-based flat table.
pub fn brute_is_rack(n: usize, t: &[usize]) -> bool {
    let at = |i: usize, j: usize| t[i * n + j];
    for j in 0..n {
        let mut col: Vec<usize> = (0..n).map(|i| at(i, j)).collect();
        col.sort_unstable();
        if col != (0..n).collect::<Vec<_>>() {
            return false;
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if at(at(i, j), k) != at(at(i, k), at(j, k)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn to_rows(n: usize, t: &[usize]) -> Vec<Vec<usize>> {
    t.chunks(n)
        .map(|r| r.iter().map(|v| v + 1).collect())
        .collect()
}

/// Every labelled rack of order `n`, found by trying all tables whose
/// columns are permutations.
pub fn all_racks(n: usize) -> Vec<RackTable> {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    let ps = perms(n);
    let mut out = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let mut t = vec![0usize; n * n];
        for (j, &c) in choice.iter().enumerate() {
            for i in 0..n {
                t[i * n + j] = ps[c][i];
            }
        }
        if brute_is_rack(n, &t) {
            out.push(RackTable::from_rows(&to_rows(n, &t)).unwrap());
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            choice[k] += 1;
            if choice[k] < ps.len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// Brute-force coloring count: all `n^arcs` assignments checked against the
/// crossing relation.
pub fn brute_colorings(diagram: &GaussDiagram, rack: &RackTable) -> Vec<Vec<usize>> {
    let arcs = diagram.arcs();
    let n = rack.order();
    let rows = rack.rows();
    let op = |x: usize, y: usize| rows[x][y] - 1;
    let total = n.pow(arcs.arc_count as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let colors: Vec<usize> = (0..arcs.arc_count)
            .map(|_| {
                let v = c % n;
                c /= n;
                v
            })
            .collect();
        let ok = arcs.crossings.iter().all(|x| {
            let (a, b, out) = (colors[x.under_in], colors[x.over], colors[x.under_out]);
            match x.sign {
                Sign::Positive => op(a, b) == out,
                Sign::Negative => op(out, b) == a,
            }
        });
        if ok {
            out.push(colors);
        }
    }
    out
}

/// Random valid Gauss diagrams with at most `max_crossings` crossings and at
/// most `max_components` components.
pub fn arb_diagram(
    max_components: usize,
    max_crossings: usize,
) -> impl Strategy<Value = GaussDiagram> {
    (1..=max_components, 0..=max_crossings).prop_flat_map(|(c, k)| {
        let visits = 2 * k;
        (
            Just(c),
            Just(k),
            Just((0..visits).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(0..=visits, c.saturating_sub(1)),
            proptest::collection::vec(any::<bool>(), k),
        )
            .prop_map(|(c, _k, order, mut cuts, signs)| {
                cuts.sort_unstable();
                let visit = |v: usize| {
                    let id = (v / 2) as u32 + 1;
                    let sign = if signs[v / 2] {
                        Sign::Positive
                    } else {
                        Sign::Negative
                    };
                    if v.is_multiple_of(2) {
                        Visit::over(id, sign)
                    } else {
                        Visit::under(id, sign)
                    }
                };
                let mut bounds = vec![0];
                bounds.extend(cuts);
                bounds.push(order.len());
                let comps: Vec<Vec<Visit>> = (0..c)
                    .map(|i| {
                        order[bounds[i]..bounds[i + 1]]
                            .iter()
                            .map(|&v| visit(v))
                            .collect()
                    })
                    .collect();
                GaussDiagram::new(comps).unwrap()
            })
    })
}

/// Inserts a Reidemeister II poke: component `top` passes over component
/// `bottom` twice, through two fresh crossings of opposite sign.
pub fn poke(
    diagram: &GaussDiagram,
    top: usize,
    top_pos: usize,
    bottom: usize,
    bottom_pos: usize,
    parallel: bool,
) -> GaussDiagram {
    let mut comps = diagram.components().to_vec();
    let a = diagram.max_crossing_id() + 1;
    let b = a + 1;
    // strands side by side: crossings have opposite signs, and the under
    // strand meets them in the same order iff the strands run parallel
    let over = [
        Visit::over(a, Sign::Positive),
        Visit::over(b, Sign::Negative),
    ];
    let under = if parallel {
        [
            Visit::under(a, Sign::Positive),
            Visit::under(b, Sign::Negative),
        ]
    } else {
        [
            Visit::under(b, Sign::Negative),
            Visit::under(a, Sign::Positive),
        ]
    };
    let tp = top_pos.min(comps[top].len());
    comps[top].splice(tp..tp, over);
    let bp = if top == bottom {
        // keep the under pair outside the over pair on the same component
        let len = comps[bottom].len();
        let p = bottom_pos % (len + 1);
        if p > tp && p <= tp + 2 {
            tp + 2
        } else {
            p
        }
    } else {
        bottom_pos.min(comps[bottom].len())
    };
    comps[bottom].splice(bp..bp, under);
    GaussDiagram::new(comps).unwrap()
}
