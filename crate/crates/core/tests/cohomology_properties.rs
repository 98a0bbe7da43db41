mod common;

use common::*;
use proptest::prelude::*;
use rackinv_core::cohomology::{
    delta1, delta2, enumerate_reduced_cocycles, is_cocycle, is_n_reduced, Cochain1, Cochain2,
};
use rackinv_core::{Element, RackTable};

fn all_cochains1(n: usize, m: u32) -> impl Iterator<Item = Cochain1> {
    let total = (m as usize).pow(n as u32);
    (0..total).map(move |mut code| {
        let vals: Vec<u64> = (0..n)
            .map(|_| {
                let v = code % m as usize;
                code /= m as usize;
                v as u64
            })
            .collect();
        Cochain1::new(m, &vals).unwrap()
    })
}

fn all_cochains2(n: usize, m: u32) -> impl Iterator<Item = Cochain2> {
    let cells = n * n;
    let total = (m as usize).pow(cells as u32);
    (0..total).map(move |mut code| {
        let rows: Vec<Vec<u64>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        let v = code % m as usize;
                        code /= m as usize;
                        v as u64
                    })
                    .collect()
            })
            .collect();
        Cochain2::from_rows(m, &rows).unwrap()
    })
}

/// Independent scan: count every cochain that passes both checks.
fn exhaustive_count(r: &RackTable, m: u32) -> u128 {
    all_cochains2(r.order(), m)
        .filter(|phi| is_cocycle(r, phi) && is_n_reduced(r, phi))
        .count() as u128
}

#[test]
fn delta_squared_vanishes_on_all_racks_up_to_order_four() {
    for n in 1..=4 {
        for r in all_racks(n) {
            for m in [2, 3] {
                for f in all_cochains1(n, m) {
                    assert!(delta2(&r, &delta1(&r, &f)).is_zero(), "{r:?} {f:?}");
                }
            }
        }
    }
}

#[test]
fn solver_matches_exhaustive_scan_for_small_racks() {
    for n in 1..=2 {
        for r in all_racks(n) {
            for m in 2..=3 {
                let space = enumerate_reduced_cocycles(&r, m).unwrap();
                assert_eq!(
                    space.cardinality(),
                    Some(exhaustive_count(&r, m)),
                    "{r:?} mod {m}"
                );
            }
        }
    }
}

#[test]
fn solver_matches_exhaustive_scan_for_composite_moduli() {
    for r in all_racks(2) {
        for m in [4, 6] {
            let space = enumerate_reduced_cocycles(&r, m).unwrap();
            assert_eq!(
                space.cardinality(),
                Some(exhaustive_count(&r, m)),
                "{r:?} mod {m}"
            );
            let listed = space.materialize(usize::MAX);
            assert_eq!(listed.len() as u128, space.cardinality().unwrap());
            let mut dedup = listed.clone();
            dedup.sort();
            dedup.dedup();
            assert_eq!(dedup.len(), listed.len());
            assert!(listed.iter().all(|phi| space.contains(&r, phi)));
        }
    }
}

#[test]
fn solver_counts_for_named_racks() {
    let m12 = cycle_rack(2);
    let space = enumerate_reduced_cocycles(&m12, 2).unwrap();
    assert_eq!(space.cardinality(), Some(exhaustive_count(&m12, 2)));
    let t1 = RackTable::trivial(1).unwrap();
    assert_eq!(
        enumerate_reduced_cocycles(&t1, 5).unwrap().cardinality(),
        Some(1)
    );
    assert_eq!(exhaustive_count(&t1, 5), 1);
}

#[test]
fn solver_output_is_admissible_on_larger_racks() {
    for r in small_racks() {
        for m in [2, 3, 4, 13] {
            let space = enumerate_reduced_cocycles(&r, m).unwrap();
            for g in space.generators() {
                assert!(is_cocycle(&r, g) && is_n_reduced(&r, g));
            }
            for phi in space.materialize(200) {
                assert!(is_cocycle(&r, &phi) && is_n_reduced(&r, &phi));
            }
        }
    }
}

#[test]
fn quandle_reducedness_is_vanishing_on_the_diagonal() {
    let quandles: Vec<RackTable> = (1..=3)
        .flat_map(all_racks)
        .filter(|r| r.is_quandle())
        .collect();
    for r in &quandles {
        let n = r.order();
        for phi in all_cochains2(n, 2).take(512) {
            let diag_zero = r.elements().all(|x| phi.get(x, x) == 0);
            assert_eq!(is_n_reduced(r, &phi), diag_zero);
        }
    }
}

#[test]
fn coboundary_shift_keeps_cocycles() {
    let r = m_t();
    let space = enumerate_reduced_cocycles(&r, 13).unwrap();
    let mut preserved = 0;
    let mut broken = 0;
    for phi in space.generators() {
        for f in all_cochains1(4, 13).step_by(97) {
            let shifted = phi + &delta1(&r, &f);
            assert!(is_cocycle(&r, &shifted));
            if is_n_reduced(&r, &shifted) {
                preserved += 1;
            } else {
                broken += 1;
            }
        }
    }
    // record what happens rather than assume it
    assert!(preserved > 0);
    eprintln!("coboundary shifts on M_T mod 13: {preserved} stay 2-reduced, {broken} do not");
}

fn arb_rack() -> impl Strategy<Value = RackTable> {
    (0..small_racks().len()).prop_map(|i| small_racks().swap_remove(i))
}

proptest! {
    #[test]
    fn coboundaries_are_linear(
        r in arb_rack(),
        m in 2u32..=12,
        a in 0u64..12,
        b in 0u64..12,
        f in proptest::collection::vec(0u64..12, 5),
        g in proptest::collection::vec(0u64..12, 5),
        phi in proptest::collection::vec(0u64..12, 25),
        psi in proptest::collection::vec(0u64..12, 25),
    ) {
        let n = r.order();
        let f = Cochain1::new(m, &f[..n]).unwrap();
        let g = Cochain1::new(m, &g[..n]).unwrap();
        let combo1 = Cochain1::new(
            m,
            &f.values().iter().zip(g.values()).map(|(&x, &y)| a * x as u64 + b * y as u64).collect::<Vec<_>>(),
        ).unwrap();
        prop_assert_eq!(
            delta1(&r, &combo1),
            &delta1(&r, &f).scale(a) + &delta1(&r, &g).scale(b)
        );

        let rows = |v: &[u64]| v[..n * n].chunks(n).map(<[u64]>::to_vec).collect::<Vec<_>>();
        let phi = Cochain2::from_rows(m, &rows(&phi)).unwrap();
        let psi = Cochain2::from_rows(m, &rows(&psi)).unwrap();
        let lhs = delta2(&r, &(&phi.scale(a) + &psi.scale(b)));
        let dphi = delta2(&r, &phi);
        let dpsi = delta2(&r, &psi);
        for x in r.elements() {
            for y in r.elements() {
                for z in r.elements() {
                    let want = (a * dphi.get(x, y, z) as u64 + b * dpsi.get(x, y, z) as u64) % m as u64;
                    prop_assert_eq!(lhs.get(x, y, z) as u64, want);
                }
            }
        }
    }

    #[test]
    fn delta_squared_vanishes_randomly(r in arb_rack(), m in 2u32..=30, f in proptest::collection::vec(0u64..30, 5)) {
        let f = Cochain1::new(m, &f[..r.order()]).unwrap();
        prop_assert!(delta2(&r, &delta1(&r, &f)).is_zero());
    }
}

#[test]
fn chi_sum_is_a_solver_generator() {
    let e = Element::new;
    let phi = [(1, 2), (1, 4), (3, 2), (3, 4)]
        .iter()
        .map(|&(i, j)| Cochain2::chi(4, 13, e(i), e(j)).unwrap())
        .reduce(|a, b| &a + &b)
        .unwrap();
    let space = enumerate_reduced_cocycles(&m_t(), 13).unwrap();
    assert!(space.generators().contains(&phi));
}
