mod common;

use common::*;
use proptest::prelude::*;
use rackinv_core::cohomology::{delta1, enumerate_reduced_cocycles, is_n_reduced, Cochain1};
use rackinv_core::coloring::count_colorings;
use rackinv_core::invariants::{
    classicality_obstruction, cocycle_invariant, constant_action_closed_form, integer_counting,
    polynomial_counting,
};
use rackinv_core::{Cochain2, GaussDiagram, RackTable};

/// `T(2k, 2)`: two strands twisted `2k` times, linking number `k`.
fn torus_link(k: u32) -> GaussDiagram {
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for id in 1..=2 * k {
        let (o, u) = (format!("O{id}+"), format!("U{id}+"));
        if id % 2 == 1 {
            a.push(o);
            b.push(u);
        } else {
            a.push(u);
            b.push(o);
        }
    }
    d(&format!("{} | {}", a.join(","), b.join(",")))
}

fn mirror(diagram: &GaussDiagram) -> GaussDiagram {
    let text = diagram
        .to_string()
        .replace('+', "p")
        .replace('-', "+")
        .replace('p', "-");
    d(&text)
}

#[test]
fn torus_link_builder_matches_fixtures() {
    assert_eq!(torus_link(1), d(HOPF));
    assert_eq!(torus_link(2), d(T42));
    assert_eq!(torus_link(3).linking_number(0, 1).unwrap(), 3);
}

#[test]
fn constant_action_closed_form_holds_for_classical_links() {
    for n in [2, 3] {
        let r = cycle_rack(n);
        for k in 1..=3 {
            for link in [torus_link(k), mirror(&torus_link(k))] {
                let lk = link.linking_number(0, 1).unwrap();
                let p = polynomial_counting(&link, &r);
                assert_eq!(p, constant_action_closed_form(n as u64, lk), "{link} N={n}");
                assert!(!classicality_obstruction(&p));
            }
        }
        let unlink = d(UNLINK2);
        assert_eq!(
            polynomial_counting(&unlink, &r),
            constant_action_closed_form(n as u64, 0)
        );
    }
}

#[test]
fn specializations_chain_down() {
    let r = m_t();
    let space = enumerate_reduced_cocycles(&r, 13).unwrap();
    for code in ALL_FIXTURES {
        let diagram = d(code);
        let pr = polynomial_counting(&diagram, &r);
        assert_eq!(pr.total(), integer_counting(&diagram, &r));
        for phi in space.generators() {
            let full = cocycle_invariant(&diagram, &r, phi).unwrap();
            assert_eq!(full.specialize_z(), pr, "{code}");
        }
    }
}

#[test]
fn quandles_collapse_to_the_coloring_count() {
    for r in small_racks().into_iter().filter(RackTable::is_quandle) {
        for code in ALL_FIXTURES {
            let diagram = d(code);
            let pr = polynomial_counting(&diagram, &r);
            assert_eq!(pr.rank(), 1);
            assert_eq!(pr.terms().count(), 1);
            assert_eq!(
                integer_counting(&diagram, &r),
                count_colorings(&diagram, &r)
            );
        }
    }
}

#[test]
fn extra_kink_on_trefoil_changes_nothing() {
    for r in small_racks().into_iter().chain([t_ex6()]) {
        assert_eq!(
            polynomial_counting(&d(TREFOIL), &r),
            polynomial_counting(&d(TREFOIL_W4), &r)
        );
    }
}

#[test]
fn admissible_coboundary_shifts_leave_phi_unchanged() {
    let r = m_t();
    let phi = enumerate_reduced_cocycles(&r, 13).unwrap().generators()[0].clone();
    let mut compared = 0;
    for a in 0..13u64 {
        for b in 0..13u64 {
            let f = Cochain1::new(13, &[a, b, 0, 0]).unwrap();
            let shifted = &phi + &delta1(&r, &f);
            if !is_n_reduced(&r, &shifted) {
                continue;
            }
            compared += 1;
            for code in [HOPF, T42, TREFOIL] {
                let diagram = d(code);
                assert_eq!(
                    cocycle_invariant(&diagram, &r, &phi).unwrap(),
                    cocycle_invariant(&diagram, &r, &shifted).unwrap()
                );
            }
        }
    }
    assert!(compared > 0);
}

#[test]
fn hopf_link_under_m_t() {
    let r = m_t();
    let phi = [(1, 2), (1, 4), (3, 2), (3, 4)]
        .iter()
        .map(|&(i, j)| {
            Cochain2::chi(
                4,
                13,
                rackinv_core::Element::new(i),
                rackinv_core::Element::new(j),
            )
            .unwrap()
        })
        .reduce(|a, b| &a + &b)
        .unwrap();
    let hopf = d(HOPF);
    assert_eq!(
        cocycle_invariant(&hopf, &r, &phi).unwrap().to_string(),
        "8z + 8q1q2"
    );
    assert_eq!(
        cocycle_invariant(&mirror(&hopf), &r, &phi)
            .unwrap()
            .to_string(),
        "8z^12 + 8q1q2"
    );
}

fn arb_rack() -> impl Strategy<Value = RackTable> {
    let racks: Vec<RackTable> = small_racks().into_iter().chain([t_ex6()]).collect();
    (0..racks.len()).prop_map(move |i| racks[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_ignore_the_chosen_diagram(
        diagram in arb_diagram(2, 3),
        r in arb_rack(),
        comp in 0usize..2,
        by in 0usize..6,
        kinks in 0u64..4,
        top_pos in 0usize..6,
        bottom_pos in 0usize..6,
        parallel in any::<bool>(),
    ) {
        let c = diagram.component_count();
        let comp = comp % c;
        let other = diagram
            .rotate(comp, by).unwrap()
            .add_kinks(comp, kinks).unwrap();
        let other = poke(&other, comp, top_pos, (comp + 1) % c, bottom_pos, parallel);
        prop_assert_eq!(polynomial_counting(&other, &r), polynomial_counting(&diagram, &r));
        if let Some(phi) = enumerate_reduced_cocycles(&r, 7).unwrap().generators().first() {
            prop_assert_eq!(
                cocycle_invariant(&other, &r, phi).unwrap(),
                cocycle_invariant(&diagram, &r, phi).unwrap()
            );
        }
    }

    #[test]
    fn framing_representatives_hit_every_writhe_vector(
        diagram in arb_diagram(3, 4),
        rank in 1u64..4,
    ) {
        let reps = diagram.framing_representatives(rank);
        prop_assert_eq!(reps.len() as u64, rank.pow(diagram.component_count() as u32));
        for (w, rep) in reps {
            for (i, sw) in rep.self_writhe().into_iter().enumerate() {
                prop_assert_eq!(sw.rem_euclid(rank as i64) as u64, w.entries()[i]);
            }
        }
    }
}
