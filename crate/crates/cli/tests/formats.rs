use proptest::prelude::*;
use rackinv::formats::{
    parse_cochain, parse_link, parse_rack, write_cochain, write_link, write_rack,
};
use rackinv_core::link::Sign;
use rackinv_core::{Cochain2, GaussDiagram, Permutation, RackTable, Visit};

fn arb_rack() -> impl Strategy<Value = RackTable> {
    prop_oneof![
        (1usize..=9, 0i64..9, 0i64..9).prop_filter_map("not a (t,s)-rack", |(n, t, s)| {
            RackTable::ts_rack(n, t, s).ok()
        }),
        (1usize..=9).prop_flat_map(|n| {
            Just((0..n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|images| {
                    RackTable::constant_action(&Permutation::from_images(images).unwrap()).unwrap()
                })
        }),
    ]
}

fn arb_cochain() -> impl Strategy<Value = Cochain2> {
    (1usize..=6, 2u32..=50).prop_flat_map(|(n, m)| {
        proptest::collection::vec(0u64..m as u64, n * n).prop_map(move |flat| {
            let rows: Vec<Vec<u64>> = flat.chunks(n).map(<[u64]>::to_vec).collect();
            Cochain2::from_rows(m, &rows).unwrap()
        })
    })
}

fn arb_diagram() -> impl Strategy<Value = GaussDiagram> {
    (1usize..=3, 0usize..=5).prop_flat_map(|(c, k)| {
        (
            Just((0..2 * k).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(0..=2 * k, c - 1),
            proptest::collection::vec(any::<bool>(), k),
        )
            .prop_map(move |(order, mut cuts, signs)| {
                cuts.sort_unstable();
                let mut bounds = vec![0];
                bounds.extend(cuts);
                bounds.push(order.len());
                let comps = (0..c)
                    .map(|i| {
                        order[bounds[i]..bounds[i + 1]]
                            .iter()
                            .map(|&v| {
                                let id = (v / 2) as u32 + 1;
                                let sign = if signs[v / 2] {
                                    Sign::Positive
                                } else {
                                    Sign::Negative
                                };
                                if v % 2 == 0 {
                                    Visit::over(id, sign)
                                } else {
                                    Visit::under(id, sign)
                                }
                            })
                            .collect()
                    })
                    .collect();
                GaussDiagram::new(comps).unwrap()
            })
    })
}

/// Adds comments, blank lines and extra spaces without changing the content.
fn noisy(text: &str) -> String {
    let mut out = String::from("# header comment\n\n");
    for line in text.lines() {
        out.push_str("  ");
        out.push_str(&line.replace(' ', "   "));
        out.push_str("\t# trailing\n\n");
    }
    out
}

proptest! {
    #[test]
    fn racks_round_trip(r in arb_rack()) {
        let text = write_rack(&r);
        prop_assert_eq!(&parse_rack(&text).unwrap(), &r);
        prop_assert_eq!(&parse_rack(&noisy(&text)).unwrap(), &r);
    }

    #[test]
    fn cochains_round_trip(phi in arb_cochain()) {
        let text = write_cochain(&phi);
        prop_assert_eq!(&parse_cochain(&text).unwrap(), &phi);
        prop_assert_eq!(&parse_cochain(&noisy(&text)).unwrap(), &phi);
    }

    #[test]
    fn links_round_trip(d in arb_diagram()) {
        let text = write_link(&d);
        prop_assert_eq!(&parse_link(&text).unwrap(), &d);
        let spaced = text.replace(',', " , ").replace('|', "\n|\n");
        prop_assert_eq!(&parse_link(&format!("# comment\n{spaced}")).unwrap(), &d);
    }

    #[test]
    fn garbage_never_panics(text in "[0-9 #\\n\\-x]{0,60}") {
        let _ = parse_rack(&text);
        let _ = parse_cochain(&text);
        let _ = parse_link(&text);
    }
}
