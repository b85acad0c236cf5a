use pairdom_core::graph6::GRAPH6_MAX_N;
use pairdom_core::{parse_graph6, write_graph6, Graph, Graph6Error};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn write_then_parse_is_identity(g in arb_graph(GRAPH6_MAX_N)) {
        let text = write_graph6(&g).unwrap();
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_graph6(&back).unwrap(), text);
    }

    #[test]
    fn trailing_newline_is_accepted(g in arb_graph(20)) {
        let text = write_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&format!("{text}\n")).unwrap(), g.clone());
        prop_assert_eq!(parse_graph6(&format!("{text}\r\n")).unwrap(), g);
    }

    #[test]
    fn arbitrary_text_never_panics(s in "[\\x20-\\x7f]{0,16}") {
        if let Ok(g) = parse_graph6(&s) {
            prop_assert_eq!(write_graph6(&g).unwrap(), s);
        }
    }

    #[test]
    fn errors_carry_offsets_inside_the_input(s in "[?-~]{1,12}[\\x00-\\x3e\\x7f]") {
        match parse_graph6(&s) {
            Err(e) => {
                if let Some(offset) = e.offset() {
                    prop_assert!(offset < s.len());
                }
            }
            Ok(_) => prop_assert!(false, "accepted {:?}", s),
        }
    }
}

#[test]
fn length_prefix_matches_order() {
    for n in 0..=GRAPH6_MAX_N {
        let text = write_graph6(&Graph::empty(n).unwrap()).unwrap();
        assert_eq!(text.as_bytes()[0], 63 + n as u8);
        assert_eq!(text.len(), 1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    }
    assert_eq!(parse_graph6("~"), Err(Graph6Error::LongForm));
}
