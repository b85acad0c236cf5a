//! Bundled corpora of all connected cubic graphs on 4 to 14 vertices, one
//! graph6 record per line. See `data/README.md` for how they were produced.

use crate::graph::Graph;
use crate::graph6::parse_graph6;

/// Orders for which a corpus is bundled.
pub const CUBIC_ORDERS: [usize; 6] = [4, 6, 8, 10, 12, 14];

/// Number of connected cubic graphs for each entry of [`CUBIC_ORDERS`].
pub const CUBIC_COUNTS: [usize; 6] = [1, 2, 5, 19, 85, 509];

/// Raw graph6 text of the corpus for `n`.
pub fn cubic_corpus_text(n: usize) -> Option<&'static str> {
    Some(match n {
        4 => include_str!("../data/cubic_n04.g6"),
        6 => include_str!("../data/cubic_n06.g6"),
        8 => include_str!("../data/cubic_n08.g6"),
        10 => include_str!("../data/cubic_n10.g6"),
        12 => include_str!("../data/cubic_n12.g6"),
        14 => include_str!("../data/cubic_n14.g6"),
        _ => return None,
    })
}

/// Every connected cubic graph on `n` vertices, if `n` is bundled.
pub fn cubic_corpus(n: usize) -> Option<Vec<Graph>> {
    cubic_corpus_text(n).map(|text| {
        text.lines()
            .map(|l| parse_graph6(l).expect("bundled corpus is valid graph6"))
            .collect()
    })
}
