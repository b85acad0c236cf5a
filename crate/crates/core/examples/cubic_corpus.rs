//! Enumerates all connected cubic graphs on `n` vertices up to isomorphism
//! and prints one canonical graph6 record per line.
//!
//! ```text
//! cargo run --release -p pairdom-core --example cubic_corpus -- 10 > cubic_n10.g6
//! ```
//!
//! Labelled graphs are built edge by edge: the lowest vertex with spare
//! degree is joined either to an already-touched higher vertex or to the
//! first untouched one, which yields every connected cubic graph in some
//! breadth-first labelling. Duplicates are removed with a canonical form
//! computed by partition refinement plus individualisation (the minimum
//! graph6 string over all leaves of the search tree).

use std::collections::BTreeSet;

use pairdom_core::{write_graph6, Graph};

fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut cell_of = vec![0usize; g.n()];
        for (i, c) in cells.iter().enumerate() {
            for &v in c {
                cell_of[v] = i;
            }
        }
        let mut next = Vec::with_capacity(cells.len());
        for c in &cells {
            let mut keyed: Vec<(Vec<usize>, usize)> = c
                .iter()
                .map(|&v| {
                    let mut counts = vec![0usize; cells.len()];
                    for w in g.neighbors(v) {
                        counts[cell_of[w]] += 1;
                    }
                    (counts, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn canonical_search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<String>) {
    let cells = refine(g, cells);
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let mut perm = vec![0usize; g.n()];
        for (i, c) in cells.iter().enumerate() {
            perm[c[0]] = i;
        }
        let code = write_graph6(&g.relabel(&perm)).expect("small graph");
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    for &v in &cells[t] {
        let mut split = cells[..t].to_vec();
        split.push(vec![v]);
        split.push(cells[t].iter().copied().filter(|&w| w != v).collect());
        split.extend(cells[t + 1..].iter().cloned());
        canonical_search(g, split, best);
    }
}

fn canonical_form(g: &Graph) -> String {
    let mut best = None;
    canonical_search(g, vec![(0..g.n()).collect()], &mut best);
    best.expect("at least one leaf")
}

fn extend(g: &mut Graph, touched: usize, out: &mut BTreeSet<String>, deg: &mut [usize]) {
    let n = g.n();
    let Some(v) = (0..n).find(|&v| deg[v] < 3) else {
        out.insert(canonical_form(g));
        return;
    };
    if v >= touched && v > 0 {
        // The touched prefix is closed: the graph would be disconnected.
        return;
    }
    let touched = touched.max(v + 1);
    let limit = (touched + 1).min(n);
    // Forward edges of v are added in increasing order.
    let lowest = g.neighbors(v).iter().max().map_or(v + 1, |m| m.max(v) + 1);
    for w in lowest..limit {
        if deg[w] >= 3 || g.has_edge(v, w) {
            continue;
        }
        let mut h = g.clone();
        h.add_edge(v, w).expect("fresh edge");
        deg[v] += 1;
        deg[w] += 1;
        extend(&mut h, touched.max(w + 1), out, deg);
        deg[v] -= 1;
        deg[w] -= 1;
    }
}

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .expect("usage: cubic_corpus <even n >= 4>");
    assert!(
        n >= 4 && n.is_multiple_of(2) && n < 63,
        "n must be even, 4 <= n < 63"
    );
    let mut g = Graph::empty(n).expect("n < 63");
    let mut out = BTreeSet::new();
    extend(&mut g, 1, &mut out, &mut vec![0; n]);
    eprintln!("n={n}: {} connected cubic graphs", out.len());
    for code in out {
        println!("{code}");
    }
}
