//! Standard small graphs used as fixtures and by the CLI `--name` flag.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NamedGraphError {
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("invalid parameter for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("fixture edge lists are valid")
}

/// The Petersen graph: outer 5-cycle `0..5`, spokes `i -- i+5`, inner
/// pentagram `5+i -- 5+(i+2)%5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &edges)
}

pub fn complete(n: usize) -> Result<Graph, NamedGraphError> {
    let mut g = Graph::empty(n)?;
    for v in 1..n {
        for u in 0..v {
            g.insert_edge(u, v);
        }
    }
    Ok(g)
}

pub fn k4() -> Graph {
    complete(4).expect("K4")
}

/// `K_{3,3}` with sides `{0,1,2}` and `{3,4,5}`.
pub fn k33() -> Graph {
    let edges: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    build(6, &edges)
}

/// Triangular prism: triangles `{0,1,2}`, `{3,4,5}` joined by `i -- i+3`.
pub fn prism() -> Graph {
    build(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
}

/// The 3-cube `Q3`; vertices are 3-bit words, adjacent when they differ in
/// one bit.
pub fn cube_q3() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    build(8, &edges)
}

pub fn cycle(n: usize) -> Result<Graph, NamedGraphError> {
    if !(3..=MAX_VERTICES).contains(&n) {
        return Err(NamedGraphError::InvalidParameter {
            family: "cycle",
            reason: format!("need 3 <= n <= {MAX_VERTICES}, got {n}"),
        });
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn path(n: usize) -> Result<Graph, NamedGraphError> {
    if !(1..=MAX_VERTICES).contains(&n) {
        return Err(NamedGraphError::InvalidParameter {
            family: "path",
            reason: format!("need 1 <= n <= {MAX_VERTICES}, got {n}"),
        });
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Star with `t` rays, each subdivided once: centre `0`, ray `i` is
/// `0 -- 2i+1 -- 2i+2`.
pub fn subdivided_star(t: usize) -> Result<Graph, NamedGraphError> {
    if t < 2 || 2 * t + 1 > MAX_VERTICES {
        return Err(NamedGraphError::InvalidParameter {
            family: "subdivided_star",
            reason: format!("need 2 <= t <= {}, got {t}", (MAX_VERTICES - 1) / 2),
        });
    }
    let mut edges = Vec::with_capacity(2 * t);
    for i in 0..t {
        edges.push((0, 2 * i + 1));
        edges.push((2 * i + 1, 2 * i + 2));
    }
    Ok(Graph::from_edges(2 * t + 1, &edges)?)
}

/// Looks up a graph by name.
///
/// Accepted: `petersen`, `k4`, `k33`, `prism`, `cube` / `q3`, and the
/// parametrised families `cycle`, `path`, `star` (subdivided star) and
/// `complete`, written either as `cycle5` or `cycle(5)`.
pub fn named_graph(name: &str) -> Result<Graph, NamedGraphError> {
    let lower = name.trim().to_ascii_lowercase();
    match lower.as_str() {
        "petersen" => return Ok(petersen()),
        "k4" => return Ok(k4()),
        "k33" | "k3,3" => return Ok(k33()),
        "prism" => return Ok(prism()),
        "cube" | "q3" | "cube_q3" => return Ok(cube_q3()),
        _ => {}
    }
    let split = lower
        .find(|c: char| c == '(' || c.is_ascii_digit())
        .ok_or_else(|| NamedGraphError::UnknownName(name.to_string()))?;
    let (family, rest) = lower.split_at(split);
    let digits = rest
        .strip_prefix('(')
        .map(|r| r.strip_suffix(')').unwrap_or(r))
        .unwrap_or(rest);
    let param: usize = digits
        .parse()
        .map_err(|_| NamedGraphError::UnknownName(name.to_string()))?;
    match family {
        "cycle" | "c" => cycle(param),
        "path" | "p" => path(param),
        "star" | "subdivided_star" => subdivided_star(param),
        "complete" | "k" => complete(param),
        _ => Err(NamedGraphError::UnknownName(name.to_string())),
    }
}

/// Names accepted by [`named_graph`] without a parameter.
pub const FIXED_NAMES: &[&str] = &["petersen", "k4", "k33", "prism", "cube"];
