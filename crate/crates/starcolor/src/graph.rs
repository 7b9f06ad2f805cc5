//! Graph representation and generators: cycles, paths, and the
//! splitting-graph construction.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n`.
///
/// Immutable after construction. The edge list is stored with each pair
/// ascending and the whole list sorted lexicographically; adjacency lists are
/// derived from it and kept sorted. Graphs can be shared freely across
/// threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    family: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges, and out-of-range endpoints.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut sorted: Vec<(usize, usize)> = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {v}) out of range for n = {n}"
                )));
            }
            sorted.push((u.min(v), u.max(v)));
        }
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &sorted {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            edges: sorted,
            adj,
            family: None,
        })
    }

    /// Attaches a provenance tag such as `cycle:10`. Informational only.
    pub fn with_family(mut self, tag: impl Into<String>) -> Self {
        self.family = Some(tag.into());
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges with each pair ascending, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn family(&self) -> Option<&str> {
        self.family.as_deref()
    }
}

/// The cycle `C_n` with edges `(i, (i+1) mod n)`, `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Ok(Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))?.with_family(format!("cycle:{n}")))
}

/// The path `P_n` on `n >= 1` vertices with edges `(i, i+1)`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter(format!(
            "path needs n >= 1, got {n}"
        )));
    }
    Ok(Graph::new(n, (0..n - 1).map(|i| (i, i + 1)))?.with_family(format!("path:{n}")))
}

/// The splitting graph: every vertex `v` gains a twin `v'` with
/// `N(v') = N(v)`.
///
/// Vertex `i` of the base graph keeps its index; its twin gets index `n + i`.
/// The result has `2n` vertices and `3|E|` edges, and no edge joins two
/// twins.
pub fn splitting_graph(g: &Graph) -> Result<Graph> {
    let n = g.n();
    if n < 1 {
        return Err(Error::InvalidParameter(
            "splitting graph needs a nonempty base graph".into(),
        ));
    }
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for &(u, w) in g.edges() {
        edges.push((n + u, w));
        edges.push((n + w, u));
    }
    let out = Graph::new(2 * n, edges)?;
    Ok(match g.family() {
        Some(tag) => out.with_family(format!("splitting({tag})")),
        None => out,
    })
}

/// Every path on four vertices `a-b-c-d`, each undirected path reported once
/// in canonical orientation (`a < d`), sorted lexicographically.
pub fn enumerate_paths4(g: &Graph) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for b in 0..g.n() {
        for &c in g.neighbors(b) {
            for &a in g.neighbors(b) {
                if a == c {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d == a || d == b || a >= d {
                        continue;
                    }
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Per-vertex index of the paths from [`enumerate_paths4`]; used by the
/// incremental checks in the search engine.
pub(crate) fn paths_through(g: &Graph) -> Vec<Vec<[usize; 4]>> {
    let mut through = vec![Vec::new(); g.n()];
    for p in enumerate_paths4(g) {
        for &v in &p {
            through[v].push(p);
        }
    }
    through
}

#[derive(Serialize, Deserialize)]
struct GraphWire {
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<String>,
    n: usize,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        GraphWire {
            edges: self.edges.clone(),
            family: self.family.clone(),
            n: self.n,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = GraphWire::deserialize(de)?;
        let g = Graph::new(wire.n, wire.edges).map_err(D::Error::custom)?;
        Ok(match wire.family {
            Some(tag) => g.with_family(tag),
            None => g,
        })
    }
}
