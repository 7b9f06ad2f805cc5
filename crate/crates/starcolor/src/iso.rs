//! Brute-force vertex-colored-graph isomorphism for small graphs.
//!
//! Two colored graphs are isomorphic when a vertex bijection preserves
//! adjacency both ways and a color bijection between the used color sets
//! commutes with it. The search maps vertices of the first graph in index
//! order, pruning on degree, partial adjacency, and color-map consistency;
//! candidates are tried ascending, so a self-comparison reports the identity.

use std::collections::BTreeMap;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Vertex count beyond which the permutation search is refused.
const MAX_VERTICES: usize = 16;

/// Witnessing bijections: vertex `v` of the first graph corresponds to
/// `vertex_map[v]` in the second, and `color_map` relabels used colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredIsomorphism {
    pub vertex_map: Vec<usize>,
    pub color_map: BTreeMap<u32, u32>,
}

pub fn colored_isomorphic(
    g1: &Graph,
    c1: &Coloring,
    g2: &Graph,
    c2: &Coloring,
) -> Result<Option<ColoredIsomorphism>> {
    if c1.len() != g1.n() || c2.len() != g2.n() {
        return Err(Error::InvalidInput(
            "coloring does not cover its graph".into(),
        ));
    }
    if g1.n() > MAX_VERTICES || g2.n() > MAX_VERTICES {
        return Err(Error::BudgetExhausted {
            nodes: 0,
            infeasible: Vec::new(),
        });
    }
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let n = g1.n();

    let mut degrees1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut degrees2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    degrees1.sort_unstable();
    degrees2.sort_unstable();
    if degrees1 != degrees2 {
        return Ok(None);
    }

    if class_sizes(c1) != class_sizes(c2) {
        return Ok(None);
    }

    let mut search = Search {
        g1,
        c1,
        g2,
        c2,
        pi: vec![usize::MAX; n],
        used: vec![false; n],
        theta: BTreeMap::new(),
        theta_image: Vec::new(),
    };
    if search.extend(0) {
        Ok(Some(ColoredIsomorphism {
            vertex_map: search.pi,
            color_map: search.theta,
        }))
    } else {
        Ok(None)
    }
}

/// Multiset of color-class sizes, sorted.
fn class_sizes(c: &Coloring) -> Vec<usize> {
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &color in c.as_slice() {
        *counts.entry(color).or_default() += 1;
    }
    let mut sizes: Vec<usize> = counts.into_values().collect();
    sizes.sort_unstable();
    sizes
}

struct Search<'a> {
    g1: &'a Graph,
    c1: &'a Coloring,
    g2: &'a Graph,
    c2: &'a Coloring,
    pi: Vec<usize>,
    used: Vec<bool>,
    theta: BTreeMap<u32, u32>,
    theta_image: Vec<u32>,
}

impl Search<'_> {
    fn extend(&mut self, v: usize) -> bool {
        let n = self.g1.n();
        if v == n {
            return true;
        }
        'candidates: for w in 0..n {
            if self.used[w] || self.g1.degree(v) != self.g2.degree(w) {
                continue;
            }
            for u in 0..v {
                if self.g1.has_edge(u, v) != self.g2.has_edge(self.pi[u], w) {
                    continue 'candidates;
                }
            }
            let (a, b) = (self.c1.color(v), self.c2.color(w));
            let bound_here = match self.theta.get(&a) {
                Some(&mapped) if mapped != b => continue,
                Some(_) => false,
                None => {
                    if self.theta_image.contains(&b) {
                        continue;
                    }
                    self.theta.insert(a, b);
                    self.theta_image.push(b);
                    true
                }
            };
            self.pi[v] = w;
            self.used[w] = true;
            if self.extend(v + 1) {
                return true;
            }
            self.used[w] = false;
            self.pi[v] = usize::MAX;
            if bound_here {
                self.theta.remove(&a);
                self.theta_image.pop();
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;

    fn col(colors: &[u32]) -> Coloring {
        Coloring::new(colors.to_vec()).unwrap()
    }

    #[test]
    fn self_comparison_yields_the_identity() {
        let g = cycle(4).unwrap();
        let c = col(&[1, 2, 1, 3]);
        let iso = colored_isomorphic(&g, &c, &g, &c).unwrap().unwrap();
        assert_eq!(iso.vertex_map, vec![0, 1, 2, 3]);
        assert!(iso.color_map.iter().all(|(a, b)| a == b));
    }

    #[test]
    fn pure_color_relabeling_is_an_isomorphism() {
        let g = cycle(4).unwrap();
        let iso = colored_isomorphic(&g, &col(&[1, 2, 1, 3]), &g, &col(&[2, 3, 2, 1]))
            .unwrap()
            .unwrap();
        assert_eq!(iso.vertex_map, vec![0, 1, 2, 3]);
        let expected: BTreeMap<u32, u32> = [(1, 2), (2, 3), (3, 1)].into_iter().collect();
        assert_eq!(iso.color_map, expected);
    }

    #[test]
    fn distinct_class_pair_shapes_are_not_isomorphic() {
        // both are 3-star-colorings of C_6 with class sizes (2,2,2), but the
        // first induces 2K_2 on every class pair while the second induces a
        // path on three vertices for some pair
        let g = cycle(6).unwrap();
        let a = col(&[1, 2, 3, 1, 2, 3]);
        let b = col(&[1, 2, 1, 3, 2, 3]);
        assert_eq!(colored_isomorphic(&g, &a, &g, &b).unwrap(), None);
    }

    #[test]
    fn mismatched_sizes_are_not_isomorphic() {
        let g4 = cycle(4).unwrap();
        let g5 = cycle(5).unwrap();
        let r = colored_isomorphic(&g4, &col(&[1, 2, 1, 2]), &g5, &col(&[1, 2, 1, 2, 3])).unwrap();
        assert_eq!(r, None);
    }

    #[test]
    fn witness_really_is_an_isomorphism() {
        let g = cycle(6).unwrap();
        let a = col(&[1, 2, 3, 1, 2, 3]);
        let b = col(&[2, 3, 1, 2, 3, 1]);
        let iso = colored_isomorphic(&g, &a, &g, &b).unwrap().unwrap();
        for u in 0..6 {
            for v in 0..6 {
                if u != v {
                    assert_eq!(
                        g.has_edge(u, v),
                        g.has_edge(iso.vertex_map[u], iso.vertex_map[v])
                    );
                }
            }
            assert_eq!(iso.color_map[&a.color(u)], b.color(iso.vertex_map[u]));
        }
    }

    #[test]
    fn size_guard_is_a_budget_error() {
        let g = cycle(17).unwrap();
        let c = Coloring::new((0..17).map(|i| 1 + (i % 3) as u32).collect()).unwrap();
        assert!(matches!(
            colored_isomorphic(&g, &c, &g, &c),
            Err(Error::BudgetExhausted { .. })
        ));
    }
}
