//! Exhaustive enumeration of star colorings, with optional deduplication up
//! to vertex-colored-graph isomorphism.

use std::time::Instant;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{paths_through, Graph};
use crate::iso::colored_isomorphic;
use crate::search::SolveOptions;
use crate::verify::at_most_two_distinct;

/// Yields every star coloring of `g` with colors from `{1..=k}`, in
/// lexicographic order of the color vector.
///
/// With `dedup`, only one representative per vertex-colored-isomorphism class
/// is kept: the lexicographically least member, which is simply the first one
/// enumerated.
pub fn enumerate_star_colorings(
    g: &Graph,
    k: u32,
    dedup: bool,
    opts: &SolveOptions,
) -> Result<Vec<Coloring>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let through = paths_through(g);
    let mut colors = vec![0u32; g.n()];
    let mut out: Vec<Coloring> = Vec::new();
    let mut nodes: u64 = 0;
    let deadline = Instant::now() + opts.time_budget;

    // Plain vertex-index order and no symmetry breaking: lexicographic output
    // is the contract here, and color-permuted twins are wanted.
    fn rec(
        g: &Graph,
        through: &[Vec<[usize; 4]>],
        k: u32,
        v: usize,
        colors: &mut Vec<u32>,
        nodes: &mut u64,
        budget: u64,
        deadline: Instant,
        out: &mut Vec<Coloring>,
    ) -> Result<()> {
        if v == g.n() {
            out.push(Coloring::new(colors.clone()).expect("enumeration colors are positive"));
            return Ok(());
        }
        for c in 1..=k {
            if *nodes >= budget || (*nodes & 0x1fff == 0 && Instant::now() >= deadline) {
                return Err(Error::BudgetExhausted {
                    nodes: *nodes,
                    infeasible: Vec::new(),
                });
            }
            *nodes += 1;
            let ok = g.neighbors(v).iter().all(|&u| colors[u] != c)
                && through[v].iter().all(|p| {
                    let cs = p.map(|x| if x == v { c } else { colors[x] });
                    cs.iter().any(|&x| x == 0) || !at_most_two_distinct(cs)
                });
            if ok {
                colors[v] = c;
                rec(g, through, k, v + 1, colors, nodes, budget, deadline, out)?;
                colors[v] = 0;
            }
        }
        Ok(())
    }

    rec(
        g,
        &through,
        k,
        0,
        &mut colors,
        &mut nodes,
        opts.node_budget,
        deadline,
        &mut out,
    )?;

    if !dedup {
        return Ok(out);
    }
    let mut reps: Vec<Coloring> = Vec::new();
    for cand in out {
        let mut fresh = true;
        for rep in &reps {
            if colored_isomorphic(g, &cand, g, rep)?.is_some() {
                fresh = false;
                break;
            }
        }
        if fresh {
            reps.push(cand);
        }
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;
    use crate::search::find_bicolored_p3;

    fn all(g: &Graph, k: u32) -> Vec<Coloring> {
        enumerate_star_colorings(g, k, false, &SolveOptions::default()).unwrap()
    }

    #[test]
    fn triangle_with_three_colors_gives_all_bijections() {
        let got = all(&cycle(3).unwrap(), 3);
        let want: Vec<Vec<u32>> = vec![
            vec![1, 2, 3],
            vec![1, 3, 2],
            vec![2, 1, 3],
            vec![2, 3, 1],
            vec![3, 1, 2],
            vec![3, 2, 1],
        ];
        assert_eq!(
            got.iter().map(|c| c.as_slice().to_vec()).collect::<Vec<_>>(),
            want
        );
    }

    #[test]
    fn c5_admits_no_three_star_coloring() {
        assert!(all(&cycle(5).unwrap(), 3).is_empty());
    }

    #[test]
    fn three_star_colorings_of_c7_all_contain_a_bicolored_p3() {
        let g = cycle(7).unwrap();
        let sols = all(&g, 3);
        assert!(!sols.is_empty());
        for c in &sols {
            assert!(find_bicolored_p3(&g, c).unwrap().is_some());
        }
    }

    #[test]
    fn dedup_keeps_lexicographically_least_representatives() {
        let g = cycle(3).unwrap();
        let reps = enumerate_star_colorings(&g, 3, true, &SolveOptions::default()).unwrap();
        // all six bijections on a triangle are one colored-isomorphism class
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].as_slice(), &[1, 2, 3]);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let opts = SolveOptions {
            node_budget: 5,
            ..SolveOptions::default()
        };
        assert!(matches!(
            enumerate_star_colorings(&cycle(6).unwrap(), 3, false, &opts),
            Err(Error::BudgetExhausted { .. })
        ));
    }
}
