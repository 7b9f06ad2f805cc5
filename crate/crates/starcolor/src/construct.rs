//! Closed-form results: the explicit 4-star-coloring of splitting graphs of
//! long cycles, and the chi_s formulas for cycles and their splitting graphs.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{cycle, splitting_graph, Graph};

/// The explicit 4-star-coloring of `splitting_graph(cycle(n))`, defined for
/// `n ≡ 1 (mod 3)`, `n >= 10`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourStarColoring {
    pub n: usize,
    /// Colors over the splitting graph under the usual labeling: vertex `i`
    /// is the cycle vertex `v_i`, vertex `n + i` its twin.
    pub coloring: Coloring,
}

impl FourStarColoring {
    /// The graph this coloring lives on.
    pub fn graph(&self) -> Graph {
        splitting_graph(&cycle(self.n).expect("n >= 10")).expect("base is nonempty")
    }
}

/// Builds the explicit coloring:
///
/// * cycle vertices `v_0..v_{n-8}` get the period-3 pattern 1, 2, 3 by index
///   mod 3; the remaining seven get the fixed tail
///   `v_{n-7}..v_{n-1} = 1, 2, 3, 4, 1, 3, 4`;
/// * twins: `v_0' = 3`, `v_i' = 4` for `1 <= i <= n-6`, `v_{n-5}' = 1`, and
///   `v_j' = 2` for `n-4 <= j <= n-1`.
///
/// Growing n by 3 only extends the period-3 prefix, so consecutive
/// constructions agree on the shared prefix. The rule domains partition the
/// vertex set; this is asserted at construction time.
pub fn four_star_coloring(n: usize) -> Result<FourStarColoring> {
    if n < 10 || n % 3 != 1 {
        // 4 and 7 satisfy the congruence but their splitting graphs need a
        // fifth color; the closed form starts at 10.
        return Err(Error::InvalidParameter(format!(
            "the explicit construction needs n ≡ 1 (mod 3) and n >= 10, got {n}"
        )));
    }
    let mut colors = vec![0u32; 2 * n];
    let set = |slot: &mut u32, c: u32| {
        assert_eq!(*slot, 0, "coloring rule domains overlap");
        *slot = c;
    };
    for i in 0..=(n - 8) {
        set(&mut colors[i], 1 + (i % 3) as u32);
    }
    set(&mut colors[n - 7], 1);
    set(&mut colors[n - 6], 2);
    set(&mut colors[n - 5], 3);
    set(&mut colors[n - 4], 4);
    set(&mut colors[n - 3], 1);
    set(&mut colors[n - 2], 3);
    set(&mut colors[n - 1], 4);
    set(&mut colors[n], 3); // v_0'
    for i in 1..=(n - 6) {
        set(&mut colors[n + i], 4);
    }
    set(&mut colors[n + (n - 5)], 1);
    for j in (n - 4)..n {
        set(&mut colors[n + j], 2);
    }
    assert!(
        colors.iter().all(|&c| c != 0),
        "coloring rule domains must cover every vertex"
    );
    Ok(FourStarColoring {
        n,
        coloring: Coloring::new(colors)?,
    })
}

/// Star chromatic number of the cycle `C_n`: 4 when `n = 5`, otherwise 3.
pub fn chi_s_cycle(n: usize) -> Result<u32> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Ok(if n == 5 { 4 } else { 3 })
}

/// Star chromatic number of `splitting_graph(cycle(n))`: 5 when
/// `n ∈ {4, 5, 7}`, otherwise 4.
pub fn chi_s_splitting_cycle(n: usize) -> Result<u32> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    Ok(if matches!(n, 4 | 5 | 7) { 5 } else { 4 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_star_coloring;

    #[test]
    fn n_ten_matches_the_expected_vectors() {
        let c = four_star_coloring(10).unwrap();
        assert_eq!(
            c.coloring.as_slice()[..10],
            [1, 2, 3, 1, 2, 3, 4, 1, 3, 4]
        );
        assert_eq!(
            c.coloring.as_slice()[10..],
            [3, 4, 4, 4, 4, 1, 2, 2, 2, 2]
        );
        assert!(is_star_coloring(&c.graph(), &c.coloring).unwrap());
    }

    #[test]
    fn invalid_lengths_are_rejected() {
        for n in [4, 7, 9, 11, 12] {
            assert!(
                matches!(four_star_coloring(n), Err(Error::InvalidParameter(_))),
                "n={n}"
            );
        }
    }

    #[test]
    fn n_thirteen_is_verifier_valid_with_four_colors() {
        let c = four_star_coloring(13).unwrap();
        assert!(is_star_coloring(&c.graph(), &c.coloring).unwrap());
        assert_eq!(
            c.coloring.used_colors().into_iter().collect::<Vec<_>>(),
            [1, 2, 3, 4]
        );
    }

    #[test]
    fn growing_n_extends_the_shared_prefix() {
        for n in (10..=31).step_by(3) {
            let small = four_star_coloring(n).unwrap();
            let big = four_star_coloring(n + 3).unwrap();
            for i in 0..=(n - 8) {
                assert_eq!(
                    small.coloring.color(i),
                    big.coloring.color(i),
                    "prefix diverges at v_{i} between n={n} and n={}",
                    n + 3
                );
            }
        }
    }

    #[test]
    fn formula_values() {
        assert_eq!(chi_s_cycle(5).unwrap(), 4);
        assert_eq!(chi_s_cycle(3).unwrap(), 3);
        assert_eq!(chi_s_cycle(100).unwrap(), 3);
        assert!(chi_s_cycle(2).is_err());

        assert_eq!(chi_s_splitting_cycle(4).unwrap(), 5);
        assert_eq!(chi_s_splitting_cycle(5).unwrap(), 5);
        assert_eq!(chi_s_splitting_cycle(7).unwrap(), 5);
        assert_eq!(chi_s_splitting_cycle(6).unwrap(), 4);
        assert_eq!(chi_s_splitting_cycle(13).unwrap(), 4);
        assert!(chi_s_splitting_cycle(2).is_err());
    }
}
