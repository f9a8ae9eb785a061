//! Brute-force oracles shared by the integration tests. None of them use the
//! library's own algorithms beyond plain element arithmetic.

#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sbrep::subset::k_subsets;
use sbrep::{ElementSet, HereditaryCollection, SBElem, SBMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, alphabet: &[SBElem]) -> SBMatrix {
    let data = (0..rows * cols)
        .map(|_| alphabet[rng.gen_range(0..alphabet.len())])
        .collect();
    SBMatrix::new(rows, cols, data).unwrap()
}

/// Every `rows × cols` matrix over the alphabet.
pub fn all_matrices(rows: usize, cols: usize, alphabet: &[SBElem]) -> Vec<SBMatrix> {
    if rows * cols == 0 {
        return vec![SBMatrix::zeros(rows, cols)];
    }
    (0..rows * cols)
        .map(|_| alphabet.iter().copied())
        .multi_cartesian_product()
        .map(|data| SBMatrix::new(rows, cols, data).unwrap())
        .collect()
}

pub const SB: [SBElem; 3] = [SBElem::Zero, SBElem::One, SBElem::Ghost];
pub const BOOL: [SBElem; 2] = [SBElem::Zero, SBElem::One];

/// Permanent as the sum over all permutations.
pub fn permanent_by_permutations(a: &SBMatrix) -> SBElem {
    let n = a.rows();
    assert_eq!(n, a.cols());
    (0..n)
        .permutations(n)
        .map(|pi| (0..n).map(|j| a.get(pi[j], j)).product::<SBElem>())
        .sum()
}

/// Rows dependent: some nonempty subset of rows sums to a vector with no
/// tangible coordinate.
pub fn rows_dependent_by_sums(a: &SBMatrix) -> bool {
    let (m, n) = (a.rows(), a.cols());
    (1u64..1 << m).any(|mask| {
        (0..n).all(|j| {
            let s: SBElem = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| a.get(i, j)).sum();
            s != SBElem::One
        })
    })
}

/// Some `k` rows share at least `n + 1 - k` all-zero columns.
pub fn has_rank_defect(a: &SBMatrix) -> bool {
    let n = a.rows();
    (1..=n).any(|k| {
        (0..n).combinations(k).any(|rows| {
            let zero_cols = (0..n)
                .filter(|&j| rows.iter().all(|&i| a.get(i, j) == SBElem::Zero))
                .count();
            zero_cols >= n + 1 - k
        })
    })
}

/// Column set independent: some row selection gives permanent exactly 1.
pub fn columns_independent_by_permanents(a: &SBMatrix, x: ElementSet) -> bool {
    let cols = x.to_vec();
    (0..a.rows())
        .combinations(cols.len())
        .any(|rows| permanent_by_permutations(&a.submatrix(&rows, &cols)) == SBElem::One)
}

/// Collection of column sets, by permanents of every square submatrix.
pub fn vector_hc_by_permanents(a: &SBMatrix) -> HereditaryCollection {
    let n = a.cols();
    let sets: Vec<ElementSet> = ElementSet::full(n)
        .subsets()
        .filter(|&x| columns_independent_by_permanents(a, x))
        .collect();
    HereditaryCollection::from_independents(n, &sets).unwrap()
}

/// The augmentation axiom checked over every pair of independent sets.
pub fn matroid_by_augmentation(h: &HereditaryCollection) -> bool {
    let sets = h.independent_sets();
    sets.iter().all(|i| {
        sets.iter()
            .filter(|j| i.len() == j.len() + 1)
            .all(|j| i.difference(*j).iter().any(|x| h.contains(j.with(x))))
    })
}

/// A random collection on `n` elements: the downward closure of a few
/// random subsets.
pub fn random_collection(rng: &mut impl Rng, n: usize) -> HereditaryCollection {
    let count = rng.gen_range(1..=6);
    let sets: Vec<ElementSet> = (0..count)
        .map(|_| ElementSet::from_bits(rng.gen_range(0..1u64 << n)))
        .collect();
    HereditaryCollection::from_independents(n, &sets).unwrap()
}

/// Edge sets of spanning trees: `|V| - 1` edges reaching every vertex.
pub fn spanning_trees(vertices: usize, edges: &[(usize, usize)]) -> Vec<ElementSet> {
    if vertices == 0 {
        return vec![ElementSet::EMPTY];
    }
    k_subsets(edges.len(), vertices - 1)
        .filter(|t| {
            let mut seen = vec![false; vertices];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(u) = stack.pop() {
                for j in t.iter() {
                    let (a, b) = edges[j];
                    for (x, y) in [(a, b), (b, a)] {
                        if x == u && !seen[y] {
                            seen[y] = true;
                            stack.push(y);
                        }
                    }
                }
            }
            seen.iter().all(|&s| s)
        })
        .collect()
}

/// Acyclic edge sets by cycle-rank counting: a forest on `c` components
/// has `|V| - c` edges.
pub fn is_forest_by_components(vertices: usize, edges: &[(usize, usize)], x: ElementSet) -> bool {
    let mut label: Vec<usize> = (0..vertices).collect();
    for j in x.iter() {
        let (a, b) = edges[j];
        let (la, lb) = (label[a], label[b]);
        for l in label.iter_mut() {
            if *l == lb {
                *l = la;
            }
        }
    }
    let components = label.iter().unique().count();
    x.len() == vertices - components
}

/// Number of perfect matchings of columns `x` onto rows `y` of a boolean
/// matrix, by trying every bijection.
pub fn matchings_by_bijections(a: &SBMatrix, x: ElementSet, y: ElementSet) -> usize {
    let cols = x.to_vec();
    let rows = y.to_vec();
    if cols.len() != rows.len() {
        return 0;
    }
    rows.iter()
        .permutations(rows.len())
        .filter(|perm| cols.iter().zip(perm).all(|(&j, &&i)| a.get(i, j) == SBElem::One))
        .count()
}

/// Every graph on `vertices` vertices with at most `max_edges` edges, as
/// non-decreasing lists of endpoint pairs `u <= v` (multi-edges and loops
/// included).
pub fn all_graphs(vertices: usize, max_edges: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs: Vec<(usize, usize)> = (0..vertices)
        .flat_map(|u| (u..vertices).map(move |v| (u, v)))
        .collect();
    (0..=max_edges)
        .flat_map(|k| {
            (0..pairs.len())
                .combinations_with_replacement(k)
                .map(|idx| idx.into_iter().map(|i| pairs[i]).collect::<Vec<_>>())
                .collect::<Vec<_>>()
        })
        .collect()
}
