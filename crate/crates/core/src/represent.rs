//! Vector hereditary collections of superboolean matrices and the
//! constructions representing a hereditary collection by a matrix.
//!
//! A column set `X` of a matrix is independent when some `|X|` rows cut out
//! a nonsingular submatrix on `X`. The constructions here produce matrices
//! whose independent column sets are exactly those of a given collection.

use crate::error::{Error, Result};
use crate::field::FieldMatrix;
use crate::graphs::BipartiteGraph;
use crate::hereditary::HereditaryCollection;
use crate::matrix::SBMatrix;
use crate::semiring::SBElem;
use crate::subset::{ElementSet, MAX_GROUND};

use SBElem::{Ghost, One, Zero};

/// Ground-set limit for [`min_rows`].
pub const MIN_ROWS_GROUND_LIMIT: usize = 5;

/// Row-count cap limit for [`min_rows`].
pub const MIN_ROWS_CAP_LIMIT: usize = 4;

/// A matrix read as a representation of the collection on its columns.
/// Boolean representations carry no ghost entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    matrix: SBMatrix,
    boolean: bool,
}

impl Representation {
    pub fn new(matrix: SBMatrix) -> Self {
        Representation {
            matrix,
            boolean: false,
        }
    }

    /// A boolean-flagged representation; rejects ghost entries.
    pub fn boolean(matrix: SBMatrix) -> Result<Self> {
        if let Some((row, col)) = matrix.first_ghost() {
            return Err(Error::GhostEntry { row, col });
        }
        Ok(Representation {
            matrix,
            boolean: true,
        })
    }

    pub fn matrix(&self) -> &SBMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> SBMatrix {
        self.matrix
    }

    pub fn is_boolean(&self) -> bool {
        self.boolean
    }

    pub fn ground_size(&self) -> usize {
        self.matrix.cols()
    }

    pub fn vector_hc(&self) -> HereditaryCollection {
        vector_hc(&self.matrix)
    }
}

/// The collection of column sets admitting a nonsingular row-selected
/// submatrix.
pub fn vector_hc(a: &SBMatrix) -> HereditaryCollection {
    assert!(a.cols() <= MAX_GROUND);
    HereditaryCollection::from_predicate(a.cols(), |x| a.columns_independent(x))
}

/// True iff the representation's vector collection is `h`.
pub fn verify(r: &Representation, h: &HereditaryCollection) -> Result<bool> {
    if r.ground_size() != h.ground_size() {
        return Err(Error::GroundSizeMismatch {
            left: r.ground_size(),
            right: h.ground_size(),
        });
    }
    Ok(r.vector_hc() == *h)
}

/// Block for a basis `J` of size `k`: on the `J` columns a lower triangular
/// matrix with `1` on the diagonal, `0` above and `v` below; `v` elsewhere.
fn basis_block(n: usize, basis: ElementSet) -> Vec<Vec<SBElem>> {
    let cols = basis.to_vec();
    (0..cols.len())
        .map(|i| {
            let mut row = vec![Ghost; n];
            for (k, &c) in cols.iter().enumerate() {
                row[c] = match k.cmp(&i) {
                    std::cmp::Ordering::Less => Ghost,
                    std::cmp::Ordering::Equal => One,
                    std::cmp::Ordering::Greater => Zero,
                };
            }
            row
        })
        .collect()
}

/// Stacks one triangular block per basis, in lexicographic basis order.
/// `{∅}` on a nonempty ground set gives a single ghost row.
pub fn represent_from_bases(h: &HereditaryCollection) -> Representation {
    let n = h.ground_size();
    let mut rows: Vec<Vec<SBElem>> = h
        .bases()
        .iter()
        .flat_map(|&b| basis_block(n, b))
        .collect();
    if rows.is_empty() && n > 0 {
        rows.push(vec![Ghost; n]);
    }
    Representation::new(SBMatrix::from_rows(rows, n).expect("rows have length n"))
}

/// The `m × m` circuit block: `1` on the diagonal, `v` on the superdiagonal
/// and in the bottom-left corner, `0` elsewhere. For `m = 1` it is `[v]`.
pub fn circuit_block(m: usize) -> SBMatrix {
    let mut a = SBMatrix::zeros(m, m);
    if m == 1 {
        a.set(0, 0, Ghost);
        return a;
    }
    for i in 0..m {
        a.set(i, i, One);
        a.set(i, (i + 1) % m, Ghost);
    }
    a
}

/// True iff every basis lies inside some circuit.
pub fn bases_in_circuits(h: &HereditaryCollection) -> bool {
    let circuits = h.circuits();
    h.bases()
        .iter()
        .all(|b| circuits.iter().any(|c| b.is_subset(*c)))
}

/// Stacks one circuit block per circuit, in lexicographic circuit order.
/// Requires every basis to lie in a circuit.
pub fn represent_from_circuits(h: &HereditaryCollection) -> Result<Representation> {
    let n = h.ground_size();
    let circuits = h.circuits();
    if let Some(b) = h
        .bases()
        .iter()
        .find(|b| !circuits.iter().any(|c| b.is_subset(*c)))
    {
        return Err(Error::BasisNotInCircuit(b.to_string()));
    }
    let mut rows = Vec::new();
    for c in &circuits {
        let cols = c.to_vec();
        let block = circuit_block(cols.len());
        for i in 0..cols.len() {
            let mut row = vec![Ghost; n];
            for (k, &col) in cols.iter().enumerate() {
                row[col] = block.get(i, k);
            }
            rows.push(row);
        }
    }
    Ok(Representation::new(
        SBMatrix::from_rows(rows, n).expect("rows have length n"),
    ))
}

/// Boolean representation of the vector matroid of a field matrix: one
/// block per basis, each the matrix row-reduced to the identity on that
/// basis with every nonzero entry replaced by `1`.
pub fn boolean_from_field(a: &FieldMatrix) -> Result<Representation> {
    let reduced = a.drop_dependent_rows();
    let n = reduced.cols();
    let mut stacked = SBMatrix::zeros(0, n);
    if reduced.rows() > 0 {
        for basis in reduced.bases()? {
            let block = reduced.reduce_basis_to_identity(basis)?.booleanize();
            stacked = stacked.vstack(&block)?;
        }
    }
    Representation::boolean(stacked)
}

/// Block-diagonal sum with zero off-diagonal blocks.
pub fn direct_sum_rep(reps: &[Representation]) -> Representation {
    let rows: usize = reps.iter().map(|r| r.matrix.rows()).sum();
    let cols: usize = reps.iter().map(|r| r.matrix.cols()).sum();
    let mut out = SBMatrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for rep in reps {
        let m = &rep.matrix;
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(r0 + i, c0 + j, m.get(i, j));
            }
        }
        r0 += m.rows();
        c0 += m.cols();
    }
    Representation {
        matrix: out,
        boolean: reps.iter().all(|r| r.boolean),
    }
}

/// Drops repeated rows and rows without a `1`, keeping one row if nothing
/// would remain.
pub fn reduce_rows(r: &Representation) -> Representation {
    let m = &r.matrix;
    let mut kept: Vec<Vec<SBElem>> = Vec::new();
    for row in m.row_iter() {
        if row.contains(&One) && !kept.iter().any(|k| k == row) {
            kept.push(row.to_vec());
        }
    }
    if kept.is_empty() && m.rows() > 0 {
        kept.push(m.row(0).to_vec());
    }
    Representation {
        matrix: SBMatrix::from_rows(kept, m.cols()).expect("rows have length cols"),
        boolean: r.boolean,
    }
}

/// Naive row bound: `Σ|J|` over bases, or the smaller `Σ|C|` over circuits
/// when every basis lies in a circuit.
pub fn upper_bound_rows(h: &HereditaryCollection) -> usize {
    let by_bases: usize = h.bases().iter().map(|b| b.len()).sum();
    if bases_in_circuits(h) {
        let by_circuits: usize = h.circuits().iter().map(|c| c.len()).sum();
        by_bases.min(by_circuits)
    } else {
        by_bases
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    Boolean,
    SuperBoolean,
}

impl Alphabet {
    fn letters(self) -> &'static [SBElem] {
        match self {
            Alphabet::Boolean => &[Zero, One],
            Alphabet::SuperBoolean => &[Zero, One, Ghost],
        }
    }
}

/// Smallest `m ≤ cap` for which some `m × n` matrix over the alphabet
/// represents `h`, with such a matrix. Requires `n ≤ 5` and `cap ≤ 4`.
pub fn min_rows(
    h: &HereditaryCollection,
    alphabet: Alphabet,
    cap: usize,
) -> Result<Option<(usize, Representation)>> {
    let n = h.ground_size();
    if n > MIN_ROWS_GROUND_LIMIT {
        return Err(Error::GroundTooLarge {
            found: n,
            limit: MIN_ROWS_GROUND_LIMIT,
        });
    }
    if cap > MIN_ROWS_CAP_LIMIT {
        return Err(Error::LimitExceeded(format!(
            "row cap {cap} exceeds {MIN_ROWS_CAP_LIMIT}"
        )));
    }
    let wrap = |m: SBMatrix| match alphabet {
        Alphabet::Boolean => Representation::boolean(m).expect("boolean alphabet"),
        Alphabet::SuperBoolean => Representation::new(m),
    };
    if h.rank() == 0 {
        return Ok(Some((0, wrap(SBMatrix::zeros(0, n)))));
    }
    // rows without a 1 never take part in a witness
    let candidates: Vec<Vec<SBElem>> = all_words(alphabet.letters(), n)
        .into_iter()
        .filter(|w| w.contains(&One))
        .collect();
    let circuits = h.circuits();
    for m in h.rank()..=cap {
        let mut chosen = Vec::with_capacity(m);
        if let Some(a) = search_rows(h, &circuits, &candidates, m, 0, &mut chosen) {
            return Ok(Some((m, wrap(a))));
        }
    }
    Ok(None)
}

fn all_words(letters: &[SBElem], n: usize) -> Vec<Vec<SBElem>> {
    let mut words = vec![Vec::new()];
    for _ in 0..n {
        words = words
            .into_iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    words
}

/// Depth-first search over strictly increasing candidate indices. Adding a
/// row never makes a column set dependent, so a partial matrix in which some
/// circuit is already independent is pruned.
fn search_rows(
    h: &HereditaryCollection,
    circuits: &[ElementSet],
    candidates: &[Vec<SBElem>],
    m: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> Option<SBMatrix> {
    let n = h.ground_size();
    let current = SBMatrix::from_rows(
        chosen.iter().map(|&i| candidates[i].clone()).collect(),
        n,
    )
    .expect("rows have length n");
    if circuits.iter().any(|&c| current.columns_independent(c)) {
        return None;
    }
    if chosen.len() == m {
        return (vector_hc(&current) == *h).then_some(current);
    }
    for i in start..candidates.len() {
        if candidates.len() - i < m - chosen.len() {
            break;
        }
        chosen.push(i);
        let found = search_rows(h, circuits, candidates, m, i + 1, chosen);
        chosen.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Right-vertex sets `X` admitting a unique perfect matching onto some set
/// of left vertices.
pub fn unique_matching_hc(b: &BipartiteGraph) -> HereditaryCollection {
    assert!(b.right() <= MAX_GROUND);
    HereditaryCollection::from_predicate(b.right(), |x| b.has_unique_matching_from(x))
}

/// The `(n-1) × n` boolean matrix representing `U_{2,n}`: row `i` has `0`
/// in column `i` and `1` elsewhere, and the last column is all `1`.
pub fn uniform_rank_two_matrix(n: usize) -> SBMatrix {
    assert!(n >= 3);
    let rows = (0..n - 1)
        .map(|i| (0..n).map(|j| SBElem::from_bool(j != i)).collect())
        .collect();
    SBMatrix::from_rows(rows, n).expect("rows have length n")
}
