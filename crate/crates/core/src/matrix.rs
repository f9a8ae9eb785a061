//! Dense superboolean matrices: permanent, nonsingularity, triangular form,
//! markers, dependence of vectors, rank defect and rank.
//!
//! Nonsingularity (`per(A) = 1`) is decided without computing the
//! permanent. A row whose entries form a marker (a single `1`, every other
//! entry `0`) can be expanded along: `per(A) = per(A_{r,c})` where `c` is the
//! column of the `1`. A nonsingular matrix always has such a row, so greedily
//! deleting marker rows succeeds exactly when the matrix is nonsingular.
//!
//! The same elimination decides whether a set of columns of a rectangular
//! matrix admits a witness (a nonsingular square submatrix on those columns):
//! deleting a row and column at the same position of a triangular witness
//! leaves a triangular witness, so any marker row may be taken first.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::semiring::SBElem;
use crate::subset::ElementSet;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SBMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SBElem>,
}

/// A subrow with exactly one `1` and `0` everywhere else.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Marker {
    pub row: usize,
    /// Columns of the subrow, ascending.
    pub columns: Vec<usize>,
    /// Column holding the `1`.
    pub one_at: usize,
}

impl Marker {
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }
}

/// Row and column subsets selecting a nonsingular square submatrix. The
/// `i`-th row is paired with the `i`-th column, and in that order the
/// submatrix is lower triangular with `1` on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Witness {
    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

/// Row and column orders bringing a nonsingular matrix to triangular form:
/// row `i` of the result is `row_order[i]` of the input, likewise columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangularization {
    pub row_order: Vec<usize>,
    pub col_order: Vec<usize>,
}

/// `k` rows sharing `n + 1 - k` all-zero columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankDefect {
    pub k: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl SBMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<SBElem>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::LengthMismatch {
                index: 0,
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(SBMatrix { rows, cols, data })
    }

    pub fn filled(rows: usize, cols: usize, value: SBElem) -> Self {
        SBMatrix {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, SBElem::Zero)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, SBElem::One);
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed only when there are no rows.
    pub fn from_rows(rows: Vec<Vec<SBElem>>, cols: usize) -> Result<Self> {
        let width = rows.first().map_or(cols, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * width);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::LengthMismatch {
                    index: i,
                    expected: width,
                    found: row.len(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(SBMatrix {
            rows: rows.len(),
            cols: width,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> SBElem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: SBElem) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[SBElem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[SBElem]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn entries(&self) -> &[SBElem] {
        &self.data
    }

    /// No entry is `1^ν`.
    pub fn is_boolean(&self) -> bool {
        self.data.iter().all(|e| e.is_boolean())
    }

    /// Every entry lies in `{0, 1^ν}`.
    pub fn is_ghost_matrix(&self) -> bool {
        self.data.iter().all(|e| e.is_ghost_or_zero())
    }

    pub fn first_ghost(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|&e| e == SBElem::Ghost)
            .map(|p| (p / self.cols, p % self.cols))
    }

    pub fn transpose(&self) -> SBMatrix {
        let mut t = SBMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> SBMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j));
            }
        }
        SBMatrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Same matrix with columns restricted to `cols`, in ascending order.
    pub fn column_submatrix(&self, cols: ElementSet) -> SBMatrix {
        let rows: Vec<usize> = (0..self.rows).collect();
        self.submatrix(&rows, &cols.to_vec())
    }

    /// Deletes row `i` and column `j`.
    pub fn minor(&self, i: usize, j: usize) -> SBMatrix {
        let rows: Vec<usize> = (0..self.rows).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..self.cols).filter(|&c| c != j).collect();
        self.submatrix(&rows, &cols)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &SBMatrix) -> Result<SBMatrix> {
        if self.cols != other.cols {
            return Err(Error::LengthMismatch {
                index: self.rows,
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(SBMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// `Σ_π a_{π(1),1} ⋯ a_{π(n),n}` by enumerating permutations. Zero entries
    /// prune the search and the sum stops as soon as it reaches `1^ν`.
    pub fn permanent(&self) -> Result<SBElem> {
        self.require_square()?;
        let mut used = vec![false; self.rows];
        let mut acc = SBElem::Zero;
        self.permanent_walk(0, SBElem::One, &mut used, &mut acc);
        Ok(acc)
    }

    fn permanent_walk(&self, col: usize, prod: SBElem, used: &mut [bool], acc: &mut SBElem) {
        if *acc == SBElem::Ghost {
            return;
        }
        if col == self.cols {
            *acc = *acc + prod;
            return;
        }
        for i in 0..self.rows {
            let a = self.get(i, col);
            if used[i] || a == SBElem::Zero {
                continue;
            }
            used[i] = true;
            self.permanent_walk(col + 1, prod * a, used, acc);
            used[i] = false;
        }
    }

    /// `Σ_j a_{i,j} per(A_{i,j})`, with the minors' permanents themselves
    /// expanded recursively along their first row.
    pub fn permanent_minor_expansion(&self, i: usize) -> Result<SBElem> {
        self.require_square()?;
        if self.rows == 0 {
            return Ok(SBElem::One);
        }
        assert!(i < self.rows, "row {i} out of range");
        Ok((0..self.cols)
            .filter(|&j| self.get(i, j) != SBElem::Zero)
            .map(|j| self.get(i, j) * laplace(&self.minor(i, j)))
            .sum())
    }

    /// Greedy marker elimination over `rows × cols`. Returns the
    /// (row, column) pairs in elimination order once every column is used,
    /// or `None` if elimination gets stuck.
    fn eliminate(&self, rows: &[usize], cols: &[usize]) -> Option<Vec<(usize, usize)>> {
        let mut row_live: Vec<usize> = rows.to_vec();
        let mut col_live: Vec<usize> = cols.to_vec();
        let mut pairs = Vec::with_capacity(cols.len());
        while !col_live.is_empty() {
            let found = row_live.iter().enumerate().find_map(|(ri, &r)| {
                let mut one_at = None;
                for (ci, &c) in col_live.iter().enumerate() {
                    match self.get(r, c) {
                        SBElem::Zero => {}
                        SBElem::One if one_at.is_none() => one_at = Some(ci),
                        _ => return None,
                    }
                }
                one_at.map(|ci| (ri, ci))
            })?;
            let (ri, ci) = found;
            pairs.push((row_live.remove(ri), col_live.remove(ci)));
        }
        Some(pairs)
    }

    /// `per(A) = 1`, decided by greedy marker elimination.
    pub fn is_nonsingular(&self) -> Result<bool> {
        Ok(self.triangularize()?.is_some())
    }

    /// Row and column orders putting a nonsingular matrix in lower
    /// triangular form with unit diagonal; `None` when singular. The lowest
    /// indexed marker row is always taken first.
    pub fn triangularize(&self) -> Result<Option<Triangularization>> {
        self.require_square()?;
        let all: Vec<usize> = (0..self.rows).collect();
        Ok(self.eliminate(&all, &all).map(|pairs| Triangularization {
            row_order: pairs.iter().map(|p| p.0).collect(),
            col_order: pairs.iter().map(|p| p.1).collect(),
        }))
    }

    /// Lowest indexed full-width marker row of a nonsingular matrix.
    pub fn find_n_marker(&self) -> Result<Marker> {
        if !self.is_nonsingular()? {
            return Err(Error::Singular);
        }
        let columns: Vec<usize> = (0..self.cols).collect();
        (0..self.rows)
            .find_map(|r| {
                let row = self.row(r);
                let ones: Vec<usize> = (0..self.cols).filter(|&j| row[j] == SBElem::One).collect();
                let rest_zero = row.iter().all(|&e| e != SBElem::Ghost);
                (ones.len() == 1 && rest_zero).then(|| Marker {
                    row: r,
                    columns: columns.clone(),
                    one_at: ones[0],
                })
            })
            .ok_or(Error::Singular)
    }

    /// A witness for the columns `cols`, if one exists.
    pub fn column_witness(&self, cols: ElementSet) -> Option<Witness> {
        if cols.len() > self.rows {
            return None;
        }
        let rows: Vec<usize> = (0..self.rows).collect();
        self.eliminate(&rows, &cols.to_vec()).map(|pairs| Witness {
            rows: pairs.iter().map(|p| p.0).collect(),
            cols: pairs.iter().map(|p| p.1).collect(),
        })
    }

    /// The columns `cols` are independent in `𝕊𝔹^(m)`.
    pub fn columns_independent(&self, cols: ElementSet) -> bool {
        self.column_witness(cols).is_some()
    }

    /// Size of a largest nonsingular square submatrix. This equals both the
    /// row rank and the column rank.
    pub fn rank(&self) -> usize {
        let limit = self.rows.min(self.cols);
        let mut best = 0;
        self.rank_walk(ElementSet::EMPTY, 0, limit, &mut best);
        best
    }

    fn rank_walk(&self, current: ElementSet, next: usize, limit: usize, best: &mut usize) {
        *best = (*best).max(current.len());
        if *best == limit || current.len() + (self.cols - next) <= *best {
            return;
        }
        for c in next..self.cols {
            let candidate = current.with(c);
            if self.columns_independent(candidate) {
                self.rank_walk(candidate, c + 1, limit, best);
                if *best == limit {
                    return;
                }
            }
        }
    }

    /// Certificate of `per(A) = 0`: `k` rows that vanish on `n + 1 - k`
    /// common columns. `None` when the permanent is nonzero.
    pub fn rank_defect_condition(&self) -> Result<Option<RankDefect>> {
        self.require_square()?;
        let n = self.rows;
        let zero_cols = |r: usize| -> ElementSet {
            (0..n).filter(|&j| self.get(r, j) == SBElem::Zero).collect()
        };
        for k in 1..=n {
            let need = n + 1 - k;
            for rows in crate::subset::k_subsets(n, k) {
                let common = rows
                    .iter()
                    .fold(ElementSet::full(n), |acc, r| acc.intersection(zero_cols(r)));
                if common.len() >= need {
                    return Ok(Some(RankDefect {
                        k,
                        rows: rows.to_vec(),
                        cols: common.iter().take(need).collect(),
                    }));
                }
            }
        }
        Ok(None)
    }
}

fn laplace(a: &SBMatrix) -> SBElem {
    if a.rows == 0 {
        return SBElem::One;
    }
    (0..a.cols)
        .filter(|&j| a.get(0, j) != SBElem::Zero)
        .map(|j| a.get(0, j) * laplace(&a.minor(0, j)))
        .sum()
}

/// Whether `vs` are dependent: some nonempty `{0,1}` combination of them lies
/// in the ghost ideal coordinatewise. More vectors than coordinates are
/// always dependent; otherwise the vectors are independent exactly when the
/// matrix they form has a nonsingular maximal square submatrix.
pub fn vectors_dependent(vs: &[Vec<SBElem>]) -> Result<bool> {
    let Some(first) = vs.first() else {
        return Ok(false);
    };
    let n = first.len();
    for (i, v) in vs.iter().enumerate() {
        if v.len() != n {
            return Err(Error::LengthMismatch {
                index: i,
                expected: n,
                found: v.len(),
            });
        }
    }
    if vs.len() > n {
        return Ok(true);
    }
    let as_columns = SBMatrix::from_rows(vs.to_vec(), n)?.transpose();
    Ok(!as_columns.columns_independent(ElementSet::full(vs.len())))
}

impl fmt::Display for SBMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            let tokens: Vec<&str> = self.row(i).iter().map(|e| e.token()).collect();
            write!(f, "{}", tokens.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SBMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SBMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let tokens: Vec<&str> = self.row(i).iter().map(|e| e.token()).collect();
            write!(f, "{}", tokens.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Compact literal syntax: rows separated by `;`, entries by whitespace,
/// e.g. `"1 v; 0 1"`. The empty string is the `0 × 0` matrix.
impl FromStr for SBMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(SBMatrix::zeros(0, 0));
        }
        let rows = s
            .split(';')
            .enumerate()
            .map(|(i, line)| {
                line.split_whitespace()
                    .map(|t| {
                        SBElem::from_token(t)
                            .ok_or_else(|| Error::parse(i + 1, format!("bad scalar token {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SBMatrix::from_rows(rows, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use SBElem::*;

    fn m(s: &str) -> SBMatrix {
        s.parse().unwrap()
    }

    #[test]
    fn permanent_examples() {
        assert_eq!(m("1 1; 0 1").permanent().unwrap(), One);
        assert_eq!(m("1 1; 1 1").permanent().unwrap(), Ghost);
        assert_eq!(SBMatrix::identity(4).permanent().unwrap(), One);
        assert_eq!(SBMatrix::zeros(0, 0).permanent().unwrap(), One);
        assert_eq!(
            "1 0 1; 0 1".parse::<SBMatrix>().unwrap_err(),
            Error::LengthMismatch { index: 1, expected: 3, found: 2 }
        );
    }

    #[test]
    fn non_square_is_rejected() {
        let a = m("1 0 1; 0 1 1");
        assert_eq!(a.permanent(), Err(Error::NonSquare { rows: 2, cols: 3 }));
        assert!(a.is_nonsingular().is_err());
        assert!(a.rank_defect_condition().is_err());
    }

    #[test]
    fn minor_expansion_examples() {
        let i3 = SBMatrix::identity(3);
        assert_eq!(i3.permanent_minor_expansion(0).unwrap(), One);
        assert_eq!(m("v v; v v").permanent_minor_expansion(0).unwrap(), Ghost);
        assert_eq!(m("1 0; v 1").permanent_minor_expansion(0).unwrap(), One);
    }

    #[test]
    fn nonsingular_examples() {
        assert!(m("1 v; 0 1").is_nonsingular().unwrap());
        assert!(!m("1 1 0; v v v; 0 1 1").is_nonsingular().unwrap());
        let circulant = m("0 1 1; 1 0 1; 1 1 0");
        assert!(!circulant.is_nonsingular().unwrap());
        assert_eq!(circulant.permanent().unwrap(), Ghost);
        assert!(SBMatrix::zeros(0, 0).is_nonsingular().unwrap());
    }

    #[test]
    fn triangularize_examples() {
        let t = m("0 1; 1 v").triangularize().unwrap().unwrap();
        let a = m("0 1; 1 v").submatrix(&t.row_order, &t.col_order);
        assert_eq!(a, m("1 0; v 1"));
        assert_eq!(m("v 0; 0 1").triangularize().unwrap(), None);

        let lower = m("1 0 0; v 1 0; 1 0 1");
        let t = lower.triangularize().unwrap().unwrap();
        assert_eq!(t.row_order, vec![0, 1, 2]);
        assert_eq!(t.col_order, vec![0, 1, 2]);
    }

    #[test]
    fn triangular_form_shape() {
        let a = m("0 1 1; 1 1 v; 0 0 1");
        let t = a.triangularize().unwrap().unwrap();
        let b = a.submatrix(&t.row_order, &t.col_order);
        for i in 0..3 {
            assert_eq!(b.get(i, i), One);
            for j in i + 1..3 {
                assert_eq!(b.get(i, j), Zero);
            }
        }
    }

    #[test]
    fn n_marker_examples() {
        let mk = SBMatrix::identity(2).find_n_marker().unwrap();
        assert_eq!((mk.row, mk.one_at, mk.len()), (0, 0, 2));
        let mk = m("1 0 0; v 1 0; 1 1 1").find_n_marker().unwrap();
        assert_eq!(mk.row, 0);
        let mk = m("0 1; 1 v").find_n_marker().unwrap();
        assert_eq!((mk.row, mk.one_at), (0, 1));
        assert_eq!(m("1 1; 1 1").find_n_marker(), Err(Error::Singular));
    }

    #[test]
    fn dependence_examples() {
        let v = |s: &str| m(s).row(0).to_vec();
        assert!(vectors_dependent(&[v("0 1 1"), v("1 0 1"), v("1 1 0")]).unwrap());
        assert!(vectors_dependent(&[v("1 0 0"), v("v 0 v")]).unwrap());
        let rows: Vec<Vec<SBElem>> = SBMatrix::identity(4).row_iter().map(<[_]>::to_vec).collect();
        assert!(!vectors_dependent(&rows).unwrap());
        assert!(vectors_dependent(&[v("1 0"), v("0 1"), v("1 1")]).unwrap());
        assert_eq!(
            vectors_dependent(&[v("1 0"), v("1 0 1")]),
            Err(Error::LengthMismatch { index: 1, expected: 2, found: 3 })
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SBMatrix::identity(5).rank(), 5);
        assert_eq!(SBMatrix::filled(3, 4, Ghost).rank(), 0);
        let a = m("1 1 0; 0 1 1; 1 0 1");
        assert_eq!(a.rank(), 2);
        assert_eq!(a.transpose().rank(), 2);
        assert_eq!(SBMatrix::zeros(0, 0).rank(), 0);
        assert_eq!(m("1 0 v 1; 0 1 1 v").rank(), 2);
    }

    #[test]
    fn rank_defect_examples() {
        let d = m("0 0 1; 0 0 1; 1 1 1").rank_defect_condition().unwrap().unwrap();
        assert_eq!(d.k, 2);
        assert_eq!(d.rows, vec![0, 1]);
        assert_eq!(d.cols, vec![0, 1]);
        assert_eq!(m("0 0 1; 0 0 1; 1 1 1").permanent().unwrap(), Zero);

        let d = m("1 0; 1 0").rank_defect_condition().unwrap().unwrap();
        assert!(d.k <= 2);
        assert_eq!(SBMatrix::identity(3).rank_defect_condition().unwrap(), None);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(SBMatrix::identity(3).transpose(), SBMatrix::identity(3));
        assert_eq!(m("1 v; 0 1").transpose().permanent().unwrap(), One);
    }

    #[test]
    fn column_witness_is_triangular() {
        let a = m("1 1 0 1; 0 1 1 1; 0 0 1 1");
        let w = a.column_witness(ElementSet::from_labels(&[1, 2, 4])).unwrap();
        let sub = a.submatrix(&w.rows, &w.cols);
        assert_eq!(sub.permanent().unwrap(), One);
        assert!(a.column_witness(ElementSet::from_labels(&[1, 3, 4])).is_none());
    }
}
