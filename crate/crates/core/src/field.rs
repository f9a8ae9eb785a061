//! Exact linear algebra over prime fields `GF(p)` with `p ≤ 97`, and the
//! vector matroids of field matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::hereditary::HereditaryCollection;
use crate::subset::{k_subsets, ElementSet, MAX_GROUND};

/// Largest supported modulus.
pub const MAX_MODULUS: u32 = 97;

/// Column-count limit for basis enumeration in [`FieldMatrix::bases`].
pub const BASIS_ENUMERATION_LIMIT: usize = 12;

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn check_modulus(p: u32) -> Result<()> {
    if p <= MAX_MODULUS && is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidModulus(p))
    }
}

/// An element of `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GFElem {
    residue: u32,
    modulus: u32,
}

impl GFElem {
    pub fn new(residue: u32, modulus: u32) -> Result<Self> {
        check_modulus(modulus)?;
        if residue >= modulus {
            return Err(Error::ResidueOutOfRange {
                value: residue,
                modulus,
            });
        }
        Ok(GFElem { residue, modulus })
    }

    pub fn residue(self) -> u32 {
        self.residue
    }

    pub fn modulus(self) -> u32 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        (!self.is_zero()).then(|| GFElem {
            residue: inverse(self.residue, self.modulus),
            modulus: self.modulus,
        })
    }
}

impl std::ops::Add for GFElem {
    type Output = Self;

    fn add(self, other: Self) -> Self {
        GFElem {
            residue: (self.residue + other.residue) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Neg for GFElem {
    type Output = Self;

    fn neg(self) -> Self {
        GFElem {
            residue: (self.modulus - self.residue) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl std::ops::Mul for GFElem {
    type Output = Self;

    fn mul(self, other: Self) -> Self {
        GFElem {
            residue: self.residue * other.residue % self.modulus,
            modulus: self.modulus,
        }
    }
}

fn inverse(a: u32, p: u32) -> u32 {
    pow_mod(a, p - 2, p)
}

fn pow_mod(mut base: u32, mut exp: u32, p: u32) -> u32 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    modulus: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl FieldMatrix {
    pub fn new(modulus: u32, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        check_modulus(modulus)?;
        assert_eq!(data.len(), rows * cols, "data length must be rows * cols");
        if let Some(&value) = data.iter().find(|&&v| v >= modulus) {
            return Err(Error::ResidueOutOfRange { value, modulus });
        }
        Ok(FieldMatrix {
            modulus,
            rows,
            cols,
            data,
        })
    }

    pub fn from_rows(modulus: u32, rows: &[Vec<u32>], cols: usize) -> Result<Self> {
        for (index, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    index,
                    expected: cols,
                    found: row.len(),
                });
            }
        }
        Self::new(modulus, rows.len(), cols, rows.concat())
    }

    pub fn zeros(modulus: u32, rows: usize, cols: usize) -> Result<Self> {
        Self::new(modulus, rows, cols, vec![0; rows * cols])
    }

    pub fn identity(modulus: u32, n: usize) -> Result<Self> {
        let mut m = Self::zeros(modulus, n, n)?;
        for i in 0..n {
            m.data[i * n + i] = 1 % modulus;
        }
        Ok(m)
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn elem(&self, i: usize, j: usize) -> GFElem {
        GFElem {
            residue: self.get(i, j),
            modulus: self.modulus,
        }
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column_submatrix(&self, cols: ElementSet) -> FieldMatrix {
        let keep = cols.to_vec();
        let data = (0..self.rows)
            .flat_map(|i| keep.iter().map(move |&j| self.get(i, j)))
            .collect();
        FieldMatrix {
            modulus: self.modulus,
            rows: self.rows,
            cols: keep.len(),
            data,
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> FieldMatrix {
        let data = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| self.get(i, j)))
            .collect();
        FieldMatrix {
            modulus: self.modulus,
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    /// Reduced row echelon form and its pivot columns. Pivots are taken
    /// from the first nonzero entry scanning rows top to bottom.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let p = self.modulus;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pivot) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pivot);
            let inv = inverse(m.get(r, c), p);
            m.scale_row(r, inv);
            for i in 0..m.rows {
                let f = m.get(i, c);
                if i != r && f != 0 {
                    m.add_row_multiple(i, r, p - f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, i: usize, factor: u32) {
        let p = self.modulus;
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = *v * factor % p;
        }
    }

    /// `row[target] += factor * row[source]`.
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: u32) {
        let p = self.modulus;
        for j in 0..self.cols {
            let s = self.data[source * self.cols + j];
            let v = &mut self.data[target * self.cols + j];
            *v = (*v + factor * s) % p;
        }
    }

    pub fn gf_rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by elimination; `NonSquare` for rectangular input.
    pub fn determinant(&self) -> Result<u32> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let p = self.modulus;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1 % p;
        for c in 0..n {
            let Some(pivot) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return Ok(0);
            };
            if pivot != c {
                m.swap_rows(c, pivot);
                det = (p - det) % p;
            }
            let d = m.get(c, c);
            det = det * d % p;
            let inv = inverse(d, p);
            for i in c + 1..n {
                let f = m.get(i, c) * inv % p;
                if f != 0 {
                    m.add_row_multiple(i, c, p - f);
                }
            }
        }
        Ok(det)
    }

    pub fn columns_independent(&self, cols: ElementSet) -> bool {
        self.column_submatrix(cols).gf_rank() == cols.len()
    }

    /// The vector matroid on the columns.
    pub fn vector_matroid(&self) -> HereditaryCollection {
        assert!(self.cols <= MAX_GROUND);
        HereditaryCollection::from_predicate(self.cols, |x| self.columns_independent(x))
    }

    /// Rank-sized independent column sets in lexicographic order.
    pub fn bases(&self) -> Result<Vec<ElementSet>> {
        if self.cols > BASIS_ENUMERATION_LIMIT {
            return Err(Error::GroundTooLarge {
                found: self.cols,
                limit: BASIS_ENUMERATION_LIMIT,
            });
        }
        let r = self.gf_rank();
        Ok(k_subsets(self.cols, r)
            .filter(|&j| self.columns_independent(j))
            .collect())
    }

    /// Row-reduces so that the columns `basis` form the identity. The
    /// input must have full row rank equal to `|basis|`, with `basis`
    /// independent.
    pub fn reduce_basis_to_identity(&self, basis: ElementSet) -> Result<FieldMatrix> {
        let rank = self.gf_rank();
        if basis.max().is_some_and(|e| e >= self.cols) {
            return Err(Error::ElementOutOfRange {
                element: basis.max().unwrap() + 1,
                ground: self.cols,
            });
        }
        if basis.len() != rank || rank != self.rows || !self.columns_independent(basis) {
            return Err(Error::NotABasis(basis.to_string()));
        }
        let p = self.modulus;
        let mut m = self.clone();
        for (r, c) in basis.iter().enumerate() {
            let pivot = (r..m.rows)
                .find(|&i| m.get(i, c) != 0)
                .expect("independent columns have a pivot");
            m.swap_rows(r, pivot);
            let inv = inverse(m.get(r, c), p);
            m.scale_row(r, inv);
            for i in 0..m.rows {
                let f = m.get(i, c);
                if i != r && f != 0 {
                    m.add_row_multiple(i, r, p - f);
                }
            }
        }
        Ok(m)
    }

    /// Row-reduces and deletes zero rows, leaving `rank` rows.
    pub fn drop_dependent_rows(&self) -> FieldMatrix {
        let (reduced, pivots) = self.rref();
        let rows = pivots.len();
        FieldMatrix {
            modulus: self.modulus,
            rows,
            cols: self.cols,
            data: reduced.data[..rows * self.cols].to_vec(),
        }
    }

    /// Every nonzero entry becomes `1`.
    pub fn booleanize(&self) -> crate::matrix::SBMatrix {
        let data = self
            .data
            .iter()
            .map(|&v| crate::semiring::SBElem::from_bool(v != 0))
            .collect();
        crate::matrix::SBMatrix::new(self.rows, self.cols, data).expect("shape is consistent")
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GF({}) {}x{}", self.modulus, self.rows, self.cols)?;
        fmt::Display::fmt(self, f)
    }
}
