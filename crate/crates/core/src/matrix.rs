//! Dense matrices with polynomial entries.
//!
//! Rows are elements of a free module, so a product `A * B` is the row-vector
//! composition: row `i` of `A` is sent to `sum_j A[i][j] * row_j(B)`.

use std::fmt::{self, Display};

use crate::freealg::{Alphabet, Monomial, Poly};
use crate::scalar::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix<M, K> {
    nrows: usize,
    ncols: usize,
    entries: Vec<Poly<M, K>>,
}

impl<M: Monomial, K: Field> PolyMatrix<M, K> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        PolyMatrix {
            nrows,
            ncols,
            entries: vec![Poly::zero(); nrows * ncols],
        }
    }

    /// Panics when the rows have different lengths.
    pub fn from_rows(ncols: usize, rows: Vec<Vec<Poly<M, K>>>) -> Self {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged matrix row");
            entries.extend(r);
        }
        PolyMatrix {
            nrows,
            ncols,
            entries,
        }
    }

    /// `p` times the `n x n` identity.
    pub fn scalar_identity(n: usize, p: &Poly<M, K>) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly<M, K> {
        &self.entries[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly<M, K>) {
        self.entries[i * self.ncols + j] = p;
    }

    pub fn row(&self, i: usize) -> &[Poly<M, K>] {
        &self.entries[i * self.ncols..(i + 1) * self.ncols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Poly<M, K>]> {
        (0..self.nrows).map(move |i| self.row(i))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    /// Positions and values of the nonzero entries, row-major.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Poly<M, K>)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(move |(k, e)| (k / self.ncols.max(1), k % self.ncols.max(1), e))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.ncols, rhs.nrows, "matrix product shape mismatch");
        let mut out = Self::zeros(self.nrows, rhs.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.ncols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.ncols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert!(self.nrows == rhs.nrows && self.ncols == rhs.ncols, "matrix sum shape mismatch");
        PolyMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(|p| -p)
    }

    pub fn scale(&self, c: &K) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Entrywise image, possibly into another monomial type.
    pub fn map<N: Monomial>(&self, mut f: impl FnMut(&Poly<M, K>) -> Poly<N, K>) -> PolyMatrix<N, K> {
        PolyMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }

    /// `[[a, b], [c, d]]`; shapes must agree.
    pub fn block(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        assert!(a.nrows == b.nrows && c.nrows == d.nrows, "block rows mismatch");
        assert!(a.ncols == c.ncols && b.ncols == d.ncols, "block columns mismatch");
        let nrows = a.nrows + c.nrows;
        let ncols = a.ncols + b.ncols;
        let mut m = Self::zeros(nrows, ncols);
        for (src, r0, c0) in [(a, 0, 0), (b, 0, a.ncols), (c, a.nrows, 0), (d, a.nrows, a.ncols)] {
            for i in 0..src.nrows {
                for j in 0..src.ncols {
                    m.set(r0 + i, c0 + j, src.get(i, j).clone());
                }
            }
        }
        m
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn sub_block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut m = Self::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                m.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        m
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> MatrixDisplay<'a, M, K> {
        MatrixDisplay { m: self, alphabet }
    }

    /// Entries as strings, row by row.
    pub fn to_strings(&self, alphabet: &Alphabet) -> Vec<Vec<String>> {
        self.rows()
            .map(|r| r.iter().map(|p| p.display(alphabet).to_string()).collect())
            .collect()
    }
}

impl<M: fmt::Debug, K: fmt::Debug> fmt::Debug for PolyMatrix<M, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.entries.chunks(self.ncols.max(1)))
            .finish()
    }
}

pub struct MatrixDisplay<'a, M, K> {
    m: &'a PolyMatrix<M, K>,
    alphabet: &'a Alphabet,
}

impl<M: Monomial, K: Field> Display for MatrixDisplay<'_, M, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.m.rows() {
            write!(f, "[")?;
            for (j, p) in r.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", p.display(self.alphabet))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::NCPoly;
    use crate::scalar::Rational;

    fn g(l: u8) -> NCPoly<Rational> {
        NCPoly::generator(l)
    }

    #[test]
    fn product_is_row_composition() {
        // (x, y) * (y; -x) = xy - yx
        let a = PolyMatrix::from_rows(2, vec![vec![g(0), g(1)]]);
        let b = PolyMatrix::from_rows(1, vec![vec![g(1)], vec![-g(0)]]);
        let p = a.mul(&b);
        assert_eq!(p.get(0, 0), &(&(&g(0) * &g(1)) - &(&g(1) * &g(0))));
    }

    #[test]
    fn blocks_round_trip() {
        let a = PolyMatrix::from_rows(1, vec![vec![g(0)]]);
        let z = PolyMatrix::zeros(1, 1);
        let i = PolyMatrix::scalar_identity(1, &g(1));
        let m = PolyMatrix::block(&a, &z, &z, &i);
        assert_eq!(m.sub_block(1, 2, 1, 2), i);
        assert_eq!(m.sub_block(0, 1, 0, 1), a);
        assert!(m.sub_block(0, 1, 1, 2).is_zero());
    }
}
