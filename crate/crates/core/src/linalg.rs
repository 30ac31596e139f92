//! Exact sparse linear algebra.
//!
//! Vectors are rows; a matrix acts by right multiplication, so the kernel of
//! `M` is `{ v : v * M = 0 }`. Pivots are always the leftmost nonzero entry.

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Sparse row vector: sorted `(column, value)` pairs, no stored zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparseVec<K> {
    entries: Vec<(usize, K)>,
}

impl<K: Field> Default for SparseVec<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Field> SparseVec<K> {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(i: usize) -> Self {
        SparseVec {
            entries: vec![(i, K::one())],
        }
    }

    /// Builds from unsorted entries, summing duplicates and dropping zeros.
    pub fn from_entries(mut entries: Vec<(usize, K)>) -> Self {
        entries.sort_by_key(|(c, _)| *c);
        let mut out: Vec<(usize, K)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match out.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn from_dense(values: &[K]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<K> {
        let mut out = vec![K::zero(); len];
        for (c, v) in &self.entries {
            out[*c] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, K)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<(usize, &K)> {
        self.entries.first().map(|(c, v)| (*c, v))
    }

    pub fn get(&self, col: usize) -> K {
        match self.entries.binary_search_by_key(&col, |(c, _)| *c) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => K::zero(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparseVec {
            entries: self
                .entries
                .iter()
                .map(|(i, v)| (*i, v.clone() * c.clone()))
                .collect(),
        }
    }

    /// `self + c * other`
    pub fn axpy(&self, c: &K, other: &Self) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.entries, &other.entries);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, b[j].1.clone() * c.clone()));
                j += 1;
            } else {
                let v = a[i].1.clone() + b[j].1.clone() * c.clone();
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    /// Entries with column in `[start, end)`, re-indexed from `start`.
    pub fn restrict(&self, start: usize, end: usize) -> Self {
        SparseVec {
            entries: self
                .entries
                .iter()
                .filter(|(c, _)| *c >= start && *c < end)
                .map(|(c, v)| (c - start, v.clone()))
                .collect(),
        }
    }

    pub fn shift(&self, offset: usize) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|(c, v)| (c + offset, v.clone())).collect(),
        }
    }

    fn normalize(&mut self) {
        if let Some((_, lc)) = self.entries.first() {
            if !lc.is_one() {
                let inv = lc.inv();
                for (_, v) in &mut self.entries {
                    *v = v.clone() * inv.clone();
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix<K> {
    ncols: usize,
    rows: Vec<SparseVec<K>>,
}

impl<K: Field> SparseMatrix<K> {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVec<K>>) -> Self {
        debug_assert!(rows
            .iter()
            .all(|r| r.entries.last().map_or(true, |(c, _)| *c < ncols)));
        SparseMatrix { ncols, rows }
    }

    pub fn from_dense(rows: &[Vec<K>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        SparseMatrix {
            ncols,
            rows: rows.iter().map(|r| SparseVec::from_dense(r)).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            ncols: n,
            rows: (0..n).map(SparseVec::unit).collect(),
        }
    }

    pub fn push_row(&mut self, row: SparseVec<K>) {
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    /// `v * self`
    pub fn apply(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut out = SparseVec::zero();
        for (i, c) in v.entries() {
            out = out.axpy(c, &self.rows[*i]);
        }
        out
    }
}

/// Row-echelon basis under construction. Every stored row is normalized
/// (leading entry one) and has a distinct pivot.
#[derive(Debug, Clone)]
pub struct Echelon<K> {
    ncols: usize,
    rows: Vec<SparseVec<K>>,
    pivot_row: Vec<u32>,
}

const NO_PIVOT: u32 = u32::MAX;

impl<K: Field> Echelon<K> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_row[col] != NO_PIVOT
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        let mut i = 0;
        while i < v.entries.len() {
            let (c, a) = &v.entries[i];
            let r = self.pivot_row[*c];
            if r == NO_PIVOT {
                i += 1;
                continue;
            }
            let a = -a.clone();
            // entries before position i are untouched: pivot rows only
            // extend to the right of their pivot
            v = v.axpy(&a, &self.rows[r as usize]);
        }
        v
    }

    /// Adds `v` if it is independent; returns whether it was.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        if r.is_zero() {
            return false;
        }
        r.normalize();
        let p = r.leading().unwrap().0;
        self.pivot_row[p] = self.rows.len() as u32;
        self.rows.push(r);
        true
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Fully reduced echelon rows, ascending by pivot.
    pub fn into_rref(self) -> Vec<SparseVec<K>> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| std::cmp::Reverse(r.leading().unwrap().0));
        let mut done = Echelon::new(self.ncols);
        for row in rows {
            let reduced = done.reduce(&row);
            let p = reduced.leading().unwrap().0;
            done.pivot_row[p] = done.rows.len() as u32;
            done.rows.push(reduced);
        }
        let mut out = done.rows;
        out.reverse();
        out
    }
}

/// Reduced row-echelon form and rank.
pub fn rref<K: Field>(m: &SparseMatrix<K>) -> (SparseMatrix<K>, usize) {
    let mut e = Echelon::new(m.ncols);
    for r in &m.rows {
        e.insert(r);
    }
    let rows = e.into_rref();
    let rank = rows.len();
    (SparseMatrix::from_rows(m.ncols, rows), rank)
}

pub fn rank<K: Field>(m: &SparseMatrix<K>) -> usize {
    let mut e = Echelon::new(m.ncols);
    for r in &m.rows {
        e.insert(r);
    }
    e.rank()
}

/// `{ v in K^rows : v * m = 0 }`
pub fn kernel_basis<K: Field>(m: &SparseMatrix<K>) -> Subspace<K> {
    let n = m.ncols;
    let mut e = Echelon::new(n + m.rows.len());
    let mut kernel = Vec::new();
    for (i, row) in m.rows.iter().enumerate() {
        let mut aug = row.entries.clone();
        aug.push((n + i, K::one()));
        let r = e.reduce(&SparseVec { entries: aug });
        let lead = r.leading().map(|(p, _)| p);
        match lead {
            Some(p) if p < n => {
                let mut r = r;
                r.normalize();
                e.pivot_row[p] = e.rows.len() as u32;
                e.rows.push(r);
            }
            _ => kernel.push(r.restrict(n, n + m.rows.len())),
        }
    }
    Subspace::from_vectors(m.rows.len(), kernel)
}

/// Subspace of `K^ambient`, held as a reduced echelon basis.
#[derive(Debug, Clone)]
pub struct Subspace<K> {
    ambient: usize,
    echelon: Echelon<K>,
}

impl<K: Field> Subspace<K> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            echelon: Echelon::new(ambient),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, (0..ambient).map(SparseVec::unit))
    }

    /// Span of the unit vectors `e_start .. e_end`.
    pub fn coordinate(ambient: usize, start: usize, end: usize) -> Self {
        Self::from_vectors(ambient, (start..end).map(SparseVec::unit))
    }

    pub fn from_vectors(ambient: usize, vectors: impl IntoIterator<Item = SparseVec<K>>) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            e.insert(&v);
        }
        Self::from_echelon(e)
    }

    pub fn from_echelon(e: Echelon<K>) -> Self {
        let ambient = e.ncols;
        let rows = e.into_rref();
        let mut echelon = Echelon::new(ambient);
        for r in rows {
            let p = r.leading().unwrap().0;
            echelon.pivot_row[p] = echelon.rows.len() as u32;
            echelon.rows.push(r);
        }
        Subspace { ambient, echelon }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Reduced echelon basis, ascending by pivot.
    pub fn basis(&self) -> &[SparseVec<K>] {
        &self.echelon.rows
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.echelon.contains(v)
    }

    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        self.echelon.reduce(v)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            Err(Error::AmbientMismatch(self.ambient, other.ambient))
        } else {
            Ok(())
        }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_vectors(
            self.ambient,
            self.basis().iter().chain(other.basis()).cloned(),
        ))
    }

    /// Intersection via the kernel of the stacked bases: `(a, b)` with
    /// `a*U + b*W = 0` gives `a*U` in both.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let stacked = SparseMatrix::from_rows(
            self.ambient,
            self.basis().iter().chain(other.basis()).cloned().collect(),
        );
        let ker = kernel_basis(&stacked);
        let du = self.dim();
        let u_only = SparseMatrix::from_rows(self.ambient, self.basis().to_vec());
        let vectors = ker.basis().iter().map(|k| u_only.apply(&k.restrict(0, du)));
        Ok(Self::from_vectors(self.ambient, vectors))
    }

    pub fn is_subspace_of(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(self.basis().iter().all(|v| other.contains(v)))
    }
}

impl<K: Field> PartialEq for Subspace<K> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis() == other.basis()
    }
}

impl<K: Field> Eq for Subspace<K> {}

/// `intersect(U, W)`
pub fn intersect<K: Field>(u: &Subspace<K>, w: &Subspace<K>) -> Result<Subspace<K>> {
    u.intersect(w)
}

/// `sum(U, W)`
pub fn sum<K: Field>(u: &Subspace<K>, w: &Subspace<K>) -> Result<Subspace<K>> {
    u.sum(w)
}

/// `member(v, U)`
pub fn member<K: Field>(v: &SparseVec<K>, u: &Subspace<K>) -> bool {
    u.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Gf101, Gf2, Rational};
    use num_traits::{One, Zero};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn axpy_by_zero_stores_no_zeros() {
        let u = SparseVec::<Gf101>::unit(0);
        let v = u.axpy(&Gf101::zero(), &SparseVec::unit(3));
        assert_eq!(v, u);
        let mut e = Echelon::new(4);
        e.insert(&u);
        assert!(e.contains(&v));
    }

    fn random_matrix(rng: &mut ChaCha8Rng, r: usize, c: usize, density: f64) -> Vec<Vec<Gf101>> {
        (0..r)
            .map(|_| {
                (0..c)
                    .map(|_| {
                        if rng.gen_bool(density) {
                            Gf101::new(rng.gen_range(0..101))
                        } else {
                            Gf101::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Textbook dense Gaussian elimination, used as an independent check.
    fn dense_rank(mut m: Vec<Vec<Gf101>>) -> usize {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else { continue };
            m.swap(rank, p);
            let inv = m[rank][col].inv();
            for r in 0..rows {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col] * inv;
                    for c in 0..cols {
                        let t = m[rank][c];
                        m[r][c] -= f * t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn kernel_of_zero_and_identity() {
        let z = SparseMatrix::<Rational>::from_dense(&[vec![Rational::zero()]]);
        assert_eq!(kernel_basis(&z).dim(), 1);
        let id = SparseMatrix::<Rational>::identity(4);
        assert_eq!(kernel_basis(&id).dim(), 0);
    }

    #[test]
    fn rank_nullity_against_dense_elimination() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let (r, c) = (rng.gen_range(1..12), rng.gen_range(1..12));
            let dense = random_matrix(&mut rng, r, c, 0.4);
            let m = SparseMatrix::from_dense(&dense);
            let (_, rk) = rref(&m);
            let ker = kernel_basis(&m);
            assert_eq!(rk, dense_rank(dense.clone()));
            assert_eq!(rk + ker.dim(), r);
            for v in ker.basis() {
                assert!(m.apply(v).is_zero());
            }
        }
    }

    #[test]
    fn rref_is_reduced_and_deterministic() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let dense = random_matrix(&mut rng, 8, 10, 0.5);
        let m = SparseMatrix::from_dense(&dense);
        let (r1, _) = rref(&m);
        let (r2, _) = rref(&m);
        assert_eq!(r1, r2);
        let pivots: Vec<usize> = r1.rows().iter().map(|r| r.leading().unwrap().0).collect();
        assert!(pivots.windows(2).all(|p| p[0] < p[1]));
        for (i, row) in r1.rows().iter().enumerate() {
            assert!(row.leading().unwrap().1.is_one());
            for (j, &p) in pivots.iter().enumerate() {
                if i != j {
                    assert!(row.get(p).is_zero());
                }
            }
        }
        // row scaling does not change the echelon form
        let scaled: Vec<Vec<Gf101>> = dense
            .iter()
            .map(|r| r.iter().map(|v| *v * Gf101::new(7)).collect())
            .collect();
        assert_eq!(rref(&SparseMatrix::from_dense(&scaled)).0, r1);
    }

    #[test]
    fn subspace_basics() {
        let u = Subspace::<Rational>::coordinate(3, 0, 1);
        let w = Subspace::<Rational>::coordinate(3, 1, 2);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert_eq!(u.intersect(&w).unwrap().dim(), 0);
        assert_eq!(u.sum(&w).unwrap().dim(), 2);
        assert!(u.is_subspace_of(&u.sum(&w).unwrap()).unwrap());
        let other = Subspace::<Rational>::zero(4);
        assert_eq!(u.intersect(&other), Err(Error::AmbientMismatch(3, 4)));
        assert!(member(&SparseVec::unit(0), &u));
    }

    /// All vectors of a subspace of GF(2)^n, by enumerating combinations.
    fn enumerate(s: &Subspace<Gf2>, n: usize) -> std::collections::BTreeSet<Vec<u64>> {
        let b = s.basis();
        (0..1u64 << b.len())
            .map(|mask| {
                let mut v = vec![0u64; n];
                for (i, row) in b.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        for (c, x) in row.entries() {
                            v[*c] ^= x.value();
                        }
                    }
                }
                v
            })
            .collect()
    }

    #[test]
    fn dimension_formula_checked_by_enumeration_over_gf2() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..40 {
            let n = rng.gen_range(1..6);
            let gen = |rng: &mut ChaCha8Rng| {
                let k = rng.gen_range(0..4);
                Subspace::from_vectors(
                    n,
                    (0..k).map(|_| {
                        SparseVec::from_dense(&(0..n).map(|_| Gf2::new(rng.gen_range(0..2))).collect::<Vec<_>>())
                    }),
                )
            };
            let u = gen(&mut rng);
            let w = gen(&mut rng);
            let cap = u.intersect(&w).unwrap();
            let cup = u.sum(&w).unwrap();
            assert_eq!(cup.dim() + cap.dim(), u.dim() + w.dim());
            let eu = enumerate(&u, n);
            let ew = enumerate(&w, n);
            let inter: std::collections::BTreeSet<_> = eu.intersection(&ew).cloned().collect();
            assert_eq!(enumerate(&cap, n), inter);
        }
    }
}
