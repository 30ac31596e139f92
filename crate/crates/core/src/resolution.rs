//! Graded algebras `A = T/<R>` and the first steps of a minimal graded free
//! resolution of the trivial module.
//!
//! Free modules are `Q^n = A(m_1) + ... + A(m_t)` with nonpositive shifts;
//! elements are rows and the differential is right multiplication by
//! `pi_A(M_n)`. Everything is computed degree by degree on normal-word
//! bases, so a resolution is only ever as good as its degree bound.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::freealg::{Alphabet, Letter, NCPoly, Word};
use crate::linalg::{kernel_basis, rank, Echelon, SparseMatrix, SparseVec};
use crate::matrix::PolyMatrix;
use crate::rewrite::RewriteSystem;
use crate::scalar::Field;

/// `A = T/<R>` with homogeneous relations of degree at least two, a traced
/// Gröbner basis of `<R>` complete to `bound`, and cached normal-word bases.
#[derive(Debug, Clone)]
pub struct GradedAlgebra<K> {
    alphabet: Alphabet,
    relations: Vec<NCPoly<K>>,
    gb: RewriteSystem<K>,
    bound: usize,
    basis: Vec<Vec<Word>>,
    index: Vec<HashMap<Word, usize>>,
}

impl<K: Field> GradedAlgebra<K> {
    /// Validates the relations and completes `<R>` to `bound`.
    pub fn new(alphabet: Alphabet, relations: Vec<NCPoly<K>>, bound: usize) -> Result<Self> {
        Self::validate(&relations)?;
        let maxdeg = relations.iter().filter_map(|r| r.degree()).max().unwrap_or(0);
        if bound < maxdeg {
            return Err(Error::WindowTooSmall {
                need: maxdeg,
                have: bound,
            });
        }
        check_minimal(&relations, alphabet.len())?;
        let gb = RewriteSystem::complete(&relations, alphabet.len(), bound, true);
        let basis = gb.normal_words_unchecked(bound);
        let index = basis
            .iter()
            .map(|ws| ws.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect())
            .collect();
        Ok(GradedAlgebra {
            alphabet,
            relations,
            gb,
            bound,
            basis,
            index,
        })
    }

    fn validate(relations: &[NCPoly<K>]) -> Result<()> {
        for (i, r) in relations.iter().enumerate() {
            let d = r.degree().ok_or(Error::ZeroPolynomial("relation"))?;
            if !r.is_homogeneous() {
                return Err(Error::InhomogeneousRelation { index: i });
            }
            if d < 2 {
                return Err(Error::LinearRelation { index: i, degree: d });
            }
        }
        Ok(())
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn num_generators(&self) -> usize {
        self.alphabet.len()
    }

    pub fn relations(&self) -> &[NCPoly<K>] {
        &self.relations
    }

    pub fn gb(&self) -> &RewriteSystem<K> {
        &self.gb
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, d: usize) -> Result<()> {
        if d > self.bound {
            Err(Error::BeyondCompletion {
                degree: d,
                complete_to: self.bound,
            })
        } else {
            Ok(())
        }
    }

    /// Normal words of degree `d`, ascending.
    pub fn graded_basis(&self, d: usize) -> Result<&[Word]> {
        self.check(d)?;
        Ok(&self.basis[d])
    }

    /// `dim A_d` for `d = 0..=n`.
    pub fn hilbert(&self, n: usize) -> Result<Vec<usize>> {
        self.check(n)?;
        Ok(self.basis[..=n].iter().map(Vec::len).collect())
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis.get(d).map_or(0, Vec::len)
    }

    pub fn normal_form(&self, f: &NCPoly<K>) -> Result<NCPoly<K>> {
        self.gb.normal_form(f)
    }

    pub fn contains(&self, f: &NCPoly<K>) -> Result<bool> {
        self.gb.contains(f)
    }

    /// Coordinates of the degree-`d` part of `pi_A(f)` on the normal-word basis.
    pub fn coords(&self, f: &NCPoly<K>, d: usize) -> Result<SparseVec<K>> {
        self.check(d)?;
        let nf = self.gb.reduce_unchecked(&f.homogeneous_component(d));
        Ok(self.coords_of_normal(&nf, d, 0))
    }

    fn coords_of_normal(&self, nf: &NCPoly<K>, d: usize, offset: usize) -> SparseVec<K> {
        let idx = &self.index[d];
        SparseVec::from_entries(
            nf.terms()
                .map(|(w, c)| (offset + idx[w], c.clone()))
                .collect(),
        )
    }

    /// The element of `A_d` with the given coordinates, as a combination of
    /// normal words.
    pub fn element(&self, d: usize, v: &SparseVec<K>) -> NCPoly<K> {
        NCPoly::from_terms(v.entries().iter().map(|(i, c)| (self.basis[d][*i].clone(), c.clone())))
    }
}

/// Errors with a greedily pruned generating set if some relation lies in the
/// ideal of the others at its own degree.
fn check_minimal<K: Field>(relations: &[NCPoly<K>], n: usize) -> Result<()> {
    let redundant = |keep: &[usize], i: usize| -> bool {
        let others: Vec<NCPoly<K>> = keep
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| relations[j].clone())
            .collect();
        let d = relations[i].degree().unwrap();
        let rs = RewriteSystem::complete(&others, n, d, false);
        rs.reduce_unchecked(&relations[i]).is_zero()
    };
    let all: Vec<usize> = (0..relations.len()).collect();
    let first = match all.iter().copied().find(|&i| redundant(&all, i)) {
        Some(i) => i,
        None => return Ok(()),
    };
    let mut keep = all;
    let mut i = 0;
    while i < keep.len() {
        let cand = keep[i];
        if redundant(&keep, cand) {
            keep.remove(i);
        } else {
            i += 1;
        }
    }
    Err(Error::NonMinimalRelations {
        index: first,
        suggestion: keep,
    })
}

/// `b_{i,j} = dim Ext^{i,j}(K, K)` for `i <= 3`, `j <= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub bound: usize,
    /// `rows[i][j]`
    pub rows: [Vec<usize>; 4],
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.rows.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    /// Internal degrees `j` with `b_{i,j} != 0`.
    pub fn support(&self, i: usize) -> Vec<usize> {
        (0..=self.bound).filter(|&j| self.get(i, j) != 0).collect()
    }

    /// Whether every `b_{i,j}` sits on the diagonal `j = i`.
    pub fn is_diagonal(&self) -> bool {
        (0..4).all(|i| self.support(i).iter().all(|&j| j == i))
    }
}

/// Degree bookkeeping for a free module `sum_i A(-s_i)`: block `i` of the
/// degree-`d` component is `A_{d - s_i}`.
struct ModuleDegree {
    offsets: Vec<Option<usize>>,
    dim: usize,
}

impl ModuleDegree {
    fn new<K: Field>(alg: &GradedAlgebra<K>, shifts: &[usize], d: usize) -> Self {
        let mut offsets = Vec::with_capacity(shifts.len());
        let mut dim = 0;
        for &s in shifts {
            if s <= d {
                offsets.push(Some(dim));
                dim += alg.dim(d - s);
            } else {
                offsets.push(None);
            }
        }
        ModuleDegree { offsets, dim }
    }
}

/// Coordinates of a homogeneous row of `T`-polynomials (entry `i` of degree
/// `d - s_i`) in the degree-`d` component.
fn row_coords<K: Field>(alg: &GradedAlgebra<K>, row: &[NCPoly<K>], shifts: &[usize], md: &ModuleDegree, d: usize) -> SparseVec<K> {
    let mut entries = Vec::new();
    for (i, p) in row.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let off = md.offsets[i].expect("entry degree within module");
        let nf = alg.gb.reduce_unchecked(p);
        entries.extend(
            nf.terms()
                .map(|(w, c)| (off + alg.index[d - shifts[i]][w], c.clone())),
        );
    }
    SparseVec::from_entries(entries)
}

fn decode_row<K: Field>(alg: &GradedAlgebra<K>, v: &SparseVec<K>, shifts: &[usize], md: &ModuleDegree, d: usize) -> Vec<NCPoly<K>> {
    let mut row = vec![NCPoly::zero(); shifts.len()];
    for (col, c) in v.entries() {
        // last block whose offset is <= col
        let i = (0..shifts.len())
            .rev()
            .find(|&i| md.offsets[i].is_some_and(|o| o <= *col) && alg.dim(d - shifts[i]) > 0)
            .unwrap();
        let w = alg.basis[d - shifts[i]][col - md.offsets[i].unwrap()].clone();
        row[i].add_term(w, c.clone());
    }
    row
}

fn left_mul_row<K: Field>(u: &Word, row: &[NCPoly<K>]) -> Vec<NCPoly<K>> {
    let e = Word::empty();
    row.iter().map(|p| p.sandwich(u, &e)).collect()
}

/// Matrix of `delta` in degree `d`: one row per basis element `u * e_i` of
/// the source, its image under right multiplication by `map` in the target.
fn delta_matrix<K: Field>(
    alg: &GradedAlgebra<K>,
    map: &[Vec<NCPoly<K>>],
    src: &[usize],
    tgt: &[usize],
    d: usize,
) -> SparseMatrix<K> {
    let tmd = ModuleDegree::new(alg, tgt, d);
    let mut m = SparseMatrix::new(tmd.dim);
    for (i, &s) in src.iter().enumerate() {
        if s > d {
            continue;
        }
        for u in &alg.basis[d - s] {
            m.push_row(row_coords(alg, &left_mul_row(u, &map[i]), tgt, &tmd, d));
        }
    }
    m
}

/// One step of the resolution: new minimal generators, degree by degree, of
/// the kernel of right multiplication by `map : sum A(-src) -> sum A(-tgt)`.
/// `seeds` are generators known in advance (with their degrees); they must be
/// minimal and the step then only reports anything beyond them.
fn kernel_generators<K: Field>(
    alg: &GradedAlgebra<K>,
    map: &[Vec<NCPoly<K>>],
    src: &[usize],
    tgt: &[usize],
    seeds: &[(usize, Vec<NCPoly<K>>)],
    bound: usize,
) -> Result<Vec<(usize, Vec<NCPoly<K>>)>> {
    let mut gens: Vec<(usize, Vec<NCPoly<K>>)> = Vec::new();
    let mut fresh = Vec::new();
    let min = src.iter().copied().min().unwrap_or(bound + 1);
    for d in min..=bound {
        let smd = ModuleDegree::new(alg, src, d);
        let delta = delta_matrix(alg, map, src, tgt, d);
        let kdim = delta.nrows() - rank(&delta);
        let mut known = Echelon::new(smd.dim);
        for (t, g) in &gens {
            if *t >= d {
                continue;
            }
            for u in &alg.basis[d - t] {
                known.insert(&row_coords(alg, &left_mul_row(u, g), src, &smd, d));
            }
        }
        for (t, g) in seeds.iter().filter(|(t, _)| *t == d) {
            let v = row_coords(alg, g, src, &smd, d);
            if !delta.apply(&v).is_zero() {
                return Err(Error::InternalInconsistency(format!(
                    "seeded generator in degree {t} is not a cycle"
                )));
            }
            if !known.insert(&v) {
                return Err(Error::InternalInconsistency(format!(
                    "seeded generators in degree {t} are not minimal"
                )));
            }
            gens.push((d, g.clone()));
        }
        if known.rank() > kdim {
            return Err(Error::InternalInconsistency(format!(
                "image exceeds kernel in degree {d}"
            )));
        }
        if known.rank() == kdim {
            continue;
        }
        for v in kernel_basis(&delta).basis() {
            let r = known.reduce(v);
            if r.is_zero() {
                continue;
            }
            known.insert(&r);
            let row = decode_row(alg, &r, src, &smd, d);
            if row.iter().any(|p| p.degree() == Some(0)) {
                return Err(Error::InternalInconsistency(format!(
                    "non-minimal generator with a scalar entry in degree {d}"
                )));
            }
            gens.push((d, row.clone()));
            fresh.push((d, row));
        }
    }
    Ok(fresh)
}

/// Whether the resolution is certified complete in homological degree 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComplexityStatus {
    Exact,
    AtLeast,
}

impl ComplexityStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ComplexityStatus::Exact => "exact",
            ComplexityStatus::AtLeast => "at-least",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complexity {
    pub value: usize,
    pub status: ComplexityStatus,
    /// `b_{3,j} != 0` throughout the top window: no sign of the step closing.
    pub unbounded: bool,
    /// Internal degrees carrying `Ext^3`.
    pub ext3_degrees: Vec<usize>,
    /// Largest degree of a nonzero entry of `M3 M2` in `T`.
    pub product_degree: Option<usize>,
}

/// `M1`, `M2`, `M3` with their shift vectors (stored as the nonpositive
/// `m_{i,n}`), truncated at `bound`.
#[derive(Debug, Clone)]
pub struct ResolutionData<K> {
    pub bound: usize,
    /// `shifts[n]` for `n = 0..=3`.
    pub shifts: [Vec<i64>; 4],
    pub m1: PolyMatrix<Word, K>,
    pub m2: PolyMatrix<Word, K>,
    pub m3: PolyMatrix<Word, K>,
    /// Lowest degree where `ker delta_3` is nonzero, i.e. where a fourth
    /// step begins; `None` if it is zero up to the bound.
    pub step4_onset: Option<usize>,
}

impl<K: Field> ResolutionData<K> {
    /// Largest degree to which steps beyond the third contribute nothing.
    pub fn exhausted_to(&self) -> usize {
        self.step4_onset.map_or(self.bound, |d| d - 1)
    }

    pub fn betti(&self) -> BettiTable {
        let mut rows: [Vec<usize>; 4] = Default::default();
        for (n, row) in rows.iter_mut().enumerate() {
            *row = vec![0; self.bound + 1];
            for &m in &self.shifts[n] {
                let j = (-m) as usize;
                if j <= self.bound {
                    row[j] += 1;
                }
            }
        }
        BettiTable {
            bound: self.bound,
            rows,
        }
    }

    /// Whether every nonzero Ext^3 degree is strictly inside the truncation.
    pub fn complexity(&self) -> Complexity {
        let b = self.betti();
        let ext3 = b.support(3);
        let value = ext3.last().map_or(0, |j| j - 1);
        let n = self.bound;
        let window = n.div_ceil(4).max(1);
        let lo = n + 1 - window;
        let quiet = |i: usize| (lo..=n).all(|j| b.get(i, j) == 0);
        let status = if quiet(3) && quiet(2) {
            ComplexityStatus::Exact
        } else {
            ComplexityStatus::AtLeast
        };
        let unbounded = (lo..=n).all(|j| b.get(3, j) != 0);
        let prod = self.m3.mul(&self.m2);
        let product_degree = prod.nonzero_entries().filter_map(|(_, _, p)| p.degree()).max();
        Complexity {
            value,
            status,
            unbounded,
            ext3_degrees: ext3,
            product_degree,
        }
    }
}

/// `M2` read off the relations: entry `j` of row `i` collects the terms of
/// `r_i` ending in `x_j`, with that letter removed, so `M2 M1 = (r_i)^t`.
fn relation_rows<K: Field>(relations: &[NCPoly<K>], n: usize) -> Vec<Vec<NCPoly<K>>> {
    relations
        .iter()
        .map(|r| {
            let mut row = vec![NCPoly::zero(); n];
            for (w, c) in r.terms() {
                let last = w.letters()[w.len() - 1] as usize;
                row[last].add_term(w.slice(0, w.len() - 1), c.clone());
            }
            row
        })
        .collect()
}

/// Minimal resolution `Q^3 -> Q^2 -> Q^1 -> A -> K` up to the algebra's bound.
pub fn minimal_resolution<K: Field>(alg: &GradedAlgebra<K>) -> Result<ResolutionData<K>> {
    let n = alg.num_generators();
    let bound = alg.bound;
    let m1_rows: Vec<Vec<NCPoly<K>>> = (0..n).map(|l| vec![NCPoly::generator(l as Letter)]).collect();
    let s0 = vec![0usize];
    let s1 = vec![1usize; n];

    // step 2: the relations, then a check that they exhaust ker delta_1
    let m2_rows = relation_rows(&alg.relations, n);
    let s2: Vec<usize> = alg.relations.iter().map(|r| r.degree().unwrap()).collect();
    let seeds: Vec<(usize, Vec<NCPoly<K>>)> = s2.iter().copied().zip(m2_rows.iter().cloned()).collect();
    let extra = kernel_generators(alg, &m1_rows, &s1, &s0, &seeds, bound)?;
    if let Some((d, _)) = extra.first() {
        return Err(Error::InternalInconsistency(format!(
            "relations do not generate the syzygies of the generators in degree {d}"
        )));
    }

    // step 3
    let m3_gens = kernel_generators(alg, &m2_rows, &s2, &s1, &[], bound)?;
    let s3: Vec<usize> = m3_gens.iter().map(|(d, _)| *d).collect();
    let m3_rows: Vec<Vec<NCPoly<K>>> = m3_gens.into_iter().map(|(_, r)| r).collect();

    // onset of step 4
    let mut step4_onset = None;
    if let Some(&min3) = s3.iter().min() {
        for d in min3..=bound {
            let delta = delta_matrix(alg, &m3_rows, &s3, &s2, d);
            if rank(&delta) < delta.nrows() {
                step4_onset = Some(d);
                break;
            }
        }
    }

    let neg = |v: &[usize]| v.iter().map(|&s| -(s as i64)).collect::<Vec<_>>();
    Ok(ResolutionData {
        bound,
        shifts: [neg(&s0), neg(&s1), neg(&s2), neg(&s3)],
        m1: PolyMatrix::from_rows(1, m1_rows),
        m2: PolyMatrix::from_rows(n, m2_rows),
        m3: PolyMatrix::from_rows(s2.len(), m3_rows),
        step4_onset,
    })
}

/// Residual of `sum_j [sum_i (-1)^i b_{i,j}] dim A_{d-j} - [d = 0]` for each
/// `d <= upto`; all zero when the truncated resolution is exact there.
pub fn euler_residuals<K: Field>(alg: &GradedAlgebra<K>, betti: &BettiTable, upto: usize) -> Vec<i64> {
    (0..=upto)
        .map(|d| {
            let mut s: i64 = if d == 0 { -1 } else { 0 };
            for j in 0..=d {
                let chi: i64 = (0..4).map(|i| if i % 2 == 0 { 1 } else { -1 } * betti.get(i, j) as i64).sum();
                s += chi * alg.dim(d - j) as i64;
            }
            s
        })
        .collect()
}

/// Degrees of `pi_A(M_n M_{n-1})` entries that fail to vanish, for checks.
pub fn nonvanishing_products<K: Field>(alg: &GradedAlgebra<K>, res: &ResolutionData<K>) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for (n, p) in [(2, res.m2.mul(&res.m1)), (3, res.m3.mul(&res.m2))] {
        for (i, j, e) in p.nonzero_entries() {
            if !alg.gb.reduce_unchecked(e).is_zero() {
                out.push((n, i, j));
            }
        }
    }
    out
}

/// Betti numbers as a map `degree -> count` per homological degree.
pub fn shift_histogram(shifts: &[i64]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &m in shifts {
        *h.entry((-m) as usize).or_insert(0) += 1;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn word(s: &[u8]) -> NCPoly<Rational> {
        NCPoly::from_monomial(Word::from_letters(s))
    }

    fn comm(a: u8, b: u8) -> NCPoly<Rational> {
        &word(&[a, b]) - &word(&[b, a])
    }

    fn alg(names: &[&str], rels: Vec<NCPoly<Rational>>, n: usize) -> GradedAlgebra<Rational> {
        GradedAlgebra::new(Alphabet::new(names.iter().copied()).unwrap(), rels, n).unwrap()
    }

    #[test]
    fn hilbert_of_small_algebras() {
        let a = alg(&["x", "y"], vec![comm(0, 1)], 6);
        assert_eq!(a.hilbert(6).unwrap(), vec![1, 2, 3, 4, 5, 6, 7]);
        let f = alg(&["x", "y"], vec![], 5);
        assert_eq!(f.hilbert(5).unwrap(), vec![1, 2, 4, 8, 16, 32]);
    }

    #[test]
    fn polynomial_ring_is_koszul_shape() {
        let a = alg(&["x", "y", "z"], vec![comm(0, 1), comm(0, 2), comm(1, 2)], 7);
        let res = minimal_resolution(&a).unwrap();
        assert_eq!(res.shifts[1], vec![-1, -1, -1]);
        assert_eq!(res.shifts[2], vec![-2, -2, -2]);
        assert_eq!(res.shifts[3], vec![-3]);
        assert_eq!(res.step4_onset, None);
        let c = res.complexity();
        assert_eq!((c.value, c.status), (2, ComplexityStatus::Exact));
        assert_eq!(c.product_degree, Some(2));
        assert!(nonvanishing_products(&a, &res).is_empty());
        assert!(res.betti().is_diagonal());
        assert!(euler_residuals(&a, &res.betti(), 7).iter().all(|&r| r == 0));
    }

    #[test]
    fn two_relation_monomial_example() {
        // y^2, xyz
        let a = alg(&["x", "y", "z"], vec![word(&[1, 1]), word(&[0, 1, 2])], 8);
        let res = minimal_resolution(&a).unwrap();
        assert_eq!(res.shifts[2], vec![-2, -3]);
        assert_eq!(res.shifts[3], vec![-3]);
        let c = res.complexity();
        assert_eq!((c.value, c.status), (2, ComplexityStatus::Exact));
        assert_eq!(res.step4_onset, Some(4));
        assert!(euler_residuals(&a, &res.betti(), res.exhausted_to()).iter().all(|&r| r == 0));
    }

    #[test]
    fn free_algebra_has_no_ext3() {
        let a = alg(&["x", "y"], vec![], 6);
        let c = minimal_resolution(&a).unwrap().complexity();
        assert_eq!((c.value, c.status), (0, ComplexityStatus::Exact));
    }

    #[test]
    fn rejects_bad_relations() {
        let ab = Alphabet::new(["x", "y"]).unwrap();
        let lin = &word(&[0]) + &word(&[0, 1]);
        assert!(matches!(
            GradedAlgebra::new(ab.clone(), vec![lin], 4),
            Err(Error::InhomogeneousRelation { index: 0 })
        ));
        assert!(matches!(
            GradedAlgebra::new(ab.clone(), vec![word(&[0])], 4),
            Err(Error::LinearRelation { index: 0, degree: 1 })
        ));
        let dup = vec![word(&[0, 1]), word(&[0, 1, 1]), word(&[1, 1])];
        match GradedAlgebra::new(ab, dup, 4) {
            Err(Error::NonMinimalRelations { index, suggestion }) => {
                assert_eq!(index, 1);
                assert_eq!(suggestion, vec![0, 2]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn four_generator_example_grows_in_every_degree() {
        // w x y z: yz, zx - xz, zw
        let rels = vec![word(&[2, 3]), &word(&[3, 1]) - &word(&[1, 3]), word(&[3, 0])];
        let a = alg(&["w", "x", "y", "z"], rels, 8);
        let res = minimal_resolution(&a).unwrap();
        let c = res.complexity();
        assert_eq!(c.ext3_degrees, (3..=8).collect::<Vec<_>>());
        assert_eq!(c.value, 7);
        assert_eq!(c.status, ComplexityStatus::AtLeast);
        assert!(c.unbounded);
        assert_eq!(res.step4_onset, None);
        assert!(euler_residuals(&a, &res.betti(), 8).iter().all(|&r| r == 0));
    }

    #[test]
    fn cubic_and_monomial_complexities() {
        let x2y = &word(&[0, 0, 1]) - &word(&[1, 0, 0]);
        let xy2 = &word(&[0, 1, 1]) - &word(&[1, 1, 0]);
        let a = alg(&["x", "y"], vec![x2y, xy2], 8);
        let res = minimal_resolution(&a).unwrap();
        assert_eq!(res.shifts[3], vec![-4]);
        assert_eq!(res.complexity().value, 3);
        assert_eq!(res.complexity().status, ComplexityStatus::Exact);

        // x^2 y, y^3 over x y w
        let b = alg(&["x", "y", "w"], vec![word(&[0, 0, 1]), word(&[1, 1, 1])], 8);
        let res = minimal_resolution(&b).unwrap();
        assert_eq!(res.shifts[3], vec![-4, -5]);
        let c = res.complexity();
        assert_eq!((c.value, c.status), (4, ComplexityStatus::Exact));
        assert_eq!(c.product_degree, Some(4));
        assert_eq!(res.step4_onset, Some(6));
    }
}
