//! The deformation side: the subspaces `P_k`, the finite Jacobi condition,
//! the Hilbert-dimension oracle on `gr(U)`, and the combined verdict.

use std::collections::HashMap;

use crate::centralext::{
    build_hat_matrices, check_condition4, check_degrees, compute_f, verify_hat_corner, CentralExtension, Condition4,
    Deformation, RegularityVerdict,
};
use crate::error::{Error, Result};
use crate::freealg::{CentralValue, ExtWord, ExtendedNCPoly, NCPoly, Word};
use crate::linalg::{SparseVec, Subspace};
use crate::resolution::{minimal_resolution, Complexity, ComplexityStatus, ResolutionData};
use crate::rewrite::RewriteSystem;
use crate::scalar::Field;

/// Coordinates on `F^k T`: every word of length at most `kmax`, in
/// descending order, so the pivot of an echelon row is its leading word and
/// `F^k T` is a trailing range.
#[derive(Debug, Clone)]
pub struct FilteredIndex {
    kmax: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl FilteredIndex {
    pub fn new(num_letters: usize, kmax: usize) -> Self {
        let mut words = Vec::new();
        for d in (0..=kmax).rev() {
            let mut ws = Word::all_of_degree(num_letters, d);
            ws.reverse();
            words.extend(ws);
        }
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        FilteredIndex { kmax, words, index }
    }

    pub fn kmax(&self) -> usize {
        self.kmax
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Panics if `f` has degree above `kmax`.
    pub fn coords<K: Field>(&self, f: &NCPoly<K>) -> SparseVec<K> {
        SparseVec::from_entries(f.terms().map(|(w, c)| (self.index[w], c.clone())).collect())
    }

    pub fn poly<K: Field>(&self, v: &SparseVec<K>) -> NCPoly<K> {
        NCPoly::from_terms(v.entries().iter().map(|(i, c)| (self.words[*i].clone(), c.clone())))
    }

    /// `F^k T` as a coordinate subspace.
    pub fn filtration<K: Field>(&self, k: usize) -> Subspace<K> {
        let start = self.words.iter().position(|w| w.len() <= k).unwrap_or(self.len());
        Subspace::coordinate(self.len(), start, self.len())
    }
}

/// `P_1 ⊆ P_2 ⊆ ... ⊆ P_kmax` inside `F^kmax T`.
#[derive(Debug, Clone)]
pub struct PkFiltration<K> {
    pub index: FilteredIndex,
    /// `spaces[k]` is `P_k`; `spaces[0]` is zero.
    pub spaces: Vec<Subspace<K>>,
}

impl<K: Field> PkFiltration<K> {
    pub fn get(&self, k: usize) -> &Subspace<K> {
        &self.spaces[k]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn contains(&self, k: usize, f: &NCPoly<K>) -> bool {
        self.spaces[k].contains(&self.index.coords(f))
    }

    /// `P_{k+1} ∩ F^k T`.
    pub fn truncated_next(&self, k: usize) -> Result<Subspace<K>> {
        self.spaces[k + 1].intersect(&self.index.filtration(k))
    }
}

/// `P_k = V P_{k-1} + P_{k-1} V + span(P ∩ F^k T)`.
pub fn build_pk<K: Field>(def: &Deformation<K>, kmax: usize) -> PkFiltration<K> {
    let n = def.alphabet().len();
    let index = FilteredIndex::new(n, kmax);
    let amb = index.len();
    let mut spaces = vec![Subspace::zero(amb)];
    for k in 1..=kmax {
        let prev = &spaces[k - 1];
        let e = Word::empty();
        let mut vecs = Vec::new();
        for b in prev.basis() {
            let f = index.poly(b);
            for l in 0..n {
                let x = Word::letter(l as u8);
                vecs.push(index.coords(&f.sandwich(&x, &e)));
                vecs.push(index.coords(&f.sandwich(&e, &x)));
            }
        }
        for p in def.relations() {
            if p.degree().unwrap() <= k {
                vecs.push(index.coords(p));
            }
        }
        spaces.push(Subspace::from_vectors(amb, vecs));
    }
    PkFiltration { index, spaces }
}

/// A failure of `P_{k+1} ∩ F^k T ⊆ P_k` (or of `P_1 = 0` when `k = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiFailure<K> {
    pub k: usize,
    pub witness: NCPoly<K>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiVerdict<K> {
    /// Checked for `1 <= k <= checked_to`.
    pub checked_to: usize,
    /// The complexity was only a lower bound, so passing certifies nothing.
    pub conditional: bool,
    pub failures: Vec<JacobiFailure<K>>,
}

impl<K: Field> JacobiVerdict<K> {
    /// `Some(true)` certified PBW, `Some(false)` certified not, `None` when
    /// no obstruction was found below an uncertain complexity.
    pub fn verdict(&self) -> Option<bool> {
        if !self.failures.is_empty() {
            Some(false)
        } else if self.conditional {
            None
        } else {
            Some(true)
        }
    }
}

/// Checks `P_1 = 0` and every inclusion for `1 <= k <= c`. A failure is a
/// genuine obstruction whatever the status of `c`.
pub fn jacobi_check<K: Field>(def: &Deformation<K>, complexity: &Complexity) -> Result<(JacobiVerdict<K>, PkFiltration<K>)> {
    let c = complexity.value;
    let pk = build_pk(def, c + 1);
    let mut failures = Vec::new();
    if let Some(b) = pk.get(1).basis().first() {
        failures.push(JacobiFailure {
            k: 0,
            witness: pk.index.poly(b).monic(),
        });
    }
    for k in 1..=c {
        let inter = pk.truncated_next(k)?;
        if let Some(v) = inter
            .basis()
            .iter()
            .map(|b| pk.get(k).reduce(b))
            .find(|r| !r.is_zero())
        {
            failures.push(JacobiFailure {
                k,
                witness: pk.index.poly(&v).monic(),
            });
        }
    }
    Ok((
        JacobiVerdict {
            checked_to: c,
            conditional: complexity.status != ComplexityStatus::Exact,
            failures,
        },
        pk,
    ))
}

/// Hilbert dimensions of `gr(U)` from a truncated basis of `<P>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub bound: usize,
    pub gr_dims: Vec<usize>,
    pub base_dims: Vec<usize>,
    /// Largest `p` with `dim gr(U)_k = dim A_k` for all `k <= p`.
    pub injectivity_degree: usize,
}

impl OracleResult {
    /// PBW at the window: `Phi` injective through degree `bound - 1`.
    pub fn pbw_at_window(&self) -> bool {
        self.injectivity_degree + 1 >= self.bound
    }

    pub fn first_mismatch(&self) -> Option<usize> {
        (self.injectivity_degree < self.bound).then_some(self.injectivity_degree + 1)
    }
}

/// Counts normal words of the nonhomogeneous ideal `<P>` completed to `bound`.
/// The counts are upper bounds for `dim gr(U)_k` (an overlap above the bound
/// may still drop into low degree), so a mismatch is certified.
pub fn gr_hilbert_oracle<K: Field>(def: &Deformation<K>, bound: usize) -> Result<OracleResult> {
    let base = def.base();
    let base_dims = base.hilbert(bound)?;
    let rs = RewriteSystem::complete(def.relations(), def.alphabet().len(), bound, false);
    let gr_dims: Vec<usize> = rs.normal_words(bound)?.iter().map(Vec::len).collect();
    for k in 0..=bound {
        if gr_dims[k] > base_dims[k] {
            return Err(Error::InternalInconsistency(format!(
                "gr(U) has more normal words than A in degree {k}"
            )));
        }
    }
    let injectivity_degree = (1..=bound)
        .find(|&k| gr_dims[k] != base_dims[k])
        .map_or(bound, |k| k - 1);
    Ok(OracleResult {
        bound,
        gr_dims,
        base_dims,
        injectivity_degree,
    })
}

/// `<h(P)>_k` spanned by `m - NF_D(m)` over the monomials `m = z^a w` of
/// degree `k`, then sent to `T` by `z = 1`.
pub fn phi1_ideal_slice<K: Field>(d: &CentralExtension<K>, index: &FilteredIndex, k: usize) -> Result<Subspace<K>> {
    let n = d.alphabet().len();
    let mut vecs = Vec::new();
    for a in 0..=k {
        for w in Word::all_of_degree(n, k - a) {
            let m = ExtendedNCPoly::from_monomial(ExtWord::new(a as u32, w));
            let g = &m - &d.nf(&m)?;
            if !g.is_zero() {
                vecs.push(index.coords(&g.evaluate_central(CentralValue::One)));
            }
        }
    }
    Ok(Subspace::from_vectors(index.len(), vecs))
}

/// Compares `phi_1(<h(P)>_k)` with `P_k` for `k <= kmax`; returns the
/// degrees where they differ.
pub fn verify_homogenized_slices<K: Field>(def: &Deformation<K>, d: &CentralExtension<K>, kmax: usize) -> Result<Vec<usize>> {
    if kmax > d.bound() {
        return Err(Error::WindowTooSmall {
            need: kmax,
            have: d.bound(),
        });
    }
    let pk = build_pk(def, kmax);
    let mut bad = Vec::new();
    for k in 1..=kmax {
        if phi1_ideal_slice(d, &pk.index, k)? != *pk.get(k) {
            bad.push(k);
        }
    }
    Ok(bad)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Method {
    Jacobi,
    Regularity,
    Condition4,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Jacobi, Method::Regularity, Method::Condition4, Method::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Method::Jacobi => "jacobi",
            Method::Regularity => "regularity",
            Method::Condition4 => "condition4",
            Method::Oracle => "oracle",
        }
    }
}

/// Everything the pipeline computed for one deformation.
#[derive(Debug, Clone)]
pub struct PbwOutcome<K> {
    pub bound: usize,
    pub central: String,
    pub resolution: ResolutionData<K>,
    pub complexity: Complexity,
    pub extension: Option<CentralExtension<K>>,
    pub jacobi: Option<JacobiVerdict<K>>,
    pub regularity: Option<RegularityVerdict<K>>,
    pub condition4: Option<Condition4<K>>,
    pub oracle: Option<OracleResult>,
    /// Per-method verdicts; `None` where the method could not decide.
    pub verdicts: Vec<(Method, Option<bool>)>,
    /// The common verdict, `None` if no method decided.
    pub pbw: Option<bool>,
    /// Method timings in milliseconds, in run order.
    pub timings: Vec<(Method, u128)>,
}

/// Runs the selected methods on `def` at degree bound `bound` and insists
/// that every decided verdict agrees.
pub fn pbw_verdict<K: Field>(def: &Deformation<K>, bound: usize, methods: &[Method], zname: &str) -> Result<PbwOutcome<K>> {
    if def.base().bound() < bound {
        return Err(Error::WindowTooSmall {
            need: bound,
            have: def.base().bound(),
        });
    }
    let resolution = minimal_resolution(def.base())?;
    let complexity = resolution.complexity();
    let c = complexity.value;
    let exact = complexity.status == ComplexityStatus::Exact;
    let mut out = PbwOutcome {
        bound,
        central: zname.to_string(),
        resolution,
        complexity: complexity.clone(),
        extension: None,
        jacobi: None,
        regularity: None,
        condition4: None,
        oracle: None,
        verdicts: Vec::new(),
        pbw: None,
        timings: Vec::new(),
    };
    let needs_d = methods.iter().any(|m| matches!(m, Method::Regularity | Method::Condition4));
    if needs_d {
        if c + 1 > bound {
            return Err(Error::WindowTooSmall { need: c + 1, have: bound });
        }
        out.extension = Some(CentralExtension::build(def, zname, bound)?);
    }
    let mut methods = methods.to_vec();
    methods.sort();
    methods.dedup();
    for m in methods {
        let t0 = std::time::Instant::now();
        let v = match m {
            Method::Jacobi => {
                let (j, _) = jacobi_check(def, &complexity)?;
                let v = j.verdict();
                out.jacobi = Some(j);
                v
            }
            Method::Regularity => {
                let d = out.extension.as_ref().unwrap();
                let r = d.regular_to_degree(c)?;
                let v = if !r.regular {
                    Some(false)
                } else if exact {
                    Some(true)
                } else {
                    None
                };
                out.regularity = Some(r);
                v
            }
            Method::Condition4 => {
                let d = out.extension.as_ref().unwrap();
                let res = &out.resolution;
                let f2 = compute_f(2, res, def, d)?;
                let f3 = compute_f(3, res, def, d)?;
                let hat = build_hat_matrices(res, &f2, &f3);
                check_degrees(res, &hat, c)?;
                let prods = verify_hat_corner(d, &hat)?;
                if !prods.first.is_zero() || !prods.corner_only {
                    return Err(Error::InternalInconsistency(
                        "hat matrices do not have the expected products".into(),
                    ));
                }
                let c4 = check_condition4(d, &hat)?;
                if !c4.z_annihilates {
                    return Err(Error::InternalInconsistency(
                        "z does not annihilate the class of M3 f2 + f3 M1".into(),
                    ));
                }
                let v = exact.then_some(c4.holds);
                out.condition4 = Some(c4);
                v
            }
            Method::Oracle => {
                let o = gr_hilbert_oracle(def, bound)?;
                let v = Some(o.pbw_at_window());
                out.oracle = Some(o);
                v
            }
        };
        out.timings.push((m, t0.elapsed().as_millis()));
        out.verdicts.push((m, v));
    }
    let decided: Vec<bool> = out.verdicts.iter().filter_map(|(_, v)| *v).collect();
    if decided.windows(2).any(|w| w[0] != w[1]) {
        let desc: Vec<String> = out
            .verdicts
            .iter()
            .map(|(m, v)| format!("{}={}", m.name(), v.map_or("undecided".to_string(), |b| b.to_string())))
            .collect();
        return Err(Error::InternalInconsistency(format!("methods disagree: {}", desc.join(", "))));
    }
    out.pbw = decided.first().copied();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::Alphabet;
    use crate::scalar::Rational;

    fn w(s: &[u8]) -> NCPoly<Rational> {
        NCPoly::from_monomial(Word::from_letters(s))
    }

    fn lowered_cubics() -> Deformation<Rational> {
        // x y w: x^2 y - w, y^3 - w
        let ab = Alphabet::new(["x", "y", "w"]).unwrap();
        Deformation::from_relations(ab, vec![&w(&[0, 0, 1]) - &w(&[2]), &w(&[1, 1, 1]) - &w(&[2])], 8).unwrap()
    }

    #[test]
    fn filtered_index_orders_descending() {
        let ix = FilteredIndex::new(2, 2);
        assert_eq!(ix.len(), 7);
        assert_eq!(ix.words[0], Word::from_letters(&[0, 0]));
        assert_eq!(ix.words[6], Word::empty());
        let f: Subspace<Rational> = ix.filtration(1);
        assert_eq!(f.dim(), 3);
    }

    #[test]
    fn lowered_cubics_pk_and_first_failure() {
        let def = lowered_cubics();
        let pk = build_pk(&def, 5);
        assert_eq!(pk.get(1).dim(), 0);
        assert_eq!(pk.get(2).dim(), 0);
        assert_eq!(pk.get(3), &Subspace::from_vectors(pk.index.len(), def.relations().iter().map(|p| pk.index.coords(p))));
        let target = &w(&[0, 0, 2]) - &w(&[2, 1, 1]);
        assert!(pk.contains(5, &target));
        assert!(!pk.contains(4, &target));
        let res = minimal_resolution(def.base()).unwrap();
        let (j, _) = jacobi_check(&def, &res.complexity()).unwrap();
        assert_eq!(j.failures[0].k, 3);
        assert_eq!(j.failures[0].witness, &w(&[1, 2]) - &w(&[2, 1]));
        assert!(j.failures.iter().any(|f| f.k == 4));
    }

    #[test]
    fn lowered_cubics_verdict_is_unanimous() {
        let def = lowered_cubics();
        let out = pbw_verdict(&def, 8, &Method::ALL, "z").unwrap();
        assert_eq!(out.pbw, Some(false));
        assert!(out.verdicts.iter().all(|(_, v)| *v == Some(false)));
        assert_eq!(out.oracle.unwrap().first_mismatch(), Some(2));
    }

    #[test]
    fn homogenized_slices_on_lowered_cubics() {
        let def = lowered_cubics();
        let d = CentralExtension::build(&def, "z", 6).unwrap();
        assert!(verify_homogenized_slices(&def, &d, 6).unwrap().is_empty());
    }
}
