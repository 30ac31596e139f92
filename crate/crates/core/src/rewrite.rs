//! Degree-truncated two-sided Gröbner bases in the free algebra.
//!
//! Completion is Buchberger's procedure for two-sided ideals: every
//! overlap ambiguity between leading words is resolved, in order of the
//! overlap's degree, up to a bound. Below the bound the resulting rules are
//! confluent, so normal forms are unique and decide ideal membership for
//! homogeneous ideals.
//!
//! Every rule can optionally carry a trace expressing it as a combination
//! `sum c * u * g_i * w` of the original generators `g_i`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::freealg::{Letter, NCPoly, Word};
use crate::scalar::Field;

/// One summand `coeff * left * g_generator * right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cofactor<K> {
    pub generator: usize,
    pub left: Word,
    pub right: Word,
    pub coeff: K,
}

type Trace<K> = BTreeMap<(usize, Word, Word), K>;

fn trace_axpy<K: Field>(acc: &mut Trace<K>, c: &K, u: &Word, src: &Trace<K>, v: &Word) {
    for ((g, l, r), a) in src {
        let key = (*g, u.concat(l), r.concat(v));
        let val = a.clone() * c.clone();
        match acc.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(val);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += val;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

fn trace_scale<K: Field>(t: &mut Trace<K>, c: &K) {
    for v in t.values_mut() {
        *v = v.clone() * c.clone();
    }
}

/// Expands a trace back into the polynomial it names.
fn trace_eval<K: Field>(t: &Trace<K>, gens: &[NCPoly<K>]) -> NCPoly<K> {
    let mut out = NCPoly::zero();
    for ((g, l, r), c) in t {
        for (w, a) in gens[*g].terms() {
            out.add_term(w.sandwich(l, r), a.clone() * c.clone());
        }
    }
    out
}

#[derive(Debug, Clone)]
struct Rule<K> {
    poly: NCPoly<K>,
    lead: Word,
    trace: Option<Trace<K>>,
}

const NONE: u32 = u32::MAX;

/// Trie over leading words for factor lookup.
#[derive(Debug, Clone)]
struct LeadTrie {
    arity: usize,
    children: Vec<u32>,
    rule: Vec<u32>,
}

impl LeadTrie {
    fn new(arity: usize) -> Self {
        LeadTrie {
            arity,
            children: vec![NONE; arity],
            rule: vec![NONE],
        }
    }

    fn insert(&mut self, w: &Word, idx: usize) {
        let mut node = 0usize;
        for &l in w.letters() {
            let slot = node * self.arity + l as usize;
            if self.children[slot] == NONE {
                let fresh = self.rule.len();
                self.rule.push(NONE);
                self.children.extend(std::iter::repeat(NONE).take(self.arity));
                self.children[slot] = fresh as u32;
            }
            node = self.children[slot] as usize;
        }
        self.rule[node] = idx as u32;
    }

    fn remove(&mut self, w: &Word) {
        let mut node = 0usize;
        for &l in w.letters() {
            node = self.children[node * self.arity + l as usize] as usize;
        }
        self.rule[node] = NONE;
    }

    /// Leftmost position where some leading word occurs, with its rule.
    fn find(&self, w: &[Letter]) -> Option<(usize, usize)> {
        for start in 0..w.len() {
            let mut node = 0usize;
            for &l in &w[start..] {
                let next = self.children[node * self.arity + l as usize];
                if next == NONE {
                    break;
                }
                node = next as usize;
                if self.rule[node] != NONE {
                    return Some((start, self.rule[node] as usize));
                }
            }
        }
        None
    }

    /// Every (position, rule) match, for alternative reduction strategies.
    fn find_all(&self, w: &[Letter]) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for start in 0..w.len() {
            let mut node = 0usize;
            for &l in &w[start..] {
                let next = self.children[node * self.arity + l as usize];
                if next == NONE {
                    break;
                }
                node = next as usize;
                if self.rule[node] != NONE {
                    out.push((start, self.rule[node] as usize));
                }
            }
        }
        out
    }
}

/// Reduces `f` to normal form. When `trace` is given, it accumulates
/// `sum c * u * rule * v` for every reduction step, expressed through the
/// rules' own traces.
fn reduce_with<K: Field>(
    rules: &[Option<Rule<K>>],
    trie: &LeadTrie,
    f: NCPoly<K>,
    mut trace: Option<&mut Trace<K>>,
) -> NCPoly<K> {
    let mut work = f.into_terms();
    let mut rem = NCPoly::zero();
    while let Some((w, c)) = work.pop_last() {
        match trie.find(w.letters()) {
            None => {
                rem.terms_mut().insert(w, c);
            }
            Some((pos, ri)) => {
                let rule = rules[ri].as_ref().expect("trie points at live rule");
                let u = w.slice(0, pos);
                let v = w.slice(pos + rule.lead.len(), w.len());
                for (t, a) in rule.poly.terms().rev().skip(1) {
                    let key = t.sandwich(&u, &v);
                    let delta = a.clone() * c.clone();
                    match work.entry(key) {
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert(-delta);
                        }
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            *e.get_mut() -= delta;
                            if e.get().is_zero() {
                                e.remove();
                            }
                        }
                    }
                }
                if let Some(acc) = trace.as_deref_mut() {
                    let rt = rule.trace.as_ref().expect("traced rule");
                    trace_axpy(acc, &c, &u, rt, &v);
                }
            }
        }
    }
    rem
}

/// A degree-truncated Gröbner basis of a two-sided ideal.
#[derive(Debug, Clone)]
pub struct RewriteSystem<K> {
    num_letters: usize,
    generators: Vec<NCPoly<K>>,
    rules: Vec<Option<Rule<K>>>,
    trie: LeadTrie,
    complete_to: usize,
    traced: bool,
}

enum Task<K> {
    Poly(NCPoly<K>, Option<Trace<K>>),
    /// Overlap where the last `k` letters of `a`'s lead are the first `k` of `b`'s.
    Overlap { a: usize, b: usize, k: usize },
}

struct Completion<K> {
    bound: usize,
    traced: bool,
    rules: Vec<Option<Rule<K>>>,
    trie: LeadTrie,
    queue: BTreeMap<(usize, u64), Task<K>>,
    seq: u64,
}

impl<K: Field> Completion<K> {
    fn push(&mut self, degree: usize, task: Task<K>) {
        self.queue.insert((degree, self.seq), task);
        self.seq += 1;
    }

    fn overlap_poly(&self, a: usize, b: usize, k: usize) -> Option<(NCPoly<K>, Option<Trace<K>>)> {
        let ra = self.rules[a].as_ref()?;
        let rb = self.rules[b].as_ref()?;
        let left = ra.lead.slice(0, ra.lead.len() - k);
        let right = rb.lead.slice(k, rb.lead.len());
        let e = Word::empty();
        let s = &ra.poly.sandwich(&e, &right) - &rb.poly.sandwich(&left, &e);
        let trace = if self.traced {
            let mut t = Trace::new();
            trace_axpy(&mut t, &K::one(), &e, ra.trace.as_ref().unwrap(), &right);
            trace_axpy(&mut t, &-K::one(), &left, rb.trace.as_ref().unwrap(), &e);
            Some(t)
        } else {
            None
        };
        Some((s, trace))
    }

    fn schedule_overlaps(&mut self, a: usize, b: usize) {
        let (la, lb) = match (&self.rules[a], &self.rules[b]) {
            (Some(ra), Some(rb)) => (ra.lead.clone(), rb.lead.clone()),
            _ => return,
        };
        let max_k = la.len().min(lb.len());
        for k in 1..max_k {
            if la.letters()[la.len() - k..] == lb.letters()[..k] {
                let deg = la.len() + lb.len() - k;
                if deg <= self.bound {
                    self.push(deg, Task::Overlap { a, b, k });
                }
            }
        }
    }

    fn add(&mut self, f: NCPoly<K>, trace: Option<Trace<K>>) {
        let mut trace = trace;
        let mut acc = if self.traced { Some(Trace::new()) } else { None };
        let r = reduce_with(&self.rules, &self.trie, f, acc.as_mut());
        if r.is_zero() {
            return;
        }
        if let (Some(t), Some(a)) = (trace.as_mut(), acc.as_ref()) {
            trace_axpy(t, &-K::one(), &Word::empty(), a, &Word::empty());
        }
        let lc = r.leading().unwrap().1.inv();
        let poly = r.scale(&lc);
        if let Some(t) = trace.as_mut() {
            trace_scale(t, &lc);
        }
        let lead = poly.leading_monomial().unwrap().clone();
        let idx = self.rules.len();

        // rules whose lead contains the new lead are no longer reduced
        let mut evicted = Vec::new();
        for (j, slot) in self.rules.iter().enumerate() {
            if let Some(rj) = slot {
                if rj.lead.find(&lead).is_some() {
                    evicted.push(j);
                }
            }
        }
        for j in evicted {
            let old = self.rules[j].take().unwrap();
            self.trie.remove(&old.lead);
            let d = old.poly.degree().unwrap();
            self.push(d, Task::Poly(old.poly, old.trace));
        }

        self.trie.insert(&lead, idx);
        self.rules.push(Some(Rule { poly, lead, trace }));
        let live: Vec<usize> = (0..=idx).filter(|&j| self.rules[j].is_some()).collect();
        for j in live {
            self.schedule_overlaps(idx, j);
            if j != idx {
                self.schedule_overlaps(j, idx);
            }
        }
    }

    fn run(&mut self) {
        while let Some((_, task)) = self.queue.pop_first() {
            match task {
                Task::Poly(f, t) => self.add(f, t),
                Task::Overlap { a, b, k } => {
                    if let Some((s, t)) = self.overlap_poly(a, b, k) {
                        self.add(s, t);
                    }
                }
            }
        }
    }

    /// Tail-reduces every rule by the others.
    fn interreduce(&mut self) {
        for i in 0..self.rules.len() {
            let Some(rule) = self.rules[i].take() else { continue };
            self.trie.remove(&rule.lead);
            let Rule { poly, lead, trace } = rule;
            let mut terms = poly.into_terms();
            let (lw, lc) = terms.pop_last().unwrap();
            let tail = NCPoly::from_terms(terms);
            let mut acc = if self.traced { Some(Trace::new()) } else { None };
            let rtail = reduce_with(&self.rules, &self.trie, tail, acc.as_mut());
            let mut poly = rtail;
            poly.add_term(lw, lc);
            let mut trace = trace;
            if let (Some(t), Some(a)) = (trace.as_mut(), acc.as_ref()) {
                trace_axpy(t, &-K::one(), &Word::empty(), a, &Word::empty());
            }
            self.trie.insert(&lead, i);
            self.rules[i] = Some(Rule { poly, lead, trace });
        }
    }
}

impl<K: Field> RewriteSystem<K> {
    /// Completes `gens` (nonzero) over `num_letters` letters, resolving all
    /// overlaps of degree at most `bound`. With `traces`, every rule records
    /// how it is built from the generators.
    pub fn complete(gens: &[NCPoly<K>], num_letters: usize, bound: usize, traces: bool) -> Self {
        let mut c = Completion {
            bound,
            traced: traces,
            rules: Vec::new(),
            trie: LeadTrie::new(num_letters),
            queue: BTreeMap::new(),
            seq: 0,
        };
        for (i, g) in gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let t = if traces {
                let mut t = Trace::new();
                t.insert((i, Word::empty(), Word::empty()), K::one());
                Some(t)
            } else {
                None
            };
            c.push(g.degree().unwrap(), Task::Poly(g.clone(), t));
        }
        c.run();
        c.interreduce();

        // compact, ordered by leading word
        let mut live: Vec<Rule<K>> = c.rules.into_iter().flatten().collect();
        live.sort_by(|a, b| a.lead.cmp(&b.lead));
        let mut trie = LeadTrie::new(num_letters);
        for (i, r) in live.iter().enumerate() {
            trie.insert(&r.lead, i);
        }
        RewriteSystem {
            num_letters,
            generators: gens.to_vec(),
            rules: live.into_iter().map(Some).collect(),
            trie,
            complete_to: bound,
            traced: traces,
        }
    }

    pub fn complete_to(&self) -> usize {
        self.complete_to
    }

    pub fn num_letters(&self) -> usize {
        self.num_letters
    }

    pub fn generators(&self) -> &[NCPoly<K>] {
        &self.generators
    }

    pub fn is_traced(&self) -> bool {
        self.traced
    }

    /// The monic, inter-reduced basis, ascending by leading word.
    pub fn basis(&self) -> impl Iterator<Item = &NCPoly<K>> {
        self.rules.iter().flatten().map(|r| &r.poly)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn leading_words(&self) -> impl Iterator<Item = &Word> {
        self.rules.iter().flatten().map(|r| &r.lead)
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.trie.find(w.letters()).is_none()
    }

    /// All `(position, rule index)` at which `w` is reducible.
    pub fn reducible_positions(&self, w: &Word) -> Vec<(usize, usize)> {
        self.trie.find_all(w.letters())
    }

    pub fn rule(&self, i: usize) -> &NCPoly<K> {
        &self.rules[i].as_ref().unwrap().poly
    }

    fn check_degree(&self, f: &NCPoly<K>) -> Result<()> {
        match f.degree() {
            Some(d) if d > self.complete_to => Err(Error::BeyondCompletion {
                degree: d,
                complete_to: self.complete_to,
            }),
            _ => Ok(()),
        }
    }

    /// Reduces without checking the completion bound. Reduction always
    /// terminates; above the bound the result may not be canonical.
    pub fn reduce_unchecked(&self, f: &NCPoly<K>) -> NCPoly<K> {
        reduce_with(&self.rules, &self.trie, f.clone(), None)
    }

    pub fn normal_form(&self, f: &NCPoly<K>) -> Result<NCPoly<K>> {
        self.check_degree(f)?;
        Ok(self.reduce_unchecked(f))
    }

    pub fn contains(&self, f: &NCPoly<K>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Normal form together with cofactors `(i, u, w, c)` such that
    /// `f = remainder + sum c * u * g_i * w` over the original generators.
    pub fn reduce_with_cofactors(&self, f: &NCPoly<K>) -> Result<(NCPoly<K>, Vec<Cofactor<K>>)> {
        if !self.traced {
            return Err(Error::TracesAbsent);
        }
        self.check_degree(f)?;
        let mut acc = Trace::new();
        let rem = reduce_with(&self.rules, &self.trie, f.clone(), Some(&mut acc));
        let cof = acc
            .into_iter()
            .map(|((g, l, r), c)| Cofactor {
                generator: g,
                left: l,
                right: r,
                coeff: c,
            })
            .collect();
        Ok((rem, cof))
    }

    /// Expands the recorded trace of rule `i`.
    pub fn rule_from_trace(&self, i: usize) -> Option<NCPoly<K>> {
        let r = self.rules[i].as_ref()?;
        r.trace.as_ref().map(|t| trace_eval(t, &self.generators))
    }

    /// Normal words of each degree `0..=d`, ascending within a degree.
    pub fn normal_words(&self, d: usize) -> Result<Vec<Vec<Word>>> {
        if d > self.complete_to {
            return Err(Error::BeyondCompletion {
                degree: d,
                complete_to: self.complete_to,
            });
        }
        Ok(self.normal_words_unchecked(d))
    }

    pub(crate) fn normal_words_unchecked(&self, d: usize) -> Vec<Vec<Word>> {
        let mut out = vec![vec![Word::empty()]];
        for _ in 1..=d {
            let prev = out.last().unwrap();
            let mut next = Vec::new();
            for w in prev {
                for l in (0..self.num_letters).rev() {
                    let mut w2 = w.clone();
                    w2.push(l as Letter);
                    // prefix is normal, so only suffixes can match
                    if self.is_normal(&w2) {
                        next.push(w2);
                    }
                }
            }
            out.push(next);
        }
        out
    }
}

/// `sum c * u * g_i * w`
pub fn expand_cofactors<K: Field>(cofactors: &[Cofactor<K>], gens: &[NCPoly<K>]) -> NCPoly<K> {
    let mut out = NCPoly::zero();
    for c in cofactors {
        for (w, a) in gens[c.generator].terms() {
            out.add_term(w.sandwich(&c.left, &c.right), a.clone() * c.coeff.clone());
        }
    }
    out
}
