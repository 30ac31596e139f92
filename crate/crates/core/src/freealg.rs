//! Free-algebra arithmetic.
//!
//! Words over a fixed alphabet, noncommutative polynomials over an exact
//! field, and the extension `T[z]` by a central variable. Generators all
//! have degree 1.
//!
//! Monomial order: degree first, then left-lexicographic with the *first*
//! declared generator largest. With alphabet `x y`, `x*y > y*x`, so the
//! commutator `x*y - y*x` rewrites `x*y -> y*x`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::Field;

pub type Letter = u8;

/// Ordered list of generator names. The order fixes the monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if names.len() > Letter::MAX as usize {
            return Err(Error::InvalidGenerator(format!("{} generators", names.len())));
        }
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidGenerator(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, l: Letter) -> &str {
        &self.names[l as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name).map(|i| i as Letter)
    }

    /// Appends a central variable as the new smallest letter.
    pub fn with_central(&self, zname: &str) -> Result<(Alphabet, Letter)> {
        if !is_identifier(zname) {
            return Err(Error::InvalidGenerator(zname.to_string()));
        }
        if self.index_of(zname).is_some() {
            return Err(Error::CentralNameCollision(zname.to_string()));
        }
        let mut names = self.names.clone();
        names.push(zname.to_string());
        let z = (names.len() - 1) as Letter;
        Ok((Alphabet { names }, z))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (0..self.names.len()).map(|i| i as Letter)
    }
}

/// Monomial of a free monoid: product of generators.
pub trait Monomial: Clone + Ord + Eq + Hash + Debug {
    fn identity() -> Self;
    fn degree(&self) -> usize;
    fn mul(&self, rhs: &Self) -> Self;
    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, alphabet: &Alphabet) -> fmt::Result;
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[Letter; 16]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn from_letters(letters: &[Letter]) -> Self {
        Word(SmallVec::from_slice(letters))
    }

    pub fn letter(l: Letter) -> Self {
        Word::from_letters(&[l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&rhs.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_letters(&self.0[start..end])
    }

    /// `u * self * v`
    pub fn sandwich(&self, u: &Word, v: &Word) -> Word {
        let mut out = SmallVec::with_capacity(u.len() + self.len() + v.len());
        out.extend_from_slice(&u.0);
        out.extend_from_slice(&self.0);
        out.extend_from_slice(&v.0);
        Word(out)
    }

    /// Leftmost occurrence of `pat` as a factor.
    pub fn find(&self, pat: &Word) -> Option<usize> {
        if pat.len() > self.len() {
            return None;
        }
        (0..=self.len() - pat.len()).find(|&i| self.0[i..i + pat.len()] == pat.0[..])
    }

    pub fn contains_letter(&self, l: Letter) -> bool {
        self.0.contains(&l)
    }

    /// All words of length `d` over `n` letters, ascending in the monomial order.
    pub fn all_of_degree(n: usize, d: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..d {
            let mut next = Vec::with_capacity(out.len() * n);
            for w in &out {
                // largest letter index is the smallest letter
                for l in (0..n).rev() {
                    let mut w2 = w.clone();
                    w2.push(l as Letter);
                    next.push(w2);
                }
            }
            out = next;
        }
        out
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl Display + 'a {
        MonomialDisplay {
            mono: self,
            alphabet,
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            for (a, b) in self.0.iter().zip(other.0.iter()) {
                if a != b {
                    // smaller index = larger letter
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0[..])
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[Letter], alphabet: &Alphabet, mut first: bool) -> fmt::Result {
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut j = i + 1;
        while j < letters.len() && letters[j] == l {
            j += 1;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", alphabet.name(l))?;
        if j - i > 1 {
            write!(f, "^{}", j - i)?;
        }
        i = j;
    }
    Ok(())
}

impl Monomial for Word {
    fn identity() -> Self {
        Word::empty()
    }
    fn degree(&self) -> usize {
        self.len()
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.concat(rhs)
    }
    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, alphabet: &Alphabet) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        write_letters(f, &self.0, alphabet, true)
    }
}

/// Monomial `z^zpow * word` of `T[z]`. Since `z` is central every monomial
/// has this form; `z` is the smallest letter, so at equal total degree fewer
/// `z`s means a larger monomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExtWord {
    pub zpow: u32,
    pub word: Word,
}

impl ExtWord {
    pub fn new(zpow: u32, word: Word) -> Self {
        ExtWord { zpow, word }
    }

    /// The same monomial as a word over the extended alphabet, `z`s first.
    pub fn to_word(&self, z: Letter) -> Word {
        let mut w = Word(SmallVec::with_capacity(self.zpow as usize + self.word.len()));
        for _ in 0..self.zpow {
            w.push(z);
        }
        w.0.extend_from_slice(&self.word.0);
        w
    }

    /// Collects every `z` of an extended-alphabet word to the front.
    pub fn from_word(w: &Word, z: Letter) -> Self {
        let mut zpow = 0;
        let mut rest = Word::empty();
        for &l in w.letters() {
            if l == z {
                zpow += 1;
            } else {
                rest.push(l);
            }
        }
        ExtWord { zpow, word: rest }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl Display + 'a {
        MonomialDisplay {
            mono: self,
            alphabet,
        }
    }
}

impl Ord for ExtWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.zpow.cmp(&self.zpow))
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for ExtWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Debug for ExtWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z^{}{:?}", self.zpow, self.word)
    }
}

impl Monomial for ExtWord {
    fn identity() -> Self {
        ExtWord::default()
    }
    fn degree(&self) -> usize {
        self.zpow as usize + self.word.len()
    }
    fn mul(&self, rhs: &Self) -> Self {
        ExtWord {
            zpow: self.zpow + rhs.zpow,
            word: self.word.concat(&rhs.word),
        }
    }
    /// The alphabet must be the extended one, central variable last.
    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, alphabet: &Alphabet) -> fmt::Result {
        if self.zpow == 0 && self.word.is_empty() {
            return write!(f, "1");
        }
        let zname = alphabet.name((alphabet.len() - 1) as Letter);
        let mut first = true;
        if self.zpow > 0 {
            write!(f, "{zname}")?;
            if self.zpow > 1 {
                write!(f, "^{}", self.zpow)?;
            }
            first = false;
        }
        write_letters(f, self.word.letters(), alphabet, first)
    }
}

struct MonomialDisplay<'a, M> {
    mono: &'a M,
    alphabet: &'a Alphabet,
}

impl<M: Monomial> Display for MonomialDisplay<'_, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.mono.fmt_with(f, self.alphabet)
    }
}

/// Polynomial: finite map from monomials to nonzero coefficients, sorted by
/// the monomial order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<M, K> {
    terms: BTreeMap<M, K>,
}

/// Element of the free algebra `T = K<x_1..x_n>`.
pub type NCPoly<K> = Poly<Word, K>;
/// Element of `T[z]` with `z` central.
pub type ExtendedNCPoly<K> = Poly<ExtWord, K>;

impl<M: Monomial, K: Field> Default for Poly<M, K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Monomial, K: Field> Poly<M, K> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(M::identity(), c)
    }

    pub fn monomial(m: M, c: K) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_monomial(m: M) -> Self {
        Self::monomial(m, K::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (M, K)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&M, &K)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<M, K> {
        self.terms
    }

    pub(crate) fn terms_mut(&mut self) -> &mut BTreeMap<M, K> {
        &mut self.terms
    }

    pub fn coeff(&self, m: &M) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    pub fn add_term(&mut self, m: M, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Top degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.last_key_value().map(|(m, _)| m.degree())
    }

    pub fn low_degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn leading(&self) -> Option<(&M, &K)> {
        self.terms.last_key_value()
    }

    pub fn leading_monomial(&self) -> Option<&M> {
        self.terms.last_key_value().map(|(m, _)| m)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Scales so the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// `u * self * v` for monomials `u`, `v`.
    pub fn sandwich(&self, u: &M, v: &M) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (u.mul(m).mul(v), a.clone()))
                .collect(),
        }
    }

    pub fn homogeneous_component(&self, d: usize) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, a)| (m.clone(), a.clone()))
                .collect(),
        }
    }

    /// `f_p` where `p` is the top degree.
    pub fn top_component(&self) -> Result<Self> {
        let d = self.degree().ok_or(Error::ZeroPolynomial("top_component"))?;
        Ok(self.homogeneous_component(d))
    }

    /// `sum_{i <= k} f_i`
    pub fn filter_truncate(&self, k: usize) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= k)
                .map(|(m, a)| (m.clone(), a.clone()))
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> PolyDisplay<'a, M, K> {
        PolyDisplay {
            poly: self,
            alphabet,
        }
    }

    fn combine(&self, rhs: &Self, negate: bool) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), if negate { -c.clone() } else { c.clone() });
        }
        out
    }

    fn product(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<K: Field> NCPoly<K> {
    pub fn generator(l: Letter) -> Self {
        Self::from_monomial(Word::letter(l))
    }

    pub fn letters_used(&self) -> impl Iterator<Item = Letter> + '_ {
        self.terms.keys().flat_map(|w| w.letters().iter().copied())
    }

    /// `h(f) = sum_i z^(p-i) f_i` with `p` the top degree.
    pub fn homogenize(&self) -> Result<ExtendedNCPoly<K>> {
        let p = self.degree().ok_or(Error::ZeroPolynomial("homogenize"))?;
        Ok(Poly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (ExtWord::new((p - w.len()) as u32, w.clone()), c.clone()))
                .collect(),
        })
    }

    /// The polynomial viewed in `T[z]` (no `z`).
    pub fn lift(&self) -> ExtendedNCPoly<K> {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (ExtWord::new(0, w.clone()), c.clone()))
                .collect(),
        }
    }
}

/// Point at which the central variable is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralValue {
    Zero,
    One,
}

impl<K: Field> ExtendedNCPoly<K> {
    pub fn z_power(k: u32) -> Self {
        Self::from_monomial(ExtWord::new(k, Word::empty()))
    }

    /// `phi_0` (kill every term with a `z`) or `phi_1` (erase `z`).
    pub fn evaluate_central(&self, at: CentralValue) -> NCPoly<K> {
        let mut out = NCPoly::zero();
        for (m, c) in &self.terms {
            match at {
                CentralValue::Zero if m.zpow > 0 => {}
                _ => out.add_term(m.word.clone(), c.clone()),
            }
        }
        out
    }

    pub fn times_z(&self, k: u32) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (ExtWord::new(m.zpow + k, m.word.clone()), c.clone()))
                .collect(),
        }
    }

    /// Exact division by `z`; `None` if some term has no `z`.
    pub fn div_z(&self) -> Option<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.zpow == 0 {
                return None;
            }
            terms.insert(ExtWord::new(m.zpow - 1, m.word.clone()), c.clone());
        }
        Some(Poly { terms })
    }

    /// As a polynomial over the extended alphabet (`z` = letter `z`).
    pub fn to_word_poly(&self, z: Letter) -> NCPoly<K> {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.to_word(z), c.clone()))
                .collect(),
        }
    }

    /// From a polynomial over the extended alphabet, collecting `z`s.
    pub fn from_word_poly(f: &NCPoly<K>, z: Letter) -> Self {
        let mut out = Self::zero();
        for (w, c) in &f.terms {
            out.add_term(ExtWord::from_word(w, z), c.clone());
        }
        out
    }
}

/// `h(f)` with the central variable name checked against the alphabet.
pub fn homogenize<K: Field>(f: &NCPoly<K>, alphabet: &Alphabet, zname: &str) -> Result<ExtendedNCPoly<K>> {
    alphabet.with_central(zname)?;
    f.homogenize()
}

pub fn evaluate_central<K: Field>(g: &ExtendedNCPoly<K>, at: CentralValue) -> NCPoly<K> {
    g.evaluate_central(at)
}

impl<M: Monomial, K: Field> Add for &Poly<M, K> {
    type Output = Poly<M, K>;
    fn add(self, rhs: Self) -> Poly<M, K> {
        self.combine(rhs, false)
    }
}

impl<M: Monomial, K: Field> Sub for &Poly<M, K> {
    type Output = Poly<M, K>;
    fn sub(self, rhs: Self) -> Poly<M, K> {
        self.combine(rhs, true)
    }
}

impl<M: Monomial, K: Field> Mul for &Poly<M, K> {
    type Output = Poly<M, K>;
    fn mul(self, rhs: Self) -> Poly<M, K> {
        self.product(rhs)
    }
}

impl<M: Monomial, K: Field> Neg for &Poly<M, K> {
    type Output = Poly<M, K>;
    fn neg(self) -> Poly<M, K> {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<M: Monomial, K: Field> Add for Poly<M, K> {
    type Output = Poly<M, K>;
    fn add(mut self, rhs: Self) -> Poly<M, K> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<M: Monomial, K: Field> Sub for Poly<M, K> {
    type Output = Poly<M, K>;
    fn sub(mut self, rhs: Self) -> Poly<M, K> {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<M: Monomial, K: Field> Mul for Poly<M, K> {
    type Output = Poly<M, K>;
    fn mul(self, rhs: Self) -> Poly<M, K> {
        self.product(&rhs)
    }
}

impl<M: Monomial, K: Field> Neg for Poly<M, K> {
    type Output = Poly<M, K>;
    fn neg(self) -> Poly<M, K> {
        -&self
    }
}

impl<M: Debug, K: Debug> Debug for Poly<M, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter().rev()).finish()
    }
}

pub struct PolyDisplay<'a, M, K> {
    poly: &'a Poly<M, K>,
    alphabet: &'a Alphabet,
}

/// Largest term first: `x*y - y*x - 2*z^2`.
impl<M: Monomial, K: Field> Display for PolyDisplay<'_, M, K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_unit = m.degree() == 0;
            if abs.is_one() && !is_unit {
                m.fmt_with(f, self.alphabet)?;
            } else if is_unit {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*")?;
                m.fmt_with(f, self.alphabet)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    type Q = NCPoly<Rational>;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    fn xyw() -> Alphabet {
        Alphabet::new(["x", "y", "w"]).unwrap()
    }

    fn w(l: &[Letter]) -> Word {
        Word::from_letters(l)
    }

    #[test]
    fn order_is_deglex_first_generator_largest() {
        assert!(w(&[0, 1]) > w(&[1, 0]));
        assert!(w(&[1, 1, 1]) > w(&[0, 0]));
        assert!(w(&[0]) > w(&[1]));
        let words = Word::all_of_degree(2, 2);
        assert!(words.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn ext_word_order_prefers_fewer_z() {
        let a = ExtWord::new(0, w(&[1, 1]));
        let b = ExtWord::new(1, w(&[0]));
        assert!(a > b);
        // agrees with the extended-alphabet word order (z = letter 2)
        assert_eq!(a.cmp(&b), a.to_word(2).cmp(&b.to_word(2)));
    }

    #[test]
    fn homogenize_examples() {
        let al = Alphabet::new(["x", "y"]).unwrap();
        let (ext, _) = al.with_central("z").unwrap();
        // x*y + x + 1
        let f = Q::from_terms([(w(&[0, 1]), q(1)), (w(&[0]), q(1)), (Word::empty(), q(1))]);
        let h = f.homogenize().unwrap();
        assert_eq!(h.display(&ext).to_string(), "x*y + z*x + z^2");
        assert!(h.is_homogeneous());

        let al = xyw();
        let (ext, _) = al.with_central("z").unwrap();
        let f = Q::from_terms([(w(&[0, 0, 1]), q(1)), (w(&[2]), q(-1))]);
        assert_eq!(f.homogenize().unwrap().display(&ext).to_string(), "x^2*y - z^2*w");

        let r = Q::from_terms([(w(&[0, 1]), q(1)), (w(&[1, 0]), q(-1))]);
        assert_eq!(r.homogenize().unwrap(), r.lift());
    }

    #[test]
    fn homogenize_errors() {
        let al = xyw();
        assert_eq!(homogenize(&Q::zero(), &al, "z"), Err(Error::ZeroPolynomial("homogenize")));
        let f = Q::generator(0);
        assert!(matches!(homogenize(&f, &al, "w"), Err(Error::CentralNameCollision(_))));
    }

    #[test]
    fn evaluation_at_zero_and_one() {
        let al = Alphabet::new(["x", "y"]).unwrap();
        let (ext, _) = al.with_central("z").unwrap();
        let g = ExtendedNCPoly::<Rational>::from_terms([
            (ExtWord::new(0, w(&[0, 1])), q(1)),
            (ExtWord::new(0, w(&[1, 0])), q(-1)),
            (ExtWord::new(1, w(&[0])), q(-1)),
        ]);
        assert_eq!(g.display(&ext).to_string(), "x*y - y*x - z*x");
        assert_eq!(g.evaluate_central(CentralValue::Zero).display(&al).to_string(), "x*y - y*x");
        assert_eq!(g.evaluate_central(CentralValue::One).display(&al).to_string(), "x*y - y*x - x");
    }

    #[test]
    fn top_and_truncate() {
        let al = xyw();
        let f = Q::from_terms([(w(&[0, 0, 1]), q(1)), (w(&[2]), q(-1))]);
        assert_eq!(f.top_component().unwrap().display(&al).to_string(), "x^2*y");
        assert_eq!(f.filter_truncate(1).display(&al).to_string(), "-w");
        assert_eq!(f.filter_truncate(3), f);
        assert!(Q::zero().top_component().is_err());
    }

    #[test]
    fn z_commutes_structurally() {
        let z = ExtendedNCPoly::<Rational>::z_power(1);
        let x = Q::generator(0).lift();
        assert_eq!(&z * &x, &x * &z);
        let word = Word::from_letters(&[0, 2, 2, 1]);
        let ext = ExtWord::from_word(&word, 2);
        assert_eq!(ext, ExtWord::new(2, w(&[0, 1])));
        assert_eq!(ext.to_word(2), w(&[2, 2, 0, 1]));
    }
}
