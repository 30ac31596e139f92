//! Line-oriented presentation files.
//!
//! ```text
//! # sl2
//! field Q
//! gens e f h
//! def e*f - f*e - h; h*e - e*h - 2*e
//! def h*f - f*h + 2*f
//! option central t
//! option max-deg 8
//! ```
//!
//! `rel` lines hold homogeneous relations of a graded algebra; `def` lines
//! hold the relations of a deformation, whose base is either read off the
//! top components or loaded from `base <path>`. Several polynomials may share
//! a line, separated by `;`. Polynomials are parsed over the rationals and
//! only then mapped into the declared field.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::centralext::Deformation;
use crate::error::{Error, Result};
use crate::freealg::{is_identifier, Alphabet, NCPoly};
use crate::resolution::GradedAlgebra;
use crate::scalar::{is_prime, Field, FieldKind, Rational};

const MAX_EXPONENT: u64 = 64;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = simple {
            out.push((t, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((Tok::Num(digits.parse().unwrap()), col));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(Error::parse(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    alphabet: &'a Alphabet,
}

type QPoly = NCPoly<Rational>;

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.col(), msg)
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<QPoly> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Tok::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<QPoly> {
        let mut acc = self.unary()?;
        while self.eat(&Tok::Star) {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<QPoly> {
        if self.eat(&Tok::Minus) {
            return Ok(-self.unary()?);
        }
        if self.eat(&Tok::Plus) {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<QPoly> {
        let base = self.atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let e = match self.peek() {
            Some(Tok::Num(n)) => n.to_u64().filter(|&e| e <= MAX_EXPONENT),
            _ => return Err(self.err("expected an exponent")),
        }
        .ok_or_else(|| self.err(format!("exponent must be at most {MAX_EXPONENT}")))?;
        self.pos += 1;
        let mut acc = QPoly::one();
        for _ in 0..e {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<QPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let mut q = Rational::from_integer(n);
                if self.eat(&Tok::Slash) {
                    match self.peek().cloned() {
                        Some(Tok::Num(d)) if !d.is_zero() => {
                            self.pos += 1;
                            q = q / Rational::from_integer(d);
                        }
                        Some(Tok::Num(_)) => return Err(self.err("division by zero")),
                        _ => return Err(self.err("expected a denominator")),
                    }
                }
                Ok(QPoly::constant(q))
            }
            Some(Tok::Ident(name)) => {
                let l = self
                    .alphabet
                    .index_of(&name)
                    .ok_or_else(|| self.err(format!("unknown generator `{name}`")))?;
                self.pos += 1;
                Ok(QPoly::generator(l))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let p = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                Ok(p)
            }
            Some(t) => Err(self.err(format!("unexpected {}", describe(&t)))),
            None => Err(self.err("unexpected end of polynomial")),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("number `{n}`"),
        Tok::Ident(s) => format!("`{s}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

/// Parses one polynomial; `line` and `col0` only position error messages.
pub fn parse_poly_at(s: &str, alphabet: &Alphabet, line: usize, col0: usize) -> Result<NCPoly<Rational>> {
    let toks = lex(s, line, col0)?;
    let end_col = col0 + s.chars().count();
    let mut p = Parser {
        toks,
        pos: 0,
        line,
        end_col,
        alphabet,
    };
    if p.peek().is_none() {
        return Err(p.err("empty polynomial"));
    }
    let f = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err(format!("unexpected {}", describe(p.peek().unwrap()))));
    }
    Ok(f)
}

/// Parses a polynomial over the rationals and maps it into `K`.
pub fn parse_poly<K: Field>(s: &str, alphabet: &Alphabet) -> Result<NCPoly<K>> {
    let q = parse_poly_at(s, alphabet, 1, 1)?;
    convert(&q).ok_or_else(|| Error::parse(1, 1, "a coefficient is undefined in this field"))
}

/// Image of a rational polynomial in `K`; `None` if a denominator vanishes.
pub fn convert<K: Field>(f: &NCPoly<Rational>) -> Option<NCPoly<K>> {
    let mut out = NCPoly::zero();
    for (w, c) in f.terms() {
        out.add_term(w.clone(), K::from_fraction(c.numer(), c.denom())?);
    }
    Some(out)
}

/// Kind of relation lines in a file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    Graded,
    Deformation,
}

/// A relation with the line it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct SourceRelation {
    pub line: usize,
    pub poly: NCPoly<Rational>,
}

#[derive(Debug, Clone)]
pub struct Presentation {
    pub field: FieldKind,
    pub alphabet: Alphabet,
    pub kind: RelationKind,
    pub relations: Vec<SourceRelation>,
    pub base: Option<Box<Presentation>>,
    pub base_path: Option<PathBuf>,
    pub central: Option<String>,
    pub max_deg: Option<usize>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Character column (1-based) of byte offset `off` in `line`.
fn column(line: &str, off: usize) -> usize {
    line[..off].chars().count() + 1
}

impl Presentation {
    /// Parses a presentation. A `base` directive is recorded but not loaded;
    /// see [`Presentation::load`].
    pub fn parse(text: &str) -> Result<Self> {
        let mut field = None;
        let mut alphabet: Option<Alphabet> = None;
        let mut kind = None;
        let mut relations = Vec::new();
        let mut base_path = None;
        let mut central = None;
        let mut max_deg = None;
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let body = strip_comment(raw);
            let trimmed = body.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let start = body.len() - trimmed.len();
            let (kw, rest) = match trimmed.find(char::is_whitespace) {
                Some(i) => (&trimmed[..i], &trimmed[i..]),
                None => (trimmed, ""),
            };
            let rest_off = start + kw.len();
            let words: Vec<&str> = rest.split_whitespace().collect();
            let kwcol = column(body, start);
            match kw {
                "field" => {
                    if field.is_some() {
                        return Err(Error::parse(line, kwcol, "field declared twice"));
                    }
                    field = Some(match words.as_slice() {
                        ["Q"] => FieldKind::Rational,
                        ["GF", p] => {
                            let p: u64 = p
                                .parse()
                                .map_err(|_| Error::parse(line, kwcol, format!("invalid modulus `{p}`")))?;
                            if !is_prime(p) {
                                return Err(Error::parse(line, kwcol, format!("{p} is not prime")));
                            }
                            if p >= 1 << 62 {
                                return Err(Error::parse(line, kwcol, format!("modulus {p} is too large")));
                            }
                            FieldKind::Prime(p)
                        }
                        _ => return Err(Error::parse(line, kwcol, "expected `field Q` or `field GF <p>`")),
                    });
                }
                "gens" => {
                    if alphabet.is_some() {
                        return Err(Error::parse(line, kwcol, "generators declared twice"));
                    }
                    if words.is_empty() {
                        return Err(Error::parse(line, kwcol, "no generators"));
                    }
                    for w in &words {
                        if !is_identifier(w) {
                            return Err(Error::parse(line, kwcol, format!("invalid generator name `{w}`")));
                        }
                    }
                    alphabet = Some(Alphabet::new(words.iter().copied()).map_err(|e| Error::parse(line, kwcol, e.to_string()))?);
                }
                "rel" | "def" => {
                    let k = if kw == "rel" {
                        RelationKind::Graded
                    } else {
                        RelationKind::Deformation
                    };
                    if kind.is_some_and(|x| x != k) {
                        return Err(Error::parse(line, kwcol, "`rel` and `def` lines cannot be mixed"));
                    }
                    kind = Some(k);
                    let ab = alphabet
                        .as_ref()
                        .ok_or_else(|| Error::parse(line, kwcol, "`gens` must come before relations"))?;
                    let mut off = rest_off;
                    for piece in rest.split(';') {
                        if !piece.trim().is_empty() {
                            let poly = parse_poly_at(piece, ab, line, column(body, off))?;
                            relations.push(SourceRelation { line, poly });
                        }
                        off += piece.len() + 1;
                    }
                }
                "base" => {
                    if words.len() != 1 {
                        return Err(Error::parse(line, kwcol, "expected `base <path>`"));
                    }
                    base_path = Some(PathBuf::from(words[0]));
                }
                "option" => match words.as_slice() {
                    ["central", id] => {
                        if !is_identifier(id) {
                            return Err(Error::parse(line, kwcol, format!("invalid central name `{id}`")));
                        }
                        central = Some(id.to_string());
                    }
                    ["max-deg", n] => {
                        max_deg = Some(
                            n.parse()
                                .map_err(|_| Error::parse(line, kwcol, format!("invalid degree `{n}`")))?,
                        );
                    }
                    _ => return Err(Error::parse(line, kwcol, "unknown option")),
                },
                other => return Err(Error::parse(line, kwcol, format!("unknown directive `{other}`"))),
            }
        }
        let alphabet = alphabet.ok_or_else(|| Error::parse(1, 1, "missing `gens` line"))?;
        let kind = kind.unwrap_or(RelationKind::Graded);
        if base_path.is_some() && kind != RelationKind::Deformation {
            return Err(Error::parse(1, 1, "`base` is only meaningful with `def` lines"));
        }
        Ok(Presentation {
            field: field.unwrap_or(FieldKind::Rational),
            alphabet,
            kind,
            relations,
            base: None,
            base_path,
            central,
            max_deg,
        })
    }

    /// Reads a file and, for deformations, its `base` (relative to the file).
    pub fn load(path: &Path) -> std::result::Result<Self, LoadError> {
        let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(path.to_path_buf(), e.to_string()))?;
        let mut p = Self::parse(&text).map_err(|e| LoadError::Parse(path.to_path_buf(), e))?;
        if let Some(bp) = &p.base_path {
            let full = path.parent().unwrap_or(Path::new(".")).join(bp);
            let base = Self::load(&full)?;
            if base.kind != RelationKind::Graded || base.base_path.is_some() {
                return Err(LoadError::Parse(full, Error::parse(1, 1, "a base must be a graded presentation")));
            }
            if base.alphabet != p.alphabet || base.field != p.field {
                return Err(LoadError::Parse(
                    path.to_path_buf(),
                    Error::parse(1, 1, "base has a different field or generator list"),
                ));
            }
            p.base = Some(Box::new(base));
        }
        Ok(p)
    }

    fn polys<K: Field>(&self) -> Result<Vec<NCPoly<K>>> {
        self.relations
            .iter()
            .map(|r| {
                let f: NCPoly<K> = convert(&r.poly)
                    .ok_or_else(|| Error::parse(r.line, 1, format!("a coefficient is undefined in {}", self.field)))?;
                if f.is_zero() {
                    return Err(Error::parse(r.line, 1, "relation is zero"));
                }
                Ok(f)
            })
            .collect()
    }

    /// The graded algebra: the file's own relations, or for a deformation
    /// its base.
    pub fn algebra<K: Field>(&self, bound: usize) -> Result<GradedAlgebra<K>> {
        match (self.kind, &self.base) {
            (RelationKind::Graded, _) => GradedAlgebra::new(self.alphabet.clone(), self.polys()?, bound),
            (RelationKind::Deformation, Some(b)) => b.algebra(bound),
            (RelationKind::Deformation, None) => {
                let tops = self
                    .polys::<K>()?
                    .iter()
                    .map(|p| p.top_component())
                    .collect::<Result<Vec<_>>>()?;
                GradedAlgebra::new(self.alphabet.clone(), tops, bound)
            }
        }
    }

    /// The deformation; a graded file is its own trivial deformation.
    pub fn deformation<K: Field>(&self, bound: usize) -> Result<Deformation<K>> {
        let base = self.algebra(bound)?;
        Deformation::new(base, self.polys()?)
    }
}

/// Failure to read a presentation file.
#[derive(Debug, Clone, PartialEq)]
pub enum LoadError {
    Io(PathBuf, String),
    Parse(PathBuf, Error),
}

impl std::fmt::Display for LoadError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LoadError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            LoadError::Parse(p, e) => write!(f, "{}: {e}", p.display()),
        }
    }
}

impl std::error::Error for LoadError {}

/// Renders a presentation in the input grammar.
pub fn render<K: Field>(alphabet: &Alphabet, relations: &[NCPoly<K>], kind: RelationKind, central: Option<&str>) -> String {
    let mut s = String::new();
    match K::kind() {
        FieldKind::Rational => writeln!(s, "field Q").unwrap(),
        FieldKind::Prime(p) => writeln!(s, "field GF {p}").unwrap(),
    }
    writeln!(s, "gens {}", alphabet.names().join(" ")).unwrap();
    let kw = match kind {
        RelationKind::Graded => "rel",
        RelationKind::Deformation => "def",
    };
    for r in relations {
        writeln!(s, "{kw} {}", r.display(alphabet)).unwrap();
    }
    if let Some(c) = central {
        writeln!(s, "option central {c}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf101;

    #[test]
    fn parses_commutative_plane() {
        let p = Presentation::parse("field Q\ngens x y\nrel x*y - y*x\n").unwrap();
        let a = p.algebra::<Rational>(5).unwrap();
        assert_eq!(a.hilbert(5).unwrap(), vec![1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn parses_deformation_with_semicolons() {
        let text = "# sl2\nfield Q\ngens e f h\ndef e*f - f*e - h; h*e - e*h - 2*e\ndef h*f - f*h + 2*f\noption central t\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.relations.len(), 3);
        assert_eq!(p.central.as_deref(), Some("t"));
        let d = p.deformation::<Rational>(4).unwrap();
        assert_eq!(d.base().relations().len(), 3);
        let again = render(d.alphabet(), d.relations(), RelationKind::Deformation, Some("t"));
        let q = Presentation::parse(&again).unwrap();
        let d2 = q.deformation::<Rational>(4).unwrap();
        assert_eq!(d.relations(), d2.relations());
    }

    #[test]
    fn rationals_powers_and_parentheses() {
        let ab = Alphabet::new(["x", "y", "w"]).unwrap();
        let f: NCPoly<Rational> = parse_poly("3/2*x^2*y - (x + w)^2 + -1", &ab).unwrap();
        assert_eq!(f.display(&ab).to_string(), "3/2*x^2*y - x^2 - x*w - w*x - w^2 - 1");
        let g: NCPoly<Gf101> = parse_poly("1/2*x", &ab).unwrap();
        assert_eq!(g.display(&ab).to_string(), "-50*x");
    }

    #[test]
    fn positioned_errors() {
        match Presentation::parse("gens x y\nrel x*y - q\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 11)),
            other => panic!("{other:?}"),
        }
        match Presentation::parse("gens x y\nrel x*y; y*(x\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 14)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(Presentation::parse("field GF 91\ngens x\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            Presentation::parse("gens x y\nrel x*y\ndef x*y - x\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn linear_relation_is_rejected() {
        let p = Presentation::parse("gens x y\nrel x\n").unwrap();
        assert!(matches!(p.algebra::<Rational>(4), Err(Error::LinearRelation { .. })));
    }
}
