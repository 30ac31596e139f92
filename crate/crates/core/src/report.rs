//! Structured reports: serializable, deterministic, with a text rendering.
//! Polynomials appear as strings in the input grammar, so they parse back.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::centralext::{CentralExtension, RegularityVerdict};
use crate::freealg::Alphabet;
use crate::pbw::PbwOutcome;
use crate::presentation::{render, RelationKind};
use crate::resolution::{euler_residuals, nonvanishing_products, Complexity, GradedAlgebra, ResolutionData};
use crate::scalar::Field;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub field: String,
    pub generators: Vec<String>,
    pub max_deg: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub resolution: Option<ResolutionSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complexity: Option<ComplexitySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub central_extension: Option<CentralExtSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<RegularitySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pbw: Option<PbwSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResolutionSection {
    /// `m_{i,n}` for `n = 0..3`.
    pub shifts: Vec<Vec<i64>>,
    /// `betti[i][j] = b_{i,j}`.
    pub betti: Vec<Vec<usize>>,
    pub m1: Vec<Vec<String>>,
    pub m2: Vec<Vec<String>>,
    pub m3: Vec<Vec<String>>,
    pub products_vanish: bool,
    /// Degree through which no fourth step contributes.
    pub exhausted_to: usize,
    pub euler_identity_holds: bool,
    /// All Betti numbers on the diagonal `j = i` to the bound.
    pub diagonal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplexitySection {
    pub value: usize,
    pub status: String,
    pub unbounded_pattern: bool,
    pub ext3_degrees: Vec<usize>,
    /// Largest entry degree of `M3 M2`.
    pub product_degree: Option<usize>,
    pub product_degree_agrees: bool,
    pub max_relation_degree: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CentralExtSection {
    pub central: String,
    pub relations: Vec<String>,
    pub dims: Vec<usize>,
    /// `D` in the input grammar, commutators included.
    pub presentation: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnnihilatedClass {
    pub degree: usize,
    pub power: usize,
    pub element: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RegularitySection {
    pub p: usize,
    pub window: usize,
    pub regular: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<AnnihilatedClass>,
}

#[derive(Debug, Clone, Serialize)]
pub struct JacobiFailureSection {
    pub k: usize,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct JacobiSection {
    pub checked_to: usize,
    pub conditional: bool,
    pub failures: Vec<JacobiFailureSection>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Residual {
    pub row: usize,
    pub class: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Condition4Section {
    pub holds: bool,
    pub residuals: Vec<Residual>,
    pub z_annihilates: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleSection {
    pub gr_dims: Vec<usize>,
    pub base_dims: Vec<usize>,
    pub injectivity_degree: usize,
    pub first_mismatch: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PbwSection {
    /// `yes`, `no` or `undecided`.
    pub verdict: String,
    pub unanimous: bool,
    pub complexity: usize,
    pub complexity_status: String,
    pub window: usize,
    pub methods: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub jacobi: Option<JacobiSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regularity: Option<RegularitySection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub condition4: Option<Condition4Section>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

fn verdict_word(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "yes",
        Some(false) => "no",
        None => "undecided",
    }
}

impl Report {
    pub fn new<K: Field>(command: &str, alphabet: &Alphabet, max_deg: usize) -> Self {
        Report {
            schema: SCHEMA,
            command: command.to_string(),
            field: K::kind().to_string(),
            generators: alphabet.names().to_vec(),
            max_deg,
            hilbert: None,
            resolution: None,
            complexity: None,
            central_extension: None,
            regularity: None,
            pbw: None,
        }
    }
}

pub fn resolution_section<K: Field>(alg: &GradedAlgebra<K>, res: &ResolutionData<K>) -> ResolutionSection {
    let ab = alg.alphabet();
    let betti = res.betti();
    ResolutionSection {
        shifts: res.shifts.to_vec(),
        betti: betti.rows.to_vec(),
        m1: res.m1.to_strings(ab),
        m2: res.m2.to_strings(ab),
        m3: res.m3.to_strings(ab),
        products_vanish: nonvanishing_products(alg, res).is_empty(),
        exhausted_to: res.exhausted_to(),
        euler_identity_holds: euler_residuals(alg, &betti, res.exhausted_to()).iter().all(|&r| r == 0),
        diagonal: betti.is_diagonal(),
    }
}

pub fn complexity_section<K: Field>(alg: &GradedAlgebra<K>, c: &Complexity) -> ComplexitySection {
    ComplexitySection {
        value: c.value,
        status: c.status.as_str().to_string(),
        unbounded_pattern: c.unbounded,
        ext3_degrees: c.ext3_degrees.clone(),
        product_degree: c.product_degree,
        product_degree_agrees: c.product_degree.unwrap_or(0) == c.value,
        max_relation_degree: alg.relations().iter().filter_map(|r| r.degree()).max().unwrap_or(0),
    }
}

pub fn central_ext_section<K: Field>(d: &CentralExtension<K>) -> CentralExtSection {
    let ext = d.extended_alphabet();
    CentralExtSection {
        central: d.central_name().to_string(),
        relations: d.relations().iter().map(|r| r.display(ext).to_string()).collect(),
        dims: (0..=d.bound()).map(|k| d.dim(k)).collect(),
        presentation: render(ext, &d.presentation_relations(), RelationKind::Graded, None),
    }
}

pub fn regularity_section<K: Field>(d: &CentralExtension<K>, v: &RegularityVerdict<K>) -> RegularitySection {
    RegularitySection {
        p: v.p,
        window: v.bound,
        regular: v.regular,
        witness: v.witness.as_ref().map(|a| AnnihilatedClass {
            degree: a.degree,
            power: a.power,
            element: a.element.display(d.extended_alphabet()).to_string(),
        }),
    }
}

pub fn pbw_section<K: Field>(alphabet: &Alphabet, out: &PbwOutcome<K>, timings: bool) -> PbwSection {
    let decided: Vec<bool> = out.verdicts.iter().filter_map(|(_, v)| *v).collect();
    let ext = out.extension.as_ref().map(|d| d.extended_alphabet().clone());
    PbwSection {
        verdict: verdict_word(out.pbw).to_string(),
        unanimous: !decided.is_empty() && decided.len() == out.verdicts.len(),
        complexity: out.complexity.value,
        complexity_status: out.complexity.status.as_str().to_string(),
        window: out.bound,
        methods: out
            .verdicts
            .iter()
            .map(|(m, v)| (m.name().to_string(), verdict_word(*v).to_string()))
            .collect(),
        jacobi: out.jacobi.as_ref().map(|j| JacobiSection {
            checked_to: j.checked_to,
            conditional: j.conditional,
            failures: j
                .failures
                .iter()
                .map(|f| JacobiFailureSection {
                    k: f.k,
                    witness: f.witness.display(alphabet).to_string(),
                })
                .collect(),
        }),
        regularity: out
            .regularity
            .as_ref()
            .map(|r| regularity_section(out.extension.as_ref().unwrap(), r)),
        condition4: out.condition4.as_ref().map(|c| Condition4Section {
            holds: c.holds,
            residuals: c
                .residuals
                .iter()
                .map(|(row, p)| Residual {
                    row: *row,
                    class: p.display(ext.as_ref().unwrap()).to_string(),
                })
                .collect(),
            z_annihilates: c.z_annihilates,
        }),
        oracle: out.oracle.as_ref().map(|o| OracleSection {
            gr_dims: o.gr_dims.clone(),
            base_dims: o.base_dims.clone(),
            injectivity_degree: o.injectivity_degree,
            first_mismatch: o.first_mismatch(),
        }),
        timings_ms: timings.then(|| {
            out.timings
                .iter()
                .map(|(m, t)| (m.name().to_string(), *t))
                .collect()
        }),
    }
}

fn list<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn matrix(s: &mut String, name: &str, m: &[Vec<String>]) {
    writeln!(s, "  {name}:").unwrap();
    if m.is_empty() {
        writeln!(s, "    (empty)").unwrap();
    }
    for r in m {
        writeln!(s, "    [{}]", r.join(", ")).unwrap();
    }
}

fn regularity_text(s: &mut String, r: &RegularitySection) {
    write!(
        s,
        "  regular to degree {} (window {}): {}",
        r.p,
        r.window,
        if r.regular { "yes" } else { "no" }
    )
    .unwrap();
    if let Some(w) = &r.witness {
        write!(s, "; z^{} kills {} in degree {}", w.power, w.element, w.degree).unwrap();
    }
    writeln!(s).unwrap();
}

impl Report {
    /// Human-readable rendering.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "{} over {} with generators {} (max degree {})", self.command, self.field, list(&self.generators), self.max_deg).unwrap();
        if let Some(h) = &self.hilbert {
            writeln!(s, "Hilbert dimensions: {}", list(h)).unwrap();
        }
        if let Some(r) = &self.resolution {
            writeln!(s, "Resolution:").unwrap();
            for (n, sh) in r.shifts.iter().enumerate() {
                writeln!(s, "  Q{n} shifts: {}", list(sh)).unwrap();
            }
            writeln!(s, "  Betti table (row i, column j):").unwrap();
            for (i, row) in r.betti.iter().enumerate() {
                writeln!(s, "    {i}: {}", list(row)).unwrap();
            }
            matrix(&mut s, "M1", &r.m1);
            matrix(&mut s, "M2", &r.m2);
            matrix(&mut s, "M3", &r.m3);
            writeln!(s, "  products vanish in A: {}", r.products_vanish).unwrap();
            writeln!(s, "  no fourth step through degree {}", r.exhausted_to).unwrap();
            writeln!(s, "  Euler identity through degree {}: {}", r.exhausted_to, r.euler_identity_holds).unwrap();
            writeln!(s, "  diagonal (Koszul-like) to the bound: {}", r.diagonal).unwrap();
        }
        if let Some(c) = &self.complexity {
            let bound = if c.status == "exact" { "=" } else { ">=" };
            writeln!(s, "Complexity: c {bound} {} ({})", c.value, c.status).unwrap();
            writeln!(s, "  Ext^3 in degrees: {}", list(&c.ext3_degrees)).unwrap();
            if c.unbounded_pattern {
                writeln!(s, "  Ext^3 persists through the top of the window: growth looks unbounded").unwrap();
            }
            if let Some(d) = c.product_degree {
                writeln!(s, "  max entry degree of M3*M2: {d} (agrees: {})", c.product_degree_agrees).unwrap();
            }
            writeln!(s, "  max relation degree: {}", c.max_relation_degree).unwrap();
        }
        if let Some(d) = &self.central_extension {
            writeln!(s, "Central extension (central variable {}):", d.central).unwrap();
            for r in &d.relations {
                writeln!(s, "  {r}").unwrap();
            }
            writeln!(s, "  dimensions: {}", list(&d.dims)).unwrap();
        }
        if let Some(r) = &self.regularity {
            writeln!(s, "Regularity:").unwrap();
            regularity_text(&mut s, r);
        }
        if let Some(p) = &self.pbw {
            let status = if p.complexity_status == "exact" { "" } else { ", at least" };
            writeln!(s, "PBW: {} (c = {}{status}, window {})", p.verdict, p.complexity, p.window).unwrap();
            for (m, v) in &p.methods {
                writeln!(s, "  {m}: {v}").unwrap();
            }
            if let Some(j) = &p.jacobi {
                let cond = if j.conditional { " (conditional)" } else { "" };
                writeln!(s, "  jacobi checked for k <= {}{cond}", j.checked_to).unwrap();
                for f in &j.failures {
                    if f.k == 0 {
                        writeln!(s, "    P_1 is nonzero: {}", f.witness).unwrap();
                    } else {
                        writeln!(s, "    k = {}: {} lies in P_{} and F^{}T but not in P_{}", f.k, f.witness, f.k + 1, f.k, f.k).unwrap();
                    }
                }
            }
            if let Some(r) = &p.regularity {
                regularity_text(&mut s, r);
            }
            if let Some(c) = &p.condition4 {
                writeln!(s, "  condition pi_D(M3 f2 + f3 M1) = 0: {}", c.holds).unwrap();
                for r in &c.residuals {
                    writeln!(s, "    row {}: {}", r.row, r.class).unwrap();
                }
            }
            if let Some(o) = &p.oracle {
                writeln!(s, "  gr(U) dims: {}", list(&o.gr_dims)).unwrap();
                writeln!(s, "  A dims:     {}", list(&o.base_dims)).unwrap();
                writeln!(s, "  Phi injective through degree {}", o.injectivity_degree).unwrap();
            }
            if let Some(t) = &p.timings_ms {
                for (m, ms) in t {
                    writeln!(s, "  time {m}: {ms} ms").unwrap();
                }
            }
        }
        s
    }
}
