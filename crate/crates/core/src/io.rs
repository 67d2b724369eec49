//! JSON exchange documents: presentations, cochains and gauges.
//!
//! Coefficients are exact strings (`"-3/2"`, or residues for prime fields).
//! Unless `explicit_unit_terms` is set, `mu` lists only products of two
//! positive-degree elements and `delta` only reduced diagonal terms; the
//! unit and counit terms are synthesized.

use serde::{Deserialize, Serialize};

use crate::builtin;
use crate::cochain::{TotalCochain, Tridegree};
use crate::error::{AlgebraError, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::graded::{word, GradedBasis, GradedMap, GradedSpace};
use crate::hopf::{with_unit_terms, AxiomReport, DgHopf};

/// Name of the environment variable giving the default internal-degree cap
/// for infinite examples.
pub const DMAX_ENV: &str = "HOCART_DMAX";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// `rational`, `prime:5` or `5`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("rational") || t == "Q" {
            return Ok(FieldSpec::Rational);
        }
        let n = t.strip_prefix("prime:").unwrap_or(t);
        n.parse::<u64>()
            .map(FieldSpec::Prime)
            .map_err(|_| AlgebraError::Field(format!("unknown field '{s}'")))
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub label: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MulEntry {
    pub left: String,
    pub right: String,
    pub out: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoprodEntry {
    #[serde(rename = "in")]
    pub input: String,
    pub out_left: String,
    pub out_right: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearEntry {
    #[serde(rename = "in")]
    pub input: String,
    pub out: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: FieldSpec,
    pub basis: Vec<BasisEntry>,
    pub unit: String,
    /// The algebra is the quotient by all elements above this degree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<u32>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub explicit_unit_terms: bool,
    #[serde(default)]
    pub mu: Vec<MulEntry>,
    #[serde(default)]
    pub delta: Vec<CoprodEntry>,
    #[serde(default)]
    pub diff: Vec<LinearEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<LinearEntry>>,
}

/// A presentation over whichever field its document names.
pub enum AnyHopf {
    Rational(DgHopf<Rationals>),
    Prime(DgHopf<PrimeField>),
}

impl PresentationDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Parse(format!("presentation document: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Builds the structure without checking axioms.
    pub fn build<F: Field>(&self, field: F) -> Result<DgHopf<F>> {
        let basis = GradedBasis::new(self.basis.iter().map(|b| (b.label.clone(), b.degree)))?;
        let unit = basis.index_of(&self.unit).ok_or_else(|| AlgebraError::Parse(format!("unit '{}' is not a basis label", self.unit)))?;
        if unit != 0 {
            return Err(AlgebraError::Parse(format!("unit '{}' must be the degree-0 element", self.unit)));
        }
        let space = GradedSpace::new(field, basis);
        let b = &space.basis;
        let f = &space.field;
        let idx = |what: &str, l: &str| {
            b.index_of(l).ok_or_else(|| AlgebraError::Parse(format!("{what}: unknown label '{l}'")))
        };
        let coeff = |what: &str, c: &str| f.parse(c).map_err(|e| AlgebraError::Parse(format!("{what}: {e}")));

        let mut mu = GradedMap::zero(&space, 2, 1, 0);
        for (i, e) in self.mu.iter().enumerate() {
            let at = format!("mu[{i}] ({}, {} -> {})", e.left, e.right, e.out);
            let (l, r, o) = (idx(&at, &e.left)?, idx(&at, &e.right)?, idx(&at, &e.out)?);
            mu.add_entry(word(&[l, r]), word(&[o]), coeff(&at, &e.coeff)?)
                .map_err(|err| AlgebraError::Parse(format!("{at}: {err}")))?;
        }
        let mut delta = GradedMap::zero(&space, 1, 2, 0);
        for (i, e) in self.delta.iter().enumerate() {
            let at = format!("delta[{i}] ({} -> {} ⊗ {})", e.input, e.out_left, e.out_right);
            let (a, l, r) = (idx(&at, &e.input)?, idx(&at, &e.out_left)?, idx(&at, &e.out_right)?);
            delta.add_entry(word(&[a]), word(&[l, r]), coeff(&at, &e.coeff)?)
                .map_err(|err| AlgebraError::Parse(format!("{at}: {err}")))?;
        }
        let linear = |name: &str, entries: &[LinearEntry], degree: i32| -> Result<GradedMap<F>> {
            let mut m = GradedMap::zero(&space, 1, 1, degree);
            for (i, e) in entries.iter().enumerate() {
                let at = format!("{name}[{i}] ({} -> {})", e.input, e.out);
                let (a, o) = (idx(&at, &e.input)?, idx(&at, &e.out)?);
                m.add_entry(word(&[a]), word(&[o]), coeff(&at, &e.coeff)?)
                    .map_err(|err| AlgebraError::Parse(format!("{at}: {err}")))?;
            }
            Ok(m)
        };
        let d = linear("diff", &self.diff, 1)?;
        let antipode = self.antipode.as_ref().map(|a| linear("antipode", a, 0)).transpose()?;
        if self.explicit_unit_terms {
            DgHopf::new(space.clone(), mu, delta, d, antipode, self.truncation)
        } else {
            DgHopf::from_reduced(space.clone(), mu, delta, d, antipode, self.truncation)
        }
    }

    /// Builds and validates; axiom failures name the check and a witness.
    pub fn parse_presentation<F: Field>(&self, field: F) -> Result<DgHopf<F>> {
        let h = self.build(field)?;
        let report = h.validate();
        if !report.passed() {
            return Err(AlgebraError::Axiom(describe_failures(&report)));
        }
        Ok(h)
    }

    /// Builds over the document's field, or over `field` when given.
    pub fn build_any(&self, field: Option<FieldSpec>) -> Result<AnyHopf> {
        match field.unwrap_or(self.field) {
            FieldSpec::Rational => Ok(AnyHopf::Rational(self.build(Rationals)?)),
            FieldSpec::Prime(p) => Ok(AnyHopf::Prime(self.build(PrimeField::new(p)?)?)),
        }
    }

    /// The canonical document of a structure.
    pub fn emit<F: Field>(h: &DgHopf<F>, field: FieldSpec, name: Option<&str>) -> Self {
        let b = h.basis();
        let f = h.field();
        let label = |i: u16| b.label(i).to_string();
        let basis = (0..b.len() as u16).map(|i| BasisEntry { label: label(i), degree: b.degree(i) }).collect();
        let reduced_mu = h.mu().project(true, false);
        let reduced_delta = h.delta().project(true, true);
        let standard = with_unit_terms(h.space(), &reduced_mu, &reduced_delta)
            .map(|(m, d)| &m == h.mu() && &d == h.delta())
            .unwrap_or(false);
        let (mu, delta) = if standard { (reduced_mu, reduced_delta) } else { (h.mu().clone(), h.delta().clone()) };
        let linear = |m: &GradedMap<F>| {
            m.entries()
                .map(|(s, t, c)| LinearEntry { input: label(s[0]), out: label(t[0]), coeff: f.format(c) })
                .collect::<Vec<_>>()
        };
        PresentationDocument {
            name: name.map(str::to_string),
            field,
            basis,
            unit: label(0),
            truncation: h.truncation(),
            explicit_unit_terms: !standard,
            mu: mu
                .entries()
                .map(|(s, t, c)| MulEntry { left: label(s[0]), right: label(s[1]), out: label(t[0]), coeff: f.format(c) })
                .collect(),
            delta: delta
                .entries()
                .map(|(s, t, c)| CoprodEntry { input: label(s[0]), out_left: label(t[0]), out_right: label(t[1]), coeff: f.format(c) })
                .collect(),
            diff: linear(h.d()),
            antipode: h.given_antipode().map(linear),
        }
    }
}

pub fn describe_failures(report: &AxiomReport) -> String {
    report
        .failures()
        .map(|c| match &c.witness {
            Some(w) => format!("{} fails ({} residual terms) at {}", c.name, c.residual_terms, w),
            None => format!("{} fails ({} residual terms)", c.name, c.residual_terms),
        })
        .collect::<Vec<_>>()
        .join("; ")
}

pub const EXAMPLES: [&str; 5] = ["lambda1", "lambda2", "lambda3", "acyclic", "fp-trunc"];

/// Options for the built-in examples that need parameters.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExampleOptions {
    /// Internal-degree cap for `acyclic`.
    pub dmax: Option<u32>,
    /// Prime for `fp-trunc`.
    pub prime: Option<u32>,
}

pub fn example_document(name: &str, opts: ExampleOptions) -> Result<PresentationDocument> {
    let q = FieldSpec::Rational;
    match name {
        "lambda1" | "lambda2" | "lambda3" => {
            let n = name[6..].parse::<usize>().unwrap();
            Ok(PresentationDocument::emit(&builtin::exterior(n)?, q, Some(name)))
        }
        "acyclic" => {
            let cap = opts.dmax.ok_or_else(|| {
                AlgebraError::Window(format!("acyclic is infinite: give --dmax or set {DMAX_ENV}"))
            })?;
            Ok(PresentationDocument::emit(&builtin::acyclic(cap)?, q, Some(name)))
        }
        "fp-trunc" => {
            let p = opts.prime.unwrap_or(3);
            PrimeField::new(p as u64)?;
            // integer binomials, so the same document can be read over Q
            let h = builtin::truncated_polynomial_over(Rationals, p)?;
            Ok(PresentationDocument::emit(&h, FieldSpec::Prime(p as u64), Some(name)))
        }
        _ => Err(AlgebraError::Parse(format!("unknown example '{name}' (known: {})", EXAMPLES.join(", ")))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapEntry {
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartDocument {
    /// `[p, m, n]`
    pub tridegree: [i64; 3],
    pub entries: Vec<MapEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CochainDocument {
    pub degree: i64,
    pub parts: Vec<PartDocument>,
}

pub fn map_entries<F: Field>(h: &DgHopf<F>, m: &GradedMap<F>) -> Vec<MapEntry> {
    let b = h.basis();
    let labels = |w: &[u16]| w.iter().map(|&i| b.label(i).to_string()).collect();
    m.entries()
        .map(|(s, t, c)| MapEntry { source: labels(s), target: labels(t), coeff: h.field().format(c) })
        .collect()
}

pub fn map_from_entries<F: Field>(h: &DgHopf<F>, t: Tridegree, entries: &[MapEntry]) -> Result<GradedMap<F>> {
    let b = h.basis();
    let mut m = GradedMap::zero(h.space(), t.m, t.n, t.p as i32);
    for (i, e) in entries.iter().enumerate() {
        let at = format!("{t} entry {i}");
        if e.source.len() != t.m || e.target.len() != t.n {
            return Err(AlgebraError::Shape(format!("{at}: arity does not match the tridegree")));
        }
        let s = b.parse_word(&e.source).map_err(|err| AlgebraError::Parse(format!("{at}: {err}")))?;
        let w = b.parse_word(&e.target).map_err(|err| AlgebraError::Parse(format!("{at}: {err}")))?;
        let c = h.field().parse(&e.coeff).map_err(|err| AlgebraError::Parse(format!("{at}: {err}")))?;
        m.add_entry(s, w, c).map_err(|err| AlgebraError::Parse(format!("{at}: {err}")))?;
    }
    Ok(m)
}

impl CochainDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| AlgebraError::Parse(format!("cochain document: {e}")))
    }

    pub fn from_cochain<F: Field>(h: &DgHopf<F>, x: &TotalCochain<F>) -> Self {
        CochainDocument {
            degree: x.degree,
            parts: x
                .parts
                .iter()
                .filter(|(_, m)| !m.is_zero())
                .map(|(t, m)| PartDocument { tridegree: [t.p, t.m as i64, t.n as i64], entries: map_entries(h, m) })
                .collect(),
        }
    }

    pub fn to_cochain<F: Field>(&self, h: &DgHopf<F>) -> Result<TotalCochain<F>> {
        let mut x = TotalCochain::zero(self.degree);
        for part in &self.parts {
            let [p, m, n] = part.tridegree;
            if m < 0 || n < 0 {
                return Err(AlgebraError::Shape(format!("negative arity in tridegree {:?}", part.tridegree)));
            }
            let t = Tridegree::new(p, m as usize, n as usize);
            if t.total() != self.degree {
                return Err(AlgebraError::Degree(format!("part {t} is not in total degree {}", self.degree)));
            }
            x.add_part(t, &map_from_entries(h, t, &part.entries)?);
        }
        Ok(x)
    }
}
