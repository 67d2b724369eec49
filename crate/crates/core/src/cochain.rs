//! Cochains, complex windows and the component differentials.
//!
//! A cochain of tridegree `(p, m, n)` is a graded map `H^{⊗m} → H^{⊗n}` of
//! degree `p`. The Hochschild double complex pins `n = 1` (coefficients in
//! `A`), the Cartier double complex pins `m = 1` (coefficients in `C`); the
//! triple complex uses all three indices. All theories share the total
//! degree convention `p + m + n = r + 1` and the total differential
//!
//! `D = (-1)^{m(n+1)} d + (-1)^{n(p+1)} ∂ + (-1)^{p(m+1)} δ`,
//!
//! where the Hochschild complex drops `δ` and the Cartier complex drops `∂`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::graded::{GradedMap, Terms, Word};
use crate::hopf::DgHopf;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Tridegree {
    pub p: i64,
    pub m: usize,
    pub n: usize,
}

impl Tridegree {
    pub fn new(p: i64, m: usize, n: usize) -> Self {
        Tridegree { p, m, n }
    }
    pub fn total(&self) -> i64 {
        self.p + self.m as i64 + self.n as i64 - 1
    }
}

impl fmt::Display for Tridegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.p, self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Theory {
    Hopf,
    Hochschild,
    Cartier,
    Harrison,
}

impl Theory {
    /// Cochains vanish on tensors with a unit factor.
    pub fn reduced_sources(self) -> bool {
        !matches!(self, Theory::Cartier)
    }
    /// Cochains take values in tensors without unit factors.
    pub fn reduced_targets(self) -> bool {
        matches!(self, Theory::Hopf | Theory::Cartier)
    }
    pub fn uses_bar(self) -> bool {
        !matches!(self, Theory::Cartier)
    }
    pub fn uses_cobar(self) -> bool {
        matches!(self, Theory::Hopf | Theory::Cartier)
    }
    pub fn needs_coalgebra(self) -> bool {
        self.uses_cobar()
    }
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "hopf" => Ok(Theory::Hopf),
            "hochschild" => Ok(Theory::Hochschild),
            "cartier" => Ok(Theory::Cartier),
            "harrison" => Ok(Theory::Harrison),
            _ => Err(AlgebraError::Parse(format!("unknown theory {s:?}"))),
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Theory::Hopf => "hopf",
            Theory::Hochschild => "hochschild",
            Theory::Cartier => "cartier",
            Theory::Harrison => "harrison",
        };
        f.write_str(s)
    }
}

/// The truncation parameter `q`: components with `p < 3 - q` are dropped.
/// Serializes as the number `q` or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Truncation {
    Finite(u32),
    Infinite,
}

impl Truncation {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Truncation::Infinite),
            _ => s.parse().map(Truncation::Finite).map_err(|_| AlgebraError::Parse(format!("bad truncation {s:?}"))),
        }
    }
    pub fn min_p(self) -> Option<i64> {
        match self {
            Truncation::Finite(q) => Some(3 - q as i64),
            Truncation::Infinite => None,
        }
    }
}

impl Serialize for Truncation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Truncation::Finite(q) => s.serialize_u32(*q),
            Truncation::Infinite => s.serialize_str("inf"),
        }
    }
}

impl fmt::Display for Truncation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Truncation::Finite(q) => write!(f, "{q}"),
            Truncation::Infinite => f.write_str("inf"),
        }
    }
}

/// A finite slice of one of the cochain complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    pub theory: Theory,
    pub q: Truncation,
    /// Restricted complexes drop `m = 0` and `n = 0`.
    pub restricted: bool,
    pub m_max: Option<usize>,
    pub n_max: Option<usize>,
}

impl Window {
    /// Restricted, truncated window.
    pub fn truncated(theory: Theory, q: u32) -> Self {
        Window { theory, q: Truncation::Finite(q), restricted: true, m_max: None, n_max: None }
    }

    pub fn with_caps(mut self, m_max: Option<usize>, n_max: Option<usize>) -> Self {
        self.m_max = m_max;
        self.n_max = n_max;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if let Truncation::Finite(q) = self.q {
            if q < 3 {
                return Err(AlgebraError::Window(format!("truncation q = {q} must be at least 3")));
            }
        }
        if self.q == Truncation::Infinite {
            let free_m = self.theory != Theory::Cartier;
            let free_n = matches!(self.theory, Theory::Hopf | Theory::Cartier);
            if (free_m && self.m_max.is_none()) || (free_n && self.n_max.is_none()) {
                return Err(AlgebraError::Window("q = ∞ requires explicit caps on the external degrees".into()));
            }
        }
        Ok(())
    }

    fn m_range(&self) -> (usize, Option<usize>) {
        if self.theory == Theory::Cartier {
            return (1, Some(1));
        }
        ((self.restricted as usize), self.m_max)
    }

    fn n_range(&self) -> (usize, Option<usize>) {
        if matches!(self.theory, Theory::Hochschild | Theory::Harrison) {
            return (1, Some(1));
        }
        ((self.restricted as usize), self.n_max)
    }

    pub fn contains(&self, t: Tridegree) -> bool {
        let (m0, m1) = self.m_range();
        let (n0, n1) = self.n_range();
        t.m >= m0
            && m1.is_none_or(|x| t.m <= x)
            && t.n >= n0
            && n1.is_none_or(|x| t.n <= x)
            && self.q.min_p().is_none_or(|p0| t.p >= p0)
    }

    /// Components of total degree `r`, in lexicographic order.
    pub fn components(&self, r: i64) -> Result<Vec<Tridegree>> {
        self.validate()?;
        let (m0, m1) = self.m_range();
        let (n0, n1) = self.n_range();
        let bound = match self.q.min_p() {
            // p ≥ p0 and p + m + n = r + 1
            Some(p0) => (r + 1 - p0).max(0) as usize,
            None => m1.unwrap_or(0) + n1.unwrap_or(0),
        };
        let mut out = Vec::new();
        for m in m0..=m1.unwrap_or(bound).min(bound) {
            for n in n0..=n1.unwrap_or(bound).min(bound) {
                let t = Tridegree::new(r + 1 - m as i64 - n as i64, m, n);
                if self.contains(t) {
                    out.push(t);
                }
            }
        }
        out.sort();
        Ok(out)
    }
}

/// A homogeneous element of the total complex.
#[derive(Clone, Debug)]
pub struct TotalCochain<F: Field> {
    pub degree: i64,
    pub parts: BTreeMap<Tridegree, GradedMap<F>>,
}

impl<F: Field> PartialEq for TotalCochain<F> {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.nonzero_parts().eq(other.nonzero_parts())
    }
}

impl<F: Field> TotalCochain<F> {
    pub fn zero(degree: i64) -> Self {
        TotalCochain { degree, parts: BTreeMap::new() }
    }

    pub fn single(tri: Tridegree, map: GradedMap<F>) -> Self {
        let mut t = Self::zero(tri.total());
        t.add_part(tri, &map);
        t
    }

    fn nonzero_parts(&self) -> impl Iterator<Item = (&Tridegree, &GradedMap<F>)> {
        self.parts.iter().filter(|(_, m)| !m.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.parts.values().all(|m| m.is_zero())
    }

    pub fn part(&self, t: Tridegree) -> Option<&GradedMap<F>> {
        self.parts.get(&t).filter(|m| !m.is_zero())
    }

    pub fn add_part(&mut self, t: Tridegree, map: &GradedMap<F>) {
        let one = map.field().one();
        self.add_part_scaled(t, map, &one);
    }

    pub fn add_part_scaled(&mut self, t: Tridegree, map: &GradedMap<F>, c: &F::Elem) {
        debug_assert_eq!(t.total(), self.degree);
        match self.parts.get_mut(&t) {
            Some(m) => m.add_scaled_in_place(map, c),
            None => {
                self.parts.insert(t, map.scale(c));
            }
        }
        if self.parts.get(&t).is_some_and(|m| m.is_zero()) {
            self.parts.remove(&t);
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &TotalCochain<F>, c: &F::Elem) -> Result<Self> {
        if self.degree != other.degree {
            return Err(AlgebraError::Shape(format!("total degrees {} and {} differ", self.degree, other.degree)));
        }
        let mut out = self.clone();
        for (t, m) in &other.parts {
            out.add_part_scaled(*t, m, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TotalCochain<F>) -> Result<Self> {
        match other.parts.values().next() {
            Some(m) => self.add_scaled(other, &m.field().from_int(-1)),
            None => Ok(self.clone()),
        }
    }

    /// Lowest `p` among nonzero parts.
    pub fn lowest_p(&self) -> Option<i64> {
        self.nonzero_parts().map(|(t, _)| t.p).min()
    }
}

fn sign_parity(e: i64) -> bool {
    e.rem_euclid(2) == 1
}

/// Evaluates the component differentials of one theory on a given algebra.
pub struct Differentials<'a, F: Field> {
    pub h: &'a DgHopf<F>,
    pub theory: Theory,
}

impl<'a, F: Field> Differentials<'a, F> {
    pub fn new(h: &'a DgHopf<F>, theory: Theory) -> Result<Self> {
        if theory.needs_coalgebra() && h.truncation().is_some() {
            return Err(AlgebraError::Unsupported(format!(
                "the {theory} complex needs a genuine Hopf algebra, not a degree truncation"
            )));
        }
        Ok(Differentials { h, theory })
    }

    /// Candidate source words of the given arity with degree in `lo..=hi`.
    fn source_words(&self, arity: usize, lo: i64, hi: i64, raw: bool) -> Vec<Word> {
        if hi < 0 || hi < lo {
            return Vec::new();
        }
        self.h.basis().words_in_range(arity, lo.max(0) as u32, hi as u32, self.theory.reduced_sources() && !raw)
    }

    fn column_degrees(&self, f: &GradedMap<F>) -> Option<(i64, i64)> {
        let s = self.h.space();
        let mut it = f.columns().keys().map(|w| s.word_degree(w) as i64);
        let first = it.next()?;
        Some(it.fold((first, first), |(a, b), x| (a.min(x), b.max(x))))
    }

    fn finish(&self, map: GradedMap<F>, raw: bool) -> GradedMap<F> {
        if raw {
            map
        } else {
            map.project(self.theory.reduced_sources(), self.theory.reduced_targets())
        }
    }

    fn apply_to_terms(&self, v: &Terms<F::Elem>, g: impl Fn(&[u16]) -> Terms<F::Elem>) -> Terms<F::Elem> {
        let s = self.h.space();
        let mut out = Terms::new();
        for (w, c) in v {
            s.axpy(&mut out, c, &g(w));
        }
        out
    }

    /// Component of `D` raising `p`: `(-1)^p f∘d_(m-2) − d_(n-2)∘f`.
    pub fn internal(&self, f: &GradedMap<F>, raw: bool) -> GradedMap<F> {
        let h = self.h;
        let field = h.field();
        let (p, m, n) = (f.degree() as i64, f.source_arity(), f.target_arity());
        let sign = field.sign(sign_parity(p));
        let m1 = field.from_int(-1);
        let degrees: std::collections::BTreeSet<u32> = f.columns().keys().map(|w| h.space().word_degree(w)).collect();
        let mut out = GradedMap::zero(h.space(), m, n, p as i32 + 1);
        let Some((lo, hi)) = self.column_degrees(f) else { return out };
        for w in self.source_words(m, lo - 1, hi, raw) {
            let s = h.space().word_degree(&w);
            let mut v = Terms::new();
            if degrees.contains(&(s + 1)) {
                let dw = h.internal_diff(&w);
                h.space().axpy(&mut v, &sign, &f.apply(&dw));
            }
            if let Some(col) = f.column(&w) {
                let dfw = self.apply_to_terms(col, |u| h.internal_diff(u));
                h.space().axpy(&mut v, &m1, &dfw);
            }
            if !v.is_empty() {
                out.add_column(w, &v, &field.one()).expect("homogeneous");
            }
        }
        let _ = n;
        self.finish(out, raw)
    }

    /// Component raising `m`: `λⁿ(1⊗f) − f∘∂_(m-1) + (-1)^{m+1} ρⁿ(f⊗1)`.
    pub fn bar(&self, f: &GradedMap<F>, raw: bool) -> GradedMap<F> {
        let h = self.h;
        let field = h.field();
        let (p, m, n) = (f.degree() as i64, f.source_arity(), f.target_arity());
        let m1 = field.from_int(-1);
        let right_sign = field.sign(sign_parity(m as i64 + 1));
        let mut out = GradedMap::zero(h.space(), m + 1, n, p as i32);
        let degrees: std::collections::BTreeSet<u32> = f.columns().keys().map(|w| h.space().word_degree(w)).collect();
        let Some((lo, hi)) = self.column_degrees(f) else { return out };
        let top = h.basis().top_degree() as i64;
        for w in self.source_words(m + 1, lo, hi + top, raw) {
            let s = h.space().word_degree(&w);
            let mut v = Terms::new();
            if let Some(col) = f.column(&w[1..]) {
                let a = w[0];
                let sign = field.sign(sign_parity(p * h.deg(a) as i64));
                let t = self.apply_to_terms(col, |y| h.left_action(a, y));
                h.space().axpy(&mut v, &sign, &t);
            }
            if m >= 1 && degrees.contains(&s) {
                let bw = h.bar_diff(&w);
                h.space().axpy(&mut v, &m1, &f.apply(&bw));
            }
            if let Some(col) = f.column(&w[..m]) {
                let a = w[m];
                let t = self.apply_to_terms(col, |y| h.right_action(y, a));
                h.space().axpy(&mut v, &right_sign, &t);
            }
            if !v.is_empty() {
                out.add_column(w, &v, &field.one()).expect("homogeneous");
            }
        }
        self.finish(out, raw)
    }

    /// Component raising `n`: `(1⊗f)λ_m − δ_(n-2)∘f + (-1)^{n+1} (f⊗1)ρ_m`.
    pub fn cobar(&self, f: &GradedMap<F>, raw: bool) -> GradedMap<F> {
        let h = self.h;
        let field = h.field();
        let space = h.space();
        let (p, m, n) = (f.degree() as i64, f.source_arity(), f.target_arity());
        let m1 = field.from_int(-1);
        let right_sign = field.sign(sign_parity(n as i64 + 1));
        let mut out = GradedMap::zero(space, m, n + 1, p as i32);
        let Some((lo, hi)) = self.column_degrees(f) else { return out };
        let top = h.basis().top_degree() as i64;
        for w in self.source_words(m, lo, hi + top, raw) {
            let mut v = Terms::new();
            for (u, cu) in h.left_coaction(&w) {
                if let Some(col) = f.column(&u[1..]) {
                    let a = u[0];
                    let c = field.mul(&cu, &field.sign(sign_parity(p * h.deg(a) as i64)));
                    for (t, ct) in col {
                        let mut z = Word::from_slice(&[a]);
                        z.extend_from_slice(t);
                        space.add_term(&mut v, z, field.mul(&c, ct));
                    }
                }
            }
            if let Some(col) = f.column(&w) {
                if n >= 1 {
                    let t = self.apply_to_terms(col, |y| h.cobar_diff(y));
                    space.axpy(&mut v, &m1, &t);
                }
            }
            for (u, cu) in h.right_coaction(&w) {
                if let Some(col) = f.column(&u[..m]) {
                    let a = u[m];
                    let c = field.mul(&cu, &right_sign);
                    for (t, ct) in col {
                        let mut z = t.clone();
                        z.push(a);
                        space.add_term(&mut v, z, field.mul(&c, ct));
                    }
                }
            }
            if !v.is_empty() {
                out.add_column(w, &v, &field.one()).expect("homogeneous");
            }
        }
        self.finish(out, raw)
    }

    /// Total differential of a single component, as (tridegree, map) parts.
    pub fn total_parts(&self, t: Tridegree, f: &GradedMap<F>) -> Vec<(Tridegree, GradedMap<F>)> {
        let field = self.h.field();
        let (p, m, n) = (t.p, t.m as i64, t.n as i64);
        let mut out = Vec::new();
        let d = self.internal(f, false);
        out.push((Tridegree::new(t.p + 1, t.m, t.n), d.scale(&field.sign(sign_parity(m * (n + 1))))));
        if self.theory.uses_bar() {
            let b = self.bar(f, false);
            out.push((Tridegree::new(t.p, t.m + 1, t.n), b.scale(&field.sign(sign_parity(n * (p + 1))))));
        }
        if self.theory.uses_cobar() {
            let c = self.cobar(f, false);
            out.push((Tridegree::new(t.p, t.m, t.n + 1), c.scale(&field.sign(sign_parity(p * (m + 1))))));
        }
        out.retain(|(_, g)| !g.is_zero());
        out
    }

    /// `D` applied to a total cochain; parts outside `window` are dropped and
    /// reported through the returned flag.
    pub fn total(&self, x: &TotalCochain<F>, window: Option<&Window>) -> (TotalCochain<F>, bool) {
        let mut out = TotalCochain::zero(x.degree + 1);
        let mut clipped = false;
        for (t, f) in &x.parts {
            for (t2, g) in self.total_parts(*t, f) {
                if window.is_none_or(|w| w.contains(t2)) {
                    out.add_part(t2, &g);
                } else {
                    clipped = true;
                }
            }
        }
        (out, clipped)
    }
}

/// Coordinates `(source word, target word)` of the cochains of one
/// tridegree, ordered lexicographically.
pub fn component_coords<F: Field>(h: &DgHopf<F>, theory: Theory, t: Tridegree) -> Vec<(Word, Word)> {
    let b = h.basis();
    let mut out = Vec::new();
    let max_target = t.n as i64 * b.top_degree() as i64;
    if max_target - t.p < 0 {
        return out;
    }
    let mut by_degree: BTreeMap<u32, Vec<Word>> = BTreeMap::new();
    for w in b.words_up_to_degree(t.m, (max_target - t.p) as u32, theory.reduced_sources()) {
        by_degree.entry(b.word_degree(&w)).or_default().push(w);
    }
    let mut targets: BTreeMap<u32, Vec<Word>> = BTreeMap::new();
    for (s, ws) in &by_degree {
        let td = *s as i64 + t.p;
        if td < 0 {
            continue;
        }
        let ts = targets.entry(td as u32).or_insert_with(|| b.words_of_degree(t.n, td as u32, theory.reduced_targets()));
        for w in ws {
            for tw in ts.iter() {
                out.push((w.clone(), tw.clone()));
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::graded::GradedMap;

    fn basis_cochain<F: Field>(h: &DgHopf<F>, t: Tridegree, s: &Word, w: &Word) -> GradedMap<F> {
        let mut f = GradedMap::zero(h.space(), t.m, t.n, t.p as i32);
        f.add_entry(s.clone(), w.clone(), h.field().one()).unwrap();
        f
    }

    #[test]
    fn window_components() {
        let w = Window::truncated(Theory::Hopf, 3);
        assert_eq!(
            w.components(2).unwrap(),
            vec![Tridegree::new(0, 1, 2), Tridegree::new(0, 2, 1), Tridegree::new(1, 1, 1)]
        );
        let hw = Window::truncated(Theory::Hochschild, 3);
        assert_eq!(hw.components(2).unwrap(), vec![Tridegree::new(0, 2, 1), Tridegree::new(1, 1, 1)]);
        let inf = Window { theory: Theory::Hopf, q: Truncation::Infinite, restricted: true, m_max: None, n_max: None };
        assert!(inf.components(2).is_err());
        assert!(Window::truncated(Theory::Hopf, 2).components(0).is_err());
    }

    #[test]
    fn hopf_differential_squares_to_zero_on_exterior_two() {
        let h = builtin::exterior(2).unwrap();
        let d = Differentials::new(&h, Theory::Hopf).unwrap();
        let w = Window::truncated(Theory::Hopf, 3);
        for r in 1..=2 {
            for t in w.components(r).unwrap() {
                for (s, tw) in component_coords(&h, Theory::Hopf, t) {
                    let x = TotalCochain::single(t, basis_cochain(&h, t, &s, &tw));
                    let (dx, _) = d.total(&x, None);
                    let (ddx, _) = d.total(&dx, None);
                    assert!(ddx.is_zero(), "D² ≠ 0 on {t} {:?}", (s, tw));
                }
            }
        }
    }

    #[test]
    fn raw_differentials_preserve_reduced_cochains() {
        let h = builtin::exterior(2).unwrap();
        let d = Differentials::new(&h, Theory::Hopf).unwrap();
        for t in [Tridegree::new(0, 1, 1), Tridegree::new(0, 2, 1), Tridegree::new(1, 1, 2)] {
            for (s, tw) in component_coords(&h, Theory::Hopf, t) {
                let f = basis_cochain(&h, t, &s, &tw);
                for g in [d.internal(&f, true), d.bar(&f, true), d.cobar(&f, true)] {
                    assert!(g.is_reduced(true, true));
                }
            }
        }
    }
}
