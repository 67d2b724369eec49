//! Differential graded Hopf algebras given by structure constants.
//!
//! Besides validation this module provides the word-level structure maps
//! used everywhere else: products, coproducts, the differential and the
//! interior tensor powers `λⁿ, ρⁿ` (actions of `H` on `H^{⊗n}`) and
//! `λ_m, ρ_m` (coactions of `H` on `H^{⊗m}`).

use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::graded::{word, GradedBasis, GradedMap, GradedSpace, Terms, Word};

#[derive(Clone, Debug)]
pub struct DgHopf<F: Field> {
    space: Arc<GradedSpace<F>>,
    mu: GradedMap<F>,
    delta: GradedMap<F>,
    d: GradedMap<F>,
    antipode: GradedMap<F>,
    given_antipode: Option<GradedMap<F>>,
    truncation: Option<u32>,
    mul_t: Vec<Vec<(u16, F::Elem)>>,
    delta_t: Vec<Vec<(u16, u16, F::Elem)>>,
    d_t: Vec<Vec<(u16, F::Elem)>>,
}

/// Result of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub residual_terms: usize,
    /// First failing source and its nonzero residual, human readable.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl<F: Field> DgHopf<F> {
    /// Builds the structure from full structure maps. `truncation = Some(D)`
    /// marks the quotient by all elements of degree above `D` of an infinite
    /// algebra; identities are then only required where no degree above `D`
    /// can occur.
    pub fn new(
        space: Arc<GradedSpace<F>>,
        mu: GradedMap<F>,
        delta: GradedMap<F>,
        d: GradedMap<F>,
        given_antipode: Option<GradedMap<F>>,
        truncation: Option<u32>,
    ) -> Result<Self> {
        let shape = |m: &GradedMap<F>, s, t, p, what: &str| -> Result<()> {
            if (m.source_arity(), m.target_arity(), m.degree()) != (s, t, p) {
                return Err(AlgebraError::Shape(format!("{what} must be a map {s}→{t} of degree {p}")));
            }
            Ok(())
        };
        shape(&mu, 2, 1, 0, "product")?;
        shape(&delta, 1, 2, 0, "coproduct")?;
        shape(&d, 1, 1, 1, "differential")?;
        if let Some(s) = &given_antipode {
            shape(s, 1, 1, 0, "antipode")?;
        }
        let n = space.basis.len();
        let mut mul_t = vec![Vec::new(); n * n];
        for (s, t, c) in mu.entries() {
            mul_t[s[0] as usize * n + s[1] as usize].push((t[0], c.clone()));
        }
        let mut delta_t = vec![Vec::new(); n];
        for (s, t, c) in delta.entries() {
            delta_t[s[0] as usize].push((t[0], t[1], c.clone()));
        }
        let mut d_t = vec![Vec::new(); n];
        for (s, t, c) in d.entries() {
            d_t[s[0] as usize].push((t[0], c.clone()));
        }
        let placeholder = GradedMap::zero(&space, 1, 1, 0);
        let mut h = DgHopf {
            space,
            mu,
            delta,
            d,
            antipode: placeholder,
            given_antipode,
            truncation,
            mul_t,
            delta_t,
            d_t,
        };
        h.antipode = h.compute_antipode();
        Ok(h)
    }

    /// Structure maps from reduced data: the unit and counit terms
    /// `μ(1⊗a) = μ(a⊗1) = a`, `Δ(a) = a⊗1 + 1⊗a + …`, `Δ(1) = 1⊗1` are added.
    pub fn from_reduced(
        space: Arc<GradedSpace<F>>,
        mu_reduced: GradedMap<F>,
        delta_reduced: GradedMap<F>,
        d: GradedMap<F>,
        given_antipode: Option<GradedMap<F>>,
        truncation: Option<u32>,
    ) -> Result<Self> {
        let (mu, delta) = with_unit_terms(&space, &mu_reduced, &delta_reduced)?;
        Self::new(space, mu, delta, d, given_antipode, truncation)
    }

    pub fn space(&self) -> &Arc<GradedSpace<F>> {
        &self.space
    }
    pub fn field(&self) -> &F {
        &self.space.field
    }
    pub fn basis(&self) -> &GradedBasis {
        &self.space.basis
    }
    pub fn mu(&self) -> &GradedMap<F> {
        &self.mu
    }
    pub fn delta(&self) -> &GradedMap<F> {
        &self.delta
    }
    pub fn d(&self) -> &GradedMap<F> {
        &self.d
    }
    pub fn antipode(&self) -> &GradedMap<F> {
        &self.antipode
    }
    pub fn given_antipode(&self) -> Option<&GradedMap<F>> {
        self.given_antipode.as_ref()
    }
    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }
    pub fn dim(&self) -> usize {
        self.space.basis.len()
    }
    pub fn deg(&self, i: u16) -> u32 {
        self.space.deg(i)
    }

    /// Same structure with new structure maps, keeping basis and truncation.
    pub fn with_maps(&self, mu: GradedMap<F>, delta: GradedMap<F>, d: GradedMap<F>) -> Result<Self> {
        Self::new(self.space.clone(), mu, delta, d, None, self.truncation)
    }

    /// Quotient by all basis elements of degree above `cap`.
    pub fn truncate(&self, cap: u32) -> Result<Self> {
        let b = &self.space.basis;
        let keep: Vec<u16> = (0..b.len() as u16).filter(|&i| b.degree(i) <= cap).collect();
        let mut new_index = vec![None; b.len()];
        for (k, &i) in keep.iter().enumerate() {
            new_index[i as usize] = Some(k as u16);
        }
        let basis = GradedBasis::new(keep.iter().map(|&i| (b.label(i).to_string(), b.degree(i))))?;
        let space = GradedSpace::new(self.space.field.clone(), basis);
        let remap = |m: &GradedMap<F>| -> Result<GradedMap<F>> {
            let mut out = GradedMap::zero(&space, m.source_arity(), m.target_arity(), m.degree());
            for (s, t, c) in m.entries() {
                let s2: Option<Word> = s.iter().map(|&i| new_index[i as usize]).collect();
                let t2: Option<Word> = t.iter().map(|&i| new_index[i as usize]).collect();
                if let (Some(s2), Some(t2)) = (s2, t2) {
                    out.add_entry(s2, t2, c.clone())?;
                }
            }
            Ok(out)
        };
        let cap = Some(self.truncation.map_or(cap, |t| t.min(cap)));
        let given = self.given_antipode.as_ref().map(remap).transpose()?;
        Self::new(space.clone(), remap(&self.mu)?, remap(&self.delta)?, remap(&self.d)?, given, cap)
    }

    // ---- word-level structure maps ----

    pub fn mul(&self, a: u16, b: u16) -> &[(u16, F::Elem)] {
        &self.mul_t[a as usize * self.dim() + b as usize]
    }

    pub fn coproduct(&self, a: u16) -> &[(u16, u16, F::Elem)] {
        &self.delta_t[a as usize]
    }

    pub fn diff(&self, a: u16) -> &[(u16, F::Elem)] {
        &self.d_t[a as usize]
    }

    /// `Σ_i (-1)^{|x_1|+…+|x_i|} x_1⊗…⊗d x_{i+1}⊗…`.
    pub fn internal_diff(&self, w: &[u16]) -> Terms<F::Elem> {
        let f = self.field();
        let mut out = Terms::new();
        let mut parity = 0;
        for i in 0..w.len() {
            let sign = f.sign(parity % 2 == 1);
            for (b, c) in self.diff(w[i]) {
                let mut t = Word::from_slice(w);
                t[i] = *b;
                self.space.add_term(&mut out, t, f.mul(&sign, c));
            }
            parity += self.deg(w[i]);
        }
        out
    }

    /// Bar differential `Σ_i (-1)^i 1^{⊗i}⊗μ⊗1^{⊗…}` on a word of arity ≥ 2.
    pub fn bar_diff(&self, w: &[u16]) -> Terms<F::Elem> {
        let f = self.field();
        let mut out = Terms::new();
        for i in 0..w.len().saturating_sub(1) {
            let sign = f.sign(i % 2 == 1);
            for (b, c) in self.mul(w[i], w[i + 1]) {
                let mut t = Word::from_slice(&w[..i]);
                t.push(*b);
                t.extend_from_slice(&w[i + 2..]);
                self.space.add_term(&mut out, t, f.mul(&sign, c));
            }
        }
        out
    }

    /// Cobar differential `Σ_i (-1)^i 1^{⊗i}⊗Δ⊗1^{⊗…}`.
    pub fn cobar_diff(&self, w: &[u16]) -> Terms<F::Elem> {
        let f = self.field();
        let mut out = Terms::new();
        for i in 0..w.len() {
            let sign = f.sign(i % 2 == 1);
            for (b1, b2, c) in self.coproduct(w[i]) {
                let mut t = Word::from_slice(&w[..i]);
                t.push(*b1);
                t.push(*b2);
                t.extend_from_slice(&w[i + 1..]);
                self.space.add_term(&mut out, t, f.mul(&sign, c));
            }
        }
        out
    }

    /// `λⁿ(a ⊗ y)`: `a` acts on `y ∈ H^{⊗n}` through the iterated coproduct.
    /// For `n = 0` this is the counit.
    pub fn left_action(&self, a: u16, y: &[u16]) -> Terms<F::Elem> {
        let f = self.field();
        let mut out = Terms::new();
        if y.is_empty() {
            if a == 0 {
                out.insert(Word::new(), f.one());
            }
            return out;
        }
        for (a1, a2, c) in self.coproduct(a) {
            let first = self.mul(*a1, y[0]);
            if first.is_empty() {
                continue;
            }
            let sign = f.sign(self.deg(*a2) % 2 == 1 && self.deg(y[0]) % 2 == 1);
            let c = f.mul(c, &sign);
            let rest = self.left_action(*a2, &y[1..]);
            for (b, cb) in first {
                let cc = f.mul(&c, cb);
                for (r, cr) in &rest {
                    let mut t = word(&[*b]);
                    t.extend_from_slice(r);
                    self.space.add_term(&mut out, t, f.mul(&cc, cr));
                }
            }
        }
        out
    }

    /// `ρⁿ(y ⊗ a)`.
    pub fn right_action(&self, y: &[u16], a: u16) -> Terms<F::Elem> {
        let f = self.field();
        let mut out = Terms::new();
        let n = y.len();
        if n == 0 {
            if a == 0 {
                out.insert(Word::new(), f.one());
            }
            return out;
        }
        for (a1, a2, c) in self.coproduct(a) {
            let last = self.mul(y[n - 1], *a2);
            if last.is_empty() {
                continue;
            }
            let sign = f.sign(self.deg(y[n - 1]) % 2 == 1 && self.deg(*a1) % 2 == 1);
            let c = f.mul(c, &sign);
            let rest = self.right_action(&y[..n - 1], *a1);
            for (r, cr) in &rest {
                let cc = f.mul(&c, cr);
                for (b, cb) in last {
                    let mut t = r.clone();
                    t.push(*b);
                    self.space.add_term(&mut out, t, f.mul(&cc, cb));
                }
            }
        }
        out
    }

    /// `λ_m(w) ∈ H ⊗ H^{⊗m}`: the product of the left coproduct factors,
    /// followed by the right factors. For `m = 0` this is the unit.
    pub fn left_coaction(&self, w: &[u16]) -> Terms<F::Elem> {
        let f = self.field();
        let mut out = Terms::new();
        if w.is_empty() {
            out.insert(word(&[0]), f.one());
            return out;
        }
        let rest = self.left_coaction(&w[1..]);
        for (a1, a2, c) in self.coproduct(w[0]) {
            for (r, cr) in &rest {
                let sign = f.sign(self.deg(*a2) % 2 == 1 && self.deg(r[0]) % 2 == 1);
                let cc = f.mul(&f.mul(c, cr), &sign);
                for (b, cb) in self.mul(*a1, r[0]) {
                    let mut t = word(&[*b, *a2]);
                    t.extend_from_slice(&r[1..]);
                    self.space.add_term(&mut out, t, f.mul(&cc, cb));
                }
            }
        }
        out
    }

    /// `ρ_m(w) ∈ H^{⊗m} ⊗ H`.
    pub fn right_coaction(&self, w: &[u16]) -> Terms<F::Elem> {
        let f = self.field();
        let mut out = Terms::new();
        let m = w.len();
        if m == 0 {
            out.insert(word(&[0]), f.one());
            return out;
        }
        let rest = self.right_coaction(&w[..m - 1]);
        for (r, cr) in &rest {
            let rl = r[r.len() - 1];
            for (a1, a2, c) in self.coproduct(w[m - 1]) {
                let sign = f.sign(self.deg(rl) % 2 == 1 && self.deg(*a1) % 2 == 1);
                let cc = f.mul(&f.mul(c, cr), &sign);
                for (b, cb) in self.mul(rl, *a2) {
                    let mut t = Word::from_slice(&r[..r.len() - 1]);
                    t.push(*a1);
                    t.push(*b);
                    self.space.add_term(&mut out, t, f.mul(&cc, cb));
                }
            }
        }
        out
    }

    // ---- materialized maps ----

    fn materialize(&self, s: usize, t: usize, p: i32, g: impl FnMut(&Word) -> Terms<F::Elem>) -> GradedMap<F> {
        GradedMap::from_fn(&self.space, s, t, p, self.space.basis.words(s, false), g).expect("structure map is homogeneous")
    }

    pub fn left_action_map(&self, n: usize) -> GradedMap<F> {
        self.materialize(n + 1, n, 0, |w| self.left_action(w[0], &w[1..]))
    }
    pub fn right_action_map(&self, n: usize) -> GradedMap<F> {
        self.materialize(n + 1, n, 0, |w| self.right_action(&w[..n], w[n]))
    }
    pub fn left_coaction_map(&self, m: usize) -> GradedMap<F> {
        self.materialize(m, m + 1, 0, |w| self.left_coaction(w))
    }
    pub fn right_coaction_map(&self, m: usize) -> GradedMap<F> {
        self.materialize(m, m + 1, 0, |w| self.right_coaction(w))
    }

    pub fn unit_map(&self) -> GradedMap<F> {
        let mut m = GradedMap::zero(&self.space, 0, 1, 0);
        m.add_entry(Word::new(), word(&[0]), self.field().one()).unwrap();
        m
    }

    pub fn counit_map(&self) -> GradedMap<F> {
        let mut m = GradedMap::zero(&self.space, 1, 0, 0);
        m.add_entry(word(&[0]), Word::new(), self.field().one()).unwrap();
        m
    }

    fn compute_antipode(&self) -> GradedMap<F> {
        let f = self.field();
        let b = self.basis();
        let mut order: Vec<u16> = (0..b.len() as u16).collect();
        order.sort_by_key(|&i| (b.degree(i), i));
        let mut s: Vec<Terms<F::Elem>> = vec![Terms::new(); b.len()];
        for a in order {
            let mut v = Terms::new();
            if a == 0 {
                v.insert(word(&[0]), f.one());
            } else {
                self.space.add_term(&mut v, word(&[a]), f.from_int(-1));
                for (a1, a2, c) in self.coproduct(a) {
                    if *a1 == 0 || *a2 == 0 {
                        continue;
                    }
                    for (t, ct) in s[*a2 as usize].clone() {
                        for (p, cp) in self.mul(*a1, t[0]) {
                            self.space.add_term(&mut v, word(&[*p]), f.neg(&f.mul(&f.mul(c, &ct), cp)));
                        }
                    }
                }
            }
            s[a as usize] = v;
        }
        let mut m = GradedMap::zero(&self.space, 1, 1, 0);
        let one = f.one();
        for (a, v) in s.iter().enumerate() {
            // a non-counital coproduct can produce inhomogeneous values; keep the homogeneous part
            let v: Terms<F::Elem> = v.iter().filter(|(t, _)| b.degree(t[0]) == b.degree(a as u16)).map(|(t, c)| (t.clone(), c.clone())).collect();
            m.add_column(word(&[a as u16]), &v, &one).unwrap();
        }
        m
    }

    // ---- validation ----

    fn check_identity(&self, name: &str, arity: usize, degree: u32, residual: impl Fn(&Word) -> Terms<F::Elem>) -> AxiomCheck {
        let b = self.basis();
        let mut count = 0;
        let mut witness = None;
        for w in b.words(arity, false) {
            if let Some(cap) = self.truncation {
                if b.word_degree(&w) + degree > cap {
                    continue;
                }
            }
            let r = residual(&w);
            if !r.is_empty() {
                count += r.len();
                if witness.is_none() {
                    let terms: Vec<String> = r
                        .iter()
                        .map(|(t, c)| format!("{}·{}", self.field().format(c), b.format_word(t)))
                        .collect();
                    witness = Some(format!("{} ↦ {}", b.format_word(&w), terms.join(" + ")));
                }
            }
        }
        AxiomCheck { name: name.to_string(), passed: count == 0, residual_terms: count, witness }
    }

    fn terms_sub(&self, mut a: Terms<F::Elem>, b: &Terms<F::Elem>) -> Terms<F::Elem> {
        let m1 = self.field().from_int(-1);
        self.space.axpy(&mut a, &m1, b);
        a
    }

    fn apply_word_fn(&self, v: &Terms<F::Elem>, g: impl Fn(&[u16]) -> Terms<F::Elem>) -> Terms<F::Elem> {
        let mut out = Terms::new();
        for (w, c) in v {
            self.space.axpy(&mut out, c, &g(w));
        }
        out
    }

    fn single(&self, w: Word) -> Terms<F::Elem> {
        Terms::from([(w, self.field().one())])
    }

    /// Unit, associativity, `d² = 0` and the Leibniz rule.
    pub fn validate_algebra(&self) -> AxiomReport {
        let mut checks = Vec::new();
        checks.push(self.check_identity("left_unit", 1, 0, |w| {
            let l: Terms<F::Elem> = self.mul(0, w[0]).iter().map(|(t, c)| (word(&[*t]), c.clone())).collect();
            self.terms_sub(l, &self.single(w.clone()))
        }));
        checks.push(self.check_identity("right_unit", 1, 0, |w| {
            let r: Terms<F::Elem> = self.mul(w[0], 0).iter().map(|(t, c)| (word(&[*t]), c.clone())).collect();
            self.terms_sub(r, &self.single(w.clone()))
        }));
        checks.push(self.check_identity("associativity", 3, 0, |w| {
            let left = self.apply_word_fn(&self.bar_diff(&w[..2]), |u| self.bar_diff(&[u[0], w[2]]));
            let right = self.apply_word_fn(&self.bar_diff(&w[1..]), |u| self.bar_diff(&[w[0], u[0]]));
            self.terms_sub(left, &right)
        }));
        checks.push(self.check_identity("d_squared", 1, 2, |w| self.apply_word_fn(&self.internal_diff(w), |u| self.internal_diff(u))));
        checks.push(self.check_identity("leibniz", 2, 1, |w| {
            let left = self.apply_word_fn(&self.bar_diff(w), |u| self.internal_diff(u));
            let right = self.apply_word_fn(&self.internal_diff(w), |u| self.bar_diff(u));
            self.terms_sub(left, &right)
        }));
        AxiomReport { checks }
    }

    /// Counit, coassociativity and the co-Leibniz rule.
    pub fn validate_coalgebra(&self) -> AxiomReport {
        let f = self.field();
        let mut checks = Vec::new();
        for (name, side) in [("left_counit", 0usize), ("right_counit", 1)] {
            checks.push(self.check_identity(name, 1, 0, |w| {
                let mut v = Terms::new();
                for (a1, a2, c) in self.coproduct(w[0]) {
                    let (e, keep) = if side == 0 { (*a1, *a2) } else { (*a2, *a1) };
                    if e == 0 {
                        self.space.add_term(&mut v, word(&[keep]), c.clone());
                    }
                }
                self.terms_sub(v, &self.single(w.clone()))
            }));
        }
        checks.push(self.check_identity("coassociativity", 1, 0, |w| {
            let mut res = Terms::new();
            for (a1, a2, c) in self.coproduct(w[0]) {
                for (b1, b2, c2) in self.coproduct(*a1) {
                    self.space.add_term(&mut res, word(&[*b1, *b2, *a2]), f.mul(c, c2));
                }
                for (b1, b2, c2) in self.coproduct(*a2) {
                    self.space.add_term(&mut res, word(&[*a1, *b1, *b2]), f.neg(&f.mul(c, c2)));
                }
            }
            res
        }));
        checks.push(self.check_identity("coleibniz", 1, 1, |w| {
            let left = self.apply_word_fn(&self.internal_diff(w), |u| self.cobar_diff(u));
            let right = self.apply_word_fn(&self.cobar_diff(w), |u| self.internal_diff(u));
            self.terms_sub(left, &right)
        }));
        AxiomReport { checks }
    }

    /// Algebra and coalgebra axioms, bialgebra compatibility, `Δ(1) = 1⊗1`
    /// and the antipode identities.
    pub fn validate(&self) -> AxiomReport {
        let f = self.field();
        let mut report = self.validate_algebra();
        report.checks.extend(self.validate_coalgebra().checks);
        report.checks.push(self.check_identity("bialgebra", 2, 0, |w| {
            let left = self.apply_word_fn(&self.bar_diff(w), |u| self.cobar_diff(u));
            let mut right = Terms::new();
            for (a1, a2, c) in self.coproduct(w[0]) {
                for (b1, b2, c2) in self.coproduct(w[1]) {
                    let sign = f.sign(self.deg(*a2) % 2 == 1 && self.deg(*b1) % 2 == 1);
                    let cc = f.mul(&f.mul(c, c2), &sign);
                    for (p, cp) in self.mul(*a1, *b1) {
                        for (q, cq) in self.mul(*a2, *b2) {
                            self.space.add_term(&mut right, word(&[*p, *q]), f.mul(&cc, &f.mul(cp, cq)));
                        }
                    }
                }
            }
            self.terms_sub(left, &right)
        }));
        report.checks.push(self.check_identity("unit_coproduct", 0, 0, |_| {
            let v: Terms<F::Elem> = self.coproduct(0).iter().map(|(a, b, c)| (word(&[*a, *b]), c.clone())).collect();
            self.terms_sub(v, &self.single(word(&[0, 0])))
        }));
        let s = &self.antipode;
        for (name, side) in [("antipode_left", 0usize), ("antipode_right", 1)] {
            report.checks.push(self.check_identity(name, 1, 0, |w| {
                let mut res = Terms::new();
                for (a1, a2, c) in self.coproduct(w[0]) {
                    let (inner, outer) = if side == 0 { (*a1, *a2) } else { (*a2, *a1) };
                    for (t, ct) in s.apply_word(&[inner]) {
                        let pair = if side == 0 { (t[0], outer) } else { (outer, t[0]) };
                        for (p, cp) in self.mul(pair.0, pair.1) {
                            self.space.add_term(&mut res, word(&[*p]), f.mul(&f.mul(c, &ct), cp));
                        }
                    }
                }
                if w[0] == 0 {
                    self.space.add_term(&mut res, word(&[0]), f.from_int(-1));
                }
                res
            }));
        }
        if let Some(given) = &self.given_antipode {
            report.checks.push(self.check_identity("antipode_matches_document", 1, 0, |w| {
                self.terms_sub(given.apply_word(w), &s.apply_word(w))
            }));
        }
        report
    }

    /// `S(ab) = (-1)^{|a||b|} S(b) S(a)` on basis pairs.
    pub fn check_antipode_antimultiplicative(&self) -> AxiomCheck {
        let f = self.field();
        let s = &self.antipode;
        self.check_identity("antipode_antimultiplicative", 2, 0, |w| {
            let left = self.apply_word_fn(&self.bar_diff(w), |u| s.apply_word(u));
            let sign = f.sign(self.deg(w[0]) % 2 == 1 && self.deg(w[1]) % 2 == 1);
            let mut right = Terms::new();
            for (x, cx) in s.apply_word(&[w[1]]) {
                for (y, cy) in s.apply_word(&[w[0]]) {
                    for (p, cp) in self.mul(x[0], y[0]) {
                        self.space.add_term(&mut right, word(&[*p]), f.mul(&sign, &f.mul(&f.mul(&cx, &cy), cp)));
                    }
                }
            }
            self.terms_sub(left, &right)
        })
    }

    /// `d S = S d`.
    pub fn check_antipode_commutes_with_d(&self) -> AxiomCheck {
        let s = &self.antipode;
        self.check_identity("antipode_chain_map", 1, 1, |w| {
            let left = self.apply_word_fn(&s.apply_word(w), |u| self.internal_diff(u));
            let right = self.apply_word_fn(&self.internal_diff(w), |u| s.apply_word(u));
            self.terms_sub(left, &right)
        })
    }
}

/// Adds unit and counit terms to reduced structure constants.
pub fn with_unit_terms<F: Field>(
    space: &Arc<GradedSpace<F>>,
    mu_reduced: &GradedMap<F>,
    delta_reduced: &GradedMap<F>,
) -> Result<(GradedMap<F>, GradedMap<F>)> {
    let b = &space.basis;
    if !mu_reduced.is_reduced(true, false) || !delta_reduced.is_reduced(true, true) {
        return Err(AlgebraError::Parse("reduced structure constants may not involve the unit".into()));
    }
    let one = space.field.one();
    let mut mu = mu_reduced.clone();
    let mut delta = delta_reduced.clone();
    for a in 0..b.len() as u16 {
        mu.add_entry(word(&[0, a]), word(&[a]), one.clone())?;
        if a != 0 {
            mu.add_entry(word(&[a, 0]), word(&[a]), one.clone())?;
            delta.add_entry(word(&[a]), word(&[a, 0]), one.clone())?;
            delta.add_entry(word(&[a]), word(&[0, a]), one.clone())?;
        } else {
            delta.add_entry(word(&[0]), word(&[0, 0]), one.clone())?;
        }
    }
    Ok((mu, delta))
}

/// Residuals of the `A(ℓ)` relations for operations `ops[k-1] = μ^{(k)}`
/// (a map `k → 1` of degree `2-k`), for `ℓ = 1..=max_l`.
pub fn a_infinity_residuals<F: Field>(space: &Arc<GradedSpace<F>>, ops: &[GradedMap<F>], max_l: usize) -> Result<Vec<GradedMap<F>>> {
    let f = &space.field;
    for (k, op) in ops.iter().enumerate() {
        if op.source_arity() != k + 1 || op.target_arity() != 1 || op.degree() != 1 - k as i32 {
            return Err(AlgebraError::Shape(format!("operation {} must be a map {}→1 of degree {}", k + 1, k + 1, 1 - k as i32)));
        }
    }
    let mut out = Vec::new();
    for l in 1..=max_l {
        let mut res = GradedMap::zero(space, l, 1, 3 - l as i32);
        for w in space.basis.words(l, false) {
            let mut acc = Terms::new();
            for k in 1..=l {
                let j = l + 1 - k;
                if j > ops.len() || k > ops.len() {
                    continue;
                }
                for i in 0..j {
                    let e = i + i * k + l * k + k;
                    let pre = space.word_degree(&w[..i]);
                    let koszul = (2 + k) as u32 * pre; // parity of (2-k)·|u|
                    let sign = f.sign((e as u32 + koszul) % 2 == 1);
                    for (t, c) in ops[k - 1].apply_word(&w[i..i + k]) {
                        let mut u = Word::from_slice(&w[..i]);
                        u.extend_from_slice(&t);
                        u.extend_from_slice(&w[i + k..]);
                        let v = ops[j - 1].apply_word(&u);
                        space.axpy(&mut acc, &f.mul(&sign, &c), &v);
                    }
                }
            }
            if !acc.is_empty() {
                res.add_column(w, &acc, &f.one())?;
            }
        }
        out.push(res);
    }
    Ok(out)
}

/// Residuals of the dual `C(ℓ)` relations for co-operations
/// `ops[k-1] = Δ^{(k)}` (a map `1 → k` of degree `2-k`).
pub fn c_infinity_residuals<F: Field>(space: &Arc<GradedSpace<F>>, ops: &[GradedMap<F>], max_l: usize) -> Result<Vec<GradedMap<F>>> {
    let f = &space.field;
    for (k, op) in ops.iter().enumerate() {
        if op.source_arity() != 1 || op.target_arity() != k + 1 || op.degree() != 1 - k as i32 {
            return Err(AlgebraError::Shape(format!("co-operation {} must be a map 1→{} of degree {}", k + 1, k + 1, 1 - k as i32)));
        }
    }
    let mut out = Vec::new();
    for l in 1..=max_l {
        let mut res = GradedMap::zero(space, 1, l, 3 - l as i32);
        for w in space.basis.words(1, false) {
            let mut acc = Terms::new();
            for k in 1..=l {
                let j = l + 1 - k;
                if j > ops.len() || k > ops.len() {
                    continue;
                }
                for i in 0..j {
                    let e = i + i * k + l * k + k;
                    for (u, cu) in ops[j - 1].apply_word(&w) {
                        let pre = space.word_degree(&u[..i]);
                        let sign = f.sign((e as u32 + (2 + k) as u32 * pre) % 2 == 1);
                        for (t, c) in ops[k - 1].apply_word(&u[i..i + 1]) {
                            let mut z = Word::from_slice(&u[..i]);
                            z.extend_from_slice(&t);
                            z.extend_from_slice(&u[i + 1..]);
                            space.add_term(&mut acc, z, f.mul(&sign, &f.mul(&cu, &c)));
                        }
                    }
                }
            }
            if !acc.is_empty() {
                res.add_column(w, &acc, &f.one())?;
            }
        }
        out.push(res);
    }
    Ok(out)
}
