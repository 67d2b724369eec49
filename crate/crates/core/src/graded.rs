//! Graded bases, tensor words and sparse graded linear maps.
//!
//! Basis element `0` is always the unit, the unique element of degree 0.
//! A tensor basis element of `H^{⊗m}` is a [`Word`] of basis indices;
//! words are ordered lexicographically.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};
use crate::field::Field;

pub type Word = SmallVec<[u16; 8]>;

/// Sparse element of a tensor power, keyed by words.
pub type Terms<E> = BTreeMap<Word, E>;

pub fn word(ix: &[u16]) -> Word {
    Word::from_slice(ix)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    labels: Vec<String>,
    degrees: Vec<u32>,
    index: HashMap<String, u16>,
}

impl GradedBasis {
    /// Builds a connected graded basis. Exactly one element must have degree
    /// 0; it is moved to index 0, the remaining order is kept.
    pub fn new<S: Into<String>>(elems: impl IntoIterator<Item = (S, u32)>) -> Result<Self> {
        let elems: Vec<(String, u32)> = elems.into_iter().map(|(l, d)| (l.into(), d)).collect();
        let units: Vec<usize> = (0..elems.len()).filter(|&i| elems[i].1 == 0).collect();
        if units.len() != 1 {
            return Err(AlgebraError::Basis(format!(
                "expected exactly one degree-0 element, found {}",
                units.len()
            )));
        }
        if elems.len() > u16::MAX as usize {
            return Err(AlgebraError::Basis("basis too large".into()));
        }
        let mut ordered = vec![elems[units[0]].clone()];
        ordered.extend(elems.iter().enumerate().filter(|(i, _)| *i != units[0]).map(|(_, e)| e.clone()));
        let mut index = HashMap::new();
        for (i, (l, _)) in ordered.iter().enumerate() {
            if l.is_empty() {
                return Err(AlgebraError::Basis("empty label".into()));
            }
            if index.insert(l.clone(), i as u16).is_some() {
                return Err(AlgebraError::Basis(format!("duplicate label {l:?}")));
            }
        }
        let (labels, degrees) = ordered.into_iter().unzip();
        Ok(GradedBasis { labels, degrees, index })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn unit(&self) -> u16 {
        0
    }

    pub fn degree(&self, i: u16) -> u32 {
        self.degrees[i as usize]
    }

    pub fn label(&self, i: u16) -> &str {
        &self.labels[i as usize]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<u16> {
        self.index.get(label).copied()
    }

    pub fn top_degree(&self) -> u32 {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn word_degree(&self, w: &[u16]) -> u32 {
        w.iter().map(|&i| self.degrees[i as usize]).sum()
    }

    /// True when no factor is the unit.
    pub fn is_reduced(&self, w: &[u16]) -> bool {
        w.iter().all(|&i| i != 0)
    }

    pub fn parse_word(&self, labels: &[String]) -> Result<Word> {
        labels
            .iter()
            .map(|l| self.index_of(l).ok_or_else(|| AlgebraError::Parse(format!("unknown label {l:?}"))))
            .collect()
    }

    pub fn format_word(&self, w: &[u16]) -> String {
        if w.is_empty() {
            return "1_k".into();
        }
        w.iter().map(|&i| self.label(i)).collect::<Vec<_>>().join("⊗")
    }

    /// All words of the given arity, lexicographically; `reduced` skips the unit.
    pub fn words(&self, arity: usize, reduced: bool) -> Vec<Word> {
        self.words_in_range(arity, 0, u32::MAX, reduced)
    }

    /// Words of the given arity and total degree.
    pub fn words_of_degree(&self, arity: usize, degree: u32, reduced: bool) -> Vec<Word> {
        self.words_in_range(arity, degree, degree, reduced)
    }

    /// Words of the given arity and total degree at most `max_degree`.
    pub fn words_up_to_degree(&self, arity: usize, max_degree: u32, reduced: bool) -> Vec<Word> {
        self.words_in_range(arity, 0, max_degree, reduced)
    }

    /// Words of the given arity with total degree in `lo..=hi`, in
    /// lexicographic order; branches that cannot reach the range are pruned.
    pub fn words_in_range(&self, arity: usize, lo: u32, hi: u32, reduced: bool) -> Vec<Word> {
        let first = reduced as usize;
        if self.len() <= first && arity > 0 {
            return Vec::new();
        }
        let min_deg = self.degrees[first..].iter().copied().min().unwrap_or(0);
        let max_deg = self.degrees[first..].iter().copied().max().unwrap_or(0);
        let mut out = Vec::new();
        let mut cur = Word::new();
        self.fill_words(arity, first, (lo, hi), (min_deg, max_deg), 0, &mut cur, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn fill_words(&self, arity: usize, first: usize, range: (u32, u32), ext: (u32, u32), used: u32, cur: &mut Word, out: &mut Vec<Word>) {
        let left = (arity - cur.len()) as u64;
        if used as u64 + left * ext.0 as u64 > range.1 as u64 || (used as u64 + left * ext.1 as u64) < range.0 as u64 {
            return;
        }
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in first..self.len() {
            cur.push(i as u16);
            self.fill_words(arity, first, range, ext, used + self.degrees[i], cur, out);
            cur.pop();
        }
    }
}

/// A graded vector space `H` over a field: the context for all tensor
/// computations.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedSpace<F: Field> {
    pub field: F,
    pub basis: GradedBasis,
}

impl<F: Field> GradedSpace<F> {
    pub fn new(field: F, basis: GradedBasis) -> Arc<Self> {
        Arc::new(GradedSpace { field, basis })
    }

    pub fn deg(&self, i: u16) -> u32 {
        self.basis.degree(i)
    }

    pub fn word_degree(&self, w: &[u16]) -> u32 {
        self.basis.word_degree(w)
    }

    /// `v += c * w` on terms, dropping zeros.
    pub fn axpy(&self, v: &mut Terms<F::Elem>, c: &F::Elem, w: &Terms<F::Elem>) {
        for (k, x) in w {
            self.add_term(v, k.clone(), self.field.mul(c, x));
        }
    }

    pub fn add_term(&self, v: &mut Terms<F::Elem>, k: Word, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match v.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = self.field.add(e.get(), &c);
                if self.field.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale_terms(&self, v: &Terms<F::Elem>, c: &F::Elem) -> Terms<F::Elem> {
        let mut out = Terms::new();
        self.axpy(&mut out, c, v);
        out
    }

    /// Koszul sign and image of `w` under `σ`: factor `i` moves to position
    /// `sigma[i]`.
    pub fn permute_word(&self, sigma: &[usize], w: &[u16]) -> (bool, Word) {
        let n = w.len();
        let mut odd = false;
        for i in 0..n {
            for k in i + 1..n {
                if sigma[i] > sigma[k] && self.deg(w[i]) % 2 == 1 && self.deg(w[k]) % 2 == 1 {
                    odd = !odd;
                }
            }
        }
        let mut out: Word = SmallVec::from_elem(0, n);
        for i in 0..n {
            out[sigma[i]] = w[i];
        }
        (odd, out)
    }
}

/// Graded linear map `H^{⊗m} → H^{⊗n}` of degree `p`, stored column-wise.
#[derive(Clone)]
pub struct GradedMap<F: Field> {
    space: Arc<GradedSpace<F>>,
    source_arity: usize,
    target_arity: usize,
    degree: i32,
    columns: BTreeMap<Word, Terms<F::Elem>>,
}

impl<F: Field> PartialEq for GradedMap<F> {
    fn eq(&self, other: &Self) -> bool {
        self.source_arity == other.source_arity
            && self.target_arity == other.target_arity
            && self.degree == other.degree
            && self.columns == other.columns
    }
}

impl<F: Field> fmt::Debug for GradedMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GradedMap {}→{} of degree {}", self.source_arity, self.target_arity, self.degree)?;
        let b = &self.space.basis;
        for (w, col) in &self.columns {
            for (t, c) in col {
                writeln!(f, "  {} ↦ {} · {}", b.format_word(w), self.space.field.format(c), b.format_word(t))?;
            }
        }
        Ok(())
    }
}

impl<F: Field> GradedMap<F> {
    pub fn zero(space: &Arc<GradedSpace<F>>, source_arity: usize, target_arity: usize, degree: i32) -> Self {
        GradedMap { space: space.clone(), source_arity, target_arity, degree, columns: BTreeMap::new() }
    }

    pub fn space(&self) -> &Arc<GradedSpace<F>> {
        &self.space
    }
    pub fn field(&self) -> &F {
        &self.space.field
    }
    pub fn source_arity(&self) -> usize {
        self.source_arity
    }
    pub fn target_arity(&self) -> usize {
        self.target_arity
    }
    pub fn degree(&self) -> i32 {
        self.degree
    }
    pub fn columns(&self) -> &BTreeMap<Word, Terms<F::Elem>> {
        &self.columns
    }
    pub fn is_zero(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Word, &Word, &F::Elem)> {
        self.columns.iter().flat_map(|(s, col)| col.iter().map(move |(t, c)| (s, t, c)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.values().map(|c| c.len()).sum()
    }

    fn check_entry(&self, src: &[u16], tgt: &[u16]) -> Result<()> {
        if src.len() != self.source_arity || tgt.len() != self.target_arity {
            return Err(AlgebraError::Shape(format!(
                "entry {}→{} in a map {}→{}",
                src.len(),
                tgt.len(),
                self.source_arity,
                self.target_arity
            )));
        }
        let n = self.space.basis.len() as u16;
        if src.iter().chain(tgt).any(|&i| i >= n) {
            return Err(AlgebraError::Basis("index out of range".into()));
        }
        let ds = self.space.word_degree(src) as i64;
        let dt = self.space.word_degree(tgt) as i64;
        if dt - ds != self.degree as i64 {
            return Err(AlgebraError::Degree(format!(
                "entry {} ↦ {} has degree {} but the map has degree {}",
                self.space.basis.format_word(src),
                self.space.basis.format_word(tgt),
                dt - ds,
                self.degree
            )));
        }
        Ok(())
    }

    /// Adds `c` to the coefficient of `tgt` in the image of `src`.
    pub fn add_entry(&mut self, src: Word, tgt: Word, c: F::Elem) -> Result<()> {
        self.check_entry(&src, &tgt)?;
        let space = self.space.clone();
        let col = self.columns.entry(src.clone()).or_default();
        space.add_term(col, tgt, c);
        if col.is_empty() {
            self.columns.remove(&src);
        }
        Ok(())
    }

    /// Adds `c * v` to the image of `src`; `v` must be homogeneous of the right degree.
    pub fn add_column(&mut self, src: Word, v: &Terms<F::Elem>, c: &F::Elem) -> Result<()> {
        for t in v.keys() {
            self.check_entry(&src, t)?;
        }
        let space = self.space.clone();
        let col = self.columns.entry(src.clone()).or_default();
        space.axpy(col, c, v);
        if col.is_empty() {
            self.columns.remove(&src);
        }
        Ok(())
    }

    pub fn from_fn(
        space: &Arc<GradedSpace<F>>,
        source_arity: usize,
        target_arity: usize,
        degree: i32,
        sources: impl IntoIterator<Item = Word>,
        mut f: impl FnMut(&Word) -> Terms<F::Elem>,
    ) -> Result<Self> {
        let mut m = Self::zero(space, source_arity, target_arity, degree);
        let one = space.field.one();
        for w in sources {
            let v = f(&w);
            if !v.is_empty() {
                m.add_column(w, &v, &one)?;
            }
        }
        Ok(m)
    }

    pub fn identity(space: &Arc<GradedSpace<F>>, arity: usize) -> Self {
        let mut m = Self::zero(space, arity, arity, 0);
        for w in space.basis.words(arity, false) {
            m.columns.insert(w.clone(), Terms::from([(w, space.field.one())]));
        }
        m
    }

    /// The permutation operator `σ`, where factor `i` moves to `sigma[i]`.
    pub fn permutation(space: &Arc<GradedSpace<F>>, sigma: &[usize]) -> Result<Self> {
        let n = sigma.len();
        let mut seen = vec![false; n];
        for &s in sigma {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(AlgebraError::Shape(format!("{sigma:?} is not a permutation")));
            }
        }
        let mut m = Self::zero(space, n, n, 0);
        for w in space.basis.words(n, false) {
            let (odd, t) = space.permute_word(sigma, &w);
            m.columns.insert(w, Terms::from([(t, space.field.sign(odd))]));
        }
        Ok(m)
    }

    /// The transposition of the (1-based) adjacent positions `(i, i+1)`.
    pub fn transposition(space: &Arc<GradedSpace<F>>, arity: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= arity {
            return Err(AlgebraError::Shape(format!("no transposition ({i},{}) in arity {arity}", i + 1)));
        }
        let mut sigma: Vec<usize> = (0..arity).collect();
        sigma.swap(i - 1, i);
        Self::permutation(space, &sigma)
    }

    pub fn apply_word(&self, w: &[u16]) -> Terms<F::Elem> {
        self.columns.get(w).cloned().unwrap_or_default()
    }

    pub fn column(&self, w: &[u16]) -> Option<&Terms<F::Elem>> {
        self.columns.get(w)
    }

    pub fn apply(&self, v: &Terms<F::Elem>) -> Terms<F::Elem> {
        let mut out = Terms::new();
        for (w, c) in v {
            if let Some(col) = self.columns.get(w) {
                self.space.axpy(&mut out, c, col);
            }
        }
        out
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &GradedMap<F>) -> Result<Self> {
        if g.target_arity != self.source_arity {
            return Err(AlgebraError::Shape(format!(
                "cannot compose a map {}→{} after a map {}→{}",
                self.source_arity, self.target_arity, g.source_arity, g.target_arity
            )));
        }
        let mut m = Self::zero(&self.space, g.source_arity, self.target_arity, self.degree + g.degree);
        for (w, col) in &g.columns {
            let v = self.apply(col);
            if !v.is_empty() {
                m.columns.insert(w.clone(), v);
            }
        }
        Ok(m)
    }

    /// `f ⊗ g` with `(f⊗g)(x⊗y) = (-1)^{|g||x|} f(x) ⊗ g(y)`.
    pub fn tensor(&self, g: &GradedMap<F>) -> Self {
        let field = &self.space.field;
        let mut m = Self::zero(
            &self.space,
            self.source_arity + g.source_arity,
            self.target_arity + g.target_arity,
            self.degree + g.degree,
        );
        let g_odd = g.degree.rem_euclid(2) == 1;
        for (x, fx) in &self.columns {
            let sign = field.sign(g_odd && self.space.word_degree(x) % 2 == 1);
            for (y, gy) in &g.columns {
                let mut col = Terms::new();
                for (a, ca) in fx {
                    let ca = field.mul(ca, &sign);
                    for (b, cb) in gy {
                        let mut t = a.clone();
                        t.extend_from_slice(b);
                        self.space.add_term(&mut col, t, field.mul(&ca, cb));
                    }
                }
                if !col.is_empty() {
                    let mut s = x.clone();
                    s.extend_from_slice(y);
                    m.columns.insert(s, col);
                }
            }
        }
        m
    }

    fn check_same_shape(&self, g: &GradedMap<F>) -> Result<()> {
        if (self.source_arity, self.target_arity, self.degree) != (g.source_arity, g.target_arity, g.degree) {
            return Err(AlgebraError::Shape(format!(
                "maps {}→{} (degree {}) and {}→{} (degree {}) differ in shape",
                self.source_arity, self.target_arity, self.degree, g.source_arity, g.target_arity, g.degree
            )));
        }
        Ok(())
    }

    /// `self + c * g`.
    pub fn add_scaled(&self, g: &GradedMap<F>, c: &F::Elem) -> Result<Self> {
        self.check_same_shape(g)?;
        let mut m = self.clone();
        m.add_scaled_in_place(g, c);
        Ok(m)
    }

    pub(crate) fn add_scaled_in_place(&mut self, g: &GradedMap<F>, c: &F::Elem) {
        let space = self.space.clone();
        for (w, col) in &g.columns {
            let dst = self.columns.entry(w.clone()).or_default();
            space.axpy(dst, c, col);
            if dst.is_empty() {
                self.columns.remove(w);
            }
        }
    }

    pub fn add(&self, g: &GradedMap<F>) -> Result<Self> {
        self.add_scaled(g, &self.space.field.one())
    }

    pub fn sub(&self, g: &GradedMap<F>) -> Result<Self> {
        self.add_scaled(g, &self.space.field.from_int(-1))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let mut m = Self::zero(&self.space, self.source_arity, self.target_arity, self.degree);
        m.add_scaled_in_place(self, c);
        m
    }

    /// Drops entries whose source or target word contains the unit,
    /// as selected by the flags.
    pub fn project(&self, reduce_source: bool, reduce_target: bool) -> Self {
        let b = &self.space.basis;
        let mut m = Self::zero(&self.space, self.source_arity, self.target_arity, self.degree);
        for (w, col) in &self.columns {
            if reduce_source && !b.is_reduced(w) {
                continue;
            }
            let col: Terms<F::Elem> = col
                .iter()
                .filter(|(t, _)| !reduce_target || b.is_reduced(t))
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect();
            if !col.is_empty() {
                m.columns.insert(w.clone(), col);
            }
        }
        m
    }

    /// True when the map vanishes on sources containing the unit (if
    /// `source`) and has no target words containing the unit (if `target`).
    pub fn is_reduced(&self, source: bool, target: bool) -> bool {
        let b = &self.space.basis;
        self.entries().all(|(s, t, _)| (!source || b.is_reduced(s)) && (!target || b.is_reduced(t)))
    }

    /// Keeps only columns whose source word satisfies `keep`.
    pub fn restrict_sources(&self, keep: impl Fn(&Word) -> bool) -> Self {
        let mut m = self.clone();
        m.columns.retain(|w, _| keep(w));
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn space() -> Arc<GradedSpace<Rationals>> {
        GradedSpace::new(Rationals, GradedBasis::new([("x", 1), ("1", 0), ("y", 2), ("z", 1)]).unwrap())
    }

    #[test]
    fn unit_moves_to_front() {
        let s = space();
        assert_eq!(s.basis.label(0), "1");
        assert_eq!(s.basis.index_of("x"), Some(1));
        assert!(GradedBasis::new([("a", 1)]).is_err());
        assert!(GradedBasis::new([("1", 0), ("a", 1), ("a", 2)]).is_err());
    }

    #[test]
    fn words_of_degree_matches_filter() {
        let s = space();
        for arity in 0..4 {
            for d in 0..6 {
                let a = s.basis.words_of_degree(arity, d, false);
                let b: Vec<_> = s.basis.words(arity, false).into_iter().filter(|w| s.word_degree(w) == d).collect();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn koszul_sign_of_tensor() {
        let s = space();
        let q = Rationals;
        // f = identity on H, g = an odd map x ↦ y
        let id = GradedMap::identity(&s, 1);
        let mut g = GradedMap::zero(&s, 1, 1, 1);
        g.add_entry(word(&[1]), word(&[2]), q.one()).unwrap();
        let ig = id.tensor(&g);
        // (1⊗g)(z⊗x) = -z⊗y
        assert_eq!(ig.apply_word(&[3, 1]), Terms::from([(word(&[3, 2]), q.from_int(-1))]));
        // (1⊗g)(y⊗x) = y⊗y
        assert_eq!(ig.apply_word(&[2, 1]), Terms::from([(word(&[2, 2]), q.one())]));
        let gi = g.tensor(&id);
        assert_eq!(gi.apply_word(&[1, 3]), Terms::from([(word(&[2, 3]), q.one())]));
    }

    #[test]
    fn transposition_sign() {
        let s = space();
        let q = Rationals;
        let t = GradedMap::transposition(&s, 3, 2).unwrap();
        assert_eq!(t.apply_word(&[2, 1, 3]), Terms::from([(word(&[2, 3, 1]), q.from_int(-1))]));
        assert_eq!(t.apply_word(&[1, 2, 3]), Terms::from([(word(&[1, 3, 2]), q.one())]));
        let tt = t.compose(&t).unwrap();
        assert_eq!(tt, GradedMap::identity(&s, 3));
    }

    #[test]
    fn compose_shape_mismatch() {
        let s = space();
        let a = GradedMap::identity(&s, 2);
        let b = GradedMap::identity(&s, 1);
        assert!(matches!(a.compose(&b), Err(AlgebraError::Shape(_))));
    }

    #[test]
    fn degree_violation_rejected() {
        let s = space();
        let mut g = GradedMap::zero(&s, 1, 1, 0);
        assert!(matches!(g.add_entry(word(&[1]), word(&[2]), Rationals.one()), Err(AlgebraError::Degree(_))));
    }
}
