//! Exact sparse elimination over a [`Field`].
//!
//! Rows are kept canonical through [`Field::normalizer`]: monic over `F_p`,
//! primitive integral over `Q` (fraction-free elimination).

use std::collections::BTreeMap;

use crate::field::Field;

/// Sparse vector: strictly increasing indices, no zero entries.
pub type SparseVec<E> = Vec<(usize, E)>;

/// `a*v - b*w`.
pub fn combine<F: Field>(f: &F, a: &F::Elem, v: &SparseVec<F::Elem>, b: &F::Elem, w: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    let nb = f.neg(b);
    while i < v.len() || j < w.len() {
        let take_v = j >= w.len() || (i < v.len() && v[i].0 < w[j].0);
        let take_w = i >= v.len() || (j < w.len() && w[j].0 < v[i].0);
        if take_v {
            let x = f.mul(a, &v[i].1);
            if !f.is_zero(&x) {
                out.push((v[i].0, x));
            }
            i += 1;
        } else if take_w {
            let x = f.mul(&nb, &w[j].1);
            if !f.is_zero(&x) {
                out.push((w[j].0, x));
            }
            j += 1;
        } else {
            let x = f.add(&f.mul(a, &v[i].1), &f.mul(&nb, &w[j].1));
            if !f.is_zero(&x) {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale<F: Field>(f: &F, c: &F::Elem, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    v.iter().map(|(i, x)| (*i, f.mul(c, x))).filter(|(_, x)| !f.is_zero(x)).collect()
}

pub fn get<E>(v: &SparseVec<E>, i: usize) -> Option<&E> {
    v.binary_search_by_key(&i, |e| e.0).ok().map(|k| &v[k].1)
}

/// Builds a sparse vector from unordered entries, summing duplicates.
pub fn from_entries<F: Field>(f: &F, entries: impl IntoIterator<Item = (usize, F::Elem)>) -> SparseVec<F::Elem> {
    let mut m: BTreeMap<usize, F::Elem> = BTreeMap::new();
    for (i, x) in entries {
        let e = m.entry(i).or_insert_with(|| f.zero());
        f.add_assign(e, &x);
    }
    m.into_iter().filter(|(_, x)| !f.is_zero(x)).collect()
}

/// Canonical representative of the line through `v`.
pub fn normalize<F: Field>(f: &F, v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    match f.normalizer(v.iter().map(|e| &e.1)) {
        Some(c) => scale(f, &c, &v),
        None => v,
    }
}

#[derive(Clone, Debug)]
struct Row<E> {
    v: SparseVec<E>,
    combo: SparseVec<E>,
}

/// Incremental row echelon form, optionally tracking each row as a
/// combination of the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    rows: Vec<Row<F::Elem>>,
    pivots: BTreeMap<usize, usize>,
    inserted: usize,
}

/// Outcome of inserting a vector into an [`Echelon`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert<E> {
    /// New pivot column.
    Pivot(usize),
    /// Dependent: the combination of inserted vectors that vanishes.
    Dependent(SparseVec<E>),
}

impl<F: Field> Echelon<F> {
    pub fn new(field: F) -> Self {
        Echelon { field, rows: Vec::new(), pivots: BTreeMap::new(), inserted: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Scaled full reduction of `(v, combo)` against the stored rows. The
    /// invariant `v = Σ combo_j · input_j` is preserved up to the common
    /// scalar applied to both parts.
    fn reduce_pair(&self, mut v: SparseVec<F::Elem>, mut combo: SparseVec<F::Elem>) -> (SparseVec<F::Elem>, SparseVec<F::Elem>) {
        let f = &self.field;
        let mut k = 0;
        while k < v.len() {
            let col = v[k].0;
            if let Some(&r) = self.pivots.get(&col) {
                let row = &self.rows[r];
                let a = row.v[0].1.clone();
                let b = v[k].1.clone();
                v = combine(f, &a, &v, &b, &row.v);
                combo = combine(f, &a, &combo, &b, &row.combo);
                if let Some(c) = f.normalizer(v.iter().chain(combo.iter()).map(|e| &e.1)) {
                    v = scale(f, &c, &v);
                    combo = scale(f, &c, &combo);
                }
                k = v.partition_point(|e| e.0 < col);
            } else {
                k += 1;
            }
        }
        (v, combo)
    }

    /// Inserts the next vector; its index among inserted vectors is the
    /// number of previous insertions.
    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> Insert<F::Elem> {
        let idx = self.inserted;
        self.inserted += 1;
        let (v, combo) = self.reduce_pair(v, vec![(idx, self.field.one())]);
        if v.is_empty() {
            return Insert::Dependent(normalize(&self.field, combo));
        }
        let c = self.field.normalizer(v.iter().map(|e| &e.1));
        let (v, combo) = match c {
            Some(c) => (scale(&self.field, &c, &v), scale(&self.field, &c, &combo)),
            None => (v, combo),
        };
        let pivot = v[0].0;
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(Row { v, combo });
        Insert::Pivot(pivot)
    }

    /// Residual of `v` modulo the row space (zero iff `v` lies in it).
    pub fn reduce(&self, v: SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        self.reduce_pair(v, Vec::new()).0
    }

    pub fn contains(&self, v: &SparseVec<F::Elem>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Coefficients `x` with `Σ x_j · input_j = v`, if `v` lies in the span.
    pub fn express(&self, v: &SparseVec<F::Elem>) -> Option<SparseVec<F::Elem>> {
        let marker = usize::MAX;
        let (r, combo) = self.reduce_pair(v.clone(), vec![(marker, self.field.one())]);
        if !r.is_empty() {
            return None;
        }
        // 0 = combo_marker · v + Σ combo_j · input_j
        let f = &self.field;
        let (last, rest) = combo.split_last().expect("marker survives");
        debug_assert_eq!(last.0, marker);
        let factor = f.neg(&f.inv(&last.1).expect("marker coefficient is nonzero"));
        Some(scale(f, &factor, &rest.to_vec()))
    }
}

pub fn rank<F: Field>(f: &F, cols: &[SparseVec<F::Elem>]) -> usize {
    let mut e = Echelon::new(f.clone());
    for c in cols {
        e.insert(c.clone());
    }
    e.rank()
}

/// Basis of `{x : Σ x_j cols_j = 0}`, one vector per dependent column.
pub fn kernel<F: Field>(f: &F, cols: &[SparseVec<F::Elem>]) -> Vec<SparseVec<F::Elem>> {
    let mut e = Echelon::new(f.clone());
    let mut out = Vec::new();
    for c in cols {
        if let Insert::Dependent(k) = e.insert(c.clone()) {
            out.push(k);
        }
    }
    out
}

/// Some `x` with `Σ x_j cols_j = b`.
pub fn solve<F: Field>(f: &F, cols: &[SparseVec<F::Elem>], b: &SparseVec<F::Elem>) -> Option<SparseVec<F::Elem>> {
    let mut e = Echelon::new(f.clone());
    for c in cols {
        e.insert(c.clone());
    }
    e.express(b)
}

/// Column-major matrix product `a * x` where `x` is a sparse coefficient vector.
pub fn apply<F: Field>(f: &F, cols: &[SparseVec<F::Elem>], x: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let mut acc: SparseVec<F::Elem> = Vec::new();
    let one = f.one();
    for (j, c) in x {
        acc = combine(f, &one, &acc, &f.neg(c), &cols[*j]);
    }
    acc
}
