//! Assembled total complexes, cohomology and coboundary solving.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::cochain::{component_coords, Differentials, Theory, TotalCochain, Tridegree, Window};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::graded::{GradedMap, Word};
use crate::harrison;
use crate::hopf::DgHopf;
use crate::linalg::{self, Echelon, Insert, SparseVec};

/// Cochains of one tridegree: either all coordinate cochains, or a subspace
/// spanned by the given vectors (Harrison cochains).
#[derive(Clone, Debug)]
pub struct ComponentSpace<F: Field> {
    pub tridegree: Tridegree,
    coords: Vec<(Word, Word)>,
    index: HashMap<(Word, Word), usize>,
    sub: Option<(Vec<SparseVec<F::Elem>>, Echelon<F>)>,
}

impl<F: Field> ComponentSpace<F> {
    pub fn full(tridegree: Tridegree, coords: Vec<(Word, Word)>) -> Self {
        let index = coords.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        ComponentSpace { tridegree, coords, index, sub: None }
    }

    pub fn subspace(field: &F, tridegree: Tridegree, coords: Vec<(Word, Word)>, basis: Vec<SparseVec<F::Elem>>) -> Self {
        let mut e = Echelon::new(field.clone());
        for b in &basis {
            let r = e.insert(b.clone());
            debug_assert!(matches!(r, Insert::Pivot(_)), "subspace basis must be independent");
        }
        let mut s = Self::full(tridegree, coords);
        s.sub = Some((basis, e));
        s
    }

    pub fn dim(&self) -> usize {
        match &self.sub {
            Some((b, _)) => b.len(),
            None => self.coords.len(),
        }
    }

    pub fn coords(&self) -> &[(Word, Word)] {
        &self.coords
    }

    /// Coordinate vector (in ambient coordinates) of a map.
    pub fn ambient_vector(&self, map: &GradedMap<F>) -> Result<SparseVec<F::Elem>> {
        let mut v = Vec::new();
        for (s, t, c) in map.entries() {
            let i = self.index.get(&(s.clone(), t.clone())).ok_or_else(|| {
                AlgebraError::Window(format!("entry outside the cochain space {}", self.tridegree))
            })?;
            v.push((*i, c.clone()));
        }
        Ok(linalg::from_entries(map.field(), v))
    }

    /// Coefficients of a map in this space's basis.
    pub fn vector(&self, map: &GradedMap<F>) -> Result<SparseVec<F::Elem>> {
        let v = self.ambient_vector(map)?;
        match &self.sub {
            None => Ok(v),
            Some((_, e)) => e
                .express(&v)
                .ok_or_else(|| AlgebraError::Window(format!("cochain leaves the subspace at {}", self.tridegree))),
        }
    }

    pub fn map(&self, space: &std::sync::Arc<crate::graded::GradedSpace<F>>, v: &SparseVec<F::Elem>) -> GradedMap<F> {
        let t = self.tridegree;
        let f = &space.field;
        let ambient = match &self.sub {
            None => v.clone(),
            Some((b, _)) => {
                let mut acc = Vec::new();
                for (j, c) in v {
                    acc = linalg::combine(f, &f.one(), &acc, &f.neg(c), &b[*j]);
                }
                acc
            }
        };
        let mut m = GradedMap::zero(space, t.m, t.n, t.p as i32);
        for (i, c) in ambient {
            let (s, w) = &self.coords[i];
            m.add_entry(s.clone(), w.clone(), c).expect("coordinate is homogeneous");
        }
        m
    }
}

/// All components of one total degree, concatenated.
#[derive(Clone, Debug)]
pub struct DegreeSpace<F: Field> {
    pub degree: i64,
    pub parts: Vec<ComponentSpace<F>>,
    offsets: Vec<usize>,
}

impl<F: Field> DegreeSpace<F> {
    fn new(degree: i64, parts: Vec<ComponentSpace<F>>) -> Self {
        let mut offsets = Vec::new();
        let mut o = 0;
        for p in &parts {
            offsets.push(o);
            o += p.dim();
        }
        offsets.push(o);
        DegreeSpace { degree, parts, offsets }
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn tridegrees(&self) -> Vec<Tridegree> {
        self.parts.iter().map(|p| p.tridegree).collect()
    }

    pub fn vector(&self, x: &TotalCochain<F>) -> Result<SparseVec<F::Elem>> {
        let mut v = Vec::new();
        for (t, m) in &x.parts {
            if m.is_zero() {
                continue;
            }
            let k = self
                .parts
                .iter()
                .position(|p| p.tridegree == *t)
                .ok_or_else(|| AlgebraError::Window(format!("component {t} is outside the window")))?;
            for (i, c) in self.parts[k].vector(m)? {
                v.push((self.offsets[k] + i, c));
            }
        }
        Ok(v)
    }

    pub fn cochain(&self, space: &std::sync::Arc<crate::graded::GradedSpace<F>>, v: &SparseVec<F::Elem>) -> TotalCochain<F> {
        let mut x = TotalCochain::zero(self.degree);
        for (k, part) in self.parts.iter().enumerate() {
            let (lo, hi) = (self.offsets[k], self.offsets[k + 1]);
            let local: SparseVec<F::Elem> = v.iter().filter(|(i, _)| *i >= lo && *i < hi).map(|(i, c)| (i - lo, c.clone())).collect();
            if !local.is_empty() {
                x.add_part(part.tridegree, &part.map(space, &local));
            }
        }
        x
    }
}

/// Matrix of `D` from total degree `r` to `r + 1`.
#[derive(Clone, Debug)]
pub struct DifferentialMatrix<F: Field> {
    pub degree: i64,
    pub columns: Vec<SparseVec<F::Elem>>,
    /// Some image had parts outside the window.
    pub clipped: bool,
}

#[derive(Clone, Debug)]
pub struct CohomologyResult<F: Field> {
    pub degree: i64,
    pub dim: usize,
    pub cochain_dim: usize,
    pub kernel_dim: usize,
    pub image_rank: usize,
    /// Clipping at the window boundary makes the value a bound only.
    pub inconclusive: bool,
    pub representatives: Vec<TotalCochain<F>>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CohomologySummary {
    pub degree: i64,
    pub dim: usize,
    pub cochain_dim: usize,
    pub kernel_dim: usize,
    pub image_rank: usize,
    pub inconclusive: bool,
    pub components: Vec<Tridegree>,
}

/// A window of one cochain complex of `h`, assembled lazily by degree.
pub struct AssembledComplex<'a, F: Field> {
    pub h: &'a DgHopf<F>,
    pub window: Window,
    diffs: Differentials<'a, F>,
    spaces: BTreeMap<i64, DegreeSpace<F>>,
    matrices: BTreeMap<i64, DifferentialMatrix<F>>,
}

impl<'a, F: Field> AssembledComplex<'a, F> {
    pub fn new(h: &'a DgHopf<F>, window: Window) -> Result<Self> {
        window.validate()?;
        if window.theory == Theory::Harrison {
            harrison::check_applicable(h)?;
        }
        let diffs = Differentials::new(h, window.theory)?;
        Ok(AssembledComplex { h, window, diffs, spaces: BTreeMap::new(), matrices: BTreeMap::new() })
    }

    pub fn differentials(&self) -> &Differentials<'a, F> {
        &self.diffs
    }

    pub fn space(&mut self, r: i64) -> Result<&DegreeSpace<F>> {
        if !self.spaces.contains_key(&r) {
            let mut parts = Vec::new();
            for t in self.window.components(r)? {
                let coords = component_coords(self.h, self.window.theory, t);
                let part = if self.window.theory == Theory::Harrison {
                    let basis = harrison::subspace_basis(self.h, t, &coords)?;
                    ComponentSpace::subspace(self.h.field(), t, coords, basis)
                } else {
                    ComponentSpace::full(t, coords)
                };
                parts.push(part);
            }
            self.spaces.insert(r, DegreeSpace::new(r, parts));
        }
        Ok(&self.spaces[&r])
    }

    pub fn matrix(&mut self, r: i64) -> Result<&DifferentialMatrix<F>> {
        if !self.matrices.contains_key(&r) {
            self.space(r)?;
            self.space(r + 1)?;
            let src = &self.spaces[&r];
            let tgt = &self.spaces[&(r + 1)];
            let mut columns = Vec::with_capacity(src.dim());
            let mut clipped = false;
            let one = self.h.field().one();
            for part in &src.parts {
                for j in 0..part.dim() {
                    let x = TotalCochain::single(part.tridegree, part.map(self.h.space(), &vec![(j, one.clone())]));
                    let (dx, c) = self.diffs.total(&x, Some(&self.window));
                    clipped |= c;
                    columns.push(tgt.vector(&dx)?);
                }
            }
            self.matrices.insert(r, DifferentialMatrix { degree: r, columns, clipped });
        }
        Ok(&self.matrices[&r])
    }

    /// Verifies `D_{r} ∘ D_{r-1} = 0` exactly.
    pub fn check_d_squared(&mut self, r: i64) -> Result<bool> {
        let f = self.h.field().clone();
        let prev = self.matrix(r - 1)?.columns.clone();
        let cur = &self.matrix(r)?.columns;
        Ok(prev.iter().all(|c| linalg::apply(&f, cur, c).is_empty()))
    }

    pub fn total_differential(&self, x: &TotalCochain<F>) -> (TotalCochain<F>, bool) {
        self.diffs.total(x, Some(&self.window))
    }

    pub fn is_cocycle(&self, x: &TotalCochain<F>) -> bool {
        self.total_differential(x).0.is_zero()
    }

    pub fn cohomology(&mut self, r: i64) -> Result<CohomologyResult<F>> {
        let f = self.h.field().clone();
        if !self.check_d_squared(r)? {
            return Err(AlgebraError::Axiom(format!("D∘D ≠ 0 into total degree {}", r + 1)));
        }
        let dr = self.matrix(r)?.clone();
        let dprev = self.matrix(r - 1)?.clone();
        let kernel = linalg::kernel(&f, &dr.columns);
        let mut image = Echelon::new(f.clone());
        for c in &dprev.columns {
            image.insert(c.clone());
        }
        let image_rank = image.rank();
        let mut reps = Vec::new();
        for z in kernel.iter() {
            let red = image.reduce(z.clone());
            if red.is_empty() {
                continue;
            }
            if let Insert::Pivot(_) = image.insert(red.clone()) {
                reps.push(linalg::normalize(&f, red));
            }
        }
        let space = self.space(r)?.clone();
        let dim = kernel.len() - image_rank;
        debug_assert_eq!(dim, reps.len());
        let representatives = reps.iter().map(|v| space.cochain(self.h.space(), v)).collect();
        Ok(CohomologyResult {
            degree: r,
            dim,
            cochain_dim: space.dim(),
            kernel_dim: kernel.len(),
            image_rank,
            inconclusive: dr.clipped,
            representatives,
        })
    }

    pub fn summary(&mut self, r: i64) -> Result<CohomologySummary> {
        let c = self.cohomology(r)?;
        let components = self.space(r)?.tridegrees();
        Ok(CohomologySummary {
            degree: r,
            dim: c.dim,
            cochain_dim: c.cochain_dim,
            kernel_dim: c.kernel_dim,
            image_rank: c.image_rank,
            inconclusive: c.inconclusive,
            components,
        })
    }

    /// Some `y` of total degree `r - 1` with `D y = x`, or `None` when `x`
    /// is not a coboundary.
    pub fn solve_coboundary(&mut self, x: &TotalCochain<F>) -> Result<Option<TotalCochain<F>>> {
        let f = self.h.field().clone();
        let r = x.degree;
        let b = self.space(r)?.vector(x)?;
        let cols = self.matrix(r - 1)?.columns.clone();
        let sol = linalg::solve(&f, &cols, &b);
        let prev = self.space(r - 1)?.clone();
        Ok(sol.map(|v| prev.cochain(self.h.space(), &v)))
    }

    /// Basis of the total cocycles of degree `r`.
    pub fn cocycle_basis(&mut self, r: i64) -> Result<Vec<TotalCochain<F>>> {
        let f = self.h.field().clone();
        let cols = self.matrix(r)?.columns.clone();
        let space = self.space(r)?.clone();
        Ok(linalg::kernel(&f, &cols).iter().map(|v| space.cochain(self.h.space(), v)).collect())
    }
}
