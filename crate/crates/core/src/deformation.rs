//! Truncated formal deformations `(d_t, μ_t, Δ_t)` of a d.g. Hopf algebra.
//!
//! Coefficient `i ≥ 1` of `t^i` is stored at index `i - 1`; the constant
//! terms are the structure maps of the base algebra. Deformation classes,
//! obstructions and gauge equivalences live in the restricted `q = 3` Hopf
//! complex: `d_i ∈ C^{1,1,1}`, `μ_i ∈ C^{0,2,1}`, `Δ_i ∈ C^{0,1,2}`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cochain::{component_coords, Theory, TotalCochain, Tridegree, Window};
use crate::cohomology::AssembledComplex;
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::graded::GradedMap;
use crate::hopf::DgHopf;

/// The generator used for all randomized constructions.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const D_SLOT: Tridegree = Tridegree { p: 1, m: 1, n: 1 };
pub const MU_SLOT: Tridegree = Tridegree { p: 0, m: 2, n: 1 };
pub const DELTA_SLOT: Tridegree = Tridegree { p: 0, m: 1, n: 2 };
pub const GAUGE_SLOT: Tridegree = Tridegree { p: 0, m: 1, n: 1 };

#[derive(Clone, Debug)]
pub struct Deformation<F: Field> {
    pub order: usize,
    pub d: Vec<GradedMap<F>>,
    pub mu: Vec<GradedMap<F>>,
    pub delta: Vec<GradedMap<F>>,
}

impl<F: Field> PartialEq for Deformation<F> {
    fn eq(&self, o: &Self) -> bool {
        self.order == o.order && self.d == o.d && self.mu == o.mu && self.delta == o.delta
    }
}

impl<F: Field> Deformation<F> {
    /// The trivial deformation of the given order.
    pub fn trivial(h: &DgHopf<F>, order: usize) -> Self {
        let s = h.space();
        Deformation {
            order,
            d: vec![GradedMap::zero(s, 1, 1, 1); order],
            mu: vec![GradedMap::zero(s, 2, 1, 0); order],
            delta: vec![GradedMap::zero(s, 1, 2, 0); order],
        }
    }

    /// Coefficient `k` as a total 2-cochain.
    pub fn coefficient(&self, k: usize) -> Option<TotalCochain<F>> {
        if k == 0 || k > self.order {
            return None;
        }
        let mut x = TotalCochain::zero(2);
        x.add_part(D_SLOT, &self.d[k - 1]);
        x.add_part(MU_SLOT, &self.mu[k - 1]);
        x.add_part(DELTA_SLOT, &self.delta[k - 1]);
        Some(x)
    }

    /// The same deformation read modulo `t^{k+1}`.
    pub fn truncated(&self, k: usize) -> Self {
        let k = k.min(self.order);
        Deformation {
            order: k,
            d: self.d[..k].to_vec(),
            mu: self.mu[..k].to_vec(),
            delta: self.delta[..k].to_vec(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.d.iter().chain(&self.mu).chain(&self.delta).all(|m| m.is_zero())
    }

    pub fn infinitesimal(&self) -> Option<TotalCochain<F>> {
        self.coefficient(1)
    }

    /// Appends coefficient `order + 1` from a total 2-cochain.
    pub fn push(&mut self, h: &DgHopf<F>, x: &TotalCochain<F>) -> Result<()> {
        if x.degree != 2 || x.parts.keys().any(|t| ![D_SLOT, MU_SLOT, DELTA_SLOT].contains(t)) {
            return Err(AlgebraError::Shape("deformation coefficients live in total degree 2".into()));
        }
        let s = h.space();
        self.d.push(x.part(D_SLOT).cloned().unwrap_or_else(|| GradedMap::zero(s, 1, 1, 1)));
        self.mu.push(x.part(MU_SLOT).cloned().unwrap_or_else(|| GradedMap::zero(s, 2, 1, 0)));
        self.delta.push(x.part(DELTA_SLOT).cloned().unwrap_or_else(|| GradedMap::zero(s, 1, 2, 0)));
        self.order += 1;
        Ok(())
    }

    /// The deformed structure with `t` specialized to a scalar.
    pub fn specialize(&self, h: &DgHopf<F>, t: &F::Elem) -> Result<DgHopf<F>> {
        let f = h.field();
        let (mut d, mut mu, mut delta) = (h.d().clone(), h.mu().clone(), h.delta().clone());
        let mut power = f.one();
        for i in 0..self.order {
            power = f.mul(&power, t);
            d = d.add_scaled(&self.d[i], &power)?;
            mu = mu.add_scaled(&self.mu[i], &power)?;
            delta = delta.add_scaled(&self.delta[i], &power)?;
        }
        h.with_maps(mu, delta, d)
    }
}

/// A gauge `φ_t = 1 + Σ t^i φ_i`; `coefficients[i-1] = φ_i`.
#[derive(Clone, Debug)]
pub struct Gauge<F: Field> {
    pub coefficients: Vec<GradedMap<F>>,
}

impl<F: Field> PartialEq for Gauge<F> {
    fn eq(&self, o: &Self) -> bool {
        self.coefficients == o.coefficients
    }
}

/// Why a deformation could not be extended or trivialized.
#[derive(Clone, Debug)]
pub struct Blocked<F: Field> {
    pub order: usize,
    /// Obstruction (for extension) or deformation coefficient (for
    /// trivialization) that is not a coboundary.
    pub class: TotalCochain<F>,
    pub image_rank: usize,
    pub augmented_rank: usize,
}

#[derive(Clone, Debug)]
pub enum ClassStatus<F: Field> {
    /// Cocycle, not yet tested for exactness.
    CocycleVerified,
    ExactWithWitness(TotalCochain<F>),
    NonzeroClass,
}

/// The order-`k` obstruction residual, verified to be a cocycle.
#[derive(Clone, Debug)]
pub struct ObstructionClass<F: Field> {
    pub order: usize,
    pub residual: TotalCochain<F>,
    pub status: ClassStatus<F>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct OrderStatus {
    pub order: usize,
    pub obstruction_vanishes: bool,
    pub obstruction_is_cocycle: bool,
    pub extended: bool,
}

/// Series arithmetic and cohomological operations for one base algebra.
pub struct DeformationEngine<'a, F: Field> {
    pub h: &'a DgHopf<F>,
    complex: AssembledComplex<'a, F>,
}

fn term<F: Field>(v: &[GradedMap<F>], base: &GradedMap<F>, i: usize) -> Option<GradedMap<F>> {
    if i == 0 {
        Some(base.clone())
    } else {
        v.get(i - 1).cloned()
    }
}

impl<'a, F: Field> DeformationEngine<'a, F> {
    pub fn new(h: &'a DgHopf<F>) -> Result<Self> {
        let complex = AssembledComplex::new(h, Window::truncated(Theory::Hopf, 3))?;
        Ok(DeformationEngine { h, complex })
    }

    pub fn complex(&mut self) -> &mut AssembledComplex<'a, F> {
        &mut self.complex
    }

    fn id(&self, arity: usize) -> GradedMap<F> {
        GradedMap::identity(self.h.space(), arity)
    }

    /// Residuals of the six structure conditions at `t^k`, as a total
    /// 3-cochain oriented so that its part linear in the coefficient of
    /// `t^k` equals `D` of that coefficient.
    pub fn obstruction(&self, defm: &Deformation<F>, k: usize) -> Result<TotalCochain<F>> {
        let h = self.h;
        let f = h.field();
        let m1 = f.from_int(-1);
        let (d, mu, de) = (&defm.d, &defm.mu, &defm.delta);
        let s = h.space();
        let mut r211 = GradedMap::zero(s, 1, 1, 2);
        let mut r031 = GradedMap::zero(s, 3, 1, 0);
        let mut r013 = GradedMap::zero(s, 1, 3, 0);
        let mut r022 = GradedMap::zero(s, 2, 2, 0);
        let mut r121 = GradedMap::zero(s, 2, 1, 1);
        let mut r112 = GradedMap::zero(s, 1, 2, 1);
        let i1 = self.id(1);
        let swap = GradedMap::transposition(s, 4, 2)?;
        for i in 0..=k {
            let j = k - i;
            let (di, dj) = (term(d, h.d(), i), term(d, h.d(), j));
            let (mi, mj) = (term(mu, h.mu(), i), term(mu, h.mu(), j));
            let (ei, ej) = (term(de, h.delta(), i), term(de, h.delta(), j));
            if let (Some(a), Some(b)) = (&di, &dj) {
                r211.add_scaled_in_place(&a.compose(b)?, &m1);
            }
            if let (Some(a), Some(b)) = (&mi, &mj) {
                r031.add_scaled_in_place(&a.compose(&b.tensor(&i1))?, &f.one());
                r031.add_scaled_in_place(&a.compose(&i1.tensor(b))?, &m1);
            }
            if let (Some(a), Some(b)) = (&ei, &ej) {
                r013.add_scaled_in_place(&i1.tensor(a).compose(b)?, &f.one());
                r013.add_scaled_in_place(&a.tensor(&i1).compose(b)?, &m1);
            }
            if let (Some(a), Some(b)) = (&ei, &mj) {
                r022.add_scaled_in_place(&a.compose(b)?, &m1);
            }
            if let (Some(a), Some(b)) = (&mi, &dj) {
                let der = b.tensor(&i1).add(&i1.tensor(b))?;
                r121.add_scaled_in_place(&a.compose(&der)?, &f.one());
            }
            if let (Some(a), Some(b)) = (&di, &mj) {
                r121.add_scaled_in_place(&a.compose(b)?, &m1);
            }
            if let (Some(a), Some(b)) = (&di, &ej) {
                let der = a.tensor(&i1).add(&i1.tensor(a))?;
                r112.add_scaled_in_place(&der.compose(b)?, &f.one());
            }
            if let (Some(a), Some(b)) = (&ei, &dj) {
                r112.add_scaled_in_place(&a.compose(b)?, &m1);
            }
        }
        // (μ_a⊗μ_b)(2,3)(Δ_c⊗Δ_e) over a + b + c + e = k
        for a in 0..=k {
            for b in 0..=k - a {
                let (Some(ma), Some(mb)) = (term(mu, h.mu(), a), term(mu, h.mu(), b)) else { continue };
                let left = ma.tensor(&mb).compose(&swap)?;
                for c in 0..=k - a - b {
                    let e = k - a - b - c;
                    let (Some(dc), Some(dd)) = (term(de, h.delta(), c), term(de, h.delta(), e)) else { continue };
                    r022.add_scaled_in_place(&left.compose(&dc.tensor(&dd))?, &f.one());
                }
            }
        }
        let mut out = TotalCochain::zero(3);
        for (t, r) in [
            (Tridegree::new(2, 1, 1), r211),
            (Tridegree::new(0, 3, 1), r031),
            (Tridegree::new(0, 1, 3), r013),
            (Tridegree::new(0, 2, 2), r022),
            (Tridegree::new(1, 2, 1), r121),
            (Tridegree::new(1, 1, 2), r112),
        ] {
            out.add_part(t, &r);
        }
        Ok(out)
    }

    /// The obstruction at order `k`, checked to be a cocycle and then
    /// classified. A non-cocycle residual is an internal error.
    pub fn classify(&mut self, defm: &Deformation<F>, k: usize) -> Result<ObstructionClass<F>> {
        let residual = self.obstruction(defm, k)?;
        if !self.total_differential(&residual).is_zero() {
            return Err(AlgebraError::Axiom(format!("obstruction at order {k} is not a cocycle")));
        }
        let status = match self.complex.solve_coboundary(&residual)? {
            Some(w) => ClassStatus::ExactWithWitness(w),
            None => ClassStatus::NonzeroClass,
        };
        Ok(ObstructionClass { order: k, residual, status })
    }

    pub fn is_valid(&self, defm: &Deformation<F>) -> Result<bool> {
        for k in 1..=defm.order {
            if !self.obstruction(defm, k)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn total_differential(&self, x: &TotalCochain<F>) -> TotalCochain<F> {
        self.complex.total_differential(x).0
    }

    /// Extends a valid deformation of order `k - 1` to order `k`.
    pub fn extend(&mut self, defm: &Deformation<F>) -> Result<std::result::Result<Deformation<F>, Blocked<F>>> {
        let k = defm.order + 1;
        let class = self.classify(defm, k)?;
        let o = class.residual;
        match class.status {
            ClassStatus::ExactWithWitness(w) => {
                let x = w.scale_neg();
                let mut next = defm.clone();
                next.push(self.h, &x)?;
                Ok(Ok(next))
            }
            _ => Ok(Err(self.blocked(k, o)?)),
        }
    }

    fn blocked(&mut self, order: usize, class: TotalCochain<F>) -> Result<Blocked<F>> {
        let f = self.h.field().clone();
        let r = class.degree;
        let cols = self.complex.matrix(r - 1)?.columns.clone();
        let b = self.complex.space(r)?.vector(&class)?;
        let image_rank = crate::linalg::rank(&f, &cols);
        let mut aug = cols;
        aug.push(b);
        let augmented_rank = crate::linalg::rank(&f, &aug);
        Ok(Blocked { order, class, image_rank, augmented_rank })
    }

    fn compose_series(&self, a: &[GradedMap<F>], b: &[GradedMap<F>], n: usize) -> Result<Vec<GradedMap<F>>> {
        let one = self.id(1);
        let mut out = Vec::new();
        for k in 1..=n {
            let mut acc = GradedMap::zero(self.h.space(), 1, 1, 0);
            for i in 0..=k {
                let (Some(x), Some(y)) = (term(a, &one, i), term(b, &one, k - i)) else { continue };
                acc.add_scaled_in_place(&x.compose(&y)?, &self.h.field().one());
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// Coefficients of `φ_t^{-1}`: `ψ_k = −Σ_{i=1}^k φ_i ψ_{k-i}`.
    pub fn inverse(&self, g: &Gauge<F>, n: usize) -> Result<Vec<GradedMap<F>>> {
        let one = self.id(1);
        let m1 = self.h.field().from_int(-1);
        let mut psi: Vec<GradedMap<F>> = Vec::new();
        for k in 1..=n {
            let mut acc = GradedMap::zero(self.h.space(), 1, 1, 0);
            for i in 1..=k {
                let Some(phi) = g.coefficients.get(i - 1) else { continue };
                let p = term(&psi, &one, k - i).unwrap();
                acc.add_scaled_in_place(&phi.compose(&p)?, &m1);
            }
            psi.push(acc);
        }
        Ok(psi)
    }

    /// `g_1 ∘ g_2` truncated at order `n`.
    pub fn compose_gauges(&self, a: &Gauge<F>, b: &Gauge<F>, n: usize) -> Result<Gauge<F>> {
        Ok(Gauge { coefficients: self.compose_series(&a.coefficients, &b.coefficients, n)? })
    }

    /// `d' = φ⁻¹ d_t φ`, `μ' = φ⁻¹ μ_t (φ⊗φ)`, `Δ' = (φ⁻¹⊗φ⁻¹) Δ_t φ`.
    pub fn apply_gauge(&self, defm: &Deformation<F>, g: &Gauge<F>) -> Result<Deformation<F>> {
        let h = self.h;
        let n = defm.order;
        let f = h.field();
        let one = self.id(1);
        let psi = self.inverse(g, n)?;
        let phi = &g.coefficients;
        let tphi = |i: usize| term(phi, &one, i);
        let tpsi = |i: usize| term(&psi, &one, i);
        let mut out = Deformation::trivial(h, n);
        for k in 1..=n {
            for a in 0..=k {
                let Some(pa) = tpsi(a) else { continue };
                for b in 0..=k - a {
                    let rest = k - a - b;
                    if let Some(db) = term(&defm.d, h.d(), b) {
                        if let Some(pc) = tphi(rest) {
                            out.d[k - 1].add_scaled_in_place(&pa.compose(&db.compose(&pc)?)?, &f.one());
                        }
                    }
                    if let Some(mb) = term(&defm.mu, h.mu(), b) {
                        let left = pa.compose(&mb)?;
                        for c in 0..=rest {
                            let (Some(x), Some(y)) = (tphi(c), tphi(rest - c)) else { continue };
                            out.mu[k - 1].add_scaled_in_place(&left.compose(&x.tensor(&y))?, &f.one());
                        }
                    }
                }
            }
            // (ψ_a⊗ψ_c) Δ_b φ_e
            for b in 0..=k {
                let Some(db) = term(&defm.delta, h.delta(), b) else { continue };
                for e in 0..=k - b {
                    let Some(pe) = tphi(e) else { continue };
                    let right = db.compose(&pe)?;
                    for a in 0..=k - b - e {
                        let c = k - b - e - a;
                        let (Some(x), Some(y)) = (tpsi(a), tpsi(c)) else { continue };
                        out.delta[k - 1].add_scaled_in_place(&x.tensor(&y).compose(&right)?, &f.one());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Finds a gauge making `defm` trivial, order by order: with all lower
    /// coefficients zero, coefficient `k` is a cocycle `x_k`, and
    /// `1 + t^k φ` with `D φ = x_k` removes it.
    pub fn trivialize(&mut self, defm: &Deformation<F>) -> Result<std::result::Result<Gauge<F>, Blocked<F>>> {
        let n = defm.order;
        let mut cur = defm.clone();
        let mut total = Gauge { coefficients: vec![GradedMap::zero(self.h.space(), 1, 1, 0); n] };
        for k in 1..=n {
            let x = cur.coefficient(k).unwrap();
            if x.is_zero() {
                continue;
            }
            let Some(phi) = self.complex.solve_coboundary(&x)? else {
                return Ok(Err(self.blocked(k, x)?));
            };
            let mut coeffs = vec![GradedMap::zero(self.h.space(), 1, 1, 0); n];
            coeffs[k - 1] = phi.part(GAUGE_SLOT).cloned().unwrap_or_else(|| GradedMap::zero(self.h.space(), 1, 1, 0));
            let gk = Gauge { coefficients: coeffs };
            cur = self.apply_gauge(&cur, &gk)?;
            total = self.compose_gauges(&total, &gk, n)?;
            debug_assert!(cur.coefficient(k).unwrap().is_zero());
        }
        Ok(Ok(total))
    }

    /// Per-order report while extending a given infinitesimal.
    pub fn extension_report(&mut self, defm: &Deformation<F>, up_to: usize) -> Result<(Deformation<F>, Vec<OrderStatus>)> {
        let mut cur = defm.clone();
        let mut out = Vec::new();
        while cur.order < up_to {
            let k = cur.order + 1;
            let o = self.obstruction(&cur, k)?;
            let cocycle = self.total_differential(&o).is_zero();
            match self.extend(&cur)? {
                Ok(next) => {
                    out.push(OrderStatus { order: k, obstruction_vanishes: o.is_zero(), obstruction_is_cocycle: cocycle, extended: true });
                    cur = next;
                }
                Err(_) => {
                    out.push(OrderStatus { order: k, obstruction_vanishes: false, obstruction_is_cocycle: cocycle, extended: false });
                    break;
                }
            }
        }
        Ok((cur, out))
    }

    fn random_combination(&self, basis: &[TotalCochain<F>], rng: &mut ChaCha8Rng, degree: i64) -> TotalCochain<F> {
        let f = self.h.field();
        let mut x = TotalCochain::zero(degree);
        for b in basis {
            let c: i64 = rng.gen_range(-2..=2);
            if c != 0 {
                x = x.add_scaled(b, &f.from_int(c)).expect("same degree");
            }
        }
        x
    }

    /// A random gauge with small integer coefficients.
    pub fn random_gauge(&self, order: usize, rng: &mut ChaCha8Rng) -> Gauge<F> {
        let h = self.h;
        let f = h.field();
        let coords = component_coords(h, Theory::Hopf, GAUGE_SLOT);
        let mut coefficients = Vec::new();
        for _ in 0..order {
            let mut m = GradedMap::zero(h.space(), 1, 1, 0);
            for (s, t) in &coords {
                let c: i64 = rng.gen_range(-2..=2);
                if c != 0 {
                    m.add_entry(s.clone(), t.clone(), f.from_int(c)).unwrap();
                }
            }
            coefficients.push(m);
        }
        Gauge { coefficients }
    }

    /// A random valid deformation: a random infinitesimal cocycle, extended
    /// order by order with a random cocycle added at each step. Retries
    /// with a fresh infinitesimal when an obstruction does not vanish.
    pub fn random_deformation(&mut self, order: usize, rng: &mut ChaCha8Rng) -> Result<Deformation<F>> {
        let cocycles = self.complex.cocycle_basis(2)?;
        'attempt: for _ in 0..32 {
            let mut defm = Deformation::trivial(self.h, 0);
            let x1 = self.random_combination(&cocycles, rng, 2);
            defm.push(self.h, &x1)?;
            while defm.order < order {
                match self.extend(&defm)? {
                    Ok(mut next) => {
                        let z = self.random_combination(&cocycles, rng, 2);
                        let k = next.order;
                        let xk = next.coefficient(k).unwrap().add_scaled(&z, &self.h.field().one())?;
                        next.d.pop();
                        next.mu.pop();
                        next.delta.pop();
                        next.order -= 1;
                        next.push(self.h, &xk)?;
                        defm = next;
                    }
                    Err(_) => continue 'attempt,
                }
            }
            return Ok(defm);
        }
        Err(AlgebraError::NoSolution("no unobstructed random deformation found".into()))
    }

    /// The trivial deformation moved by a random gauge.
    pub fn gauge_scrambled_trivial(&self, order: usize, rng: &mut ChaCha8Rng) -> Result<(Deformation<F>, Gauge<F>)> {
        let g = self.random_gauge(order, rng);
        let defm = self.apply_gauge(&Deformation::trivial(self.h, order), &g)?;
        Ok((defm, g))
    }
}

impl<F: Field> TotalCochain<F> {
    fn scale_neg(&self) -> TotalCochain<F> {
        let mut out = TotalCochain::zero(self.degree);
        for (t, m) in &self.parts {
            out.add_part_scaled(*t, m, &m.field().from_int(-1));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn first_order_obstruction_is_the_differential() {
        let h = builtin::exterior(2).unwrap();
        let mut e = DeformationEngine::new(&h).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let space = e.complex().space(2).unwrap().clone();
        for _ in 0..10 {
            let v: Vec<_> = (0..space.dim()).filter_map(|i| {
                let c: i64 = rng.gen_range(-2..=2);
                (c != 0).then(|| (i, h.field().from_int(c)))
            }).collect();
            let x = space.cochain(h.space(), &v);
            let mut defm = Deformation::trivial(&h, 0);
            defm.push(&h, &x).unwrap();
            let o = e.obstruction(&defm, 1).unwrap();
            assert_eq!(o, e.total_differential(&x));
        }
    }

    #[test]
    fn gauge_changes_infinitesimal_by_coboundary() {
        let h = builtin::exterior(2).unwrap();
        let mut e = DeformationEngine::new(&h).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let defm = e.random_deformation(3, &mut rng).unwrap();
        assert!(e.is_valid(&defm).unwrap());
        let g = e.random_gauge(3, &mut rng);
        let moved = e.apply_gauge(&defm, &g).unwrap();
        assert!(e.is_valid(&moved).unwrap());
        let diff = defm.infinitesimal().unwrap().sub(&moved.infinitesimal().unwrap()).unwrap();
        let phi1 = TotalCochain::single(GAUGE_SLOT, g.coefficients[0].clone());
        assert_eq!(diff, e.total_differential(&phi1));
    }

    #[test]
    fn residuals_are_normalized() {
        let h = builtin::exterior(2).unwrap();
        let mut e = DeformationEngine::new(&h).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let (defm, _) = e.gauge_scrambled_trivial(2, &mut rng).unwrap();
        let d1 = defm.truncated(1);
        let x = e.random_deformation(2, &mut rng).unwrap();
        for (dm, k) in [(&d1, 2), (&defm, 3), (&x, 3)] {
            let o = e.obstruction(dm, k).unwrap();
            assert!(o.parts.values().all(|m| m.is_reduced(true, true)));
        }
    }

    #[test]
    fn scrambled_trivial_deformations_trivialize() {
        let h = builtin::exterior(2).unwrap();
        let mut e = DeformationEngine::new(&h).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let (defm, _) = e.gauge_scrambled_trivial(3, &mut rng).unwrap();
        let g = e.trivialize(&defm).unwrap().unwrap();
        let t = e.apply_gauge(&defm, &g).unwrap();
        assert_eq!(t, Deformation::trivial(&h, 3));
    }
}
