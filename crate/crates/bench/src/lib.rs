//! Benchmark fixtures shared by the criterion targets.

use hocart_core::builtin;
use hocart_core::cochain::{Theory, Window};
use hocart_core::cohomology::AssembledComplex;
use hocart_core::deformation::{seeded_rng, DeformationEngine};
use hocart_core::{DgHopf, Rationals};

pub fn lambda(n: usize) -> DgHopf<Rationals> {
    builtin::exterior(n).expect("built-in example")
}

/// Dimension of the degree-`r` Hopf cohomology at `q = 3`, from a fresh complex.
pub fn hopf_cohomology(h: &DgHopf<Rationals>, r: i64) -> usize {
    let mut cx = AssembledComplex::new(h, Window::truncated(Theory::Hopf, 3)).unwrap();
    cx.cohomology(r).unwrap().dim
}

/// Trivializes one gauge-scrambled trivial deformation.
pub fn scramble_and_trivialize(h: &DgHopf<Rationals>, order: usize, seed: u64) -> bool {
    let mut e = DeformationEngine::new(h).unwrap();
    let mut rng = seeded_rng(seed);
    let (defm, _) = e.gauge_scrambled_trivial(order, &mut rng).unwrap();
    let g = e.trivialize(&defm).unwrap().unwrap();
    e.apply_gauge(&defm, &g).unwrap().is_trivial()
}
