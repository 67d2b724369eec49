//! Randomized invariants over the built-in algebras.

use hocart_core::builtin;
use hocart_core::cochain::{Theory, TotalCochain, Tridegree, Window};
use hocart_core::cohomology::AssembledComplex;
use hocart_core::deformation::{seeded_rng, Deformation, DeformationEngine, D_SLOT};
use hocart_core::harrison::{ad_d, derivation_space, is_derivation, is_harrison, GeneratorComplex};
use hocart_core::{word, DgHopf, Field, GradedMap, PrimeField, Rationals};
use num_bigint::BigInt;
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig { cases: 24, ..ProptestConfig::default() }
}

/// An arity-one map of the given degree with coefficients drawn from `cs`.
fn map_from<F: Field>(h: &DgHopf<F>, degree: i32, cs: &[i64]) -> GradedMap<F> {
    let f = h.field();
    let mut m = GradedMap::zero(h.space(), 1, 1, degree);
    let mut k = 0;
    for s in 0..h.dim() as u16 {
        for t in 0..h.dim() as u16 {
            if h.deg(t) as i64 - h.deg(s) as i64 == degree as i64 {
                let c = cs[k % cs.len()];
                k += 1;
                if c != 0 {
                    m.add_entry(word(&[s]), word(&[t]), f.from_int(c)).unwrap();
                }
            }
        }
    }
    m
}

fn cochain_from<F: Field>(cx: &mut AssembledComplex<'_, F>, r: i64, cs: &[i64]) -> TotalCochain<F> {
    let f = cx.h.field().clone();
    let space = cx.space(r).unwrap().clone();
    let v: Vec<(usize, F::Elem)> = (0..space.dim()).map(|i| (i, cs[i % cs.len()])).filter(|(_, c)| *c != 0).map(|(i, c)| (i, f.from_int(c))).collect();
    space.cochain(cx.h.space(), &v)
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 1..12)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn rational_format_parse_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let f = Rationals;
        let x = f.from_ratio(&BigInt::from(n), &BigInt::from(d)).unwrap();
        prop_assert_eq!(f.parse(&f.format(&x)).unwrap(), x);
    }

    #[test]
    fn prime_field_inverses(a in 1u64..1000, p in prop::sample::select(vec![2u64, 3, 5, 7, 101])) {
        let f = PrimeField::new(p).unwrap();
        let x = f.from_int(a as i64);
        if !f.is_zero(&x) {
            let y = f.inv(&x).unwrap();
            prop_assert_eq!(f.mul(&x, &y), f.one());
        }
        prop_assert_eq!(f.parse(&f.format(&x)).unwrap(), x);
    }

    #[test]
    fn tensor_interchange_carries_koszul_sign(a in coeffs(), b in coeffs(), c in coeffs(), e in coeffs(), pf in 0i32..2, pg in 0i32..2) {
        let h = builtin::exterior(2).unwrap();
        let (f1, f2) = (map_from(&h, pf, &a), map_from(&h, 1 - pf, &b));
        let (g1, g2) = (map_from(&h, pg, &c), map_from(&h, 1 - pg, &e));
        // (f1 ⊗ g1)(f2 ⊗ g2) = (-1)^{|g1||f2|} f1f2 ⊗ g1g2
        let lhs = f1.tensor(&g1).compose(&f2.tensor(&g2)).unwrap();
        let rhs = f1.compose(&f2).unwrap().tensor(&g1.compose(&g2).unwrap());
        let sign = h.field().sign((pg * (1 - pf)) % 2 == 1);
        prop_assert_eq!(lhs, rhs.scale(&sign));
    }

    #[test]
    fn total_differential_squares_to_zero(cs in coeffs(), r in 0i64..3, th in 0usize..4) {
        let h = builtin::exterior(2).unwrap();
        let theory = [Theory::Hopf, Theory::Hochschild, Theory::Cartier, Theory::Harrison][th];
        let mut cx = AssembledComplex::new(&h, Window::truncated(theory, 3)).unwrap();
        let x = cochain_from(&mut cx, r, &cs);
        let (dx, _) = cx.total_differential(&x);
        let (ddx, _) = cx.total_differential(&dx);
        prop_assert!(ddx.is_zero());
    }

    #[test]
    fn coboundaries_are_solved(cs in coeffs()) {
        let h = builtin::exterior(2).unwrap();
        let mut cx = AssembledComplex::new(&h, Window::truncated(Theory::Hopf, 3)).unwrap();
        let y = cochain_from(&mut cx, 1, &cs);
        let (x, _) = cx.total_differential(&y);
        let z = cx.solve_coboundary(&x).unwrap().expect("coboundary");
        prop_assert_eq!(cx.total_differential(&z).0, x);
    }

    #[test]
    fn representatives_stay_nonzero_modulo_coboundaries(cs in coeffs(), pick in 0usize..2, scale in 1i64..4) {
        let h = builtin::exterior(1).unwrap();
        let mut cx = AssembledComplex::new(&h, Window::truncated(Theory::Hopf, 3)).unwrap();
        let reps = cx.cohomology(3).unwrap().representatives;
        prop_assert_eq!(reps.len(), 2);
        let y = cochain_from(&mut cx, 2, &cs);
        let (dy, _) = cx.total_differential(&y);
        let x = dy.add_scaled(&reps[pick], &h.field().from_int(scale)).unwrap();
        prop_assert!(cx.is_cocycle(&x));
        prop_assert!(cx.solve_coboundary(&x).unwrap().is_none());
        prop_assert!(cx.solve_coboundary(&dy).unwrap().is_some());
    }

    #[test]
    fn harrison_subcomplex_is_stable(cs in coeffs(), r in 1i64..3) {
        let h = builtin::acyclic(5).unwrap();
        let mut cx = AssembledComplex::new(&h, Window::truncated(Theory::Harrison, 3)).unwrap();
        let x = cochain_from(&mut cx, r, &cs);
        for m in x.parts.values() {
            prop_assert!(is_harrison(&h, m));
        }
        let (dx, _) = cx.total_differential(&x);
        for m in dx.parts.values() {
            prop_assert!(is_harrison(&h, m));
        }
    }

    #[test]
    fn harrison_two_cochains_are_graded_symmetric(cs in coeffs()) {
        let h = builtin::acyclic(5).unwrap();
        let mut cx = AssembledComplex::new(&h, Window::truncated(Theory::Harrison, 3)).unwrap();
        let x = cochain_from(&mut cx, 2, &cs);
        for (t, m) in &x.parts {
            if t.m != 2 {
                continue;
            }
            let swap = GradedMap::transposition(h.space(), 2, 1).unwrap();
            // f(a⊗b) = (-1)^{|a||b|} f(b⊗a)
            prop_assert_eq!(m.compose(&swap).unwrap(), m.clone());
        }
    }

    #[test]
    fn derivations_are_closed_under_commutator_with_d(p in -3i64..3, pick in 0usize..8) {
        let h = builtin::acyclic(6).unwrap();
        let ders = derivation_space(&h, p).unwrap();
        if !ders.is_empty() {
            let theta = &ders[pick % ders.len()];
            prop_assert!(is_derivation(&h, theta));
            let dt = ad_d(&h, theta);
            prop_assert!(is_derivation(&h, &dt));
            prop_assert!(ad_d(&h, &dt).is_zero());
        }
    }

    #[test]
    fn gauge_scrambled_deformations_trivialize(seed in 0u64..1000, order in 1usize..4) {
        let h = builtin::exterior(2).unwrap();
        let mut eng = DeformationEngine::new(&h).unwrap();
        let (defm, _) = eng.gauge_scrambled_trivial(order, &mut seeded_rng(seed)).unwrap();
        prop_assert!(eng.is_valid(&defm).unwrap());
        let g = eng.trivialize(&defm).unwrap().expect("trivializable");
        prop_assert!(eng.apply_gauge(&defm, &g).unwrap().is_trivial());
    }

    #[test]
    fn random_deformations_have_cocycle_obstructions(seed in 0u64..1000) {
        let h = builtin::exterior(1).unwrap();
        let mut eng = DeformationEngine::new(&h).unwrap();
        let defm = eng.random_deformation(3, &mut seeded_rng(seed)).unwrap();
        prop_assert!(eng.is_valid(&defm).unwrap());
        for k in 2..=4 {
            let o = eng.obstruction(&defm.truncated(k - 1), k).unwrap();
            prop_assert!(eng.total_differential(&o).is_zero());
        }
    }
}

#[test]
fn degree_zero_derivations_are_determined_by_generators() {
    let h = builtin::acyclic(6).unwrap();
    let f = h.field();
    let x = h.basis().index_of("x").unwrap();
    let y = h.basis().index_of("y").unwrap();
    assert_eq!(derivation_space(&h, 0).unwrap().len(), 2);
    let gens = GeneratorComplex::new(&h).unwrap();
    assert_eq!(gens.generators, vec![x, y]);
    // θ(x) = 0, θ(y) = y scales y^k by k.
    let theta = gens.extend(0, &[((y, y), f.one())]).unwrap();
    assert!(is_derivation(&h, &theta));
    assert!(theta.apply_word(&[x]).is_empty());
    for k in 1..=3u32 {
        let yk = h.basis().index_of(&if k == 1 { "y".to_string() } else { format!("y{k}") }).unwrap();
        let v = theta.apply_word(&[yk]);
        assert_eq!(v.get(&word(&[yk])), Some(&f.from_int(k as i64)));
        assert_eq!(v.len(), 1);
    }
    // dim Der^p equals the generator Hom dimension; lowering degrees would
    // reach past the cap (θ(y) = 1 forces θ(y^4) = 4y^3 ≠ 0).
    for p in 0..=3 {
        assert_eq!(derivation_space(&h, p).unwrap().len(), gens.coords(p).len(), "p = {p}");
    }
}

#[test]
fn identity_is_not_a_derivation_on_exterior_algebras() {
    let h = builtin::exterior(2).unwrap();
    assert!(!is_derivation(&h, &GradedMap::identity(h.space(), 1)));
}

#[test]
fn non_closed_coefficient_is_blocked_with_rank_certificate() {
    let h = builtin::exterior(2).unwrap();
    let mut eng = DeformationEngine::new(&h).unwrap();
    let f = h.field();
    let x1 = h.basis().index_of("x1").unwrap();
    let mut m = GradedMap::zero(h.space(), 1, 1, 1);
    let top = h.basis().index_of("x1x2").unwrap();
    m.add_entry(word(&[x1]), word(&[top]), f.one()).unwrap();
    let mut defm = Deformation::trivial(&h, 0);
    defm.push(&h, &TotalCochain::single(D_SLOT, m)).unwrap();
    let blocked = eng.trivialize(&defm).unwrap().expect_err("not a coboundary");
    assert_eq!(blocked.order, 1);
    assert_eq!(blocked.augmented_rank, blocked.image_rank + 1);
    assert!(!eng.complex().is_cocycle(&blocked.class) || eng.complex().solve_coboundary(&blocked.class).unwrap().is_none());
}

#[test]
fn degree_three_class_in_characteristic_two_is_certified_nonzero() {
    let h = builtin::truncated_polynomial(2).unwrap();
    let mut cx = AssembledComplex::new(&h, Window::truncated(Theory::Hopf, 3)).unwrap();
    let c = cx.cohomology(3).unwrap();
    assert_eq!(c.dim, 1);
    let rep = &c.representatives[0];
    assert!(cx.is_cocycle(rep));
    assert!(cx.solve_coboundary(rep).unwrap().is_none());
    assert_eq!(cx.cohomology(2).unwrap().dim, 0);
}

#[test]
fn trivial_deformation_needs_no_gauge() {
    let h = builtin::exterior(2).unwrap();
    let mut eng = DeformationEngine::new(&h).unwrap();
    let g = eng.trivialize(&Deformation::trivial(&h, 3)).unwrap().unwrap();
    assert!(g.coefficients.iter().all(|c| c.is_zero()));
    assert_eq!(Tridegree::new(0, 1, 1).total(), 1);
}
