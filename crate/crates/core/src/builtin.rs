//! Built-in presentations.

use num_bigint::BigInt;

use crate::error::{AlgebraError, Result};
use crate::field::{Field, PrimeField, Rationals};
use crate::graded::{word, GradedBasis, GradedMap, GradedSpace};
use crate::hopf::DgHopf;

fn sorted_sign(v: &[usize]) -> Option<(bool, Vec<usize>)> {
    let mut w = v.to_vec();
    let mut odd = false;
    for i in 0..w.len() {
        for j in 0..w.len() - 1 - i {
            if w[j] == w[j + 1] {
                return None;
            }
            if w[j] > w[j + 1] {
                w.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    Some((odd, w))
}

fn subset_label(s: &[usize]) -> String {
    if s.is_empty() {
        "1".into()
    } else {
        s.iter().map(|i| format!("x{}", i + 1)).collect()
    }
}

/// Exterior Hopf algebra `Λ(x_1,…,x_n)` on primitive generators of degree 1, `d = 0`.
pub fn exterior_over<F: Field>(field: F, n: usize) -> Result<DgHopf<F>> {
    if n == 0 || n > 10 {
        return Err(AlgebraError::Unsupported(format!("exterior algebra on {n} generators")));
    }
    let mut subsets: Vec<Vec<usize>> = (0..1usize << n).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect();
    subsets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    let basis = GradedBasis::new(subsets.iter().map(|s| (subset_label(s), s.len() as u32)))?;
    let space = GradedSpace::new(field, basis);
    let f = &space.field;
    let idx = |s: &[usize]| space.basis.index_of(&subset_label(s)).unwrap();
    let mut mu = GradedMap::zero(&space, 2, 1, 0);
    let mut delta = GradedMap::zero(&space, 1, 2, 0);
    for a in &subsets {
        for b in &subsets {
            let cat: Vec<usize> = a.iter().chain(b).copied().collect();
            if let Some((odd, s)) = sorted_sign(&cat) {
                mu.add_entry(word(&[idx(a), idx(b)]), word(&[idx(&s)]), f.sign(odd))?;
            }
        }
        for mask in 0..1usize << a.len() {
            let left: Vec<usize> = (0..a.len()).filter(|i| mask >> i & 1 == 1).map(|i| a[i]).collect();
            let right: Vec<usize> = (0..a.len()).filter(|i| mask >> i & 1 == 0).map(|i| a[i]).collect();
            let cat: Vec<usize> = left.iter().chain(&right).copied().collect();
            let (odd, _) = sorted_sign(&cat).unwrap();
            delta.add_entry(word(&[idx(a)]), word(&[idx(&left), idx(&right)]), f.sign(odd))?;
        }
    }
    let d = GradedMap::zero(&space, 1, 1, 1);
    DgHopf::new(space, mu, delta, d, None, None)
}

pub fn exterior(n: usize) -> Result<DgHopf<Rationals>> {
    exterior_over(Rationals, n)
}

fn acyclic_label(e: u32, k: u32) -> String {
    match (e, k) {
        (0, 0) => "1".into(),
        (1, 0) => "x".into(),
        (0, 1) => "y".into(),
        (1, 1) => "xy".into(),
        (0, k) => format!("y{k}"),
        (_, k) => format!("xy{k}"),
    }
}

/// `Λ(x) ⊗ k[y]` with `|x| = 1`, `|y| = 2`, `dx = y`, both primitive, as the
/// quotient by everything of degree above `cap`.
pub fn acyclic_over<F: Field>(field: F, cap: u32) -> Result<DgHopf<F>> {
    if cap < 2 {
        return Err(AlgebraError::Window("the acyclic example needs an internal-degree cap of at least 2".into()));
    }
    let monomials: Vec<(u32, u32)> = (0..=cap).map(|deg| (deg % 2, deg / 2)).collect();
    let basis = GradedBasis::new(monomials.iter().map(|&(e, k)| (acyclic_label(e, k), e + 2 * k)))?;
    let space = GradedSpace::new(field, basis);
    let f = &space.field;
    let idx = |e: u32, k: u32| space.basis.index_of(&acyclic_label(e, k));
    let mut mu = GradedMap::zero(&space, 2, 1, 0);
    let mut delta = GradedMap::zero(&space, 1, 2, 0);
    let mut d = GradedMap::zero(&space, 1, 1, 1);
    for &(e1, k1) in &monomials {
        let a = idx(e1, k1).unwrap();
        for &(e2, k2) in &monomials {
            if e1 + e2 > 1 {
                continue;
            }
            if let Some(p) = idx(e1 + e2, k1 + k2) {
                mu.add_entry(word(&[a, idx(e2, k2).unwrap()]), word(&[p]), f.one())?;
            }
        }
        for ea in 0..=e1 {
            for ka in 0..=k1 {
                let c = binomial(k1, ka);
                let l = idx(ea, ka).unwrap();
                let r = idx(e1 - ea, k1 - ka).unwrap();
                delta.add_entry(word(&[a]), word(&[l, r]), f.from_ratio(&c, &BigInt::from(1))?)?;
            }
        }
        if e1 == 1 {
            if let Some(t) = idx(0, k1 + 1) {
                d.add_entry(word(&[a]), word(&[t]), f.one())?;
            }
        }
    }
    DgHopf::new(space, mu, delta, d, None, Some(cap))
}

pub fn acyclic(cap: u32) -> Result<DgHopf<Rationals>> {
    acyclic_over(Rationals, cap)
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut c = BigInt::from(1);
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

fn power_label(k: u32) -> String {
    match k {
        0 => "1".into(),
        1 => "x".into(),
        k => format!("x{k}"),
    }
}

/// `k[x]/(x^p)` with `|x| = 2`, `x` primitive, `Δ(x^k) = Σ C(k,i) x^i⊗x^{k-i}`.
/// A Hopf algebra over `F_p`, not over `Q`.
pub fn truncated_polynomial_over<F: Field>(field: F, p: u32) -> Result<DgHopf<F>> {
    if !(2..=64).contains(&p) {
        return Err(AlgebraError::Unsupported(format!("truncation height {p}")));
    }
    let basis = GradedBasis::new((0..p).map(|k| (power_label(k), 2 * k)))?;
    let space = GradedSpace::new(field, basis);
    let f = &space.field;
    let mut mu = GradedMap::zero(&space, 2, 1, 0);
    let mut delta = GradedMap::zero(&space, 1, 2, 0);
    for i in 0..p {
        for j in 0..p - i {
            mu.add_entry(word(&[i as u16, j as u16]), word(&[(i + j) as u16]), f.one())?;
        }
        for a in 0..=i {
            let c = f.from_ratio(&binomial(i, a), &BigInt::from(1))?;
            delta.add_entry(word(&[i as u16]), word(&[a as u16, (i - a) as u16]), c)?;
        }
    }
    let d = GradedMap::zero(&space, 1, 1, 1);
    DgHopf::new(space, mu, delta, d, None, None)
}

pub fn truncated_polynomial(p: u32) -> Result<DgHopf<PrimeField>> {
    truncated_polynomial_over(PrimeField::new(p as u64)?, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exterior_algebras_are_hopf() {
        for n in 1..=3 {
            let h = exterior(n).unwrap();
            let r = h.validate();
            assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
            assert!(h.check_antipode_antimultiplicative().passed);
        }
    }

    #[test]
    fn exterior_two_structure() {
        let h = exterior(2).unwrap();
        let b = h.basis();
        let (x1, x2, x12) = (b.index_of("x1").unwrap(), b.index_of("x2").unwrap(), b.index_of("x1x2").unwrap());
        let q = Rationals;
        let dx = h.delta().apply_word(&[x12]);
        assert_eq!(dx.len(), 4);
        assert_eq!(dx[&word(&[x1, x2])], q.one());
        assert_eq!(dx[&word(&[x2, x1])], q.from_int(-1));
        assert_eq!(h.antipode().apply_word(&[x12]), [(word(&[x12]), q.one())].into());
        assert_eq!(h.antipode().apply_word(&[x1]), [(word(&[x1]), q.from_int(-1))].into());
    }

    #[test]
    fn acyclic_truncation_is_consistent() {
        let h = acyclic(6).unwrap();
        let r = h.validate();
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        assert_eq!(h.dim(), 7);
    }

    #[test]
    fn truncated_polynomial_depends_on_field() {
        for p in [2, 3, 5] {
            assert!(truncated_polynomial(p).unwrap().validate().passed());
            let q = truncated_polynomial_over(Rationals, p).unwrap().validate();
            assert!(!q.get("bialgebra").unwrap().passed);
        }
    }
}
