//! Bar and cobar resolutions with their internal differentials and
//! contracting homotopies, as materialized maps.
//!
//! Indexing: `∂_(m): A^{⊗(m+2)} → A^{⊗(m+1)}` for `m ≥ 0`,
//! `d_(m)` acts on `A^{⊗(m+2)}` for `m ≥ -1`, and
//! `δ_(n): C^{⊗(n+2)} → C^{⊗(n+3)}` for `n ≥ -1`.

use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::graded::{GradedMap, Terms, Word};
use crate::hopf::DgHopf;

fn arity(m: i64, offset: i64) -> Result<usize> {
    let a = m + offset;
    if a < 1 {
        return Err(AlgebraError::Shape(format!("index {m} out of range")));
    }
    Ok(a as usize)
}

fn all_words<F: Field>(h: &DgHopf<F>, arity: usize) -> Vec<Word> {
    h.basis().words(arity, false)
}

/// `∂_(m) = Σ_i (-1)^i 1^{⊗i}⊗μ⊗1^{⊗(m-i)}`.
pub fn bar_diff<F: Field>(h: &DgHopf<F>, m: i64) -> Result<GradedMap<F>> {
    let a = arity(m, 2)?;
    if a < 2 {
        return Err(AlgebraError::Shape("bar differential needs m ≥ 0".into()));
    }
    GradedMap::from_fn(h.space(), a, a - 1, 0, all_words(h, a), |w| h.bar_diff(w))
}

/// Bar differential with the sign of each summand supplied by `odd(i)`.
pub fn bar_diff_with_signs<F: Field>(h: &DgHopf<F>, m: i64, odd: impl Fn(usize) -> bool) -> Result<GradedMap<F>> {
    let a = arity(m, 2)?;
    let f = h.field();
    GradedMap::from_fn(h.space(), a, a - 1, 0, all_words(h, a), |w| {
        let mut out = Terms::new();
        for i in 0..a - 1 {
            for (b, c) in h.mul(w[i], w[i + 1]) {
                let mut t = Word::from_slice(&w[..i]);
                t.push(*b);
                t.extend_from_slice(&w[i + 2..]);
                h.space().add_term(&mut out, t, f.mul(&f.sign(odd(i)), c));
            }
        }
        out
    })
}

/// `∂_(0) = μ`, `∂_(m) = μ⊗1^{⊗m} − 1⊗∂_(m-1)`.
pub fn bar_diff_inductive<F: Field>(h: &DgHopf<F>, m: i64) -> Result<GradedMap<F>> {
    if m == 0 {
        return Ok(h.mu().clone());
    }
    arity(m, 2)?;
    let id = |k| GradedMap::identity(h.space(), k);
    let left = h.mu().tensor(&id(m as usize));
    let right = id(1).tensor(&bar_diff_inductive(h, m - 1)?);
    left.sub(&right)
}

/// `d_(m) = Σ_i 1^{⊗i}⊗d⊗1^{⊗(m+1-i)}` with Koszul signs.
pub fn internal_diff<F: Field>(h: &DgHopf<F>, m: i64) -> Result<GradedMap<F>> {
    let a = arity(m, 2)?;
    GradedMap::from_fn(h.space(), a, a, 1, all_words(h, a), |w| h.internal_diff(w))
}

/// `d_(-1) = d`, `d_(m) = d⊗1^{⊗(m+1)} + 1⊗d_(m-1)`.
pub fn internal_diff_inductive<F: Field>(h: &DgHopf<F>, m: i64) -> Result<GradedMap<F>> {
    if m == -1 {
        return Ok(h.d().clone());
    }
    arity(m, 2)?;
    let id = |k| GradedMap::identity(h.space(), k);
    let left = h.d().tensor(&id(m as usize + 1));
    let right = id(1).tensor(&internal_diff_inductive(h, m - 1)?);
    left.add(&right)
}

/// `δ_(n) = Σ_i (-1)^i 1^{⊗i}⊗Δ⊗1^{⊗(n+1-i)}`.
pub fn cobar_diff<F: Field>(h: &DgHopf<F>, n: i64) -> Result<GradedMap<F>> {
    let a = arity(n, 2)?;
    GradedMap::from_fn(h.space(), a, a + 1, 0, all_words(h, a), |w| h.cobar_diff(w))
}

/// `δ_(-1) = Δ`, `δ_(n) = Δ⊗1^{⊗(n+1)} − 1⊗δ_(n-1)`.
pub fn cobar_diff_inductive<F: Field>(h: &DgHopf<F>, n: i64) -> Result<GradedMap<F>> {
    if n == -1 {
        return Ok(h.delta().clone());
    }
    arity(n, 2)?;
    let id = |k| GradedMap::identity(h.space(), k);
    let left = h.delta().tensor(&id(n as usize + 1));
    let right = id(1).tensor(&cobar_diff_inductive(h, n - 1)?);
    left.sub(&right)
}

/// `s_m: A^{⊗(m+1)} → A^{⊗(m+2)}`, `w ↦ 1⊗w`.
pub fn bar_homotopy<F: Field>(h: &DgHopf<F>, m: i64) -> Result<GradedMap<F>> {
    let a = arity(m, 1)?;
    let one = h.field().one();
    GradedMap::from_fn(h.space(), a, a + 1, 0, all_words(h, a), |w| {
        let mut t = Word::from_slice(&[0]);
        t.extend_from_slice(w);
        Terms::from([(t, one.clone())])
    })
}

/// `τ_n: C^{⊗(n+2)} → C^{⊗(n+1)}`, counit on the first factor.
pub fn cobar_homotopy<F: Field>(h: &DgHopf<F>, n: i64) -> Result<GradedMap<F>> {
    let a = arity(n, 2)?;
    let one = h.field().one();
    GradedMap::from_fn(h.space(), a, a - 1, 0, all_words(h, a), |w| {
        if w[0] == 0 {
            Terms::from([(Word::from_slice(&w[1..]), one.clone())])
        } else {
            Terms::new()
        }
    })
}

/// One named identity among resolution maps and whether it holds.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub index: i64,
    pub holds: bool,
}

/// Checks for external indices `0..=max_index`:
/// `∂∘∂ = 0`, `δ∘δ = 0`, `d∘d = 0`, `∂_(m)∘d_(m) = d_(m-1)∘∂_(m)`,
/// `δ_(n)∘d_(n) = d_(n+1)∘δ_(n)`, the contracting homotopy identities and
/// agreement of the inductive and closed forms.
pub fn check_resolutions<F: Field>(h: &DgHopf<F>, max_index: i64) -> Result<Vec<IdentityCheck>> {
    let mut out = Vec::new();
    let mut push = |name: &str, index: i64, holds: bool| out.push(IdentityCheck { name: name.into(), index, holds });
    for m in 0..=max_index {
        let bm = bar_diff(h, m)?;
        push("bar_inductive_form", m, bm == bar_diff_inductive(h, m)?);
        if m >= 1 {
            push("bar_square", m, bar_diff(h, m - 1)?.compose(&bm)?.is_zero());
        }
        let dm = internal_diff(h, m)?;
        let dm1 = internal_diff(h, m - 1)?;
        push("internal_inductive_form", m, dm == internal_diff_inductive(h, m)?);
        push("internal_square", m, dm.compose(&dm)?.is_zero());
        push("bar_commutes_with_internal", m, bm.compose(&dm)? == dm1.compose(&bm)?);
        // ∂_(m) s_m + s_(m-1) ∂_(m-1) = 1 on A^{⊗(m+1)}
        let sm = bar_homotopy(h, m)?;
        let mut lhs = bm.compose(&sm)?;
        if m >= 1 {
            lhs = lhs.add(&bar_homotopy(h, m - 1)?.compose(&bar_diff(h, m - 1)?)?)?;
        }
        push("bar_homotopy", m, lhs == GradedMap::identity(h.space(), m as usize + 1));

        let n = m;
        let cn = cobar_diff(h, n)?;
        push("cobar_inductive_form", n, cn == cobar_diff_inductive(h, n)?);
        push("cobar_square", n, cobar_diff(h, n + 1)?.compose(&cn)?.is_zero());
        let dn = internal_diff(h, n)?;
        let dn1 = internal_diff(h, n + 1)?;
        push("cobar_commutes_with_internal", n, cn.compose(&dn)? == dn1.compose(&cn)?);
        // τ_(n+1) δ_(n) + δ_(n-1) τ_n = 1 on C^{⊗(n+2)}
        let mut lhs = cobar_homotopy(h, n + 1)?.compose(&cn)?;
        let tail = cobar_diff(h, n - 1)?.compose(&cobar_homotopy(h, n)?)?;
        lhs = lhs.add(&tail)?;
        push("cobar_homotopy", n, lhs == GradedMap::identity(h.space(), n as usize + 2));
    }
    Ok(out)
}
