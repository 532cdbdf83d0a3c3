//! The univariate view `f = c_0 + c_1 X + ... + c_n X^n` over the coefficient ring,
//! and the coefficient-level transformations built on it.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::monomial::Monomial;
use crate::poly::polynomial::{PolyRing, Polynomial};

/// Dense in `X`, sparse in the coefficient ring. Trailing zero coefficients are trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MainVarView {
    ring: Arc<PolyRing>,
    coeffs: Vec<Polynomial>,
}

fn main_var_of(ring: &Arc<PolyRing>) -> Result<(usize, Arc<PolyRing>)> {
    match (ring.main_var(), ring.coefficient_ring()) {
        (Some(x), Some(base)) => Ok((x, base.clone())),
        _ => Err(Error::invalid("polynomial ring has no main variable")),
    }
}

impl MainVarView {
    pub fn of(f: &Polynomial) -> Result<Self> {
        let (x, base) = main_var_of(f.ring())?;
        let mut buckets: Vec<Vec<(Monomial, crate::coeff::Coeff)>> = Vec::new();
        for (m, c) in f.terms() {
            let d = m.exponent(x) as usize;
            if buckets.len() <= d {
                buckets.resize_with(d + 1, Vec::new);
            }
            let mut e = m.exponents().to_vec();
            e.pop();
            buckets[d].push((Monomial::from_exponents(e), c.clone()));
        }
        let coeffs = buckets.into_iter().map(|b| Polynomial::from_terms(&base, b)).collect();
        Ok(MainVarView { ring: f.ring().clone(), coeffs })
    }

    /// Builds `Σ coeffs[i] X^i` in `ring`, which must have a main variable.
    pub fn from_coefficients(ring: &Arc<PolyRing>, coeffs: Vec<Polynomial>) -> Result<Self> {
        let (_, base) = main_var_of(ring)?;
        for c in &coeffs {
            if **c.ring() != *base {
                return Err(Error::RingMismatch("coefficient outside the coefficient ring".into()));
            }
        }
        let mut view = MainVarView { ring: ring.clone(), coeffs };
        view.trim();
        Ok(view)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    /// `c_0..c_n`, zeros included.
    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coeffs
    }

    /// Degree in `X`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficient(&self, i: usize) -> Option<&Polynomial> {
        self.coeffs.get(i)
    }

    pub fn assemble(&self) -> Polynomial {
        let x = self.ring.nvars() - 1;
        let terms = self.coeffs.iter().enumerate().flat_map(|(d, c)| {
            c.terms().iter().map(move |(m, a)| {
                let mut e = m.exponents().to_vec();
                e.push(d as u32);
                debug_assert_eq!(e.len(), x + 1);
                (Monomial::from_exponents(e), a.clone())
            })
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    fn zero_coeff(&self) -> Polynomial {
        Polynomial::zero(self.ring.coefficient_ring().expect("main variable ring"))
    }
}

/// `f(X) ↦ f(X^n)`.
pub fn substitute_power(f: &Polynomial, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::invalid("substitution exponent must be at least 1"));
    }
    let view = MainVarView::of(f)?;
    let zero = view.zero_coeff();
    let mut coeffs = vec![zero; view.coeffs.len().saturating_sub(1) * n + 1];
    for (i, c) in view.coeffs.iter().enumerate() {
        coeffs[i * n] = c.clone();
    }
    Ok(MainVarView::from_coefficients(f.ring(), coeffs)?.assemble())
}

/// Inverse of [`substitute_power`]: `g(X^n) ↦ g(X)`. Fails unless every
/// `X`-degree of `f` is a multiple of `n`.
pub fn contract_power(f: &Polynomial, n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::invalid("contraction exponent must be at least 1"));
    }
    let view = MainVarView::of(f)?;
    let mut coeffs = Vec::new();
    for (i, c) in view.coeffs.iter().enumerate() {
        if i % n == 0 {
            coeffs.push(c.clone());
        } else if !c.is_zero() {
            return Err(Error::invalid(format!("X-degree {i} is not a multiple of {n}")));
        }
    }
    Ok(MainVarView::from_coefficients(f.ring(), coeffs)?.assemble())
}

/// `f(X) ↦ f(-X)`.
pub fn negate_main_var(f: &Polynomial) -> Result<Polynomial> {
    let view = MainVarView::of(f)?;
    let coeffs = view
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
        .collect();
    Ok(MainVarView::from_coefficients(f.ring(), coeffs)?.assemble())
}

/// Splits `f = g0(X^2) + X g1(X^2)` and returns `(g0, g1)`.
pub fn even_odd_split(f: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    let view = MainVarView::of(f)?;
    let even = view.coeffs.iter().step_by(2).cloned().collect();
    let odd = view.coeffs.iter().skip(1).step_by(2).cloned().collect();
    Ok((
        MainVarView::from_coefficients(f.ring(), even)?.assemble(),
        MainVarView::from_coefficients(f.ring(), odd)?.assemble(),
    ))
}

/// The polynomial whose `X^i` coefficient is the `X^{perm[i]}` coefficient of `f`.
pub fn permute_coefficients(f: &Polynomial, perm: &[usize]) -> Result<Polynomial> {
    let view = MainVarView::of(f)?;
    let n = view.coeffs.len();
    if perm.len() != n {
        return Err(Error::invalid(format!(
            "permutation has {} entries, expected deg f + 1 = {n}",
            perm.len()
        )));
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(Error::invalid("not a permutation of 0..=deg f"));
        }
        seen[p] = true;
    }
    let coeffs = perm.iter().map(|&p| view.coeffs[p].clone()).collect();
    Ok(MainVarView::from_coefficients(f.ring(), coeffs)?.assemble())
}
