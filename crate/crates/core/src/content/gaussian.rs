use std::collections::HashSet;
use std::sync::Arc;

use serde::Serialize;

use crate::content::{coefficients, content, content_product_defect, require_nonzero};
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::poly::{MainVarView, Polynomial};
use crate::rings::{ideal_product, is_invertible, RingSpec};

const PERMUTATION_LIMIT: usize = 720;
const TUPLE_LIMIT: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GaussianStatus {
    GaussianCertified,
    NonGaussian,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GaussianMethod {
    GenericCoefficients,
    Invertibility,
    PrincipalContent,
}

/// A polynomial `g` and an element of `c(f)c(g)` outside `c(fg)`.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub g: Polynomial,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub element: Polynomial,
}

impl Witness {
    /// Re-checks `element ∈ c(f)c(g)` and `element ∉ c(fg)` from scratch.
    pub fn verify(&self, ring: &Arc<RingSpec>, f: &Polynomial) -> Result<bool> {
        let cf = content(ring, f)?;
        let cg = content(ring, &self.g)?;
        let fg = content(ring, &ring.mul(&super::canonical(ring, f)?, &super::canonical(ring, &self.g)?))?;
        Ok(ideal_product(&cf, &cg)?.is_member(&self.element)? && !fg.is_member(&self.element)?)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GaussianVerdict {
    pub status: GaussianStatus,
    /// Degree bound on `g` that the verdict speaks about.
    pub degree: usize,
    pub witness: Option<Witness>,
    pub method: GaussianMethod,
}

impl GaussianVerdict {
    pub fn is_certified(&self) -> bool {
        self.status == GaussianStatus::GaussianCertified
    }
}

/// Steps `idx` to the next permutation in lexicographic order.
fn next_permutation(idx: &mut [usize]) -> bool {
    let Some(i) = (1..idx.len()).rev().find(|&i| idx[i - 1] < idx[i]) else {
        return false;
    };
    let j = (i..idx.len()).rev().find(|&j| idx[j] > idx[i - 1]).unwrap();
    idx.swap(i - 1, j);
    idx[i..].reverse();
    true
}

/// Candidate multipliers of degree ≤ `d`: rearrangements of the coefficients
/// of `f` first, then coefficient tuples over `{0, 1, variables, coefficients of f}`.
fn candidates(ring: &RingSpec, f: &Polynomial, d: usize) -> Result<Vec<Polynomial>> {
    let full = ring.full();
    let coeffs = coefficients(ring, f)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut push = |c: Vec<Polynomial>, out: &mut Vec<Polynomial>| -> Result<()> {
        let g = MainVarView::from_coefficients(full, c)?.assemble();
        if !g.is_zero() && seen.insert(g.clone()) {
            out.push(g);
        }
        Ok(())
    };

    if coeffs.len() <= d + 1 {
        let mut padded = coeffs.clone();
        padded.resize_with(d + 1, || Polynomial::zero(ring.base()));
        let mut idx: Vec<usize> = (0..=d).collect();
        for _ in 0..PERMUTATION_LIMIT {
            push(idx.iter().map(|&i| padded[i].clone()).collect(), &mut out)?;
            if !next_permutation(&mut idx) {
                break;
            }
        }
    }

    let mut pool = vec![Polynomial::zero(ring.base()), Polynomial::one(ring.base())];
    for v in ring.base_vars() {
        pool.push(ring.base_var(v)?);
    }
    pool.extend(coeffs.into_iter().filter(|c| !c.is_zero()));
    let mut uniq: Vec<Polynomial> = Vec::new();
    for p in pool {
        if !uniq.contains(&p) {
            uniq.push(p);
        }
    }
    let base = uniq.len();
    let mut digits = vec![0usize; d + 1];
    for _ in 0..TUPLE_LIMIT {
        // little-endian counter: digit i picks the coefficient of X^i
        let mut k = 0;
        while k <= d {
            digits[k] += 1;
            if digits[k] < base {
                break;
            }
            digits[k] = 0;
            k += 1;
        }
        if k > d {
            break;
        }
        push(digits.iter().map(|&i| uniq[i].clone()).collect(), &mut out)?;
    }
    Ok(out)
}

/// First concrete `g` of degree ≤ `d` with `c(fg) ≠ c(f)c(g)`, in the fixed search order.
pub fn find_witness(ring: &Arc<RingSpec>, f: &Polynomial, d: usize) -> Result<Option<Witness>> {
    let f = require_nonzero(ring, f, "f")?;
    for g in candidates(ring, &f, d)? {
        if let Some(element) = content_product_defect(ring, &f, &g)?.witness {
            return Ok(Some(Witness { g, element }));
        }
    }
    Ok(None)
}

/// Multiplicativity of `c(f·g)` for the generic `g = Σ u_i X^i`, `i ≤ d`,
/// over `R[u_0..u_d]`. Certifies for every `g` of degree ≤ `d` over every
/// extension of `R`; a failure is only turned into `non-gaussian` by a concrete witness over `R`.
pub fn gaussian_generic(ring: &Arc<RingSpec>, f: &Polynomial, d: usize) -> Result<GaussianVerdict> {
    let f = require_nonzero(ring, f, "f")?;
    let names = ring.fresh_names("u", d + 1);
    let ext = ring.extend(&names)?;
    let fx = f.map_into(ext.full())?;
    let us = names.iter().map(|n| ext.base_var(n)).collect::<Result<Vec<_>>>()?;
    let g = MainVarView::from_coefficients(ext.full(), us)?.assemble();
    let product = ideal_product(&content(&ext, &fx)?, &content(&ext, &g)?)?;
    let fg = content(&ext, &ext.mul(&fx, &g))?;
    let verdict = |status, witness| GaussianVerdict { status, degree: d, witness, method: GaussianMethod::GenericCoefficients };
    if fg.contains(&product)? {
        return Ok(verdict(GaussianStatus::GaussianCertified, None));
    }
    Ok(match find_witness(ring, &f, d)? {
        Some(w) => verdict(GaussianStatus::NonGaussian, Some(w)),
        None => verdict(GaussianStatus::Inconclusive, None),
    })
}

/// Gaussian-ness on a claimed domain, where it is equivalent to invertibility of the content.
pub fn gaussian_status_domain(ring: &Arc<RingSpec>, f: &Polynomial) -> Result<GaussianVerdict> {
    if !ring.is_claimed_domain() {
        return Err(Error::unsupported(format!("{ring} is not flagged as a domain")));
    }
    let f = require_nonzero(ring, f, "f")?;
    let deg = coefficients(ring, &f)?.len() - 1;
    let c = content(ring, &f)?;
    let certified = |method| GaussianVerdict { status: GaussianStatus::GaussianCertified, degree: deg, witness: None, method };
    for a in c.reduced_generators() {
        if IdealHandle::principal(ring, a)?.contains(&c)? {
            return Ok(certified(GaussianMethod::PrincipalContent));
        }
    }
    if is_invertible(&c)?.invertible {
        return Ok(certified(GaussianMethod::Invertibility));
    }
    let witness = find_witness(ring, &f, deg)?;
    let status = if witness.is_some() { GaussianStatus::NonGaussian } else { GaussianStatus::Inconclusive };
    Ok(GaussianVerdict { status, degree: deg, witness, method: GaussianMethod::Invertibility })
}
