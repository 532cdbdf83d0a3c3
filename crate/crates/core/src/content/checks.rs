use std::sync::Arc;

use serde::Serialize;

use crate::content::{coefficients, content, gaussian_status_domain, require_nonzero};
use crate::error::{Error, Result};
use crate::poly::{substitute_power, Polynomial};
use crate::rings::{ideal_power, ideal_product, RingSpec};

#[derive(Clone, Debug, Serialize)]
pub struct DedekindMertens {
    /// `deg g`
    pub m: usize,
    /// `c(f)^(m+1) c(g) = c(f)^m c(fg)`
    pub exponent_identity: bool,
    /// `c(f)c(g) ⊆ √c(fg)`
    pub radical_forward: bool,
    /// `c(fg) ⊆ √(c(f)c(g))`
    pub radical_backward: bool,
}

impl DedekindMertens {
    pub fn holds(&self) -> bool {
        self.exponent_identity && self.radical_forward && self.radical_backward
    }
}

pub fn dedekind_mertens_check(ring: &Arc<RingSpec>, f: &Polynomial, g: &Polynomial) -> Result<DedekindMertens> {
    let f = require_nonzero(ring, f, "f")?;
    let g = require_nonzero(ring, g, "g")?;
    let m = coefficients(ring, &g)?.len() - 1;
    let cf = content(ring, &f)?;
    let cg = content(ring, &g)?;
    let fg = content(ring, &ring.mul(&f, &g))?;
    let m32 = u32::try_from(m).map_err(|_| Error::invalid("degree too large"))?;
    let lhs = ideal_product(&ideal_power(&cf, m32 + 1)?, &cg)?;
    let rhs = ideal_product(&ideal_power(&cf, m32)?, &fg)?;
    let product = ideal_product(&cf, &cg)?;
    let mut radical_forward = true;
    for p in product.reduced_generators() {
        if !fg.radical_member(&p)? {
            radical_forward = false;
            break;
        }
    }
    let mut radical_backward = true;
    for p in fg.reduced_generators() {
        if !product.radical_member(&p)? {
            radical_backward = false;
            break;
        }
    }
    Ok(DedekindMertens { m, exponent_identity: lhs.equals(&rhs)?, radical_forward, radical_backward })
}


#[derive(Clone, Debug, Serialize)]
pub struct PowerSubstitution {
    pub n: usize,
    /// Per sample: `c(f(X^n) g(X^n)) = c(f g)`.
    pub identity: Vec<bool>,
    /// Per sample, when `f` is certified Gaussian on a domain: `c(f(X^n) g) = c(f(X^n)) c(g)`.
    pub multiplicative: Option<Vec<bool>>,
}

impl PowerSubstitution {
    pub fn holds(&self) -> bool {
        self.identity.iter().all(|&b| b) && self.multiplicative.as_ref().map_or(true, |v| v.iter().all(|&b| b))
    }
}

pub fn power_substitution_check(
    ring: &Arc<RingSpec>,
    f: &Polynomial,
    n: usize,
    samples: &[Polynomial],
) -> Result<PowerSubstitution> {
    let f = require_nonzero(ring, f, "f")?;
    let fn_ = substitute_power(&f, n)?;
    let mut identity = Vec::with_capacity(samples.len());
    for g in samples {
        let g = require_nonzero(ring, g, "sample")?;
        let lhs = content(ring, &ring.mul(&fn_, &substitute_power(&g, n)?))?;
        let rhs = content(ring, &ring.mul(&f, &g))?;
        identity.push(lhs.equals(&rhs)?);
    }
    let multiplicative = if ring.is_claimed_domain() && gaussian_status_domain(ring, &f)?.is_certified() {
        let cfn = content(ring, &fn_)?;
        let mut out = Vec::with_capacity(samples.len());
        for g in samples {
            let g = require_nonzero(ring, g, "sample")?;
            let lhs = content(ring, &ring.mul(&fn_, &g))?;
            out.push(lhs.equals(&ideal_product(&cfn, &content(ring, &g)?)?)?);
        }
        Some(out)
    } else {
        None
    };
    Ok(PowerSubstitution { n, identity, multiplicative })
}
