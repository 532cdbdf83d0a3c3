//! Content ideals of polynomials in the main variable and the checks built on them.

mod checks;
mod gaussian;
mod nu;

use std::sync::Arc;

use serde::Serialize;

pub use checks::{dedekind_mertens_check, power_substitution_check, DedekindMertens, PowerSubstitution};
pub use gaussian::{
    find_witness, gaussian_generic, gaussian_status_domain, GaussianMethod, GaussianStatus, GaussianVerdict, Witness,
};
pub use nu::{nu_sequence, squaring_track, NuSequence, NuStep, TrackStep};

use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::poly::{MainVarView, Polynomial};
use crate::rings::RingSpec;

/// `f` as a canonical element of `R[X]`.
pub fn canonical(ring: &RingSpec, f: &Polynomial) -> Result<Polynomial> {
    let f = f
        .map_into(ring.full())
        .map_err(|_| Error::invalid(format!("`{f}` is not a polynomial over {ring}")))?;
    Ok(ring.reduce(&f))
}

/// X-coefficients `c_0..c_n` of `f`, reduced modulo the relations.
pub fn coefficients(ring: &RingSpec, f: &Polynomial) -> Result<Vec<Polynomial>> {
    Ok(MainVarView::of(&canonical(ring, f)?)?.coefficients().to_vec())
}

/// Degree in `X` after reduction; `None` for zero.
pub fn degree(ring: &RingSpec, f: &Polynomial) -> Result<Option<usize>> {
    Ok(coefficients(ring, f)?.len().checked_sub(1))
}

/// `c(f)`: the ideal of the base ring generated by the X-coefficients. Zero for `f = 0`.
pub fn content(ring: &Arc<RingSpec>, f: &Polynomial) -> Result<IdealHandle> {
    let gens = coefficients(ring, f)?.into_iter().filter(|c| !c.is_zero()).collect();
    IdealHandle::new(ring, gens)
}

pub(crate) fn require_nonzero(ring: &RingSpec, f: &Polynomial, what: &str) -> Result<Polynomial> {
    let f = canonical(ring, f)?;
    if f.is_zero() {
        return Err(Error::invalid(format!("{what} must be nonzero in {ring}")));
    }
    Ok(f)
}

/// Comparison of `c(fg)` with `c(f)c(g)`.
#[derive(Clone, Debug, Serialize)]
pub struct ContentDefect {
    /// `c(fg) ⊆ c(f)c(g)`; always expected to hold.
    pub containment: bool,
    pub equal: bool,
    /// First product `a_i b_j` (i-major) outside `c(fg)`.
    #[serde(serialize_with = "crate::report::ser_opt_poly")]
    pub witness: Option<Polynomial>,
}

pub fn content_product_defect(ring: &Arc<RingSpec>, f: &Polynomial, g: &Polynomial) -> Result<ContentDefect> {
    let f = require_nonzero(ring, f, "f")?;
    let g = require_nonzero(ring, g, "g")?;
    let a: Vec<Polynomial> = coefficients(ring, &f)?.into_iter().filter(|c| !c.is_zero()).collect();
    let b: Vec<Polynomial> = coefficients(ring, &g)?.into_iter().filter(|c| !c.is_zero()).collect();
    let fg = content(ring, &ring.mul(&f, &g))?;
    let mut products = Vec::with_capacity(a.len() * b.len());
    let mut witness = None;
    for x in &a {
        for y in &b {
            let p = ring.mul(x, y);
            if witness.is_none() && !fg.is_member(&p)? {
                witness = Some(p.clone());
            }
            products.push(p);
        }
    }
    let containment = IdealHandle::new(ring, products)?.contains(&fg)?;
    Ok(ContentDefect { containment, equal: containment && witness.is_none(), witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::poly::PolyRing;
    use crate::rings::make_quotient;

    pub(crate) fn example1() -> Arc<RingSpec> {
        let base = PolyRing::grevlex(Field::prime(2).unwrap(), &["s", "t", "u", "v"]).unwrap();
        let v = |n| Polynomial::var(&base, n).unwrap();
        make_quotient(&base, vec![&v("s") * &v("s"), &v("s") * &v("t"), &v("t") * &v("t")], false).unwrap()
    }

    fn lin(ring: &RingSpec, a: &str, b: &str) -> Polynomial {
        &ring.full_var(a).unwrap() + &(&ring.full_var(b).unwrap() * &ring.main_var())
    }

    #[test]
    fn content_of_linear_form() {
        let r = example1();
        let c = content(&r, &lin(&r, "s", "t")).unwrap();
        let expected = IdealHandle::new(&r, vec![r.base_var("s").unwrap(), r.base_var("t").unwrap()]).unwrap();
        assert!(c.equals(&expected).unwrap());
        let k = Polynomial::from_i64(r.full(), 1);
        assert!(content(&r, &k).unwrap().is_unit().unwrap());
        assert!(content(&r, &Polynomial::zero(r.full())).unwrap().is_zero());
    }

    #[test]
    fn extension_defect_witness() {
        let r = example1();
        let d = content_product_defect(&r, &lin(&r, "s", "t"), &lin(&r, "u", "v")).unwrap();
        assert!(d.containment);
        assert!(!d.equal);
        assert_eq!(d.witness.unwrap().to_string(), "s*v");
        let one = Polynomial::one(r.full());
        assert!(content_product_defect(&r, &lin(&r, "s", "t"), &one).unwrap().equal);
    }

    #[test]
    fn reduced_ring_defect() {
        let base = PolyRing::grevlex(Field::Rational, &["s", "t"]).unwrap();
        let st = &Polynomial::var(&base, "s").unwrap() * &Polynomial::var(&base, "t").unwrap();
        let r = make_quotient(&base, vec![st], false).unwrap();
        let d = content_product_defect(&r, &lin(&r, "s", "t"), &lin(&r, "t", "s")).unwrap();
        assert!(d.containment && !d.equal);
        assert_eq!(d.witness.unwrap().to_string(), "s^2");
    }

    #[test]
    fn rejects_zero_and_foreign_input() {
        let r = example1();
        let z = Polynomial::zero(r.full());
        assert!(content_product_defect(&r, &z, &lin(&r, "s", "t")).is_err());
        let other = PolyRing::grevlex(Field::Rational, &["w"]).unwrap();
        assert!(content(&r, &Polynomial::var(&other, "w").unwrap()).is_err());
    }
}
