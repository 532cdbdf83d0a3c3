use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{lift, IdealHandle};
use crate::poly::Polynomial;
use crate::rings::arith::ideal_product;
use crate::rings::RingSpec;

/// `(1/d)·J` inside the fraction field of a domain.
#[derive(Clone, Debug)]
pub struct FractionalIdeal {
    denominator: Polynomial,
    numerator: IdealHandle,
}

fn require_domain(ring: &RingSpec) -> Result<()> {
    if ring.is_claimed_domain() {
        Ok(())
    } else {
        Err(Error::unsupported(format!(
            "{ring} is not flagged as a domain; fractional ideals need the `domain` flag"
        )))
    }
}

impl FractionalIdeal {
    pub fn new(denominator: Polynomial, numerator: IdealHandle) -> Result<Self> {
        let ring = numerator.ring().clone();
        require_domain(&ring)?;
        let denominator = ring.reduce(&denominator.map_into(ring.base())?);
        if denominator.is_zero() {
            return Err(Error::invalid("fractional ideal with zero denominator"));
        }
        Ok(FractionalIdeal { denominator, numerator })
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn numerator(&self) -> &IdealHandle {
        &self.numerator
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        self.numerator.ring()
    }

    /// Equality in the fraction field: `d'·J = d·J'`.
    pub fn equals(&self, other: &FractionalIdeal) -> Result<bool> {
        let lhs = ideal_product(&IdealHandle::principal(self.ring(), other.denominator.clone())?, &self.numerator)?;
        let rhs = ideal_product(&IdealHandle::principal(self.ring(), self.denominator.clone())?, &other.numerator)?;
        lhs.equals(&rhs)
    }
}

/// `(R : I) = (1/d)·((d) : I)` for the first generator `d` of `I` that is nonzero in `R`.
pub fn fractional_inverse(i: &IdealHandle) -> Result<FractionalIdeal> {
    require_domain(i.ring())?;
    let d = i
        .reduced_generators()
        .into_iter()
        .next()
        .ok_or_else(|| Error::invalid("the zero ideal has no inverse"))?;
    fractional_inverse_with(i, d)
}

/// `(R : I)` computed with a chosen nonzero `d ∈ I`.
pub fn fractional_inverse_with(i: &IdealHandle, d: Polynomial) -> Result<FractionalIdeal> {
    require_domain(i.ring())?;
    if i.is_zero() {
        return Err(Error::invalid("the zero ideal has no inverse"));
    }
    let principal = IdealHandle::principal(i.ring(), d.clone())?;
    FractionalIdeal::new(d, principal.colon(i)?)
}

/// One summand `cofactor · ideal_gen · inverse_gen` of a certificate.
#[derive(Clone, Debug, Serialize)]
pub struct CofactorTerm {
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub ideal_gen: Polynomial,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub inverse_gen: Polynomial,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub cofactor: Polynomial,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// `d ≡ Σ cofactor·a·b` modulo the relations, so `I·((d):I) = (d)`.
    Cofactors {
        #[serde(serialize_with = "crate::report::ser_poly")]
        denominator: Polynomial,
        terms: Vec<CofactorTerm>,
    },
    /// `I·((d):I)` and `(d)` have different reduced bases.
    Mismatch {
        #[serde(serialize_with = "crate::report::ser_polys")]
        product: Vec<Polynomial>,
        #[serde(serialize_with = "crate::report::ser_polys")]
        principal: Vec<Polynomial>,
    },
}

impl Certificate {
    /// Re-evaluates a cofactor certificate in `ring`.
    pub fn verify(&self, ring: &RingSpec) -> bool {
        match self {
            Certificate::Cofactors { denominator, terms } => {
                let sum = terms.iter().fold(Polynomial::zero(ring.base()), |acc, t| {
                    &acc + &(&(&t.cofactor * &t.ideal_gen) * &t.inverse_gen)
                });
                ring.is_zero(&(&sum - denominator))
            }
            Certificate::Mismatch { .. } => false,
        }
    }
}

#[derive(Clone, Debug)]
pub struct InvertibilityReport {
    pub invertible: bool,
    pub inverse: FractionalIdeal,
    pub certificate: Certificate,
}

/// Decides `I·(R:I) = R`, i.e. `I·((d):I) = (d)`, with a certificate either way.
pub fn is_invertible(i: &IdealHandle) -> Result<InvertibilityReport> {
    let inverse = fractional_inverse(i)?;
    let ring = i.ring().clone();
    let d = inverse.denominator().clone();
    let product = ideal_product(i, inverse.numerator())?;
    let principal = IdealHandle::principal(&ring, d.clone())?;
    if !product.equals(&principal)? {
        return Ok(InvertibilityReport {
            invertible: false,
            certificate: Certificate::Mismatch {
                product: product.groebner()?.generators().to_vec(),
                principal: principal.groebner()?.generators().to_vec(),
            },
            inverse,
        });
    }
    let a = i.reduced_generators();
    let b = inverse.numerator().reduced_generators();
    let pairs: Vec<(Polynomial, Polynomial)> =
        a.iter().flat_map(|x| b.iter().map(move |y| (x.clone(), y.clone()))).collect();
    let mut gens: Vec<Polynomial> = pairs.iter().map(|(x, y)| x * y).collect();
    gens.extend(ring.defining_generators().iter().cloned());
    let cofactors = lift(ring.base(), &gens, &d)?.ok_or_else(|| {
        Error::invalid("denominator not expressible in the product ideal despite equal bases")
    })?;
    let terms = pairs
        .into_iter()
        .zip(cofactors)
        .filter(|(_, c)| !c.is_zero())
        .map(|((x, y), c)| CofactorTerm { ideal_gen: x, inverse_gen: y, cofactor: c })
        .collect();
    Ok(InvertibilityReport { invertible: true, certificate: Certificate::Cofactors { denominator: d, terms }, inverse })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::poly::PolyRing;
    use crate::rings::make_quotient;

    fn circle() -> (Arc<RingSpec>, Polynomial, Polynomial) {
        let base = PolyRing::grevlex(Field::Rational, &["x", "y"]).unwrap();
        let x = Polynomial::var(&base, "x").unwrap();
        let y = Polynomial::var(&base, "y").unwrap();
        let one = Polynomial::one(&base);
        let r = make_quotient(&base, vec![&(&(&x * &x) + &(&y * &y)) - &one], true).unwrap();
        (r, x, y)
    }

    #[test]
    fn principal_ideal_is_invertible() {
        let r = RingSpec::polynomial_ring(Field::Rational, &["x", "y"], true).unwrap();
        let x = r.base_var("x").unwrap();
        let i = IdealHandle::principal(&r, x.clone()).unwrap();
        let inv = fractional_inverse(&i).unwrap();
        assert_eq!(inv.denominator(), &x);
        // ((x) : (x)) = R, so the inverse is (1/x)·R
        assert!(inv.numerator().is_unit().unwrap());
        let rep = is_invertible(&i).unwrap();
        assert!(rep.invertible);
        assert!(rep.certificate.verify(&r));
    }

    #[test]
    fn maximal_ideal_of_plane_is_not_invertible() {
        let r = RingSpec::polynomial_ring(Field::Rational, &["x", "y"], true).unwrap();
        let (x, y) = (r.base_var("x").unwrap(), r.base_var("y").unwrap());
        let i = IdealHandle::new(&r, vec![x.clone(), y]).unwrap();
        let inv = fractional_inverse(&i).unwrap();
        assert_eq!(inv.denominator(), &x);
        assert!(inv.numerator().equals(&IdealHandle::principal(&r, x).unwrap()).unwrap());
        let rep = is_invertible(&i).unwrap();
        assert!(!rep.invertible);
        assert!(matches!(rep.certificate, Certificate::Mismatch { .. }));
    }

    #[test]
    fn circle_point_ideal_is_invertible() {
        let (r, x, y) = circle();
        let one = Polynomial::one(r.base());
        let i = IdealHandle::new(&r, vec![&one - &x, y]).unwrap();
        let inv = fractional_inverse(&i).unwrap();
        assert_eq!(inv.denominator(), &(&one - &x));
        assert!(inv.numerator().equals(&i).unwrap());
        let rep = is_invertible(&i).unwrap();
        assert!(rep.invertible);
        assert!(rep.certificate.verify(&r));
    }

    #[test]
    fn inverse_independent_of_denominator() {
        let (r, x, y) = circle();
        let one = Polynomial::one(r.base());
        let i = IdealHandle::new(&r, vec![&one - &x, y.clone()]).unwrap();
        let a = fractional_inverse(&i).unwrap();
        let b = fractional_inverse_with(&i, y).unwrap();
        assert!(a.equals(&b).unwrap());
    }

    #[test]
    fn refuses_without_domain_flag_or_on_zero() {
        let r = RingSpec::polynomial_ring(Field::Rational, &["x"], false).unwrap();
        let i = IdealHandle::principal(&r, r.base_var("x").unwrap()).unwrap();
        assert!(matches!(fractional_inverse(&i), Err(Error::Unsupported(_))));
        let d = RingSpec::polynomial_ring(Field::Rational, &["x"], true).unwrap();
        assert!(matches!(fractional_inverse(&IdealHandle::zero(&d)), Err(Error::InvalidArgument(_))));
    }
}
