use std::sync::Arc;

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::groebner::{Colength, IdealHandle};
use crate::poly::Polynomial;
use crate::rings::arith::ideal_product;
use crate::rings::RingSpec;

/// A maximal ideal with residue field equal to the base field.
#[derive(Clone, Debug)]
pub struct LocalityWitness {
    maximal: IdealHandle,
}

impl LocalityWitness {
    /// Accepts `m` only if `R/m` is one-dimensional over the base field.
    pub fn new(m: IdealHandle) -> Result<Self> {
        match m.colength()? {
            Colength::Finite(1) => Ok(LocalityWitness { maximal: m }),
            other => Err(Error::invalid(format!(
                "{m} is not a rational maximal ideal (colength {other}, expected 1)"
            ))),
        }
    }

    /// The ideal of the point `var = value`, one entry per base variable.
    pub fn at_point(ring: &Arc<RingSpec>, coords: &[(&str, Coeff)]) -> Result<Self> {
        let gens = coords
            .iter()
            .map(|(v, c)| Ok(&ring.base_var(v)? - &Polynomial::constant(ring.base(), c.clone())))
            .collect::<Result<Vec<_>>>()?;
        LocalityWitness::new(IdealHandle::new(ring, gens)?)
    }

    pub fn ideal(&self) -> &IdealHandle {
        &self.maximal
    }
}

/// `ν(I)` at `M`: `dim_k I/MI = colength(MI) - colength(I)`.
pub fn min_generators_local(i: &IdealHandle, m: &LocalityWitness) -> Result<usize> {
    let m = m.ideal();
    if !m.contains(i)? {
        return Err(Error::unsupported(format!("precondition I ⊆ M fails: {i} ⊄ {m}")));
    }
    let ci = i.colength()?.finite().ok_or_else(|| {
        Error::unsupported(format!("precondition colength(I) < ∞ fails for I = {i}"))
    })?;
    let mi = ideal_product(m, i)?;
    let cmi = mi.colength()?.finite().ok_or_else(|| {
        Error::unsupported(format!("precondition colength(M·I) < ∞ fails for I = {i}"))
    })?;
    Ok(cmi - ci)
}

/// Size of an irredundant generating set obtained by dropping generators
/// greedily. An upper bound for every local `ν`; equal to it for homogeneous
/// ideals at the origin.
pub fn min_generators_greedy(i: &IdealHandle) -> Result<usize> {
    let mut gens = i.compact_generators()?;
    let mut k = 0;
    while k < gens.len() {
        let mut rest = gens.clone();
        rest.remove(k);
        if IdealHandle::new(i.ring(), rest.clone())?.equals(i)? {
            gens = rest;
        } else {
            k += 1;
        }
    }
    Ok(gens.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::poly::PolyRing;
    use crate::rings::{ideal_power, make_quotient};

    #[test]
    fn plane_origin() {
        let r = RingSpec::polynomial_ring(Field::Rational, &["x", "y"], true).unwrap();
        let zero = Field::Rational.zero();
        let m = LocalityWitness::at_point(&r, &[("x", zero.clone()), ("y", zero)]).unwrap();
        assert_eq!(min_generators_local(m.ideal(), &m).unwrap(), 2);
        for n in 1..=8 {
            let p = ideal_power(m.ideal(), n).unwrap();
            assert_eq!(min_generators_local(&p, &m).unwrap(), n as usize + 1, "n = {n}");
            if n <= 4 {
                assert_eq!(min_generators_greedy(&p).unwrap(), n as usize + 1);
            }
        }
    }

    #[test]
    fn circle_point_is_locally_principal() {
        let base = PolyRing::grevlex(Field::Rational, &["x", "y"]).unwrap();
        let x = Polynomial::var(&base, "x").unwrap();
        let y = Polynomial::var(&base, "y").unwrap();
        let one = Polynomial::one(&base);
        let r = make_quotient(&base, vec![&(&(&x * &x) + &(&y * &y)) - &one], true).unwrap();
        let i = IdealHandle::new(&r, vec![&one - &x, y]).unwrap();
        assert_eq!(IdealHandle::principal(&r, &one - &x).unwrap().colength().unwrap(), Colength::Finite(2));
        assert_eq!(i.colength().unwrap(), Colength::Finite(1));
        let m = LocalityWitness::new(i.clone()).unwrap();
        assert_eq!(min_generators_local(&i, &m).unwrap(), 1);
    }

    #[test]
    fn preconditions_reported() {
        let r = RingSpec::polynomial_ring(Field::Rational, &["x", "y"], true).unwrap();
        let (x, y) = (r.base_var("x").unwrap(), r.base_var("y").unwrap());
        let m = LocalityWitness::new(IdealHandle::new(&r, vec![x.clone(), y.clone()]).unwrap()).unwrap();
        let line = IdealHandle::principal(&r, x.clone()).unwrap();
        let err = min_generators_local(&line, &m).unwrap_err();
        assert!(matches!(&err, Error::Unsupported(msg) if msg.contains("colength(I)")));
        let off = IdealHandle::new(&r, vec![&x - &Polynomial::one(r.base()), y]).unwrap();
        assert!(matches!(min_generators_local(&off, &m), Err(Error::Unsupported(_))));
        assert!(LocalityWitness::new(line).is_err());
    }
}
