use std::fmt;
use std::sync::Arc;

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GroebnerBasis, IdealHandle};
use crate::poly::{PolyRing, Polynomial, MAIN_VAR};

/// A finitely presented ring `field[vars]/J`, together with the polynomial
/// ring `(field[vars]/J)[X]` used for content computations.
#[derive(Debug)]
pub struct RingSpec {
    base: Arc<PolyRing>,
    full: Arc<PolyRing>,
    defining_gens: Vec<Polynomial>,
    defining: GroebnerBasis,
    defining_full: GroebnerBasis,
    claimed_domain: bool,
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.base == other.base
                && self.defining == other.defining
                && self.claimed_domain == other.claimed_domain)
    }
}

/// Builds `base/(gens)`. Fails with [`Error::TrivialRing`] when the ideal contains a unit.
pub fn make_quotient(base: &Arc<PolyRing>, gens: Vec<Polynomial>, claimed_domain: bool) -> Result<Arc<RingSpec>> {
    let full = PolyRing::with_main_var(base)?;
    let gens = gens.iter().map(|g| g.map_into(base)).collect::<Result<Vec<_>>>()?;
    let defining = buchberger(base, &gens)?;
    if defining.is_unit() {
        return Err(Error::TrivialRing);
    }
    let defining_full = defining.rebased(&full)?;
    let defining_gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
    Ok(Arc::new(RingSpec { base: base.clone(), full, defining_gens, defining, defining_full, claimed_domain }))
}

impl RingSpec {
    /// The polynomial ring `field[vars]` (no relations), grevlex.
    pub fn polynomial_ring(field: Field, vars: &[&str], claimed_domain: bool) -> Result<Arc<RingSpec>> {
        make_quotient(&PolyRing::grevlex(field, vars)?, Vec::new(), claimed_domain)
    }

    pub fn field(&self) -> Field {
        self.base.field()
    }

    /// Ring of base elements (content coefficients live here).
    pub fn base(&self) -> &Arc<PolyRing> {
        &self.base
    }

    /// The base ring with the main variable adjoined.
    pub fn full(&self) -> &Arc<PolyRing> {
        &self.full
    }

    pub fn base_vars(&self) -> &[String] {
        self.base.vars()
    }

    pub fn defining_generators(&self) -> &[Polynomial] {
        &self.defining_gens
    }

    /// Reduced Gröbner basis of the defining ideal, in the base ring.
    pub fn defining_basis(&self) -> &GroebnerBasis {
        &self.defining
    }

    pub fn is_claimed_domain(&self) -> bool {
        self.claimed_domain
    }

    pub fn is_free(&self) -> bool {
        self.defining.is_empty()
    }

    /// Canonical representative modulo the defining ideal, for base or full-ring elements.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        if self.defining.is_empty() {
            return p.clone();
        }
        if **p.ring() == *self.full {
            self.defining_full.normal_form(p)
        } else {
            self.defining.normal_form(p)
        }
    }

    pub fn is_zero(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Product in the quotient (base or full ring).
    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.reduce(&(a * b))
    }

    /// Parses-free helpers for tests and catalogs.
    pub fn base_var(&self, name: &str) -> Result<Polynomial> {
        Polynomial::var(&self.base, name)
    }

    pub fn full_var(&self, name: &str) -> Result<Polynomial> {
        Polynomial::var(&self.full, name)
    }

    /// The main variable `X` as an element of the full ring.
    pub fn main_var(&self) -> Polynomial {
        Polynomial::var(&self.full, MAIN_VAR).expect("full ring carries X")
    }

    /// Lifts a base element into the full ring.
    pub fn embed(&self, p: &Polynomial) -> Result<Polynomial> {
        p.map_into(&self.full)
    }

    /// The ring with extra base variables appended (after the existing ones, before `X`).
    pub fn extend(&self, names: &[String]) -> Result<Arc<RingSpec>> {
        let mut vars = self.base.vars().to_vec();
        vars.extend(names.iter().cloned());
        let base = PolyRing::new(self.field(), vars, self.base.order().clone().extended_by(names.len()))?;
        make_quotient(&base, self.defining_gens.clone(), self.claimed_domain)
    }

    /// Fresh variable names `stem0..stem{n-1}`, avoiding clashes with existing names.
    pub fn fresh_names(&self, stem: &str, n: usize) -> Vec<String> {
        let mut names: Vec<String> = Vec::with_capacity(n);
        for i in 0..n {
            let mut name = format!("{stem}{i}");
            while self.full.vars().contains(&name) || names.contains(&name) {
                name.insert(0, '_');
            }
            names.push(name);
        }
        names
    }

    pub fn ideal(self: &Arc<Self>, gens: Vec<Polynomial>) -> Result<IdealHandle> {
        IdealHandle::new(self, gens)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field(), self.base.vars().join(","))?;
        if !self.defining_gens.is_empty() {
            let gens: Vec<String> = self.defining_gens.iter().map(|g| g.to_string()).collect();
            write!(f, "/({})", gens.join(", "))?;
        }
        if self.claimed_domain {
            write!(f, " domain")?;
        }
        Ok(())
    }
}
