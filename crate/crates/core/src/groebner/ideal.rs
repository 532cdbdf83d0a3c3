use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::basis::GroebnerBasis;
use crate::groebner::cache::cached_groebner;
use crate::poly::{Monomial, MonomialOrder, OrderKind, PolyRing, Polynomial};
use crate::rings::RingSpec;

/// `dim_k R/I`, or infinite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Colength {
    Finite(usize),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<usize> {
        match self {
            Colength::Finite(n) => Some(n),
            Colength::Infinite => None,
        }
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => write!(f, "infinite"),
        }
    }
}

impl Serialize for Colength {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Colength::Finite(n) => s.serialize_u64(*n as u64),
            Colength::Infinite => s.serialize_str("infinite"),
        }
    }
}

/// An ideal of a [`RingSpec`], held through its preimage in the polynomial
/// ring: the Gröbner basis always includes the defining relations.
#[derive(Clone)]
pub struct IdealHandle {
    ring: Arc<RingSpec>,
    gens: Vec<Polynomial>,
    gb: Arc<OnceLock<Arc<GroebnerBasis>>>,
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealHandle{self}")
    }
}

impl fmt::Display for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.reduced_generators().iter().map(|g| g.to_string()).collect();
        if gens.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", gens.join(", "))
        }
    }
}

impl IdealHandle {
    /// The ideal generated by `gens`, which must be base-ring elements.
    pub fn new(ring: &Arc<RingSpec>, gens: Vec<Polynomial>) -> Result<Self> {
        let base = ring.base();
        let gens = gens
            .iter()
            .map(|g| {
                g.map_into(base).map_err(|_| {
                    Error::invalid(format!("ideal generator `{g}` is not an element of the base ring"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IdealHandle { ring: ring.clone(), gens, gb: Arc::new(OnceLock::new()) })
    }

    pub fn unit(ring: &Arc<RingSpec>) -> Self {
        IdealHandle::new(ring, vec![Polynomial::one(ring.base())]).unwrap()
    }

    pub fn zero(ring: &Arc<RingSpec>) -> Self {
        IdealHandle::new(ring, Vec::new()).unwrap()
    }

    pub fn principal(ring: &Arc<RingSpec>, p: Polynomial) -> Result<Self> {
        IdealHandle::new(ring, vec![p])
    }

    pub fn ring(&self) -> &Arc<RingSpec> {
        &self.ring
    }

    /// Generators as supplied.
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Supplied generators together with the defining relations.
    pub fn preimage_generators(&self) -> Vec<Polynomial> {
        let mut g = self.gens.clone();
        g.extend(self.ring.defining_generators().iter().cloned());
        g
    }

    /// Reduced Gröbner basis of the preimage ideal.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb.clone());
        }
        let mut gens = self.gens.clone();
        gens.extend(self.ring.defining_basis().generators().iter().cloned());
        let gb = cached_groebner(self.ring.base(), &gens)?;
        let _ = self.gb.set(gb.clone());
        Ok(gb)
    }

    /// Supplied generators reduced modulo the relations; zeros and repeats dropped.
    pub fn reduced_generators(&self) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = Vec::new();
        for g in &self.gens {
            let r = self.ring.reduce(g);
            if !r.is_zero() && !out.contains(&r) {
                out.push(r);
            }
        }
        out
    }

    /// Gröbner basis elements that are nonzero in the quotient, reduced modulo the relations.
    pub fn compact_generators(&self) -> Result<Vec<Polynomial>> {
        let gb = self.groebner()?;
        let mut out: Vec<Polynomial> = Vec::new();
        for g in gb.generators() {
            let r = self.ring.reduce(g);
            if !r.is_zero() && !out.contains(&r) {
                out.push(r);
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.reduced_generators().is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.groebner()?.is_unit())
    }

    pub(crate) fn check_ring(&self, other: &IdealHandle) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("ideals of {} and {}", self.ring, other.ring)))
        }
    }

    fn element(&self, f: &Polynomial) -> Result<Polynomial> {
        f.map_into(self.ring.base())
            .map_err(|_| Error::invalid(format!("`{f}` is not an element of the base ring")))
    }

    /// `f ∈ I`, decided by reduction to zero.
    pub fn is_member(&self, f: &Polynomial) -> Result<bool> {
        let f = self.element(f)?;
        Ok(self.groebner()?.contains(&f))
    }

    /// Canonical representative of `f` modulo `I`.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let f = self.element(f)?;
        Ok(self.groebner()?.normal_form(&f))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &IdealHandle) -> Result<bool> {
        self.check_ring(other)?;
        let gb = self.groebner()?;
        Ok(other.gens.iter().all(|g| gb.contains(g)))
    }

    /// Equality as ideals: identical reduced Gröbner bases.
    pub fn equals(&self, other: &IdealHandle) -> Result<bool> {
        self.check_ring(other)?;
        Ok(self.groebner()?.generators() == other.groebner()?.generators())
    }

    pub fn sum(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        IdealHandle::new(&self.ring, gens)
    }

    /// `I ∩ J` by eliminating a tag variable from `t I + (1 - t) J`.
    pub fn intersect(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_ring(other)?;
        let gens = intersect_raw(self.ring.base(), &self.preimage_generators(), &other.preimage_generators())?;
        IdealHandle::new(&self.ring, gens)
    }

    /// `(I : J) = { r : r J ⊆ I }`, intersecting `(I ∩ (g)) / g` over the generators `g` of `J`.
    pub fn colon(&self, other: &IdealHandle) -> Result<IdealHandle> {
        self.check_ring(other)?;
        let divisors = other.reduced_generators();
        if divisors.is_empty() {
            return Err(Error::invalid("colon by the zero ideal"));
        }
        let gens = colon_raw(self.ring.base(), &self.preimage_generators(), &divisors)?;
        IdealHandle::new(&self.ring, gens)
    }

    /// `f ∈ √I`, via `1 ∈ I + (1 - y f)` with a fresh variable `y`.
    pub fn radical_member(&self, f: &Polynomial) -> Result<bool> {
        let f = self.element(f)?;
        if self.is_member(&f)? {
            return Ok(true);
        }
        let base = self.ring.base();
        let y = base.fresh_name("y");
        let mut vars = base.vars().to_vec();
        vars.push(y.clone());
        let ext = PolyRing::new(base.field(), vars, base.order().extended())?;
        let mut gens = self
            .preimage_generators()
            .iter()
            .map(|g| g.map_into(&ext))
            .collect::<Result<Vec<_>>>()?;
        let yf = &Polynomial::var(&ext, &y)? * &f.map_into(&ext)?;
        gens.push(&Polynomial::one(&ext) - &yf);
        Ok(cached_groebner(&ext, &gens)?.is_unit())
    }

    /// Number of standard monomials of the preimage ideal, i.e. `dim_k R/I`.
    pub fn colength(&self) -> Result<Colength> {
        let gb = self.groebner()?;
        Ok(count_standard_monomials(self.ring.base().nvars(), gb.leading_monomials()))
    }
}

/// Counts monomials outside the ideal spanned by `leading`.
pub(crate) fn count_standard_monomials<'a>(nvars: usize, leading: impl Iterator<Item = &'a Monomial>) -> Colength {
    let leading: Vec<&Monomial> = leading.collect();
    if leading.iter().any(|m| m.is_one()) {
        return Colength::Finite(0);
    }
    let mut bounds = Vec::with_capacity(nvars);
    for v in 0..nvars {
        let pure = leading
            .iter()
            .filter(|m| (0..nvars).all(|w| w == v || m.exponent(w) == 0))
            .map(|m| m.exponent(v))
            .min();
        match pure {
            Some(b) => bounds.push(b),
            None => return Colength::Infinite,
        }
    }
    fn walk(v: usize, exps: &mut Vec<u32>, bounds: &[u32], leading: &[&Monomial]) -> usize {
        let divisible = |e: &[u32]| leading.iter().any(|m| m.exponents().iter().zip(e).all(|(a, b)| a <= b));
        if v == bounds.len() {
            return 1;
        }
        let mut total = 0;
        for e in 0..bounds[v] {
            exps[v] = e;
            if divisible(exps) {
                break;
            }
            total += walk(v + 1, exps, bounds, leading);
        }
        exps[v] = 0;
        total
    }
    let mut exps = vec![0u32; nvars];
    Colength::Finite(walk(0, &mut exps, &bounds, &leading))
}

/// Generators of `(a) ∩ (b)` in `ring`, no relations implied.
pub(crate) fn intersect_raw(ring: &Arc<PolyRing>, a: &[Polynomial], b: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let t = ring.fresh_name("t");
    let mut vars = vec![t.clone()];
    vars.extend(ring.vars().iter().cloned());
    let mut precedence = vec![0];
    precedence.extend(ring.order().precedence().iter().map(|p| p + 1));
    let order = MonomialOrder::new(OrderKind::Elimination(1), precedence)?;
    let tagged = PolyRing::new(ring.field(), vars, order)?;
    let tv = Polynomial::var(&tagged, &t)?;
    let one_minus_t = &Polynomial::one(&tagged) - &tv;
    let mut gens = Vec::with_capacity(a.len() + b.len());
    for g in a {
        gens.push(&tv * &g.map_into(&tagged)?);
    }
    for g in b {
        gens.push(&one_minus_t * &g.map_into(&tagged)?);
    }
    let gb = cached_groebner(&tagged, &gens)?;
    gb.generators()
        .iter()
        .filter(|g| !g.involves(0))
        .map(|g| g.map_into(ring))
        .collect()
}

/// Generators of `(a) : (divisors)` in `ring`.
pub(crate) fn colon_raw(ring: &Arc<PolyRing>, a: &[Polynomial], divisors: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut acc: Option<Vec<Polynomial>> = None;
    for g in divisors.iter().filter(|g| !g.is_zero()) {
        let meet = intersect_raw(ring, a, std::slice::from_ref(g))?;
        let quotients: Vec<Polynomial> = meet
            .iter()
            .map(|p| p.div_exact(g).expect("elements of (g) are divisible by g"))
            .collect();
        acc = Some(match acc {
            None => quotients,
            Some(prev) => intersect_raw(ring, &prev, &quotients)?,
        });
    }
    acc.ok_or_else(|| Error::invalid("colon by the zero ideal"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;

    fn qq(vars: &[&str]) -> Arc<RingSpec> {
        RingSpec::polynomial_ring(Field::Rational, vars, true).unwrap()
    }

    fn ideal(r: &Arc<RingSpec>, gens: &[&Polynomial]) -> IdealHandle {
        IdealHandle::new(r, gens.iter().map(|g| (*g).clone()).collect()).unwrap()
    }

    #[test]
    fn membership_examples() {
        let r = qq(&["s", "t"]);
        let (s, t) = (r.base_var("s").unwrap(), r.base_var("t").unwrap());
        let i = ideal(&r, &[&(&s * &t), &(&(&s * &s) + &(&t * &t))]);
        assert!(!i.is_member(&(&s * &s)).unwrap());
        assert!(i.is_member(&(&s * &t)).unwrap());
        let j = ideal(&r, &[&(&(&s * &s) + &(&t * &t)), &(&s * &t)]);
        assert!(j.is_member(&(&s * &t)).unwrap());
    }

    #[test]
    fn equality_examples() {
        let r = qq(&["x", "y"]);
        let (x, y) = (r.base_var("x").unwrap(), r.base_var("y").unwrap());
        assert!(ideal(&r, &[&x, &y]).equals(&ideal(&r, &[&y, &(&x + &y)])).unwrap());
        assert!(!ideal(&r, &[&x]).equals(&ideal(&r, &[&(&x * &x)])).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let r = qq(&["x", "y"]);
        let (x, y) = (r.base_var("x").unwrap(), r.base_var("y").unwrap());
        let xy = &x * &y;
        assert!(ideal(&r, &[&x]).intersect(&ideal(&r, &[&y])).unwrap().equals(&ideal(&r, &[&xy])).unwrap());
        let i = ideal(&r, &[&x, &(&y * &y)]);
        assert!(i.intersect(&i).unwrap().equals(&i).unwrap());
        assert!(ideal(&r, &[&x]).intersect(&ideal(&r, &[&x, &y])).unwrap().equals(&ideal(&r, &[&x])).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = qq(&["x", "y"]);
        let (x, y) = (r.base_var("x").unwrap(), r.base_var("y").unwrap());
        let i = ideal(&r, &[&(&x * &x), &(&x * &y)]);
        assert!(i.colon(&ideal(&r, &[&x])).unwrap().equals(&ideal(&r, &[&x, &y])).unwrap());
        assert!(i.colon(&IdealHandle::unit(&r)).unwrap().equals(&i).unwrap());
        let p = ideal(&r, &[&(&x * &y)]);
        assert!(p.colon(&ideal(&r, &[&x])).unwrap().equals(&ideal(&r, &[&y])).unwrap());
        assert!(matches!(i.colon(&IdealHandle::zero(&r)), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn radical_examples() {
        let r = qq(&["x", "y"]);
        let (x, y) = (r.base_var("x").unwrap(), r.base_var("y").unwrap());
        let i = ideal(&r, &[&(&x * &x)]);
        assert!(i.radical_member(&x).unwrap());
        assert!(!i.radical_member(&y).unwrap());
        let j = ideal(&r, &[&(&(&x * &x) * &y), &(&y * &y)]);
        assert!(j.radical_member(&y).unwrap());
        assert!(!j.radical_member(&x).unwrap());
    }

    #[test]
    fn colength_examples() {
        let r = qq(&["x", "y"]);
        let (x, y) = (r.base_var("x").unwrap(), r.base_var("y").unwrap());
        assert_eq!(ideal(&r, &[&x, &y]).colength().unwrap(), Colength::Finite(1));
        let sq = ideal(&r, &[&(&x * &x), &(&x * &y), &(&y * &y)]);
        assert_eq!(sq.colength().unwrap(), Colength::Finite(3));
        assert_eq!(ideal(&r, &[&x]).colength().unwrap(), Colength::Infinite);
        assert_eq!(IdealHandle::unit(&r).colength().unwrap(), Colength::Finite(0));
    }

    #[test]
    fn quotient_ideals_include_relations() {
        let base = PolyRing::grevlex(Field::Rational, &["s", "t"]).unwrap();
        let s = Polynomial::var(&base, "s").unwrap();
        let t = Polynomial::var(&base, "t").unwrap();
        let r = crate::rings::make_quotient(&base, vec![&s * &t], false).unwrap();
        let i = ideal(&r, &[&s]);
        assert!(i.is_member(&(&s * &t)).unwrap());
        // (0 : s) = (t) in k[s,t]/(st)
        let ann = IdealHandle::zero(&r).colon(&i).unwrap();
        assert!(ann.equals(&ideal(&r, &[&t])).unwrap());
        assert!(i.is_zero() == false && IdealHandle::new(&r, vec![&s * &t]).unwrap().is_zero());
    }

    #[test]
    fn generators_must_avoid_main_variable() {
        let r = qq(&["x"]);
        let bad = r.main_var();
        assert!(IdealHandle::new(&r, vec![bad]).is_err());
    }
}
