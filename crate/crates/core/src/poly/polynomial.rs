use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeff::{Coeff, Field};
use crate::error::{Error, Result};
use crate::poly::monomial::{Monomial, MonomialOrder};

/// Name of the distinguished indeterminate of every content computation.
pub const MAIN_VAR: &str = "X";

/// A polynomial ring `field[vars]` with a fixed monomial order.
///
/// When the ring carries a main variable it is the last variable, and
/// `coefficient_ring` is the ring on the remaining variables.
#[derive(Debug)]
pub struct PolyRing {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
    coefficient_ring: Option<Arc<PolyRing>>,
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.field == other.field
                && self.vars == other.vars
                && self.order == other.order
                && self.coefficient_ring.is_some() == other.coefficient_ring.is_some())
    }
}

impl Eq for PolyRing {}

impl PolyRing {
    pub fn new(field: Field, vars: Vec<String>, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        if order.nvars() != vars.len() {
            return Err(Error::invalid("monomial order and variable list differ in length"));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::invalid(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Arc::new(PolyRing { field, vars, order, coefficient_ring: None }))
    }

    /// `field[vars]` under grevlex with the listed variables in decreasing precedence.
    pub fn grevlex(field: Field, vars: &[&str]) -> Result<Arc<PolyRing>> {
        PolyRing::new(field, vars.iter().map(|s| s.to_string()).collect(), MonomialOrder::grevlex(vars.len()))
    }

    /// `base[X]`, with `X` ranked below every base variable.
    pub fn with_main_var(base: &Arc<PolyRing>) -> Result<Arc<PolyRing>> {
        if base.vars.iter().any(|v| v == MAIN_VAR) {
            return Err(Error::invalid(format!("`{MAIN_VAR}` is reserved for the main variable")));
        }
        let mut vars = base.vars.clone();
        vars.push(MAIN_VAR.to_string());
        Ok(Arc::new(PolyRing {
            field: base.field,
            vars,
            order: base.order.extended(),
            coefficient_ring: Some(base.clone()),
        }))
    }

    /// The same variables and field under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Arc<PolyRing>> {
        PolyRing::new(self.field, self.vars.clone(), order)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Index of the main variable, when the ring has one.
    pub fn main_var(&self) -> Option<usize> {
        self.coefficient_ring.as_ref().map(|_| self.vars.len() - 1)
    }

    pub fn coefficient_ring(&self) -> Option<&Arc<PolyRing>> {
        self.coefficient_ring.as_ref()
    }

    /// A variable name not already used by the ring, built from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut name = stem.to_string();
        while self.vars.contains(&name) {
            name.insert(0, '_');
        }
        name
    }
}

pub type Term = (Monomial, Coeff);

/// A sparse polynomial; terms are stored in strictly decreasing monomial
/// order and never carry a zero coefficient.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Polynomial::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<PolyRing>, c: Coeff) -> Self {
        Polynomial::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &Arc<PolyRing>, n: i64) -> Self {
        Polynomial::constant(ring, ring.field.from_i64(n))
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: Coeff) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Arc<PolyRing>, name: &str) -> Result<Self> {
        let i = ring
            .var_index(name)
            .ok_or_else(|| Error::invalid(format!("unknown variable `{name}`")))?;
        Ok(Polynomial::var_at(ring, i))
    }

    pub fn var_at(ring: &Arc<PolyRing>, index: usize) -> Self {
        Polynomial::term(ring, Monomial::variable(ring.nvars(), index, 1), ring.field.one())
    }

    /// Collects like terms, drops zeros and sorts.
    pub fn from_terms(ring: &Arc<PolyRing>, terms: impl IntoIterator<Item = Term>) -> Self {
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), ring.nvars());
            match acc.get_mut(&m) {
                Some(e) => *e = &*e + &c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ring.order.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Wraps terms already sorted in decreasing order with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &Arc<PolyRing>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn div_exact(&self, g: &Polynomial) -> Option<Polynomial> {
        self.assert_same_ring(g);
        let (lm, lc) = g.leading_term()?;
        let inv = lc.inverse().ok()?;
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.leading_term() {
            let q = m.div(lm)?;
            let k = c * &inv;
            rest = rest.sub_mul_term(&k, &q, g);
            quotient.push((q, k));
        }
        Some(Polynomial::from_sorted_terms(&self.ring, quotient))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of `m`, zero when absent.
    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exponent(var) > 0)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// `self * c * m`; the order is multiplicative so the term order survives.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Self {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    /// `self - c * m * g` in one merge pass.
    pub fn sub_mul_term(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Self {
        let neg = -c;
        let scaled = g.terms.iter().map(|(t, a)| (t.mul(m), a * &neg));
        self.merge(scaled)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(c) if !c.is_one() => self.scale(&c.inverse().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Polynomial::one(&self.ring);
        for _ in 0..n {
            result = &result * self;
        }
        result
    }

    /// Reinterprets the polynomial in `target`, matching variables by name.
    pub fn map_into(&self, target: &Arc<PolyRing>) -> Result<Polynomial> {
        if self.ring.field != target.field {
            return Err(Error::RingMismatch(format!(
                "coefficient fields {} and {} differ",
                self.ring.field, target.field
            )));
        }
        if Arc::ptr_eq(&self.ring, target) || *self.ring == **target {
            return Ok(Polynomial { ring: target.clone(), terms: self.terms.clone() });
        }
        let mut slots = Vec::with_capacity(self.ring.nvars());
        for (i, v) in self.ring.vars.iter().enumerate() {
            let slot = target.var_index(v);
            if slot.is_none() && self.involves(i) {
                return Err(Error::RingMismatch(format!("variable `{v}` is not in the target ring")));
            }
            slots.push(slot);
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; target.nvars()];
            for (i, slot) in slots.iter().enumerate() {
                if let Some(j) = slot {
                    e[*j] = m.exponent(i);
                }
            }
            (Monomial::from_exponents(e), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    fn merge(&self, other: impl Iterator<Item = Term>) -> Self {
        let order = &self.ring.order;
        let mut out = Vec::with_capacity(self.terms.len());
        let mut a = self.terms.iter().cloned().peekable();
        let mut b = other.peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => break,
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = &x + &y;
                    if !s.is_zero() {
                        out.push((m, s));
                    }
                }
            }
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            self.ring == other.ring,
            "polynomial ring mismatch: [{}] vs [{}]",
            self.ring.vars.join(","),
            other.ring.vars.join(",")
        );
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        self.merge(rhs.terms.iter().cloned())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        self.merge(rhs.terms.iter().map(|(m, c)| (m.clone(), -c)))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return rhs.mul_term(m, c);
        }
        if rhs.terms.len() == 1 {
            let (m, c) = &rhs.terms[0];
            return self.mul_term(m, c);
        }
        let products = self
            .terms
            .iter()
            .flat_map(|(m, c)| rhs.terms.iter().map(move |(n, d)| (m.mul(n), c * d)));
        Polynomial::from_terms(&self.ring, products)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked ring arithmetic: rejects operands from different rings.
pub fn poly_arith(f: &Polynomial, g: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    if f.ring != g.ring {
        return Err(Error::invalid(format!(
            "operands live in different rings: [{}] vs [{}]",
            f.ring.vars.join(","),
            g.ring.vars.join(",")
        )));
    }
    Ok(match op {
        ArithOp::Add => f + g,
        ArithOp::Sub => f - g,
        ArithOp::Mul => f * g,
    })
}

fn write_term(out: &mut String, vars: &[String], m: &Monomial, c: &Coeff) {
    let mut factors = Vec::new();
    for (v, &e) in vars.iter().zip(m.exponents()) {
        match e {
            0 => {}
            1 => factors.push(v.clone()),
            _ => factors.push(format!("{v}^{e}")),
        }
    }
    if factors.is_empty() {
        out.push_str(&c.to_string());
        return;
    }
    if c.is_one() {
    } else if (-c).is_one() {
        out.push('-');
    } else {
        out.push_str(&c.to_string());
        out.push('*');
    }
    out.push_str(&factors.join("*"));
}

impl fmt::Display for Polynomial {
    /// Canonical text: terms in descending order, main-variable degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<&Term> = self.terms.iter().collect();
        if let Some(x) = self.ring.main_var() {
            terms.sort_by(|a, b| {
                b.0.exponent(x).cmp(&a.0.exponent(x)).then_with(|| self.ring.order.cmp(&b.0, &a.0))
            });
        }
        let mut out = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mut t = String::new();
            write_term(&mut t, &self.ring.vars, m, c);
            if i == 0 {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::grevlex(Field::Rational, &["s", "t", "u", "v"]).unwrap()
    }

    #[test]
    fn product_of_linear_forms() {
        let base = ring();
        let r = PolyRing::with_main_var(&base).unwrap();
        let v = |n| Polynomial::var(&r, n).unwrap();
        let f = &v("s") + &(&v("t") * &v("X"));
        let g = &v("u") + &(&v("v") * &v("X"));
        assert_eq!((&f * &g).to_string(), "t*v*X^2 + t*u*X + s*v*X + s*u");
        assert_eq!(&f * &Polynomial::one(&r), f);
    }

    #[test]
    fn square_in_characteristic_two() {
        let base = PolyRing::grevlex(Field::prime(2).unwrap(), &["s", "t"]).unwrap();
        let r = PolyRing::with_main_var(&base).unwrap();
        let f = &Polynomial::var(&r, "s").unwrap() + &(&Polynomial::var(&r, "t").unwrap() * &Polynomial::var(&r, "X").unwrap());
        assert_eq!((&f * &f).to_string(), "t^2*X^2 + s^2");
    }

    #[test]
    fn checked_arith_rejects_foreign_ring() {
        let a = Polynomial::var(&ring(), "s").unwrap();
        let other = PolyRing::grevlex(Field::Rational, &["s"]).unwrap();
        let b = Polynomial::var(&other, "s").unwrap();
        assert!(matches!(poly_arith(&a, &b, ArithOp::Add), Err(Error::InvalidArgument(_))));
        assert!(poly_arith(&a, &a, ArithOp::Sub).unwrap().is_zero());
    }

    #[test]
    fn map_into_matches_names() {
        let small = PolyRing::grevlex(Field::Rational, &["t", "s"]).unwrap();
        let p = &Polynomial::var(&small, "t").unwrap() * &Polynomial::var(&small, "s").unwrap();
        let q = p.map_into(&ring()).unwrap();
        assert_eq!(q.to_string(), "s*t");
        let tiny = PolyRing::grevlex(Field::Rational, &["s"]).unwrap();
        assert!(p.map_into(&tiny).is_err());
    }

    #[test]
    fn printing_signs_and_fractions() {
        let r = PolyRing::grevlex(Field::Rational, &["x", "y"]).unwrap();
        let x = Polynomial::var(&r, "x").unwrap();
        let y = Polynomial::var(&r, "y").unwrap();
        let half = Field::Rational.from_ratio(&1.into(), &2.into()).unwrap();
        let p = &(&(&x * &x) * &y).scale(&half) - &Polynomial::from_i64(&r, 3);
        assert_eq!(p.to_string(), "1/2*x^2*y - 3");
        assert_eq!((-&x).to_string(), "-x");
        assert_eq!(Polynomial::zero(&r).to_string(), "0");
    }
}
