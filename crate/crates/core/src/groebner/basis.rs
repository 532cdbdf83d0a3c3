use std::cmp::Ordering;
use std::collections::HashSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::{Monomial, PolyRing, Polynomial};

/// Environment variable overriding [`GbLimits::max_generators`].
pub const ENV_MAX_GENERATORS: &str = "GAUSSCHECK_MAX_GENERATORS";
/// Environment variable overriding [`GbLimits::max_terms`].
pub const ENV_MAX_TERMS: &str = "GAUSSCHECK_MAX_TERMS";

/// Budget for a single Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GbLimits {
    pub max_generators: usize,
    pub max_terms: usize,
}

impl Default for GbLimits {
    fn default() -> Self {
        GbLimits { max_generators: 10_000, max_terms: 1_000_000 }
    }
}

impl GbLimits {
    /// Defaults, overridden by [`ENV_MAX_GENERATORS`] and [`ENV_MAX_TERMS`] when set.
    pub fn from_env() -> Self {
        let read = |key: &str, default: usize| {
            std::env::var(key).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(default)
        };
        let d = GbLimits::default();
        GbLimits {
            max_generators: read(ENV_MAX_GENERATORS, d.max_generators),
            max_terms: read(ENV_MAX_TERMS, d.max_terms),
        }
    }
}

/// A Gröbner basis of an ideal of `ring` with respect to the ring's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    generators: Vec<Polynomial>,
    reduced: bool,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The basis of the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.generators.iter().filter_map(|g| g.leading_monomial())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.generators)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Re-checks Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn s_pairs_reduce_to_zero(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| (i + 1..g.len()).all(|j| normal_form(&s_polynomial(&g[i], &g[j]), g).is_zero()))
    }

    /// Interprets the generators in another ring with the same variables and order.
    pub(crate) fn rebased(&self, ring: &Arc<PolyRing>) -> Result<GroebnerBasis> {
        let generators = self.generators.iter().map(|g| g.map_into(ring)).collect::<Result<_>>()?;
        Ok(GroebnerBasis { ring: ring.clone(), generators, reduced: self.reduced })
    }
}

/// Fully reduces `f` by `basis`: no term of the result is divisible by a
/// leading monomial of `basis`.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ring = f.ring().clone();
    let mut p = f.clone();
    let mut remainder = Vec::new();
    while let Some((m, c)) = p.leading_term().cloned() {
        let divisor = basis.iter().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match divisor {
            Some(g) => {
                let (lm, lc) = g.leading_term().unwrap();
                let q = m.div(lm).unwrap();
                let k = &c * &lc.inverse().expect("nonzero leading coefficient");
                p = p.sub_mul_term(&k, &q, g);
            }
            None => {
                p = Polynomial::from_sorted_terms(&ring, p.terms()[1..].to_vec());
                remainder.push((m, c));
            }
        }
    }
    Polynomial::from_sorted_terms(&ring, remainder)
}

pub(crate) fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading_term().expect("nonzero");
    let (gm, gc) = g.leading_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&l.div(fm).unwrap(), &fc.inverse().unwrap());
    let b = g.mul_term(&l.div(gm).unwrap(), &gc.inverse().unwrap());
    &a - &b
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens`, under `ring`'s order.
///
/// Generators are mapped into `ring` by variable name, so passing a ring with
/// the same variables and another order recomputes under that order.
pub fn buchberger(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    buchberger_with_limits(ring, gens, GbLimits::from_env())
}

pub fn buchberger_with_limits(ring: &Arc<PolyRing>, gens: &[Polynomial], limits: GbLimits) -> Result<GroebnerBasis> {
    let order = ring.order().clone();
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut total_terms = 0usize;

    let mut add = |h: Polynomial, basis: &mut Vec<Polynomial>, pairs: &mut Vec<Pair>, pending: &mut HashSet<(usize, usize)>| -> Result<bool> {
        let h = h.monic();
        if h.is_constant() {
            basis.clear();
            basis.push(h);
            return Ok(true);
        }
        let k = basis.len();
        let hm = h.leading_monomial().unwrap().clone();
        for (i, g) in basis.iter().enumerate() {
            let lcm = g.leading_monomial().unwrap().lcm(&hm);
            pairs.push(Pair { i, j: k, lcm });
            pending.insert((i, k));
        }
        total_terms += h.len();
        basis.push(h);
        if basis.len() > limits.max_generators {
            return Err(Error::ResourceLimit { what: "Groebner basis generators", value: basis.len(), limit: limits.max_generators });
        }
        if total_terms > limits.max_terms {
            return Err(Error::ResourceLimit { what: "Groebner basis terms", value: total_terms, limit: limits.max_terms });
        }
        Ok(false)
    };

    for g in gens {
        let g = normal_form(&g.map_into(ring)?, &basis);
        if !g.is_zero() && add(g, &mut basis, &mut pairs, &mut pending)? {
            return Ok(unit_basis(ring));
        }
    }

    while !pairs.is_empty() {
        // Normal strategy: smallest lcm first.
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.lcm
                    .degree()
                    .cmp(&q.lcm.degree())
                    .then_with(|| order.cmp(&p.lcm, &q.lcm))
                    .then_with(|| (p.j, p.i).cmp(&(q.j, q.i)))
            })
            .unwrap();
        let Pair { i, j, lcm } = pairs.swap_remove(best);
        pending.remove(&(i, j));

        let (mi, mj) = (basis[i].leading_monomial().unwrap(), basis[j].leading_monomial().unwrap());
        if mi.is_coprime(mj) {
            continue;
        }
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let h = normal_form(&s_polynomial(&basis[i], &basis[j]), &basis);
        if !h.is_zero() && add(h, &mut basis, &mut pairs, &mut pending)? {
            return Ok(unit_basis(ring));
        }
    }

    Ok(GroebnerBasis { ring: ring.clone(), generators: reduce_basis(basis, ring), reduced: true })
}

fn unit_basis(ring: &Arc<PolyRing>) -> GroebnerBasis {
    GroebnerBasis { ring: ring.clone(), generators: vec![Polynomial::one(ring)], reduced: true }
}

/// Minimalizes and interreduces a Gröbner basis, sorting by decreasing leading monomial.
fn reduce_basis(mut basis: Vec<Polynomial>, ring: &Arc<PolyRing>) -> Vec<Polynomial> {
    let order = ring.order();
    basis.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in basis {
        let lm = g.leading_monomial().unwrap();
        if !minimal.iter().any(|h| h.leading_monomial().unwrap().divides(lm)) {
            minimal.push(g);
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> =
                minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
            let g = &minimal[k];
            let (m, c) = g.leading_term().unwrap().clone();
            let lead = Polynomial::term(ring, m, c);
            let tail = normal_form(&(g - &lead), &others);
            (&lead + &tail).monic()
        })
        .collect();
    reduced.sort_by(|a, b| match order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()) {
        Ordering::Equal => unreachable!("minimal basis has distinct leading monomials"),
        o => o,
    });
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::poly::MonomialOrder;

    fn qq(vars: &[&str]) -> Arc<PolyRing> {
        PolyRing::grevlex(Field::Rational, vars).unwrap()
    }

    fn lex(vars: &[&str]) -> Arc<PolyRing> {
        let r = qq(vars);
        r.with_order(MonomialOrder::lex(vars.len())).unwrap()
    }

    fn v(r: &Arc<PolyRing>, n: &str) -> Polynomial {
        Polynomial::var(r, n).unwrap()
    }

    fn c(r: &Arc<PolyRing>, n: i64) -> Polynomial {
        Polynomial::from_i64(r, n)
    }

    #[test]
    fn normal_form_single_step() {
        let r = lex(&["x", "y"]);
        let (x, y) = (v(&r, "x"), v(&r, "y"));
        let g = &(&(&x * &x) + &(&y * &y)) - &c(&r, 1);
        let nf = normal_form(&(&x * &x), &[g.clone()]);
        assert_eq!(nf, &c(&r, 1) - &(&y * &y));
        assert!(normal_form(&g, &[g.clone()]).is_zero());
        assert_eq!(normal_form(&nf, &[g]), nf);
    }

    #[test]
    fn already_reduced() {
        let r = qq(&["x", "y"]);
        let gb = buchberger(&r, &[v(&r, "x"), v(&r, "y")]).unwrap();
        assert_eq!(gb.generators(), &[v(&r, "x"), v(&r, "y")]);
    }

    #[test]
    fn circle_meets_line() {
        let r = lex(&["x", "y"]);
        let (x, y) = (v(&r, "x"), v(&r, "y"));
        let circle = &(&(&x * &x) + &(&y * &y)) - &c(&r, 1);
        let line = &c(&r, 1) - &x;
        let gb = buchberger(&r, &[circle, line]).unwrap();
        assert_eq!(gb.generators(), &[&x - &c(&r, 1), &y * &y]);
        assert!(gb.s_pairs_reduce_to_zero());
    }

    #[test]
    fn unit_ideal_collapses() {
        let r = qq(&["x"]);
        let x = v(&r, "x");
        let gb = buchberger(&r, &[x.clone(), &x + &c(&r, 1)]).unwrap();
        assert!(gb.is_unit());
    }

    #[test]
    fn resource_limit_aborts() {
        let r = qq(&["x", "y", "z"]);
        let (x, y, z) = (v(&r, "x"), v(&r, "y"), v(&r, "z"));
        let gens = [&(&x * &x) - &(&y * &z), &(&y * &y) - &(&x * &z), &(&(&z * &z) - &(&x * &y)) + &x];
        let tight = GbLimits { max_generators: 2, max_terms: 1_000 };
        let err = buchberger_with_limits(&r, &gens, tight).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { .. }));
    }
}
