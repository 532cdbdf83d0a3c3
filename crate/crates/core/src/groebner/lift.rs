use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::basis::GbLimits;
use crate::poly::{Monomial, PolyRing, Polynomial};

/// A basis element together with its expression in the input generators.
struct Tracked {
    poly: Polynomial,
    cofactors: Vec<Polynomial>,
}

fn combine(ring: &Arc<PolyRing>, n: usize, parts: &[(Polynomial, &Tracked)]) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero(ring); n];
    for (q, t) in parts {
        if q.is_zero() {
            continue;
        }
        for (o, c) in out.iter_mut().zip(&t.cofactors) {
            *o = &*o + &(q * c);
        }
    }
    out
}

/// Reduces `p` by `basis`; returns the remainder and the quotient attached to each basis element.
fn reduce(p: &Polynomial, basis: &[Tracked]) -> (Polynomial, Vec<Polynomial>) {
    let ring = p.ring().clone();
    let mut quotients = vec![Polynomial::zero(&ring); basis.len()];
    let mut rest = p.clone();
    let mut remainder = Polynomial::zero(&ring);
    while let Some((m, c)) = rest.leading_term().cloned() {
        let hit = basis
            .iter()
            .position(|b| b.poly.leading_monomial().is_some_and(|lm| lm.divides(&m)));
        match hit {
            Some(k) => {
                let (lm, lc) = basis[k].poly.leading_term().unwrap();
                let q = m.div(lm).unwrap();
                let coef = &c * &lc.inverse().unwrap();
                rest = rest.sub_mul_term(&coef, &q, &basis[k].poly);
                quotients[k] = &quotients[k] + &Polynomial::term(&ring, q, coef);
            }
            None => {
                let lead = Polynomial::term(&ring, m, c);
                rest = &rest - &lead;
                remainder = &remainder + &lead;
            }
        }
    }
    (remainder, quotients)
}

/// Finds cofactors `h` with `f = Σ h_i gens_i`, or `None` when `f` is not in
/// the ideal. Runs Buchberger while recording how every basis element is
/// built from the inputs.
pub fn lift(ring: &Arc<PolyRing>, gens: &[Polynomial], f: &Polynomial) -> Result<Option<Vec<Polynomial>>> {
    let limits = GbLimits::from_env();
    let n = gens.len();
    let f = f.map_into(ring)?;
    let mut basis: Vec<Tracked> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let g = g.map_into(ring)?;
        if g.is_zero() {
            continue;
        }
        let inv = g.leading_coeff().unwrap().inverse()?;
        let mut cofactors = vec![Polynomial::zero(ring); n];
        cofactors[i] = Polynomial::constant(ring, inv.clone());
        basis.push(Tracked { poly: g.scale(&inv), cofactors });
    }
    let mut pairs: Vec<(usize, usize)> =
        (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let (mi, mj) = (basis[i].poly.leading_monomial().unwrap(), basis[j].poly.leading_monomial().unwrap());
        if mi.is_coprime(mj) {
            continue;
        }
        let l = mi.lcm(mj);
        let (ui, uj) = (l.div(mi).unwrap(), l.div(mj).unwrap());
        let one = ring.field().one();
        let term = |m: &Monomial, sign: i64| Polynomial::term(ring, m.clone(), ring.field().from_i64(sign));
        let s = &basis[i].poly.mul_term(&ui, &one) - &basis[j].poly.mul_term(&uj, &one);
        let (r, quotients) = reduce(&s, &basis);
        if r.is_zero() {
            continue;
        }
        // r = s - Σ q_k b_k
        let mut parts: Vec<(Polynomial, &Tracked)> = vec![(term(&ui, 1), &basis[i]), (term(&uj, -1), &basis[j])];
        parts.extend(quotients.into_iter().zip(&basis).map(|(q, b)| (-&q, b)));
        let cofactors = combine(ring, n, &parts);
        let inv = r.leading_coeff().unwrap().inverse()?;
        let k = basis.len();
        basis.push(Tracked {
            poly: r.scale(&inv),
            cofactors: cofactors.iter().map(|c| c.scale(&inv)).collect(),
        });
        if basis.len() > limits.max_generators {
            return Err(Error::ResourceLimit { what: "lift basis generators", value: basis.len(), limit: limits.max_generators });
        }
        pairs.extend((0..k).map(|i| (i, k)));
    }
    let (r, quotients) = reduce(&f, &basis);
    if !r.is_zero() {
        return Ok(None);
    }
    let parts: Vec<(Polynomial, &Tracked)> = quotients.into_iter().zip(&basis).collect();
    Ok(Some(combine(ring, n, &parts)))
}
