use crate::error::Result;
use crate::groebner::IdealHandle;
use crate::poly::Polynomial;

fn push_unique(out: &mut Vec<Polynomial>, p: Polynomial) {
    if !p.is_zero() && !out.contains(&p) {
        out.push(p);
    }
}

fn product_of(ring_ideal: &IdealHandle, a: &[Polynomial], b: &[Polynomial]) -> Result<IdealHandle> {
    let ring = ring_ideal.ring();
    let mut gens = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            push_unique(&mut gens, ring.mul(x, y));
        }
    }
    IdealHandle::new(ring, gens)
}

/// `I·J`, generated by pairwise products of the (reduced) generators.
pub fn ideal_product(i: &IdealHandle, j: &IdealHandle) -> Result<IdealHandle> {
    i.check_ring(j)?;
    product_of(i, &i.reduced_generators(), &j.reduced_generators())
}

/// `I^n` by repeated squaring; `I^0 = R`.
pub fn ideal_power(i: &IdealHandle, n: u32) -> Result<IdealHandle> {
    let ring = i.ring();
    let mut result: Option<IdealHandle> = None;
    let mut square = i.clone();
    let mut k = n;
    while k > 0 {
        if k & 1 == 1 {
            result = Some(match result {
                None => square.clone(),
                Some(r) => product_of(&r, &r.compact_generators()?, &square.compact_generators()?)?,
            });
        }
        k >>= 1;
        if k > 0 {
            let g = square.compact_generators()?;
            square = product_of(&square, &g, &g)?;
        }
    }
    Ok(result.unwrap_or_else(|| IdealHandle::unit(ring)))
}
