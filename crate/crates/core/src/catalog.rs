//! Named rings and polynomials used by the verification suite, and seeded
//! random polynomial generators for property sweeps.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::groebner::IdealHandle;
use crate::parse::{parse_elements, parse_poly, parse_ring};
use crate::poly::{MainVarView, Monomial, Polynomial};
use crate::rings::{LocalityWitness, RingSpec};

pub const EXAMPLE1_RING: &str = "GF(2)[s,t]/(s^2, s*t, t^2)";
pub const EXAMPLE2_RING: &str = "GF(2)[a,b,c]/(a^2 - b^2*c) domain";
pub const REDUCED_RING: &str = "QQ[s,t]/(s*t)";
pub const PLANE: &str = "QQ[x,y] domain";
pub const LINE: &str = "QQ[x] domain";
pub const CIRCLE: &str = "QQ[x,y]/(x^2 + y^2 - 1) domain";
pub const GF2_PLANE: &str = "GF(2)[s,t]";
pub const FIELD: &str = "QQ[] domain";

/// Parses a ring that is known to be well formed.
pub fn ring(text: &str) -> Arc<RingSpec> {
    parse_ring(text).unwrap_or_else(|e| panic!("catalog ring `{text}`: {e}"))
}

pub fn poly(ring: &RingSpec, text: &str) -> Polynomial {
    parse_poly(text, ring).unwrap_or_else(|e| panic!("catalog polynomial `{text}`: {e}"))
}

/// Every ring of the catalog, for sweeps that hold over arbitrary rings.
pub fn sweep_rings() -> Vec<(&'static str, Arc<RingSpec>)> {
    [PLANE, GF2_PLANE, EXAMPLE1_RING, EXAMPLE2_RING, REDUCED_RING, CIRCLE]
        .into_iter()
        .map(|t| (t, ring(t)))
        .collect()
}

/// A polynomial over a claimed domain, optionally with a rational point at which
/// every power of its content has finite colength.
#[derive(Clone, Copy, Debug)]
pub struct DomainExample {
    pub ring: &'static str,
    pub poly: &'static str,
    pub point: Option<&'static str>,
}

impl DomainExample {
    pub fn ring(&self) -> Arc<RingSpec> {
        ring(self.ring)
    }

    pub fn poly(&self, r: &RingSpec) -> Polynomial {
        poly(r, self.poly)
    }

    pub fn witness(&self, r: &Arc<RingSpec>) -> Option<Result<LocalityWitness>> {
        self.point.map(|p| LocalityWitness::new(IdealHandle::new(r, parse_elements(p, r)?)?))
    }
}

const fn ex(ring: &'static str, poly: &'static str, point: Option<&'static str>) -> DomainExample {
    DomainExample { ring, poly, point }
}

pub const DOMAIN_EXAMPLES: &[DomainExample] = &[
    ex(PLANE, "x + y*X", Some("x, y")),
    ex(PLANE, "x + x*X", None),
    ex(PLANE, "x*y + x*X + 2*x*X^2", None),
    ex(PLANE, "x + y*X + x*y*X^2", Some("x, y")),
    ex(LINE, "x + x^2*X", Some("x")),
    ex(LINE, "x^2 + 3*x*X + x^3*X^2", Some("x")),
    ex(CIRCLE, "1 - x + y*X", Some("1 - x, y")),
    ex(CIRCLE, "y + (1 - x)*X + (1 - x)*X^2", Some("1 - x, y")),
    ex(CIRCLE, "1 + x + y*X", Some("1 + x, y")),
    ex(EXAMPLE2_RING, "a + b*X", None),
    ex(EXAMPLE2_RING, "a^2 + b^2*X^2", None),
    ex(FIELD, "3 + 5*X", None),
];

/// Shape of a random polynomial in `R[X]`.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub x_degree: usize,
    pub base_degree: u32,
    /// Terms per X-coefficient (upper bound).
    pub terms: usize,
    /// Allow constant terms in coefficients; without them the content sits inside the origin.
    pub constants: bool,
}

impl Shape {
    pub const fn new(x_degree: usize, base_degree: u32, terms: usize, constants: bool) -> Self {
        Shape { x_degree, base_degree, terms, constants }
    }
}

/// Deterministic random polynomials (ChaCha8).
pub struct RandomPolys {
    rng: ChaCha8Rng,
}

impl RandomPolys {
    pub fn new(seed: u64) -> Self {
        RandomPolys { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn monomial(&mut self, nvars: usize, degree: u32) -> Monomial {
        let mut e = vec![0u32; nvars];
        for _ in 0..degree {
            e[self.rng.gen_range(0..nvars)] += 1;
        }
        Monomial::from_exponents(e)
    }

    fn small_coeff(&mut self) -> i64 {
        *[-3i64, -2, -1, 1, 2, 3].choose(&mut self.rng).unwrap()
    }

    /// A base-ring element, reduced modulo the relations (possibly zero).
    pub fn element(&mut self, ring: &RingSpec, base_degree: u32, terms: usize, constants: bool) -> Polynomial {
        let base = ring.base();
        let n = base.nvars();
        let lo = if constants || n == 0 { 0 } else { 1 };
        let count = self.rng.gen_range(1..=terms.max(1));
        let mut terms_out = Vec::with_capacity(count);
        for _ in 0..count {
            let d = if n == 0 { 0 } else { self.rng.gen_range(lo..=base_degree.max(lo)) };
            let m = self.monomial(n, d);
            let c = base.field().from_i64(self.small_coeff());
            terms_out.push((m, c));
        }
        ring.reduce(&Polynomial::from_terms(base, terms_out))
    }

    /// A polynomial nonzero in `R[X]` of X-degree at most `shape.x_degree`.
    pub fn poly(&mut self, ring: &RingSpec, shape: Shape) -> Polynomial {
        loop {
            let deg = self.rng.gen_range(0..=shape.x_degree);
            let coeffs: Vec<Polynomial> = (0..=deg)
                .map(|_| {
                    if self.rng.gen_bool(0.2) {
                        Polynomial::zero(ring.base())
                    } else {
                        self.element(ring, shape.base_degree, shape.terms, shape.constants)
                    }
                })
                .collect();
            let f = MainVarView::from_coefficients(ring.full(), coeffs).expect("base coefficients").assemble();
            if !f.is_zero() {
                return f;
            }
        }
    }

    /// `p·q` over a free ring with `q` of unit content, so `c(f) = (p)`.
    pub fn principal_content(&mut self, ring: &RingSpec, shape: Shape) -> Polynomial {
        let p = loop {
            let p = self.element(ring, shape.base_degree, 2, false);
            if !p.is_zero() {
                break p;
            }
        };
        let q = self.poly(ring, Shape { constants: true, ..shape });
        let view = MainVarView::of(&q).unwrap();
        let mut coeffs = view.coefficients().to_vec();
        let i = self.rng.gen_range(0..coeffs.len());
        coeffs[i] = Polynomial::from_i64(ring.base(), self.small_coeff());
        let q = MainVarView::from_coefficients(ring.full(), coeffs).unwrap().assemble();
        ring.mul(&ring.embed(&p).unwrap(), &q)
    }

    /// Coefficients are `r·(1−x) + s·y` with small constants `r, s`: content inside
    /// the point ideal `(1−x, y)` of the circle ring.
    pub fn circle_point_family(&mut self, ring: &RingSpec, x_degree: usize) -> Polynomial {
        let base = ring.base();
        let one = Polynomial::one(base);
        let x = ring.base_var("x").expect("circle ring has x");
        let y = ring.base_var("y").expect("circle ring has y");
        loop {
            let deg = self.rng.gen_range(0..=x_degree);
            let coeffs: Vec<Polynomial> = (0..=deg)
                .map(|_| {
                    let r = Polynomial::from_i64(base, self.rng.gen_range(-2..=2));
                    let s = Polynomial::from_i64(base, self.rng.gen_range(-2..=2));
                    ring.reduce(&(&(&r * &(&one - &x)) + &(&s * &y)))
                })
                .collect();
            let f = MainVarView::from_coefficients(ring.full(), coeffs).unwrap().assemble();
            if !f.is_zero() {
                return f;
            }
        }
    }
}
