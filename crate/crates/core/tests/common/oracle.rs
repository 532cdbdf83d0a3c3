//! Reference implementations that avoid Gröbner bases entirely.

use std::collections::BTreeMap;

use gaussian_content::coeff::Coeff;
use gaussian_content::poly::{Monomial, PolyRing, Polynomial};
use std::sync::Arc;

type Vector = BTreeMap<Vec<u32>, Coeff>;

fn to_vector(p: &Polynomial) -> Vector {
    p.terms().iter().map(|(m, c)| (m.exponents().to_vec(), c.clone())).collect()
}

fn axpy(v: &mut Vector, a: &Coeff, row: &Vector) {
    for (k, c) in row {
        let s = match v.get(k) {
            Some(x) => x - &(a * c),
            None => -&(a * c),
        };
        if s.is_zero() {
            v.remove(k);
        } else {
            v.insert(k.clone(), s);
        }
    }
}

/// Row-echelon span over the coefficient field, pivots on the largest key.
#[derive(Default)]
pub struct Span {
    rows: BTreeMap<Vec<u32>, Vector>,
}

impl Span {
    /// Full reduction: walks keys downward, clearing every pivot position.
    fn reduce(&self, mut v: Vector) -> Vector {
        let mut cursor: Option<Vec<u32>> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next_back().cloned(),
                Some(c) => v.range(..c.clone()).next_back().map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { return v };
            if let Some(row) = self.rows.get(&k) {
                let a = &v[&k] * &row[&k].inverse().unwrap();
                axpy(&mut v, &a, row);
            }
            cursor = Some(k);
        }
    }

    pub fn insert(&mut self, p: &Polynomial) {
        let v = self.reduce(to_vector(p));
        if let Some(k) = v.keys().next_back().cloned() {
            self.rows.insert(k, v);
        }
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(to_vector(p)).is_empty()
    }
}

/// All exponent vectors in `nvars` variables of total degree ≤ `d`.
pub fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = vec![vec![0u32; nvars]];
    for v in 0..nvars {
        let mut next = Vec::new();
        for e in &out {
            let used: u32 = e.iter().sum();
            for k in 0..=(d - used) {
                let mut e2 = e.clone();
                e2[v] = k;
                next.push(e2);
            }
        }
        out = next;
    }
    out.into_iter().map(Monomial::from_exponents).collect()
}

/// `f ∈ span{ m·g : g ∈ gens, deg m ≤ d }`: a brute-force witness search for
/// `f = Σ h_i g_i` with `deg h_i ≤ d`, run as linear algebra over the field.
pub fn bounded_member(ring: &Arc<PolyRing>, f: &Polynomial, gens: &[Polynomial], d: u32) -> bool {
    let mut span = Span::default();
    let one = ring.field().one();
    for m in monomials_up_to(ring.nvars(), d) {
        for g in gens {
            span.insert(&g.mul_term(&m, &one));
        }
    }
    span.contains(f)
}
