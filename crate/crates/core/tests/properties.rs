mod common;

use common::oracle::bounded_member;
use common::{elem, ideal, ring};
use gaussian_content::catalog::{sweep_rings, RandomPolys, Shape, DOMAIN_EXAMPLES};
use gaussian_content::content::{content, nu_sequence};
use gaussian_content::groebner::{buchberger, Colength, IdealHandle};
use gaussian_content::parse::parse_poly;
use gaussian_content::poly::Polynomial;
use gaussian_content::rings::{
    fractional_inverse, fractional_inverse_with, ideal_power, ideal_product, is_invertible, RingSpec,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use std::sync::Arc;

fn random_ideal(g: &mut RandomPolys, r: &Arc<RingSpec>, n: usize, deg: u32) -> IdealHandle {
    let gens = (0..n).map(|_| g.element(r, deg, 3, false)).collect();
    IdealHandle::new(r, gens).unwrap()
}

#[test]
fn print_parse_round_trip() {
    for (name, r) in sweep_rings() {
        let mut g = RandomPolys::new(name.len() as u64);
        for i in 0..500 {
            let mut f = g.poly(&r, Shape::new(3, 3, 4, true));
            if i % 5 == 0 {
                let c = r.field().from_ratio(&7.into(), &3.into()).unwrap();
                f = f.scale(&c);
            }
            let back = parse_poly(&f.to_string(), &r).unwrap();
            assert_eq!(back, f, "{name}: {f}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(seed in any::<u64>()) {
        let r = ring("QQ[x,y]");
        let mut g = RandomPolys::new(seed);
        let s = Shape::new(2, 2, 3, true);
        let (a, b, c) = (g.poly(&r, s), g.poly(&r, s), g.poly(&r, s));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(a.pow(3), &(&a * &a) * &a);
    }

    #[test]
    fn quotient_reduction_is_a_ring_map(seed in any::<u64>()) {
        let r = ring("GF(3)[s,t]/(s^2 - t^3, s*t^2)");
        let mut g = RandomPolys::new(seed);
        let (a, b) = (g.element(&r, 4, 3, true), g.element(&r, 4, 3, true));
        let raw = r.reduce(&(&a * &b));
        prop_assert_eq!(r.reduce(&(&r.reduce(&a) * &r.reduce(&b))), raw);
        prop_assert_eq!(r.reduce(&r.reduce(&a)), r.reduce(&a));
    }
}

#[test]
fn reduced_basis_is_canonical_under_shuffle_and_scaling() {
    let mut g = RandomPolys::new(21);
    for text in ["QQ[x,y,z]", "GF(3)[x,y]", "GF(2)[s,t,u]"] {
        let r = ring(text);
        for _ in 0..30 {
            let mut gens: Vec<Polynomial> = (0..3).map(|_| g.element(&r, 3, 3, true)).collect();
            let gb = buchberger(r.base(), &gens).unwrap();
            assert!(gb.s_pairs_reduce_to_zero());
            gens.shuffle(g.rng());
            let k = loop {
                let k = r.field().from_i64(g.rng().gen_range(1..5i64));
                if !k.is_zero() {
                    break k;
                }
            };
            let scaled: Vec<Polynomial> = gens.iter().map(|p| p.scale(&k)).collect();
            let again = buchberger(r.base(), &scaled).unwrap();
            assert_eq!(gb.generators(), again.generators(), "{text}");
        }
    }
}

#[test]
fn membership_matches_linear_algebra_oracle() {
    let mut g = RandomPolys::new(5);
    for text in ["GF(2)[x,y]", "GF(3)[x,y]", "GF(3)[x]"] {
        let r = ring(text);
        for k in 0..40 {
            let gens: Vec<Polynomial> = (0..2).map(|_| g.element(&r, 2, 3, false)).collect();
            let i = IdealHandle::new(&r, gens.clone()).unwrap();
            let f = if k % 2 == 0 {
                let hs: Vec<Polynomial> = gens.iter().map(|_| g.element(&r, 3, 3, true)).collect();
                hs.iter().zip(&gens).fold(Polynomial::zero(r.base()), |acc, (h, q)| &acc + &(h * q))
            } else {
                g.element(&r, 4, 4, true)
            };
            let engine = i.is_member(&f).unwrap();
            let brute = bounded_member(r.base(), &f, &gens, 3) || bounded_member(r.base(), &f, &gens, 6);
            assert_eq!(engine, brute, "{text}: {f} in {i}");
        }
    }
}

#[test]
fn colon_and_intersection_inclusions() {
    let mut g = RandomPolys::new(8);
    for (name, r) in sweep_rings() {
        for _ in 0..8 {
            let i = random_ideal(&mut g, &r, 2, 2);
            let j = random_ideal(&mut g, &r, 2, 2);
            if j.is_zero() {
                continue;
            }
            let q = i.colon(&j).unwrap();
            assert!(i.contains(&ideal_product(&q, &j).unwrap()).unwrap(), "{name}");
            assert!(q.contains(&i).unwrap());
            let meet = i.intersect(&j).unwrap();
            assert!(meet.contains(&ideal_product(&i, &j).unwrap()).unwrap(), "{name}");
            assert!(i.contains(&meet).unwrap() && j.contains(&meet).unwrap());
        }
    }
}

#[test]
fn colength_of_maximal_ideal_powers() {
    let r = ring("QQ[x,y]");
    let m = ideal(&r, "x, y");
    for n in 1..=6u32 {
        let expect = (n * (n + 1) / 2) as usize;
        assert_eq!(ideal_power(&m, n).unwrap().colength().unwrap(), Colength::Finite(expect));
    }
}

#[test]
fn product_laws() {
    let mut g = RandomPolys::new(13);
    for (name, r) in sweep_rings() {
        for _ in 0..5 {
            let (a, b, c) = (random_ideal(&mut g, &r, 2, 2), random_ideal(&mut g, &r, 2, 1), random_ideal(&mut g, &r, 1, 2));
            let ab = ideal_product(&a, &b).unwrap();
            assert!(ab.equals(&ideal_product(&b, &a).unwrap()).unwrap(), "{name}");
            let left = ideal_product(&ab, &c).unwrap();
            let right = ideal_product(&a, &ideal_product(&b, &c).unwrap()).unwrap();
            assert!(left.equals(&right).unwrap(), "{name}");
            let p3 = ideal_power(&b, 3).unwrap();
            let p12 = ideal_product(&ideal_power(&b, 1).unwrap(), &ideal_power(&b, 2).unwrap()).unwrap();
            assert!(p3.equals(&p12).unwrap(), "{name}");
        }
    }
}

#[test]
fn invertible_content_has_one_local_generator() {
    for ex in DOMAIN_EXAMPLES {
        let r = ex.ring();
        let f = ex.poly(&r);
        let c = content(&r, &f).unwrap();
        let Some(w) = ex.witness(&r) else { continue };
        let w = w.unwrap();
        if is_invertible(&c).unwrap().invertible {
            let seq = nu_sequence(&r, &f, &w, 2).unwrap();
            assert_eq!(seq.values(), vec![1; 3], "{}", ex.poly);
        }
    }
}

#[test]
fn fractional_inverse_does_not_depend_on_denominator() {
    let r = ring("QQ[x,y]/(x^2 + y^2 - 1) domain");
    let i = ideal(&r, "1 - x, y");
    let a = fractional_inverse(&i).unwrap();
    for d in ["y", "1 - x", "(1 - x)*y"] {
        let other = fractional_inverse_with(&i, elem(&r, d)).unwrap();
        assert!(a.equals(&other).unwrap(), "{d}");
    }
    let plane = ring("QQ[x,y] domain");
    let j = ideal(&plane, "x^2, x*y");
    let a = fractional_inverse(&j).unwrap();
    let b = fractional_inverse_with(&j, elem(&plane, "x*y")).unwrap();
    assert!(a.equals(&b).unwrap());
}
