#![allow(dead_code)]

pub mod oracle;

use std::sync::Arc;

use gaussian_content::catalog;
use gaussian_content::groebner::IdealHandle;
use gaussian_content::parse::parse_elements;
use gaussian_content::poly::Polynomial;
use gaussian_content::rings::RingSpec;

pub fn ring(text: &str) -> Arc<RingSpec> {
    catalog::ring(text)
}

pub fn poly(r: &RingSpec, text: &str) -> Polynomial {
    catalog::poly(r, text)
}

pub fn elem(r: &RingSpec, text: &str) -> Polynomial {
    parse_elements(text, r).unwrap().remove(0)
}

pub fn ideal(r: &Arc<RingSpec>, text: &str) -> IdealHandle {
    IdealHandle::new(r, parse_elements(text, r).unwrap()).unwrap()
}
