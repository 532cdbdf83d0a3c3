use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Box<[u32]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars].into_boxed_slice())
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents.into_boxed_slice())
    }

    pub fn variable(nvars: usize, index: usize, exponent: u32) -> Self {
        let mut e = vec![0; nvars];
        e[index] = exponent;
        Monomial::from_exponents(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0[index]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self | other`
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, if exact.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OrderKind {
    Lex,
    Grevlex,
    /// Block order: grevlex on the first `n` variables (by precedence), ties
    /// broken by grevlex on the rest. Eliminates the first block.
    Elimination(usize),
}

/// A monomial order: a kind plus a variable precedence, greatest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, precedence: Vec<usize>) -> Result<Self> {
        let n = precedence.len();
        let mut seen = vec![false; n];
        for &p in &precedence {
            if p >= n || seen[p] {
                return Err(Error::invalid("variable precedence is not a permutation"));
            }
            seen[p] = true;
        }
        if let OrderKind::Elimination(k) = kind {
            if k > n {
                return Err(Error::invalid("elimination block larger than the variable count"));
            }
        }
        Ok(MonomialOrder { kind, precedence })
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, precedence: (0..nvars).collect() }
    }

    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, precedence: (0..nvars).collect() }
    }

    pub fn elimination(nvars: usize, block: usize) -> Self {
        MonomialOrder { kind: OrderKind::Elimination(block.min(nvars)), precedence: (0..nvars).collect() }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    /// The same order with one more variable, ranked lowest.
    pub fn extended(&self) -> MonomialOrder {
        let mut precedence = self.precedence.clone();
        precedence.push(precedence.len());
        MonomialOrder { kind: self.kind, precedence }
    }

    /// The same order with `k` more variables, ranked lowest.
    pub fn extended_by(&self, k: usize) -> MonomialOrder {
        (0..k).fold(self.clone(), |o, _| o.extended())
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self.kind {
            OrderKind::Lex => {
                for &v in &self.precedence {
                    match a.exponent(v).cmp(&b.exponent(v)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => grevlex_on(a, b, &self.precedence),
            OrderKind::Elimination(k) => {
                let (head, tail) = self.precedence.split_at(k);
                grevlex_on(a, b, head).then_with(|| grevlex_on(a, b, tail))
            }
        }
    }
}

fn grevlex_on(a: &Monomial, b: &Monomial, vars: &[usize]) -> Ordering {
    let da: u32 = vars.iter().map(|&v| a.exponent(v)).sum();
    let db: u32 = vars.iter().map(|&v| b.exponent(v)).sum();
    da.cmp(&db).then_with(|| {
        for &v in vars.iter().rev() {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::grevlex(3);
        // x*z < y^2 in grevlex with x > y > z
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        let l = MonomialOrder::lex(3);
        assert_eq!(l.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Greater);
    }

    #[test]
    fn elimination_block_dominates() {
        let o = MonomialOrder::elimination(3, 1);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1, 0]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn precedence_must_be_permutation() {
        assert!(MonomialOrder::new(OrderKind::Lex, vec![0, 0]).is_err());
        assert!(MonomialOrder::new(OrderKind::Lex, vec![1, 0]).is_ok());
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 3).prop_map(Monomial::from_exponents)
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::lex(3),
            MonomialOrder::grevlex(3),
            MonomialOrder::elimination(3, 1),
            MonomialOrder::new(OrderKind::Grevlex, vec![2, 0, 1]).unwrap(),
            MonomialOrder::new(OrderKind::Lex, vec![1, 2, 0]).unwrap(),
        ]
    }

    proptest! {
        #[test]
        fn orders_total_and_multiplicative(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            for o in orders() {
                let ab = o.cmp(&a, &b);
                prop_assert_eq!(ab == Ordering::Equal, a == b);
                prop_assert_eq!(o.cmp(&b, &a), ab.reverse());
                prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
                prop_assert_ne!(o.cmp(&a, &Monomial::one(3)), Ordering::Less);
            }
        }
    }
}
