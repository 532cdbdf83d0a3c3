//! Text syntax for rings and polynomials.
//!
//! ```text
//! ring  := FIELD "[" (ident ("," ident)*)? "]" ("/" "(" poly ("," poly)* ")")? "domain"?
//! FIELD := "QQ" | "GF(" prime ")"
//! poly  := ("+"|"-")? term (("+"|"-") term)*
//! term  := factor ("*"? factor)*
//! factor:= atom ("^" nat)?
//! atom  := integer ("/" integer)? | ident | "(" poly ")"
//! ```
//! `X` is the main variable: it may appear in polynomials but not in the
//! variable list or the relations.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::coeff::Field;
use crate::error::{Error, Result};
use crate::groebner::IdealHandle;
use crate::poly::{PolyRing, Polynomial, MAIN_VAR};
use crate::rings::{make_quotient, RingSpec};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let mut bump = |chars: &mut std::iter::Peekable<std::str::Chars>| {
            let c = chars.next().unwrap();
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
            c
        };
        if c.is_whitespace() {
            bump(&mut chars);
        } else if c.is_ascii_digit() {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                s.push(bump(&mut chars));
            }
            out.push(Spanned { tok: Tok::Int(s.parse().unwrap()), line: l, column: col });
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut s = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_') {
                s.push(bump(&mut chars));
            }
            out.push(Spanned { tok: Tok::Ident(s), line: l, column: col });
        } else if "+-*^/()[],".contains(c) {
            bump(&mut chars);
            out.push(Spanned { tok: Tok::Sym(c), line: l, column: col });
        } else {
            return Err(Error::Parse { line: l, column: col, message: format!("unexpected character `{c}`") });
        }
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self> {
        Ok(Parser { toks: tokenize(text)?, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn next(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_at(&self, at: &Spanned, message: impl Into<String>) -> Error {
        Error::Parse { line: at.line, column: at.column, message: message.into() }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        self.error_at(&self.toks[self.pos], message)
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`, found {}", self.peek().describe())))
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            Tok::End => Ok(()),
            t => Err(self.error(format!("unexpected {} after the end of the expression", t.describe()))),
        }
    }

    fn ident(&mut self) -> Result<(String, Spanned)> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t)),
            other => Err(self.error_at(&t, format!("expected an identifier, found {}", other.describe()))),
        }
    }

    fn field(&mut self) -> Result<Field> {
        let (name, at) = self.ident()?;
        match name.as_str() {
            "QQ" => Ok(Field::Rational),
            "GF" => {
                self.expect('(')?;
                let t = self.next();
                let p = match &t.tok {
                    Tok::Int(n) => n.to_u64().ok_or_else(|| self.error_at(&t, "prime modulus too large"))?,
                    other => return Err(self.error_at(&t, format!("expected a prime, found {}", other.describe()))),
                };
                let field = Field::prime(p).map_err(|e| self.error_at(&t, strip(e)))?;
                self.expect(')')?;
                Ok(field)
            }
            _ => Err(self.error_at(&at, format!("unknown field `{name}` (expected QQ or GF(p))"))),
        }
    }

    fn poly(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(ring);
        let mut sign = if self.eat('-') {
            -1
        } else {
            self.eat('+');
            1
        };
        loop {
            let t = self.term(ring)?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            sign = if self.eat('+') {
                1
            } else if self.eat('-') {
                -1
            } else {
                return Ok(acc);
            };
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::Sym('('))
    }

    fn term(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let mut acc = self.factor(ring)?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor(ring)?;
            } else if self.starts_atom() {
                acc = &acc * &self.factor(ring)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let base = self.atom(ring)?;
        if !self.eat('^') {
            return Ok(base);
        }
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => {
                let e = n.to_u32().ok_or_else(|| self.error_at(&t, "exponent too large"))?;
                Ok(base.pow(e))
            }
            other => Err(self.error_at(&t, format!("expected a natural exponent, found {}", other.describe()))),
        }
    }

    fn atom(&mut self, ring: &Arc<PolyRing>) -> Result<Polynomial> {
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => {
                let mut den = BigInt::from(1);
                if self.eat('/') {
                    let d = self.next();
                    match &d.tok {
                        Tok::Int(m) if !m.is_zero() => den = m.clone(),
                        Tok::Int(_) => return Err(self.error_at(&d, "zero denominator in coefficient")),
                        other => {
                            return Err(self.error_at(&d, format!("malformed coefficient: expected a denominator, found {}", other.describe())))
                        }
                    }
                }
                let c = ring
                    .field()
                    .from_ratio(n, &den)
                    .map_err(|_| self.error_at(&t, format!("coefficient {n}/{den} is undefined in {}", ring.field())))?;
                Ok(Polynomial::constant(ring, c))
            }
            Tok::Ident(name) => Polynomial::var(ring, name).map_err(|_| {
                let hint = if name == MAIN_VAR { " (the main variable is not allowed here)" } else { "" };
                self.error_at(&t, format!("unknown variable `{name}`{hint}"))
            }),
            Tok::Sym('(') => {
                let p = self.poly(ring)?;
                self.expect(')')?;
                Ok(p)
            }
            other => Err(self.error_at(&t, format!("expected a term, found {}", other.describe()))),
        }
    }

    fn poly_list(&mut self, ring: &Arc<PolyRing>) -> Result<Vec<Polynomial>> {
        let mut out = vec![self.poly(ring)?];
        while self.eat(',') {
            out.push(self.poly(ring)?);
        }
        Ok(out)
    }
}

fn strip(e: Error) -> String {
    match e {
        Error::InvalidArgument(m) => m,
        other => other.to_string(),
    }
}

/// Parses a ring description such as `GF(2)[s,t]/(s^2, s*t, t^2)` or `QQ[x,y] domain`.
pub fn parse_ring(text: &str) -> Result<Arc<RingSpec>> {
    let mut p = Parser::new(text)?;
    let field = p.field()?;
    p.expect('[')?;
    let mut vars: Vec<String> = Vec::new();
    if !p.eat(']') {
        loop {
            let (name, at) = p.ident()?;
            if name == MAIN_VAR {
                return Err(p.error_at(&at, format!("`{MAIN_VAR}` is reserved for the main variable")));
            }
            if vars.contains(&name) {
                return Err(p.error_at(&at, format!("duplicate variable `{name}`")));
            }
            vars.push(name);
            if p.eat(']') {
                break;
            }
            p.expect(',')?;
        }
    }
    let names: Vec<&str> = vars.iter().map(String::as_str).collect();
    let base = PolyRing::grevlex(field, &names)?;
    let mut relations = Vec::new();
    if p.eat('/') {
        p.expect('(')?;
        relations = p.poly_list(&base)?;
        p.expect(')')?;
    }
    let mut domain = false;
    if let Tok::Ident(w) = p.peek().clone() {
        if w == "domain" {
            p.next();
            domain = true;
        } else {
            return Err(p.error(format!("unexpected `{w}` (expected `domain` or end of input)")));
        }
    }
    p.expect_end()?;
    make_quotient(&base, relations, domain)
}

/// Parses a polynomial over an explicit polynomial ring.
pub fn parse_poly_in(text: &str, ring: &Arc<PolyRing>) -> Result<Polynomial> {
    let mut p = Parser::new(text)?;
    let f = p.poly(ring)?;
    p.expect_end()?;
    Ok(f)
}

/// Parses a polynomial in `R[X]`. The result is not reduced modulo the relations.
pub fn parse_poly(text: &str, ring: &RingSpec) -> Result<Polynomial> {
    parse_poly_in(text, ring.full())
}

/// Comma-separated base-ring elements.
pub fn parse_elements(text: &str, ring: &RingSpec) -> Result<Vec<Polynomial>> {
    let mut p = Parser::new(text)?;
    if p.peek() == &Tok::End {
        return Ok(Vec::new());
    }
    let out = p.poly_list(ring.base())?;
    p.expect_end()?;
    Ok(out)
}

/// Comma-separated generators, possibly wrapped in one pair of parentheses.
pub fn parse_ideal(text: &str, ring: &Arc<RingSpec>) -> Result<IdealHandle> {
    let t = text.trim();
    let gens = match parse_elements(t, ring) {
        Ok(g) => g,
        Err(e) if t.starts_with('(') && t.ends_with(')') => parse_elements(&t[1..t.len() - 1], ring).map_err(|_| e)?,
        Err(e) => return Err(e),
    };
    IdealHandle::new(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_style_rings() {
        let r = parse_ring("GF(2)[s,t]/(s^2, s*t, t^2)").unwrap();
        assert_eq!(r.field(), Field::Prime(2));
        assert_eq!(r.defining_generators().len(), 3);
        assert!(!r.is_claimed_domain());
        let d = parse_ring("QQ[a,b,c]/(a^2 - b^2*c) domain").unwrap();
        assert!(d.is_claimed_domain());
        assert_eq!(d.to_string(), "QQ[a,b,c]/(-b^2*c + a^2) domain");
        let free = parse_ring("QQ[x,y]").unwrap();
        assert!(free.is_free());
        assert!(parse_ring("QQ[]").unwrap().base_vars().is_empty());
        assert!(parse_ring("QQ[ ] domain").unwrap().is_claimed_domain());
    }

    #[test]
    fn ring_errors_carry_positions() {
        let cases = [
            ("ZZ[x]", 1, 1, "unknown field"),
            ("GF(4)[x]", 1, 4, "not prime"),
            ("QQ[x,x]", 1, 6, "duplicate"),
            ("QQ[x,X]", 1, 6, "reserved"),
            ("QQ[x]/(X)", 1, 8, "main variable"),
            ("QQ[x]\n  domian", 2, 3, "domian"),
            ("QQ[x", 1, 5, "expected `,`"),
        ];
        for (text, line, column, needle) in cases {
            match parse_ring(text) {
                Err(Error::Parse { line: l, column: c, message }) => {
                    assert_eq!((l, c), (line, column), "{text}: {message}");
                    assert!(message.contains(needle), "{text}: {message}");
                }
                other => panic!("{text}: {other:?}"),
            }
        }
        assert_eq!(parse_ring("QQ[x]/(1)").unwrap_err(), Error::TrivialRing);
    }

    #[test]
    fn polynomials() {
        let r = parse_ring("QQ[x,y]").unwrap();
        let f = parse_poly("1/2*x^2*y - 3", &r).unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_string(), "1/2*x^2*y - 3");
        assert!(parse_poly("0", &r).unwrap().is_zero());
        let g = parse_poly("(x + y*X)^2", &r).unwrap();
        assert_eq!(g, parse_poly("y^2*X^2 + 2 x y X + x^2", &r).unwrap());
        assert_eq!(parse_poly("-x - -1", &r).unwrap_err().to_string().contains("column 6"), true);
        assert!(matches!(parse_poly("z", &r), Err(Error::Parse { column: 1, .. })));
        assert!(matches!(parse_poly("1/0*x", &r), Err(Error::Parse { column: 3, .. })));
        let gf = parse_ring("GF(3)[s]").unwrap();
        // 2 = -1 in GF(3)
        assert_eq!(parse_poly("1/2*s", &gf).unwrap().to_string(), "-s");
        assert!(parse_poly("1/3*s", &gf).is_err());
    }

    #[test]
    fn ideals() {
        let r = parse_ring("QQ[s,t]").unwrap();
        let a = parse_ideal("s*t, s^2+t^2", &r).unwrap();
        let b = parse_ideal("(s*t, s^2 + t^2)", &r).unwrap();
        assert!(a.equals(&b).unwrap());
        assert!(!a.is_member(&parse_elements("s^2", &r).unwrap()[0]).unwrap());
        assert!(parse_ideal("s + X", &r).is_err());
        assert!(parse_ideal("", &r).unwrap().is_zero());
    }
}
