use std::fmt::Write as _;
use std::sync::Arc;

use gaussian_content::content::{
    content, content_product_defect, dedekind_mertens_check, gaussian_generic, gaussian_status_domain, nu_sequence,
    GaussianVerdict,
};
use gaussian_content::groebner::{cached_groebner, IdealHandle};
use gaussian_content::parse::{parse_elements, parse_ideal, parse_poly, parse_ring};
use gaussian_content::poly::{MonomialOrder, Polynomial};
use gaussian_content::rings::{is_invertible, LocalityWitness, RingSpec};
use gaussian_content::verify::{verify_paper, VerifyOptions};
use gaussian_content::{Error, Result};
use serde_json::json;

use crate::{Command, MethodArg, OrderArg, Outcome};

fn strs(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn ideal_text(ps: &[Polynomial]) -> String {
    if ps.is_empty() {
        "(0)".into()
    } else {
        format!("({})", strs(ps).join(", "))
    }
}

fn single_element(text: &str, ring: &RingSpec) -> Result<Polynomial> {
    let mut v = parse_elements(text, ring)?;
    if v.len() != 1 {
        return Err(Error::InvalidArgument(format!("expected one element, got {}", v.len())));
    }
    Ok(v.remove(0))
}

fn ring(text: &str) -> Result<Arc<RingSpec>> {
    parse_ring(text)
}

fn answer(verdict: bool, text: String, result: serde_json::Value) -> Outcome {
    Outcome { verdict: Some(verdict), text, result }
}

fn info(text: String, result: serde_json::Value) -> Outcome {
    Outcome { verdict: None, text, result }
}

fn verdict_text(v: &GaussianVerdict) -> String {
    let status = serde_json::to_value(v.status).unwrap();
    let method = serde_json::to_value(v.method).unwrap();
    let mut out = format!(
        "{} (method {}, degree {})\n",
        status.as_str().unwrap(),
        method.as_str().unwrap(),
        v.degree
    );
    if let Some(w) = &v.witness {
        let _ = writeln!(out, "witness g = {}", w.g);
        let _ = writeln!(out, "element {} in c(f)c(g) but not in c(fg)", w.element);
    }
    out
}

pub fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Gb { ring: r, ideal, order } => {
            let r = ring(&r.ring)?;
            let i = parse_ideal(ideal, &r)?;
            let gb = match order {
                OrderArg::Grevlex => i.groebner()?,
                OrderArg::Lex => {
                    let lex = r.base().with_order(MonomialOrder::lex(r.base().nvars()))?;
                    let gens = i.preimage_generators().iter().map(|g| g.map_into(&lex)).collect::<Result<Vec<_>>>()?;
                    cached_groebner(&lex, &gens)?
                }
            };
            let gens = gb.generators();
            Ok(info(
                format!("{}\n", ideal_text(gens)),
                json!({ "order": format!("{order:?}").to_lowercase(), "generators": strs(gens) }),
            ))
        }
        Command::Nf { ring: r, ideal, elem } => {
            let r = ring(&r.ring)?;
            let i = parse_ideal(ideal, &r)?;
            let nf = i.normal_form(&single_element(elem, &r)?)?;
            Ok(info(format!("{nf}\n"), json!({ "normal_form": nf.to_string() })))
        }
        Command::Member { ring: r, ideal, elem } => {
            let r = ring(&r.ring)?;
            let i = parse_ideal(ideal, &r)?;
            let e = single_element(elem, &r)?;
            let m = i.is_member(&e)?;
            Ok(answer(m, format!("{m}\n"), json!({ "member": m, "element": e.to_string(), "ideal": i.to_string() })))
        }
        Command::Equal { ring: r, ideal, other } => {
            let r = ring(&r.ring)?;
            let (a, b) = (parse_ideal(ideal, &r)?, parse_ideal(other, &r)?);
            let eq = a.equals(&b)?;
            Ok(answer(eq, format!("{eq}\n"), json!({ "equal": eq })))
        }
        Command::Colon { ring: r, ideal, by } => {
            let r = ring(&r.ring)?;
            let q = parse_ideal(ideal, &r)?.colon(&parse_ideal(by, &r)?)?;
            let gens = q.compact_generators()?;
            Ok(info(format!("{}\n", ideal_text(&gens)), json!({ "generators": strs(&gens) })))
        }
        Command::Content { ring: r, poly, with } => {
            let r = ring(&r.ring)?;
            let f = parse_poly(poly, &r)?;
            let c = content(&r, &f)?;
            let gens = c.reduced_generators();
            let mut text = format!("c(f) = {}\n", ideal_text(&gens));
            let mut result = json!({ "content": strs(&gens), "zero": c.is_zero() });
            match with {
                None => Ok(info(text, result)),
                Some(g) => {
                    let g = parse_poly(g, &r)?;
                    let d = content_product_defect(&r, &f, &g)?;
                    let _ = writeln!(text, "c(fg) {} c(f)c(g)", if d.equal { "=" } else { "!=" });
                    if let Some(w) = &d.witness {
                        let _ = writeln!(text, "witness {w} in c(f)c(g) but not in c(fg)");
                    }
                    result["defect"] = serde_json::to_value(&d).unwrap();
                    Ok(answer(d.equal, text, result))
                }
            }
        }
        Command::Gaussian { ring: r, poly, degree, method } => {
            let r = ring(&r.ring)?;
            let f = parse_poly(poly, &r)?;
            let use_domain = match method {
                MethodArg::Domain => true,
                MethodArg::Generic => false,
                MethodArg::Auto => r.is_claimed_domain() && degree.is_none(),
            };
            let v = if use_domain {
                gaussian_status_domain(&r, &f)?
            } else {
                let d = match degree {
                    Some(d) => *d,
                    None => gaussian_content::content::degree(&r, &f)?.unwrap_or(0),
                };
                gaussian_generic(&r, &f, d)?
            };
            Ok(answer(v.is_certified(), verdict_text(&v), serde_json::to_value(&v).unwrap()))
        }
        Command::Invertible { ring: r, ideal } => {
            let r = ring(&r.ring)?;
            let i = parse_ideal(ideal, &r)?;
            let rep = is_invertible(&i)?;
            let inv = &rep.inverse;
            let num = inv.numerator().compact_generators()?;
            let d = inv.denominator();
            let d_text = if d.len() > 1 { format!("({d})") } else { d.to_string() };
            let text = format!("{}\ninverse = (1/{d_text})*{}\n", rep.invertible, ideal_text(&num));
            Ok(answer(
                rep.invertible,
                text,
                json!({
                    "invertible": rep.invertible,
                    "inverse": { "denominator": inv.denominator().to_string(), "numerator": strs(&num) },
                    "certificate": serde_json::to_value(&rep.certificate).unwrap(),
                    "certificate_verified": rep.certificate.verify(&r),
                }),
            ))
        }
        Command::Nu { ring: r, poly, at, mmax } => {
            let r = ring(&r.ring)?;
            let f = parse_poly(poly, &r)?;
            let m = LocalityWitness::new(IdealHandle::new(&r, parse_elements(at, &r)?)?)?;
            let seq = nu_sequence(&r, &f, &m, *mmax)?;
            let values: Vec<String> = seq.values().iter().map(|v| v.to_string()).collect();
            let mut text = format!("nu = {}\nbound deg f + 1 = {}\n", values.join(", "), seq.bound);
            match seq.first_violation {
                Some(k) => {
                    let _ = writeln!(text, "bound exceeded from m = {k}: f is not Gaussian");
                }
                None => text.push_str("bound holds\n"),
            }
            Ok(answer(seq.first_violation.is_none(), text, serde_json::to_value(&seq).unwrap()))
        }
        Command::Dm { ring: r, poly, with } => {
            let r = ring(&r.ring)?;
            let dm = dedekind_mertens_check(&r, &parse_poly(poly, &r)?, &parse_poly(with, &r)?)?;
            let text = format!(
                "{}\nexponent identity (m = {}): {}\nradical c(f)c(g) in sqrt c(fg): {}\nradical c(fg) in sqrt c(f)c(g): {}\n",
                dm.holds(),
                dm.m,
                dm.exponent_identity,
                dm.radical_forward,
                dm.radical_backward
            );
            Ok(answer(dm.holds(), text, serde_json::to_value(&dm).unwrap()))
        }
        Command::VerifyPaper { example1_ring } => {
            let mut opts = VerifyOptions::default();
            if let Some(t) = example1_ring {
                opts.example1_ring = t.clone();
            }
            let rep = verify_paper(&opts);
            Ok(answer(rep.passed, rep.to_text(), serde_json::to_value(&rep).unwrap()))
        }
    }
}
