//! The fixed verification catalog: every identity, bound and counterexample
//! the library is expected to reproduce, as named pass/fail checks.

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use serde::Serialize;

use crate::catalog::{self, RandomPolys, Shape, DOMAIN_EXAMPLES};
use crate::content::{
    content, content_product_defect, dedekind_mertens_check, find_witness, gaussian_generic, gaussian_status_domain,
    nu_sequence, power_substitution_check, GaussianMethod, GaussianStatus,
};
use crate::error::Result;
use crate::groebner::IdealHandle;
use crate::parse::{parse_elements, parse_ring};
use crate::poly::{negate_main_var, permute_coefficients, substitute_power, MainVarView, Polynomial};
use crate::rings::{ideal_power, ideal_product, RingSpec};

pub const SCHEMA: &str = "gausscheck.verify-paper/1";

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Ring used for the extension-failure check.
    pub example1_ring: String,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { example1_ring: catalog::EXAMPLE1_RING.to_string() }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub anchor: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub subchecks: Vec<SubCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub passed: bool,
    pub failed: Vec<&'static str>,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    /// Timing-free text form; byte-identical across runs.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = writeln!(out, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.anchor, c.description);
            for s in &c.subchecks {
                let _ = writeln!(out, "    [{}] {}", if s.passed { "ok" } else { "FAILED" }, s.name);
            }
            if let Some(e) = &c.error {
                let _ = writeln!(out, "    error: {e}");
            }
        }
        if self.passed {
            let _ = writeln!(out, "all {} checks passed", self.checks.len());
        } else {
            let _ = writeln!(out, "failed: {}", self.failed.join(", "));
        }
        out
    }
}

#[derive(Default)]
struct Collector(Vec<SubCheck>);

impl Collector {
    fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.0.push(SubCheck { name: name.into(), passed });
    }
}

type CheckFn = fn(&VerifyOptions, &mut Collector) -> Result<()>;

const CHECKS: &[(&str, &str, CheckFn)] = &[
    ("extension-failure", "s+tX is Gaussian over k[s,t]/(s,t)^2 but not over R[u,v]", extension_failure),
    ("square-gaussian-factor", "f^2 has principal content while f is not Gaussian", square_gaussian_factor),
    ("reduced-ring-defect", "content defect over k[s,t]/(st) with witness s^2", reduced_ring_defect),
    ("power-substitution", "c(f(X^n)g(X^n)) = c(fg) and content invariances", power_substitution),
    ("nu-bound", "nu(c(f)^(2^m)) against deg f + 1 along the squaring track", nu_bound),
    ("dedekind-mertens", "exponent identity and radical equality", dedekind_mertens),
    ("invertibility-crosscheck", "invertible content agrees with the generic test on domains", invertibility_crosscheck),
];

pub fn check_anchors() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.0).collect()
}

fn run_one(opts: &VerifyOptions, anchor: &'static str, description: &'static str, f: CheckFn) -> CheckResult {
    let start = Instant::now();
    let mut col = Collector::default();
    let outcome = f(opts, &mut col);
    let error = outcome.err().map(|e| e.to_string());
    let passed = error.is_none() && !col.0.is_empty() && col.0.iter().all(|s| s.passed);
    CheckResult { anchor, description, passed, subchecks: col.0, error, elapsed_ms: start.elapsed().as_millis() }
}

/// Runs every named check (concurrently; the report order is fixed).
pub fn verify_paper(opts: &VerifyOptions) -> VerifyReport {
    let checks: Vec<CheckResult> = std::thread::scope(|s| {
        let handles: Vec<_> = CHECKS
            .iter()
            .map(|&(anchor, description, f)| s.spawn(move || run_one(opts, anchor, description, f)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("check thread panicked")).collect()
    });
    let failed: Vec<&'static str> = checks.iter().filter(|c| !c.passed).map(|c| c.anchor).collect();
    VerifyReport { schema: SCHEMA, passed: failed.is_empty(), failed, checks }
}

fn lin(r: &RingSpec, a: &str, b: &str) -> Result<Polynomial> {
    Ok(&r.full_var(a)? + &(&r.full_var(b)? * &r.main_var()))
}

fn elem(r: &RingSpec, text: &str) -> Result<Polynomial> {
    Ok(parse_elements(text, r)?.remove(0))
}

fn ideal(r: &Arc<RingSpec>, text: &str) -> Result<IdealHandle> {
    IdealHandle::new(r, parse_elements(text, r)?)
}

fn extension_failure(opts: &VerifyOptions, c: &mut Collector) -> Result<()> {
    let r = parse_ring(&opts.example1_ring)?;
    let f = lin(&r, "s", "t")?;
    c.check("(s,t)^2 = 0 in R", ideal_power(&ideal(&r, "s, t")?, 2)?.is_zero());
    let ext = r.extend(&["u".to_string(), "v".to_string()])?;
    let (fx, g) = (f.map_into(ext.full())?, lin(&ext, "u", "v")?);
    let sv = elem(&ext, "s*v")?;
    let cfcg = ideal_product(&content(&ext, &fx)?, &content(&ext, &g)?)?;
    c.check("sv in c(s+tX) c(u+vX)", cfcg.is_member(&sv)?);
    let listed = ideal(&ext, "s*u, t*v, s*v + t*u")?;
    c.check("c(fg) = (su, tv, sv+tu)", content(&ext, &ext.mul(&fx, &g))?.equals(&listed)?);
    c.check("sv not in (su, tv, sv+tu)", !listed.is_member(&sv)?);
    let defect = content_product_defect(&ext, &fx, &g)?;
    c.check("defect witness over R[u,v] is sv", defect.witness.as_ref() == Some(&sv));
    c.check("generic test at degree 1 does not certify", !gaussian_generic(&r, &f, 1)?.is_certified());
    c.check("no multiplier over R itself exposes a defect", find_witness(&r, &f, 1)?.is_none());
    Ok(())
}

fn square_gaussian_factor(_: &VerifyOptions, c: &mut Collector) -> Result<()> {
    let r = catalog::ring(catalog::EXAMPLE2_RING);
    let f = lin(&r, "a", "b")?;
    let f2 = r.mul(&f, &f);
    let c2 = content(&r, &f2)?;
    c.check("c(f^2) = (b^2)", c2.equals(&ideal(&r, "b^2")?)?);
    let v2 = gaussian_status_domain(&r, &f2)?;
    c.check("f^2 certified Gaussian by principal content", v2.is_certified() && v2.method == GaussianMethod::PrincipalContent);
    let ab = elem(&r, "a*b")?;
    let cf = content(&r, &f)?;
    c.check("ab in c(f)^2", ideal_power(&cf, 2)?.is_member(&ab)?);
    c.check("ab not in c(f^2)", !c2.is_member(&ab)?);
    let v = gaussian_status_domain(&r, &f)?;
    let w_ok = match &v.witness {
        Some(w) => w.verify(&r, &f)?,
        None => false,
    };
    c.check("f non-Gaussian with a re-verified witness", v.status == GaussianStatus::NonGaussian && w_ok);
    Ok(())
}

fn reduced_ring_defect(_: &VerifyOptions, c: &mut Collector) -> Result<()> {
    let free = catalog::ring("QQ[s,t]");
    c.check("s^2 not in (st, s^2+t^2) in k[s,t]", !ideal(&free, "s*t, s^2 + t^2")?.is_member(&elem(&free, "s^2")?)?);
    let r = catalog::ring(catalog::REDUCED_RING);
    let (f, g) = (lin(&r, "s", "t")?, lin(&r, "t", "s")?);
    let d = content_product_defect(&r, &f, &g)?;
    c.check("c(fg) contained in c(f)c(g)", d.containment);
    c.check("defect witness is s^2", d.witness == Some(elem(&r, "s^2")?));
    let w = find_witness(&r, &f, 1)?;
    c.check(
        "witness search reaches the swapped polynomial",
        w.as_ref().is_some_and(|w| w.g == g) && w.map(|w| w.verify(&r, &f)).transpose()?.unwrap_or(false),
    );
    Ok(())
}

fn power_substitution(_: &VerifyOptions, c: &mut Collector) -> Result<()> {
    let plane = catalog::ring(catalog::PLANE);
    let f = lin(&plane, "x", "y")?;
    let rep = power_substitution_check(&plane, &f, 2, &[lin(&plane, "y", "x")?])?;
    c.check("x+yX, n=2: substitution identity", rep.holds());
    let f2 = substitute_power(&f, 2)?;
    c.check(
        "f and f(X^2) both admit witnesses",
        find_witness(&plane, &f, 1)?.is_some() && find_witness(&plane, &f2, 2)?.is_some(),
    );
    let principal = lin(&plane, "x", "x")?;
    let mut gen = RandomPolys::new(0x5eed_0001);
    let samples: Vec<Polynomial> = (0..4).map(|_| gen.poly(&plane, Shape::new(2, 1, 2, true))).collect();
    let rep = power_substitution_check(&plane, &principal, 3, &samples)?;
    c.check("principal content, n=3: products stay multiplicative", rep.holds() && rep.multiplicative.is_some());

    let mut ok = true;
    let mut invariant = true;
    for (i, (_, r)) in catalog::sweep_rings().into_iter().enumerate() {
        let shape = Shape::new(2, 1, 2, i % 2 == 0);
        for k in 0..2 {
            let f = gen.poly(&r, shape);
            let g = gen.poly(&r, shape);
            let n = 1 + (i + k) % 3;
            if r.is_zero(&r.mul(&f, &g)) {
                continue;
            }
            ok &= power_substitution_check(&r, &f, n, &[g])?.identity.iter().all(|&b| b);
            let cf = content(&r, &f)?;
            let len = MainVarView::of(&r.reduce(&f))?.coefficients().len();
            let rev: Vec<usize> = (0..len).rev().collect();
            invariant &= cf.equals(&content(&r, &substitute_power(&f, n)?)?)?
                && cf.equals(&content(&r, &negate_main_var(&f)?)?)?
                && cf.equals(&content(&r, &permute_coefficients(&r.reduce(&f), &rev)?)?)?;
        }
    }
    c.check("random sweep: c(f(X^n)g(X^n)) = c(fg)", ok);
    c.check("random sweep: content invariant under X^n, -X, permutation", invariant);
    Ok(())
}

fn nu_bound(_: &VerifyOptions, c: &mut Collector) -> Result<()> {
    let plane = catalog::ring(catalog::PLANE);
    let f = lin(&plane, "x", "y")?;
    let m = crate::rings::LocalityWitness::new(ideal(&plane, "x, y")?)?;
    let seq = nu_sequence(&plane, &f, &m, 3)?;
    c.check("x+yX at (x,y): nu = 2, 3, 5, 9", seq.values() == [2, 3, 5, 9]);
    c.check("x+yX: bound deg f + 1 first fails at m = 1", seq.first_violation == Some(1));
    let v = gaussian_status_domain(&plane, &f)?;
    c.check(
        "x+yX: verdict non-Gaussian with re-verified witness",
        v.status == GaussianStatus::NonGaussian && v.witness.map(|w| w.verify(&plane, &f)).transpose()?.unwrap_or(false),
    );
    for e in DOMAIN_EXAMPLES {
        let r = e.ring();
        let f = e.poly(&r);
        let Some(w) = e.witness(&r) else { continue };
        if !gaussian_status_domain(&r, &f)?.is_certified() {
            continue;
        }
        let seq = nu_sequence(&r, &f, &w?, 3)?;
        c.check(
            format!("{} over {}: nu <= deg f + 1 for m <= 3", e.poly, e.ring),
            seq.first_violation.is_none(),
        );
        c.check(
            format!("{} over {}: squaring track matches c(f)^(2^m)", e.poly, e.ring),
            seq.steps.iter().all(|s| s.track.content_matches_power && s.track.degree_preserved && s.track.identity_holds),
        );
    }
    Ok(())
}

fn dedekind_mertens(_: &VerifyOptions, c: &mut Collector) -> Result<()> {
    let r = catalog::ring("QQ[s,t,u,v]");
    c.check("s+tX, u+vX", dedekind_mertens_check(&r, &lin(&r, "s", "t")?, &lin(&r, "u", "v")?)?.holds());
    let mut gen = RandomPolys::new(0x5eed_0002);
    for (i, (name, r)) in catalog::sweep_rings().into_iter().enumerate() {
        let shape = Shape::new(2, 1, 2, i % 2 == 1);
        let mut ok = true;
        for _ in 0..2 {
            let f = gen.poly(&r, shape);
            let g = gen.poly(&r, shape);
            ok &= dedekind_mertens_check(&r, &f, &g)?.holds();
        }
        c.check(format!("random pairs over {name}"), ok);
    }
    Ok(())
}

fn invertibility_crosscheck(_: &VerifyOptions, c: &mut Collector) -> Result<()> {
    for e in DOMAIN_EXAMPLES {
        let r = e.ring();
        let f = e.poly(&r);
        let domain = gaussian_status_domain(&r, &f)?;
        let generic = gaussian_generic(&r, &f, domain.degree)?;
        let mut ok = domain.is_certified() == generic.is_certified();
        for v in [&domain, &generic] {
            if let Some(w) = &v.witness {
                ok &= w.verify(&r, &f)?;
            }
        }
        c.check(format!("{} over {}", e.poly, e.ring), ok);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unmodified_catalog_passes() {
        let rep = verify_paper(&VerifyOptions::default());
        assert!(rep.passed, "{}", rep.to_text());
        assert_eq!(rep.checks.len(), CHECKS.len());
    }

    #[test]
    fn mistyped_example_ring_fails_that_anchor_only() {
        let rep = verify_paper(&VerifyOptions { example1_ring: "GF(2)[s,t]".into() });
        assert_eq!(rep.failed, vec!["extension-failure"]);
        assert!(rep.to_text().contains("FAIL extension-failure"));
    }

    #[test]
    fn text_report_is_deterministic() {
        let a = verify_paper(&VerifyOptions::default()).to_text();
        let b = verify_paper(&VerifyOptions::default()).to_text();
        assert_eq!(a, b);
    }
}
