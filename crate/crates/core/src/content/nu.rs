use std::sync::Arc;

use serde::Serialize;

use crate::content::{canonical, content, degree, require_nonzero};
use crate::error::Result;
use crate::groebner::IdealHandle;
use crate::poly::{contract_power, even_odd_split, negate_main_var, substitute_power, Polynomial};
use crate::rings::{ideal_power, min_generators_local, LocalityWitness, RingSpec};

/// One step `h_m` of the squaring track `h_{m+1} = g_0² − X·g_1²`.
#[derive(Clone, Debug, Serialize)]
pub struct TrackStep {
    pub m: usize,
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub h: Polynomial,
    pub degree: Option<usize>,
    pub degree_preserved: bool,
    /// `h_m` equals `h_{m-1}(X)·h_{m-1}(−X)` with `X²` pulled back to `X`.
    pub identity_holds: bool,
    /// `c(h_m) = c(f)^(2^m)`.
    pub content_matches_power: bool,
}

fn next_h(ring: &RingSpec, h: &Polynomial) -> Result<(Polynomial, bool)> {
    let (g0, g1) = even_odd_split(h)?;
    let x = ring.main_var();
    let next = ring.reduce(&(&(&g0 * &g0) - &(&x * &(&g1 * &g1))));
    let via_conjugate = contract_power(&ring.mul(h, &negate_main_var(h)?), 2)?;
    let identity = ring.reduce(&via_conjugate) == next
        && ring.reduce(&substitute_power(&next, 2)?) == ring.mul(h, &negate_main_var(h)?);
    Ok((next, identity))
}

fn track(ring: &Arc<RingSpec>, f: &Polynomial, mmax: usize) -> Result<(Vec<TrackStep>, Vec<IdealHandle>)> {
    let f = require_nonzero(ring, f, "f")?;
    let deg = degree(ring, &f)?;
    let mut powers = vec![content(ring, &f)?];
    let mut steps = Vec::with_capacity(mmax + 1);
    let mut h = f.clone();
    let mut identity_holds = true;
    for m in 0..=mmax {
        if m > 0 {
            let (next, ok) = next_h(ring, &h)?;
            h = next;
            identity_holds = ok;
            let prev = powers.last().unwrap();
            powers.push(ideal_power(prev, 2)?);
        }
        let d = degree(ring, &h)?;
        steps.push(TrackStep {
            m,
            degree: d,
            degree_preserved: d == deg,
            identity_holds,
            content_matches_power: content(ring, &h)?.equals(&powers[m])?,
            h: h.clone(),
        });
    }
    Ok((steps, powers))
}

/// The squaring track `h_0 = f, …, h_mmax`, each step checked.
pub fn squaring_track(ring: &Arc<RingSpec>, f: &Polynomial, mmax: usize) -> Result<Vec<TrackStep>> {
    Ok(track(ring, f, mmax)?.0)
}

#[derive(Clone, Debug, Serialize)]
pub struct NuStep {
    pub m: usize,
    /// `ν(c(f)^(2^m))` at the witness point.
    pub nu: usize,
    pub within_bound: bool,
    pub track: TrackStep,
}

#[derive(Clone, Debug, Serialize)]
pub struct NuSequence {
    #[serde(serialize_with = "crate::report::ser_poly")]
    pub f: Polynomial,
    pub degree: usize,
    /// `deg f + 1`
    pub bound: usize,
    pub steps: Vec<NuStep>,
    /// First `m` with `ν > deg f + 1`; its presence rules out Gaussian-ness.
    pub first_violation: Option<usize>,
}

impl NuSequence {
    pub fn values(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.nu).collect()
    }
}

/// `ν(c(f)^(2^m))` at `M` for `m = 0..=mmax`, alongside the squaring track.
pub fn nu_sequence(ring: &Arc<RingSpec>, f: &Polynomial, at: &LocalityWitness, mmax: usize) -> Result<NuSequence> {
    let f = canonical(ring, &require_nonzero(ring, f, "f")?)?;
    let deg = degree(ring, &f)?.unwrap_or(0);
    let (track, powers) = track(ring, &f, mmax)?;
    let mut steps = Vec::with_capacity(track.len());
    for (t, p) in track.into_iter().zip(&powers) {
        let nu = min_generators_local(p, at)?;
        steps.push(NuStep { m: t.m, nu, within_bound: nu <= deg + 1, track: t });
    }
    let first_violation = steps.iter().find(|s| !s.within_bound).map(|s| s.m);
    Ok(NuSequence { f, degree: deg, bound: deg + 1, steps, first_violation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::poly::PolyRing;
    use crate::rings::make_quotient;

    fn lin(r: &RingSpec, a: &Polynomial, b: &Polynomial) -> Polynomial {
        &r.embed(a).unwrap() + &(&r.embed(b).unwrap() * &r.main_var())
    }

    #[test]
    fn plane_linear_form_sequence() {
        let r = RingSpec::polynomial_ring(Field::Rational, &["x", "y"], true).unwrap();
        let (x, y) = (r.base_var("x").unwrap(), r.base_var("y").unwrap());
        let m = LocalityWitness::new(IdealHandle::new(&r, vec![x.clone(), y.clone()]).unwrap()).unwrap();
        let seq = nu_sequence(&r, &lin(&r, &x, &y), &m, 3).unwrap();
        assert_eq!(seq.values(), vec![2, 3, 5, 9]);
        assert_eq!(seq.first_violation, Some(1));
        assert!(seq.steps.iter().all(|s| s.track.identity_holds && s.track.degree_preserved));
        // the track leaves the ideal powers once the content stops being locally principal
        assert!(!seq.steps[1].track.content_matches_power);
        assert_eq!(seq.steps[1].track.h.to_string(), "-y^2*X + x^2");
    }

    #[test]
    fn circle_sequence_stays_principal() {
        let base = PolyRing::grevlex(Field::Rational, &["x", "y"]).unwrap();
        let x = Polynomial::var(&base, "x").unwrap();
        let y = Polynomial::var(&base, "y").unwrap();
        let one = Polynomial::one(&base);
        let r = make_quotient(&base, vec![&(&(&x * &x) + &(&y * &y)) - &one], true).unwrap();
        let p = &one - &x;
        let m = LocalityWitness::new(IdealHandle::new(&r, vec![p.clone(), y.clone()]).unwrap()).unwrap();
        let seq = nu_sequence(&r, &lin(&r, &p, &y), &m, 3).unwrap();
        assert_eq!(seq.values(), vec![1, 1, 1, 1]);
        assert_eq!(seq.first_violation, None);
        assert!(seq.steps.iter().all(|s| s.track.content_matches_power && s.track.degree_preserved));
    }

    #[test]
    fn line_principal_content() {
        let r = RingSpec::polynomial_ring(Field::Rational, &["x"], true).unwrap();
        let x = r.base_var("x").unwrap();
        let m = LocalityWitness::new(IdealHandle::principal(&r, x.clone()).unwrap()).unwrap();
        let f = lin(&r, &x, &(&x * &x));
        let seq = nu_sequence(&r, &f, &m, 3).unwrap();
        assert_eq!(seq.values(), vec![1, 1, 1, 1]);
        assert!(seq.steps.iter().all(|s| s.track.content_matches_power));
    }
}
