//! Independent checks on a finished normalization.

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::groebner::{eliminate, Ideal};
use crate::idealops::{annihilator, intersect, radical_membership, RadicalStrategy};
use crate::polyring::{same_ring, Polynomial, RingRef};

use super::steps::{endomorphism_ring, pick_nzd_or_split, test_ideals, SplitDecision};
use super::{AffinePresentation, NormalizationResult};

/// Which checks ran and on how many components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub components: usize,
    pub adjoined: usize,
    pub checks: Vec<char>,
}

fn fail(check: char, detail: impl Into<String>) -> Error {
    Error::VerificationFailed {
        check,
        detail: detail.into(),
    }
}

/// Runs, in order: (a) a fresh fixed-point check per component; (b) the
/// contraction of each component contains the original ideal and the
/// contractions together lie in its radical; (c) each adjoined variable has
/// a monic quadratic in the final ideal; (d) each denominator has zero
/// annihilator at its level.
pub fn verify_result<F: Field>(
    r0: &AffinePresentation<F>,
    result: &NormalizationResult<F>,
) -> Result<VerificationReport> {
    if result.components.is_empty() {
        return Err(fail('a', "no components"));
    }
    for c in &result.components {
        check_fixed_point(&c.presentation).map_err(|e| match e {
            Error::VerificationFailed { .. } => e,
            other => fail('a', format!("component c{}: {other}", c.id)),
        })?;
    }

    let base = r0.ring();
    let mut meet: Option<Ideal<F>> = None;
    for c in &result.components {
        let contracted = contraction(&c.presentation, base)?;
        if let Some(g) = r0
            .defining()
            .generators()
            .iter()
            .find(|g| !contracted.contains(g))
        {
            return Err(fail(
                'b',
                format!("component c{} loses the relation {g}", c.id),
            ));
        }
        meet = Some(match meet {
            None => contracted,
            Some(m) => intersect(&m, &contracted)?,
        });
    }
    let meet = meet.expect("at least one component");
    if let Some(g) = meet
        .basis()
        .iter()
        .find(|g| !radical_membership(g, r0.defining()))
    {
        return Err(fail(
            'b',
            format!("{g} vanishes on every component but not on the input"),
        ));
    }

    let mut adjoined = 0;
    for c in &result.components {
        let p = &c.presentation;
        for v in p.adjoined() {
            let q = lift_to(&v.quadratic, p.ring());
            let idx = p
                .ring()
                .var_index(&v.name)
                .ok_or_else(|| fail('c', format!("{} missing", v.name)))?;
            let coeffs = q.univariate_coeffs(idx);
            if coeffs.len() != 3 || !coeffs[2].is_one() {
                return Err(fail('c', format!("{} has no monic quadratic", v.name)));
            }
            if !p.defining().contains(&q) {
                return Err(fail(
                    'c',
                    format!("quadratic for {} not in the final ideal", v.name),
                ));
            }
            let ann = annihilator(&v.denominator, &v.base)?;
            if !v.base.is_zero_ideal(&ann) {
                return Err(fail(
                    'd',
                    format!("denominator of {} is a zerodivisor", v.name),
                ));
            }
            adjoined += 1;
        }
    }
    Ok(VerificationReport {
        components: result.components.len(),
        adjoined,
        checks: vec!['a', 'b', 'c', 'd'],
    })
}

fn check_fixed_point<F: Field>(p: &AffinePresentation<F>) -> Result<()> {
    let (_, test) = test_ideals(p, RadicalStrategy::Auto)?;
    if test.is_unit() {
        return Ok(());
    }
    match pick_nzd_or_split(p, &test)? {
        SplitDecision::Split(f, _) => Err(fail(
            'a',
            format!("{f} is a zerodivisor in a final component"),
        )),
        SplitDecision::NonZeroDivisor(f) => {
            let endo = endomorphism_ring(p, &test, &f)?;
            if endo.t() == 0 {
                Ok(())
            } else {
                Err(fail(
                    'a',
                    format!("Hom(I,I) is larger than the ring (t = {})", endo.t()),
                ))
            }
        }
    }
}

/// Moves a polynomial into a ring that extends its own by appended variables.
fn lift_to<F: Field>(p: &Polynomial<F>, ring: &RingRef<F>) -> Polynomial<F> {
    if same_ring(p.ring(), ring) {
        return p.clone();
    }
    let map: Vec<usize> = (0..p.ring().nvars()).collect();
    p.embed(ring, &map)
}

/// The final ideal with the adjoined variables eliminated, in the original
/// ring.
fn contraction<F: Field>(p: &AffinePresentation<F>, base: &RingRef<F>) -> Result<Ideal<F>> {
    let ring = p.ring();
    let n0 = base.nvars();
    if ring.vars()[..n0] != base.vars()[..] {
        return Err(fail('b', "component does not extend the original ring"));
    }
    let extra: Vec<usize> = (n0..ring.nvars()).collect();
    let elim = eliminate(p.defining(), &extra)?;
    let mut back: Vec<usize> = (0..n0).collect();
    back.extend(std::iter::repeat_n(0, extra.len()));
    let gens = elim
        .generators()
        .iter()
        .map(|g| g.embed(base, &back))
        .collect();
    Ok(Ideal::new(base, gens))
}
