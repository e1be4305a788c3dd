//! Shared helpers for the integration tests: small random ideals and the
//! property checks run by the property and acceptance suites.

#![allow(dead_code)]

use std::path::PathBuf;

use closure_kit::groebner::{buchberger, syzygies};
use closure_kit::idealops::{
    annihilator, ideal_quotient, intersect, radical, radical_membership, QuotientRingContext,
};
use closure_kit::polyring::divide_with_remainder;
use closure_kit::{
    Ideal, Monomial, MonomialOrder, PolyRing, Polynomial, RadicalStrategy, Rational, RingRef,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub type Poly = Polynomial<Rational>;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

pub fn ring(vars: &[&str], order: MonomialOrder) -> RingRef<Rational> {
    PolyRing::new((), vars.iter().map(|s| s.to_string()).collect(), order).unwrap()
}

pub fn var(r: &RingRef<Rational>, name: &str) -> Poly {
    Polynomial::var(r, r.var_index(name).unwrap())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Raw polynomial data: exponent vectors and small integer coefficients.
#[derive(Clone, Debug)]
pub struct PolyData(pub Vec<(Vec<u32>, i64)>);

impl PolyData {
    pub fn build(&self, r: &RingRef<Rational>) -> Poly {
        Polynomial::from_terms(
            r,
            self.0
                .iter()
                .map(|(e, c)| (Monomial::new(e.clone()), int(*c))),
        )
    }
}

/// A polynomial in `nvars` variables of total degree at most `max_deg`.
pub fn poly_data(nvars: usize, max_deg: u32, max_terms: usize) -> impl Strategy<Value = PolyData> {
    let term =
        (prop::collection::vec(0..=max_deg, nvars), -3i64..=3).prop_map(move |(mut e, c)| {
            while e.iter().sum::<u32>() > max_deg {
                let k = e.iter().position(|&x| x > 0).unwrap();
                e[k] -= 1;
            }
            (e, c)
        });
    prop::collection::vec(term, 1..=max_terms).prop_map(PolyData)
}

/// Number of variables and generators of a random ideal, at most three
/// variables and degree four.
#[derive(Clone, Debug)]
pub struct IdealData {
    pub nvars: usize,
    pub gens: Vec<PolyData>,
    pub extra: PolyData,
}

pub fn ideal_data(max_gens: usize, max_terms: usize) -> impl Strategy<Value = IdealData> {
    (1usize..=3).prop_flat_map(move |n| {
        (
            prop::collection::vec(poly_data(n, 4, max_terms), 1..=max_gens),
            poly_data(n, 4, max_terms),
        )
            .prop_map(move |(gens, extra)| IdealData {
                nvars: n,
                gens,
                extra,
            })
    })
}

const NAMES: [&str; 3] = ["x", "y", "z"];

impl IdealData {
    pub fn ring(&self, order: MonomialOrder) -> RingRef<Rational> {
        ring(&NAMES[..self.nvars], order)
    }

    pub fn gens(&self, r: &RingRef<Rational>) -> Vec<Poly> {
        self.gens
            .iter()
            .map(|g| g.build(r))
            .filter(|g| !g.is_zero())
            .collect()
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

/// `p = sum q_i d_i + r` and no term of `r` is divisible by a leading monomial.
pub fn prop_division(d: &IdealData) -> Result<(), TestCaseError> {
    let r = d.ring(MonomialOrder::DegRevLex);
    let divisors = d.gens(&r);
    if divisors.is_empty() {
        return Ok(());
    }
    let p = d.extra.build(&r);
    for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
        let (qs, rem) = divide_with_remainder(&p, &divisors, &order).unwrap();
        let mut back = rem.clone();
        for (q, g) in qs.iter().zip(&divisors) {
            back = &back + &(q * g);
        }
        check(back == p, || {
            format!("re-expansion failed for {p} by {divisors:?}")
        })?;
        let lr = r.with_order(order.clone()).unwrap();
        let leads: Vec<Monomial> = divisors
            .iter()
            .map(|g| g.reorder(&lr).leading_monomial().unwrap().clone())
            .collect();
        for (m, _) in rem.terms() {
            check(!leads.iter().any(|l| l.divides(m)), || {
                format!("remainder term divisible in {rem}")
            })?;
        }
    }
    Ok(())
}

/// Recomputing a reduced basis from itself returns it unchanged, and the
/// basis generates the input ideal.
pub fn prop_buchberger_idempotent(d: &IdealData) -> Result<(), TestCaseError> {
    for order in [MonomialOrder::DegRevLex, MonomialOrder::Lex] {
        let r = d.ring(order.clone());
        let gens = d.gens(&r);
        let gb = buchberger(&r, &gens, &order).unwrap();
        let again = buchberger(&r, gb.basis(), &order).unwrap();
        check(again.basis() == gb.basis(), || {
            format!("basis changed: {gb} vs {again}")
        })?;
        for g in &gens {
            check(gb.contains(g), || format!("{g} not in its own ideal"))?;
        }
        let original = Ideal::new(&r, gens.clone());
        for g in gb.basis() {
            check(original.contains(g), || {
                format!("basis element {g} outside the ideal")
            })?;
        }
    }
    Ok(())
}

/// Membership of a combination and of a random polynomial agrees across
/// monomial orders.
pub fn prop_membership_orders(d: &IdealData) -> Result<(), TestCaseError> {
    let base = d.ring(MonomialOrder::DegRevLex);
    let gens = d.gens(&base);
    let extra = d.extra.build(&base);
    let combo = gens
        .iter()
        .enumerate()
        .fold(Polynomial::zero(&base), |acc, (k, g)| {
            let m = if k % 2 == 0 {
                extra.clone()
            } else {
                Polynomial::from_i64(&base, k as i64 + 1)
            };
            &acc + &(&m * g)
        });
    let orders = [MonomialOrder::DegRevLex, MonomialOrder::Lex];
    let mut answers = Vec::new();
    for order in orders {
        let r = base.with_order(order).unwrap();
        let ideal = Ideal::new(&r, gens.iter().map(|g| g.reorder(&r)).collect());
        check(ideal.contains(&combo.reorder(&r)), || {
            format!("combination {combo} not a member")
        })?;
        answers.push(ideal.contains(&extra.reorder(&r)));
    }
    check(answers.windows(2).all(|w| w[0] == w[1]), || {
        format!("orders disagree on {extra}")
    })
}

/// Every syzygy is a relation, over the polynomial ring and modulo the
/// first generator.
pub fn prop_syzygies(d: &IdealData) -> Result<(), TestCaseError> {
    let r = d.ring(MonomialOrder::DegRevLex);
    let gens = d.gens(&r);
    let zero = Ideal::zero(&r);
    let syz = syzygies(&gens, &zero).unwrap();
    for v in syz.vectors() {
        let sum = v
            .iter()
            .zip(&gens)
            .fold(Polynomial::zero(&r), |acc, (a, g)| &acc + &(a * g));
        check(sum.is_zero(), || {
            format!("{v:?} is not a syzygy of {gens:?}")
        })?;
    }
    let ambient = Ideal::new(&r, vec![d.extra.build(&r)]);
    let syz = syzygies(&gens, &ambient).unwrap();
    for v in syz.vectors() {
        let sum = v
            .iter()
            .zip(&gens)
            .fold(Polynomial::zero(&r), |acc, (a, g)| &acc + &(a * g));
        check(ambient.contains(&sum), || {
            format!("{v:?} is not a relation modulo {ambient}")
        })?;
    }
    Ok(())
}

/// `I ⊆ (I : J)`, `J (I : J) ⊆ I`, `f Ann(f) ⊆ D` and `(I : I) = (1)`.
pub fn prop_quotient_laws(d: &IdealData) -> Result<(), TestCaseError> {
    let r = d.ring(MonomialOrder::DegRevLex);
    let gens = d.gens(&r);
    if gens.is_empty() {
        return Ok(());
    }
    let i = Ideal::new(&r, gens.clone());
    let j = Ideal::new(&r, vec![d.extra.build(&r)]);
    let ctx = QuotientRingContext::new(Ideal::zero(&r));
    let q = ideal_quotient(&i, &j, &ctx).unwrap();
    check(q.contains_ideal(&i), || format!("{i} not inside {q}"))?;
    check(i.contains_ideal(&j.product(&q)), || {
        format!("J ({q}) not inside {i}")
    })?;
    let self_q = ideal_quotient(&i, &i, &ctx).unwrap();
    check(self_q.is_unit(), || format!("(I : I) = {self_q}"))?;

    let dctx = QuotientRingContext::new(Ideal::new(&r, vec![gens[0].clone()]));
    let f = d.extra.build(&r);
    let ann = annihilator(&f, &dctx).unwrap();
    for a in ann.basis() {
        check(dctx.is_zero(&(a * &f)), || {
            format!("{a} does not annihilate {f}")
        })?;
    }
    let meet = intersect(&i, &j).unwrap();
    check(i.contains_ideal(&meet) && j.contains_ideal(&meet), || {
        format!("{meet} not in both")
    })?;
    check(meet.contains_ideal(&i.product(&j)), || {
        "product not in the intersection".into()
    })
}

/// `I ⊆ √I`, generators of `√I` pass the membership test, `√√I = √I`.
pub fn prop_radical(d: &IdealData) -> Result<(), TestCaseError> {
    let r = d.ring(MonomialOrder::DegRevLex);
    let gens = d.gens(&r);
    let i = Ideal::new(&r, gens);
    let rad = radical(&i, RadicalStrategy::Auto).unwrap();
    check(rad.contains_ideal(&i), || format!("{i} not inside {rad}"))?;
    for g in rad.basis() {
        check(radical_membership(g, &i), || {
            format!("{g} not in the radical of {i}")
        })?;
    }
    let again = radical(&rad, RadicalStrategy::Auto).unwrap();
    check(again.same_ideal(&rad), || {
        format!("radical not idempotent: {rad} vs {again}")
    })
}

/// Runs one property over `cases` generated inputs.
pub fn run_property(
    cases: u32,
    strategy: impl Strategy<Value = IdealData>,
    prop: fn(&IdealData) -> Result<(), TestCaseError>,
) -> Result<(), String> {
    let config = ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    };
    let mut runner = proptest::test_runner::TestRunner::new_with_rng(
        config,
        proptest::test_runner::TestRng::deterministic_rng(
            proptest::test_runner::RngAlgorithm::ChaCha,
        ),
    );
    runner
        .run(&strategy, |d| prop(&d))
        .map_err(|e| e.to_string())
}
