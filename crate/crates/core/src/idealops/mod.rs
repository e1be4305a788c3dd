//! Ideal-theoretic operations in a quotient ring `k[x]/D`: quotients,
//! annihilators, saturation, intersection, radicals and the Jacobian test
//! ideal.

mod jacobian;
mod radical;
mod univariate;

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::groebner::{self, Ideal};
use crate::polyring::{same_ring, MonomialOrder, OrderBlock, Polynomial, RingRef};

pub use jacobian::{jacobian_test_ideal, minors};
pub use radical::{radical, radical_with, RadicalOptions, RadicalStrategy};

/// A presentation `R = k[x]/D`.
#[derive(Clone, Debug)]
pub struct QuotientRingContext<F: Field> {
    defining: Ideal<F>,
}

impl<F: Field> QuotientRingContext<F> {
    pub fn new(defining: Ideal<F>) -> Self {
        QuotientRingContext { defining }
    }

    pub fn ring(&self) -> &RingRef<F> {
        self.defining.ring()
    }

    pub fn defining(&self) -> &Ideal<F> {
        &self.defining
    }

    /// Canonical representative modulo `D`.
    pub fn reduce(&self, p: &Polynomial<F>) -> Polynomial<F> {
        self.defining.normal_form(p)
    }

    pub fn is_zero(&self, p: &Polynomial<F>) -> bool {
        self.defining.contains(p)
    }

    /// `I + D`.
    pub fn lift_ideal(&self, ideal: &Ideal<F>) -> Ideal<F> {
        ideal.sum(&self.defining)
    }

    /// Whether the ideal is zero in `R`, i.e. contained in `D`.
    pub fn is_zero_ideal(&self, ideal: &Ideal<F>) -> bool {
        self.defining.contains_ideal(ideal)
    }

    /// Nonzero generators of an ideal, reduced modulo `D`.
    pub fn reduced_generators(&self, ideal: &Ideal<F>) -> Vec<Polynomial<F>> {
        let mut out: Vec<Polynomial<F>> = Vec::new();
        for g in ideal.generators() {
            let r = self.reduce(g);
            if !r.is_zero() && !out.iter().any(|o| o.monic() == r.monic()) {
                out.push(r);
            }
        }
        out
    }
}

fn check<F: Field>(a: &RingRef<F>, b: &RingRef<F>) -> Result<()> {
    if same_ring(a, b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// The ring with one extra variable appended, and that variable's index.
/// The new variable forms a lex block ahead of the old order, so the ring
/// order eliminates it.
pub(crate) fn with_tag_variable<F: Field>(ring: &RingRef<F>) -> Result<(RingRef<F>, usize)> {
    let n = ring.nvars();
    let name = ring.fresh_name("_t");
    let order = MonomialOrder::Block(vec![
        OrderBlock {
            vars: vec![n],
            order: MonomialOrder::Lex,
        },
        OrderBlock {
            vars: (0..n).collect(),
            order: ring.order().clone(),
        },
    ]);
    Ok((ring.extend(&[name], order)?, n))
}

fn identity_map(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// Keeps the basis elements free of the tag variable and moves them back.
fn contract<F: Field>(big: &Ideal<F>, tag: usize, ring: &RingRef<F>) -> Ideal<F> {
    let mut back = identity_map(ring.nvars());
    back.push(0);
    let gens = big
        .basis()
        .iter()
        .filter(|g| !g.uses_var(tag))
        .map(|g| g.embed(ring, &back))
        .collect();
    Ideal::new(ring, gens)
}

/// `{h : h J ⊆ I + D}` as an ideal of the polynomial ring (it contains `D`).
pub fn ideal_quotient<F: Field>(
    i: &Ideal<F>,
    j: &Ideal<F>,
    ctx: &QuotientRingContext<F>,
) -> Result<Ideal<F>> {
    check(i.ring(), ctx.ring())?;
    check(j.ring(), ctx.ring())?;
    let base = ctx.lift_ideal(i);
    let mut acc: Option<Ideal<F>> = None;
    for g in j.generators() {
        let q = groebner::quotient_by_element(&base, g);
        acc = Some(match acc {
            None => q,
            Some(a) => intersect(&a, &q)?,
        });
    }
    Ok(acc.unwrap_or_else(|| Ideal::unit(ctx.ring())).reduced())
}

/// `Ann(f)` in `R = k[x]/D`, returned as its preimage `(D : f)`.
pub fn annihilator<F: Field>(f: &Polynomial<F>, ctx: &QuotientRingContext<F>) -> Result<Ideal<F>> {
    check(f.ring(), ctx.ring())?;
    Ok(groebner::quotient_by_element(ctx.defining(), f).reduced())
}

/// `I : f^∞`, by adjoining `t` with `1 - t f` and eliminating `t`.
pub fn saturation<F: Field>(i: &Ideal<F>, f: &Polynomial<F>) -> Result<Ideal<F>> {
    check(i.ring(), f.ring())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_unit() {
        return Ok(i.clone());
    }
    let ring = i.ring();
    let (big, t) = with_tag_variable(ring)?;
    let map = identity_map(ring.nvars());
    let mut gens: Vec<Polynomial<F>> = i.generators().iter().map(|g| g.embed(&big, &map)).collect();
    let tf = &Polynomial::var(&big, t) * &f.embed(&big, &map);
    gens.push(&Polynomial::one(&big) - &tf);
    Ok(contract(&Ideal::new(&big, gens), t, ring).reduced())
}

/// `I ∩ J` from `t I + (1 - t) J` with `t` eliminated.
pub fn intersect<F: Field>(i: &Ideal<F>, j: &Ideal<F>) -> Result<Ideal<F>> {
    check(i.ring(), j.ring())?;
    let ring = i.ring();
    if i.is_unit() {
        return Ok(j.clone());
    }
    if j.is_unit() {
        return Ok(i.clone());
    }
    let (big, t) = with_tag_variable(ring)?;
    let map = identity_map(ring.nvars());
    let tv = Polynomial::var(&big, t);
    let one_minus = &Polynomial::one(&big) - &tv;
    let mut gens: Vec<Polynomial<F>> = i
        .generators()
        .iter()
        .map(|g| &tv * &g.embed(&big, &map))
        .collect();
    gens.extend(
        j.generators()
            .iter()
            .map(|g| &one_minus * &g.embed(&big, &map)),
    );
    Ok(contract(&Ideal::new(&big, gens), t, ring).reduced())
}

/// `f ∈ √I`, decided by `1 ∈ I + (1 - t f)`.
pub fn radical_membership<F: Field>(f: &Polynomial<F>, i: &Ideal<F>) -> bool {
    if i.contains(f) {
        return true;
    }
    let ring = i.ring();
    let names = [ring.fresh_name("_t")];
    let big = ring
        .extend(&names, MonomialOrder::DegRevLex)
        .expect("fresh variable");
    let t = ring.nvars();
    let map = identity_map(ring.nvars());
    let mut gens: Vec<Polynomial<F>> = i.generators().iter().map(|g| g.embed(&big, &map)).collect();
    let tf = &Polynomial::var(&big, t) * &f.embed(&big, &map);
    gens.push(&Polynomial::one(&big) - &tf);
    Ideal::new(&big, gens).is_unit()
}
