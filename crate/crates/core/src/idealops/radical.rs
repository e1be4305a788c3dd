//! Radicals: squarefree eliminants in dimension zero, reduction to dimension
//! zero over a maximal independent set otherwise.

use std::fmt;

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::{Monomial, MonomialOrder, OrderBlock, Polynomial, RingRef};

use super::univariate::squarefree_part;
use super::{intersect, radical_membership, saturation};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RadicalStrategy {
    #[default]
    Auto,
    ZeroDim,
    General,
}

impl RadicalStrategy {
    pub fn name(self) -> &'static str {
        match self {
            RadicalStrategy::Auto => "auto",
            RadicalStrategy::ZeroDim => "zerodim",
            RadicalStrategy::General => "general",
        }
    }
}

impl fmt::Display for RadicalStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RadicalStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(RadicalStrategy::Auto),
            "zerodim" => Ok(RadicalStrategy::ZeroDim),
            "general" => Ok(RadicalStrategy::General),
            other => Err(Error::StrategyFailed {
                strategy: other.to_string(),
                reason: "unknown strategy".into(),
            }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RadicalOptions {
    pub strategy: RadicalStrategy,
    /// Recursion limit for the positive-dimensional reduction.
    pub max_depth: usize,
    /// Check the output against the input by radical membership.
    pub certify: bool,
}

impl Default for RadicalOptions {
    fn default() -> Self {
        RadicalOptions {
            strategy: RadicalStrategy::Auto,
            max_depth: 16,
            certify: false,
        }
    }
}

/// `√I` with the given strategy and default limits.
pub fn radical<F: Field>(ideal: &Ideal<F>, strategy: RadicalStrategy) -> Result<Ideal<F>> {
    radical_with(
        ideal,
        &RadicalOptions {
            strategy,
            ..RadicalOptions::default()
        },
    )
}

pub fn radical_with<F: Field>(ideal: &Ideal<F>, opts: &RadicalOptions) -> Result<Ideal<F>> {
    let out = radical_rec(ideal, 0, opts)?;
    if opts.certify {
        certify(ideal, &out, opts.strategy)?;
    }
    Ok(out)
}

fn certify<F: Field>(ideal: &Ideal<F>, out: &Ideal<F>, strategy: RadicalStrategy) -> Result<()> {
    let fail = |reason: &str| Error::StrategyFailed {
        strategy: strategy.name().into(),
        reason: reason.into(),
    };
    if !out.contains_ideal(ideal) {
        return Err(fail("output does not contain the input"));
    }
    if !out.basis().iter().all(|g| radical_membership(g, ideal)) {
        return Err(fail("output generator outside the radical"));
    }
    Ok(())
}

fn radical_rec<F: Field>(
    ideal: &Ideal<F>,
    depth: usize,
    opts: &RadicalOptions,
) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    if ideal.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let Some(u) = ideal.independent_set() else {
        return Ok(Ideal::unit(ring));
    };
    if depth > opts.max_depth {
        return Err(Error::StrategyFailed {
            strategy: opts.strategy.name().into(),
            reason: format!("recursion depth exceeded {}", opts.max_depth),
        });
    }
    if !u.is_empty() && opts.strategy == RadicalStrategy::ZeroDim {
        return Err(Error::StrategyFailed {
            strategy: "zerodim".into(),
            reason: format!("ideal has dimension {}", u.len()),
        });
    }
    let xs: Vec<usize> = (0..ring.nvars()).filter(|v| !u.contains(v)).collect();

    let mut parts = Vec::with_capacity(xs.len());
    for &x in &xs {
        let g = eliminant(ideal, &xs, x, &u)?;
        check_characteristic(ring, g.degree_in(x))?;
        parts.push(squarefree_part(&g, x)?);
    }
    let j = ideal.with(parts).reduced();
    if u.is_empty() {
        return Ok(j);
    }

    let h_j = leading_coefficient_product(&j, &xs, &u)?;
    let contracted = if h_j.is_constant() {
        j
    } else {
        saturation(&j, &h_j)?
    };
    let h_i = leading_coefficient_product(ideal, &xs, &u)?;
    if h_i.is_constant() {
        return Ok(contracted);
    }
    let rest = radical_rec(&ideal.with([h_i]), depth + 1, opts)?;
    intersect(&contracted, &rest)
}

fn check_characteristic<F: Field>(ring: &RingRef<F>, degree: u32) -> Result<()> {
    let p = ring.characteristic();
    if p != 0 && p <= u64::from(degree) {
        return Err(Error::UnsupportedCharacteristic {
            characteristic: p,
            degree: degree as usize,
        });
    }
    Ok(())
}

fn block(vars: Vec<usize>, order: MonomialOrder) -> Option<OrderBlock> {
    (!vars.is_empty()).then_some(OrderBlock { vars, order })
}

/// Element of `I ∩ k[u, x]` of least positive degree in `x`.
fn eliminant<F: Field>(
    ideal: &Ideal<F>,
    xs: &[usize],
    x: usize,
    u: &[usize],
) -> Result<Polynomial<F>> {
    let ring = ideal.ring();
    let others: Vec<usize> = xs.iter().copied().filter(|&v| v != x).collect();
    let blocks: Vec<OrderBlock> = [
        block(others.clone(), MonomialOrder::DegRevLex),
        block(vec![x], MonomialOrder::Lex),
        block(u.to_vec(), MonomialOrder::DegRevLex),
    ]
    .into_iter()
    .flatten()
    .collect();
    let elim_ring = ring.with_order(MonomialOrder::Block(blocks))?;
    let gb = ideal.in_ring(&elim_ring);
    gb.basis()
        .iter()
        .filter(|g| others.iter().all(|&v| !g.uses_var(v)) && g.uses_var(x))
        .min_by_key(|g| (g.degree_in(x), g.len()))
        .map(|g| g.reorder(ring))
        .ok_or_else(|| Error::StrategyFailed {
            strategy: "general".into(),
            reason: "no eliminant for a dependent variable".into(),
        })
}

/// Product of the distinct leading coefficients in `k[u]` of a Gröbner basis
/// for the order with `xs` ahead of `u`.
fn leading_coefficient_product<F: Field>(
    ideal: &Ideal<F>,
    xs: &[usize],
    u: &[usize],
) -> Result<Polynomial<F>> {
    let ring = ideal.ring();
    let order = MonomialOrder::Block(vec![
        OrderBlock {
            vars: xs.to_vec(),
            order: MonomialOrder::DegRevLex,
        },
        OrderBlock {
            vars: u.to_vec(),
            order: MonomialOrder::DegRevLex,
        },
    ]);
    let block_ring = ring.with_order(order)?;
    let gb = ideal.in_ring(&block_ring);
    let mut seen: Vec<Polynomial<F>> = Vec::new();
    for g in gb.basis() {
        let g = g.reorder(ring);
        let lc = coefficient_in(&g, xs, &block_ring);
        let lc = lc.monic();
        if !lc.is_constant() && !seen.contains(&lc) {
            seen.push(lc);
        }
    }
    Ok(seen.iter().fold(Polynomial::one(ring), |acc, c| &acc * c))
}

/// Sum of the terms of `g` sharing the leading `xs`-part, with that part
/// removed.
fn coefficient_in<F: Field>(
    g: &Polynomial<F>,
    xs: &[usize],
    block_ring: &RingRef<F>,
) -> Polynomial<F> {
    let ring = g.ring();
    let lead = g
        .reorder(block_ring)
        .leading_monomial()
        .cloned()
        .expect("nonzero");
    let key = |m: &Monomial| xs.iter().map(|&v| m.exponents()[v]).collect::<Vec<u32>>();
    let want = key(&lead);
    let terms = g
        .terms()
        .iter()
        .filter(|(m, _)| key(m) == want)
        .map(|(m, c)| {
            let mut e = m.exponents().to_vec();
            for &v in xs {
                e[v] = 0;
            }
            (Monomial::new(e), c.clone())
        });
    Polynomial::from_terms(ring, terms)
}
