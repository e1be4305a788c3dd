//! The individual steps of the loop.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::groebner::{eliminate, lift, syzygies, Ideal};
use crate::idealops::{annihilator, ideal_quotient, jacobian_test_ideal, radical, RadicalStrategy};
use crate::polyring::{Monomial, MonomialOrder, Polynomial};

use super::{AdjoinedVariable, AffinePresentation};

const CANDIDATE_SEED: u64 = 0x5eed_c105;
const CANDIDATE_COMBINATIONS: usize = 8;

/// `NonZeroDivisor(f)`, or `Split(f, Ann(f))` for a zerodivisor `f`.
#[derive(Clone, Debug)]
pub enum SplitDecision<F: Field> {
    NonZeroDivisor(Polynomial<F>),
    Split(Polynomial<F>, Ideal<F>),
}

/// `Hom(I, I) = (1/f) (a_0, .., a_t)` with `a_0 = f`, together with the
/// linear relations among the `a_j` and the structure constants of the
/// products `u_i u_j = sum_k b_ijk u_k`.
#[derive(Clone, Debug)]
pub struct EndoPresentation<F: Field> {
    pub f: Polynomial<F>,
    pub numerators: Vec<Polynomial<F>>,
    pub linear: Vec<Vec<Polynomial<F>>>,
    /// `(i, j, [b_ij0, .., b_ijt])` for `1 <= i <= j <= t`.
    pub quadratic: Vec<(usize, usize, Vec<Polynomial<F>>)>,
}

impl<F: Field> EndoPresentation<F> {
    pub fn t(&self) -> usize {
        self.numerators.len() - 1
    }
}

/// The Jacobian ideal and its radical; the radical's generators are listed
/// from the largest leading term down.
pub(crate) fn test_ideals<F: Field>(
    r: &AffinePresentation<F>,
    strategy: RadicalStrategy,
) -> Result<(Ideal<F>, Ideal<F>)> {
    let jac = jacobian_test_ideal(r.context())?;
    let rad = radical(&jac, strategy)?;
    let gens: Vec<Polynomial<F>> = rad.basis().iter().rev().cloned().collect();
    Ok((jac, Ideal::new(r.ring(), gens)))
}

/// Radical of the Jacobian ideal. The unit ideal means the ring is smooth.
pub fn choose_test_ideal<F: Field>(
    r: &AffinePresentation<F>,
    strategy: RadicalStrategy,
) -> Result<Ideal<F>> {
    Ok(test_ideals(r, strategy)?.1)
}

/// Scans the generators of `I` for a nonzerodivisor; otherwise splits on
/// the first generator. Random combinations are tried only if that split
/// would leave a zero factor.
pub fn pick_nzd_or_split<F: Field>(
    r: &AffinePresentation<F>,
    i: &Ideal<F>,
) -> Result<SplitDecision<F>> {
    let ctx = r.context();
    let gens = ctx.reduced_generators(i);
    if gens.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    for g in &gens {
        if ctx.is_zero_ideal(&annihilator(g, ctx)?) {
            return Ok(SplitDecision::NonZeroDivisor(g.clone()));
        }
    }
    let first = gens[0].clone();
    let ann = annihilator(&first, ctx)?;
    if split_is_proper(r, &ann)? {
        return Ok(SplitDecision::Split(first, ann));
    }
    let ring = r.ring();
    let mut rng = ChaCha8Rng::seed_from_u64(CANDIDATE_SEED);
    for _ in 0..CANDIDATE_COMBINATIONS {
        let combo = gens.iter().fold(Polynomial::zero(ring), |acc, g| {
            let c = Polynomial::from_i64(ring, rng.gen_range(-3..=3));
            &acc + &(&c * g)
        });
        let combo = ctx.reduce(&combo);
        if !combo.is_zero() && ctx.is_zero_ideal(&annihilator(&combo, ctx)?) {
            return Ok(SplitDecision::NonZeroDivisor(combo));
        }
    }
    Ok(SplitDecision::Split(first, ann))
}

fn split_is_proper<F: Field>(r: &AffinePresentation<F>, ann: &Ideal<F>) -> Result<bool> {
    let (a, b) = factor_ideals(r, ann)?;
    Ok(!a.is_unit() && !b.is_unit())
}

/// `D + Ann(J)` and `D + J` for `J = Ann(f)`.
fn factor_ideals<F: Field>(
    r: &AffinePresentation<F>,
    ann: &Ideal<F>,
) -> Result<(Ideal<F>, Ideal<F>)> {
    let ctx = r.context();
    let mut other: Option<Ideal<F>> = None;
    for g in ctx.reduced_generators(ann) {
        let a = annihilator(&g, ctx)?;
        other = Some(match other {
            None => a,
            Some(o) => crate::idealops::intersect(&o, &a)?,
        });
    }
    let other = other.unwrap_or_else(|| Ideal::unit(r.ring()));
    Ok((r.defining().sum(&other), r.defining().sum(ann)))
}

/// The two factor rings of a split on a zerodivisor with annihilator `J`:
/// `R/Ann(J)` first, then `R/J`.
pub(crate) fn split_factors<F: Field>(
    r: &AffinePresentation<F>,
    ann: &Ideal<F>,
) -> Result<(AffinePresentation<F>, AffinePresentation<F>)> {
    let (a, b) = factor_ideals(r, ann)?;
    Ok((r.add_relations(&a), r.add_relations(&b)))
}

/// Looks for a variable whose eliminant has degree at least two and a root
/// `c` in the field; then `v - c` is a zerodivisor and the ring splits.
pub fn split_probe<F: Field>(
    r: &AffinePresentation<F>,
) -> Result<Option<(Polynomial<F>, Ideal<F>)>> {
    let ring = r.ring();
    let n = ring.nvars();
    let ctx = r.context();
    for v in 0..n {
        let others: Vec<usize> = (0..n).filter(|&w| w != v).collect();
        let elim = eliminate(r.defining(), &others)?;
        let Some(g) = elim.basis().iter().find(|g| g.uses_var(v)) else {
            continue;
        };
        if g.degree_in(v) < 2 {
            continue;
        }
        let one = Monomial::one(n);
        let coeffs: Vec<F> = g
            .univariate_coeffs(v)
            .iter()
            .map(|c| c.coefficient(&one))
            .collect();
        for root in F::roots(ring.field(), &coeffs) {
            let f = &Polynomial::var(ring, v) - &Polynomial::constant(ring, root);
            let ann = annihilator(&f, ctx)?;
            if !ctx.is_zero_ideal(&ann) && split_is_proper(r, &ann)? {
                return Ok(Some((f, ann)));
            }
        }
    }
    Ok(None)
}

/// `Hom(I, I)` for a nonzerodivisor `f` in `I`, as `(1/f) ((f I) : I)`.
pub fn endomorphism_ring<F: Field>(
    r: &AffinePresentation<F>,
    i: &Ideal<F>,
    f: &Polynomial<F>,
) -> Result<EndoPresentation<F>> {
    let ctx = r.context();
    let ring = r.ring();
    let f = ctx.reduce(f);
    if f.is_zero() || !ctx.is_zero_ideal(&annihilator(&f, ctx)?) {
        return Err(Error::NotNonZeroDivisor);
    }
    let fi = Ideal::new(ring, i.generators().iter().map(|g| &f * g).collect());
    let n = ideal_quotient(&fi, i, ctx)?;

    let mut numerators = vec![f.clone()];
    let mut span = r.defining().with([f.clone()]);
    for g in n.basis() {
        let a = ctx.reduce(g);
        if span.contains(&a) {
            continue;
        }
        span = span.with([a.clone()]);
        numerators.push(a);
    }

    let linear = syzygies(&numerators, r.defining())?.vectors().to_vec();
    let scaled: Vec<Polynomial<F>> = numerators.iter().map(|a| &f * a).collect();
    let t = numerators.len() - 1;
    let mut quadratic = Vec::new();
    for a in 1..=t {
        for b in a..=t {
            let prod = &numerators[a] * &numerators[b];
            let beta = lift(&prod, &scaled, r.defining()).map_err(|e| match e {
                Error::NotAMember => Error::LiftFailed(format!("a{a}*a{b} is not in f*N")),
                other => other,
            })?;
            quadratic.push((a, b, beta));
        }
    }
    Ok(EndoPresentation {
        f,
        numerators,
        linear,
        quadratic,
    })
}

/// `Hom(I, I) = R`: nothing beyond `(f)` was found in `N`.
pub fn is_fixed_point<F: Field>(endo: &EndoPresentation<F>) -> bool {
    endo.t() == 0
}

/// `R[X_1..X_t]/(D + linear relations + quadratic relations)`.
pub fn extend_ring<F: Field>(
    r: &AffinePresentation<F>,
    endo: &EndoPresentation<F>,
) -> Result<AffinePresentation<F>> {
    let t = endo.t();
    if t == 0 {
        return Err(Error::InvalidRing("nothing to adjoin".into()));
    }
    let ring = r.ring();
    let level = r.level() + 1;
    let mut names: Vec<String> = Vec::with_capacity(t);
    for k in 1..=t {
        let base = format!("T{level}_{k}");
        let mut name = ring.fresh_name(&base);
        let mut extra = 1;
        while names.contains(&name) {
            name = ring.fresh_name(&format!("{base}_{extra}"));
            extra += 1;
        }
        names.push(name);
    }
    let order = match ring.order() {
        MonomialOrder::Lex => MonomialOrder::Lex,
        _ => MonomialOrder::DegRevLex,
    };
    let big = ring.extend(&names, order)?;
    let n = ring.nvars();
    let map: Vec<usize> = (0..n).collect();
    let up = |p: &Polynomial<F>| p.embed(&big, &map);
    let x = |k: usize| {
        if k == 0 {
            Polynomial::one(&big)
        } else {
            Polynomial::var(&big, n + k - 1)
        }
    };
    let combine = |coeffs: &[Polynomial<F>]| {
        coeffs
            .iter()
            .enumerate()
            .fold(Polynomial::zero(&big), |acc, (k, c)| {
                &acc + &(&up(c) * &x(k))
            })
    };

    let mut gens: Vec<Polynomial<F>> = r.defining().basis().iter().map(up).collect();
    gens.extend(endo.linear.iter().map(|l| combine(l)));
    let mut squares: Vec<Option<Polynomial<F>>> = vec![None; t + 1];
    for (a, b, beta) in &endo.quadratic {
        let q = &(&x(*a) * &x(*b)) - &combine(beta);
        if a == b {
            squares[*a] = Some(q.clone());
        }
        gens.push(q);
    }
    let defining = Ideal::new(&big, gens).reduced();
    if defining.is_unit() {
        return Err(Error::InvalidRing(
            "extension collapsed to the zero ring".into(),
        ));
    }

    let mut adjoined = r.adjoined.clone();
    for k in 1..=t {
        adjoined.push(AdjoinedVariable {
            name: names[k - 1].clone(),
            level,
            numerator: endo.numerators[k].clone(),
            denominator: endo.f.clone(),
            base: r.context().clone(),
            quadratic: squares[k].take().expect("diagonal quadratic"),
        });
    }
    Ok(AffinePresentation {
        ctx: crate::idealops::QuotientRingContext::new(defining),
        level,
        original_vars: r.original_vars,
        adjoined,
    })
}
