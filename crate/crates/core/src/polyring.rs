//! Sparse multivariate polynomials, monomial orders and division.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::coeffs::Field;
use crate::error::{Error, Result};

/// Exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables that occur.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }
}

/// A block of variables together with the order used inside it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderBlock {
    pub vars: Vec<usize>,
    pub order: MonomialOrder,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    DegRevLex,
    /// Blocks are compared left to right; the first block that differs decides.
    Block(Vec<OrderBlock>),
}

impl MonomialOrder {
    /// Elimination order: the `drop` variables in a lex block first, the
    /// remaining variables under `rest`.
    pub fn elimination(drop: &[usize], nvars: usize, rest: MonomialOrder) -> MonomialOrder {
        let keep: Vec<usize> = (0..nvars).filter(|i| !drop.contains(i)).collect();
        let mut drop = drop.to_vec();
        drop.sort_unstable();
        MonomialOrder::Block(vec![
            OrderBlock {
                vars: drop,
                order: MonomialOrder::Lex,
            },
            OrderBlock {
                vars: keep,
                order: rest,
            },
        ])
    }

    pub fn validate(&self, nvars: usize) -> Result<()> {
        let all: Vec<usize> = (0..nvars).collect();
        self.validate_on(&all)
    }

    fn validate_on(&self, vars: &[usize]) -> Result<()> {
        if let MonomialOrder::Block(blocks) = self {
            let mut seen = HashSet::new();
            for b in blocks {
                for v in &b.vars {
                    if !vars.contains(v) {
                        return Err(Error::InvalidOrder(format!(
                            "variable index {v} outside its block"
                        )));
                    }
                    if !seen.insert(*v) {
                        return Err(Error::InvalidOrder(format!(
                            "variable index {v} in two blocks"
                        )));
                    }
                }
                b.order.validate_on(&b.vars)?;
            }
            if seen.len() != vars.len() {
                return Err(Error::InvalidOrder(
                    "blocks do not cover every variable".into(),
                ));
            }
        }
        Ok(())
    }

    /// Compares two exponent vectors of equal length.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::DegRevLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return da.cmp(&db);
                }
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(_) => self.cmp_on(&a.0, &b.0, None),
        }
    }

    fn cmp_on(&self, a: &[u32], b: &[u32], vars: Option<&[usize]>) -> Ordering {
        let get = |v: &[u32], k: usize| match vars {
            Some(ix) => v[ix[k]],
            None => v[k],
        };
        let n = vars.map_or(a.len(), |ix| ix.len());
        match self {
            MonomialOrder::Lex => {
                for k in 0..n {
                    let (x, y) = (get(a, k), get(b, k));
                    if x != y {
                        return x.cmp(&y);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex => {
                let da: u32 = (0..n).map(|k| get(a, k)).sum();
                let db: u32 = (0..n).map(|k| get(b, k)).sum();
                if da != db {
                    return da.cmp(&db);
                }
                for k in (0..n).rev() {
                    let (x, y) = (get(a, k), get(b, k));
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block(blocks) => {
                for blk in blocks {
                    let ord = blk.order.cmp_on(a, b, Some(&blk.vars));
                    if ord != Ordering::Equal {
                        return ord;
                    }
                }
                Ordering::Equal
            }
        }
    }
}

pub fn compare_monomials(order: &MonomialOrder, m1: &Monomial, m2: &Monomial) -> Result<Ordering> {
    if m1.len() != m2.len() {
        return Err(Error::LengthMismatch {
            expected: m1.len(),
            found: m2.len(),
        });
    }
    order.validate(m1.len())?;
    Ok(order.cmp(m1, m2))
}

/// A polynomial ring over a field with named variables and a fixed order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    field: F::Ctx,
    vars: Vec<String>,
    order: MonomialOrder,
}

pub type RingRef<F> = Arc<PolyRing<F>>;

impl<F: Field> PolyRing<F> {
    pub fn new(field: F::Ctx, vars: Vec<String>, order: MonomialOrder) -> Result<RingRef<F>> {
        let mut seen = HashSet::new();
        for v in &vars {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        order.validate(vars.len())?;
        Ok(Arc::new(PolyRing { field, vars, order }))
    }

    pub fn field(&self) -> &F::Ctx {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn characteristic(&self) -> u64 {
        F::characteristic(&self.field)
    }

    pub fn zero_coeff(&self) -> F {
        F::zero(&self.field)
    }

    pub fn one_coeff(&self) -> F {
        F::one(&self.field)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef<F>> {
        PolyRing::new(self.field.clone(), self.vars.clone(), order)
    }

    /// Appends new variables. The order of the result is `order`.
    pub fn extend(&self, names: &[String], order: MonomialOrder) -> Result<RingRef<F>> {
        let mut vars = self.vars.clone();
        vars.extend(names.iter().cloned());
        PolyRing::new(self.field.clone(), vars, order)
    }

    /// A variable name not yet used in this ring.
    pub fn fresh_name(&self, base: &str) -> String {
        if self.var_index(base).is_none() {
            return base.to_string();
        }
        (1..)
            .map(|k| format!("{base}{k}"))
            .find(|n| self.var_index(n).is_none())
            .unwrap()
    }

    /// Deletes variables; `order` is used for the smaller ring.
    pub fn remove_vars(&self, removed: &[usize], order: MonomialOrder) -> Result<RingRef<F>> {
        let vars = self
            .vars
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, v)| v.clone())
            .collect();
        PolyRing::new(self.field.clone(), vars, order)
    }
}

pub fn same_ring<F: Field>(a: &RingRef<F>, b: &RingRef<F>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A polynomial: terms sorted strictly descending in the ring's order, with
/// no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: RingRef<F>,
    terms: Vec<(Monomial, F)>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &RingRef<F>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef<F>) -> Self {
        Self::constant(ring, ring.one_coeff())
    }

    pub fn constant(ring: &RingRef<F>, c: F) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.nvars()), c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_i64(ring: &RingRef<F>, n: i64) -> Self {
        Self::constant(ring, F::from_i64(ring.field(), n))
    }

    pub fn var(ring: &RingRef<F>, index: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), index), ring.one_coeff())],
        }
    }

    pub fn monomial(ring: &RingRef<F>, m: Monomial, c: F) -> Self {
        assert_eq!(m.len(), ring.nvars());
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(m, c)],
        }
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges duplicates
    /// and drops zeros.
    pub fn from_terms(ring: &RingRef<F>, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut terms: Vec<(Monomial, F)> = terms.into_iter().collect();
        assert!(
            terms.iter().all(|(m, _)| m.len() == ring.nvars()),
            "monomial length mismatch"
        );
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, F)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add_ref(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms that are already sorted and nonzero.
    pub(crate) fn from_sorted(ring: &RingRef<F>, terms: Vec<(Monomial, F)>) -> Self {
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, F)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, F)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&F> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.0[var]).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.0[var] > 0)
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms
            .iter()
            .find(|(tm, _)| tm == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.zero_coeff())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), a.mul_ref(c)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Multiplies by the term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(tm, a)| (tm.mul(m), a.mul_ref(c)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `self + c * m * other`, computed in one merge pass.
    pub fn add_scaled(&self, c: &F, m: &Monomial, other: &Self) -> Self {
        self.assert_ring(other);
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other
            .terms
            .iter()
            .map(|(tm, tc)| (tm.mul(m), tc.mul_ref(c)))
            .peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some((am, _)), Some((bm, _))) => match order.cmp(am, bm) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let (am, ac) = a.next().unwrap();
                        let (_, bc) = b.next().unwrap();
                        let s = ac.add_ref(&bc);
                        if !s.is_zero() {
                            out.push((am.clone(), s));
                        }
                    }
                },
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// The scalar multiple with coprime integer coefficients and a positive
    /// leading coefficient (over QQ); unchanged over GF(p) except monic.
    pub fn integral(&self) -> Self {
        if F::characteristic(self.ring.field()) != 0 {
            return self.monic();
        }
        let coeffs: Vec<&F> = self.terms.iter().map(|(_, c)| c).collect();
        self.scale(&F::integral_scale(self.ring.field(), &coeffs))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Self {
        let ctx = self.ring.field();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.0[var] > 0)
            .map(|(m, c)| {
                let mut e = m.0.clone();
                let k = e[var];
                e[var] -= 1;
                (Monomial(e), c.mul_ref(&F::from_i64(ctx, k as i64)))
            });
        Self::from_terms(&self.ring, terms)
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `var_map[i]`. Coefficients are kept exactly.
    pub fn embed(&self, target: &RingRef<F>, var_map: &[usize]) -> Self {
        assert_eq!(var_map.len(), self.ring.nvars());
        assert!(
            self.ring.field() == target.field(),
            "coefficient field mismatch"
        );
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0; n];
            for (i, &x) in m.0.iter().enumerate() {
                e[var_map[i]] += x;
            }
            (Monomial(e), c.clone())
        });
        Self::from_terms(target, terms)
    }

    /// Same variables, possibly a different order.
    pub fn reorder(&self, target: &RingRef<F>) -> Self {
        if same_ring(&self.ring, target) {
            return Polynomial {
                ring: target.clone(),
                terms: self.terms.clone(),
            };
        }
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.embed(target, &map)
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, target: &RingRef<F>, images: &[Polynomial<F>]) -> Self {
        assert_eq!(images.len(), self.ring.nvars());
        let mut powers: Vec<Vec<Polynomial<F>>> = vec![vec![Polynomial::one(target)]; images.len()];
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Coefficients with respect to `var`: entry `k` multiplies `var^k` and
    /// does not involve `var`.
    pub fn univariate_coeffs(&self, var: usize) -> Vec<Polynomial<F>> {
        let deg = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Monomial, F)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let k = e[var] as usize;
            e[var] = 0;
            buckets[k].push((Monomial(e), c.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Polynomial::from_terms(&self.ring, b))
            .collect()
    }

    /// Inverse of [`Polynomial::univariate_coeffs`].
    pub fn from_univariate_coeffs(ring: &RingRef<F>, var: usize, coeffs: &[Polynomial<F>]) -> Self {
        let terms = coeffs.iter().enumerate().flat_map(|(k, c)| {
            c.terms.iter().map(move |(m, a)| {
                let mut e = m.0.clone();
                e[var] += k as u32;
                (Monomial(e), a.clone())
            })
        });
        Self::from_terms(ring, terms)
    }

    fn assert_ring(&self, other: &Self) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials from different rings"
        );
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let one = self.ring.one_coeff();
        let c = if negate { one.neg_ref() } else { one };
        self.add_scaled(&c, &Monomial::one(self.ring.nvars()), other)
    }

    fn product(&self, other: &Self) -> Self {
        self.assert_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Self::zero(&self.ring);
        for (m, c) in &small.terms {
            acc = acc.add_scaled(c, m, big);
        }
        acc
    }
}

impl<F: Field> Add for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        self.merge(rhs, false)
    }
}

impl<F: Field> Sub for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        self.merge(rhs, true)
    }
}

impl<F: Field> Mul for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        self.product(rhs)
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.neg_ref()))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl<F: Field> Add for Polynomial<F> {
    type Output = Polynomial<F>;
    fn add(self, rhs: Self) -> Polynomial<F> {
        &self + &rhs
    }
}

impl<F: Field> Sub for Polynomial<F> {
    type Output = Polynomial<F>;
    fn sub(self, rhs: Self) -> Polynomial<F> {
        &self - &rhs
    }
}

impl<F: Field> Mul for Polynomial<F> {
    type Output = Polynomial<F>;
    fn mul(self, rhs: Self) -> Polynomial<F> {
        &self * &rhs
    }
}

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -&self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Checked arithmetic: fails instead of panicking when the rings differ.
pub fn poly_op<F: Field>(
    kind: PolyOp,
    p: &Polynomial<F>,
    q: &Polynomial<F>,
) -> Result<Polynomial<F>> {
    if !same_ring(&p.ring, &q.ring) {
        return Err(Error::RingMismatch);
    }
    Ok(match kind {
        PolyOp::Add => p + q,
        PolyOp::Sub => p - q,
        PolyOp::Mul => p * q,
    })
}

/// Multivariate division. Divisors are tried in list order; the result
/// satisfies `p = sum(q_i * d_i) + r` with no term of `r` divisible by any
/// leading monomial of a divisor.
pub fn divide_with_remainder<F: Field>(
    p: &Polynomial<F>,
    divisors: &[Polynomial<F>],
    order: &MonomialOrder,
) -> Result<(Vec<Polynomial<F>>, Polynomial<F>)> {
    if divisors.iter().any(|d| !same_ring(&d.ring, &p.ring)) {
        return Err(Error::RingMismatch);
    }
    if divisors.iter().any(|d| d.is_zero()) {
        return Err(Error::ZeroDivisorPolynomial);
    }
    let home = p.ring.clone();
    if order != home.order() {
        let ring = home.with_order(order.clone())?;
        let ds: Vec<Polynomial<F>> = divisors.iter().map(|d| d.reorder(&ring)).collect();
        let (qs, r) = divide_with_remainder(&p.reorder(&ring), &ds, order)?;
        return Ok((
            qs.iter().map(|q| q.reorder(&home)).collect(),
            r.reorder(&home),
        ));
    }
    let ring = &home;
    let mut quotients = vec![Vec::new(); divisors.len()];
    let mut remainder = Vec::new();
    let mut rest = p.clone();
    while let Some((lm, lc)) = rest.leading_term() {
        let (lm, lc) = (lm.clone(), lc.clone());
        let hit = divisors.iter().enumerate().find_map(|(i, d)| {
            let (dm, dc) = d.leading_term().unwrap();
            lm.div(dm).map(|m| (i, m, lc.clone() / dc.clone()))
        });
        match hit {
            Some((i, m, c)) => {
                rest = rest.add_scaled(&c.neg_ref(), &m, &divisors[i]);
                quotients[i].push((m, c));
            }
            None => {
                remainder.push((lm, lc));
                rest.terms.remove(0);
            }
        }
    }
    let qs = quotients
        .into_iter()
        .map(|t| Polynomial::from_terms(ring, t))
        .collect();
    Ok((qs, Polynomial::from_sorted(ring, remainder)))
}

fn write_monomial(f: &mut fmt::Formatter<'_>, vars: &[String], m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        write!(f, "{}", vars[i])?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { c.neg_ref() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write_monomial(f, vars, m)?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
