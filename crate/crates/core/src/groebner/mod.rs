//! Ideals, Gröbner bases and the operations built directly on them.

pub(crate) mod engine;
mod syzygy;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::polyring::{same_ring, MonomialOrder, Polynomial, RingRef};

pub(crate) use syzygy::quotient_by_element;
pub use syzygy::{lift, syzygies, SyzygyModule};

/// An ideal of a polynomial ring, given by generators. The reduced Gröbner
/// basis for the ring's order is computed on first use and cached.
#[derive(Clone)]
pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    gens: Vec<Polynomial<F>>,
    gb: OnceLock<Arc<Vec<Polynomial<F>>>>,
}

impl<F: Field> Ideal<F> {
    /// Panics if a generator lives in another ring; see [`Ideal::try_new`].
    pub fn new(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Self {
        Self::try_new(ring, gens).expect("generators from a different ring")
    }

    pub fn try_new(ring: &RingRef<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub(crate) fn from_basis(ring: &RingRef<F>, basis: Vec<Polynomial<F>>) -> Self {
        let gb = OnceLock::new();
        let _ = gb.set(Arc::new(basis.clone()));
        Ideal {
            ring: ring.clone(),
            gens: basis,
            gb,
        }
    }

    pub fn zero(ring: &RingRef<F>) -> Self {
        Self::new(ring, Vec::new())
    }

    pub fn unit(ring: &RingRef<F>) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)])
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// Reduced Gröbner basis in the ring's order.
    pub fn basis(&self) -> &[Polynomial<F>] {
        self.gb
            .get_or_init(|| Arc::new(engine::ideal_basis(&self.ring, &self.gens)))
            .as_slice()
    }

    /// The same ideal in a ring with the same variables and another order.
    pub fn in_ring(&self, ring: &RingRef<F>) -> Self {
        Ideal::new(ring, self.gens.iter().map(|g| g.reorder(ring)).collect())
    }

    pub fn normal_form(&self, p: &Polynomial<F>) -> Polynomial<F> {
        assert!(
            same_ring(p.ring(), &self.ring),
            "polynomial from a different ring"
        );
        engine::reduce_polynomial(p, self.basis())
    }

    pub fn contains(&self, p: &Polynomial<F>) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Equality as ideals (two-way containment).
    pub fn same_ideal(&self, other: &Ideal<F>) -> bool {
        self.contains_ideal(other) && other.contains_ideal(self)
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.basis(), [g] if g.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with(&self, extra: impl IntoIterator<Item = Polynomial<F>>) -> Ideal<F> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal<F>) -> Ideal<F> {
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a * b))
            .collect();
        Ideal::new(&self.ring, gens)
    }

    /// The ideal given by its reduced basis (same ideal, canonical generators).
    pub fn reduced(&self) -> Ideal<F> {
        Ideal::from_basis(&self.ring, self.basis().to_vec())
    }

    /// Krull dimension of the quotient ring; -1 for the unit ideal.
    pub fn dimension(&self) -> i64 {
        match self.independent_set() {
            Some(s) => s.len() as i64,
            None => -1,
        }
    }

    /// A maximal-cardinality set of variables independent modulo the
    /// leading-term ideal (first in lexicographic order of index sets).
    /// `None` for the unit ideal.
    pub fn independent_set(&self) -> Option<Vec<usize>> {
        if self.is_unit() {
            return None;
        }
        let n = self.ring.nvars();
        let supports: Vec<Vec<usize>> = self
            .basis()
            .iter()
            .map(|g| g.leading_monomial().unwrap().support().collect())
            .collect();
        for size in (0..=n).rev() {
            if let Some(s) = first_subset(n, size, &|s: &[usize]| {
                supports
                    .iter()
                    .all(|sup| sup.iter().any(|v| !s.contains(v)))
            }) {
                return Some(s);
            }
        }
        Some(Vec::new())
    }
}

fn first_subset(n: usize, k: usize, accept: &dyn Fn(&[usize]) -> bool) -> Option<Vec<usize>> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if accept(&idx) {
            return Some(idx);
        }
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

impl<F: Field> fmt::Display for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        if self.gens.is_empty() {
            write!(f, "0")?;
        }
        write!(f, ")")
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

/// Reduced Gröbner basis of `gens` under `order`. The returned ideal lives in
/// `ring` re-equipped with `order`.
pub fn buchberger<F: Field>(
    ring: &RingRef<F>,
    gens: &[Polynomial<F>],
    order: &MonomialOrder,
) -> Result<Ideal<F>> {
    if gens.iter().any(|g| !same_ring(g.ring(), ring)) {
        return Err(Error::RingMismatch);
    }
    let target = if order == ring.order() {
        ring.clone()
    } else {
        ring.with_order(order.clone())?
    };
    let moved: Vec<Polynomial<F>> = gens.iter().map(|g| g.reorder(&target)).collect();
    let basis = engine::ideal_basis(&target, &moved);
    Ok(Ideal::from_basis(&target, basis))
}

pub fn normal_form<F: Field>(p: &Polynomial<F>, ideal: &Ideal<F>) -> Result<Polynomial<F>> {
    if !same_ring(p.ring(), ideal.ring()) {
        return Err(Error::RingMismatch);
    }
    Ok(ideal.normal_form(p))
}

pub fn ideal_member<F: Field>(p: &Polynomial<F>, ideal: &Ideal<F>) -> Result<bool> {
    Ok(normal_form(p, ideal)?.is_zero())
}

/// Generators of `I ∩ k[remaining variables]`, returned in `I`'s ring.
pub fn eliminate<F: Field>(ideal: &Ideal<F>, drop: &[usize]) -> Result<Ideal<F>> {
    let ring = ideal.ring();
    if let Some(&v) = drop.iter().find(|&&v| v >= ring.nvars()) {
        return Err(Error::UnknownVariable(format!("#{v}")));
    }
    if drop.is_empty() {
        return Ok(ideal.clone());
    }
    let rest = match ring.order() {
        MonomialOrder::Lex => MonomialOrder::Lex,
        _ => MonomialOrder::DegRevLex,
    };
    let order = MonomialOrder::elimination(drop, ring.nvars(), rest);
    let elim = buchberger(ring, ideal.generators(), &order)?;
    let kept: Vec<Polynomial<F>> = elim
        .basis()
        .iter()
        .filter(|g| drop.iter().all(|&v| !g.uses_var(v)))
        .map(|g| g.reorder(ring))
        .collect();
    Ok(Ideal::new(ring, kept))
}

/// Variable indices for names; fails on an unknown name.
pub fn var_indices<F: Field>(ring: &RingRef<F>, names: &[&str]) -> Result<Vec<usize>> {
    names
        .iter()
        .map(|n| {
            ring.var_index(n)
                .ok_or_else(|| Error::UnknownVariable(n.to_string()))
        })
        .collect()
}

pub fn dimension<F: Field>(ideal: &Ideal<F>) -> i64 {
    ideal.dimension()
}
