//! Polynomials in one distinguished variable over a multivariate coefficient
//! ring, with the subresultant remainder sequence.

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::polyring::{divide_with_remainder, Polynomial, RingRef};

/// Coefficients low to high, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct UniPoly<F: Field> {
    coeffs: Vec<Polynomial<F>>,
}

impl<F: Field> UniPoly<F> {
    pub(crate) fn from_polynomial(p: &Polynomial<F>, var: usize) -> Self {
        UniPoly::new(p.univariate_coeffs(var))
    }

    fn new(mut coeffs: Vec<Polynomial<F>>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub(crate) fn to_polynomial(&self, ring: &RingRef<F>, var: usize) -> Polynomial<F> {
        Polynomial::from_univariate_coeffs(ring, var, &self.coeffs)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports 0.
    pub(crate) fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lc(&self) -> &Polynomial<F> {
        self.coeffs.last().expect("nonzero")
    }

    pub(crate) fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| &Polynomial::from_i64(c.ring(), k as i64) * c)
            .collect();
        UniPoly::new(coeffs)
    }

    fn div_coeffs(&self, c: &Polynomial<F>) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| exact_div(a, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(coeffs))
    }

    /// `lc(b)^(deg a - deg b + 1) a = q b + r` with `deg r < deg b`.
    pub(crate) fn pseudo_divide(&self, b: &Self) -> (Self, Self) {
        assert!(!b.is_zero());
        let ring = b.lc().ring().clone();
        if self.is_zero() || self.degree() < b.degree() {
            return (UniPoly { coeffs: Vec::new() }, self.clone());
        }
        let db = b.degree();
        let steps = self.degree() - db + 1;
        let lb = b.lc().clone();
        let mut r = self.coeffs.clone();
        let mut q = vec![Polynomial::zero(&ring); steps];
        for k in (0..steps).rev() {
            let top = r[k + db].clone();
            for c in q.iter_mut() {
                *c = &*c * &lb;
            }
            q[k] = &q[k] + &top;
            for c in r.iter_mut() {
                *c = &*c * &lb;
            }
            for (i, bc) in b.coeffs.iter().enumerate() {
                r[k + i] = &r[k + i] - &(&top * bc);
            }
            r.truncate(k + db);
        }
        (UniPoly::new(q), UniPoly::new(r))
    }
}

/// Exact quotient of multivariate polynomials.
fn exact_div<F: Field>(a: &Polynomial<F>, b: &Polynomial<F>) -> Result<Polynomial<F>> {
    if b.is_constant() {
        let inv = b
            .leading_coeff()
            .ok_or(Error::DivisionByZero)?
            .inv()
            .ok_or(Error::DivisionByZero)?;
        return Ok(a.scale(&inv));
    }
    let (q, r) = divide_with_remainder(a, std::slice::from_ref(b), a.ring().order())?;
    if !r.is_zero() {
        return Err(Error::StrategyFailed {
            strategy: "subresultant".into(),
            reason: "inexact coefficient division".into(),
        });
    }
    Ok(q.into_iter().next().unwrap())
}

/// A greatest common divisor over the fraction field of the coefficient
/// ring, determined up to a coefficient-ring factor.
pub(crate) fn subresultant_gcd<F: Field>(a: &UniPoly<F>, b: &UniPoly<F>) -> Result<UniPoly<F>> {
    let (mut a, mut b) = if a.degree() >= b.degree() {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if b.is_zero() {
        return Ok(a);
    }
    let ring = b.lc().ring().clone();
    let mut g = Polynomial::one(&ring);
    let mut h = Polynomial::one(&ring);
    loop {
        let delta = (a.degree() - b.degree()) as u32;
        let (_, r) = a.pseudo_divide(&b);
        if r.is_zero() {
            return Ok(b);
        }
        if r.degree() == 0 {
            return Ok(UniPoly::new(vec![Polynomial::one(&ring)]));
        }
        a = b;
        b = r.div_coeffs(&(&g * &h.pow(delta)))?;
        g = a.lc().clone();
        h = if delta == 0 {
            h
        } else {
            exact_div(&g.pow(delta), &h.pow(delta - 1))?
        };
    }
}

/// Squarefree part over the fraction field of the coefficient ring.
pub(crate) fn squarefree_part<F: Field>(p: &Polynomial<F>, var: usize) -> Result<Polynomial<F>> {
    let u = UniPoly::from_polynomial(p, var);
    if u.degree() == 0 {
        return Ok(p.clone());
    }
    let d = subresultant_gcd(&u, &u.derivative())?;
    if d.degree() == 0 {
        return Ok(p.clone());
    }
    let (q, r) = u.pseudo_divide(&d);
    if !r.is_zero() {
        return Err(Error::StrategyFailed {
            strategy: "subresultant".into(),
            reason: "gcd does not divide".into(),
        });
    }
    Ok(q.to_polynomial(p.ring(), var))
}
