//! Integral closure of reduced affine rings over QQ and GF(p).

pub mod cli;
pub mod coeffs;
pub mod error;
pub mod groebner;
pub mod idealops;
pub mod normalize;
pub mod polyring;

pub use coeffs::{Field, FieldElement, Fp, PrimeModulus, Rational};
pub use error::{Error, Result};
pub use groebner::Ideal;
pub use idealops::{QuotientRingContext, RadicalStrategy};
pub use normalize::{
    normalize, verify_result, AffinePresentation, NormalizationResult, NormalizeOptions,
};
pub use polyring::{Monomial, MonomialOrder, PolyRing, Polynomial, RingRef};

pub type RationalRing = PolyRing<Rational>;
pub type RationalPolynomial = Polynomial<Rational>;
pub type RationalIdeal = Ideal<Rational>;
pub type RationalPresentation = AffinePresentation<Rational>;
pub type FpRing = PolyRing<Fp>;
pub type FpPolynomial = Polynomial<Fp>;
pub type FpIdeal = Ideal<Fp>;
pub type FpPresentation = AffinePresentation<Fp>;
