//! Input and result documents and their text forms.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::coeffs::{Field, Rational};
use crate::normalize::NormalizationResult;
use crate::polyring::{Monomial, MonomialOrder, PolyRing, Polynomial, RingRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// A polynomial with integer coefficients: like terms merged, zeros
/// dropped, terms in descending degree-reverse-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntPoly {
    terms: Vec<(Vec<u32>, BigInt)>,
}

impl IntPoly {
    pub fn new(terms: Vec<(Vec<u32>, BigInt)>) -> Self {
        let mut merged: Vec<(Vec<u32>, BigInt)> = Vec::new();
        for (e, c) in terms {
            match merged.iter_mut().find(|(m, _)| *m == e) {
                Some((_, acc)) => *acc += c,
                None => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| *c != BigInt::from(0));
        merged.sort_by(|(a, _), (b, _)| {
            MonomialOrder::DegRevLex.cmp(&Monomial::new(b.clone()), &Monomial::new(a.clone()))
        });
        IntPoly { terms: merged }
    }

    pub fn terms(&self) -> &[(Vec<u32>, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The polynomial with coefficients mapped into the ring's field.
    pub fn to_polynomial<F: Field>(&self, ring: &RingRef<F>) -> Polynomial<F> {
        let field = ring.field();
        Polynomial::from_terms(
            ring,
            self.terms
                .iter()
                .map(|(e, c)| (Monomial::new(e.clone()), F::from_integer(field, c))),
        )
    }
}

/// A parsed input file: field, variables and generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputDocument {
    pub field: FieldSpec,
    pub variables: Vec<String>,
    pub generators: Vec<IntPoly>,
}

impl InputDocument {
    /// Generators as polynomials in `ring`, whose variables must match.
    pub fn polynomials<F: Field>(&self, ring: &RingRef<F>) -> Vec<Polynomial<F>> {
        assert_eq!(ring.vars(), &self.variables[..]);
        self.generators
            .iter()
            .map(|g| g.to_polynomial(ring))
            .collect()
    }
}

impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}[{}];", self.field, self.variables.join(", "))?;
        let ring: RingRef<Rational> =
            PolyRing::new((), self.variables.clone(), MonomialOrder::DegRevLex)
                .map_err(|_| fmt::Error)?;
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|g| g.to_polynomial(&ring).to_string())
            .collect();
        writeln!(f, "ideal ({});", gens.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjoinedEntry {
    pub name: String,
    pub level: usize,
    pub numerator: String,
    pub denominator: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentEntry {
    pub variables: Vec<String>,
    pub relations: Vec<String>,
    pub adjoined: Vec<AdjoinedEntry>,
    pub iterations: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OptionsEcho {
    pub field: String,
    pub order: String,
    pub radical: String,
    pub max_iter: usize,
}

/// Machine-readable output. Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultDocument {
    pub schema: &'static str,
    pub components: Vec<ComponentEntry>,
    pub trace: Vec<String>,
    pub options: OptionsEcho,
}

pub const SCHEMA: &str = "closure-kit/1";

/// Numerator and denominator multiplied by one common factor that makes
/// their coefficients integral.
fn integral_fraction<F: Field>(
    num: &Polynomial<F>,
    den: &Polynomial<F>,
) -> (Polynomial<F>, Polynomial<F>) {
    let coeffs: Vec<&F> = den
        .terms()
        .iter()
        .chain(num.terms())
        .map(|(_, c)| c)
        .collect();
    if coeffs.is_empty() {
        return (num.clone(), den.clone());
    }
    let s = F::integral_scale(num.ring().field(), &coeffs);
    (num.scale(&s), den.scale(&s))
}

impl ResultDocument {
    pub fn new<F: Field>(
        result: &NormalizationResult<F>,
        options: OptionsEcho,
        with_trace: bool,
    ) -> Self {
        let components = result
            .components
            .iter()
            .map(|c| {
                let p = &c.presentation;
                let adjoined = p
                    .adjoined()
                    .iter()
                    .map(|a| {
                        let (num, den) = integral_fraction(&a.numerator, &a.denominator);
                        AdjoinedEntry {
                            name: a.name.clone(),
                            level: a.level,
                            numerator: num.to_string(),
                            denominator: den.to_string(),
                        }
                    })
                    .collect();
                ComponentEntry {
                    variables: p.ring().vars().to_vec(),
                    relations: p
                        .defining()
                        .basis()
                        .iter()
                        .map(|g| g.integral().to_string())
                        .collect(),
                    adjoined,
                    iterations: c.iterations,
                }
            })
            .collect();
        ResultDocument {
            schema: SCHEMA,
            components,
            trace: if with_trace {
                result.trace_lines()
            } else {
                Vec::new()
            },
            options,
        }
    }

    /// Compact JSON with the fixed key order.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Compact JSON for a result document.
pub fn emit_json(doc: &ResultDocument) -> String {
    doc.to_json()
}
