//! The normalization loop: test ideal, nonzerodivisor or split, endomorphism
//! ring of the test ideal, ring extension, repeat until a fixed point.

mod steps;
mod verify;

use std::collections::VecDeque;
use std::fmt;

use crate::coeffs::Field;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::idealops::{QuotientRingContext, RadicalStrategy};
use crate::polyring::{Polynomial, RingRef};

pub use steps::{
    choose_test_ideal, endomorphism_ring, extend_ring, is_fixed_point, pick_nzd_or_split,
    split_probe, EndoPresentation, SplitDecision,
};
pub use verify::{verify_result, VerificationReport};

/// A variable adjoined by an extension step, `name = numerator / denominator`
/// over the ring one level down.
#[derive(Clone, Debug)]
pub struct AdjoinedVariable<F: Field> {
    pub name: String,
    pub level: usize,
    pub numerator: Polynomial<F>,
    pub denominator: Polynomial<F>,
    /// The presentation the fraction lives in.
    pub base: QuotientRingContext<F>,
    /// The monic quadratic `X^2 - sum b_k X_k`, in the ring that introduced it.
    pub quadratic: Polynomial<F>,
}

/// `k[x, T]/D` together with the fractions that define the `T`.
#[derive(Clone, Debug)]
pub struct AffinePresentation<F: Field> {
    ctx: QuotientRingContext<F>,
    level: usize,
    original_vars: usize,
    adjoined: Vec<AdjoinedVariable<F>>,
}

impl<F: Field> AffinePresentation<F> {
    /// A level-0 presentation. Fails on the unit ideal.
    pub fn new(defining: Ideal<F>) -> Result<Self> {
        if defining.is_unit() {
            return Err(Error::InvalidRing(
                "defining ideal is the unit ideal".into(),
            ));
        }
        let n = defining.ring().nvars();
        Ok(AffinePresentation {
            ctx: QuotientRingContext::new(defining.reduced()),
            level: 0,
            original_vars: n,
            adjoined: Vec::new(),
        })
    }

    pub fn context(&self) -> &QuotientRingContext<F> {
        &self.ctx
    }

    pub fn ring(&self) -> &RingRef<F> {
        self.ctx.ring()
    }

    pub fn defining(&self) -> &Ideal<F> {
        self.ctx.defining()
    }

    pub fn level(&self) -> usize {
        self.level
    }

    /// Number of variables of the level-0 ring; they come first.
    pub fn original_vars(&self) -> usize {
        self.original_vars
    }

    pub fn adjoined(&self) -> &[AdjoinedVariable<F>] {
        &self.adjoined
    }

    /// Same tower, other relations in the same ring.
    pub fn with_relations(&self, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let defining = Ideal::try_new(self.ring(), gens)?;
        if defining.is_unit() {
            return Err(Error::InvalidRing(
                "defining ideal is the unit ideal".into(),
            ));
        }
        Ok(AffinePresentation {
            ctx: QuotientRingContext::new(defining.reduced()),
            ..self.clone()
        })
    }

    fn add_relations(&self, extra: &Ideal<F>) -> Self {
        AffinePresentation {
            ctx: QuotientRingContext::new(self.defining().sum(extra).reduced()),
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug)]
pub struct NormalizeOptions {
    pub max_iterations: usize,
    pub radical_strategy: RadicalStrategy,
}

impl Default for NormalizeOptions {
    fn default() -> Self {
        NormalizeOptions {
            max_iterations: 32,
            radical_strategy: RadicalStrategy::Auto,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedPointVia {
    /// The test ideal is the unit ideal: no singular point.
    UnitTestIdeal,
    /// `Hom(I, I) = R` for the test ideal `I`.
    TrivialHom,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    TestIdeal {
        component: usize,
        level: usize,
        ideal: String,
    },
    Radical {
        component: usize,
        ideal: String,
    },
    Split {
        component: usize,
        f: String,
        children: [usize; 2],
    },
    HomStep {
        component: usize,
        level: usize,
        f: String,
        t: usize,
    },
    FixedPoint {
        component: usize,
        via: FixedPointVia,
    },
}

impl TraceEvent {
    pub fn component(&self) -> usize {
        match self {
            TraceEvent::TestIdeal { component, .. }
            | TraceEvent::Radical { component, .. }
            | TraceEvent::Split { component, .. }
            | TraceEvent::HomStep { component, .. }
            | TraceEvent::FixedPoint { component, .. } => *component,
        }
    }
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::TestIdeal {
                component,
                level,
                ideal,
            } => {
                write!(f, "TestIdeal c{component} level {level}: {ideal}")
            }
            TraceEvent::Radical { component, ideal } => write!(f, "Radical c{component}: {ideal}"),
            TraceEvent::Split {
                component,
                f: g,
                children: [a, b],
            } => write!(f, "Split c{component} on {g}: c{a}, c{b}"),
            TraceEvent::HomStep {
                component,
                level,
                f: g,
                t,
            } => {
                write!(f, "HomStep c{component} level {level}: f = {g}, t = {t}")
            }
            TraceEvent::FixedPoint { component, via } => match via {
                FixedPointVia::UnitTestIdeal => {
                    write!(f, "FixedPoint c{component}: unit test ideal")
                }
                FixedPointVia::TrivialHom => write!(f, "FixedPoint c{component}: Hom(I,I) = R"),
            },
        }
    }
}

#[derive(Clone, Debug)]
pub struct Component<F: Field> {
    pub id: usize,
    pub presentation: AffinePresentation<F>,
    /// Hom evaluations along this component's history, including its
    /// ancestors before any split.
    pub iterations: usize,
    /// Extension steps along this component's history.
    pub productive_steps: usize,
    pub normal: bool,
}

#[derive(Clone, Debug)]
pub struct NormalizationResult<F: Field> {
    pub components: Vec<Component<F>>,
    pub trace: Vec<TraceEvent>,
}

impl<F: Field> NormalizationResult<F> {
    pub fn productive_steps(&self) -> usize {
        self.trace
            .iter()
            .filter(|e| matches!(e, TraceEvent::HomStep { .. }))
            .count()
    }

    pub fn fixed_points(&self) -> usize {
        self.trace
            .iter()
            .filter(|e| matches!(e, TraceEvent::FixedPoint { .. }))
            .count()
    }

    pub fn splits(&self) -> usize {
        self.trace
            .iter()
            .filter(|e| matches!(e, TraceEvent::Split { .. }))
            .count()
    }

    pub fn trace_lines(&self) -> Vec<String> {
        self.trace.iter().map(|e| e.to_string()).collect()
    }
}

struct Work<F: Field> {
    id: usize,
    pres: AffinePresentation<F>,
    iterations: usize,
    steps: usize,
}

/// Runs the loop on a work list of components until each is normal.
pub fn normalize<F: Field>(
    r0: &AffinePresentation<F>,
    opts: &NormalizeOptions,
) -> Result<NormalizationResult<F>> {
    let mut trace: Vec<TraceEvent> = Vec::new();
    let mut done: Vec<Component<F>> = Vec::new();
    let mut next_id = 1;
    let mut queue = VecDeque::from([Work {
        id: 0,
        pres: r0.clone(),
        iterations: 0,
        steps: 0,
    }]);

    while let Some(mut w) = queue.pop_front() {
        loop {
            let (jac, test) = steps::test_ideals(&w.pres, opts.radical_strategy)?;
            trace.push(TraceEvent::TestIdeal {
                component: w.id,
                level: w.pres.level(),
                ideal: jac.reduced().to_string(),
            });
            trace.push(TraceEvent::Radical {
                component: w.id,
                ideal: test.to_string(),
            });

            let decision = if test.is_unit() {
                None
            } else {
                Some(pick_nzd_or_split(&w.pres, &test)?)
            };
            let (split, via) = match decision {
                Some(SplitDecision::Split(f, ann)) => (Some((f, ann)), None),
                Some(SplitDecision::NonZeroDivisor(f)) => {
                    if w.iterations >= opts.max_iterations {
                        return Err(Error::IterationLimitExceeded {
                            limit: opts.max_iterations,
                            component: w.id,
                            trace: trace.iter().map(|e| e.to_string()).collect(),
                        });
                    }
                    let endo = endomorphism_ring(&w.pres, &test, &f)?;
                    w.iterations += 1;
                    if !is_fixed_point(&endo) {
                        w.steps += 1;
                        trace.push(TraceEvent::HomStep {
                            component: w.id,
                            level: w.pres.level() + 1,
                            f: f.to_string(),
                            t: endo.t(),
                        });
                        w.pres = extend_ring(&w.pres, &endo)?;
                        continue;
                    }
                    (split_probe(&w.pres)?, Some(FixedPointVia::TrivialHom))
                }
                None => (split_probe(&w.pres)?, Some(FixedPointVia::UnitTestIdeal)),
            };

            if let Some((f, ann)) = split {
                let children = [next_id, next_id + 1];
                next_id += 2;
                trace.push(TraceEvent::Split {
                    component: w.id,
                    f: f.to_string(),
                    children,
                });
                let (first, second) = steps::split_factors(&w.pres, &ann)?;
                for (id, pres) in children.into_iter().zip([first, second]) {
                    queue.push_back(Work {
                        id,
                        pres,
                        iterations: w.iterations,
                        steps: w.steps,
                    });
                }
                break;
            }
            trace.push(TraceEvent::FixedPoint {
                component: w.id,
                via: via.expect("fixed point reason"),
            });
            done.push(Component {
                id: w.id,
                presentation: w.pres.clone(),
                iterations: w.iterations,
                productive_steps: w.steps,
                normal: true,
            });
            break;
        }
    }
    Ok(NormalizationResult {
        components: done,
        trace,
    })
}

#[cfg(test)]
mod tests;
