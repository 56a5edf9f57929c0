//! Born-rule judgments over projection sequences.
//!
//! A judgment about an event scores `||P psi||^2`. Judging several
//! incompatible events happens one after the other: each judgment collapses
//! the state onto the judged subspace (Lüders rule) before the next one is
//! scored, so `P(A then B)` generally differs from `P(B then A)` and can
//! exceed `P(B)` on its own.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::event::{complement, Event};
use crate::linalg::{apply, normalize, Vector};
use crate::scalar::{clamp_unit, Real};

/// Unit-norm cognitive state.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T> {
    vec: Vector<T>,
}

impl<T: Real> StateVector<T> {
    /// Normalizes `v`; fails with [`Error::ZeroVector`] on a zero vector.
    pub fn new(v: Vector<T>) -> Result<Self> {
        Ok(Self { vec: normalize(&v)? })
    }

    pub fn from_real(components: &[T]) -> Result<Self> {
        Self::new(Vector::from_real(components)?)
    }

    /// Real 2D state at `degrees` from the first axis.
    pub fn from_angle_deg(degrees: T) -> Self {
        let r = degrees.to_radians();
        Self {
            vec: Vector::from_real(&[r.cos(), r.sin()]).expect("finite angle"),
        }
    }

    /// Normalized all-ones vector.
    pub fn uniform(dim: usize) -> Self {
        Self::new(Vector::ones(dim)).expect("all-ones vector is nonzero")
    }

    /// Normalized sum of each event's uniform unit vector.
    ///
    /// An event's uniform unit vector is the normalized projection of the
    /// all-ones vector onto it, or the normalized sum of its basis when that
    /// projection vanishes.
    pub fn uniform_over(events: &[&Event<T>]) -> Result<Self> {
        let first = events.first().ok_or(Error::EmptyInput)?;
        let dim = first.ambient_dim();
        let ones = Vector::ones(dim);
        let mut acc = Vector::zeros(dim);
        for e in events {
            if e.ambient_dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: e.ambient_dim(),
                });
            }
            let projected = apply(e.projector(), &ones)?;
            let u = match normalize(&projected) {
                Ok(u) => u,
                Err(_) => {
                    let mut sum = Vector::zeros(dim);
                    for b in e.subspace().basis() {
                        sum = sum.add(b)?;
                    }
                    normalize(&sum)?
                }
            };
            acc = acc.add(&u)?;
        }
        Self::new(acc)
    }

    pub fn vector(&self) -> &Vector<T> {
        &self.vec
    }

    pub fn dim(&self) -> usize {
        self.vec.dim()
    }
}

/// One scored projection inside a sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Step<T> {
    pub event: String,
    /// Probability of this judgment given the state left by the previous ones.
    pub probability: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SequenceOutcome<T> {
    pub probability: T,
    /// Present iff `probability > EPS_ZERO`.
    pub final_state: Option<StateVector<T>>,
    pub trace: Vec<Step<T>>,
}

fn check_dim<T: Real>(psi: &StateVector<T>, e: &Event<T>) -> Result<()> {
    if psi.dim() != e.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: psi.dim(),
            found: e.ambient_dim(),
        });
    }
    Ok(())
}

/// `||P_e psi||^2`, clamped to `[0, 1]`.
pub fn born_probability<T: Real>(psi: &StateVector<T>, e: &Event<T>) -> Result<T> {
    check_dim(psi, e)?;
    Ok(clamp_unit(apply(e.projector(), &psi.vec)?.norm_sqr()))
}

/// Lüders update: the normalized projection of `psi` onto `e`.
pub fn collapse<T: Real>(psi: &StateVector<T>, e: &Event<T>) -> Result<StateVector<T>> {
    check_dim(psi, e)?;
    let projected = apply(e.projector(), &psi.vec)?;
    if projected.norm_sqr() <= T::EPS_ZERO {
        return Err(Error::ZeroProbabilityCollapse(e.name().to_owned()));
    }
    StateVector::new(projected)
}

/// `||P_n ... P_2 P_1 psi||^2` with a per-step record.
///
/// The total is the product of the per-step conditional probabilities.
/// Once a projection annihilates the state, every later step records zero
/// and the outcome has no final state.
pub fn sequential_probability<T: Real>(psi: &StateVector<T>, events: &[Event<T>]) -> Result<SequenceOutcome<T>> {
    if events.is_empty() {
        return Err(Error::EmptyInput);
    }
    for e in events {
        check_dim(psi, e)?;
    }
    let mut state = Some(psi.clone());
    let mut probability = T::one();
    let mut trace = Vec::with_capacity(events.len());
    for e in events {
        let step = match &state {
            Some(s) => {
                let projected = apply(e.projector(), &s.vec)?;
                let p = clamp_unit(projected.norm_sqr());
                if p <= T::EPS_ZERO {
                    state = None;
                    T::zero()
                } else {
                    let n = p.sqrt().recip();
                    state = Some(StateVector {
                        vec: projected.scale(Complex::new(n, T::zero())),
                    });
                    p
                }
            }
            None => T::zero(),
        };
        probability = probability * step;
        trace.push(Step {
            event: e.name().to_owned(),
            probability: step,
        });
    }
    if probability <= T::EPS_ZERO {
        state = None;
    }
    Ok(SequenceOutcome {
        probability,
        final_state: state,
        trace,
    })
}

/// `P(first then second) - P(second)`; positive means the sequential
/// conjunction is judged more probable than its second constituent.
pub fn conjunction_fallacy_gap<T: Real>(psi: &StateVector<T>, first: &Event<T>, second: &Event<T>) -> Result<T> {
    let joint = sequential_probability(psi, &[first.clone(), second.clone()])?.probability;
    Ok(joint - born_probability(psi, second)?)
}

/// `1 - P(~first then ~second)`.
pub fn sequential_disjunction<T: Real>(psi: &StateVector<T>, first: &Event<T>, second: &Event<T>) -> Result<T> {
    let not_first = complement(first)?;
    let not_second = complement(second)?;
    let neither = sequential_probability(psi, &[not_first, not_second])?.probability;
    Ok(clamp_unit(T::one() - neither))
}

/// `P(a then b) - P(b then a)`.
pub fn order_effect<T: Real>(psi: &StateVector<T>, a: &Event<T>, b: &Event<T>) -> Result<T> {
    let ab = sequential_probability(psi, &[a.clone(), b.clone()])?.probability;
    let ba = sequential_probability(psi, &[b.clone(), a.clone()])?.probability;
    Ok(ab - ba)
}

/// Deviation from the law of total probability:
/// `P(target) - [P(partition then target) + P(~partition then target)]`.
pub fn interference_term<T: Real>(psi: &StateVector<T>, partition: &Event<T>, target: &Event<T>) -> Result<T> {
    let not_partition = complement(partition)?;
    let via = sequential_probability(psi, &[partition.clone(), target.clone()])?.probability;
    let via_not = sequential_probability(psi, &[not_partition, target.clone()])?.probability;
    Ok(born_probability(psi, target)? - (via + via_not))
}

/// `Sim(a, b)`: project onto `a`, then onto `b`, unnormalized.
pub fn similarity<T: Real>(psi: &StateVector<T>, a: &Event<T>, b: &Event<T>) -> Result<T> {
    Ok(sequential_probability(psi, &[a.clone(), b.clone()])?.probability)
}
