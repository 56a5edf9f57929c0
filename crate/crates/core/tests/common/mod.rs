#![allow(dead_code)]

use num_complex::Complex;
use proptest::prelude::*;
use qjudge::{gram_schmidt, Event, StateVector, Vector};
use rand::Rng;

pub fn complex_vector(data: &[(f64, f64)]) -> Vector {
    Vector::new(data.iter().map(|&(re, im)| Complex::new(re, im)).collect()).unwrap()
}

/// Orthonormal basis of the whole space from `dim` raw vectors, or `None`
/// when they are (numerically) dependent.
pub fn orthonormal_basis(raw: &[Vec<(f64, f64)>]) -> Option<Vec<Vector>> {
    let dim = raw.len();
    let vs: Vec<Vector> = raw.iter().map(|r| complex_vector(r)).collect();
    // Reject badly conditioned draws.
    if vs.iter().any(|v| qjudge::norm(v) < 1e-3) {
        return None;
    }
    let onb = gram_schmidt(&vs).ok()?;
    (onb.len() == dim).then_some(onb)
}

/// Event spanned by the basis vectors selected by `members`.
pub fn span_event(name: &str, basis: &[Vector], members: &[bool]) -> Event {
    let chosen: Vec<Vector> = basis
        .iter()
        .zip(members)
        .filter(|(_, &m)| m)
        .map(|(v, _)| v.clone())
        .collect();
    Event::from_vectors(name, basis[0].dim(), &chosen).unwrap()
}

/// Forces a membership mask to select a nonempty proper subset.
pub fn proper(mut mask: Vec<bool>) -> Vec<bool> {
    if mask.iter().all(|&m| !m) {
        mask[0] = true;
    }
    if mask.iter().all(|&m| m) {
        let last = mask.len() - 1;
        mask[last] = false;
    }
    mask
}

pub fn random_complex<R: Rng>(rng: &mut R, dim: usize) -> Vec<(f64, f64)> {
    (0..dim).map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect()
}

pub fn random_state<R: Rng>(rng: &mut R, dim: usize) -> StateVector {
    loop {
        if let Ok(s) = StateVector::new(complex_vector(&random_complex(rng, dim))) {
            return s;
        }
    }
}

pub fn random_basis<R: Rng>(rng: &mut R, dim: usize) -> Vec<Vector> {
    loop {
        let raw: Vec<_> = (0..dim).map(|_| random_complex(rng, dim)).collect();
        if let Some(b) = orthonormal_basis(&raw) {
            return b;
        }
    }
}

/// Two commuting events with proper complements: both are spans of subsets
/// of one random orthonormal basis.
pub fn random_compatible_pair<R: Rng>(rng: &mut R, dim: usize) -> (Event, Event) {
    let basis = random_basis(rng, dim);
    let a = proper((0..dim).map(|_| rng.gen_bool(0.5)).collect());
    let b = proper((0..dim).map(|_| rng.gen_bool(0.5)).collect());
    (span_event("a", &basis, &a), span_event("b", &basis, &b))
}

/// Strategy pieces for proptest.
pub fn cvec(dim: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), dim)
}

pub fn state(dim: usize) -> impl Strategy<Value = StateVector> {
    cvec(dim).prop_filter_map("zero state", |v| StateVector::new(complex_vector(&v)).ok())
}

pub fn basis(dim: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(cvec(dim), dim).prop_filter_map("dependent basis", |raw| orthonormal_basis(&raw))
}

/// `(psi, a, b)` with `a`, `b` commuting proper events in dims 2..=8.
pub fn compatible_setup() -> impl Strategy<Value = (StateVector, Event, Event)> {
    (2usize..=8).prop_flat_map(|d| {
        (
            state(d),
            basis(d),
            prop::collection::vec(any::<bool>(), d),
            prop::collection::vec(any::<bool>(), d),
        )
            .prop_map(|(psi, basis, a, b)| {
                (psi, span_event("a", &basis, &proper(a)), span_event("b", &basis, &proper(b)))
            })
    })
}

/// `(psi, a, b)` with `span(a)` contained in `span(b)`, both proper.
pub fn nested_setup() -> impl Strategy<Value = (StateVector, Event, Event)> {
    (2usize..=8).prop_flat_map(|d| (state(d), basis(d), 1..d, 1..d)).prop_map(|(psi, basis, x, y)| {
        let (small, large) = (x.min(y), x.max(y));
        let d = basis.len();
        let a: Vec<bool> = (0..d).map(|i| i < small).collect();
        let b: Vec<bool> = (0..d).map(|i| i < large).collect();
        (psi, span_event("a", &basis, &a), span_event("b", &basis, &b))
    })
}

/// `(psi, a)` with `a` a random subspace of rank `1..d` (proper).
pub fn proper_event_setup() -> impl Strategy<Value = (StateVector, Event)> {
    (2usize..=8)
        .prop_flat_map(|d| (state(d), prop::collection::vec(cvec(d), 1..d)))
        .prop_filter_map("degenerate span", |(psi, raw)| {
            let vs: Vec<Vector> = raw.iter().map(|r| complex_vector(r)).collect();
            Event::from_vectors("e", psi.dim(), &vs).ok().map(|e| (psi, e))
        })
}

/// `(psi, a, b)` with arbitrary events (generally incompatible), ranks
/// `1..d`.
pub fn generic_setup() -> impl Strategy<Value = (StateVector, Event, Event)> {
    (2usize..=8)
        .prop_flat_map(|d| {
            (
                state(d),
                prop::collection::vec(cvec(d), 1..d),
                prop::collection::vec(cvec(d), 1..d),
            )
        })
        .prop_filter_map("degenerate span", |(psi, ra, rb)| {
            let d = psi.dim();
            let a = Event::from_vectors("a", d, &ra.iter().map(|r| complex_vector(r)).collect::<Vec<_>>()).ok()?;
            let b = Event::from_vectors("b", d, &rb.iter().map(|r| complex_vector(r)).collect::<Vec<_>>()).ok()?;
            Some((psi, a, b))
        })
}
