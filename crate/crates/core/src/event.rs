//! Events as subspaces of the state space.
//!
//! An [`Event`] owns an orthonormal basis of its subspace and the projector
//! built from it. Negation is the orthocomplement; conjunction as a subspace
//! ([`meet`]) exists only for compatible (commuting) events.

use crate::error::{Error, Result};
use crate::linalg::{column_space_basis, commutator_fro_norm, gram_schmidt, projector_from_basis, Matrix, Vector};
use crate::scalar::Real;

/// Orthonormal basis of a subspace of a `ambient_dim`-dimensional space.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<T> {
    ambient_dim: usize,
    basis: Vec<Vector<T>>,
}

impl<T: Real> Subspace<T> {
    /// Orthonormalizes `raw` and keeps its numerical span.
    pub fn span(ambient_dim: usize, raw: &[Vector<T>]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        for v in raw {
            if v.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: v.dim(),
                });
            }
        }
        Ok(Self {
            ambient_dim,
            basis: gram_schmidt(raw)?,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<T>] {
        &self.basis
    }
}

/// A named event with its cached orthogonal projector.
#[derive(Debug, Clone, PartialEq)]
pub struct Event<T> {
    name: String,
    subspace: Subspace<T>,
    projector: Matrix<T>,
}

impl<T: Real> Event<T> {
    pub fn new(name: impl Into<String>, subspace: Subspace<T>) -> Result<Self> {
        let projector = projector_from_basis(subspace.basis())?;
        Ok(Self {
            name: name.into(),
            subspace,
            projector,
        })
    }

    /// Event spanned by `raw`; rank-deficient input reduces to its true rank.
    pub fn from_vectors(name: impl Into<String>, ambient_dim: usize, raw: &[Vector<T>]) -> Result<Self> {
        Self::new(name, Subspace::span(ambient_dim, raw)?)
    }

    /// Convenience constructor from real coordinates.
    pub fn from_real(name: impl Into<String>, raw: &[&[T]]) -> Result<Self> {
        let vs = raw.iter().map(|r| Vector::from_real(r)).collect::<Result<Vec<_>>>()?;
        let dim = vs.first().ok_or(Error::EmptyInput)?.dim();
        Self::from_vectors(name, dim, &vs)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn subspace(&self) -> &Subspace<T> {
        &self.subspace
    }

    pub fn projector(&self) -> &Matrix<T> {
        &self.projector
    }

    pub fn ambient_dim(&self) -> usize {
        self.subspace.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// True when the complement is a nonzero subspace.
    pub fn has_complement(&self) -> bool {
        self.dim() < self.ambient_dim()
    }

    pub fn complement(&self) -> Result<Self> {
        complement(self)
    }

    pub fn is_compatible(&self, other: &Self) -> Result<bool> {
        is_compatible(self, other, T::EPS_COMMUTE)
    }
}

/// `event_from_vectors` in free-function form.
pub fn event_from_vectors<T: Real>(name: &str, ambient_dim: usize, raw: &[Vector<T>]) -> Result<Event<T>> {
    Event::from_vectors(name, ambient_dim, raw)
}

/// Orthocomplement event, named `~name`, with projector `I - P`.
pub fn complement<T: Real>(e: &Event<T>) -> Result<Event<T>> {
    if !e.has_complement() {
        return Err(Error::FullSpace(e.name.clone()));
    }
    let rest = Matrix::identity(e.ambient_dim()).sub(&e.projector)?;
    let basis = column_space_basis(&rest);
    debug_assert_eq!(basis.len(), e.ambient_dim() - e.dim());
    Event::new(
        format!("~{}", e.name),
        Subspace {
            ambient_dim: e.ambient_dim(),
            basis,
        },
    )
}

/// Whether the projectors of `a` and `b` commute to within `tol` (Frobenius).
pub fn is_compatible<T: Real>(a: &Event<T>, b: &Event<T>, tol: T) -> Result<bool> {
    Ok(commutator_fro_norm(&a.projector, &b.projector)? <= tol)
}

/// Intersection of two compatible events, named `a&b`.
///
/// Incompatible pairs have no joint subspace in this model; they are
/// judged in sequence instead, so this returns
/// [`Error::IncompatibleEvents`] rather than falling back.
pub fn meet<T: Real>(a: &Event<T>, b: &Event<T>) -> Result<Event<T>> {
    if !is_compatible(a, b, T::EPS_COMMUTE)? {
        return Err(Error::IncompatibleEvents(a.name.clone(), b.name.clone()));
    }
    let product = a.projector.matmul(&b.projector)?;
    // Rank of a projector is its trace; anything below one half is {0}.
    if product.trace().re < T::lit(0.5) {
        return Err(Error::ZeroVector);
    }
    let basis = column_space_basis(&product);
    if basis.is_empty() {
        return Err(Error::ZeroVector);
    }
    Event::new(
        format!("{}&{}", a.name, b.name),
        Subspace {
            ambient_dim: a.ambient_dim(),
            basis,
        },
    )
}
