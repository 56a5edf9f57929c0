//! Generalized (quantum) probability for modeling human judgment.
//!
//! Events are subspaces of a finite-dimensional complex Hilbert space and a
//! cognitive state is a unit vector. The probability of an event is the
//! squared length of the state's projection onto it. Judging incompatible
//! events happens in sequence, which is what lets the model reproduce the
//! conjunction fallacy and asymmetric similarity judgments; for compatible
//! events everything reduces to classical probability.
//!
//! The numeric modules are generic over the real scalar type ([`Real`],
//! implemented for `f64` and `f32`). The aliases at the crate root fix the
//! scalar to `f64`, which is what the scenario runner uses.
//!
//! ```
//! use qjudge::{conjunction_fallacy_gap, Event, StateVector};
//!
//! let bank_teller = Event::from_real("B", &[&[1.0, 0.0]]).unwrap();
//! let feminist = Event::from_real("F", &[&[1.0, 1.0]]).unwrap();
//! let linda = StateVector::from_angle_deg(80.0);
//!
//! let gap = conjunction_fallacy_gap(&linda, &feminist, &bank_teller).unwrap();
//! assert!(gap > 0.3);
//! ```

pub mod classical;
pub mod error;
pub mod event;
pub mod fit;
pub mod judgment;
pub mod linalg;
pub mod scalar;
pub mod scenario;

pub use classical::{classical_conjunction_bound_check, joint_distribution};
pub use error::{Error, Result};
pub use event::{complement, event_from_vectors, is_compatible, meet};
pub use fit::{fit_2d, forward_2d, residual_2d};
pub use judgment::{
    born_probability, collapse, conjunction_fallacy_gap, interference_term, order_effect, sequential_disjunction,
    sequential_probability, similarity,
};
pub use linalg::{apply, commutator_fro_norm, gram_schmidt, inner_product, norm, normalize, projector_from_basis};
pub use scalar::Real;

/// Complex amplitude.
pub type Scalar = num_complex::Complex<f64>;
pub type Vector = linalg::Vector<f64>;
pub type Matrix = linalg::Matrix<f64>;
pub type Subspace = event::Subspace<f64>;
pub type Event = event::Event<f64>;
pub type StateVector = judgment::StateVector<f64>;
pub type SequenceOutcome = judgment::SequenceOutcome<f64>;
pub type JointDistribution = classical::JointDistribution<f64>;
pub type Targets2D = fit::Targets2D<f64>;
pub type FitResult = fit::FitResult<f64>;

/// Engine version recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
