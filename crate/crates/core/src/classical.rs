//! Classical joint distributions for compatible event pairs.
//!
//! When two projectors commute the four cells `||P_y P_x psi||^2` do not
//! depend on the projection order and form an ordinary 2x2 joint
//! distribution. This module builds that table directly, so the sequential
//! engine can be checked against it.

use crate::error::{Error, Result};
use crate::event::{complement, is_compatible, Event};
use crate::judgment::StateVector;
use crate::linalg::apply;
use crate::scalar::{clamp_unit, Real};

/// Rows are `{a, ~a}`, columns `{b, ~b}`.
#[derive(Debug, Clone, PartialEq)]
pub struct JointDistribution<T> {
    pub labels: (String, String),
    pub cells: [[T; 2]; 2],
}

impl<T: Real> JointDistribution<T> {
    /// `P(a)`, the first row sum.
    pub fn marginal_first(&self) -> T {
        self.cells[0][0] + self.cells[0][1]
    }

    /// `P(b)`, the first column sum.
    pub fn marginal_second(&self) -> T {
        self.cells[0][0] + self.cells[1][0]
    }

    pub fn both(&self) -> T {
        self.cells[0][0]
    }

    pub fn total(&self) -> T {
        self.cells.iter().flatten().fold(T::zero(), |acc, &c| acc + c)
    }
}

fn ensure_compatible<T: Real>(a: &Event<T>, b: &Event<T>) -> Result<()> {
    if is_compatible(a, b, T::EPS_COMMUTE)? {
        Ok(())
    } else {
        Err(Error::IncompatibleEvents(a.name().to_owned(), b.name().to_owned()))
    }
}

pub fn joint_distribution<T: Real>(psi: &StateVector<T>, a: &Event<T>, b: &Event<T>) -> Result<JointDistribution<T>> {
    ensure_compatible(a, b)?;
    if psi.dim() != a.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: psi.dim(),
            found: a.ambient_dim(),
        });
    }
    let rows = [a.clone(), complement(a)?];
    let cols = [b.clone(), complement(b)?];
    let mut cells = [[T::zero(); 2]; 2];
    for (x, row) in rows.iter().enumerate() {
        let after_row = apply(row.projector(), psi.vector())?;
        for (y, col) in cols.iter().enumerate() {
            let p = apply(col.projector(), &after_row)?.norm_sqr();
            if p < -T::EPS_CLAMP {
                return Err(Error::InconsistentJoint(format!("negative cell ({x}, {y})")));
            }
            cells[x][y] = clamp_unit(p);
        }
    }
    let table = JointDistribution {
        labels: (a.name().to_owned(), b.name().to_owned()),
        cells,
    };
    if (table.total() - T::one()).abs() > T::EPS_JOINT {
        return Err(Error::InconsistentJoint(format!("cells sum to {}", table.total())));
    }
    Ok(table)
}

/// Executable witness of `P(a and b) <= min(P(a), P(b))` for compatible pairs.
pub fn classical_conjunction_bound_check<T: Real>(psi: &StateVector<T>, a: &Event<T>, b: &Event<T>) -> Result<bool> {
    let joint = joint_distribution(psi, a, b)?;
    let bound = joint.marginal_first().min(joint.marginal_second()) + T::EPS_JOINT;
    Ok(joint.both() <= bound)
}
