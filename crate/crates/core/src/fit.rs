//! Recovering the planar conjunction geometry from observed probabilities.
//!
//! The model fixes `B` on the first axis of a real plane and places `F` at
//! angle `theta_f` and the state at `theta_psi` (degrees, taken mod 180).
//! Its three observables are
//!
//! ```text
//! P(B)        = cos^2(theta_psi)
//! P(F)        = cos^2(theta_psi - theta_f)
//! P(F then B) = cos^2(theta_psi - theta_f) * cos^2(theta_f)
//! ```
//!
//! [`fit_2d`] scans a full grid over `[0, 180)^2` and then refines the best
//! node by alternating golden-section searches along each coordinate. The
//! observables are invariant under `(theta_f, theta_psi) -> (-theta_f,
//! -theta_psi)`, so the result is reported with `theta_f` in `[0, 90]`.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Observed `(P(B), P(F), P(F then B))` with per-observable weights.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Targets2D<T> {
    pub p_second: T,
    pub p_first: T,
    pub p_seq: T,
    pub weights: [T; 3],
}

impl<T: Real> Targets2D<T> {
    pub fn new(p_second: T, p_first: T, p_seq: T) -> Result<Self> {
        Self::with_weights(p_second, p_first, p_seq, [T::one(); 3])
    }

    pub fn with_weights(p_second: T, p_first: T, p_seq: T, weights: [T; 3]) -> Result<Self> {
        for (name, p) in [("p_second", p_second), ("p_first", p_first), ("p_seq", p_seq)] {
            if !(p >= T::zero() && p <= T::one()) {
                return Err(Error::InvalidParameter(format!("{name} = {p} is not a probability")));
            }
        }
        if weights.iter().any(|w| !(w.is_finite() && *w >= T::zero())) {
            return Err(Error::InvalidParameter("weights must be finite and nonnegative".into()));
        }
        if weights.iter().all(|w| w.is_zero()) {
            return Err(Error::InvalidParameter("at least one weight must be positive".into()));
        }
        Ok(Self {
            p_second,
            p_first,
            p_seq,
            weights,
        })
    }

    fn values(&self) -> [T; 3] {
        [self.p_second, self.p_first, self.p_seq]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FitResult<T> {
    /// Degrees, in `[0, 90]`.
    pub theta_f: T,
    /// Degrees, in `[0, 180)`.
    pub theta_psi: T,
    pub residual: T,
    /// `forward_2d(theta_f, theta_psi)`.
    pub predicted: [T; 3],
    /// Residual of the best coarse grid node, before refinement.
    pub grid_residual: T,
}

/// Closed-form `(P(B), P(F), P(F then B))` of the planar model.
pub fn forward_2d<T: Real>(theta_f: T, theta_psi: T) -> [T; 3] {
    let f = theta_f.to_radians();
    let psi = theta_psi.to_radians();
    let cos2 = |x: T| {
        let c = x.cos();
        c * c
    };
    let p_b = cos2(psi);
    let p_f = cos2(psi - f);
    [p_b, p_f, p_f * cos2(f)]
}

/// Weighted sum of squared prediction errors.
pub fn residual_2d<T: Real>(targets: &Targets2D<T>, theta_f: T, theta_psi: T) -> T {
    let predicted = forward_2d(theta_f, theta_psi);
    predicted
        .iter()
        .zip(targets.values())
        .zip(targets.weights)
        .fold(T::zero(), |acc, ((&p, t), w)| acc + w * (p - t) * (p - t))
}

const MAX_REFINE_ROUNDS: usize = 1000;

/// Golden-section minimization of `g` on `[lo, hi]` down to a bracket
/// narrower than `tol`. Returns the best evaluated point.
fn golden_section<T: Real>(g: impl Fn(T) -> T, lo: T, hi: T, tol: T) -> (T, T) {
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) / T::lit(2.0);
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut gc, mut gd) = (g(c), g(d));
    while b - a >= tol {
        if gc <= gd {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d);
        }
    }
    if gc <= gd {
        (c, gc)
    } else {
        (d, gd)
    }
}

fn wrap_180<T: Real>(deg: T) -> T {
    let full = T::lit(180.0);
    let w = deg % full;
    let w = if w < T::zero() { w + full } else { w };
    // `w + 180` can round up to exactly 180.
    if w >= full {
        T::zero()
    } else {
        w
    }
}

/// Exhaustive grid scan followed by coordinate-wise golden-section
/// refinement. Grid ties break toward smaller `theta_f`, then smaller
/// `theta_psi`. Deterministic.
pub fn fit_2d<T: Real>(targets: &Targets2D<T>, grid_step: T, refine_tol: T) -> Result<FitResult<T>> {
    if !(grid_step > T::zero() && grid_step.is_finite()) {
        return Err(Error::InvalidParameter(format!("grid step {grid_step} must be positive")));
    }
    if !(refine_tol > T::zero() && refine_tol.is_finite()) {
        return Err(Error::InvalidParameter(format!("refinement tolerance {refine_tol} must be positive")));
    }
    let full = T::lit(180.0);
    let nodes: Vec<T> = (0..)
        .map(|i| T::from_usize(i).expect("grid index") * grid_step)
        .take_while(|&x| x < full)
        .collect();

    let mut best = (T::zero(), T::zero(), T::infinity());
    for &f in &nodes {
        for &p in &nodes {
            let r = residual_2d(targets, f, p);
            if r < best.2 {
                best = (f, p, r);
            }
        }
    }
    let (mut f, mut p, mut r) = best;
    let grid_residual = r;

    for _ in 0..MAX_REFINE_ROUNDS {
        let (f0, p0) = (f, p);
        let (nf, rf) = golden_section(|x| residual_2d(targets, x, p), f - grid_step, f + grid_step, refine_tol);
        if rf < r {
            f = nf;
            r = rf;
        }
        let (np, rp) = golden_section(|y| residual_2d(targets, f, y), p - grid_step, p + grid_step, refine_tol);
        if rp < r {
            p = np;
            r = rp;
        }
        if (f - f0).abs() < refine_tol && (p - p0).abs() < refine_tol {
            break;
        }
    }

    let (mut f, mut p) = (wrap_180(f), wrap_180(p));
    if f > T::lit(90.0) {
        f = wrap_180(full - f);
        p = wrap_180(full - p);
    }
    Ok(FitResult {
        theta_f: f,
        theta_psi: p,
        residual: residual_2d(targets, f, p),
        predicted: forward_2d(f, p),
        grid_residual,
    })
}
