//! Dense complex vectors and matrices sized for cognitive models (d <= ~16).
//!
//! Everything here is a pure function over immutable values. Storage is
//! row-major; there is no sparse path.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{is_finite, Real};

/// Column vector of complex amplitudes. Never empty, never non-finite.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<T> {
    data: Vec<Complex<T>>,
}

impl<T: Real> Vector<T> {
    pub fn new(data: Vec<Complex<T>>) -> Result<Self> {
        if data.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !data.iter().all(is_finite) {
            return Err(Error::NonFinite);
        }
        Ok(Self { data })
    }

    /// Builds a vector with zero imaginary parts.
    pub fn from_real(data: &[T]) -> Result<Self> {
        Self::new(data.iter().map(|&x| Complex::new(x, T::zero())).collect())
    }

    /// The `index`-th standard basis vector of dimension `dim`.
    ///
    /// # Panics
    /// If `dim == 0` or `index >= dim`.
    pub fn unit(dim: usize, index: usize) -> Self {
        assert!(index < dim, "basis index {index} out of range for dim {dim}");
        let mut data = vec![Complex::zero(); dim];
        data[index] = Complex::one();
        Self { data }
    }

    /// The all-ones vector (not normalized).
    ///
    /// # Panics
    /// If `dim == 0`.
    pub fn ones(dim: usize) -> Self {
        assert!(dim > 0, "dimension must be positive");
        Self {
            data: vec![Complex::one(); dim],
        }
    }

    pub(crate) fn zeros(dim: usize) -> Self {
        Self {
            data: vec![Complex::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn components(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn scale(&self, s: Complex<T>) -> Self {
        Self {
            data: self.data.iter().map(|&c| c * s).collect(),
        }
    }

    pub(crate) fn axpy_in_place(&mut self, alpha: Complex<T>, x: &Self) {
        for (y, &xi) in self.data.iter_mut().zip(&x.data) {
            *y = *y + alpha * xi;
        }
    }

    pub(crate) fn add(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim(), other.dim())?;
        Ok(Self {
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect(),
        })
    }

    /// Squared Euclidean norm.
    pub fn norm_sqr(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, c| acc + c.norm_sqr())
    }
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<Complex<T>>,
}

impl<T: Real> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyInput);
        }
        check_dims(rows * cols, data.len())?;
        if !data.iter().all(is_finite) {
            return Err(Error::NonFinite);
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from real rows. All rows must have equal length.
    pub fn from_real_rows(rows: &[&[T]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            check_dims(cols, row.len())?;
            data.extend(row.iter().map(|&x| Complex::new(x, T::zero())));
        }
        Self::new(rows.len(), cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.data[row * self.cols + col]
    }

    pub fn entries(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn column(&self, col: usize) -> Vector<T> {
        Vector {
            data: (0..self.rows).map(|r| self.get(r, col)).collect(),
        }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        check_dims(self.cols, other.rows)?;
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx] + a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex<T>, Complex<T>) -> Complex<T>) -> Result<Self> {
        check_dims(self.rows, other.rows)?;
        check_dims(self.cols, other.cols)?;
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f(a, b)).collect(),
        })
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).conj();
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, c| acc + c.norm_sqr())
            .sqrt()
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.rows.min(self.cols)).fold(Complex::zero(), |acc, i| acc + self.get(i, i))
    }
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `<a|b>`, conjugate-linear in the first argument.
pub fn inner_product<T: Real>(a: &Vector<T>, b: &Vector<T>) -> Result<Complex<T>> {
    check_dims(a.dim(), b.dim())?;
    Ok(inner_unchecked(a, b))
}

fn inner_unchecked<T: Real>(a: &Vector<T>, b: &Vector<T>) -> Complex<T> {
    a.data
        .iter()
        .zip(&b.data)
        .fold(Complex::zero(), |acc, (&x, &y)| acc + x.conj() * y)
}

pub fn norm<T: Real>(a: &Vector<T>) -> T {
    a.norm_sqr().sqrt()
}

pub fn normalize<T: Real>(a: &Vector<T>) -> Result<Vector<T>> {
    let n = norm(a);
    if n <= T::EPS_ZERO {
        return Err(Error::ZeroVector);
    }
    Ok(a.scale(Complex::new(n.recip(), T::zero())))
}

/// Removes the components of `w` along each (orthonormal) vector of `onb`,
/// twice. The second sweep picks up the rounding left by the first.
fn orthogonalize_against<T: Real>(w: &mut Vector<T>, onb: &[Vector<T>]) {
    for _ in 0..2 {
        for q in onb {
            let c = inner_unchecked(q, w);
            w.axpy_in_place(-c, q);
        }
    }
}

/// Modified Gram-Schmidt with re-orthogonalization.
///
/// Returns an orthonormal basis of `span(vs)` in input order; vectors whose
/// residual norm is at most `T::EPS_RANK` are dropped, so the output length
/// is the numerical rank.
pub fn gram_schmidt<T: Real>(vs: &[Vector<T>]) -> Result<Vec<Vector<T>>> {
    let dim = vs.first().ok_or(Error::EmptyInput)?.dim();
    for v in vs {
        check_dims(dim, v.dim())?;
    }
    let mut onb: Vec<Vector<T>> = Vec::with_capacity(vs.len().min(dim));
    for v in vs {
        if onb.len() == dim {
            break;
        }
        let mut w = v.clone();
        orthogonalize_against(&mut w, &onb);
        let n = norm(&w);
        if n > T::EPS_RANK {
            onb.push(w.scale(Complex::new(n.recip(), T::zero())));
        }
    }
    if onb.is_empty() {
        return Err(Error::ZeroVector);
    }
    Ok(onb)
}

/// Orthonormal basis of the column space of `m`, chosen greedily by largest
/// remaining column residual. Returns an empty list for a (numerically) zero
/// matrix.
pub fn column_space_basis<T: Real>(m: &Matrix<T>) -> Vec<Vector<T>> {
    let mut residuals: Vec<Vector<T>> = (0..m.cols()).map(|j| m.column(j)).collect();
    let mut onb: Vec<Vector<T>> = Vec::new();
    while onb.len() < m.rows() {
        let Some((best, n)) = residuals
            .iter()
            .map(norm)
            .enumerate()
            .fold(None, |acc: Option<(usize, T)>, (j, n)| match acc {
                Some((_, bn)) if bn >= n => acc,
                _ => Some((j, n)),
            })
        else {
            break;
        };
        if n <= T::EPS_RANK {
            break;
        }
        let mut q = residuals.swap_remove(best);
        orthogonalize_against(&mut q, &onb);
        let qn = norm(&q);
        if qn <= T::EPS_RANK {
            continue;
        }
        let q = q.scale(Complex::new(qn.recip(), T::zero()));
        for r in residuals.iter_mut() {
            orthogonalize_against(r, std::slice::from_ref(&q));
        }
        onb.push(q);
    }
    onb
}

/// `P = sum_i |v_i><v_i|` for an orthonormal list.
pub fn projector_from_basis<T: Real>(onb: &[Vector<T>]) -> Result<Matrix<T>> {
    let dim = onb.first().ok_or(Error::EmptyInput)?.dim();
    for v in onb {
        check_dims(dim, v.dim())?;
    }
    for (i, a) in onb.iter().enumerate() {
        if (norm(a) - T::one()).abs() > T::EPS_ORTHO {
            return Err(Error::NotOrthonormal);
        }
        for b in &onb[i + 1..] {
            if inner_unchecked(a, b).norm() > T::EPS_ORTHO {
                return Err(Error::NotOrthonormal);
            }
        }
    }
    let mut p = Matrix::zeros(dim, dim);
    for v in onb {
        for i in 0..dim {
            for j in 0..dim {
                let idx = i * dim + j;
                p.data[idx] = p.data[idx] + v.data[i] * v.data[j].conj();
            }
        }
    }
    Ok(p)
}

/// Matrix-vector product.
pub fn apply<T: Real>(m: &Matrix<T>, v: &Vector<T>) -> Result<Vector<T>> {
    check_dims(m.cols(), v.dim())?;
    let data = (0..m.rows())
        .map(|i| {
            (0..m.cols()).fold(Complex::zero(), |acc, j| acc + m.get(i, j) * v.data[j])
        })
        .collect();
    Ok(Vector { data })
}

/// `||AB - BA||_F`; zero exactly when the matrices commute.
pub fn commutator_fro_norm<T: Real>(a: &Matrix<T>, b: &Matrix<T>) -> Result<T> {
    check_dims(a.rows(), a.cols())?;
    check_dims(b.rows(), b.cols())?;
    check_dims(a.rows(), b.rows())?;
    Ok(a.matmul(b)?.sub(&b.matmul(a)?)?.frobenius_norm())
}
