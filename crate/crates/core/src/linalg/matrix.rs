use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which half of a two-qubit system an operation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    A,
    B,
}

/// Dense square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    data: Vec<Complex<T>>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds a matrix from row-major entries; the entry count must be a square.
    pub fn from_row_major(dim: usize, data: Vec<Complex<T>>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::MalformedMatrix {
                dim,
                expected: dim * dim,
                found: data.len(),
            });
        }
        Ok(Self { dim, data })
    }

    pub fn from_rows(rows: &[Vec<Complex<T>>]) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::MalformedMatrix {
                    dim,
                    expected: dim * dim,
                    found: rows.iter().map(Vec::len).sum(),
                });
            }
            data.extend_from_slice(row);
        }
        Ok(Self { dim, data })
    }

    pub fn from_real_rows(rows: &[&[T]]) -> Result<Self> {
        let rows: Vec<Vec<Complex<T>>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex::new(x, T::zero())).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn diagonal(values: &[T]) -> Self {
        let mut m = Self::zeros(values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex::new(v, T::zero());
        }
        m
    }

    /// `|ket><bra|`.
    pub fn outer(ket: &[Complex<T>], bra: &[Complex<T>]) -> Result<Self> {
        if ket.len() != bra.len() {
            return Err(Error::DimensionMismatch {
                expected: ket.len(),
                found: bra.len(),
            });
        }
        Ok(Self::from_fn(ket.len(), |i, j| ket[i] * bra[j].conj()))
    }

    /// `|v><v|`.
    pub fn projector(v: &[Complex<T>]) -> Self {
        Self::from_fn(v.len(), |i, j| v[i] * v[j].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[Complex<T>] {
        &self.data
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Complex<T>]> {
        self.data.chunks(self.dim.max(1))
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::zero(), |acc, i| acc + self[(i, i)])
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)])
    }

    pub fn scale(&self, factor: T) -> Self {
        self.map(|z| z * factor)
    }

    pub fn scale_complex(&self, factor: Complex<T>) -> Self {
        self.map(|z| z * factor)
    }

    pub fn map(&self, f: impl Fn(Complex<T>) -> Complex<T>) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Complex<T>]) -> Result<Vec<Complex<T>>> {
        self.check_dim(v.len())?;
        Ok(self
            .rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(Complex::zero(), |acc, (&a, &b)| acc + a * b)
            })
            .collect())
    }

    /// `<v|M|v>`.
    pub fn expectation(&self, v: &[Complex<T>]) -> Result<Complex<T>> {
        let mv = self.mul_vec(v)?;
        Ok(v.iter()
            .zip(&mv)
            .fold(Complex::zero(), |acc, (a, b)| acc + a.conj() * b))
    }

    /// Kronecker product `self ⊗ other`, `self` indexing the outer blocks.
    pub fn kron(&self, other: &Self) -> Self {
        let n = other.dim;
        Self::from_fn(self.dim * n, |i, j| {
            self[(i / n, j / n)] * other[(i % n, j % n)]
        })
    }

    /// Transpose of the second qubit of a two-qubit operator: the entry at
    /// `(2i+j, 2k+l)` moves to `(2i+l, 2k+j)`.
    pub fn partial_transpose_b(&self) -> Result<Self> {
        self.check_dim(4)?;
        Ok(Self::from_fn(4, |r, c| {
            let (i, l) = (r / 2, r % 2);
            let (k, j) = (c / 2, c % 2);
            self[(2 * i + j, 2 * k + l)]
        }))
    }

    /// Reduced operator of the two-qubit `self` on the kept subsystem.
    pub fn partial_trace(&self, keep: Subsystem) -> Result<Self> {
        self.check_dim(4)?;
        Ok(match keep {
            Subsystem::A => Self::from_fn(2, |i, k| {
                self[(2 * i, 2 * k)] + self[(2 * i + 1, 2 * k + 1)]
            }),
            Subsystem::B => Self::from_fn(2, |j, l| self[(j, l)] + self[(2 + j, 2 + l)]),
        })
    }

    /// Hilbert–Schmidt overlap `Tr(A B)`, real part.
    ///
    /// For Hermitian arguments the imaginary part vanishes identically.
    pub fn overlap(&self, other: &Self) -> Result<T> {
        Ok(self.trace_product(other)?.re)
    }

    /// `Tr(A B)` without taking the real part.
    pub fn trace_product(&self, other: &Self) -> Result<Complex<T>> {
        self.check_dim(other.dim)?;
        let n = self.dim;
        let mut acc = Complex::zero();
        for i in 0..n {
            for k in 0..n {
                acc = acc + self[(i, k)] * other[(k, i)];
            }
        }
        Ok(acc)
    }

    /// Largest `|M[i][j] - conj(M[j][i])|` and where it occurs.
    pub fn hermiticity_defect(&self) -> (T, usize, usize) {
        let mut worst = (T::zero(), 0, 0);
        for i in 0..self.dim {
            for j in i..self.dim {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                if d > worst.0 {
                    worst = (d, i, j);
                }
            }
        }
        worst
    }

    pub fn ensure_hermitian(&self) -> Result<()> {
        let (dev, row, col) = self.hermiticity_defect();
        if dev > T::hermitian_tolerance() || dev.is_nan() {
            return Err(Error::NotHermitian {
                row,
                col,
                deviation: dev.as_f64(),
            });
        }
        Ok(())
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().map(|z| z.norm()).fold(T::zero(), T::max)
    }

    /// Entrywise infinity norm of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        if self.dim != other.dim {
            return T::infinity();
        }
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    pub fn frobenius_norm(&self) -> T {
        self.data
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Row-major vectorization.
    pub fn vec(&self) -> Vec<Complex<T>> {
        self.data.clone()
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: self.dim,
            });
        }
        Ok(())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = Complex<T>;

    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.data[i * self.dim + j]
    }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;

    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;

    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|z| -z)
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.dim, rhs.dim, "matrix dimensions differ");
        let n = self.dim;
        let mut out = Matrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

/// Pauli matrices in the order `I, X, Y, Z`.
pub fn pauli<T: Scalar>(index: usize) -> Matrix<T> {
    let o = T::zero();
    let l = T::one();
    let c = |re: T, im: T| Complex::new(re, im);
    let entries = match index {
        0 => [c(l, o), c(o, o), c(o, o), c(l, o)],
        1 => [c(o, o), c(l, o), c(l, o), c(o, o)],
        2 => [c(o, o), c(o, -l), c(o, l), c(o, o)],
        3 => [c(l, o), c(o, o), c(o, o), c(-l, o)],
        _ => panic!("Pauli index {index} out of range 0..4"),
    };
    Matrix {
        dim: 2,
        data: entries.to_vec(),
    }
}

/// Choi matrix `(id ⊗ Λ)|Ω><Ω|` of a linear map on `dim × dim` matrices, with
/// `|Ω> = Σ|ii>/√dim` normalized.
pub fn choi_matrix<T: Scalar>(dim: usize, map: impl Fn(&Matrix<T>) -> Matrix<T>) -> Matrix<T> {
    let norm = T::one() / T::from_usize(dim).expect("dimension fits scalar");
    let mut choi = Matrix::zeros(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut unit = Matrix::zeros(dim);
            unit[(i, j)] = Complex::one();
            let image = map(&unit);
            assert_eq!(image.dim(), dim, "map must preserve dimension");
            for a in 0..dim {
                for b in 0..dim {
                    choi[(i * dim + a, j * dim + b)] = image[(a, b)] * norm;
                }
            }
        }
    }
    choi
}
