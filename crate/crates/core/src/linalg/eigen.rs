//! Cyclic Jacobi eigensolver for small dense Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary and then applies the classical real Jacobi rotation, so the
//! combined step is unitary and zeroes `a_pq` and `a_qp` together.
//!
//! Output is canonicalized so that repeated calls on the same input return
//! the same vectors: eigenvalues ascend, every eigenvector's largest-modulus
//! component is real and positive, and vectors inside a degenerate cluster
//! are sorted by their component moduli (lexicographically, larger first).

use std::cmp::Ordering;

use num_complex::Complex;
use num_traits::Zero;

use super::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order with their orthonormal eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem<T> {
    pub values: Vec<T>,
    pub vectors: Vec<Vec<Complex<T>>>,
}

impl<T: Scalar> EigenSystem<T> {
    pub fn min_value(&self) -> T {
        self.values[0]
    }

    pub fn min_vector(&self) -> &[Complex<T>] {
        &self.vectors[0]
    }

    pub fn max_value(&self) -> T {
        *self.values.last().expect("non-empty spectrum")
    }

    /// `Σ λ_i |v_i><v_i|`.
    pub fn reconstruct(&self) -> Matrix<T> {
        let n = self.values.len();
        let mut out = Matrix::zeros(n);
        for (&lambda, v) in self.values.iter().zip(&self.vectors) {
            out = &out + &Matrix::projector(v).scale(lambda);
        }
        out
    }

    /// Number of eigenvalues with modulus above `tol`.
    pub fn rank(&self, tol: T) -> usize {
        self.values.iter().filter(|v| v.abs() > tol).count()
    }
}

fn off_diagonal_norm<T: Scalar>(a: &Matrix<T>) -> T {
    let n = a.dim();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc = acc + a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

/// Eigen-decomposition of a Hermitian matrix.
pub fn hermitian_eigensystem<T: Scalar>(m: &Matrix<T>) -> Result<EigenSystem<T>> {
    m.ensure_hermitian()?;
    let n = m.dim();
    // symmetrize exactly so round-off in the input cannot leak into the rotations
    let mut a = Matrix::from_fn(n, |i, j| {
        if i == j {
            Complex::new(m[(i, i)].re, T::zero())
        } else {
            (m[(i, j)] + m[(j, i)].conj()) * T::lit(0.5)
        }
    });
    let mut v = Matrix::<T>::identity(n);

    let tol = T::jacobi_tolerance() * T::one().max(a.frobenius_norm());
    let two = T::lit(2.0);
    let mut sweeps = 0;
    loop {
        let off = off_diagonal_norm(&a);
        if off <= tol {
            break;
        }
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off.as_f64(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let mag = apq.norm();
                if mag <= T::min_positive_value() {
                    continue;
                }
                let phase = apq / mag;
                let theta = (a[(q, q)].re - a[(p, p)].re) / (two * mag);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;

                // G = diag(.., 1_p, conj(phase)_q, ..) · R(c, s)
                let g_pp = Complex::new(c, T::zero());
                let g_pq = Complex::new(s, T::zero());
                let g_qp = phase.conj() * (-s);
                let g_qq = phase.conj() * c;

                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * g_pp + akq * g_qp;
                    a[(k, q)] = akp * g_pq + akq * g_qq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = g_pp.conj() * apk + g_qp.conj() * aqk;
                    a[(q, k)] = g_pq.conj() * apk + g_qq.conj() * aqk;
                }
                a[(p, q)] = Complex::zero();
                a[(q, p)] = Complex::zero();
                a[(p, p)] = Complex::new(a[(p, p)].re, T::zero());
                a[(q, q)] = Complex::new(a[(q, q)].re, T::zero());

                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * g_pp + vkq * g_qp;
                    v[(k, q)] = vkp * g_pq + vkq * g_qq;
                }
            }
        }
    }

    let mut pairs: Vec<(T, Vec<Complex<T>>)> = (0..n)
        .map(|j| {
            let col: Vec<Complex<T>> = (0..n).map(|k| v[(k, j)]).collect();
            (a[(j, j)].re, fix_phase(col))
        })
        .collect();
    pairs.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap_or(Ordering::Equal));
    order_degenerate_clusters(&mut pairs);

    let (values, vectors) = pairs.into_iter().unzip();
    Ok(EigenSystem { values, vectors })
}

/// Rotates the global phase so the largest-modulus component (first one on
/// near-ties) is real and positive.
fn fix_phase<T: Scalar>(mut v: Vec<Complex<T>>) -> Vec<Complex<T>> {
    let tie = T::hermitian_tolerance();
    let mut best = 0;
    for (k, z) in v.iter().enumerate() {
        if z.norm() > v[best].norm() + tie {
            best = k;
        }
    }
    let pivot = v[best];
    let mag = pivot.norm();
    if mag > T::zero() {
        let rot = pivot.conj() / mag;
        for z in &mut v {
            *z = *z * rot;
        }
        v[best] = Complex::new(v[best].norm(), T::zero());
    }
    v
}

fn compare_moduli<T: Scalar>(x: &[Complex<T>], y: &[Complex<T>]) -> Ordering {
    let tie = T::hermitian_tolerance();
    for (a, b) in x.iter().zip(y) {
        let (a, b) = (a.norm(), b.norm());
        if (a - b).abs() > tie {
            // larger modulus first
            return b.partial_cmp(&a).unwrap_or(Ordering::Equal);
        }
    }
    Ordering::Equal
}

fn order_degenerate_clusters<T: Scalar>(pairs: &mut [(T, Vec<Complex<T>>)]) {
    let gap = T::degeneracy_gap();
    let mut start = 0;
    while start < pairs.len() {
        let mut end = start + 1;
        while end < pairs.len() && pairs[end].0 - pairs[end - 1].0 < gap {
            end += 1;
        }
        if end - start > 1 {
            let cluster = &mut pairs[start..end];
            let values: Vec<T> = cluster.iter().map(|p| p.0).collect();
            cluster.sort_by(|x, y| compare_moduli(&x.1, &y.1));
            for (slot, value) in cluster.iter_mut().zip(values) {
                slot.0 = value;
            }
        }
        start = end;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::pauli;

    type M = Matrix<f64>;

    fn check_pairs(m: &M, es: &EigenSystem<f64>) {
        for (lambda, vec) in es.values.iter().zip(&es.vectors) {
            let mv = m.mul_vec(vec).unwrap();
            for (a, b) in mv.iter().zip(vec) {
                assert!((a - b * *lambda).norm() < 1e-10);
            }
            let norm: f64 = vec.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        for i in 0..es.vectors.len() {
            for j in (i + 1)..es.vectors.len() {
                let dot: Complex<f64> = es.vectors[i]
                    .iter()
                    .zip(&es.vectors[j])
                    .map(|(a, b)| a.conj() * b)
                    .sum();
                assert!(dot.norm() < 1e-10);
            }
        }
    }

    #[test]
    fn diagonal_input_sorts_ascending() {
        let m = M::diagonal(&[3.0, 1.0, 2.0, 0.0]);
        let es = hermitian_eigensystem(&m).unwrap();
        assert_eq!(es.values, vec![0.0, 1.0, 2.0, 3.0]);
        assert_eq!(es.vectors[0][3], Complex::new(1.0, 0.0));
        check_pairs(&m, &es);
    }

    #[test]
    fn pauli_x() {
        let es = hermitian_eigensystem(&pauli::<f64>(1)).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((es.values[0] + 1.0).abs() < 1e-15);
        assert!((es.values[1] - 1.0).abs() < 1e-15);
        assert!((es.vectors[0][0] - Complex::new(s, 0.0)).norm() < 1e-15);
        assert!((es.vectors[0][1] - Complex::new(-s, 0.0)).norm() < 1e-15);
        assert!((es.vectors[1][1] - Complex::new(s, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn pauli_y_has_complex_vectors() {
        let y = pauli::<f64>(2);
        let es = hermitian_eigensystem(&y).unwrap();
        check_pairs(&y, &es);
        assert!((es.values[0] + 1.0).abs() < 1e-14);
    }

    #[test]
    fn identity_is_degenerate_but_deterministic() {
        let es = hermitian_eigensystem(&M::identity(4).scale(0.25)).unwrap();
        for (k, v) in es.vectors.iter().enumerate() {
            assert_eq!(v[k], Complex::new(1.0, 0.0));
        }
    }

    #[test]
    fn rejects_non_hermitian() {
        let m = M::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!(matches!(
            hermitian_eigensystem(&m),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn single_precision_instantiation() {
        let m = Matrix::<f32>::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
        let es = hermitian_eigensystem(&m).unwrap();
        assert!((es.values[0] - 1.0).abs() < 1e-5);
        assert!((es.values[1] - 3.0).abs() < 1e-5);
    }

    #[test]
    fn sixteen_dim_dense() {
        let m = M::from_fn(16, |i, j| {
            let (a, b) = (i as f64, j as f64);
            if i == j {
                Complex::new(a.sin(), 0.0)
            } else if i < j {
                Complex::new((a * b).cos() * 0.3, (a - b).sin() * 0.2)
            } else {
                Complex::new((a * b).cos() * 0.3, -(b - a).sin() * 0.2)
            }
        });
        let es = hermitian_eigensystem(&m).unwrap();
        check_pairs(&m, &es);
        assert!(es.reconstruct().max_abs_diff(&m) < 1e-10);
        assert!(es.values.windows(2).all(|w| w[0] <= w[1]));
    }
}
