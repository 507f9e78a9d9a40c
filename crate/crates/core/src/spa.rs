//! Linear maps, channels and the structural physical approximation (SPA).
//!
//! A positive but not completely positive map `P` on `d × d` matrices is
//! turned into a channel by mixing it with full depolarization:
//! `P̃ = (1 - p) P + p Tr(·) I/d`. For the two-qubit partial transpose the
//! mixing weight follows from the most negative eigenvalue of
//! `(id ⊗ T)|ψ⁺><ψ⁺|`, and the resulting channel is
//! `ρ ↦ ρ^{T_B}/9 + 2I/9`.

use crate::error::{Error, Result};
use crate::linalg::{choi_matrix, hermitian_eigensystem, Subsystem};
use crate::states::{make_bell, validate, Bell, DensityMatrix};
use crate::{c64, CMatrix};

/// Minimum Choi eigenvalue accepted as positive.
pub const CP_TOL: f64 = 1e-10;
/// Largest `|Σ K†K - I|` accepted for a channel.
pub const TP_TOL: f64 = 1e-10;

/// A linear map on `dim × dim` matrices stored as its `dim² × dim²` transfer
/// matrix acting on row-major vectorizations.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearMap {
    dim: usize,
    transfer: CMatrix,
}

impl LinearMap {
    pub fn from_fn(dim: usize, f: impl Fn(&CMatrix) -> CMatrix) -> Self {
        let n = dim * dim;
        let mut transfer = CMatrix::zeros(n);
        for i in 0..dim {
            for j in 0..dim {
                let mut unit = CMatrix::zeros(dim);
                unit[(i, j)] = c64(1.0, 0.0);
                let image = f(&unit);
                assert_eq!(image.dim(), dim, "map must preserve dimension");
                for (row, z) in image.as_slice().iter().enumerate() {
                    transfer[(row, i * dim + j)] = *z;
                }
            }
        }
        Self { dim, transfer }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn transfer(&self) -> &CMatrix {
        &self.transfer
    }

    pub fn apply(&self, x: &CMatrix) -> Result<CMatrix> {
        x.check_dim(self.dim)?;
        let out = self.transfer.mul_vec(x.as_slice())?;
        CMatrix::from_row_major(self.dim, out)
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            dim,
            transfer: CMatrix::identity(dim * dim),
        }
    }

    pub fn transpose(dim: usize) -> Self {
        Self::from_fn(dim, CMatrix::transpose)
    }

    /// `σ ↦ -σ`.
    pub fn inversion(dim: usize) -> Self {
        Self::from_fn(dim, |m| -m)
    }

    /// `σ ↦ Tr(σ) I/d`.
    pub fn full_depolarization(dim: usize) -> Self {
        let inv = 1.0 / dim as f64;
        Self::from_fn(dim, |m| {
            CMatrix::identity(dim).scale_complex(m.trace() * inv)
        })
    }

    /// `id ⊗ T` on two qubits.
    pub fn partial_transpose() -> Self {
        Self::identity(2).tensor(&Self::transpose(2))
    }

    /// `self ⊗ other`, acting on `self.dim * other.dim` square matrices.
    pub fn tensor(&self, other: &LinearMap) -> LinearMap {
        let (da, db) = (self.dim, other.dim);
        LinearMap::from_fn(da * db, |x| {
            let mut out = CMatrix::zeros(da * db);
            for i1 in 0..da {
                for j1 in 0..da {
                    let mut ea = CMatrix::zeros(da);
                    ea[(i1, j1)] = c64(1.0, 0.0);
                    let fa = self.apply(&ea).expect("dimension matches");
                    for i2 in 0..db {
                        for j2 in 0..db {
                            let coeff = x[(i1 * db + i2, j1 * db + j2)];
                            if coeff.norm() == 0.0 {
                                continue;
                            }
                            let mut eb = CMatrix::zeros(db);
                            eb[(i2, j2)] = c64(1.0, 0.0);
                            let fb = other.apply(&eb).expect("dimension matches");
                            out = &out + &fa.kron(&fb).scale_complex(coeff);
                        }
                    }
                }
            }
            out
        })
    }

    /// `a·self + b·other`.
    pub fn combine(&self, a: f64, other: &LinearMap, b: f64) -> Result<LinearMap> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(LinearMap {
            dim: self.dim,
            transfer: &self.transfer.scale(a) + &other.transfer.scale(b),
        })
    }

    pub fn choi_matrix(&self) -> CMatrix {
        choi_matrix(self.dim, |x| self.apply(x).expect("dimension matches"))
    }

    /// Choi-matrix positivity test.
    pub fn cp_certificate(&self) -> Result<CpCertificate> {
        CpCertificate::from_choi(&self.choi_matrix())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CpCertificate {
    pub completely_positive: bool,
    pub min_choi_eigenvalue: f64,
}

impl CpCertificate {
    fn from_choi(choi: &CMatrix) -> Result<Self> {
        let min = hermitian_eigensystem(choi)?.min_value();
        Ok(Self {
            completely_positive: min >= -CP_TOL,
            min_choi_eigenvalue: min,
        })
    }
}

pub fn is_completely_positive(map: &LinearMap) -> Result<CpCertificate> {
    map.cp_certificate()
}

/// A completely positive trace-preserving map given by Kraus operators.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumChannel {
    dim: usize,
    kraus: Vec<CMatrix>,
}

/// `max |Σ K†K - I|` entrywise.
pub fn kraus_completeness_defect(kraus: &[CMatrix]) -> Result<f64> {
    let dim = kraus.first().map(CMatrix::dim).unwrap_or(0);
    let mut sum = CMatrix::zeros(dim);
    for k in kraus {
        k.check_dim(dim)?;
        sum = &sum + &(&k.adjoint() * k);
    }
    Ok(sum.max_abs_diff(&CMatrix::identity(dim)))
}

impl QuantumChannel {
    pub fn new(kraus: Vec<CMatrix>) -> Result<Self> {
        let dim = kraus
            .first()
            .map(CMatrix::dim)
            .ok_or(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            })?;
        let deviation = kraus_completeness_defect(&kraus)?;
        if !(deviation <= TP_TOL) {
            return Err(Error::NotTracePreserving { deviation });
        }
        Ok(Self { dim, kraus })
    }

    /// Kraus form of a completely positive map, read off the Choi spectrum:
    /// `K_k[a][i] = √(d λ_k) v_k[i·d + a]`.
    pub fn from_linear_map(map: &LinearMap) -> Result<Self> {
        let d = map.dim();
        let es = hermitian_eigensystem(&map.choi_matrix())?;
        if es.min_value() < -CP_TOL {
            return Err(Error::NotCompletelyPositive {
                min_eigenvalue: es.min_value(),
            });
        }
        let kraus = es
            .values
            .iter()
            .zip(&es.vectors)
            .filter(|(l, _)| **l > CP_TOL)
            .map(|(&l, v)| {
                let w = (d as f64 * l).sqrt();
                CMatrix::from_fn(d, |a, i| v[i * d + a] * w)
            })
            .collect();
        Self::new(kraus)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    pub fn apply(&self, rho: &CMatrix) -> Result<CMatrix> {
        rho.check_dim(self.dim)?;
        let mut out = CMatrix::zeros(self.dim);
        for k in &self.kraus {
            out = &out + &(&(k * rho) * &k.adjoint());
        }
        Ok(out)
    }

    /// Channel applied to the first factor of a two-factor system, identity
    /// on the second (`other_dim`-dimensional) factor.
    pub fn apply_to_first(&self, rho: &CMatrix, other_dim: usize) -> Result<CMatrix> {
        rho.check_dim(self.dim * other_dim)?;
        let id = CMatrix::identity(other_dim);
        let mut out = CMatrix::zeros(rho.dim());
        for k in &self.kraus {
            let big = k.kron(&id);
            out = &out + &(&(&big * rho) * &big.adjoint());
        }
        Ok(out)
    }

    pub fn to_linear_map(&self) -> LinearMap {
        LinearMap::from_fn(self.dim, |x| self.apply(x).expect("dimension matches"))
    }

    pub fn choi_matrix(&self) -> CMatrix {
        choi_matrix(self.dim, |x| self.apply(x).expect("dimension matches"))
    }

    pub fn cp_certificate(&self) -> Result<CpCertificate> {
        CpCertificate::from_choi(&self.choi_matrix())
    }
}

/// `(1 - p) P + p Tr(·) I/d`.
pub fn spa_mix(map: &LinearMap, p: f64) -> Result<LinearMap> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange {
            name: "p",
            value: p,
            allowed: "[0, 1]",
        });
    }
    map.combine(1.0 - p, &LinearMap::full_depolarization(map.dim()), p)
}

/// Smallest `p` for which `spa_mix(map, p)` is completely positive, from the
/// Choi spectrum: `(1 - p) μ + p/d² ≥ 0`.
pub fn minimal_cp_mixing_weight(map: &LinearMap) -> Result<f64> {
    let mu = map.cp_certificate()?.min_choi_eigenvalue;
    if mu >= 0.0 {
        return Ok(0.0);
    }
    let floor = 1.0 / (map.dim() * map.dim()) as f64;
    Ok(-mu / (floor - mu))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MixingWeight {
    /// `-λ_min((id ⊗ T)|ψ⁺><ψ⁺|)`.
    pub nu: f64,
    /// `16ν / (1 + 16ν)`.
    pub q_star: f64,
}

/// Depolarizing weight of the SPA-PT channel. The minimum of
/// `Tr[Q (id⊗T)|ψ⁺><ψ⁺|]` over unit-trace `Q ≥ 0` is the least eigenvalue.
pub fn spa_pt_mixing_weight() -> MixingWeight {
    let psi = make_bell(Bell::PsiPlus).projector();
    let pt = psi.partial_transpose_b().expect("4x4");
    let nu = -hermitian_eigensystem(&pt).expect("Hermitian").min_value();
    MixingWeight {
        nu,
        q_star: 16.0 * nu / (1.0 + 16.0 * nu),
    }
}

/// The SPA-PT channel as a linear map on 4×4 matrices.
pub fn spa_pt_map() -> LinearMap {
    spa_mix(
        &LinearMap::partial_transpose(),
        spa_pt_mixing_weight().q_star,
    )
    .expect("q* lies in [0, 1]")
}

/// SPA-PT of a two-qubit state: `(1 - q*) ρ^{T_B} + q* I/4`, which is
/// `ρ^{T_B}/9 + 2I/9`.
pub fn spa_pt(rho: &DensityMatrix) -> Result<DensityMatrix> {
    let m = rho.matrix();
    m.check_dim(4)?;
    let q = spa_pt_mixing_weight().q_star;
    let out = &m.partial_transpose_b()?.scale(1.0 - q) + &CMatrix::identity(4).scale(q / 4.0);
    validate(out)
}

/// The element-by-element SPA-PT formulas in the form they were originally
/// printed, kept only to measure how far they are from [`spa_pt`]. The lower
/// triangle is filled by conjugation.
pub fn spa_pt_printed(rho: &DensityMatrix) -> Result<CMatrix> {
    let m = rho.matrix();
    m.check_dim(4)?;
    let t = |i: usize, j: usize| m[(i - 1, j - 1)];
    let i = c64(0.0, 1.0);
    let ninth = 1.0 / 9.0;
    let two = c64(2.0, 0.0);
    let mut e = CMatrix::zeros(4);
    let mut set = |r: usize, c: usize, z| {
        e[(r - 1, c - 1)] = z;
        if r != c {
            e[(c - 1, r - 1)] = num_complex::Complex::conj(&z);
        }
    };
    set(1, 1, (two + t(1, 1)) * ninth);
    set(1, 2, (-i * t(1, 2) + t(1, 2).conj()) * ninth);
    set(
        1,
        3,
        (t(1, 3) - i * (t(1, 3).conj() + t(2, 4).conj())) * ninth,
    );
    set(1, 4, (-i * t(1, 4) + t(2, 3)) * ninth);
    set(2, 2, (two + t(2, 2)) * ninth);
    set(2, 3, (t(1, 4) + i * t(2, 3)) * ninth);
    set(2, 4, -i * (t(1, 3).conj() + t(2, 4).conj()) * ninth);
    set(3, 3, (two + t(3, 3)) * ninth);
    set(3, 4, (-i * t(3, 4) + t(3, 4).conj()) * ninth);
    set(4, 4, (two + t(4, 4)) * ninth);
    Ok(e)
}

/// Entrywise distance between the printed element formulas and the
/// canonical SPA-PT output.
pub fn spa_pt_printed_deviation(rho: &DensityMatrix) -> Result<f64> {
    let printed = spa_pt_printed(rho)?;
    Ok(printed.max_abs_diff(spa_pt(rho)?.matrix()))
}

/// SPA of the single-qubit transpose: `σᵀ/3 + Tr(σ) I/3`.
pub fn spa_transpose_1q(sigma: &CMatrix) -> Result<CMatrix> {
    sigma.check_dim(2)?;
    Ok(&sigma.transpose().scale(1.0 / 3.0)
        + &CMatrix::identity(2).scale_complex(sigma.trace() / 3.0))
}

/// SPA of the single-qubit inversion `σ ↦ -σ`: `(2 Tr(σ) I - σ)/3`, the
/// optimal universal-NOT (Bloch vector `r ↦ -r/3`).
pub fn spa_inversion_1q(sigma: &CMatrix) -> Result<CMatrix> {
    sigma.check_dim(2)?;
    Ok(&CMatrix::identity(2).scale_complex(sigma.trace() * (2.0 / 3.0)) - &sigma.scale(1.0 / 3.0))
}

pub fn spa_transpose_map() -> LinearMap {
    LinearMap::from_fn(2, |m| spa_transpose_1q(m).expect("2x2"))
}

pub fn spa_inversion_map() -> LinearMap {
    LinearMap::from_fn(2, |m| spa_inversion_1q(m).expect("2x2"))
}

/// Applies a single-qubit linear map to every 2×2 block of a two-qubit
/// operator, i.e. `(id ⊗ f)`.
fn apply_on_b(rho: &CMatrix, f: impl Fn(&CMatrix) -> Result<CMatrix>) -> Result<CMatrix> {
    let mut out = CMatrix::zeros(4);
    for i in 0..2 {
        for k in 0..2 {
            let block = CMatrix::from_fn(2, |j, l| rho[(2 * i + j, 2 * k + l)]);
            let image = f(&block)?;
            for j in 0..2 {
                for l in 0..2 {
                    out[(2 * i + j, 2 * k + l)] = image[(j, l)];
                }
            }
        }
    }
    Ok(out)
}

/// SPA-PT assembled from local channels:
/// `(1/3)(id ⊗ T̃) + (2/3)(Θ̃ ⊗ D)` with `D(σ) = Tr(σ) I/2`.
pub fn lim_decomposition(rho: &DensityMatrix) -> Result<DensityMatrix> {
    let m = rho.matrix();
    m.check_dim(4)?;
    let local_transpose = apply_on_b(m, spa_transpose_1q)?;
    let reduced = m.partial_trace(Subsystem::A)?;
    let inverted = spa_inversion_1q(&reduced)?.kron(&CMatrix::identity(2).scale(0.5));
    validate(&local_transpose.scale(1.0 / 3.0) + &inverted.scale(2.0 / 3.0))
}

/// SPA-PT channel applied to an arbitrary 4×4 operator, without validation.
pub fn spa_pt_operator(m: &CMatrix) -> Result<CMatrix> {
    spa_pt_map().apply(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{pure_to_density, random_density};

    #[test]
    fn mixing_weight_is_eight_ninths() {
        let w = spa_pt_mixing_weight();
        assert!((w.nu - 0.5).abs() < 1e-14);
        assert!((w.q_star - 8.0 / 9.0).abs() < 1e-14);
        assert!((1.0 - w.q_star - 1.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn spa_mix_endpoints() {
        let t = LinearMap::transpose(2);
        assert_eq!(spa_mix(&t, 0.0).unwrap().transfer(), t.transfer());
        let full = spa_mix(&t, 1.0).unwrap();
        let sigma = CMatrix::from_real_rows(&[&[0.3, 0.1], &[0.1, 0.7]]).unwrap();
        assert!(
            full.apply(&sigma)
                .unwrap()
                .max_abs_diff(&CMatrix::identity(2).scale(0.5))
                < 1e-15
        );
        assert!(spa_mix(&t, 1.2).is_err());
    }

    #[test]
    fn spa_mix_of_transpose_at_two_thirds() {
        let m = spa_mix(&LinearMap::transpose(2), 2.0 / 3.0).unwrap();
        assert!(m.transfer().max_abs_diff(spa_transpose_map().transfer()) < 1e-15);
        let cert = m.cp_certificate().unwrap();
        assert!(cert.completely_positive);
        assert!(cert.min_choi_eigenvalue.abs() < 1e-12);
        // just below the boundary the mix is not CP
        let below = spa_mix(&LinearMap::transpose(2), 0.6).unwrap();
        assert!(!below.cp_certificate().unwrap().completely_positive);
    }

    #[test]
    fn transpose_and_partial_transpose_are_not_cp() {
        let t = LinearMap::transpose(2).cp_certificate().unwrap();
        assert!(!t.completely_positive);
        assert!((t.min_choi_eigenvalue + 0.5).abs() < 1e-12);
        let pt = LinearMap::partial_transpose().cp_certificate().unwrap();
        assert!(!pt.completely_positive);
        assert!((pt.min_choi_eigenvalue + 0.5).abs() < 1e-12);
    }

    #[test]
    fn minimal_weight_for_partial_transpose_matches_q_star() {
        let p = minimal_cp_mixing_weight(&LinearMap::partial_transpose()).unwrap();
        assert!((p - 8.0 / 9.0).abs() < 1e-12);
        assert!(
            (minimal_cp_mixing_weight(&LinearMap::transpose(2)).unwrap() - 2.0 / 3.0).abs() < 1e-12
        );
        assert_eq!(
            minimal_cp_mixing_weight(&LinearMap::identity(2)).unwrap(),
            0.0
        );
    }

    #[test]
    fn partial_transpose_map_agrees_with_matrix_op() {
        let rho = random_density(11, 3).unwrap();
        let via_map = LinearMap::partial_transpose().apply(rho.matrix()).unwrap();
        assert!(via_map.max_abs_diff(&rho.matrix().partial_transpose_b().unwrap()) < 1e-15);
    }

    #[test]
    fn spa_pt_examples() {
        let mixed = validate(CMatrix::identity(4).scale(0.25)).unwrap();
        assert!(
            spa_pt(&mixed)
                .unwrap()
                .matrix()
                .max_abs_diff(mixed.matrix())
                < 1e-15
        );

        let zero = validate(CMatrix::diagonal(&[1.0, 0.0, 0.0, 0.0])).unwrap();
        let out = spa_pt(&zero).unwrap();
        let expected = CMatrix::diagonal(&[3.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0, 2.0 / 9.0]);
        assert!(out.matrix().max_abs_diff(&expected) < 1e-15);

        let singlet = pure_to_density(&make_bell(Bell::PsiMinus));
        let es = hermitian_eigensystem(spa_pt(&singlet).unwrap().matrix()).unwrap();
        assert!((es.min_value() - 1.0 / 6.0).abs() < 1e-14);
    }

    #[test]
    fn spa_pt_diagonal_is_two_plus_t_over_nine() {
        let rho = random_density(5, 4).unwrap();
        let out = spa_pt(&rho).unwrap();
        for k in 0..4 {
            let expected = (2.0 + rho.matrix()[(k, k)].re) / 9.0;
            assert!((out.matrix()[(k, k)].re - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn spa_pt_channel_is_cp_and_has_kraus_form() {
        let map = spa_pt_map();
        let cert = map.cp_certificate().unwrap();
        assert!(cert.completely_positive);
        assert!(cert.min_choi_eigenvalue.abs() < 1e-12);
        let channel = QuantumChannel::from_linear_map(&map).unwrap();
        let rho = random_density(21, 4).unwrap();
        let a = channel.apply(rho.matrix()).unwrap();
        assert!(a.max_abs_diff(spa_pt(&rho).unwrap().matrix()) < 1e-12);
        assert!(QuantumChannel::from_linear_map(&LinearMap::transpose(2)).is_err());
    }

    #[test]
    fn one_qubit_spas() {
        let half = CMatrix::identity(2).scale(0.5);
        assert!(spa_transpose_1q(&half).unwrap().max_abs_diff(&half) < 1e-16);
        assert!(spa_inversion_1q(&half).unwrap().max_abs_diff(&half) < 1e-16);
        let zero = CMatrix::diagonal(&[1.0, 0.0]);
        assert!(
            spa_transpose_1q(&zero)
                .unwrap()
                .max_abs_diff(&CMatrix::diagonal(&[2.0 / 3.0, 1.0 / 3.0]))
                < 1e-16
        );
        assert!(
            spa_inversion_1q(&zero)
                .unwrap()
                .max_abs_diff(&CMatrix::diagonal(&[1.0 / 3.0, 2.0 / 3.0]))
                < 1e-16
        );
        assert!(spa_transpose_1q(&CMatrix::identity(4)).is_err());
    }

    #[test]
    fn inversion_shrinks_and_flips_bloch_vector() {
        // σ = (I + z σ_z)/2 with z = 1 has Bloch vector (0, 0, 1)
        let sigma = CMatrix::diagonal(&[1.0, 0.0]);
        let out = spa_inversion_1q(&sigma).unwrap();
        let z_after = out[(0, 0)].re - out[(1, 1)].re;
        assert!((z_after + 1.0 / 3.0).abs() < 1e-15);
        let cert = spa_inversion_map().cp_certificate().unwrap();
        assert!(cert.completely_positive);
        assert!(cert.min_choi_eigenvalue.abs() < 1e-12);
    }

    #[test]
    fn lim_decomposition_matches_spa_pt() {
        for seed in 0..50 {
            let rho = random_density(seed, 1 + (seed as usize % 4)).unwrap();
            let a = lim_decomposition(&rho).unwrap();
            let b = spa_pt(&rho).unwrap();
            assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-12);
        }
        let mixed = validate(CMatrix::identity(4).scale(0.25)).unwrap();
        assert!(
            lim_decomposition(&mixed)
                .unwrap()
                .matrix()
                .max_abs_diff(mixed.matrix())
                < 1e-15
        );
    }

    #[test]
    fn channel_rejects_incomplete_kraus() {
        let k = CMatrix::diagonal(&[1.0, 0.5]);
        assert!(matches!(
            QuantumChannel::new(vec![k]),
            Err(Error::NotTracePreserving { .. })
        ));
        assert!(QuantumChannel::new(vec![]).is_err());
        assert!(QuantumChannel::new(vec![CMatrix::identity(2), CMatrix::identity(4)]).is_err());
    }

    #[test]
    fn printed_formulas_agree_on_diagonal_states() {
        let rho = validate(CMatrix::diagonal(&[0.4, 0.3, 0.2, 0.1])).unwrap();
        assert!(spa_pt_printed_deviation(&rho).unwrap() < 1e-15);
        let printed = spa_pt_printed(&rho).unwrap();
        for k in 0..4 {
            assert!((printed[(k, k)].re - spa_pt(&rho).unwrap().matrix()[(k, k)].re).abs() < 1e-15);
        }
    }

    #[test]
    fn printed_formulas_leak_imaginary_terms() {
        let rho = validate(
            CMatrix::from_row_major(
                4,
                vec![
                    c64(0.5, 0.0),
                    c64(0.0, 0.0),
                    c64(0.0, 0.0),
                    c64(0.0, -0.5),
                    c64(0.0, 0.0),
                    c64(0.0, 0.0),
                    c64(0.0, 0.0),
                    c64(0.0, 0.0),
                    c64(0.0, 0.0),
                    c64(0.0, 0.0),
                    c64(0.0, 0.0),
                    c64(0.0, 0.0),
                    c64(0.0, 0.5),
                    c64(0.0, 0.0),
                    c64(0.0, 0.0),
                    c64(0.5, 0.0),
                ],
            )
            .unwrap(),
        )
        .unwrap();
        assert!(spa_pt_printed_deviation(&rho).unwrap() > 1e-3);
    }
}
