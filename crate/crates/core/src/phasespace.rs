//! Dense state vectors over the physical Hilbert space.
//!
//! Operators act through `basis_image`, a permutation plus phase per basis
//! state, so no operator matrix is built on the hot paths. [`DenseMatrix`] is
//! kept for oracle checks in tests and for completeness sums.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::codes::StabilizerCode;
use crate::error::{Error, Result};
use crate::paulialg::{Pauli, QubitPauliString, QuditPauli};

/// Hard limit on the Hilbert-space dimension handled densely.
pub const MAX_DIM: usize = 1024;

fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::InvalidCodeParameters(format!(
            "Hilbert dimension {dim} outside 1..={MAX_DIM}"
        )));
    }
    Ok(())
}

/// `exp(2 pi i k / d)`.
pub fn omega(d: u32, k: i64) -> Complex64 {
    let k = k.rem_euclid(d as i64);
    // exact values for the real axis keep traces free of rounding dust
    if k == 0 {
        return Complex64::new(1.0, 0.0);
    }
    if 2 * k == d as i64 {
        return Complex64::new(-1.0, 0.0);
    }
    Complex64::from_polar(1.0, 2.0 * PI * k as f64 / d as f64)
}

/// Image of basis state `|k>` under `e`: `e|k> = phase |index>`.
pub fn basis_image(e: &Pauli, k: usize) -> (usize, Complex64) {
    match e {
        Pauli::Qudit(q) => {
            let d = q.d() as u64;
            let phase = (q.phase() as u64 + q.z_power() as u64 * k as u64) % d;
            let idx = (k as u64 + q.x_power() as u64) % d;
            (idx as usize, omega(q.d(), phase as i64))
        }
        Pauli::Qubit(s) => {
            let k64 = k as u64;
            let negative = s.sign() ^ ((s.z_mask() & k64).count_ones() & 1 == 1);
            let phase = if negative { -1.0 } else { 1.0 };
            ((k64 ^ s.x_mask()) as usize, Complex64::new(phase, 0.0))
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    pub fn zeros(dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self {
            amplitudes: vec![Complex64::new(0.0, 0.0); dim],
        })
    }

    pub fn basis(dim: usize, k: usize) -> Result<Self> {
        let mut v = Self::zeros(dim)?;
        if k >= dim {
            return Err(Error::DimensionMismatch { expected: dim, found: k + 1 });
        }
        v.amplitudes[k] = Complex64::new(1.0, 0.0);
        Ok(v)
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        check_dim(amplitudes.len())?;
        Ok(Self { amplitudes })
    }

    /// Normalized superposition `sum_k c_k |k>` of the given basis indices.
    pub fn normalized_superposition(dim: usize, terms: &[(usize, f64)]) -> Result<Self> {
        let mut v = Self::zeros(dim)?;
        for &(k, c) in terms {
            if k >= dim {
                return Err(Error::DimensionMismatch { expected: dim, found: k + 1 });
            }
            v.amplitudes[k] += Complex64::new(c, 0.0);
        }
        let norm = v.norm();
        if norm == 0.0 {
            return Err(Error::InvalidCodeParameters("empty superposition".into()));
        }
        for a in &mut v.amplitudes {
            *a /= norm;
        }
        Ok(v)
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Basis indices with amplitude above `tol` in magnitude.
    pub fn support(&self, tol: f64) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.amplitudes[k].norm() > tol).collect()
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        same_dim(self.dim(), other.dim())?;
        Ok(Self {
            amplitudes: self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            amplitudes: self.amplitudes.iter().map(|a| a * c).collect(),
        }
    }
}

fn same_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Applies any supported operator without materializing it.
pub fn apply_pauli(e: &Pauli, v: &StateVector) -> Result<StateVector> {
    same_dim(e.dim(), v.dim())?;
    let mut out = vec![Complex64::new(0.0, 0.0); v.dim()];
    for (k, a) in v.amplitudes.iter().enumerate() {
        if *a == Complex64::new(0.0, 0.0) {
            continue;
        }
        let (idx, phase) = basis_image(e, k);
        out[idx] += phase * a;
    }
    Ok(StateVector { amplitudes: out })
}

pub fn apply_qudit_pauli(e: &QuditPauli, v: &StateVector) -> Result<StateVector> {
    apply_pauli(&Pauli::Qudit(*e), v)
}

pub fn apply_qubit_string(e: &QubitPauliString, v: &StateVector) -> Result<StateVector> {
    apply_pauli(&Pauli::Qubit(*e), v)
}

/// `<u|v>`, conjugate-linear in `u`.
pub fn inner_product(u: &StateVector, v: &StateVector) -> Result<Complex64> {
    same_dim(u.dim(), v.dim())?;
    Ok(dot(&u.amplitudes, &v.amplitudes))
}

pub(crate) fn dot(u: &[Complex64], v: &[Complex64]) -> Complex64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

/// 2x2 matrix `<i_L| O |j_L>` over the logical basis.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CodespaceMatrix {
    pub entries: [[Complex64; 2]; 2],
}

impl CodespaceMatrix {
    pub fn identity() -> Self {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        Self {
            entries: [[one, zero], [zero, one]],
        }
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (0..2).all(|i| (0..2).all(|j| (self.entries[i][j] - other.entries[i][j]).norm() <= tol))
    }

    /// `Some(c)` if the matrix is `c I` within `tol`.
    pub fn proportional_to_identity(&self, tol: f64) -> Option<Complex64> {
        let c = self.entries[0][0];
        let off = self.entries[0][1].norm().max(self.entries[1][0].norm());
        if off <= tol && (self.entries[1][1] - c).norm() <= tol {
            Some(c)
        } else {
            None
        }
    }
}

/// Restriction of the product `ops[0] * ops[1] * ...` to the code space.
pub fn restrict_to_codespace(code: &StabilizerCode, ops: &[Pauli]) -> Result<CodespaceMatrix> {
    let words = [code.codeword0(), code.codeword1()];
    let mut images = Vec::with_capacity(2);
    for w in words {
        let mut v = w.clone();
        for op in ops.iter().rev() {
            v = apply_pauli(op, &v)?;
        }
        images.push(v);
    }
    let mut m = CodespaceMatrix::identity();
    for (i, wi) in words.iter().enumerate() {
        for (j, img) in images.iter().enumerate() {
            m.entries[i][j] = inner_product(wi, img)?;
        }
    }
    Ok(m)
}

/// Row-major dense complex matrix, used as an oracle.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        check_dim(dim).expect("dense matrix dimension");
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_pauli(e: &Pauli) -> Self {
        let dim = e.dim();
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            let (idx, phase) = basis_image(e, k);
            m.data[idx * dim + k] = phase;
        }
        m
    }

    pub fn from_qudit(e: &QuditPauli) -> Self {
        Self::from_pauli(&Pauli::Qudit(*e))
    }

    pub fn from_qubit(e: &QubitPauliString) -> Self {
        Self::from_pauli(&Pauli::Qubit(*e))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.dim + j]
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: Complex64) {
        self.data[i * self.dim + j] += v;
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j].conj();
            }
        }
        out
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        same_dim(self.dim, v.dim())?;
        let n = self.dim;
        let amplitudes = (0..n)
            .map(|i| (0..n).map(|j| self.data[i * n + j] * v.amplitudes[j]).sum())
            .collect();
        Ok(StateVector { amplitudes })
    }

    /// Largest entrywise deviation.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "comparison dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }
}

/// `F[i][j] = w^(-ij) / sqrt(d)`.
pub fn fourier_matrix(d: u32) -> DenseMatrix {
    let n = d as usize;
    let mut m = DenseMatrix::zeros(n);
    let s = 1.0 / (d as f64).sqrt();
    for i in 0..n {
        for j in 0..n {
            m.data[i * n + j] = omega(d, -((i * j) as i64)) * s;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{build_five_qubit_code, build_qudit_code, build_seven_qubit_code};
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn shift_and_clock_on_basis_states() {
        let v = StateVector::basis(18, 0).unwrap();
        let xv = apply_qudit_pauli(&QuditPauli::x(18, 1), &v).unwrap();
        assert_eq!(xv, StateVector::basis(18, 1).unwrap());
        let zv = apply_qudit_pauli(&QuditPauli::z(18, 1), &v).unwrap();
        assert_eq!(zv, v);
        let wrap = apply_qudit_pauli(&QuditPauli::x(18, 1), &StateVector::basis(18, 17).unwrap()).unwrap();
        assert_eq!(wrap, v);
    }

    #[test]
    fn qubit_flip_and_phase() {
        let x1 = QubitPauliString::single(5, 1, 'X').unwrap();
        let z1 = QubitPauliString::single(5, 1, 'Z').unwrap();
        let v = StateVector::basis(32, 0b00000).unwrap();
        assert_eq!(apply_qubit_string(&x1, &v).unwrap(), StateVector::basis(32, 0b10000).unwrap());
        let w = StateVector::basis(32, 0b10000).unwrap();
        assert_eq!(apply_qubit_string(&z1, &w).unwrap(), w.scale(c(-1.0)));
    }

    #[test]
    fn stabilizers_fix_codewords() {
        let code = build_qudit_code(3, 3).unwrap();
        let img = apply_qudit_pauli(&QuditPauli::x(18, 6), code.codeword0()).unwrap();
        assert!(img.sub(code.codeword0()).unwrap().norm() < 1e-12);
        let five = build_five_qubit_code();
        let g = QubitPauliString::from_letters("XZZXI").unwrap();
        let img = apply_qubit_string(&g, five.codeword0()).unwrap();
        assert!(img.sub(five.codeword0()).unwrap().norm() < 1e-12);
    }

    #[test]
    fn codeword_inner_products() {
        for code in [
            build_qudit_code(3, 3).unwrap(),
            build_qudit_code(5, 5).unwrap(),
            build_five_qubit_code(),
            build_seven_qubit_code(),
        ] {
            let (a, b) = (code.codeword0(), code.codeword1());
            assert!(inner_product(a, b).unwrap().norm() < 1e-12);
            assert!((inner_product(a, a).unwrap() - c(1.0)).norm() < 1e-12);
            assert!((inner_product(b, b).unwrap() - c(1.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn z_cubed_is_logical_z_in_d18() {
        let code = build_qudit_code(3, 3).unwrap();
        let z3 = QuditPauli::z(18, 3);
        let on0 = inner_product(code.codeword0(), &apply_qudit_pauli(&z3, code.codeword0()).unwrap()).unwrap();
        let on1 = inner_product(code.codeword1(), &apply_qudit_pauli(&z3, code.codeword1()).unwrap()).unwrap();
        assert!((on0 - c(1.0)).norm() < 1e-12);
        assert!((on1 - c(-1.0)).norm() < 1e-12);
    }

    #[test]
    fn codespace_restrictions() {
        let code = build_qudit_code(3, 3).unwrap();
        let id = Pauli::Qudit(QuditPauli::identity(18));
        let m = restrict_to_codespace(&code, &[id]).unwrap();
        assert!(m.approx_eq(&CodespaceMatrix::identity(), 1e-12));
        let x3 = Pauli::Qudit(QuditPauli::x(18, 3));
        let m = restrict_to_codespace(&code, &[x3]).unwrap();
        assert!(m.trace().norm() < 1e-12);
        assert!((m.entries[1][0] - c(1.0)).norm() < 1e-12);
        assert!((m.entries[0][1] - c(1.0)).norm() < 1e-12);
        // an error followed by its own correction restricts to the identity
        let e = Pauli::Qudit(QuditPauli::new(18, 0, 1, -1).unwrap());
        let m = restrict_to_codespace(&code, &[e.adjoint(), e]).unwrap();
        assert!(m.approx_eq(&CodespaceMatrix::identity(), 1e-12));
        assert!((m.trace() - c(2.0)).norm() < 1e-12);
    }

    #[test]
    fn dimension_guards() {
        let v = StateVector::basis(18, 0).unwrap();
        assert!(apply_qudit_pauli(&QuditPauli::x(50, 1), &v).is_err());
        assert!(inner_product(&v, &StateVector::basis(50, 0).unwrap()).is_err());
        assert!(StateVector::zeros(MAX_DIM + 1).is_err());
        let five = build_five_qubit_code();
        assert!(restrict_to_codespace(&five, &[Pauli::Qudit(QuditPauli::x(18, 1))]).is_err());
    }

    #[test]
    fn fourier_maps_clock_to_shift_eigenbasis() {
        let d = 18;
        let f = fourier_matrix(d);
        assert!(f.matmul(&f.adjoint()).approx_eq(&DenseMatrix::identity(18), 1e-12));
        // F X F^dagger = Z^-1: the columns of F^dagger are X eigenvectors
        let x = DenseMatrix::from_qudit(&QuditPauli::x(d, 1));
        let z = DenseMatrix::from_qudit(&QuditPauli::z(d, -1));
        assert!(f.matmul(&x).matmul(&f.adjoint()).approx_eq(&z, 1e-12));
    }

    fn any_pauli() -> impl Strategy<Value = Pauli> {
        prop_oneof![
            (prop_oneof![Just(2u32), Just(18), Just(50)], 0i64..50, 0i64..50, 0i64..50)
                .prop_map(|(d, l, n, m)| Pauli::Qudit(QuditPauli::new(d, l, n, m).unwrap())),
            (1u32..=7, any::<bool>(), any::<u64>(), any::<u64>()).prop_map(|(n, s, x, z)| {
                let full = (1u64 << n) - 1;
                Pauli::Qubit(QubitPauliString::new(n, s, x & full, z & full).unwrap())
            }),
        ]
    }

    proptest! {
        #[test]
        fn application_is_unitary(e in any_pauli(), seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let amps: Vec<Complex64> = (0..e.dim())
                .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let v = StateVector::from_amplitudes(amps).unwrap();
            let w = apply_pauli(&e, &v).unwrap();
            prop_assert!((w.norm() - v.norm()).abs() <= 1e-12 * (1.0 + v.norm()));
            let dense = DenseMatrix::from_pauli(&e).apply(&v).unwrap();
            prop_assert!(dense.sub(&w).unwrap().norm() <= 1e-12 * (1.0 + v.norm()));
        }
    }
}
