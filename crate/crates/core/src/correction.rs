//! Correctable sets, recovery maps built from them, Knill-Laflamme checks and
//! the per-code decoders.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::codes::{balanced_residue, syndrome, CodeKind, StabilizerCode, Syndrome};
use crate::error::{Error, Result};
use crate::paulialg::{Pauli, QubitPauliString, QuditPauli};
use crate::phasespace::{apply_pauli, dot, restrict_to_codespace, CodespaceMatrix, DenseMatrix, StateVector};

pub const ORTHONORMALITY_TOL: f64 = 1e-10;

/// Balanced residues `0, 1, -1, ..., h, -h` with `h = (r - 1) / 2`.
fn small_shifts(r: u32) -> Vec<i64> {
    let h = (r as i64 - 1) / 2;
    let mut out = vec![0];
    for k in 1..=h {
        out.push(k);
        out.push(-k);
    }
    out
}

pub fn correctable_set(code: &StabilizerCode) -> Vec<Pauli> {
    match code.kind() {
        CodeKind::QuditShift { r1, r2 } => {
            let d = code.hilbert_dim() as u32;
            let mut out = Vec::new();
            for a in small_shifts(r1) {
                for b in small_shifts(r2) {
                    out.push(Pauli::Qudit(QuditPauli::new(d, 0, a, b).expect("positive dimension")));
                }
            }
            out
        }
        CodeKind::FiveQubit => {
            let mut out = vec![code.identity()];
            for letter in ['X', 'Y', 'Z'] {
                for j in 1..=5 {
                    out.push(Pauli::Qubit(QubitPauliString::single(5, j, letter).expect("qubit in range")));
                }
            }
            out
        }
        CodeKind::SevenQubitCss => {
            // X(a) Z(b) with wt(a) <= 1 and wt(b) <= 1; position 0 means none
            let mask = |j: u32| if j == 0 { 0 } else { QubitPauliString::qubit_bit(7, j) };
            let mut out = Vec::with_capacity(64);
            for xj in 0..=7 {
                for zj in 0..=7 {
                    out.push(Pauli::Qubit(QubitPauliString::new(7, false, mask(xj), mask(zj)).expect("7-qubit masks")));
                }
            }
            out
        }
    }
}

#[derive(Clone, Debug)]
pub struct RecoveryEntry {
    pub syndrome: Syndrome,
    pub representative: Pauli,
    /// `|v^i> = E |i_L>` for `i = 0, 1`.
    images: [StateVector; 2],
}

impl RecoveryEntry {
    pub fn images(&self) -> &[StateVector; 2] {
        &self.images
    }
}

/// Operators `R_k = |0_L><v_k^0| + |1_L><v_k^1|`, one per correctable error.
#[derive(Clone, Debug)]
pub struct RecoveryMap {
    entries: Vec<RecoveryEntry>,
    codewords: [StateVector; 2],
    by_syndrome: BTreeMap<Syndrome, usize>,
}

impl RecoveryMap {
    pub fn entries(&self) -> &[RecoveryEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.codewords[0].dim()
    }

    pub fn entry_for(&self, s: &Syndrome) -> Option<&RecoveryEntry> {
        self.by_syndrome.get(s).map(|&k| &self.entries[k])
    }

    /// Dense `R_k`.
    pub fn dense(&self, k: usize) -> DenseMatrix {
        let n = self.dim();
        let mut m = DenseMatrix::zeros(n);
        for (word, img) in self.codewords.iter().zip(&self.entries[k].images) {
            for (r, a) in word.amplitudes().iter().enumerate() {
                if *a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for (c, b) in img.amplitudes().iter().enumerate() {
                    m.add_to(r, c, a * b.conj());
                }
            }
        }
        m
    }

    /// `max |sum_k R_k^dagger R_k - I|` over entries.
    pub fn completeness_defect(&self) -> f64 {
        let n = self.dim();
        let mut acc = DenseMatrix::zeros(n);
        // R_k^dagger R_k = sum_i |v_k^i><v_k^i|
        for e in &self.entries {
            for v in &e.images {
                let amps = v.amplitudes();
                for (r, a) in amps.iter().enumerate() {
                    if *a == Complex64::new(0.0, 0.0) {
                        continue;
                    }
                    for (c, b) in amps.iter().enumerate() {
                        acc.add_to(r, c, a * b.conj());
                    }
                }
            }
        }
        acc.max_abs_diff(&DenseMatrix::identity(n))
    }

    /// `[R_k O]|_C` for `O = ops[0] * ops[1] * ...`.
    pub fn restrict(&self, k: usize, ops: &[Pauli]) -> Result<CodespaceMatrix> {
        let mut m = CodespaceMatrix::identity();
        for j in 0..2 {
            let mut v = self.codewords[j].clone();
            for op in ops.iter().rev() {
                v = apply_pauli(op, &v)?;
            }
            for i in 0..2 {
                m.entries[i][j] = dot(self.entries[k].images[i].amplitudes(), v.amplitudes());
            }
        }
        Ok(m)
    }
}

pub fn build_recovery(code: &StabilizerCode, correctable: &[Pauli]) -> Result<RecoveryMap> {
    let mut by_syndrome = BTreeMap::new();
    let mut entries = Vec::with_capacity(correctable.len());
    for (k, e) in correctable.iter().enumerate() {
        let s = syndrome(code, e)?;
        if let Some(prev) = by_syndrome.insert(s, k) {
            return Err(Error::DegenerateCode(format!(
                "{} and {} share syndrome {s}",
                correctable[prev], e
            )));
        }
        let images = [apply_pauli(e, code.codeword0())?, apply_pauli(e, code.codeword1())?];
        entries.push(RecoveryEntry {
            syndrome: s,
            representative: *e,
            images,
        });
    }
    let vectors: Vec<(usize, usize, &StateVector)> = entries
        .iter()
        .enumerate()
        .flat_map(|(k, e)| e.images.iter().enumerate().map(move |(i, v)| (k, i, v)))
        .collect();
    for (a, &(k1, i1, u)) in vectors.iter().enumerate() {
        for &(k2, i2, v) in &vectors[a..] {
            let g = dot(u.amplitudes(), v.amplitudes());
            let expect = if k1 == k2 && i1 == i2 { 1.0 } else { 0.0 };
            if (g - Complex64::new(expect, 0.0)).norm() > ORTHONORMALITY_TOL {
                return Err(Error::DegenerateCode(format!(
                    "images of {} and {} are not orthonormal (overlap {g})",
                    entries[k1].representative, entries[k2].representative
                )));
            }
        }
    }
    Ok(RecoveryMap {
        entries,
        codewords: [code.codeword0().clone(), code.codeword1().clone()],
        by_syndrome,
    })
}

/// Recovery built from [`correctable_set`].
pub fn standard_recovery(code: &StabilizerCode) -> Result<RecoveryMap> {
    build_recovery(code, &correctable_set(code))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum KlOutcome {
    Proportional(Complex64),
    Violated,
}

/// Restricts `e1^dagger e2` to the code space and tests it against `c I`.
pub fn verify_kl(code: &StabilizerCode, e1: &Pauli, e2: &Pauli) -> Result<KlOutcome> {
    let m = restrict_to_codespace(code, &[e1.adjoint(), *e2])?;
    Ok(match m.proportional_to_identity(1e-10) {
        Some(c) => KlOutcome::Proportional(c),
        None => KlOutcome::Violated,
    })
}

fn unknown(s: &Syndrome) -> Error {
    Error::UnknownSyndrome(s.to_string())
}

/// Hamming position `4 b1 + 2 b2 + b3` of three syndrome bits.
fn hamming_position(s: &Syndrome, first: u32) -> u32 {
    4 * s.bit(first).unwrap_or(0) + 2 * s.bit(first + 1).unwrap_or(0) + s.bit(first + 2).unwrap_or(0)
}

/// Correction to apply after observing `s`.
pub fn decode(code: &StabilizerCode, s: &Syndrome) -> Result<Pauli> {
    match (code.kind(), s) {
        (CodeKind::QuditShift { r1, r2 }, Syndrome::Qudit { s_a, s_b }) => {
            if *s_a >= r1 || *s_b >= r2 {
                return Err(unknown(s));
            }
            let a = balanced_residue(*s_a as i64, r1);
            let b = balanced_residue(*s_b as i64, r2);
            Ok(Pauli::Qudit(QuditPauli::new(code.hilbert_dim() as u32, 0, -a, -b)?))
        }
        (CodeKind::FiveQubit, Syndrome::Bits { mask, len: 4 }) if *mask < 16 => {
            let table = five_qubit_table(code)?;
            table.get(s).map(|e| e.adjoint()).ok_or_else(|| unknown(s))
        }
        (CodeKind::SevenQubitCss, Syndrome::Bits { mask, len: 6 }) if *mask < 64 => {
            // X-type generators (bits 1-3) locate Z errors, Z-type (4-6) X errors
            let zq = hamming_position(s, 1);
            let xq = hamming_position(s, 4);
            let bit = |j: u32| if j == 0 { 0 } else { QubitPauliString::qubit_bit(7, j) };
            let e = QubitPauliString::new(7, false, bit(xq), bit(zq))?;
            Ok(Pauli::Qubit(e.adjoint()))
        }
        _ => Err(unknown(s)),
    }
}

fn five_qubit_table(code: &StabilizerCode) -> Result<BTreeMap<Syndrome, Pauli>> {
    let mut table = BTreeMap::new();
    for e in correctable_set(code) {
        table.insert(syndrome(code, &e)?, e);
    }
    Ok(table)
}
