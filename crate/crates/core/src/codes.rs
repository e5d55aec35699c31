//! The four codes: the qudit shift code family with `d = 2 r1 r2`, the
//! five-qubit perfect code and the seven-qubit CSS code.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::paulialg::{Pauli, QubitPauliString, QuditPauli, SymplecticVector};
use crate::phasespace::{apply_pauli, fourier_matrix, StateVector, MAX_DIM};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeKind {
    QuditShift { r1: u32, r2: u32 },
    FiveQubit,
    SevenQubitCss,
}

impl fmt::Display for CodeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeKind::QuditShift { r1, r2 } => write!(f, "qudit shift code (r1={r1}, r2={r2})"),
            CodeKind::FiveQubit => write!(f, "[[5,1,3]] code"),
            CodeKind::SevenQubitCss => write!(f, "[[7,1,3]] CSS code"),
        }
    }
}

/// Short names used on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CodeId {
    D18,
    D50,
    Five,
    Seven,
}

impl CodeId {
    pub const ALL: [CodeId; 4] = [CodeId::D18, CodeId::D50, CodeId::Five, CodeId::Seven];

    pub fn name(self) -> &'static str {
        match self {
            CodeId::D18 => "d18",
            CodeId::D50 => "d50",
            CodeId::Five => "five",
            CodeId::Seven => "seven",
        }
    }

    pub fn build(self) -> StabilizerCode {
        match self {
            CodeId::D18 => build_qudit_code(3, 3).expect("valid parameters"),
            CodeId::D50 => build_qudit_code(5, 5).expect("valid parameters"),
            CodeId::Five => build_five_qubit_code(),
            CodeId::Seven => build_seven_qubit_code(),
        }
    }
}

impl fmt::Display for CodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CodeId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "d18" => Ok(CodeId::D18),
            "d50" => Ok(CodeId::D50),
            "five" | "5" | "[[5,1,3]]" => Ok(CodeId::Five),
            "seven" | "7" | "[[7,1,3]]" => Ok(CodeId::Seven),
            other => Err(Error::Parse(format!(
                "unknown code {other:?} (expected d18, d50, five or seven)"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Syndrome {
    /// `s_a = n mod r1`, `s_b = m mod r2`.
    Qudit { s_a: u32, s_b: u32 },
    /// Bit `j` (1-based generator index) stored at position `len - j`.
    Bits { mask: u32, len: u32 },
}

impl Syndrome {
    pub fn is_trivial(&self) -> bool {
        match self {
            Syndrome::Qudit { s_a, s_b } => *s_a == 0 && *s_b == 0,
            Syndrome::Bits { mask, .. } => *mask == 0,
        }
    }

    /// Bit of 1-based generator `j`.
    pub fn bit(&self, j: u32) -> Option<u32> {
        match self {
            Syndrome::Bits { mask, len } if j >= 1 && j <= *len => Some((mask >> (len - j)) & 1),
            _ => None,
        }
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Syndrome::Qudit { s_a, s_b } => write!(f, "({s_a},{s_b})"),
            Syndrome::Bits { mask, len } => write!(f, "{:0width$b}", mask, width = *len as usize),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabilizerCode {
    kind: CodeKind,
    hilbert_dim: usize,
    codeword0: StateVector,
    codeword1: StateVector,
    generators: Vec<Pauli>,
    parity_check: Option<Vec<SymplecticVector>>,
    syndrome_space_size: usize,
}

impl StabilizerCode {
    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn hilbert_dim(&self) -> usize {
        self.hilbert_dim
    }

    pub fn codeword0(&self) -> &StateVector {
        &self.codeword0
    }

    pub fn codeword1(&self) -> &StateVector {
        &self.codeword1
    }

    pub fn codewords(&self) -> [&StateVector; 2] {
        [&self.codeword0, &self.codeword1]
    }

    pub fn generators(&self) -> &[Pauli] {
        &self.generators
    }

    /// Rows `(a|b)` of the parity-check matrix, one per generator. Block codes
    /// only.
    pub fn parity_check(&self) -> Option<&[SymplecticVector]> {
        self.parity_check.as_deref()
    }

    pub fn syndrome_space_size(&self) -> usize {
        self.syndrome_space_size
    }

    pub fn n_qubits(&self) -> Option<u32> {
        match self.kind {
            CodeKind::QuditShift { .. } => None,
            CodeKind::FiveQubit => Some(5),
            CodeKind::SevenQubitCss => Some(7),
        }
    }

    pub fn is_qudit(&self) -> bool {
        matches!(self.kind, CodeKind::QuditShift { .. })
    }

    pub fn qudit_params(&self) -> Result<(u32, u32)> {
        match self.kind {
            CodeKind::QuditShift { r1, r2 } => Ok((r1, r2)),
            other => Err(Error::NotQuditCode(other.to_string())),
        }
    }

    pub fn identity(&self) -> Pauli {
        self.generators[0].identity_like()
    }

    pub fn check_operator(&self, e: &Pauli) -> Result<()> {
        match (self.kind, e) {
            (CodeKind::QuditShift { .. }, Pauli::Qudit(_)) | (CodeKind::FiveQubit | CodeKind::SevenQubitCss, Pauli::Qubit(_)) => {}
            _ => {
                return Err(Error::OperatorKindMismatch(format!(
                    "{e} cannot act on the {}",
                    self.kind
                )))
            }
        }
        if e.dim() != self.hilbert_dim {
            return Err(Error::DimensionMismatch {
                expected: self.hilbert_dim,
                found: e.dim(),
            });
        }
        Ok(())
    }
}

/// Representative of `x` mod `modulus` in `(-modulus/2, modulus/2]`.
pub fn balanced_residue(x: i64, modulus: u32) -> i64 {
    let m = modulus as i64;
    let y = x.rem_euclid(m);
    if y > m / 2 {
        y - m
    } else {
        y
    }
}

pub fn build_qudit_code(r1: u32, r2: u32) -> Result<StabilizerCode> {
    for r in [r1, r2] {
        if r < 3 || r % 2 == 0 {
            return Err(Error::InvalidCodeParameters(format!(
                "r1 and r2 must be odd and at least 3, got ({r1}, {r2})"
            )));
        }
    }
    let d = 2 * r1 as u64 * r2 as u64;
    if d > MAX_DIM as u64 {
        return Err(Error::InvalidCodeParameters(format!("d = {d} exceeds {MAX_DIM}")));
    }
    let (d, r1u, r2u) = (d as usize, r1 as usize, r2 as usize);
    let zero: Vec<(usize, f64)> = (0..r2u).map(|j| (2 * j * r1u, 1.0)).collect();
    let one: Vec<(usize, f64)> = (0..r2u).map(|j| ((2 * j + 1) * r1u, 1.0)).collect();
    let dq = d as u32;
    Ok(StabilizerCode {
        kind: CodeKind::QuditShift { r1, r2 },
        hilbert_dim: d,
        codeword0: StateVector::normalized_superposition(d, &zero)?,
        codeword1: StateVector::normalized_superposition(d, &one)?,
        generators: vec![
            Pauli::Qudit(QuditPauli::x(dq, 2 * r1 as i64)),
            Pauli::Qudit(QuditPauli::z(dq, 2 * r2 as i64)),
        ],
        parity_check: None,
        syndrome_space_size: r1u * r2u,
    })
}

fn signed_strings(terms: &[(&str, i8)]) -> Vec<(usize, f64)> {
    terms
        .iter()
        .map(|(s, sign)| (usize::from_str_radix(s, 2).expect("bit string"), *sign as f64))
        .collect()
}

fn block_code(kind: CodeKind, n: u32, gens: &[&str], zero: &[(usize, f64)], one: &[(usize, f64)]) -> StabilizerCode {
    let generators: Vec<QubitPauliString> = gens
        .iter()
        .map(|g| QubitPauliString::from_letters(g).expect("generator literal"))
        .collect();
    let dim = 1usize << n;
    StabilizerCode {
        kind,
        hilbert_dim: dim,
        codeword0: StateVector::normalized_superposition(dim, zero).expect("codeword literal"),
        codeword1: StateVector::normalized_superposition(dim, one).expect("codeword literal"),
        parity_check: Some(generators.iter().map(|g| g.symplectic()).collect()),
        generators: generators.into_iter().map(Pauli::Qubit).collect(),
        syndrome_space_size: 1 << (n - 1),
    }
}

// Basis strings list qubit 1 first. The signs are those of the +1 eigenspace
// of the generators below with ZZZZZ = +1 on |0_L>, and |1_L> = XXXXX |0_L>.
const FIVE_ZERO: [(&str, i8); 16] = [
    ("00000", 1), ("00011", -1), ("00101", 1), ("00110", -1),
    ("01001", 1), ("01010", 1), ("01100", -1), ("01111", -1),
    ("10001", -1), ("10010", 1), ("10100", 1), ("10111", -1),
    ("11000", -1), ("11011", -1), ("11101", -1), ("11110", -1),
];

const FIVE_ONE: [(&str, i8); 16] = [
    ("11111", 1), ("11100", -1), ("11010", 1), ("11001", -1),
    ("10110", 1), ("10101", 1), ("10011", -1), ("10000", -1),
    ("01110", -1), ("01101", 1), ("01011", 1), ("01000", -1),
    ("00111", -1), ("00100", -1), ("00010", -1), ("00001", -1),
];

pub fn build_five_qubit_code() -> StabilizerCode {
    block_code(
        CodeKind::FiveQubit,
        5,
        &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"],
        &signed_strings(&FIVE_ZERO),
        &signed_strings(&FIVE_ONE),
    )
}

const SEVEN_ZERO: [&str; 8] = [
    "0000000", "0110011", "1010101", "1100110", "0001111", "0111100", "1011010", "1101001",
];

const SEVEN_ONE: [&str; 8] = [
    "1111111", "1001100", "0101010", "0011001", "1110000", "1000011", "0100101", "0010110",
];

pub fn build_seven_qubit_code() -> StabilizerCode {
    let plus = |s: &[&'static str; 8]| -> Vec<(&'static str, i8)> { s.iter().map(|b| (*b, 1)).collect() };
    block_code(
        CodeKind::SevenQubitCss,
        7,
        &[
            "IIIXXXX", "IXXIIXX", "XIXIXIX", // X type
            "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ", // Z type
        ],
        &signed_strings(&plus(&SEVEN_ZERO)),
        &signed_strings(&plus(&SEVEN_ONE)),
    )
}

pub fn syndrome(code: &StabilizerCode, e: &Pauli) -> Result<Syndrome> {
    code.check_operator(e)?;
    match (code.kind, e) {
        (CodeKind::QuditShift { r1, r2 }, Pauli::Qudit(q)) => Ok(Syndrome::Qudit {
            s_a: q.x_power() % r1,
            s_b: q.z_power() % r2,
        }),
        (_, Pauli::Qubit(s)) => {
            let rows = code.parity_check.as_ref().expect("block code has a parity check");
            let v = s.symplectic();
            let len = rows.len() as u32;
            let mut mask = 0u32;
            for (j, row) in rows.iter().enumerate() {
                if row.symplectic_product(&v)? == 1 {
                    mask |= 1 << (len - 1 - j as u32);
                }
            }
            Ok(Syndrome::Bits { mask, len })
        }
        _ => unreachable!("operator kind checked above"),
    }
}

/// Representative of `e`'s code-space equivalence class: exponents reduced to
/// balanced residues mod `2 r1` and `2 r2`, with the phase adjusted so the
/// representative acts on the code space exactly as `e` does.
pub fn reduce_to_class(code: &StabilizerCode, e: &QuditPauli) -> Result<QuditPauli> {
    let (r1, r2) = code.qudit_params()?;
    code.check_operator(&Pauli::Qudit(*e))?;
    let (m1, m2) = (2 * r1, 2 * r2);
    let n_bar = balanced_residue(e.x_power() as i64, m1);
    let m_bar = balanced_residue(e.z_power() as i64, m2);
    // X^(n_bar + m1 j) Z^m = w^(-m1 j m_bar) X^n_bar Z^m_bar (X^m1)^j (Z^m2)^k
    let j = (e.x_power() as i64 - n_bar) / m1 as i64;
    let l = e.phase() as i64 - m1 as i64 * j * m_bar;
    QuditPauli::new(e.d(), l, n_bar, m_bar)
}

/// Code-space classes in canonical order: balanced residues
/// `0, 1, -1, 2, -2, ..., r` for each exponent, X exponent outermost.
pub fn class_residues(r: u32) -> Vec<i64> {
    let r = r as i64;
    let mut out = vec![0];
    for k in 1..r {
        out.push(k);
        out.push(-k);
    }
    out.push(r);
    out
}

/// Fourier images `F|0_L>`, `F|1_L>` with `F[i][j] = w^(-ij)/sqrt(d)`.
pub fn dual_codewords(code: &StabilizerCode) -> Result<(StateVector, StateVector)> {
    code.qudit_params()?;
    let f = fourier_matrix(code.hilbert_dim as u32);
    Ok((f.apply(&code.codeword0)?, f.apply(&code.codeword1)?))
}

/// All `2^g` products of the generators of a block code, indexed by the
/// generator subset mask (generator 1 in the lowest bit).
pub fn stabilizer_group(code: &StabilizerCode) -> Result<Vec<QubitPauliString>> {
    let n = code.n_qubits().ok_or_else(|| Error::NotBlockCode(code.kind.to_string()))?;
    let gens: Vec<QubitPauliString> = code.generators.iter().filter_map(|g| g.as_qubit().copied()).collect();
    let mut out = Vec::with_capacity(1 << gens.len());
    for mask in 0u32..(1 << gens.len()) {
        let mut acc = QubitPauliString::identity(n)?;
        for (j, g) in gens.iter().enumerate() {
            if mask >> j & 1 == 1 {
                acc = acc.mul(g)?;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Largest deviation of `g|c> - |c>` over generators and codewords.
pub fn stabilization_defect(code: &StabilizerCode) -> Result<f64> {
    let mut worst = 0.0f64;
    for g in &code.generators {
        for c in code.codewords() {
            worst = worst.max(apply_pauli(g, c)?.sub(c)?.norm());
        }
    }
    Ok(worst)
}

/// Whether every pair of generators commutes.
pub fn generators_commute(code: &StabilizerCode) -> Result<bool> {
    for (i, a) in code.generators.iter().enumerate() {
        for b in &code.generators[i + 1..] {
            let ok = match (a, b) {
                (Pauli::Qudit(x), Pauli::Qudit(y)) => x.commutation_phase(y)? == 0,
                (Pauli::Qubit(x), Pauli::Qubit(y)) => x.commutes_with(y)?,
                _ => return Err(Error::OperatorKindMismatch("mixed generator kinds".into())),
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of distinct syndromes over a list of errors.
pub fn distinct_syndromes(code: &StabilizerCode, errors: &[Pauli]) -> Result<usize> {
    let mut seen = BTreeSet::new();
    for e in errors {
        seen.insert(syndrome(code, e)?);
    }
    Ok(seen.len())
}

/// Support sizes of the two codewords.
pub fn codeword_term_counts(code: &StabilizerCode) -> (usize, usize) {
    (code.codeword0.support(1e-12).len(), code.codeword1.support(1e-12).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::phasespace::{inner_product, restrict_to_codespace};
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn all_codes() -> Vec<StabilizerCode> {
        CodeId::ALL.iter().map(|id| id.build()).collect()
    }

    #[test]
    fn qudit_codewords() {
        let code = build_qudit_code(3, 3).unwrap();
        assert_eq!(code.hilbert_dim(), 18);
        assert_eq!(code.codeword0().support(1e-12), vec![0, 6, 12]);
        assert_eq!(code.codeword1().support(1e-12), vec![3, 9, 15]);
        let amp = code.codeword0().amplitudes()[6];
        assert!((amp - c(1.0 / 3f64.sqrt())).norm() < 1e-15);
        let code = build_qudit_code(5, 5).unwrap();
        assert_eq!(code.hilbert_dim(), 50);
        assert_eq!(code.codeword0().support(1e-12), vec![0, 10, 20, 30, 40]);
        assert_eq!(code.syndrome_space_size(), 25);
    }

    #[test]
    fn rejects_bad_parameters() {
        for (a, b) in [(2, 3), (3, 4), (1, 3), (3, 1), (0, 5)] {
            assert!(build_qudit_code(a, b).is_err(), "({a},{b})");
        }
        assert!(build_qudit_code(3, 5).is_ok());
    }

    #[test]
    fn every_code_is_consistent() {
        for code in all_codes() {
            assert!(stabilization_defect(&code).unwrap() < 1e-12, "{}", code.kind());
            assert!(generators_commute(&code).unwrap());
            let [a, b] = code.codewords();
            assert!(inner_product(a, b).unwrap().norm() < 1e-12);
            assert!((a.norm() - 1.0).abs() < 1e-12 && (b.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn block_stabilizer_groups() {
        let five = build_five_qubit_code();
        let s5 = stabilizer_group(&five).unwrap();
        assert_eq!(s5.len(), 16);
        assert_eq!(s5.iter().skip(1).map(|s| s.weight()).min(), Some(4));
        let seven = build_seven_qubit_code();
        let s7 = stabilizer_group(&seven).unwrap();
        assert_eq!(s7.len(), 64);
        for s in s5.iter().chain(&s7) {
            let code = if s.n_qubits() == 5 { &five } else { &seven };
            let m = restrict_to_codespace(code, &[Pauli::Qubit(*s)]).unwrap();
            assert!(m.approx_eq(&crate::phasespace::CodespaceMatrix::identity(), 1e-12), "{s}");
        }
        assert!(stabilizer_group(&build_qudit_code(3, 3).unwrap()).is_err());
    }

    #[test]
    fn seven_qubit_codeword_amplitude() {
        let code = build_seven_qubit_code();
        let amp = code.codeword0().amplitudes()[0];
        assert!((amp - c(1.0 / 8f64.sqrt())).norm() < 1e-15);
        assert_eq!(codeword_term_counts(&code), (8, 8));
        assert_eq!(codeword_term_counts(&build_five_qubit_code()), (16, 16));
    }

    #[test]
    fn qudit_syndromes() {
        let code = build_qudit_code(3, 3).unwrap();
        let s = |n, m| syndrome(&code, &Pauli::Qudit(QuditPauli::new(18, 0, n, m).unwrap())).unwrap();
        assert_eq!(s(0, 0), Syndrome::Qudit { s_a: 0, s_b: 0 });
        assert_eq!(s(1, 0), Syndrome::Qudit { s_a: 1, s_b: 0 });
        assert_eq!(s(2, 0), Syndrome::Qudit { s_a: 2, s_b: 0 });
        assert_eq!(s(2, 0), s(-1, 0));
        assert_eq!(s(0, -1), Syndrome::Qudit { s_a: 0, s_b: 2 });
    }

    #[test]
    fn qudit_syndrome_matches_generator_eigenvalue() {
        // Z^6 on X^n |0_L> has eigenvalue w^(6n) = exp(2 pi i n / 3)
        let code = build_qudit_code(3, 3).unwrap();
        let z6 = Pauli::Qudit(QuditPauli::z(18, 6));
        for n in 0..18i64 {
            let shifted = apply_pauli(&Pauli::Qudit(QuditPauli::x(18, n)), code.codeword0()).unwrap();
            let ev = inner_product(&shifted, &apply_pauli(&z6, &shifted).unwrap()).unwrap();
            let Syndrome::Qudit { s_a, .. } = syndrome(&code, &Pauli::Qudit(QuditPauli::x(18, n))).unwrap() else {
                unreachable!()
            };
            assert!((ev - crate::phasespace::omega(3, s_a as i64)).norm() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn block_syndromes() {
        let five = build_five_qubit_code();
        let x1 = Pauli::Qubit(QubitPauliString::single(5, 1, 'X').unwrap());
        // X1 anticommutes only with Z1 X2 X4 Z5
        assert_eq!(syndrome(&five, &x1).unwrap(), Syndrome::Bits { mask: 0b0001, len: 4 });
        assert_eq!(syndrome(&five, &five.identity()).unwrap().to_string(), "0000");
        let seven = build_seven_qubit_code();
        let z5 = Pauli::Qubit(QubitPauliString::single(7, 5, 'Z').unwrap());
        let s = syndrome(&seven, &z5).unwrap();
        assert_eq!(s, Syndrome::Bits { mask: 0b101_000, len: 6 });
        assert_eq!((s.bit(1), s.bit(2), s.bit(3)), (Some(1), Some(0), Some(1)));
        assert!(syndrome(&seven, &x1).is_err());
    }

    #[test]
    fn class_reduction() {
        let code = build_qudit_code(3, 3).unwrap();
        assert_eq!(reduce_to_class(&code, &QuditPauli::x(18, 7)).unwrap(), QuditPauli::x(18, 1));
        assert_eq!(reduce_to_class(&code, &QuditPauli::x(18, 13)).unwrap(), QuditPauli::x(18, 1));
        assert_eq!(reduce_to_class(&code, &QuditPauli::z(18, 16)).unwrap(), QuditPauli::z(18, -2));
        assert_eq!(reduce_to_class(&code, &QuditPauli::z(18, 4)).unwrap(), QuditPauli::z(18, -2));
        assert_eq!(reduce_to_class(&code, &QuditPauli::identity(18)).unwrap(), QuditPauli::identity(18));
        assert!(reduce_to_class(&build_five_qubit_code(), &QuditPauli::x(18, 1)).is_err());
    }

    #[test]
    fn class_reduction_preserves_codespace_action_and_counts() {
        for (r1, r2, classes) in [(3u32, 3u32, 36usize), (5, 5, 100)] {
            let code = build_qudit_code(r1, r2).unwrap();
            let d = code.hilbert_dim() as u32;
            let mut reps = BTreeSet::new();
            for n in 0..d as i64 {
                for m in 0..d as i64 {
                    let e = QuditPauli::new(d, (n * m) % 7, n, m).unwrap();
                    let rep = reduce_to_class(&code, &e).unwrap();
                    reps.insert((rep.x_power(), rep.z_power()));
                    if (n + m) % 5 == 0 {
                        let a = restrict_to_codespace(&code, &[Pauli::Qudit(e)]).unwrap();
                        let b = restrict_to_codespace(&code, &[Pauli::Qudit(rep)]).unwrap();
                        assert!(a.approx_eq(&b, 1e-12), "{e} vs {rep}");
                        assert_eq!(
                            syndrome(&code, &Pauli::Qudit(e)).unwrap(),
                            syndrome(&code, &Pauli::Qudit(rep)).unwrap()
                        );
                    }
                }
            }
            assert_eq!(reps.len(), classes);
            assert_eq!(class_residues(r1).len() * class_residues(r2).len(), classes);
        }
    }

    #[test]
    fn syndrome_count_per_qudit_code() {
        for (r1, r2) in [(3u32, 3u32), (5, 5), (3, 5)] {
            let code = build_qudit_code(r1, r2).unwrap();
            let d = code.hilbert_dim() as u32;
            let errors: Vec<Pauli> = (0..d as i64)
                .flat_map(|n| (0..d as i64).map(move |m| Pauli::Qudit(QuditPauli::new(d, 0, n, m).unwrap())))
                .collect();
            assert_eq!(distinct_syndromes(&code, &errors).unwrap(), (r1 * r2) as usize);
        }
    }

    #[test]
    fn block_syndrome_is_a_class_function() {
        for code in [build_five_qubit_code(), build_seven_qubit_code()] {
            let n = code.n_qubits().unwrap();
            let group = stabilizer_group(&code).unwrap();
            for x in 0..(1u64 << n) {
                for z in 0..(1u64 << n) {
                    if (x | z).count_ones() > 2 {
                        continue;
                    }
                    let e = QubitPauliString::new(n, false, x, z).unwrap();
                    let s0 = syndrome(&code, &Pauli::Qubit(e)).unwrap();
                    for g in group.iter().step_by(5) {
                        let eg = e.mul(g).unwrap().negated();
                        assert_eq!(syndrome(&code, &Pauli::Qubit(eg)).unwrap(), s0);
                    }
                }
            }
        }
    }

    #[test]
    fn fourier_duals() {
        for (r1, r2) in [(3u32, 3u32), (5, 5), (3, 5)] {
            let code = build_qudit_code(r1, r2).unwrap();
            let (f0, f1) = dual_codewords(&code).unwrap();
            assert!((f0.norm() - 1.0).abs() < 1e-12);
            let multiples: Vec<usize> = (0..2 * r1 as usize).map(|s| s * r2 as usize).collect();
            assert_eq!(f0.support(1e-9), multiples);
            assert_eq!(f1.support(1e-9), multiples);
            // the logical +/- states carry the (r2, r1) code's comb structure
            let h = c(std::f64::consts::FRAC_1_SQRT_2);
            let plus = StateVector::from_amplitudes(
                f0.amplitudes().iter().zip(f1.amplitudes()).map(|(a, b)| (a + b) * h).collect(),
            )
            .unwrap();
            let minus = StateVector::from_amplitudes(
                f0.amplitudes().iter().zip(f1.amplitudes()).map(|(a, b)| (a - b) * h).collect(),
            )
            .unwrap();
            let swapped = build_qudit_code(r2, r1).unwrap();
            assert!(plus.sub(swapped.codeword0()).unwrap().norm() < 1e-12);
            assert!(minus.sub(swapped.codeword1()).unwrap().norm() < 1e-12);
        }
        let d18 = build_qudit_code(3, 3).unwrap();
        let (f0, f1) = dual_codewords(&d18).unwrap();
        let plus: Vec<usize> = (0..18)
            .filter(|&i| (f0.amplitudes()[i] + f1.amplitudes()[i]).norm() > 1e-9)
            .collect();
        assert_eq!(plus, vec![0, 6, 12]);
        assert!(dual_codewords(&build_five_qubit_code()).is_err());
    }

    #[test]
    fn code_ids_round_trip() {
        for id in CodeId::ALL {
            assert_eq!(id.name().parse::<CodeId>().unwrap(), id);
        }
        assert!("d19".parse::<CodeId>().is_err());
    }
}
