//! Error-operator algebra.
//!
//! Qudit operators are Weyl monomials `w^l X^n Z^m` with `X|k> = |k+1>`,
//! `Z|k> = w^k |k>` and `w = exp(2 pi i / d)`, so `Z X = w X Z`.
//!
//! Qubit strings are `(-1)^sign X(a) Z(b)` with `Y = XZ` (real). Qubit `j`
//! (1-based) lives in bit `n - j` of the masks, matching the basis-index
//! convention in [`crate::phasespace`] where qubit 1 is the most significant
//! bit.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_QUBITS: u32 = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuditPauli {
    d: u32,
    l: u32,
    n: u32,
    m: u32,
}

fn reduce(x: i64, d: u32) -> u32 {
    x.rem_euclid(d as i64) as u32
}

impl QuditPauli {
    /// `w^l X^n Z^m`, all exponents reduced mod `d`.
    pub fn new(d: u32, l: i64, n: i64, m: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidCodeParameters("qudit dimension must be positive".into()));
        }
        Ok(Self {
            d,
            l: reduce(l, d),
            n: reduce(n, d),
            m: reduce(m, d),
        })
    }

    pub fn identity(d: u32) -> Self {
        Self::new(d, 0, 0, 0).expect("positive dimension")
    }

    pub fn x(d: u32, n: i64) -> Self {
        Self::new(d, 0, n, 0).expect("positive dimension")
    }

    pub fn z(d: u32, m: i64) -> Self {
        Self::new(d, 0, 0, m).expect("positive dimension")
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn phase(&self) -> u32 {
        self.l
    }

    pub fn x_power(&self) -> u32 {
        self.n
    }

    pub fn z_power(&self) -> u32 {
        self.m
    }

    pub fn is_identity_up_to_phase(&self) -> bool {
        self.n == 0 && self.m == 0
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch {
                expected: self.d as usize,
                found: other.d as usize,
            });
        }
        Ok(())
    }

    /// `self * other` in canonical `w^l X^n Z^m` form.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let d = self.d as u64;
        // Z^m1 X^n2 = w^(m1 n2) X^n2 Z^m1
        let cross = (self.m as u64 * other.n as u64) % d;
        Ok(Self {
            d: self.d,
            l: ((self.l as u64 + other.l as u64 + cross) % d) as u32,
            n: ((self.n as u64 + other.n as u64) % d) as u32,
            m: ((self.m as u64 + other.m as u64) % d) as u32,
        })
    }

    /// `t` with `self * other = w^t other * self`.
    pub fn commutation_phase(&self, other: &Self) -> Result<u32> {
        self.check_dim(other)?;
        let t = other.n as i64 * self.m as i64 - self.n as i64 * other.m as i64;
        Ok(reduce(t, self.d))
    }

    pub fn adjoint(&self) -> Self {
        let nm = self.n as i64 * self.m as i64;
        Self::new(self.d, -(self.l as i64) + nm, -(self.n as i64), -(self.m as i64))
            .expect("positive dimension")
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.d);
        for _ in 0..k {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }
}

impl fmt::Display for QuditPauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w^{} X^{} Z^{}", self.l, self.n, self.m)
    }
}

/// Sign-tracked n-qubit Pauli string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QubitPauliString {
    n_qubits: u32,
    sign: bool,
    x: u64,
    z: u64,
}

fn check_qubits(n: u32) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::InvalidCodeParameters(format!(
            "qubit count {n} outside 1..={MAX_QUBITS}"
        )));
    }
    Ok(())
}

impl QubitPauliString {
    pub fn new(n_qubits: u32, sign: bool, x: u64, z: u64) -> Result<Self> {
        check_qubits(n_qubits)?;
        let full = (1u64 << n_qubits) - 1;
        if x & !full != 0 || z & !full != 0 {
            return Err(Error::InvalidCodeParameters(format!(
                "mask wider than {n_qubits} qubits"
            )));
        }
        Ok(Self { n_qubits, sign, x, z })
    }

    pub fn identity(n_qubits: u32) -> Result<Self> {
        Self::new(n_qubits, false, 0, 0)
    }

    /// Bit mask for 1-based qubit `j`.
    pub fn qubit_bit(n_qubits: u32, j: u32) -> u64 {
        debug_assert!(j >= 1 && j <= n_qubits);
        1u64 << (n_qubits - j)
    }

    /// Parses a letter string such as `"XZZXI"` (qubit 1 first), with an
    /// optional leading `+` or `-`.
    pub fn from_letters(s: &str) -> Result<Self> {
        let (sign, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let n = body.chars().count() as u32;
        check_qubits(n)?;
        let (mut x, mut z) = (0u64, 0u64);
        for (i, c) in body.chars().enumerate() {
            let bit = Self::qubit_bit(n, i as u32 + 1);
            match c {
                'I' => {}
                'X' => x |= bit,
                'Z' => z |= bit,
                'Y' => {
                    x |= bit;
                    z |= bit;
                }
                other => return Err(Error::Parse(format!("unexpected Pauli letter {other:?}"))),
            }
        }
        Self::new(n, sign, x, z)
    }

    /// Single-qubit `X`, `Y` or `Z` on 1-based qubit `j`.
    pub fn single(n_qubits: u32, j: u32, letter: char) -> Result<Self> {
        check_qubits(n_qubits)?;
        if j == 0 || j > n_qubits {
            return Err(Error::InvalidCodeParameters(format!("qubit {j} outside 1..={n_qubits}")));
        }
        let bit = Self::qubit_bit(n_qubits, j);
        let (x, z) = match letter {
            'X' => (bit, 0),
            'Z' => (0, bit),
            'Y' => (bit, bit),
            other => return Err(Error::Parse(format!("unexpected Pauli letter {other:?}"))),
        };
        Self::new(n_qubits, false, x, z)
    }

    pub fn n_qubits(&self) -> u32 {
        self.n_qubits
    }

    pub fn sign(&self) -> bool {
        self.sign
    }

    pub fn x_mask(&self) -> u64 {
        self.x
    }

    pub fn z_mask(&self) -> u64 {
        self.z
    }

    pub fn negated(&self) -> Self {
        Self {
            sign: !self.sign,
            ..*self
        }
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.n_qubits != other.n_qubits {
            return Err(Error::DimensionMismatch {
                expected: self.n_qubits as usize,
                found: other.n_qubits as usize,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        // moving Z(b1) past X(a2) costs (-1)^(b1.a2)
        let swap = (self.z & other.x).count_ones() & 1 == 1;
        Ok(Self {
            n_qubits: self.n_qubits,
            sign: self.sign ^ other.sign ^ swap,
            x: self.x ^ other.x,
            z: self.z ^ other.z,
        })
    }

    pub fn adjoint(&self) -> Self {
        let flip = (self.x & self.z).count_ones() & 1 == 1;
        Self {
            sign: self.sign ^ flip,
            ..*self
        }
    }

    pub fn symplectic(&self) -> SymplecticVector {
        SymplecticVector {
            n: self.n_qubits,
            a: self.x,
            b: self.z,
        }
    }

    pub fn weight(&self) -> u32 {
        (self.x | self.z).count_ones()
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool> {
        Ok(self.symplectic().symplectic_product(&other.symplectic())? == 0)
    }

    /// Letter form, qubit 1 first, e.g. `"-XYZII"`.
    pub fn letters(&self) -> String {
        let mut s = String::with_capacity(self.n_qubits as usize + 1);
        if self.sign {
            s.push('-');
        }
        for j in 1..=self.n_qubits {
            let bit = Self::qubit_bit(self.n_qubits, j);
            s.push(match (self.x & bit != 0, self.z & bit != 0) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            });
        }
        s
    }
}

fn bits(mask: u64, n: u32) -> String {
    format!("{:0width$b}", mask, width = n as usize)
}

impl fmt::Display for QubitPauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.sign { '-' } else { '+' };
        write!(
            f,
            "{}X({})Z({})",
            sign,
            bits(self.x, self.n_qubits),
            bits(self.z, self.n_qubits)
        )
    }
}

/// `(a|b)` in F_2^{2n}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticVector {
    pub n: u32,
    pub a: u64,
    pub b: u64,
}

impl SymplecticVector {
    pub fn symplectic_product(&self, other: &Self) -> Result<u8> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n as usize,
                found: other.n as usize,
            });
        }
        let ones = (self.a & other.b).count_ones() + (other.a & self.b).count_ones();
        Ok((ones & 1) as u8)
    }

    pub fn weight(&self) -> u32 {
        (self.a | self.b).count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }
}

impl fmt::Display for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", bits(self.a, self.n), bits(self.b, self.n))
    }
}

/// Either kind of error operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    Qudit(QuditPauli),
    Qubit(QubitPauliString),
}

impl Pauli {
    /// Hilbert-space dimension the operator acts on.
    pub fn dim(&self) -> usize {
        match self {
            Pauli::Qudit(e) => e.d as usize,
            Pauli::Qubit(e) => 1usize << e.n_qubits,
        }
    }

    pub fn identity_like(&self) -> Pauli {
        match self {
            Pauli::Qudit(e) => Pauli::Qudit(QuditPauli::identity(e.d)),
            Pauli::Qubit(e) => Pauli::Qubit(QubitPauliString::identity(e.n_qubits).expect("valid width")),
        }
    }

    pub fn mul(&self, other: &Pauli) -> Result<Pauli> {
        match (self, other) {
            (Pauli::Qudit(a), Pauli::Qudit(b)) => Ok(Pauli::Qudit(a.mul(b)?)),
            (Pauli::Qubit(a), Pauli::Qubit(b)) => Ok(Pauli::Qubit(a.mul(b)?)),
            _ => Err(Error::OperatorKindMismatch("cannot multiply qudit and qubit operators".into())),
        }
    }

    pub fn adjoint(&self) -> Pauli {
        match self {
            Pauli::Qudit(e) => Pauli::Qudit(e.adjoint()),
            Pauli::Qubit(e) => Pauli::Qubit(e.adjoint()),
        }
    }

    pub fn as_qudit(&self) -> Option<&QuditPauli> {
        match self {
            Pauli::Qudit(e) => Some(e),
            Pauli::Qubit(_) => None,
        }
    }

    pub fn as_qubit(&self) -> Option<&QubitPauliString> {
        match self {
            Pauli::Qubit(e) => Some(e),
            Pauli::Qudit(_) => None,
        }
    }
}

impl From<QuditPauli> for Pauli {
    fn from(e: QuditPauli) -> Self {
        Pauli::Qudit(e)
    }
}

impl From<QubitPauliString> for Pauli {
    fn from(e: QubitPauliString) -> Self {
        Pauli::Qubit(e)
    }
}

impl fmt::Display for Pauli {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pauli::Qudit(e) => e.fmt(f),
            Pauli::Qubit(e) => e.fmt(f),
        }
    }
}
