//! Weyl-channel noise models and their Kraus enumerations.
//!
//! Weights are exact polynomials in `p`, `kappa` and `mu`. Qudit codes get one
//! term per code-space class, block codes one term per n-qubit Pauli string.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::codes::{class_residues, CodeKind, StabilizerCode};
use crate::error::{Error, Result};
use crate::exactpoly::{Point, RationalPolynomial, Variable};
use crate::paulialg::{Pauli, QubitPauliString, QuditPauli};
use crate::phasespace::basis_image;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChannelFamily {
    Symmetric,
    Asymmetric,
    Correlated,
}

impl ChannelFamily {
    pub fn name(self) -> &'static str {
        match self {
            ChannelFamily::Symmetric => "symmetric",
            ChannelFamily::Asymmetric => "asymmetric",
            ChannelFamily::Correlated => "correlated",
        }
    }

    /// Rejects parameter values the family does not model.
    pub fn check_parameters(self, kappa: f64, mu: f64) -> Result<()> {
        if !kappa.is_finite() || kappa < 0.0 {
            return Err(Error::UnsupportedChannel(format!("kappa must be >= 0, got {kappa}")));
        }
        if !mu.is_finite() || !(0.0..=1.0).contains(&mu) {
            return Err(Error::UnsupportedChannel(format!("mu must lie in [0, 1], got {mu}")));
        }
        if kappa != 1.0 && self != ChannelFamily::Asymmetric {
            return Err(Error::UnsupportedChannel(format!(
                "kappa = {kappa} needs the asymmetric channel, not {}",
                self.name()
            )));
        }
        if mu != 0.0 && self != ChannelFamily::Correlated {
            return Err(Error::UnsupportedChannel(format!(
                "mu = {mu} needs the correlated channel, not {}",
                self.name()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for ChannelFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChannelFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "symmetric" => Ok(ChannelFamily::Symmetric),
            "asymmetric" => Ok(ChannelFamily::Asymmetric),
            "correlated" => Ok(ChannelFamily::Correlated),
            other => Err(Error::Parse(format!(
                "unknown channel {other:?} (expected symmetric, asymmetric or correlated)"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KrausTerm {
    pub operator: Pauli,
    /// Probability of `operator`.
    pub weight: RationalPolynomial,
}

fn p() -> RationalPolynomial {
    RationalPolynomial::var(Variable::P)
}

fn kappa_p() -> RationalPolynomial {
    &RationalPolynomial::var(Variable::Kappa) * &p()
}

/// Shift marginal over balanced residues mod `2r`, in [`class_residues`]
/// order: `x^|k|` for `k != 0` (the top class `r` once) and the remainder on 0.
pub fn shift_marginal(r: u32, x: &RationalPolynomial) -> Vec<(i64, RationalPolynomial)> {
    let residues = class_residues(r);
    let mut out: Vec<(i64, RationalPolynomial)> = residues
        .iter()
        .map(|&k| (k, x.pow(k.unsigned_abs() as u32)))
        .collect();
    let rest: RationalPolynomial = out[1..].iter().map(|(_, w)| w.clone()).sum();
    out[0].1 = &RationalPolynomial::one() - &rest;
    out
}

pub fn enumerate_qudit_kraus(code: &StabilizerCode, family: ChannelFamily) -> Result<Vec<KrausTerm>> {
    let (r1, r2) = code.qudit_params()?;
    let d = code.hilbert_dim() as u32;
    let x_var = match family {
        ChannelFamily::Asymmetric => kappa_p(),
        _ => p(),
    };
    let pi_x = shift_marginal(r1, &x_var);
    let pi_z = shift_marginal(r2, &p());
    if family == ChannelFamily::Correlated && r1 != r2 {
        return Err(Error::UnsupportedChannel(format!(
            "correlated errors need r1 = r2, got ({r1}, {r2})"
        )));
    }
    let mu = RationalPolynomial::var(Variable::Mu);
    let one_minus_mu = &RationalPolynomial::one() - &mu;
    let mut out = Vec::with_capacity(pi_x.len() * pi_z.len());
    for (n, wx) in &pi_x {
        for (m, wz) in &pi_z {
            let independent = wx * wz;
            let weight = match family {
                ChannelFamily::Correlated => {
                    let mut w = &one_minus_mu * &independent;
                    if n == m {
                        w += &(&mu * wz);
                    }
                    w
                }
                _ => independent,
            };
            out.push(KrausTerm {
                operator: Pauli::Qudit(QuditPauli::new(d, 0, *n, *m)?),
                weight,
            });
        }
    }
    Ok(out)
}

pub fn enumerate_block_kraus(code: &StabilizerCode, family: ChannelFamily) -> Result<Vec<KrausTerm>> {
    let n = code
        .n_qubits()
        .ok_or_else(|| Error::NotBlockCode(code.kind().to_string()))?;
    let px = match family {
        ChannelFamily::Symmetric => p(),
        ChannelFamily::Asymmetric => kappa_p(),
        ChannelFamily::Correlated => {
            return Err(Error::UnsupportedChannel(
                "correlated errors are only modelled for qudit codes".into(),
            ))
        }
    };
    let pz = p();
    let one = RationalPolynomial::one();
    let (qx, qz) = (&one - &px, &one - &pz);
    // weights depend only on the X and Z weights of the string
    let nn = n as usize;
    let mut table = vec![vec![RationalPolynomial::zero(); nn + 1]; nn + 1];
    for (wx, row) in table.iter_mut().enumerate() {
        let xpart = &px.pow(wx as u32) * &qx.pow((nn - wx) as u32);
        for (wz, cell) in row.iter_mut().enumerate() {
            *cell = &xpart * &(&pz.pow(wz as u32) * &qz.pow((nn - wz) as u32));
        }
    }
    let mut out = Vec::with_capacity(1 << (2 * n));
    for x in 0..(1u64 << n) {
        for z in 0..(1u64 << n) {
            out.push(KrausTerm {
                operator: Pauli::Qubit(QubitPauliString::new(n, false, x, z)?),
                weight: table[x.count_ones() as usize][z.count_ones() as usize].clone(),
            });
        }
    }
    Ok(out)
}

pub fn enumerate_kraus(code: &StabilizerCode, family: ChannelFamily) -> Result<Vec<KrausTerm>> {
    match code.kind() {
        CodeKind::QuditShift { .. } => enumerate_qudit_kraus(code, family),
        CodeKind::FiveQubit | CodeKind::SevenQubitCss => enumerate_block_kraus(code, family),
    }
}

pub fn total_weight(terms: &[KrausTerm]) -> RationalPolynomial {
    terms.iter().map(|t| t.weight.clone()).sum()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ValidityReport {
    pub valid: bool,
    pub sum: f64,
    /// Operators whose weight leaves `[0, 1]` at the point, with that weight.
    pub offending: Vec<(String, f64)>,
    /// Largest `p` (at the point's `kappa`, `mu`) below which every weight
    /// stays in `[0, 1]`; `None` if none leaves it on `(0, 1]`.
    pub validity_bound: Option<f64>,
}

const WEIGHT_TOL: f64 = 1e-12;
const SCAN_STEP: f64 = 1e-4;

fn in_unit_interval(w: f64) -> bool {
    (-WEIGHT_TOL..=1.0 + WEIGHT_TOL).contains(&w)
}

pub fn validate_distribution(terms: &[KrausTerm], point: Point) -> ValidityReport {
    let mut offending = Vec::new();
    let mut sum = 0.0;
    for t in terms {
        let w = t.weight.eval(point);
        sum += w;
        if !in_unit_interval(w) {
            offending.push((t.operator.to_string(), w));
        }
    }
    let valid = offending.is_empty() && (sum - 1.0).abs() <= WEIGHT_TOL * terms.len().max(1) as f64;
    ValidityReport {
        valid,
        sum,
        offending,
        validity_bound: validity_bound(terms, point.kappa, point.mu),
    }
}

/// Sign scan in `p` at resolution 1e-4, refined by bisection.
pub fn validity_bound(terms: &[KrausTerm], kappa: f64, mu: f64) -> Option<f64> {
    let mut seen = HashSet::new();
    let distinct: Vec<&RationalPolynomial> = terms.iter().map(|t| &t.weight).filter(|w| seen.insert(*w)).collect();
    let ok = |p: f64| distinct.iter().all(|w| in_unit_interval(w.eval(Point::new(p, kappa, mu))));
    let steps = (1.0 / SCAN_STEP).round() as usize;
    let mut lo = 0.0;
    for i in 1..=steps {
        let hi = i as f64 * SCAN_STEP;
        if !ok(hi) {
            let mut lo = lo;
            let mut hi = hi;
            while hi - lo > 1e-12 {
                let mid = 0.5 * (lo + hi);
                if ok(mid) {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Some(lo);
        }
        lo = hi;
    }
    None
}

/// Checks `sum_k pi_k A_k^dagger A_k = I` densely at five seeded random points
/// with `p` in `[0, 0.2]`, `kappa` in `[0, 2]`, `mu` in `[0, 1]`.
pub fn trace_preservation_check(terms: &[KrausTerm], code: &StabilizerCode, seed: u64) -> Result<bool> {
    let dim = code.hilbert_dim();
    for t in terms {
        code.check_operator(&t.operator)?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..5 {
        let point = Point::new(rng.gen_range(0.0..0.2), rng.gen_range(0.0..2.0), rng.gen_range(0.0..1.0));
        let mut acc = vec![Complex64::new(0.0, 0.0); dim * dim];
        for t in terms {
            let w = t.weight.eval(point);
            let adj = t.operator.adjoint();
            for col in 0..dim {
                let (i, ph) = basis_image(&t.operator, col);
                let (row, ph2) = basis_image(&adj, i);
                acc[row * dim + col] += ph2 * ph * w;
            }
        }
        for r in 0..dim {
            for c in 0..dim {
                let expect = if r == c { 1.0 } else { 0.0 };
                if (acc[r * dim + c] - Complex64::new(expect, 0.0)).norm() > 1e-10 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
