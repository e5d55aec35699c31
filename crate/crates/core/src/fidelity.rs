//! Entanglement fidelity of recovery after a Weyl channel,
//! `F = 1/4 sum_{k,l} pi_l |tr([R_k E_l]|_C)|^2`, as numbers and as exact
//! polynomials, plus leading-order, threshold and crossover analysis.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::channels::{enumerate_kraus, ChannelFamily, KrausTerm};
use crate::codes::{CodeId, StabilizerCode};
use crate::correction::{correctable_set, standard_recovery, RecoveryMap};
use crate::error::{Error, Result};
use crate::exactpoly::{
    rational_reconstruct, rational_to_f64, Point, RationalPolynomial, Variable, DEFAULT_MAX_DENOMINATOR,
    DEFAULT_TOLERANCE,
};
use crate::paulialg::Pauli;
use crate::phasespace::basis_image;

fn sparse(v: &crate::phasespace::StateVector) -> Vec<(usize, Complex64)> {
    v.amplitudes()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.norm() > 0.0)
        .map(|(k, a)| (k, *a))
        .collect()
}

/// Per-term weights `w_l = 1/4 sum_k |tr([R_k E_l]|_C)|^2`, in term order.
pub fn trace_weights(code: &StabilizerCode, terms: &[KrausTerm], recovery: &RecoveryMap) -> Result<Vec<f64>> {
    if recovery.dim() != code.hilbert_dim() {
        return Err(Error::DimensionMismatch {
            expected: code.hilbert_dim(),
            found: recovery.dim(),
        });
    }
    for t in terms {
        code.check_operator(&t.operator)?;
    }
    let words = [sparse(code.codeword0()), sparse(code.codeword1())];
    let weights = terms
        .par_iter()
        .map(|t| {
            let mut w = 0.0;
            for entry in recovery.entries() {
                // tr = sum_i <v_k^i| E_l |i_L>
                let mut tr = Complex64::new(0.0, 0.0);
                for (i, word) in words.iter().enumerate() {
                    let v = entry.images()[i].amplitudes();
                    for &(k, a) in word {
                        let (idx, ph) = basis_image(&t.operator, k);
                        tr += v[idx].conj() * ph * a;
                    }
                }
                w += tr.norm_sqr();
            }
            0.25 * w
        })
        .collect();
    Ok(weights)
}

pub fn entanglement_fidelity_value(
    code: &StabilizerCode,
    terms: &[KrausTerm],
    recovery: &RecoveryMap,
    point: Point,
) -> Result<f64> {
    let w = trace_weights(code, terms, recovery)?;
    Ok(weighted_value(terms, &w, point))
}

fn weighted_value(terms: &[KrausTerm], weights: &[f64], point: Point) -> f64 {
    terms
        .iter()
        .zip(weights)
        .filter(|(_, w)| **w != 0.0)
        .map(|(t, w)| w * t.weight.eval(point))
        .sum()
}

fn exact_sum(terms: &[KrausTerm], weights: &[BigRational]) -> RationalPolynomial {
    // block codes repeat the same probability polynomial many times
    let mut grouped: HashMap<&RationalPolynomial, BigRational> = HashMap::new();
    for (t, w) in terms.iter().zip(weights) {
        if w.is_zero() {
            continue;
        }
        *grouped.entry(&t.weight).or_insert_with(BigRational::zero) += w;
    }
    grouped.into_iter().map(|(poly, w)| poly.scale(&w)).sum()
}

fn reconstruct_all(weights: &[f64]) -> Result<Vec<BigRational>> {
    weights
        .iter()
        .map(|&w| rational_reconstruct(w, DEFAULT_TOLERANCE, DEFAULT_MAX_DENOMINATOR))
        .collect()
}

pub fn entanglement_fidelity_polynomial(
    code: &StabilizerCode,
    terms: &[KrausTerm],
    recovery: &RecoveryMap,
) -> Result<RationalPolynomial> {
    let w = reconstruct_all(&trace_weights(code, terms, recovery)?)?;
    Ok(exact_sum(terms, &w))
}

/// Total probability of the errors in the correctable set itself.
///
/// This is a lower bound on the fidelity: errors that differ from a
/// correctable one by a stabilizer element are recovered too and are counted
/// by the trace engine but not here. For the qudit codes the Kraus terms are
/// already code-space classes and the two agree.
pub fn correctable_probability_sum(code: &StabilizerCode, terms: &[KrausTerm]) -> Result<RationalPolynomial> {
    let key = |e: &Pauli| match e {
        Pauli::Qudit(q) => (q.x_power() as u64, q.z_power() as u64),
        Pauli::Qubit(s) => (s.x_mask(), s.z_mask()),
    };
    let set: HashSet<(u64, u64)> = correctable_set(code).iter().map(key).collect();
    let mut out = RationalPolynomial::zero();
    for t in terms {
        code.check_operator(&t.operator)?;
        if set.contains(&key(&t.operator)) {
            out += &t.weight;
        }
    }
    Ok(out)
}

/// A code, a channel family and the standard recovery, with the trace weights
/// computed once on first use.
pub struct FidelityEngine {
    code: StabilizerCode,
    family: ChannelFamily,
    terms: Vec<KrausTerm>,
    recovery: RecoveryMap,
    weights: OnceLock<Vec<f64>>,
}

impl FidelityEngine {
    pub fn new(code: StabilizerCode, family: ChannelFamily) -> Result<Self> {
        let terms = enumerate_kraus(&code, family)?;
        let recovery = standard_recovery(&code)?;
        Ok(Self {
            code,
            family,
            terms,
            recovery,
            weights: OnceLock::new(),
        })
    }

    pub fn for_code(id: CodeId, family: ChannelFamily) -> Result<Self> {
        Self::new(id.build(), family)
    }

    pub fn code(&self) -> &StabilizerCode {
        &self.code
    }

    pub fn family(&self) -> ChannelFamily {
        self.family
    }

    pub fn terms(&self) -> &[KrausTerm] {
        &self.terms
    }

    pub fn recovery(&self) -> &RecoveryMap {
        &self.recovery
    }

    pub fn trace_weights(&self) -> &[f64] {
        self.weights.get_or_init(|| {
            trace_weights(&self.code, &self.terms, &self.recovery).expect("engine inputs are consistent")
        })
    }

    pub fn value(&self, point: Point) -> f64 {
        weighted_value(&self.terms, self.trace_weights(), point)
    }

    pub fn polynomial(&self) -> Result<RationalPolynomial> {
        let w = reconstruct_all(self.trace_weights())?;
        Ok(exact_sum(&self.terms, &w))
    }

    pub fn correctable_sum(&self) -> Result<RationalPolynomial> {
        correctable_probability_sum(&self.code, &self.terms)
    }

    /// Number of Kraus terms that the recovery fully corrects (`w_l = 1`).
    pub fn corrected_term_count(&self) -> usize {
        self.trace_weights().iter().filter(|w| (**w - 1.0).abs() < 1e-9).count()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LeadingOrder {
    /// Coefficient of `p^exponent` in `1 - F`, a polynomial in `kappa`, `mu`.
    pub coefficient: RationalPolynomial,
    pub exponent: u32,
}

pub fn leading_order(f: &RationalPolynomial) -> Result<LeadingOrder> {
    let at_zero = f.coefficient_of(Variable::P, 0);
    if at_zero != RationalPolynomial::one() {
        return Err(Error::NotNormalized(at_zero.to_string()));
    }
    let g = &RationalPolynomial::one() - f;
    let exponent = g.min_degree_in(Variable::P).ok_or(Error::ConstantPolynomial)?;
    Ok(LeadingOrder {
        coefficient: g.coefficient_of(Variable::P, exponent),
        exponent,
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThresholdReport {
    pub threshold: f64,
    pub bracket: (f64, f64),
}

const THRESHOLD_SCAN_STEP: f64 = 1e-3;
const THRESHOLD_TOL: f64 = 1e-8;

/// Smallest positive root of `1 - F(p) - p` at fixed `kappa`, `mu`.
pub fn effectiveness_threshold(f: &RationalPolynomial, kappa: f64, mu: f64) -> Result<ThresholdReport> {
    let g = |p: f64| 1.0 - f.eval(Point::new(p, kappa, mu)) - p;
    let steps = (1.0 / THRESHOLD_SCAN_STEP).round() as usize;
    for i in 1..=steps {
        let hi = i as f64 * THRESHOLD_SCAN_STEP;
        if g(hi) >= 0.0 {
            let (mut lo, mut hi) = ((i - 1) as f64 * THRESHOLD_SCAN_STEP, hi);
            while hi - lo > THRESHOLD_TOL {
                let mid = 0.5 * (lo + hi);
                if g(mid) >= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return Ok(ThresholdReport {
                threshold: 0.5 * (lo + hi),
                bracket: (lo, hi),
            });
        }
    }
    Err(Error::NoThreshold { kappa, mu })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Crossover {
    /// The leading coefficients cross at this `kappa > 0`.
    At(f64),
    NoCrossover,
    /// Leading orders differ; the code with the larger exponent wins at small
    /// `p` for every `kappa`.
    DifferentOrder { exponent_a: u32, exponent_b: u32 },
}

/// Coefficients of a `kappa`-only polynomial, lowest degree first.
fn kappa_coefficients(c: &RationalPolynomial) -> Result<Vec<BigRational>> {
    if c.degree_in(Variable::Mu).unwrap_or(0) > 0 || c.degree_in(Variable::P).unwrap_or(0) > 0 {
        return Err(Error::UnsupportedChannel(format!(
            "crossover needs coefficients in kappa only, got {c}"
        )));
    }
    let deg = c.degree_in(Variable::Kappa).unwrap_or(0) as usize;
    let mut out = vec![BigRational::zero(); deg + 1];
    for (e, v) in c.terms() {
        out[e.kappa as usize] = v.clone();
    }
    Ok(out)
}

fn trimmed(mut c: Vec<BigRational>) -> Vec<BigRational> {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
    c
}

/// Where the leading-order coefficients of two fidelities cross as functions
/// of `kappa`.
pub fn crossover_kappa(fa: &RationalPolynomial, fb: &RationalPolynomial) -> Result<Crossover> {
    let (la, lb) = (leading_order(fa)?, leading_order(fb)?);
    if la.exponent != lb.exponent {
        return Ok(Crossover::DifferentOrder {
            exponent_a: la.exponent,
            exponent_b: lb.exponent,
        });
    }
    let h = trimmed(kappa_coefficients(&(&la.coefficient - &lb.coefficient))?);
    let f = |c: &BigRational| rational_to_f64(c);
    match h.len() {
        0 | 1 => Ok(Crossover::NoCrossover),
        2 => {
            let root = -f(&h[0]) / f(&h[1]);
            Ok(if root > 0.0 { Crossover::At(root) } else { Crossover::NoCrossover })
        }
        3 => {
            let disc = &h[1] * &h[1] - BigRational::from_integer(BigInt::from(4)) * &h[2] * &h[0];
            if !disc.is_positive() {
                // a double root touches without flipping the ordering
                return Ok(Crossover::NoCrossover);
            }
            let (a, b, c) = (f(&h[2]), f(&h[1]), f(&h[0]));
            let sq = rational_to_f64(&disc).sqrt();
            // numerically stable pair of roots
            let q = -0.5 * (b + b.signum() * sq);
            let mut roots = [q / a, if q != 0.0 { c / q } else { 0.0 }];
            roots.sort_by(|x, y| x.total_cmp(y));
            Ok(roots
                .into_iter()
                .find(|r| *r > 0.0)
                .map(Crossover::At)
                .unwrap_or(Crossover::NoCrossover))
        }
        _ => {
            let coeffs: Vec<f64> = h.iter().map(f).collect();
            let eval = |k: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * k + c);
            let step = 1e-3;
            let mut lo = 0.0;
            let mut glo = eval(lo);
            for i in 1..=1_000_000 {
                let hi = i as f64 * step;
                let ghi = eval(hi);
                if glo != 0.0 && glo.signum() != ghi.signum() {
                    let (mut a, mut b) = (lo, hi);
                    while b - a > 1e-12 {
                        let m = 0.5 * (a + b);
                        if eval(m).signum() == glo.signum() {
                            a = m;
                        } else {
                            b = m;
                        }
                    }
                    return Ok(Crossover::At(0.5 * (a + b)));
                }
                lo = hi;
                glo = ghi;
            }
            Ok(Crossover::NoCrossover)
        }
    }
}

/// `coefficient` of a leading order evaluated at a `kappa` value.
pub fn leading_coefficient_at(lo: &LeadingOrder, kappa: f64) -> f64 {
    lo.coefficient.eval(Point::new(0.0, kappa, 0.0))
}

/// Exact integer value of a constant polynomial, if it is one.
pub fn as_integer(c: &RationalPolynomial) -> Option<i64> {
    if !c.is_constant() {
        return None;
    }
    let v = c.coefficient(Default::default());
    if v.is_integer() {
        v.to_integer().to_i64()
    } else {
        None
    }
}
