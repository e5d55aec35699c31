//! Reference fidelity polynomials for the four codes.
//!
//! Each is listed as rows `(kappa power, [c_0, c_1, ...])` where `c_i`
//! multiplies `p^i`. These are regression targets; the engine computes its
//! own polynomials independently.

use crate::exactpoly::{Exponents, RationalPolynomial};
use num_bigint::BigInt;
use num_rational::BigRational;

fn rows(rs: &[(u32, &[i64])]) -> RationalPolynomial {
    RationalPolynomial::from_terms(rs.iter().flat_map(|(k, cs)| {
        cs.iter()
            .enumerate()
            .map(move |(i, &c)| (BigRational::from_integer(BigInt::from(c)), Exponents::new(i as u32, *k, 0)))
    }))
}

pub fn d18_symmetric() -> RationalPolynomial {
    rows(&[(0, &[1, 0, -4, -2, 4, 4, 1])])
}

pub fn d18_asymmetric() -> RationalPolynomial {
    rows(&[
        (0, &[1, 0, -2, -1]),
        (2, &[0, 0, -2, 0, 4, 2]),
        (3, &[0, 0, 0, -1, 0, 2, 1]),
    ])
}

/// Symmetric part plus `mu (2p^2 + p^3 - 4p^4 - 4p^5 - p^6)`.
pub fn d18_correlated() -> RationalPolynomial {
    let mu = RationalPolynomial::from_terms([(BigRational::from_integer(BigInt::from(1)), Exponents::new(0, 0, 1))]);
    &d18_symmetric() + &(&mu * &rows(&[(0, &[0, 0, 2, 1, -4, -4, -1])]))
}

pub fn d50_symmetric() -> RationalPolynomial {
    rows(&[(0, &[1, 0, 0, -4, -4, -2, 4, 8, 8, 4, 1])])
}

pub fn d50_asymmetric() -> RationalPolynomial {
    rows(&[
        (0, &[1, 0, 0, -2, -2, -1]),
        (3, &[0, 0, 0, -2, 0, 0, 4, 4, 2]),
        (4, &[0, 0, 0, 0, -2, 0, 0, 4, 4, 2]),
        (5, &[0, 0, 0, 0, 0, -1, 0, 0, 2, 2, 1]),
    ])
}

/// Note the `p^8` coefficient is `-175`; `+175` (a common misquote) breaks
/// both the `kappa = 1` reduction of [`five_asymmetric`] and the closed-form
/// product.
pub fn five_symmetric() -> RationalPolynomial {
    rows(&[(0, &[1, 0, -40, 200, -490, 728, -700, 440, -175, 40, -4])])
}

/// The `p^8` coefficient of [`five_symmetric`] as it is often quoted.
pub const FIVE_SYMMETRIC_P8_MISQUOTE: i64 = 175;

pub fn five_asymmetric() -> RationalPolynomial {
    rows(&[
        (0, &[1, 0, -10, 20, -15, 4]),
        (1, &[0, 0, -20, 80, -120, 80, -20]),
        (2, &[0, 0, -10, 80, -220, 280, -170, 40]),
        (3, &[0, 0, 0, 20, -120, 280, -320, 180, -40]),
        (4, &[0, 0, 0, 0, -15, 80, -170, 180, -95, 20]),
        (5, &[0, 0, 0, 0, 0, 4, -20, 40, -40, 20, -4]),
    ])
}

pub fn seven_symmetric() -> RationalPolynomial {
    rows(&[(
        0,
        &[1, 0, -42, 140, 231, -2772, 9240, -18216, 24255, -22792, 15246, -7140, 2233, -420, 36],
    )])
}

pub fn seven_asymmetric() -> RationalPolynomial {
    rows(&[
        (0, &[1, 0, -21, 70, -105, 84, -35, 6]),
        (1, &[0, 0, -21, 126, -315, 420, -315, 126, -21]),
        (2, &[0, 0, 0, -21, 126, -315, 420, -315, 126, -21]),
        (3, &[0, 0, 0, -35, 420, -1785, 3850, -4725, 3360, -1295, 210]),
        (4, &[0, 0, 0, 0, 105, -1050, 4095, -8400, 9975, -6930, 2625, -420]),
        (5, &[0, 0, 0, 0, 0, -126, 1155, -4284, 8505, -9870, 6741, -2520, 399]),
        (6, &[0, 0, 0, 0, 0, 0, 70, -609, 2184, -4235, 4830, -3255, 1204, -189]),
        (7, &[0, 0, 0, 0, 0, 0, 0, -15, 126, -441, 840, -945, 630, -231, 36]),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::Variable;

    fn one() -> BigRational {
        BigRational::from_integer(BigInt::from(1))
    }

    #[test]
    fn asymmetric_rows_reduce_to_symmetric() {
        assert_eq!(d18_asymmetric().substitute(Variable::Kappa, &one()), d18_symmetric());
        assert_eq!(d50_asymmetric().substitute(Variable::Kappa, &one()), d50_symmetric());
        assert_eq!(five_asymmetric().substitute(Variable::Kappa, &one()), five_symmetric());
    }

    #[test]
    fn closed_form_products() {
        let p = |c: &[i64]| RationalPolynomial::from_p_coefficients(c);
        assert_eq!(d18_symmetric(), p(&[1, 0, -2, -1]).pow(2));
        assert_eq!(d50_symmetric(), p(&[1, 0, 0, -2, -2, -1]).pow(2));
        // (1-p)^6 (1+6p), squared
        let q = &p(&[1, -1]).pow(6) * &p(&[1, 6]);
        assert_eq!(seven_symmetric(), q.pow(2));
        // (1-p)^8 [(1-p)^2 + 10 p(1-p) + 5 p^2]
        let five = &p(&[1, -1]).pow(8) * &(&(&p(&[1, -1]).pow(2) + &p(&[0, 10, -10])) + &p(&[0, 0, 5]));
        assert_eq!(five_symmetric(), five);
    }

    #[test]
    fn seven_asymmetric_rows() {
        assert_eq!(seven_asymmetric().substitute(Variable::Kappa, &one()), seven_symmetric());
        // unlike the other codes, the rows are not the kappa-extension
        // [(1-kp)^6 (1+6kp)] [(1-p)^6 (1+6p)] of the symmetric product
        let p = |c: &[i64]| RationalPolynomial::from_p_coefficients(c);
        let k = RationalPolynomial::from_terms([(one(), Exponents::new(0, 1, 0))]);
        let kp = &k * &p(&[0, 1]);
        let one_p = RationalPolynomial::one();
        let x = &(&one_p - &kp).pow(6) * &(&one_p + &(&RationalPolynomial::from_int(6) * &kp));
        let z = &p(&[1, -1]).pow(6) * &p(&[1, 6]);
        assert_ne!(seven_asymmetric(), &x * &z);
    }
}
