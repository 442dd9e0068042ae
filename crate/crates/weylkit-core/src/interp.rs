//! Exact univariate polynomial interpolation through rational nodes, used
//! to fit point-count polynomials.

use crate::error::AlgError;
use crate::rational::Rational;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::Zero;

/// Coefficients (ascending degree, trailing zeros trimmed) of the unique
/// polynomial of degree `< points.len()` through the given nodes, by Newton
/// divided differences. Duplicate nodes are rejected.
pub fn newton_interpolate(points: &[(Rational, Rational)]) -> Result<Vec<Rational>, AlgError> {
    let n = points.len();
    for i in 0..n {
        for j in (i + 1)..n {
            if points[i].0 == points[j].0 {
                return Err(AlgError::Invalid("duplicate interpolation node".into()));
            }
        }
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    // Divided-difference table, kept as the leading column.
    let mut dd: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut newton: Vec<Rational> = vec![dd[0].clone()];
    for level in 1..n {
        for i in (level..n).rev() {
            let dx = &points[i].0 - &points[i - level].0;
            dd[i] = (&dd[i] - &dd[i - 1]) / dx;
        }
        newton.push(dd[level].clone());
    }
    // Expand sum_j newton[j] * prod_{i<j} (x - x_i) into monomials.
    let mut coeffs: Vec<Rational> = vec![Rational::zero(); n];
    let mut basis: Vec<Rational> = vec![Rational::zero(); n];
    basis[0] = Rational::from_integer(1.into());
    let mut basis_deg = 0usize;
    for (j, c) in newton.iter().enumerate() {
        if j > 0 {
            // basis *= (x - x_{j-1})
            let root = &points[j - 1].0;
            let mut nb = vec![Rational::zero(); basis_deg + 2];
            for k in 0..=basis_deg {
                nb[k + 1] = &nb[k + 1] + &basis[k];
                nb[k] = &nb[k] - &(root * &basis[k]);
            }
            basis_deg += 1;
            basis[..=basis_deg].clone_from_slice(&nb);
        }
        for k in 0..=basis_deg {
            coeffs[k] = &coeffs[k] + &(c * &basis[k]);
        }
    }
    while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    if coeffs.len() == 1 && coeffs[0].is_zero() {
        coeffs.clear();
    }
    Ok(coeffs)
}

/// Horner evaluation of ascending coefficients.
pub fn evaluate(coeffs: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for c in coeffs.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}
