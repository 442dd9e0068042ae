//! Power series in a formal parameter `eps`, truncated at a fixed order,
//! with Laurent-polynomial coefficients. Used by the degeneration bridge
//! that replaces the Hecke parameter by an exponential series.

use crate::error::AlgError;
use crate::laurent::{LaurentPoly, VarList};
use crate::rational::{factorial, rational_pow, Rational};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// Series `sum_k coeffs[k] * eps^k` with `k <= order`; higher-order terms
/// are discarded by every operation. `eps` is not a coefficient variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<LaurentPoly>,
}

impl TruncatedSeries {
    /// The zero series at the given truncation order.
    pub fn zero(vars: &VarList, order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![LaurentPoly::zero(vars); order + 1],
        }
    }

    /// The constant series one.
    pub fn one(vars: &VarList, order: usize) -> Self {
        let mut s = Self::zero(vars, order);
        s.coeffs[0] = LaurentPoly::one(vars);
        s
    }

    /// A polynomial placed in eps-degree zero.
    pub fn from_poly(p: &LaurentPoly, order: usize) -> Self {
        let mut s = Self::zero(p.vars(), order);
        s.coeffs[0] = p.clone();
        s
    }

    /// A series from explicit eps-coefficients (index = eps-degree).
    pub fn from_coeffs(coeffs: Vec<LaurentPoly>) -> Result<Self, AlgError> {
        if coeffs.is_empty() {
            return Err(AlgError::Invalid("series needs at least order 0".into()));
        }
        let vars = coeffs[0].vars().clone();
        if coeffs.iter().any(|c| *c.vars() != vars) {
            return Err(AlgError::VarMismatch);
        }
        Ok(TruncatedSeries {
            order: coeffs.len() - 1,
            coeffs,
        })
    }

    /// Truncation order.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Coefficient variable list.
    pub fn vars(&self) -> &VarList {
        self.coeffs[0].vars()
    }

    /// Coefficient of `eps^k` (zero beyond the truncation order).
    pub fn coeff(&self, k: usize) -> LaurentPoly {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.vars()))
    }

    /// True when every kept coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check_compat(&self, other: &Self) -> Result<(), AlgError> {
        if self.order != other.order {
            return Err(AlgError::Invalid("series truncation orders differ".into()));
        }
        if self.vars() != other.vars() {
            return Err(AlgError::VarMismatch);
        }
        Ok(())
    }

    /// Sum of series with equal order and variables.
    pub fn add(&self, other: &Self) -> Result<Self, AlgError> {
        self.check_compat(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Difference of series with equal order and variables.
    pub fn sub(&self, other: &Self) -> Result<Self, AlgError> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    /// Product, truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgError> {
        self.check_compat(other)?;
        let mut out = Self::zero(self.vars(), self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > self.order {
                    break;
                }
                out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b)?)?;
            }
        }
        Ok(out)
    }

    /// Scalar multiple.
    pub fn scale(&self, r: &Rational) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    /// Multiplies every coefficient by a polynomial.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Result<Self, AlgError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.mul(p))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Retruncates to a smaller or equal order.
    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order);
        TruncatedSeries {
            order,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// `exp(c * eps)` truncated at `order`, with coefficients over `vars`.
    pub fn exp_scalar(vars: &VarList, c: &Rational, order: usize) -> Self {
        let mut s = Self::zero(vars, order);
        for k in 0..=order {
            let num = rational_pow(c, k as i64).expect("nonnegative power");
            let coeff = num / Rational::from_integer(factorial(k));
            s.coeffs[k] = LaurentPoly::constant(vars, coeff);
        }
        s
    }

    /// Lowest-degree homogeneous part under the combined grading
    /// `deg eps = deg var = 1`. Returns the combined degree and the part as
    /// a polynomial over `vars + [eps]`. Errors on the zero series.
    pub fn lowest_degree_part(&self) -> Result<(i64, LaurentPoly), AlgError> {
        if self.is_zero() {
            return Err(AlgError::Invalid("zero series has no lowest part".into()));
        }
        let mut target = self.vars().as_ref().clone();
        target.push(String::from("eps"));
        let target: VarList = alloc::sync::Arc::new(target);
        let mut min: Option<i64> = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if let Some(d) = c.min_total_degree() {
                let total = d + k as i64;
                min = Some(match min {
                    Some(m) => m.min(total),
                    None => total,
                });
            }
        }
        let min = min.expect("nonzero series");
        let mut part = LaurentPoly::zero(&target);
        for (k, c) in self.coeffs.iter().enumerate() {
            let comp = c.homogeneous_component(min - k as i64);
            if comp.is_zero() {
                continue;
            }
            let embedded = comp.embed(&target)?;
            let mut delta = vec![0i64; target.len()];
            delta[target.len() - 1] = k as i64;
            part = part.add(&embedded.shift_exps(&delta)?)?;
        }
        Ok((min, part))
    }

    /// Embeds the series as a polynomial over `vars + [eps]`, keeping only
    /// terms of combined total degree at most `cap`.
    pub fn to_poly_with_eps(&self, cap: i64) -> Result<LaurentPoly, AlgError> {
        let mut target = self.vars().as_ref().clone();
        target.push(String::from("eps"));
        let target: VarList = alloc::sync::Arc::new(target);
        let mut out = LaurentPoly::zero(&target);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let embedded = c.embed(&target)?;
            let mut delta = vec![0i64; target.len()];
            delta[target.len() - 1] = k as i64;
            out = out.add(&embedded.shift_exps(&delta)?)?;
        }
        Ok(out.truncate_total_degree(cap))
    }
}

/// `exp(c * eps)` with empty coefficient variable list.
pub fn series_exp(c: &Rational, order: usize) -> TruncatedSeries {
    TruncatedSeries::exp_scalar(&crate::laurent::varlist(&[]), c, order)
}

/// `exp(p)` for a polynomial with every term of total degree at least one,
/// truncated at total degree `cap`. Errors when the minimum degree of `p`
/// is below one (the exponential sum would not terminate).
pub fn exp_poly_capped(p: &LaurentPoly, cap: i64) -> Result<LaurentPoly, AlgError> {
    if let Some(d) = p.min_total_degree() {
        if d < 1 {
            return Err(AlgError::Invalid(
                "exp of a polynomial needs all terms of degree >= 1".into(),
            ));
        }
    }
    let mut out = LaurentPoly::one(p.vars());
    let mut power = LaurentPoly::one(p.vars());
    let mut k = 0i64;
    loop {
        k += 1;
        if k > cap {
            break;
        }
        power = power.mul(p)?.truncate_total_degree(cap);
        if power.is_zero() {
            break;
        }
        let inv_fact = Rational::one() / Rational::from_integer(factorial(k as usize));
        out = out.add(&power.scale(&inv_fact))?;
    }
    Ok(out.truncate_total_degree(cap))
}

/// Inverse of a unit polynomial (constant term nonzero) modulo total degree
/// `cap`: the Neumann sum of `(1 - u/c)` powers scaled by `1/c`.
pub fn invert_unit_capped(u: &LaurentPoly, cap: i64) -> Result<LaurentPoly, AlgError> {
    let c = u.constant_term();
    if c.is_zero() {
        return Err(AlgError::Invalid(
            "series inverse needs a nonzero constant term".into(),
        ));
    }
    if let Some(d) = u.min_total_degree() {
        if d < 0 {
            return Err(AlgError::Invalid(
                "series inverse needs nonnegative exponents".into(),
            ));
        }
    }
    let scaled = u.scale(&c.recip());
    let t = LaurentPoly::one(u.vars()).sub(&scaled)?;
    let mut acc = LaurentPoly::one(u.vars());
    let mut power = LaurentPoly::one(u.vars());
    for _ in 0..cap.max(0) {
        power = power.mul(&t)?.truncate_total_degree(cap);
        if power.is_zero() {
            break;
        }
        acc = acc.add(&power)?;
    }
    Ok(acc.scale(&c.recip()).truncate_total_degree(cap))
}
