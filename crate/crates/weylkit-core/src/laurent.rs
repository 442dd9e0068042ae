//! Multivariate Laurent polynomials with exact rational coefficients.
//!
//! A polynomial carries an ordered variable list; operations between
//! polynomials require identical variable lists. Terms are kept in a
//! `BTreeMap` keyed by exponent vector, so representation and iteration
//! order are deterministic. Zero coefficients are never stored.

use crate::error::AlgError;
use crate::rational::{rational_pow, render_rational, Rational};
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed, Zero};

/// Shared ordered variable list.
pub type VarList = Arc<Vec<String>>;

/// Builds a variable list from string literals.
pub fn varlist(names: &[&str]) -> VarList {
    Arc::new(names.iter().map(|s| s.to_string()).collect())
}

/// Laurent polynomial: finitely many terms `coeff * prod(var_i ^ exp_i)`
/// with integer (possibly negative) exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    vars: VarList,
    terms: BTreeMap<Vec<i64>, Rational>,
}

/// Graded-lex comparison on exponent vectors: higher total degree first,
/// ties broken lexicographically.
pub fn grlex_cmp(a: &[i64], b: &[i64]) -> core::cmp::Ordering {
    let da: i64 = a.iter().sum();
    let db: i64 = b.iter().sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Ordering used for canonical rendering: total support degree
/// (sum of absolute exponents) descending, then lex descending.
fn render_cmp(a: &[i64], b: &[i64]) -> core::cmp::Ordering {
    let da: i64 = a.iter().map(|e| e.abs()).sum();
    let db: i64 = b.iter().map(|e| e.abs()).sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero(vars: &VarList) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial one.
    pub fn one(vars: &VarList) -> Self {
        Self::constant(vars, Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(vars: &VarList, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars.len()], c);
        }
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// The polynomial `name^1`; the name must be in the variable list.
    pub fn var(vars: &VarList, name: &str) -> Result<Self, AlgError> {
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or(AlgError::IndexOutOfRange)?;
        Self::monomial_idx(vars, idx, 1)
    }

    /// The monomial `vars[idx]^exp`.
    pub fn monomial_idx(vars: &VarList, idx: usize, exp: i64) -> Result<Self, AlgError> {
        if idx >= vars.len() {
            return Err(AlgError::IndexOutOfRange);
        }
        let mut exps = vec![0; vars.len()];
        exps[idx] = exp;
        Self::monomial(vars, exps, Rational::one())
    }

    /// A single term `c * vars^exps`.
    pub fn monomial(vars: &VarList, exps: Vec<i64>, c: Rational) -> Result<Self, AlgError> {
        if exps.len() != vars.len() {
            return Err(AlgError::VarMismatch);
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Ok(LaurentPoly {
            vars: vars.clone(),
            terms,
        })
    }

    /// Builds a polynomial from a list of terms, merging duplicates.
    pub fn from_terms(
        vars: &VarList,
        terms: impl IntoIterator<Item = (Vec<i64>, Rational)>,
    ) -> Result<Self, AlgError> {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(AlgError::VarMismatch);
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// The variable list.
    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// True when the polynomial is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when the polynomial is the constant one.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    /// Iterates over `(exponents, coefficient)` in map order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    /// Terms sorted in canonical rendering order.
    pub fn sorted_terms(&self) -> Vec<(Vec<i64>, Rational)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        v.sort_by(|a, b| render_cmp(&a.0, &b.0));
        v
    }

    /// Coefficient of an exponent vector (zero when absent).
    pub fn coeff(&self, exps: &[i64]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&vec![0; self.vars.len()])
    }

    /// Maximum total degree (sum of exponents), `None` for zero.
    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Minimum total degree (sum of exponents), `None` for zero.
    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// Largest exponent of one variable, `None` for zero polynomial.
    pub fn degree_in(&self, idx: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[idx]).max()
    }

    /// Smallest exponent of one variable, `None` for zero polynomial.
    pub fn min_degree_in(&self, idx: usize) -> Option<i64> {
        self.terms.keys().map(|e| e[idx]).min()
    }

    fn add_term(&mut self, exps: Vec<i64>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<(), AlgError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(AlgError::VarMismatch)
        }
    }

    /// Sum of two polynomials over the same variable list.
    pub fn add(&self, other: &Self) -> Result<Self, AlgError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    /// Difference of two polynomials over the same variable list.
    pub fn sub(&self, other: &Self) -> Result<Self, AlgError> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.clone() * r))
                .collect(),
        }
    }

    /// Product of two polynomials over the same variable list.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgError> {
        self.check_vars(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    /// Nonnegative power by repeated multiplication.
    pub fn pow(&self, k: u32) -> Result<Self, AlgError> {
        let mut acc = Self::one(&self.vars);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Shifts every exponent vector by `delta` (multiplication by a monomial).
    pub fn shift_exps(&self, delta: &[i64]) -> Result<Self, AlgError> {
        if delta.len() != self.vars.len() {
            return Err(AlgError::VarMismatch);
        }
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    (
                        e.iter().zip(delta).map(|(x, d)| x + d).collect(),
                        c.clone(),
                    )
                })
                .collect(),
        })
    }

    /// Leading term under graded-lex order (requires nonzero).
    fn leading_grlex(&self) -> (&Vec<i64>, &Rational) {
        self.terms
            .iter()
            .max_by(|a, b| grlex_cmp(a.0, b.0))
            .expect("leading term of nonzero polynomial")
    }

    /// Exact division: returns `q` with `self = q * den`, or
    /// `NotDivisible` when no such Laurent polynomial exists.
    pub fn exact_div(&self, den: &Self) -> Result<Self, AlgError> {
        self.check_vars(den)?;
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let n = self.vars.len();
        let min_of = |p: &Self| -> Vec<i64> {
            let mut m = vec![i64::MAX; n];
            for e in p.terms.keys() {
                for i in 0..n {
                    m[i] = m[i].min(e[i]);
                }
            }
            m
        };
        let min_a = min_of(self);
        let min_b = min_of(den);
        let neg = |v: &[i64]| -> Vec<i64> { v.iter().map(|x| -x).collect() };
        let a = self.shift_exps(&neg(&min_a))?;
        let b = den.shift_exps(&neg(&min_b))?;
        let (lead_e, lead_c) = {
            let (e, c) = b.leading_grlex();
            (e.clone(), c.clone())
        };
        let mut rem = a;
        let mut quo = Self::zero(&self.vars);
        while !rem.is_zero() {
            let (re, rc) = {
                let (e, c) = rem.leading_grlex();
                (e.clone(), c.clone())
            };
            let diff: Vec<i64> = re.iter().zip(&lead_e).map(|(x, y)| x - y).collect();
            if diff.iter().any(|&d| d < 0) {
                return Err(AlgError::NotDivisible);
            }
            let qc = rc / lead_c.clone();
            let t = Self::monomial(&self.vars, diff, qc)?;
            rem = rem.sub(&t.mul(&b)?)?;
            quo = quo.add(&t)?;
        }
        let shift: Vec<i64> = min_a.iter().zip(&min_b).map(|(x, y)| x - y).collect();
        quo.shift_exps(&shift)
    }

    /// Applies a map on exponent vectors (for monomial substitutions such
    /// as a Weyl-group action on `Y` exponents), merging collisions.
    pub fn map_exponents(
        &self,
        f: impl Fn(&[i64]) -> Vec<i64>,
    ) -> Result<Self, AlgError> {
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let e2 = f(e);
            if e2.len() != self.vars.len() {
                return Err(AlgError::VarMismatch);
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Substitutes `vars[j] -> images[j]` for every variable. Images share
    /// one target variable list. Negative exponents require the image to be
    /// an invertible single-term monomial.
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<Self, AlgError> {
        if images.len() != self.vars.len() {
            return Err(AlgError::VarMismatch);
        }
        let target = match images.first() {
            Some(p) => p.vars.clone(),
            None => self.vars.clone(),
        };
        for img in images {
            if img.vars != target {
                return Err(AlgError::VarMismatch);
            }
        }
        let mut out = Self::zero(&target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(&target, c.clone());
            for (j, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                let factor = if exp > 0 {
                    images[j].pow(exp as u32)?
                } else {
                    images[j].invert_monomial()?.pow((-exp) as u32)?
                };
                term = term.mul(&factor)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Inverse of a single-term monomial; errors otherwise.
    pub fn invert_monomial(&self) -> Result<Self, AlgError> {
        if self.terms.len() != 1 {
            return Err(AlgError::NotDivisible);
        }
        let (e, c) = self.terms.iter().next().expect("single term");
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::from([(e.iter().map(|x| -x).collect(), c.recip())]),
        })
    }

    /// Specializes one variable to an exact rational value. The variable
    /// stays in the list with exponent zero. Errors when a negative power
    /// of zero would be required.
    pub fn specialize(&self, name: &str, value: &Rational) -> Result<Self, AlgError> {
        let idx = self
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or(AlgError::IndexOutOfRange)?;
        let mut out = Self::zero(&self.vars);
        for (e, c) in &self.terms {
            let factor = rational_pow(value, e[idx])?;
            let mut e2 = e.clone();
            e2[idx] = 0;
            out.add_term(e2, c.clone() * factor);
        }
        Ok(out)
    }

    /// Evaluates at a full point; errors on a negative power of zero.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, AlgError> {
        if point.len() != self.vars.len() {
            return Err(AlgError::VarMismatch);
        }
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                term *= rational_pow(x, k)?;
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Drops terms of total degree (sum of exponents) above `cap`.
    pub fn truncate_total_degree(&self, cap: i64) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<i64>() <= cap)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of total degree `k`.
    pub fn homogeneous_component(&self, k: i64) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<i64>() == k)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Re-expresses the polynomial over a superset variable list.
    pub fn embed(&self, target: &VarList) -> Result<Self, AlgError> {
        let mut positions = Vec::with_capacity(self.vars.len());
        for name in self.vars.iter() {
            let idx = target
                .iter()
                .position(|v| v == name)
                .ok_or(AlgError::VarMismatch)?;
            positions.push(idx);
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut e2 = vec![0; target.len()];
            for (i, &p) in positions.iter().enumerate() {
                e2[p] = e[i];
            }
            out.add_term(e2, c.clone());
        }
        Ok(out)
    }

    /// Canonical text form, e.g. `3*q*Y1^-2 - 1/2`; zero renders as `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, (e, c)) in self.sorted_terms().iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() {
                factors.push(render_rational(&mag));
            }
            for (j, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if exp == 1 {
                    factors.push(self.vars[j].clone());
                } else {
                    let mut f = self.vars[j].clone();
                    f.push('^');
                    f.push_str(&exp.to_string());
                    factors.push(f);
                }
            }
            if factors.is_empty() {
                factors.push(render_rational(&mag));
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}
