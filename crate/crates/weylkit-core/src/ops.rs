//! Polynomial operator realizations of the four algebra flavors, plus a
//! relation verifier that sweeps monomial bases and reports the first
//! counterexample for every defining relation.
//!
//! * On the lattice Laurent ring (variables `q, Y1..Yr`) the letter
//!   operators are Demazure-Lusztig type:
//!   `f -> (f - s f)/(Y^a - 1) - q (f - Y^a s f)/(Y^a - 1)` for `a = alpha_i`.
//! * On the polynomial ring with `eps` the letter operators are reflections
//!   corrected by a divided difference: `f -> s f + eps (s f - f)/alpha_i`.
//! * On the plain polynomial ring the letter operators are the divided
//!   differences `f -> (s f - f)/alpha_i`.
//!
//! All operators are linear over the central scalars (`q` and `eps`
//! respectively), so sweeping pure lattice/x monomials up to a degree bound
//! checks the identities on the whole truncation.

use crate::cartan::CartanData;
use crate::error::AlgError;
use crate::hecke::{act_letter, alpha_poly, coeff_vars, HeckeElement, HeckeKind};
use crate::laurent::{LaurentPoly, VarList};
use crate::rational::Rational;
use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::One;

/// Which function space an operator acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpSpace {
    /// Laurent polynomials in `q, Y1..Yr`.
    Lattice,
    /// Polynomials in `x1..xr`.
    Polynomial,
    /// Polynomials in `x1..xr, eps`.
    PolynomialEps,
}

impl OpSpace {
    /// The variable list of the space at the given rank.
    pub fn vars(self, rank: usize) -> VarList {
        match self {
            OpSpace::Lattice => coeff_vars(HeckeKind::Affine, rank),
            OpSpace::Polynomial => coeff_vars(HeckeKind::Nil, rank),
            OpSpace::PolynomialEps => coeff_vars(HeckeKind::Degenerate, rank),
        }
    }

    fn reflection_kind(self) -> HeckeKind {
        match self {
            OpSpace::Lattice => HeckeKind::Affine,
            OpSpace::Polynomial => HeckeKind::Nil,
            OpSpace::PolynomialEps => HeckeKind::Degenerate,
        }
    }
}

/// One letter of an operator word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OpAtom {
    /// Demazure-Lusztig letter on the lattice ring.
    DemazureLusztig(usize),
    /// Reflection plus eps-scaled divided difference.
    ReflectionWithDifference(usize),
    /// Divided difference letter.
    DividedDifference(usize),
    /// Plain reflection substitution.
    Reflect(usize),
    /// Multiplication by a fixed polynomial of the space.
    Mult(LaurentPoly),
}

impl OpAtom {
    fn valid_in(&self, space: OpSpace) -> bool {
        match self {
            OpAtom::DemazureLusztig(_) => space == OpSpace::Lattice,
            OpAtom::ReflectionWithDifference(_) => space == OpSpace::PolynomialEps,
            OpAtom::DividedDifference(_) => {
                space == OpSpace::Polynomial || space == OpSpace::PolynomialEps
            }
            OpAtom::Reflect(_) | OpAtom::Mult(_) => true,
        }
    }
}

/// Composable word of operator letters acting on a fixed space.
#[derive(Debug, Clone)]
pub struct PolyOperator {
    cartan: CartanData,
    space: OpSpace,
    atoms: Vec<OpAtom>,
}

impl PolyOperator {
    /// Builds an operator word, validating atoms against the space.
    pub fn new(cartan: &CartanData, space: OpSpace, atoms: Vec<OpAtom>) -> Result<Self, AlgError> {
        let rank = cartan.rank();
        let vars = space.vars(rank);
        for atom in &atoms {
            if !atom.valid_in(space) {
                return Err(AlgError::Invalid(
                    "operator atom does not act on this space".into(),
                ));
            }
            match atom {
                OpAtom::DemazureLusztig(i)
                | OpAtom::ReflectionWithDifference(i)
                | OpAtom::DividedDifference(i)
                | OpAtom::Reflect(i) => {
                    if *i >= rank {
                        return Err(AlgError::IndexOutOfRange);
                    }
                }
                OpAtom::Mult(p) => {
                    if *p.vars() != vars {
                        return Err(AlgError::VarMismatch);
                    }
                }
            }
        }
        Ok(PolyOperator {
            cartan: cartan.clone(),
            space,
            atoms,
        })
    }

    /// The identity operator.
    pub fn identity(cartan: &CartanData, space: OpSpace) -> Self {
        PolyOperator {
            cartan: cartan.clone(),
            space,
            atoms: Vec::new(),
        }
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Result<Self, AlgError> {
        if self.space != other.space || self.cartan != other.cartan {
            return Err(AlgError::Invalid("operator spaces differ".into()));
        }
        let mut atoms = self.atoms.clone();
        atoms.extend(other.atoms.iter().cloned());
        Ok(PolyOperator {
            cartan: self.cartan.clone(),
            space: self.space,
            atoms,
        })
    }

    /// Applies the word to a polynomial: the last atom acts first.
    pub fn apply(&self, f: &LaurentPoly) -> Result<LaurentPoly, AlgError> {
        let vars = self.space.vars(self.cartan.rank());
        if *f.vars() != vars {
            return Err(AlgError::VarMismatch);
        }
        let mut acc = f.clone();
        for atom in self.atoms.iter().rev() {
            acc = apply_atom(&self.cartan, self.space, &vars, atom, &acc)?;
        }
        Ok(acc)
    }
}

/// Applies one letter.
pub fn apply_atom(
    cartan: &CartanData,
    space: OpSpace,
    vars: &VarList,
    atom: &OpAtom,
    f: &LaurentPoly,
) -> Result<LaurentPoly, AlgError> {
    match atom {
        OpAtom::Reflect(i) => act_letter(space.reflection_kind(), cartan, vars, *i, f),
        OpAtom::Mult(p) => p.mul(f),
        OpAtom::DemazureLusztig(i) => demazure_lusztig(cartan, vars, *i, f),
        OpAtom::DividedDifference(i) => divided_difference(space, cartan, vars, *i, f),
        OpAtom::ReflectionWithDifference(i) => {
            let sf = act_letter(HeckeKind::Degenerate, cartan, vars, *i, f)?;
            let diff = divided_difference(space, cartan, vars, *i, f)?;
            let eps = LaurentPoly::var(vars, "eps")?;
            sf.add(&eps.mul(&diff)?)
        }
    }
}

/// The lattice generator `Y_lambda` acts by multiplication by `Y^{-lambda}`:
/// this involution on the coefficient ring fixes `q` and inverts every `Y`.
/// It is forced by the letter operators; with the direct action the cross
/// relation picks up a spurious `-Y^{-alpha}` factor.
pub fn lattice_dual(p: &LaurentPoly) -> Result<LaurentPoly, AlgError> {
    p.map_exponents(|e| {
        let mut e2 = e.to_vec();
        for v in e2.iter_mut().skip(1) {
            *v = -*v;
        }
        e2
    })
}

/// `Y^{alpha_i}` on the lattice ring.
fn y_alpha(cartan: &CartanData, vars: &VarList, i: usize) -> Result<LaurentPoly, AlgError> {
    let alpha = cartan.simple_root(i)?;
    let mut exps = vec![0i64; vars.len()];
    for (k, &c) in alpha.iter().enumerate() {
        exps[1 + k] = c;
    }
    LaurentPoly::monomial(vars, exps, Rational::one())
}

/// Demazure-Lusztig letter:
/// `f -> (f - s f)/(Y^a - 1) - q (f - Y^a s f)/(Y^a - 1)`.
fn demazure_lusztig(
    cartan: &CartanData,
    vars: &VarList,
    i: usize,
    f: &LaurentPoly,
) -> Result<LaurentPoly, AlgError> {
    let sf = act_letter(HeckeKind::Affine, cartan, vars, i, f)?;
    let ya = y_alpha(cartan, vars, i)?;
    let den = ya.sub(&LaurentPoly::one(vars))?;
    let d1 = f.sub(&sf)?.exact_div(&den)?;
    let d2 = f.sub(&ya.mul(&sf)?)?.exact_div(&den)?;
    let q = LaurentPoly::var(vars, "q")?;
    d1.sub(&q.mul(&d2)?)
}

/// Divided difference letter: `f -> (s f - f)/alpha_i`.
fn divided_difference(
    space: OpSpace,
    cartan: &CartanData,
    vars: &VarList,
    i: usize,
    f: &LaurentPoly,
) -> Result<LaurentPoly, AlgError> {
    let sf = act_letter(space.reflection_kind(), cartan, vars, i, f)?;
    sf.sub(f)?.exact_div(&alpha_poly(cartan, vars, i)?)
}

/// Outcome of checking one defining relation on a monomial sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    /// Stable relation name, e.g. `quadratic(s1)` or `module(T1,Y+2)`.
    pub relation: String,
    /// Cartan label the check ran over.
    pub cartan: String,
    /// Monomial sweep degree bound.
    pub degree_bound: usize,
    /// Whether every sweep monomial satisfied the relation exactly.
    pub pass: bool,
    /// First failing monomial and the nonzero discrepancy, if any.
    pub counterexample: Option<String>,
}

/// True when every report passed.
pub fn all_pass(reports: &[RelationReport]) -> bool {
    reports.iter().all(|r| r.pass)
}

type CheckFn<'a> = Box<dyn Fn(&LaurentPoly) -> Result<LaurentPoly, AlgError> + 'a>;

/// Lattice monomials `Y^lambda` with `sum |lambda_i| <= bound` (`q`-degree
/// zero; the operators are linear over `q`).
fn lattice_monomials(rank: usize, vars: &VarList, bound: usize) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(
        pos: usize,
        budget: i64,
        rank: usize,
        cur: &mut Vec<i64>,
        vars: &VarList,
        out: &mut Vec<LaurentPoly>,
    ) {
        if pos == rank {
            let mut exps = vec![0i64; vars.len()];
            exps[1..].copy_from_slice(cur);
            out.push(LaurentPoly::monomial(vars, exps, Rational::one()).expect("length checked"));
            return;
        }
        for v in -budget..=budget {
            cur[pos] = v;
            rec(pos + 1, budget - v.abs(), rank, cur, vars, out);
        }
        cur[pos] = 0;
    }
    rec(0, bound as i64, rank, &mut cur, vars, &mut out);
    out
}

/// x-monomials of total degree at most `bound` (eps-degree zero; the
/// operators are linear over `eps`).
fn x_monomials(rank: usize, vars: &VarList, bound: usize) -> Vec<LaurentPoly> {
    let mut out = Vec::new();
    let mut cur = vec![0i64; rank];
    fn rec(
        pos: usize,
        budget: i64,
        rank: usize,
        cur: &mut Vec<i64>,
        vars: &VarList,
        out: &mut Vec<LaurentPoly>,
    ) {
        if pos == rank {
            let mut exps = vec![0i64; vars.len()];
            exps[..rank].copy_from_slice(cur);
            out.push(LaurentPoly::monomial(vars, exps, Rational::one()).expect("length checked"));
            return;
        }
        for v in 0..=budget {
            cur[pos] = v;
            rec(pos + 1, budget - v, rank, cur, vars, out);
        }
        cur[pos] = 0;
    }
    rec(0, bound as i64, rank, &mut cur, vars, &mut out);
    out
}

/// Evaluates an algebra element as an operator: each basis word becomes the
/// composition of letter operators along a reduced word, applied after
/// multiplying the argument by the coefficient.
pub fn eval_element(elem: &HeckeElement, f: &LaurentPoly) -> Result<LaurentPoly, AlgError> {
    let cartan = elem.cartan().clone();
    let (space, vars) = match elem.kind() {
        HeckeKind::Finite | HeckeKind::Affine => (
            OpSpace::Lattice,
            coeff_vars(HeckeKind::Affine, cartan.rank()),
        ),
        HeckeKind::Degenerate => (
            OpSpace::PolynomialEps,
            coeff_vars(HeckeKind::Degenerate, cartan.rank()),
        ),
        HeckeKind::Nil => (OpSpace::Polynomial, coeff_vars(HeckeKind::Nil, cartan.rank())),
    };
    // Finite elements live over q only; lift coefficients into the lattice
    // ring before acting.
    let mut acc = LaurentPoly::zero(&vars);
    for (w, p) in elem.terms() {
        let coeff = match elem.kind() {
            HeckeKind::Finite => p.embed(&vars)?,
            HeckeKind::Affine => lattice_dual(p)?,
            _ => p.clone(),
        };
        let mut g = coeff.mul(f)?;
        let word = cartan.reduced_word(w)?;
        for &i in word.iter().rev() {
            let atom = match elem.kind() {
                HeckeKind::Finite | HeckeKind::Affine => OpAtom::DemazureLusztig(i),
                HeckeKind::Degenerate => OpAtom::ReflectionWithDifference(i),
                HeckeKind::Nil => OpAtom::DividedDifference(i),
            };
            g = apply_atom(&cartan, space, &vars, &atom, &g)?;
        }
        acc = acc.add(&g)?;
    }
    Ok(acc)
}

/// Verifies the defining relations of a flavor's operator realization on
/// monomial sweeps up to `degree_bound`, returning one report per relation.
pub fn verify_realization(
    kind: HeckeKind,
    cartan: &CartanData,
    degree_bound: usize,
) -> Result<Vec<RelationReport>, AlgError> {
    let rank = cartan.rank();
    let space = match kind {
        HeckeKind::Finite | HeckeKind::Affine => OpSpace::Lattice,
        HeckeKind::Degenerate => OpSpace::PolynomialEps,
        HeckeKind::Nil => OpSpace::Polynomial,
    };
    let vars = space.vars(rank);
    let monomials = match space {
        OpSpace::Lattice => lattice_monomials(rank, &vars, degree_bound),
        _ => x_monomials(rank, &vars, degree_bound),
    };
    let letter = |i: usize| -> OpAtom {
        match kind {
            HeckeKind::Finite | HeckeKind::Affine => OpAtom::DemazureLusztig(i),
            HeckeKind::Degenerate => OpAtom::ReflectionWithDifference(i),
            HeckeKind::Nil => OpAtom::DividedDifference(i),
        }
    };
    let mut checks: Vec<(String, CheckFn)> = Vec::new();

    // Quadratic relation per generator.
    for i in 0..rank {
        let name = format!("quadratic(s{})", i + 1);
        let check: CheckFn = match kind {
            HeckeKind::Finite | HeckeKind::Affine => {
                // (T + 1)(T - q) = 0.
                Box::new(move |f| {
                    let q = LaurentPoly::var(&vars_of(cartan, space), "q")?;
                    let tf = apply_atom(cartan, space, &vars_of(cartan, space), &letter(i), f)?;
                    let inner = tf.sub(&q.mul(f)?)?;
                    let touter =
                        apply_atom(cartan, space, &vars_of(cartan, space), &letter(i), &inner)?;
                    touter.add(&inner)
                })
            }
            HeckeKind::Degenerate => {
                // S^2 = 1.
                Box::new(move |f| {
                    let vars = vars_of(cartan, space);
                    let once = apply_atom(cartan, space, &vars, &letter(i), f)?;
                    let twice = apply_atom(cartan, space, &vars, &letter(i), &once)?;
                    twice.sub(f)
                })
            }
            HeckeKind::Nil => {
                // R^2 = 0.
                Box::new(move |f| {
                    let vars = vars_of(cartan, space);
                    let once = apply_atom(cartan, space, &vars, &letter(i), f)?;
                    apply_atom(cartan, space, &vars, &letter(i), &once)
                })
            }
        };
        checks.push((name, check));
    }

    // Braid relation per unordered generator pair.
    for i in 0..rank {
        for j in (i + 1)..rank {
            let m = cartan.braid_order(i, j)?;
            let name = format!("braid(s{},s{})", i + 1, j + 1);
            let check: CheckFn = Box::new(move |f| {
                let vars = vars_of(cartan, space);
                let mut left = f.clone();
                let mut right = f.clone();
                for k in 0..m {
                    // Apply alternating letters; composition applies the
                    // right end of the word first, so iterate directly.
                    let li = if k % 2 == 0 { i } else { j };
                    let rj = if k % 2 == 0 { j } else { i };
                    left = apply_atom(cartan, space, &vars, &letter(li), &left)?;
                    right = apply_atom(cartan, space, &vars, &letter(rj), &right)?;
                }
                left.sub(&right)
            });
            checks.push((name, check));
        }
    }

    // Flavor-specific cross relations with the coefficient ring.
    match kind {
        HeckeKind::Affine => {
            // Lattice commutativity.
            for i in 0..rank {
                for j in (i + 1)..rank {
                    let name = format!("lattice(w{},w{})", i + 1, j + 1);
                    let check: CheckFn = Box::new(move |f| {
                        let vars = vars_of(cartan, space);
                        let yi = fundamental_y(cartan, &vars, i, 1)?;
                        let yj = fundamental_y(cartan, &vars, j, 1)?;
                        let ab = yi.mul(&yj.mul(f)?)?;
                        let ba = yj.mul(&yi.mul(f)?)?;
                        ab.sub(&ba)
                    });
                    checks.push((name, check));
                }
            }
            // Cross relation T_i Y^lam - Y^{s_i lam} T_i = correction.
            for i in 0..rank {
                for j in 0..rank {
                    for sign in [1i64, -1] {
                        let name = format!(
                            "cross(s{},Y{}{})",
                            i + 1,
                            if sign > 0 { '+' } else { '-' },
                            j + 1
                        );
                        let check: CheckFn = Box::new(move |f| {
                            let vars = vars_of(cartan, space);
                            // Y_lam acts by Y^{-lam}; the correction
                            // multiplier (1 - q)(Y_{s lam} - Y_lam)/
                            // (1 - Y_{-alpha_i}) is dualized the same way.
                            let mut lam = vec![0i64; cartan.rank()];
                            lam[j] = sign;
                            let slam = cartan.reflect(i, &lam)?;
                            let ylam_op = fundamental_y(cartan, &vars, j, -sign)?;
                            let mut exps = vec![0i64; vars.len()];
                            for (k, &c) in slam.iter().enumerate() {
                                exps[1 + k] = -c;
                            }
                            let yslam_op = LaurentPoly::monomial(&vars, exps, Rational::one())?;
                            let lhs1 = apply_atom(
                                cartan,
                                space,
                                &vars,
                                &letter(i),
                                &ylam_op.mul(f)?,
                            )?;
                            let lhs2 = yslam_op.mul(&apply_atom(
                                cartan,
                                space,
                                &vars,
                                &letter(i),
                                f,
                            )?)?;
                            let diff = yslam_op.sub(&ylam_op)?;
                            let alpha = cartan.simple_root(i)?;
                            let mut aexps = vec![0i64; vars.len()];
                            for (k, &c) in alpha.iter().enumerate() {
                                aexps[1 + k] = c;
                            }
                            let ya = LaurentPoly::monomial(&vars, aexps, Rational::one())?;
                            let den = LaurentPoly::one(&vars).sub(&ya)?;
                            let q = LaurentPoly::var(&vars, "q")?;
                            let mult = LaurentPoly::one(&vars)
                                .sub(&q)?
                                .mul(&diff.exact_div(&den)?)?;
                            lhs1.sub(&lhs2)?.sub(&mult.mul(f)?)
                        });
                        checks.push((name, check));
                    }
                }
            }
        }
        HeckeKind::Degenerate => {
            for i in 0..rank {
                // eps-degree split: S = reflect + eps * divided difference.
                let name = format!("split(s{})", i + 1);
                let check: CheckFn = Box::new(move |f| {
                    let vars = vars_of(cartan, space);
                    let s = apply_atom(cartan, space, &vars, &letter(i), f)?;
                    let refl = apply_atom(cartan, space, &vars, &OpAtom::Reflect(i), f)?;
                    let dd =
                        apply_atom(cartan, space, &vars, &OpAtom::DividedDifference(i), f)?;
                    let eps = LaurentPoly::var(&vars, "eps")?;
                    s.sub(&refl)?.sub(&eps.mul(&dd)?)
                });
                checks.push((name, check));
                for j in 0..rank {
                    // S_i M_{x_j} - M_{s_i(x_j)} S_i + eps <alpha_i^vee, omega_j> = 0.
                    let name = format!("cross(s{},x{})", i + 1, j + 1);
                    let check: CheckFn = Box::new(move |f| {
                        let vars = vars_of(cartan, space);
                        let xj = LaurentPoly::var(&vars, &format!("x{}", j + 1))?;
                        let sxj = act_letter(HeckeKind::Degenerate, cartan, &vars, i, &xj)?;
                        let lhs1 =
                            apply_atom(cartan, space, &vars, &letter(i), &xj.mul(f)?)?;
                        let lhs2 =
                            sxj.mul(&apply_atom(cartan, space, &vars, &letter(i), f)?)?;
                        let pairing = if i == j { 1i64 } else { 0 };
                        let eps = LaurentPoly::var(&vars, "eps")?;
                        let corr = eps
                            .scale(&Rational::from_integer(pairing.into()))
                            .mul(f)?;
                        lhs1.sub(&lhs2)?.add(&corr)
                    });
                    checks.push((name, check));
                }
                // Invariant polynomials commute with the letter operators.
                let name = format!("center(s{})", i + 1);
                let check: CheckFn = Box::new(move |f| {
                    let vars = vars_of(cartan, space);
                    let inv = invariant_poly(cartan, &vars)?;
                    let a = apply_atom(cartan, space, &vars, &letter(i), &inv.mul(f)?)?;
                    let b = inv.mul(&apply_atom(cartan, space, &vars, &letter(i), f)?)?;
                    a.sub(&b)
                });
                checks.push((name, check));
            }
        }
        HeckeKind::Nil => {
            for i in 0..rank {
                for j in 0..rank {
                    // R_i M_{x_j} - M_{s_i(x_j)} R_i + <alpha_i^vee, omega_j> = 0.
                    let name = format!("cross(s{},x{})", i + 1, j + 1);
                    let check: CheckFn = Box::new(move |f| {
                        let vars = vars_of(cartan, space);
                        let xj = LaurentPoly::var(&vars, &format!("x{}", j + 1))?;
                        let sxj = act_letter(HeckeKind::Nil, cartan, &vars, i, &xj)?;
                        let lhs1 =
                            apply_atom(cartan, space, &vars, &letter(i), &xj.mul(f)?)?;
                        let lhs2 =
                            sxj.mul(&apply_atom(cartan, space, &vars, &letter(i), f)?)?;
                        let pairing = if i == j { 1i64 } else { 0 };
                        let corr = f.scale(&Rational::from_integer(pairing.into()));
                        lhs1.sub(&lhs2)?.add(&corr)
                    });
                    checks.push((name, check));
                }
                let name = format!("center(s{})", i + 1);
                let check: CheckFn = Box::new(move |f| {
                    let vars = vars_of(cartan, space);
                    let inv = invariant_poly(cartan, &vars)?;
                    let a = apply_atom(cartan, space, &vars, &letter(i), &inv.mul(f)?)?;
                    let b = inv.mul(&apply_atom(cartan, space, &vars, &letter(i), f)?)?;
                    a.sub(&b)
                });
                checks.push((name, check));
            }
        }
        HeckeKind::Finite => {}
    }

    let mut reports = Vec::new();
    for (name, check) in &checks {
        let mut counterexample = None;
        for f in &monomials {
            let diff = check(f)?;
            if !diff.is_zero() {
                counterexample = Some(format!(
                    "input {}: residual {}",
                    f.render(),
                    diff.render()
                ));
                break;
            }
        }
        reports.push(RelationReport {
            relation: name.clone(),
            cartan: cartan.label().to_string(),
            degree_bound,
            pass: counterexample.is_none(),
            counterexample,
        });
    }

    // Module compatibility: the operator evaluation of an algebra product
    // equals the composition of the factors' evaluations.
    let gens = generator_elements(kind, cartan)?;
    for (na, a) in &gens {
        for (nb, b) in &gens {
            let prod = a.mul(b)?;
            let mut counterexample = None;
            for f in &monomials {
                let via_prod = eval_element(&prod, f)?;
                let via_comp = eval_element(a, &eval_element(b, f)?)?;
                let diff = via_prod.sub(&via_comp)?;
                if !diff.is_zero() {
                    counterexample = Some(format!(
                        "input {}: residual {}",
                        f.render(),
                        diff.render()
                    ));
                    break;
                }
            }
            reports.push(RelationReport {
                relation: format!("module({na},{nb})"),
                cartan: cartan.label().to_string(),
                degree_bound,
                pass: counterexample.is_none(),
                counterexample,
            });
        }
    }

    Ok(reports)
}

fn vars_of(cartan: &CartanData, space: OpSpace) -> VarList {
    space.vars(cartan.rank())
}

/// `Y^{sign * omega_j}` on the lattice ring.
fn fundamental_y(
    cartan: &CartanData,
    vars: &VarList,
    j: usize,
    sign: i64,
) -> Result<LaurentPoly, AlgError> {
    if j >= cartan.rank() {
        return Err(AlgError::IndexOutOfRange);
    }
    let mut exps = vec![0i64; vars.len()];
    exps[1 + j] = sign;
    LaurentPoly::monomial(vars, exps, Rational::one())
}

/// A nonconstant Weyl-invariant polynomial: the orbit sum of `x1^2`.
fn invariant_poly(cartan: &CartanData, vars: &VarList) -> Result<LaurentPoly, AlgError> {
    let x1sq = LaurentPoly::var(vars, "x1")?.pow(2)?;
    let mut acc = LaurentPoly::zero(vars);
    for w in cartan.all_elements()? {
        let word = cartan.reduced_word(&w)?;
        let mut g = x1sq.clone();
        for &i in &word {
            let kind = if vars.iter().any(|v| v == "eps") {
                HeckeKind::Degenerate
            } else {
                HeckeKind::Nil
            };
            g = act_letter(kind, cartan, vars, i, &g)?;
        }
        acc = acc.add(&g)?;
    }
    Ok(acc)
}

/// Generator elements used for the module-compatibility battery.
fn generator_elements(
    kind: HeckeKind,
    cartan: &CartanData,
) -> Result<Vec<(String, HeckeElement)>, AlgError> {
    let rank = cartan.rank();
    let mut out = Vec::new();
    let letter = kind.letter();
    for i in 0..rank {
        out.push((
            format!("{letter}{}", i + 1),
            HeckeElement::basis(kind, cartan, &[i])?,
        ));
    }
    match kind {
        HeckeKind::Affine => {
            for j in 0..rank {
                for sign in [1i64, -1] {
                    let mut exps = vec![0i64; rank];
                    exps[j] = sign;
                    out.push((
                        format!("Y{}{}", if sign > 0 { '+' } else { '-' }, j + 1),
                        HeckeElement::y_monomial(cartan, &exps)?,
                    ));
                }
            }
        }
        HeckeKind::Degenerate | HeckeKind::Nil => {
            let vars = coeff_vars(kind, rank);
            for j in 0..rank {
                let xj = LaurentPoly::var(&vars, &format!("x{}", j + 1))?;
                out.push((
                    format!("x{}", j + 1),
                    HeckeElement::from_poly(kind, cartan, &xj)?,
                ));
            }
        }
        HeckeKind::Finite => {}
    }
    Ok(out)
}
