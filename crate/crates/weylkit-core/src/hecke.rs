//! Four flavors of Hecke-type algebras over one Weyl group, all with exact
//! polynomial coefficients and a shared canonical basis-with-coefficients
//! representation:
//!
//! * finite: basis `T[w]`, coefficients in `Z[q, q^-1]`; `T_s T_w` follows
//!   the length rule with quadratic correction `(q-1) T_w + q T_{sw}`.
//! * affine: basis `T[w] * (Laurent monomials Y(v))`, coefficients in
//!   `q, Y1..Yr`; products are normalized by pushing coefficients through
//!   `T` letters with the lattice cross relation.
//! * degenerate: basis `s[w]` with polynomial coefficients in `x1..xr, eps`;
//!   group letters multiply like the Weyl group.
//! * nil: basis `r[w]` with coefficients in `x1..xr`; `r_u r_v` is
//!   `r_{uv}` when lengths add and zero otherwise.
//!
//! Elements store coefficients on the right of the basis letter; every
//! product is straightened back to that form, which makes equality testing
//! canonical.

use crate::cartan::{CartanData, WeylElement};
use crate::error::AlgError;
use crate::laurent::{varlist, LaurentPoly, VarList};
use crate::rational::{render_rational, Rational};
use crate::text::{parse_expr, ExprSemantics};
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Signed};

/// Which of the four algebra flavors an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeckeKind {
    Finite,
    Affine,
    Degenerate,
    Nil,
}

impl HeckeKind {
    /// Letter used for basis words in the text form.
    pub fn letter(self) -> char {
        match self {
            HeckeKind::Finite | HeckeKind::Affine => 'T',
            HeckeKind::Degenerate => 's',
            HeckeKind::Nil => 'r',
        }
    }

    /// Parses a CLI-style kind name.
    pub fn parse_label(s: &str) -> Result<Self, AlgError> {
        match s.trim().to_ascii_lowercase().as_str() {
            "finite" => Ok(HeckeKind::Finite),
            "affine" => Ok(HeckeKind::Affine),
            "degenerate" => Ok(HeckeKind::Degenerate),
            "nil" => Ok(HeckeKind::Nil),
            other => Err(AlgError::Parse(format!(
                "unknown algebra kind `{other}` (finite, affine, degenerate, nil)"
            ))),
        }
    }

    /// Human-readable name.
    pub fn name(self) -> &'static str {
        match self {
            HeckeKind::Finite => "finite",
            HeckeKind::Affine => "affine",
            HeckeKind::Degenerate => "degenerate",
            HeckeKind::Nil => "nil",
        }
    }
}

/// Coefficient variable list for a flavor at the given rank.
pub fn coeff_vars(kind: HeckeKind, rank: usize) -> VarList {
    let mut names: Vec<&str> = Vec::new();
    let storage: Vec<String>;
    match kind {
        HeckeKind::Finite => names.push("q"),
        HeckeKind::Affine => {
            storage = (1..=rank).map(|i| format!("Y{i}")).collect();
            names.push("q");
            names.extend(storage.iter().map(|s| s.as_str()));
            return varlist(&names);
        }
        HeckeKind::Degenerate => {
            storage = (1..=rank).map(|i| format!("x{i}")).collect();
            names.extend(storage.iter().map(|s| s.as_str()));
            names.push("eps");
            return varlist(&names);
        }
        HeckeKind::Nil => {
            storage = (1..=rank).map(|i| format!("x{i}")).collect();
            names.extend(storage.iter().map(|s| s.as_str()));
            return varlist(&names);
        }
    }
    varlist(&names)
}

/// Algebra element: a finite sum `basis_word * coefficient` in canonical
/// form (coefficients on the right, one term per Weyl-group element).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeElement {
    kind: HeckeKind,
    cartan: CartanData,
    vars: VarList,
    terms: BTreeMap<WeylElement, LaurentPoly>,
}

impl HeckeElement {
    /// The zero element.
    pub fn zero(kind: HeckeKind, cartan: &CartanData) -> Self {
        HeckeElement {
            kind,
            cartan: cartan.clone(),
            vars: coeff_vars(kind, cartan.rank()),
            terms: BTreeMap::new(),
        }
    }

    /// The unit element (identity basis word, coefficient one).
    pub fn unit(kind: HeckeKind, cartan: &CartanData) -> Self {
        let mut e = Self::zero(kind, cartan);
        let one = LaurentPoly::one(&e.vars);
        e.terms.insert(cartan.identity(), one);
        e
    }

    /// Basis element indexed by the Weyl-group element the word multiplies
    /// out to (for a reduced word, the usual `T_w`). Letters are 0-based.
    pub fn basis(kind: HeckeKind, cartan: &CartanData, word: &[usize]) -> Result<Self, AlgError> {
        let w = cartan.element_from_word(word)?;
        let mut e = Self::zero(kind, cartan);
        let one = LaurentPoly::one(&e.vars);
        e.terms.insert(w, one);
        Ok(e)
    }

    /// Basis element for an explicit Weyl-group element.
    pub fn basis_of(kind: HeckeKind, cartan: &CartanData, w: &WeylElement) -> Self {
        let mut e = Self::zero(kind, cartan);
        let one = LaurentPoly::one(&e.vars);
        e.terms.insert(w.clone(), one);
        e
    }

    /// Coefficient polynomial times the identity basis word.
    pub fn from_poly(kind: HeckeKind, cartan: &CartanData, p: &LaurentPoly) -> Result<Self, AlgError> {
        let mut e = Self::zero(kind, cartan);
        if *p.vars() != e.vars {
            return Err(AlgError::VarMismatch);
        }
        if !p.is_zero() {
            e.terms.insert(cartan.identity(), p.clone());
        }
        Ok(e)
    }

    /// Affine lattice monomial `Y^exps` (fundamental-weight exponents).
    pub fn y_monomial(cartan: &CartanData, exps: &[i64]) -> Result<Self, AlgError> {
        if exps.len() != cartan.rank() {
            return Err(AlgError::Invalid(format!(
                "Y(...) needs {} exponents",
                cartan.rank()
            )));
        }
        let e = Self::zero(HeckeKind::Affine, cartan);
        let mut full = vec![0i64; e.vars.len()];
        full[1..].copy_from_slice(exps);
        let p = LaurentPoly::monomial(&e.vars, full, Rational::one())?;
        Self::from_poly(HeckeKind::Affine, cartan, &p)
    }

    /// Flavor of this element.
    pub fn kind(&self) -> HeckeKind {
        self.kind
    }

    /// Underlying Cartan data.
    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    /// Coefficient variable list.
    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates over `(basis element, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&WeylElement, &LaurentPoly)> {
        self.terms.iter()
    }

    /// Coefficient of a basis element (zero when absent).
    pub fn coeff_of(&self, w: &WeylElement) -> LaurentPoly {
        self.terms
            .get(w)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(&self.vars))
    }

    fn check_compat(&self, other: &Self) -> Result<(), AlgError> {
        if self.kind != other.kind {
            return Err(AlgError::Invalid("algebra kinds differ".into()));
        }
        if self.cartan != other.cartan {
            return Err(AlgError::CartanMismatch);
        }
        Ok(())
    }

    fn add_term(&mut self, w: WeylElement, p: LaurentPoly) -> Result<(), AlgError> {
        if p.is_zero() {
            return Ok(());
        }
        match self.terms.remove(&w) {
            Some(old) => {
                let sum = old.add(&p)?;
                if !sum.is_zero() {
                    self.terms.insert(w, sum);
                }
            }
            None => {
                self.terms.insert(w, p);
            }
        }
        Ok(())
    }

    /// Sum.
    pub fn add(&self, other: &Self) -> Result<Self, AlgError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (w, p) in &other.terms {
            out.add_term(w.clone(), p.clone())?;
        }
        Ok(out)
    }

    /// Difference.
    pub fn sub(&self, other: &Self) -> Result<Self, AlgError> {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        HeckeElement {
            kind: self.kind,
            cartan: self.cartan.clone(),
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, p)| (w.clone(), p.neg()))
                .collect(),
        }
    }

    /// Scalar multiple.
    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self::zero(self.kind, &self.cartan);
        for (w, p) in &self.terms {
            let q = p.scale(r);
            if !q.is_zero() {
                out.terms.insert(w.clone(), q);
            }
        }
        out
    }

    /// Right multiplication by a coefficient polynomial (coefficients are
    /// stored on the right, so this is plain coefficient multiplication).
    pub fn mul_coeff(&self, p: &LaurentPoly) -> Result<Self, AlgError> {
        if *p.vars() != self.vars {
            return Err(AlgError::VarMismatch);
        }
        let mut out = Self::zero(self.kind, &self.cartan);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(p)?)?;
        }
        Ok(out)
    }

    /// Product of two elements, straightened to canonical form.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgError> {
        self.check_compat(other)?;
        let mut out = Self::zero(self.kind, &self.cartan);
        for (u, p) in &self.terms {
            for (v, r) in &other.terms {
                let word = self.cartan.reduced_word(v)?;
                let pushed = straighten_word(self.kind, &self.cartan, &self.vars, p, &word)?;
                let combined = prefix_element(self.kind, &self.cartan, &self.vars, u, &pushed)?;
                for (w, c) in combined {
                    out.add_term(w, c.mul(r)?)?;
                }
            }
        }
        Ok(out)
    }

    /// Nonnegative power, or the inverse power of an invertible monomial
    /// element (identity basis word with a single-monomial coefficient).
    pub fn pow(&self, k: i64) -> Result<Self, AlgError> {
        if k >= 0 {
            let mut acc = Self::unit(self.kind, &self.cartan);
            for _ in 0..k {
                acc = acc.mul(self)?;
            }
            return Ok(acc);
        }
        if self.terms.len() != 1 {
            return Err(AlgError::Invalid(
                "negative power needs an invertible monomial element".into(),
            ));
        }
        let (w, p) = self.terms.iter().next().expect("single term");
        if !w.is_identity() {
            return Err(AlgError::Invalid(
                "negative power needs an identity basis word".into(),
            ));
        }
        let inv = Self::from_poly(self.kind, &self.cartan, &p.invert_monomial()?)?;
        inv.pow(-k)
    }

    /// Specializes the algebra parameter: `q` for finite/affine, `eps` for
    /// degenerate. Other names (and the nil flavor) are rejected.
    pub fn specialize(&self, name: &str, value: &Rational) -> Result<Self, AlgError> {
        let allowed = match self.kind {
            HeckeKind::Finite | HeckeKind::Affine => "q",
            HeckeKind::Degenerate => "eps",
            HeckeKind::Nil => {
                return Err(AlgError::Invalid(
                    "nil algebra has no parameter to specialize".into(),
                ))
            }
        };
        if name != allowed {
            return Err(AlgError::Invalid(format!(
                "only `{allowed}` can be specialized in the {} algebra",
                self.kind.name()
            )));
        }
        let mut out = Self::zero(self.kind, &self.cartan);
        for (w, p) in &self.terms {
            out.add_term(w.clone(), p.specialize(name, value)?)?;
        }
        Ok(out)
    }

    /// Canonical text form: terms sorted by basis-word length descending,
    /// then reduced word ascending; letter first, coefficient second.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let letter = self.kind.letter();
        let mut rows: Vec<(usize, Vec<usize>, &LaurentPoly)> = Vec::new();
        for (w, p) in &self.terms {
            let word = self.cartan.reduced_word(w).expect("valid element");
            rows.push((w.len(), word, p));
        }
        rows.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| a.1.cmp(&b.1)));
        let mut out = String::new();
        for (idx, (_, word, p)) in rows.iter().enumerate() {
            let coeff = render_coefficient(self.kind, p);
            if idx == 0 {
                if coeff.negative {
                    out.push('-');
                }
            } else if coeff.negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut chunk = String::new();
            chunk.push(letter);
            chunk.push('[');
            chunk.push_str(
                &word
                    .iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            chunk.push(']');
            if !coeff.is_one {
                chunk.push('*');
                if coeff.parens {
                    chunk.push('(');
                    chunk.push_str(&coeff.text);
                    chunk.push(')');
                } else {
                    chunk.push_str(&coeff.text);
                }
            }
            out.push_str(&chunk);
        }
        out
    }

    /// Parses the element grammar for this flavor (accepts both canonical
    /// and free-form input, letter-first or coefficient-first).
    pub fn parse(kind: HeckeKind, cartan: &CartanData, input: &str) -> Result<Self, AlgError> {
        parse_expr(
            &HeckeSemantics {
                kind,
                cartan: cartan.clone(),
            },
            input,
        )
    }
}

struct CoeffText {
    text: String,
    negative: bool,
    parens: bool,
    is_one: bool,
}

/// Renders one coefficient polynomial. Single-term coefficients have the
/// sign pulled out; multi-term coefficients keep it inline and get
/// parenthesized by the caller.
fn render_coefficient(kind: HeckeKind, p: &LaurentPoly) -> CoeffText {
    let multi = p.term_count() > 1;
    if multi {
        return CoeffText {
            text: render_coeff_poly(kind, p),
            negative: false,
            parens: true,
            is_one: false,
        };
    }
    let (exps, c) = p.terms().next().expect("nonzero single term");
    let negative = c.is_negative();
    let abs = p.scale(&if negative {
        -Rational::one()
    } else {
        Rational::one()
    });
    let is_one = abs.is_one();
    CoeffText {
        text: render_coeff_poly(kind, &abs),
        negative,
        parens: false,
        is_one: is_one && exps.iter().all(|&e| e == 0),
    }
}

/// Coefficient polynomial rendering. Affine coefficients use `Y(v)`
/// monomial notation; the other flavors use the plain polynomial form.
fn render_coeff_poly(kind: HeckeKind, p: &LaurentPoly) -> String {
    if kind != HeckeKind::Affine {
        return p.render();
    }
    if p.is_zero() {
        return String::from("0");
    }
    let mut out = String::new();
    for (idx, (exps, c)) in p.sorted_terms().iter().enumerate() {
        let negative = c.is_negative();
        if idx == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        let mut factors: Vec<String> = Vec::new();
        if !mag.is_one() {
            factors.push(render_rational(&mag));
        }
        let qexp = exps[0];
        if qexp == 1 {
            factors.push(String::from("q"));
        } else if qexp != 0 {
            factors.push(format!("q^{qexp}"));
        }
        if exps[1..].iter().any(|&e| e != 0) {
            let list = exps[1..]
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",");
            factors.push(format!("Y({list})"));
        }
        if factors.is_empty() {
            factors.push(render_rational(&mag));
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// Applies the simple reflection `s_i` to a coefficient polynomial.
pub(crate) fn act_letter(
    kind: HeckeKind,
    cartan: &CartanData,
    vars: &VarList,
    i: usize,
    p: &LaurentPoly,
) -> Result<LaurentPoly, AlgError> {
    match kind {
        HeckeKind::Finite => Ok(p.clone()),
        HeckeKind::Affine => {
            // Reflect the Y-exponent block; q is untouched.
            p.map_exponents(|exps| {
                let lam: Vec<i64> = exps[1..].to_vec();
                let image = cartan.reflect(i, &lam).expect("rank checked");
                let mut out = Vec::with_capacity(exps.len());
                out.push(exps[0]);
                out.extend(image);
                out
            })
        }
        HeckeKind::Degenerate | HeckeKind::Nil => {
            // Substitute x_j -> s_i(omega_j) as a linear form; eps fixed.
            let rank = cartan.rank();
            let mut images = Vec::with_capacity(vars.len());
            for j in 0..rank {
                if j == i {
                    // s_i(omega_i) = omega_i - alpha_i.
                    let alpha = cartan.simple_root(i)?;
                    let mut img = LaurentPoly::var(vars, &format!("x{}", j + 1))?;
                    for (k, &coef) in alpha.iter().enumerate() {
                        if coef != 0 {
                            let xk = LaurentPoly::var(vars, &format!("x{}", k + 1))?;
                            img = img.sub(&xk.scale(&Rational::from_integer(coef.into())))?;
                        }
                    }
                    images.push(img);
                } else {
                    images.push(LaurentPoly::var(vars, &format!("x{}", j + 1))?);
                }
            }
            if kind == HeckeKind::Degenerate {
                images.push(LaurentPoly::var(vars, "eps")?);
            }
            p.substitute(&images)
        }
    }
}

/// The simple root `alpha_i` as a linear polynomial in the x variables.
pub(crate) fn alpha_poly(cartan: &CartanData, vars: &VarList, i: usize) -> Result<LaurentPoly, AlgError> {
    let alpha = cartan.simple_root(i)?;
    let mut out = LaurentPoly::zero(vars);
    for (k, &coef) in alpha.iter().enumerate() {
        if coef != 0 {
            let xk = LaurentPoly::var(vars, &format!("x{}", k + 1))?;
            out = out.add(&xk.scale(&Rational::from_integer(coef.into())))?;
        }
    }
    Ok(out)
}

/// `1 - Y^{-alpha_i}` as an affine coefficient polynomial.
fn one_minus_y_neg_alpha(
    cartan: &CartanData,
    vars: &VarList,
    i: usize,
) -> Result<LaurentPoly, AlgError> {
    let alpha = cartan.simple_root(i)?;
    let mut exps = vec![0i64; vars.len()];
    for (k, &coef) in alpha.iter().enumerate() {
        exps[1 + k] = -coef;
    }
    let y = LaurentPoly::monomial(vars, exps, Rational::one())?;
    LaurentPoly::one(vars).sub(&y)
}

/// Pushes a coefficient polynomial through `T_v` (given as a reduced word),
/// producing the canonical right-coefficient form of `p * T_v`.
fn straighten_word(
    kind: HeckeKind,
    cartan: &CartanData,
    vars: &VarList,
    p: &LaurentPoly,
    word: &[usize],
) -> Result<BTreeMap<WeylElement, LaurentPoly>, AlgError> {
    let mut out = BTreeMap::new();
    if p.is_zero() {
        return Ok(out);
    }
    if word.is_empty() {
        out.insert(cartan.identity(), p.clone());
        return Ok(out);
    }
    if kind == HeckeKind::Finite {
        // q is central: p * T_v = T_v * p.
        out.insert(cartan.element_from_word(word)?, p.clone());
        return Ok(out);
    }
    let i = word[0];
    let rest = &word[1..];
    let sp = act_letter(kind, cartan, vars, i, p)?;
    let correction = match kind {
        HeckeKind::Affine => {
            // p * T_i = T_i * s_i(p) + (q-1) (p - s_i(p)) / (1 - Y^{-alpha_i}).
            let diff = p.sub(&sp)?;
            let den = one_minus_y_neg_alpha(cartan, vars, i)?;
            let quo = diff.exact_div(&den)?;
            let q = LaurentPoly::var(vars, "q")?;
            let qm1 = q.sub(&LaurentPoly::one(vars))?;
            qm1.mul(&quo)?
        }
        HeckeKind::Degenerate => {
            // p * s_i = s_i * s_i(p) + eps (s_i(p) - p) / alpha_i.
            let diff = sp.sub(p)?;
            let quo = diff.exact_div(&alpha_poly(cartan, vars, i)?)?;
            let eps = LaurentPoly::var(vars, "eps")?;
            eps.mul(&quo)?
        }
        HeckeKind::Nil => {
            // p * r_i = r_i * s_i(p) + (s_i(p) - p) / alpha_i.
            let diff = sp.sub(p)?;
            diff.exact_div(&alpha_poly(cartan, vars, i)?)?
        }
        HeckeKind::Finite => unreachable!("handled above"),
    };
    let rec1 = straighten_word(kind, cartan, vars, &sp, rest)?;
    let prefixed = prefix_letter(kind, cartan, vars, i, &rec1)?;
    let rec2 = straighten_word(kind, cartan, vars, &correction, rest)?;
    let mut merged = prefixed;
    for (w, c) in rec2 {
        merge_term(&mut merged, w, c)?;
    }
    Ok(merged)
}

fn merge_term(
    map: &mut BTreeMap<WeylElement, LaurentPoly>,
    w: WeylElement,
    c: LaurentPoly,
) -> Result<(), AlgError> {
    if c.is_zero() {
        return Ok(());
    }
    match map.remove(&w) {
        Some(old) => {
            let sum = old.add(&c)?;
            if !sum.is_zero() {
                map.insert(w, sum);
            }
        }
        None => {
            map.insert(w, c);
        }
    }
    Ok(())
}

/// Left-multiplies a canonical term map by the basis letter `i`.
fn prefix_letter(
    kind: HeckeKind,
    cartan: &CartanData,
    vars: &VarList,
    i: usize,
    terms: &BTreeMap<WeylElement, LaurentPoly>,
) -> Result<BTreeMap<WeylElement, LaurentPoly>, AlgError> {
    let gen = cartan.generator(i)?;
    let mut out = BTreeMap::new();
    match kind {
        HeckeKind::Finite | HeckeKind::Affine => {
            let q = LaurentPoly::var(vars, "q")?;
            let qm1 = q.sub(&LaurentPoly::one(vars))?;
            for (w, c) in terms {
                let sw = cartan.mul(&gen, w);
                if sw.len() > w.len() {
                    merge_term(&mut out, sw, c.clone())?;
                } else {
                    merge_term(&mut out, w.clone(), qm1.mul(c)?)?;
                    merge_term(&mut out, sw, q.mul(c)?)?;
                }
            }
        }
        HeckeKind::Degenerate => {
            for (w, c) in terms {
                merge_term(&mut out, cartan.mul(&gen, w), c.clone())?;
            }
        }
        HeckeKind::Nil => {
            for (w, c) in terms {
                let sw = cartan.mul(&gen, w);
                if sw.len() > w.len() {
                    merge_term(&mut out, sw, c.clone())?;
                }
            }
        }
    }
    Ok(out)
}

/// Left-multiplies a canonical term map by the basis element of `u`.
fn prefix_element(
    kind: HeckeKind,
    cartan: &CartanData,
    vars: &VarList,
    u: &WeylElement,
    terms: &BTreeMap<WeylElement, LaurentPoly>,
) -> Result<BTreeMap<WeylElement, LaurentPoly>, AlgError> {
    match kind {
        HeckeKind::Finite | HeckeKind::Affine => {
            let word = cartan.reduced_word(u)?;
            let mut acc = terms.clone();
            for &i in word.iter().rev() {
                acc = prefix_letter(kind, cartan, vars, i, &acc)?;
            }
            Ok(acc)
        }
        HeckeKind::Degenerate => {
            let mut out = BTreeMap::new();
            for (z, c) in terms {
                merge_term(&mut out, cartan.mul(u, z), c.clone())?;
            }
            Ok(out)
        }
        HeckeKind::Nil => {
            let mut out = BTreeMap::new();
            for (z, c) in terms {
                let w = cartan.mul(u, z);
                if w.len() == u.len() + z.len() {
                    merge_term(&mut out, w, c.clone())?;
                }
            }
            Ok(out)
        }
    }
}

struct HeckeSemantics {
    kind: HeckeKind,
    cartan: CartanData,
}

impl ExprSemantics for HeckeSemantics {
    type Value = HeckeElement;

    fn number(&self, r: Rational) -> Result<HeckeElement, AlgError> {
        Ok(HeckeElement::unit(self.kind, &self.cartan).scale(&r))
    }

    fn ident(&self, name: &str) -> Result<HeckeElement, AlgError> {
        let vars = coeff_vars(self.kind, self.cartan.rank());
        let allowed = match self.kind {
            HeckeKind::Finite | HeckeKind::Affine => name == "q",
            HeckeKind::Degenerate => name == "eps" || is_x_var(name, self.cartan.rank()),
            HeckeKind::Nil => is_x_var(name, self.cartan.rank()),
        };
        if !allowed {
            return Err(AlgError::Parse(format!(
                "unknown symbol `{name}` in the {} algebra",
                self.kind.name()
            )));
        }
        let p = LaurentPoly::var(&vars, name)?;
        HeckeElement::from_poly(self.kind, &self.cartan, &p)
    }

    fn group_word(&self, word: &[usize]) -> Result<HeckeElement, AlgError> {
        if word.iter().any(|&i| i >= self.cartan.rank()) {
            return Err(AlgError::Parse(
                "generator index exceeds the rank".into(),
            ));
        }
        HeckeElement::basis(self.kind, &self.cartan, word)
    }

    fn y_monomial(&self, exps: &[i64]) -> Result<HeckeElement, AlgError> {
        if self.kind != HeckeKind::Affine {
            return Err(AlgError::Parse(
                "Y(...) is only valid in the affine algebra".into(),
            ));
        }
        HeckeElement::y_monomial(&self.cartan, exps)
    }

    fn group_letter(&self) -> Option<char> {
        Some(self.kind.letter())
    }

    fn allows_y(&self) -> bool {
        self.kind == HeckeKind::Affine
    }

    fn add(&self, a: HeckeElement, b: HeckeElement) -> Result<HeckeElement, AlgError> {
        a.add(&b)
    }

    fn sub(&self, a: HeckeElement, b: HeckeElement) -> Result<HeckeElement, AlgError> {
        a.sub(&b)
    }

    fn mul(&self, a: HeckeElement, b: HeckeElement) -> Result<HeckeElement, AlgError> {
        a.mul(&b)
    }

    fn neg(&self, a: HeckeElement) -> Result<HeckeElement, AlgError> {
        Ok(a.neg())
    }

    fn pow(&self, a: HeckeElement, k: i64) -> Result<HeckeElement, AlgError> {
        a.pow(k)
    }
}

fn is_x_var(name: &str, rank: usize) -> bool {
    name.strip_prefix('x')
        .and_then(|rest| rest.parse::<usize>().ok())
        .is_some_and(|k| k >= 1 && k <= rank)
}
