//! Partial flags fixed by a nilpotent matrix: the dominant weight of a
//! Jordan type, the extreme kernel and image flags, exact fixed-flag counts
//! over finite fields, component counts via point-count interpolation, and
//! the family of characteristic polynomials attached to a scaling pair
//! (s, q) with s x s^{-1} = q x.

use crate::cartan::{compositions, conjugate_partition, GlWeight};
use crate::error::AlgError;
use crate::gf::{
    echelon_subspaces, kernel_basis, mat_identity, mat_mul, mat_vec_mul, mat_zero, rank, rref,
    transpose, FieldCtx, Gf, GfEl, Matrix, RationalField, RowSpan,
};
use crate::interp::{evaluate, newton_interpolate};
use crate::laurent::LaurentPoly;
use crate::rational::{rat_int, to_usize, Rational};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

/// Default ambient-dimension guard for the counting routines.
pub const DEFAULT_DIMENSION_GUARD: usize = 4;

/// A nilpotent matrix in Jordan normal form, described by its block sizes.
/// Within a block of size b starting at offset o the matrix sends
/// e_{o+k} to e_{o+k-1} and kills e_o.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanData {
    blocks: Vec<usize>,
    d: usize,
}

impl JordanData {
    /// Builds the Jordan data of a partition; block sizes are sorted into
    /// weakly decreasing order and must be positive.
    pub fn new(blocks: Vec<usize>) -> Result<Self, AlgError> {
        if blocks.is_empty() || blocks.contains(&0) {
            return Err(AlgError::NotAPartition);
        }
        let mut blocks = blocks;
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        let d = blocks.iter().sum();
        Ok(JordanData { blocks, d })
    }

    /// Ambient dimension.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Block sizes, weakly decreasing.
    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Largest block: the nilpotency degree.
    pub fn max_block(&self) -> usize {
        self.blocks[0]
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Vec<usize> {
        conjugate_partition(&self.blocks)
    }

    /// The matrix over any field: ones on the within-block superdiagonal.
    pub fn matrix<F: FieldCtx>(&self, ctx: &F) -> Matrix<F::El> {
        let mut m = mat_zero(ctx, self.d, self.d);
        let mut offset = 0;
        for &b in &self.blocks {
            for k in 1..b {
                m[offset + k - 1][offset + k] = ctx.one();
            }
            offset += b;
        }
        m
    }
}

/// A composition of the ambient dimension into step sizes; zeros allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagType {
    dims: Vec<usize>,
}

impl FlagType {
    /// Builds a flag type from step sizes.
    pub fn new(dims: Vec<usize>) -> Self {
        FlagType { dims }
    }

    /// Number of steps.
    pub fn n(&self) -> usize {
        self.dims.len()
    }

    /// Total dimension.
    pub fn d(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Step sizes.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
}

/// A chain of subspaces 0 = F_0 subset-eq F_1 subset-eq ... subset-eq F_n =
/// full space, each stored as a canonical reduced row-echelon basis.
pub struct PartialFlag<F: FieldCtx> {
    ambient: usize,
    steps: Vec<Matrix<F::El>>,
}

impl<F: FieldCtx> Clone for PartialFlag<F> {
    fn clone(&self) -> Self {
        PartialFlag {
            ambient: self.ambient,
            steps: self.steps.clone(),
        }
    }
}

impl<F: FieldCtx> PartialEq for PartialFlag<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.steps == other.steps
    }
}

impl<F: FieldCtx> Eq for PartialFlag<F> {}

impl<F: FieldCtx> core::fmt::Debug for PartialFlag<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("PartialFlag")
            .field("ambient", &self.ambient)
            .field("steps", &self.steps)
            .finish()
    }
}

impl<F: FieldCtx> PartialFlag<F> {
    /// Builds a flag from echelon bases for F_1, ..., F_n; validates the
    /// canonical form, the inclusions, and that the last step is everything.
    pub fn new(
        ctx: &F,
        ambient: usize,
        steps: Vec<Matrix<F::El>>,
    ) -> Result<Self, AlgError> {
        if steps.is_empty() {
            return Err(AlgError::Invalid("a flag needs at least one step".into()));
        }
        for step in &steps {
            if step.iter().any(|row| row.len() != ambient) {
                return Err(AlgError::Invalid("row width differs from ambient".into()));
            }
            let mut normalized = step.clone();
            rref(ctx, &mut normalized)?;
            if normalized != *step {
                return Err(AlgError::Invalid(
                    "flag step is not a canonical echelon basis".into(),
                ));
            }
        }
        for pair in steps.windows(2) {
            let mut span = RowSpan::new(ctx, ambient);
            for row in &pair[1] {
                span.insert(row)?;
            }
            if pair[0].iter().any(|row| !span.contains(row)) {
                return Err(AlgError::Invalid("flag steps are not nested".into()));
            }
        }
        if steps.last().map(|m| m.len()) != Some(ambient) {
            return Err(AlgError::Invalid(
                "last flag step must be the full space".into(),
            ));
        }
        Ok(PartialFlag { ambient, steps })
    }

    /// Ambient dimension.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of steps.
    pub fn n(&self) -> usize {
        self.steps.len()
    }

    /// Echelon basis of F_i for i in 1..=n.
    pub fn step(&self, i: usize) -> Result<&Matrix<F::El>, AlgError> {
        if i == 0 || i > self.steps.len() {
            return Err(AlgError::IndexOutOfRange);
        }
        Ok(&self.steps[i - 1])
    }

    /// Subspace dimensions (dim F_1, ..., dim F_n).
    pub fn step_dims(&self) -> Vec<usize> {
        self.steps.iter().map(|m| m.len()).collect()
    }

    /// The composition of successive quotient dimensions.
    pub fn flag_type(&self) -> FlagType {
        let mut dims = Vec::with_capacity(self.steps.len());
        let mut prev = 0;
        for m in &self.steps {
            dims.push(m.len() - prev);
            prev = m.len();
        }
        FlagType::new(dims)
    }
}

/// The weight (d_1, ..., d_n) with d_i = dim ker x^i - dim ker x^{i-1},
/// computed by rank over the rationals. Weakly decreasing for every input.
pub fn dominant_weight(x: &JordanData, n: usize) -> Result<GlWeight, AlgError> {
    if x.max_block() > n {
        return Err(AlgError::Invalid(
            "nilpotency degree exceeds the step count".into(),
        ));
    }
    let ctx = RationalField;
    let m = x.matrix(&ctx);
    let mut power = mat_identity(&ctx, x.d());
    let mut prev = 0i64;
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        power = mat_mul(&ctx, &power, &m)?;
        let ker_dim = (x.d() - rank(&ctx, &power)?) as i64;
        out.push(ker_dim - prev);
        prev = ker_dim;
    }
    Ok(out)
}

/// The two distinguished stable flags of a nilpotent: the kernel flag
/// F^max_i = ker x^i and the image flag F^min_i = im x^{n-i}. Every stable
/// flag is sandwiched between them step by step.
pub fn extreme_flags<F: FieldCtx>(
    ctx: &F,
    x: &JordanData,
    n: usize,
) -> Result<(PartialFlag<F>, PartialFlag<F>), AlgError> {
    if x.max_block() > n {
        return Err(AlgError::Invalid(
            "nilpotency degree exceeds the step count".into(),
        ));
    }
    let d = x.d();
    let m = x.matrix(ctx);
    let mut powers = vec![mat_identity(ctx, d)];
    for i in 0..n {
        powers.push(mat_mul(ctx, &powers[i], &m)?);
    }
    let mut maxs = Vec::with_capacity(n);
    let mut mins = Vec::with_capacity(n);
    for i in 1..=n {
        let mut ker = kernel_basis(ctx, &powers[i])?;
        rref(ctx, &mut ker)?;
        maxs.push(ker);
        let mut im = transpose(&powers[n - i]);
        rref(ctx, &mut im)?;
        mins.push(im);
    }
    Ok((
        PartialFlag::new(ctx, d, maxs)?,
        PartialFlag::new(ctx, d, mins)?,
    ))
}

/// Whether x(F_i) lies in F_{i-1} for every step, with F_0 = 0.
pub fn is_x_stable<F: FieldCtx>(
    ctx: &F,
    flag: &PartialFlag<F>,
    x_mat: &Matrix<F::El>,
) -> Result<bool, AlgError> {
    if x_mat.len() != flag.ambient() {
        return Err(AlgError::Invalid("matrix size differs from ambient".into()));
    }
    for i in 1..=flag.n() {
        let mut span = RowSpan::new(ctx, flag.ambient());
        if i > 1 {
            for row in flag.step(i - 1)? {
                span.insert(row)?;
            }
        }
        for row in flag.step(i)? {
            let image = mat_vec_mul(ctx, x_mat, row)?;
            if !span.contains(&image) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Exact number of x-stable flags of the given type over F_q, with the
/// default ambient-dimension guard.
pub fn count_fixed_flags(x: &JordanData, t: &FlagType, q: u64) -> Result<u64, AlgError> {
    count_fixed_flags_with_guard(x, t, q, DEFAULT_DIMENSION_GUARD)
}

/// Exact number of x-stable flags of the given type over F_q. Recursive:
/// F_1 runs over the subspaces of ker x of dimension d_1 (canonical echelon
/// enumeration), and the count continues with the induced nilpotent on the
/// quotient and the remaining type.
pub fn count_fixed_flags_with_guard(
    x: &JordanData,
    t: &FlagType,
    q: u64,
    max_d: usize,
) -> Result<u64, AlgError> {
    if x.d() > max_d {
        return Err(AlgError::SizeGuard(format!(
            "ambient dimension {} exceeds the guard {max_d}",
            x.d()
        )));
    }
    if t.d() != x.d() {
        return Err(AlgError::Invalid(
            "flag type total differs from ambient dimension".into(),
        ));
    }
    let gf = Gf::new(q)?;
    let m = x.matrix(&gf);
    count_rec(&gf, &m, t.dims())
}

fn count_rec(gf: &Gf, x: &Matrix<GfEl>, dims: &[usize]) -> Result<u64, AlgError> {
    let amb = x.len();
    let Some((&d1, rest)) = dims.split_first() else {
        // The remaining type sums to the ambient dimension, so this is the
        // empty flag on the zero space.
        return Ok(1);
    };
    let mut ker = kernel_basis(gf, x)?;
    rref(gf, &mut ker)?;
    if d1 > ker.len() {
        return Ok(0);
    }
    let mut total = 0u64;
    for coords in echelon_subspaces(gf, ker.len(), d1) {
        // A zero-dimensional step contributes the zero subspace; mat_mul
        // cannot infer the width of an empty factor.
        let mut sub = if coords.is_empty() {
            Vec::new()
        } else {
            mat_mul(gf, &coords, &ker)?
        };
        let pivots = rref(gf, &mut sub)?;
        let mut span = RowSpan::new(gf, amb);
        for row in &sub {
            span.insert(row)?;
        }
        let npiv: Vec<usize> = (0..amb).filter(|c| !pivots.contains(c)).collect();
        // Induced map on the quotient in the complement coordinates (the
        // standard vectors at non-pivot columns): well defined because the
        // chosen subspace lies in ker x.
        let mut quotient = mat_zero(gf, npiv.len(), npiv.len());
        for (jq, &j) in npiv.iter().enumerate() {
            let col: Vec<GfEl> = (0..amb).map(|r| x[r][j].clone()).collect();
            let reduced = span.reduce(&col);
            for (iq, &i) in npiv.iter().enumerate() {
                quotient[iq][jq] = reduced[i].clone();
            }
        }
        total += count_rec(gf, &quotient, rest)?;
    }
    Ok(total)
}

/// Dimension of the conjugacy orbit of x: d^2 minus the sum of squared
/// conjugate-partition parts.
pub fn orbit_dimension(x: &JordanData) -> usize {
    let squares: usize = x.conjugate().iter().map(|&c| c * c).sum();
    x.d() * x.d() - squares
}

/// Dimension of the variety of flags of one type: sum of d_i d_j over i < j.
pub fn flag_variety_dimension(t: &FlagType) -> usize {
    let dims = t.dims();
    let mut total = 0;
    for i in 0..dims.len() {
        for j in (i + 1)..dims.len() {
            total += dims[i] * dims[j];
        }
    }
    total
}

/// Expected dimension of the stable-flag variety: the flag variety
/// dimension minus half the orbit dimension. Negative means empty.
pub fn fiber_dimension(x: &JordanData, t: &FlagType) -> i64 {
    flag_variety_dimension(t) as i64 - (orbit_dimension(x) / 2) as i64
}

/// The smallest field orders usable as interpolation nodes.
pub fn supported_prime_powers(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut q = 2;
    while out.len() < count {
        if Gf::new(q).is_ok() {
            out.push(q);
        }
        q += 1;
    }
    out
}

/// A component count together with the interpolation evidence behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentCount {
    /// Number of top-dimensional components: the q^dimension coefficient.
    pub count: u64,
    /// Expected dimension used as the degree bound.
    pub dimension: i64,
    /// Fitted point-count polynomial, constant coefficient first.
    pub poly: Vec<Rational>,
    /// Interpolation nodes (q, count) used for the fit.
    pub nodes: Vec<(u64, u64)>,
    /// Held-out validation node (q, count); the fit must reproduce it.
    pub held_out: (u64, u64),
}

/// Component count of the stable-flag variety of one type, with the
/// default guard.
pub fn component_count(x: &JordanData, t: &FlagType) -> Result<ComponentCount, AlgError> {
    component_count_with_guard(x, t, DEFAULT_DIMENSION_GUARD)
}

/// Component count of the stable-flag variety of one type: fits the
/// point-count polynomial through counts at the smallest prime powers and
/// reads off the top-degree coefficient. A held-out node validates the fit;
/// a nonzero residual is an error, not a wrong answer.
pub fn component_count_with_guard(
    x: &JordanData,
    t: &FlagType,
    max_d: usize,
) -> Result<ComponentCount, AlgError> {
    if x.max_block() > t.n() {
        return Err(AlgError::Invalid(
            "nilpotency degree exceeds the step count".into(),
        ));
    }
    let dim = fiber_dimension(x, t);
    let needed = dim.max(0) as usize + 2;
    let qs = supported_prime_powers(needed);
    let mut nodes = Vec::with_capacity(needed);
    for &q in &qs {
        nodes.push((q, count_fixed_flags_with_guard(x, t, q, max_d)?));
    }
    let held_out = *nodes.last().expect("at least two nodes");
    if nodes.iter().all(|&(_, c)| c == 0) {
        return Ok(ComponentCount {
            count: 0,
            dimension: dim,
            poly: Vec::new(),
            nodes: nodes[..nodes.len() - 1].to_vec(),
            held_out,
        });
    }
    if dim < 0 {
        return Err(AlgError::Invalid(
            "nonzero point counts below an empty dimension bound".into(),
        ));
    }
    let fit: Vec<(Rational, Rational)> = nodes[..nodes.len() - 1]
        .iter()
        .map(|&(q, c)| (rat_int(q as i64), rat_int(c as i64)))
        .collect();
    let poly = newton_interpolate(&fit)?;
    let predicted = evaluate(&poly, &rat_int(held_out.0 as i64));
    if predicted != rat_int(held_out.1 as i64) {
        return Err(AlgError::Invalid(
            "interpolation residual nonzero at the held-out node".into(),
        ));
    }
    let lead = poly
        .get(dim as usize)
        .cloned()
        .unwrap_or_else(Rational::zero);
    let count = to_usize(&lead)? as u64;
    Ok(ComponentCount {
        count,
        dimension: dim,
        poly,
        nodes: nodes[..nodes.len() - 1].to_vec(),
        held_out,
    })
}

/// Total component count over every composition of d into n steps.
pub fn component_count_all(x: &JordanData, n: usize) -> Result<u64, AlgError> {
    component_count_all_with_guard(x, n, DEFAULT_DIMENSION_GUARD)
}

/// Total component count over every composition, with an explicit guard.
pub fn component_count_all_with_guard(
    x: &JordanData,
    n: usize,
    max_d: usize,
) -> Result<u64, AlgError> {
    let mut total = 0;
    for dims in compositions(x.d(), n) {
        let t = FlagType::new(dims);
        total += component_count_with_guard(x, &t, max_d)?.count;
    }
    Ok(total)
}

/// A scaling pair: an invertible diagonal s and a nonzero scalar q with
/// s x s^{-1} = q x. Entries are monomials in symbolic scalars so that
/// inverses stay exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrinfeldInput {
    x: JordanData,
    s: Vec<LaurentPoly>,
    q: LaurentPoly,
}

impl DrinfeldInput {
    /// Validates invertibility of every diagonal entry and the exact
    /// entrywise scaling relation s_{o+k-1} = q * s_{o+k} inside each block.
    pub fn new(x: JordanData, s: Vec<LaurentPoly>, q: LaurentPoly) -> Result<Self, AlgError> {
        if s.len() != x.d() {
            return Err(AlgError::Invalid(
                "diagonal length differs from ambient dimension".into(),
            ));
        }
        for entry in &s {
            if entry.term_count() != 1 {
                return Err(AlgError::Invalid(
                    "diagonal entry is not an invertible monomial".into(),
                ));
            }
        }
        if q.term_count() != 1 {
            return Err(AlgError::Invalid("scalar q is not a nonzero monomial".into()));
        }
        let mut offset = 0;
        for &b in x.blocks() {
            for k in 1..b {
                let scaled = q.mul(&s[offset + k])?;
                if scaled != s[offset + k - 1] {
                    return Err(AlgError::Invalid(
                        "scaling relation s x s^-1 = q x violated".into(),
                    ));
                }
            }
            offset += b;
        }
        Ok(DrinfeldInput { x, s, q })
    }

    /// The nilpotent.
    pub fn x(&self) -> &JordanData {
        &self.x
    }

    /// Diagonal entries of s.
    pub fn s(&self) -> &[LaurentPoly] {
        &self.s
    }

    /// The scalar q.
    pub fn q(&self) -> &LaurentPoly {
        &self.q
    }
}

/// The n monic characteristic polynomials of s acting on the quotients
/// F^max_i / F^min_i of the extreme flags. Each is returned as its
/// coefficient list in u, constant first; the constant term is a unit
/// because s is invertible. Within a block of size b the quotient at step i
/// keeps the basis vectors at block positions max(0, b-n+i) < j <= min(i, b),
/// on which s acts by its diagonal entry.
pub fn drinfeld_polynomials(
    input: &DrinfeldInput,
    n: usize,
) -> Result<Vec<Vec<LaurentPoly>>, AlgError> {
    let x = input.x();
    if x.max_block() > n {
        return Err(AlgError::Invalid(
            "nilpotency degree exceeds the step count".into(),
        ));
    }
    let vars = input.q().vars();
    let mut out = Vec::with_capacity(n);
    for i in 1..=n {
        let mut coeffs = vec![LaurentPoly::one(vars)];
        let mut offset = 0;
        for &b in x.blocks() {
            let lo = b.saturating_sub(n - i);
            let hi = i.min(b);
            for j in (lo + 1)..=hi {
                coeffs = mul_linear(&coeffs, &input.s()[offset + j - 1])?;
            }
            offset += b;
        }
        out.push(coeffs);
    }
    Ok(out)
}

/// Multiplies a monic u-polynomial by (u - root).
fn mul_linear(
    coeffs: &[LaurentPoly],
    root: &LaurentPoly,
) -> Result<Vec<LaurentPoly>, AlgError> {
    let vars = root.vars();
    let mut out = vec![LaurentPoly::zero(vars); coeffs.len() + 1];
    for (k, c) in coeffs.iter().enumerate() {
        out[k + 1] = out[k + 1].add(c)?;
        out[k] = out[k].sub(&root.mul(c)?)?;
    }
    Ok(out)
}

/// Renders a u-polynomial with coefficient list constant-first, highest
/// degree first, e.g. "u^2 - (a + b)*u + a*b".
pub fn render_u_poly(coeffs: &[LaurentPoly]) -> String {
    let deg = match coeffs.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return "0".into(),
    };
    let mut pieces: Vec<String> = Vec::new();
    for k in (0..=deg).rev() {
        let c = &coeffs[k];
        if c.is_zero() {
            continue;
        }
        let u_part = match k {
            0 => String::new(),
            1 => "u".into(),
            _ => format!("u^{k}"),
        };
        let rendered = c.render();
        let piece = if k == 0 {
            if c.term_count() > 1 {
                format!("({rendered})")
            } else {
                rendered
            }
        } else if c.is_one() {
            u_part
        } else if c.neg().is_one() {
            format!("-{u_part}")
        } else if c.term_count() > 1 {
            // Pull a common minus out of an all-negative coefficient.
            let negated = c.neg();
            if negated.terms().all(|(_, r)| !r.is_negative()) {
                format!("-({})*{u_part}", negated.render())
            } else {
                format!("({rendered})*{u_part}")
            }
        } else {
            format!("{rendered}*{u_part}")
        };
        pieces.push(piece);
    }
    let mut out = String::new();
    for (idx, piece) in pieces.iter().enumerate() {
        if idx == 0 {
            out.push_str(piece);
        } else if let Some(stripped) = piece.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(stripped);
        } else {
            out.push_str(" + ");
            out.push_str(piece);
        }
    }
    out
}
