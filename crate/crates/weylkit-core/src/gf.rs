//! Exact field arithmetic behind the flag-counting and linear-algebra
//! routines: the rationals, prime fields, and a fixed table of small
//! prime-power fields, together with field-generic echelon form, rank,
//! kernel, and canonical subspace enumeration.

use crate::error::AlgError;
use crate::rational::Rational;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// A field with exact element arithmetic. Implementations carry any context
/// needed (e.g. the modulus), so elements stay plain data.
pub trait FieldCtx {
    /// Element representation.
    type El: Clone + PartialEq + Eq + Ord + core::fmt::Debug;

    /// Additive identity.
    fn zero(&self) -> Self::El;
    /// Multiplicative identity.
    fn one(&self) -> Self::El;
    /// Sum.
    fn add(&self, a: &Self::El, b: &Self::El) -> Self::El;
    /// Difference.
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    /// Product.
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    /// Additive inverse.
    fn neg(&self, a: &Self::El) -> Self::El;
    /// Multiplicative inverse.
    fn inv(&self, a: &Self::El) -> Result<Self::El, AlgError>;
    /// Zero test.
    fn is_zero(&self, a: &Self::El) -> bool;
    /// Image of an integer.
    fn from_int(&self, n: i64) -> Self::El;
}

/// The rationals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalField;

impl FieldCtx for RationalField {
    type El = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a.clone()
    }
    fn inv(&self, a: &Rational) -> Result<Rational, AlgError> {
        if a.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(Rational::one() / a)
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn from_int(&self, n: i64) -> Rational {
        Rational::from_integer(n.into())
    }
}

/// Element of a finite field: coefficients of `1, t, ..., t^{k-1}` mod p.
pub type GfEl = Vec<u64>;

/// A finite field of order `q = p^k`. Prime orders use modular integers;
/// the prime-power orders 4, 8, 9, 16, 25, 27 use fixed irreducible
/// polynomials. Other non-prime orders are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf {
    q: u64,
    p: u64,
    k: usize,
    /// Monic modulus coefficients, constant first, length k+1; for k = 1
    /// this is the trivial `t - 0` and never consulted.
    modulus: Vec<u64>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2u64;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

impl Gf {
    /// Builds the field of order `q`, or rejects the order.
    pub fn new(q: u64) -> Result<Self, AlgError> {
        if q > 1 << 16 {
            return Err(AlgError::UnsupportedFieldOrder(q));
        }
        if is_prime(q) {
            return Ok(Gf {
                q,
                p: q,
                k: 1,
                modulus: vec![0, 1],
            });
        }
        let (p, k, modulus): (u64, usize, Vec<u64>) = match q {
            4 => (2, 2, vec![1, 1, 1]),
            8 => (2, 3, vec![1, 1, 0, 1]),
            9 => (3, 2, vec![1, 0, 1]),
            16 => (2, 4, vec![1, 1, 0, 0, 1]),
            25 => (5, 2, vec![1, 1, 1]),
            27 => (3, 3, vec![1, 2, 0, 1]),
            _ => return Err(AlgError::UnsupportedFieldOrder(q)),
        };
        Ok(Gf { q, p, k, modulus })
    }

    /// The field order.
    pub fn order(&self) -> u64 {
        self.q
    }

    /// The characteristic.
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Every element, in mixed-radix order starting from zero.
    pub fn elements(&self) -> Vec<GfEl> {
        let mut out = Vec::with_capacity(self.q as usize);
        let mut cur = vec![0u64; self.k];
        loop {
            out.push(cur.clone());
            let mut pos = 0;
            loop {
                if pos == self.k {
                    return out;
                }
                cur[pos] += 1;
                if cur[pos] < self.p {
                    break;
                }
                cur[pos] = 0;
                pos += 1;
            }
        }
    }

    fn reduce_poly(&self, mut c: Vec<u64>) -> GfEl {
        // Replace t^m (m >= k) by the lower-degree tail of the modulus.
        for deg in (self.k..c.len()).rev() {
            let lead = c[deg] % self.p;
            c[deg] = 0;
            if lead == 0 {
                continue;
            }
            for j in 0..self.k {
                let m = self.modulus[j] % self.p;
                if m != 0 {
                    // t^deg = t^{deg-k} * (-(modulus tail)).
                    let sub = (lead * m) % self.p;
                    let idx = deg - self.k + j;
                    c[idx] = (c[idx] + self.p - sub) % self.p;
                }
            }
        }
        c.truncate(self.k);
        c.iter_mut().for_each(|v| *v %= self.p);
        c
    }

    fn pow(&self, a: &GfEl, mut e: u64) -> GfEl {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

impl FieldCtx for Gf {
    type El = GfEl;

    fn zero(&self) -> GfEl {
        vec![0; self.k]
    }
    fn one(&self) -> GfEl {
        let mut v = vec![0; self.k];
        v[0] = 1;
        v
    }
    fn add(&self, a: &GfEl, b: &GfEl) -> GfEl {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }
    fn sub(&self, a: &GfEl, b: &GfEl) -> GfEl {
        a.iter()
            .zip(b)
            .map(|(x, y)| (x + self.p - y) % self.p)
            .collect()
    }
    fn mul(&self, a: &GfEl, b: &GfEl) -> GfEl {
        let mut prod = vec![0u64; 2 * self.k];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        self.reduce_poly(prod)
    }
    fn neg(&self, a: &GfEl) -> GfEl {
        a.iter().map(|x| (self.p - x) % self.p).collect()
    }
    fn inv(&self, a: &GfEl) -> Result<GfEl, AlgError> {
        if self.is_zero(a) {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self.pow(a, self.q - 2))
    }
    fn is_zero(&self, a: &GfEl) -> bool {
        a.iter().all(|x| *x == 0)
    }
    fn from_int(&self, n: i64) -> GfEl {
        let p = self.p as i64;
        let r = ((n % p) + p) % p;
        let mut v = vec![0; self.k];
        v[0] = r as u64;
        v
    }
}

/// Dense matrix as rows of field elements.
pub type Matrix<E> = Vec<Vec<E>>;

/// Zero matrix.
pub fn mat_zero<F: FieldCtx>(f: &F, rows: usize, cols: usize) -> Matrix<F::El> {
    vec![vec![f.zero(); cols]; rows]
}

/// Identity matrix.
pub fn mat_identity<F: FieldCtx>(f: &F, n: usize) -> Matrix<F::El> {
    let mut m = mat_zero(f, n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = f.one();
    }
    m
}

/// Transpose.
pub fn transpose<E: Clone>(m: &Matrix<E>) -> Matrix<E> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    (0..cols)
        .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
        .collect()
}

/// Matrix product.
pub fn mat_mul<F: FieldCtx>(
    f: &F,
    a: &Matrix<F::El>,
    b: &Matrix<F::El>,
) -> Result<Matrix<F::El>, AlgError> {
    let inner = if a.is_empty() { 0 } else { a[0].len() };
    if b.len() != inner {
        return Err(AlgError::Invalid("matrix dimension mismatch".into()));
    }
    let cols = if b.is_empty() { 0 } else { b[0].len() };
    let mut out = mat_zero(f, a.len(), cols);
    for (i, arow) in a.iter().enumerate() {
        for (k, x) in arow.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                out[i][j] = f.add(&out[i][j], &f.mul(x, y));
            }
        }
    }
    Ok(out)
}

/// Matrix times column vector.
pub fn mat_vec_mul<F: FieldCtx>(
    f: &F,
    a: &Matrix<F::El>,
    v: &[F::El],
) -> Result<Vec<F::El>, AlgError> {
    let inner = if a.is_empty() { 0 } else { a[0].len() };
    if v.len() != inner {
        return Err(AlgError::Invalid("matrix dimension mismatch".into()));
    }
    Ok(a.iter()
        .map(|row| {
            let mut acc = f.zero();
            for (x, y) in row.iter().zip(v) {
                acc = f.add(&acc, &f.mul(x, y));
            }
            acc
        })
        .collect())
}

/// An incrementally maintained reduced row-echelon basis of a row space.
/// Rows are kept fully reduced with unit pivots and sorted by pivot column,
/// so `reduce` returns canonical normal forms mod the span.
#[derive(Debug, Clone)]
pub struct RowSpan<'a, F: FieldCtx> {
    ctx: &'a F,
    width: usize,
    rows: Vec<Vec<F::El>>,
    pivots: Vec<usize>,
}

impl<'a, F: FieldCtx> RowSpan<'a, F> {
    /// Empty span of row vectors of the given width.
    pub fn new(ctx: &'a F, width: usize) -> Self {
        RowSpan {
            ctx,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Current rank.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// The reduced rows, sorted by pivot column.
    pub fn rows(&self) -> &[Vec<F::El>] {
        &self.rows
    }

    /// Pivot columns, increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The canonical reduction of a vector mod the span.
    pub fn reduce(&self, v: &[F::El]) -> Vec<F::El> {
        let f = self.ctx;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if f.is_zero(&v[p]) {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                *x = f.sub(x, &f.mul(&c, y));
            }
        }
        v
    }

    /// True when the vector lies in the span.
    pub fn contains(&self, v: &[F::El]) -> bool {
        let f = self.ctx;
        self.reduce(v).iter().all(|x| f.is_zero(x))
    }

    /// Adds a vector; returns true when the rank grew.
    pub fn insert(&mut self, v: &[F::El]) -> Result<bool, AlgError> {
        if v.len() != self.width {
            return Err(AlgError::Invalid("row width mismatch".into()));
        }
        let f = self.ctx;
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !f.is_zero(x)) else {
            return Ok(false);
        };
        let c = f.inv(&v[p])?;
        for x in v.iter_mut() {
            *x = f.mul(x, &c);
        }
        // Back-substitute into existing rows to stay fully reduced.
        for row in self.rows.iter_mut() {
            if f.is_zero(&row[p]) {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                *x = f.sub(x, &f.mul(&c, y));
            }
        }
        let at = self.pivots.partition_point(|&x| x < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        Ok(true)
    }
}

/// Reduced row-echelon form with zero rows dropped; returns pivot columns.
pub fn rref<F: FieldCtx>(f: &F, mat: &mut Matrix<F::El>) -> Result<Vec<usize>, AlgError> {
    let width = if mat.is_empty() { 0 } else { mat[0].len() };
    let mut span = RowSpan::new(f, width);
    for row in mat.iter() {
        span.insert(row)?;
    }
    let pivots = span.pivots.clone();
    *mat = span.rows;
    Ok(pivots)
}

/// Rank of a matrix.
pub fn rank<F: FieldCtx>(f: &F, mat: &Matrix<F::El>) -> Result<usize, AlgError> {
    let mut m = mat.clone();
    Ok(rref(f, &mut m)?.len())
}

/// Canonical basis of the right kernel `{v : mat v = 0}`, one row per free
/// column of the echelon form.
pub fn kernel_basis<F: FieldCtx>(
    f: &F,
    mat: &Matrix<F::El>,
) -> Result<Matrix<F::El>, AlgError> {
    let cols = if mat.is_empty() { 0 } else { mat[0].len() };
    let mut m = mat.clone();
    let pivots = rref(f, &mut m)?;
    let mut out = Vec::new();
    for free in 0..cols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = vec![f.zero(); cols];
        v[free] = f.one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = f.neg(&row[free]);
        }
        out.push(v);
    }
    Ok(out)
}

/// All reduced row-echelon matrices of full rank `dim` with `amb` columns:
/// canonical representatives of the `dim`-dimensional subspaces of the
/// ambient space, each exactly once.
pub fn echelon_subspaces(f: &Gf, amb: usize, dim: usize) -> Vec<Matrix<GfEl>> {
    if dim > amb {
        return Vec::new();
    }
    if dim == 0 {
        return vec![Vec::new()];
    }
    let els = f.elements();
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    pick_pivots(f, &els, amb, dim, 0, &mut pivots, &mut out);
    out
}

fn pick_pivots(
    f: &Gf,
    els: &[GfEl],
    amb: usize,
    dim: usize,
    start: usize,
    pivots: &mut Vec<usize>,
    out: &mut Vec<Matrix<GfEl>>,
) {
    if pivots.len() == dim {
        // Free positions: to the right of each row's pivot, off the later
        // pivot columns.
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for c in (p + 1)..amb {
                if !pivots.contains(&c) {
                    free.push((i, c));
                }
            }
        }
        let mut mat = mat_zero(f, dim, amb);
        for (i, &p) in pivots.iter().enumerate() {
            mat[i][p] = f.one();
        }
        fill_free(f, els, &free, 0, &mut mat, out);
        return;
    }
    let remaining = dim - pivots.len();
    for p in start..=(amb - remaining) {
        pivots.push(p);
        pick_pivots(f, els, amb, dim, p + 1, pivots, out);
        pivots.pop();
    }
}

fn fill_free(
    f: &Gf,
    els: &[GfEl],
    free: &[(usize, usize)],
    at: usize,
    mat: &mut Matrix<GfEl>,
    out: &mut Vec<Matrix<GfEl>>,
) {
    if at == free.len() {
        out.push(mat.clone());
        return;
    }
    let (i, c) = free[at];
    for e in els {
        mat[i][c] = e.clone();
        fill_free(f, els, free, at + 1, mat, out);
    }
    mat[i][c] = f.zero();
}

/// The Gaussian binomial: the number of `dim`-dimensional subspaces of an
/// `amb`-dimensional space over the field of order `q`, as a big integer
/// via the product formula.
pub fn gaussian_binomial(q: u64, amb: usize, dim: usize) -> num_bigint::BigInt {
    use num_bigint::BigInt;
    if dim > amb {
        return BigInt::from(0);
    }
    let q = BigInt::from(q);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for i in 0..dim {
        num *= q.pow(amb as u32) - q.pow(i as u32);
        den *= q.pow(dim as u32) - q.pow(i as u32);
    }
    num / den
}
