//! Cartan matrices, weights, roots, and Weyl-group elements.
//!
//! Weights are stored in fundamental-weight coordinates, so the pairing
//! with the i-th simple coroot is just the i-th coordinate, and the i-th
//! simple root is the i-th column of the Cartan matrix. Weyl-group
//! elements are stored as the integer matrix of their action on these
//! coordinates together with a cached length.

use crate::error::AlgError;
use crate::rational::{rat_int, Rational};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{Signed, Zero};

/// Integral weight in fundamental-weight coordinates.
pub type Weight = Vec<i64>;

/// Weight for `gl_n`: a weakly decreasing integer tuple of length `n`.
pub type GlWeight = Vec<i64>;

/// Validated Cartan matrix of finite type, plus derived root data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    rank: usize,
    a: Vec<Vec<i64>>,
    label: String,
    /// Positive roots in fundamental coordinates.
    pos_roots: Vec<Weight>,
}

impl CartanData {
    /// Validates a square integer matrix as a Cartan matrix of finite type:
    /// 2 on the diagonal, nonpositive off-diagonal entries with symmetric
    /// zero pattern, symmetrizable, and positive definite after
    /// symmetrization.
    pub fn new(a: Vec<Vec<i64>>, label: &str) -> Result<Self, AlgError> {
        let rank = a.len();
        if rank == 0 {
            return Err(AlgError::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != rank {
                return Err(AlgError::InvalidCartan("matrix not square".into()));
            }
            if row[i] != 2 {
                return Err(AlgError::InvalidCartan(format!(
                    "diagonal entry at {} is {}, expected 2",
                    i + 1,
                    row[i]
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if i != j && v > 0 {
                    return Err(AlgError::InvalidCartan(format!(
                        "positive off-diagonal entry at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return Err(AlgError::InvalidCartan(format!(
                        "zero pattern not symmetric at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let d = symmetrizer(&a)?;
        check_positive_definite(&a, &d)?;
        let mut data = CartanData {
            rank,
            a,
            label: label.to_string(),
            pos_roots: Vec::new(),
        };
        data.enumerate_positive_roots()?;
        Ok(data)
    }

    /// Type `A_n` Cartan matrix.
    pub fn type_a(n: usize) -> Result<Self, AlgError> {
        if n == 0 {
            return Err(AlgError::InvalidCartan("rank must be positive".into()));
        }
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        Self::new(a, &format!("A{n}"))
    }

    /// Type `B_2` Cartan matrix `[[2,-1],[-2,2]]`.
    pub fn type_b2() -> Result<Self, AlgError> {
        Self::new(vec![vec![2, -1], vec![-2, 2]], "B2")
    }

    /// Looks up a named type: `A1`, `A2`, `A3`, ..., or `B2`.
    pub fn by_label(label: &str) -> Result<Self, AlgError> {
        let label = label.trim();
        if label.eq_ignore_ascii_case("B2") {
            return Self::type_b2();
        }
        if let Some(rest) = label.strip_prefix(['A', 'a']) {
            if let Ok(n) = rest.parse::<usize>() {
                if n >= 1 {
                    return Self::type_a(n);
                }
            }
        }
        Err(AlgError::InvalidCartan(format!(
            "unknown type label `{label}` (expected A<n> or B2)"
        )))
    }

    /// Parses the small text format: first line is the rank, then one line
    /// per row with space-separated integer entries.
    pub fn parse_text(input: &str) -> Result<Self, AlgError> {
        let mut lines = input.lines().filter(|l| !l.trim().is_empty());
        let rank: usize = lines
            .next()
            .ok_or_else(|| AlgError::Parse("empty Cartan text".into()))?
            .trim()
            .parse()
            .map_err(|_| AlgError::Parse("first line must be the rank".into()))?;
        let mut a = Vec::with_capacity(rank);
        for _ in 0..rank {
            let line = lines
                .next()
                .ok_or_else(|| AlgError::Parse("missing matrix row".into()))?;
            let row = line
                .split_whitespace()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| AlgError::Parse(format!("bad matrix entry `{t}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if row.len() != rank {
                return Err(AlgError::Parse("row length does not match rank".into()));
            }
            a.push(row);
        }
        if lines.next().is_some() {
            return Err(AlgError::Parse("trailing lines after matrix".into()));
        }
        Self::new(a, "custom")
    }

    /// Rank (number of simple roots).
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry `a[i][j]` of the Cartan matrix.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    /// Human-readable label.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// The i-th simple root in fundamental coordinates (i-th column).
    pub fn simple_root(&self, i: usize) -> Result<Weight, AlgError> {
        if i >= self.rank {
            return Err(AlgError::IndexOutOfRange);
        }
        Ok((0..self.rank).map(|j| self.a[j][i]).collect())
    }

    /// Pairing of a weight with the i-th simple coroot (the i-th
    /// fundamental coordinate).
    pub fn pairing(&self, lambda: &Weight, i: usize) -> Result<i64, AlgError> {
        if i >= self.rank || lambda.len() != self.rank {
            return Err(AlgError::IndexOutOfRange);
        }
        Ok(lambda[i])
    }

    /// Simple reflection `s_i` applied to a weight.
    pub fn reflect(&self, i: usize, lambda: &Weight) -> Result<Weight, AlgError> {
        if i >= self.rank || lambda.len() != self.rank {
            return Err(AlgError::IndexOutOfRange);
        }
        let alpha = self.simple_root(i)?;
        Ok(lambda
            .iter()
            .zip(&alpha)
            .map(|(&x, &r)| x - lambda[i] * r)
            .collect())
    }

    /// Enumerates the positive roots by closing the simple roots under all
    /// simple reflections and keeping the positive orbit members. Tracks
    /// simple-root coordinates for the positivity test.
    fn enumerate_positive_roots(&mut self) -> Result<(), AlgError> {
        // Reflection on simple-root coordinates: s_i(c) = c - (A c)_i e_i.
        let reflect_coords = |i: usize, c: &[i64]| -> Vec<i64> {
            let pairing: i64 = (0..self.rank).map(|j| self.a[i][j] * c[j]).sum();
            let mut out = c.to_vec();
            out[i] -= pairing;
            out
        };
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: Vec<Vec<i64>> = Vec::new();
        for i in 0..self.rank {
            let mut e = vec![0i64; self.rank];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push(e);
            }
        }
        let guard = 1usize << 16;
        while let Some(c) = queue.pop() {
            if seen.len() > guard {
                return Err(AlgError::InvalidCartan(
                    "root system too large; matrix is probably not finite type".into(),
                ));
            }
            for i in 0..self.rank {
                let r = reflect_coords(i, &c);
                if seen.insert(r.clone()) {
                    queue.push(r);
                }
            }
        }
        for c in seen {
            if c.iter().all(|&x| x >= 0) && c.iter().any(|&x| x != 0) {
                // Fundamental coordinates of the root: sum of columns.
                let fund: Weight = (0..self.rank)
                    .map(|j| (0..self.rank).map(|k| self.a[j][k] * c[k]).sum())
                    .collect();
                self.pos_roots.push(fund);
            }
        }
        Ok(())
    }

    /// Positive roots in fundamental coordinates.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.pos_roots
    }

    /// Order of the braid relation between `s_i` and `s_j`: 2, 3, 4, or 6
    /// by the product `a[i][j] * a[j][i]` (0, 1, 2, 3).
    pub fn braid_order(&self, i: usize, j: usize) -> Result<usize, AlgError> {
        if i >= self.rank || j >= self.rank || i == j {
            return Err(AlgError::IndexOutOfRange);
        }
        Ok(match self.a[i][j] * self.a[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            _ => {
                return Err(AlgError::InvalidCartan(
                    "off-diagonal product exceeds 3".into(),
                ))
            }
        })
    }

    /// Identity Weyl-group element.
    pub fn identity(&self) -> WeylElement {
        let mut mat = vec![vec![0i64; self.rank]; self.rank];
        for (i, row) in mat.iter_mut().enumerate() {
            row[i] = 1;
        }
        WeylElement { len: 0, mat }
    }

    /// The simple reflection `s_i` as a Weyl-group element.
    pub fn generator(&self, i: usize) -> Result<WeylElement, AlgError> {
        if i >= self.rank {
            return Err(AlgError::IndexOutOfRange);
        }
        let alpha = self.simple_root(i)?;
        let mut mat = vec![vec![0i64; self.rank]; self.rank];
        for (j, row) in mat.iter_mut().enumerate() {
            row[j] = 1;
            row[i] -= alpha[j];
        }
        let mut w = WeylElement { len: 0, mat };
        w.len = self.length_of_matrix(&w);
        Ok(w)
    }

    /// Product `u * v` (first apply `v`, then `u`).
    pub fn mul(&self, u: &WeylElement, v: &WeylElement) -> WeylElement {
        let n = self.rank;
        let mut mat = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0i64;
                for (k, vrow) in v.mat.iter().enumerate() {
                    acc += u.mat[i][k] * vrow[j];
                }
                mat[i][j] = acc;
            }
        }
        let mut w = WeylElement { len: 0, mat };
        w.len = self.length_of_matrix(&w);
        w
    }

    /// Builds the element `s_{word[0]} * s_{word[1]} * ...`.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement, AlgError> {
        let mut w = self.identity();
        for &i in word {
            w = self.mul(&w, &self.generator(i)?);
        }
        Ok(w)
    }

    /// Coxeter length: the number of positive roots sent to negative roots.
    /// The image of a root is a root, so it is positive exactly when it is
    /// in the positive-root list.
    fn length_of_matrix(&self, w: &WeylElement) -> usize {
        self.pos_roots
            .iter()
            .filter(|fund| {
                let image = w.apply(fund);
                !self.pos_roots.iter().any(|r| *r == image)
            })
            .count()
    }

    /// Coxeter length of an element.
    pub fn length(&self, w: &WeylElement) -> usize {
        w.len
    }

    /// Lexicographically smallest reduced word, built by left descent
    /// peeling: repeatedly take the smallest `i` with
    /// `length(s_i w) < length(w)`.
    pub fn reduced_word(&self, w: &WeylElement) -> Result<Vec<usize>, AlgError> {
        let mut word = Vec::with_capacity(w.len);
        let mut cur = w.clone();
        while cur.len > 0 {
            let mut found = false;
            for i in 0..self.rank {
                let next = self.mul(&self.generator(i)?, &cur);
                if next.len < cur.len {
                    word.push(i);
                    cur = next;
                    found = true;
                    break;
                }
            }
            if !found {
                return Err(AlgError::Invalid(
                    "no descent found; Weyl element data is inconsistent".into(),
                ));
            }
        }
        Ok(word)
    }

    /// All Weyl-group elements, found by closure under right multiplication
    /// by generators. Sorted by (length, matrix) for determinism.
    pub fn all_elements(&self) -> Result<Vec<WeylElement>, AlgError> {
        let guard = 1usize << 16;
        let mut seen: BTreeMap<Vec<Vec<i64>>, WeylElement> = BTreeMap::new();
        let id = self.identity();
        let mut queue = vec![id.clone()];
        seen.insert(id.mat.clone(), id);
        while let Some(w) = queue.pop() {
            if seen.len() > guard {
                return Err(AlgError::SizeGuard("Weyl group is too large".into()));
            }
            for i in 0..self.rank {
                let next = self.mul(&w, &self.generator(i)?);
                if !seen.contains_key(&next.mat) {
                    seen.insert(next.mat.clone(), next.clone());
                    queue.push(next);
                }
            }
        }
        let mut out: Vec<WeylElement> = seen.into_values().collect();
        out.sort();
        Ok(out)
    }

    /// The longest element.
    pub fn longest_element(&self) -> Result<WeylElement, AlgError> {
        self.all_elements()?
            .into_iter()
            .max_by_key(|w| w.len)
            .ok_or_else(|| AlgError::Invalid("empty Weyl group".into()))
    }
}

/// Computes positive symmetrizer entries `d_i` with `d_i a_ij = d_j a_ji`
/// by propagating along the Dynkin graph.
fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<Rational>, AlgError> {
    let n = a.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(rat_int(1));
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("assigned before push");
            for j in 0..n {
                if i == j || a[i][j] == 0 {
                    continue;
                }
                // d_j = d_i * a_ij / a_ji.
                let dj = di.clone() * rat_int(a[i][j]) / rat_int(a[j][i]);
                match &d[j] {
                    Some(old) => {
                        if *old != dj {
                            return Err(AlgError::InvalidCartan(
                                "matrix is not symmetrizable".into(),
                            ));
                        }
                    }
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                }
            }
        }
    }
    let d: Vec<Rational> = d.into_iter().map(|x| x.expect("all assigned")).collect();
    if d.iter().any(|x| !x.is_positive()) {
        return Err(AlgError::InvalidCartan(
            "symmetrizer is not positive".into(),
        ));
    }
    Ok(d)
}

/// Checks positive definiteness of `diag(d) * a` via leading principal
/// minors, exactly over the rationals.
fn check_positive_definite(a: &[Vec<i64>], d: &[Rational]) -> Result<(), AlgError> {
    let n = a.len();
    let s: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| d[i].clone() * rat_int(a[i][j])).collect())
        .collect();
    for k in 1..=n {
        let minor = determinant(&s, k);
        if !minor.is_positive() {
            return Err(AlgError::InvalidCartan(
                "symmetrized matrix is not positive definite".into(),
            ));
        }
    }
    Ok(())
}

/// Determinant of the leading `k x k` block by fraction-free-ish Gaussian
/// elimination over exact rationals.
fn determinant(s: &[Vec<Rational>], k: usize) -> Rational {
    let mut m: Vec<Vec<Rational>> = s[..k].iter().map(|row| row[..k].to_vec()).collect();
    let mut det = rat_int(1);
    for col in 0..k {
        let pivot = (col..k).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else {
            return Rational::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= pv.clone();
        for r in col + 1..k {
            let factor = m[r][col].clone() / pv.clone();
            for c in col..k {
                let sub = factor.clone() * m[col][c].clone();
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Weyl-group element: the matrix of its action on fundamental-weight
/// coordinates, with the Coxeter length cached. Ordering is by
/// (length, matrix) so sorted listings are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct WeylElement {
    len: usize,
    mat: Vec<Vec<i64>>,
}

impl WeylElement {
    /// Applies the element to a weight in fundamental coordinates.
    pub fn apply(&self, lambda: &Weight) -> Weight {
        self.mat
            .iter()
            .map(|row| row.iter().zip(lambda).map(|(&m, &x)| m * x).sum())
            .collect()
    }

    /// Cached Coxeter length.
    pub fn len(&self) -> usize {
        self.len
    }

    /// True for the identity element.
    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// The underlying action matrix (rows act on column vectors).
    pub fn matrix(&self) -> &Vec<Vec<i64>> {
        &self.mat
    }
}

/// Checks that a gl weight is weakly decreasing.
pub fn check_partition(w: &GlWeight) -> Result<(), AlgError> {
    if w.windows(2).any(|p| p[0] < p[1]) {
        return Err(AlgError::NotAPartition);
    }
    Ok(())
}

/// Dimension of the irreducible polynomial `gl_n` representation with
/// highest weight `hw` (a partition padded to length `n`): the number of
/// semistandard tableaux of that shape with entries in `1..=n`.
pub fn irrep_dimension(hw: &GlWeight, n: usize) -> Result<u64, AlgError> {
    check_partition(hw)?;
    if hw.len() != n {
        return Err(AlgError::Invalid(
            "highest weight length must equal n".into(),
        ));
    }
    if hw.iter().any(|&x| x < 0) {
        return Err(AlgError::Invalid(
            "polynomial representations need nonnegative parts".into(),
        ));
    }
    let shape: Vec<usize> = hw.iter().map(|&x| x as usize).collect();
    Ok(count_ssyt(&shape, n, None))
}

/// Kostka number: semistandard tableaux of shape `shape` and content
/// `content` (content[i] = multiplicity of entry i+1).
pub fn weight_multiplicity(shape: &GlWeight, content: &[i64]) -> Result<u64, AlgError> {
    check_partition(shape)?;
    if shape.iter().any(|&x| x < 0) || content.iter().any(|&x| x < 0) {
        return Err(AlgError::Invalid("negative multiplicities".into()));
    }
    let total: i64 = shape.iter().sum();
    let ctotal: i64 = content.iter().sum();
    if total != ctotal {
        return Ok(0);
    }
    let s: Vec<usize> = shape.iter().map(|&x| x as usize).collect();
    let c: Vec<usize> = content.iter().map(|&x| x as usize).collect();
    Ok(count_ssyt(&s, content.len(), Some(&c)))
}

/// Counts semistandard tableaux by backtracking over cells in row-major
/// order: rows weakly increase, columns strictly increase, entries in
/// `1..=n`, optionally with exact content.
fn count_ssyt(shape: &[usize], n: usize, content: Option<&[usize]>) -> u64 {
    let rows: Vec<usize> = shape.iter().copied().filter(|&c| c > 0).collect();
    if rows.is_empty() {
        return 1;
    }
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&c| vec![0; c]).collect();
    let mut remaining: Vec<usize> = match content {
        Some(c) => c.to_vec(),
        None => vec![usize::MAX; n],
    };
    fn rec(
        grid: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        n: usize,
        r: usize,
        c: usize,
    ) -> u64 {
        if r == grid.len() {
            return 1;
        }
        let (nr, nc) = if c + 1 < grid[r].len() {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let lo = {
            let mut lo = 1;
            if c > 0 {
                lo = lo.max(grid[r][c - 1]);
            }
            if r > 0 {
                lo = lo.max(grid[r - 1][c] + 1);
            }
            lo
        };
        let mut total = 0;
        for v in lo..=n {
            if remaining[v - 1] == 0 {
                continue;
            }
            grid[r][c] = v;
            if remaining[v - 1] != usize::MAX {
                remaining[v - 1] -= 1;
            }
            total += rec(grid, remaining, n, nr, nc);
            if remaining[v - 1] != usize::MAX {
                remaining[v - 1] += 1;
            }
            grid[r][c] = 0;
        }
        total
    }
    rec(&mut grid, &mut remaining, n, 0, 0)
}

/// All partitions of `d` with at most `parts` parts, each part at most
/// `max_part`, in lexicographically decreasing order.
pub fn partitions(d: usize, parts: usize, max_part: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur: Vec<i64> = Vec::new();
    fn rec(
        remaining: usize,
        slots: usize,
        cap: usize,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        if slots == 0 {
            return;
        }
        let hi = cap.min(remaining);
        for v in (1..=hi).rev() {
            cur.push(v as i64);
            rec(remaining - v, slots - 1, v, cur, out);
            cur.pop();
        }
    }
    rec(d, parts, max_part, &mut cur, &mut out);
    out
}

/// Conjugate (transpose) of a partition given as weakly decreasing parts.
pub fn conjugate_partition(parts: &[usize]) -> Vec<usize> {
    let max = parts.iter().copied().max().unwrap_or(0);
    (1..=max)
        .map(|i| parts.iter().filter(|&&p| p >= i).count())
        .collect()
}

/// Compositions of `d` into exactly `n` nonnegative parts, lexicographic.
pub fn compositions(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(remaining: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if slots == 1 {
            cur.push(remaining);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for v in 0..=remaining {
            cur.push(v);
            rec(remaining - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(d, n, &mut cur, &mut out);
    out
}
