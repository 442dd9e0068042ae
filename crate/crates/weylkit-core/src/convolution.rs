//! Finite-set convolution: kernels on products of labeled finite sets with
//! first-class supports, the algebra of pairs over a common image, its
//! block decomposition into one full matrix algebra per fiber, and the
//! module action on fiber function spaces.

use crate::error::AlgError;
use crate::gf::{RationalField, RowSpan};
use crate::rational::Rational;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

/// An ordered finite set with unique labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledSet {
    labels: Vec<String>,
}

impl LabeledSet {
    /// Builds a set; labels must be pairwise distinct.
    pub fn new(labels: Vec<String>) -> Result<Self, AlgError> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(AlgError::Invalid(format!("duplicate label {l}")));
            }
        }
        Ok(LabeledSet { labels })
    }

    /// The set `{1, 2, ..., n}` with decimal labels.
    pub fn numbered(n: usize) -> Self {
        LabeledSet {
            labels: (1..=n).map(|i| i.to_string()).collect(),
        }
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// True when empty.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// The labels in order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of a label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// A total map between labeled sets, stored as target indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMap {
    source: LabeledSet,
    target: LabeledSet,
    assignment: Vec<usize>,
}

impl FiniteMap {
    /// Builds a map; every source element needs an in-range image.
    pub fn new(
        source: LabeledSet,
        target: LabeledSet,
        assignment: Vec<usize>,
    ) -> Result<Self, AlgError> {
        if assignment.len() != source.len() {
            return Err(AlgError::Invalid("assignment length mismatch".into()));
        }
        if assignment.iter().any(|&x| x >= target.len()) {
            return Err(AlgError::IndexOutOfRange);
        }
        Ok(FiniteMap {
            source,
            target,
            assignment,
        })
    }

    /// The source set.
    pub fn source(&self) -> &LabeledSet {
        &self.source
    }

    /// The target set.
    pub fn target(&self) -> &LabeledSet {
        &self.target
    }

    /// Image of a source index.
    pub fn apply(&self, i: usize) -> Result<usize, AlgError> {
        self.assignment
            .get(i)
            .copied()
            .ok_or(AlgError::IndexOutOfRange)
    }

    /// The assignment vector.
    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Source indices mapping to a target index, in order.
    pub fn fiber(&self, x: usize) -> Result<Vec<usize>, AlgError> {
        if x >= self.target.len() {
            return Err(AlgError::IndexOutOfRange);
        }
        Ok((0..self.source.len())
            .filter(|&i| self.assignment[i] == x)
            .collect())
    }
}

/// A kernel on a product of two labeled sets: a declared support and
/// rational values vanishing outside it. Zero values inside the support are
/// allowed (the support is geometry, the values are the function).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    rows: LabeledSet,
    cols: LabeledSet,
    support: BTreeSet<(usize, usize)>,
    values: BTreeMap<(usize, usize), Rational>,
}

impl Kernel {
    /// Builds a kernel, validating index ranges and support containment.
    pub fn new(
        rows: LabeledSet,
        cols: LabeledSet,
        support: BTreeSet<(usize, usize)>,
        values: BTreeMap<(usize, usize), Rational>,
    ) -> Result<Self, AlgError> {
        for &(i, j) in &support {
            if i >= rows.len() || j >= cols.len() {
                return Err(AlgError::IndexOutOfRange);
            }
        }
        let mut kept = BTreeMap::new();
        for (pos, v) in values {
            if !support.contains(&pos) {
                return Err(AlgError::Invalid(
                    "kernel value outside declared support".into(),
                ));
            }
            if !v.is_zero() {
                kept.insert(pos, v);
            }
        }
        Ok(Kernel {
            rows,
            cols,
            support,
            values: kept,
        })
    }

    /// Builds a kernel from dense entries; the support is the set of
    /// nonzero positions.
    pub fn from_dense(
        rows: LabeledSet,
        cols: LabeledSet,
        entries: &[Vec<Rational>],
    ) -> Result<Self, AlgError> {
        if entries.len() != rows.len() || entries.iter().any(|r| r.len() != cols.len()) {
            return Err(AlgError::Invalid("dense entry shape mismatch".into()));
        }
        let mut support = BTreeSet::new();
        let mut values = BTreeMap::new();
        for (i, row) in entries.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    support.insert((i, j));
                    values.insert((i, j), v.clone());
                }
            }
        }
        Ok(Kernel {
            rows,
            cols,
            support,
            values,
        })
    }

    /// The diagonal identity kernel on a set.
    pub fn identity(set: &LabeledSet) -> Self {
        let support: BTreeSet<_> = (0..set.len()).map(|i| (i, i)).collect();
        let values = support
            .iter()
            .map(|&pos| (pos, Rational::one()))
            .collect();
        Kernel {
            rows: set.clone(),
            cols: set.clone(),
            support,
            values,
        }
    }

    /// The graph of a map as a 0/1 kernel on source x target.
    pub fn graph(map: &FiniteMap) -> Self {
        let support: BTreeSet<_> = map
            .assignment()
            .iter()
            .enumerate()
            .map(|(i, &x)| (i, x))
            .collect();
        let values = support
            .iter()
            .map(|&pos| (pos, Rational::one()))
            .collect();
        Kernel {
            rows: map.source().clone(),
            cols: map.target().clone(),
            support,
            values,
        }
    }

    /// Row set.
    pub fn rows(&self) -> &LabeledSet {
        &self.rows
    }

    /// Column set.
    pub fn cols(&self) -> &LabeledSet {
        &self.cols
    }

    /// The declared support.
    pub fn support(&self) -> &BTreeSet<(usize, usize)> {
        &self.support
    }

    /// Value at a position (zero off the support).
    pub fn value(&self, i: usize, j: usize) -> Rational {
        self.values.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Dense matrix of values.
    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols.len()]; self.rows.len()];
        for (&(i, j), v) in &self.values {
            out[i][j] = v.clone();
        }
        out
    }

    /// Entrywise sum; supports unite.
    pub fn add(&self, other: &Self) -> Result<Self, AlgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgError::Invalid("kernel shape mismatch".into()));
        }
        let support: BTreeSet<_> = self.support.union(&other.support).cloned().collect();
        let mut values = BTreeMap::new();
        for &pos in &support {
            let v = self.value(pos.0, pos.1) + other.value(pos.0, pos.1);
            if !v.is_zero() {
                values.insert(pos, v);
            }
        }
        Ok(Kernel {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            support,
            values,
        })
    }

    /// Scalar multiple; the declared support is kept.
    pub fn scale(&self, r: &Rational) -> Self {
        let mut values = BTreeMap::new();
        if !r.is_zero() {
            for (&pos, v) in &self.values {
                values.insert(pos, v * r);
            }
        }
        Kernel {
            rows: self.rows.clone(),
            cols: self.cols.clone(),
            support: self.support.clone(),
            values,
        }
    }

    /// True when the declared support is contained in the given pair set.
    pub fn supported_within(&self, pairs: &BTreeSet<(usize, usize)>) -> bool {
        self.support.is_subset(pairs)
    }
}

/// Convolution: values compose like matrices, supports compose like
/// correspondences. Requires a shared middle set.
pub fn convolve(f: &Kernel, g: &Kernel) -> Result<Kernel, AlgError> {
    if f.cols != g.rows {
        return Err(AlgError::Invalid("middle set mismatch".into()));
    }
    // Support: set-theoretic composition of the declared supports.
    let mut by_mid: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(m2, m3) in &g.support {
        by_mid.entry(m2).or_default().push(m3);
    }
    let mut support = BTreeSet::new();
    for &(m1, m2) in &f.support {
        if let Some(thirds) = by_mid.get(&m2) {
            for &m3 in thirds {
                support.insert((m1, m3));
            }
        }
    }
    let mut values: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
    for (&(m1, m2), a) in &f.values {
        for (&(gm2, m3), b) in &g.values {
            if gm2 != m2 {
                continue;
            }
            let entry = values.entry((m1, m3)).or_insert_with(Rational::zero);
            *entry = &*entry + &(a * b);
        }
    }
    values.retain(|_, v| !v.is_zero());
    Kernel::new(f.rows.clone(), g.cols.clone(), support, values)
}

/// One matrix block of the pair algebra: the square of a fiber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SteinbergBlock {
    /// Target index the fiber sits over.
    pub target: usize,
    /// Target label.
    pub label: String,
    /// Source indices of the fiber, in order.
    pub fiber: Vec<usize>,
}

/// The kernel algebra supported on the pairs with a common image: a direct
/// sum of one full matrix algebra per fiber.
#[derive(Debug, Clone)]
pub struct SteinbergAlgebra {
    map: FiniteMap,
    z_support: BTreeSet<(usize, usize)>,
    blocks: Vec<SteinbergBlock>,
}

/// Builds the pair algebra of a map.
pub fn steinberg_algebra(map: &FiniteMap) -> SteinbergAlgebra {
    let mut z_support = BTreeSet::new();
    let n = map.source().len();
    for i in 0..n {
        for j in 0..n {
            if map.assignment()[i] == map.assignment()[j] {
                z_support.insert((i, j));
            }
        }
    }
    let blocks = (0..map.target().len())
        .map(|x| SteinbergBlock {
            target: x,
            label: map.target().labels()[x].clone(),
            fiber: map.fiber(x).expect("index in range"),
        })
        .collect();
    SteinbergAlgebra {
        map: map.clone(),
        z_support,
        blocks,
    }
}

impl SteinbergAlgebra {
    /// The underlying map.
    pub fn map(&self) -> &FiniteMap {
        &self.map
    }

    /// The pair support: all (i, j) with a common image.
    pub fn z_support(&self) -> &BTreeSet<(usize, usize)> {
        &self.z_support
    }

    /// The blocks, one per target element.
    pub fn blocks(&self) -> &[SteinbergBlock] {
        &self.blocks
    }

    /// Total dimension: the sum of squared fiber sizes.
    pub fn dimension(&self) -> usize {
        self.blocks.iter().map(|b| b.fiber.len() * b.fiber.len()).sum()
    }

    /// The global unit: the diagonal indicator.
    pub fn unit(&self) -> Kernel {
        Kernel::identity(self.map.source())
    }

    /// The unit of one block: the diagonal indicator of its fiber.
    pub fn block_unit(&self, x: usize) -> Result<Kernel, AlgError> {
        let fiber = self.map.fiber(x)?;
        let support: BTreeSet<_> = fiber.iter().map(|&i| (i, i)).collect();
        let values = support
            .iter()
            .map(|&pos| (pos, Rational::one()))
            .collect();
        Kernel::new(
            self.map.source().clone(),
            self.map.source().clone(),
            support,
            values,
        )
    }

    /// The matrix unit of a block: 1 at the (a, b) fiber position.
    pub fn matrix_unit(&self, x: usize, a: usize, b: usize) -> Result<Kernel, AlgError> {
        let fiber = self.map.fiber(x)?;
        if a >= fiber.len() || b >= fiber.len() {
            return Err(AlgError::IndexOutOfRange);
        }
        let pos = (fiber[a], fiber[b]);
        let mut support = BTreeSet::new();
        support.insert(pos);
        let mut values = BTreeMap::new();
        values.insert(pos, Rational::one());
        Kernel::new(
            self.map.source().clone(),
            self.map.source().clone(),
            support,
            values,
        )
    }

    /// Basis of the algebra: every matrix unit of every block, block by
    /// block in row-major order. Its length is the dimension.
    pub fn basis(&self) -> Result<Vec<(usize, Kernel)>, AlgError> {
        let mut out = Vec::new();
        for block in &self.blocks {
            let k = block.fiber.len();
            for a in 0..k {
                for b in 0..k {
                    out.push((block.target, self.matrix_unit(block.target, a, b)?));
                }
            }
        }
        Ok(out)
    }

    /// True when the kernel lives on the pair support of this algebra.
    pub fn contains(&self, k: &Kernel) -> bool {
        *k.rows() == *self.map.source()
            && *k.cols() == *self.map.source()
            && k.supported_within(&self.z_support)
    }
}

/// Action of a pair-supported kernel on a function on one fiber, given by
/// the label of the target element.
pub fn fiber_module_action(
    map: &FiniteMap,
    x_label: &str,
    a: &Kernel,
    v: &[Rational],
) -> Result<Vec<Rational>, AlgError> {
    let Some(x) = map.target().index_of(x_label) else {
        return Err(AlgError::Invalid(format!(
            "{x_label} is not an element of the target set"
        )));
    };
    let alg = steinberg_algebra(map);
    if !alg.contains(a) {
        return Err(AlgError::Invalid(
            "kernel is not supported on the pair set".into(),
        ));
    }
    let fiber = map.fiber(x)?;
    if v.len() != fiber.len() {
        return Err(AlgError::Invalid("vector length differs from fiber".into()));
    }
    Ok(fiber
        .iter()
        .map(|&i| {
            let mut acc = Rational::zero();
            for (&j, c) in fiber.iter().zip(v) {
                acc += a.value(i, j) * c;
            }
            acc
        })
        .collect())
}

/// Outcome of verifying the block structure and fiber actions of one map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvolutionReport {
    /// Source size.
    pub source_size: usize,
    /// Target size.
    pub target_size: usize,
    /// The assignment vector.
    pub assignment: Vec<usize>,
    /// Algebra dimension: sum of squared fiber sizes.
    pub dimension: usize,
    /// True when every structural check held.
    pub pass: bool,
    /// First failing check, if any.
    pub failure: Option<String>,
}

/// Verifies, for one map: the pair support matches the block decomposition,
/// matrix units multiply like matrix units (full matrix algebra per block,
/// blocks mutually annihilating), block units are orthogonal idempotents
/// summing to the global unit, and the action on each fiber's function
/// space is a bijection onto its endomorphisms (rank check).
pub fn verify_steinberg(map: &FiniteMap) -> Result<ConvolutionReport, AlgError> {
    let alg = steinberg_algebra(map);
    let mut failure: Option<String> = None;
    let mut check = |ok: bool, what: &str| {
        if !ok && failure.is_none() {
            failure = Some(what.to_string());
        }
    };

    // Dimension counts agree.
    check(
        alg.z_support().len() == alg.dimension(),
        "pair count differs from block dimension",
    );

    // Block units: orthogonal idempotents summing to the unit.
    let unit = alg.unit();
    let mut sum = Kernel::new(
        map.source().clone(),
        map.source().clone(),
        BTreeSet::new(),
        BTreeMap::new(),
    )?;
    for x in 0..map.target().len() {
        let ex = alg.block_unit(x)?;
        sum = sum.add(&ex)?;
        for y in 0..map.target().len() {
            let ey = alg.block_unit(y)?;
            let prod = convolve(&ex, &ey)?;
            let expected = if x == y {
                ex.clone()
            } else {
                ex.scale(&Rational::zero())
            };
            check(
                prod.to_dense() == expected.to_dense(),
                "block units are not orthogonal idempotents",
            );
        }
    }
    check(
        sum.to_dense() == unit.to_dense(),
        "block units do not sum to the unit",
    );

    // Matrix-unit structure constants, including cross-block annihilation,
    // and closure of the support.
    let basis = alg.basis()?;
    check(basis.len() == alg.dimension(), "basis size mismatch");
    for (bx, ex) in &basis {
        check(alg.contains(ex), "basis kernel leaves the pair support");
        check(
            convolve(&unit, ex)?.to_dense() == ex.to_dense()
                && convolve(ex, &unit)?.to_dense() == ex.to_dense(),
            "unit is not an identity",
        );
        for (by, ey) in &basis {
            let prod = convolve(ex, ey)?;
            check(alg.contains(&prod), "product leaves the pair support");
            let expected = if bx == by {
                // Within a block: E_{ab} E_{cd} = [b=c] E_{ad}.
                let (a, b) = single_position(ex, map, *bx)?;
                let (c, d) = single_position(ey, map, *by)?;
                if b == c {
                    alg.matrix_unit(*bx, a, d)?.to_dense()
                } else {
                    vec![vec![Rational::zero(); map.source().len()]; map.source().len()]
                }
            } else {
                vec![vec![Rational::zero(); map.source().len()]; map.source().len()]
            };
            check(
                prod.to_dense() == expected,
                "matrix units do not multiply like matrix units",
            );
        }
    }

    // Fiber actions: the x-block acts as the full endomorphism algebra of
    // the fiber function space, other blocks act by zero.
    let f = RationalField;
    for block in alg.blocks() {
        let k = block.fiber.len();
        let mut span = RowSpan::new(&f, k * k);
        for (bx, e) in &basis {
            // Vectorize the action matrix on this fiber.
            let mut action = Vec::with_capacity(k * k);
            for col in 0..k {
                let mut v = vec![Rational::zero(); k];
                v[col] = Rational::one();
                let image = fiber_module_action(map, &block.label, e, &v)?;
                action.extend(image);
            }
            let zero_action = action.iter().all(|c| c.is_zero());
            if *bx == block.target {
                span.insert(&action)?;
            } else {
                check(zero_action, "foreign block acts nonzero on a fiber");
            }
        }
        check(
            span.rank() == k * k,
            "fiber action is not onto the endomorphism algebra",
        );
    }

    let pass = failure.is_none();
    Ok(ConvolutionReport {
        source_size: map.source().len(),
        target_size: map.target().len(),
        assignment: map.assignment().to_vec(),
        dimension: alg.dimension(),
        pass,
        failure,
    })
}

/// The fiber-relative position of a matrix unit's single support pair.
fn single_position(
    e: &Kernel,
    map: &FiniteMap,
    block: usize,
) -> Result<(usize, usize), AlgError> {
    let fiber = map.fiber(block)?;
    let &(i, j) = e
        .support()
        .iter()
        .next()
        .ok_or_else(|| AlgError::Invalid("empty matrix unit".into()))?;
    let a = fiber
        .iter()
        .position(|&v| v == i)
        .ok_or(AlgError::IndexOutOfRange)?;
    let b = fiber
        .iter()
        .position(|&v| v == j)
        .ok_or(AlgError::IndexOutOfRange)?;
    Ok((a, b))
}
