//! Tensor powers of a column space with two commuting actions: place
//! permutations of the factors and the derivation action of matrix units.
//! Computes the permutation commutant and the span closure of the matrix
//! action, and checks that both match the partition-sum dimension.

use crate::cartan::{irrep_dimension, partitions, GlWeight};
use crate::error::AlgError;
use crate::gf::{mat_mul, mat_zero, Matrix, RationalField};
use crate::rational::Rational;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::One;

/// Default guard on the tensor-space dimension n^d.
pub const DEFAULT_TENSOR_GUARD: usize = 100;

/// Exact endomorphism matrix of the tensor space.
pub type EndoMatrix = Matrix<Rational>;

/// The tensor space with basis indexed by maps {1..d} -> {1..n} in
/// lexicographic order (first factor most significant).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorSpace {
    n: usize,
    d: usize,
}

impl TensorSpace {
    /// Builds a tensor space; both the local dimension and the number of
    /// factors must be positive.
    pub fn new(n: usize, d: usize) -> Result<Self, AlgError> {
        if n == 0 || d == 0 {
            return Err(AlgError::Invalid(
                "tensor space needs positive dimensions".into(),
            ));
        }
        n.checked_pow(d as u32)
            .ok_or_else(|| AlgError::SizeGuard("tensor dimension overflows".into()))?;
        Ok(TensorSpace { n, d })
    }

    /// Local dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of tensor factors.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Total dimension n^d.
    pub fn dimension(&self) -> usize {
        self.n.pow(self.d as u32)
    }

    /// The basis map at an index, as 0-based letters.
    pub fn basis_map(&self, idx: usize) -> Result<Vec<usize>, AlgError> {
        if idx >= self.dimension() {
            return Err(AlgError::IndexOutOfRange);
        }
        let mut out = vec![0; self.d];
        let mut rest = idx;
        for k in (0..self.d).rev() {
            out[k] = rest % self.n;
            rest /= self.n;
        }
        Ok(out)
    }

    /// Index of a basis map.
    pub fn index_of(&self, phi: &[usize]) -> Result<usize, AlgError> {
        if phi.len() != self.d || phi.iter().any(|&v| v >= self.n) {
            return Err(AlgError::IndexOutOfRange);
        }
        Ok(phi.iter().fold(0, |acc, &v| acc * self.n + v))
    }
}

fn check_permutation(sigma: &[usize], d: usize) -> Result<(), AlgError> {
    if sigma.len() != d {
        return Err(AlgError::Invalid("permutation length mismatch".into()));
    }
    let mut seen = vec![false; d];
    for &v in sigma {
        if v >= d || seen[v] {
            return Err(AlgError::Invalid("not a permutation".into()));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Place permutation of the factors: the basis map phi goes to the map
/// psi with psi(sigma(k)) = phi(k).
pub fn permutation_action(
    space: &TensorSpace,
    sigma: &[usize],
) -> Result<EndoMatrix, AlgError> {
    check_permutation(sigma, space.d())?;
    let f = RationalField;
    let dim = space.dimension();
    let mut out = mat_zero(&f, dim, dim);
    for col in 0..dim {
        let phi = space.basis_map(col)?;
        let mut psi = vec![0; space.d()];
        for (k, &img) in sigma.iter().enumerate() {
            psi[img] = phi[k];
        }
        let row = space.index_of(&psi)?;
        out[row][col] = Rational::one();
    }
    Ok(out)
}

/// Derivation action of the matrix unit sending letter j to letter i:
/// the sum over tensor slots of applying it in one slot.
pub fn lie_action(space: &TensorSpace, i: usize, j: usize) -> Result<EndoMatrix, AlgError> {
    if i >= space.n() || j >= space.n() {
        return Err(AlgError::IndexOutOfRange);
    }
    let f = RationalField;
    let dim = space.dimension();
    let mut out = mat_zero(&f, dim, dim);
    for col in 0..dim {
        let phi = space.basis_map(col)?;
        for k in 0..space.d() {
            if phi[k] != j {
                continue;
            }
            let mut psi = phi.clone();
            psi[k] = i;
            let row = space.index_of(&psi)?;
            out[row][col] += Rational::one();
        }
    }
    Ok(out)
}

fn check_guard(n: usize, d: usize, guard: usize) -> Result<TensorSpace, AlgError> {
    let space = TensorSpace::new(n, d)?;
    if space.dimension() > guard {
        return Err(AlgError::SizeGuard(format!(
            "tensor dimension {} exceeds the guard {guard}",
            space.dimension()
        )));
    }
    Ok(space)
}

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn components(&mut self) -> usize {
        let n = self.parent.len();
        (0..n).filter(|&x| self.find(x) == x).count()
    }
}

/// Dimension of the space of matrices commuting with every place
/// permutation, with the default guard.
pub fn commutant_dimension(n: usize, d: usize) -> Result<usize, AlgError> {
    commutant_dimension_with_guard(n, d, DEFAULT_TENSOR_GUARD)
}

/// Dimension of the space of matrices commuting with every place
/// permutation. A matrix commutes with a permutation matrix exactly when
/// its entries are constant along the simultaneous row/column relabeling,
/// so the nullspace of the full commutation system is the space of
/// functions on the orbits of the pair action of the adjacent
/// transpositions; its dimension is the orbit count.
pub fn commutant_dimension_with_guard(
    n: usize,
    d: usize,
    guard: usize,
) -> Result<usize, AlgError> {
    let space = check_guard(n, d, guard)?;
    let dim = space.dimension();
    // Basis-index permutation for each adjacent transposition.
    let mut index_maps = Vec::new();
    for k in 0..d.saturating_sub(1) {
        let mut map = Vec::with_capacity(dim);
        for idx in 0..dim {
            let mut phi = space.basis_map(idx)?;
            phi.swap(k, k + 1);
            map.push(space.index_of(&phi)?);
        }
        index_maps.push(map);
    }
    let mut dsu = Dsu::new(dim * dim);
    for map in &index_maps {
        for a in 0..dim {
            for b in 0..dim {
                dsu.union(a * dim + b, map[a] * dim + map[b]);
            }
        }
    }
    Ok(dsu.components())
}

fn vectorize(m: &EndoMatrix) -> Vec<Rational> {
    m.iter().flat_map(|row| row.iter().cloned()).collect()
}

/// Dimension of the unital algebra generated by the derivation actions of
/// all matrix units, with the default guard.
pub fn enveloping_image_dimension(n: usize, d: usize) -> Result<usize, AlgError> {
    enveloping_image_dimension_with_guard(n, d, DEFAULT_TENSOR_GUARD)
}

/// Dimension of the unital span closure of the derivation actions under
/// multiplication: new products are generated degree by degree with exact
/// rank tracking until the span is stable.
pub fn enveloping_image_dimension_with_guard(
    n: usize,
    d: usize,
    guard: usize,
) -> Result<usize, AlgError> {
    let space = check_guard(n, d, guard)?;
    let dim = space.dimension();
    let f = RationalField;
    let mut gens = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            gens.push(lie_action(&space, i, j)?);
        }
    }
    let mut span = crate::gf::RowSpan::new(&f, dim * dim);
    let identity = crate::gf::mat_identity(&f, dim);
    span.insert(&vectorize(&identity))?;
    let mut worklist = vec![identity];
    while let Some(m) = worklist.pop() {
        for g in &gens {
            let prod = mat_mul(&f, &m, g)?;
            if span.insert(&vectorize(&prod))? {
                worklist.push(prod);
            }
        }
    }
    Ok(span.rank())
}

/// The partition-sum dimension: the sum over partitions of d with at most
/// n parts of the squared dimension of the corresponding irreducible.
pub fn theoretical_dimension(n: usize, d: usize) -> Result<u64, AlgError> {
    let mut total = 0u64;
    for parts in partitions(d, n, d) {
        let mut hw: GlWeight = parts;
        hw.resize(n, 0);
        let dim = irrep_dimension(&hw, n)?;
        total += dim * dim;
    }
    Ok(total)
}

/// Outcome of the commutant comparison for one (n, d).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurWeylReport {
    /// Local dimension.
    pub n: usize,
    /// Tensor factors.
    pub d: usize,
    /// Dimension of the permutation commutant.
    pub commutant_dim: usize,
    /// Dimension of the algebra generated by the derivation actions.
    pub image_dim: usize,
    /// Partition-sum dimension.
    pub theoretical_dim: u64,
    /// True when the actions commute and all three dimensions agree.
    pub pass: bool,
}

/// Checks, for one (n, d): every derivation action commutes with every
/// adjacent place transposition, and the generated algebra, the
/// permutation commutant, and the partition-sum dimension all agree.
pub fn schur_weyl_check(n: usize, d: usize) -> Result<SchurWeylReport, AlgError> {
    schur_weyl_check_with_guard(n, d, DEFAULT_TENSOR_GUARD)
}

/// Guarded variant of the commutant comparison.
pub fn schur_weyl_check_with_guard(
    n: usize,
    d: usize,
    guard: usize,
) -> Result<SchurWeylReport, AlgError> {
    let space = check_guard(n, d, guard)?;
    let f = RationalField;
    let mut commutes = true;
    let mut transpositions = Vec::new();
    for k in 0..d.saturating_sub(1) {
        let mut sigma: Vec<usize> = (0..d).collect();
        sigma.swap(k, k + 1);
        transpositions.push(permutation_action(&space, &sigma)?);
    }
    'outer: for i in 0..n {
        for j in 0..n {
            let e = lie_action(&space, i, j)?;
            for p in &transpositions {
                if mat_mul(&f, &e, p)? != mat_mul(&f, p, &e)? {
                    commutes = false;
                    break 'outer;
                }
            }
        }
    }
    let commutant_dim = commutant_dimension_with_guard(n, d, guard)?;
    let image_dim = enveloping_image_dimension_with_guard(n, d, guard)?;
    let theoretical_dim = theoretical_dimension(n, d)?;
    let pass = commutes
        && commutant_dim == image_dim
        && commutant_dim as u64 == theoretical_dim;
    Ok(SchurWeylReport {
        n,
        d,
        commutant_dim,
        image_dim,
        theoretical_dim,
        pass,
    })
}
