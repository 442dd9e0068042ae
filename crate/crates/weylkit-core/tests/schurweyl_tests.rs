use weylkit_core::cartan::{partitions, weight_multiplicity};
use weylkit_core::error::AlgError;
use weylkit_core::gf::{mat_identity, mat_mul, RationalField, RowSpan};
use weylkit_core::rational::{rat_int, Rational};
use weylkit_core::schurweyl::{
    commutant_dimension, commutant_dimension_with_guard, enveloping_image_dimension,
    lie_action, permutation_action, schur_weyl_check, theoretical_dimension, EndoMatrix,
    TensorSpace,
};

fn flat(m: &EndoMatrix) -> Vec<Rational> {
    m.iter().flat_map(|row| row.iter().cloned()).collect()
}

fn all_perms(d: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            rec(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    let mut cur: Vec<usize> = (0..d).collect();
    let mut out = Vec::new();
    rec(d, &mut cur, &mut out);
    out
}

/// Rows of the linear system "X commutes with g", one row per matrix entry
/// of g*X - X*g, in the n*n unknowns X[k][c] flattened row-major.
fn commutation_constraints(g: &EndoMatrix) -> Vec<Vec<Rational>> {
    let n = g.len();
    let mut rows = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let mut row = vec![rat_int(0); n * n];
            for k in 0..n {
                let cur = row[k * n + c].clone();
                row[k * n + c] = cur + g[r][k].clone();
                let cur = row[r * n + k].clone();
                row[r * n + k] = cur - g[k][c].clone();
            }
            rows.push(row);
        }
    }
    rows
}

/// Dimension of {X : X commutes with every generator}, by exact rank of
/// the stacked constraint rows.
fn joint_commutant_dimension(gens: &[EndoMatrix]) -> usize {
    let f = RationalField;
    let n = gens[0].len();
    let mut span = RowSpan::new(&f, n * n);
    for g in gens {
        for row in commutation_constraints(g) {
            span.insert(&row).unwrap();
        }
    }
    n * n - span.rank()
}

fn adjacent_transposition_matrices(space: &TensorSpace) -> Vec<EndoMatrix> {
    let d = space.d();
    let mut out = Vec::new();
    for k in 0..d - 1 {
        let mut sigma: Vec<usize> = (0..d).collect();
        sigma.swap(k, k + 1);
        out.push(permutation_action(space, &sigma).unwrap());
    }
    out
}

fn lie_generators(space: &TensorSpace) -> Vec<EndoMatrix> {
    let n = space.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            out.push(lie_action(space, i, j).unwrap());
        }
    }
    out
}

#[test]
fn tensor_space_basics() {
    let space = TensorSpace::new(2, 2).unwrap();
    assert_eq!(space.dimension(), 4);
    let maps: Vec<Vec<usize>> = (0..4).map(|i| space.basis_map(i).unwrap()).collect();
    assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    for (idx, phi) in maps.iter().enumerate() {
        assert_eq!(space.index_of(phi).unwrap(), idx);
    }
    assert!(space.basis_map(4).is_err());
    assert!(space.index_of(&[0]).is_err());
    assert!(space.index_of(&[0, 2]).is_err());
    assert!(TensorSpace::new(0, 2).is_err());
    assert!(TensorSpace::new(2, 0).is_err());
    assert_eq!(TensorSpace::new(3, 3).unwrap().dimension(), 27);
}

#[test]
fn permutation_action_goldens() {
    let space = TensorSpace::new(2, 2).unwrap();
    let f = RationalField;
    let id: Vec<usize> = vec![0, 1];
    assert_eq!(
        permutation_action(&space, &id).unwrap(),
        mat_identity(&f, 4)
    );
    // The transposition swaps the two factors: index 1 = (0,1) goes to
    // index 2 = (1,0) and back, while (0,0) and (1,1) stay put.
    let swap = permutation_action(&space, &[1, 0]).unwrap();
    let mut expected = mat_identity(&f, 4);
    expected[1][1] = rat_int(0);
    expected[2][2] = rat_int(0);
    expected[2][1] = rat_int(1);
    expected[1][2] = rat_int(1);
    assert_eq!(swap, expected);
    assert!(permutation_action(&space, &[0, 0]).is_err());
    assert!(permutation_action(&space, &[0, 1, 2]).is_err());
}

#[test]
fn permutation_action_is_a_homomorphism() {
    let space = TensorSpace::new(2, 3).unwrap();
    let f = RationalField;
    let perms = all_perms(3);
    assert_eq!(perms.len(), 6);
    for s in &perms {
        for t in &perms {
            let comp: Vec<usize> = (0..3).map(|k| s[t[k]]).collect();
            let lhs = permutation_action(&space, &comp).unwrap();
            let rhs = mat_mul(
                &f,
                &permutation_action(&space, s).unwrap(),
                &permutation_action(&space, t).unwrap(),
            )
            .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn lie_action_goldens() {
    let space = TensorSpace::new(2, 2).unwrap();
    // Raising in one slot: the map (1,1) has letter 1 in both slots, so
    // e_(1,1) goes to e_(0,1) + e_(1,0).
    let e01 = lie_action(&space, 0, 1).unwrap();
    let col = space.index_of(&[1, 1]).unwrap();
    assert_eq!(e01[space.index_of(&[0, 1]).unwrap()][col], rat_int(1));
    assert_eq!(e01[space.index_of(&[1, 0]).unwrap()][col], rat_int(1));
    assert_eq!(e01[space.index_of(&[0, 0]).unwrap()][col], rat_int(0));
    assert_eq!(e01[space.index_of(&[1, 1]).unwrap()][col], rat_int(0));
    // Diagonal units act by the count of slots carrying the letter.
    let space3 = TensorSpace::new(2, 3).unwrap();
    for i in 0..2 {
        let eii = lie_action(&space3, i, i).unwrap();
        for idx in 0..space3.dimension() {
            let phi = space3.basis_map(idx).unwrap();
            let count = phi.iter().filter(|&&v| v == i).count() as i64;
            for row in 0..space3.dimension() {
                let expected = if row == idx { rat_int(count) } else { rat_int(0) };
                assert_eq!(eii[row][idx], expected);
            }
        }
    }
    // Bracket of raising and lowering is the difference of the diagonals.
    let f = RationalField;
    let e10 = lie_action(&space, 1, 0).unwrap();
    let bracket_lhs = mat_mul(&f, &e01, &e10).unwrap();
    let bracket_rhs = mat_mul(&f, &e10, &e01).unwrap();
    let e00 = lie_action(&space, 0, 0).unwrap();
    let e11 = lie_action(&space, 1, 1).unwrap();
    for r in 0..4 {
        for c in 0..4 {
            let left = bracket_lhs[r][c].clone() - bracket_rhs[r][c].clone();
            let right = e00[r][c].clone() - e11[r][c].clone();
            assert_eq!(left, right);
        }
    }
    assert!(lie_action(&space, 2, 0).is_err());
}

#[test]
fn actions_commute() {
    let f = RationalField;
    for (n, d) in [(2, 2), (2, 3), (3, 2)] {
        let space = TensorSpace::new(n, d).unwrap();
        for e in lie_generators(&space) {
            for p in adjacent_transposition_matrices(&space) {
                assert_eq!(
                    mat_mul(&f, &e, &p).unwrap(),
                    mat_mul(&f, &p, &e).unwrap(),
                    "n={n} d={d}"
                );
            }
        }
    }
}

#[test]
fn commutant_dimension_goldens_and_oracle() {
    assert_eq!(commutant_dimension(1, 3).unwrap(), 1);
    assert_eq!(commutant_dimension(2, 2).unwrap(), 10);
    assert_eq!(commutant_dimension(2, 3).unwrap(), 20);
    assert_eq!(commutant_dimension(2, 4).unwrap(), 35);
    assert_eq!(commutant_dimension(3, 2).unwrap(), 45);
    // Independent route: exact nullspace of the commutation constraints
    // against the adjacent transposition matrices.
    for (n, d) in [(2, 2), (2, 3), (3, 2)] {
        let space = TensorSpace::new(n, d).unwrap();
        let gens = adjacent_transposition_matrices(&space);
        assert_eq!(
            joint_commutant_dimension(&gens),
            commutant_dimension(n, d).unwrap(),
            "n={n} d={d}"
        );
    }
}

#[test]
fn enveloping_image_dimension_goldens() {
    assert_eq!(enveloping_image_dimension(1, 3).unwrap(), 1);
    assert_eq!(enveloping_image_dimension(2, 2).unwrap(), 10);
    assert_eq!(enveloping_image_dimension(2, 3).unwrap(), 20);
    assert_eq!(enveloping_image_dimension(2, 4).unwrap(), 35);
    assert_eq!(enveloping_image_dimension(3, 2).unwrap(), 45);
}

#[test]
fn theoretical_dimension_matches_frozen_values() {
    let cases = [
        (1, 3, 1),
        (2, 2, 10),
        (2, 3, 20),
        (2, 4, 35),
        (3, 2, 45),
        (3, 3, 165),
    ];
    for (n, d, expected) in cases {
        assert_eq!(theoretical_dimension(n, d).unwrap(), expected, "n={n} d={d}");
    }
}

#[test]
fn schur_weyl_check_reports() {
    let report = schur_weyl_check(2, 2).unwrap();
    assert_eq!(report.n, 2);
    assert_eq!(report.d, 2);
    assert_eq!(report.commutant_dim, 10);
    assert_eq!(report.image_dim, 10);
    assert_eq!(report.theoretical_dim, 10);
    assert!(report.pass);
    assert!(schur_weyl_check(2, 3).unwrap().pass);
    assert!(schur_weyl_check(1, 3).unwrap().pass);
}

#[test]
fn double_centralizer_on_small_spaces() {
    let f = RationalField;
    for (n, d) in [(2usize, 2usize), (3, 2), (2, 3)] {
        let space = TensorSpace::new(n, d).unwrap();
        let lie = lie_generators(&space);
        // Span of all place-permutation matrices.
        let nn = space.dimension();
        let mut span = RowSpan::new(&f, nn * nn);
        let mut perm_mats = Vec::new();
        for sigma in all_perms(d) {
            let m = permutation_action(&space, &sigma).unwrap();
            span.insert(&flat(&m)).unwrap();
            perm_mats.push(m);
        }
        let perm_span_dim = span.rank();
        // Multiplicity route: the span realizes one matrix block per
        // partition of d with at most n parts, of size the number of
        // standard fillings, counted as a weight multiplicity.
        let mut expected = 0usize;
        for parts in partitions(d, n.min(d), d) {
            let mut hw = parts;
            hw.resize(d, 0);
            let standard = weight_multiplicity(&hw, &vec![1; d]).unwrap() as usize;
            expected += standard * standard;
        }
        assert_eq!(perm_span_dim, expected, "n={n} d={d}");
        // The full commutant of the generated matrix algebra is exactly
        // that span: containment by commutation, equality by dimension.
        for p in &perm_mats {
            for e in &lie {
                assert_eq!(mat_mul(&f, p, e).unwrap(), mat_mul(&f, e, p).unwrap());
            }
        }
        assert_eq!(joint_commutant_dimension(&lie), perm_span_dim, "n={n} d={d}");
    }
}

#[test]
fn size_guard_is_enforced_and_overridable() {
    match commutant_dimension(4, 4) {
        Err(AlgError::SizeGuard(_)) => {}
        other => panic!("expected a size-guard error, got {other:?}"),
    }
    match schur_weyl_check(2, 7) {
        Err(AlgError::SizeGuard(_)) => {}
        other => panic!("expected a size-guard error, got {other:?}"),
    }
    match commutant_dimension_with_guard(2, 4, 10) {
        Err(AlgError::SizeGuard(_)) => {}
        other => panic!("expected a size-guard error, got {other:?}"),
    }
    assert_eq!(commutant_dimension_with_guard(2, 4, 16).unwrap(), 35);
}
