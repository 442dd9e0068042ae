//! End-to-end gate: one test per shipped guarantee, each printing a
//! single `ACCEPTANCE <n> PASS/FAIL` line (visible with `--nocapture`).

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weylkit_core::cartan::{
    compositions, irrep_dimension, partitions, weight_multiplicity, CartanData,
};
use weylkit_core::convolution::{verify_steinberg, FiniteMap, LabeledSet};
use weylkit_core::degeneration::{all_degenerate, degeneration_check};
use weylkit_core::gf::RationalField;
use weylkit_core::hecke::{coeff_vars, HeckeElement, HeckeKind};
use weylkit_core::laurent::{varlist, LaurentPoly};
use weylkit_core::ops::{all_pass, verify_realization};
use weylkit_core::rational::rat_int;
use weylkit_core::schurweyl::schur_weyl_check;
use weylkit_core::springer::{
    component_count, component_count_all, dominant_weight, drinfeld_polynomials,
    extreme_flags, DrinfeldInput, FlagType, JordanData,
};

const TYPES: [&str; 4] = ["A1", "A2", "A3", "B2"];
const KINDS: [HeckeKind; 4] = [
    HeckeKind::Finite,
    HeckeKind::Affine,
    HeckeKind::Degenerate,
    HeckeKind::Nil,
];

fn report(id: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("ACCEPTANCE {id} {tag} {detail}");
    assert!(pass, "ACCEPTANCE {id} {tag} {detail}");
}

#[test]
fn criterion_1_operator_realizations() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for label in TYPES {
        let cartan = CartanData::by_label(label).unwrap();
        for kind in KINDS {
            let reports = verify_realization(kind, &cartan, 4).unwrap();
            checked += reports.len();
            if !all_pass(&reports) {
                for r in reports.iter().filter(|r| !r.pass) {
                    failures.push(format!(
                        "{label}/{}: {} ({:?})",
                        kind.name(),
                        r.relation,
                        r.counterexample
                    ));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    let within_budget = elapsed.as_secs_f64() < 60.0;
    report(
        "1",
        failures.is_empty() && within_budget,
        &format!(
            "operator realizations: 4 kinds x {{A1,A2,A3,B2}}, degree bound 4, \
             {checked} relation sweeps, zero discrepancy, {elapsed:.2?} (< 60s); {failures:?}"
        ),
    );
}

fn random_element(rng: &mut ChaCha8Rng, kind: HeckeKind, cartan: &CartanData) -> HeckeElement {
    let rank = cartan.rank();
    let vars = coeff_vars(kind, rank);
    let mut elem = HeckeElement::zero(kind, cartan);
    for _ in 0..rng.gen_range(1..=2) {
        let len = rng.gen_range(0..=3);
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..rank)).collect();
        let basis = HeckeElement::basis(kind, cartan, &word).unwrap();
        let c = loop {
            let v = rng.gen_range(-3i64..=3);
            if v != 0 {
                break v;
            }
        };
        // Exponent ranges respect each variable's domain: the deformation
        // and lattice variables are Laurent, the polynomial letters and
        // the degeneration parameter are not.
        let exps: Vec<i64> = (0..vars.len())
            .map(|_| match kind {
                HeckeKind::Finite | HeckeKind::Affine => rng.gen_range(-1..=1),
                HeckeKind::Degenerate | HeckeKind::Nil => rng.gen_range(0..=1),
            })
            .collect();
        let coeff = LaurentPoly::monomial(&vars, exps, rat_int(c)).unwrap();
        elem = elem.add(&basis.mul_coeff(&coeff).unwrap()).unwrap();
    }
    elem
}

#[test]
fn criterion_2_normal_form_associativity_and_group_algebra() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let mut triples = 0usize;
    for label in TYPES {
        let cartan = CartanData::by_label(label).unwrap();
        for kind in KINDS {
            for _ in 0..200 {
                let a = random_element(&mut rng, kind, &cartan);
                let b = random_element(&mut rng, kind, &cartan);
                let c = random_element(&mut rng, kind, &cartan);
                let left = a.mul(&b).unwrap().mul(&c).unwrap();
                let right = a.mul(&b.mul(&c).unwrap()).unwrap();
                assert_eq!(left, right, "associativity failed in {label}/{:?}", kind);
                triples += 1;
            }
        }
    }
    // At q = 1 the finite algebra is the integral group ring: the product
    // of two basis elements collapses to the basis element of the product.
    let mut pairs = 0usize;
    for label in ["A2", "B2"] {
        let cartan = CartanData::by_label(label).unwrap();
        let elems = cartan.all_elements().unwrap();
        for u in &elems {
            for v in &elems {
                let prod = HeckeElement::basis_of(HeckeKind::Finite, &cartan, u)
                    .mul(&HeckeElement::basis_of(HeckeKind::Finite, &cartan, v))
                    .unwrap()
                    .specialize("q", &rat_int(1))
                    .unwrap();
                let expected =
                    HeckeElement::basis_of(HeckeKind::Finite, &cartan, &cartan.mul(u, v));
                assert_eq!(prod, expected, "group ring failed in {label}");
                pairs += 1;
            }
        }
    }
    report(
        "2",
        true,
        &format!(
            "normal forms: {triples} random associativity triples exact, \
             {pairs} group-ring structure products at q=1 exact, {:.2?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_3_degeneration() {
    let start = Instant::now();
    let mut relations = 0usize;
    for label in ["A1", "A2"] {
        let cartan = CartanData::by_label(label).unwrap();
        let reports = degeneration_check(&cartan, 3).unwrap();
        relations += reports.len();
        if !all_degenerate(&reports) {
            let bad: Vec<String> = reports
                .iter()
                .filter(|r| !r.pass)
                .map(|r| format!("{}: got {} want {}", r.relation, r.recovered, r.expected))
                .collect();
            report("3", false, &format!("degeneration failed: {bad:?}"));
        }
    }
    report(
        "3",
        true,
        &format!(
            "degeneration at series order 3 recovers every graded relation \
             exactly for A1 and A2 ({relations} relations, {:.2?})",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_4_commutant_duality() {
    let start = Instant::now();
    let cases = [
        (1usize, 3usize, 1u64),
        (2, 2, 10),
        (2, 3, 20),
        (2, 4, 35),
        (3, 2, 45),
        (3, 3, 165),
    ];
    for (n, d, expected) in cases {
        let r = schur_weyl_check(n, d).unwrap();
        // The partition-sum value is recomputed independently of the
        // frozen constant before comparison.
        let mut oracle = 0u64;
        for parts in partitions(d, n, d) {
            let mut hw = parts;
            hw.resize(n, 0);
            let dim = irrep_dimension(&hw, n).unwrap();
            oracle += dim * dim;
        }
        let ok = r.pass
            && r.commutant_dim as u64 == expected
            && r.image_dim as u64 == expected
            && r.theoretical_dim == expected
            && oracle == expected;
        if !ok {
            report(
                "4",
                false,
                &format!(
                    "(n,d)=({n},{d}): commutant {} image {} theory {} oracle {oracle} \
                     expected {expected}",
                    r.commutant_dim, r.image_dim, r.theoretical_dim
                ),
            );
        }
    }
    let elapsed = start.elapsed();
    report(
        "4",
        elapsed.as_secs_f64() < 120.0,
        &format!(
            "commutant = image = partition sum at all six sizes \
             (1, 10, 20, 35, 45, 165), {elapsed:.2?} (< 120s)"
        ),
    );
}

#[test]
fn criterion_5_fixed_point_counts() {
    let start = Instant::now();
    let mut type_checks = 0usize;
    let mut total_checks = 0usize;
    for d in 1..=4usize {
        let n = d;
        for parts in partitions(d, d, d) {
            let blocks: Vec<usize> = parts.iter().map(|&p| p as usize).collect();
            let x = JordanData::new(blocks).unwrap();
            let hw = dominant_weight(&x, n).unwrap();
            for dims in compositions(d, n) {
                let t = FlagType::new(dims.clone());
                let cc = component_count(&x, &t).unwrap();
                let content: Vec<i64> = dims.iter().map(|&v| v as i64).collect();
                let expected = weight_multiplicity(&hw, &content).unwrap();
                assert_eq!(
                    cc.count, expected,
                    "type count mismatch at blocks {:?} dims {dims:?}",
                    x.blocks()
                );
                type_checks += 1;
            }
            let all = component_count_all(&x, n).unwrap();
            let expected = irrep_dimension(&hw, n).unwrap();
            assert_eq!(all, expected, "total mismatch at blocks {:?}", x.blocks());
            total_checks += 1;
        }
    }
    let elapsed = start.elapsed();
    report(
        "5",
        elapsed.as_secs_f64() < 600.0,
        &format!(
            "fixed-point counts: {type_checks} per-type counts equal weight \
             multiplicities and {total_checks} totals equal irreducible dimensions \
             (held-out node residual 0 enforced on every fit), {elapsed:.2?} (< 10min)"
        ),
    );
}

/// Builds the eigenvalue list for one Jordan type: within each block the
/// entries are q^(b-1) a, ..., q a, a scaled by the block's base symbol.
fn geometric_eigenvalues(
    vars: &weylkit_core::laurent::VarList,
    blocks: &[usize],
    bases: &[&str],
) -> (Vec<LaurentPoly>, LaurentPoly) {
    let q = LaurentPoly::var(vars, "q").unwrap();
    let mut s = Vec::new();
    for (bi, &b) in blocks.iter().enumerate() {
        let base = LaurentPoly::var(vars, bases[bi]).unwrap();
        for k in 0..b {
            let power = q.pow((b - 1 - k) as u32).unwrap();
            s.push(power.mul(&base).unwrap());
        }
    }
    (s, q)
}

#[test]
fn criterion_6_families_shape_and_degrees() {
    let vars = varlist(&["q", "a", "b", "c"]);
    // (jordan blocks, step count, base symbol per block)
    let families: [(&str, Vec<usize>, usize, Vec<&str>); 6] = [
        ("zero-rank-1", vec![1], 2, vec!["a"]),
        ("single-block k=n=2", vec![2], 2, vec!["a"]),
        ("single-block k=n=3", vec![3], 3, vec!["a"]),
        ("single-block k=2<n=3", vec![2], 3, vec!["a"]),
        ("zero generic diag d=2", vec![1, 1], 2, vec!["a", "b"]),
        ("zero generic diag d=3", vec![1, 1, 1], 3, vec!["a", "b", "c"]),
    ];
    for (name, blocks, n, bases) in families {
        let x = JordanData::new(blocks.clone()).unwrap();
        let (s, q) = geometric_eigenvalues(&vars, x.blocks(), &bases);
        let input = DrinfeldInput::new(x.clone(), s, q).unwrap();
        let polys = drinfeld_polynomials(&input, n).unwrap();
        let ctx = RationalField;
        let (fmax, fmin) = extreme_flags(&ctx, &x, n).unwrap();
        assert_eq!(polys.len(), n, "{name}");
        for i in 0..n {
            let coeffs = &polys[i];
            let deg = coeffs.len() - 1;
            let quotient = fmax.step_dims()[i] - fmin.step_dims()[i];
            assert_eq!(deg, quotient, "{name}: degree of P_{} vs quotient", i + 1);
            assert!(
                coeffs.last().unwrap().is_one(),
                "{name}: P_{} not monic",
                i + 1
            );
            assert!(
                !coeffs[0].is_zero(),
                "{name}: P_{} has zero constant term",
                i + 1
            );
        }
    }
    report(
        "6a-d",
        true,
        "all families: degree of P_i equals the extreme-flag quotient dimension, \
         every P_i monic with nonzero constant term",
    );
}

#[test]
fn criterion_6e_single_block_below_rank() {
    // Stated claim: a single block of size k < n gives exactly one
    // nontrivial factor, at index k. The direct quotient computation
    // contradicts this for k=2, n=3: every step i with
    // max(0, k-n+i) < min(i, k) carries a factor, which is indices 1..n-1
    // when k < n, so the claim holds only for (k, n) = (1, 2).
    let vars = varlist(&["q", "a"]);
    for (k, n) in [(1usize, 2usize), (2, 3)] {
        let x = JordanData::new(vec![k]).unwrap();
        let (s, q) = geometric_eigenvalues(&vars, x.blocks(), &["a"]);
        let input = DrinfeldInput::new(x, s, q).unwrap();
        let polys = drinfeld_polynomials(&input, n).unwrap();
        let nontrivial: Vec<usize> = polys
            .iter()
            .enumerate()
            .filter(|(_, p)| p.len() > 1)
            .map(|(i, _)| i + 1)
            .collect();
        let rendered: Vec<String> = polys
            .iter()
            .map(|p| weylkit_core::springer::render_u_poly(p))
            .collect();
        let claim_holds = nontrivial == vec![k];
        if !claim_holds {
            report(
                "6e",
                false,
                &format!(
                    "single block k={k} < n={n}: claimed exactly one nontrivial \
                     factor at index {k}, computed factors at indices {nontrivial:?} \
                     ({rendered:?}); the quotient computation puts a linear factor \
                     at every index i with max(0,k-n+i) < min(i,k)"
                ),
            );
        }
    }
    report("6e", true, "single-block k<n uniqueness claim");
}

#[test]
fn criterion_7_exhaustive_block_decompositions() {
    let start = Instant::now();
    let mut maps = 0usize;
    for m in 0..=5usize {
        for n in 0..=5usize {
            if n == 0 && m > 0 {
                continue;
            }
            let total = n.pow(m as u32).max(1);
            for idx in 0..total {
                let mut assignment = vec![0usize; m];
                let mut rest = idx;
                for slot in assignment.iter_mut() {
                    *slot = rest % n;
                    rest /= n;
                }
                let map = FiniteMap::new(
                    LabeledSet::numbered(m),
                    LabeledSet::numbered(n),
                    assignment,
                )
                .unwrap();
                let r = verify_steinberg(&map).unwrap();
                assert!(
                    r.pass,
                    "map {:?} -> {n} failed: {:?}",
                    r.assignment, r.failure
                );
                maps += 1;
            }
        }
    }
    report(
        "7",
        true,
        &format!(
            "block decomposition and fiber-module checks exhaustive over \
             {maps} maps between sets of size <= 5, {:.2?}",
            start.elapsed()
        ),
    );
}
