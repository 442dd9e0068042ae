//! Degeneration tests: free-product arithmetic and the graded-relation
//! recovery for small rank.

use weylkit_core::cartan::CartanData;
use weylkit_core::degeneration::{all_degenerate, degeneration_check, MixedExpr};
use weylkit_core::hecke::{coeff_vars, HeckeKind};
use weylkit_core::rational::rat_int;
use weylkit_core::text::parse_poly;

fn a1() -> CartanData {
    CartanData::type_a(1).unwrap()
}

fn a2() -> CartanData {
    CartanData::type_a(2).unwrap()
}

#[test]
fn mixed_mul_concatenates_words_and_merges_gaps() {
    let vars = coeff_vars(HeckeKind::Degenerate, 2);
    let s1 = MixedExpr::letter(2, 5, 0).unwrap();
    let s2 = MixedExpr::letter(2, 5, 1).unwrap();
    let x1 = MixedExpr::from_poly(2, 5, &parse_poly(&vars, "x1").unwrap()).unwrap();
    let left = s1.mul(&x1).unwrap().mul(&s2).unwrap();
    assert_eq!(left.render(), "s1*x1*s2");
    // Gap merging: x1 * x1 lands in one monomial.
    let sq = x1.mul(&x1).unwrap();
    assert_eq!(sq.render(), "x1^2");
    // Letters never move past gap polynomials.
    let a = s1.mul(&x1).unwrap();
    let b = x1.mul(&s1).unwrap();
    assert!(!a.sub(&b).unwrap().is_zero());
}

#[test]
fn mixed_cap_drops_high_degree() {
    let vars = coeff_vars(HeckeKind::Degenerate, 1);
    let x1 = MixedExpr::from_poly(1, 2, &parse_poly(&vars, "x1").unwrap()).unwrap();
    let cube = x1.mul(&x1).unwrap().mul(&x1).unwrap();
    assert!(cube.is_zero());
}

#[test]
fn mixed_lowest_component() {
    let vars = coeff_vars(HeckeKind::Degenerate, 1);
    let p = parse_poly(&vars, "2 + x1 + x1^2").unwrap();
    let e = MixedExpr::from_poly(1, 4, &p).unwrap();
    let (d, comp) = e.lowest_component().unwrap();
    assert_eq!(d, 0);
    assert_eq!(comp.render(), "2");
    let s = MixedExpr::letter(1, 4, 0).unwrap();
    let shifted = s.mul(&e).unwrap().sub(&s.scale(&rat_int(2))).unwrap();
    let (d2, comp2) = shifted.lowest_component().unwrap();
    assert_eq!(d2, 1);
    assert_eq!(comp2.render(), "s1*x1");
}

#[test]
fn quadratic_degenerates_to_involution() {
    let reports = degeneration_check(&a1(), 3).unwrap();
    let quad = reports
        .iter()
        .find(|r| r.relation == "quadratic(s1)")
        .unwrap();
    assert_eq!(quad.lowest_degree, Some(0));
    assert_eq!(quad.recovered, "s1*s1 - 1");
    assert!(quad.pass);
}

#[test]
fn cross_degenerates_to_graded_commutation() {
    let reports = degeneration_check(&a1(), 3).unwrap();
    let cross = reports
        .iter()
        .find(|r| r.relation == "cross(s1,Y+1)")
        .unwrap();
    assert_eq!(cross.lowest_degree, Some(1));
    assert_eq!(cross.expected_degree, Some(1));
    assert_eq!(cross.recovered, "s1*x1 + x1*s1 + eps");
    assert_eq!(cross.recovered, cross.expected);
    assert!(cross.pass);

    let neg = reports
        .iter()
        .find(|r| r.relation == "cross(s1,Y-1)")
        .unwrap();
    assert_eq!(neg.recovered, "-s1*x1 - x1*s1 - eps");
    assert!(neg.pass);
}

#[test]
fn additivity_collapses_to_zero() {
    let reports = degeneration_check(&a2(), 3).unwrap();
    for r in reports.iter().filter(|r| r.relation.starts_with("additivity")) {
        assert_eq!(r.lowest_degree, None);
        assert_eq!(r.recovered, "0");
        assert!(r.pass, "{} failed: {}", r.relation, r.recovered);
    }
}

#[test]
fn full_check_rank_one_and_two() {
    for cartan in [a1(), a2()] {
        let reports = degeneration_check(&cartan, 3).unwrap();
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(
                r.pass,
                "{} on {}: recovered {} expected {}",
                r.relation, r.cartan, r.recovered, r.expected
            );
        }
        assert!(all_degenerate(&reports));
    }
}

#[test]
fn off_diagonal_cross_has_no_eps_term() {
    // For i != j the reflected weight equals the weight and the correction
    // vanishes: the graded relation is a plain commutator.
    let reports = degeneration_check(&a2(), 3).unwrap();
    let r = reports
        .iter()
        .find(|r| r.relation == "cross(s1,Y+2)")
        .unwrap();
    assert!(r.pass);
    assert!(!r.recovered.contains("eps"));
    assert_eq!(r.recovered, "s1*x2 - x2*s1");
}

#[test]
fn higher_order_still_exact() {
    for order in [1, 2, 4] {
        let reports = degeneration_check(&a1(), order).unwrap();
        assert!(all_degenerate(&reports), "order {order} failed");
    }
    assert!(degeneration_check(&a1(), 0).is_err());
}
