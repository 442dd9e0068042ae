//! Operator realization tests: golden values for the letter operators and
//! relation sweeps for every flavor on small rank.

use weylkit_core::cartan::CartanData;
use weylkit_core::hecke::{coeff_vars, HeckeElement, HeckeKind};
use weylkit_core::laurent::LaurentPoly;
use weylkit_core::ops::{
    all_pass, eval_element, verify_realization, OpAtom, OpSpace, PolyOperator,
};
use weylkit_core::rational::rat_int;

fn a1() -> CartanData {
    CartanData::type_a(1).unwrap()
}

fn a2() -> CartanData {
    CartanData::type_a(2).unwrap()
}

fn b2() -> CartanData {
    CartanData::type_b2().unwrap()
}

fn poly(vars: &weylkit_core::laurent::VarList, s: &str) -> LaurentPoly {
    weylkit_core::text::parse_poly(vars, s).unwrap()
}

#[test]
fn demazure_lusztig_golden_on_constants() {
    // T(1) = q in every rank.
    for cartan in [a1(), a2(), b2()] {
        let vars = OpSpace::Lattice.vars(cartan.rank());
        let op = PolyOperator::new(&cartan, OpSpace::Lattice, vec![OpAtom::DemazureLusztig(0)])
            .unwrap();
        let out = op.apply(&LaurentPoly::one(&vars)).unwrap();
        assert_eq!(out.render(), "q");
    }
}

#[test]
fn demazure_lusztig_golden_on_root_monomial() {
    // Rank one: the simple root is 2*omega, so Y^alpha = Y1^2 and
    // T(Y1^2) = 1 + Y1^-2 - q.
    let cartan = a1();
    let vars = OpSpace::Lattice.vars(1);
    let op =
        PolyOperator::new(&cartan, OpSpace::Lattice, vec![OpAtom::DemazureLusztig(0)]).unwrap();
    let out = op.apply(&poly(&vars, "Y1^2")).unwrap();
    assert!(out.sub(&poly(&vars, "1 + Y1^-2 - q")).unwrap().is_zero());
}

#[test]
fn reflection_with_difference_golden_rank_one() {
    // S(x1) = -x1 - eps and S(2*x1) = -2*x1 - 2*eps.
    let cartan = a1();
    let vars = OpSpace::PolynomialEps.vars(1);
    let op = PolyOperator::new(
        &cartan,
        OpSpace::PolynomialEps,
        vec![OpAtom::ReflectionWithDifference(0)],
    )
    .unwrap();
    let out = op.apply(&poly(&vars, "x1")).unwrap();
    assert!(out.sub(&poly(&vars, "-x1 - eps")).unwrap().is_zero());
    let out2 = op.apply(&poly(&vars, "2*x1")).unwrap();
    assert!(out2.sub(&poly(&vars, "-2*x1 - 2*eps")).unwrap().is_zero());
}

#[test]
fn divided_difference_golden_rank_one() {
    // R(x1) = (s(x1) - x1)/alpha = -2*x1 / (2*x1) = -1.
    let cartan = a1();
    let vars = OpSpace::Polynomial.vars(1);
    let op = PolyOperator::new(
        &cartan,
        OpSpace::Polynomial,
        vec![OpAtom::DividedDifference(0)],
    )
    .unwrap();
    let out = op.apply(&poly(&vars, "x1")).unwrap();
    assert!(out.sub(&LaurentPoly::constant(&vars, rat_int(-1))).unwrap().is_zero());
}

#[test]
fn atom_space_validation() {
    let cartan = a1();
    assert!(PolyOperator::new(
        &cartan,
        OpSpace::Polynomial,
        vec![OpAtom::DemazureLusztig(0)]
    )
    .is_err());
    assert!(PolyOperator::new(
        &cartan,
        OpSpace::Lattice,
        vec![OpAtom::ReflectionWithDifference(0)]
    )
    .is_err());
    assert!(PolyOperator::new(&cartan, OpSpace::Lattice, vec![OpAtom::Reflect(1)]).is_err());
}

#[test]
fn compose_applies_rightmost_first() {
    // Mult(x1) then DividedDifference: R(x1 * x1) = (x1^2 -> (s - 1)/alpha)
    // = (x1^2 - x1^2)/... actually s(x1^2) = x1^2, so R(x1^2) = 0; the other
    // order gives x1 * R(x1) = -x1. Distinguishes the composition order.
    let cartan = a1();
    let vars = OpSpace::Polynomial.vars(1);
    let x1 = poly(&vars, "x1");
    let r_then_mult = PolyOperator::new(
        &cartan,
        OpSpace::Polynomial,
        vec![OpAtom::Mult(x1.clone()), OpAtom::DividedDifference(0)],
    )
    .unwrap();
    let mult_then_r = PolyOperator::new(
        &cartan,
        OpSpace::Polynomial,
        vec![OpAtom::DividedDifference(0), OpAtom::Mult(x1.clone())],
    )
    .unwrap();
    assert!(r_then_mult
        .apply(&x1)
        .unwrap()
        .sub(&poly(&vars, "-x1"))
        .unwrap()
        .is_zero());
    assert!(mult_then_r.apply(&x1).unwrap().is_zero());

    let composed = PolyOperator::identity(&cartan, OpSpace::Polynomial)
        .compose(&mult_then_r)
        .unwrap();
    assert!(composed.apply(&x1).unwrap().is_zero());
}

#[test]
fn eval_element_matches_operator_on_basis_words() {
    // Evaluating T[1] as an operator equals the letter operator directly.
    let cartan = a2();
    let vars = OpSpace::Lattice.vars(2);
    let t1 = HeckeElement::basis(HeckeKind::Affine, &cartan, &[0]).unwrap();
    let f = poly(&vars, "Y1^2*Y2^-1 + q*Y2");
    let via_elem = eval_element(&t1, &f).unwrap();
    let op =
        PolyOperator::new(&cartan, OpSpace::Lattice, vec![OpAtom::DemazureLusztig(0)]).unwrap();
    let via_op = op.apply(&f).unwrap();
    assert!(via_elem.sub(&via_op).unwrap().is_zero());
}

#[test]
fn eval_element_respects_coefficient_side() {
    // T[1] * Y(0,1) straightens to a sum; its evaluation must agree with
    // composing the evaluations in the same order.
    let cartan = a2();
    let vars = OpSpace::Lattice.vars(2);
    let t1 = HeckeElement::basis(HeckeKind::Affine, &cartan, &[0]).unwrap();
    let y = HeckeElement::y_monomial(&cartan, &[0, 1]).unwrap();
    let prod = t1.mul(&y).unwrap();
    let f = poly(&vars, "Y1 - q");
    let lhs = eval_element(&prod, &f).unwrap();
    let rhs = eval_element(&t1, &eval_element(&y, &f).unwrap()).unwrap();
    assert!(lhs.sub(&rhs).unwrap().is_zero());
}

#[test]
fn verify_finite_rank_two() {
    for cartan in [a2(), b2()] {
        let reports = verify_realization(HeckeKind::Finite, &cartan, 3).unwrap();
        assert!(!reports.is_empty());
        for r in &reports {
            assert!(r.pass, "{} failed on {}: {:?}", r.relation, r.cartan, r.counterexample);
        }
        assert!(all_pass(&reports));
    }
}

#[test]
fn verify_affine_rank_one_and_two() {
    for cartan in [a1(), a2()] {
        let reports = verify_realization(HeckeKind::Affine, &cartan, 3).unwrap();
        for r in &reports {
            assert!(r.pass, "{} failed on {}: {:?}", r.relation, r.cartan, r.counterexample);
        }
    }
}

#[test]
fn verify_degenerate_rank_two() {
    for cartan in [a2(), b2()] {
        let reports = verify_realization(HeckeKind::Degenerate, &cartan, 3).unwrap();
        for r in &reports {
            assert!(r.pass, "{} failed on {}: {:?}", r.relation, r.cartan, r.counterexample);
        }
    }
}

#[test]
fn verify_nil_rank_two() {
    for cartan in [a2(), b2()] {
        let reports = verify_realization(HeckeKind::Nil, &cartan, 3).unwrap();
        for r in &reports {
            assert!(r.pass, "{} failed on {}: {:?}", r.relation, r.cartan, r.counterexample);
        }
    }
}

#[test]
fn report_fields_are_populated() {
    let reports = verify_realization(HeckeKind::Nil, &a1(), 2).unwrap();
    let names: Vec<&str> = reports.iter().map(|r| r.relation.as_str()).collect();
    assert!(names.contains(&"quadratic(s1)"));
    assert!(names.contains(&"cross(s1,x1)"));
    assert!(names.contains(&"center(s1)"));
    assert!(names.iter().any(|n| n.starts_with("module(")));
    for r in &reports {
        assert_eq!(r.cartan, "A1");
        assert_eq!(r.degree_bound, 2);
        assert!(r.counterexample.is_none());
    }
}

#[test]
fn coeff_vars_match_spaces() {
    assert_eq!(*OpSpace::Lattice.vars(2), *coeff_vars(HeckeKind::Affine, 2));
    assert_eq!(*OpSpace::Polynomial.vars(2), *coeff_vars(HeckeKind::Nil, 2));
    assert_eq!(
        *OpSpace::PolynomialEps.vars(2),
        *coeff_vars(HeckeKind::Degenerate, 2)
    );
}
