use twisted_n2::constraints::{
    alpha_beta_solve, b0_nonexistence_check, build_identity_system, coeff_solution_check, compare_delta_closed_form,
    derive_t_composition, determinant3, intersection_sweep, root_set, sample_points, Case, CaseLabel, CoeffFamily, DeltaWhich,
    IdentityInstance, IdentityKind, LemmaId, Pattern, RootSetName, System3,
};
use twisted_n2::deform::instantiate_deformation;
use twisted_n2::exact::{ExactScalar, MultiPoly, Var};
use twisted_n2::index::IndexClass;
use twisted_n2::module::{DeformCase, FamilySpec};
use twisted_n2::report::Status;

fn p(s: &str) -> MultiPoly {
    MultiPoly::parse(s).unwrap()
}

fn at(f: &MultiPoly, vals: &[(&str, MultiPoly)]) -> MultiPoly {
    let subs: Vec<(Var, MultiPoly)> = vals.iter().map(|(v, x)| (Var::new(v), x.clone())).collect();
    f.substitute_all(&subs)
}

#[test]
fn determinant_basics() {
    let id = System3 {
        matrix: [
            [MultiPoly::one(), MultiPoly::zero(), MultiPoly::zero()],
            [MultiPoly::zero(), MultiPoly::one(), MultiPoly::zero()],
            [MultiPoly::zero(), MultiPoly::zero(), MultiPoly::one()],
        ],
        unknowns: ["u".into(), "v".into(), "w".into()],
    };
    assert_eq!(determinant3(&id), MultiPoly::one());
    let row = [p("m"), p("b + 1"), p("k")];
    let twin = System3 { matrix: [row.clone(), row, [p("1"), p("2"), p("3")]], unknowns: id.unknowns.clone() };
    assert!(determinant3(&twin).is_zero());
}

#[test]
fn llt_system_on_x() {
    let inst = IdentityInstance::new(IdentityKind::LLT, Case::A, CoeffFamily::F, IndexClass::Integer);
    let s = build_identity_system(&inst).unwrap();
    let det = determinant3(&s);
    assert_eq!(det.degree_in(&Var::new("m")), 6 + det.exact_divide(&p("m^6")).unwrap().degree_in(&Var::new("m")));
    assert!(at(&det, &[("b'", p("b"))]).is_zero());
}

#[test]
fn malformed_instances_are_rejected() {
    let mut inst = IdentityInstance::new(IdentityKind::LLT, Case::A, CoeffFamily::G, IndexClass::Integer);
    assert!(build_identity_system(&inst).is_err());
    inst.family = CoeffFamily::F;
    inst.patterns.pop();
    assert!(build_identity_system(&inst).is_err());
    inst.patterns.push(Pattern { m: p("m"), n: p("2*m"), k: p("k") });
    assert!(build_identity_system(&inst).is_err());
}

#[test]
fn delta_one_matches_and_evaluates() {
    let r = compare_delta_closed_form(DeltaWhich::Delta1);
    assert_eq!(r.equal, Some(true));
    let v = at(&r.derived_poly, &[("b", p("0")), ("b'", p("1")), ("m", p("1"))]);
    assert_eq!(v, MultiPoly::int(-48));
    assert!(at(&r.derived_poly, &[("b'", p("b"))]).is_zero());
}

#[test]
fn delta_two_matches() {
    assert_eq!(compare_delta_closed_form(DeltaWhich::Delta2).equal, Some(true));
}

#[test]
fn delta_three_quotient_vanishes_on_omega() {
    for which in [DeltaWhich::Delta3, DeltaWhich::Delta3Prime] {
        let r = compare_delta_closed_form(which);
        assert_eq!(r.divisible, Some(true));
        assert_eq!(r.pair_values.len(), 4);
        assert!(r.pair_values.iter().all(|v| v.vanishes), "{:?}", r.pair_values);
    }
}

#[test]
fn delta_three_nabla_discrepancy_is_isolated() {
    let r = compare_delta_closed_form(DeltaWhich::Delta3);
    let eq: Vec<bool> = r.nabla.iter().map(|n| n.equal).collect();
    assert_eq!(eq, [true, true, false]);
    assert_eq!(r.nabla[2].difference.as_deref().map(p), Some(p("-4*b'^4 + 4*b'^2")));
    assert!(r.stated_pair_values.iter().any(|v| !v.vanishes));
}

#[test]
fn first_root_set() {
    let e = root_set(RootSetName::AFInt).unwrap();
    assert!(e.ok());
    let roots: Vec<MultiPoly> = e.linear_polys.clone();
    assert_eq!(roots, [p("-b - 1"), p("b - 2"), p("b - 1"), p("b")]);
    let q = e.quad_data.as_ref().unwrap();
    assert_eq!(q.discriminant, p("8*b + 9"));

    let at0: Vec<MultiPoly> = roots.iter().map(|r| at(r, &[("b", p("0"))])).collect();
    assert_eq!(at0, [p("-1"), p("-2"), p("-1"), p("0")]);
    let quad0 = at(&q.polynomial(), &[("b", p("0"))]);
    for r in [p("0"), p("-3")] {
        assert!(at(&quad0, &[("b'", r)]).is_zero());
    }
}

#[test]
fn all_root_sets_verify() {
    for name in RootSetName::ALL {
        let e = root_set(name).unwrap();
        assert!(e.ok(), "{}", name.name());
        e.require().unwrap();
    }
}

#[test]
fn pair_set_contains_minus_one_zero() {
    let e = root_set(RootSetName::AGIntPairs).unwrap();
    let set = e.pair_set.unwrap();
    assert!(set.pairs.contains(&("-1".to_string(), "0".to_string())));
    assert!(set.vanishes.iter().all(|v| *v));
}

#[test]
fn intersection_case_b_is_exact() {
    assert!(intersection_sweep(Case::B).unwrap().ok());
}

#[test]
fn intersection_case_a_reports_extra_survivors() {
    let r = intersection_sweep(Case::A).unwrap();
    let bs: Vec<&str> = r.mismatches.iter().map(|m| m.b.as_str()).collect();
    assert_eq!(bs, ["-3/2", "-1", "-1/2", "0"]);
}

#[test]
fn coefficient_lemmas() {
    for lemma in LemmaId::ALL {
        let r = coeff_solution_check(lemma);
        assert!(r.ok(), "{}: {:?}", lemma.name(), r.checks.iter().find(|c| !c.status.ok()));
    }
}

#[test]
fn mu_t_forms_are_rederived() {
    let r = coeff_solution_check(LemmaId::TFormsB);
    let resolved: Vec<&str> = r.checks.iter().filter(|c| c.status == Status::Resolved).map(|c| c.name.as_str()).collect();
    assert_eq!(resolved.len(), 3, "{resolved:?}");
    assert!(resolved.iter().all(|n| n.contains("mu")));
    assert!(coeff_solution_check(LemmaId::TFormsA).checks.iter().all(|c| c.status == Status::Pass));
}

#[test]
fn t_by_composition() {
    for spec in [FamilySpec::aab_symbolic(), FamilySpec::bab_symbolic()] {
        let r = derive_t_composition(&spec, 2).unwrap();
        assert!(r.ok(), "{}", spec.name());
    }
    for case in DeformCase::ALL {
        let r = derive_t_composition(&instantiate_deformation(case, p("alpha")), 2).unwrap();
        assert!(r.ok(), "{}", case.name());
    }
}

#[test]
fn normalization_solutions() {
    for case in [CaseLabel::A, CaseLabel::B, CaseLabel::B0] {
        let r = alpha_beta_solve(case);
        assert!(r.ok(), "{case:?}");
    }
    let a = alpha_beta_solve(CaseLabel::A);
    assert!(a.assignments.iter().any(|x| x.values == ["1", "1", "1", "1"] && x.violated.is_empty()));
    let b = alpha_beta_solve(CaseLabel::B);
    assert!(b.assignments.iter().any(|x| x.values == ["1", "-1", "1", "-1"] && x.violated.is_empty()));
}

#[test]
fn b0_candidate_is_contradictory() {
    let third = MultiPoly::constant(ExactScalar::new(1.into(), 3.into()));
    let r = b0_nonexistence_check(&third, Some((1, 0)));
    assert!(r.ok());
    assert!(r.contradiction && r.control_ok);
    assert!(r.bracket_side.contains("2/3"), "{}", r.bracket_side);

    let s = b0_nonexistence_check(&p("a"), None);
    assert!(s.ok());
    assert_eq!(s.residual, "(2*a - 2*k)*x_{2*n + k}");
}

#[test]
fn intersection_samples() {
    let s = sample_points();
    assert_eq!(s.len(), 200);
    assert!(s.windows(2).all(|w| w[0] < w[1]));
    assert!(!s.contains(&ExactScalar::new((-9).into(), 8.into())));
}
