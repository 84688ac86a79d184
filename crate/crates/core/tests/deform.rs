use proptest::prelude::*;
use twisted_n2::algebra::Generator;
use twisted_n2::deform::{
    alpha_prime_identity, alpha_samples, closed_e, deformed_sweeps, e_closed_form_check, f_derivation,
    fit_alpha_from_e, g_solution_check, generic_samples, generic_scan, instantiate_deformation, special_vector,
    submodule_facts, undeformed_base, undeformed_specialization, DeformCoeffTable,
};
use twisted_n2::exact::{MultiPoly, RatFunc};
use twisted_n2::index::HalfInt;
use twisted_n2::module::{axiom_sweep, Basis, DeformCase, Module};
use twisted_n2::report::Status;

fn p(s: &str) -> MultiPoly {
    MultiPoly::parse(s).unwrap()
}

fn h(doubled: i64) -> HalfInt {
    HalfInt::from_doubled(doubled)
}

#[test]
fn fit_examples() {
    let (a, ap) = fit_alpha_from_e(&p("-3"), &p("-8"), DeformCase::A1);
    assert_eq!((a.clone(), ap.clone()), (p("2"), p("1")));
    let e = |n: i64| closed_e(DeformCase::A1, &a, &ap, &MultiPoly::int(n));
    assert_eq!(e(-1), MultiPoly::int(1));
    assert_eq!(e(-1), &e(2) - &e(1).times(3));

    let (z, zp) = fit_alpha_from_e(&p("0"), &p("0"), DeformCase::A1);
    assert!(z.is_zero() && zp.is_zero());

    let (sa, sap) = fit_alpha_from_e(&p("e1"), &p("e2"), DeformCase::A1);
    assert_eq!(&sa + &sap, p("-e1"));
    let (ta, tap) = fit_alpha_from_e(&p("e1"), &p("e2"), DeformCase::A2);
    assert_eq!(&ta + &tap, p("e1"));
}

#[test]
fn e_recurrence_all_cases() {
    for case in DeformCase::ALL {
        let r = e_closed_form_check(case, 10);
        assert!(r.ok(), "{}: {:?}", case.name(), r.items.iter().find(|c| !c.ok).map(|c| &c.name));
    }
}

#[test]
fn e_zero_vanishes() {
    let t = DeformCoeffTable::closed(DeformCase::A1, &p("alpha"), &p("alpha'"), 3);
    assert!(t.e[&0].is_zero());
    let t2 = DeformCoeffTable::closed(DeformCase::A2, &p("alpha"), &p("alpha'"), 3);
    assert_eq!(t2.e[&2], p("2*(2*alpha' + alpha)"));
}

#[test]
fn g_and_f_derivations() {
    for case in DeformCase::ALL {
        assert!(g_solution_check(case, 2).ok(), "{}", case.name());
        let f = f_derivation(case, 2).unwrap();
        assert!(f.ok(), "{}", case.name());
        assert!(f.vanishes_at_alpha_prime_zero);
    }
    assert_eq!(f_derivation(DeformCase::A1, 2).unwrap().stated_form, "-2*alpha'*r");
}

#[test]
fn alpha_prime_identity_inconsistent_on_first_case_only() {
    assert_eq!(alpha_prime_identity(DeformCase::A1).status, Status::Resolved);
    assert_eq!(alpha_prime_identity(DeformCase::B1).status, Status::Resolved);
    assert_eq!(alpha_prime_identity(DeformCase::A2).status, Status::Pass);
    assert_eq!(alpha_prime_identity(DeformCase::B2).status, Status::Pass);
}

#[test]
fn instantiation_examples() {
    let a1 = instantiate_deformation(DeformCase::A1, MultiPoly::ratio(2, 7));
    let x0 = Basis::x(h(0));
    assert_eq!(a1.act(&Generator::L(h(4)), &x0).coeff(&Basis::x(h(4))), RatFunc::poly(MultiPoly::ratio(-32, 7)));
    let a1s = instantiate_deformation(DeformCase::A1, p("alpha"));
    assert_eq!(a1s.act(&Generator::T(h(1)), &x0).coeff(&Basis::x(h(1))), RatFunc::int(-1));
    let a2 = instantiate_deformation(DeformCase::A2, p("alpha"));
    assert_eq!(a2.act(&Generator::G(h(1)), &Basis::x(h(-1))).coeff(&Basis::y(h(0))), RatFunc::poly(p("1 + alpha")));
}

#[test]
fn special_vectors() {
    assert_eq!(special_vector(DeformCase::A1), Basis::x(h(0)));
    assert_eq!(special_vector(DeformCase::B2), Basis::y(h(1)));
}

#[test]
fn deformations_specialize_to_their_bases() {
    for case in DeformCase::ALL {
        assert!(undeformed_specialization(case, 2, 3).status.ok(), "{}", case.name());
        assert!(axiom_sweep(&undeformed_base(case), 2, 3).passed());
    }
}

#[test]
fn sampled_alpha_sweeps() {
    assert_eq!(alpha_samples().len(), 5);
    let checks = deformed_sweeps(2, 4);
    assert_eq!(checks.len(), 4 * 5);
    assert!(checks.iter().all(|c| c.status.ok()));
}

#[test]
fn submodule_facts_hold() {
    let facts = submodule_facts(2, 4);
    assert_eq!(facts.len(), 10);
    for f in &facts {
        assert!(f.ok(), "{} {}", f.family, f.candidate);
    }
}

#[test]
fn generic_parameters_have_no_single_label_submodule() {
    for spec in generic_samples() {
        let s = generic_scan(&spec, 2, 4);
        assert_eq!(s.candidates, 68);
        assert!(s.closed.is_empty(), "{}: {:?}", s.family, s.closed);
    }
}

proptest! {
    #[test]
    fn fit_round_trips(n1 in -20i64..=20, d1 in 1i64..=6, n2 in -20i64..=20, d2 in 1i64..=6, case_ix in 0usize..4) {
        let case = DeformCase::ALL[case_ix];
        let (e1, e2) = (MultiPoly::ratio(n1, d1), MultiPoly::ratio(n2, d2));
        let (a, ap) = fit_alpha_from_e(&e1, &e2, case);
        prop_assert_eq!(closed_e(case, &a, &ap, &MultiPoly::int(1)), e1);
        prop_assert_eq!(closed_e(case, &a, &ap, &MultiPoly::int(2)), e2);
    }

    #[test]
    fn closed_e_satisfies_recurrence(n in -30i64..=30, na in -9i64..=9, nap in -9i64..=9, case_ix in 0usize..4) {
        prop_assume!(n != 0);
        let case = DeformCase::ALL[case_ix];
        let (a, ap) = (MultiPoly::int(na), MultiPoly::int(nap));
        let e = |k: i64| closed_e(case, &a, &ap, &MultiPoly::int(k));
        prop_assert_eq!((&e(n) - &e(1)).times(n + 1), e(n + 1).times(n - 1));
    }
}
