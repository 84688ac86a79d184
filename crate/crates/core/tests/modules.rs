use proptest::prelude::*;
use twisted_n2::algebra::{generator_window, Generator, GeneratorLabel};
use twisted_n2::exact::{MultiPoly, RatFunc};
use twisted_n2::index::HalfInt;
use twisted_n2::module::{
    axiom_sweep, basis_window, bracket_action_check, ns_partition_check, submodule_check, Basis, BasisLabel,
    DeformCase, Fault, FamilySpec, Faulty, LinComb, Module, SubmoduleCandidate,
};

fn h(doubled: i64) -> HalfInt {
    HalfInt::from_doubled(doubled)
}

fn p(s: &str) -> MultiPoly {
    MultiPoly::parse(s).unwrap()
}

fn one(v: BasisLabel, c: &str) -> LinComb<HalfInt> {
    LinComb::single(v, RatFunc::poly(p(c)))
}

fn aab(a: &str, b: &str) -> FamilySpec {
    FamilySpec::Aab { a: p(a), b: p(b) }
}

use Generator::{G, L, T};

#[test]
fn action_examples() {
    let a = FamilySpec::aab_symbolic();
    assert_eq!(a.act(&L(h(2)), &Basis::x(h(0))), one(Basis::x(h(2)), "a + b"));
    assert_eq!(a.act(&G(h(1)), &Basis::y(h(1))), one(Basis::x(h(2)), "-a - b"));
    assert!(aab("a", "-1/2").act(&T(h(1)), &Basis::y(h(0))).is_zero());
    assert_eq!(FamilySpec::bab_symbolic().act(&T(h(1)), &Basis::x(h(0))), one(Basis::x(h(1)), "1"));

    let alpha = MultiPoly::var("alpha");
    let a1 = FamilySpec::deformed(DeformCase::A1, alpha.clone());
    assert_eq!(a1.act(&L(h(4)), &Basis::x(h(0))), one(Basis::x(h(4)), "-2*(2 + alpha)"));
    let a2 = FamilySpec::deformed(DeformCase::A2, alpha);
    assert_eq!(a2.act(&L(h(2)), &Basis::y(h(-2))), one(Basis::y(h(0)), "1 + alpha"));
}

#[test]
fn central_element_acts_as_zero() {
    let a = FamilySpec::aab_symbolic();
    for v in basis_window(2) {
        assert!(a.act(&Generator::C, &v).is_zero());
    }
}

#[test]
fn bracket_action_examples() {
    let a = FamilySpec::aab_symbolic();
    let x0 = Basis::x(h(0));
    assert!(bracket_action_check(&a, &G(h(1)), &G(h(0)), &x0).is_zero());
    assert_eq!(a.act(&T(h(1)), &x0).coeff(&Basis::x(h(1))), RatFunc::poly(p("-2*(b + 1)")));
    assert!(bracket_action_check(&a, &L(h(4)), &L(h(-4)), &x0).is_zero());

    let a1 = FamilySpec::deformed(DeformCase::A1, MultiPoly::ratio(2, 7));
    assert!(bracket_action_check(&a1, &L(h(2)), &G(h(-1)), &x0).is_zero());
}

#[test]
fn symbolic_sweeps_are_clean() {
    for spec in [FamilySpec::aab_symbolic(), FamilySpec::bab_symbolic()] {
        let r = axiom_sweep(&spec, 2, 4);
        assert!(r.passed(), "{}: {:?}", spec.name(), r.violations.first());
        assert_eq!(r.checks, generator_window(2).len().pow(2) * basis_window(4).len());
    }
}

#[test]
fn deformed_sweep_b2() {
    let b2 = FamilySpec::deformed(DeformCase::B2, MultiPoly::ratio(1, 5));
    assert!(axiom_sweep(&b2, 2, 4).passed());
}

#[test]
fn t_sign_fault_is_caught_with_mixed_witness() {
    let fault = Fault::by_name("T-sign").unwrap();
    let base = fault.base_family();
    let r = axiom_sweep(&Faulty { base: &base, fault }, 2, 4);
    assert!(!r.passed());
    assert!(r.violations.iter().any(|v| {
        let pair = [&v.g1[..1], &v.g2[..1]];
        pair == ["T", "G"] || pair == ["G", "T"]
    }));
}

#[test]
fn every_catalog_fault_is_caught() {
    for fault in Fault::catalog() {
        let base = fault.base_family();
        assert!(fault.applies_to(&base));
        let r = axiom_sweep(&Faulty { base: &base, fault }, 2, 3);
        assert!(!r.passed(), "fault {} went unnoticed", fault.name);
    }
}

#[test]
fn submodule_examples() {
    let x0 = Basis::x(h(0));
    let c1 = SubmoduleCandidate::all_except([x0.clone()]);
    assert!(submodule_check(&aab("0", "-1"), &c1, 2, 4).closed);

    let c2 = SubmoduleCandidate::only([Basis::y(h(0))]);
    assert!(submodule_check(&aab("0", "-1/2"), &c2, 2, 4).closed);

    let c3 = SubmoduleCandidate::only([x0]);
    let r = submodule_check(&aab("1/3", "2/5"), &c3, 2, 4);
    assert!(!r.closed);
    let esc = r.escape.unwrap();
    assert_eq!(esc.vector, "x_{0}");
    assert_eq!((esc.generator.as_str(), esc.escaping_term.as_str()), ("L(1)", "(11/15)*x_{1}"));
}

#[test]
fn ns_partition_examples() {
    let a = FamilySpec::aab_symbolic();
    assert_eq!(a.act(&G(h(1)), &Basis::x(h(0))).terms().next().map(|(v, _)| v.clone()), Some(Basis::y(h(1))));
    assert_eq!(a.act(&T(h(1)), &Basis::x(h(0))).terms().next().map(|(v, _)| v.clone()), Some(Basis::x(h(1))));
    assert!(ns_partition_check(&a, 2, 4).is_empty());
    assert!(ns_partition_check(&FamilySpec::bab_symbolic(), 2, 4).is_empty());
}

#[test]
fn b_type_parameter_rules() {
    assert_eq!(FamilySpec::b_type(p("a"), p("b"), None).unwrap(), FamilySpec::bab_symbolic());
    assert_eq!(FamilySpec::b_type(p("a"), p("b"), Some(p("b - 1/2"))).unwrap(), FamilySpec::bab_symbolic());
    assert!(FamilySpec::b_type(p("1/2"), p("0"), Some(p("-3/2"))).is_err());
    assert!(FamilySpec::b_type(p("1/3"), p("0"), Some(p("-3/2"))).is_ok());
    assert!(FamilySpec::b_type(p("a"), p("b"), Some(p("b"))).is_err());
}

fn label_strategy() -> impl Strategy<Value = GeneratorLabel> {
    (0usize..3, -6i64..=6).prop_map(|(k, d)| match k {
        0 => L(h(2 * (d / 2))),
        1 => T(h(if d % 2 == 0 { d + 1 } else { d })),
        _ => G(h(d)),
    })
}

fn basis_strategy() -> impl Strategy<Value = BasisLabel> {
    (any::<bool>(), -6i64..=6).prop_map(|(x, d)| if x { Basis::x(h(d)) } else { Basis::y(h(d)) })
}

fn family_strategy() -> impl Strategy<Value = FamilySpec> {
    (0usize..6, -5i64..=5, 1i64..=4).prop_map(|(k, n, d)| {
        let r = MultiPoly::ratio(n, d);
        match k {
            0 => FamilySpec::Aab { a: r, b: MultiPoly::ratio(d, 3) },
            1 => FamilySpec::Bab { a: r, b: MultiPoly::ratio(-d, 5) },
            2 => FamilySpec::deformed(DeformCase::A1, r),
            3 => FamilySpec::deformed(DeformCase::A2, r),
            4 => FamilySpec::deformed(DeformCase::B1, r),
            _ => FamilySpec::deformed(DeformCase::B2, r),
        }
    })
}

proptest! {
    #[test]
    fn weights_are_additive(spec in family_strategy(), g in label_strategy(), v in basis_strategy()) {
        let target = v.index + g.weight();
        for (w, _) in spec.act(&g, &v).terms() {
            prop_assert_eq!(w.index, target);
        }
    }

    #[test]
    fn bracket_axiom_holds_pointwise(spec in family_strategy(), g1 in label_strategy(), g2 in label_strategy(), v in basis_strategy()) {
        prop_assert!(bracket_action_check(&spec, &g1, &g2, &v).is_zero());
    }
}
