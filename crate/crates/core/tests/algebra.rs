use proptest::prelude::*;
use twisted_n2::algebra::{
    bracket, generator_window, jacobi_residual, parity, super_jacobi_sweep, GenKind, Generator, GeneratorLabel,
    GeneratorSum, Parity,
};
use twisted_n2::exact::MultiPoly;
use twisted_n2::index::HalfInt;

fn h(doubled: i64) -> HalfInt {
    HalfInt::from_doubled(doubled)
}

fn sum(terms: &[(GeneratorLabel, MultiPoly)]) -> GeneratorSum<HalfInt> {
    let mut out = GeneratorSum::zero();
    for (g, c) in terms {
        out.add(g.clone(), c.clone());
    }
    out
}

use Generator::{C, G, L, T};

#[test]
fn parities() {
    assert_eq!(parity(&L(h(6))), Parity::Even);
    assert_eq!(parity(&G(h(1))), Parity::Odd);
    assert_eq!(parity(&T(h(3))), Parity::Even);
    assert_eq!(parity::<HalfInt>(&C), Parity::Even);
}

#[test]
fn label_validation() {
    assert!(Generator::l(h(1)).is_err());
    assert!(Generator::t(h(2)).is_err());
    assert!(Generator::l(h(-4)).is_ok());
    assert!(Generator::t(h(-1)).is_ok());
}

#[test]
fn bracket_examples() {
    assert_eq!(bracket(&L(h(4)), &L(h(-4))), sum(&[(L(h(0)), MultiPoly::int(4)), (C, MultiPoly::ratio(1, 2))]));
    assert_eq!(bracket(&T(h(1)), &T(h(-1))), sum(&[(C, MultiPoly::ratio(1, 6))]));
    assert!(bracket(&L(h(2)), &G(h(1))).is_zero());
    assert_eq!(bracket(&G(h(1)), &G(h(3))), sum(&[(L(h(4)), MultiPoly::int(-2))]));
    assert_eq!(bracket(&G(h(0)), &G(h(0))), sum(&[(L(h(0)), MultiPoly::int(2)), (C, MultiPoly::ratio(-1, 12))]));
    assert_eq!(bracket(&G(h(1)), &G(h(2))), sum(&[(T(h(3)), MultiPoly::ratio(-1, 2))]));
}

#[test]
fn central_element_brackets_to_zero() {
    for g in generator_window(2) {
        assert!(bracket(&C, &g).is_zero());
        assert!(bracket(&g, &C).is_zero());
    }
}

#[test]
fn jacobi_examples() {
    assert!(jacobi_residual(&L(h(2)), &L(h(4)), &L(h(6))).is_zero());
    assert!(jacobi_residual(&L(h(2)), &G(h(1)), &G(h(0))).is_zero());
}

#[test]
fn jacobi_sweep_window_two() {
    let r = super_jacobi_sweep(2);
    assert_eq!(r.triples_checked, generator_window(2).len().pow(3));
    assert!(r.violations.is_empty(), "{:?}", r.violations.first());
}

fn label_strategy() -> impl Strategy<Value = GeneratorLabel> {
    (0usize..4, -8i64..=8).prop_map(|(k, d)| match k {
        0 => L(h(2 * (d / 2))),
        1 => T(h(if d % 2 == 0 { d + 1 } else { d })),
        2 => G(h(d)),
        _ => C,
    })
}

fn weight(g: &GeneratorLabel) -> i64 {
    g.index().map(|i| i.doubled()).unwrap_or(0)
}

proptest! {
    #[test]
    fn super_antisymmetry(x in label_strategy(), y in label_strategy()) {
        let mut lhs = bracket(&y, &x);
        let sign = x.parity().koszul(y.parity());
        lhs.add_sum(&bracket(&x, &y), &MultiPoly::int(sign));
        prop_assert!(lhs.is_zero());
    }

    #[test]
    fn index_and_parity_are_additive(x in label_strategy(), y in label_strategy()) {
        let odd = x.parity().is_odd() != y.parity().is_odd();
        for (g, _) in bracket(&x, &y).terms() {
            prop_assert_eq!(g.parity().is_odd(), odd);
            if g.kind() != GenKind::C {
                prop_assert_eq!(weight(g), weight(&x) + weight(&y));
            } else {
                prop_assert_eq!(weight(&x) + weight(&y), 0);
            }
        }
    }

    #[test]
    fn jacobi_on_random_triples(x in label_strategy(), y in label_strategy(), z in label_strategy()) {
        prop_assert!(jacobi_residual(&x, &y, &z).is_zero());
    }
}
