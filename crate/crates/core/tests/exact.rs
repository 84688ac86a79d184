use proptest::prelude::*;
use twisted_n2::exact::{
    format_scalar, parse_scalar, quadratic_root_data, ExactError, ExactScalar, MultiPoly, RatFunc, Var,
};

fn p(s: &str) -> MultiPoly {
    MultiPoly::parse(s).unwrap()
}

fn q(n: i64, d: i64) -> ExactScalar {
    ExactScalar::new(n.into(), d.into())
}

#[test]
fn normalize_collects_and_orders() {
    assert_eq!(p("m*b + m*b - m*b"), p("m*b"));
    assert!(p("0*m^2").is_zero());
    assert_eq!(p("b*m"), p("m*b"));
    assert_eq!(p("m*b").len(), 1);
}

#[test]
fn substitute_examples() {
    let f = p("m^2*b - m*b'");
    let v = f.substitute_all(&[(Var::new("m"), MultiPoly::int(2)), (Var::new("b"), MultiPoly::ratio(1, 3)), (Var::new("b'"), MultiPoly::zero())]);
    assert_eq!(v.as_constant(), Some(q(4, 3)));

    let g = p("(b - b')*m^6").substitute(&Var::new("b'"), &p("b"));
    assert!(g.is_zero());

    assert_eq!(p("k").substitute(&Var::new("k"), &p("k - m")), p("k - m"));
}

#[test]
fn substitution_is_simultaneous() {
    let f = p("m - n");
    let swapped = f.substitute_all(&[(Var::new("m"), p("n")), (Var::new("n"), p("m"))]);
    assert_eq!(swapped, p("n - m"));
}

#[test]
fn exact_divide_examples() {
    assert_eq!(p("(b - b')*m^6").exact_divide(&p("m^6")).unwrap(), p("b - b'"));
    assert_eq!(p("r*(-2*b - 2)").exact_divide(&p("r")).unwrap(), p("-2*b - 2"));
    assert_eq!(p("m^2 + 1").exact_divide(&p("m")), Err(ExactError::NotDivisible));
    assert_eq!(p("m").exact_divide(&MultiPoly::zero()), Err(ExactError::DivisionByZero));
}

#[test]
fn quadratic_examples() {
    let d1 = quadratic_root_data(&p("b'^2 + (2*b + 3)*b' + b^2 + b"), &Var::new("b'")).unwrap();
    assert_eq!(d1.discriminant, p("8*b + 9"));

    let d2 = quadratic_root_data(&p("b^2 + 2*b*b' + 5*b + 3*b' + b'^2 + 3"), &Var::new("b'")).unwrap();
    assert_eq!(d2.discriminant, p("-8*b - 3"));

    let d3 = quadratic_root_data(&p("b'^2 + 1"), &Var::new("b'")).unwrap();
    assert_eq!(d3.discriminant, MultiPoly::int(-4));

    assert_eq!(quadratic_root_data(&p("b'^3"), &Var::new("b'")), Err(ExactError::NotQuadratic(3)));
}

#[test]
fn scalar_text_round_trip() {
    assert_eq!(parse_scalar("-3/6").unwrap(), q(-1, 2));
    assert_eq!(format_scalar(&q(-1, 2)), "-1/2");
    assert_eq!(format_scalar(&q(4, 2)), "2");
    assert!(parse_scalar("1/0").is_err());
    assert!(parse_scalar("x").is_err());
}

#[test]
fn ratfunc_reduces_common_factors() {
    let r = RatFunc::new(p("(a + 1)*(a - 1)"), p("a + 1")).unwrap();
    assert_eq!(r, RatFunc::poly(p("a - 1")));
    assert!(RatFunc::new(p("a"), MultiPoly::zero()).is_err());
    let half = RatFunc::new(MultiPoly::one(), MultiPoly::int(2)).unwrap();
    let sum = &half + &half;
    assert_eq!(sum, RatFunc::one());
}

const VARS: [&str; 4] = ["a", "b", "b'", "m"];

fn poly_strategy() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-6i64..=6, 1i64..=3, prop::array::uniform4(0u32..3)), 0..5).prop_map(|terms| {
        let mut out = MultiPoly::zero();
        for (n, d, exps) in terms {
            let mut t = MultiPoly::ratio(n, d);
            for (v, e) in VARS.iter().zip(exps) {
                t = &t * &MultiPoly::var(v).pow(e);
            }
            out += t;
        }
        out
    })
}

fn binding_strategy() -> impl Strategy<Value = Vec<(Var, MultiPoly)>> {
    prop::array::uniform4((-4i64..=4, 1i64..=3)).prop_map(|vals| {
        VARS.iter().zip(vals).map(|(v, (n, d))| (Var::new(v), MultiPoly::ratio(n, d))).collect()
    })
}

proptest! {
    #[test]
    fn ring_laws(x in poly_strategy(), y in poly_strategy(), z in poly_strategy()) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn exact_divide_inverts_product(x in poly_strategy(), y in poly_strategy()) {
        prop_assume!(!y.is_zero());
        prop_assert_eq!((&x * &y).exact_divide(&y).unwrap(), x);
    }

    #[test]
    fn substitute_is_a_homomorphism(x in poly_strategy(), y in poly_strategy(), subs in binding_strategy()) {
        let s = |f: &MultiPoly| f.substitute_all(&subs);
        prop_assert_eq!(s(&(&x + &y)), &s(&x) + &s(&y));
        prop_assert_eq!(s(&(&x * &y)), &s(&x) * &s(&y));
    }

    #[test]
    fn partial_substitution_keeps_free_symbols(x in poly_strategy(), n in -4i64..=4) {
        let sub = x.substitute(&Var::new("m"), &MultiPoly::int(n));
        prop_assert!(!sub.contains_var(&Var::new("m")));
        for v in x.vars() {
            if v.name() != "m" {
                prop_assert!(x.contains_var(&v));
            }
        }
    }

    #[test]
    fn discriminant_identity(x in poly_strategy(), y in poly_strategy(), z in poly_strategy()) {
        let bp = Var::new("b'");
        let free = |f: MultiPoly| f.substitute(&bp, &MultiPoly::int(1));
        let (a, b, c) = (free(x), free(y), free(z));
        prop_assume!(!a.is_zero());
        let bv = MultiPoly::from_var(bp.clone());
        let f = &(&(&a * &bv.pow(2)) + &(&b * &bv)) + &c;
        let d = quadratic_root_data(&f, &bp).unwrap();
        prop_assert_eq!(&d.discriminant, &(&(&d.b * &d.b) - &(&MultiPoly::int(4) * &(&d.a * &d.c))));
        prop_assert_eq!(d.polynomial(), f);
    }

    #[test]
    fn text_round_trip(x in poly_strategy()) {
        prop_assert_eq!(MultiPoly::parse(&x.to_string()).unwrap(), x);
    }
}
