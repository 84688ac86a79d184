use serde::Serialize;

use crate::algebra::Generator;
use crate::exact::{ExactScalar, MultiPoly, RatFunc};
use crate::index::{HalfInt, Index, IndexClass};

use super::{Basis, LinComb, Letter, Module};

/// The four deformations. The distinguished vector is `x_0`, incoming to
/// `y_0`, `y_0`, and incoming to `y_{1/2}` respectively.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum DeformCase {
    A1,
    A2,
    B1,
    B2,
}

impl DeformCase {
    pub const ALL: [DeformCase; 4] = [DeformCase::A1, DeformCase::A2, DeformCase::B1, DeformCase::B2];

    /// +1 when `e_n = n(α'n+α)`, −1 when `e_n = −n(α'n+α)`.
    pub fn sign(self) -> i64 {
        match self {
            DeformCase::A1 | DeformCase::B1 => -1,
            DeformCase::A2 | DeformCase::B2 => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DeformCase::A1 => "A1",
            DeformCase::A2 => "A2",
            DeformCase::B1 => "B1",
            DeformCase::B2 => "B2",
        }
    }
}

/// Coefficients at the distinguished vector of a deformed family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeformValues {
    /// `e_n = ∓n(α'n+α)`, `g_q = 2qα'+α`, `f_r = ∓2rα'` (A) or `∓2α'` (B).
    Closed { alpha: MultiPoly, alpha_prime: MultiPoly },
    /// Fresh indeterminates `e[n]`, `g[q]`, `f[r]`.
    Unknowns,
}

/// How the integer-indexed `G` coefficients of a generic candidate are given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GForms {
    /// Fresh indeterminates `g[n,k]`, `g'[n,k]`.
    Unknowns,
    /// Solved forms with constants `alpha1..alpha4` (case A, `b' = b`).
    Alpha([MultiPoly; 4]),
    /// Solved forms with constants `beta1..beta4` (case B, `b' = b − 1/2`).
    Beta([MultiPoly; 4]),
    /// Solved forms with constants `mu1..mu4` (case B, `b = 0`, `b' = −3/2`).
    Mu([MultiPoly; 4]),
    /// General solution of the `k`-recurrences, one free function of `n` per
    /// branch (`u[n]`, `u'[n]` for `g`; `w[n]`, `w'[n]` for `g'`).
    KernelA,
    KernelB,
    KernelB0,
}

impl GForms {
    pub fn alpha_symbols() -> GForms {
        GForms::Alpha(symbols("alpha"))
    }
    pub fn beta_symbols() -> GForms {
        GForms::Beta(symbols("beta"))
    }
    pub fn mu_symbols() -> GForms {
        GForms::Mu(symbols("mu"))
    }
}

fn symbols(stem: &str) -> [MultiPoly; 4] {
    [1, 2, 3, 4].map(|i| MultiPoly::var(&format!("{stem}{i}")))
}

/// How `T` acts on a generic candidate.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TSource {
    /// Fresh indeterminates `f[r,k]`, `f'[r,k]`.
    Unknowns,
    /// The closed forms stated alongside the `G` forms.
    Stated,
    /// `T_r = (1/r)(G_r G_0 + G_0 G_r)`.
    Composition,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMode {
    pub g: GForms,
    pub t: TSource,
}

impl CoeffMode {
    pub fn unknowns() -> CoeffMode {
        CoeffMode { g: GForms::Unknowns, t: TSource::Unknowns }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Aab { a: MultiPoly, b: MultiPoly },
    Bab { a: MultiPoly, b: MultiPoly },
    Deformed { case: DeformCase, values: DeformValues },
    GenericA { a: MultiPoly, b: MultiPoly, bprime: MultiPoly, coeffs: CoeffMode },
    GenericB { a: MultiPoly, b: MultiPoly, bprime: MultiPoly, coeffs: CoeffMode },
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("the candidate with b = 0, b' = -3/2 requires a outside (1/2)Z, got a = {0}")]
    ExcludedWeight(String),
    #[error("b' = {bprime} is not allowed with b = {b}; use b' = b - 1/2, or b = 0 with b' = -3/2")]
    BadBprime { b: String, bprime: String },
}

fn half() -> MultiPoly {
    MultiPoly::ratio(1, 2)
}

fn halve(p: &MultiPoly) -> MultiPoly {
    p.scale(&ExactScalar::new(1.into(), 2.into()))
}

impl FamilySpec {
    pub fn aab_symbolic() -> FamilySpec {
        FamilySpec::Aab { a: MultiPoly::var("a"), b: MultiPoly::var("b") }
    }

    pub fn bab_symbolic() -> FamilySpec {
        FamilySpec::Bab { a: MultiPoly::var("a"), b: MultiPoly::var("b") }
    }

    /// The stated deformed family, normalized to `α' = 1`.
    pub fn deformed(case: DeformCase, alpha: MultiPoly) -> FamilySpec {
        FamilySpec::Deformed { case, values: DeformValues::Closed { alpha, alpha_prime: MultiPoly::one() } }
    }

    pub fn generic_a_unknowns() -> FamilySpec {
        FamilySpec::GenericA {
            a: MultiPoly::var("a"),
            b: MultiPoly::var("b"),
            bprime: MultiPoly::var("b'"),
            coeffs: CoeffMode::unknowns(),
        }
    }

    pub fn generic_b_unknowns() -> FamilySpec {
        FamilySpec::GenericB {
            a: MultiPoly::var("a"),
            b: MultiPoly::var("b"),
            bprime: MultiPoly::var("b'"),
            coeffs: CoeffMode::unknowns(),
        }
    }

    /// The B-type family for a requested `b'`. `None` or `b − 1/2` gives the
    /// module `B_{a,b}`; `(b, b') = (0, −3/2)` gives the candidate with all
    /// `μ_i = 0`, which needs `a ∉ ½ℤ`.
    pub fn b_type(a: MultiPoly, b: MultiPoly, bprime: Option<MultiPoly>) -> Result<FamilySpec, FamilyError> {
        let Some(bp) = bprime else {
            return Ok(FamilySpec::Bab { a, b });
        };
        if bp == &b - &half() {
            return Ok(FamilySpec::Bab { a, b });
        }
        if b.is_zero() && bp == MultiPoly::ratio(-3, 2) {
            if let Some(av) = a.as_constant() {
                if (av.clone() * ExactScalar::from_integer(2.into())).is_integer() {
                    return Err(FamilyError::ExcludedWeight(crate::exact::format_scalar(&av)));
                }
            }
            return Ok(FamilySpec::b0_candidate(a));
        }
        Err(FamilyError::BadBprime { b: b.to_string(), bprime: bp.to_string() })
    }

    /// The candidate `B_{a,0,−3/2}` with every `μ_i = 0`.
    pub fn b0_candidate(a: MultiPoly) -> FamilySpec {
        FamilySpec::GenericB {
            a,
            b: MultiPoly::zero(),
            bprime: MultiPoly::ratio(-3, 2),
            coeffs: CoeffMode { g: GForms::Mu(std::array::from_fn(|_| MultiPoly::zero())), t: TSource::Composition },
        }
    }

    pub fn name(&self) -> String {
        match self {
            FamilySpec::Aab { .. } => "Aab".into(),
            FamilySpec::Bab { .. } => "Bab".into(),
            FamilySpec::Deformed { case, .. } => case.name().into(),
            FamilySpec::GenericA { .. } => "GenericA".into(),
            FamilySpec::GenericB { .. } => "GenericB".into(),
        }
    }

    /// Name with parameters, e.g. `A(0, -1)` or `A1(alpha = 2/7)`.
    pub fn label(&self) -> String {
        match self {
            FamilySpec::Aab { a, b } => format!("A({a}, {b})"),
            FamilySpec::Bab { a, b } => format!("B({a}, {b})"),
            FamilySpec::Deformed { case, values: DeformValues::Closed { alpha, alpha_prime } } => {
                if alpha_prime.as_constant().is_some_and(|c| c == ExactScalar::from_integer(1.into())) {
                    format!("{}(alpha = {alpha})", case.name())
                } else {
                    format!("{}(alpha = {alpha}, alpha' = {alpha_prime})", case.name())
                }
            }
            FamilySpec::Deformed { case, values: DeformValues::Unknowns } => format!("{}(unknowns)", case.name()),
            FamilySpec::GenericA { a, b, bprime, .. } => format!("GenericA({a}, {b}, {bprime})"),
            FamilySpec::GenericB { a, b, bprime, .. } => format!("GenericB({a}, {b}, {bprime})"),
        }
    }
}

fn sign2<I: Index>(q: &I) -> i64 {
    if q.is_integer() {
        1
    } else {
        -1
    }
}

fn unknown(name: &str, idx: &[String]) -> MultiPoly {
    MultiPoly::var(&format!("{name}[{}]", idx.join(",")))
}

fn rf(p: MultiPoly) -> RatFunc {
    RatFunc::poly(p)
}

fn div(num: MultiPoly, den: MultiPoly) -> RatFunc {
    RatFunc::new(num, den).expect("generic denominators are nonzero")
}

fn one_term<I: Index>(letter: Letter, index: I, c: RatFunc) -> LinComb<I> {
    LinComb::single(Basis { letter, index }, c)
}

impl<I: Index> Module<I> for FamilySpec {
    fn act(&self, g: &Generator<I>, v: &Basis<I>) -> LinComb<I> {
        if let Generator::C = g {
            return LinComb::zero();
        }
        match self {
            FamilySpec::Aab { a, b } => act_aab(a, b, g, v),
            FamilySpec::Bab { a, b } => act_bab(a, b, g, v),
            FamilySpec::Deformed { case, values } => act_deformed(*case, values, g, v),
            FamilySpec::GenericA { a, b, bprime, coeffs } => act_generic(self, true, a, b, bprime, coeffs, g, v),
            FamilySpec::GenericB { a, b, bprime, coeffs } => act_generic(self, false, a, b, bprime, coeffs, g, v),
        }
    }
}

fn act_aab<I: Index>(a: &MultiPoly, b: &MultiPoly, g: &Generator<I>, v: &Basis<I>) -> LinComb<I> {
    let k = v.index.value();
    let (tgt, c) = match (g, v.letter) {
        (Generator::L(n), Letter::X) => (Letter::X, a - &k + b * &n.value()),
        (Generator::L(n), Letter::Y) => (Letter::Y, a - &k + (b + &half()) * n.value()),
        (Generator::T(_), Letter::X) => (Letter::X, (b + &MultiPoly::one()).times(-2)),
        (Generator::T(_), Letter::Y) => (Letter::Y, -(b.times(2) + MultiPoly::one())),
        (Generator::G(_), Letter::X) => (Letter::Y, MultiPoly::one()),
        (Generator::G(q), Letter::Y) => {
            let qv = q.value();
            let c = a - &k + b.times(2) * &qv + qv;
            (Letter::X, c.times(sign2(q)))
        }
        (Generator::C, _) => unreachable!(),
    };
    one_term(tgt, v.index.plus(&g.weight()), rf(c))
}

fn act_bab<I: Index>(a: &MultiPoly, b: &MultiPoly, g: &Generator<I>, v: &Basis<I>) -> LinComb<I> {
    let k = v.index.value();
    let kint = v.index.is_integer();
    let (tgt, c) = match (g, v.letter) {
        (Generator::L(n), Letter::X) => (Letter::X, a - &k + b * &n.value()),
        (Generator::L(n), Letter::Y) => {
            let s = if kint { b - &half() } else { b + &half() };
            (Letter::Y, a - &k + s * n.value())
        }
        (Generator::T(_), Letter::X) => (Letter::X, MultiPoly::one()),
        (Generator::T(r), Letter::Y) => {
            let c = if kint { MultiPoly::zero() } else { (b.times(2) + MultiPoly::one()) * r.value() };
            (Letter::Y, c)
        }
        (Generator::G(q), Letter::X) => {
            let s = sign2(q);
            let c = if v.index.plus(q).is_integer() {
                (a - &k + b.times(2) * q.value()).times(s)
            } else {
                MultiPoly::int(-s)
            };
            (Letter::Y, c)
        }
        (Generator::G(q), Letter::Y) => {
            let c = if kint { MultiPoly::one() } else { -(a - &k + b.times(2) * q.value() + q.value()) };
            (Letter::X, c)
        }
        (Generator::C, _) => unreachable!(),
    };
    one_term(tgt, v.index.plus(&g.weight()), rf(c))
}

struct Deform<'a> {
    values: &'a DeformValues,
}

impl Deform<'_> {
    fn e<I: Index>(&self, n: &I, sign: i64) -> MultiPoly {
        match self.values {
            DeformValues::Closed { alpha, alpha_prime } => {
                let nv = n.value();
                (&nv * &(alpha_prime * &nv + alpha.clone())).times(sign)
            }
            DeformValues::Unknowns => unknown("e", &[n.key()]),
        }
    }

    fn g<I: Index>(&self, q: &I) -> MultiPoly {
        match self.values {
            DeformValues::Closed { alpha, alpha_prime } => (alpha_prime * &q.value()).times(2) + alpha.clone(),
            DeformValues::Unknowns => unknown("g", &[q.key()]),
        }
    }

    /// `f_r`; `with_r` selects the A-type form `∓2rα'` over the B-type `∓2α'`.
    fn f<I: Index>(&self, r: &I, sign: i64, with_r: bool) -> MultiPoly {
        match self.values {
            DeformValues::Closed { alpha_prime, .. } => {
                let base = alpha_prime.times(2 * sign);
                if with_r {
                    base * r.value()
                } else {
                    base
                }
            }
            DeformValues::Unknowns => unknown("f", &[r.key()]),
        }
    }
}

fn act_deformed<I: Index>(case: DeformCase, values: &DeformValues, g: &Generator<I>, v: &Basis<I>) -> LinComb<I> {
    let d = Deform { values };
    let k = v.index.value();
    let kint = v.index.is_integer();
    let at0 = v.index.is(HalfInt::ZERO);
    let gi = g.weight();
    let to_special = |c: HalfInt| v.index.plus(&gi).is(c);
    let (tgt, c) = match case {
        DeformCase::A1 => match (g, v.letter) {
            (Generator::L(n), Letter::X) => (Letter::X, if at0 { d.e(n, -1) } else { -(&k + &n.value()) }),
            (Generator::L(n), Letter::Y) => (Letter::Y, -(&k + &halve(&n.value()))),
            (Generator::T(r), Letter::X) => (Letter::X, if at0 { d.f(r, -1, true) } else { MultiPoly::zero() }),
            (Generator::T(_), Letter::Y) => (Letter::Y, MultiPoly::one()),
            (Generator::G(q), Letter::X) => (Letter::Y, if at0 { d.g(q) } else { MultiPoly::one() }),
            (Generator::G(q), Letter::Y) => (Letter::X, (&k + &q.value()).times(-sign2(q))),
            (Generator::C, _) => unreachable!(),
        },
        DeformCase::A2 => match (g, v.letter) {
            (Generator::L(n), Letter::X) => (Letter::X, -(&k + &halve(&n.value()))),
            (Generator::L(n), Letter::Y) => (Letter::Y, if to_special(HalfInt::ZERO) { d.e(n, 1) } else { -k.clone() }),
            (Generator::T(_), Letter::X) => (Letter::X, MultiPoly::int(-1)),
            (Generator::T(r), Letter::Y) => {
                (Letter::Y, if to_special(HalfInt::ZERO) { d.f(r, 1, true) } else { MultiPoly::zero() })
            }
            (Generator::G(q), Letter::X) => (Letter::Y, if to_special(HalfInt::ZERO) { d.g(q) } else { MultiPoly::one() }),
            (Generator::G(q), Letter::Y) => (Letter::X, k.times(-sign2(q))),
            (Generator::C, _) => unreachable!(),
        },
        DeformCase::B1 => match (g, v.letter) {
            (Generator::L(n), Letter::X) => (Letter::X, -(&k + &halve(&n.value()))),
            (Generator::L(n), Letter::Y) => {
                let c = if !kint {
                    -k.clone()
                } else if at0 {
                    d.e(n, -1)
                } else {
                    -(&k + &n.value())
                };
                (Letter::Y, c)
            }
            (Generator::T(_), Letter::X) => (Letter::X, MultiPoly::one()),
            (Generator::T(r), Letter::Y) => (Letter::Y, if at0 { d.f(r, -1, false) } else { MultiPoly::zero() }),
            (Generator::G(q), Letter::X) => {
                let s = -sign2(q);
                let c = if v.index.plus(q).is_integer() { (&k + &q.value()).times(s) } else { MultiPoly::int(s) };
                (Letter::Y, c)
            }
            (Generator::G(q), Letter::Y) => {
                let c = if !kint {
                    k.clone()
                } else if at0 {
                    d.g(q)
                } else {
                    MultiPoly::one()
                };
                (Letter::X, c)
            }
            (Generator::C, _) => unreachable!(),
        },
        DeformCase::B2 => match (g, v.letter) {
            (Generator::L(n), Letter::X) => {
                (Letter::X, half() - &k - halve(&n.value()))
            }
            (Generator::L(n), Letter::Y) => {
                let c = if kint {
                    half() - &k - n.value()
                } else if to_special(HalfInt::HALF) {
                    d.e(n, 1)
                } else {
                    half() - &k
                };
                (Letter::Y, c)
            }
            (Generator::T(_), Letter::X) => (Letter::X, MultiPoly::one()),
            (Generator::T(r), Letter::Y) => {
                (Letter::Y, if to_special(HalfInt::HALF) { d.f(r, 1, false) } else { MultiPoly::zero() })
            }
            (Generator::G(q), Letter::X) => {
                let s = sign2(q);
                let c = if v.index.plus(q).is_integer() {
                    (half() - &k - q.value()).times(s)
                } else if to_special(HalfInt::HALF) {
                    d.g(q).times(-s)
                } else {
                    MultiPoly::int(-s)
                };
                (Letter::Y, c)
            }
            (Generator::G(_), Letter::Y) => (Letter::X, if kint { MultiPoly::one() } else { &k - &half() }),
            (Generator::C, _) => unreachable!(),
        },
    };
    one_term(tgt, v.index.plus(&gi), rf(c))
}

#[allow(clippy::too_many_arguments)]
fn act_generic<I: Index>(
    spec: &FamilySpec,
    case_a: bool,
    a: &MultiPoly,
    b: &MultiPoly,
    bp: &MultiPoly,
    coeffs: &CoeffMode,
    g: &Generator<I>,
    v: &Basis<I>,
) -> LinComb<I> {
    let k = v.index.value();
    let kint = v.index.is_integer();
    let h = half();
    let two = ExactScalar::from_integer(2.into());
    let dest = v.index.plus(&g.weight());
    match g {
        Generator::L(m) => {
            let s = match (case_a, v.letter, kint) {
                (true, Letter::X, true) => b.clone(),
                (true, Letter::X, false) => bp.clone(),
                (true, Letter::Y, true) => bp + &h,
                (true, Letter::Y, false) => b + &h,
                (false, Letter::X, true) => b.clone(),
                (false, Letter::X, false) => bp + &h,
                (false, Letter::Y, true) => bp.clone(),
                (false, Letter::Y, false) => b + &h,
            };
            one_term(v.letter, dest, rf(a - &k + s * m.value()))
        }
        Generator::G(p) if !p.is_integer() => {
            let two_p = p.value().scale(&two);
            let shifted = |s: MultiPoly| -(a - &k + s * &two_p);
            let (tgt, c) = match (case_a, v.letter, kint) {
                (true, Letter::X, _) => (Letter::Y, MultiPoly::one()),
                (true, Letter::Y, true) => (Letter::X, shifted(bp + &h)),
                (true, Letter::Y, false) => (Letter::X, shifted(b + &h)),
                (false, Letter::X, true) => (Letter::Y, MultiPoly::one()),
                (false, Letter::X, false) => (Letter::Y, shifted(bp + &h)),
                (false, Letter::Y, true) => (Letter::X, MultiPoly::one()),
                (false, Letter::Y, false) => (Letter::X, shifted(b + &h)),
            };
            one_term(tgt, dest, rf(c))
        }
        Generator::G(n) => {
            let tgt = match v.letter {
                Letter::X => Letter::Y,
                Letter::Y => Letter::X,
            };
            one_term(tgt, dest, g_coeff(a, b, &coeffs.g, v.letter, n, &v.index))
        }
        Generator::T(r) => {
            let c = match coeffs.t {
                TSource::Composition => return t_by_composition(spec, r, v),
                TSource::Stated => stated_t(a, b, &coeffs.g, v.letter, r, &v.index),
                TSource::Unknowns => None,
            };
            let c = c.unwrap_or_else(|| {
                let name = if v.letter == Letter::X { "f" } else { "f'" };
                rf(unknown(name, &[r.key(), v.index.key()]))
            });
            one_term(v.letter, dest, c)
        }
        Generator::C => LinComb::zero(),
    }
}

fn g_coeff<I: Index>(
    a: &MultiPoly,
    b: &MultiPoly,
    forms: &GForms,
    letter: Letter,
    n: &I,
    k: &I,
) -> RatFunc {
    let kv = k.value();
    let nv = n.value();
    let kint = k.is_integer();
    let ak = a - &kv;
    let two_b = b.scale(&ExactScalar::from_integer(2.into()));
    let lin = |extra: bool| -> MultiPoly {
        let mut c = &ak + &(&two_b * &nv);
        if extra {
            c += &nv;
        }
        c
    };
    let named = |stem: &str| unknown(stem, &[n.key()]);
    match (forms, letter) {
        (GForms::Unknowns, Letter::X) => rf(unknown("g", &[n.key(), k.key()])),
        (GForms::Unknowns, Letter::Y) => rf(unknown("g'", &[n.key(), k.key()])),
        (GForms::Alpha(al), Letter::X) => rf(if kint { al[0].clone() } else { al[1].clone() }),
        (GForms::Alpha(al), Letter::Y) => rf(lin(true) * if kint { &al[2] } else { &al[3] }),
        (GForms::Beta(be), Letter::X) => rf(if kint { lin(false) * &be[0] } else { be[1].clone() }),
        (GForms::Beta(be), Letter::Y) => rf(if kint { be[2].clone() } else { lin(true) * &be[3] }),
        (GForms::Mu(mu), Letter::X) => {
            if kint {
                rf(&ak * &(&ak - &nv.times(2)) * &mu[0])
            } else {
                div(mu[1].clone(), ak)
            }
        }
        (GForms::Mu(mu), Letter::Y) => {
            if kint {
                div(mu[2].clone(), &ak - &nv)
            } else {
                rf(&(&ak - &nv) * &(&ak + &nv) * &mu[3])
            }
        }
        (GForms::KernelA, Letter::X) => rf(if kint { named("u") } else { named("u'") }),
        (GForms::KernelA, Letter::Y) => rf(lin(true) * if kint { named("w") } else { named("w'") }),
        (GForms::KernelB, Letter::X) => rf(if kint { lin(false) * named("u") } else { named("u'") }),
        (GForms::KernelB, Letter::Y) => rf(if kint { named("w") } else { lin(true) * named("w'") }),
        (GForms::KernelB0, Letter::X) => {
            if kint {
                rf(&ak * &(&ak - &nv.times(2)) * &named("u"))
            } else {
                div(named("u'"), ak)
            }
        }
        (GForms::KernelB0, Letter::Y) => {
            if kint {
                div(named("w"), &ak - &nv)
            } else {
                rf(&(&ak - &nv) * &(&ak + &nv) * &named("w'"))
            }
        }
    }
}

/// The closed `T` forms that accompany the solved `G` forms.
fn stated_t<I: Index>(a: &MultiPoly, b: &MultiPoly, forms: &GForms, letter: Letter, r: &I, k: &I) -> Option<RatFunc> {
    let rv = r.value();
    let ak = a - &k.value();
    let kint = k.is_integer();
    let two_br = b.times(2) * &rv;
    let over_r = |num: MultiPoly| div(num, rv.clone());
    Some(match (forms, letter, kint) {
        (GForms::Alpha(al), Letter::X, true) => over_r((&ak - &rv) * &al[3] - (&ak + &two_br + &rv) * &al[0]),
        (GForms::Alpha(al), Letter::X, false) => over_r((&ak - &rv) * &al[2] - (&ak + &two_br + &rv) * &al[1]),
        (GForms::Alpha(al), Letter::Y, true) => over_r(&ak * &al[2] - (&ak + &two_br + &rv) * &al[1]),
        (GForms::Alpha(al), Letter::Y, false) => over_r(&ak * &al[3] - (&ak + &two_br + &rv) * &al[0]),
        (GForms::Beta(be), Letter::X, true) => over_r(&ak * &be[0] + (&ak - &rv) * &be[3]),
        (GForms::Beta(be), Letter::X, false) => over_r(-((&ak + &two_br + &rv) * &be[1] + (&ak + &two_br) * &be[2])),
        (GForms::Beta(be), Letter::Y, true) => over_r(&be[1] + &be[2]),
        (GForms::Beta(be), Letter::Y, false) => over_r(-(&ak * &(&ak + &two_br) * &be[3]
            + (&ak - &rv) * (&ak + &two_br + &rv) * &be[0])),
        (GForms::Mu(mu), Letter::X, true) => over_r(&ak * &ak * (&mu[0] + &mu[3])),
        (GForms::Mu(mu), Letter::X, false) => div(
            -((&ak - &rv.times(2)) * &mu[2] + (&ak + &rv) * &mu[1]),
            &rv * &ak,
        ),
        (GForms::Mu(mu), Letter::Y, true) => div(&mu[1] + &mu[2], &rv * &ak),
        (GForms::Mu(mu), Letter::Y, false) => over_r(-((&ak + &rv) * (&ak - &rv) * (&ak - &rv) * &mu[0]
            + &ak * &ak * (&ak - &rv.times(2)) * &mu[3])),
        _ => return None,
    })
}

/// `T_r v = (1/r)(G_r G_0 + G_0 G_r) v`.
pub fn t_by_composition<I: Index, M: Module<I> + ?Sized>(m: &M, r: &I, v: &Basis<I>) -> LinComb<I> {
    let g0 = Generator::G(I::constant(HalfInt::ZERO));
    let gr = Generator::G(r.clone());
    let mut sum = m.act_comb(&gr, &m.act(&g0, v));
    sum.add_scaled(&m.act_comb(&g0, &m.act(&gr, v)), &RatFunc::one());
    let rv = r.value();
    let mut out = LinComb::zero();
    for (w, c) in sum.terms() {
        out.add(w.clone(), c.div_poly(&rv).expect("r is nonzero"));
    }
    out
}

impl IndexClass {
    pub fn name(self) -> &'static str {
        match self {
            IndexClass::Integer => "Z",
            IndexClass::HalfOdd => "Z+1/2",
        }
    }
}
