//! The twisted N=2 superconformal algebra: generators, parity and the
//! super-bracket, together with an exhaustive super-Jacobi sweep.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{ExactScalar, MultiPoly};
use crate::index::{HalfInt, Index, IndexClass};

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// The sign (−1)^{|x||y|}.
    pub fn koszul(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum GenKind {
    L,
    T,
    G,
    C,
}

/// A basis element of the algebra. `L` carries an integer index, `T` a
/// half-odd index, `G` any index in ½ℤ; the central element has none.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator<I> {
    L(I),
    T(I),
    G(I),
    C,
}

pub type GeneratorLabel = Generator<HalfInt>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabelError {
    #[error("L needs an integer index, got {0}")]
    LIndex(String),
    #[error("T needs a half-odd index, got {0}")]
    TIndex(String),
}

impl<I: Index> Generator<I> {
    pub fn l(m: I) -> Result<Self, LabelError> {
        if m.is_integer() {
            Ok(Generator::L(m))
        } else {
            Err(LabelError::LIndex(m.to_string()))
        }
    }

    pub fn t(r: I) -> Result<Self, LabelError> {
        if m_is_half(&r) {
            Ok(Generator::T(r))
        } else {
            Err(LabelError::TIndex(r.to_string()))
        }
    }

    pub fn kind(&self) -> GenKind {
        match self {
            Generator::L(_) => GenKind::L,
            Generator::T(_) => GenKind::T,
            Generator::G(_) => GenKind::G,
            Generator::C => GenKind::C,
        }
    }

    pub fn index(&self) -> Option<&I> {
        match self {
            Generator::L(i) | Generator::T(i) | Generator::G(i) => Some(i),
            Generator::C => None,
        }
    }

    /// Index with C counted as zero.
    pub fn weight(&self) -> I {
        self.index().cloned().unwrap_or_else(|| I::constant(HalfInt::ZERO))
    }

    pub fn parity(&self) -> Parity {
        match self {
            Generator::G(_) => Parity::Odd,
            _ => Parity::Even,
        }
    }
}

fn m_is_half<I: Index>(i: &I) -> bool {
    i.class() == IndexClass::HalfOdd
}

pub fn parity<I: Index>(g: &Generator<I>) -> Parity {
    g.parity()
}

impl<I: fmt::Display> fmt::Display for Generator<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::L(i) => write!(f, "L({i})"),
            Generator::T(i) => write!(f, "T({i})"),
            Generator::G(i) => write!(f, "G({i})"),
            Generator::C => write!(f, "C"),
        }
    }
}

impl<I: fmt::Display> fmt::Debug for Generator<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finite linear combination of generators.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GeneratorSum<I: Ord> {
    terms: BTreeMap<Generator<I>, MultiPoly>,
}

impl<I: Index> GeneratorSum<I> {
    pub fn zero() -> Self {
        GeneratorSum { terms: BTreeMap::new() }
    }

    pub fn single(g: Generator<I>) -> Self {
        let mut s = Self::zero();
        s.add(g, MultiPoly::one());
        s
    }

    pub fn add(&mut self, g: Generator<I>, c: MultiPoly) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(g.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add_sum(&mut self, other: &GeneratorSum<I>, scale: &MultiPoly) {
        for (g, c) in &other.terms {
            self.add(g.clone(), c * scale);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator<I>, &MultiPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &Generator<I>) -> MultiPoly {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    /// Bracket of every term with `g` on the right: `[self, g]`.
    pub fn bracket_right(&self, g: &Generator<I>) -> GeneratorSum<I> {
        let mut out = Self::zero();
        for (h, c) in &self.terms {
            out.add_sum(&bracket(h, g), c);
        }
        out
    }

    /// `[g, self]`.
    pub fn bracket_left(&self, g: &Generator<I>) -> GeneratorSum<I> {
        let mut out = Self::zero();
        for (h, c) in &self.terms {
            out.add_sum(&bracket(g, h), c);
        }
        out
    }
}

impl<I: Index> fmt::Display for GeneratorSum<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{g}")?;
        }
        Ok(())
    }
}

impl<I: Index> fmt::Debug for GeneratorSum<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn q(n: i64, d: i64) -> ExactScalar {
    ExactScalar::new(n.into(), d.into())
}

/// The super-bracket on basis elements.
pub fn bracket<I: Index>(g1: &Generator<I>, g2: &Generator<I>) -> GeneratorSum<I> {
    use Generator::*;
    let mut out = GeneratorSum::zero();
    match (g1, g2) {
        (C, _) | (_, C) => {}
        (L(m), L(n)) => {
            let s = m.plus(n);
            out.add(L(s.clone()), m.value() - n.value());
            if s.is(HalfInt::ZERO) {
                let mv = m.value();
                out.add(C, (&mv * &mv * &mv - mv).scale(&q(1, 12)));
            }
        }
        (L(m), T(r)) => out.add(T(r.plus(m)), -r.value()),
        (T(r), L(m)) => out.add(T(r.plus(m)), r.value()),
        (T(r), T(s)) => {
            if r.plus(s).is(HalfInt::ZERO) {
                out.add(C, r.value().scale(&q(1, 3)));
            }
        }
        (L(m), G(p)) => out.add(G(p.plus(m)), m.value().scale(&q(1, 2)) - p.value()),
        (G(p), L(m)) => out.add(G(p.plus(m)), p.value() - m.value().scale(&q(1, 2))),
        (T(r), G(p)) => out.add(G(p.plus(r)), MultiPoly::one()),
        (G(p), T(r)) => out.add(G(p.plus(r)), MultiPoly::int(-1)),
        (G(p), G(qq)) => {
            let s = p.plus(qq);
            let sign: i64 = if p.is_integer() { 1 } else { -1 };
            if s.is_integer() {
                out.add(L(s.clone()), MultiPoly::int(2 * sign));
                if s.is(HalfInt::ZERO) {
                    let pv = p.value();
                    let c = (&pv * &pv - MultiPoly::ratio(1, 4)).scale(&q(sign, 3));
                    out.add(C, c);
                }
            } else {
                out.add(T(s), (p.value() - qq.value()).scale(&q(-sign, 1)));
            }
        }
    }
    out
}

/// All generators with `|doubled index| <= 2w`, the central element last.
/// Within a kind, indices run 0, +½, −½, +1, −1, ...
pub fn generator_window(w: i64) -> Vec<GeneratorLabel> {
    let mut out = Vec::new();
    let order: Vec<i64> = (0..=2 * w).flat_map(|d| if d == 0 { vec![0] } else { vec![d, -d] }).collect();
    for kind in [GenKind::L, GenKind::T, GenKind::G] {
        for &d in &order {
            let h = HalfInt::from_doubled(d);
            match kind {
                GenKind::L if h.is_integer() => out.push(Generator::L(h)),
                GenKind::T if !h.is_integer() => out.push(Generator::T(h)),
                GenKind::G => out.push(Generator::G(h)),
                _ => {}
            }
        }
    }
    out.push(Generator::C);
    out
}

/// `[x,[y,z]] − [[x,y],z] − (−1)^{|x||y|}[y,[x,z]]`.
pub fn jacobi_residual<I: Index>(x: &Generator<I>, y: &Generator<I>, z: &Generator<I>) -> GeneratorSum<I> {
    let mut r = bracket(y, z).bracket_left(x);
    let xy_z = bracket(x, y).bracket_right(z);
    let y_xz = bracket(x, z).bracket_left(y);
    r.add_sum(&xy_z, &MultiPoly::int(-1));
    r.add_sum(&y_xz, &MultiPoly::int(-x.parity().koszul(y.parity())));
    r
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobiViolation {
    pub triple: [String; 3],
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobiReport {
    pub window: i64,
    pub triples_checked: usize,
    pub violations: Vec<JacobiViolation>,
}

pub fn super_jacobi_sweep(w: i64) -> JacobiReport {
    let gens = generator_window(w);
    let violations: Vec<JacobiViolation> = gens
        .par_iter()
        .flat_map_iter(|x| {
            let gens = &gens;
            gens.iter().flat_map(move |y| {
                gens.iter().filter_map(move |z| {
                    let r = jacobi_residual(x, y, z);
                    (!r.is_zero()).then(|| JacobiViolation {
                        triple: [x.to_string(), y.to_string(), z.to_string()],
                        residual: r.to_string(),
                    })
                })
            })
        })
        .collect();
    JacobiReport { window: w, triples_checked: gens.len().pow(3), violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(d: i64) -> HalfInt {
        HalfInt::from_doubled(d)
    }

    fn sum(terms: &[(GeneratorLabel, MultiPoly)]) -> GeneratorSum<HalfInt> {
        let mut s = GeneratorSum::zero();
        for (g, c) in terms {
            s.add(g.clone(), c.clone());
        }
        s
    }

    #[test]
    fn virasoro_central_term() {
        let b = bracket(&Generator::L(HalfInt::int(2)), &Generator::L(HalfInt::int(-2)));
        assert_eq!(b, sum(&[(Generator::L(HalfInt::int(0)), MultiPoly::int(4)), (Generator::C, MultiPoly::ratio(1, 2))]));
    }

    #[test]
    fn current_central_term() {
        let b = bracket(&Generator::T(h(1)), &Generator::T(h(-1)));
        assert_eq!(b, sum(&[(Generator::C, MultiPoly::ratio(1, 6))]));
    }

    #[test]
    fn vanishing_l_g_coefficient() {
        assert!(bracket(&Generator::L(HalfInt::int(1)), &Generator::G(h(1))).is_zero());
    }

    #[test]
    fn fermion_brackets() {
        assert_eq!(
            bracket(&Generator::G(h(1)), &Generator::G(h(3))),
            sum(&[(Generator::L(HalfInt::int(2)), MultiPoly::int(-2))])
        );
        assert_eq!(
            bracket(&Generator::G(h(0)), &Generator::G(h(0))),
            sum(&[(Generator::L(HalfInt::int(0)), MultiPoly::int(2)), (Generator::C, MultiPoly::ratio(-1, 12))])
        );
        assert_eq!(
            bracket(&Generator::G(h(1)), &Generator::G(h(2))),
            sum(&[(Generator::T(h(3)), MultiPoly::ratio(-1, 2))])
        );
    }

    #[test]
    fn parities() {
        assert_eq!(parity(&Generator::L(HalfInt::int(3))), Parity::Even);
        assert_eq!(parity(&Generator::G(h(1))), Parity::Odd);
        assert_eq!(parity(&Generator::T(h(3))), Parity::Even);
    }

    #[test]
    fn label_validation() {
        assert!(Generator::l(h(1)).is_err());
        assert!(Generator::t(h(2)).is_err());
        assert!(Generator::t(h(3)).is_ok());
    }

    #[test]
    fn sample_jacobi_triples() {
        let l = |n| Generator::L(HalfInt::int(n));
        assert!(jacobi_residual(&l(1), &l(2), &l(3)).is_zero());
        assert!(jacobi_residual(&l(1), &Generator::G(h(1)), &Generator::G(h(0))).is_zero());
    }
}
