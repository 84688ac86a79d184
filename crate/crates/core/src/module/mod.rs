//! Weight modules: basis labels, linear combinations, the action interface,
//! the concrete families and the generic candidates, and the verifiers built
//! on top of them.

mod family;
mod fault;
mod sweep;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::{bracket, Generator, GeneratorSum};
use crate::exact::{MultiPoly, RatFunc};
use crate::index::{HalfInt, Index};

pub use family::{t_by_composition, CoeffMode, DeformCase, DeformValues, FamilyError, FamilySpec, GForms, TSource};
pub use fault::{Fault, FaultOp, Faulty, Selector};
pub use sweep::{
    axiom_sweep, basis_window, ns_partition_check, quotient_sweep, submodule_check, SubmoduleCandidate,
    SubmoduleReport, SweepReport, Violation,
};

#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub enum Letter {
    X,
    Y,
}

/// A basis vector `x_k` or `y_k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basis<I> {
    pub letter: Letter,
    pub index: I,
}

pub type BasisLabel = Basis<HalfInt>;

impl<I> Basis<I> {
    pub fn x(index: I) -> Self {
        Basis { letter: Letter::X, index }
    }

    pub fn y(index: I) -> Self {
        Basis { letter: Letter::Y, index }
    }
}

impl<I: fmt::Display> fmt::Display for Basis<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = match self.letter {
            Letter::X => "x",
            Letter::Y => "y",
        };
        write!(f, "{l}_{{{}}}", self.index)
    }
}

impl<I: fmt::Display> fmt::Debug for Basis<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Finite combination of basis vectors; zero coefficients are dropped.
#[derive(Clone, PartialEq, Eq)]
pub struct LinComb<I: Ord> {
    terms: BTreeMap<Basis<I>, RatFunc>,
}

impl<I: Index> Default for LinComb<I> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<I: Index> LinComb<I> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(v: Basis<I>, c: RatFunc) -> Self {
        let mut s = Self::zero();
        s.add(v, c);
        s
    }

    pub fn add(&mut self, v: Basis<I>, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&v) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&v);
                }
            }
            None => {
                self.terms.insert(v, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LinComb<I>, s: &RatFunc) {
        for (v, c) in &other.terms {
            self.add(v.clone(), c * s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Basis<I>, &RatFunc)> {
        self.terms.iter()
    }

    pub fn coeff(&self, v: &Basis<I>) -> RatFunc {
        self.terms.get(v).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn retain(&mut self, keep: impl Fn(&Basis<I>) -> bool) {
        self.terms.retain(|v, _| keep(v));
    }
}

impl<I: Index> fmt::Display for LinComb<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (v, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{v}")?;
        }
        Ok(())
    }
}

impl<I: Index> fmt::Debug for LinComb<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A linear combination of words in the generators, acting on a module by
/// composition (rightmost letter first).
#[derive(Clone, Debug)]
pub struct OpExpr<I: Index> {
    terms: Vec<(MultiPoly, Vec<Generator<I>>)>,
}

impl<I: Index> OpExpr<I> {
    pub fn gen(g: Generator<I>) -> Self {
        OpExpr { terms: vec![(MultiPoly::one(), vec![g])] }
    }

    pub fn from_sum(s: &GeneratorSum<I>) -> Self {
        OpExpr { terms: s.terms().map(|(g, c)| (c.clone(), vec![g.clone()])).collect() }
    }

    pub fn scale(mut self, c: &MultiPoly) -> Self {
        for (x, _) in &mut self.terms {
            *x = &*x * c;
        }
        self
    }

    pub fn plus(mut self, other: OpExpr<I>) -> Self {
        self.terms.extend(other.terms);
        self
    }

    fn word_odd(w: &[Generator<I>]) -> bool {
        w.iter().filter(|g| g.parity().is_odd()).count() % 2 == 1
    }

    /// Super-commutator `ab − (−1)^{|a||b|} ba`, for homogeneous terms.
    pub fn bracket(&self, other: &OpExpr<I>) -> Self {
        let mut terms = Vec::new();
        for (ca, wa) in &self.terms {
            for (cb, wb) in &other.terms {
                let c = ca * cb;
                let sign = if Self::word_odd(wa) && Self::word_odd(wb) { 1 } else { -1 };
                terms.push((c.clone(), wa.iter().chain(wb).cloned().collect()));
                terms.push((c.times(sign), wb.iter().chain(wa).cloned().collect()));
            }
        }
        OpExpr { terms }
    }
}

/// Anything the algebra acts on. C must act as zero.
pub trait Module<I: Index>: Sync {
    fn act(&self, g: &Generator<I>, v: &Basis<I>) -> LinComb<I>;

    fn act_comb(&self, g: &Generator<I>, w: &LinComb<I>) -> LinComb<I> {
        let mut out = LinComb::zero();
        for (v, c) in w.terms() {
            out.add_scaled(&self.act(g, v), c);
        }
        out
    }

    fn apply(&self, e: &OpExpr<I>, v: &Basis<I>) -> LinComb<I> {
        let mut out = LinComb::zero();
        for (c, word) in &e.terms {
            let mut w = LinComb::single(v.clone(), RatFunc::one());
            for g in word.iter().rev() {
                w = self.act_comb(g, &w);
                if w.is_zero() {
                    break;
                }
            }
            out.add_scaled(&w, &RatFunc::poly(c.clone()));
        }
        out
    }
}

/// `act([g1,g2], v) − (g1 g2 v − (−1)^{|g1||g2|} g2 g1 v)`.
pub fn bracket_action_check<I: Index, M: Module<I> + ?Sized>(
    m: &M,
    g1: &Generator<I>,
    g2: &Generator<I>,
    v: &Basis<I>,
) -> LinComb<I> {
    let lhs = m.apply(&OpExpr::from_sum(&bracket(g1, g2)), v);
    let rhs = m.apply(&OpExpr::gen(g1.clone()).bracket(&OpExpr::gen(g2.clone())), v);
    let mut r = lhs;
    r.add_scaled(&rhs, &RatFunc::int(-1));
    r
}

/// Applies an operator identity (an expression equal to zero in the algebra).
pub fn identity_residual<I: Index, M: Module<I> + ?Sized>(m: &M, e: &OpExpr<I>, v: &Basis<I>) -> LinComb<I> {
    m.apply(e, v)
}
