//! Deliberate single-coefficient mutations used to show the axiom sweep has
//! teeth.

use crate::algebra::{GenKind, Generator};
use crate::exact::{MultiPoly, RatFunc};
use crate::index::{HalfInt, IndexClass};

use super::{Basis, DeformCase, FamilySpec, LinComb, Letter, Module};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FaultOp {
    Negate,
    AddOne,
    Double,
}

/// Which source vectors a mutation touches.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Selector {
    Any,
    /// Source index in the given class.
    Class(IndexClass),
    /// Target index (source + generator index) in the given class.
    TargetClass(IndexClass),
    /// Source index equal to the constant.
    At(HalfInt),
    /// Source plus generator index equal to the constant.
    Sum(HalfInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fault {
    pub name: &'static str,
    pub family: &'static str,
    pub kind: GenKind,
    pub letter: Letter,
    pub selector: Selector,
    pub op: FaultOp,
}

const fn fault(
    name: &'static str,
    family: &'static str,
    kind: GenKind,
    letter: Letter,
    selector: Selector,
    op: FaultOp,
) -> Fault {
    Fault { name, family, kind, letter, selector, op }
}

const CATALOG: [Fault; 12] = [
    fault("T-sign", "Aab", GenKind::T, Letter::X, Selector::Any, FaultOp::Negate),
    fault("aab-L-y-shift", "Aab", GenKind::L, Letter::Y, Selector::Any, FaultOp::AddOne),
    fault("bab-T-x-sign", "Bab", GenKind::T, Letter::X, Selector::Any, FaultOp::Negate),
    fault("bab-G-x-half-sign", "Bab", GenKind::G, Letter::X, Selector::TargetClass(IndexClass::HalfOdd), FaultOp::Negate),
    fault("a1-L-x0-sign", "A1", GenKind::L, Letter::X, Selector::At(HalfInt::ZERO), FaultOp::Negate),
    fault("a1-G-x0-shift", "A1", GenKind::G, Letter::X, Selector::At(HalfInt::ZERO), FaultOp::AddOne),
    fault("a2-T-y0-sign", "A2", GenKind::T, Letter::Y, Selector::Sum(HalfInt::ZERO), FaultOp::Negate),
    fault("a2-G-y0-double", "A2", GenKind::G, Letter::X, Selector::Sum(HalfInt::ZERO), FaultOp::Double),
    fault("b1-T-y0-sign", "B1", GenKind::T, Letter::Y, Selector::At(HalfInt::ZERO), FaultOp::Negate),
    fault("b1-G-y-half-sign", "B1", GenKind::G, Letter::Y, Selector::Class(IndexClass::HalfOdd), FaultOp::Negate),
    fault("b2-G-yhalf-sign", "B2", GenKind::G, Letter::X, Selector::Sum(HalfInt::HALF), FaultOp::Negate),
    fault("b2-L-y-half-shift", "B2", GenKind::L, Letter::Y, Selector::Class(IndexClass::HalfOdd), FaultOp::AddOne),
];

impl Fault {
    pub fn catalog() -> &'static [Fault] {
        &CATALOG
    }

    pub fn by_name(name: &str) -> Option<&'static Fault> {
        CATALOG.iter().find(|f| f.name == name)
    }

    /// The family the mutation is applied to: symbolic parameters for the
    /// two main families, `α = 2/7` for the deformations.
    pub fn base_family(&self) -> FamilySpec {
        let alpha = MultiPoly::ratio(2, 7);
        match self.family {
            "Aab" => FamilySpec::aab_symbolic(),
            "Bab" => FamilySpec::bab_symbolic(),
            "A1" => FamilySpec::deformed(DeformCase::A1, alpha),
            "A2" => FamilySpec::deformed(DeformCase::A2, alpha),
            "B1" => FamilySpec::deformed(DeformCase::B1, alpha),
            _ => FamilySpec::deformed(DeformCase::B2, alpha),
        }
    }

    /// Whether the mutation can be applied to `spec`.
    pub fn applies_to(&self, spec: &FamilySpec) -> bool {
        spec.name() == self.family
    }

    fn hits(&self, g: &Generator<HalfInt>, v: &Basis<HalfInt>) -> bool {
        if g.kind() != self.kind || v.letter != self.letter {
            return false;
        }
        let w = g.weight();
        match self.selector {
            Selector::Any => true,
            Selector::Class(c) => v.index.class() == c,
            Selector::TargetClass(c) => (v.index + w).class() == c,
            Selector::At(h) => v.index == h,
            Selector::Sum(h) => v.index + w == h,
        }
    }
}

/// A family with one mutated coefficient.
pub struct Faulty<'a> {
    pub base: &'a FamilySpec,
    pub fault: &'a Fault,
}

impl Module<HalfInt> for Faulty<'_> {
    fn act(&self, g: &Generator<HalfInt>, v: &Basis<HalfInt>) -> LinComb<HalfInt> {
        let out = self.base.act(g, v);
        if !self.fault.hits(g, v) {
            return out;
        }
        if out.is_zero() {
            if self.fault.op != FaultOp::AddOne {
                return out;
            }
            let letter = match (g.kind(), v.letter) {
                (GenKind::G, Letter::X) => Letter::Y,
                (GenKind::G, Letter::Y) => Letter::X,
                (_, l) => l,
            };
            return LinComb::single(Basis { letter, index: v.index + g.weight() }, RatFunc::one());
        }
        let mut mutated = LinComb::zero();
        for (w, c) in out.terms() {
            let c = match self.fault.op {
                FaultOp::Negate => -c,
                FaultOp::AddOne => c + &RatFunc::one(),
                FaultOp::Double => c.times(2),
            };
            mutated.add(w.clone(), c);
        }
        mutated
    }
}
