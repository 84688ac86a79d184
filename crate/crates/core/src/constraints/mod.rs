//! Constraint regeneration: operator identities instantiated on the generic
//! candidates, the resulting 3×3 systems and their determinants, root sets,
//! and the coefficient lemmas.

mod delta;
mod lemmas;
mod roots;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::Generator;
use crate::exact::{ExactError, MultiPoly, Var};
use crate::index::{IndexClass, SymIndex};
use crate::module::{identity_residual, Basis, FamilySpec, Letter, OpExpr};

pub use delta::{compare_delta_closed_form, stated_nabla, DeltaReport, DeltaWhich, NablaComparison, PairValue};
pub use lemmas::{
    alpha_beta_solve, b0_nonexistence_check, coeff_solution_check, derive_t_composition, Assignment,
    B0Report, CaseLabel, LemmaCheck, LemmaId, LemmaReport, SolveReport, TCompositionReport, TEntry,
};
pub use roots::{
    intersection_sweep, root_set, sample_points, IntersectionReport, PairSet, RootCheck, RootSetEntry,
    RootSetName,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstraintError {
    #[error("malformed identity instance: {0}")]
    MalformedInstance(String),
    #[error("identity residual is not supported on a single basis label: {0}")]
    NotSingleLabel(String),
    #[error("stated root {root} does not annihilate the derived determinant of {set}")]
    RootMismatch { set: String, root: String },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum IdentityKind {
    LLT,
    LLG,
    LG,
    GG,
    TT,
    TG,
}

/// Which unknown coefficient family a system solves for. `f`/`f'` are the
/// `T` coefficients on `x`/`y`, `g`/`g'` the integer-indexed `G` ones.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CoeffFamily {
    F,
    FPrime,
    G,
    GPrime,
}

impl CoeffFamily {
    pub fn stem(self) -> &'static str {
        match self {
            CoeffFamily::F => "f",
            CoeffFamily::FPrime => "f'",
            CoeffFamily::G => "g",
            CoeffFamily::GPrime => "g'",
        }
    }

    pub fn letter(self) -> Letter {
        match self {
            CoeffFamily::F | CoeffFamily::G => Letter::X,
            CoeffFamily::FPrime | CoeffFamily::GPrime => Letter::Y,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    A,
    B,
}

/// One `(m, n, k)` replacement, as polynomials in `m` and `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub m: MultiPoly,
    pub n: MultiPoly,
    pub k: MultiPoly,
}

impl Pattern {
    /// `(m, m, k−m)`, `(−m, −m, k+m)`, `(m, −m, k)`.
    pub fn standard() -> [Pattern; 3] {
        let m = MultiPoly::var("m");
        let k = MultiPoly::var("k");
        [
            Pattern { m: m.clone(), n: m.clone(), k: &k - &m },
            Pattern { m: -&m, n: -&m, k: &k + &m },
            Pattern { m: m.clone(), n: -&m, k },
        ]
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m,n,k) -> ({}, {}, {})", self.m, self.n, self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityInstance {
    pub kind: IdentityKind,
    pub case: Case,
    pub family: CoeffFamily,
    /// Class of the index `k` of the target basis vector.
    pub k_class: IndexClass,
    pub patterns: Vec<Pattern>,
}

impl IdentityInstance {
    pub fn new(kind: IdentityKind, case: Case, family: CoeffFamily, k_class: IndexClass) -> IdentityInstance {
        IdentityInstance { kind, case, family, k_class, patterns: Pattern::standard().to_vec() }
    }

    fn validate(&self) -> Result<(), ConstraintError> {
        let bad = |s: &str| Err(ConstraintError::MalformedInstance(s.to_string()));
        match (self.kind, self.family) {
            (IdentityKind::LLT, CoeffFamily::F | CoeffFamily::FPrime) => {}
            (IdentityKind::LLG, CoeffFamily::G | CoeffFamily::GPrime) => {}
            (IdentityKind::LLT | IdentityKind::LLG, _) => return bad("coefficient family does not match the identity"),
            _ => return bad("only LLT and LLG identities produce 3x3 systems"),
        }
        if self.patterns.len() != 3 {
            return bad("exactly three substitution patterns are required");
        }
        let allowed = Pattern::standard();
        if self.patterns.iter().any(|p| !allowed.contains(p)) {
            return bad("substitution patterns must be drawn from (m,m,k-m), (-m,-m,k+m), (m,-m,k)");
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct System3 {
    pub matrix: [[MultiPoly; 3]; 3],
    /// Column unknowns, in the order `c_{k+m}`, `c_k`, `c_{k−m}`.
    pub unknowns: [String; 3],
}

fn sym(value: MultiPoly, class: IndexClass) -> SymIndex {
    SymIndex::new(value, class)
}

/// `[L_m,[L_n,T_r]] + (n+r)[L_{m+n},T_r]`, zero in the algebra.
fn llt(m: &SymIndex, n: &SymIndex, r: &SymIndex) -> OpExpr<SymIndex> {
    let lm = OpExpr::gen(Generator::L(m.clone()));
    let ln = OpExpr::gen(Generator::L(n.clone()));
    let lmn = OpExpr::gen(Generator::L(crate::index::Index::plus(m, n)));
    let t = OpExpr::gen(Generator::T(r.clone()));
    lm.bracket(&ln.bracket(&t)).plus(lmn.bracket(&t).scale(&(n.poly() + r.poly())))
}

/// `((m+n)/2 − p)[L_m,[L_n,G_p]] − (n/2 − p)(m/2 − n − p)[L_{m+n},G_p]`.
pub(crate) fn llg(m: &SymIndex, n: &SymIndex, p: &SymIndex) -> OpExpr<SymIndex> {
    let h = MultiPoly::ratio(1, 2);
    let (mv, nv, pv) = (m.poly(), n.poly(), p.poly());
    let c1 = &(&(mv + nv) * &h) - pv;
    let c2 = &(&(nv * &h) - pv) * &(&(&(mv * &h) - nv) - pv);
    let lm = OpExpr::gen(Generator::L(m.clone()));
    let ln = OpExpr::gen(Generator::L(n.clone()));
    let lmn = OpExpr::gen(Generator::L(crate::index::Index::plus(m, n)));
    let g = OpExpr::gen(Generator::G(p.clone()));
    lm.bracket(&ln.bracket(&g)).scale(&c1).plus(lmn.bracket(&g).scale(&-c2))
}

/// Applies the identity to the target vector under each substitution
/// pattern and reads off the coefficients of the three unknowns.
pub fn build_identity_system(inst: &IdentityInstance) -> Result<System3, ConstraintError> {
    inst.validate()?;
    let spec = match inst.case {
        Case::A => FamilySpec::generic_a_unknowns(),
        Case::B => FamilySpec::generic_b_unknowns(),
    };
    let k = MultiPoly::var("k");
    let m = MultiPoly::var("m");
    let (gen_symbol, gen_class) = match inst.kind {
        IdentityKind::LLT => ("r", IndexClass::HalfOdd),
        _ => ("p", IndexClass::Integer),
    };
    let gi = SymIndex::symbol(gen_symbol, gen_class);
    let key = |kv: MultiPoly| -> String {
        let idx = sym(kv, inst.k_class);
        format!("{}[{},{}]", inst.family.stem(), crate::index::Index::key(&gi), crate::index::Index::key(&idx))
    };
    let unknowns = [key(&k + &m), key(k.clone()), key(&k - &m)];
    let vars: Vec<Var> = unknowns.iter().map(|u| Var::new(u)).collect();
    let mut rows: Vec<[MultiPoly; 3]> = Vec::new();
    for pat in &inst.patterns {
        let mi = sym(pat.m.clone(), IndexClass::Integer);
        let ni = sym(pat.n.clone(), IndexClass::Integer);
        let e = match inst.kind {
            IdentityKind::LLT => llt(&mi, &ni, &gi),
            _ => llg(&mi, &ni, &gi),
        };
        let v = Basis { letter: inst.family.letter(), index: sym(pat.k.clone(), inst.k_class) };
        let res = identity_residual(&spec, &e, &v);
        if res.len() != 1 {
            return Err(ConstraintError::NotSingleLabel(res.to_string()));
        }
        let (_, c) = res.terms().next().expect("one term");
        let c = c.as_poly().ok_or_else(|| ConstraintError::NotSingleLabel(format!("non-polynomial coefficient {c}")))?;
        let row = [c.coeff_of(&vars[0], 1), c.coeff_of(&vars[1], 1), c.coeff_of(&vars[2], 1)];
        let mut rest = c.clone();
        for (cv, x) in row.iter().zip(&vars) {
            rest -= cv * &MultiPoly::from_var(x.clone());
        }
        if !rest.is_zero() {
            return Err(ConstraintError::NotSingleLabel(format!("coefficient involves other unknowns: {rest}")));
        }
        rows.push(row);
    }
    let [r0, r1, r2]: [[MultiPoly; 3]; 3] = rows.try_into().expect("three rows");
    Ok(System3 { matrix: [r0, r1, r2], unknowns })
}

/// Cofactor expansion along the first row.
pub fn determinant3(s: &System3) -> MultiPoly {
    let a = &s.matrix;
    let minor = |i: usize, j: usize| &(&a[1][i] * &a[2][j]) - &(&a[1][j] * &a[2][i]);
    &(&(&a[0][0] * &minor(1, 2)) - &(&a[0][1] * &minor(0, 2))) + &(&a[0][2] * &minor(0, 1))
}

/// The determinant of a standard instance.
pub fn derived_determinant(kind: IdentityKind, case: Case, family: CoeffFamily, k_class: IndexClass) -> MultiPoly {
    let s = build_identity_system(&IdentityInstance::new(kind, case, family, k_class))
        .expect("standard instances are well formed");
    determinant3(&s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(rows: [[i64; 3]; 3]) -> System3 {
        System3 { matrix: rows.map(|r| r.map(MultiPoly::int)), unknowns: Default::default() }
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(determinant3(&sys([[1, 0, 0], [0, 1, 0], [0, 0, 1]])), MultiPoly::one());
        assert!(determinant3(&sys([[1, 2, 3], [1, 2, 3], [4, 5, 7]])).is_zero());
        assert_eq!(determinant3(&sys([[2, 0, 1], [1, 3, 2], [1, 1, 2]])), MultiPoly::int(6));
    }

    #[test]
    fn malformed_instances_are_rejected() {
        let mut inst = IdentityInstance::new(IdentityKind::LLT, Case::A, CoeffFamily::G, IndexClass::Integer);
        assert!(matches!(build_identity_system(&inst), Err(ConstraintError::MalformedInstance(_))));
        inst.family = CoeffFamily::F;
        inst.patterns.pop();
        assert!(matches!(build_identity_system(&inst), Err(ConstraintError::MalformedInstance(_))));
        let inst = IdentityInstance::new(IdentityKind::TT, Case::A, CoeffFamily::F, IndexClass::Integer);
        assert!(matches!(build_identity_system(&inst), Err(ConstraintError::MalformedInstance(_))));
    }

    #[test]
    fn llt_first_row_matches_stated_row() {
        let s = build_identity_system(&IdentityInstance::new(
            IdentityKind::LLT,
            Case::A,
            CoeffFamily::F,
            IndexClass::Integer,
        ))
        .unwrap();
        let p = |t: &str| MultiPoly::parse(t).unwrap();
        let row = [
            p("(a-k+b*m)*(a-k+b*m+m)-(m+r)*(a-k+2*b*m+m)"),
            p("-2*(a-k+b*m+m)*(a-k-r+b'*m)"),
            p("(m+r)*(a-k-r+2*b'*m+m)+(a-k-r+b'*m)*(a-k-r+m+b'*m)"),
        ];
        let lead = &s.matrix[0][0];
        // rows agree up to a common nonzero constant
        let ratio = row[0].leading().unwrap().1 / lead.leading().unwrap().1;
        for j in 0..3 {
            assert_eq!(s.matrix[0][j].scale(&ratio), row[j], "column {j}");
        }
    }

    #[test]
    fn delta1_vanishes_at_b_prime_equal_b() {
        let d = derived_determinant(IdentityKind::LLT, Case::A, CoeffFamily::F, IndexClass::Integer);
        assert!(d.substitute(&Var::new("b'"), &MultiPoly::var("b")).is_zero());
    }
}
