//! Exhaustive window checks: module axioms, submodule closure, quotients and
//! the NS partition.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{generator_window, GenKind, Generator, GeneratorLabel};
use crate::index::{HalfInt, IndexClass};

use super::{bracket_action_check, Basis, BasisLabel, LinComb, Letter, Module};

/// Basis labels `x_k`, `y_k` with `|doubled k| <= 2w`, x first, ascending.
pub fn basis_window(w: i64) -> Vec<BasisLabel> {
    let mut out = Vec::new();
    for letter in [Letter::X, Letter::Y] {
        for d in -2 * w..=2 * w {
            out.push(Basis { letter, index: HalfInt::from_doubled(d) });
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub g1: String,
    pub g2: String,
    pub vector: String,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub gen_window: i64,
    pub basis_window: i64,
    pub checks: usize,
    pub violations: Vec<Violation>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn sweep_over<M: Module<HalfInt> + ?Sized>(m: &M, w1: i64, w2: i64, basis: Vec<BasisLabel>) -> SweepReport {
    let gens = generator_window(w1);
    let pairs: Vec<(&GeneratorLabel, &GeneratorLabel)> =
        gens.iter().flat_map(|g1| gens.iter().map(move |g2| (g1, g2))).collect();
    let violations: Vec<Violation> = pairs
        .par_iter()
        .flat_map_iter(|(g1, g2)| {
            basis.iter().filter_map(move |v| {
                let r = bracket_action_check(m, g1, g2, v);
                (!r.is_zero()).then(|| Violation {
                    g1: g1.to_string(),
                    g2: g2.to_string(),
                    vector: v.to_string(),
                    residual: r.to_string(),
                })
            })
        })
        .collect();
    SweepReport { gen_window: w1, basis_window: w2, checks: pairs.len() * basis.len(), violations }
}

/// Checks `[g1,g2]·v = g1·g2·v − (−1)^{|g1||g2|} g2·g1·v` for every pair of
/// generators with `|doubled index| <= 2·w1` and every basis vector with
/// `|doubled index| <= 2·w2`.
pub fn axiom_sweep<M: Module<HalfInt> + ?Sized>(m: &M, w1: i64, w2: i64) -> SweepReport {
    sweep_over(m, w1, w2, basis_window(w2))
}

/// A finitely described set of basis labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubmoduleCandidate {
    Only(BTreeSet<BasisLabel>),
    AllExcept(BTreeSet<BasisLabel>),
}

impl SubmoduleCandidate {
    pub fn only(labels: impl IntoIterator<Item = BasisLabel>) -> Self {
        SubmoduleCandidate::Only(labels.into_iter().collect())
    }

    pub fn all_except(labels: impl IntoIterator<Item = BasisLabel>) -> Self {
        SubmoduleCandidate::AllExcept(labels.into_iter().collect())
    }

    pub fn contains(&self, v: &BasisLabel) -> bool {
        match self {
            SubmoduleCandidate::Only(s) => s.contains(v),
            SubmoduleCandidate::AllExcept(s) => !s.contains(v),
        }
    }

    pub fn describe(&self) -> String {
        let list = |s: &BTreeSet<BasisLabel>| s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
        match self {
            SubmoduleCandidate::Only(s) => format!("span{{{}}}", list(s)),
            SubmoduleCandidate::AllExcept(s) => format!("all basis vectors except {}", list(s)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Escape {
    pub generator: String,
    pub vector: String,
    pub escaping_term: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SubmoduleReport {
    pub candidate: String,
    pub closed: bool,
    pub checks: usize,
    pub escape: Option<Escape>,
}

/// Acts by every generator in the window on every included label in the
/// window; the first term landing outside the candidate is reported.
pub fn submodule_check<M: Module<HalfInt> + ?Sized>(
    m: &M,
    cand: &SubmoduleCandidate,
    w1: i64,
    w2: i64,
) -> SubmoduleReport {
    let gens = generator_window(w1);
    let mut checks = 0;
    for v in basis_window(w2).iter().filter(|v| cand.contains(v)) {
        for g in &gens {
            checks += 1;
            let image = m.act(g, v);
            let escaped = image.terms().find(|(w, _)| !cand.contains(w)).map(|(w, c)| format!("({c})*{w}"));
            if let Some(escaping_term) = escaped {
                return SubmoduleReport {
                    candidate: cand.describe(),
                    closed: false,
                    checks,
                    escape: Some(Escape {
                        generator: g.to_string(),
                        vector: v.to_string(),
                        escaping_term,
                    }),
                };
            }
        }
    }
    SubmoduleReport { candidate: cand.describe(), closed: true, checks, escape: None }
}

/// The induced action on `V / span(candidate)`.
pub struct Quotient<'a, M: ?Sized> {
    pub module: &'a M,
    pub sub: &'a SubmoduleCandidate,
}

impl<M: Module<HalfInt> + ?Sized> Module<HalfInt> for Quotient<'_, M> {
    fn act(&self, g: &GeneratorLabel, v: &BasisLabel) -> LinComb<HalfInt> {
        let mut out = self.module.act(g, v);
        out.retain(|w| !self.sub.contains(w));
        out
    }
}

/// Axiom sweep of the quotient by a candidate submodule, over the basis
/// vectors outside it.
pub fn quotient_sweep<M: Module<HalfInt> + ?Sized>(m: &M, sub: &SubmoduleCandidate, w1: i64, w2: i64) -> SweepReport {
    let q = Quotient { module: m, sub };
    let basis = basis_window(w2).into_iter().filter(|v| !sub.contains(v)).collect();
    sweep_over(&q, w1, w2, basis)
}

/// `V'` holds `x_k`, `k ∈ ℤ`, and `y_k`, `k ∈ ½+ℤ`.
fn in_v_prime(v: &BasisLabel) -> bool {
    match v.letter {
        Letter::X => v.index.class() == IndexClass::Integer,
        Letter::Y => v.index.class() == IndexClass::HalfOdd,
    }
}

/// NS generators (`L_n`, `G_r` with `r ∈ ½+ℤ`) must preserve `V'` and `V''`;
/// `T_r` and integer-indexed `G_n` must swap them. Returns the offending
/// (generator, vector) pairs.
pub fn ns_partition_check<M: Module<HalfInt> + ?Sized>(m: &M, w1: i64, w2: i64) -> Vec<(String, String)> {
    let mut bad = Vec::new();
    for g in generator_window(w1) {
        let swaps = match &g {
            Generator::T(_) => true,
            Generator::G(p) => p.is_integer(),
            _ => false,
        };
        if g.kind() == GenKind::C {
            continue;
        }
        for v in basis_window(w2) {
            let src = in_v_prime(&v);
            if m.act(&g, &v).terms().any(|(w, _)| in_v_prime(w) == (src == swaps)) {
                bad.push((g.to_string(), v.to_string()));
            }
        }
    }
    bad
}
