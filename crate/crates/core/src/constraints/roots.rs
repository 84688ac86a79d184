//! Root sets in `b'` of the constraint determinants, and the sampled
//! intersections that combine them.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::{format_scalar, quadratic_root_data, ExactScalar, MultiPoly, QuadRootData, Var};
use crate::index::IndexClass;
use crate::report::Check;

use super::delta::omega;
use super::{derived_determinant, Case, CoeffFamily, ConstraintError, IdentityKind};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RootSetName {
    AFInt,
    AFPrimeInt,
    AFHalf,
    AFPrimeHalf,
    BFInt,
    BFPrimeInt,
    BFHalf,
    BFPrimeHalf,
    AGIntPairs,
    AGPrimeHalfPairs,
    AGInt,
    AGPrimeHalf,
    BGInt,
    BGHalf,
}

impl RootSetName {
    pub const ALL: [RootSetName; 14] = [
        RootSetName::AFInt,
        RootSetName::AFPrimeInt,
        RootSetName::AFHalf,
        RootSetName::AFPrimeHalf,
        RootSetName::BFInt,
        RootSetName::BFPrimeInt,
        RootSetName::BFHalf,
        RootSetName::BFPrimeHalf,
        RootSetName::AGIntPairs,
        RootSetName::AGPrimeHalfPairs,
        RootSetName::AGInt,
        RootSetName::AGPrimeHalf,
        RootSetName::BGInt,
        RootSetName::BGHalf,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RootSetName::AFInt => "a-f-int",
            RootSetName::AFPrimeInt => "a-fp-int",
            RootSetName::AFHalf => "a-f-half",
            RootSetName::AFPrimeHalf => "a-fp-half",
            RootSetName::BFInt => "b-f-int",
            RootSetName::BFPrimeInt => "b-fp-int",
            RootSetName::BFHalf => "b-f-half",
            RootSetName::BFPrimeHalf => "b-fp-half",
            RootSetName::AGIntPairs => "a-g-int-pairs",
            RootSetName::AGPrimeHalfPairs => "a-gp-half-pairs",
            RootSetName::AGInt => "a-g-int",
            RootSetName::AGPrimeHalf => "a-gp-half",
            RootSetName::BGInt => "b-g-int",
            RootSetName::BGHalf => "b-g-half",
        }
    }

    pub fn parse(s: &str) -> Option<RootSetName> {
        RootSetName::ALL.into_iter().find(|n| n.name().eq_ignore_ascii_case(s))
    }

    /// The identity instance whose determinant the set comes from.
    fn source(self) -> (IdentityKind, Case, CoeffFamily, IndexClass) {
        use CoeffFamily::*;
        use IdentityKind::*;
        use IndexClass::*;
        match self {
            RootSetName::AFInt => (LLT, Case::A, F, Integer),
            RootSetName::AFPrimeInt => (LLT, Case::A, FPrime, Integer),
            RootSetName::AFHalf => (LLT, Case::A, F, HalfOdd),
            RootSetName::AFPrimeHalf => (LLT, Case::A, FPrime, HalfOdd),
            RootSetName::BFInt => (LLT, Case::B, F, Integer),
            RootSetName::BFPrimeInt => (LLT, Case::B, FPrime, Integer),
            RootSetName::BFHalf => (LLT, Case::B, F, HalfOdd),
            RootSetName::BFPrimeHalf => (LLT, Case::B, FPrime, HalfOdd),
            RootSetName::AGIntPairs | RootSetName::AGInt => (LLG, Case::A, G, Integer),
            RootSetName::AGPrimeHalfPairs | RootSetName::AGPrimeHalf => (LLG, Case::A, GPrime, HalfOdd),
            RootSetName::BGInt => (LLG, Case::B, G, Integer),
            RootSetName::BGHalf => (LLG, Case::B, G, HalfOdd),
        }
    }

    pub fn source_text(self) -> String {
        let (kind, case, fam, class) = self.source();
        let letter = match fam.letter() {
            crate::module::Letter::X => "x",
            crate::module::Letter::Y => "y",
        };
        format!("{kind:?} determinant, case {case:?}, unknowns {}, on {letter}_k with k in {}", fam.stem(), class.name())
    }

    pub fn determinant(self) -> MultiPoly {
        let (kind, case, fam, class) = self.source();
        derived_determinant(kind, case, fam, class)
    }
}

fn p(s: &str) -> MultiPoly {
    MultiPoly::parse(s).expect("reference polynomial parses")
}

fn q(n: i64, d: i64) -> ExactScalar {
    ExactScalar::new(n.into(), d.into())
}

/// What is stated for each set: linear roots in `b`, the quadratic's
/// center and discriminant, the pair set, and the factor to strip first.
struct Catalog {
    linear: Vec<MultiPoly>,
    quad: Option<(MultiPoly, MultiPoly)>,
    pairs: Vec<(ExactScalar, ExactScalar)>,
    strip: MultiPoly,
}

fn stated(name: RootSetName) -> Catalog {
    let lin = |xs: &[&str]| xs.iter().map(|s| p(s)).collect::<Vec<_>>();
    let quad = |c: &str, d: &str| Some((p(c), p(d)));
    let m6 = p("m^6");
    let lambda = vec![(q(-3, 2), q(0, 1)), (q(-1, 1), q(1, 2)), (q(1, 2), q(-1, 1)), (q(0, 1), q(-3, 2))];
    let lambda_prime = vec![(q(-2, 1), q(-1, 2)), (q(-3, 2), q(0, 1)), (q(-1, 2), q(-2, 1)), (q(0, 1), q(-3, 2))];
    match name {
        RootSetName::AFInt => Catalog {
            linear: lin(&["-b-1", "b-2", "b-1", "b"]),
            quad: quad("-3/2-b", "9+8*b"),
            pairs: Vec::new(),
            strip: m6,
        },
        RootSetName::AFPrimeInt => Catalog {
            linear: lin(&["-b-2", "b", "b+1", "b+2"]),
            quad: quad("-3/2-b", "-3-8*b"),
            pairs: Vec::new(),
            strip: m6,
        },
        RootSetName::AFHalf => Catalog {
            linear: lin(&["-b-1", "b", "b+1", "b+2"]),
            quad: quad("-1/2-b", "1-8*b"),
            pairs: Vec::new(),
            strip: m6,
        },
        RootSetName::AFPrimeHalf => Catalog {
            linear: lin(&["-b-2", "b-1", "b-2", "b"]),
            quad: quad("-5/2-b", "13+8*b"),
            pairs: Vec::new(),
            strip: m6,
        },
        RootSetName::BFInt => Catalog {
            linear: lin(&["-3/2+b", "-3/2-b", "b-5/2", "b-1/2"]),
            quad: quad("-2-b", "9+8*b"),
            pairs: Vec::new(),
            strip: m6,
        },
        RootSetName::BFPrimeInt => Catalog {
            linear: lin(&["b+3/2", "-b-3/2", "b+5/2", "b+1/2"]),
            quad: quad("-1-b", "-3-8*b"),
            pairs: Vec::new(),
            strip: m6,
        },
        RootSetName::BFHalf => Catalog {
            linear: lin(&["b+3/2", "-b-3/2", "b+1/2", "b-1/2"]),
            quad: quad("-1-b", "1-8*b"),
            pairs: Vec::new(),
            strip: m6,
        },
        RootSetName::BFPrimeHalf => Catalog {
            linear: lin(&["-3/2+b", "-3/2-b", "b+1/2", "b-1/2"]),
            quad: quad("-2-b", "13+8*b"),
            pairs: Vec::new(),
            strip: m6,
        },
        RootSetName::AGIntPairs => Catalog { linear: Vec::new(), quad: None, pairs: omega(false), strip: p("m^6*p") },
        RootSetName::AGPrimeHalfPairs => Catalog { linear: Vec::new(), quad: None, pairs: omega(true), strip: p("m^6*p") },
        RootSetName::AGInt => Catalog { linear: lin(&["b-1", "b"]), quad: None, pairs: omega(false), strip: p("m^6*p") },
        RootSetName::AGPrimeHalf => Catalog { linear: lin(&["b+1", "b"]), quad: None, pairs: omega(true), strip: p("m^6*p") },
        RootSetName::BGInt => Catalog {
            linear: lin(&["b-1/2", "b+1/2"]),
            quad: None,
            pairs: lambda,
            strip: p("m^6*p"),
        },
        RootSetName::BGHalf => Catalog {
            linear: lin(&["b-1/2", "b+1/2"]),
            quad: None,
            pairs: lambda_prime,
            strip: p("m^6*p"),
        },
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RootCheck {
    pub root: String,
    pub annihilates: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PairSet {
    pub pairs: Vec<(String, String)>,
    /// Whether the cofactor left after removing the linear roots vanishes
    /// identically at each pair.
    pub vanishes: Vec<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootSetEntry {
    pub name: RootSetName,
    pub source: String,
    pub linear: Vec<RootCheck>,
    pub quadratic: Option<QuadSummary>,
    pub pair_set: Option<PairSet>,
    #[serde(skip)]
    pub quad_data: Option<QuadRootData>,
    #[serde(skip)]
    pub linear_polys: Vec<MultiPoly>,
    /// Remaining factor after stripping the linear roots (pair sets only).
    #[serde(skip)]
    pub cofactor: Option<MultiPoly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuadSummary {
    pub monic: String,
    pub discriminant: String,
    pub stated_discriminant: String,
    pub discriminant_matches: bool,
    pub center: String,
    pub stated_center: String,
    pub center_matches: bool,
}

fn bp() -> Var {
    Var::new("b'")
}

/// Rebuilds a root set from its determinant: strips the stated linear
/// factors by exact division, packages what is left as quadratic root data
/// or checks it on the stated pairs.
pub fn root_set(name: RootSetName) -> Result<RootSetEntry, ConstraintError> {
    let det = name.determinant();
    let pr = stated(name);
    let mut rest = det.exact_divide(&pr.strip)?;
    let mut linear = Vec::new();
    for root in &pr.linear {
        let factor = &MultiPoly::from_var(bp()) - root;
        let annihilates = det.substitute(&bp(), root).is_zero();
        if annihilates {
            rest = rest.exact_divide(&factor)?;
        }
        linear.push(RootCheck { root: root.to_string(), annihilates });
    }
    let mut entry = RootSetEntry {
        name,
        source: name.source_text(),
        linear,
        quadratic: None,
        pair_set: None,
        quad_data: None,
        linear_polys: pr.linear.clone(),
        cofactor: None,
    };
    if let Some((center, disc)) = pr.quad {
        let raw = quadratic_root_data(&rest, &bp())?;
        let a = raw.a.clone();
        let monic = QuadRootData {
            var: bp(),
            a: MultiPoly::one(),
            b: raw.b.exact_divide(&a)?,
            c: raw.c.exact_divide(&a)?,
            discriminant: MultiPoly::zero(),
        };
        let discriminant = &monic.b * &monic.b - MultiPoly::int(4) * &monic.c;
        let monic = QuadRootData { discriminant, ..monic };
        let c = monic.center().expect("monic");
        entry.quadratic = Some(QuadSummary {
            monic: monic.polynomial().to_string(),
            discriminant: monic.discriminant.to_string(),
            stated_discriminant: disc.to_string(),
            discriminant_matches: monic.discriminant == disc,
            center: c.to_string(),
            stated_center: center.to_string(),
            center_matches: c == center,
        });
        entry.quad_data = Some(monic);
    }
    if !pr.pairs.is_empty() {
        let vanishes = pr
            .pairs
            .iter()
            .map(|(b, b2)| {
                rest.substitute_all(&[
                    (Var::new("b"), MultiPoly::constant(b.clone())),
                    (bp(), MultiPoly::constant(b2.clone())),
                ])
                .is_zero()
            })
            .collect();
        entry.pair_set = Some(PairSet {
            pairs: pr.pairs.iter().map(|(x, y)| (format_scalar(x), format_scalar(y))).collect(),
            vanishes,
        });
        entry.cofactor = Some(rest);
    }
    Ok(entry)
}

impl RootSetEntry {
    pub fn ok(&self) -> bool {
        self.linear.iter().all(|r| r.annihilates)
            && self.quadratic.as_ref().is_none_or(|q| q.discriminant_matches && q.center_matches)
            && self.pair_set.as_ref().is_none_or(|s| s.vanishes.iter().all(|v| *v))
    }

    /// The first stated root that fails, as an error.
    pub fn require(&self) -> Result<(), ConstraintError> {
        match self.linear.iter().find(|r| !r.annihilates) {
            Some(r) => Err(ConstraintError::RootMismatch { set: self.name.name().into(), root: r.root.clone() }),
            None => Ok(()),
        }
    }

    pub fn checks(&self) -> Vec<Check> {
        let n = self.name.name();
        let mut out = Vec::new();
        if !self.linear.is_empty() {
            let bad: Vec<&str> = self.linear.iter().filter(|r| !r.annihilates).map(|r| r.root.as_str()).collect();
            let roots: Vec<&str> = self.linear.iter().map(|r| r.root.as_str()).collect();
            out.push(
                Check::new(format!("{n} linear roots b' in {{{}}}", roots.join(", ")), self.source.clone(), bad.is_empty())
                    .witness_if_failed(|| format!("not annihilating: {}", bad.join(", "))),
            );
        }
        if let Some(qs) = &self.quadratic {
            out.push(
                Check::new(format!("{n} quadratic discriminant {}", qs.stated_discriminant), self.source.clone(), qs.discriminant_matches)
                    .witness_if_failed(|| format!("derived discriminant {}", qs.discriminant)),
            );
            out.push(
                Check::new(format!("{n} quadratic root center {}", qs.stated_center), self.source.clone(), qs.center_matches)
                    .witness_if_failed(|| format!("derived center {}", qs.center)),
            );
        }
        if let Some(ps) = &self.pair_set {
            for ((b, b2), v) in ps.pairs.iter().zip(&ps.vanishes) {
                out.push(Check::new(format!("{n} cofactor vanishes at ({b}, {b2})"), self.source.clone(), *v));
            }
        }
        out
    }
}

/// 200 distinct rationals `p/q` with `|p| ≤ 20`, `1 ≤ q ≤ 8`, skipping the
/// zeros of the quadratic discriminants. Smallest denominators are taken
/// first; the result is ascending.
pub fn sample_points() -> Vec<ExactScalar> {
    let excluded = [q(-9, 8), q(-3, 8), q(1, 8), q(-13, 8)];
    let mut seen = BTreeSet::new();
    let mut picked = Vec::new();
    for d in 1..=8i64 {
        for n in (0..=20i64).flat_map(|n| if n == 0 { vec![0] } else { vec![-n, n] }) {
            let x = q(n, d);
            if !excluded.contains(&x) && seen.insert(x.clone()) {
                picked.push(x);
            }
        }
    }
    picked.truncate(200);
    picked.sort();
    picked
}

fn rational_sqrt(x: &ExactScalar) -> Option<ExactScalar> {
    if x.is_negative() {
        return None;
    }
    let sq = |n: &BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(ExactScalar::new(sq(x.numer())?, sq(x.denom())?))
}

/// A candidate `b'`: a rational value, or the pair of conjugate roots of an
/// irreducible monic quadratic in `b'`.
#[derive(Clone, Debug)]
enum Candidate {
    Rational(ExactScalar),
    Conjugate(MultiPoly),
}

fn at_b(poly: &MultiPoly, b: &ExactScalar) -> MultiPoly {
    poly.substitute(&Var::new("b"), &MultiPoly::constant(b.clone()))
}

impl Candidate {
    /// Whether the determinant (with `b` fixed) is annihilated.
    fn kills(&self, det_b: &MultiPoly) -> bool {
        match self {
            Candidate::Rational(x) => det_b.substitute(&bp(), &MultiPoly::constant(x.clone())).is_zero(),
            Candidate::Conjugate(qp) => det_b.exact_divide(qp).is_ok(),
        }
    }
}

fn candidates(entries: &[&RootSetEntry], b: &ExactScalar) -> Vec<Candidate> {
    let mut rational = BTreeSet::new();
    let mut conj: Vec<MultiPoly> = Vec::new();
    for e in entries {
        for r in &e.linear_polys {
            rational.insert(at_b(r, b).as_constant().expect("linear roots depend on b only"));
        }
        if let Some(qd) = &e.quad_data {
            let bb = at_b(&qd.b, b).as_constant().expect("b only");
            let cc = at_b(&qd.c, b).as_constant().expect("b only");
            let disc = &bb * &bb - ExactScalar::from_integer(4.into()) * &cc;
            match rational_sqrt(&disc) {
                Some(s) => {
                    let two = ExactScalar::from_integer(2.into());
                    rational.insert((-&bb + &s) / &two);
                    rational.insert((-&bb - &s) / &two);
                }
                None => {
                    let qp = at_b(&qd.polynomial(), b);
                    if !conj.contains(&qp) {
                        conj.push(qp);
                    }
                }
            }
        }
    }
    rational.into_iter().map(Candidate::Rational).chain(conj.into_iter().map(Candidate::Conjugate)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SampleResult {
    pub b: String,
    pub survivors: Vec<String>,
    /// Survivors that are roots of an irreducible quadratic, by polynomial.
    pub conjugate_survivors: Vec<String>,
    pub expected: Vec<String>,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionReport {
    pub case: String,
    pub samples: usize,
    pub rule: String,
    pub mismatches: Vec<SampleResult>,
    #[serde(skip)]
    pub all: Vec<SampleResult>,
}

impl IntersectionReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn checks(&self) -> Vec<Check> {
        let mut c = Check::new(
            format!("intersection {}: {} over {} sampled b", self.case, self.rule, self.samples),
            "combination of the LLT and LLG root sets",
            self.ok(),
        );
        if !self.ok() {
            let w: Vec<String> =
                self.mismatches.iter().map(|m| format!("b = {}: survivors {{{}}}", m.b, m.survivors.join(", "))).collect();
            c = c.witness(w.join("\n"));
        }
        vec![c]
    }
}

/// Case A (`b' = b`) or case B (`b' = b ± 1/2`, plus the two exceptional
/// pairs). Candidates are the roots of the integer-`k` `T` sets; survivors
/// must also annihilate one half-odd `T` determinant and both `G`
/// determinants.
pub fn intersection_sweep(case: Case) -> Result<IntersectionReport, ConstraintError> {
    use RootSetName::*;
    let (cand_sets, half_sets) = match case {
        Case::A => ([AFInt, AFPrimeInt], [AFHalf, AFPrimeHalf]),
        Case::B => ([BFInt, BFPrimeInt], [BFHalf, BFPrimeHalf]),
    };
    let cand_entries: Vec<RootSetEntry> = cand_sets.iter().map(|n| root_set(*n)).collect::<Result<_, _>>()?;
    let half_dets: Vec<MultiPoly> = half_sets.iter().map(|n| n.determinant()).collect();
    let g_dets: Vec<MultiPoly> = match case {
        Case::A => vec![AGInt.determinant(), AGPrimeHalf.determinant()],
        Case::B => vec![BGInt.determinant(), BGHalf.determinant()],
    };
    let samples = sample_points();
    let half = q(1, 2);
    let results: Vec<SampleResult> = samples
        .par_iter()
        .map(|b| {
            let refs: Vec<&RootSetEntry> = cand_entries.iter().collect();
            let hb: Vec<MultiPoly> = half_dets.iter().map(|d| at_b(d, b)).collect();
            let gb: Vec<MultiPoly> = g_dets.iter().map(|d| at_b(d, b)).collect();
            let mut survivors = Vec::new();
            let mut conjugate = Vec::new();
            for c in candidates(&refs, b) {
                if hb.iter().any(|d| c.kills(d)) && gb.iter().all(|d| c.kills(d)) {
                    match c {
                        Candidate::Rational(x) => survivors.push(x),
                        Candidate::Conjugate(qp) => conjugate.push(qp.to_string()),
                    }
                }
            }
            let mut expected = match case {
                Case::A => vec![b.clone()],
                Case::B => vec![b - &half, b + &half],
            };
            if case == Case::B {
                if *b == q(-3, 2) {
                    expected.push(q(0, 1));
                }
                if *b == q(0, 1) {
                    expected.push(q(-3, 2));
                }
            }
            expected.sort();
            let matches = survivors == expected && conjugate.is_empty();
            SampleResult {
                b: format_scalar(b),
                survivors: survivors.iter().map(format_scalar).collect(),
                conjugate_survivors: conjugate,
                expected: expected.iter().map(format_scalar).collect(),
                matches,
            }
        })
        .collect();
    let rule = match case {
        Case::A => "only b' = b survives".to_string(),
        Case::B => "b' = b +- 1/2, or (b, b') in {(-3/2, 0), (0, -3/2)}".to_string(),
    };
    Ok(IntersectionReport {
        case: format!("{case:?}"),
        samples: samples.len(),
        rule,
        mismatches: results.iter().filter(|r| !r.matches).cloned().collect(),
        all: results,
    })
}
