//! Command-line front end: argument parsing, dispatch to the labs and report
//! rendering. [`run`] is the whole program minus process exit.

use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, ValueEnum};
use twisted_n2::algebra::super_jacobi_sweep;
use twisted_n2::constraints::{
    alpha_beta_solve, b0_nonexistence_check, coeff_solution_check, compare_delta_closed_form, derive_t_composition,
    intersection_sweep, root_set, Case, CaseLabel, DeltaWhich, LemmaId, RootSetName,
};
use twisted_n2::deform::{
    alpha_prime_identity, closed_e, deformed_sweeps, e_closed_form_check, f_derivation, fit_alpha_from_e,
    g_solution_check, generic_samples, generic_scan, instantiate_deformation, submodule_facts,
    undeformed_specialization,
};
use twisted_n2::exact::{parse_scalar, MultiPoly};
use twisted_n2::index::HalfInt;
use twisted_n2::module::{
    axiom_sweep, ns_partition_check, quotient_sweep, submodule_check, Basis, BasisLabel, DeformCase, Fault,
    FamilyError, FamilySpec, Faulty, SubmoduleCandidate, SweepReport,
};
use twisted_n2::report::{Check, Report};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    VerifyAxioms,
    Delta,
    Roots,
    ComposeT,
    SolveCoeffs,
    Deform,
    Submodule,
    NonexistB0,
    Jacobi,
    All,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "tn2lab", about = "Exact checks for intermediate-series modules of the twisted N=2 algebra")]
pub struct Cli {
    #[arg(value_enum)]
    pub verb: Verb,
    /// Aab, Bab, A1, A2, B1 or B2.
    #[arg(long)]
    pub family: Option<String>,
    /// Rational literal or "sym".
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub bprime: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(i64).range(1..))]
    pub gen_window: i64,
    #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i64).range(1..))]
    pub basis_window: i64,
    /// Sub-selection: a determinant, root set, solution family or case.
    #[arg(long)]
    pub which: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// `e_1` and `e_2` to invert into (alpha, alpha').
    #[arg(long, allow_hyphen_values = true)]
    pub e1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub e2: Option<String>,
    /// Range of the recurrence checks.
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(i64).range(3..))]
    pub n_max: i64,
    /// Candidate submodule spanned by these labels, e.g. `y_0,y_1/2`.
    #[arg(long)]
    pub only: Option<String>,
    /// Candidate submodule spanned by everything except these labels.
    #[arg(long)]
    pub except: Option<String>,
    #[arg(long, hide = true)]
    pub inject_fault: Option<String>,
}

/// Exit code plus what would go to stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
struct Usage(String);

impl From<FamilyError> for Usage {
    fn from(e: FamilyError) -> Usage {
        Usage(e.to_string())
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Usage> {
    Err(Usage(msg.into()))
}

/// Parses argv (program name first) and runs it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    twisted_n2::workers::init_from_env();
    match execute(&cli) {
        Ok(report) => emit(&cli, &report),
        Err(Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

fn emit(cli: &Cli, report: &Report) -> Outcome {
    let body = match cli.format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json() + "\n",
    };
    let code = if report.ok() { 0 } else { 1 };
    match &cli.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: cannot write {}: {e}\n", path.display()) },
        },
        None => Outcome { code, stdout: body, stderr: String::new() },
    }
}

fn verb_name(v: Verb) -> String {
    v.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default()
}

/// `"sym"` gives the named indeterminate, anything else must be `±p/q`.
fn param(value: Option<&str>, var: &str, flag: &str) -> Result<MultiPoly, Usage> {
    match value {
        None | Some("sym") => Ok(MultiPoly::var(var)),
        Some(s) => parse_scalar(s).map(MultiPoly::constant).map_err(|e| Usage(format!("--{flag}: {e}"))),
    }
}

fn deform_case(name: &str) -> Option<DeformCase> {
    DeformCase::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(name))
}

/// Builds the family named by `--family` from the parameter flags.
fn family(cli: &Cli) -> Result<FamilySpec, Usage> {
    let Some(name) = cli.family.as_deref() else {
        return usage("--family is required");
    };
    if let Some(case) = deform_case(name) {
        if cli.a.is_some() || cli.b.is_some() || cli.bprime.is_some() {
            return usage(format!("{name} takes --alpha, not --a/--b/--bprime"));
        }
        return Ok(instantiate_deformation(case, param(cli.alpha.as_deref(), "alpha", "alpha")?));
    }
    if cli.alpha.is_some() {
        return usage(format!("--alpha applies to A1, A2, B1, B2, not {name}"));
    }
    let a = param(cli.a.as_deref(), "a", "a")?;
    let b = param(cli.b.as_deref(), "b", "b")?;
    match name.to_ascii_lowercase().as_str() {
        "aab" | "a" => {
            if cli.bprime.is_some() {
                return usage("--bprime applies to Bab only");
            }
            Ok(FamilySpec::Aab { a, b })
        }
        "bab" | "b" => {
            let bp = cli.bprime.as_deref().map(|s| param(Some(s), "b'", "bprime")).transpose()?;
            Ok(FamilySpec::b_type(a, b, bp)?)
        }
        _ => usage(format!("unknown family {name:?}; expected Aab, Bab, A1, A2, B1 or B2")),
    }
}

fn parse_labels(s: &str) -> Result<Vec<BasisLabel>, Usage> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            let (l, i) = t.split_once('_').ok_or_else(|| Usage(format!("bad basis label {t:?}")))?;
            let idx = HalfInt::parse(i.trim_matches(|c| c == '{' || c == '}'))
                .map_err(|_| Usage(format!("bad index in basis label {t:?}")))?;
            match l {
                "x" => Ok(Basis::x(idx)),
                "y" => Ok(Basis::y(idx)),
                _ => usage(format!("bad letter in basis label {t:?}")),
            }
        })
        .collect()
}

fn reject(cli: &Cli, allowed: &[&str]) -> Result<(), Usage> {
    let given = [
        ("family", cli.family.is_some()),
        ("a", cli.a.is_some()),
        ("b", cli.b.is_some()),
        ("bprime", cli.bprime.is_some()),
        ("alpha", cli.alpha.is_some()),
        ("which", cli.which.is_some()),
        ("e1", cli.e1.is_some()),
        ("e2", cli.e2.is_some()),
        ("only", cli.only.is_some()),
        ("except", cli.except.is_some()),
        ("inject-fault", cli.inject_fault.is_some()),
    ];
    for (flag, set) in given {
        if set && !allowed.contains(&flag) {
            return usage(format!("--{flag} does not apply to {}", verb_name(cli.verb)));
        }
    }
    Ok(())
}

fn execute(cli: &Cli) -> Result<Report, Usage> {
    let mut r = Report::new(verb_name(cli.verb));
    match cli.verb {
        Verb::VerifyAxioms => {
            reject(cli, &["family", "a", "b", "bprime", "alpha", "inject-fault"])?;
            verify_axioms(cli, &mut r)?
        }
        Verb::Delta => {
            reject(cli, &["which"])?;
            delta(cli, &mut r)?
        }
        Verb::Roots => {
            reject(cli, &["which"])?;
            roots(cli, &mut r)?
        }
        Verb::ComposeT => {
            reject(cli, &["family", "a", "b", "alpha"])?;
            compose_t(cli, &mut r)?
        }
        Verb::SolveCoeffs => {
            reject(cli, &["which"])?;
            solve_coeffs(cli, &mut r)?
        }
        Verb::Deform => {
            reject(cli, &["family", "alpha", "e1", "e2"])?;
            deform(cli, &mut r)?
        }
        Verb::Submodule => {
            reject(cli, &["family", "a", "b", "bprime", "alpha", "only", "except"])?;
            submodule(cli, &mut r)?
        }
        Verb::NonexistB0 => {
            reject(cli, &["a"])?;
            nonexist_b0(cli, &mut r)?
        }
        Verb::Jacobi => {
            reject(cli, &[])?;
            r = r.param("gen-window", cli.gen_window);
            jacobi(cli.gen_window, &mut r)
        }
        Verb::All => {
            reject(cli, &[])?;
            for c in criteria() {
                for ch in (c.run)() {
                    r.push(Check { name: format!("criterion {}: {}", c.number, ch.name), ..ch });
                }
            }
        }
    }
    Ok(r)
}

fn sweep_check(label: &str, rep: &SweepReport) -> Check {
    Check::new(
        format!(
            "{label}: module axioms, generators |2i| <= {}, basis |2k| <= {} ({} checks)",
            2 * rep.gen_window,
            2 * rep.basis_window,
            rep.checks
        ),
        "module axioms",
        rep.passed(),
    )
    .witness_if_failed(|| {
        let mut lines: Vec<String> = rep
            .violations
            .iter()
            .take(5)
            .map(|v| format!("[{}, {}] on {}: residual {}", v.g1, v.g2, v.vector, v.residual))
            .collect();
        if rep.violations.len() > 5 {
            lines.push(format!("... {} violations in total", rep.violations.len()));
        }
        lines.join("\n")
    })
}

fn verify_axioms(cli: &Cli, r: &mut Report) -> Result<(), Usage> {
    let fault = match &cli.inject_fault {
        Some(name) => Some(Fault::by_name(name).ok_or_else(|| Usage(format!("unknown fault {name:?}")))?),
        None => None,
    };
    let fam = match (fault, &cli.family) {
        (Some(f), None) => f.base_family(),
        _ => family(cli)?,
    };
    let (w1, w2) = (cli.gen_window, cli.basis_window);
    *r = std::mem::replace(r, Report::new("")).param("family", fam.label()).param("gen-window", w1).param("basis-window", w2);
    if let Some(fault) = fault {
        let name = fault.name;
        if !fault.applies_to(&fam) {
            return usage(format!("fault {name} applies to {}, not {}", fault.family, fam.name()));
        }
        *r = std::mem::replace(r, Report::new("")).param("fault", name);
        let faulty = Faulty { base: &fam, fault };
        let rep = axiom_sweep(&faulty, w1, w2);
        r.push(sweep_check(&format!("{} with fault {name}", fam.label()), &rep));
        return Ok(());
    }
    let rep = axiom_sweep(&fam, w1, w2);
    r.push(sweep_check(&fam.label(), &rep));
    if matches!(fam, FamilySpec::Aab { .. } | FamilySpec::Bab { .. }) {
        let bad = ns_partition_check(&fam, w1, w2);
        r.push(
            Check::new(
                format!("{}: NS generators preserve V' and V'', T and integer G swap them", fam.label()),
                "restriction to the NS subalgebra",
                bad.is_empty(),
            )
            .witness_if_failed(|| bad.iter().take(5).map(|(g, v)| format!("{g} on {v}")).collect::<Vec<_>>().join("\n")),
        );
    }
    Ok(())
}

fn delta(cli: &Cli, r: &mut Report) -> Result<(), Usage> {
    let which: Vec<DeltaWhich> = match cli.which.as_deref() {
        None | Some("all") => DeltaWhich::ALL.to_vec(),
        Some(s) => vec![DeltaWhich::parse(s).ok_or_else(|| Usage(format!("--which: unknown determinant {s:?}")))?],
    };
    *r = std::mem::replace(r, Report::new("")).param("which", which.iter().map(|w| w.name()).collect::<Vec<_>>().join(","));
    for w in which {
        let rep = compare_delta_closed_form(w);
        r.extend(rep.checks());
        r.detail(&rep);
    }
    Ok(())
}

fn roots(cli: &Cli, r: &mut Report) -> Result<(), Usage> {
    let sel = cli.which.as_deref().unwrap_or("all");
    *r = std::mem::replace(r, Report::new("")).param("which", sel);
    let intersection = match sel.to_ascii_lowercase().as_str() {
        "intersection-a" => Some(Case::A),
        "intersection-b" => Some(Case::B),
        _ => None,
    };
    if let Some(case) = intersection {
        match intersection_sweep(case) {
            Ok(rep) => {
                r.extend(rep.checks());
                r.detail(&rep);
            }
            Err(e) => r.push(Check::new(format!("intersection {case:?}"), "root set intersection", false).witness(e.to_string())),
        }
        return Ok(());
    }
    let names = match sel {
        "all" => RootSetName::ALL.to_vec(),
        s => vec![RootSetName::parse(s).ok_or_else(|| {
            Usage(format!("--which: unknown root set {s:?}; expected all, intersection-a, intersection-b or a set name"))
        })?],
    };
    for n in names {
        match root_set(n) {
            Ok(e) => {
                r.extend(e.checks());
                r.detail(&e);
            }
            Err(e) => r.push(Check::new(format!("{}: root set", n.name()), "root sets", false).witness(e.to_string())),
        }
    }
    Ok(())
}

fn six_families() -> Vec<FamilySpec> {
    let mut v = vec![FamilySpec::aab_symbolic(), FamilySpec::bab_symbolic()];
    v.extend(DeformCase::ALL.map(|c| instantiate_deformation(c, MultiPoly::var("alpha"))));
    v
}

fn t_checks(fams: &[FamilySpec], w: i64) -> Vec<Check> {
    let mut out = Vec::new();
    for f in fams {
        match derive_t_composition(f, w) {
            Ok(rep) => out.extend(rep.checks()),
            Err(e) => out.push(Check::new(format!("{}: T composition", f.label()), "T action from the G composition", false).witness(e.to_string())),
        }
    }
    out
}

fn compose_t(cli: &Cli, r: &mut Report) -> Result<(), Usage> {
    let fams = match cli.family {
        Some(_) => vec![family(cli)?],
        None => six_families(),
    };
    *r = std::mem::replace(r, Report::new("")).param("gen-window", cli.gen_window);
    r.extend(t_checks(&fams, cli.gen_window));
    Ok(())
}

fn solve_coeffs(cli: &Cli, r: &mut Report) -> Result<(), Usage> {
    let sel = cli.which.as_deref().unwrap_or("all");
    *r = std::mem::replace(r, Report::new("")).param("which", sel);
    if sel == "all" {
        r.extend(coefficient_checks());
        return Ok(());
    }
    if let Some(l) = LemmaId::parse(sel) {
        let rep = coeff_solution_check(l);
        r.extend(rep.checks());
        r.detail(&rep);
    } else if let Some(c) = CaseLabel::parse(sel) {
        let rep = alpha_beta_solve(c);
        r.extend(rep.checks());
        r.detail(&rep);
    } else {
        return usage(format!("--which: unknown solution family {sel:?}"));
    }
    Ok(())
}

fn coefficient_checks() -> Vec<Check> {
    let mut out = Vec::new();
    for l in LemmaId::ALL {
        out.extend(coeff_solution_check(l).checks());
    }
    for c in [CaseLabel::A, CaseLabel::B, CaseLabel::B0] {
        out.extend(alpha_beta_solve(c).checks());
    }
    out
}

fn deform_checks(case: DeformCase, n_max: i64, w1: i64, w2: i64) -> Vec<Check> {
    let mut out = e_closed_form_check(case, n_max).checks();
    out.push(alpha_prime_identity(case));
    out.extend(g_solution_check(case, w1).checks());
    match f_derivation(case, w1) {
        Ok(f) => out.extend(f.checks()),
        Err(e) => out.push(Check::new(format!("{}: f_r by composition", case.name()), "T deformation coefficient", false).witness(e.to_string())),
    }
    out.push(undeformed_specialization(case, w1, w2));
    out
}

fn deform(cli: &Cli, r: &mut Report) -> Result<(), Usage> {
    let cases: Vec<DeformCase> = match cli.family.as_deref() {
        None | Some("all") => DeformCase::ALL.to_vec(),
        Some(s) => vec![deform_case(s).ok_or_else(|| Usage(format!("--family: {s:?} is not A1, A2, B1 or B2")))?],
    };
    let (w1, w2) = (cli.gen_window, cli.basis_window);
    *r = std::mem::replace(r, Report::new(""))
        .param("family", cases.iter().map(|c| c.name()).collect::<Vec<_>>().join(","))
        .param("n-max", cli.n_max)
        .param("gen-window", w1)
        .param("basis-window", w2);
    if let Some(a) = &cli.alpha {
        *r = std::mem::replace(r, Report::new("")).param("alpha", a);
    }
    let fit = match (&cli.e1, &cli.e2) {
        (Some(e1), Some(e2)) => Some((param(Some(e1), "e1", "e1")?, param(Some(e2), "e2", "e2")?)),
        (None, None) => None,
        _ => return usage("--e1 and --e2 go together"),
    };
    for case in cases {
        if let Some((e1, e2)) = &fit {
            let (a, ap) = fit_alpha_from_e(e1, e2, case);
            let back = (closed_e(case, &a, &ap, &MultiPoly::int(1)), closed_e(case, &a, &ap, &MultiPoly::int(2)));
            let em1 = closed_e(case, &a, &ap, &MultiPoly::int(-1));
            let boundary = em1 == (e2 - &e1.times(3));
            r.push(
                Check::new(
                    format!("{}: (e_1, e_2) = ({e1}, {e2}) gives (alpha, alpha') = ({a}, {ap}), e_(-1) = {em1}", case.name()),
                    "inversion of e_1, e_2",
                    back == (e1.clone(), e2.clone()) && boundary,
                )
                .witness_if_failed(|| format!("rebuilt e_1 = {}, e_2 = {}", back.0, back.1)),
            );
        }
        r.extend(deform_checks(case, cli.n_max, w1, w2));
        let alphas = match &cli.alpha {
            Some(s) => vec![param(Some(s), "alpha", "alpha")?],
            None => twisted_n2::deform::alpha_samples(),
        };
        for a in alphas {
            let fam = instantiate_deformation(case, a);
            r.push(sweep_check(&fam.label(), &axiom_sweep(&fam, w1, w2)));
        }
    }
    Ok(())
}

fn submodule(cli: &Cli, r: &mut Report) -> Result<(), Usage> {
    let (w1, w2) = (cli.gen_window, cli.basis_window);
    let cand = match (&cli.only, &cli.except) {
        (Some(_), Some(_)) => return usage("--only and --except are exclusive"),
        (Some(s), None) => Some(SubmoduleCandidate::only(parse_labels(s)?)),
        (None, Some(s)) => Some(SubmoduleCandidate::all_except(parse_labels(s)?)),
        (None, None) => None,
    };
    *r = std::mem::replace(r, Report::new("")).param("gen-window", w1).param("basis-window", w2);
    if cli.family.is_none() {
        if cand.is_some() {
            return usage("--only/--except need --family");
        }
        r.extend(submodule_checks(w1, w2));
        return Ok(());
    }
    let fam = family(cli)?;
    *r = std::mem::replace(r, Report::new("")).param("family", fam.label());
    match cand {
        Some(c) => {
            let rep = submodule_check(&fam, &c, w1, w2);
            let mut ch = Check::new(format!("{}: {} is closed", fam.label(), rep.candidate), "submodule closure", rep.closed);
            if let Some(e) = &rep.escape {
                ch = ch.witness(format!("escapes: {} {} -> {}", e.generator, e.vector, e.escaping_term));
            }
            r.push(ch);
            if rep.closed {
                let q = quotient_sweep(&fam, &c, w1, w2);
                r.push(sweep_check(&format!("{} modulo {}", fam.label(), rep.candidate), &q));
            }
            r.detail(&rep);
        }
        None => {
            let scan = generic_scan(&fam, w1, w2);
            r.push(scan.check());
            r.detail(&scan);
        }
    }
    Ok(())
}

fn submodule_checks(w1: i64, w2: i64) -> Vec<Check> {
    let mut out: Vec<Check> = submodule_facts(w1, w2).iter().map(|f| f.check()).collect();
    for s in generic_samples() {
        out.push(generic_scan(&s, w1, w2).check());
    }
    out
}

fn nonexist_b0(cli: &Cli, r: &mut Report) -> Result<(), Usage> {
    let a = param(cli.a.as_deref(), "a", "a")?;
    if let Some(c) = a.as_constant() {
        if (c * twisted_n2::exact::ExactScalar::from_integer(2.into())).is_integer() {
            return usage(format!("a = {a} lies in (1/2)Z, where the candidate is excluded"));
        }
    }
    *r = std::mem::replace(r, Report::new("")).param("a", &a);
    for at in [None, Some((1, 0))] {
        let rep = b0_nonexistence_check(&a, at);
        r.extend(rep.checks());
        r.detail(&rep);
    }
    Ok(())
}

fn jacobi(w: i64, r: &mut Report) {
    r.extend(jacobi_checks(w));
}

fn jacobi_checks(w: i64) -> Vec<Check> {
    let rep = super_jacobi_sweep(w);
    vec![Check::new(
        format!("super-Jacobi identity on all {} generator triples with |2i| <= {}", rep.triples_checked, 2 * w),
        "algebra brackets",
        rep.violations.is_empty(),
    )
    .witness_if_failed(|| {
        rep.violations.iter().take(5).map(|v| format!("({}, {}, {}): {}", v.triple[0], v.triple[1], v.triple[2], v.residual)).collect::<Vec<_>>().join("\n")
    })]
}

/// One acceptance criterion: a number, a title and the checks it runs.
pub struct Criterion {
    pub number: usize,
    pub title: &'static str,
    pub run: fn() -> Vec<Check>,
}

fn delta_checks(ws: &[DeltaWhich]) -> Vec<Check> {
    ws.iter().flat_map(|w| compare_delta_closed_form(*w).checks()).collect()
}

fn fault_checks() -> Vec<Check> {
    Fault::catalog()
        .iter()
        .map(|f| {
            let mut argv = vec!["tn2lab".to_string(), "verify-axioms".into(), "--family".into(), f.family.into()];
            if f.family.starts_with(['A', 'B']) && f.family.len() == 2 {
                argv.extend(["--alpha".into(), "2/7".into()]);
            }
            argv.extend(["--inject-fault".into(), f.name.into(), "--format".into(), "json".into()]);
            let out = run(&argv);
            let witnessed = out.stdout.contains("\"witness\"");
            Check::new(
                format!("fault {} on {} is detected (exit code 1 with a witness)", f.name, f.family),
                "module axioms",
                out.code == 1 && witnessed,
            )
            .witness_if_failed(|| format!("exit code {}", out.code))
        })
        .collect()
}

/// The full acceptance battery, in order.
pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { number: 1, title: "first LLT determinant equals its factorization", run: || delta_checks(&[DeltaWhich::Delta1]) },
        Criterion { number: 2, title: "second LLT determinant equals its factorization", run: || delta_checks(&[DeltaWhich::Delta2]) },
        Criterion {
            number: 3,
            title: "LLG determinants: divisibility and vanishing on the exceptional pairs",
            run: || delta_checks(&[DeltaWhich::Delta3, DeltaWhich::Delta3Prime]),
        },
        Criterion {
            number: 4,
            title: "root sets: linear roots and quadratic discriminants",
            run: || {
                RootSetName::ALL
                    .iter()
                    .flat_map(|n| match root_set(*n) {
                        Ok(e) => e.checks(),
                        Err(e) => vec![Check::new(n.name(), "root sets", false).witness(e.to_string())],
                    })
                    .collect()
            },
        },
        Criterion {
            number: 5,
            title: "axiom sweep of all six families",
            run: || {
                let mut out = Vec::new();
                for f in [FamilySpec::aab_symbolic(), FamilySpec::bab_symbolic()] {
                    out.push(sweep_check(&f.label(), &axiom_sweep(&f, 2, 4)));
                }
                out.extend(deformed_sweeps(2, 4));
                out
            },
        },
        Criterion { number: 6, title: "T action by composition for all six families", run: || t_checks(&six_families(), 2) },
        Criterion { number: 7, title: "coefficient solution families and normalizations", run: coefficient_checks },
        Criterion {
            number: 8,
            title: "deformation recurrences and closed forms",
            run: || DeformCase::ALL.iter().flat_map(|c| deform_checks(*c, 10, 2, 4)).collect(),
        },
        Criterion { number: 9, title: "submodule facts", run: || submodule_checks(2, 4) },
        Criterion {
            number: 10,
            title: "nonexistence of the b = 0, b' = -3/2 candidate",
            run: || {
                let mut out = b0_nonexistence_check(&MultiPoly::var("a"), None).checks();
                out.extend(b0_nonexistence_check(&MultiPoly::ratio(1, 3), Some((1, 0))).checks());
                out
            },
        },
        Criterion { number: 11, title: "fault injection is detected", run: fault_checks },
        Criterion { number: 12, title: "super-Jacobi identity", run: || jacobi_checks(2) },
    ]
}
