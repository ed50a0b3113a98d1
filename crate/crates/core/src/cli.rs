//! The `qweyl` command line.
//!
//! Every subcommand reads one or two presentation files (see
//! [`crate::presfile`]) and prints either plain text or, with `--json`, a
//! [`RunReport`]. Exit codes: 0 on success, 1 on usage or input errors, 2
//! when the computation itself refuses (e.g. an unsupported group or a
//! presentation outside a routine's hypotheses).

use std::collections::HashMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Element, PbwAlgebra, Presentation};
use crate::autgroup::{affine_automorphisms, g1_subgroup, gorenstein_certificate, AffineAuto, Certificate};
use crate::discriminant::{check_disc_invariance, discriminant};
use crate::expr::{parse_element, parse_scalar};
use crate::freeness::{FreeWord, FreenessError, WordEvaluator, WordVerdict};
use crate::invariants::{invariant_report, verify_relation, FiniteActionGroup};
use crate::isomorphism::is_isomorphic;
use crate::perm::Perm;
use crate::presfile::{digest, parse_presentation, ParsedFile};
use crate::skewpoly::{corollary28_autos, ts_solve, SkewPresentation};

#[derive(Parser, Debug)]
#[command(name = "qweyl", version, about = "Exact computations in (-1)-quantum Weyl algebras")]
pub struct Cli {
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of a word such as "x3 x2 x1" or "x1^2 x3".
    Nf { file: PathBuf, word: String },
    /// Product of two element expressions.
    Mul { file: PathBuf, u: String, v: String },
    /// Discriminant over the central subalgebra generated by the squares.
    Disc {
        file: PathBuf,
        /// Also check g(d) = c*d for every affine automorphism (finite groups only).
        #[arg(long)]
        check_invariance: bool,
    },
    /// Affine automorphism group G(A).
    Aut {
        file: PathBuf,
        /// Restrict to the subgroup with trivial homological determinant.
        #[arg(long)]
        g1: bool,
        /// Report the AS Gorenstein certificate for the group.
        #[arg(long)]
        certificate: bool,
    },
    /// Isomorphism test between two presentations.
    Iso { a: PathBuf, b: PathBuf },
    /// Invariant ring of a finite group of affine automorphisms.
    Inv(InvArgs),
    /// Evaluate words in the two elementary automorphisms built from Omega.
    Free(FreeArgs),
    /// Skew polynomial rings.
    Skew {
        file: PathBuf,
        #[command(subcommand)]
        op: SkewOp,
    },
    /// Omega(x_i1, ..., x_it) and its (anti)commutation signs.
    Omega {
        file: PathBuf,
        /// 1-based generator indices.
        #[arg(required = true, num_args = 1..)]
        indices: Vec<usize>,
    },
}

#[derive(Args, Debug)]
pub struct InvArgs {
    pub file: PathBuf,
    /// S<k>, pm1 or S<k>_x_pm1.
    #[arg(long, conflicts_with = "gens")]
    pub group: Option<String>,
    /// Generator "perm:r1,...,rn", e.g. "(12):1,1,-1". Repeatable.
    #[arg(long = "gen", id = "gens")]
    pub gens: Vec<String>,
    #[arg(long, default_value_t = 4)]
    pub degree: u32,
    /// Search relations among generators through this weighted degree.
    #[arg(long)]
    pub relations_through: Option<u32>,
    /// Expression in g1, g2, ... that should vanish. Repeatable.
    #[arg(long)]
    pub verify: Vec<String>,
}

#[derive(Args, Debug)]
pub struct FreeArgs {
    pub file: PathBuf,
    /// Words such as "h^2 g^-1 h".
    pub words: Vec<String>,
    /// Also check every reduced word up to this many syllables.
    #[arg(long)]
    pub max_len: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,-1,2,-2")]
    pub exponents: Vec<i64>,
    /// Print the left-R expansion of each explicit word in tau.
    #[arg(long)]
    pub tau: bool,
}

#[derive(Subcommand, Debug)]
pub enum SkewOp {
    /// Members of T_s in a box.
    Ts {
        #[arg(long)]
        s: usize,
        #[arg(long = "box", default_value_t = 8)]
        box_bound: u64,
    },
    /// The two triangular automorphisms for d in T_1, d' in T_2.
    Cor28 {
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u64>,
        #[arg(long, value_delimiter = ',', required = true)]
        dp: Vec<u64>,
        /// Check all reduced words up to this many syllables.
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Normal form of a word.
    Nf { word: String },
}

/// Structured output of one invocation.
#[derive(Serialize, Debug)]
pub struct RunReport {
    pub command: String,
    pub digest: Vec<FileDigest>,
    pub payload: Value,
    pub elapsed_ms: u128,
}

#[derive(Serialize, Debug)]
pub struct FileDigest {
    pub file: String,
    pub sha256: String,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Result of a subcommand: the JSON payload plus its plain-text rendering.
struct Outcome {
    payload: Value,
    text: String,
}

struct Loaded {
    parsed: ParsedFile,
    digest: FileDigest,
}

fn load(path: &Path) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let parsed = parse_presentation(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(Loaded {
        parsed,
        digest: FileDigest {
            file: path.display().to_string(),
            sha256: digest(&text),
        },
    })
}

fn weyl(l: &Loaded) -> Result<&Presentation, CliError> {
    match &l.parsed {
        ParsedFile::Weyl(p) => Ok(p),
        ParsedFile::Skew(_) => Err(usage(format!("{}: this command needs a[i,j] entries", l.digest.file))),
    }
}

fn skew(l: &Loaded) -> Result<&SkewPresentation, CliError> {
    match &l.parsed {
        ParsedFile::Skew(s) => Ok(s),
        ParsedFile::Weyl(_) => Err(usage(format!("{}: this command needs a skew presentation", l.digest.file))),
    }
}

fn algebra(l: &Loaded) -> &dyn PbwAlgebra {
    match &l.parsed {
        ParsedFile::Weyl(p) => p,
        ParsedFile::Skew(s) => s,
    }
}

/// Parses "x3 x2 x1", "x1^2*x3" or "3 2 1" into 1-based indices.
fn parse_word(text: &str) -> Result<Vec<usize>, CliError> {
    let mut out = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (b, e.parse::<usize>().map_err(|_| usage(format!("bad exponent in `{tok}`")))?),
            None => (tok, 1),
        };
        let index: usize = base
            .strip_prefix('x')
            .unwrap_or(base)
            .parse()
            .map_err(|_| usage(format!("expected a generator like x2, found `{tok}`")))?;
        out.extend(std::iter::repeat_n(index, exp));
    }
    Ok(out)
}

fn cmd_nf(l: &Loaded, word: &str) -> Result<Outcome, CliError> {
    let w = parse_word(word)?;
    let nf = algebra(l).normal_form(&w).map_err(usage)?;
    Ok(Outcome {
        payload: json!({ "word": w, "normal_form": nf.to_string() }),
        text: format!("{nf}\n"),
    })
}

fn cmd_mul(l: &Loaded, u: &str, v: &str) -> Result<Outcome, CliError> {
    let alg = algebra(l);
    let has = l.parsed.has_minpoly();
    let x = parse_element(u, alg, has).map_err(usage)?;
    let y = parse_element(v, alg, has).map_err(usage)?;
    let p = alg.mul(&x, &y);
    Ok(Outcome {
        payload: json!({ "u": x.to_string(), "v": y.to_string(), "product": p.to_string() }),
        text: format!("{p}\n"),
    })
}

fn cmd_disc(l: &Loaded, check: bool) -> Result<Outcome, CliError> {
    let pres = weyl(l)?;
    let d = discriminant(pres).map_err(domain)?;
    let lead = d.leading_monomial().render("y").unwrap_or_else(|| "1".into());
    let mut text = format!("discriminant: {}\nleading monomial: {lead}\nunit removed: {}\n", d.poly, d.unit);
    if let Some(note) = &d.note {
        text.push_str(&format!("note: {note}\n"));
    }
    let mut payload = json!({ "discriminant": d, "leading_monomial": lead });
    if check {
        let group = affine_automorphisms(pres).map_err(domain)?;
        if !group.is_finite() {
            return Err(domain("invariance check needs a finite automorphism group"));
        }
        let factors: Vec<(String, String)> = group
            .finite_part
            .par_iter()
            .map(|g| check_disc_invariance(&d, g).map(|c| (g.to_string(), c.to_string())))
            .collect::<Result<_, _>>()
            .map_err(domain)?;
        text.push_str(&format!("invariant under all {} automorphisms: g(d) = c*d\n", factors.len()));
        for (g, c) in &factors {
            text.push_str(&format!("  {g}: c = {c}\n"));
        }
        payload["invariance"] = factors
            .iter()
            .map(|(g, c)| json!({ "element": g, "factor": c }))
            .collect();
    }
    Ok(Outcome { payload, text })
}

fn cmd_aut(l: &Loaded, g1: bool, certificate: bool) -> Result<Outcome, CliError> {
    let pres = weyl(l)?;
    let full = affine_automorphisms(pres).map_err(domain)?;
    let group = if g1 { g1_subgroup(&full) } else { full };
    let perms: Vec<String> = group.perm_image.iter().map(Perm::to_string).collect();
    let mut text = format!(
        "order: {}\ntorus rank: {}\npermutation image ({}): {}\n",
        group.order,
        group.torus_rank,
        perms.len(),
        perms.join(" ")
    );
    if !group.needs_sqrt.is_empty() {
        let closure: Vec<String> = group.closure_perm_image.iter().map(Perm::to_string).collect();
        text.push_str(&format!(
            "over the algebraic closure: order {}, permutation image ({}): {}\n",
            group.closure_order,
            closure.len(),
            closure.join(" ")
        ));
        for c in &group.needs_sqrt {
            let r: Vec<String> = c.solutions.radicands().iter().map(|x| x.to_string()).collect();
            text.push_str(&format!("  {} needs sqrt of {}\n", c.perm, r.join(", ")));
        }
    }
    let label = if group.is_finite() { "elements" } else { "coset representatives" };
    text.push_str(&format!("{label}:\n"));
    for g in &group.finite_part {
        text.push_str(&format!("  {g}  hdet = {}\n", g.hdet()));
    }
    let mut payload = json!({ "group": group });
    if certificate {
        let cert = gorenstein_certificate(pres, &group, 0).map_err(domain)?;
        match &cert {
            Certificate::Certified { reasons } => {
                text.push_str(&format!("fixed ring AS Gorenstein: certified ({reasons:?})\n"))
            }
            Certificate::NotCertified { witness, hdet } => {
                text.push_str(&format!("not certified: {witness} has hdet {hdet}\n"))
            }
        }
        payload["certificate"] = serde_json::to_value(&cert).expect("serializable");
    }
    Ok(Outcome { payload, text })
}

fn cmd_iso(a: &Loaded, b: &Loaded) -> Result<Outcome, CliError> {
    let (pa, pb) = (weyl(a)?, weyl(b)?);
    let verdict = is_isomorphic(pa, pb).map_err(domain)?;
    let mut text = format!("{}\n", verdict.label());
    if let Some(w) = verdict.witness() {
        text.push_str(&format!("witness: {w}\n"));
    }
    if let crate::isomorphism::IsoVerdict::UndecidedNeedsSqrt { radicands } = &verdict {
        let r: Vec<String> = radicands.iter().map(|x| x.to_string()).collect();
        text.push_str(&format!("square roots missing in K: {}\n", r.join(", ")));
    }
    Ok(Outcome {
        payload: serde_json::to_value(&verdict).expect("serializable"),
        text,
    })
}

fn parse_gen(spec: &str, pres: &Presentation, has_minpoly: bool) -> Result<AffineAuto, CliError> {
    let n = pres.n();
    let (perm, scalars) = spec.split_once(':').unwrap_or((spec, ""));
    let perm = Perm::parse(n, perm).map_err(usage)?;
    let r: Vec<_> = if scalars.trim().is_empty() {
        vec![crate::scalar::Scalar::one(); n]
    } else {
        scalars
            .split(',')
            .map(|t| parse_scalar(t.trim(), has_minpoly.then_some(pres.number_field())).map_err(usage))
            .collect::<Result<_, _>>()?
    };
    if r.len() != n {
        return Err(usage(format!("`{spec}` needs {n} scalars")));
    }
    Ok(AffineAuto::new(perm, r))
}

fn cmd_inv(l: &Loaded, args: &InvArgs) -> Result<Outcome, CliError> {
    let pres = weyl(l)?;
    let group = match (&args.group, args.gens.is_empty()) {
        (Some(name), _) => FiniteActionGroup::named(name, pres).map_err(domain)?,
        (None, false) => {
            let gens: Vec<AffineAuto> = args
                .gens
                .iter()
                .map(|s| parse_gen(s, pres, l.parsed.has_minpoly()))
                .collect::<Result<_, _>>()?;
            FiniteActionGroup::generated_by(pres, &gens).map_err(domain)?
        }
        (None, true) => return Err(usage("give --group or at least one --gen")),
    };
    let report = invariant_report(&group, args.degree, args.relations_through, pres);
    let mut text = format!("group order: {}\n", group.order());
    text.push_str(&format!(
        "dim (F_d)^G for d = 0..={}: {:?}\n",
        args.degree, report.dims
    ));
    text.push_str("generators:\n");
    for (k, (g, d)) in report.generators.iter().zip(&report.generator_degrees).enumerate() {
        text.push_str(&format!("  g{} (degree {d}) = {g}\n", k + 1));
    }
    if let Some(b) = report.relation_bound {
        text.push_str(&format!("relations through degree {b}:\n"));
        for r in &report.relations {
            text.push_str(&format!("  {r} = 0\n"));
        }
    }
    let bindings: HashMap<String, Element> = report
        .generators
        .iter()
        .enumerate()
        .map(|(k, g)| (format!("g{}", k + 1), g.clone()))
        .collect();
    let mut verified = Vec::new();
    for expr in &args.verify {
        let holds = verify_relation(expr, &bindings, pres).map_err(usage)?;
        text.push_str(&format!("{expr} = 0: {holds}\n"));
        verified.push(json!({ "relation": expr, "holds": holds }));
    }
    Ok(Outcome {
        payload: json!({
            "group": { "order": group.order(), "elements": group.labels() },
            "report": report,
            "verified": verified,
        }),
        text,
    })
}

fn word_sweep(ev: &WordEvaluator<'_>, words: &[FreeWord]) -> Vec<(String, WordVerdict)> {
    words
        .par_iter()
        .map(|w| (w.to_string(), ev.free_witness(w)))
        .collect()
}

fn verdict_label(v: WordVerdict) -> &'static str {
    match v {
        WordVerdict::Identity => "identity",
        WordVerdict::NotIdentity => "not_identity",
    }
}

fn cmd_free(l: &Loaded, args: &FreeArgs) -> Result<Outcome, CliError> {
    let alg = algebra(l);
    let ev = WordEvaluator::omega(alg).map_err(domain)?;
    let explicit: Vec<FreeWord> = args
        .words
        .iter()
        .map(|w| FreeWord::parse(w).map_err(usage))
        .collect::<Result<_, _>>()?;
    let mut text = format!("g: {}\nh: {}\n", ev.g(), ev.h());
    let mut words = Vec::new();
    for w in &explicit {
        let verdict = ev.free_witness(w);
        text.push_str(&format!("{w}: {}\n", verdict_label(verdict)));
        let mut entry = json!({ "word": w.to_string(), "verdict": verdict });
        if args.tau {
            match ev.tau_expansion(w) {
                Ok(t) => {
                    text.push_str(&format!(
                        "  tau: d0 = {}\n       d1 = {}\n       d2 = {}\n       leading = {}\n",
                        t.d0, t.d1, t.d2, t.leading
                    ));
                    entry["tau"] = serde_json::to_value(&t).expect("serializable");
                }
                Err(FreenessError::NotATauWord) => {
                    text.push_str("  tau: not of the form g^n_z h^m_(z-1) ... g^n_1\n");
                    entry["tau"] = Value::Null;
                }
                Err(e) => return Err(domain(e)),
            }
        }
        words.push(entry);
    }
    let mut payload = json!({ "g": ev.g().to_string(), "h": ev.h().to_string(), "words": words });
    if let Some(max_len) = args.max_len {
        let all = FreeWord::enumerate(max_len, &args.exponents);
        let results = word_sweep(&ev, &all);
        let identities: Vec<&String> = results
            .iter()
            .filter(|(_, v)| *v == WordVerdict::Identity)
            .map(|(w, _)| w)
            .collect();
        text.push_str(&format!(
            "checked {} reduced words of length <= {max_len}: {} act as the identity\n",
            results.len(),
            identities.len()
        ));
        for w in &identities {
            text.push_str(&format!("  identity: {w}\n"));
        }
        payload["sweep"] = json!({
            "max_len": max_len,
            "exponents": args.exponents,
            "checked": results.len(),
            "identity_words": identities,
        });
    }
    Ok(Outcome { payload, text })
}

fn cmd_skew(l: &Loaded, op: &SkewOp) -> Result<Outcome, CliError> {
    let sp = skew(l)?;
    match op {
        SkewOp::Ts { s, box_bound } => {
            let sol = ts_solve(sp, *s, *box_bound).map_err(domain)?;
            let mut text = format!(
                "T_{s} particular solution: {}\nlattice basis: {:?}\nmembers in [0,{box_bound}]: {}\n",
                sol.particular.as_ref().map_or("none".into(), |p| format!("{p:?}")),
                sol.lattice,
                sol.members.len()
            );
            for m in &sol.members {
                text.push_str(&format!("  {m:?}\n"));
            }
            Ok(Outcome {
                payload: serde_json::to_value(&sol).expect("serializable"),
                text,
            })
        }
        SkewOp::Cor28 { d, dp, max_len } => {
            let (g, h) = corollary28_autos(sp, d, dp).map_err(domain)?;
            let ev = WordEvaluator::new(sp, g, h).map_err(domain)?;
            let words = FreeWord::enumerate(*max_len, &[1, -1]);
            let results = word_sweep(&ev, &words);
            let identities: Vec<&String> = results
                .iter()
                .filter(|(_, v)| *v == WordVerdict::Identity)
                .map(|(w, _)| w)
                .collect();
            let text = format!(
                "g: {}\nh: {}\nchecked {} reduced words of length <= {max_len}: {} act as the identity\n",
                ev.g(),
                ev.h(),
                results.len(),
                identities.len()
            );
            Ok(Outcome {
                payload: json!({
                    "g": ev.g().to_string(),
                    "h": ev.h().to_string(),
                    "checked": results.len(),
                    "identity_words": identities,
                }),
                text,
            })
        }
        SkewOp::Nf { word } => cmd_nf(l, word),
    }
}

fn cmd_omega(l: &Loaded, indices: &[usize]) -> Result<Outcome, CliError> {
    let alg = algebra(l);
    let omega = alg.omega(indices).map_err(usage)?;
    let mut text = format!("Omega = {omega}\n");
    let mut signs = Vec::new();
    for i in 0..alg.ngens() {
        let s = alg.anticommutation_sign(&omega, i);
        let shown = s.map_or("neither".to_string(), |s| if s > 0 { "+1".into() } else { "-1".into() });
        text.push_str(&format!("x{} Omega = {shown} * Omega x{}\n", i + 1, i + 1));
        signs.push(json!({ "generator": i + 1, "sign": s }));
    }
    Ok(Outcome {
        payload: json!({ "indices": indices, "t": indices.len(), "omega": omega.to_string(), "signs": signs }),
        text,
    })
}

fn dispatch(cli: &Cli) -> Result<(Outcome, Vec<FileDigest>), CliError> {
    let one = |p: &Path, f: &dyn Fn(&Loaded) -> Result<Outcome, CliError>| {
        let l = load(p)?;
        let out = f(&l)?;
        Ok((out, vec![l.digest]))
    };
    match &cli.command {
        Command::Nf { file, word } => one(file, &|l| cmd_nf(l, word)),
        Command::Mul { file, u, v } => one(file, &|l| cmd_mul(l, u, v)),
        Command::Disc { file, check_invariance } => one(file, &|l| cmd_disc(l, *check_invariance)),
        Command::Aut { file, g1, certificate } => one(file, &|l| cmd_aut(l, *g1, *certificate)),
        Command::Iso { a, b } => {
            let (la, lb) = (load(a)?, load(b)?);
            let out = cmd_iso(&la, &lb)?;
            Ok((out, vec![la.digest, lb.digest]))
        }
        Command::Inv(args) => one(&args.file, &|l| cmd_inv(l, args)),
        Command::Free(args) => one(&args.file, &|l| cmd_free(l, args)),
        Command::Skew { file, op } => one(file, &|l| cmd_skew(l, op)),
        Command::Omega { file, indices } => one(file, &|l| cmd_omega(l, indices)),
    }
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("QWEYL_THREADS") {
        let k: usize = v
            .parse()
            .ok()
            .filter(|&k| k > 0)
            .ok_or_else(|| usage(format!("QWEYL_THREADS must be a positive integer, got `{v}`")))?;
        builder = builder.num_threads(k);
    }
    builder.build().map_err(usage)
}

/// Runs one invocation; `args` includes the program name. Returns the
/// process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let pool = match thread_pool() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            return e.code();
        }
    };
    let start = Instant::now();
    let result = pool.install(|| dispatch(&cli));
    let elapsed = start.elapsed();
    match result {
        Ok((outcome, digest)) => {
            if cli.json {
                let command = args
                    .iter()
                    .skip(1)
                    .map(|a| a.to_string_lossy().into_owned())
                    .collect::<Vec<_>>()
                    .join(" ");
                let report = RunReport {
                    command,
                    digest,
                    payload: outcome.payload,
                    elapsed_ms: elapsed.as_millis(),
                };
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                let _ = write!(out, "{}", outcome.text);
                let _ = writeln!(err, "elapsed: {:.3} s", elapsed.as_secs_f64());
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {}", e.message());
            e.code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        assert_eq!(parse_word("x3 x2 x1").unwrap(), vec![3, 2, 1]);
        assert_eq!(parse_word("x1^2*x3").unwrap(), vec![1, 1, 3]);
        assert_eq!(parse_word("2 1").unwrap(), vec![2, 1]);
        assert!(parse_word("y1").is_err());
    }

    #[test]
    fn usage_errors_exit_one() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        assert_eq!(run(["qweyl", "bogus"], &mut out, &mut err), 1);
        assert_eq!(run(["qweyl", "nf", "/nonexistent.pres", "x1"], &mut out, &mut err), 1);
        assert_eq!(run(["qweyl", "--help"], &mut out, &mut err), 0);
    }
}
