//! Command-line front end for exact interval exchange transformations.

#![allow(clippy::result_large_err)]

pub mod spec;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use iet::coding::{coding_morphism, derived_set, factors, interval_j, natural_coding, return_words};
use iet::induction::{admissibility, apply_chi, chi_search, Admissibility, ChiSequence};
use iet::quadratic::euclid::euclid_expansion;
use iet::quadratic::graph::{build_graph, DEFAULT_VERTEX_BUDGET};
use iet::quadratic::morphic::extract_primitive_morphism;
use iet::{CanonicalMode, Error, Iet, QuadNum, Regularity, SemiInterval, Side};

use spec::{IetSpecFile, SpecError, RUNNING_EXAMPLE};

pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_NOT_ADMISSIBLE: i32 = 4;
pub const EXIT_CONNECTION: i32 = 5;
pub const EXIT_BUDGET: i32 = 6;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
    pub dot: Option<String>,
}

#[derive(Parser, Debug)]
#[command(name = "iet", version, about = "Exact interval exchange transformations over quadratic fields")]
struct Cli {
    /// JSON description of the transformation (default: the three-letter running example)
    #[arg(long, global = true, value_name = "FILE")]
    spec: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orbit points z, T(z), ..., T^(n-1)(z)
    Eval {
        #[arg(allow_hyphen_values = true)]
        z: String,
        n: usize,
    },
    /// First n letters of the natural coding of z
    Code {
        #[arg(allow_hyphen_values = true)]
        z: String,
        n: usize,
    },
    /// Factors of length at most n, one length per line
    Factors { n: usize },
    /// First return words to w
    Returns {
        w: String,
        #[arg(long)]
        left: bool,
    },
    /// Derived set with respect to the coding morphism of the return words to w
    Derive { w: String, n: usize },
    /// Induce on an admissible interval
    Induce(InduceTarget),
    /// Admissibility of [u, v) with a witness when it fails
    Admissible {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Induction graph (modified graph with --modified)
    Graph {
        #[arg(long)]
        modified: bool,
        /// Write DOT here instead of stdout
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_VERTEX_BUDGET)]
        budget: usize,
    },
    /// Primitive morphic presentation of the language
    Morphism {
        #[arg(long, default_value_t = 10)]
        max_len: usize,
    },
    /// Continued fraction digits of a two-letter rotation
    Euclid { n: usize },
    /// Run a verification suite: regularity, language, conjugacy, admissibility or all
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct InduceTarget {
    /// Sequence over {R, L}, applied left to right
    #[arg(long)]
    seq: Option<String>,
    #[arg(long, num_args = 2, value_names = ["U", "V"], allow_hyphen_values = true)]
    interval: Option<Vec<String>>,
    /// Induce on J_w
    #[arg(long)]
    word: Option<String>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Spec(SpecError),
    Core(Error),
    Io(String),
    NotAdmissible(String),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn core_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::NotAdmissible { .. } => EXIT_NOT_ADMISSIBLE,
        Error::ConnectionDetected { .. } | Error::NotRegular(_) => EXIT_CONNECTION,
        Error::VertexBudgetExceeded { .. } | Error::CapExceeded { .. } | Error::NoPrimitivePower(_) => EXIT_BUDGET,
        _ => EXIT_DOMAIN,
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Io(_) => EXIT_PARSE,
            Failure::Spec(SpecError::Json { .. }) => EXIT_PARSE,
            Failure::Spec(SpecError::Field { source, .. }) => core_code(source).min(EXIT_DOMAIN),
            Failure::Spec(SpecError::Iet(e)) => core_code(e),
            Failure::Core(e) => core_code(e),
            Failure::NotAdmissible(_) => EXIT_NOT_ADMISSIBLE,
            Failure::Verify(_) => EXIT_VERIFY,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) | Failure::Io(m) | Failure::NotAdmissible(m) | Failure::Verify(m) => m.clone(),
            Failure::Spec(e) => format!("spec: {e}"),
            Failure::Core(e) => e.to_string(),
        }
    }
}

struct Output {
    text: String,
    dot: Option<String>,
    /// Nonzero exit with the text still printed (connections in `euclid`, failed suites).
    failure: Option<Failure>,
}

impl Output {
    fn text(text: String) -> Self {
        Output { text, dot: None, failure: None }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run_command<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult { code: EXIT_PARSE, stderr: text, ..Default::default() }
            } else {
                CommandResult { code: 0, stdout: text, ..Default::default() }
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            let (code, stderr) = match &out.failure {
                Some(f) => (f.code(), format!("error: {}\n", f.message())),
                None => (0, String::new()),
            };
            CommandResult { code, stdout: out.text, stderr, dot: out.dot }
        }
        Err(f) => CommandResult { code: f.code(), stderr: format!("error: {}\n", f.message()), ..Default::default() },
    }
}

fn load(path: &Option<PathBuf>) -> Result<Iet, Failure> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?,
        None => RUNNING_EXAMPLE.to_string(),
    };
    IetSpecFile::parse(&text).and_then(|s| s.to_iet()).map_err(Failure::Spec)
}

fn point(t: &Iet, text: &str) -> Result<QuadNum, Failure> {
    Ok(QuadNum::parse_in(text, t.d())?)
}

fn words_line(t: &Iet, ws: &[iet::Word]) -> String {
    ws.iter().map(|w| t.alphabet().render(w)).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let t = load(&cli.spec)?;
    match cli.command {
        Command::Eval { z, n } => {
            let mut x = point(&t, &z)?;
            let mut text = String::new();
            for i in 0..n {
                writeln!(text, "{i}\t{x}").unwrap();
                if i + 1 < n {
                    x = t.apply(&x)?;
                }
            }
            Ok(Output::text(text))
        }
        Command::Code { z, n } => {
            let w = natural_coding(&t, &point(&t, &z)?, n)?;
            Ok(Output::text(format!("{}\n", t.alphabet().render(&w))))
        }
        Command::Factors { n } => {
            let f = factors(&t, n)?;
            Ok(Output::text(f.lines().into_iter().map(|l| l + "\n").collect()))
        }
        Command::Returns { w, left } => {
            let w = t.alphabet().parse_word(&w)?;
            let side = if left { Side::Left } else { Side::Right };
            Ok(Output::text(format!("{}\n", words_line(&t, &return_words(&t, &w, side)?))))
        }
        Command::Derive { w, n } => {
            let w = t.alphabet().parse_word(&w)?;
            let f = coding_morphism(t.alphabet(), &return_words(&t, &w, Side::Right)?)?;
            let d = derived_set(&t, &w, &f, n)?;
            let mut text = format!("f: {f}\n");
            for l in d.lines() {
                text.push_str(&l);
                text.push('\n');
            }
            Ok(Output::text(text))
        }
        Command::Induce(target) => induce(&t, target),
        Command::Admissible { u, v } => admissible(&t, &u, &v),
        Command::Graph { modified, dot, budget } => {
            let mode = if modified { CanonicalMode::Similarity } else { CanonicalMode::Equivalence };
            let g = build_graph(&t, mode, budget)?;
            let rendered = g.to_dot();
            let text = match &dot {
                Some(path) => {
                    std::fs::write(path, &rendered).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    format!("{} vertices, {} edges\n", g.vertex_count(), g.edges.len())
                }
                None => rendered.clone(),
            };
            Ok(Output { text, dot: Some(rendered), failure: None })
        }
        Command::Morphism { max_len } => {
            let p = extract_primitive_morphism(&t)?;
            let al = t.alphabet();
            let mut text = String::new();
            writeln!(text, "path: {}", if p.path.is_empty() { "ε".to_string() } else { p.path.to_string() }).unwrap();
            writeln!(text, "cycle: {} (power {})", p.cycle, p.power).unwrap();
            writeln!(text, "theta: {}", p.path_morphism).unwrap();
            writeln!(text, "eta: {}", p.cycle_morphism).unwrap();
            writeln!(text, "seed: {}", al.name(p.seed)).unwrap();
            writeln!(text, "prefix: {}", al.render(&p.fixed_point_prefix(40))).unwrap();
            let same = p.language(max_len) == factors(&t, max_len)?;
            writeln!(text, "factors up to {max_len}: {}", if same { "equal" } else { "DIFFERENT" }).unwrap();
            let failure = (!same).then(|| Failure::Verify("fixed-point language differs from the factors".into()));
            Ok(Output { text, dot: None, failure })
        }
        Command::Euclid { n } => {
            let (digits, connection) = euclid_expansion(&t, n)?;
            let mut text = digits.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
            text.push('\n');
            let failure = match connection {
                Some(c) if digits.len() < n => {
                    let step = digits.iter().sum::<u64>() as usize - 1;
                    Some(Failure::Core(Error::ConnectionDetected { step, connection: c }))
                }
                _ => None,
            };
            Ok(Output { text, dot: None, failure })
        }
        Command::Verify { suite } => verify(&t, &suite),
    }
}

fn describe(t: &Iet) -> String {
    let al = t.alphabet();
    let mut text = String::new();
    for &a in t.top() {
        writeln!(text, "  {}: {} -> {}", al.name(a), t.interval_of(a), t.image_of(a)).unwrap();
    }
    text
}

fn induce(t: &Iet, target: InduceTarget) -> Result<Output, Failure> {
    let chi = if let Some(seq) = target.seq {
        seq.parse::<ChiSequence>()?
    } else if let Some(iv) = target.interval {
        let j = SemiInterval::new(point(t, &iv[0])?, point(t, &iv[1])?)?;
        chi_search(t, &j, None)?
    } else {
        let w = t.alphabet().parse_word(target.word.as_deref().unwrap_or_default())?;
        let j = interval_j(t, &w).ok_or_else(|| Error::WordNotInLanguage(t.alphabet().render(&w)))?;
        chi_search(t, &j, None)?
    };
    let (s, theta) = apply_chi(t, &chi)?;
    let mut text = String::new();
    writeln!(text, "chi: {}", if chi.is_empty() { "ε".to_string() } else { chi.to_string() }).unwrap();
    writeln!(text, "domain: {}", s.domain()).unwrap();
    writeln!(text, "theta: {theta}").unwrap();
    text.push_str(&describe(&s));
    text.push_str(&IetSpecFile::from_iet(&s).to_json());
    Ok(Output::text(text))
}

fn admissible(t: &Iet, u: &str, v: &str) -> Result<Output, Failure> {
    let j = SemiInterval::new(point(t, u)?, point(t, v)?)?;
    match admissibility(t, &j, None)? {
        Admissibility::Admissible => {
            let chi = chi_search(t, &j, None)?;
            Ok(Output::text(format!("{j} is admissible: chi = {}\n", if chi.is_empty() { "ε".into() } else { chi.to_string() })))
        }
        Admissibility::NotAdmissible(witnesses) => {
            let mut msg = format!("{j} is not admissible");
            for w in witnesses {
                match w.orbit {
                    Some(o) => write!(
                        msg,
                        "; endpoint {} = T^{}(γ_{}) but T^{}(γ_{}) = {} lies inside",
                        w.endpoint, o.k, o.separation, o.h, o.separation, o.entry
                    )
                    .unwrap(),
                    None => write!(msg, "; endpoint {} is on no separation orbit", w.endpoint).unwrap(),
                }
            }
            Ok(Output { text: String::new(), dot: None, failure: Some(Failure::NotAdmissible(msg)) })
        }
    }
}

type Check = fn(&Iet) -> Result<String, String>;

fn check_regularity(t: &Iet) -> Result<String, String> {
    match t.idoc_probe(50) {
        Regularity::NoCollision => {}
        c => return Err(format!("probe found {c:?}")),
    }
    let g = build_graph(t, CanonicalMode::Equivalence, DEFAULT_VERTEX_BUDGET).map_err(|e| e.to_string())?;
    Ok(format!("no connection to depth 50; induction graph closes with {} classes", g.vertex_count()))
}

fn check_language(t: &Iet) -> Result<String, String> {
    let p = extract_primitive_morphism(t).map_err(|e| e.to_string())?;
    let f = factors(t, 10).map_err(|e| e.to_string())?;
    if p.language(10) != f {
        return Err("fixed-point factors differ from F(T) up to length 10".into());
    }
    Ok("fixed-point factors equal F(T) up to length 10".into())
}

fn check_conjugacy(t: &Iet) -> Result<String, String> {
    let mut n = 0;
    for len in 0..=6u32 {
        for bits in 0..(1u32 << len) {
            let chi = ChiSequence((0..len).map(|i| if bits >> i & 1 == 1 { Side::Left } else { Side::Right }).collect());
            let (s, theta) = apply_chi(t, &chi).map_err(|e| format!("{chi}: {e}"))?;
            for k in [1, 3, 7] {
                let d = s.domain();
                let z = d.lo() + &(d.len() * QuadNum::from_ratio(k, 10));
                let mut lifted = theta.apply(&natural_coding(&s, &z, 30).map_err(|e| e.to_string())?);
                lifted.truncate(30);
                if lifted != natural_coding(t, &z, 30).map_err(|e| e.to_string())? {
                    return Err(format!("χ = {chi}, z = {z}"));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} (χ, z) pairs with |χ| ≤ 6"))
}

fn check_admissibility(t: &Iet) -> Result<String, String> {
    let f = factors(t, 4).map_err(|e| e.to_string())?;
    let mut n = 0;
    for w in f.iter().filter(|w| !w.is_empty()) {
        let j = interval_j(t, w).ok_or("empty J_w")?;
        let chi = chi_search(t, &j, None).map_err(|e| format!("J_{}: {e}", t.alphabet().render(w)))?;
        let (s, _) = apply_chi(t, &chi).map_err(|e| e.to_string())?;
        if s.domain() != j {
            return Err(format!("χ = {chi} misses J_{}", t.alphabet().render(w)));
        }
        n += 1;
    }
    Ok(format!("J_w reached by induction for all {n} factors w with |w| ≤ 4"))
}

fn verify(t: &Iet, suite: &str) -> Result<Output, Failure> {
    let all: [(&str, Check); 4] = [
        ("regularity", check_regularity),
        ("language", check_language),
        ("conjugacy", check_conjugacy),
        ("admissibility", check_admissibility),
    ];
    let chosen: Vec<_> = all.iter().filter(|(name, _)| suite == "all" || suite == *name).collect();
    if chosen.is_empty() {
        return Err(Failure::Usage(format!(
            "unknown suite `{suite}` (expected all, regularity, language, conjugacy or admissibility)"
        )));
    }
    let mut text = String::new();
    let mut failed = 0;
    for (name, check) in chosen {
        match check(t) {
            Ok(detail) => writeln!(text, "PASS {name}: {detail}").unwrap(),
            Err(detail) => {
                failed += 1;
                writeln!(text, "FAIL {name}: {detail}").unwrap();
            }
        }
    }
    let failure = (failed > 0).then(|| Failure::Verify(format!("{failed} check(s) failed")));
    Ok(Output { text, dot: None, failure })
}
