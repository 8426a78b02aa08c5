//! Command-line front end.
//!
//! Complex files are `{"m": 4, "facets": [[1,2],[2,3]]}`. Spaces files map
//! vertex labels `"1".."m"` to a space expression or to a pair
//! `{"domain": ..., "codomain": ..., "domain_contractible": bool}`.
//!
//! Exit codes: 0 on success, 2 on invalid input, 1 on an internal failure.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::decomp::{
    bbcg_cone_splitting, bbcg_wedge_splitting, hilton_milnor, loop_decompose, loop_decompose_contractible,
    loop_decompose_wedge, porter_loop_decomp, porter_summands, Bounds, DecompError, Decomposition, Pair,
    PairAssignment,
};
use crate::liealg::{generators_for, hall_basis, symbols, Bracket, Generator};
use crate::scomplex::{SimplicialComplex, VertexSet};
use crate::spacexpr::SpaceExpr;
use crate::verify::{self, VerificationReport};

const DEFAULT_MAX_DEGREE: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "polyco", version, about = "Loop-space decompositions of polyhedral coproducts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct Common {
    /// Truncation degree N; factors are exact through this degree.
    #[arg(long, env = "POLYCO_MAX_DEGREE", default_value_t = DEFAULT_MAX_DEGREE)]
    max_degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
struct Inputs {
    #[arg(long)]
    complex: PathBuf,
    #[arg(long)]
    spaces: PathBuf,
    /// Bracket weight bound W (default N + 1).
    #[arg(long)]
    max_weight: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// General decomposition for maps f_i: X_i → A_i. A bare space X stands for X → *.
    Decompose {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Decomposition of Ω(X,*)^K_co.
    DecomposeWedge {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Decomposition for contractible domains. A bare space A stands for PA → A.
    DecomposeContractible {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Ω(∨X_i) ≃ ∏ΩX_i × Ω(fibre wedge).
    Porter {
        #[arg(long)]
        spaces: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Hilton–Milnor decomposition of Ω of the wedge of the given suspensions.
    HiltonMilnor {
        #[arg(long)]
        spaces: PathBuf,
        #[arg(long)]
        max_weight: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Hall basis on the symbols x_1..x_k, or on the face generators of a complex.
    HallBasis {
        #[arg(long, conflicts_with = "faces_of", required_unless_present = "faces_of")]
        alphabet: Option<usize>,
        /// Use the generators a_{J,i} of every maximal face of this complex.
        #[arg(long)]
        faces_of: Option<PathBuf>,
        #[arg(long)]
        max_weight: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reduced rational homology of the realization.
    Homology {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Stable splittings of polyhedral products.
    Bbcg {
        #[arg(long)]
        complex: PathBuf,
        #[arg(long)]
        spaces: PathBuf,
        #[arg(long, value_enum, default_value_t = Splitting::Wedge)]
        splitting: Splitting,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Series checks of decompositions against independent oracles (W = N + 1).
    Verify {
        #[arg(long = "check", value_enum, default_values_t = [Check::Builtin])]
        checks: Vec<Check>,
        #[arg(long)]
        complex: Option<PathBuf>,
        /// Second complex for the disjoint-union check.
        #[arg(long)]
        complex2: Option<PathBuf>,
        #[arg(long)]
        spaces: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Splitting {
    Wedge,
    Cone,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    /// A fixed suite of standard examples.
    Builtin,
    HiltonMilnor,
    Porter,
    WedgeCase,
    Counterexample,
    DisjointUnion,
}

/// The resolved settings of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: String,
    pub complex: Option<PathBuf>,
    pub spaces: Option<PathBuf>,
    pub max_degree: usize,
    pub max_weight: Option<usize>,
    pub format: Format,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    fn validate(&self) -> Result<(), CliError> {
        if self.max_degree == 0 {
            return Err(CliError::Input("--max-degree must be at least 1".into()));
        }
        if self.max_weight == Some(0) {
            return Err(CliError::Input("--max-weight must be at least 1".into()));
        }
        Ok(())
    }

    fn bounds(&self) -> Bounds {
        Bounds::weight(self.max_weight.unwrap_or(self.max_degree + 1)).with_degree(self.max_degree)
    }
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "error: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl From<DecompError> for CliError {
    fn from(e: DecompError) -> Self {
        match e {
            DecompError::TruncationSoundness { .. } => CliError::Internal(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

struct Report {
    text: String,
    json: Value,
}

fn execute(command: Command) -> Result<(), CliError> {
    let (config, report) = match command {
        Command::Decompose { inputs, common } => {
            let config = config_of("decompose", &inputs, &common);
            let (k, pairs) = load_pairs(&inputs, PairDefault::ConstantMap)?;
            let d = loop_decompose(&k, &pairs, checked(&config)?.bounds())?;
            (config, decomposition_report(&k, d))
        }
        Command::DecomposeWedge { inputs, common } => {
            let config = config_of("decompose-wedge", &inputs, &common);
            let k = read_complex(&inputs.complex)?;
            let spaces = read_plain_spaces(&inputs.spaces, Some(k.m()))?;
            let d = loop_decompose_wedge(&k, &spaces, checked(&config)?.bounds())?;
            (config, decomposition_report(&k, d))
        }
        Command::DecomposeContractible { inputs, common } => {
            let config = config_of("decompose-contractible", &inputs, &common);
            let (k, pairs) = load_pairs(&inputs, PairDefault::PathFibration)?;
            let d = loop_decompose_contractible(&k, &pairs, checked(&config)?.bounds())?;
            (config, decomposition_report(&k, d))
        }
        Command::Porter { spaces, common } => {
            let config = RunConfig {
                command: "porter".into(),
                complex: None,
                spaces: Some(spaces.clone()),
                max_degree: common.max_degree,
                max_weight: None,
                format: common.format,
                output: common.output,
            };
            checked(&config)?;
            let xs = read_plain_spaces(&spaces, None)?;
            (config, porter_report(&xs)?)
        }
        Command::HiltonMilnor { spaces, max_weight, common } => {
            let config = RunConfig {
                command: "hilton-milnor".into(),
                complex: None,
                spaces: Some(spaces.clone()),
                max_degree: common.max_degree,
                max_weight,
                format: common.format,
                output: common.output,
            };
            checked(&config)?;
            let summands = read_plain_spaces(&spaces, None)?;
            let mut xs = Vec::new();
            for (i, s) in summands.iter().enumerate() {
                let x = verify::desuspend(s).ok_or_else(|| {
                    CliError::Input(format!("{}: space \"{}\" (`{s}`) is not a suspension", spaces.display(), i + 1))
                })?;
                xs.push(x);
            }
            let d = hilton_milnor(&xs, config.bounds())?;
            (config, decomposition_report_plain(d))
        }
        Command::HallBasis { alphabet, faces_of, max_weight, format, output } => {
            let config = RunConfig {
                command: "hall-basis".into(),
                complex: faces_of.clone(),
                spaces: None,
                max_degree: DEFAULT_MAX_DEGREE,
                max_weight: Some(max_weight),
                format,
                output,
            };
            checked(&config)?;
            let (letters, brackets) = match (alphabet, faces_of) {
                (Some(k), _) => {
                    if k == 0 || k > 64 {
                        return Err(CliError::Input("--alphabet must be between 1 and 64".into()));
                    }
                    let letters = symbols(k);
                    let basis = hall_basis(&letters, max_weight);
                    (letters, basis)
                }
                (None, Some(path)) => face_basis(&read_complex(&path)?, max_weight),
                (None, None) => unreachable!("clap requires one of the two"),
            };
            (config, hall_report(&letters, &brackets, max_weight))
        }
        Command::Homology { complex, format, output } => {
            let config = RunConfig {
                command: "homology".into(),
                complex: Some(complex.clone()),
                spaces: None,
                max_degree: DEFAULT_MAX_DEGREE,
                max_weight: None,
                format,
                output,
            };
            let k = read_complex(&complex)?;
            (config, homology_report(&k))
        }
        Command::Bbcg { complex, spaces, splitting, format, output } => {
            let config = RunConfig {
                command: "bbcg".into(),
                complex: Some(complex.clone()),
                spaces: Some(spaces.clone()),
                max_degree: DEFAULT_MAX_DEGREE,
                max_weight: None,
                format,
                output,
            };
            let k = read_complex(&complex)?;
            let xs = read_plain_spaces(&spaces, Some(k.m()))?;
            let summands = match splitting {
                Splitting::Wedge => bbcg_wedge_splitting(&k, &xs)?,
                Splitting::Cone => bbcg_cone_splitting(&k, &xs)?,
            };
            (config, bbcg_report(&k, splitting, &summands))
        }
        Command::Verify { checks, complex, complex2, spaces, common } => {
            let config = RunConfig {
                command: "verify".into(),
                complex: complex.clone(),
                spaces: spaces.clone(),
                max_degree: common.max_degree,
                max_weight: None,
                format: common.format,
                output: common.output,
            };
            checked(&config)?;
            let reports = run_checks(&checks, complex.as_deref(), complex2.as_deref(), spaces.as_deref(), config.max_degree)?;
            (config, verify_report(&reports))
        }
    };
    emit(&config, report)
}

fn config_of(command: &str, inputs: &Inputs, common: &Common) -> RunConfig {
    RunConfig {
        command: command.into(),
        complex: Some(inputs.complex.clone()),
        spaces: Some(inputs.spaces.clone()),
        max_degree: common.max_degree,
        max_weight: inputs.max_weight,
        format: common.format,
        output: common.output.clone(),
    }
}

fn checked(config: &RunConfig) -> Result<&RunConfig, CliError> {
    config.validate()?;
    Ok(config)
}

fn emit(config: &RunConfig, report: Report) -> Result<(), CliError> {
    let body = match config.format {
        Format::Text => report.text,
        Format::Json => canonical_json(&report.json),
    };
    match &config.output {
        Some(path) => fs::write(path, body).map_err(|e| CliError::Input(format!("{}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes()).map_err(|e| CliError::Internal(e.to_string()))
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline; parsing and
/// re-rendering the result reproduces it byte for byte.
pub fn canonical_json(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("a JSON value always serializes");
    s.push('\n');
    s
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("report types serialize to JSON")
}

// ---------------------------------------------------------------- inputs

fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn json_error(path: &Path, e: serde_json::Error) -> CliError {
    if e.line() == 0 {
        // Semantic errors raised after parsing carry no position.
        return CliError::Input(format!("{}: {e}", path.display()));
    }
    CliError::Input(format!("{}: line {}, column {}: {e}", path.display(), e.line(), e.column()))
}

pub fn read_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| json_error(path, e))
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairSpec {
    domain: SpaceExpr,
    codomain: SpaceExpr,
    #[serde(default)]
    domain_contractible: bool,
}

enum Entry {
    Space(SpaceExpr),
    Pair(PairSpec),
}

#[derive(Clone, Copy)]
enum PairDefault {
    ConstantMap,
    PathFibration,
}

/// Line of the first `"key":` in `text`, for error messages.
fn line_of_key(text: &str, key: &str) -> usize {
    let needle = format!("\"{key}\"");
    let mut from = 0;
    while let Some(pos) = text[from..].find(&needle) {
        let at = from + pos;
        let rest = text[at + needle.len()..].trim_start();
        if rest.starts_with(':') {
            return text[..at].matches('\n').count() + 1;
        }
        from = at + needle.len();
    }
    1
}

fn read_entries(path: &Path, expected: Option<usize>) -> Result<Vec<Entry>, CliError> {
    let text = read_text(path)?;
    let raw: BTreeMap<String, Value> = serde_json::from_str(&text).map_err(|e| json_error(path, e))?;
    let mut by_vertex = BTreeMap::new();
    for (key, value) in raw {
        let line = line_of_key(&text, &key);
        let vertex: usize = key
            .parse()
            .ok()
            .filter(|&v| v >= 1)
            .ok_or_else(|| CliError::Input(format!("{}: line {line}: key \"{key}\" is not a vertex label", path.display())))?;
        let is_pair = value.as_object().is_some_and(|o| o.contains_key("domain") || o.contains_key("codomain"));
        let entry = if is_pair {
            serde_json::from_value(value).map(Entry::Pair)
        } else {
            serde_json::from_value(value).map(Entry::Space)
        }
        .map_err(|e| CliError::Input(format!("{}: line {line}: vertex \"{key}\": {e}", path.display())))?;
        by_vertex.insert(vertex, entry);
    }
    let m = expected.unwrap_or(by_vertex.len());
    if by_vertex.len() != m || by_vertex.keys().copied().ne(1..=m) {
        let got: Vec<String> = by_vertex.keys().map(|v| v.to_string()).collect();
        return Err(CliError::Input(format!(
            "{}: expected one entry for each vertex 1..{m}, found [{}]",
            path.display(),
            got.join(", ")
        )));
    }
    if m == 0 {
        return Err(CliError::Input(format!("{}: no spaces given", path.display())));
    }
    Ok(by_vertex.into_values().collect())
}

fn read_plain_spaces(path: &Path, expected: Option<usize>) -> Result<Vec<SpaceExpr>, CliError> {
    read_entries(path, expected)?
        .into_iter()
        .enumerate()
        .map(|(i, entry)| match entry {
            Entry::Space(x) => Ok(x),
            Entry::Pair(p) if p.codomain.normalized().is_point() => Ok(p.domain),
            Entry::Pair(p) => Err(CliError::Input(format!(
                "{}: vertex \"{}\": this command needs spaces, got the map {} → {}",
                path.display(),
                i + 1,
                p.domain,
                p.codomain
            ))),
        })
        .collect()
}

fn load_pairs(inputs: &Inputs, default: PairDefault) -> Result<(SimplicialComplex, PairAssignment), CliError> {
    let k = read_complex(&inputs.complex)?;
    let pairs = read_entries(&inputs.spaces, Some(k.m()))?
        .into_iter()
        .map(|entry| match (entry, default) {
            (Entry::Pair(p), _) => Pair::with_flags(p.domain, p.codomain, p.domain_contractible),
            (Entry::Space(x), PairDefault::ConstantMap) => Pair::constant(x),
            (Entry::Space(a), PairDefault::PathFibration) => Pair::path_fibration(a),
        })
        .collect();
    Ok((k, PairAssignment::new(pairs)))
}

// ---------------------------------------------------------------- reports

fn decomposition_report(k: &SimplicialComplex, d: Decomposition) -> Report {
    let text = format!("complex: {k}\n{}", d.render());
    let json = serde_json::json!({ "complex": to_json(k), "decomposition": to_json(&d) });
    Report { text, json }
}

fn decomposition_report_plain(d: Decomposition) -> Report {
    Report { text: d.render(), json: serde_json::json!({ "decomposition": to_json(&d) }) }
}

fn porter_report(spaces: &[SpaceExpr]) -> Result<Report, CliError> {
    let d = porter_loop_decomp(spaces)?;
    let summands = porter_summands(spaces)?;
    let mut text = d.render();
    text += "fibre wedge summands:\n";
    for (subset, e, mult) in &summands {
        let mult = if *mult > 1 { format!(" ×{mult}") } else { String::new() };
        text += &format!("  {}  {e}{mult}\n", subset_label(*subset));
    }
    let json_summands: Vec<Value> = summands
        .iter()
        .map(|(s, e, mult)| serde_json::json!({ "subset": to_json(s), "summand": e.to_string(), "expr": to_json(e), "multiplicity": mult }))
        .collect();
    Ok(Report { text, json: serde_json::json!({ "decomposition": to_json(&d), "fibre_summands": json_summands }) })
}

fn subset_label(s: VertexSet) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

fn face_basis(k: &SimplicialComplex, max_weight: usize) -> (Vec<Generator>, Vec<Bracket>) {
    let mut letters = Vec::new();
    let mut brackets = Vec::new();
    for face in k.maximal_faces_ge2() {
        let alphabet = generators_for(face);
        brackets.extend(hall_basis(&alphabet, max_weight));
        letters.extend(alphabet);
    }
    letters.sort();
    letters.dedup();
    brackets.sort();
    brackets.dedup();
    (letters, brackets)
}

fn hall_report(letters: &[Generator], brackets: &[Bracket], max_weight: usize) -> Report {
    let letter_names: Vec<String> = letters.iter().map(|g| g.to_string()).collect();
    let mut text = format!("alphabet: {}\nmax weight: {max_weight}\nbrackets: {}\n", letter_names.join(" "), brackets.len());
    for b in brackets {
        text += &format!("  {:>2}  {}\n", b.weight(), b.tree());
    }
    let items: Vec<Value> = brackets
        .iter()
        .map(|b| serde_json::json!({ "bracket": b.tree().to_string(), "word": to_json(b), "weight": b.weight() }))
        .collect();
    let json = serde_json::json!({
        "alphabet": letter_names,
        "max_weight": max_weight,
        "count": brackets.len(),
        "brackets": items,
    });
    Report { text, json }
}

fn homology_report(k: &SimplicialComplex) -> Report {
    let h = k.homology();
    let spheres = k.wedge_of_spheres_type();
    let mut text = format!("complex: {k}\nreduced homology ranks: {:?}\n", h.ranks);
    if h.minus_one > 0 {
        text += "degree -1: 1 (empty realization)\n";
    }
    match &spheres {
        Some(dims) => text += &format!("wedge of spheres: {dims:?}\n"),
        None => text += "wedge of spheres: not certified\n",
    }
    let json = serde_json::json!({
        "complex": to_json(k),
        "ranks": h.ranks,
        "top_dim": h.top_dim,
        "minus_one": h.minus_one,
        "wedge_of_spheres": spheres,
    });
    Report { text, json }
}

fn bbcg_report(k: &SimplicialComplex, splitting: Splitting, summands: &[(VertexSet, SpaceExpr)]) -> Report {
    let name = match splitting {
        Splitting::Wedge => "wedge",
        Splitting::Cone => "cone",
    };
    let mut text = format!("complex: {k}\nsplitting: {name}\nsummands: {}\n", summands.len());
    for (s, e) in summands {
        text += &format!("  {}  {e}\n", subset_label(*s));
    }
    let items: Vec<Value> = summands
        .iter()
        .map(|(s, e)| serde_json::json!({ "subset": to_json(s), "summand": e.to_string(), "expr": to_json(e) }))
        .collect();
    Report { text, json: serde_json::json!({ "complex": to_json(k), "splitting": name, "summands": items }) }
}

fn verify_report(reports: &[VerificationReport]) -> Report {
    Report { text: verify::render_table(reports), json: to_json(&reports) }
}

fn run_checks(
    checks: &[Check],
    complex: Option<&Path>,
    complex2: Option<&Path>,
    spaces: Option<&Path>,
    n: usize,
) -> Result<Vec<VerificationReport>, CliError> {
    let need = |p: Option<&Path>, flag: &str, check: &str| {
        p.map(Path::to_path_buf).ok_or_else(|| CliError::Input(format!("--check {check} needs --{flag}")))
    };
    let mut reports = Vec::new();
    for &check in checks {
        match check {
            Check::Builtin => reports.extend(builtin_suite(n)),
            Check::HiltonMilnor => {
                let xs = read_plain_spaces(&need(spaces, "spaces", "hilton-milnor")?, None)?;
                reports.push(verify::check_hilton_milnor(&xs, n));
            }
            Check::Porter => {
                let xs = read_plain_spaces(&need(spaces, "spaces", "porter")?, None)?;
                reports.push(verify::check_porter(&xs, n));
            }
            Check::WedgeCase => {
                let k = read_complex(&need(complex, "complex", "wedge-case")?)?;
                let xs = read_plain_spaces(&need(spaces, "spaces", "wedge-case")?, Some(k.m()))?;
                reports.push(verify::check_wedge_case(&k, &xs, n));
            }
            Check::Counterexample => reports.push(verify::check_counterexample(n)),
            Check::DisjointUnion => {
                let k1 = read_complex(&need(complex, "complex", "disjoint-union")?)?;
                let k2 = read_complex(&need(complex2, "complex2", "disjoint-union")?)?;
                let xs = read_plain_spaces(&need(spaces, "spaces", "disjoint-union")?, Some(k1.m() + k2.m()))?;
                reports.push(verify::check_disjoint_union(&k1, &k2, &xs, n));
            }
        }
    }
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports.dedup_by(|a, b| a.name == b.name);
    Ok(reports)
}

fn builtin_suite(n: usize) -> Vec<VerificationReport> {
    let s = SpaceExpr::sphere;
    let point = SimplicialComplex::simplex(1);
    vec![
        verify::check_hilton_milnor(&[s(3), s(5)], n),
        verify::check_hilton_milnor(&[s(2), s(2)], n),
        verify::check_porter(&[s(2), s(2)], n),
        verify::check_porter(&[s(3), s(3), s(3)], n),
        verify::check_wedge_case(&SimplicialComplex::simplex(3), &[s(2), s(2), s(2)], n),
        verify::check_counterexample(n),
        verify::check_disjoint_union(&point, &point, &[s(3), s(4)], n),
    ]
}
