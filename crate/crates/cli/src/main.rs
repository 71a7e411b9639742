//! `bettisplit`: Betti tables, regularity and projective dimension of edge
//! ideals and facet ideals from the command line.

use std::path::PathBuf;
use std::process::ExitCode;

use bettisplit_core::betti::{
    forest_betti, froberg_linear, linear_strand_no_c4, n2p_max, pure_forest_linear_strand, reg_and_pd_forest,
    simplicial_forest_betti_with_cap, N2p,
};
use bettisplit_core::bitset::{DEFAULT_VERTEX_CAP, MAX_VERTICES};
use bettisplit_core::complex::DEFAULT_FACET_CAP;
use bettisplit_core::graph::DEFAULT_MATCHING_EDGE_CAP;
use bettisplit_core::oracle::{betti_oracle_with_cap, DEFAULT_ORACLE_CAP};
use bettisplit_core::splitting::{
    is_splitting_edge, is_splitting_facet, is_splitting_vertex, verify_splitting, SplitKind, SplitVerdict,
    Verification, DEFAULT_SUBSET_CAP,
};
use bettisplit_core::{BettiTable, Error, FieldSpec, Graph, MonomialIdeal, SimplicialComplex, VertexSet};
use clap::builder::RangedU64ValueParser;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "bettisplit", version, about)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").args(["graph", "complex"])))]
struct Options {
    /// Edge list: one `u v` pair per line, `isolated: a b` for isolated vertices
    #[arg(long, global = true, value_name = "PATH")]
    graph: Option<PathBuf>,
    /// Facet list: one facet per line as vertex names
    #[arg(long, global = true, value_name = "PATH")]
    complex: Option<PathBuf>,
    /// Field characteristic for the oracle: 0 or a prime
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Largest homological degree reported by the strand commands
    #[arg(long, global = true)]
    imax: Option<usize>,
    /// Largest generator support handed to the oracle
    #[arg(long, global = true, default_value_t = DEFAULT_ORACLE_CAP,
          value_parser = RangedU64ValueParser::<usize>::new().range(1..=64))]
    vertex_cap: usize,
    /// Largest complex searched exhaustively for a leafless subcomplex
    #[arg(long, global = true, default_value_t = DEFAULT_FACET_CAP,
          value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    facet_cap: usize,
    /// Largest `G(J ∩ K)` checked subset by subset by `check-split`
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSET_CAP,
          value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    subset_cap: usize,
    /// Largest edge count for the general induced-matching search
    #[arg(long, global = true, default_value_t = DEFAULT_MATCHING_EDGE_CAP,
          value_parser = RangedU64ValueParser::<usize>::new().range(1..))]
    edge_cap: usize,
    /// Accept inputs with up to 256 vertices instead of 64
    #[arg(long, global = true)]
    wide: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti table of a forest or simplicial forest by the splitting recursion
    Betti,
    /// Betti table of any input from the homology oracle
    Oracle,
    /// Castelnuovo–Mumford regularity
    Reg,
    /// Projective dimension
    Pd,
    /// Induced matching number of a graph
    InducedMatching,
    /// Check and verify a splitting of the ideal
    CheckSplit(SplitArgs),
    /// Largest p with property N_{2,p}
    N2p,
    /// Whether the edge ideal has a linear resolution
    Froberg,
    /// Linear strand β_{i,i+2} of a graph without induced 4-cycles
    LinearStrand,
    /// Linear strand β_{i,i+d} of a pure simplicial forest
    PureLinearStrand,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("split").required(true).args(["edge", "vertex", "facet"])))]
struct SplitArgs {
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    edge: Option<Vec<String>>,
    #[arg(long, value_name = "V")]
    vertex: Option<String>,
    /// Comma-separated vertex names
    #[arg(long, value_name = "F1,F2,...", value_delimiter = ',')]
    facet: Option<Vec<String>>,
}

enum Input {
    Graph(Graph),
    Complex(SimplicialComplex),
}

impl Input {
    fn ideal(&self) -> MonomialIdeal {
        match self {
            Input::Graph(g) => MonomialIdeal::edge_ideal(g),
            Input::Complex(c) => MonomialIdeal::facet_ideal(c),
        }
    }

    fn as_graph(&self, command: &str) -> Result<&Graph, Failure> {
        match self {
            Input::Graph(g) => Ok(g),
            Input::Complex(_) => Err(Failure::usage(format!("`{command}` needs --graph"))),
        }
    }

    fn as_complex(&self) -> SimplicialComplex {
        match self {
            Input::Graph(g) => SimplicialComplex::from_graph(g),
            Input::Complex(c) => c.clone(),
        }
    }
}

/// A diagnostic together with its exit code.
struct Failure {
    code: &'static str,
    message: String,
    hint: Option<String>,
    exit: u8,
}

impl Failure {
    fn usage(message: String) -> Self {
        Failure { code: "usage", message, hint: None, exit: 1 }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let hint = match &e {
            Error::NotAForest { .. } | Error::NotASimplicialForest { .. } => {
                Some("the `oracle` subcommand handles any input".to_string())
            }
            _ => None,
        };
        Failure {
            code: e.code(),
            message: e.to_string(),
            hint,
            exit: if e.is_input_error() { 1 } else { 2 },
        }
    }
}

type Outcome = Result<String, Failure>;

fn load(opts: &Options) -> Result<Input, Failure> {
    let read = |p: &PathBuf| {
        std::fs::read_to_string(p).map_err(|e| Failure {
            code: "io",
            message: format!("cannot read {}: {e}", p.display()),
            hint: None,
            exit: 1,
        })
    };
    let cap = if opts.wide { MAX_VERTICES } else { DEFAULT_VERTEX_CAP };
    match (&opts.graph, &opts.complex) {
        (Some(p), None) => Ok(Input::Graph(Graph::parse(&read(p)?, cap)?)),
        (None, Some(p)) => {
            let (c, dropped) = SimplicialComplex::parse(&read(p)?, cap)?;
            if dropped > 0 {
                log::warn!("dropped {dropped} non-maximal facet line(s)");
            }
            Ok(Input::Complex(c))
        }
        _ => Err(Failure::usage("exactly one of --graph or --complex is required".into())),
    }
}

fn render_table(t: &BettiTable, format: Format) -> String {
    match format {
        Format::Json => t.to_json().to_string() + "\n",
        Format::Table => {
            let mut out = t.render_diagram();
            for (i, j, v) in t.entries() {
                out.push_str(&format!("({i},{j}): {v}\n"));
            }
            out
        }
    }
}

fn render_value(format: Format, key: &str, value: Value, text: String) -> String {
    match format {
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("schema".into(), json!(1));
            obj.insert(key.into(), value);
            Value::Object(obj).to_string() + "\n"
        }
        Format::Table => text + "\n",
    }
}

fn recursion_table(input: &Input, opts: &Options) -> Result<BettiTable, Error> {
    match input {
        Input::Graph(g) => forest_betti(g),
        Input::Complex(c) => simplicial_forest_betti_with_cap(c, opts.facet_cap),
    }
}

fn oracle_table(input: &Input, opts: &Options) -> Result<BettiTable, Failure> {
    let field = FieldSpec::from_characteristic(opts.characteristic)?;
    Ok(betti_oracle_with_cap(&input.ideal(), field, opts.vertex_cap)?)
}

/// `(reg, pd, method)`, from the recursion when the input is a forest and
/// from the oracle otherwise.
fn reg_and_pd(input: &Input, opts: &Options) -> Result<(i32, i32, &'static str), Failure> {
    let by_recursion = match input {
        Input::Graph(g) if g.is_forest() => Some(reg_and_pd_forest(g)?),
        Input::Complex(c) if c.is_simplicial_forest_with_cap(opts.facet_cap)? => {
            let t = simplicial_forest_betti_with_cap(c, opts.facet_cap)?;
            Some((t.reg().ok_or(Error::ZeroIdeal)?, t.pd().ok_or(Error::ZeroIdeal)?))
        }
        _ => None,
    };
    if let Some((r, p)) = by_recursion {
        return Ok((r, p, "recursion"));
    }
    log::info!("input is not a forest; falling back to the oracle");
    let t = oracle_table(input, opts)?;
    Ok((t.reg().ok_or(Error::ZeroIdeal)?, t.pd().ok_or(Error::ZeroIdeal)?, "oracle"))
}

fn check_split(input: &Input, args: &SplitArgs, opts: &Options) -> Outcome {
    let i = input.ideal();
    let (label, kind, predicate, j, k) = if let Some(e) = &args.edge {
        let g = input.as_graph("check-split --edge")?;
        let (u, v) = (g.index_of(&e[0])?, g.index_of(&e[1])?);
        let predicate = is_splitting_edge(g, u, v)?;
        let j = MonomialIdeal::principal(g.names().clone(), VertexSet::pair(u, v));
        let k = MonomialIdeal::edge_ideal(&g.delete_edge(u, v)?);
        (format!("edge {} {}", e[0], e[1]), SplitKind::Edge { u, v }, predicate, j, k)
    } else if let Some(name) = &args.vertex {
        let g = input.as_graph("check-split --vertex")?;
        let v = g.index_of(name)?;
        let predicate = is_splitting_vertex(g, v)?;
        let star = g.adjacency(v).iter().map(|w| VertexSet::pair(v, w));
        let j = MonomialIdeal::minimalize(g.names().clone(), star);
        let k = MonomialIdeal::edge_ideal(&g.delete_vertices(&VertexSet::singleton(v))?);
        (format!("vertex {name}"), SplitKind::Vertex { v }, predicate, j, k)
    } else if let Some(names) = &args.facet {
        let c = input.as_complex();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let f = c.face_of(&refs)?;
        let predicate = is_splitting_facet(&c, &f)?;
        let j = MonomialIdeal::principal(c.names().clone(), f);
        let k = MonomialIdeal::facet_ideal(&c.remove_facet(&f)?);
        (format!("facet {}", c.format_face(&f)), SplitKind::Facet { facet: f }, predicate, j, k)
    } else {
        return Err(Failure::usage("one of --edge, --vertex or --facet is required".into()));
    };
    let verdict = verify_splitting(&i, &j, &k, kind, opts.subset_cap)?;
    let (status, method, reason, witness) = match &verdict {
        SplitVerdict::Verified(Verification::Exhaustive) => ("verified", Some("exhaustive"), None, vec![]),
        SplitVerdict::Verified(Verification::Certificate) => ("verified", Some("certificate"), None, vec![]),
        SplitVerdict::NotVerified { reason, witness } => (
            "not-verified",
            None,
            Some(reason.clone()),
            witness.iter().map(|m| i.format_monomial(m)).collect::<Vec<_>>(),
        ),
    };
    Ok(match opts.format {
        Format::Json => {
            json!({
                "schema": 1,
                "split": label,
                "predicate": predicate,
                "verdict": status,
                "method": method,
                "reason": reason,
                "witness": witness,
            })
            .to_string()
                + "\n"
        }
        Format::Table => {
            let mut out = format!("{label}: splitting by criterion: {}\n", if predicate { "yes" } else { "no" });
            match (method, reason) {
                (Some(m), _) => out.push_str(&format!("splitting function: verified ({m})\n")),
                (None, r) => {
                    out.push_str(&format!("splitting function: not verified ({})\n", r.unwrap_or_default()));
                    if !witness.is_empty() {
                        out.push_str(&format!("witness: {}\n", witness.join(", ")));
                    }
                }
            }
            out
        }
    })
}

fn run(cli: &Cli) -> Outcome {
    let opts = &cli.opts;
    let input = load(opts)?;
    let format = opts.format;
    match &cli.command {
        Command::Betti => Ok(render_table(&recursion_table(&input, opts)?, format)),
        Command::Oracle => Ok(render_table(&oracle_table(&input, opts)?, format)),
        Command::Reg => {
            let (r, _, method) = reg_and_pd(&input, opts)?;
            log::debug!("reg via {method}");
            Ok(render_value(format, "reg", json!(r), format!("reg = {r}")))
        }
        Command::Pd => {
            let (_, p, method) = reg_and_pd(&input, opts)?;
            log::debug!("pd via {method}");
            Ok(render_value(format, "pd", json!(p), format!("pd = {p}")))
        }
        Command::InducedMatching => {
            let m = input.as_graph("induced-matching")?.induced_matching_number_with_cap(opts.edge_cap)?;
            Ok(render_value(format, "induced_matching", json!(m), format!("induced matching number = {m}")))
        }
        Command::CheckSplit(args) => check_split(&input, args, opts),
        Command::N2p => {
            let g = input.as_graph("n2p")?;
            Ok(match n2p_max(g)? {
                N2p::LinearResolution => render_value(
                    format,
                    "n2p",
                    json!({"linear_resolution": true}),
                    "linear resolution (N_{2,p} for every p)".into(),
                ),
                N2p::P { p, cycle } => {
                    let names: Vec<&str> = cycle.iter().map(|&v| g.name(v)).collect();
                    render_value(
                        format,
                        "n2p",
                        json!({"linear_resolution": false, "p": p, "complement_cycle": names}),
                        format!("p = {p}\nshortest induced cycle of the complement: {}", names.join(" ")),
                    )
                }
            })
        }
        Command::Froberg => {
            let g = input.as_graph("froberg")?;
            let linear = froberg_linear(g)?;
            let text = if linear {
                "linear resolution: yes (complement chordal)".to_string()
            } else {
                let c = g.complement().shortest_minimal_cycle().unwrap_or_default();
                let names: Vec<&str> = c.iter().map(|&v| g.name(v)).collect();
                format!("linear resolution: no (complement has induced cycle {})", names.join(" "))
            };
            Ok(render_value(format, "linear_resolution", json!(linear), text))
        }
        Command::LinearStrand => {
            let g = input.as_graph("linear-strand")?;
            let strand = linear_strand_no_c4(g, opts.imax.unwrap_or(g.vertex_count()))?;
            Ok(render_strand(format, 2, &strand))
        }
        Command::PureLinearStrand => {
            let c = input.as_complex();
            let strand = pure_forest_linear_strand(&c, opts.imax.unwrap_or(c.facet_count()))?;
            let d = c.pure_dimension().unwrap_or(0);
            Ok(render_strand(format, d, &strand))
        }
    }
}

fn render_strand(format: Format, d: usize, strand: &[u64]) -> String {
    let values: Vec<String> = strand.iter().map(u64::to_string).collect();
    render_value(
        format,
        "strand",
        json!({"d": d, "values": strand}),
        format!("β(i,i+{d}) for i = 0..{}: {}", strand.len().saturating_sub(1), values.join(" ")),
    )
}

fn configure_threads() {
    let Ok(value) = std::env::var("BETTISPLIT_THREADS") else { return };
    match value.parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                log::warn!("could not configure {n} worker threads: {e}");
            }
        }
        _ => log::warn!("ignoring BETTISPLIT_THREADS={value:?}; expected a positive integer"),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    configure_threads();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error[{}]: {}", f.code, f.message);
            if let Some(h) = f.hint {
                eprintln!("hint: {h}");
            }
            ExitCode::from(f.exit)
        }
    }
}
