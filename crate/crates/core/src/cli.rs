//! The `hgpoly` command-line front end.
//!
//! Exit codes: 0 on success, 2 for invalid input, 3 when a feasibility guard
//! refuses an instance, 4 when a search budget runs out, 1 otherwise.
//! Budget flags can also be set through `HGPOLY_*` environment variables.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bounds::{
    labeled_count, product_bound, ratio_sequence, stirling_asymptotics_report, BoundTable, BoundValue, RatioKind,
};
use crate::census::{census, verify_family_claims, witness_search, CensusConfig, Mode, Stratum};
use crate::error::{Error, Result};
use crate::family::{generate_family, FamilySpec};
use crate::format::{parse_any, to_json, to_text};
use crate::hypergraph::{Hypergraph, DEFAULT_MIN_EDGE_SIZE};
use crate::iso::{canonical_form, count_nonisomorphic_general, count_nonisomorphic_runiform, EdgeUniverse};
use crate::limits::Limits;
use crate::poly::{compute, Basis, PolyId};

#[derive(Debug, Parser)]
#[command(name = "hgpoly", version, about = "Exact polynomial invariants and uniqueness censuses of small hypergraphs")]
pub struct Cli {
    #[command(flatten)]
    pub budgets: BudgetArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Largest n for the chromatic partition dynamic program (at most 25).
    #[arg(long, global = true, env = "HGPOLY_DP_MAX")]
    pub dp_max: Option<usize>,
    /// Largest n for independent-set enumeration.
    #[arg(long, global = true, env = "HGPOLY_SUBSET_MAX")]
    pub subset_max: Option<usize>,
    #[arg(long, global = true, env = "HGPOLY_COLORING_BUDGET")]
    pub coloring_budget: Option<u64>,
    #[arg(long, global = true, env = "HGPOLY_MATCHING_BUDGET")]
    pub matching_budget: Option<u64>,
    /// Largest n for exact canonical forms.
    #[arg(long, global = true, env = "HGPOLY_CANON_MAX")]
    pub canon_max: Option<usize>,
    /// Largest labeled search space a census may scan.
    #[arg(long, global = true, env = "HGPOLY_CENSUS_MAX_LABELED")]
    pub census_max_labeled: Option<u64>,
    /// Largest labeled search space a witness search may scan.
    #[arg(long, global = true, env = "HGPOLY_WITNESS_BUDGET")]
    pub witness_budget: Option<u64>,
}

impl BudgetArgs {
    pub fn limits(&self) -> Result<Limits> {
        let mut l = Limits::default();
        if let Some(v) = self.dp_max {
            l.dp_max_vertices = v;
        }
        if let Some(v) = self.subset_max {
            l.subset_max_vertices = v;
        }
        if let Some(v) = self.coloring_budget {
            l.coloring_budget = v;
        }
        if let Some(v) = self.matching_budget {
            l.matching_budget = v;
        }
        if let Some(v) = self.canon_max {
            l.canon_max_vertices = v;
        }
        if let Some(v) = self.census_max_labeled {
            l.census_max_labeled = v;
        }
        if let Some(v) = self.witness_budget {
            l.witness_budget = v;
        }
        l.validate()?;
        Ok(l)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a polynomial of a hypergraph file.
    Poly(PolyArgs),
    /// Count isomorphism classes and polynomial classes exhaustively.
    Census(CensusArgs),
    /// Search a stratum for non-isomorphic hypergraphs with the same polynomial.
    Witness(WitnessArgs),
    /// Generate a named family, or check the uniqueness claims for families.
    Family(FamilyArgs),
    /// Product bounds, ratio sequences, labeled counts and Stirling data.
    Bounds(BoundsArgs),
    /// Count hypergraphs up to isomorphism with Burnside's lemma.
    Count(CountArgs),
    /// Canonical form and digest, with a relabeling invariance check.
    Canon(CanonArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyArg {
    Chi,
    Ind,
    Match,
}

impl From<PolyArg> for PolyId {
    fn from(p: PolyArg) -> Self {
        match p {
            PolyArg::Chi => PolyId::Chi,
            PolyArg::Ind => PolyId::Ind,
            PolyArg::Match => PolyId::Match,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BasisArg {
    Native,
    Monomial,
    Falling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyFormat {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    /// Hypergraph file (text or JSON); `-` reads standard input.
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "chi")]
    pub poly: PolyArg,
    #[arg(long, value_enum, default_value = "native")]
    pub basis: BasisArg,
    #[arg(long, value_enum, default_value = "json")]
    pub format: PolyFormat,
    /// Also print the value at this point.
    #[arg(long)]
    pub eval: Option<i64>,
    #[arg(long, default_value_t = DEFAULT_MIN_EDGE_SIZE)]
    pub min_edge_size: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct CensusArgs {
    #[arg(long)]
    pub n: usize,
    /// Edge size for a uniform census.
    #[arg(long, conflicts_with = "mode")]
    pub r: Option<usize>,
    /// `sperner`, `all`, or an edge size.
    #[arg(long)]
    pub mode: Option<String>,
    #[arg(long, value_enum, default_value = "chi")]
    pub poly: PolyArg,
    /// Only hypergraphs with this many edges.
    #[arg(long)]
    pub edges: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Append-only checkpoint; rerunning with the same file resumes.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Write `<prefix>.csv` and `<prefix>.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report format on standard output.
    #[arg(long, value_enum, default_value = "csv")]
    pub format: ReportFormat,
    /// Leave the elapsed time out of reports.
    #[arg(long)]
    pub no_timestamp: bool,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "chi")]
    pub poly: PolyArg,
    #[arg(long, conflicts_with = "mode")]
    pub r: Option<usize>,
    /// `sperner`, `all`, or an edge size; inferred from the target if omitted.
    #[arg(long)]
    pub mode: Option<String>,
    /// Scan every edge count instead of the target's.
    #[arg(long)]
    pub all_edge_counts: bool,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, default_value_t = DEFAULT_MIN_EDGE_SIZE)]
    pub min_edge_size: usize,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[command(subcommand)]
    pub kind: FamilyKind,
}

#[derive(Debug, Args)]
pub struct FamilyOut {
    /// Output file; standard output if omitted.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum FamilyKind {
    /// Edgeless hypergraph on n vertices.
    Empty {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: FamilyOut,
    },
    /// All r-subsets of n vertices.
    Complete {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        out: FamilyOut,
    },
    /// Linear r-uniform path with m edges.
    Path {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        out: FamilyOut,
    },
    /// Linear r-uniform cycle with m edges.
    Cycle {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        out: FamilyOut,
    },
    /// Sunflower on n vertices with petals of p vertices.
    Sunflower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        out: FamilyOut,
    },
    /// Cycle with a glued path.
    B {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        edge: usize,
        #[command(flatten)]
        out: FamilyOut,
    },
    /// Check the uniqueness claims for hypercycles, sunflowers and glued cycles.
    Verify {
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long, default_value_t = 7)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    /// A ratio kind (`chi_general`, `chi_uniform(3)`, `ind_general`,
    /// `ind_uniform`, `match_general`, `match_uniform`), or `product_chi`,
    /// `product_ind`, `product_match`, `labeled`, `stirling`.
    #[arg(long)]
    pub kind: String,
    #[arg(long)]
    pub r: Option<usize>,
    /// Minimum edge size for the matching product.
    #[arg(long)]
    pub k: Option<usize>,
    /// First n; 6 for ratio sequences and 1 otherwise.
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, conflicts_with = "gnuplot")]
    pub csv: bool,
    #[arg(long)]
    pub gnuplot: bool,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub n: usize,
    /// Count `r`-uniform hypergraphs.
    #[arg(long)]
    pub r: Option<usize>,
    /// Edge universe for general counts: `min2`, `nonempty` or `all`.
    #[arg(long, default_value = "min2")]
    pub universe: String,
}

#[derive(Debug, Args)]
pub struct CanonArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random relabelings to check.
    #[arg(long, default_value_t = 16)]
    pub trials: usize,
    #[arg(long, default_value_t = DEFAULT_MIN_EDGE_SIZE)]
    pub min_edge_size: usize,
}

fn read_hypergraph(path: &Path, min_edge_size: usize) -> Result<Hypergraph> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())?
    } else {
        fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?
    };
    parse_any(&text, min_edge_size)
}

fn parse_mode(r: Option<usize>, mode: Option<&str>) -> Result<Option<Mode>> {
    match (r, mode) {
        (Some(r), _) => {
            let m = Mode::Uniform(r);
            m.validate()?;
            Ok(Some(m))
        }
        (None, Some(s)) => Ok(Some(s.parse()?)),
        (None, None) => Ok(None),
    }
}

/// Run a parsed command line, writing results to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<()> {
    let limits = cli.budgets.limits()?;
    match cli.command {
        Command::Poly(a) => cmd_poly(a, &limits, out),
        Command::Census(a) => cmd_census(a, &limits, out),
        Command::Witness(a) => cmd_witness(a, &limits, out),
        Command::Family(a) => cmd_family(a, &limits, out),
        Command::Bounds(a) => cmd_bounds(a, out),
        Command::Count(a) => cmd_count(a, out),
        Command::Canon(a) => cmd_canon(a, &limits, out),
    }
}

fn cmd_poly(a: PolyArgs, limits: &Limits, out: &mut dyn Write) -> Result<()> {
    let h = read_hypergraph(&a.input, a.min_edge_size)?;
    let p = compute(a.poly.into(), &h, limits)?;
    let p = match a.basis {
        BasisArg::Native => p,
        BasisArg::Monomial => p.to_basis(Basis::Monomial),
        BasisArg::Falling => p.to_basis(Basis::FallingFactorial),
    };
    match a.format {
        PolyFormat::Json => writeln!(out, "{}", p.to_json())?,
        PolyFormat::Text => {
            let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
            writeln!(out, "basis {}", p.basis())?;
            writeln!(out, "coeffs [{}]", coeffs.join(", "))?;
            writeln!(out, "{p}")?;
        }
        PolyFormat::Csv => {
            writeln!(out, "i,coeff")?;
            for (i, c) in p.coeffs().iter().enumerate() {
                writeln!(out, "{i},{c}")?;
            }
        }
    }
    if let Some(x) = a.eval {
        writeln!(out, "value at {x}: {}", p.evaluate(x))?;
    }
    Ok(())
}

fn cmd_census(a: CensusArgs, limits: &Limits, out: &mut dyn Write) -> Result<()> {
    let mode = parse_mode(a.r, a.mode.as_deref())?
        .ok_or_else(|| Error::InvalidArgument("census needs --r or --mode".into()))?;
    let config = CensusConfig {
        n: a.n,
        mode,
        poly: a.poly.into(),
        edge_count: a.edges,
        jobs: a.jobs,
        checkpoint: a.checkpoint,
        timestamp: !a.no_timestamp,
    };
    let report = census(&config, limits)?;
    if let Some(prefix) = &a.out {
        let with_ext = |ext: &str| {
            let mut s: OsString = prefix.clone().into_os_string();
            s.push(ext);
            PathBuf::from(s)
        };
        fs::write(with_ext(".csv"), report.to_csv())?;
        fs::write(with_ext(".json"), report.to_json())?;
    }
    match a.format {
        ReportFormat::Csv => write!(out, "{}", report.to_csv())?,
        ReportFormat::Json => write!(out, "{}", report.to_json())?,
    }
    Ok(())
}

fn infer_mode(h: &Hypergraph) -> Mode {
    match (h.min_edge_size(), h.max_edge_size()) {
        (Some(a), Some(b)) if a == b => Mode::Uniform(a),
        _ => Mode::All,
    }
}

fn cmd_witness(a: WitnessArgs, limits: &Limits, out: &mut dyn Write) -> Result<()> {
    let h = read_hypergraph(&a.input, a.min_edge_size)?;
    let mode = parse_mode(a.r, a.mode.as_deref())?.unwrap_or_else(|| infer_mode(&h));
    let stratum = Stratum { n: h.n(), mode, edge_count: if a.all_edge_counts { None } else { Some(h.edge_count()) } };
    let w = witness_search(&h, a.poly.into(), stratum, limits, a.jobs)?;
    write!(out, "{}", w.to_text())?;
    Ok(())
}

fn cmd_family(a: FamilyArgs, limits: &Limits, out: &mut dyn Write) -> Result<()> {
    let (spec, dest) = match a.kind {
        FamilyKind::Verify { r, n_max, jobs } => {
            let rep = verify_family_claims(r, n_max, limits, jobs)?;
            write!(out, "{}", rep.to_text())?;
            return Ok(());
        }
        FamilyKind::Empty { n, out } => (FamilySpec::Empty { n }, out),
        FamilyKind::Complete { n, r, out } => (FamilySpec::CompleteR { n, r }, out),
        FamilyKind::Path { m, r, out } => (FamilySpec::Hyperpath { m, r }, out),
        FamilyKind::Cycle { m, r, out } => (FamilySpec::Hypercycle { m, r }, out),
        FamilyKind::Sunflower { n, p, r, out } => (FamilySpec::Sunflower { n, p, r }, out),
        FamilyKind::B { p, r, edge, out } => (FamilySpec::BConstruction { p, r, edge }, out),
    };
    let h = generate_family(&spec)?;
    let body = if dest.json { to_json(&h) + "\n" } else { format!("# {}\n{}", spec.name(), to_text(&h)) };
    match dest.out {
        Some(path) => {
            fs::write(&path, body)?;
            writeln!(
                out,
                "wrote {} ({} vertices, {} edges) to {}",
                spec.name(),
                h.n(),
                h.edge_count(),
                path.display()
            )?;
        }
        None => write!(out, "{body}")?,
    }
    Ok(())
}

fn cmd_bounds(a: BoundsArgs, out: &mut dyn Write) -> Result<()> {
    let table = match a.kind.as_str() {
        "product_chi" | "product_ind" | "product_match" => {
            let poly: PolyId = a.kind["product_".len()..].parse()?;
            let mut t = BoundTable::default();
            for n in a.n_min.unwrap_or(1)..=a.n_max {
                t.push(n, a.kind.clone(), BoundValue::Exact(product_bound(poly, n, a.k)?));
            }
            t
        }
        "labeled" => {
            let mut t = BoundTable::default();
            let name = match a.r {
                Some(r) => format!("labeled_uniform({r})"),
                None => "labeled_general".into(),
            };
            for n in a.n_min.unwrap_or(1)..=a.n_max {
                let c = labeled_count(n, a.r);
                match c.exact {
                    Some(x) => t.push(n, name.clone(), BoundValue::Exact(x)),
                    None => {
                        let l = crate::util::log2_big(&c.log2).exp2();
                        t.push(n, name.clone(), BoundValue::Log2(l))
                    }
                }
            }
            t
        }
        "stirling" => stirling_asymptotics_report(a.n_min.unwrap_or(1), a.n_max)?,
        other => {
            let kind = match (RatioKind::parse(other, a.r)?, a.k) {
                (RatioKind::MatchGeneral(_), Some(k)) => RatioKind::MatchGeneral(k),
                (k, _) => k,
            };
            ratio_sequence(kind, a.n_min.unwrap_or(6), a.n_max)?
        }
    };
    if a.gnuplot {
        write!(out, "{}", table.to_gnuplot())?;
    } else {
        write!(out, "{}", table.to_csv())?;
    }
    Ok(())
}

fn cmd_count(a: CountArgs, out: &mut dyn Write) -> Result<()> {
    let c = match a.r {
        Some(r) => count_nonisomorphic_runiform(a.n, r)?,
        None => count_nonisomorphic_general(a.n, a.universe.parse::<EdgeUniverse>()?)?,
    };
    writeln!(out, "{c}")?;
    Ok(())
}

fn cmd_canon(a: CanonArgs, limits: &Limits, out: &mut dyn Write) -> Result<()> {
    let h = read_hypergraph(&a.input, a.min_edge_size)?;
    let form = canonical_form(&h, limits)?;
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut perm: Vec<usize> = (0..h.n()).collect();
    for _ in 0..a.trials {
        perm.shuffle(&mut rng);
        let g = h.permute(&perm)?;
        if canonical_form(&g, limits)? != form {
            return Err(Error::Invariant(format!("canonical form changed under relabeling {perm:?}")));
        }
    }
    writeln!(out, "canonical {:?}", form.to_hypergraph())?;
    writeln!(out, "digest {:016x}", form.digest())?;
    writeln!(out, "invariant under {} random relabelings (seed {})", a.trials, a.seed)?;
    Ok(())
}

/// Parse `args`, run, and return the process exit code. Errors go to stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            let _ = lock.flush();
            eprintln!("error: {e}");
            e.kind().exit_code()
        }
    }
}
