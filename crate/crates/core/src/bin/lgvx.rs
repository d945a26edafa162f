use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use lgvx::aztec::{
    aztec_formula, build_aztec_rectangle, build_mixed_aztec, count_tilings_brute, count_tilings_via_paths, punch_holes,
    Cell,
};
use lgvx::format::{emit_graph_file, emit_region_file, parse_graph_file, parse_region_file};
use lgvx::lattices::{
    corollary52, theorem51, thm51_instance, weighted_delannoy, weighted_schroder, xyz_rhombus, ClosedFormParams,
};
use lgvx::pathcount::{brute_force_by_type, lgv_signed, matrix_m_with, signed_type_sum};
use lgvx::poly::variables;
use lgvx::selftest::{run_selftest, Fault};
use lgvx::{Drawing, Error, Limits, MarkedConfig, WeightPoly};

#[derive(Parser)]
#[command(
    name = "lgvx",
    version,
    about = "Count non-intersecting lattice path families and domino tilings"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Default)]
struct Eval {
    /// Integer values for variables, as var=int.
    #[arg(long, num_args = 1.., value_name = "VAR=INT")]
    eval: Vec<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate a graph or region file.
    Validate { file: PathBuf },
    /// Signed-matrix count for a graph file.
    Count {
        file: PathBuf,
        /// Also sum over non-intersecting families directly.
        #[arg(long)]
        brute: bool,
        /// Also print det(h) and its decomposition by connection type.
        #[arg(long)]
        lgv: bool,
        #[command(flatten)]
        eval: Eval,
    },
    /// Weighted Delannoy number D(n, k).
    Delannoy {
        n: u32,
        k: u32,
        #[command(flatten)]
        eval: Eval,
    },
    /// Weighted large Schroder number S(n).
    Schroder {
        n: u32,
        #[command(flatten)]
        eval: Eval,
    },
    /// Four collinear points on the triangular lattice.
    Thm51 {
        a: u32,
        b: u32,
        c: u32,
        #[command(flatten)]
        eval: Eval,
    },
    /// Four collinear points on the square lattice.
    Cor52 {
        a: u32,
        b: u32,
        c: u32,
        #[command(flatten)]
        eval: Eval,
    },
    /// Tilings of the Aztec rectangle with four collinear holes, by formula.
    Aztec { a: u32, b: u32, c: u32 },
    /// Count domino tilings of a region file.
    Tile {
        file: PathBuf,
        /// Exhaustive tiling search only.
        #[arg(long, conflicts_with_all = ["paths", "both"])]
        brute: bool,
        /// Path engine only.
        #[arg(long, conflicts_with = "both")]
        paths: bool,
        /// Both counters and their agreement (the default).
        #[arg(long)]
        both: bool,
    },
    /// Print a graph or region file produced by a builder.
    Emit {
        #[command(subcommand)]
        what: Emit,
    },
    /// Run the randomised property suites.
    Selftest {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        instances: usize,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Clone, Copy)]
enum Method {
    Brute,
    Paths,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    SignFlip,
}

#[derive(Subcommand)]
enum Emit {
    /// w by h grid, east edges x and north edges y.
    Grid {
        w: i64,
        h: i64,
        #[command(flatten)]
        ends: Ends,
    },
    /// Triangular rhombus of size N with weights x, y, z.
    Rhombus {
        n: i64,
        #[command(flatten)]
        ends: Ends,
    },
    /// Rhombus with the four collinear marked points.
    Thm51 { a: u32, b: u32, c: u32 },
    /// Aztec rectangle with holes given as a b pairs.
    Aztec {
        m: i64,
        n: i64,
        holes: Vec<i64>,
        /// Region with the full boundary rows rather than the tileable one.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Args)]
struct Ends {
    /// Start vertex labels, in order.
    #[arg(long, num_args = 0.., value_name = "LABEL")]
    starts: Vec<String>,
    /// End vertex labels, in order.
    #[arg(long, num_args = 0.., value_name = "LABEL")]
    ends: Vec<String>,
}

/// Failure of a run: bad input, or a disagreement the tool itself detected.
enum Failure {
    Input(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded { .. } | Error::MixedSignDeterminant(_) | Error::Internal(_) => {
                Failure::Run(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<bool, Failure>;

fn read(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn parse_eval(items: &[String]) -> Result<HashMap<String, BigInt>, Failure> {
    let mut out = HashMap::new();
    for it in items {
        let (k, v) = it
            .split_once('=')
            .ok_or_else(|| Failure::Input(format!("expected var=int, got `{it}`")))?;
        let v: BigInt = v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("`{v}` is not an integer")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

/// Substitutes the given values; an integer comes out when every variable is set.
fn specialize(p: &WeightPoly, values: &HashMap<String, BigInt>) -> Result<String, Failure> {
    if values.is_empty() {
        return Ok(p.to_string());
    }
    let mut names: Vec<_> = values.keys().collect();
    names.sort();
    let mut q = p.clone();
    for name in names {
        q = q.specialize(name, &values[name])?;
    }
    Ok(match q.as_constant() {
        Some(c) => c.to_string(),
        None => q.to_string(),
    })
}

fn print_poly(key: &str, p: &WeightPoly, eval: &Eval) -> Result<(), Failure> {
    println!("{key} = {p}");
    let values = parse_eval(&eval.eval)?;
    if !values.is_empty() {
        println!("{key} at {} = {}", eval.eval.join(" "), specialize(p, &values)?);
    }
    Ok(())
}

fn is_region(text: &str) -> bool {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("aztec"))
}

fn cmd_validate(file: &PathBuf) -> Outcome {
    let text = read(file)?;
    if is_region(&text) {
        let r = parse_region_file(&text)?;
        let (w, b) = r.holes_by_color();
        println!(
            "region aztec {} {}, {} cells, {} white and {} black holes",
            r.m,
            r.n,
            r.cells().len(),
            w.len(),
            b.len()
        );
    } else {
        let (d, m) = parse_graph_file(&text)?;
        println!(
            "graph with {} vertices, {} edges, {} marked pairs",
            d.num_vertices(),
            d.edges().len(),
            m.n()
        );
    }
    println!("valid");
    Ok(true)
}

fn cmd_count(file: &PathBuf, brute: bool, lgv: bool, eval: &Eval, limits: &Limits) -> Outcome {
    let start = Instant::now();
    let (d, m) = parse_graph_file(&read(file)?)?;
    println!("instance = {}, n = {}", file.display(), m.n());
    let r = matrix_m_with(&d, &m, limits)?;
    for i in 0..m.n() {
        let row: Vec<String> = (0..m.n()).map(|j| r.matrix.get(i, j).to_string()).collect();
        println!("M[{i}] = [{}]", row.join(", "));
    }
    println!("det M = {}", r.determinant);
    print_poly("count", &r.normalized_count, eval)?;
    let mut agree = true;
    if brute || lgv {
        let by_type = brute_force_by_type(&d, &m, limits)?;
        if brute {
            let total = by_type.values().fold(WeightPoly::zero(d.vars()), |acc, w| &acc + w);
            agree = total == r.normalized_count;
            println!("brute = {total}");
            println!("agree = {agree}");
        }
        if lgv {
            println!("det h = {}", lgv_signed(&d, &m)?);
            for (pi, w) in &by_type {
                let ty: Vec<String> = pi.iter().map(|k| (k + 1).to_string()).collect();
                println!("type ({}) = {w}", ty.join(" "));
            }
            println!("signed type sum = {}", signed_type_sum(&d, &by_type));
        }
    }
    println!("time_ms = {}", start.elapsed().as_millis());
    Ok(agree)
}

fn cmd_tile(file: &PathBuf, method: Method, limits: &Limits) -> Outcome {
    let start = Instant::now();
    let r = parse_region_file(&read(file)?)?;
    println!("region = {}", file.display());
    let brute = matches!(method, Method::Brute | Method::Both)
        .then(|| count_tilings_brute(&r, limits))
        .transpose()?;
    let paths = matches!(method, Method::Paths | Method::Both)
        .then(|| count_tilings_via_paths(&r, limits))
        .transpose()?;
    if let Some(b) = &brute {
        println!("brute = {b}");
    }
    if let Some(p) = &paths {
        println!("paths = {p}");
    }
    let mut ok = true;
    if let (Some(b), Some(p)) = (&brute, &paths) {
        ok = b == p;
        println!("agree = {ok}");
    }
    println!("time_ms = {}", start.elapsed().as_millis());
    Ok(ok)
}

fn marked(d: &Drawing, ends: &Ends) -> Result<MarkedConfig, Failure> {
    let s: Vec<&str> = ends.starts.iter().map(String::as_str).collect();
    let e: Vec<&str> = ends.ends.iter().map(String::as_str).collect();
    Ok(MarkedConfig::from_labels(d, &s, &e)?)
}

fn cmd_emit(what: &Emit) -> Outcome {
    let text = match what {
        Emit::Grid { w, h, ends } => {
            let v = variables(&["x", "y"]);
            let d = lgvx::lattices::build_grid(*w, *h, WeightPoly::var(&v, "x")?, WeightPoly::var(&v, "y")?)?;
            let m = marked(&d, ends)?;
            emit_graph_file(&d, &m)
        }
        Emit::Rhombus { n, ends } => {
            let d = xyz_rhombus(*n)?;
            let m = marked(&d, ends)?;
            emit_graph_file(&d, &m)
        }
        Emit::Thm51 { a, b, c } => {
            let (d, m) = thm51_instance(ClosedFormParams::new(*a, *b, *c)?)?;
            emit_graph_file(&d, &m)
        }
        Emit::Aztec { m, n, holes, full } => {
            if holes.len() % 2 != 0 {
                return Err(Failure::Input("holes must be given as a b pairs".into()));
            }
            let r = if *full {
                build_aztec_rectangle(*m, *n)?
            } else {
                build_mixed_aztec(*m, *n)?
            };
            let cells: Vec<Cell> = holes.chunks(2).map(|p| Cell::new(p[0], p[1])).collect();
            emit_region_file(&punch_holes(&r, &cells)?)
        }
    };
    print!("{text}");
    Ok(true)
}

fn run(cli: Cli) -> Outcome {
    let limits = Limits::from_env();
    match cli.cmd {
        Cmd::Validate { file } => cmd_validate(&file),
        Cmd::Count { file, brute, lgv, eval } => cmd_count(&file, brute, lgv, &eval, &limits),
        Cmd::Delannoy { n, k, eval } => {
            print_poly("delannoy", &weighted_delannoy(n, k), &eval)?;
            Ok(true)
        }
        Cmd::Schroder { n, eval } => {
            print_poly("schroder", &weighted_schroder(n)?, &eval)?;
            Ok(true)
        }
        Cmd::Thm51 { a, b, c, eval } => {
            print_poly("thm51", &theorem51(ClosedFormParams::new(a, b, c)?)?, &eval)?;
            Ok(true)
        }
        Cmd::Cor52 { a, b, c, eval } => {
            print_poly("cor52", &corollary52(ClosedFormParams::new(a, b, c)?)?, &eval)?;
            Ok(true)
        }
        Cmd::Aztec { a, b, c } => {
            println!("{}", aztec_formula(a, b, c)?);
            Ok(true)
        }
        Cmd::Tile {
            file,
            brute,
            paths,
            both,
        } => {
            let m = if brute {
                Method::Brute
            } else if paths {
                Method::Paths
            } else {
                let _ = both;
                Method::Both
            };
            cmd_tile(&file, m, &limits)
        }
        Cmd::Emit { what } => cmd_emit(&what),
        Cmd::Selftest {
            seed,
            instances,
            inject_fault,
        } => {
            let fault = inject_fault.map(|FaultArg::SignFlip| Fault::SignFlip);
            let report = run_selftest(seed, instances, fault);
            println!("{report}");
            Ok(report.ok())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
