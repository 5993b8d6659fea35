use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use monrad::asr::{asr_of_power, compare_asr, scan_stability, AsrSet, Method, PowerKind, SourceIdeal};
use monrad::depth::{depth_from_asr, Field};
use monrad::io::{parse_input, Input, InputFormat};
use monrad::polyhedra::{s0_bound, stability_witness};
use monrad::report::{depth_csv, radicals_sidecar, scan_csv, DepthRow, ScanRow};
use monrad::varset::VarSet;
use monrad::{verify, Error, Result};

#[derive(Parser)]
#[command(name = "monrad", version, about = "Associated radicals, symbolic powers and depth of monomial ideals")]
struct Cli {
    /// Worker threads for lattice scans (default: all cores).
    #[arg(long, global = true, env = "MONRAD_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print asr(I^s) or asr(I^(s)) with witnesses.
    Asr(Job),
    /// CSV of depth R/I^s or R/I^(s) over a power range.
    DepthTable(Job),
    /// Monotonicity or stability scan.
    Scan(ScanJob),
    /// Balancedness verdict for a hypergraph, with a bad cycle if any.
    CheckBalanced {
        #[arg(long, value_name = "FILE")]
        hypergraph: PathBuf,
    },
    /// Run a bundled reproduction check: example1, t1, t3-bipartite, oracle.
    Verify {
        name: String,
        #[arg(long, default_value = "q")]
        field: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    #[arg(long, value_name = "FILE")]
    ideal: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    hypergraph: Option<PathBuf>,
    #[arg(long, value_name = "FILE")]
    decomposition: Option<PathBuf>,
    /// Any supported format, detected from its keys.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct Job {
    #[command(flatten)]
    input: InputArgs,
    /// auto, ideal, decomposition, hypergraph or text.
    #[arg(long)]
    format: Option<String>,
    #[arg(long, value_enum, default_value_t = KindArg::Ordinary)]
    kind: KindArg,
    #[arg(long, value_enum, default_value_t = MethodArg::Bruteforce)]
    method: MethodArg,
    /// `A..B` (inclusive) or a single power.
    #[arg(long, default_value = "1")]
    power: String,
    /// `q` or `p:<prime>`.
    #[arg(long, default_value = "q")]
    field: String,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, ValueEnum)]
enum Mode {
    Monotone,
    Stability,
}

#[derive(Args)]
struct ScanJob {
    #[command(flatten)]
    job: Job,
    #[arg(long, value_enum, default_value_t = Mode::Monotone)]
    mode: Mode,
    /// Stability reference power: `auto` uses ⌈n·bight^((n+2)/2)⌉.
    #[arg(long, default_value = "auto")]
    s0: String,
    #[arg(long, default_value_t = 5)]
    window: u32,
    /// Powers below s0 whose sets must lie inside the reference set.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,5,8")]
    samples: Vec<u32>,
}

#[derive(Copy, Clone, ValueEnum)]
enum KindArg {
    Ordinary,
    Symbolic,
}

#[derive(Copy, Clone, ValueEnum)]
enum MethodArg {
    Bruteforce,
    Polyhedral,
}

impl From<KindArg> for PowerKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Ordinary => PowerKind::Ordinary,
            KindArg::Symbolic => PowerKind::Symbolic,
        }
    }
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Bruteforce => Method::BruteForce,
            MethodArg::Polyhedral => Method::Polyhedral,
        }
    }
}

fn parse_power_range(s: &str) -> Result<(u32, u32)> {
    let bad = || Error::parse(1, 1, format!("power range must be 'A..B' with 1 <= A <= B, got '{s}'"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let a: u32 = s.trim().parse().map_err(|_| bad())?;
            (a, a)
        }
    };
    if a == 0 || b < a {
        return Err(bad());
    }
    Ok((a, b))
}

fn load(args: &InputArgs, format: Option<&str>) -> Result<Input> {
    let (path, implied) = match args {
        InputArgs { ideal: Some(p), .. } => (p, InputFormat::Auto),
        InputArgs { hypergraph: Some(p), .. } => (p, InputFormat::Hypergraph),
        InputArgs { decomposition: Some(p), .. } => (p, InputFormat::Decomposition),
        InputArgs { input: Some(p), .. } => (p, InputFormat::Auto),
        _ => unreachable!("clap enforces one input"),
    };
    let format = match format {
        Some(f) => f.parse()?,
        None => implied,
    };
    let src = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let input = parse_input(&src, format)?;
    if args.ideal.is_some() && !matches!(input, Input::Ideal(_)) {
        return Err(Error::Precondition("--ideal expects an ideal file".into()));
    }
    Ok(input)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

struct Prepared {
    source: SourceIdeal,
    kind: PowerKind,
    method: Method,
    range: (u32, u32),
    field: Field,
}

fn prepare(job: &Job) -> Result<Prepared> {
    let range = parse_power_range(&job.power)?;
    let field: Field = job.field.parse()?;
    let source = load(&job.input, job.format.as_deref())?.source()?;
    let (kind, method) = (PowerKind::from(job.kind), Method::from(job.method));
    if method == Method::Polyhedral && (kind != PowerKind::Symbolic || !source.is_square_free()) {
        return Err(Error::Precondition(
            "the polyhedral method needs --kind symbolic and a square-free ideal".into(),
        ));
    }
    Ok(Prepared {
        source,
        kind,
        method,
        range,
        field,
    })
}

fn sets(p: &Prepared) -> Result<Vec<(u32, AsrSet)>> {
    (p.range.0..=p.range.1)
        .map(|s| Ok((s, asr_of_power(&p.source, s, p.kind, p.method)?)))
        .collect()
}

fn cmd_asr(job: &Job) -> Result<ExitCode> {
    let p = prepare(job)?;
    let mut text = format!("I = {}\n", p.source.ideal());
    for (s, set) in sets(&p)? {
        let power = match p.kind {
            PowerKind::Ordinary => format!("I^{s}"),
            PowerKind::Symbolic => format!("I^({s})"),
        };
        text.push_str(&format!("asr({power}) [{}]: {} members\n", p.method, set.len()));
        for w in set.witnesses() {
            text.push_str(&format!("  {}\twitness {}\n", w.radical, w.exponent));
        }
    }
    emit(job.out.as_deref(), &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_depth_table(job: &Job) -> Result<ExitCode> {
    let p = prepare(job)?;
    let rows = sets(&p)?
        .into_iter()
        .map(|(s, set)| {
            let r = depth_from_asr(&set, p.field)?;
            Ok(DepthRow {
                s,
                kind: p.kind,
                depth: r.depth,
                argmin: r.argmin,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    emit(job.out.as_deref(), &depth_csv(&rows))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_scan(scan: &ScanJob) -> Result<ExitCode> {
    match scan.mode {
        Mode::Monotone => scan_monotone(&scan.job),
        Mode::Stability => scan_stable(scan),
    }
}

fn scan_monotone(job: &Job) -> Result<ExitCode> {
    let p = prepare(job)?;
    let all = sets(&p)?;
    let mut rows = Vec::new();
    for (k, (s, set)) in all.iter().enumerate() {
        let comparison = match k {
            0 => None,
            _ => Some(compare_asr(&all[k - 1].1, set)?.relation),
        };
        rows.push(ScanRow {
            s: *s,
            kind: p.kind,
            members: set.len(),
            depth: Some(depth_from_asr(set, p.field)?.depth),
            comparison,
        });
    }
    let csv = scan_csv(&rows);
    let sidecar = radicals_sidecar(&all.iter().map(|(s, set)| (*s, set)).collect::<Vec<_>>());
    match &job.out {
        Some(path) => {
            emit(Some(path), &csv)?;
            let mut side = path.clone().into_os_string();
            side.push(".radicals.txt");
            emit(Some(Path::new(&side)), &sidecar)?;
        }
        None => {
            print!("{csv}");
            for line in sidecar.lines() {
                println!("# {line}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn scan_stable(scan: &ScanJob) -> Result<ExitCode> {
    let job = &scan.job;
    let field: Field = job.field.parse()?;
    let source = load(&job.input, job.format.as_deref())?.source()?;
    if !source.is_square_free() {
        return Err(Error::Precondition("stability scans need a square-free ideal".into()));
    }
    let primes = source.square_free_primes()?;
    let n = primes.ambient();
    let bight = primes.primes().iter().map(|f| f.len()).max().unwrap_or(1);
    let s0 = match scan.s0.as_str() {
        "auto" => u32::try_from(s0_bound(n, bight)?).map_err(|_| Error::Overflow)?,
        v => v
            .parse()
            .ok()
            .filter(|&s: &u32| s >= 1)
            .ok_or_else(|| Error::parse(1, 1, format!("--s0 must be 'auto' or a positive integer, got '{v}'")))?,
    };
    let samples: Vec<u32> = scan.samples.iter().copied().filter(|&t| t >= 1 && t < s0).collect();
    let report = scan_stability(&primes, s0, scan.window, &samples)?;
    let depth = depth_from_asr(&report.reference, field)?.depth;

    let mut text = format!("I = {}\nn = {n}, bight = {bight}, s0 = {s0}, window = {}\n", source.ideal(), scan.window);
    text.push_str(&format!("asr(I^({s0})): {} members\n", report.reference.len()));
    let full = VarSet::full(n);
    let mut barycentric = 0;
    for w in report.reference.witnesses() {
        text.push_str(&format!("  {}\twitness {}\n", w.radical, w.exponent));
        if w.radical.support() == full {
            stability_witness(&primes, &w.radical, s0)?;
            barycentric += 1;
        }
    }
    text.push_str(&format!("barycentric witnesses validated at s0: {barycentric}\n"));
    match report.first_difference {
        None => text.push_str(&format!("equal to asr(I^({s0})) for s in {s0}..={}\n", s0 + scan.window)),
        Some(s) => text.push_str(&format!("first difference at s = {s}\n")),
    }
    text.push_str(&format!("samples {samples:?}: violations {:?}\n", report.sample_violations));
    text.push_str(&format!("depth R/I^({s0}) = {depth}\n"));
    text.push_str(&format!("inferred symbolic analytic spread (n - stabilized depth): {}\n", n - depth));
    text.push_str(if report.stable() { "STABLE\n" } else { "NOT STABLE\n" });
    emit(job.out.as_deref(), &text)?;
    if report.stable() {
        Ok(ExitCode::SUCCESS)
    } else {
        Err(Error::Invariant(format!("stability fails past s0 = {s0}")))
    }
}

fn cmd_check_balanced(path: &Path) -> Result<ExitCode> {
    let src = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let Input::Hypergraph(h) = parse_input(&src, InputFormat::Hypergraph)? else {
        unreachable!("hypergraph format requested")
    };
    match h.find_bad_cycle() {
        None => println!("BALANCED"),
        Some(c) => {
            let k = c.vertices.len();
            println!("NOT BALANCED: odd cycle of length {k}");
            let verts: Vec<String> = c.vertices.iter().map(|v| (v + 1).to_string()).collect();
            println!("vertices: {}", verts.join(" "));
            // rows are the cycle edges, columns the cycle vertices: the B_k pattern
            for (t, &e) in c.edges.iter().enumerate() {
                let edge = h.edges()[e];
                let row: Vec<&str> = c.vertices.iter().map(|&v| if edge.contains(v) { "1" } else { "0" }).collect();
                println!("E{} = {edge}: {}", t + 1, row.join(" "));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(name: &str, field: &str) -> Result<ExitCode> {
    let field: Field = field.parse()?;
    let check = verify::run(name, field).ok_or_else(|| {
        Error::Precondition(format!("unknown check '{name}', expected one of {}", verify::NAMES.join(", ")))
    })??;
    for line in &check.lines {
        println!("{line}");
    }
    println!("{}: {}", check.name, if check.passed { "PASS" } else { "FAIL" });
    Ok(if check.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        // only fails if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    let result = match &cli.command {
        Command::Asr(job) => cmd_asr(job),
        Command::DepthTable(job) => cmd_depth_table(job),
        Command::Scan(scan) => cmd_scan(scan),
        Command::CheckBalanced { hypergraph } => cmd_check_balanced(hypergraph),
        Command::Verify { name, field } => cmd_verify(name, field),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
