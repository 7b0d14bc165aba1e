use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use diversify::augmented::{generate_augmented, AugmentedParams, Rounding, RunSchedule};
use diversify::constructive::{
    generate_strongly_balanced, generate_subvector, BlockForm, PairingOrder, StronglyBalancedParams,
    SubvectorParams,
};
use diversify::format::{parse_collection, parse_permutation, parse_seed, write_collection, Format};
use diversify::maxmin::{default_threshold, generate_maxmin, MaxMinParams};
use diversify::metrics::{dedup, DiversityReport};
use diversify::permmap::{build_pn_g, default_gap, recursive_expand};
use diversify::pg::{generate_pg, PgMode, PgParams};
use diversify::{rebalance, Collection, Provenance, RebalanceTarget, Stride};

#[derive(Parser)]
#[command(name = "diversify", version, about = "Generate and analyse diversified zero-one vector collections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a collection of masks (or seeded vectors) from one generator
    Generate(GenerateArgs),
    /// Append permutation-mapped copies of an input collection
    Map(MapArgs),
    /// Report diversity statistics for an input collection
    Metrics(MetricsArgs),
    /// Drop repeated vectors, keeping first occurrences
    Dedup(DedupArgs),
    /// Flip every second or third complemented (or uncomplemented) position
    Rebalance(RebalanceArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Maxmin,
    MaxminBalanced,
    Augmented,
    Pg,
    PgExtended,
    Subvector,
    StronglyBalanced,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Lines,
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum RoundingArg {
    HalfRound,
    Floor,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScheduleArg {
    Mixed,
    PowersOfTwo,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    Double,
    Triple,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Published,
    RowMajor,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Complemented,
    Uncomplemented,
}

#[derive(Args)]
struct InputArgs {
    /// Collection file in lines or records format; stdin when omitted or `-`
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct OutputArgs {
    /// Destination file; stdout when omitted or `-`
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FormatArgs {
    #[arg(long, value_enum, default_value = "lines")]
    format: FormatArg,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    method: Method,
    /// Vector length
    #[arg(long)]
    n: usize,
    /// Stop once this many vectors have been emitted (pairs are never split)
    #[arg(long, default_value_t = 1000)]
    rlim: usize,
    /// Max/Min: stop when at most this many sets hold two elements [default: n/16]
    #[arg(long)]
    threshold: Option<usize>,
    /// Max/Min: leave out the leading zero/ones pair
    #[arg(long)]
    no_seed_pair: bool,
    /// Augmented: also emit the shifted run vectors
    #[arg(long)]
    include_shift: bool,
    #[arg(long, value_enum, default_value = "half-round")]
    rounding: RoundingArg,
    #[arg(long, value_enum, default_value = "mixed")]
    schedule: ScheduleArg,
    /// PG: drop the complement of the first vector
    #[arg(long)]
    skip_first_complement: bool,
    /// Subvector: sub-vector length
    #[arg(long)]
    p: Option<u32>,
    #[arg(long, value_enum, default_value = "double")]
    form: FormArg,
    /// Strongly balanced: recursion level
    #[arg(long)]
    level: Option<u32>,
    #[arg(long, value_enum, default_value = "published")]
    order: OrderArg,
    /// File holding one seed row of length n; masks are applied onto it
    #[arg(long)]
    seed: Option<PathBuf>,
    #[command(flatten)]
    format: FormatArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct MapArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Gap of the progression permutation [default: n/2 - 1]
    #[arg(long, conflicts_with = "perm")]
    g: Option<usize>,
    /// File holding one row of space-separated 1-based indices
    #[arg(long)]
    perm: Option<PathBuf>,
    #[arg(long, default_value_t = 1000)]
    rlim: usize,
    #[command(flatten)]
    format: FormatArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct MetricsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct DedupArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    format: FormatArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct RebalanceArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum)]
    target: TargetArg,
    #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
    stride: u8,
    /// Keep the input vectors and append the rebalanced ones after them
    #[arg(long)]
    append: bool,
    #[command(flatten)]
    format: FormatArgs,
    #[command(flatten)]
    output: OutputArgs,
}

enum Failure {
    Usage(String),
    Data(String),
}

type Outcome<T> = std::result::Result<T, Failure>;

fn usage(flag: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("{flag}: {e}"))
}

fn data(source: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Data(format!("{source}: {e}"))
}

fn is_stdio(path: &Option<PathBuf>) -> bool {
    path.as_deref().is_none_or(|p| p == Path::new("-"))
}

fn read_text(path: &Option<PathBuf>) -> Outcome<(String, String)> {
    if is_stdio(path) {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| data("stdin", e))?;
        return Ok(("stdin".into(), text));
    }
    let path = path.as_ref().expect("checked above");
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| data(&name, e))?;
    Ok((name, text))
}

fn read_file(path: &Path) -> Outcome<(String, String)> {
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|e| data(&name, e))?;
    Ok((name, text))
}

fn read_collection(input: &InputArgs) -> Outcome<Collection> {
    let (name, text) = read_text(&input.input)?;
    parse_collection(&text).map_err(|e| data(&name, e))
}

fn write_out(output: &OutputArgs, text: &str) -> Outcome<()> {
    if is_stdio(&output.output) {
        let mut out = io::stdout().lock();
        return out
            .write_all(text.as_bytes())
            .and_then(|_| out.flush())
            .map_err(|e| data("stdout", e));
    }
    let path = output.output.as_ref().expect("checked above");
    fs::write(path, text).map_err(|e| data(&path.display().to_string(), e))
}

fn format_of(f: &FormatArgs) -> Format {
    match f.format {
        FormatArg::Lines => Format::Lines,
        FormatArg::Records => Format::Records,
    }
}

fn generate(a: &GenerateArgs) -> Outcome<Collection> {
    let n = a.n;
    let method = |e| usage("--method", e);
    match a.method {
        Method::Maxmin | Method::MaxminBalanced => {
            let mut p = match a.method {
                Method::Maxmin => MaxMinParams::new(n),
                _ => MaxMinParams::balanced(n),
            };
            p = p
                .with_threshold(a.threshold.unwrap_or_else(|| default_threshold(n)))
                .with_rlim(a.rlim);
            if a.no_seed_pair {
                p = p.without_seed_pair();
            }
            generate_maxmin(&p).map_err(method)
        }
        Method::Augmented => {
            let mut p = AugmentedParams::new(n);
            p.rlim = a.rlim;
            p.include_shift = a.include_shift;
            p.rounding = match a.rounding {
                RoundingArg::HalfRound => Rounding::HalfRound,
                RoundingArg::Floor => Rounding::Floor,
            };
            p.schedule = match a.schedule {
                ScheduleArg::Mixed => RunSchedule::Mixed,
                ScheduleArg::PowersOfTwo => RunSchedule::PowersOfTwo,
            };
            generate_augmented(&p).map_err(method)
        }
        Method::Pg | Method::PgExtended => {
            let mode = match a.method {
                Method::Pg => PgMode::Basic,
                _ => PgMode::Extended,
            };
            let mut p = PgParams::new(n, mode);
            p.rlim = a.rlim;
            p.skip_first_complement = a.skip_first_complement;
            generate_pg(&p).map_err(method)
        }
        Method::Subvector => {
            let sub = a
                .p
                .ok_or_else(|| Failure::Usage("--p is required for --method subvector".into()))?;
            let form = match a.form {
                FormArg::Double => BlockForm::Double,
                FormArg::Triple => BlockForm::Triple,
            };
            let mut p = SubvectorParams::new(sub, n, form);
            p.rlim = a.rlim;
            generate_subvector(&p).map_err(|e| usage("--p", e))
        }
        Method::StronglyBalanced => {
            let level = a.level.ok_or_else(|| {
                Failure::Usage("--level is required for --method strongly-balanced".into())
            })?;
            let mut p = StronglyBalancedParams::new(level, n);
            p.rlim = a.rlim;
            p.order = match a.order {
                OrderArg::Published => PairingOrder::Published,
                OrderArg::RowMajor => PairingOrder::RowMajor,
            };
            generate_strongly_balanced(&p).map_err(|e| usage("--level", e))
        }
    }
}

fn cmd_generate(a: &GenerateArgs) -> Outcome<()> {
    if a.n == 0 {
        return Err(Failure::Usage("--n: must be at least 1".into()));
    }
    let mut c = generate(a)?;
    if let Some(path) = &a.seed {
        let (name, text) = read_file(path)?;
        let seed = parse_seed(&text).map_err(|e| data(&name, e))?;
        if seed.len() != a.n {
            return Err(data(
                &name,
                format!("seed has {} components, expected {}", seed.len(), a.n),
            ));
        }
        c = c.apply_seed(&seed).map_err(|e| data(&name, e))?;
    }
    write_out(&a.output, &write_collection(&c, format_of(&a.format)))
}

fn cmd_map(a: &MapArgs) -> Outcome<()> {
    let base = read_collection(&a.input)?;
    if base.is_empty() {
        return Err(Failure::Data("input holds no vectors".into()));
    }
    let n = base.n();
    let m = match &a.perm {
        Some(path) => {
            let (name, text) = read_file(path)?;
            let m = parse_permutation(&text).map_err(|e| data(&name, e))?;
            if m.len() != n {
                return Err(data(
                    &name,
                    format!("permutation has {} indices, vectors have {n} components", m.len()),
                ));
            }
            if m.is_identity() {
                return Err(data(&name, diversify::Error::DegenerateMapping));
            }
            m
        }
        None => build_pn_g(n, a.g.unwrap_or_else(|| default_gap(n))).map_err(|e| usage("--g", e))?,
    };
    let out = recursive_expand(&base, &m, a.rlim).map_err(|e| usage("--rlim", e))?;
    write_out(&a.output, &write_collection(&out, format_of(&a.format)))
}

fn cmd_metrics(a: &MetricsArgs) -> Outcome<()> {
    let (name, text) = read_text(&a.input.input)?;
    let c = parse_collection(&text).map_err(|e| data(&name, e))?;
    let report = DiversityReport::compute(&c).map_err(|e| data(&name, e))?;
    write_out(&a.output, &report.render())
}

fn cmd_dedup(a: &DedupArgs) -> Outcome<()> {
    let c = read_collection(&a.input)?;
    write_out(&a.output, &write_collection(&dedup(&c), format_of(&a.format)))
}

fn cmd_rebalance(a: &RebalanceArgs) -> Outcome<()> {
    let c = read_collection(&a.input)?;
    let target = match a.target {
        TargetArg::Complemented => RebalanceTarget::Complemented,
        TargetArg::Uncomplemented => RebalanceTarget::Uncomplemented,
    };
    let stride = Stride::try_from(a.stride as usize).map_err(|e| usage("--stride", e))?;
    let mut out = if a.append { c.clone() } else { Collection::new(c.n()) };
    for e in &c {
        let mut params = e.provenance.params.clone();
        params.insert("rebalance_stride".into(), a.stride.to_string());
        let prov = Provenance::new(
            e.provenance.generator.clone(),
            params,
            format!("{} rebalanced", e.provenance.label),
        );
        out.push(rebalance(&e.vector, target, stride), prov)
            .expect("rebalance keeps the length");
    }
    write_out(&a.output, &write_collection(&out, format_of(&a.format)))
}

fn run(cli: &Cli) -> Outcome<()> {
    match &cli.command {
        Command::Generate(a) => cmd_generate(a),
        Command::Map(a) => cmd_map(a),
        Command::Metrics(a) => cmd_metrics(a),
        Command::Dedup(a) => cmd_dedup(a),
        Command::Rebalance(a) => cmd_rebalance(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
