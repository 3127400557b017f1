use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;

use iwreath::config::Config;
use iwreath::counting;
use iwreath::cross_sections::{
    build_l_cross_section, build_r_cross_section, build_wreath_l_cross_section,
    build_wreath_r_cross_section, validate_isn_cross_section, validate_wreath_cross_section,
    GreenKind, IsnCrossSection, OrderedPartition, WreathCrossSection,
};
use iwreath::error::Error;
use iwreath::{isn, notation, verify, wreath};

/// Finite inverse symmetric semigroups, partial wreath products, and their
/// R-/L-cross-sections: enumeration, construction, validation, theorem
/// verification, and counting.
#[derive(Parser)]
#[command(name = "iwreath", version)]
struct Cli {
    /// Bounds config file (key=value); also read from $IW_CONFIG.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SemigroupKind {
    Isn,
    Wreath,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "L", alias = "l")]
    L,
}

impl From<Kind> for GreenKind {
    fn from(k: Kind) -> GreenKind {
        match k {
            Kind::R => GreenKind::R,
            Kind::L => GreenKind::L,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Stream all elements of IS_n or IS_m wr_p IS_n.
    Enumerate(EnumerateArgs),
    /// Build or validate cross-sections.
    #[command(subcommand, name = "cross-section")]
    CrossSection(CrossSectionCmd),
    /// Run a theorem-verification sweep.
    Verify(VerifyArgs),
    /// Counting formulas.
    Count(CountArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long, value_enum)]
    semigroup: SemigroupKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    count_only: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum CrossSectionCmd {
    /// Construct a cross-section from an ordered partition.
    Build(BuildArgs),
    /// Validate a cross-section read from a JSON file (or stdin with "-").
    Validate(ValidateArgs),
}

#[derive(Args)]
struct BuildArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    /// Ordered partition, e.g. "[1<2][3]".
    #[arg(long)]
    partition: String,
    /// Wreath mode: per-block IS_m ordered partitions, ";"-separated,
    /// e.g. "[1<2];[1][2]".
    #[arg(long)]
    components: Option<String>,
    /// Inner rank for wreath mode.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    count_only: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct ValidateArgs {
    /// Input path, "-" for stdin.
    #[arg(long = "in", default_value = "-")]
    input: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: isom-conjugacy-isn, isom-conjugacy-wreath, green-criteria,
    /// counting, cross-section-search.
    #[arg(long)]
    theorem: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args)]
struct CountArgs {
    /// Number of non-isomorphic cross-sections of IS_m wr_p IS_n.
    #[arg(long)]
    noniso: bool,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Print the partition number p_N.
    #[arg(long)]
    pn: Option<usize>,
}

/// exit 1: mathematical falsification or validation failure; exit 2: usage.
enum Failure {
    Math(String),
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Math(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
    fn message(&self) -> &str {
        match self {
            Failure::Math(m) | Failure::Usage(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::TheoremFalsified(_) | Error::NotCrossSection(_) | Error::NotIsomorphism => {
                Failure::Math(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match Config::resolve(cli.config.as_deref()) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command, &cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cmd: Command, cfg: &Config) -> Result<(), Failure> {
    match cmd {
        Command::Enumerate(args) => cmd_enumerate(args, cfg),
        Command::CrossSection(CrossSectionCmd::Build(args)) => cmd_build(args, cfg),
        Command::CrossSection(CrossSectionCmd::Validate(args)) => cmd_validate(args, cfg),
        Command::Verify(args) => cmd_verify(args, cfg),
        Command::Count(args) => cmd_count(args),
    }
}

/// Streams one line; a closed pipe on the reading side is not an error.
fn emit(out: &mut impl std::io::Write, line: &str) -> bool {
    writeln!(out, "{line}").is_ok()
}

fn cmd_enumerate(args: EnumerateArgs, cfg: &Config) -> Result<(), Failure> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match args.semigroup {
        SemigroupKind::Isn => {
            let all = isn::enumerate_is_bounded(args.n, cfg.max_n).map_err(Failure::from)?;
            if args.count_only {
                println!("{}", all.len());
                return Ok(());
            }
            for f in &all {
                let line = match args.format {
                    Format::Text => notation::print(f),
                    Format::Json => serde_json::to_string(f).expect("serializable"),
                };
                if !emit(&mut out, &line) {
                    return Ok(());
                }
            }
        }
        SemigroupKind::Wreath => {
            let m = args
                .m
                .ok_or_else(|| Failure::Usage("--m is required for --semigroup wreath".into()))?;
            let all = wreath::enumerate_wreath_bounded(m, args.n, cfg.max_wreath_m, cfg.max_wreath_n_spot)
                .map_err(Failure::from)?;
            if args.count_only {
                println!("{}", all.len());
                return Ok(());
            }
            for p in &all {
                let line = match args.format {
                    Format::Text => format!(
                        "({}; {})",
                        p.outer()
                            .dom()
                            .iter()
                            .map(|&x| format!("{}->{}", x, notation::print(p.inner_at(x).expect("dom"))))
                            .collect::<Vec<_>>()
                            .join(", "),
                        notation::print(p.outer())
                    ),
                    Format::Json => serde_json::to_string(p).expect("serializable"),
                };
                if !emit(&mut out, &line) {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

fn infer_rank(partition: &str) -> Result<usize, Failure> {
    let mut max = 0usize;
    let mut cur = String::new();
    for c in partition.chars().chain(std::iter::once(' ')) {
        if c.is_ascii_digit() {
            cur.push(c);
        } else if !cur.is_empty() {
            let v: usize = cur
                .parse()
                .map_err(|_| Failure::Usage(format!("bad point '{cur}'")))?;
            max = max.max(v);
            cur.clear();
        }
    }
    if max == 0 {
        return Err(Failure::Usage(format!("no points in partition '{partition}'")));
    }
    Ok(max)
}

fn cmd_build(args: BuildArgs, cfg: &Config) -> Result<(), Failure> {
    let n = infer_rank(&args.partition)?;
    if n > cfg.max_n {
        return Err(Failure::Usage(format!(
            "rank {n} exceeds the configured bound max_n={}",
            cfg.max_n
        )));
    }
    let op = OrderedPartition::parse(&args.partition, n).map_err(Failure::from)?;
    match &args.components {
        None => {
            let cs = match args.kind {
                Kind::R => build_r_cross_section(&op),
                Kind::L => build_l_cross_section(&op),
            };
            if args.count_only {
                println!("{}", cs.elements.len());
                return Ok(());
            }
            match args.format {
                Format::Json => println!("{}", serde_json::to_string(&cs).expect("serializable")),
                Format::Text => {
                    let stdout = std::io::stdout();
                    let mut out = stdout.lock();
                    for e in &cs.elements {
                        if !emit(&mut out, &notation::print(e)) {
                            break;
                        }
                    }
                }
            }
        }
        Some(spec) => {
            let parts: Vec<&str> = spec.split(';').collect();
            let m = match args.m {
                Some(m) => m,
                None => infer_rank(parts[0])?,
            };
            if m > cfg.max_wreath_m || n > cfg.max_wreath_n_spot {
                return Err(Failure::Usage(format!(
                    "(m, n) = ({m}, {n}) exceeds the configured bounds max_wreath_m={}, max_wreath_n_spot={}",
                    cfg.max_wreath_m, cfg.max_wreath_n_spot
                )));
            }
            let comps: Vec<IsnCrossSection> = parts
                .iter()
                .map(|p| {
                    OrderedPartition::parse(p, m)
                        .map(|op| build_r_cross_section(&op))
                        .map_err(Failure::from)
                })
                .collect::<Result<_, _>>()?;
            let cs = match args.kind {
                Kind::R => build_wreath_r_cross_section(&op, &comps),
                Kind::L => build_wreath_l_cross_section(&op, &comps),
            }
            .map_err(Failure::from)?;
            if args.count_only {
                println!("{}", cs.elements.len());
                return Ok(());
            }
            match args.format {
                Format::Json => println!("{}", serde_json::to_string(&cs).expect("serializable")),
                Format::Text => {
                    let stdout = std::io::stdout();
                    let mut out = stdout.lock();
                    for e in &cs.elements {
                        if !emit(&mut out, &serde_json::to_string(e).expect("serializable")) {
                            break;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn cmd_validate(args: ValidateArgs, cfg: &Config) -> Result<(), Failure> {
    let text = if args.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&args.input)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", args.input)))?
    };
    if let Ok(cs) = serde_json::from_str::<WreathCrossSection>(&text) {
        if cs.m > cfg.max_wreath_m || cs.n > cfg.max_wreath_n_spot {
            return Err(Failure::Usage("ambient exceeds configured bounds".into()));
        }
        return match validate_wreath_cross_section(&cs.elements, cs.m, cs.n, cs.kind)
            .map_err(Failure::from)?
        {
            Ok(()) => {
                println!("VALID {:?}-cross-section of IS_{} wr_p IS_{}", cs.kind, cs.m, cs.n);
                Ok(())
            }
            Err(diag) => Err(Failure::Math(diag)),
        };
    }
    let cs: IsnCrossSection = serde_json::from_str(&text)
        .map_err(|e| Failure::Usage(format!("cannot parse cross-section JSON: {e}")))?;
    if cs.n > cfg.max_n {
        return Err(Failure::Usage("ambient exceeds configured bounds".into()));
    }
    match validate_isn_cross_section(&cs.elements, cs.n, cs.kind).map_err(Failure::from)? {
        Ok(()) => {
            println!("VALID {:?}-cross-section of IS_{}", cs.kind, cs.n);
            Ok(())
        }
        Err(diag) => Err(Failure::Math(diag)),
    }
}

fn cmd_verify(args: VerifyArgs, cfg: &Config) -> Result<(), Failure> {
    let need_n = || args.n.ok_or_else(|| Failure::Usage("--n is required".into()));
    let need_m = || args.m.ok_or_else(|| Failure::Usage("--m is required".into()));
    let report = match args.theorem.as_str() {
        "isom-conjugacy-isn" => {
            let n = need_n()?;
            if n > cfg.max_n {
                return Err(Failure::Usage(format!("--n exceeds max_n={}", cfg.max_n)));
            }
            verify::verify_isom_conjugacy_isn(n)
        }
        "isom-conjugacy-wreath" => {
            let (m, n) = (need_m()?, need_n()?);
            if m > cfg.max_wreath_m || n > cfg.max_wreath_n {
                return Err(Failure::Usage(format!(
                    "(m, n) exceeds wreath sweep bounds ({}, {})",
                    cfg.max_wreath_m, cfg.max_wreath_n
                )));
            }
            verify::verify_isom_conjugacy_wreath(m, n)
        }
        "green-criteria" => {
            let (m, n) = (need_m()?, need_n()?);
            if m > cfg.max_wreath_m || n > cfg.max_wreath_n {
                return Err(Failure::Usage(format!(
                    "(m, n) exceeds wreath sweep bounds ({}, {})",
                    cfg.max_wreath_m, cfg.max_wreath_n
                )));
            }
            verify::verify_green_criteria(m, n)
        }
        "counting" => {
            let (m, n) = (need_m()?, need_n()?);
            if m > cfg.max_wreath_m || n > cfg.max_wreath_n {
                return Err(Failure::Usage(format!(
                    "(m, n) exceeds wreath sweep bounds ({}, {})",
                    cfg.max_wreath_m, cfg.max_wreath_n
                )));
            }
            verify::verify_counting(m, n)
        }
        "cross-section-search" => {
            let n = need_n()?;
            if n > cfg.max_n {
                return Err(Failure::Usage(format!("--n exceeds max_n={}", cfg.max_n)));
            }
            verify::verify_search_classification(n)
        }
        other => return Err(Failure::Usage(format!("unknown theorem '{other}'"))),
    };
    match report {
        Ok(r) => {
            println!("{r}");
            Ok(())
        }
        Err(Error::TheoremFalsified(msg)) => {
            println!("FAIL {msg}");
            Err(Failure::Math(msg))
        }
        Err(e) => Err(Failure::from(e)),
    }
}

fn big_to_json(v: &num_bigint::BigUint) -> serde_json::Value {
    match v.to_u64() {
        Some(u) => serde_json::Value::from(u),
        None => serde_json::Value::from(v.to_string()),
    }
}

fn cmd_count(args: CountArgs) -> Result<(), Failure> {
    if let Some(n) = args.pn {
        if n == 0 {
            return Err(Failure::Usage("--pn must be at least 1".into()));
        }
        println!("{}", counting::partition_count(n));
        return Ok(());
    }
    if args.noniso {
        let m = args.m.ok_or_else(|| Failure::Usage("--m is required".into()))?;
        let n = args.n.ok_or_else(|| Failure::Usage("--n is required".into()))?;
        if m == 0 || n == 0 {
            return Err(Failure::Usage("--m and --n must be at least 1".into()));
        }
        let (total, terms) = counting::count_noniso_wreath(m, n);
        let terms_json: Vec<serde_json::Value> = terms
            .iter()
            .map(|t| {
                serde_json::json!({
                    "j": t.j,
                    "value": big_to_json(&t.value),
                })
            })
            .collect();
        let out = serde_json::json!({
            "m": m,
            "n": n,
            "count": big_to_json(&total),
            "terms": terms_json,
        });
        println!("{out}");
        return Ok(());
    }
    Err(Failure::Usage("expected --noniso or --pn".into()))
}
