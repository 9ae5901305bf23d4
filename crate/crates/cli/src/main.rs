use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz_core::cayley::{count_monotone_pairs_capped, DEFAULT_BRUTE_CAP};
use hurwitz_core::character::{default_cache_dir, CACHE_DIR_ENV, DEFAULT_TABLE_CAP};
use hurwitz_core::coefficient::{f_coefficient, frobenius_hurwitz, scaled_count};
use hurwitz_core::partition::parse_profile_list;
use hurwitz_core::selftest::{self, Scope};
use hurwitz_core::series::{tau_expand, DegreeCaps};
use hurwitz_core::{
    character_table, BandSpec, CharacterEngine, CoefficientKey, Error, Partition, Rational,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "hurwitz",
    version,
    about = "Exact composite Hurwitz numbers and monotone path counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Directory for cached character tables.
    #[arg(long, env = CACHE_DIR_ENV, global = true)]
    cache_dir: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Coefficient F^c_d(mu, nu) by the spectral formula.
    Coeff(KeyArgs),
    /// Hurwitz number by Frobenius' formula.
    Hurwitz {
        /// Profiles separated by ';', e.g. "2;2".
        #[arg(long)]
        profiles: String,
        /// Genus of the base curve.
        #[arg(long, default_value_t = 0)]
        base_genus: usize,
    },
    /// Number of (start, path) pairs in the Cayley graph.
    Paths {
        #[command(flatten)]
        key: KeyArgs,
        /// Largest n for brute-force enumeration.
        #[arg(long, default_value_t = DEFAULT_BRUTE_CAP)]
        brute_cap: usize,
    },
    /// Truncated power-sum expansion of the tau-function.
    Expand {
        /// Largest q-degree.
        #[arg(long)]
        n_max: u32,
        /// Degree caps "<w caps>;<z caps>", e.g. "3,3;2".
        #[arg(long)]
        caps: String,
        /// With --nu, extract a single coefficient.
        #[arg(long, requires = "nu")]
        mu: Option<String>,
        #[arg(long, requires = "mu")]
        nu: Option<String>,
        #[arg(long, default_value = "")]
        c: String,
        #[arg(long, default_value = "")]
        d: String,
    },
    /// Character table of S_n.
    Table {
        #[arg(long, alias = "n-max")]
        n: usize,
    },
    /// Run the self-verification suites.
    Selftest {
        #[arg(long, value_enum, default_value_t = ScopeArg::Quick)]
        scope: ScopeArg,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScopeArg {
    Quick,
    Full,
}

#[derive(Args, Debug)]
struct KeyArgs {
    #[arg(long)]
    mu: String,
    #[arg(long)]
    nu: String,
    /// Strict band lengths, e.g. "1,2".
    #[arg(long, default_value = "")]
    c: String,
    /// Weak band lengths.
    #[arg(long, default_value = "")]
    d: String,
}

impl KeyArgs {
    fn key(&self) -> Result<CoefficientKey, Error> {
        CoefficientKey::new(
            self.mu.parse()?,
            self.nu.parse()?,
            parse_lengths(&self.c)?,
            parse_lengths(&self.d)?,
        )
    }
}

fn parse_lengths(s: &str) -> Result<Vec<usize>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|e| Error::InvalidArgument(format!("band length {t:?}: {e}")))
        })
        .collect()
}

/// A report that renders as one JSON value or as CSV rows.
struct Output {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
}

fn integer_json(v: &num_bigint::BigInt) -> Value {
    match i64::try_from(v) {
        Ok(i) => json!(i),
        Err(_) => json!(v.to_string()),
    }
}

fn run(cli: &Cli) -> Result<(Output, bool), Error> {
    let ok = |out| Ok((out, true));
    match &cli.command {
        Command::Coeff(args) => {
            let key = args.key()?;
            let f = f_coefficient(&key)?;
            let nf = scaled_count(&f, key.n());
            let genus2 = key.double_genus();
            ok(Output {
                json: json!({"F": f.to_string(), "nF": nf.as_ref().map(integer_json), "genus2": genus2}),
                header: vec!["F", "nF", "genus2"],
                rows: vec![vec![
                    f.to_string(),
                    nf.map(|v| v.to_string()).unwrap_or_default(),
                    genus2.to_string(),
                ]],
            })
        }
        Command::Hurwitz {
            profiles,
            base_genus,
        } => {
            let h = frobenius_hurwitz(&parse_profile_list(profiles)?, *base_genus)?;
            ok(Output {
                json: json!({"H": h.to_string()}),
                header: vec!["H"],
                rows: vec![vec![h.to_string()]],
            })
        }
        Command::Paths { key, brute_cap } => {
            let key = key.key()?;
            let bands = BandSpec::from_lengths(&key.c, &key.d);
            let count = count_monotone_pairs_capped(&key.mu, &key.nu, &bands, *brute_cap)?;
            ok(Output {
                json: json!({"count": count}),
                header: vec!["count"],
                rows: vec![vec![count.to_string()]],
            })
        }
        Command::Expand {
            n_max,
            caps,
            mu,
            nu,
            c,
            d,
        } => {
            let caps = DegreeCaps::parse(*n_max, caps)?;
            let tables = tau_expand::<Rational>(&caps)?;
            if let (Some(mu), Some(nu)) = (mu, nu) {
                let (mu, nu): (Partition, Partition) = (mu.parse()?, nu.parse()?);
                let n = mu.weight();
                if n == 0 || n > *n_max as usize {
                    return Err(Error::UnderTruncation {
                        variable: "q".into(),
                        exponent: n as u32,
                        cap: *n_max,
                    });
                }
                let v =
                    tables[n - 1].coefficient(&mu, &nu, &parse_lengths(c)?, &parse_lengths(d)?)?;
                return ok(Output {
                    json: json!({"value": v.to_string()}),
                    header: vec!["value"],
                    rows: vec![vec![v.to_string()]],
                });
            }
            let mut rows = Vec::new();
            for table in &tables {
                for ((mu, nu), series) in table.entries() {
                    for (exp, v) in series.terms() {
                        let exp: Vec<String> = exp.iter().map(u32::to_string).collect();
                        rows.push(vec![
                            table.n().to_string(),
                            mu.to_string(),
                            nu.to_string(),
                            exp.join(" "),
                            v.to_string(),
                        ]);
                    }
                }
            }
            ok(Output {
                json: Value::Array(tables.iter().map(|t| t.to_json()).collect()),
                header: vec!["n", "mu", "nu", "exp", "val"],
                rows,
            })
        }
        Command::Table { n } => {
            let table = character_table(*n)?;
            let mut rows = Vec::new();
            for (lambda, row) in table.partitions().iter().zip(table.entries()) {
                for (mu, chi) in table.partitions().iter().zip(row) {
                    rows.push(vec![lambda.to_string(), mu.to_string(), chi.to_string()]);
                }
            }
            ok(Output {
                json: serde_json::from_str(&table.to_json()).expect("table JSON is valid"),
                header: vec!["lambda", "mu", "chi"],
                rows,
            })
        }
        Command::Selftest { scope } => {
            let scope = match scope {
                ScopeArg::Quick => Scope::Quick,
                ScopeArg::Full => Scope::Full,
            };
            let report = selftest::run(scope)?;
            let rows = report
                .suites
                .iter()
                .map(|s| {
                    vec![
                        s.name.clone(),
                        s.instances.to_string(),
                        s.failure_count.to_string(),
                        if s.passed() { "pass" } else { "fail" }.into(),
                        s.failures.join(" | "),
                    ]
                })
                .collect();
            let passed = report.passed();
            Ok((
                Output {
                    json: json!({"passed": passed, "suites": report.suites}),
                    header: vec![
                        "suite",
                        "instances",
                        "failures",
                        "status",
                        "counterexamples",
                    ],
                    rows,
                },
                passed,
            ))
        }
    }
}

fn emit(out: &Output, format: Format) -> std::io::Result<()> {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match format {
        Format::Json => writeln!(lock, "{}", out.json),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(lock);
            w.write_record(&out.header)?;
            for row in &out.rows {
                w.write_record(row)?;
            }
            w.flush()
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let cache_dir = cli.cache_dir.clone().or_else(default_cache_dir);
    log::debug!("character cache: {cache_dir:?}");
    if CharacterEngine::install_global(CharacterEngine::new(DEFAULT_TABLE_CAP, cache_dir)).is_err()
    {
        log::warn!("character engine already initialised");
    }
    match run(&cli) {
        Ok((out, passed)) => {
            if let Err(e) = emit(&out, cli.format) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(1);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_refusal() { 1 } else { 2 })
        }
    }
}
