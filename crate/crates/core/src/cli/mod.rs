//! Command-line front end. The `gradedepth` binary only forwards to [`run`].

mod report;

use std::ffi::OsString;
use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::{ClassifySection, InvariantsSection, Report, Timings, VerifyRow, WitnessSection};

use crate::analysis::{analyze, chain_at, Analysis};
use crate::config::{guarded, Config, DEFAULT_CAP, DEFAULT_MAX_CAP, DEFAULT_SEED, DEFAULT_TRIALS, SEED_ENV};
use crate::corpus::{self, Expectation};
use crate::error::{Error, Result};
use crate::hilbert::h_polynomial;
use crate::instance::InstanceFile;
use crate::module::{Presentation, TruncModule};
use crate::rr_depth::{chain_hilbert, delta_vv, depth_from_chain, rr_filtration};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_COMPUTATION: i32 = 4;
pub const EXIT_MISMATCH: i32 = 5;

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } | Error::UnknownIdentifier { .. } => EXIT_PARSE,
        Error::Validation(_)
        | Error::DimensionMismatch { .. }
        | Error::SpecMismatch(_)
        | Error::Precondition(_)
        | Error::Io(_) => EXIT_VALIDATION,
        Error::CapTooSmall(_) | Error::SearchExhausted { .. } | Error::Assertion(_) => EXIT_COMPUTATION,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "gradedepth", version, about = "Hilbert series and depth of G(M) for MCM modules over hypersurfaces")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Instance JSON file, or the name of a bundled instance.
    pub instance: String,
    #[command(flatten)]
    pub opts: Opts,
}

#[derive(Debug, Args, Clone, Default)]
pub struct Opts {
    /// Initial truncation: work in M / m^cap M.
    #[arg(long)]
    pub cap: Option<u32>,
    /// Highest cap the guarded protocol may reach.
    #[arg(long)]
    pub max_cap: Option<u32>,
    /// Seed for superficial element search (default: $GRADEDEPTH_SEED, else 42).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Last degree used to read off h-polynomials (default cap - 1).
    #[arg(long)]
    pub window: Option<u32>,
    /// Coefficient field characteristic; overrides the instance file.
    #[arg(long)]
    pub p: Option<u32>,
    /// Random trials per superficial element.
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long, value_enum, default_value = "table")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Hilbert–Samuel function and graded lengths.
    Hilbert(Common),
    /// h-polynomial and Hilbert coefficients.
    Hpoly(Common),
    /// μ, i(M), order of det φ, e(M) and free rank.
    Invariants(Common),
    /// Superficial sequence with b-vectors.
    Superficial(Common),
    /// Ratliff–Rush filtration of M.
    Rr(Common),
    /// Depth of the associated graded module.
    Depth(Common),
    /// Valabrega–Valla sum δ.
    Delta(Common),
    /// Artinian a-tuple and classification-table case.
    Classify(Common),
    /// Check bundled instances (or the given ones) against expected values.
    Verify {
        /// Instance files or bundled names; all bundled instances if empty.
        instances: Vec<String>,
        #[command(flatten)]
        opts: Opts,
    },
}

struct Loaded {
    name: String,
    pres: Presentation,
    expect: Option<Expectation>,
    file_cap: Option<u32>,
    file_seed: Option<u64>,
}

fn load(spec: &str, p: Option<u32>) -> Result<Loaded> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{spec}: {e}")))?;
        let inst = InstanceFile::from_json(&text)?;
        return Ok(Loaded {
            name: inst.label.clone(),
            pres: inst.to_presentation(p)?,
            expect: None,
            file_cap: inst.cap,
            file_seed: inst.seed,
        });
    }
    match corpus::entry(spec) {
        Ok(e) => {
            let inst = e.instance();
            Ok(Loaded {
                name: e.name.into(),
                pres: inst.to_presentation(p)?,
                expect: Some(e.expect),
                file_cap: inst.cap,
                file_seed: inst.seed,
            })
        }
        Err(_) => Err(Error::Io(format!("`{spec}` is neither a readable file nor a bundled instance"))),
    }
}

/// Flags beat the environment, which beats the instance file.
fn config_for(opts: &Opts, loaded: &Loaded) -> Result<Config> {
    let env_seed = match std::env::var(SEED_ENV) {
        Ok(s) => Some(
            s.trim()
                .parse()
                .map_err(|_| Error::validation(format!("{SEED_ENV}=`{s}` is not an unsigned integer")))?,
        ),
        Err(_) => None,
    };
    let cap = opts.cap.or(loaded.file_cap).unwrap_or(DEFAULT_CAP);
    let config = Config {
        p: loaded.pres.spec().field().p(),
        cap,
        max_cap: opts.max_cap.unwrap_or(DEFAULT_MAX_CAP.max(cap + 1)),
        seed: opts.seed.or(env_seed).or(loaded.file_seed).unwrap_or(DEFAULT_SEED),
        window: opts.window,
        max_trials: opts.trials.unwrap_or(DEFAULT_TRIALS),
    };
    config.validate()?;
    Ok(config)
}

fn micros(t: Instant) -> u64 {
    t.elapsed().as_micros() as u64
}

/// Parse `args` (including the program name), run, print and return the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let format = match &cli.command {
        Command::Verify { opts, .. } => opts.format,
        Command::Hilbert(c)
        | Command::Hpoly(c)
        | Command::Invariants(c)
        | Command::Superficial(c)
        | Command::Rr(c)
        | Command::Depth(c)
        | Command::Delta(c)
        | Command::Classify(c) => c.opts.format,
    };
    match execute(&cli.command) {
        Ok(report) => {
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Table => print!("{}", report.to_table()),
            }
            let failed = report.verify.as_ref().is_some_and(|rows| rows.iter().any(|r| !r.ok));
            if failed {
                EXIT_MISMATCH
            } else {
                EXIT_OK
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Run a parsed command and build its report.
pub fn execute(command: &Command) -> Result<Report> {
    let start = Instant::now();
    let mut report = match command {
        Command::Verify { instances, opts } => verify(instances, opts)?,
        Command::Hilbert(c) | Command::Hpoly(c) => single(command, c, |pres, config| {
            let g = guarded(
                config,
                |cap| h_polynomial(&TruncModule::build(pres, cap)?, config.window_at(cap)),
                |h| (h.r, h.h_coeffs.clone()),
            )?;
            let mut hd = g.value.clone();
            if matches!(command, Command::Hpoly(_)) {
                hd.hilbert_samuel.clear();
                hd.graded_lengths.clear();
            }
            Ok((g.cap, g.escalations, |r: &mut Report| r.hilbert = Some(hd)))
        })?,
        Command::Invariants(c) => single(command, c, |pres, config| {
            let inv = pres.invariants()?;
            let free_rank = crate::classify::split_free_summand(pres)?.free_rank;
            let g = guarded(
                config,
                |cap| h_polynomial(&TruncModule::build(pres, cap)?, config.window_at(cap)),
                |h| h.e.clone(),
            )?;
            let e = g.value.multiplicity();
            let section = InvariantsSection {
                presentation: inv,
                multiplicity: e,
                e_bound_ok: e >= inv.e_bound as i64,
                free_rank,
            };
            Ok((g.cap, g.escalations, |r: &mut Report| r.invariants = Some(section)))
        })?,
        Command::Superficial(c) => single(command, c, |pres, config| {
            let g = guarded(
                config,
                |cap| {
                    let chain = chain_at(pres, cap, config.seed, config.max_trials)?;
                    Ok(chain
                        .witnesses
                        .iter()
                        .map(|w| WitnessSection {
                            form: w.lifted.to_string(),
                            trials: w.trials_used,
                            b_vector: w.b_vector.clone(),
                        })
                        .collect::<Vec<_>>())
                },
                |ws| {
                    ws.iter()
                        .map(|w| (w.form.clone(), crate::hilbert::zpoly::trim(w.b_vector.iter().map(|&b| b as i64).collect())))
                        .collect::<Vec<_>>()
                },
            )?;
            let ws = g.value;
            Ok((g.cap, g.escalations, |r: &mut Report| r.superficial = Some(ws)))
        })?,
        Command::Rr(c) => single(command, c, |pres, config| {
            let g = guarded(
                config,
                |cap| rr_filtration(&TruncModule::build(pres, cap)?, config.window_at(cap)),
                |rr| (rr.r_coeffs.clone(), rr.h_tilde.clone()),
            )?;
            let rr = g.value;
            Ok((g.cap, g.escalations, |r: &mut Report| r.ratliff_rush = Some(rr)))
        })?,
        Command::Depth(c) => single(command, c, |pres, config| {
            let g = guarded(
                config,
                |cap| {
                    let chain = chain_at(pres, cap, config.seed, config.max_trials)?;
                    depth_from_chain(&chain, &chain_hilbert(&chain, config.window_at(cap))?)
                },
                |d| (d.depth, d.h_chain.clone()),
            )?;
            let d = g.value;
            Ok((g.cap, g.escalations, |r: &mut Report| r.depth = Some(d)))
        })?,
        Command::Delta(c) => single(command, c, |pres, config| {
            let g = guarded(
                config,
                |cap| {
                    let chain = chain_at(pres, cap, config.seed, config.max_trials)?;
                    if chain.witnesses.is_empty() {
                        return Err(Error::Precondition("δ needs dim A >= 1".into()));
                    }
                    delta_vv(&chain.stages[0].module, &chain.forms_over_stage(0)?)
                },
                |d| (d.delta, d.per_n.clone()),
            )?;
            let d = g.value;
            Ok((g.cap, g.escalations, |r: &mut Report| r.delta = Some(d)))
        })?,
        Command::Classify(c) => single(command, c, |pres, config| {
            let g = analyze(pres, config)?;
            let a = g.value;
            let section = ClassifySection {
                a_tuple: a.a_tuple,
                free_rank: a.free_rank,
                record: a.classification,
            };
            Ok((g.cap, g.escalations, |r: &mut Report| r.classification = Some(section)))
        })?,
    };
    report.timings.total_us = micros(start);
    Ok(report)
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Hilbert(_) => "hilbert",
        Command::Hpoly(_) => "hpoly",
        Command::Invariants(_) => "invariants",
        Command::Superficial(_) => "superficial",
        Command::Rr(_) => "rr",
        Command::Depth(_) => "depth",
        Command::Delta(_) => "delta",
        Command::Classify(_) => "classify",
        Command::Verify { .. } => "verify",
    }
}

fn single<F, S>(command: &Command, common: &Common, body: F) -> Result<Report>
where
    F: FnOnce(&Presentation, &Config) -> Result<(u32, u32, S)>,
    S: FnOnce(&mut Report),
{
    let loaded = load(&common.instance, common.opts.p)?;
    let config = config_for(&common.opts, &loaded)?;
    let mut report = Report::new(command_name(command), &loaded.name, config.p, config.seed);
    let start = Instant::now();
    let (cap, escalations, fill) = body(&loaded.pres, &config)?;
    report.timings.compute_us = micros(start);
    report.cap_used = cap;
    report.escalations = escalations;
    fill(&mut report);
    Ok(report)
}

/// Differences between an analysis and the expected values.
pub fn mismatches(a: &Analysis, expect: &Expectation) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |what: &str, want: String, got: String| {
        if want != got {
            out.push(format!("{what}: expected {want}, got {got}"));
        }
    };
    if let Some(d) = expect.depth {
        check("depth", d.to_string(), a.depth.depth.to_string());
    }
    if let Some(h) = expect.h {
        check("h", format!("{h:?}"), format!("{:?}", a.hilbert.h_coeffs));
    }
    if let Some(e) = expect.e {
        check("e", format!("{e:?}"), format!("{:?}", a.hilbert.e));
    }
    if let Some(c) = expect.case_id {
        let got = a.classification.as_ref().map_or("none".to_string(), |r| r.case_id.clone());
        check("case", c.to_string(), got);
        if let Some(r) = &a.classification {
            check("table consistency", "true".into(), r.theorem_ok.to_string());
        }
    }
    if let Some(t) = expect.a_tuple {
        check("a-tuple", format!("{t:?}"), format!("{:?}", a.a_tuple));
    }
    if let Some(s) = expect.free_rank {
        check("free rank", s.to_string(), a.free_rank.to_string());
    }
    out
}

fn verify(instances: &[String], opts: &Opts) -> Result<Report> {
    let names: Vec<String> = if instances.is_empty() {
        corpus::corpus().iter().map(|e| e.name.to_string()).collect()
    } else {
        instances.to_vec()
    };
    let mut rows = Vec::with_capacity(names.len());
    let mut first_config = None;
    let start = Instant::now();
    for name in &names {
        let loaded = load(name, opts.p)?;
        let config = config_for(opts, &loaded)?;
        first_config.get_or_insert(config);
        let t = Instant::now();
        let row = match analyze(&loaded.pres, &config) {
            Ok(g) => {
                let miss = loaded.expect.map(|e| mismatches(&g.value, &e)).unwrap_or_default();
                VerifyRow {
                    instance: loaded.name.clone(),
                    ok: miss.is_empty(),
                    cap_used: Some(g.cap),
                    depth: Some(g.value.depth.depth),
                    h: g.value.hilbert.h_coeffs.clone(),
                    case_id: g.value.classification.map(|c| c.case_id),
                    mismatches: miss,
                    elapsed_us: micros(t),
                }
            }
            Err(e) => VerifyRow {
                instance: loaded.name.clone(),
                ok: false,
                cap_used: None,
                depth: None,
                h: Vec::new(),
                case_id: None,
                mismatches: vec![format!("error: {e}")],
                elapsed_us: micros(t),
            },
        };
        rows.push(row);
    }
    let config = first_config.unwrap_or_default();
    let label = if instances.is_empty() { "corpus".to_string() } else { names.join(",") };
    let mut report = Report::new("verify", &label, config.p, config.seed);
    report.cap_used = rows.iter().filter_map(|r| r.cap_used).max().unwrap_or(config.cap);
    report.escalations = report.cap_used.saturating_sub(config.cap);
    report.timings.compute_us = micros(start);
    report.verify = Some(rows);
    Ok(report)
}
