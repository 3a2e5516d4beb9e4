//! The `sitelink` command line.
//!
//! Exit status: 0 on success, 1 for unreadable or malformed input, 2 for
//! configuration errors (bad flags, out-of-range parameters, an exceeded
//! enumeration budget).

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use sitelink_core::{
    link_counts, purge, rank_links, ranked_links, vi_distance, Link, LinkPolicy, LinkSet, Method,
    StopRule, System, DEFAULT_ENUMERATION_BUDGET,
};

use crate::config::RunConfig;
use crate::emit;
use crate::error::{Error, Result};
use crate::generate::{generate, SyntheticSpec};
use crate::parallel::par_site_spectrum;
use crate::parse::{declared_alphabet, parse_input, Format};
use crate::selfcheck;

#[derive(Debug, Parser)]
#[command(
    name = "sitelink",
    version,
    about = "Site-linkage spectra of aligned symbol data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Variation-of-information distance of links.
    Distance {
        #[command(flatten)]
        input: InputArgs,
        /// First column (1-based); use with --j.
        #[arg(long, requires = "j")]
        i: Option<usize>,
        /// Second column (1-based).
        #[arg(long, requires = "i")]
        j: Option<usize>,
        /// Link selection: all, lowest-frac=F, file=PATH or i:j,i:j,...
        #[arg(long, default_value = "all", conflicts_with = "i")]
        links: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Potential of one link.
    Potential {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        method: MethodArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Potentials of a link set as CSV.
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "all")]
        links: String,
        #[command(flatten)]
        method: MethodArgs,
        /// Worker threads; results do not depend on this.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The lowest-distance links, in rank order.
    RankLinks {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        fraction: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy removal of the rows that most reduce the average link distance.
    Purge {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "lowest-frac=0.005")]
        links: String,
        /// Stop once the average distance is at or below this value.
        #[arg(long)]
        threshold: Option<f64>,
        #[arg(long)]
        max_removals: Option<usize>,
        /// Re-rank the lowest-frac links on the surviving rows before each step.
        #[arg(long)]
        refresh: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a synthetic alignment.
    Generate {
        /// JSON synthetic spec.
        #[arg(long, conflicts_with = "preset", required_unless_present = "preset")]
        spec: Option<PathBuf>,
        #[arg(long, value_enum)]
        preset: Option<Preset>,
        /// Seed for --preset.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "fasta")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the built-in worked examples.
    Selfcheck,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Preset {
    /// 85 + 15 rows, 99 columns, two planted pairing patterns.
    TwoBlockAnomaly,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Alignment file, or - for stdin.
    #[arg(long)]
    input: PathBuf,
    /// Defaults to fasta when the first line is a '>' header.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Declared alphabet, e.g. ACGU; inferred from the data when absent.
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodName {
    Closed,
    Exact,
    Mc,
}

#[derive(Debug, Args)]
struct MethodArgs {
    /// Rows removed.
    #[arg(long, default_value_t = 1)]
    s: usize,
    #[arg(long, value_enum, default_value = "closed")]
    method: MethodName,
    #[arg(long, default_value_t = 10_000)]
    samples: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest number of subsets exact enumeration may visit.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    budget: u128,
}

impl MethodArgs {
    fn method(&self) -> Method {
        match self.method {
            MethodName::Closed => Method::ClosedForm,
            MethodName::Exact => Method::Exact {
                budget: self.budget,
            },
            MethodName::Mc => Method::MonteCarlo {
                samples: self.samples,
                seed: self.seed,
            },
        }
    }

    fn record(&self, config: &mut RunConfig) {
        let m = self.method();
        config.s = Some(self.s);
        config.method = Some(m.name().to_string());
        match m {
            Method::Exact { budget } => config.budget = Some(budget),
            Method::MonteCarlo { samples, seed } => {
                config.samples = Some(samples);
                config.seed = Some(seed);
            }
            Method::ClosedForm => {}
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>> {
    if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::Read::read_to_end(&mut std::io::stdin(), &mut buf).map_err(|source| {
            Error::Io {
                path: "<stdin>".into(),
                source,
            }
        })?;
        return Ok(buf);
    }
    std::fs::read(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

impl InputArgs {
    fn load(&self, command: &str) -> Result<(System, RunConfig)> {
        let bytes = read(&self.input)?;
        let format = self.format.unwrap_or_else(|| Format::sniff(&bytes));
        let declared = self
            .alphabet
            .as_deref()
            .map(declared_alphabet)
            .transpose()?;
        let sys = parse_input(&bytes, format, declared.as_ref())?;
        let mut config = RunConfig::new(command);
        config.input = Some(self.input.display().to_string());
        config.format = Some(format!("{format:?}").to_lowercase());
        config.alphabet_source = Some(
            if declared.is_some() {
                "declared"
            } else {
                "inferred"
            }
            .into(),
        );
        config.alphabet = Some(String::from_utf8_lossy(sys.alphabet().symbols()).into_owned());
        config.case = Some("upper".into());
        config.rows = Some(sys.k());
        config.columns = Some(sys.n());
        Ok((sys, config))
    }
}

fn column(one_based: usize, n: usize) -> Result<usize> {
    if one_based == 0 || one_based > n {
        return Err(Error::Config(format!("column {one_based} outside 1..={n}")));
    }
    Ok(one_based - 1)
}

fn parse_pair(text: &str, n: usize) -> Option<Result<Link>> {
    let (a, b) = text.split_once([':', ','])?;
    let i = a.trim().parse::<usize>().ok()?;
    let j = b.trim().parse::<usize>().ok()?;
    Some(column(i, n).and_then(|i| Ok(Link::new(i, column(j, n)?))))
}

/// How the `--links` flag selects links.
#[derive(Debug, Clone, PartialEq)]
enum LinkSelection {
    All,
    LowestFraction(f64),
    Explicit(LinkSet),
}

fn link_selection(spec: &str, sys: &System) -> Result<LinkSelection> {
    let bad = || Error::InvalidLinks(spec.to_string());
    let n = sys.n();
    if spec == "all" {
        return Ok(LinkSelection::All);
    }
    if let Some(f) = spec.strip_prefix("lowest-frac=") {
        return Ok(LinkSelection::LowestFraction(f.parse().map_err(|_| bad())?));
    }
    let pairs: Vec<Result<Link>> = if let Some(path) = spec.strip_prefix("file=") {
        let text = String::from_utf8(read(Path::new(path))?).map_err(|_| bad())?;
        text.lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#') && *l != "i,j")
            .map(|l| parse_pair(l, n).ok_or_else(bad)?)
            .collect()
    } else {
        spec.split(',')
            .map(|p| parse_pair(p, n).ok_or_else(bad)?)
            .collect()
    };
    let links = pairs.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(LinkSelection::Explicit(LinkSet::new(links)?))
}

fn resolve_links(selection: &LinkSelection, sys: &System) -> Result<LinkSet> {
    Ok(match selection {
        LinkSelection::All => LinkSet::all(sys.n()),
        LinkSelection::LowestFraction(f) => rank_links(sys, *f)?,
        LinkSelection::Explicit(set) => set.clone(),
    })
}

fn write_output(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|source| Error::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}

fn execute(command: Command, stdout: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Distance {
            input,
            i,
            j,
            links,
            out,
        } => {
            let (sys, mut config) = input.load("distance")?;
            let set = match (i, j) {
                (Some(i), Some(j)) => {
                    config.links = Some(format!("{i}:{j}"));
                    LinkSet::new(vec![Link::new(column(i, sys.n())?, column(j, sys.n())?)])?
                }
                _ => {
                    config.links = Some(links.clone());
                    resolve_links(&link_selection(&links, &sys)?, &sys)?
                }
            };
            let rows = set
                .iter()
                .map(|l| Ok((*l, vi_distance(&link_counts(&sys, l.i, l.j)?))))
                .collect::<Result<Vec<_>>>()?;
            write_output(
                &out,
                &emit::distances_csv(&rows, false, Some(&config))?,
                stdout,
            )?;
        }
        Command::Potential {
            input,
            i,
            j,
            method,
            out,
        } => {
            let (sys, mut config) = input.load("potential")?;
            config.links = Some(format!("{i}:{j}"));
            method.record(&mut config);
            let set = LinkSet::new(vec![Link::new(column(i, sys.n())?, column(j, sys.n())?)])?;
            let entries = par_site_spectrum(&sys, &set, method.s, &method.method(), 1)?;
            write_output(&out, &emit::spectrum_csv(&entries, Some(&config))?, stdout)?;
        }
        Command::Spectrum {
            input,
            links,
            method,
            workers,
            out,
        } => {
            let (sys, mut config) = input.load("spectrum")?;
            config.links = Some(links.clone());
            method.record(&mut config);
            let set = resolve_links(&link_selection(&links, &sys)?, &sys)?;
            let entries = par_site_spectrum(&sys, &set, method.s, &method.method(), workers)?;
            write_output(&out, &emit::spectrum_csv(&entries, Some(&config))?, stdout)?;
        }
        Command::RankLinks {
            input,
            fraction,
            out,
        } => {
            let (sys, mut config) = input.load("rank-links")?;
            config.links = Some(format!("lowest-frac={fraction}"));
            let chosen = rank_links(&sys, fraction)?;
            let rows: Vec<_> = ranked_links(&sys)?
                .into_iter()
                .filter(|(l, _)| chosen.links().contains(l))
                .collect();
            write_output(
                &out,
                &emit::distances_csv(&rows, true, Some(&config))?,
                stdout,
            )?;
        }
        Command::Purge {
            input,
            links,
            threshold,
            max_removals,
            refresh,
            out,
        } => {
            let (sys, mut config) = input.load("purge")?;
            config.links = Some(links.clone());
            config.threshold = threshold;
            config.max_removals = max_removals;
            config.refresh = Some(refresh);
            let selection = link_selection(&links, &sys)?;
            let policy = match (refresh, &selection) {
                (false, _) => LinkPolicy::Fixed(resolve_links(&selection, &sys)?),
                (true, LinkSelection::LowestFraction(f)) => LinkPolicy::Refresh { fraction: *f },
                (true, _) => {
                    return Err(Error::Config(
                        "--refresh needs --links lowest-frac=F".into(),
                    ))
                }
            };
            let trace = purge(
                &sys,
                &policy,
                &StopRule {
                    threshold,
                    max_removals,
                },
            )?;
            write_output(&out, &emit::trace_json(&trace, &config)?, stdout)?;
        }
        Command::Generate {
            spec,
            preset,
            seed,
            format,
            out,
        } => {
            let spec = match (spec, preset) {
                (Some(path), _) => serde_json::from_slice::<SyntheticSpec>(&read(&path)?)
                    .map_err(|e| Error::InvalidSpec(e.to_string()))?,
                (None, Some(Preset::TwoBlockAnomaly)) => SyntheticSpec::two_block_anomaly(seed),
                (None, None) => return Err(Error::Config("--spec or --preset is required".into())),
            };
            let sys = generate(&spec)?;
            let text = match format {
                Format::Fasta => emit::system_fasta(&sys),
                Format::Raw => emit::system_raw(&sys),
            };
            write_output(&out, &text, stdout)?;
        }
        Command::Selfcheck => {
            let mut failed = 0;
            for check in selfcheck::run_all() {
                let status = if check.passed { "PASS" } else { "FAIL" };
                failed += usize::from(!check.passed);
                writeln!(stdout, "{status} {}", check.name).map_err(|source| Error::Io {
                    path: "<stdout>".into(),
                    source,
                })?;
            }
            return Ok(i32::from(failed > 0));
        }
    }
    Ok(0)
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
