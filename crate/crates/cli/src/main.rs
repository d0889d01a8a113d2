use std::fs::File;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use complab::verify::{
    bijection_grid, census_check, cross_check_counts, oeis_compare, parse_bfile, CheckReport,
    MapId, OEIS_TARGETS,
};
use complab::{enumerate, Composition, EnumCap, FamilyId, GeneratorSpec};
use complab_cli::tables::{self, TableId};
use complab_cli::{mapping, render, CliError, OutputFormat, EXIT_CHECK_FAILED, EXIT_USAGE};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "complab",
    version,
    about = "Enumerate, count and verify integer compositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List a family in canonical order, then its size.
    Enumerate {
        /// all, arndt:K, oddres:2K, evenres:2K+1, ufixed or vfixed
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
        /// Largest n that may be enumerated (default: COMPLAB_ENUM_CAP or 24).
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Rebuild a table: 1 to 9, uex, vex, or all.
    Table {
        id: String,
        #[arg(long, default_value = "plain")]
        format: OutputFormat,
    },
    /// Apply a bijection to one input.
    Map {
        /// arndt2odd, u, v, restricted, ufix, vfix, vfixappend, oddstep or evenstep
        map: MapId,
        #[arg(long = "in")]
        input: String,
        #[arg(long)]
        inverse: bool,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Draw a composition as columns of unit cells.
    Render {
        composition: String,
        /// Draw the image under this map alongside.
        #[arg(long)]
        map: Option<MapId>,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
    },
    /// Run verification suites; exits 1 if any check fails.
    Check {
        suite: Suite,
        #[arg(long)]
        nmax: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        kmin: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        kmax: Option<i64>,
        /// Directory holding bNNNNNN.txt files.
        #[arg(long)]
        bfile_dir: Option<PathBuf>,
        /// Fewest b-file terms a comparison must cover.
        #[arg(long, default_value_t = 50)]
        min_terms: usize,
        #[arg(long)]
        cap: Option<u32>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Bijections,
    Counts,
    Oeis,
}

fn cap_from(flag: Option<u32>) -> EnumCap {
    flag.map(EnumCap).unwrap_or_else(EnumCap::from_env)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_CHECK_FAILED as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}

/// Returns whether every check passed; commands other than `check` always pass.
fn run(command: Command) -> Result<bool, CliError> {
    let mut out = io::stdout().lock();
    match command {
        Command::Enumerate {
            family,
            n,
            format,
            cap,
        } => {
            let family: FamilyId = family.parse()?;
            cap_from(cap).check(n)?;
            write!(out, "{}", enumerate_listing(family, n, format)?)?;
        }
        Command::Table { id, format } => {
            let ids: Vec<TableId> = if id == "all" {
                TableId::ALL.to_vec()
            } else {
                vec![id.parse()?]
            };
            for (i, id) in ids.into_iter().enumerate() {
                if i > 0 && format == OutputFormat::Plain {
                    writeln!(out)?;
                }
                write!(out, "{}", tables::build(id)?.render(format)?)?;
            }
        }
        Command::Map {
            map,
            input,
            inverse,
            k,
        } => {
            writeln!(out, "{}", mapping::apply(map, &input, inverse, k)?)?;
        }
        Command::Render {
            composition,
            map,
            k,
        } => {
            let c: Composition = composition.parse()?;
            let image = match map {
                Some(map) => {
                    let text = mapping::apply(map, &composition, false, k)?;
                    Some(text.parse::<Composition>().map_err(|_| {
                        CliError::Usage(format!("{map} output {text:?} cannot be drawn"))
                    })?)
                }
                None => None,
            };
            write!(out, "{}", render::render(&c, image.as_ref()))?;
        }
        Command::Check {
            suite,
            nmax,
            kmin,
            kmax,
            bfile_dir,
            min_terms,
            cap,
        } => {
            let cap = cap_from(cap);
            let mut passed = true;
            let mut report = |r: &CheckReport, out: &mut dyn Write| -> io::Result<()> {
                passed &= r.passed();
                writeln!(out, "{r}")
            };
            if matches!(suite, Suite::All | Suite::Bijections) {
                let n_max = nmax.unwrap_or(12);
                let ks = kmin.unwrap_or(-5)..=kmax.unwrap_or(-1);
                for r in bijection_grid(n_max, ks, cap)? {
                    report(&r, &mut out)?;
                }
                report(&census_check(n_max.max(1) as u32, cap)?, &mut out)?;
            }
            if matches!(suite, Suite::All | Suite::Counts) {
                let r = cross_check_counts(
                    nmax.unwrap_or(10),
                    kmin.unwrap_or(-3),
                    kmax.unwrap_or(3),
                    cap,
                )?;
                report(&r, &mut out)?;
            }
            match (suite, &bfile_dir) {
                (Suite::Oeis | Suite::All, Some(dir)) => {
                    for line in oeis_lines(dir, min_terms)? {
                        passed &= line.0;
                        writeln!(out, "{}", line.1)?;
                    }
                }
                (Suite::Oeis, None) => {
                    return Err(CliError::Usage("check oeis needs --bfile-dir".to_string()))
                }
                (Suite::All, None) => writeln!(out, "[SKIP] oeis (no --bfile-dir)")?,
                _ => {}
            }
            writeln!(
                out,
                "{}",
                if passed {
                    "all checks passed"
                } else {
                    "some checks failed"
                }
            )?;
            return Ok(passed);
        }
    }
    Ok(true)
}

#[derive(Serialize)]
struct Listing<'a> {
    family: String,
    n: u32,
    compositions: &'a [String],
    count: String,
}

fn enumerate_listing(family: FamilyId, n: u32, format: OutputFormat) -> Result<String, CliError> {
    let items: Vec<String> = enumerate(GeneratorSpec::new(family, n))
        .map(|c| c.to_string())
        .collect();
    let count = items.len().to_string();
    Ok(match format {
        OutputFormat::Plain => {
            let mut s: String = items.iter().map(|c| format!("{c}\n")).collect();
            s.push_str(&format!("count: {count}\n"));
            s
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["index", "composition"])?;
            for (i, c) in items.iter().enumerate() {
                w.write_record([(i + 1).to_string(), c.clone()])?;
            }
            let bytes = w.into_inner().map_err(|e| e.into_error())?;
            String::from_utf8(bytes).expect("csv output is utf-8")
        }
        OutputFormat::Json => {
            let listing = Listing {
                family: family.to_string(),
                n,
                compositions: &items,
                count,
            };
            serde_json::to_string_pretty(&listing)? + "\n"
        }
    })
}

/// One `(passed, line)` per OEIS target.
fn oeis_lines(dir: &Path, min_terms: usize) -> Result<Vec<(bool, String)>, CliError> {
    let mut lines = Vec::new();
    for (anum, family) in OEIS_TARGETS {
        let path = dir.join(format!("b{}.txt", &anum[1..]));
        let file = File::open(&path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        let bfile = parse_bfile(BufReader::new(file))?;
        let cmp = oeis_compare(family, &bfile, None)?;
        let enough = cmp.terms_compared >= min_terms;
        let mut line = format!("{anum}: {}", cmp.report);
        if !enough {
            line.push_str(&format!(" (fewer than {min_terms} terms)"));
        }
        lines.push((cmp.report.passed() && enough, line));
    }
    Ok(lines)
}
