//! `blockcheck`: character tables, blocks and checks from the command line.
//!
//! Standard output carries JSON only; progress goes to standard error.
//! Exit status: 0 when everything passes or matches the expectations, 1 on a
//! failing check or a deviation, 2 on usage, parse and other errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use blockcheck::blocks::block_partition;
use blockcheck::chartab::{character_table, verify_orthogonality, CharacterTable};
use blockcheck::checks::{
    check_brauer_nesbitt, check_condition_star, check_dagger, check_dagger_star, check_wilde, Check,
    CheckReport, Status,
};
use blockcheck::io::{load_group, report_to_json, table_to_json, LoadedGroup};
use blockcheck::survey::{run_survey, PrimeSelection, SurveyConfig, SURVEY_CHECKS};
use blockcheck::sym::spin::{spin_degrees_an, spin_degrees_sn, verify_spin_vanishing};
use blockcheck::sym::{mn_table, sn_blocks, sn_defect_exponent, verify_a10_phenomenon, verify_sn_dagger};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const DEFAULT_CORPUS: &str = "corpus/groups";

#[derive(Parser)]
#[command(name = "blockcheck", version, about = "Character tables, p-blocks and defect-group exponent checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute, verify and print (or save) a character table.
    Table {
        group: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print the p-blocks with defects, geoff-sets and exponents.
    Blocks {
        group: PathBuf,
        /// A prime, a comma-separated list, or "all".
        #[arg(short, long, default_value = "all")]
        prime: PrimeSelection,
    },
    /// Run one check. `a10` takes no group file.
    Check {
        check: Check,
        group: Option<PathBuf>,
        #[arg(short, long, default_value = "all")]
        prime: PrimeSelection,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run the checks over a corpus and compare with an expectations file.
    Survey {
        #[arg(long, env = "BLOCKCHECK_CORPUS", default_value = DEFAULT_CORPUS)]
        corpus: PathBuf,
        /// Defaults to `expectations.json` next to the corpus directory, if present.
        #[arg(long)]
        expectations: Option<PathBuf>,
        #[arg(short, long, default_value = "all")]
        prime: PrimeSelection,
        /// Comma-separated subset of the survey checks.
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<Check>>,
        #[arg(short, long)]
        jobs: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Suppress per-group progress lines.
        #[arg(short, long)]
        quiet: bool,
    },
    /// Combinatorial commands for S_n and its double cover; no group is built.
    Sym {
        n: usize,
        p: u64,
        action: SymAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SymAction {
    Blocks,
    DaggerVerify,
    MnTable,
    SpinDegrees,
}

/// Outcome of a command: whether it passed, and what to print.
struct Outcome {
    ok: bool,
    stdout: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(o) => {
            print!("{}", o.stdout);
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> anyhow::Result<Outcome> {
    match cmd {
        Command::Table { group, out } => cmd_table(&group, out.as_deref()),
        Command::Blocks { group, prime } => cmd_blocks(&group, &prime),
        Command::Check { check, group, prime, out } => cmd_check(check, group.as_deref(), &prime, out.as_deref()),
        Command::Survey { corpus, expectations, prime, checks, jobs, out, quiet } => {
            let expectations = expectations.or_else(|| {
                let default = corpus.parent()?.join("expectations.json");
                default.exists().then_some(default)
            });
            let config = SurveyConfig {
                corpus,
                primes: prime,
                checks: checks.unwrap_or_else(|| SURVEY_CHECKS.to_vec()),
                jobs,
                out,
                expectations,
            };
            cmd_survey(&config, quiet)
        }
        Command::Sym { n, p, action } => cmd_sym(n, p, action),
    }
}

fn load(path: &Path) -> anyhow::Result<(LoadedGroup, CharacterTable)> {
    let loaded = load_group(path).with_context(|| format!("loading {}", path.display()))?;
    eprintln!("{}: order {}, computing table", loaded.name(), loaded.group.order());
    let t = character_table(&loaded.group).with_context(|| format!("table of {}", loaded.name()))?;
    Ok((loaded, t))
}

fn cmd_table(path: &Path, out: Option<&Path>) -> anyhow::Result<Outcome> {
    let (loaded, t) = load(path)?;
    let report = verify_orthogonality(&t);
    if !report.passed() {
        bail!("orthogonality failed: {:?}", report.failures());
    }
    let text = table_to_json(loaded.name(), &t);
    let stdout = match out {
        Some(p) => {
            std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
            format!("{}\n", json!({ "group": loaded.name(), "table": p.display().to_string() }))
        }
        None => text,
    };
    Ok(Outcome { ok: true, stdout })
}

fn cmd_blocks(path: &Path, primes: &PrimeSelection) -> anyhow::Result<Outcome> {
    let (loaded, t) = load(path)?;
    let degrees = t.degrees();
    let out: Vec<Value> = primes
        .for_order(t.order())
        .into_iter()
        .map(|p| {
            let d = block_partition(&t, p);
            let blocks: Vec<Value> = d
                .blocks
                .iter()
                .map(|b| {
                    json!({
                        "characters": b.characters,
                        "degrees": b.characters.iter().map(|&c| degrees[c].to_string()).collect::<Vec<_>>(),
                        "defect": b.defect,
                        "geoff_set": b.geoff_set,
                        "exponent": b.exponent.to_string(),
                    })
                })
                .collect();
            json!({ "prime": p, "blocks": blocks })
        })
        .collect();
    let doc = json!({ "group": loaded.name(), "order": t.order().to_string(), "decompositions": out });
    Ok(Outcome { ok: true, stdout: pretty(&doc) })
}

fn cmd_check(
    check: Check,
    path: Option<&Path>,
    primes: &PrimeSelection,
    out: Option<&Path>,
) -> anyhow::Result<Outcome> {
    let reports: Vec<CheckReport> = match (check, path) {
        (Check::A10, _) => vec![verify_a10_phenomenon()],
        (Check::SymDagger, _) => bail!("sym-dagger runs through `blockcheck sym N P dagger-verify`"),
        (_, None) => bail!("{check} needs a group file"),
        (_, Some(path)) => {
            let (loaded, t) = load(path)?;
            let name = loaded.name();
            let g = &loaded.group;
            match check {
                Check::Wilde => vec![check_wilde(name, &t)],
                Check::ConditionStar => vec![check_condition_star(name, g, &t)],
                Check::SpinVanishing => {
                    let ct = loaded.projected_cycle_types()?;
                    vec![verify_spin_vanishing(name, &t, &ct)?]
                }
                Check::Dagger => primes.for_order(g.order()).into_iter().map(|p| check_dagger(name, &t, p)).collect(),
                Check::DaggerStar => primes
                    .for_order(g.order())
                    .into_iter()
                    .map(|p| check_dagger_star(name, &t, p, Some(g)))
                    .collect(),
                Check::BrauerNesbitt => primes
                    .for_order(g.order())
                    .into_iter()
                    .map(|p| check_brauer_nesbitt(name, &t, p))
                    .collect(),
                Check::A10 | Check::SymDagger => unreachable!(),
            }
        }
    };
    emit(&reports, out)
}

fn emit(reports: &[CheckReport], out: Option<&Path>) -> anyhow::Result<Outcome> {
    for r in reports {
        eprintln!("{}", r.summary());
    }
    let ok = reports.iter().all(|r| r.status != Status::Fail);
    let text = report_to_json(reports);
    let stdout = match out {
        Some(p) => {
            std::fs::write(p, &text).with_context(|| format!("writing {}", p.display()))?;
            String::new()
        }
        None => text,
    };
    Ok(Outcome { ok, stdout })
}

fn cmd_survey(config: &SurveyConfig, quiet: bool) -> anyhow::Result<Outcome> {
    let progress = |line: &str| {
        if !quiet {
            eprintln!("{line}");
        }
    };
    let outcome = run_survey(config, &progress)?;
    for d in &outcome.deviations {
        eprintln!("deviation: {d}");
    }
    let failing = outcome.reports.iter().filter(|r| r.status == Status::Fail).count();
    eprintln!(
        "{} reports, {failing} failing, {} deviations",
        outcome.reports.len(),
        outcome.deviations.len()
    );
    // Without expectations a failing check is itself a deviation.
    let ok = if config.expectations.is_some() { outcome.ok() } else { failing == 0 };
    let stdout = if config.out.is_some() { String::new() } else { report_to_json(&outcome.reports) };
    Ok(Outcome { ok, stdout })
}

fn cmd_sym(n: usize, p: u64, action: SymAction) -> anyhow::Result<Outcome> {
    if !blockcheck::arith::is_prime(p) {
        bail!("{p} is not prime");
    }
    match action {
        SymAction::Blocks => {
            let blocks: Vec<Value> = sn_blocks(n, p as usize)
                .into_iter()
                .map(|b| {
                    let exponent = sn_defect_exponent(b.weight, p).ok().map(|e| e.to_string());
                    json!({
                        "core": b.core.to_string(),
                        "weight": b.weight,
                        "exponent": exponent,
                        "members": b.members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({ "group": format!("S{n}"), "prime": p, "blocks": blocks });
            Ok(Outcome { ok: true, stdout: pretty(&doc) })
        }
        SymAction::DaggerVerify => emit(&[verify_sn_dagger(n, p)], None),
        SymAction::MnTable => {
            let t = mn_table(n)?;
            let doc = json!({
                "group": format!("S{n}"),
                "classes": t.partitions.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "characters": t.partitions.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "values": t.values.iter().map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            Ok(Outcome { ok: true, stdout: pretty(&doc) })
        }
        SymAction::SpinDegrees => {
            let fmt = |v: Vec<(u64, usize)>| -> Vec<Value> {
                v.into_iter().map(|(d, m)| json!({ "degree": d.to_string(), "multiplicity": m })).collect()
            };
            let doc = json!({
                "n": n,
                "double_cover_symmetric": fmt(spin_degrees_sn(n)?),
                "double_cover_alternating": fmt(spin_degrees_an(n)?),
            });
            Ok(Outcome { ok: true, stdout: pretty(&doc) })
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialise");
    s.push('\n');
    s
}
