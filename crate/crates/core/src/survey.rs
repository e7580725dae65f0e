//! Running the checks over a corpus of group files and comparing the
//! outcome with an expectations file.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::chartab::{character_table, verify_orthogonality, CharacterTable};
use crate::checks::{
    check_brauer_nesbitt, check_condition_star, check_dagger, check_dagger_star, check_wilde,
    primes_dividing, Check, CheckReport, Status,
};
use crate::error::{Error, Result};
use crate::io::{load_group, ExpectationsFile, LoadedGroup};
use crate::sym::alternating::verify_a10_phenomenon;
use crate::sym::spin::verify_spin_vanishing;

/// Name under which the combinatorial A_10 check is reported.
pub const A10_GROUP: &str = "A10";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PrimeSelection {
    /// Every prime dividing the order of each group.
    All,
    List(Vec<u64>),
}

impl PrimeSelection {
    pub fn for_order(&self, order: u64) -> Vec<u64> {
        match self {
            PrimeSelection::All => primes_dividing(order),
            PrimeSelection::List(ps) => ps.clone(),
        }
    }
}

impl std::str::FromStr for PrimeSelection {
    type Err = Error;

    /// `all` or a comma-separated list of primes.
    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(PrimeSelection::All);
        }
        let mut ps = Vec::new();
        for part in s.split(',') {
            let p: u64 = part
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("not a prime: {part:?}")))?;
            if !crate::arith::is_prime(p) {
                return Err(Error::InvalidArgument(format!("{p} is not prime")));
            }
            ps.push(p);
        }
        ps.sort_unstable();
        ps.dedup();
        Ok(PrimeSelection::List(ps))
    }
}

/// Checks a survey can run. `sym-dagger` is combinatorial and has its own
/// command.
pub const SURVEY_CHECKS: [Check; 7] = [
    Check::Wilde,
    Check::Dagger,
    Check::DaggerStar,
    Check::BrauerNesbitt,
    Check::ConditionStar,
    Check::A10,
    Check::SpinVanishing,
];

#[derive(Clone, Debug)]
pub struct SurveyConfig {
    /// Directory holding the group files (`*.json`).
    pub corpus: PathBuf,
    pub primes: PrimeSelection,
    pub checks: Vec<Check>,
    /// Worker threads; `None` lets rayon decide.
    pub jobs: Option<usize>,
    pub out: Option<PathBuf>,
    pub expectations: Option<PathBuf>,
}

impl SurveyConfig {
    pub fn new(corpus: impl Into<PathBuf>) -> Self {
        SurveyConfig {
            corpus: corpus.into(),
            primes: PrimeSelection::All,
            checks: SURVEY_CHECKS.to_vec(),
            jobs: None,
            out: None,
            expectations: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.checks.is_empty() {
            return Err(Error::InvalidArgument("no checks selected".into()));
        }
        if let Some(c) = self.checks.iter().find(|c| !SURVEY_CHECKS.contains(c)) {
            return Err(Error::InvalidArgument(format!("{c} is not a survey check")));
        }
        if let PrimeSelection::List(ps) = &self.primes {
            if ps.is_empty() || ps.iter().any(|&p| !crate::arith::is_prime(p)) {
                return Err(Error::InvalidArgument("primes must be a nonempty list of primes".into()));
            }
        }
        if self.jobs == Some(0) {
            return Err(Error::InvalidArgument("jobs must be positive".into()));
        }
        Ok(())
    }
}

/// Group files of a corpus directory, sorted by path.
pub fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

/// All reports for one group and its table.
pub fn survey_group(loaded: &LoadedGroup, t: &CharacterTable, config: &SurveyConfig) -> Vec<CheckReport> {
    let name = loaded.name();
    let g = &loaded.group;
    let wants = |c: Check| config.checks.contains(&c);
    let mut out = Vec::new();
    if wants(Check::Wilde) {
        out.push(check_wilde(name, t));
    }
    if wants(Check::ConditionStar) {
        out.push(check_condition_star(name, g, t));
    }
    if wants(Check::SpinVanishing) && loaded.file.projection.is_some() {
        out.push(match loaded.projected_cycle_types() {
            Ok(ct) => verify_spin_vanishing(name, t, &ct).unwrap_or_else(|e| {
                CheckReport::not_applicable(Check::SpinVanishing, name, None, e.to_string())
            }),
            Err(e) => CheckReport::not_applicable(Check::SpinVanishing, name, None, e.to_string()),
        });
    }
    for p in config.primes.for_order(g.order()) {
        if wants(Check::Dagger) {
            out.push(check_dagger(name, t, p));
        }
        if wants(Check::DaggerStar) {
            out.push(check_dagger_star(name, t, p, Some(g)));
        }
        if wants(Check::BrauerNesbitt) {
            out.push(check_brauer_nesbitt(name, t, p));
        }
    }
    out
}

/// A disagreement between a report and the expectations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deviation {
    pub group: String,
    pub check: Check,
    pub prime: Option<u64>,
    pub message: String,
}

impl std::fmt::Display for Deviation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let prime = self.prime.map(|p| format!(" p={p}")).unwrap_or_default();
        write!(f, "{} {}{}: {}", self.group, self.check, prime, self.message)
    }
}

#[derive(Clone, Debug, Default)]
pub struct SurveyOutcome {
    /// Sorted as in [`crate::io::sort_reports`].
    pub reports: Vec<CheckReport>,
    pub deviations: Vec<Deviation>,
}

impl SurveyOutcome {
    pub fn ok(&self) -> bool {
        self.deviations.is_empty()
    }
}

/// Compares reports with expectations. Every report needs an entry; an
/// expected failure with a witness needs a violation with that defect and
/// exponent; every group needs at least one entry; entries naming a group
/// outside the survey are an error.
pub fn diff(
    reports: &[CheckReport],
    groups: &[String],
    expectations: &ExpectationsFile,
    config: &SurveyConfig,
) -> Result<Vec<Deviation>> {
    for e in &expectations.entries {
        if e.group != A10_GROUP && !groups.contains(&e.group) {
            return Err(Error::Parse(format!("expectation for unknown group {}", e.group)));
        }
    }
    let mut out = Vec::new();
    let dev = |r: &CheckReport, message: String| Deviation {
        group: r.group.clone(),
        check: r.check,
        prime: r.prime,
        message,
    };
    for r in reports {
        let Some(e) = expectations.find(&r.group, r.check, r.prime) else {
            out.push(dev(r, format!("no expectation (got {})", r.status)));
            continue;
        };
        if e.status != r.status {
            out.push(dev(r, format!("expected {}, got {}", e.status, r.status)));
            continue;
        }
        if let (Status::Fail, Some(w)) = (r.status, &e.witness) {
            let seen = r
                .violations
                .iter()
                .any(|v| v.defect == Some(w.defect) && v.lhs == w.exponent);
            if !seen {
                out.push(dev(
                    r,
                    format!("no violation with defect {} against exponent {}", w.defect, w.exponent),
                ));
            }
        }
    }
    // Entries the survey should have produced but did not.
    for e in &expectations.entries {
        let selected = config.checks.contains(&e.check)
            && match (&config.primes, e.prime) {
                (PrimeSelection::List(ps), Some(p)) => ps.contains(&p),
                _ => true,
            };
        let produced = reports
            .iter()
            .any(|r| r.group == e.group && r.check == e.check && r.prime == e.prime);
        if selected && !produced {
            out.push(Deviation {
                group: e.group.clone(),
                check: e.check,
                prime: e.prime,
                message: "expected a report, none produced".into(),
            });
        }
    }
    for g in groups {
        if !expectations.entries.iter().any(|e| &e.group == g) {
            out.push(Deviation {
                group: g.clone(),
                check: config.checks[0],
                prime: None,
                message: "group missing from expectations".into(),
            });
        }
    }
    Ok(out)
}

/// Loads every group, computes its table, runs the selected checks and
/// diffs against the expectations when a path is configured. Progress
/// lines go to `progress`; the result does not depend on scheduling.
pub fn run_survey(config: &SurveyConfig, progress: &(dyn Fn(&str) + Sync)) -> Result<SurveyOutcome> {
    config.validate()?;
    let expectations = config.expectations.as_ref().map(ExpectationsFile::load).transpose()?;
    let files = corpus_files(&config.corpus)?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = config.jobs {
        builder = builder.num_threads(j);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let per_group: Vec<(String, Vec<CheckReport>)> = pool.install(|| {
        files
            .par_iter()
            .map(|path| -> Result<(String, Vec<CheckReport>)> {
                let loaded = load_group(path)
                    .map_err(|e| prefix_error(path, e))?;
                let t = character_table(&loaded.group).map_err(|e| prefix_error(path, e))?;
                let orth = verify_orthogonality(&t);
                if !orth.passed() {
                    let names: Vec<&str> = orth.failures().iter().map(|f| f.name).collect();
                    return Err(Error::OrthogonalityFailure(format!(
                        "{}: {}",
                        loaded.name(),
                        names.join(", ")
                    )));
                }
                let reports = survey_group(&loaded, &t, config);
                progress(&format!(
                    "{}: order {}, {} classes, {} reports",
                    loaded.name(),
                    t.order(),
                    t.num_classes(),
                    reports.len()
                ));
                Ok((loaded.name().to_string(), reports))
            })
            .collect::<Result<Vec<_>>>()
    })?;
    let mut groups: Vec<String> = per_group.iter().map(|(n, _)| n.clone()).collect();
    groups.sort();
    if let Some(w) = groups.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Parse(format!("two corpus files name the group {}", w[0])));
    }
    let mut reports: Vec<CheckReport> = per_group.into_iter().flat_map(|(_, r)| r).collect();
    if config.checks.contains(&Check::A10) {
        progress("A10: combinatorial check");
        reports.push(verify_a10_phenomenon());
    }
    crate::io::sort_reports(&mut reports);
    let deviations = match &expectations {
        Some(e) => diff(&reports, &groups, e, config)?,
        None => Vec::new(),
    };
    if let Some(out) = &config.out {
        crate::io::emit_report(&reports, out)?;
    }
    Ok(SurveyOutcome { reports, deviations })
}

fn prefix_error(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        Error::MetadataMismatch(m) => Error::MetadataMismatch(format!("{}: {m}", path.display())),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_selection_parses() {
        assert_eq!("all".parse::<PrimeSelection>().unwrap(), PrimeSelection::All);
        assert_eq!(
            "3, 2,3".parse::<PrimeSelection>().unwrap(),
            PrimeSelection::List(vec![2, 3])
        );
        assert!("4".parse::<PrimeSelection>().is_err());
        assert!("x".parse::<PrimeSelection>().is_err());
    }

    #[test]
    fn config_validation() {
        let mut c = SurveyConfig::new("corpus");
        assert!(c.validate().is_ok());
        c.checks = vec![Check::SymDagger];
        assert!(c.validate().is_err());
        c.checks.clear();
        assert!(c.validate().is_err());
    }
}
