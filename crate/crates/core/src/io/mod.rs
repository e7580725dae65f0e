//! File formats: groups, character tables, expectations and reports.
//!
//! Every file is pretty-printed JSON with a `"format": "v1"` field, stable
//! field order and big integers written as decimal strings. Serialising the
//! same value twice gives identical bytes.

pub mod decimal;

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith::euler_phi;
use crate::chartab::cyclotomic::CONDUCTOR_BOUND;
use crate::chartab::{verify_orthogonality, CharacterTable, ClassInfo, Cyclotomic};
use crate::checks::{Check, CheckReport, Status};
use crate::error::{Error, Result};
use crate::group::{Domain, FiniteGroup, GroupElement, SmallField};

pub const FORMAT: &str = "v1";

fn check_format(found: &str) -> Result<()> {
    if found != FORMAT {
        return Err(Error::Parse(format!("unsupported format {found:?}, expected {FORMAT:?}")));
    }
    Ok(())
}

fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("formats serialise");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSpec {
    pub characteristic: u64,
    pub degree: u32,
    /// Monic defining polynomial, constant term first.
    pub polynomial: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Representation {
    /// Permutations of `{1..degree}` as image lists.
    Perm { degree: usize, generators: Vec<Vec<usize>> },
    /// Matrices as lists of rows of field element codes.
    Matrix { field: FieldSpec, dimension: usize, generators: Vec<Vec<Vec<u16>>> },
}

/// A homomorphism onto a permutation group, one image per generator. Used to
/// label the classes of a double cover by cycle types.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Projection {
    pub degree: usize,
    pub images: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupFile {
    pub format: String,
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(flatten)]
    pub representation: Representation,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "decimal::option")]
    pub expected_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none", with = "decimal::option")]
    pub expected_center_order: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub projection: Option<Projection>,
}

impl GroupFile {
    /// Records the generators of `g` (its domain must be a permutation domain
    /// or a matrix domain over a shipped field).
    pub fn from_group(name: &str, g: &FiniteGroup) -> Self {
        let representation = match g.domain() {
            Domain::Permutation { degree } => Representation::Perm {
                degree: *degree,
                generators: g
                    .generators()
                    .iter()
                    .map(|x| x.as_slice().iter().map(|&i| i as usize + 1).collect())
                    .collect(),
            },
            Domain::Matrix { field, dim } => Representation::Matrix {
                field: FieldSpec {
                    characteristic: field.characteristic(),
                    degree: field.degree(),
                    polynomial: field.polynomial().to_vec(),
                },
                dimension: *dim,
                generators: g
                    .generators()
                    .iter()
                    .map(|x| x.as_slice().chunks(*dim).map(|r| r.to_vec()).collect())
                    .collect(),
            },
        };
        GroupFile {
            format: FORMAT.to_string(),
            name: name.to_string(),
            description: None,
            representation,
            expected_order: Some(g.order()),
            expected_center_order: Some(g.center().order()),
            projection: None,
        }
    }

    pub fn domain(&self) -> Result<Domain> {
        Ok(match &self.representation {
            Representation::Perm { degree, .. } => Domain::permutations(*degree),
            Representation::Matrix { field, dimension, .. } => {
                let f = SmallField::new(field.characteristic, field.polynomial.clone())?;
                if f.degree() != field.degree {
                    return Err(Error::InvalidField(format!(
                        "declared degree {} but polynomial has degree {}",
                        field.degree,
                        f.degree()
                    )));
                }
                Domain::matrices(std::sync::Arc::new(f), *dimension)
            }
        })
    }

    pub fn generators(&self, domain: &Domain) -> Result<Vec<GroupElement>> {
        match &self.representation {
            Representation::Perm { generators, .. } => generators
                .iter()
                .map(|imgs| {
                    if imgs.contains(&0) {
                        return Err(Error::InvalidGenerator("permutation points are 1-based".into()));
                    }
                    let zero_based: Vec<usize> = imgs.iter().map(|&i| i - 1).collect();
                    domain.permutation(&zero_based)
                })
                .collect(),
            Representation::Matrix { generators, dimension, .. } => generators
                .iter()
                .map(|rows| {
                    if rows.len() != *dimension || rows.iter().any(|r| r.len() != *dimension) {
                        return Err(Error::InvalidGenerator(format!(
                            "matrix is not {dimension} x {dimension}"
                        )));
                    }
                    domain.matrix(&rows.concat())
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        to_pretty(self)
    }
}

/// A validated group file.
#[derive(Debug)]
pub struct LoadedGroup {
    pub file: GroupFile,
    pub group: FiniteGroup,
}

impl LoadedGroup {
    pub fn name(&self) -> &str {
        &self.file.name
    }

    /// Images of all elements under the recorded projection.
    pub fn projection_images(&self) -> Result<(Domain, Vec<GroupElement>)> {
        let proj = self.file.projection.as_ref().ok_or(Error::MissingProjection)?;
        let target = Domain::permutations(proj.degree);
        let imgs = proj
            .images
            .iter()
            .map(|imgs| {
                let zero_based: Vec<usize> = imgs.iter().map(|&i| i.wrapping_sub(1)).collect();
                target.permutation(&zero_based)
            })
            .collect::<Result<Vec<_>>>()?;
        let all = self.group.homomorphism_images(&target, &imgs)?;
        Ok((target, all))
    }

    /// Cycle type of the projected image of each class representative.
    pub fn projected_cycle_types(&self) -> Result<Vec<Vec<usize>>> {
        let (target, images) = self.projection_images()?;
        Ok(self
            .group
            .classes()
            .iter()
            .map(|c| target.cycle_type(&images[c.rep_index]).expect("permutation target"))
            .collect())
    }
}

pub fn parse_group(text: &str) -> Result<LoadedGroup> {
    let file: GroupFile = serde_json::from_str(text)?;
    check_format(&file.format)?;
    let domain = file.domain()?;
    let gens = file.generators(&domain)?;
    let group = FiniteGroup::enumerate(domain, gens)?;
    if let Some(n) = file.expected_order {
        if n != group.order() {
            return Err(Error::MetadataMismatch(format!(
                "{}: expected order {n}, computed {}",
                file.name,
                group.order()
            )));
        }
    }
    if let Some(n) = file.expected_center_order {
        let z = group.center().order();
        if n != z {
            return Err(Error::MetadataMismatch(format!(
                "{}: expected center of order {n}, computed {z}",
                file.name
            )));
        }
    }
    let loaded = LoadedGroup { file, group };
    if loaded.file.projection.is_some() {
        loaded
            .projection_images()
            .map_err(|e| Error::MetadataMismatch(format!("{}: projection: {e}", loaded.file.name)))?;
    }
    Ok(loaded)
}

pub fn load_group(path: impl AsRef<Path>) -> Result<LoadedGroup> {
    parse_group(&fs::read_to_string(path)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct ClassRecord {
    #[serde(with = "decimal")]
    order: u64,
    #[serde(with = "decimal")]
    size: u64,
    powers: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct ValueRecord {
    conductor: u64,
    #[serde(with = "decimal::signed")]
    coeffs: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct TableFile {
    format: String,
    group: String,
    #[serde(with = "decimal")]
    order: u64,
    #[serde(with = "decimal")]
    exponent: u64,
    classes: Vec<ClassRecord>,
    characters: Vec<Vec<ValueRecord>>,
}

/// A character table with the id of its group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedTable {
    pub group: String,
    pub table: CharacterTable,
}

pub fn table_to_json(group: &str, t: &CharacterTable) -> String {
    let file = TableFile {
        format: FORMAT.to_string(),
        group: group.to_string(),
        order: t.order(),
        exponent: t.exponent(),
        classes: t
            .classes()
            .iter()
            .map(|c| ClassRecord { order: c.order, size: c.size, powers: c.powers.clone() })
            .collect(),
        characters: t
            .values()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| ValueRecord { conductor: v.conductor(), coeffs: v.coeffs().to_vec() })
                    .collect()
            })
            .collect(),
    };
    to_pretty(&file)
}

/// Parses a table and accepts it only if every orthogonality invariant holds.
pub fn parse_table(text: &str) -> Result<NamedTable> {
    let file: TableFile = serde_json::from_str(text)?;
    check_format(&file.format)?;
    let classes: Vec<ClassInfo> = file
        .classes
        .into_iter()
        .map(|c| ClassInfo { order: c.order, size: c.size, powers: c.powers })
        .collect();
    let r = classes.len();
    if r == 0 || file.characters.len() != r || file.characters.iter().any(|row| row.len() != r) {
        return Err(Error::Parse(format!("table is not square over {r} classes")));
    }
    for c in &classes {
        if c.order == 0 || c.size == 0 || !file.order.is_multiple_of(c.order) {
            return Err(Error::Parse(format!("class of order {} and size {}", c.order, c.size)));
        }
        if c.powers.len() as u64 != c.order || c.powers.iter().any(|&k| k >= r) {
            return Err(Error::Parse("power map row out of range".into()));
        }
    }
    if file.exponent > CONDUCTOR_BOUND {
        return Err(Error::ConductorOverflow { conductor: file.exponent, bound: CONDUCTOR_BOUND });
    }
    let values = file
        .characters
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|v| {
                    if v.conductor == 0 || v.coeffs.len() as u64 != euler_phi(v.conductor) {
                        return Err(Error::Parse(format!(
                            "conductor {} with {} coefficients",
                            v.conductor,
                            v.coeffs.len()
                        )));
                    }
                    Cyclotomic::from_coeffs(v.conductor, v.coeffs)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let table = CharacterTable::from_parts(file.order, classes, values);
    let report = verify_orthogonality(&table);
    if !report.passed() {
        let msg: Vec<String> = report
            .failures()
            .iter()
            .map(|f| format!("{}: {}", f.name, f.detail.clone().unwrap_or_default()))
            .collect();
        return Err(Error::OrthogonalityFailure(msg.join("; ")));
    }
    if table.exponent() != file.exponent {
        return Err(Error::MetadataMismatch(format!(
            "declared exponent {}, classes give {}",
            file.exponent,
            table.exponent()
        )));
    }
    Ok(NamedTable { group: file.group, table })
}

pub fn load_table(path: impl AsRef<Path>) -> Result<NamedTable> {
    parse_table(&fs::read_to_string(path)?)
}

pub fn save_table(group: &str, t: &CharacterTable, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, table_to_json(group, t))?;
    Ok(())
}

/// The pair that witnesses an expected failure of a block check: the defect
/// of a violating character and the defect-group exponent it is compared
/// against.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub defect: u32,
    #[serde(with = "decimal")]
    pub exponent: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub group: String,
    pub check: Check,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub prime: Option<u64>,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Expectation {
    pub fn key(&self) -> (String, Check, Option<u64>) {
        (self.group.clone(), self.check, self.prime)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectationsFile {
    pub format: String,
    pub entries: Vec<Expectation>,
}

impl ExpectationsFile {
    pub fn parse(text: &str) -> Result<Self> {
        let file: ExpectationsFile = serde_json::from_str(text)?;
        check_format(&file.format)?;
        let mut keys: Vec<_> = file.entries.iter().map(Expectation::key).collect();
        keys.sort();
        if let Some(w) = keys.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Parse(format!("duplicate expectation {:?}", w[0])));
        }
        Ok(file)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        to_pretty(self)
    }

    pub fn find(&self, group: &str, check: Check, prime: Option<u64>) -> Option<&Expectation> {
        self.entries
            .iter()
            .find(|e| e.group == group && e.check == check && e.prime == prime)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFile {
    pub format: String,
    /// Human-readable, one line per report.
    pub summary: Vec<String>,
    pub reports: Vec<CheckReport>,
}

/// Sort order of reports: group, then prime (group-level checks first), then
/// check.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| {
        (&a.group, a.prime, a.check).cmp(&(&b.group, b.prime, b.check))
    });
}

pub fn report_to_json(reports: &[CheckReport]) -> String {
    let mut reports = reports.to_vec();
    sort_reports(&mut reports);
    let file = ReportFile {
        format: FORMAT.to_string(),
        summary: reports.iter().map(CheckReport::summary).collect(),
        reports,
    };
    to_pretty(&file)
}

pub fn emit_report(reports: &[CheckReport], path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, report_to_json(reports))?;
    Ok(())
}
