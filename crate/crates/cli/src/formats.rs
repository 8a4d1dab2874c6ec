//! On-disk formats: sign functions, tournaments and partitions as JSON,
//! point configurations as CSV.
//!
//! Writers emit a single canonical form (compact JSON, fixed key order,
//! trailing newline) so that files round-trip byte for byte.

use std::str::FromStr;

use num_rational::BigRational;
use orchard_core::operators::F2Complex;
use orchard_core::orchard::SeparationProfile;
use orchard_core::{
    OrchardPartition, PointConfiguration, Sign, SignFunction, SymmetryKind, Tournament,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("line {line}: {message}")]
    Csv { line: u64, message: String },
    #[error(transparent)]
    Core(#[from] orchard_core::Error),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> FormatError {
        FormatError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

fn field(field: &str, message: impl ToString) -> FormatError {
    FormatError::Field {
        field: field.to_string(),
        message: message.to_string(),
    }
}

/// `{"n", "arity", "kind", "signs"}` with signs in colex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignFnFile {
    pub n: u32,
    pub arity: u32,
    pub kind: String,
    pub signs: Vec<i64>,
}

impl From<&SignFunction> for SignFnFile {
    fn from(f: &SignFunction) -> SignFnFile {
        SignFnFile {
            n: f.n(),
            arity: f.arity(),
            kind: f.kind().as_str().to_string(),
            signs: f.signs().iter().map(|&s| i64::from(s.to_i8())).collect(),
        }
    }
}

impl SignFnFile {
    pub fn to_signfn(&self) -> Result<SignFunction, FormatError> {
        let kind = SymmetryKind::from_str(&self.kind).map_err(|e| field("kind", e))?;
        let signs = self
            .signs
            .iter()
            .enumerate()
            .map(|(i, &v)| Sign::try_from(v).map_err(|e| field(&format!("signs[{i}]"), e)))
            .collect::<Result<Vec<_>, _>>()?;
        SignFunction::new(self.n, self.arity, kind, signs).map_err(|e| match e {
            orchard_core::Error::LengthMismatch { .. } => field("signs", e),
            orchard_core::Error::ArityOutOfRange { .. } => field("arity", e),
            other => FormatError::Core(other),
        })
    }
}

pub fn parse_signfn(text: &str) -> Result<SignFunction, FormatError> {
    serde_json::from_str::<SignFnFile>(text)?.to_signfn()
}

pub fn write_signfn(f: &SignFunction) -> String {
    to_line(&SignFnFile::from(f))
}

/// `{"n", "matrix"}` with the full skew-symmetric matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TournamentFile {
    pub n: u32,
    pub matrix: Vec<Vec<i64>>,
}

pub fn parse_tournament(text: &str) -> Result<Tournament, FormatError> {
    let file: TournamentFile = serde_json::from_str(text)?;
    if file.matrix.len() != file.n as usize {
        return Err(field(
            "matrix",
            format!("expected {} rows, found {}", file.n, file.matrix.len()),
        ));
    }
    Tournament::from_matrix(&file.matrix).map_err(|e| field("matrix", e))
}

pub fn write_tournament(t: &Tournament) -> String {
    to_line(&TournamentFile {
        n: t.n(),
        matrix: t.matrix(),
    })
}

/// `{"n", "labels"}` with `labels[0] = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionFile {
    pub n: u32,
    pub labels: Vec<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub separation_counts: Option<Vec<PairCount>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCount {
    pub a: u32,
    pub b: u32,
    pub count: u64,
}

impl PartitionFile {
    pub fn new(p: &OrchardPartition, profile: Option<&SeparationProfile>) -> PartitionFile {
        PartitionFile {
            n: p.n(),
            labels: p.labels().to_vec(),
            separation_counts: profile.map(|pr| {
                pr.pairs()
                    .map(|(a, b, count)| PairCount { a, b, count })
                    .collect()
            }),
        }
    }

    pub fn to_partition(&self) -> Result<OrchardPartition, FormatError> {
        if self.labels.len() != self.n as usize {
            return Err(field("labels", format!("expected {} labels", self.n)));
        }
        if self.labels.first().is_some_and(|&l| l != 0) {
            return Err(field("labels", "first label must be 0"));
        }
        OrchardPartition::from_labels(self.labels.clone())
            .ok_or_else(|| field("labels", "labels must be 0 or 1"))
    }
}

pub fn write_partition(p: &OrchardPartition, profile: Option<&SeparationProfile>) -> String {
    to_line(&PartitionFile::new(p, profile))
}

pub fn parse_partition(text: &str) -> Result<OrchardPartition, FormatError> {
    serde_json::from_str::<PartitionFile>(text)?.to_partition()
}

/// `{"n", "homology_dims"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyFile {
    pub n: u32,
    pub homology_dims: Vec<usize>,
}

impl From<&F2Complex> for HomologyFile {
    fn from(c: &F2Complex) -> HomologyFile {
        HomologyFile {
            n: c.n(),
            homology_dims: c.homology_dims().to_vec(),
        }
    }
}

pub fn write_homology(c: &F2Complex) -> String {
    to_line(&HomologyFile::from(c))
}

fn to_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serialises");
    s.push('\n');
    s
}

/// Points CSV: a `dim=<d>` header row, then one point per row with tokens
/// `p` or `p/q`.
pub fn parse_points(text: &str) -> Result<PointConfiguration, FormatError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut records = reader.records();
    let csv_err = |e: csv::Error| FormatError::Csv {
        line: e.position().map_or(0, |p| p.line()),
        message: e.to_string(),
    };
    let header = records
        .next()
        .ok_or(FormatError::Csv {
            line: 1,
            message: "missing `dim=<d>` header".into(),
        })?
        .map_err(csv_err)?;
    let header_line = header.position().map_or(1, |p| p.line());
    let dim = match (
        header.len(),
        header.get(0).and_then(|h| h.strip_prefix("dim=")),
    ) {
        (1, Some(d)) => d.trim().parse::<usize>().map_err(|e| FormatError::Csv {
            line: header_line,
            message: format!("bad dimension `{d}`: {e}"),
        })?,
        _ => {
            return Err(FormatError::Csv {
                line: header_line,
                message: "expected header `dim=<d>`".into(),
            })
        }
    };
    if dim == 0 {
        return Err(FormatError::Csv {
            line: header_line,
            message: "dimension must be positive".into(),
        });
    }
    let mut points = Vec::new();
    for record in records {
        let record = record.map_err(csv_err)?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() != dim {
            return Err(FormatError::Csv {
                line,
                message: format!("expected {dim} coordinates, found {}", record.len()),
            });
        }
        let point = record
            .iter()
            .map(|tok| {
                BigRational::from_str(tok).map_err(|e| FormatError::Csv {
                    line,
                    message: format!("bad coordinate `{tok}`: {e}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        points.push(point);
    }
    if points.len() <= dim {
        return Err(FormatError::Csv {
            line: header_line,
            message: format!("need more than {dim} points, found {}", points.len()),
        });
    }
    Ok(PointConfiguration::new(dim, points)?)
}

pub fn write_points(config: &PointConfiguration) -> String {
    let mut out = format!("dim={}\n", config.dim());
    for p in config.points() {
        let row: Vec<String> = p.iter().map(ToString::to_string).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
