use std::fmt;

use thiserror::Error;

use super::{Catalog, Category, ExperimentRecord};
use crate::chem::MaterialSpec;

pub const HEADER: [&str; 16] = [
    "name",
    "year",
    "reference",
    "category",
    "material",
    "mass_kg",
    "n_override",
    "f0_hz",
    "sqrt_sf",
    "sqrt_sa",
    "temp_k",
    "quality",
    "mode",
    "location",
    "secondhand",
    "notes",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagnosticKind {
    BadHeader,
    BadCsv,
    BadNumber,
    BadCategory,
    BadMaterial,
    BadValue,
    MissingRequired,
    DuplicateName,
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One problem in a record file. `row` is the 1-based line number of the
/// offending CSV record (the header is row 1).
#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    pub row: usize,
    pub column: String,
    pub kind: DiagnosticKind,
    pub message: String,
}

impl Diagnostic {
    pub(crate) fn new(row: usize, column: &str, kind: DiagnosticKind, message: impl Into<String>) -> Self {
        Diagnostic { row, column: column.to_string(), kind, message: message.into() }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {}, column {}: {}: {}", self.row, self.column, self.kind, self.message)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("record file has {} problem(s)", .0.len())]
    Invalid(Vec<Diagnostic>),
}

impl CatalogError {
    pub fn diagnostics(&self) -> &[Diagnostic] {
        match self {
            CatalogError::Invalid(d) => d,
        }
    }
}

struct RowParser<'a> {
    row: usize,
    fields: &'a csv::StringRecord,
    diagnostics: Vec<Diagnostic>,
}

impl<'a> RowParser<'a> {
    fn cell(&self, column: usize) -> &'a str {
        self.fields.get(column).unwrap_or("")
    }

    fn push(&mut self, column: usize, kind: DiagnosticKind, message: String) {
        self.diagnostics.push(Diagnostic::new(self.row, HEADER[column], kind, message));
    }

    fn required(&mut self, column: usize) -> Option<&'a str> {
        let text = self.cell(column);
        if text.is_empty() {
            self.push(column, DiagnosticKind::MissingRequired, format!("{} is required", HEADER[column]));
            None
        } else {
            Some(text)
        }
    }

    fn number(&mut self, column: usize, text: &str) -> Option<f64> {
        match text.parse::<f64>() {
            Ok(v) if v.is_finite() => Some(v),
            _ => {
                self.push(column, DiagnosticKind::BadNumber, format!("`{text}` is not a finite number"));
                None
            }
        }
    }

    fn required_number(&mut self, column: usize) -> Option<f64> {
        let text = self.required(column)?;
        self.number(column, text)
    }

    /// `Ok(None)` for an empty cell, `Err(())` once a diagnostic is recorded.
    fn optional_number(&mut self, column: usize) -> Result<Option<f64>, ()> {
        let text = self.cell(column);
        if text.is_empty() {
            return Ok(None);
        }
        self.number(column, text).map(Some).ok_or(())
    }

    fn keyword<T: std::str::FromStr<Err = String>>(&mut self, column: usize, kind: DiagnosticKind) -> Option<T> {
        let text = self.required(column)?;
        match text.parse() {
            Ok(v) => Some(v),
            Err(message) => {
                self.push(column, kind, message);
                None
            }
        }
    }

    fn record(&mut self) -> Option<ExperimentRecord> {
        use DiagnosticKind::*;

        let name = self.required(0);
        let year = self.required(1).and_then(|t| match t.parse::<i32>() {
            Ok(y) => Some(y),
            Err(_) => {
                self.push(1, BadNumber, format!("`{t}` is not an integer year"));
                None
            }
        });
        let category = self.keyword::<Category>(3, BadCategory);
        let material = self.required(4).and_then(|t| match MaterialSpec::parse(t) {
            Ok(m) => Some(m),
            Err(e) => {
                self.push(4, BadMaterial, format!("`{t}`: {e}"));
                None
            }
        });
        let mass = self.required_number(5);
        let optional: Vec<Result<Option<f64>, ()>> =
            [6, 7, 8, 9, 10, 11].into_iter().map(|c| self.optional_number(c)).collect();
        let mode = self.keyword(12, BadValue);
        let location = self.keyword(13, BadValue);
        let secondhand = self.keyword::<Secondhand>(14, BadValue);

        let (
            Some(name),
            Some(year),
            Some(category),
            Some(material),
            Some(mass),
            Some(mode),
            Some(location),
            Some(secondhand),
        ) = (name, year, category, material, mass, mode, location, secondhand)
        else {
            return None;
        };
        let [Ok(n_override), Ok(f0), Ok(sqrt_sf), Ok(sqrt_sa), Ok(temp), Ok(quality)] = optional[..] else {
            return None;
        };
        let rec = ExperimentRecord {
            name: name.to_string(),
            year,
            reference: self.cell(2).to_string(),
            category,
            material,
            mass,
            n_override,
            f0,
            sqrt_sf,
            sqrt_sa,
            temp,
            quality,
            mode,
            location,
            secondhand: secondhand.0,
            notes: self.cell(15).to_string(),
        };
        let problems = rec.check();
        if problems.is_empty() {
            Some(rec)
        } else {
            for (column, kind, message) in problems {
                self.diagnostics.push(Diagnostic::new(self.row, column, kind, message));
            }
            None
        }
    }
}

struct Secondhand(bool);

impl std::str::FromStr for Secondhand {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "true" => Ok(Secondhand(true)),
            "false" => Ok(Secondhand(false)),
            _ => Err(format!("expected true or false; got `{s}`")),
        }
    }
}

/// Parses and validates a record CSV. Any problem fails the whole file and
/// every problem found is reported.
pub fn parse_records(text: &str) -> Result<Catalog, CatalogError> {
    let mut reader = csv::ReaderBuilder::new().has_headers(false).flexible(true).from_reader(text.as_bytes());
    let mut rows = reader.records();

    let header_error =
        |message: String| CatalogError::Invalid(vec![Diagnostic::new(1, "-", DiagnosticKind::BadHeader, message)]);
    match rows.next() {
        None => return Err(header_error("missing header".into())),
        Some(Err(e)) => return Err(header_error(e.to_string())),
        Some(Ok(h)) if h.iter().ne(HEADER) => {
            return Err(header_error(format!("expected `{}`", HEADER.join(","))));
        }
        Some(Ok(_)) => {}
    }

    let mut records = Vec::new();
    let mut diagnostics = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for result in rows {
        let fields = match result {
            Ok(f) => f,
            Err(e) => {
                let row = e.position().map_or(0, |p| p.line() as usize);
                diagnostics.push(Diagnostic::new(row, "-", DiagnosticKind::BadCsv, e.to_string()));
                continue;
            }
        };
        let row = fields.position().map_or(0, |p| p.line() as usize);
        if fields.len() != HEADER.len() {
            diagnostics.push(Diagnostic::new(
                row,
                "-",
                DiagnosticKind::BadCsv,
                format!("expected {} fields, found {}", HEADER.len(), fields.len()),
            ));
            continue;
        }
        let mut parser = RowParser { row, fields: &fields, diagnostics: Vec::new() };
        let rec = parser.record();
        diagnostics.append(&mut parser.diagnostics);
        let Some(rec) = rec else { continue };
        if let Some(first) = seen.insert(rec.name.clone(), row) {
            diagnostics.push(Diagnostic::new(
                row,
                "name",
                DiagnosticKind::DuplicateName,
                format!("`{}` already defined at row {first}", rec.name),
            ));
            continue;
        }
        records.push(rec);
    }

    if diagnostics.is_empty() {
        Ok(Catalog { records })
    } else {
        Err(CatalogError::Invalid(diagnostics))
    }
}

fn number(v: f64) -> String {
    format!("{v:e}")
}

fn optional(v: Option<f64>) -> String {
    v.map(number).unwrap_or_default()
}

/// Writes the catalog back in record-CSV form. Numbers use the shortest
/// representation that parses back to the same value.
pub fn serialize_records(cat: &Catalog) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(HEADER).expect("in-memory write");
    for r in &cat.records {
        writer
            .write_record([
                r.name.clone(),
                r.year.to_string(),
                r.reference.clone(),
                r.category.to_string(),
                r.material.to_string(),
                number(r.mass),
                optional(r.n_override),
                optional(r.f0),
                optional(r.sqrt_sf),
                optional(r.sqrt_sa),
                optional(r.temp),
                optional(r.quality),
                r.mode.to_string(),
                r.location.to_string(),
                r.secondhand.to_string(),
                r.notes.clone(),
            ])
            .expect("in-memory write");
    }
    let bytes = writer.into_inner().expect("in-memory flush");
    String::from_utf8(bytes).expect("fields are UTF-8")
}
