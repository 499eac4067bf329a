//! Experiment records, the embedded reference table, ranking and selection.

mod csv_io;

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::chem::MaterialSpec;
use crate::fom::FomResult;

pub use csv_io::{parse_records, serialize_records, CatalogError, Diagnostic, DiagnosticKind, HEADER};

/// Embedded reference table in record-CSV form.
pub const TABLE1_CSV: &str = include_str!("../../data/table1.csv");

/// The ten experiment types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Nanotube,
    Nanowire,
    Nanobeam,
    Membrane,
    Mesoscopic,
    Massive,
    TrappedIon,
    OpticalLevitation,
    MagneticLevitation,
    AtomInterferometry,
}

impl Category {
    pub const ALL: [Category; 10] = [
        Category::Nanotube,
        Category::Nanowire,
        Category::Nanobeam,
        Category::Membrane,
        Category::Mesoscopic,
        Category::Massive,
        Category::TrappedIon,
        Category::OpticalLevitation,
        Category::MagneticLevitation,
        Category::AtomInterferometry,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Category::Nanotube => "nanotube",
            Category::Nanowire => "nanowire",
            Category::Nanobeam => "nanobeam",
            Category::Membrane => "membrane",
            Category::Mesoscopic => "mesoscopic",
            Category::Massive => "massive",
            Category::TrappedIon => "trapped-ion",
            Category::OpticalLevitation => "optical-levitation",
            Category::MagneticLevitation => "magnetic-levitation",
            Category::AtomInterferometry => "atom-interferometry",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Category {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Category::ALL.into_iter().find(|c| c.as_str() == s).ok_or_else(|| format!("unknown category `{s}`"))
    }
}

macro_rules! keyword_enum {
    ($name:ident { $($variant:ident => $text:literal),* $(,)? }) => {
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum $name { $($variant),* }

        impl $name {
            pub fn as_str(self) -> &'static str {
                match self { $($name::$variant => $text),* }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, Self::Err> {
                match s {
                    $($text => Ok($name::$variant),)*
                    _ => Err(format!(concat!("expected one of:", $(" ", $text),*, "; got `{}`"), s)),
                }
            }
        }
    };
}

keyword_enum!(Mode { Absolute => "absolute", Differential => "differential" });
keyword_enum!(Location { Earth => "earth", Space => "space" });
keyword_enum!(RankFilter { All => "all", AbsoluteOnEarth => "absolute-on-earth" });

/// One experiment: identity, test mass, noise figures and oscillator data.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub name: String,
    pub year: i32,
    pub reference: String,
    pub category: Category,
    pub material: MaterialSpec,
    /// kg
    pub mass: f64,
    /// Replaces the material-derived nucleus count when present.
    pub n_override: Option<f64>,
    /// Hz
    pub f0: Option<f64>,
    /// N/√Hz
    pub sqrt_sf: Option<f64>,
    /// m s⁻²/√Hz
    pub sqrt_sa: Option<f64>,
    /// Mode temperature, K.
    pub temp: Option<f64>,
    pub quality: Option<f64>,
    pub mode: Mode,
    pub location: Location,
    /// Value taken from a review rather than the original source.
    pub secondhand: bool,
    pub notes: String,
}

impl ExperimentRecord {
    /// Checks the record invariants, one `(column, kind, message)` per problem.
    pub fn check(&self) -> Vec<(&'static str, DiagnosticKind, String)> {
        use DiagnosticKind::{BadValue, MissingRequired};
        let mut problems = Vec::new();
        if self.name.trim().is_empty() {
            problems.push(("name", MissingRequired, "name is empty".to_string()));
        }
        if !(self.mass.is_finite() && self.mass > 0.0) {
            problems.push(("mass_kg", BadValue, format!("mass must be > 0, got {}", self.mass)));
        }
        if self.sqrt_sf.is_none() && self.sqrt_sa.is_none() {
            problems.push(("sqrt_sf", MissingRequired, "one of sqrt_sf or sqrt_sa is required".to_string()));
        }
        let checks: [(&'static str, Option<f64>, f64, bool); 6] = [
            ("n_override", self.n_override, 1.0, false),
            ("f0_hz", self.f0, 0.0, true),
            ("quality", self.quality, 0.0, true),
            ("sqrt_sf", self.sqrt_sf, 0.0, false),
            ("sqrt_sa", self.sqrt_sa, 0.0, false),
            ("temp_k", self.temp, 0.0, false),
        ];
        for (column, value, min, strict) in checks {
            if let Some(v) = value {
                let ok = v.is_finite() && if strict { v > min } else { v >= min };
                if !ok {
                    let op = if strict { ">" } else { ">=" };
                    problems.push((column, BadValue, format!("{column} must be {op} {min}, got {v}")));
                }
            }
        }
        problems
    }

    /// Direct measurement taken on Earth.
    pub fn is_absolute_on_earth(&self) -> bool {
        self.mode == Mode::Absolute && self.location == Location::Earth
    }
}

/// Ordered, name-unique list of records.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Catalog {
    records: Vec<ExperimentRecord>,
}

impl Catalog {
    /// Builds a catalog, rejecting duplicate names and invalid records.
    pub fn new(records: Vec<ExperimentRecord>) -> Result<Self, CatalogError> {
        let mut diagnostics = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (i, rec) in records.iter().enumerate() {
            for (column, kind, message) in rec.check() {
                diagnostics.push(Diagnostic::new(i + 1, column, kind, message));
            }
            if !seen.insert(rec.name.as_str()) {
                diagnostics.push(Diagnostic::new(
                    i + 1,
                    "name",
                    DiagnosticKind::DuplicateName,
                    format!("duplicate name `{}`", rec.name),
                ));
            }
        }
        if diagnostics.is_empty() {
            Ok(Catalog { records })
        } else {
            Err(CatalogError::Invalid(diagnostics))
        }
    }

    pub fn records(&self) -> &[ExperimentRecord] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&ExperimentRecord> {
        self.records.iter().find(|r| r.name == name)
    }

    pub fn to_csv(&self) -> String {
        serialize_records(self)
    }
}

/// The 46 reference experiments, parsed once from [`TABLE1_CSV`].
pub fn embedded_table1() -> Catalog {
    static TABLE: OnceLock<Catalog> = OnceLock::new();
    TABLE.get_or_init(|| parse_records(TABLE1_CSV).expect("embedded table parses")).clone()
}

/// A record paired with its evaluation.
pub type Entry<'a> = (&'a ExperimentRecord, &'a FomResult);

fn entries<'a>(cat: &'a Catalog, results: &'a [FomResult]) -> impl Iterator<Item = Entry<'a>> {
    assert_eq!(cat.len(), results.len(), "one result per record");
    cat.records.iter().zip(results)
}

fn by_fom_then_name(a: &Entry<'_>, b: &Entry<'_>) -> std::cmp::Ordering {
    a.1.fom.total_cmp(&b.1.fom).then_with(|| a.0.name.cmp(&b.0.name))
}

/// Records ascending by FOM, optionally keeping only absolute on-Earth
/// measurements. `results[i]` must belong to `cat.records()[i]`.
pub fn rank<'a>(cat: &'a Catalog, results: &'a [FomResult], filter: RankFilter) -> Vec<Entry<'a>> {
    let mut out: Vec<Entry<'a>> =
        entries(cat, results).filter(|(rec, _)| filter == RankFilter::All || rec.is_absolute_on_earth()).collect();
    out.sort_by(by_fom_then_name);
    out
}

/// The `k` lowest-FOM records of every category, in taxonomy order.
pub fn select_for_figure<'a>(cat: &'a Catalog, results: &'a [FomResult], k: usize) -> Vec<Entry<'a>> {
    let ranked = rank(cat, results, RankFilter::All);
    Category::ALL
        .into_iter()
        .flat_map(|c| ranked.iter().filter(move |(rec, _)| rec.category == c).take(k).copied())
        .collect()
}
