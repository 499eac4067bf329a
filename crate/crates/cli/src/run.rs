use std::fs;
use std::path::{Path, PathBuf};

use d2bound::bounds::BoundAnchor;
use d2bound::catalog::{embedded_table1, parse_records, Catalog, RankFilter};
use d2bound::chem::{molar_mass, parse_formula, ChemError, PeriodicTable};
use d2bound::fom::{evaluate_catalog, FomResult};
use d2bound::quantity::{load_constants, Constants};
use d2bound::report::{emit_bounds_summary, emit_figure, emit_table, figure_points};

pub struct RunConfig {
    pub records_path: Option<PathBuf>,
    pub constants_path: Option<PathBuf>,
    pub k_per_category: usize,
    pub filter: RankFilter,
    pub output_dir: PathBuf,
}

/// Exit 1 for bad input (one line per problem), exit 2 for I/O.
pub enum Failure {
    Invalid(Vec<String>),
    Io(String),
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

struct Loaded {
    catalog: Catalog,
    constants: Constants,
    results: Vec<FomResult>,
}

fn load(cfg: &RunConfig) -> Result<Loaded, Failure> {
    let catalog = match &cfg.records_path {
        None => embedded_table1(),
        Some(path) => {
            let text = read(path)?;
            parse_records(&text).map_err(|e| {
                Failure::Invalid(e.diagnostics().iter().map(|d| format!("{}: {d}", path.display())).collect())
            })?
        }
    };
    let constants = match &cfg.constants_path {
        None => Constants::default(),
        Some(path) => {
            let text = read(path)?;
            load_constants(&text).map_err(|e| Failure::Invalid(vec![format!("{}: {e}", path.display())]))?
        }
    };
    let results = evaluate_catalog(&catalog, PeriodicTable::standard(), &constants)
        .map_err(|(name, e)| Failure::Invalid(vec![format!("record `{name}`: {e}")]))?;
    for (rec, res) in catalog.records().iter().zip(&results) {
        for w in &res.warnings {
            eprintln!("warning: {}: {w}", rec.name);
        }
    }
    Ok(Loaded { catalog, constants, results })
}

/// Writes each file to a temporary sibling and renames it into place, only
/// after every output has been produced.
fn write_outputs(dir: &Path, files: &[(&str, &str)]) -> Result<(), Failure> {
    let io = |path: &Path, e: std::io::Error| Failure::Io(format!("{}: {e}", path.display()));
    fs::create_dir_all(dir).map_err(|e| io(dir, e))?;
    let mut staged = Vec::new();
    for (name, contents) in files {
        let tmp = dir.join(format!(".{name}.tmp"));
        if let Err(e) = fs::write(&tmp, contents) {
            for (t, _) in &staged {
                let _ = fs::remove_file(t);
            }
            let _ = fs::remove_file(&tmp);
            return Err(io(&tmp, e));
        }
        staged.push((tmp, dir.join(name)));
    }
    for (tmp, dest) in staged {
        fs::rename(&tmp, &dest).map_err(|e| io(&dest, e))?;
    }
    Ok(())
}

fn summary(l: &Loaded) -> Result<String, Failure> {
    emit_bounds_summary(&l.catalog, &l.results, &BoundAnchor::defaults(), &l.constants)
        .map_err(|e| Failure::Invalid(vec![e.to_string()]))
}

pub fn cmd_compute(cfg: &RunConfig) -> Result<(), Failure> {
    let l = load(cfg)?;
    let table = emit_table(&l.catalog, &l.results, cfg.filter);
    let bounds = summary(&l)?;
    write_outputs(&cfg.output_dir, &[("table.csv", &table), ("bounds.txt", &bounds)])
}

pub fn cmd_figure(cfg: &RunConfig) -> Result<(), Failure> {
    let l = load(cfg)?;
    let points = figure_points(&l.catalog, &l.results, cfg.k_per_category);
    let fig = emit_figure(&points, &BoundAnchor::defaults()).map_err(|e| Failure::Invalid(vec![e.to_string()]))?;
    write_outputs(&cfg.output_dir, &[("figure.svg", &fig.svg), ("figure.dat", &fig.data)])
}

pub fn cmd_bounds(cfg: &RunConfig) -> Result<(), Failure> {
    let l = load(cfg)?;
    let bounds = summary(&l)?;
    write_outputs(&cfg.output_dir, &[("bounds.txt", &bounds)])?;
    print!("{bounds}");
    Ok(())
}

pub fn cmd_validate(cfg: &RunConfig) -> Result<(), Failure> {
    let l = load(cfg)?;
    println!("ok: {} records", l.catalog.len());
    Ok(())
}

pub fn cmd_formula(text: &str) -> Result<(), Failure> {
    let invalid = |e: ChemError| Failure::Invalid(vec![format!("{text}: {}: {e}", e.kind())]);
    let f = parse_formula(text).map_err(invalid)?;
    let m = molar_mass(&f, PeriodicTable::standard()).map_err(invalid)?;
    let terms: Vec<String> = f.terms().iter().map(|t| format!("{} x{}", t.element.symbol, t.count)).collect();
    println!("terms: {}", terms.join(", "));
    if f.charge_ignored() {
        println!("charge: ignored");
    }
    println!("M = {m:.3e} kg/mol, nuclei = {}", f.nuclei());
    Ok(())
}
