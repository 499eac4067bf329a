//! Recomputed records against the values printed in the reference table.

use d2bound::chem::PeriodicTable;
use d2bound::fom::evaluate_catalog;
use d2bound::quantity::Constants;
use d2bound::{embedded_table1, nuclei_count, FomResult};

const PRINTED: &str = include_str!("data/table1_printed.csv");

struct Printed {
    name: String,
    n: f64,
    sqrt_sa: f64,
    fom: f64,
}

fn printed() -> Vec<Printed> {
    csv::Reader::from_reader(PRINTED.as_bytes())
        .records()
        .map(|r| {
            let r = r.unwrap();
            let num = |i: usize| r[i].parse::<f64>().unwrap();
            Printed { name: r[0].to_string(), n: num(1), sqrt_sa: num(3), fom: num(4) }
        })
        .collect()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn recomputed() -> Vec<(String, Option<f64>, FomResult)> {
    let cat = embedded_table1();
    let results = evaluate_catalog(&cat, PeriodicTable::standard(), &Constants::default()).unwrap();
    cat.records().iter().zip(results).map(|(r, res)| (r.name.clone(), r.n_override, res)).collect()
}

#[test]
fn every_record_matches_its_printed_row() {
    let printed = printed();
    let ours = recomputed();
    assert_eq!(printed.len(), 46);
    assert_eq!(ours.len(), 46);
    let mut failures = Vec::new();
    for (p, (name, n_override, res)) in printed.iter().zip(&ours) {
        assert_eq!(&p.name, name);
        if rel(res.fom, p.fom) > 0.05 {
            failures.push(format!("{name}: fom {:.4e} vs {:.3e}", res.fom, p.fom));
        }
        if n_override.is_none() && rel(res.n_nuclei, p.n) > 0.03 {
            failures.push(format!("{name}: N {:.4e} vs {:.3e}", res.n_nuclei, p.n));
        }
        if rel(res.sqrt_sa, p.sqrt_sa) > 0.02 {
            failures.push(format!("{name}: sqrt_sa {:.4e} vs {:.3e}", res.sqrt_sa, p.sqrt_sa));
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

#[test]
fn spot_anchors() {
    let ours = recomputed();
    let fom = |name: &str| ours.iter().find(|(n, ..)| n == name).unwrap().2.fom;
    for (name, printed) in
        [("Gisler '22", 2.98e-1), ("Asenbaum '17", 2.41e-11), ("Armano '18", 1.78e-5), ("Cavendish 1798", 1.00e14)]
    {
        assert!(rel(fom(name), printed) < 0.05, "{name}: {}", fom(name));
    }
}

/// The printed nucleus count for this sphere is eight times what its mass
/// gives, a factor of 2³ consistent with a diameter used as a radius. The catalog keeps
/// the printed count as an override so the printed FOM is reproduced.
#[test]
fn monteiro_count_is_eight_times_the_mass_derived_count() {
    let cat = embedded_table1();
    let rec = cat.get("Monteiro '20").unwrap();
    let derived = nuclei_count(rec.mass, &rec.material, PeriodicTable::standard()).unwrap();
    let printed = rec.n_override.unwrap();
    assert!(rel(printed / derived, 8.0) < 0.03, "ratio {}", printed / derived);
}
