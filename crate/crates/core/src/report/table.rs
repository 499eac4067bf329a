use super::sig3;
use crate::catalog::{rank, Catalog, RankFilter};
use crate::fom::FomResult;

pub const TABLE_HEADER: [&str; 9] = ["reference", "type", "element", "m_kg", "n", "f0_hz", "sqrt_sf", "sqrt_sa", "fom"];

/// One CSV row per record, ascending by FOM. Numeric cells carry three
/// significant figures; an unknown f0 is an empty cell.
pub fn emit_table(cat: &Catalog, results: &[FomResult], filter: RankFilter) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(TABLE_HEADER).expect("in-memory write");
    for (rec, res) in rank(cat, results, filter) {
        writer
            .write_record([
                rec.name.clone(),
                rec.category.to_string(),
                rec.material.to_string(),
                sig3(rec.mass),
                sig3(res.n_nuclei),
                rec.f0.map(sig3).unwrap_or_default(),
                sig3(res.sqrt_sf),
                sig3(res.sqrt_sa),
                sig3(res.fom),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}
