//! Fixtures shared by the criterion benches.

use d2bound::catalog::{parse_records, Catalog, TABLE1_CSV};

/// The reference table repeated `copies` times with unique names.
pub fn replicated_catalog(copies: usize) -> Catalog {
    let mut lines = TABLE1_CSV.lines();
    let header = lines.next().expect("header");
    let rows: Vec<&str> = lines.collect();
    let mut text = String::from(header);
    text.push('\n');
    for i in 0..copies {
        for row in &rows {
            text.push_str(&format!("#{i} {row}\n"));
        }
    }
    parse_records(&text).expect("replicated table parses")
}
