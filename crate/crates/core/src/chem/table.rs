//! Embedded standard atomic weights.
//!
//! Conventional (abridged) standard atomic weights in g/mol. Elements with no
//! standard weight (Tc, Pm, Po and heavier radioactive species apart from
//! Th, Pa, U) are absent.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use super::ChemError;

/// A chemical element from the embedded table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Element {
    pub symbol: &'static str,
    pub atomic_number: u8,
    /// Standard atomic weight in g/mol.
    pub weight: f64,
}

macro_rules! elements {
    ($( $z:literal $sym:ident $w:literal ),* $(,)?) => {
        &[ $( Element { symbol: stringify!($sym), atomic_number: $z, weight: $w } ),* ]
    };
}

pub static ELEMENTS: &[Element] = elements![
    1 H 1.008, 2 He 4.0026, 3 Li 6.941, 4 Be 9.0122, 5 B 10.81,
    6 C 12.011, 7 N 14.007, 8 O 15.999, 9 F 18.998, 10 Ne 20.180,
    11 Na 22.990, 12 Mg 24.305, 13 Al 26.982, 14 Si 28.085, 15 P 30.974,
    16 S 32.06, 17 Cl 35.45, 18 Ar 39.95, 19 K 39.098, 20 Ca 40.078,
    21 Sc 44.956, 22 Ti 47.867, 23 V 50.942, 24 Cr 51.996, 25 Mn 54.938,
    26 Fe 55.845, 27 Co 58.933, 28 Ni 58.693, 29 Cu 63.546, 30 Zn 65.38,
    31 Ga 69.723, 32 Ge 72.630, 33 As 74.922, 34 Se 78.971, 35 Br 79.904,
    36 Kr 83.798, 37 Rb 85.468, 38 Sr 87.62, 39 Y 88.906, 40 Zr 91.224,
    41 Nb 92.906, 42 Mo 95.95, 44 Ru 101.07, 45 Rh 102.91, 46 Pd 106.42,
    47 Ag 107.87, 48 Cd 112.41, 49 In 114.82, 50 Sn 118.71, 51 Sb 121.76,
    52 Te 127.60, 53 I 126.90, 54 Xe 131.29, 55 Cs 132.91, 56 Ba 137.33,
    57 La 138.91, 58 Ce 140.12, 59 Pr 140.91, 60 Nd 144.24, 62 Sm 150.36,
    63 Eu 151.96, 64 Gd 157.25, 65 Tb 158.93, 66 Dy 162.50, 67 Ho 164.93,
    68 Er 167.26, 69 Tm 168.93, 70 Yb 173.05, 71 Lu 174.97, 72 Hf 178.49,
    73 Ta 180.95, 74 W 183.84, 75 Re 186.21, 76 Os 190.23, 77 Ir 192.22,
    78 Pt 195.08, 79 Au 196.97, 80 Hg 200.59, 81 Tl 204.38, 82 Pb 207.2,
    83 Bi 208.98, 90 Th 232.04, 91 Pa 231.04, 92 U 238.03,
];

/// Looks up an element of the embedded table by symbol (case-sensitive).
pub fn element(symbol: &str) -> Option<&'static Element> {
    ELEMENTS.iter().find(|e| e.symbol == symbol)
}

/// Symbol to atomic weight lookup, in kg/mol.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicTable {
    entries: BTreeMap<String, f64>,
}

impl PeriodicTable {
    /// The embedded standard table. Built once and shared.
    pub fn standard() -> &'static PeriodicTable {
        static TABLE: OnceLock<PeriodicTable> = OnceLock::new();
        TABLE.get_or_init(|| PeriodicTable {
            entries: ELEMENTS.iter().map(|e| (e.symbol.to_string(), e.weight * 1e-3)).collect(),
        })
    }

    /// Builds a custom table from `(symbol, kg/mol)` pairs.
    pub fn from_entries<I, S>(entries: I) -> Result<Self, ChemError>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: Into<String>,
    {
        let mut map = BTreeMap::new();
        for (symbol, weight) in entries {
            let symbol = symbol.into();
            if !(weight.is_finite() && weight > 0.0) {
                return Err(ChemError::NonPositiveWeight(symbol));
            }
            map.insert(symbol, weight);
        }
        Ok(PeriodicTable { entries: map })
    }

    /// Atomic weight in kg/mol.
    pub fn weight(&self, symbol: &str) -> Option<f64> {
        self.entries.get(symbol).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}
