use std::fmt;

use super::table::{element, Element};
use super::ChemError;

/// One `symbol[count]` term of a formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Term {
    pub element: &'static Element,
    pub count: u32,
}

/// A parsed chemical formula such as `Si3N4` or `Yb+`.
///
/// Terms keep input order and are not merged, so `CH3CH3` has four terms.
/// A trailing charge token is stripped; electrons are never counted.
#[derive(Debug, Clone, PartialEq)]
pub struct Formula {
    terms: Vec<Term>,
    charge_ignored: bool,
}

impl Formula {
    /// Parses `text` against the embedded periodic table.
    ///
    /// Grammar: one or more `Upper [lower] [count]` terms, then an optional
    /// charge token made of one optional digit and a `+` or `-`. A digit
    /// right before the sign is the charge magnitude, not a count: `Ca2+`
    /// is one calcium.
    pub fn parse(text: &str) -> Result<Formula, ChemError> {
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(ChemError::parse(0, "empty formula"));
        }
        if let Some(pos) = text.find(|c: char| !c.is_ascii()) {
            return Err(ChemError::parse(pos, "non-ASCII character"));
        }

        let mut end = bytes.len();
        let mut charge_ignored = false;
        if matches!(bytes[end - 1], b'+' | b'-') {
            charge_ignored = true;
            end -= 1;
            if end >= 2 && bytes[end - 1].is_ascii_digit() {
                end -= 1;
            }
        }

        let mut terms = Vec::new();
        let mut pos = 0;
        while pos < end {
            let start = pos;
            if !bytes[pos].is_ascii_uppercase() {
                return Err(ChemError::parse(pos, "expected an element symbol"));
            }
            pos += 1;
            if pos < end && bytes[pos].is_ascii_lowercase() {
                pos += 1;
            }
            let symbol = &text[start..pos];
            let element = element(symbol).ok_or_else(|| ChemError::UnknownElement(symbol.into()))?;

            let digits = pos;
            while pos < end && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let count = if digits == pos {
                1
            } else {
                if bytes[digits] == b'0' {
                    return Err(ChemError::parse(digits, "count must be a positive integer without leading zeros"));
                }
                text[digits..pos].parse::<u32>().map_err(|_| ChemError::parse(digits, "count out of range"))?
            };
            terms.push(Term { element, count });
        }

        if terms.is_empty() {
            return Err(ChemError::parse(0, "no element symbols"));
        }
        Ok(Formula { terms, charge_ignored })
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Whether a trailing charge token was stripped during parsing.
    pub fn charge_ignored(&self) -> bool {
        self.charge_ignored
    }

    /// Number of nuclei in one formula unit.
    pub fn nuclei(&self) -> u64 {
        self.terms.iter().map(|t| u64::from(t.count)).sum()
    }

    /// Same formula with every count multiplied by `factor`.
    pub fn scaled(&self, factor: u32) -> Formula {
        assert!(factor >= 1, "scale factor must be positive");
        Formula {
            terms: self.terms.iter().map(|t| Term { element: t.element, count: t.count * factor }).collect(),
            charge_ignored: self.charge_ignored,
        }
    }
}

impl fmt::Display for Formula {
    /// Canonical text: counts of one are omitted. A stripped charge comes
    /// back as `+`, or `1+` when the last count would otherwise absorb it.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.terms {
            f.write_str(t.element.symbol)?;
            if t.count != 1 {
                write!(f, "{}", t.count)?;
            }
        }
        if self.charge_ignored {
            let last = self.terms.last().map_or(1, |t| t.count);
            f.write_str(if last == 1 { "+" } else { "1+" })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Formula {
    type Err = ChemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::parse(s)
    }
}
