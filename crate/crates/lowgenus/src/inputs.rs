//! Externally supplied genus-2/3 counts.
//!
//! The incidence-only counts N^{d,g} and one-tangency counts TL^{d,g} for
//! g = 2, 3, and the genus-3 hyperelliptic counts H_d, come from published
//! algorithms that are not reimplemented here; they are consumed as data.
//! A built-in table carries the values used in the worked examples, and a
//! file can override it record by record.
//!
//! File format: UTF-8 text, one JSON object per line. Severi records are
//! `{"g": 2, "d": 4, "n": "27", "tl": "144"}` and hyperelliptic records are
//! `{"d": 5, "h": "135"}`, with all counts as decimal strings so they never
//! pass through machine words. Blank lines are ignored.

use crate::error::{Error, Result};
use crate::rat::Rat;
use std::collections::BTreeMap;
use std::path::Path;

/// Genus-2/3 Severi counts and hyperelliptic counts keyed by degree.
///
/// Degrees at or below the geometric threshold (d <= 3 for the curve
/// counts, d < 5 for the hyperelliptic ones) are identically zero and need
/// no records; degrees above the stored range are reported as missing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SeveriInputs {
    genus2: BTreeMap<u32, (Rat, Rat)>,
    genus3: BTreeMap<u32, (Rat, Rat)>,
    hyperelliptic: BTreeMap<u32, Rat>,
}

fn int(s: &str) -> Rat {
    Rat::parse_integer(s).expect("embedded table literal")
}

impl SeveriInputs {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The counts used throughout the worked examples: genus-2/3 incidence
    /// and tangency counts for d = 4..6 and the first three nonzero
    /// hyperelliptic counts.
    pub fn embedded() -> Self {
        let mut inputs = Self::empty();
        inputs.set_severi(2, 4, int("27"), int("144"));
        inputs.set_severi(2, 5, int("36855"), int("203616"));
        inputs.set_severi(2, 6, int("58444767"), int("326594238"));
        inputs.set_severi(3, 4, int("1"), int("6"));
        inputs.set_severi(3, 5, int("7915"), int("49580"));
        inputs.set_severi(3, 6, int("34435125"), int("216569034"));
        inputs.set_hyperelliptic(5, int("135"));
        inputs.set_hyperelliptic(6, int("3929499"));
        inputs.set_hyperelliptic(7, int("23875461099"));
        inputs
    }

    pub fn set_severi(&mut self, genus: u8, d: u32, n: Rat, tl: Rat) {
        let map = match genus {
            2 => &mut self.genus2,
            3 => &mut self.genus3,
            _ => panic!("severi records exist only for genus 2 and 3"),
        };
        map.insert(d, (n, tl));
    }

    pub fn set_hyperelliptic(&mut self, d: u32, h: Rat) {
        self.hyperelliptic.insert(d, h);
    }

    /// Overlay `other` on `self`, record by record.
    pub fn merge(&mut self, other: SeveriInputs) {
        self.genus2.extend(other.genus2);
        self.genus3.extend(other.genus3);
        self.hyperelliptic.extend(other.hyperelliptic);
    }

    fn table(&self, genus: u8) -> Result<&BTreeMap<u32, (Rat, Rat)>> {
        match genus {
            2 => Ok(&self.genus2),
            3 => Ok(&self.genus3),
            _ => Err(Error::InvalidGenus(genus as i64)),
        }
    }

    /// N^{d,g}: irreducible genus-g degree-d curves through 3d+g-1 points.
    pub fn n(&self, genus: u8, d: u32) -> Result<Rat> {
        if d <= 3 {
            self.table(genus)?;
            return Ok(Rat::zero());
        }
        match self.table(genus)?.get(&d) {
            Some((n, _)) => Ok(n.clone()),
            None => Err(Error::MissingInput(format!(
                "incidence count for genus {genus}, degree {d}"
            ))),
        }
    }

    /// TL^{d,g}: genus-g degree-d curves through 3d+g-2 points tangent to a
    /// fixed line.
    pub fn tl(&self, genus: u8, d: u32) -> Result<Rat> {
        if d <= 3 {
            self.table(genus)?;
            return Ok(Rat::zero());
        }
        match self.table(genus)?.get(&d) {
            Some((_, tl)) => Ok(tl.clone()),
            None => Err(Error::MissingInput(format!(
                "tangency count for genus {genus}, degree {d}"
            ))),
        }
    }

    /// H_d: genus-3 hyperelliptic plane curves through 3d+1 points.
    pub fn hyperelliptic(&self, d: u32) -> Result<Rat> {
        if d < 5 {
            return Ok(Rat::zero());
        }
        match self.hyperelliptic.get(&d) {
            Some(h) => Ok(h.clone()),
            None => Err(Error::MissingInput(format!(
                "hyperelliptic count for degree {d}"
            ))),
        }
    }

    /// Parse a record file. Counts must be nonnegative, and records below
    /// the zero threshold must actually be zero.
    pub fn parse(text: &str) -> Result<Self> {
        let mut inputs = Self::empty();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let value: serde_json::Value = serde_json::from_str(line)
                .map_err(|e| Error::InputFormat(format!("line {line_no}: {e}")))?;
            let obj = value
                .as_object()
                .ok_or_else(|| Error::InputFormat(format!("line {line_no}: not an object")))?;

            let field = |name: &str| -> Result<&serde_json::Value> {
                obj.get(name).ok_or_else(|| {
                    Error::InputFormat(format!("line {line_no}: missing field \"{name}\""))
                })
            };
            let count = |name: &str| -> Result<Rat> {
                let raw = field(name)?.as_str().ok_or_else(|| {
                    Error::InputFormat(format!(
                        "line {line_no}: field \"{name}\" must be a decimal string"
                    ))
                })?;
                let v = Rat::parse_integer(raw).ok_or_else(|| {
                    Error::InputFormat(format!(
                        "line {line_no}: field \"{name}\" is not a decimal integer"
                    ))
                })?;
                if v.is_negative() {
                    return Err(Error::InputFormat(format!(
                        "line {line_no}: count \"{name}\" must be nonnegative"
                    )));
                }
                Ok(v)
            };
            let degree = |v: &serde_json::Value| -> Result<u32> {
                v.as_u64()
                    .and_then(|d| u32::try_from(d).ok())
                    .filter(|d| *d >= 1)
                    .ok_or_else(|| Error::InputFormat(format!("line {line_no}: bad degree")))
            };

            if obj.contains_key("h") {
                let d = degree(field("d")?)?;
                let h = count("h")?;
                if d < 5 && !h.is_zero() {
                    return Err(Error::InputFormat(format!(
                        "line {line_no}: hyperelliptic count must be 0 for d < 5"
                    )));
                }
                inputs.set_hyperelliptic(d, h);
            } else {
                let g = field("g")?
                    .as_u64()
                    .filter(|g| *g == 2 || *g == 3)
                    .ok_or_else(|| {
                        Error::InputFormat(format!("line {line_no}: genus must be 2 or 3"))
                    })? as u8;
                let d = degree(field("d")?)?;
                let n = count("n")?;
                let tl = count("tl")?;
                if d <= 3 && !(n.is_zero() && tl.is_zero()) {
                    return Err(Error::InputFormat(format!(
                        "line {line_no}: genus {g} counts must be 0 for d <= 3"
                    )));
                }
                inputs.set_severi(g, d, n, tl);
            }
        }
        Ok(inputs)
    }

    /// Embedded defaults overlaid with the records in `path`.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InputFormat(format!("{}: {e}", path.display())))?;
        let mut inputs = Self::embedded();
        inputs.merge(Self::parse(&text)?);
        Ok(inputs)
    }
}
