//! One row of tool output, and the table/json/csv renderings.
//!
//! Values serialize losslessly: JSON carries {"num","den"} decimal strings
//! and CSV carries separate num/den columns, so a record parsed back
//! reproduces the exact rational.

use lowgenus::Rat;
use serde::{Deserialize, Serialize};

pub const FLAG_CONJECTURAL: &str = "conjectural";
pub const FLAG_RECONSTRUCTED: &str = "reconstructed-formula";
pub const FLAG_FORMAL: &str = "formal";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub quantity: String,
    pub genus: u8,
    pub d: u32,
    pub a: Option<u32>,
    pub b: Option<u32>,
    pub value: Rat,
    pub flags: Vec<String>,
}

impl OutputRecord {
    pub fn new(quantity: &str, genus: u8, d: u32, value: Rat) -> Self {
        OutputRecord {
            quantity: quantity.to_string(),
            genus,
            d,
            a: None,
            b: None,
            value,
            flags: Vec::new(),
        }
    }

    pub fn at(mut self, a: u32, b: u32) -> Self {
        self.a = Some(a);
        self.b = Some(b);
        self
    }

    pub fn flag(mut self, flag: &str) -> Self {
        self.flags.push(flag.to_string());
        self
    }

    pub fn flag_if(self, cond: bool, flag: &str) -> Self {
        if cond {
            self.flag(flag)
        } else {
            self
        }
    }

    /// Human-readable label: `R_3`, `E_2(6,0)`, `|Delta|`, `M2_4`, ...
    pub fn label(&self) -> String {
        match self.quantity.as_str() {
            "R" | "NP" | "NL" | "E" | "J" | "J0" | "J1728" | "M0" | "M1" | "M2" => {
                let base = format!("{}_{}", self.quantity, self.d);
                match (self.a, self.b) {
                    (Some(a), Some(b)) => format!("{base}({a},{b})"),
                    _ => base,
                }
            }
            q @ ("A" | "B" | "C" | "Delta" | "TL" | "CU") => format!("|{q}|"),
            q => q.to_string(),
        }
    }

    fn table_line(&self) -> String {
        let mut line = format!("{} = {}", self.label(), self.value);
        if !self.flags.is_empty() {
            line.push_str(&format!(" ({})", self.flags.join(", ")));
        }
        line
    }

    fn csv_line(&self) -> String {
        let opt = |v: Option<u32>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{}",
            self.quantity,
            self.genus,
            self.d,
            opt(self.a),
            opt(self.b),
            self.value.numer(),
            self.value.denom(),
            self.flags.join(";")
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

pub const CSV_HEADER: &str = "quantity,genus,d,a,b,num,den,flags";

/// Render records in the requested format. Table mode prefixes each group
/// of codimension-1 rows with a `genus g, degree d` heading.
pub fn render(records: &[OutputRecord], format: Format, group_codim1: bool) -> String {
    match format {
        Format::Table => {
            let mut out = String::new();
            let mut current_group: Option<(u8, u32)> = None;
            for r in records {
                if group_codim1 {
                    let group = (r.genus, r.d);
                    if current_group != Some(group) {
                        if current_group.is_some() {
                            out.push('\n');
                        }
                        out.push_str(&format!("genus {}, degree {}\n", r.genus, r.d));
                        current_group = Some(group);
                    }
                    out.push_str("  ");
                }
                out.push_str(&r.table_line());
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut out = serde_json::to_string_pretty(records).expect("record serialization");
            out.push('\n');
            out
        }
        Format::Csv => {
            let mut out = String::from(CSV_HEADER);
            out.push('\n');
            for r in records {
                out.push_str(&r.csv_line());
                out.push('\n');
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels() {
        let r = OutputRecord::new("R", 0, 3, Rat::from(12i64));
        assert_eq!(r.label(), "R_3");
        let r = OutputRecord::new("E", 1, 2, Rat::frac(45, 2)).at(0, 6);
        assert_eq!(r.label(), "E_2(0,6)");
        let r = OutputRecord::new("Delta", 3, 4, Rat::from(27i64));
        assert_eq!(r.label(), "|Delta|");
        let r = OutputRecord::new("g-hat", 2, 4, Rat::from(28i64));
        assert_eq!(r.label(), "g-hat");
    }

    #[test]
    fn json_round_trip_preserves_rationals() {
        let records = vec![
            OutputRecord::new("E", 1, 2, Rat::frac(45, 2)).at(0, 6),
            OutputRecord::new("M2", 2, 3, Rat::from(364i64)).flag(FLAG_CONJECTURAL),
        ];
        let json = render(&records, Format::Json, false);
        let back: Vec<OutputRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, records);
    }

    #[test]
    fn csv_columns() {
        let r = OutputRecord::new("E", 1, 2, Rat::frac(45, 2)).at(0, 6);
        assert_eq!(r.csv_line(), "E,1,2,0,6,45,2,");
        let r = OutputRecord::new("M2", 2, 4, Rat::from(7i64)).flag(FLAG_CONJECTURAL);
        assert_eq!(r.csv_line(), "M2,2,4,,,7,1,conjectural");
    }

    #[test]
    fn table_flags_are_visible() {
        let r = OutputRecord::new("M2", 2, 4, Rat::from(7i64)).flag(FLAG_CONJECTURAL);
        assert_eq!(r.table_line(), "M2_4 = 7 (conjectural)");
    }
}
