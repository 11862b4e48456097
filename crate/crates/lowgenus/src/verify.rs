//! Golden-table verification: replays every published numeric table as a
//! regression suite.
//!
//! Covered: the four elliptic characteristic lists (conics through
//! quintics), the three fixed-j lists, the two genus-1 sectional-genus
//! lists, the six genus-2/3 table columns, and the closed-form equivalence
//! for genus-0 cover counts. Every comparison is exact.

use crate::exec::{map_collect, ExecMode};
use crate::hurwitz::m0_closed;
use crate::inputs::SeveriInputs;
use crate::rat::Rat;
use crate::store::MemoStore;
use serde::Serialize;

/// Elliptic characteristic numbers E_d(a, b), a descending from 3d.
const ELLIPTIC_CONICS: &[&str] = &["0", "0", "0", "0", "2", "10", "45/2"];
const ELLIPTIC_CUBICS: &[&str] = &[
    "1", "4", "16", "64", "256", "976", "3424", "9766", "21004", "33616",
];
const ELLIPTIC_QUARTICS: &[&str] = &[
    "225",
    "1010",
    "4396",
    "18432",
    "73920",
    "280560",
    "994320",
    "3230956",
    "9409052",
    "23771160",
    "50569520",
    "89120080",
    "129996216",
];
const ELLIPTIC_QUINTICS: &[&str] = &[
    "87192",
    "411376",
    "1873388",
    "8197344",
    "34294992",
    "136396752",
    "512271756",
    "1802742368",
    "5889847264",
    "17668868832",
    "48034104112",
    "116575540736",
    "248984451648",
    "463227482784",
    "747546215472",
    "1048687299072",
];

/// Fixed-j characteristic numbers J_d(a, b), a descending from 3d - 1.
const FIXED_J_CONICS: &[&str] = &["0", "0", "0", "12", "48", "75"];
const FIXED_J_CUBICS: &[&str] = &[
    "12", "48", "192", "768", "2784", "8832", "21828", "39072", "50448",
];
const FIXED_J_QUARTICS: &[&str] = &[
    "1860",
    "8088",
    "33792",
    "134208",
    "497952",
    "1696320",
    "5193768",
    "13954512",
    "31849968",
    "60019872",
    "92165280",
    "115892448",
];

/// Genus-1 sectional genera for d = 3 ..= 7.
const GENUS1_GEOMETRIC: &[&str] = &["0", "486", "410439", "395296561", "534578574561"];
const GENUS1_ARITHMETIC: &[&str] = &["0", "2676", "1440874", "1117718773", "1317320595961"];

/// Genus-2/3 table columns: (genus, d, [A, B, C, Delta, TL, CU, g-hat, g]).
const GENUS23_COLUMNS: &[(u8, u32, [&str; 8])] = &[
    (2, 4, ["27", "117", "90", "450", "144", "72", "28", "325"]),
    (
        2,
        5,
        [
            "36855", "166761", "75852", "447300", "203616", "239400", "166321", "762994",
        ],
    ),
    (
        2,
        6,
        [
            "58444767",
            "268149471",
            "73644975",
            "547180713",
            "326594238",
            "506246976",
            "420645826",
            "1410743814",
        ],
    ),
    (3, 4, ["1", "5", "9", "27", "6", "0", "0", "0"]),
    (
        3,
        5,
        [
            "7915", "41665", "48840", "147900", "49580", "49680", "30906", "191511",
        ],
    ),
    (
        3,
        6,
        [
            "34435125",
            "182133909",
            "154231695",
            "474418485",
            "216569034",
            "329520312",
            "251620624",
            "995749561",
        ],
    ),
];

const HURWITZ_CLOSED_FORM_MAX_D: u32 = 15;

/// Result of one verification item.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyItem {
    pub name: String,
    pub passed: bool,
    /// Computed values, in the order of the published list.
    pub values: Vec<String>,
    /// Set on failure: the first mismatching position.
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub items: Vec<VerifyItem>,
    pub passed: bool,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.passed
    }

    /// Deterministic JSON rendering; identical runs are byte-identical.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}

fn check(name: &str, computed: Vec<(String, Rat)>, expected: &[&str]) -> VerifyItem {
    assert_eq!(computed.len(), expected.len(), "golden table shape: {name}");
    let mut detail = None;
    for ((label, got), want) in computed.iter().zip(expected.iter()) {
        let want = Rat::parse(want).expect("golden table literal");
        if *got != want {
            detail = Some(format!("{label}: computed {got}, published {want}"));
            break;
        }
    }
    VerifyItem {
        name: name.to_string(),
        passed: detail.is_none(),
        values: computed.into_iter().map(|(_, v)| v.to_string()).collect(),
        detail,
    }
}

fn elliptic_item(d: u32, expected: &[&str]) -> VerifyItem {
    let mut store = MemoStore::new();
    let dim = 3 * d;
    let computed = (0..=dim)
        .map(|b| {
            let a = dim - b;
            (format!("E_{d}({a},{b})"), store.echar_inner(d, a, b))
        })
        .collect();
    check(&format!("elliptic-characteristic-d{d}"), computed, expected)
}

fn fixed_j_item(d: u32, expected: &[&str]) -> VerifyItem {
    let mut store = MemoStore::new();
    let dim = 3 * d - 1;
    let computed = (0..=dim)
        .map(|b| {
            let a = dim - b;
            (
                format!("J_{d}({a},{b})"),
                store.jchar_inner(d, a as i64, b as i64),
            )
        })
        .collect();
    check(&format!("fixed-j-characteristic-d{d}"), computed, expected)
}

fn genus1_sectional_item(arithmetic: bool, expected: &[&str]) -> VerifyItem {
    let mut store = MemoStore::new();
    let inputs = SeveriInputs::empty();
    let (tag, f): (_, fn(&mut MemoStore, &SeveriInputs, u32) -> Rat) = if arithmetic {
        ("arithmetic", |s, i, d| {
            s.sectional_arithmetic(1, d, i).expect("genus-1 sectional")
        })
    } else {
        ("geometric", |s, i, d| {
            s.sectional_geometric(1, d, i).expect("genus-1 sectional")
        })
    };
    let computed = (3..=7u32)
        .map(|d| (format!("d={d}"), f(&mut store, &inputs, d)))
        .collect();
    check(&format!("genus1-sectional-{tag}"), computed, expected)
}

fn genus23_column_item(inputs: &SeveriInputs, genus: u8, d: u32, expected: &[&str]) -> VerifyItem {
    let name = format!("genus{genus}-column-d{d}");
    let mut store = MemoStore::new();
    match store.report(genus, d, inputs) {
        Ok(report) => {
            let deg = &report.degrees;
            let computed = vec![
                ("A".to_string(), deg.a.clone()),
                ("B".to_string(), deg.b.clone()),
                ("C".to_string(), deg.c.clone()),
                ("Delta".to_string(), deg.delta.clone()),
                ("TL".to_string(), deg.tl.clone()),
                ("CU".to_string(), report.cusps.clone()),
                ("g-hat".to_string(), report.g_hat.clone()),
                ("g".to_string(), report.g_arith.clone()),
            ];
            check(&name, computed, expected)
        }
        Err(e) => VerifyItem {
            name,
            passed: false,
            values: Vec::new(),
            detail: Some(e.to_string()),
        },
    }
}

fn hurwitz_item() -> VerifyItem {
    let mut store = MemoStore::new();
    let mut detail = None;
    let mut values = Vec::new();
    for d in 1..=HURWITZ_CLOSED_FORM_MAX_D {
        let recursive = store.m0_inner(d);
        let closed = m0_closed(d).expect("closed form");
        values.push(recursive.to_string());
        if recursive != closed && detail.is_none() {
            detail = Some(format!(
                "d={d}: recursion gives {recursive}, closed form gives {closed}"
            ));
        }
    }
    VerifyItem {
        name: "hurwitz-closed-form".to_string(),
        passed: detail.is_none(),
        values,
        detail,
    }
}

enum Task {
    Elliptic(u32, &'static [&'static str]),
    FixedJ(u32, &'static [&'static str]),
    Genus1Sectional(bool, &'static [&'static str]),
    Genus23Column(u8, u32, &'static [&'static str; 8]),
    Hurwitz,
}

impl Task {
    fn run(&self, inputs: &SeveriInputs) -> VerifyItem {
        match self {
            Task::Elliptic(d, expected) => elliptic_item(*d, expected),
            Task::FixedJ(d, expected) => fixed_j_item(*d, expected),
            Task::Genus1Sectional(arith, expected) => genus1_sectional_item(*arith, expected),
            Task::Genus23Column(g, d, expected) => {
                genus23_column_item(inputs, *g, *d, &expected[..])
            }
            Task::Hurwitz => hurwitz_item(),
        }
    }
}

fn tasks() -> Vec<Task> {
    let mut tasks = vec![
        Task::Elliptic(2, ELLIPTIC_CONICS),
        Task::Elliptic(3, ELLIPTIC_CUBICS),
        Task::Elliptic(4, ELLIPTIC_QUARTICS),
        Task::Elliptic(5, ELLIPTIC_QUINTICS),
        Task::FixedJ(2, FIXED_J_CONICS),
        Task::FixedJ(3, FIXED_J_CUBICS),
        Task::FixedJ(4, FIXED_J_QUARTICS),
        Task::Genus1Sectional(false, GENUS1_GEOMETRIC),
        Task::Genus1Sectional(true, GENUS1_ARITHMETIC),
    ];
    for (g, d, expected) in GENUS23_COLUMNS {
        tasks.push(Task::Genus23Column(*g, *d, expected));
    }
    tasks.push(Task::Hurwitz);
    tasks
}

/// Run every verification item. Each item computes in its own memo store,
/// so the mode cannot affect any value and the report is byte-identical
/// across runs and modes.
pub fn run(inputs: &SeveriInputs, mode: ExecMode) -> VerifyReport {
    let items = map_collect(mode, tasks(), |task| task.run(inputs));
    let passed = items.iter().all(|item| item.passed);
    VerifyReport { items, passed }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_tables_pass() {
        let report = run(&SeveriInputs::embedded(), ExecMode::Sequential);
        for item in &report.items {
            assert!(item.passed, "{}: {:?}", item.name, item.detail);
        }
        assert!(report.all_passed());
        assert_eq!(report.items.len(), 16);
    }

    #[test]
    fn json_is_deterministic() {
        let inputs = SeveriInputs::embedded();
        let a = run(&inputs, ExecMode::Sequential).to_json();
        let b = run(&inputs, ExecMode::Sequential).to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn mismatch_is_fatal_and_reported() {
        // a corrupted input table must fail the genus-2/3 columns
        let mut inputs = SeveriInputs::embedded();
        inputs.set_severi(2, 4, Rat::from(28i64), Rat::from(144i64));
        let report = run(&inputs, ExecMode::Sequential);
        assert!(!report.all_passed());
        let item = report
            .items
            .iter()
            .find(|i| i.name == "genus2-column-d4")
            .unwrap();
        assert!(!item.passed);
        assert!(item.detail.as_deref().unwrap().contains("computed"));
    }
}
