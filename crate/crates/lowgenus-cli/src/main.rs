//! Command-line surface for the plane-curve counting library.
//!
//! One subcommand per curve family plus `codim1` for Severi-variety
//! invariants and `verify` for the golden-table regression run. Exit codes:
//! 0 success, 1 domain error, 2 usage error, 3 verification failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use lowgenus::exec::{map_collect, ExecMode};
use lowgenus::{verify, Codim1Report, Error, JClass, MemoStore, Rat, SeveriInputs};
use lowgenus_cli::output::{
    render, Format, OutputRecord, FLAG_CONJECTURAL, FLAG_FORMAL, FLAG_RECONSTRUCTED,
};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "lowgenus",
    version,
    about = "Exact counts of low-genus plane curves: characteristic numbers, \
             branched covers, and Severi-variety invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Counts of irreducible rational plane curves (R_d)
    Rational(FamilyArgs),
    /// Rational curves with a node at a fixed point (NP_d)
    NodePoint(FamilyArgs),
    /// Rational curves with a node on a fixed line (NL_d)
    NodeLine(FamilyArgs),
    /// Counts of irreducible elliptic plane curves (E_d)
    Elliptic(FamilyArgs),
    /// Elliptic curves with fixed j-invariant (J_d)
    FixedJ(FixedJArgs),
    /// Covers of the line with simple fixed branch points (M^g_d)
    Hurwitz(HurwitzArgs),
    /// Divisor degrees and codimension-1 Severi-variety invariants
    Codim1(Codim1Args),
    /// Replay every embedded published table and report pass/fail
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Args)]
struct FamilyArgs {
    /// Degree of the curves
    #[arg(long)]
    d: u32,
    /// Print the full characteristic-number table, ordered by descending
    /// incidence count, instead of the incidence-only scalar
    #[arg(long = "char")]
    char_table: bool,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum JArg {
    Generic,
    #[value(name = "0")]
    J0,
    #[value(name = "1728")]
    J1728,
}

#[derive(Args)]
struct FixedJArgs {
    #[command(flatten)]
    family: FamilyArgs,
    /// Which j-invariant: the special values carry automorphism factors
    #[arg(long = "j", value_enum, default_value_t = JArg::Generic)]
    j: JArg,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("range").required(true))]
struct HurwitzArgs {
    /// Genus of the covering curves (0, 1, or the conjectural 2)
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
    genus: u8,
    /// Single degree
    #[arg(long, group = "range")]
    d: Option<u32>,
    /// All degrees from 1 up to this bound
    #[arg(long, group = "range")]
    max_d: Option<u32>,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("range").required(true))]
struct Codim1Args {
    /// Geometric genus of the curves (0 through 3)
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
    genus: u8,
    /// Single degree
    #[arg(long, group = "range")]
    d: Option<u32>,
    /// All degrees from 1 up to this bound
    #[arg(long, group = "range")]
    max_d: Option<u32>,
    /// Severi input records overriding the embedded genus-2/3 counts
    #[arg(long)]
    severi_inputs: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyFormatArg {
    Table,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = VerifyFormatArg::Table)]
    format: VerifyFormatArg,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Rational(args) => family(Family::Rational, args),
        Command::NodePoint(args) => family(Family::NodePoint, args),
        Command::NodeLine(args) => family(Family::NodeLine, args),
        Command::Elliptic(args) => family(Family::Elliptic, args),
        Command::FixedJ(args) => fixed_j(args),
        Command::Hurwitz(args) => hurwitz(args),
        Command::Codim1(args) => codim1(args),
        Command::Verify(args) => Ok(run_verify(args)),
    }
}

enum Family {
    Rational,
    NodePoint,
    NodeLine,
    Elliptic,
}

fn family(which: Family, args: FamilyArgs) -> Result<ExitCode, Error> {
    let mut store = MemoStore::new();
    let d = args.d;
    let (quantity, genus, dim_offset): (&str, u8, i64) = match which {
        Family::Rational => ("R", 0, -1),
        Family::NodePoint => ("NP", 0, -3),
        Family::NodeLine => ("NL", 0, -2),
        Family::Elliptic => ("E", 1, 0),
    };

    let mut records = Vec::new();
    if args.char_table {
        let dim = checked_dimension(d, dim_offset)?;
        for b in 0..=dim {
            let a = dim - b;
            let value = match which {
                Family::Rational => store.rchar(d, a, b)?,
                Family::NodePoint => store.npchar(d, a, b)?,
                Family::NodeLine => store.nl(d, a, b)?,
                Family::Elliptic => store.echar(d, a, b)?,
            };
            records.push(OutputRecord::new(quantity, genus, d, value).at(a, b));
        }
    } else {
        match which {
            Family::Rational => {
                records.push(OutputRecord::new("R", 0, d, store.rd(d)?));
            }
            Family::NodePoint => {
                records.push(OutputRecord::new("NP", 0, d, store.npd(d)?));
            }
            Family::Elliptic => {
                records.push(OutputRecord::new("E", 1, d, store.ed(d)?));
            }
            Family::NodeLine => {
                let dim = checked_dimension(d, -2)?;
                let value = store.nl(d, dim, 0)?;
                records.push(OutputRecord::new("NL", 0, d, value).at(dim, 0));
            }
        }
    }
    print!("{}", render(&records, args.format.into(), false));
    Ok(ExitCode::SUCCESS)
}

/// a + b for the family, rejecting degrees where it would be negative.
fn checked_dimension(d: u32, offset: i64) -> Result<u32, Error> {
    let dim = 3 * d as i64 + offset;
    if d < 1 || dim < 0 {
        return Err(Error::invalid_degree(d as i64, 1));
    }
    Ok(dim as u32)
}

fn fixed_j(args: FixedJArgs) -> Result<ExitCode, Error> {
    let mut store = MemoStore::new();
    let d = args.family.d;
    let (class, quantity) = match args.j {
        JArg::Generic => (JClass::Generic, "J"),
        JArg::J0 => (JClass::J0, "J0"),
        JArg::J1728 => (JClass::J1728, "J1728"),
    };
    let dim = checked_dimension(d, -1)?;
    let formal = d < 3;

    let mut records = Vec::new();
    let mut push = |a: u32, b: u32, value: Rat| {
        records.push(
            OutputRecord::new(quantity, 1, d, value)
                .at(a, b)
                .flag_if(formal, FLAG_FORMAL),
        );
    };
    if args.family.char_table {
        for b in 0..=dim {
            let a = dim - b;
            let value = store.jchar_special(class, d, a, b)?;
            push(a, b, value);
        }
    } else {
        let value = store.jchar_special(class, d, dim, 0)?;
        push(dim, 0, value);
    }
    print!("{}", render(&records, args.family.format.into(), false));
    Ok(ExitCode::SUCCESS)
}

fn hurwitz(args: HurwitzArgs) -> Result<ExitCode, Error> {
    let mut store = MemoStore::new();
    let ds: Vec<u32> = match (args.d, args.max_d) {
        (Some(d), _) => vec![d],
        (None, Some(max_d)) => (1..=max_d).collect(),
        (None, None) => unreachable!("clap enforces the group"),
    };
    let quantity = match args.genus {
        0 => "M0",
        1 => "M1",
        2 => "M2",
        g => return Err(Error::InvalidGenus(g as i64)),
    };
    let mut records = Vec::new();
    for d in ds {
        let value = match args.genus {
            0 => store.m0(d)?,
            1 => store.m1(d)?,
            _ => store.m2(d)?,
        };
        records.push(
            OutputRecord::new(quantity, args.genus, d, value)
                .flag_if(args.genus == 2, FLAG_CONJECTURAL),
        );
    }
    print!("{}", render(&records, args.format.into(), false));
    Ok(ExitCode::SUCCESS)
}

fn codim1(args: Codim1Args) -> Result<ExitCode, Error> {
    let inputs = match &args.severi_inputs {
        Some(path) => SeveriInputs::load(path)?,
        None => SeveriInputs::embedded(),
    };
    let ds: Vec<u32> = match (args.d, args.max_d) {
        (Some(d), _) => vec![d],
        (None, Some(max_d)) => (1..=max_d).collect(),
        (None, None) => unreachable!("clap enforces the group"),
    };
    let genus = args.genus;

    // independent (genus, d) computations, each with its own store
    let reports = map_collect(ExecMode::preferred(), ds, |d| {
        MemoStore::new().report(genus, d, &inputs)
    });

    let mut records = Vec::new();
    for report in reports {
        records.extend(report_records(&report?));
    }
    print!("{}", render(&records, args.format.into(), true));
    Ok(ExitCode::SUCCESS)
}

fn report_records(report: &Codim1Report) -> Vec<OutputRecord> {
    let deg = &report.degrees;
    let (genus, d) = (deg.genus, deg.d);
    // genus-1 families are enumeratively meaningful from degree 3 up
    let formal = genus == 1 && d < 3;
    let reconstructed = report.delta_reconstructed;
    let rec = |quantity: &str, value: &Rat| {
        OutputRecord::new(quantity, genus, d, value.clone()).flag_if(formal, FLAG_FORMAL)
    };

    let mut records = vec![
        rec("A", &deg.a),
        rec("B", &deg.b),
        rec("C", &deg.c),
        rec("Delta", &deg.delta).flag_if(reconstructed, FLAG_RECONSTRUCTED),
        rec("TL", &deg.tl),
        rec("CU", &report.cusps).flag_if(reconstructed, FLAG_RECONSTRUCTED),
    ];
    if let Some(triple) = &report.triple {
        records.push(rec("triple", triple).flag_if(d < 3, FLAG_FORMAL));
    }
    records.push(rec("g-hat", &report.g_hat).flag_if(reconstructed, FLAG_RECONSTRUCTED));
    records.push(rec("g", &report.g_arith).flag_if(reconstructed, FLAG_RECONSTRUCTED));
    if let Some(g_tilde) = &report.g_tilde {
        records.push(rec("g-tilde", g_tilde));
    }
    records
}

fn run_verify(args: VerifyArgs) -> ExitCode {
    let report = verify::run(&SeveriInputs::embedded(), ExecMode::preferred());
    match args.format {
        VerifyFormatArg::Json => println!("{}", report.to_json()),
        VerifyFormatArg::Table => {
            for item in &report.items {
                if item.passed {
                    println!("PASS {}", item.name);
                } else {
                    println!(
                        "FAIL {} ({})",
                        item.name,
                        item.detail.as_deref().unwrap_or("mismatch")
                    );
                }
            }
            let passed = report.items.iter().filter(|i| i.passed).count();
            println!("{passed}/{} tables verified", report.items.len());
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    }
}
