//! Command-line interface for counting, enumerating and verifying
//! homomorphisms of finite cyclic groups and their direct products.
//!
//! Product groups are written as comma-separated moduli (`4,6`); a single
//! integer denotes a cyclic group. Exit codes: 0 success, 1 verification
//! disagreement, 2 usage or precondition error.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use homcount::divisibility::{self, ClassificationRecord};
use homcount::products::{self, ProductGroup};
use homcount::report::CYCLIC_CSV_HEADER;
use homcount::{arith, cyclic, BigUint, Error, DEFAULT_WORK_BUDGET, MAX_WORK_BUDGET};

const EXIT_DISAGREEMENT: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "homcount",
    version,
    about = "Exact homomorphism counts for finite cyclic groups and their direct products"
)]
struct Cli {
    /// Payload format for classify and verify
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Write the payload to PATH instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    /// Cross-check counts against their brute-force oracles
    #[arg(long, global = true)]
    oracle: bool,

    /// Override the enumeration work budget (clamped to 10^9)
    #[arg(long, global = true, value_name = "N")]
    max_work: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Jsonl,
    Csv,
}

/// One cyclic modulus, or a comma-separated product of them.
#[derive(Clone, Debug)]
struct GroupSpec(Vec<u64>);

impl FromStr for GroupSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let moduli = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|e| format!("bad modulus {part:?}: {e}"))
            })
            .collect::<Result<Vec<u64>, String>>()?;
        if moduli.contains(&0) {
            return Err("moduli must be positive".into());
        }
        Ok(GroupSpec(moduli))
    }
}

impl GroupSpec {
    fn single(&self) -> Option<u64> {
        match self.0.as_slice() {
            [m] => Some(*m),
            _ => None,
        }
    }

    fn group(&self) -> Result<ProductGroup, Error> {
        ProductGroup::new(self.0.clone())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a homomorphism or idempotent count
    Count {
        #[command(subcommand)]
        kind: CountKind,
    },
    /// List witnesses, one per line, in canonical ascending order
    Enumerate {
        #[command(subcommand)]
        kind: EnumerateKind,
    },
    /// Print the divisibility classification record for one modulus
    Classify { n: u64 },
    /// Run a verification sweep and emit its report
    Verify {
        #[command(subcommand)]
        scope: VerifyScope,
    },
}

#[derive(Subcommand)]
enum CountKind {
    /// Surjective group homomorphisms from SOURCE onto TARGET
    SurjGroup {
        source: GroupSpec,
        target: GroupSpec,
    },
    /// Ring homomorphisms Z_m -> Z_n
    Ring {
        source_modulus: u64,
        target_modulus: u64,
    },
    /// Idempotent elements of Z_n or of a product group
    Idempotents { group: GroupSpec },
    /// Elements of the given order in a group
    OrderD { group: GroupSpec, order: u64 },
    /// Elements of maximal order in a group
    MaxOrder { group: GroupSpec },
}

#[derive(Subcommand)]
enum EnumerateKind {
    /// Group homomorphisms Z_m -> Z_n, as generator images
    Homs {
        source_modulus: u64,
        target_modulus: u64,
    },
    /// Ring homomorphisms Z_m -> Z_n, as generator images
    RingHoms {
        source_modulus: u64,
        target_modulus: u64,
    },
    /// Idempotents of Z_n or of a product group
    Idempotents { group: GroupSpec },
}

#[derive(Subcommand)]
enum VerifyScope {
    /// Check (2^omega(n) | phi(n)) <=> not exceptional for all n up to --max
    Cyclic {
        #[arg(long)]
        max: u64,
    },
    /// Survey the product-level divisibility claim over small groups
    Products {
        #[arg(long, default_value_t = 3)]
        max_k: u64,
        #[arg(long = "max-mod", default_value_t = 12)]
        max_modulus: u64,
    },
}

enum Failure {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(Error::OracleDisagreement(_)) => EXIT_DISAGREEMENT,
            _ => EXIT_USAGE,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Lib(e) => e.to_string(),
            Failure::Io(e) => e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.exit_code())
        }
    }
}

fn run(cli: &Cli) -> Result<u8, Failure> {
    let budget = cli
        .max_work
        .map(|n| n.min(MAX_WORK_BUDGET))
        .unwrap_or(DEFAULT_WORK_BUDGET);
    let mut out: Box<dyn Write> = match &cli.output {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(io::stdout().lock()),
    };
    let code = match &cli.command {
        Command::Count { kind } => cmd_count(kind, cli.oracle, budget, &mut out)?,
        Command::Enumerate { kind } => cmd_enumerate(kind, budget, &mut out)?,
        Command::Classify { n } => cmd_classify(*n, cli.format, &mut out)?,
        Command::Verify { scope } => cmd_verify(scope, cli.format, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

/// Outcome of an opt-in oracle cross-check.
enum OracleOutcome {
    Agree,
    Unverified(String),
    Disagree(String),
}

fn print_oracle(outcome: OracleOutcome, out: &mut dyn Write) -> Result<u8, Failure> {
    match outcome {
        OracleOutcome::Agree => {
            writeln!(out, "oracle: agree")?;
            Ok(0)
        }
        OracleOutcome::Unverified(reason) => {
            writeln!(out, "oracle: unverified ({reason})")?;
            Ok(0)
        }
        OracleOutcome::Disagree(detail) => {
            writeln!(out, "oracle: DISAGREEMENT ({detail})")?;
            Ok(EXIT_DISAGREEMENT)
        }
    }
}

fn check(expected: &BigUint, oracle_count: u64) -> OracleOutcome {
    let oracle = BigUint::from(oracle_count);
    if *expected == oracle {
        OracleOutcome::Agree
    } else {
        OracleOutcome::Disagree(format!("closed form {expected}, oracle {oracle}"))
    }
}

fn over_budget(work: u128, budget: u64) -> Option<OracleOutcome> {
    (work > budget as u128)
        .then(|| OracleOutcome::Unverified(format!("work {work} exceeds budget {budget}")))
}

fn cmd_count(
    kind: &CountKind,
    oracle: bool,
    budget: u64,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    match kind {
        CountKind::SurjGroup { source, target } => {
            if let (Some(m), Some(n)) = (source.single(), target.single()) {
                let count = cyclic::count_surjective_group_homs(m, n)?;
                writeln!(out, "{count}")?;
                if oracle {
                    let outcome = over_budget(n as u128, budget).unwrap_or_else(|| {
                        let brute = cyclic::enumerate_group_homs(m, n)
                            .map(|ws| ws.iter().filter(|w| w.is_surjective()).count() as u64);
                        match brute {
                            Ok(b) => check(&count, b),
                            Err(e) => OracleOutcome::Unverified(e.to_string()),
                        }
                    });
                    return print_oracle(outcome, out);
                }
            } else {
                let g = source.group()?;
                let h = target.group()?;
                let result = products::count_componentwise_surjective_homs(&g, &h)?;
                if let Some(i) = result.obstruction {
                    eprintln!(
                        "note: target modulus at index {i} does not divide its source \
                         modulus; no component-wise surjection exists"
                    );
                }
                writeln!(out, "{}", result.count)?;
                if oracle {
                    let work: u128 = h.moduli().iter().map(|&n| n as u128).sum();
                    let outcome = over_budget(work, budget).unwrap_or_else(|| {
                        let mut brute = BigUint::from(1u32);
                        for (&m, &n) in g.moduli().iter().zip(h.moduli()) {
                            let per = cyclic::enumerate_group_homs(m, n)
                                .map(|ws| ws.iter().filter(|w| w.is_surjective()).count())
                                .unwrap_or(0);
                            brute *= BigUint::from(per);
                        }
                        if result.count == brute {
                            OracleOutcome::Agree
                        } else {
                            OracleOutcome::Disagree(format!(
                                "closed form {}, oracle {brute}",
                                result.count
                            ))
                        }
                    });
                    return print_oracle(outcome, out);
                }
            }
        }
        CountKind::Ring {
            source_modulus: m,
            target_modulus: n,
        } => {
            if *m == 0 || *n == 0 {
                return Err(Error::Zero.into());
            }
            if m % n == 0 {
                let count = cyclic::count_ring_homs_closed_form(*m, *n)?;
                writeln!(out, "{count}")?;
                if oracle {
                    let outcome = over_budget(*n as u128, budget).unwrap_or_else(|| {
                        check(
                            &count,
                            cyclic::enumerate_ring_homs(*m, *n).unwrap().len() as u64,
                        )
                    });
                    return print_oracle(outcome, out);
                }
            } else {
                // outside the closed form's n | m regime the enumeration is
                // the only honest count
                if *n as u128 > budget as u128 {
                    return Err(Error::BudgetExceeded {
                        required: *n as u128,
                        budget,
                    }
                    .into());
                }
                let count = cyclic::enumerate_ring_homs(*m, *n)?.len();
                writeln!(out, "{count}")?;
                if oracle {
                    return print_oracle(OracleOutcome::Agree, out);
                }
            }
        }
        CountKind::Idempotents { group } => {
            if let Some(n) = group.single() {
                if n == 0 {
                    return Err(Error::Zero.into());
                }
                let count = arith::pow2(arith::omega(n)? as u64);
                writeln!(out, "{count}")?;
                if oracle {
                    let outcome = over_budget(n as u128, budget).unwrap_or_else(|| {
                        check(
                            &count,
                            cyclic::enumerate_idempotents(n).unwrap().len() as u64,
                        )
                    });
                    return print_oracle(outcome, out);
                }
            } else {
                let r = group.group()?;
                let count = products::count_product_idempotents(&r)?;
                writeln!(out, "{count}")?;
                if oracle {
                    let outcome = match products::enumerate_product_idempotents(&r, budget) {
                        Ok(all) => check(&count, all.len() as u64),
                        Err(Error::BudgetExceeded { required, budget }) => {
                            OracleOutcome::Unverified(format!(
                                "work {required} exceeds budget {budget}"
                            ))
                        }
                        Err(e) => return Err(e.into()),
                    };
                    return print_oracle(outcome, out);
                }
            }
        }
        CountKind::OrderD { group, order } => {
            let r = group.group()?;
            let count = products::count_elements_of_order(&r, *order)?;
            writeln!(out, "{count}")?;
            if oracle {
                return print_oracle(order_scan_oracle(&r, Some(*order), &count, budget)?, out);
            }
        }
        CountKind::MaxOrder { group } => {
            let r = group.group()?;
            let count = products::count_maximal_order_elements(&r)?;
            writeln!(out, "{count}")?;
            if oracle {
                return print_oracle(order_scan_oracle(&r, None, &count, budget)?, out);
            }
        }
    }
    Ok(0)
}

/// Re-counts elements of the given order (or of maximal order when `None`)
/// by scanning the whole group.
fn order_scan_oracle(
    r: &ProductGroup,
    order: Option<u64>,
    expected: &BigUint,
    budget: u64,
) -> Result<OracleOutcome, Failure> {
    if let Some(outcome) = over_budget(r.order_u128(), budget) {
        return Ok(outcome);
    }
    let wanted = match order {
        Some(d) => d,
        None => products::group_exponent(r)?,
    };
    let mut scanned: u64 = 0;
    for e in r.elements() {
        if r.element_order(&e)? == wanted {
            scanned += 1;
        }
    }
    Ok(check(expected, scanned))
}

fn cmd_enumerate(kind: &EnumerateKind, budget: u64, out: &mut dyn Write) -> Result<u8, Failure> {
    match kind {
        EnumerateKind::Homs {
            source_modulus: m,
            target_modulus: n,
        } => {
            if *n as u128 > budget as u128 {
                return Err(Error::BudgetExceeded {
                    required: *n as u128,
                    budget,
                }
                .into());
            }
            for w in cyclic::enumerate_group_homs(*m, *n)? {
                writeln!(out, "{}", w.generator_image)?;
            }
        }
        EnumerateKind::RingHoms {
            source_modulus: m,
            target_modulus: n,
        } => {
            if *n as u128 > budget as u128 {
                return Err(Error::BudgetExceeded {
                    required: *n as u128,
                    budget,
                }
                .into());
            }
            for w in cyclic::enumerate_ring_homs(*m, *n)? {
                writeln!(out, "{}", w.generator_image)?;
            }
        }
        EnumerateKind::Idempotents { group } => {
            if let Some(n) = group.single() {
                if n as u128 > budget as u128 {
                    return Err(Error::BudgetExceeded {
                        required: n as u128,
                        budget,
                    }
                    .into());
                }
                for a in cyclic::enumerate_idempotents(n)? {
                    writeln!(out, "{a}")?;
                }
            } else {
                let r = group.group()?;
                for e in products::enumerate_product_idempotents(&r, budget)? {
                    let line = e
                        .components()
                        .iter()
                        .map(u64::to_string)
                        .collect::<Vec<_>>()
                        .join(",");
                    writeln!(out, "{line}")?;
                }
            }
        }
    }
    Ok(0)
}

fn cmd_classify(n: u64, format: Format, out: &mut dyn Write) -> Result<u8, Failure> {
    let record = divisibility::classify(n)?;
    match format {
        Format::Plain => write_classification_plain(&record, out)?,
        Format::Jsonl => writeln!(out, "{}", record.jsonl_line())?,
        Format::Csv => {
            writeln!(out, "{CYCLIC_CSV_HEADER}")?;
            writeln!(out, "{}", record.csv_line())?;
        }
    }
    Ok(0)
}

fn write_classification_plain(r: &ClassificationRecord, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "n: {}", r.n)?;
    writeln!(out, "omega: {}", r.omega)?;
    writeln!(out, "phi: {}", r.phi)?;
    writeln!(out, "ring_homs: {}", r.ring_homs)?;
    writeln!(out, "surj_homs: {}", r.surj_homs)?;
    writeln!(out, "divides: {}", r.divides)?;
    writeln!(out, "exceptional: {}", r.exceptional)?;
    writeln!(out, "agrees: {}", r.agrees)
}

fn cmd_verify(scope: &VerifyScope, format: Format, out: &mut dyn Write) -> Result<u8, Failure> {
    match scope {
        VerifyScope::Cyclic { max } => {
            let report = divisibility::sweep_cyclic(*max)?;
            match format {
                Format::Plain => writeln!(out, "{}", report.summary_line())?,
                Format::Jsonl => out.write_all(report.to_jsonl_string().as_bytes())?,
                Format::Csv => out.write_all(report.to_csv_string().as_bytes())?,
            }
            let disagreements = report.disagreements();
            if disagreements.is_empty() {
                eprintln!("{}", report.summary_line());
                Ok(0)
            } else {
                eprintln!("{}", report.summary_line());
                eprintln!("disagreeing moduli: {disagreements:?}");
                Ok(EXIT_DISAGREEMENT)
            }
        }
        VerifyScope::Products { max_k, max_modulus } => {
            let report = divisibility::sweep_products(*max_k, *max_modulus)?;
            match format {
                Format::Plain => writeln!(out, "{}", report.summary_line())?,
                Format::Jsonl => out.write_all(report.to_jsonl_string().as_bytes())?,
                Format::Csv => out.write_all(report.to_csv_string().as_bytes())?,
            }
            // divisibility failures here are findings, not bugs
            eprintln!("{}", report.summary_line());
            Ok(0)
        }
    }
}
