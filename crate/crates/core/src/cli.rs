//! Command-line front end.
//!
//! Exit codes: `0` success, `1` an implementation check found a
//! discrepancy, `2` usage, parse or precondition error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::analysis::GroupProfile;
use crate::classifier::{
    self, build_nonabelian_witness, build_nonnilpotent_witness, classify_pair, CertifiedWitness,
    ClassifierError,
};
use crate::group::{FiniteGroup, HolderPresentation};
use crate::oracle::{self, count_pairs_table, verify_pair_exhaustive_with_cap};
use crate::report::{
    count_table_tsv, histogram_inline, ClassifyResult, CountRow, GroupResult, OutputEnvelope,
    Status, SweepResult, Tsv, WitnessResult,
};

#[derive(Debug, Parser)]
#[command(
    name = "bicyclic",
    version,
    about = "Nilpotency, abelian and cyclic criteria for bicyclic groups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Default, Args)]
pub struct Format {
    /// Emit the JSON envelope
    #[arg(long, global = true, conflicts_with = "tsv")]
    pub json: bool,
    /// Emit a tab-separated table
    #[arg(long, global = true)]
    pub tsv: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the nilpotent, singular and cyclic pair criteria
    Classify {
        #[arg(value_parser = positive)]
        m: u64,
        #[arg(value_parser = positive)]
        n: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Construct and verify a non-nilpotent (or non-abelian) bicyclic group
    Witness {
        #[arg(value_parser = positive)]
        m: u64,
        #[arg(value_parser = positive)]
        n: u64,
        /// Build a nilpotent non-abelian group instead
        #[arg(long)]
        abelian_failure: bool,
        #[command(flatten)]
        format: Format,
    },
    /// Search every Hölder group of each admissible order for (m, n)-factorizations
    Verify {
        #[arg(value_parser = positive)]
        m: u64,
        #[arg(value_parser = positive)]
        n: u64,
        /// Largest m·n accepted
        #[arg(long, default_value_t = oracle::DEFAULT_EXHAUSTIVE_CAP)]
        order_cap: u64,
        #[command(flatten)]
        format: Format,
    },
    /// Case-analysis, nilpotency and structure sweeps over m, n ≤ max
    Sweep {
        #[arg(long, default_value_t = 24, value_parser = positive)]
        max: u64,
        #[arg(long, default_value_t = 600, value_parser = positive)]
        order_cap: u64,
        /// Worker threads (defaults to available parallelism)
        #[arg(long, value_parser = positive_usize)]
        workers: Option<usize>,
        #[command(flatten)]
        format: Format,
    },
    /// Exact pair counts with the asymptotic estimate for cyclic numbers
    Count {
        #[arg(long, default_value_t = 100, value_parser = positive)]
        max: u64,
        /// Emit a row every this many steps (defaults to a single row at max)
        #[arg(long, value_parser = positive)]
        table_step: Option<u64>,
        #[command(flatten)]
        format: Format,
    },
    /// Inspect the group with presentation ⟨u, v | u^m, v^n = u^s, v⁻¹uv = u^r⟩
    Group {
        m: u64,
        n: u64,
        r: u64,
        s: u64,
        #[command(flatten)]
        format: Format,
    },
}

fn positive(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be a positive integer".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn positive_usize(s: &str) -> Result<usize, String> {
    positive(s).map(|v| v as usize)
}

/// What a command produced, before formatting.
struct Outcome {
    status: Status,
    result: Value,
    text: String,
    tsv: String,
}

struct Failure(String);

impl From<ClassifierError> for Failure {
    fn from(e: ClassifierError) -> Self {
        Failure(e.to_string())
    }
}

impl From<crate::group::GroupError> for Failure {
    fn from(e: crate::group::GroupError) -> Self {
        Failure(e.to_string())
    }
}

impl From<oracle::OracleError> for Failure {
    fn from(e: oracle::OracleError) -> Self {
        Failure(e.to_string())
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// to `out`/`err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(rendered.as_bytes());
            } else {
                let _ = err.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let (name, params, format) = describe(&cli.command);
    let outcome = execute(&cli.command);
    let status = match &outcome {
        Ok(o) => o.status,
        Err(_) => Status::Error,
    };
    let written = match (outcome, format.json, format.tsv) {
        (Ok(o), true, _) => {
            writeln!(
                out,
                "{}",
                OutputEnvelope::new(name, params, o.result, o.status).to_json()
            )
        }
        (Ok(o), _, true) => out.write_all(o.tsv.as_bytes()),
        (Ok(o), _, _) => out.write_all(o.text.as_bytes()),
        (Err(Failure(msg)), true, _) => {
            writeln!(
                out,
                "{}",
                OutputEnvelope::error(name, params, &msg).to_json()
            )
        }
        (Err(Failure(msg)), _, _) => writeln!(err, "error: {msg}"),
    };
    if written.is_err() {
        return Status::Error.exit_code();
    }
    status.exit_code()
}

fn describe(command: &Command) -> (&'static str, Value, Format) {
    match *command {
        Command::Classify { m, n, format } => ("classify", json!({ "m": m, "n": n }), format),
        Command::Witness {
            m,
            n,
            abelian_failure,
            format,
        } => (
            "witness",
            json!({ "m": m, "n": n, "abelian_failure": abelian_failure }),
            format,
        ),
        Command::Verify {
            m,
            n,
            order_cap,
            format,
        } => (
            "verify",
            json!({ "m": m, "n": n, "order_cap": order_cap }),
            format,
        ),
        Command::Sweep {
            max,
            order_cap,
            workers,
            format,
        } => (
            "sweep",
            json!({ "max": max, "order_cap": order_cap, "workers": workers }),
            format,
        ),
        Command::Count {
            max,
            table_step,
            format,
        } => (
            "count",
            json!({ "max": max, "table_step": table_step }),
            format,
        ),
        Command::Group { m, n, r, s, format } => {
            ("group", json!({ "m": m, "n": n, "r": r, "s": s }), format)
        }
    }
}

fn execute(command: &Command) -> Result<Outcome, Failure> {
    match *command {
        Command::Classify { m, n, .. } => classify(m, n),
        Command::Witness {
            m,
            n,
            abelian_failure,
            ..
        } => witness(m, n, abelian_failure),
        Command::Verify {
            m, n, order_cap, ..
        } => verify(m, n, order_cap),
        Command::Sweep {
            max,
            order_cap,
            workers,
            ..
        } => {
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(w) = workers {
                pool = pool.num_threads(w);
            }
            let pool = pool
                .build()
                .map_err(|e| Failure(format!("cannot start worker pool: {e}")))?;
            pool.install(|| sweep(max, order_cap))
        }
        Command::Count {
            max, table_step, ..
        } => count(max, table_step.unwrap_or(max)),
        Command::Group { m, n, r, s, .. } => group(m, n, r, s),
    }
}

fn classify(m: u64, n: u64) -> Result<Outcome, Failure> {
    let res = ClassifyResult {
        m,
        n,
        nilpotent_pair: classifier::is_nilpotent_pair(m, n),
        singular_pair: classifier::is_singular_pair(m, n),
        cyclic_pair: classifier::is_cyclic_pair(m, n),
        classification: classify_pair(m, n)?,
    };
    let case = res.case_label();
    let text = format!(
        "m={m} n={n}\nnilpotent_pair={}\nsingular_pair={}\ncyclic_pair={}\ncase={case}\n",
        res.nilpotent_pair, res.singular_pair, res.cyclic_pair
    );
    let mut tsv = Tsv::new(&[
        "m",
        "n",
        "nilpotent_pair",
        "singular_pair",
        "cyclic_pair",
        "case",
    ]);
    tsv.row([
        m.to_string(),
        n.to_string(),
        res.nilpotent_pair.to_string(),
        res.singular_pair.to_string(),
        res.cyclic_pair.to_string(),
        case,
    ]);
    Ok(Outcome {
        status: Status::Ok,
        result: to_value(&res),
        text,
        tsv: tsv.finish(),
    })
}

fn witness(m: u64, n: u64, abelian_failure: bool) -> Result<Outcome, Failure> {
    let certified: CertifiedWitness = if abelian_failure {
        build_nonabelian_witness(m, n)?
    } else {
        build_nonnilpotent_witness(m, n)?
    };
    let w = &certified.witness;
    w.reverify().map_err(|e| Failure(e.to_string()))?;
    let res = WitnessResult {
        presentations: w.group.holder_blocks(),
        order_a: w.group.element_order(&w.gen_a)?,
        order_b: w.group.element_order(&w.gen_b)?,
        verified: true,
        certified: certified.clone(),
    };
    let c = &certified.certificate;
    let blocks: Vec<String> = res.presentations.iter().map(|p| p.to_string()).collect();
    let property = match certified.kind {
        classifier::WitnessKind::NonNilpotent { case } => format!("non-nilpotent ({case})"),
        classifier::WitnessKind::NonAbelian { p } => format!("non-abelian, nilpotent (p={p})"),
    };
    let text = format!(
        "group={}\npresentations={}\norder={}\na={} order={}\nb={} order={}\n\
         intersection_size={}\nproperty={property}\n\
         certificate x={} order={} y={} order={} commutator={}\n",
        w.group,
        blocks.join(" x "),
        w.group.order(),
        w.gen_a,
        res.order_a,
        w.gen_b,
        res.order_b,
        w.intersection_size,
        c.x,
        c.order_x,
        c.y,
        c.order_y,
        c.commutator,
    );
    let mut tsv = Tsv::new(&[
        "m",
        "n",
        "presentations",
        "order",
        "a",
        "b",
        "intersection_size",
        "x",
        "order_x",
        "y",
        "order_y",
        "commutator",
    ]);
    tsv.row([
        m.to_string(),
        n.to_string(),
        blocks.join(" x "),
        w.group.order().to_string(),
        w.gen_a.to_string(),
        w.gen_b.to_string(),
        w.intersection_size.to_string(),
        c.x.to_string(),
        c.order_x.to_string(),
        c.y.to_string(),
        c.order_y.to_string(),
        c.commutator.to_string(),
    ]);
    Ok(Outcome {
        status: Status::Ok,
        result: to_value(&res),
        text,
        tsv: tsv.finish(),
    })
}

fn verify(m: u64, n: u64, order_cap: u64) -> Result<Outcome, Failure> {
    let report = verify_pair_exhaustive_with_cap(m, n, order_cap)?;
    let status = if report.is_consistent() {
        Status::Ok
    } else {
        Status::Counterexample
    };
    let orders: Vec<String> = report.orders_scanned.iter().map(u64::to_string).collect();
    let mut text = format!(
        "m={m} n={n} universe={}\npredicate={}\norders_scanned={}\npresentations_scanned={}\n\
         realizing_groups={}\nrealizations_found={}\nall_nilpotent={}\nalgorithms_agree={}\n\
         non_nilpotent_groups={}\n",
        report.universe,
        report.predicate,
        orders.join(","),
        report.presentations_scanned,
        report.realizing_groups,
        report.realizations_found,
        report.all_nilpotent,
        report.algorithms_agree,
        report.counterexamples.len(),
    );
    for c in report.counterexamples.iter().take(5) {
        text.push_str(&format!(
            "  {} a={} b={}\n",
            c.presentation, c.witness.gen_a, c.witness.gen_b
        ));
    }
    text.push_str(&format!("status={}\n", status_word(status)));
    let mut tsv = Tsv::new(&[
        "m",
        "n",
        "predicate",
        "presentations_scanned",
        "realizing_groups",
        "realizations_found",
        "all_nilpotent",
        "algorithms_agree",
        "non_nilpotent_groups",
    ]);
    tsv.row([
        m.to_string(),
        n.to_string(),
        report.predicate.to_string(),
        report.presentations_scanned.to_string(),
        report.realizing_groups.to_string(),
        report.realizations_found.to_string(),
        report.all_nilpotent.to_string(),
        report.algorithms_agree.to_string(),
        report.counterexamples.len().to_string(),
    ]);
    Ok(Outcome {
        status,
        result: to_value(&report),
        text,
        tsv: tsv.finish(),
    })
}

fn sweep(max: u64, order_cap: u64) -> Result<Outcome, Failure> {
    let res = SweepResult {
        case_analysis: oracle::sweep_case_analysis(max)?,
        nilpotency: oracle::sweep_nilpotency(max, order_cap),
        structure: oracle::sweep_structure(max, order_cap)?,
    };
    let status = if res.passed() {
        Status::Ok
    } else {
        Status::Counterexample
    };
    let (l, t, c) = (&res.case_analysis, &res.nilpotency, &res.structure);
    let mut text = format!(
        "case analysis: {} pairs, {} satisfy the criterion, discrepancy={}\n\
         nilpotency: {} pairs, {} verified exhaustively, {} witnessed, {} presentations, {} discrepancies\n\
         structure: {} singular, {} cyclic, {} groups cross-checked, {} non-abelian witnesses, \
         {} non-cyclic products, {} discrepancies\n",
        l.pairs_checked,
        l.satisfying_pairs,
        l.discrepancy
            .map(|(m, n)| format!("({m},{n})"))
            .unwrap_or_else(|| "none".into()),
        t.pairs_checked,
        t.nilpotent_pairs_verified,
        t.failing_pairs_witnessed,
        t.presentations_scanned,
        t.discrepancies.len(),
        c.singular_pairs,
        c.cyclic_pairs,
        c.nilpotency_cross_checks,
        c.nonabelian_witnesses_verified,
        c.noncyclic_products_verified,
        c.discrepancies.len(),
    );
    for d in t.discrepancies.iter().chain(&c.discrepancies).take(10) {
        text.push_str(&format!("  ({},{}) {}\n", d.m, d.n, d.reason));
    }
    text.push_str(&format!("status={}\n", status_word(status)));
    let mut tsv = Tsv::new(&["sweep", "pairs_checked", "passed", "discrepancies"]);
    tsv.row([
        "case_analysis".to_string(),
        l.pairs_checked.to_string(),
        l.passed().to_string(),
        (l.discrepancy.is_some() as u64).to_string(),
    ]);
    tsv.row([
        "nilpotency".to_string(),
        t.pairs_checked.to_string(),
        t.passed().to_string(),
        t.discrepancies.len().to_string(),
    ]);
    tsv.row([
        "structure".to_string(),
        (c.singular_pairs + c.nonabelian_witnesses_verified).to_string(),
        c.passed().to_string(),
        c.discrepancies.len().to_string(),
    ]);
    Ok(Outcome {
        status,
        result: to_value(&res),
        text,
        tsv: tsv.finish(),
    })
}

fn count(max: u64, step: u64) -> Result<Outcome, Failure> {
    let rows: Vec<CountRow> = count_pairs_table(max, step)?
        .into_iter()
        .map(CountRow::from)
        .collect();
    let tsv = count_table_tsv(&rows);
    let mut text = String::new();
    for r in &rows {
        let c = r.counts;
        text.push_str(&format!(
            "x={} nilpotent_pairs={} singular_pairs={} cyclic_pairs={} cyclic_numbers={}",
            c.x, c.nilpotent_pairs, c.singular_pairs, c.cyclic_pairs, c.cyclic_numbers
        ));
        if let (Some(z), Some(ratio)) = (r.erdos_estimate, r.ratio) {
            text.push_str(&format!(" erdos_estimate={z:.3} ratio={ratio:.4}"));
        }
        text.push('\n');
    }
    Ok(Outcome {
        status: Status::Ok,
        result: json!({ "rows": rows }),
        text,
        tsv,
    })
}

fn group(m: u64, n: u64, r: u64, s: u64) -> Result<Outcome, Failure> {
    let presentation = HolderPresentation::new(m, n, r, s)?;
    let g = FiniteGroup::holder(presentation)?;
    let profile = GroupProfile::new(&g);
    let nilpotent_coprime = profile.is_nilpotent_coprime();
    let nilpotent_sylow = profile.is_nilpotent_sylow();
    if nilpotent_coprime != nilpotent_sylow {
        return Err(Failure(format!(
            "nilpotency tests disagree on {presentation}: coprime={nilpotent_coprime} sylow={nilpotent_sylow}"
        )));
    }
    let res = GroupResult {
        presentation,
        order: g.order() as u64,
        abelian: profile.is_abelian(),
        nilpotent: nilpotent_sylow,
        nilpotent_coprime,
        nilpotent_sylow,
        cyclic: profile.is_cyclic(),
        histogram: profile.histogram(),
    };
    let pairs: Vec<String> = res
        .histogram
        .counts()
        .iter()
        .map(|(o, c)| format!("{o}:{c}"))
        .collect();
    let text = format!(
        "presentation={presentation}\norder={}\nabelian={}\nnilpotent={}\ncyclic={}\nhistogram={{{}}}\n",
        res.order,
        res.abelian,
        res.nilpotent,
        res.cyclic,
        pairs.join(", ")
    );
    let mut tsv = Tsv::new(&[
        "m",
        "n",
        "r",
        "s",
        "order",
        "abelian",
        "nilpotent",
        "cyclic",
        "histogram",
    ]);
    tsv.row([
        presentation.m.to_string(),
        presentation.n.to_string(),
        presentation.r.to_string(),
        presentation.s.to_string(),
        res.order.to_string(),
        res.abelian.to_string(),
        res.nilpotent.to_string(),
        res.cyclic.to_string(),
        histogram_inline(&res.histogram),
    ]);
    Ok(Outcome {
        status: Status::Ok,
        result: to_value(&res),
        text,
        tsv: tsv.finish(),
    })
}

fn status_word(status: Status) -> &'static str {
    match status {
        Status::Ok => "ok",
        Status::Counterexample => "counterexample",
        Status::Error => "error",
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize to JSON")
}
