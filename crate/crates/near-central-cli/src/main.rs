//! Batch front door: every table the library computes, emitted as CSV
//! or JSON, byte-identical across runs of the same configuration.
//!
//! Subcommands mirror the library. `genus-table` and `face-table` print
//! the (p,n−1,n)-dipole solution; `genchar` evaluates one generalized
//! character by every applicable method and reports each; `connection`
//! and `decompose` print Z₁(n) structure constants and full-cycle
//! factorization counts; `symmetry` sweeps D_{n,p} = D_{n,n+1−p};
//! `verify` runs the oracle suites. Commands that admit a brute-force
//! route take `--route formula|brute|both`; `both` cross-checks and
//! exits 1 on any mismatch. Exit codes: 0 success, 1 verification
//! mismatch, 2 usage error, 3 resource-guard refusal.

use clap::{Parser, Subcommand, ValueEnum};
use near_central::algebra::{structure_constants, ClassMembers, GammaTable};
use near_central::characters::classical::{hook_leg, near_hook_leg};
use near_central::characters::{
    genchar_at_full_cycle, genchar_at_k_n11, genchar_hook_series, genchar_oracle,
    genchar_strahov, genchar_two_part, HookTag, TwoPartFamily,
};
use near_central::decomposition::{brute_decompositions, decomposition_count};
use near_central::dipoles::{
    brute_force_p_q_dipoles, face_table_formula, genus_histogram_formula, symmetry_check,
    GenusHistogram,
};
use near_central::partition::{tagged_classes, Partition, TaggedClass};
use near_central::verify::{run_suite, VerifyConfig, SUITE_NAMES};
use near_central::{rat_to_string, Error as LibError, Int, Rat};
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "near-central",
    version,
    about = "Exact tables for the (p,n-1,n)-dipole problem and the centralizer algebra Z1(n)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Csv)]
    format: Format,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Ceiling for brute-force enumeration of S_n; guarded work at
    /// larger n is refused with exit code 3.
    #[arg(long, global = true, default_value_t = 8)]
    max_brute_n: u32,

    /// Worker threads for parallel sweeps (default: one per core).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    /// Character formulas only.
    Formula,
    /// Exhaustive enumeration only (guarded by --max-brute-n).
    Brute,
    /// Both, compared entry by entry; a mismatch exits 1.
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Dipole counts by genus: rows (n, p, genus, count) summing to (n-2)!.
    GenusTable {
        #[arg(long)]
        n: u32,
        /// Root jump: the root faces have degree 2p.
        #[arg(long)]
        p: u32,
    },
    /// Dipole counts by face class: rows (n, p, class, genus, count).
    FaceTable {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum, default_value_t = Route::Formula)]
        route: Route,
    },
    /// One generalized character gamma^{mu,j} at the tagged class
    /// (rho, ell), by every applicable method.
    Genchar {
        #[arg(long)]
        n: u32,
        /// Shape of the character index, e.g. "2,2".
        #[arg(long)]
        mu: String,
        /// Tag of the character index: a part of mu.
        #[arg(long)]
        j: u32,
        /// Shape of the class evaluated at, e.g. "3,1".
        #[arg(long)]
        rho: String,
        /// Tag of the class: a part of rho.
        #[arg(long)]
        ell: u32,
    },
    /// Connection coefficients of K_{left}K_{right}: one row per target
    /// class, or a single row with --target.
    Connection {
        /// Left class as "shape:tag", e.g. "2,1,1:2".
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        target: Option<String>,
        #[arg(long, value_enum, default_value_t = Route::Formula)]
        route: Route,
    },
    /// Counts of factorizations of the full cycle (1 2 ... n) into an
    /// ordered pair from two tagged classes.
    Decompose {
        /// All pairs at this n (alternative to --left/--right).
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        left: Option<String>,
        #[arg(long)]
        right: Option<String>,
        #[arg(long, value_enum, default_value_t = Route::Formula)]
        route: Route,
    },
    /// The genus-distribution symmetry D_{n,p} = D_{n,n+1-p}, swept as
    /// exact polynomials.
    Symmetry {
        #[arg(long, default_value_t = 40)]
        n_max: u32,
    },
    /// Cross-validation suites; any failure exits 1.
    Verify {
        /// A suite name, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
    },
}

/// A finished table plus whether a cross-check inside it failed.
struct Output {
    table: Table,
    failed: bool,
}

struct Table {
    columns: &'static [&'static str],
    rows: Vec<Vec<String>>,
}

enum Failure {
    /// Exit 1: routes disagree or a suite failed.
    Mismatch(String),
    /// Exit 2: parameters reject before any computation.
    Usage(String),
    /// Exit 3: refused factorial-scale work.
    Resource(String),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

/// Maps library errors onto exit codes: resource guards are exit 3,
/// anything else is a cross-check failure.
fn guard<T>(result: near_central::Result<T>) -> Result<T, Failure> {
    result.map_err(|e| match e {
        LibError::ResourceGuard { .. } => Failure::Resource(e.to_string()),
        other => Failure::Mismatch(other.to_string()),
    })
}

fn csv_field(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Bare JSON for integers and booleans, quoted strings otherwise.
fn json_value(field: &str) -> String {
    let is_int = {
        let digits = field.strip_prefix('-').unwrap_or(field);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if is_int || field == "true" || field == "false" {
        return field.to_string();
    }
    let mut out = String::with_capacity(field.len() + 2);
    out.push('"');
    for c in field.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => {
                out.push_str(&format!("\\u{:04x}", c as u32));
            }
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

impl Table {
    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = String::new();
                out.push_str(&self.columns.join(","));
                out.push('\n');
                for row in &self.rows {
                    let line: Vec<String> = row.iter().map(|f| csv_field(f)).collect();
                    out.push_str(&line.join(","));
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let mut out = String::from("[");
                for (i, row) in self.rows.iter().enumerate() {
                    out.push_str(if i == 0 { "\n  {" } else { ",\n  {" });
                    for (j, (col, field)) in self.columns.iter().zip(row).enumerate() {
                        if j > 0 {
                            out.push_str(", ");
                        }
                        out.push('"');
                        out.push_str(col);
                        out.push_str("\": ");
                        out.push_str(&json_value(field));
                    }
                    out.push('}');
                }
                out.push_str("\n]\n");
                out
            }
        }
    }
}

fn parse_partition(text: &str, what: &str) -> Result<Partition, Failure> {
    text.parse::<Partition>()
        .map_err(|e| Failure::Usage(format!("{}: {}", what, e)))
}

fn parse_class(text: &str, what: &str) -> Result<TaggedClass, Failure> {
    text.parse::<TaggedClass>()
        .map_err(|e| Failure::Usage(format!("{}: {}", what, e)))
}

fn check_jump(n: u32, p: u32) -> Result<(), Failure> {
    if n < 2 {
        return usage(format!("need n >= 2, got n = {}", n));
    }
    if !(1..=n - 1).contains(&p) {
        return usage(format!("root jump p = {} out of range 1..={}", p, n - 1));
    }
    Ok(())
}

/// The genus histogram of the (p, n−1, n)-dipoles by formula: the
/// generating polynomial when it applies, the face-table collapse for
/// the p = 1 and tiny-n corners it excludes.
fn formula_histogram(n: u32, p: u32) -> GenusHistogram {
    if p >= 2 && n >= 4 {
        genus_histogram_formula(n, p)
    } else {
        GenusHistogram::from_face_counts(n, &face_table_formula(n, p))
    }
}

fn genus_table(n: u32, p: u32) -> Result<Output, Failure> {
    check_jump(n, p)?;
    let hist = formula_histogram(n, p);
    let rows = hist
        .counts()
        .iter()
        .map(|(g, count)| vec![n.to_string(), p.to_string(), g.to_string(), count.to_string()])
        .collect();
    Ok(Output { table: Table { columns: &["n", "p", "genus", "count"], rows }, failed: false })
}

fn face_table(n: u32, p: u32, route: Route, max_brute_n: u32) -> Result<Output, Failure> {
    check_jump(n, p)?;
    let faces = match route {
        Route::Formula => face_table_formula(n, p),
        Route::Brute => guard(brute_force_p_q_dipoles(n, p, n - 1, max_brute_n))?.0,
        Route::Both => {
            let formula = face_table_formula(n, p);
            let brute = guard(brute_force_p_q_dipoles(n, p, n - 1, max_brute_n))?.0;
            if formula != brute {
                return Err(Failure::Mismatch(format!(
                    "face tables disagree between formula and brute force at n = {}, p = {}",
                    n, p
                )));
            }
            formula
        }
    };
    let rows = faces
        .iter()
        .map(|(class, count)| {
            let genus = (n - class.shape().num_parts() as u32) / 2;
            vec![
                n.to_string(),
                p.to_string(),
                class.to_string(),
                genus.to_string(),
                count.to_string(),
            ]
        })
        .collect();
    Ok(Output {
        table: Table { columns: &["n", "p", "class", "genus", "count"], rows },
        failed: false,
    })
}

/// Every method applicable to gamma^{mu,j}_{rho,ell}, by name. The
/// Strahov recursion always applies; the others switch on the shape
/// patterns they cover.
fn genchar_methods(
    index: &TaggedClass,
    class: &TaggedClass,
    max_brute_n: u32,
) -> Vec<(&'static str, Rat)> {
    let n = index.n();
    let mut methods = vec![("strahov", genchar_strahov(index, class))];
    if n <= max_brute_n {
        methods.push(("seminormal-oracle", genchar_oracle(index, class)));
    }
    if *class == TaggedClass::new(Partition::new(vec![n - 1, 1]), 1) {
        methods.push(("jm-product-closed-form", genchar_at_k_n11(index.shape(), index.tag())));
    }
    if *class == TaggedClass::new(Partition::new(vec![n]), n) {
        methods.push((
            "full-cycle-closed-form",
            genchar_at_full_cycle(index.shape(), index.tag()),
        ));
    }
    let index_hook = hook_leg(index.shape());
    if let Some(k) = index_hook {
        if index.tag() == n - k && k <= n - 2 {
            methods.push((
                "hook-series-row",
                genchar_hook_series(n, k, HookTag::Row, class.shape(), class.tag()),
            ));
        }
        if index.tag() == 1 && k >= 1 {
            methods.push((
                "hook-series-column",
                genchar_hook_series(n, k, HookTag::Column, class.shape(), class.tag()),
            ));
        }
    }
    if class.shape().num_parts() == 2 {
        let p = class.tag();
        if let Some(k) = index_hook {
            if index.tag() == n - k && k <= n - 2 {
                methods.push((
                    "two-part-hook-row-table",
                    genchar_two_part(TwoPartFamily::HookRow, n, k, p),
                ));
            }
            if index.tag() == 1 && k >= 1 {
                methods.push((
                    "two-part-hook-col-table",
                    genchar_two_part(TwoPartFamily::HookCol, n, k, p),
                ));
            }
        }
        if let Some(k) = near_hook_leg(index.shape()) {
            if index.tag() == 2 && p >= 2 {
                methods.push((
                    "two-part-near-hook-table",
                    genchar_two_part(TwoPartFamily::NearHook, n, k, p),
                ));
            }
        }
    }
    methods
}

fn genchar(n: u32, mu: &str, j: u32, rho: &str, ell: u32, max_brute_n: u32) -> Result<Output, Failure> {
    let mu = parse_partition(mu, "--mu")?;
    let rho = parse_partition(rho, "--rho")?;
    if n < 2 {
        return usage("need n >= 2");
    }
    if mu.n() != n {
        return usage(format!("--mu partitions {}, not n = {}", mu.n(), n));
    }
    if rho.n() != n {
        return usage(format!("--rho partitions {}, not n = {}", rho.n(), n));
    }
    if !mu.has_part(j) {
        return usage(format!("--j {} is not a part of --mu {}", j, mu));
    }
    if !rho.has_part(ell) {
        return usage(format!("--ell {} is not a part of --rho {}", ell, rho));
    }
    let index = TaggedClass::new(mu, j);
    let class = TaggedClass::new(rho, ell);
    let methods = genchar_methods(&index, &class, max_brute_n);
    let reference = methods[0].1.clone();
    let failed = methods.iter().any(|(_, v)| *v != reference);
    let rows = methods
        .into_iter()
        .map(|(name, value)| vec![name.to_string(), rat_to_string(&value)])
        .collect();
    Ok(Output { table: Table { columns: &["method", "value"], rows }, failed })
}

fn connection(
    left: &str,
    right: &str,
    target: Option<&str>,
    route: Route,
    max_brute_n: u32,
) -> Result<Output, Failure> {
    let left = parse_class(left, "--left")?;
    let right = parse_class(right, "--right")?;
    let n = left.n();
    if right.n() != n {
        return usage(format!("--right partitions {}, not {}", right.n(), n));
    }
    let targets: Vec<TaggedClass> = match target {
        Some(text) => {
            let t = parse_class(text, "--target")?;
            if t.n() != n {
                return usage(format!("--target partitions {}, not {}", t.n(), n));
            }
            vec![t]
        }
        None => tagged_classes(n),
    };
    let formula: Option<BTreeMap<TaggedClass, Int>> = match route {
        Route::Brute => None,
        _ => {
            let table = GammaTable::build(n);
            Some(
                targets
                    .iter()
                    .map(|t| (t.clone(), table.connection_coefficient(&left, &right, t)))
                    .collect(),
            )
        }
    };
    let brute: Option<BTreeMap<TaggedClass, Int>> = match route {
        Route::Formula => None,
        _ => {
            let members = guard(ClassMembers::build(n, max_brute_n))?;
            let mut all = structure_constants(&members, &left, &right);
            all.retain(|class, _| targets.contains(class));
            Some(all)
        }
    };
    if let (Some(f), Some(b)) = (&formula, &brute) {
        if f != b {
            return Err(Failure::Mismatch(format!(
                "connection coefficients disagree between formula and brute force for ({}) x ({})",
                left, right
            )));
        }
    }
    let counts = formula.or(brute).expect("some route ran");
    let rows = targets
        .iter()
        .map(|t| {
            vec![
                n.to_string(),
                left.to_string(),
                right.to_string(),
                t.to_string(),
                counts[t].to_string(),
            ]
        })
        .collect();
    Ok(Output {
        table: Table { columns: &["n", "left", "right", "target", "count"], rows },
        failed: false,
    })
}

fn decompose(
    n: Option<u32>,
    left: Option<&str>,
    right: Option<&str>,
    route: Route,
    max_brute_n: u32,
) -> Result<Output, Failure> {
    let pairs: Vec<(TaggedClass, TaggedClass)> = match (left, right, n) {
        (Some(l), Some(r), _) => {
            let l = parse_class(l, "--left")?;
            let r = parse_class(r, "--right")?;
            if l.n() != r.n() {
                return usage(format!("--left partitions {}, --right {}", l.n(), r.n()));
            }
            if let Some(n) = n {
                if l.n() != n {
                    return usage(format!("--n {} contradicts the classes over {}", n, l.n()));
                }
            }
            vec![(l, r)]
        }
        (None, None, Some(n)) => {
            if n < 2 {
                return usage("need n >= 2");
            }
            let classes = tagged_classes(n);
            classes
                .iter()
                .flat_map(|l| classes.iter().map(move |r| (l.clone(), r.clone())))
                .collect()
        }
        _ => return usage("pass either --left and --right, or --n for the full table"),
    };
    let mut rows = Vec::with_capacity(pairs.len());
    for (l, r) in &pairs {
        let count = match route {
            Route::Formula => decomposition_count(l, r),
            Route::Brute => guard(brute_decompositions(l, r, max_brute_n))?,
            Route::Both => {
                let formula = decomposition_count(l, r);
                let brute = guard(brute_decompositions(l, r, max_brute_n))?;
                if formula != brute {
                    return Err(Failure::Mismatch(format!(
                        "decomposition counts disagree at ({}) x ({}): {} by formula, {} brute",
                        l, r, formula, brute
                    )));
                }
                formula
            }
        };
        rows.push(vec![
            l.n().to_string(),
            l.to_string(),
            r.to_string(),
            count.to_string(),
        ]);
    }
    Ok(Output { table: Table { columns: &["n", "left", "right", "count"], rows }, failed: false })
}

fn symmetry(n_max: u32) -> Result<Output, Failure> {
    if n_max < 4 {
        return usage("need --n-max >= 4");
    }
    let mut rows = Vec::new();
    let mut failed = false;
    for n in 4..=n_max {
        for (p, p_mirror, equal) in symmetry_check(n) {
            failed |= !equal;
            rows.push(vec![
                n.to_string(),
                p.to_string(),
                p_mirror.to_string(),
                equal.to_string(),
            ]);
        }
    }
    Ok(Output { table: Table { columns: &["n", "p", "p_mirror", "equal"], rows }, failed })
}

fn verify(suite: &str, n_max: u32, max_brute_n: u32) -> Result<Output, Failure> {
    let config = VerifyConfig { n_max, max_brute_n };
    let names: Vec<&str> = if suite == "all" {
        SUITE_NAMES.to_vec()
    } else if SUITE_NAMES.contains(&suite) {
        vec![suite]
    } else {
        return usage(format!(
            "unknown suite {:?}; pick one of: all, {}",
            suite,
            SUITE_NAMES.join(", ")
        ));
    };
    let mut rows = Vec::new();
    let mut failed = false;
    for name in names {
        let report = run_suite(name, &config).expect("known suite");
        failed |= !report.passed;
        rows.push(vec![
            report.name.to_string(),
            report.passed.to_string(),
            report.details.clone(),
        ]);
    }
    Ok(Output { table: Table { columns: &["suite", "passed", "details"], rows }, failed })
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::GenusTable { n, p } => genus_table(*n, *p),
        Command::FaceTable { n, p, route } => face_table(*n, *p, *route, cli.max_brute_n),
        Command::Genchar { n, mu, j, rho, ell } => {
            genchar(*n, mu, *j, rho, *ell, cli.max_brute_n)
        }
        Command::Connection { left, right, target, route } => {
            connection(left, right, target.as_deref(), *route, cli.max_brute_n)
        }
        Command::Decompose { n, left, right, route } => {
            decompose(*n, left.as_deref(), right.as_deref(), *route, cli.max_brute_n)
        }
        Command::Symmetry { n_max } => symmetry(*n_max),
        Command::Verify { suite, n_max } => verify(suite, *n_max, cli.max_brute_n),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .ok();
    }
    match run(&cli) {
        Ok(output) => {
            let rendered = output.table.render(cli.format);
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &rendered) {
                    eprintln!("error: cannot write {}: {}", path.display(), e);
                    return ExitCode::from(2);
                }
            } else {
                print!("{}", rendered);
            }
            if output.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {}", msg);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {}", msg);
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("refused: {}", msg);
            ExitCode::from(3)
        }
    }
}
