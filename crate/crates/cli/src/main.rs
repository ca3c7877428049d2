//! `farey`: generate Farey subsequences, query neighbors, count, rank, apply
//! the named maps and run the verification suites.
//!
//! Exit codes: 0 success, 1 usage, 2 domain error, 3 verification failure.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::builder::{PossibleValuesParser, TypedValueParser};
use clap::{Args, Parser, Subcommand, ValueEnum};
use farey_subseq::counting::{
    self, boolean_cardinality_forms, f_cardinality_forms, g_cardinality_forms, g_rank_diagnostics,
    identity_values,
};
use farey_subseq::maps::{composite_identities, Direction, MapClass};
use farey_subseq::neighbors::neighbors;
use farey_subseq::sequence::{enumerate_bounded, DEFAULT_ENUMERATION_BOUND};
use farey_subseq::{
    catalog, enumerate, format_plain, verify_map, Error, Fraction, Kind, MapId, SequenceSpec,
};
use serde_json::{json, Value};

const KIND_NAMES: [&str; 6] = ["full", "fnum", "gdiff", "bool", "bool-left", "bool-right"];

#[derive(Parser)]
#[command(
    name = "farey",
    version,
    about = "Farey subsequences F_n^m, G_n^m and F(B(n),m)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a whole sequence in ascending order
    Gen {
        #[command(flatten)]
        seq: SeqArgs,
        /// Use the brute-force enumeration instead of the fast generators
        #[arg(long)]
        oracle: bool,
        /// Largest order the brute-force enumeration accepts
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_BOUND)]
        max_n: i64,
    },
    /// Print the predecessor and successor of an interior fraction
    Neighbors {
        #[command(flatten)]
        seq: SeqArgs,
        fraction: String,
    },
    /// Print the number of terms
    Card {
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// Print the 0-based position of a fraction
    Rank {
        #[command(flatten)]
        seq: SeqArgs,
        fraction: String,
    },
    /// Apply a named map
    Map {
        /// Map id, see `farey maps`
        #[arg(long)]
        name: String,
        #[arg(short, allow_negative_numbers = true)]
        n: i64,
        #[arg(short, default_value_t = 0, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        fraction: String,
    },
    /// List the named maps
    Maps {
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check the closed forms against brute-force enumeration
    Verify {
        /// Verify every catalog map and the composite identities
        #[arg(long)]
        all_maps: bool,
        /// Check the Moebius identities and all counting and rank formulas
        #[arg(long)]
        identities: bool,
        /// Check closed-form neighbors against enumeration
        #[arg(long)]
        neighbors: bool,
        #[arg(long, default_value_t = 20)]
        max_n: i64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Args)]
struct SeqArgs {
    #[arg(long, value_parser = PossibleValuesParser::new(KIND_NAMES)
        .map(|s| s.parse::<Kind>().expect("listed kind")))]
    kind: Kind,
    #[arg(short, allow_negative_numbers = true)]
    n: i64,
    /// Ignored for --kind full; may be negative for gdiff
    #[arg(short, allow_negative_numbers = true)]
    m: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

/// Error carrying its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::Parse(_) | Error::NotReduced { .. } => 1,
            Error::FormulaMismatch { .. } => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<String, Failure>;

impl SeqArgs {
    fn spec(&self) -> Result<SequenceSpec, Failure> {
        let m = match (self.kind, self.m) {
            (Kind::Full, m) => m.unwrap_or(0),
            (_, Some(m)) => m,
            (kind, None) => {
                return Err(Failure {
                    code: 1,
                    message: format!("--kind {kind} needs -m"),
                })
            }
        };
        Ok(SequenceSpec::new(self.kind, self.n, m)?)
    }
}

fn metadata(spec: &SequenceSpec) -> serde_json::Map<String, Value> {
    let mut meta = serde_json::Map::new();
    meta.insert("kind".into(), json!(spec.kind().name()));
    meta.insert("n".into(), json!(spec.n()));
    meta.insert("m".into(), json!(spec.m()));
    meta.insert("sequence".into(), json!(spec.to_string()));
    meta
}

/// Formula variants behind the cardinality of `spec`, by name.
fn cardinality_variants(spec: &SequenceSpec) -> Result<Vec<(&'static str, i64)>, Error> {
    let (n, m) = (spec.n(), spec.m());
    Ok(match spec.kind() {
        Kind::Full | Kind::GDiff => {
            let [phi, split, moebius] = g_cardinality_forms(n, m)?;
            vec![
                ("phi-sum", phi),
                ("split-phi-sum", split),
                ("moebius-sum", moebius),
            ]
        }
        Kind::FNum => {
            let [a, b] = f_cardinality_forms(n, m.min(n))?;
            vec![("moebius-sum", a), ("moebius-sum-halved", b)]
        }
        Kind::Boolean => {
            let [halves, sum] = boolean_cardinality_forms(n, m)?;
            vec![("halves", halves), ("moebius-sum", sum)]
        }
        Kind::BooleanLeft | Kind::BooleanRight => {
            vec![("halfsequence-image", counting::cardinality(spec)?)]
        }
    })
}

fn fraction_list(
    list: &[Fraction],
    format: Format,
    meta: serde_json::Map<String, Value>,
) -> String {
    match format {
        Format::Plain => format_plain(list),
        Format::Json => {
            let fractions: Vec<String> = list.iter().map(Fraction::to_string).collect();
            json!({ "fractions": fractions, "metadata": meta }).to_string()
        }
        Format::Csv => {
            let mut out = String::from("num,den");
            for x in list {
                write!(out, "\n{},{}", x.num(), x.den()).unwrap();
            }
            out
        }
    }
}

fn integer(name: &str, value: i64, format: Format, meta: serde_json::Map<String, Value>) -> String {
    match format {
        Format::Plain => value.to_string(),
        Format::Json => json!({ name: value, "metadata": meta }).to_string(),
        Format::Csv => format!("{name}\n{value}"),
    }
}

fn parse_fraction(text: &str) -> Result<Fraction, Failure> {
    Ok(text.parse::<Fraction>()?)
}

fn cmd_gen(seq: &SeqArgs, oracle: bool, max_n: i64) -> CmdResult {
    let spec = seq.spec()?;
    let (list, method) = if oracle {
        (enumerate_bounded(&spec, max_n)?, "oracle-enumeration")
    } else {
        (spec.generate()?, "recurrence")
    };
    let mut meta = metadata(&spec);
    meta.insert("cardinality".into(), json!(list.len()));
    meta.insert("method".into(), json!(method));
    Ok(fraction_list(&list, seq.format, meta))
}

fn cmd_neighbors(seq: &SeqArgs, fraction: &str) -> CmdResult {
    let spec = seq.spec()?;
    let x = parse_fraction(fraction)?;
    let res = neighbors(&spec, x)?;
    let (Some(pred), Some(succ)) = (res.predecessor, res.successor) else {
        return Err(Error::Endpoint(x).into());
    };
    let mut meta = metadata(&spec);
    meta.insert("target".into(), json!(x.to_string()));
    meta.insert("method".into(), json!(res.method.name()));
    Ok(fraction_list(&[pred, succ], seq.format, meta))
}

fn cmd_card(seq: &SeqArgs) -> CmdResult {
    let spec = seq.spec()?;
    let variants = cardinality_variants(&spec)?;
    let value = variants[0].1;
    if variants.iter().any(|&(_, v)| v != value) {
        return Err(Error::FormulaMismatch {
            what: "cardinality",
            values: variants.iter().map(|&(_, v)| v).collect(),
        }
        .into());
    }
    let mut meta = metadata(&spec);
    meta.insert("formula".into(), json!(variants[0].0));
    let all: serde_json::Map<String, Value> = variants
        .iter()
        .map(|&(name, v)| (name.to_string(), json!(v)))
        .collect();
    meta.insert("variants".into(), Value::Object(all));
    Ok(integer("cardinality", value, seq.format, meta))
}

fn cmd_rank(seq: &SeqArgs, fraction: &str) -> CmdResult {
    let spec = seq.spec()?;
    let x = parse_fraction(fraction)?;
    if !spec.contains(x) {
        return Err(Error::NotMember {
            fraction: x,
            sequence: spec.to_string(),
        }
        .into());
    }
    let mut meta = metadata(&spec);
    let rank = match spec.kind() {
        Kind::Full | Kind::GDiff => {
            let (n, m) = (spec.n(), spec.m());
            if x == Fraction::ZERO {
                meta.insert("method".into(), json!("first-term"));
                0
            } else {
                let diag = g_rank_diagnostics(n, m, x)?;
                meta.insert("method".into(), json!("phi-sum"));
                meta.insert(
                    "variants".into(),
                    json!({
                        "phi-sum": diag.phi_sum,
                        "split-phi-sum": diag.split_phi_sum,
                        "moebius-sum": diag.moebius_sum,
                    }),
                );
                diag.phi_sum
            }
        }
        _ => {
            let list = enumerate(&spec)?;
            meta.insert("method".into(), json!("oracle-scan"));
            list.binary_search(&x).expect("member") as i64
        }
    };
    meta.insert("target".into(), json!(x.to_string()));
    Ok(integer("rank", rank, seq.format, meta))
}

fn cmd_map(name: &str, n: i64, m: i64, format: Format, fraction: &str) -> CmdResult {
    let id: MapId = name.parse()?;
    let x = parse_fraction(fraction)?;
    let y = farey_subseq::apply_named(id, n, m, x)?;
    let entry = id.map();
    let mut meta = serde_json::Map::new();
    meta.insert("map".into(), json!(id.as_str()));
    meta.insert("matrix".into(), json!(entry.matrix.to_string()));
    meta.insert("n".into(), json!(n));
    meta.insert("m".into(), json!(m));
    meta.insert("source".into(), json!(x.to_string()));
    Ok(fraction_list(&[y], format, meta))
}

fn cmd_maps(format: Format) -> CmdResult {
    let rows: Vec<_> = catalog()
        .iter()
        .map(|e| {
            let direction = match e.direction {
                Direction::Preserving => "preserving",
                Direction::Reversing => "reversing",
            };
            let class = match e.class {
                MapClass::Bijective => "bijective",
                MapClass::Injective => "injective",
            };
            (
                e.id.as_str(),
                e.matrix.to_string(),
                direction,
                class,
                e.signature,
            )
        })
        .collect();
    Ok(match format {
        Format::Plain => rows
            .iter()
            .map(|(id, mat, dir, class, sig)| {
                format!("{id:<24} {mat:<12} {dir:<10} {class:<9} {sig}")
            })
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => Value::Array(
            rows.iter()
                .map(|(id, mat, dir, class, sig)| {
                    json!({ "id": id, "matrix": mat, "direction": dir, "class": class, "signature": sig })
                })
                .collect(),
        )
        .to_string(),
        Format::Csv => {
            let mut out = String::from("id,matrix,direction,class,signature");
            for (id, mat, dir, class, sig) in &rows {
                write!(out, "\n{id},\"{mat}\",{dir},{class},\"{sig}\"").unwrap();
            }
            out
        }
    })
}

struct Suite {
    name: String,
    checked: usize,
    failed: usize,
    first_failure: Option<String>,
}

impl Suite {
    fn new(name: impl Into<String>) -> Suite {
        Suite {
            name: name.into(),
            checked: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }
}

fn map_suites(max_n: i64) -> Vec<Suite> {
    let mut suites = Vec::new();
    for entry in catalog() {
        let mut suite = Suite::new(format!("map {}", entry.id));
        for (n, m) in entry.parameter_grid(max_n) {
            match verify_map(entry.id, n, m) {
                Ok(r) => suite.record(r.passed(), || {
                    format!(
                        "n={n} m={m}: {}",
                        r.counterexample.clone().unwrap_or_default()
                    )
                }),
                Err(e) => suite.record(false, || format!("n={n} m={m}: {e}")),
            }
        }
        suites.push(suite);
    }
    let mut composites = Suite::new("composite identities");
    for n in 2..=max_n {
        for m in 1..n {
            match composite_identities(n, m) {
                Ok(checks) => {
                    for c in checks {
                        composites.record(c.holds, || format!("n={n} m={m}: {}", c.name));
                    }
                }
                Err(e) => composites.record(false, || format!("n={n} m={m}: {e}")),
            }
        }
    }
    suites.push(composites);
    suites
}

fn all_specs(n: i64) -> Vec<SequenceSpec> {
    let mut out = vec![SequenceSpec::full(n)];
    out.extend((1..=n).map(|m| SequenceSpec::fnum(n, m)));
    out.extend((0..n).map(|m| SequenceSpec::gdiff(n, m)));
    for m in 1..n {
        out.push(SequenceSpec::boolean(n, m));
        out.push(SequenceSpec::boolean_left(n, m));
        out.push(SequenceSpec::boolean_right(n, m));
    }
    out.into_iter()
        .map(|s| s.expect("valid parameters"))
        .collect()
}

fn identity_suites(max_n: i64) -> Vec<Suite> {
    let mut identities = Suite::new("moebius identities");
    for t in 1..=max_n {
        match identity_values(t) {
            Ok(c) => identities.record(c.holds(), || format!("t={t}: {c:?}")),
            Err(e) => identities.record(false, || format!("t={t}: {e}")),
        }
    }
    let mut cards = Suite::new("cardinality formulas");
    let mut ranks = Suite::new("rank formula");
    for n in 1..=max_n {
        for spec in all_specs(n) {
            let Ok(list) = enumerate(&spec) else {
                cards.record(false, || format!("{spec}: enumeration failed"));
                continue;
            };
            match cardinality_variants(&spec) {
                Ok(vs) => cards.record(vs.iter().all(|&(_, v)| v == list.len() as i64), || {
                    format!("{spec}: {vs:?} vs {}", list.len())
                }),
                Err(e) => cards.record(false, || format!("{spec}: {e}")),
            }
            if spec.kind() == Kind::GDiff {
                for (i, &x) in list.iter().enumerate().skip(1) {
                    match g_rank_diagnostics(spec.n(), spec.m(), x) {
                        Ok(d) => ranks.record(d.phi_sum == i as i64 && d.consistent(), || {
                            format!("{spec} at {x}: {d:?}, index {i}")
                        }),
                        Err(e) => ranks.record(false, || format!("{spec} at {x}: {e}")),
                    }
                }
            }
        }
    }
    vec![identities, cards, ranks]
}

fn neighbor_suite(max_n: i64) -> Suite {
    let mut suite = Suite::new("neighbors");
    for n in 2..=max_n {
        for spec in all_specs(n) {
            let Ok(list) = enumerate(&spec) else {
                suite.record(false, || format!("{spec}: enumeration failed"));
                continue;
            };
            for (i, &x) in list.iter().enumerate() {
                let expected = (i.checked_sub(1).map(|j| list[j]), list.get(i + 1).copied());
                match neighbors(&spec, x) {
                    Ok(r) => suite.record((r.predecessor, r.successor) == expected, || {
                        format!("{spec} at {x}: {r:?}")
                    }),
                    Err(e) => suite.record(false, || format!("{spec} at {x}: {e}")),
                }
            }
        }
    }
    suite
}

fn cmd_verify(
    all_maps: bool,
    identities: bool,
    nbrs: bool,
    max_n: i64,
    format: Format,
) -> CmdResult {
    if !(1..=DEFAULT_ENUMERATION_BOUND).contains(&max_n) {
        return Err(Error::SizeBound {
            n: max_n,
            bound: DEFAULT_ENUMERATION_BOUND,
        }
        .into());
    }
    let everything = !(all_maps || identities || nbrs);
    let mut suites = Vec::new();
    if all_maps || everything {
        suites.extend(map_suites(max_n));
    }
    if identities || everything {
        suites.extend(identity_suites(max_n));
    }
    if nbrs || everything {
        suites.push(neighbor_suite(max_n));
    }
    let passed = suites.iter().all(|s| s.failed == 0);
    let report = match format {
        Format::Plain => {
            let mut out = format!("{:<32} {:>9} {:>7}", "suite", "checked", "failed");
            for s in &suites {
                write!(out, "\n{:<32} {:>9} {:>7}", s.name, s.checked, s.failed).unwrap();
                if let Some(why) = &s.first_failure {
                    write!(out, "\n    first failure: {why}").unwrap();
                }
            }
            write!(
                out,
                "\n{}",
                if passed {
                    "all checks passed"
                } else {
                    "VERIFICATION FAILED"
                }
            )
            .unwrap();
            out
        }
        Format::Json => json!({
            "max_n": max_n,
            "passed": passed,
            "suites": suites.iter().map(|s| json!({
                "name": s.name,
                "checked": s.checked,
                "failed": s.failed,
                "first_failure": s.first_failure,
            })).collect::<Vec<_>>(),
        })
        .to_string(),
        Format::Csv => {
            let mut out = String::from("suite,checked,failed");
            for s in &suites {
                write!(out, "\n{},{},{}", s.name, s.checked, s.failed).unwrap();
            }
            out
        }
    };
    if passed {
        Ok(report)
    } else {
        println!("{report}");
        Err(Failure {
            code: 3,
            message: "verification failed".into(),
        })
    }
}

fn run(cli: Cli) -> CmdResult {
    match &cli.command {
        Command::Gen { seq, oracle, max_n } => cmd_gen(seq, *oracle, *max_n),
        Command::Neighbors { seq, fraction } => cmd_neighbors(seq, fraction),
        Command::Card { seq } => cmd_card(seq),
        Command::Rank { seq, fraction } => cmd_rank(seq, fraction),
        Command::Map {
            name,
            n,
            m,
            format,
            fraction,
        } => cmd_map(name, *n, *m, *format, fraction),
        Command::Maps { format } => cmd_maps(*format),
        Command::Verify {
            all_maps,
            identities,
            neighbors,
            max_n,
            format,
        } => cmd_verify(*all_maps, *identities, *neighbors, *max_n, *format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
