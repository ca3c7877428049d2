//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use farey_subseq::counting::{
    boolean_cardinality_forms, f_cardinality_forms, g_cardinality_forms, g_rank_diagnostics,
    identity_values,
};
use farey_subseq::maps::composite_identities;
use farey_subseq::neighbors::{g_unit_fraction_neighbors, neighbors};
use farey_subseq::{
    adjacency_determinant, boolean_cardinality, boolean_special_neighbors, catalog, enumerate,
    f_cardinality, f_predecessor, f_successor, format_plain, g_cardinality, g_predecessor, g_rank,
    g_successor, generate_boolean, verify_map, Fraction, Kind, SequenceSpec,
};

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn fr(h: i64, k: i64) -> Fraction {
    Fraction::new(h, k).unwrap()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Every spec with order `n` over the parameter ranges each kind accepts.
fn specs(n: i64) -> Vec<SequenceSpec> {
    let mut out = vec![SequenceSpec::full(n).unwrap()];
    for m in 1..=n {
        out.push(SequenceSpec::fnum(n, m).unwrap());
    }
    for m in 0..n {
        out.push(SequenceSpec::gdiff(n, m).unwrap());
    }
    for m in 1..n {
        out.push(SequenceSpec::boolean(n, m).unwrap());
        out.push(SequenceSpec::boolean_left(n, m).unwrap());
        out.push(SequenceSpec::boolean_right(n, m).unwrap());
    }
    out
}

fn golden_listings() -> Outcome {
    let cases: [(&str, SequenceSpec, &str); 8] = [
        (
            "F_6",
            SequenceSpec::full(6).unwrap(),
            "0/1 1/6 1/5 1/4 1/3 2/5 1/2 3/5 2/3 3/4 4/5 5/6 1/1",
        ),
        (
            "F_6^4",
            SequenceSpec::fnum(6, 4).unwrap(),
            "0/1 1/6 1/5 1/4 1/3 2/5 1/2 3/5 2/3 3/4 4/5 1/1",
        ),
        (
            "G_6^4",
            SequenceSpec::gdiff(6, 4).unwrap(),
            "0/1 1/3 1/2 3/5 2/3 3/4 4/5 5/6 1/1",
        ),
        (
            "F(B(6),4)",
            SequenceSpec::boolean(6, 4).unwrap(),
            "0/1 1/3 1/2 3/5 2/3 3/4 4/5 1/1",
        ),
        ("F_2^4", SequenceSpec::fnum(2, 4).unwrap(), "0/1 1/2 1/1"),
        (
            "G_4^2",
            SequenceSpec::gdiff(4, 2).unwrap(),
            "0/1 1/3 1/2 2/3 3/4 1/1",
        ),
        ("G_2^-2", SequenceSpec::gdiff(2, -2).unwrap(), "0/1 1/2 1/1"),
        (
            "F_4^2",
            SequenceSpec::fnum(4, 2).unwrap(),
            "0/1 1/4 1/3 1/2 2/3 1/1",
        ),
    ];
    for (name, spec, expected) in &cases {
        let fast = format_plain(&spec.generate().map_err(|e| e.to_string())?);
        let oracle = format_plain(&enumerate(spec).map_err(|e| e.to_string())?);
        ensure!(fast == *expected, "{name}: generated {fast:?}");
        ensure!(oracle == *expected, "{name}: enumerated {oracle:?}");
    }
    Ok(format!("{} listings byte-exact", cases.len()))
}

fn neighbor_oracle() -> Outcome {
    let mut checked = 0usize;
    let mut anchors = 0usize;
    let mut units = 0usize;
    for n in 2..=40 {
        for spec in specs(n) {
            let seq = enumerate(&spec).unwrap();
            let (m, kind) = (spec.m(), spec.kind());
            for i in 1..seq.len() - 1 {
                let (x, pred, succ) = (seq[i], seq[i - 1], seq[i + 1]);
                let res = neighbors(&spec, x).map_err(|e| format!("{spec} at {x}: {e}"))?;
                ensure!(
                    res.predecessor == Some(pred) && res.successor == Some(succ),
                    "{spec} at {x}: got {:?} {:?}, oracle {pred} {succ}",
                    res.predecessor,
                    res.successor
                );
                let direct = match kind {
                    Kind::Full | Kind::GDiff => {
                        Some((g_predecessor(n, m, x), g_successor(n, m, x)))
                    }
                    Kind::FNum => Some((f_predecessor(n, m, x), f_successor(n, m, x))),
                    _ => None,
                };
                if let Some((p, s)) = direct {
                    ensure!(
                        p.as_ref() == Ok(&pred) && s.as_ref() == Ok(&succ),
                        "{spec} at {x}: direct closed form {p:?} {s:?}"
                    );
                }
                if matches!(kind, Kind::Full | Kind::GDiff) && x.num() == 1 {
                    let got = g_unit_fraction_neighbors(n, m, x.den());
                    ensure!(got == Ok((pred, succ)), "{spec} at {x}: unit form {got:?}");
                    units += 1;
                }
                if kind == Kind::Boolean
                    && 2 * m != n
                    && [fr(1, 2), fr(1, 3), fr(2, 3)].contains(&x)
                {
                    let got = boolean_special_neighbors(n, m, x);
                    ensure!(
                        got == Ok((pred, succ)),
                        "{spec} at {x}: anchor form {got:?}"
                    );
                    anchors += 1;
                }
                checked += 1;
            }
            // endpoints have exactly one neighbor
            let first = neighbors(&spec, seq[0]).map_err(|e| e.to_string())?;
            let last = neighbors(&spec, seq[seq.len() - 1]).map_err(|e| e.to_string())?;
            ensure!(
                first.predecessor.is_none() && first.successor == Some(seq[1]),
                "{spec}: first term neighbors {first:?}"
            );
            ensure!(
                last.successor.is_none() && last.predecessor == Some(seq[seq.len() - 2]),
                "{spec}: last term neighbors {last:?}"
            );
        }
    }
    Ok(format!(
        "{checked} interior fractions ({units} unit fractions, {anchors} Boolean anchors)"
    ))
}

fn counting_oracle() -> Outcome {
    let mut checked = 0usize;
    for n in 1..=60 {
        for m in 0..n {
            let len = enumerate(&SequenceSpec::gdiff(n, m).unwrap())
                .unwrap()
                .len() as i64;
            let forms = g_cardinality_forms(n, m).unwrap();
            ensure!(
                forms == [len; 3],
                "|G_{n}^{m}|: forms {forms:?}, enumerated {len}"
            );
            ensure!(g_cardinality(n, m) == Ok(len), "|G_{n}^{m}| cross-check");
            checked += 1;
        }
        for p in 1..=n {
            let len = enumerate(&SequenceSpec::fnum(n, p).unwrap()).unwrap().len() as i64;
            let forms = f_cardinality_forms(n, p).unwrap();
            ensure!(
                forms == [len; 2],
                "|F_{n}^{p}|: forms {forms:?}, enumerated {len}"
            );
            ensure!(f_cardinality(n, p) == Ok(len), "|F_{n}^{p}| cross-check");
            checked += 1;
        }
        for m in 1..n {
            let len = enumerate(&SequenceSpec::boolean(n, m).unwrap())
                .unwrap()
                .len() as i64;
            let forms = boolean_cardinality_forms(n, m).unwrap();
            ensure!(
                forms == [len; 2],
                "|F(B({n}),{m})|: forms {forms:?}, enumerated {len}"
            );
            ensure!(
                boolean_cardinality(n, m) == Ok(len),
                "|F(B({n}),{m})| cross-check"
            );
            checked += 1;
        }
    }
    Ok(format!("{checked} parameter pairs, all variants agree"))
}

fn rank_oracle() -> Outcome {
    let mut checked = 0usize;
    let mut third_agrees = 0usize;
    for n in 1..=30 {
        for m in 0..n {
            let seq = enumerate(&SequenceSpec::gdiff(n, m).unwrap()).unwrap();
            for (i, &x) in seq.iter().enumerate().skip(1) {
                let r = g_rank(n, m, x);
                ensure!(
                    r == Ok(i as i64),
                    "rank of {x} in G_{n}^{m}: {r:?}, index {i}"
                );
                let diag = g_rank_diagnostics(n, m, x).unwrap();
                if diag.consistent() {
                    third_agrees += 1;
                }
                checked += 1;
            }
        }
    }
    Ok(format!(
        "{checked} ranks; alternative expressions agree on {third_agrees}/{checked}"
    ))
}

fn map_verification() -> Outcome {
    let mut reports = 0usize;
    for entry in catalog() {
        for (n, m) in entry.parameter_grid(40) {
            let r =
                verify_map(entry.id, n, m).map_err(|e| format!("{} ({n},{m}): {e}", entry.id))?;
            ensure!(r.passed(), "{} ({n},{m}): {:?}", entry.id, r.counterexample);
            reports += 1;
        }
    }
    let mut composites = 0usize;
    for n in 2..=40 {
        for m in 1..n {
            for c in composite_identities(n, m).map_err(|e| e.to_string())? {
                ensure!(c.holds, "{} fails at ({n},{m})", c.name);
                composites += 1;
            }
        }
    }
    Ok(format!(
        "{} maps, {reports} (map, n, m) reports, {composites} composite checks",
        catalog().len()
    ))
}

fn identity_suite() -> Outcome {
    for t in 1..=300 {
        let c = identity_values(t).map_err(|e| e.to_string())?;
        ensure!(c.holds(), "t = {t}: {c:?}");
        if t <= 30 {
            let boolean = enumerate(&SequenceSpec::boolean(2 * t, t).unwrap())
                .unwrap()
                .len();
            let farey = enumerate(&SequenceSpec::full(t).unwrap()).unwrap().len();
            ensure!(
                boolean as i64 == c.boolean_card,
                "t = {t}: |F(B(2t),t)| enumerated {boolean}"
            );
            ensure!(
                farey as i64 == c.farey_card,
                "t = {t}: |F_t| enumerated {farey}"
            );
        }
    }
    Ok("t = 1..300, enumeration cross-check for t <= 30".to_string())
}

fn structural() -> Outcome {
    let mut sequences = 0usize;
    for n in 1..=60 {
        for spec in specs(n) {
            let seq = enumerate(&spec).unwrap();
            for w in seq.windows(2) {
                ensure!(w[0] < w[1], "{spec}: {} !< {}", w[0], w[1]);
                ensure!(
                    adjacency_determinant(w[0], w[1]) == 1,
                    "{spec}: {} {} not unimodular",
                    w[0],
                    w[1]
                );
            }
            for w in seq.windows(3) {
                ensure!(
                    w[0].mediant(w[2]) == Ok(w[1]),
                    "{spec}: {} is not the mediant of {} and {}",
                    w[1],
                    w[0],
                    w[2]
                );
            }
            if spec.kind() == Kind::Boolean {
                let f = enumerate(&SequenceSpec::fnum(n, spec.m()).unwrap()).unwrap();
                let g = enumerate(&SequenceSpec::gdiff(n, spec.m()).unwrap()).unwrap();
                let meet: Vec<_> = f
                    .iter()
                    .copied()
                    .filter(|x| g.binary_search(x).is_ok())
                    .collect();
                ensure!(meet == seq, "{spec} differs from F_n^m meet G_n^m");
            }
            sequences += 1;
        }
    }
    Ok(format!("{sequences} sequences"))
}

fn performance() -> Outcome {
    let start = Instant::now();
    let seq = generate_boolean(1000, 500).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let predicted = boolean_cardinality(1000, 500).map_err(|e| e.to_string())?;
    let farey = f_cardinality(500, 500).map_err(|e| e.to_string())?;
    ensure!(
        seq.len() as i64 == predicted,
        "length {} vs predicted {predicted}",
        seq.len()
    );
    ensure!(predicted == 2 * farey - 1, "{predicted} != 2*{farey} - 1");
    ensure!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    Ok(format!(
        "{} elements in {:.3}s",
        seq.len(),
        elapsed.as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden example listings", golden_listings),
        ("neighbors vs oracle, n <= 40", neighbor_oracle),
        ("cardinality formulas vs oracle, n <= 60", counting_oracle),
        ("rank formula vs oracle, n <= 30", rank_oracle),
        ("map catalog verification, n <= 40", map_verification),
        ("Moebius identities, t <= 300", identity_suite),
        ("structural properties, n <= 60", structural),
        ("generate_boolean(1000, 500) under 5 s", performance),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
