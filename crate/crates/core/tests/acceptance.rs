//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use tangle_bracket::catalog::oeis::{check_all, oeis_dir};
use tangle_bracket::catalog::tables::{compare_rows, reference_table, reference_tables, table_by_number};
use tangle_bracket::catalog::{entry, load_catalog, table, verify_catalog, EntryId, Status};
use tangle_bracket::closures::{close, repeat_pair, ClosureKind};
use tangle_bracket::fraction::{fraction, TangleFraction};
use tangle_bracket::oracle::{build_closure_diagram, build_diagram, knot_diagram, state_sum_knot, state_sum_tangle, DEFAULT_BUDGET};
use tangle_bracket::poly::Polynomial;
use tangle_bracket::tangle::{bracket_pair, parse, BracketPair, KnotClass};

/// Wall-clock limit for regenerating every printed table.
const TABLE_TIME_LIMIT: Duration = Duration::from_secs(5);
/// Wall-clock limit for the oracle comparisons.
const ORACLE_TIME_LIMIT: Duration = Duration::from_secs(2);
/// Largest member expression handed to the oracle.
const ORACLE_MAX_CROSSINGS: u64 = 8;
/// Random pairs per algebraic identity.
const IDENTITY_CASES: u32 = 256;
/// Component degree bound for random pairs.
const IDENTITY_MAX_DEGREE: usize = 5;
/// Largest n for the n-fold sum comparison.
const REPEAT_MAX_N: u32 = 6;
/// Printed tables cover n = 0..=PRINTED_N_MAX.
const PRINTED_N_MAX: u32 = 5;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: Vec<String>, summary: String) -> Outcome {
        if failures.is_empty() {
            Outcome { ok: true, detail: summary }
        } else {
            Outcome {
                ok: false,
                detail: format!("{summary}; failures: {}", failures.join(" | ")),
            }
        }
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

fn p(s: &str) -> Polynomial {
    s.parse().expect("test polynomial literal")
}

/// Closure of `A_n` computed the slow way: n explicit horizontal sums.
fn slow_closure(pair: &BracketPair, n: u32, kind: ClosureKind) -> Polynomial {
    let sum = (0..n).fold(BracketPair::zero_tangle(), |acc, _| acc.hsum(pair));
    close(&sum, kind)
}

fn criterion_1() -> Outcome {
    let mut failures = Vec::new();
    let start = Instant::now();
    let mut cells = 0usize;
    for spec in reference_tables() {
        cells += spec.cell_count();
        for id in &spec.entries {
            let e = entry(*id).expect("table entry");
            let generated = table(e, spec.kind, spec.rows.len() as u32 - 1, None);
            for (n, k, printed, got) in compare_rows(&spec.rows, &generated) {
                failures.push(format!("table {} {id}: n={n} k={k} printed {printed} got {got}", spec.table_no));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed > TABLE_TIME_LIMIT {
        failures.push(format!("took {elapsed:?}, limit {TABLE_TIME_LIMIT:?}"));
    }

    // second route: iterated sums of the corrected pairs, compared to print
    for spec in reference_tables() {
        let e = entry(spec.entries[0]).expect("table entry");
        for (n, row) in spec.rows.iter().enumerate() {
            let slow = slow_closure(&e.pair, n as u32, spec.kind);
            let got = slow.coeff_row(row.cells.len().saturating_sub(1));
            if got != row.cells {
                failures.push(format!("table {} n={n}: iterated sums disagree with print", spec.table_no));
            }
        }
    }

    // truncated rows: when row 1 of a D table is a palindrome past x^0, so is
    // every full row, since products of palindromes are palindromes
    let mut symmetric = 0;
    for spec in reference_tables().iter().filter(|s| s.kind == ClosureKind::Denominator) {
        let rows = table_by_number(spec.table_no, PRINTED_N_MAX, None).expect("table exists");
        let is_palindrome = |r: &[BigInt]| r[1..].iter().eq(r[1..].iter().rev());
        if !is_palindrome(&rows[1]) {
            continue;
        }
        symmetric += 1;
        for (n, r) in rows.iter().enumerate() {
            if !is_palindrome(r) {
                failures.push(format!("table {} row {n} is not symmetric", spec.table_no));
            }
        }
    }

    let anchors: [(u32, usize, Vec<BigInt>); 4] = [
        (1, 4, ints(&[0, 1, 4, 6, 4, 1])),
        (8, 2, ints(&[0, 4, 7, 4, 1])),
        (29, 5, ints(&[0, 1024, 10240, 46080, 122880, 215040, 258048])),
        (78, 0, ints(&[0, 1, 1])),
    ];
    for (t, n, expected) in anchors {
        let rows = table_by_number(t, PRINTED_N_MAX, None).expect("table exists");
        let got = &rows[n][..expected.len().min(rows[n].len())];
        if got != expected.as_slice() {
            failures.push(format!("anchor table {t} row {n}: {got:?}"));
        }
        let printed = &reference_table(t).expect("table exists").rows[n].cells;
        if printed[..expected.len().min(printed.len())] != expected[..expected.len().min(printed.len())] {
            failures.push(format!("anchor table {t} row {n} differs from print"));
        }
    }
    Outcome::new(
        failures,
        format!(
            "{} tables, {cells} printed cells compared in {elapsed:.2?}, {symmetric} symmetric tables checked on full rows, anchors checked",
            reference_tables().len()
        ),
    )
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    let mut members = 0;
    for e in load_catalog() {
        for m in &e.members {
            members += 1;
            let got = bracket_pair(&parse(m).expect("member parses")).expect("member evaluates");
            if got != e.pair {
                failures.push(format!("{}: {m} gives {got}", e.id));
            }
        }
    }
    let report = verify_catalog();
    let warns: Vec<&str> = report.with_status(Status::Warn).map(|c| c.name.as_str()).collect();
    if warns != ["B5", "B19", "B20", "R33"] {
        failures.push(format!("flagged typos {warns:?}"));
    }
    for c in report.with_status(Status::Fail) {
        failures.push(c.to_string());
    }
    Outcome::new(
        failures,
        format!(
            "{} entries, {members} member expressions exact; flagged typos: {}; {} verification checks",
            load_catalog().len(),
            warns.join(", "),
            report.checks.len()
        ),
    )
}

fn closure_by_oracle(expr: &str, kind: ClosureKind) -> Polynomial {
    let e = parse(expr).expect("expression parses");
    state_sum_knot(&build_closure_diagram(&e, kind, DEFAULT_BUDGET).expect("within budget")).expect("closed diagram")
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let start = Instant::now();
    let mut compared = 0;
    for e in load_catalog() {
        let exprs: Vec<&str> = if e.is_prime() {
            e.members.clone()
        } else {
            e.members
                .iter()
                .copied()
                .filter(|m| parse(m).expect("member parses").crossing_count() <= ORACLE_MAX_CROSSINGS)
                .collect()
        };
        for m in exprs {
            let expr = parse(m).expect("member parses");
            let d = build_diagram(&expr, DEFAULT_BUDGET).expect("within budget");
            let sum = state_sum_tangle(&d).expect("tangle diagram");
            compared += 1;
            if sum != bracket_pair(&expr).expect("member evaluates") {
                failures.push(format!("{}: {m} state sum {sum}", e.id));
            }
        }
    }
    let n3 = closure_by_oracle("[3]", ClosureKind::Numerator);
    if n3 != p("x^3+4x^2+3x") {
        failures.push(format!("N([3]) state sum {n3}"));
    }
    let elapsed = start.elapsed();
    if elapsed > ORACLE_TIME_LIMIT {
        failures.push(format!("took {elapsed:?}, limit {ORACLE_TIME_LIMIT:?}"));
    }

    // required literally: the state sum of N([2]) equals <K2>
    let n2 = closure_by_oracle("[2]", ClosureKind::Numerator);
    let d2 = closure_by_oracle("[2]", ClosureKind::Denominator);
    let k2 = KnotClass::K2.bracket();
    if n2 != k2 {
        failures.push(format!(
            "N([2]) state sum is {n2}, not <K2> = {k2} (the algebra gives N([2]) = {}; D([2]) = {d2} is the closure equal to <K2>)",
            close(&bracket_pair(&parse("[2]").expect("parses")).expect("evaluates"), ClosureKind::Numerator)
        ));
    }
    Outcome::new(
        failures,
        format!("{compared} member diagrams agree with the algebra in {elapsed:.2?}; N([3]) = {n3}"),
    )
}

fn small_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-9i64..=9, 0..=IDENTITY_MAX_DEGREE + 1).prop_map(Polynomial::from_coeffs)
}

fn pair() -> impl Strategy<Value = BracketPair> {
    (small_poly(), small_poly()).prop_map(|(a, b)| BracketPair::new(a, b))
}

fn runner() -> TestRunner {
    let config = Config {
        cases: IDENTITY_CASES,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn identity<S: Strategy>(
    name: &str,
    failures: &mut Vec<String>,
    strategy: S,
    check: impl Fn(S::Value) -> Result<(), TestCaseError>,
) {
    if let Err(e) = runner().run(&strategy, check) {
        failures.push(format!("{name}: {e}"));
    }
}

fn criterion_4() -> Outcome {
    use ClosureKind::*;
    let mut failures = Vec::new();
    let x = Polynomial::x();
    let x2m1 = p("x^2-1");

    identity("R = N + D", &mut failures, pair(), |a| {
        prop_assert_eq!(close(&a, RClosure), close(&a, Numerator) + close(&a, Denominator));
        Ok(())
    });
    identity("x (A+B)^D = A^D B^D", &mut failures, (pair(), pair()), |(a, b)| {
        prop_assert_eq!(&x * close(&a.hsum(&b), Denominator), close(&a, Denominator) * close(&b, Denominator));
        Ok(())
    });
    identity("x (x^2-1) (A+B)^N", &mut failures, (pair(), pair()), |(a, b)| {
        let (an, ad, bn, bd) = (close(&a, Numerator), close(&a, Denominator), close(&b, Numerator), close(&b, Denominator));
        let lhs = &x * &x2m1 * close(&a.hsum(&b), Numerator);
        let rhs = (&an * &bn + &ad * &bd) * &x - (&ad * &bn + &an * &bd);
        prop_assert_eq!(lhs, rhs);
        Ok(())
    });
    identity("x (x^2-1) (A+B)^R", &mut failures, (pair(), pair()), |(a, b)| {
        let (an, ad, bn, bd) = (close(&a, Numerator), close(&a, Denominator), close(&b, Numerator), close(&b, Denominator));
        let lhs = &x * &x2m1 * close(&a.hsum(&b), RClosure);
        let rhs = &ad * &bd * x.pow(2) + (&an * &bn + &ad * &bd) * &x - (&ad * &bn + &an * &bd + &ad * &bd);
        prop_assert_eq!(lhs, rhs);
        Ok(())
    });
    identity("repeat_pair = n-fold sum", &mut failures, (pair(), 0..=REPEAT_MAX_N), |(a, n)| {
        let slow = (0..n).fold(BracketPair::zero_tangle(), |acc, _| acc.hsum(&a));
        prop_assert_eq!(repeat_pair(&a, n).expect("exact"), slow);
        Ok(())
    });
    let finite = pair().prop_filter("a(A) nonzero", |a| !a.a.is_zero());
    identity("F(A_n) = ((1 + x F)^n - 1) / x", &mut failures, (finite, 0..=REPEAT_MAX_N), |(a, n)| {
        let f = fraction(&a).expect("a nonzero");
        let one = TangleFraction::one();
        let xf = TangleFraction::from_poly(Polynomial::x());
        let expected = one
            .checked_add(&xf.checked_mul(&f).expect("finite"))
            .and_then(|s| s.checked_pow(n))
            .and_then(|s| s.checked_sub(&one))
            .and_then(|s| s.checked_div(&xf))
            .expect("finite operands");
        prop_assert_eq!(fraction(&repeat_pair(&a, n).expect("exact")).expect("a^n nonzero"), expected);
        Ok(())
    });
    Outcome::new(
        failures,
        format!("6 identities, {IDENTITY_CASES} random cases each, degrees <= {IDENTITY_MAX_DEGREE}"),
    )
}

fn criterion_5() -> Outcome {
    let dir = oeis_dir();
    let mut failures = Vec::new();
    let mut parts = Vec::new();
    for (t, a, result) in check_all(&dir) {
        match result {
            Ok(c) if c.passed() => parts.push(format!("table {t} = {a} ({} terms)", c.compared)),
            Ok(c) => failures.push(format!("table {t} vs {a}: {:?}", c.mismatches)),
            Err(e) => failures.push(format!("table {t} vs {a}: {e}")),
        }
    }
    // the generated rows must also be the printed rows for these tables
    for t in [1, 4, 7, 79] {
        let spec = reference_table(t).expect("table exists");
        let rows = table_by_number(t, PRINTED_N_MAX, None).expect("table exists");
        if !compare_rows(&spec.rows, &rows).is_empty() {
            failures.push(format!("table {t} differs from print"));
        }
    }
    Outcome::new(failures, format!("{} (snapshots in {})", parts.join(", "), dir.display()))
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let compose = |l: KnotClass, r: KnotClass| (l.bracket() * r.bracket()).div_by_x_exact().ok();
    for (k, l, r) in [
        (KnotClass::K2, KnotClass::K1, KnotClass::K1),
        (KnotClass::K4, KnotClass::K2, KnotClass::K1),
        (KnotClass::K6, KnotClass::K3, KnotClass::K1),
    ] {
        if compose(l, r) != Some(k.bracket()) {
            failures.push(format!("x^-1 <{l}><{r}> != <{k}>"));
        }
        // same product seen through tangles: [1]#l#r and [1]#k have equal pairs
        let twice = bracket_pair(&parse(&format!("[1]#{l}#{r}")).expect("parses")).expect("evaluates");
        let once = bracket_pair(&parse(&format!("[1]#{k}")).expect("parses")).expect("evaluates");
        let by_oracle = state_sum_tangle(&build_diagram(&parse(&format!("[1]#{l}#{r}")).expect("parses"), DEFAULT_BUDGET).expect("budget"))
            .expect("tangle");
        if twice != once || by_oracle != once {
            failures.push(format!("[1]#{l}#{r} and [1]#{k} differ"));
        }
    }
    for k in KnotClass::ALL {
        if state_sum_knot(&knot_diagram(k)).expect("closed") != k.bracket() {
            failures.push(format!("reference diagram of {k}"));
        }
    }
    Outcome::new(failures, "K2 = K1#K1, K4 = K2#K1, K6 = K3#K1 exact; K1..K6 diagrams match".into())
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for e in load_catalog() {
        for m in &e.members {
            let expr = parse(m).expect("member parses");
            let pair = bracket_pair(&expr).expect("member evaluates");
            count += 1;
            if pair.state_count() != BigInt::one() << expr.crossing_count() {
                failures.push(format!("{m}: a(1) + b(1) = {}", pair.state_count()));
            }
        }
    }
    for (expr, kind) in [("[3]", ClosureKind::Numerator), ("[2]", ClosureKind::Numerator), ("[2]", ClosureKind::Denominator)] {
        let e = parse(expr).expect("parses");
        let d = build_closure_diagram(&e, kind, DEFAULT_BUDGET).expect("budget");
        let sum = state_sum_knot(&d).expect("closed");
        count += 1;
        if sum.eval_one() != BigInt::one() << d.crossing_count() {
            failures.push(format!("{kind}({expr}) at x = 1 is {}", sum.eval_one()));
        }
    }
    Outcome::new(failures, format!("{count} expressions: a(1) + b(1) = 2^c"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    // touch the catalog outside the timed sections
    let _ = entry(EntryId(1));
    let _ = reference_tables();
    let criteria: [Criterion; 7] = [
        ("table reproduction", criterion_1),
        ("catalog verification", criterion_2),
        ("oracle equivalence", criterion_3),
        ("algebraic identities", criterion_4),
        ("OEIS cross-checks", criterion_5),
        ("connected-sum composition", criterion_6),
        ("state-count conservation", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.ok {
            failed += 1;
        }
        println!("criterion {} {name}: {} ({})", i + 1, if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
