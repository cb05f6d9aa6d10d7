//! Cross-validation of the transcribed catalog against the tangle algebra,
//! the state-sum oracle and the printed tables.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::oeis::{self, oeis_dir};
use super::tables::{compare_rows, reference_tables, table};
use super::{entry, load_catalog, CatalogEntry, EntryId, Heading, TypoField};
use crate::closures::{repeat_closure, ClosureKind};
use crate::fraction::skeleton;
use crate::oracle::{oracle_pair, DEFAULT_BUDGET};
use crate::poly::Polynomial;
use crate::tangle::{bracket_pair, parse, BracketPair, KnotClass};

/// Formula and cross-reference checks cover `n = 0..=N_CHECK`.
pub const N_CHECK: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    /// A mismatch explained by a flagged typo.
    Warn,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Warn => "WARN",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub status: Status,
    pub name: String,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.status, self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    fn push(&mut self, status: Status, name: impl Into<String>, detail: impl Into<String>) {
        self.checks.push(Check {
            status,
            name: name.into(),
            detail: detail.into(),
        });
    }

    fn pass_if(&mut self, ok: bool, name: impl Into<String>, detail: impl Into<String>) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(status, name, detail);
    }

    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn with_status(&self, status: Status) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.status == status)
    }

    pub fn is_success(&self) -> bool {
        self.count(Status::Fail) == 0
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(
            f,
            "{} checks: {} passed, {} flagged typos, {} failed",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Warn),
            self.count(Status::Fail)
        )
    }
}

fn show(p: &BracketPair) -> String {
    format!("({}, {})", p.a, p.b)
}

fn members(report: &mut VerificationReport, e: &CatalogEntry) -> Option<BracketPair> {
    let mut computed: Option<BracketPair> = None;
    let mut bad = Vec::new();
    for m in &e.members {
        let p = match parse(m).map_err(|x| x.to_string()).and_then(|x| bracket_pair(&x).map_err(|x| x.to_string())) {
            Ok(p) => p,
            Err(msg) => {
                bad.push(format!("{m}: {msg}"));
                continue;
            }
        };
        let c = parse(m).expect("parsed above").crossing_count();
        if p.state_count() != BigInt::one() << c {
            bad.push(format!("{m}: a(1) + b(1) = {} but 2^{c} states", p.state_count()));
        }
        if p != e.pair {
            bad.push(format!("{m} evaluates to {}", show(&p)));
        }
        computed.get_or_insert(p);
    }
    report.pass_if(
        bad.is_empty(),
        format!("{} members", e.id),
        if bad.is_empty() {
            format!("{} expression(s) evaluate to {}", e.members.len(), show(&e.pair))
        } else {
            bad.join("; ")
        },
    );
    computed
}

fn printed_pair(report: &mut VerificationReport, e: &CatalogEntry, computed: &BracketPair) {
    let name = format!("B{}", e.id.0);
    if &e.printed_pair == computed {
        report.push(Status::Pass, name, "printed pair matches");
        return;
    }
    let typo = e
        .typos
        .iter()
        .find(|t| matches!(t.field, TypoField::PairA | TypoField::PairB));
    match typo {
        Some(t) if &e.pair == computed => report.push(
            Status::Warn,
            name,
            format!("printed typo: {} should read {}", t.printed_text, t.corrected),
        ),
        _ => report.push(
            Status::Fail,
            name,
            format!("printed {} but computed {}", show(&e.printed_pair), show(computed)),
        ),
    }
}

fn formulas(report: &mut VerificationReport, e: &CatalogEntry, computed: &BracketPair) {
    for kind in ClosureKind::ALL {
        let name = format!("{}{}", kind.letter(), e.id.0);
        let first_bad = |f: &super::ClosureFormula| {
            (0..=N_CHECK).find(|&n| f.eval(n) != repeat_closure(computed, n, kind))
        };
        match first_bad(e.printed_formula(kind)) {
            None => report.push(Status::Pass, name, format!("formula holds for n = 0..{N_CHECK}")),
            Some(n) => {
                let flagged = kind == ClosureKind::RClosure
                    && e.typos.iter().any(|t| t.field == TypoField::RLead)
                    && first_bad(e.formula(kind)).is_none();
                let detail = format!(
                    "printed formula gives {} at n = {n}, closed form gives {}",
                    e.printed_formula(kind).eval(n),
                    repeat_closure(computed, n, kind)
                );
                if flagged {
                    let t = e.typos.iter().find(|t| t.field == TypoField::RLead).expect("flagged");
                    report.push(
                        Status::Warn,
                        name,
                        format!("printed typo: lead {} should read {}; {detail}", t.printed_text, t.corrected),
                    );
                } else {
                    report.push(Status::Fail, name, detail);
                }
            }
        }
    }
}

fn d_cross_refs(report: &mut VerificationReport, e: &CatalogEntry) {
    let Some(t) = e.table_no(ClosureKind::Denominator) else {
        return;
    };
    let listed: BTreeSet<EntryId> = e.d_cross_refs.iter().copied().chain([e.id]).collect();
    let sharing: BTreeSet<EntryId> = load_catalog()
        .iter()
        .filter(|o| o.table_no(ClosureKind::Denominator) == Some(t))
        .map(|o| o.id)
        .collect();
    let mut bad = Vec::new();
    if listed != sharing {
        bad.push(format!("cross-reference set {listed:?} differs from sharers of table {t}: {sharing:?}"));
    }
    for id in &listed {
        let other = entry(*id).expect("cross-references name catalog entries");
        for n in 0..=N_CHECK {
            if repeat_closure(&other.pair, n, ClosureKind::Denominator)
                != repeat_closure(&e.pair, n, ClosureKind::Denominator)
            {
                bad.push(format!("D{} differs from D{} at n = {n}", id.0, e.id.0));
                break;
            }
        }
    }
    let refs: Vec<String> = e.d_cross_refs.iter().map(|r| format!("D{}", r.0)).collect();
    let detail = if bad.is_empty() {
        if refs.is_empty() {
            format!("table {t} is not shared")
        } else {
            format!("table {t} shared with {}", refs.join(", "))
        }
    } else {
        bad.join("; ")
    };
    report.pass_if(bad.is_empty(), format!("D{} cross-references", e.id.0), detail);
}

fn oracle(report: &mut VerificationReport, e: &CatalogEntry) {
    let mut bad = Vec::new();
    for m in &e.members {
        let expr = parse(m).expect("catalog members parse");
        match oracle_pair(&expr, DEFAULT_BUDGET) {
            Ok(p) if p == e.pair => {}
            Ok(p) => bad.push(format!("{m}: state sum gives {}", show(&p))),
            Err(err) => bad.push(format!("{m}: {err}")),
        }
    }
    report.pass_if(
        bad.is_empty(),
        format!("{} oracle", e.id),
        if bad.is_empty() {
            "state sums agree".to_string()
        } else {
            bad.join("; ")
        },
    );
}

fn heading(report: &mut VerificationReport, e: &CatalogEntry) {
    let name = format!("{} heading", e.id);
    let r = match skeleton(&e.pair) {
        Ok(r) => r,
        Err(err) => {
            report.pass_if(e.heading == Heading::Trivial && e.pair.a.is_zero() != e.pair.b.is_zero(), name, err.to_string());
            return;
        }
    };
    match e.heading {
        Heading::Prime => report.pass_if(r.is_prime, name, format!("prime, knot factor {}", r.knot_factor)),
        Heading::Knotted(skel, k) => {
            let skel_pair = &entry(EntryId(skel)).expect("skeleton entry exists").pair;
            let ok = &r.skeleton == skel_pair && r.knot_factor == k.bracket();
            report.pass_if(
                ok,
                name,
                format!(
                    "skeleton {} (A{skel}), knot factor {} ({k})",
                    show(&r.skeleton),
                    r.knot_factor
                ),
            );
        }
        Heading::Trivial => {
            let ok = (e.pair.a.clone() * e.pair.b.clone()).is_zero();
            report.pass_if(ok, name, "a(A) b(A) = 0");
        }
    }
}

fn distinct(report: &mut VerificationReport) {
    let nontrivial: Vec<&CatalogEntry> = load_catalog()
        .iter()
        .filter(|e| e.heading != Heading::Trivial)
        .collect();
    let pairs: BTreeSet<&BracketPair> = nontrivial.iter().map(|e| &e.pair).collect();
    report.pass_if(
        pairs.len() == nontrivial.len(),
        "distinct pairs",
        format!("{} distinct pairs among {} nontrivial entries", pairs.len(), nontrivial.len()),
    );
}

/// `<K> = x^-1 <K1> <K2>` for the three composite classes.
pub fn knot_compositions() -> [(KnotClass, KnotClass, KnotClass, bool); 3] {
    [
        (KnotClass::K2, KnotClass::K1, KnotClass::K1),
        (KnotClass::K4, KnotClass::K2, KnotClass::K1),
        (KnotClass::K6, KnotClass::K3, KnotClass::K1),
    ]
    .map(|(k, l, r)| {
        let product: Polynomial = l.bracket() * r.bracket();
        let ok = product.div_by_x_exact().is_ok_and(|q| q == k.bracket());
        (k, l, r, ok)
    })
}

fn tables(report: &mut VerificationReport) {
    for spec in reference_tables() {
        let name = format!("Table {}", spec.table_no);
        let expected: BTreeSet<EntryId> = load_catalog()
            .iter()
            .filter(|e| e.table_no(spec.kind) == Some(spec.table_no))
            .map(|e| e.id)
            .collect();
        let listed: BTreeSet<EntryId> = spec.entries.iter().copied().collect();
        let mut bad = Vec::new();
        if listed != expected {
            bad.push(format!("header lists {listed:?}, catalog cites it from {expected:?}"));
        }
        let n_max = spec.rows.len().saturating_sub(1) as u32;
        for id in &listed {
            let e = entry(*id).expect("table entries exist");
            let generated = table(e, spec.kind, n_max, None);
            for (n, k, printed, got) in compare_rows(&spec.rows, &generated) {
                bad.push(format!("{}{}: n = {n}, k = {k}: printed {printed}, generated {got}", spec.kind.letter(), id.0));
            }
        }
        let truncated = spec.rows.iter().filter(|r| r.truncated).count();
        let detail = if bad.is_empty() {
            format!("{} cells match{}", spec.cell_count() * listed.len().max(1), if truncated > 0 {
                format!(" ({truncated} truncated rows compared on their prefix)")
            } else {
                String::new()
            })
        } else {
            bad.join("; ")
        };
        report.pass_if(bad.is_empty(), name, detail);
    }
}

fn oeis_checks(report: &mut VerificationReport) {
    for (t, a, result) in oeis::check_all(&oeis_dir()) {
        let name = format!("Table {t} vs {a}");
        match result {
            Ok(c) => report.pass_if(
                c.passed(),
                name,
                if c.passed() {
                    format!("{} terms match", c.compared)
                } else {
                    format!("{} of {} terms differ, first {:?}", c.mismatches.len(), c.compared, c.mismatches[0])
                },
            ),
            Err(err) => report.push(Status::Fail, name, err.to_string()),
        }
    }
}

/// Runs every catalog check. Flagged typos are reported as `WARN`.
pub fn verify_catalog() -> VerificationReport {
    let mut report = VerificationReport::default();
    for e in load_catalog() {
        let Some(computed) = members(&mut report, e) else {
            continue;
        };
        printed_pair(&mut report, e, &computed);
        formulas(&mut report, e, &computed);
        d_cross_refs(&mut report, e);
        oracle(&mut report, e);
        heading(&mut report, e);
    }
    distinct(&mut report);
    for (k, l, r, ok) in knot_compositions() {
        report.pass_if(ok, format!("{k} = {l} # {r}"), format!("x^-1 <{l}><{r}> = <{k}>"));
    }
    tables(&mut report);
    oeis_checks(&mut report);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_verifies_with_four_flagged_typos() {
        let r = verify_catalog();
        let fails: Vec<String> = r.with_status(Status::Fail).map(Check::to_string).collect();
        assert!(fails.is_empty(), "{fails:#?}");
        let warns: Vec<&str> = r.with_status(Status::Warn).map(|c| c.name.as_str()).collect();
        assert_eq!(warns, ["B5", "B19", "B20", "R33"]);
        assert!(r.is_success());
        assert!(r.to_string().ends_with("4 flagged typos, 0 failed"));
    }

    #[test]
    fn knot_classes_compose() {
        assert!(knot_compositions().iter().all(|c| c.3));
    }

    #[test]
    fn shared_d_tables() {
        let d13 = entry(EntryId(13)).unwrap();
        assert_eq!(d13.d_cross_refs, [23, 27, 29, 33].map(EntryId));
        for id in &d13.d_cross_refs {
            let other = entry(*id).unwrap();
            for n in 0..=N_CHECK {
                assert_eq!(
                    repeat_closure(&other.pair, n, ClosureKind::Denominator),
                    repeat_closure(&d13.pair, n, ClosureKind::Denominator)
                );
            }
        }
    }
}
