//! T-sum ledgers. Tables are bound in their bundled order so that names
//! fixed by one table are available to the next; each suite then checks its
//! own tables cell by cell.

use std::collections::BTreeSet;

use minorkit::canon::CanonicalForm;
use minorkit::tables::{bind_table, builtin_tables, check_table, Context, Evaluator, TableCheck};
use minorkit::{Graph, MinorModel};
use serde_json::json;

use super::record;
use crate::{Check, Ctx, SuiteResult, VerifyError};

const LEDGER_CLAIM: &str = "For each row: T-sums of the base at a cubic vertex orbit with the stated number of contracted matching edges give exactly the named W6-free classes (or only a superset of them where the table lists representatives), and the cells marked W6 give no new W6-free class. Vertex classes are matched to automorphism orbits and names to isomorphism classes, since printed labels are not available";

fn run_tables(cx: &Ctx, r: &mut SuiteResult, ids: &[&str]) -> Result<(), VerifyError> {
    let resolve = |n: &str| cx.cat.table_resolver(n);
    let eval = Evaluator::new(cx.cfg.budget);
    let mut tcx = Context::new(&resolve, &eval);
    for table in builtin_tables() {
        let binding = bind_table(&table, &tcx);
        if ids.contains(&table.id.as_str()) {
            let checked = check_table(&table, &binding, &tcx)?;
            if binding.truncated {
                r.note(format!("{}: reading search truncated", table.id));
            }
            report(r, &checked)?;
        }
        for (n, k) in binding.unique_names() {
            tcx.known.entry(n).or_insert(k);
        }
    }
    Ok(())
}

fn report(r: &mut SuiteResult, t: &TableCheck) -> Result<(), VerifyError> {
    let mut seen: BTreeSet<String> = BTreeSet::new();
    for c in &t.cells {
        let free: Vec<&str> = c.outcomes.iter().filter(|o| o.w6_free).map(|o| o.graph6.as_str()).collect();
        let expected = if c.expected.is_empty() { json!("W6") } else { json!(c.expected) };
        r.checks.push(Check {
            name: format!("{} row {} T{}", t.table, c.row, c.contracted),
            expected,
            observed: json!({ "w6_free": free, "detail": c.detail }),
            ok: c.ok,
        });
        for o in &c.outcomes {
            let Some(sets) = &o.w6_model else { continue };
            if seen.insert(o.graph6.as_str().to_string()) {
                let g: Graph = o.graph6.graph();
                let m = MinorModel { branch_sets: sets.iter().map(|s| s.iter().fold(0, |acc, &v| acc | 1 << v)).collect() };
                record(r, &format!("{} row {}", t.table, c.row), &g, &minorkit::constructions::wheel(6), "W6", &m)?;
            }
        }
    }
    for f in &t.failed_rows {
        r.checks.push(Check {
            name: format!("{} row {} binds", t.table, f.row),
            expected: json!(true),
            observed: json!(f.reason),
            ok: false,
        });
    }
    let names: Vec<(String, &str)> = t.names.iter().map(|(n, f): (&String, &CanonicalForm)| (n.clone(), f.as_str())).collect();
    r.note(format!(
        "{}: {} consistent readings, {} cells, {} failed; bound names {:?}",
        t.table,
        t.readings,
        t.cells.len(),
        t.cells.iter().filter(|c| !c.ok).count(),
        names
    ));
    Ok(())
}

pub fn s11(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let mut r = SuiteResult::new("S11", "T-sum ledgers of K4, K33, cube and cube^1", LEDGER_CLAIM);
    run_tables(cx, &mut r, &["tsum-k4-k33", "tsum-cube", "tsum-cube1"])?;
    Ok(r)
}

pub fn s12(cx: &Ctx) -> Result<SuiteResult, VerifyError> {
    let mut r = SuiteResult::new("S12", "T-sum ledgers of the variant families", LEDGER_CLAIM);
    run_tables(cx, &mut r, &["tsum-h3", "tsum-h3a", "tsum-h3b", "tsum-h1", "tsum-h2", "tsum-k33-10", "tsum-k43"])?;
    Ok(r)
}
