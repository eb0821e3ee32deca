use std::fmt::Write;

use koszulkt::ktheory::{CheckStatus, KTheoryReport};
use koszulkt::verify::Description;

fn list<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn wedge(tuple: &[usize]) -> String {
    if tuple.is_empty() {
        "1".to_string()
    } else {
        tuple.iter().map(|i| format!("e{i}")).collect::<Vec<_>>().join("^")
    }
}

pub fn description(d: &Description) -> String {
    let width = d.cartan_matrix.iter().flatten().map(|x| x.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    writeln!(out, "type: {}", d.type_string).unwrap();
    writeln!(out, "rank: {}", d.rank).unwrap();
    writeln!(out, "cartan matrix:").unwrap();
    for row in &d.cartan_matrix {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
        writeln!(out, "  [{}]", cells.join(" ")).unwrap();
    }
    writeln!(out, "positive roots: {}", d.positive_roots).unwrap();
    writeln!(out, "weyl group order: {}", d.weyl_group_order).unwrap();
    writeln!(out, "fundamental dimensions: ({})", list(&d.fundamental_dims)).unwrap();
    writeln!(out, "resolution ranks: [{}]", list(&d.resolution_ranks)).unwrap();
    out
}

pub fn report(r: &KTheoryReport) -> String {
    let gens = |g: &[Vec<usize>]| g.iter().map(|t| wedge(t)).collect::<Vec<_>>().join(", ");
    let mut out = String::new();
    writeln!(out, "type: {}", r.type_string).unwrap();
    writeln!(out, "rank: {}", r.rank).unwrap();
    writeln!(out, "fundamental dimensions: ({})", list(&r.fundamental_dims)).unwrap();
    writeln!(out, "resolution ranks: [{}]", list(&r.resolution_ranks)).unwrap();
    writeln!(out, "K0 rank over R(K): {}  generators: {}", r.k0_rank, gens(&r.generators_even)).unwrap();
    writeln!(out, "K1 rank over R(K): {}  generators: {}", r.k1_rank, gens(&r.generators_odd)).unwrap();
    let trivial = if r.e1_page.all_trivial() { "all trivial" } else { "non-trivial" };
    writeln!(out, "E1 differentials: {trivial}").unwrap();
    writeln!(out, "checks:").unwrap();
    for (name, c) in r.checks.iter() {
        let status = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skipped",
            CheckStatus::NotRun => "not run",
        };
        if c.detail.is_empty() {
            writeln!(out, "  {name:<12} {status}").unwrap();
        } else {
            writeln!(out, "  {name:<12} {status:<8} {}", c.detail).unwrap();
        }
    }
    out
}
