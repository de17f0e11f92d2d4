//! Builds each subcommand's report in the requested format.
//!
//! All table rows come out sorted ascending by (d, n) and every value is
//! computed deterministically, so identical invocations emit identical
//! bytes. CSV stays all-numeric (booleans as 0/1, no quoting); rows whose
//! values overflow are flagged on stderr for CSV and carried as `error`
//! entries in JSON rather than dropped silently.

use clap::ValueEnum;
use hyperqueens::domination::{min_dominating_with, SolveOptions, SolveStatus};
use hyperqueens::{
    attack_line_count, count_independent, exists_independent, insufficiency_check, lower_bound,
    min_insufficient_n, reported_upper_bound, BoardSpec, IndependenceQuery, InsufficiencyQuery,
    Placement, Position,
};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::{Failure, Outcome};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

fn json_report(value: &Value) -> String {
    let mut s = serde_json::to_string(value).expect("report values serialize");
    s.push('\n');
    s
}

fn csv_table(header: &str, rows: &[String]) -> String {
    let mut out = String::from(header);
    out.push('\n');
    for row in rows {
        out.push_str(row);
        out.push('\n');
    }
    out
}

/// Tables reject zero sizes/dimensions up front (invalid arguments, exit
/// 2); after this, the only per-row failure mode left is overflow.
fn require_positive(values: &[u32], what: &str) -> Result<(), Failure> {
    if values.iter().any(|&v| v == 0) {
        return Err(Failure::invalid(format!("{what} must be at least 1")));
    }
    Ok(())
}

pub fn lines(dims: impl Iterator<Item = u32>, format: Format) -> Outcome {
    struct Row {
        d: u32,
        lines: Result<u64, hyperqueens::Error>,
    }
    let dims: Vec<u32> = dims.collect();
    require_positive(&dims, "dimension")?;
    let rows: Vec<Row> = dims
        .into_iter()
        .map(|d| Row {
            d,
            lines: attack_line_count(d),
        })
        .collect();

    let text = match format {
        Format::Json => {
            let values: Vec<Value> = rows
                .iter()
                .map(|r| match &r.lines {
                    Ok(v) => json!({"d": r.d, "lines": v}),
                    Err(e) => json!({"d": r.d, "error": e.to_string()}),
                })
                .collect();
            json_report(&Value::Array(values))
        }
        Format::Csv => {
            let mut kept = Vec::new();
            for r in &rows {
                match &r.lines {
                    Ok(v) => kept.push(format!("{},{}", r.d, v)),
                    Err(e) => eprintln!("lines row d={}: {}", r.d, e),
                }
            }
            csv_table("d,lines", &kept)
        }
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                match &r.lines {
                    Ok(v) => out.push_str(&format!("d={}: {} attack lines\n", r.d, v)),
                    Err(e) => out.push_str(&format!("d={}: {}\n", r.d, e)),
                }
            }
            out
        }
    };
    Ok((text, 0))
}

pub fn attack(board: Result<BoardSpec, Failure>, pos: &[Position], format: Format) -> Outcome {
    let b = board?;
    match pos {
        [p, q] => {
            let hit = b.attacks(p, q)?;
            let text = match format {
                Format::Json => json_report(&json!({
                    "n": b.size(), "d": b.dimension(),
                    "p": p, "q": q, "attacks": hit,
                })),
                Format::Csv => csv_table(
                    "n,d,attacks",
                    &[format!("{},{},{}", b.size(), b.dimension(), hit as u8)],
                ),
                Format::Text => format!(
                    "({p}) {} ({q}) on {b}\n",
                    if hit { "attacks" } else { "does not attack" }
                ),
            };
            Ok((text, if hit { 0 } else { 1 }))
        }
        [p] => {
            let attacked = b.attacked_set(p)?;
            let text = match format {
                Format::Json => json_report(&json!({
                    "n": b.size(), "d": b.dimension(),
                    "pos": p, "count": attacked.len(),
                    "attacked": attacked,
                })),
                Format::Csv => csv_table(
                    "n,d,count",
                    &[format!("{},{},{}", b.size(), b.dimension(), attacked.len())],
                ),
                Format::Text => {
                    let mut out = format!(
                        "({p}) on {b} attacks {} cells\n",
                        attacked.len()
                    );
                    for cell in &attacked {
                        out.push_str(&format!("  ({cell})\n"));
                    }
                    out
                }
            };
            Ok((text, 0))
        }
        _ => Err(Failure::invalid(
            "--pos must be given once (attacked set) or twice (attack test)",
        )),
    }
}

pub fn bound_table(
    sizes: impl Iterator<Item = u32>,
    dims: impl Iterator<Item = u32>,
    format: Format,
) -> Outcome {
    struct Row {
        n: u32,
        d: u32,
        lb: Result<u64, hyperqueens::Error>,
        reported_ub: Result<u64, hyperqueens::Error>,
        lines: Result<u64, hyperqueens::Error>,
    }
    let sizes: Vec<u32> = sizes.collect();
    let dims: Vec<u32> = dims.collect();
    require_positive(&sizes, "size")?;
    require_positive(&dims, "dimension")?;
    let mut rows = Vec::new();
    for d in dims {
        for &n in &sizes {
            rows.push(Row {
                n,
                d,
                lb: lower_bound(n as u64, d),
                reported_ub: reported_upper_bound(n as u64, d),
                lines: attack_line_count(d),
            });
        }
    }

    let text = match format {
        Format::Json => {
            let values: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let mut m = Map::new();
                    m.insert("n".into(), r.n.into());
                    m.insert("d".into(), r.d.into());
                    let mut failed = Vec::new();
                    for (key, val) in [
                        ("lb", &r.lb),
                        ("reported_ub", &r.reported_ub),
                        ("lines", &r.lines),
                    ] {
                        match val {
                            Ok(v) => {
                                m.insert(key.into(), (*v).into());
                            }
                            Err(_) => failed.push(key),
                        }
                    }
                    if !failed.is_empty() {
                        m.insert(
                            "error".into(),
                            format!("overflow: {}", failed.join(", ")).into(),
                        );
                    }
                    Value::Object(m)
                })
                .collect();
            json_report(&Value::Array(values))
        }
        Format::Csv => {
            let mut kept = Vec::new();
            for r in &rows {
                match (&r.lb, &r.reported_ub, &r.lines) {
                    (Ok(lb), Ok(ub), Ok(lines)) => {
                        kept.push(format!("{},{},{},{},{}", r.n, r.d, lb, ub, lines))
                    }
                    _ => eprintln!("bound row n={}, d={}: overflow", r.n, r.d),
                }
            }
            csv_table("n,d,lb,reported_ub,lines", &kept)
        }
        Format::Text => {
            let cell = |v: &Result<u64, hyperqueens::Error>| match v {
                Ok(x) => x.to_string(),
                Err(_) => "overflow".to_string(),
            };
            let mut out = String::new();
            for r in &rows {
                out.push_str(&format!(
                    "n={} d={}: lb={} reported_ub={} lines={}\n",
                    r.n,
                    r.d,
                    cell(&r.lb),
                    cell(&r.reported_ub),
                    cell(&r.lines)
                ));
            }
            out
        }
    };
    Ok((text, 0))
}

pub fn dominate(
    board: Result<BoardSpec, Failure>,
    node_budget: Option<u64>,
    symmetry: bool,
    format: Format,
) -> Outcome {
    let b = board?;
    let r = min_dominating_with(
        &b,
        &SolveOptions {
            node_budget,
            symmetry_reduction: symmetry,
            ..SolveOptions::default()
        },
    );
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string(&r).expect("result serializes");
            s.push('\n');
            s
        }
        Format::Csv => csv_table(
            "n,d,gamma,optimal,lb,ub,nodes",
            &[format!(
                "{},{},{},{},{},{},{}",
                b.size(),
                b.dimension(),
                r.gamma,
                (r.status == SolveStatus::Optimal) as u8,
                r.lb,
                r.ub,
                r.nodes_explored
            )],
        ),
        Format::Text => {
            let mut out = format!(
                "board {b}: gamma = {} ({})\n  lb = {}, ub = {}, nodes = {}\n  witness:",
                r.gamma, r.status, r.lb, r.ub, r.nodes_explored
            );
            for q in r.witness.queens() {
                out.push_str(&format!(" ({q})"));
            }
            out.push('\n');
            out
        }
    };
    let code = match r.status {
        SolveStatus::Optimal => 0,
        SolveStatus::BoundsOnly => 3,
    };
    Ok((text, code))
}

#[derive(Serialize)]
struct IndependentReport<'a> {
    n: u32,
    d: u32,
    m: u64,
    mode: &'static str,
    witness: Option<&'a Placement>,
    count: Option<String>,
}

pub fn independent(
    board: Result<BoardSpec, Failure>,
    queens: u64,
    count_mode: bool,
    format: Format,
) -> Outcome {
    let b = board?;
    let query = IndependenceQuery::new(b, queens)?;
    let (witness, count) = if count_mode {
        (None, Some(count_independent(&query).to_string()))
    } else {
        (exists_independent(&query), None)
    };
    let code = if count_mode || witness.is_some() { 0 } else { 1 };

    let report = IndependentReport {
        n: b.size(),
        d: b.dimension(),
        m: queens,
        mode: if count_mode { "count" } else { "exists" },
        witness: witness.as_ref(),
        count: count.clone(),
    };
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string(&report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            if count_mode {
                csv_table(
                    "n,d,m,count",
                    &[format!(
                        "{},{},{},{}",
                        b.size(),
                        b.dimension(),
                        queens,
                        count.as_deref().unwrap_or("0")
                    )],
                )
            } else {
                csv_table(
                    "n,d,m,found",
                    &[format!(
                        "{},{},{},{}",
                        b.size(),
                        b.dimension(),
                        queens,
                        witness.is_some() as u8
                    )],
                )
            }
        }
        Format::Text => match (&witness, &count) {
            (_, Some(c)) => format!(
                "{c} pairwise non-attacking placements of {queens} queens on {b}\n"
            ),
            (Some(w), None) => {
                let mut out = format!("{queens} non-attacking queens on {b}:");
                for q in w.queens() {
                    out.push_str(&format!(" ({q})"));
                }
                out.push('\n');
                out
            }
            (None, None) => format!("no placement of {queens} non-attacking queens on {b}\n"),
        },
    };
    Ok((text, code))
}

pub fn insufficiency(dim: u32, exponent: u32, size: Option<u64>, format: Format) -> Outcome {
    match size {
        Some(n) => {
            let query = InsufficiencyQuery::new(n, dim, exponent)?;
            let insufficient = insufficiency_check(&query);
            let text = match format {
                Format::Json => json_report(&json!({
                    "n": n, "d": dim, "k": exponent,
                    "insufficient": insufficient,
                })),
                Format::Csv => csv_table(
                    "n,d,k,insufficient",
                    &[format!("{},{},{},{}", n, dim, exponent, insufficient as u8)],
                ),
                Format::Text => format!(
                    "n^k = {n}^{exponent} queens {} dominate the {n}^{dim} board\n",
                    if insufficient {
                        "provably cannot"
                    } else {
                        "are not ruled out to"
                    }
                ),
            };
            Ok((text, if insufficient { 0 } else { 1 }))
        }
        None => {
            let threshold = min_insufficient_n(dim, exponent)?;
            let text = match format {
                Format::Json => json_report(&json!({
                    "d": dim, "k": exponent,
                    "min_insufficient_n": threshold,
                })),
                Format::Csv => csv_table(
                    "d,k,min_insufficient_n",
                    &[format!("{},{},{}", dim, exponent, threshold)],
                ),
                Format::Text => format!(
                    "smallest n where n^{exponent} queens cannot dominate the n^{dim} board: {threshold}\n"
                ),
            };
            Ok((text, 0))
        }
    }
}

pub fn audit(
    sizes: impl Iterator<Item = u32>,
    dims: impl Iterator<Item = u32>,
    node_budget: Option<u64>,
    symmetry: bool,
    max_cells: u64,
    format: Format,
) -> Outcome {
    struct Row {
        n: u32,
        d: u32,
        outcome: Result<AuditEntry, String>,
    }
    struct AuditEntry {
        lb: u64,
        gamma: u64,
        reported_ub: u64,
        status: SolveStatus,
        lb_ok: bool,
        ub_ok: bool,
    }

    let sizes: Vec<u32> = sizes.collect();
    let dims: Vec<u32> = dims.collect();
    require_positive(&sizes, "size")?;
    require_positive(&dims, "dimension")?;
    let options = SolveOptions {
        node_budget,
        symmetry_reduction: symmetry,
        ..SolveOptions::default()
    };
    let mut degraded = false;
    let mut rows = Vec::new();
    for d in dims {
        for &n in &sizes {
            let outcome = match BoardSpec::with_cell_cap(d, n, max_cells) {
                Err(e) => {
                    degraded = true;
                    Err(e.to_string())
                }
                Ok(b) => {
                    let r = min_dominating_with(&b, &options);
                    if r.status == SolveStatus::BoundsOnly {
                        degraded = true;
                    }
                    let reported_ub = reported_upper_bound(n as u64, d)
                        .expect("fits u64 whenever n^d does");
                    Ok(AuditEntry {
                        lb: r.lb,
                        gamma: r.gamma,
                        reported_ub,
                        status: r.status,
                        lb_ok: r.lb <= r.gamma,
                        ub_ok: r.gamma <= reported_ub,
                    })
                }
            };
            rows.push(Row { n, d, outcome });
        }
    }

    let text = match format {
        Format::Json => {
            let values: Vec<Value> = rows
                .iter()
                .map(|r| match &r.outcome {
                    Ok(e) => json!({
                        "n": r.n, "d": r.d,
                        "lb": e.lb, "gamma": e.gamma, "reported_ub": e.reported_ub,
                        "status": e.status,
                        "lb_le_gamma": e.lb_ok,
                        "gamma_le_reported_ub": e.ub_ok,
                    }),
                    Err(msg) => json!({"n": r.n, "d": r.d, "error": msg}),
                })
                .collect();
            json_report(&Value::Array(values))
        }
        Format::Csv => {
            let mut kept = Vec::new();
            for r in &rows {
                match &r.outcome {
                    Ok(e) => kept.push(format!(
                        "{},{},{},{},{},{},{},{}",
                        r.n,
                        r.d,
                        e.lb,
                        e.gamma,
                        e.reported_ub,
                        (e.status == SolveStatus::Optimal) as u8,
                        e.lb_ok as u8,
                        e.ub_ok as u8
                    )),
                    Err(msg) => eprintln!("audit row n={}, d={}: {}", r.n, r.d, msg),
                }
            }
            csv_table("n,d,lb,gamma,reported_ub,optimal,lb_ok,ub_ok", &kept)
        }
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                match &r.outcome {
                    Ok(e) => {
                        out.push_str(&format!(
                            "n={} d={}: lb={} gamma={} reported_ub={} [{}] lb<=gamma {} gamma<=reported_ub {}\n",
                            r.n,
                            r.d,
                            e.lb,
                            e.gamma,
                            e.reported_ub,
                            e.status,
                            if e.lb_ok { "holds" } else { "VIOLATED" },
                            if e.ub_ok { "holds" } else { "VIOLATED" },
                        ));
                    }
                    Err(msg) => out.push_str(&format!("n={} d={}: {}\n", r.n, r.d, msg)),
                }
            }
            out
        }
    };
    Ok((text, if degraded { 3 } else { 0 }))
}
