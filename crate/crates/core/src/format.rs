//! Line-oriented text formats for annotated instances, MRSS instances and
//! reduction traces.
//!
//! Annotated instance (0-based ids, `c` lines are comments):
//!
//! ```text
//! p oa <n> <m>
//! k <budget>
//! mode offensive|strong|defensive
//! card atmost|exact
//! e <u> <v>
//! f <v>        forbidden
//! nn <v>       necessary
//! ```
//!
//! MRSS instance:
//!
//! ```text
//! mrss <k> <n> <k'>
//! t <t(1)> .. <t(k)>
//! s <s(1)> .. <s(k)>      (n lines)
//! ```
//!
//! Trace: `step`, `budget_in`, `budget_out`, `vertices <expected> <actual>`,
//! `edges <expected> <actual>`, any `dropped_vector <index>`, then one
//! `role <name> <id>` line per gadget vertex in allocation order.

use std::fmt::Write as _;

use crate::alliance::{AllianceKind, AnnotatedInstance, CardinalityMode};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, Vertex, VertexSet};
use crate::mrss::MrssInstance;
use crate::reduce::{ReductionTrace, SizeCheck, Step};

fn perr<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        msg: msg.into(),
    })
}

fn num<T: std::str::FromStr>(tok: Option<&str>, line: usize, what: &str) -> Result<T> {
    let Some(tok) = tok else {
        return perr(line, format!("missing {what}"));
    };
    if tok.starts_with('-') {
        return perr(line, format!("{what} must be nonnegative, got {tok}"));
    }
    tok.parse()
        .or_else(|_| perr(line, format!("bad {what} {tok:?}")))
}

fn no_more<'a>(mut toks: impl Iterator<Item = &'a str>, line: usize) -> Result<()> {
    match toks.next() {
        Some(extra) => perr(line, format!("unexpected token {extra:?}")),
        None => Ok(()),
    }
}

/// Meaningful lines with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && *l != "c" && !l.starts_with("c "))
}

pub fn parse_instance(text: &str) -> Result<AnnotatedInstance> {
    let mut header: Option<(usize, usize)> = None;
    let mut builder: Option<GraphBuilder> = None;
    let mut budget = None;
    let mut kind = None;
    let mut card = CardinalityMode::AtMost;
    let mut forbidden = VertexSet::new();
    let mut necessary = VertexSet::new();
    let mut seen_edges = std::collections::HashSet::new();
    let mut last_line = 0;

    for (ln, line) in lines(text) {
        last_line = ln;
        let mut toks = line.split_whitespace();
        let tag = toks.next().unwrap_or_default();
        if tag != "p" && header.is_none() {
            return perr(ln, "expected problem line `p oa <n> <m>` first");
        }
        let n = header.map(|h| h.0).unwrap_or(0);
        let vertex = |tok: Option<&str>| -> Result<Vertex> {
            let v: Vertex = num(tok, ln, "vertex id")?;
            if v >= n {
                return perr(ln, format!("vertex {v} out of range for n = {n}"));
            }
            Ok(v)
        };
        match tag {
            "p" => {
                if header.is_some() {
                    return perr(ln, "duplicate problem line");
                }
                if toks.next() != Some("oa") {
                    return perr(ln, "expected `p oa <n> <m>`");
                }
                let n = num(toks.next(), ln, "vertex count")?;
                let m = num(toks.next(), ln, "edge count")?;
                header = Some((n, m));
                builder = Some(GraphBuilder::new(n));
            }
            "k" => budget = Some(num::<usize>(toks.next(), ln, "budget")?),
            "mode" => {
                let word = toks.next().unwrap_or_default();
                kind = Some(
                    word.parse::<AllianceKind>()
                        .or_else(|e| perr(ln, e.to_string()))?,
                );
            }
            "card" => {
                let word = toks.next().unwrap_or_default();
                card = word.parse().or_else(|e: Error| perr(ln, e.to_string()))?;
            }
            "e" => {
                let u = vertex(toks.next())?;
                let v = vertex(toks.next())?;
                if u == v {
                    return perr(ln, format!("self-loop at {u}"));
                }
                if !seen_edges.insert((u.min(v), u.max(v))) {
                    return perr(ln, format!("duplicate edge ({u}, {v})"));
                }
                builder.as_mut().expect("header seen").add_edge(u, v)?;
            }
            "f" => {
                forbidden.insert(vertex(toks.next())?);
            }
            "nn" | "n" => {
                necessary.insert(vertex(toks.next())?);
            }
            other => return perr(ln, format!("unknown line type {other:?}")),
        }
        no_more(toks, ln)?;
    }

    let Some((_, m)) = header else {
        return perr(last_line.max(1), "missing problem line");
    };
    let graph: Graph = builder.expect("header seen").build()?;
    if graph.edge_count() != m {
        return perr(
            last_line,
            format!("header announces {m} edges, found {}", graph.edge_count()),
        );
    }
    let Some(budget) = budget else {
        return perr(last_line, "missing `k` line");
    };
    let Some(kind) = kind else {
        return perr(last_line, "missing `mode` line");
    };
    if let Some(v) = forbidden.iter().find(|&v| necessary.contains(v)) {
        return perr(
            last_line,
            format!("vertex {v} is both forbidden and necessary"),
        );
    }
    AnnotatedInstance::new(graph, forbidden, necessary, budget, kind, card)
        .or_else(|e| perr(last_line, e.to_string()))
}

pub fn write_instance(inst: &AnnotatedInstance) -> String {
    let mut out = String::new();
    let g = &inst.graph;
    writeln!(out, "p oa {} {}", g.n(), g.edge_count()).unwrap();
    writeln!(out, "k {}", inst.budget).unwrap();
    writeln!(out, "mode {}", inst.kind).unwrap();
    writeln!(out, "card {}", inst.cardinality.as_str()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    for v in inst.forbidden.iter() {
        writeln!(out, "f {v}").unwrap();
    }
    for v in inst.necessary.iter() {
        writeln!(out, "nn {v}").unwrap();
    }
    out
}

pub fn parse_mrss(text: &str) -> Result<MrssInstance> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut target: Option<Vec<u64>> = None;
    let mut vectors = Vec::new();
    let mut last_line = 0;
    for (ln, line) in lines(text) {
        last_line = ln;
        let mut toks = line.split_whitespace();
        let tag = toks.next().unwrap_or_default();
        match (tag, header) {
            ("mrss", None) => {
                let k: usize = num(toks.next(), ln, "dimension")?;
                if k == 0 {
                    return perr(ln, "dimension must be at least 1");
                }
                let n = num(toks.next(), ln, "vector count")?;
                let kp = num(toks.next(), ln, "cardinality bound")?;
                no_more(toks, ln)?;
                header = Some((k, n, kp));
            }
            ("mrss", Some(_)) => return perr(ln, "duplicate header"),
            (_, None) => return perr(ln, "expected header `mrss <k> <n> <k'>` first"),
            ("t" | "s", Some((k, _, _))) => {
                let entries = toks
                    .map(|t| num::<u64>(Some(t), ln, "entry"))
                    .collect::<Result<Vec<_>>>()?;
                if entries.len() != k {
                    return perr(ln, format!("expected {k} entries, got {}", entries.len()));
                }
                if tag == "t" {
                    if target.replace(entries).is_some() {
                        return perr(ln, "duplicate target line");
                    }
                } else {
                    vectors.push(entries);
                }
            }
            (other, _) => return perr(ln, format!("unknown line type {other:?}")),
        }
    }
    let Some((_, n, kprime)) = header else {
        return perr(last_line.max(1), "missing header");
    };
    let Some(target) = target else {
        return perr(last_line, "missing target line");
    };
    if vectors.len() != n {
        return perr(
            last_line,
            format!("header announces {n} vectors, found {}", vectors.len()),
        );
    }
    MrssInstance::new(kprime, vectors, target).or_else(|e| perr(last_line, e.to_string()))
}

pub fn write_mrss(inst: &MrssInstance) -> String {
    let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ");
    let mut out = format!(
        "mrss {} {} {}\n",
        inst.dim(),
        inst.vectors.len(),
        inst.kprime
    );
    writeln!(out, "t {}", join(&inst.target)).unwrap();
    for s in &inst.vectors {
        writeln!(out, "s {}", join(s)).unwrap();
    }
    out
}

pub fn write_trace(trace: &ReductionTrace) -> String {
    let mut out = String::new();
    writeln!(out, "step {}", trace.step).unwrap();
    writeln!(out, "budget_in {}", trace.budget_in).unwrap();
    writeln!(out, "budget_out {}", trace.budget_out).unwrap();
    writeln!(
        out,
        "vertices {} {}",
        trace.size.expected_vertices, trace.size.actual_vertices
    )
    .unwrap();
    writeln!(
        out,
        "edges {} {}",
        trace.size.expected_edges, trace.size.actual_edges
    )
    .unwrap();
    for s in &trace.dropped_vectors {
        writeln!(out, "dropped_vector {s}").unwrap();
    }
    for (name, id) in &trace.roles {
        writeln!(out, "role {name} {id}").unwrap();
    }
    out
}

/// Several traces, separated by blank lines.
pub fn write_traces(traces: &[ReductionTrace]) -> String {
    traces
        .iter()
        .map(write_trace)
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn parse_traces(text: &str) -> Result<Vec<ReductionTrace>> {
    let mut out: Vec<ReductionTrace> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(tag) = toks.next() else { continue };
        if tag == "step" {
            let step: Step = toks
                .next()
                .unwrap_or_default()
                .parse()
                .or_else(|e: Error| perr(ln, e.to_string()))?;
            out.push(ReductionTrace::new(step, 0, 0));
            no_more(toks, ln)?;
            continue;
        }
        let Some(trace) = out.last_mut() else {
            return perr(ln, "expected `step` line first");
        };
        match tag {
            "budget_in" => trace.budget_in = num(toks.next(), ln, "budget")?,
            "budget_out" => trace.budget_out = num(toks.next(), ln, "budget")?,
            "vertices" | "edges" => {
                let expected = num(toks.next(), ln, "count")?;
                let actual = num(toks.next(), ln, "count")?;
                let size: &mut SizeCheck = &mut trace.size;
                if tag == "vertices" {
                    size.expected_vertices = expected;
                    size.actual_vertices = actual;
                } else {
                    size.expected_edges = expected;
                    size.actual_edges = actual;
                }
            }
            "dropped_vector" => trace
                .dropped_vectors
                .push(num(toks.next(), ln, "vector index")?),
            "role" => {
                let name = toks.next().ok_or(Error::Parse {
                    line: ln,
                    msg: "missing role name".into(),
                })?;
                let id = num(toks.next(), ln, "vertex id")?;
                if trace.roles.insert(name.to_string(), id).is_some() {
                    return perr(ln, format!("role {name} assigned twice"));
                }
            }
            other => return perr(ln, format!("unknown trace line {other:?}")),
        }
        no_more(toks, ln)?;
    }
    Ok(out)
}

/// Parses a comma-separated vertex list such as `1,4,7`.
pub fn parse_vertex_list(text: &str) -> Result<VertexSet> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| num::<Vertex>(Some(t), 1, "vertex id"))
        .collect()
}
