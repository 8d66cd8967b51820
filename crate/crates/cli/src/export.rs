//! Edge list, DOT and JSON renderings of a graph, and the importers for the
//! edge list and JSON forms.

use std::fmt::Write as _;

use horadam::graph::two_coloring;
use horadam::words::enumerate_words;
use horadam::{HoradamGraph, Params, Word};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub fn convention(p: &Params) -> &'static str {
    if p.compact_rendering() {
        "words are digit strings"
    } else {
        "words are comma-separated letters"
    }
}

fn header(p: &Params) -> String {
    format!("horadam a={} b={} n={}", p.a, p.b, p.n)
}

/// `u<TAB>w` per edge, sorted by vertex order.
pub fn edge_list(g: &HoradamGraph) -> String {
    let p = g.params();
    let mut out = format!("# {}\n# {}\n", header(p), convention(p));
    for (u, w) in g.edges() {
        let _ = writeln!(out, "{}\t{}", g.vertex(u).render(p), g.vertex(w).render(p));
    }
    out
}

pub fn dot(g: &HoradamGraph, color: bool) -> String {
    let p = g.params();
    let mut out = format!("// {}; {}\ngraph horadam {{\n", header(p), convention(p));
    let colors = two_coloring(g);
    for (i, v) in g.vertices().iter().enumerate() {
        if color {
            let name = if colors[i] == 0 { "blue" } else { "red" };
            let _ = writeln!(out, "  \"{}\" [color={name}];", v.render(p));
        } else {
            let _ = writeln!(out, "  \"{}\";", v.render(p));
        }
    }
    for (u, w) in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", g.vertex(u).render(p), g.vertex(w).render(p));
    }
    out.push_str("}\n");
    out
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonParams {
    a: u32,
    b: u32,
    n: usize,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonMeta {
    s_n: u64,
    e_n: u64,
    words: String,
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonGraph {
    params: JsonParams,
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
    meta: JsonMeta,
}

pub fn json(g: &HoradamGraph) -> String {
    let p = g.params();
    let doc = JsonGraph {
        params: JsonParams { a: p.a, b: p.b, n: p.n },
        vertices: g.vertices().iter().map(|v| v.render(p)).collect(),
        edges: g.edges().map(|(u, w)| [u, w]).collect(),
        meta: JsonMeta {
            s_n: g.order() as u64,
            e_n: g.size() as u64,
            words: convention(p).into(),
        },
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("graph serializes");
    text.push('\n');
    text
}

fn parse_header(line: &str) -> Result<Params, CliError> {
    let rest = line
        .strip_prefix("# horadam ")
        .ok_or_else(|| CliError::Format(format!("expected a '# horadam' header, got {line:?}")))?;
    let (mut a, mut b, mut n) = (None, None, None);
    for field in rest.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| CliError::Format(format!("bad header field {field:?}")))?;
        let bad = || CliError::Format(format!("bad header value {field:?}"));
        match key {
            "a" => a = Some(value.parse().map_err(|_| bad())?),
            "b" => b = Some(value.parse().map_err(|_| bad())?),
            "n" => n = Some(value.parse().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    match (a, b, n) {
        (Some(a), Some(b), Some(n)) => Ok(Params::new(a, b, n)?),
        _ => Err(CliError::Format("header must set a, b and n".into())),
    }
}

fn index_of(g_vertices: &[Word], w: &Word) -> Result<usize, CliError> {
    g_vertices
        .binary_search(w)
        .map_err(|_| CliError::Format(format!("{:?} is not a vertex", w.letters())))
}

pub fn read_edge_list(text: &str) -> Result<HoradamGraph, CliError> {
    let mut lines = text.lines();
    let p = parse_header(lines.next().unwrap_or_default())?;
    let vertices = enumerate_words(&p)?;
    let mut edges = Vec::new();
    for line in lines {
        if line.starts_with('#') || line.trim().is_empty() {
            continue;
        }
        let (u, w) = line
            .split_once('\t')
            .ok_or_else(|| CliError::Format(format!("expected two tab-separated words, got {line:?}")))?;
        let (u, w) = (Word::parse(u, &p)?, Word::parse(w, &p)?);
        edges.push((index_of(&vertices, &u)?, index_of(&vertices, &w)?));
    }
    Ok(HoradamGraph::from_edges(p, vertices, &edges)?)
}

pub fn read_json(text: &str) -> Result<HoradamGraph, CliError> {
    let doc: JsonGraph = serde_json::from_str(text).map_err(|e| CliError::Format(e.to_string()))?;
    let p = Params::new(doc.params.a, doc.params.b, doc.params.n)?;
    let vertices = doc
        .vertices
        .iter()
        .map(|v| Word::parse(v, &p))
        .collect::<Result<Vec<_>, _>>()?;
    let edges: Vec<(usize, usize)> = doc.edges.iter().map(|&[u, w]| (u, w)).collect();
    let g = HoradamGraph::from_edges(p, vertices, &edges)?;
    if g.order() as u64 != doc.meta.s_n || g.size() as u64 != doc.meta.e_n {
        return Err(CliError::Format("meta counts disagree with the listed graph".into()));
    }
    Ok(g)
}
