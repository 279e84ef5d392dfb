//! DIMACS `.col`, graph6, and the small JSON inputs.

use std::collections::{BTreeMap, BTreeSet};

use serde::Deserialize;
use serde_json::Value;

use crate::coloring::ListAssignment;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest vertex count graph6 can express with the short `~` header.
pub const GRAPH6_MAX_N: usize = (1 << 18) - 1;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Parses DIMACS `.col` text. Returns the graph (0-based) and any warnings,
/// such as collapsed duplicate edges or a declared edge count that does not
/// match.
pub fn parse_dimacs(text: &str) -> Result<(Graph, Vec<String>)> {
    let mut warnings = Vec::new();
    let mut header: Option<(usize, usize)> = None;
    let mut edges = BTreeSet::new();
    let mut duplicates = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let mut tok = raw.split_whitespace();
        let Some(kind) = tok.next() else { continue };
        match kind {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "second `p` line"));
                }
                let format = tok.next().ok_or_else(|| parse_err(line_no, "missing format"))?;
                if format != "edge" && format != "col" {
                    return Err(parse_err(line_no, format!("unknown format `{format}`")));
                }
                let n = number(tok.next(), line_no, "vertex count")?;
                let m = number(tok.next(), line_no, "edge count")?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| parse_err(line_no, "`e` line before `p` line"))?;
                let u = number(tok.next(), line_no, "endpoint")?;
                let v = number(tok.next(), line_no, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(parse_err(line_no, format!("vertex {x} outside 1..{n}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line_no, format!("self-loop on vertex {u}")));
                }
                if !edges.insert((u.min(v) - 1, u.max(v) - 1)) {
                    duplicates += 1;
                }
            }
            other => warnings.push(format!("line {line_no}: ignored `{other}` line")),
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(0, "missing `p edge` line"))?;
    if duplicates > 0 {
        warnings.push(format!("collapsed {duplicates} duplicate edge line(s)"));
    }
    if m != edges.len() {
        warnings.push(format!(
            "header declares {m} edges, found {} distinct",
            edges.len()
        ));
    }
    Ok((Graph::new(n, edges)?, warnings))
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

/// Writes `g` as DIMACS `.col` with 1-based ids.
pub fn encode_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

/// Decodes one graph6 line. An optional `>>graph6<<` header and surrounding
/// whitespace are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(1, format!("byte {b} outside 63..=126")));
    }
    let (n, body) = match bytes {
        [] => return Err(parse_err(1, "empty graph6 string")),
        [126, 126, ..] => return Err(parse_err(1, "graphs with n ≥ 2^18 are not supported")),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err(1, "truncated size field"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(parse_err(
            1,
            format!("expected {need} adjacency bytes for n = {n}, got {}", body.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// Encodes `g` as graph6 without a header or newline.
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::InvalidInput(format!(
            "graph6 output supports n ≤ {GRAPH6_MAX_N}, got {n}"
        )));
    }
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Reads a JSON object keyed by decimal vertex ids; every vertex `0..n`
/// must appear exactly once and no other key may.
fn vertex_object(text: &str, n: usize) -> Result<Vec<Value>> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let Value::Object(map) = value else {
        return Err(Error::InvalidInput("expected a JSON object keyed by vertex id".into()));
    };
    let mut slots: Vec<Option<Value>> = vec![None; n];
    for (key, v) in map {
        let id: usize = key
            .parse()
            .map_err(|_| Error::InvalidInput(format!("key `{key}` is not a vertex id")))?;
        if id >= n {
            return Err(Error::InvalidInput(format!(
                "key `{key}`: vertex out of range for n = {n}"
            )));
        }
        slots[id] = Some(v);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or_else(|| Error::InvalidInput(format!("vertex {v} missing"))))
        .collect()
}

fn non_negative(v: &Value, key: usize) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| Error::InvalidInput(format!("key `{key}`: expected a non-negative integer, got {v}")))
}

/// Parses `{"0":[0,1,2],"1":[1,2,3]}` into a list assignment for `n`
/// vertices.
pub fn parse_lists_json(text: &str, n: usize) -> Result<ListAssignment> {
    let values = vertex_object(text, n)?;
    let lists = values
        .iter()
        .enumerate()
        .map(|(v, value)| {
            let Value::Array(items) = value else {
                return Err(Error::InvalidInput(format!("key `{v}`: expected an array")));
            };
            items.iter().map(|c| non_negative(c, v)).collect()
        })
        .collect::<Result<Vec<Vec<usize>>>>()?;
    Ok(ListAssignment::new(lists))
}

/// Parses `{"0":2,"1":1}` into a per-vertex integer (demands, tokens, `f`).
pub fn parse_vertex_map_json(text: &str, n: usize) -> Result<Vec<usize>> {
    vertex_object(text, n)?
        .iter()
        .enumerate()
        .map(|(v, value)| non_negative(value, v))
        .collect()
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PartitionFile {
    #[serde(rename = "A")]
    a: Vec<usize>,
    #[serde(default)]
    heads: Option<Vec<[usize; 3]>>,
}

/// A parsed `{"A":[ids]}` partition. `heads`, if present, lists cross edges
/// as `[u, v, head]` triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub a: VertexSet,
    pub heads: Option<BTreeMap<(usize, usize), usize>>,
}

pub fn parse_partition_json(text: &str, n: usize) -> Result<Partition> {
    let file: PartitionFile =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    let a = VertexSet::new(n, file.a)?;
    let heads = file
        .heads
        .map(|triples| {
            triples
                .into_iter()
                .map(|[u, v, h]| {
                    if h != u && h != v {
                        return Err(Error::InvalidInput(format!(
                            "head {h} is not an endpoint of {u}-{v}"
                        )));
                    }
                    Ok(((u.min(v), u.max(v)), h))
                })
                .collect::<Result<BTreeMap<_, _>>>()
        })
        .transpose()?;
    Ok(Partition { a, heads })
}
