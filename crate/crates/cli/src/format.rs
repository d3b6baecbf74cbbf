//! Text formats for instances, fractional points and weighted graphs.
//!
//! All formats are line oriented. Blank lines and lines starting with `c`
//! are comments. Rationals are written `p/q` (integers bare); decimals are
//! accepted on input and converted exactly.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use oddcut_core::{parse_rational, BigRational, ExtWeight, FractionalPoint, Graph, Instance, Weights};

/// A parse failure at a 1-based line number (0 when the input as a whole is
/// at fault).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Mode tag in the instance header.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum FileMode {
    Cap,
    Uncap,
    Perfect,
    Tsp,
}

impl FileMode {
    pub fn tag(self) -> &'static str {
        match self {
            FileMode::Cap => "cap",
            FileMode::Uncap => "uncap",
            FileMode::Perfect => "perfect",
            FileMode::Tsp => "tsp",
        }
    }

    fn from_tag(tag: &str) -> Option<Self> {
        match tag {
            "cap" => Some(FileMode::Cap),
            "uncap" => Some(FileMode::Uncap),
            "perfect" => Some(FileMode::Perfect),
            "tsp" => Some(FileMode::Tsp),
            _ => None,
        }
    }
}

impl fmt::Display for FileMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A parsed instance file. Vertex labels are the decimal vertex ids; edge
/// `i` of the graph carries the file id `edge_ids[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceFile {
    pub mode: FileMode,
    pub instance: Instance,
    pub edge_ids: Vec<u64>,
}

impl InstanceFile {
    /// Dense edge index of a file edge id.
    pub fn edge_index(&self) -> HashMap<u64, usize> {
        self.edge_ids.iter().enumerate().map(|(i, &id)| (id, i)).collect()
    }
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens.first() {
            None => None,
            Some(&"c") => None,
            Some(_) => Some((i + 1, tokens)),
        }
    })
}

fn nonneg_int(line: usize, what: &str, token: &str) -> Result<u64, ParseError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return err(line, format!("{what} must be a nonnegative integer, got `{token}`"));
    }
    token
        .parse()
        .or_else(|_| err(line, format!("{what} out of range: `{token}`")))
}

fn positive_int(line: usize, what: &str, token: &str) -> Result<u64, ParseError> {
    let v = nonneg_int(line, what, token)?;
    if v == 0 {
        return err(line, format!("{what} must be positive"));
    }
    Ok(v)
}

fn arity(line: usize, tokens: &[&str], allowed: &[usize], usage: &str) -> Result<(), ParseError> {
    if allowed.contains(&tokens.len()) {
        Ok(())
    } else {
        err(line, format!("expected `{usage}`"))
    }
}

/// Parses `p bmatch <n> <m> <mode>`, then `v <id> <b>` and
/// `e <eid> <id1> <id2> [<u>]` lines.
///
/// In `tsp` mode `b = 2` and `u = 1` are implied. Vertex lines may then be
/// omitted entirely, in which case the ids are `0..n`; if present they read
/// `v <id>` (a trailing `2` is tolerated), and a trailing `1` is tolerated
/// on edge lines.
pub fn parse_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let mut it = lines(text);
    let Some((hline, header)) = it.next() else {
        return err(0, "missing `p bmatch <n> <m> <mode>` header");
    };
    if header.len() != 5 || header[0] != "p" || header[1] != "bmatch" {
        return err(hline, "expected `p bmatch <n> <m> <mode>`");
    }
    let n = nonneg_int(hline, "n", header[2])? as usize;
    let m = nonneg_int(hline, "m", header[3])? as usize;
    let Some(mode) = FileMode::from_tag(header[4]) else {
        return err(hline, format!("unknown mode `{}` (cap, uncap, perfect, tsp)", header[4]));
    };

    let mut graph = Graph::new(0);
    let mut ids: HashMap<u64, usize> = HashMap::new();
    let mut b: Vec<u64> = Vec::new();
    let mut u: Vec<u64> = Vec::new();
    let mut edge_ids: Vec<u64> = Vec::new();
    let mut seen_edges: HashMap<u64, usize> = HashMap::new();
    let mut last_line = hline;

    for (line, tokens) in it {
        last_line = line;
        match tokens[0] {
            "v" => {
                if !edge_ids.is_empty() {
                    return err(line, "vertex lines must precede edge lines");
                }
                if mode == FileMode::Tsp {
                    arity(line, &tokens, &[2, 3], "v <id>")?;
                    if tokens.len() == 3 && tokens[2] != "2" {
                        return err(line, "b is fixed to 2 in tsp mode");
                    }
                } else {
                    arity(line, &tokens, &[3], "v <id> <b>")?;
                }
                let id = nonneg_int(line, "vertex id", tokens[1])?;
                if ids.contains_key(&id) {
                    return err(line, format!("duplicate vertex id {id}"));
                }
                if ids.len() == n {
                    return err(line, format!("more than {n} vertex lines"));
                }
                let value = if mode == FileMode::Tsp { 2 } else { positive_int(line, "b", tokens[2])? };
                ids.insert(id, graph.add_vertex(id.to_string()));
                b.push(value);
            }
            "e" => {
                if edge_ids.is_empty() && ids.is_empty() {
                    if mode != FileMode::Tsp {
                        return err(line, "edge line before any vertex line");
                    }
                    for id in 0..n as u64 {
                        ids.insert(id, graph.add_vertex(id.to_string()));
                        b.push(2);
                    }
                }
                if ids.len() != n {
                    return err(line, format!("expected {n} vertex lines, found {}", ids.len()));
                }
                match mode {
                    FileMode::Cap | FileMode::Perfect => arity(line, &tokens, &[5], "e <eid> <id1> <id2> <u>")?,
                    FileMode::Uncap => arity(line, &tokens, &[4], "e <eid> <id1> <id2>")?,
                    FileMode::Tsp => {
                        arity(line, &tokens, &[4, 5], "e <eid> <id1> <id2>")?;
                        if tokens.len() == 5 && tokens[4] != "1" {
                            return err(line, "u is fixed to 1 in tsp mode");
                        }
                    }
                }
                let eid = nonneg_int(line, "edge id", tokens[1])?;
                if let Some(prev) = seen_edges.insert(eid, line) {
                    return err(line, format!("duplicate edge id {eid} (first on line {prev})"));
                }
                if edge_ids.len() == m {
                    return err(line, format!("more than {m} edge lines"));
                }
                let end = |tok: &str| -> Result<usize, ParseError> {
                    let id = nonneg_int(line, "vertex id", tok)?;
                    ids.get(&id)
                        .copied()
                        .ok_or_else(|| ParseError {
                            line,
                            message: format!("unknown vertex id {id}"),
                        })
                };
                let a = end(tokens[2])?;
                let z = end(tokens[3])?;
                if a == z {
                    return err(line, format!("self-loop at vertex {}", tokens[2]));
                }
                graph.add_edge(a, z).expect("checked endpoints");
                edge_ids.push(eid);
                u.push(match mode {
                    FileMode::Cap | FileMode::Perfect => positive_int(line, "u", tokens[4])?,
                    _ => 1,
                });
            }
            other => return err(line, format!("unknown line type `{other}`")),
        }
    }

    if ids.is_empty() && mode == FileMode::Tsp {
        for id in 0..n as u64 {
            ids.insert(id, graph.add_vertex(id.to_string()));
            b.push(2);
        }
    }
    if ids.len() != n {
        return err(last_line, format!("expected {n} vertex lines, found {}", ids.len()));
    }
    if edge_ids.len() != m {
        return err(last_line, format!("expected {m} edge lines, found {}", edge_ids.len()));
    }

    let instance = match mode {
        FileMode::Cap => Instance::capacitated(graph, b, u),
        FileMode::Perfect => Instance::perfect(graph, b, u),
        FileMode::Uncap => Instance::uncapacitated(graph, b),
        FileMode::Tsp => Ok(Instance::tsp(graph, false)),
    }
    .expect("sizes match by construction");
    Ok(InstanceFile {
        mode,
        instance,
        edge_ids,
    })
}

/// Canonical text of an instance file; `parse_instance` inverts it.
pub fn print_instance(file: &InstanceFile) -> String {
    let inst = &file.instance;
    let g = inst.graph();
    let mut out = String::new();
    let _ = writeln!(out, "p bmatch {} {} {}", g.vertex_count(), g.edge_count(), file.mode);
    let implicit_ids = g.vertices().all(|v| g.label(v) == v.to_string());
    for v in g.vertices() {
        match file.mode {
            FileMode::Tsp if implicit_ids => {}
            FileMode::Tsp => {
                let _ = writeln!(out, "v {}", g.label(v));
            }
            _ => {
                let _ = writeln!(out, "v {} {}", g.label(v), inst.b(v));
            }
        }
    }
    for (e, &(a, z)) in g.edges().iter().enumerate() {
        let _ = write!(out, "e {} {} {}", file.edge_ids[e], g.label(a), g.label(z));
        match file.mode {
            FileMode::Cap | FileMode::Perfect => {
                let _ = writeln!(out, " {}", inst.u(e).expect("capacitated"));
            }
            _ => out.push('\n'),
        }
    }
    out
}

/// Parses `x <eid> <value>` lines against the edges of `file`. Edges without
/// a line are zero.
pub fn parse_point(text: &str, file: &InstanceFile) -> Result<FractionalPoint, ParseError> {
    let index = file.edge_index();
    let mut values: Vec<Option<(BigRational, usize)>> = vec![None; file.edge_ids.len()];
    for (line, tokens) in lines(text) {
        if tokens[0] != "x" {
            return err(line, format!("unknown line type `{}`", tokens[0]));
        }
        arity(line, &tokens, &[3], "x <eid> <value>")?;
        let eid = nonneg_int(line, "edge id", tokens[1])?;
        let Some(&e) = index.get(&eid) else {
            return err(line, format!("unknown edge id {eid}"));
        };
        let value = parse_rational(tokens[2]).or_else(|_| err(line, format!("invalid value `{}`", tokens[2])))?;
        if value < BigRational::from_integer(0.into()) {
            return err(line, format!("negative value {value}"));
        }
        if let Some((_, prev)) = &values[e] {
            return err(line, format!("duplicate value for edge {eid} (first on line {prev})"));
        }
        values[e] = Some((value, line));
    }
    let values = values
        .into_iter()
        .map(|v| v.map_or_else(|| BigRational::from_integer(0.into()), |(x, _)| x))
        .collect();
    Ok(FractionalPoint::new(values).expect("checked nonnegative"))
}

/// Canonical text of a point: one `x` line per nonzero entry.
pub fn print_point(x: &FractionalPoint, file: &InstanceFile) -> String {
    let mut out = String::new();
    for (e, v) in x.values().iter().enumerate() {
        if *v != BigRational::from_integer(0.into()) {
            let _ = writeln!(out, "x {} {}", file.edge_ids[e], v);
        }
    }
    out
}

/// A weighted graph file: optional `p graph <n> <m>` header, optional
/// `v <id>` lines, and `e <eid> <id1> <id2> <weight>` lines. Vertex ids are
/// arbitrary tokens, numbered in order of first appearance. Weights are
/// nonnegative rationals or `inf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    pub weights: Weights,
    pub edge_ids: Vec<String>,
}

pub fn parse_graph(text: &str) -> Result<GraphFile, ParseError> {
    let mut graph = Graph::new(0);
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut weights: Vec<ExtWeight> = Vec::new();
    let mut edge_ids: Vec<String> = Vec::new();
    let mut seen_edges: HashMap<String, usize> = HashMap::new();
    let mut header: Option<(usize, usize, usize)> = None;
    let mut first = true;
    let mut last_line = 0;

    for (line, tokens) in lines(text) {
        last_line = line;
        let is_first = std::mem::take(&mut first);
        match tokens[0] {
            "p" => {
                if !is_first {
                    return err(line, "header must be the first line");
                }
                if tokens.len() != 4 || tokens[1] != "graph" {
                    return err(line, "expected `p graph <n> <m>`");
                }
                let n = nonneg_int(line, "n", tokens[2])? as usize;
                let m = nonneg_int(line, "m", tokens[3])? as usize;
                header = Some((line, n, m));
            }
            "v" => {
                arity(line, &tokens, &[2], "v <id>")?;
                if ids.contains_key(tokens[1]) {
                    return err(line, format!("duplicate vertex id {}", tokens[1]));
                }
                ids.insert(tokens[1].to_string(), graph.add_vertex(tokens[1]));
            }
            "e" => {
                arity(line, &tokens, &[5], "e <eid> <id1> <id2> <weight>")?;
                if let Some(prev) = seen_edges.insert(tokens[1].to_string(), line) {
                    return err(line, format!("duplicate edge id {} (first on line {prev})", tokens[1]));
                }
                let mut end = |tok: &str| -> usize {
                    if let Some(&v) = ids.get(tok) {
                        return v;
                    }
                    let v = graph.add_vertex(tok);
                    ids.insert(tok.to_string(), v);
                    v
                };
                let a = end(tokens[2]);
                let z = end(tokens[3]);
                if a == z {
                    return err(line, format!("self-loop at vertex {}", tokens[2]));
                }
                let w: ExtWeight = tokens[4]
                    .parse()
                    .or_else(|_| err(line, format!("invalid weight `{}`", tokens[4])))?;
                graph.add_edge(a, z).expect("checked endpoints");
                weights.push(w);
                edge_ids.push(tokens[1].to_string());
            }
            other => return err(line, format!("unknown line type `{other}`")),
        }
    }
    if let Some((hline, n, m)) = header {
        if graph.vertex_count() != n {
            return err(
                last_line.max(hline),
                format!("header declares {n} vertices, found {}", graph.vertex_count()),
            );
        }
        if graph.edge_count() != m {
            return err(
                last_line.max(hline),
                format!("header declares {m} edges, found {}", graph.edge_count()),
            );
        }
    }
    Ok(GraphFile {
        graph,
        weights: Weights::new(weights),
        edge_ids,
    })
}
