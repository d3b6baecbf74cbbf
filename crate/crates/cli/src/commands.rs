//! Subcommand bodies. Each returns the full stdout/stderr text and exit
//! status so the binary stays a thin shell around them.

use std::fmt::Write as _;

use oddcut_core::oracle::{bf_min_st_cut, bf_min_t_cut, bf_most_violated_blossom};
use oddcut_core::{
    gomory_hu, minimum_t_cut, separate, Error, ExtWeight, Graph, LinearViolation, OddCutProblem, Outcome,
    VertexSet,
};

use crate::format::{parse_graph, parse_instance, parse_point, FileMode, InstanceFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn input_error(context: &str, message: impl std::fmt::Display) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {context}: {message}\n"),
            code: EXIT_INPUT,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Flags {
    pub oracle_check: bool,
    pub count_maxflows: bool,
}

fn linear_line(file: &InstanceFile, v: &LinearViolation) -> String {
    let g = file.instance.graph();
    match v {
        LinearViolation::Degree {
            vertex,
            degree,
            b,
            amount,
        } => format!("DEGREE i={} lhs={degree} b={b} violation={amount}", g.label(*vertex)),
        LinearViolation::Bound { edge, x, u, amount } => {
            format!("BOUND e={} x={x} u={u} violation={amount}", file.edge_ids[*edge])
        }
    }
}

/// `separate <instance> <point>`.
pub fn cmd_separate(instance_text: &str, point_text: &str, mode: Option<FileMode>, flags: Flags) -> Output {
    let file = match parse_instance(instance_text) {
        Ok(f) => f,
        Err(e) => return Output::input_error("instance", e),
    };
    if let Some(mode) = mode {
        if mode != file.mode {
            return Output::input_error("instance", format!("mode mismatch: --mode {mode} but file declares {}", file.mode));
        }
    }
    let x = match parse_point(point_text, &file) {
        Ok(x) => x,
        Err(e) => return Output::input_error("point", e),
    };
    let outcome = match separate(&file.instance, &x) {
        Ok(o) => o,
        Err(e) => return Output::input_error("separation", e),
    };

    let mut out = Output::default();
    let g = file.instance.graph();
    let calls = match &outcome {
        Outcome::Linear(violations) => {
            for v in violations {
                let _ = writeln!(out.stdout, "{}", linear_line(&file, v));
            }
            out.code = EXIT_VIOLATED;
            0
        }
        Outcome::Blossoms(report) => {
            match &report.violated {
                Some(found) => {
                    let line = found.format_with(|v| g.label(v).to_string(), |e| file.edge_ids[e].to_string());
                    let _ = writeln!(out.stdout, "{line}");
                    out.code = EXIT_VIOLATED;
                }
                None => {
                    let beta = report.min_beta.clone().unwrap_or(ExtWeight::Infinite);
                    let _ = writeln!(out.stdout, "FEASIBLE beta={beta}");
                    out.code = EXIT_OK;
                }
            }
            report.maxflow_calls
        }
    };
    if flags.count_maxflows {
        let _ = writeln!(out.stdout, "MAXFLOWS {calls}");
    }

    if flags.oracle_check {
        if let Outcome::Blossoms(report) = &outcome {
            match bf_most_violated_blossom(&file.instance, &x) {
                Err(Error::TooLarge(why)) => {
                    let _ = writeln!(out.stderr, "ORACLE skipped ({why})");
                }
                Err(e) => return Output::input_error("oracle", e),
                Ok(expected) => {
                    let ours = report.violated.as_ref().map(|v| &v.violation);
                    let theirs = expected.as_ref().map(|o| &o.violation);
                    if ours == theirs {
                        let _ = writeln!(out.stderr, "ORACLE ok");
                    } else {
                        let show = |v: Option<&oddcut_core::BigRational>| v.map_or("none".to_string(), |v| v.to_string());
                        let _ = writeln!(
                            out.stderr,
                            "ORACLE MISMATCH violation={} oracle={}",
                            show(ours),
                            show(theirs)
                        );
                        out.code = EXIT_ORACLE;
                    }
                }
            }
        } else {
            let _ = writeln!(out.stderr, "ORACLE skipped (linear constraints violated)");
        }
    }
    out
}

fn resolve(g: &Graph, labels: &[String]) -> Result<VertexSet, String> {
    labels
        .iter()
        .map(|l| g.vertex_by_label(l).ok_or_else(|| format!("unknown vertex `{l}`")))
        .collect()
}

/// `gomory-hu <graph> [-X ids]`.
pub fn cmd_gomory_hu(graph_text: &str, terminals: Option<&[String]>, flags: Flags) -> Output {
    let file = match parse_graph(graph_text) {
        Ok(f) => f,
        Err(e) => return Output::input_error("graph", e),
    };
    let g = &file.graph;
    let x = match terminals {
        None => g.all_vertices(),
        Some(labels) => match resolve(g, labels) {
            Ok(x) => x,
            Err(e) => return Output::input_error("-X", e),
        },
    };
    let tree = match gomory_hu(g, &file.weights, &x) {
        Ok(t) => t,
        Err(e) => return Output::input_error("gomory-hu", e),
    };
    let mut out = Output {
        stdout: tree.dump(g),
        ..Output::default()
    };
    if flags.count_maxflows {
        let _ = writeln!(out.stdout, "MAXFLOWS {}", tree.maxflow_calls());
    }
    if flags.oracle_check {
        let mut bad = Vec::new();
        for (i, e) in tree.edges().iter().enumerate() {
            let expected = match bf_min_st_cut(g, &file.weights, e.x, e.y) {
                Ok((v, _)) => v,
                Err(Error::TooLarge(why)) => {
                    let _ = writeln!(out.stderr, "ORACLE skipped ({why})");
                    return out;
                }
                Err(e) => return Output::input_error("oracle", e),
            };
            let induced = g
                .cut_weight(&file.weights, &tree.induced_cut_at(i))
                .expect("tree cut is a vertex subset");
            if e.value != expected || induced != expected {
                bad.push(format!("{}-{} tree={} induced={induced} oracle={expected}", g.label(e.x), g.label(e.y), e.value));
            }
        }
        if bad.is_empty() {
            let _ = writeln!(out.stderr, "ORACLE ok");
        } else {
            for b in bad {
                let _ = writeln!(out.stderr, "ORACLE MISMATCH {b}");
            }
            out.code = EXIT_ORACLE;
        }
    }
    out
}

/// `tcut <graph> -T ids`.
pub fn cmd_tcut(graph_text: &str, terminals: &[String], flags: Flags) -> Output {
    let file = match parse_graph(graph_text) {
        Ok(f) => f,
        Err(e) => return Output::input_error("graph", e),
    };
    let g = &file.graph;
    let t = match resolve(g, terminals) {
        Ok(t) => t,
        Err(e) => return Output::input_error("-T", e),
    };
    if t.len() != terminals.len() {
        return Output::input_error("-T", "repeated vertex");
    }
    let cut = match OddCutProblem::new(g, &file.weights, t.clone()).and_then(|p| minimum_t_cut(&p)) {
        Ok(c) => c,
        Err(e) => return Output::input_error("tcut", e),
    };
    let mut out = Output::default();
    let _ = writeln!(out.stdout, "TCUT U={} value={}", g.format_set(&cut.set), cut.value);
    if flags.count_maxflows {
        let _ = writeln!(out.stdout, "MAXFLOWS {}", cut.tree.maxflow_calls());
    }
    if flags.oracle_check {
        match bf_min_t_cut(g, &file.weights, &t) {
            Err(Error::TooLarge(why)) => {
                let _ = writeln!(out.stderr, "ORACLE skipped ({why})");
            }
            Err(e) => return Output::input_error("oracle", e),
            Ok((value, _)) if value == cut.value => {
                let _ = writeln!(out.stderr, "ORACLE ok");
            }
            Ok((value, _)) => {
                let _ = writeln!(out.stderr, "ORACLE MISMATCH value={} oracle={value}", cut.value);
                out.code = EXIT_ORACLE;
            }
        }
    }
    out
}
