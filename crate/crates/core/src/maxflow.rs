//! Minimum (s,t)-cuts by highest-label push-relabel with the gap heuristic.
//!
//! Capacities are exact rationals. Infinite edges are handled in two steps:
//! if `s` and `t` are joined by a path of infinite edges every cut is
//! infinite and no flow is computed; otherwise infinite edges are replaced
//! by a surrogate capacity exceeding the sum of all finite ones, so they are
//! never saturated by a minimum cut.

use std::collections::VecDeque;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::weight::{ExtWeight, Weights};

/// A minimum (s,t)-cut together with a maximum flow of equal value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinCut {
    pub value: ExtWeight,
    /// Contains `s`, excludes `t`.
    pub source_side: VertexSet,
    /// Signed flow per edge, positive in the direction `endpoints(e).0 -> .1`.
    /// `None` when every cut is infinite.
    pub flow: Option<Vec<BigRational>>,
}

impl MinCut {
    /// Net flow leaving `s` according to the certificate.
    pub fn flow_value(&self, g: &Graph, s: Vertex) -> Option<BigRational> {
        let flow = self.flow.as_ref()?;
        Some(net_outflow(g, flow, s))
    }
}

fn net_outflow(g: &Graph, flow: &[BigRational], v: Vertex) -> BigRational {
    let mut total = BigRational::zero();
    for &e in g.incident(v) {
        let (a, _) = g.endpoints(e);
        if a == v {
            total += &flow[e];
        } else {
            total -= &flow[e];
        }
    }
    total
}

/// Checks that `flow` is a feasible s-t flow for capacities `c` and returns
/// its value. Used to audit [`MinCut`] certificates.
pub fn check_flow(
    g: &Graph,
    c: &Weights,
    s: Vertex,
    t: Vertex,
    flow: &[BigRational],
) -> std::result::Result<BigRational, String> {
    if flow.len() != g.edge_count() {
        return Err("flow vector length mismatch".into());
    }
    for (e, f) in flow.iter().enumerate() {
        if let ExtWeight::Finite(cap) = &c[e] {
            if &f.abs() > cap {
                return Err(format!("edge {e} carries {f} above capacity {cap}"));
            }
        }
    }
    for v in g.vertices() {
        if v != s && v != t && !net_outflow(g, flow, v).is_zero() {
            return Err(format!("conservation fails at vertex {v}"));
        }
    }
    Ok(net_outflow(g, flow, s))
}

/// Minimum-weight cut separating `s` from `t`, with a max-flow certificate.
///
/// A disconnected pair yields value 0 with the component of `s` as source side.
pub fn min_st_cut(g: &Graph, c: &Weights, s: Vertex, t: Vertex) -> Result<MinCut> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    c.check_len(g.edge_count())?;
    if s == t {
        return Err(Error::SameSourceSink(s));
    }

    if infinite_path_exists(g, c, s, t) {
        return Ok(MinCut {
            value: ExtWeight::Infinite,
            source_side: VertexSet::from([s]),
            flow: None,
        });
    }

    let surrogate: BigRational = c
        .iter()
        .filter_map(ExtWeight::as_finite)
        .fold(BigRational::one(), |acc, w| acc + w);
    let caps: Vec<BigRational> = c
        .iter()
        .map(|w| w.as_finite().cloned().unwrap_or_else(|| surrogate.clone()))
        .collect();

    let mut net = Network::new(g, caps);
    net.run(s, t);
    let source_side = net.residual_reachable(s);
    debug_assert!(!source_side.contains(&t));
    let flow = net.edge_flows();
    let value = net.excess[t].clone();
    Ok(MinCut {
        value: ExtWeight::Finite(value),
        source_side,
        flow: Some(flow),
    })
}

fn infinite_path_exists(g: &Graph, c: &Weights, s: Vertex, t: Vertex) -> bool {
    let mut seen = vec![false; g.vertex_count()];
    let mut queue = VecDeque::from([s]);
    seen[s] = true;
    while let Some(v) = queue.pop_front() {
        if v == t {
            return true;
        }
        for &e in g.incident(v) {
            if c[e].is_infinite() {
                let (a, b) = g.endpoints(e);
                let w = if a == v { b } else { a };
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    false
}

/// Residual network. Edge `e` becomes arcs `2e` (u->v) and `2e+1` (v->u),
/// both with capacity `cap[e]` and antisymmetric flow.
struct Network {
    n: usize,
    head: Vec<Vertex>,
    cap: Vec<BigRational>,
    flow: Vec<BigRational>,
    adj: Vec<Vec<usize>>,
    excess: Vec<BigRational>,
    label: Vec<usize>,
    current: Vec<usize>,
    buckets: Vec<Vec<Vertex>>,
    in_bucket: Vec<bool>,
    // number of vertices per label, labels below n only
    count: Vec<usize>,
    highest: usize,
}

impl Network {
    fn new(g: &Graph, caps: Vec<BigRational>) -> Self {
        let n = g.vertex_count();
        let mut head = Vec::with_capacity(2 * caps.len());
        let mut cap = Vec::with_capacity(2 * caps.len());
        let mut adj = vec![Vec::new(); n];
        for (e, w) in caps.into_iter().enumerate() {
            let (u, v) = g.endpoints(e);
            head.push(v);
            head.push(u);
            cap.push(w.clone());
            cap.push(w);
            adj[u].push(2 * e);
            adj[v].push(2 * e + 1);
        }
        let arcs = head.len();
        Network {
            n,
            head,
            cap,
            flow: vec![BigRational::zero(); arcs],
            adj,
            excess: vec![BigRational::zero(); n],
            label: vec![0; n],
            current: vec![0; n],
            buckets: vec![Vec::new(); 2 * n + 1],
            in_bucket: vec![false; n],
            count: vec![0; n + 1],
            highest: 0,
        }
    }

    fn residual(&self, arc: usize) -> BigRational {
        &self.cap[arc] - &self.flow[arc]
    }

    fn push(&mut self, v: Vertex, arc: usize, amount: BigRational) {
        let w = self.head[arc];
        self.flow[arc] += &amount;
        self.flow[arc ^ 1] -= &amount;
        self.excess[v] -= &amount;
        self.excess[w] += amount;
    }

    fn run(&mut self, s: Vertex, t: Vertex) {
        let n = self.n;
        self.initial_labels(t);
        self.label[s] = n;
        for v in 0..n {
            if self.label[v] < n {
                self.count[self.label[v]] += 1;
            }
        }
        for i in 0..self.adj[s].len() {
            let arc = self.adj[s][i];
            let r = self.residual(arc);
            if r.is_positive() {
                self.push(s, arc, r);
            }
        }
        for v in 0..n {
            self.activate(v, s, t);
        }

        loop {
            while self.highest > 0 && self.buckets[self.highest].is_empty() {
                self.highest -= 1;
            }
            let Some(v) = self.buckets[self.highest].pop() else {
                break;
            };
            self.in_bucket[v] = false;
            self.discharge(v, s, t);
        }
    }

    /// Exact distances to `t` in the initial residual graph; unreachable
    /// vertices start at `n`.
    fn initial_labels(&mut self, t: Vertex) {
        let n = self.n;
        self.label = vec![n; n];
        self.label[t] = 0;
        let mut queue = VecDeque::from([t]);
        while let Some(w) = queue.pop_front() {
            for &arc in &self.adj[w] {
                // arc^1 goes from head[arc] into w
                let v = self.head[arc];
                if self.label[v] == n && self.residual(arc ^ 1).is_positive() {
                    self.label[v] = self.label[w] + 1;
                    queue.push_back(v);
                }
            }
        }
    }

    fn activate(&mut self, v: Vertex, s: Vertex, t: Vertex) {
        if v == s || v == t || self.in_bucket[v] || !self.excess[v].is_positive() {
            return;
        }
        let d = self.label[v];
        self.in_bucket[v] = true;
        self.buckets[d].push(v);
        self.highest = self.highest.max(d);
    }

    fn discharge(&mut self, v: Vertex, s: Vertex, t: Vertex) {
        while self.excess[v].is_positive() {
            if self.current[v] == self.adj[v].len() {
                self.relabel(v, s, t);
                self.current[v] = 0;
                continue;
            }
            let arc = self.adj[v][self.current[v]];
            let w = self.head[arc];
            let r = self.residual(arc);
            if r.is_positive() && self.label[v] == self.label[w] + 1 {
                let amount = if self.excess[v] < r { self.excess[v].clone() } else { r };
                self.push(v, arc, amount);
                self.activate(w, s, t);
            } else {
                self.current[v] += 1;
            }
        }
    }

    fn relabel(&mut self, v: Vertex, s: Vertex, t: Vertex) {
        let n = self.n;
        let old = self.label[v];
        if old < n && self.count[old] == 1 {
            // v is alone on its level: nothing at or above it can reach t.
            for w in 0..n {
                let lw = self.label[w];
                if w != s && lw >= old && lw < n {
                    self.count[lw] -= 1;
                    self.label[w] = n + 1;
                    self.current[w] = 0;
                    if self.in_bucket[w] {
                        self.buckets[lw].retain(|&x| x != w);
                        self.in_bucket[w] = false;
                        self.activate(w, s, t);
                    }
                }
            }
            return;
        }
        let new = self.adj[v]
            .iter()
            .filter(|&&arc| self.residual(arc).is_positive())
            .map(|&arc| self.label[self.head[arc]] + 1)
            .min()
            .unwrap_or(2 * n)
            .min(2 * n);
        if old < n {
            self.count[old] -= 1;
        }
        if new < n {
            self.count[new] += 1;
        }
        self.label[v] = new;
    }

    fn residual_reachable(&self, s: Vertex) -> VertexSet {
        let mut seen = vec![false; self.n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &arc in &self.adj[v] {
                let w = self.head[arc];
                if !seen[w] && self.residual(arc).is_positive() {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    fn edge_flows(&self) -> Vec<BigRational> {
        self.flow.iter().step_by(2).cloned().collect()
    }
}
