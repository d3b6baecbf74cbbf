//! Blossom-inequality separation for b-matching polytopes.
//!
//! A point `x` is mapped onto a star graph: the original graph plus an apex
//! joined to every vertex by an edge carrying the degree slack. Blossoms of
//! value below one on the star graph correspond to violated blossom
//! inequalities, and the violation of the inequality in its standard form
//! `x(E(W)) + x(F) <= floor((b(W) + u(F)) / 2)` is `(1 - beta) / 2`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Graph, Vertex, VertexSet};
use crate::odd_cut::{minimize_blossom, minimum_t_cut, OddCutProblem};
use crate::weight::{ExtWeight, Weights};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    /// Degree inequalities and edge upper bounds.
    Capacitated,
    /// No edge upper bounds; only simplified blossom inequalities (`F = ∅`).
    Uncapacitated,
    /// Capacitated with degree equalities, so every slack is zero.
    Perfect,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Capacitated => "capacitated",
            Mode::Uncapacitated => "uncapacitated",
            Mode::Perfect => "perfect",
        }
    }
}

/// A b-matching instance: graph, vertex capacities `b`, edge capacities `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    graph: Graph,
    b: Vec<u64>,
    u: Option<Vec<u64>>,
    mode: Mode,
}

impl Instance {
    fn build(graph: Graph, b: Vec<u64>, u: Option<Vec<u64>>, mode: Mode) -> Result<Self> {
        if b.len() != graph.vertex_count() {
            return Err(Error::WeightLength {
                expected: graph.vertex_count(),
                got: b.len(),
            });
        }
        if let Some(u) = &u {
            if u.len() != graph.edge_count() {
                return Err(Error::WeightLength {
                    expected: graph.edge_count(),
                    got: u.len(),
                });
            }
        }
        Ok(Instance { graph, b, u, mode })
    }

    pub fn capacitated(graph: Graph, b: Vec<u64>, u: Vec<u64>) -> Result<Self> {
        Self::build(graph, b, Some(u), Mode::Capacitated)
    }

    pub fn perfect(graph: Graph, b: Vec<u64>, u: Vec<u64>) -> Result<Self> {
        Self::build(graph, b, Some(u), Mode::Perfect)
    }

    pub fn uncapacitated(graph: Graph, b: Vec<u64>) -> Result<Self> {
        Self::build(graph, b, None, Mode::Uncapacitated)
    }

    /// The 2-matching relaxation of the TSP: `b = 2`, `u = 1`.
    pub fn tsp(graph: Graph, perfect: bool) -> Self {
        let b = vec![2; graph.vertex_count()];
        let u = vec![1; graph.edge_count()];
        let mode = if perfect { Mode::Perfect } else { Mode::Capacitated };
        Instance {
            graph,
            b,
            u: Some(u),
            mode,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn b(&self, v: Vertex) -> u64 {
        self.b[v]
    }

    pub fn b_values(&self) -> &[u64] {
        &self.b
    }

    /// Edge capacity, `None` in uncapacitated mode.
    pub fn u(&self, e: EdgeId) -> Option<u64> {
        self.u.as_ref().map(|u| u[e])
    }

    pub fn u_values(&self) -> Option<&[u64]> {
        self.u.as_deref()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn b_of(&self, set: &VertexSet) -> u64 {
        set.iter().map(|&v| self.b[v]).sum()
    }
}

/// A nonnegative rational point indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalPoint(Vec<BigRational>);

impl FractionalPoint {
    pub fn new(values: Vec<BigRational>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| v.is_negative()) {
            return Err(Error::NegativeWeight(v.to_string()));
        }
        Ok(FractionalPoint(values))
    }

    pub fn zeros(len: usize) -> Self {
        FractionalPoint(vec![BigRational::zero(); len])
    }

    pub fn values(&self) -> &[BigRational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> &BigRational {
        &self.0[e]
    }

    fn check(&self, instance: &Instance) -> Result<()> {
        if self.0.len() != instance.graph.edge_count() {
            return Err(Error::WeightLength {
                expected: instance.graph.edge_count(),
                got: self.0.len(),
            });
        }
        Ok(())
    }
}

/// A violated degree constraint or edge bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearViolation {
    /// `x(delta(v))` exceeds `b_v`, or differs from it in perfect mode.
    Degree {
        vertex: Vertex,
        degree: BigRational,
        b: u64,
        amount: BigRational,
    },
    /// `x_e > u_e`.
    Bound {
        edge: EdgeId,
        x: BigRational,
        u: u64,
        amount: BigRational,
    },
}

fn degree(instance: &Instance, x: &FractionalPoint, v: Vertex) -> BigRational {
    instance
        .graph
        .incident(v)
        .iter()
        .fold(BigRational::zero(), |acc, &e| acc + &x.0[e])
}

fn int(v: u64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// `s_v = b_v - x(delta(v))`.
pub fn slack(instance: &Instance, x: &FractionalPoint, v: Vertex) -> Result<BigRational> {
    x.check(instance)?;
    instance.graph.check_vertex(v)?;
    Ok(int(instance.b[v]) - degree(instance, x, v))
}

/// All violated degree constraints (equalities in perfect mode) and edge bounds.
pub fn check_degree_and_bounds(instance: &Instance, x: &FractionalPoint) -> Result<Vec<LinearViolation>> {
    x.check(instance)?;
    let mut out = Vec::new();
    for v in instance.graph.vertices() {
        let deg = degree(instance, x, v);
        let s = int(instance.b[v]) - &deg;
        let bad = match instance.mode {
            Mode::Perfect => !s.is_zero(),
            _ => s.is_negative(),
        };
        if bad {
            out.push(LinearViolation::Degree {
                vertex: v,
                degree: deg,
                b: instance.b[v],
                amount: s.abs(),
            });
        }
    }
    if let Some(u) = &instance.u {
        for (e, xe) in x.0.iter().enumerate() {
            let cap = int(u[e]);
            if xe > &cap {
                out.push(LinearViolation::Bound {
                    edge: e,
                    x: xe.clone(),
                    u: u[e],
                    amount: xe - cap,
                });
            }
        }
    }
    Ok(out)
}

fn require_feasible(instance: &Instance, x: &FractionalPoint) -> Result<()> {
    let violations = check_degree_and_bounds(instance, x)?;
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::InfeasiblePoint(violations))
    }
}

/// The auxiliary graph `G*` with weight pair `(c, c')` and parity set `T`.
///
/// Original edges keep their ids; the apex edge of vertex `i` has id `m + i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarGraph {
    pub graph: Graph,
    pub c: Weights,
    pub c_prime: Weights,
    pub terminals: VertexSet,
    pub apex: Vertex,
}

impl StarGraph {
    pub fn apex_edge(&self, v: Vertex) -> EdgeId {
        self.graph.edge_count() - self.apex + v
    }

    pub fn is_apex_edge(&self, e: EdgeId) -> bool {
        e >= self.graph.edge_count() - self.apex
    }
}

/// Builds the star graph for a degree- and bound-feasible point.
///
/// Odd `u_e` gives `(x_e, u_e - x_e)`, even `u_e` gives
/// `(min(x_e, u_e - x_e), inf)`, and uncapacitated edges give `(x_e, inf)`.
pub fn build_star_graph(instance: &Instance, x: &FractionalPoint) -> Result<StarGraph> {
    require_feasible(instance, x)?;
    let g = &instance.graph;
    let n = g.vertex_count();
    let mut labels = g.labels().to_vec();
    labels.push("apex".to_string());
    let mut star = Graph::with_labels(labels);
    let mut c = Vec::with_capacity(g.edge_count() + n);
    let mut c_prime = Vec::with_capacity(g.edge_count() + n);
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        star.add_edge(a, b)?;
        let xe = x.0[e].clone();
        match instance.u(e) {
            Some(u) if u % 2 == 1 => {
                let rest = int(u) - &xe;
                c.push(ExtWeight::Finite(xe));
                c_prime.push(ExtWeight::Finite(rest));
            }
            Some(u) => {
                let rest = int(u) - &xe;
                c.push(ExtWeight::Finite(xe.min(rest)));
                c_prime.push(ExtWeight::Infinite);
            }
            None => {
                c.push(ExtWeight::Finite(xe));
                c_prime.push(ExtWeight::Infinite);
            }
        }
    }
    let apex = n;
    for v in g.vertices() {
        star.add_edge(v, apex)?;
        c.push(ExtWeight::Finite(int(instance.b[v]) - degree(instance, x, v)));
        c_prime.push(ExtWeight::Infinite);
    }
    let mut terminals: VertexSet = g.vertices().filter(|&v| instance.b[v] % 2 == 1).collect();
    if instance.b.iter().sum::<u64>() % 2 == 1 {
        terminals.insert(apex);
    }
    Ok(StarGraph {
        graph: star,
        c: Weights::new(c),
        c_prime: Weights::new(c_prime),
        terminals,
        apex,
    })
}

/// Both sides of a blossom inequality at a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlossomEvaluation {
    /// `x(E(W)) + x(F)`.
    pub lhs: BigRational,
    /// `floor((b(W) + u(F)) / 2)`.
    pub rhs: BigInt,
    /// `s(W) + x(delta(W) \ F) + sum over F of (u_f - x_f)`; the inequality
    /// holds iff this is at least one.
    pub oddcut_lhs: BigRational,
}

impl BlossomEvaluation {
    pub fn violation(&self) -> BigRational {
        &self.lhs - BigRational::from_integer(self.rhs.clone())
    }
}

/// Evaluates the blossom inequality with handle `W` and teeth `F`.
pub fn blossom_lhs_rhs(
    instance: &Instance,
    x: &FractionalPoint,
    handle: &VertexSet,
    teeth: &EdgeSet,
) -> Result<BlossomEvaluation> {
    x.check(instance)?;
    let g = &instance.graph;
    let cut = g.delta(handle)?;
    if let Some(&e) = teeth.iter().find(|e| cut.binary_search(e).is_err()) {
        return Err(Error::EdgeNotInCut(e));
    }
    if !teeth.is_empty() && instance.u.is_none() {
        return Err(Error::ModeMismatch {
            expected: Mode::Capacitated.name(),
            found: instance.mode.name(),
        });
    }
    let u_f: u64 = teeth.iter().filter_map(|&e| instance.u(e)).sum();
    let total = instance.b_of(handle) + u_f;
    if total.is_multiple_of(2) {
        return Err(Error::EvenBlossom);
    }
    let rhs = BigInt::from(total).div_floor(&BigInt::from(2));

    let mut lhs = BigRational::zero();
    for e in g.interior_edges(handle)? {
        lhs += &x.0[e];
    }
    let mut oddcut = BigRational::zero();
    for &v in handle {
        oddcut += int(instance.b[v]) - degree(instance, x, v);
    }
    for &e in &cut {
        if teeth.contains(&e) {
            lhs += &x.0[e];
            oddcut += int(instance.u(e).unwrap_or_default()) - &x.0[e];
        } else {
            oddcut += &x.0[e];
        }
    }
    let two = BigRational::from_integer(2.into());
    assert_eq!(
        oddcut,
        BigRational::one() + two * (BigRational::from_integer(rhs.clone()) - &lhs),
        "odd-cut form disagrees with the blossom inequality"
    );
    Ok(BlossomEvaluation {
        lhs,
        rhs,
        oddcut_lhs: oddcut,
    })
}

/// A violated blossom inequality on the original graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolatedBlossom {
    pub handle: VertexSet,
    pub teeth: EdgeSet,
    pub lhs: BigRational,
    pub rhs: BigInt,
    /// `lhs - rhs`, always positive; equals `(1 - beta) / 2`.
    pub violation: BigRational,
    /// Value of the star-graph blossom, below one.
    pub beta: BigRational,
    pub oddcut_lhs: BigRational,
}

impl ViolatedBlossom {
    /// `BLOSSOM W={..} F={..} lhs=.. rhs=.. violation=.. beta=..`, with
    /// vertex labels and edge ids rendered by the given closures.
    pub fn format_with(&self, vertex: impl Fn(Vertex) -> String, edge: impl Fn(EdgeId) -> String) -> String {
        let w: Vec<String> = self.handle.iter().map(|&v| vertex(v)).collect();
        let f: Vec<String> = self.teeth.iter().map(|&e| edge(e)).collect();
        format!(
            "BLOSSOM W={{{}}} F={{{}}} lhs={} rhs={} violation={} beta={}",
            w.join(","),
            f.join(","),
            self.lhs,
            self.rhs,
            self.violation,
            self.beta
        )
    }
}

impl fmt::Display for ViolatedBlossom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(|v| v.to_string(), |e| e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    /// A most violated inequality, if any inequality is violated.
    pub violated: Option<ViolatedBlossom>,
    /// Minimum blossom value on the star graph (minimum T-cut value in
    /// uncapacitated mode); `None` if the star graph has no blossom.
    pub min_beta: Option<ExtWeight>,
    pub maxflow_calls: usize,
}

/// Maps a star-graph handle back to the original graph: the side without
/// the apex.
fn handle_without_apex(star: &StarGraph, set: VertexSet) -> VertexSet {
    if set.contains(&star.apex) {
        star.graph.complement(&set)
    } else {
        set
    }
}

fn violated_from(
    instance: &Instance,
    x: &FractionalPoint,
    handle: VertexSet,
    teeth: EdgeSet,
    beta: BigRational,
) -> Result<ViolatedBlossom> {
    let eval = blossom_lhs_rhs(instance, x, &handle, &teeth)?;
    debug_assert_eq!(eval.oddcut_lhs, beta);
    let violation = eval.violation();
    Ok(ViolatedBlossom {
        handle,
        teeth,
        lhs: eval.lhs,
        rhs: eval.rhs,
        violation,
        beta,
        oddcut_lhs: eval.oddcut_lhs,
    })
}

/// Most violated blossom inequality for a capacitated (or perfect) instance.
pub fn separate_capacitated(instance: &Instance, x: &FractionalPoint) -> Result<SeparationReport> {
    if instance.mode == Mode::Uncapacitated {
        return Err(Error::ModeMismatch {
            expected: Mode::Capacitated.name(),
            found: instance.mode.name(),
        });
    }
    let star = build_star_graph(instance, x)?;
    let search = minimize_blossom(&star.graph, &star.c, &star.c_prime, &star.terminals)?;
    let maxflow_calls = search.tree.maxflow_calls();
    let Some(best) = search.best else {
        return Ok(SeparationReport {
            violated: None,
            min_beta: None,
            maxflow_calls,
        });
    };
    let min_beta = Some(best.beta.clone());
    let beta = match best.beta.into_finite() {
        Some(beta) if beta < BigRational::one() => beta,
        _ => {
            return Ok(SeparationReport {
                violated: None,
                min_beta,
                maxflow_calls,
            })
        }
    };

    let handle = handle_without_apex(&star, best.set);
    debug_assert!(best.teeth.iter().all(|&e| !star.is_apex_edge(e)));
    // Even-capacity edges carry min(x, u - x) as c; when u - x is the
    // smaller term the edge is a tooth of the inequality. Adding it keeps
    // the parity since u_e is even.
    let mut teeth = best.teeth;
    for e in instance.graph.delta(&handle)? {
        if let Some(u) = instance.u(e) {
            let xe = &x.0[e];
            if u % 2 == 0 && &(int(u) - xe) < xe {
                teeth.insert(e);
            }
        }
    }
    let found = violated_from(instance, x, handle, teeth, beta)?;
    Ok(SeparationReport {
        violated: Some(found),
        min_beta,
        maxflow_calls,
    })
}

/// Most violated simplified blossom inequality `x(E(W)) <= floor(b(W)/2)`
/// for an uncapacitated instance, via a minimum T-cut on the star graph.
pub fn separate_uncapacitated(instance: &Instance, x: &FractionalPoint) -> Result<SeparationReport> {
    if instance.mode != Mode::Uncapacitated {
        return Err(Error::ModeMismatch {
            expected: Mode::Uncapacitated.name(),
            found: instance.mode.name(),
        });
    }
    let star = build_star_graph(instance, x)?;
    if star.terminals.is_empty() {
        return Ok(SeparationReport {
            violated: None,
            min_beta: None,
            maxflow_calls: 0,
        });
    }
    let problem = OddCutProblem::new(&star.graph, &star.c, star.terminals.clone())?;
    let cut = minimum_t_cut(&problem)?;
    let maxflow_calls = cut.tree.maxflow_calls();
    let min_beta = Some(cut.value.clone());
    let value = match cut.value.into_finite() {
        Some(v) if v < BigRational::one() => v,
        _ => {
            return Ok(SeparationReport {
                violated: None,
                min_beta,
                maxflow_calls,
            })
        }
    };
    let handle = handle_without_apex(&star, cut.set);
    let found = violated_from(instance, x, handle, EdgeSet::new(), value)?;
    Ok(SeparationReport {
        violated: Some(found),
        min_beta,
        maxflow_calls,
    })
}

/// 2-matching blossom separation for the TSP (`b = 2`, `u = 1`).
pub fn separate_tsp(graph: &Graph, x: &FractionalPoint, perfect: bool) -> Result<SeparationReport> {
    separate_capacitated(&Instance::tsp(graph.clone(), perfect), x)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Degree or bound constraints are violated; blossom separation skipped.
    Linear(Vec<LinearViolation>),
    Blossoms(Box<SeparationReport>),
}

/// Checks degree and bound constraints first, then separates blossom
/// inequalities according to the instance mode.
pub fn separate(instance: &Instance, x: &FractionalPoint) -> Result<Outcome> {
    let linear = check_degree_and_bounds(instance, x)?;
    if !linear.is_empty() {
        return Ok(Outcome::Linear(linear));
    }
    let report = match instance.mode {
        Mode::Uncapacitated => separate_uncapacitated(instance, x)?,
        Mode::Capacitated | Mode::Perfect => separate_capacitated(instance, x)?,
    };
    Ok(Outcome::Blossoms(Box::new(report)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    fn point(vals: &[(i64, i64)]) -> FractionalPoint {
        FractionalPoint::new(vals.iter().map(|&(p, d)| q(p, d)).collect()).unwrap()
    }

    fn set(vs: &[Vertex]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// Triangle 0-1-2 at 1/2 with pendant edges 0-3, 1-4, 2-5 at 1.
    fn six_vertex() -> (Graph, FractionalPoint) {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let x = point(&[(1, 2), (1, 2), (1, 2), (1, 1), (1, 1), (1, 1)]);
        (g, x)
    }

    #[test]
    fn slack_examples() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let inst = Instance::capacitated(g, vec![2, 1, 3, 1], vec![1, 1, 1]).unwrap();
        let x = point(&[(1, 2), (1, 2), (1, 1)]);
        assert_eq!(slack(&inst, &x, 0).unwrap(), q(0, 1));
        assert_eq!(slack(&inst, &x, 2).unwrap(), q(5, 2));
        let lone = Instance::capacitated(Graph::new(1), vec![3], vec![]).unwrap();
        assert_eq!(slack(&lone, &FractionalPoint::zeros(0), 0).unwrap(), q(3, 1));
        let k2 = Instance::capacitated(Graph::from_edges(2, &[(0, 1)]).unwrap(), vec![1, 1], vec![1]).unwrap();
        assert_eq!(slack(&k2, &point(&[(3, 5)]), 0).unwrap(), q(2, 5));
        assert_eq!(slack(&k2, &point(&[(3, 5)]), 9), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn degree_and_bound_checks() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let inst = Instance::capacitated(g.clone(), vec![2, 2], vec![1]).unwrap();
        assert!(check_degree_and_bounds(&inst, &point(&[(1, 2)])).unwrap().is_empty());
        let v = check_degree_and_bounds(&inst, &point(&[(3, 2)])).unwrap();
        assert_eq!(
            v,
            vec![LinearViolation::Bound {
                edge: 0,
                x: q(3, 2),
                u: 1,
                amount: q(1, 2)
            }]
        );

        let g2 = Graph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let inst = Instance::capacitated(g2, vec![1, 2], vec![1, 1]).unwrap();
        let v = check_degree_and_bounds(&inst, &point(&[(1, 1), (1, 1)])).unwrap();
        assert_eq!(
            v,
            vec![LinearViolation::Degree {
                vertex: 0,
                degree: q(2, 1),
                b: 1,
                amount: q(1, 1)
            }]
        );

        let perfect = Instance::perfect(g, vec![1, 1], vec![1]).unwrap();
        assert_eq!(check_degree_and_bounds(&perfect, &point(&[(1, 2)])).unwrap().len(), 2);
        assert!(check_degree_and_bounds(&perfect, &point(&[(1, 1)])).unwrap().is_empty());
    }

    #[test]
    fn star_graph_weights() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let inst = Instance::capacitated(g.clone(), vec![1, 1], vec![1]).unwrap();
        let star = build_star_graph(&inst, &point(&[(3, 5)])).unwrap();
        assert_eq!(star.graph.vertex_count(), 3);
        assert_eq!(star.apex, 2);
        assert_eq!(star.c[0], ExtWeight::ratio(3, 5));
        assert_eq!(star.c_prime[0], ExtWeight::ratio(2, 5));
        assert_eq!(star.c[star.apex_edge(0)], ExtWeight::ratio(2, 5));
        assert_eq!(star.c[star.apex_edge(1)], ExtWeight::ratio(2, 5));
        assert!(star.c_prime[1].is_infinite() && star.c_prime[2].is_infinite());
        assert_eq!(star.terminals, set(&[0, 1]));

        let inst = Instance::capacitated(g.clone(), vec![1, 1], vec![2]).unwrap();
        let star = build_star_graph(&inst, &point(&[(3, 5)])).unwrap();
        assert_eq!(star.c[0], ExtWeight::ratio(3, 5));
        assert!(star.c_prime[0].is_infinite());
        assert_eq!(star.terminals, set(&[0, 1]));

        let inst = Instance::capacitated(g.clone(), vec![1, 2], vec![1]).unwrap();
        let star = build_star_graph(&inst, &point(&[(1, 2)])).unwrap();
        assert_eq!(star.terminals, set(&[0, 2]));

        let inst = Instance::capacitated(g, vec![1, 1], vec![1]).unwrap();
        assert!(matches!(
            build_star_graph(&inst, &point(&[(3, 2)])),
            Err(Error::InfeasiblePoint(_))
        ));
    }

    #[test]
    fn six_vertex_tsp_example() {
        let (g, x) = six_vertex();
        let report = separate_tsp(&g, &x, false).unwrap();
        let found = report.violated.expect("violated");
        assert_eq!(found.handle, set(&[0, 1, 2]));
        assert_eq!(found.teeth, EdgeSet::from([3, 4, 5]));
        assert_eq!(found.beta, q(0, 1));
        assert_eq!(found.rhs, BigInt::from(4));
        assert_eq!(found.lhs, q(9, 2));
        assert_eq!(found.violation, q(1, 2));
        assert_eq!(report.maxflow_calls, 6);
    }

    #[test]
    fn single_edge_is_not_violated() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let inst = Instance::capacitated(g, vec![1, 1], vec![1]).unwrap();
        let report = separate_capacitated(&inst, &point(&[(3, 5)])).unwrap();
        assert!(report.violated.is_none());
        assert_eq!(report.min_beta, Some(ExtWeight::integer(1)));
    }

    #[test]
    fn integral_points_are_not_violated() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let tour = FractionalPoint::new(vec![q(1, 1); 5]).unwrap();
        assert!(separate_tsp(&c5, &tour, true).unwrap().violated.is_none());
        assert!(separate_tsp(&c5, &FractionalPoint::zeros(5), false).unwrap().violated.is_none());
    }

    #[test]
    fn uncapacitated_triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let inst = Instance::uncapacitated(g, vec![1, 1, 1]).unwrap();
        let x = point(&[(1, 2), (1, 2), (1, 2)]);
        let report = separate_uncapacitated(&inst, &x).unwrap();
        let found = report.violated.unwrap();
        assert_eq!(found.handle, set(&[0, 1, 2]));
        assert!(found.teeth.is_empty());
        assert_eq!(found.rhs, BigInt::from(1));
        assert_eq!(found.lhs, q(3, 2));
        assert_eq!(found.violation, q(1, 2));
        assert_eq!(report.maxflow_calls, 3);

        let lone = Instance::uncapacitated(Graph::new(1), vec![1]).unwrap();
        assert!(separate_uncapacitated(&lone, &FractionalPoint::zeros(0)).unwrap().violated.is_none());
        assert!(matches!(separate_uncapacitated(&Instance::tsp(Graph::new(1), false), &FractionalPoint::zeros(0)), Err(Error::ModeMismatch { .. })));
    }

    #[test]
    fn lhs_rhs_examples() {
        let (g, x) = six_vertex();
        let inst = Instance::tsp(g, false);
        let eval = blossom_lhs_rhs(&inst, &x, &set(&[0, 1, 2]), &EdgeSet::from([3, 4, 5])).unwrap();
        assert_eq!((eval.lhs, eval.rhs, eval.oddcut_lhs), (q(9, 2), BigInt::from(4), q(0, 1)));

        let lone = Instance::capacitated(Graph::new(1), vec![1], vec![]).unwrap();
        let eval = blossom_lhs_rhs(&lone, &FractionalPoint::zeros(0), &set(&[0]), &EdgeSet::new()).unwrap();
        assert_eq!((eval.lhs, eval.rhs, eval.oddcut_lhs), (q(0, 1), BigInt::from(0), q(1, 1)));

        assert_eq!(
            blossom_lhs_rhs(&inst, &x, &set(&[0, 1, 2]), &EdgeSet::from([3, 4])).unwrap_err(),
            Error::EvenBlossom
        );
        assert_eq!(
            blossom_lhs_rhs(&inst, &x, &set(&[0, 1, 2]), &EdgeSet::from([0, 3, 4])).unwrap_err(),
            Error::EdgeNotInCut(0)
        );
    }

    #[test]
    fn even_capacity_edges_become_teeth() {
        // Triangle at 1/2 plus edge 2-3 with u = 2 at x = 2. Only the handle
        // {0,1,2} with that edge as a tooth is violated.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let inst = Instance::capacitated(g, vec![1, 1, 3, 3], vec![1, 1, 1, 2]).unwrap();
        let x = point(&[(1, 2), (1, 2), (1, 2), (2, 1)]);
        let report = separate_capacitated(&inst, &x).unwrap();
        let found = report.violated.expect("violated");
        assert_eq!(found.handle, set(&[0, 1, 2]));
        assert_eq!(found.teeth, EdgeSet::from([3]));
        assert_eq!(found.beta, q(0, 1));
        assert_eq!(found.violation, q(1, 2));
        assert_eq!(found.oddcut_lhs, found.beta);
    }

    #[test]
    fn separate_short_circuits_on_linear_violations() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let inst = Instance::capacitated(g, vec![1, 1], vec![1]).unwrap();
        match separate(&inst, &point(&[(2, 1)])).unwrap() {
            Outcome::Linear(v) => assert_eq!(v.len(), 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(separate_capacitated(&inst, &point(&[(2, 1)])), Err(Error::InfeasiblePoint(_))));
    }
}
