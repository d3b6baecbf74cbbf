//! Minimum T-cuts and blossom minimization over cut-trees.
//!
//! Both algorithms build one cut-tree and then inspect the cut induced by
//! each tree edge. [`minimum_t_cut`] uses the terminal set `T` and keeps the
//! cheapest `T`-odd edge; [`minimize_blossom`] uses weights `min(c, c')` on
//! all vertices and scores each induced cut with [`beta_min_f`].

use crate::error::{Error, Result};
use crate::cut_tree::{gomory_hu, CutTree};
use crate::graph::{EdgeSet, Graph, Vertex, VertexSet};
use crate::weight::{ExtWeight, Weights};

/// A minimum T-cut instance: `|T|` even and nonzero.
#[derive(Debug, Clone)]
pub struct OddCutProblem<'a> {
    graph: &'a Graph,
    weights: &'a Weights,
    terminals: VertexSet,
}

impl<'a> OddCutProblem<'a> {
    pub fn new(graph: &'a Graph, weights: &'a Weights, terminals: VertexSet) -> Result<Self> {
        weights.check_len(graph.edge_count())?;
        graph.check_set(&terminals)?;
        if terminals.is_empty() {
            return Err(Error::EmptyTerminalSet);
        }
        if terminals.len() % 2 == 1 {
            return Err(Error::OddTerminalSet(terminals.len()));
        }
        Ok(OddCutProblem {
            graph,
            weights,
            terminals,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn weights(&self) -> &Weights {
        self.weights
    }

    pub fn terminals(&self) -> &VertexSet {
        &self.terminals
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TCut {
    /// A `T`-odd vertex set of minimum cut weight.
    pub set: VertexSet,
    pub value: ExtWeight,
    /// Index of the inducing edge in `tree`.
    pub tree_edge: usize,
    pub tree: CutTree,
}

fn odd_intersection(set: &VertexSet, t: &VertexSet) -> bool {
    set.intersection(t).count() % 2 == 1
}

/// Tree edges whose induced bipartition splits `t_set` into odd parts.
///
/// These edges form a T-join of the tree when `t_set` is mapped onto the
/// terminals through `pi`.
pub fn t_odd_tree_edges(t_set: &VertexSet, tree: &CutTree) -> Vec<usize> {
    (0..tree.edges().len())
        .filter(|&i| odd_intersection(&tree.induced_cut_at(i), t_set))
        .collect()
}

/// Minimum-weight `T`-odd cut, taken over the `T`-odd edges of a cut-tree
/// with terminal set `T`. All candidate edges are evaluated; ties go to the
/// earliest edge in construction order.
pub fn minimum_t_cut(problem: &OddCutProblem<'_>) -> Result<TCut> {
    let tree = gomory_hu(problem.graph, problem.weights, &problem.terminals)?;
    let mut best: Option<(usize, VertexSet)> = None;
    for i in t_odd_tree_edges(&problem.terminals, &tree) {
        let better = match &best {
            None => true,
            Some((b, _)) => tree.edges()[i].value < tree.edges()[*b].value,
        };
        if better {
            best = Some((i, tree.induced_cut_at(i)));
        }
    }
    // A nonempty even T always leaves some T-odd tree edge.
    let (tree_edge, set) = best.expect("T-odd tree edge exists");
    Ok(TCut {
        value: tree.edges()[tree_edge].value.clone(),
        set,
        tree_edge,
        tree,
    })
}

/// Result of minimizing `beta(U, .)` over parity-feasible tooth sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaMin {
    pub teeth: EdgeSet,
    pub beta: ExtWeight,
    /// False when `delta(U)` is empty and `|T ∩ U|` is even: no blossom has
    /// handle `U`, and `beta` is the infinite sentinel.
    pub is_blossom: bool,
}

fn check_pair(g: &Graph, c: &Weights, c_prime: &Weights) -> Result<()> {
    c.check_len(g.edge_count())?;
    c_prime.check_len(g.edge_count())?;
    Ok(())
}

/// `beta(U, F) = sum over delta(U) \ F of c + sum over F of c'`.
pub fn blossom_value(
    g: &Graph,
    c: &Weights,
    c_prime: &Weights,
    set: &VertexSet,
    teeth: &EdgeSet,
) -> Result<ExtWeight> {
    check_pair(g, c, c_prime)?;
    let cut = g.delta(set)?;
    if let Some(&e) = teeth.iter().find(|e| cut.binary_search(e).is_err()) {
        return Err(Error::EdgeNotInCut(e));
    }
    Ok(cut
        .iter()
        .map(|&e| if teeth.contains(&e) { &c_prime[e] } else { &c[e] })
        .sum())
}

/// Cheapest tooth set for handle `U` in time linear in `|delta(U)|`.
///
/// Starts from `F = {e : c'_e < c_e}`; if the parity of `|T ∩ U| + |F|` is
/// wrong, toggles the edge of `delta(U)` with the smallest `|c_e - c'_e|`
/// (lowest id on ties).
pub fn beta_min_f(
    g: &Graph,
    c: &Weights,
    c_prime: &Weights,
    t: &VertexSet,
    set: &VertexSet,
) -> Result<BetaMin> {
    check_pair(g, c, c_prime)?;
    g.check_set(t)?;
    let cut = g.delta(set)?;
    Ok(beta_min_on_cut(c, c_prime, odd_intersection(set, t), &cut))
}

fn beta_min_on_cut(c: &Weights, c_prime: &Weights, t_odd: bool, cut: &[usize]) -> BetaMin {
    let mut teeth = EdgeSet::new();
    let mut beta = ExtWeight::zero();
    for &e in cut {
        if c_prime[e] < c[e] {
            teeth.insert(e);
            beta += &c_prime[e];
        } else {
            beta += &c[e];
        }
    }
    if t_odd != (teeth.len() % 2 == 1) {
        return BetaMin {
            teeth,
            beta,
            is_blossom: true,
        };
    }
    let mut flip: Option<(usize, ExtWeight)> = None;
    for &e in cut {
        let gap = c[e].abs_diff(&c_prime[e]);
        if flip.as_ref().is_none_or(|(_, best)| gap < *best) {
            flip = Some((e, gap));
        }
    }
    match flip {
        Some((e, gap)) => {
            if !teeth.remove(&e) {
                teeth.insert(e);
            }
            BetaMin {
                teeth,
                beta: beta + gap,
                is_blossom: true,
            }
        }
        None => BetaMin {
            teeth,
            beta: ExtWeight::Infinite,
            is_blossom: false,
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Blossom {
    pub set: VertexSet,
    pub teeth: EdgeSet,
    pub beta: ExtWeight,
    /// Index of the cut-tree edge that induced `set`.
    pub tree_edge: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlossomSearch {
    /// `None` when the instance admits no blossom at all.
    pub best: Option<Blossom>,
    pub tree: CutTree,
}

/// Finds a blossom `(U, F)` of globally minimum value.
///
/// Requires `|T|` even and no edge with both `c_e` and `c'_e` infinite.
pub fn minimize_blossom(
    g: &Graph,
    c: &Weights,
    c_prime: &Weights,
    t: &VertexSet,
) -> Result<BlossomSearch> {
    check_pair(g, c, c_prime)?;
    g.check_set(t)?;
    if t.len() % 2 == 1 {
        return Err(Error::OddTerminalSet(t.len()));
    }
    if let Some(e) = (0..g.edge_count()).find(|&e| c[e].is_infinite() && c_prime[e].is_infinite()) {
        return Err(Error::BothInfinite(e));
    }
    if g.vertex_count() == 0 {
        return Err(Error::EmptyTerminalSet);
    }

    let w = c.min_with(c_prime);
    let tree = gomory_hu(g, &w, &g.all_vertices())?;
    let mut best: Option<Blossom> = None;
    for i in 0..tree.edges().len() {
        let set = tree.induced_cut_at(i);
        let mask = g.mask(&set)?;
        let cut = g.delta_mask(&mask);
        let candidate = beta_min_on_cut(c, c_prime, odd_intersection(&set, t), &cut);
        if !candidate.is_blossom {
            continue;
        }
        if best.as_ref().is_none_or(|b| candidate.beta < b.beta) {
            best = Some(Blossom {
                set,
                teeth: candidate.teeth,
                beta: candidate.beta,
                tree_edge: i,
            });
        }
    }
    Ok(BlossomSearch { best, tree })
}

/// `T` toggled by both endpoints of every edge with `c'_e < c_e`.
pub fn t_prime(g: &Graph, c: &Weights, c_prime: &Weights, t: &VertexSet) -> Result<VertexSet> {
    check_pair(g, c, c_prime)?;
    let mut out = t.clone();
    let mut toggle = |v: Vertex| {
        if !out.remove(&v) {
            out.insert(v);
        }
    };
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if c_prime[e] < c[e] {
            toggle(u);
            toggle(v);
        }
    }
    Ok(out)
}
