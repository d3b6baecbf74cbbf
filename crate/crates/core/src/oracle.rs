//! Brute-force reference implementations.
//!
//! Each function enumerates the definition it checks directly over vertex
//! and edge subsets. Nothing here calls into `maxflow`, `cut_tree`,
//! `odd_cut` or the star-graph reduction. Size guards are hard errors.
//! Ties go to the first subset in enumeration order.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, EdgeSet, Graph, Vertex, VertexSet};
use crate::separation::{FractionalPoint, Instance, Mode};
use crate::weight::{ExtWeight, Weights};

pub const MAX_ST_CUT_VERTICES: usize = 20;
pub const MAX_T_CUT_VERTICES: usize = 16;
pub const MAX_BLOSSOM_VERTICES: usize = 8;
pub const MAX_BLOSSOM_CUT: usize = 14;
pub const MAX_SEPARATION_VERTICES: usize = 6;
pub const MAX_SEPARATION_EDGES: usize = 10;

fn guard(g: &Graph, max: usize) -> Result<()> {
    if g.vertex_count() > max {
        return Err(Error::TooLarge(format!(
            "{} vertices, limit {max}",
            g.vertex_count()
        )));
    }
    Ok(())
}

fn set_of(bits: u64, n: usize) -> VertexSet {
    (0..n).filter(|&v| bits >> v & 1 == 1).collect()
}

fn crossing(g: &Graph, bits: u64) -> Vec<EdgeId> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| (bits >> a & 1) != (bits >> b & 1))
        .map(|(e, _)| e)
        .collect()
}

fn weight_of(edges: &[EdgeId], c: &Weights) -> ExtWeight {
    let mut total = ExtWeight::zero();
    for &e in edges {
        total = &total + &c[e];
    }
    total
}

fn check_weights(g: &Graph, c: &Weights) -> Result<()> {
    if c.len() != g.edge_count() {
        return Err(Error::WeightLength {
            expected: g.edge_count(),
            got: c.len(),
        });
    }
    Ok(())
}

/// Minimum cut over all `U` with `s ∈ U`, `t ∉ U`.
pub fn bf_min_st_cut(g: &Graph, c: &Weights, s: Vertex, t: Vertex) -> Result<(ExtWeight, VertexSet)> {
    guard(g, MAX_ST_CUT_VERTICES)?;
    check_weights(g, c)?;
    let n = g.vertex_count();
    if s >= n {
        return Err(Error::UnknownVertex(s));
    }
    if t >= n {
        return Err(Error::UnknownVertex(t));
    }
    if s == t {
        return Err(Error::SameSourceSink(s));
    }
    let mut best: Option<(ExtWeight, u64)> = None;
    for bits in 0..1u64 << n {
        if bits >> s & 1 == 0 || bits >> t & 1 == 1 {
            continue;
        }
        let w = weight_of(&crossing(g, bits), c);
        if best.as_ref().is_none_or(|(b, _)| w < *b) {
            best = Some((w, bits));
        }
    }
    let (w, bits) = best.expect("s-t cuts exist");
    Ok((w, set_of(bits, n)))
}

/// Minimum cut over all `U` with `|T ∩ U|` odd.
pub fn bf_min_t_cut(g: &Graph, c: &Weights, t: &VertexSet) -> Result<(ExtWeight, VertexSet)> {
    guard(g, MAX_T_CUT_VERTICES)?;
    check_weights(g, c)?;
    let n = g.vertex_count();
    if let Some(&v) = t.iter().find(|&&v| v >= n) {
        return Err(Error::UnknownVertex(v));
    }
    if t.is_empty() {
        return Err(Error::EmptyTerminalSet);
    }
    if t.len() % 2 == 1 {
        return Err(Error::OddTerminalSet(t.len()));
    }
    let t_bits: u64 = t.iter().map(|&v| 1u64 << v).sum();
    let mut best: Option<(ExtWeight, u64)> = None;
    for bits in 0..1u64 << n {
        if (bits & t_bits).count_ones().is_multiple_of(2) {
            continue;
        }
        let w = weight_of(&crossing(g, bits), c);
        if best.as_ref().is_none_or(|(b, _)| w < *b) {
            best = Some((w, bits));
        }
    }
    let (w, bits) = best.expect("T-odd sets exist");
    Ok((w, set_of(bits, n)))
}

/// Minimum of `beta(U, F)` over all `F ⊆ delta(U)` with `|T ∩ U| + |F|`
/// odd; `None` if there is no such `F`.
pub fn bf_min_beta_for_set(
    g: &Graph,
    c: &Weights,
    c_prime: &Weights,
    t: &VertexSet,
    set: &VertexSet,
) -> Result<Option<(ExtWeight, EdgeSet)>> {
    guard(g, MAX_BLOSSOM_VERTICES)?;
    check_weights(g, c)?;
    check_weights(g, c_prime)?;
    if let Some(&v) = set.iter().chain(t).find(|&&v| v >= g.vertex_count()) {
        return Err(Error::UnknownVertex(v));
    }
    let bits: u64 = set.iter().map(|&v| 1u64 << v).sum();
    let t_odd = set.intersection(t).count() % 2 == 1;
    min_over_teeth(g, c, c_prime, bits, t_odd)
}

fn min_over_teeth(
    g: &Graph,
    c: &Weights,
    c_prime: &Weights,
    bits: u64,
    t_odd: bool,
) -> Result<Option<(ExtWeight, EdgeSet)>> {
    let cut = crossing(g, bits);
    if cut.len() > MAX_BLOSSOM_CUT {
        return Err(Error::TooLarge(format!(
            "cut of {} edges, limit {MAX_BLOSSOM_CUT}",
            cut.len()
        )));
    }
    let mut best: Option<(ExtWeight, u64)> = None;
    extend_teeth(&cut, c, c_prime, 0, ExtWeight::zero(), 0, t_odd, &mut best);
    Ok(best.map(|(beta, f)| {
        let teeth = cut
            .iter()
            .enumerate()
            .filter(|(i, _)| f >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        (beta, teeth)
    }))
}

/// Walks every subset of `cut`, accumulating `beta` along the way; bit `i`
/// of `chosen` marks `cut[i]` as a tooth.
#[allow(clippy::too_many_arguments)]
fn extend_teeth(
    cut: &[EdgeId],
    c: &Weights,
    c_prime: &Weights,
    depth: usize,
    acc: ExtWeight,
    chosen: u64,
    t_odd: bool,
    best: &mut Option<(ExtWeight, u64)>,
) {
    if depth == cut.len() {
        if t_odd != (chosen.count_ones() % 2 == 1) && best.as_ref().is_none_or(|(b, _)| acc < *b) {
            *best = Some((acc, chosen));
        }
        return;
    }
    let e = cut[depth];
    extend_teeth(cut, c, c_prime, depth + 1, &acc + &c[e], chosen, t_odd, best);
    extend_teeth(cut, c, c_prime, depth + 1, &acc + &c_prime[e], chosen | 1 << depth, t_odd, best);
}

/// Minimum `beta(U, F)` over every blossom; `None` if no blossom exists.
pub fn bf_min_blossom(
    g: &Graph,
    c: &Weights,
    c_prime: &Weights,
    t: &VertexSet,
) -> Result<Option<(ExtWeight, VertexSet, EdgeSet)>> {
    guard(g, MAX_BLOSSOM_VERTICES)?;
    check_weights(g, c)?;
    check_weights(g, c_prime)?;
    let n = g.vertex_count();
    if let Some(&v) = t.iter().find(|&&v| v >= n) {
        return Err(Error::UnknownVertex(v));
    }
    let t_bits: u64 = t.iter().map(|&v| 1u64 << v).sum();
    let mut best: Option<(ExtWeight, u64, EdgeSet)> = None;
    for bits in 0..1u64 << n {
        let t_odd = (bits & t_bits).count_ones() % 2 == 1;
        if let Some((beta, teeth)) = min_over_teeth(g, c, c_prime, bits, t_odd)? {
            if best.as_ref().is_none_or(|(b, _, _)| beta < *b) {
                best = Some((beta, bits, teeth));
            }
        }
    }
    Ok(best.map(|(beta, bits, teeth)| (beta, set_of(bits, n), teeth)))
}

/// The most violated blossom inequality found by enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleBlossom {
    pub violation: BigRational,
    pub handle: VertexSet,
    pub teeth: EdgeSet,
}

/// Maximizes `x(E(W)) + x(F) - floor((b(W) + u(F)) / 2)` over all handles
/// `W` and teeth `F ⊆ delta(W)` with `b(W) + u(F)` odd. In uncapacitated
/// mode only `F = ∅` is considered. Returns `None` when nothing is violated.
pub fn bf_most_violated_blossom(instance: &Instance, x: &FractionalPoint) -> Result<Option<OracleBlossom>> {
    let g = instance.graph();
    guard(g, MAX_SEPARATION_VERTICES)?;
    if g.edge_count() > MAX_SEPARATION_EDGES {
        return Err(Error::TooLarge(format!(
            "{} edges, limit {MAX_SEPARATION_EDGES}",
            g.edge_count()
        )));
    }
    if x.len() != g.edge_count() {
        return Err(Error::WeightLength {
            expected: g.edge_count(),
            got: x.len(),
        });
    }
    let n = g.vertex_count();
    let with_teeth = instance.mode() != Mode::Uncapacitated;
    let mut best: Option<(BigRational, u64, Vec<EdgeId>)> = None;
    for bits in 1..1u64 << n {
        let b_w: u64 = (0..n).filter(|&v| bits >> v & 1 == 1).map(|v| instance.b(v)).sum();
        let mut inside = BigRational::zero();
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            if bits >> a & 1 == 1 && bits >> b & 1 == 1 {
                inside += x.get(e);
            }
        }
        let cut = crossing(g, bits);
        let subsets: u64 = if with_teeth { 1 << cut.len() } else { 1 };
        for f in 0..subsets {
            let teeth: Vec<EdgeId> = cut
                .iter()
                .enumerate()
                .filter(|(i, _)| f >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let u_f: u64 = teeth.iter().map(|&e| instance.u(e).unwrap_or(0)).sum();
            let total = b_w + u_f;
            if total.is_multiple_of(2) {
                continue;
            }
            let mut lhs = inside.clone();
            for &e in &teeth {
                lhs += x.get(e);
            }
            let violation = lhs - BigRational::from_integer(BigInt::from(total / 2));
            if best.as_ref().is_none_or(|(v, _, _)| violation > *v) {
                best = Some((violation, bits, teeth));
            }
        }
    }
    Ok(best
        .filter(|(v, _, _)| *v > BigRational::zero())
        .map(|(violation, bits, teeth)| OracleBlossom {
            violation,
            handle: set_of(bits, n),
            teeth: teeth.into_iter().collect(),
        }))
}
