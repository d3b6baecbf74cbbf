//! Seeded random instance generators for tests and benchmarks.

use std::ops::RangeInclusive;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use crate::graph::{EdgeId, Graph, Vertex, VertexSet};
use crate::separation::{FractionalPoint, Instance, Mode};
use crate::weight::{ExtWeight, Weights};

/// Shape of random edge weights `p/q` with `p <= max_num`, `q <= max_den`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightSpec {
    pub max_num: u32,
    pub max_den: u32,
    pub zero_prob: f64,
    pub infinite_prob: f64,
}

impl Default for WeightSpec {
    fn default() -> Self {
        WeightSpec {
            max_num: 12,
            max_den: 10,
            zero_prob: 0.05,
            infinite_prob: 0.0,
        }
    }
}

/// Multigraph with a random vertex count and random (possibly parallel) edges.
pub fn random_graph<R: Rng>(
    rng: &mut R,
    vertices: RangeInclusive<usize>,
    edges: RangeInclusive<usize>,
) -> Graph {
    let n = rng.random_range(vertices);
    let m = if n < 2 { 0 } else { rng.random_range(edges) };
    let mut g = Graph::new(n);
    for _ in 0..m {
        let a = rng.random_range(0..n);
        let mut b = rng.random_range(0..n - 1);
        if b >= a {
            b += 1;
        }
        g.add_edge(a, b).expect("distinct endpoints");
    }
    g
}

pub fn random_weight<R: Rng>(rng: &mut R, spec: WeightSpec) -> ExtWeight {
    if rng.random_bool(spec.infinite_prob) {
        return ExtWeight::Infinite;
    }
    if rng.random_bool(spec.zero_prob) {
        return ExtWeight::zero();
    }
    let p = rng.random_range(0..=spec.max_num);
    let q = rng.random_range(1..=spec.max_den.max(1));
    ExtWeight::ratio(p.into(), q.into())
}

pub fn random_weights<R: Rng>(rng: &mut R, m: usize, spec: WeightSpec) -> Weights {
    (0..m).map(|_| random_weight(rng, spec)).collect()
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> VertexSet {
    (0..n).filter(|_| rng.random_bool(0.5)).collect()
}

/// Random subset of even size; nonempty whenever `n >= 2` and
/// `allow_empty` is false.
pub fn random_even_subset<R: Rng>(rng: &mut R, n: usize, allow_empty: bool) -> VertexSet {
    let mut set = random_subset(rng, n);
    if set.len() % 2 == 1 {
        let v = *set.iter().next().expect("odd set is nonempty");
        set.remove(&v);
    }
    if set.is_empty() && !allow_empty && n >= 2 {
        let a = rng.random_range(0..n);
        let b = (a + rng.random_range(1..n)) % n;
        set.insert(a);
        set.insert(b);
    }
    set
}

/// Size limits for [`random_case`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseSpec {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_b: u64,
    pub max_u: u64,
    /// Probability that `b_v` exceeds the rounded-up degree, outside perfect mode.
    pub slack_prob: f64,
}

impl Default for CaseSpec {
    fn default() -> Self {
        CaseSpec {
            max_vertices: 6,
            max_edges: 10,
            max_b: 3,
            max_u: 3,
            slack_prob: 0.4,
        }
    }
}

/// A closed walk found by a random walk, as a list of edge ids.
fn random_cycle<R: Rng>(rng: &mut R, g: &Graph) -> Option<Vec<EdgeId>> {
    let n = g.vertex_count();
    if g.edge_count() == 0 {
        return None;
    }
    let (a, _) = g.endpoints(rng.random_range(0..g.edge_count()));
    let mut walk: Vec<Vertex> = vec![a];
    let mut used: Vec<EdgeId> = Vec::new();
    for _ in 0..2 * n + 2 {
        let v = *walk.last().expect("walk is nonempty");
        let incident = g.incident(v);
        let fresh: Vec<EdgeId> = incident
            .iter()
            .copied()
            .filter(|&e| used.last() != Some(&e))
            .collect();
        let pool = if fresh.is_empty() { incident } else { &fresh[..] };
        let e = pool[rng.random_range(0..pool.len())];
        let (p, q) = g.endpoints(e);
        let w = if p == v { q } else { p };
        used.push(e);
        if let Some(start) = walk.iter().position(|&x| x == w) {
            return Some(used[start..].to_vec());
        }
        walk.push(w);
    }
    None
}

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(p.into(), d.into())
}

fn degrees(g: &Graph, x: &[BigRational]) -> Vec<BigRational> {
    g.vertices()
        .map(|v| g.incident(v).iter().fold(BigRational::zero(), |acc, &e| acc + &x[e]))
        .collect()
}

/// A random instance in the given mode together with a point satisfying its
/// degree constraints (with equality in perfect mode) and bounds.
///
/// Points are built from half-unit circulations on random cycles, integral
/// edge increments and alternating perturbations of even cycles, which
/// produces many violated blossoms. Outside perfect mode, arbitrary
/// fractional increments on single edges are mixed in.
pub fn random_case<R: Rng>(rng: &mut R, mode: Mode, spec: CaseSpec) -> (Instance, FractionalPoint) {
    let g = random_graph(rng, 1..=spec.max_vertices, 0..=spec.max_edges);
    let m = g.edge_count();
    let u: Option<Vec<u64>> = match mode {
        Mode::Uncapacitated => None,
        _ => Some(
            (0..m)
                .map(|_| {
                    if rng.random_bool(0.06) {
                        0
                    } else {
                        rng.random_range(1..=spec.max_u)
                    }
                })
                .collect(),
        ),
    };
    let cap: Vec<BigRational> = (0..m)
        .map(|e| BigRational::from_integer(u.as_ref().map_or(spec.max_b, |u| u[e]).into()))
        .collect();
    let max_b = BigRational::from_integer(spec.max_b.into());

    let mut x = vec![BigRational::zero(); m];
    let steps = if m == 0 { 0 } else { rng.random_range(0..=2 * m + 2) };
    for _ in 0..steps {
        let mut next = x.clone();
        match rng.random_range(0..4) {
            0 | 1 => {
                let Some(cycle) = random_cycle(rng, &g) else { continue };
                if rng.random_bool(0.7) || cycle.len() % 2 == 1 {
                    for &e in &cycle {
                        next[e] += q(1, 2);
                    }
                } else {
                    let t = q(rng.random_range(1..=4), rng.random_range(1..=6));
                    for (i, &e) in cycle.iter().enumerate() {
                        if i % 2 == 0 {
                            next[e] += &t;
                        } else {
                            next[e] -= &t;
                        }
                    }
                }
            }
            2 => next[rng.random_range(0..m)] += q(1, 1),
            _ => {
                if mode == Mode::Perfect {
                    continue;
                }
                next[rng.random_range(0..m)] += q(rng.random_range(1..=5), rng.random_range(1..=7));
            }
        }
        let within_bounds = next.iter().zip(&cap).all(|(v, c)| !v.is_negative() && v <= c);
        if within_bounds && degrees(&g, &next).iter().all(|d| d <= &max_b) {
            x = next;
        }
    }

    let b: Vec<u64> = degrees(&g, &x)
        .into_iter()
        .map(|d| {
            let ceil = d.ceil().to_integer();
            let base: u64 = ceil.try_into().expect("small degree");
            if mode == Mode::Perfect {
                debug_assert!(d.denom().is_one());
                return base;
            }
            let extra = match rng.random_bool(spec.slack_prob) {
                false => 0,
                true => rng.random_range(1..=2),
            };
            (base + extra).clamp(1, spec.max_b.max(base))
        })
        .collect();

    let instance = match mode {
        Mode::Capacitated => Instance::capacitated(g, b, u.expect("capacities")),
        Mode::Perfect => Instance::perfect(g, b, u.expect("capacities")),
        Mode::Uncapacitated => Instance::uncapacitated(g, b),
    }
    .expect("consistent sizes");
    let point = FractionalPoint::new(x).expect("nonnegative point");
    (instance, point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::separation::check_degree_and_bounds;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn cases_are_feasible() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for mode in [Mode::Capacitated, Mode::Uncapacitated, Mode::Perfect] {
            for _ in 0..200 {
                let (inst, x) = random_case(&mut rng, mode, CaseSpec::default());
                assert!(check_degree_and_bounds(&inst, &x).unwrap().is_empty(), "{mode:?}");
                assert!(inst.b_values().iter().all(|&b| b <= 3));
                assert!(inst.graph().vertex_count() <= 6 && inst.graph().edge_count() <= 10);
            }
        }
    }

    #[test]
    fn even_subsets() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for n in 0..8 {
            for _ in 0..20 {
                let t = random_even_subset(&mut rng, n, false);
                assert_eq!(t.len() % 2, 0);
                assert!(n < 2 || !t.is_empty());
                assert!(t.iter().all(|&v| v < n));
            }
        }
    }
}
