//! Gomory–Hu cut-trees over a terminal vertex set.
//!
//! The construction keeps a tree of vertex groups, each holding at least one
//! terminal. A group with two terminals `s`, `t` is split by a minimum
//! (s,t)-cut computed in the graph where every subtree hanging off the group
//! is contracted to a single vertex. Exactly `|X| - 1` max-flow calls are made.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, VertexSet};
use crate::maxflow::min_st_cut;
use crate::weight::{ExtWeight, Weights};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEdge {
    pub x: Vertex,
    pub y: Vertex,
    /// Weight of the cut induced by this edge.
    pub value: ExtWeight,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutTree {
    terminals: VertexSet,
    pi: Vec<Vertex>,
    edges: Vec<TreeEdge>,
    adjacency: Vec<Vec<usize>>,
    maxflow_calls: usize,
}

impl CutTree {
    pub fn terminals(&self) -> &VertexSet {
        &self.terminals
    }

    /// The terminal that vertex `v` is assigned to.
    pub fn pi(&self, v: Vertex) -> Vertex {
        self.pi[v]
    }

    pub fn assignment(&self) -> &[Vertex] {
        &self.pi
    }

    /// Tree edges in construction order.
    pub fn edges(&self) -> &[TreeEdge] {
        &self.edges
    }

    /// Number of minimum (s,t)-cut computations performed while building.
    pub fn maxflow_calls(&self) -> usize {
        self.maxflow_calls
    }

    pub fn edge_index(&self, x: Vertex, y: Vertex) -> Option<usize> {
        self.edges
            .iter()
            .position(|e| (e.x == x && e.y == y) || (e.x == y && e.y == x))
    }

    /// Terminals on the `from` side after deleting tree edge `index`.
    fn component(&self, index: usize, from: Vertex) -> VertexSet {
        let mut seen = VertexSet::from([from]);
        let mut queue = VecDeque::from([from]);
        while let Some(a) = queue.pop_front() {
            for &i in &self.adjacency[a] {
                if i == index {
                    continue;
                }
                let e = &self.edges[i];
                let b = if e.x == a { e.y } else { e.x };
                if seen.insert(b) {
                    queue.push_back(b);
                }
            }
        }
        seen
    }

    /// Terminals on the `x` side of tree edge `index`.
    pub fn side_terminals(&self, index: usize) -> VertexSet {
        self.component(index, self.edges[index].x)
    }

    /// The vertex set `pi^-1(X_x)` induced by tree edge `index`, `x` side.
    pub fn induced_cut_at(&self, index: usize) -> VertexSet {
        let side = self.side_terminals(index);
        self.pi
            .iter()
            .enumerate()
            .filter(|(_, p)| side.contains(p))
            .map(|(v, _)| v)
            .collect()
    }

    /// The cut induced by tree edge `x ~ y`, returned as the side of `x`.
    pub fn induced_cut(&self, x: Vertex, y: Vertex) -> Result<VertexSet> {
        let index = self.edge_index(x, y).ok_or(Error::NotTreeEdge(x, y))?;
        let side = self.component(index, x);
        Ok(self
            .pi
            .iter()
            .enumerate()
            .filter(|(_, p)| side.contains(p))
            .map(|(v, _)| v)
            .collect())
    }

    /// Tree edge indices on the path between two terminals.
    pub fn path(&self, from: Vertex, to: Vertex) -> Option<Vec<usize>> {
        if !self.terminals.contains(&from) || !self.terminals.contains(&to) {
            return None;
        }
        let mut parent: Vec<Option<(Vertex, usize)>> = vec![None; self.pi.len()];
        let mut seen = VertexSet::from([from]);
        let mut queue = VecDeque::from([from]);
        while let Some(a) = queue.pop_front() {
            if a == to {
                break;
            }
            for &i in &self.adjacency[a] {
                let e = &self.edges[i];
                let b = if e.x == a { e.y } else { e.x };
                if seen.insert(b) {
                    parent[b] = Some((a, i));
                    queue.push_back(b);
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, i) = parent[cur]?;
            path.push(i);
            cur = p;
        }
        path.reverse();
        Some(path)
    }

    /// Text dump: one `t <x> <y> <value>` line per tree edge, then
    /// `pi <v> <x>` for every vertex.
    pub fn dump(&self, g: &Graph) -> String {
        let mut out = String::new();
        for e in &self.edges {
            let _ = writeln!(out, "t {} {} {}", g.label(e.x), g.label(e.y), e.value);
        }
        for (v, &p) in self.pi.iter().enumerate() {
            let _ = writeln!(out, "pi {} {}", g.label(v), g.label(p));
        }
        out
    }
}

struct Group {
    vertices: Vec<Vertex>,
    terminals: Vec<Vertex>,
}

/// Builds a cut-tree for `g` with capacities `c` on the terminal set `terminals`.
pub fn gomory_hu(g: &Graph, c: &Weights, terminals: &VertexSet) -> Result<CutTree> {
    c.check_len(g.edge_count())?;
    g.check_set(terminals)?;
    if terminals.is_empty() {
        return Err(Error::EmptyTerminalSet);
    }

    let mut groups = vec![Group {
        vertices: g.vertices().collect(),
        terminals: terminals.iter().copied().collect(),
    }];
    // (group a, group b, value), a holds the source side when created
    let mut links: Vec<(usize, usize, ExtWeight)> = Vec::new();
    let mut calls = 0;

    while let Some(gi) = groups.iter().position(|grp| grp.terminals.len() >= 2) {
        let s = groups[gi].terminals[0];
        let t = groups[gi].terminals[1];

        // Contract each subtree hanging off group gi.
        let mut node_of = vec![usize::MAX; g.vertex_count()];
        let mut contracted = Graph::new(0);
        for &v in &groups[gi].vertices {
            node_of[v] = contracted.add_vertex(g.label(v));
        }
        let incident_links: Vec<usize> = (0..links.len())
            .filter(|&l| links[l].0 == gi || links[l].1 == gi)
            .collect();
        let mut link_node = Vec::with_capacity(incident_links.len());
        for &l in &incident_links {
            let start = if links[l].0 == gi { links[l].1 } else { links[l].0 };
            let super_vertex = contracted.add_vertex(format!("#{start}"));
            for grp in subtree_groups(&links, groups.len(), gi, start) {
                for &v in &groups[grp].vertices {
                    node_of[v] = super_vertex;
                }
            }
            link_node.push(super_vertex);
        }
        let mut cw = Vec::new();
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let (na, nb) = (node_of[a], node_of[b]);
            if na != nb {
                contracted.add_edge(na, nb)?;
                cw.push(c[e].clone());
            }
        }

        let cut = min_st_cut(&contracted, &Weights::new(cw), node_of[s], node_of[t])?;
        calls += 1;
        let in_source = |v: Vertex| cut.source_side.contains(&node_of[v]);

        let old = std::mem::replace(
            &mut groups[gi],
            Group {
                vertices: Vec::new(),
                terminals: Vec::new(),
            },
        );
        let (src_v, snk_v): (Vec<_>, Vec<_>) = old.vertices.into_iter().partition(|&v| in_source(v));
        let (src_t, snk_t): (Vec<_>, Vec<_>) = old.terminals.into_iter().partition(|&v| in_source(v));
        groups[gi] = Group {
            vertices: src_v,
            terminals: src_t,
        };
        let sink_group = groups.len();
        groups.push(Group {
            vertices: snk_v,
            terminals: snk_t,
        });

        for (&l, &node) in incident_links.iter().zip(&link_node) {
            if !cut.source_side.contains(&node) {
                if links[l].0 == gi {
                    links[l].0 = sink_group;
                } else {
                    links[l].1 = sink_group;
                }
            }
        }
        links.push((gi, sink_group, cut.value));
    }

    let rep: Vec<Vertex> = groups.iter().map(|grp| grp.terminals[0]).collect();
    let mut pi = vec![0; g.vertex_count()];
    for (grp, &r) in groups.iter().zip(&rep) {
        for &v in &grp.vertices {
            pi[v] = r;
        }
    }
    let edges: Vec<TreeEdge> = links
        .into_iter()
        .map(|(a, b, value)| TreeEdge {
            x: rep[a],
            y: rep[b],
            value,
        })
        .collect();
    let mut adjacency = vec![Vec::new(); g.vertex_count()];
    for (i, e) in edges.iter().enumerate() {
        adjacency[e.x].push(i);
        adjacency[e.y].push(i);
    }
    Ok(CutTree {
        terminals: terminals.clone(),
        pi,
        edges,
        adjacency,
        maxflow_calls: calls,
    })
}

/// Groups reachable from `start` without passing through `blocked`.
fn subtree_groups(
    links: &[(usize, usize, ExtWeight)],
    group_count: usize,
    blocked: usize,
    start: usize,
) -> Vec<usize> {
    let mut seen = vec![false; group_count];
    seen[blocked] = true;
    seen[start] = true;
    let mut stack = vec![start];
    let mut out = Vec::new();
    while let Some(a) = stack.pop() {
        out.push(a);
        for &(x, y, _) in links {
            let b = if x == a {
                y
            } else if y == a {
                x
            } else {
                continue;
            };
            if !seen[b] {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    out
}
