//! Edge and hedge contraction, same-label clean-up, and sequential
//! contraction traces.
//!
//! Contraction never cleans up on its own: parallel edges and loops of other
//! labels survive until [`cleanup`] is called explicitly. Merged vertices are
//! renumbered so that vertex ids stay ordered by their smallest original
//! vertex, which makes every result independent of the merge order.

use std::collections::HashSet;

use crate::error::{HedgeError, Result};
use crate::graph::{Edge, HedgeGraph, LabelId, Vertex};
use crate::union_find::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CleanupReport {
    pub merged_parallel: usize,
    pub merged_loops: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionStep {
    /// Name of the contracted hedge.
    pub label: String,
    /// Rank of the hedge in the graph current at this step.
    pub rank_consumed: usize,
    /// Nullity of the hedge in the graph current at this step.
    pub nullity_consumed: usize,
    /// Vertices before the step -> vertices after it.
    pub vertex_map: Vec<Vertex>,
    pub cleanup: Option<CleanupReport>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionTrace {
    pub steps: Vec<ContractionStep>,
    pub final_graph: HedgeGraph,
}

impl ContractionTrace {
    pub fn total_rank(&self) -> usize {
        self.steps.iter().map(|s| s.rank_consumed).sum()
    }

    pub fn total_nullity(&self) -> usize {
        self.steps.iter().map(|s| s.nullity_consumed).sum()
    }
}

/// Collapses each union-find class to one vertex, keeping the edges accepted
/// by `keep`. Returns the quotient graph and the old -> new vertex map.
fn quotient(
    g: &HedgeGraph,
    uf: &mut UnionFind,
    keep: impl Fn(usize, &Edge) -> bool,
) -> (HedgeGraph, Vec<Vertex>) {
    let n = g.vertex_count();
    let mut id_of_root = vec![usize::MAX; n];
    let mut map = vec![0; n];
    let mut origin: Vec<Vec<Vertex>> = Vec::new();
    for v in 0..n {
        let root = uf.find(v);
        if id_of_root[root] == usize::MAX {
            id_of_root[root] = origin.len();
            origin.push(Vec::new());
        }
        map[v] = id_of_root[root];
        origin[map[v]].extend_from_slice(g.origin(v));
    }
    for block in &mut origin {
        block.sort_unstable();
    }
    let edges = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(i, e)| keep(*i, e))
        .map(|(_, e)| (map[e.u], map[e.v], e.label));
    let out = HedgeGraph::assemble(origin.len(), edges, g.label_names(), origin);
    (out, map)
}

/// Contracts one non-loop edge, merging its endpoints. All other edges are
/// kept with remapped endpoints, so loops and parallel edges may appear.
/// Returns the new graph and the id of the merged vertex.
pub fn contract_edge(g: &HedgeGraph, edge: usize) -> Result<(HedgeGraph, Vertex)> {
    let e = g.edge(edge)?;
    if e.is_loop() {
        return Err(HedgeError::LoopContraction { edge });
    }
    let mut uf = UnionFind::new(g.vertex_count());
    uf.union(e.u, e.v);
    let (out, map) = quotient(g, &mut uf, |i, _| i != edge);
    Ok((out, map[e.u]))
}

/// `G / H`: every component of the hedge collapses to a single vertex and
/// every edge with the hedge's label (including loops) disappears. Loops of
/// other labels are kept.
pub fn contract_hedge(g: &HedgeGraph, label: LabelId) -> Result<HedgeGraph> {
    contract_hedge_mapped(g, label).map(|(out, _)| out)
}

/// [`contract_hedge`] that also returns the old -> new vertex map.
pub fn contract_hedge_mapped(g: &HedgeGraph, label: LabelId) -> Result<(HedgeGraph, Vec<Vertex>)> {
    g.check_label(label)?;
    let mut uf = UnionFind::new(g.vertex_count());
    for e in g.edges().iter().filter(|e| e.label == label) {
        uf.union(e.u, e.v);
    }
    Ok(quotient(g, &mut uf, |_, e| e.label != label))
}

/// Merges same-label parallel edges and same-label loops, keeping the first
/// occurrence of each. Edges with distinct labels are never merged.
pub fn cleanup(g: &HedgeGraph) -> (HedgeGraph, CleanupReport) {
    let mut seen = HashSet::new();
    let mut report = CleanupReport::default();
    let mut kept = Vec::with_capacity(g.edge_count());
    for e in g.edges() {
        if seen.insert((e.u.min(e.v), e.u.max(e.v), e.label)) {
            kept.push((e.u, e.v, e.label));
        } else if e.is_loop() {
            report.merged_loops += 1;
        } else {
            report.merged_parallel += 1;
        }
    }
    let out = HedgeGraph::assemble(g.vertex_count(), kept, g.label_names(), g.origin_owned());
    (out, report)
}

/// Contracts hedges one after another in `order`, a permutation of `g`'s
/// labels, recording each hedge's rank and nullity in the graph current at
/// its step. With `apply_cleanup` the graph is cleaned after every step.
pub fn contraction_sequence(
    g: &HedgeGraph,
    order: &[LabelId],
    apply_cleanup: bool,
) -> Result<ContractionTrace> {
    let mut seen = vec![false; g.label_count()];
    for &l in order {
        if l.0 >= seen.len() || seen[l.0] {
            return Err(HedgeError::NotAPermutation);
        }
        seen[l.0] = true;
    }
    if order.len() != g.label_count() {
        return Err(HedgeError::NotAPermutation);
    }

    let mut current = g.clone();
    let mut steps = Vec::with_capacity(order.len());
    for &l in order {
        let name = g.label_name(l).to_string();
        let here = current.require_label(&name)?;
        let view = current.hedge_view(here)?;
        let (next, vertex_map) = contract_hedge_mapped(&current, here)?;
        debug_assert_eq!(current.vertex_count() - next.vertex_count(), view.rank());
        let (next, report) = if apply_cleanup {
            let (cleaned, report) = cleanup(&next);
            (cleaned, Some(report))
        } else {
            (next, None)
        };
        steps.push(ContractionStep {
            label: name,
            rank_consumed: view.rank(),
            nullity_consumed: view.nullity(),
            vertex_map,
            cleanup: report,
        });
        current = next;
    }
    Ok(ContractionTrace {
        steps,
        final_graph: current,
    })
}
