//! The hedge graph value type and its per-vertex, per-hedge and whole-graph
//! metrics.
//!
//! A hedge graph is an undirected multigraph on dense vertex ids `0..n` where
//! every edge carries exactly one label. All edges sharing a label form a
//! *hedge*; hedges fail together. Graphs built from input are simple, while
//! graphs produced by contraction may contain loops and parallel edges.
//!
//! Label ids are dense and always numbered in order of first appearance in the
//! edge list. Operations that drop edges renumber labels to keep that
//! invariant, so label *names* are the stable identity across operations.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{HedgeError, Result};
use crate::union_find::UnionFind;

pub type Vertex = usize;

/// Dense id of a label (hedge) within one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelId(pub usize);

impl LabelId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for LabelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
    pub label: LabelId,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn touches(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

/// How loops contribute to label degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum LoopConvention {
    /// A loop at `v` contributes its label to `d_L(v)` once.
    #[default]
    CountOnce,
    /// Loops are invisible to label degree.
    Ignore,
}

/// Which graph a vertex's label degree is measured in when summarising a hedge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum HedgeDegreeMode {
    /// Label degree in the whole graph.
    #[default]
    Global,
    /// Label degree in the subgraph induced by the hedge's vertex set.
    Induced,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeSummary {
    pub min: usize,
    pub max: usize,
    pub total: usize,
}

impl DegreeSummary {
    fn of(values: impl IntoIterator<Item = usize>) -> Self {
        let mut it = values.into_iter();
        let first = it.next().unwrap_or(0);
        it.fold(
            DegreeSummary {
                min: first,
                max: first,
                total: first,
            },
            |acc, d| DegreeSummary {
                min: acc.min.min(d),
                max: acc.max.max(d),
                total: acc.total + d,
            },
        )
    }
}

/// One hedge: the edges carrying a label, the vertices they touch, and the
/// connected components those edges induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HedgeView {
    pub label: LabelId,
    /// Indices into the graph's edge list.
    pub edges: Vec<usize>,
    /// `V(H)`, ascending.
    pub vertices: Vec<Vertex>,
    /// Components of `V(H)` under the hedge's edges, each ascending, ordered
    /// by minimum vertex id.
    pub components: Vec<Vec<Vertex>>,
}

impl HedgeView {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn span(&self) -> usize {
        self.components.len()
    }

    pub fn rank(&self) -> usize {
        self.vertices.len() - self.span()
    }

    pub fn nullity(&self) -> usize {
        self.size() - self.rank()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HedgeGraph {
    n: usize,
    edges: Vec<Edge>,
    names: Vec<String>,
    origin: Vec<Vec<Vertex>>,
}

fn valid_label(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(char::is_whitespace)
}

impl HedgeGraph {
    /// Builds a simple hedge graph from `(u, v, label)` triples.
    ///
    /// Labels are interned in first-appearance order. Loops, repeated vertex
    /// pairs and an empty edge list on two or more vertices are rejected.
    /// Disconnected input is accepted.
    pub fn build<I, S>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, S)>,
        S: AsRef<str>,
    {
        Self::build_inner(n, edges, true)
    }

    /// Like [`HedgeGraph::build`] but accepts loops, parallel edges and an
    /// empty edge list, as produced by contraction and hedge removal.
    pub fn build_multigraph<I, S>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, S)>,
        S: AsRef<str>,
    {
        Self::build_inner(n, edges, false)
    }

    fn build_inner<I, S>(n: usize, edges: I, simple: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex, S)>,
        S: AsRef<str>,
    {
        if n == 0 {
            return Err(HedgeError::NoVertices);
        }
        let mut names: Vec<String> = Vec::new();
        let mut ids: HashMap<String, LabelId> = HashMap::new();
        let mut pairs: HashMap<(Vertex, Vertex), usize> = HashMap::new();
        let mut out = Vec::new();
        for (i, (u, v, label)) in edges.into_iter().enumerate() {
            let label = label.as_ref();
            for x in [u, v] {
                if x >= n {
                    return Err(HedgeError::VertexOutOfRange {
                        edge: i,
                        vertex: x,
                        n,
                    });
                }
            }
            if !valid_label(label) {
                return Err(HedgeError::InvalidLabel {
                    edge: i,
                    label: label.to_string(),
                });
            }
            if simple {
                if u == v {
                    return Err(HedgeError::SelfLoop { edge: i, vertex: u });
                }
                if let Some(&first) = pairs.get(&(u.min(v), u.max(v))) {
                    return Err(HedgeError::DuplicateEdge { edge: i, first, u, v });
                }
                pairs.insert((u.min(v), u.max(v)), i);
            }
            let id = *ids.entry(label.to_string()).or_insert_with(|| {
                names.push(label.to_string());
                LabelId(names.len() - 1)
            });
            out.push(Edge { u, v, label: id });
        }
        if simple && out.is_empty() && n >= 2 {
            return Err(HedgeError::EmptyEdgeList { n });
        }
        Ok(Self {
            n,
            edges: out,
            names,
            origin: (0..n).map(|v| vec![v]).collect(),
        })
    }

    /// Assembles a graph from edges labelled with ids of `old_names`,
    /// re-interning labels in first-appearance order and dropping unused ones.
    pub(crate) fn assemble(
        n: usize,
        edges: impl IntoIterator<Item = (Vertex, Vertex, LabelId)>,
        old_names: &[String],
        origin: Vec<Vec<Vertex>>,
    ) -> Self {
        let mut remap: Vec<Option<LabelId>> = vec![None; old_names.len()];
        let mut names = Vec::new();
        let edges = edges
            .into_iter()
            .map(|(u, v, old)| {
                let id = *remap[old.0].get_or_insert_with(|| {
                    names.push(old_names[old.0].clone());
                    LabelId(names.len() - 1)
                });
                Edge { u, v, label: id }
            })
            .collect();
        debug_assert_eq!(origin.len(), n);
        Self {
            n,
            edges,
            names,
            origin,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn label_count(&self) -> usize {
        self.names.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<Edge> {
        self.edges.get(index).copied().ok_or(HedgeError::EdgeOutOfRange {
            edge: index,
            m: self.edges.len(),
        })
    }

    pub fn labels(&self) -> impl Iterator<Item = LabelId> + '_ {
        (0..self.names.len()).map(LabelId)
    }

    pub fn label_names(&self) -> &[String] {
        &self.names
    }

    /// # Panics
    /// If `label` is not a label of this graph.
    pub fn label_name(&self, label: LabelId) -> &str {
        &self.names[label.0]
    }

    pub fn label_id(&self, name: &str) -> Option<LabelId> {
        self.names.iter().position(|n| n == name).map(LabelId)
    }

    pub fn require_label(&self, name: &str) -> Result<LabelId> {
        self.label_id(name)
            .ok_or_else(|| HedgeError::UnknownLabel(name.to_string()))
    }

    pub(crate) fn check_label(&self, label: LabelId) -> Result<()> {
        if label.0 < self.names.len() {
            Ok(())
        } else {
            Err(HedgeError::UnknownLabel(label.to_string()))
        }
    }

    /// Original vertex ids merged into `v`.
    pub fn origin(&self, v: Vertex) -> &[Vertex] {
        &self.origin[v]
    }

    pub fn origin_map(&self) -> &[Vec<Vertex>] {
        &self.origin
    }

    pub(crate) fn origin_owned(&self) -> Vec<Vec<Vertex>> {
        self.origin.clone()
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|e| !e.is_loop() && seen.insert((e.u.min(e.v), e.u.max(e.v))))
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(Edge::is_loop)
    }

    /// Connected components (loops ignored), each ascending, ordered by
    /// minimum vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        group_by_root(&mut uf, 0..self.n)
    }

    /// Number of connected components, isolated vertices included.
    pub fn span(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        uf.sets()
    }

    pub fn is_connected(&self) -> bool {
        self.span() == 1
    }

    /// Connectivity after deleting every edge whose label is flagged in
    /// `removed` (indexed by label id).
    pub(crate) fn connected_without(&self, removed: &[bool]) -> bool {
        let mut uf = UnionFind::new(self.n);
        for e in &self.edges {
            if !removed[e.label.0] {
                uf.union(e.u, e.v);
            }
        }
        uf.sets() == 1
    }

    /// `(rank, nullity)` of the whole graph, labels ignored.
    pub fn rank_nullity(&self) -> (usize, usize) {
        let rank = self.n - self.span();
        (rank, self.edges.len() - rank)
    }

    pub fn hedge_view(&self, label: LabelId) -> Result<HedgeView> {
        self.check_label(label)?;
        let edges: Vec<usize> = (0..self.edges.len())
            .filter(|&i| self.edges[i].label == label)
            .collect();
        let vertices: Vec<Vertex> = edges
            .iter()
            .flat_map(|&i| [self.edges[i].u, self.edges[i].v])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let mut uf = UnionFind::new(self.n);
        for &i in &edges {
            uf.union(self.edges[i].u, self.edges[i].v);
        }
        let components = group_by_root(&mut uf, vertices.iter().copied());
        Ok(HedgeView {
            label,
            edges,
            vertices,
            components,
        })
    }

    pub fn hedge_views(&self) -> Vec<HedgeView> {
        self.labels()
            .map(|l| self.hedge_view(l).expect("own label"))
            .collect()
    }

    /// `V(H)` for every hedge, indexed by label id.
    pub fn hedge_vertex_sets(&self) -> Vec<Vec<Vertex>> {
        let mut sets: Vec<BTreeSet<Vertex>> = vec![BTreeSet::new(); self.names.len()];
        for e in &self.edges {
            sets[e.label.0].insert(e.u);
            sets[e.label.0].insert(e.v);
        }
        sets.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// Distinct labels on edges incident to each vertex, ascending.
    pub fn incident_labels_with(&self, loops: LoopConvention) -> Vec<Vec<LabelId>> {
        let mut sets: Vec<BTreeSet<LabelId>> = vec![BTreeSet::new(); self.n];
        for e in &self.edges {
            if e.is_loop() && loops == LoopConvention::Ignore {
                continue;
            }
            sets[e.u].insert(e.label);
            sets[e.v].insert(e.label);
        }
        sets.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    pub fn incident_labels(&self, v: Vertex) -> Result<Vec<LabelId>> {
        self.check_vertex(v)?;
        let set: BTreeSet<LabelId> = self
            .edges
            .iter()
            .filter(|e| e.touches(v))
            .map(|e| e.label)
            .collect();
        Ok(set.into_iter().collect())
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(HedgeError::UnknownVertex { vertex: v, n: self.n })
        }
    }

    /// `d_L(v)`: the number of distinct labels on edges incident to `v`.
    /// A loop contributes its label once.
    pub fn label_degree(&self, v: Vertex) -> Result<usize> {
        Ok(self.incident_labels(v)?.len())
    }

    pub fn label_degrees(&self) -> Vec<usize> {
        self.label_degrees_with(LoopConvention::CountOnce)
    }

    pub fn label_degrees_with(&self, loops: LoopConvention) -> Vec<usize> {
        self.incident_labels_with(loops).iter().map(Vec::len).collect()
    }

    /// `(δ_L, Δ_L, Σ_v d_L(v))` over all vertices.
    pub fn degree_summary(&self) -> DegreeSummary {
        self.degree_summary_with(LoopConvention::CountOnce)
    }

    pub fn degree_summary_with(&self, loops: LoopConvention) -> DegreeSummary {
        DegreeSummary::of(self.label_degrees_with(loops))
    }

    /// Minimum, maximum and total label degree over `V(H)`, measured in the
    /// whole graph.
    pub fn hedge_degree_summary(&self, label: LabelId) -> Result<DegreeSummary> {
        self.hedge_degree_summary_with(label, HedgeDegreeMode::Global, LoopConvention::CountOnce)
    }

    pub fn hedge_degree_summary_with(
        &self,
        label: LabelId,
        mode: HedgeDegreeMode,
        loops: LoopConvention,
    ) -> Result<DegreeSummary> {
        let view = self.hedge_view(label)?;
        let degrees = match mode {
            HedgeDegreeMode::Global => self.label_degrees_with(loops),
            HedgeDegreeMode::Induced => {
                let mut inside = vec![false; self.n];
                for &v in &view.vertices {
                    inside[v] = true;
                }
                let kept = self
                    .edges
                    .iter()
                    .filter(|e| inside[e.u] && inside[e.v])
                    .map(|e| (e.u, e.v, e.label));
                HedgeGraph::assemble(self.n, kept, &self.names, self.origin.clone()).label_degrees_with(loops)
            }
        };
        Ok(DegreeSummary::of(view.vertices.iter().map(|&v| degrees[v])))
    }

    /// Deletes every edge carrying one of `labels`. Vertices are kept, so the
    /// result may have isolated vertices.
    pub fn remove_hedges(&self, labels: &[LabelId]) -> Result<HedgeGraph> {
        let mut removed = vec![false; self.names.len()];
        for &l in labels {
            self.check_label(l)?;
            removed[l.0] = true;
        }
        let kept = self
            .edges
            .iter()
            .filter(|e| !removed[e.label.0])
            .map(|e| (e.u, e.v, e.label));
        Ok(HedgeGraph::assemble(
            self.n,
            kept,
            &self.names,
            self.origin.clone(),
        ))
    }
}

/// Groups `vertices` by union-find root. Groups are ordered by their first
/// (smallest, when `vertices` ascends) member.
pub(crate) fn group_by_root(
    uf: &mut UnionFind,
    vertices: impl IntoIterator<Item = Vertex>,
) -> Vec<Vec<Vertex>> {
    let mut slot: HashMap<usize, usize> = HashMap::new();
    let mut groups: Vec<Vec<Vertex>> = Vec::new();
    for v in vertices {
        let root = uf.find(v);
        let idx = *slot.entry(root).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[idx].push(v);
    }
    groups
}
