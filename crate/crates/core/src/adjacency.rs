//! Hedge adjacency: which hedges share a vertex, the component-wise
//! adjacency matrix, and greedy relabeling of hedges so that adjacent hedges
//! get distinct new labels.

use crate::error::{HedgeError, Result};
use crate::graph::{HedgeGraph, LabelId};
use crate::rng::SplitMix64;

/// Simple graph on label ids; `r ~ t` iff `V(H_r) ∩ V(H_t) ≠ ∅`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HedgeAdjacencyGraph {
    neighbors: Vec<Vec<LabelId>>,
}

impl HedgeAdjacencyGraph {
    pub fn from_neighbors(neighbors: Vec<Vec<LabelId>>) -> Self {
        Self { neighbors }
    }

    pub fn label_count(&self) -> usize {
        self.neighbors.len()
    }

    /// Neighbors of `label`, ascending.
    pub fn neighbors(&self, label: LabelId) -> &[LabelId] {
        &self.neighbors[label.0]
    }

    pub fn degree(&self, label: LabelId) -> usize {
        self.neighbors[label.0].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.neighbors.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.neighbors.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn are_adjacent(&self, r: LabelId, t: LabelId) -> bool {
        self.neighbors[r.0].binary_search(&t).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Each edge once, as `(r, t)` with `r < t`, lexicographic.
    pub fn edges(&self) -> Vec<(LabelId, LabelId)> {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(r, ns)| ns.iter().filter(move |t| t.0 > r).map(move |&t| (LabelId(r), t)))
            .collect()
    }
}

/// A proper coloring of the hedge adjacency graph: `color(l) < q` and
/// adjacent hedges never share a color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    colors: Vec<usize>,
    q: usize,
}

impl Relabeling {
    pub fn new(colors: Vec<usize>) -> Self {
        let q = colors.iter().map(|c| c + 1).max().unwrap_or(0);
        Self { colors, q }
    }

    pub fn color(&self, label: LabelId) -> usize {
        self.colors[label.0]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// `|L'|`, the number of new labels used.
    pub fn q(&self) -> usize {
        self.q
    }

    pub fn is_proper(&self, adj: &HedgeAdjacencyGraph) -> bool {
        self.colors.len() == adj.label_count()
            && adj
                .edges()
                .iter()
                .all(|&(r, t)| self.colors[r.0] != self.colors[t.0])
    }
}

/// `M`, square of order `S = max span`. Entry `(i, j)` is set iff the `i`-th
/// component of the first hedge meets the `j`-th component of the second.
/// Components are indexed by ascending minimum vertex; rows and columns past
/// a hedge's span are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentMatrix {
    order: usize,
    cells: Vec<bool>,
}

impl ComponentMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.cells[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<bool>> {
        self.cells
            .chunks(self.order.max(1))
            .take(self.order)
            .map(<[bool]>::to_vec)
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        !self.cells.iter().any(|&c| c)
    }
}

fn distinct_pair(g: &HedgeGraph, r: LabelId, t: LabelId) -> Result<()> {
    g.check_label(r)?;
    g.check_label(t)?;
    if r == t {
        return Err(HedgeError::SameLabel);
    }
    Ok(())
}

pub fn hedges_adjacent(g: &HedgeGraph, r: LabelId, t: LabelId) -> Result<bool> {
    distinct_pair(g, r, t)?;
    let sets = g.hedge_vertex_sets();
    let (a, b) = (&sets[r.0], &sets[t.0]);
    Ok(a.iter().any(|v| b.binary_search(v).is_ok()))
}

pub fn component_adjacency_matrix(g: &HedgeGraph, r: LabelId, t: LabelId) -> Result<ComponentMatrix> {
    distinct_pair(g, r, t)?;
    let order = g.hedge_views().iter().map(|h| h.span()).max().unwrap_or(0);
    let hr = g.hedge_view(r)?;
    let ht = g.hedge_view(t)?;
    let mut cells = vec![false; order * order];
    for (i, ci) in hr.components.iter().enumerate() {
        for (j, cj) in ht.components.iter().enumerate() {
            cells[i * order + j] = ci.iter().any(|v| cj.binary_search(v).is_ok());
        }
    }
    Ok(ComponentMatrix { order, cells })
}

/// Builds `G_A` with one bitset row per hedge: each vertex ORs its label set
/// into the row of every label it carries, `O(Σ|V(H)| · ⌈|L|/64⌉)`.
pub fn adjacency_graph(g: &HedgeGraph) -> HedgeAdjacencyGraph {
    let labels = g.label_count();
    let words = labels.div_ceil(64);
    let mut rows = vec![0u64; labels * words];
    let mut mask = vec![0u64; words];
    for at_v in g.incident_labels_with(Default::default()) {
        mask.iter_mut().for_each(|w| *w = 0);
        for l in &at_v {
            mask[l.0 / 64] |= 1 << (l.0 % 64);
        }
        for l in &at_v {
            let row = &mut rows[l.0 * words..(l.0 + 1) * words];
            row.iter_mut().zip(&mask).for_each(|(r, m)| *r |= m);
        }
    }
    let neighbors = (0..labels)
        .map(|r| {
            (0..labels)
                .filter(|&t| t != r && rows[r * words + t / 64] & (1 << (t % 64)) != 0)
                .map(LabelId)
                .collect()
        })
        .collect();
    HedgeAdjacencyGraph { neighbors }
}

/// `d_A(H)`: how many other hedges share a vertex with `label`.
pub fn adjacency_degree(g: &HedgeGraph, label: LabelId) -> Result<usize> {
    g.check_label(label)?;
    Ok(adjacency_graph(g).degree(label))
}

pub fn max_adjacency_degree(g: &HedgeGraph) -> usize {
    adjacency_graph(g).max_degree()
}

/// Colors hedges in `order`, giving each the smallest color not used by an
/// already-colored neighbor.
pub fn greedy_relabel_in_order(adj: &HedgeAdjacencyGraph, order: &[LabelId]) -> Relabeling {
    let mut colors: Vec<Option<usize>> = vec![None; adj.label_count()];
    let mut taken = Vec::new();
    for &l in order {
        taken.clear();
        taken.resize(adj.degree(l) + 1, false);
        for n in adj.neighbors(l) {
            if let Some(c) = colors[n.0] {
                if c < taken.len() {
                    taken[c] = true;
                }
            }
        }
        colors[l.0] = taken.iter().position(|&t| !t);
    }
    Relabeling::new(
        colors
            .into_iter()
            .map(|c| c.expect("order covers every label"))
            .collect(),
    )
}

/// Greedy relabeling in decreasing `d_A` order, ties by ascending label id.
/// Uses at most `max d_A + 1` colors.
pub fn greedy_relabel(g: &HedgeGraph) -> Relabeling {
    let adj = adjacency_graph(g);
    let mut order: Vec<LabelId> = g.labels().collect();
    order.sort_by_key(|&l| (std::cmp::Reverse(adj.degree(l)), l));
    greedy_relabel_in_order(&adj, &order)
}

/// Greedy relabeling in a seeded random order.
pub fn greedy_relabel_shuffled(g: &HedgeGraph, seed: u64) -> Relabeling {
    let adj = adjacency_graph(g);
    let mut order: Vec<LabelId> = g.labels().collect();
    SplitMix64::new(seed).shuffle(&mut order);
    greedy_relabel_in_order(&adj, &order)
}
