use crate::adjacency::{HedgeAdjacencyGraph, Relabeling};
use crate::graph::LabelId;

/// A proper relabeling with the fewest labels, by exhaustive backtracking.
/// Exponential in the number of hedges; meant for small graphs.
pub fn optimal_relabel(adj: &HedgeAdjacencyGraph) -> Relabeling {
    let n = adj.label_count();
    // Highest degree first prunes earliest.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&l| (std::cmp::Reverse(adj.degree(LabelId(l))), l));
    let mut colors = vec![usize::MAX; n];
    for k in 1..=n {
        if extend(adj, &order, 0, k, 0, &mut colors) {
            return Relabeling::new(colors);
        }
    }
    Relabeling::new(colors)
}

fn extend(
    adj: &HedgeAdjacencyGraph,
    order: &[usize],
    at: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    let Some(&l) = order.get(at) else {
        return true;
    };
    // Colors are interchangeable, so a fresh one is only tried once.
    for c in 0..k.min(used + 1) {
        let clash = adj.neighbors(LabelId(l)).iter().any(|t| colors[t.0] == c);
        if clash {
            continue;
        }
        colors[l] = c;
        if extend(adj, order, at + 1, k, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[l] = usize::MAX;
    false
}
