//! Global hedge connectivity `λ_H`: the fewest hedges whose removal
//! disconnects the graph.
//!
//! Every answer comes as a [`CutCertificate`] that can be re-checked against
//! the graph. Exact answers come from brute-force enumeration or from one of
//! the polynomial special cases; the randomized hedge-contraction routine
//! gives an upper bound that is exact with high probability.

use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{HedgeError, Result};
use crate::graph::{HedgeGraph, LabelId, Vertex};
use crate::rng::{mix, SplitMix64};
use crate::union_find::UnionFind;

pub const DEFAULT_CAP: usize = 20;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FastPath {
    Disconnected,
    SingleLabel,
    PendantVertex,
    EdgeConnectivity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutMethod {
    Brute,
    Randomized,
    FastPath(FastPath),
    /// All hedges at a vertex of minimum label degree.
    DegreeBound,
}

impl fmt::Display for CutMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CutMethod::Brute => f.write_str("brute"),
            CutMethod::Randomized => f.write_str("randomized"),
            CutMethod::DegreeBound => f.write_str("degree-bound"),
            CutMethod::FastPath(p) => {
                let name = match p {
                    FastPath::Disconnected => "disconnected",
                    FastPath::SingleLabel => "single-label",
                    FastPath::PendantVertex => "pendant-vertex",
                    FastPath::EdgeConnectivity => "edge-connectivity",
                };
                write!(f, "fastpath:{name}")
            }
        }
    }
}

/// A label set whose removal leaves `side_a` and `side_b` with no edge
/// between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutCertificate {
    /// Ascending.
    pub labels: Vec<LabelId>,
    pub side_a: Vec<Vertex>,
    pub side_b: Vec<Vertex>,
    pub method: CutMethod,
    pub exact: bool,
}

impl CutCertificate {
    /// The number of hedges cut.
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label_names<'g>(&self, g: &'g HedgeGraph) -> Vec<&'g str> {
        self.labels.iter().map(|&l| g.label_name(l)).collect()
    }

    /// Re-checks the certificate: the sides partition the vertices, both are
    /// nonempty, no surviving edge crosses, and removing the labels really
    /// leaves the graph disconnected.
    pub fn is_valid(&self, g: &HedgeGraph) -> bool {
        let n = g.vertex_count();
        let mut side = vec![None; n];
        let a = self.side_a.iter().map(|&v| (v, 0u8));
        let b = self.side_b.iter().map(|&v| (v, 1u8));
        for (v, s) in a.chain(b) {
            if v >= n || side[v].is_some() {
                return false;
            }
            side[v] = Some(s);
        }
        if side.iter().any(Option::is_none) || self.side_a.is_empty() || self.side_b.is_empty() {
            return false;
        }
        if self.labels.iter().any(|l| l.0 >= g.label_count()) {
            return false;
        }
        let crossing = g
            .edges()
            .iter()
            .any(|e| side[e.u] != side[e.v] && self.labels.binary_search(&e.label).is_err());
        if crossing {
            return false;
        }
        g.remove_hedges(&self.labels)
            .map(|h| !h.is_connected())
            .unwrap_or(false)
    }
}

fn removal_mask(g: &HedgeGraph, labels: &[LabelId]) -> Vec<bool> {
    let mut removed = vec![false; g.label_count()];
    for l in labels {
        removed[l.0] = true;
    }
    removed
}

/// Builds a certificate for `labels`, taking `side_a` to be the component of
/// vertex 0 once those labels are removed. The caller guarantees removal
/// disconnects the graph.
fn certify(g: &HedgeGraph, mut labels: Vec<LabelId>, method: CutMethod, exact: bool) -> CutCertificate {
    labels.sort_unstable();
    labels.dedup();
    let removed = removal_mask(g, &labels);
    let mut uf = UnionFind::new(g.vertex_count());
    for e in g.edges() {
        if !removed[e.label.0] {
            uf.union(e.u, e.v);
        }
    }
    let (side_a, side_b) = (0..g.vertex_count()).partition(|&v| uf.same(v, 0));
    CutCertificate {
        labels,
        side_a,
        side_b,
        method,
        exact,
    }
}

fn need_two_vertices(g: &HedgeGraph) -> Result<()> {
    if g.vertex_count() < 2 {
        return Err(HedgeError::TooFewVertices {
            needed: 2,
            n: g.vertex_count(),
        });
    }
    Ok(())
}

/// `δ_L`, with the hedges at a vertex of minimum label degree as a (not
/// necessarily minimum) cut certificate.
pub fn min_label_degree_bound(g: &HedgeGraph) -> Result<(usize, CutCertificate)> {
    need_two_vertices(g)?;
    let at_v = g.incident_labels_with(Default::default());
    let (v, labels) = at_v
        .iter()
        .enumerate()
        .min_by_key(|(_, ls)| ls.len())
        .expect("n >= 2");
    let cert = certify(g, labels.clone(), CutMethod::DegreeBound, false);
    debug_assert!(cert.side_a.contains(&v) != cert.side_b.contains(&v));
    Ok((labels.len(), cert))
}

/// Exact `λ_H` by enumerating label subsets by increasing size and, within a
/// size, lexicographically. The search stops at size `δ_L`, which always
/// disconnects. Disconnected graphs yield an empty cut.
pub fn brute_force_connectivity(g: &HedgeGraph, cap: usize) -> Result<CutCertificate> {
    need_two_vertices(g)?;
    if !g.is_connected() {
        return Ok(certify(g, Vec::new(), CutMethod::Brute, true));
    }
    if g.label_count() > cap {
        return Err(HedgeError::LabelCapExceeded {
            labels: g.label_count(),
            cap,
        });
    }
    let (bound, fallback) = min_label_degree_bound(g)?;
    let mut removed = vec![false; g.label_count()];
    for k in 1..=bound {
        for subset in (0..g.label_count()).combinations(k) {
            subset.iter().for_each(|&l| removed[l] = true);
            let cut = !g.connected_without(&removed);
            subset.iter().for_each(|&l| removed[l] = false);
            if cut {
                let labels = subset.into_iter().map(LabelId).collect();
                return Ok(certify(g, labels, CutMethod::Brute, true));
            }
        }
    }
    // Unreachable for connected graphs: the hedges at a minimum-degree
    // vertex always disconnect.
    Ok(CutCertificate {
        method: CutMethod::Brute,
        exact: true,
        ..fallback
    })
}

/// One randomized hedge-contraction trial.
///
/// Repeatedly picks, uniformly among the hedges whose contraction would
/// still leave at least two vertices, one hedge and contracts it. Stops at
/// two vertices or when no such hedge is left, then cuts every hedge that
/// still has an edge between distinct super-vertices.
pub fn randomized_contraction_cut(g: &HedgeGraph, seed: u64) -> Result<CutCertificate> {
    need_two_vertices(g)?;
    if !g.is_connected() {
        return Ok(certify(g, Vec::new(), CutMethod::Randomized, true));
    }
    let labels = g.label_count();
    let mut by_label: Vec<Vec<(Vertex, Vertex)>> = vec![Vec::new(); labels];
    for e in g.edges() {
        by_label[e.label.0].push((e.u, e.v));
    }
    let mut rng = SplitMix64::new(seed);
    let mut uf = UnionFind::new(g.vertex_count());
    let mut contracted = vec![false; labels];
    let mut candidates = Vec::with_capacity(labels);
    while uf.sets() > 2 {
        candidates.clear();
        for l in (0..labels).filter(|&l| !contracted[l]) {
            let mut trial = uf.clone();
            let merges = by_label[l].iter().filter(|&&(u, v)| trial.union(u, v)).count();
            if merges > 0 && uf.sets() - merges >= 2 {
                candidates.push(l);
            }
        }
        if candidates.is_empty() {
            break;
        }
        let pick = candidates[rng.below(candidates.len())];
        for &(u, v) in &by_label[pick] {
            uf.union(u, v);
        }
        contracted[pick] = true;
    }
    let cut: Vec<LabelId> = (0..labels)
        .filter(|&l| by_label[l].iter().any(|&(u, v)| !uf.same(u, v)))
        .map(LabelId)
        .collect();
    Ok(certify(g, cut, CutMethod::Randomized, false))
}

/// `|L|² · (⌊log₂ |L|⌋ + 1)`.
pub fn default_trials(labels: usize) -> usize {
    if labels == 0 {
        return 1;
    }
    labels * labels * (labels.ilog2() as usize + 1)
}

/// Best of `trials` independent contraction trials; trial `t` is seeded with
/// `mix(base_seed, t)`. Ties go to the lowest trial index, so the result does
/// not depend on execution order.
pub fn randomized_connectivity(g: &HedgeGraph, trials: usize, base_seed: u64) -> Result<CutCertificate> {
    if trials == 0 {
        return Err(HedgeError::NoTrials);
    }
    need_two_vertices(g)?;
    (0..trials)
        .into_par_iter()
        .map(|t| randomized_contraction_cut(g, mix(base_seed, t as u64)).map(|c| (c.size(), t, c)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .min_by_key(|(size, t, _)| (*size, *t))
        .map(|(_, _, c)| c)
        .ok_or(HedgeError::NoTrials)
}

/// Global minimum edge cut with a dense Stoer-Wagner scheme. Returns the cut
/// weight and one shore.
fn stoer_wagner(n: usize, mut w: Vec<Vec<u64>>) -> (u64, Vec<Vertex>) {
    let mut groups: Vec<Vec<Vertex>> = (0..n).map(|v| vec![v]).collect();
    let mut active: Vec<Vertex> = (0..n).collect();
    let mut best = (u64::MAX, Vec::new());
    while active.len() > 1 {
        let mut attach = vec![0u64; n];
        let mut added = vec![false; n];
        let mut prev = active[0];
        for step in 0..active.len() {
            let sel = *active
                .iter()
                .filter(|&&v| !added[v])
                .max_by_key(|&&v| (attach[v], std::cmp::Reverse(v)))
                .expect("unadded vertex left");
            added[sel] = true;
            if step == active.len() - 1 {
                if attach[sel] < best.0 {
                    best = (attach[sel], groups[sel].clone());
                }
                let moved = std::mem::take(&mut groups[sel]);
                groups[prev].extend(moved);
                for &x in &active {
                    w[prev][x] += w[sel][x];
                    w[x][prev] = w[prev][x];
                }
                w[prev][prev] = 0;
                active.retain(|&v| v != sel);
            } else {
                prev = sel;
                for &x in &active {
                    attach[x] += w[sel][x];
                }
            }
        }
    }
    best.1.sort_unstable();
    best
}

/// Exact `λ_H` when every hedge is a single edge: plain edge connectivity.
pub fn ordinary_edge_min_cut(g: &HedgeGraph) -> Result<CutCertificate> {
    need_two_vertices(g)?;
    let mut sizes = vec![0usize; g.label_count()];
    for e in g.edges() {
        sizes[e.label.0] += 1;
    }
    if let Some(l) = sizes.iter().position(|&s| s != 1) {
        return Err(HedgeError::NotOneEdgePerLabel {
            label: g.label_name(LabelId(l)).to_string(),
            edges: sizes[l],
        });
    }
    let method = CutMethod::FastPath(FastPath::EdgeConnectivity);
    if !g.is_connected() {
        return Ok(certify(g, Vec::new(), method, true));
    }
    let n = g.vertex_count();
    let mut w = vec![vec![0u64; n]; n];
    for e in g.edges().iter().filter(|e| !e.is_loop()) {
        w[e.u][e.v] += 1;
        w[e.v][e.u] += 1;
    }
    let (_, shore) = stoer_wagner(n, w);
    let mut inside = vec![false; n];
    shore.iter().for_each(|&v| inside[v] = true);
    let labels = g
        .edges()
        .iter()
        .filter(|e| inside[e.u] != inside[e.v])
        .map(|e| e.label)
        .collect();
    Ok(certify(g, labels, method, true))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    #[default]
    Auto,
    Brute,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Policy {
    pub method: Method,
    pub cap: usize,
    /// `None` means [`default_trials`].
    pub trials: Option<usize>,
    pub seed: u64,
}

impl Default for Policy {
    fn default() -> Self {
        Self {
            method: Method::Auto,
            cap: DEFAULT_CAP,
            trials: None,
            seed: DEFAULT_SEED,
        }
    }
}

/// `λ_H` with special cases checked first: disconnected (0), a single label
/// (1), a vertex of label degree 1 (1), one edge per label (edge
/// connectivity), few labels (brute force), and otherwise randomized
/// contraction with `exact = false`.
pub fn hedge_connectivity(g: &HedgeGraph, policy: &Policy) -> Result<CutCertificate> {
    need_two_vertices(g)?;
    let trials = policy.trials.unwrap_or_else(|| default_trials(g.label_count()));
    match policy.method {
        Method::Brute => return brute_force_connectivity(g, policy.cap),
        Method::Random => return randomized_connectivity(g, trials, policy.seed),
        Method::Auto => {}
    }
    if !g.is_connected() {
        return Ok(certify(
            g,
            Vec::new(),
            CutMethod::FastPath(FastPath::Disconnected),
            true,
        ));
    }
    if g.label_count() == 1 {
        return Ok(certify(
            g,
            vec![LabelId(0)],
            CutMethod::FastPath(FastPath::SingleLabel),
            true,
        ));
    }
    let at_v = g.incident_labels_with(Default::default());
    if let Some(ls) = at_v.iter().find(|ls| ls.len() == 1) {
        return Ok(certify(
            g,
            ls.clone(),
            CutMethod::FastPath(FastPath::PendantVertex),
            true,
        ));
    }
    if g.label_count() == g.edge_count() {
        return ordinary_edge_min_cut(g);
    }
    if g.label_count() <= policy.cap {
        return brute_force_connectivity(g, policy.cap);
    }
    randomized_connectivity(g, trials, policy.seed)
}
