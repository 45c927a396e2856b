use std::ops::RangeInclusive;

use crate::error::{HedgeError, Result};
use crate::graph::HedgeGraph;
use crate::rng::SplitMix64;

/// Ranges for random connected simple instances: a uniform random tree on
/// `n` vertices plus `extra` further edges, labelled surjectively with `L`
/// labels (or one label per edge when `one_edge_per_label`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorParams {
    pub vertices: RangeInclusive<usize>,
    pub extra_edges: RangeInclusive<usize>,
    pub labels: RangeInclusive<usize>,
    pub one_edge_per_label: bool,
    pub seed: u64,
}

impl Default for GeneratorParams {
    fn default() -> Self {
        Self {
            vertices: 3..=8,
            extra_edges: 0..=6,
            labels: 1..=5,
            one_edge_per_label: false,
            seed: 0,
        }
    }
}

fn infeasible(msg: String) -> HedgeError {
    HedgeError::InfeasibleParams(msg)
}

fn max_extra(n: usize) -> usize {
    (n - 1) * n.saturating_sub(2) / 2
}

fn parse_range(key: &str, value: &str) -> Result<RangeInclusive<usize>> {
    let num = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| infeasible(format!("bad value {value:?} for {key}")))
    };
    match value.split_once("..") {
        Some((lo, hi)) => Ok(num(lo)?..=num(hi.trim_start_matches('='))?),
        None => {
            let v = num(value)?;
            Ok(v..=v)
        }
    }
}

impl GeneratorParams {
    pub fn with_seed(&self, seed: u64) -> Self {
        Self { seed, ..self.clone() }
    }

    /// Overrides fields from a spec like `n=4..8,extra=0..5,L=2..4`.
    /// `m` is accepted for `extra` and `labels` for `L`; a bare `rainbow`
    /// token sets one label per edge. Values are `k`, `lo..hi` or `lo..=hi`,
    /// all inclusive.
    pub fn parse_spec(spec: &str, base: &GeneratorParams) -> Result<Self> {
        let mut p = base.clone();
        for part in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if part == "rainbow" {
                p.one_edge_per_label = true;
                continue;
            }
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| infeasible(format!("expected key=value, got {part:?}")))?;
            match key.trim() {
                "n" => p.vertices = parse_range(key, value)?,
                "extra" | "m" => p.extra_edges = parse_range(key, value)?,
                "L" | "labels" => p.labels = parse_range(key, value)?,
                "seed" => {
                    p.seed = value
                        .trim()
                        .parse()
                        .map_err(|_| infeasible(format!("bad seed {value:?}")))?
                }
                other => return Err(infeasible(format!("unknown parameter {other:?}"))),
            }
        }
        p.validate()?;
        Ok(p)
    }

    /// Every combination a generator may draw must be realizable; because
    /// the limits grow with `n`, checking the smallest values suffices.
    pub fn validate(&self) -> Result<()> {
        for (name, r) in [
            ("n", &self.vertices),
            ("extra", &self.extra_edges),
            ("L", &self.labels),
        ] {
            if r.start() > r.end() {
                return Err(infeasible(format!("empty range for {name}")));
            }
        }
        let n = *self.vertices.start();
        if n < 2 {
            return Err(infeasible("need at least 2 vertices".into()));
        }
        let extra = *self.extra_edges.start();
        if extra > max_extra(n) {
            return Err(infeasible(format!(
                "{extra} extra edges do not fit a simple graph on {n} vertices"
            )));
        }
        if !self.one_edge_per_label {
            let labels = *self.labels.start();
            if labels == 0 {
                return Err(infeasible("need at least 1 label".into()));
            }
            if labels > n - 1 + extra {
                return Err(infeasible(format!(
                    "{labels} labels cannot all be used on {} edges",
                    n - 1 + extra
                )));
            }
        }
        Ok(())
    }
}

/// Decodes a uniformly random Prüfer sequence into tree edges.
fn random_tree(n: usize, rng: &mut SplitMix64) -> Vec<(usize, usize)> {
    if n == 2 {
        return vec![(0, 1)];
    }
    let code: Vec<usize> = (0..n - 2).map(|_| rng.below(n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf.min(c), leaf.max(c)));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Draws one connected simple hedge graph; fully determined by `params`.
pub fn random_instance(params: &GeneratorParams) -> Result<HedgeGraph> {
    params.validate()?;
    let mut rng = SplitMix64::new(params.seed);
    let n = rng.between(*params.vertices.start(), *params.vertices.end());
    let extra_hi = (*params.extra_edges.end()).min(max_extra(n));
    let extra = rng.between(*params.extra_edges.start(), extra_hi);

    let mut edges = random_tree(n, &mut rng);
    let mut present = vec![false; n * n];
    for &(u, v) in &edges {
        present[u * n + v] = true;
    }
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !present[u * n + v])
        .collect();
    rng.shuffle(&mut missing);
    edges.extend_from_slice(&missing[..extra]);
    edges.sort_unstable();
    let m = edges.len();

    let labels: Vec<usize> = if params.one_edge_per_label {
        (0..m).collect()
    } else {
        let k = rng.between(*params.labels.start(), (*params.labels.end()).min(m));
        let mut labels: Vec<usize> = (0..m).map(|_| rng.below(k)).collect();
        surject(&mut labels, k);
        labels
    };
    HedgeGraph::build(
        n,
        edges
            .iter()
            .zip(&labels)
            .map(|(&(u, v), l)| (u, v, format!("h{l}"))),
    )
}

/// Makes every label in `0..k` appear: each missing label takes over the
/// last edge of the currently most frequent label (lowest id on ties).
fn surject(labels: &mut [usize], k: usize) {
    let mut count = vec![0usize; k];
    for &l in labels.iter() {
        count[l] += 1;
    }
    for missing in 0..k {
        if count[missing] > 0 {
            continue;
        }
        let donor = (0..k)
            .max_by_key(|&l| (count[l], std::cmp::Reverse(l)))
            .expect("k > 0");
        let at = labels.iter().rposition(|&l| l == donor).expect("donor used");
        labels[at] = missing;
        count[donor] -= 1;
        count[missing] += 1;
    }
}
