// Independent reference computations for the integration tests. Nothing
// here calls into the library except to read a graph's edge list.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::path::PathBuf;

use hedgecut::HedgeGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inst {
    pub n: usize,
    /// `(u, v, label)` with labels numbered by first appearance.
    pub edges: Vec<(usize, usize, usize)>,
    pub labels: usize,
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

impl Inst {
    pub fn of(g: &HedgeGraph) -> Self {
        Self::from_named(
            g.vertex_count(),
            g.edges()
                .iter()
                .map(|e| (e.u, e.v, g.label_name(e.label).to_string())),
        )
    }

    fn from_named(n: usize, edges: impl IntoIterator<Item = (usize, usize, String)>) -> Self {
        let mut ids: HashMap<String, usize> = HashMap::new();
        let edges = edges
            .into_iter()
            .map(|(u, v, name)| {
                let next = ids.len();
                (u, v, *ids.entry(name).or_insert(next))
            })
            .collect();
        Self {
            n,
            edges,
            labels: ids.len(),
        }
    }

    /// This instance's number for the label `name` of `g`, which must be
    /// the graph it was built from.
    pub fn labels_named(&self, g: &HedgeGraph, name: &str) -> usize {
        let i = g
            .edges()
            .iter()
            .position(|e| g.label_name(e.label) == name)
            .unwrap();
        self.edges[i].2
    }

    /// Minimal reader: header, then `u v label` lines; `#` comments.
    pub fn parse(text: &str) -> Self {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        let header: Vec<&str> = lines.next().unwrap().split_whitespace().collect();
        assert_eq!(header[0], "HG1");
        let n = header[1].parse().unwrap();
        let edges: Vec<(usize, usize, String)> = lines
            .map(|l| {
                let t: Vec<&str> = l.split_whitespace().collect();
                (t[0].parse().unwrap(), t[1].parse().unwrap(), t[2].to_string())
            })
            .collect();
        assert_eq!(edges.len(), header[2].parse::<usize>().unwrap());
        Self::from_named(n, edges)
    }

    fn dsu(&self, keep: impl Fn(usize) -> bool) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        for (i, &(u, v, _)) in self.edges.iter().enumerate() {
            if keep(i) {
                let (a, b) = (root(&mut parent, u), root(&mut parent, v));
                parent[a] = b;
            }
        }
        (0..self.n).map(|x| root(&mut parent, x)).collect()
    }

    /// Connected after deleting every edge whose label is in `removed`?
    pub fn connected_without(&self, removed: &[usize]) -> bool {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v, l) in &self.edges {
            if !removed.contains(&l) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Smallest number of labels whose removal disconnects, by trying
    /// every subset.
    pub fn lambda(&self) -> usize {
        (0u32..1 << self.labels)
            .filter(|mask| {
                let removed: Vec<usize> = (0..self.labels).filter(|l| mask >> l & 1 == 1).collect();
                !self.connected_without(&removed)
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .expect("removing every label disconnects n >= 2")
    }

    /// Label sets per vertex; a loop contributes its label once.
    pub fn label_sets(&self) -> Vec<BTreeSet<usize>> {
        let mut sets = vec![BTreeSet::new(); self.n];
        for &(u, v, l) in &self.edges {
            sets[u].insert(l);
            sets[v].insert(l);
        }
        sets
    }

    pub fn label_degrees(&self) -> Vec<usize> {
        self.label_sets().iter().map(BTreeSet::len).collect()
    }

    pub fn components(&self) -> usize {
        let roots = self.dsu(|_| true);
        (0..self.n).filter(|&x| roots[x] == x).count()
    }

    pub fn rank(&self) -> usize {
        self.n - self.components()
    }

    pub fn nullity(&self) -> usize {
        self.edges.len() - self.rank()
    }

    pub fn hedge_vertices(&self, l: usize) -> BTreeSet<usize> {
        self.edges
            .iter()
            .filter(|e| e.2 == l)
            .flat_map(|&(u, v, _)| [u, v])
            .collect()
    }

    /// `(size, span, rank, nullity)` of hedge `l` as a subgraph of itself.
    pub fn hedge_stats(&self, l: usize) -> (usize, usize, usize, usize) {
        let verts = self.hedge_vertices(l);
        let roots = self.dsu(|i| self.edges[i].2 == l);
        let span: BTreeSet<usize> = verts.iter().map(|&v| roots[v]).collect();
        let size = self.edges.iter().filter(|e| e.2 == l).count();
        let rank = verts.len() - span.len();
        (size, span.len(), rank, size - rank)
    }

    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let sets: Vec<BTreeSet<usize>> = (0..self.labels).map(|l| self.hedge_vertices(l)).collect();
        (0..self.labels)
            .map(|r| {
                (0..self.labels)
                    .map(|t| r != t && !sets[r].is_disjoint(&sets[t]))
                    .collect()
            })
            .collect()
    }

    pub fn adjacency_degrees(&self) -> Vec<usize> {
        self.adjacency()
            .iter()
            .map(|row| row.iter().filter(|&&b| b).count())
            .collect()
    }

    /// `d_A(l)`; works on quotients whose label numbers have gaps.
    pub fn adjacency_degree_of(&self, l: usize) -> usize {
        let mine = self.hedge_vertices(l);
        let present: BTreeSet<usize> = self.edges.iter().map(|e| e.2).collect();
        present
            .into_iter()
            .filter(|&t| t != l && !self.hedge_vertices(t).is_disjoint(&mine))
            .count()
    }

    /// Chromatic number of the adjacency graph by trying every assignment.
    pub fn chromatic(&self) -> usize {
        let adj = self.adjacency();
        let k_max = self.labels.max(1);
        for k in 1..=k_max {
            let total = k.pow(self.labels as u32);
            for code in 0..total {
                let colors: Vec<usize> = (0..self.labels).map(|i| code / k.pow(i as u32) % k).collect();
                let proper =
                    (0..self.labels).all(|r| (0..self.labels).all(|t| !adj[r][t] || colors[r] != colors[t]));
                if proper {
                    return k;
                }
            }
        }
        unreachable!()
    }

    /// Merge the endpoints of every edge in `merged`, drop those edges,
    /// keep everything else (loops and parallels included).
    fn quotient(&self, merged: impl Fn(usize) -> bool) -> (Self, Vec<usize>) {
        let roots = self.dsu(&merged);
        let mut reps: Vec<usize> = roots.clone();
        reps.sort();
        reps.dedup();
        let class: Vec<usize> = roots.iter().map(|r| reps.binary_search(r).unwrap()).collect();
        let edges: Vec<(usize, usize, usize)> = self
            .edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| !merged(i))
            .map(|(_, &(u, v, l))| (class[u], class[v], l))
            .collect();
        let labels: BTreeSet<usize> = edges.iter().map(|e| e.2).collect();
        (
            Self {
                n: reps.len(),
                edges,
                labels: labels.len(),
            },
            class,
        )
    }

    /// Contract hedge `l`. Label numbers are kept, not re-interned.
    pub fn contract_label(&self, l: usize) -> Self {
        self.quotient(|i| self.edges[i].2 == l).0
    }

    /// Contract one edge; returns the result and the merged vertex.
    pub fn contract_edge(&self, idx: usize) -> (Self, usize) {
        let (q, class) = self.quotient(|i| i == idx);
        let w = class[self.edges[idx].0];
        (q, w)
    }

    pub fn label_degree_total(&self) -> usize {
        self.label_sets().iter().map(BTreeSet::len).sum()
    }

    pub fn label_degree_min(&self) -> usize {
        self.label_degrees().into_iter().min().unwrap_or(0)
    }
}
