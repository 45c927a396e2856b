//! Executable audit of structural claims about hedge graphs.
//!
//! Each [`TheoremId`] names one claim: label-degree bounds on `λ_H`,
//! relabeling bounds, rank/nullity/span accounting, and the effect of edge
//! and hedge contraction on label and adjacency degrees. Auditing a graph
//! produces one [`AuditVerdict`] per check and subject (a hedge, an edge, a
//! contraction order, a pair of hedges), each carrying both sides of the
//! comparison and the serialized instance so it can be re-checked from
//! scratch with [`verify_certificate`].
//!
//! Some claims are literally true and are expected to hold on every
//! instance ([`Expectation::Holds`]); others are known to fail on small
//! graphs and are audited to exhibit counterexamples
//! ([`Expectation::Refutable`]). Which claims are provable depends on the
//! degree conventions in [`AuditMode`].

mod coloring;
mod generate;
mod record;
mod search;

use std::fmt;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use crate::adjacency::{adjacency_graph, greedy_relabel, hedges_adjacent};
use crate::connectivity::{
    brute_force_connectivity, default_trials, randomized_connectivity, DEFAULT_CAP, DEFAULT_SEED,
};
use crate::contraction::{contract_edge, contract_hedge, contraction_sequence};
use crate::error::{HedgeError, Result};
use crate::format::{emit, parse_multigraph};
use crate::graph::{HedgeDegreeMode, HedgeGraph, LabelId, LoopConvention};
use crate::rng::{mix, SplitMix64};

pub use coloring::optimal_relabel;
pub use generate::{random_instance, GeneratorParams};
pub use record::parse_records;
pub use search::{audit_stream, search_counterexample, trial_params, SearchOutcome};

/// Relabeling lower bounds are judged against an exhaustive optimal coloring
/// up to this many hedges, and against the greedy coloring beyond it.
pub const EXACT_COLORING_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// `λ_H ≤ δ_L`.
    T1MinDegBound,
    /// Any proper relabeling uses at least `Δ_L` labels.
    T2RelabelGeMaxDeg,
    /// `d_A(H) ≤ total d_L(V(H))`.
    T3DaLeTotal,
    /// `max d_A ≥ Δ_L`; restated as `max d_A ≥ Δ_L − 1`.
    T4MaxDaGeMaxDeg,
    /// Any proper relabeling uses at least `max d_A` labels.
    T5RelabelGeMaxDa,
    /// The fewest labels needed is `max d_A` or `max d_A + 1`.
    VizingBand,
    /// `λ_H ≤ δ_L ≤ Δ_L ≤ max d_A ≤ |L'|`.
    CorollaryChain,
    /// `rank(G) = Σ rank(H_i)`, hedge ranks measured in `G`.
    RanksumStatic,
    /// Ranks consumed by sequential contraction sum to `rank(G)`.
    RanksumSeq,
    /// `nullity(G) = Σ nullity(H_i)`, measured in `G`.
    NullsumStatic,
    /// Nullities consumed by sequential contraction sum to `nullity(G)`.
    NullsumSeq,
    /// `Σ |V(H_i)| = Σ d_L(v)`.
    VdEquality,
    /// `Σ span(H_i) ≤ 2m − n + 1`.
    SpansumUpper,
    /// `nδ_L − n + 1 ≤ Σ span(H_i) ≤ nΔ_L − n + 1`.
    SpansumBand,
    /// Contracting edge `uv` into `w`:
    /// `max(d_L(u), d_L(v)) − 1 ≤ d_L(w) ≤ d_L(u) + d_L(v) − 2`.
    ContractvBand,
    /// `δ_L(G) − 1 ≤ δ_L(G/H)`.
    ContractMin,
    /// `Σ_{G/H} d_L ≤ Σ_G d_L − 2 rank(H)`.
    ContractH,
    /// `Σ_G d_L ≤ Σ_{G/H} d_L + Σ_{V(H)} d_L − span(H)(δ_L − 1)`.
    ContractSum,
    /// `d_A` of a hedge after contracting another one.
    ContractAdj,
}

impl TheoremId {
    pub const ALL: [TheoremId; 19] = [
        TheoremId::T1MinDegBound,
        TheoremId::T2RelabelGeMaxDeg,
        TheoremId::T3DaLeTotal,
        TheoremId::T4MaxDaGeMaxDeg,
        TheoremId::T5RelabelGeMaxDa,
        TheoremId::VizingBand,
        TheoremId::CorollaryChain,
        TheoremId::RanksumStatic,
        TheoremId::RanksumSeq,
        TheoremId::NullsumStatic,
        TheoremId::NullsumSeq,
        TheoremId::VdEquality,
        TheoremId::SpansumUpper,
        TheoremId::SpansumBand,
        TheoremId::ContractvBand,
        TheoremId::ContractMin,
        TheoremId::ContractH,
        TheoremId::ContractSum,
        TheoremId::ContractAdj,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1MinDegBound => "T1_MIN_DEG_BOUND",
            TheoremId::T2RelabelGeMaxDeg => "T2_RELABEL_GE_MAXDEG",
            TheoremId::T3DaLeTotal => "T3_DA_LE_TOTAL",
            TheoremId::T4MaxDaGeMaxDeg => "T4_MAXDA_GE_MAXDEG",
            TheoremId::T5RelabelGeMaxDa => "T5_RELABEL_GE_MAXDA",
            TheoremId::VizingBand => "VIZING_BAND",
            TheoremId::CorollaryChain => "COROLLARY_CHAIN",
            TheoremId::RanksumStatic => "RANKSUM_STATIC",
            TheoremId::RanksumSeq => "RANKSUM_SEQ",
            TheoremId::NullsumStatic => "NULLSUM_STATIC",
            TheoremId::NullsumSeq => "NULLSUM_SEQ",
            TheoremId::VdEquality => "VD_EQUALITY",
            TheoremId::SpansumUpper => "SPANSUM_UPPER",
            TheoremId::SpansumBand => "SPANSUM_BAND",
            TheoremId::ContractvBand => "CONTRACTV_BAND",
            TheoremId::ContractMin => "CONTRACT_MIN",
            TheoremId::ContractH => "CONTRACT_H",
            TheoremId::ContractSum => "CONTRACT_SUM",
            TheoremId::ContractAdj => "CONTRACT_ADJ",
        }
    }

    /// The checks this claim splits into.
    pub fn checks(self) -> &'static [Check] {
        use Check::*;
        match self {
            TheoremId::VizingBand | TheoremId::SpansumBand => &[Lower, Upper],
            TheoremId::CorollaryChain => &[LambdaLeMin, MinLeMax, MaxLeMaxAdjacency, MaxAdjacencyLeRelabel],
            TheoremId::ContractvBand => &[Lower, Stated, Restated],
            TheoremId::T4MaxDaGeMaxDeg => &[Stated, Restated],
            TheoremId::ContractAdj => &[Adjacent, NonAdjacent],
            _ => &[Stated],
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = HedgeError;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| HedgeError::MalformedRecord(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    /// The claim as stated.
    Stated,
    /// A weakened form that is provable (the `−1` upper band of edge
    /// contraction).
    Restated,
    Lower,
    Upper,
    /// Contracted and observed hedges share a vertex.
    Adjacent,
    NonAdjacent,
    LambdaLeMin,
    MinLeMax,
    MaxLeMaxAdjacency,
    MaxAdjacencyLeRelabel,
}

impl Check {
    const ALL: [Check; 10] = [
        Check::Stated,
        Check::Restated,
        Check::Lower,
        Check::Upper,
        Check::Adjacent,
        Check::NonAdjacent,
        Check::LambdaLeMin,
        Check::MinLeMax,
        Check::MaxLeMaxAdjacency,
        Check::MaxAdjacencyLeRelabel,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Stated => "stated",
            Check::Restated => "restated",
            Check::Lower => "lower",
            Check::Upper => "upper",
            Check::Adjacent => "adjacent",
            Check::NonAdjacent => "non-adjacent",
            Check::LambdaLeMin => "lambda-le-min",
            Check::MinLeMax => "min-le-max",
            Check::MaxLeMaxAdjacency => "max-le-max-adj",
            Check::MaxAdjacencyLeRelabel => "max-adj-le-q",
        }
    }
}

impl FromStr for Check {
    type Err = HedgeError;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| HedgeError::MalformedRecord(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Expectation {
    /// Provable; a violation means a bug.
    Holds,
    /// Known to fail on some instances.
    Refutable,
}

impl Expectation {
    pub fn name(self) -> &'static str {
        match self {
            Expectation::Holds => "holds",
            Expectation::Refutable => "refutable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    pub fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Relation::Le => "le",
            Relation::Ge => "ge",
            Relation::Eq => "eq",
        }
    }
}

/// What a verdict is about. Hedges are named, not numbered, because label
/// ids shift under contraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Subject {
    Whole,
    Hedge(String),
    /// Index into the edge list.
    Edge(usize),
    /// A contraction order.
    Order(Vec<String>),
    Pair {
        contracted: String,
        observed: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AuditMode {
    pub degrees: HedgeDegreeMode,
    pub loops: LoopConvention,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditConfig {
    pub mode: AuditMode,
    /// Random contraction orders sampled per instance for the sequential
    /// accounting claims.
    pub orders: usize,
    pub seed: u64,
}

impl Default for AuditConfig {
    fn default() -> Self {
        Self {
            mode: AuditMode::default(),
            orders: 5,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditVerdict {
    pub theorem: TheoremId,
    pub check: Check,
    pub subject: Subject,
    pub mode: AuditMode,
    pub expect: Expectation,
    pub holds: bool,
    pub relation: Relation,
    pub lhs: i64,
    pub rhs: i64,
    pub detail: Option<String>,
    /// Hex prefix of the SHA-256 of `instance`.
    pub digest: String,
    /// The audited graph in canonical `HG1` form.
    pub instance: String,
}

impl AuditVerdict {
    /// A provable check that failed.
    pub fn is_anomaly(&self) -> bool {
        self.expect == Expectation::Holds && !self.holds
    }

    pub fn graph(&self) -> Result<HedgeGraph> {
        parse_multigraph(&self.instance)
    }
}

pub fn instance_digest(g: &HedgeGraph) -> String {
    text_digest(&emit(g))
}

fn text_digest(text: &str) -> String {
    Sha256::digest(text.as_bytes())[..8]
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Whether a check is provable or refutable under `mode`.
pub fn expectation(theorem: TheoremId, check: Check, mode: AuditMode) -> Expectation {
    use Check::*;
    use Expectation::*;
    use TheoremId::*;
    let base = match (theorem, check) {
        (T4MaxDaGeMaxDeg, Stated) => Refutable,
        (T5RelabelGeMaxDa | RanksumStatic | NullsumStatic | ContractH, _) => Refutable,
        (VizingBand | SpansumBand, Lower) => Refutable,
        (CorollaryChain, MaxLeMaxAdjacency | MaxAdjacencyLeRelabel) => Refutable,
        (ContractvBand, Stated) => Refutable,
        (ContractAdj, Adjacent) => Refutable,
        _ => Holds,
    };
    if base != Holds {
        return base;
    }
    if theorem == T3DaLeTotal && mode.degrees == HedgeDegreeMode::Induced {
        return Refutable;
    }
    // Ignoring loops lowers degrees at vertices that carry loops, in the
    // input or after a contraction; only these claims survive that.
    let robust_without_loops = matches!(
        (theorem, check),
        (
            T1MinDegBound | T2RelabelGeMaxDeg | T4MaxDaGeMaxDeg | RanksumSeq | NullsumSeq | SpansumUpper,
            _
        ) | (VizingBand, Upper)
            | (CorollaryChain, LambdaLeMin)
            | (ContractvBand, Restated)
            | (CorollaryChain, MinLeMax)
            | (ContractAdj, NonAdjacent)
    );
    if mode.loops == LoopConvention::Ignore && !robust_without_loops {
        return Refutable;
    }
    Holds
}

struct Measure {
    lhs: i64,
    rhs: i64,
    relation: Relation,
    detail: Option<String>,
}

impl Measure {
    fn new(lhs: usize, rhs: i64, relation: Relation) -> Self {
        Self::signed(lhs as i64, rhs, relation)
    }

    fn signed(lhs: i64, rhs: i64, relation: Relation) -> Self {
        Self {
            lhs,
            rhs,
            relation,
            detail: None,
        }
    }

    fn detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

/// `λ_H` for auditing: exact up to [`DEFAULT_CAP`] labels, randomized beyond.
fn audit_lambda(g: &HedgeGraph) -> Result<(usize, String)> {
    let cert = if g.label_count() <= DEFAULT_CAP {
        brute_force_connectivity(g, DEFAULT_CAP)?
    } else {
        randomized_connectivity(g, default_trials(g.label_count()), DEFAULT_SEED)?
    };
    let detail = format!("cut={} exact={}", cert.label_names(g).join(","), cert.exact);
    Ok((cert.size(), detail))
}

/// `(q_lower, q_greedy, detail)`: the relabeling size used for lower-bound
/// claims (optimal when small enough) and the greedy one.
fn relabel_sizes(g: &HedgeGraph) -> (usize, usize, String) {
    let greedy = greedy_relabel(g).q();
    if g.label_count() <= EXACT_COLORING_CAP {
        let best = optimal_relabel(&adjacency_graph(g)).q();
        (best, greedy, format!("q_greedy={greedy} q_optimal={best}"))
    } else {
        (greedy, greedy, format!("q_greedy={greedy} q_optimal=-"))
    }
}

fn label_of(g: &HedgeGraph, name: &str) -> Result<LabelId> {
    g.require_label(name)
}

fn mismatch(theorem: TheoremId, check: Check, subject: &Subject) -> HedgeError {
    HedgeError::MalformedRecord(format!("{theorem} has no {} check on {subject:?}", check.name()))
}

/// Computes both sides of one check from scratch.
fn evaluate(
    theorem: TheoremId,
    check: Check,
    subject: &Subject,
    mode: AuditMode,
    g: &HedgeGraph,
) -> Result<Measure> {
    use Relation::*;
    use TheoremId::*;
    if !theorem.checks().contains(&check) {
        return Err(mismatch(theorem, check, subject));
    }
    let loops = mode.loops;
    let n = g.vertex_count() as i64;
    let m = g.edge_count() as i64;
    let deg = g.degree_summary_with(loops);
    let (min_deg, max_deg) = (deg.min as i64, deg.max as i64);

    let measure = match (theorem, subject) {
        (T1MinDegBound, Subject::Whole) => {
            let (lambda, detail) = audit_lambda(g)?;
            Measure::new(lambda, min_deg, Le).detail(detail)
        }
        (T2RelabelGeMaxDeg, Subject::Whole) => {
            let (q, _, detail) = relabel_sizes(g);
            Measure::new(q, max_deg, Ge).detail(detail)
        }
        (T3DaLeTotal, Subject::Hedge(name)) => {
            let l = label_of(g, name)?;
            let total = g.hedge_degree_summary_with(l, mode.degrees, loops)?.total;
            Measure::new(adjacency_graph(g).degree(l), total as i64, Le)
        }
        (T4MaxDaGeMaxDeg, Subject::Whole) => {
            let max_da = adjacency_graph(g).max_degree();
            match check {
                Check::Stated => Measure::new(max_da, max_deg, Ge),
                _ => Measure::new(max_da, max_deg - 1, Ge),
            }
        }
        (T5RelabelGeMaxDa, Subject::Whole) => {
            let (q, _, detail) = relabel_sizes(g);
            Measure::new(q, adjacency_graph(g).max_degree() as i64, Ge).detail(detail)
        }
        (VizingBand, Subject::Whole) => {
            let (q, greedy, detail) = relabel_sizes(g);
            let max_da = adjacency_graph(g).max_degree() as i64;
            match check {
                Check::Lower => Measure::new(q, max_da, Ge),
                _ => Measure::new(greedy, max_da + 1, Le),
            }
            .detail(detail)
        }
        (CorollaryChain, Subject::Whole) => {
            let max_da = adjacency_graph(g).max_degree() as i64;
            match check {
                Check::LambdaLeMin => {
                    let (lambda, detail) = audit_lambda(g)?;
                    Measure::new(lambda, min_deg, Le).detail(detail)
                }
                Check::MinLeMax => Measure::signed(min_deg, max_deg, Le),
                Check::MaxLeMaxAdjacency => Measure::signed(max_deg, max_da, Le),
                _ => {
                    let (q, _, detail) = relabel_sizes(g);
                    Measure::signed(max_da, q as i64, Le).detail(detail)
                }
            }
        }
        (RanksumStatic, Subject::Whole) => {
            let sum: usize = g.hedge_views().iter().map(|h| h.rank()).sum();
            Measure::new(sum, g.rank_nullity().0 as i64, Eq)
        }
        (NullsumStatic, Subject::Whole) => {
            let sum: usize = g.hedge_views().iter().map(|h| h.nullity()).sum();
            Measure::new(sum, g.rank_nullity().1 as i64, Eq)
        }
        (RanksumSeq | NullsumSeq, Subject::Order(names)) => {
            let order = names
                .iter()
                .map(|name| label_of(g, name))
                .collect::<Result<Vec<_>>>()?;
            let trace = contraction_sequence(g, &order, false)?;
            let (rank, nullity) = g.rank_nullity();
            if theorem == RanksumSeq {
                Measure::new(trace.total_rank(), rank as i64, Eq)
            } else {
                Measure::new(trace.total_nullity(), nullity as i64, Eq)
            }
        }
        (VdEquality, Subject::Whole) => {
            let covered: usize = g.hedge_vertex_sets().iter().map(Vec::len).sum();
            Measure::new(covered, deg.total as i64, Eq)
        }
        (SpansumUpper, Subject::Whole) => {
            let spans: usize = g.hedge_views().iter().map(|h| h.span()).sum();
            Measure::new(spans, 2 * m - n + 1, Le)
        }
        (SpansumBand, Subject::Whole) => {
            let spans = g.hedge_views().iter().map(|h| h.span()).sum::<usize>() as i64;
            match check {
                Check::Lower => Measure::signed(n * min_deg - n + 1, spans, Le),
                _ => Measure::signed(spans, n * max_deg - n + 1, Le),
            }
        }
        (ContractvBand, Subject::Edge(index)) => {
            let e = g.edge(*index)?;
            let degrees = g.label_degrees_with(loops);
            let (du, dv) = (degrees[e.u] as i64, degrees[e.v] as i64);
            let (h, w) = contract_edge(g, *index)?;
            let dw = h.label_degrees_with(loops)[w] as i64;
            let detail = format!("d_u={du} d_v={dv} d_w={dw}");
            match check {
                Check::Lower => Measure::signed(du.max(dv) - 1, dw, Le),
                Check::Stated => Measure::signed(dw, du + dv - 2, Le),
                _ => Measure::signed(dw, du + dv - 1, Le),
            }
            .detail(detail)
        }
        (ContractMin | ContractH | ContractSum, Subject::Hedge(name)) => {
            let l = label_of(g, name)?;
            let view = g.hedge_view(l)?;
            let after = contract_hedge(g, l)?.degree_summary_with(loops);
            match theorem {
                ContractMin => Measure::signed(min_deg - 1, after.min as i64, Le),
                ContractH => {
                    Measure::signed(after.total as i64, deg.total as i64 - 2 * view.rank() as i64, Le)
                }
                _ => {
                    let degrees = g.label_degrees_with(loops);
                    let inside: usize = view.vertices.iter().map(|&v| degrees[v]).sum();
                    Measure::signed(
                        deg.total as i64,
                        after.total as i64 + inside as i64 - view.span() as i64 * (min_deg - 1),
                        Le,
                    )
                }
            }
        }
        (ContractAdj, Subject::Pair { contracted, observed }) => {
            let i = label_of(g, contracted)?;
            let j = label_of(g, observed)?;
            let adjacent = hedges_adjacent(g, i, j)?;
            if adjacent != (check == Check::Adjacent) {
                return Err(mismatch(theorem, check, subject));
            }
            let adj = adjacency_graph(g);
            let q = greedy_relabel(g).q() as i64;
            let h = contract_hedge(g, i)?;
            let after = adjacency_graph(&h).degree(label_of(&h, observed)?);
            let (dj, di) = (adj.degree(j) as i64, adj.degree(i) as i64);
            let predicted = if adjacent { dj + di - q + 1 } else { dj };
            Measure::new(after, predicted, Eq).detail(format!("q={q}"))
        }
        _ => return Err(mismatch(theorem, check, subject)),
    };
    Ok(measure)
}

/// Distinct contraction orders sampled for `g`, seeded by the config seed
/// and the instance digest.
fn sample_orders(g: &HedgeGraph, config: &AuditConfig) -> Vec<Vec<String>> {
    let digest = u64::from_str_radix(&instance_digest(g), 16).unwrap_or(0);
    let mut rng = SplitMix64::new(mix(config.seed, digest));
    let mut orders: Vec<Vec<String>> = Vec::new();
    for _ in 0..config.orders {
        let mut order = g.label_names().to_vec();
        rng.shuffle(&mut order);
        if !orders.contains(&order) {
            orders.push(order);
        }
    }
    orders
}

fn plan(theorem: TheoremId, g: &HedgeGraph, config: &AuditConfig) -> Vec<(Check, Subject)> {
    use TheoremId::*;
    let hedges = || g.label_names().iter().cloned().map(Subject::Hedge);
    match theorem {
        T3DaLeTotal | ContractMin | ContractH | ContractSum => hedges().map(|s| (Check::Stated, s)).collect(),
        RanksumSeq | NullsumSeq => sample_orders(g, config)
            .into_iter()
            .map(|o| (Check::Stated, Subject::Order(o)))
            .collect(),
        ContractvBand => (0..g.edge_count())
            .filter(|&i| !g.edges()[i].is_loop())
            .flat_map(|i| theorem.checks().iter().map(move |&c| (c, Subject::Edge(i))))
            .collect(),
        ContractAdj => {
            let adj = adjacency_graph(g);
            let mut out = Vec::new();
            for i in g.labels() {
                for j in g.labels().filter(|&j| j != i) {
                    let check = if adj.are_adjacent(i, j) {
                        Check::Adjacent
                    } else {
                        Check::NonAdjacent
                    };
                    out.push((
                        check,
                        Subject::Pair {
                            contracted: g.label_name(i).to_string(),
                            observed: g.label_name(j).to_string(),
                        },
                    ));
                }
            }
            out
        }
        _ => theorem.checks().iter().map(|&c| (c, Subject::Whole)).collect(),
    }
}

fn require_auditable(g: &HedgeGraph) -> Result<()> {
    if g.vertex_count() < 2 {
        return Err(HedgeError::TooFewVertices {
            needed: 2,
            n: g.vertex_count(),
        });
    }
    if !g.is_connected() {
        return Err(HedgeError::Disconnected);
    }
    Ok(())
}

/// Audits one claim on a connected graph with at least two vertices.
pub fn audit_theorem(id: TheoremId, g: &HedgeGraph, config: &AuditConfig) -> Result<Vec<AuditVerdict>> {
    require_auditable(g)?;
    let instance = emit(g);
    let digest = text_digest(&instance);
    plan(id, g, config)
        .into_iter()
        .map(|(check, subject)| {
            let m = evaluate(id, check, &subject, config.mode, g)?;
            Ok(AuditVerdict {
                theorem: id,
                check,
                expect: expectation(id, check, config.mode),
                subject,
                mode: config.mode,
                holds: m.relation.holds(m.lhs, m.rhs),
                relation: m.relation,
                lhs: m.lhs,
                rhs: m.rhs,
                detail: m.detail,
                digest: digest.clone(),
                instance: instance.clone(),
            })
        })
        .collect()
}

/// Audits every claim in [`TheoremId::ALL`] order.
pub fn audit_all(g: &HedgeGraph, config: &AuditConfig) -> Result<Vec<AuditVerdict>> {
    let mut out = Vec::new();
    for id in TheoremId::ALL {
        out.extend(audit_theorem(id, g, config)?);
    }
    Ok(out)
}

/// Re-derives a verdict from its serialized instance alone: the instance
/// must match its digest and be canonical, and recomputing the check must
/// reproduce `lhs`, `rhs`, `relation`, `holds` and `expect` exactly.
pub fn verify_certificate(v: &AuditVerdict) -> bool {
    let Ok(g) = parse_multigraph(&v.instance) else {
        return false;
    };
    let canonical = emit(&g);
    if canonical != v.instance || text_digest(&canonical) != v.digest {
        return false;
    }
    if require_auditable(&g).is_err() {
        return false;
    }
    let Ok(m) = evaluate(v.theorem, v.check, &v.subject, v.mode, &g) else {
        return false;
    };
    m.lhs == v.lhs
        && m.rhs == v.rhs
        && m.relation == v.relation
        && v.holds == m.relation.holds(m.lhs, m.rhs)
        && v.expect == expectation(v.theorem, v.check, v.mode)
}

/// [`verify_certificate`] on a serialized record.
pub fn verify_record(text: &str) -> Result<bool> {
    Ok(verify_certificate(&AuditVerdict::parse_record(text)?))
}
