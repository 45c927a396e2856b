//! Hedge graphs: graphs whose edges are grouped into labelled *hedges* that
//! fail or are removed together (shared-risk link groups, colored edges).
//!
//! - [`graph`]: the [`HedgeGraph`] model, label degrees, per-hedge
//!   span/rank/nullity.
//! - [`contraction`]: edge and hedge contraction, cleanup of loops and
//!   parallel edges, contraction sequences with rank/nullity accounting.
//! - [`adjacency`]: hedge adjacency and greedy relabeling.
//! - [`connectivity`]: global hedge connectivity `λ_H` with verifiable cut
//!   certificates.
//! - [`audit`]: executable checks of structural claims about hedge graphs,
//!   with counterexample search and replayable verdict records.
//! - [`format`]: the `HG1` text format; [`cli`]: the `hedgecut` command.
//!
//! ```
//! use hedgecut::{hedge_connectivity, HedgeGraph, Policy};
//!
//! let g = HedgeGraph::build(4, [(0, 1, "a"), (1, 2, "b"), (2, 3, "a"), (3, 0, "b")])?;
//! let cut = hedge_connectivity(&g, &Policy::default())?;
//! assert_eq!(cut.label_names(&g), ["a"]);
//! assert!(cut.is_valid(&g));
//! # Ok::<(), hedgecut::HedgeError>(())
//! ```

pub mod adjacency;
pub mod audit;
pub mod cli;
pub mod connectivity;
pub mod contraction;
pub mod error;
pub mod format;
pub mod graph;
pub mod rng;
mod union_find;

pub use adjacency::{adjacency_graph, greedy_relabel, HedgeAdjacencyGraph, Relabeling};
pub use connectivity::{
    brute_force_connectivity, hedge_connectivity, randomized_connectivity, CutCertificate, CutMethod, Method,
    Policy,
};
pub use contraction::{cleanup, contract_edge, contract_hedge, contraction_sequence};
pub use error::{HedgeError, Result};
pub use graph::{Edge, HedgeDegreeMode, HedgeGraph, LabelId, LoopConvention, Vertex};
