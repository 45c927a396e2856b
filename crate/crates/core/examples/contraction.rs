// Contract hedges one at a time and watch rank and nullity get consumed.

use std::error::Error;

use hedgecut::contraction::{cleanup, contract_hedge, contraction_sequence};
use hedgecut::format::emit;
use hedgecut::HedgeGraph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = HedgeGraph::build(
        7,
        [
            (0, 1, "b"),
            (0, 2, "b"),
            (0, 3, "b"),
            (1, 4, "a1"),
            (2, 5, "a2"),
            (3, 6, "a3"),
        ],
    )?;

    // Contracting the star hedge collapses its four vertices into one.
    let b = g.require_label("b")?;
    let h = contract_hedge(&g, b)?;
    print!("{}", emit(&h));
    for v in 0..h.vertex_count() {
        println!("vertex {v} stands for {:?}", h.origin(v));
    }

    let order: Vec<_> = ["a1", "b", "a2", "a3"]
        .iter()
        .map(|name| g.require_label(name))
        .collect::<Result<_, _>>()?;
    let trace = contraction_sequence(&g, &order, false)?;
    for step in &trace.steps {
        println!(
            "contract {}: rank {} nullity {}",
            step.label, step.rank_consumed, step.nullity_consumed
        );
    }
    let (rank, nullity) = g.rank_nullity();
    assert_eq!((trace.total_rank(), trace.total_nullity()), (rank, nullity));
    assert_eq!(trace.final_graph.vertex_count(), 1);

    // Parallel edges left behind by a contraction can be merged.
    let c4 = HedgeGraph::build(4, [(0, 1, "a"), (1, 2, "b"), (2, 3, "a"), (3, 0, "b")])?;
    let squeezed = contract_hedge(&c4, c4.require_label("a")?)?;
    let (tidy, report) = cleanup(&squeezed);
    println!(
        "{} edges before cleanup, {} after ({report:?})",
        squeezed.edge_count(),
        tidy.edge_count()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
