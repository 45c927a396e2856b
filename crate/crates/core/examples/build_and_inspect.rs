// Build a hedge graph, read off per-hedge span/rank/nullity and label
// degrees, and round-trip it through the HG1 text format.

use std::error::Error;

use hedgecut::format::{emit, parse};
use hedgecut::HedgeGraph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // Four-cycle whose opposite edges share a hedge.
    let g = HedgeGraph::build(4, [(0, 1, "a"), (1, 2, "b"), (2, 3, "a"), (3, 0, "b")])?;
    println!(
        "n={} m={} labels={}",
        g.vertex_count(),
        g.edge_count(),
        g.label_count()
    );

    for h in g.hedge_views() {
        println!(
            "hedge {}: {} edges, span {}, rank {}, nullity {}",
            g.label_name(h.label),
            h.size(),
            h.span(),
            h.rank(),
            h.nullity()
        );
    }
    let (rank, nullity) = g.rank_nullity();
    println!("graph rank {rank}, nullity {nullity}");
    println!("label degrees {:?}", g.label_degrees());
    let d = g.degree_summary();
    println!("delta_l={} Delta_l={}", d.min, d.max);

    let text = emit(&g);
    print!("{text}");
    assert_eq!(parse(&text)?, g);

    // Strict input rejects loops, and says where.
    match parse("HG1 2 1\n0 0 a\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
