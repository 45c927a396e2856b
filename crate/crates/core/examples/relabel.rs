// Give adjacent hedges distinct labels, greedily and optimally.

use std::error::Error;

use hedgecut::audit::optimal_relabel;
use hedgecut::{adjacency_graph, greedy_relabel, HedgeGraph};

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
    let adj = adjacency_graph(&g);
    let greedy = greedy_relabel(&g);
    for l in g.labels() {
        println!(
            "{} -> {} (d_A = {})",
            g.label_name(l),
            greedy.color(l),
            adj.degree(l)
        );
    }
    assert!(greedy.is_proper(&adj));

    // Hedge b touches every other hedge, yet two labels suffice.
    let best = optimal_relabel(&adj);
    println!(
        "greedy q={}, optimal q={}, max d_A={}",
        greedy.q(),
        best.q(),
        adj.max_degree()
    );
    assert_eq!(best.q(), 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
