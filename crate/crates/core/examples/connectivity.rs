// Hedge connectivity: exact, randomized and through the dispatcher.

use std::error::Error;

use hedgecut::connectivity::{default_trials, ordinary_edge_min_cut};
use hedgecut::{brute_force_connectivity, hedge_connectivity, randomized_connectivity, HedgeGraph, Policy};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = HedgeGraph::build(
        7,
        [
            (0, 1, "x"),
            (1, 2, "y"),
            (2, 3, "x"),
            (3, 0, "y"),
            (3, 4, "x"),
            (4, 5, "y"),
            (5, 6, "x"),
            (6, 3, "y"),
        ],
    )?;
    let exact = brute_force_connectivity(&g, 20)?;
    println!(
        "brute force: lambda_h={} cut={:?} sides={:?}|{:?}",
        exact.size(),
        exact.label_names(&g),
        exact.side_a,
        exact.side_b
    );
    assert!(exact.is_valid(&g));

    let trials = default_trials(g.label_count());
    let guess = randomized_connectivity(&g, trials, 42)?;
    println!("randomized ({trials} trials): lambda_h={}", guess.size());
    assert!(guess.size() >= exact.size());

    let auto = hedge_connectivity(&g, &Policy::default())?;
    println!("auto: {} via {}", auto.size(), auto.method);

    // With one edge per hedge this is plain edge connectivity.
    let ring = HedgeGraph::build(4, [(0, 1, "e0"), (1, 2, "e1"), (2, 3, "e2"), (3, 0, "e3")])?;
    println!("ring: edge connectivity {}", ordinary_edge_min_cut(&ring)?.size());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
