// Survivability of a small backbone whose fibers share conduits.
//
// Every fiber runs through one conduit; a backhoe that cuts a conduit takes
// out all of its fibers at once. The conduits are the hedges, and the
// hedge connectivity is how many conduits must fail to split the network.

use std::error::Error;

use hedgecut::connectivity::ordinary_edge_min_cut;
use hedgecut::{hedge_connectivity, HedgeGraph, Policy};

const SITES: [&str; 6] = ["AMS", "FRA", "PAR", "LON", "MAD", "MIL"];

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let fibers = [
        (0, 1, "rhine"),
        (0, 3, "channel"),
        (1, 5, "alps"),
        (1, 2, "rhine"),
        (2, 3, "channel"),
        (2, 4, "pyrenees"),
        (4, 5, "coast"),
        (2, 5, "alps"),
        (0, 2, "rhine"),
        (3, 1, "rhine"),
        (4, 3, "atlantic"),
    ];
    let g = HedgeGraph::build(SITES.len(), fibers)?;

    // Counting fibers alone overstates resilience.
    let as_links = HedgeGraph::build(
        SITES.len(),
        fibers
            .iter()
            .enumerate()
            .map(|(i, &(u, v, _))| (u, v, format!("f{i}"))),
    )?;
    println!("fiber cuts needed: {}", ordinary_edge_min_cut(&as_links)?.size());

    let cut = hedge_connectivity(&g, &Policy::default())?;
    let names = |vs: &[usize]| vs.iter().map(|&v| SITES[v]).collect::<Vec<_>>().join(" ");
    println!(
        "conduit cuts needed: {} ({}) separating {} from {}",
        cut.size(),
        cut.label_names(&g).join(", "),
        names(&cut.side_a),
        names(&cut.side_b)
    );
    assert!(cut.is_valid(&g));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
