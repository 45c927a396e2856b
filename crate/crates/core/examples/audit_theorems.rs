// Audit structural claims on a graph, replay a verdict from its record, and
// search random graphs for a counterexample.

use std::error::Error;

use hedgecut::audit::{
    audit_theorem, search_counterexample, verify_certificate, AuditConfig, AuditVerdict, GeneratorParams,
    SearchOutcome, TheoremId,
};
use hedgecut::HedgeGraph;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let g = HedgeGraph::build(5, [(0, 1, "i"), (0, 2, "i"), (0, 3, "a"), (1, 4, "b")])?;
    let config = AuditConfig::default();
    for v in audit_theorem(TheoremId::ContractvBand, &g, &config)? {
        println!(
            "{} {} on {}: {} {} {} -> {}",
            v.theorem,
            v.check.name(),
            v.subject,
            v.lhs,
            v.relation.name(),
            v.rhs,
            if v.holds { "holds" } else { "fails" }
        );
    }

    // Records carry their instance, so they can be checked from text alone.
    let v = audit_theorem(TheoremId::VdEquality, &g, &config)?.remove(0);
    let record = v.to_string();
    print!("{record}");
    assert!(verify_certificate(&AuditVerdict::parse_record(&record)?));

    let params = GeneratorParams::parse_spec("n=3..6,extra=0..3,L=2..3", &GeneratorParams::default())?;
    match search_counterexample(TheoremId::RanksumStatic, &params, 500, &config)? {
        SearchOutcome::Violation { trial, verdict } => {
            println!("trial {trial}: {} vs {}", verdict.lhs, verdict.rhs);
            print!("{}", verdict.instance);
        }
        SearchOutcome::Exhausted { trials, .. } => println!("no counterexample in {trials} trials"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
