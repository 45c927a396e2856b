use rayon::prelude::*;

use super::{audit_theorem, random_instance, AuditConfig, AuditVerdict, GeneratorParams, TheoremId};
use crate::error::Result;
use crate::rng::mix;

const BATCH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The first failing check, on the lowest-numbered failing trial.
    Violation {
        trial: usize,
        verdict: AuditVerdict,
    },
    Exhausted {
        trials: usize,
        checks: usize,
    },
}

/// Generator parameters for trial `trial` of `trials`: the vertex count
/// ramps from the low to the high end of the range so small
/// counterexamples are met first, and the seed is `mix(seed, trial)`.
pub fn trial_params(params: &GeneratorParams, trial: usize, trials: usize) -> GeneratorParams {
    let (lo, hi) = (*params.vertices.start(), *params.vertices.end());
    let width = hi.saturating_sub(lo) + 1;
    let n = lo + (trial * width / trials.max(1)).min(width - 1);
    GeneratorParams {
        vertices: n..=n,
        seed: mix(params.seed, trial as u64),
        ..params.clone()
    }
}

/// Audits `id` on `trials` random instances and stops at the first failing
/// check. Trials run in parallel but the outcome does not depend on
/// scheduling.
pub fn search_counterexample(
    id: TheoremId,
    params: &GeneratorParams,
    trials: usize,
    config: &AuditConfig,
) -> Result<SearchOutcome> {
    params.validate()?;
    let mut checks = 0;
    for start in (0..trials).step_by(BATCH) {
        let end = (start + BATCH).min(trials);
        let batch: Vec<Result<(Option<AuditVerdict>, usize)>> = (start..end)
            .into_par_iter()
            .map(|t| {
                let g = random_instance(&trial_params(params, t, trials))?;
                let verdicts = audit_theorem(id, &g, config)?;
                let count = verdicts.len();
                Ok((verdicts.into_iter().find(|v| !v.holds), count))
            })
            .collect();
        for (t, result) in (start..end).zip(batch) {
            let (failed, count) = result?;
            checks += count;
            if let Some(verdict) = failed {
                return Ok(SearchOutcome::Violation { trial: t, verdict });
            }
        }
    }
    Ok(SearchOutcome::Exhausted { trials, checks })
}

/// Every verdict for `ids` on each of `trials` random instances, in trial
/// order.
pub fn audit_stream(
    ids: &[TheoremId],
    params: &GeneratorParams,
    trials: usize,
    config: &AuditConfig,
) -> Result<Vec<(usize, Vec<AuditVerdict>)>> {
    params.validate()?;
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let g = random_instance(&trial_params(params, t, trials))?;
            let mut verdicts = Vec::new();
            for &id in ids {
                verdicts.extend(audit_theorem(id, &g, config)?);
            }
            Ok((t, verdicts))
        })
        .collect()
}
