//! Census runs: analyze every hyperbolic 2-bridge knot up to a bound, write
//! one report per knot, and summarize the invariant checks.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::knot::enumerate_census;
use crate::report::{to_json, SCHEMA_VERSION, TOOLKIT_VERSION};
use crate::verdict::{analyze, AnalysisConfig, KnotReport, ReportStatus};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub schema_version: &'static str,
    pub toolkit_version: &'static str,
    pub max_p: u64,
    pub knots: usize,
    pub factors: usize,
    pub contradictions: Vec<String>,
    pub squarefree_mod2_violations: usize,
    pub degree_law_violations: usize,
    pub oracle_mismatches: usize,
    pub odd_discriminant_factors: usize,
    pub qi_certified_absent: usize,
    /// `qi_certified_absent / factors` as an exact fraction.
    pub qi_certified_absent_rate: String,
    pub sqrt_m3_undetermined: usize,
    pub hidden_symmetry_verdicts: BTreeMap<String, usize>,
}

pub fn summarize(max_p: u64, reports: &[KnotReport]) -> CensusSummary {
    let mut s = CensusSummary {
        schema_version: SCHEMA_VERSION,
        toolkit_version: TOOLKIT_VERSION,
        max_p,
        knots: reports.len(),
        ..Default::default()
    };
    for r in reports {
        if let ReportStatus::Contradiction(c) = &r.status {
            s.contradictions.push(format!("{}: {c}", r.knot));
            if c.kind == crate::ContradictionKind::SquarefreeMod2 {
                s.squarefree_mod2_violations += 1;
            }
            if c.kind == crate::ContradictionKind::Mod2Oracle {
                s.oracle_mismatches += 1;
            }
        }
        if let Some(rp) = &r.riley {
            if rp.lambda.degree() != Some(((r.knot.p() - 1) / 2) as usize) {
                s.degree_law_violations += 1;
            }
        }
        for fa in &r.factors {
            s.factors += 1;
            s.odd_discriminant_factors += fa.field.disc_odd as usize;
            s.qi_certified_absent += fa.field.qi_status.is_absent() as usize;
            s.sqrt_m3_undetermined +=
                matches!(fa.field.sqrtm3_status, crate::field::SqrtStatus::Undetermined(_)) as usize;
        }
        let key = serde_json::to_value(r.hidden_symmetries)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        *s.hidden_symmetry_verdicts.entry(key).or_insert(0) += 1;
    }
    s.qi_certified_absent_rate = format!("{}/{}", s.qi_certified_absent, s.factors);
    s
}

/// Reports for the whole census, in `(p, q)` order, computed on `jobs`
/// worker threads (0 means one per core).
pub fn run_census(max_p: u64, jobs: usize, cfg: &AnalysisConfig) -> Result<Vec<KnotReport>> {
    if max_p < 3 {
        return Err(Error::InvalidInput(format!("max p = {max_p} must be at least 3")));
    }
    let knots = enumerate_census(max_p);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))?;
    pool.install(|| {
        knots
            .par_iter()
            .map(|k| analyze(k.p() as i64, k.q() as i64, cfg))
            .collect()
    })
}

/// Writes `bytes` to `path` through a temporary file in the same directory.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

/// Runs the census and writes `p_q.json` per knot plus `summary.json`.
pub fn write_census(max_p: u64, out_dir: &Path, jobs: usize, cfg: &AnalysisConfig) -> Result<CensusSummary> {
    let reports = run_census(max_p, jobs, cfg)?;
    fs::create_dir_all(out_dir)?;
    for r in &reports {
        let name = format!("{}_{}.json", r.knot.p(), r.knot.q());
        write_atomic(&out_dir.join(name), to_json(r).as_bytes())?;
    }
    let summary = summarize(max_p, &reports);
    let mut text = serde_json::to_string_pretty(&summary)?;
    text.push('\n');
    write_atomic(&out_dir.join("summary.json"), text.as_bytes())?;
    Ok(summary)
}
