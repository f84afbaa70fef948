//! Per-`n` computation bundle and its on-disk artifact layout.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::Result;
use crate::framework::{boundary_framework, FrameworkSet};
use crate::graph::TransferGraph;
use crate::thickness::{thickness_profile, thickness_profile_par, ThicknessProfile};
use crate::zones::{decompose, ZoneDecomposition};

/// Upper end of the range in which the reference tables were established.
pub const VERIFIED_MAX_N: usize = 30;

pub const PROFILE_CSV: &str = "profile.csv";
pub const PROFILE_JSON: &str = "profile.json";
pub const FRAMEWORK_JSON: &str = "framework.json";
pub const EDGES_TSV: &str = "edges.tsv";

/// Everything derived for one `n`.
#[derive(Debug, Clone)]
pub struct Computed {
    pub graph: TransferGraph,
    pub framework: FrameworkSet,
    pub profile: ThicknessProfile,
    /// Decompositions for `r = 1..=tau_max`.
    pub zones: Vec<ZoneDecomposition>,
}

impl Computed {
    pub fn new(n: usize, parallel: bool) -> Result<Self> {
        let graph = TransferGraph::build(n)?;
        let framework = boundary_framework(&graph)?;
        let profile = if parallel {
            thickness_profile_par(&graph)
        } else {
            thickness_profile(&graph)
        };
        let zones = (1..=profile.tau_max())
            .map(|r| decompose(&graph, &framework, &profile, r))
            .collect::<Result<_>>()?;
        Ok(Self {
            graph,
            framework,
            profile,
            zones,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// Decomposition of order `r`, if `1 <= r <= tau_max`.
    pub fn zone(&self, r: usize) -> Option<&ZoneDecomposition> {
        r.checked_sub(1).and_then(|i| self.zones.get(i))
    }

    pub fn write_artifacts(&self, out: &Path) -> Result<PathBuf> {
        let dir = artifact_dir(out, self.n());
        fs::create_dir_all(&dir)?;
        let vertices = self.graph.vertices();
        let note = (self.n() > VERIFIED_MAX_N).then_some("beyond the verified range n <= 30");

        fs::write(dir.join(PROFILE_CSV), self.profile.to_csv(vertices)?)?;
        fs::write(
            dir.join(PROFILE_JSON),
            format!("{}\n", self.profile.to_json(vertices, note)?),
        )?;
        fs::write(dir.join(FRAMEWORK_JSON), format!("{}\n", self.framework.to_json()?))?;
        let mut edges = Vec::new();
        self.graph.write_edge_list(&mut edges)?;
        fs::write(dir.join(EDGES_TSV), edges)?;
        for z in &self.zones {
            fs::write(
                dir.join(format!("zones_r{}.json", z.r)),
                format!("{}\n", z.to_json(vertices)?),
            )?;
        }
        Ok(dir)
    }
}

/// `out/n07` and so on.
pub fn artifact_dir(out: &Path, n: usize) -> PathBuf {
    out.join(format!("n{n:02}"))
}

/// Computes `n_min..=n_max` in order. With `parallel`, work is spread over
/// the current rayon pool; the result is identical either way.
pub fn compute_range(n_min: usize, n_max: usize, parallel: bool) -> Result<Vec<Computed>> {
    if parallel {
        (n_min..=n_max)
            .into_par_iter()
            .map(|n| Computed::new(n, true))
            .collect()
    } else {
        (n_min..=n_max).map(|n| Computed::new(n, false)).collect()
    }
}

/// Reads a previously written profile, if present.
pub fn load_profile(out: &Path, n: usize) -> Result<Option<ThicknessProfile>> {
    let path = artifact_dir(out, n).join(PROFILE_CSV);
    if !path.exists() {
        return Ok(None);
    }
    ThicknessProfile::from_csv(n, &fs::read_to_string(path)?).map(Some)
}

/// Runs `f` on a dedicated pool with `jobs` workers (0 = rayon default).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zones_cover_each_realized_order() {
        let c = Computed::new(7, false).unwrap();
        assert_eq!(c.zones.len(), 3);
        assert_eq!(c.zone(3).unwrap().r, 3);
        assert!(c.zone(0).is_none());
        assert!(c.zone(4).is_none());
        assert!(Computed::new(1, false).unwrap().zones.is_empty());
    }

    #[test]
    fn artifacts_round_trip_profile() {
        let dir = tempfile::tempdir().unwrap();
        let c = Computed::new(5, false).unwrap();
        let written = c.write_artifacts(dir.path()).unwrap();
        assert!(written.ends_with("n05"));
        assert!(written.join("zones_r2.json").exists());
        assert!(!written.join("zones_r3.json").exists());
        assert_eq!(load_profile(dir.path(), 5).unwrap().unwrap(), c.profile);
        assert!(load_profile(dir.path(), 6).unwrap().is_none());
    }
}
