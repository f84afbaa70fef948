use serde::Serialize;

use crate::error::{Error, Result};
use crate::framework::FrameworkSet;
use crate::graph::TransferGraph;

/// Min, mean and max of one quantity over a vertex set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Summary {
    pub min: f64,
    pub mean: f64,
    pub max: f64,
}

impl Summary {
    fn of(values: impl IntoIterator<Item = f64>) -> Self {
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        let mut sum = 0.0;
        let mut count = 0usize;
        for v in values {
            min = min.min(v);
            max = max.max(v);
            sum += v;
            count += 1;
        }
        Self {
            min,
            mean: sum / count as f64,
            max,
        }
    }
}

/// Descriptive placement statistics for a vertex set `S` of `G_n`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LocusStats {
    pub n: usize,
    pub size: usize,
    /// `λ_1 − ℓ(λ)`; zero on the self-conjugate axis.
    pub balance: Summary,
    pub antenna_distance: Summary,
    pub framework_distance: Summary,
    pub axis_fraction: f64,
}

pub fn locus_statistics(g: &TransferGraph, framework: &FrameworkSet, set: &[usize]) -> Result<LocusStats> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if framework.n != g.n() {
        return Err(Error::MismatchedSize {
            expected: g.n(),
            found: framework.n,
        });
    }
    if let Some(&bad) = set.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(Error::VertexOutOfRange {
            index: bad,
            n: g.n(),
            count: g.vertex_count(),
        });
    }

    let to_antenna = g.distances_from(framework.antenna_indices());
    let to_framework = g.distances_from(&framework.all_vertices);
    // G_1 is a single vertex and G_n is connected for n >= 2, so every
    // distance is defined.
    let dist = |d: &[Option<usize>], v: usize| d[v].expect("connected graph") as f64;

    let balance = Summary::of(set.iter().map(|&v| {
        let lambda = g.vertex(v);
        lambda.largest_part() as f64 - lambda.length() as f64
    }));
    let on_axis = set.iter().filter(|&&v| g.vertex(v).is_self_conjugate()).count();

    Ok(LocusStats {
        n: g.n(),
        size: set.len(),
        balance,
        antenna_distance: Summary::of(set.iter().map(|&v| dist(&to_antenna, v))),
        framework_distance: Summary::of(set.iter().map(|&v| dist(&to_framework, v))),
        axis_fraction: on_axis as f64 / set.len() as f64,
    })
}
