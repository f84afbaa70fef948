//! Structural checks and reference-table comparisons run by `partgraph verify`.
//!
//! Each check is a plain function returning `Err(description)` on the first
//! violation, so callers (and tests with deliberately corrupted inputs) can
//! run them individually.

use std::fmt;

use crate::atlas::{export_tables, layout_of, render_atlas, AtlasMode};
use crate::bitset::Bitset;
use crate::error::Result;
use crate::framework::{left_boundary, self_conjugate_axis, FrameworkSet};
use crate::graph::TransferGraph;
use crate::oracle::brute_force_at;
use crate::partition::Partition;
use crate::pipeline::{compute_range, with_jobs, Computed};
use crate::thickness::ThicknessProfile;
use crate::zones::{decompose, exact_regime, threshold_zone, FirstOccurrenceTable};

pub type CheckResult = std::result::Result<(), String>;

/// `(r, n_r)` for `r = 2..=7` over `1 <= n <= 30`.
pub const REFERENCE_FIRST_OCCURRENCES: [(usize, usize); 6] =
    [(2, 4), (3, 7), (4, 11), (5, 16), (6, 22), (7, 29)];

/// `(n, tau_max, |M_n|, two members of M_n)` at the first-occurrence values.
pub const REFERENCE_MAX_LOCI: [(usize, usize, usize, [&str; 2]); 5] = [
    (7, 3, 4, ["4,2,1", "3,3,1"]),
    (11, 4, 5, ["5,3,2,1", "4,4,2,1"]),
    (16, 5, 6, ["6,4,3,2,1", "5,5,3,2,1"]),
    (22, 6, 7, ["7,5,4,3,2,1", "6,6,4,3,2,1"]),
    (29, 7, 8, ["8,6,5,4,3,2,1", "7,7,5,4,3,2,1"]),
];

/// Largest `n` for which conjugation invariance is checked on every vertex
/// and the thickness oracle comparison is run.
pub const FULL_CONJUGATION_MAX_N: usize = 20;
pub const ORACLE_MAX_N: usize = 12;

/// `p(0..=max)` by Euler's pentagonal-number recurrence.
pub fn partition_counts(max: usize) -> Vec<u64> {
    let mut p = vec![0i64; max + 1];
    p[0] = 1;
    for k in 1..=max {
        let mut total = 0i64;
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > k {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            total += sign * p[k - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= k {
                total += sign * p[k - g2];
            }
        }
        p[k] = total;
    }
    p.into_iter().map(|v| v as u64).collect()
}

/// Number of partitions of `n` into distinct odd parts, by subset-sum DP.
pub fn distinct_odd_part_count(n: usize) -> u64 {
    let mut ways = vec![0u64; n + 1];
    ways[0] = 1;
    for part in (1..=n).step_by(2) {
        for s in (part..=n).rev() {
            ways[s] += ways[s - part];
        }
    }
    ways[n]
}

fn conj_index(g: &TransferGraph) -> Vec<usize> {
    g.vertices()
        .iter()
        .map(|l| g.index_of(&l.conjugate()).expect("conjugate is a partition of n"))
        .collect()
}

fn fail<T: fmt::Display>(n: usize, what: T) -> CheckResult {
    Err(format!("n = {n}: {what}"))
}

pub fn check_partition_count(vertices: &[Partition], n: usize) -> CheckResult {
    let expected = partition_counts(n)[n];
    if vertices.len() as u64 != expected {
        return fail(n, format!("{} partitions, recurrence gives {expected}", vertices.len()));
    }
    let first_last = (vertices.first(), vertices.last());
    if first_last != (Some(&Partition::row(n)), Some(&Partition::column(n))) {
        return fail(n, "enumeration does not start at (n) and end at (1^n)");
    }
    Ok(())
}

pub fn check_conjugation_involution(vertices: &[Partition]) -> CheckResult {
    for l in vertices {
        let c = l.conjugate();
        if c.conjugate() != *l || c.length() != l.largest_part() || c.n() != l.n() {
            return fail(l.n(), format!("conjugation misbehaves at {l}"));
        }
    }
    Ok(())
}

pub fn check_graph_structure(g: &TransferGraph) -> CheckResult {
    let mut degree_sum = 0;
    for i in 0..g.vertex_count() {
        let list = g.neighbors(i);
        degree_sum += list.len();
        if list.windows(2).any(|w| w[0] >= w[1]) {
            return fail(g.n(), format!("adjacency of {} not strictly sorted", g.vertex(i)));
        }
        if list.contains(&i) {
            return fail(g.n(), format!("self-loop at {}", g.vertex(i)));
        }
        if let Some(&j) = list.iter().find(|&&j| !g.adjacent(j, i) || !g.neighbors(j).contains(&i)) {
            return fail(g.n(), format!("edge {} - {} not symmetric", g.vertex(i), g.vertex(j)));
        }
    }
    if degree_sum != 2 * g.edge_count() || g.edges().count() != g.edge_count() {
        return fail(g.n(), "edge count disagrees with degree sum");
    }
    Ok(())
}

pub fn check_connected(g: &TransferGraph) -> CheckResult {
    if !g.is_connected() {
        return fail(g.n(), "graph is disconnected");
    }
    Ok(())
}

pub fn check_antennas(g: &TransferGraph, profile: &ThicknessProfile) -> CheckResult {
    let n = g.n();
    if n < 2 {
        return Ok(());
    }
    for a in [Partition::row(n), Partition::column(n)] {
        let i = g.require_index(&a).map_err(|e| e.to_string())?;
        if g.neighbors(i).len() != 1 {
            return fail(n, format!("antenna {a} has degree {}", g.neighbors(i).len()));
        }
        if profile.tau(i) != 1 {
            return fail(n, format!("antenna {a} has thickness {}", profile.tau(i)));
        }
    }
    Ok(())
}

pub fn check_graph_automorphism(g: &TransferGraph) -> CheckResult {
    let c = conj_index(g);
    for (i, j) in g.edges() {
        if !g.adjacent(c[i], c[j]) {
            return fail(g.n(), format!("conjugation breaks edge {} - {}", g.vertex(i), g.vertex(j)));
        }
    }
    Ok(())
}

pub fn check_left_boundary_path(g: &TransferGraph) -> CheckResult {
    let left = left_boundary(g.n()).map_err(|e| e.to_string())?;
    for w in left.windows(2) {
        let (a, b) = (g.index_of(&w[0]), g.index_of(&w[1]));
        match (a, b) {
            (Some(a), Some(b)) if g.adjacent(a, b) => {}
            _ => return fail(g.n(), format!("{} and {} not adjacent", w[0], w[1])),
        }
    }
    Ok(())
}

pub fn check_framework(g: &TransferGraph, b: &FrameworkSet) -> CheckResult {
    let n = g.n();
    let c = conj_index(g);
    for &a in b.antenna_indices() {
        if !b.contains(a) {
            return fail(n, "framework misses an antenna");
        }
    }
    if let Some(&v) = b.all_vertices.iter().find(|&&v| !b.contains(c[v])) {
        return fail(n, format!("framework not closed under conjugation at {}", g.vertex(v)));
    }
    let path_ok = |family: &[Partition]| {
        family.windows(2).all(|w| match (g.index_of(&w[0]), g.index_of(&w[1])) {
            (Some(a), Some(b)) => g.adjacent(a, b),
            _ => false,
        })
    };
    if !path_ok(&b.main_chain) || !path_ok(&b.left_edge) || !path_ok(&b.right_edge) {
        return fail(n, "a framework family is not a path");
    }
    if n >= 2 && !g.is_connected_within(b.members()) {
        return fail(n, "framework induces a disconnected subgraph");
    }
    Ok(())
}

pub fn check_axis(n: usize) -> CheckResult {
    let axis = self_conjugate_axis(n).map_err(|e| e.to_string())?;
    let expected = distinct_odd_part_count(n);
    if axis.members.len() as u64 != expected {
        return fail(n, format!("{} self-conjugate partitions, expected {expected}", axis.members.len()));
    }
    Ok(())
}

/// With `full`, every vertex is compared with its conjugate; otherwise only
/// `M_n` and `T_{≥3}` are checked as sets.
pub fn check_tau_conjugation(g: &TransferGraph, profile: &ThicknessProfile, full: bool) -> CheckResult {
    let c = conj_index(g);
    if full {
        if let Some(v) = (0..g.vertex_count()).find(|&v| profile.tau(v) != profile.tau(c[v])) {
            return fail(
                g.n(),
                format!(
                    "tau({}) = {} but tau({}) = {}",
                    g.vertex(v),
                    profile.tau(v),
                    g.vertex(c[v]),
                    profile.tau(c[v])
                ),
            );
        }
    }
    set_closed(g, &c, profile.max_locus(), "maximal-thickness locus")?;
    set_closed(g, &c, &threshold_zone(profile, 3), "tetrahedral regime")
}

fn set_closed(g: &TransferGraph, c: &[usize], set: &[usize], what: &str) -> CheckResult {
    let mut members = Bitset::new(g.vertex_count());
    set.iter().for_each(|&v| members.insert(v));
    match set.iter().find(|&&v| !members.contains(c[v])) {
        Some(&v) => fail(g.n(), format!("{what} not closed under conjugation at {}", g.vertex(v))),
        None => Ok(()),
    }
}

pub fn check_oracle(g: &TransferGraph, profile: &ThicknessProfile) -> CheckResult {
    for v in 0..g.vertex_count() {
        let brute = brute_force_at(g, v);
        if brute != profile.tau(v) {
            return fail(
                g.n(),
                format!("tau({}) = {} but exhaustive search gives {brute}", g.vertex(v), profile.tau(v)),
            );
        }
    }
    Ok(())
}

pub fn check_profile_basics(g: &TransferGraph, profile: &ThicknessProfile, b: &FrameworkSet) -> CheckResult {
    let n = g.n();
    for v in 0..g.vertex_count() {
        let (tau, deg) = (profile.tau(v), g.neighbors(v).len());
        if tau > deg {
            return fail(n, format!("tau({}) = {tau} exceeds degree {deg}", g.vertex(v)));
        }
        if (tau == 0) != (deg == 0) {
            return fail(n, format!("tau({}) = {tau} with degree {deg}", g.vertex(v)));
        }
    }
    if profile.tau_max() >= 2 && b.antenna_indices().iter().any(|a| profile.max_locus().contains(a)) {
        return fail(n, "an antenna lies in the maximal-thickness locus");
    }
    Ok(())
}

pub fn check_zones(c: &Computed, full_conjugation: bool) -> CheckResult {
    let (g, b, p) = (&c.graph, &c.framework, &c.profile);
    let n = g.n();
    let conj = conj_index(g);
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    let subset = |a: &[usize], b: &[usize]| a.iter().all(|v| b.binary_search(v).is_ok());

    if n >= 2 {
        if threshold_zone(p, 1) != all {
            return fail(n, "some vertex has thickness 0");
        }
        let d1 = c.zone(1).ok_or_else(|| format!("n = {n}: no order-1 decomposition"))?;
        if d1.shell != all || !d1.core.is_empty() {
            return fail(n, "order-1 shell is not the whole graph");
        }
        let complement: Vec<usize> = all.iter().copied().filter(|&v| p.tau(v) < 2).collect();
        if exact_regime(p, 1) != complement {
            return fail(n, "exact one-dimensional regime is not the complement of T_{>=2}");
        }
    }

    let t2 = threshold_zone(p, 2);
    let sh2 = c.zone(2).map(|z| z.shell.clone()).unwrap_or_default();
    for r in 1..=p.tau_max() + 1 {
        let owned;
        let z = match c.zone(r) {
            Some(z) => z,
            None => {
                owned = decompose(g, b, p, r).map_err(|e| e.to_string())?;
                &owned
            }
        };
        let mut union: Vec<usize> = z.shell.iter().chain(&z.core).copied().collect();
        union.sort_unstable();
        if union != z.threshold_zone || z.shell.iter().any(|v| z.core.binary_search(v).is_ok()) {
            return fail(n, format!("shell and core do not split T_{{>={r}}}"));
        }
        for comp in &z.components {
            let touches = comp.vertices.iter().any(|&v| b.contains(v));
            if touches != comp.boundary_attached {
                return fail(n, format!("wrong attachment flag at order {r}"));
            }
        }
        if r >= 3 && (!subset(&z.threshold_zone, &t2) || !subset(&z.shell, &sh2)) {
            return fail(n, format!("order-{r} zone escapes the triangular regime"));
        }
        if r >= 2 {
            let lower = c.zone(r - 1).map(|z| z.shell.clone()).unwrap_or_default();
            if !subset(&z.shell, &lower) {
                return fail(n, format!("Sh_{r} is not inside Sh_{}", r - 1));
            }
        }
        if full_conjugation {
            for (set, what) in [
                (&z.threshold_zone, "threshold zone"),
                (&z.exact_regime, "exact regime"),
                (&z.shell, "shell"),
                (&z.core, "core"),
            ] {
                set_closed(g, &conj, set, &format!("order-{r} {what}"))?;
            }
        }
    }

    if n >= 2 {
        if b.antenna_indices().iter().any(|a| t2.binary_search(a).is_ok()) {
            return fail(n, "an antenna lies in the triangular regime");
        }
        if let Some(z2) = c.zone(2) {
            for comp in z2.components.iter().filter(|c| c.boundary_attached) {
                let away = comp
                    .vertices
                    .iter()
                    .any(|&v| b.contains(v) && !b.antenna_indices().contains(&v));
                if !away {
                    return fail(n, "a triangular-skin component meets the framework only at antennas");
                }
            }
        }
    }
    Ok(())
}

pub fn check_layout_symmetry(g: &TransferGraph) -> CheckResult {
    let pts = layout_of(g.vertices());
    let c = conj_index(g);
    for (v, p) in pts.iter().enumerate() {
        let q = &pts[c[v]];
        if (p.x, p.y) != (q.y, q.x) {
            return fail(g.n(), format!("layout cell of {} is not transposed by conjugation", g.vertex(v)));
        }
    }
    Ok(())
}

/// Compares against the reference first-occurrence values that fall inside
/// the computed range.
pub fn check_first_occurrences(table: &FirstOccurrenceTable) -> CheckResult {
    let expected: Vec<(usize, usize)> = REFERENCE_FIRST_OCCURRENCES
        .iter()
        .copied()
        .filter(|&(_, n)| n <= table.range_max)
        .collect();
    let found: Vec<(usize, usize)> = table.entries.iter().map(|(&r, &n)| (r, n)).collect();
    if found != expected {
        return Err(format!("range 1..={}: found {found:?}, expected {expected:?}", table.range_max));
    }
    if found.windows(2).any(|w| w[0].1 >= w[1].1) {
        return Err(format!("first occurrences not strictly increasing: {found:?}"));
    }
    Ok(())
}

pub fn check_max_locus_reference(g: &TransferGraph, profile: &ThicknessProfile) -> CheckResult {
    let Some(&(n, tau_max, size, members)) = REFERENCE_MAX_LOCI.iter().find(|row| row.0 == g.n()) else {
        return Ok(());
    };
    if (profile.tau_max(), profile.max_locus().len()) != (tau_max, size) {
        return fail(
            n,
            format!(
                "(tau_max, |M_n|) = ({}, {}), expected ({tau_max}, {size})",
                profile.tau_max(),
                profile.max_locus().len()
            ),
        );
    }
    for m in members {
        let lambda: Partition = m.parse().map_err(|e: crate::Error| e.to_string())?;
        let v = g.require_index(&lambda).map_err(|e| e.to_string())?;
        if !profile.max_locus().contains(&v) {
            return fail(n, format!("{m} is not in the maximal-thickness locus"));
        }
    }
    Ok(())
}

/// For `7 <= n <= 30`: `M_n` stays at graph distance at least 2 from both
/// antennas.
pub fn check_locus_away_from_antennas(g: &TransferGraph, profile: &ThicknessProfile, b: &FrameworkSet) -> CheckResult {
    if !(7..=30).contains(&g.n()) {
        return Ok(());
    }
    let dist = g.distances_from(b.antenna_indices());
    for &v in profile.max_locus() {
        match dist[v] {
            Some(d) if d >= 2 => {}
            d => return fail(g.n(), format!("{} at distance {d:?} from an antenna", g.vertex(v))),
        }
    }
    Ok(())
}

pub fn check_render_determinism(c: &Computed) -> CheckResult {
    for mode in [AtlasMode::Thickness, AtlasMode::Zones] {
        let render = || {
            render_atlas(&c.graph, &c.framework, &c.profile, mode, Some(c.profile.max_locus()))
                .map_err(|e| e.to_string())
        };
        if render()? != render()? {
            return fail(c.n(), format!("{} render is not deterministic", mode.as_str()));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.outcome, Outcome::Fail(_)))
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| matches!(c.outcome, Outcome::Fail(_)))
    }

    fn push(&mut self, name: &'static str, outcome: Outcome) {
        self.checks.push(Check { name, outcome });
    }

    /// Runs `check` over every item, stopping at the first failure.
    fn over<T>(&mut self, name: &'static str, items: &[T], check: impl Fn(&T) -> CheckResult) {
        let outcome = match items.iter().map(check).find_map(Result::err) {
            Some(msg) => Outcome::Fail(msg),
            None if items.is_empty() => Outcome::Skipped("nothing in range".into()),
            None => Outcome::Pass,
        };
        self.push(name, outcome);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.outcome {
                Outcome::Pass => writeln!(f, "PASS  {}", c.name)?,
                Outcome::Fail(msg) => writeln!(f, "FAIL  {}: {msg}", c.name)?,
                Outcome::Skipped(why) => writeln!(f, "SKIP  {} ({why})", c.name)?,
            }
        }
        let failed = self.failures().count();
        write!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

/// Runs every check over `n_min..=n_max`. Range-level tables are built from
/// `1..=n_max` so first occurrences are always well defined.
pub fn run(n_min: usize, n_max: usize, jobs: usize) -> Result<Report> {
    let all = with_jobs(jobs, || compute_range(1, n_max, true))?;
    Ok(run_on(&all, n_min))
}

/// `all[i]` must hold `n = i + 1`.
pub fn run_on(all: &[Computed], n_min: usize) -> Report {
    let range: Vec<&Computed> = all.iter().filter(|c| c.n() >= n_min).collect();
    let sub = |pred: &dyn Fn(usize) -> bool| -> Vec<&Computed> {
        range.iter().copied().filter(|c| pred(c.n())).collect()
    };
    let mut report = Report::default();

    report.over("partition counts match the pentagonal recurrence", &range, |c| {
        check_partition_count(c.graph.vertices(), c.n())
    });
    report.over("conjugation is an involution swapping largest part and length", &range, |c| {
        check_conjugation_involution(c.graph.vertices())
    });
    report.over("adjacency is symmetric, irreflexive and simple", &range, |c| {
        check_graph_structure(&c.graph)
    });
    report.over("G_n is connected for n >= 2", &sub(&|n| n >= 2), |c| check_connected(&c.graph));
    report.over("antennas have degree 1 and thickness 1", &range, |c| {
        check_antennas(&c.graph, &c.profile)
    });
    report.over(
        "conjugation is a graph automorphism (n <= 20)",
        &sub(&|n| n <= FULL_CONJUGATION_MAX_N),
        |c| check_graph_automorphism(&c.graph),
    );
    report.over("left boundary edge is a path", &range, |c| check_left_boundary_path(&c.graph));
    report.over("framework holds the antennas, is conjugation-closed and connected", &range, |c| {
        check_framework(&c.graph, &c.framework)
    });
    report.over("axis size equals the distinct-odd-parts count", &range, |c| check_axis(c.n()));
    report.over("thickness is conjugation-invariant (full check n <= 20)", &range, |c| {
        check_tau_conjugation(&c.graph, &c.profile, c.n() <= FULL_CONJUGATION_MAX_N)
    });
    report.over(
        "branch-and-bound agrees with exhaustive clique search (n <= 12)",
        &sub(&|n| n <= ORACLE_MAX_N),
        |c| check_oracle(&c.graph, &c.profile),
    );
    report.over("thickness bounded by degree; antennas outside M_n", &range, |c| {
        check_profile_basics(&c.graph, &c.profile, &c.framework)
    });
    report.over("zones, shells and cores satisfy nesting and symmetry", &range, |c| {
        check_zones(c, c.n() <= FULL_CONJUGATION_MAX_N)
    });
    report.over("layout cells transpose under conjugation", &range, |c| {
        check_layout_symmetry(&c.graph)
    });
    report.over("maximal loci match the reference rows", &range, |c| {
        check_max_locus_reference(&c.graph, &c.profile)
    });
    report.over(
        "maximal locus stays at distance >= 2 from the antennas (7 <= n <= 30)",
        &sub(&|n| (7..=30).contains(&n)),
        |c| check_locus_away_from_antennas(&c.graph, &c.profile, &c.framework),
    );
    report.over("atlas rendering is deterministic (n <= 12)", &sub(&|n| n <= 12), |c| {
        check_render_determinism(c)
    });

    let profiles: Vec<ThicknessProfile> = all.iter().map(|c| c.profile.clone()).collect();
    let outcome = match export_tables(&profiles) {
        Ok(t) => match check_first_occurrences(&t.first_occurrence) {
            Ok(()) => Outcome::Pass,
            Err(msg) => Outcome::Fail(msg),
        },
        Err(e) => Outcome::Fail(e.to_string()),
    };
    report.push("first-occurrence table matches the reference values", outcome);
    report
}

/// Convenience for the oracle-equivalence criterion without a full run.
pub fn oracle_agrees_up_to(max_n: usize) -> Result<CheckResult> {
    for n in 1..=max_n {
        let c = Computed::new(n, false)?;
        if let Err(e) = check_oracle(&c.graph, &c.profile) {
            return Ok(Err(e));
        }
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_partitions;

    #[test]
    fn pentagonal_recurrence() {
        let p = partition_counts(10);
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn distinct_odd_parts() {
        let counts: Vec<u64> = (1..=8).map(distinct_odd_part_count).collect();
        assert_eq!(counts, vec![1, 0, 1, 1, 1, 1, 1, 2]);
    }

    #[test]
    fn enumeration_count_is_checked_independently() {
        let parts = enumerate_partitions(9).unwrap();
        assert!(check_partition_count(&parts, 9).is_ok());
        assert!(check_partition_count(&parts[1..], 9).is_err());
    }

    #[test]
    fn corrupted_profile_fails_conjugation_check() {
        let g = TransferGraph::build(7).unwrap();
        let good = crate::thickness::thickness_profile(&g);
        assert!(check_tau_conjugation(&g, &good, true).is_ok());
        let mut tau = good.values().to_vec();
        // (4,2,1) has conjugate (3,2,1,1); break the symmetry on one side.
        let v = g.index_of(&"4,2,1".parse().unwrap()).unwrap();
        tau[v] = 2;
        let bad = ThicknessProfile::from_values(7, tau).unwrap();
        assert!(check_tau_conjugation(&g, &bad, true).is_err());
    }

    #[test]
    fn small_range_report_passes() {
        let all = compute_range(1, 8, false).unwrap();
        let report = run_on(&all, 1);
        assert!(report.passed(), "{report}");
        assert!(report.to_string().contains("PASS  first-occurrence table"));
    }
}
