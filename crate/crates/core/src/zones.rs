//! Threshold zones `T_{≥r}`, exact regimes `T_{=r}`, and the split of each
//! threshold zone into a boundary-attached shell and an interior core.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::framework::FrameworkSet;
use crate::graph::TransferGraph;
use crate::partition::Partition;
use crate::thickness::ThicknessProfile;

/// Disjoint-set forest whose roots are always the smallest member.
struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// `{v : τ(v) ≥ r}` in canonical order.
pub fn threshold_zone(profile: &ThicknessProfile, r: usize) -> Vec<usize> {
    (0..profile.vertex_count()).filter(|&v| profile.tau(v) >= r).collect()
}

/// `{v : τ(v) = r}` in canonical order.
pub fn exact_regime(profile: &ThicknessProfile, r: usize) -> Vec<usize> {
    (0..profile.vertex_count()).filter(|&v| profile.tau(v) == r).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZoneComponent {
    pub vertices: Vec<usize>,
    pub boundary_attached: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZoneDecomposition {
    pub n: usize,
    pub r: usize,
    pub threshold_zone: Vec<usize>,
    pub exact_regime: Vec<usize>,
    /// Components of `G_n[T_{≥r}]`, ordered by smallest member.
    pub components: Vec<ZoneComponent>,
    pub shell: Vec<usize>,
    pub core: Vec<usize>,
}

pub fn decompose(
    g: &TransferGraph,
    framework: &FrameworkSet,
    profile: &ThicknessProfile,
    r: usize,
) -> Result<ZoneDecomposition> {
    let n = g.n();
    for found in [framework.n, profile.n()] {
        if found != n {
            return Err(Error::MismatchedSize { expected: n, found });
        }
    }
    if profile.vertex_count() != g.vertex_count() {
        return Err(Error::MismatchedSize {
            expected: g.vertex_count(),
            found: profile.vertex_count(),
        });
    }

    let zone = threshold_zone(profile, r);
    let in_zone = |v: usize| profile.tau(v) >= r;
    let mut uf = UnionFind::new(g.vertex_count());
    for &v in &zone {
        for &u in g.neighbors(v) {
            if u > v && in_zone(u) {
                uf.union(u, v);
            }
        }
    }

    let mut grouped: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &v in &zone {
        grouped.entry(uf.find(v)).or_default().push(v);
    }
    let components: Vec<ZoneComponent> = grouped
        .into_values()
        .map(|vertices| {
            let boundary_attached = vertices.iter().any(|&v| framework.contains(v));
            ZoneComponent {
                vertices,
                boundary_attached,
            }
        })
        .collect();

    let mut shell = Vec::new();
    let mut core = Vec::new();
    for c in &components {
        let target = if c.boundary_attached { &mut shell } else { &mut core };
        target.extend_from_slice(&c.vertices);
    }
    shell.sort_unstable();
    core.sort_unstable();

    Ok(ZoneDecomposition {
        n,
        r,
        exact_regime: exact_regime(profile, r),
        threshold_zone: zone,
        components,
        shell,
        core,
    })
}

impl ZoneDecomposition {
    /// JSON export with partitions written in canonical text form.
    pub fn to_json(&self, vertices: &[Partition]) -> Result<String> {
        #[derive(Serialize)]
        struct Component<'a> {
            vertices: Vec<&'a Partition>,
            boundary_attached: bool,
        }
        #[derive(Serialize)]
        struct Out<'a> {
            n: usize,
            r: usize,
            threshold: Vec<&'a Partition>,
            exact: Vec<&'a Partition>,
            shell: Vec<&'a Partition>,
            core: Vec<&'a Partition>,
            components: Vec<Component<'a>>,
        }
        let names = |set: &[usize]| set.iter().map(|&v| &vertices[v]).collect::<Vec<_>>();
        let out = Out {
            n: self.n,
            r: self.r,
            threshold: names(&self.threshold_zone),
            exact: names(&self.exact_regime),
            shell: names(&self.shell),
            core: names(&self.core),
            components: self
                .components
                .iter()
                .map(|c| Component {
                    vertices: names(&c.vertices),
                    boundary_attached: c.boundary_attached,
                })
                .collect(),
        };
        Ok(serde_json::to_string_pretty(&out)?)
    }
}

/// First `n` at which each order `r ≥ 2` is realized, over `1..=range_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FirstOccurrenceTable {
    pub entries: BTreeMap<usize, usize>,
    pub range_max: usize,
}

impl FirstOccurrenceTable {
    /// `None` means no `n ≤ range_max` realizes order `r`; it says nothing
    /// about larger `n`.
    pub fn get(&self, r: usize) -> Option<usize> {
        self.entries.get(&r).copied()
    }

    /// `r,n_r` rows; an empty table gets a comment line instead of rows.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,n_r\n");
        if self.entries.is_empty() {
            out.push_str(&format!(
                "# no vertex of thickness >= 2 occurs for n <= {}\n",
                self.range_max
            ));
        }
        for (r, n) in &self.entries {
            out.push_str(&format!("{r},{n}\n"));
        }
        out
    }
}

/// `profiles[i]` must be the profile for `n = i + 1`.
pub fn first_occurrences(profiles: &[ThicknessProfile]) -> Result<FirstOccurrenceTable> {
    for (i, p) in profiles.iter().enumerate() {
        if p.n() != i + 1 {
            return Err(Error::IncompleteRange(format!(
                "position {i} holds n = {}, expected {}",
                p.n(),
                i + 1
            )));
        }
    }
    let mut entries = BTreeMap::new();
    for p in profiles {
        for r in 2..=p.tau_max() {
            entries.entry(r).or_insert(p.n());
        }
    }
    Ok(FirstOccurrenceTable {
        entries,
        range_max: profiles.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::boundary_framework;
    use crate::thickness::thickness_profile;

    fn setup(n: usize) -> (TransferGraph, FrameworkSet, ThicknessProfile) {
        let g = TransferGraph::build(n).unwrap();
        let b = boundary_framework(&g).unwrap();
        let p = thickness_profile(&g);
        (g, b, p)
    }

    #[test]
    fn union_find_keeps_smallest_root() {
        let mut uf = UnionFind::new(6);
        uf.union(5, 3);
        uf.union(3, 4);
        uf.union(4, 1);
        assert_eq!(uf.find(5), 1);
        assert_eq!(uf.find(0), 0);
    }

    #[test]
    fn zones_of_four() {
        let (g, b, p) = setup(4);
        assert_eq!(threshold_zone(&p, 2), vec![1, 2, 3]);
        assert_eq!(threshold_zone(&p, 1), vec![0, 1, 2, 3, 4]);
        assert_eq!(exact_regime(&p, 1), vec![0, 4]);
        assert!(exact_regime(&p, 3).is_empty());

        let d = decompose(&g, &b, &p, 2).unwrap();
        assert_eq!(d.shell, vec![1, 2, 3]);
        assert!(d.core.is_empty());
        assert_eq!(d.components.len(), 1);

        let d1 = decompose(&g, &b, &p, 1).unwrap();
        assert_eq!(d1.shell, vec![0, 1, 2, 3, 4]);
        assert!(d1.core.is_empty());
    }

    #[test]
    fn zone_of_one() {
        let (g, b, p) = setup(1);
        assert!(threshold_zone(&p, 1).is_empty());
        let d0 = decompose(&g, &b, &p, 0).unwrap();
        assert_eq!(d0.shell, vec![0]);
    }

    #[test]
    fn mismatched_inputs() {
        let (g, b, _) = setup(4);
        let (_, _, p5) = setup(5);
        assert!(matches!(
            decompose(&g, &b, &p5, 2),
            Err(Error::MismatchedSize { expected: 4, found: 5 })
        ));
    }

    #[test]
    fn first_occurrence_small_ranges() {
        let profiles: Vec<_> = (1..=6).map(|n| setup(n).2).collect();
        let t = first_occurrences(&profiles).unwrap();
        assert_eq!(t.entries, BTreeMap::from([(2, 4)]));
        assert_eq!(t.get(3), None);
        assert_eq!(t.to_csv(), "r,n_r\n2,4\n");

        let t3 = first_occurrences(&profiles[..3]).unwrap();
        assert!(t3.entries.is_empty());
        assert!(t3.to_csv().starts_with("r,n_r\n# "));

        assert!(first_occurrences(&profiles[1..]).is_err());
    }

    #[test]
    fn json_uses_partition_text() {
        let (g, b, p) = setup(4);
        let json = decompose(&g, &b, &p, 2).unwrap().to_json(g.vertices()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["shell"], serde_json::json!(["3,1", "2,2", "2,1,1"]));
        assert_eq!(v["components"][0]["boundary_attached"], serde_json::json!(true));
    }
}
