//! Simplicial thickness: the dimension of the largest clique-complex simplex
//! through each vertex of `G_n`.
//!
//! Every clique through `v` is `{v} ∪ C` for a clique `C` of the subgraph
//! induced on the neighbors of `v`, so the thickness of `v` is exactly the
//! maximum clique size of that neighborhood subgraph.

use rayon::prelude::*;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::bitset::Bitset;
use crate::clique::maximum_clique;
use crate::error::{Error, Result};
use crate::graph::TransferGraph;
use crate::partition::{enumerate_partitions, Partition};

/// Induced adjacency on the neighborhood of `v`, indexed by position in
/// `g.neighbors(v)`.
fn neighborhood_rows(g: &TransferGraph, v: usize) -> Vec<Bitset> {
    let nbhd = g.neighbors(v);
    let width = nbhd.len();
    nbhd.iter()
        .map(|&a| {
            let global = g.row(a);
            let mut row = Bitset::new(width);
            for (k, &b) in nbhd.iter().enumerate() {
                if global.contains(b) {
                    row.insert(k);
                }
            }
            row
        })
        .collect()
}

/// Thickness of the vertex with index `v`.
pub fn thickness_at(g: &TransferGraph, v: usize) -> usize {
    maximum_clique(&neighborhood_rows(g, v)).len()
}

/// One maximum clique through `v`, as sorted vertex indices including `v`.
pub fn clique_witness(g: &TransferGraph, v: usize) -> Vec<usize> {
    let nbhd = g.neighbors(v);
    let mut clique: Vec<usize> = maximum_clique(&neighborhood_rows(g, v))
        .into_iter()
        .map(|k| nbhd[k])
        .collect();
    clique.push(v);
    clique.sort_unstable();
    clique
}

/// `τ_n(λ)`: size of the largest clique of `G_n` containing `λ`, minus one.
/// Zero for an isolated vertex.
pub fn local_simplex_dimension(g: &TransferGraph, lambda: &Partition) -> Result<usize> {
    Ok(thickness_at(g, g.require_index(lambda)?))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThicknessProfile {
    n: usize,
    tau: Vec<usize>,
    tau_max: usize,
    max_locus: Vec<usize>,
}

impl ThicknessProfile {
    /// Wraps per-vertex values given in canonical vertex order.
    pub fn from_values(n: usize, tau: Vec<usize>) -> Result<Self> {
        let tau_max = *tau.iter().max().ok_or(Error::EmptySet)?;
        let max_locus = (0..tau.len()).filter(|&v| tau[v] == tau_max).collect();
        Ok(Self {
            n,
            tau,
            tau_max,
            max_locus,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau(&self, v: usize) -> usize {
        self.tau[v]
    }

    pub fn values(&self) -> &[usize] {
        &self.tau
    }

    pub fn vertex_count(&self) -> usize {
        self.tau.len()
    }

    pub fn tau_max(&self) -> usize {
        self.tau_max
    }

    /// Indices of `M_n`, in canonical order.
    pub fn max_locus(&self) -> &[usize] {
        &self.max_locus
    }

    /// `partition,tau` rows in canonical order.
    pub fn to_csv(&self, vertices: &[Partition]) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["partition", "tau"])?;
        for (lambda, tau) in vertices.iter().zip(&self.tau) {
            w.write_record([lambda.to_string(), tau.to_string()])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Reads back the output of [`to_csv`](Self::to_csv), checking that rows
    /// follow the canonical order for `n`.
    pub fn from_csv(n: usize, text: &str) -> Result<Self> {
        let bad = |reason: String| Error::Artifact {
            path: format!("profile for n = {n}"),
            reason,
        };
        let expected = enumerate_partitions(n)?;
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let mut tau = Vec::with_capacity(expected.len());
        for (i, record) in reader.records().enumerate() {
            let record = record?;
            let (Some(lambda), Some(value)) = (record.get(0), record.get(1)) else {
                return Err(bad(format!("row {i} has fewer than two fields")));
            };
            let lambda: Partition = lambda.parse()?;
            if expected.get(i) != Some(&lambda) {
                return Err(bad(format!("row {i} is {lambda}, out of canonical order")));
            }
            tau.push(value.parse().map_err(|_| bad(format!("bad tau {value:?}")))?);
        }
        if tau.len() != expected.len() {
            return Err(bad(format!("{} rows, expected {}", tau.len(), expected.len())));
        }
        Self::from_values(n, tau)
    }

    /// JSON with `n`, `tau_max`, `max_locus` and the full map, keys in
    /// canonical vertex order.
    pub fn to_json(&self, vertices: &[Partition], extra_note: Option<&str>) -> Result<String> {
        Ok(serde_json::to_string_pretty(&ProfileJson {
            profile: self,
            vertices,
            note: extra_note,
        })?)
    }
}

struct ProfileJson<'a> {
    profile: &'a ThicknessProfile,
    vertices: &'a [Partition],
    note: Option<&'a str>,
}

struct OrderedTau<'a>(&'a [Partition], &'a [usize]);

impl Serialize for OrderedTau<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (lambda, tau) in self.0.iter().zip(self.1) {
            map.serialize_entry(&lambda.to_string(), tau)?;
        }
        map.end()
    }
}

impl Serialize for ProfileJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let p = self.profile;
        let locus: Vec<&Partition> = p.max_locus.iter().map(|&v| &self.vertices[v]).collect();
        let mut st = s.serialize_struct("ThicknessProfile", 5)?;
        st.serialize_field("n", &p.n)?;
        st.serialize_field("tau_max", &p.tau_max)?;
        st.serialize_field("max_locus", &locus)?;
        st.serialize_field("tau", &OrderedTau(self.vertices, &p.tau))?;
        if let Some(note) = self.note {
            st.serialize_field("note", note)?;
        }
        st.end()
    }
}

/// Exact thickness of every vertex, computed sequentially.
pub fn thickness_profile(g: &TransferGraph) -> ThicknessProfile {
    let tau = (0..g.vertex_count()).map(|v| thickness_at(g, v)).collect();
    ThicknessProfile::from_values(g.n(), tau).expect("a graph has at least one vertex")
}

/// Same result as [`thickness_profile`], spread over the current rayon pool.
pub fn thickness_profile_par(g: &TransferGraph) -> ThicknessProfile {
    let tau = (0..g.vertex_count())
        .into_par_iter()
        .map(|v| thickness_at(g, v))
        .collect();
    ThicknessProfile::from_values(g.n(), tau).expect("a graph has at least one vertex")
}

/// `M_n` as partitions, in canonical order.
pub fn max_thickness_locus<'g>(g: &'g TransferGraph, profile: &ThicknessProfile) -> Vec<&'g Partition> {
    profile.max_locus().iter().map(|&v| g.vertex(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn isolated_vertex_has_thickness_zero() {
        let g = TransferGraph::build(1).unwrap();
        assert_eq!(local_simplex_dimension(&g, &p("1")).unwrap(), 0);
        let prof = thickness_profile(&g);
        assert_eq!(prof.tau_max(), 0);
        assert_eq!(prof.max_locus(), &[0]);
    }

    #[test]
    fn profile_of_four() {
        let g = TransferGraph::build(4).unwrap();
        let prof = thickness_profile(&g);
        assert_eq!(prof.values(), &[1, 2, 2, 2, 1]);
        assert_eq!(prof.tau_max(), 2);
        assert_eq!(prof.max_locus(), &[1, 2, 3]);
        assert_eq!(clique_witness(&g, 1), vec![1, 2, 3]);
    }

    #[test]
    fn two_has_everything_maximal() {
        let g = TransferGraph::build(2).unwrap();
        let prof = thickness_profile(&g);
        let locus: Vec<String> = max_thickness_locus(&g, &prof).iter().map(|l| l.to_string()).collect();
        assert_eq!(locus, ["2", "1,1"]);
    }

    #[test]
    fn foreign_partition_is_rejected() {
        let g = TransferGraph::build(4).unwrap();
        assert!(local_simplex_dimension(&g, &p("5")).is_err());
    }

    #[test]
    fn csv_round_trip_and_validation() {
        let g = TransferGraph::build(4).unwrap();
        let prof = thickness_profile(&g);
        let csv = prof.to_csv(g.vertices()).unwrap();
        assert_eq!(csv, "partition,tau\n4,1\n\"3,1\",2\n\"2,2\",2\n\"2,1,1\",2\n\"1,1,1,1\",1\n");
        assert_eq!(ThicknessProfile::from_csv(4, &csv).unwrap(), prof);
        let swapped = csv.replace("\"3,1\",2\n\"2,2\",2", "\"2,2\",2\n\"3,1\",2");
        assert!(ThicknessProfile::from_csv(4, &swapped).is_err());
        assert!(ThicknessProfile::from_csv(5, &csv).is_err());
    }

    #[test]
    fn json_keeps_canonical_key_order() {
        let g = TransferGraph::build(3).unwrap();
        let json = thickness_profile(&g).to_json(g.vertices(), None).unwrap();
        let a = json.find("\"3\": 1").unwrap();
        let b = json.find("\"2,1\": 1").unwrap();
        let c = json.find("\"1,1,1\": 1").unwrap();
        assert!(a < b && b < c);
    }
}
