//! The partition transfer graph `G_n`: vertices are the partitions of `n`,
//! edges are elementary one-unit transfers between parts followed by
//! reordering.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::io::Write;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, Partition};

/// Every partition reachable from `lambda` by one elementary transfer.
///
/// A move takes one unit from a source part (which disappears if it reaches
/// zero) and gives it to a different existing part or to a new part of size
/// one, then re-sorts. Outcomes are deduplicated and `lambda` itself is
/// never returned.
pub fn transfer_neighbors(lambda: &Partition) -> BTreeSet<Partition> {
    let parts = lambda.parts();
    let len = parts.len();
    let mut out = BTreeSet::new();
    for source in 0..len {
        // `target == len` stands for a fresh part of size one.
        for target in 0..=len {
            if target == source {
                continue;
            }
            let mut moved = parts.to_vec();
            moved[source] -= 1;
            if target == len {
                moved.push(1);
            } else {
                moved[target] += 1;
            }
            let mu = Partition::from_unsorted(moved);
            if mu != *lambda {
                out.insert(mu);
            }
        }
    }
    out
}

/// Immutable adjacency structure over `Par(n)` in canonical vertex order.
#[derive(Debug, Clone)]
pub struct TransferGraph {
    n: usize,
    vertices: Vec<Partition>,
    index: HashMap<Partition, usize>,
    adjacency: Vec<Vec<usize>>,
    rows: Vec<Bitset>,
}

impl TransferGraph {
    pub fn build(n: usize) -> Result<Self> {
        let vertices = enumerate_partitions(n)?;
        let index: HashMap<Partition, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let count = vertices.len();

        let mut adjacency = Vec::with_capacity(count);
        let mut rows = Vec::with_capacity(count);
        for lambda in &vertices {
            let mut list: Vec<usize> = transfer_neighbors(lambda)
                .iter()
                .map(|mu| index[mu])
                .collect();
            list.sort_unstable();
            let mut row = Bitset::new(count);
            list.iter().for_each(|&j| row.insert(j));
            adjacency.push(list);
            rows.push(row);
        }

        // The move set is closed under reversal; check it rather than assume it.
        for (i, list) in adjacency.iter().enumerate() {
            assert!(!rows[i].contains(i), "self-loop at {}", vertices[i]);
            for &j in list {
                assert!(
                    rows[j].contains(i),
                    "asymmetric transfer {} -> {}",
                    vertices[i],
                    vertices[j]
                );
            }
        }

        Ok(Self {
            n,
            vertices,
            index,
            adjacency,
            rows,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Partition] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Partition {
        &self.vertices[i]
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// Like [`index_of`](Self::index_of) but reports a domain error.
    pub fn require_index(&self, lambda: &Partition) -> Result<usize> {
        self.index_of(lambda).ok_or_else(|| Error::NotInGraph {
            partition: lambda.to_string(),
            n: self.n,
        })
    }

    /// Sorted neighbor indices of vertex `i`.
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    /// Adjacency row of vertex `i` as a bitset over all vertices.
    pub fn row(&self, i: usize) -> &Bitset {
        &self.rows[i]
    }

    #[inline]
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn degree(&self, lambda: &Partition) -> Result<usize> {
        Ok(self.adjacency[self.require_index(lambda)?].len())
    }

    /// Edges `(i, j)` with `i < j`, ordered lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// Breadth-first reachability from vertex 0.
    pub fn is_connected(&self) -> bool {
        let within = Bitset::full(self.vertex_count());
        self.is_connected_within(&within)
    }

    /// Whether the induced subgraph on `subset` is connected. The empty set
    /// counts as connected.
    pub fn is_connected_within(&self, subset: &Bitset) -> bool {
        let Some(start) = subset.first() else {
            return true;
        };
        let mut seen = Bitset::new(self.vertex_count());
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &u in &self.adjacency[v] {
                if subset.contains(u) && !seen.contains(u) {
                    seen.insert(u);
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == subset.count()
    }

    /// Graph distance from the nearest member of `sources` to every vertex.
    pub fn distances_from(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let next = dist[v].map(|d| d + 1);
            for &u in &self.adjacency[v] {
                if dist[u].is_none() {
                    dist[u] = next;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    /// Writes one `λ<TAB>μ` line per edge in canonical order.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (i, j) in self.edges() {
            writeln!(out, "{}\t{}", self.vertices[i], self.vertices[j])?;
        }
        Ok(())
    }
}
