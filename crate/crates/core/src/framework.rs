//! The boundary framework `B_n` (antennas, main chain, left and right
//! boundary edges) and the self-conjugate axis.

use serde::Serialize;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::TransferGraph;
use crate::partition::{enumerate_partitions, Partition};

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    Ok(())
}

/// `((n), (1^n))`; both coincide at `(1)` when `n = 1`.
pub fn antennas(n: usize) -> Result<(Partition, Partition)> {
    check_size(n)?;
    Ok((Partition::row(n), Partition::column(n)))
}

/// `(n), (n-1,1), (n-2,1,1), ..., (1^n)`.
pub fn main_chain(n: usize) -> Result<Vec<Partition>> {
    check_size(n)?;
    let mut chain = vec![Partition::row(n)];
    for k in 1..n {
        let mut parts = vec![n - k];
        parts.extend(std::iter::repeat_n(1, k));
        chain.push(Partition::new(parts)?);
    }
    Ok(chain)
}

/// Two-part partitions `(n-k, k)` for `1 <= k <= n/2`.
pub fn left_boundary(n: usize) -> Result<Vec<Partition>> {
    check_size(n)?;
    (1..=n / 2).map(|k| Partition::new(vec![n - k, k])).collect()
}

/// `(2^k, 1^(n-2k))` for `1 <= k <= n/2`; entrywise conjugate of the left edge.
pub fn right_boundary(n: usize) -> Result<Vec<Partition>> {
    check_size(n)?;
    (1..=n / 2)
        .map(|k| {
            let mut parts = vec![2; k];
            parts.extend(std::iter::repeat_n(1, n - 2 * k));
            Partition::new(parts)
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct FrameworkSet {
    pub n: usize,
    pub antennas: (Partition, Partition),
    pub main_chain: Vec<Partition>,
    pub left_edge: Vec<Partition>,
    pub right_edge: Vec<Partition>,
    /// Sorted, deduplicated vertex indices of the union.
    pub all_vertices: Vec<usize>,
    #[serde(skip)]
    members: Bitset,
    #[serde(skip)]
    antenna_indices: Vec<usize>,
}

impl FrameworkSet {
    /// Indices of the antennas in `g` (one entry when `n = 1`).
    pub fn antenna_indices(&self) -> &[usize] {
        &self.antenna_indices
    }

    pub fn contains(&self, index: usize) -> bool {
        self.members.contains(index)
    }

    pub fn members(&self) -> &Bitset {
        &self.members
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

pub fn boundary_framework(g: &TransferGraph) -> Result<FrameworkSet> {
    let n = g.n();
    let main_chain = main_chain(n)?;
    let left_edge = left_boundary(n)?;
    let right_edge = right_boundary(n)?;
    let (row, column) = antennas(n)?;
    let mut antenna_indices = vec![g.require_index(&row)?, g.require_index(&column)?];
    antenna_indices.dedup();
    let mut members = Bitset::new(g.vertex_count());
    for lambda in main_chain.iter().chain(&left_edge).chain(&right_edge) {
        members.insert(g.require_index(lambda)?);
    }
    Ok(FrameworkSet {
        n,
        antennas: (row, column),
        main_chain,
        left_edge,
        right_edge,
        all_vertices: members.iter().collect(),
        members,
        antenna_indices,
    })
}

/// The self-conjugate partitions of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxisSet {
    pub n: usize,
    pub members: Vec<Partition>,
}

pub fn self_conjugate_axis(n: usize) -> Result<AxisSet> {
    let members = enumerate_partitions(n)?
        .into_iter()
        .filter(Partition::is_self_conjugate)
        .collect();
    Ok(AxisSet { n, members })
}
