//! Brute-force reference for simplicial thickness.
//!
//! Enumerates every clique of the neighborhood subgraph by unpruned
//! recursive extension over sorted adjacency lists. Shares no search code
//! with [`crate::clique`]; intended for small `n` only.

use crate::error::Result;
use crate::graph::TransferGraph;
use crate::partition::Partition;

pub fn brute_force_local_dimension(g: &TransferGraph, lambda: &Partition) -> Result<usize> {
    Ok(brute_force_at(g, g.require_index(lambda)?))
}

pub fn brute_force_at(g: &TransferGraph, v: usize) -> usize {
    let nbhd = g.neighbors(v);
    let mut best = 0;
    let mut clique = Vec::new();
    extend(g, nbhd, 0, &mut clique, &mut best);
    best
}

fn linked(g: &TransferGraph, a: usize, b: usize) -> bool {
    g.neighbors(a).binary_search(&b).is_ok()
}

fn extend(g: &TransferGraph, pool: &[usize], start: usize, clique: &mut Vec<usize>, best: &mut usize) {
    *best = (*best).max(clique.len());
    for k in start..pool.len() {
        let w = pool[k];
        if clique.iter().all(|&c| linked(g, c, w)) {
            clique.push(w);
            extend(g, pool, k + 1, clique, best);
            clique.pop();
        }
    }
}
