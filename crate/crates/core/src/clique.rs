//! Exact maximum clique search on small dense graphs given as bitset rows.
//!
//! Branch and bound with a greedy sequential-coloring upper bound: the
//! candidate set is colored into independent classes, vertices are tried in
//! reverse coloring order, and a branch is cut as soon as the current clique
//! plus the color number of the remaining candidates cannot beat the
//! incumbent. Vertices are relabelled by degeneracy order first so that the
//! densest core is colored first.

use crate::bitset::Bitset;

/// A maximum clique of the graph whose adjacency rows are `rows`
/// (`rows[i]` has width `rows.len()` and must not contain `i`).
/// Returned vertex ids are sorted. Empty input gives an empty clique.
pub fn maximum_clique(rows: &[Bitset]) -> Vec<usize> {
    let count = rows.len();
    if count == 0 {
        return Vec::new();
    }
    let order = degeneracy_order(rows);
    let relabelled = relabel(rows, &order);

    let mut search = Search {
        rows: &relabelled,
        best: Vec::new(),
    };
    let mut clique = Vec::with_capacity(count);
    search.expand(&mut clique, Bitset::full(count));

    let mut best: Vec<usize> = search.best.iter().map(|&v| order[v]).collect();
    best.sort_unstable();
    best
}

/// Vertices ordered so that the last one removed by repeated min-degree
/// peeling comes first.
fn degeneracy_order(rows: &[Bitset]) -> Vec<usize> {
    let count = rows.len();
    let mut degree: Vec<usize> = rows.iter().map(Bitset::count).collect();
    let mut alive = Bitset::full(count);
    let mut removed = Vec::with_capacity(count);
    while let Some(v) = alive.iter().min_by_key(|&v| (degree[v], v)) {
        alive.remove(v);
        removed.push(v);
        for u in rows[v].iter() {
            if alive.contains(u) {
                degree[u] -= 1;
            }
        }
    }
    removed.reverse();
    removed
}

/// Rows of the graph after renaming `order[k]` to `k`.
fn relabel(rows: &[Bitset], order: &[usize]) -> Vec<Bitset> {
    let count = rows.len();
    let mut position = vec![0; count];
    for (k, &v) in order.iter().enumerate() {
        position[v] = k;
    }
    order
        .iter()
        .map(|&v| {
            let mut row = Bitset::new(count);
            rows[v].iter().for_each(|u| row.insert(position[u]));
            row
        })
        .collect()
}

struct Search<'a> {
    rows: &'a [Bitset],
    best: Vec<usize>,
}

impl Search<'_> {
    fn expand(&mut self, clique: &mut Vec<usize>, mut candidates: Bitset) {
        let (order, colors) = self.color(&candidates);
        for k in (0..order.len()).rev() {
            if clique.len() + colors[k] <= self.best.len() {
                return;
            }
            let v = order[k];
            clique.push(v);
            let next = candidates.intersection(&self.rows[v]);
            if next.is_empty() {
                if clique.len() > self.best.len() {
                    self.best.clone_from(clique);
                }
            } else {
                self.expand(clique, next);
            }
            clique.pop();
            candidates.remove(v);
        }
    }

    /// Greedy sequential coloring. Returns the candidates in color order
    /// together with each vertex's color (1-based); `colors[k]` bounds the
    /// clique size within `order[..=k]`.
    fn color(&self, candidates: &Bitset) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(candidates.count());
        let mut colors = Vec::with_capacity(order.capacity());
        let mut uncolored = candidates.clone();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut open = uncolored.clone();
            while let Some(v) = open.first() {
                open.remove(v);
                open.difference_with(&self.rows[v]);
                uncolored.remove(v);
                order.push(v);
                colors.push(color);
            }
        }
        (order, colors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn graph(count: usize, edges: &[(usize, usize)]) -> Vec<Bitset> {
        let mut rows = vec![Bitset::new(count); count];
        for &(a, b) in edges {
            rows[a].insert(b);
            rows[b].insert(a);
        }
        rows
    }

    fn is_clique(rows: &[Bitset], c: &[usize]) -> bool {
        c.iter()
            .enumerate()
            .all(|(i, &a)| c[i + 1..].iter().all(|&b| rows[a].contains(b)))
    }

    /// Exhaustive search over all vertex subsets.
    fn subset_oracle(rows: &[Bitset]) -> usize {
        let count = rows.len();
        (0u32..1 << count)
            .filter_map(|mask| {
                let c: Vec<usize> = (0..count).filter(|&i| mask & (1 << i) != 0).collect();
                is_clique(rows, &c).then_some(c.len())
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_cases() {
        assert!(maximum_clique(&[]).is_empty());
        assert_eq!(maximum_clique(&graph(1, &[])), vec![0]);
        assert_eq!(maximum_clique(&graph(3, &[])).len(), 1);
        assert_eq!(
            maximum_clique(&graph(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])),
            vec![0, 1, 2]
        );
        let k4: Vec<_> = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| (a, b)))
            .collect();
        assert_eq!(maximum_clique(&graph(4, &k4)), vec![0, 1, 2, 3]);
    }

    proptest! {
        #[test]
        fn matches_subset_enumeration(
            count in 1usize..12,
            edges in proptest::collection::vec((0usize..12, 0usize..12), 0..50),
        ) {
            let edges: Vec<_> = edges
                .into_iter()
                .filter(|&(a, b)| a < count && b < count && a != b)
                .collect();
            let rows = graph(count, &edges);
            let best = maximum_clique(&rows);
            prop_assert!(is_clique(&rows, &best));
            prop_assert_eq!(best.len(), subset_oracle(&rows));
        }
    }
}
