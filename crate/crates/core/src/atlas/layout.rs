use std::collections::BTreeMap;
use std::f64::consts::TAU;

use serde::Serialize;

use crate::error::Result;
use crate::partition::{enumerate_partitions, Partition, PartitionIndex};

/// Radius, in cell units, of the ring on which coincident vertices sit.
pub const OFFSET_RADIUS: f64 = 0.3;

/// A vertex placed at `(λ_1, ℓ(λ))` plus a small offset that is non-zero
/// only when several partitions share that cell.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LayoutPoint {
    pub vertex: PartitionIndex,
    pub x: usize,
    pub y: usize,
    pub dx: f64,
    pub dy: f64,
}

impl LayoutPoint {
    pub fn position(&self) -> (f64, f64) {
        (self.x as f64 + self.dx, self.y as f64 + self.dy)
    }
}

pub fn layout(n: usize) -> Result<Vec<LayoutPoint>> {
    Ok(layout_of(&enumerate_partitions(n)?))
}

/// Layout for an already enumerated, canonically ordered `Par(n)`.
pub fn layout_of(vertices: &[Partition]) -> Vec<LayoutPoint> {
    let mut cells: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, lambda) in vertices.iter().enumerate() {
        cells
            .entry((lambda.largest_part(), lambda.length()))
            .or_default()
            .push(i);
    }

    let mut points: Vec<Option<LayoutPoint>> = vec![None; vertices.len()];
    for ((x, y), members) in cells {
        let m = members.len();
        for (rank, &i) in members.iter().enumerate() {
            let (dx, dy) = if m == 1 {
                (0.0, 0.0)
            } else {
                let angle = TAU * rank as f64 / m as f64;
                (OFFSET_RADIUS * angle.cos(), OFFSET_RADIUS * angle.sin())
            };
            points[i] = Some(LayoutPoint {
                vertex: PartitionIndex {
                    n: vertices[i].n(),
                    index: i,
                },
                x,
                y,
                dx,
                dy,
            });
        }
    }
    points.into_iter().map(|p| p.expect("every vertex has a cell")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_cells() {
        let pts = layout(4).unwrap();
        assert_eq!((pts[1].x, pts[1].y), (3, 2));
        assert_eq!((pts[3].x, pts[3].y), (2, 3));
        assert!(pts.iter().all(|p| p.dx == 0.0 && p.dy == 0.0));
    }

    #[test]
    fn collisions_get_ring_offsets() {
        // No two partitions of 6 share (λ_1, ℓ).
        assert!(layout(6).unwrap().iter().all(|p| p.dx == 0.0 && p.dy == 0.0));

        let parts = enumerate_partitions(7).unwrap();
        let pts = layout_of(&parts);
        let a = parts.iter().position(|p| p.to_string() == "3,3,1").unwrap();
        let b = parts.iter().position(|p| p.to_string() == "3,2,2").unwrap();
        assert_eq!((pts[a].x, pts[a].y), (pts[b].x, pts[b].y));
        assert_ne!(pts[a].position(), pts[b].position());
        for p in [&pts[a], &pts[b]] {
            let r = (p.dx * p.dx + p.dy * p.dy).sqrt();
            assert!((r - OFFSET_RADIUS).abs() < 1e-12);
        }
        assert_eq!(layout(7).unwrap(), pts);
    }
}
