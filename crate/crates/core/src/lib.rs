//! Partition transfer graphs and their simplicial thickness.
//!
//! `G_n` has the partitions of `n` as vertices and joins two partitions when
//! one unit moved between parts (then re-sorted) turns one into the other.
//! The thickness of a vertex is the dimension of the largest simplex through
//! it in the clique complex of `G_n`. This crate computes thickness profiles
//! exactly, splits threshold zones into boundary-attached shells and
//! interior cores, and renders tables and SVG atlases of the result.

pub mod atlas;
pub mod bitset;
pub mod clique;
mod error;
pub mod framework;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod pipeline;
pub mod thickness;
pub mod verify;
pub mod zones;

pub use error::{Error, Result};
pub use framework::{boundary_framework, AxisSet, FrameworkSet};
pub use graph::{transfer_neighbors, TransferGraph};
pub use partition::{enumerate_partitions, Partition, PartitionIndex};
pub use thickness::{local_simplex_dimension, thickness_profile, ThicknessProfile};
pub use zones::{decompose, first_occurrences, FirstOccurrenceTable, ZoneDecomposition};
