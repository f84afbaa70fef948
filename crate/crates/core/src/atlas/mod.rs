//! Atlas output: coordinate layout, SVG rendering, table export and
//! descriptive statistics of vertex sets.

mod export;
mod layout;
mod stats;
mod svg;

pub use export::{export_tables, Tables};
pub use layout::{layout, layout_of, LayoutPoint, OFFSET_RADIUS};
pub use stats::{locus_statistics, LocusStats, Summary};
pub use svg::{render_atlas, render_atlas_with, AtlasMode, Palette};
