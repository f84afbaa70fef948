use std::fmt::Write as _;
use std::str::FromStr;

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::framework::FrameworkSet;
use crate::graph::TransferGraph;
use crate::thickness::ThicknessProfile;
use crate::zones::{decompose, exact_regime};

use super::layout::layout_of;

const CELL: f64 = 48.0;
const MARGIN: f64 = 40.0;
const GLYPH_RADIUS: f64 = 6.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtlasMode {
    /// Vertices colored by thickness.
    Thickness,
    /// Gray exact one-dimensional regime, blue triangular skin, red inner
    /// tetrahedral core.
    Zones,
}

impl AtlasMode {
    pub fn as_str(self) -> &'static str {
        match self {
            AtlasMode::Thickness => "thickness",
            AtlasMode::Zones => "zones",
        }
    }
}

impl FromStr for AtlasMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "thickness" => Ok(AtlasMode::Thickness),
            "zones" => Ok(AtlasMode::Zones),
            other => Err(Error::UnknownMode(other.to_string())),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Palette {
    /// Fill for τ = 0..=8; larger values reuse the last entry.
    pub by_tau: [&'static str; 9],
    pub exact_one: &'static str,
    pub skin: &'static str,
    pub core: &'static str,
    pub other: &'static str,
    pub edge: &'static str,
    pub outline: &'static str,
}

impl Default for Palette {
    fn default() -> Self {
        Self {
            by_tau: [
                "#ffffff", "#bdbdbd", "#6baed6", "#fd8d3c", "#e6550d", "#a63603", "#756bb1",
                "#54278f", "#252525",
            ],
            exact_one: "#9e9e9e",
            skin: "#3182bd",
            core: "#de2d26",
            other: "#fdd0a2",
            edge: "#c8c8c8",
            outline: "#000000",
        }
    }
}

pub fn render_atlas(
    g: &TransferGraph,
    framework: &FrameworkSet,
    profile: &ThicknessProfile,
    mode: AtlasMode,
    highlight: Option<&[usize]>,
) -> Result<String> {
    render_atlas_with(g, framework, profile, mode, highlight, &Palette::default())
}

/// Per-vertex fill and class tokens for zones mode. Fill classes partition
/// the vertices with the core taking precedence over the skin; `in-skin` and
/// `in-core3` mark raw membership so both sets stay countable.
fn zone_classes(
    g: &TransferGraph,
    framework: &FrameworkSet,
    profile: &ThicknessProfile,
    palette: &Palette,
) -> Result<Vec<(String, &'static str)>> {
    let count = g.vertex_count();
    let as_set = |items: &[usize]| {
        let mut s = Bitset::new(count);
        items.iter().for_each(|&v| s.insert(v));
        s
    };
    let thin = as_set(&exact_regime(profile, 1));
    let skin = as_set(&decompose(g, framework, profile, 2)?.shell);
    let core = as_set(&decompose(g, framework, profile, 3)?.core);

    Ok((0..count)
        .map(|v| {
            let (mut class, fill) = if thin.contains(v) {
                ("zone-thin".to_string(), palette.exact_one)
            } else if core.contains(v) {
                ("zone-core".to_string(), palette.core)
            } else if skin.contains(v) {
                ("zone-skin".to_string(), palette.skin)
            } else {
                ("zone-other".to_string(), palette.other)
            };
            if skin.contains(v) {
                class.push_str(" in-skin");
            }
            if core.contains(v) {
                class.push_str(" in-core3");
            }
            (class, fill)
        })
        .collect())
}

pub fn render_atlas_with(
    g: &TransferGraph,
    framework: &FrameworkSet,
    profile: &ThicknessProfile,
    mode: AtlasMode,
    highlight: Option<&[usize]>,
    palette: &Palette,
) -> Result<String> {
    let n = g.n();
    let count = g.vertex_count();
    for found in [framework.n, profile.n()] {
        if found != n {
            return Err(Error::MismatchedSize { expected: n, found });
        }
    }
    let mut outlined = Bitset::new(count);
    for &v in highlight.unwrap_or(&[]) {
        if v >= count {
            return Err(Error::VertexOutOfRange { index: v, n, count });
        }
        outlined.insert(v);
    }

    let classes: Vec<(String, &str)> = match mode {
        AtlasMode::Thickness => (0..count)
            .map(|v| {
                let tau = profile.tau(v);
                (format!("tau-{tau}"), palette.by_tau[tau.min(8)])
            })
            .collect(),
        AtlasMode::Zones => zone_classes(g, framework, profile, palette)?,
    };

    let points = layout_of(g.vertices());
    let px = |x: f64| MARGIN + (x - 1.0) * CELL;
    let coords: Vec<(f64, f64)> = points
        .iter()
        .map(|p| {
            let (x, y) = p.position();
            (px(x), px(y))
        })
        .collect();
    let side = 2.0 * MARGIN + (n as f64 - 1.0) * CELL;

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{side:.0}" height="{side:.0}" viewBox="0 0 {side:.0} {side:.0}">"#
    );
    let _ = writeln!(svg, "<title>Partition graph G_{n} ({})</title>", mode.as_str());
    let _ = writeln!(
        svg,
        "<desc>x = largest part, y = number of parts (fewer parts higher); tau_max = {}; outlined = {}</desc>",
        profile.tau_max(),
        outlined.count()
    );

    let _ = writeln!(svg, r#"<g class="edges" stroke="{}" stroke-width="1">"#, palette.edge);
    for (i, j) in g.edges() {
        let (x1, y1) = coords[i];
        let (x2, y2) = coords[j];
        let _ = writeln!(
            svg,
            r#"<line class="edge" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}"/>"#
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(svg, r#"<g class="vertices">"#);
    for (v, ((cx, cy), (class, fill))) in coords.iter().zip(&classes).enumerate() {
        let (stroke, width, extra) = if outlined.contains(v) {
            (palette.outline, 2.5, " outlined")
        } else {
            ("#707070", 0.75, "")
        };
        let _ = writeln!(
            svg,
            r#"<circle class="vertex {class}{extra}" data-partition="{}" data-tau="{}" cx="{cx:.2}" cy="{cy:.2}" r="{GLYPH_RADIUS}" fill="{fill}" stroke="{stroke}" stroke-width="{width}"/>"#,
            g.vertex(v),
            profile.tau(v)
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::framework::boundary_framework;
    use crate::thickness::thickness_profile;

    fn render(n: usize, mode: AtlasMode, outline_max: bool) -> String {
        let g = TransferGraph::build(n).unwrap();
        let b = boundary_framework(&g).unwrap();
        let p = thickness_profile(&g);
        let hl = outline_max.then(|| p.max_locus().to_vec());
        render_atlas(&g, &b, &p, mode, hl.as_deref()).unwrap()
    }

    #[test]
    fn four_in_thickness_mode() {
        let svg = render(4, AtlasMode::Thickness, true);
        assert_eq!(svg.matches("<circle class=\"vertex").count(), 5);
        assert_eq!(svg.matches("<line class=\"edge\"").count(), 5);
        assert_eq!(svg.matches(" outlined\"").count(), 3);
        assert_eq!(svg.matches("tau-2").count(), 3);
        assert_eq!(svg, render(4, AtlasMode::Thickness, true));
    }

    #[test]
    fn one_is_a_single_glyph() {
        let svg = render(1, AtlasMode::Zones, false);
        assert_eq!(svg.matches("<circle").count(), 1);
        assert_eq!(svg.matches("<line").count(), 0);
    }

    #[test]
    fn modes_parse() {
        assert_eq!("zones".parse::<AtlasMode>().unwrap(), AtlasMode::Zones);
        assert!(matches!("heat".parse::<AtlasMode>(), Err(Error::UnknownMode(_))));
    }

    #[test]
    fn highlight_out_of_range() {
        let g = TransferGraph::build(3).unwrap();
        let b = boundary_framework(&g).unwrap();
        let p = thickness_profile(&g);
        assert!(matches!(
            render_atlas(&g, &b, &p, AtlasMode::Thickness, Some(&[3])),
            Err(Error::VertexOutOfRange { index: 3, .. })
        ));
    }
}
