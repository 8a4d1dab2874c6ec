//! Static SVG rendering of a planar two-class point configuration.

use std::fmt::Write;

use num_traits::ToPrimitive;
use orchard_core::{OrchardPartition, PointConfiguration};

const SIZE: f64 = 480.0;
const MARGIN: f64 = 48.0;
const RADIUS: f64 = 7.0;
const COLORS: [&str; 2] = ["#2b8a3e", "#c92a2a"];

/// Renders a 2D configuration with points colored by class.
///
/// `partition` is `None` when the relation is undefined (fewer than four
/// points); every point is then drawn in the first color with a note.
pub fn render_svg(config: &PointConfiguration, partition: Option<&OrchardPartition>) -> String {
    assert_eq!(config.dim(), 2, "plots are planar");
    let coords: Vec<(f64, f64)> = config
        .points()
        .iter()
        .map(|p| (p[0].to_f64().unwrap_or(0.0), p[1].to_f64().unwrap_or(0.0)))
        .collect();
    let (min_x, max_x) = bounds(coords.iter().map(|c| c.0));
    let (min_y, max_y) = bounds(coords.iter().map(|c| c.1));
    let span = (max_x - min_x).max(max_y - min_y);
    let scale = if span > 0.0 {
        (SIZE - 2.0 * MARGIN) / span
    } else {
        1.0
    };
    // center the bounding box on the canvas
    let off_x = (SIZE - (max_x - min_x) * scale) / 2.0;
    let off_y = (SIZE - (max_y - min_y) * scale) / 2.0;
    let place = |(x, y): (f64, f64)| {
        (
            off_x + (x - min_x) * scale,
            SIZE - off_y - (y - min_y) * scale,
        )
    };

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(
        svg,
        r#"  <rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
    let (class0, class1) = match partition {
        Some(p) => p.classes(),
        None => ((1..=config.len() as u32).collect(), Vec::new()),
    };
    let _ = writeln!(
        svg,
        r#"  <text x="12" y="20" font-family="sans-serif" font-size="12" fill="{}">class 0: {}</text>"#,
        COLORS[0],
        join_labels(&class0)
    );
    let _ = writeln!(
        svg,
        r#"  <text x="12" y="36" font-family="sans-serif" font-size="12" fill="{}">class 1: {}</text>"#,
        COLORS[1],
        join_labels(&class1)
    );
    if partition.is_none() {
        let _ = writeln!(
            svg,
            r#"  <text x="12" y="{:.2}" font-family="sans-serif" font-size="12" fill="black">relation undefined for fewer than 4 points</text>"#,
            SIZE - 12.0
        );
    }
    for (i, &c) in coords.iter().enumerate() {
        let (x, y) = place(c);
        let class = partition.map_or(0, |p| p.label(i as u32 + 1)) as usize;
        let _ = writeln!(
            svg,
            r#"  <circle cx="{x:.2}" cy="{y:.2}" r="{RADIUS}" fill="{}" stroke="black" stroke-width="1"/>"#,
            COLORS[class]
        );
        let _ = writeln!(
            svg,
            r#"  <text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12" fill="black">P{}</text>"#,
            x + RADIUS + 2.0,
            y - RADIUS - 2.0,
            i + 1
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
        (lo.min(v), hi.max(v))
    })
}

fn join_labels(members: &[u32]) -> String {
    if members.is_empty() {
        return "(none)".into();
    }
    members
        .iter()
        .map(|i| format!("P{i}"))
        .collect::<Vec<_>>()
        .join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use orchard_core::adapters::points_to_signfn;
    use orchard_core::orchard::partition;

    fn square() -> PointConfiguration {
        PointConfiguration::from_integers(2, &[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]).unwrap()
    }

    #[test]
    fn square_colors_diagonals() {
        let c = square();
        let p = partition(&points_to_signfn(&c).unwrap()).unwrap();
        let svg = render_svg(&c, Some(&p));
        let fills: Vec<&str> = svg
            .lines()
            .filter(|l| l.contains("<circle"))
            .map(|l| {
                if l.contains(COLORS[0]) {
                    COLORS[0]
                } else {
                    COLORS[1]
                }
            })
            .collect();
        assert_eq!(fills, vec![COLORS[0], COLORS[1], COLORS[0], COLORS[1]]);
        assert!(svg.contains("class 0: P1, P3"));
        assert!(svg.contains("class 1: P2, P4"));
        assert_eq!(svg, render_svg(&c, Some(&p)));
    }

    #[test]
    fn points_stay_on_canvas() {
        let c = PointConfiguration::from_integers(2, &[&[-100, 3], &[250, 7], &[40, -90], &[0, 1]])
            .unwrap();
        let svg = render_svg(&c, None);
        for line in svg.lines().filter(|l| l.contains("<circle")) {
            for attr in ["cx=\"", "cy=\""] {
                let start = line.find(attr).unwrap() + attr.len();
                let v: f64 = line[start..].split('"').next().unwrap().parse().unwrap();
                assert!((MARGIN - 1e-9..=SIZE - MARGIN + 1e-9).contains(&v), "{v}");
            }
        }
        assert!(svg.contains("relation undefined"));
    }
}
