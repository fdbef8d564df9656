use std::fmt::Write;

use crate::geometry::Instance;

const MARGIN: f64 = 0.05;
const SIZE: f64 = 800.0;

/// Hull polygon and disks of `instance`, with the canonical indices in
/// `highlight` drawn in a distinct style. The y axis points up.
pub fn render_svg(instance: &Instance, highlight: &[usize]) -> String {
    let disks = instance.disks();
    let (mut x0, mut y0, mut x1, mut y1) = (
        f64::INFINITY,
        f64::INFINITY,
        f64::NEG_INFINITY,
        f64::NEG_INFINITY,
    );
    for d in disks {
        x0 = x0.min(d.center.x - d.radius);
        y0 = y0.min(d.center.y - d.radius);
        x1 = x1.max(d.center.x + d.radius);
        y1 = y1.max(d.center.y + d.radius);
    }
    let extent = (x1 - x0).max(y1 - y0).max(1e-9);
    let pad = MARGIN * extent;
    let (vx, vy) = (x0 - pad, -(y1 + pad));
    let (vw, vh) = (x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);
    let stroke = extent / 400.0;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE:.0}" height="{:.0}" viewBox="{vx:.6} {vy:.6} {vw:.6} {vh:.6}">"#,
        SIZE * vh / vw
    );
    let hull: Vec<String> = disks
        .iter()
        .map(|d| format!("{:.6},{:.6}", d.center.x, -d.center.y))
        .collect();
    let _ = writeln!(
        s,
        r##"<polygon points="{}" fill="none" stroke="#888888" stroke-width="{stroke:.6}"/>"##,
        hull.join(" ")
    );
    for (i, d) in disks.iter().enumerate() {
        let (fill, edge) = if highlight.contains(&i) {
            ("#e4572e", "#a3290a")
        } else {
            ("#4c78a8", "#2a4a70")
        };
        let _ = writeln!(
            s,
            r#"<circle cx="{:.6}" cy="{:.6}" r="{:.6}" fill="{fill}" fill-opacity="0.25" stroke="{edge}" stroke-width="{stroke:.6}"/>"#,
            d.center.x, -d.center.y, d.radius
        );
        let _ = writeln!(
            s,
            r#"<circle cx="{:.6}" cy="{:.6}" r="{:.6}" fill="{edge}"/>"#,
            d.center.x,
            -d.center.y,
            2.0 * stroke
        );
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Mode, WeightedDisk};

    fn t4() -> Instance {
        Instance::canonicalize(
            &[
                WeightedDisk::unit(0.0, 0.0, 0.6),
                WeightedDisk::unit(1.0, 0.0, 0.6),
                WeightedDisk::unit(1.0, 1.0, 0.6),
                WeightedDisk::unit(0.0, 1.0, 0.6),
            ],
            Mode::Unweighted,
        )
        .unwrap()
    }

    #[test]
    fn highlights_and_determinism() {
        let inst = t4();
        let plain = render_svg(&inst, &[]);
        assert_eq!(plain.matches("#e4572e").count(), 0);
        let marked = render_svg(&inst, &[0, 2]);
        assert_eq!(marked.matches("fill=\"#e4572e\"").count(), 2);
        assert_eq!(marked, render_svg(&inst, &[0, 2]));
        assert!(marked.contains(r#"viewBox="-0.710000 -1.710000 2.420000 2.420000""#));
    }
}
