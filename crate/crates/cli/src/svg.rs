//! SVG rendering of Newton polygons: lattice grid, the polygon polyline,
//! vertex labels, per-side slope annotations, and cross marks on the lattice
//! points the phi-index counts. Pure text output with integer pixel
//! coordinates; diffable and byte-stable.

use monogen::polygon::PlotRecord;

const CELL: i64 = 48;
const MARGIN: i64 = 56;
const CROSS_ARM: i64 = 5;

pub fn render_polygon(record: &PlotRecord, title: &str) -> String {
    let max_x = record
        .vertices
        .iter()
        .map(|v| v.0)
        .max()
        .unwrap_or(1)
        .max(1);
    let max_y = record
        .vertices
        .iter()
        .map(|v| v.1)
        .max()
        .unwrap_or(1)
        .max(1);
    let width = MARGIN * 2 + max_x * CELL;
    let height = MARGIN * 2 + max_y * CELL;
    // y grows upward in the plot, downward in SVG
    let px = |x: i64| MARGIN + x * CELL;
    let py = |y: i64| height - MARGIN - y * CELL;

    let mut s = String::new();
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\">\n"
    ));
    s.push_str(&format!(
        "  <title>{}</title>\n",
        title.replace('<', "&lt;").replace('>', "&gt;")
    ));
    s.push_str("  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");

    s.push_str("  <g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n");
    for x in 0..=max_x {
        s.push_str(&format!(
            "    <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n",
            px(x),
            py(0),
            py(max_y)
        ));
    }
    for y in 0..=max_y {
        s.push_str(&format!(
            "    <line x1=\"{0}\" y1=\"{2}\" x2=\"{1}\" y2=\"{2}\"/>\n",
            px(0),
            px(max_x),
            py(y)
        ));
    }
    s.push_str("  </g>\n");

    // axes with tick labels
    s.push_str("  <g class=\"axes\" stroke=\"#000000\" stroke-width=\"2\">\n");
    s.push_str(&format!(
        "    <line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>\n",
        px(0) - 8,
        py(0),
        px(max_x) + 16
    ));
    s.push_str(&format!(
        "    <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n",
        px(0),
        py(0) + 8,
        py(max_y) - 16
    ));
    s.push_str("  </g>\n");
    s.push_str(
        "  <g class=\"ticks\" font-family=\"monospace\" font-size=\"12\" fill=\"#444444\">\n",
    );
    for x in 0..=max_x {
        s.push_str(&format!(
            "    <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{x}</text>\n",
            px(x),
            py(0) + 20
        ));
    }
    for y in 0..=max_y {
        s.push_str(&format!(
            "    <text x=\"{}\" y=\"{}\" text-anchor=\"end\">{y}</text>\n",
            px(0) - 10,
            py(y) + 4
        ));
    }
    s.push_str("  </g>\n");

    // cross marks for the counted lattice points
    s.push_str("  <g class=\"index-points\" stroke=\"#b22222\" stroke-width=\"2\">\n");
    for &(x, y) in &record.lattice_points {
        let (cx, cy) = (px(x), py(y));
        s.push_str(&format!(
            "    <path class=\"lattice-cross\" d=\"M {} {} L {} {} M {} {} L {} {}\"/>\n",
            cx - CROSS_ARM,
            cy - CROSS_ARM,
            cx + CROSS_ARM,
            cy + CROSS_ARM,
            cx - CROSS_ARM,
            cy + CROSS_ARM,
            cx + CROSS_ARM,
            cy - CROSS_ARM
        ));
    }
    s.push_str("  </g>\n");

    // the polygon itself
    let pts: Vec<String> = record
        .vertices
        .iter()
        .map(|&(x, y)| format!("{},{}", px(x), py(y)))
        .collect();
    s.push_str(&format!(
        "  <polyline class=\"polygon\" points=\"{}\" fill=\"none\" stroke=\"#1f3a93\" \
         stroke-width=\"3\"/>\n",
        pts.join(" ")
    ));

    s.push_str("  <g class=\"vertices\" font-family=\"monospace\" font-size=\"12\">\n");
    for &(x, y) in &record.vertices {
        s.push_str(&format!(
            "    <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"#1f3a93\"/>\n",
            px(x),
            py(y)
        ));
        s.push_str(&format!(
            "    <text x=\"{}\" y=\"{}\" fill=\"#1f3a93\">({x},{y})</text>\n",
            px(x) + 7,
            py(y) - 7
        ));
    }
    s.push_str("  </g>\n");

    s.push_str(
        "  <g class=\"side-labels\" font-family=\"monospace\" font-size=\"12\" fill=\"#333333\">\n",
    );
    for side in &record.sides {
        let (mx, my) = (
            (px(side.from.0) + px(side.to.0)) / 2,
            (py(side.from.1) + py(side.to.1)) / 2,
        );
        let label = match &side.data {
            Some(d) => format!(
                "slope -{}/{} (l={}, d={})",
                d.h, d.ram_e, d.length, d.degree
            ),
            None => format!("slope {}", side.slope),
        };
        s.push_str(&format!(
            "    <text x=\"{}\" y=\"{}\">{label}</text>\n",
            mx + 8,
            my - 8
        ));
    }
    s.push_str("  </g>\n");
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use monogen::NewtonPolygon;

    #[test]
    fn figure_one_has_nine_crosses() {
        let np = NewtonPolygon::from_vertices(vec![(0, 5), (1, 3), (5, 1), (9, 0)]);
        let svg = render_polygon(&np.plot_record(), "figure 1");
        assert_eq!(svg.matches("lattice-cross").count(), 9);
        assert!(svg.contains("(0,5)"));
        assert!(svg.contains("(9,0)"));
    }

    #[test]
    fn height_one_side_has_no_crosses() {
        let np = NewtonPolygon::from_vertices(vec![(0, 1), (6, 0)]);
        let svg = render_polygon(&np.plot_record(), "height one");
        assert_eq!(svg.matches("lattice-cross").count(), 0);
        assert!(svg.contains("slope -1/6"));
    }
}
