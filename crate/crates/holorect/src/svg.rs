//! Static SVG rendering of rectangle decompositions.

use crate::geometry::Rectangle;
use crate::jsonfmt::fmt_f64;

const WIDTH: f64 = 800.0;

/// Draws `cells` inside the outline of `bounds`. Cells tagged with a
/// winding are shaded by sign (positive blue, negative red) with opacity
/// growing in the magnitude; untagged cells use a neutral fill.
pub fn render_cells(bounds: &Rectangle, cells: &[(Rectangle, Option<i64>)]) -> String {
    let scale = WIDTH / bounds.width();
    let height = bounds.height() * scale;
    let x = |re: f64| (re - bounds.re_lo()) * scale;
    let y = |im: f64| (bounds.im_hi() - im) * scale;
    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {} {}\">\n",
        fmt_f64(WIDTH),
        fmt_f64(height)
    ));
    out.push_str(&format!(
        "  <rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n",
        fmt_f64(WIDTH),
        fmt_f64(height)
    ));
    for (cell, winding) in cells {
        let (fill, opacity) = match winding {
            None => ("#4682b4".to_string(), 0.35),
            Some(w) => {
                let color = if *w >= 0 { "#1f5fa8" } else { "#b22222" };
                (color.to_string(), (0.25 + 0.2 * w.unsigned_abs() as f64).min(0.9))
            }
        };
        out.push_str(&format!(
            "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\" fill-opacity=\"{}\" stroke=\"#333333\" stroke-width=\"0.6\"{}/>\n",
            fmt_f64(x(cell.re_lo())),
            fmt_f64(y(cell.im_hi())),
            fmt_f64(cell.width() * scale),
            fmt_f64(cell.height() * scale),
            fill,
            fmt_f64(opacity),
            match winding {
                Some(w) => format!(" data-winding=\"{w}\""),
                None => String::new(),
            }
        ));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_well_formed_svg() {
        let bounds = Rectangle::new(0.0, 2.0, 0.0, 1.0).unwrap();
        let cells = vec![
            (Rectangle::new(0.0, 1.0, 0.0, 0.5).unwrap(), None),
            (Rectangle::new(1.0, 2.0, 0.5, 1.0).unwrap(), Some(3)),
        ];
        let svg = render_cells(&bounds, &cells);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<rect").count(), 3);
        assert!(svg.contains("data-winding=\"3\""));
    }
}
