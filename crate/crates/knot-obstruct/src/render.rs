//! Flat-file renderings of a signature step function: CSV samples and an
//! SVG step plot of the window t in [0, 1/2].

use std::fmt::Write as _;

use crate::angle::RationalAngle;
use crate::signature::StepFunction;

/// CSV with header `t_num,t_den,sigma`: one row per midpoint of each
/// interval between breakpoints (0 and 1 acting as virtual endpoints),
/// one row per breakpoint carrying the averaged value, ascending in t.
pub fn signature_csv(f: &StepFunction) -> String {
    let mut out = String::from("t_num,t_den,sigma\n");
    let breaks = f.breakpoints();
    let values = f.interval_values();
    let mut prev = (0i64, 1i64);
    for (i, b) in breaks.iter().enumerate() {
        let here = (b.numerator(), b.denominator());
        let mid = RationalAngle::midpoint(prev, here);
        writeln!(
            out,
            "{},{},{}",
            mid.numerator(),
            mid.denominator(),
            values[i]
        )
        .unwrap();
        writeln!(out, "{},{},{}", here.0, here.1, f.value_at(b)).unwrap();
        prev = here;
    }
    let mid = RationalAngle::midpoint(prev, (1, 1));
    writeln!(
        out,
        "{},{},{}",
        mid.numerator(),
        mid.denominator(),
        values[breaks.len()]
    )
    .unwrap();
    out
}

/// Step plot of sigma over t in [0, 1/2]: one horizontal segment per
/// interval, jump angles labeled as exact fractions on the axis.
pub fn signature_svg(f: &StepFunction, title: &str) -> String {
    const W: f64 = 640.0;
    const H: f64 = 360.0;
    const ML: f64 = 52.0;
    const MR: f64 = 20.0;
    const MT: f64 = 34.0;
    const MB: f64 = 48.0;

    let breaks = f.breakpoints();
    let values = f.interval_values();

    // Intervals clipped to [0, 1/2]: (lo, hi, value)
    let mut segments: Vec<(f64, f64, i64)> = Vec::new();
    let mut lo = 0.0;
    for (i, &v) in values.iter().enumerate() {
        let hi = if i < breaks.len() {
            breaks[i].as_f64()
        } else {
            1.0
        };
        let clipped_hi = hi.min(0.5);
        if lo < clipped_hi {
            segments.push((lo, clipped_hi, v));
        }
        if hi >= 0.5 {
            break;
        }
        lo = hi;
    }

    let vmin = segments.iter().map(|s| s.2).min().unwrap_or(0).min(0);
    let vmax = segments.iter().map(|s| s.2).max().unwrap_or(0).max(0);
    let span = ((vmax - vmin) as f64).max(2.0);
    let x = |t: f64| ML + t / 0.5 * (W - ML - MR);
    let y = |v: f64| MT + (vmax as f64 - v) / span * (H - MT - MB);

    let mut out = String::new();
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {W} {H}\" \
         font-family=\"sans-serif\" font-size=\"11\">"
    )
    .unwrap();
    writeln!(out, "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>").unwrap();
    writeln!(
        out,
        "<text x=\"{:.1}\" y=\"20\" text-anchor=\"middle\" font-size=\"13\">{}</text>",
        W / 2.0,
        xml_escape(title)
    )
    .unwrap();

    // frame and zero line
    writeln!(
        out,
        "<rect x=\"{ML}\" y=\"{MT}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"none\" stroke=\"#999\"/>",
        W - ML - MR,
        H - MT - MB
    )
    .unwrap();
    writeln!(
        out,
        "<line x1=\"{ML}\" y1=\"{:.1}\" x2=\"{:.1}\" y2=\"{:.1}\" stroke=\"#ccc\" stroke-dasharray=\"4 3\"/>",
        y(0.0),
        W - MR,
        y(0.0)
    )
    .unwrap();

    // y ticks on even integers
    let step = (((span / 8.0).ceil() as i64) + 1) / 2 * 2;
    let step = step.max(2);
    let mut v = vmin - vmin.rem_euclid(step);
    while v <= vmax {
        if v >= vmin {
            writeln!(
                out,
                "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{}</text>",
                ML - 6.0,
                y(v as f64) + 4.0,
                v
            )
            .unwrap();
        }
        v += step;
    }

    // x tick labels at the jump angles inside the window
    for b in breaks
        .iter()
        .filter(|b| b.is_below_half() || (b.numerator() * 2 == b.denominator()))
    {
        let tx = x(b.as_f64());
        writeln!(
            out,
            "<line x1=\"{tx:.1}\" y1=\"{:.1}\" x2=\"{tx:.1}\" y2=\"{:.1}\" stroke=\"#999\"/>",
            H - MB,
            H - MB + 4.0
        )
        .unwrap();
        writeln!(
            out,
            "<text x=\"{tx:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{b}</text>",
            H - MB + 16.0
        )
        .unwrap();
    }
    for (t, label) in [(0.0, "0"), (0.5, "1/2")] {
        writeln!(
            out,
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{label}</text>",
            x(t),
            H - MB + 30.0
        )
        .unwrap();
    }
    writeln!(
        out,
        "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">t</text>",
        W / 2.0,
        H - 8.0
    )
    .unwrap();
    writeln!(
        out,
        "<text x=\"14\" y=\"{:.1}\" text-anchor=\"middle\" transform=\"rotate(-90 14 {:.1})\">sigma</text>",
        (MT + H - MB) / 2.0,
        (MT + H - MB) / 2.0
    )
    .unwrap();

    for (lo, hi, v) in &segments {
        writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#1050a0\" stroke-width=\"2.5\"/>",
            x(*lo),
            y(*v as f64),
            x(*hi),
            y(*v as f64)
        )
        .unwrap();
    }

    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;
    use crate::signature::{signature_at, signature_function};

    #[test]
    fn csv_rows_agree_with_signature_at() {
        let sum = parse("T(2,9) # -T(2,3)").unwrap();
        let csv = signature_csv(&signature_function(&sum));
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t_num,t_den,sigma"));
        let mut rows = 0;
        for line in lines {
            let cols: Vec<i64> = line.split(',').map(|c| c.parse().unwrap()).collect();
            let x = RationalAngle::new(cols[0], cols[1]).unwrap();
            assert_eq!(signature_at(&sum, &x), cols[2], "row {line}");
            rows += 1;
        }
        // 6 breakpoints, 7 interval midpoints
        assert_eq!(rows, 13);
    }

    #[test]
    fn csv_for_trefoil() {
        let sum = parse("T(2,3)").unwrap();
        let csv = signature_csv(&signature_function(&sum));
        let expect = "t_num,t_den,sigma\n\
                      1,12,0\n1,6,-1\n1,2,-2\n5,6,-1\n11,12,0\n";
        assert_eq!(csv, expect);
    }

    #[test]
    fn csv_for_empty_spectrum() {
        let sum = parse("T(2,3) # -T(2,3)").unwrap();
        let csv = signature_csv(&signature_function(&sum));
        assert_eq!(csv, "t_num,t_den,sigma\n1,2,0\n");
    }

    #[test]
    fn svg_labels_t37_jump_angles() {
        let sum = parse("T(3,7)").unwrap();
        let svg = signature_svg(&signature_function(&sum), "T(3,7)");
        assert!(svg.starts_with("<svg "));
        assert!(svg.trim_end().ends_with("</svg>"));
        for label in ["1/21", "2/21", "4/21", "5/21", "8/21", "10/21"] {
            assert!(svg.contains(&format!(">{label}<")), "missing label {label}");
        }
        assert!(!svg.contains(">11/21<"));
    }
}
