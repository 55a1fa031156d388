//! SVG and CSV output for sample clouds.

use std::fmt::Write as _;
use std::path::Path;

use super::cloud::SampleCloud;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlotFormat {
    Svg,
    Csv,
}

impl std::str::FromStr for PlotFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "svg" => Ok(PlotFormat::Svg),
            "csv" => Ok(PlotFormat::Csv),
            _ => Err(Error::Document(format!("unknown plot format {s:?}"))),
        }
    }
}

const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// An 800x800 SVG with one polyline per cloud, cut where samples were dropped.
pub fn render_svg(clouds: &[&SampleCloud]) -> Result<String> {
    if clouds.is_empty() || clouds.iter().all(|c| c.is_empty()) {
        return Err(Error::EmptyCloud);
    }
    if let Some(c) = clouds.iter().find(|c| c.dim() != 2) {
        return Err(Error::SvgDimension(c.dim()));
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for c in clouds.iter().filter(|c| !c.is_empty()) {
        let b = c.bounds();
        x0 = x0.min(b[0].0);
        x1 = x1.max(b[0].1);
        y0 = y0.min(b[1].0);
        y1 = y1.max(b[1].1);
    }
    let w = (x1 - x0).max(1e-12);
    let h = (y1 - y0).max(1e-12);
    let (mx, my) = (0.05 * w, 0.05 * h);
    let stroke = 0.004 * w.max(h);
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="{} {} {} {}">"#,
        x0 - mx,
        -(y1 + my),
        w + 2.0 * mx,
        h + 2.0 * my
    )
    .unwrap();
    for (k, c) in clouds.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        for run in runs(c) {
            let pts: Vec<String> = run.iter().map(|&i| format!("{},{}", c.point(i)[0], -c.point(i)[1])).collect();
            writeln!(
                s,
                r#"<polyline fill="none" stroke="{color}" stroke-width="{stroke}" points="{}"/>"#,
                pts.join(" ")
            )
            .unwrap();
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Maximal runs of consecutive samples; a closed cloud repeats its first point.
fn runs(c: &SampleCloud) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut cur = vec![];
    for i in 0..c.len() {
        cur.push(i);
        if !c.joined(i) {
            out.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        cur.push(0);
        out.push(cur);
    }
    out
}

/// Header `x1,...,xm,param`, one row per point, 17 significant digits.
pub fn render_csv(clouds: &[&SampleCloud]) -> Result<String> {
    if clouds.is_empty() || clouds.iter().all(|c| c.is_empty()) {
        return Err(Error::EmptyCloud);
    }
    let m = clouds[0].dim();
    if clouds.iter().any(|c| c.dim() != m) {
        return Err(Error::Document("clouds of different dimensions".into()));
    }
    let mut s = String::new();
    let head: Vec<String> = (1..=m).map(|i| format!("x{i}")).chain(["param".to_string()]).collect();
    s.push_str(&head.join(","));
    s.push('\n');
    for c in clouds {
        for i in 0..c.len() {
            let row: Vec<String> =
                c.point(i).iter().chain([c.param(i)].iter()).map(|v| format!("{v:.16e}")).collect();
            s.push_str(&row.join(","));
            s.push('\n');
        }
    }
    Ok(s)
}

pub fn emit_plot(clouds: &[&SampleCloud], path: &Path, format: PlotFormat) -> Result<()> {
    let text = match format {
        PlotFormat::Svg => render_svg(clouds)?,
        PlotFormat::Csv => render_csv(clouds)?,
    };
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_svg() {
        let c = SampleCloud::from_points(&[vec![0.0, 1.0], vec![0.5, 0.25]], &[0.0, 1.0], false).unwrap();
        let csv = render_csv(&[&c]).unwrap();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "x1,x2,param");
        let back: Vec<f64> = lines[2].split(',').map(|v| v.parse().unwrap()).collect();
        assert_eq!(back, vec![0.5, 0.25, 1.0]);
        let svg = render_svg(&[&c]).unwrap();
        assert!(svg.contains("width=\"800\"") && svg.matches("<polyline").count() == 1);
        let d3 = SampleCloud::from_points(&[vec![0.0, 1.0, 2.0]], &[0.0], false).unwrap();
        assert_eq!(render_svg(&[&d3]), Err(Error::SvgDimension(3)));
        assert_eq!(render_csv(&[]), Err(Error::EmptyCloud));
    }
}
