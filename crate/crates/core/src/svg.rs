//! SVG drawing of a solve result: the unit circle, every diameter and its
//! endpoints, and the chosen polygon.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geometry::{DiameterSet, VertexSelection};
use crate::io::SolveRecord;

const SIZE: u32 = 480;

pub fn render_svg(record: &SolveRecord) -> Result<String> {
    if record.vertex_indices.is_empty() {
        return Err(Error::TooFewVertices(0));
    }
    let ds = DiameterSet::new(record.angles.clone())?;
    let sel = VertexSelection::for_set(&ds, record.vertex_indices.clone())?;
    Ok(draw(&ds, &sel, record))
}

fn fmt(v: f64) -> String {
    // Avoid "-0.0000" so identical pictures stay byte-identical.
    let s = format!("{v:.4}");
    if s == "-0.0000" {
        "0.0000".to_string()
    } else {
        s
    }
}

fn draw(ds: &DiameterSet, sel: &VertexSelection, record: &SolveRecord) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="-1.2 -1.2 2.4 2.4">"#
    );
    let _ = writeln!(
        out,
        "<title>n={} k={} solver={} area={}</title>",
        record.n, record.k, record.solver, record.area
    );
    // Flip y so angles run counterclockwise on screen.
    out.push_str("<g transform=\"scale(1,-1)\">\n");
    out.push_str(
        "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#888\" stroke-width=\"0.006\"/>\n",
    );
    let n = ds.n();
    for d in 0..n {
        let (x0, y0) = ds.point(d);
        let (x1, y1) = ds.point(d + n);
        let _ = writeln!(
            out,
            "<line class=\"diameter\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#ccc\" stroke-width=\"0.004\"/>",
            fmt(x0),
            fmt(y0),
            fmt(x1),
            fmt(y1)
        );
    }
    let points: Vec<String> = sel
        .indices()
        .iter()
        .map(|&x| {
            let (px, py) = ds.point(x);
            format!("{},{}", fmt(px), fmt(py))
        })
        .collect();
    let _ = writeln!(
        out,
        "<polygon class=\"solution\" points=\"{}\" fill=\"#3b7dd8\" fill-opacity=\"0.35\" stroke=\"#1f4e8c\" stroke-width=\"0.01\"/>",
        points.join(" ")
    );
    for x in 0..ds.endpoints() {
        let (px, py) = ds.point(x);
        let selected = sel.indices().binary_search(&x).is_ok();
        let (class, r, fill) = if selected {
            ("vertex", "0.035", "#1f4e8c")
        } else {
            ("endpoint", "0.02", "#555")
        };
        let _ = writeln!(
            out,
            "<circle class=\"{class}\" data-index=\"{x}\" cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"{fill}\"/>",
            fmt(px),
            fmt(py)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Solution, SolverKind};

    fn clave_record() -> SolveRecord {
        let ds = DiameterSet::evenly_spaced(8).unwrap();
        let sel = VertexSelection::new(vec![0, 3, 6, 10, 12]).unwrap();
        SolveRecord::new(&ds, &Solution::new(&ds, sel, SolverKind::Lattice))
    }

    #[test]
    fn clave_structure() {
        let svg = render_svg(&clave_record()).unwrap();
        let dots =
            svg.matches("class=\"endpoint\"").count() + svg.matches("class=\"vertex\"").count();
        assert_eq!(dots, 16);
        assert_eq!(svg.matches("class=\"vertex\"").count(), 5);
        assert_eq!(svg.matches("class=\"diameter\"").count(), 8);
        let poly = svg.lines().find(|l| l.starts_with("<polygon")).unwrap();
        let pts = poly
            .split("points=\"")
            .nth(1)
            .unwrap()
            .split('"')
            .next()
            .unwrap();
        assert_eq!(pts.split(' ').count(), 5);
    }

    #[test]
    fn deterministic_output() {
        let r = clave_record();
        assert_eq!(render_svg(&r).unwrap(), render_svg(&r).unwrap());
    }

    #[test]
    fn empty_selection_is_an_error() {
        let mut r = clave_record();
        r.vertex_indices.clear();
        assert!(render_svg(&r).is_err());
    }
}
