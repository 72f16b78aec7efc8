//! Deterministic ASCII and SVG renderings of path families. Real paths are
//! drawn solid (green in SVG), virtual paths dashed (red in SVG), matching
//! the usual way these figures are typeset.

use std::fmt::Write as _;

use crate::lattice::{build_lattice, PathFamily, PathKind, Point};

const CELL_W: i32 = 3; // canvas columns per lattice unit
const CELL_H: i32 = 2; // canvas rows per lattice unit

struct Canvas {
    width: usize,
    grid: Vec<Vec<char>>,
}

impl Canvas {
    fn new(width: usize, height: usize) -> Self {
        Canvas { width, grid: vec![vec![' '; width]; height] }
    }

    fn put(&mut self, row: i32, col: i32, ch: char) {
        if row >= 0 && col >= 0 && (row as usize) < self.grid.len() && (col as usize) < self.width
        {
            self.grid[row as usize][col as usize] = ch;
        }
    }

    fn line(&mut self, from: (i32, i32), to: (i32, i32), ch: char) {
        let (dr, dc) = (to.0 - from.0, to.1 - from.1);
        let steps = dr.abs().max(dc.abs());
        for t in 1..steps {
            let r = from.0 + (dr * t + steps / 2).div_euclid(steps);
            let c = from.1 + (dc * t + steps / 2).div_euclid(steps);
            self.put(r, c, ch);
        }
    }

    fn into_string(self) -> String {
        let mut out = String::new();
        for row in self.grid {
            let line: String = row.into_iter().collect();
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Plain-text picture of a family. Real paths use `-`/`|`, virtual paths use
/// `~`/`:`; starting and ending points carry their index digit, other lattice
/// points are dots.
pub fn render_ascii(f: &PathFamily) -> String {
    let m = f.m() as i32;
    let cell = |(x, y): Point| -> (i32, i32) { ((m - y) * CELL_H, (x + m - 1) * CELL_W) };
    let mut canvas =
        Canvas::new(((2 * m - 2) * CELL_W + 1) as usize, (m * CELL_H + 1) as usize);

    for path in f.paths() {
        let (h, v) = match path.kind {
            PathKind::Real => ('-', '|'),
            PathKind::Virtual => ('~', ':'),
        };
        for w in path.points.windows(2) {
            let (p, q) = (w[0], w[1]);
            let ch = if p.1 == q.1 { h } else if p.0 == q.0 { v } else { '~' };
            canvas.line(cell(p), cell(q), ch);
        }
    }

    let lattice = build_lattice(f.m()).expect("family dimension is at least 2");
    for &p in lattice.points() {
        let (r, c) = cell(p);
        canvas.put(r, c, '.');
    }
    for i in 1..m {
        let (r, c) = cell((0, i + 1));
        canvas.put(r, c, char::from_digit((i % 10) as u32, 10).unwrap());
        let (r, c) = cell((i, 0));
        canvas.put(r, c, char::from_digit((i % 10) as u32, 10).unwrap());
    }

    let mut out = format!("L_{} family: real ---, virtual ~~~\n", f.m());
    out.push_str(&canvas.into_string());
    out
}

const SCALE: i32 = 36;
const MARGIN: i32 = 30;

/// SVG 1.1 document of a family: grid dots, solid green real paths, dashed
/// red virtual paths, and axis index labels for the terminals.
pub fn render_svg(f: &PathFamily) -> String {
    let m = f.m() as i32;
    let px = |x: i32| MARGIN + (x + m - 1) * SCALE;
    let py = |y: i32| MARGIN + (m - y) * SCALE;
    let width = px(m - 1) + MARGIN;
    let height = py(0) + MARGIN + 10;

    let mut svg = String::new();
    svg.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    write!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
         width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    )
    .unwrap();

    let lattice = build_lattice(f.m()).expect("family dimension is at least 2");
    for &(x, y) in lattice.points() {
        writeln!(svg, "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#666666\"/>", px(x), py(y))
            .unwrap();
    }

    for path in f.paths() {
        let pts: Vec<String> =
            path.points.iter().map(|&(x, y)| format!("{},{}", px(x), py(y))).collect();
        let style = match path.kind {
            PathKind::Real => "stroke=\"#1a7f37\"",
            PathKind::Virtual => "stroke=\"#cf222e\" stroke-dasharray=\"7 5\"",
        };
        writeln!(
            svg,
            "  <polyline fill=\"none\" {} stroke-width=\"2.5\" points=\"{}\"/>",
            style,
            pts.join(" ")
        )
        .unwrap();
    }

    for i in 1..m {
        writeln!(
            svg,
            "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"14\" \
             text-anchor=\"middle\">{}</text>",
            px(0) - 16,
            py(i + 1) - 8,
            i
        )
        .unwrap();
        writeln!(
            svg,
            "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"14\" \
             text-anchor=\"middle\">{}</text>",
            px(i),
            py(0) + 22,
            i
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    svg
}
