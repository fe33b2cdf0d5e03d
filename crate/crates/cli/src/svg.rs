//! Deterministic SVG output: diagonals of an `N`-gon and AR quivers with
//! coloured discs.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write;

use negcat_core::orbit::{ArQuiver, Diagonal};

const SIZE: f64 = 480.0;

fn vertex(nv: usize, i: usize, r: f64) -> (f64, f64) {
    // vertex 0 at the top, numbering clockwise
    let t = 2.0 * PI * i as f64 / nv as f64;
    (SIZE / 2.0 + r * t.sin(), SIZE / 2.0 - r * t.cos())
}

fn header(w: f64, h: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" viewBox=\"0 0 {w:.0} {h:.0}\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
    )
}

/// `nv`-gon with labelled vertices, `diagonals` in black and `highlights`
/// in red.
pub fn render_polygon(nv: usize, diagonals: &[Diagonal], highlights: &[Diagonal]) -> String {
    let r = SIZE * 0.4;
    let mut s = header(SIZE, SIZE);
    let pts: Vec<(f64, f64)> = (0..nv).map(|i| vertex(nv, i, r)).collect();
    let outline: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
    writeln!(
        s,
        "<polygon points=\"{}\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>",
        outline.join(" ")
    )
    .unwrap();
    let chord = |s: &mut String, d: &Diagonal, colour: &str, width: f64| {
        let ((x1, y1), (x2, y2)) = (pts[d.a % nv], pts[d.b % nv]);
        writeln!(
            s,
            "<line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" stroke=\"{colour}\" stroke-width=\"{width:.1}\"/>"
        )
        .unwrap();
    };
    for d in diagonals {
        chord(&mut s, d, "black", 1.5);
    }
    for d in highlights {
        chord(&mut s, d, "#d62728", 2.5);
    }
    for (i, &(x, y)) in pts.iter().enumerate() {
        writeln!(
            s,
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"2.5\" fill=\"black\"/>"
        )
        .unwrap();
        let (lx, ly) = vertex(nv, i, r + 16.0);
        writeln!(
            s,
            "<text x=\"{lx:.2}\" y=\"{ly:.2}\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"middle\">{i}</text>"
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

/// Grid positions for the AR quiver: rows are `τ`-orbits ordered along the
/// row adjacency path, columns increase by one along each arrow and by two
/// along `τ^{-1}`, taken modulo the period of the rows.
fn layout(q: &ArQuiver) -> BTreeMap<Diagonal, (usize, usize)> {
    let row_of: BTreeMap<Diagonal, usize> = q
        .rows
        .iter()
        .enumerate()
        .flat_map(|(i, r)| r.iter().map(move |d| (*d, i)))
        .collect();
    let k = q.rows.len();
    let mut adj = vec![Vec::new(); k];
    for (u, v) in &q.arrows {
        let (a, b) = (row_of[u], row_of[v]);
        if a != b && !adj[a].contains(&b) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let start = (0..k).find(|&i| adj[i].len() <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut seen = vec![false; k];
    seen[start] = true;
    while let Some(&last) = order.last() {
        match adj[last].iter().copied().filter(|&j| !seen[j]).min() {
            Some(j) => {
                seen[j] = true;
                order.push(j);
            }
            None => break,
        }
    }
    for (i, s) in seen.iter().enumerate() {
        if !s {
            order.push(i);
        }
    }
    let level: BTreeMap<usize, usize> = order.iter().enumerate().map(|(l, &r)| (r, l)).collect();
    let period = 2 * q.rows.iter().map(Vec::len).max().unwrap_or(1);

    let mut col: BTreeMap<Diagonal, usize> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::new();
    for v in &q.vertices {
        if col.contains_key(v) {
            continue;
        }
        col.insert(*v, level[&row_of[v]] % 2);
        queue.push_back(*v);
        while let Some(u) = queue.pop_front() {
            let c = col[&u];
            let mut nbrs = Vec::new();
            for (x, y) in &q.arrows {
                if *x == u {
                    nbrs.push((*y, c + 1));
                }
                if *y == u {
                    nbrs.push((*x, c + period - 1));
                }
            }
            for (x, t) in &q.tau {
                if *x == u {
                    nbrs.push((*t, c + period - 2));
                }
                if *t == u {
                    nbrs.push((*x, c + 2));
                }
            }
            for (v, cv) in nbrs {
                if let std::collections::btree_map::Entry::Vacant(e) = col.entry(v) {
                    e.insert(cv % period);
                    queue.push_back(v);
                }
            }
        }
    }
    q.vertices
        .iter()
        .map(|v| (*v, (col[v], level[&row_of[v]])))
        .collect()
}

/// AR quiver with discs filled by `colours` (default light grey).
pub fn render_ar(q: &ArQuiver, colours: &BTreeMap<Diagonal, &str>) -> String {
    let pos = layout(q);
    let cols = pos.values().map(|p| p.0).max().unwrap_or(0) + 1;
    let rows = pos.values().map(|p| p.1).max().unwrap_or(0) + 1;
    let (dx, dy, m) = (56.0, 56.0, 40.0);
    let w = 2.0 * m + dx * (cols.saturating_sub(1)) as f64;
    let h = 2.0 * m + dy * (rows.saturating_sub(1)) as f64;
    let xy = |d: &Diagonal| {
        let (c, r) = pos[d];
        (m + dx * c as f64, h - m - dy * r as f64)
    };
    let mut s = header(w, h);
    s.push_str(
        "<defs><marker id=\"arr\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">\
         <path d=\"M0,0 L10,5 L0,10 z\" fill=\"#555\"/></marker></defs>\n",
    );
    let r = 15.0;
    for (u, v) in &q.arrows {
        let ((x1, y1), (x2, y2)) = (xy(u), xy(v));
        if x2 < x1 {
            continue; // wraps around the cylinder
        }
        let len = ((x2 - x1).powi(2) + (y2 - y1).powi(2)).sqrt();
        let (ux, uy) = ((x2 - x1) / len, (y2 - y1) / len);
        writeln!(
            s,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#555\" stroke-width=\"1\" marker-end=\"url(#arr)\"/>",
            x1 + ux * r,
            y1 + uy * r,
            x2 - ux * r,
            y2 - uy * r
        )
        .unwrap();
    }
    for v in &q.vertices {
        let (x, y) = xy(v);
        let fill = colours.get(v).copied().unwrap_or("#eeeeee");
        writeln!(
            s,
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"{r:.1}\" fill=\"{fill}\" stroke=\"#333\" stroke-width=\"0.8\"/>"
        )
        .unwrap();
        writeln!(
            s,
            "<text x=\"{x:.2}\" y=\"{y:.2}\" font-size=\"9\" font-family=\"sans-serif\" text-anchor=\"middle\" dominant-baseline=\"middle\">{},{}</text>",
            v.a, v.b
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_polygon_has_no_chords() {
        let s = render_polygon(18, &[], &[]);
        assert!(!s.contains("<line"));
        assert_eq!(s.matches("<text").count(), 18);
    }

    #[test]
    fn single_chord() {
        let s = render_polygon(18, &[Diagonal::new(0, 3)], &[]);
        assert_eq!(s.matches("<line").count(), 1);
        assert_eq!(s, render_polygon(18, &[Diagonal::new(0, 3)], &[]));
    }
}
