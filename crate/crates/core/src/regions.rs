//! Regions of the surgered surface, represented combinatorially.
//!
//! Each region is a union of same-colored faces of the projection, glued
//! together by bridges: every dealternator contributes one bridge joining its
//! two white corners and one joining its two black corners. A region with `f`
//! faces and `b` bridges is a disc with `b - f + 1` holes, hence has
//! `b - f + 2` boundary circles.

use serde::{Deserialize, Serialize};

use crate::dealternator::DealternatorInfo;
use crate::diagram::{CheckerboardColoring, Color, Diagram, FaceDecomposition};
use crate::error::{Error, Result};
use crate::states::extreme_counts;
use crate::unionfind::UnionFind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bridge {
    pub dealternator: usize,
    pub color: Color,
    /// Faces at the two corners of this color; they may coincide.
    pub endpoints: (usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionComponent {
    pub color: Color,
    pub faces: Vec<usize>,
    pub bridges: Vec<Bridge>,
    /// Rank of first homology (number of holes).
    pub s_i: usize,
    pub boundary_circles: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionDecomposition {
    pub components: Vec<RegionComponent>,
    pub r: usize,
    pub s: usize,
    /// Color whose region boundaries are the circles of the all-A state.
    pub s_a_color: Color,
    pub white_boundary_total: usize,
    pub black_boundary_total: usize,
    /// For every bridge in construction order, how much it raised the hole
    /// count of its color class (0 or 1).
    pub bridge_hole_increments: Vec<usize>,
}

impl RegionDecomposition {
    pub fn boundary_total(&self, color: Color) -> usize {
        match color {
            Color::White => self.white_boundary_total,
            Color::Black => self.black_boundary_total,
        }
    }

    pub fn components_of(&self, color: Color) -> impl Iterator<Item = &RegionComponent> {
        self.components.iter().filter(move |c| c.color == color)
    }
}

/// Corners of crossing `c` whose faces have color `color`: `[0, 2]` or `[1, 3]`.
fn corners_of_color(
    f: &FaceDecomposition,
    col: &CheckerboardColoring,
    c: usize,
    color: Color,
) -> [usize; 2] {
    if col.color(f.face_of(c, 0)) == color {
        [0, 2]
    } else {
        [1, 3]
    }
}

/// The color whose boundaries form the all-A circles.
///
/// The A-smoothing joins positions (0,1) and (2,3), so its arcs hug corners 0
/// and 2 and open up corners 1 and 3. At a non-dealternator crossing the hugged
/// color is the A color; at a dealternator the opened corners are joined by the
/// A-side bridge, so there the A color is that of corner 1.
fn s_a_color(
    info: &DealternatorInfo,
    f: &FaceDecomposition,
    col: &CheckerboardColoring,
    n: usize,
) -> Color {
    match (0..n).find(|&c| !info.is_dealternator(c)) {
        Some(c) => col.color(f.face_of(c, 0)),
        None => col.color(f.face_of(0, 1)),
    }
}

pub fn region_decomposition(
    d: &Diagram,
    info: &DealternatorInfo,
    f: &FaceDecomposition,
    col: &CheckerboardColoring,
) -> Result<RegionDecomposition> {
    let n = d.crossing_count();
    if n == 0 {
        return Err(Error::NoCrossings);
    }
    if !d.is_connected() {
        return Err(Error::DisconnectedDiagram);
    }
    let nf = f.face_count();

    let mut bridges = Vec::with_capacity(2 * info.k);
    for &c in &info.dealternators {
        for color in [Color::White, Color::Black] {
            let [p, q] = corners_of_color(f, col, c, color);
            bridges.push(Bridge {
                dealternator: c,
                color,
                endpoints: (f.face_of(c, p), f.face_of(c, q)),
            });
        }
    }

    // Faces of different colors are never joined, so one forest serves both
    // color classes.
    let mut uf = UnionFind::new(nf);
    let mut increments = Vec::with_capacity(bridges.len());
    for b in &bridges {
        let merged = uf.union(b.endpoints.0, b.endpoints.1);
        increments.push(usize::from(!merged));
    }

    let mut root_to_component = vec![usize::MAX; nf];
    let mut components: Vec<RegionComponent> = Vec::new();
    for face in 0..nf {
        let root = uf.find(face);
        if root_to_component[root] == usize::MAX {
            root_to_component[root] = components.len();
            components.push(RegionComponent {
                color: col.color(face),
                faces: Vec::new(),
                bridges: Vec::new(),
                s_i: 0,
                boundary_circles: 0,
            });
        }
        components[root_to_component[root]].faces.push(face);
    }
    for b in &bridges {
        let root = uf.find(b.endpoints.0);
        components[root_to_component[root]].bridges.push(*b);
    }
    for comp in &mut components {
        // A connected disc-with-bands has Euler characteristic faces - bridges.
        comp.s_i = comp.bridges.len() + 1 - comp.faces.len();
        comp.boundary_circles = comp.s_i + 1;
    }

    let total = |color: Color| {
        components
            .iter()
            .filter(|c| c.color == color)
            .map(|c| c.boundary_circles)
            .sum::<usize>()
    };
    let white_boundary_total = total(Color::White);
    let black_boundary_total = total(Color::Black);
    Ok(RegionDecomposition {
        r: components.len(),
        s: components.iter().map(|c| c.s_i).sum(),
        s_a_color: s_a_color(info, f, col, n),
        white_boundary_total,
        black_boundary_total,
        components,
        bridge_hole_increments: increments,
    })
}

/// `(|s_A D|, |s_B D|, total)` read off the region boundaries.
pub fn circle_number_via_regions(rd: &RegionDecomposition) -> (usize, usize, usize) {
    let sa = rd.boundary_total(rd.s_a_color);
    let sb = rd.boundary_total(rd.s_a_color.other());
    (sa, sb, rd.r + rd.s)
}

/// Every region is a disc.
pub fn is_dealternator_connected_via_regions(rd: &RegionDecomposition) -> bool {
    rd.s == 0
}

/// Terms of the region-count formula and the Euler characteristic identity,
/// compared against direct circle counting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRkReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub s: usize,
    /// `|s_A D| + |s_B D|` from the extreme states.
    pub circle_number: usize,
    /// `2k + 2r - n - 2`.
    pub rk_value: i64,
    /// `(n + 3k) - (2n + 4k + 2s) + circle number`.
    pub chi_lhs: i64,
    /// `2 - 3k`.
    pub chi_rhs: i64,
    pub rk_holds: bool,
    pub chi_holds: bool,
}

pub fn theorem_rk_check(
    d: &Diagram,
    info: &DealternatorInfo,
    rd: &RegionDecomposition,
) -> TheoremRkReport {
    let (sa, sb) = extreme_counts(d);
    let circle_number = sa + sb;
    let (n, k, r, s) = (
        d.crossing_count() as i64,
        info.k as i64,
        rd.r as i64,
        rd.s as i64,
    );
    let rk_value = 2 * k + 2 * r - n - 2;
    let chi_lhs = (n + 3 * k) - (2 * n + 4 * k + 2 * s) + circle_number as i64;
    let chi_rhs = 2 - 3 * k;
    TheoremRkReport {
        n: d.crossing_count(),
        k: info.k,
        r: rd.r,
        s: rd.s,
        circle_number,
        rk_value,
        chi_lhs,
        chi_rhs,
        rk_holds: rk_value == circle_number as i64,
        chi_holds: chi_lhs == chi_rhs,
    }
}

/// Turaev genus from `2g = 2 + n - (|s_A D| + |s_B D|)`.
pub fn turaev_genus(d: &Diagram) -> Result<usize> {
    if !d.is_connected() {
        return Err(Error::DisconnectedDiagram);
    }
    let (sa, sb) = extreme_counts(d);
    let twice = 2 + d.crossing_count() as i64 - (sa + sb) as i64;
    debug_assert!(twice >= 0 && twice % 2 == 0, "2g = {twice}");
    Ok((twice / 2) as usize)
}

/// Vertex, edge and Euler characteristic counts of the surgered surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceData {
    pub vertices: usize,
    pub edges: usize,
    pub chi: i64,
    pub genus: usize,
    pub boundary: usize,
}

pub fn surface_data(n: usize, k: usize) -> SurfaceData {
    SurfaceData {
        vertices: n + 3 * k,
        edges: 2 * n + 4 * k,
        chi: 2 - 3 * k as i64,
        genus: k,
        boundary: k,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dealternator::dealternator_info;
    use crate::diagram::{checkerboard, faces};

    fn decompose(text: &str) -> (Diagram, DealternatorInfo, RegionDecomposition) {
        let d: Diagram = text.parse().unwrap();
        let info = dealternator_info(&d).unwrap();
        let f = faces(&d).unwrap();
        let col = checkerboard(&d, &f).unwrap();
        let rd = region_decomposition(&d, &info, &f, &col).unwrap();
        (d, info, rd)
    }

    #[test]
    fn alternating_trefoil_regions_are_faces() {
        let (d, info, rd) = decompose("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
        assert_eq!(rd.r, 5);
        assert_eq!(rd.s, 0);
        let mut totals = [rd.white_boundary_total, rd.black_boundary_total];
        totals.sort_unstable();
        assert_eq!(totals, [2, 3]);
        let (sa, sb, total) = circle_number_via_regions(&rd);
        assert_eq!((sa, sb), extreme_counts(&d));
        assert_eq!(total, 5);
        assert!(is_dealternator_connected_via_regions(&rd));
        let rk = theorem_rk_check(&d, &info, &rd);
        assert!(rk.rk_holds && rk.chi_holds);
        assert_eq!(rk.rk_value, 5);
    }

    #[test]
    fn switched_trefoil() {
        let (d, info, rd) = decompose("X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]");
        assert_eq!(info.k, 1);
        let (sa, sb, total) = circle_number_via_regions(&rd);
        assert_eq!((sa, sb), extreme_counts(&d));
        assert_eq!(total, 3);
        assert_eq!(turaev_genus(&d).unwrap(), 1);
    }

    #[test]
    fn surface_counts() {
        assert_eq!(
            surface_data(3, 0),
            SurfaceData {
                vertices: 3,
                edges: 6,
                chi: 2,
                genus: 0,
                boundary: 0
            }
        );
        let s = surface_data(10, 3);
        assert_eq!((s.vertices, s.edges, s.chi), (19, 32, -7));
        assert_eq!((s.genus, s.boundary), (3, 3));
    }

    #[test]
    fn genus_rejects_disconnected() {
        let d: Diagram = "loops=2".parse().unwrap();
        assert_eq!(turaev_genus(&d).unwrap_err(), Error::DisconnectedDiagram);
        let unknot: Diagram = "loops=1".parse().unwrap();
        assert_eq!(turaev_genus(&unknot).unwrap(), 0);
    }
}
