//! Faces of the projection, traced from the rotation system, and the
//! checkerboard coloring on them.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Diagram;
use crate::error::{Error, Result};

/// A corner slot: the sector between positions `corner` and `corner + 1`
/// (mod 4) of crossing `crossing`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Corner {
    pub crossing: usize,
    pub corner: usize,
}

impl Corner {
    /// Dense index `4 * crossing + corner`.
    pub fn slot(self) -> usize {
        4 * self.crossing + self.corner
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn other(self) -> Self {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceDecomposition {
    faces: Vec<Vec<Corner>>,
    face_of_corner: Vec<usize>,
}

impl FaceDecomposition {
    pub fn faces(&self) -> &[Vec<Corner>] {
        &self.faces
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face_of(&self, crossing: usize, corner: usize) -> usize {
        self.face_of_corner[4 * crossing + corner % 4]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckerboardColoring {
    color_of_face: Vec<Color>,
}

impl CheckerboardColoring {
    pub fn color(&self, face: usize) -> Color {
        self.color_of_face[face]
    }

    pub fn colors(&self) -> &[Color] {
        &self.color_of_face
    }

    /// The coloring with white and black exchanged.
    pub fn swapped(&self) -> Self {
        CheckerboardColoring {
            color_of_face: self.color_of_face.iter().map(|c| c.other()).collect(),
        }
    }
}

fn require_planar_input(d: &Diagram) -> Result<()> {
    if d.crossing_count() == 0 {
        return Err(Error::NoCrossings);
    }
    if !d.is_connected() {
        return Err(Error::DisconnectedDiagram);
    }
    Ok(())
}

/// Trace the faces of a connected diagram.
///
/// From corner `i` of a crossing, follow the arc at position `i + 1`; it
/// arrives at some position `j` of the next crossing and the face continues
/// at corner `j` there.
pub fn faces(d: &Diagram) -> Result<FaceDecomposition> {
    require_planar_input(d)?;
    let partner = d.end_partners();
    let slots = 4 * d.crossing_count();
    let mut face_of_corner = vec![usize::MAX; slots];
    let mut faces = Vec::new();
    for start in 0..slots {
        if face_of_corner[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut face = Vec::new();
        let mut cur = start;
        while face_of_corner[cur] == usize::MAX {
            face_of_corner[cur] = id;
            face.push(Corner {
                crossing: cur / 4,
                corner: cur % 4,
            });
            let leaving = 4 * (cur / 4) + (cur + 1) % 4;
            cur = partner[leaving];
        }
        debug_assert_eq!(cur, start, "face walk must close where it started");
        faces.push(face);
    }
    Ok(FaceDecomposition {
        faces,
        face_of_corner,
    })
}

/// Proper two-coloring of the faces. The face holding corner 0 of crossing 0
/// is white.
pub fn checkerboard(d: &Diagram, f: &FaceDecomposition) -> Result<CheckerboardColoring> {
    require_planar_input(d)?;
    let nf = f.face_count();
    // Corners i and i+1 of a crossing lie on opposite sides of the edge at
    // position i+1, so their faces are adjacent.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nf];
    for c in 0..d.crossing_count() {
        for i in 0..4 {
            let a = f.face_of(c, i);
            let b = f.face_of(c, i + 1);
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut color: Vec<Option<Color>> = vec![None; nf];
    let root = f.face_of(0, 0);
    color[root] = Some(Color::White);
    let mut queue = VecDeque::from([root]);
    while let Some(face) = queue.pop_front() {
        let here = color[face].expect("queued faces are colored");
        for &next in &adj[face] {
            match color[next] {
                None => {
                    color[next] = Some(here.other());
                    queue.push_back(next);
                }
                Some(c) if c == here => return Err(Error::ColoringContradiction { face: next }),
                Some(_) => {}
            }
        }
    }
    let color_of_face = color
        .into_iter()
        .enumerate()
        .map(|(face, c)| c.ok_or(Error::ColoringContradiction { face }))
        .collect::<Result<_>>()?;
    Ok(CheckerboardColoring { color_of_face })
}

/// No crossing has opposite corners in the same face.
pub fn is_reduced(d: &Diagram) -> Result<bool> {
    let f = faces(d)?;
    Ok(is_reduced_with(d, &f))
}

pub(crate) fn is_reduced_with(d: &Diagram, f: &FaceDecomposition) -> bool {
    (0..d.crossing_count())
        .all(|c| f.face_of(c, 0) != f.face_of(c, 2) && f.face_of(c, 1) != f.face_of(c, 3))
}
