//! PD-coded link diagrams.
//!
//! A crossing is a 4-tuple of arc labels listed counterclockwise, with the
//! under-strand at positions 0 and 2 and the over-strand at positions 1 and 3.
//! Corner `i` of a crossing is the sector between positions `i` and `i + 1`.

mod faces;
mod parse;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

pub(crate) use faces::is_reduced_with;
pub use faces::{
    checkerboard, faces, is_reduced, CheckerboardColoring, Color, Corner, FaceDecomposition,
};
pub use parse::parse_pd;

pub type ArcLabel = u32;

/// One crossing: four arc labels in counterclockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub ends: [ArcLabel; 4],
}

impl Crossing {
    pub fn new(ends: [ArcLabel; 4]) -> Self {
        Crossing { ends }
    }

    /// Rotate by one position. Keeps the rotation system but exchanges the
    /// roles of over and under strand.
    pub fn rotated(self) -> Self {
        let [a, b, c, d] = self.ends;
        Crossing { ends: [b, c, d, a] }
    }
}

/// The two ways of smoothing a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Smoothing {
    A,
    B,
}

impl Smoothing {
    /// Tuple positions joined by this smoothing.
    pub fn pairs(self) -> [(usize, usize); 2] {
        match self {
            Smoothing::A => [(0, 1), (2, 3)],
            Smoothing::B => [(0, 3), (1, 2)],
        }
    }

    pub fn other(self) -> Self {
        match self {
            Smoothing::A => Smoothing::B,
            Smoothing::B => Smoothing::A,
        }
    }
}

/// A validated link diagram: its crossings plus crossingless circle components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
}

impl Diagram {
    /// Build a diagram, checking that every arc label is positive and occurs
    /// exactly twice.
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self> {
        if crossings.is_empty() && free_loops == 0 {
            return Err(Error::Syntax {
                offset: 0,
                message: "empty diagram".into(),
            });
        }
        let mut counts: HashMap<ArcLabel, usize> = HashMap::new();
        for x in &crossings {
            for &l in &x.ends {
                if l == 0 {
                    return Err(Error::Syntax {
                        offset: 0,
                        message: "arc labels must be positive".into(),
                    });
                }
                *counts.entry(l).or_default() += 1;
            }
        }
        let mut bad: Vec<_> = counts.into_iter().filter(|&(_, c)| c != 2).collect();
        bad.sort_unstable();
        if let Some(&(label, count)) = bad.first() {
            return Err(Error::Label { label, count });
        }
        Ok(Diagram {
            crossings,
            free_loops,
        })
    }

    /// `free_loops` crossingless circles.
    pub fn unlinked_circles(free_loops: usize) -> Result<Self> {
        Diagram::new(Vec::new(), free_loops)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.crossings.len() {
            Ok(())
        } else {
            Err(Error::Index {
                index,
                len: self.crossings.len(),
            })
        }
    }

    /// For every end `4 * crossing + position`, the end at the other side of
    /// the same arc.
    pub fn end_partners(&self) -> Vec<usize> {
        let mut first: HashMap<ArcLabel, usize> = HashMap::with_capacity(2 * self.crossings.len());
        let mut partner = vec![usize::MAX; 4 * self.crossings.len()];
        for (c, x) in self.crossings.iter().enumerate() {
            for (p, &l) in x.ends.iter().enumerate() {
                let e = 4 * c + p;
                match first.remove(&l) {
                    Some(o) => {
                        partner[o] = e;
                        partner[e] = o;
                    }
                    None => {
                        first.insert(l, e);
                    }
                }
            }
        }
        partner
    }

    /// Map each arc label to a dense index `0..2n`.
    pub(crate) fn dense_labels(&self) -> Vec<[usize; 4]> {
        let mut index: HashMap<ArcLabel, usize> = HashMap::with_capacity(2 * self.crossings.len());
        self.crossings
            .iter()
            .map(|x| {
                x.ends.map(|l| {
                    let next = index.len();
                    *index.entry(l).or_insert(next)
                })
            })
            .collect()
    }

    /// One connected component: the crossing graph is connected and there is
    /// no free loop beside it (or the diagram is a single free loop).
    pub fn is_connected(&self) -> bool {
        let n = self.crossings.len();
        if n == 0 {
            return self.free_loops == 1;
        }
        if self.free_loops > 0 {
            return false;
        }
        let partner = self.end_partners();
        let mut uf = UnionFind::new(n);
        for (e, &o) in partner.iter().enumerate() {
            uf.union(e / 4, o / 4);
        }
        uf.count() == 1
    }

    /// Exchange over and under at every crossing.
    pub fn mirror(&self) -> Diagram {
        Diagram {
            crossings: self.crossings.iter().map(|x| x.rotated()).collect(),
            free_loops: self.free_loops,
        }
    }

    /// Switch the listed crossings.
    pub fn switch_crossings(&self, set: &[usize]) -> Result<Diagram> {
        let mut crossings = self.crossings.clone();
        for &c in set {
            self.check_index(c)?;
        }
        let mut flip = vec![false; crossings.len()];
        for &c in set {
            flip[c] = true;
        }
        for (x, f) in crossings.iter_mut().zip(flip) {
            if f {
                *x = x.rotated();
            }
        }
        Ok(Diagram {
            crossings,
            free_loops: self.free_loops,
        })
    }

    /// Remove crossing `c`, joining its ends according to `kind`. A joined arc
    /// that closes on itself becomes a free loop.
    pub fn smooth_crossing(&self, c: usize, kind: Smoothing) -> Result<Diagram> {
        self.check_index(c)?;
        let mut ends = self.crossings[c].ends;
        let mut rest: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != c)
            .map(|(_, x)| *x)
            .collect();
        let mut free_loops = self.free_loops;
        let pairs = kind.pairs();
        for (k, &(p, q)) in pairs.iter().enumerate() {
            let (keep, gone) = (ends[p], ends[q]);
            if keep == gone {
                free_loops += 1;
                continue;
            }
            // `gone` has exactly one other occurrence: at a slot of this tuple
            // not joined yet, or in another crossing.
            let later = pairs[k + 1..].iter().flat_map(|&(a, b)| [a, b]);
            if let Some(i) = later.into_iter().find(|&i| ends[i] == gone) {
                ends[i] = keep;
            } else if let Some(slot) = rest
                .iter_mut()
                .flat_map(|x| x.ends.iter_mut())
                .find(|l| **l == gone)
            {
                *slot = keep;
            }
        }
        Ok(Diagram {
            crossings: rest,
            free_loops,
        })
    }

    /// Smooth several crossings; `choices[i]` applies to `crossings_to_smooth[i]`.
    pub fn smooth_many(
        &self,
        crossings_to_smooth: &[usize],
        choices: &[Smoothing],
    ) -> Result<Diagram> {
        debug_assert_eq!(crossings_to_smooth.len(), choices.len());
        for &c in crossings_to_smooth {
            self.check_index(c)?;
        }
        let mut order: Vec<(usize, Smoothing)> = crossings_to_smooth
            .iter()
            .copied()
            .zip(choices.iter().copied())
            .collect();
        // Highest index first so earlier indices stay valid.
        order.sort_by_key(|p| std::cmp::Reverse(p.0));
        order.dedup_by_key(|p| p.0);
        let mut d = self.clone();
        for (c, s) in order {
            d = d.smooth_crossing(c, s)?;
        }
        Ok(d)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.crossings {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            let [a, b, c, d] = x.ends;
            write!(f, "X[{a},{b},{c},{d}]")?;
        }
        if self.free_loops > 0 || self.crossings.is_empty() {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "loops={}", self.free_loops)?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Diagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pd(s)
    }
}
