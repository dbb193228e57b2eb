//! Dealternator detection.
//!
//! Switching crossing `c` is modeled by a binary unknown `x_c`. Along every arc
//! the two ends must become one over and one under, which fixes
//! `x_c xor x_c'` for the two crossings the arc joins. On a connected diagram
//! these relations have exactly two solutions, complements of each other; the
//! lighter one is the dealternator set.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::diagram::{self, Diagram, Smoothing};
use crate::error::{Error, Result};

/// Default upper bound on `k` for enumerating dealternator smoothings.
pub const DEFAULT_DEALTERNATOR_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DealternatorInfo {
    pub k: usize,
    /// Sorted crossing indices.
    pub dealternators: Vec<usize>,
    /// The input with every dealternator switched.
    pub alternating_diagram: Diagram,
    /// Both candidate sets had size `n / 2`.
    pub tie: bool,
}

impl DealternatorInfo {
    pub fn is_alternating(&self) -> bool {
        self.k == 0
    }

    pub fn is_dealternator(&self, c: usize) -> bool {
        self.dealternators.binary_search(&c).is_ok()
    }
}

/// Solve the switch relations with crossing 0 unswitched.
fn solve_switches(d: &Diagram) -> Result<Vec<bool>> {
    let n = d.crossing_count();
    let partner = d.end_partners();
    // Position parity: odd positions carry the over-strand.
    let over = |end: usize| end % 2 == 1;
    let mut x: Vec<Option<bool>> = vec![None; n];
    x[0] = Some(false);
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        let xc = x[c].expect("queued crossings are assigned");
        for p in 0..4 {
            let here = 4 * c + p;
            let there = partner[here];
            let other = there / 4;
            let need = xc ^ !(over(here) ^ over(there));
            match x[other] {
                None => {
                    x[other] = Some(need);
                    queue.push_back(other);
                }
                Some(v) if v != need => {
                    return Err(Error::ConstraintContradiction { crossing: other })
                }
                Some(_) => {}
            }
        }
    }
    x.into_iter()
        .map(|v| v.ok_or(Error::DisconnectedDiagram))
        .collect()
}

/// Minimal dealternator set of a connected diagram.
pub fn dealternator_info(d: &Diagram) -> Result<DealternatorInfo> {
    if d.crossing_count() == 0 {
        return Err(Error::NoCrossings);
    }
    if !d.is_connected() {
        return Err(Error::DisconnectedDiagram);
    }
    let n = d.crossing_count();
    let x = solve_switches(d)?;
    let weight = x.iter().filter(|&&b| b).count();
    let tie = 2 * weight == n;
    // On a tie the solution leaving crossing 0 unswitched wins, which is `x`.
    let take_complement = 2 * weight > n;
    let dealternators: Vec<usize> = (0..n).filter(|&c| x[c] != take_complement).collect();
    let alternating_diagram = d.switch_crossings(&dealternators)?;
    Ok(DealternatorInfo {
        k: dealternators.len(),
        dealternators,
        alternating_diagram,
        tie,
    })
}

fn check_cap(k: usize, cap: usize) -> Result<()> {
    if k > cap || k >= 64 {
        Err(Error::CapExceeded {
            what: "dealternator smoothings",
            requested: k,
            cap,
        })
    } else {
        Ok(())
    }
}

/// Choice vector for smoothing index `i`: bit `j` of `i` picks the smoothing
/// of the `j`-th dealternator (clear = A).
pub fn smoothing_choices(info: &DealternatorInfo, i: u64) -> Vec<Smoothing> {
    (0..info.k)
        .map(|j| {
            if i >> j & 1 == 0 {
                Smoothing::A
            } else {
                Smoothing::B
            }
        })
        .collect()
}

/// All `2^k` diagrams obtained by smoothing every dealternator, in the order
/// of [`smoothing_choices`].
pub fn dealternator_smoothings(
    d: &Diagram,
    info: &DealternatorInfo,
    cap: usize,
) -> Result<Vec<Diagram>> {
    check_cap(info.k, cap)?;
    (0..1u64 << info.k)
        .map(|i| d.smooth_many(&info.dealternators, &smoothing_choices(info, i)))
        .collect()
}

/// Every dealternator smoothing is connected. A smoothing that splits off a
/// crossingless circle while crossings remain counts as disconnected.
pub fn is_dealternator_connected(d: &Diagram, info: &DealternatorInfo, cap: usize) -> Result<bool> {
    Ok(dealternator_smoothings(d, info, cap)?
        .iter()
        .all(Diagram::is_connected))
}

/// Outcome of the dealternator-reducedness test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum Reducedness {
    Reduced,
    /// Smoothing number `smoothing` has a nugatory crossing.
    NotReduced {
        smoothing: usize,
    },
    /// Smoothing number `smoothing` is disconnected, so reducedness is not
    /// defined for it.
    Disconnected {
        smoothing: usize,
    },
}

impl Reducedness {
    pub fn is_reduced(self) -> bool {
        self == Reducedness::Reduced
    }
}

/// Every dealternator smoothing is reduced.
pub fn is_dealternator_reduced(
    d: &Diagram,
    info: &DealternatorInfo,
    cap: usize,
) -> Result<Reducedness> {
    for (i, di) in dealternator_smoothings(d, info, cap)?.iter().enumerate() {
        if !di.is_connected() {
            return Ok(Reducedness::Disconnected { smoothing: i });
        }
        if !diagram::is_reduced(di)? {
            return Ok(Reducedness::NotReduced { smoothing: i });
        }
    }
    Ok(Reducedness::Reduced)
}
