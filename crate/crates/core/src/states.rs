//! Smoothing states and circle counting.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, Smoothing};
use crate::error::{Error, Result};
use crate::unionfind::UnionFind;

/// Default upper bound on the crossing count for full state enumeration.
pub const DEFAULT_STATE_CAP: usize = 24;

/// Hard limit imposed by the 64-bit state packing.
pub const MAX_STATE_BITS: usize = 63;

/// A smoothing choice per crossing, packed as bits: bit `i` clear means the
/// A-smoothing at crossing `i`, set means the B-smoothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct State {
    bits: u64,
    len: usize,
}

impl State {
    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_STATE_BITS, "state too long");
        let mask = if len == 0 { 0 } else { u64::MAX >> (64 - len) };
        State {
            bits: bits & mask,
            len,
        }
    }

    pub fn all(kind: Smoothing, len: usize) -> Self {
        match kind {
            Smoothing::A => State::from_bits(0, len),
            Smoothing::B => State::from_bits(u64::MAX, len),
        }
    }

    pub fn from_choices(choices: &[Smoothing]) -> Self {
        let bits = choices
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == Smoothing::B)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        State::from_bits(bits, choices.len())
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn choice(&self, i: usize) -> Smoothing {
        if self.bits >> i & 1 == 0 {
            Smoothing::A
        } else {
            Smoothing::B
        }
    }

    /// Number of B-smoothings.
    pub fn b_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn a_count(&self) -> usize {
        self.len - self.b_count()
    }

    /// The same state with crossing `i` flipped.
    pub fn toggled(&self, i: usize) -> Self {
        State::from_bits(self.bits ^ 1 << i, self.len)
    }
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(match self.choice(i) {
                Smoothing::A => "A",
                Smoothing::B => "B",
            })?;
        }
        Ok(())
    }
}

/// All `2^n` states in binary counting order.
#[derive(Debug, Clone)]
pub struct StateIter {
    next: u64,
    end: u64,
    len: usize,
}

impl Iterator for StateIter {
    type Item = State;

    fn next(&mut self) -> Option<State> {
        if self.next >= self.end {
            return None;
        }
        let s = State::from_bits(self.next, self.len);
        self.next += 1;
        Some(s)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for StateIter {}

pub fn check_state_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_STATE_BITS);
    if n > cap {
        Err(Error::CapExceeded {
            what: "state enumeration",
            requested: n,
            cap,
        })
    } else {
        Ok(())
    }
}

pub fn state_iterator(n: usize, cap: usize) -> Result<StateIter> {
    check_state_cap(n, cap)?;
    Ok(StateIter {
        next: 0,
        end: 1u64 << n,
        len: n,
    })
}

/// Counts circles for many states of one diagram, reusing its buffers.
#[derive(Debug, Clone)]
pub struct CircleCounter {
    ends: Vec<[usize; 4]>,
    free_loops: usize,
    uf: UnionFind,
}

impl CircleCounter {
    pub fn new(d: &Diagram) -> Self {
        let ends = d.dense_labels();
        CircleCounter {
            uf: UnionFind::new(2 * ends.len()),
            ends,
            free_loops: d.free_loops(),
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.ends.len()
    }

    fn smooth_all(&mut self, s: State) {
        self.uf.reset();
        for (i, e) in self.ends.iter().enumerate() {
            for (p, q) in s.choice(i).pairs() {
                self.uf.union(e[p], e[q]);
            }
        }
    }

    /// Circles after smoothing every crossing according to `s`. The state
    /// length is not checked here.
    pub fn count(&mut self, s: State) -> usize {
        self.smooth_all(s);
        self.uf.count() + self.free_loops
    }

    /// Whether, in state `s`, the two arcs replacing some crossing belong to
    /// the same circle.
    pub fn has_self_touching_crossing(&mut self, s: State) -> bool {
        self.smooth_all(s);
        for i in 0..self.ends.len() {
            let [(p, _), (r, _)] = s.choice(i).pairs();
            let e = self.ends[i];
            if self.uf.same(e[p], e[r]) {
                return true;
            }
        }
        false
    }
}

/// Number of circles of `d` smoothed according to `s`, free loops included.
pub fn circle_count(d: &Diagram, s: State) -> Result<usize> {
    if s.len() != d.crossing_count() {
        return Err(Error::LengthMismatch {
            expected: d.crossing_count(),
            got: s.len(),
        });
    }
    Ok(CircleCounter::new(d).count(s))
}

/// Circle count by walking the curves of the smoothed diagram end to end:
/// inside a crossing the state pairs each end with one neighbour, outside
/// each end continues along its arc to the partner end. Slower than
/// [`CircleCounter`] and independent of it.
pub fn trace_circles(d: &Diagram, s: State) -> Result<usize> {
    let n = d.crossing_count();
    if s.len() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            got: s.len(),
        });
    }
    let partner = d.end_partners();
    let mut inner = vec![0usize; 4 * n];
    for c in 0..n {
        for (p, q) in s.choice(c).pairs() {
            inner[4 * c + p] = 4 * c + q;
            inner[4 * c + q] = 4 * c + p;
        }
    }
    let mut seen = vec![false; 4 * n];
    let mut circles = d.free_loops();
    for start in 0..4 * n {
        if seen[start] {
            continue;
        }
        circles += 1;
        let mut e = start;
        loop {
            let across = inner[e];
            seen[e] = true;
            seen[across] = true;
            e = partner[across];
            if e == start {
                break;
            }
        }
    }
    Ok(circles)
}

/// `(|s_A D|, |s_B D|)`: circle counts of the all-A and all-B states.
pub fn extreme_counts(d: &Diagram) -> (usize, usize) {
    let n = d.crossing_count();
    let mut counter = CircleCounter::new(d);
    (
        counter.count(State::all(Smoothing::A, n)),
        counter.count(State::all(Smoothing::B, n)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn trefoil_extremes() {
        let (a, b) = extreme_counts(&pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"));
        assert_eq!(a + b, 5);
    }

    #[test]
    fn free_loop_alone() {
        let d = pd("loops=1");
        assert_eq!(circle_count(&d, State::from_bits(0, 0)).unwrap(), 1);
    }

    #[test]
    fn curl_extremes() {
        let (a, b) = extreme_counts(&pd("X[1,1,2,2]"));
        let mut v = [a, b];
        v.sort_unstable();
        assert_eq!(v, [1, 2]);
    }

    #[test]
    fn length_mismatch() {
        let d = pd("X[1,1,2,2]");
        assert_eq!(
            circle_count(&d, State::from_bits(0, 2)).unwrap_err(),
            Error::LengthMismatch {
                expected: 1,
                got: 2
            }
        );
    }

    #[test]
    fn iterator_sizes() {
        assert_eq!(state_iterator(0, 24).unwrap().count(), 1);
        assert_eq!(state_iterator(3, 24).unwrap().count(), 8);
        assert_eq!(state_iterator(10, 24).unwrap().len(), 1024);
        let v: Vec<u64> = state_iterator(2, 24).unwrap().map(|s| s.bits()).collect();
        assert_eq!(v, [0, 1, 2, 3]);
        assert!(matches!(
            state_iterator(25, 24),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn state_packing() {
        let s = State::from_choices(&[Smoothing::A, Smoothing::B, Smoothing::B]);
        assert_eq!(s.bits(), 0b110);
        assert_eq!(s.to_string(), "ABB");
        assert_eq!(s.b_count(), 2);
        assert_eq!(s.toggled(0).to_string(), "BBB");
        assert_eq!(State::all(Smoothing::B, 3).bits(), 0b111);
    }

    #[test]
    fn tracer_matches_union_find() {
        let d = pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]");
        let mut counter = CircleCounter::new(&d);
        for s in state_iterator(4, DEFAULT_STATE_CAP).unwrap() {
            assert_eq!(trace_circles(&d, s).unwrap(), counter.count(s));
        }
        assert_eq!(
            trace_circles(&pd("loops=3"), State::from_bits(0, 0)).unwrap(),
            3
        );
    }
}
