//! PD codes for pretzel diagrams `P(a_1, ..., a_m)`.
//!
//! Band `i` is a vertical column of `|a_i|` crossings. The top-right end of
//! each band joins the top-left end of the next one, and the last band's
//! top-right end runs around the outside back to the first band's top-left
//! end; the bottom is wired the same way. The sign of `a_i` picks which strand
//! is over at every crossing of the band, so bands of equal sign alternate
//! with each other and mixed signs do not.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{ArcLabel, Crossing, Diagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PretzelSpec {
    twists: Vec<i32>,
}

impl PretzelSpec {
    pub fn new(twists: Vec<i32>) -> Result<Self> {
        if twists.len() < 2 {
            return Err(Error::Spec(format!(
                "need at least 2 bands, got {}",
                twists.len()
            )));
        }
        if let Some(i) = twists.iter().position(|&t| t == 0) {
            return Err(Error::Spec(format!("band {i} has zero twists")));
        }
        Ok(PretzelSpec { twists })
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn crossing_count(&self) -> usize {
        self.twists.iter().map(|t| t.unsigned_abs() as usize).sum()
    }

    /// Every twist negated.
    pub fn negated(&self) -> Self {
        PretzelSpec {
            twists: self.twists.iter().map(|t| -t).collect(),
        }
    }
}

impl FromStr for PretzelSpec {
    type Err = Error;

    /// Comma-separated twist counts, e.g. `4,-3,3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix("P(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        let twists = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Spec(format!("bad twist count {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        PretzelSpec::new(twists)
    }
}

impl fmt::Display for PretzelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("P(")?;
        for (i, t) in self.twists.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

/// Endpoint of a crossing in the drawing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Port {
    Ne,
    Nw,
    Sw,
    Se,
}

type End = (usize, Port);

pub fn pretzel(spec: &PretzelSpec) -> Result<Diagram> {
    let m = spec.twists.len();
    // Global crossing index of band i, row j.
    let mut first = Vec::with_capacity(m);
    let mut next = 0;
    for t in &spec.twists {
        first.push(next);
        next += t.unsigned_abs() as usize;
    }
    let len = |i: usize| spec.twists[i].unsigned_abs() as usize;
    let top = |i: usize| first[i];
    let bottom = |i: usize| first[i] + len(i) - 1;

    let mut wires: Vec<(End, End)> = Vec::new();
    for i in 0..m {
        for up in top(i)..bottom(i) {
            let down = up + 1;
            wires.push(((up, Port::Sw), (down, Port::Nw)));
            wires.push(((up, Port::Se), (down, Port::Ne)));
        }
        let right = (i + 1) % m;
        wires.push(((top(i), Port::Ne), (top(right), Port::Nw)));
        wires.push(((bottom(i), Port::Se), (bottom(right), Port::Sw)));
    }
    let mut wire_of: HashMap<End, usize> = HashMap::with_capacity(2 * wires.len());
    for (w, &(a, b)) in wires.iter().enumerate() {
        wire_of.insert(a, w);
        wire_of.insert(b, w);
    }

    // Counterclockwise NE, NW, SW, SE; the PD tuple starts on an under end.
    let mut label_of_wire: Vec<Option<ArcLabel>> = vec![None; wires.len()];
    let mut next_label: ArcLabel = 1;
    let mut crossings = Vec::with_capacity(next);
    for (i, &t) in spec.twists.iter().enumerate() {
        // Positive bands put the NE-SW strand over. This orientation gives
        // P(4,-3,3) the extreme counts |s_A| = 4, |s_B| = 6.
        let ports = if t > 0 {
            [Port::Nw, Port::Sw, Port::Se, Port::Ne]
        } else {
            [Port::Ne, Port::Nw, Port::Sw, Port::Se]
        };
        for j in 0..len(i) {
            let c = first[i] + j;
            let ends = ports.map(|p| {
                let w = wire_of[&(c, p)];
                *label_of_wire[w].get_or_insert_with(|| {
                    let l = next_label;
                    next_label += 1;
                    l
                })
            });
            crossings.push(Crossing::new(ends));
        }
    }
    Diagram::new(crossings, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::extreme_counts;

    #[test]
    fn spec_validation() {
        assert!(matches!(PretzelSpec::new(vec![3]), Err(Error::Spec(_))));
        assert!(matches!(PretzelSpec::new(vec![3, 0]), Err(Error::Spec(_))));
        assert!(matches!("1,x".parse::<PretzelSpec>(), Err(Error::Spec(_))));
        let s: PretzelSpec = "P(4,-3,3)".parse().unwrap();
        assert_eq!(s.twists(), &[4, -3, 3]);
        assert_eq!(s.to_string(), "P(4,-3,3)");
        assert_eq!(s.crossing_count(), 10);
    }

    #[test]
    fn small_pretzels_are_connected() {
        for t in [
            vec![2, 2],
            vec![1, 1],
            vec![3, 3, 3],
            vec![4, -3, 3],
            vec![1, -1, 1, -1],
        ] {
            let spec = PretzelSpec::new(t).unwrap();
            let d = pretzel(&spec).unwrap();
            assert_eq!(d.crossing_count(), spec.crossing_count());
            assert!(d.is_connected(), "{spec}");
        }
    }

    #[test]
    fn negation_mirrors() {
        let spec: PretzelSpec = "4,-3,3".parse().unwrap();
        let (a, b) = extreme_counts(&pretzel(&spec).unwrap());
        let (na, nb) = extreme_counts(&pretzel(&spec.negated()).unwrap());
        assert_eq!((a, b), (nb, na));
    }

    #[test]
    fn deterministic_labels() {
        let d = pretzel(&"2,2".parse().unwrap()).unwrap();
        assert_eq!(
            d.to_string(),
            pretzel(&"2,2".parse().unwrap()).unwrap().to_string()
        );
        assert_eq!(d.crossings()[0].ends[0], 1);
    }
}
