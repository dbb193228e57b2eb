//! Kauffman bracket by full state sum, and the degree data around it.
//!
//! Each state contributes `A^(#A - #B) * delta^(circles - 1)` with
//! `delta = -A^2 - A^-2`, so a single free loop has bracket 1.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dealternator::{self, DealternatorInfo, Reducedness, DEFAULT_DEALTERNATOR_CAP};
use crate::diagram::{Diagram, Smoothing};
use crate::error::Result;
use crate::laurent::LaurentPolynomial;
use crate::regions::RegionDecomposition;
use crate::states::{check_state_cap, extreme_counts, CircleCounter, State, DEFAULT_STATE_CAP};

/// States per work unit in the parallel state sum.
const CHUNK_BITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BracketOptions {
    pub state_cap: usize,
    pub parallel: bool,
}

impl Default for BracketOptions {
    fn default() -> Self {
        BracketOptions {
            state_cap: DEFAULT_STATE_CAP,
            parallel: true,
        }
    }
}

/// `hist[b * width + c]` = number of states with `b` B-smoothings and `c`
/// circles from the crossings (free loops excluded).
struct Histogram {
    width: usize,
    counts: Vec<u64>,
}

impl Histogram {
    fn new(n: usize) -> Self {
        let width = 2 * n + 2;
        Histogram {
            width,
            counts: vec![0; (n + 1) * width],
        }
    }

    fn merge(mut self, other: Histogram) -> Histogram {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }
}

fn histogram_range(d: &Diagram, lo: u64, hi: u64) -> Histogram {
    let n = d.crossing_count();
    let mut counter = CircleCounter::new(d);
    let mut hist = Histogram::new(n);
    let loops = d.free_loops();
    for bits in lo..hi {
        let s = State::from_bits(bits, n);
        let circles = counter.count(s) - loops;
        hist.counts[s.b_count() * hist.width + circles] += 1;
    }
    hist
}

pub fn kauffman_bracket(d: &Diagram) -> Result<LaurentPolynomial> {
    kauffman_bracket_with(d, BracketOptions::default())
}

pub fn kauffman_bracket_with(d: &Diagram, opts: BracketOptions) -> Result<LaurentPolynomial> {
    let n = d.crossing_count();
    check_state_cap(n, opts.state_cap)?;
    let total = 1u64 << n;
    let hist = if opts.parallel && n > CHUNK_BITS {
        let chunk = 1u64 << CHUNK_BITS;
        (0..total / chunk)
            .into_par_iter()
            .map(|i| histogram_range(d, i * chunk, (i + 1) * chunk))
            .reduce(|| Histogram::new(n), Histogram::merge)
    } else {
        histogram_range(d, 0, total)
    };

    let loops = d.free_loops();
    let delta = LaurentPolynomial::delta();
    let max_circles = hist.width - 1 + loops;
    let mut delta_pows = Vec::with_capacity(max_circles);
    delta_pows.push(LaurentPolynomial::one());
    for _ in 1..max_circles {
        let next = delta_pows.last().expect("nonempty").checked_mul(&delta)?;
        delta_pows.push(next);
    }

    let mut result = LaurentPolynomial::zero();
    for b in 0..=n {
        let mut by_circles = LaurentPolynomial::zero();
        for c in 0..hist.width {
            let count = hist.counts[b * hist.width + c];
            if count == 0 {
                continue;
            }
            let count = i64::try_from(count).map_err(|_| crate::Error::CoefficientOverflow)?;
            let term = delta_pows[c + loops - 1].checked_scale(count)?;
            by_circles = by_circles.checked_add(&term)?;
        }
        result = result.checked_add(&by_circles.shifted(n as i64 - 2 * b as i64))?;
    }
    Ok(result)
}

/// Whether `<D> = A <D_A> + A^-1 <D_B>` at crossing `c`.
pub fn skein_check(d: &Diagram, c: usize) -> Result<bool> {
    skein_check_with(d, c, BracketOptions::default())
}

pub fn skein_check_with(d: &Diagram, c: usize, opts: BracketOptions) -> Result<bool> {
    d.check_index(c)?;
    let whole = kauffman_bracket_with(d, opts)?;
    let a = kauffman_bracket_with(&d.smooth_crossing(c, Smoothing::A)?, opts)?;
    let b = kauffman_bracket_with(&d.smooth_crossing(c, Smoothing::B)?, opts)?;
    Ok(whole == a.shifted(1).checked_add(&b.shifted(-1))?)
}

/// `(A-adequate, B-adequate)`: in the all-A (all-B) state no crossing has both
/// of its replacement arcs on the same circle.
pub fn adequacy(d: &Diagram) -> (bool, bool) {
    let n = d.crossing_count();
    let mut counter = CircleCounter::new(d);
    (
        !counter.has_self_touching_crossing(State::all(Smoothing::A, n)),
        !counter.has_self_touching_crossing(State::all(Smoothing::B, n)),
    )
}

/// `(M, m)`: the largest and smallest degrees the bracket can reach,
/// `M = n + 2|s_A D| - 2` and `m = -n - 2|s_B D| + 2`.
pub fn degree_bounds(d: &Diagram) -> (i64, i64) {
    let n = d.crossing_count() as i64;
    let (sa, sb) = extreme_counts(d);
    (n + 2 * sa as i64 - 2, -n - 2 * sb as i64 + 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketReport {
    #[serde(flatten)]
    pub bracket: LaurentPolynomial,
    pub span: u64,
    #[serde(rename = "M")]
    pub max_degree_bound: i64,
    #[serde(rename = "m")]
    pub min_degree_bound: i64,
    #[serde(rename = "a_M")]
    pub a_max: i64,
    #[serde(rename = "a_m")]
    pub a_min: i64,
    #[serde(rename = "A_adequate")]
    pub a_adequate: bool,
    #[serde(rename = "B_adequate")]
    pub b_adequate: bool,
}

impl BracketReport {
    /// Every exponent is congruent to `M` mod 4 and lies in `[m, M]`.
    pub fn degree_support_ok(&self) -> bool {
        self.bracket.terms().all(|(e, _)| {
            (e - self.max_degree_bound).rem_euclid(4) == 0
                && self.min_degree_bound <= e
                && e <= self.max_degree_bound
        })
    }
}

pub fn bracket_report(d: &Diagram, bracket: LaurentPolynomial) -> Result<BracketReport> {
    let span = bracket.span()?;
    let (max_degree_bound, min_degree_bound) = degree_bounds(d);
    let (a_adequate, b_adequate) = adequacy(d);
    Ok(BracketReport {
        a_max: bracket.coefficient(max_degree_bound),
        a_min: bracket.coefficient(min_degree_bound),
        bracket,
        span,
        max_degree_bound,
        min_degree_bound,
        a_adequate,
        b_adequate,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundVerdict {
    pub value: i64,
    pub applicable: bool,
    /// `span <= value`, evaluated whether or not the bound applies.
    pub satisfied: bool,
}

impl BoundVerdict {
    fn new(value: i64, applicable: bool, span: u64) -> Self {
        BoundVerdict {
            value,
            applicable,
            satisfied: span as i64 <= value,
        }
    }

    /// A failure is an applicable bound that the span exceeds.
    pub fn holds(&self) -> bool {
        !self.applicable || self.satisfied
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub span: u64,
    /// `2n + 2(|s_A D| + |s_B D|) - 4`, valid for every diagram.
    pub generic: BoundVerdict,
    /// `4(n - k)`, for dealternator connected diagrams.
    pub zhu: BoundVerdict,
    /// `4(n - k - 2)`, for dealternator connected and reduced diagrams, `k >= 1`.
    pub adams: BoundVerdict,
    /// `a_M = a_m = 0`, reported where the `4(n - k - 2)` bound applies.
    pub adams_extremes_vanish: Option<bool>,
    /// `2n + 2r - 4`. Not a theorem; reported for comparison only.
    pub region_candidate: BoundVerdict,
    pub dealternator_connected: bool,
    pub dealternator_reduced: bool,
}

impl BoundsReport {
    pub fn all_hold(&self) -> bool {
        self.generic.holds()
            && self.zhu.holds()
            && self.adams.holds()
            && self.adams_extremes_vanish != Some(false)
    }
}

/// Evaluate every span bound against a computed bracket.
pub fn bounds_report(
    d: &Diagram,
    info: &DealternatorInfo,
    rd: &RegionDecomposition,
    bracket: &BracketReport,
) -> Result<BoundsReport> {
    let n = d.crossing_count() as i64;
    let k = info.k as i64;
    let (sa, sb) = extreme_counts(d);
    let span = bracket.span;
    let dc = dealternator::is_dealternator_connected(d, info, DEFAULT_DEALTERNATOR_CAP)?;
    let dr = dealternator::is_dealternator_reduced(d, info, DEFAULT_DEALTERNATOR_CAP)?
        == Reducedness::Reduced;
    let adams_applies = dc && dr && info.k >= 1;
    Ok(BoundsReport {
        span,
        generic: BoundVerdict::new(2 * n + 2 * (sa + sb) as i64 - 4, true, span),
        zhu: BoundVerdict::new(4 * (n - k), dc, span),
        adams: BoundVerdict::new(4 * (n - k - 2), adams_applies, span),
        adams_extremes_vanish: adams_applies.then_some(bracket.a_max == 0 && bracket.a_min == 0),
        region_candidate: BoundVerdict::new(2 * n + 2 * rd.r as i64 - 4, false, span),
        dealternator_connected: dc,
        dealternator_reduced: dr,
    })
}

/// Brackets and extreme data of a diagram and both smoothings at one crossing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothingRecursion {
    pub crossing: usize,
    pub s_a: (usize, usize, usize),
    pub s_b: (usize, usize, usize),
    /// `M` of D, D_A and D_B.
    pub max_bounds: (i64, i64, i64),
    pub min_bounds: (i64, i64, i64),
    /// `a_M` of D, D_A and D_B, each read at its own `M`.
    pub a_max: (i64, i64, i64),
    pub a_min: (i64, i64, i64),
}

impl SmoothingRecursion {
    /// The circle-count shifts and coefficient sums expected at a
    /// dealternator of a dealternator connected diagram.
    pub fn dealternator_identities_hold(&self) -> bool {
        let (a, a1, a2) = self.s_a;
        let (b, b1, b2) = self.s_b;
        let (m, m1, m2) = self.max_bounds;
        let (lo, lo1, lo2) = self.min_bounds;
        a1 == a
            && a2 == a + 1
            && b1 == b + 1
            && b2 == b
            && m1 == m - 1
            && m2 == m + 1
            && lo1 == lo - 1
            && lo2 == lo + 1
            && self.a_max.0 == self.a_max.1 + self.a_max.2
            && self.a_min.0 == self.a_min.1 + self.a_min.2
    }
}

pub fn smoothing_recursion(
    d: &Diagram,
    c: usize,
    opts: BracketOptions,
) -> Result<SmoothingRecursion> {
    d.check_index(c)?;
    let d1 = d.smooth_crossing(c, Smoothing::A)?;
    let d2 = d.smooth_crossing(c, Smoothing::B)?;
    let data = |x: &Diagram| -> Result<(usize, usize, i64, i64, i64, i64)> {
        let (sa, sb) = extreme_counts(x);
        let (hi, lo) = degree_bounds(x);
        let p = kauffman_bracket_with(x, opts)?;
        Ok((sa, sb, hi, lo, p.coefficient(hi), p.coefficient(lo)))
    };
    let (a0, b0, h0, l0, x0, y0) = data(d)?;
    let (a1, b1, h1, l1, x1, y1) = data(&d1)?;
    let (a2, b2, h2, l2, x2, y2) = data(&d2)?;
    Ok(SmoothingRecursion {
        crossing: c,
        s_a: (a0, a1, a2),
        s_b: (b0, b1, b2),
        max_bounds: (h0, h1, h2),
        min_bounds: (l0, l1, l2),
        a_max: (x0, x1, x2),
        a_min: (y0, y1, y2),
    })
}
