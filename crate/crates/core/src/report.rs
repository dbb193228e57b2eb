//! The full analysis bundle for one diagram.

use serde::{Deserialize, Serialize};

use crate::bracket::{self, BoundsReport, BracketOptions, BracketReport};
use crate::dealternator::{self, DEFAULT_DEALTERNATOR_CAP};
use crate::diagram::{self, Color, Diagram, Smoothing};
use crate::error::Result;
use crate::regions::{self, SurfaceData};
use crate::states::{extreme_counts, DEFAULT_STATE_CAP};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Compute the bracket section.
    pub bracket: bool,
    pub state_cap: usize,
    pub dealternator_cap: usize,
    /// Largest crossing count for which the skein relation is checked at every
    /// crossing.
    pub skein_limit: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            bracket: true,
            state_cap: DEFAULT_STATE_CAP,
            dealternator_cap: DEFAULT_DEALTERNATOR_CAP,
            skein_limit: 16,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CheckStatus {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl CheckStatus {
    fn of(ok: bool) -> Self {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }

    fn maybe(ok: Option<bool>) -> Self {
        ok.map_or(CheckStatus::NotApplicable, CheckStatus::of)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub theorem_rs: CheckStatus,
    pub theorem_rk: CheckStatus,
    pub chi_identity: CheckStatus,
    pub skein_all: CheckStatus,
    pub region_vs_direct: CheckStatus,
    pub dc_methods_agree: CheckStatus,
}

impl Checks {
    pub fn any_failed(&self) -> bool {
        [
            self.theorem_rs,
            self.theorem_rk,
            self.chi_identity,
            self.skein_all,
            self.region_vs_direct,
            self.dc_methods_agree,
        ]
        .contains(&CheckStatus::Fail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionSummary {
    pub color: Color,
    pub face_count: usize,
    pub bridge_count: usize,
    pub s_i: usize,
}

/// Field order is the serialization order. Topology fields are `null` when
/// the diagram has no crossings or is disconnected.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub free_loops: usize,
    pub k: Option<usize>,
    pub dealternators: Option<Vec<usize>>,
    pub tie: Option<bool>,
    pub is_connected: bool,
    pub is_reduced: Option<bool>,
    pub is_alternating: Option<bool>,
    pub is_dealternator_connected: Option<bool>,
    pub is_dealternator_reduced: Option<bool>,
    #[serde(rename = "sA")]
    pub s_a: usize,
    #[serde(rename = "sB")]
    pub s_b: usize,
    pub circle_number: usize,
    pub r: Option<usize>,
    pub s: Option<usize>,
    pub per_region: Option<Vec<RegionSummary>>,
    pub turaev_genus: Option<usize>,
    pub surface: Option<SurfaceData>,
    pub bracket: Option<BracketReport>,
    pub bounds: Option<BoundsReport>,
    pub checks: Checks,
}

/// Analyze one diagram.
pub fn analyze(d: &Diagram, opts: AnalyzeOptions) -> Result<AnalysisReport> {
    let n = d.crossing_count();
    let bopts = BracketOptions {
        state_cap: opts.state_cap,
        parallel: true,
    };
    let (s_a, s_b) = extreme_counts(d);
    let circle_number = s_a + s_b;
    let connected = d.is_connected();

    let bracket = if opts.bracket {
        let p = bracket::kauffman_bracket_with(d, bopts)?;
        Some(bracket::bracket_report(d, p)?)
    } else {
        None
    };
    let skein_all = match &bracket {
        Some(b) if n >= 1 && n <= opts.skein_limit => {
            let mut ok = true;
            for c in 0..n {
                let a =
                    bracket::kauffman_bracket_with(&d.smooth_crossing(c, Smoothing::A)?, bopts)?;
                let bb =
                    bracket::kauffman_bracket_with(&d.smooth_crossing(c, Smoothing::B)?, bopts)?;
                ok &= a.shifted(1).checked_add(&bb.shifted(-1))? == b.bracket;
            }
            Some(ok)
        }
        _ => None,
    };

    let mut report = AnalysisReport {
        n,
        free_loops: d.free_loops(),
        k: None,
        dealternators: None,
        tie: None,
        is_connected: connected,
        is_reduced: None,
        is_alternating: None,
        is_dealternator_connected: None,
        is_dealternator_reduced: None,
        s_a,
        s_b,
        circle_number,
        r: None,
        s: None,
        per_region: None,
        turaev_genus: None,
        surface: None,
        bracket,
        bounds: None,
        checks: Checks {
            theorem_rs: CheckStatus::NotApplicable,
            theorem_rk: CheckStatus::NotApplicable,
            chi_identity: CheckStatus::NotApplicable,
            skein_all: CheckStatus::maybe(skein_all),
            region_vs_direct: CheckStatus::NotApplicable,
            dc_methods_agree: CheckStatus::NotApplicable,
        },
    };
    if n == 0 || !connected {
        return Ok(report);
    }

    let info = dealternator::dealternator_info(d)?;
    let f = diagram::faces(d)?;
    let col = diagram::checkerboard(d, &f)?;
    let rd = regions::region_decomposition(d, &info, &f, &col)?;
    let rk = regions::theorem_rk_check(d, &info, &rd);
    let (via_a, via_b, via_total) = regions::circle_number_via_regions(&rd);

    let within_cap = info.k <= opts.dealternator_cap;
    let dc = if within_cap {
        Some(dealternator::is_dealternator_connected(
            d,
            &info,
            opts.dealternator_cap,
        )?)
    } else {
        None
    };
    let dr = if within_cap {
        Some(dealternator::is_dealternator_reduced(d, &info, opts.dealternator_cap)?.is_reduced())
    } else {
        None
    };

    report.k = Some(info.k);
    report.dealternators = Some(info.dealternators.clone());
    report.tie = Some(info.tie);
    report.is_reduced = Some(diagram::is_reduced_with(d, &f));
    report.is_alternating = Some(info.is_alternating());
    report.is_dealternator_connected = dc;
    report.is_dealternator_reduced = dr;
    report.r = Some(rd.r);
    report.s = Some(rd.s);
    report.per_region = Some(
        rd.components
            .iter()
            .map(|c| RegionSummary {
                color: c.color,
                face_count: c.faces.len(),
                bridge_count: c.bridges.len(),
                s_i: c.s_i,
            })
            .collect(),
    );
    report.turaev_genus = Some(regions::turaev_genus(d)?);
    report.surface = Some(regions::surface_data(n, info.k));
    if let (Some(b), true) = (&report.bracket, within_cap) {
        report.bounds = Some(bracket::bounds_report(d, &info, &rd, b)?);
    }
    report.checks.theorem_rs = CheckStatus::of(via_total == circle_number);
    report.checks.theorem_rk = CheckStatus::of(rk.rk_holds);
    report.checks.chi_identity = CheckStatus::of(rk.chi_holds);
    report.checks.region_vs_direct = CheckStatus::of((via_a, via_b) == (s_a, s_b));
    report.checks.dc_methods_agree =
        CheckStatus::maybe(dc.map(|dc| dc == regions::is_dealternator_connected_via_regions(&rd)));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_loop() {
        let d: Diagram = "loops=1".parse().unwrap();
        let r = analyze(&d, AnalyzeOptions::default()).unwrap();
        assert_eq!(r.n, 0);
        assert_eq!(r.k, None);
        assert_eq!(
            r.bracket.as_ref().unwrap().bracket,
            crate::LaurentPolynomial::one()
        );
        assert_eq!(r.checks.theorem_rs, CheckStatus::NotApplicable);
        assert!(!r.checks.any_failed());
    }

    #[test]
    fn no_bracket() {
        let d: Diagram = crate::catalog::TREFOIL.parse().unwrap();
        let opts = AnalyzeOptions {
            bracket: false,
            ..AnalyzeOptions::default()
        };
        let r = analyze(&d, opts).unwrap();
        assert!(r.bracket.is_none());
        assert!(r.bounds.is_none());
        assert_eq!(r.checks.skein_all, CheckStatus::NotApplicable);
        assert_eq!(r.circle_number, 5);
    }

    #[test]
    fn disconnected_input_still_reports_counts() {
        let d: Diagram = "X[1,1,2,2] X[3,3,4,4]".parse().unwrap();
        let r = analyze(&d, AnalyzeOptions::default()).unwrap();
        assert!(!r.is_connected);
        assert_eq!(r.r, None);
        assert!(r.bracket.is_some());
        assert_eq!(r.checks.skein_all, CheckStatus::Pass);
    }
}
