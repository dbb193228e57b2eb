//! Property suites run over a corpus of diagrams.
//!
//! Every property is checked per diagram where it applies and tallied by
//! name. A failure keeps the PD text of the offending diagram so it can be
//! replayed.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bracket::{self, BracketOptions};
use crate::catalog::CatalogEntry;
use crate::dealternator::{self, DealternatorInfo, DEFAULT_DEALTERNATOR_CAP};
use crate::diagram::{self, Diagram, Smoothing};
use crate::error::Result;
use crate::laurent::LaurentPolynomial;
use crate::regions;
use crate::states::{self, extreme_counts, CircleCounter};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusItem {
    pub name: String,
    pub diagram: Diagram,
}

impl CorpusItem {
    pub fn new(name: impl Into<String>, diagram: Diagram) -> Self {
        CorpusItem {
            name: name.into(),
            diagram,
        }
    }

    pub fn from_entry(e: &CatalogEntry) -> Result<Self> {
        Ok(CorpusItem::new(e.name.clone(), e.diagram()?))
    }
}

/// Every crossing-switch subset of every seed with at most `max_crossings`
/// crossings. Item names look like `trefoil/switch{0,2}`.
pub fn switch_family(seeds: &[CatalogEntry], max_crossings: usize) -> Result<Vec<CorpusItem>> {
    let mut out = Vec::new();
    for seed in seeds {
        let d = seed.diagram()?;
        let n = d.crossing_count();
        if n > max_crossings || n >= usize::BITS as usize {
            continue;
        }
        for mask in 0u64..1 << n {
            let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let name = format!(
                "{}/switch{{{}}}",
                seed.name,
                set.iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            out.push(CorpusItem::new(name, d.switch_crossings(&set)?));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Exhaustive per-state checks (tracer, toggles) run up to this size.
    pub exhaustive_states_max: usize,
    pub state_cap: usize,
    pub dealternator_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            exhaustive_states_max: 8,
            state_cap: 16,
            dealternator_cap: DEFAULT_DEALTERNATOR_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyTally {
    pub name: String,
    /// Number of individual checks run (some properties check once per
    /// crossing).
    pub checked: usize,
    pub passed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub property: String,
    pub diagram: String,
    pub pd: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub diagrams: usize,
    pub properties: Vec<PropertyTally>,
    pub failures: Vec<Failure>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tally(&self, name: &str) -> Option<&PropertyTally> {
        self.properties.iter().find(|p| p.name == name)
    }

    /// How many checks of a property ran (0 when unknown).
    pub fn checked(&self, name: &str) -> usize {
        self.tally(name).map_or(0, |t| t.checked)
    }
}

/// Property names in reporting order.
pub const PROPERTIES: &[&str] = &[
    "label_double_occurrence",
    "face_count",
    "checkerboard_proper",
    "mirror_involution",
    "curl_not_reduced",
    "toggle_changes_by_one",
    "mirror_swaps_extremes",
    "tracer_agrees",
    "switch_to_alternating",
    "dealternator_idempotent",
    "smoothing_circle_shifts",
    "smoothing_drops_dealternator",
    "theorem_rs",
    "theorem_rk",
    "chi_identity",
    "dc_dual_method",
    "color_correspondence",
    "bridge_increment_at_most_one",
    "alternating_identity",
    "ac_case",
    "reduced_alternating_span",
    "degree_support",
    "skein",
    "lemma_recursion",
    "mirror_bracket",
    "parallel_matches_sequential",
    "generic_bound",
    "adams_bound",
];

struct Outcome {
    property: &'static str,
    ok: bool,
    detail: String,
}

#[derive(Default)]
struct Checker {
    outcomes: Vec<Outcome>,
}

impl Checker {
    fn check(&mut self, property: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        debug_assert!(PROPERTIES.contains(&property), "{property}");
        let detail = if ok { String::new() } else { detail() };
        self.outcomes.push(Outcome {
            property,
            ok,
            detail,
        });
    }

    fn error(&mut self, property: &'static str, err: crate::Error) {
        self.check(property, false, || format!("error: {err}"));
    }
}

/// Run every applicable property on every item.
pub fn verify(items: &[CorpusItem], opts: VerifyOptions) -> VerifySummary {
    let per_item: Vec<Vec<Outcome>> = items
        .par_iter()
        .map(|item| {
            let mut ck = Checker::default();
            check_item(&item.diagram, opts, &mut ck);
            ck.outcomes
        })
        .collect();

    let mut properties: Vec<PropertyTally> = PROPERTIES
        .iter()
        .map(|p| PropertyTally {
            name: p.to_string(),
            checked: 0,
            passed: 0,
        })
        .collect();
    let mut failures = Vec::new();
    for (item, outcomes) in items.iter().zip(per_item) {
        for o in outcomes {
            let t = properties
                .iter_mut()
                .find(|t| t.name == o.property)
                .expect("known property");
            t.checked += 1;
            if o.ok {
                t.passed += 1;
            } else {
                failures.push(Failure {
                    property: o.property.to_string(),
                    diagram: item.name.clone(),
                    pd: item.diagram.to_string(),
                    detail: o.detail,
                });
            }
        }
    }
    VerifySummary {
        diagrams: items.len(),
        properties,
        failures,
    }
}

fn revalidates(d: &Diagram) -> bool {
    Diagram::new(d.crossings().to_vec(), d.free_loops()).is_ok()
}

fn has_repeated_label(d: &Diagram) -> bool {
    d.crossings().iter().any(|x| {
        let e = x.ends;
        (0..4).any(|i| (i + 1..4).any(|j| e[i] == e[j]))
    })
}

fn check_item(d: &Diagram, opts: VerifyOptions, ck: &mut Checker) {
    let n = d.crossing_count();
    let bopts = BracketOptions {
        state_cap: opts.state_cap,
        parallel: false,
    };
    let (sa, sb) = extreme_counts(d);
    let mirror = d.mirror();

    ck.check("label_double_occurrence", revalidates(&mirror), || {
        "mirror".into()
    });
    for c in 0..n {
        for kind in [Smoothing::A, Smoothing::B] {
            match d.smooth_crossing(c, kind) {
                Ok(s) => ck.check("label_double_occurrence", revalidates(&s), || {
                    format!("smooth {c} {kind:?}")
                }),
                Err(e) => ck.error("label_double_occurrence", e),
            }
        }
    }
    let twice = mirror.mirror();
    let rotated_by_two = d
        .crossings()
        .iter()
        .zip(twice.crossings())
        .all(|(a, b)| a.rotated().rotated() == *b);
    ck.check(
        "mirror_involution",
        rotated_by_two && twice.free_loops() == d.free_loops(),
        || format!("mirror twice gave {twice}"),
    );
    let (ma, mb) = extreme_counts(&mirror);
    ck.check("mirror_swaps_extremes", (ma, mb) == (sb, sa), || {
        format!("({sa},{sb}) vs mirror ({ma},{mb})")
    });

    if n <= opts.exhaustive_states_max {
        check_states(d, ck);
    }

    let bracket = if n <= opts.state_cap {
        match bracket::kauffman_bracket_with(d, bopts) {
            Ok(p) => Some(p),
            Err(e) => {
                ck.error("skein", e);
                None
            }
        }
    } else {
        None
    };
    if let Some(p) = &bracket {
        check_bracket(d, p, &mirror, bopts, ck);
    }

    if n == 0 || !d.is_connected() {
        return;
    }
    let f = match diagram::faces(d) {
        Ok(f) => f,
        Err(e) => return ck.error("face_count", e),
    };
    let slots: usize = f.faces().iter().map(Vec::len).sum();
    ck.check(
        "face_count",
        slots == 4 * n && f.face_count() == n + 2,
        || format!("{} faces, {slots} corner slots", f.face_count()),
    );
    let col = match diagram::checkerboard(d, &f) {
        Ok(c) => c,
        Err(e) => return ck.error("checkerboard_proper", e),
    };
    let proper = (0..n)
        .all(|c| (0..4).all(|i| col.color(f.face_of(c, i)) != col.color(f.face_of(c, i + 1))));
    ck.check("checkerboard_proper", proper, || {
        "adjacent corners share a color".into()
    });
    let reduced = diagram::is_reduced_with(d, &f);
    if has_repeated_label(d) {
        ck.check("curl_not_reduced", !reduced, || {
            "curl reported reduced".into()
        });
    }

    let info = match dealternator::dealternator_info(d) {
        Ok(i) => i,
        Err(e) => return ck.error("switch_to_alternating", e),
    };
    check_dealternators(d, &info, ck);

    let rd = match regions::region_decomposition(d, &info, &f, &col) {
        Ok(r) => r,
        Err(e) => return ck.error("theorem_rs", e),
    };
    let circle_number = sa + sb;
    let rk = regions::theorem_rk_check(d, &info, &rd);
    let (via_a, via_b, total) = regions::circle_number_via_regions(&rd);
    ck.check(
        "theorem_rs",
        total == circle_number && via_a + via_b == total,
        || format!("r+s={total}, circle number {circle_number}"),
    );
    ck.check("theorem_rk", rk.rk_holds, || {
        format!("2k+2r-n-2={}", rk.rk_value)
    });
    ck.check("chi_identity", rk.chi_holds, || {
        format!("{} != {}", rk.chi_lhs, rk.chi_rhs)
    });
    ck.check("color_correspondence", (via_a, via_b) == (sa, sb), || {
        format!("regions ({via_a},{via_b}) vs direct ({sa},{sb})")
    });
    ck.check(
        "bridge_increment_at_most_one",
        rd.bridge_hole_increments.iter().all(|&i| i <= 1),
        || format!("{:?}", rd.bridge_hole_increments),
    );

    if info.is_alternating() {
        ck.check("alternating_identity", circle_number == n + 2, || {
            format!("circle number {circle_number}, n+2={}", n + 2)
        });
        if let (true, Some(p)) = (reduced, &bracket) {
            let span = p.span().unwrap_or(0);
            ck.check("reduced_alternating_span", span == 4 * n as u64, || {
                format!("span {span}")
            });
        }
    }

    if info.k > opts.dealternator_cap {
        return;
    }
    let dc = match dealternator::is_dealternator_connected(d, &info, opts.dealternator_cap) {
        Ok(x) => x,
        Err(e) => return ck.error("dc_dual_method", e),
    };
    ck.check(
        "dc_dual_method",
        dc == regions::is_dealternator_connected_via_regions(&rd),
        || format!("smoothings say {dc}, s={}", rd.s),
    );
    let dr = match dealternator::is_dealternator_reduced(d, &info, opts.dealternator_cap) {
        Ok(x) => x.is_reduced(),
        Err(e) => return ck.error("adams_bound", e),
    };
    let span = bracket.as_ref().and_then(|p| p.span().ok());

    if dc {
        let genus = regions::turaev_genus(d).ok();
        let span_ok = span.is_none_or(|s| s as i64 <= 4 * (n as i64 - info.k as i64));
        ck.check(
            "ac_case",
            circle_number + 2 * info.k == n + 2 && genus == Some(info.k) && span_ok,
            || {
                format!(
                    "circle number {circle_number}, k={}, genus {genus:?}, span {span:?}",
                    info.k
                )
            },
        );
        for &c in &info.dealternators {
            check_smoothing_at(d, &info, c, bopts, bracket.is_some(), ck);
        }
    }
    if dc && dr && info.k >= 1 {
        if let Some(p) = &bracket {
            let (hi, lo) = bracket::degree_bounds(d);
            let vanish = p.coefficient(hi) == 0 && p.coefficient(lo) == 0;
            let s = span.unwrap_or(0) as i64;
            let bound = 4 * (n as i64 - info.k as i64 - 2);
            ck.check("adams_bound", vanish && s <= bound, || {
                format!(
                    "a_M={}, a_m={}, span {s}, bound {bound}",
                    p.coefficient(hi),
                    p.coefficient(lo)
                )
            });
        }
    }
}

fn check_states(d: &Diagram, ck: &mut Checker) {
    let n = d.crossing_count();
    let mut counter = CircleCounter::new(d);
    let mut toggle_ok = true;
    let mut tracer_ok = true;
    let mut detail = String::new();
    for s in states::state_iterator(n, n).expect("within cap") {
        let c = counter.count(s);
        match states::trace_circles(d, s) {
            Ok(t) if t == c => {}
            other => {
                if tracer_ok {
                    detail = format!("state {s}: union-find {c}, tracer {other:?}");
                }
                tracer_ok = false;
            }
        }
        for i in 0..n {
            let t = counter.count(s.toggled(i));
            if t.abs_diff(c) != 1 && toggle_ok {
                toggle_ok = false;
                detail = format!("state {s} toggled at {i}: {c} -> {t}");
            }
        }
    }
    ck.check("tracer_agrees", tracer_ok, || detail.clone());
    ck.check("toggle_changes_by_one", toggle_ok, || detail.clone());
}

fn check_bracket(
    d: &Diagram,
    p: &LaurentPolynomial,
    mirror: &Diagram,
    bopts: BracketOptions,
    ck: &mut Checker,
) {
    let n = d.crossing_count();
    if let Ok(report) = bracket::bracket_report(d, p.clone()) {
        ck.check("degree_support", report.degree_support_ok(), || {
            format!(
                "M={}, m={}, bracket {p}",
                report.max_degree_bound, report.min_degree_bound
            )
        });
        let (sa, sb) = extreme_counts(d);
        let generic = 2 * n as i64 + 2 * (sa + sb) as i64 - 4;
        ck.check("generic_bound", report.span as i64 <= generic, || {
            format!("span {} > {generic}", report.span)
        });
    }
    for c in 0..n {
        match bracket::skein_check_with(d, c, bopts) {
            Ok(ok) => ck.check("skein", ok, || format!("crossing {c}")),
            Err(e) => ck.error("skein", e),
        }
    }
    match bracket::kauffman_bracket_with(mirror, bopts) {
        Ok(m) => ck.check("mirror_bracket", m == p.inverted(), || {
            format!("{m} vs {p}")
        }),
        Err(e) => ck.error("mirror_bracket", e),
    }
    let par = BracketOptions {
        parallel: true,
        ..bopts
    };
    match bracket::kauffman_bracket_with(d, par) {
        Ok(q) => ck.check("parallel_matches_sequential", q == *p, || {
            format!("{q} vs {p}")
        }),
        Err(e) => ck.error("parallel_matches_sequential", e),
    }
}

fn check_dealternators(d: &Diagram, info: &DealternatorInfo, ck: &mut Checker) {
    match d
        .switch_crossings(&info.dealternators)
        .and_then(|s| dealternator::dealternator_info(&s))
    {
        Ok(i) => ck.check("switch_to_alternating", i.k == 0, || {
            format!("k={} after switching", i.k)
        }),
        Err(e) => ck.error("switch_to_alternating", e),
    }
    match dealternator::dealternator_info(&info.alternating_diagram) {
        Ok(i) => ck.check("dealternator_idempotent", i.k == 0, || format!("k={}", i.k)),
        Err(e) => ck.error("dealternator_idempotent", e),
    }
}

fn check_smoothing_at(
    d: &Diagram,
    info: &DealternatorInfo,
    c: usize,
    bopts: BracketOptions,
    with_bracket: bool,
    ck: &mut Checker,
) {
    let n = d.crossing_count();
    let (sa, sb) = extreme_counts(d);
    let (d1, d2) = match (
        d.smooth_crossing(c, Smoothing::A),
        d.smooth_crossing(c, Smoothing::B),
    ) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return ck.error("smoothing_circle_shifts", e),
    };
    let (a1, b1) = extreme_counts(&d1);
    let (a2, b2) = extreme_counts(&d2);
    ck.check(
        "smoothing_circle_shifts",
        a1 == sa && a2 == sa + 1 && b1 == sb + 1 && b2 == sb,
        || format!("at {c}: D ({sa},{sb}), D1 ({a1},{b1}), D2 ({a2},{b2})"),
    );
    match dealternator::dealternator_info(&d2) {
        Ok(i) => ck.check(
            "smoothing_drops_dealternator",
            d2.crossing_count() + 1 == n && i.k + 1 == info.k,
            || format!("at {c}: D2 has n={}, k={}", d2.crossing_count(), i.k),
        ),
        Err(e) => ck.error("smoothing_drops_dealternator", e),
    }
    if with_bracket {
        match bracket::smoothing_recursion(d, c, bopts) {
            Ok(r) => ck.check("lemma_recursion", r.dealternator_identities_hold(), || {
                format!("{r:?}")
            }),
            Err(e) => ck.error("lemma_recursion", e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, search_seeds};

    #[test]
    fn family_size() {
        let seeds: Vec<CatalogEntry> = search_seeds()
            .into_iter()
            .filter(|e| e.name == "trefoil")
            .collect();
        let fam = switch_family(&seeds, 8).unwrap();
        assert_eq!(fam.len(), 8);
        assert_eq!(fam[5].name, "trefoil/switch{0,2}");
        assert!(switch_family(&seeds, 2).unwrap().is_empty());
    }

    #[test]
    fn catalog_passes() {
        let items: Vec<CorpusItem> = catalog()
            .iter()
            .map(|e| CorpusItem::from_entry(e).unwrap())
            .collect();
        let summary = verify(&items, VerifyOptions::default());
        assert!(summary.all_passed(), "{:#?}", summary.failures);
        assert_eq!(summary.diagrams, 8);
        assert!(summary.checked("theorem_rk") >= 6);
        assert!(summary.checked("tracer_agrees") >= 6);
    }
}
