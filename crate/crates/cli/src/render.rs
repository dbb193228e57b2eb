//! Plain-text output.

use std::fmt::Write;

use circlenum_core::bracket::BoundVerdict;
use circlenum_core::report::{AnalysisReport, CheckStatus};
use circlenum_core::verify::VerifySummary;
use circlenum_core::Diagram;

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "n/a".to_string(), |v| v.to_string())
}

fn opt_yes(v: Option<bool>) -> &'static str {
    v.map_or("n/a", yes)
}

fn status(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "FAIL",
        CheckStatus::NotApplicable => "n/a",
    }
}

fn bound(out: &mut String, name: &str, b: &BoundVerdict) {
    let verdict = match (b.applicable, b.satisfied) {
        (false, true) => "not applicable (holds)",
        (false, false) => "not applicable (exceeded)",
        (true, true) => "holds",
        (true, false) => "VIOLATED",
    };
    let _ = writeln!(out, "  {name:<16} {:>4}  {verdict}", b.value);
}

pub fn report(d: &Diagram, r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "diagram        {d}");
    let _ = writeln!(out, "crossings      {}", r.n);
    let _ = writeln!(out, "connected      {}", yes(r.is_connected));
    let _ = writeln!(out, "reduced        {}", opt_yes(r.is_reduced));
    let _ = writeln!(out, "alternating    {}", opt_yes(r.is_alternating));
    match &r.dealternators {
        Some(list) => {
            let tie = if r.tie == Some(true) { " (tie)" } else { "" };
            let _ = writeln!(out, "dealternators  k={} {list:?}{tie}", list.len());
        }
        None => {
            let _ = writeln!(out, "dealternators  n/a");
        }
    }
    let _ = writeln!(
        out,
        "dealt. conn.   {}    dealt. reduced {}",
        opt_yes(r.is_dealternator_connected),
        opt_yes(r.is_dealternator_reduced)
    );
    let _ = writeln!(out, "|s_A D|        {}", r.s_a);
    let _ = writeln!(out, "|s_B D|        {}", r.s_b);
    let _ = writeln!(out, "circle number  {}", r.circle_number);
    let _ = writeln!(out, "regions        r={} s={}", opt(r.r), opt(r.s));
    for c in r.per_region.iter().flatten() {
        let _ = writeln!(
            out,
            "  {:?}: {} face(s), {} bridge(s), s_i={}",
            c.color, c.face_count, c.bridge_count, c.s_i
        );
    }
    let _ = writeln!(out, "Turaev genus   {}", opt(r.turaev_genus));
    if let Some(s) = &r.surface {
        let _ = writeln!(
            out,
            "surface        V={} E={} chi={} genus={} boundary={}",
            s.vertices, s.edges, s.chi, s.genus, s.boundary
        );
    }
    match &r.bracket {
        Some(b) => {
            let _ = writeln!(out, "bracket        {}", b.bracket);
            let _ = writeln!(
                out,
                "span           {}  (M={} m={} a_M={} a_m={})",
                b.span, b.max_degree_bound, b.min_degree_bound, b.a_max, b.a_min
            );
            let _ = writeln!(
                out,
                "adequate       A: {}  B: {}",
                yes(b.a_adequate),
                yes(b.b_adequate)
            );
        }
        None => {
            let _ = writeln!(out, "bracket        skipped");
        }
    }
    if let Some(b) = &r.bounds {
        let _ = writeln!(out, "span bounds");
        bound(&mut out, "generic", &b.generic);
        bound(&mut out, "4(n-k)", &b.zhu);
        bound(&mut out, "4(n-k-2)", &b.adams);
        if let Some(v) = b.adams_extremes_vanish {
            let _ = writeln!(out, "  a_M = a_m = 0    {}", yes(v));
        }
        bound(&mut out, "2n+2r-4", &b.region_candidate);
    }
    let c = &r.checks;
    let _ = writeln!(out, "checks");
    for (name, s) in [
        ("theorem_rs", c.theorem_rs),
        ("theorem_rk", c.theorem_rk),
        ("chi_identity", c.chi_identity),
        ("skein_all", c.skein_all),
        ("region_vs_direct", c.region_vs_direct),
        ("dc_methods_agree", c.dc_methods_agree),
    ] {
        let _ = writeln!(out, "  {name:<18} {}", status(s));
    }
    out
}

pub fn summary(s: &VerifySummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} diagrams", s.diagrams);
    for p in &s.properties {
        let _ = writeln!(out, "  {:<30} {:>6}/{:<6}", p.name, p.passed, p.checked);
    }
    if s.checked("adams_bound") == 0 {
        let _ = writeln!(out, "note: no dealternator connected and reduced diagram with k >= 1; adams_bound is vacuous");
    }
    for f in &s.failures {
        let _ = writeln!(out, "FAIL {} on {}: {}", f.property, f.diagram, f.detail);
        let _ = writeln!(out, "  {}", f.pd);
    }
    if s.all_passed() {
        let _ = writeln!(out, "all properties pass");
    }
    out
}
