use std::fmt::Write as _;

use super::{round_sig3, sig3, ReportError};
use crate::bounds::{bound_report, cavendish_fom, BoundAnchor};
use crate::catalog::{rank, Catalog, Entry, RankFilter};
use crate::fom::FomResult;
use crate::quantity::Constants;

fn orders(x: f64) -> String {
    let s = format!("{x:.1}");
    if s == "-0.0" {
        "0.0".into()
    } else {
        s
    }
}

/// `key: value` lines describing the best FOMs and the bounds they imply.
///
/// Bounds are evaluated at each FOM rounded to three significant figures,
/// the precision the table reports. The absolute on-Earth result is the
/// conservative bound.
pub fn emit_bounds_summary(
    cat: &Catalog,
    results: &[FomResult],
    anchors: &[BoundAnchor],
    c: &Constants,
) -> Result<String, ReportError> {
    let conservative = rank(cat, results, RankFilter::AbsoluteOnEarth).first().copied();
    let overall = rank(cat, results, RankFilter::All).first().copied();
    let baseline = cavendish_fom();

    let mut out = String::new();
    let _ = writeln!(out, "records: {}", cat.len());
    let _ = writeln!(out, "cavendish_fom: {}", sig3(baseline));

    let mut best = |label: &str, entry: Option<Entry<'_>>| -> Option<f64> {
        match entry {
            Some((rec, res)) => {
                let fom = round_sig3(res.fom);
                let _ = writeln!(out, "{label}: {}", rec.name);
                let _ = writeln!(out, "{label}_fom: {}", sig3(fom));
                Some(fom)
            }
            None => {
                let _ = writeln!(out, "{label}: none");
                None
            }
        }
    };
    let conservative_fom = best("best_absolute_on_earth", conservative);
    let overall_fom = best("best_overall", overall);

    for (label, fom) in [("conservative", conservative_fom), ("overall", overall_fom)] {
        if let Some(fom) = fom {
            let r = crate::bounds::orders_of_improvement(fom, baseline)?;
            let _ = writeln!(out, "{label}.orders_vs_cavendish: {}", orders(r));
        }
    }

    for a in anchors {
        let key = a.model.key();
        let _ = writeln!(out, "{key}.model: {}", a.model);
        let _ = writeln!(out, "{key}.lower_bound: {}", sig3(a.lower_bound));
        for (label, fom) in [("conservative", conservative_fom), ("overall", overall_fom)] {
            let Some(fom) = fom else { continue };
            let r = bound_report(fom, a, c)?;
            let _ = writeln!(out, "{key}.{label}_bound: {}", sig3(r.anchored_bound));
            let _ = writeln!(out, "{key}.{label}_si_bound: {}", sig3(r.si_bound));
            let _ = writeln!(out, "{key}.{label}_below_lower_bound: {}", r.below_lower_bound);
        }
    }

    if let Some(fom) = conservative_fom {
        let mut parts = Vec::new();
        for a in anchors {
            let r = bound_report(fom, a, c)?;
            parts.push(format!("{} {} >= bound >= {}", a.model.key(), sig3(r.anchored_bound), sig3(a.lower_bound)));
        }
        let _ = writeln!(out, "conservative: {}", parts.join("; "));
    }
    Ok(out)
}
