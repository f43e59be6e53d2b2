//! Persistence formats: JSON reports, CSV tables, and SVG renderings.
//!
//! Rationals serialize as strings, `"p/q"` or plain `"p"`, never as
//! floats; decimal renderings are separate, clearly named fields. Every
//! emitted report re-parses to the exact in-memory values. All emitters
//! are pure functions of their inputs, so identical inputs give
//! byte-identical output.

use crate::capacities::{CapacityScalar, CapacityValue, CapacityVerdict, ViterboProbe};
use crate::distances::DistanceValue;
use crate::ech::{CapacitySequence, CertificateMethod, EmbedVerdict, EmbeddingCertificate};
use crate::ech::WeightSequence;
use crate::geometry::{make_star_polygon, ConvexRegion, PointQ, StarPolygon};
use crate::rational::{format_rational, parse_rational, to_f64, Rational};
use crate::reeb::{
    classify, hull_sys_bound, ruelle_invariant, sys, sys_ratio, volume, OrbitClass,
};
use serde_json::{json, Value};
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExportError {
    /// Malformed input text: JSON syntax errors carry the reported
    /// position, schema violations report position 0:0 with a message.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    /// Well-formed input describing an invalid object.
    #[error("domain violation: {0}")]
    Domain(String),
}

fn schema_error(message: impl Into<String>) -> ExportError {
    ExportError::Parse { line: 0, column: 0, message: message.into() }
}

/// One parsed input object: a fiber polygon (star-shaped about the
/// origin), a positive-quadrant moment region, a weight sequence, or the
/// row vector of a transcendental witness family.
#[derive(Debug, Clone)]
pub enum DomainInput {
    Fiber(StarPolygon),
    Region(ConvexRegion),
    Weights(WeightSequence),
    Rows(Vec<f64>),
}

fn rational_from_value(v: &Value) -> Result<Rational, ExportError> {
    match v {
        Value::String(s) => {
            parse_rational(s).ok_or_else(|| schema_error(format!("bad rational literal {s:?}")))
        }
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(crate::rational::int(i)),
            None => Err(schema_error(format!(
                "numeric literal {n} is not an integer; write rationals as \"p/q\" strings"
            ))),
        },
        other => Err(schema_error(format!("expected a rational, got {other}"))),
    }
}

fn points_from_value(v: &Value, key: &str) -> Result<Vec<PointQ>, ExportError> {
    let arr = v.as_array().ok_or_else(|| schema_error(format!("{key:?} must be an array")))?;
    let mut points = Vec::with_capacity(arr.len());
    for entry in arr {
        let pair = entry
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| schema_error(format!("each {key} entry must be a [x, y] pair")))?;
        points.push(PointQ::new(rational_from_value(&pair[0])?, rational_from_value(&pair[1])?));
    }
    Ok(points)
}

fn json_root(text: &str) -> Result<Value, ExportError> {
    serde_json::from_str(text).map_err(|e| ExportError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

/// Parses the polygon schema `{"vertices": [[x, y], ...]}` into a fiber
/// polygon. Coordinates are `"p/q"` strings or integer literals.
pub fn polygon_from_json(text: &str) -> Result<StarPolygon, ExportError> {
    match parse_domain_input(text)? {
        DomainInput::Fiber(p) => Ok(p),
        _ => Err(schema_error("expected a fiber polygon with a \"vertices\" key")),
    }
}

/// Parses any of the input schemas:
/// `{"vertices": ...}` (fiber polygon), `{"region": ...}` (moment
/// region), `{"head": "b", "weights": [...]}` (weight sequence), or
/// `{"rows": [v1, ...]}` (witness-family rows, plain floats).
pub fn parse_domain_input(text: &str) -> Result<DomainInput, ExportError> {
    let root = json_root(text)?;
    let obj = root.as_object().ok_or_else(|| schema_error("input must be a JSON object"))?;
    if let Some(v) = obj.get("vertices") {
        let points = points_from_value(v, "vertices")?;
        let star =
            make_star_polygon(&points).map_err(|e| ExportError::Domain(e.to_string()))?;
        return Ok(DomainInput::Fiber(star));
    }
    if let Some(v) = obj.get("region") {
        let points = points_from_value(v, "region")?;
        let region =
            ConvexRegion::from_points(&points).map_err(|e| ExportError::Domain(e.to_string()))?;
        return Ok(DomainInput::Region(region));
    }
    if let Some(h) = obj.get("head") {
        let head = rational_from_value(h)?;
        let weights = match obj.get("weights") {
            None => Vec::new(),
            Some(ws) => ws
                .as_array()
                .ok_or_else(|| schema_error("\"weights\" must be an array"))?
                .iter()
                .map(rational_from_value)
                .collect::<Result<Vec<_>, _>>()?,
        };
        use num_traits::Signed;
        if !head.is_positive() || weights.iter().any(|w| !w.is_positive()) {
            return Err(ExportError::Domain("weights must be positive".into()));
        }
        if weights.iter().any(|w| w > &head) {
            return Err(ExportError::Domain("weights must not exceed the head".into()));
        }
        return Ok(DomainInput::Weights(WeightSequence::new(head, weights)));
    }
    if let Some(v) = obj.get("rows") {
        let arr = v.as_array().ok_or_else(|| schema_error("\"rows\" must be an array"))?;
        let rows = arr
            .iter()
            .map(|x| x.as_f64().ok_or_else(|| schema_error("rows must be plain numbers")))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(DomainInput::Rows(rows));
    }
    Err(schema_error(
        "input object needs one of the keys \"vertices\", \"region\", \"head\", \"rows\"",
    ))
}

pub fn rational_str(r: &Rational) -> String {
    format_rational(r)
}

fn point_json(p: &PointQ) -> Value {
    json!([rational_str(&p.x), rational_str(&p.y)])
}

pub fn polygon_json(p: &StarPolygon) -> Value {
    json!({ "vertices": p.vertices().iter().map(point_json).collect::<Vec<_>>() })
}

/// The full analysis report of a fiber polygon: exact invariants, the
/// subclass flags, and the convex-hull comparison bounds.
pub fn analyze_report(p: &StarPolygon) -> Value {
    let flags = classify(p);
    let (hull_sys, hull_ratio_bound) = hull_sys_bound(p);
    let rho = sys_ratio(p);
    json!({
        "polygon": polygon_json(p),
        "sys": rational_str(&sys(p)),
        "volume": rational_str(&volume(p)),
        "rho": rational_str(&rho),
        "rho_decimal": to_f64(&rho),
        "ruelle": rational_str(&ruelle_invariant(p)),
        "hull": {
            "sys": rational_str(&hull_sys),
            "ratio_bound": rational_str(&hull_ratio_bound),
        },
        "flags": classification_json(&flags),
    })
}

pub fn classification_json(flags: &crate::reeb::ClassificationFlags) -> Value {
    json!({
        "is_product": flags.is_product,
        "fiber_convex": flags.fiber_convex,
        "fiber_centrally_symmetric": flags.fiber_centrally_symmetric,
        "generalized_monotone": flags.generalized_monotone,
        "dynamically_convex": flags.dynamically_convex,
        "systolically_convex": flags.systolically_convex,
        "rho": rational_str(&flags.sys_ratio),
    })
}

/// Action spectrum as CSV, one row per orbit class in ascending action
/// order.
pub fn spectrum_csv(classes: &[OrbitClass]) -> String {
    let mut out = String::from("action,kind,feature_index,direction_m,direction_n,cover\n");
    for c in classes {
        writeln!(
            out,
            "{},{},{},{},{},{}",
            rational_str(&c.action()),
            c.kind.as_str(),
            c.feature_index,
            c.direction.m(),
            c.direction.n(),
            c.cover
        )
        .expect("string write");
    }
    out
}

/// Capacity table as CSV with exact numerator/denominator columns.
pub fn capacity_csv(seq: &CapacitySequence) -> String {
    capacity_rows_csv((1..=seq.k_max()).map(|k| (k, seq.value(k).clone())), seq.source().as_str())
}

/// The same CSV rendering for externally assembled (k, value) rows, so
/// tables computed in parallel shards serialize identically.
pub fn capacity_rows_csv<I>(rows: I, source: &str) -> String
where
    I: IntoIterator<Item = (u64, Rational)>,
{
    let mut out = String::from("k,value_num,value_den,source\n");
    for (k, v) in rows {
        writeln!(out, "{},{},{},{}", k, v.numer(), v.denom(), source).expect("string write");
    }
    out
}

pub fn certificate_json(cert: &EmbeddingCertificate) -> Value {
    let mut report = json!({
        "target": cert.target.to_string(),
        "a": rational_str(&cert.ball),
        "K": cert.tail_bound_k,
        "explicit_k_max": cert.explicit_k_max,
        "method": match cert.method {
            CertificateMethod::CapacityTail => "capacity_tail",
            CertificateMethod::ExactFillingReduction => "exact_filling_reduction",
        },
        "verdict": if cert.embeds() { "embeds" } else { "obstructed" },
    });
    if let EmbedVerdict::ObstructedAtK { k, union_value, ball_value } = &cert.verdict {
        report["witness_k"] = json!(k);
        report["witness_union_value"] = json!(rational_str(union_value));
        report["witness_ball_value"] = json!(rational_str(ball_value));
    }
    report
}

pub fn capacity_value_json(value: &CapacityValue) -> Value {
    match value {
        CapacityValue::Exact(r) => json!(rational_str(r)),
        CapacityValue::Interval { lo, hi } => {
            json!({ "interval": [rational_str(lo), rational_str(hi)] })
        }
    }
}

pub fn capacity_scalar_json(value: &CapacityScalar) -> Value {
    match value {
        CapacityScalar::Exact(r) => json!(rational_str(r)),
        CapacityScalar::SquareRoot(squared) => json!({ "squared": rational_str(squared) }),
        CapacityScalar::Infinite => json!("inf"),
    }
}

pub fn capacity_verdict_json(v: &CapacityVerdict) -> Value {
    json!({
        "value": capacity_value_json(&v.value),
        "rule": v.rule.as_str(),
        "sys": rational_str(&v.sys),
        "rho": rational_str(&v.sys_ratio),
    })
}

pub fn viterbo_probe_json(p: &ViterboProbe) -> Value {
    json!({
        "width": rational_str(&p.width),
        "double_sys": rational_str(&p.double_sys),
        "gap": p.gap,
        "summary": p.summary,
    })
}

pub fn distance_json(d: &DistanceValue, mode: &str) -> Value {
    json!({
        "C": rational_str(&d.scale),
        "log": d.log_value,
        "exact": d.exact,
        "mode": mode,
    })
}

/// Renders the fiber polygon into a 512x512 SVG with one arrow per orbit
/// class along its outward normal and a monospace legend. Cosmetic
/// choices (colors, margins, the 12-entry legend cap) are fixed so the
/// output is deterministic.
pub fn polygon_svg(p: &StarPolygon, classes: &[OrbitClass]) -> String {
    const SIZE: f64 = 512.0;
    const MARGIN: f64 = 56.0;
    let xs: Vec<f64> = p.vertices().iter().map(|v| to_f64(&v.x)).collect();
    let ys: Vec<f64> = p.vertices().iter().map(|v| to_f64(&v.y)).collect();
    let (min_x, max_x) = bounds(&xs);
    let (min_y, max_y) = bounds(&ys);
    let span = (max_x - min_x).max(max_y - min_y).max(1e-9);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    let offset_x = MARGIN + ((SIZE - 2.0 * MARGIN) - (max_x - min_x) * scale) / 2.0;
    let offset_y = MARGIN + ((SIZE - 2.0 * MARGIN) - (max_y - min_y) * scale) / 2.0;
    let map = |x: f64, y: f64| -> (f64, f64) {
        (offset_x + (x - min_x) * scale, SIZE - (offset_y + (y - min_y) * scale))
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {SIZE:.0} {SIZE:.0}\">\n"
    ));
    svg.push_str(
        "  <defs><marker id=\"tip\" markerWidth=\"8\" markerHeight=\"8\" refX=\"6\" refY=\"3\" \
         orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"#b33\"/></marker></defs>\n",
    );
    // Coordinate axes through the origin.
    let (ox, oy) = map(0.0, 0.0);
    svg.push_str(&format!(
        "  <line x1=\"0\" y1=\"{oy:.2}\" x2=\"{SIZE:.0}\" y2=\"{oy:.2}\" stroke=\"#ccc\"/>\n"
    ));
    svg.push_str(&format!(
        "  <line x1=\"{ox:.2}\" y1=\"0\" x2=\"{ox:.2}\" y2=\"{SIZE:.0}\" stroke=\"#ccc\"/>\n"
    ));
    // The polygon itself.
    let pts: Vec<String> = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| {
            let (sx, sy) = map(x, y);
            format!("{sx:.2},{sy:.2}")
        })
        .collect();
    svg.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"#dbe9f4\" fill-opacity=\"0.7\" stroke=\"#1f4e79\" \
         stroke-width=\"2\"/>\n",
        pts.join(" ")
    ));
    // One arrow per orbit class, anchored at the class base point and
    // pointing along the outward normal.
    for c in classes {
        let (ax, ay) = map(to_f64(&c.base_point.x), to_f64(&c.base_point.y));
        let m = to_f64(&Rational::from_integer(c.direction.m().clone()));
        let n = to_f64(&Rational::from_integer(c.direction.n().clone()));
        let len = (m * m + n * n).sqrt();
        let (dx, dy) = (m / len * 30.0, -n / len * 30.0);
        svg.push_str(&format!(
            "  <line x1=\"{ax:.2}\" y1=\"{ay:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#b33\" \
             stroke-width=\"1.5\" marker-end=\"url(#tip)\"/>\n",
            ax + dx,
            ay + dy
        ));
    }
    // Legend: action, normal direction, and feature kind per class.
    svg.push_str(
        "  <text x=\"14\" y=\"22\" font-family=\"monospace\" font-size=\"13\" \
         fill=\"#1f4e79\">orbit classes (action, normal, kind)</text>\n",
    );
    for (i, c) in classes.iter().take(12).enumerate() {
        svg.push_str(&format!(
            "  <text x=\"14\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" \
             fill=\"#333\">T={} ({},{}) {}{}</text>\n",
            40 + 16 * i,
            rational_str(&c.action()),
            c.direction.m(),
            c.direction.n(),
            c.kind.as_str(),
            if c.cover > 1 { format!(" x{}", c.cover) } else { String::new() }
        ));
    }
    if classes.len() > 12 {
        svg.push_str(&format!(
            "  <text x=\"14\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" \
             fill=\"#333\">... {} more</text>\n",
            40 + 16 * 12,
            classes.len() - 12
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

fn bounds(values: &[f64]) -> (f64, f64) {
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (min, max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::point;
    use crate::rational::{int, ratio};
    use crate::reeb::orbit_classes;

    fn b1() -> StarPolygon {
        make_star_polygon(&[point(1, 0), point(0, 1), point(-1, 0), point(0, -1)]).unwrap()
    }

    #[test]
    fn polygon_json_round_trips_exactly() {
        let star = make_star_polygon(&[
            PointQ::new(ratio(3, 4), int(0)),
            PointQ::new(ratio(1, 3), ratio(1, 3)),
            point(0, 1),
            point(-1, 0),
            point(0, -1),
        ])
        .unwrap();
        let text = polygon_json(&star).to_string();
        let back = polygon_from_json(&text).unwrap();
        assert_eq!(back.vertices(), star.vertices());
    }

    #[test]
    fn integer_literals_are_accepted_in_vertex_pairs() {
        let star = polygon_from_json(r#"{"vertices":[[1,0],["0","1"],[-1,0],[0,-1]]}"#).unwrap();
        assert_eq!(star.vertices(), b1().vertices());
    }

    #[test]
    fn malformed_json_reports_line_and_column() {
        let err = polygon_from_json("{\n  \"vertices\": [[1, 0],]\n}").unwrap_err();
        match err {
            ExportError::Parse { line, column, .. } => {
                assert_eq!(line, 2);
                assert!(column > 0);
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn schema_violations_are_parse_errors() {
        assert!(matches!(polygon_from_json(r#"{"points": []}"#), Err(ExportError::Parse { .. })));
        assert!(matches!(
            polygon_from_json(r#"{"vertices": [["1/0", "2"]]}"#),
            Err(ExportError::Parse { .. })
        ));
        assert!(matches!(
            polygon_from_json(r#"{"vertices": [[0.5, 1]]}"#),
            Err(ExportError::Parse { .. })
        ));
    }

    #[test]
    fn invalid_polygons_are_domain_errors() {
        // Star-shaped validation failure: a quadrant triangle does not
        // surround the origin.
        let err = polygon_from_json(r#"{"vertices":[[1,1],[2,1],[1,2]]}"#).unwrap_err();
        assert!(matches!(err, ExportError::Domain(_)));
    }

    #[test]
    fn weights_and_regions_and_rows_parse() {
        match parse_domain_input(r#"{"head": "3", "weights": ["1","1","1","1","1","1"]}"#) {
            Ok(DomainInput::Weights(w)) => {
                assert_eq!(w.head(), &int(3));
                assert_eq!(w.weights().len(), 6);
            }
            other => panic!("{other:?}"),
        }
        match parse_domain_input(r#"{"head": "3"}"#) {
            Ok(DomainInput::Weights(w)) => assert!(w.weights().is_empty()),
            other => panic!("{other:?}"),
        }
        match parse_domain_input(r#"{"region": [[0,0],[2,0],[2,2],[0,2]]}"#) {
            Ok(DomainInput::Region(r)) => assert_eq!(r.area(), int(4)),
            other => panic!("{other:?}"),
        }
        match parse_domain_input(r#"{"rows": [0.5, -1.25]}"#) {
            Ok(DomainInput::Rows(v)) => assert_eq!(v, vec![0.5, -1.25]),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_domain_input(r#"{"head": "2", "weights": ["3"]}"#),
            Err(ExportError::Domain(_))
        ));
    }

    #[test]
    fn analyze_report_carries_exact_values() {
        let report = analyze_report(&b1());
        assert_eq!(report["rho"], "1/4");
        assert_eq!(report["sys"], "1");
        assert_eq!(report["volume"], "4");
        assert_eq!(report["flags"]["systolically_convex"], true);
        assert_eq!(report["ruelle"], "0");
        // The emitted polygon re-parses to the same fiber.
        let back = polygon_from_json(&report["polygon"].to_string()).unwrap();
        assert_eq!(back.vertices(), b1().vertices());
    }

    #[test]
    fn spectrum_csv_lists_all_classes_in_action_order() {
        let classes = orbit_classes(&b1(), &int(1));
        let csv = spectrum_csv(&classes);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "action,kind,feature_index,direction_m,direction_n,cover");
        assert_eq!(lines.len(), 1 + classes.len());
        assert_eq!(classes.len(), 8);
        assert!(lines[1..].iter().all(|l| l.starts_with("1,")));
    }

    #[test]
    fn capacity_csv_has_exact_numerator_denominator_rows() {
        let seq = CapacitySequence::ball(&int(3), 2);
        assert_eq!(capacity_csv(&seq), "k,value_num,value_den,source\n1,3,1,ball\n2,3,1,ball\n");
        let flat = CapacitySequence::flat(
            &crate::geometry::ConvexPolygon::from_star(b1()).unwrap(),
            2,
        );
        assert_eq!(capacity_csv(&flat), "k,value_num,value_den,source\n1,2,1,flat\n2,3,1,flat\n");
    }

    #[test]
    fn certificate_json_has_the_contract_fields() {
        let target = WeightSequence::new(int(3), vec![int(1); 6]);
        let cert = crate::ech::embed_ball_check(&target, &ratio(3, 2)).unwrap();
        let report = certificate_json(&cert);
        assert_eq!(report["verdict"], "embeds");
        assert_eq!(report["a"], "3/2");
        assert!(report["K"].as_u64().unwrap() >= 593);
        assert!(report.get("witness_k").is_none());

        let cert = crate::ech::embed_ball_check(&target, &ratio(8, 5)).unwrap();
        let report = certificate_json(&cert);
        assert_eq!(report["verdict"], "obstructed");
        assert!(report["witness_k"].as_u64().is_some());
    }

    #[test]
    fn distance_json_matches_the_interface_shape() {
        let d = crate::distances::inclusion_distance(&b1(), &b1().scaled(&int(2)));
        let v = distance_json(&d, "inclusion");
        assert_eq!(v["C"], "2");
        assert_eq!(v["exact"], true);
        assert_eq!(v["mode"], "inclusion");
        assert!((v["log"].as_f64().unwrap() - 2.0f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn svg_draws_polygon_arrows_and_legend() {
        let classes = orbit_classes(&b1(), &int(1));
        let svg = polygon_svg(&b1(), &classes);
        assert!(svg.starts_with("<svg "));
        assert!(svg.contains("viewBox=\"0 0 512 512\""));
        assert!(svg.contains("<polygon points="));
        assert_eq!(svg.matches("marker-end").count(), 8);
        assert!(svg.contains("T=1 (1,1) edge"));
        assert!(svg.ends_with("</svg>\n"));
        // Deterministic: a second render is byte-identical.
        assert_eq!(svg, polygon_svg(&b1(), &classes));
    }
}
