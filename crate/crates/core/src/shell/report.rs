//! JSON rendering of analysis reports.
//!
//! Objects go through `serde_json::Map`, which keeps keys sorted, and every
//! array is emitted in the report's own deterministic order.

use std::io::Write;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::conjectures::{AnalysisReport, BoundCheck};
use crate::error::Result;
use crate::mori::{MinimalComponent, PrimitiveRelation};

fn int(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn relation_json(r: &PrimitiveRelation) -> Value {
    json!({
        "lhs": r.collection.indices(),
        "rhs": r.rhs.iter().map(|(i, a)| json!([i, int(a)])).collect::<Vec<_>>(),
        "degree": r.degree,
    })
}

fn component_json(c: &MinimalComponent) -> Value {
    json!({
        "indices": c.collection.indices(),
        "degree": c.degree,
        "codegree": c.codegree,
    })
}

fn check_json(c: &BoundCheck) -> Value {
    json!({
        "name": c.name.as_str(),
        "component": c.component.as_ref().map(|m| m.collection.indices()),
        "bound": c.bound,
        "rho": c.rho,
        "satisfied": c.satisfied,
        "asserted_range": c.asserted_range,
    })
}

pub fn report_json(r: &AnalysisReport) -> Value {
    json!({
        "name": r.name,
        "dim": r.dim,
        "vertex_count": r.vertex_count,
        "picard_rank": r.picard_rank,
        "valid": r.is_valid(),
        "validation_failures": r
            .validation
            .failures
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>(),
        "primitive_relations": r.primitive_relations.iter().map(relation_json).collect::<Vec<_>>(),
        "minimal_components": r.minimal_components.iter().map(component_json).collect::<Vec<_>>(),
        "checks": r.checks.iter().map(check_json).collect::<Vec<_>>(),
    })
}

/// Pretty JSON followed by a newline.
pub fn to_pretty(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn write_report<W: Write>(report: &AnalysisReport, sink: &mut W) -> Result<()> {
    sink.write_all(to_pretty(&report_json(report)).as_bytes())?;
    sink.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conjectures::analyze;
    use crate::polytope::{hexagon, simplex, FanoPolytope};

    #[test]
    fn hexagon_casagrande_entry() {
        let v = report_json(&analyze(&hexagon()).unwrap());
        let checks = v["checks"].as_array().unwrap();
        let c = checks.iter().find(|c| c["name"] == "casagrande").unwrap();
        assert_eq!(c["bound"], 4);
        assert_eq!(c["rho"], 4);
        assert_eq!(c["satisfied"], true);
        assert_eq!(c["component"], Value::Null);
    }

    #[test]
    fn simplex_component() {
        let v = report_json(&analyze(&simplex(2)).unwrap());
        assert_eq!(
            v["minimal_components"],
            json!([{"indices": [0, 1, 2], "degree": 3, "codegree": 0}])
        );
        assert_eq!(v["primitive_relations"][0]["rhs"], json!([]));
    }

    #[test]
    fn invalid_report() {
        let p = FanoPolytope::from_rows("bad", 2, &[&[2, 0], &[0, 1], &[-1, -1]]).unwrap();
        let v = report_json(&analyze(&p).unwrap());
        assert_eq!(v["valid"], false);
        assert_eq!(v["primitive_relations"], json!([]));
        assert_eq!(v["minimal_components"], json!([]));
        assert_eq!(v["checks"], json!([]));
    }

    #[test]
    fn keys_sorted() {
        let mut buf = Vec::new();
        write_report(&analyze(&simplex(1)).unwrap(), &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let keys: Vec<&str> = text
            .lines()
            .filter(|l| l.starts_with("  \""))
            .map(|l| l.trim().split('"').nth(1).unwrap())
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }
}
