//! Text, JSON and CSV renderings of closure results and invariant reports.

use std::fmt::Write as _;

use idealis_core::homology::Derived;
use idealis_core::{ClosureResult, InvariantReport, MonomialIdeal};
use serde_json::{json, Value};

use crate::format::{generator_strings, IdealText};

pub const CSV_HEADER: [&str; 10] = [
    "instance", "M", "height", "bight", "dim", "depth", "projdim", "reg", "type", "betti",
];

const UNAVAILABLE: &str = "n/a (no supported route)";

pub fn closure_json(input: &MonomialIdeal, result: &ClosureResult) -> Value {
    json!({
        "blocks": input.vars().block_sizes(),
        "input": generator_strings(input),
        "closure": generator_strings(&result.closure),
        "was_closed": result.was_closed,
        "added_generators": result
            .added_generators
            .iter()
            .map(|g| g.display(input.vars()).to_string())
            .collect::<Vec<_>>(),
    })
}

pub fn closure_text(result: &ClosureResult) -> String {
    let c = &result.closure;
    let mut out = String::new();
    for g in generator_strings(c) {
        let _ = writeln!(out, "{g}");
    }
    let _ = writeln!(out, "generators: {}", c.num_generators());
    let _ = writeln!(out, "integrally closed: {}", result.was_closed);
    if !result.was_closed {
        let added: Vec<String> = result
            .added_generators
            .iter()
            .map(|g| g.display(c.vars()).to_string())
            .collect();
        let _ = writeln!(out, "added: {}", added.join(", "));
    }
    out
}

fn derived_json<T: serde::Serialize>(d: &Derived<T>) -> Value {
    json!({ "value": d.value, "provenance": d.provenance.as_str() })
}

pub fn invariants_json(ideal: &MonomialIdeal, r: &InvariantReport) -> Value {
    let certificate = r.certificate.as_ref().map(|c| {
        json!({
            "order": c.order.iter().map(|g| g.display(ideal.vars()).to_string()).collect::<Vec<_>>(),
            "r_values": c.r_values,
            "r_max": c.r_max,
        })
    });
    json!({
        "ideal": generator_strings(ideal),
        "blocks": ideal.vars().block_sizes(),
        "class": r.class.as_str(),
        "M": r.num_vars,
        "height": derived_json(&r.height),
        "bight": derived_json(&r.bight),
        "dim": derived_json(&r.dim),
        "depth": derived_json(&r.depth),
        "projdim": derived_json(&r.projdim),
        "reg": derived_json(&r.reg),
        "betti": derived_json(&r.betti),
        "type": derived_json(&r.cm_type),
        "cohen_macaulay": r.is_cohen_macaulay(),
        "certificate": certificate,
    })
}

fn field<T: ToString>(d: &Derived<T>) -> String {
    match &d.value {
        Some(v) => format!("{} ({})", v.to_string(), d.provenance.as_str()),
        None => UNAVAILABLE.to_string(),
    }
}

fn betti_string(b: &[u64]) -> String {
    b.iter().map(u64::to_string).collect::<Vec<_>>().join(";")
}

pub fn invariants_text(ideal: &MonomialIdeal, r: &InvariantReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ideal: {}", IdealText(ideal));
    let _ = writeln!(out, "class: {}", r.class.as_str());
    let _ = writeln!(out, "M: {}", r.num_vars);
    let _ = writeln!(out, "height: {}", field(&r.height));
    let _ = writeln!(out, "bight: {}", field(&r.bight));
    let _ = writeln!(out, "dim: {}", field(&r.dim));
    let _ = writeln!(out, "depth: {}", field(&r.depth));
    let _ = writeln!(out, "projdim: {}", field(&r.projdim));
    let _ = writeln!(out, "reg: {}", field(&r.reg));
    let betti = match &r.betti.value {
        Some(b) => format!("{} ({})", betti_string(b), r.betti.provenance.as_str()),
        None => UNAVAILABLE.to_string(),
    };
    let _ = writeln!(out, "betti: {betti}");
    let _ = writeln!(out, "type: {}", field(&r.cm_type));
    let cm = match r.is_cohen_macaulay() {
        Some(b) => b.to_string(),
        None => UNAVAILABLE.to_string(),
    };
    let _ = writeln!(out, "cohen-macaulay: {cm}");
    out
}

/// One CSV record; unavailable fields are empty.
pub fn csv_record(instance: &str, r: &InvariantReport) -> [String; 10] {
    fn opt<T: ToString>(d: &Derived<T>) -> String {
        d.value.as_ref().map(T::to_string).unwrap_or_default()
    }
    [
        instance.to_string(),
        r.num_vars.to_string(),
        opt(&r.height),
        opt(&r.bight),
        opt(&r.dim),
        opt(&r.depth),
        opt(&r.projdim),
        opt(&r.reg),
        opt(&r.cm_type),
        r.betti
            .value
            .as_deref()
            .map(betti_string)
            .unwrap_or_default(),
    ]
}

/// Appends one record to `path`, writing the header first if the file is
/// new or empty.
pub fn append_csv(path: &std::path::Path, record: &[String; 10]) -> std::io::Result<()> {
    let fresh = std::fs::metadata(path)
        .map(|m| m.len() == 0)
        .unwrap_or(true);
    let file = std::fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    let mut w = csv::Writer::from_writer(file);
    if fresh {
        w.write_record(CSV_HEADER)?;
    }
    w.write_record(record)?;
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_ideal;
    use idealis_core::homology::invariant_report;
    use idealis_core::{integral_closure, ClassHint};

    #[test]
    fn closure_renderings() {
        let i = parse_ideal("x1_1^2*x1_2*x2_1\nx1_2*x1_3*x2_2^2\nx1_3*x2_1^2", None).unwrap();
        let r = integral_closure(&i).unwrap();
        let j = closure_json(&i, &r);
        assert_eq!(j["added_generators"], json!(["x1_2*x1_3*x2_1*x2_2"]));
        assert_eq!(j["was_closed"], json!(false));
        let t = closure_text(&r);
        assert!(t.contains("generators: 4\n"));
        assert!(t.contains("integrally closed: false"));
    }

    #[test]
    fn invariant_renderings() {
        let i = parse_ideal("x1_1*x2_1\nx1_2*x2_2", None).unwrap();
        let r = invariant_report(&i, ClassHint::Generic).unwrap();
        let t = invariants_text(&i, &r);
        assert!(t.contains("height: 2 (minimal-primes)"));
        assert!(t.contains("projdim: n/a (no supported route)"));
        let j = invariants_json(&i, &r);
        assert_eq!(
            j["projdim"],
            json!({"value": null, "provenance": "unavailable"})
        );
        assert_eq!(
            j["dim"],
            json!({"value": 2, "provenance": "ambient-minus-height"})
        );
        let rec = csv_record("pair", &r);
        assert_eq!(rec[1], "4");
        assert_eq!(rec[6], "");
    }

    #[test]
    fn csv_appends_with_single_header() {
        let i = parse_ideal("x1_1", None).unwrap();
        let r = invariant_report(&i, ClassHint::Principal).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.csv");
        append_csv(&path, &csv_record("a,b", &r)).unwrap();
        append_csv(&path, &csv_record("c", &r)).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(
            text,
            "instance,M,height,bight,dim,depth,projdim,reg,type,betti\n\"a,b\",1,1,1,0,0,1,0,1,1\nc,1,1,1,0,0,1,0,1,1\n"
        );
    }
}
