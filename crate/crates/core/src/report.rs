//! Serialized forms of a [`KnotReport`]: the JSON document described by
//! `docs/schema.json`, plus Markdown and plain-table renderings.
//!
//! Integers that can grow without bound are decimal strings; polynomials
//! are coefficient arrays, lowest degree first.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::dihedral::DihedralImage;
use crate::exact::{PolyF2, PolyQ, PolyZ};
use crate::field::{AbsenceReason, SqrtStatus};
use crate::verdict::{Containment, FactorAnalysis, KnotReport, ReportStatus};

pub const SCHEMA_VERSION: &str = "1";
pub const TOOLKIT_VERSION: &str = env!("CARGO_PKG_VERSION");

fn int(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

fn rat(r: &BigRational) -> Value {
    Value::String(r.to_string())
}

pub fn poly_z_json(f: &PolyZ) -> Value {
    Value::Array(f.coeffs().iter().map(int).collect())
}

pub fn poly_q_json(f: &PolyQ) -> Value {
    Value::Array(f.coeffs().iter().map(rat).collect())
}

pub fn poly_f2_json(f: &PolyF2) -> Value {
    Value::Array(f.bits().into_iter().map(|b| json!(b)).collect())
}

fn reason_json(r: &AbsenceReason) -> Value {
    match r {
        AbsenceReason::OddDiscriminant { disc } => json!({"kind": "odd_discriminant", "disc": int(disc)}),
        AbsenceReason::RationalField => json!({"kind": "rational_field"}),
        AbsenceReason::OddDegree { degree } => json!({"kind": "odd_degree", "degree": degree}),
        AbsenceReason::Ramification { prime } => json!({"kind": "ramification", "prime": prime}),
        AbsenceReason::InertPrime { prime, residue_degree } => {
            json!({"kind": "inert_prime", "prime": prime, "residue_degree": residue_degree})
        }
        AbsenceReason::QuadraticDiscriminant => json!({"kind": "quadratic_discriminant"}),
        AbsenceReason::NormIrreducible { shift } => json!({"kind": "norm_irreducible", "shift": shift}),
    }
}

pub fn sqrt_status_json(s: &SqrtStatus) -> Value {
    match s {
        SqrtStatus::CertifiedAbsent(r) => json!({"status": "certified_absent", "certificate": reason_json(r)}),
        SqrtStatus::PresentWitness(z) => json!({"status": "present_witness", "witness": poly_q_json(z)}),
        SqrtStatus::Undetermined(why) => json!({"status": "undetermined", "detail": why}),
    }
}

fn containment_json(c: &Containment) -> Value {
    match c {
        Containment::Contained => json!({"status": "contained"}),
        Containment::NotContained(why) => json!({"status": "not_contained", "detail": why}),
        Containment::Undetermined(why) => json!({"status": "undetermined", "detail": why}),
    }
}

fn image_json(d: &DihedralImage) -> Value {
    json!({
        "factor_mod2": poly_f2_json(&d.factor_mod2),
        "degree": d.factor_mod2.degree().unwrap_or(0),
        "m": d.m,
    })
}

fn factor_json(fa: &FactorAnalysis) -> Value {
    let f = &fa.field;
    let c = &fa.cusp;
    json!({
        "polynomial": poly_z_json(&f.factor),
        "degree": f.degree,
        "disc": int(&f.disc),
        "disc_odd": f.disc_odd,
        "two_splitting": f.two_splitting,
        "qi_status": sqrt_status_json(&f.qi_status),
        "sqrt_m3_status": sqrt_status_json(&f.sqrtm3_status),
        "arithmetic_candidate": f.arithmetic_candidate,
        "geometric_candidate": f.geometric_candidate,
        "dihedral": fa.dihedral.iter().map(image_json).collect::<Vec<_>>(),
        "cusp": {
            "longitude_diagonal": c.diagonal_sign,
            "g": poly_z_json(c.g.rep()),
            "g0": poly_z_json(c.g0.rep()),
            "g0_minpoly": poly_q_json(&c.cusp_minpoly),
            "cusp_degree": c.cusp_degree,
            "g_minpoly": poly_q_json(&fa.cusp_field_minpoly),
            "in_q_sqrt_m3": containment_json(&fa.cusp_in_sqrt_m3),
            "in_q_i": containment_json(&fa.cusp_in_qi),
        },
    })
}

/// The JSON report document. Keys are emitted in sorted order.
pub fn document(r: &KnotReport) -> Value {
    let (status, contradiction) = match &r.status {
        ReportStatus::Ok => ("ok", Value::Null),
        ReportStatus::Contradiction(c) => ("contradiction", serde_json::to_value(c).unwrap()),
    };
    let riley = r.riley.as_ref().map_or(Value::Null, |rp| {
        json!({
            "lambda": poly_z_json(&rp.lambda),
            "degree": rp.lambda.degree().unwrap_or(0),
            "constant_sign": rp.constant_sign,
            "factors": rp.factors.iter().map(poly_z_json).collect::<Vec<_>>(),
        })
    });
    let mod2 = r.mod2.as_ref().map_or(Value::Null, |m| {
        json!({
            "reduced": poly_f2_json(&m.reduced),
            "oracle": poly_f2_json(&m.oracle),
            "oracle_match": m.reduced == m.oracle,
            "images": m.images.iter().map(image_json).collect::<Vec<_>>(),
            "spectrum": m.spectrum.degrees.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<serde_json::Map<_, _>>(),
            "within_3_and_5": m.spectrum.within_3_and_5,
        })
    });
    let symmetry = r.symmetry_group.map_or(Value::Null, |g| {
        json!({"group": g, "basis": "literature_derived"})
    });
    json!({
        "schema_version": SCHEMA_VERSION,
        "toolkit_version": TOOLKIT_VERSION,
        "input": {"p": r.input.0.to_string(), "q": r.input.1.to_string()},
        "knot": {"p": r.knot.p(), "q": r.knot.q()},
        "mirrored": r.mirrored,
        "hyperbolic": r.hyperbolic,
        "status": status,
        "contradiction": contradiction,
        "riley": riley,
        "mod2": mod2,
        "factors": r.factors.iter().map(factor_json).collect::<Vec<_>>(),
        "symmetry_group": symmetry,
        "obstructions": r.obstructions,
        "hidden_symmetries": r.hidden_symmetries,
        "uniqueness": r.uniqueness,
        "provenance": r.provenance,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json(r: &KnotReport) -> String {
    let mut s = serde_json::to_string_pretty(&document(r)).expect("report serializes");
    s.push('\n');
    s
}

fn status_word(s: &SqrtStatus) -> String {
    match s {
        SqrtStatus::CertifiedAbsent(r) => format!("absent ({r:?})"),
        SqrtStatus::PresentWitness(z) => format!("present, sqrt = {z}"),
        SqrtStatus::Undetermined(why) => format!("undetermined ({why})"),
    }
}

fn containment_word(c: &Containment) -> &'static str {
    match c {
        Containment::Contained => "yes",
        Containment::NotContained(_) => "no",
        Containment::Undetermined(_) => "undetermined",
    }
}

pub fn to_markdown(r: &KnotReport) -> String {
    let mut s = String::new();
    let k = r.knot;
    let _ = writeln!(s, "# 2-bridge knot {k}\n");
    let _ = writeln!(s, "- input: ({}, {}){}", r.input.0, r.input.1, if r.mirrored { ", mirrored" } else { "" });
    let _ = writeln!(s, "- hyperbolic: {}", r.hyperbolic);
    if let ReportStatus::Contradiction(c) = &r.status {
        let _ = writeln!(s, "- **contradiction**: {c}");
    }
    if let Some(g) = r.symmetry_group {
        let _ = writeln!(s, "- symmetry group: {g:?} (literature-derived)");
    }
    let _ = writeln!(s, "- hidden symmetries: {:?}", r.hidden_symmetries);
    let _ = writeln!(s, "- commensurability: {:?}", r.uniqueness);
    if let Some(rp) = &r.riley {
        let _ = writeln!(s, "\n## Riley polynomial\n\n    {}\n", rp.lambda);
    }
    if let Some(m) = &r.mod2 {
        let _ = writeln!(s, "## Mod 2\n");
        let _ = writeln!(s, "- reduction: {} (oracle match: {})", m.reduced, m.reduced == m.oracle);
        for im in &m.images {
            let _ = writeln!(s, "- {}: D_{}", im.factor_mod2, im.m);
        }
        s.push('\n');
    }
    for (i, fa) in r.factors.iter().enumerate() {
        let f = &fa.field;
        let _ = writeln!(s, "## Factor {i}: {}\n", f.factor);
        let _ = writeln!(s, "- degree {}, discriminant {}", f.degree, f.disc);
        let _ = writeln!(s, "- residue degrees above 2: {:?}", f.two_splitting);
        let _ = writeln!(s, "- Q(i): {}", status_word(&f.qi_status));
        let _ = writeln!(s, "- Q(sqrt -3): {}", status_word(&f.sqrtm3_status));
        let _ = writeln!(s, "- arithmetic candidate: {}, geometric candidate: {}", f.arithmetic_candidate, f.geometric_candidate);
        let _ = writeln!(s, "- g0 = {}, minimal polynomial {}", fa.cusp.g0.rep(), fa.cusp.cusp_minpoly.display_var("t"));
        let _ = writeln!(
            s,
            "- cusp field degree {}; inside Q(sqrt -3): {}; inside Q(i): {}\n",
            fa.cusp_field_degree,
            containment_word(&fa.cusp_in_sqrt_m3),
            containment_word(&fa.cusp_in_qi)
        );
    }
    if !r.obstructions.is_empty() {
        let _ = writeln!(s, "## Obstructions\n");
        for o in &r.obstructions {
            let _ = writeln!(s, "- {:?} on factor {}: {}", o.kind, o.factor, o.certificate);
        }
        s.push('\n');
    }
    let _ = writeln!(s, "## Provenance\n");
    for p in &r.provenance {
        let _ = writeln!(s, "- {:?}: {}", p.basis, p.claim);
    }
    s
}

pub fn to_table(r: &KnotReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<10} {:>4} {:>24} {:>8} {:>8} {:>10} {:>10}",
        "knot", "deg", "disc", "split2", "m", "cusp_deg", "geometric"
    );
    for fa in &r.factors {
        let f = &fa.field;
        let ms: Vec<String> = fa.dihedral.iter().map(|d| d.m.to_string()).collect();
        let split: Vec<String> = f.two_splitting.iter().map(|d| d.to_string()).collect();
        let _ = writeln!(
            s,
            "{:<10} {:>4} {:>24} {:>8} {:>8} {:>10} {:>10}",
            r.knot.to_string(),
            f.degree,
            f.disc.to_string(),
            split.join(","),
            ms.join(","),
            fa.cusp_field_degree,
            f.geometric_candidate
        );
    }
    let _ = writeln!(s, "verdict: {:?}; {:?}", r.hidden_symmetries, r.uniqueness);
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verdict::{analyze, AnalysisConfig};

    #[test]
    fn figure_eight_json() {
        let r = analyze(5, 3, &AnalysisConfig::default()).unwrap();
        let v = document(&r);
        assert_eq!(v["factors"][0]["disc"], json!("-3"));
        assert_eq!(v["riley"]["lambda"], json!(["1", "-1", "1"]));
        assert_eq!(v["factors"][0]["sqrt_m3_status"]["witness"], json!(["-1", "2"]));
        assert_eq!(v["factors"][0]["cusp"]["g0"], json!(["1", "-2"]));
        assert_eq!(v["mod2"]["spectrum"], json!({"5": 2}));
        assert_eq!(v["symmetry_group"]["group"], json!("D4"));
        assert_eq!(to_json(&r), to_json(&r));
    }

    #[test]
    fn renderers_mention_key_values() {
        let r = analyze(7, 3, &AnalysisConfig::default()).unwrap();
        let md = to_markdown(&r);
        assert!(md.contains("# 2-bridge knot (7, 3)"));
        assert!(md.contains("D_7"));
        let t = to_table(&r);
        assert!(t.contains("(7, 3)"));
        assert!(t.contains("NoHiddenSymmetriesCertified"));
    }
}
