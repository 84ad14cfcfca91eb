//! Text and JSON rendering of profiles and theorem reports.
//!
//! JSON output goes through `serde_json::Value`, whose maps keep keys sorted,
//! so the same input always produces the same bytes.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::algebra::LieAlgebra;
use crate::oracle::{Status, TheoremReport};
use crate::series::{ProfileReport, SeriesKind, SeriesReport};
use crate::subspace::Subspace;

/// `0`, `L`, or `span{...}` with basis rows written in the algebra's labels.
pub fn describe_subspace(l: &LieAlgebra, s: &Subspace) -> String {
    if s.is_zero() {
        return "0".into();
    }
    if s.is_full() {
        return "L".into();
    }
    let rows: Vec<String> = s.basis_vectors().map(|v| l.format_vector(v)).collect();
    format!("span{{{}}}", rows.join(", "))
}

pub fn subspace_json(l: &LieAlgebra, s: &Subspace) -> Value {
    let basis: Vec<Vec<String>> = s
        .basis_vectors()
        .map(|v| v.iter().map(ToString::to_string).collect())
        .collect();
    let span: Vec<String> = s.basis_vectors().map(|v| l.format_vector(v)).collect();
    json!({ "dim": s.dim(), "basis": basis, "span": span })
}

fn series_json(l: &LieAlgebra, s: &SeriesReport) -> Value {
    json!({
        "stabilization_index": s.stabilization_index(),
        "terms": s.terms.iter().map(|t| subspace_json(l, t)).collect::<Vec<_>>(),
    })
}

pub fn profile_json(l: &LieAlgebra, p: &ProfileReport) -> Value {
    let f = &p.flags;
    json!({
        "dim": p.dim,
        "labels": l.labels(),
        "series": {
            "derived": series_json(l, &p.derived),
            "lower_central": series_json(l, &p.lower_central),
            "upper_central": series_json(l, &p.upper_central),
        },
        "perfect_radical": subspace_json(l, &p.perfect_radical),
        "near_perfect_radical": subspace_json(l, &p.near_perfect_radical),
        "radical": subspace_json(l, &p.radical),
        "center": subspace_json(l, &p.center),
        "smallest_upper_bounded": subspace_json(l, &p.smallest_upper_bounded),
        "flags": {
            "solvable": f.solvable,
            "nilpotent": f.nilpotent,
            "perfect": f.perfect,
            "abelian": f.abelian,
            "semisimple": f.semisimple,
        },
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn series_title(kind: SeriesKind) -> &'static str {
    match kind {
        SeriesKind::Derived => "derived series L^(k)",
        SeriesKind::LowerCentral => "lower central series L^k",
        SeriesKind::UpperCentral => "upper central series U_k(0)",
    }
}

pub fn profile_text(l: &LieAlgebra, p: &ProfileReport) -> String {
    let mut out = String::new();
    writeln!(out, "dim {} ({})", p.dim, l.labels().join(", ")).unwrap();
    for kind in SeriesKind::ALL {
        let s = p.series(kind);
        let dims: Vec<String> = s.dims().iter().map(ToString::to_string).collect();
        writeln!(
            out,
            "\n{}: dims {}, stabilizes at m = {}",
            series_title(kind),
            dims.join(" > "),
            s.stabilization_index()
        )
        .unwrap();
        for (k, t) in s.terms.iter().enumerate() {
            writeln!(out, "  [{k}] {}", describe_subspace(l, t)).unwrap();
        }
    }
    writeln!(out).unwrap();
    let rows = [
        ("perfect radical P(L)", &p.perfect_radical),
        ("near perfect radical NP(L)", &p.near_perfect_radical),
        ("solvable radical R(L)", &p.radical),
        ("center Z(L)", &p.center),
        ("smallest upper bounded ideal", &p.smallest_upper_bounded),
    ];
    for (name, s) in rows {
        writeln!(
            out,
            "{name:<30} dim {}  {}",
            s.dim(),
            describe_subspace(l, s)
        )
        .unwrap();
    }
    let f = &p.flags;
    writeln!(
        out,
        "\nsolvable {}, nilpotent {}, perfect {}, abelian {}, semisimple {}",
        yes_no(f.solvable),
        yes_no(f.nilpotent),
        yes_no(f.perfect),
        yes_no(f.abelian),
        yes_no(f.semisimple)
    )
    .unwrap();
    out
}

pub const SAMPLING_NOTE: &str =
    "ideals are sampled at random; a clean report covers the sampled ideals only";

pub fn theorem_json(l: &LieAlgebra, r: &TheoremReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            let witness = c.witness.as_ref().map(|w| {
                json!({
                    "description": w.description,
                    "subspaces": w.subspaces.iter().map(|(name, s)| {
                        json!({ "name": name, "subspace": subspace_json(l, s) })
                    }).collect::<Vec<_>>(),
                })
            });
            json!({
                "id": c.id,
                "statement": c.statement,
                "status": c.status.as_str(),
                "instances": c.instances,
                "detail": c.detail,
                "witness": witness,
            })
        })
        .collect();
    json!({
        "dim": r.dim,
        "samples": r.samples,
        "seed": r.seed,
        "distinct_ideals": r.distinct_ideals,
        "note": SAMPLING_NOTE,
        "all_hold": r.all_hold(),
        "checks": checks,
    })
}

pub fn theorem_text(l: &LieAlgebra, r: &TheoremReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "# {} samples, seed {}, {} distinct ideals; {}",
        r.samples, r.seed, r.distinct_ideals, SAMPLING_NOTE
    )
    .unwrap();
    for c in &r.checks {
        let tag = match c.status {
            Status::Holds => "ok",
            Status::Vacuous => "vacuous",
            Status::Violated => "VIOLATED",
        };
        write!(
            out,
            "{:<31} {:<8} {:>4}  {}",
            c.id, tag, c.instances, c.statement
        )
        .unwrap();
        if let Some(d) = &c.detail {
            write!(out, "  ({d})").unwrap();
        }
        writeln!(out).unwrap();
        if let Some(w) = &c.witness {
            writeln!(out, "    witness: {}", w.description).unwrap();
            for (name, s) in &w.subspaces {
                writeln!(out, "      {name} = {}", describe_subspace(l, s)).unwrap();
            }
        }
    }
    out
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values built from json! serialize");
    s.push('\n');
    s
}
