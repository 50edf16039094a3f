//! JSON encodings. Generators and positions count from 1; rationals are
//! `"num/den"` strings and Laurent polynomials are `[[exponent, "coefficient"], ..]`.

use serde_json::{json, Value};

use crate::domains::Domain;
use crate::dynkin::{dynkin_diagram, orbit_edges};
use crate::groupoid::{Groupoid, GroupoidElement, Word};
use crate::hecke::{IntegralityReport, PresentationReport};
use crate::linalg::Matrix;
use crate::rootsys::{AxiomReport, RootSystemData};
use crate::scalar::format_rational;
use crate::superreps::IsomorphismReport;
use crate::weylreps::Irrep;
use crate::{LaurentPoly, Rational};

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn laurent(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().iter().map(|(e, c)| json!([e, c.to_string()])).collect())
}

pub fn domain(d: &Domain) -> Value {
    json!({
        "label": d.to_string(),
        "parities": d.parities(),
        "tag": d.tag().map(|t| t.as_str()),
    })
}

pub fn domains(rs: &RootSystemData) -> Value {
    let list: Vec<Value> = (0..rs.num_domains())
        .map(|a| {
            let mut v = domain(rs.domain(a));
            v["index"] = json!(a);
            v
        })
        .collect();
    json!({ "family": rs.label(), "count": list.len(), "domains": list })
}

pub fn element(rs: &RootSystemData, w: &GroupoidElement) -> Value {
    let perm: Vec<Value> = w.map.pairs().iter().map(|(img, s)| json!([img + 1, s])).collect();
    json!({
        "source": rs.domain(w.source).to_string(),
        "target": rs.domain(w.target).to_string(),
        "perm": perm,
    })
}

pub fn word(rs: &RootSystemData, w: &Word) -> Value {
    json!({
        "base": rs.domain(w.base).to_string(),
        "letters": w.letters.iter().map(|i| i + 1).collect::<Vec<_>>(),
    })
}

pub fn elements(g: &Groupoid) -> Value {
    let rs = g.root_system();
    let list: Vec<Value> = (0..g.len())
        .map(|k| {
            let mut v = element(rs, g.element(k));
            v["index"] = json!(k);
            v["length"] = json!(g.length_of(k));
            v["word"] = word(rs, g.canonical_word(k));
            v
        })
        .collect();
    json!({ "family": rs.label(), "count": g.len(), "elements": list })
}

/// Structure constants with polynomial coefficients.
pub fn structure_constants_poly(g: &Groupoid, table: &[Vec<(usize, LaurentPoly)>]) -> Value {
    structure_constants(g, table, |p| json!({ "poly": laurent(p) }))
}

/// Structure constants evaluated at a rational `q`.
pub fn structure_constants_eval(g: &Groupoid, table: &[Vec<(usize, Rational)>]) -> Value {
    structure_constants(g, table, |r| json!({ "value": rational(r) }))
}

fn structure_constants<S>(g: &Groupoid, table: &[Vec<(usize, S)>], coeff: impl Fn(&S) -> Value) -> Value {
    let rs = g.root_system();
    let n = g.len();
    let basis: Vec<Value> = (0..n).map(|k| word(rs, g.canonical_word(k))).collect();
    let mut entries = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let row = &table[u * n + v];
            if row.is_empty() {
                continue;
            }
            let terms: Vec<Value> = row
                .iter()
                .map(|(w, c)| {
                    let mut t = coeff(c);
                    t["w"] = json!(w);
                    t
                })
                .collect();
            entries.push(json!({ "u": u, "v": v, "terms": terms }));
        }
    }
    json!({ "family": rs.label(), "basis": basis, "entries": entries })
}

pub fn matrix_row_major(m: &Matrix<Rational>) -> Value {
    Value::Array(m.data().iter().map(rational).collect())
}

pub fn irrep(r: &Irrep) -> Value {
    json!({
        "label": r.label.to_string(),
        "dim": r.dim,
        "generators": r.generators.iter().map(matrix_row_major).collect::<Vec<_>>(),
    })
}

pub fn dynkin(rs: &RootSystemData) -> Value {
    let diagrams: Vec<Value> = (0..rs.num_domains())
        .map(|a| {
            let d = dynkin_diagram(rs, a);
            json!({
                "domain": d.domain,
                "nodes": d.nodes.iter().enumerate().map(|(k, s)| json!({"index": k + 1, "style": s.as_str()})).collect::<Vec<_>>(),
                "edges": d.edges.iter().map(|e| json!({"i": e.i, "j": e.j, "bonds": e.bonds, "m": e.m})).collect::<Vec<_>>(),
            })
        })
        .collect();
    let orbit: Vec<Value> = orbit_edges(rs)
        .into_iter()
        .map(|(a, b, i)| json!({"from": rs.domain(a).to_string(), "to": rs.domain(b).to_string(), "generator": i}))
        .collect();
    json!({ "family": rs.label(), "orbit": orbit, "diagrams": diagrams })
}

pub fn axioms(r: &AxiomReport) -> Value {
    json!({
        "passed": r.all_passed(),
        "axioms": r.results.iter().map(|a| json!({
            "axiom": a.axiom,
            "description": a.description,
            "passed": a.passed,
            "witness": a.witness,
        })).collect::<Vec<_>>(),
    })
}

pub fn presentation(r: &PresentationReport) -> Value {
    json!({
        "passed": r.passed(),
        "general_checked": r.general_checked,
        "general_failures": r.general_failures,
        "family_checked": r.family_checked,
        "family_failures": r.family_failures,
        "length_mismatches": r.length_mismatches,
    })
}

pub fn integrality(r: &IntegralityReport) -> Value {
    json!({
        "passed": r.passed(),
        "entries": r.entries,
        "negative_exponent": r.negative_exponent,
        "degree_exceeded": r.degree_exceeded,
    })
}

pub fn isomorphism(r: &IsomorphismReport) -> Value {
    json!({
        "family": r.family.to_string(),
        "superalgebra": r.family.superalgebra(),
        "q": rational(&r.q0),
        "passed": r.passed(),
        "dims": {
            "enumerated": r.algebra_dim,
            "formula": r.formula.to_string(),
            "blocks": r.expected_rank,
        },
        "rank": {
            "image": r.image_rank,
            "basis_images": r.injectivity_rank,
        },
        "relations_checked": r.relations_checked,
        "traces_distinct": r.traces_distinct,
        "summands": r.summands.iter().map(|s| json!({
            "left": s.left.to_string(),
            "right": s.right.to_string(),
            "dim": s.dim,
            "image_rank": s.image_rank,
            "relation_failures": s.relation_failures,
        })).collect::<Vec<_>>(),
        "witness": r.witness(),
    })
}
