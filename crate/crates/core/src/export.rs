//! JSON export of matrices, root data, convex orders, representations and
//! pairing tables.
//!
//! Matrix schema:
//!
//! ```text
//! { "n_rows", "n_cols", "vars": [names],
//!   "entries": [ { "row", "col", "num": [term], "den": [term] } ] }
//! term = { "coeff": "p/q", "exps": [ints] }
//! ```
//!
//! `vars` starts with `u, v` (`r^{1/2}`, `s^{1/2}`), so exponents of `r` and
//! `s` are stored doubled.

use crate::lyndon::{lalonde_ram, minimal_pair};
use crate::matrix::SparseMat;
use crate::pairing::PairingRow;
use crate::rep::Representation;
use crate::rootdata::RootSystem;
use crate::scalar::{JsonTerm, Scalar, ScalarError, ScalarRing};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryJson {
    pub row: usize,
    pub col: usize,
    pub num: Vec<JsonTerm>,
    pub den: Vec<JsonTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n_rows: usize,
    pub n_cols: usize,
    pub vars: Vec<String>,
    pub entries: Vec<EntryJson>,
}

#[derive(Debug, thiserror::Error)]
pub enum ExportError {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("entry ({row}, {col}) outside a {n_rows}x{n_cols} matrix")]
    OutOfRange { row: usize, col: usize, n_rows: usize, n_cols: usize },
    #[error("variables {0:?} are not a prefix of the standard layout")]
    Vars(Vec<String>),
}

/// The smallest standard ring holding every entry of `m`.
pub fn ring_for(m: &SparseMat) -> ScalarRing {
    let k = m.entries().map(|(_, _, x)| x.arity()).max().unwrap_or(0);
    ScalarRing::standard_prefix(k)
}

pub fn matrix_to_json(m: &SparseMat) -> MatrixJson {
    let ring = ring_for(m);
    MatrixJson {
        n_rows: m.n_rows(),
        n_cols: m.n_cols(),
        vars: ring.names().to_vec(),
        entries: m
            .entries()
            .map(|(row, col, x)| EntryJson {
                row,
                col,
                num: ring.to_terms(x.numer()),
                den: ring.to_terms(x.denom()),
            })
            .collect(),
    }
}

pub fn matrix_from_json(j: &MatrixJson) -> Result<SparseMat, ExportError> {
    let ring = ScalarRing::new(&j.vars)?;
    let std = ScalarRing::standard();
    if j.vars.iter().zip(std.names()).any(|(a, b)| a != b) {
        return Err(ExportError::Vars(j.vars.clone()));
    }
    let mut trip = Vec::with_capacity(j.entries.len());
    for e in &j.entries {
        if e.row >= j.n_rows || e.col >= j.n_cols {
            return Err(ExportError::OutOfRange { row: e.row, col: e.col, n_rows: j.n_rows, n_cols: j.n_cols });
        }
        let x = Scalar::from_parts(ring.from_terms(&e.num)?, ring.from_terms(&e.den)?)?;
        trip.push((e.row, e.col, x));
    }
    Ok(SparseMat::from_triplets(j.n_rows, j.n_cols, trip))
}

pub fn matrix_to_string(m: &SparseMat) -> String {
    serde_json::to_string_pretty(&matrix_to_json(m)).expect("serializable")
}

pub fn matrix_from_str(s: &str) -> Result<SparseMat, ExportError> {
    matrix_from_json(&serde_json::from_str(s)?)
}

fn text(x: &Scalar) -> String {
    x.to_string()
}

/// Positive roots in both coordinate systems, Cartan and Ringel matrices and
/// the `(ω'_i, ω_j)` table.
pub fn rootdata_json(rs: &RootSystem) -> Value {
    let n = rs.rank;
    let unit = |i: usize| (0..n).map(|k| i32::from(k == i)).collect::<Vec<_>>();
    let omega: Vec<Vec<String>> =
        (0..n).map(|i| (0..n).map(|j| text(&rs.omega_pairing_alpha(&unit(i), &unit(j)))).collect()).collect();
    json!({
        "family": rs.family,
        "rank": n,
        "symmetrizers": rs.symmetrizers(),
        "positive_roots": rs.positive_roots().iter().map(|r| json!({
            "name": r.name,
            "alpha": r.alpha,
            "eps": r.eps.0,
        })).collect::<Vec<_>>(),
        "cartan": rs.cartan(),
        "ringel": rs.ringel_matrix(),
        "omega": omega,
    })
}

/// One row per root in convex order: root, standard Lyndon word, minimal pair.
pub fn lyndon_json(rs: &RootSystem) -> Value {
    let co = lalonde_ram(rs);
    let roots = rs.positive_roots();
    let rows: Vec<Value> = co
        .order
        .iter()
        .map(|&g| {
            let pair = minimal_pair(rs, &co, g).ok().map(|(a, b)| [roots[a].name.clone(), roots[b].name.clone()]);
            json!({
                "root": roots[g].name,
                "alpha": roots[g].alpha,
                "word": co.words[g],
                "minimal_pair": pair,
            })
        })
        .collect();
    json!({ "family": rs.family, "rank": rs.rank, "order": rows })
}

/// Every generator matrix of a module, keyed by generator name.
pub fn rep_json(rep: &Representation) -> Value {
    let gens: serde_json::Map<String, Value> = rep
        .generators()
        .into_iter()
        .map(|g| (g.to_string(), serde_json::to_value(matrix_to_json(rep.gen(g))).expect("serializable")))
        .collect();
    json!({
        "family": rep.family,
        "rank": rep.rank,
        "dim": rep.dim,
        "weights": rep.weights.iter().map(|w| w.0.clone()).collect::<Vec<_>>(),
        "generators": gens,
    })
}

pub fn pairing_json(rows: &[PairingRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "root": r.root,
                    "m": r.m,
                    "closed_form": text(&r.closed),
                    "oracle": text(&r.direct),
                    "recursion": text(&r.recursive),
                    "agrees": r.agrees(),
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmatrix::rhat_explicit;
    use crate::rootdata::Family;

    #[test]
    fn round_trip_c2() {
        let m = rhat_explicit(Family::C, 2);
        let j = matrix_to_json(&m);
        assert_eq!(j.vars, ["u", "v"]);
        assert_eq!(matrix_from_str(&matrix_to_string(&m)).unwrap(), m);
    }

    #[test]
    fn rejects_out_of_range() {
        let mut j = matrix_to_json(&SparseMat::identity(2));
        j.entries[0].row = 5;
        assert!(matrix_from_json(&j).is_err());
    }
}
