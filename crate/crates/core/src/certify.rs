//! The full certificate suite over a range of families and ranks.

use crate::lyndon::{self, lalonde_ram};
use crate::pairing::{pairing_table, verify_pbw_orthogonality};
use crate::rep::{evaluation, fundamental, min_affine_rank, verify_affine_relations, verify_finite_relations,
    verify_highest_weight, verify_weights, EvalParams};
use crate::report::{CertificateReport, Check};
use crate::rootdata::{Family, RootSystem};
use crate::scalar::X;
use crate::{affine, embed, rmatrix};
use rayon::prelude::*;
use std::fmt::Display;
use std::time::Instant;

/// Groups of checks, one per library area.
pub const AREAS: &[&str] = &["rootdata", "lyndon", "rep", "pairing", "rmatrix", "affine", "embed"];

/// Smallest rank certified for each family; `certify_all` always includes it.
pub fn desk_rank(family: Family) -> usize {
    match family {
        Family::D => 3,
        _ => 2,
    }
}

/// `(family, rank)` pairs from the desk rank up to `max_rank`.
pub fn cases(max_rank: usize) -> Vec<(Family, usize)> {
    Family::ALL
        .iter()
        .flat_map(|&f| {
            let lo = desk_rank(f);
            (lo..=max_rank.max(lo)).map(move |n| (f, n))
        })
        .collect()
}

fn or_fail<T, E: Display>(name: &str, r: Result<T, E>) -> Result<T, Vec<Check>> {
    r.map_err(|e| vec![Check::fail(name, e.to_string())])
}

fn rootdata_checks(f: Family, n: usize) -> Result<Vec<Check>, Vec<Check>> {
    let rs = or_fail("root system", RootSystem::new(f, n))?;
    let dim = f.module_dim(n) as u64;
    let mut total = 0;
    for w in rs.square_components() {
        total += or_fail("weyl dimension", rs.weyl_dimension(&w))?;
    }
    let c = if total == dim * dim {
        Check::pass("dimension sum")
    } else {
        Check::fail("dimension sum", format!("{} != {}", total, dim * dim))
    };
    Ok(vec![c])
}

fn lyndon_checks(f: Family, n: usize) -> Result<Vec<Check>, Vec<Check>> {
    let rs = or_fail("root system", RootSystem::new(f, n))?;
    let co = lalonde_ram(&rs);
    let mut out = vec![if lyndon::is_convex(&rs, &co.order) {
        Check::pass("convex")
    } else {
        Check::fail("convex", "order is not convex")
    }];
    if n > desk_rank(f) {
        let small = or_fail("root system", RootSystem::new(f, n - 1))?;
        let want = lyndon::order_alpha(&small, &lalonde_ram(&small));
        out.push(if lyndon::telescope(&rs, &co) == want {
            Check::pass("telescope")
        } else {
            Check::fail("telescope", format!("{}{} does not restrict to {}{}", f, n, f, n - 1))
        });
    }
    Ok(out)
}

fn rep_checks(f: Family, n: usize) -> Result<Vec<Check>, Vec<Check>> {
    let rep = or_fail("module", fundamental(f, n))?;
    let mut out = or_fail("relations", verify_finite_relations(&rep))?;
    out.push(or_fail("weights", verify_weights(&rep))?);
    out.push(verify_highest_weight(&rep));
    if n >= min_affine_rank(f) {
        let ev = or_fail("evaluation module", evaluation(f, n, EvalParams::Symbolic, X))?;
        let checks = or_fail("affine relations", verify_affine_relations(&ev, EvalParams::Symbolic, X))?;
        out.push(Check::all("affine relations", checks));
    }
    Ok(out)
}

/// Largest power `m` in the pairing-constant check. Squares of the long
/// root vectors beyond the desk ranks take minutes to pair directly.
pub fn pairing_depth(f: Family, n: usize) -> u32 {
    if n <= desk_rank(f) || (f == Family::A && n == 3) {
        2
    } else {
        1
    }
}

fn pairing_checks(f: Family, n: usize) -> Result<Vec<Check>, Vec<Check>> {
    let rs = or_fail("root system", RootSystem::new(f, n))?;
    let max_m = pairing_depth(f, n);
    let bad: Vec<String> = pairing_table(&rs, max_m)
        .into_iter()
        .filter(|r| !r.agrees())
        .map(|r| format!("{} m={}: closed {} direct {} recursion {}", r.root, r.m, r.closed, r.direct, r.recursive))
        .collect();
    let mut out = vec![match bad.first() {
        None => Check::pass(format!("constants (m <= {max_m})")),
        Some(w) => Check::fail(format!("constants (m <= {max_m})"), w.clone()),
    }];
    let h = if n <= 2 { 3 } else { 2 };
    out.push(match verify_pbw_orthogonality(&rs, h) {
        Ok(_) => Check::pass(format!("pbw orthogonality (height {h})")),
        Err(w) => Check::fail(format!("pbw orthogonality (height {h})"), w),
    });
    Ok(out)
}

/// Runs one area for one `(family, rank)`.
pub fn run_area(area: &str, f: Family, n: usize) -> Vec<Check> {
    let res = match area {
        "rootdata" => rootdata_checks(f, n),
        "lyndon" => lyndon_checks(f, n),
        "rep" => rep_checks(f, n),
        "pairing" => pairing_checks(f, n),
        "rmatrix" => or_fail("rmatrix", rmatrix::verify(f, n, &[])),
        "affine" => or_fail("affine", affine::verify(f, n, &[])),
        "embed" => or_fail("embed", embed::verify(f, n, &[])),
        other => Err(vec![Check::fail(other, "unknown area")]),
    };
    res.unwrap_or_else(|e| e)
        .into_iter()
        .map(|c| Check { name: format!("{area}: {}", c.name), witness: c.witness })
        .collect()
}

/// Every area for every case, in parallel; entries sorted by
/// `(check, family, rank)`.
pub fn certify_all(max_rank: usize) -> CertificateReport {
    let jobs: Vec<(&str, Family, usize)> =
        cases(max_rank).into_iter().flat_map(|(f, n)| AREAS.iter().map(move |&a| (a, f, n))).collect();
    let parts: Vec<CertificateReport> = jobs
        .par_iter()
        .map(|&(area, f, n)| {
            let mut rep = CertificateReport::default();
            let t = Instant::now();
            let checks = run_area(area, f, n);
            let dt = t.elapsed();
            for c in checks {
                rep.push(f, n, c, dt);
            }
            rep
        })
        .collect();
    let mut out = CertificateReport::default();
    for p in parts {
        out.merge(p);
    }
    out.sort();
    out
}
