//! One PASS/FAIL line per acceptance criterion. Exits nonzero on any failure.

mod common;

use common::{reference_order, system};
use rsq::lyndon::{self, lalonde_ram};
use rsq::pairing::{pairing_table, verify_pbw_orthogonality};
use rsq::report::Check;
use rsq::rootdata::Family::{self, A, B, C, D};
use rsq::{affine, embed, rmatrix};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Cases = &'static [(Family, usize)];

const DESK: Cases = &[(A, 2), (B, 2), (C, 2), (D, 3)];

/// Outcome of one criterion: failures, and the slowest case.
struct Outcome {
    failures: Vec<String>,
    slowest: Duration,
}

fn over(cases: Cases, mut f: impl FnMut(Family, usize) -> Vec<Check>) -> Outcome {
    let mut out = Outcome { failures: Vec::new(), slowest: Duration::ZERO };
    for &(fam, n) in cases {
        let t = Instant::now();
        let checks = f(fam, n);
        out.slowest = out.slowest.max(t.elapsed());
        if checks.is_empty() {
            out.failures.push(format!("{fam}{n}: no checks ran"));
        }
        for c in checks.into_iter().filter(|c| !c.passed()) {
            out.failures.push(format!("{fam}{n}: {c}"));
        }
    }
    out
}

fn only(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn finite(names: &'static [&'static str]) -> impl FnMut(Family, usize) -> Vec<Check> {
    move |f, n| rmatrix::verify(f, n, &only(names)).unwrap_or_else(|e| vec![Check::fail("build", e.to_string())])
}

fn spectral(names: &'static [&'static str]) -> impl FnMut(Family, usize) -> Vec<Check> {
    move |f, n| affine::verify(f, n, &only(names)).unwrap_or_else(|e| vec![Check::fail("build", e.to_string())])
}

fn embedded(names: &'static [&'static str]) -> impl FnMut(Family, usize) -> Vec<Check> {
    move |f, n| embed::verify(f, n, &only(names)).unwrap_or_else(|e| vec![Check::fail("build", e.to_string())])
}

fn check(name: &str, ok: bool, detail: impl FnOnce() -> String) -> Check {
    if ok {
        Check::pass(name)
    } else {
        Check::fail(name, detail())
    }
}

fn all_ranks(lo: fn(Family) -> usize, hi: usize) -> Vec<(Family, usize)> {
    Family::ALL.iter().flat_map(|&f| (lo(f)..=hi).map(move |n| (f, n))).collect()
}

fn leak(v: Vec<(Family, usize)>) -> Cases {
    Box::leak(v.into_boxed_slice())
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Outcome>)> = vec![
        (
            "route equivalence: explicit = factorized",
            Duration::from_secs(60),
            Box::new(|| over(&[(A, 2), (A, 3), (B, 2), (B, 3), (C, 2), (C, 3), (D, 3)], finite(&["route"]))),
        ),
        (
            "eigenvalues (B, C, D) and two-eigenvalue minimal polynomial (A)",
            Duration::from_secs(5),
            Box::new(|| {
                let mut o = over(&[(B, 2), (B, 3), (C, 2), (C, 3), (D, 3)], finite(&["eigen"]));
                let a = over(&[(A, 2), (A, 3)], finite(&["min-poly"]));
                o.failures.extend(a.failures);
                o.slowest = o.slowest.max(a.slowest);
                o
            }),
        ),
        (
            "inverse: R-hat times R-bar is the identity",
            Duration::from_secs(30),
            Box::new(|| over(&[(B, 2), (C, 2), (D, 3)], finite(&["inverse"]))),
        ),
        ("braid relation on the triple tensor power", Duration::from_secs(600), Box::new(|| over(DESK, finite(&["braid"])))),
        (
            "affine intertwiner, symbolic evaluation parameters",
            Duration::from_secs(300),
            Box::new(|| over(DESK, spectral(&["intertwine"]))),
        ),
        ("spectral Yang-Baxter equation", Duration::from_secs(600), Box::new(|| over(DESK, spectral(&["ybe"])))),
        ("Baxterization reproduces the spectral R-matrix", Duration::from_secs(60), Box::new(|| over(DESK, spectral(&["baxterize"])))),
        (
            "pairing constants: closed form = direct pairing = recursion, m <= 2",
            Duration::from_secs(300),
            Box::new(|| {
                over(&[(A, 2), (A, 3), (B, 2), (C, 2), (D, 3)], |f, n| {
                    let rows = pairing_table(&system(f, n), 2);
                    let bad: Vec<_> = rows.iter().filter(|r| !r.agrees()).map(|r| format!("{} m={}", r.root, r.m)).collect();
                    vec![check("constants", !rows.is_empty() && bad.is_empty(), || bad.join(", "))]
                })
            }),
        ),
        (
            "PBW orthogonality up to total height 3",
            Duration::from_secs(300),
            Box::new(|| {
                over(&[(A, 2), (B, 2)], |f, n| {
                    let r = verify_pbw_orthogonality(&system(f, n), 3);
                    vec![check("orthogonality", r.is_ok(), || r.unwrap_err())]
                })
            }),
        ),
        (
            "Weyl dimensions of the square sum to N^2",
            Duration::from_secs(1),
            Box::new(|| {
                over(&[(B, 2), (B, 3), (B, 4), (C, 2), (C, 3), (C, 4), (D, 3), (D, 4)], |f, n| {
                    let rs = system(f, n);
                    let dims: Vec<u64> = rs.square_components().iter().map(|w| rs.weyl_dimension(w).unwrap()).collect();
                    let dim = f.module_dim(n) as u64;
                    let total: u64 = dims.iter().sum();
                    vec![check("sum", total == dim * dim, || format!("{dims:?} sums to {total}"))]
                })
            }),
        ),
        (
            "Drinfeld-Jimbo relations and rescaling constants, n <= 3",
            Duration::from_secs(60),
            Box::new(|| over(leak(all_ranks(Family::min_rank, 3)), embedded(&["dj", "kappa"]))),
        ),
        (
            "A2 twist (finite and affine, negative sign); B2 obstruction nonzero",
            Duration::from_secs(60),
            Box::new(|| over(&[(A, 2), (B, 2)], embedded(&["twist"]))),
        ),
        (
            "convex orders verbatim (n <= 4); convex and telescopic (n <= 5)",
            Duration::from_secs(5),
            Box::new(|| {
                let mut o = over(leak(all_ranks(Family::min_rank, 4)), |f, n| {
                    let rs = system(f, n);
                    let got = lyndon::order_alpha(&rs, &lalonde_ram(&rs));
                    vec![check("order", got == reference_order(f, n), || format!("{got:?}"))]
                });
                let p = over(leak(all_ranks(Family::min_rank, 5)), |f, n| {
                    let rs = system(f, n);
                    let co = lalonde_ram(&rs);
                    let mut v = vec![check("convex", lyndon::is_convex(&rs, &co.order), String::new)];
                    if n > f.min_rank() {
                        let small = system(f, n - 1);
                        let want = lyndon::order_alpha(&small, &lalonde_ram(&small));
                        v.push(check("telescope", lyndon::telescope(&rs, &co) == want, String::new));
                    }
                    v
                });
                o.failures.extend(p.failures);
                o.slowest = o.slowest.max(p.slowest);
                o
            }),
        ),
    ];

    let mut failed = 0;
    for (k, (name, budget, run)) in criteria.iter().enumerate() {
        let o = run();
        let slow = o.slowest > *budget;
        let ok = o.failures.is_empty() && !slow;
        failed += usize::from(!ok);
        println!(
            "{} {:>2}. {name} [slowest case {:.2?}, budget {:?}]",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            o.slowest,
            budget
        );
        for f in o.failures.iter().take(5) {
            println!("        {f}");
        }
        if slow {
            println!("        over time budget");
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
