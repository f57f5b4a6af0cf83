//! Shared fixtures for the integration tests: reference tables and small
//! independent oracles.

#![allow(dead_code)]

use rsq::rootdata::{Family, RootSystem};

fn gamma(n: usize, i: usize, j: usize) -> Vec<i32> {
    (1..=n).map(|k| (i <= k && k <= j) as i32).collect()
}

/// `β_ij` as simple-root coefficients, per family.
fn beta(f: Family, n: usize, i: usize, j: usize) -> Vec<i32> {
    (1..=n)
        .map(|k| match f {
            Family::B => {
                if k < i {
                    0
                } else if k < j {
                    1
                } else {
                    2
                }
            }
            Family::C => {
                if k < i {
                    0
                } else if k < j || k == n {
                    1
                } else {
                    2
                }
            }
            Family::D => {
                if j == n {
                    (k >= i && k != n - 1) as i32
                } else if j == n - 1 {
                    (k >= i) as i32
                } else if k < i {
                    0
                } else if k < j || k >= n - 1 {
                    1
                } else {
                    2
                }
            }
            Family::A => unreachable!(),
        })
        .collect()
}

/// The reference convex orders, as coefficient vectors.
pub fn reference_order(f: Family, n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    match f {
        Family::A => {
            for i in 1..=n {
                for j in i..=n {
                    out.push(gamma(n, i, j));
                }
            }
        }
        Family::B => {
            for i in 1..n {
                for j in i..=n {
                    out.push(gamma(n, i, j));
                }
                for j in (i + 1..=n).rev() {
                    out.push(beta(f, n, i, j));
                }
            }
            out.push(gamma(n, n, n));
        }
        Family::C => {
            for i in 1..n {
                for j in i..n {
                    out.push(gamma(n, i, j));
                }
                out.push(beta(f, n, i, i));
                out.push(gamma(n, i, n));
                for j in (i + 1..n).rev() {
                    out.push(beta(f, n, i, j));
                }
            }
            out.push(gamma(n, n, n));
        }
        Family::D => {
            for i in 1..=n - 2 {
                for j in i..n {
                    out.push(gamma(n, i, j));
                }
                out.push(beta(f, n, i, n));
                for j in (i + 1..n).rev() {
                    out.push(beta(f, n, i, j));
                }
            }
            out.push(gamma(n, n - 1, n - 1));
            out.push(beta(f, n, n - 1, n));
        }
    }
    out
}

pub fn system(f: Family, n: usize) -> RootSystem {
    RootSystem::new(f, n).unwrap()
}

pub mod oracle;
