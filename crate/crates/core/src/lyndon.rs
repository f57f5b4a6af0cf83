//! Lyndon words, their factorizations, and the convex order on positive
//! roots induced by the Lalonde–Ram bijection.
//!
//! Words compare lexicographically with a proper prefix smaller than the
//! word, which is exactly the `Ord` of Rust slices.

use crate::rootdata::RootSystem;

pub type Word = Vec<u8>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LyndonError {
    #[error("empty word")]
    Empty,
    #[error("word {0:?} is not Lyndon")]
    NotLyndon(Word),
    #[error("word {0:?} has length one and no standard factorization")]
    TooShort(Word),
    #[error("root {0} is simple")]
    SimpleRoot(String),
}

pub fn is_lyndon(w: &[u8]) -> Result<bool, LyndonError> {
    if w.is_empty() {
        return Err(LyndonError::Empty);
    }
    Ok((1..w.len()).all(|a| w < &w[a..]))
}

/// Splits a Lyndon word at its longest proper Lyndon prefix.
pub fn standard_factorization(w: &[u8]) -> Result<(Word, Word), LyndonError> {
    if !is_lyndon(w)? {
        return Err(LyndonError::NotLyndon(w.to_vec()));
    }
    if w.len() < 2 {
        return Err(LyndonError::TooShort(w.to_vec()));
    }
    let cut = (1..w.len())
        .rev()
        .find(|&k| is_lyndon(&w[..k]).unwrap_or(false))
        .expect("a single letter is Lyndon");
    Ok((w[..cut].to_vec(), w[cut..].to_vec()))
}

/// Non-increasing factorization into Lyndon words (Duval's algorithm).
pub fn canonical_factorization(w: &[u8]) -> Result<Vec<Word>, LyndonError> {
    if w.is_empty() {
        return Err(LyndonError::Empty);
    }
    let mut out = Vec::new();
    let n = w.len();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && w[k] <= w[j] {
            k = if w[k] < w[j] { i } else { k + 1 };
            j += 1;
        }
        while i <= k {
            out.push(w[i..i + j - k].to_vec());
            i += j - k;
        }
    }
    Ok(out)
}

/// Positive roots ordered by their standard Lyndon words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexOrder {
    /// Root indices (into `RootSystem::positive_roots`) in increasing order.
    pub order: Vec<usize>,
    /// `words[k]` is the standard Lyndon word of root `k`.
    pub words: Vec<Word>,
}

impl ConvexOrder {
    /// Position of a root in the order.
    pub fn position(&self, root: usize) -> usize {
        self.order.iter().position(|&r| r == root).expect("root in order")
    }

    pub fn root_of_word(&self, w: &[u8]) -> Option<usize> {
        self.words.iter().position(|x| x == w)
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Leclerc's recursion: `ℓ(α) = max ℓ(γ1)ℓ(γ2)` over `α = γ1 + γ2` with
/// `ℓ(γ1) < ℓ(γ2)`.
pub fn lalonde_ram(rs: &RootSystem) -> ConvexOrder {
    let roots = rs.positive_roots();
    let mut by_height: Vec<usize> = (0..roots.len()).collect();
    by_height.sort_by_key(|&k| roots[k].height());
    let mut words: Vec<Option<Word>> = vec![None; roots.len()];
    for &k in &by_height {
        let a = &roots[k].alpha;
        if roots[k].is_simple() {
            let i = a.iter().position(|&c| c == 1).unwrap();
            words[k] = Some(vec![(i + 1) as u8]);
            continue;
        }
        let mut best: Option<Word> = None;
        for g1 in 0..roots.len() {
            let rest: Vec<i32> = a.iter().zip(&roots[g1].alpha).map(|(x, y)| x - y).collect();
            let Some(g2) = rs.root_index(&rest) else { continue };
            let (Some(w1), Some(w2)) = (&words[g1], &words[g2]) else { continue };
            if w1 < w2 {
                let cand: Word = w1.iter().chain(w2).copied().collect();
                if best.as_ref().is_none_or(|b| &cand > b) {
                    best = Some(cand);
                }
            }
        }
        words[k] = best;
    }
    let words: Vec<Word> = words.into_iter().map(|w| w.expect("every root gets a word")).collect();
    let mut order: Vec<usize> = (0..roots.len()).collect();
    order.sort_by(|&x, &y| words[x].cmp(&words[y]));
    ConvexOrder { order, words }
}

/// Exhaustive check of `α < α+β < β` for every pair whose sum is a root.
pub fn is_convex(rs: &RootSystem, order: &[usize]) -> bool {
    let roots = rs.positive_roots();
    let pos = |r: usize| order.iter().position(|&x| x == r);
    for (pa, &a) in order.iter().enumerate() {
        for &b in &order[pa + 1..] {
            let sum: Vec<i32> = roots[a].alpha.iter().zip(&roots[b].alpha).map(|(x, y)| x + y).collect();
            if let Some(g) = rs.root_index(&sum) {
                let (pg, pb) = (pos(g).unwrap(), pos(b).unwrap());
                if !(pa < pg && pg < pb) {
                    return false;
                }
            }
        }
    }
    true
}

/// Minimal pair of a non-simple root from the standard factorization of its
/// word.
pub fn minimal_pair(rs: &RootSystem, co: &ConvexOrder, gamma: usize) -> Result<(usize, usize), LyndonError> {
    let root = &rs.positive_roots()[gamma];
    if root.is_simple() {
        return Err(LyndonError::SimpleRoot(root.name.clone()));
    }
    let (l1, l2) = standard_factorization(&co.words[gamma])?;
    let a = co.root_of_word(&l1).expect("left factor is a standard word");
    let b = co.root_of_word(&l2).expect("right factor is a standard word");
    Ok((a, b))
}

/// Checks the minimal-pair condition directly: `α < β`, `α + β = γ`, and no
/// `α < α' < γ < β' < β` with `α' + β' = γ`.
pub fn is_minimal_pair(rs: &RootSystem, co: &ConvexOrder, gamma: usize, a: usize, b: usize) -> bool {
    let roots = rs.positive_roots();
    let sum: Vec<i32> = roots[a].alpha.iter().zip(&roots[b].alpha).map(|(x, y)| x + y).collect();
    if sum != roots[gamma].alpha {
        return false;
    }
    let (pa, pb, pg) = (co.position(a), co.position(b), co.position(gamma));
    if !(pa < pb) {
        return false;
    }
    for a2 in 0..roots.len() {
        let rest: Vec<i32> = roots[gamma].alpha.iter().zip(&roots[a2].alpha).map(|(x, y)| x - y).collect();
        if let Some(b2) = rs.root_index(&rest) {
            let (q1, q2) = (co.position(a2), co.position(b2));
            if pa < q1 && q1 < pg && pg < q2 && q2 < pb {
                return false;
            }
        }
    }
    true
}

/// Deletes the roots involving `α_1` and shifts the remaining coefficient
/// vectors down by one index; returns them in order.
pub fn telescope(rs: &RootSystem, co: &ConvexOrder) -> Vec<Vec<i32>> {
    co.order
        .iter()
        .map(|&k| &rs.positive_roots()[k].alpha)
        .filter(|a| a[0] == 0)
        .map(|a| a[1..].to_vec())
        .collect()
}

/// The order as a list of coefficient vectors.
pub fn order_alpha(rs: &RootSystem, co: &ConvexOrder) -> Vec<Vec<i32>> {
    co.order.iter().map(|&k| rs.positive_roots()[k].alpha.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::Family;

    /// Brute-force oracle: all splittings of a word into Lyndon factors,
    /// keeping the non-increasing one.
    fn brute_longest_prefix(w: &[u8]) -> usize {
        let mut best = 0;
        for k in 1..w.len() {
            if (1..k).all(|a| w[..k] < w[a..k]) {
                best = k;
            }
        }
        best
    }

    #[test]
    fn lyndon_basics() {
        assert!(is_lyndon(&[1, 2]).unwrap());
        assert!(!is_lyndon(&[2, 1]).unwrap());
        assert!(is_lyndon(&[1, 2, 2]).unwrap());
        assert!(is_lyndon(&[]).is_err());
    }

    #[test]
    fn standard_factorizations() {
        assert_eq!(standard_factorization(&[1, 1, 2]).unwrap(), (vec![1], vec![1, 2]));
        assert_eq!(standard_factorization(&[1, 2]).unwrap(), (vec![1], vec![2]));
        assert_eq!(standard_factorization(&[1, 2, 2]).unwrap(), (vec![1, 2], vec![2]));
        assert!(standard_factorization(&[2, 1]).is_err());
        for w in [vec![1, 1, 2, 1, 2], vec![1, 2, 1, 2, 2], vec![1, 1, 2, 2, 3]] {
            let (a, _) = standard_factorization(&w).unwrap();
            assert_eq!(a.len(), brute_longest_prefix(&w));
        }
    }

    #[test]
    fn canonical_factorizations() {
        assert_eq!(canonical_factorization(&[2, 1]).unwrap(), vec![vec![2], vec![1]]);
        assert_eq!(canonical_factorization(&[1, 2]).unwrap(), vec![vec![1, 2]]);
        assert_eq!(canonical_factorization(&[2, 1, 2, 1, 1]).unwrap(), vec![vec![2], vec![1, 2], vec![1], vec![1]]);
    }

    #[test]
    fn b2_words() {
        let rs = RootSystem::new(Family::B, 2).unwrap();
        let co = lalonde_ram(&rs);
        let words: Vec<Word> = co.order.iter().map(|&k| co.words[k].clone()).collect();
        assert_eq!(words, vec![vec![1], vec![1, 2], vec![1, 2, 2], vec![2]]);
    }

    #[test]
    fn reversed_a2_is_convex_and_shuffled_is_not() {
        let rs = RootSystem::new(Family::A, 2).unwrap();
        let co = lalonde_ram(&rs);
        let mut rev = co.order.clone();
        rev.reverse();
        assert!(is_convex(&rs, &rev));
        let a1 = rs.simple_index(1);
        let a2 = rs.simple_index(2);
        let a12 = rs.root_index(&[1, 1]).unwrap();
        assert!(!is_convex(&rs, &[a1, a2, a12]));
    }
}
