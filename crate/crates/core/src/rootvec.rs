//! Root vectors `ρ(e_γ)`, `ρ(f_γ)` on the first fundamental module, built
//! along minimal pairs of the Lalonde–Ram order.

use crate::lyndon::{minimal_pair, ConvexOrder};
use crate::matrix::SparseMat;
use crate::rep::{Gen, Representation};
use crate::rootdata::RootSystem;

#[derive(Clone, Debug)]
pub struct RootVectorMatrices {
    /// Indexed like [`RootSystem::positive_roots`].
    pub e: Vec<SparseMat>,
    pub f: Vec<SparseMat>,
}

/// `e_γ = e_α e_β − (ω'_β, ω_α) e_β e_α`,
/// `f_γ = f_β f_α − (ω'_α, ω_β)^{-1} f_α f_β`.
pub fn build_root_vector_matrices(rs: &RootSystem, rep: &Representation, co: &ConvexOrder) -> RootVectorMatrices {
    let roots = rs.positive_roots();
    let mut by_height: Vec<usize> = (0..roots.len()).collect();
    by_height.sort_by_key(|&k| roots[k].height());
    let mut e: Vec<Option<SparseMat>> = vec![None; roots.len()];
    let mut f: Vec<Option<SparseMat>> = vec![None; roots.len()];
    for &g in &by_height {
        let root = &roots[g];
        if root.is_simple() {
            let i = root.alpha.iter().position(|&c| c == 1).unwrap() + 1;
            e[g] = Some(rep.gen(Gen::E(i)).clone());
            f[g] = Some(rep.gen(Gen::F(i)).clone());
            continue;
        }
        let (a, b) = minimal_pair(rs, co, g).expect("non-simple root");
        let (aa, ab) = (&roots[a].alpha, &roots[b].alpha);
        let k_ba = rs.omega_pairing_alpha(ab, aa);
        let k_ab = rs.omega_pairing_alpha(aa, ab).inv();
        let (ea, eb) = (e[a].as_ref().unwrap(), e[b].as_ref().unwrap());
        let (fa, fb) = (f[a].as_ref().unwrap(), f[b].as_ref().unwrap());
        e[g] = Some(ea.mul(eb).sub(&eb.mul(ea).scale(&k_ba)));
        f[g] = Some(fb.mul(fa).sub(&fa.mul(fb).scale(&k_ab)));
    }
    RootVectorMatrices {
        e: e.into_iter().map(Option::unwrap).collect(),
        f: f.into_iter().map(Option::unwrap).collect(),
    }
}

/// Smallest `k ≥ 1` with `m^k = 0`, if it is at most `limit`.
pub fn nilpotency_order(m: &SparseMat, limit: u32) -> Option<u32> {
    let mut p = m.clone();
    for k in 1..=limit {
        if p.is_zero() {
            return Some(k);
        }
        p = p.mul(m);
    }
    None
}
