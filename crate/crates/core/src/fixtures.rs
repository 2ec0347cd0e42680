//! Named data and independent closed forms used by the test suites and the CLI.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::braided::DiagonalDatum;
use crate::cocycles::zeta_cocycle;
use crate::groups::FiniteAbelianGroup;
use crate::hopfcore::{Functional, HopfAlgebra, PbwMonomial, TensorVec};
use crate::liftings::LiftingParams;
use crate::linalg::SparseVec;
use crate::scalars::{qfactorial, Scalar};

/// A datum over `Z/m` given by generator and character exponents.
pub fn cyclic_datum(m: u32, g: &[i64], chi: &[i64]) -> DiagonalDatum {
    let grp = FiniteAbelianGroup::cyclic(m);
    let gs = g.iter().map(|&e| grp.element(&[e])).collect();
    let cs = chi.iter().map(|&e| grp.character(&[e])).collect();
    DiagonalDatum::new(grp, gs, cs).expect("fixture data is a valid datum")
}

/// `Z/np`, `g x = q x g` with `q` of order `n`.
pub fn taft(n: u32, p: u32) -> DiagonalDatum {
    cyclic_datum(n * p, &[1], &[p as i64])
}

/// `Z/n p_1 p_2` with `g_1 = g^{p_1}` and `χ(g) = ζ^{p_2}`.
pub fn dual_taft(n: u32, p1: u32, p2: u32) -> DiagonalDatum {
    cyclic_datum(n * p1 * p2, &[p1 as i64], &[p2 as i64])
}

/// `Z/p²`, `g x = q x g`, `g y = q^{-1} y g` with `q` of order `p`.
pub fn bdg(p: u32) -> DiagonalDatum {
    cyclic_datum(p * p, &[1, 1], &[p as i64, -(p as i64)])
}

/// `Z/p`, `g x = q x g`, `g y = q^{-1} y g`.
pub fn two_variable(p: u32) -> DiagonalDatum {
    cyclic_datum(p, &[1, 1], &[1, -1])
}

/// `Z/rs`, `g x = χ^r(g) x g`, `g y = χ^{-r}(g) y g`.
pub fn coprime(r: u32, s: u32) -> DiagonalDatum {
    cyclic_datum(r * s, &[1, 1], &[r as i64, -(r as i64)])
}

/// Rank two over `Z/6` with `N_1 = N_2 = 3` and `χ_1^3 = χ_2^3 = ε`.
pub fn quantum_plane_z6() -> DiagonalDatum {
    cyclic_datum(6, &[1, 1], &[2, -2])
}

/// Rank two over `Z/6` with `N_1 = 2 < N_2 = 3`.
pub fn mixed_orders_z6() -> DiagonalDatum {
    cyclic_datum(6, &[3, 2], &[3, 2])
}

/// Diagonal and linking values as integers.
pub fn params(diag: &[i64], link: Option<i64>) -> LiftingParams {
    let mut p = LiftingParams::zero(diag.len());
    for (i, &v) in diag.iter().enumerate() {
        p.set(i, i, Scalar::from_i64(v));
    }
    if let Some(b) = link {
        p.set(0, 1, Scalar::from_i64(b));
    }
    p
}

/// `σ = ε⊗ε + ζ` with `ζ(x^i g^u, x^j g^v) = a q^{ju}` for `i + j = n`.
pub fn taft_sigma(d: &DiagonalDatum, h: &HopfAlgebra, a: &Scalar) -> Functional {
    Functional::unit(h, 2).add(&zeta_cocycle(d, h, 0, a))
}

/// `m_σ(x^i g^j, x^k g^l) = q^{jk}(x^{i+k} + a x^β(1 − g^{nα})) g^{j+l}` with
/// `i + k = nα + β`, computed directly from the PBW labels.
pub fn taft_closed_form(d: &DiagonalDatum, h: &HopfAlgebra, a: &Scalar) -> Vec<SparseVec> {
    let grp = d.group();
    let n = d.n(0);
    let q = d.q(0, 0);
    let gen = grp.element(&[1]);
    let exp_of = |g: &crate::groups::GroupElement| (0..grp.order() as i64).find(|&e| grp.pow(&gen, e) == *g).expect("cyclic");
    let dim = h.dim();
    let mut table = Vec::with_capacity(dim * dim);
    for s in 0..dim {
        for t in 0..dim {
            let (ls, lt) = (h.label(s), h.label(t));
            let (i, j) = (ls.x[0], exp_of(&ls.g));
            let (k, l) = (lt.x[0], exp_of(&lt.g));
            let c = q.pow(j * k as i64).expect("root of unity");
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            let idx = |x: u32, e: i64| h.index_of(&PbwMonomial { x: vec![x], g: grp.pow(&gen, e) }).expect("in basis");
            if i + k < n {
                acc.insert(idx(i + k, j + l), c.clone());
            } else {
                let beta = i + k - n;
                let ca = &c * a;
                *acc.entry(idx(beta, j + l)).or_insert_with(Scalar::zero) += &ca;
                *acc.entry(idx(beta, j + l + n as i64)).or_insert_with(Scalar::zero) -= &ca;
            }
            table.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
    }
    table
}

/// `σ = 1⊗1 + Σ_{r+s=n} x^r g_1^s ⊗ x^s / (r_q! s_q!)` with `0 < r, s < n`.
pub fn dual_taft_sigma(d: &DiagonalDatum, h: &HopfAlgebra) -> TensorVec {
    let n = d.n(0);
    let q = d.q(0, 0);
    let g1 = d.g(0).clone();
    let grp = d.group();
    let mut out: TensorVec = vec![((h.unit_index(), h.unit_index()), Scalar::one())];
    for r in 1..n {
        let s = n - r;
        let coef = (&qfactorial(r, &q) * &qfactorial(s, &q)).inv().expect("q-factorials below n are nonzero");
        let a = h.index_of(&PbwMonomial { x: vec![r], g: grp.pow(&g1, s as i64) }).expect("in basis");
        let b = h.index_of(&PbwMonomial { x: vec![s], g: grp.identity() }).expect("in basis");
        out.push(((a, b), coef));
    }
    out
}
