//! Hochschild complexes, multiplicative cocycles and cocycle deformations.
//!
//! Cochains are normalized functionals on an augmented algebra with trivial
//! coefficients. Multiplicative cocycles `σ: A ⊗ A → k` deform the product by
//! `m_σ = σ * m * σ^{-1}`; dual cocycles `σ ∈ A ⊗ A` deform the coproduct by
//! `Δ^σ = σ Δ σ^{-1}`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::braided::DiagonalDatum;
use crate::exec::{Executor, Sequential};
use crate::groups::{Character, FiniteAbelianGroup};
use crate::hopfcore::{
    antipode_law_holds, build_antipode, convolution_inverse, convolve, convolve_homogeneous, verify_bialgebra,
    verify_hopf_axioms, Algebra, AxiomReport, Functional, HopfAlgebra, HopfError, TensorVec, VerifyMode,
};
use crate::liftings::{LiftingError, LiftingParams, Presentation};
use crate::linalg::{rank, solve, Echelon, SparseVec};
use crate::scalars::{qbinom, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CocycleError {
    NotCocycle(String),
    NotInvertible(String),
    Precondition(String),
    NotInvariant(String),
    Trivial,
    Scope(String),
    Budget(String),
    Hopf(HopfError),
    Lifting(LiftingError),
}

impl fmt::Display for CocycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleError::NotCocycle(m) => write!(f, "cocycle condition fails: {m}"),
            CocycleError::NotInvertible(m) => write!(f, "not convolution invertible: {m}"),
            CocycleError::Precondition(m) => write!(f, "precondition violated: {m}"),
            CocycleError::NotInvariant(m) => write!(f, "not G-invariant: {m}"),
            CocycleError::Trivial => write!(f, "trivial deformation: sigma is the unit"),
            CocycleError::Scope(m) => write!(f, "unsupported: {m}"),
            CocycleError::Budget(m) => write!(f, "size budget exceeded: {m}"),
            CocycleError::Hopf(e) => write!(f, "{e}"),
            CocycleError::Lifting(e) => write!(f, "{e}"),
        }
    }
}

impl From<HopfError> for CocycleError {
    fn from(e: HopfError) -> Self {
        CocycleError::Hopf(e)
    }
}

impl From<LiftingError> for CocycleError {
    fn from(e: LiftingError) -> Self {
        CocycleError::Lifting(e)
    }
}

/// Largest number of basis cochains in one level of a cohomology computation.
pub const COHOMOLOGY_BUDGET: usize = 200_000;

/// An algebra with augmentation, unit at basis index 0, and optional
/// character weights giving the diagonal `G`-action on the basis.
#[derive(Clone, Debug)]
pub struct AugmentedAlgebra {
    algebra: Algebra,
    counit: Vec<Scalar>,
    weights: Option<(FiniteAbelianGroup, Vec<Character>)>,
    preimages: Vec<Vec<(usize, usize, Scalar)>>,
}

impl AugmentedAlgebra {
    pub fn new(algebra: Algebra, counit: Vec<Scalar>, weights: Option<(FiniteAbelianGroup, Vec<Character>)>) -> Self {
        let dim = algebra.dim();
        let mut preimages = vec![Vec::new(); dim];
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in algebra.product(i, j) {
                    preimages[*k].push((i, j, c.clone()));
                }
            }
        }
        AugmentedAlgebra { algebra, counit, weights, preimages }
    }

    /// The underlying algebra of a Hopf algebra with its counit.
    pub fn from_hopf(h: &HopfAlgebra) -> Self {
        let counit = (0..h.dim()).map(|i| h.counit_basis(i).clone()).collect();
        AugmentedAlgebra::new(h.algebra().clone(), counit, None)
    }

    /// The Nichols algebra `B(V)` of a quantum linear space, on the PBW monomials
    /// `x^a`, weighted by `χ^a`.
    pub fn nichols(d: &DiagonalDatum) -> Self {
        let h = Presentation::bosonization(d).build_bialgebra();
        let grp = d.group();
        let ng = grp.order();
        let nx = h.dim() / ng;
        let mut table = Vec::with_capacity(nx * nx);
        for a in 0..nx {
            for b in 0..nx {
                let v: SparseVec = h.mul_basis(a * ng, b * ng).iter().map(|(k, c)| (k / ng, c.clone())).collect();
                table.push(v);
            }
        }
        let counit = (0..nx).map(|i| if i == 0 { Scalar::one() } else { Scalar::zero() }).collect();
        let weights = (0..nx)
            .map(|i| {
                let x = &h.label(i * ng).x;
                x.iter().enumerate().fold(grp.trivial_character(), |acc, (k, &e)| {
                    grp.char_mul(&acc, &grp.char_pow(d.chi(k), e as i64))
                })
            })
            .collect();
        AugmentedAlgebra::new(Algebra::new(nx, vec![(0, Scalar::one())], table), counit, Some((grp.clone(), weights)))
    }

    /// `k[x]/(x^n)` over the rationals.
    pub fn truncated_polynomial(n: u32) -> Self {
        let n = n as usize;
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(if i + j < n { vec![(i + j, Scalar::one())] } else { Vec::new() });
            }
        }
        let counit = (0..n).map(|i| if i == 0 { Scalar::one() } else { Scalar::zero() }).collect();
        AugmentedAlgebra::new(Algebra::new(n, vec![(0, Scalar::one())], table), counit, None)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn counit(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn weights(&self) -> Option<&(FiniteAbelianGroup, Vec<Character>)> {
        self.weights.as_ref()
    }

    fn tuple_invariant(&self, t: &[usize]) -> bool {
        match &self.weights {
            None => true,
            Some((grp, w)) => {
                let c = t.iter().fold(grp.trivial_character(), |acc, &i| grp.char_mul(&acc, &w[i]));
                grp.is_trivial_character(&c)
            }
        }
    }

    /// Whether `f` is `G`-invariant, i.e. supported on tuples of trivial total weight.
    pub fn is_invariant(&self, f: &Functional) -> bool {
        f.entries().iter().all(|(t, _)| self.tuple_invariant(t))
    }

    fn normalized_tuples(&self, n: usize, invariant: bool) -> Result<Vec<Vec<usize>>, CocycleError> {
        let count = (self.dim().saturating_sub(1) as u64).saturating_pow(n as u32);
        if count > COHOMOLOGY_BUDGET as u64 {
            return Err(CocycleError::Budget(alloc::format!("{count} normalized {n}-cochains")));
        }
        let mut out: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..n {
            out = out.into_iter().flat_map(|t| (1..self.dim()).map(move |i| [t.clone(), vec![i]].concat())).collect();
        }
        if invariant {
            out.retain(|t| self.tuple_invariant(t));
        }
        Ok(out)
    }
}

/// `∂f(a_1..a_{n+1}) = ε(a_1)f(a_2..) + Σ(−1)^i f(..a_i a_{i+1}..) + (−1)^{n+1} f(..a_n)ε(a_{n+1})`.
pub fn hochschild_differential(f: &Functional, a: &AugmentedAlgebra) -> Functional {
    let n = f.arity();
    let mut out = Functional::zero(n + 1, a.dim());
    let last_sign = if n % 2 == 0 { Scalar::from_i64(-1) } else { Scalar::one() };
    let eps: Vec<(usize, &Scalar)> = (0..a.dim()).filter(|&i| !a.counit[i].is_zero()).map(|i| (i, &a.counit[i])).collect();
    for (t, v) in f.entries() {
        for &(e, c) in &eps {
            let mut s = vec![e];
            s.extend_from_slice(&t);
            out.add_at(&s, &(&v * c));
            let mut s = t.clone();
            s.push(e);
            out.add_at(&s, &(&(&v * c) * &last_sign));
        }
        for p in 0..n {
            let sign = if p % 2 == 0 { Scalar::from_i64(-1) } else { Scalar::one() };
            let sv = &v * &sign;
            for (i, j, c) in &a.preimages[t[p]] {
                let mut s = Vec::with_capacity(n + 1);
                s.extend_from_slice(&t[..p]);
                s.push(*i);
                s.push(*j);
                s.extend_from_slice(&t[p + 1..]);
                out.add_at(&s, &(&sv * c));
            }
        }
    }
    out
}

fn tuple_key(t: &[usize], dim: usize) -> u64 {
    t.iter().fold(0u64, |acc, &i| acc * dim as u64 + i as u64)
}

// Columns of ∂ on the normalized basis cochains of level n, as sparse vectors
// over an ad hoc numbering of output tuples.
fn differential_columns(a: &AugmentedAlgebra, n: usize, invariant: bool) -> Result<(Vec<Vec<usize>>, Vec<SparseVec>, BTreeMap<u64, usize>), CocycleError> {
    let tuples = a.normalized_tuples(n, invariant)?;
    let mut rows: BTreeMap<u64, usize> = BTreeMap::new();
    let mut cols = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let mut f = Functional::zero(n, a.dim());
        f.set(t, Scalar::one());
        let df = hochschild_differential(&f, a);
        let mut col: SparseVec = df
            .entries()
            .into_iter()
            .filter(|(s, _)| !s.contains(&0))
            .map(|(s, c)| {
                let k = tuple_key(&s, a.dim());
                let next = rows.len();
                (*rows.entry(k).or_insert(next), c)
            })
            .collect();
        col.sort_by_key(|(i, _)| *i);
        cols.push(col);
    }
    Ok((tuples, cols, rows))
}

/// Dimensions of the normalized complex, its cocycles and its coboundaries at level `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyDims {
    pub level: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
}

impl CohomologyDims {
    pub fn cohomology(&self) -> usize {
        self.cocycles - self.coboundaries
    }
}

pub fn cohomology_dims(a: &AugmentedAlgebra, n: usize, invariant: bool) -> Result<CohomologyDims, CocycleError> {
    let (tuples, cols, _) = differential_columns(a, n, invariant)?;
    let cocycles = tuples.len() - rank(&cols);
    let coboundaries = if n == 0 {
        0
    } else {
        let (_, prev, _) = differential_columns(a, n - 1, invariant)?;
        rank(&prev)
    };
    Ok(CohomologyDims { level: n, cochains: tuples.len(), cocycles, coboundaries })
}

/// `dim H^n(A, k)` on normalized (optionally `G`-invariant) cochains.
pub fn h_cohomology_dim(a: &AugmentedAlgebra, n: usize, invariant: bool) -> Result<usize, CocycleError> {
    Ok(cohomology_dims(a, n, invariant)?.cohomology())
}

/// A normalized `g` of arity `n − 1` with `∂g = f`, if one exists.
pub fn coboundary_preimage(f: &Functional, a: &AugmentedAlgebra) -> Result<Option<Functional>, CocycleError> {
    let n = f.arity();
    if n == 0 {
        return Ok(if f.is_zero() { Some(f.clone()) } else { None });
    }
    let (tuples, cols, mut rows) = differential_columns(a, n - 1, false)?;
    for (t, _) in f.entries() {
        let k = tuple_key(&t, a.dim());
        let next = rows.len();
        rows.entry(k).or_insert(next);
    }
    // transpose: one equation per output tuple
    let mut eqs: Vec<SparseVec> = vec![Vec::new(); rows.len()];
    for (j, col) in cols.iter().enumerate() {
        for (r, c) in col {
            eqs[*r].push((j, c.clone()));
        }
    }
    let mut rhs = vec![Scalar::zero(); rows.len()];
    for (t, v) in f.entries() {
        rhs[rows[&tuple_key(&t, a.dim())]] = v;
    }
    Ok(solve(&eqs, &rhs, tuples.len()).map(|x| {
        let mut g = Functional::zero(n - 1, a.dim());
        for (t, v) in tuples.iter().zip(x) {
            g.set(t, v);
        }
        g
    }))
}

/// `f_l(x^i ⊗ x^j) = [i + j = l]` for `i, j ≥ 1` on `k[x]/(x^n)`.
pub fn f_l(a: &AugmentedAlgebra, l: usize) -> Functional {
    let mut f = Functional::zero(2, a.dim());
    for i in 1..a.dim() {
        if l > i && l - i < a.dim() && l - i >= 1 {
            f.set(&[i, l - i], Scalar::one());
        }
    }
    f
}

/// Result of a multiplicative cocycle scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleCheck {
    pub holds: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

fn eval2(sigma: &Functional, a: &SparseVec, b: usize) -> Scalar {
    a.iter().filter_map(|(k, c)| sigma.get_ref(&[*k, b]).map(|v| c * v)).sum()
}

fn eval2r(sigma: &Functional, a: usize, b: &SparseVec) -> Scalar {
    b.iter().filter_map(|(k, c)| sigma.get_ref(&[a, *k]).map(|v| c * v)).sum()
}

// Σ σ(x_1, y_1) x_2 y_2
fn left_products(sigma: &Functional, h: &HopfAlgebra) -> Vec<SparseVec> {
    let dim = h.dim();
    let mut out = Vec::with_capacity(dim * dim);
    for x in 0..dim {
        for y in 0..dim {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for ((x1, x2), c) in h.comult_basis(x) {
                for ((y1, y2), e) in h.comult_basis(y) {
                    let Some(s) = sigma.get_ref(&[*x1, *y1]) else { continue };
                    let coef = &(c * e) * s;
                    for (k, m) in h.mul_basis(*x2, *y2) {
                        *acc.entry(*k).or_insert_with(Scalar::zero) += &(&coef * m);
                    }
                }
            }
            out.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
    }
    out
}

/// `σ(x_1, y_1)σ(x_2 y_2, z) = σ(y_1, z_1)σ(x, y_2 z_2)` on all basis triples,
/// with normalization and convolution invertibility.
pub fn is_mult_cocycle(sigma: &Functional, h: &HopfAlgebra) -> CocycleCheck {
    is_mult_cocycle_with(sigma, h, &Sequential)
}

pub fn is_mult_cocycle_with<E: Executor>(sigma: &Functional, h: &HopfAlgebra, exec: &E) -> CocycleCheck {
    let dim = h.dim();
    let fail = |checked, w: String| CocycleCheck { holds: false, checked, witness: Some(w) };
    if sigma.arity() != 2 || sigma.dim() != dim {
        return fail(0, "sigma must be a bilinear form on the algebra".into());
    }
    let u = h.unit_index();
    for x in 0..dim {
        for (l, v) in [("sigma(1, x)", sigma.get(&[u, x])), ("sigma(x, 1)", sigma.get(&[x, u]))] {
            if &v != h.counit_basis(x) {
                return fail(0, alloc::format!("{l} = {v} != eps(x) at x = {}", h.label(x)));
            }
        }
    }
    if let Err(e) = convolution_inverse(sigma, h) {
        return fail(0, alloc::format!("{e}"));
    }
    let lp = left_products(sigma, h);
    let results = exec.map(dim, |x| {
        for y in 0..dim {
            let l = &lp[x * dim + y];
            for z in 0..dim {
                let lhs = eval2(sigma, l, z);
                let rhs = eval2r(sigma, x, &lp[y * dim + z]);
                if lhs != rhs {
                    return Some(alloc::format!(
                        "({}, {}, {}): left {} right {}",
                        h.label(x),
                        h.label(y),
                        h.label(z),
                        lhs,
                        rhs
                    ));
                }
            }
        }
        None
    });
    let checked = dim * dim * dim;
    match results.into_iter().flatten().next() {
        Some(w) => fail(checked, w),
        None => CocycleCheck { holds: true, checked, witness: None },
    }
}

/// `e^f = Σ f^{*i}/i!` for `f` vanishing on degree-zero tuples.
pub fn exp_functional(f: &Functional, h: &HopfAlgebra) -> Result<Functional, CocycleError> {
    for (t, _) in f.entries() {
        if t.iter().all(|&i| h.degree(i) == 0) {
            return Err(CocycleError::Precondition(alloc::format!(
                "f is nonzero on the degree-zero tuple ({})",
                t.iter().map(|&i| alloc::format!("{}", h.label(i))).collect::<Vec<_>>().join(", ")
            )));
        }
    }
    let unit = Functional::unit(h, f.arity());
    let mut term = unit.clone();
    let mut total = unit;
    let max = f.arity() as u32 * h.max_degree() + 1;
    for i in 1..=max as i64 {
        term = convolve(&term, f, h)?.scale(&Scalar::from_ratio(1, i).expect("nonzero"));
        if term.is_zero() {
            return Ok(total);
        }
        total = total.add(&term);
    }
    Err(CocycleError::Precondition("the exponential series does not terminate".into()))
}

/// `ζ_i(x_i^a g, x_i^b h) = scale · χ_i^b(g)` for `a + b = N_i`, zero elsewhere.
pub fn zeta_cocycle(d: &DiagonalDatum, h: &HopfAlgebra, i: usize, scale: &Scalar) -> Functional {
    let mut f = Functional::zero(2, h.dim());
    let n = d.n(i);
    let pure = |x: &[u32]| x.iter().enumerate().all(|(k, &e)| k == i || e == 0);
    for (p, lp) in h.labels().iter().enumerate() {
        let a = lp.x[i];
        if a == 0 || !pure(&lp.x) {
            continue;
        }
        for (q, lq) in h.labels().iter().enumerate() {
            if lq.x[i] + a != n || !pure(&lq.x) {
                continue;
            }
            let b = lq.x[i];
            let v = scale * &d.char_value(d.chi(i), &lp.g).pow(b as i64).expect("root of unity");
            f.set(&[p, q], v);
        }
    }
    f
}

/// `ε ⊗ f` as a functional of arity one more.
pub fn eps_tensor(f: &Functional, h: &HopfAlgebra) -> Functional {
    let mut out = Functional::zero(f.arity() + 1, h.dim());
    for (t, v) in f.entries() {
        for e in 0..h.dim() {
            let c = h.counit_basis(e);
            if !c.is_zero() {
                let mut s = vec![e];
                s.extend_from_slice(&t);
                out.set(&s, &v * c);
            }
        }
    }
    out
}

/// `f ⊗ ε`.
pub fn tensor_eps(f: &Functional, h: &HopfAlgebra) -> Functional {
    let mut out = Functional::zero(f.arity() + 1, h.dim());
    for (t, v) in f.entries() {
        for e in 0..h.dim() {
            let c = h.counit_basis(e);
            if !c.is_zero() {
                let mut s = t.clone();
                s.push(e);
                out.set(&s, &v * c);
            }
        }
    }
    out
}

/// `f(1^{p} ⊗ m ⊗ 1^{n−p−1})` for a functional `f` of arity `n`.
pub fn precompose_mult(f: &Functional, h: &HopfAlgebra, p: usize) -> Functional {
    let n = f.arity();
    let mut pre: Vec<Vec<(usize, usize, Scalar)>> = vec![Vec::new(); h.dim()];
    for i in 0..h.dim() {
        for j in 0..h.dim() {
            for (k, c) in h.mul_basis(i, j) {
                pre[*k].push((i, j, c.clone()));
            }
        }
    }
    let mut out = Functional::zero(n + 1, h.dim());
    for (t, v) in f.entries() {
        for (i, j, c) in &pre[t[p]] {
            let mut s = Vec::with_capacity(n + 1);
            s.extend_from_slice(&t[..p]);
            s.push(*i);
            s.push(*j);
            s.extend_from_slice(&t[p + 1..]);
            out.add_at(&s, &(&v * c));
        }
    }
    out
}

fn multidegree(h: &HopfAlgebra, f: &Functional) -> Option<Vec<u32>> {
    let mut deg: Option<Vec<u32>> = None;
    for (t, _) in f.entries() {
        let mut s = vec![0u32; h.bounds().len()];
        for &i in &t {
            for (k, e) in h.label(i).x.iter().enumerate() {
                s[k] += e;
            }
        }
        match &deg {
            None => deg = Some(s),
            Some(d) if *d == s => {}
            Some(_) => return None,
        }
    }
    deg
}

/// `f * g = g * f`, evaluated on the summed multidegree of homogeneous `f`, `g`.
pub fn commute(f: &Functional, g: &Functional, h: &HopfAlgebra) -> Result<bool, CocycleError> {
    if f.is_zero() || g.is_zero() {
        return Ok(true);
    }
    let (Some(df), Some(dg)) = (multidegree(h, f), multidegree(h, g)) else {
        return Ok(convolve(f, g, h)? == convolve(g, f, h)?);
    };
    let target: Vec<u32> = df.iter().zip(&dg).map(|(a, b)| a + b).collect();
    Ok(convolve_homogeneous(f, g, h, &target)? == convolve_homogeneous(g, f, h, &target)?)
}

/// Certified properties of the `ζ_i` family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaFamilyReport {
    pub hochschild: Vec<bool>,
    pub left_commutative: bool,
    pub right_commutative: bool,
}

/// Checks `∂ζ_i = 0` and that `A_l = {ε⊗ζ_i, ζ_i(1⊗m)}` and `A_r = {ζ_i⊗ε, ζ_i(m⊗1)}`
/// are commutative sets under convolution.
pub fn certify_zeta_family(h: &HopfAlgebra, zetas: &[Functional]) -> Result<ZetaFamilyReport, CocycleError> {
    let aug = AugmentedAlgebra::from_hopf(h);
    let hochschild = zetas.iter().map(|z| hochschild_differential(z, &aug).is_zero()).collect();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for z in zetas {
        left.push(eps_tensor(z, h));
        left.push(precompose_mult(z, h, 1));
        right.push(tensor_eps(z, h));
        right.push(precompose_mult(z, h, 0));
    }
    let all_commute = |set: &[Functional]| -> Result<bool, CocycleError> {
        for a in 0..set.len() {
            for b in (a + 1)..set.len() {
                if !commute(&set[a], &set[b], h)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    };
    Ok(ZetaFamilyReport { hochschild, left_commutative: all_commute(&left)?, right_commutative: all_commute(&right)? })
}

/// A deformed Hopf algebra with its axiom report.
#[derive(Clone, Debug)]
pub struct Deformation {
    pub hopf: HopfAlgebra,
    pub report: AxiomReport,
}

/// `m_σ(a ⊗ b) = σ(a_1, b_1) a_2 b_2 σ^{-1}(a_3, b_3)`, with antipode
/// `s_σ(a) = σ(a_1, s a_2) s(a_3) σ^{-1}(s a_4, a_5)`.
pub fn deform_multiplication(h: &HopfAlgebra, sigma: &Functional, mode: VerifyMode) -> Result<Deformation, CocycleError> {
    deform_multiplication_with(h, sigma, mode, &Sequential)
}

pub fn deform_multiplication_with<E: Executor>(
    h: &HopfAlgebra,
    sigma: &Functional,
    mode: VerifyMode,
    exec: &E,
) -> Result<Deformation, CocycleError> {
    let check = is_mult_cocycle_with(sigma, h, exec);
    if !check.holds {
        return Err(CocycleError::NotCocycle(check.witness.unwrap_or_default()));
    }
    let sinv = convolution_inverse(sigma, h)?;
    let dim = h.dim();
    let d2: Vec<_> = (0..dim).map(|i| h.delta2_basis(i)).collect();
    let rows = exec.map(dim, |a| {
        (0..dim)
            .map(|b| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for ((a1, a2, a3), c) in &d2[a] {
                    for ((b1, b2, b3), e) in &d2[b] {
                        let Some(s) = sigma.get_ref(&[*a1, *b1]) else { continue };
                        let Some(t) = sinv.get_ref(&[*a3, *b3]) else { continue };
                        let coef = &(&(c * e) * s) * t;
                        for (k, m) in h.mul_basis(*a2, *b2) {
                            *acc.entry(*k).or_insert_with(Scalar::zero) += &(&coef * m);
                        }
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect::<SparseVec>()
            })
            .collect::<Vec<_>>()
    });
    let table: Vec<SparseVec> = rows.into_iter().flatten().collect();
    let deformed = h.with_table(table);
    let s = h.antipode().ok_or_else(|| HopfError::NoAntipode("the input has no antipode".into()))?;
    // u(a) = σ(a_1, s a_2), v(a) = σ^{-1}(s a_1, a_2)
    let u: Vec<Scalar> = (0..dim)
        .map(|a| h.comult_basis(a).iter().map(|((a1, a2), c)| c * &eval2r(sigma, *a1, &s[*a2])).sum())
        .collect();
    let v: Vec<Scalar> = (0..dim)
        .map(|a| h.comult_basis(a).iter().map(|((a1, a2), c)| c * &eval2(&sinv, &s[*a1], *a2)).sum())
        .collect();
    let s_sigma: Vec<SparseVec> = (0..dim)
        .map(|a| {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for ((a1, a2, a3), c) in &d2[a] {
                let coef = &(c * &u[*a1]) * &v[*a3];
                if coef.is_zero() {
                    continue;
                }
                for (k, m) in &s[*a2] {
                    *acc.entry(*k).or_insert_with(Scalar::zero) += &(&coef * m);
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        })
        .collect();
    let deformed = if antipode_law_holds(&deformed, &s_sigma) {
        deformed.with_antipode(s_sigma)
    } else {
        build_antipode(&deformed)?
    };
    let report = verify_hopf_axioms(&deformed, mode);
    Ok(Deformation { hopf: deformed, report })
}

/// Element of `A^{⊗3}`.
pub type Tensor3 = BTreeMap<(usize, usize, usize), Scalar>;

fn add3(t: &mut Tensor3, k: (usize, usize, usize), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let e = t.entry(k).or_insert_with(Scalar::zero);
    *e += &c;
    if e.is_zero() {
        t.remove(&k);
    }
}

fn mul3(h: &HopfAlgebra, a: &Tensor3, b: &Tensor3) -> Tensor3 {
    let mut out = Tensor3::new();
    for ((a1, a2, a3), c) in a {
        for ((b1, b2, b3), e) in b {
            let ce = c * e;
            for (k1, m1) in h.mul_basis(*a1, *b1) {
                let c1 = &ce * m1;
                for (k2, m2) in h.mul_basis(*a2, *b2) {
                    let c2 = &c1 * m2;
                    for (k3, m3) in h.mul_basis(*a3, *b3) {
                        add3(&mut out, (*k1, *k2, *k3), &c2 * m3);
                    }
                }
            }
        }
    }
    out
}

fn tensor_one(h: &HopfAlgebra) -> TensorVec {
    let u = h.unit_index();
    vec![((u, u), Scalar::one())]
}

/// Inverse of `σ ∈ A ⊗ A` when `σ − 1 ⊗ 1` is nilpotent.
pub fn tensor_inverse(h: &HopfAlgebra, sigma: &TensorVec) -> Result<TensorVec, CocycleError> {
    let one = tensor_one(h);
    let zeta = crate::hopfcore::tensor_add_scaled(sigma, &one, &Scalar::from_i64(-1));
    let neg = crate::hopfcore::tensor_add_scaled(&Vec::new(), &zeta, &Scalar::from_i64(-1));
    let mut term = one.clone();
    let mut total = one.clone();
    for _ in 0..=(2 * h.max_degree() as usize + 1) {
        term = h.tensor_mul(&term, &neg);
        if term.is_empty() {
            if h.tensor_mul(sigma, &total) != one {
                return Err(CocycleError::NotInvertible("series does not invert sigma".into()));
            }
            return Ok(total);
        }
        total = crate::hopfcore::tensor_add_scaled(&total, &term, &Scalar::one());
    }
    Err(CocycleError::NotInvertible("sigma − 1⊗1 is not nilpotent".into()))
}

/// The two sides of the dual cocycle law in `A^{⊗3}`.
#[derive(Clone, Debug)]
pub struct DualCocycleCheck {
    /// `(σ ⊗ 1)(Δ ⊗ 1)σ = (1 ⊗ σ)(1 ⊗ Δ)σ`.
    pub twist_law: bool,
    /// `(Δ ⊗ 1)(σ)(σ ⊗ 1) = (1 ⊗ Δ)(σ)(1 ⊗ σ)`.
    pub reversed_law: bool,
    pub normalized: bool,
    pub witness: Option<String>,
}

pub fn check_dual_cocycle(h: &HopfAlgebra, sigma: &TensorVec) -> DualCocycleCheck {
    let u = h.unit_index();
    let s_left: Tensor3 = sigma.iter().map(|((a, b), c)| ((*a, *b, u), c.clone())).collect();
    let s_right: Tensor3 = sigma.iter().map(|((a, b), c)| ((u, *a, *b), c.clone())).collect();
    let mut d_left = Tensor3::new();
    let mut d_right = Tensor3::new();
    for ((a, b), c) in sigma {
        for ((a1, a2), e) in h.comult_basis(*a) {
            add3(&mut d_left, (*a1, *a2, *b), c * e);
        }
        for ((b1, b2), e) in h.comult_basis(*b) {
            add3(&mut d_right, (*a, *b1, *b2), c * e);
        }
    }
    let lhs = mul3(h, &s_left, &d_left);
    let rhs = mul3(h, &s_right, &d_right);
    let twist_law = lhs == rhs;
    let reversed_law = mul3(h, &d_left, &s_left) == mul3(h, &d_right, &s_right);
    let mut left_counit: BTreeMap<usize, Scalar> = BTreeMap::new();
    let mut right_counit: BTreeMap<usize, Scalar> = BTreeMap::new();
    for ((a, b), c) in sigma {
        *left_counit.entry(*b).or_insert_with(Scalar::zero) += &(c * h.counit_basis(*a));
        *right_counit.entry(*a).or_insert_with(Scalar::zero) += &(c * h.counit_basis(*b));
    }
    left_counit.retain(|_, v| !v.is_zero());
    right_counit.retain(|_, v| !v.is_zero());
    let unit: BTreeMap<usize, Scalar> = [(u, Scalar::one())].into_iter().collect();
    let normalized = left_counit == unit && right_counit == unit;
    let witness = if twist_law {
        None
    } else {
        lhs.iter()
            .find(|(k, v)| rhs.get(k) != Some(v))
            .or_else(|| rhs.iter().find(|(k, v)| lhs.get(k) != Some(v)))
            .map(|((a, b, c), _)| alloc::format!("coefficient of {} ⊗ {} ⊗ {}", h.label(*a), h.label(*b), h.label(*c)))
    };
    DualCocycleCheck { twist_law, reversed_law, normalized, witness }
}

/// `Δ^σ(a) = σ Δ(a) σ^{-1}` with antipode `s^σ(a) = U s(a) U^{-1}`, `U = σ^{(1)} s(σ^{(2)})`.
pub fn deform_comultiplication(h: &HopfAlgebra, sigma: &TensorVec, mode: VerifyMode) -> Result<Deformation, CocycleError> {
    let check = check_dual_cocycle(h, sigma);
    if !check.normalized {
        return Err(CocycleError::NotCocycle("counit normalization (eps ⊗ 1)sigma = 1 = (1 ⊗ eps)sigma fails".into()));
    }
    if !check.twist_law {
        return Err(CocycleError::NotCocycle(check.witness.unwrap_or_default()));
    }
    let sinv = tensor_inverse(h, sigma)?;
    let comult: Vec<TensorVec> =
        (0..h.dim()).map(|i| h.tensor_mul(&h.tensor_mul(sigma, h.comult_basis(i)), &sinv)).collect();
    let deformed = h.with_comult(comult);
    let s = h.antipode().ok_or_else(|| HopfError::NoAntipode("the input has no antipode".into()))?;
    let mut big_u: SparseVec = Vec::new();
    for ((a, b), c) in sigma {
        big_u = crate::hopfcore::sparse_lin(&big_u, &Scalar::one(), &h.mul(&crate::hopfcore::basis_vec(*a), &s[*b]), c);
    }
    let mut big_u_inv: SparseVec = Vec::new();
    for ((a, b), c) in &sinv {
        big_u_inv =
            crate::hopfcore::sparse_lin(&big_u_inv, &Scalar::one(), &h.mul(&s[*a], &crate::hopfcore::basis_vec(*b)), c);
    }
    let s_sigma: Vec<SparseVec> = (0..h.dim()).map(|i| h.mul(&h.mul(&big_u, &s[i]), &big_u_inv)).collect();
    let deformed = if antipode_law_holds(&deformed, &s_sigma) {
        deformed.with_antipode(s_sigma)
    } else {
        build_antipode(&deformed)?
    };
    let mut report = verify_bialgebra(&deformed, mode);
    let full = verify_hopf_axioms(&deformed, mode);
    if let Some(a) = full.check("antipode") {
        report.checks.push(a.clone());
    }
    Ok(Deformation { hopf: deformed, report })
}

/// Least positive degree component of a graded cocycle.
#[derive(Clone, Debug)]
pub struct InfinitesimalPart {
    pub s: u32,
    pub sigma_s: Functional,
    pub eta_s: Functional,
    /// `η_s = −σ_s` for the convolution inverse.
    pub inverse_matches: bool,
    /// `∂σ_s = 0`.
    pub hochschild: bool,
}

pub fn infinitesimal_part(sigma: &Functional, h: &HopfAlgebra) -> Result<InfinitesimalPart, CocycleError> {
    let unit = Functional::unit(h, sigma.arity());
    let diff = sigma.sub(&unit);
    if diff.is_zero() {
        return Err(CocycleError::Trivial);
    }
    if !diff.homogeneous_part(h, 0).is_zero() {
        return Err(CocycleError::Precondition("sigma_0 differs from eps ⊗ eps".into()));
    }
    let max = sigma.arity() as u32 * h.max_degree();
    let (s, sigma_s) = (1..=max)
        .map(|s| (s, diff.homogeneous_part(h, s)))
        .find(|(_, p)| !p.is_zero())
        .ok_or(CocycleError::Trivial)?;
    let inv = convolution_inverse(sigma, h)?;
    let eta_s = inv.homogeneous_part(h, s);
    let inverse_matches = eta_s == sigma_s.scale(&Scalar::from_i64(-1));
    let hochschild = hochschild_differential(&sigma_s, &AugmentedAlgebra::from_hopf(h)).is_zero();
    Ok(InfinitesimalPart { s, sigma_s, eta_s, inverse_matches, hochschild })
}

/// `Σ_{i+j=l} (ε⊗σ_i) * σ_j(1⊗m) = Σ_{i+j=l} (σ_i⊗ε) * σ_j(m⊗1)` for the degree components of σ.
pub fn graded_cocycle_identity(sigma: &Functional, h: &HopfAlgebra, l: u32) -> Result<bool, CocycleError> {
    let parts: Vec<Functional> = (0..=l).map(|i| sigma.homogeneous_part(h, i)).collect();
    let mut lhs = Functional::zero(3, h.dim());
    let mut rhs = Functional::zero(3, h.dim());
    for i in 0..=l as usize {
        let j = l as usize - i;
        if parts[i].is_zero() || parts[j].is_zero() {
            continue;
        }
        lhs = lhs.add(&convolve(&eps_tensor(&parts[i], h), &precompose_mult(&parts[j], h, 1), h)?);
        rhs = rhs.add(&convolve(&tensor_eps(&parts[i], h), &precompose_mult(&parts[j], h, 0), h)?);
    }
    Ok(lhs == rhs)
}

/// `μ = (ζ ⊗ m − m ⊗ ζ)Δ_{A⊗A}` with the certified Hochschild identity.
#[derive(Clone, Debug)]
pub struct InfinitesimalDeformation {
    /// `μ(e_a, e_b)` at index `a * dim + b`.
    pub table: Vec<SparseVec>,
    pub identity_holds: bool,
    pub checked: usize,
    pub witness: Option<String>,
}

pub fn infinitesimal_deformation(zeta: &Functional, h: &HopfAlgebra) -> Result<InfinitesimalDeformation, CocycleError> {
    if !hochschild_differential(zeta, &AugmentedAlgebra::from_hopf(h)).is_zero() {
        return Err(CocycleError::NotCocycle("the differential of zeta is nonzero".into()));
    }
    let dim = h.dim();
    let mut table: Vec<SparseVec> = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for ((a1, a2), c) in h.comult_basis(a) {
                for ((b1, b2), e) in h.comult_basis(b) {
                    let ce = c * e;
                    if let Some(z) = zeta.get_ref(&[*a1, *b1]) {
                        for (k, m) in h.mul_basis(*a2, *b2) {
                            *acc.entry(*k).or_insert_with(Scalar::zero) += &(&(&ce * z) * m);
                        }
                    }
                    if let Some(z) = zeta.get_ref(&[*a2, *b2]) {
                        for (k, m) in h.mul_basis(*a1, *b1) {
                            *acc.entry(*k).or_insert_with(Scalar::zero) -= &(&(&ce * z) * m);
                        }
                    }
                }
            }
            table.push(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
        }
    }
    let apply = |x: &SparseVec, b: usize| -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (k, c) in x {
            for (j, m) in &table[k * dim + b] {
                *acc.entry(*j).or_insert_with(Scalar::zero) += &(c * m);
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    };
    let apply_r = |a: usize, y: &SparseVec| -> SparseVec {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (k, c) in y {
            for (j, m) in &table[a * dim + k] {
                *acc.entry(*j).or_insert_with(Scalar::zero) += &(c * m);
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    };
    let mut witness = None;
    'outer: for a in 0..dim {
        for b in 0..dim {
            for c in 0..dim {
                let cv = crate::hopfcore::basis_vec(c);
                let av = crate::hopfcore::basis_vec(a);
                let lhs = crate::hopfcore::sparse_add(&h.mul(&table[a * dim + b], &cv), &apply(h.mul_basis(a, b), c));
                let rhs = crate::hopfcore::sparse_add(&h.mul(&av, &table[b * dim + c]), &apply_r(a, h.mul_basis(b, c)));
                if lhs != rhs {
                    witness = Some(alloc::format!("({}, {}, {})", h.label(a), h.label(b), h.label(c)));
                    break 'outer;
                }
            }
        }
    }
    Ok(InfinitesimalDeformation { table, identity_holds: witness.is_none(), checked: dim * dim * dim, witness })
}

/// The retraction `u: R → K` used by [`connecting_delta`].
pub const RETRACTION: &str = "PBW membership: x^a maps to itself if every a_i is a multiple of N_i, else to 0";

/// `δ(f)` on `B ⊗ B` with its certificates.
#[derive(Clone, Debug)]
pub struct ConnectingResult {
    pub nichols: AugmentedAlgebra,
    pub cocycle: Functional,
    /// `∂u*f` vanishes on `K⁺R ⊗ R + R ⊗ RK⁺` over the checked box.
    pub kills_k_plus: bool,
    pub is_cocycle: bool,
    pub class_zero: bool,
    pub retraction: &'static str,
}

/// The connecting map `δ: H¹_G(K, k) → H²_G(B, k)` for quantum linear spaces of rank
/// at most two without linking; `f` is the derivation with `f(z_i) = f.diag[i]`.
///
/// With `f(z_12) = 0` the computation descends to the quantum plane `R/(z_12)`.
pub fn connecting_delta(d: &DiagonalDatum, f: &LiftingParams) -> Result<ConnectingResult, CocycleError> {
    let theta = d.rank();
    if theta > 2 {
        return Err(CocycleError::Scope(alloc::format!("rank {theta}; the connecting map is implemented for rank at most 2")));
    }
    if f.diag.len() != theta {
        return Err(CocycleError::Precondition(alloc::format!("{} values for rank {theta}", f.diag.len())));
    }
    if f.link.values().any(|v| !v.is_zero()) {
        return Err(CocycleError::Scope("linking values are not supported by the connecting map".into()));
    }
    let grp = d.group();
    for i in 0..theta {
        if !f.diag[i].is_zero() && !grp.is_trivial_character(&grp.char_pow(d.chi(i), d.n(i) as i64)) {
            return Err(CocycleError::NotInvariant(alloc::format!("f(z{}) != 0 but chi_{}^N != eps", i + 1, i + 1)));
        }
    }
    let ns: Vec<u32> = d.ns().to_vec();
    // monomials of the quantum plane with exponents below 2 N_i
    let mut boxm: Vec<Vec<u32>> = vec![Vec::new()];
    for &n in &ns {
        boxm = boxm.into_iter().flat_map(|m| (0..2 * n).map(move |e| [m.clone(), vec![e]].concat())).collect();
    }
    let coef = |a: &[u32], b: &[u32]| -> Scalar {
        let mut e: i64 = 0;
        for k in 0..theta {
            for j in 0..k {
                e += d.q_exp(k, j) as i64 * a[k] as i64 * b[j] as i64;
            }
        }
        d.root(e).clone()
    };
    // f∘u on a monomial
    let fu = |g: &[u32]| -> Scalar {
        if g.iter().zip(&ns).any(|(e, n)| e % n != 0) {
            return Scalar::zero();
        }
        let c: Vec<u32> = g.iter().zip(&ns).map(|(e, n)| e / n).collect();
        match c.iter().sum::<u32>() {
            1 => f.diag[c.iter().position(|&x| x == 1).expect("one entry")].clone(),
            _ => Scalar::zero(),
        }
    };
    let eps = |a: &[u32]| a.iter().all(|&e| e == 0);
    let du = |a: &[u32], b: &[u32]| -> Scalar {
        let ab: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        let mut v = -&(&coef(a, b) * &fu(&ab));
        if eps(a) {
            v += &fu(b);
        }
        if eps(b) {
            v += &fu(a);
        }
        v
    };
    let in_b = |a: &[u32]| a.iter().zip(&ns).all(|(e, n)| e < n);
    let mut kills = true;
    for a in &boxm {
        for b in &boxm {
            if (!in_b(a) || !in_b(b)) && !du(a, b).is_zero() {
                kills = false;
            }
        }
    }
    let nichols = AugmentedAlgebra::nichols(d);
    let bmon: Vec<&Vec<u32>> = boxm.iter().filter(|a| in_b(a)).collect();
    let index = |a: &[u32]| a.iter().zip(&ns).fold(0usize, |acc, (&e, &n)| acc * n as usize + e as usize);
    let mut cocycle = Functional::zero(2, nichols.dim());
    for a in &bmon {
        for b in &bmon {
            cocycle.set(&[index(a), index(b)], du(a, b));
        }
    }
    let is_cocycle = hochschild_differential(&cocycle, &nichols).is_zero();
    let class_zero = coboundary_preimage(&cocycle, &nichols)?.is_some();
    Ok(ConnectingResult { nichols, cocycle, kills_k_plus: kills, is_cocycle, class_zero, retraction: RETRACTION })
}

fn group_tuples(grp: &FiniteAbelianGroup, n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|t| (0..grp.order()).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

/// `Ψ(f)(b_1 g_1, ..., b_n g_n) = f(b_1, g_1(b_2), ..., g_1⋯g_{n−1}(b_n))` from
/// `G`-invariant cochains on `B(V)` to cochains on `B(V) # kG`.
pub fn psi_iso(f: &Functional, d: &DiagonalDatum, h: &HopfAlgebra) -> Result<Functional, CocycleError> {
    let b = AugmentedAlgebra::nichols(d);
    if f.dim() != b.dim() {
        return Err(CocycleError::Precondition(alloc::format!("cochain on dimension {} for B of dimension {}", f.dim(), b.dim())));
    }
    if !b.is_invariant(f) {
        return Err(CocycleError::NotInvariant("cochain is not supported on weight-trivial tuples".into()));
    }
    let grp = d.group();
    let ng = grp.order();
    let elems = grp.elements();
    let (_, weights) = b.weights().expect("nichols algebras carry weights");
    let n = f.arity();
    let mut out = Functional::zero(n, h.dim());
    let gts = group_tuples(grp, n);
    for (t, v) in f.entries() {
        for gt in &gts {
            let mut acc = grp.identity();
            let mut c = v.clone();
            for k in 0..n {
                if k > 0 {
                    c *= &d.char_value(&weights[t[k]], &acc);
                }
                acc = grp.mul(&acc, &elems[gt[k]]);
            }
            let idx: Vec<usize> = t.iter().zip(gt).map(|(&x, &g)| x * ng + g).collect();
            out.set(&idx, c);
        }
    }
    Ok(out)
}

/// `Ψ^{-1}(f')(b_1, ..., b_n) = f'(b_1 1, ..., b_n 1)`.
pub fn psi_inverse(f: &Functional, d: &DiagonalDatum) -> Functional {
    let ng = d.group().order();
    let nb = f.dim() / ng;
    let mut out = Functional::zero(f.arity(), nb);
    for (t, v) in f.entries() {
        if t.iter().all(|&i| i % ng == 0) {
            let s: Vec<usize> = t.iter().map(|&i| i / ng).collect();
            out.set(&s, v);
        }
    }
    out
}

/// `Σ_{s+v=β} (i choose s)_q (k choose v)_q q^{s(k−v)}`.
pub fn kac_sum(i: i64, k: i64, beta: i64, q: &Scalar) -> Scalar {
    (0..=beta)
        .map(|s| {
            let v = beta - s;
            &(&qbinom(i, s, q) * &qbinom(k, v, q)) * &q.pow(s * (k - v)).expect("nonzero q")
        })
        .sum()
}

/// `Σ_{u+v=m} (s choose u)_q (p choose v)_q q^{u(p−v)}`.
pub fn evaluation_sum(m: i64, s: i64, p: i64, q: &Scalar) -> Scalar {
    (0..=m)
        .map(|u| {
            let v = m - u;
            &(&qbinom(s, u, q) * &qbinom(p, v, q)) * &q.pow(u * (p - v)).expect("nonzero q")
        })
        .sum()
}

/// Künneth comparison for a quantum linear space: `dim H^j(B(V))` directly and as
/// `Σ_{j_1+…+j_t=j} Π dim H^{j_i}(B_i)` over the rank-one components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KunnethRow {
    pub level: usize,
    pub direct: usize,
    pub product: usize,
}

pub fn kunneth_check(d: &DiagonalDatum, max_level: usize) -> Result<Vec<KunnethRow>, CocycleError> {
    let b = AugmentedAlgebra::nichols(d);
    let comps: Vec<Vec<usize>> = (0..d.rank())
        .map(|i| {
            let a = AugmentedAlgebra::truncated_polynomial(d.n(i));
            (0..=max_level).map(|j| h_cohomology_dim(&a, j, false)).collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let mut rows = Vec::new();
    for j in 0..=max_level {
        // convolution of the component dimension sequences
        let mut acc = vec![0usize; max_level + 1];
        acc[0] = 1;
        for c in &comps {
            let mut next = vec![0usize; max_level + 1];
            for (a, x) in acc.iter().enumerate() {
                for (bb, y) in c.iter().enumerate() {
                    if a + bb <= max_level {
                        next[a + bb] += x * y;
                    }
                }
            }
            acc = next;
        }
        rows.push(KunnethRow { level: j, direct: h_cohomology_dim(&b, j, false)?, product: acc[j] });
    }
    Ok(rows)
}

/// Echelon-based membership of `f` in the span of `basis` (same arity).
pub fn in_span(f: &Functional, basis: &[Functional]) -> bool {
    let key = |g: &Functional| -> SparseVec {
        let mut v: SparseVec = g.entries().into_iter().map(|(t, c)| (tuple_key(&t, g.dim()) as usize, c)).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    };
    let mut e = Echelon::new();
    for b in basis {
        e.insert(&key(b));
    }
    e.contains(&key(f))
}
