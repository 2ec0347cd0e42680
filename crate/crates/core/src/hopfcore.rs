//! Finite-dimensional Hopf algebras given by structure constants on a PBW basis.
//!
//! Elements are sparse vectors over basis indices. Elements of `H ⊗ H` are
//! sparse over index pairs. The basis is `x_1^{a_1} ... x_θ^{a_θ} g` ordered by
//! the mixed-radix index of `a` (radices `N_i`), then by group index.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exec::{Executor, Sequential};
use crate::groups::{FiniteAbelianGroup, GroupElement};
use crate::linalg::{nullspace, solve, Echelon, SparseVec};
use crate::scalars::{CyclotomicField, Scalar};

/// Errors raised by Hopf algebra operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfError {
    Arity(String),
    NoAntipode(String),
    NotUnipotent(String),
    Budget(String),
    Shape(String),
}

impl fmt::Display for HopfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HopfError::Arity(m) => write!(f, "arity mismatch: {m}"),
            HopfError::NoAntipode(m) => write!(f, "no antipode: {m}"),
            HopfError::NotUnipotent(m) => write!(f, "not filtered-unipotent: {m}"),
            HopfError::Budget(m) => write!(f, "size budget exceeded: {m}"),
            HopfError::Shape(m) => write!(f, "shape error: {m}"),
        }
    }
}

/// Basis label `x_1^{a_1} ... x_θ^{a_θ} g`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    pub x: Vec<u32>,
    pub g: GroupElement,
}

impl PbwMonomial {
    /// Total x-degree.
    pub fn degree(&self) -> u32 {
        self.x.iter().sum()
    }
}

impl fmt::Display for PbwMonomial {
    /// Renders e.g. `x1^2 x2 g^3`; the unit renders as `1`. Groups with several
    /// cyclic factors use `g1`, `g2`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (i, &a) in self.x.iter().enumerate() {
            match a {
                0 => {}
                1 => parts.push(alloc::format!("x{}", i + 1)),
                _ => parts.push(alloc::format!("x{}^{}", i + 1, a)),
            }
        }
        let single = self.g.0.len() == 1;
        for (k, &e) in self.g.0.iter().enumerate() {
            let name = if single { String::from("g") } else { alloc::format!("g{}", k + 1) };
            match e {
                0 => {}
                1 => parts.push(name),
                _ => parts.push(alloc::format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Sparse element of `H ⊗ H`.
pub type TensorVec = Vec<((usize, usize), Scalar)>;

/// Dense scratch accumulator producing sorted sparse vectors.
pub(crate) struct Acc {
    vals: Vec<Scalar>,
    touched: Vec<usize>,
    seen: Vec<bool>,
}

impl Acc {
    pub(crate) fn new(n: usize) -> Self {
        Acc { vals: vec![Scalar::zero(); n], touched: Vec::new(), seen: vec![false; n] }
    }

    pub(crate) fn add(&mut self, i: usize, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        if !self.seen[i] {
            self.seen[i] = true;
            self.touched.push(i);
        }
        self.vals[i] += s;
    }

    pub(crate) fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &i in &self.touched {
            self.seen[i] = false;
            let v = core::mem::take(&mut self.vals[i]);
            if !v.is_zero() {
                out.push((i, v));
            }
        }
        self.touched.clear();
        out
    }
}

/// Adds two sparse vectors.
pub fn sparse_add(a: &SparseVec, b: &SparseVec) -> SparseVec {
    sparse_lin(a, &Scalar::one(), b, &Scalar::one())
}

/// `α a + β b`.
pub fn sparse_lin(a: &SparseVec, alpha: &Scalar, b: &SparseVec, beta: &Scalar) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        let (k, v) = if take_a {
            i += 1;
            (a[i - 1].0, alpha * &a[i - 1].1)
        } else if take_b {
            j += 1;
            (b[j - 1].0, beta * &b[j - 1].1)
        } else {
            i += 1;
            j += 1;
            (a[i - 1].0, &(alpha * &a[i - 1].1) + &(beta * &b[j - 1].1))
        };
        if !v.is_zero() {
            out.push((k, v));
        }
    }
    out
}

pub fn sparse_scale(a: &SparseVec, s: &Scalar) -> SparseVec {
    if s.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(k, v)| (*k, v * s)).collect()
}

/// Basis vector `e_i`.
pub fn basis_vec(i: usize) -> SparseVec {
    vec![(i, Scalar::one())]
}

fn tensor_lin(a: &TensorVec, b: &TensorVec, beta: &Scalar) -> TensorVec {
    let mut m: BTreeMap<(usize, usize), Scalar> = a.iter().cloned().collect();
    for (k, v) in b {
        let e = m.entry(*k).or_insert_with(Scalar::zero);
        *e += &(v * beta);
    }
    m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `a + β b` in `H ⊗ H`.
pub fn tensor_add_scaled(a: &TensorVec, b: &TensorVec, beta: &Scalar) -> TensorVec {
    tensor_lin(a, b, beta)
}

/// A finite-dimensional associative algebra given by a multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    unit: SparseVec,
    table: Vec<SparseVec>,
}

impl Algebra {
    /// `table[i * dim + j] = e_i e_j`.
    pub fn new(dim: usize, unit: SparseVec, table: Vec<SparseVec>) -> Self {
        assert_eq!(table.len(), dim * dim, "multiplication table must be dim × dim");
        Algebra { dim, unit, table }
    }

    /// Full matrix algebra `M_n(Q)` with basis `E_ij` at index `i n + j`.
    pub fn matrix_algebra(n: usize) -> Self {
        let dim = n * n;
        let mut table = vec![Vec::new(); dim * dim];
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    table[(i * n + j) * dim + (j * n + l)] = basis_vec(i * n + l);
                }
            }
        }
        let unit = (0..n).map(|i| (i * n + i, Scalar::one())).collect();
        Algebra::new(dim, unit, table)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Acc::new(self.dim);
        self.mul_into(&mut acc, a, b, &Scalar::one());
        acc.take()
    }

    pub(crate) fn mul_into(&self, acc: &mut Acc, a: &SparseVec, b: &SparseVec, scale: &Scalar) {
        for (i, x) in a {
            let xs = x * scale;
            for (j, y) in b {
                let c = &xs * y;
                for (k, z) in self.product(*i, *j) {
                    acc.add(*k, &(&c * z));
                }
            }
        }
    }
}

/// A Hopf algebra on a PBW-labelled basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra {
    field: CyclotomicField,
    group: FiniteAbelianGroup,
    bounds: Vec<u32>,
    labels: Vec<PbwMonomial>,
    algebra: Algebra,
    comult: Vec<TensorVec>,
    counit: Vec<Scalar>,
    antipode: Option<Vec<SparseVec>>,
}

/// Enumerates PBW labels in index order.
pub fn pbw_labels(group: &FiniteAbelianGroup, bounds: &[u32]) -> Vec<PbwMonomial> {
    let mut xs: Vec<Vec<u32>> = vec![Vec::new()];
    for &n in bounds {
        let mut next = Vec::new();
        for v in &xs {
            for a in 0..n {
                let mut w = v.clone();
                w.push(a);
                next.push(w);
            }
        }
        xs = next;
    }
    let elems = group.elements();
    let mut out = Vec::with_capacity(xs.len() * elems.len());
    for x in xs {
        for g in &elems {
            out.push(PbwMonomial { x: x.clone(), g: g.clone() });
        }
    }
    out
}

impl HopfAlgebra {
    /// Assembles a Hopf algebra from structure constants. The antipode is optional.
    pub fn from_parts(
        field: CyclotomicField,
        group: FiniteAbelianGroup,
        bounds: Vec<u32>,
        table: Vec<SparseVec>,
        comult: Vec<TensorVec>,
        counit: Vec<Scalar>,
    ) -> Result<Self, HopfError> {
        let labels = pbw_labels(&group, &bounds);
        let dim = labels.len();
        if table.len() != dim * dim || comult.len() != dim || counit.len() != dim {
            return Err(HopfError::Shape(alloc::format!(
                "dimension {dim}: table {}, comult {}, counit {}",
                table.len(),
                comult.len(),
                counit.len()
            )));
        }
        let algebra = Algebra::new(dim, basis_vec(0), table);
        Ok(HopfAlgebra { field, group, bounds, labels, algebra, comult, counit, antipode: None })
    }

    /// The group algebra `kG`.
    pub fn group_algebra(field: CyclotomicField, group: FiniteAbelianGroup) -> Self {
        let n = group.order();
        let elems = group.elements();
        let mut table = Vec::with_capacity(n * n);
        for a in &elems {
            for b in &elems {
                table.push(basis_vec(group.index_of(&group.mul(a, b))));
            }
        }
        let comult = (0..n).map(|i| vec![((i, i), Scalar::one())]).collect();
        let counit = vec![Scalar::one(); n];
        let antipode = elems.iter().map(|a| basis_vec(group.index_of(&group.inv(a)))).collect();
        let mut h = HopfAlgebra::from_parts(field, group, Vec::new(), table, comult, counit).expect("consistent");
        h.antipode = Some(antipode);
        h
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Truncation orders of the x-variables.
    pub fn bounds(&self) -> &[u32] {
        &self.bounds
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[PbwMonomial] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &PbwMonomial {
        &self.labels[i]
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn unit_index(&self) -> usize {
        0
    }

    pub fn index_of(&self, m: &PbwMonomial) -> Option<usize> {
        if m.x.len() != self.bounds.len() || !self.group.contains(&m.g) {
            return None;
        }
        let mut idx = 0usize;
        for (&a, &n) in m.x.iter().zip(&self.bounds) {
            if a >= n {
                return None;
            }
            idx = idx * n as usize + a as usize;
        }
        Some(idx * self.group.order() + self.group.index_of(&m.g))
    }

    /// Index of the group element `g` (x-degree zero).
    pub fn group_index(&self, g: &GroupElement) -> usize {
        self.group.index_of(g)
    }

    /// Index of the monomial `x_i` (no group part).
    pub fn generator_index(&self, i: usize) -> usize {
        let mut x = vec![0; self.bounds.len()];
        x[i] = 1;
        self.index_of(&PbwMonomial { x, g: self.group.identity() }).expect("bounds exceed 1")
    }

    pub fn degree(&self, i: usize) -> u32 {
        self.labels[i].degree()
    }

    pub fn max_degree(&self) -> u32 {
        self.bounds.iter().map(|n| n - 1).sum()
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        self.algebra.product(i, j)
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.algebra.mul(a, b)
    }

    pub fn comult_basis(&self, i: usize) -> &TensorVec {
        &self.comult[i]
    }

    pub fn comult(&self, a: &SparseVec) -> TensorVec {
        let mut m: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
        for (i, c) in a {
            for (k, v) in &self.comult[*i] {
                let e = m.entry(*k).or_insert_with(Scalar::zero);
                *e += &(c * v);
            }
        }
        m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    pub fn counit_basis(&self, i: usize) -> &Scalar {
        &self.counit[i]
    }

    pub fn counit(&self, a: &SparseVec) -> Scalar {
        a.iter().map(|(i, c)| c * &self.counit[*i]).sum()
    }

    pub fn antipode(&self) -> Option<&[SparseVec]> {
        self.antipode.as_deref()
    }

    pub fn apply_antipode(&self, a: &SparseVec) -> Option<SparseVec> {
        let s = self.antipode.as_ref()?;
        let mut acc = Acc::new(self.dim());
        for (i, c) in a {
            for (k, v) in &s[*i] {
                acc.add(*k, &(c * v));
            }
        }
        Some(acc.take())
    }

    /// Product in `H ⊗ H`.
    pub fn tensor_mul(&self, a: &TensorVec, b: &TensorVec) -> TensorVec {
        let d = self.dim();
        let mut acc = Acc::new(d * d);
        for ((i, j), x) in a {
            for ((k, l), y) in b {
                let c = x * y;
                let left = self.mul_basis(*i, *k);
                let right = self.mul_basis(*j, *l);
                for (p, u) in left {
                    let cu = &c * u;
                    for (q, v) in right {
                        acc.add(p * d + q, &(&cu * v));
                    }
                }
            }
        }
        acc.take().into_iter().map(|(k, v)| ((k / d, k % d), v)).collect()
    }

    /// `(Δ ⊗ 1)Δ(e_i)` as triples.
    pub fn delta2_basis(&self, i: usize) -> Vec<((usize, usize, usize), Scalar)> {
        let mut m: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for ((a, b), c) in &self.comult[i] {
            for ((a1, a2), c1) in &self.comult[*a] {
                let e = m.entry((*a1, *a2, *b)).or_insert_with(Scalar::zero);
                *e += &(c * c1);
            }
        }
        m.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Replaces the multiplication table, keeping everything else.
    pub fn with_table(&self, table: Vec<SparseVec>) -> Self {
        let mut h = self.clone();
        h.algebra = Algebra::new(self.dim(), basis_vec(0), table);
        h.antipode = None;
        h
    }

    /// Replaces the comultiplication, keeping everything else.
    pub fn with_comult(&self, comult: Vec<TensorVec>) -> Self {
        let mut h = self.clone();
        h.comult = comult;
        h.antipode = None;
        h
    }

    /// Installs an antipode without validation.
    pub fn with_antipode(&self, antipode: Vec<SparseVec>) -> Self {
        let mut h = self.clone();
        h.antipode = Some(antipode);
        h
    }

    /// Renders a sparse element with PBW monomials, e.g. `(2) x1 g + (-1) x2`.
    pub fn render(&self, a: &SparseVec) -> String {
        if a.is_empty() {
            return String::from("0");
        }
        let parts: Vec<String> = a.iter().map(|(i, c)| alloc::format!("({c}) {}", self.labels[*i])).collect();
        parts.join(" + ")
    }

    pub fn render_tensor(&self, a: &TensorVec) -> String {
        if a.is_empty() {
            return String::from("0");
        }
        let parts: Vec<String> =
            a.iter().map(|((i, j), c)| alloc::format!("({c}) {} ⊗ {}", self.labels[*i], self.labels[*j])).collect();
        parts.join(" + ")
    }
}

/// How exhaustively [`verify_hopf_axioms`] enumerates basis tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyMode {
    Full,
    Sampled { seed: u64, count: usize },
}

/// Full enumeration threshold.
pub const FULL_VERIFY_MAX_DIM: usize = 128;

impl VerifyMode {
    /// Full up to dimension 128, otherwise 10000 seeded samples.
    pub fn default_for(dim: usize, seed: u64) -> Self {
        if dim <= FULL_VERIFY_MAX_DIM {
            VerifyMode::Full
        } else {
            VerifyMode::Sampled { seed, count: 10_000 }
        }
    }
}

impl fmt::Display for VerifyMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyMode::Full => f.write_str("full"),
            VerifyMode::Sampled { seed, count } => write!(f, "sampled(seed={seed}, count={count})"),
        }
    }
}

/// A failing basis tuple and the nonzero difference of the two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub detail: String,
}

/// Outcome of one identity over the evaluated tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub evaluated: usize,
    pub failures: usize,
    pub witnesses: Vec<Witness>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Results of the axiom suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub mode: VerifyMode,
    pub dim: usize,
    pub checks: Vec<CheckOutcome>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

const MAX_WITNESSES: usize = 5;

fn merge(name: &'static str, parts: Vec<(usize, usize, Vec<Witness>)>) -> CheckOutcome {
    let mut out = CheckOutcome { name, evaluated: 0, failures: 0, witnesses: Vec::new() };
    for (e, f, w) in parts {
        out.evaluated += e;
        out.failures += f;
        for x in w {
            if out.witnesses.len() < MAX_WITNESSES {
                out.witnesses.push(x);
            }
        }
    }
    out
}

fn sample_tuples(seed: u64, count: usize, dim: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..arity).map(|_| (rng.next_u64() % dim as u64) as usize).collect()).collect()
}

fn tuple_tasks(mode: VerifyMode, dim: usize, arity: usize, salt: u64) -> Vec<Vec<Vec<usize>>> {
    match mode {
        VerifyMode::Full => (0..dim)
            .map(|i| {
                let mut out = vec![vec![i]];
                for _ in 1..arity {
                    out = out.into_iter().flat_map(|t| (0..dim).map(move |j| [t.clone(), vec![j]].concat())).collect();
                }
                out
            })
            .collect(),
        VerifyMode::Sampled { seed, count } => {
            let all = sample_tuples(seed ^ salt, count, dim, arity);
            all.chunks(256).map(|c| c.to_vec()).collect()
        }
    }
}

fn diff_sparse(a: &SparseVec, b: &SparseVec) -> SparseVec {
    sparse_lin(a, &Scalar::one(), b, &Scalar::from_i64(-1))
}

/// Runs the Hopf axiom suite sequentially.
pub fn verify_hopf_axioms(h: &HopfAlgebra, mode: VerifyMode) -> AxiomReport {
    verify_with(h, mode, true, &Sequential)
}

/// Runs the bialgebra part of the suite (no antipode law).
pub fn verify_bialgebra(h: &HopfAlgebra, mode: VerifyMode) -> AxiomReport {
    verify_with(h, mode, false, &Sequential)
}

/// Runs the axiom suite on an executor; results do not depend on scheduling.
pub fn verify_with<E: Executor>(h: &HopfAlgebra, mode: VerifyMode, antipode: bool, exec: &E) -> AxiomReport {
    let d = h.dim();
    let mut checks = Vec::new();

    // unit
    let unit = basis_vec(h.unit_index());
    let parts = exec.map(d, |i| {
        let e = basis_vec(i);
        let l = diff_sparse(&h.mul(&unit, &e), &e);
        let r = diff_sparse(&h.mul(&e, &unit), &e);
        if l.is_empty() && r.is_empty() {
            (1, 0, Vec::new())
        } else {
            (1, 1, vec![Witness { indices: vec![i], detail: h.render(if l.is_empty() { &r } else { &l }) }])
        }
    });
    checks.push(merge("unit", parts));

    // associativity
    let tasks = tuple_tasks(mode, d, 3, 0x11);
    let parts = exec.map(tasks.len(), |t| {
        let mut acc = Acc::new(d);
        let (mut ev, mut fails, mut wit) = (0, 0, Vec::new());
        for tup in &tasks[t] {
            let (i, j, k) = (tup[0], tup[1], tup[2]);
            for (m, c) in h.mul_basis(i, j) {
                for (p, v) in h.mul_basis(*m, k) {
                    acc.add(*p, &(c * v));
                }
            }
            let neg = Scalar::from_i64(-1);
            for (m, c) in h.mul_basis(j, k) {
                for (p, v) in h.mul_basis(i, *m) {
                    acc.add(*p, &(&(c * v) * &neg));
                }
            }
            let diff = acc.take();
            ev += 1;
            if !diff.is_empty() {
                fails += 1;
                if wit.len() < MAX_WITNESSES {
                    wit.push(Witness { indices: vec![i, j, k], detail: h.render(&diff) });
                }
            }
        }
        (ev, fails, wit)
    });
    checks.push(merge("associativity", parts));

    // coassociativity and counit
    let parts = exec.map(d, |i| {
        let mut left: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
        for ((a, b), c) in h.comult_basis(i) {
            for ((a1, a2), c1) in h.comult_basis(*a) {
                *left.entry((*a1, *a2, *b)).or_insert_with(Scalar::zero) += &(c * c1);
            }
            for ((b1, b2), c2) in h.comult_basis(*b) {
                *left.entry((*a, *b1, *b2)).or_insert_with(Scalar::zero) -= &(c * c2);
            }
        }
        let bad: Vec<_> = left.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        if bad.is_empty() {
            (1, 0, Vec::new())
        } else {
            let ((a, b, c), v) = &bad[0];
            let detail = alloc::format!("({v}) {} ⊗ {} ⊗ {}", h.labels[*a], h.labels[*b], h.labels[*c]);
            (1, 1, vec![Witness { indices: vec![i], detail }])
        }
    });
    checks.push(merge("coassociativity", parts));

    let parts = exec.map(d, |i| {
        let mut acc = Acc::new(d);
        let mut acc2 = Acc::new(d);
        for ((a, b), c) in h.comult_basis(i) {
            acc.add(*b, &(c * h.counit_basis(*a)));
            acc2.add(*a, &(c * h.counit_basis(*b)));
        }
        let e = basis_vec(i);
        let l = diff_sparse(&acc.take(), &e);
        let r = diff_sparse(&acc2.take(), &e);
        if l.is_empty() && r.is_empty() {
            (1, 0, Vec::new())
        } else {
            (1, 1, vec![Witness { indices: vec![i], detail: h.render(if l.is_empty() { &r } else { &l }) }])
        }
    });
    checks.push(merge("counit", parts));

    // Δ and ε are algebra maps
    let tasks = tuple_tasks(mode, d, 2, 0x22);
    let parts = exec.map(tasks.len(), |t| {
        let (mut ev, mut fails, mut wit) = (0, 0, Vec::new());
        for tup in &tasks[t] {
            let (i, j) = (tup[0], tup[1]);
            let lhs = h.comult(h.mul_basis(i, j));
            let rhs = h.tensor_mul(h.comult_basis(i), h.comult_basis(j));
            let diff = tensor_lin(&lhs, &rhs, &Scalar::from_i64(-1));
            ev += 1;
            if !diff.is_empty() {
                fails += 1;
                if wit.len() < MAX_WITNESSES {
                    wit.push(Witness { indices: vec![i, j], detail: h.render_tensor(&diff) });
                }
            }
        }
        (ev, fails, wit)
    });
    let mut compat = merge("comultiplication is multiplicative", parts);
    let unit_delta = h.comult_basis(h.unit_index());
    let u = h.unit_index();
    compat.evaluated += 1;
    if unit_delta != &vec![((u, u), Scalar::one())] {
        compat.failures += 1;
        compat.witnesses.push(Witness { indices: vec![u], detail: h.render_tensor(unit_delta) });
    }
    checks.push(compat);

    let parts = exec.map(tasks.len(), |t| {
        let (mut ev, mut fails, mut wit) = (0, 0, Vec::new());
        for tup in &tasks[t] {
            let (i, j) = (tup[0], tup[1]);
            let lhs = h.counit(h.mul_basis(i, j));
            let rhs = h.counit_basis(i) * h.counit_basis(j);
            ev += 1;
            if lhs != rhs {
                fails += 1;
                if wit.len() < MAX_WITNESSES {
                    wit.push(Witness { indices: vec![i, j], detail: alloc::format!("{}", lhs - rhs) });
                }
            }
        }
        (ev, fails, wit)
    });
    let mut eps = merge("counit is multiplicative", parts);
    eps.evaluated += 1;
    if !h.counit_basis(u).is_one() {
        eps.failures += 1;
    }
    checks.push(eps);

    if antipode {
        checks.push(check_antipode(h, exec));
    }
    AxiomReport { mode, dim: d, checks }
}

fn antipode_defect(h: &HopfAlgebra, s: &[SparseVec], i: usize) -> (SparseVec, SparseVec) {
    let d = h.dim();
    let mut l = Acc::new(d);
    let mut r = Acc::new(d);
    for ((a, b), c) in h.comult_basis(i) {
        h.algebra.mul_into(&mut l, &s[*a], &basis_vec(*b), c);
        h.algebra.mul_into(&mut r, &basis_vec(*a), &s[*b], c);
    }
    let target = sparse_scale(&basis_vec(h.unit_index()), h.counit_basis(i));
    (diff_sparse(&l.take(), &target), diff_sparse(&r.take(), &target))
}

fn check_antipode<E: Executor>(h: &HopfAlgebra, exec: &E) -> CheckOutcome {
    let Some(s) = h.antipode() else {
        return CheckOutcome {
            name: "antipode",
            evaluated: 0,
            failures: 1,
            witnesses: vec![Witness { indices: Vec::new(), detail: "antipode not constructed".into() }],
        };
    };
    let parts = exec.map(h.dim(), |i| {
        let (l, r) = antipode_defect(h, s, i);
        if l.is_empty() && r.is_empty() {
            (1, 0, Vec::new())
        } else {
            (1, 1, vec![Witness { indices: vec![i], detail: h.render(if l.is_empty() { &r } else { &l }) }])
        }
    });
    merge("antipode", parts)
}

/// Whether `s` satisfies `m(s⊗1)Δ = ιε = m(1⊗s)Δ` on every basis element.
pub fn antipode_law_holds(h: &HopfAlgebra, s: &[SparseVec]) -> bool {
    (0..h.dim()).all(|i| {
        let (l, r) = antipode_defect(h, s, i);
        l.is_empty() && r.is_empty()
    })
}

/// Largest dimension for which the linear-system antipode fallback is attempted.
pub const ANTIPODE_SOLVE_MAX_DIM: usize = 64;

/// Fills in the antipode: generator formulas first, linear solve as fallback.
pub fn build_antipode(h: &HopfAlgebra) -> Result<HopfAlgebra, HopfError> {
    if let Some(s) = antipode_from_generators(h) {
        if antipode_law_holds(h, &s) {
            return Ok(h.with_antipode(s));
        }
    }
    let s = antipode_by_solving(h)?;
    Ok(h.with_antipode(s))
}

/// `s(g) = g^{-1}`, `s(x_i) = −g_i^{-1} x_i`, extended anti-multiplicatively.
///
/// Returns `None` when the comultiplication of a generator is not of the
/// skew-primitive form the formula needs.
pub fn antipode_from_generators(h: &HopfAlgebra) -> Option<Vec<SparseVec>> {
    let grp = h.group();
    let theta = h.bounds().len();
    let mut sx = Vec::with_capacity(theta);
    for i in 0..theta {
        let xi = h.generator_index(i);
        let one = h.unit_index();
        let mut gi = None;
        for ((a, b), c) in h.comult_basis(xi) {
            if (*a, *b) == (xi, one) && c.is_one() {
                continue;
            }
            if *b == xi && c.is_one() && h.degree(*a) == 0 && gi.is_none() {
                gi = Some(h.label(*a).g.clone());
                continue;
            }
            return None;
        }
        let gi = gi?;
        let ginv = basis_vec(h.group_index(&grp.inv(&gi)));
        sx.push(sparse_scale(&h.mul(&ginv, &basis_vec(xi)), &Scalar::from_i64(-1)));
    }
    let mut out = Vec::with_capacity(h.dim());
    for lab in h.labels() {
        let mut acc = basis_vec(h.group_index(&grp.inv(&lab.g)));
        for i in (0..theta).rev() {
            for _ in 0..lab.x[i] {
                acc = h.mul(&acc, &sx[i]);
            }
        }
        out.push(acc);
    }
    Some(out)
}

/// Solves `m(s ⊗ 1)Δ = ιε` for the matrix of `s`.
pub fn antipode_by_solving(h: &HopfAlgebra) -> Result<Vec<SparseVec>, HopfError> {
    let d = h.dim();
    if d > ANTIPODE_SOLVE_MAX_DIM {
        return Err(HopfError::Budget(alloc::format!(
            "antipode linear system for dimension {d} exceeds {ANTIPODE_SOLVE_MAX_DIM}"
        )));
    }
    // unknown s_{k,a}: coefficient of e_k in s(e_a), column index a * d + k
    let mut rows: BTreeMap<(usize, usize), BTreeMap<usize, Scalar>> = BTreeMap::new();
    for b in 0..d {
        for ((a, b2), c) in h.comult_basis(b) {
            for k in 0..d {
                for (m, v) in h.mul_basis(k, *b2) {
                    *rows.entry((b, *m)).or_default().entry(a * d + k).or_insert_with(Scalar::zero) += &(c * v);
                }
            }
        }
    }
    let u = h.unit_index();
    let mut mat = Vec::new();
    let mut rhs = Vec::new();
    for b in 0..d {
        for m in 0..d {
            let row: SparseVec = rows
                .remove(&(b, m))
                .map(|r| r.into_iter().filter(|(_, v)| !v.is_zero()).collect())
                .unwrap_or_default();
            let target = if m == u { h.counit_basis(b).clone() } else { Scalar::zero() };
            if row.is_empty() && target.is_zero() {
                continue;
            }
            mat.push(row);
            rhs.push(target);
        }
    }
    let x = solve(&mat, &rhs, d * d).ok_or_else(|| HopfError::NoAntipode("antipode equations are inconsistent".into()))?;
    let s: Vec<SparseVec> = (0..d)
        .map(|a| (0..d).filter(|&k| !x[a * d + k].is_zero()).map(|k| (k, x[a * d + k].clone())).collect())
        .collect();
    if !antipode_law_holds(h, &s) {
        return Err(HopfError::NoAntipode("solution of the left antipode law fails the right law".into()));
    }
    Ok(s)
}

/// A linear functional on `H^{⊗n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Functional {
    arity: usize,
    dim: usize,
    values: BTreeMap<u64, Scalar>,
}

impl Functional {
    pub fn zero(arity: usize, dim: usize) -> Self {
        Functional { arity, dim, values: BTreeMap::new() }
    }

    /// `ε^{⊗n}`.
    pub fn unit(h: &HopfAlgebra, arity: usize) -> Self {
        let mut f = Functional::zero(arity, h.dim());
        let supp: Vec<usize> = (0..h.dim()).filter(|&i| !h.counit_basis(i).is_zero()).collect();
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..arity {
            tuples = tuples.into_iter().flat_map(|t| supp.iter().map(move |&i| [t.clone(), vec![i]].concat())).collect();
        }
        for t in tuples {
            let v = t.iter().fold(Scalar::one(), |acc, &i| acc * h.counit_basis(i));
            f.set(&t, v);
        }
        f
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn key(&self, t: &[usize]) -> u64 {
        debug_assert_eq!(t.len(), self.arity);
        t.iter().fold(0u64, |acc, &i| acc * self.dim as u64 + i as u64)
    }

    fn unkey(&self, mut k: u64) -> Vec<usize> {
        let mut out = vec![0; self.arity];
        for slot in out.iter_mut().rev() {
            *slot = (k % self.dim as u64) as usize;
            k /= self.dim as u64;
        }
        out
    }

    pub fn get(&self, t: &[usize]) -> Scalar {
        self.values.get(&self.key(t)).cloned().unwrap_or_default()
    }

    pub fn get_ref(&self, t: &[usize]) -> Option<&Scalar> {
        self.values.get(&self.key(t))
    }

    pub fn set(&mut self, t: &[usize], v: Scalar) {
        let k = self.key(t);
        if v.is_zero() {
            self.values.remove(&k);
        } else {
            self.values.insert(k, v);
        }
    }

    pub fn add_at(&mut self, t: &[usize], v: &Scalar) {
        let cur = self.get(t);
        self.set(t, cur + v);
    }

    /// Nonzero values with their argument tuples.
    pub fn entries(&self) -> Vec<(Vec<usize>, Scalar)> {
        self.values.iter().map(|(k, v)| (self.unkey(*k), v.clone())).collect()
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scale(&self, s: &Scalar) -> Functional {
        let mut out = Functional::zero(self.arity, self.dim);
        if s.is_zero() {
            return out;
        }
        out.values = self.values.iter().map(|(k, v)| (*k, v * s)).collect();
        out
    }

    pub fn add(&self, other: &Functional) -> Functional {
        assert_eq!((self.arity, self.dim), (other.arity, other.dim));
        let mut out = self.clone();
        for (k, v) in &other.values {
            let e = out.values.entry(*k).or_insert_with(Scalar::zero);
            *e += v;
            if e.is_zero() {
                out.values.remove(k);
            }
        }
        out
    }

    pub fn sub(&self, other: &Functional) -> Functional {
        self.add(&other.scale(&Scalar::from_i64(-1)))
    }

    /// Evaluates on a tensor of sparse elements.
    pub fn eval(&self, args: &[SparseVec]) -> Scalar {
        let mut total = Scalar::zero();
        let mut idx = vec![0usize; args.len()];
        if args.iter().any(|a| a.is_empty()) {
            return total;
        }
        loop {
            let t: Vec<usize> = idx.iter().zip(args).map(|(&k, a)| a[k].0).collect();
            if let Some(v) = self.get_ref(&t) {
                let c = idx.iter().zip(args).fold(v.clone(), |acc, (&k, a)| acc * &a[k].1);
                total += c;
            }
            let mut p = args.len();
            loop {
                if p == 0 {
                    return total;
                }
                p -= 1;
                idx[p] += 1;
                if idx[p] < args[p].len() {
                    break;
                }
                idx[p] = 0;
            }
        }
    }

    /// Whether the value vanishes whenever an argument is the unit.
    pub fn is_normalized(&self, h: &HopfAlgebra) -> bool {
        let u = h.unit_index();
        self.values.keys().all(|k| !self.unkey(*k).contains(&u))
    }

    /// Restriction to tuples of total x-degree `deg`.
    pub fn homogeneous_part(&self, h: &HopfAlgebra, deg: u32) -> Functional {
        let mut out = Functional::zero(self.arity, self.dim);
        for (k, v) in &self.values {
            let t = self.unkey(*k);
            if t.iter().map(|&i| h.degree(i)).sum::<u32>() == deg {
                out.values.insert(*k, v.clone());
            }
        }
        out
    }
}

/// Largest number of tuples a convolution may enumerate.
pub const CONVOLUTION_BUDGET: u64 = 4_000_000;

fn all_tuples(dim: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..arity {
        out = out.into_iter().flat_map(|t| (0..dim).map(move |i| [t.clone(), vec![i]].concat())).collect();
    }
    out
}

/// Tuples whose total x-multidegree equals `target`.
pub fn tuples_of_multidegree(h: &HopfAlgebra, arity: usize, target: &[u32]) -> Vec<Vec<usize>> {
    let mut by_deg: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
    for (i, l) in h.labels().iter().enumerate() {
        by_deg.entry(l.x.clone()).or_default().push(i);
    }
    let degs: Vec<&Vec<u32>> = by_deg.keys().collect();
    let mut partial: Vec<(Vec<u32>, Vec<&Vec<u32>>)> = vec![(vec![0; target.len()], Vec::new())];
    for _ in 0..arity {
        let mut next = Vec::new();
        for (sum, chosen) in &partial {
            for d in &degs {
                let s: Vec<u32> = sum.iter().zip(d.iter()).map(|(a, b)| a + b).collect();
                if s.iter().zip(target).all(|(a, b)| a <= b) {
                    let mut c = chosen.clone();
                    c.push(d);
                    next.push((s, c));
                }
            }
        }
        partial = next;
    }
    let mut out = Vec::new();
    for (sum, chosen) in partial {
        if sum != target {
            continue;
        }
        let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
        for d in chosen {
            tuples = tuples.into_iter().flat_map(|t| by_deg[d].iter().map(move |&i| [t.clone(), vec![i]].concat())).collect();
        }
        out.extend(tuples);
    }
    out.sort();
    out
}

fn convolve_at(f: &Functional, g: &Functional, h: &HopfAlgebra, t: &[usize]) -> Scalar {
    let lists: Vec<&TensorVec> = t.iter().map(|&i| h.comult_basis(i)).collect();
    if lists.iter().any(|l| l.is_empty()) {
        return Scalar::zero();
    }
    let n = t.len();
    let mut idx = vec![0usize; n];
    let mut total = Scalar::zero();
    let mut left = vec![0usize; n];
    let mut right = vec![0usize; n];
    loop {
        for k in 0..n {
            let ((a, b), _) = &lists[k][idx[k]];
            left[k] = *a;
            right[k] = *b;
        }
        if let Some(x) = f.get_ref(&left) {
            if let Some(y) = g.get_ref(&right) {
                let c = (0..n).fold(x * y, |acc, k| acc * &lists[k][idx[k]].1);
                total += c;
            }
        }
        let mut p = n;
        loop {
            if p == 0 {
                return total;
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < lists[p].len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

/// `(f * g)(x) = Σ f(x_1) g(x_2)` on `H^{⊗n}`, evaluated on every tuple.
pub fn convolve(f: &Functional, g: &Functional, h: &HopfAlgebra) -> Result<Functional, HopfError> {
    convolve_with(f, g, h, &Sequential)
}

/// As [`convolve`], partitioned over an executor.
pub fn convolve_with<E: Executor>(f: &Functional, g: &Functional, h: &HopfAlgebra, exec: &E) -> Result<Functional, HopfError> {
    check_arity(f, g, h)?;
    let total = (h.dim() as u64).saturating_pow(f.arity as u32);
    if total > CONVOLUTION_BUDGET {
        return Err(HopfError::Budget(alloc::format!("{total} tuples in a convolution")));
    }
    let tuples = all_tuples(h.dim(), f.arity);
    Ok(convolve_on(f, g, h, &tuples, exec))
}

/// Convolution of functionals supported in fixed x-multidegrees; only tuples of
/// the summed multidegree are evaluated.
pub fn convolve_homogeneous(
    f: &Functional,
    g: &Functional,
    h: &HopfAlgebra,
    target: &[u32],
) -> Result<Functional, HopfError> {
    check_arity(f, g, h)?;
    let tuples = tuples_of_multidegree(h, f.arity, target);
    Ok(convolve_on(f, g, h, &tuples, &Sequential))
}

fn check_arity(f: &Functional, g: &Functional, h: &HopfAlgebra) -> Result<(), HopfError> {
    if f.arity != g.arity || f.dim != h.dim() || g.dim != h.dim() {
        return Err(HopfError::Arity(alloc::format!(
            "arities {} and {} on dimensions {} and {} (algebra dimension {})",
            f.arity,
            g.arity,
            f.dim,
            g.dim,
            h.dim()
        )));
    }
    Ok(())
}

fn convolve_on<E: Executor>(f: &Functional, g: &Functional, h: &HopfAlgebra, tuples: &[Vec<usize>], exec: &E) -> Functional {
    let chunks: Vec<&[Vec<usize>]> = tuples.chunks(512).collect();
    let parts = exec.map(chunks.len(), |c| {
        chunks[c].iter().map(|t| (t.clone(), convolve_at(f, g, h, t))).filter(|(_, v)| !v.is_zero()).collect::<Vec<_>>()
    });
    let mut out = Functional::zero(f.arity, h.dim());
    for part in parts {
        for (t, v) in part {
            out.set(&t, v);
        }
    }
    out
}

/// Linear map `H → H` stored by columns.
pub type LinearMap = Vec<SparseVec>;

/// `(f * g)(x) = Σ f(x_1) g(x_2)` for linear maps.
pub fn convolve_maps(f: &LinearMap, g: &LinearMap, h: &HopfAlgebra) -> LinearMap {
    (0..h.dim())
        .map(|i| {
            let mut acc = Acc::new(h.dim());
            for ((a, b), c) in h.comult_basis(i) {
                h.algebra.mul_into(&mut acc, &f[*a], &g[*b], c);
            }
            acc.take()
        })
        .collect()
}

/// The identity map.
pub fn identity_map(h: &HopfAlgebra) -> LinearMap {
    (0..h.dim()).map(basis_vec).collect()
}

/// `ιε`.
pub fn unit_counit_map(h: &HopfAlgebra) -> LinearMap {
    (0..h.dim()).map(|i| sparse_scale(&basis_vec(h.unit_index()), h.counit_basis(i))).collect()
}

/// `ρ_f(x) = f(x_1) x_2 f(s(x_3))` for an arity-one functional `f`.
pub fn conjugation(f: &Functional, h: &HopfAlgebra) -> Result<LinearMap, HopfError> {
    if f.arity != 1 {
        return Err(HopfError::Arity("conjugation needs an arity-one functional".into()));
    }
    let s = h.antipode().ok_or_else(|| HopfError::NoAntipode("conjugation needs the antipode".into()))?;
    Ok((0..h.dim())
        .map(|i| {
            let mut acc = Acc::new(h.dim());
            for ((a, b, c), v) in h.delta2_basis(i) {
                let fa = f.get(&[a]);
                if fa.is_zero() {
                    continue;
                }
                let fs = f.eval(&[s[c].clone()]);
                acc.add(b, &(&(&v * &fa) * &fs));
            }
            acc.take()
        })
        .collect())
}

/// Convolution inverse by the geometric series in `unit − f`.
pub fn convolution_inverse(f: &Functional, h: &HopfAlgebra) -> Result<Functional, HopfError> {
    let unit = Functional::unit(h, f.arity);
    // degree-zero layer must agree with the unit
    for t in tuples_of_multidegree(h, f.arity, &vec![0; h.bounds().len()]) {
        if f.get(&t) != unit.get(&t) {
            return Err(HopfError::NotUnipotent(alloc::format!(
                "value {} at degree-zero tuple {:?} differs from the counit",
                f.get(&t),
                t
            )));
        }
    }
    let phi = unit.sub(f);
    let mut power = unit.clone();
    let mut inv = unit.clone();
    let max = f.arity as u32 * h.max_degree() + 1;
    for _ in 0..=max {
        power = convolve(&power, &phi, h)?;
        if power.is_zero() {
            let check = convolve(f, &inv, h)?;
            if check != unit {
                return Err(HopfError::NotUnipotent("series does not invert".into()));
            }
            return Ok(inv);
        }
        inv = inv.add(&power);
    }
    Err(HopfError::NotUnipotent("series did not terminate".into()))
}

/// Jacobson radical via the trace form `(x, y) ↦ tr(L_{xy})`.
pub fn radical(a: &Algebra) -> Vec<SparseVec> {
    let d = a.dim();
    let traces: Vec<Scalar> =
        (0..d).map(|m| (0..d).map(|k| coefficient(a.product(m, k), k)).sum::<Scalar>()).collect();
    let rows: Vec<SparseVec> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (j, a.product(i, j).iter().map(|(m, c)| c * &traces[*m]).sum::<Scalar>()))
                .filter(|(_, v)| !v.is_zero())
                .collect()
        })
        .collect();
    nullspace(&rows, d)
}

fn coefficient(v: &SparseVec, k: usize) -> Scalar {
    match v.binary_search_by(|(c, _)| c.cmp(&k)) {
        Ok(i) => v[i].1.clone(),
        Err(_) => Scalar::zero(),
    }
}

/// Multiplication of `H*` in the dual basis: `e^i e^j = Σ_k c_k^{ij} e^k`.
pub fn dual_algebra(h: &HopfAlgebra) -> Algebra {
    let d = h.dim();
    let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); d * d];
    for k in 0..d {
        for ((i, j), c) in h.comult_basis(k) {
            *acc[i * d + j].entry(k).or_insert_with(Scalar::zero) += c;
        }
    }
    let table = acc.into_iter().map(|m| m.into_iter().filter(|(_, v)| !v.is_zero()).collect()).collect();
    let unit = (0..d).filter(|&i| !h.counit_basis(i).is_zero()).map(|i| (i, h.counit_basis(i).clone())).collect();
    Algebra::new(d, unit, table)
}

/// The coradical filtration `H_0 ⊂ H_1 ⊂ ...`.
#[derive(Clone, Debug)]
pub struct CoradicalFiltration {
    /// `dim H_n` for `n = 0, 1, ...` up to the first `n` with `H_n = H`.
    pub dims: Vec<usize>,
    /// Basis of each `H_n`.
    pub bases: Vec<Vec<SparseVec>>,
}

impl CoradicalFiltration {
    /// `dim H_n / H_{n-1}`.
    pub fn layer_dims(&self) -> Vec<usize> {
        self.dims.iter().enumerate().map(|(n, &d)| if n == 0 { d } else { d - self.dims[n - 1] }).collect()
    }
}

/// Computes `H_n` as the annihilator of `J^{n+1}`, `J = Rad(H*)`.
pub fn coradical_filtration(h: &HopfAlgebra) -> CoradicalFiltration {
    let d = h.dim();
    let dual = dual_algebra(h);
    let j = radical(&dual);
    let mut dims = Vec::new();
    let mut bases = Vec::new();
    let mut ann = j.clone();
    loop {
        let basis = nullspace(&ann, d);
        dims.push(basis.len());
        bases.push(basis);
        if ann.is_empty() || dims.len() > d + 1 {
            break;
        }
        let mut e = Echelon::new();
        for x in &j {
            for y in &ann {
                e.insert(&dual.mul(x, y));
            }
        }
        ann = e.rows().to_vec();
    }
    CoradicalFiltration { dims, bases }
}

/// Whether the span of `vectors` meets the span of the group elements only in zero.
pub fn meets_group_algebra_trivially(h: &HopfAlgebra, vectors: &[SparseVec]) -> bool {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    let r = e.rank();
    for g in h.group().elements() {
        e.insert(&basis_vec(h.group_index(&g)));
    }
    e.rank() == r + h.group().order()
}

/// Differences between two algebras on the same basis, as readable lines.
pub fn structure_differences(a: &HopfAlgebra, b: &HopfAlgebra, limit: usize) -> Vec<String> {
    let mut out = Vec::new();
    if a.dim() != b.dim() || a.labels() != b.labels() {
        out.push(alloc::format!("bases differ: dimensions {} and {}", a.dim(), b.dim()));
        return out;
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            if a.mul_basis(i, j) != b.mul_basis(i, j) && out.len() < limit {
                out.push(alloc::format!(
                    "({}) * ({}): {} vs {}",
                    a.label(i),
                    a.label(j),
                    a.render(a.mul_basis(i, j)),
                    b.render(b.mul_basis(i, j))
                ));
            }
        }
        if a.comult_basis(i) != b.comult_basis(i) && out.len() < limit {
            out.push(alloc::format!("Δ({}) differs", a.label(i)));
        }
        if a.counit_basis(i) != b.counit_basis(i) && out.len() < limit {
            out.push(alloc::format!("ε({}) differs", a.label(i)));
        }
    }
    out
}
