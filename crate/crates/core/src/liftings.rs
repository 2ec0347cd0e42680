//! Liftings of quantum linear spaces.
//!
//! `H(a)` is presented by `g x_i = χ_i(g) x_i g`, `[x_i, x_j]_c = a_ij (g_i g_j − 1)`
//! for `i < j`, and `x_i^{N_i} = a_ii (g_i^{N_i} − 1)`, with `Δ(x_i) = x_i ⊗ 1 + g_i ⊗ x_i`.
//! `U(D, f)` is presented by `Θ(f)(z) = 0` for the generators `z` of `K(D)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::braided::{BraidedError, DiagonalDatum, DEFAULT_BUDGET};
use crate::groups::{Character, GroupElement};
use crate::hopfcore::{
    build_antipode, coradical_filtration, meets_group_algebra_trivially, radical, structure_differences,
    verify_hopf_axioms, AxiomReport, HopfAlgebra, HopfError, TensorVec, VerifyMode,
};
use crate::linalg::{rank, solve, SparseVec};
use crate::scalars::{CyclotomicField, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LiftingError {
    Shape(String),
    Datum(BraidedError),
    ForcedZero(Vec<ForcedZero>),
    NotInvariant(String),
    Cap { degree: usize, cap: usize },
    Budget(String),
    Extension(String),
    NotInK(String),
    Verification(String),
    Hopf(HopfError),
    Configuration(String),
}

impl fmt::Display for LiftingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftingError::Shape(m) => write!(f, "parameter shape: {m}"),
            LiftingError::Datum(e) => write!(f, "{e}"),
            LiftingError::ForcedZero(list) => {
                let parts: Vec<String> = list.iter().map(|z| alloc::format!("{z}")).collect();
                write!(f, "{}", parts.join("; "))
            }
            LiftingError::NotInvariant(m) => write!(f, "not G-invariant: {m}"),
            LiftingError::Cap { degree, cap } => write!(f, "degree {degree} exceeds the degree cap {cap}"),
            LiftingError::Budget(m) => write!(f, "size budget exceeded: {m}"),
            LiftingError::Extension(m) => write!(f, "f does not extend: {m}"),
            LiftingError::NotInK(m) => write!(f, "element is not in K#kG form: {m}"),
            LiftingError::Verification(m) => write!(f, "Hopf axioms fail: {m}"),
            LiftingError::Hopf(e) => write!(f, "{e}"),
            LiftingError::Configuration(m) => write!(f, "configuration: {m}"),
        }
    }
}

impl From<BraidedError> for LiftingError {
    fn from(e: BraidedError) -> Self {
        LiftingError::Datum(e)
    }
}

impl From<HopfError> for LiftingError {
    fn from(e: HopfError) -> Self {
        LiftingError::Hopf(e)
    }
}

/// Element of the group algebra `kG`.
pub type KgElement = BTreeMap<GroupElement, Scalar>;

fn kg_add(m: &mut KgElement, g: GroupElement, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    let e = m.entry(g.clone()).or_insert_with(Scalar::zero);
    *e += c;
    if e.is_zero() {
        m.remove(&g);
    }
}

/// `c (g − 1)`.
pub fn kg_g_minus_one(d: &DiagonalDatum, g: &GroupElement, c: &Scalar) -> KgElement {
    let mut m = KgElement::new();
    kg_add(&mut m, g.clone(), c);
    kg_add(&mut m, d.group().identity(), &-c);
    m
}

pub fn kg_scale(a: &KgElement, s: &Scalar) -> KgElement {
    let mut m = KgElement::new();
    for (g, c) in a {
        kg_add(&mut m, g.clone(), &(c * s));
    }
    m
}

pub fn kg_sum(a: &KgElement, b: &KgElement) -> KgElement {
    let mut m = a.clone();
    for (g, c) in b {
        kg_add(&mut m, g.clone(), c);
    }
    m
}

pub fn kg_mul(d: &DiagonalDatum, a: &KgElement, b: &KgElement) -> KgElement {
    let mut m = KgElement::new();
    for (g, c) in a {
        for (h, e) in b {
            kg_add(&mut m, d.group().mul(g, h), &(c * e));
        }
    }
    m
}

/// Renders a group algebra element, e.g. `(1) 1 + (-1) g^3`.
pub fn kg_render(d: &DiagonalDatum, a: &KgElement) -> String {
    if a.is_empty() {
        return String::from("0");
    }
    let parts: Vec<String> = a
        .iter()
        .map(|(g, c)| {
            let m = crate::hopfcore::PbwMonomial { x: vec![0; d.rank()], g: g.clone() };
            alloc::format!("({c}) {m}")
        })
        .collect();
    parts.join(" + ")
}

fn pow_u(s: &Scalar, k: u32) -> Scalar {
    let mut out = Scalar::one();
    for _ in 0..k {
        out *= s;
    }
    out
}

/// Root vector parameters `a_ii` and linking parameters `a_ij` (`i < j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingParams {
    pub diag: Vec<Scalar>,
    pub link: BTreeMap<(usize, usize), Scalar>,
}

impl LiftingParams {
    pub fn zero(theta: usize) -> Self {
        LiftingParams { diag: vec![Scalar::zero(); theta], link: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    /// `a_ij` with `a_ji = a_ij` for the linking entries.
    pub fn a(&self, i: usize, j: usize) -> Scalar {
        if i == j {
            self.diag[i].clone()
        } else {
            self.link.get(&(i.min(j), i.max(j))).cloned().unwrap_or_default()
        }
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        if i == j {
            self.diag[i] = v;
        } else if v.is_zero() {
            self.link.remove(&(i.min(j), i.max(j)));
        } else {
            self.link.insert((i.min(j), i.max(j)), v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.diag.iter().all(|v| v.is_zero()) && self.link.values().all(|v| v.is_zero())
    }

    /// Parameters for the relabeled datum `d.permuted(perm)`.
    ///
    /// Reversing a pair turns `[x_i, x_j]_c` into `[x_j, x_i]_c = −q_ji [x_i, x_j]_c`.
    pub fn permuted(&self, d: &DiagonalDatum, perm: &[usize]) -> LiftingParams {
        let mut out = LiftingParams::zero(perm.len());
        for (k, &old) in perm.iter().enumerate() {
            out.diag[k] = self.diag[old].clone();
        }
        for k in 0..perm.len() {
            for l in (k + 1)..perm.len() {
                let (i, j) = (perm[k], perm[l]);
                let v = if i < j { self.a(i, j) } else { -&(d.q(i, j) * self.a(j, i)) };
                out.set(k, l, v);
            }
        }
        out
    }
}

/// A parameter entry set to zero by the admissibility constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedZero {
    pub entry: (usize, usize),
    pub requested: Scalar,
    pub reason: String,
}

impl fmt::Display for ForcedZero {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "forced zero: {} (a_{}{} requested {})", self.reason, self.entry.0 + 1, self.entry.1 + 1, self.requested)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedParams {
    pub params: LiftingParams,
    pub forced: Vec<ForcedZero>,
}

impl ValidatedParams {
    /// Forced zeros where a nonzero value had been requested.
    pub fn conflicts(&self) -> Vec<ForcedZero> {
        self.forced.iter().filter(|z| !z.requested.is_zero()).cloned().collect()
    }
}

/// Reasons `a_ij` must vanish, if any.
pub fn forced_zero_reason(d: &DiagonalDatum, i: usize, j: usize) -> Option<String> {
    let grp = d.group();
    if i == j {
        let n = d.n(i) as i64;
        if grp.is_identity(&grp.pow(d.g(i), n)) {
            return Some("g^n = 1".into());
        }
        if !grp.is_trivial_character(&grp.char_pow(d.chi(i), n)) {
            return Some("chi^n != eps".into());
        }
    } else {
        if grp.is_identity(&grp.mul(d.g(i), d.g(j))) {
            return Some("g_i g_j = 1".into());
        }
        if !grp.is_trivial_character(&grp.char_mul(d.chi(i), d.chi(j))) {
            return Some("chi_i chi_j != eps".into());
        }
    }
    None
}

/// Zeroes every entry the admissibility constraints force to vanish, recording each.
pub fn validate_params(d: &DiagonalDatum, p: &LiftingParams) -> Result<ValidatedParams, LiftingError> {
    let theta = d.rank();
    if p.diag.len() != theta {
        return Err(LiftingError::Shape(alloc::format!("{} diagonal entries for rank {theta}", p.diag.len())));
    }
    if let Some(&(i, j)) = p.link.keys().find(|&&(i, j)| i >= j || j >= theta) {
        return Err(LiftingError::Shape(alloc::format!("linking entry ({}, {}) out of range", i + 1, j + 1)));
    }
    let mut out = p.clone();
    let mut forced = Vec::new();
    for i in 0..theta {
        for j in i..theta {
            if let Some(reason) = forced_zero_reason(d, i, j) {
                forced.push(ForcedZero { entry: (i, j), requested: p.a(i, j), reason });
                out.set(i, j, Scalar::zero());
            }
        }
    }
    Ok(ValidatedParams { params: out, forced })
}

/// A letter of a word in the generators of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Letter {
    X(usize),
    G(GroupElement),
}

type MonoMap = BTreeMap<(Vec<u32>, GroupElement), Scalar>;

fn mono_add(m: &mut MonoMap, a: Vec<u32>, g: GroupElement, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let key = (a, g);
    let e = m.entry(key.clone()).or_insert_with(Scalar::zero);
    *e += &c;
    if e.is_zero() {
        m.remove(&key);
    }
}

/// Rewriting data: `x_i^{N_i} → power[i]` and, for `i < j`,
/// `x_j x_i → q_ji x_i x_j + swap[(i, j)]`, all right-hand sides in `kG`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    datum: DiagonalDatum,
    power: Vec<KgElement>,
    swap: BTreeMap<(usize, usize), KgElement>,
}

impl Presentation {
    pub fn new(datum: DiagonalDatum, power: Vec<KgElement>, swap: BTreeMap<(usize, usize), KgElement>) -> Self {
        let swap = swap.into_iter().filter(|(_, v)| !v.is_empty()).collect();
        Presentation { datum, power, swap }
    }

    /// The presentation of `H(a)`.
    pub fn of_params(d: &DiagonalDatum, p: &LiftingParams) -> Self {
        let grp = d.group();
        let power = (0..d.rank())
            .map(|i| kg_g_minus_one(d, &grp.pow(d.g(i), d.n(i) as i64), &p.diag[i]))
            .collect();
        let mut swap = BTreeMap::new();
        for (&(i, j), a) in &p.link {
            let gg = grp.mul(d.g(i), d.g(j));
            swap.insert((i, j), kg_g_minus_one(d, &gg, &-&(d.q(j, i) * a)));
        }
        Presentation::new(d.clone(), power, swap)
    }

    /// `B(V) # kG`.
    pub fn bosonization(d: &DiagonalDatum) -> Self {
        Presentation::of_params(d, &LiftingParams::zero(d.rank()))
    }

    pub fn datum(&self) -> &DiagonalDatum {
        &self.datum
    }

    pub fn power(&self, i: usize) -> &KgElement {
        &self.power[i]
    }

    pub fn swap(&self, i: usize, j: usize) -> KgElement {
        self.swap.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn dim(&self) -> usize {
        self.datum.group().order() * self.datum.ns().iter().map(|&n| n as usize).product::<usize>()
    }

    // (x^a g) x_j, accumulated into `out` with factor `c`.
    fn right_mul_x(&self, a: &[u32], g: &GroupElement, j: usize, c: &Scalar, out: &mut MonoMap) {
        let d = &self.datum;
        let grp = d.group();
        let theta = d.rank();
        let c = c * &d.char_value(d.chi(j), g);
        let s: Vec<Scalar> = (0..theta).map(|k| d.q(k, j)).collect();
        let mut main = c.clone();
        for k in (j + 1)..theta {
            main *= &pow_u(&s[k], a[k]);
        }
        if a[j] + 1 < d.n(j) {
            let mut b = a.to_vec();
            b[j] += 1;
            mono_add(out, b, g.clone(), main);
        } else {
            for (h, ch) in &self.power[j] {
                let mut coef = &main * ch;
                for k in (j + 1)..theta {
                    coef *= &pow_u(&d.char_value(d.chi(k), h), a[k]);
                }
                let mut b = a.to_vec();
                b[j] = 0;
                mono_add(out, b, grp.mul(h, g), coef);
            }
        }
        for k in (j + 1)..theta {
            if a[k] == 0 {
                continue;
            }
            for (h, ch) in self.swap.get(&(j, k)).into_iter().flatten() {
                let mut tail = Scalar::one();
                for k2 in (k + 1)..theta {
                    tail *= &pow_u(&(&s[k2] * &d.char_value(d.chi(k2), h)), a[k2]);
                }
                let step = &s[k] * &d.char_value(d.chi(k), h);
                let mut geo = Scalar::zero();
                let mut pw = Scalar::one();
                for _ in 0..a[k] {
                    geo += &pw;
                    pw *= &step;
                }
                let mut b = a.to_vec();
                b[k] -= 1;
                mono_add(out, b, grp.mul(h, g), &(&(&c * ch) * &geo) * &tail);
            }
        }
    }

    fn mul_letter(&self, m: &MonoMap, l: &Letter) -> MonoMap {
        let grp = self.datum.group();
        let mut out = MonoMap::new();
        for ((a, g), c) in m {
            match l {
                Letter::X(j) => self.right_mul_x(a, g, *j, c, &mut out),
                Letter::G(h) => mono_add(&mut out, a.clone(), grp.mul(g, h), c.clone()),
            }
        }
        out
    }

    fn x_index(&self, a: &[u32]) -> usize {
        a.iter().zip(self.datum.ns()).fold(0usize, |acc, (&e, &n)| acc * n as usize + e as usize)
    }

    fn index(&self, a: &[u32], g: &GroupElement) -> usize {
        self.x_index(a) * self.datum.group().order() + self.datum.group().index_of(g)
    }

    fn to_sparse(&self, m: &MonoMap) -> SparseVec {
        let mut v: Vec<(usize, Scalar)> = m.iter().map(|((a, g), c)| (self.index(a, g), c.clone())).collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    /// Rewrites a word in the generators onto the PBW basis.
    pub fn normalize(&self, word: &[Letter]) -> SparseVec {
        let mut m = MonoMap::new();
        m.insert((vec![0; self.datum.rank()], self.datum.group().identity()), Scalar::one());
        for l in word {
            m = self.mul_letter(&m, l);
        }
        self.to_sparse(&m)
    }

    /// Structure constants, counit and comultiplication (no antipode).
    pub fn build_bialgebra(&self) -> HopfAlgebra {
        let d = &self.datum;
        let grp = d.group();
        let theta = d.rank();
        let bounds = d.ns().to_vec();
        let elems = grp.elements();
        let xs = crate::hopfcore::pbw_labels(&crate::groups::FiniteAbelianGroup::new(Vec::new()), &bounds);
        let xs: Vec<Vec<u32>> = xs.into_iter().map(|l| l.x).collect();
        let nx = xs.len();
        let ng = elems.len();
        let dim = nx * ng;
        // X_a X_b
        let id = grp.identity();
        let mut xx: Vec<MonoMap> = Vec::with_capacity(nx * nx);
        for a in &xs {
            for b in &xs {
                let mut m = MonoMap::new();
                m.insert((a.clone(), id.clone()), Scalar::one());
                for (j, &e) in b.iter().enumerate() {
                    for _ in 0..e {
                        m = self.mul_letter(&m, &Letter::X(j));
                    }
                }
                xx.push(m);
            }
        }
        let mut table = Vec::with_capacity(dim * dim);
        for (ia, _) in xs.iter().enumerate() {
            for g in &elems {
                for (ib, b) in xs.iter().enumerate() {
                    let mut chib = Scalar::one();
                    for (j, &e) in b.iter().enumerate() {
                        chib *= &pow_u(&d.char_value(d.chi(j), g), e);
                    }
                    for h in &elems {
                        let gh = grp.mul(g, h);
                        let mut v: SparseVec = xx[ia * nx + ib]
                            .iter()
                            .map(|((c, k), s)| (self.index(c, &grp.mul(k, &gh)), s * &chib))
                            .collect();
                        v.sort_by_key(|(i, _)| *i);
                        table.push(v);
                    }
                }
            }
        }
        let counit: Vec<Scalar> =
            (0..dim).map(|i| if i < ng { Scalar::one() } else { Scalar::zero() }).collect();
        let placeholder = vec![Vec::new(); dim];
        let h = HopfAlgebra::from_parts(d.field().clone(), grp.clone(), bounds, table, placeholder, counit)
            .expect("consistent dimensions");
        // Δ(X_a) by appending the last generator
        let mut dx: Vec<TensorVec> = vec![Vec::new(); nx];
        dx[0] = vec![((0, 0), Scalar::one())];
        let gen_delta: Vec<TensorVec> = (0..theta)
            .map(|i| {
                let xi = h.generator_index(i);
                let gi = h.group_index(d.g(i));
                let mut t = vec![((xi, 0), Scalar::one()), ((gi, xi), Scalar::one())];
                t.sort_by_key(|(k, _)| *k);
                t
            })
            .collect();
        for (ia, a) in xs.iter().enumerate().skip(1) {
            let k = (0..theta).rev().find(|&k| a[k] > 0).expect("nonzero");
            let mut prev = a.clone();
            prev[k] -= 1;
            dx[ia] = h.tensor_mul(&dx[self.x_index(&prev)], &gen_delta[k]);
        }
        let mut comult = Vec::with_capacity(dim);
        for t in dx.iter() {
            for g in &elems {
                let gi = grp.index_of(g);
                let mut v: TensorVec = t
                    .iter()
                    .map(|((l, r), c)| {
                        let shift = |idx: usize| {
                            let (xpart, gpart) = (idx / ng, idx % ng);
                            xpart * ng + grp.index_of(&grp.mul(&elems[gpart], &elems[gi]))
                        };
                        ((shift(*l), shift(*r)), c.clone())
                    })
                    .collect();
                v.sort_by_key(|(k, _)| *k);
                comult.push(v);
            }
        }
        h.with_comult(comult)
    }

    /// The Hopf algebra with antipode.
    pub fn build(&self) -> Result<HopfAlgebra, LiftingError> {
        Ok(build_antipode(&self.build_bialgebra())?)
    }
}

/// A constructed lifting with its presentation.
#[derive(Clone, Debug)]
pub struct Lifting {
    pub datum: DiagonalDatum,
    pub params: LiftingParams,
    pub presentation: Presentation,
    pub hopf: HopfAlgebra,
    pub report: AxiomReport,
}

/// Builds `H(a)` and certifies the Hopf axioms.
pub fn build_lifting(d: &DiagonalDatum, p: &LiftingParams, mode: VerifyMode) -> Result<Lifting, LiftingError> {
    let v = validate_params(d, p)?;
    let conflicts = v.conflicts();
    if !conflicts.is_empty() {
        return Err(LiftingError::ForcedZero(conflicts));
    }
    let presentation = Presentation::of_params(d, &v.params);
    let hopf = presentation.build()?;
    let report = verify_hopf_axioms(&hopf, mode);
    if !report.passed() {
        let bad = report.checks.iter().find(|c| !c.passed()).expect("a failed check");
        let w = bad.witnesses.first().map(|w| alloc::format!(" at {:?}: {}", w.indices, w.detail)).unwrap_or_default();
        return Err(LiftingError::Verification(alloc::format!("{}{}", bad.name, w)));
    }
    Ok(Lifting { datum: d.clone(), params: v.params, presentation, hopf, report })
}

/// Key of a basis element `w g` of `T(V) # kG`.
pub type TKey = (Vec<u8>, GroupElement);

/// Sparse element of `T(V) # kG`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TElem {
    pub terms: BTreeMap<TKey, Scalar>,
}

impl TElem {
    pub fn zero() -> Self {
        TElem::default()
    }

    pub fn term(w: Vec<u8>, g: GroupElement, c: Scalar) -> Self {
        let mut t = TElem::zero();
        t.add_term((w, g), &c);
        t
    }

    pub fn add_term(&mut self, k: TKey, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(k.clone()).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn add(&self, o: &TElem) -> TElem {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> TElem {
        let mut out = TElem::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), &(c * s));
        }
        out
    }

    pub fn sub(&self, o: &TElem) -> TElem {
        self.add(&o.scale(&Scalar::from_i64(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|(w, _)| w.len()).max().unwrap_or(0)
    }

    /// The x-degree-zero part as an element of `kG`.
    pub fn group_part(&self) -> KgElement {
        self.terms.iter().filter(|((w, _), _)| w.is_empty()).map(|((_, g), c)| (g.clone(), c.clone())).collect()
    }
}

/// `T(V) # kG` truncated at a degree cap; products exceeding it are errors.
#[derive(Clone, Debug)]
pub struct TruncatedGradedAlgebra {
    datum: DiagonalDatum,
    cap: usize,
}

impl TruncatedGradedAlgebra {
    pub fn new(datum: DiagonalDatum, cap: usize) -> Self {
        TruncatedGradedAlgebra { datum, cap }
    }

    /// `2 max(N_i) θ + 2`.
    pub fn default_cap(d: &DiagonalDatum) -> usize {
        2 * *d.ns().iter().max().expect("positive rank") as usize * d.rank() + 2
    }

    pub fn datum(&self) -> &DiagonalDatum {
        &self.datum
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn one(&self) -> TElem {
        TElem::term(Vec::new(), self.datum.group().identity(), Scalar::one())
    }

    pub fn x(&self, i: usize) -> TElem {
        TElem::term(vec![i as u8], self.datum.group().identity(), Scalar::one())
    }

    pub fn group(&self, g: &GroupElement) -> TElem {
        TElem::term(Vec::new(), g.clone(), Scalar::one())
    }

    pub fn from_kg(&self, a: &KgElement) -> TElem {
        let mut t = TElem::zero();
        for (g, c) in a {
            t.add_term((Vec::new(), g.clone()), c);
        }
        t
    }

    /// `χ_w(g) = Π χ_{w_k}(g)`.
    fn word_char(&self, w: &[u8], g: &GroupElement) -> Scalar {
        let d = &self.datum;
        let e: u64 = w.iter().map(|&l| d.char_exp(d.chi(l as usize), g) as u64).sum();
        d.root(e as i64).clone()
    }

    /// `(w g)(w' h) = χ_{w'}(g) w w' g h`.
    pub fn mul(&self, a: &TElem, b: &TElem) -> Result<TElem, LiftingError> {
        let grp = self.datum.group();
        let mut out = TElem::zero();
        for ((w, g), c) in &a.terms {
            for ((w2, h), e) in &b.terms {
                let deg = w.len() + w2.len();
                if deg > self.cap {
                    return Err(LiftingError::Cap { degree: deg, cap: self.cap });
                }
                let mut word = w.clone();
                word.extend_from_slice(w2);
                out.add_term((word, grp.mul(g, h)), &(&(c * e) * &self.word_char(w2, g)));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, a: &TElem, k: u32) -> Result<TElem, LiftingError> {
        let mut out = self.one();
        for _ in 0..k {
            out = self.mul(&out, a)?;
        }
        Ok(out)
    }

    /// `z_i = x_i^{N_i}`.
    pub fn z(&self, i: usize) -> Result<TElem, LiftingError> {
        self.pow(&self.x(i), self.datum.n(i))
    }

    /// `z_ij = [x_i, x_j]_c = x_i x_j − q_ij x_j x_i`.
    pub fn z_link(&self, i: usize, j: usize) -> Result<TElem, LiftingError> {
        let xy = self.mul(&self.x(i), &self.x(j))?;
        let yx = self.mul(&self.x(j), &self.x(i))?;
        Ok(xy.sub(&yx.scale(&self.datum.q(i, j))))
    }

    /// `s(w g) = g^{-1} s(x_{w_n}) ... s(x_{w_1})` with `s(x_i) = −g_i^{-1} x_i`.
    pub fn antipode(&self, a: &TElem) -> Result<TElem, LiftingError> {
        let grp = self.datum.group();
        let mut out = TElem::zero();
        for ((w, g), c) in &a.terms {
            let mut t = self.group(&grp.inv(g));
            for &l in w.iter().rev() {
                let sx = self.mul(&self.group(&grp.inv(self.datum.g(l as usize))), &self.x(l as usize))?;
                t = self.mul(&t, &sx.scale(&Scalar::from_i64(-1)))?;
            }
            out = out.add(&t.scale(c));
        }
        Ok(out)
    }

    /// Iterated coproduct of `w g` split into `parts` tensor factors.
    fn delta_word(&self, w: &[u8], g: &GroupElement, parts: usize) -> Vec<(Vec<TKey>, Scalar)> {
        let d = &self.datum;
        let grp = d.group();
        let n = w.len();
        let total = parts.pow(n as u32);
        let mut out = Vec::with_capacity(total);
        let mut assign = vec![0usize; n];
        for code in 0..total {
            let mut r = code;
            for slot in assign.iter_mut().rev() {
                *slot = r % parts;
                r /= parts;
            }
            // letter at position p sits in factor assign[p]; it leaves g_{w_p} in every earlier factor
            let mut exp: u64 = 0;
            for p in 0..n {
                for q in (p + 1)..n {
                    if assign[q] < assign[p] {
                        exp += d.char_exp(d.chi(w[q] as usize), d.g(w[p] as usize)) as u64;
                    }
                }
            }
            let mut keys = Vec::with_capacity(parts);
            for f in 0..parts {
                let word: Vec<u8> = (0..n).filter(|&p| assign[p] == f).map(|p| w[p]).collect();
                let mut h = g.clone();
                for p in 0..n {
                    if assign[p] > f {
                        h = grp.mul(&h, d.g(w[p] as usize));
                    }
                }
                keys.push((word, h));
            }
            out.push((keys, d.root(exp as i64).clone()));
        }
        out
    }

    /// `Δ(a)` in `(T(V) # kG)^{⊗2}`.
    pub fn delta(&self, a: &TElem) -> BTreeMap<(TKey, TKey), Scalar> {
        let mut out: BTreeMap<(TKey, TKey), Scalar> = BTreeMap::new();
        for ((w, g), c) in &a.terms {
            for (mut keys, s) in self.delta_word(w, g, 2) {
                let r = keys.pop().expect("two parts");
                let l = keys.pop().expect("two parts");
                *out.entry((l, r)).or_insert_with(Scalar::zero) += &(c * &s);
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }
}

/// A generator of `K(D)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum KGenerator {
    /// `z_i = x_i^{N_i}`.
    Power(usize),
    /// `z_ij = [x_i, x_j]_c`, `i < j`.
    Link(usize, usize),
}

impl fmt::Display for KGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KGenerator::Power(i) => write!(f, "z{}", i + 1),
            KGenerator::Link(i, j) => write!(f, "z{}{}", i + 1, j + 1),
        }
    }
}

/// Generators of `K(D)` in `T(V) # kG` with the values of `f` on them.
#[derive(Clone, Debug)]
pub struct KData {
    pub tga: TruncatedGradedAlgebra,
    pub generators: Vec<KGenerator>,
    pub elements: Vec<TElem>,
    pub values: Vec<Scalar>,
    /// Group degree `h` of each generator: `Δ(z) = z ⊗ 1 + h ⊗ z`.
    pub degrees: Vec<GroupElement>,
}

/// Checks `G`-invariance of `f` (given by lifting parameters) and sets up `K(D)`.
pub fn build_k_and_f(d: &DiagonalDatum, f: &LiftingParams, cap: usize) -> Result<KData, LiftingError> {
    let grp = d.group();
    let theta = d.rank();
    if f.diag.len() != theta {
        return Err(LiftingError::Shape(alloc::format!("{} diagonal entries for rank {theta}", f.diag.len())));
    }
    let tga = TruncatedGradedAlgebra::new(d.clone(), cap);
    let mut generators = Vec::new();
    let mut elements = Vec::new();
    let mut values = Vec::new();
    let mut degrees = Vec::new();
    for i in 0..theta {
        let eta = grp.char_pow(d.chi(i), d.n(i) as i64);
        if !f.diag[i].is_zero() && !grp.is_trivial_character(&eta) {
            return Err(LiftingError::NotInvariant(alloc::format!("f(z{}) != 0 but eta_{} != eps", i + 1, i + 1)));
        }
        generators.push(KGenerator::Power(i));
        elements.push(tga.z(i)?);
        values.push(f.diag[i].clone());
        degrees.push(grp.pow(d.g(i), d.n(i) as i64));
    }
    for i in 0..theta {
        for j in (i + 1)..theta {
            let v = f.a(i, j);
            if !v.is_zero() && !grp.is_trivial_character(&grp.char_mul(d.chi(i), d.chi(j))) {
                return Err(LiftingError::NotInvariant(alloc::format!(
                    "f(z{}{}) != 0 but chi_{} chi_{} != eps",
                    i + 1,
                    j + 1,
                    i + 1,
                    j + 1
                )));
            }
            generators.push(KGenerator::Link(i, j));
            elements.push(tga.z_link(i, j)?);
            values.push(v);
            degrees.push(grp.mul(d.g(i), d.g(j)));
        }
    }
    Ok(KData { tga, generators, elements, values, degrees })
}

/// Linear extension `F` of `f̃` from `K(D)` to words, `F(w g) = F(w)`.
pub type Extension = BTreeMap<Vec<u8>, Scalar>;

impl KData {
    pub fn datum(&self) -> &DiagonalDatum {
        self.tga.datum()
    }

    pub fn generator_index(&self, g: &KGenerator) -> Option<usize> {
        self.generators.iter().position(|x| x == g)
    }

    pub fn value(&self, g: &KGenerator) -> Scalar {
        self.generator_index(g).map(|k| self.values[k].clone()).unwrap_or_default()
    }

    fn gen_degree(&self, k: usize) -> usize {
        self.elements[k].degree()
    }

    /// Extends `f̃` (multiplicative on products of generators) linearly to all words
    /// of degree `≤ max_degree`; fails if the products carry inconsistent values.
    pub fn extension(&self, max_degree: usize) -> Result<Extension, LiftingError> {
        let theta = self.datum().rank();
        let mut ext = Extension::new();
        ext.insert(Vec::new(), Scalar::one());
        for deg in 1..=max_degree {
            let words = (theta as u64).saturating_pow(deg as u32);
            if words > DEFAULT_BUDGET as u64 {
                return Err(LiftingError::Budget(alloc::format!("{words} words in degree {deg}")));
            }
            let mut seqs: Vec<Vec<usize>> = Vec::new();
            self.sequences(deg, &mut Vec::new(), &mut seqs);
            if seqs.is_empty() {
                continue;
            }
            let mut cols: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for s in &seqs {
                let mut prod = self.tga.one();
                let mut val = Scalar::one();
                for &k in s {
                    prod = self.tga.mul(&prod, &self.elements[k])?;
                    val *= &self.values[k];
                }
                let mut row: SparseVec = prod
                    .terms
                    .iter()
                    .map(|((w, _), c)| {
                        let n = cols.len();
                        (*cols.entry(w.clone()).or_insert(n), c.clone())
                    })
                    .collect();
                row.sort_by_key(|(i, _)| *i);
                rows.push(row);
                rhs.push(val);
            }
            let x = solve(&rows, &rhs, cols.len()).ok_or_else(|| {
                LiftingError::Extension(alloc::format!("inconsistent values on products of degree {deg}"))
            })?;
            for (w, c) in cols {
                if !x[c].is_zero() {
                    ext.insert(w, x[c].clone());
                }
            }
        }
        Ok(ext)
    }

    fn sequences(&self, remaining: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(cur.clone());
            return;
        }
        for k in 0..self.generators.len() {
            let dk = self.gen_degree(k);
            if dk <= remaining {
                cur.push(k);
                self.sequences(remaining - dk, cur, out);
                cur.pop();
            }
        }
    }

    fn apply_ext(ext: &Extension, a: &TElem) -> Scalar {
        a.terms.iter().filter_map(|((w, _), c)| ext.get(w).map(|v| c * v)).sum()
    }

    /// `f̃(a)` for `a ∈ K # kG`.
    pub fn evaluate(&self, a: &TElem) -> Result<Scalar, LiftingError> {
        Ok(Self::apply_ext(&self.extension(a.degree())?, a))
    }

    /// `f̃ s(a)`.
    pub fn evaluate_antipode(&self, a: &TElem) -> Result<Scalar, LiftingError> {
        let sa = self.tga.antipode(a)?;
        Ok(Self::apply_ext(&self.extension(sa.degree())?, &sa))
    }

    /// Parameters of this functional, read back from the generator values.
    pub fn params(&self) -> LiftingParams {
        let mut p = LiftingParams::zero(self.datum().rank());
        for (g, v) in self.generators.iter().zip(&self.values) {
            match g {
                KGenerator::Power(i) => p.set(*i, *i, v.clone()),
                KGenerator::Link(i, j) => p.set(*i, *j, v.clone()),
            }
        }
        p
    }
}

/// `Θ(f)(y) = f̃(y_1) y_2 f̃s(y_3)` for `y ∈ K # kG`.
pub fn theta(k: &KData, y: &TElem) -> Result<TElem, LiftingError> {
    let ext = k.extension(y.degree())?;
    let tga = &k.tga;
    let mut out = TElem::zero();
    for ((w, g), c) in &y.terms {
        for (keys, s) in tga.delta_word(w, g, 3) {
            let fl = match ext.get(&keys[0].0) {
                Some(v) => v.clone(),
                None => continue,
            };
            let right = TElem::term(keys[2].0.clone(), keys[2].1.clone(), Scalar::one());
            let fs = KData::apply_ext(&ext, &tga.antipode(&right)?);
            if fs.is_zero() {
                continue;
            }
            out.add_term(keys[1].clone(), &(&(&(c * &s) * &fl) * &fs));
        }
    }
    Ok(out)
}

/// Convolution `f_1 * f_2` on `K(D)`, evaluated on the generators through `Δ`.
pub fn convolve_f(k1: &KData, k2: &KData) -> Result<LiftingParams, LiftingError> {
    let mut p = LiftingParams::zero(k1.datum().rank());
    for (idx, g) in k1.generators.iter().enumerate() {
        let z = &k1.elements[idx];
        let e1 = k1.extension(z.degree())?;
        let e2 = k2.extension(z.degree())?;
        let mut v = Scalar::zero();
        for (((wl, _), (wr, _)), c) in k1.tga.delta(z) {
            if let (Some(a), Some(b)) = (e1.get(&wl), e2.get(&wr)) {
                v += &(&c * &(a * b));
            }
        }
        match g {
            KGenerator::Power(i) => p.set(*i, *i, v),
            KGenerator::Link(i, j) => p.set(*i, *j, v),
        }
    }
    Ok(p)
}

/// Convolution inverse `f s` on the generators.
pub fn inverse_f(k: &KData) -> Result<LiftingParams, LiftingError> {
    let mut p = LiftingParams::zero(k.datum().rank());
    for (idx, g) in k.generators.iter().enumerate() {
        let v = k.evaluate_antipode(&k.elements[idx])?;
        match g {
            KGenerator::Power(i) => p.set(*i, *i, v),
            KGenerator::Link(i, j) => p.set(*i, *j, v),
        }
    }
    Ok(p)
}

/// Applies `Θ(f)` as a linear map to any element of `K # kG` (e.g. `Θ(f_2)(z)`).
pub fn theta_compose(k1: &KData, k2: &KData, y: &TElem) -> Result<TElem, LiftingError> {
    theta(k1, &theta(k2, y)?)
}

/// `z^a = z_1^{a_1} ... z_θ^{a_θ}` over the root vector generators.
pub fn z_power(k: &KData, a: &[u32]) -> Result<TElem, LiftingError> {
    let mut out = k.tga.one();
    for (i, &e) in a.iter().enumerate() {
        out = k.tga.mul(&out, &k.tga.pow(&k.elements[i], e)?)?;
    }
    Ok(out)
}

fn parse_z_word(d: &DiagonalDatum, w: &[u8]) -> Option<Vec<u32>> {
    let mut a = vec![0u32; d.rank()];
    let mut last = 0usize;
    let mut p = 0;
    while p < w.len() {
        let l = w[p] as usize;
        if l < last {
            return None;
        }
        let mut q = p;
        while q < w.len() && w[q] as usize == l {
            q += 1;
        }
        let run = (q - p) as u32;
        if run % d.n(l) != 0 || a[l] != 0 {
            return None;
        }
        a[l] = run / d.n(l);
        last = l;
        p = q;
    }
    Some(a)
}

/// Coefficients `t^a_{bc}` of `Δ(z^a) = z^a ⊗ 1 + h^a ⊗ z^a + Σ t^a_{bc} z^b h^c ⊗ z^c`.
pub fn t_coefficients(k: &KData, a: &[u32]) -> Result<BTreeMap<(Vec<u32>, Vec<u32>), Scalar>, LiftingError> {
    let d = k.datum();
    let grp = d.group();
    let za = z_power(k, a)?;
    let mut out = BTreeMap::new();
    for (((wl, gl), (wr, gr)), c) in k.tga.delta(&za) {
        let (Some(b), Some(cc)) = (parse_z_word(d, &wl), parse_z_word(d, &wr)) else {
            return Err(LiftingError::NotInK(alloc::format!("term {:?} ⊗ {:?}", wl, wr)));
        };
        let mut hc = grp.identity();
        for (i, &e) in cc.iter().enumerate() {
            hc = grp.mul(&hc, &grp.pow(&k.degrees[i], e as i64));
        }
        let sums: Vec<u32> = b.iter().zip(&cc).map(|(x, y)| x + y).collect();
        if !grp.is_identity(&gr) || gl != hc || sums != a {
            return Err(LiftingError::NotInK(alloc::format!("term {:?} g{:?} ⊗ {:?}", wl, gl.0, wr)));
        }
        out.insert((b, cc), c);
    }
    Ok(out)
}

fn f_of_z(k: &KData, a: &[u32]) -> Scalar {
    a.iter().enumerate().fold(Scalar::one(), |acc, (i, &e)| acc * pow_u(&k.values[i], e))
}

fn h_pow(k: &KData, a: &[u32]) -> GroupElement {
    let grp = k.datum().group();
    a.iter().enumerate().fold(grp.identity(), |acc, (i, &e)| grp.mul(&acc, &grp.pow(&k.degrees[i], e as i64)))
}

/// `u_a(f) = f(z^a)(1 − h^a) + Σ_{b,c≠0} t^a_{bc} f(z^b) u_c(f)`.
pub fn u_coefficients(k: &KData, a: &[u32]) -> Result<KgElement, LiftingError> {
    let d = k.datum();
    let one = d.group().identity();
    let fa = f_of_z(k, a);
    let mut u = KgElement::new();
    kg_add(&mut u, one, &fa);
    kg_add(&mut u, h_pow(k, a), &-&fa);
    if a.iter().sum::<u32>() <= 1 {
        return Ok(u);
    }
    for ((b, c), t) in t_coefficients(k, a)? {
        if b.iter().all(|&x| x == 0) || c.iter().all(|&x| x == 0) {
            continue;
        }
        let uc = u_coefficients(k, &c)?;
        u = kg_sum(&u, &kg_scale(&uc, &(&t * &f_of_z(k, &b))));
    }
    Ok(u)
}

/// Certificate that `U(D, f)` and `H(a)` coincide under `a_ii = f(z_i)`, `a_ij = f(z_ij)`.
#[derive(Clone, Debug)]
pub struct EquivalenceCertificate {
    pub dictionary: Vec<String>,
    pub relations_match: bool,
    pub structure_match: bool,
    pub differences: Vec<String>,
}

impl EquivalenceCertificate {
    pub fn passed(&self) -> bool {
        self.relations_match && self.structure_match
    }
}

/// Builds the presentation of `U(D, f)` from `Θ(f)` of the generators of `K(D)`.
pub fn u_presentation(k: &KData) -> Result<Presentation, LiftingError> {
    let d = k.datum();
    let mut power = Vec::new();
    let mut swap = BTreeMap::new();
    for (idx, g) in k.generators.iter().enumerate() {
        let z = &k.elements[idx];
        let image = theta(k, z)?;
        let rest = image.sub(z);
        if rest.degree() > 0 {
            return Err(LiftingError::NotInK(alloc::format!("Θ(f)({g}) − {g} has positive degree")));
        }
        let c = rest.group_part();
        match g {
            KGenerator::Power(_) => power.push(kg_scale(&c, &Scalar::from_i64(-1))),
            KGenerator::Link(i, j) => {
                swap.insert((*i, *j), kg_scale(&c, &d.q(*j, *i)));
            }
        }
    }
    Ok(Presentation::new(d.clone(), power, swap))
}

/// `U(D, f)` together with its certificate against `H(a)`.
pub fn lifting_from_f(d: &DiagonalDatum, f: &LiftingParams) -> Result<(HopfAlgebra, EquivalenceCertificate), LiftingError> {
    let cap = *d.ns().iter().max().expect("positive rank") as usize;
    let k = build_k_and_f(d, f, cap.max(2))?;
    let u = u_presentation(&k)?;
    let h = Presentation::of_params(d, f);
    let mut dictionary = Vec::new();
    for i in 0..d.rank() {
        dictionary.push(alloc::format!("a_{0}{0} = f(z{0}) = {1}", i + 1, f.diag[i]));
        for j in (i + 1)..d.rank() {
            dictionary.push(alloc::format!("a_{0}{1} = f(z{0}{1}) = {2}", i + 1, j + 1, f.a(i, j)));
        }
    }
    let relations_match = u == h;
    let ua = u.build_bialgebra();
    let ha = h.build_bialgebra();
    let differences = structure_differences(&ua, &ha, 5);
    let structure_match = differences.is_empty();
    let ua = build_antipode(&ua)?;
    Ok((ua, EquivalenceCertificate { dictionary, relations_match, structure_match, differences }))
}

/// Generators of `G'`: `g_i g_j` with `a_ij ≠ 0` and `g_k^{N_k}` with `a_kk ≠ 0`.
pub fn g_prime_generators(d: &DiagonalDatum, p: &LiftingParams) -> Vec<GroupElement> {
    let grp = d.group();
    let mut out = Vec::new();
    for i in 0..d.rank() {
        if !p.diag[i].is_zero() {
            out.push(grp.pow(d.g(i), d.n(i) as i64));
        }
    }
    for (&(i, j), v) in &p.link {
        if !v.is_zero() {
            out.push(grp.mul(d.g(i), d.g(j)));
        }
    }
    out
}

/// Characters of `G` trivial on `G'`, i.e. the grouplikes of `H(a)*`.
pub fn grouplikes_of_dual(l: &Lifting) -> Vec<Character> {
    let grp = l.datum.group();
    let (_, ann) = grp.subgroup_and_quotient(&g_prime_generators(&l.datum, &l.params)).expect("elements of G");
    ann
}

/// Characters `χ` for which `x^a g ↦ δ_{a,0} χ(g)` is multiplicative on `H`.
pub fn algebra_maps_by_enumeration(d: &DiagonalDatum, h: &HopfAlgebra) -> Vec<Character> {
    let grp = d.group();
    let ng = grp.order();
    let mut out = Vec::new();
    for chi in grp.characters() {
        let phi: Vec<Scalar> =
            (0..h.dim()).map(|i| if i < ng { d.char_value(&chi, &grp.element_at(i)) } else { Scalar::zero() }).collect();
        let ok = (0..h.dim()).all(|i| {
            (0..h.dim()).all(|j| {
                let lhs: Scalar = h.mul_basis(i, j).iter().map(|(k, c)| c * &phi[*k]).sum();
                lhs == &phi[i] * &phi[j]
            })
        });
        if ok {
            out.push(chi);
        }
    }
    out
}

/// Invariants of `H(a)*`.
#[derive(Clone, Debug)]
pub struct DualReport {
    pub dim: usize,
    pub g_prime: Vec<GroupElement>,
    pub grouplikes: Vec<Character>,
    pub enumerated_grouplikes: Vec<Character>,
    pub radical_dim: usize,
    pub coradical_dual_dim: usize,
    pub dual_pointed: bool,
    pub radical_meets_kg_trivially: bool,
}

pub fn dual_invariants(l: &Lifting) -> DualReport {
    let grp = l.datum.group();
    let (g_prime, _) = grp.subgroup_and_quotient(&g_prime_generators(&l.datum, &l.params)).expect("elements of G");
    let grouplikes = grouplikes_of_dual(l);
    let enumerated_grouplikes = algebra_maps_by_enumeration(&l.datum, &l.hopf);
    let rad = radical(l.hopf.algebra());
    let dim = l.hopf.dim();
    let coradical_dual_dim = dim - rad.len();
    DualReport {
        dim,
        g_prime,
        dual_pointed: coradical_dual_dim == grouplikes.len(),
        grouplikes,
        enumerated_grouplikes,
        radical_dim: rad.len(),
        coradical_dual_dim,
        radical_meets_kg_trivially: meets_group_algebra_trivially(&l.hopf, &rad),
    }
}

/// `dim H_n` of the coradical filtration of a lifting.
pub fn coradical_dims(l: &Lifting) -> Vec<usize> {
    coradical_filtration(&l.hopf).dims
}

/// Square matrix over the session field.
pub type Matrix = Vec<Vec<Scalar>>;

pub fn mat_identity(r: usize) -> Matrix {
    (0..r).map(|i| (0..r).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let r = a.len();
    (0..r).map(|i| (0..r).map(|j| (0..r).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

pub fn mat_lin(a: &Matrix, alpha: &Scalar, b: &Matrix, beta: &Scalar) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| &(alpha * x) + &(beta * y)).collect())
        .collect()
}

fn mat_pow(a: &Matrix, k: u32) -> Matrix {
    (0..k).fold(mat_identity(a.len()), |acc, _| mat_mul(&acc, a))
}

fn mat_is_zero(a: &Matrix) -> bool {
    a.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

/// An `r`-dimensional representation `g ↦ G`, `x ↦ X`, `y ↦ Y` of the algebra
/// `g^p = 1, gx = ξxg, gy = ξ^{-1}yg, x^p = 0 = y^p, xy − ξ^{-1}yx = g^2 − 1`.
#[derive(Clone, Debug)]
pub struct Irrep {
    pub p: u32,
    pub r: u32,
    pub xi: Scalar,
    pub psi: Scalar,
    pub y: Vec<Scalar>,
    pub g_mat: Matrix,
    pub x_mat: Matrix,
    pub y_mat: Matrix,
    pub relations: Vec<(&'static str, bool)>,
    pub span_dim: usize,
}

impl Irrep {
    pub fn relations_hold(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok)
    }

    pub fn irreducible(&self) -> bool {
        self.span_dim == (self.r * self.r) as usize
    }
}

/// `y_i = ξ (1 − ξ^{i−r}) (ξ^i − 1) (ξ − 1)^{-1}`.
pub fn irrep_y(xi: &Scalar, r: u32, i: u32) -> Scalar {
    let pw = |k: i64| xi.pow(k).expect("root of unity");
    let num = xi * &(&(Scalar::one() - pw(i as i64 - r as i64)) * &(pw(i as i64) - Scalar::one()));
    num.div(&(xi - &Scalar::one())).expect("ξ ≠ 1")
}

/// Builds the `r`-dimensional representation and checks relations and irreducibility.
pub fn build_irrep(field: &CyclotomicField, p: u32, r: u32) -> Result<Irrep, LiftingError> {
    if r == 0 || r > p {
        return Err(LiftingError::Shape(alloc::format!("dimension {r} outside 1..={p}")));
    }
    let xi = field.root_of_divisor(p, 1).map_err(|e| LiftingError::Configuration(alloc::format!("{e}")))?;
    let target = xi.pow(1 - r as i64).expect("root of unity");
    let psi = (0..p as i64)
        .map(|k| xi.pow(k).expect("root of unity"))
        .find(|c| c * c == target)
        .ok_or_else(|| {
            LiftingError::Configuration(alloc::format!("no ψ with ψ² = ξ^(1-{r}) among the {p}-th roots of unity"))
        })?;
    let ru = r as usize;
    let mut g_mat = vec![vec![Scalar::zero(); ru]; ru];
    let mut x_mat = vec![vec![Scalar::zero(); ru]; ru];
    let mut y_mat = vec![vec![Scalar::zero(); ru]; ru];
    let mut ys = Vec::new();
    for i in 0..ru {
        g_mat[i][i] = &psi * &xi.pow(i as i64).expect("root of unity");
        if i + 1 < ru {
            x_mat[i + 1][i] = Scalar::one();
            let yi = irrep_y(&xi, r, i as u32 + 1);
            y_mat[i][i + 1] = yi.clone();
            ys.push(yi);
        }
    }
    let id = mat_identity(ru);
    let one = Scalar::one();
    let xi_inv = xi.inv().expect("nonzero");
    let gx = mat_lin(&mat_mul(&g_mat, &x_mat), &one, &mat_mul(&x_mat, &g_mat), &-&xi);
    let gy = mat_lin(&mat_mul(&g_mat, &y_mat), &one, &mat_mul(&y_mat, &g_mat), &-&xi_inv);
    let lhs = mat_lin(&mat_mul(&x_mat, &y_mat), &one, &mat_mul(&y_mat, &x_mat), &-&xi_inv);
    let rhs = mat_lin(&mat_mul(&g_mat, &g_mat), &one, &id, &Scalar::from_i64(-1));
    let comm = mat_lin(&lhs, &one, &rhs, &Scalar::from_i64(-1));
    let relations = vec![
        ("g^p = 1", mat_pow(&g_mat, p) == id),
        ("gx = xi x g", mat_is_zero(&gx)),
        ("gy = xi^-1 y g", mat_is_zero(&gy)),
        ("x^p = 0", mat_is_zero(&mat_pow(&x_mat, p))),
        ("y^p = 0", mat_is_zero(&mat_pow(&y_mat, p))),
        ("xy - xi^-1 yx = g^2 - 1", mat_is_zero(&comm)),
    ];
    let mut vecs = Vec::new();
    let gp: Vec<Matrix> = (0..p).map(|i| mat_pow(&g_mat, i)).collect();
    let xp: Vec<Matrix> = (0..r).map(|i| mat_pow(&x_mat, i)).collect();
    let yp: Vec<Matrix> = (0..r).map(|i| mat_pow(&y_mat, i)).collect();
    for a in &gp {
        for b in &xp {
            let ab = mat_mul(a, b);
            for c in &yp {
                let m = mat_mul(&ab, c);
                let v: SparseVec =
                    m.iter().flatten().enumerate().filter(|(_, s)| !s.is_zero()).map(|(k, s)| (k, s.clone())).collect();
                vecs.push(v);
            }
        }
    }
    let span_dim = rank(&vecs);
    Ok(Irrep { p, r, xi, psi, y: ys, g_mat, x_mat, y_mat, relations, span_dim })
}
