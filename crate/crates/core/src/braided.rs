//! Diagonal braided vector spaces, braid group actions on tensor powers,
//! quantum symmetrizers and the free braided Hopf algebra `T(V)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::groups::{Character, FiniteAbelianGroup, GroupElement};
use crate::linalg::{nullspace, SparseVec};
use crate::scalars::{lcm_u32, CyclotomicField, Scalar, ScalarError};

/// Default upper bound on the number of basis words per tensor degree.
pub const DEFAULT_BUDGET: usize = 20_000;

/// Errors raised while building or using braided objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BraidedError {
    /// A datum failed validation.
    InvalidDatum(String),
    /// A requested computation exceeds the size budget.
    Budget { words: u128, budget: usize },
    /// An index or degree is out of range.
    Range(String),
}

impl fmt::Display for BraidedError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidedError::InvalidDatum(m) => write!(f, "invalid datum: {m}"),
            BraidedError::Budget { words, budget } => {
                write!(f, "size budget exceeded: {words} basis words > budget {budget}")
            }
            BraidedError::Range(m) => write!(f, "out of range: {m}"),
        }
    }
}

impl From<ScalarError> for BraidedError {
    fn from(e: ScalarError) -> Self {
        BraidedError::InvalidDatum(alloc::format!("{e}"))
    }
}

/// Group, marked elements `g_i`, characters `χ_i`, and truncation orders `N_i`
/// of a quantum linear space `V = ⊕ k x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalDatum {
    field: CyclotomicField,
    group: FiniteAbelianGroup,
    g: Vec<GroupElement>,
    chi: Vec<Character>,
    n: Vec<u32>,
    exponent: u32,
    // q_ij = ζ_exponent^{q_exp[i][j]}
    q_exp: Vec<Vec<u32>>,
    powers: Vec<Scalar>,
}

impl DiagonalDatum {
    /// Validates the datum and fixes the session field at `lcm(exp G, N_i)`.
    pub fn new(group: FiniteAbelianGroup, g: Vec<GroupElement>, chi: Vec<Character>) -> Result<Self, BraidedError> {
        Self::with_order(group, g, chi, None)
    }

    /// As [`DiagonalDatum::new`], with the session order enlarged to a multiple of `order`.
    pub fn with_order(
        group: FiniteAbelianGroup,
        g: Vec<GroupElement>,
        chi: Vec<Character>,
        order: Option<u32>,
    ) -> Result<Self, BraidedError> {
        if g.len() != chi.len() {
            return Err(BraidedError::InvalidDatum(alloc::format!(
                "{} group elements but {} characters",
                g.len(),
                chi.len()
            )));
        }
        if g.is_empty() {
            return Err(BraidedError::InvalidDatum("rank must be positive".into()));
        }
        for (i, (gi, ci)) in g.iter().zip(&chi).enumerate() {
            if !group.contains(gi) {
                return Err(BraidedError::InvalidDatum(alloc::format!("g_{} = {:?} is not in the group", i + 1, gi.0)));
            }
            if !group.contains_character(ci) {
                return Err(BraidedError::InvalidDatum(alloc::format!("chi_{} = {:?} is not a character", i + 1, ci.0)));
            }
        }
        let exponent = group.exponent();
        let theta = g.len();
        let q_exp: Vec<Vec<u32>> =
            (0..theta).map(|i| (0..theta).map(|j| group.pairing_exponent(&chi[j], &g[i])).collect()).collect();
        let mut n = Vec::with_capacity(theta);
        for i in 0..theta {
            let k = q_exp[i][i];
            if k == 0 {
                return Err(BraidedError::InvalidDatum(alloc::format!(
                    "q_{0}{0} = chi_{0}(g_{0}) = 1 gives an infinite-dimensional Nichols algebra",
                    i + 1
                )));
            }
            n.push(exponent / gcd(k, exponent));
        }
        for i in 0..theta {
            for j in (i + 1)..theta {
                if (q_exp[i][j] + q_exp[j][i]) % exponent != 0 {
                    return Err(BraidedError::InvalidDatum(alloc::format!(
                        "chi_{a}(g_{b}) * chi_{b}(g_{a}) != 1 for the pair ({a}, {b})",
                        a = i + 1,
                        b = j + 1
                    )));
                }
            }
        }
        let mut e = n.iter().fold(exponent, |a, &m| lcm_u32(a, m));
        if let Some(o) = order {
            e = lcm_u32(e, o);
        }
        let field = CyclotomicField::new(e)?;
        let powers = (0..exponent).map(|k| field.root_of_divisor(exponent, k as i64).expect("divides")).collect();
        Ok(DiagonalDatum { field, group, g, chi, n, exponent, q_exp, powers })
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    /// Rank `θ`.
    pub fn rank(&self) -> usize {
        self.g.len()
    }

    pub fn g(&self, i: usize) -> &GroupElement {
        &self.g[i]
    }

    pub fn chi(&self, i: usize) -> &Character {
        &self.chi[i]
    }

    pub fn gs(&self) -> &[GroupElement] {
        &self.g
    }

    pub fn chis(&self) -> &[Character] {
        &self.chi
    }

    /// Truncation order `N_i = ord(q_ii)`.
    pub fn n(&self, i: usize) -> u32 {
        self.n[i]
    }

    pub fn ns(&self) -> &[u32] {
        &self.n
    }

    /// Group exponent; every braiding scalar is a power of `ζ_exponent`.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// `ζ_exponent^k` in the session field.
    pub fn root(&self, k: i64) -> &Scalar {
        &self.powers[k.rem_euclid(self.exponent as i64) as usize]
    }

    /// Exponent of `q_ij = χ_j(g_i)`.
    pub fn q_exp(&self, i: usize, j: usize) -> u32 {
        self.q_exp[i][j]
    }

    /// `q_ij = χ_j(g_i)`.
    pub fn q(&self, i: usize, j: usize) -> Scalar {
        self.powers[self.q_exp[i][j] as usize].clone()
    }

    /// Exponent of `χ(h)`.
    pub fn char_exp(&self, chi: &Character, h: &GroupElement) -> u32 {
        self.group.pairing_exponent(chi, h)
    }

    /// `χ(h)` via the cached power table.
    pub fn char_value(&self, chi: &Character, h: &GroupElement) -> Scalar {
        self.powers[self.char_exp(chi, h) as usize].clone()
    }

    /// Whether `(i, j)` satisfies the quantum linear space compatibility.
    pub fn linkable(&self, i: usize, j: usize) -> bool {
        i != j && (self.q_exp[i][j] + self.q_exp[j][i]) % self.exponent == 0
    }

    /// The datum with the roles of `g_i` and `χ_i` exchanged; its braiding is the transpose.
    pub fn transpose(&self) -> DiagonalDatum {
        let g = self.chi.iter().map(|c| GroupElement(c.0.clone())).collect();
        let chi = self.g.iter().map(|x| Character(x.0.clone())).collect();
        DiagonalDatum::with_order(self.group.clone(), g, chi, Some(self.field.order())).expect("transpose of a valid datum")
    }

    /// Relabels generators: new generator `k` is old generator `perm[k]`.
    pub fn permuted(&self, perm: &[usize]) -> DiagonalDatum {
        let g = perm.iter().map(|&k| self.g[k].clone()).collect();
        let chi = perm.iter().map(|&k| self.chi[k].clone()).collect();
        DiagonalDatum::with_order(self.group.clone(), g, chi, Some(self.field.order())).expect("relabeling of a valid datum")
    }

    /// Number of PBW exponent vectors `0 ≤ a_i < N_i` with `Σ a_i = n`.
    pub fn pbw_count(&self, n: usize) -> usize {
        let mut counts = vec![0usize; n + 1];
        counts[0] = 1;
        for &m in &self.n {
            let mut next = vec![0usize; n + 1];
            for (d, &c) in counts.iter().enumerate() {
                for a in 0..(m as usize) {
                    if d + a <= n {
                        next[d + a] += c;
                    }
                }
            }
            counts = next;
        }
        counts[n]
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `θ × θ` matrix `(χ_j(g_i))`.
pub fn braiding_matrix(d: &DiagonalDatum) -> Vec<Vec<Scalar>> {
    (0..d.rank()).map(|i| (0..d.rank()).map(|j| d.q(i, j)).collect()).collect()
}

/// A basis word of `V^{⊗n}`; letters are zero-based generator indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TensorWord(pub Vec<u8>);

impl TensorWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &TensorWord) -> TensorWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        TensorWord(v)
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, l) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("⊗")?;
            }
            write!(f, "x{}", l + 1)?;
        }
        Ok(())
    }
}

/// Sparse combination of tensor words.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TensorElement {
    pub terms: BTreeMap<TensorWord, Scalar>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn word(w: TensorWord) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Scalar::one());
        TensorElement { terms }
    }

    /// The generator `x_i` (zero-based).
    pub fn generator(i: usize) -> Self {
        Self::word(TensorWord(vec![i as u8]))
    }

    pub fn unit() -> Self {
        Self::word(TensorWord(Vec::new()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: TensorWord, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let remove = {
            let e = self.terms.entry(w.clone()).or_insert_with(Scalar::zero);
            *e += c;
            e.is_zero()
        };
        if remove {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        if s.is_zero() {
            return TensorElement::zero();
        }
        TensorElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * s)).collect() }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        self.add(&other.scale(&Scalar::from_i64(-1)))
    }

    /// Product in the tensor algebra (concatenation).
    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), &(a * b));
            }
        }
        out
    }

    /// Common degree of the terms, if homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|w| w.len());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) {w}")?;
        }
        Ok(())
    }
}

/// Element of `T(V) ⊗ T(V)`.
pub type TensorPair = BTreeMap<(TensorWord, TensorWord), Scalar>;

fn pair_add(out: &mut TensorPair, key: (TensorWord, TensorWord), c: Scalar) {
    if c.is_zero() {
        return;
    }
    let remove = {
        let e = out.entry(key.clone()).or_insert_with(Scalar::zero);
        *e += &c;
        e.is_zero()
    };
    if remove {
        out.remove(&key);
    }
}

// Accumulates coefficients as multiplicities of powers of ζ_exponent.
struct PowerAccumulator {
    exponent: usize,
    counts: BTreeMap<TensorWord, Vec<i64>>,
}

impl PowerAccumulator {
    fn new(exponent: u32) -> Self {
        PowerAccumulator { exponent: exponent as usize, counts: BTreeMap::new() }
    }

    fn add(&mut self, w: TensorWord, exp: u32, mult: i64) {
        let n = self.exponent;
        let v = self.counts.entry(w).or_insert_with(|| vec![0; n]);
        v[exp as usize % n] += mult;
    }

    fn finish(self, d: &DiagonalDatum) -> TensorElement {
        let mut out = TensorElement::zero();
        for (w, counts) in self.counts {
            let c: Scalar =
                counts.iter().enumerate().filter(|(_, &m)| m != 0).map(|(k, &m)| d.root(k as i64) * &Scalar::from_i64(m)).sum();
            if !c.is_zero() {
                out.terms.insert(w, c);
            }
        }
        out
    }
}

fn check_budget(theta: usize, n: usize, budget: usize) -> Result<(), BraidedError> {
    let words = (theta as u128).saturating_pow(n as u32);
    if words > budget as u128 || n > 10 {
        return Err(BraidedError::Budget { words, budget });
    }
    Ok(())
}

// Applies σ_k (zero-based position k) to a word, returning the braiding exponent.
fn sigma_word(d: &DiagonalDatum, w: &mut [u8], k: usize) -> u32 {
    let (a, b) = (w[k] as usize, w[k + 1] as usize);
    w.swap(k, k + 1);
    d.q_exp(a, b)
}

/// Applies `1^{⊗(i-1)} ⊗ c ⊗ 1^{⊗(n-i-1)}`; `i` is one-based as in `σ_i`.
pub fn braid_generator_action(d: &DiagonalDatum, i: usize, t: &TensorElement) -> Result<TensorElement, BraidedError> {
    let mut out = TensorElement::zero();
    for (w, c) in &t.terms {
        if i == 0 || i >= w.len() {
            return Err(BraidedError::Range(alloc::format!("σ_{i} on a word of degree {}", w.len())));
        }
        let mut v = w.0.clone();
        let e = sigma_word(d, &mut v, i - 1);
        out.add_term(TensorWord(v), &(c * d.root(e as i64)));
    }
    Ok(out)
}

/// Permutation in one-line notation, zero-based: `perm[p]` is the image of `p`.
pub type Permutation = Vec<usize>;

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// Reduced-word conventions for the Matsumoto section.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReducedWord {
    /// Left-to-right bubble-sort passes.
    Bubble,
    /// Insertion sort; generally yields a different reduced word.
    Insertion,
}

/// Reduced word `(k_1, ..., k_m)` (zero-based) with `τ = s_{k_1} ∘ ... ∘ s_{k_m}`.
pub fn reduced_word(perm: &[usize], conv: ReducedWord) -> Vec<usize> {
    let mut arr = perm.to_vec();
    let mut swaps = Vec::new();
    let n = arr.len();
    match conv {
        ReducedWord::Bubble => loop {
            let mut changed = false;
            for k in 0..n.saturating_sub(1) {
                if arr[k] > arr[k + 1] {
                    arr.swap(k, k + 1);
                    swaps.push(k);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        },
        ReducedWord::Insertion => {
            for i in 1..n {
                let mut j = i;
                while j > 0 && arr[j - 1] > arr[j] {
                    arr.swap(j - 1, j);
                    swaps.push(j - 1);
                    j -= 1;
                }
            }
        }
    }
    // arr ∘ s_{a_1} ∘ ... ∘ s_{a_m} = id, hence τ = s_{a_m} ∘ ... ∘ s_{a_1}.
    swaps.reverse();
    swaps
}

/// A linear operator on `V^{⊗n}` stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorOperator {
    pub degree: usize,
    pub columns: BTreeMap<TensorWord, TensorElement>,
}

impl TensorOperator {
    pub fn apply(&self, t: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero();
        for (w, c) in &t.terms {
            if let Some(col) = self.columns.get(w) {
                out = out.add(&col.scale(c));
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &TensorOperator) -> TensorOperator {
        let columns = other.columns.iter().map(|(w, col)| (w.clone(), self.apply(col))).collect();
        TensorOperator { degree: self.degree, columns }
    }

    /// `A ⊗ B` acting on `V^{⊗(i+j)}`.
    pub fn tensor(a: &TensorOperator, b: &TensorOperator) -> TensorOperator {
        let mut columns = BTreeMap::new();
        for (u, ca) in &a.columns {
            for (v, cb) in &b.columns {
                columns.insert(u.concat(v), ca.mul(cb));
            }
        }
        TensorOperator { degree: a.degree + b.degree, columns }
    }
}

/// All words of length `n` over `θ` letters, in lexicographic order.
pub fn words(theta: usize, n: usize) -> Vec<TensorWord> {
    let mut out = vec![TensorWord(Vec::new())];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * theta);
        for w in &out {
            for l in 0..theta {
                let mut v = w.0.clone();
                v.push(l as u8);
                next.push(TensorWord(v));
            }
        }
        out = next;
    }
    out
}

fn lifted_sum(
    d: &DiagonalDatum,
    n: usize,
    perms: &[Permutation],
    conv: ReducedWord,
    budget: usize,
) -> Result<TensorOperator, BraidedError> {
    check_budget(d.rank(), n, budget)?;
    let lifts: Vec<Vec<usize>> = perms.iter().map(|p| reduced_word(p, conv)).collect();
    let mut columns = BTreeMap::new();
    for w in words(d.rank(), n) {
        let mut acc = PowerAccumulator::new(d.exponent());
        for lift in &lifts {
            let mut v = w.0.clone();
            let mut e = 0u32;
            // ρ(s_{k_1}) ... ρ(s_{k_m}): the rightmost factor acts first.
            for &k in lift.iter().rev() {
                e += sigma_word(d, &mut v, k);
            }
            acc.add(TensorWord(v), e % d.exponent(), 1);
        }
        columns.insert(w, acc.finish(d));
    }
    Ok(TensorOperator { degree: n, columns })
}

/// `S_n = Σ_τ ρ(u(τ))` with the bubble-sort Matsumoto section.
pub fn quantum_symmetrizer(d: &DiagonalDatum, n: usize, budget: usize) -> Result<TensorOperator, BraidedError> {
    quantum_symmetrizer_with(d, n, ReducedWord::Bubble, budget)
}

/// `S_n` with an explicit reduced-word convention.
pub fn quantum_symmetrizer_with(
    d: &DiagonalDatum,
    n: usize,
    conv: ReducedWord,
    budget: usize,
) -> Result<TensorOperator, BraidedError> {
    check_budget(d.rank(), n, budget)?;
    lifted_sum(d, n, &permutations(n), conv, budget)
}

/// Permutations increasing on `0..i` and on `i..i+j`.
pub fn shuffles(i: usize, j: usize) -> Vec<Permutation> {
    permutations(i + j)
        .into_iter()
        .filter(|p| p[..i].windows(2).all(|w| w[0] < w[1]) && p[i..].windows(2).all(|w| w[0] < w[1]))
        .collect()
}

/// `S_{i,j}`: sum of the lifts of the `(i, j)`-shuffles.
pub fn shuffle_operator(d: &DiagonalDatum, i: usize, j: usize, budget: usize) -> Result<TensorOperator, BraidedError> {
    check_budget(d.rank(), i + j, budget)?;
    lifted_sum(d, i + j, &shuffles(i, j), ReducedWord::Bubble, budget)
}

/// Basis of `ker S_n`.
pub fn nichols_relations(d: &DiagonalDatum, n: usize, budget: usize) -> Result<Vec<TensorElement>, BraidedError> {
    let s = quantum_symmetrizer(d, n, budget)?;
    Ok(operator_kernel(&s))
}

/// Kernel basis of an operator, via elimination on its matrix.
pub fn operator_kernel(s: &TensorOperator) -> Vec<TensorElement> {
    let basis: Vec<TensorWord> = s.columns.keys().cloned().collect();
    let index: BTreeMap<&TensorWord, usize> = basis.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (c, col) in s.columns.values().enumerate() {
        for (w, v) in &col.terms {
            rows.entry(index[w]).or_default().push((c, v.clone()));
        }
    }
    let rows: Vec<SparseVec> = rows.into_values().collect();
    nullspace(&rows, basis.len())
        .into_iter()
        .map(|v| TensorElement { terms: v.into_iter().map(|(k, c)| (basis[k].clone(), c)).collect() })
        .collect()
}

/// Rank of an operator.
pub fn operator_rank(s: &TensorOperator) -> usize {
    let n = s.columns.len();
    n - operator_kernel(s).len()
}

/// `[a, b]_c = ab − m c(a ⊗ b)` in the tensor algebra.
pub fn braided_commutator(d: &DiagonalDatum, a: &TensorElement, b: &TensorElement) -> TensorElement {
    let mut out = a.mul(b);
    for (u, ca) in &a.terms {
        for (v, cb) in &b.terms {
            let mut e = 0u32;
            for &s in &u.0 {
                for &t in &v.0 {
                    e += d.q_exp(s as usize, t as usize);
                }
            }
            let c = -(&(ca * cb) * d.root(e as i64));
            out.add_term(v.concat(u), &c);
        }
    }
    out
}

/// `ad_c(x_i)^k (y)`.
pub fn ad_c_power(d: &DiagonalDatum, i: usize, k: usize, y: &TensorElement) -> TensorElement {
    let x = TensorElement::generator(i);
    (0..k).fold(y.clone(), |acc, _| braided_commutator(d, &x, &acc))
}

/// Comultiplication of the free braided Hopf algebra `T(V)`.
pub fn shuffle_coproduct(d: &DiagonalDatum, t: &TensorElement, budget: usize) -> Result<TensorPair, BraidedError> {
    let mut out = TensorPair::new();
    for (w, c) in &t.terms {
        let n = w.len();
        if n > 20 || (1usize << n) > budget.max(1 << 10) {
            return Err(BraidedError::Budget { words: 1u128 << n, budget });
        }
        for mask in 0u32..(1u32 << n) {
            // bit p set: letter p goes to the left factor
            let mut e = 0u32;
            let mut left = Vec::new();
            let mut right = Vec::new();
            for p in 0..n {
                if mask >> p & 1 == 1 {
                    left.push(w.0[p]);
                    for q in 0..p {
                        if mask >> q & 1 == 0 {
                            e += d.q_exp(w.0[q] as usize, w.0[p] as usize);
                        }
                    }
                } else {
                    right.push(w.0[p]);
                }
            }
            pair_add(&mut out, (TensorWord(left), TensorWord(right)), c * d.root(e as i64));
        }
    }
    Ok(out)
}

/// `t ⊗ 1 + 1 ⊗ t`.
pub fn primitive_image(t: &TensorElement) -> TensorPair {
    let mut out = TensorPair::new();
    let one = TensorWord(Vec::new());
    for (w, c) in &t.terms {
        pair_add(&mut out, (w.clone(), one.clone()), c.clone());
        pair_add(&mut out, (one.clone(), w.clone()), c.clone());
    }
    out
}

/// Element of `T(V)^{⊗3}`.
pub type TensorTriple = BTreeMap<(TensorWord, TensorWord, TensorWord), Scalar>;

/// `(Δ ⊗ 1)Δ` and `(1 ⊗ Δ)Δ` of `t`.
pub fn coassociativity_sides(d: &DiagonalDatum, t: &TensorElement, budget: usize) -> Result<(TensorTriple, TensorTriple), BraidedError> {
    let delta = shuffle_coproduct(d, t, budget)?;
    let mut left = TensorTriple::new();
    let mut right = TensorTriple::new();
    let add = |m: &mut TensorTriple, k: (TensorWord, TensorWord, TensorWord), c: Scalar| {
        if c.is_zero() {
            return;
        }
        let e = m.entry(k.clone()).or_insert_with(Scalar::zero);
        *e += &c;
        if e.is_zero() {
            m.remove(&k);
        }
    };
    for ((u, v), c) in &delta {
        for ((u1, u2), c1) in shuffle_coproduct(d, &TensorElement::word(u.clone()), budget)? {
            add(&mut left, (u1, u2, v.clone()), c * &c1);
        }
        for ((v1, v2), c2) in shuffle_coproduct(d, &TensorElement::word(v.clone()), budget)? {
            add(&mut right, (u.clone(), v1, v2), c * &c2);
        }
    }
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn taft(n: u32) -> DiagonalDatum {
        let g = FiniteAbelianGroup::cyclic(n);
        DiagonalDatum::new(g.clone(), vec![g.element(&[1])], vec![g.character(&[1])]).unwrap()
    }

    #[test]
    fn rank_one_s2() {
        let d = taft(5);
        let s = quantum_symmetrizer(&d, 2, DEFAULT_BUDGET).unwrap();
        let w = TensorElement::word(TensorWord(vec![0, 0]));
        let q = d.q(0, 0);
        assert_eq!(s.apply(&w), w.scale(&(Scalar::one() + q)));
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(shuffles(2, 2).len(), 6);
    }

    #[test]
    fn reduced_words_have_inversion_length() {
        for p in permutations(5) {
            let inv = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).filter(|&(a, b)| p[a] > p[b]).count();
            assert_eq!(reduced_word(&p, ReducedWord::Bubble).len(), inv);
            assert_eq!(reduced_word(&p, ReducedWord::Insertion).len(), inv);
        }
    }

    #[test]
    fn qls_condition_rejected() {
        let g = FiniteAbelianGroup::cyclic(6);
        let r = DiagonalDatum::new(g.clone(), vec![g.element(&[1]), g.element(&[1])], vec![g.character(&[2]), g.character(&[2])]);
        assert!(matches!(r, Err(BraidedError::InvalidDatum(m)) if m.contains("(1, 2)")));
    }
}
