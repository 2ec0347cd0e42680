//! Finite abelian groups as products of cyclic groups, with characters.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::scalars::{lcm_u32, CyclotomicField, Scalar, ScalarError};

/// Errors from group operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    Mismatch(String),
    Field(ScalarError),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::Mismatch(m) => write!(f, "group mismatch: {m}"),
            GroupError::Field(e) => write!(f, "{e}"),
        }
    }
}

impl From<ScalarError> for GroupError {
    fn from(e: ScalarError) -> Self {
        GroupError::Field(e)
    }
}

/// `Z/m_1 × ... × Z/m_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    orders: Vec<u32>,
}

/// Element as a vector of residues.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement(pub Vec<u32>);

/// Character in dual coordinates: `χ(g) = Π ζ_{m_i}^{χ_i g_i}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Character(pub Vec<u32>);

impl FiniteAbelianGroup {
    /// Panics on an empty factor list or a zero order.
    pub fn new(orders: Vec<u32>) -> Self {
        assert!(orders.iter().all(|&m| m >= 1), "cyclic factor orders must be positive");
        FiniteAbelianGroup { orders }
    }

    pub fn cyclic(m: u32) -> Self {
        FiniteAbelianGroup::new(alloc::vec![m])
    }

    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn order(&self) -> usize {
        self.orders.iter().map(|&m| m as usize).product()
    }

    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1, |a, &m| lcm_u32(a, m))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(alloc::vec![0; self.orders.len()])
    }

    pub fn trivial_character(&self) -> Character {
        Character(alloc::vec![0; self.orders.len()])
    }

    /// Reduces arbitrary integer exponents into an element.
    pub fn element(&self, exps: &[i64]) -> GroupElement {
        assert_eq!(exps.len(), self.orders.len());
        GroupElement(exps.iter().zip(&self.orders).map(|(&e, &m)| e.rem_euclid(m as i64) as u32).collect())
    }

    pub fn character(&self, exps: &[i64]) -> Character {
        Character(self.element(exps).0)
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.0.len() == self.orders.len() && g.0.iter().zip(&self.orders).all(|(&e, &m)| e < m)
    }

    pub fn contains_character(&self, c: &Character) -> bool {
        c.0.len() == self.orders.len() && c.0.iter().zip(&self.orders).all(|(&e, &m)| e < m)
    }

    pub fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&b.0).zip(&self.orders).map(|((&x, &y), &m)| (x + y) % m).collect())
    }

    pub fn inv(&self, a: &GroupElement) -> GroupElement {
        GroupElement(a.0.iter().zip(&self.orders).map(|(&x, &m)| (m - x) % m).collect())
    }

    pub fn pow(&self, a: &GroupElement, k: i64) -> GroupElement {
        GroupElement(
            a.0.iter().zip(&self.orders).map(|(&x, &m)| ((x as i64 * k).rem_euclid(m as i64)) as u32).collect(),
        )
    }

    pub fn is_identity(&self, a: &GroupElement) -> bool {
        a.0.iter().all(|&x| x == 0)
    }

    pub fn char_mul(&self, a: &Character, b: &Character) -> Character {
        Character(self.mul(&GroupElement(a.0.clone()), &GroupElement(b.0.clone())).0)
    }

    pub fn char_pow(&self, a: &Character, k: i64) -> Character {
        Character(self.pow(&GroupElement(a.0.clone()), k).0)
    }

    pub fn char_inv(&self, a: &Character) -> Character {
        self.char_pow(a, -1)
    }

    pub fn is_trivial_character(&self, a: &Character) -> bool {
        a.0.iter().all(|&x| x == 0)
    }

    /// Mixed-radix index, first factor most significant.
    pub fn index_of(&self, g: &GroupElement) -> usize {
        g.0.iter().zip(&self.orders).fold(0usize, |acc, (&e, &m)| acc * m as usize + e as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut v = alloc::vec![0u32; self.orders.len()];
        for (slot, &m) in v.iter_mut().zip(&self.orders).rev() {
            *slot = (idx % m as usize) as u32;
            idx /= m as usize;
        }
        GroupElement(v)
    }

    /// All elements in index order.
    pub fn elements(&self) -> Vec<GroupElement> {
        (0..self.order()).map(|i| self.element_at(i)).collect()
    }

    pub fn characters(&self) -> Vec<Character> {
        self.elements().into_iter().map(|g| Character(g.0)).collect()
    }

    /// Exponent `k` with `χ(g) = ζ_exp^k`, `exp` the group exponent.
    pub fn pairing_exponent(&self, chi: &Character, g: &GroupElement) -> u32 {
        let e = self.exponent() as u64;
        let mut s = 0u64;
        for ((&c, &x), &m) in chi.0.iter().zip(&g.0).zip(&self.orders) {
            s += (e / m as u64) * ((c as u64 * x as u64) % m as u64);
        }
        (s % e) as u32
    }

    /// `χ(g)` in the session field.
    pub fn char_eval(&self, field: &CyclotomicField, chi: &Character, g: &GroupElement) -> Result<Scalar, GroupError> {
        if !self.contains_character(chi) || !self.contains(g) {
            return Err(GroupError::Mismatch(alloc::format!("{chi:?} / {g:?} not in group {:?}", self.orders)));
        }
        Ok(field.root_of_divisor(self.exponent(), self.pairing_exponent(chi, g) as i64)?)
    }

    /// Order of an element.
    pub fn element_order(&self, g: &GroupElement) -> u32 {
        g.0.iter().zip(&self.orders).fold(1, |acc, (&x, &m)| {
            let o = m / gcd(x, m);
            lcm_u32(acc, o)
        })
    }

    /// Subgroup generated by `gens` and its annihilator in the dual group.
    pub fn subgroup_and_quotient(&self, gens: &[GroupElement]) -> Result<(Vec<GroupElement>, Vec<Character>), GroupError> {
        for g in gens {
            if !self.contains(g) {
                return Err(GroupError::Mismatch(alloc::format!("generator {g:?} not in group {:?}", self.orders)));
            }
        }
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        let id = self.identity();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(h) = queue.pop_front() {
            for g in gens {
                let n = self.mul(&h, g);
                if seen.insert(n.clone()) {
                    queue.push_back(n);
                }
            }
        }
        let sub: Vec<GroupElement> = seen.into_iter().collect();
        let ann = self
            .characters()
            .into_iter()
            .filter(|chi| gens.iter().all(|g| self.pairing_exponent(chi, g) == 0))
            .collect();
        Ok((sub, ann))
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_character() {
        let g = FiniteAbelianGroup::cyclic(6);
        let k = CyclotomicField::new(6).unwrap();
        let v = g.char_eval(&k, &g.character(&[1]), &g.element(&[1])).unwrap();
        assert_eq!(v, Scalar::root(6, 1));
        for x in g.elements() {
            assert!(g.char_eval(&k, &g.trivial_character(), &x).unwrap().is_one());
        }
    }

    #[test]
    fn index_round_trip() {
        let g = FiniteAbelianGroup::new(alloc::vec![2, 3, 4]);
        for i in 0..g.order() {
            assert_eq!(g.index_of(&g.element_at(i)), i);
        }
    }

    #[test]
    fn trivial_generators() {
        let g = FiniteAbelianGroup::cyclic(6);
        let (s, a) = g.subgroup_and_quotient(&[g.identity()]).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(a.len(), 6);
    }
}
