//! Exact arithmetic in cyclotomic fields `Q(ζ_E)` and q-combinatorics.
//!
//! A [`Scalar`] is a residue modulo the cyclotomic polynomial `Φ_E`, stored as
//! `φ(E)` integer numerators over one positive common denominator. Small values
//! live in machine integers and fall back to big integers on overflow.
//!
//! Scalars carry their own order `E`. Order 1 holds the rationals. Binary
//! operations on scalars of different orders embed both into the field of the
//! least common multiple, so rational constants mix freely with roots of unity.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

include!(concat!(env!("OUT_DIR"), "/cyclotomic.rs"));

/// Errors raised by field operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScalarError {
    DivisionByZero,
    /// The requested order is not supported or does not match the session field.
    Configuration(String),
}

impl fmt::Display for ScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarError::DivisionByZero => f.write_str("division by zero"),
            ScalarError::Configuration(m) => write!(f, "configuration error: {m}"),
        }
    }
}

/// Largest supported cyclotomic order.
pub fn max_order() -> u32 {
    MAX_ORDER
}

fn phi_poly(order: u32) -> &'static [i64] {
    CYCLOTOMIC[order as usize]
}

/// Euler's totient, read off the degree of `Φ_n`.
pub fn euler_phi(order: u32) -> usize {
    phi_poly(order).len() - 1
}

fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple of two positive integers.
pub fn lcm_u32(a: u32, b: u32) -> u32 {
    (a as u64 / gcd_u64(a as u64, b as u64) * b as u64) as u32
}

type Coeffs = SmallVec<[i64; 8]>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Small { num: Coeffs, den: i64 },
    Big(Box<BigRepr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct BigRepr {
    num: Vec<BigInt>,
    den: BigInt,
}

/// An exact element of `Q(ζ_E)`.
#[derive(Clone, Debug)]
pub struct Scalar {
    order: u32,
    repr: Repr,
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a as i128
}

// Reduces a polynomial with exponents below 2E modulo Φ_E in place.
fn reduce_i128(buf: &mut Vec<i128>, order: u32) -> Option<()> {
    let e = order as usize;
    if buf.len() > e {
        for k in (e..buf.len()).rev() {
            let c = buf[k];
            if c != 0 {
                buf[k - e] = buf[k - e].checked_add(c)?;
                buf[k] = 0;
            }
        }
        buf.truncate(e);
    }
    let phi = phi_poly(order);
    let d = phi.len() - 1;
    for k in (d..buf.len()).rev() {
        let c = buf[k];
        if c != 0 {
            buf[k] = 0;
            for (t, &p) in phi[..d].iter().enumerate() {
                if p != 0 {
                    let v = c.checked_mul(p as i128)?;
                    buf[k - d + t] = buf[k - d + t].checked_sub(v)?;
                }
            }
        }
    }
    buf.resize(d, 0);
    Some(())
}

fn reduce_big(buf: &mut Vec<BigInt>, order: u32) {
    let e = order as usize;
    if buf.len() > e {
        for k in (e..buf.len()).rev() {
            let c = core::mem::take(&mut buf[k]);
            buf[k - e] += c;
        }
        buf.truncate(e);
    }
    let phi = phi_poly(order);
    let d = phi.len() - 1;
    for k in (d..buf.len()).rev() {
        let c = core::mem::take(&mut buf[k]);
        if !c.is_zero() {
            for (t, &p) in phi[..d].iter().enumerate() {
                if p != 0 {
                    buf[k - d + t] -= &c * p;
                }
            }
        }
    }
    buf.resize(d, BigInt::zero());
}

fn small_from_i128(num: &[i128], den: i128) -> Option<Repr> {
    let mut den = den;
    let mut num: SmallVec<[i128; 8]> = num.iter().copied().collect();
    if den < 0 {
        den = den.checked_neg()?;
        for c in num.iter_mut() {
            *c = c.checked_neg()?;
        }
    }
    let mut g = den;
    for &c in num.iter() {
        if g == 1 {
            break;
        }
        g = gcd_i128(g, c);
    }
    if num.iter().all(|&c| c == 0) {
        g = den;
    }
    let den = den / g;
    let mut out = Coeffs::with_capacity(num.len());
    for c in num {
        out.push(i64::try_from(c / g).ok()?);
    }
    Some(Repr::Small { num: out, den: i64::try_from(den).ok()? })
}

fn big_normalize(mut num: Vec<BigInt>, mut den: BigInt) -> Repr {
    if den.is_negative() {
        den = -den;
        for c in num.iter_mut() {
            *c = -core::mem::take(c);
        }
    }
    if num.iter().all(|c| c.is_zero()) {
        den = BigInt::one();
    } else {
        let mut g = den.clone();
        for c in num.iter() {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            den /= &g;
            for c in num.iter_mut() {
                *c /= &g;
            }
        }
    }
    if let Some(d) = den.to_i64() {
        let mut small = Coeffs::with_capacity(num.len());
        let mut ok = true;
        for c in num.iter() {
            match c.to_i64() {
                Some(v) => small.push(v),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Repr::Small { num: small, den: d };
        }
    }
    Repr::Big(Box::new(BigRepr { num, den }))
}

impl Repr {
    fn to_big(&self) -> (Vec<BigInt>, BigInt) {
        match self {
            Repr::Small { num, den } => (num.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(*den)),
            Repr::Big(b) => (b.num.clone(), b.den.clone()),
        }
    }
    fn is_zero(&self) -> bool {
        match self {
            Repr::Small { num, .. } => num.iter().all(|&c| c == 0),
            Repr::Big(b) => b.num.iter().all(|c| c.is_zero()),
        }
    }
}

impl Scalar {
    /// The rational number zero.
    pub fn zero() -> Self {
        Scalar::from_i64(0)
    }

    /// The rational number one.
    pub fn one() -> Self {
        Scalar::from_i64(1)
    }

    pub fn from_i64(v: i64) -> Self {
        let mut num = Coeffs::new();
        num.push(v);
        Scalar { order: 1, repr: Repr::Small { num, den: 1 } }
    }

    /// The rational `n / d`.
    pub fn from_ratio(n: i64, d: i64) -> Result<Self, ScalarError> {
        if d == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        let repr = small_from_i128(&[n as i128], d as i128).expect("ratio of i64 fits");
        Ok(Scalar { order: 1, repr })
    }

    /// The rational `n / d` from big integers.
    pub fn from_big_ratio(n: BigInt, d: BigInt) -> Result<Self, ScalarError> {
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar { order: 1, repr: big_normalize(vec![n], d) })
    }

    /// Builds `Σ c_k ζ_E^k` from rational coefficients `(n_k, d_k)` of any length.
    pub fn from_power_coeffs(order: u32, coeffs: &[(BigInt, BigInt)]) -> Result<Self, ScalarError> {
        check_order(order)?;
        let mut acc = Scalar::zero_of(order);
        for (k, (n, d)) in coeffs.iter().enumerate() {
            let c = Scalar::from_big_ratio(n.clone(), d.clone())?;
            acc += &(&c * &Scalar::root(order, k as i64));
        }
        Ok(acc)
    }

    fn zero_of(order: u32) -> Self {
        let d = euler_phi(order);
        Scalar { order, repr: Repr::Small { num: SmallVec::from_elem(0, d), den: 1 } }
    }

    /// `ζ_order^k` in canonical form.
    ///
    /// # Panics
    /// Panics if `order` is zero or exceeds [`max_order`].
    pub fn root(order: u32, k: i64) -> Self {
        assert!(order >= 1 && order <= MAX_ORDER, "unsupported cyclotomic order {order}");
        let e = order as i64;
        let k = k.rem_euclid(e) as usize;
        let mut buf = vec![0i128; k + 1];
        buf[k] = 1;
        reduce_i128(&mut buf, order).expect("roots of unity have small coefficients");
        let repr = small_from_i128(&buf, 1).expect("small");
        Scalar { order, repr }.canonical()
    }

    // Orders 1 and 2 both describe Q; keep a single representative.
    fn canonical(mut self) -> Self {
        if self.order == 2 {
            self.order = 1;
        }
        self
    }

    /// Cyclotomic order of the field this value is stored in.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Small { num, den } => *den == 1 && num[0] == 1 && num[1..].iter().all(|&c| c == 0),
            Repr::Big(_) => false,
        }
    }

    /// True when the value lies in `Q`.
    pub fn is_rational(&self) -> bool {
        match &self.repr {
            Repr::Small { num, .. } => num[1..].iter().all(|&c| c == 0),
            Repr::Big(b) => b.num[1..].iter().all(|c| c.is_zero()),
        }
    }

    /// Power-basis coefficients `(numerator, denominator)` in lowest terms.
    pub fn coefficients(&self) -> Vec<(BigInt, BigInt)> {
        let (num, den) = self.repr.to_big();
        num.into_iter()
            .map(|n| {
                let g = n.gcd(&den);
                if n.is_zero() {
                    (n, BigInt::one())
                } else {
                    (&n / &g, &den / &g)
                }
            })
            .collect()
    }

    /// Embeds the value into `Q(ζ_target)`; `order` must divide `target`.
    pub fn lift(&self, target: u32) -> Scalar {
        if target == self.order || (self.order == 1 && target <= 2) {
            return self.clone();
        }
        assert!(target % self.order == 0, "cannot embed order {} into {}", self.order, target);
        let step = (target / self.order) as usize;
        let target_d = euler_phi(target);
        if self.order == 1 {
            let repr = match &self.repr {
                Repr::Small { num, den } => {
                    let mut v = SmallVec::from_elem(0, target_d);
                    v[0] = num[0];
                    Repr::Small { num: v, den: *den }
                }
                Repr::Big(b) => {
                    let mut v = vec![BigInt::zero(); target_d];
                    v[0] = b.num[0].clone();
                    Repr::Big(Box::new(BigRepr { num: v, den: b.den.clone() }))
                }
            };
            return Scalar { order: target, repr };
        }
        self.map_exponents(target, |i| i * step)
    }

    fn map_exponents(&self, target: u32, f: impl Fn(usize) -> usize) -> Scalar {
        let e = target as usize;
        if let Repr::Small { num, den } = &self.repr {
            let mut buf = vec![0i128; e];
            for (i, &c) in num.iter().enumerate() {
                buf[f(i) % e] += c as i128;
            }
            if reduce_i128(&mut buf, target).is_some() {
                if let Some(repr) = small_from_i128(&buf, *den as i128) {
                    return Scalar { order: target, repr };
                }
            }
        }
        let (num, den) = self.repr.to_big();
        let mut buf = vec![BigInt::zero(); e];
        for (i, c) in num.into_iter().enumerate() {
            buf[f(i) % e] += c;
        }
        reduce_big(&mut buf, target);
        Scalar { order: target, repr: big_normalize(buf, den) }
    }

    /// Galois conjugate `ζ ↦ ζ^k` for `k` coprime to the order.
    pub fn conjugate(&self, k: u32) -> Scalar {
        if self.order <= 2 {
            return self.clone();
        }
        let k = k as usize;
        self.map_exponents(self.order, |i| i * k)
    }

    fn aligned<'a>(a: &'a Scalar, b: &'a Scalar) -> (alloc::borrow::Cow<'a, Scalar>, alloc::borrow::Cow<'a, Scalar>) {
        use alloc::borrow::Cow;
        if a.order == b.order {
            (Cow::Borrowed(a), Cow::Borrowed(b))
        } else {
            let l = lcm_u32(a.order, b.order);
            assert!(l <= MAX_ORDER, "cyclotomic order {l} exceeds supported maximum");
            let la = if a.order == l { Cow::Borrowed(a) } else { Cow::Owned(a.lift(l)) };
            let lb = if b.order == l { Cow::Borrowed(b) } else { Cow::Owned(b.lift(l)) };
            (la, lb)
        }
    }

    fn add_impl(a: &Scalar, b: &Scalar, negate_b: bool) -> Scalar {
        if b.is_zero() {
            return a.clone();
        }
        if a.is_zero() {
            return if negate_b { -b } else { b.clone() };
        }
        let (a, b) = Scalar::aligned(a, b);
        let order = a.order;
        if let (Repr::Small { num: na, den: da }, Repr::Small { num: nb, den: db }) = (&a.repr, &b.repr) {
            if let Some(r) = (|| {
                let (da, db) = (*da as i128, *db as i128);
                let g = gcd_i128(da, db);
                let fa = db / g;
                let fb = da / g;
                let den = da.checked_mul(fa)?;
                let mut buf: SmallVec<[i128; 8]> = SmallVec::with_capacity(na.len());
                for (&x, &y) in na.iter().zip(nb.iter()) {
                    let x = (x as i128).checked_mul(fa)?;
                    let y = (y as i128).checked_mul(fb)?;
                    buf.push(if negate_b { x.checked_sub(y)? } else { x.checked_add(y)? });
                }
                small_from_i128(&buf, den)
            })() {
                return Scalar { order, repr: r };
            }
        }
        let (na, da) = a.repr.to_big();
        let (nb, db) = b.repr.to_big();
        let num = na
            .iter()
            .zip(nb.iter())
            .map(|(x, y)| if negate_b { x * &db - y * &da } else { x * &db + y * &da })
            .collect();
        Scalar { order, repr: big_normalize(num, da * db) }
    }

    fn mul_impl(a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() || b.is_zero() {
            let order = if a.order == b.order { a.order } else { lcm_u32(a.order, b.order) };
            return Scalar::zero_of(order).canonical();
        }
        if a.order == 1 && a.is_one() {
            return b.clone();
        }
        if b.order == 1 && b.is_one() {
            return a.clone();
        }
        let (a, b) = Scalar::aligned(a, b);
        let order = a.order;
        if let (Repr::Small { num: na, den: da }, Repr::Small { num: nb, den: db }) = (&a.repr, &b.repr) {
            if let Some(r) = (|| {
                let d = na.len();
                let mut buf = vec![0i128; 2 * d - 1];
                for (i, &x) in na.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in nb.iter().enumerate() {
                        if y != 0 {
                            buf[i + j] = buf[i + j].checked_add((x as i128).checked_mul(y as i128)?)?;
                        }
                    }
                }
                reduce_i128(&mut buf, order)?;
                let den = (*da as i128).checked_mul(*db as i128)?;
                small_from_i128(&buf, den)
            })() {
                return Scalar { order, repr: r };
            }
        }
        let (na, da) = a.repr.to_big();
        let (nb, db) = b.repr.to_big();
        let d = na.len();
        let mut buf = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in na.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in nb.iter().enumerate() {
                if !y.is_zero() {
                    buf[i + j] += x * y;
                }
            }
        }
        reduce_big(&mut buf, order);
        Scalar { order, repr: big_normalize(buf, da * db) }
    }

    /// Multiplicative inverse, computed as a product of Galois conjugates over the norm.
    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if self.is_rational() {
            let (num, den) = self.repr.to_big();
            let mut out = Scalar::from_big_ratio(den, num[0].clone())?;
            if self.order > 1 {
                out = out.lift(self.order);
            }
            return Ok(out);
        }
        let e = self.order;
        let mut p = Scalar::one().lift(e);
        for k in 2..e {
            if gcd_u64(k as u64, e as u64) == 1 {
                p = &p * &self.conjugate(k);
            }
        }
        let norm = self * &p;
        debug_assert!(norm.is_rational());
        let ninv = norm.inv()?;
        Ok(&p * &ninv)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, exp: i64) -> Result<Scalar, ScalarError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Scalar::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    /// Division; fails on a zero divisor.
    pub fn div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self * &other.inv()?)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.repr == other.repr;
        }
        let (a, b) = Scalar::aligned(self, other);
        a.repr == b.repr
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::from_i64(v)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        let repr = match &self.repr {
            Repr::Small { num, den } if num.iter().all(|&c| c != i64::MIN) => {
                Repr::Small { num: num.iter().map(|&c| -c).collect(), den: *den }
            }
            r => {
                let (num, den) = r.to_big();
                big_normalize(num.into_iter().map(|c| -c).collect(), den)
            }
        };
        Scalar { order: self.order, repr }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $body(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $body(&self, &rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $body(&self, rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| Scalar::add_impl(a, b, false));
binop!(Sub, sub, |a, b| Scalar::add_impl(a, b, true));
binop!(Mul, mul, Scalar::mul_impl);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = Scalar::add_impl(self, rhs, false);
    }
}
impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = Scalar::add_impl(self, &rhs, false);
    }
}
impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = Scalar::add_impl(self, rhs, true);
    }
}
impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = Scalar::add_impl(self, &rhs, true);
    }
}
impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = Scalar::mul_impl(self, rhs);
    }
}

impl core::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl fmt::Display for Scalar {
    /// Renders `Σ c_k ζ_E^k` as e.g. `1/2 - 3*z6 + z6^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coeffs = self.coefficients();
        let mut first = true;
        for (k, (n, d)) in coeffs.iter().enumerate() {
            if n.is_zero() {
                continue;
            }
            let neg = n.is_negative();
            let mag = n.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one() && d.is_one();
            let coeff = if d.is_one() { alloc::format!("{mag}") } else { alloc::format!("{mag}/{d}") };
            match k {
                0 => f.write_str(&coeff)?,
                _ => {
                    if !unit {
                        write!(f, "{coeff}*")?;
                    }
                    write!(f, "z{}", self.order)?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn check_order(order: u32) -> Result<(), ScalarError> {
    if order == 0 || order > MAX_ORDER {
        return Err(ScalarError::Configuration(alloc::format!(
            "cyclotomic order {order} outside 1..={MAX_ORDER}"
        )));
    }
    Ok(())
}

/// The session field `Q(ζ_E)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
}

impl CyclotomicField {
    pub fn new(order: u32) -> Result<Self, ScalarError> {
        check_order(order)?;
        Ok(CyclotomicField { order })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Dimension over `Q`.
    pub fn degree(&self) -> usize {
        euler_phi(self.order)
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero_of(self.order).canonical()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one().lift(self.order)
    }

    /// `ζ_E^k` for the session order `E`.
    pub fn zeta(&self, k: i64) -> Scalar {
        Scalar::root(self.order, k)
    }

    /// `ζ_e^k`, requiring `e` to be the session order.
    pub fn root_of_unity(&self, e: u32, k: i64) -> Result<Scalar, ScalarError> {
        if e != self.order {
            return Err(ScalarError::Configuration(alloc::format!(
                "root of unity of order {e} requested in session of order {}",
                self.order
            )));
        }
        Ok(self.zeta(k))
    }

    /// `ζ_m^k` for a divisor `m` of the session order, expressed in the session field.
    pub fn root_of_divisor(&self, m: u32, k: i64) -> Result<Scalar, ScalarError> {
        if m == 0 || self.order % m != 0 {
            return Err(ScalarError::Configuration(alloc::format!(
                "order {m} does not divide session order {}",
                self.order
            )));
        }
        let step = (self.order / m) as i64;
        Ok(self.zeta(k.rem_euclid(m as i64) * step))
    }

    /// Whether the scalar lives in this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        self.order % s.order() == 0 || (s.order() <= 2 && self.order >= 1)
    }

    /// Re-expresses `s` in the session field.
    pub fn embed(&self, s: &Scalar) -> Result<Scalar, ScalarError> {
        if !self.contains(s) {
            return Err(ScalarError::Configuration(alloc::format!(
                "scalar of order {} is not in Q(ζ_{})",
                s.order(),
                self.order
            )));
        }
        Ok(s.lift(self.order))
    }

    /// The exponent `j` with `ζ_E^j = s`, if `s` is an `E`-th root of unity.
    pub fn discrete_log(&self, s: &Scalar) -> Option<u32> {
        (0..self.order).find(|&j| &self.zeta(j as i64) == s)
    }

    /// Multiplicative order of `s` if it is an `E`-th root of unity.
    pub fn root_order(&self, s: &Scalar) -> Option<u32> {
        let j = self.discrete_log(s)?;
        Some(self.order / gcd_u64(j as u64, self.order as u64) as u32)
    }
}

impl PartialOrd for CyclotomicField {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.order.cmp(&other.order))
    }
}

/// `j_q = 1 + q + ... + q^{j-1}`.
pub fn qint(j: u32, q: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    let mut p = Scalar::one();
    for _ in 0..j {
        acc += &p;
        p = &p * q;
    }
    acc
}

/// `m_q! = 1_q 2_q ... m_q`.
pub fn qfactorial(m: u32, q: &Scalar) -> Scalar {
    (1..=m).fold(Scalar::one(), |acc, j| acc * qint(j, q))
}

/// Gauss polynomial `(n choose i)_q` evaluated at `q`.
///
/// Uses the q-Pascal recursion and never divides, so it is valid at roots of
/// unity. Out-of-range `i` yields zero.
pub fn qbinom(n: i64, i: i64, q: &Scalar) -> Scalar {
    if n < 0 || i < 0 || i > n {
        return Scalar::zero();
    }
    let n = n as usize;
    let i = i as usize;
    let mut qpow = Vec::with_capacity(i + 1);
    let mut p = Scalar::one();
    for _ in 0..=i {
        qpow.push(p.clone());
        p = &p * q;
    }
    // row[k] = (m choose k)_q for the current m
    let mut row = vec![Scalar::zero(); i + 1];
    row[0] = Scalar::one();
    for m in 1..=n {
        let top = i.min(m);
        for k in (1..=top).rev() {
            let t = &qpow[k] * &row[k];
            row[k] = &row[k - 1] + &t;
        }
    }
    row[i].clone()
}

/// All Gauss polynomials `(n choose i)_q` for `0 ≤ i ≤ n`.
pub fn qbinom_row(n: u32, q: &Scalar) -> Vec<Scalar> {
    (0..=n as i64).map(|i| qbinom(n as i64, i, q)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixth_root_minimal_polynomial() {
        let z = Scalar::root(6, 1);
        assert!((&(&z * &z) - &z + Scalar::one()).is_zero());
    }

    #[test]
    fn inverse_of_root() {
        for n in [3u32, 5, 6, 7, 12] {
            let z = Scalar::root(n, 1);
            assert_eq!(z.inv().unwrap(), Scalar::root(n, n as i64 - 1));
        }
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn geometric_sum_vanishes() {
        let z = Scalar::root(3, 1);
        assert!((Scalar::one() + &z + &z * &z).is_zero());
    }

    #[test]
    fn roots_have_period() {
        let k = CyclotomicField::new(6).unwrap();
        assert_eq!(k.root_of_unity(6, 6).unwrap(), Scalar::one());
        assert_eq!(k.root_of_unity(6, 3).unwrap(), Scalar::from_i64(-1));
        assert!(k.root_of_unity(12, 1).is_err());
        let c = CyclotomicField::new(12).unwrap().root_of_unity(12, 4).unwrap();
        assert!((&c * &c + &c + Scalar::one()).is_zero());
    }

    #[test]
    fn mixed_orders_embed() {
        let a = Scalar::root(3, 1);
        let b = Scalar::root(4, 1);
        let c = &a * &b;
        assert_eq!(c.order(), 12);
        assert_eq!(c, Scalar::root(12, 7));
        assert_eq!(Scalar::root(6, 2), Scalar::root(3, 1));
    }

    #[test]
    fn big_fallback_round_trips() {
        let x = Scalar::from_i64(i64::MAX);
        let y = &(&x * &x) * &Scalar::root(5, 2);
        let back = y.div(&x).unwrap().div(&x).unwrap();
        assert_eq!(back, Scalar::root(5, 2));
    }

    #[test]
    fn general_inverse() {
        let a = Scalar::from_i64(2) + Scalar::root(7, 3) - Scalar::from_ratio(1, 3).unwrap() * Scalar::root(7, 5);
        let ai = a.inv().unwrap();
        assert!((&a * &ai).is_one());
    }

    #[test]
    fn qbinom_vanishes_at_order() {
        for n in 2..9u32 {
            let q = Scalar::root(n, 1);
            for i in 1..n as i64 {
                assert!(qbinom(n as i64, i, &q).is_zero());
            }
            assert!(qbinom(n as i64, 0, &q).is_one());
            assert!(qbinom(n as i64, n as i64 + 1, &q).is_zero());
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(alloc::format!("{}", Scalar::root(6, 1)), "z6");
        assert_eq!(alloc::format!("{}", Scalar::from_ratio(-3, 6).unwrap()), "-1/2");
        assert_eq!(alloc::format!("{}", Scalar::zero()), "0");
    }
}
