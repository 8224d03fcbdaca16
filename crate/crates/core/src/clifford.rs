//! The real Clifford algebra `R_{0,m}` with exact rational coefficients.
//!
//! Basis blades are stored as bitmasks (bit `j - 1` set iff `e_j` is a
//! factor). Generators square to `-1` and anticommute pairwise.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{CkError, Result};

/// Largest supported number of generators.
pub const MAX_DIM: usize = 16;

/// Number of generators `m` of the algebra, validated to lie in `1..=16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Dim(u8);

impl Dim {
    pub fn new(m: usize) -> Result<Self> {
        if (1..=MAX_DIM).contains(&m) {
            Ok(Dim(m as u8))
        } else {
            Err(CkError::InvalidDimension { got: m })
        }
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// Number of basis blades, `2^m`.
    pub fn blade_count(self) -> usize {
        1 << self.0
    }

    /// All blades in canonical order.
    pub fn blades(self) -> Vec<Blade> {
        let mut out: Vec<Blade> = (0..self.blade_count() as u32).map(Blade).collect();
        out.sort();
        out
    }

    pub(crate) fn check_same(self, other: Dim) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(CkError::DimensionMismatch {
                left: self.get(),
                right: other.get(),
            })
        }
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A basis blade `e_A`, `A ⊂ {1, .., m}`. The empty set is the identity.
///
/// Blades are ordered by grade first, then lexicographically by their
/// ascending generator lists (`1 < e1 < e2 < e12 < e13 < ...`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_bits(bits: u32) -> Self {
        Blade(bits)
    }

    /// The generator `e_j`, `j >= 1`.
    pub fn generator(dim: Dim, j: usize) -> Result<Self> {
        if j == 0 || j > dim.get() {
            return Err(CkError::GeneratorOutOfRange {
                index: j,
                m: dim.get(),
            });
        }
        Ok(Blade(1 << (j - 1)))
    }

    /// Builds `e_{j1 .. jk}` from a strictly increasing list of generator
    /// indices.
    pub fn from_generators(dim: Dim, indices: &[usize]) -> Result<Self> {
        let mut bits = 0u32;
        let mut prev = 0usize;
        for &j in indices {
            if j <= prev {
                return Err(CkError::InvalidArgument(format!(
                    "blade generators must be strictly increasing, found e{j} after e{prev}"
                )));
            }
            bits |= Blade::generator(dim, j)?.0;
            prev = j;
        }
        Ok(Blade(bits))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_scalar(self) -> bool {
        self.0 == 0
    }

    /// Ascending generator indices (1-based).
    pub fn generators(self) -> impl Iterator<Item = usize> {
        (0..32)
            .filter(move |i| self.0 & (1 << i) != 0)
            .map(|i| i + 1)
    }

    pub fn fits(self, dim: Dim) -> bool {
        self.0 >> dim.get() == 0
    }

    /// Sign picked up by `e_A` under conjugation: `(-1)^{k(k+1)/2}`.
    pub fn conjugation_sign(self) -> Sign {
        let k = self.grade();
        if (k * (k + 1) / 2).is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade()
            .cmp(&other.grade())
            .then_with(|| self.generators().cmp(other.generators()))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn from_parity(odd: bool) -> Self {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn apply(self, value: BigRational) -> BigRational {
        match self {
            Sign::Plus => value,
            Sign::Minus => -value,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

/// Geometric product of two basis blades: `e_a e_b = sign · e_{a Δ b}`.
///
/// The sign counts the transpositions needed to move every generator of `b`
/// past the larger generators of `a`, plus one factor `-1` per shared
/// generator since `e_j² = -1`.
pub fn blade_mul(a: Blade, b: Blade) -> (Sign, Blade) {
    let mut swaps = 0u32;
    let mut rest = a.0 >> 1;
    while rest != 0 {
        swaps += (rest & b.0).count_ones();
        rest >>= 1;
    }
    let squares = (a.0 & b.0).count_ones();
    (
        Sign::from_parity((swaps + squares) % 2 == 1),
        Blade(a.0 ^ b.0),
    )
}

/// An element `Σ_A a_A e_A` of `R_{0,m}`.
///
/// Zero coefficients are never stored, so structural equality is algebraic
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: Dim,
    terms: BTreeMap<Blade, BigRational>,
}

impl Multivector {
    pub fn zero(dim: Dim) -> Self {
        Multivector {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: Dim) -> Self {
        Self::scalar(dim, BigRational::one())
    }

    pub fn scalar(dim: Dim, value: BigRational) -> Self {
        Self::from_blade(dim, Blade::SCALAR, value)
    }

    fn from_blade(dim: Dim, blade: Blade, value: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(blade, value);
        }
        Multivector { dim, terms }
    }

    /// `value · e_A`; fails if the blade uses generators beyond `m`.
    pub fn blade(dim: Dim, blade: Blade, value: BigRational) -> Result<Self> {
        if !blade.fits(dim) {
            let index = 32 - blade.bits().leading_zeros() as usize;
            return Err(CkError::GeneratorOutOfRange {
                index,
                m: dim.get(),
            });
        }
        Ok(Self::from_blade(dim, blade, value))
    }

    /// The generator `e_j` as a multivector.
    pub fn generator(dim: Dim, j: usize) -> Result<Self> {
        let blade = Blade::generator(dim, j)?;
        Ok(Self::from_blade(dim, blade, BigRational::one()))
    }

    /// Collects `(blade, coefficient)` pairs, summing repeats and dropping
    /// zeros.
    pub fn from_terms<I>(dim: Dim, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Blade, BigRational)>,
    {
        let mut out = Multivector::zero(dim);
        for (blade, value) in terms {
            out = out.checked_add(&Multivector::blade(dim, blade, value)?)?;
        }
        Ok(out)
    }

    #[inline]
    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &BigRational)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coefficient(&self, blade: Blade) -> BigRational {
        self.terms
            .get(&blade)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// True for `c · 1`, including zero.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|b| b.is_scalar())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.dim.check_same(other.dim)?;
        let mut terms = self.terms.clone();
        for (blade, value) in &other.terms {
            accumulate(&mut terms, *blade, value.clone());
        }
        Ok(Multivector {
            dim: self.dim,
            terms,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    /// The geometric product `self · other`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.dim.check_same(other.dim)?;
        let mut terms = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let (sign, blade) = blade_mul(*a, *b);
                accumulate(&mut terms, blade, sign.apply(x * y));
            }
        }
        Ok(Multivector {
            dim: self.dim,
            terms,
        })
    }

    fn neg_ref(&self) -> Self {
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Multivector::zero(self.dim);
        }
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, c * factor)).collect(),
        }
    }

    /// Clifford conjugation, the anti-automorphism with `ē_j = -e_j`.
    pub fn conjugate(&self) -> Self {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, b.conjugation_sign().apply(c.clone())))
                .collect(),
        }
    }

    /// The `k`-vector part `[a]_k`.
    pub fn grade_project(&self, k: usize) -> Self {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.grade() == k)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// `|a|² = Σ_A a_A²`.
    pub fn norm_sq(&self) -> BigRational {
        self.terms
            .values()
            .fold(BigRational::zero(), |acc, c| acc + c * c)
    }
}

fn accumulate(terms: &mut BTreeMap<Blade, BigRational>, blade: Blade, value: BigRational) {
    if value.is_zero() {
        return;
    }
    match terms.entry(blade) {
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut slot) => {
            *slot.get_mut() += value;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
    }
}

// Operator sugar. Mixing dimensions is a programming error here; use the
// `checked_*` methods where operands come from user input.

impl Add for &Multivector {
    type Output = Multivector;

    fn add(self, rhs: &Multivector) -> Multivector {
        self.checked_add(rhs)
            .expect("multivector dimension mismatch")
    }
}

impl Sub for &Multivector {
    type Output = Multivector;

    fn sub(self, rhs: &Multivector) -> Multivector {
        self.checked_sub(rhs)
            .expect("multivector dimension mismatch")
    }
}

impl Mul for &Multivector {
    type Output = Multivector;

    fn mul(self, rhs: &Multivector) -> Multivector {
        self.checked_mul(rhs)
            .expect("multivector dimension mismatch")
    }
}

impl Neg for &Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.neg_ref()
    }
}

impl Neg for Multivector {
    type Output = Multivector;

    fn neg(self) -> Multivector {
        self.neg_ref()
    }
}

#[cfg(test)]
pub(crate) mod strategies {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    pub fn rational() -> impl Strategy<Value = BigRational> {
        (-9i64..=9, 1i64..=4).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn multivector(m: usize) -> impl Strategy<Value = Multivector> {
        let dim = Dim::new(m).unwrap();
        proptest::collection::vec((0u32..(1 << m), rational()), 0..6).prop_map(move |terms| {
            Multivector::from_terms(dim, terms.into_iter().map(|(b, c)| (Blade(b), c))).unwrap()
        })
    }
}
