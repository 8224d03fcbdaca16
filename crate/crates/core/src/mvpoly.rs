//! Polynomials in commuting scalar variables with multivector coefficients.
//!
//! One ring hosts the space-time variables `x0, x1..xm` and the parameter
//! variables `u1..um`. Scalar variables commute with every blade, so only
//! coefficients carry the noncommutativity; products keep the left factor's
//! coefficient on the left.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::clifford::{Dim, Multivector};
use crate::error::{CkError, Result};

/// A scalar variable. Declaration order `x0 < x1 < .. < xm < u1 < .. < um`
/// is the variable order used for monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    X0,
    /// Spatial coordinate `x_j`, `1 <= j <= m`.
    X(u8),
    /// Parameter `u_j`, `1 <= j <= m`.
    U(u8),
}

impl Variable {
    pub fn x(j: usize) -> Self {
        Variable::X(j as u8)
    }

    pub fn u(j: usize) -> Self {
        Variable::U(j as u8)
    }

    /// True for `x0..xm`; these are the variables that count towards degree.
    pub fn is_coordinate(self) -> bool {
        matches!(self, Variable::X0 | Variable::X(_))
    }

    pub fn validate(self, dim: Dim) -> Result<Self> {
        let ok = match self {
            Variable::X0 => true,
            Variable::X(j) | Variable::U(j) => j >= 1 && (j as usize) <= dim.get(),
        };
        if ok {
            Ok(self)
        } else {
            Err(CkError::VariableOutOfRange {
                name: self.to_string(),
                m: dim.get(),
            })
        }
    }

    /// `x1..xm` for the given dimension.
    pub fn spatial(dim: Dim) -> impl Iterator<Item = Variable> {
        (1..=dim.get()).map(Variable::x)
    }

    /// `x0, x1..xm` for the given dimension.
    pub fn coordinates(dim: Dim) -> impl Iterator<Item = Variable> {
        std::iter::once(Variable::X0).chain(Variable::spatial(dim))
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::X0 => f.write_str("x0"),
            Variable::X(j) => write!(f, "x{j}"),
            Variable::U(j) => write!(f, "u{j}"),
        }
    }
}

/// A power product of variables. Exponents are positive; absent variables
/// have exponent zero.
///
/// Monomials are ordered graded-lexicographically: lower total degree first,
/// and within a degree the exponent vectors `(x0, x1, .., xm, u1, .., um)`
/// compare lexicographically with larger leading exponents first, so
/// `x0^2 < x0*x1 < x1^2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial::power(v, 1)
    }

    pub fn power(v: Variable, exponent: u32) -> Self {
        if exponent == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v, exponent)])
        }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order;
    /// repeated variables have their exponents added.
    pub fn from_exponents<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Variable, u32)>,
    {
        pairs.into_iter().fold(Monomial::one(), |acc, (v, e)| {
            acc.mul(&Monomial::power(v, e))
        })
    }

    pub fn exponents(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.0.iter().find(|(w, _)| *w == v).map_or(0, |(_, e)| *e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Degree in `x0..xm`; parameters `u_j` do not count.
    pub fn x_degree(&self) -> u32 {
        self.0
            .iter()
            .filter(|(v, _)| v.is_coordinate())
            .map(|(_, e)| e)
            .sum()
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.0.iter().map(|(v, _)| *v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `∂/∂v` of the monomial as `(multiplier, monomial)`, or `None` when it
    /// does not involve `v`.
    pub fn derivative(&self, v: Variable) -> Option<(u32, Monomial)> {
        let pos = self.0.iter().position(|(w, _)| *w == v)?;
        let e = self.0[pos].1;
        let mut rest = self.0.clone();
        if e == 1 {
            rest.remove(pos);
        } else {
            rest[pos].1 = e - 1;
        }
        Some((e, Monomial(rest)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for (a, b) in self.0.iter().zip(&other.0) {
                    match a.0.cmp(&b.0) {
                        // `self` has a positive exponent where `other` has none.
                        Ordering::Less => return Ordering::Less,
                        Ordering::Greater => return Ordering::Greater,
                        Ordering::Equal => match b.1.cmp(&a.1) {
                            Ordering::Equal => {}
                            unequal => return unequal,
                        },
                    }
                }
                other.0.len().cmp(&self.0.len())
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// An element of `R_{0,m}[x0, x1..xm, u1..um]`.
///
/// No zero coefficient is stored and every coefficient has the polynomial's
/// dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliffordPolynomial {
    dim: Dim,
    terms: BTreeMap<Monomial, Multivector>,
}

impl CliffordPolynomial {
    pub fn zero(dim: Dim) -> Self {
        CliffordPolynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: Dim) -> Self {
        Self::constant(Multivector::one(dim))
    }

    pub fn constant(value: Multivector) -> Self {
        Self::term(Monomial::one(), value)
    }

    pub fn scalar(dim: Dim, value: BigRational) -> Self {
        Self::constant(Multivector::scalar(dim, value))
    }

    /// `monomial · value`; the dimension is taken from the coefficient.
    pub fn term(monomial: Monomial, value: Multivector) -> Self {
        let dim = value.dim();
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(monomial, value);
        }
        CliffordPolynomial { dim, terms }
    }

    pub fn var(dim: Dim, v: Variable) -> Result<Self> {
        v.validate(dim)?;
        Ok(Self::term(Monomial::var(v), Multivector::one(dim)))
    }

    /// Collects `(monomial, coefficient)` pairs, summing repeats. Variables
    /// and coefficients are validated against `dim`.
    pub fn from_terms<I>(dim: Dim, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Multivector)>,
    {
        let mut out = CliffordPolynomial::zero(dim);
        for (monomial, value) in terms {
            dim.check_same(value.dim())?;
            for v in monomial.variables() {
                v.validate(dim)?;
            }
            out.accumulate(monomial, value);
        }
        Ok(out)
    }

    fn accumulate(&mut self, monomial: Monomial, value: Multivector) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &value;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    #[inline]
    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Multivector)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Multivector {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(|| Multivector::zero(self.dim))
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

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.dim.check_same(other.dim)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.dim.check_same(other.dim)?;
        let mut out = CliffordPolynomial::zero(self.dim);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.accumulate(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, exponent: u32) -> Self {
        (0..exponent).fold(CliffordPolynomial::one(self.dim), |acc, _| &acc * self)
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        self.map_coefficients(|c| c.scale(factor))
    }

    /// `value · f`, multiplying every coefficient on the left.
    pub fn left_mul(&self, value: &Multivector) -> Self {
        self.map_coefficients(|c| value * c)
    }

    /// `f · value`, multiplying every coefficient on the right.
    pub fn right_mul(&self, value: &Multivector) -> Self {
        self.map_coefficients(|c| c * value)
    }

    pub fn mul_monomial(&self, monomial: &Monomial) -> Self {
        CliffordPolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(monomial), c.clone()))
                .collect(),
        }
    }

    fn map_coefficients(&self, f: impl Fn(&Multivector) -> Multivector) -> Self {
        let mut out = CliffordPolynomial::zero(self.dim);
        for (m, c) in &self.terms {
            out.accumulate(m.clone(), f(c));
        }
        out
    }

    /// Formal partial derivative; coefficients are untouched.
    pub fn partial_derivative(&self, v: Variable) -> Self {
        let mut out = CliffordPolynomial::zero(self.dim);
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.derivative(v) {
                let factor = BigRational::from_integer(BigInt::from(e));
                out.accumulate(rest, c.scale(&factor));
            }
        }
        out
    }

    /// Substitutes rationals for every variable and sums the coefficients.
    pub fn evaluate(&self, point: &BTreeMap<Variable, BigRational>) -> Result<Multivector> {
        let mut out = Multivector::zero(self.dim);
        for (m, c) in &self.terms {
            let mut value = BigRational::one();
            for &(v, e) in m.exponents() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| CkError::MissingAssignment(v.to_string()))?;
                value *= Pow::pow(x, e);
            }
            out = &out + &c.scale(&value);
        }
        Ok(out)
    }

    /// Partial substitution of rationals for some variables; all others stay
    /// symbolic.
    pub fn substitute(&self, assignment: &BTreeMap<Variable, BigRational>) -> Self {
        let mut out = CliffordPolynomial::zero(self.dim);
        for (m, c) in &self.terms {
            let mut value = BigRational::one();
            let mut kept = Vec::new();
            for &(v, e) in m.exponents() {
                match assignment.get(&v) {
                    Some(x) => value *= Pow::pow(x, e),
                    None => kept.push((v, e)),
                }
            }
            out.accumulate(Monomial(kept), c.scale(&value));
        }
        out
    }

    /// `f|_{x0 = 0}`.
    pub fn restrict_x0(&self) -> Self {
        CliffordPolynomial {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(Variable::X0) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Highest degree in `x0..xm` over all terms; `0` for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::x_degree).max().unwrap_or(0)
    }

    /// Every term has degree exactly `k` in `x0..xm`. The zero polynomial is
    /// homogeneous of every degree.
    pub fn is_homogeneous(&self, k: u32) -> bool {
        self.terms.keys().all(|m| m.x_degree() == k)
    }

    /// Only `x1..xm` occur.
    pub fn is_spatial(&self) -> bool {
        self.variables().all(|v| matches!(v, Variable::X(_)))
    }

    pub fn depends_on(&self, v: Variable) -> bool {
        self.variables().any(|w| w == v)
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        self.terms.keys().flat_map(Monomial::variables)
    }
}

impl Add for &CliffordPolynomial {
    type Output = CliffordPolynomial;

    fn add(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        self.checked_add(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl Sub for &CliffordPolynomial {
    type Output = CliffordPolynomial;

    fn sub(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        self.checked_sub(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl Mul for &CliffordPolynomial {
    type Output = CliffordPolynomial;

    fn mul(self, rhs: &CliffordPolynomial) -> CliffordPolynomial {
        self.checked_mul(rhs)
            .expect("polynomial dimension mismatch")
    }
}

impl Neg for &CliffordPolynomial {
    type Output = CliffordPolynomial;

    fn neg(self) -> CliffordPolynomial {
        CliffordPolynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for CliffordPolynomial {
    type Output = CliffordPolynomial;

    fn neg(self) -> CliffordPolynomial {
        -&self
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use proptest::prelude::*;

    fn dim(m: usize) -> Dim {
        Dim::new(m).unwrap()
    }

    fn x(d: Dim, j: usize) -> CliffordPolynomial {
        let v = if j == 0 { Variable::X0 } else { Variable::x(j) };
        CliffordPolynomial::var(d, v).unwrap()
    }

    fn e(d: Dim, j: usize) -> Multivector {
        Multivector::generator(d, j).unwrap()
    }

    #[test]
    fn monomial_order_is_graded_with_x0_first() {
        let x0 = Variable::X0;
        let x1 = Variable::x(1);
        let u1 = Variable::u(1);
        let mut monos = [
            Monomial::power(x1, 2),
            Monomial::var(u1),
            Monomial::from_exponents([(x0, 1), (x1, 1)]),
            Monomial::one(),
            Monomial::power(x0, 2),
            Monomial::var(x1),
            Monomial::var(x0),
        ];
        monos.sort();
        let printed: Vec<String> = monos.iter().map(ToString::to_string).collect();
        assert_eq!(printed, ["1", "x0", "x1", "u1", "x0^2", "x0*x1", "x1^2"]);
    }

    #[test]
    fn product_examples() {
        let d = dim(2);
        let x1e1 = x(d, 1).left_mul(&e(d, 1));
        assert_eq!(&x1e1 * &x1e1, -&x(d, 1).pow(2));
        let lhs = &(&x(d, 1) + &x(d, 2)) * &(&x(d, 1) - &x(d, 2));
        assert_eq!(lhs, &x(d, 1).pow(2) - &x(d, 2).pow(2));
        assert_eq!(&lhs * &CliffordPolynomial::one(d), lhs);
    }

    #[test]
    fn coefficients_keep_factor_order() {
        let d = dim(2);
        let f = x(d, 1).left_mul(&e(d, 1));
        let g = x(d, 2).left_mul(&e(d, 2));
        let e12 = &e(d, 1) * &e(d, 2);
        assert_eq!(&f * &g, (&x(d, 1) * &x(d, 2)).left_mul(&e12));
        assert_eq!(&g * &f, (&x(d, 1) * &x(d, 2)).left_mul(&-&e12));
    }

    #[test]
    fn derivative_examples() {
        let d = dim(2);
        assert_eq!(
            x(d, 1).pow(2).partial_derivative(Variable::x(1)),
            x(d, 1).scale(&int(2))
        );
        let e12 = &e(d, 1) * &e(d, 2);
        let f = (&x(d, 0) * &x(d, 1)).left_mul(&e12);
        assert_eq!(f.partial_derivative(Variable::X0), x(d, 1).left_mul(&e12));
        assert!(x(d, 1).partial_derivative(Variable::x(2)).is_zero());
    }

    #[test]
    fn evaluate_examples() {
        let d = dim(2);
        let f = &x(d, 1).pow(2) + &x(d, 0).pow(2);
        let point = BTreeMap::from([(Variable::X0, int(1)), (Variable::x(1), int(2))]);
        assert_eq!(f.evaluate(&point).unwrap(), Multivector::scalar(d, int(5)));

        let half = BigRational::new(1.into(), 2.into());
        let g = x(d, 1).left_mul(&e(d, 1));
        let point = BTreeMap::from([(Variable::x(1), half.clone())]);
        assert_eq!(g.evaluate(&point).unwrap(), e(d, 1).scale(&half));

        assert!(CliffordPolynomial::zero(d)
            .evaluate(&BTreeMap::new())
            .unwrap()
            .is_zero());
        assert_eq!(
            f.evaluate(&BTreeMap::new()),
            Err(CkError::MissingAssignment("x0".into()))
        );
    }

    #[test]
    fn restrict_examples() {
        let d = dim(2);
        let f = &x(d, 1).pow(2) + &x(d, 0).pow(2);
        assert_eq!(f.restrict_x0(), x(d, 1).pow(2));
        assert!(x(d, 0).left_mul(&e(d, 1)).restrict_x0().is_zero());
        let g = &x(d, 1) - &x(d, 0).left_mul(&e(d, 1));
        assert_eq!(g.restrict_x0(), x(d, 1));
    }

    #[test]
    fn degree_predicates() {
        let d = dim(2);
        let f = &x(d, 1).pow(2) + &x(d, 0).pow(2);
        assert!(f.is_homogeneous(2));
        assert!(!(&x(d, 1).pow(2) + &x(d, 1)).is_homogeneous(2));
        assert!(!(&x(d, 0) * &x(d, 1)).is_spatial());
        let e12 = &e(d, 1) * &e(d, 2);
        assert!((&x(d, 1) * &x(d, 2)).left_mul(&e12).is_spatial());
        assert_eq!(f.degree(), 2);
        assert_eq!(CliffordPolynomial::zero(d).degree(), 0);
        let u = CliffordPolynomial::var(d, Variable::u(1)).unwrap();
        // parameters do not count towards degree
        assert!((&u * &x(d, 1)).is_homogeneous(1));
        assert!(!u.is_spatial());
    }

    #[test]
    fn out_of_range_variables_rejected() {
        let d = dim(2);
        assert!(CliffordPolynomial::var(d, Variable::x(3)).is_err());
        assert!(CliffordPolynomial::var(d, Variable::u(0)).is_err());
        assert!(CliffordPolynomial::var(d, Variable::u(2)).is_ok());
    }

    #[test]
    fn mismatched_dimensions_error() {
        let a = CliffordPolynomial::one(dim(2));
        let b = CliffordPolynomial::one(dim(3));
        assert!(a.checked_add(&b).is_err());
        assert!(a.checked_mul(&b).is_err());
    }

    const ALL_VARS: [Variable; 4] = [Variable::X0, Variable::X(1), Variable::X(2), Variable::X(3)];

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn ring_laws(
            f in strategies::polynomial(3, 4, true),
            g in strategies::polynomial(3, 4, true),
            h in strategies::polynomial(3, 4, true),
        ) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&(&f + &g) * &h, &(&f * &h) + &(&g * &h));
        }

        #[test]
        fn derivatives_commute(f in strategies::polynomial(3, 4, true)) {
            for u in ALL_VARS {
                for v in ALL_VARS {
                    prop_assert_eq!(
                        f.partial_derivative(u).partial_derivative(v),
                        f.partial_derivative(v).partial_derivative(u)
                    );
                }
            }
        }

        #[test]
        fn leibniz_for_scalar_factor(
            g in strategies::scalar_polynomial(3, 3),
            f in strategies::polynomial(3, 3, true),
        ) {
            for v in ALL_VARS {
                let lhs = (&g * &f).partial_derivative(v);
                let rhs = &(&g.partial_derivative(v) * &f) + &(&g * &f.partial_derivative(v));
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn evaluation_is_multiplicative(
            f in strategies::polynomial(3, 3, true),
            g in strategies::polynomial(3, 3, true),
            point in proptest::collection::vec(crate::clifford::strategies::rational(), 4),
        ) {
            let point: BTreeMap<Variable, BigRational> = ALL_VARS.iter().copied().zip(point).collect();
            let lhs = (&f * &g).evaluate(&point).unwrap();
            let rhs = &f.evaluate(&point).unwrap() * &g.evaluate(&point).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
