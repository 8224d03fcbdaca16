//! The Cauchy-Kowalevski extension for inframonogenic functions.
//!
//! Given Cauchy data `A0, A1` on the hyperplane `x0 = 0`, the extension
//!
//! ```text
//! F(x) = Σ_n x0^n A_n(x̲),   A_n = (-1)^{n+1}/n! ( Σ_{j=0}^{n-2} ∂^{n-j-1} A0 ∂^{j+1}
//!                                                + Σ_{j=0}^{n-1} ∂^{n-j-1} A1 ∂^j )
//! ```
//!
//! is the unique solution of `∂x F ∂x = 0` with `F|_{x0=0} = A0` and
//! `∂F/∂x0|_{x0=0} = A1`. Here `∂` is the spatial Dirac operator acting from
//! the left or from the right. For polynomial data the series terminates at
//! `n = max(deg A0, deg A1 + 1)`.
//!
//! The coefficients are also computable from the three-term recurrence
//! obtained by substituting the series into the sandwich equation; the two
//! routes are implemented separately so that each can check the other.
//!
//! Cauchy data may contain the parameters `u1..um`, which behave as
//! constants. Only a dependence on `x0` is rejected.

use num_rational::BigRational;
use num_traits::One;

use crate::clifford::{Blade, Dim, Multivector};
use crate::error::{CkError, Result};
use crate::mvpoly::{CliffordPolynomial, Monomial, Variable};
use crate::operators::{spatial_dirac_left, spatial_dirac_right};
use crate::rational::{binomial, factorial, int};

/// Coefficients `A_0, .., A_N` of the series `Σ x0^n A_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientSequence(Vec<CliffordPolynomial>);

impl CoefficientSequence {
    pub fn new(entries: Vec<CliffordPolynomial>) -> Result<Self> {
        if entries.iter().any(|a| a.depends_on(Variable::X0)) {
            return Err(CkError::NotSpatial("series coefficient"));
        }
        if let Some(first) = entries.first() {
            for a in &entries[1..] {
                first.dim().check_same(a.dim())?;
            }
        }
        Ok(CoefficientSequence(entries))
    }

    pub fn entries(&self) -> &[CliffordPolynomial] {
        &self.0
    }

    pub fn get(&self, n: usize) -> Option<&CliffordPolynomial> {
        self.0.get(n)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<CliffordPolynomial> {
        self.0
    }

    /// `Σ_n x0^n A_n`.
    pub fn assemble(&self, dim: Dim) -> CliffordPolynomial {
        self.0
            .iter()
            .enumerate()
            .fold(CliffordPolynomial::zero(dim), |acc, (n, a)| {
                &acc + &a.mul_monomial(&Monomial::power(Variable::X0, n as u32))
            })
    }
}

fn check_cauchy_data(a0: &CliffordPolynomial, a1: &CliffordPolynomial) -> Result<()> {
    a0.dim().check_same(a1.dim())?;
    if a0.depends_on(Variable::X0) {
        return Err(CkError::NotSpatial("A0"));
    }
    if a1.depends_on(Variable::X0) {
        return Err(CkError::NotSpatial("A1"));
    }
    Ok(())
}

/// Index past which every series coefficient vanishes.
pub fn truncation_bound(a0: &CliffordPolynomial, a1: &CliffordPolynomial) -> u32 {
    a0.degree().max(a1.degree() + 1)
}

fn left_powers(f: &CliffordPolynomial, count: u32) -> Vec<CliffordPolynomial> {
    let mut out = Vec::with_capacity(count as usize + 1);
    out.push(f.clone());
    for i in 0..count as usize {
        let next = spatial_dirac_left(&out[i]);
        out.push(next);
    }
    out
}

fn right_power(f: &CliffordPolynomial, count: u32) -> CliffordPolynomial {
    let mut g = f.clone();
    for _ in 0..count {
        if g.is_zero() {
            break;
        }
        g = spatial_dirac_right(&g);
    }
    g
}

/// `A_n` from the closed form; `A0` and `A1` themselves for `n = 0, 1`.
pub fn ck_coefficient(
    a0: &CliffordPolynomial,
    a1: &CliffordPolynomial,
    n: u32,
) -> Result<CliffordPolynomial> {
    check_cauchy_data(a0, a1)?;
    match n {
        0 => return Ok(a0.clone()),
        1 => return Ok(a1.clone()),
        _ => {}
    }
    let dim = a0.dim();
    let mut sum = CliffordPolynomial::zero(dim);

    // ∂^{n-j-1} A0 ∂^{j+1}, j = 0..n-2
    let left0 = left_powers(a0, n - 1);
    for j in 0..=n - 2 {
        sum = &sum + &right_power(&left0[(n - j - 1) as usize], j + 1);
    }
    // ∂^{n-j-1} A1 ∂^j, j = 0..n-1
    let left1 = left_powers(a1, n - 1);
    for j in 0..n {
        sum = &sum + &right_power(&left1[(n - j - 1) as usize], j);
    }

    let sign = if n.is_multiple_of(2) { -1 } else { 1 };
    let factor = BigRational::new(sign.into(), factorial(n));
    Ok(sum.scale(&factor))
}

/// `A_0, .., A_N` from the recurrence
/// `A_{n+2} = -((n+1)(∂A_{n+1} + A_{n+1}∂) + ∂A_n∂) / ((n+2)(n+1))`.
pub fn recurrence_coefficients(
    a0: &CliffordPolynomial,
    a1: &CliffordPolynomial,
    last: u32,
) -> Result<CoefficientSequence> {
    check_cauchy_data(a0, a1)?;
    let mut seq = vec![a0.clone(), a1.clone()];
    for n in 0..last.saturating_sub(1) as i64 {
        let prev = &seq[n as usize];
        let curr = &seq[n as usize + 1];
        let first_order = &spatial_dirac_left(curr) + &spatial_dirac_right(curr);
        let second_order = spatial_dirac_right(&spatial_dirac_left(prev));
        let combined = &first_order.scale(&int(n + 1)) + &second_order;
        let next = combined.scale(&BigRational::new((-1).into(), ((n + 2) * (n + 1)).into()));
        seq.push(next);
    }
    seq.truncate(last as usize + 1);
    CoefficientSequence::new(seq)
}

/// The inframonogenic extension `CK[A0, A1]`.
pub fn ck_extend(a0: &CliffordPolynomial, a1: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    check_cauchy_data(a0, a1)?;
    let bound = truncation_bound(a0, a1);
    let coefficients = (0..=bound)
        .map(|n| ck_coefficient(a0, a1, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(CoefficientSequence::new(coefficients)?.assemble(a0.dim()))
}

/// `Σ_n (-x0)^n/n! D^n A0` for a spatial operator `D`.
fn exponential_series(
    a0: &CliffordPolynomial,
    op: fn(&CliffordPolynomial) -> CliffordPolynomial,
) -> CliffordPolynomial {
    let dim = a0.dim();
    let mut out = CliffordPolynomial::zero(dim);
    let mut power = a0.clone();
    let mut n = 0u32;
    while !power.is_zero() {
        let sign = if n.is_multiple_of(2) { 1 } else { -1 };
        let factor = BigRational::new(sign.into(), factorial(n));
        let term = power
            .scale(&factor)
            .mul_monomial(&Monomial::power(Variable::X0, n));
        out = &out + &term;
        power = op(&power);
        n += 1;
    }
    out
}

fn monogenic_extend(
    a0: &CliffordPolynomial,
    op: fn(&CliffordPolynomial) -> CliffordPolynomial,
    side: &str,
) -> Result<CliffordPolynomial> {
    if a0.depends_on(Variable::X0) {
        return Err(CkError::NotSpatial("A0"));
    }
    let direct = exponential_series(a0, op);
    let via_ck = ck_extend(a0, &-op(a0))?;
    if direct != via_ck {
        return Err(CkError::OracleMismatch(format!(
            "{side} monogenic extension: exponential series and CK[A0, -∂A0] disagree"
        )));
    }
    Ok(direct)
}

/// Left monogenic extension `Σ (-x0)^n/n! ∂^n A0`, cross-checked against
/// `CK[A0, -∂A0]`.
pub fn monogenic_extend_left(a0: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    monogenic_extend(a0, spatial_dirac_left, "left")
}

/// Right monogenic extension `Σ (-x0)^n/n! A0 ∂^n`, cross-checked against
/// `CK[A0, -A0∂]`.
pub fn monogenic_extend_right(a0: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    monogenic_extend(a0, spatial_dirac_right, "right")
}

/// The vector `u̲` in the inner-power formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InnerVector {
    /// Parametric `u̲ = Σ u_j e_j` in the variables `u1..um`.
    Symbolic,
    /// Concrete rational components `(u_1, .., u_m)`.
    Rational(Vec<BigRational>),
}

impl InnerVector {
    fn components(&self, dim: Dim) -> Result<Vec<CliffordPolynomial>> {
        match self {
            InnerVector::Symbolic => (1..=dim.get())
                .map(|j| CliffordPolynomial::var(dim, Variable::u(j)))
                .collect(),
            InnerVector::Rational(values) => {
                if values.len() != dim.get() {
                    return Err(CkError::InvalidArgument(format!(
                        "u has {} components, expected m = {}",
                        values.len(),
                        dim
                    )));
                }
                Ok(values
                    .iter()
                    .map(|v| CliffordPolynomial::scalar(dim, v.clone()))
                    .collect())
            }
        }
    }

    /// `⟨x̲, u̲⟩ = Σ_j x_j u_j`.
    pub fn inner_product(&self, dim: Dim) -> Result<CliffordPolynomial> {
        let comps = self.components(dim)?;
        Ok(Variable::spatial(dim)
            .zip(comps)
            .fold(CliffordPolynomial::zero(dim), |acc, (v, c)| {
                let xj = CliffordPolynomial::var(dim, v).expect("spatial variable in range");
                &acc + &(&xj * &c)
            }))
    }

    /// The 1-vector `u̲ = Σ_j u_j e_j` as a constant-in-x polynomial.
    pub fn vector(&self, dim: Dim) -> Result<CliffordPolynomial> {
        let comps = self.components(dim)?;
        Ok(comps
            .iter()
            .enumerate()
            .fold(CliffordPolynomial::zero(dim), |acc, (i, c)| {
                let e = Multivector::generator(dim, i + 1).expect("generator in range");
                &acc + &c.right_mul(&e)
            }))
    }
}

fn blade_polynomial(dim: Dim, blade: Blade) -> Result<CliffordPolynomial> {
    Ok(CliffordPolynomial::constant(Multivector::blade(
        dim,
        blade,
        BigRational::one(),
    )?))
}

/// `Σ_{n=2}^{k} C(k,n) (-x0)^n ⟨x̲,u̲⟩^{k-n} Σ_{j ∈ range(n)} u̲^{n-j-1} e_A u̲^{j+shift}`
fn inner_power_correction(
    dim: Dim,
    k: u32,
    inner: &CliffordPolynomial,
    uvec: &CliffordPolynomial,
    blade: &CliffordPolynomial,
    inner_sum_len: impl Fn(u32) -> u32,
    shift: u32,
) -> CliffordPolynomial {
    let minus_x0 = -&CliffordPolynomial::var(dim, Variable::X0).expect("x0 always valid");
    let mut total = CliffordPolynomial::zero(dim);
    for n in 2..=k {
        let mut words = CliffordPolynomial::zero(dim);
        for j in 0..inner_sum_len(n) {
            let word = &(&uvec.pow(n - j - 1) * blade) * &uvec.pow(j + shift);
            words = &words + &word;
        }
        let weight = BigRational::from_integer(binomial(k, n));
        let term = &(&minus_x0.pow(n) * &inner.pow(k - n)) * &words;
        total = &total + &term.scale(&weight);
    }
    total
}

/// Closed form of `CK[⟨x̲,u̲⟩^k e_A, 0]`.
pub fn inner_power_ck_left(
    dim: Dim,
    k: u32,
    u: &InnerVector,
    blade: Blade,
) -> Result<CliffordPolynomial> {
    let inner = u.inner_product(dim)?;
    let uvec = u.vector(dim)?;
    let ea = blade_polynomial(dim, blade)?;
    let leading = &inner.pow(k) * &ea;
    let correction = inner_power_correction(dim, k, &inner, &uvec, &ea, |n| n - 1, 1);
    Ok(&leading - &correction)
}

/// Closed form of `CK[0, ⟨x̲,u̲⟩^{k-1} e_A]`, `k >= 1`.
pub fn inner_power_ck_right(
    dim: Dim,
    k: u32,
    u: &InnerVector,
    blade: Blade,
) -> Result<CliffordPolynomial> {
    if k == 0 {
        return Err(CkError::InvalidArgument(
            "inner_power_ck_right needs k >= 1".into(),
        ));
    }
    let inner = u.inner_product(dim)?;
    let uvec = u.vector(dim)?;
    let ea = blade_polynomial(dim, blade)?;
    let x0 = CliffordPolynomial::var(dim, Variable::X0)?;
    let leading = &(&x0 * &inner.pow(k - 1)) * &ea;
    let correction = inner_power_correction(dim, k, &inner, &uvec, &ea, |n| n, 0);
    let scaled = correction.scale(&BigRational::new(1.into(), k.into()));
    Ok(&leading - &scaled)
}

/// All monomials of degree `k` in `x1..xm`, in monomial order.
pub fn spatial_monomials(dim: Dim, k: u32) -> Vec<Monomial> {
    fn fill(vars: &[Variable], k: u32, prefix: &mut Vec<(Variable, u32)>, out: &mut Vec<Monomial>) {
        match vars {
            [] => {
                if k == 0 {
                    out.push(Monomial::from_exponents(prefix.iter().copied()));
                }
            }
            [last] => {
                prefix.push((*last, k));
                fill(&[], 0, prefix, out);
                prefix.pop();
            }
            [first, rest @ ..] => {
                for e in 0..=k {
                    prefix.push((*first, e));
                    fill(rest, k - e, prefix, out);
                    prefix.pop();
                }
            }
        }
    }
    let vars: Vec<Variable> = Variable::spatial(dim).collect();
    let mut out = Vec::new();
    fill(&vars, k, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Number of elements [`inframonogenic_basis`] returns:
/// `2^m (C(k+m-1, m-1) + C(k+m-2, m-1))`, the second term absent for `k = 0`.
pub fn basis_size(dim: Dim, k: u32) -> usize {
    let m = dim.get() as u32;
    let mut count = binomial(k + m - 1, m - 1);
    if k >= 1 {
        count += binomial(k + m - 2, m - 1);
    }
    let count: usize = count.try_into().expect("basis size fits in usize");
    count << dim.get()
}

/// Images under `CK` of the monomial bases of `P(k) × {0}` and `{0} × P(k-1)`;
/// together a basis of the homogeneous inframonogenic polynomials of degree
/// `k`.
pub fn inframonogenic_basis(dim: Dim, k: u32) -> Result<Vec<CliffordPolynomial>> {
    let zero = CliffordPolynomial::zero(dim);
    let blades = dim.blades();
    let mut out = Vec::with_capacity(basis_size(dim, k));
    for mono in spatial_monomials(dim, k) {
        for &blade in &blades {
            let data = CliffordPolynomial::term(
                mono.clone(),
                Multivector::blade(dim, blade, BigRational::one())?,
            );
            out.push(ck_extend(&data, &zero)?);
        }
    }
    if k >= 1 {
        for mono in spatial_monomials(dim, k - 1) {
            for &blade in &blades {
                let data = CliffordPolynomial::term(
                    mono.clone(),
                    Multivector::blade(dim, blade, BigRational::one())?,
                );
                out.push(ck_extend(&zero, &data)?);
            }
        }
    }
    Ok(out)
}

/// Cauchy data `(F|_{x0=0}, ∂F/∂x0|_{x0=0})`.
pub fn restrict_pair(f: &CliffordPolynomial) -> (CliffordPolynomial, CliffordPolynomial) {
    (
        f.restrict_x0(),
        f.partial_derivative(Variable::X0).restrict_x0(),
    )
}

/// Rebuilds a homogeneous spatial polynomial as `P(∂_u) ⟨x̲,u̲⟩^k / k!`,
/// each `x_j` replaced by `∂/∂u_j` and coefficients multiplying on the left.
pub fn polarize_reconstruct(p: &CliffordPolynomial) -> Result<CliffordPolynomial> {
    if !p.is_spatial() {
        return Err(CkError::NotSpatial("polarization input"));
    }
    let dim = p.dim();
    let k = p.degree();
    if !p.is_homogeneous(k) {
        return Err(CkError::NotHomogeneous);
    }
    let base = InnerVector::Symbolic
        .inner_product(dim)?
        .pow(k)
        .scale(&BigRational::new(1.into(), factorial(k)));
    let mut out = CliffordPolynomial::zero(dim);
    for (mono, coeff) in p.terms() {
        let mut g = base.clone();
        for &(v, e) in mono.exponents() {
            let Variable::X(j) = v else {
                unreachable!("spatial input")
            };
            for _ in 0..e {
                g = g.partial_derivative(Variable::U(j));
            }
        }
        out = &out + &g.left_mul(coeff);
    }
    Ok(out)
}
