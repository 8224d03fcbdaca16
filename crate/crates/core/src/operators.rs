//! Differential operators on Clifford-valued polynomials.
//!
//! `∂x = ∂/∂x0 + Σ_j e_j ∂/∂x_j` acts from the left (`e_j` multiplies
//! coefficients on the left) or from the right. Parameter variables `u_j`
//! are never differentiated.

use crate::clifford::Multivector;
use crate::mvpoly::{CliffordPolynomial, Variable};

fn generators(f: &CliffordPolynomial) -> impl Iterator<Item = (Variable, Multivector)> {
    let dim = f.dim();
    Variable::spatial(dim).map(move |v| {
        let Variable::X(j) = v else { unreachable!() };
        (
            v,
            Multivector::generator(dim, j as usize).expect("generator in range"),
        )
    })
}

/// `Σ_j e_j ∂f/∂x_j`.
pub fn spatial_dirac_left(f: &CliffordPolynomial) -> CliffordPolynomial {
    generators(f).fold(CliffordPolynomial::zero(f.dim()), |acc, (v, e)| {
        &acc + &f.partial_derivative(v).left_mul(&e)
    })
}

/// `Σ_j (∂f/∂x_j) e_j`.
pub fn spatial_dirac_right(f: &CliffordPolynomial) -> CliffordPolynomial {
    generators(f).fold(CliffordPolynomial::zero(f.dim()), |acc, (v, e)| {
        &acc + &f.partial_derivative(v).right_mul(&e)
    })
}

/// Left generalized Cauchy-Riemann operator `∂x f`.
pub fn dirac_left(f: &CliffordPolynomial) -> CliffordPolynomial {
    &f.partial_derivative(Variable::X0) + &spatial_dirac_left(f)
}

/// Right generalized Cauchy-Riemann operator `f ∂x`.
pub fn dirac_right(f: &CliffordPolynomial) -> CliffordPolynomial {
    &f.partial_derivative(Variable::X0) + &spatial_dirac_right(f)
}

/// Conjugate operator `∂̄x f = ∂f/∂x0 - Σ_j e_j ∂f/∂x_j`.
pub fn conj_dirac_left(f: &CliffordPolynomial) -> CliffordPolynomial {
    &f.partial_derivative(Variable::X0) - &spatial_dirac_left(f)
}

/// `f ∂̄x`.
pub fn conj_dirac_right(f: &CliffordPolynomial) -> CliffordPolynomial {
    &f.partial_derivative(Variable::X0) - &spatial_dirac_right(f)
}

/// The sandwich `∂x f ∂x`.
pub fn sandwich(f: &CliffordPolynomial) -> CliffordPolynomial {
    dirac_right(&dirac_left(f))
}

/// `Σ_{j=0}^m ∂²f/∂x_j²`.
pub fn laplacian(f: &CliffordPolynomial) -> CliffordPolynomial {
    Variable::coordinates(f.dim()).fold(CliffordPolynomial::zero(f.dim()), |acc, v| {
        &acc + &f.partial_derivative(v).partial_derivative(v)
    })
}

pub fn bilaplacian(f: &CliffordPolynomial) -> CliffordPolynomial {
    laplacian(&laplacian(f))
}

pub fn is_inframonogenic(f: &CliffordPolynomial) -> bool {
    sandwich(f).is_zero()
}

pub fn is_left_monogenic(f: &CliffordPolynomial) -> bool {
    dirac_left(f).is_zero()
}

pub fn is_right_monogenic(f: &CliffordPolynomial) -> bool {
    dirac_right(f).is_zero()
}

pub fn is_biharmonic(f: &CliffordPolynomial) -> bool {
    bilaplacian(f).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::Dim;
    use crate::mvpoly::strategies;
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

    fn c(d: Dim, n: i64) -> CliffordPolynomial {
        CliffordPolynomial::scalar(d, int(n))
    }

    #[test]
    fn dirac_left_examples() {
        let d = dim(2);
        assert_eq!(dirac_left(&x(d, 1)), CliffordPolynomial::constant(e(d, 1)));
        let f = &x(d, 1) - &x(d, 0).left_mul(&e(d, 1));
        assert!(dirac_left(&f).is_zero());
        assert_eq!(dirac_left(&x(d, 0)), c(d, 1));
    }

    #[test]
    fn dirac_right_examples() {
        let d = dim(2);
        assert_eq!(dirac_right(&x(d, 1)), CliffordPolynomial::constant(e(d, 1)));
        assert_eq!(dirac_right(&x(d, 1).left_mul(&e(d, 1))), c(d, -1));
        assert_eq!(dirac_right(&x(d, 0)), c(d, 1));
    }

    #[test]
    fn left_and_right_differ_on_noncentral_coefficients() {
        let d = dim(2);
        let f = x(d, 1).left_mul(&e(d, 2));
        let e12 = &e(d, 1) * &e(d, 2);
        assert_eq!(dirac_left(&f), CliffordPolynomial::constant(e12.clone()));
        assert_eq!(dirac_right(&f), CliffordPolynomial::constant(-&e12));
    }

    #[test]
    fn spatial_examples() {
        let d = dim(2);
        assert_eq!(
            spatial_dirac_left(&x(d, 1).pow(2)),
            x(d, 1).left_mul(&e(d, 1)).scale(&int(2))
        );
        assert_eq!(spatial_dirac_right(&x(d, 1).left_mul(&e(d, 1))), c(d, -1));
        assert!(spatial_dirac_left(&x(d, 0)).is_zero());
    }

    #[test]
    fn sandwich_examples() {
        let d = dim(2);
        let f = &x(d, 1).pow(2) + &x(d, 0).pow(2);
        assert!(sandwich(&f).is_zero());
        assert_eq!(sandwich(&x(d, 1).pow(2)), c(d, -2));
        let monogenic = &x(d, 1) - &x(d, 0).left_mul(&e(d, 1));
        assert!(sandwich(&monogenic).is_zero());
    }

    #[test]
    fn laplacian_examples() {
        let d = dim(2);
        let f = &x(d, 1).pow(2) + &x(d, 0).pow(2);
        assert_eq!(laplacian(&f), c(d, 4));
        assert!(laplacian(&(&x(d, 0) * &x(d, 1))).is_zero());
        assert!(laplacian(&laplacian(&f)).is_zero());
    }

    #[test]
    fn conjugate_operator_examples() {
        let d = dim(2);
        assert_eq!(
            conj_dirac_left(&x(d, 1)),
            CliffordPolynomial::constant(-&e(d, 1))
        );
        assert_eq!(conj_dirac_left(&x(d, 0)), c(d, 1));
        let f = &x(d, 1).pow(2) + &x(d, 2).pow(2);
        assert_eq!(conj_dirac_left(&dirac_left(&f)), c(d, 4));
        assert_eq!(laplacian(&f), c(d, 4));
    }

    #[test]
    fn predicate_examples() {
        let d = dim(2);
        assert!(is_inframonogenic(&(&x(d, 1).pow(2) + &x(d, 0).pow(2))));
        assert!(!is_inframonogenic(&x(d, 1).pow(2)));
        assert!(is_left_monogenic(&(&x(d, 1) - &x(d, 0).left_mul(&e(d, 1)))));
        assert!(is_right_monogenic(
            &(&x(d, 1) - &x(d, 0).left_mul(&e(d, 1)))
        ));
        let f = &x(d, 1).pow(2) * &x(d, 0).pow(2);
        assert_eq!(bilaplacian(&f), c(d, 8));
        assert!(!is_biharmonic(&f));
    }

    #[test]
    fn parameters_are_inert() {
        let d = dim(2);
        let u = CliffordPolynomial::var(d, Variable::u(1)).unwrap();
        assert!(dirac_left(&u).is_zero());
        assert_eq!(dirac_left(&(&u * &x(d, 2))), u.left_mul(&e(d, 2)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn left_and_right_actions_commute(f in strategies::polynomial(3, 5, true)) {
            prop_assert_eq!(dirac_right(&dirac_left(&f)), dirac_left(&dirac_right(&f)));
            prop_assert_eq!(
                spatial_dirac_right(&spatial_dirac_left(&f)),
                spatial_dirac_left(&spatial_dirac_right(&f))
            );
        }

        #[test]
        fn laplacian_factorizes(f in strategies::polynomial(3, 5, true)) {
            let lap = laplacian(&f);
            prop_assert_eq!(&conj_dirac_left(&dirac_left(&f)), &lap);
            prop_assert_eq!(&dirac_left(&conj_dirac_left(&f)), &lap);
            prop_assert_eq!(&conj_dirac_right(&dirac_right(&f)), &lap);
        }
    }
}
