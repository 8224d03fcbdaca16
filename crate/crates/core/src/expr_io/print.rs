use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::clifford::{Blade, Multivector};
use crate::mvpoly::{CliffordPolynomial, Monomial};

/// `e12` when every generator is a single digit, `e[1,12]` otherwise; the
/// identity blade is `1`.
pub fn blade_name(blade: Blade) -> String {
    if blade.is_scalar() {
        return "1".to_string();
    }
    let gens: Vec<usize> = blade.generators().collect();
    if gens.iter().all(|&j| j <= 9) {
        let digits: String = gens.iter().map(|j| j.to_string()).collect();
        format!("e{digits}")
    } else {
        let list: Vec<String> = gens.iter().map(|j| j.to_string()).collect();
        format!("e[{}]", list.join(","))
    }
}

fn term_body(monomial: &Monomial, blade: Blade, magnitude: &BigRational) -> String {
    let mut factors = Vec::new();
    if !monomial.is_one() {
        factors.push(monomial.to_string());
    }
    if !blade.is_scalar() {
        factors.push(blade_name(blade));
    }
    if factors.is_empty() {
        return magnitude.to_string();
    }
    let body = factors.join("*");
    if magnitude.is_one() {
        body
    } else if magnitude.is_integer() {
        format!("{magnitude}*{body}")
    } else {
        format!("({magnitude})*{body}")
    }
}

/// Canonical text: one summand per (monomial, blade) pair, monomials in
/// graded order, blades by grade then generators.
pub fn print_expr(f: &CliffordPolynomial) -> String {
    let mut out = String::new();
    for (monomial, coeff) in f.terms() {
        for (blade, value) in coeff.terms() {
            let body = term_body(monomial, blade, &value.abs());
            match (out.is_empty(), value.is_negative()) {
                (true, false) => out.push_str(&body),
                (true, true) => {
                    out.push('-');
                    out.push_str(&body);
                }
                (false, false) => {
                    out.push_str(" + ");
                    out.push_str(&body);
                }
                (false, true) => {
                    out.push_str(" - ");
                    out.push_str(&body);
                }
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn print_multivector(a: &Multivector) -> String {
    print_expr(&CliffordPolynomial::constant(a.clone()))
}

impl fmt::Display for CliffordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_expr(self))
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_multivector(self))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&blade_name(*self))
    }
}
