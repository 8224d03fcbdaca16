//! Text and JSON forms of multivectors and Clifford polynomials.
//!
//! Text grammar (precedence `^` > `*` > `+ -`, all left-associative):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('-' | '+') unary | power
//! power  := atom ('^' NATURAL)*
//! atom   := NATURAL ('/' NATURAL)? | 'x'N | 'u'N | blade | '(' expr ')'
//! blade  := 'e' DIGITS | 'e[' N (',' N)* ']'
//! ```
//!
//! `*` keeps operand order, so `e2*e1` is `-e12`. The compact blade form
//! `e12` reads one generator per digit; generator lists must be strictly
//! increasing in either form.

mod json;
mod parse;
mod print;

pub use json::{from_json, from_json_str, to_json, to_json_string};
pub use parse::{parse_blade, parse_expr, parse_rational, ParseError, ParseErrorKind};
pub use print::{blade_name, print_expr, print_multivector};
