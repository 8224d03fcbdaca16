//! The `ck` command-line front end.
//!
//! Exit codes: 0 success (or predicate true), 1 predicate false, 2 usage or
//! parse error, 3 internal cross-check failure.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};

use crate::ck_ext::{self, InnerVector};
use crate::clifford::Dim;
use crate::error::CkError;
use crate::expr_io::{self, parse_blade, parse_expr, parse_rational, print_expr};
use crate::mvpoly::CliffordPolynomial;
use crate::operators;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "ck",
    version,
    about = "Exact Cauchy-Kowalevski extension for inframonogenic polynomials"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Extend Cauchy data (A0, A1) on x0 = 0 to an inframonogenic polynomial
    CkExtend {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        a0: String,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        a1: String,
        #[arg(long)]
        json: bool,
    },
    /// Test a polynomial for a null-solution property
    Verify {
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
    },
    /// Apply a differential operator
    Apply {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long)]
        json: bool,
    },
    /// List a basis of the homogeneous inframonogenic polynomials of degree k
    Basis {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form extension of <x,u>^k e_A data
    InnerPower {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: usize,
        /// Comma-separated rationals, or `symbolic`
        #[arg(long, allow_hyphen_values = true)]
        u: Option<String>,
        #[arg(long)]
        blade: String,
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Property {
    Inframonogenic,
    LeftMonogenic,
    RightMonogenic,
    Biharmonic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Op {
    DiracLeft,
    DiracRight,
    Sandwich,
    Laplacian,
    SpatialLeft,
    SpatialRight,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn from_error(e: CkError) -> Self {
        let exit_code = match e {
            CkError::OracleMismatch(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        CommandResult {
            exit_code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

fn render(f: &CliffordPolynomial, json: bool) -> String {
    if json {
        format!("{}\n", expr_io::to_json_string(f))
    } else {
        format!("{}\n", print_expr(f))
    }
}

fn parse_inner_vector(text: Option<&str>, dim: Dim) -> Result<InnerVector, CkError> {
    match text {
        None | Some("symbolic") => Ok(InnerVector::Symbolic),
        Some(list) => {
            let values = list
                .split(',')
                .map(|s| parse_rational(s.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            if values.len() != dim.get() {
                return Err(CkError::InvalidArgument(format!(
                    "--u has {} components, expected m = {dim}",
                    values.len()
                )));
            }
            Ok(InnerVector::Rational(values))
        }
    }
}

fn execute(command: Command) -> Result<CommandResult, CkError> {
    match command {
        Command::CkExtend { m, a0, a1, json } => {
            let a0 = parse_expr(&a0, m)?;
            let a1 = parse_expr(&a1, m)?;
            Ok(CommandResult::ok(render(
                &ck_ext::ck_extend(&a0, &a1)?,
                json,
            )))
        }
        Command::Verify { property, m, f } => {
            let f = parse_expr(&f, m)?;
            let residual = match property {
                Property::Inframonogenic => operators::sandwich(&f),
                Property::LeftMonogenic => operators::dirac_left(&f),
                Property::RightMonogenic => operators::dirac_right(&f),
                Property::Biharmonic => operators::bilaplacian(&f),
            };
            let mut result = CommandResult::ok(render(&residual, false));
            if !residual.is_zero() {
                result.exit_code = EXIT_FALSE;
            }
            Ok(result)
        }
        Command::Apply { op, m, f, json } => {
            let f = parse_expr(&f, m)?;
            let out = match op {
                Op::DiracLeft => operators::dirac_left(&f),
                Op::DiracRight => operators::dirac_right(&f),
                Op::Sandwich => operators::sandwich(&f),
                Op::Laplacian => operators::laplacian(&f),
                Op::SpatialLeft => operators::spatial_dirac_left(&f),
                Op::SpatialRight => operators::spatial_dirac_right(&f),
            };
            Ok(CommandResult::ok(render(&out, json)))
        }
        Command::Basis { k, m, json } => {
            let dim = Dim::new(m)?;
            let basis = ck_ext::inframonogenic_basis(dim, k)?;
            let stdout = if json {
                let docs: Vec<_> = basis.iter().map(expr_io::to_json).collect();
                format!("{}\n", serde_json::Value::Array(docs))
            } else {
                let mut s = format!("{} elements\n", basis.len());
                for f in &basis {
                    s.push_str(&print_expr(f));
                    s.push('\n');
                }
                s
            };
            Ok(CommandResult::ok(stdout))
        }
        Command::InnerPower {
            k,
            m,
            u,
            blade,
            side,
            json,
        } => {
            let dim = Dim::new(m)?;
            let u = parse_inner_vector(u.as_deref(), dim)?;
            let blade = parse_blade(&blade, dim)?;
            let out = match side {
                Side::Left => ck_ext::inner_power_ck_left(dim, k, &u, blade)?,
                Side::Right => ck_ext::inner_power_ck_right(dim, k, &u, blade)?,
            };
            Ok(CommandResult::ok(render(&out, json)))
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandResult::ok(text)
            };
        }
    };
    execute(cli.command).unwrap_or_else(CommandResult::from_error)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ck(args: &[&str]) -> CommandResult {
        run(std::iter::once("ck").chain(args.iter().copied()))
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn extend_examples() {
        let r = ck(&["ck-extend", "--m", "2", "--a0", "x1^2", "--a1", "0"]);
        assert_eq!((r.exit_code, r.stdout.as_str()), (0, "x0^2 + x1^2\n"));
        let r = ck(&["ck-extend", "--m", "2", "--a0", "x1", "--a1", "-e1"]);
        assert_eq!((r.exit_code, r.stdout.as_str()), (0, "-x0*e1 + x1\n"));
        let r = ck(&["ck-extend", "--m", "2", "--a0", "x0"]);
        assert_eq!(r.exit_code, 2);
        assert!(r.stderr.contains("x0"), "{}", r.stderr);
    }

    #[test]
    fn verify_examples() {
        let r = ck(&[
            "verify",
            "--property",
            "inframonogenic",
            "--m",
            "2",
            "--f",
            "x1^2 + x0^2",
        ]);
        assert_eq!((r.exit_code, r.stdout.as_str()), (0, "0\n"));
        let r = ck(&[
            "verify",
            "--property",
            "inframonogenic",
            "--m",
            "2",
            "--f",
            "x1^2",
        ]);
        assert_eq!((r.exit_code, r.stdout.as_str()), (1, "-2\n"));
        let r = ck(&[
            "verify",
            "--property",
            "biharmonic",
            "--m",
            "2",
            "--f",
            "x0^2*x1^2",
        ]);
        assert_eq!((r.exit_code, r.stdout.as_str()), (1, "8\n"));
    }

    #[test]
    fn apply_basis_inner_power_examples() {
        let r = ck(&["apply", "--op", "sandwich", "--m", "2", "--f", "x1^2"]);
        assert_eq!((r.exit_code, r.stdout.as_str()), (0, "-2\n"));
        let r = ck(&["basis", "--k", "2", "--m", "2"]);
        assert_eq!(r.exit_code, 0);
        assert_eq!(r.stdout.lines().next(), Some("20 elements"));
        assert_eq!(r.stdout.lines().count(), 21);
        let r = ck(&[
            "inner-power",
            "--k",
            "2",
            "--m",
            "2",
            "--u",
            "0,1",
            "--blade",
            "e1",
            "--side",
            "left",
        ]);
        assert_eq!(
            (r.exit_code, r.stdout.as_str()),
            (0, "-x0^2*e1 + x2^2*e1\n")
        );
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(ck(&[]).exit_code, 2);
        assert_eq!(ck(&["frobnicate"]).exit_code, 2);
        assert_eq!(ck(&["ck-extend", "--a0", "x1"]).exit_code, 2);
        assert_eq!(
            ck(&["apply", "--op", "curl", "--m", "2", "--f", "x1"]).exit_code,
            2
        );
        assert_eq!(
            ck(&[
                "inner-power",
                "--k",
                "2",
                "--m",
                "2",
                "--u",
                "1",
                "--blade",
                "e1",
                "--side",
                "left"
            ])
            .exit_code,
            2
        );
        assert_eq!(
            ck(&[
                "inner-power",
                "--k",
                "0",
                "--m",
                "2",
                "--blade",
                "e1",
                "--side",
                "right"
            ])
            .exit_code,
            2
        );
        assert_eq!(ck(&["basis", "--k", "1", "--m", "0"]).exit_code, 2);
        let help = ck(&["--help"]);
        assert_eq!(help.exit_code, 0);
        assert!(help.stdout.contains("ck-extend"));
    }
}
