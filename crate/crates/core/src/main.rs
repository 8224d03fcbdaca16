use std::io::Write;

fn main() {
    let result = ck_core::cli::run(std::env::args_os());
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(result.exit_code);
}
