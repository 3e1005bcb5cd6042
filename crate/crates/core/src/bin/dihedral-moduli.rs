use std::process::ExitCode;

fn main() -> ExitCode {
    let code = dihedral_moduli::cli::run(std::env::args_os());
    ExitCode::from(code)
}
