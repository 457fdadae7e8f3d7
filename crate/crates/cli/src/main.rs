use std::io::{self, BufWriter};

fn main() {
    let env_tol = std::env::var(coulphase_cli::TOL_ENV).ok();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = coulphase_cli::run(std::env::args_os(), env_tol.as_deref(), &mut out, &mut err);
    drop(out);
    std::process::exit(code);
}
