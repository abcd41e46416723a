use std::io;
use std::process;

fn main() {
    let code = esym_core::cli::run(
        std::env::args_os(),
        io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    );
    process::exit(code);
}
