use std::io::Write;

fn main() {
    qsphere::cli::init_threads();
    let (code, out) = qsphere::cli::run(std::env::args_os());
    std::io::stdout().write_all(out.stdout.as_bytes()).expect("stdout");
    std::io::stderr().write_all(out.stderr.as_bytes()).expect("stderr");
    std::process::exit(code);
}
