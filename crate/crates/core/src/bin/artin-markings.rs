use std::io::Write;

fn main() {
    let out = artin_markings::cli::run_command(std::env::args_os(), &mut std::io::stdin().lock());
    std::io::stdout().write_all(&out.stdout).ok();
    std::io::stderr().write_all(&out.stderr).ok();
    std::process::exit(out.code);
}
