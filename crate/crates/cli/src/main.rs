fn main() {
    let code = farey_axis_cli::run(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
