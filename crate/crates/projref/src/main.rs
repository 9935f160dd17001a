fn main() {
    std::process::exit(projref::cli::run_cli());
}
