fn main() {
    std::process::exit(mvlab_cli::run_from(std::env::args_os()));
}
