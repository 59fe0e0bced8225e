fn main() {
    std::process::exit(gradedepth::cli::run(std::env::args_os()));
}
