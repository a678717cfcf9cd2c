fn main() {
    std::process::exit(lyndon_arrays::cli::run(std::env::args_os()));
}
