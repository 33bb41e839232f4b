fn main() {
    std::process::exit(colhopf::cli::run(std::env::args_os()));
}
