fn main() {
    std::process::exit(convex_domset::cli::run(std::env::args()));
}
