fn main() {
    std::process::exit(edge_ideals::cli::run());
}
