fn main() {
    std::process::exit(hypgeo::cli::main());
}
