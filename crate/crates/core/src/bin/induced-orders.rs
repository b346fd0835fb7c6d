fn main() {
    std::process::exit(induced_orders::cli::cli_main(std::env::args()))
}
