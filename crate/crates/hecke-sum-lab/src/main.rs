fn main() {
    std::process::exit(hecke_sum_lab::cli::run());
}
