fn main() {
    std::process::exit(netfreq_cli::run());
}
