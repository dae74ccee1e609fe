fn main() {
    std::process::exit(tdtc::cli::run());
}
