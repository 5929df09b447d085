fn main() {
    std::process::exit(splitgrass::cli::run());
}
