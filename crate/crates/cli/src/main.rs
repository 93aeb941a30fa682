fn main() {
    std::process::exit(s3bundle_cli::run());
}
