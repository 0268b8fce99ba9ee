fn main() {
    std::process::exit(zetasums::cli_run());
}
