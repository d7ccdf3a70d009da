fn main() {
    std::process::exit(ppmsync::cli::run());
}
