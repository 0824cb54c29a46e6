fn main() {
    std::process::exit(good_semigroups::commands::main_with_args(
        std::env::args_os(),
    ));
}
