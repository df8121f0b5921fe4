use clap::Parser;

fn main() {
    let args = perazzo::cli::CliArgs::parse();
    let (report, code) = perazzo::cli::run(&args);
    if let Err(e) = perazzo::cli::emit(&args, &report) {
        eprintln!("failed to write report: {e}");
        std::process::exit(perazzo::cli::EXIT_CHECK_FAILED);
    }
    std::process::exit(code);
}
