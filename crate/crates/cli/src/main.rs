use std::process::ExitCode;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let outcome = hocart_cli::run(&argv);
    print!("{}", outcome.human);
    if let Some(path) = &outcome.json_path {
        if let Err(e) = std::fs::write(path, outcome.json()) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if let Some(err) = &outcome.report.error {
        if err.starts_with("error:") {
            eprint!("{err}");
        } else {
            eprintln!("error: {err}");
        }
    }
    ExitCode::from(outcome.exit_code)
}
