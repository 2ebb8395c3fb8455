use std::process::ExitCode;

fn main() -> ExitCode {
    let code = std::panic::catch_unwind(|| {
        let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
        jacquet::cli::run(std::env::args_os(), &mut out, &mut err)
    })
    .unwrap_or(jacquet::cli::EXIT_USAGE);
    ExitCode::from(code as u8)
}
