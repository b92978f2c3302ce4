use std::io::Write;
use std::process::ExitCode;

fn write_stdout(text: &str) -> ExitCode {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match writeln!(lock, "{text}").and_then(|_| lock.flush()) {
        Ok(()) => ExitCode::SUCCESS,
        // a closed pipe (e.g. piping into `head`) is not a failure
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write to stdout: {e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    match fsplit_cli::run(std::env::args()) {
        Ok(json) => write_stdout(&json),
        Err(failure) => {
            if failure.code == 0 {
                // clap help/version output
                write_stdout(&failure.message)
            } else {
                eprintln!("{}", failure.message);
                ExitCode::from(failure.code as u8)
            }
        }
    }
}
