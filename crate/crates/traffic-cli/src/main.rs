use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = traffic_cli::run(std::env::args_os(), std::env::var("TRAFFIC_THREADS").ok());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    ExitCode::from(out.code.clamp(0, 255) as u8)
}
