use std::io::Write;

fn main() {
    let result = oddgraph_cli::run(std::env::args_os().skip(1));
    let mut out = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = out.write_all(result.stdout.as_bytes());
    let _ = out.flush();
    if let Some(line) = &result.stderr {
        eprintln!("{line}");
    }
    std::process::exit(result.exit_code());
}
