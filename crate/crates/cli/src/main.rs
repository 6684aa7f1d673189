use std::process::ExitCode;

use zetakit_cli::{run, Status};

fn main() -> ExitCode {
    let (result, code) = run(std::env::args_os());
    let text = result.render();
    if result.status == Status::Ok || result.json {
        println!("{text}");
    } else {
        eprintln!("{text}");
    }
    ExitCode::from(code as u8)
}
