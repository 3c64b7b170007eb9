use std::io::{self, IsTerminal};
use std::process::ExitCode;

use gis_cli::{run, Style};

fn main() -> ExitCode {
    let color = std::env::var("GIS_COLOR").map_or(true, |v| v != "0") && io::stdout().is_terminal();
    let code = run(
        std::env::args_os(),
        &mut io::stdin().lock(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
        Style { color },
    );
    ExitCode::from(code as u8)
}
