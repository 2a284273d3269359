mod args;
mod commands;
mod output;
mod verify;

use clap::Parser;

use args::{Cli, Command};
use output::CliResult;

fn run(cli: Cli) -> CliResult<i32> {
    match cli.command {
        Command::Numfun(a) => commands::numfun(a),
        Command::CarmichaelSpectrum(a) => commands::carmichael_spectrum(a),
        Command::KmsSurface(a) => commands::kms_surface(a),
        Command::KmsCheck(a) => commands::kms_check(a),
        Command::Staircase(a) => commands::staircase_cmd(a),
        Command::Adler(a) => commands::adler(a),
        Command::OperatorsVerify(a) => commands::operators_verify(a),
        Command::MangoldtMap(a) => commands::mangoldt_map(a),
        Command::Verify(a) => commands::verify_cmd(a),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
