use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pga2d::{script, svg, tables, DEFAULT_TOL};

#[derive(Parser)]
#[command(name = "pga2d", version, about = "Plane geometry construction scripts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a construction script
    Run {
        script: PathBuf,
        /// Also render the final environment to this SVG file
        #[arg(long)]
        svg: Option<String>,
        /// Tolerance for zero and ideal tests
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Print the multiplication table and the duality map
    Tables,
}

fn run(path: &PathBuf, svg_path: Option<&str>, tol: f64) -> ExitCode {
    let source = match std::fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(1);
        }
    };
    let program = match script::parse(&source) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("parse error: {e}");
            return ExitCode::from(1);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let env = match script::evaluate(&program, tol, &mut out) {
        Ok(env) => env,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if let Some(p) = svg_path {
        if let Err(e) = svg::render_svg(&env, p, tol) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run { script, svg, tol } => run(&script, svg.as_deref(), tol),
        Command::Tables => {
            print!("{}\n{}", tables::cayley_table(), tables::dual_table());
            ExitCode::SUCCESS
        }
    }
}
