// SPDX-License-Identifier: Apache-2.0

//! `expdag`: evaluate, print, size and compile programs in the expression
//! language, and time DAG construction for the multiplication generators.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 parse error, 3 evaluation error.

use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use expdag::{
    build_dag, elaborate, emit_netlist, emit_threeaddr, eval, mul, mul_shared, parse, print_let,
    size, var, DagBuilder, Env, Name, SurfaceAst,
};

#[derive(Parser)]
#[command(
    name = "expdag",
    version,
    about = "Expression DSL with hash-consed DAG compilation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a program.
    Eval {
        #[command(flatten)]
        input: Input,
        /// Bind a free variable, e.g. `--var i1=5`. Repeatable.
        #[arg(long = "var", value_name = "NAME=VALUE", value_parser = parse_binding)]
        vars: Vec<(Name, i64)>,
    },
    /// Print a program with its sharing as `let` forms.
    Show {
        #[command(flatten)]
        input: Input,
    },
    /// Count constructors with shared subexpressions counted once.
    Size {
        #[command(flatten)]
        input: Input,
    },
    /// Build the DAG and print it in the chosen form.
    Compile {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Format::Dag)]
        format: Format,
    },
    /// Time DAG construction for `mul n v` and report a CSV row.
    Bench {
        #[arg(long = "gen", value_enum)]
        generator: Generator,
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
        n: i64,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        repeat: u32,
    },
}

#[derive(clap::Args)]
struct Input {
    /// Program file, or `-` for standard input.
    #[arg(default_value = "-")]
    file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dag,
    Netlist,
    Threeaddr,
}

#[derive(Clone, Copy, ValueEnum)]
enum Generator {
    Mul,
    MulShared,
}

fn parse_binding(s: &str) -> Result<(Name, i64), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    let name = Name::new(name.trim()).map_err(|e| e.to_string())?;
    let value = value
        .trim()
        .parse()
        .map_err(|e| format!("bad value for {name}: {e}"))?;
    Ok((name, value))
}

enum Failure {
    Io(String),
    Parse(String),
    Eval(String),
}

impl Failure {
    fn report(self) -> ExitCode {
        let (msg, code) = match self {
            Failure::Io(m) => (m, 1),
            Failure::Parse(m) => (m, 2),
            Failure::Eval(m) => (m, 3),
        };
        eprintln!("expdag: {msg}");
        ExitCode::from(code)
    }
}

impl Input {
    fn read(&self) -> Result<SurfaceAst, Failure> {
        let text = if self.file.as_os_str() == "-" {
            let mut buf = String::new();
            io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
            buf
        } else {
            std::fs::read_to_string(&self.file)
                .map_err(|e| Failure::Io(format!("{}: {e}", self.file.display())))?
        };
        parse(&text).map_err(|e| Failure::Parse(format!("parse error: {e}")))
    }
}

fn run(command: Command) -> Result<String, Failure> {
    Ok(match command {
        Command::Eval { input, vars } => {
            let ast = input.read()?;
            let env: Env = vars.into_iter().collect();
            let value = eval(&elaborate::<expdag::Eval>(&ast), &env)
                .map_err(|e| Failure::Eval(e.to_string()))?;
            value.to_string()
        }
        Command::Show { input } => print_let(&elaborate::<expdag::LetPrint>(&input.read()?)),
        Command::Size { input } => size(elaborate::<expdag::Size>(&input.read()?)).to_string(),
        Command::Compile { input, format } => {
            let (root, dag) = build_dag(&elaborate::<DagBuilder>(&input.read()?));
            match format {
                Format::Dag => dag.display_rooted(root),
                Format::Netlist => emit_netlist(&dag, &[root]),
                Format::Threeaddr => emit_threeaddr(&dag, root),
            }
        }
        Command::Bench {
            generator,
            n,
            repeat,
        } => bench(generator, n, repeat),
    })
}

fn bench(generator: Generator, n: i64, repeat: u32) -> String {
    let (label, build): (&str, fn(i64) -> usize) = match generator {
        Generator::Mul => ("mul", |n| {
            build_dag(&mul::<DagBuilder>(n, var::<DagBuilder>("v")))
                .1
                .len()
        }),
        Generator::MulShared => ("mul-shared", |n| {
            build_dag(&mul_shared::<DagBuilder>(n, var::<DagBuilder>("v")))
                .1
                .len()
        }),
    };
    let mut nodes = 0;
    let mut times: Vec<f64> = (0..repeat)
        .map(|_| {
            let start = Instant::now();
            nodes = build(n);
            start.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    times.sort_by(f64::total_cmp);
    let median = times[times.len() / 2];
    format!("gen,n,nodes,build_ms\n{label},{n},{nodes},{median:.6}")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            if !out.is_empty() {
                println!("{out}");
            }
            ExitCode::SUCCESS
        }
        Err(f) => f.report(),
    }
}
