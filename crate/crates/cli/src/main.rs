use clap::{Parser, Subcommand, ValueEnum};
use realgrass::schubert::{d_closed_form, intersection_number, intersection_number_pieri, SchubertData};
use realgrass::verifier::{bezout_bound, reproduce, run_suite, verify_instance, InstanceSpec, SuiteConfig, Target};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "realgrass", version, about = "Build, solve and certify real Schubert problems")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Degree of the Grassmannian of p-planes in (m+p)-space.
    Dmp { m: usize, p: usize },
    /// Intersection number of Schubert data, e.g. `dnum 4 2 J2^4`.
    Dnum {
        m: usize,
        p: usize,
        #[arg(required = true)]
        data: Vec<String>,
    },
    /// Print the polynomial system of an instance spec.
    Build {
        spec: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        emit: Emit,
    },
    /// Solve an instance and certify its real solutions.
    Verify {
        spec: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run a batch of instances.
    Suite {
        config: PathBuf,
        #[arg(long, value_enum, default_value = "csv")]
        format: Table,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce a named computation; `list` shows the targets, `all` runs them all.
    Reproduce {
        name: String,
        #[arg(long)]
        json: bool,
    },
    /// Bezout number p^(mp-2) of the reduced system.
    Bezout { m: usize, p: usize },
}

fn fail(msg: impl std::fmt::Display, code: u8) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(code)
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c.clamp(0, 255) as u8)
}

fn read_spec(path: &PathBuf) -> Result<InstanceSpec, ExitCode> {
    InstanceSpec::from_file(path).map_err(|e| fail(e, 2))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Dmp { m, p } => {
            if m == 0 || p == 0 {
                return fail("m and p must be positive", 2);
            }
            println!("{}", d_closed_form(m, p));
            ExitCode::SUCCESS
        }
        Cmd::Dnum { m, p, data } => {
            let items: Vec<&str> = data.iter().map(|s| s.as_str()).collect();
            let d = match SchubertData::parse(&items, m, p) {
                Ok(d) => d,
                Err(e) => return fail(e, 2),
            };
            let ring = match intersection_number(&d) {
                Ok(x) => x,
                Err(e) => return fail(e, 2),
            };
            if d.is_pieri_data() {
                match intersection_number_pieri(&d) {
                    Ok(x) if x != ring => return fail(format!("ring gives {}, Pieri recursion {}", ring, x), 3),
                    _ => {}
                }
            }
            println!("{}", ring);
            ExitCode::SUCCESS
        }
        Cmd::Build { spec, emit } => {
            let spec = match read_spec(&spec) {
                Ok(s) => s,
                Err(c) => return c,
            };
            let sys = match spec.build() {
                Ok(s) => s,
                Err(e) => return fail(e, 2),
            };
            match emit {
                Emit::Text => {
                    println!("# vars: {}", sys.vars.join(" "));
                    if !sys.params.is_empty() {
                        println!("# params: {}", sys.params.join(" "));
                    }
                    for e in sys.to_text() {
                        println!("{}", e);
                    }
                }
                Emit::Json => {
                    let v = serde_json::json!({
                        "vars": sys.vars,
                        "params": sys.params,
                        "equations": sys.to_text(),
                        "provenance": sys.provenance,
                    });
                    println!("{}", serde_json::to_string_pretty(&v).unwrap_or_default());
                }
            }
            ExitCode::SUCCESS
        }
        Cmd::Verify { spec, json } => {
            let spec = match read_spec(&spec) {
                Ok(s) => s,
                Err(c) => return c,
            };
            match verify_instance(&spec) {
                Ok(rep) => {
                    if json {
                        println!("{}", rep.to_json());
                    } else {
                        print!("{}", rep.to_text());
                    }
                    code(rep.verdict.exit_code())
                }
                Err(e) => fail(e, 2),
            }
        }
        Cmd::Suite { config, format, out } => {
            let text = match std::fs::read_to_string(&config) {
                Ok(t) => t,
                Err(e) => return fail(e, 2),
            };
            let cfg = match SuiteConfig::from_text(&text) {
                Ok(c) => c,
                Err(e) => return fail(e, 2),
            };
            let table = run_suite(&cfg);
            let body = match format {
                Table::Csv => match table.to_csv() {
                    Ok(s) => s,
                    Err(e) => return fail(e, 3),
                },
                Table::Json => table.to_json(),
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, body) {
                        return fail(e, 2);
                    }
                }
                None => print!("{}", body),
            }
            let s = &table.summary;
            eprintln!(
                "{} rows: {} all real, {} not all real, {} degenerate, {} budget, {} errors",
                s.rows, s.all_real, s.not_all_real, s.degenerate, s.budget, s.errors
            );
            code(table.exit_code())
        }
        Cmd::Reproduce { name, json } => {
            if name == "list" {
                for t in Target::ALL {
                    println!("{:<20} {}", t.name(), t.describe());
                }
                return ExitCode::SUCCESS;
            }
            let targets: Vec<Target> = if name == "all" {
                Target::ALL.to_vec()
            } else {
                match Target::parse(&name) {
                    Some(t) => vec![t],
                    None => return fail(format!("unknown target `{}`; try `reproduce list`", name), 2),
                }
            };
            let mut worst = 0;
            for t in targets {
                let b = match reproduce(t.name()) {
                    Ok(b) => b,
                    Err(e) => return fail(e, 2),
                };
                if json {
                    println!("{}", serde_json::to_string_pretty(&b).unwrap_or_default());
                } else {
                    print!("{}", b.to_text());
                }
                worst = worst.max(b.exit_code());
            }
            code(worst)
        }
        Cmd::Bezout { m, p } => match bezout_bound(m, p) {
            Ok(b) => {
                println!("{}", b);
                ExitCode::SUCCESS
            }
            Err(e) => fail(e, 2),
        },
    }
}
