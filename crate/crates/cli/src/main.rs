use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};

use clap::{Args, Parser, Subcommand};

use ftau_cli::run_document;

#[derive(Parser)]
#[command(
    name = "ftau",
    version,
    about = "Test ideals and Frobenius computations over F_p"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Prime characteristic.
    #[arg(long)]
    p: u64,
    /// Comma-separated variable names.
    #[arg(long, default_value = "x,y")]
    vars: String,
    /// Monomial order: grevlex or lex.
    #[arg(long, default_value = "grevlex")]
    order: String,
    /// Frobenius exponent e (q = p^e).
    #[arg(long)]
    e: Option<u32>,
    #[arg(long)]
    emax: Option<u32>,
    /// Test element gamma.
    #[arg(long)]
    gamma: Option<String>,
    /// Fixed exponent N on gamma; disables the doubling certification.
    #[arg(long = "bigN")]
    big_n: Option<u32>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long = "degree-limit")]
    degree_limit: Option<u32>,
    /// Factor `generators@t`, e.g. `x,y@3/2`; repeatable.
    #[arg(long = "factor")]
    factors: Vec<String>,
    #[arg(long)]
    json: bool,
    /// Ideals, each a comma-separated generator list.
    ideals: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis.
    Gb(Common),
    /// Ideal quotient (I : J).
    Colon(Common),
    Intersect(Common),
    /// Krull dimension and height.
    Dim(Common),
    /// Bracket power I^[q].
    Bracket(Common),
    /// Frobenius root I^[1/q].
    Root(Common),
    /// tau(a^t) of the --factor combination.
    Tau(Common),
    /// tau_I(S, a^t).
    TauAlong(Common),
    /// Complete-intersection Fedder identity for the given generators.
    Fedder(Common),
    /// Strong F-regularity search for a complete intersection.
    Sfr(Common),
    /// Generic regular sequence and link generator.
    Link(Common),
    /// Linkage colon containment at q = p^e.
    Claim2(Common),
    /// Restriction containment report.
    Restrict(Common),
    /// Run job files.
    Run {
        files: Vec<PathBuf>,
        /// Worker threads for several files.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        json: bool,
        /// Write output here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

/// Renders flags as a job document so both paths share one validator.
fn to_document(name: &str, c: &Common) -> String {
    let mut d = String::new();
    let _ = writeln!(d, "ring p={} vars={} order={}", c.p, c.vars, c.order);
    if let Some(v) = c.degree_limit {
        let _ = writeln!(d, "degree-limit = {v}");
    }
    let mut names = Vec::new();
    for (k, gens) in c.ideals.iter().enumerate() {
        let _ = writeln!(d, "ideal I{k} = {gens}");
        names.push(format!("I{k}"));
    }
    if !c.factors.is_empty() {
        let (mut a, mut t) = (Vec::new(), Vec::new());
        for (k, f) in c.factors.iter().enumerate() {
            let (gens, exp) = f.rsplit_once('@').unwrap_or((f, "1"));
            let _ = writeln!(d, "ideal A{k} = {gens}");
            a.push(format!("A{k}"));
            t.push(exp.to_string());
        }
        let _ = writeln!(d, "a = {}\nt = {}", a.join(", "), t.join(", "));
    }
    for (key, v) in [
        ("e", c.e.map(|v| v.to_string())),
        ("emax", c.emax.map(|v| v.to_string())),
        ("gamma", c.gamma.clone()),
        ("N", c.big_n.map(|v| v.to_string())),
        ("seed", c.seed.map(|v| v.to_string())),
    ] {
        if let Some(v) = v {
            let _ = writeln!(d, "{key} = {v}");
        }
    }
    let _ = writeln!(d, "cmd {name} {}", names.join(" "));
    d
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn run_files(files: &[PathBuf], jobs: usize, json: bool) -> Vec<(String, i32)> {
    let run_one = |path: &PathBuf| match std::fs::read_to_string(path) {
        Ok(text) => run_document(&text, json),
        Err(e) => (format!("error: {}: {e}\n", path.display()), 2),
    };
    if jobs <= 1 || files.len() <= 1 {
        return files.iter().map(run_one).collect();
    }
    // each job owns its ideals, so Gröbner caches are never shared
    let next = AtomicUsize::new(0);
    let mut slots: Vec<Option<(String, i32)>> = vec![None; files.len()];
    let results = std::sync::Mutex::new(&mut slots);
    std::thread::scope(|s| {
        for _ in 0..jobs.min(files.len()) {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                if k >= files.len() {
                    break;
                }
                let r = run_one(&files[k]);
                results.lock().unwrap()[k] = Some(r);
            });
        }
    });
    slots.into_iter().map(|r| r.unwrap()).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, common) = match &cli.command {
        Command::Run {
            files,
            jobs,
            json,
            output,
        } => {
            if files.is_empty() {
                eprintln!("error: no job files given");
                return code(2);
            }
            let results = run_files(files, *jobs, *json);
            let mut text = String::new();
            let many = files.len() > 1;
            for (path, (out, _)) in files.iter().zip(&results) {
                if many && !*json {
                    let _ = writeln!(text, "== {}", path.display());
                }
                text.push_str(out);
            }
            match output {
                Some(o) => {
                    if let Err(e) = std::fs::write(o, &text) {
                        eprintln!("error: {}: {e}", o.display());
                        return code(2);
                    }
                }
                None => print!("{text}"),
            }
            let worst = results
                .iter()
                .map(|(_, c)| *c)
                .find(|&c| c != 0)
                .unwrap_or(0);
            return code(worst);
        }
        Command::Gb(c) => ("gb", c),
        Command::Colon(c) => ("colon", c),
        Command::Intersect(c) => ("intersect", c),
        Command::Dim(c) => ("dim", c),
        Command::Bracket(c) => ("bracket", c),
        Command::Root(c) => ("root", c),
        Command::Tau(c) => ("tau", c),
        Command::TauAlong(c) => ("tau-along", c),
        Command::Fedder(c) => ("fedder", c),
        Command::Sfr(c) => ("sfr", c),
        Command::Link(c) => ("link", c),
        Command::Claim2(c) => ("claim2", c),
        Command::Restrict(c) => ("restrict", c),
    };
    let (out, c) = run_document(&to_document(name, common), common.json);
    // JSON errors are results too; plain-text errors go to stderr
    if c == 0 || common.json {
        print!("{out}");
    } else {
        eprint!("{out}");
    }
    code(c)
}
