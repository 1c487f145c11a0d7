use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use finlat::completion::{bl_completion, dm_completion, CompletionLattice};
use finlat::duality::dual_space;
use finlat::generate::{generate, identify, Family};
use finlat::harness::{
    any_failed, parse_suite, render_reports, run_suite_timed, suite_instances, summarize, Context, Dedupe, Fault,
};
use finlat::io::{poset_dot, read_poset_json, write_poset_json};
use finlat::lattice::{is_bounded, is_lattice, is_meet_semilattice};
use finlat::tower::{annihilator_family, classify, tower_dot, tower_report};
use finlat::{Error, Poset};

#[derive(Parser)]
#[command(name = "finlat", version, about = "Finite lattice completions, annihilators, towers and duality")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Dm,
    Bl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named family member as poset JSON.
    Gen {
        family: String,
        params: Vec<usize>,
    },
    /// Basic facts about a poset file (`-` for stdin).
    Info { file: PathBuf },
    /// DM or BL completion as a report, or as DOT.
    Complete {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        dot: bool,
        file: PathBuf,
    },
    /// Every relative annihilator <a,b>.
    Annihilators {
        #[arg(long)]
        dot: bool,
        file: PathBuf,
    },
    /// Level counts and collapses of the tower over BL(P).
    Tower {
        #[arg(long)]
        members: bool,
        #[arg(long)]
        dot: bool,
        file: PathBuf,
    },
    /// Distributive, Heyting, proHeyting, JID and frame flags.
    Classify { file: PathBuf },
    /// Dual space of a finite distributive lattice.
    Dualize {
        #[arg(long)]
        dot: bool,
        /// Label of an element whose Stone image is highlighted in DOT.
        #[arg(long)]
        highlight: Option<String>,
        file: PathBuf,
    },
    /// Run the theorem suite over every instance up to the given size.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        /// Lattices on at most k elements; posets on at most k - 1.
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        labeled: bool,
        #[arg(long)]
        summary: bool,
        #[arg(long)]
        timing: bool,
        /// Corrupt the D-closure, to check that the suite notices.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Re-emit a poset as JSON or as a DOT Hasse diagram.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        file: PathBuf,
    },
}

fn read_input(file: &PathBuf) -> finlat::Result<Poset> {
    let text = if file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Input(e.to_string()))?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| Error::Input(format!("{}: {e}", file.display())))?
    };
    read_poset_json(&text)
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json") + "\n"
}

fn label_sets(p: &Poset, sets: &[finlat::Subset]) -> Vec<Vec<String>> {
    sets.iter().map(|s| s.iter().map(|i| p.label(i).to_string()).collect()).collect()
}

fn completion_output(c: &CompletionLattice, dot: bool) -> String {
    if dot {
        return c.to_dot(&[]);
    }
    let iso = identify(&c.to_poset()).map(|f: Family| f.to_string());
    let mut v = serde_json::to_value(c.report(iso)).expect("json");
    v["labels"] = json!(label_sets(c.base(), c.members()));
    pretty(&v)
}

fn info(p: &Poset) -> Value {
    let lattice = is_lattice(p).is_some();
    let distributive = if lattice { finlat::lattice::is_distributive(p).ok() } else { None };
    json!({
        "name": p.name(),
        "size": p.len(),
        "covers": p.covers().len(),
        "height": p.heights().into_iter().max(),
        "minimal": p.minimal(&p.full_set()).iter().map(|i| p.label(i)).collect::<Vec<_>>(),
        "maximal": p.maximal(&p.full_set()).iter().map(|i| p.label(i)).collect::<Vec<_>>(),
        "bounded": is_bounded(p),
        "meet_semilattice": is_meet_semilattice(p).is_some() && p.top().is_some(),
        "lattice": lattice,
        "distributive": distributive,
        "iso_class": identify(p).map(|f| f.to_string()),
    })
}

fn run(cmd: Command) -> finlat::Result<(String, ExitCode)> {
    let ok = |s: String| Ok((s, ExitCode::SUCCESS));
    match cmd {
        Command::Gen { family, params } => ok(write_poset_json(&generate(&family, &params)?) + "\n"),
        Command::Info { file } => ok(pretty(&info(&read_input(&file)?))),
        Command::Complete { kind, dot, file } => {
            let p = read_input(&file)?;
            let c = match kind {
                Kind::Dm => dm_completion(&p),
                Kind::Bl => bl_completion(&p)?,
            };
            ok(completion_output(&c, dot))
        }
        Command::Annihilators { dot, file } => {
            let p = read_input(&file)?;
            let fam = annihilator_family(&p)?;
            if dot {
                return ok(poset_dot(&fam.poset_view()));
            }
            let n = p.len();
            let normal = dm_completion(&p);
            let entries: Vec<Value> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .map(|(a, b)| {
                    let e = fam.entry(a, b);
                    json!({
                        "a": p.label(a),
                        "b": p.label(b),
                        "members": e.to_vec(),
                        "labels": e.iter().map(|i| p.label(i)).collect::<Vec<_>>(),
                        "normal": normal.contains(e),
                    })
                })
                .collect();
            ok(pretty(&json!({"base": p.name(), "distinct": fam.distinct().len(), "entries": entries})))
        }
        Command::Tower { members, dot, file } => {
            let p = read_input(&file)?;
            if dot {
                return ok(tower_dot(&p)?);
            }
            ok(pretty(&serde_json::to_value(tower_report(&p, members)?).expect("json")))
        }
        Command::Classify { file } => {
            let p = read_input(&file)?;
            let mut v = serde_json::to_value(classify(&p)?).expect("json");
            v["base"] = json!(p.name());
            ok(pretty(&v))
        }
        Command::Dualize { dot, highlight, file } => {
            let p = read_input(&file)?;
            let d = dual_space(&p)?;
            if dot {
                let h = match highlight {
                    Some(l) => Some(p.index_of(&l).ok_or_else(|| Error::Input(format!("no element labeled `{l}`")))?),
                    None => None,
                };
                return ok(d.to_dot(h));
            }
            ok(pretty(&serde_json::to_value(d.to_json()).expect("json")))
        }
        Command::Verify { suite, max_n, labeled, summary, timing, inject_fault } => {
            let ids = parse_suite(&suite)?;
            let dedupe = if labeled { Dedupe::Labeled } else { Dedupe::UpToIso };
            let inst = suite_instances(max_n, dedupe)?;
            let ctx = if inject_fault { Context::with_fault(Fault::CorruptDClosure) } else { Context::default() };
            let run = run_suite_timed(&ctx, &ids, &inst)?;
            let code = if any_failed(&run.reports) { ExitCode::from(1) } else { ExitCode::SUCCESS };
            let out = if summary {
                let mut s = String::new();
                for line in summarize(&run.reports) {
                    s.push_str(&serde_json::to_string(&line).expect("json"));
                    s.push('\n');
                }
                let mut tail = json!({
                    "posets": inst.posets.len(),
                    "lattices": inst.lattices.len(),
                    "failed": any_failed(&run.reports),
                    "degraded": run.degraded,
                });
                if timing {
                    tail["elapsed_secs"] = json!(run.elapsed_secs);
                }
                s.push_str(&serde_json::to_string(&tail).expect("json"));
                s.push('\n');
                s
            } else {
                render_reports(&run.reports, timing)
            };
            Ok((out, code))
        }
        Command::Export { format, file } => {
            let p = read_input(&file)?;
            ok(match format {
                Format::Json => write_poset_json(&p) + "\n",
                Format::Dot => poset_dot(&p),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((out, code)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
