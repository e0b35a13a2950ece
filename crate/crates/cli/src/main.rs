use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use semirep::analyze::analyze;
use semirep::congruence::{compute_n_j, CongruenceAnalysis};
use semirep::constructions::{find_normal_isomorphic, parse_builtin};
use semirep::green::{compute_green, j_order, maximal_subgroup};
use semirep::group::is_prime;
use semirep::oracle::run_suite;
use semirep::semigroup::{closure_from_transformations, parse_transformations};
use semirep::zmud::zmud_number;
use semirep::{AssocCheck, Group, NormalSubgroup, Semigroup};

mod render;

/// Exact analysis of faithful completely reducible representations of
/// finite semigroups.
#[derive(Parser)]
#[command(name = "semirep", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Green's J-classes, maximal subgroups and the J-order
    Green {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Per-class congruences, GGM triviality, irreducible classes and N_J
    Congruence {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Minimal normal subgroups, socle parts and normal generator counts
    Socle {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Faithful-on-N completely reducible representations of a group (JSON)
    Zmud {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long = "char", value_parser = parse_char)]
        p: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Existence and minimum length for a semigroup
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long = "char", value_parser = parse_char)]
        p: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Build a semigroup from a builtin expression and write its Cayley table
    Construct {
        /// e.g. "QG(cyclic(4))" or "union_quotient(symmetric(3), alternating(3))"
        #[arg(long)]
        builtin: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross-check everything against brute force over the builtin corpus
    Oracle {
        #[arg(long, default_value_t = 24)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// A Cayley table file, `trans:FILE` for transformation generators, or
    /// `builtin:EXPR`
    #[arg(long)]
    input: String,
    #[arg(long)]
    skip_assoc_check: bool,
}

#[derive(Args)]
struct GroupArgs {
    /// Same sources as --input; the result must be a group
    #[arg(long, alias = "input")]
    group: String,
    /// Comma-separated element indices, or a group expression naming an
    /// isomorphism type of normal subgroup
    #[arg(long)]
    normal: Option<String>,
    #[arg(long)]
    skip_assoc_check: bool,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_char(s: &str) -> Result<u64, String> {
    let p: u64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if p == 0 || is_prime(p) {
        Ok(p)
    } else {
        Err(format!("{p} is neither 0 nor a prime"))
    }
}

type Failure = String;

fn load(source: &str, skip_check: bool) -> Result<Semigroup, Failure> {
    let check = if skip_check {
        AssocCheck::Skip
    } else {
        AssocCheck::Verify
    };
    if let Some(expr) = source.strip_prefix("builtin:") {
        return parse_builtin(expr).map_err(|e| format!("{expr}: {e}"));
    }
    let (path, trans) = match source.strip_prefix("trans:") {
        Some(p) => (p, true),
        None => {
            let p = source.strip_prefix("cayley:").unwrap_or(source);
            (p, p.ends_with(".trans"))
        }
    };
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let built = if trans {
        parse_transformations(&text).and_then(|gens| closure_from_transformations(&gens))
    } else {
        Semigroup::parse_cayley_text(&text, check)
    };
    built.map_err(|e| format!("{path}: {e}"))
}

fn load_group(args: &GroupArgs) -> Result<(Group, NormalSubgroup), Failure> {
    let s = load(&args.group, args.skip_assoc_check)?;
    let g = Group::from_semigroup(&s).map_err(|e| format!("{}: {e}", args.group))?;
    let n = match args.normal.as_deref().map(str::trim) {
        None => g.whole(),
        Some(list) if list.starts_with(|c: char| c.is_ascii_digit()) => {
            let elems: Vec<usize> = list
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| format!("bad element {t:?}")))
                .collect::<Result<_, _>>()?;
            let local: Vec<usize> = elems.iter().filter_map(|&x| g.local_index(x)).collect();
            if local.len() != elems.len() {
                return Err(format!("{list}: element out of range"));
            }
            g.normal_subgroup(&local)
                .map_err(|e| format!("--normal {list}: {e}"))?
        }
        Some(name) => {
            let h = parse_builtin(name)
                .and_then(|s| Group::from_semigroup(&s))
                .map_err(|e| format!("--normal {name}: {e}"))?;
            find_normal_isomorphic(&g, &h).map_err(|e| format!("--normal {name}: {e}"))?
        }
    };
    Ok((g, n))
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| e.to_string())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let err = |e: semirep::Error| e.to_string();
    match cli.command {
        Command::Green { input, output } => {
            let s = load(&input.input, input.skip_assoc_check)?;
            let green = compute_green(&s);
            let order = j_order(&green);
            let mut groups = Vec::new();
            for class in &green.j_classes {
                groups.push(if class.regular {
                    Some(
                        maximal_subgroup(&s, &green, class.id, None)
                            .map_err(err)?
                            .group
                            .order(),
                    )
                } else {
                    None
                });
            }
            let text = if output.json {
                let classes: Vec<_> = green
                    .j_classes
                    .iter()
                    .zip(&groups)
                    .map(|(c, g)| {
                        json!({
                            "j": c.id,
                            "size": c.elements.len(),
                            "regular": c.regular,
                            "idempotents": c.idempotents.len(),
                            "group_order": g,
                            "elements": c.elements,
                        })
                    })
                    .collect();
                pretty(&json!({ "order": s.order(), "classes": classes, "covers": order.covers() }))
            } else {
                render::green(&s, &green, &groups, order.covers())
            };
            emit(&output.out, &text)?;
        }
        Command::Congruence { input, output } => {
            let s = load(&input.input, input.skip_assoc_check)?;
            let green = compute_green(&s);
            let order = j_order(&green);
            let cong = CongruenceAnalysis::compute(&s, &green, &order).map_err(err)?;
            let mut rows = Vec::new();
            for (j, c) in &cong.congruences.by_class {
                let ms = maximal_subgroup(&s, &green, *j, None).map_err(err)?;
                let nj = compute_n_j(&s, &order, &ms, &cong.congruences).map_err(err)?;
                let verdict = cong.classification.verdicts.iter().find(|v| v.j == *j);
                rows.push(render::CongruenceRow {
                    j: *j,
                    class_sizes: c.class_sizes(),
                    trivial: c.is_trivial(),
                    irreducible: cong.classification.is_irreducible(*j),
                    witness: verdict.and_then(|v| v.witness),
                    gj_order: ms.group.order(),
                    nj_order: nj.carrier.len(),
                });
            }
            let ggm_trivial = cong.ggm.is_trivial();
            let text = if output.json {
                pretty(&json!({ "ggm_trivial": ggm_trivial, "classes": rows }))
            } else {
                render::congruence(ggm_trivial, &rows)
            };
            emit(&output.out, &text)?;
        }
        Command::Socle { group, output } => {
            let (g, n) = load_group(&group)?;
            let summary = render::SocleSummary::compute(&g, &n).map_err(err)?;
            let text = if output.json {
                pretty(&summary)
            } else {
                summary.to_text()
            };
            emit(&output.out, &text)?;
        }
        Command::Zmud { group, p, out } => {
            let (g, n) = load_group(&group)?;
            emit(&out, &pretty(&zmud_number(&g, &n, p).map_err(err)?))?;
        }
        Command::Analyze { input, p, output } => {
            let s = load(&input.input, input.skip_assoc_check)?;
            let report = analyze(&s, p).map_err(err)?;
            let text = if output.json {
                pretty(&report)
            } else {
                render::report(&report)
            };
            emit(&output.out, &text)?;
        }
        Command::Construct { builtin, out } => {
            let s = parse_builtin(&builtin).map_err(|e| format!("{builtin}: {e}"))?;
            emit(&out, &s.to_cayley_text())?;
        }
        Command::Oracle {
            max_order,
            seed,
            output,
        } => {
            let report = run_suite(max_order, seed).map_err(err)?;
            let text = if output.json {
                pretty(&report)
            } else {
                render::suite(&report, seed)
            };
            emit(&output.out, &text)?;
            return Ok(report.failures() == 0);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
