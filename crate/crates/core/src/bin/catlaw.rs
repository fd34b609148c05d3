//! Command line front end: parse a check document, run its checks or
//! inspect the structures it declares.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use catlaw::distlaw::lift_from_law;
use catlaw::dsl::{self, Value};
use catlaw::monad::build_em;
use catlaw::oracle;

#[derive(Parser)]
#[command(name = "catlaw", version, about = "Finite categories, distributive laws and their lifts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    Monads,
    Laws,
    Functors,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document, run every check and print a report.
    Check {
        file: PathBuf,
        #[arg(long)]
        format: Option<Format>,
        /// Enumeration bound (also settable via CATLAW_BOUND or `option bound`).
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Print the Eilenberg-Moore category of a declared monad.
    Em {
        file: PathBuf,
        #[arg(long)]
        monad: String,
    },
    /// Print the lift of a declared distributive law.
    Lift {
        file: PathBuf,
        #[arg(long)]
        law: String,
    },
    /// Recover the distributive law of a declared lift.
    LawFromLift {
        file: PathBuf,
        #[arg(long)]
        lift: String,
    },
    /// Enumerate monads, laws or functors declared-structure by structure.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        what: What,
        /// Category name for monads/functors (defaults to the only one).
        #[arg(long)]
        category: Option<String>,
        /// Monad name for laws.
        #[arg(long)]
        monad: Option<String>,
        /// Companion functor or comonad name for laws.
        #[arg(long)]
        companion: Option<String>,
    },
}

fn effective_bound(cli_bound: Option<usize>, doc: &dsl::Document) -> usize {
    cli_bound
        .or_else(|| {
            std::env::var("CATLAW_BOUND")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .or_else(|| dsl::document_bound(doc))
        .unwrap_or(oracle::DEFAULT_BOUND)
}

fn load(file: &PathBuf) -> Result<(dsl::Document, dsl::Env), String> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    let doc = dsl::parse_document(&text).map_err(|e| e.to_string())?;
    let env = dsl::elaborate(&doc);
    Ok((doc, env))
}

fn lookup<'a>(env: &'a dsl::Env, name: &str, kind: &str) -> Result<&'a Value, String> {
    env.lookup(name, kind)
}

fn run() -> Result<i32, String> {
    match Cli::parse().command {
        Command::Check { file, format, bound } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| format!("cannot read {}: {e}", file.display()))?;
            let doc = match dsl::parse_document(&text) {
                Ok(doc) => doc,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(2);
                }
            };
            let env = dsl::elaborate(&doc);
            let result = dsl::run_checks(&doc, &env, effective_bound(bound, &doc));
            let format = match (format, dsl::document_format(&doc)) {
                (Some(Format::Json), _) => dsl::FormatKind::Json,
                (Some(Format::Text), _) => dsl::FormatKind::Text,
                (None, Some(f)) => f,
                (None, None) => dsl::FormatKind::Text,
            };
            match format {
                dsl::FormatKind::Text => print!("{}", dsl::render_text(&result)),
                dsl::FormatKind::Json => println!("{}", dsl::render_json(&result)),
            }
            Ok(result.exit_code())
        }
        Command::Em { file, monad } => {
            let (_, env) = load(&file)?;
            let m = match lookup(&env, &monad, "monad")? {
                Value::Monad(m) => m.clone(),
                _ => unreachable!(),
            };
            let em = build_em(&m).map_err(|e| e.to_string())?;
            println!("algebras: {}", em.algebras.len());
            for (i, a) in em.algebras.iter().enumerate() {
                println!("  {i}: carrier {} action {}", a.carrier, a.action);
            }
            println!("morphisms: {}", em.em_morphisms.len());
            for (i, f) in em.em_morphisms.iter().enumerate() {
                println!("  {i}: {} -> {} over {}", f.src, f.tgt, f.underlying);
            }
            println!("forgetful objects: {:?}", em.forgetful.object_map);
            println!("free objects: {:?}", em.free.object_map);
            println!("unit components: {:?}", em.unit.components);
            println!("counit table: {:?}", em.counit);
            Ok(0)
        }
        Command::Lift { file, law } => {
            let (_, env) = load(&file)?;
            let d = match lookup(&env, &law, "distlaw")? {
                Value::DistLaw(d) => d.clone(),
                _ => unreachable!(),
            };
            let em = build_em(&d.monad).map_err(|e| e.to_string())?;
            let lifted = lift_from_law(&d, &em).map_err(|e| e.to_string())?;
            println!("lift objects: {:?}", lifted.endofunctor.object_map);
            println!("lift morphisms: {:?}", lifted.endofunctor.morphism_map);
            match &lifted.comonad {
                Some(w) => {
                    println!("lifted comonad delta: {:?}", w.delta.components);
                    println!("lifted comonad epsilon: {:?}", w.epsilon.components);
                }
                None => println!("companion is a bare endofunctor; no comonad lifted"),
            }
            Ok(0)
        }
        Command::LawFromLift { file, lift } => {
            let (_, env) = load(&file)?;
            let l = match lookup(&env, &lift, "lift")? {
                Value::Lift(l) => l.clone(),
                _ => unreachable!(),
            };
            let em = build_em(&l.monad).map_err(|e| e.to_string())?;
            let d = catlaw::distlaw::law_from_lift(&l.functor, &l.companion, &em)
                .map_err(|e| e.to_string())?;
            println!("law components: {:?}", d.law.components);
            Ok(0)
        }
        Command::Enumerate {
            file,
            what,
            category,
            monad,
            companion,
        } => {
            let (doc, env) = load(&file)?;
            let bound = effective_bound(None, &doc);
            let pick_category = || -> Result<std::sync::Arc<catlaw::fincat::FinCategory>, String> {
                match &category {
                    Some(name) => match lookup(&env, name, "category")? {
                        Value::Category(c) => Ok(c.clone()),
                        _ => unreachable!(),
                    },
                    None => {
                        let names = env.names_of_kind("category");
                        match names.as_slice() {
                            [only] => match lookup(&env, only, "category")? {
                                Value::Category(c) => Ok(c.clone()),
                                _ => unreachable!(),
                            },
                            [] => Err("no category declared".to_string()),
                            _ => Err(format!(
                                "several categories declared ({}); pick one with --category",
                                names.join(", ")
                            )),
                        }
                    }
                }
            };
            match what {
                What::Functors => {
                    let c = pick_category()?;
                    let fs = oracle::enumerate_functors(&c, bound).map_err(|e| e.to_string())?;
                    println!("functors: {}", fs.len());
                    for f in &fs {
                        println!("  objects {:?} morphisms {:?}", f.object_map, f.morphism_map);
                    }
                }
                What::Monads => {
                    let c = pick_category()?;
                    let ms = oracle::enumerate_monads(&c, bound).map_err(|e| e.to_string())?;
                    println!("monads: {}", ms.len());
                    for m in &ms {
                        println!(
                            "  carrier {:?} mu {:?} eta {:?}",
                            m.functor.object_map, m.mu.components, m.eta.components
                        );
                    }
                }
                What::Laws => {
                    let m = match &monad {
                        Some(name) => match lookup(&env, name, "monad")? {
                            Value::Monad(m) => m.clone(),
                            _ => unreachable!(),
                        },
                        None => return Err("laws need --monad".to_string()),
                    };
                    let g = match &companion {
                        Some(name) => match lookup(&env, name, "any")? {
                            Value::Functor(f) => {
                                catlaw::distlaw::Companion::Endofunctor(f.clone())
                            }
                            Value::Comonad(w) => catlaw::distlaw::Companion::Comonad(w.clone()),
                            v => {
                                return Err(format!(
                                    "`{name}` is a {}, expected a functor or comonad",
                                    v.kind()
                                ))
                            }
                        },
                        None => return Err("laws need --companion".to_string()),
                    };
                    let laws =
                        oracle::enumerate_dist_laws(&m, &g, bound).map_err(|e| e.to_string())?;
                    println!("laws: {}", laws.len());
                    for d in &laws {
                        println!("  components {:?}", d.law.components);
                    }
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code as u8),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
