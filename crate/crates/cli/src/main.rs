//! `oa`: check, solve, reduce and measure offensive alliance instances.
//!
//! Exit status is 0 for yes/ok, 1 for no, 2 for errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use oa_core::dot::to_dot;
use oa_core::format::{
    parse_instance, parse_mrss, parse_vertex_list, write_instance, write_mrss, write_traces,
};
use oa_core::gen::{gen_random, Generated, Profile};
use oa_core::reduce::{self, ReductionTrace, Step};
use oa_core::structparams::{check_deletion_set, fvs_exact, min_deletion_set, treedepth_exact};
use oa_core::{
    check_solution, mrss_solve, naive_solve, solve_parallel, violations, AnnotatedInstance, Answer,
    ComputeCap, MrssInstance,
};

#[derive(Parser)]
#[command(
    name = "oa",
    version,
    about = "Offensive alliance instances: verify, solve, reduce, measure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CapArgs {
    /// Largest number of candidate sets an exact search may enumerate.
    #[arg(long, default_value_t = ComputeCap::default().max_candidates)]
    cap: u128,
    /// Largest vertex count a construction may produce.
    #[arg(long, default_value_t = ComputeCap::default().max_vertices)]
    max_vertices: usize,
}

impl CapArgs {
    fn cap(&self) -> ComputeCap {
        ComputeCap {
            max_candidates: self.cap,
            max_vertices: self.max_vertices,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check a candidate set against an instance.
    Verify {
        instance: PathBuf,
        /// Comma-separated vertex ids, e.g. 1,4,7.
        #[arg(long)]
        set: String,
    },
    /// Find the smallest (then lexicographically first) solution.
    Solve {
        instance: PathBuf,
        /// Use plain exhaustive enumeration (at most 25 vertices).
        #[arg(long)]
        naive: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[command(flatten)]
        cap: CapArgs,
        /// Write a Graphviz rendering with the witness highlighted.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Solve a multidimensional relaxed subset sum instance.
    SolveMrss {
        instance: PathBuf,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Apply one reduction step or a prefix of the whole chain.
    Reduce {
        input: PathBuf,
        /// lemma2, cor1, lemma3, thm1, pipeline or pipeline:<last step>.
        #[arg(long)]
        step: String,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Solve both sides of a reduction and compare the answers.
    Equiv {
        source: PathBuf,
        #[arg(long)]
        step: String,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Structural parameters of an instance's graph.
    Param {
        instance: PathBuf,
        /// Deletion set into trees of at most this height (minimum, or check --set).
        #[arg(long, group = "param")]
        deletion_height: Option<usize>,
        #[arg(long, requires = "deletion_height")]
        set: Option<String>,
        #[arg(long, group = "param")]
        fvs: bool,
        #[arg(long, group = "param")]
        treedepth: bool,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Generate a random instance from a named profile.
    Gen {
        #[arg(long)]
        profile: String,
        #[arg(long)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// What a reduction command operates on.
enum Plan {
    Step(Step),
    Pipeline(Step),
}

fn parse_plan(text: &str) -> Result<Plan> {
    if text == "pipeline" {
        return Ok(Plan::Pipeline(Step::EliminateForbidden));
    }
    if let Some(stop) = text.strip_prefix("pipeline:") {
        return Ok(Plan::Pipeline(stop.parse()?));
    }
    Ok(Plan::Step(text.parse()?))
}

impl Plan {
    fn takes_mrss(&self) -> bool {
        matches!(self, Plan::Pipeline(_) | Plan::Step(Step::MrssGadget))
    }
}

enum Source {
    Mrss(MrssInstance),
    Annotated(AnnotatedInstance),
}

impl Source {
    fn answer(&self, cap: &ComputeCap) -> Result<Answer> {
        Ok(match self {
            Source::Mrss(m) => mrss_solve(m, cap)?.answer,
            Source::Annotated(a) => solve_parallel(a, cap, 1)?.answer,
        })
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
}

fn load_instance(path: &Path) -> Result<AnnotatedInstance> {
    parse_instance(&read(path)?).with_context(|| format!("in {}", path.display()))
}

fn load_source(path: &Path, plan: &Plan) -> Result<Source> {
    let text = read(path)?;
    let ctx = || format!("in {}", path.display());
    Ok(if plan.takes_mrss() {
        Source::Mrss(parse_mrss(&text).with_context(ctx)?)
    } else {
        Source::Annotated(parse_instance(&text).with_context(ctx)?)
    })
}

fn run_plan(
    plan: &Plan,
    source: &Source,
    cap: &ComputeCap,
) -> Result<(AnnotatedInstance, Vec<ReductionTrace>)> {
    match (plan, source) {
        (Plan::Pipeline(stop), Source::Mrss(m)) => Ok(reduce::pipeline(m, *stop, cap)?),
        (Plan::Step(Step::MrssGadget), Source::Mrss(m)) => {
            let (out, trace) = reduce::reduce_mrss(m)?;
            Ok((out, vec![trace]))
        }
        (Plan::Step(step), Source::Annotated(a)) => {
            let (out, trace) = reduce::apply(*step, a, cap)?;
            Ok((out, vec![trace]))
        }
        _ => bail!("step does not match the input format"),
    }
}

fn exit_for(answer: Answer) -> ExitCode {
    match answer {
        Answer::Yes => ExitCode::SUCCESS,
        Answer::No => ExitCode::from(1),
    }
}

fn verify(instance: &Path, set: &str) -> Result<ExitCode> {
    let inst = load_instance(instance)?;
    let s = parse_vertex_list(set)?;
    if check_solution(&inst, &s)? {
        println!("valid");
        return Ok(ExitCode::SUCCESS);
    }
    println!("invalid");
    if !inst.cardinality.admits(s.len(), inst.budget) {
        println!(
            "size {} violates {} budget {}",
            s.len(),
            inst.cardinality.as_str(),
            inst.budget
        );
    }
    for v in s.intersection(&inst.forbidden).iter() {
        println!("forbidden vertex {v} is in the set");
    }
    for v in inst.necessary.difference(&s).iter() {
        println!("necessary vertex {v} is missing");
    }
    for (v, margin) in violations(&inst.graph, &s, inst.kind)? {
        println!("vertex {v} falls short by {}", -margin);
    }
    Ok(ExitCode::from(1))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify { instance, set } => verify(&instance, &set),
        Command::Solve {
            instance,
            naive,
            threads,
            cap,
            dot,
        } => {
            let inst = load_instance(&instance)?;
            let out = if naive {
                naive_solve(&inst, &cap.cap())?
            } else {
                solve_parallel(&inst, &cap.cap(), threads)?
            };
            println!("answer {}", out.answer);
            if let Some(w) = &out.witness {
                println!("witness {w}");
            }
            println!("explored {}", out.explored);
            if let Some(path) = dot {
                write(&path, &to_dot(&inst, out.witness.as_ref()))?;
            }
            Ok(exit_for(out.answer))
        }
        Command::SolveMrss { instance, cap } => {
            let inst = parse_mrss(&read(&instance)?)?;
            let out = mrss_solve(&inst, &cap.cap())?;
            println!("answer {}", out.answer);
            if let Some(w) = &out.witness {
                let ids: Vec<String> = w.iter().map(usize::to_string).collect();
                println!("witness {}", ids.join(" "));
            }
            Ok(exit_for(out.answer))
        }
        Command::Reduce {
            input,
            step,
            output,
            trace,
            dot,
            cap,
        } => {
            let plan = parse_plan(&step)?;
            let source = load_source(&input, &plan)?;
            let (out, traces) = run_plan(&plan, &source, &cap.cap())?;
            write(&output, &write_instance(&out))?;
            if let Some(path) = trace {
                write(&path, &write_traces(&traces))?;
            }
            if let Some(path) = dot {
                write(&path, &to_dot(&out, None))?;
            }
            for t in &traces {
                let check = if t.size.holds() { "ok" } else { "MISMATCH" };
                println!(
                    "{}: budget {} -> {}, {} vertices, {} edges, size formula {check}",
                    t.step, t.budget_in, t.budget_out, t.size.actual_vertices, t.size.actual_edges
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv { source, step, cap } => {
            let cap = cap.cap();
            let plan = parse_plan(&step)?;
            let src = load_source(&source, &plan)?;
            let before = src.answer(&cap)?;
            let (reduced, _) = run_plan(&plan, &src, &cap)?;
            let after = solve_parallel(&reduced, &cap, 1)?.answer;
            println!("source {before}");
            println!("reduced {after}");
            if before == after {
                println!("EQUIVALENT");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("DIVERGED");
                Ok(ExitCode::from(1))
            }
        }
        Command::Param {
            instance,
            deletion_height,
            set,
            fvs,
            treedepth,
            cap,
        } => {
            let g = load_instance(&instance)?.graph;
            let cap = cap.cap();
            if let Some(h) = deletion_height {
                let Some(set) = set else {
                    println!("deletion_set {}", min_deletion_set(&g, h, &cap)?);
                    return Ok(ExitCode::SUCCESS);
                };
                let (ok, cert) = check_deletion_set(&g, &parse_vertex_list(&set)?, h)?;
                for (root, height) in &cert.component_heights {
                    println!("component {root} height {height}");
                }
                for root in &cert.cyclic_components {
                    println!("component {root} cyclic");
                }
                println!("{}", if ok { "valid" } else { "invalid" });
                Ok(ExitCode::from(if ok { 0 } else { 1 }))
            } else if fvs {
                println!("fvs {}", fvs_exact(&g, &cap)?);
                Ok(ExitCode::SUCCESS)
            } else if treedepth {
                println!("treedepth {}", treedepth_exact(&g, &cap)?);
                Ok(ExitCode::SUCCESS)
            } else {
                bail!("choose one of --deletion-height, --fvs, --treedepth")
            }
        }
        Command::Gen {
            profile,
            seed,
            output,
        } => {
            let text = match gen_random(seed, &Profile::by_name(&profile)?)? {
                Generated::Annotated(inst) => write_instance(&inst),
                Generated::Mrss(inst) => write_mrss(&inst),
            };
            write(&output, &text)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
