//! `apbribe`: decide, verify and benchmark destructive bribery instances.
//!
//! Exit status: 0 for yes/success, 1 for no/failure, 2 for errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use approval_bribery::bench::{run_suite, Suite};
use approval_bribery::dispatch::{solve, Algorithm};
use approval_bribery::election::winning_committees;
use approval_bribery::gadgets::{
    gen_appadd_sav_rx3c, gen_nwd_ccav, gen_nwd_pav, gen_vc_av_clique, gen_vc_av_rx3c, gen_vdc_av_rx3c,
    pad_with_dummies, plant_witness, source_bruteforce, Gadget, GadgetKind,
};
use approval_bribery::io::{
    instance_digest, parse_election, parse_graph, parse_rx3c, parse_script, write_election, write_script,
    InstanceParams, RunReport,
};
use approval_bribery::model::{apply_script, check_solution_detailed, SolutionFailure};
use approval_bribery::rational::fraction_string;
use approval_bribery::{BriberyInstance, Election, Limits, OperationKind, Rule};

#[derive(Parser)]
#[command(name = "apbribe", version, about = "Destructive bribery in approval-based committee elections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an instance and print the decision as JSON.
    Solve {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, default_value = "auto")]
        algorithm: Algorithm,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Print every winning committee and the winning score.
    Winners {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        rule: Rule,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Check that a script is legal and excludes the distinguished candidates.
    Verify {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        script: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Build a reduction instance (and its planted script when one exists).
    Gadget {
        #[arg(long)]
        kind: GadgetKind,
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        rx3c: Option<PathBuf>,
        /// Target set size for the graph gadgets.
        #[arg(long)]
        kappa: Option<usize>,
        /// Distance bound; defaults to the smallest the construction allows.
        #[arg(long)]
        r: Option<usize>,
        /// Allow the clique gadget on graphs with degree at most kappa^3.
        #[arg(long)]
        relax: bool,
        /// Pad a SAV gadget with never-approved candidates and switch it to NSAV.
        #[arg(long)]
        pad_nsav: bool,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Run a benchmark suite and print CSV.
    Bench {
        /// Suite JSON; without it a default suite of random instances is used.
        #[arg(long)]
        suite: Option<PathBuf>,
        /// Seed for random instances (overrides the suite's).
        #[arg(long)]
        seed: Option<u64>,
        /// Add a wall-clock column (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
}

#[derive(Args)]
struct InstanceArgs {
    /// Election file.
    #[arg(long)]
    instance: PathBuf,
    /// Parameter JSON (rule, op, k, ell, r, distinguished); flags override it.
    #[arg(long)]
    params: Option<PathBuf>,
    #[arg(long)]
    rule: Option<Rule>,
    #[arg(long)]
    op: Option<OperationKind>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    ell: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    /// Comma-separated candidate indices.
    #[arg(long, value_delimiter = ',')]
    distinguished: Option<Vec<usize>>,
}

impl InstanceArgs {
    fn load(&self) -> Result<BriberyInstance> {
        let election = read_election(&self.instance)?;
        let base = match &self.params {
            Some(p) => Some(InstanceParams::from_json(&read(p)?).with_context(|| p.display().to_string())?),
            None => None,
        };
        let pick = |flag: Option<usize>, from: Option<usize>, name: &str| {
            flag.or(from).ok_or_else(|| anyhow!("missing --{name}"))
        };
        let params = InstanceParams {
            rule: self.rule.or(base.as_ref().map(|b| b.rule)).ok_or_else(|| anyhow!("missing --rule"))?,
            op: self.op.or(base.as_ref().map(|b| b.op)).ok_or_else(|| anyhow!("missing --op"))?,
            k: pick(self.k, base.as_ref().map(|b| b.k), "k")?,
            ell: pick(self.ell, base.as_ref().map(|b| b.ell), "ell")?,
            r: self.r.or(base.as_ref().map(|b| b.r)).unwrap_or(0),
            distinguished: self
                .distinguished
                .clone()
                .or(base.map(|b| b.distinguished))
                .ok_or_else(|| anyhow!("missing --distinguished"))?,
        };
        Ok(params.instance(election)?)
    }
}

#[derive(Args)]
struct CapArgs {
    #[arg(long)]
    committee_cap: Option<u128>,
    #[arg(long)]
    search_cap: Option<u128>,
    #[arg(long)]
    subset_cap: Option<u128>,
    #[arg(long)]
    ip_node_cap: Option<u64>,
    #[arg(long)]
    ip_variable_cap: Option<usize>,
}

impl CapArgs {
    fn limits(&self) -> Limits {
        let d = Limits::default();
        Limits {
            committee_cap: self.committee_cap.unwrap_or(d.committee_cap),
            search_cap: self.search_cap.unwrap_or(d.search_cap),
            subset_cap: self.subset_cap.unwrap_or(d.subset_cap),
            ip_node_cap: self.ip_node_cap.unwrap_or(d.ip_node_cap),
            ip_variable_cap: self.ip_variable_cap.unwrap_or(d.ip_variable_cap),
            ..d
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_election(path: &Path) -> Result<Election> {
    parse_election(&read(path)?).with_context(|| path.display().to_string())
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn run_solve(instance: &InstanceArgs, algorithm: Algorithm, caps: &CapArgs) -> Result<ExitCode> {
    let inst = instance.load()?;
    let start = Instant::now();
    let decision = solve(&inst, algorithm, &caps.limits())?;
    let report = RunReport {
        digest: instance_digest(&inst),
        op: inst.op,
        time_ms: start.elapsed().as_millis() as u64,
        decision,
    };
    println!("{}", report.to_json());
    Ok(ExitCode::from(if report.decision.answer { 0 } else { 1 }))
}

fn committees_json(e: &Election, rule: Rule, k: usize, limits: &Limits) -> Result<serde_json::Value> {
    let w = winning_committees(e, rule, k, limits)?;
    let committees: Vec<&[usize]> = w.committees.iter().map(|c| c.members()).collect();
    Ok(json!({ "committees": committees, "score": fraction_string(&w.score) }))
}

fn run_verify(instance: &InstanceArgs, script: &Path, caps: &CapArgs) -> Result<ExitCode> {
    let inst = instance.load()?;
    let (op, s) = parse_script(&read(script)?).with_context(|| script.display().to_string())?;
    if op != inst.op {
        bail!("script is for operation {op}, instance uses {}", inst.op);
    }
    let limits = caps.limits();
    match check_solution_detailed(&inst, &s, &limits)? {
        Ok(()) => {
            println!("ok: no distinguished candidate wins after the script");
            Ok(ExitCode::SUCCESS)
        }
        Err(SolutionFailure::Invalid(v)) => {
            println!("invalid script: {v}");
            Ok(ExitCode::from(1))
        }
        Err(SolutionFailure::NotExcluded) => {
            let after = apply_script(&inst.election, &s);
            let winners = committees_json(&after, inst.rule, inst.k, &limits)?;
            println!("not excluded; winning committees after the script: {winners}");
            Ok(ExitCode::from(1))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_gadget(
    kind: GadgetKind,
    graph: Option<&Path>,
    rx3c: Option<&Path>,
    kappa: Option<usize>,
    r: Option<usize>,
    relax: bool,
    pad_nsav: bool,
    output: &Path,
    caps: &CapArgs,
) -> Result<ExitCode> {
    let gadget: Gadget = if kind.uses_rx3c() {
        let path = rx3c.ok_or_else(|| anyhow!("--kind {kind} needs --rx3c"))?;
        let src = parse_rx3c(&read(path)?).with_context(|| path.display().to_string())?;
        match kind {
            GadgetKind::AppAddSavRx3c => gen_appadd_sav_rx3c(&src)?,
            GadgetKind::VcAvRx3c => gen_vc_av_rx3c(&src, r.unwrap_or(4))?,
            _ => gen_vdc_av_rx3c(&src, r.unwrap_or(3))?,
        }
    } else {
        let path = graph.ok_or_else(|| anyhow!("--kind {kind} needs --graph"))?;
        let g = parse_graph(&read(path)?).with_context(|| path.display().to_string())?;
        let kappa = kappa.ok_or_else(|| anyhow!("--kind {kind} needs --kappa"))?;
        match kind {
            GadgetKind::NwdCcav => gen_nwd_ccav(&g, kappa)?,
            GadgetKind::NwdPav => gen_nwd_pav(&g, kappa)?,
            _ => gen_vc_av_clique(&g, kappa, r.unwrap_or(3), relax)?,
        }
    };
    let gadget = if pad_nsav { pad_with_dummies(&gadget)? } else { gadget };
    let inst = &gadget.instance;
    fs::create_dir_all(output).with_context(|| format!("creating {}", output.display()))?;
    write(&output.join("instance.txt"), &write_election(&inst.election))?;
    write(&output.join("params.json"), &InstanceParams::of(inst).to_json())?;
    let witness = source_bruteforce(&gadget, &caps.limits())?;
    if let Some(w) = &witness {
        write(&output.join("script.json"), &write_script(inst.op, &plant_witness(&gadget, w)?))?;
    }
    println!(
        "{kind}: {} candidates, {} votes, planted script {}",
        inst.election.num_candidates(),
        inst.election.num_votes(),
        if witness.is_some() { "written" } else { "not available (source instance is a no-instance)" }
    );
    Ok(ExitCode::SUCCESS)
}

fn run_bench(
    suite: Option<&Path>,
    seed: Option<u64>,
    timing: bool,
    output: Option<&Path>,
    caps: &CapArgs,
) -> Result<ExitCode> {
    let (mut s, base) = match suite {
        Some(p) => (
            Suite::from_json(&read(p)?).with_context(|| p.display().to_string())?,
            p.parent().map(Path::to_path_buf).unwrap_or_default(),
        ),
        None => (Suite::default_random(seed.unwrap_or(0)), PathBuf::from(".")),
    };
    if let Some(seed) = seed {
        s.seed = seed;
    }
    let csv = run_suite(&s, &base, &caps.limits(), timing)?;
    match output {
        Some(p) => write(p, &csv)?,
        None => print!("{csv}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve {
            instance,
            algorithm,
            caps,
        } => run_solve(&instance, algorithm, &caps),
        Command::Winners { instance, rule, k, caps } => {
            let e = read_election(&instance)?;
            println!("{}", committees_json(&e, rule, k, &caps.limits())?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { instance, script, caps } => run_verify(&instance, &script, &caps),
        Command::Gadget {
            kind,
            graph,
            rx3c,
            kappa,
            r,
            relax,
            pad_nsav,
            output,
            caps,
        } => run_gadget(
            kind,
            graph.as_deref(),
            rx3c.as_deref(),
            kappa,
            r,
            relax,
            pad_nsav,
            &output,
            &caps,
        ),
        Command::Bench {
            suite,
            seed,
            timing,
            output,
            caps,
        } => run_bench(suite.as_deref(), seed, timing, output.as_deref(), &caps),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
