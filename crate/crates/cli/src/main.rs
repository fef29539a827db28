use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use log::info;
use pivd_core::graph::io::{parse_family, parse_graph, to_dot, write_graph};
use pivd_core::graph::{is_isomorphic, Graph};
use pivd_core::hereditary::{
    alpha_sequence, classify, gamma_sequence, normalize_family, select_h_pi, CPrimeMode, ForbiddenFamily, PropertyClass,
};
use pivd_core::reductions::{
    plan_for, reduce, subdivide_for_girth, validate_source, Mutation, Options, PiVDInstance, SmallSourcePolicy, VCInstance, Variant,
};
use pivd_core::solvers::{
    solve_branching, solve_bruteforce, solve_connected_bruteforce, solve_mindegree, solve_subexp, SolveResult, Threshold,
};
use pivd_core::verify::{check_equivalence, random_gnm, HarnessOptions, SourceBudget};
use pivd_core::Error;
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(name = "pivd", version, about = "Vertex deletion to hereditary properties: reductions, solvers and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sequences, gadget selection and decomposition for a forbidden family.
    Props {
        #[arg(long)]
        family: PathBuf,
        #[arg(long, value_enum, default_value_t = CPrime::Degeneracy)]
        c_prime: CPrime,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Reduce a vertex cover instance to a deletion instance.
    Reduce {
        #[arg(long)]
        family: PathBuf,
        #[arg(long, visible_alias = "source")]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_variant, default_value = "main")]
        variant: Variant,
        /// Output graph file; the JSON sidecar goes next to it.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long, visible_alias = "cprime", value_enum, default_value_t = CPrime::Degeneracy)]
        c_prime: CPrime,
        /// Subdivide the source first: `auto` uses the gadget multiplicity
        /// when the source fails validation, a number forces that parameter.
        #[arg(long)]
        girth_d: Option<GirthD>,
        #[arg(long, value_enum, default_value_t = SmallSource::Construct)]
        small_source: SmallSource,
        #[arg(long, env = "PIVD_ORDER_CAP")]
        order_cap: Option<usize>,
    },
    /// Decide a deletion instance.
    Solve {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        algo: Algo,
        #[arg(long, value_enum, default_value_t = ThresholdArg::Default)]
        threshold: ThresholdArg,
        /// Minimum-degree parameter for `mindegree`.
        #[arg(long, default_value_t = 1)]
        min_degree: usize,
        #[arg(long, env = "PIVD_ORDER_CAP")]
        order_cap: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check a construction against vertex cover on many sources.
    Verify {
        #[arg(long)]
        family: PathBuf,
        #[arg(long, value_parser = parse_variant)]
        variant: Variant,
        #[arg(long, default_value_t = 5)]
        exhaustive_n: usize,
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 5)]
        random_min_n: usize,
        #[arg(long, default_value_t = 8)]
        random_max_n: usize,
        #[arg(long)]
        seed: u64,
        /// Also lift every yes certificate back to a vertex cover.
        #[arg(long)]
        lifting: bool,
        #[arg(long, value_enum)]
        mutation: Option<MutationArg>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Time the subexponential solver against brute force on growing edge counts.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "10,20,30,50,100")]
        m: Vec<usize>,
        /// Vertices per instance as a fraction of `m`.
        #[arg(long, default_value_t = 0.25)]
        n_ratio: f64,
        /// Skip brute force above this many vertices.
        #[arg(long, default_value_t = 16)]
        brute_max_n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CPrime {
    #[value(alias = "degen")]
    Degeneracy,
    Arbitrary,
}

impl From<CPrime> for CPrimeMode {
    fn from(c: CPrime) -> Self {
        match c {
            CPrime::Degeneracy => CPrimeMode::Degeneracy,
            CPrime::Arbitrary => CPrimeMode::Arbitrary,
        }
    }
}

#[derive(Clone, Copy)]
enum GirthD {
    Auto,
    Fixed(usize),
}

impl std::str::FromStr for GirthD {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(GirthD::Auto),
            _ => s.parse().map(GirthD::Fixed).map_err(|_| format!("expected 'auto' or a number, got '{s}'")),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SmallSource {
    Construct,
    Shortcut,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Algo {
    Brute,
    Branch,
    Subexp,
    Mindegree,
    ConnectedBrute,
}

#[derive(Clone, Copy, ValueEnum)]
enum ThresholdArg {
    Default,
    #[value(name = "sqrt2m-over-d")]
    Sqrt2mOverD,
}

#[derive(Clone, Copy, ValueEnum)]
enum MutationArg {
    DropBase,
    WrongBudget,
    WrongCPrime,
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    Variant::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = Variant::ALL.iter().map(|v| v.name()).collect();
        format!("unknown variant '{s}', expected one of {}", names.join(", "))
    })
}

/// Failure with its exit status and a hint on how to fix it.
struct Failure {
    code: u8,
    msg: String,
    hint: &'static str,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, hint) = match &e {
            Error::Io(_) => (3, "check that the path exists and is readable or writable"),
            Error::Parse { .. } => (3, "graph files use 'p <n> <m>' then one 'e <u> <v>' per edge; separate family members with '---'"),
            Error::Incompatible(_) => (2, "run `pivd props` to see how the family is classified, then pick a matching variant or solver"),
            Error::EdgelessGadget => (2, "the selected gadget has no edges; complement variants handle families with edgeless members"),
            Error::NoPlanarMember => (2, "planar variants need a planar family member"),
            Error::NotSubcubic(_) => (2, "sources must have maximum degree 3"),
            _ => (2, "check the inputs against `pivd --help`"),
        };
        Failure { code, msg: e.to_string(), hint }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 3,
        msg: format!("{}: {e}", path.display()),
        hint: "check that the path exists and is readable or writable",
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| io_failure(path, e))
}

fn read_family(path: &Path) -> Result<ForbiddenFamily, Failure> {
    Ok(normalize_family(parse_family(&read_text(path)?)?)?)
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(parse_graph(&read_text(path)?)?)
}

/// Writes through a temporary sibling so readers never see partial files.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".partial");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents).map_err(|e| io_failure(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| io_failure(path, e))
}

fn write_json(path: &Path, value: &impl Serialize) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize");
    text.push('\n');
    write_atomic(path, &text)
}

fn finish_report(report: Option<&Path>, value: &impl Serialize) -> Result<(), Failure> {
    match report {
        Some(p) => write_json(p, value),
        None => Ok(()),
    }
}

fn cmd_props(family: &Path, c_prime: CPrime, report: Option<&Path>) -> Result<u8, Failure> {
    let raw = parse_family(&read_text(family)?)?;
    let fam = normalize_family(raw.clone())?;
    let mut text = String::new();
    let mut members = Vec::new();
    for (i, g) in raw.iter().enumerate() {
        let comps: Vec<Graph> = g.connected_components().iter().map(|c| g.induced_subgraph(c).unwrap()).collect();
        let alphas: Vec<Vec<usize>> = comps.iter().map(|h| alpha_sequence(h).unwrap().0).collect();
        let gamma: Vec<Vec<usize>> = gamma_sequence(g).0.into_iter().map(|k| k.alpha).collect();
        writeln!(text, "member {i}: n={} m={} alpha per component {alphas:?} gamma {gamma:?}", g.n(), g.m()).unwrap();
        members.push(json!({ "n": g.n(), "m": g.m(), "alpha": alphas, "gamma": gamma }));
    }
    let class = classify(&fam);
    writeln!(text, "class: {class:?}").unwrap();
    let plan = match class {
        PropertyClass::ContainsAllIndependentSets => {
            let h = select_h_pi(&fam, false)?;
            let p = pivd_core::hereditary::build_gadget_plan(&h, c_prime.into())?;
            let member = raw.iter().position(|g| is_isomorphic(g, &h)).unwrap();
            writeln!(text, "selected member {member}").unwrap();
            writeln!(
                text,
                "H1: n={} m={} d={} c={} J: {:?} c'={} D: {:?} max degree {} degeneracy {}",
                p.h1.n(), p.h1.m(), p.d, p.c, p.j_vertices, p.c_prime, p.d_vertices, p.delta_max_degree, p.delta_degeneracy
            )
            .unwrap();
            Some((member, p))
        }
        PropertyClass::ExcludesIndependentSet { d_is } => {
            writeln!(text, "edgeless member on {d_is} vertices; use the complement variants or the subexp solver").unwrap();
            None
        }
    };
    print!("{text}");
    let value = json!({
        "members": members,
        "class": format!("{class:?}"),
        "selected": plan.as_ref().map(|(m, _)| m),
        "plan": plan.as_ref().map(|(_, p)| p),
    });
    finish_report(report, &value)?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_reduce(
    family: &Path,
    graph: &Path,
    k: usize,
    variant: Variant,
    out: &Path,
    dot: Option<&Path>,
    c_prime: CPrime,
    girth_d: Option<GirthD>,
    small_source: SmallSource,
    order_cap: Option<usize>,
) -> Result<u8, Failure> {
    let fam = read_family(family)?;
    let g = read_graph(graph)?;
    let mut src = VCInstance::new(g, k);
    let opts = Options {
        small_source: match small_source {
            SmallSource::Construct => SmallSourcePolicy::Construct,
            SmallSource::Shortcut => SmallSourcePolicy::Shortcut,
        },
        c_prime_mode: c_prime.into(),
        witness_cap: order_cap,
        ..Default::default()
    };
    let plan = plan_for(variant, &fam, opts.c_prime_mode)?;
    let t = match girth_d {
        Some(GirthD::Auto) if !validate_source(&src, plan.d).ok() => Some(plan.d),
        Some(GirthD::Fixed(d)) => Some(d),
        _ => None,
    };
    if let Some(d) = t {
        src = subdivide_for_girth(&src, d)?;
        println!("subdivided source: n={} m={} k={}", src.graph.n(), src.graph.m(), src.k);
    }
    let source = validate_source(&src, plan.d);
    if !source.ok() {
        eprintln!("warning: source is not a valid input for this gadget: {source:?}");
    }
    let r = reduce(variant, &src, &fam, &opts)?;
    let mut labeled = r.instance.graph.clone();
    labeled.set_labels(r.provenance.labels()).expect("one label per vertex");
    write_atomic(out, &write_graph(&r.instance.graph))?;
    let mut sidecar = out.as_os_str().to_owned();
    sidecar.push(".json");
    write_json(
        Path::new(&sidecar),
        &json!({
            "variant": variant.name(),
            "k": k,
            "source_k": src.k,
            "k_prime": r.instance.k,
            "n": r.instance.graph.n(),
            "m": r.instance.graph.m(),
            "connected_variant": r.instance.connected_variant,
            "source": source,
            "provenance": r.provenance.labels(),
            "plan": r.plan,
        }),
    )?;
    if let Some(p) = dot {
        write_atomic(p, &to_dot(&labeled, variant.name()))?;
    }
    println!(
        "{}: n'={} m'={} k'={} written to {}",
        variant.name(),
        r.instance.graph.n(),
        r.instance.graph.m(),
        r.instance.k,
        out.display()
    );
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    family: &Path,
    graph: &Path,
    k: usize,
    algo: Algo,
    threshold: ThresholdArg,
    min_degree: usize,
    order_cap: Option<usize>,
    report: Option<&Path>,
) -> Result<u8, Failure> {
    let fam = read_family(family)?;
    let g = read_graph(graph)?;
    let mut inst = PiVDInstance::new(g, k, fam);
    let threshold = match threshold {
        ThresholdArg::Default => Threshold::Default,
        ThresholdArg::Sqrt2mOverD => Threshold::Sqrt2mOverD,
    };
    let res: SolveResult = match algo {
        Algo::Brute => solve_bruteforce(&inst),
        Algo::Branch => solve_branching(&inst),
        Algo::Subexp => solve_subexp(&inst, threshold)?,
        Algo::Mindegree => {
            let cap = order_cap.unwrap_or(8);
            if !pivd_core::solvers::mindegree_premise_holds(&inst.family, min_degree, cap) {
                return Err(Error::Incompatible(format!(
                    "no listed graph of minimum degree at least {min_degree} (up to order {cap}) has the property"
                ))
                .into());
            }
            solve_mindegree(&inst, min_degree)
        }
        Algo::ConnectedBrute => {
            inst.connected_variant = true;
            solve_connected_bruteforce(&inst)
        }
    };
    let cert = res.certificate.as_ref().map(|c| c.vertices.clone());
    match &cert {
        Some(c) => println!("yes: delete {c:?} ({} vertices)", c.len()),
        None => println!("no"),
    }
    println!("branches {} membership calls {}", res.branch_count, res.membership_calls);
    finish_report(
        report,
        &json!({
            "algo": algo,
            "k": k,
            "answer": res.answer,
            "certificate": cert,
            "branch_count": res.branch_count,
            "membership_calls": res.membership_calls,
        }),
    )?;
    Ok(0)
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    family: &Path,
    variant: Variant,
    exhaustive_n: usize,
    random: usize,
    random_n: (usize, usize),
    seed: u64,
    lifting: bool,
    mutation: Option<MutationArg>,
    report: Option<&Path>,
) -> Result<u8, Failure> {
    let fam = read_family(family)?;
    if exhaustive_n > 8 {
        return Err(Error::Invalid("exhaustive enumeration is limited to 8 vertices".into()).into());
    }
    if random > 0 && (random_n.0 == 0 || random_n.0 > random_n.1) {
        return Err(Error::Invalid("random source sizes need 1 <= min <= max".into()).into());
    }
    let budget = SourceBudget { exhaustive_n, random, random_n, seed };
    let opts = HarnessOptions {
        construction: Options {
            mutation: mutation.map(|m| match m {
                MutationArg::DropBase => Mutation::DropBase,
                MutationArg::WrongBudget => Mutation::WrongBudget,
                MutationArg::WrongCPrime => Mutation::WrongCPrime,
            }),
            ..Default::default()
        },
        lifting,
    };
    let r = check_equivalence(variant, &fam, &budget, &opts)?;
    println!(
        "{}: {} sources, {} instances ({} yes), {} mismatches",
        variant.name(),
        r.sources_tested,
        r.instances_tested,
        r.yes_instances,
        r.mismatches.len()
    );
    for (name, a) in &r.audits {
        println!("  audit {name}: {}/{} failed", a.failed, a.checked);
    }
    for m in r.mismatches.iter().take(5) {
        println!("  mismatch k={} source={} reduced={}: {}", m.k, m.source_answer, m.reduced_answer, m.source.replace('\n', " "));
    }
    finish_report(report, &r)?;
    Ok(if r.pass() { 0 } else { 1 })
}

fn cmd_bench(ms: &[usize], n_ratio: f64, brute_max_n: usize, seed: u64, out: &Path) -> Result<u8, Failure> {
    let fam = normalize_family(vec![Graph::empty(2)])?;
    let mut csv = String::from("m,n,k,algo,answer,branch_count,wall_ms\n");
    for (i, &m) in ms.iter().enumerate() {
        let n = ((m as f64 * n_ratio).ceil() as usize).max(2);
        let n = n.max((1..).find(|&x| x * (x - 1) / 2 >= m).unwrap());
        let g = random_gnm(n, m, seed.wrapping_add(i as u64));
        let inst = PiVDInstance::new(g, n / 2, fam.clone());
        let t = Instant::now();
        let r = solve_subexp(&inst, Threshold::Default)?;
        writeln!(csv, "{m},{n},{},subexp,{},{},{:.3}", inst.k, r.answer, r.branch_count, t.elapsed().as_secs_f64() * 1e3).unwrap();
        info!("m={m} subexp branches {}", r.branch_count);
        if n <= brute_max_n {
            let t = Instant::now();
            let b = solve_bruteforce(&inst);
            writeln!(csv, "{m},{n},{},brute,{},{},{:.3}", inst.k, b.answer, b.branch_count, t.elapsed().as_secs_f64() * 1e3).unwrap();
        }
    }
    write_atomic(out, &csv)?;
    print!("{csv}");
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Props { family, c_prime, report } => cmd_props(&family, c_prime, report.as_deref()),
        Command::Reduce { family, graph, k, variant, out, dot, c_prime, girth_d, small_source, order_cap } => {
            cmd_reduce(&family, &graph, k, variant, &out, dot.as_deref(), c_prime, girth_d, small_source, order_cap)
        }
        Command::Solve { family, graph, k, algo, threshold, min_degree, order_cap, report } => {
            cmd_solve(&family, &graph, k, algo, threshold, min_degree, order_cap, report.as_deref())
        }
        Command::Verify {
            family,
            variant,
            exhaustive_n,
            random,
            random_min_n,
            random_max_n,
            seed,
            lifting,
            mutation,
            report,
        } => cmd_verify(
            &family,
            variant,
            exhaustive_n,
            random,
            (random_min_n, random_max_n),
            seed,
            lifting,
            mutation,
            report.as_deref(),
        ),
        Command::Bench { m, n_ratio, brute_max_n, seed, out } => cmd_bench(&m, n_ratio, brute_max_n, seed, &out),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}\nhint: {}", f.msg, f.hint);
            ExitCode::from(f.code)
        }
    }
}
