use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use framekit::assembly::{
    assembly_booleanization_check, enumerate_nuclei_oracle, is_assembly_boolean, to_nuclear_set,
    validate_nucleus, Assembly,
};
use framekit::bounds::Bounds;
use framekit::dot::{poset_dot, space_dot};
use framekit::duality::{unit_counit_check, Duality};
use framekit::error::Error;
use framekit::io::{
    labels_of, lattice_json, nucleus_json, parse_lattice, parse_nucleus_json, parse_poset,
    parse_space, poset_json, space_json,
};
use framekit::lattice::FiniteLattice;
use framekit::simmons::{compactification_check, simmons_isbell_report};
use framekit::space::{front_topology, is_sober, scatter_report, t0_reflection, FiniteSpace};
use framekit::spatiality::{
    assembly_spatial_report, join_primes_of_assembly, nuclear_points, primes_agreement,
};
use framekit::subset::Subset;
use framekit::sweep::{sweep, Suite, SweepKind};

/// Finite Heyting algebras, their Esakia duals, assemblies of nuclei and
/// finite topological spaces.
#[derive(Parser, Debug)]
#[command(name = "framekit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The dual space X_L with the map φ.
    Dual(LatticeArg),
    /// The assembly N(L) as nuclear sets of X_L.
    Assembly(LatticeArg),
    /// Enumerate, count or validate nuclei on L.
    Nuclei(NucleiArgs),
    /// The nuclear points Y_L with the topology τ.
    Points(LatticeArg),
    /// Separation and scatteredness of a finite space.
    Space(SpaceArg),
    /// Run a theorem check on a lattice or a space.
    Check(CheckArgs),
    /// Run an invariant suite over every instance of a given size.
    Sweep(SweepArgs),
    /// Export a Graphviz diagram.
    ExportDot(DotArgs),
}

#[derive(Args, Debug)]
struct LatticeArg {
    /// Path to a lattice JSON file, or inline JSON.
    #[arg(long)]
    lattice: String,
}

#[derive(Args, Debug)]
struct SpaceArg {
    /// Path to a space JSON file, or inline JSON.
    #[arg(long)]
    space: String,
}

#[derive(Args, Debug)]
struct NucleiArgs {
    #[arg(long)]
    lattice: String,
    /// Print only the number of nuclei.
    #[arg(long, conflicts_with = "validate")]
    count: bool,
    /// Check a candidate nucleus (path or inline JSON) against the axioms.
    #[arg(long)]
    validate: Option<String>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("model").required(true).args(["lattice", "space"]))]
#[command(group = clap::ArgGroup::new("which").required(true).args([
    "duality", "boolean", "spatial", "primes", "simmons", "scatter", "compactification",
]))]
struct CheckArgs {
    #[arg(long)]
    lattice: Option<String>,
    #[arg(long)]
    space: Option<String>,
    /// φ and ξ are isomorphisms.
    #[arg(long, requires = "lattice")]
    duality: bool,
    /// Booleanness criteria for N(L).
    #[arg(long, requires = "lattice")]
    boolean: bool,
    /// Spatiality criteria for N(L).
    #[arg(long, requires = "lattice")]
    spatial: bool,
    /// Minimal and essential primes.
    #[arg(long, requires = "lattice")]
    primes: bool,
    /// The Simmons/Isbell equivalences.
    #[arg(long, requires = "space")]
    simmons: bool,
    /// Scatteredness consistency.
    #[arg(long, requires = "space")]
    scatter: bool,
    /// The map into the dual of the frame of opens.
    #[arg(long, requires = "space")]
    compactification: bool,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// posets | topologies
    #[arg(long)]
    kind: String,
    #[arg(long)]
    n: usize,
    /// duality | heyting | nuclei | boolean | spatial | tower | simmons | spaces
    #[arg(long)]
    suite: String,
    /// Check instances in parallel.
    #[arg(long)]
    parallel: bool,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("model").required(true).args(["poset", "lattice", "space"]))]
struct DotArgs {
    #[arg(long)]
    poset: Option<String>,
    #[arg(long)]
    lattice: Option<String>,
    #[arg(long)]
    space: Option<String>,
    /// Draw the dual space X_L instead of L.
    #[arg(long, requires = "lattice", conflicts_with = "assembly")]
    dual: bool,
    /// Draw N(L) instead of L.
    #[arg(long, requires = "lattice")]
    assembly: bool,
    /// Shade φ(a) in the dual space.
    #[arg(long, requires = "dual", conflicts_with = "highlight")]
    phi: Option<String>,
    /// Comma-separated node labels to shade.
    #[arg(long, value_delimiter = ',')]
    highlight: Vec<String>,
    /// Graph name.
    #[arg(long, default_value = "G")]
    name: String,
}

struct Failure {
    code: &'static str,
    exit: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: "usage",
            exit: 2,
            message: message.into(),
        }
    }

    fn check_failed(message: impl Into<String>) -> Self {
        Failure {
            code: "check_failed",
            exit: 7,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, exit) = match &e {
            Error::Malformed(_) | Error::DuplicateElement(_) | Error::UnknownElement(_) => {
                ("malformed", 3)
            }
            Error::CarrierTooLarge { .. } | Error::BoundExceeded { .. } => ("bound_exceeded", 5),
            _ => ("invalid_model", 4),
        };
        Failure {
            code,
            exit,
            message: e.to_string(),
        }
    }
}

enum Output {
    Json(Value),
    Text(String),
}

struct Report {
    output: Output,
    failure: Option<Failure>,
}

impl Report {
    fn ok(v: Value) -> Self {
        Report {
            output: Output::Json(v),
            failure: None,
        }
    }

    fn checked(v: Value, holds: bool, what: &str) -> Self {
        let failure = (!holds).then(|| Failure::check_failed(format!("{what} does not hold")));
        Report {
            output: Output::Json(v),
            failure,
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn read_input(arg: &str) -> Outcome<String> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).map_err(|e| Failure {
        code: "io",
        exit: 6,
        message: format!("{arg}: {e}"),
    })
}

fn lattice(arg: &str) -> Outcome<FiniteLattice> {
    Ok(parse_lattice(&read_input(arg)?)?)
}

fn space(arg: &str) -> Outcome<FiniteSpace> {
    Ok(parse_space(&read_input(arg)?)?)
}

fn label_map<I: IntoIterator<Item = (String, Value)>>(entries: I) -> Value {
    Value::Object(entries.into_iter().collect::<Map<_, _>>())
}

fn bounds() -> Outcome<Bounds> {
    Ok(Bounds::from_env()?)
}

fn dual(arg: &LatticeArg) -> Outcome<Report> {
    let l = lattice(&arg.lattice)?;
    let d = Duality::new(&l);
    let x = d.space();
    let order = poset_json(x.poset());
    let filters = x.filters().expect("dual space keeps its filters");
    Ok(Report::ok(json!({
        "lattice": lattice_json(&l),
        "space": {
            "points": x.labels(),
            "leq": order["leq"],
            "topology": "discrete",
        },
        "filters": label_map(filters.iter().enumerate().map(|(i, f)| {
            (x.labels()[i].clone(), json!(labels_of(f.members, l.labels())))
        })),
        "phi": label_map(l.elements().map(|a| (l.label(a).to_string(), json!(labels_of(d.phi(a), x.labels()))))),
    })))
}

fn assembly(arg: &LatticeArg) -> Outcome<Report> {
    let l = lattice(&arg.lattice)?;
    let asm = Assembly::new(&l)?;
    let n = asm.lattice();
    let x = asm.space();
    let elements: Vec<Value> = n
        .elements()
        .map(|e| {
            json!({
                "label": n.label(e),
                "nuclear_set": labels_of(asm.set(e), x.labels()),
                "nucleus": nucleus_json(&l, asm.nucleus(e))["values"],
            })
        })
        .collect();
    Ok(Report::ok(json!({
        "size": asm.len(),
        "elements": elements,
        "leq": poset_json(n.order())["leq"],
        "bottom": n.label(n.bottom()),
        "top": n.label(n.top()),
        "boolean": n.is_boolean(),
    })))
}

fn nuclei(args: &NucleiArgs) -> Outcome<Report> {
    let l = lattice(&args.lattice)?;
    if let Some(candidate) = &args.validate {
        let values = parse_nucleus_json(&read_input(candidate)?)?.values(&l)?;
        let report = validate_nucleus(&l, &values);
        let valid = report.is_valid();
        let failure = (!valid).then(|| Failure {
            code: "invalid_model",
            exit: 4,
            message: report
                .witness
                .clone()
                .unwrap_or_else(|| "not a nucleus".into()),
        });
        return Ok(Report {
            output: Output::Json(json!({ "valid": valid, "report": report })),
            failure,
        });
    }
    let all = enumerate_nuclei_oracle(&l, &bounds()?)?;
    if args.count {
        return Ok(Report::ok(json!(all.len())));
    }
    let d = Duality::new(&l);
    let list: Vec<Value> = all
        .iter()
        .map(|j| {
            json!({
                "values": nucleus_json(&l, j)["values"],
                "nuclear_set": labels_of(to_nuclear_set(&d, j), d.space().labels()),
            })
        })
        .collect();
    Ok(Report::ok(json!({ "count": all.len(), "nuclei": list })))
}

fn points(arg: &LatticeArg) -> Outcome<Report> {
    let l = lattice(&arg.lattice)?;
    let ps = nuclear_points(&l)?;
    let d = Duality::new(&l);
    let labels = d.space().labels();
    let opens: Vec<Vec<String>> = ps.tau_opens.iter().map(|&u| labels_of(u, labels)).collect();
    Ok(Report::ok(json!({
        "points": labels_of(ps.points, labels),
        "completely_prime": labels_of(ps.completely_prime, labels),
        "tau_opens": opens,
        "closure_matches_order": ps.closure_matches_order,
        "matches_points_of_lattice": ps.matches_points_of_lattice,
        "characterizations_agree": ps.characterizations_agree(),
    })))
}

fn space_report(arg: &SpaceArg) -> Outcome<Report> {
    let s = space(&arg.space)?;
    let scatter = scatter_report(&s);
    let spec: Vec<[&str; 2]> = (0..s.len())
        .flat_map(|x| (0..s.len()).map(move |y| (x, y)))
        .filter(|&(x, y)| x != y && s.specializes(x, y))
        .map(|(x, y)| [s.label(x), s.label(y)])
        .collect();
    Ok(Report::ok(json!({
        "space": space_json(&s),
        "specialization": spec,
        "t0": s.is_t0(),
        "t_d": s.is_td(),
        "sober": is_sober(&s),
        "scatter": scatter,
        "t0_reflection": space_json(&t0_reflection(&s).target),
        "front_topology": space_json(&front_topology(&s)),
    })))
}

fn check(args: &CheckArgs) -> Outcome<Report> {
    if let Some(arg) = &args.lattice {
        let l = lattice(arg)?;
        if args.duality {
            let r = unit_counit_check(&l)?;
            return Ok(Report::checked(
                json!({ "check": "duality", "holds": r.holds(), "report": r }),
                r.holds(),
                "duality",
            ));
        }
        if args.boolean {
            let r = is_assembly_boolean(&l)?;
            let b = assembly_booleanization_check(&l)?;
            let holds = r.agree && b.holds;
            return Ok(Report::checked(
                json!({ "check": "boolean", "holds": holds, "report": r, "booleanization": b }),
                holds,
                "boolean",
            ));
        }
        if args.spatial {
            let r = assembly_spatial_report(&l)?;
            let jp = join_primes_of_assembly(&l)?;
            let holds =
                r.agree && jp.are_point_singletons && jp.points_of_lattice == jp.points_of_assembly;
            return Ok(Report::checked(
                json!({ "check": "spatial", "holds": holds, "report": r, "join_primes": jp }),
                holds,
                "spatial",
            ));
        }
        let r = primes_agreement(&l)?;
        let holds = r.minimal_agree
            && r.essential_agree
            && r.every_element_recovered
            && r.every_element_has_essential
            && r.max_restriction_agrees;
        return Ok(Report::checked(
            json!({ "check": "primes", "holds": holds, "report": r }),
            holds,
            "primes",
        ));
    }
    let s = space(args.space.as_deref().expect("clap requires a model"))?;
    if args.simmons {
        let r = simmons_isbell_report(&s)?;
        let holds = r.consistent();
        return Ok(Report::checked(
            json!({ "check": "simmons", "holds": holds, "report": r }),
            holds,
            "simmons",
        ));
    }
    if args.scatter {
        let r = scatter_report(&s);
        let holds = r.consistent();
        return Ok(Report::checked(
            json!({ "check": "scatter", "holds": holds, "report": r }),
            holds,
            "scatter",
        ));
    }
    let r = compactification_check(&s)?;
    Ok(Report::checked(
        json!({ "check": "compactification", "holds": r.holds(), "report": r }),
        r.holds(),
        "compactification",
    ))
}

fn run_sweep(args: &SweepArgs) -> Outcome<Report> {
    let kind: SweepKind = args
        .kind
        .parse()
        .map_err(|e: Error| Failure::usage(e.to_string()))?;
    let suite: Suite = args
        .suite
        .parse()
        .map_err(|e: Error| Failure::usage(e.to_string()))?;
    if suite.kind() != kind {
        return Err(Failure::usage(format!(
            "suite `{suite}` does not run on {}",
            args.kind
        )));
    }
    let summary = sweep(args.n, suite, &bounds()?, args.parallel)?;
    let holds = summary.all_passed();
    Ok(Report::checked(json!(summary), holds, "sweep"))
}

fn highlight_of(labels: &[String], wanted: &[String]) -> Outcome<Subset> {
    wanted
        .iter()
        .map(|w| {
            labels
                .iter()
                .position(|l| l == w)
                .ok_or_else(|| Failure::from(Error::UnknownElement(w.clone())))
        })
        .collect()
}

fn export_dot(args: &DotArgs) -> Outcome<Report> {
    let text = if let Some(arg) = &args.poset {
        let p = parse_poset(&read_input(arg)?)?;
        poset_dot(&p, &args.name, highlight_of(p.labels(), &args.highlight)?)
    } else if let Some(arg) = &args.lattice {
        let l = lattice(arg)?;
        if args.dual {
            let d = Duality::new(&l);
            let x = d.space();
            let shade = match &args.phi {
                Some(a) => d.phi(
                    l.index_of(a)
                        .ok_or_else(|| Failure::from(Error::UnknownElement(a.clone())))?,
                ),
                None => highlight_of(x.labels(), &args.highlight)?,
            };
            poset_dot(x.poset(), &args.name, shade)
        } else if args.assembly {
            let asm = Assembly::new(&l)?;
            let order = asm.lattice().order();
            poset_dot(
                order,
                &args.name,
                highlight_of(order.labels(), &args.highlight)?,
            )
        } else {
            poset_dot(
                l.order(),
                &args.name,
                highlight_of(l.labels(), &args.highlight)?,
            )
        }
    } else {
        let s = space(args.space.as_deref().expect("clap requires a model"))?;
        space_dot(&s, &args.name, highlight_of(s.labels(), &args.highlight)?)
    };
    Ok(Report {
        output: Output::Text(text),
        failure: None,
    })
}

fn run(cli: &Cli) -> Outcome<Report> {
    match &cli.command {
        Command::Dual(a) => dual(a),
        Command::Assembly(a) => assembly(a),
        Command::Nuclei(a) => nuclei(a),
        Command::Points(a) => points(a),
        Command::Space(a) => space_report(a),
        Command::Check(a) => check(a),
        Command::Sweep(a) => run_sweep(a),
        Command::ExportDot(a) => export_dot(a),
    }
}

fn fail(f: &Failure) -> ExitCode {
    let err = json!({ "error": { "code": f.code, "exit": f.exit, "message": f.message } });
    eprintln!("{err}");
    ExitCode::from(f.exit)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match report.output {
                Output::Json(v) => println!(
                    "{}",
                    serde_json::to_string_pretty(&v).expect("values serialize")
                ),
                Output::Text(t) => print!("{t}"),
            }
            report.failure.as_ref().map_or(ExitCode::SUCCESS, fail)
        }
        Err(f) => fail(&f),
    }
}
