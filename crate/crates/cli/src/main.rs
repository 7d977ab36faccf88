use std::path::Path;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ghecke::hecke::{self, io, HModule};
use ghecke::homology::{self, RigidMode, SOLVER_CAP};
use ghecke::partitions::{distinct_part_partitions, odd_length_partitions};
use ghecke::rational::{format_q, parse_q_list};
use ghecke::rootsys::format_root;
use ghecke::verify::{self, Suite};
use ghecke::weyl::DEFAULT_CAP;
use ghecke::{Error, Family, RootDatum, WeylGroupTable};

#[derive(Parser)]
#[command(name = "ghecke", version, about = "Exact Ext-groups and Euler-Poincaré pairings for graded affine Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Datum {
    /// root system type, e.g. `--type A 2`
    #[arg(long = "type", num_args = 2, value_names = ["FAMILY", "RANK"])]
    ty: Option<Vec<String>>,
    /// parameters per orbit of simple roots (or per simple root), e.g. "1,3/2"
    #[arg(long)]
    k: Option<String>,
    /// Weyl group enumeration cap
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// JSON output
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, positive roots, orbits and the diagram involution
    Rootsys(Datum),
    /// (twisted) conjugacy classes with ellipticity determinants
    Classes {
        #[command(flatten)]
        datum: Datum,
        #[arg(long)]
        twisted: bool,
    },
    /// EP and EP^θ from W-characters
    Pairing {
        #[command(flatten)]
        datum: Datum,
        /// builtin spec or module JSON file
        x: String,
        y: String,
        #[arg(long)]
        theta: bool,
    },
    /// rigid subsets and the rigid-module checks
    Rigid {
        #[command(flatten)]
        datum: Datum,
        /// restrict to one subset, 1-based, e.g. "1,2"
        #[arg(long)]
        subset: Option<String>,
        /// skip the Ext complex
        #[arg(long)]
        characters_only: bool,
    },
    /// Ext^i_H(X, Y) through the Koszul complex
    Ext {
        #[command(flatten)]
        datum: Datum,
        x: String,
        y: String,
        #[arg(long)]
        theta: bool,
    },
    /// print the JSON of X(J, U, ν) or any builtin module
    Induce {
        #[command(flatten)]
        datum: Datum,
        /// `J` (1-based, "" for the empty set)
        #[arg(long, default_value = "")]
        subset: String,
        /// use the trivial module of H_J instead of the Steinberg module
        #[arg(long)]
        triv: bool,
        /// ν on simple roots
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        /// builtin spec, overriding the other options
        #[arg(long)]
        spec: Option<String>,
    },
    /// run a reproducibility suite
    Verify {
        #[arg(long, default_value = "core")]
        suite: String,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// An error with its exit code.
struct Failure(u8, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Consistency(_) => 1,
            _ => 2,
        };
        Failure(code, e.to_string())
    }
}

type Out = Result<u8, Failure>;

fn table(d: &Datum) -> Result<Arc<WeylGroupTable>, Failure> {
    let ty = d.ty.as_ref().ok_or_else(|| Failure(2, "missing --type FAMILY RANK".into()))?;
    let family: Family = ty[0].parse()?;
    let rank: usize = ty[1].parse().map_err(|_| Failure(2, format!("bad rank {:?}", ty[1])))?;
    let k = match &d.k {
        Some(s) => parse_q_list(s)?,
        None => vec![],
    };
    let datum = Arc::new(RootDatum::new(family, rank, &k)?);
    Ok(Arc::new(WeylGroupTable::with_cap(datum, d.cap)?))
}

fn read_json(path: &str) -> Result<Value, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(2, format!("{path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Failure(2, format!("{path}: {e}")))
}

fn is_file_arg(arg: &str) -> bool {
    arg.ends_with(".json") || Path::new(arg).is_file()
}

/// Modules from builtin specs (need `--type`) or JSON files; the group is
/// taken from `--type` or from the first file.
fn two_modules(d: &Datum, x: &str, y: &str) -> Result<(HModule, HModule), Failure> {
    let t = if d.ty.is_some() {
        table(d)?
    } else if is_file_arg(x) {
        io::from_json(&read_json(x)?, d.cap)?.table().clone()
    } else {
        return Err(Failure(2, "builtin module specs need --type FAMILY RANK".into()));
    };
    let load = |arg: &str| -> Result<HModule, Failure> {
        if is_file_arg(arg) {
            Ok(io::from_json_on(&t, &read_json(arg)?)?)
        } else {
            Ok(hecke::builtin_module(&t, arg)?)
        }
    };
    Ok((load(x)?, load(y)?))
}

fn thetas(x: &HModule, y: &HModule) -> Result<(hecke::ThetaStructure, hecke::ThetaStructure), Failure> {
    let get = |m: &HModule| {
        hecke::theta_structure(m).map_err(|e| Failure(2, format!("Theta-structure for {}: {e}", m.label())))
    };
    Ok((get(x)?, get(y)?))
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn cmd_rootsys(d: &Datum) -> Out {
    let t = table(d)?;
    let r = t.datum();
    let theta = t.theta();
    let roots: Vec<String> = r.positive_roots().iter().map(|x| format_root(x)).collect();
    let orbits: Vec<Vec<usize>> = r.orbits().iter().map(|o| o.iter().map(|i| i + 1).collect()).collect();
    let perm: Vec<usize> = theta.perm.iter().map(|i| i + 1).collect();
    let k: Vec<String> = r.k().iter().map(format_q).collect();
    if d.json {
        print(&json!({
            "type": r.name(), "cartan": r.cartan(), "positive_roots": roots, "orbits": orbits,
            "k": k, "theta": perm, "weyl_order": t.order(),
        }));
    } else {
        println!("type {}  |W| = {}", r.name(), t.order());
        println!("cartan (row i: <a_j, a_i^>)");
        for row in r.cartan() {
            println!("  {}", row.iter().map(|x| format!("{x:>3}")).collect::<String>());
        }
        println!("positive roots ({}): {}", roots.len(), roots.join(" "));
        println!("orbits of simple roots: {orbits:?}");
        println!("k on simple roots: {}", k.join(","));
        println!("theta = -w0 permutes simple roots as {perm:?}");
    }
    Ok(0)
}

fn cmd_classes(d: &Datum, twisted: bool) -> Out {
    let t = table(d)?;
    let cls = if twisted { t.twisted_classes() } else { t.conjugacy_classes() };
    let r = t.datum();
    let conventions = match r.family() {
        Family::A => Some(("distinct-part", distinct_part_partitions(r.rank()), distinct_part_partitions(r.rank() + 1))),
        Family::D if r.rank() % 2 == 1 => {
            Some(("odd-length", odd_length_partitions(r.rank()), odd_length_partitions(r.rank() + 1)))
        }
        _ => None,
    };
    if d.json {
        let rows: Vec<Value> = (0..cls.len())
            .map(|c| json!({"rep": cls.rep_words[c], "size": cls.size(c), "det": cls.dets[c], "elliptic": cls.is_elliptic(c)}))
            .collect();
        let mut v = json!({"type": r.name(), "twisted": twisted, "classes": rows, "elliptic_count": cls.elliptic_count()});
        if let (true, Some((name, a, b))) = (twisted, conventions) {
            v["partition_counts"] = json!({"kind": name, "n": a, "n+1": b});
        }
        print(&v);
    } else {
        let head = if twisted { "twisted classes (values at w theta)" } else { "conjugacy classes" };
        println!("{} {head}: {}", r.name(), cls.len());
        println!("{:<28} {:>8} {:>6}  elliptic", "representative", "size", "det");
        for c in 0..cls.len() {
            let rep = if cls.rep_words[c].is_empty() { "e" } else { &cls.rep_words[c] };
            println!("{rep:<28} {:>8} {:>6}  {}", cls.size(c), cls.dets[c], if cls.is_elliptic(c) { "yes" } else { "no" });
        }
        println!("elliptic count: {}", cls.elliptic_count());
        if let (true, Some((name, a, b))) = (twisted, conventions) {
            let m = match (cls.elliptic_count() as u64 == a, cls.elliptic_count() as u64 == b) {
                (true, true) => "both",
                (true, false) => "n",
                (false, true) => "n+1",
                _ => "neither",
            };
            println!("{name} partitions: of n = {a}, of n+1 = {b}; matching convention: {m}");
        }
    }
    Ok(0)
}

fn cmd_pairing(d: &Datum, x: &str, y: &str, theta: bool) -> Out {
    let (x, y) = two_modules(d, x, y)?;
    let ep = homology::character_ep(&x, &y)?;
    let mut v = json!({"x": x.label(), "y": y.label(), "ep": format_q(&ep)});
    if theta {
        let (tx, ty) = thetas(&x, &y)?;
        v["ep_theta"] = json!(format_q(&homology::character_ep_theta(&x, &y, &tx.matrix, &ty.matrix)?));
    }
    if d.json {
        print(&v);
    } else {
        println!("EP({}, {}) = {}", x.label(), y.label(), format_q(&ep));
        if let Some(e) = v.get("ep_theta").and_then(Value::as_str) {
            println!("EP^theta({}, {}) = {e}", x.label(), y.label());
        }
    }
    Ok(0)
}

fn parse_subset(s: &str, n: usize) -> Result<Vec<usize>, Failure> {
    let mut j = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty() && *p != "-") {
        let i: usize = part.trim_start_matches('a').parse().map_err(|_| Failure(2, format!("bad index {part:?}")))?;
        if i == 0 || i > n {
            return Err(Failure(2, format!("simple root {i} out of range 1..={n}")));
        }
        j.push(i - 1);
    }
    j.sort_unstable();
    j.dedup();
    Ok(j)
}

fn cmd_rigid(d: &Datum, subset: Option<&str>, characters_only: bool) -> Out {
    let t = table(d)?;
    let subsets = match subset {
        Some(s) => vec![parse_subset(s, t.rank())?],
        None => t.rigid_subsets(),
    };
    let mut reports = Vec::new();
    let mut ok = true;
    for j in &subsets {
        let x_dim = t.min_coset_reps(j).len();
        let n = t.rank();
        let widest = (0..=n).map(|i| ghecke::rational::binomial(n, i) as usize).max().unwrap_or(1);
        let mode = if characters_only || x_dim * x_dim * widest > SOLVER_CAP { RigidMode::CharacterOnly } else { RigidMode::Full };
        let r = homology::rigid_verification(&t, j, mode)?;
        ok &= r.passed();
        reports.push(r);
    }
    if d.json {
        let v: Vec<Value> = reports
            .iter()
            .map(|r| {
                json!({
                    "subset": hecke::format_subset(&r.j), "r": r.r, "dim": r.dim, "passed": r.passed(),
                    "ext": r.result.as_ref().map(|e| e.to_json()),
                    "checks": r.checks.iter().map(|c| json!({"id": c.name, "expected": c.expected, "actual": c.actual, "pass": c.pass})).collect::<Vec<_>>(),
                })
            })
            .collect();
        print(&json!({"type": t.name(), "rigid": v}));
    } else {
        for r in &reports {
            println!("{} J={} r={} dim X={}", r.group, hecke::format_subset(&r.j), r.r, r.dim);
            for c in &r.checks {
                println!("  {}  {}: expected {} got {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.expected, c.actual);
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn cmd_ext(d: &Datum, x: &str, y: &str, theta: bool) -> Out {
    let (x, y) = two_modules(d, x, y)?;
    let comp = if theta {
        let (tx, ty) = thetas(&x, &y)?;
        homology::ext(&x, &y, Some((&tx.matrix, &ty.matrix)), SOLVER_CAP)?
    } else {
        homology::ext(&x, &y, None, SOLVER_CAP)?
    };
    if !comp.checks.all_hold() {
        return Err(Failure(1, format!("structural check failed: {:?}", comp.checks)));
    }
    let r = &comp.result;
    if d.json {
        print(&r.to_json());
    } else {
        println!("Ext_H({}, {})", x.label(), y.label());
        println!("dims: {:?}", r.dims);
        println!("EP: {}", r.ep);
        if let Some(t) = &r.theta_traces {
            println!("theta* traces: [{}]", t.iter().map(format_q).collect::<Vec<_>>().join(", "));
            println!("EP^theta: {}", r.ep_theta.as_ref().map(format_q).unwrap_or_default());
            println!("extended-algebra dims: {:?}", r.extended_dims.clone().unwrap_or_default());
        }
    }
    Ok(0)
}

fn cmd_induce(d: &Datum, subset: &str, triv: bool, nu: Option<&str>, spec: Option<&str>) -> Out {
    let t = table(d)?;
    let x = match spec {
        Some(s) => hecke::builtin_module(&t, s)?,
        None => {
            let n = t.rank();
            let j = parse_subset(subset, n)?;
            let nu = match nu {
                Some(s) => parse_q_list(s)?,
                None => vec![ghecke::rational::q(0); n],
            };
            let sign = if triv { 1 } else { -1 };
            let u = hecke::parabolic_one_dim(&t, &j, &vec![sign; j.len()], &vec![ghecke::rational::q(0); n])?;
            hecke::induced_module(&u, &nu)?
        }
    };
    print(&io::to_json(&x));
    Ok(0)
}

fn cmd_verify(suite: &str, seed: u64, json: bool) -> Out {
    let suite: Suite = suite.parse()?;
    let report = match suite {
        Suite::Paper => verify::paper_suite(seed)?,
        other => verify::run(other)?,
    };
    if json {
        print(&report.to_json());
    } else {
        print!("{}", report.render());
    }
    Ok(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Rootsys(d) => cmd_rootsys(d),
        Command::Classes { datum, twisted } => cmd_classes(datum, *twisted),
        Command::Pairing { datum, x, y, theta } => cmd_pairing(datum, x, y, *theta),
        Command::Rigid { datum, subset, characters_only } => cmd_rigid(datum, subset.as_deref(), *characters_only),
        Command::Ext { datum, x, y, theta } => cmd_ext(datum, x, y, *theta),
        Command::Induce { datum, subset, triv, nu, spec } => {
            cmd_induce(datum, subset, *triv, nu.as_deref(), spec.as_deref())
        }
        Command::Verify { suite, seed, json } => cmd_verify(suite, *seed, *json),
    };
    match out {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
