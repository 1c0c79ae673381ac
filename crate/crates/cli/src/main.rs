use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use toric_bricks::fan::{label_point, Fan};
use toric_bricks::io::{self, Document};
use toric_bricks::pipeline::build::contexts;
use toric_bricks::pipeline::certify::Failure;
use toric_bricks::pipeline::{
    build_brickset, certify_model, end_to_end, ghilb, verify_brickset, Brickset, Strategy,
};
use toric_bricks::reid::classify_cone;
use toric_bricks::render::render_svg;
use toric_bricks::stability::{affine_margin, find_m, min_margin, solve_partial, DEFAULT_M_MAX};
use toric_bricks::{fixtures, is_good_subdivision, Error, GroupType, LatticePoint, Theta, Q};

const VALIDATION: u8 = 2;
const MATH: u8 = 3;
const PARSE: u8 = 4;

#[derive(Parser)]
#[command(name = "toric-bricks", version, about = "G-bricksets and stability certificates for 1/r(a,b,c)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group data: order, weights of the monomials, junior points.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Star subdivision of the positive octant at a point n/r.
    Subdivide {
        group: String,
        #[arg(long, value_name = "N1,N2,N3")]
        at: String,
        /// Also write the fan document here.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Fan checks
    Fan {
        #[command(subcommand)]
        cmd: FanCmd,
    },
    /// The G-Hilb fan and its brickset.
    Hilb {
        group: String,
        #[arg(long)]
        fan_out: Option<PathBuf>,
        #[arg(long)]
        brickset_out: Option<PathBuf>,
    },
    /// Build or verify a brickset
    Brickset {
        #[command(subcommand)]
        cmd: BricksetCmd,
    },
    /// Partial solutions θ_P
    Theta {
        #[command(subcommand)]
        cmd: ThetaCmd,
    },
    /// Margins of a brick under θ or θ + m·ϑ
    Stability {
        #[command(subcommand)]
        cmd: StabilityCmd,
    },
    /// Builds and certifies a brickset for a model fan.
    Certify {
        group: String,
        fan: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Draws a fan on the junior simplex.
    Render {
        fan: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Prints a built-in example document.
    Fixture {
        #[arg(value_parser = ["fig3", "fig4", "model-y", "model-z", "x-can-39", "z-vartheta"])]
        name: String,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    Info { group: String },
}

#[derive(Subcommand)]
enum FanCmd {
    /// Simpliciality, cone classes, discrepancies, nefness of K and tiling.
    Check { fan: PathBuf },
}

#[derive(Subcommand)]
enum BricksetCmd {
    /// One brick per cone, choosing a strategy for each sub-cone of the center
    Build {
        group: String,
        fan: PathBuf,
        #[arg(long, value_name = "N1,N2,N3")]
        center: String,
        /// k=trivial|ghilb|auto|recurse:N1,N2,N3|load:FILE, for k in 1..=3; auto by default.
        #[arg(long)]
        strategy: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Checks the G-brick conditions and that the cones cover the fan
    Verify { brickset: PathBuf },
}

#[derive(Subcommand)]
enum ThetaCmd {
    /// Finds θ_P with the given pushforwards to the three G_k.
    Solve {
        group: String,
        #[arg(long, value_name = "N1,N2,N3")]
        center: String,
        #[arg(long, num_args = 3, value_name = "THETA")]
        targets: Vec<PathBuf>,
    },
}

#[derive(Subcommand)]
enum StabilityCmd {
    /// Minimal θ-value over proper submodules, with an attaining witness.
    Check {
        brick: PathBuf,
        theta: PathBuf,
        /// Treat THETA as θ_P and report the margin of θ_P + m·ϑ as an affine function of m.
        #[arg(long, requires = "vartheta")]
        symbolic_m: bool,
        #[arg(long)]
        vartheta: Option<PathBuf>,
        /// Multiplier; the smallest stabilizing one when omitted.
        #[arg(long)]
        m: Option<u64>,
    },
}

struct Fail {
    code: u8,
    message: String,
    extra: Option<Box<Document>>,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Parse(_)) { PARSE } else { VALIDATION };
        Fail { code, message: e.to_string(), extra: None }
    }
}

type Out = std::result::Result<Vec<Document>, Fail>;

fn read_doc(path: &Path) -> std::result::Result<Document, Fail> {
    let text = fs::read_to_string(path).map_err(|e| Fail {
        code: PARSE,
        message: format!("{}: {e}", path.display()),
        extra: None,
    })?;
    io::parse(&text).map_err(|e| Fail { code: PARSE, message: format!("{}: {e}", path.display()), extra: None })
}

fn write_file(path: &Path, text: &str) -> std::result::Result<(), Fail> {
    fs::write(path, text).map_err(|e| Fail { code: VALIDATION, message: format!("{}: {e}", path.display()), extra: None })
}

fn group(s: &str) -> std::result::Result<GroupType, Fail> {
    Ok(s.parse::<GroupType>()?)
}

fn point(s: &str) -> std::result::Result<LatticePoint, Fail> {
    let v: Vec<i64> = s
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse(format!("expected N1,N2,N3, got {s:?}")))?;
    let v: [i64; 3] = v.try_into().map_err(|_| Error::Parse(format!("expected three numerators, got {s:?}")))?;
    Ok(LatticePoint(v))
}

fn fan_file(path: &Path) -> std::result::Result<Fan, Fail> {
    Ok(io::fan_from(read_doc(path)?)?)
}

fn math_failure(message: String, details: Value) -> Fail {
    Fail { code: MATH, message, extra: Some(Box::new(io::report_doc("failure", false, details))) }
}

fn validation_failure(report: Document) -> Fail {
    let message = match &report {
        Document::Report(r) => format!("{} check failed", r.report),
        _ => "check failed".into(),
    };
    Fail { code: VALIDATION, message, extra: Some(Box::new(report)) }
}

fn fan_json(f: &Fan) -> Value {
    serde_json::to_value(io::fan_doc(f)).expect("documents serialize")
}

fn group_info(g: &GroupType) -> Out {
    let reps: Vec<Value> = g
        .weight_representatives()
        .iter()
        .enumerate()
        .map(|(w, m)| json!({ "weight": w, "monomial": m.0 }))
        .collect();
    let junior: Vec<Value> = g
        .junior_points()
        .iter()
        .map(|(t, p)| json!({ "class": t, "point": p.0, "label": label_point(g, p) }))
        .collect();
    Ok(vec![io::report_doc(
        "group",
        true,
        json!({ "type": g.to_string(), "order": g.order(), "weights": g.weights(), "weight_map": reps, "junior_points": junior }),
    )])
}

fn classify_cones(g: &GroupType, f: &Fan) -> Vec<Value> {
    f.cones()
        .iter()
        .map(|c| {
            let class = if c.is_simplicial() {
                classify_cone(g, c).map(|k| k.label().to_string()).unwrap_or_else(|e| format!("error: {e}"))
            } else {
                "non-simplicial".to_string()
            };
            json!({ "cone": c.display(g), "class": class })
        })
        .collect()
}

fn subdivide(g: &GroupType, at: &str, output: Option<&Path>) -> Out {
    let v = point(at)?;
    let goodness = is_good_subdivision(g, &v);
    let fan = toric_bricks::fan::star_subdivide(&Fan::positive_octant(g), &v)?;
    let subs: Vec<Value> = contexts(g, &v)
        .map(|cs| {
            cs.iter()
                .map(|c| {
                    json!({ "k": c.axis() + 1, "type": c.subgroup().to_string(), "a_k": c.a_k(), "smooth": c.a_k() == 1 })
                })
                .collect()
        })
        .unwrap_or_default();
    let disc: Vec<Value> = toric_bricks::reid::discrepancies(g, &fan)
        .iter()
        .map(|(p, d)| json!({ "point": p.0, "discrepancy": d.to_string() }))
        .collect();
    if let Some(path) = output {
        write_file(path, &io::serialize(&io::fan_doc(&fan)))?;
    }
    Ok(vec![io::report_doc(
        "subdivide",
        goodness.good,
        json!({
            "center": v.0,
            "fan": fan_json(&fan),
            "sub_cones": subs,
            "cones": classify_cones(g, &fan),
            "discrepancies": disc,
            "good": goodness.good,
            "violations": goodness.violations,
        }),
    )])
}

fn fan_check(f: &Fan) -> Out {
    let g = f.group();
    let rep = certify_model(g, f)?;
    let disc: Vec<Value> =
        rep.discrepancies.iter().map(|(p, d)| json!({ "point": p.0, "discrepancy": d.to_string() })).collect();
    let nef = rep.nef.as_ref().map(|n| {
        json!({
            "nef": n.nef,
            "violation": n.violation.as_ref().map(|(i, p, x)| json!({ "cone": i, "ray": p.0, "value": x.to_string() })),
        })
    });
    let ok = rep.simplicial && rep.tiling.ok;
    let doc = io::report_doc(
        "model",
        ok,
        json!({
            "simplicial": rep.simplicial,
            "terminal": rep.terminal,
            "smooth": rep.smooth,
            "minimal_model": rep.is_minimal_model(),
            "nef": nef,
            "cones": classify_cones(g, f),
            "discrepancies": disc,
            "tiling": { "ok": rep.tiling.ok, "problems": rep.tiling.problems },
        }),
    );
    if ok {
        Ok(vec![doc])
    } else {
        Err(validation_failure(doc))
    }
}

fn hilb(g: &GroupType, fan_out: Option<&Path>, set_out: Option<&Path>) -> Out {
    let (fan, set) = ghilb(g)?;
    let (fd, sd) = (io::fan_doc(&fan), io::brickset_doc(&set));
    let mut out = Vec::new();
    match fan_out {
        Some(p) => write_file(p, &io::serialize(&fd))?,
        None => out.push(fd),
    }
    match set_out {
        Some(p) => write_file(p, &io::serialize(&sd))?,
        None => out.push(sd),
    }
    Ok(out)
}

fn strategy(spec: &str) -> std::result::Result<Strategy, Fail> {
    Ok(match spec {
        "trivial" => Strategy::Trivial,
        "ghilb" => Strategy::Ghilb,
        "auto" => Strategy::Auto,
        s => {
            if let Some(p) = s.strip_prefix("recurse:") {
                Strategy::Recurse(point(p)?, Box::new([Strategy::Auto, Strategy::Auto, Strategy::Auto]))
            } else if let Some(f) = s.strip_prefix("load:") {
                Strategy::Load(io::brickset_from(read_doc(Path::new(f))?)?)
            } else {
                return Err(Error::Parse(format!("unknown strategy {s:?}")).into());
            }
        }
    })
}

fn strategies(specs: &[String]) -> std::result::Result<[Strategy; 3], Fail> {
    let mut out = [Strategy::Auto, Strategy::Auto, Strategy::Auto];
    for s in specs {
        let (k, rest) = s.split_once('=').ok_or_else(|| Error::Parse(format!("expected k=STRATEGY, got {s:?}")))?;
        let k: usize = match k.trim().parse() {
            Ok(k @ 1..=3) => k,
            _ => return Err(Error::Parse(format!("k must be 1, 2 or 3 in {s:?}")).into()),
        };
        out[k - 1] = strategy(rest.trim())?;
    }
    Ok(out)
}

fn brickset_verify(set: &Brickset) -> Out {
    let g = set.group();
    let rep = verify_brickset(set);
    let failures: Vec<Value> = rep
        .failures()
        .iter()
        .map(|e| json!({ "cone": e.cone.display(g), "axioms": e.axioms, "dual": e.dual.witness }))
        .collect();
    let repeated: Vec<String> = rep.repeated_cones.iter().map(|c| c.display(g)).collect();
    let doc = io::report_doc(
        "brickset",
        rep.ok(),
        json!({
            "group": g.to_string(),
            "bricks": set.len(),
            "failures": failures,
            "repeated_cones": repeated,
            "tiling": { "ok": rep.tiling.ok, "problems": rep.tiling.problems },
        }),
    );
    if rep.ok() {
        Ok(vec![doc])
    } else {
        Err(validation_failure(doc))
    }
}

fn theta_solve(g: &GroupType, center: &str, targets: &[PathBuf]) -> Out {
    let v = point(center)?;
    let ctxs = contexts(g, &v)?;
    let ts = targets.iter().map(|p| Ok(io::theta_from::<Q>(read_doc(p)?)?)).collect::<std::result::Result<Vec<Theta>, Fail>>()?;
    let sol = solve_partial(g, &ctxs, &ts)?;
    match &sol.theta {
        Some(t) if sol.surjective() => Ok(vec![io::theta_doc(t)]),
        _ => Err(math_failure(
            format!("pushforward rank {} < {}", sol.rank, sol.target_dim),
            json!({
                "stage": "solve_partial",
                "rank": sol.rank,
                "target_dim": sol.target_dim,
                "consistent": sol.feasible(),
                "theta": sol.theta.as_ref().map(io::ratio_strings),
            }),
        )),
    }
}

fn stability_check(brick: &Path, theta: &Path, symbolic: bool, vartheta: Option<&Path>, m: Option<u64>) -> Out {
    let (b, _) = io::brick_from(read_doc(brick)?)?;
    let theta: Theta = io::theta_from(read_doc(theta)?)?;
    let witness_monos = |w: &std::collections::BTreeSet<usize>| -> Vec<[i64; 3]> {
        w.iter().map(|&i| b.entry(i).0).collect()
    };
    if !symbolic {
        let Some(mm) = min_margin(&b, &theta)? else {
            return Ok(vec![io::report_doc("stability", true, json!({ "trivial": true }))]);
        };
        let details = json!({
            "value": toric_bricks::scalar::format_ratio(&mm.value),
            "witness": mm.witness.weights(),
            "witness_monomials": witness_monos(mm.witness.weights()),
            "stable": mm.is_stable(),
        });
        let doc = io::report_doc("stability", mm.is_stable(), details);
        return if mm.is_stable() { Ok(vec![doc]) } else { Err(validation_failure(doc)) };
    }
    let vt: Theta = io::theta_from(read_doc(vartheta.expect("clap enforces --vartheta"))?)?;
    let m = match m {
        Some(m) => m,
        None => match find_m(std::slice::from_ref(&b), &theta, &vt, DEFAULT_M_MAX)? {
            Ok(c) => c.m,
            Err(f) => {
                return Err(math_failure(
                    format!("no stabilizing m up to {DEFAULT_M_MAX}"),
                    json!({ "stage": "find_m", "detail": format!("{f:?}") }),
                ))
            }
        },
    };
    let Some(am) = affine_margin(&b, &theta, &vt, &Q::from_integer(m.into()))? else {
        return Ok(vec![io::report_doc("stability", true, json!({ "trivial": true, "m": m }))]);
    };
    let stable = am.margin.is_stable();
    let doc = io::report_doc(
        "stability",
        stable,
        json!({
            "m": m,
            "value": toric_bricks::scalar::format_ratio(&am.margin.value),
            "symbolic": io::affine_doc(&am),
            "witness": am.margin.witness.weights(),
            "witness_monomials": witness_monos(am.margin.witness.weights()),
            "stable": stable,
        }),
    );
    if stable {
        Ok(vec![doc])
    } else {
        Err(validation_failure(doc))
    }
}

fn failure_details(f: &Failure, log: &[String]) -> Value {
    let mut d = json!({ "stage": f.stage(), "summary": f.summary(), "log": log });
    if let Failure::NotSurjective { rank, target_dim, consistent, center, .. } = f {
        d["rank"] = json!(rank);
        d["target_dim"] = json!(target_dim);
        d["consistent"] = json!(consistent);
        d["center"] = json!(center.0);
    }
    d
}

fn certify(g: &GroupType, fan: &Fan, output: Option<&Path>) -> Out {
    let run = end_to_end(g, fan)?;
    for line in &run.log {
        eprintln!("{line}");
    }
    match run.outcome {
        Ok(c) => {
            let doc = io::certificate_doc(&c.tag.family.to_string(), &c.certificate);
            match output {
                Some(p) => {
                    write_file(p, &io::serialize(&doc))?;
                    Ok(vec![])
                }
                None => Ok(vec![doc]),
            }
        }
        Err(f) => Err(math_failure(f.summary(), failure_details(&f, &run.log))),
    }
}

fn fixture(name: &str) -> Out {
    Ok(vec![match name {
        "fig3" => io::fan_doc(&fixtures::fig3()),
        "fig4" => io::fan_doc(&fixtures::fig4()),
        "model-y" => io::fan_doc(&fixtures::model_y()),
        "model-z" => io::fan_doc(&fixtures::model_z()),
        "x-can-39" => io::fan_doc(&fixtures::x_can_39()?),
        _ => io::theta_doc(&fixtures::z_vartheta::<Q>()?),
    }])
}

fn run(cli: Cli) -> Out {
    match cli.command {
        Command::Group { cmd: GroupCmd::Info { group: s } } => group_info(&group(&s)?),
        Command::Subdivide { group: s, at, output } => subdivide(&group(&s)?, &at, output.as_deref()),
        Command::Fan { cmd: FanCmd::Check { fan } } => fan_check(&fan_file(&fan)?),
        Command::Hilb { group: s, fan_out, brickset_out } => hilb(&group(&s)?, fan_out.as_deref(), brickset_out.as_deref()),
        Command::Brickset { cmd: BricksetCmd::Build { group: s, fan, center, strategy, output } } => {
            let g = group(&s)?;
            let f = fan_file(&fan)?;
            let node = build_brickset(&g, &f, &point(&center)?, &strategies(&strategy)?)?;
            let doc = io::brickset_doc(&node.brickset);
            match output {
                Some(p) => {
                    write_file(&p, &io::serialize(&doc))?;
                    Ok(vec![])
                }
                None => Ok(vec![doc]),
            }
        }
        Command::Brickset { cmd: BricksetCmd::Verify { brickset } } => brickset_verify(&io::brickset_from(read_doc(&brickset)?)?),
        Command::Theta { cmd: ThetaCmd::Solve { group: s, center, targets } } => theta_solve(&group(&s)?, &center, &targets),
        Command::Stability { cmd: StabilityCmd::Check { brick, theta, symbolic_m, vartheta, m } } => {
            stability_check(&brick, &theta, symbolic_m, vartheta.as_deref(), m)
        }
        Command::Certify { group: s, fan, output } => certify(&group(&s)?, &fan_file(&fan)?, output.as_deref()),
        Command::Render { fan, output } => {
            write_file(&output, &render_svg(&fan_file(&fan)?))?;
            Ok(vec![])
        }
        Command::Fixture { name } => fixture(&name),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            print!("{}", io::serialize(&io::error_doc(PARSE as i32, &e.to_string())));
            return ExitCode::from(PARSE);
        }
    };
    match run(cli) {
        Ok(docs) => {
            for d in docs {
                print!("{}", io::serialize(&d));
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(d) = &f.extra {
                print!("{}", io::serialize(d));
            }
            print!("{}", io::serialize(&io::error_doc(f.code as i32, &f.message)));
            ExitCode::from(f.code)
        }
    }
}

