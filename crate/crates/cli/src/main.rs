//! `sclose`: strong-closure analysis of finite permutation groups.
//!
//! Exit codes: 0 success, 2 cap refusal, 3 verification failure (a
//! classification mismatch or an internal consistency failure), 4 input
//! error.

use clap::{Args, Parser, Subcommand};
use sclose_core::analyze::{analyze, crosscheck, verify_classification};
use sclose_core::caps::Caps;
use sclose_core::corpus;
use sclose_core::error::Error;
use sclose_core::ext::{verify_prop41, verify_prop42, ExtensionGroup};
use sclose_core::fpmod::FpModule;
use sclose_core::lie::{
    strongly_closed_verdict, sylow_shape, LieFamily, LieSpec, VerdictInput,
};
use sclose_core::matgroup::{parse_spec, permutation_image, MatrixAction};
use sclose_core::perm::parse_cycles;

#[derive(Parser)]
#[command(name = "sclose", version, about = "strong closure, fusion control, and Sylow structure for finite groups")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Override the element-enumeration cap (SC_MAX_ELEMENTS).
    #[arg(long, global = true)]
    max_elements: Option<u64>,
    /// Override the p-group census cap (SC_MAX_PGROUP).
    #[arg(long, global = true)]
    max_pgroup: Option<u64>,
    /// Override the permutation-degree cap (SC_MAX_DEGREE).
    #[arg(long, global = true)]
    max_degree: Option<u64>,
    /// Allow corpus entries marked as exceeding the default budget.
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full strong-closure analysis of a group at a prime.
    Analyze {
        /// Corpus name, classical spec like `SL(2,19)`, or a group file.
        group: String,
        #[arg(short, long)]
        p: u64,
    },
    /// Predict the Sylow shape and classification verdict for a spec.
    Predict(PredictArgs),
    /// Compare a Lie-type prediction against the brute Sylow profile.
    Crosscheck(LieArgs),
    /// Build extension groups and verify their fusion/order profiles.
    #[command(subcommand)]
    Extend(ExtendCommand),
    /// Corpus inspection.
    #[command(subcommand)]
    Corpus(CorpusCommand),
    /// Analyze and assert agreement with the classification verdict.
    VerifyClassification {
        /// Corpus name, or `all` for the whole corpus.
        group: String,
        /// Prime to check; all primes dividing |G| when omitted.
        #[arg(short, long)]
        p: Option<u64>,
    },
}

#[derive(Args)]
struct LieArgs {
    /// Family letter: A, B, C, D, E6, E7, E8, F4, G2.
    #[arg(long)]
    family: String,
    /// Rank for the classical families A–D.
    #[arg(long)]
    ell: Option<u32>,
    /// Twist: 1 untwisted, 2 Steinberg/Suzuki–Ree, 3 triality.
    #[arg(long, default_value_t = 1)]
    twist: u32,
    #[arg(long)]
    q: u64,
    #[arg(short, long)]
    p: u64,
}

#[derive(Args)]
struct PredictArgs {
    #[arg(long)]
    family: Option<String>,
    #[arg(long)]
    ell: Option<u32>,
    #[arg(long, default_value_t = 1)]
    twist: u32,
    #[arg(long)]
    q: Option<u64>,
    /// A sporadic group name instead of a Lie spec.
    #[arg(long)]
    sporadic: Option<String>,
    /// An alternating group degree instead of a Lie spec.
    #[arg(long)]
    alternating: Option<u32>,
    #[arg(short, long)]
    p: u64,
}

#[derive(Subcommand)]
enum ExtendCommand {
    /// Split extension E ⋊ R with a fusion-control failure witness.
    Split {
        /// R: corpus name, classical spec, or group file.
        #[arg(long = "R")]
        r: String,
        /// Module: `perm:natural` (R's points) or `perm:projective`
        /// (projective classes of a vector realization).
        #[arg(long, default_value = "perm:natural")]
        module: String,
        #[arg(short, long)]
        p: u64,
    },
    /// Coinduced extension, nonsplit over X and split over each Z.
    Coinduced {
        #[arg(long = "R")]
        r: String,
        /// Generator of X in cycle notation, e.g. "(0 1 2)".
        #[arg(long)]
        x: String,
        /// Order-p elements z (repeatable) not conjugate into X.
        #[arg(long)]
        z: Vec<String>,
        #[arg(short, long)]
        p: u64,
        /// Cocycle-identity sample count for large R.
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
    },
}

#[derive(Subcommand)]
enum CorpusCommand {
    /// List the registry.
    List,
}

fn parse_family(name: &str, ell: Option<u32>) -> Result<LieFamily, Error> {
    match (name.to_ascii_uppercase().as_str(), ell) {
        ("A", Some(l)) => Ok(LieFamily::A(l)),
        ("B", Some(l)) => Ok(LieFamily::B(l)),
        ("C", Some(l)) => Ok(LieFamily::C(l)),
        ("D", Some(l)) => Ok(LieFamily::D(l)),
        ("E6", _) => Ok(LieFamily::E6),
        ("E7", _) => Ok(LieFamily::E7),
        ("E8", _) => Ok(LieFamily::E8),
        ("F4", _) => Ok(LieFamily::F4),
        ("G2", _) => Ok(LieFamily::G2),
        ("A" | "B" | "C" | "D", None) => {
            Err(Error::Input("classical families need --ell".into()))
        }
        (other, _) => Err(Error::Input(format!("unknown family {other:?}"))),
    }
}

fn caps_from(cli: &Cli) -> Caps {
    let mut caps = Caps::from_env();
    if let Some(v) = cli.max_elements {
        caps.max_elements = v;
    }
    if let Some(v) = cli.max_pgroup {
        caps.max_pgroup = v;
    }
    if let Some(v) = cli.max_degree {
        caps.max_degree = v as usize;
    }
    caps
}

fn emit<T: serde::Serialize + std::fmt::Display>(json: bool, value: &T) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
    } else {
        print!("{value}");
    }
}

fn emit_json_only<T: serde::Serialize>(json: bool, value: &T, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable report"));
    } else {
        print!("{text}");
    }
}

fn run(cli: &Cli) -> Result<i32, Error> {
    let caps = caps_from(cli);
    match &cli.command {
        Command::Analyze { group, p } => {
            let (g, entry) = resolve(group, &caps, cli.allow_large)?;
            let name = entry.as_ref().map(|e| e.name.to_string()).unwrap_or_else(|| group.clone());
            let report = analyze(&name, &g, entry.as_ref(), *p, &caps)?;
            emit(cli.json, &report);
            Ok(0)
        }
        Command::Predict(args) => {
            let input = if let Some(name) = &args.sporadic {
                VerdictInput::Sporadic(name.clone())
            } else if let Some(n) = args.alternating {
                VerdictInput::Alternating(n)
            } else {
                let family = parse_family(
                    args.family.as_deref().ok_or_else(|| {
                        Error::Input("predict needs --family, --sporadic, or --alternating".into())
                    })?,
                    args.ell,
                )?;
                let q = args.q.ok_or_else(|| Error::Input("Lie specs need --q".into()))?;
                VerdictInput::Lie(LieSpec::new(family, args.twist, q)?)
            };
            let verdict = strongly_closed_verdict(&input, args.p)?;
            let mut text = String::new();
            if let VerdictInput::Lie(spec) = &input {
                if spec.q % args.p != 0 {
                    let shape = sylow_shape(spec, args.p)?;
                    text.push_str(&format!(
                        "{} at p = {}: Sylow order {}\n",
                        spec.display_name(),
                        args.p,
                        shape.order
                    ));
                    if let Some(s) = &shape.structure {
                        text.push_str(&format!(
                            "  m0 = {}, rank = {}, exponent = {}, |S_W| = {}^{}{}\n",
                            s.m0,
                            s.rank,
                            s.exponent,
                            args.p,
                            s.b,
                            if let Some((r, e)) = s.homocyclic {
                                format!(", homocyclic of rank {r} and exponent {e}")
                            } else if s.triality_special {
                                let (big, small) = shape.triality_abelian_part().unwrap_or((0, 0));
                                format!(", abelian part ({big}, {small}) extended by 3")
                            } else {
                                String::new()
                            }
                        ));
                    }
                    if cli.json {
                        #[derive(serde::Serialize)]
                        struct Predicted<'a> {
                            shape: &'a sclose_core::lie::SylowShape,
                            verdict: &'a sclose_core::lie::Verdict,
                        }
                        emit_json_only(
                            true,
                            &Predicted {
                                shape: &shape,
                                verdict: &verdict,
                            },
                            String::new(),
                        );
                        return Ok(0);
                    }
                }
            }
            text.push_str(&format!(
                "verdict: {}\n",
                if verdict.has_proper_strongly_closed {
                    "has a proper nontrivial strongly closed subgroup"
                } else {
                    "only 1 and S are strongly closed"
                }
            ));
            for shape in &verdict.shapes {
                text.push_str(&format!("  admissible: {} (order {})\n", shape.description, shape.order));
            }
            if let Some(d) = &verdict.decorations {
                text.push_str(&format!("  decorations: {d}\n"));
            }
            emit_json_only(cli.json, &verdict, text);
            Ok(0)
        }
        Command::Crosscheck(args) => {
            let family = parse_family(&args.family, args.ell)?;
            let spec = LieSpec::new(family, args.twist, args.q)?;
            let report = crosscheck(&spec, args.p, &caps)?;
            let text = format!(
                "{} at p = {}: predicted Sylow order {} — {}\n",
                report.spec,
                report.p,
                report.predicted.order,
                match report.agree {
                    Some(true) => "matches the brute profile".to_string(),
                    Some(false) => "MISMATCH against the brute profile".to_string(),
                    None => "predictor-only (not realizable at desk scale)".to_string(),
                }
            );
            let code = if report.agree == Some(false) { 3 } else { 0 };
            emit_json_only(cli.json, &report, text);
            Ok(code)
        }
        Command::Extend(sub) => run_extend(sub, cli, &caps),
        Command::Corpus(CorpusCommand::List) => {
            let registry = corpus::registry();
            if cli.json {
                #[derive(serde::Serialize)]
                struct Row<'a> {
                    name: &'a str,
                    degree: usize,
                    order: u64,
                    simple: bool,
                    large: bool,
                }
                let rows: Vec<Row> = registry
                    .iter()
                    .map(|e| Row {
                        name: e.name,
                        degree: e.degree,
                        order: e.expected_order,
                        simple: e.simple,
                        large: e.large,
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows).expect("rows"));
            } else {
                println!("{:<10} {:>7} {:>10}  flags", "name", "degree", "order");
                for e in registry {
                    let mut flags = Vec::new();
                    if e.simple {
                        flags.push("simple");
                    }
                    if e.lie.is_some() {
                        flags.push("lie-tagged");
                    }
                    if e.large {
                        flags.push("large");
                    }
                    println!(
                        "{:<10} {:>7} {:>10}  {}",
                        e.name,
                        e.degree,
                        e.expected_order,
                        flags.join(",")
                    );
                }
            }
            Ok(0)
        }
        Command::VerifyClassification { group, p } => {
            let names: Vec<String> = if group.eq_ignore_ascii_case("all") {
                corpus::registry().iter().map(|e| e.name.to_string()).collect()
            } else {
                vec![group.clone()]
            };
            let mut all_agree = true;
            for name in names {
                let (g, entry) = corpus::load(&name, &caps)?;
                if entry.large && !cli.allow_large {
                    println!("{name}: skipped (needs --allow-large)");
                    continue;
                }
                let primes: Vec<u64> = match p {
                    Some(p) => vec![*p],
                    None => primes_dividing(g.order_u64().unwrap_or(0)),
                };
                for p in primes {
                    let check = verify_classification(&name, &g, &entry.verdict, p, &caps)?;
                    if cli.json {
                        println!("{}", serde_json::to_string_pretty(&check).expect("check"));
                    } else {
                        print!("{check}");
                    }
                    if check.agree == Some(false) {
                        all_agree = false;
                    }
                }
            }
            Ok(if all_agree { 0 } else { 3 })
        }
    }
}

fn run_extend(sub: &ExtendCommand, cli: &Cli, caps: &Caps) -> Result<i32, Error> {
    match sub {
        ExtendCommand::Split { r, module, p } => {
            let (group, fpmodule) = match module.as_str() {
                "perm:natural" => {
                    let (g, _) = resolve(r, caps, cli.allow_large)?;
                    let points: Vec<usize> = (0..g.degree()).collect();
                    let m = FpModule::perm_module(&g, &points, *p)?;
                    (g, m)
                }
                "perm:projective" => {
                    let (spec, _) = parse_spec(r)?;
                    let real = permutation_image(&spec, MatrixAction::NonzeroVectors, caps)?;
                    let blocks = real.projective_blocks()?;
                    let m = FpModule::block_module(&real.group, blocks, *p)?;
                    (real.group, m)
                }
                other => {
                    return Err(Error::Input(format!(
                        "unknown module spec {other:?} (use perm:natural or perm:projective)"
                    )))
                }
            };
            let report = verify_prop41(&group, &fpmodule, *p, caps)?;
            let text = format!(
                "split extension of {} by a dim-{} module over F_{}: order {}\n\
                 preconditions hold; ω̄T has order {} < |T| = {}\n\
                 fusion witness: z = {:?} moved off the T-fixed space by r = {} (replay {})\n",
                r,
                report.module_dim,
                report.p,
                report.extension_order,
                report.preconditions.omega_bar_t_order,
                report.preconditions.sylow_t_order,
                report.witness_vector,
                report.witness_r,
                if report.replay_ok { "ok" } else { "FAILED" }
            );
            emit_json_only(cli.json, &report, text);
            Ok(if report.replay_ok { 0 } else { 3 })
        }
        ExtendCommand::Coinduced {
            r,
            x,
            z,
            p,
            samples,
        } => {
            let (group, _) = resolve(r, caps, cli.allow_large)?;
            let x = parse_cycles(x, group.degree())?;
            let z: Vec<_> = z
                .iter()
                .map(|s| parse_cycles(s, group.degree()))
                .collect::<Result<_, _>>()?;
            let (ext, report) = verify_prop42(&group, &x, &z, *p, *samples, caps)?;
            let text = format!(
                "coinduced extension of {} by the dim-{} coset module over F_{}: order {}\n\
                 cocycle identity: {} triples checked ({})\n\
                 coset xE: minimum order {} (norm constant meets E₁: {}); E₁ dim {}, free rank {}\n{}",
                r,
                report.module_dim,
                report.p,
                report.extension_order,
                report.cocycle_check.triples_checked,
                if report.cocycle_check.exhaustive {
                    "exhaustive"
                } else {
                    "generator products + samples"
                },
                report.x_coset_min_order,
                report.x_norm_constant_in_e1,
                report.e1_dim,
                report.e2_free_rank,
                report
                    .z_reports
                    .iter()
                    .map(|zr| {
                        format!(
                            " coset zE for z = {}: minimum order {}, module free over Z: {}\n",
                            zr.z, zr.coset_min_order, zr.module_free_over_z
                        )
                    })
                    .collect::<String>()
            );
            let _ = ExtensionGroup::order(&ext); // keep the group alive for future use
            emit_json_only(cli.json, &report, text);
            Ok(0)
        }
    }
}

fn resolve(
    spec: &str,
    caps: &Caps,
    allow_large: bool,
) -> Result<(sclose_core::group::GeneratedGroup, Option<corpus::CorpusEntry>), Error> {
    let (group, entry) = corpus::resolve_group(spec, caps)?;
    if let Some(e) = &entry {
        if e.large && !allow_large {
            return Err(Error::cap(
                format!("corpus entry {}", e.name),
                e.expected_order,
                "the default analysis budget (pass --allow-large)",
                "--allow-large",
            ));
        }
    }
    Ok((group, entry))
}

fn primes_dividing(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            primes.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::CapExceeded { .. } => 2,
                Error::Verification(_) => 3,
                _ => 4,
            }
        }
    };
    std::process::exit(code);
}
