//! Command-line entry point. Every subcommand emits either a short human
//! summary or, with `--json`, a deterministic report document.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use grouplab::corpus::{corpus_with_products, named_group, NamedGroupSpec};
use grouplab::decomp::{cancel_factor, decompose, is_indecomposable};
use grouplab::endo::{enumerate_endomorphisms, fitting_decomposition};
use grouplab::error::{Error, Result};
use grouplab::group::{Elem, FiniteGroup, NormalSubgroup};
use grouplab::hom::GroupHom;
use grouplab::io;
use grouplab::iso::{find_isomorphism, fingerprint, DEFAULT_SEARCH_BUDGET};
use grouplab::report::Report;
use grouplab::suite::{all_passed, run_all, SuiteConfig};
use grouplab::tower::{
    fiber_power, fin_images, same_fin, tower_decompose, FiberPowerSpec,
};

#[derive(Parser)]
#[command(name = "grouplab", version, about = "Finite-group decomposition workbench")]
struct Cli {
    /// Emit machine-readable JSON reports.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

/// One group input: a file (cayley-v1 / perm-v1 JSON) or an inline
/// `--named name:p1:p2` spec.
#[derive(Args, Clone)]
struct GroupInput {
    /// Path to a group JSON file.
    file: Option<PathBuf>,
    /// Inline named group, e.g. cyclic:6 or product:cyclic:2*symmetric:3.
    #[arg(long)]
    named: Option<String>,
}

impl GroupInput {
    fn resolve(&self, report: &mut Report) -> Result<FiniteGroup> {
        match (&self.file, &self.named) {
            (Some(path), None) => {
                let text = std::fs::read_to_string(path)?;
                report.add_input(path.display().to_string(), text.as_bytes());
                io::group_from_json(&text)
            }
            (None, Some(spec)) => {
                report.add_input(spec.clone(), spec.as_bytes());
                named_group(&NamedGroupSpec::parse(spec)?)
            }
            _ => Err(Error::BadParams(
                "give exactly one of a group file or --named".into(),
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a group into indecomposable internal direct factors.
    Decompose {
        #[command(flatten)]
        input: GroupInput,
        /// Refuse groups above this order (normal-subgroup enumeration grows
        /// quickly).
        #[arg(long, default_value_t = 64)]
        max_order: usize,
    },
    /// Decide isomorphism of two groups (two files, two --named, or one of each).
    Iso {
        /// Group JSON files.
        files: Vec<PathBuf>,
        /// Inline named groups (repeatable).
        #[arg(long)]
        named: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Fitting split of a group along a normal endomorphism.
    Fitting {
        #[command(flatten)]
        input: GroupInput,
        /// Endomorphism as a comma-separated image vector, e.g. 0,2,4,0,2,4.
        #[arg(long)]
        endo: String,
    },
    /// Enumerate the normal endomorphisms of a group.
    NormalEndos {
        #[command(flatten)]
        input: GroupInput,
        #[arg(long, default_value_t = 16)]
        max_order: usize,
    },
    /// Cancel an order-n direct factor from two isomorphic products.
    Cancel {
        /// Group JSON file for X.
        #[arg(long)]
        x: Option<PathBuf>,
        /// Inline named group for X.
        #[arg(long)]
        x_named: Option<String>,
        /// Group JSON file for Y.
        #[arg(long)]
        y: Option<PathBuf>,
        /// Inline named group for Y.
        #[arg(long)]
        y_named: Option<String>,
        /// Order of the distinguished factor to cancel.
        #[arg(long)]
        g_order: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Tower operations on tower-v1 JSON files.
    Tower {
        #[command(subcommand)]
        command: TowerCommand,
    },
    /// Construct a fiber power over a base group.
    FiberPower(FiberPowerArgs),
    /// List the named corpus.
    Corpus {
        #[arg(long, default_value_t = 64)]
        max_order: usize,
    },
    /// Run the full invariant suite; exits nonzero on any failure.
    Selftest {
        /// Cap every sweep's order bound.
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum TowerCommand {
    /// Check surjectivity and homomorphism validity of every connecting map.
    Validate { file: PathBuf },
    /// Search for a coherent chain of indecomposable decompositions.
    Decompose { file: PathBuf },
    /// Isomorphism classes of bounded quotients over all levels.
    Fin {
        file: PathBuf,
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Compare the bounded finite-image sets of two towers.
    SameFin {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long, default_value_t = 64)]
        max_order: usize,
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Construct a fiber power over a base group.
    FiberPower(FiberPowerArgs),
}

#[derive(Args)]
struct FiberPowerArgs {
    #[command(flatten)]
    input: GroupInput,
    /// Members of the congruence subgroup G0, comma-separated.
    #[arg(long)]
    g0: String,
    /// Members of the fine modulus M0 (inside G0), comma-separated.
    #[arg(long, default_value = "0")]
    m0: String,
    /// Number of fiber coordinates.
    #[arg(long, default_value_t = 1)]
    n: usize,
    /// Members of the coarse modulus N (inside G0), comma-separated.
    #[arg(long, default_value = "0")]
    modulus: String,
    /// Also embed the constructed group as cayley-v1 JSON in the report.
    #[arg(long)]
    emit_group: bool,
}

fn parse_members(s: &str) -> Result<Vec<Elem>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<Elem>()
                .map_err(|_| Error::BadParams(format!("not an element index: {p}")))
        })
        .collect()
}

fn factor_payload(f: &NormalSubgroup) -> serde_json::Value {
    let (g, _) = f.as_group();
    serde_json::json!({
        "order": f.order(),
        "fingerprint": fingerprint(&g),
        "members": f.members(),
    })
}

fn run(cli: &Cli, argv: &str) -> Result<(Report, bool)> {
    let mut report = Report::new(argv);
    let mut success = true;
    match &cli.command {
        Command::Decompose { input, max_order } => {
            let g = input.resolve(&mut report)?;
            if g.order() > *max_order {
                return Err(Error::OrderBudgetExceeded {
                    got: g.order(),
                    budget: *max_order,
                });
            }
            let d = decompose(&g);
            report.add_lemma("decomposition-existence");
            report.set_result(serde_json::json!({
                "order": g.order(),
                "factors": d.factors().iter().map(factor_payload).collect::<Vec<_>>(),
                "indecomposable": is_indecomposable(&g) && g.order() > 1,
            }));
        }
        Command::Iso {
            files,
            named,
            budget,
        } => {
            let mut groups = Vec::new();
            for f in files {
                let text = std::fs::read_to_string(f)?;
                report.add_input(f.display().to_string(), text.as_bytes());
                groups.push(io::group_from_json(&text)?);
            }
            for spec in named {
                report.add_input(spec.clone(), spec.as_bytes());
                groups.push(named_group(&NamedGroupSpec::parse(spec)?)?);
            }
            if groups.len() != 2 {
                return Err(Error::BadParams(format!(
                    "iso needs exactly two groups, got {}",
                    groups.len()
                )));
            }
            let witness = find_isomorphism(&groups[0], &groups[1], *budget)?;
            report.add_lemma("isomorphism-search");
            report.set_result(serde_json::json!({
                "isomorphic": witness.is_some(),
                "fingerprints_equal": fingerprint(&groups[0]) == fingerprint(&groups[1]),
                "witness": witness.map(|w| w.image_vector().to_vec()),
            }));
        }
        Command::Fitting { input, endo } => {
            let g = input.resolve(&mut report)?;
            let image_of = parse_members(endo)?;
            let f = GroupHom::new(g.clone(), g.clone(), image_of)?;
            let split = fitting_decomposition(&f)?;
            report.add_lemma("fitting-split");
            report.set_result(serde_json::json!({
                "exponent": split.exponent,
                "kernel_part": split.kernel_part.members(),
                "image_part": split.image_part.members(),
            }));
        }
        Command::NormalEndos { input, max_order } => {
            let g = input.resolve(&mut report)?;
            let endos = enumerate_endomorphisms(&g, true, *max_order)?;
            report.add_lemma("normal-endomorphism-calculus");
            report.set_result(serde_json::json!({
                "count": endos.len(),
                "endomorphisms": endos
                    .iter()
                    .map(|f| f.image_vector().to_vec())
                    .collect::<Vec<_>>(),
            }));
        }
        Command::Cancel {
            x,
            x_named,
            y,
            y_named,
            g_order,
            budget,
        } => {
            let xin = GroupInput {
                file: x.clone(),
                named: x_named.clone(),
            };
            let yin = GroupInput {
                file: y.clone(),
                named: y_named.clone(),
            };
            let gx = xin.resolve(&mut report)?;
            let gy = yin.resolve(&mut report)?;
            let dx = decompose(&gx);
            let dy = decompose(&gy);
            let pick = |d: &grouplab::decomp::InternalDecomposition| {
                d.factors().iter().position(|f| f.order() == *g_order)
            };
            let (Some(ix), Some(iy)) = (pick(&dx), pick(&dy)) else {
                return Err(Error::BadParams(format!(
                    "no canonical factor of order {g_order} on both sides"
                )));
            };
            let w = cancel_factor(&gx, &dx, ix, &gy, &dy, iy, *budget)?;
            report.add_lemma("direct-factor-cancellation");
            report.set_result(serde_json::json!({
                "complement_order": w.source().order(),
                "witness": w.image_vector().to_vec(),
            }));
        }
        Command::Tower { command } => run_tower(command, &mut report)?,
        Command::FiberPower(args) => run_fiber_power(args, &mut report)?,
        Command::Corpus { max_order } => {
            let groups = corpus_with_products(*max_order, 4);
            report.add_lemma("corpus-enumeration");
            report.set_result(serde_json::json!({
                "count": groups.len(),
                "groups": groups
                    .iter()
                    .map(|g| {
                        serde_json::json!({
                            "name": g.label().unwrap_or("?"),
                            "order": g.order(),
                        })
                    })
                    .collect::<Vec<_>>(),
            }));
        }
        Command::Selftest { max_order, budget } => {
            let mut cfg = SuiteConfig {
                budget: *budget,
                ..SuiteConfig::default()
            };
            if let Some(n) = max_order {
                cfg = cfg.capped(*n);
            }
            let results = run_all(&cfg);
            success = all_passed(&results);
            for r in &results {
                report.add_lemma(r.name);
            }
            report.set_result(serde_json::json!({
                "passed": success,
                "criteria": results,
            }));
        }
    }
    Ok((report, success))
}

fn run_tower(command: &TowerCommand, report: &mut Report) -> Result<()> {
    let load = |path: &PathBuf, report: &mut Report| -> Result<grouplab::tower::ProfiniteTower> {
        let text = std::fs::read_to_string(path)?;
        report.add_input(path.display().to_string(), text.as_bytes());
        io::tower_from_json(&text)
    };
    match command {
        TowerCommand::Validate { file } => {
            let t = load(file, report)?;
            let v = t.validate();
            report.add_lemma("tower-validity");
            report.set_result(serde_json::to_value(&v)?);
        }
        TowerCommand::Decompose { file } => {
            let t = load(file, report)?;
            let cd = tower_decompose(&t)?;
            report.add_lemma("coherent-tower-decomposition");
            report.set_result(serde_json::json!({
                "levels": cd
                    .per_level
                    .iter()
                    .map(|d| d.factors().iter().map(factor_payload).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
                "correspondence": cd.correspondence,
            }));
        }
        TowerCommand::Fin {
            file,
            max_order,
            budget,
        } => {
            let t = load(file, report)?;
            let f = fin_images(&t, *max_order, *budget)?;
            report.add_lemma("finite-image-sets");
            report.set_result(serde_json::json!({
                "max_order": f.max_order,
                "classes": f
                    .classes
                    .iter()
                    .map(|(fp, rep)| {
                        serde_json::json!({"order": rep.order(), "fingerprint": fp})
                    })
                    .collect::<Vec<_>>(),
            }));
        }
        TowerCommand::SameFin {
            file1,
            file2,
            max_order,
            budget,
        } => {
            let t1 = load(file1, report)?;
            let t2 = load(file2, report)?;
            let cmp = same_fin(&t1, &t2, *max_order, *budget)?;
            report.add_lemma("finite-image-sets");
            report.set_result(serde_json::to_value(&cmp)?);
        }
        TowerCommand::FiberPower(args) => run_fiber_power(args, report)?,
    }
    Ok(())
}

fn run_fiber_power(args: &FiberPowerArgs, report: &mut Report) -> Result<()> {
    let g = args.input.resolve(report)?;
    let sub = |s: &str| -> Result<NormalSubgroup> {
        NormalSubgroup::from_members(g.clone(), parse_members(s)?)
    };
    let spec = FiberPowerSpec::new(
        g.clone(),
        sub(&args.g0)?,
        sub(&args.m0)?,
        args.n,
        sub(&args.modulus)?,
    )?;
    let (fp, desc) = fiber_power(&spec)?;
    report.add_lemma("fiber-power-order-law");
    let mut result = serde_json::json!({
        "description": desc,
        "fingerprint": fingerprint(&fp),
    });
    if args.emit_group {
        result["group"] = serde_json::to_value(io::GroupDocument::from_group(&fp))?;
    }
    report.set_result(result);
    Ok(())
}

fn human_summary(report: &Report) -> String {
    // Compact one-screen rendering; the JSON document is the stable format.
    let mut out = String::new();
    out.push_str(&format!("command: {}\n", report.command));
    // Selftest gets one line per criterion instead of the raw document.
    if let Some(criteria) = report.result.get("criteria").and_then(|c| c.as_array()) {
        for c in criteria {
            let name = c["name"].as_str().unwrap_or("?");
            let checks = c["checks"].as_u64().unwrap_or(0);
            if c["passed"].as_bool() == Some(true) {
                out.push_str(&format!("PASS {name} ({checks} checks)\n"));
            } else {
                let detail = c["detail"].as_str().unwrap_or("");
                out.push_str(&format!("FAIL {name} — {detail}\n"));
            }
        }
        return out;
    }
    out.push_str(&serde_json::to_string_pretty(&report.result).unwrap_or_default());
    out.push('\n');
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let argv = argv.join(" ");
    match run(&cli, &argv) {
        Ok((report, success)) => {
            if cli.json {
                println!("{}", report.to_json());
            } else {
                print!("{}", human_summary(&report));
            }
            if success {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({"error": e.name(), "message": e.to_string()})
                );
            } else {
                eprintln!("error [{}]: {e}", e.name());
            }
            // Malformed invocations exit like argument-parse failures (2);
            // well-formed requests that fail on the mathematics exit 1.
            match e {
                Error::BadParams(_) | Error::UnknownName(_) => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
    }
}
