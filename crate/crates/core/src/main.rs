use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use ultranorm::compactify::{
    gelfand_roundtrip, locally_constant_approx, separation_quotient, Extension,
    SubalgebraDescriptor,
};
use ultranorm::funcalg::{
    algebraic_norm, enumerate_max_ideals, spectrum, spectrum_bijection, spectrum_matches_basis,
    uf_from_ideal, uf_seminorm, SpaceRef,
};
use ultranorm::io::{self, component_labels, label_sets, SpaceJson};
use ultranorm::topo::Partition;
use ultranorm::verify::{run_suite, SuiteConfig};
use ultranorm::{AbsValue, UfSpace, ValuedField};

#[derive(Parser)]
#[command(
    name = "ultranorm",
    version,
    about = "Finite Stone duality and non-Archimedean function algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate or describe a space file.
    Space {
        #[command(subcommand)]
        action: SpaceAction,
    },
    /// The clopen algebra CO(X).
    Clopen { space: PathBuf },
    /// Ultrafilter space UF(X).
    Uf {
        #[command(subcommand)]
        action: UfAction,
    },
    /// Ultrafilter seminorms of a function.
    Seminorm {
        #[arg(long)]
        function: PathBuf,
    },
    /// Maximal ideals, their ultrafilters and the quotient norms of a function.
    Ideal {
        #[arg(long)]
        function: PathBuf,
    },
    /// Berkovich spectrum and its bijection onto UF(X).
    Spectrum {
        #[arg(long)]
        space: PathBuf,
        /// F2, F4, Q, Q(i), p-adic:P
        #[arg(long, default_value = "F2")]
        field: String,
    },
    /// Partition → subalgebra → separation relation round trip.
    Gelfand {
        #[arg(long)]
        space: PathBuf,
        /// Blocks of point labels, e.g. "1,2|3".
        #[arg(long)]
        partition: String,
        #[arg(long, default_value = "F2")]
        field: String,
    },
    /// Locally constant approximation within ε.
    Approx {
        #[arg(long)]
        function: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        epsilon: String,
    },
    /// Ground field extension isometry for a tensor element.
    TensorCheck {
        /// F4/F2 or Q(i)/Q
        #[arg(long)]
        extension: String,
        #[arg(long)]
        element: PathBuf,
    },
    /// Run a verification suite and write its JSON report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        max_points: Option<usize>,
        #[arg(long)]
        cases: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum SpaceAction {
    Check { space: PathBuf },
    Describe { space: PathBuf },
}

#[derive(Subcommand)]
enum UfAction {
    Build { space: PathBuf },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn print(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("json values serialize"));
}

// a closed pipe (`| head`) is not an error worth a panic
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn load_space(path: &Path) -> Result<SpaceRef> {
    Ok(Arc::new(
        io::load_space(path).with_context(|| format!("loading {}", path.display()))?,
    ))
}

/// Ok(passed) where it applies; Ok(true) for purely descriptive commands.
fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Space {
            action: SpaceAction::Check { space },
        } => {
            let x = load_space(&space)?;
            emit(&format!(
                "ok: {} points, {} open sets, {} components",
                x.len(),
                x.opens().len(),
                x.components().len()
            ));
            Ok(true)
        }
        Command::Space {
            action: SpaceAction::Describe { space },
        } => {
            let x = load_space(&space)?;
            print(&json!({
                "space": SpaceJson::from(&*x),
                "components": component_labels(&x),
                "clopens": label_sets(&x, x.clopen_sets()),
                "discrete": x.is_discrete(),
                "connected": x.is_connected(),
            }));
            Ok(true)
        }
        Command::Clopen { space } => {
            let x = load_space(&space)?;
            let co = x.clopens();
            print(&json!({
                "atoms": component_labels(&x),
                "elements": co.algebra().elements().map(|a| x.labels_of(co.to_points(a))).collect::<Vec<_>>(),
                "size": co.algebra().num_elements(),
            }));
            Ok(true)
        }
        Command::Uf {
            action: UfAction::Build { space },
        } => {
            let x = load_space(&space)?;
            let uf = UfSpace::build(&x);
            print(&serde_json::to_value(uf.describe())?);
            Ok(true)
        }
        Command::Seminorm { function } => {
            let f = io::load_function(&function)?;
            let uf = UfSpace::build(f.space());
            let mut rows = Vec::new();
            for u in uf.ultrafilters() {
                rows.push(json!({
                    "ultrafilter": f.space().labels_of(uf.clopens().to_points(u.minimum())),
                    "seminorm": uf_seminorm(&f, u)?,
                }));
            }
            let (sup, alg) = (f.sup_norm(), algebraic_norm(&f));
            print(&json!({
                "sup_norm": sup,
                "algebraic_norm": alg,
                "seminorms": rows,
            }));
            Ok(sup == alg)
        }
        Command::Ideal { function } => {
            let f = io::load_function(&function)?;
            let mut rows = Vec::new();
            let mut ok = true;
            for m in enumerate_max_ideals(f.space(), f.field()) {
                let u = uf_from_ideal(&m)?;
                let q = m.quotient_norm(&f)?;
                let s = uf_seminorm(&f, &u)?;
                ok &= q == s;
                rows.push(json!({
                    "zero_set": f.space().labels_of(m.zero_set_points()),
                    "contains_f": m.contains(&f),
                    "quotient_norm": q,
                    "ultrafilter_seminorm": s,
                    "prime": m.is_prime(),
                }));
            }
            print(&json!({ "maximal_ideals": rows }));
            Ok(ok)
        }
        Command::Spectrum { space, field } => {
            let x = load_space(&space)?;
            let k: ValuedField = field.parse()?;
            let uf = UfSpace::build(&x);
            let points = spectrum(&x, &k);
            let bijection = spectrum_bijection(&points, &uf);
            let basis = match &bijection {
                Some(b) => spectrum_matches_basis(&points, &uf, b)?,
                None => false,
            };
            let mut rows = Vec::new();
            for p in &points {
                rows.push(json!({
                    "ultrafilter": x.labels_of(uf.clopens().to_points(p.ultrafilter().minimum())),
                    "support_zero_set": x.labels_of(p.support()?.zero_set_points()),
                }));
            }
            print(&json!({
                "field": k.to_string(),
                "points": rows,
                "bijection": bijection,
                "topology_matches": basis,
            }));
            Ok(bijection.is_some() && basis)
        }
        Command::Gelfand {
            space,
            partition,
            field,
        } => {
            let x = load_space(&space)?;
            let k: ValuedField = field.parse()?;
            let p = Partition::parse(&x, &partition)?;
            let ok = gelfand_roundtrip(&x, &k, &p)?;
            let sub = SubalgebraDescriptor::from_partition(x.clone(), k, &p)?;
            let (relation, quotient, _) = separation_quotient(&sub)?;
            print(&json!({
                "partition": p.render(&x),
                "separation_relation": relation.render(&x),
                "quotient": SpaceJson::from(&quotient),
                "roundtrip": ok,
            }));
            Ok(ok)
        }
        Command::Approx { function, epsilon } => {
            let f = io::load_function(&function)?;
            let eps: AbsValue = epsilon.parse()?;
            let a = locally_constant_approx(&f, eps)?;
            let diff = f.sub(&a.g)?.sup_norm();
            let ok = diff <= eps && a.g.sup_norm() <= f.sup_norm();
            print(&json!({
                "blocks": a.blocks.render(f.space()),
                "g": a.g.render().into_iter().collect::<std::collections::BTreeMap<_, _>>(),
                "distance": diff,
                "epsilon": eps,
                "norm_f": f.sup_norm(),
                "norm_g": a.g.sup_norm(),
                "within_bounds": ok,
            }));
            Ok(ok)
        }
        Command::TensorCheck { extension, element } => {
            let ext: Extension = extension.parse()?;
            let t = io::load_tensor(&element, ext)?;
            let image = t.apply_extension()?;
            let ok = t.isometry_check()?;
            print(&json!({
                "extension": extension,
                "tensor_norm": t.tensor_norm(),
                "naive_bound": t.naive_bound(),
                "extended": image.render().into_iter().collect::<std::collections::BTreeMap<_, _>>(),
                "extended_sup_norm": image.sup_norm(),
                "isometry": ok,
            }));
            Ok(ok)
        }
        Command::Verify {
            suite,
            seed,
            max_points,
            cases,
            out,
        } => {
            let report = run_suite(
                &suite,
                &SuiteConfig {
                    seed,
                    max_points,
                    cases,
                },
            )?;
            let text = serde_json::to_string_pretty(&report)?;
            match out {
                Some(path) => {
                    std::fs::write(&path, text)
                        .with_context(|| format!("writing {}", path.display()))?;
                    let failed = report.failures();
                    eprintln!(
                        "{}: {} checks, {} cases, {} failing",
                        report.suite,
                        report.checks.len(),
                        report.total_cases(),
                        failed.len()
                    );
                    for (key, rec) in failed {
                        eprintln!("  FAIL {key}: {:?}", rec.status);
                    }
                }
                None => emit(&text),
            }
            Ok(report.passed())
        }
    }
}
