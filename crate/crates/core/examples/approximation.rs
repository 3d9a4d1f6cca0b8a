//! Locally constant approximation of a p-adic function within ε, and the
//! decomposition of a function into weighted idempotents.
//!
//! cargo run --example approximation

use std::path::Path;

use ultranorm::compactify::{idempotent_density_check, locally_constant_approx};
use ultranorm::{io, AbsValue};

fn main() -> anyhow::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/approx_f.json");
    let f = io::load_function(&path)?;
    println!("f = {:?}, ‖f‖ = {}", f.render(), f.sup_norm());

    for eps in ["1", "2^-1", "2^-2", "2^-3"] {
        let eps: AbsValue = eps.parse()?;
        let a = locally_constant_approx(&f, eps)?;
        let dist = f.sub(&a.g)?.sup_norm();
        println!(
            "ε = {:<5} blocks {:<14} ‖f − g‖ = {:<5} ‖g‖ = {}  within ε: {}",
            eps.to_string(),
            a.blocks.render(f.space()),
            dist.to_string(),
            a.g.sup_norm(),
            dist < eps
        );
    }

    let w = idempotent_density_check(&f)?;
    let terms: Vec<String> = w
        .terms
        .iter()
        .map(|(a, u)| format!("{}·1_{}", f.field().format_scalar(a), f.space().render(*u)))
        .collect();
    println!("f = {}  (exact: {})", terms.join(" + "), w.exact);
    Ok(())
}
