//! Maximal ideals of C(X, k) for a p-adic function: each corresponds to an
//! ultrafilter, and the quotient norm of f equals its ultrafilter seminorm.
//!
//! cargo run --example max_ideals

use std::path::Path;

use ultranorm::funcalg::{
    algebraic_norm, enumerate_max_ideals, ideal_from_uf, uf_from_ideal, uf_seminorm,
};
use ultranorm::{io, UfSpace};

fn main() -> anyhow::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/padic_f.json");
    let f = io::load_function(&path)?;
    let x = f.space().clone();
    println!("f = {:?} over {}", f.render(), f.field());
    println!(
        "‖f‖_sup = {}, ‖f‖_alg = {}",
        f.sup_norm(),
        algebraic_norm(&f)
    );

    for m in enumerate_max_ideals(&x, f.field()) {
        let u = uf_from_ideal(&m)?;
        println!(
            "m vanishing on {:<6} prime={} ‖f‖_m = {:<6} ‖f‖_F = {}",
            x.render(m.zero_set_points()),
            m.is_prime(),
            m.quotient_norm(&f)?,
            uf_seminorm(&f, &u)?
        );
    }

    // and back: ultrafilter → ideal → ultrafilter
    let uf = UfSpace::build(&x);
    for u in uf.ultrafilters() {
        let m = ideal_from_uf(&x, f.field(), u)?;
        assert_eq!(&uf_from_ideal(&m)?, u);
    }
    println!(
        "all {} ultrafilters round-trip through their ideals",
        uf.len()
    );
    Ok(())
}
