//! The Berkovich spectrum of C(X, k) is UF(X), whatever the base field.
//!
//! cargo run --example berkovich_spectrum

use std::path::Path;
use std::sync::Arc;

use ultranorm::funcalg::{spectrum, spectrum_bijection, spectrum_matches_basis};
use ultranorm::{io, BoundedFunction, Scalar, UfSpace, ValuedField};

fn main() -> anyhow::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/two_blobs.json");
    let x = Arc::new(io::load_space(&path)?);
    let uf = UfSpace::build(&x);

    for field in ["F2", "F4", "Q", "Q(i)", "p-adic:3"] {
        let k: ValuedField = field.parse()?;
        let points = spectrum(&x, &k);
        let bij = spectrum_bijection(&points, &uf);
        let topo = match &bij {
            Some(b) => spectrum_matches_basis(&points, &uf, b)?,
            None => false,
        };
        println!(
            "{field:<9} {} points, bijection {:?}, topology matches: {topo}",
            points.len(),
            bij
        );
    }

    // a point evaluates |f| on its component
    let k = ValuedField::p_adic(3)?;
    let f = BoundedFunction::new(
        x.clone(),
        k.clone(),
        [9, 9, 2, 2].map(Scalar::integer).to_vec(),
    )?;
    for p in spectrum(&x, &k) {
        let support = p.support()?;
        println!(
            "point vanishing on {}: |f| = {}",
            x.render(support.zero_set_points()),
            p.eval(&f)?
        );
    }
    Ok(())
}
