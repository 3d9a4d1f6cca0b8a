//! The ultrafilter space UF(X): principal ultrafilters, cluster points,
//! the compact-Hausdorff criterion, and the universal extension of a map
//! into a discrete space.
//!
//! cargo run --example uf_space

use std::path::Path;

use ultranorm::io;
use ultranorm::ufspace::UfMap;
use ultranorm::{ContinuousMap, FiniteSpace, UfSpace};

fn main() -> anyhow::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");

    for name in ["sierpinski.json", "two_blobs.json", "discrete3.json"] {
        let x = io::load_space(&data.join(name))?;
        let uf = UfSpace::build(&x);
        let report = uf.criterion_report();
        println!("{name}: |X| = {}, |UF(X)| = {}", x.len(), uf.len());
        for (i, f) in uf.ultrafilters().iter().enumerate() {
            println!(
                "  F{i}: minimum {}, clusters at {}",
                x.render(uf.clopens().to_points(f.minimum())),
                x.render(uf.cluster_points(f)?)
            );
        }
        println!(
            "  principal map dense: {}, homeomorphism: {}, idempotent: {}",
            uf.principal_image_dense(),
            report.principal_homeomorphism,
            uf.check_idempotent()
        );
    }

    // every continuous X → Y with Y discrete factors uniquely through UF(X)
    let x = io::load_space(&data.join("two_blobs.json"))?;
    let y = FiniteSpace::discrete(vec!["left".into(), "right".into()])?;
    let f = ContinuousMap::new(x.clone(), y, vec![0, 0, 1, 1])?;
    let ext = UfMap::new(&f)?;
    println!("UF(f) sends the ultrafilters to {:?}", ext.images());
    let composite = UfSpace::build(&x).principal_map().compose(&ext.as_map())?;
    println!(
        "UF(f) ∘ principal = f: {}",
        composite.assignment() == f.assignment()
    );
    Ok(())
}
