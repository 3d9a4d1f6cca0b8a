//! Extending scalars K ⊗_k C(X, k) → C(X, K) is an isometry for the
//! catalogue extensions F4/F2 and Q(i)/Q.
//!
//! cargo run --example tensor_isometry

use std::path::Path;

use ultranorm::compactify::Extension;
use ultranorm::io;

fn main() -> anyhow::Result<()> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    for (file, ext) in [
        ("f4_tensor.json", "F4/F2"),
        ("gaussian_tensor.json", "Q(i)/Q"),
    ] {
        let ext: Extension = ext.parse()?;
        let t = io::load_tensor(&data.join(file), ext)?;
        let image = t.apply_extension()?;
        println!("{file}: {} terms over {}", t.terms.len(), ext.ext_field());
        println!("  image in C(X, K): {:?}", image.render());
        println!(
            "  tensor norm {} | sup of image {} | naive bound {} | isometry {}",
            t.tensor_norm(),
            image.sup_norm(),
            t.naive_bound(),
            t.isometry_check()?
        );
    }
    Ok(())
}
