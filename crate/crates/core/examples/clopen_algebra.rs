//! A four-point space with two connected components: its clopen algebra,
//! and the F2-algebra structure (symmetric difference, intersection).
//!
//! cargo run --example clopen_algebra

use std::path::Path;

use ultranorm::io;

fn main() -> anyhow::Result<()> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/two_blobs.json");
    let x = io::load_space(&path)?;
    println!("X = {x}");
    for (i, c) in x.components().iter().enumerate() {
        println!("component {i}: {}", x.render(*c));
    }

    let co = x.clopens();
    let alg = co.algebra();
    println!("CO(X) has {} elements:", alg.num_elements());
    for a in alg.elements() {
        println!("  {a:<6} ↦ {}", x.render(co.to_points(a)));
    }

    // Boolean ring: a + b = a △ b, a · b = a ∧ b, and a + a = 0
    let (a, b) = (alg.atom(0), alg.top());
    println!("{a} + {b} = {}", alg.f2_add(a, b)?);
    println!("{a} · {b} = {}", alg.f2_mul(a, b)?);
    println!("{a} + {a} = {}", alg.f2_add(a, a)?);

    println!("non-clopen open {{3}}: clopen? {}", x.is_clopen(0b0100));
    Ok(())
}
