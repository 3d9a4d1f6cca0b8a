//! Partitions of a finite discrete space ↔ subalgebras of C(X, k) ↔
//! separation quotients, and the evaluation embedding into k^n.
//!
//! cargo run --example gelfand_partitions

use std::sync::Arc;

use ultranorm::compactify::{
    gelfand_roundtrip, sc_embed, separation_quotient, SubalgebraDescriptor,
};
use ultranorm::{FiniteSpace, Partition, ValuedField};

fn main() -> anyhow::Result<()> {
    let x = Arc::new(FiniteSpace::discrete_numbered(4)?);
    let k = ValuedField::finite(2)?;

    let p = Partition::parse(&x, "1,2|3|4")?;
    let sub = SubalgebraDescriptor::from_partition(x.clone(), k.clone(), &p)?;
    let (relation, quotient, _) = separation_quotient(&sub)?;
    println!(
        "partition {} → {} generators → separation {}",
        p.render(&x),
        sub.generators.len(),
        relation.render(&x)
    );
    println!("quotient space: {quotient}");

    let all = Partition::all(x.len());
    let ok = all
        .iter()
        .filter(|p| gelfand_roundtrip(&x, &k, p).unwrap_or(false))
        .count();
    println!("{ok} of {} partitions of 4 points round-trip", all.len());

    for space in [x.clone(), Arc::new(FiniteSpace::sierpinski())] {
        let e = sc_embed(&space, &k);
        println!("embedding of {space}: {:?}", e.verdict);
    }
    Ok(())
}
