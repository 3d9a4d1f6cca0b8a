//! Filters on a finite Boolean algebra: the filter generated by a set,
//! extension of a proper filter to an ultrafilter, and the ultrafilter count.
//!
//! cargo run --example ultrafilters

use ultranorm::{BoolAlg, Element, Filter};

fn main() -> anyhow::Result<()> {
    let alg = BoolAlg::new(vec!["a".into(), "b".into(), "c".into()])?;

    // the generators meet in {a}, so the generated filter is ↑{a, b} ∧ ↑{a, c} = ↑{a}
    let gens = [Element(0b011), Element(0b101)];
    let f = Filter::generated(&alg, &gens)?;
    let members: Vec<String> = f.members().iter().map(|e| e.to_string()).collect();
    println!("Fil({}, {}) = {{{}}}", gens[0], gens[1], members.join(", "));
    println!(
        "proper: {}, ultrafilter: {}",
        f.is_proper(),
        f.is_ultrafilter()
    );

    // disjoint generators: the generated filter is everything
    let bad = Filter::generated(&alg, &[Element(0b001), Element(0b010)])?;
    println!("Fil({{a}}, {{b}}) proper? {}", bad.is_proper());

    let coarse = Filter::principal(&alg, Element(0b110))?;
    let u = coarse.extend_to_ultrafilter()?;
    println!(
        "↑{} extends to the ultrafilter at atom {}",
        Element(0b110),
        alg.atom_labels()[u.atom()]
    );

    let all = alg.enumerate_ultrafilters();
    println!("{} ultrafilters, one per atom:", all.len());
    for u in &all {
        println!(
            "  minimum {} ({} members)",
            u.minimum(),
            u.filter().members().len()
        );
    }
    Ok(())
}
