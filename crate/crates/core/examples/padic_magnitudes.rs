//! Exact absolute values: p-adic ℚ, trivially valued finite fields, and the
//! strong triangle inequality.
//!
//! cargo run --example padic_magnitudes

use ultranorm::{AbsValue, ValuedField};

fn main() -> anyhow::Result<()> {
    let q2: ValuedField = "p-adic:2".parse()?;
    for s in ["12", "3/8", "-5/4", "0", "1024"] {
        let x = q2.parse_scalar(s)?;
        println!("|{s}|_2 = {} = {}", q2.abs(&x), q2.abs(&x).to_rational());
    }

    // |x + y| ≤ max(|x|, |y|), with equality when the magnitudes differ
    let (x, y) = (q2.parse_scalar("4")?, q2.parse_scalar("6")?);
    let sum = q2.add(&x, &y);
    println!(
        "|4 + 6|_2 = {} ≤ max({}, {})",
        q2.abs(&sum),
        q2.abs(&x),
        q2.abs(&y)
    );
    let (x, y) = (q2.parse_scalar("2")?, q2.parse_scalar("6")?);
    println!(
        "|2 + 6|_2 = {} — cancellation can shrink the sum",
        q2.abs(&q2.add(&x, &y))
    );

    let eps: AbsValue = "2^-3".parse()?;
    println!(
        "an element of magnitude {eps}: {:?}",
        q2.element_of_magnitude(eps).map(|s| q2.format_scalar(&s))
    );

    let f4 = ValuedField::finite(4)?;
    let nonzero: Vec<String> = f4
        .finite_elements()
        .unwrap_or_default()
        .iter()
        .map(|a| format!("{}:{}", f4.format_scalar(a), f4.abs(a)))
        .collect();
    println!("{f4} is trivially valued: {}", nonzero.join("  "));
    Ok(())
}
