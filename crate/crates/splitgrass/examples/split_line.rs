//! A plane tangent to the rational normal curve at three points.
//!
//! Inside P^4, the hyperplanes tangent to the quartic rational normal curve
//! at two of the parameters [1:0], [0:1], [1:1] intersect in a line. Under
//! the identification of G(1, 4) with cubic forms, that line carries a cubic
//! that factors into three linear forms, one per tangent pair -- membership
//! in the split locus can be read off directly.
//!
//! Run with: cargo run --example split_line

use splitgrass::checks::triple_tangent_plane;
use splitgrass::exactla::{FieldSpec, Mat, Scalar};
use splitgrass::polyalg::splits_ternary_cubic;

fn equation_strings(eqs: &Mat) -> Vec<String> {
    (0..eqs.rows())
        .map(|i| {
            let mut s = String::new();
            for j in 0..eqs.cols() {
                let c = eqs.get(i, j);
                if c.is_zero() {
                    continue;
                }
                if !s.is_empty() {
                    s.push_str(" + ");
                }
                s.push_str(&format!("({c})*z{j}"));
            }
            s.push_str(" = 0");
            s
        })
        .collect()
}

fn main() -> splitgrass::Result<()> {
    let field = FieldSpec::Rational;
    let one = Scalar::one(field);
    let zero = Scalar::zero(field);
    let y = [
        [one.clone(), zero.clone()],
        [zero.clone(), one.clone()],
        [one.clone(), one.clone()],
    ];

    let t = triple_tangent_plane(&[], &y, field)?;
    println!("tangent hyperplanes (pair order (0,1), (0,2), (1,2)):");
    for (k, span) in t.tangent_spans.iter().enumerate() {
        for eq in equation_strings(span.equations()) {
            println!("  H{k}: {eq}");
        }
    }

    println!();
    println!("their intersection line:");
    for eq in equation_strings(t.plane.equations()) {
        println!("  {eq}");
    }
    println!("Pluecker coordinates: {}", t.pluecker.to_labeled_string()?);
    println!("decomposable: {}", t.pluecker.is_decomposable());

    println!();
    println!("attached cubic: {}", t.cubic);
    println!("splits into linear forms: {}", splits_ternary_cubic(&t.cubic)?);
    let mut product = t.factors[0].multiply(&t.factors[1]);
    product = product.multiply(&t.factors[2]);
    println!("predicted factors:");
    for f in &t.factors {
        println!("  {f}");
    }
    println!("their product: {product}");
    println!(
        "proportional to the cubic: {}",
        splitgrass::checks::proportional_polys(&product, &t.cubic)
    );
    Ok(())
}
