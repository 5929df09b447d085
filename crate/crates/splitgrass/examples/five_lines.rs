//! Lines on the Grassmannian whose cubics do not split.
//!
//! Intersecting osculating hyperplanes of the quartic rational normal curve
//! in P^4 produces lines whose Pluecker images are decomposable -- they are
//! honest lines in the plane family -- yet whose attached cubics have no
//! linear factorization. This exhibits secant planes of the split locus that
//! are not themselves split. One family depends on a parameter lambda; any
//! value outside {-1, 0, 1} works.
//!
//! Run with: cargo run --example five_lines

use splitgrass::checks::check_five_lines;
use splitgrass::exactla::FieldSpec;
use splitgrass::grassmann::{pluecker_of, Subspace};
use splitgrass::polyalg::splits_ternary_cubic;
use splitgrass::verograss::Identification;

fn main() -> splitgrass::Result<()> {
    let field = FieldSpec::Rational;
    let ident = Identification::get(2, 3, field)?;

    // One member of the lambda family, built directly from its equations.
    let lambda = 2i64;
    let line = Subspace::from_int_equations(
        field,
        &[
            vec![0, 1, 0, 0, 0],
            vec![0, 0, 0, 1, 0],
            vec![lambda, -3 * lambda - 1, 3 * lambda + 3, -lambda - 3, 1],
        ],
    )?;
    let pv = pluecker_of(&line);
    let cubic = ident.polynomial_of(&pv)?;
    println!("line with lambda = {lambda}:");
    println!("  Pluecker vector: {}", pv.to_labeled_string()?);
    println!("  decomposable: {}", pv.is_decomposable());
    println!("  attached cubic: {cubic}");
    println!("  splits into linear forms: {}", splits_ternary_cubic(&cubic)?);

    // The full battery: four fixed lines plus one lambda case per value,
    // each checked against recorded equations, Pluecker vectors, and cubics.
    println!();
    for lambda in [2i64, 3, 5, 7] {
        let res = check_five_lines(&[lambda])?;
        println!("all five lines verified with lambda = {lambda}: {}", res.verdict());
        for w in &res.witnesses {
            println!("  {w}");
        }
    }

    // Degenerate parameters are rejected: at lambda = -1 the residual conic
    // of the family's cubic drops rank and the cubic splits after all.
    println!();
    match check_five_lines(&[-1]) {
        Err(e) => println!("lambda = -1 rejected: {e}"),
        Ok(_) => println!("lambda = -1 unexpectedly accepted"),
    }
    Ok(())
}
