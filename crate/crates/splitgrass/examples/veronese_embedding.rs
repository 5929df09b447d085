//! The d-uple embedding realized through banded matrices.
//!
//! A degree-d form f in n+1 variables corresponds to a point of the
//! Grassmannian G(d-1, n+d-1): write the coefficient vector of a linear form
//! into a d x (n+d) banded matrix, take its maximal minors, and read them as
//! Pluecker coordinates. Extended linearly, this matches each coordinate
//! p_T with a degree-d monomial, giving an exact two-way translation between
//! forms and Pluecker vectors. This example prints the correspondence for
//! n = 2, d = 3 and round-trips a cube through it.
//!
//! Run with: cargo run --example veronese_embedding

use splitgrass::exactla::{FieldSpec, Scalar};
use splitgrass::grassmann::PlueckerVec;
use splitgrass::polyalg::parse_poly;
use splitgrass::verograss::{banded_matrix, symbolic_minors, veronese_point, Identification};

fn main() -> splitgrass::Result<()> {
    let field = FieldSpec::Rational;
    let (n, d) = (2usize, 3usize);

    // The banded matrix of a concrete linear form l = x0 + 2*x1 - x2.
    let l = parse_poly("x0 + 2*x1 - x2", n + 1)?;
    let coeffs: Vec<Scalar> = (0..=n)
        .map(|i| {
            let mut e = vec![0u32; n + 1];
            e[i] = 1;
            l.coeff(&e)
        })
        .collect();
    let band = banded_matrix(&coeffs, d)?;
    println!("banded matrix of l = {l} (rows are shifted copies of its coefficients):");
    for i in 0..band.rows() {
        let row: Vec<String> = (0..band.cols()).map(|j| band.get(i, j).to_string()).collect();
        println!("  [{}]", row.join(", "));
    }

    // Its maximal minors as polynomials in symbolic coefficients a0, a1, a2.
    let ident = Identification::get(n, d, field)?;
    let minors = symbolic_minors(n, d, field);
    println!();
    println!("maximal minors by column tuple (x_i stands for the i-th coefficient of l):");
    for i in 0..ident.tuples().len() {
        let label: String = ident.tuples().tuple(i).iter().map(|c| c.to_string()).collect();
        println!("  p_{{{label}}} = {}", minors[i]);
    }

    // The cube of l lands on the decomposable locus; both routes agree.
    let cube = l.power(d as u32);
    let pv = ident.pluecker_of(&cube)?;
    let direct = veronese_point(&l, d)?;
    println!();
    println!("l^3 = {cube}");
    println!("its Pluecker vector: {}", pv.to_labeled_string()?);
    println!("decomposable: {}", pv.is_decomposable());
    println!("matches the minors of the banded matrix: {}", pv.proj_equal(&direct)?);
    let back = ident.polynomial_of(&pv)?;
    println!("translated back: {back}");
    println!("round trip exact: {}", back == cube);

    // A vector violating a shuffle relation stays off the Grassmannian.
    let stray = PlueckerVec::from_ints(n + d, d, field, &[1, 0, 0, 0, 0, 1, 0, 0, 0, 0])?;
    println!();
    println!("by contrast {stray} is decomposable: {}", stray.is_decomposable());
    Ok(())
}
