//! Codimension formula for secants of degree-2 split varieties.
//!
//! For the variety of degree-2 split forms in n+1 variables, the s-th secant
//! variety has codimension binomial(n + 2 - 2s, 2) in its ambient space, and
//! the same codimension shows up for the secants of the Grassmannian of
//! lines G(1, n+1). This example computes both sides of the grid over a
//! prime field and compares against the closed formula.
//!
//! Run with: cargo run --example codim_grid

use splitgrass::exactla::{FieldSpec, DEFAULT_PRIME};
use splitgrass::terracini::{secant_dimension, split2_codim_formula, SecantOptions, VarietySpec};

fn main() -> splitgrass::Result<()> {
    let opts = SecantOptions {
        trials: 3,
        field: FieldSpec::Prime(DEFAULT_PRIME),
        seed: 0,
        bound: 50,
    };

    println!("variety              s   codim   formula   match");
    let mut all_match = true;
    for n in 3..=6usize {
        for s in 1..=(n + 2) / 2 {
            for variety in [
                VarietySpec::Split { n, d: 2 },
                VarietySpec::Grassmann { k: 1, n: n + 1 },
            ] {
                let rep = secant_dimension(variety, s, &opts)?;
                let codim = rep.ambient_proj_dim - rep.computed_proj_dim;
                let formula = split2_codim_formula(n, s);
                all_match &= codim == formula;
                println!(
                    "{:<20} {}   {:>5}   {:>7}   {}",
                    rep.variety.to_string(),
                    s,
                    codim,
                    formula,
                    codim == formula,
                );
            }
        }
    }
    println!();
    println!("formula holds across the grid: {all_match}");
    Ok(())
}
