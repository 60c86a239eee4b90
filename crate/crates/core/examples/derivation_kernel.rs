//! Kernel of `E = Σ ∂/∂Y_i` on `K[Y1..Y4]`, degree by degree.
use kuroda::derivation::{apply_e, kernel_degree_basis};
use kuroda::{Field, LaurentPoly, Result};

fn main() -> Result<()> {
    let q = Field::Rational;
    let f = LaurentPoly::from_text("1 * X1^2 X2^0 X3^0 X4^1 + -2 * X1^0 X2^1 X3^0 X4^0", 4, q)?;
    println!(
        "E({}) = {}",
        f.to_text_with_prefix("Y"),
        apply_e(&f).to_text_with_prefix("Y")
    );

    let k = kernel_degree_basis(6, q)?;
    for s in &k.slices {
        println!(
            "degree {}: kernel dim {}, span of (Y4−Y_i) products {}, equal {}",
            s.degree,
            s.basis.len(),
            s.generated_dim,
            s.matches_generators
        );
    }
    Ok(())
}
