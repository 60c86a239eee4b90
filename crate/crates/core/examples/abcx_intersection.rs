//! `K[ab, bc, ca, x] ∩ K[x − a², x − b², x − c²]` with weights `(1, 1, 1, 2)`:
//! trivial in positive degrees over `Q`, but not over `F2`.
use kuroda::intersect::{graded_intersection, in_span};
use kuroda::{Field, LaurentPoly, Result};

fn gens(list: &[&str], field: Field) -> Result<Vec<LaurentPoly>> {
    list.iter()
        .map(|s| LaurentPoly::from_text(s, 4, field))
        .collect()
}

fn main() -> Result<()> {
    let a = [
        "1 * X1^1 X2^1 X3^0 X4^0",
        "1 * X1^0 X2^1 X3^1 X4^0",
        "1 * X1^1 X2^0 X3^1 X4^0",
        "1 * X1^0 X2^0 X3^0 X4^1",
    ];
    let b = [
        "1 * X1^0 X2^0 X3^0 X4^1 + -1 * X1^2 X2^0 X3^0 X4^0",
        "1 * X1^0 X2^0 X3^0 X4^1 + -1 * X1^0 X2^2 X3^0 X4^0",
        "1 * X1^0 X2^0 X3^0 X4^1 + -1 * X1^0 X2^0 X3^2 X4^0",
    ];
    // (bc)² − (ac)² − (ab)² + x²
    let witness = "1 * X1^0 X2^2 X3^2 X4^0 + -1 * X1^2 X2^0 X3^2 X4^0 + -1 * X1^2 X2^2 X3^0 X4^0 + 1 * X1^0 X2^0 X3^0 X4^2";
    for field in [Field::Rational, Field::Prime(3), Field::Prime(2)] {
        let r = graded_intersection(&gens(&a, field)?, &gens(&b, field)?, &[1, 1, 1, 2], 8)?;
        let dims: Vec<usize> = r.slices.iter().map(|s| s.dim()).collect();
        println!("over {field}: intersection dims by degree {dims:?}");
        let four = r.slice(4).expect("degree 4 computed");
        let w = LaurentPoly::from_text(witness, 4, field)?;
        println!(
            "  (bc)^2-(ac)^2-(ab)^2+x^2 in degree 4 slice: {}",
            in_span(&four.basis, &w)
        );
    }
    Ok(())
}
