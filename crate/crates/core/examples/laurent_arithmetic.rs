//! Exact Laurent arithmetic, grading and monomial substitution.
use kuroda::{Field, LaurentPoly, Result};

fn main() -> Result<()> {
    let q = Field::Rational;
    let f = LaurentPoly::from_text("1/2 * X1^-1 X2^2 + 3 * X1^1 X2^0", 2, q)?;
    let g = LaurentPoly::from_text("1 * X1^1 X2^-1 + -1 * X1^0 X2^0", 2, q)?;
    println!("f       = {f}");
    println!("g       = {g}");
    println!("f * g   = {}", &f * &g);
    println!("g^3     = {}", g.pow(3));
    println!("df/dX1  = {}", f.partial_derivative(0));
    println!("f is a polynomial: {}", f.is_polynomial());

    for (d, part) in (&f * &g).grade_by(&[1, 1])? {
        println!("degree {d}: {part}");
    }

    // Y1 -> X1^-1 X2, Y2 -> X1 X2
    let images = [
        LaurentPoly::from_text("1 * X1^-1 X2^1", 2, q)?,
        LaurentPoly::from_text("1 * X1^1 X2^1", 2, q)?,
    ];
    let h = LaurentPoly::from_text("1 * X1^2 X2^0 + -1 * X1^1 X2^1", 2, q)?;
    println!("h(Y)    = {}", h.to_text_with_prefix("Y"));
    println!("h(X)    = {}", h.substitute(&images)?);

    let f5 = LaurentPoly::from_text("3 * X1^1 X2^0 + 4 * X1^0 X2^1", 2, Field::Prime(5))?;
    println!("over F5: ({f5})^5 = {}", f5.pow(5));
    Ok(())
}
