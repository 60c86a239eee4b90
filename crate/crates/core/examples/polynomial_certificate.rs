//! Chooses the exponents `p_i` for an instance satisfying (*) and checks that
//! `f0 = (Y3−Y2)^p1 (Y3−Y1)^p2 (Y2−Y1)^p3` is a polynomial in `X`.
use kuroda::kuroda::{build_f0, build_g, check_star, lemma31_find_p, KurodaInstance};
use kuroda::{Field, Result};

fn main() -> Result<()> {
    let inst = KurodaInstance::new(
        4,
        &[1],
        &[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]],
        Field::Rational,
    )?;
    println!("(*) value: {}", check_star(&inst)?.value);
    let e = lemma31_find_p(&inst.xi()?)?;
    let [p1, p2, p3] = e.parts;
    println!("p = {} split as ({p1}, {p2}, {p3})", e.p);

    let f0 = build_f0(&inst, p1, p2, p3)?;
    println!(
        "f0 has {} terms, polynomial in X: {}",
        f0.in_x.len(),
        f0.is_polynomial()
    );

    let lowered = build_f0(&inst, p1 - 1, p2, p3 + 1)?;
    println!(
        "with p1 lowered by one, polynomial in X: {}",
        lowered.is_polynomial()
    );

    let g = build_g(&inst, p1, p2, p3, 1)?;
    println!(
        "G (e = 1): X2, X3 exponents nonnegative: {}",
        g.x2_x3_nonnegative()
    );
    Ok(())
}
