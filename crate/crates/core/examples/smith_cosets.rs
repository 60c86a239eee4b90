//! Smith normal form of an exponent matrix and coset representatives of the
//! subgroup its rows generate.
use kuroda::lattice::{coset_decomposition, det, smith_normal_form, solve_unit_row, IntMatrix};
use kuroda::{ExponentVector, Result};

fn main() -> Result<()> {
    let t = IntMatrix::from_rows(&[[-1, 3, 3], [3, -1, 3], [3, 3, -1]])?;
    let s = smith_normal_form(&t);
    println!("det T = {}", det(&t)?);
    println!(
        "invariant factors: {:?}",
        s.invariants
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
    );

    for i in 0..3 {
        let u = solve_unit_row(&t, i)?;
        let row: Vec<String> = u.row.iter().map(|x| x.to_string()).collect();
        println!(
            "s = ({}) gives s.T = {} e{}",
            row.join(", "),
            u.multiplier,
            i + 1
        );
    }

    let gens: Vec<ExponentVector> = (0..3)
        .map(|i| ExponentVector::from(vec![[-1, 3, 3], [3, -1, 3], [3, 3, -1]][i].to_vec()))
        .collect();
    let cosets = coset_decomposition(&gens, 3)?;
    println!(
        "index [Z^3 : H] = {:?}",
        cosets.index().map(|x| x.to_string())
    );
    for v in [[1, 0, 0], [5, 2, 2], [-1, 3, 3]] {
        let rep: Vec<String> = cosets
            .representative(&v)
            .iter()
            .map(|x| x.to_string())
            .collect();
        println!(
            "{v:?}: in H = {}, representative = ({})",
            cosets.contains(&v),
            rep.join(", ")
        );
    }
    Ok(())
}
