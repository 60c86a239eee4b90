//! Hilbert basis of `{β : βU ≥ 0}` and the generators of `K(M) ∩ K[X]`.
use kuroda::lattice::IntMatrix;
use kuroda::monoid::{
    extreme_rays, hilbert_basis, intersection_generators, monomial_membership, SubalgebraGens,
};
use kuroda::{ExponentVector, Result};

fn main() -> Result<()> {
    let u = IntMatrix::from_rows(&[[1, 1], [1, -1]])?;
    println!("extreme rays: {:?}", extreme_rays(&u)?);
    println!("Hilbert basis: {:?}", hilbert_basis(&u)?.elements);

    // K(X1 X2, X1 X2^-1) ∩ K[X1, X2]
    let gens = SubalgebraGens::from_rows(2, &[[1, 1], [1, -1]])?;
    println!("generators: {:?}", intersection_generators(&gens)?);

    let u = IntMatrix::from_rows(&[[2, -1, 0], [-1, 2, -1], [0, -1, 2]])?;
    println!(
        "Hilbert basis of a 3x3 cone: {:?}",
        hilbert_basis(&u)?.elements
    );

    // X1^2 X2^2 X3^2 in K[X1 X2, X2 X3, X3 X1]
    let ab = SubalgebraGens::from_rows(3, &[[1, 1, 0], [0, 1, 1], [1, 0, 1]])?;
    for target in [[2, 2, 2], [1, 1, 1], [3, 1, 2]] {
        let m = monomial_membership(&ab, &ExponentVector::from(target.to_vec()))?;
        println!("{target:?}: {m:?}");
    }
    Ok(())
}
