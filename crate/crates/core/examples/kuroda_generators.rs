//! `K[π] ∩ K[X]` for two instances, degree by degree, with the degrees at
//! which new generators appear.
use kuroda::intersect::{kuroda_intersection_basis, minimal_generator_degrees};
use kuroda::kuroda::KurodaInstance;
use kuroda::{Field, Result};

fn main() -> Result<()> {
    let q = Field::Rational;
    let instances = [
        ("delta = 1", vec![vec![1, 1, 1]; 3]),
        (
            "diag 1 / off 3",
            vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]],
        ),
    ];
    for (name, delta) in instances {
        let inst = KurodaInstance::new(4, &[1], &delta, q)?;
        let r = kuroda_intersection_basis(&inst, 8)?;
        let dims: Vec<usize> = r.slices.iter().map(|s| s.dim()).collect();
        println!("{name}: dims by degree {dims:?}");
        println!(
            "  new generators (degree, count): {:?}",
            minimal_generator_degrees(&r)
        );
        let lowest = r.nonconstant_elements().next().cloned();
        if let Some(f) = lowest {
            println!("  lowest element: {f}");
        }
    }
    Ok(())
}
