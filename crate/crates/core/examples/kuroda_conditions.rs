//! The conditions (*) and (**), det T, and the exhaustive implication scan.
use kuroda::kuroda::{check_star, check_starstar, implication_scan, KurodaInstance};
use kuroda::{Field, Result};

fn main() -> Result<()> {
    let q = Field::Rational;
    let three = KurodaInstance::new(3, &[1], &[vec![3, 1], vec![1, 1]], q)?;
    let c = check_starstar(&three)?;
    println!(
        "n=3 delta=[[3,1],[1,1]]: (**) value {} holds {} det T {}",
        c.value,
        c.holds,
        three.det_t()
    );

    let four = KurodaInstance::new(4, &[1], &[vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]], q)?;
    let c = check_star(&four)?;
    println!(
        "n=4 diag 1/off 3: (*) value {} holds {} det T {}",
        c.value,
        c.holds,
        four.det_t()
    );
    println!(
        "xi = {:?}",
        four.xi()?.iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );

    for (n, bound) in [(3, 4), (4, 2)] {
        let r = implication_scan(n, bound)?;
        println!(
            "scan n={n} entries in [1,{bound}]: {} instances, {} violations, {} with det T != 0 but the condition failing",
            r.instances,
            r.violations.len(),
            r.converse.len()
        );
    }
    Ok(())
}
