//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test --test acceptance`.

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kuroda::derivation::{apply_e, kernel_check, kernel_degree_basis, support_property_check};
use kuroda::intersect::{
    freeness_coset_check, graded_intersection, in_span, kuroda_intersection_basis,
    minimal_generator_degrees, no_monomial_units_check,
};
use kuroda::kuroda::{
    build_f0, check_star, check_starstar, implication_scan, lemma31_find_p, unit_row_witness,
    verify_t214, verify_t214_with, xi_values, KurodaInstance,
};
use kuroda::lattice::IntMatrix;
use kuroda::monoid::{
    hilbert_basis, intersection_generators, monomial_membership, triangle_criterion, Membership,
    SubalgebraGens,
};
use kuroda::{ExponentVector, Field, LaurentPoly};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome, u64);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn q() -> Field {
    Field::Rational
}

fn ratio(a: i64, b: i64) -> BigRational {
    BigRational::new(a.into(), b.into())
}

fn ones_instance() -> KurodaInstance {
    KurodaInstance::new(4, &[1], &vec![vec![1; 3]; 3], q()).unwrap()
}

fn off_diagonal_three() -> KurodaInstance {
    let d = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
    KurodaInstance::new(4, &[1], &d, q()).unwrap()
}

fn counterexample_reproduction() -> Outcome {
    let inst =
        KurodaInstance::new(3, &[1], &[vec![3, 1], vec![1, 1]], q()).map_err(|e| e.to_string())?;
    let c = check_starstar(&inst).map_err(|e| e.to_string())?;
    ensure(c.value == ratio(5, 4), || {
        format!("(**) value {} != 5/4", c.value)
    })?;
    ensure(!c.holds, || "(**) reported as holding".into())?;
    ensure(inst.det_t() == BigInt::from(2), || {
        format!("det T = {}", inst.det_t())
    })
}

fn implication_scans() -> Outcome {
    for (n, bound, count) in [(3, 4, 256), (4, 2, 512)] {
        let r = implication_scan(n, bound).map_err(|e| e.to_string())?;
        ensure(r.instances == count, || {
            format!("n={n}: {} instances, expected {count}", r.instances)
        })?;
        ensure(r.violations.is_empty(), || {
            format!("n={n}: violations {:?}", r.violations)
        })?;
    }
    Ok(())
}

fn substitute_monomial(e: &[i64], images: &[LaurentPoly]) -> LaurentPoly {
    let n = images[0].nvars();
    images
        .iter()
        .zip(e)
        .fold(LaurentPoly::one(n, q()), |acc, (m, &k)| {
            let (exp, _) = m.as_monomial().expect("monomial image");
            &acc * &LaurentPoly::monomial(exp.scale(k), q().one())
        })
}

fn unit_row_witnesses() -> Outcome {
    let inst = off_diagonal_three();
    // M_j = X_j^{-δjj} Π_{k≠j} X_k^{δjk}, the rows of T
    let t: Vec<Vec<i64>> = vec![vec![-1, 3, 3], vec![3, -1, 3], vec![3, 3, -1]];
    let images: Vec<LaurentPoly> = t
        .iter()
        .map(|r| LaurentPoly::monomial(ExponentVector::from(r.clone()), q().one()))
        .collect();
    for i in 0..3 {
        let w = unit_row_witness(&inst, i).map_err(|e| e.to_string())?;
        ensure(w.verified, || {
            format!("row {i} not verified by the library")
        })?;
        let s: Vec<i64> = w
            .solution
            .row
            .iter()
            .map(|x| x.try_into().unwrap())
            .collect();
        let m: i64 = (&w.solution.multiplier).try_into().unwrap();
        let lhs = substitute_monomial(&s, &images);
        let mut e = vec![0; 3];
        e[i] = m;
        let rhs = LaurentPoly::monomial(ExponentVector::from(e), q().one());
        ensure(m > 0 && lhs == rhs, || {
            format!("row {i}: M^s = {lhs}, X^m = {rhs}")
        })?;
    }
    Ok(())
}

fn in_cone(beta: &[i64], u: &[Vec<i64>]) -> bool {
    let n = u.first().map_or(0, Vec::len);
    (0..n).all(|j| beta.iter().zip(u).map(|(b, r)| b * r[j]).sum::<i64>() >= 0)
}

fn box_points(t: usize, r: i64) -> Vec<Vec<i64>> {
    let mut pts = vec![vec![]];
    for _ in 0..t {
        pts = pts
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-r..=r).map(move |x| {
                    let mut p = p.clone();
                    p.push(x);
                    p
                })
            })
            .collect();
    }
    pts
}

fn sub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn representable(
    beta: &[i64],
    basis: &[Vec<i64>],
    u: &[Vec<i64>],
    memo: &mut HashMap<Vec<i64>, bool>,
) -> bool {
    if beta.iter().all(|&x| x == 0) {
        return true;
    }
    if let Some(&v) = memo.get(beta) {
        return v;
    }
    let v = basis.iter().any(|h| {
        let rest = sub(beta, h);
        in_cone(&rest, u) && representable(&rest, basis, u, memo)
    });
    memo.insert(beta.to_vec(), v);
    v
}

/// Generation of every `β ∈ S` with `‖β‖∞ ≤ r`, pairwise irreducibility, and
/// agreement with box-restricted brute-force irreducibles.
fn hilbert_matches_enumeration(u: &[Vec<i64>], r: i64) -> Result<bool, String> {
    let hb = hilbert_basis(&IntMatrix::from_rows(u).unwrap()).map_err(|e| e.to_string())?;
    let h = &hb.elements;
    for a in h {
        if !in_cone(a, u) || a.iter().all(|&x| x == 0) {
            return Ok(false);
        }
        if h.iter().any(|b| b != a && in_cone(&sub(a, b), u)) {
            return Ok(false);
        }
    }
    let s: BTreeSet<Vec<i64>> = box_points(u.len(), r)
        .into_iter()
        .filter(|p| p.iter().any(|&x| x != 0) && in_cone(p, u))
        .collect();
    let mut memo = HashMap::new();
    if !s.iter().all(|b| representable(b, h, u, &mut memo)) {
        return Ok(false);
    }
    let brute: BTreeSet<&Vec<i64>> = s
        .iter()
        .filter(|x| !s.iter().any(|y| s.contains(&sub(x, y))))
        .collect();
    let in_box = |v: &&Vec<i64>| v.iter().all(|x| x.abs() <= r);
    Ok(h.iter().filter(|v| in_box(v)).all(|v| brute.contains(v)))
}

fn hilbert_pipeline() -> Outcome {
    let gens = SubalgebraGens::from_rows(2, &[[1, 1], [1, -1]]).unwrap();
    let got: BTreeSet<Vec<i64>> = intersection_generators(&gens)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|e| e.0)
        .collect();
    let want: BTreeSet<Vec<i64>> = [vec![1, 1], vec![2, 0], vec![0, 2]].into_iter().collect();
    ensure(got == want, || format!("worked example gave {got:?}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut tested = 0;
    while tested < 50 {
        let t = rng.gen_range(1..=3);
        let n = rng.gen_range(t..=3);
        let u: Vec<Vec<i64>> = (0..t)
            .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
            .collect();
        if IntMatrix::from_rows(&u).unwrap().rank() < t {
            continue;
        }
        tested += 1;
        ensure(hilbert_matches_enumeration(&u, 6)?, || {
            format!("disagreement on U = {u:?}")
        })?;
    }
    Ok(())
}

fn abcx_generators(field: Field) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    let mono = |e: [i64; 4]| LaurentPoly::monomial(ExponentVector::from(e.to_vec()), field.one());
    let a = vec![
        mono([1, 1, 0, 0]),
        mono([0, 1, 1, 0]),
        mono([1, 0, 1, 0]),
        mono([0, 0, 0, 1]),
    ];
    let b = (0..3)
        .map(|i| {
            let mut sq = [0; 4];
            sq[i] = 2;
            &mono([0, 0, 0, 1]) - &mono(sq)
        })
        .collect();
    (a, b)
}

fn abcx_intersection() -> Outcome {
    let w = [1, 1, 1, 2];
    for (field, dmax) in [(q(), 16), (Field::Prime(5), 12), (Field::Prime(7), 12)] {
        let (a, b) = abcx_generators(field);
        let r = graded_intersection(&a, &b, &w, dmax).map_err(|e| e.to_string())?;
        for s in r.slices.iter().filter(|s| s.degree >= 1) {
            ensure(s.dim() == 0, || {
                format!("{field}: degree {} has dimension {}", s.degree, s.dim())
            })?;
        }
    }
    let f2 = Field::Prime(2);
    let (a, b) = abcx_generators(f2);
    let r = graded_intersection(&a, &b, &w, 4).map_err(|e| e.to_string())?;
    let four = r.slice(4).unwrap();
    ensure(four.dim() >= 1, || "F2: degree 4 is zero".into())?;
    let elem = LaurentPoly::from_int_terms(
        4,
        f2,
        &[
            (1, &[0, 2, 2, 0]),
            (-1, &[2, 0, 2, 0]),
            (-1, &[2, 2, 0, 0]),
            (1, &[0, 0, 0, 2]),
        ],
    )
    .unwrap();
    ensure(in_span(&four.basis, &elem), || {
        "F2: (bc)²−(ac)²−(ab)²+x² not in span".into()
    })
}

fn triangle_vs_membership() -> Outcome {
    let gens = SubalgebraGens::from_rows(3, &[[1, 1, 0], [0, 1, 1], [1, 0, 1]]).unwrap();
    for i in 0..=24u64 {
        for j in 0..=24 - i {
            for k in 0..=24 - i - j {
                let target = ExponentVector::from(vec![i as i64, j as i64, k as i64]);
                let m = monomial_membership(&gens, &target).map_err(|e| e.to_string())?;
                let member = match m {
                    Membership::Member(_) => true,
                    Membership::NotMember => false,
                    Membership::NotFoundWithin(b) => {
                        return Err(format!("({i},{j},{k}) undecided within {b}"))
                    }
                };
                ensure(member == triangle_criterion(i, j, k), || {
                    format!("({i},{j},{k}): membership {member}")
                })?;
            }
        }
    }
    Ok(())
}

fn polynomial_certificates() -> Outcome {
    let (mut star, mut control_failures) = (0, 0);
    for idx in 0..3u32.pow(9) {
        let mut k = idx;
        let delta: Vec<Vec<i64>> = (0..3)
            .map(|_| {
                (0..3)
                    .map(|_| {
                        let v = (k % 3) as i64 + 1;
                        k /= 3;
                        v
                    })
                    .collect()
            })
            .collect();
        let xi = xi_values(&delta);
        if xi.iter().sum::<BigRational>() >= ratio(1, 1) {
            continue;
        }
        star += 1;
        let inst = KurodaInstance::new(4, &[1], &delta, q()).map_err(|e| e.to_string())?;
        ensure(check_star(&inst).unwrap().holds, || {
            format!("{delta:?}: (*) disagrees")
        })?;
        let e = lemma31_find_p(&xi).map_err(|e| format!("{delta:?}: {e}"))?;
        let [p1, p2, p3] = e.parts;
        for (p, x) in e.parts.iter().zip(&xi) {
            ensure(ratio(*p, 1) >= ratio(e.p, 1) * x, || {
                format!("{delta:?}: p_i below pξ_i")
            })?;
        }
        let f0 = build_f0(&inst, p1, p2, p3).map_err(|e| e.to_string())?;
        ensure(f0.is_polynomial(), || {
            format!("{delta:?}: f0 is not a polynomial")
        })?;
        if !build_f0(&inst, p1 - 1, p2, p3 + 1).unwrap().is_polynomial() {
            control_failures += 1;
        }
    }
    ensure(star > 0, || "no instance satisfies (*)".into())?;
    ensure(control_failures > 0, || {
        "mutation control never fails".into()
    })
}

fn support_property() -> Outcome {
    let mut checked = 0;
    for inst in [ones_instance(), off_diagonal_three()] {
        let r = kuroda_intersection_basis(&inst, 12).map_err(|e| e.to_string())?;
        for f in r.nonconstant_elements() {
            checked += 1;
            ensure(
                support_property_check(f).map_err(|e| e.to_string())?,
                || format!("fails on {f}"),
            )?;
        }
    }
    ensure(checked > 0, || "no nonconstant elements produced".into())
}

fn mutated_pi(inst: &KurodaInstance) -> Vec<LaurentPoly> {
    let d = inst.delta();
    let mut pi = inst.pi().to_vec();
    pi[2] = LaurentPoly::from_int_terms(
        3,
        q(),
        &[
            (3, &[d[1][0] - d[0][0], d[0][1] - d[1][1], 0]),
            (-1, &[-2 * d[0][0], 2 * d[0][1], 0]),
        ],
    )
    .unwrap();
    pi
}

fn integrality_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut first = None;
    for _ in 0..50 {
        let g = rng.gen_range(1..=5);
        let d: Vec<Vec<i64>> = (0..2)
            .map(|_| (0..2).map(|_| rng.gen_range(1..=5)).collect())
            .collect();
        let inst = KurodaInstance::new(3, &[g], &d, q()).map_err(|e| e.to_string())?;
        let c = verify_t214(&inst).map_err(|e| e.to_string())?;
        ensure(c.holds(), || format!("gamma={g} delta={d:?}: {c:?}"))?;
        first.get_or_insert(inst);
    }
    let inst = first.unwrap();
    let c = verify_t214_with(&inst, &mutated_pi(&inst)).map_err(|e| e.to_string())?;
    ensure(!c.holds(), || "mutated π₃ accepted".into())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn random_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let terms: Vec<(i64, Vec<i64>)> = (0..rng.gen_range(1..=4))
        .map(|_| {
            (
                rng.gen_range(-3..=3),
                (0..4).map(|_| rng.gen_range(0..=3)).collect(),
            )
        })
        .collect();
    let refs: Vec<(i64, &[i64])> = terms.iter().map(|(c, e)| (*c, e.as_slice())).collect();
    LaurentPoly::from_int_terms(4, q(), &refs).unwrap()
}

fn derivation_kernel() -> Outcome {
    let k = kernel_degree_basis(8, q()).map_err(|e| e.to_string())?;
    for s in &k.slices {
        let want = binomial(s.degree + 2, 2);
        ensure(s.basis.len() == want, || {
            format!("degree {}: {} != {want}", s.degree, s.basis.len())
        })?;
        ensure(s.matches_generators, || {
            format!("degree {}: kernel differs from K[Y4−Yi]", s.degree)
        })?;
    }
    // dimension in degrees ≤ d is C(d+3, 3)
    let mut cumulative = 0;
    for s in &k.slices {
        cumulative += s.basis.len();
        let want = binomial(s.degree + 3, 3);
        ensure(cumulative == want, || {
            format!("degrees ≤ {}: {cumulative} != {want}", s.degree)
        })?;
    }
    ensure(k.basis().all(kernel_check), || {
        "basis element outside the kernel".into()
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let (f, g) = (random_poly(&mut rng), random_poly(&mut rng));
        let lhs = apply_e(&(&f * &g));
        let rhs = &(&apply_e(&f) * &g) + &(&f * &apply_e(&g));
        ensure(lhs == rhs, || format!("Leibniz fails on {f}, {g}"))?;
    }
    Ok(())
}

fn freeness() -> Outcome {
    for inst in [ones_instance(), off_diagonal_three()] {
        let r = freeness_coset_check(&inst, 5).map_err(|e| e.to_string())?;
        ensure(r.ok, || {
            format!("delta={:?}: {:?}", inst.delta(), r.failures)
        })?;
    }
    Ok(())
}

fn no_monomial_units() -> Outcome {
    for inst in [ones_instance(), off_diagonal_three()] {
        let r = no_monomial_units_check(&inst, 4).map_err(|e| e.to_string())?;
        ensure(r.ok, || {
            format!("delta={:?}: {:?}", inst.delta(), r.offending)
        })?;
    }
    Ok(())
}

fn generator_growth() -> Outcome {
    let off = kuroda_intersection_basis(&off_diagonal_three(), 12).map_err(|e| e.to_string())?;
    let degs = minimal_generator_degrees(&off);
    ensure(degs.iter().any(|&(d, c)| d > 0 && c > 0), || {
        "diag 1/off 3: no new generators".into()
    })?;
    let ones = kuroda_intersection_basis(&ones_instance(), 12).map_err(|e| e.to_string())?;
    let degs = minimal_generator_degrees(&ones);
    ensure(degs.iter().all(|&(d, c)| d == 0 || c == 0), || {
        format!("delta=1: {degs:?}")
    })
}

fn main() -> ExitCode {
    let criteria: [Criterion; 13] = [
        (
            "counterexample: (**) = 5/4 fails, det T = 2",
            counterexample_reproduction,
            5,
        ),
        (
            "implication scan n=3 [1,4], n=4 [1,2]: no violations",
            implication_scans,
            10,
        ),
        (
            "unit rows solved and verified by substitution",
            unit_row_witnesses,
            5,
        ),
        (
            "Hilbert basis vs enumeration on 50 random U and worked example",
            hilbert_pipeline,
            60,
        ),
        (
            "abcx intersection zero over Q, F5, F7; F2 element at degree 4",
            abcx_intersection,
            300,
        ),
        (
            "triangle criterion equals membership for i+j+k <= 24",
            triangle_vs_membership,
            10,
        ),
        (
            "f0 certificates polynomial on the [1,3] box, control fails",
            polynomial_certificates,
            60,
        ),
        (
            "support property on intersection bases",
            support_property,
            120,
        ),
        (
            "integrality identities on 50 instances, mutation rejected",
            integrality_identities,
            5,
        ),
        (
            "kernel of E: C(d+3,3) through d=8, Leibniz",
            derivation_kernel,
            30,
        ),
        (
            "coset freeness for both standard instances, box 5",
            freeness,
            10,
        ),
        (
            "no monomial units at D=4 for both standard instances",
            no_monomial_units,
            60,
        ),
        (
            "new generators for diag 1/off 3, none for delta=1, D=12",
            generator_growth,
            600,
        ),
    ];
    let mut failed = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let over = elapsed > Duration::from_secs(*budget);
        let verdict = match (&result, over) {
            (Ok(()), false) => "PASS".to_string(),
            (Ok(()), true) => format!("FAIL (over {budget}s budget)"),
            (Err(e), _) => format!("FAIL ({e})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!(
            "{verdict} {:>2}. {name} [{:.2}s]",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
