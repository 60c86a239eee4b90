//! Named checks run by `kuroda verify <id>`.

use std::collections::HashMap;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{intersection_table, monomial_name, Context, Outcome, Report};
use crate::derivation::{kernel_degree_basis, support_property_check};
use crate::error::{Error, Result};
use crate::intersect::{
    freeness_coset_check, graded_intersection, kuroda_intersection_basis, no_monomial_units_check,
};
use crate::kuroda::{
    build_f0, build_g, check_star, lemma31_find_p, verify_t214, verify_t214_with, xi_values,
    KurodaInstance,
};
use crate::lattice::IntMatrix;
use crate::laurent::{ExponentVector, Field, LaurentPoly};
use crate::monoid::{cone_membership, hilbert_basis, intersection_generators, SubalgebraGens};

pub const VERIFY_IDS: &[&str] = &[
    "t2.5i", "t2.5ii", "p2.6", "t2.8", "l2.13", "t2.14", "l2.15", "r2.16", "l3.1", "l3.2",
];

pub(super) fn run(ctx: &Context, id: &str) -> Result<Report> {
    match id {
        "t2.5i" => unit_rows(ctx),
        "t2.5ii" => freeness(ctx),
        "p2.6" => units(ctx),
        "t2.8" => monoid_pipeline(ctx),
        "l2.13" | "t2.14" => identities(ctx, id),
        "l2.15" => abcx_intersection(ctx),
        "r2.16" => abcx_char_two(ctx),
        "l3.1" => certificates(ctx),
        "l3.2" => support_and_kernel(ctx),
        "all" => all(ctx),
        _ => Err(Error::Usage(format!(
            "unknown id {id:?}; valid ids: {}, all",
            VERIFY_IDS.join(", ")
        ))),
    }
}

fn all(ctx: &Context) -> Result<Report> {
    let mut r = ctx.report("verify all", Outcome::Pass);
    for id in VERIFY_IDS.iter().filter(|&&id| id != "l2.13") {
        let sub = run(ctx, id)?;
        let verdict = match sub.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Reported => "REPORTED",
        };
        if sub.outcome == Outcome::Fail {
            r.outcome = Outcome::Fail;
        }
        r.lines.push(format!("{id}\t{verdict}"));
    }
    Ok(r)
}

pub(crate) fn ones_instance(field: Field) -> KurodaInstance {
    KurodaInstance::new(4, &[1], &vec![vec![1; 3]; 3], field).expect("valid")
}

pub(crate) fn off_diagonal_three(field: Field) -> KurodaInstance {
    let d = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
    KurodaInstance::new(4, &[1], &d, field).expect("valid")
}

/// The config instance if there is one, otherwise the given defaults.
fn instances(ctx: &Context, both: bool) -> Result<Vec<(String, KurodaInstance)>> {
    let field = ctx.field()?;
    if ctx.config.has_instance() {
        return Ok(vec![("config".into(), ctx.config.instance(field)?)]);
    }
    let mut v = Vec::new();
    if both {
        v.push(("delta=1".into(), ones_instance(field)));
    }
    v.push(("delta=diag1/off3".into(), off_diagonal_three(field)));
    Ok(v)
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

fn unit_rows(ctx: &Context) -> Result<Report> {
    let mut r = ctx.report("verify t2.5i", Outcome::Pass);
    let mut ok = true;
    for (name, inst) in instances(ctx, false)? {
        for i in 0..inst.n() - 1 {
            let w = crate::kuroda::unit_row_witness(&inst, i)?;
            let s: Vec<String> = w.solution.row.iter().map(|x| x.to_string()).collect();
            r.lines.push(format!(
                "{name}\ti={}\tm={}\ts=({})\tverified={}",
                i + 1,
                w.solution.multiplier,
                s.join(","),
                w.verified
            ));
            ok &= w.verified;
        }
    }
    r.outcome = verdict(ok);
    Ok(r)
}

fn freeness(ctx: &Context) -> Result<Report> {
    let bound = ctx.bound_or(5)?;
    let mut r = ctx.report("verify t2.5ii", Outcome::Pass);
    r.header
        .push(("bounds".into(), format!("box=[-{bound},{bound}]^n")));
    let mut ok = true;
    for (name, inst) in instances(ctx, true)? {
        let f = freeness_coset_check(&inst, bound)?;
        let index = f.index.map_or("infinite".to_string(), |i| i.to_string());
        r.lines.push(format!(
            "{name}\tchecked={}\tcosets={}\tindex={index}\tok={}",
            f.checked, f.cosets, f.ok
        ));
        for fail in f.failures.iter().take(10) {
            r.lines.push(format!("  {fail}"));
        }
        ok &= f.ok;
    }
    r.outcome = verdict(ok);
    Ok(r)
}

fn units(ctx: &Context) -> Result<Report> {
    let d = ctx.dmax_or(4)?;
    let mut r = ctx.report("verify p2.6", Outcome::Pass);
    r.header.push(("bounds".into(), format!("dmax={d}")));
    let mut ok = true;
    for (name, inst) in instances(ctx, true)? {
        let u = no_monomial_units_check(&inst, d)?;
        let found: Vec<String> = u.offending.iter().map(monomial_name).collect();
        r.lines.push(format!(
            "{name}\tmonomials_in_K[pi]={:?}\tok={}",
            found, u.ok
        ));
        ok &= u.ok;
    }
    r.outcome = verdict(ok);
    Ok(r)
}

/// Every `β` in `S` is a nonnegative combination of the basis.
fn representable(
    beta: &[i64],
    basis: &[Vec<i64>],
    u: &IntMatrix,
    memo: &mut HashMap<Vec<i64>, bool>,
) -> bool {
    if beta.iter().all(|&x| x == 0) {
        return true;
    }
    if let Some(&v) = memo.get(beta) {
        return v;
    }
    let ok = basis.iter().any(|h| {
        let rest: Vec<i64> = beta.iter().zip(h).map(|(a, b)| a - b).collect();
        cone_membership(u, &rest).unwrap_or(false) && representable(&rest, basis, u, memo)
    });
    memo.insert(beta.to_vec(), ok);
    ok
}

fn box_points(t: usize, radius: i64) -> Vec<Vec<i64>> {
    let mut pts = vec![Vec::new()];
    for _ in 0..t {
        pts = pts
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (-radius..=radius).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    pts
}

/// Generation and minimality of a Hilbert basis against enumeration of
/// `‖β‖∞ ≤ radius`.
pub(crate) fn hilbert_agrees_with_enumeration(u: &IntMatrix, radius: i64) -> Result<bool> {
    let hb = hilbert_basis(u)?;
    let t = u.nrows();
    let mut memo = HashMap::new();
    for h in &hb.elements {
        if !cone_membership(u, h)? || h.iter().all(|&x| x == 0) {
            return Ok(false);
        }
        // h is irreducible: no other element h' leaves h − h' in S
        for g in &hb.elements {
            if g == h {
                continue;
            }
            let d: Vec<i64> = h.iter().zip(g).map(|(a, b)| a - b).collect();
            if cone_membership(u, &d)? {
                return Ok(false);
            }
        }
    }
    for beta in box_points(t, radius) {
        if cone_membership(u, &beta)? && !representable(&beta, &hb.elements, u, &mut memo) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn monoid_pipeline(ctx: &Context) -> Result<Report> {
    let mut r = ctx.report("verify t2.8", Outcome::Pass);
    r.header.push(("seed".into(), ctx.seed.to_string()));
    let mut ok = true;
    let worked = ctx
        .config
        .u
        .clone()
        .unwrap_or_else(|| vec![vec![1, 1], vec![1, -1]]);
    let nvars = worked.first().map_or(0, Vec::len);
    let gens = SubalgebraGens::from_rows(nvars, &worked)?;
    let exps = intersection_generators(&gens)?;
    let names: Vec<String> = exps.iter().map(monomial_name).collect();
    r.lines
        .push(format!("U={worked:?}\tgenerators={}", names.join(", ")));
    if ctx.config.u.is_none() {
        let want = ["X2^2", "X1 X2", "X1^2"];
        ok &= names == want;
    }
    ok &= hilbert_agrees_with_enumeration(&IntMatrix::from_rows(&worked)?, 6)?;

    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    let (mut tested, mut agreed, mut skipped) = (0, 0, 0);
    while tested < 50 {
        let t = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=3);
        let rows: Vec<Vec<i64>> = (0..t)
            .map(|_| (0..n).map(|_| rng.gen_range(-2..=2)).collect())
            .collect();
        let u = IntMatrix::from_rows(&rows)?;
        if u.rank() < t {
            skipped += 1;
            continue;
        }
        tested += 1;
        if hilbert_agrees_with_enumeration(&u, 6)? {
            agreed += 1;
        } else {
            r.lines.push(format!("disagreement\tU={rows:?}"));
        }
    }
    r.lines.push(format!(
        "random U: tested={tested}\tagreed={agreed}\tskipped_not_pointed={skipped}"
    ));
    ok &= agreed == tested;
    r.outcome = verdict(ok);
    Ok(r)
}

/// Random three-variable instance with `γ, δ_ij ∈ [1, max]`.
pub(crate) fn random_three_variable(
    rng: &mut ChaCha8Rng,
    max: i64,
    field: Field,
) -> KurodaInstance {
    let gamma = rng.gen_range(1..=max);
    let delta: Vec<Vec<i64>> = (0..2)
        .map(|_| (0..2).map(|_| rng.gen_range(1..=max)).collect())
        .collect();
    KurodaInstance::new(3, &[gamma], &delta, field).expect("valid")
}

/// `π₃` with its leading coefficient 2 replaced by 3.
pub(crate) fn mutated_pi(inst: &KurodaInstance) -> Vec<LaurentPoly> {
    let d = inst.delta();
    let mut pi = inst.pi().to_vec();
    pi[2] = LaurentPoly::from_int_terms(
        3,
        inst.field(),
        &[
            (3, &[d[1][0] - d[0][0], d[0][1] - d[1][1], 0]),
            (-1, &[-2 * d[0][0], 2 * d[0][1], 0]),
        ],
    )
    .expect("valid");
    pi
}

fn identities(ctx: &Context, id: &str) -> Result<Report> {
    let field = ctx.field()?;
    let mut r = ctx.report(&format!("verify {id}"), Outcome::Pass);
    r.header.push(("field".into(), field.to_string()));
    r.header.push(("seed".into(), ctx.seed.to_string()));
    let mut ok = true;
    let mut insts = Vec::new();
    if ctx.config.has_instance() {
        insts.push(ctx.config.instance(field)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    insts.extend((0..50).map(|_| random_three_variable(&mut rng, 5, field)));
    let mut held = 0;
    for inst in &insts {
        let c = verify_t214(inst)?;
        if c.holds() {
            held += 1;
        } else {
            ok = false;
            r.lines.push(format!(
                "failed\tgamma={:?}\tdelta={:?}\t{c:?}",
                inst.gamma(),
                inst.delta()
            ));
        }
    }
    r.lines
        .push(format!("instances={}\tidentities_hold={held}", insts.len()));
    let control = verify_t214_with(&insts[0], &mutated_pi(&insts[0]))?;
    r.lines.push(format!(
        "mutated pi_3 (coefficient 3) rejected={}",
        !control.holds()
    ));
    ok &= !control.holds();
    r.outcome = verdict(ok);
    Ok(r)
}

/// `A = ⟨ab, bc, ca, x⟩`, `B = ⟨x − a², x − b², x − c²⟩` over `(a, b, c, x)`.
pub(crate) fn abcx_generators(field: Field) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    let mono = |e: [i64; 4]| LaurentPoly::monomial(ExponentVector(e.to_vec()), field.one());
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

/// `(bc)² − (ac)² − (ab)² + x²`.
pub(crate) fn char_two_element(field: Field) -> LaurentPoly {
    LaurentPoly::from_int_terms(
        4,
        field,
        &[
            (1, &[0, 2, 2, 0]),
            (-1, &[2, 0, 2, 0]),
            (-1, &[2, 2, 0, 0]),
            (1, &[0, 0, 0, 2]),
        ],
    )
    .expect("valid")
}

const ABCX_WEIGHTS: [i64; 4] = [1, 1, 1, 2];

fn abcx_intersection(ctx: &Context) -> Result<Report> {
    let field = ctx.field()?;
    let p = field.characteristic();
    if p == 2 {
        return Err(Error::Usage(
            "l2.15 does not hold in characteristic 2; run `verify r2.16` instead".into(),
        ));
    }
    let dmax = ctx.dmax_or(if p == 0 { 16 } else { 12 })?;
    let (a, b) = abcx_generators(field);
    let report = graded_intersection(&a, &b, &ABCX_WEIGHTS, dmax)?;
    let trivial = report.slices.iter().all(|s| s.degree == 0 || s.dim() == 0);
    let outcome = if p == 3 {
        Outcome::Reported
    } else {
        verdict(trivial)
    };
    let mut r = ctx.report("verify l2.15", outcome);
    r.header.push(("field".into(), field.to_string()));
    r.header.push(("bounds".into(), format!("dmax={dmax}")));
    r.header.push(("weights".into(), "a=1 b=1 c=1 x=2".into()));
    if p == 3 {
        r.lines
            .push("characteristic 3 is not covered by the lemma; table reported only".into());
    }
    r.lines
        .push(format!("positive-degree intersection is zero: {trivial}"));
    let (table, basis) = intersection_table(&report);
    r.table = Some(table);
    r.basis = Some(basis);
    Ok(r)
}

fn abcx_char_two(ctx: &Context) -> Result<Report> {
    let field = match ctx.field_flag.as_deref().or(ctx.config.field.as_deref()) {
        None => Field::Prime(2),
        Some(_) => ctx.field()?,
    };
    if field.characteristic() != 2 {
        return Err(Error::Usage(format!(
            "r2.16 needs characteristic 2, got {field}"
        )));
    }
    let dmax = ctx.dmax_or(4)?;
    if dmax < 4 {
        return Err(Error::Usage("r2.16 needs --dmax ≥ 4".into()));
    }
    let (a, b) = abcx_generators(field);
    let report = graded_intersection(&a, &b, &ABCX_WEIGHTS, dmax)?;
    let s = report.slice(4).expect("degree 4 present");
    let target = char_two_element(field);
    let in_span = crate::intersect::in_span(&s.basis, &target);
    let mut r = ctx.report("verify r2.16", verdict(s.dim() >= 1 && in_span));
    r.header.push(("field".into(), field.to_string()));
    r.header.push(("bounds".into(), format!("dmax={dmax}")));
    r.lines
        .push(format!("degree 4 intersection dim={}", s.dim()));
    r.lines
        .push(format!("(bc)^2-(ac)^2-(ab)^2+x^2 in span: {in_span}"));
    let (table, basis) = intersection_table(&report);
    r.table = Some(table);
    r.basis = Some(basis);
    Ok(r)
}

/// Outcome of the `f₀` scan over a box of `δ` blocks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct CertificateScan {
    pub scanned: usize,
    pub star_instances: usize,
    pub polynomial: usize,
    pub max_p: i64,
    pub mutation_failures: usize,
}

/// For every `δ` block in `[1, bound]` (with `δ_i4 = 0`) satisfying (*):
/// build `f₀` from the chosen exponents and test it, together with a control
/// where one unit moves from `p₁` to `p₃` (so `p₁ < pξ₁`).
pub(crate) fn certificate_scan(bound: i64, field: Field) -> Result<CertificateScan> {
    use rayon::prelude::*;
    let total = (bound as u64).pow(9);
    let results: Vec<Option<(bool, bool, i64)>> = (0..total)
        .into_par_iter()
        .map(|idx| -> Result<Option<(bool, bool, i64)>> {
            let mut k = idx;
            let delta: Vec<Vec<i64>> = (0..3)
                .map(|_| {
                    (0..3)
                        .map(|_| {
                            let v = (k % bound as u64) as i64 + 1;
                            k /= bound as u64;
                            v
                        })
                        .collect()
                })
                .collect();
            let xi = xi_values(&delta);
            let sum: BigRational = xi.iter().sum();
            if sum >= BigRational::from_integer(1.into()) {
                return Ok(None);
            }
            let inst = KurodaInstance::new(4, &[1], &delta, field)?;
            let e = lemma31_find_p(&xi)?;
            let [p1, p2, p3] = e.parts;
            let good = build_f0(&inst, p1, p2, p3)?.is_polynomial();
            let mutated = build_f0(&inst, p1 - 1, p2, p3 + 1)?.is_polynomial();
            Ok(Some((good, mutated, e.p)))
        })
        .collect::<Result<_>>()?;
    let mut scan = CertificateScan {
        scanned: total as usize,
        ..Default::default()
    };
    for (good, mutated, p) in results.into_iter().flatten() {
        scan.star_instances += 1;
        scan.polynomial += usize::from(good);
        scan.mutation_failures += usize::from(!mutated);
        scan.max_p = scan.max_p.max(p);
    }
    Ok(scan)
}

fn certificates(ctx: &Context) -> Result<Report> {
    let field = ctx.field()?;
    let mut r = ctx.report("verify l3.1", Outcome::Pass);
    r.header.push(("field".into(), field.to_string()));
    let mut ok = true;
    if ctx.config.has_instance() {
        let inst = ctx.config.instance(field)?;
        let c = check_star(&inst)?;
        let xi = inst.xi()?;
        let e = lemma31_find_p(&xi)?;
        let [p1, p2, p3] = e.parts;
        let f0 = build_f0(&inst, p1, p2, p3)?;
        let g = build_g(&inst, p1, p2, p3, 1)?;
        r.lines.push(format!(
            "star={}\tp={}\tparts=({p1},{p2},{p3})",
            c.value, e.p
        ));
        r.lines.push(format!(
            "f0 terms={}\tpolynomial={}",
            f0.in_x.len(),
            f0.is_polynomial()
        ));
        r.lines.push(format!(
            "G(e=1) X2,X3 exponents nonnegative={}",
            g.x2_x3_nonnegative()
        ));
        ok &= f0.is_polynomial() && g.x2_x3_nonnegative();
    } else {
        let bound = ctx.bound_or(3)?;
        if !(1..=3).contains(&bound) {
            return Err(Error::Usage(format!(
                "l3.1 box bound {bound} outside 1..=3"
            )));
        }
        r.header
            .push(("bounds".into(), format!("delta entries in [1,{bound}]")));
        let s = certificate_scan(bound, field)?;
        r.lines.push(format!(
            "scanned={}\tstar_instances={}\tf0_polynomial={}\tmax_p={}",
            s.scanned, s.star_instances, s.polynomial, s.max_p
        ));
        r.lines.push(format!(
            "control (p1 below p*xi1): non-polynomial on {} instances",
            s.mutation_failures
        ));
        ok &= s.polynomial == s.star_instances && s.mutation_failures >= 1;
    }
    r.outcome = verdict(ok);
    Ok(r)
}

fn support_and_kernel(ctx: &Context) -> Result<Report> {
    let d = ctx.dmax_or(12)?;
    let mut r = ctx.report("verify l3.2", Outcome::Pass);
    r.header
        .push(("bounds".into(), format!("dmax={d} kernel_degree=8")));
    let mut ok = true;
    let k = kernel_degree_basis(8, Field::Rational)?;
    for s in &k.slices {
        r.lines.push(format!(
            "kernel degree={}\tdim={}\tgenerated={}\tmatch={}",
            s.degree,
            s.basis.len(),
            s.generated_dim,
            s.matches_generators
        ));
    }
    ok &= k.matches_generators();
    for (name, inst) in instances(ctx, true)? {
        if inst.n() != 4 {
            return Err(Error::Precondition("l3.2 concerns n = 4 instances".into()));
        }
        let report = kuroda_intersection_basis(&inst, d)?;
        let mut count = 0;
        let mut good = true;
        for f in report.nonconstant_elements() {
            count += 1;
            good &= support_property_check(f)?;
        }
        r.lines.push(format!(
            "{name}\tnonconstant_elements={count}\tsupport_property={good}"
        ));
        ok &= good;
    }
    r.outcome = verdict(ok);
    Ok(r)
}
