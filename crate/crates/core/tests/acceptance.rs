//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! with a failure status if any criterion fails. All comparisons are exact.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use heckekit::verify::{checks, Check};
use heckekit::{build_root_datum, AffineWeylGroup, AntisphericalModule, HeckeAlgebra, LatticeKind, Result};

const SEED: u64 = 20240601;

fn algebra(label: &str) -> Arc<HeckeAlgebra> {
    let d = build_root_datum(label, LatticeKind::Weight).expect("known type");
    HeckeAlgebra::new(AffineWeylGroup::new(d).expect("enumerable Weyl group"))
}

/// Runs `f` on each type and folds the resulting checks into one verdict.
fn over_types(
    types: &[&str],
    f: impl Fn(&str, &Arc<HeckeAlgebra>, &mut ChaCha8Rng) -> Result<Vec<Check>>,
) -> (bool, String) {
    let mut ok = true;
    let mut notes = Vec::new();
    let mut total = 0;
    for label in types {
        let h = algebra(label);
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        match f(label, &h, &mut rng) {
            Ok(cs) => {
                for c in cs {
                    total += c.instances;
                    if !c.passed {
                        ok = false;
                        notes.push(format!(
                            "{label} {}: {}",
                            c.name,
                            c.counterexample.unwrap_or_default()
                        ));
                    }
                }
            }
            Err(e) => {
                ok = false;
                notes.push(format!("{label}: {e}"));
            }
        }
    }
    let detail = if notes.is_empty() {
        format!("{total} instances")
    } else {
        notes.join("; ")
    };
    (ok, detail)
}

fn main() -> ExitCode {
    type Criterion = (&'static str, Box<dyn Fn() -> (bool, String)>);
    let criteria: Vec<Criterion> = vec![
        (
            "Bernstein center: z_lambda commutes with all T_s (affine node included) and T_pi, <lambda,2rho^vee> <= 6, A1 A2 B2 G2",
            Box::new(|| {
                over_types(&["A1", "A2", "B2", "G2"], |_, h, _| Ok(vec![checks::center_commutes(h, 6)?]))
            }),
        ),
        (
            "K-group: specialize(theta_lambda) = t_lambda for |coords| <= 4, specialize(z_lambda) = sum [mu:V_lambda] t_mu for <lambda,2rho^vee> <= 6, A1 A2 B2 G2",
            Box::new(|| {
                over_types(&["A1", "A2", "B2", "G2"], |_, h, _| {
                    Ok(vec![checks::specialize_theta(h, 4)?, checks::specialize_center(h, 6)?])
                })
            }),
        ),
        (
            "Euler pairing = (-1)^l(w) delta_{w,w'} for l(w), l(w') <= 6, A1 A2",
            Box::new(|| over_types(&["A1", "A2"], |_, h, _| Ok(vec![checks::euler_pairing(h, 6)?]))),
        ),
        (
            "Anti-spherical: induced action = quotient realization on T_w, and project(C'_w) = 0 iff w not in ^fW, l(w) <= 8, A1 A2",
            Box::new(|| {
                over_types(&["A1", "A2"], |_, h, _| {
                    let m = AntisphericalModule::new(h.clone());
                    Ok(vec![checks::masp_realizations(&m, 8)?, checks::masp_kernel(&m, 8)?])
                })
            }),
        ),
        (
            "Rank-1 freeness: a_freeness_matrix(6) Bruhat-triangular, unit diagonal, invertible over Z[v,v^-1], A1 A2",
            Box::new(|| {
                over_types(&["A1", "A2"], |_, h, _| {
                    let m = AntisphericalModule::new(h.clone());
                    Ok(vec![checks::freeness(&m, 6)?])
                })
            }),
        ),
        (
            "Whittaker: Q_{lambda,mu}(1) = [mu:V_lambda] for <lambda,2rho^vee> <= 8, with W_f-translate invariance, A1 A2 B2 G2",
            Box::new(|| {
                over_types(&["A1", "A2", "B2", "G2"], |_, h, _| {
                    let g = h.group();
                    Ok(vec![
                        checks::whittaker_multiplicities(g, 8)?,
                        checks::whittaker_invariance(g, 8)?,
                    ])
                })
            }),
        ),
        (
            "KL: bar(C'_w) = C'_w with non-negative P for l(w) <= 8 in affine A1 and l(w) <= 6 in affine A2",
            Box::new(|| {
                over_types(&["A1", "A2"], |label, h, _| {
                    let len = if label == "A1" { 8 } else { 6 };
                    Ok(vec![checks::kl_self_duality(h, len)?])
                })
            }),
        ),
        (
            "Algebra: braid relations, 500 associativity triples (l <= 5), 100 inverses (l <= 8), 50 theta decompositions, A1 A2 B2 G2",
            Box::new(|| {
                over_types(&["A1", "A2", "B2", "G2"], |_, h, rng| {
                    Ok(vec![
                        checks::braid_relations(h)?,
                        checks::associativity(h, rng, 500, 5)?,
                        checks::inverses(h, rng, 100, 8)?,
                        checks::theta_decomposition(h, rng, 50, 3)?,
                    ])
                })
            }),
        ),
    ];

    let mut all_ok = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = run();
        all_ok &= ok;
        println!(
            "criterion {} {}: {name} [{detail}; {:.1}s]",
            i + 1,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    if all_ok {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
