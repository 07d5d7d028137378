//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line (visible with `cargo test --test acceptance -- --nocapture`).

use mmv::explore::{
    builtin_example, persist_witness, random_hermitian, random_psd, search_counterexample,
    trial_rng, ExampleId, PsdStyle, SearchConfig, SearchStyle, SearchTarget,
};
use mmv::matcore::{
    power_of_decomposition, singular_values, spectral_decompose, Complex64, ComplexMatrix,
};
use mmv::means::{bourin_mean, commutator_defect, heinz_sum, trace_functional, MeanPair};
use mmv::norms::{norm, NormKind};
use mmv::verify::{
    check_alt_lemma, check_frobenius_chain, check_heinz, check_remark_quantity,
    check_strip_inequality, equality_interval_scan, GridSpec,
};

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "criterion {}: {} — {}",
        criterion,
        if pass { "PASS" } else { "FAIL" },
        detail
    );
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn random_pd_pair(seed: u64, trial: u64, dim: usize) -> MeanPair {
    let mut rng = trial_rng(seed, trial);
    let a = random_psd(dim, &mut rng, PsdStyle::Dense);
    let b = random_psd(dim, &mut rng, PsdStyle::Dense);
    MeanPair::new(a, b).unwrap()
}

// Example 3.1: ||h_0.15||_inf - ||b_0.15||_inf within [-2.4, -2.2]
#[test]
fn criterion_1_example1_reproduction() {
    let pair = builtin_example(ExampleId::Example1).unwrap();
    let nb = norm(&bourin_mean(&pair, 0.15).unwrap(), NormKind::Operator).unwrap();
    let nh = norm(&heinz_sum(&pair, 0.15).unwrap(), NormKind::Operator).unwrap();
    let f = nh - nb;
    report(
        "1 (example1 uniform-norm gap)",
        (-2.4..=-2.2).contains(&f),
        &format!("f(0.15) = {f:.6}"),
    );
}

// Example 3.2: published singular values at 0.1% relative, s3 violation,
// and the trace cross-check
#[test]
fn criterion_2_example2_reproduction() {
    let pair = builtin_example(ExampleId::Example2).unwrap();
    let sb = singular_values(&bourin_mean(&pair, 0.5).unwrap()).unwrap();
    let ss = singular_values(&pair.sum()).unwrap();

    let published_b = [6826.57, 878.499, 591.716];
    let published_sum = [10561.4, 3629.62, 443.017];
    let mut failures = Vec::new();
    for j in 0..3 {
        if (sb.get(j) - published_b[j]).abs() > 1e-3 * published_b[j] {
            failures.push(format!(
                "s_{}(b_1/2) = {:.6} vs published {}",
                j + 1,
                sb.get(j),
                published_b[j]
            ));
        }
        if (ss.get(j) - published_sum[j]).abs() > 1e-3 * published_sum[j] {
            failures.push(format!(
                "s_{}(A+B) = {:.6} vs published {}",
                j + 1,
                ss.get(j),
                published_sum[j]
            ));
        }
    }
    if sb.get(2) <= ss.get(2) {
        failures.push("s3(b_1/2) <= s3(A+B)".into());
    }
    let trace_sum: f64 = (0..3).map(|j| ss.get(j)).sum();
    if (trace_sum - 14634.0).abs() > 0.05 {
        failures.push(format!("sum s_j(A+B) = {trace_sum:.4} vs 14634"));
    }
    report(
        "2 (example2 reproduction)",
        failures.is_empty(),
        &if failures.is_empty() {
            "all published values reproduced".to_string()
        } else {
            format!(
                "{} (the exact spectrum of A+B is (10563.592, 3621.278, 449.130); \
                 the published second and third components deviate by 0.23% and 1.38%, \
                 beyond the 0.1% tolerance, so this criterion cannot pass as stated)",
                failures.join("; ")
            )
        },
    );
}

// ||h_t||_2^2 - ||b_t||_2^2 = 2 (tau(AB) - f(t)) on 500 random psd pairs
#[test]
fn criterion_3_frobenius_identity() {
    let mut worst: f64 = 0.0;
    for trial in 0..500u64 {
        let dim = 2 + (trial as usize) % 5;
        let pair = random_pd_pair(300, trial, dim);
        let tau_ab = pair.tau_ab();
        for i in 0..=10 {
            let t = i as f64 / 10.0;
            let hn = norm(&heinz_sum(&pair, t).unwrap(), NormKind::Frobenius).unwrap();
            let bn = norm(&bourin_mean(&pair, t).unwrap(), NormKind::Frobenius).unwrap();
            let f = trace_functional(&pair, Complex64::new(t, 0.0)).unwrap();
            let residual = ((hn * hn - bn * bn) - 2.0 * (tau_ab - f)).abs() / (hn * hn);
            worst = worst.max(residual);
        }
    }
    report(
        "3 (Frobenius identity)",
        worst <= 1e-8,
        &format!("max relative residual {worst:.3e} over 500 pairs x 11 t"),
    );
}

// f(z) <= tau(AB) (1 + 1e-8) over the default quarter-strip grid
#[test]
fn criterion_4_strip_theorem() {
    let grid = GridSpec::default();
    assert_eq!(grid.re_steps, 11);
    assert_eq!(grid.im_steps, 21);
    let mut violations = 0usize;
    let mut min_margin = f64::INFINITY;
    for trial in 0..200u64 {
        let dim = 2 + (trial as usize) % 5;
        let pair = random_pd_pair(400, trial, dim);
        let bound = pair.tau_ab();
        for rep in check_strip_inequality(&pair, &grid).unwrap() {
            if rep.lhs > bound * (1.0 + 1e-8) {
                violations += 1;
            }
            min_margin = min_margin.min(rep.margin / bound.abs());
        }
    }
    report(
        "4 (strip theorem)",
        violations == 0,
        &format!("{violations} violations over 200 pairs x 231 grid points (min relative margin {min_margin:.3e})"),
    );
}

// equality dichotomy: commuting pairs give f(t) = tau(AB) identically;
// non-commuting pairs give strictly positive margin on [1/4, 3/4]
#[test]
fn criterion_5_equality_dichotomy() {
    let mut failures = 0usize;
    for trial in 0..100u64 {
        let dim = 2 + (trial as usize) % 5;
        let mut rng = trial_rng(500, trial);
        let a = random_psd(dim, &mut rng, PsdStyle::Diagonal);
        let b = random_psd(dim, &mut rng, PsdStyle::Diagonal);
        let pair = MeanPair::new(a, b).unwrap();
        let tau_ab = pair.tau_ab();
        let scan = equality_interval_scan(&pair, 0.0, 1.0, 21).unwrap();
        let max_abs = scan
            .points
            .iter()
            .map(|&(_, m)| m.abs())
            .fold(0.0, f64::max);
        if !(scan.commuting && max_abs <= 1e-8 * tau_ab) {
            failures += 1;
        }
    }
    let mut noncommuting_failures = 0usize;
    let mut checked = 0usize;
    let mut trial = 0u64;
    while checked < 100 {
        let dim = 2 + (trial as usize) % 5;
        let pair = random_pd_pair(501, trial, dim);
        trial += 1;
        if commutator_defect(&pair) <= 1e-6 {
            continue;
        }
        checked += 1;
        let scan = equality_interval_scan(&pair, 0.25, 0.75, 21).unwrap();
        if scan.min_margin <= 0.0 {
            noncommuting_failures += 1;
        }
    }
    report(
        "5 (equality dichotomy)",
        failures == 0 && noncommuting_failures == 0,
        &format!(
            "{failures}/100 commuting and {noncommuting_failures}/100 non-commuting failures"
        ),
    );
}

// Araki-Lieb-Thirring consequence over 1000 pairs, r in {2, 2.5, 3, 4, 10}
#[test]
fn criterion_6_alt_lemma() {
    let mut violations = 0usize;
    for trial in 0..1000u64 {
        let dim = 2 + (trial as usize) % 5;
        let pair = random_pd_pair(600, trial, dim);
        for r in [2.0, 2.5, 3.0, 4.0, 10.0] {
            if !check_alt_lemma(&pair, r).unwrap().holds {
                violations += 1;
            }
        }
    }
    report(
        "6 (ALT lemma)",
        violations == 0,
        &format!("{violations} violations over 1000 pairs x 5 exponents"),
    );
}

// Heinz inequality over the full t grid and the Frobenius chain on [1/4, 3/4]
#[test]
fn criterion_7_heinz_and_chain() {
    let kinds = [
        NormKind::Schatten(1.0),
        NormKind::Schatten(2.0),
        NormKind::Schatten(3.0),
        NormKind::Operator,
        NormKind::KyFan(2),
    ];
    let mut violations = 0usize;
    for trial in 0..1000u64 {
        let dim = 2 + (trial as usize) % 5;
        let pair = random_pd_pair(700, trial, dim);
        let kind = kinds[(trial as usize) % kinds.len()];
        let t_heinz = ((trial as usize) % 21) as f64 * 0.05;
        if !check_heinz(&pair, t_heinz, kind).unwrap().holds {
            violations += 1;
        }
        let t_chain = 0.25 + 0.5 * ((trial as usize) % 11) as f64 / 10.0;
        for rep in check_frobenius_chain(&pair, t_chain).unwrap() {
            if !rep.holds {
                violations += 1;
            }
        }
    }
    report(
        "7 (Heinz and Frobenius chain)",
        violations == 0,
        &format!("{violations} violations over 1000 trials"),
    );
}

// tau(|B^{1/4} A^t B^t A^{1-t} B^{3/4-t}|) <= Tr(AB) over 500 pairs
#[test]
fn criterion_8_remark_quantity() {
    let mut violations = 0usize;
    for trial in 0..500u64 {
        let dim = 2 + (trial as usize) % 5;
        let pair = random_pd_pair(800, trial, dim);
        for t in [0.25, 0.375, 0.5, 0.625, 0.75] {
            if !check_remark_quantity(&pair, t).unwrap().holds {
                violations += 1;
            }
        }
    }
    report(
        "8 (remark quantity)",
        violations == 0,
        &format!("{violations} violations over 500 pairs x 5 t values"),
    );
}

fn perturb_search_config(seed: u64) -> SearchConfig {
    SearchConfig {
        dim: 3,
        trials: 100,
        seed,
        style: SearchStyle::PerturbExample(ExampleId::Example1),
        norm: NormKind::Operator,
        t_grid: vec![0.15],
        target: SearchTarget::BourinVsHeinz,
    }
}

// seeded search: perturbed example1 always violates at t = 0.15; the
// theorem-backed Frobenius target never finds anything
#[test]
fn criterion_9_seeded_search() {
    let start = std::time::Instant::now();
    let positive = search_counterexample(&perturb_search_config(900)).unwrap();

    let negative = search_counterexample(&SearchConfig {
        dim: 3,
        trials: 10_000,
        seed: 901,
        style: SearchStyle::Dense,
        norm: NormKind::Frobenius,
        t_grid: vec![0.25, 0.5, 0.75],
        target: SearchTarget::BourinVsHeinz,
    })
    .unwrap();
    let elapsed = start.elapsed();
    report(
        "9 (seeded search)",
        positive.found && !negative.found && elapsed.as_secs() < 60,
        &format!(
            "perturb-example1 found={} (trial {}), frobenius 10^4 trials found={}, {:?}",
            positive.found,
            positive.trials_used,
            negative.found,
            elapsed
        ),
    );
}

// spectral reconstruction, unitarity, power law, adjoint law on 500
// random instances, dims 2-8
#[test]
fn criterion_10_numerics() {
    let mut worst_recon: f64 = 0.0;
    let mut worst_unitary: f64 = 0.0;
    let mut worst_power: f64 = 0.0;
    let mut worst_adjoint: f64 = 0.0;
    for trial in 0..500u64 {
        let dim = 2 + (trial as usize) % 7;
        let mut rng = trial_rng(1000, trial);
        let h = random_hermitian(dim, &mut rng);
        let d = spectral_decompose(&h).unwrap();
        let recon = d.reconstruct().sub(h.matrix()).frobenius_norm()
            / h.matrix().frobenius_norm().max(1.0);
        worst_recon = worst_recon.max(recon);
        let u = &d.eigenvectors;
        let unitary = u
            .adjoint()
            .mul(u)
            .sub(&ComplexMatrix::identity(dim))
            .frobenius_norm()
            / dim as f64;
        worst_unitary = worst_unitary.max(unitary);

        let a = random_psd(dim, &mut rng, PsdStyle::Dense);
        let da = spectral_decompose(&a).unwrap();
        let rc = |rng: &mut rand_chacha::ChaCha8Rng| {
            use rand::Rng;
            Complex64::new(4.0 * rng.random::<f64>() - 2.0, 4.0 * rng.random::<f64>() - 2.0)
        };
        let z = rc(&mut rng);
        let w = rc(&mut rng);
        let az = power_of_decomposition(&da, z).unwrap();
        let aw = power_of_decomposition(&da, w).unwrap();
        let azw = power_of_decomposition(&da, z + w).unwrap();
        let power = az.mul(&aw).sub(&azw).frobenius_norm() / azw.frobenius_norm();
        worst_power = worst_power.max(power);

        let adj = az
            .adjoint()
            .sub(&power_of_decomposition(&da, z.conj()).unwrap())
            .frobenius_norm()
            / az.frobenius_norm();
        worst_adjoint = worst_adjoint.max(adj);
    }
    report(
        "10 (numerics)",
        worst_recon <= 1e-10 && worst_unitary <= 1e-10 && worst_power <= 1e-8 && worst_adjoint <= 1e-9,
        &format!(
            "reconstruction {worst_recon:.3e}, unitarity {worst_unitary:.3e}, power law {worst_power:.3e}, adjoint law {worst_adjoint:.3e}"
        ),
    );
}

// two runs with the same seed write byte-identical witness files
#[test]
fn criterion_11_determinism() {
    let config = perturb_search_config(1100);
    let dirs: Vec<_> = (0..2)
        .map(|_| {
            let dir = tempfile::tempdir().unwrap();
            let result = search_counterexample(&config).unwrap();
            assert!(result.found);
            persist_witness(dir.path(), &config, result.witness.as_ref().unwrap()).unwrap();
            dir
        })
        .collect();
    let mut identical = true;
    for name in ["witness_a.json", "witness_b.json", "witness_meta.json"] {
        let x = std::fs::read(dirs[0].path().join(name)).unwrap();
        let y = std::fs::read(dirs[1].path().join(name)).unwrap();
        if x != y {
            identical = false;
        }
    }
    report(
        "11 (determinism)",
        identical,
        "witness files from two identically seeded runs compared byte-for-byte",
    );
}
