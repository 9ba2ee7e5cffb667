//! Acceptance gate. Runs each criterion at zero tolerance and prints one
//! PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wcomb_core::combinant::psi_apply;
use wcomb_core::scalar::{int, ratio, Scalar};
use wcomb_core::verify::{
    quintic_coefficients, random_form, random_independent_forms, random_nonzero_form,
    random_nonzero_scalar, run_all, run_suite, SuiteConfig,
};
use wcomb_core::{
    pluecker_point, psi_matrix, recover_subspace, transvectant, verify_keyprop, wronskian,
    wronskian_combinants, BinaryForm, Subspace,
};

type Outcome = Result<String, String>;

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + tag)
}

fn closed_forms() -> Outcome {
    let mut rng = rng(1);
    let start = Instant::now();
    let mut checked = 0;
    for d in 3..=8usize {
        for _ in 0..25 {
            let a = random_independent_forms(&mut rng, 2, d);
            let c = wronskian_combinants(&a).map_err(|e| e.to_string())?;
            let c0 = transvectant(&a[0], &a[1], 1);
            let c2 = transvectant(&a[0], &a[1], 3).scale(&ratio(2 - d as i64, 4 * d as i64 - 6));
            if c.get(0) != Some(&c0) || c.get(2) != Some(&c2) {
                return Err(format!("mismatch at d = {d}"));
            }
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(5) {
        return Err(format!("{checked} pairs took {elapsed:.2?}, limit 5s"));
    }
    Ok(format!("{checked} pairs in {elapsed:.2?}"))
}

/// The 20 shapes shared by criteria 2 and 3.
fn residual_cases() -> Vec<(Vec<BinaryForm>, Vec<BinaryForm>)> {
    let mut rng = rng(2);
    (0..20)
        .map(|_| {
            let r = rng.gen_range(2..=4usize);
            let d = rng.gen_range(r + 1..=8usize);
            let forms = random_independent_forms(&mut rng, r, d);
            let tests = (0..20).map(|_| random_form(&mut rng, d)).collect();
            (forms, tests)
        })
        .collect()
}

fn defining_residual() -> Outcome {
    let mut total = 0;
    for (forms, tests) in residual_cases() {
        let c = wronskian_combinants(&forms).map_err(|e| e.to_string())?;
        for f in tests {
            let mut family = forms.clone();
            family.push(f.clone());
            let w = wronskian(&family).map_err(|e| e.to_string())?;
            let psi = psi_apply(&c, &f).map_err(|e| e.to_string())?;
            if w != psi {
                return Err(format!("nonzero residual for (r, d) = ({}, {})", c.r(), c.d()));
            }
            total += 1;
        }
    }
    Ok(format!("{total} residuals vanish"))
}

fn kernel_recovery() -> Outcome {
    let cases = residual_cases();
    for (forms, _) in &cases {
        let s = Subspace::new(forms).map_err(|e| e.to_string())?;
        let (r, d) = (s.dim(), s.order());
        let map = psi_matrix(&wronskian_combinants(forms).map_err(|e| e.to_string())?);
        let kernel = map.kernel();
        if kernel.rows() != r {
            return Err(format!("kernel dimension {} for (r, d) = ({r}, {d})", kernel.rows()));
        }
        if &kernel != s.canonical() {
            return Err(format!("kernel differs from the subspace for (r, d) = ({r}, {d})"));
        }
        if map.rank() != d - r + 1 {
            return Err(format!("rank {} for (r, d) = ({r}, {d})", map.rank()));
        }
    }
    Ok(format!("{} kernels recovered", cases.len()))
}

fn scaled_recovery() -> Outcome {
    let mut rng = rng(4);
    for _ in 0..10 {
        let r = rng.gen_range(2..=4usize);
        let d = rng.gen_range(r + 1..=8usize);
        let s = Subspace::new(&random_independent_forms(&mut rng, r, d)).map_err(|e| e.to_string())?;
        let k = random_nonzero_scalar(&mut rng);
        let c = s.combinants().map_err(|e| e.to_string())?;
        let rec = recover_subspace(&c.scale(&k)).map_err(|e| e.to_string())?;
        if rec.subspace != s || rec.k != k {
            return Err(format!("wrong recovery for (r, d) = ({r}, {d}), k = {k}"));
        }
    }
    Ok("10 subspaces and scalars recovered".into())
}

fn gamma_identities() -> Outcome {
    let mut rng = rng(5);
    let mut total = 0;
    for r in 2..=4usize {
        for d in r..=8usize {
            for n in [d, d + 2] {
                for _ in 0..10 {
                    let forms = random_independent_forms(&mut rng, r, d);
                    let b = random_nonzero_form(&mut rng, n);
                    let report = verify_keyprop(&b, &forms).map_err(|e| e.to_string())?;
                    if !report.all() {
                        return Err(format!("{report:?} for r = {r}, d = {d}, n = {n}"));
                    }
                    total += 1;
                }
            }
        }
    }
    Ok(format!("{total} cases"))
}

fn quintic_identity() -> Outcome {
    let mut rng = rng(6);
    let expected: Vec<Scalar> = vec![int(50), int(-15), int(-40)];
    for _ in 0..10 {
        let a = random_independent_forms(&mut rng, 2, 5);
        let got = quintic_coefficients(&a[0], &a[1]).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("coefficients {got:?}"));
        }
    }
    Ok("10 pairs give (50, -15, -40)".into())
}

fn injectivity() -> Outcome {
    let mut rng = rng(7);
    for (r, d) in [(2usize, 5usize), (3, 6)] {
        let mut subspaces: Vec<Subspace> = Vec::new();
        while subspaces.len() < 50 {
            // rank-deficient draws are rejected by Subspace::new
            let forms: Vec<BinaryForm> = (0..r).map(|_| random_form(&mut rng, d)).collect();
            if let Ok(s) = Subspace::new(&forms) {
                if !subspaces.contains(&s) {
                    subspaces.push(s);
                }
            }
        }
        let points: HashSet<_> = subspaces
            .iter()
            .map(pluecker_point)
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        if points.len() != subspaces.len() {
            return Err(format!("{} points for 50 subspaces at (r, d) = ({r}, {d})", points.len()));
        }
    }
    Ok("50 + 50 distinct points".into())
}

const NAMED_SUITES: &[&str] = &[
    "transvectant-symmetry",
    "transvectant-sl2-equivariance",
    "wronskian-sl2-covariance",
    "pluecker-sl2-equivariance",
    "combinant-sl2-equivariance",
    "combinant-det-scaling",
    "jacobian-equals-wronskian",
    "combinant-no-q1-slot",
    "wronskian-dependence-equivalence",
];

fn invariance_suites() -> Outcome {
    let config = SuiteConfig::default();
    for name in NAMED_SUITES {
        let report = run_suite(name, &config).ok_or_else(|| format!("unknown suite {name}"))?;
        if report.cases != 100 {
            return Err(format!("{name} ran {} cases", report.cases));
        }
    }
    let start = Instant::now();
    let reports = run_all(&config);
    let elapsed = start.elapsed();
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).collect();
    if let Some(bad) = failed.first() {
        return Err(format!("{} failed: {}", bad.name, bad.failures[0]));
    }
    if elapsed > Duration::from_secs(120) {
        return Err(format!("full suite took {elapsed:.2?}, limit 120s"));
    }
    Ok(format!("{} suites x 100 cases in {elapsed:.2?}", reports.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("closed forms for two forms", closed_forms),
        ("defining residual", defining_residual),
        ("kernel recovery", kernel_recovery),
        ("scaled recovery", scaled_recovery),
        ("gamma identities", gamma_identities),
        ("quintic identity", quintic_identity),
        ("embedding injectivity", injectivity),
        ("invariance suites", invariance_suites),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
