//! Deterministic check suites behind the verify, identities, and series
//! subcommands.

use action_map::{
    closed_form_n2, closed_form_n3, closed_form_n4, effective_action_bruteforce,
    partition_tower, random_invertible, random_spec, ActionSpec, EffectiveAction,
    PartitionTower,
};
use grassmann_core::rng::DetRng;
use grassmann_core::scalar::{int, rat};
use grassmann_core::Scalar;
use integral_equation::{
    fixed_point_profile_gaussian, fixed_point_profile_nongaussian, series_babbage_check,
    series_iterative_root_check, series_legendre_identity_check, TruncSeries,
};
use matrix_kit::{
    adjugate, binomial, compound, e_matrix, star, supplementary_compound, RatMatrix,
};
use num_traits::{One, Zero};

/// One named check with its outcome.
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A list of check outcomes.
#[derive(Default)]
pub struct SuiteReport {
    pub lines: Vec<CheckLine>,
}

impl SuiteReport {
    pub fn push(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.lines.push(CheckLine {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }

    pub fn all_passed(&self) -> bool {
        self.lines.iter().all(|line| line.passed)
    }
}

/// Applies the closed matrix form for the given pair count.
pub fn closed_form(spec: &ActionSpec) -> Result<EffectiveAction, String> {
    let form = match spec.n {
        2 => closed_form_n2(spec),
        3 => closed_form_n3(spec),
        4 => closed_form_n4(spec),
        n => return Err(format!("no closed form for n = {n}")),
    };
    form.map(|f| f.eff).map_err(|e| e.to_string())
}

/// Result of comparing the two map routes on seeded random actions.
pub struct OracleOutcome {
    pub agreements: u32,
    pub trials: u32,
    pub a0_all_equal: bool,
    pub max_gap_a2: Scalar,
    pub max_gap_a4: Scalar,
    pub max_gap_a6: Option<Scalar>,
    pub max_gap_a8: Option<Scalar>,
    pub final_effective: EffectiveAction,
    pub final_tower: PartitionTower,
}

impl OracleOutcome {
    pub fn all_equal(&self) -> bool {
        self.agreements == self.trials
    }
}

fn bump(current: &mut Scalar, candidate: Scalar) {
    if candidate > *current {
        *current = candidate;
    }
}

/// Runs the closed form and the brute-force integration on `trials` seeded
/// random actions and compares them coefficientwise.
pub fn oracle_comparison(n: u8, trials: u32, seed: u64) -> Result<OracleOutcome, String> {
    if !(2..=4).contains(&n) {
        return Err(format!("closed forms cover n = 2, 3, 4, got {n}"));
    }
    if trials == 0 {
        return Err("at least one trial is needed".into());
    }
    let mut rng = DetRng::new(seed);
    let mut agreements = 0u32;
    let mut a0_all_equal = true;
    let mut gap_a2 = Scalar::zero();
    let mut gap_a4 = Scalar::zero();
    let mut gap_a6 = (n >= 3).then(Scalar::zero);
    let mut gap_a8 = (n == 4).then(Scalar::zero);
    let mut last: Option<(EffectiveAction, PartitionTower)> = None;
    for _ in 0..trials {
        let spec = random_spec(n, &mut rng);
        let by_matrix = closed_form(&spec)?;
        let by_integration = effective_action_bruteforce(&spec).map_err(|e| e.to_string())?;
        if by_matrix == by_integration {
            agreements += 1;
        }
        a0_all_equal &= by_matrix.a0 == by_integration.a0;
        bump(
            &mut gap_a2,
            by_matrix
                .a2
                .sub(&by_integration.a2)
                .map_err(|e| e.to_string())?
                .max_abs(),
        );
        bump(
            &mut gap_a4,
            by_matrix
                .a4_ref()
                .sub(by_integration.a4_ref())
                .map_err(|e| e.to_string())?
                .max_abs(),
        );
        if let Some(gap) = gap_a6.as_mut() {
            bump(
                gap,
                by_matrix
                    .a6_ref()
                    .sub(by_integration.a6_ref())
                    .map_err(|e| e.to_string())?
                    .max_abs(),
            );
        }
        if let Some(gap) = gap_a8.as_mut() {
            let diff = by_matrix.a8_ref() - by_integration.a8_ref();
            bump(gap, if diff < Scalar::zero() { -diff } else { diff });
        }
        let tower = partition_tower(&spec).map_err(|e| e.to_string())?;
        last = Some((by_integration, tower));
    }
    let (final_effective, final_tower) = last.expect("at least one trial ran");
    Ok(OracleOutcome {
        agreements,
        trials,
        a0_all_equal,
        max_gap_a2: gap_a2,
        max_gap_a4: gap_a4,
        max_gap_a6: gap_a6,
        max_gap_a8: gap_a8,
        final_effective,
        final_tower,
    })
}

fn random_square(dim: usize, rng: &mut DetRng) -> RatMatrix {
    RatMatrix::from_fn(dim, dim, |_, _| rng.small_rat())
}

fn power(base: &Scalar, exp: usize) -> Scalar {
    (0..exp).fold(Scalar::one(), |acc, _| acc * base)
}

/// The compound-matrix identity suite over seeded random matrices of
/// orders 3 and 4, plus the deterministic pairing checks for all shapes
/// up to five pairs.
pub fn matrix_identity_suite(seed: u64, trials: u32) -> SuiteReport {
    let mut report = SuiteReport::default();
    let mut rng = DetRng::new(seed);
    let sized = format!("{trials} trials, orders 3 and 4");

    let mut ok = true;
    for _ in 0..trials {
        for n in [3usize, 4] {
            let a = random_square(n, &mut rng);
            let b = random_square(n, &mut rng);
            let ab = a.mul(&b).unwrap();
            for k in 1..=n as u8 {
                ok &= compound(&ab, k).unwrap()
                    == compound(&a, k).unwrap().mul(&compound(&b, k).unwrap()).unwrap();
            }
        }
    }
    report.push("Binet-Cauchy product of compounds", ok, sized.clone());

    let mut ok = true;
    for _ in 0..trials {
        for n in [3usize, 4] {
            let b = random_square(n, &mut rng);
            let det = b.determinant().unwrap();
            for k in 0..=n as u8 {
                let ck = compound(&b, k).unwrap();
                let sup = supplementary_compound(&b, n as u8 - k).unwrap();
                let target = RatMatrix::identity(binomial(n, k as usize)).scale(&det);
                ok &= ck.mul(&sup).unwrap() == target;
                ok &= sup.mul(&ck).unwrap() == target;
            }
        }
    }
    report.push("Laplace expansion against complements", ok, sized.clone());

    let mut ok = true;
    for _ in 0..trials {
        for n in [3usize, 4] {
            let b = random_invertible(n, &mut rng);
            let det = b.determinant().unwrap();
            let inv = b.inverse().unwrap().unwrap();
            for k in 1..n as u8 {
                ok &= compound(&inv, k).unwrap()
                    == supplementary_compound(&b, n as u8 - k)
                        .unwrap()
                        .scale(&det.recip());
            }
        }
    }
    report.push("Jacobi theorem for inverse compounds", ok, sized.clone());

    let mut ok = true;
    for _ in 0..trials {
        for n in [3usize, 4] {
            let b = random_square(n, &mut rng);
            let det = b.determinant().unwrap();
            for k in 1..=n as u8 {
                let expected = power(&det, binomial(n - 1, k as usize - 1));
                ok &= compound(&b, k).unwrap().determinant().unwrap() == expected;
            }
        }
    }
    report.push("Sylvester-Franke compound determinants", ok, sized.clone());

    let mut ok = true;
    for n in 1..=5u8 {
        for k in 0..=n {
            let e = e_matrix(k, n).unwrap();
            let dim = binomial(n as usize, k as usize);
            ok &= e.mul(&e.transpose()).unwrap() == RatMatrix::identity(dim);
            ok &= e.transpose().mul(&e).unwrap() == RatMatrix::identity(dim);
        }
    }
    report.push(
        "pairing matrices are orthogonal",
        ok,
        "all shapes up to five pairs",
    );

    let mut ok = true;
    for n in 1..=5u8 {
        for k in 0..=n {
            let e = e_matrix(k, n).unwrap();
            let other = e_matrix(n - k, n).unwrap();
            let sign = if (k as u32 * (n - k) as u32) % 2 == 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            };
            ok &= e.transpose() == other.scale(&sign);
        }
    }
    report.push(
        "pairing transpose carries the complement sign",
        ok,
        "all shapes up to five pairs",
    );

    let half = rat(1, 2);
    let mut ok = true;
    for _ in 0..trials {
        let b = random_square(3, &mut rng);
        let tr = b.trace().unwrap();
        let tr2 = b.mul(&b).unwrap().trace().unwrap();
        let scalar_part = (&(&tr * &tr) - &tr2) * &half;
        let expected = b
            .mul(&b)
            .unwrap()
            .sub(&b.scale(&tr))
            .unwrap()
            .add(&RatMatrix::identity(3).scale(&scalar_part))
            .unwrap();
        ok &= adjugate(&b).unwrap() == expected;
    }
    report.push(
        "adjugate as a trace polynomial",
        ok,
        format!("{trials} trials, order 3"),
    );

    let mut ok = true;
    for _ in 0..trials {
        let b = random_square(3, &mut rng);
        let tr = b.trace().unwrap();
        let tr2 = b.mul(&b).unwrap().trace().unwrap();
        ok &= adjugate(&b).unwrap().trace().unwrap() == (&(&tr * &tr) - &tr2) * &half;
    }
    report.push(
        "adjugate trace from traces",
        ok,
        format!("{trials} trials, order 3"),
    );

    report
}

/// Checks that Gaussian partition towers are supplementary compounds of
/// the quadratic block and satisfy the determinant duality pairing, for
/// one to four pairs.
pub fn tower_suite(seed: u64) -> SuiteReport {
    let mut report = SuiteReport::default();
    let mut rng = DetRng::new(seed);

    let mut compounds_ok = true;
    let mut duality_ok = true;
    for n in 1..=4u8 {
        let a2 = random_invertible(n as usize, &mut rng);
        let det = a2.determinant().unwrap();
        let spec = ActionSpec::gaussian(a2.clone()).unwrap();
        let tower = partition_tower(&spec).unwrap();
        for k in 0..=n {
            compounds_ok &=
                tower.levels[k as usize] == supplementary_compound(&a2, n - k).unwrap();
            let partner = star(&tower.levels[(n - k) as usize], n - k, n).unwrap();
            let expected = RatMatrix::identity(binomial(n as usize, k as usize)).scale(&det);
            duality_ok &= tower.levels[k as usize].mul(&partner).unwrap() == expected;
        }
    }
    report.push(
        "gaussian tower levels are complement compounds",
        compounds_ok,
        "one to four pairs",
    );
    report.push(
        "gaussian tower duality pairing",
        duality_ok,
        "one to four pairs",
    );
    report
}

/// Which functional equation the series subcommand checks.
#[derive(Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Babbage,
    Root,
    Legendre,
}

/// Functional-equation checks for the fixed-point series profiles; each
/// line that is expected to fail passes when the check indeed fails.
pub fn series_suite(kind: SeriesKind) -> SuiteReport {
    let mut report = SuiteReport::default();
    let quartic = fixed_point_profile_nongaussian(4);
    let identity = fixed_point_profile_gaussian(4);
    let shifted = TruncSeries::new(vec![int(0), int(1), int(1), int(0)]);
    match kind {
        SeriesKind::Babbage => {
            report.push(
                "identity profile is an involution",
                series_babbage_check(&identity, 7).unwrap(),
                "degree 7",
            );
            report.push(
                "quartic profile escapes the plain involution",
                !series_babbage_check(&quartic, 7).unwrap(),
                "expected to fail, degree 7",
            );
        }
        SeriesKind::Root => {
            report.push(
                "quartic profile squares to the sign flip",
                series_iterative_root_check(&quartic, 7).unwrap(),
                "degree 7",
            );
            report.push(
                "identity profile squares to the sign flip",
                series_iterative_root_check(&identity, 7).unwrap(),
                "degree 7",
            );
            report.push(
                "quadratic shift misses the root equation",
                !series_iterative_root_check(&shifted, 5).unwrap(),
                "expected to fail, degree 5",
            );
        }
        SeriesKind::Legendre => {
            report.push(
                "quartic profile closes under the transform",
                series_legendre_identity_check(&quartic, 4).unwrap(),
                "degree 4",
            );
            report.push(
                "identity profile closes under the transform",
                series_legendre_identity_check(&identity, 4).unwrap(),
                "degree 4",
            );
            report.push(
                "quadratic shift misses the transform identity",
                !series_legendre_identity_check(&shifted, 3).unwrap(),
                "expected to fail, degree 3",
            );
        }
    }
    report
}
