use spa_singlet::homsim::{run_two_detector, ShotBudget};
use spa_singlet::states::make_werner;
use spa_singlet::Error;

#[test]
fn error_shrinks_with_budget() {
    let rho = make_werner(0.8).unwrap();
    let exact = run_two_detector(&rho, ShotBudget::Analytic, 0)
        .unwrap()
        .lambda_min
        .point;
    let errors: Vec<f64> = [100u64, 1_000, 10_000, 100_000, 1_000_000]
        .iter()
        .map(|&n| {
            let est = run_two_detector(&rho, ShotBudget::Shots(n), 17)
                .unwrap()
                .lambda_min;
            (est.point - exact).abs()
        })
        .collect();
    let decreasing = errors.windows(2).filter(|w| w[1] < w[0]).count();
    assert!(decreasing >= 3, "errors {errors:?}");
}

#[test]
fn interval_coverage_at_ten_thousand_shots() {
    let rho = make_werner(0.8).unwrap();
    let exact = run_two_detector(&rho, ShotBudget::Analytic, 0).unwrap();
    let covered = (0..1000u64)
        .filter(|&seed| {
            let run = run_two_detector(&rho, ShotBudget::Shots(10_000), seed).unwrap();
            run.lambda_min.contains(exact.lambda_min.point)
                && run.overlap.contains(exact.overlap.point)
        })
        .count();
    assert!(covered >= 985, "covered {covered}/1000");
}

#[test]
fn same_seed_same_estimate() {
    let rho = make_werner(0.5).unwrap();
    let a = run_two_detector(&rho, ShotBudget::Shots(5000), 99).unwrap();
    let b = run_two_detector(&rho, ShotBudget::Shots(5000), 99).unwrap();
    assert_eq!(a, b);
}

#[test]
fn analytic_arm_has_zero_width() {
    let rho = make_werner(1.0).unwrap();
    let run = run_two_detector(&rho, ShotBudget::Analytic, 0).unwrap();
    assert_eq!(run.lambda_min.half_width(), 0.0);
    assert!((run.lambda_min.point - 1.0 / 6.0).abs() < 1e-12);
    assert!((run.f_avg.point - 59.0 / 135.0).abs() < 1e-12);
    assert!((run.f_opt.point - 1.0).abs() < 1e-11);
    assert!(run.lambda_min.shots.is_none());
}

#[test]
fn zero_shots_rejected() {
    let rho = make_werner(0.5).unwrap();
    assert_eq!(
        run_two_detector(&rho, ShotBudget::Shots(0), 1),
        Err(Error::ZeroShots)
    );
}
