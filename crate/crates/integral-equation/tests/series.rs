use grassmann_core::scalar::{int, rat};
use integral_equation::{
    fixed_point_profile_gaussian, fixed_point_profile_nongaussian, iterative_root_series,
    series_babbage_check, series_iterative_root_check, series_legendre_identity_check,
    IntegralError, TruncSeries,
};

#[test]
fn quartic_profile_yields_the_expected_odd_series() {
    let profile = fixed_point_profile_nongaussian(4);
    let b = iterative_root_series(&profile, 7).unwrap();
    let expected = TruncSeries::new(vec![
        int(0),
        int(1),
        int(0),
        int(-1),
        int(0),
        rat(3, 2),
        int(0),
        rat(-3, 2),
    ]);
    assert_eq!(b, expected);
}

#[test]
fn quartic_profile_is_an_iterative_root_through_degree_seven() {
    let profile = fixed_point_profile_nongaussian(4);
    assert!(series_iterative_root_check(&profile, 7).unwrap());
}

#[test]
fn gaussian_profile_satisfies_both_functional_equations() {
    let profile = fixed_point_profile_gaussian(4);
    assert!(series_iterative_root_check(&profile, 7).unwrap());
    assert!(series_babbage_check(&profile, 7).unwrap());
}

#[test]
fn quartic_profile_fails_the_plain_involution() {
    let profile = fixed_point_profile_nongaussian(4);
    assert!(!series_babbage_check(&profile, 7).unwrap());
}

#[test]
fn quadratic_shift_fails_the_root_equation_at_degree_five() {
    let shifted = TruncSeries::new(vec![int(0), int(1), int(1), int(0)]);
    assert!(series_iterative_root_check(&shifted, 3).unwrap());
    assert!(!series_iterative_root_check(&shifted, 5).unwrap());
}

#[test]
fn short_profiles_are_rejected() {
    let stub = fixed_point_profile_nongaussian(2);
    assert!(matches!(
        series_iterative_root_check(&stub, 7),
        Err(IntegralError::InsufficientDegree)
    ));
    assert!(matches!(
        series_legendre_identity_check(&stub, 4),
        Err(IntegralError::InsufficientDegree)
    ));
}

#[test]
fn legendre_form_holds_for_the_fixed_point_profiles() {
    assert!(series_legendre_identity_check(&fixed_point_profile_nongaussian(4), 4).unwrap());
    assert!(series_legendre_identity_check(&fixed_point_profile_gaussian(4), 4).unwrap());
}

#[test]
fn legendre_form_fails_for_a_quadratic_shift() {
    let shifted = TruncSeries::new(vec![int(0), int(1), int(1), int(0)]);
    assert!(series_legendre_identity_check(&shifted, 2).unwrap());
    assert!(!series_legendre_identity_check(&shifted, 3).unwrap());
}
