use action_map::{block_tower, partition_tower, random_invertible, random_spec, ActionSpec};
use grassmann_core::rng::DetRng;
use grassmann_core::scalar::int;
use grassmann_core::Scalar;
use matrix_kit::{binomial, k_subsets, star, supplementary_compound, RatMatrix};
use num_traits::Zero;

#[test]
fn gaussian_tower_levels_are_supplementary_compounds() {
    let mut rng = DetRng::new(7001);
    for n in 1..=4u8 {
        let a2 = random_invertible(n as usize, &mut rng);
        let spec = ActionSpec::gaussian(a2.clone()).unwrap();
        let tower = partition_tower(&spec).unwrap();
        for k in 0..=n {
            let expected = supplementary_compound(&a2, n - k).unwrap();
            assert_eq!(tower.levels[k as usize], expected, "n = {n}, level {k}");
        }
    }
}

#[test]
fn gaussian_tower_obeys_the_duality_pairing() {
    let mut rng = DetRng::new(7002);
    for n in 1..=4u8 {
        let a2 = random_invertible(n as usize, &mut rng);
        let det = a2.determinant().unwrap();
        let spec = ActionSpec::gaussian(a2).unwrap();
        let tower = partition_tower(&spec).unwrap();
        for k in 0..=n {
            let partner = star(&tower.levels[(n - k) as usize], n - k, n).unwrap();
            let product = tower.levels[k as usize].mul(&partner).unwrap();
            let expected = RatMatrix::identity(binomial(n as usize, k as usize)).scale(&det);
            assert_eq!(product, expected, "n = {n}, level {k}");
        }
    }
}

#[test]
fn top_level_is_the_unit_scalar() {
    let mut rng = DetRng::new(7003);
    for n in 1..=4u8 {
        let spec = random_spec(n, &mut rng);
        let tower = partition_tower(&spec).unwrap();
        let top = &tower.levels[n as usize];
        assert_eq!(top.rows(), 1);
        assert_eq!(top.get(0, 0), &int(1), "n = {n}");
    }
}

#[test]
fn level_below_top_is_linear_in_the_quadratic_block() {
    let mut rng = DetRng::new(7004);
    for n in 2..=4u8 {
        let spec = random_spec(n, &mut rng);
        let tower = partition_tower(&spec).unwrap();
        let expected = star(&spec.a2, 1, n).unwrap();
        assert_eq!(tower.levels[(n - 1) as usize], expected, "n = {n}");
    }
}

#[test]
fn algebraic_tower_matches_integration_tower() {
    let mut rng = DetRng::new(7005);
    for n in 1..=4u8 {
        for trial in 0..4 {
            let spec = random_spec(n, &mut rng);
            let by_blocks = block_tower(&spec).unwrap();
            let by_integration = partition_tower(&spec).unwrap();
            assert_eq!(by_blocks.n, by_integration.n);
            assert_eq!(
                by_blocks.levels, by_integration.levels,
                "n = {n}, trial {trial}"
            );
        }
    }
}

fn top_with_pins(spec: &ActionSpec, pins: &[(usize, usize, Scalar)]) -> Scalar {
    let mut pinned = spec.clone();
    for (row, col, value) in pins {
        pinned.a2.set(*row, *col, value.clone());
    }
    partition_tower(&pinned).unwrap().top().clone()
}

#[test]
fn tower_levels_are_entry_derivatives_of_the_top_scalar() {
    let mut rng = DetRng::new(7006);
    for n in 2..=3u8 {
        let spec = random_spec(n, &mut rng);
        let tower = partition_tower(&spec).unwrap();

        for (i, left) in k_subsets(n, 1).iter().enumerate() {
            for (j, right) in k_subsets(n, 1).iter().enumerate() {
                let (l, m) = (left[0] as usize - 1, right[0] as usize - 1);
                let high = top_with_pins(&spec, &[(m, l, int(1))]);
                let low = top_with_pins(&spec, &[(m, l, int(0))]);
                assert_eq!(
                    tower.levels[1].get(i, j),
                    &(high - low),
                    "n = {n}, entry ({i}, {j})"
                );
            }
        }

        for (i, left) in k_subsets(n, 2).iter().enumerate() {
            for (j, right) in k_subsets(n, 2).iter().enumerate() {
                let (l1, l2) = (left[0] as usize - 1, left[1] as usize - 1);
                let (m1, m2) = (right[0] as usize - 1, right[1] as usize - 1);
                let at = |x: i64, y: i64| {
                    top_with_pins(&spec, &[(m1, l1, int(x)), (m2, l2, int(y))])
                };
                let second = at(1, 1) - at(1, 0) - at(0, 1) + at(0, 0);
                assert_eq!(
                    tower.levels[2].get(i, j),
                    &second,
                    "n = {n}, entry ({i}, {j})"
                );
            }
        }
    }
}

#[test]
fn interacting_tower_duality_fails_off_the_gaussian_locus() {
    let mut rng = DetRng::new(7007);
    let mut spec = random_spec(2, &mut rng);
    spec.a4 = Some(RatMatrix::from_rows(vec![vec![int(2)]]).unwrap());
    let tower = partition_tower(&spec).unwrap();
    let top = tower.top().clone();
    let partner = star(&tower.levels[1], 1, 2).unwrap();
    let product = tower.levels[1].mul(&partner).unwrap();
    let diff = product.sub(&RatMatrix::identity(2).scale(&top)).unwrap();
    assert!(!diff.max_abs().is_zero());
}
