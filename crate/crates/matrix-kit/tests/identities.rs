use grassmann_core::rng::DetRng;
use grassmann_core::scalar::{int, rat};
use grassmann_core::Scalar;
use matrix_kit::{
    adjugate, binomial, compound, e_matrix, k_subsets, star, supplementary_compound, MatrixError,
    RatMatrix,
};
use num_traits::{One, Zero};

fn random_matrix(n: usize, rng: &mut DetRng) -> RatMatrix {
    RatMatrix::from_fn(n, n, |_, _| rng.small_rat())
}

fn random_invertible(n: usize, rng: &mut DetRng) -> RatMatrix {
    loop {
        let m = random_matrix(n, rng);
        if !m.determinant().unwrap().is_zero() {
            return m;
        }
    }
}

fn laplace_det(b: &RatMatrix) -> Scalar {
    let n = b.rows();
    if n == 0 {
        return Scalar::one();
    }
    if n == 1 {
        return b.get(0, 0).clone();
    }
    let mut det = Scalar::zero();
    for col in 0..n {
        if b.get(0, col).is_zero() {
            continue;
        }
        let minor = RatMatrix::from_fn(n - 1, n - 1, |r, c| {
            b.get(r + 1, if c < col { c } else { c + 1 }).clone()
        });
        let term = b.get(0, col) * &laplace_det(&minor);
        if col % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

#[test]
fn bareiss_determinant_matches_cofactor_expansion() {
    let mut rng = DetRng::new(0xe1);
    for n in 1..=5 {
        for _ in 0..25 {
            let b = random_matrix(n, &mut rng);
            assert_eq!(b.determinant().unwrap(), laplace_det(&b), "n = {n}");
        }
    }
}

#[test]
fn inverse_multiplies_to_identity() {
    let mut rng = DetRng::new(0xe2);
    for n in 1..=4 {
        for _ in 0..10 {
            let b = random_invertible(n, &mut rng);
            let inv = b.inverse().unwrap().unwrap();
            assert_eq!(b.mul(&inv).unwrap(), RatMatrix::identity(n));
            assert_eq!(inv.mul(&b).unwrap(), RatMatrix::identity(n));
        }
    }
}

#[test]
fn singular_matrices_have_no_inverse() {
    let b = RatMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]).unwrap();
    assert_eq!(b.inverse().unwrap(), None);
}

#[test]
fn shape_errors_are_reported() {
    let wide = RatMatrix::zeros(2, 3);
    assert_eq!(wide.determinant(), Err(MatrixError::NotSquare));
    assert_eq!(wide.trace(), Err(MatrixError::NotSquare));
    assert_eq!(wide.inverse(), Err(MatrixError::NotSquare));
    let b = RatMatrix::zeros(3, 3);
    assert!(matches!(compound(&b, 4), Err(MatrixError::BadOrder)));
    assert!(matches!(star(&b, 1, 4), Err(MatrixError::SizeMismatch)));
}

#[test]
fn compounds_are_multiplicative() {
    let mut rng = DetRng::new(0xe3);
    for _ in 0..25 {
        let a = random_matrix(4, &mut rng);
        let b = random_matrix(4, &mut rng);
        let ab = a.mul(&b).unwrap();
        for k in 1..=4u8 {
            let lhs = compound(&ab, k).unwrap();
            let rhs = compound(&a, k).unwrap().mul(&compound(&b, k).unwrap()).unwrap();
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }
}

#[test]
fn compound_of_a_scaled_identity() {
    let alpha = rat(3, 2);
    for n in 2..=4usize {
        let m = RatMatrix::identity(n).scale(&alpha);
        for k in 1..=n as u8 {
            let c = compound(&m, k).unwrap();
            let mut power = Scalar::one();
            for _ in 0..k {
                power *= &alpha;
            }
            let dim = binomial(n, k as usize);
            assert_eq!(c, RatMatrix::identity(dim).scale(&power));
        }
    }
}

#[test]
fn compound_commutes_with_inversion() {
    let mut rng = DetRng::new(0xe4);
    for _ in 0..10 {
        let b = random_invertible(4, &mut rng);
        let inv = b.inverse().unwrap().unwrap();
        for k in 1..=3u8 {
            let lhs = compound(&inv, k).unwrap();
            let rhs = compound(&b, k).unwrap().inverse().unwrap().unwrap();
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }
}

#[test]
fn compound_times_starred_complement_gives_the_determinant() {
    let mut rng = DetRng::new(0xe5);
    for n in 2..=4usize {
        for _ in 0..25 {
            let b = random_matrix(n, &mut rng);
            let det = b.determinant().unwrap();
            for k in 0..=n as u8 {
                let ck = compound(&b, k).unwrap();
                let sup = supplementary_compound(&b, n as u8 - k).unwrap();
                let dim = binomial(n, k as usize);
                let target = RatMatrix::identity(dim).scale(&det);
                assert_eq!(ck.mul(&sup).unwrap(), target, "n = {n}, k = {k}");
                assert_eq!(sup.mul(&ck).unwrap(), target, "n = {n}, k = {k} flipped");
            }
        }
    }
}

#[test]
fn inverse_compound_via_the_star() {
    let mut rng = DetRng::new(0xe6);
    for _ in 0..10 {
        let b = random_invertible(4, &mut rng);
        let det = b.determinant().unwrap();
        let inv = b.inverse().unwrap().unwrap();
        for k in 1..=3u8 {
            let lhs = compound(&inv, k).unwrap();
            let rhs = supplementary_compound(&b, 4 - k).unwrap().scale(&det.recip());
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }
}

#[test]
fn compound_determinants_follow_sylvester_franke() {
    let mut rng = DetRng::new(0xe7);
    for n in 2..=4usize {
        for _ in 0..10 {
            let b = random_matrix(n, &mut rng);
            let det = b.determinant().unwrap();
            for k in 1..=n as u8 {
                let ck = compound(&b, k).unwrap();
                let e = binomial(n - 1, k as usize - 1);
                let mut expected = Scalar::one();
                for _ in 0..e {
                    expected *= &det;
                }
                assert_eq!(ck.determinant().unwrap(), expected, "n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn star_is_an_involution_and_preserves_determinants() {
    let mut rng = DetRng::new(0xe8);
    for n in 2..=5u8 {
        for k in 0..=n {
            let dim = binomial(n as usize, k as usize);
            let b = RatMatrix::from_fn(dim, dim, |_, _| rng.small_rat());
            let s = star(&b, k, n).unwrap();
            assert_eq!(star(&s, n - k, n).unwrap(), b, "n = {n}, k = {k}");
            assert_eq!(
                s.determinant().unwrap(),
                b.determinant().unwrap(),
                "n = {n}, k = {k}"
            );
        }
    }
}

#[test]
fn complement_pairings_are_signed_permutations() {
    for n in 1..=5u8 {
        for k in 0..=n {
            let e = e_matrix(k, n).unwrap();
            let et = e.transpose();
            let dim = binomial(n as usize, k as usize);
            assert_eq!(et.mul(&e).unwrap(), RatMatrix::identity(dim));
            let other = e_matrix(n - k, n).unwrap();
            let sign = if ((n - k) as u32 * k as u32) % 2 == 0 {
                Scalar::one()
            } else {
                -Scalar::one()
            };
            assert_eq!(et, other.scale(&sign), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn adjugate_agrees_with_the_starred_compound() {
    let mut rng = DetRng::new(0xe9);
    for n in 1..=5usize {
        for _ in 0..10 {
            let b = random_matrix(n, &mut rng);
            assert_eq!(
                adjugate(&b).unwrap(),
                supplementary_compound(&b, n as u8 - 1).unwrap(),
                "n = {n}"
            );
        }
    }
}

#[test]
fn adjugate_product_rule() {
    let mut rng = DetRng::new(0xea);
    for n in 1..=4usize {
        for _ in 0..10 {
            let b = random_matrix(n, &mut rng);
            let adj = adjugate(&b).unwrap();
            let det = b.determinant().unwrap();
            let target = RatMatrix::identity(n).scale(&det);
            assert_eq!(b.mul(&adj).unwrap(), target);
            assert_eq!(adj.mul(&b).unwrap(), target);
        }
    }
}

#[test]
fn three_by_three_adjugate_polynomial() {
    let mut rng = DetRng::new(0xeb);
    for _ in 0..15 {
        let b = random_matrix(3, &mut rng);
        let tr = b.trace().unwrap();
        let b2 = b.mul(&b).unwrap();
        let tr2 = b2.trace().unwrap();
        let half = rat(1, 2);
        let scalar_part = (&(&tr * &tr) - &tr2) * &half;
        let expected = b2
            .sub(&b.scale(&tr))
            .unwrap()
            .add(&RatMatrix::identity(3).scale(&scalar_part))
            .unwrap();
        let adj = adjugate(&b).unwrap();
        assert_eq!(adj, expected);
        assert_eq!(adj.trace().unwrap(), scalar_part);
    }
}

#[test]
fn adjugate_trace_of_a_known_diagonal() {
    let d = RatMatrix::from_rows(vec![
        vec![int(1), int(0), int(0)],
        vec![int(0), int(2), int(0)],
        vec![int(0), int(0), int(3)],
    ])
    .unwrap();
    assert_eq!(adjugate(&d).unwrap().trace().unwrap(), int(11));
}

/// k-fold derivative of the determinant with respect to distinct entries,
/// computed by pinning each entry to 1 and 0 in turn (the determinant is
/// linear in every single entry).
fn det_derivative(b: &RatMatrix, pairs: &[(usize, usize)]) -> Scalar {
    match pairs.split_first() {
        None => b.determinant().unwrap(),
        Some((&(row, col), rest)) => {
            let mut hi = b.clone();
            hi.set(row, col, Scalar::one());
            let mut lo = b.clone();
            lo.set(row, col, Scalar::zero());
            det_derivative(&hi, rest) - det_derivative(&lo, rest)
        }
    }
}

#[test]
fn starred_compound_entries_are_determinant_derivatives() {
    let mut rng = DetRng::new(0xec);
    for n in 2..=4u8 {
        for _ in 0..6 {
            let b = random_matrix(n as usize, &mut rng);
            for k in 1..=n {
                let sup = supplementary_compound(&b, n - k).unwrap();
                let subsets = k_subsets(n, k);
                for (i, l) in subsets.iter().enumerate() {
                    for (j, m) in subsets.iter().enumerate() {
                        let pairs: Vec<(usize, usize)> = l
                            .iter()
                            .zip(m.iter())
                            .map(|(&lv, &mv)| ((mv - 1) as usize, (lv - 1) as usize))
                            .collect();
                        assert_eq!(
                            sup.get(i, j),
                            &det_derivative(&b, &pairs),
                            "n = {n}, k = {k}, L = {l:?}, M = {m:?}"
                        );
                    }
                }
            }
        }
    }
}
