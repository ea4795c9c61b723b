//! Contraction forms over epsilon tensors for four generator pairs.
//!
//! Matrices indexed by the ordered 2-subsets of 1..=4 are accessed here
//! through free single indices: the first two singles name the row pair, the
//! last two the column pair, with a sign flip for each descending pair and
//! zero whenever a pair degenerates. The forms below contract such matrices
//! with 4x4 matrices and the order-2 sign pairing, writing E2 for the latter
//! so that a product like X E2 keeps its literal left/right placement.

use grassmann_core::Scalar;
use matrix_kit::{e_matrix, k_subsets, subset_position, RatMatrix};
use num_traits::Zero;

/// The totally antisymmetric symbol on four indices from 1..=4.
pub fn epsilon4(a: u8, b: u8, c: u8, d: u8) -> i32 {
    let v = [a, b, c, d];
    let mut sign = 1i32;
    for i in 0..4 {
        for j in (i + 1)..4 {
            if v[i] == v[j] {
                return 0;
            }
            if v[i] > v[j] {
                sign = -sign;
            }
        }
    }
    sign
}

/// Entry of a pair-indexed matrix under free single indices: row pair
/// {l, t}, column pair {u, r}, antisymmetric in each pair.
pub fn pair_entry(x: &RatMatrix, l: u8, t: u8, u: u8, r: u8) -> Scalar {
    if l == t || u == r {
        return Scalar::zero();
    }
    let (rl, rh, mut sign) = if l < t { (l, t, 1i32) } else { (t, l, -1) };
    let (cl, ch) = if u < r { (u, r) } else { (r, u) };
    if u > r {
        sign = -sign;
    }
    let v = x.get(subset_position(4, &[rl, rh]), subset_position(4, &[cl, ch])).clone();
    if sign < 0 {
        -v
    } else {
        v
    }
}

fn e2() -> RatMatrix {
    e_matrix(2, 4).expect("order 2 pairing over 4 indices")
}

fn pair_list() -> Vec<Vec<u8>> {
    k_subsets(4, 2)
}

/// F_a(B, D)_{lm} = eps_{lrK} eps_{msN} B_{sr} D_{NK} with B 4x4 and D
/// pair-indexed; the result is 4x4.
pub fn f_a(b: &RatMatrix, d: &RatMatrix) -> RatMatrix {
    assert!(b.rows() == 4 && b.cols() == 4 && d.rows() == 6 && d.cols() == 6);
    let pairs = pair_list();
    RatMatrix::from_fn(4, 4, |li, mi| {
        let (l, m) = (li as u8 + 1, mi as u8 + 1);
        let mut sum = Scalar::zero();
        for r in 1..=4u8 {
            for (ki, kk) in pairs.iter().enumerate() {
                let e1 = epsilon4(l, r, kk[0], kk[1]);
                if e1 == 0 {
                    continue;
                }
                for s in 1..=4u8 {
                    for (ni, nn) in pairs.iter().enumerate() {
                        let e2s = epsilon4(m, s, nn[0], nn[1]);
                        if e2s == 0 {
                            continue;
                        }
                        let term = b.get(s as usize - 1, r as usize - 1) * d.get(ni, ki);
                        sum += if e1 * e2s < 0 { -term } else { term };
                    }
                }
            }
        }
        sum
    })
}

/// F_b(X)_{LM} = eps_{Lrk} X_{sr} eps_{skM} with X 4x4; the result is
/// pair-indexed.
pub fn f_b(x: &RatMatrix) -> RatMatrix {
    assert!(x.rows() == 4 && x.cols() == 4);
    let pairs = pair_list();
    RatMatrix::from_fn(6, 6, |li, mi| {
        let ll = &pairs[li];
        let mm = &pairs[mi];
        let mut sum = Scalar::zero();
        for r in 1..=4u8 {
            for k in 1..=4u8 {
                let e1 = epsilon4(ll[0], ll[1], r, k);
                if e1 == 0 {
                    continue;
                }
                for s in 1..=4u8 {
                    let e2s = epsilon4(s, k, mm[0], mm[1]);
                    if e2s == 0 {
                        continue;
                    }
                    let term = x.get(s as usize - 1, r as usize - 1).clone();
                    sum += if e1 * e2s < 0 { -term } else { term };
                }
            }
        }
        sum
    })
}

/// F_c(X, Y, Z)_{lm} = (X E2)_{ltur} Y_{sr} (E2 Z)_{stum} with X, Z
/// pair-indexed and Y 4x4; the result is 4x4.
pub fn f_c(x: &RatMatrix, y: &RatMatrix, z: &RatMatrix) -> RatMatrix {
    assert!(x.rows() == 6 && y.rows() == 4 && z.rows() == 6);
    let xe = x.mul(&e2()).expect("6x6 times 6x6");
    let ez = e2().mul(z).expect("6x6 times 6x6");
    RatMatrix::from_fn(4, 4, |li, mi| {
        let (l, m) = (li as u8 + 1, mi as u8 + 1);
        let mut sum = Scalar::zero();
        for t in 1..=4u8 {
            for u in 1..=4u8 {
                for r in 1..=4u8 {
                    let left = pair_entry(&xe, l, t, u, r);
                    if left.is_zero() {
                        continue;
                    }
                    for s in 1..=4u8 {
                        sum += &left
                            * y.get(s as usize - 1, r as usize - 1)
                            * pair_entry(&ez, s, t, u, m);
                    }
                }
            }
        }
        sum
    })
}

/// F_d1(X, Y, Z)_{lm} = (X E2)_{lrtu} Y_{sr} (E2 Z)_{tsum}, shapes as in
/// [`f_c`].
pub fn f_d1(x: &RatMatrix, y: &RatMatrix, z: &RatMatrix) -> RatMatrix {
    assert!(x.rows() == 6 && y.rows() == 4 && z.rows() == 6);
    let xe = x.mul(&e2()).expect("6x6 times 6x6");
    let ez = e2().mul(z).expect("6x6 times 6x6");
    RatMatrix::from_fn(4, 4, |li, mi| {
        let (l, m) = (li as u8 + 1, mi as u8 + 1);
        let mut sum = Scalar::zero();
        for r in 1..=4u8 {
            for t in 1..=4u8 {
                for u in 1..=4u8 {
                    let left = pair_entry(&xe, l, r, t, u);
                    if left.is_zero() {
                        continue;
                    }
                    for s in 1..=4u8 {
                        sum += &left
                            * y.get(s as usize - 1, r as usize - 1)
                            * pair_entry(&ez, t, s, u, m);
                    }
                }
            }
        }
        sum
    })
}

/// F_d2(X, Y, Z)_{lm} = (X E2)_{lutr} Y_{sr} (E2 Z)_{tusm}, shapes as in
/// [`f_c`].
pub fn f_d2(x: &RatMatrix, y: &RatMatrix, z: &RatMatrix) -> RatMatrix {
    assert!(x.rows() == 6 && y.rows() == 4 && z.rows() == 6);
    let xe = x.mul(&e2()).expect("6x6 times 6x6");
    let ez = e2().mul(z).expect("6x6 times 6x6");
    RatMatrix::from_fn(4, 4, |li, mi| {
        let (l, m) = (li as u8 + 1, mi as u8 + 1);
        let mut sum = Scalar::zero();
        for u in 1..=4u8 {
            for t in 1..=4u8 {
                for r in 1..=4u8 {
                    let left = pair_entry(&xe, l, u, t, r);
                    if left.is_zero() {
                        continue;
                    }
                    for s in 1..=4u8 {
                        sum += &left
                            * y.get(s as usize - 1, r as usize - 1)
                            * pair_entry(&ez, t, u, s, m);
                    }
                }
            }
        }
        sum
    })
}

/// F_e(B, D, D', B')_{LM} = E2_{Lab} B_{ra} (E2 D)_{rtbu} (D' E2)_{dtsu}
/// B'_{cs} E2_{cdM} with B, B' 4x4 and D, D' pair-indexed; the result is
/// pair-indexed.
pub fn f_e(b: &RatMatrix, d: &RatMatrix, dp: &RatMatrix, bp: &RatMatrix) -> RatMatrix {
    assert!(b.rows() == 4 && d.rows() == 6 && dp.rows() == 6 && bp.rows() == 4);
    let ed = e2().mul(d).expect("6x6 times 6x6");
    let de = dp.mul(&e2()).expect("6x6 times 6x6");
    let pairs = pair_list();
    RatMatrix::from_fn(6, 6, |li, mi| {
        let ll = &pairs[li];
        let mm = &pairs[mi];
        let mut sum = Scalar::zero();
        for a in 1..=4u8 {
            for bq in 1..=4u8 {
                let e_left = epsilon4(ll[0], ll[1], a, bq);
                if e_left == 0 {
                    continue;
                }
                for c in 1..=4u8 {
                    for dq in 1..=4u8 {
                        let e_right = epsilon4(c, dq, mm[0], mm[1]);
                        if e_right == 0 {
                            continue;
                        }
                        let mut inner = Scalar::zero();
                        for r in 1..=4u8 {
                            for t in 1..=4u8 {
                                for u in 1..=4u8 {
                                    let mid = b.get(r as usize - 1, a as usize - 1)
                                        * pair_entry(&ed, r, t, bq, u);
                                    if mid.is_zero() {
                                        continue;
                                    }
                                    for s in 1..=4u8 {
                                        inner += &mid
                                            * pair_entry(&de, dq, t, s, u)
                                            * bp.get(c as usize - 1, s as usize - 1);
                                    }
                                }
                            }
                        }
                        sum += if e_left * e_right < 0 { -inner } else { inner };
                    }
                }
            }
        }
        sum
    })
}

/// F_f(X, Y, Z)_{lm} = (X E2)_{lcda} Y_{ba} (E2 Z)_{bdcm}, shapes as in
/// [`f_c`].
pub fn f_f(x: &RatMatrix, y: &RatMatrix, z: &RatMatrix) -> RatMatrix {
    assert!(x.rows() == 6 && y.rows() == 4 && z.rows() == 6);
    let xe = x.mul(&e2()).expect("6x6 times 6x6");
    let ez = e2().mul(z).expect("6x6 times 6x6");
    RatMatrix::from_fn(4, 4, |li, mi| {
        let (l, m) = (li as u8 + 1, mi as u8 + 1);
        let mut sum = Scalar::zero();
        for c in 1..=4u8 {
            for d in 1..=4u8 {
                for a in 1..=4u8 {
                    let left = pair_entry(&xe, l, c, d, a);
                    if left.is_zero() {
                        continue;
                    }
                    for b in 1..=4u8 {
                        sum += &left
                            * y.get(b as usize - 1, a as usize - 1)
                            * pair_entry(&ez, b, d, c, m);
                    }
                }
            }
        }
        sum
    })
}

/// F_g(X, Y, Y', Z)_{LM} = E2_{Lab} (E2 X)_{arbt} Y_{rs} Y'_{tu}
/// (Z E2)_{csdu} E2_{cdM} with X, Z pair-indexed and Y, Y' 4x4; the result
/// is pair-indexed.
pub fn f_g(x: &RatMatrix, y: &RatMatrix, yp: &RatMatrix, z: &RatMatrix) -> RatMatrix {
    assert!(x.rows() == 6 && y.rows() == 4 && yp.rows() == 4 && z.rows() == 6);
    let ex = e2().mul(x).expect("6x6 times 6x6");
    let ze = z.mul(&e2()).expect("6x6 times 6x6");
    let pairs = pair_list();
    RatMatrix::from_fn(6, 6, |li, mi| {
        let ll = &pairs[li];
        let mm = &pairs[mi];
        let mut sum = Scalar::zero();
        for a in 1..=4u8 {
            for b in 1..=4u8 {
                let e_left = epsilon4(ll[0], ll[1], a, b);
                if e_left == 0 {
                    continue;
                }
                for c in 1..=4u8 {
                    for d in 1..=4u8 {
                        let e_right = epsilon4(c, d, mm[0], mm[1]);
                        if e_right == 0 {
                            continue;
                        }
                        let mut inner = Scalar::zero();
                        for r in 1..=4u8 {
                            for t in 1..=4u8 {
                                let lead = pair_entry(&ex, a, r, b, t);
                                if lead.is_zero() {
                                    continue;
                                }
                                for s in 1..=4u8 {
                                    for u in 1..=4u8 {
                                        inner += &lead
                                            * y.get(r as usize - 1, s as usize - 1)
                                            * yp.get(t as usize - 1, u as usize - 1)
                                            * pair_entry(&ze, c, s, d, u);
                                    }
                                }
                            }
                        }
                        sum += if e_left * e_right < 0 { -inner } else { inner };
                    }
                }
            }
        }
        sum
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use grassmann_core::rng::DetRng;

    /// Full antisymmetric 4-index tensor over 1..=4, the expansion target of
    /// the pair-indexed matrices. Written independently of [`pair_entry`].
    struct Tens4(Vec<Scalar>);

    impl Tens4 {
        fn zero() -> Self {
            Tens4(vec![Scalar::zero(); 256])
        }

        fn idx(a: u8, b: u8, c: u8, d: u8) -> usize {
            ((a as usize - 1) * 4 + (b as usize - 1)) * 16
                + (c as usize - 1) * 4
                + (d as usize - 1)
        }

        fn get(&self, a: u8, b: u8, c: u8, d: u8) -> &Scalar {
            &self.0[Self::idx(a, b, c, d)]
        }

        fn set(&mut self, a: u8, b: u8, c: u8, d: u8, v: Scalar) {
            self.0[Self::idx(a, b, c, d)] = v;
        }
    }

    /// Expands a pair-indexed matrix into the antisymmetric tensor.
    fn extend(x: &RatMatrix) -> Tens4 {
        let pairs = pair_list();
        let mut t = Tens4::zero();
        for (i, ll) in pairs.iter().enumerate() {
            for (j, mm) in pairs.iter().enumerate() {
                let v = x.get(i, j);
                t.set(ll[0], ll[1], mm[0], mm[1], v.clone());
                t.set(ll[1], ll[0], mm[0], mm[1], -v);
                t.set(ll[0], ll[1], mm[1], mm[0], -v);
                t.set(ll[1], ll[0], mm[1], mm[0], v.clone());
            }
        }
        t
    }

    /// The tensor of X E2 built from raw epsilon sums: half the free sum of
    /// X~_{abvw} eps_{vwcd} over v, w.
    fn right_paired(x: &RatMatrix) -> Tens4 {
        let xt = extend(x);
        let mut out = Tens4::zero();
        for a in 1..=4u8 {
            for b in 1..=4u8 {
                for c in 1..=4u8 {
                    for d in 1..=4u8 {
                        let mut sum = Scalar::zero();
                        for v in 1..=4u8 {
                            for w in 1..=4u8 {
                                let e = epsilon4(v, w, c, d);
                                if e == 0 {
                                    continue;
                                }
                                let term = xt.get(a, b, v, w).clone();
                                sum += if e < 0 { -term } else { term };
                            }
                        }
                        out.set(a, b, c, d, sum / Scalar::from_integer(2.into()));
                    }
                }
            }
        }
        out
    }

    /// The tensor of E2 Z from raw epsilon sums.
    fn left_paired(z: &RatMatrix) -> Tens4 {
        let zt = extend(z);
        let mut out = Tens4::zero();
        for a in 1..=4u8 {
            for b in 1..=4u8 {
                for c in 1..=4u8 {
                    for d in 1..=4u8 {
                        let mut sum = Scalar::zero();
                        for v in 1..=4u8 {
                            for w in 1..=4u8 {
                                let e = epsilon4(a, b, v, w);
                                if e == 0 {
                                    continue;
                                }
                                let term = zt.get(v, w, c, d).clone();
                                sum += if e < 0 { -term } else { term };
                            }
                        }
                        out.set(a, b, c, d, sum / Scalar::from_integer(2.into()));
                    }
                }
            }
        }
        out
    }

    fn rand_mat(rng: &mut DetRng, dim: usize) -> RatMatrix {
        RatMatrix::from_fn(dim, dim, |_, _| rng.small_rat())
    }

    #[test]
    fn pair_entry_signs_and_zeros() {
        let mut rng = DetRng::new(11);
        let x = rand_mat(&mut rng, 6);
        assert!(pair_entry(&x, 2, 2, 1, 3).is_zero());
        assert!(pair_entry(&x, 1, 3, 4, 4).is_zero());
        assert_eq!(pair_entry(&x, 1, 3, 2, 4), *x.get(1, 4));
        assert_eq!(pair_entry(&x, 3, 1, 2, 4), -x.get(1, 4));
        assert_eq!(pair_entry(&x, 1, 3, 4, 2), -x.get(1, 4));
        assert_eq!(pair_entry(&x, 3, 1, 4, 2), *x.get(1, 4));
    }

    #[test]
    fn quadratic_contraction_matches_full_epsilon_sum() {
        let mut rng = DetRng::new(21);
        for _ in 0..3 {
            let b = rand_mat(&mut rng, 4);
            let d = rand_mat(&mut rng, 6);
            let dt = extend(&d);
            let oracle = RatMatrix::from_fn(4, 4, |li, mi| {
                let (l, m) = (li as u8 + 1, mi as u8 + 1);
                let mut sum = Scalar::zero();
                for r in 1..=4u8 {
                    for s in 1..=4u8 {
                        for k1 in 1..=4u8 {
                            for k2 in 1..=4u8 {
                                for n1 in 1..=4u8 {
                                    for n2 in 1..=4u8 {
                                        let e = epsilon4(l, r, k1, k2) * epsilon4(m, s, n1, n2);
                                        if e == 0 {
                                            continue;
                                        }
                                        let term = b.get(s as usize - 1, r as usize - 1)
                                            * dt.get(n1, n2, k1, k2);
                                        sum += if e < 0 { -term } else { term };
                                    }
                                }
                            }
                        }
                    }
                }
                sum / Scalar::from_integer(4.into())
            });
            assert_eq!(f_a(&b, &d), oracle);
        }
    }

    #[test]
    fn single_index_form_matches_full_epsilon_sum() {
        let mut rng = DetRng::new(22);
        for _ in 0..3 {
            let x = rand_mat(&mut rng, 4);
            let direct = f_b(&x);
            let pairs = pair_list();
            let oracle = RatMatrix::from_fn(6, 6, |li, mi| {
                let ll = &pairs[li];
                let mm = &pairs[mi];
                let mut sum = Scalar::zero();
                for r in 1..=4u8 {
                    for s in 1..=4u8 {
                        for k in 1..=4u8 {
                            let e = epsilon4(ll[0], ll[1], r, k) * epsilon4(s, k, mm[0], mm[1]);
                            if e == 0 {
                                continue;
                            }
                            let term = x.get(s as usize - 1, r as usize - 1).clone();
                            sum += if e < 0 { -term } else { term };
                        }
                    }
                }
                sum
            });
            assert_eq!(direct, oracle);
        }
    }

    #[test]
    fn sandwich_forms_match_full_epsilon_sums() {
        let mut rng = DetRng::new(23);
        for _ in 0..2 {
            let x = rand_mat(&mut rng, 6);
            let y = rand_mat(&mut rng, 4);
            let z = rand_mat(&mut rng, 6);
            let xe = right_paired(&x);
            let ez = left_paired(&z);
            let oracle_c = RatMatrix::from_fn(4, 4, |li, mi| {
                let (l, m) = (li as u8 + 1, mi as u8 + 1);
                let mut sum = Scalar::zero();
                for t in 1..=4u8 {
                    for u in 1..=4u8 {
                        for r in 1..=4u8 {
                            for s in 1..=4u8 {
                                sum += xe.get(l, t, u, r)
                                    * y.get(s as usize - 1, r as usize - 1)
                                    * ez.get(s, t, u, m);
                            }
                        }
                    }
                }
                sum
            });
            assert_eq!(f_c(&x, &y, &z), oracle_c);
            let oracle_d1 = RatMatrix::from_fn(4, 4, |li, mi| {
                let (l, m) = (li as u8 + 1, mi as u8 + 1);
                let mut sum = Scalar::zero();
                for t in 1..=4u8 {
                    for u in 1..=4u8 {
                        for r in 1..=4u8 {
                            for s in 1..=4u8 {
                                sum += xe.get(l, r, t, u)
                                    * y.get(s as usize - 1, r as usize - 1)
                                    * ez.get(t, s, u, m);
                            }
                        }
                    }
                }
                sum
            });
            assert_eq!(f_d1(&x, &y, &z), oracle_d1);
            let oracle_d2 = RatMatrix::from_fn(4, 4, |li, mi| {
                let (l, m) = (li as u8 + 1, mi as u8 + 1);
                let mut sum = Scalar::zero();
                for t in 1..=4u8 {
                    for u in 1..=4u8 {
                        for r in 1..=4u8 {
                            for s in 1..=4u8 {
                                sum += xe.get(l, u, t, r)
                                    * y.get(s as usize - 1, r as usize - 1)
                                    * ez.get(t, u, s, m);
                            }
                        }
                    }
                }
                sum
            });
            assert_eq!(f_d2(&x, &y, &z), oracle_d2);
            let oracle_f = RatMatrix::from_fn(4, 4, |li, mi| {
                let (l, m) = (li as u8 + 1, mi as u8 + 1);
                let mut sum = Scalar::zero();
                for c in 1..=4u8 {
                    for d in 1..=4u8 {
                        for a in 1..=4u8 {
                            for b in 1..=4u8 {
                                sum += xe.get(l, c, d, a)
                                    * y.get(b as usize - 1, a as usize - 1)
                                    * ez.get(b, d, c, m);
                            }
                        }
                    }
                }
                sum
            });
            assert_eq!(f_f(&x, &y, &z), oracle_f);
        }
    }

    #[test]
    fn pair_output_sandwich_forms_match_full_epsilon_sums() {
        let mut rng = DetRng::new(24);
        let b = rand_mat(&mut rng, 4);
        let d = rand_mat(&mut rng, 6);
        let dp = rand_mat(&mut rng, 6);
        let bp = rand_mat(&mut rng, 4);
        let ed = left_paired(&d);
        let de = right_paired(&dp);
        let pairs = pair_list();
        let oracle_e = RatMatrix::from_fn(6, 6, |li, mi| {
            let ll = &pairs[li];
            let mm = &pairs[mi];
            let mut sum = Scalar::zero();
            for a in 1..=4u8 {
                for bq in 1..=4u8 {
                    let e_left = epsilon4(ll[0], ll[1], a, bq);
                    if e_left == 0 {
                        continue;
                    }
                    for c in 1..=4u8 {
                        for dq in 1..=4u8 {
                            let e_right = epsilon4(c, dq, mm[0], mm[1]);
                            if e_right == 0 {
                                continue;
                            }
                            for r in 1..=4u8 {
                                for t in 1..=4u8 {
                                    for u in 1..=4u8 {
                                        for s in 1..=4u8 {
                                            let term = b.get(r as usize - 1, a as usize - 1)
                                                * ed.get(r, t, bq, u)
                                                * de.get(dq, t, s, u)
                                                * bp.get(c as usize - 1, s as usize - 1);
                                            sum += if e_left * e_right < 0 { -term } else { term };
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            sum
        });
        assert_eq!(f_e(&b, &d, &dp, &bp), oracle_e);
        let x = rand_mat(&mut rng, 6);
        let y = rand_mat(&mut rng, 4);
        let yp = rand_mat(&mut rng, 4);
        let z = rand_mat(&mut rng, 6);
        let ex = left_paired(&x);
        let ze = right_paired(&z);
        let oracle_g = RatMatrix::from_fn(6, 6, |li, mi| {
            let ll = &pairs[li];
            let mm = &pairs[mi];
            let mut sum = Scalar::zero();
            for a in 1..=4u8 {
                for b in 1..=4u8 {
                    let e_left = epsilon4(ll[0], ll[1], a, b);
                    if e_left == 0 {
                        continue;
                    }
                    for c in 1..=4u8 {
                        for d in 1..=4u8 {
                            let e_right = epsilon4(c, d, mm[0], mm[1]);
                            if e_right == 0 {
                                continue;
                            }
                            for r in 1..=4u8 {
                                for t in 1..=4u8 {
                                    for s in 1..=4u8 {
                                        for u in 1..=4u8 {
                                            let term = ex.get(a, r, b, t)
                                                * y.get(r as usize - 1, s as usize - 1)
                                                * yp.get(t as usize - 1, u as usize - 1)
                                                * ze.get(c, s, d, u);
                                            sum += if e_left * e_right < 0 { -term } else { term };
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
            sum
        });
        assert_eq!(f_g(&x, &y, &yp, &z), oracle_g);
    }
}
