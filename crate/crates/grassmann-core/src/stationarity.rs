//! Inverts the source relations of a generating functional: given an even
//! element W in the eta generators, finds odd substitutions eta_bar[l], eta[l]
//! in the psi generators such that
//!
//!   psi_l     =  d W / d eta_bar_l   and   psi_bar_l = - d W / d eta_l
//!
//! hold identically after substitution (left derivatives throughout).

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::element::Element;
use crate::layout::{AlgebraLayout, Sector};
use crate::linalg::invert;
use crate::scalar::Scalar;
use crate::CoreError;

/// The solved substitution: images for eta_bar_l and eta_l (index 0 holds
/// l = 1), each a purely odd element in the psi generators.
#[derive(Clone, Debug)]
pub struct StationaryMap {
    pub eta_bar: Vec<Element>,
    pub eta: Vec<Element>,
}

impl StationaryMap {
    /// Slot-keyed substitution map covering both eta sectors, ready for
    /// `Element::substitute_odd`.
    pub fn images(&self, layout: &AlgebraLayout) -> Result<BTreeMap<u8, Element>, CoreError> {
        let n = layout.n();
        let mut map = BTreeMap::new();
        for l in 1..=n {
            map.insert(layout.slot(Sector::EtaBar, l)?, self.eta_bar[(l - 1) as usize].clone());
            map.insert(layout.slot(Sector::Eta, l)?, self.eta[(l - 1) as usize].clone());
        }
        Ok(map)
    }
}

/// Solves the stationarity system for an even W whose quadratic block in
/// eta_bar eta is invertible. The layout must carry all four sectors
/// (PsiBar, Psi, EtaBar, Eta).
pub fn solve_stationarity(w: &Element) -> Result<StationaryMap, CoreError> {
    let layout = w.layout().clone();
    for sector in [Sector::PsiBar, Sector::Psi, Sector::EtaBar, Sector::Eta] {
        if !layout.has_sector(sector) {
            return Err(CoreError::InvalidLayout("stationarity needs psi and eta sectors"));
        }
    }
    let n = layout.n() as usize;

    let mut quad = vec![vec![Scalar::zero(); n]; n];
    for l in 1..=n as u8 {
        for m in 1..=n as u8 {
            let mono = layout.monomial(&[(Sector::EtaBar, l), (Sector::Eta, m)])?;
            quad[(l - 1) as usize][(m - 1) as usize] = w.coeff(mono);
        }
    }
    let inv = invert(&quad).ok_or(CoreError::SingularQuadraticBlock)?;

    let mut w_hi = w.without_constant();
    for l in 1..=n as u8 {
        for m in 1..=n as u8 {
            let mono = layout.monomial(&[(Sector::EtaBar, l), (Sector::Eta, m)])?;
            let c = w.coeff(mono);
            if !c.is_zero() {
                w_hi = w_hi.sub(&Element::term(&layout, mono, c))?;
            }
        }
    }

    let mut deriv_bar = Vec::with_capacity(n);
    let mut deriv = Vec::with_capacity(n);
    for l in 1..=n as u8 {
        deriv_bar.push(w_hi.left_deriv(Sector::EtaBar, l)?);
        deriv.push(w_hi.left_deriv(Sector::Eta, l)?);
    }

    let mut psi = Vec::with_capacity(n);
    let mut psi_bar = Vec::with_capacity(n);
    for l in 1..=n as u8 {
        psi.push(Element::generator(&layout, Sector::Psi, l)?);
        psi_bar.push(Element::generator(&layout, Sector::PsiBar, l)?);
    }

    // Each sweep rewrites the images through the inverted quadratic block.
    // Corrections from the higher part of W enter two degrees up per sweep,
    // so the sequence stabilizes after at most n sweeps, and a repeated
    // sweep proves the relations close exactly.
    let mut current = StationaryMap {
        eta_bar: vec![Element::zero(&layout); n],
        eta: vec![Element::zero(&layout); n],
    };
    let mut converged = false;
    for _ in 0..=n {
        let images = current.images(&layout)?;
        let mut memo: BTreeMap<u32, Element> = BTreeMap::new();
        let mut rhs = Vec::with_capacity(n);
        let mut rhs_bar = Vec::with_capacity(n);
        for l in 0..n {
            let sub = substitute_with_memo(&layout, &deriv_bar[l], &images, &mut memo)?;
            rhs.push(psi[l].sub(&sub)?);
            let sub = substitute_with_memo(&layout, &deriv[l], &images, &mut memo)?;
            rhs_bar.push(psi_bar[l].add(&sub)?);
        }
        let mut next_eta = Vec::with_capacity(n);
        for m in 0..n {
            let mut acc = Element::zero(&layout);
            for l in 0..n {
                if !inv[m][l].is_zero() {
                    acc = acc.add(&rhs[l].scale(&inv[m][l]))?;
                }
            }
            next_eta.push(acc);
        }
        let mut next_eta_bar = Vec::with_capacity(n);
        for l in 0..n {
            let mut acc = Element::zero(&layout);
            for m in 0..n {
                if !inv[m][l].is_zero() {
                    acc = acc.add(&rhs_bar[m].scale(&inv[m][l]))?;
                }
            }
            next_eta_bar.push(acc);
        }
        if next_eta == current.eta && next_eta_bar == current.eta_bar {
            converged = true;
            break;
        }
        current = StationaryMap {
            eta_bar: next_eta_bar,
            eta: next_eta,
        };
    }
    assert!(converged, "stationary sweep did not stabilize within the nilpotency bound");

    Ok(current)
}

/// Substitutes odd images into every monomial of `e`, caching the partial
/// products keyed by slot mask so that repeated calls against the same image
/// set share work. Slots without an image pass through as themselves.
fn substitute_with_memo(
    layout: &AlgebraLayout,
    e: &Element,
    images: &BTreeMap<u8, Element>,
    memo: &mut BTreeMap<u32, Element>,
) -> Result<Element, CoreError> {
    let mut result = Element::from_constant(layout, e.constant().clone());
    for (m, c) in e.terms() {
        result = result.add(&subst_product(layout, images, memo, m.0)?.scale(c))?;
    }
    Ok(result)
}

fn subst_product(
    layout: &AlgebraLayout,
    images: &BTreeMap<u8, Element>,
    memo: &mut BTreeMap<u32, Element>,
    mask: u32,
) -> Result<Element, CoreError> {
    if mask == 0 {
        return Ok(Element::one(layout));
    }
    if let Some(hit) = memo.get(&mask) {
        return Ok(hit.clone());
    }
    let low = mask.trailing_zeros() as u8;
    let head = match images.get(&low) {
        Some(image) => image.clone(),
        None => Element::term(layout, crate::layout::Monomial(1u32 << low), Scalar::one()),
    };
    let tail = subst_product(layout, images, memo, mask & (mask - 1))?;
    let product = head.mul(&tail)?;
    memo.insert(mask, product.clone());
    Ok(product)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn legendre(n: u8) -> AlgebraLayout {
        AlgebraLayout::legendre(n)
    }

    fn quad_term(layout: &AlgebraLayout, l: u8, m: u8, c: Scalar) -> Element {
        let mono = layout
            .monomial(&[(Sector::EtaBar, l), (Sector::Eta, m)])
            .unwrap();
        Element::term(layout, mono, c)
    }

    #[test]
    fn pure_quadratic_inverts_the_block() {
        let layout = legendre(1);
        let w = quad_term(&layout, 1, 1, int(5));
        let sol = solve_stationarity(&w).unwrap();
        let psi = Element::generator(&layout, Sector::Psi, 1).unwrap();
        let psi_bar = Element::generator(&layout, Sector::PsiBar, 1).unwrap();
        assert_eq!(sol.eta[0], psi.scale(&rat(1, 5)));
        assert_eq!(sol.eta_bar[0], psi_bar.scale(&rat(1, 5)));
    }

    #[test]
    fn quartic_correction_satisfies_the_relations() {
        let layout = legendre(2);
        let mut w = Element::zero(&layout);
        let entries = [(1, 1, int(2)), (1, 2, int(1)), (2, 1, int(-1)), (2, 2, int(3))];
        for (l, m, c) in entries {
            w = w.add(&quad_term(&layout, l, m, c)).unwrap();
        }
        let quartic = layout
            .monomial(&[
                (Sector::EtaBar, 1),
                (Sector::EtaBar, 2),
                (Sector::Eta, 1),
                (Sector::Eta, 2),
            ])
            .unwrap();
        w = w.add(&Element::term(&layout, quartic, rat(7, 2))).unwrap();

        let sol = solve_stationarity(&w).unwrap();
        let images = sol.images(&layout).unwrap();
        for l in 1..=2u8 {
            let lhs = w
                .left_deriv(Sector::EtaBar, l)
                .unwrap()
                .substitute_odd(&images)
                .unwrap();
            let psi = Element::generator(&layout, Sector::Psi, l).unwrap();
            assert_eq!(lhs, psi, "d W / d eta_bar_{l} should equal psi_{l}");
            let rhs = w
                .left_deriv(Sector::Eta, l)
                .unwrap()
                .substitute_odd(&images)
                .unwrap()
                .neg();
            let psi_bar = Element::generator(&layout, Sector::PsiBar, l).unwrap();
            assert_eq!(rhs, psi_bar, "-d W / d eta_{l} should equal psi_bar_{l}");
        }
    }

    #[test]
    fn singular_block_is_reported() {
        let layout = legendre(2);
        let w = quad_term(&layout, 1, 1, int(1));
        assert!(matches!(
            solve_stationarity(&w),
            Err(CoreError::SingularQuadraticBlock)
        ));
    }
}
