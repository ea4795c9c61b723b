//! Translation between coefficient blocks and algebra elements.
//!
//! The degree-2k block entry at row subset L and column subset M is exactly
//! the coefficient of the canonically ordered monomial with the barred
//! generators L followed by the unbarred generators M. With both index sides
//! running over ordered subsets, the (1/k!)^2 normalization of the fully
//! antisymmetric coefficient array cancels against the k! x k! equal
//! orderings, so no combinatorial factors appear here.

use grassmann_core::{AlgebraLayout, Element, Scalar, Sector};
use matrix_kit::{binomial, k_subsets, subset_position, RatMatrix};
use num_traits::Zero;

use crate::spec::ActionSpec;
use crate::ActionError;

/// Encodes the blocks into the barred/unbarred sector pair of an arbitrary
/// layout, so the same action can be placed over either the outer or the
/// integration variables.
pub fn encode_action_on(
    spec: &ActionSpec,
    layout: &AlgebraLayout,
    bar: Sector,
    unbar: Sector,
) -> Result<Element, ActionError> {
    spec.validate()?;
    if layout.n() != spec.n {
        return Err(ActionError::BadShape(format!(
            "layout has {} generator pairs per sector, action has {}",
            layout.n(),
            spec.n
        )));
    }
    let n = spec.n;
    let mut acc = Element::from_constant(layout, spec.a0.clone());
    let put = |acc: &mut Element, gens: &[(Sector, u8)], coeff: &Scalar| -> Result<(), ActionError> {
        if coeff.is_zero() {
            return Ok(());
        }
        let m = layout.monomial(gens)?;
        *acc = acc.add(&Element::term(layout, m, coeff.clone()))?;
        Ok(())
    };
    let blocks: [(u8, Option<&RatMatrix>); 3] =
        [(1, Some(&spec.a2)), (2, spec.a4.as_ref()), (3, spec.a6.as_ref())];
    for (k, block) in blocks {
        let Some(block) = block else { continue };
        let subsets = k_subsets(n, k);
        for (i, left) in subsets.iter().enumerate() {
            for (j, right) in subsets.iter().enumerate() {
                let mut gens: Vec<(Sector, u8)> = Vec::with_capacity(2 * k as usize);
                gens.extend(left.iter().map(|&l| (bar, l)));
                gens.extend(right.iter().map(|&m| (unbar, m)));
                put(&mut acc, &gens, block.get(i, j))?;
            }
        }
    }
    if let Some(a8) = &spec.a8 {
        let mut gens: Vec<(Sector, u8)> = Vec::with_capacity(8);
        gens.extend((1..=n).map(|l| (bar, l)));
        gens.extend((1..=n).map(|m| (unbar, m)));
        put(&mut acc, &gens, a8)?;
    }
    Ok(acc)
}

/// Encodes the blocks over the outer generator pair sectors.
pub fn encode_action(spec: &ActionSpec) -> Result<Element, ActionError> {
    let layout = AlgebraLayout::action(spec.n);
    encode_action_on(spec, &layout, Sector::PsiBar, Sector::Psi)
}

/// Reads the coefficient blocks back off an element supported on balanced
/// monomials over the outer generator pair.
pub fn decode_action(e: &Element) -> Result<ActionSpec, ActionError> {
    let layout = e.layout();
    if !layout.has_sector(Sector::PsiBar) || !layout.has_sector(Sector::Psi) {
        return Err(ActionError::BadShape(
            "element layout lacks the outer generator pair sectors".into(),
        ));
    }
    let n = layout.n();
    let dim = |k: usize| binomial(n as usize, k);
    let mut a2 = RatMatrix::zeros(n as usize, n as usize);
    let mut a4 = (n >= 2).then(|| RatMatrix::zeros(dim(2), dim(2)));
    let mut a6 = (n >= 3).then(|| RatMatrix::zeros(dim(3), dim(3)));
    let mut a8 = (n == 4).then(Scalar::zero);
    for (m, coeff) in e.terms() {
        let mut left: Vec<u8> = Vec::new();
        let mut right: Vec<u8> = Vec::new();
        for slot in m.slots() {
            let (sector, index) = layout.generator_at(slot)?;
            match sector {
                Sector::PsiBar => left.push(index),
                Sector::Psi => right.push(index),
                other => {
                    return Err(ActionError::BadShape(format!(
                        "monomial {} uses sector {}",
                        layout.describe(*m),
                        other.label()
                    )))
                }
            }
        }
        if left.len() != right.len() {
            return Err(ActionError::UnbalancedTerm(layout.describe(*m)));
        }
        let k = left.len();
        let i = subset_position(n, &left);
        let j = subset_position(n, &right);
        match k {
            1 => a2.set(i, j, coeff.clone()),
            2 => a4.as_mut().expect("n >= 2 given a degree-4 term").set(i, j, coeff.clone()),
            3 => a6.as_mut().expect("n >= 3 given a degree-6 term").set(i, j, coeff.clone()),
            4 if n == 4 => a8 = Some(coeff.clone()),
            _ => {
                return Err(ActionError::BadShape(format!(
                    "monomial {} has degree {} with no block to hold it",
                    layout.describe(*m),
                    2 * k
                )))
            }
        }
    }
    let spec = ActionSpec { n, a0: e.constant().clone(), a2, a4, a6, a8 };
    spec.validate()?;
    Ok(spec)
}
