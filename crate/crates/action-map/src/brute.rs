//! The brute-force route: Berezin integration over a doubled algebra.
//!
//! The action is placed over an inner generator pair sector, coupled
//! linearly to outer sources, and exponentiated; integrating the inner pairs
//! out yields the partition element Z over the sources. Its logarithm W and
//! the Legendre transform of W then give the effective action. Everything
//! here works coefficient by coefficient in exact rationals, so the closed
//! forms can be checked against this route without any tolerance.

use grassmann_core::{
    solve_stationarity, AlgebraLayout, CoreError, Element, GrandConstant, Monomial, Sector,
};
use matrix_kit::{k_subsets, RatMatrix};
use num_traits::Zero;

use crate::codec::{decode_action, encode_action_on};
use crate::spec::{ActionSpec, EffectiveAction, PartitionTower};
use crate::ActionError;

/// Z as an element over the source sector: the integral of
/// exp(body + sources) over the inner pairs, with the constant block of the
/// action left out so that Z carries no overall exponential prefactor.
pub fn partition_element(spec: &ActionSpec) -> Result<Element, ActionError> {
    spec.validate()?;
    let n = spec.n;
    let layout = AlgebraLayout::transform(n);
    let body = encode_action_on(spec, &layout, Sector::ChiBar, Sector::Chi)?.without_constant();
    // The body and every source term are even, so the exponential factors;
    // each source term squares to zero, so its factor is a plain binomial.
    // Keeping the body exponential on the inner slots alone is what makes
    // the four- and five-pair integrals tractable.
    let mut exp = body.exp_nilpotent()?;
    let one = Element::one(&layout);
    for l in 1..=n {
        let src_in = Element::generator(&layout, Sector::EtaBar, l)?
            .mul(&Element::generator(&layout, Sector::Chi, l)?)?;
        let src_out = Element::generator(&layout, Sector::ChiBar, l)?
            .mul(&Element::generator(&layout, Sector::Eta, l)?)?;
        exp = exp.mul(&one.add(&src_in)?)?;
        exp = exp.mul(&one.add(&src_out)?)?;
    }
    let pairs: Vec<(u8, u8)> = (1..=n)
        .map(|l| Ok((layout.slot(Sector::Chi, l)?, layout.slot(Sector::ChiBar, l)?)))
        .collect::<Result<_, CoreError>>()?;
    Ok(exp.berezin_pairs(&pairs)?)
}

/// W = ln Z over the source sector, moved onto the layout that also carries
/// the outer generator pair. The constant is the formal logarithm of the
/// partition scalar.
pub fn log_partition_element(spec: &ActionSpec) -> Result<Element, ActionError> {
    let z = partition_element(spec)?;
    let p = z.coeff(Monomial::ONE);
    if p.is_zero() {
        return Err(ActionError::SingularPartition);
    }
    let rest = z.without_constant().scale(&p.recip());
    let w = rest.log_one_plus()?.with_constant(GrandConstant::ln_of(&p));
    Ok(w.transfer_to(&AlgebraLayout::legendre(spec.n))?)
}

/// The effective action as an element over the outer generator pair: the
/// Legendre transform of W at the stationary sources.
pub fn effective_action_element(spec: &ActionSpec) -> Result<Element, ActionError> {
    let w = log_partition_element(spec)?;
    let stationary = solve_stationarity(&w).map_err(|e| match e {
        CoreError::SingularQuadraticBlock => ActionError::SingularQuadraticBlock,
        other => ActionError::Core(other),
    })?;
    let layout = w.layout().clone();
    let images = stationary.images(&layout)?;
    let mut g = w.substitute_odd(&images)?;
    for l in 1..=layout.n() {
        let psi = Element::generator(&layout, Sector::Psi, l)?;
        let psi_bar = Element::generator(&layout, Sector::PsiBar, l)?;
        let source_term = stationary.eta_bar[l as usize - 1]
            .mul(&psi)?
            .add(&psi_bar.mul(&stationary.eta[l as usize - 1])?)?;
        g = g.sub(&source_term)?;
    }
    Ok(g)
}

/// The full map: source action in, effective action coefficients out. The
/// constant block of the result is ln P. Degree-8 coefficients only fit for
/// n = 4, so n = 5 callers should use [`bruteforce_quadratic_quartic`].
pub fn effective_action_bruteforce(spec: &ActionSpec) -> Result<EffectiveAction, ActionError> {
    if spec.n == 5 {
        return Err(ActionError::BadShape(
            "a 5-pair effective action has degree-10 terms; only the quadratic and quartic \
             blocks are reachable, via bruteforce_quadratic_quartic"
                .into(),
        ));
    }
    let g = effective_action_element(spec)?;
    let g = g.transfer_to(&AlgebraLayout::action(spec.n))?;
    decode_action(&g)
}

/// Only the quadratic and quartic blocks of the effective action, extracted
/// straight off the element so that n = 5 works as well.
pub fn bruteforce_quadratic_quartic(
    spec: &ActionSpec,
) -> Result<(RatMatrix, RatMatrix), ActionError> {
    if spec.n < 2 {
        return Err(ActionError::BadShape("quartic block needs at least 2 pairs".into()));
    }
    let g = effective_action_element(spec)?;
    let layout = g.layout().clone();
    let n = spec.n;
    let a2p = RatMatrix::from_fn(n as usize, n as usize, |l, m| {
        let mono = layout
            .monomial(&[(Sector::PsiBar, l as u8 + 1), (Sector::Psi, m as u8 + 1)])
            .expect("generator indices in range");
        g.coeff(mono)
    });
    let pairs = k_subsets(n, 2);
    let a4p = RatMatrix::from_fn(pairs.len(), pairs.len(), |i, j| {
        let gens = [
            (Sector::PsiBar, pairs[i][0]),
            (Sector::PsiBar, pairs[i][1]),
            (Sector::Psi, pairs[j][0]),
            (Sector::Psi, pairs[j][1]),
        ];
        let mono = layout.monomial(&gens).expect("generator indices in range");
        g.coeff(mono)
    });
    Ok((a2p, a4p))
}

/// All subsystem partition scalars, read off Z: the level-k entry at row L,
/// column M is the coefficient of the source monomial with barred indices L
/// and unbarred indices M, times the reordering sign (-1)^(k(k+1)/2) that
/// converts between the canonical monomial order and the paired measure
/// order of the omitted integrations.
pub fn partition_tower(spec: &ActionSpec) -> Result<PartitionTower, ActionError> {
    let z = partition_element(spec)?;
    let layout = z.layout().clone();
    let n = spec.n;
    let mut levels = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let subsets = k_subsets(n, k);
        let negate = (k as u32 * (k as u32 + 1) / 2) % 2 == 1;
        let level = RatMatrix::from_fn(subsets.len(), subsets.len(), |i, j| {
            let mut gens: Vec<(Sector, u8)> = Vec::with_capacity(2 * k as usize);
            gens.extend(subsets[i].iter().map(|&l| (Sector::EtaBar, l)));
            gens.extend(subsets[j].iter().map(|&m| (Sector::Eta, m)));
            let mono = layout.monomial(&gens).expect("source indices in range");
            let c = z.coeff(mono);
            if negate {
                -c
            } else {
                c
            }
        });
        levels.push(level);
    }
    Ok(PartitionTower { n, levels })
}
