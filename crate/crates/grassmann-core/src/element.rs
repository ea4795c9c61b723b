//! Multivectors over a fixed layout and the operations on them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::grand::GrandConstant;
use crate::layout::{AlgebraLayout, Monomial, Sector};
use crate::scalar::Scalar;
use crate::CoreError;

/// A multivector: sparse rational coefficients on basis monomials plus a
/// formal grade-0 constant. Value semantics throughout; operations never
/// mutate their inputs.
#[derive(Clone, PartialEq, Debug)]
pub struct Element {
    layout: AlgebraLayout,
    terms: BTreeMap<Monomial, Scalar>,
    constant: GrandConstant,
}

impl Element {
    pub fn zero(layout: &AlgebraLayout) -> Self {
        Element {
            layout: layout.clone(),
            terms: BTreeMap::new(),
            constant: GrandConstant::zero(),
        }
    }

    pub fn one(layout: &AlgebraLayout) -> Self {
        Self::from_constant(layout, GrandConstant::from_rational(Scalar::one()))
    }

    pub fn from_constant(layout: &AlgebraLayout, c: GrandConstant) -> Self {
        Element {
            layout: layout.clone(),
            terms: BTreeMap::new(),
            constant: c,
        }
    }

    pub fn from_rational(layout: &AlgebraLayout, r: Scalar) -> Self {
        Self::from_constant(layout, GrandConstant::from_rational(r))
    }

    /// The generator `sector_index` as an element.
    pub fn generator(layout: &AlgebraLayout, sector: Sector, index: u8) -> Result<Self, CoreError> {
        let m = layout.monomial(&[(sector, index)])?;
        Ok(Self::term(layout, m, Scalar::one()))
    }

    pub fn term(layout: &AlgebraLayout, m: Monomial, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() && m != Monomial::ONE {
            terms.insert(m, coeff.clone());
        }
        let constant = if m == Monomial::ONE {
            GrandConstant::from_rational(coeff)
        } else {
            GrandConstant::zero()
        };
        Element {
            layout: layout.clone(),
            terms,
            constant,
        }
    }

    pub fn layout(&self) -> &AlgebraLayout {
        &self.layout
    }

    pub fn constant(&self) -> &GrandConstant {
        &self.constant
    }

    /// Coefficient of a monomial (zero when absent, grade 0 only if rational).
    pub fn coeff(&self, m: Monomial) -> Scalar {
        if m == Monomial::ONE {
            assert!(
                self.constant.is_rational_only(),
                "grade-0 part carries formal logs"
            );
            return self.constant.rational_part().clone();
        }
        self.terms.get(&m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant.is_zero()
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// True when every monomial has even degree (the constant is even).
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.is_even())
    }

    /// True when the grade-0 part vanishes and every monomial has odd degree.
    pub fn is_pure_odd(&self) -> bool {
        self.constant.is_zero() && self.terms.keys().all(|m| !m.is_even())
    }

    pub fn without_constant(&self) -> Self {
        Element {
            layout: self.layout.clone(),
            terms: self.terms.clone(),
            constant: GrandConstant::zero(),
        }
    }

    pub fn with_constant(&self, c: GrandConstant) -> Self {
        Element {
            layout: self.layout.clone(),
            terms: self.terms.clone(),
            constant: c,
        }
    }

    /// Terms of total degree k (k > 0), as an element.
    pub fn grade_part(&self, k: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == k)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Element {
            layout: self.layout.clone(),
            terms,
            constant: GrandConstant::zero(),
        }
    }

    fn check_layout(&self, other: &Element) -> Result<(), CoreError> {
        if self.layout == other.layout {
            Ok(())
        } else {
            Err(CoreError::LayoutMismatch)
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element, CoreError> {
        self.check_layout(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, *m, c.clone());
        }
        Ok(Element {
            layout: self.layout.clone(),
            terms,
            constant: self.constant.add(&other.constant),
        })
    }

    pub fn sub(&self, other: &Element) -> Result<Element, CoreError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            layout: self.layout.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
            constant: self.constant.neg(),
        }
    }

    pub fn scale(&self, by: &Scalar) -> Element {
        if by.is_zero() {
            return Element::zero(&self.layout);
        }
        Element {
            layout: self.layout.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c * by)).collect(),
            constant: self.constant.scaled(by),
        }
    }

    /// Graded product. Overlapping monomials annihilate; disjoint ones merge
    /// with the inversion-count sign.
    pub fn mul(&self, other: &Element) -> Result<Element, CoreError> {
        self.check_layout(other)?;
        let mut terms: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.0 & mb.0 != 0 {
                    continue;
                }
                let sign = ma.merge_sign(*mb);
                let mut c = ca * cb;
                if sign < 0 {
                    c = -c;
                }
                accumulate(&mut terms, Monomial(ma.0 | mb.0), c);
            }
        }
        let constant = self.constant.mul(&other.constant);
        if !self.constant.is_zero() {
            scale_terms_into(&mut terms, &other.terms, &self.constant);
        }
        if !other.constant.is_zero() {
            scale_terms_into(&mut terms, &self.terms, &other.constant);
        }
        Ok(Element {
            layout: self.layout.clone(),
            terms,
            constant,
        })
    }

    /// Left derivative with respect to one generator: the generator is moved
    /// to the front of each monomial containing it (collecting signs) and
    /// removed; other monomials vanish.
    pub fn left_deriv(&self, sector: Sector, index: u8) -> Result<Element, CoreError> {
        let slot = self.layout.slot(sector, index)?;
        self.left_deriv_slot(slot)
    }

    pub fn left_deriv_slot(&self, slot: u8) -> Result<Element, CoreError> {
        if slot >= self.layout.slot_count() {
            return Err(CoreError::UnknownGenerator);
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if !m.contains_slot(slot) {
                continue;
            }
            let mut ordered: Vec<u8> = m.slots().collect();
            let pos = ordered.iter().position(|&s| s == slot).expect("slot present");
            ordered.remove(pos);
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            let mut rest = 0u32;
            for s in ordered {
                rest |= 1u32 << s;
            }
            let c = if sign < 0 { -c } else { c.clone() };
            accumulate(&mut terms, Monomial(rest), c);
        }
        Ok(split_constant(&self.layout, terms))
    }

    /// Berezin integral over one generator, normalized so the integral of the
    /// generator itself is 1; acts like the left derivative.
    pub fn berezin(&self, sector: Sector, index: u8) -> Result<Element, CoreError> {
        let slot = self.layout.slot(sector, index)?;
        self.berezin_slot(slot)
    }

    pub fn berezin_slot(&self, slot: u8) -> Result<Element, CoreError> {
        if slot >= self.layout.slot_count() {
            return Err(CoreError::UnknownGenerator);
        }
        let bit = 1u32 << slot;
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0 & bit == 0 {
                continue;
            }
            let c = if m.sign_to_front(slot) < 0 { -c } else { c.clone() };
            accumulate(&mut terms, Monomial(m.0 & !bit), c);
        }
        Ok(split_constant(&self.layout, terms))
    }

    /// Iterated Berezin integral for a measure written as the product of the
    /// listed (chi, chibar) slot pairs, pair 1 leftmost; the rightmost
    /// differential acts first, so pairs are consumed last to first, chibar
    /// before chi within each pair.
    pub fn berezin_pairs(&self, pairs: &[(u8, u8)]) -> Result<Element, CoreError> {
        let mut seen = 0u32;
        for &(chi, chibar) in pairs {
            for slot in [chi, chibar] {
                if slot >= self.layout.slot_count() {
                    return Err(CoreError::UnknownGenerator);
                }
                let bit = 1u32 << slot;
                if seen & bit != 0 {
                    return Err(CoreError::DuplicateSlot);
                }
                seen |= bit;
            }
        }
        let mut acc = self.clone();
        for &(chi, chibar) in pairs.iter().rev() {
            acc = acc.berezin_slot(chibar)?;
            acc = acc.berezin_slot(chi)?;
        }
        Ok(acc)
    }

    /// exp of an even element with zero grade-0 part. Equals the finite series
    /// sum_k a^k/k!; computed as the product of (1 + term) factors, which is
    /// exact because even terms commute and a single monomial squares to zero.
    pub fn exp_nilpotent(&self) -> Result<Element, CoreError> {
        if !self.constant.is_zero() || !self.is_even() {
            return Err(CoreError::OddOrConstantPart);
        }
        let mut acc: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        acc.insert(Monomial::ONE, Scalar::one());
        for (m, c) in &self.terms {
            let additions: Vec<(Monomial, Scalar)> = acc
                .iter()
                .filter(|(am, _)| am.0 & m.0 == 0)
                .map(|(am, ac)| {
                    let sign = am.merge_sign(*m);
                    let mut nc = ac * c;
                    if sign < 0 {
                        nc = -nc;
                    }
                    (Monomial(am.0 | m.0), nc)
                })
                .collect();
            for (nm, nc) in additions {
                accumulate(&mut acc, nm, nc);
            }
        }
        let constant = GrandConstant::from_rational(
            acc.remove(&Monomial::ONE).unwrap_or_else(Scalar::zero),
        );
        Ok(Element {
            layout: self.layout.clone(),
            terms: acc,
            constant,
        })
    }

    /// ln(1 + a) for an even element a with zero grade-0 part, as the finite
    /// alternating series.
    pub fn log_one_plus(&self) -> Result<Element, CoreError> {
        if !self.constant.is_zero() || !self.is_even() {
            return Err(CoreError::OddOrConstantPart);
        }
        let mut result = Element::zero(&self.layout);
        let mut power = self.clone();
        let mut k: i64 = 1;
        let max_k = (self.layout.slot_count() as i64) / 2 + 1;
        while !power.is_zero() && k <= max_k {
            let coeff = Scalar::new(
                if k % 2 == 1 { 1.into() } else { (-1).into() },
                k.into(),
            );
            result = result.add(&power.scale(&coeff))?;
            power = power.mul(self)?;
            k += 1;
        }
        Ok(result)
    }

    /// Replaces generators by purely odd images (identity on slots outside the
    /// map). Images must live in the same layout and avoid the substituted
    /// slots.
    pub fn substitute_odd(&self, images: &BTreeMap<u8, Element>) -> Result<Element, CoreError> {
        let mut domain = 0u32;
        for (&slot, image) in images {
            if slot >= self.layout.slot_count() {
                return Err(CoreError::UnknownGenerator);
            }
            self.check_layout(image)?;
            if !image.is_pure_odd() {
                return Err(CoreError::NonOddImage);
            }
            domain |= 1u32 << slot;
        }
        for image in images.values() {
            for (m, _) in image.terms() {
                if m.0 & domain != 0 {
                    return Err(CoreError::DomainOverlap);
                }
            }
        }
        let mut result = Element::from_constant(&self.layout, self.constant.clone());
        for (m, c) in &self.terms {
            let mut factor = Element::from_rational(&self.layout, c.clone());
            for slot in m.slots() {
                let g = match images.get(&slot) {
                    Some(image) => image.clone(),
                    None => Element::term(&self.layout, Monomial(1u32 << slot), Scalar::one()),
                };
                factor = factor.mul(&g)?;
            }
            result = result.add(&factor)?;
        }
        Ok(result)
    }

    /// Carries the element into another layout that contains every sector the
    /// element actually uses, matching generators by (sector, index). The
    /// shared sectors must appear in the same relative order so that canonical
    /// monomial signs are preserved.
    pub fn transfer_to(&self, target: &AlgebraLayout) -> Result<Element, CoreError> {
        if target.n() != self.layout.n() {
            return Err(CoreError::LayoutMismatch);
        }
        let mut used = 0u32;
        for m in self.terms.keys() {
            used |= m.0;
        }
        let mut map = BTreeMap::new();
        let mut last_new: i32 = -1;
        for slot in Monomial(used).slots() {
            let (sector, index) = self.layout.generator_at(slot)?;
            let new_slot = target.slot(sector, index)?;
            if (new_slot as i32) <= last_new {
                return Err(CoreError::InvalidLayout(
                    "sector order differs between layouts",
                ));
            }
            last_new = new_slot as i32;
            map.insert(slot, new_slot);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut nm = 0u32;
                for s in m.slots() {
                    nm |= 1u32 << map[&s];
                }
                (Monomial(nm), c.clone())
            })
            .collect();
        Ok(Element {
            layout: target.clone(),
            terms,
            constant: self.constant.clone(),
        })
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.constant.is_zero() {
            write!(f, "{}", self.constant)?;
            first = false;
        }
        for (m, c) in &self.terms {
            if first {
                write!(f, "{} {}", crate::scalar::rat_str(c), self.layout.describe(*m))?;
                first = false;
            } else {
                write!(f, " + {} {}", crate::scalar::rat_str(c), self.layout.describe(*m))?;
            }
        }
        Ok(())
    }
}

/// Moves any grade-0 entry out of a raw term map into the constant so that
/// `terms` never carries the empty monomial.
fn split_constant(layout: &AlgebraLayout, mut terms: BTreeMap<Monomial, Scalar>) -> Element {
    let constant = GrandConstant::from_rational(
        terms.remove(&Monomial::ONE).unwrap_or_else(Scalar::zero),
    );
    Element {
        layout: layout.clone(),
        terms,
        constant,
    }
}

fn accumulate(terms: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += &c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn scale_terms_into(
    out: &mut BTreeMap<Monomial, Scalar>,
    terms: &BTreeMap<Monomial, Scalar>,
    by: &GrandConstant,
) {
    if terms.is_empty() {
        return;
    }
    assert!(
        by.is_rational_only(),
        "formal log constant multiplying monomial terms"
    );
    let r = by.rational_part();
    for (m, c) in terms {
        accumulate(out, *m, c * r);
    }
}
