//! Generator layouts and basis monomials.
//!
//! A layout fixes an ordered list of generator sectors, each contributing `n`
//! slots; a monomial is the set of slots it uses, encoded as a bitmask whose
//! ascending bit order is the canonical generator order.

use crate::CoreError;

/// Named generator families. The conventional pairing is bar/unbar: Psi are
/// the external variables, Chi the integration variables, Eta the sources.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Sector {
    PsiBar,
    Psi,
    ChiBar,
    Chi,
    EtaBar,
    Eta,
}

impl Sector {
    pub fn label(self) -> &'static str {
        match self {
            Sector::PsiBar => "Pb",
            Sector::Psi => "P",
            Sector::ChiBar => "Xb",
            Sector::Chi => "X",
            Sector::EtaBar => "Eb",
            Sector::Eta => "E",
        }
    }
}

/// Maximum total slot count an element mask can address.
pub const MAX_SLOTS: u8 = 24;

/// An ordered family of generator sectors with `n` slots each.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraLayout {
    n: u8,
    sectors: Vec<Sector>,
}

impl AlgebraLayout {
    /// Layout with the given sectors in the given order. Slot indices run
    /// sector by sector, 1-based within a sector.
    pub fn new(n: u8, sectors: &[Sector]) -> Result<Self, CoreError> {
        if n == 0 {
            return Err(CoreError::InvalidLayout("n must be positive"));
        }
        for (i, s) in sectors.iter().enumerate() {
            if sectors[..i].contains(s) {
                return Err(CoreError::InvalidLayout("sector listed twice"));
            }
        }
        if sectors.is_empty() {
            return Err(CoreError::InvalidLayout("no sectors"));
        }
        let total = (n as usize) * sectors.len();
        if total > MAX_SLOTS as usize {
            return Err(CoreError::InvalidLayout("more than 24 slots"));
        }
        Ok(AlgebraLayout {
            n,
            sectors: sectors.to_vec(),
        })
    }

    /// The plain action layout over (PsiBar, Psi).
    pub fn action(n: u8) -> Self {
        Self::new(n, &[Sector::PsiBar, Sector::Psi]).expect("action layout")
    }

    /// Layout for transform work over (ChiBar, Chi, EtaBar, Eta).
    pub fn transform(n: u8) -> Self {
        Self::new(n, &[Sector::ChiBar, Sector::Chi, Sector::EtaBar, Sector::Eta])
            .expect("transform layout")
    }

    /// Layout holding sources next to external variables, for the Legendre
    /// step: (PsiBar, Psi, EtaBar, Eta).
    pub fn legendre(n: u8) -> Self {
        Self::new(n, &[Sector::PsiBar, Sector::Psi, Sector::EtaBar, Sector::Eta])
            .expect("legendre layout")
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn sectors(&self) -> &[Sector] {
        &self.sectors
    }

    pub fn slot_count(&self) -> u8 {
        self.n * self.sectors.len() as u8
    }

    pub fn has_sector(&self, s: Sector) -> bool {
        self.sectors.contains(&s)
    }

    /// Slot of generator `index` (1-based) in `sector`.
    pub fn slot(&self, sector: Sector, index: u8) -> Result<u8, CoreError> {
        if index == 0 || index > self.n {
            return Err(CoreError::UnknownGenerator);
        }
        let pos = self
            .sectors
            .iter()
            .position(|&s| s == sector)
            .ok_or(CoreError::UnknownGenerator)?;
        Ok(pos as u8 * self.n + index - 1)
    }

    /// Inverse of [`slot`]: the (sector, 1-based index) at a slot.
    pub fn generator_at(&self, slot: u8) -> Result<(Sector, u8), CoreError> {
        if slot >= self.slot_count() {
            return Err(CoreError::UnknownGenerator);
        }
        let sector = self.sectors[(slot / self.n) as usize];
        Ok((sector, slot % self.n + 1))
    }

    /// Bitmask over all slots of a sector.
    pub fn sector_mask(&self, sector: Sector) -> Result<u32, CoreError> {
        let base = self.slot(sector, 1)?;
        Ok(((1u32 << self.n) - 1) << base)
    }

    /// Mask for a list of generators; rejects duplicates.
    pub fn mask_of(&self, generators: &[(Sector, u8)]) -> Result<u32, CoreError> {
        let mut mask = 0u32;
        for &(sector, index) in generators {
            let bit = 1u32 << self.slot(sector, index)?;
            if mask & bit != 0 {
                return Err(CoreError::DuplicateSlot);
            }
            mask |= bit;
        }
        Ok(mask)
    }

    pub fn monomial(&self, generators: &[(Sector, u8)]) -> Result<Monomial, CoreError> {
        Ok(Monomial(self.mask_of(generators)?))
    }

    /// Human-readable name of a monomial, generators in canonical order.
    pub fn describe(&self, m: Monomial) -> String {
        if m.0 == 0 {
            return "1".to_string();
        }
        let mut out = String::new();
        for slot in m.slots() {
            let (sector, index) = self.generator_at(slot).expect("slot in layout");
            out.push_str(sector.label());
            out.push_str(&index.to_string());
            out.push(' ');
        }
        out.trim_end().to_string()
    }
}

/// A basis monomial: the set of generator slots it uses, in canonical
/// ascending order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Monomial(pub u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn degree(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_even(self) -> bool {
        self.degree() % 2 == 0
    }

    pub fn contains_slot(self, slot: u8) -> bool {
        self.0 & (1u32 << slot) != 0
    }

    /// Ascending slot indices.
    pub fn slots(self) -> impl Iterator<Item = u8> {
        let mask = self.0;
        (0..32u8).filter(move |s| mask & (1u32 << s) != 0)
    }

    /// Sign of merging two disjoint masks into canonical order: parity of the
    /// number of pairs (a in self, b in other) with a > b.
    pub fn merge_sign(self, other: Monomial) -> i8 {
        debug_assert_eq!(self.0 & other.0, 0);
        let mut inversions = 0u32;
        for b in other.slots() {
            inversions += (self.0 >> (b + 1)).count_ones();
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Sign of commuting `slot` to the leftmost position of this monomial.
    pub fn sign_to_front(self, slot: u8) -> i8 {
        debug_assert!(self.contains_slot(slot));
        let below = self.0 & ((1u32 << slot) - 1);
        if below.count_ones() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slots_are_sector_blocks() {
        let l = AlgebraLayout::transform(3);
        assert_eq!(l.slot_count(), 12);
        assert_eq!(l.slot(Sector::ChiBar, 1).unwrap(), 0);
        assert_eq!(l.slot(Sector::Chi, 3).unwrap(), 5);
        assert_eq!(l.slot(Sector::EtaBar, 2).unwrap(), 7);
        assert_eq!(l.slot(Sector::Eta, 1).unwrap(), 9);
        assert_eq!(l.generator_at(7).unwrap(), (Sector::EtaBar, 2));
        assert!(l.slot(Sector::Psi, 1).is_err());
        assert!(l.slot(Sector::Chi, 4).is_err());
    }

    #[test]
    fn layout_bounds() {
        assert!(AlgebraLayout::new(0, &[Sector::Psi]).is_err());
        assert!(AlgebraLayout::new(5, &[]).is_err());
        assert!(AlgebraLayout::new(
            5,
            &[Sector::PsiBar, Sector::Psi, Sector::ChiBar, Sector::Chi, Sector::EtaBar]
        )
        .is_err());
        assert!(AlgebraLayout::new(4, &[Sector::Psi, Sector::Psi]).is_err());
        assert_eq!(AlgebraLayout::transform(5).slot_count(), 20);
    }

    #[test]
    fn duplicate_generators_rejected() {
        let l = AlgebraLayout::action(2);
        assert_eq!(
            l.mask_of(&[(Sector::Psi, 1), (Sector::Psi, 1)]),
            Err(CoreError::DuplicateSlot)
        );
    }

    #[test]
    fn merge_sign_counts_inversions() {
        let a = Monomial(0b0100);
        let b = Monomial(0b0010);
        assert_eq!(a.merge_sign(b), -1);
        assert_eq!(b.merge_sign(a), 1);
        let c = Monomial(0b1001);
        let d = Monomial(0b0110);
        assert_eq!(c.merge_sign(d), 1);
    }

    #[test]
    fn sign_to_front_parity() {
        let m = Monomial(0b1011);
        assert_eq!(m.sign_to_front(0), 1);
        assert_eq!(m.sign_to_front(1), -1);
        assert_eq!(m.sign_to_front(3), 1);
    }
}
