//! Finite Boolean algebras as powerset algebras on `n` atoms.
//!
//! An element is the set of atoms below it, stored as a bitmask, so join,
//! meet and complement are single word operations and the whole carrier of
//! `2^n` elements can be enumerated cheaply. Every finite Boolean algebra is
//! isomorphic to a powerset algebra, so exhaustive checks over these carriers
//! lose no generality.

use thiserror::Error;

/// Hard cap on the number of atoms; keeps `2^n` carriers enumerable.
pub const MAX_ATOMS: u8 = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoolAlgError {
    #[error("atom count must be between 1 and {MAX_ATOMS}, got {0}")]
    AtomCountOutOfRange(u8),
    #[error("mask {mask:#x} is out of range for an algebra on {atoms} atoms")]
    MaskOutOfRange { mask: u32, atoms: u8 },
}

/// The powerset Boolean algebra on a fixed number of atoms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoolAlgebra {
    atom_count: u8,
}

impl BoolAlgebra {
    pub fn new(atom_count: u8) -> Result<Self, BoolAlgError> {
        if atom_count == 0 || atom_count > MAX_ATOMS {
            return Err(BoolAlgError::AtomCountOutOfRange(atom_count));
        }
        Ok(Self { atom_count })
    }

    pub fn atom_count(&self) -> u8 {
        self.atom_count
    }

    /// Carrier size, `2^atom_count`.
    pub fn size(&self) -> usize {
        1usize << self.atom_count
    }

    fn full_mask(&self) -> u32 {
        (1u32 << self.atom_count) - 1
    }

    pub fn element(&self, mask: u32) -> Result<Element, BoolAlgError> {
        if mask > self.full_mask() {
            return Err(BoolAlgError::MaskOutOfRange {
                mask,
                atoms: self.atom_count,
            });
        }
        Ok(Element {
            atoms: self.atom_count,
            mask,
        })
    }

    pub fn bottom(&self) -> Element {
        Element {
            atoms: self.atom_count,
            mask: 0,
        }
    }

    pub fn top(&self) -> Element {
        Element {
            atoms: self.atom_count,
            mask: self.full_mask(),
        }
    }

    /// All carrier elements in ascending mask order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        let atoms = self.atom_count;
        (0..=self.full_mask()).map(move |mask| Element { atoms, mask })
    }
}

/// An element of a [`BoolAlgebra`], identified by its atom mask.
///
/// Binary operations and equality are only defined between elements of the
/// same algebra; mixing algebras is a caller bug and panics rather than
/// silently returning `false`.
#[derive(Debug, Clone, Copy, Eq, Hash)]
pub struct Element {
    atoms: u8,
    mask: u32,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        assert_eq!(
            self.atoms, other.atoms,
            "comparing elements of different Boolean algebras"
        );
        self.mask == other.mask
    }
}

impl Element {
    pub fn mask(&self) -> u32 {
        self.mask
    }

    pub fn algebra(&self) -> BoolAlgebra {
        BoolAlgebra {
            atom_count: self.atoms,
        }
    }

    fn check_same(&self, other: &Element) {
        assert_eq!(
            self.atoms, other.atoms,
            "operands belong to different Boolean algebras"
        );
    }

    pub fn join(&self, other: &Element) -> Element {
        self.check_same(other);
        Element {
            atoms: self.atoms,
            mask: self.mask | other.mask,
        }
    }

    pub fn meet(&self, other: &Element) -> Element {
        self.check_same(other);
        Element {
            atoms: self.atoms,
            mask: self.mask & other.mask,
        }
    }

    pub fn complement(&self) -> Element {
        let full = (1u32 << self.atoms) - 1;
        Element {
            atoms: self.atoms,
            mask: full ^ self.mask,
        }
    }

    pub fn is_bottom(&self) -> bool {
        self.mask == 0
    }

    pub fn is_top(&self) -> bool {
        self.mask == (1u32 << self.atoms) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn atom_count_bounds() {
        assert!(BoolAlgebra::new(0).is_err());
        assert!(BoolAlgebra::new(17).is_err());
        assert!(BoolAlgebra::new(1).is_ok());
        assert!(BoolAlgebra::new(16).is_ok());
    }

    #[test]
    fn enumerate_sizes_and_order() {
        let a1 = BoolAlgebra::new(1).unwrap();
        let masks: Vec<u32> = a1.elements().map(|e| e.mask()).collect();
        assert_eq!(masks, vec![0, 1]);

        let a2 = BoolAlgebra::new(2).unwrap();
        assert_eq!(a2.elements().count(), 4);

        let a3 = BoolAlgebra::new(3).unwrap();
        assert_eq!(a3.top().mask(), 0b111);
        assert_eq!(a3.bottom().mask(), 0);
    }

    #[test]
    fn join_meet_complement_basics() {
        let a2 = BoolAlgebra::new(2).unwrap();
        let x = a2.element(0b01).unwrap();
        let y = a2.element(0b10).unwrap();
        assert_eq!(x.join(&y).mask(), 0b11);
        assert_eq!(x.meet(&y).mask(), 0b00);
        assert_eq!(x.complement().mask(), 0b10);
        assert_eq!(x.join(&a2.bottom()), x);
        assert_eq!(x.meet(&a2.top()), x);
        assert_eq!(x.meet(&x.complement()), a2.bottom());

        let a3 = BoolAlgebra::new(3).unwrap();
        let u = a3.element(0b011).unwrap();
        let v = a3.element(0b110).unwrap();
        assert_eq!(u.join(&v).mask(), 0b111);
    }

    #[test]
    fn mask_out_of_range() {
        let a2 = BoolAlgebra::new(2).unwrap();
        assert!(a2.element(0b100).is_err());
    }

    #[test]
    #[should_panic(expected = "different Boolean algebras")]
    fn mixed_algebra_join_panics() {
        let a1 = BoolAlgebra::new(1).unwrap();
        let a2 = BoolAlgebra::new(2).unwrap();
        let _ = a1.top().join(&a2.top());
    }

    #[test]
    #[should_panic(expected = "different Boolean algebras")]
    fn mixed_algebra_eq_panics() {
        let a1 = BoolAlgebra::new(1).unwrap();
        let a2 = BoolAlgebra::new(2).unwrap();
        let _ = a1.bottom() == a2.bottom();
    }

    /// Exhaustive Boolean-algebra laws for n = 1..4.
    #[test]
    fn lattice_laws_exhaustive() {
        for n in 1..=4u8 {
            let alg = BoolAlgebra::new(n).unwrap();
            let elems: Vec<Element> = alg.elements().collect();
            assert_eq!(elems.len(), 1 << n);
            for &x in &elems {
                assert_eq!(x.complement().complement(), x);
                assert_eq!(x.join(&x.complement()), alg.top());
                assert_eq!(x.meet(&x.complement()), alg.bottom());
                for &y in &elems {
                    assert_eq!(x.join(&y), y.join(&x));
                    assert_eq!(x.meet(&y), y.meet(&x));
                    // absorption
                    assert_eq!(x.join(&x.meet(&y)), x);
                    assert_eq!(x.meet(&x.join(&y)), x);
                    // De Morgan
                    assert_eq!(
                        x.join(&y).complement(),
                        x.complement().meet(&y.complement())
                    );
                    assert_eq!(
                        x.meet(&y).complement(),
                        x.complement().join(&y.complement())
                    );
                    for &z in &elems {
                        assert_eq!(x.join(&y).join(&z), x.join(&y.join(&z)));
                        assert_eq!(x.meet(&y).meet(&z), x.meet(&y.meet(&z)));
                        assert_eq!(
                            x.meet(&y.join(&z)),
                            x.meet(&y).join(&x.meet(&z))
                        );
                    }
                }
            }
        }
    }

    proptest! {
        #[test]
        fn distributivity_holds_for_larger_algebras(
            n in 5u8..=10,
            xm in any::<u32>(), ym in any::<u32>(), zm in any::<u32>()
        ) {
            let alg = BoolAlgebra::new(n).unwrap();
            let full = (1u32 << n) - 1;
            let x = alg.element(xm & full).unwrap();
            let y = alg.element(ym & full).unwrap();
            let z = alg.element(zm & full).unwrap();
            prop_assert_eq!(
                x.meet(&y.join(&z)),
                x.meet(&y).join(&x.meet(&z))
            );
            prop_assert_eq!(
                x.join(&y).complement(),
                x.complement().meet(&y.complement())
            );
        }
    }
}
