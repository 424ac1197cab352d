//! Elements of V(R) = (R/R^7)^6 / (R/R^7): six unit-class slots modulo the
//! diagonal.  The canonical representative subtracts the sixth slot from
//! all six, leaving five blocks of coordinates (block width 4 for the
//! global space, 8 for the local one).

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VElement {
    /// Coordinates per slot of the chosen class basis.
    pub block: usize,
    /// 5 * block entries: slots 1..5 after subtracting slot 6.
    pub coords: Vec<u8>,
}

impl VElement {
    /// Quotient the raw 6-slot tuple by the diagonal.
    pub fn from_slots(block: usize, slots: &[Vec<u8>; 6]) -> Self {
        for s in slots {
            assert_eq!(s.len(), block);
        }
        let mut coords = Vec::with_capacity(5 * block);
        for slot in slots.iter().take(5) {
            for j in 0..block {
                coords.push((slot[j] + 7 - slots[5][j] % 7) % 7);
            }
        }
        VElement { block, coords }
    }

    pub fn dim(&self) -> usize {
        5 * self.block
    }

    pub fn add(&self, rhs: &VElement) -> VElement {
        assert_eq!(self.block, rhs.block);
        VElement {
            block: self.block,
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| (a + b) % 7)
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}
