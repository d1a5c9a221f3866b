use std::fmt;

use bitvec::vec::BitVec;

/// A subset of `0..universe`, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(BitVec);

impl Subset {
    pub fn empty(universe: usize) -> Self {
        Subset(BitVec::repeat(false, universe))
    }

    pub fn full(universe: usize) -> Self {
        Subset(BitVec::repeat(true, universe))
    }

    /// # Panics
    ///
    /// Panics if an index is outside the universe.
    pub fn from_indices(universe: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Subset whose members are the set bits of `mask`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        Self::from_indices(universe, (0..universe.min(64)).filter(|i| mask >> i & 1 == 1))
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.get(i).is_some_and(|b| *b)
    }

    pub fn insert(&mut self, i: usize) {
        self.0.set(i, true);
    }

    pub fn remove(&mut self, i: usize) {
        self.0.set(i, false);
    }

    pub fn toggle(&mut self, i: usize) {
        let v = self.contains(i);
        self.0.set(i, !v);
    }

    pub fn toggled(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.toggle(i);
        s
    }

    pub fn count(&self) -> usize {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0.not_any()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter_ones()
    }

    pub fn complement(&self) -> Self {
        Subset(!self.0.clone())
    }

    /// `1` for members, `0` otherwise, index 0 first.
    pub fn to_bitstring(&self) -> String {
        self.0.iter().map(|b| if *b { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut s = Subset::from_indices(5, [0, 3]);
        assert_eq!(s.to_bitstring(), "10010");
        assert_eq!(s.count(), 2);
        s.toggle(3);
        s.toggle(4);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 4]);
        assert_eq!(s.complement().to_bitstring(), "01110");
        assert!(!s.contains(7));
        assert!(Subset::empty(3).is_empty());
        assert_eq!(Subset::from_mask(4, 0b1010).to_bitstring(), "0101");
        assert_eq!(Subset::empty(0).to_bitstring(), "");
    }
}
