//! Fixed-capacity element sets used for subgroup bookkeeping.

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementSet {
    words: Vec<u64>,
}

impl ElementSet {
    pub fn new(capacity: usize) -> Self {
        ElementSet { words: vec![0; capacity.div_ceil(64)] }
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(capacity: usize, it: I) -> Self {
        let mut s = Self::new(capacity);
        for x in it {
            s.insert(x);
        }
        s
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.words[x / 64] >> (x % 64) & 1 == 1
    }

    /// Returns true if `x` was newly inserted.
    #[inline]
    pub fn insert(&mut self, x: usize) -> bool {
        let w = &mut self.words[x / 64];
        let bit = 1u64 << (x % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersect(&self, other: &ElementSet) -> ElementSet {
        ElementSet { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            })
        })
    }
}
