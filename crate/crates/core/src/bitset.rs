use std::cmp::Ordering;
use std::fmt;

/// Fixed-length bit vector over element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns true if the bit was newly set.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let w = &mut self.words[i / 64];
        let mask = 1u64 << (i % 64);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + b)
            })
        })
    }

    /// Ordering of equal-sized sets by their sorted member lists: the set
    /// holding the smallest element of the symmetric difference comes first.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.words.iter().zip(&other.words) {
            let diff = a ^ b;
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if a & low != 0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                };
            }
        }
        Ordering::Equal
    }

    /// Hex rendering with bit `i` standing for element `i`, most significant
    /// digit first and no leading zeros.
    pub fn to_hex(&self) -> String {
        let mut out = String::new();
        for w in self.words.iter().rev() {
            if out.is_empty() {
                if *w != 0 {
                    out.push_str(&format!("{w:x}"));
                }
            } else {
                out.push_str(&format!("{w:016x}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn from_hex(hex: &str, len: usize) -> Option<Self> {
        let hex = hex.trim().trim_start_matches("0x");
        if hex.is_empty() {
            return None;
        }
        let mut s = Self::new(len);
        for (pos, ch) in hex.chars().rev().enumerate() {
            let nibble = ch.to_digit(16)? as usize;
            for bit in 0..4 {
                if nibble >> bit & 1 == 1 {
                    let i = pos * 4 + bit;
                    if i >= len {
                        return None;
                    }
                    s.insert(i);
                }
            }
        }
        Some(s)
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn hex_examples() {
        let mut s = BitSet::new(12);
        s.insert(0);
        s.insert(6);
        assert_eq!(s.to_hex(), "41");
        assert_eq!(BitSet::new(3).to_hex(), "0");
        assert!(BitSet::from_hex("1000", 12).is_none());
    }

    #[test]
    fn canonical_order_follows_member_lists() {
        let mk = |xs: &[usize]| {
            let mut s = BitSet::new(130);
            xs.iter().for_each(|&x| {
                s.insert(x);
            });
            s
        };
        assert_eq!(mk(&[0, 2]).canonical_cmp(&mk(&[0, 3])), Ordering::Less);
        assert_eq!(
            mk(&[0, 129]).canonical_cmp(&mk(&[0, 65])),
            Ordering::Greater
        );
    }

    proptest! {
        #[test]
        fn hex_round_trip(len in 1usize..300, bits in proptest::collection::vec(any::<usize>(), 0..40)) {
            let mut s = BitSet::new(len);
            for b in bits {
                s.insert(b % len);
            }
            prop_assert_eq!(BitSet::from_hex(&s.to_hex(), len), Some(s));
        }
    }
}
