use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub(crate) type Limbs = SmallVec<[u64; 1]>;

pub(crate) fn limb_count(len: usize) -> usize {
    len.div_ceil(64)
}

/// A vector in GF(2)^n. Coordinate `i` (0-based) is bit `i % 64` of limb
/// `i / 64`, so coordinate 1 of the 1-indexed text form is the lowest bit.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryWord {
    len: usize,
    limbs: Limbs,
}

impl BinaryWord {
    pub fn zeros(len: usize) -> Self {
        BinaryWord {
            len,
            limbs: SmallVec::from_elem(0, limb_count(len)),
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut w = Self::zeros(len);
        for i in 0..len {
            w.set(i, true);
        }
        w
    }

    /// Builds a word from 0/1 entries. Any nonzero entry counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut w = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                w.set(i, true);
            }
        }
        w
    }

    /// Builds a word from a 0-based support.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut w = Self::zeros(len);
        for &i in support {
            assert!(i < len, "support index {i} out of range for length {len}");
            w.set(i, true);
        }
        w
    }

    /// Parses a string of '0'/'1' characters, ignoring whitespace.
    pub fn parse(s: &str) -> Option<Self> {
        let mut bits = Vec::new();
        for ch in s.chars() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                c if c.is_whitespace() => {}
                _ => return None,
            }
        }
        Some(Self::from_bits(&bits))
    }

    pub(crate) fn from_limbs(len: usize, limbs: Limbs) -> Self {
        debug_assert_eq!(limbs.len(), limb_count(len));
        BinaryWord { len, limbs }
    }

    /// A word of length at most 64 from its bit pattern.
    pub fn from_u64(len: usize, bits: u64) -> Self {
        assert!(len <= 64);
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        let mut limbs = Limbs::new();
        if len > 0 {
            limbs.push(bits & mask);
        }
        BinaryWord { len, limbs }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub(crate) fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    /// The bit pattern of a word of length at most 64.
    pub fn as_u64(&self) -> u64 {
        assert!(self.len <= 64, "word of length {} does not fit in u64", self.len);
        self.limbs.first().copied().unwrap_or(0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.limbs[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let bit = 1u64 << (i % 64);
        if value {
            self.limbs[i / 64] |= bit;
        } else {
            self.limbs[i / 64] &= !bit;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.limbs[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// Coordinatewise product (the product in the ring GF(2)^n).
    pub fn and(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len);
        BinaryWord {
            len: self.len,
            limbs: self.limbs.iter().zip(&other.limbs).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &Self) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a ^= b;
        }
    }

    /// |x ∩ y|, the number of coordinates where both words are 1.
    pub fn intersection_count(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len);
        self.limbs
            .iter()
            .zip(&other.limbs)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Standard inner product ⟨x, y⟩ = |x ∩ y| mod 2.
    pub fn dot(&self, other: &Self) -> bool {
        self.intersection_count(other) % 2 == 1
    }

    /// True if the support of `self` is contained in the support of `other`.
    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len);
        self.limbs.iter().zip(&other.limbs).all(|(a, b)| a & !b == 0)
    }

    /// 0-based positions of the set bits, increasing.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (li, &limb) in self.limbs.iter().enumerate() {
            let mut l = limb;
            while l != 0 {
                let tz = l.trailing_zeros() as usize;
                out.push(li * 64 + tz);
                l &= l - 1;
            }
        }
        out
    }

    /// Lowest set coordinate.
    pub fn leading(&self) -> Option<usize> {
        for (li, &l) in self.limbs.iter().enumerate() {
            if l != 0 {
                return Some(li * 64 + l.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Moves coordinate `i` to `images[i]`.
    pub fn permuted(&self, images: &[usize]) -> Self {
        assert_eq!(images.len(), self.len);
        let mut out = Self::zeros(self.len);
        for i in self.support() {
            out.set(images[i], true);
        }
        out
    }

    /// The doubling map d: (c1,…,cn) ↦ (c1,c1,…,cn,cn).
    pub fn d_map(&self) -> Self {
        let mut out = Self::zeros(2 * self.len);
        for i in self.support() {
            out.set(2 * i, true);
            out.set(2 * i + 1, true);
        }
        out
    }

    /// The map e: (c1,…,cn) ↦ (0,c1,0,c2,…,0,cn).
    pub fn e_map(&self) -> Self {
        let mut out = Self::zeros(2 * self.len);
        for i in self.support() {
            out.set(2 * i + 1, true);
        }
        out
    }

    /// Concatenation (self | other).
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.len + other.len);
        for i in self.support() {
            out.set(i, true);
        }
        for i in other.support() {
            out.set(self.len + i, true);
        }
        out
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

/// Words are ordered lexicographically by support: at the first coordinate
/// where they differ, the word carrying a 1 comes first. Shorter words sort
/// before longer ones.
impl Ord for BinaryWord {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len.cmp(&other.len) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.limbs.iter().zip(&other.limbs) {
            let diff = a ^ b;
            if diff != 0 {
                let low = diff & diff.wrapping_neg();
                return if a & low != 0 { Ordering::Less } else { Ordering::Greater };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for BinaryWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_and_intersection() {
        let x = BinaryWord::parse("1101 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 1").unwrap();
        assert_eq!(x.len(), 65);
        assert_eq!(x.weight(), 4);
        let y = BinaryWord::parse("0101 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 0000 1").unwrap();
        assert_eq!(x.intersection_count(&y), 3);
        assert_eq!(x.and(&y).weight(), 3);
        assert_eq!(BinaryWord::zeros(7).weight(), 0);
    }

    #[test]
    fn support_order() {
        let mut words: Vec<_> = ["0011", "1100", "0101", "1010", "0110", "1001"]
            .iter()
            .map(|s| BinaryWord::parse(s).unwrap())
            .collect();
        words.sort();
        let sorted: Vec<String> = words.iter().map(|w| w.to_string()).collect();
        assert_eq!(sorted, ["1100", "1010", "1001", "0110", "0101", "0011"]);
    }

    #[test]
    fn doubling_maps() {
        let x = BinaryWord::parse("11").unwrap();
        assert_eq!(x.d_map().to_string(), "1111");
        assert_eq!(x.e_map().to_string(), "0101");
        let y = BinaryWord::parse("1011").unwrap();
        assert_eq!(y.d_map().weight(), 2 * y.weight());
        assert_eq!(y.e_map().weight(), y.weight());
    }
}
