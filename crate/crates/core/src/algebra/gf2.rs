//! Bit-packed vectors over GF(2), 64 coefficients per word.

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + t)
            })
        })
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// `self ^= other << shift`, truncated to `self.len()`.
    pub fn xor_shifted(&mut self, other: &BitVec, shift: usize) {
        let ws = shift / 64;
        let bs = shift % 64;
        let n = self.words.len();
        if ws >= n {
            return;
        }
        if bs == 0 {
            for i in ws..n {
                if let Some(&w) = other.words.get(i - ws) {
                    self.words[i] ^= w;
                }
            }
        } else {
            for i in ws..n {
                let lo = other.words.get(i - ws).copied().unwrap_or(0) << bs;
                let hi = if i > ws {
                    other.words.get(i - ws - 1).copied().unwrap_or(0) >> (64 - bs)
                } else {
                    0
                };
                self.words[i] ^= lo | hi;
            }
        }
        self.mask_tail();
    }

    fn mask_tail(&mut self) {
        let r = self.len % 64;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }

    /// Product of two power series modulo `x^len`.
    pub fn mul_trunc(&self, other: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(self.len);
        let (sparse, dense) = if self.count_ones() <= other.count_ones() {
            (self, other)
        } else {
            (other, self)
        };
        for i in sparse.ones() {
            out.xor_shifted(dense, i);
        }
        out
    }

    /// The 64 bits starting at bit `pos`; bits past the end read as zero.
    #[inline]
    pub fn word_at(&self, pos: usize) -> u64 {
        let w = pos / 64;
        let b = pos % 64;
        let lo = self.words.get(w).copied().unwrap_or(0);
        if b == 0 {
            lo
        } else {
            let hi = self.words.get(w + 1).copied().unwrap_or(0);
            (lo >> b) | (hi << (64 - b))
        }
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }

    pub fn truncate(&self, len: usize) -> BitVec {
        let mut v = BitVec::zeros(len.min(self.len));
        let n = v.words.len();
        v.words.copy_from_slice(&self.words[..n]);
        v.mask_tail();
        v
    }
}
