//! Online suffix automaton over a small alphabet, used for maximum-order and
//! subword complexity.

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct SuffixAutomaton {
    alpha: usize,
    next: Vec<u32>,
    link: Vec<u32>,
    len: Vec<u32>,
    /// end position of the first occurrence
    firstpos: Vec<u32>,
    out: Vec<u16>,
    last: u32,
    size: usize,
}

/// A state that just gained a second distinct successor symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Branch {
    pub len: usize,
    /// end position of the earliest occurrence
    pub first_end: usize,
}

impl SuffixAutomaton {
    pub fn new(alpha: usize) -> Self {
        Self::with_capacity(alpha, 0)
    }

    pub fn with_capacity(alpha: usize, n: usize) -> Self {
        let cap = 2 * n + 1;
        let mut s = Self {
            alpha: alpha.max(1),
            next: Vec::with_capacity(cap * alpha.max(1)),
            link: Vec::with_capacity(cap),
            len: Vec::with_capacity(cap),
            firstpos: Vec::with_capacity(cap),
            out: Vec::with_capacity(cap),
            last: 0,
            size: 0,
        };
        s.new_state(0, NONE, 0);
        s
    }

    fn new_state(&mut self, len: u32, link: u32, firstpos: u32) -> u32 {
        self.next.extend(std::iter::repeat_n(NONE, self.alpha));
        self.link.push(link);
        self.len.push(len);
        self.firstpos.push(firstpos);
        self.out.push(0);
        (self.len.len() - 1) as u32
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn num_states(&self) -> usize {
        self.len.len()
    }

    #[inline]
    fn tr(&self, q: u32, c: usize) -> u32 {
        self.next[q as usize * self.alpha + c]
    }

    /// Appends a symbol (below the alphabet size). Returns the longest state
    /// that gains a second distinct successor, if any.
    pub fn extend(&mut self, c: u8) -> Option<Branch> {
        let c = c as usize;
        assert!(c < self.alpha, "symbol outside the alphabet");
        let pos = self.size as u32;
        self.size += 1;
        let cur = self.new_state(self.len[self.last as usize] + 1, NONE, pos);
        let mut branch = None;
        let mut p = self.last;
        while p != NONE && self.tr(p, c) == NONE {
            if branch.is_none() && self.out[p as usize] > 0 {
                branch = Some(Branch {
                    len: self.len[p as usize] as usize,
                    first_end: self.firstpos[p as usize] as usize,
                });
            }
            self.next[p as usize * self.alpha + c] = cur;
            self.out[p as usize] += 1;
            p = self.link[p as usize];
        }
        if p == NONE {
            self.link[cur as usize] = 0;
        } else {
            let q = self.tr(p, c);
            if self.len[p as usize] + 1 == self.len[q as usize] {
                self.link[cur as usize] = q;
            } else {
                let clone = self.new_state(
                    self.len[p as usize] + 1,
                    self.link[q as usize],
                    self.firstpos[q as usize],
                );
                let (a, qi, ci) = (self.alpha, q as usize, clone as usize);
                self.next.copy_within(qi * a..(qi + 1) * a, ci * a);
                self.out[ci] = self.out[qi];
                while p != NONE && self.tr(p, c) == q {
                    self.next[p as usize * a + c] = clone;
                    p = self.link[p as usize];
                }
                self.link[qi] = clone;
                self.link[cur as usize] = clone;
            }
        }
        self.last = cur;
        branch
    }

    /// Number of distinct factors of each length `1..=k_max`.
    pub fn factor_counts(&self, k_max: usize) -> Vec<u64> {
        let mut diff = vec![0i64; k_max + 2];
        for q in 1..self.len.len() {
            let lo = self.len[self.link[q] as usize] as usize + 1;
            let hi = (self.len[q] as usize).min(k_max);
            if lo <= hi {
                diff[lo] += 1;
                diff[hi + 1] -= 1;
            }
        }
        let mut out = Vec::with_capacity(k_max);
        let mut acc = 0i64;
        for d in diff.iter().take(k_max + 1).skip(1) {
            acc += d;
            out.push(acc as u64);
        }
        out
    }
}
