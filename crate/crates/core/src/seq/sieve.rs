//! Segmented sieve of Eratosthenes with a shared, growable cache of primes.

use std::sync::RwLock;

const SEGMENT: u64 = 1 << 18;

/// Primes in increasing order, grown segment by segment on demand.
/// Readers never block each other; growth takes the write lock.
#[derive(Debug, Default)]
pub struct PrimeCache {
    inner: RwLock<Sieved>,
}

#[derive(Debug, Default)]
struct Sieved {
    primes: Vec<u64>,
    /// everything below `limit` has been sieved
    limit: u64,
}

impl PrimeCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// The `n`-th prime, 0-indexed (`nth(0) == 2`).
    pub fn nth(&self, n: usize) -> u64 {
        {
            let guard = self.inner.read().expect("sieve lock poisoned");
            if let Some(&p) = guard.primes.get(n) {
                return p;
            }
        }
        let mut guard = self.inner.write().expect("sieve lock poisoned");
        while guard.primes.len() <= n {
            guard.grow();
        }
        guard.primes[n]
    }

    /// The first `count` primes.
    pub fn first(&self, count: usize) -> Vec<u64> {
        if count == 0 {
            return Vec::new();
        }
        self.nth(count - 1);
        let guard = self.inner.read().expect("sieve lock poisoned");
        guard.primes[..count].to_vec()
    }

    pub fn sieved_limit(&self) -> u64 {
        self.inner.read().expect("sieve lock poisoned").limit
    }
}

impl Sieved {
    fn grow(&mut self) {
        let lo = self.limit.max(2);
        let hi = lo + SEGMENT;
        let root = integer_sqrt(hi - 1);
        // base primes up to sqrt(hi) are always already known once the first
        // segment is done, except while sieving that first segment itself
        let base: Vec<u64> = if self.primes.last().is_some_and(|&p| p >= root) {
            self.primes
                .iter()
                .copied()
                .take_while(|&p| p <= root)
                .collect()
        } else {
            small_primes(root)
        };
        let mut composite = vec![false; (hi - lo) as usize];
        for &p in &base {
            let start = (p * p).max(lo.div_ceil(p) * p);
            let mut m = start;
            while m < hi {
                composite[(m - lo) as usize] = true;
                m += p;
            }
        }
        self.primes.extend(
            composite
                .iter()
                .enumerate()
                .filter(|(_, &c)| !c)
                .map(|(i, _)| lo + i as u64),
        );
        self.limit = hi;
    }
}

fn integer_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Plain sieve for the base primes.
fn small_primes(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}
