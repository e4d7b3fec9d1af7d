//! Base-k and Zeckendorf digit expansions.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Base-k expansion, least-significant digit first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitString {
    base: u32,
    digits: Vec<u32>,
}

impl DigitString {
    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<u32> {
        self.digits
    }

    pub fn value(&self) -> BigUint {
        self.digits
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, &d| acc * self.base + d)
    }
}

/// Digits of `n` in base `base`, least significant first; `digits(0, k)` is empty.
pub fn digits(n: u128, base: u32) -> Result<DigitString> {
    if base < 2 {
        return Err(Error::InvalidBase(base as u64));
    }
    let mut out = Vec::new();
    let mut m = n;
    let b = base as u128;
    while m > 0 {
        out.push((m % b) as u32);
        m /= b;
    }
    Ok(DigitString { base, digits: out })
}

pub fn digits_big(n: &BigUint, base: u32) -> Result<DigitString> {
    if base < 2 {
        return Err(Error::InvalidBase(base as u64));
    }
    if let Some(small) = n.to_u128() {
        return digits(small, base);
    }
    let digits = n.to_radix_le(base).into_iter().map(u32::from).collect();
    Ok(DigitString { base, digits })
}

/// Zeckendorf expansion: `n = sum e_i F_{i+2}` with no two adjacent ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeckendorfString {
    digits: Vec<u8>,
}

impl ZeckendorfString {
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub fn value(&self) -> BigUint {
        let mut a = BigUint::from(1u8); // F_2
        let mut b = BigUint::from(2u8); // F_3
        let mut total = BigUint::zero();
        for &e in &self.digits {
            if e == 1 {
                total += &a;
            }
            let next = &a + &b;
            a = std::mem::replace(&mut b, next);
        }
        total
    }

    /// Parity of the digit sum (the Zeckendorf analog of Thue-Morse).
    pub fn sum_mod2(&self) -> u8 {
        (self.digits.iter().map(|&e| e as u32).sum::<u32>() % 2) as u8
    }

    /// Parity of `sum e_i e_{i+2}`.
    pub fn gap2_mod2(&self) -> u8 {
        let count = self
            .digits
            .windows(3)
            .filter(|w| w[0] == 1 && w[2] == 1)
            .count();
        (count % 2) as u8
    }
}

/// Greedy Zeckendorf expansion (largest Fibonacci number first).
pub fn zeckendorf(n: u128) -> ZeckendorfString {
    // fibs[i] = F_{i+2}
    let mut fibs: Vec<u128> = vec![1, 2];
    while let Some(next) = fibs[fibs.len() - 1].checked_add(fibs[fibs.len() - 2]) {
        if next > n {
            break;
        }
        fibs.push(next);
    }
    while fibs.last().is_some_and(|&f| f > n) {
        fibs.pop();
    }
    let mut digits = vec![0u8; fibs.len()];
    let mut rest = n;
    for (i, &f) in fibs.iter().enumerate().rev() {
        if f <= rest {
            digits[i] = 1;
            rest -= f;
        }
    }
    debug_assert_eq!(rest, 0);
    while digits.last() == Some(&0) {
        digits.pop();
    }
    ZeckendorfString { digits }
}

pub fn zeckendorf_big(n: &BigUint) -> ZeckendorfString {
    if let Some(small) = n.to_u128() {
        return zeckendorf(small);
    }
    let mut fibs: Vec<BigUint> = vec![BigUint::from(1u8), BigUint::from(2u8)];
    loop {
        let next = &fibs[fibs.len() - 1] + &fibs[fibs.len() - 2];
        if &next > n {
            break;
        }
        fibs.push(next);
    }
    let mut digits = vec![0u8; fibs.len()];
    let mut rest = n.clone();
    for (i, f) in fibs.iter().enumerate().rev() {
        if *f <= rest {
            digits[i] = 1;
            rest -= f;
        }
    }
    while digits.last() == Some(&0) {
        digits.pop();
    }
    ZeckendorfString { digits }
}
