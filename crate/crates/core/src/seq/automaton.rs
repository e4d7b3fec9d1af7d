//! Deterministic finite automata with output (DFAO) over base-k digits.

use num_bigint::BigUint;

use super::digits::{digits, digits_big};
use crate::error::{Error, Result};

/// Order in which the base-k digits of `n` are fed to the automaton.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reading {
    /// Least significant digit first.
    Reverse,
    /// Most significant digit first.
    Direct,
}

/// A complete DFAO. States are `0..num_states`; state names are kept for display only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomatonSpec {
    base: u32,
    names: Vec<String>,
    /// `transition[state * base + digit]`
    transition: Vec<usize>,
    initial: usize,
    output: Vec<u8>,
    reading: Reading,
}

impl AutomatonSpec {
    /// `transitions[q][d]` is the target of state `q` on digit `d`.
    pub fn new(
        base: u32,
        names: Vec<String>,
        transitions: Vec<Vec<usize>>,
        initial: usize,
        output: Vec<u8>,
        reading: Reading,
    ) -> Result<Self> {
        if base < 2 {
            return Err(Error::InvalidBase(base as u64));
        }
        let n = transitions.len();
        if n == 0 {
            return Err(Error::InvalidAutomaton("no states".into()));
        }
        if names.len() != n || output.len() != n {
            return Err(Error::InvalidAutomaton(format!(
                "{} states but {} names and {} outputs",
                n,
                names.len(),
                output.len()
            )));
        }
        if initial >= n {
            return Err(Error::InvalidAutomaton(format!(
                "initial state {initial} out of range"
            )));
        }
        let mut flat = Vec::with_capacity(n * base as usize);
        for (q, row) in transitions.iter().enumerate() {
            if row.len() != base as usize {
                return Err(Error::InvalidAutomaton(format!(
                    "state {} has {} transitions, expected {}",
                    names[q],
                    row.len(),
                    base
                )));
            }
            for &t in row {
                if t >= n {
                    return Err(Error::InvalidAutomaton(format!(
                        "transition from {} to missing state {t}",
                        names[q]
                    )));
                }
                flat.push(t);
            }
        }
        Ok(Self {
            base,
            names,
            transition: flat,
            initial,
            output,
            reading,
        })
    }

    /// Builds an automaton from single-letter state labels, e.g.
    /// `("A", [("0", "A"), ("1", "B")], 0)`.
    pub fn from_table(base: u32, table: &[(&str, &[&str], u8)], reading: Reading) -> Result<Self> {
        let names: Vec<String> = table.iter().map(|(n, _, _)| n.to_string()).collect();
        let index = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::InvalidAutomaton(format!("unknown state {name}")))
        };
        let mut transitions = Vec::with_capacity(table.len());
        for (_, targets, _) in table {
            transitions.push(
                targets
                    .iter()
                    .map(|t| index(t))
                    .collect::<Result<Vec<_>>>()?,
            );
        }
        let output = table.iter().map(|(_, _, o)| *o).collect();
        Self::new(base, names, transitions, 0, output, reading)
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn num_states(&self) -> usize {
        self.output.len()
    }

    pub fn reading(&self) -> Reading {
        self.reading
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn state_name(&self, q: usize) -> &str {
        &self.names[q]
    }

    pub fn output_of(&self, q: usize) -> u8 {
        self.output[q]
    }

    pub fn alphabet_size(&self) -> u8 {
        self.output.iter().copied().max().unwrap_or(0) + 1
    }

    #[inline]
    pub fn step(&self, q: usize, digit: u32) -> usize {
        self.transition[q * self.base as usize + digit as usize]
    }

    /// Runs the automaton over `digits` given least-significant first,
    /// honouring the reading order. No normalization of the digit string is
    /// done, so padded inputs can be fed directly.
    pub fn run_digits(&self, digits: &[u32]) -> u8 {
        let q = match self.reading {
            Reading::Reverse => digits.iter().fold(self.initial, |q, &d| self.step(q, d)),
            Reading::Direct => digits
                .iter()
                .rev()
                .fold(self.initial, |q, &d| self.step(q, d)),
        };
        self.output[q]
    }

    pub fn eval(&self, n: u128) -> u8 {
        if self.base == 2 {
            return self.eval_binary(n);
        }
        let ds = digits(n, self.base).expect("base validated at construction");
        self.run_digits(ds.digits())
    }

    fn eval_binary(&self, n: u128) -> u8 {
        let bits = 128 - n.leading_zeros();
        let mut q = self.initial;
        match self.reading {
            Reading::Reverse => {
                for i in 0..bits {
                    q = self.transition[q * 2 + ((n >> i) & 1) as usize];
                }
            }
            Reading::Direct => {
                for i in (0..bits).rev() {
                    q = self.transition[q * 2 + ((n >> i) & 1) as usize];
                }
            }
        }
        self.output[q]
    }

    pub fn eval_big(&self, n: &BigUint) -> u8 {
        let ds = digits_big(n, self.base).expect("base validated at construction");
        self.run_digits(ds.digits())
    }
}
