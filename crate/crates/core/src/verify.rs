//! Acceptance checks: each criterion recomputes its quantities from scratch and
//! reports what it measured against what was expected.

use std::fmt;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{bipoly_eval_mod, series_from_sequence, FieldCtx, Fp, UniPoly};
use crate::error::{Error, Result};
use crate::ff::{
    count_along_polynomial, count_over_irreducibles, t_closed_form, DigitFunction, DigitKind,
    DEFAULT_ENUMERATION_CAP,
};
use crate::measures::{
    correlation, correlation2_profile, cube_free_check, expansion_bounds_from_linear,
    expansion_complexity, linear_complexity, linear_complexity_bounds, max_order_complexity,
    oracle, pattern_frequencies, subword_complexity, well_distribution, well_distribution_profile,
    CorrelationQuery, ExpansionRecord, DEFAULT_PATTERN_CAP,
};
use crate::seq::{automatic_entries, Catalog, SequenceHandle};

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub criterion: u8,
    pub name: &'static str,
    pub passed: bool,
    pub measured: String,
    pub expected: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] criterion {:>2} {}: measured {}; expected {}; {:.2}s of {}s",
            if self.passed { "PASS" } else { "FAIL" },
            self.criterion,
            self.name,
            self.measured,
            self.expected,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs()
        )
    }
}

/// What a check body returns: pass flag, measured, expected.
type Body = Result<(bool, String, String)>;

fn run(
    criterion: u8,
    name: &'static str,
    budget_s: u64,
    body: impl FnOnce() -> Body,
) -> CheckOutcome {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let budget = Duration::from_secs(budget_s);
    let (ok, measured, expected) = match result {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}"), "no error".into()),
    };
    CheckOutcome {
        criterion,
        name,
        passed: ok && elapsed <= budget,
        measured,
        expected,
        elapsed,
        budget,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Profiles,
    Bounds,
    Oracles,
    Ff,
    Statistical,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Identities,
        Suite::Profiles,
        Suite::Bounds,
        Suite::Oracles,
        Suite::Ff,
        Suite::Statistical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Profiles => "profiles",
            Suite::Bounds => "bounds",
            Suite::Oracles => "oracles",
            Suite::Ff => "ff",
            Suite::Statistical => "statistical",
        }
    }

    pub fn criteria(self) -> &'static [u8] {
        match self {
            Suite::Identities => &[1, 2],
            Suite::Profiles => &[3, 5],
            Suite::Bounds => &[4, 6, 7, 8, 9],
            Suite::Oracles => &[10, 11],
            Suite::Ff => &[12],
            Suite::Statistical => &[13],
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite '{s}'")))
    }
}

pub fn run_criterion(id: u8) -> Result<CheckOutcome> {
    Ok(match id {
        1 => catalog_correctness(),
        2 => christol_identities(),
        3 => linear_profiles(),
        4 => linear_bounds(),
        5 => max_order_profile(),
        6 => squares_max_order(),
        7 => correlation_bounds(),
        8 => well_distribution_bounds(),
        9 => expansion_suite(),
        10 => oracle_equivalences(),
        11 => normality_subwords(),
        12 => finite_fields(),
        13 => statistical_smoke(),
        _ => return Err(Error::InvalidParameter(format!("no criterion {id}"))),
    })
}

pub fn run_suite(suite: Suite) -> Vec<CheckOutcome> {
    suite
        .criteria()
        .iter()
        .map(|&id| run_criterion(id).expect("suite criteria exist"))
        .collect()
}

fn handle(entry: Catalog) -> SequenceHandle {
    SequenceHandle::catalog(entry)
}

fn f2() -> Fp {
    Fp::new(2).expect("2 is prime")
}

fn bits(s: &[u8]) -> String {
    s.iter().map(|b| char::from(b'0' + b)).collect()
}

fn entry_name(e: &Catalog) -> String {
    handle(e.clone()).name().to_string()
}

pub fn catalog_correctness() -> CheckOutcome {
    run(1, "catalog cross-check and prefixes", 5, || {
        let entries = automatic_entries();
        let agree = entries
            .par_iter()
            .map(|e| handle(e.clone()).cross_check(1 << 16))
            .collect::<Result<Vec<bool>>>()?;
        let agreeing = agree.iter().filter(|&&a| a).count();
        let tm = bits(&handle(Catalog::ThueMorse).prefix(12)?);
        let rs = bits(&handle(Catalog::RudinShapiro).prefix(12)?);
        let ok = agreeing == entries.len() && tm == "011010011001" && rs == "000100100001";
        Ok((
            ok,
            format!(
                "{agreeing}/{} agree below 2^16, t = {tm}, r = {rs}",
                entries.len()
            ),
            format!("{0}/{0}, t = 011010011001, r = 000100100001", entries.len()),
        ))
    })
}

pub fn christol_identities() -> CheckOutcome {
    run(2, "annihilator identities at N = 4096", 10, || {
        let mut zero = 0;
        let entries = automatic_entries();
        for e in &entries {
            let h = e
                .annihilator()
                .ok_or_else(|| Error::UnknownSequence(entry_name(e)))?;
            let g = series_from_sequence(&handle(e.clone()).prefix(4096)?, *h.field())?;
            if bipoly_eval_mod(&h, &g)?.is_zero() {
                zero += 1;
            }
        }
        Ok((
            zero == entries.len(),
            format!("{zero}/{} vanish mod x^4096", entries.len()),
            format!("{0}/{0}", entries.len()),
        ))
    })
}

/// Closed form of `L(r, N)`.
pub fn rudin_shapiro_linear(n: usize) -> usize {
    if (4..=9).contains(&(n % 12)) {
        6 * (n / 12) + 4
    } else {
        6 * ((n + 2) / 12)
    }
}

/// Closed form of `M(t, N)` for `N >= 4`: `2^l + 1`, `l` least with `5 * 2^l >= N`.
pub fn thue_morse_max_order(n: usize) -> usize {
    let mut l = 0;
    while 5usize << l < n {
        l += 1;
    }
    (1 << l) + 1
}

fn first_mismatch(profile: &[usize], from: usize, f: impl Fn(usize) -> usize) -> Option<usize> {
    (from..=profile.len()).find(|&n| profile[n - 1] != f(n))
}

pub fn linear_profiles() -> CheckOutcome {
    run(3, "exact linear complexity profiles", 30, || {
        const N: usize = 10_000;
        let tm = linear_complexity(&handle(Catalog::ThueMorse).prefix(N)?, f2())?;
        let rs = linear_complexity(&handle(Catalog::RudinShapiro).prefix(N)?, f2())?;
        let ap = linear_complexity(&handle(Catalog::Apwenian).prefix(N)?, f2())?;
        let bad = [
            first_mismatch(&tm.profile, 1, |n| 2 * ((n + 2) / 4)),
            first_mismatch(&rs.profile, 1, rudin_shapiro_linear),
            first_mismatch(&ap.profile, 1, |n| n.div_ceil(2)),
        ];
        let show = |m: Option<usize>| m.map_or("none".to_string(), |n| format!("N={n}"));
        Ok((
            bad.iter().all(Option::is_none),
            format!(
                "first mismatch t: {}, r: {}, w: {} (N <= {N})",
                show(bad[0]),
                show(bad[1]),
                show(bad[2])
            ),
            "no mismatch".into(),
        ))
    })
}

pub fn linear_bounds() -> CheckOutcome {
    run(4, "annihilator bounds on L", 30, || {
        const N: usize = 4096;
        let results = automatic_entries()
            .into_par_iter()
            .map(|e| {
                let h = e
                    .annihilator()
                    .ok_or_else(|| Error::UnknownSequence(entry_name(&e)))?;
                let rec = linear_complexity(&handle(e.clone()).prefix(N)?, *h.field())?;
                for (i, &l) in rec.profile.iter().enumerate() {
                    if !linear_complexity_bounds(&h, i + 1)?.contains(l) {
                        return Ok(Some(format!("{} at N={}", entry_name(&e), i + 1)));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<_>>>()?;
        let fails: Vec<String> = results.into_iter().flatten().collect();
        Ok((
            fails.is_empty(),
            if fails.is_empty() {
                "8/8 within bounds for N <= 4096".into()
            } else {
                format!("outside: {}", fails.join(", "))
            },
            "8/8 within bounds".into(),
        ))
    })
}

pub fn max_order_profile() -> CheckOutcome {
    run(5, "Thue-Morse maximum-order profile", 60, || {
        const N: usize = 1_000_000;
        let rec = max_order_complexity(&handle(Catalog::ThueMorse).prefix(N)?);
        let bad = first_mismatch(&rec.profile, 4, thue_morse_max_order);
        Ok((
            bad.is_none(),
            match bad {
                None => format!(
                    "formula holds for 4 <= N <= {N}, M(t,{N}) = {}",
                    rec.value()
                ),
                Some(n) => format!("mismatch at N={n}: {}", rec.profile[n - 1]),
            },
            format!(
                "2^ceil(log2(N/5)) + 1, M(t,{N}) = {}",
                thue_morse_max_order(N)
            ),
        ))
    })
}

pub fn squares_max_order() -> CheckOutcome {
    run(6, "maximum order along squares", 60, || {
        const N: usize = 100_000;
        let t = handle(Catalog::ThueMorse)
            .along_polynomial(vec![0, 0, 1])
            .prefix(N)?;
        let r = handle(Catalog::RudinShapiro)
            .along_polynomial(vec![0, 0, 1])
            .prefix(N)?;
        let (mt, mr) = rayon::join(|| max_order_complexity(&t), || max_order_complexity(&r));
        let bad_t = (21..=N).find(|&n| 5 * mt.profile[n - 1].pow(2) < 2 * n);
        let bad_r = (64..=N).find(|&n| 8 * mr.profile[n - 1].pow(2) < n);
        Ok((
            bad_t.is_none() && bad_r.is_none(),
            format!(
                "violations t: {:?}, r: {:?}; M(t_sq,{N}) = {}, M(r_sq,{N}) = {}",
                bad_t,
                bad_r,
                mt.value(),
                mr.value()
            ),
            "5M^2 >= 2N from 21 and 8M^2 >= N from 64".into(),
        ))
    })
}

pub fn correlation_bounds() -> CheckOutcome {
    run(7, "correlation lower bounds", 120, || {
        const N: usize = 2000;
        let tp = correlation2_profile(&handle(Catalog::ThueMorse).prefix(N)?)?;
        let rp = correlation2_profile(&handle(Catalog::RudinShapiro).prefix(N)?)?;
        let mut fails = Vec::new();
        if let Some(n) = (4..=N).find(|&n| 5 * tp[n - 1] < n as u64) {
            fails.push(format!("C2(t) < N/5 at N={n}"));
        }
        if let Some(n) = (4..=N).find(|&n| 6 * rp[n - 1] <= n as u64) {
            fails.push(format!("C2(r) <= N/6 at N={n}"));
        }
        for (entry, prof) in [(Catalog::ThueMorse, &tp), (Catalog::RudinShapiro, &rp)] {
            let a = entry
                .automaton()
                .ok_or_else(|| Error::UnknownSequence(entry_name(&entry)))?;
            let den = a.base() as u64 * (a.num_states() as u64 + 1);
            if let Some(n) = (4..=N).find(|&n| prof[n - 1] * den < n as u64) {
                fails.push(format!("{} below N/{den} at N={n}", entry_name(&entry)));
            }
        }
        let mut entries = automatic_entries();
        entries.extend([Catalog::ZeckendorfSum, Catalog::ZeckendorfGap]);
        let count = entries.len();
        let c2m = entries
            .into_par_iter()
            .map(|e| {
                let s = handle(e.clone()).prefix(N)?;
                let c = correlation2_profile(&s)?;
                let m = max_order_complexity(&s).profile;
                Ok((1..=N)
                    .find(|&n| c[n - 1] + 1 < m[n - 1] as u64)
                    .map(|n| format!("C2 < M-1 for {} at N={n}", entry_name(&e))))
            })
            .collect::<Result<Vec<_>>>()?;
        fails.extend(c2m.into_iter().flatten());
        Ok((
            fails.is_empty(),
            if fails.is_empty() {
                format!(
                    "all hold for N <= {N}; C2(t,{N}) = {}, C2(r,{N}) = {}; C2 >= M-1 on {count} prefixes",
                    tp[N - 1],
                    rp[N - 1]
                )
            } else {
                fails.join("; ")
            },
            "C2(t) >= N/5, C2(r) > N/6, C2 >= N/(k(|Q|+1)), C2 >= M-1".into(),
        ))
    })
}

pub fn well_distribution_bounds() -> CheckOutcome {
    run(8, "well-distribution upper bounds", 120, || {
        const N: usize = 10_000;
        let wt = well_distribution_profile(&handle(Catalog::ThueMorse).prefix(N)?)?;
        let wr = well_distribution_profile(&handle(Catalog::RudinShapiro).prefix(N)?)?;
        let ct = 2.0 * (1.0 + 3f64.sqrt());
        let cr = 2.0 * (2.0 + 2f64.sqrt());
        let et = 3f64.ln() / 4f64.ln();
        let bad_t = (1..=N).find(|&n| wt[n - 1] as f64 > ct * (n as f64).powf(et));
        let bad_r = (1..=N).find(|&n| wr[n - 1] as f64 > cr * (n as f64).sqrt());
        // worst ratio to the bound, for the record
        let ratio = |w: &[u64], f: &dyn Fn(f64) -> f64| {
            (1..=N)
                .map(|n| w[n - 1] as f64 / f(n as f64))
                .fold(0.0, f64::max)
        };
        let rt = ratio(&wt, &|n| ct * n.powf(et));
        let rr = ratio(&wr, &|n| cr * n.sqrt());
        Ok((
            bad_t.is_none() && bad_r.is_none(),
            format!(
                "violations t: {bad_t:?}, r: {bad_r:?}; max W/bound t: {rt:.3}, r: {rr:.3}; W(t,{N}) = {}, W(r,{N}) = {}",
                wt[N - 1],
                wr[N - 1]
            ),
            "W(t) <= 2(1+sqrt3) N^(log3/log4), W(r) <= 2(2+sqrt2) sqrt N".into(),
        ))
    })
}

/// The sequences with a known expansion complexity and that value.
pub fn expansion_targets() -> Vec<(Catalog, usize)> {
    vec![
        (Catalog::ThueMorse, 5),
        (Catalog::RudinShapiro, 7),
        (Catalog::BaumSweet, 3),
        (Catalog::PaperFolding { v0: 0 }, 6),
        (Catalog::Apwenian, 4),
    ]
}

/// Sampled N for the expansion profile: every N up to 4096.
pub fn expansion_samples() -> Vec<usize> {
    (1..=4096).collect()
}

pub fn expansion_record(entry: &Catalog) -> Result<ExpansionRecord> {
    let samples = expansion_samples();
    let s = handle(entry.clone()).prefix(*samples.last().expect("nonempty"))?;
    expansion_complexity(&s, f2(), &samples)
}

fn binom2(e: usize) -> usize {
    e * (e + 1) / 2
}

/// `(lower, E, upper)` where E leaves the bracket, if anywhere.
fn bracket_failure(s: &[u8], e: usize) -> Result<Option<(usize, usize, usize)>> {
    match expansion_bounds_from_linear(s, f2()) {
        Ok(b) => Ok((e < b.lower || e > b.upper).then_some((b.lower, e, b.upper))),
        Err(Error::AllZeroPrefix) => Ok((e != 0).then_some((0, e, 0))),
        Err(err) => Err(err),
    }
}

pub fn expansion_suite() -> CheckOutcome {
    run(9, "expansion complexity", 600, || {
        let mut fails = Vec::new();
        let mut thresholds = Vec::new();
        for (entry, target) in expansion_targets() {
            let name = entry_name(&entry);
            let rec = expansion_record(&entry)?;
            if rec.max_value() > target {
                fails.push(format!("E({name}) reaches {}", rec.max_value()));
            }
            match rec.threshold(target) {
                Some(n0) => thresholds.push(format!("{name} N0={n0}")),
                None => fails.push(format!("E({name}) does not settle at {target}")),
            }
            if let Some(s) = rec.samples.iter().find(|s| binom2(s.value) > s.n) {
                fails.push(format!("binom(E+1,2) > N for {name} at N={}", s.n));
            }
        }
        // bracketing on random prefixes of length 128
        let mut rng = ChaCha8Rng::seed_from_u64(0x6e64);
        let randoms: Vec<Vec<u8>> = (0..100)
            .map(|_| (0..128).map(|_| rng.gen_range(0..2u8)).collect())
            .collect();
        let random_bad = randoms
            .par_iter()
            .map(|s| {
                let e = expansion_complexity(s, f2(), &[s.len()])?.samples[0].value;
                bracket_failure(s, e)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .count();
        if random_bad > 0 {
            fails.push(format!(
                "{random_bad}/100 random prefixes outside the linear bracket"
            ));
        }
        // bracketing on every catalog prefix at a grid of N
        let grid: Vec<usize> = (1..=256).chain((272..=4096).step_by(16)).collect();
        let mut entries = automatic_entries();
        entries.extend([Catalog::ZeckendorfSum, Catalog::ZeckendorfGap]);
        let mut checked = 0;
        for entry in entries {
            let s = handle(entry.clone()).prefix(4096)?;
            let rec = expansion_complexity(&s, f2(), &grid)?;
            let bad = rec
                .samples
                .par_iter()
                .map(|smp| Ok(bracket_failure(&s[..smp.n], smp.value)?.map(|b| (smp.n, b))))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .next();
            checked += rec.samples.len();
            if let Some((n, (lo, e, hi))) = bad {
                fails.push(format!(
                    "{} at N={n}: E={e} outside [{lo},{hi}]",
                    entry_name(&entry)
                ));
            }
        }
        Ok((
            fails.is_empty(),
            if fails.is_empty() {
                format!(
                    "all targets attained ({}); bracket holds on 100 random and {checked} catalog prefixes",
                    thresholds.join(", ")
                )
            } else {
                fails.join("; ")
            },
            "E(t)=5, E(r)=7, E(b)=3, E(v)=6, E(w)=4 past N0; binom(E+1,2) <= N; bracket holds"
                .into(),
        ))
    })
}

fn random_bits(rng: &mut ChaCha8Rng, len: usize) -> Vec<u8> {
    (0..len).map(|_| rng.gen_range(0..2u8)).collect()
}

pub fn oracle_equivalences() -> CheckOutcome {
    run(10, "fast measures against oracles", 300, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x0a1e);
        let mut fails = Vec::new();

        // maximum order
        let mut inputs: Vec<Vec<u8>> = (0..500)
            .map(|_| {
                let n = rng.gen_range(1..=200);
                random_bits(&mut rng, n)
            })
            .collect();
        let mut catalog = automatic_entries();
        catalog.extend([Catalog::ZeckendorfSum, Catalog::ZeckendorfGap]);
        for e in &catalog {
            inputs.push(handle(e.clone()).prefix(200)?);
        }
        let m_bad = inputs
            .par_iter()
            .filter(|s| {
                let prof = max_order_complexity(s).profile;
                (1..=s.len()).any(|n| prof[n - 1] != oracle::max_order(&s[..n]))
            })
            .count();
        if m_bad > 0 {
            fails.push(format!("max order: {m_bad} disagree"));
        }

        // well-distribution
        let w_inputs: Vec<Vec<u8>> = (0..200)
            .map(|_| {
                let n = rng.gen_range(1..=64);
                random_bits(&mut rng, n)
            })
            .collect();
        let w_bad = w_inputs
            .par_iter()
            .filter(|s| {
                well_distribution(s).map(|w| w.value).ok() != Some(oracle::well_distribution(s))
            })
            .count();
        if w_bad > 0 {
            fails.push(format!("well-distribution: {w_bad} disagree"));
        }

        // correlation, k = 1, 2, 3
        let c_inputs: Vec<(usize, Vec<u8>)> = (0..150)
            .map(|i| {
                let n = rng.gen_range(1..=48);
                (i % 3 + 1, random_bits(&mut rng, n))
            })
            .collect();
        let c_bad = c_inputs
            .par_iter()
            .filter(|(k, s)| {
                let fast = correlation(s, &CorrelationQuery::new(*k))
                    .map(|c| c.value)
                    .ok();
                fast != Some(oracle::correlation(s, *k))
            })
            .count();
        if c_bad > 0 {
            fails.push(format!("correlation: {c_bad} disagree"));
        }

        // expansion complexity up to total degree 3
        let e_inputs: Vec<Vec<u8>> = (0..300)
            .map(|_| {
                let n = rng.gen_range(1..=20);
                random_bits(&mut rng, n)
            })
            .filter(|s| s.contains(&1))
            .collect();
        let e_bad = e_inputs
            .par_iter()
            .map(|s| {
                let e = expansion_complexity(s, f2(), &[s.len()])?.samples[0].value;
                let want = if e <= 3 { Some(e) } else { None };
                Ok(oracle::expansion_binary(s, 3) != want)
            })
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .filter(|&b| b)
            .count();
        if e_bad > 0 {
            fails.push(format!("expansion: {e_bad} disagree"));
        }

        // no annihilator of degree 4 at the Thue-Morse threshold
        let tm = expansion_record(&Catalog::ThueMorse)?;
        let n0 = tm
            .threshold(5)
            .ok_or_else(|| Error::InvalidQuery("Thue-Morse never settles at 5".into()))?;
        let prefix = handle(Catalog::ThueMorse).prefix(n0)?;
        let deg4 = oracle::expansion_binary(&prefix, 4);
        if deg4.is_some() {
            fails.push(format!("degree {deg4:?} annihilator at N0={n0}"));
        }
        Ok((
            fails.is_empty(),
            if fails.is_empty() {
                format!(
                    "{} max-order, {} W, {} C_k, {} expansion inputs agree; no degree <= 4 at N0={n0}",
                    inputs.len(),
                    w_inputs.len(),
                    c_inputs.len(),
                    e_inputs.len()
                )
            } else {
                fails.join("; ")
            },
            "all agree".into(),
        ))
    })
}

/// Relative tolerance for the pattern-frequency proxy.
pub const PATTERN_TOLERANCE: f64 = 0.05;

pub fn normality_subwords() -> CheckOutcome {
    run(
        11,
        "cube-freeness, subwords and pattern frequencies",
        300,
        || {
            let mut fails = Vec::new();
            let tm = handle(Catalog::ThueMorse).prefix(100_000)?;
            if let Some(c) = cube_free_check(&tm) {
                fails.push(format!("cube at {c:?}"));
            }
            let pc = pattern_frequencies(&tm, 3, DEFAULT_PATTERN_CAP)?;
            let (c000, c111) = (pc.count(&[0, 0, 0]), pc.count(&[1, 1, 1]));
            if c000 + c111 > 0 {
                fails.push(format!("000: {c000}, 111: {c111}"));
            }
            let t_sq = handle(Catalog::ThueMorse).along_polynomial(vec![0, 0, 1]);
            let p = subword_complexity(&t_sq.prefix(100_000)?, 6)?;
            if p.iter().enumerate().any(|(i, &c)| c != 1 << (i + 1)) {
                fails.push(format!("p(t_sq, k) = {p:?}"));
            }
            let mut devs = Vec::new();
            for entry in [Catalog::ThueMorse, Catalog::RudinShapiro] {
                let s = handle(entry.clone())
                    .along_polynomial(vec![0, 0, 1])
                    .prefix(1_000_000)?;
                let pc = pattern_frequencies(&s, 3, DEFAULT_PATTERN_CAP)?;
                devs.push(pc.max_rel_deviation);
                if pc.max_rel_deviation > PATTERN_TOLERANCE {
                    fails.push(format!(
                        "{} along squares deviates {:.4}",
                        entry_name(&entry),
                        pc.max_rel_deviation
                    ));
                }
            }
            Ok((
                fails.is_empty(),
                if fails.is_empty() {
                    format!(
                    "cube-free, 000/111 absent, p(t_sq,k) = {p:?}, max rel deviation t_sq {:.4}, r_sq {:.4}",
                    devs[0], devs[1]
                )
                } else {
                    fails.join("; ")
                },
                format!("cube-free, p(k) = 2^k, deviation <= {PATTERN_TOLERANCE}"),
            ))
        },
    )
}

pub fn finite_fields() -> CheckOutcome {
    run(12, "finite-field Thue-Morse and Rudin-Shapiro", 300, || {
        let mut fails = Vec::new();
        let mut polys = 0usize;
        let mut worst = 0.0f64;
        for p in [3u32, 5, 7] {
            for r in [2usize, 3] {
                let ctx = FieldCtx::new(p, r)?;
                let t = DigitFunction::new(ctx.clone(), DigitKind::ThueMorse)?;
                let q = ctx.order();
                let results = (0..q * q)
                    .into_par_iter()
                    .map(|code| {
                        let (c0, c1) = (ctx.from_index(code % q), ctx.from_index(code / q));
                        let f = UniPoly::new(&ctx, vec![c0, c1, ctx.one()])?;
                        let h = count_along_polynomial(&t, &f, DEFAULT_ENUMERATION_CAP)?;
                        let ratio = h.max_deviation()
                            / h.bound
                                .ok_or_else(|| Error::InvalidQuery("no bound attached".into()))?;
                        Ok((h.within_bound() == Some(true), ratio))
                    })
                    .collect::<Result<Vec<_>>>()?;
                polys += results.len();
                let bad = results.iter().filter(|r| !r.0).count();
                worst = results.iter().map(|r| r.1).fold(worst, f64::max);
                if bad > 0 {
                    fails.push(format!("p={p} r={r}: {bad} polynomials exceed the bound"));
                }
            }
        }
        for p in [3u32, 5, 7, 11, 13] {
            let fp = Fp::new(p)?;
            let h = count_over_irreducibles(DigitKind::ThueMorse, p, 2, DEFAULT_ENUMERATION_CAP)?;
            if (0..p).any(|c| h.counts[c as usize] != t_closed_form(&fp, c)) {
                fails.push(format!("T histogram for p={p}: {:?}", h.counts));
            }
            if h.counts[p as usize - 1] != 0 {
                fails.push(format!("T = -1 attained for p={p}"));
            }
            let r =
                count_over_irreducibles(DigitKind::RudinShapiro, p, 2, DEFAULT_ENUMERATION_CAP)?;
            if r.counts[0] != (p as u64 - 1) / 2 {
                fails.push(format!("R count at c=0 for p={p}: {}", r.counts[0]));
            }
        }
        Ok((
            fails.is_empty(),
            if fails.is_empty() {
                format!(
                    "{polys} quadratics within (d-1)p^(r/2) (worst ratio {worst:.3}); irreducible histograms match for p <= 13"
                )
            } else {
                fails.join("; ")
            },
            "bound holds, (p - (c+1|p))/2 and (p-1)/2".into(),
        ))
    })
}

pub fn statistical_smoke() -> CheckOutcome {
    run(13, "random prefixes: L and C2 ranges", 120, || {
        const N: usize = 4096;
        const TRIALS: usize = 200;
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        let inputs: Vec<Vec<u8>> = (0..TRIALS).map(|_| random_bits(&mut rng, N)).collect();
        let nf = N as f64;
        let l_slack = 10.0 * nf.log2();
        let scale = (nf * nf.ln()).sqrt();
        let (c_lo, c_hi) = (0.2 * scale, 3.0 * scale);
        let rows = inputs
            .par_iter()
            .map(|s| {
                let l = linear_complexity(s, f2())?.value();
                let c = correlation(s, &CorrelationQuery::new(2))?.value;
                Ok((l, c))
            })
            .collect::<Result<Vec<(usize, u64)>>>()?;
        let failures = rows
            .iter()
            .filter(|&&(l, c)| {
                (l as f64 - nf / 2.0).abs() > l_slack || (c as f64) < c_lo || (c as f64) > c_hi
            })
            .count();
        let mut ls: Vec<usize> = rows.iter().map(|r| r.0).collect();
        ls.sort_unstable();
        let median = (ls[TRIALS / 2 - 1] + ls[TRIALS / 2]) as f64 / 2.0;
        let allowed = TRIALS / 50;
        let ok = failures <= allowed && (median - nf / 2.0).abs() <= l_slack;
        let (cmin, cmax) = rows
            .iter()
            .fold((u64::MAX, 0), |(a, b), r| (a.min(r.1), b.max(r.1)));
        Ok((
            ok,
            format!("median L {median}, C2 in [{cmin}, {cmax}], {failures}/{TRIALS} trials out of range"),
            format!(
                "L within {} +- {l_slack:.0}, C2 within [{c_lo:.1}, {c_hi:.1}], at most {allowed} failures",
                N / 2
            ),
        ))
    })
}

/// `N / (k (|Q| + 1))` as an exact ratio, for reports.
pub fn automaton_bound_ratio(entry: &Catalog, n: usize) -> Option<Ratio<i64>> {
    let a = entry.automaton()?;
    Some(Ratio::new(
        n as i64,
        a.base() as i64 * (a.num_states() as i64 + 1),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms() {
        let rs: Vec<usize> = (1..=14).map(rudin_shapiro_linear).collect();
        assert_eq!(rs, vec![0, 0, 0, 4, 4, 4, 4, 4, 4, 6, 6, 6, 6, 6]);
        assert_eq!(thue_morse_max_order(4), 2);
        assert_eq!(thue_morse_max_order(21), 9);
        assert_eq!(thue_morse_max_order(20), 5);
    }

    #[test]
    fn suites_cover_every_criterion() {
        let mut ids: Vec<u8> = Suite::ALL
            .iter()
            .flat_map(|s| s.criteria().to_vec())
            .collect();
        ids.sort_unstable();
        assert_eq!(ids, (1..=13).collect::<Vec<u8>>());
        assert_eq!("ff".parse::<Suite>().unwrap(), Suite::Ff);
        assert!("nope".parse::<Suite>().is_err());
        assert!(run_criterion(14).is_err());
    }
}
