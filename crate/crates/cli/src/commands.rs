//! Execution of a [`RunConfig`].

use std::collections::HashSet;

use autoseq::algebra::{FieldCtx, Fp, UniPoly};
use autoseq::ff::{count_along_polynomial, count_over_irreducibles, DigitFunction};
use autoseq::io::{format_sequence, p1_bitmap, profile_csv};
use autoseq::measures::{
    correlation, correlation2_profile, expansion_complexity, linear_complexity,
    max_order_complexity, well_distribution, well_distribution_profile, CorrelationQuery,
};
use autoseq::seq::SequenceHandle;
use autoseq::verify::{run_suite, Suite};
use rayon::prelude::*;

use crate::config::{CommandKind, Measure, RunConfig};

/// Result of a command: text for the output sink and the exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub status: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, status: 0 }
    }
}

/// Errors map to exit status 2.
pub fn execute(cfg: &RunConfig) -> Result<Output, String> {
    match cfg.command {
        CommandKind::Gen => gen(cfg).map(Output::ok),
        CommandKind::Profile => profile(cfg).map(Output::ok),
        CommandKind::Figure => figure(cfg).map(Output::ok),
        CommandKind::Verify => verify(cfg),
        CommandKind::Ff => ff(cfg).map(Output::ok),
    }
}

fn err(e: autoseq::Error) -> String {
    e.to_string()
}

pub fn sequence(cfg: &RunConfig) -> Result<SequenceHandle, String> {
    let spec = cfg.sequence.as_deref().ok_or("no sequence given")?;
    let mut h = SequenceHandle::parse(spec).map_err(err)?;
    for t in &cfg.transforms {
        h = h.apply_transform(t).map_err(err)?;
    }
    Ok(h)
}

fn gen(cfg: &RunConfig) -> Result<String, String> {
    let s = sequence(cfg)?.prefix(cfg.count).map_err(err)?;
    format_sequence(&s).map_err(err)
}

fn figure(cfg: &RunConfig) -> Result<String, String> {
    let (cols, rows) = cfg.grid;
    let s = sequence(cfg)?.prefix(cols * rows).map_err(err)?;
    p1_bitmap(&s, cols, rows).map_err(err)
}

/// Sample points `stride, 2 stride, ...` up to the count.
fn samples(cfg: &RunConfig) -> Result<Vec<usize>, String> {
    if cfg.stride == 0 {
        return Err("stride must be at least 1".into());
    }
    Ok((cfg.stride..=cfg.count).step_by(cfg.stride).collect())
}

fn pick<T: Copy + Into<u64>>(profile: &[T], ns: &[usize]) -> Vec<(usize, u64)> {
    ns.iter().map(|&n| (n, profile[n - 1].into())).collect()
}

fn prime_field(cfg: &RunConfig) -> Result<Fp, String> {
    let (p, r) = cfg.field;
    if r != 1 {
        return Err(format!(
            "this measure works over prime fields only, got {p}^{r}"
        ));
    }
    Fp::new(p).map_err(err)
}

/// Rows `(N, value)` and comment lines.
pub type ProfileRows = (Vec<(usize, u64)>, Vec<String>);

/// Rows and comments for the configured measure.
pub fn profile_rows(cfg: &RunConfig, s: &[u8]) -> Result<ProfileRows, String> {
    let ns = samples(cfg)?;
    let measure = cfg.measure.ok_or("no measure given")?;
    let mut notes = Vec::new();
    let rows = match measure {
        Measure::Linear => {
            let rec = linear_complexity(s, prime_field(cfg)?).map_err(err)?;
            let c: Vec<String> = rec.connection.iter().map(u32::to_string).collect();
            notes.push(format!("recurrence c_0..c_L = {}", c.join(",")));
            notes.push(format!("t = {}", rec.t));
            let p: Vec<u64> = rec.profile.iter().map(|&v| v as u64).collect();
            pick(&p, &ns)
        }
        Measure::MaxOrder => {
            let rec = max_order_complexity(s);
            if let Some((a, b, len)) = rec.witness {
                notes.push(format!(
                    "witness: factors of length {len} at {a} and {b} have different successors"
                ));
            }
            let p: Vec<u64> = rec.profile.iter().map(|&v| v as u64).collect();
            pick(&p, &ns)
        }
        Measure::WellDist => {
            let p = well_distribution_profile(s).map_err(err)?;
            let w = well_distribution(s).map_err(err)?;
            notes.push(format!("witness: a = {}, b = {}, t = {}", w.a, w.b, w.t));
            pick(&p, &ns)
        }
        Measure::Correlation => {
            let k = cfg.order;
            let rows = if k == 2 {
                pick(&correlation2_profile(s).map_err(err)?, &ns)
            } else {
                ns.par_iter()
                    .map(|&n| correlation(&s[..n], &CorrelationQuery::new(k)).map(|c| (n, c.value)))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(err)?
            };
            let c = correlation(s, &CorrelationQuery::new(k)).map_err(err)?;
            let d: Vec<String> = c.d.iter().map(usize::to_string).collect();
            notes.push(format!("witness: M = {}, D = {}", c.m, d.join(",")));
            rows
        }
        Measure::Expansion => {
            let rec = expansion_complexity(s, prime_field(cfg)?, &ns).map_err(err)?;
            if let Some(h) = rec.samples.last().and_then(|x| x.witness.as_ref()) {
                notes.push(format!("annihilator h(x, y) = {h}"));
            }
            rec.samples.iter().map(|x| (x.n, x.value as u64)).collect()
        }
        Measure::Subword => {
            let k = cfg.order;
            if k == 0 {
                return Err("subword order must be at least 1".into());
            }
            // distinct length-k factors of each prefix, grown one window at a time
            let mut seen: HashSet<&[u8]> = HashSet::new();
            let mut counts = Vec::with_capacity(s.len());
            for n in 1..=s.len() {
                if n >= k {
                    seen.insert(&s[n - k..n]);
                }
                counts.push(seen.len() as u64);
            }
            notes.push(format!("k = {k}"));
            pick(&counts, &ns)
        }
    };
    Ok((rows, notes))
}

fn profile(cfg: &RunConfig) -> Result<String, String> {
    let s = sequence(cfg)?.prefix(cfg.count).map_err(err)?;
    let (rows, mut notes) = profile_rows(cfg, &s)?;
    notes.insert(0, format!("sequence {}", sequence(cfg)?.name()));
    Ok(profile_csv(&rows, &notes))
}

fn verify(cfg: &RunConfig) -> Result<Output, String> {
    let suites: Vec<Suite> = match cfg.suite.as_deref() {
        None | Some("all") => Suite::ALL.to_vec(),
        Some(name) => vec![name.parse().map_err(err)?],
    };
    let mut text = String::new();
    let mut failed = 0;
    for suite in suites {
        for outcome in run_suite(suite) {
            if !outcome.passed {
                failed += 1;
            }
            text.push_str(&format!("{}: {outcome}\n", suite.name()));
        }
    }
    Ok(Output {
        text,
        status: i32::from(failed > 0),
    })
}

fn ff(cfg: &RunConfig) -> Result<String, String> {
    let (p, r) = cfg.field;
    let poly = cfg
        .poly
        .as_deref()
        .ok_or("no polynomial given (poly=...)")?;
    let mut manifest = vec![format!("p = {p}"), format!("r = {r}")];
    let hist = if poly == "irreducible" {
        manifest.push("f ranges over monic irreducibles of degree r".into());
        count_over_irreducibles(cfg.kind, p, r, cfg.cap).map_err(err)?
    } else {
        let ctx = FieldCtx::new(p, r).map_err(err)?;
        let f = UniPoly::parse(&ctx, poly).map_err(err)?;
        let m: Vec<String> = ctx.modulus().coeffs().iter().map(u32::to_string).collect();
        manifest.push(format!("modulus = {}", m.join(",")));
        manifest.push("basis = polynomial basis 1, a, ..., a^(r-1)".into());
        manifest.push(format!("f = {}", f.to_text(&ctx)));
        let func = DigitFunction::new(ctx, cfg.kind).map_err(err)?;
        count_along_polynomial(&func, &f, cfg.cap).map_err(err)?
    };
    manifest.push(format!("kind = {}", cfg.kind.name()));
    let mut out = hist.to_csv();
    for line in manifest {
        out.push_str(&format!("# {line}\n"));
    }
    Ok(out)
}
