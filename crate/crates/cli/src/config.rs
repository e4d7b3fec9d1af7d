//! Run configuration and its line-based `key=value` text form.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use autoseq::ff::{DigitKind, DEFAULT_ENUMERATION_CAP};
use autoseq::io::{parse_field, parse_grid};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Gen,
    Profile,
    Figure,
    Verify,
    Ff,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Gen => "gen",
            CommandKind::Profile => "profile",
            CommandKind::Figure => "figure",
            CommandKind::Verify => "verify",
            CommandKind::Ff => "ff",
        }
    }
}

impl FromStr for CommandKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        [
            CommandKind::Gen,
            CommandKind::Profile,
            CommandKind::Figure,
            CommandKind::Verify,
            CommandKind::Ff,
        ]
        .into_iter()
        .find(|c| c.name() == s)
        .ok_or_else(|| format!("unknown command '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    Linear,
    MaxOrder,
    WellDist,
    Correlation,
    Expansion,
    Subword,
}

impl Measure {
    pub const ALL: [Measure; 6] = [
        Measure::Linear,
        Measure::MaxOrder,
        Measure::WellDist,
        Measure::Correlation,
        Measure::Expansion,
        Measure::Subword,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Measure::Linear => "linear",
            Measure::MaxOrder => "maxorder",
            Measure::WellDist => "welldist",
            Measure::Correlation => "correlation",
            Measure::Expansion => "expansion",
            Measure::Subword => "subword",
        }
    }
}

impl FromStr for Measure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Measure::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown measure '{s}'"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub sequence: Option<String>,
    /// applied in order
    pub transforms: Vec<String>,
    pub count: usize,
    pub measure: Option<Measure>,
    pub order: usize,
    pub field: (u32, usize),
    pub stride: usize,
    pub grid: (usize, usize),
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
    pub cap: u128,
    pub suite: Option<String>,
    pub kind: DigitKind,
    /// `f` for the ff command: coefficient indices, or `irreducible`
    pub poly: Option<String>,
}

impl RunConfig {
    pub fn new(command: CommandKind) -> Self {
        Self {
            command,
            sequence: None,
            transforms: Vec::new(),
            count: 64,
            measure: None,
            order: 2,
            field: (2, 1),
            stride: 1,
            grid: (64, 64),
            out: None,
            threads: None,
            cap: DEFAULT_ENUMERATION_CAP,
            suite: None,
            kind: DigitKind::ThueMorse,
            poly: None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command={}", self.command.name());
        if let Some(s) = &self.sequence {
            let _ = writeln!(out, "sequence={s}");
        }
        for t in &self.transforms {
            let _ = writeln!(out, "transform={t}");
        }
        let _ = writeln!(out, "count={}", self.count);
        if let Some(m) = self.measure {
            let _ = writeln!(out, "measure={}", m.name());
        }
        let _ = writeln!(out, "order={}", self.order);
        let _ = writeln!(out, "field={}^{}", self.field.0, self.field.1);
        let _ = writeln!(out, "stride={}", self.stride);
        let _ = writeln!(out, "grid={}x{}", self.grid.0, self.grid.1);
        if let Some(o) = &self.out {
            let _ = writeln!(out, "out={}", o.display());
        }
        if let Some(t) = self.threads {
            let _ = writeln!(out, "threads={t}");
        }
        let _ = writeln!(out, "cap={}", self.cap);
        if let Some(s) = &self.suite {
            let _ = writeln!(out, "suite={s}");
        }
        let _ = writeln!(out, "kind={}", self.kind.name());
        if let Some(p) = &self.poly {
            let _ = writeln!(out, "poly={p}");
        }
        out
    }

    /// Parses the text form. `command` must be present; blank lines and `#`
    /// comments are skipped; unknown keys are errors.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut pairs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key=value", i + 1))?;
            pairs.push((k.trim().to_string(), v.trim().to_string()));
        }
        let command = pairs
            .iter()
            .find(|(k, _)| k == "command")
            .ok_or("missing key 'command'")?
            .1
            .parse()?;
        let mut cfg = RunConfig::new(command);
        for (k, v) in pairs {
            cfg.set(&k, &v)?;
        }
        Ok(cfg)
    }

    /// Sets one key from its text value.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let num = |v: &str| {
            v.parse::<usize>()
                .map_err(|_| format!("{key}: '{v}' is not a non-negative integer"))
        };
        match key {
            "command" => self.command = value.parse()?,
            "sequence" => self.sequence = Some(value.to_string()),
            "transform" => self.transforms.push(value.to_string()),
            "count" => self.count = num(value)?,
            "measure" => self.measure = Some(value.parse()?),
            "order" => self.order = num(value)?,
            "field" => self.field = parse_field(value).map_err(|e| e.to_string())?,
            "stride" => self.stride = num(value)?,
            "grid" => self.grid = parse_grid(value).map_err(|e| e.to_string())?,
            "out" => self.out = Some(PathBuf::from(value)),
            "threads" => self.threads = Some(num(value)?),
            "cap" => {
                self.cap = value
                    .parse()
                    .map_err(|_| format!("cap: '{value}' is not an integer"))?
            }
            "suite" => self.suite = Some(value.to_string()),
            "kind" => self.kind = value.parse().map_err(|e: autoseq::Error| e.to_string())?,
            "poly" => self.poly = Some(value.to_string()),
            other => return Err(format!("unknown key '{other}'")),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut cfg = RunConfig::new(CommandKind::Profile);
        cfg.sequence = Some("paper-folding:v0=1".into());
        cfg.transforms = vec!["poly:0,0,1".into(), "geom:3".into()];
        cfg.measure = Some(Measure::Correlation);
        cfg.field = (5, 2);
        cfg.out = Some("out.csv".into());
        cfg.threads = Some(3);
        cfg.kind = DigitKind::RudinShapiro;
        cfg.poly = Some("0,0,1".into());
        let text = cfg.to_text();
        assert_eq!(RunConfig::parse(&text).unwrap(), cfg);
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(RunConfig::parse("command=gen\ncolour=red").is_err());
        assert!(RunConfig::parse("count=3").is_err());
        assert!(RunConfig::parse("command=gen\nmeasure=entropy").is_err());
        let cfg = RunConfig::parse("# comment\ncommand=gen\n\ncount=12").unwrap();
        assert_eq!(cfg.count, 12);
    }
}
