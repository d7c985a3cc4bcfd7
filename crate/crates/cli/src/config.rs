use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::report::Format;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "dglie", version, about = "Free graded Lie algebra tables, counter-example construction and duality checks")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Plain key=value file with default flag values; explicit flags win.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Permit caps beyond the fast defaults.
    #[arg(long, global = true)]
    pub allow_slow: bool,
    #[command(subcommand)]
    pub command: CommandArgs,
}

#[derive(Debug, Subcommand)]
pub enum CommandArgs {
    /// Two-b basis of the free Lie algebra on a, b by word length.
    Table1 {
        #[arg(long)]
        max_wl: Option<u32>,
    },
    /// Dimensions by word length and number of b's.
    Table2 {
        #[arg(long)]
        max_wl: Option<u32>,
    },
    /// Build, and with --verify check, the counter-example algebra.
    Counterexample(CounterexampleArgs),
    /// Cochain algebra with finite spherical cohomology and one odd homotopy class.
    DualExample {
        #[arg(long)]
        deg_a: Option<u32>,
        #[arg(long)]
        count: Option<u32>,
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Compare cochain cohomology with generator homology on a preset algebra.
    CeCheck {
        /// sphere-odd, wedge-two-spheres or counterexample-default
        preset: Option<String>,
        #[arg(long)]
        cap: Option<u32>,
    },
}

#[derive(Debug, Args)]
pub struct CounterexampleArgs {
    #[arg(long)]
    pub deg_a: Option<u32>,
    #[arg(long)]
    pub deg_b: Option<u32>,
    #[arg(long)]
    pub count: Option<u32>,
    #[arg(long)]
    pub cap: Option<u32>,
    #[arg(long)]
    pub verify: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    SphereOdd,
    WedgeTwoSpheres,
    CounterexampleDefault,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::SphereOdd => "sphere-odd",
            Preset::WedgeTwoSpheres => "wedge-two-spheres",
            Preset::CounterexampleDefault => "counterexample-default",
        }
    }

    pub fn default_cap(self) -> u32 {
        match self {
            Preset::SphereOdd => 8,
            Preset::WedgeTwoSpheres => 4,
            Preset::CounterexampleDefault => 20,
        }
    }
}

impl std::str::FromStr for Preset {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "sphere-odd" => Ok(Preset::SphereOdd),
            "wedge-two-spheres" => Ok(Preset::WedgeTwoSpheres),
            "counterexample-default" => Ok(Preset::CounterexampleDefault),
            other => Err(CliError::Usage(format!("unknown preset `{other}`, expected sphere-odd, wedge-two-spheres or counterexample-default"))),
        }
    }
}

/// A fully resolved command with its numeric parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Table1 { max_wl: u32 },
    Table2 { max_wl: u32 },
    Counterexample { deg_a: u32, deg_b: u32, count: u32, cap: u32, verify: bool },
    DualExample { deg_a: u32, count: u32, cap: u32 },
    CeCheck { preset: Preset, cap: u32 },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Table1 { .. } => "table1",
            Command::Table2 { .. } => "table2",
            Command::Counterexample { .. } => "counterexample",
            Command::DualExample { .. } => "dual-example",
            Command::CeCheck { .. } => "ce-check",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub allow_slow: bool,
}

/// Largest caps that finish well within a minute.
pub const FAST_COUNTEREXAMPLE_CAP: u32 = 30;
pub const FAST_DUAL_CAP: u32 = 24;
pub const FAST_CE_CAP: u32 = 20;

/// Parses `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| CliError::Config { line: k + 1, message: "expected key=value".into() })?;
        let key = key.trim().replace('_', "-");
        if map.insert(key.clone(), value.trim().to_string()).is_some() {
            return Err(CliError::Config { line: k + 1, message: format!("duplicate key `{key}`") });
        }
    }
    Ok(map)
}

fn load_config(path: &Path) -> Result<BTreeMap<String, String>, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e.to_string()))?;
    parse_config(&text)
}

const KNOWN_KEYS: &[&str] = &["max-wl", "deg-a", "deg-b", "count", "cap", "verify", "format", "out", "allow-slow", "preset"];

struct Merged {
    file: BTreeMap<String, String>,
}

impl Merged {
    fn num(&self, flag: Option<u32>, key: &str) -> Result<Option<u32>, CliError> {
        match flag {
            Some(v) => Ok(Some(v)),
            None => self
                .file
                .get(key)
                .map(|v| v.parse::<u32>().map_err(|_| CliError::Usage(format!("config value for `{key}` is not a natural number: `{v}`"))))
                .transpose(),
        }
    }

    fn flag(&self, flag: bool, key: &str) -> Result<bool, CliError> {
        if flag {
            return Ok(true);
        }
        match self.file.get(key).map(String::as_str) {
            None | Some("false") => Ok(false),
            Some("true") => Ok(true),
            Some(v) => Err(CliError::Usage(format!("config value for `{key}` must be true or false, got `{v}`"))),
        }
    }
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let file = match &cli.config {
            Some(path) => load_config(path)?,
            None => BTreeMap::new(),
        };
        if let Some(bad) = file.keys().find(|k| !KNOWN_KEYS.contains(&k.as_str())) {
            return Err(CliError::Usage(format!("unknown config key `{bad}`")));
        }
        let m = Merged { file };
        let format = match cli.format {
            Some(f) => f,
            None => m.file.get("format").map(|s| s.parse::<Format>().map_err(CliError::Usage)).transpose()?.unwrap_or_default(),
        };
        let out = cli.out.or_else(|| m.file.get("out").map(PathBuf::from));
        let allow_slow = m.flag(cli.allow_slow, "allow-slow")?;
        let command = match cli.command {
            CommandArgs::Table1 { max_wl } => Command::Table1 { max_wl: m.num(max_wl, "max-wl")?.unwrap_or(10) },
            CommandArgs::Table2 { max_wl } => Command::Table2 { max_wl: m.num(max_wl, "max-wl")?.unwrap_or(9) },
            CommandArgs::Counterexample(a) => {
                let deg_a = m.num(a.deg_a, "deg-a")?.unwrap_or(3);
                let deg_b = m.num(a.deg_b, "deg-b")?.unwrap_or(3);
                let cap = m.num(a.cap, "cap")?.unwrap_or(FAST_COUNTEREXAMPLE_CAP);
                let count = match m.num(a.count, "count")? {
                    Some(c) => c,
                    None => largest_count(deg_a, deg_b, cap),
                };
                Command::Counterexample { deg_a, deg_b, count, cap, verify: m.flag(a.verify, "verify")? }
            }
            CommandArgs::DualExample { deg_a, count, cap } => Command::DualExample {
                deg_a: m.num(deg_a, "deg-a")?.unwrap_or(3),
                count: m.num(count, "count")?.unwrap_or(3),
                cap: m.num(cap, "cap")?.unwrap_or(14),
            },
            CommandArgs::CeCheck { preset, cap } => {
                let name = preset.or_else(|| m.file.get("preset").cloned()).ok_or_else(|| CliError::Usage("ce-check needs a preset".into()))?;
                let preset: Preset = name.parse()?;
                Command::CeCheck { preset, cap: m.num(cap, "cap")?.unwrap_or(preset.default_cap()) }
            }
        };
        let config = RunConfig { command, format, out, allow_slow };
        config.validate()?;
        Ok(config)
    }

    pub fn new(command: Command) -> Self {
        RunConfig { command, format: Format::Tsv, out: None, allow_slow: false }
    }

    /// Range and cost guards that do not need any algebra.
    pub fn validate(&self) -> Result<(), CliError> {
        let slow = |what: &str, cap: u32, fast: u32| -> Result<(), CliError> {
            if cap > fast && !self.allow_slow {
                return Err(CliError::Usage(format!("{what} cap {cap} exceeds the fast limit {fast}; pass --allow-slow to run it")));
            }
            Ok(())
        };
        match self.command {
            Command::Table1 { max_wl } => range("max-wl", max_wl, 2, 14),
            Command::Table2 { max_wl } => range("max-wl", max_wl, 1, 10),
            Command::Counterexample { deg_a, deg_b, count, cap, .. } => {
                odd("deg-a", deg_a)?;
                odd("deg-b", deg_b)?;
                if count == 0 {
                    return Err(CliError::Usage("count must be at least 1".into()));
                }
                let need = 2 * deg_b + (2 * count - 1) * deg_a + 1;
                if cap < need {
                    return Err(CliError::Usage(format!("cap {cap} is below the degree {need} of the last generator")));
                }
                slow("counterexample", cap, FAST_COUNTEREXAMPLE_CAP)
            }
            Command::DualExample { deg_a, count, cap } => {
                odd("deg-a", deg_a)?;
                if count == 0 {
                    return Err(CliError::Usage("count must be at least 1".into()));
                }
                slow("dual-example", cap, FAST_DUAL_CAP)
            }
            Command::CeCheck { preset, cap } => {
                let min = match preset {
                    Preset::SphereOdd => 4,
                    Preset::WedgeTwoSpheres => 3,
                    Preset::CounterexampleDefault => 11,
                };
                if cap < min {
                    return Err(CliError::Usage(format!("cap {cap} for {} must be at least {min}", preset.name())));
                }
                slow("ce-check", cap, FAST_CE_CAP)
            }
        }
    }
}

/// Number of generators `x_1, x_3, …` whose degrees fit under `cap`, at least one.
pub fn largest_count(deg_a: u32, deg_b: u32, cap: u32) -> u32 {
    let mut count = 1;
    while 2 * deg_b + (2 * count + 1) * deg_a < cap {
        count += 1;
    }
    count
}

fn range(name: &str, v: u32, lo: u32, hi: u32) -> Result<(), CliError> {
    if v < lo || v > hi {
        return Err(CliError::Usage(format!("{name} must lie in {lo}..={hi}, got {v}")));
    }
    Ok(())
}

fn odd(name: &str, v: u32) -> Result<(), CliError> {
    if v.is_multiple_of(2) || v < 3 {
        return Err(CliError::Usage(format!("{name} must be odd and at least 3, got {v}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<RunConfig, CliError> {
        RunConfig::from_cli(Cli::try_parse_from(std::iter::once("dglie").chain(args.iter().copied())).unwrap())
    }

    #[test]
    fn defaults_and_ranges() {
        assert_eq!(parse(&["table1"]).unwrap().command, Command::Table1 { max_wl: 10 });
        assert!(parse(&["table1", "--max-wl", "15"]).is_err());
        assert!(parse(&["table1", "--max-wl", "1"]).is_err());
        assert!(parse(&["table2", "--max-wl", "11"]).is_err());
        assert!(parse(&["table2", "--max-wl", "1"]).is_ok());
    }

    #[test]
    fn counterexample_counts_fit_the_cap() {
        assert_eq!(largest_count(3, 3, 30), 4);
        assert_eq!(largest_count(3, 5, 30), 3);
        assert_eq!(largest_count(5, 3, 30), 2);
        let c = parse(&["counterexample"]).unwrap();
        assert_eq!(c.command, Command::Counterexample { deg_a: 3, deg_b: 3, count: 4, cap: 30, verify: false });
        assert!(matches!(parse(&["counterexample", "--deg-a", "4"]), Err(CliError::Usage(_))));
        assert!(parse(&["counterexample", "--count", "5"]).is_err());
        assert!(parse(&["counterexample", "--cap", "32", "--count", "4"]).is_err());
        assert!(parse(&["counterexample", "--cap", "32", "--count", "4", "--allow-slow"]).is_ok());
    }

    #[test]
    fn presets() {
        let c = parse(&["ce-check", "wedge-two-spheres"]).unwrap();
        assert_eq!(c.command, Command::CeCheck { preset: Preset::WedgeTwoSpheres, cap: 4 });
        assert!(parse(&["ce-check", "torus"]).is_err());
        assert!(parse(&["ce-check"]).is_err());
    }

    #[test]
    fn config_file_fills_missing_flags() {
        let map = parse_config("# run\nmax_wl = 7\n\nformat=json\n").unwrap();
        assert_eq!(map["max-wl"], "7");
        assert_eq!(map["format"], "json");
        assert!(parse_config("max-wl 7").is_err());
        assert!(parse_config("cap=1\ncap=2").is_err());
    }
}
