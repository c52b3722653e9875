use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use solweights::catalog::System;
use solweights::lie::{Branch, SeriesGroup};
use solweights::poly::verify::MAX_LEVEL;
use solweights::poly::LinearForm;

#[derive(Debug, Parser)]
#[command(name = "owc", version, about = "Weight sums and character-defect counts for the Spin7(q) and Sol(q) 2-fusion systems")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    /// Directory for cached weight rows.
    #[arg(long, global = true, env = "OWC_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Run every kernel on the calling thread.
    #[arg(long, global = true)]
    pub sequential: bool,
    /// Do not report progress on standard error.
    #[arg(long, short, global = true)]
    pub quiet: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight sums w_P(D, 0, d) of catalog rows.
    Weights(WeightsArgs),
    /// Fit rows to polynomials in x = 2^l and compare them with the tables.
    Interpolate(InterpolateArgs),
    /// Compare computed values with every shipped table; exit 1 on any mismatch.
    Verify(VerifyArgs),
    /// Character degrees, their valuations, and defect counts on the Lie side.
    Lie(LieArgs),
    /// Equality of defect counts with weight sums, and the conjecture checks.
    Owc(OwcArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Markdown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SystemSel {
    #[value(name = "H")]
    H,
    #[value(name = "F")]
    F,
    Both,
}

impl SystemSel {
    pub fn systems(self) -> Vec<System> {
        match self {
            SystemSel::H => vec![System::H],
            SystemSel::F => vec![System::F],
            SystemSel::Both => vec![System::H, System::F],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BranchSel {
    #[value(name = "1")]
    One,
    #[value(name = "3")]
    Three,
    Both,
}

impl BranchSel {
    pub fn branches(self) -> Vec<Branch> {
        match self {
            BranchSel::One => vec![Branch::Q1],
            BranchSel::Three => vec![Branch::Q3],
            BranchSel::Both => Branch::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupSel {
    Spin7,
    Spets,
    Both,
}

impl GroupSel {
    pub fn groups(self) -> Vec<SeriesGroup> {
        match self {
            GroupSel::Spin7 => vec![SeriesGroup::Spin7],
            GroupSel::Spets => vec![SeriesGroup::Spets],
            GroupSel::Both => vec![SeriesGroup::Spin7, SeriesGroup::Spets],
        }
    }
}

/// `3`, `0..2` (inclusive), `0..=2` or `1,3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Levels(pub Vec<u32>);

pub fn parse_levels(s: &str) -> Result<Levels, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("bad level {t:?}"));
    let mut v = Vec::new();
    for part in s.split(',') {
        if let Some((a, b)) = part.split_once("..") {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(format!("empty range {part}"));
            }
            v.extend(a..=b);
        } else {
            v.push(num(part)?);
        }
    }
    if let Some(&l) = v.iter().find(|&&l| l > MAX_LEVEL) {
        return Err(format!("level {l} is above {MAX_LEVEL}"));
    }
    v.sort_unstable();
    v.dedup();
    Ok(Levels(v))
}

fn parse_form(s: &str) -> Result<LinearForm, String> {
    s.parse().map_err(|e: solweights::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct WeightsArgs {
    /// Row ids such as S, CS_U, QQRt, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub spec: Vec<String>,
    /// Defect as a form in l, e.g. 3l+6; all defects when omitted.
    #[arg(long, value_parser = parse_form)]
    pub d_offset: Option<LinearForm>,
    /// Levels: 2, 0..2 (inclusive), 0..=2 or 1,3; at most 4.
    #[arg(long, value_parser = parse_levels)]
    pub l: Levels,
    #[arg(long, value_enum, ignore_case = true, default_value_t = SystemSel::Both)]
    pub system: SystemSel,
}

#[derive(Debug, Args)]
pub struct InterpolateArgs {
    #[arg(long, value_enum, ignore_case = true, default_value_t = SystemSel::Both)]
    pub system: SystemSel,
    /// Restrict to these row ids; the summary rows are then omitted.
    #[arg(long, value_delimiter = ',')]
    pub spec: Vec<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, ignore_case = true, default_value_t = SystemSel::Both)]
    pub system: SystemSel,
    /// Check the tables evaluated at these levels instead of fitting.
    #[arg(long, value_parser = parse_levels)]
    pub l: Option<Levels>,
}

#[derive(Debug, Args)]
pub struct LieArgs {
    #[arg(long, value_enum, default_value_t = GroupSel::Both)]
    pub group: GroupSel,
    #[arg(long, value_enum, default_value_t = BranchSel::Both)]
    pub branch: BranchSel,
    /// Print the degree tables with recomputed valuations.
    #[arg(long, conflicts_with = "l")]
    pub series: bool,
    /// Numeric defect counts at these levels.
    #[arg(long, value_parser = parse_levels)]
    pub l: Option<Levels>,
}

#[derive(Debug, Args)]
pub struct OwcArgs {
    #[arg(long, value_enum, default_value_t = BranchSel::Both)]
    pub branch: BranchSel,
    /// Also compare numerically with computed weight sums at these levels.
    #[arg(long, value_parser = parse_levels)]
    pub l: Option<Levels>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels() {
        assert_eq!(parse_levels("0..2").unwrap().0, vec![0, 1, 2]);
        assert_eq!(parse_levels("0..=2").unwrap().0, vec![0, 1, 2]);
        assert_eq!(parse_levels("3,1,1").unwrap().0, vec![1, 3]);
        assert!(parse_levels("2..1").is_err());
        assert!(parse_levels("5").is_err());
        assert!(parse_levels("x").is_err());
    }
}
