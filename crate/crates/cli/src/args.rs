use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "kacspec",
    version,
    about = "Exact spectra of Sylvester-Kac type matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Emit the matrix of a family
    Build(FamilyArgs),
    /// Emit every closed-form eigenpair with its verification verdict
    Spectrum(FamilyArgs),
    /// Emit the eigenpair for a single index --j
    Eigvec(FamilyArgs),
    /// Check every eigenpair and the characteristic polynomial; random
    /// parameters are drawn from --seed when none are given
    Verify(FamilyArgs),
    /// Run the identity battery for G_N, S_N, H_N and C_N(alpha)
    Appendix(AppendixArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    SylvesterKac,
    Painvin,
    Krawtchouk,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// kac, general, abc, g, s, h or hahn
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long, value_enum, conflicts_with = "family")]
    pub preset: Option<Preset>,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub j: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub delta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub out: Output,
}

impl FamilyArgs {
    /// Parameter flags that were given, in a fixed order.
    pub fn given_params(&self) -> Vec<(&'static str, &str)> {
        [
            ("alpha", &self.alpha),
            ("beta", &self.beta),
            ("gamma", &self.gamma),
            ("delta", &self.delta),
            ("a", &self.a),
            ("b", &self.b),
            ("c", &self.c),
            ("p", &self.p),
        ]
        .into_iter()
        .filter_map(|(k, v)| v.as_deref().map(|v| (k, v)))
        .collect()
    }
}

#[derive(Debug, Args)]
pub struct AppendixArgs {
    #[arg(long)]
    pub n: usize,
    #[command(flatten)]
    pub out: Output,
}
