use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "coulphase",
    version,
    about = "Coulomb phase shifts σ_l(η): exact, asymptotic and semiclassical"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Series relative tolerance (for `zero`: root tolerance). Overrides COULPHASE_TOL
    #[arg(long, global = true)]
    pub tol: Option<f64>,

    /// Significant digits for numeric cells
    #[arg(long, default_value_t = 10, global = true,
          value_parser = clap::value_parser!(u8).range(1..=17))]
    pub precision: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One phase shift σ_l(η)
    #[command(allow_negative_numbers = true)]
    Phase {
        #[arg(long)]
        l: u32,
        #[arg(long)]
        eta: f64,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
    },
    /// σ^(0)/π, σ^(1)/π and exact σ/π for η ∈ {0.1, 1} and l ∈ {0, 1, 2}
    Table,
    /// Evaluate methods over a uniform grid of one variable
    Scan(ScanArgs),
    /// Relative error of σ₀^(1) against the exact σ₀ over a grid in η
    #[command(allow_negative_numbers = true)]
    Relerr {
        #[arg(long, default_value_t = 0.05)]
        start: f64,
        #[arg(long, default_value_t = 5.0)]
        stop: f64,
        #[arg(long, default_value_t = 200)]
        steps: usize,
    },
    /// Positive zero of σ₀(η)
    Zero,
    /// Classical or quantum deflection function
    #[command(allow_negative_numbers = true)]
    Deflection {
        #[arg(long, value_enum, default_value_t = Mode::Classical)]
        mode: Mode,
        /// Partial wave (quantum), or λ = l (classical)
        #[arg(long)]
        l: Option<u32>,
        /// Semiclassical angular momentum (classical only)
        #[arg(long, conflicts_with = "l")]
        lambda: Option<f64>,
        #[arg(long)]
        eta: f64,
    },
    /// Eikonal phase for sharp, exponential and Gaussian screening
    #[command(allow_negative_numbers = true)]
    Eikonal {
        /// Impact parameter
        #[arg(long)]
        b: f64,
        /// Screening length
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long)]
        eta: f64,
        /// Screening shapes (all four if omitted)
        #[arg(long, value_enum, value_delimiter = ',')]
        method: Vec<Method>,
    },
    /// WKB phase at λ, or at λ = l + 1/2 next to the exact σ_l
    #[command(allow_negative_numbers = true)]
    Wkb {
        #[arg(long, conflicts_with = "l")]
        lambda: Option<f64>,
        #[arg(long)]
        l: Option<u32>,
        #[arg(long)]
        eta: f64,
    },
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct ScanArgs {
    /// Scanned variable
    #[arg(long, value_enum)]
    pub var: ScanVar,
    #[arg(long)]
    pub start: f64,
    #[arg(long)]
    pub stop: f64,
    /// Grid points, endpoints included (default: 101, or every integer for `l`)
    #[arg(long)]
    pub steps: Option<usize>,
    /// Comma-separated methods
    #[arg(long, value_enum, value_delimiter = ',', default_value = "exact")]
    pub method: Vec<Method>,
    /// Fixed partial wave when scanning η
    #[arg(long)]
    pub l: Option<u32>,
    /// Fixed η when scanning l, λ or b/a
    #[arg(long)]
    pub eta: Option<f64>,
    /// Screening length when scanning b/a
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanVar {
    Eta,
    L,
    Lambda,
    #[value(name = "b_over_a")]
    BOverA,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Classical,
    Quantum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Method {
    /// Finite arctangent sum on top of the σ₀ series
    Exact,
    /// σ^(0) plus the Gudermann remainder
    Gudermann,
    Order0,
    Order1,
    /// Power series in η (l = 0, |η| < 1)
    PowerSeries,
    /// π/4 + η(ln η - 1) (l = 0)
    LargeEta,
    /// η ln(l + 1)
    LogApprox,
    /// σ^(0) plus the truncated Stirling series
    Stirling,
    Wkb,
    /// Classical deflection 2 atan(η/λ)
    Deflection,
    Sharp,
    SharpLimit,
    Exponential,
    Gaussian,
}

impl Method {
    pub const PARTIAL_WAVE: [Method; 9] = [
        Method::Exact,
        Method::Gudermann,
        Method::Order0,
        Method::Order1,
        Method::PowerSeries,
        Method::LargeEta,
        Method::LogApprox,
        Method::Stirling,
        Method::Wkb,
    ];
    pub const SEMICLASSICAL: [Method; 2] = [Method::Wkb, Method::Deflection];
    pub const SCREENING: [Method; 4] = [
        Method::Sharp,
        Method::SharpLimit,
        Method::Exponential,
        Method::Gaussian,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Gudermann => "gudermann",
            Method::Order0 => "order0",
            Method::Order1 => "order1",
            Method::PowerSeries => "power_series",
            Method::LargeEta => "large_eta",
            Method::LogApprox => "log_approx",
            Method::Stirling => "stirling",
            Method::Wkb => "wkb",
            Method::Deflection => "classical",
            Method::Sharp => "sharp",
            Method::SharpLimit => "sharp_limit",
            Method::Exponential => "exponential",
            Method::Gaussian => "gaussian",
        }
    }

    /// Whether the method reports an error bound (and gets a column for it).
    pub fn has_bound(self) -> bool {
        matches!(
            self,
            Method::Exact
                | Method::Gudermann
                | Method::Order0
                | Method::PowerSeries
                | Method::Stirling
        )
    }
}
