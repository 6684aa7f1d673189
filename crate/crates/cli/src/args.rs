use clap::{Args, Parser, Subcommand, ValueEnum};

const POLY_HELP: &str = "integer coefficients, highest degree first, comma separated";

#[derive(Debug, Parser)]
#[command(
    name = "zetakit",
    version,
    about = "Zeta functions, L-series and spectral invariants",
    disable_help_subcommand = true,
    after_help = "Polynomials are given high-to-low: y^2 = x^5 + x^3 + x^2 - x - 1 over F_3 is\n  zetakit curve-count --p 3 --f 1,0,1,1,-1,-1 --n 7\n\nExit codes: 0 ok, 1 usage, 2 domain error, 3 size or cap exceeded."
)]
pub struct Cli {
    /// Emit JSON (schema 1) instead of text tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Absolute tolerance for Euler-Maclaurin truncation (lseries, l-fingerprint, bc-state).
    #[arg(long, global = true, value_name = "TOL")]
    pub tol: Option<f64>,
    /// Prime or integer bound (split-compare, dedekind, bc-check-iso).
    #[arg(long, global = true, value_name = "B")]
    pub bound: Option<u64>,
    /// Grid resolution for torus-distance.
    #[arg(long, global = true, value_name = "N")]
    pub grid: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Demo {
    /// GL(3,2) with vector and plane stabilizers.
    Gl32,
    /// x^7-7x+3 and x^7+14x^4-42x^2-21x+9.
    Perlis,
    /// x^8-18 and x^8-288.
    Komatsu,
    /// y^2 = x^5 ± x^3 + x^2 - x - 1 over F_3.
    Howe,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Point counts N_1..N_n of y^2 = f(x) over F_{p^k}.
    CurveCount(CurveArgs),
    /// Zeta numerator P(T) and the counts it predicts.
    CurveZeta(CurveArgs),
    /// Compare splitting types of two polynomials up to --bound.
    SplitCompare(SplitArgs),
    /// Truncated Dedekind Euler product over clean primes up to --bound.
    Dedekind(DedekindArgs),
    /// Gassmann criterion and conjugacy for subgroups H1, H2 of G.
    Gassmann(GassmannArgs),
    /// Semigroup action n * x = nx mod M and time-evolution phase n^{it}.
    BcAct(BcActArgs),
    /// Gibbs state at inverse temperature beta on a level-M observable.
    BcState(BcStateArgs),
    /// Check a candidate isomorphism of two level-M systems.
    BcCheckIso(BcIsoArgs),
    /// Dirichlet L-series L(s, chi).
    Lseries(LseriesArgs),
    /// L-values of every character mod M.
    LFingerprint(FingerprintArgs),
    /// Epstein zeta of a positive definite form a m^2 + b mn + c n^2.
    Epstein(EpsteinArgs),
    /// Real-analytic Eisenstein series E(tau, s).
    Eisenstein(EisensteinArgs),
    /// Dilogarithm Li_2(z) and Bloch-Wigner D(z).
    Dilog(DilogArgs),
    /// Spectral zeta of the flat torus R^2/L.
    TorusZeta(TorusZetaArgs),
    /// sup over s of |log zeta_X(s) - log zeta_Y(s)| for two flat tori.
    TorusDistance(TorusDistanceArgs),
    /// Dilogarithm, Epstein and Eisenstein constants at the square and hexagonal points.
    PaperCheck,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Odd prime.
    #[arg(long, required_unless_present = "demo")]
    pub p: Option<u64>,
    #[arg(long, help = POLY_HELP, value_parser = parse_ints, allow_hyphen_values = true)]
    #[arg(required_unless_present = "demo")]
    pub f: Option<List<i64>>,
    /// Largest extension degree.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, conflicts_with_all = ["p", "f"])]
    pub demo: Option<Demo>,
}

#[derive(Debug, Args)]
pub struct SplitArgs {
    #[arg(long, help = POLY_HELP, value_parser = parse_ints, allow_hyphen_values = true)]
    #[arg(required_unless_present = "demo")]
    pub f: Option<List<i64>>,
    #[arg(long, help = POLY_HELP, value_parser = parse_ints, allow_hyphen_values = true)]
    #[arg(required_unless_present = "demo")]
    pub g: Option<List<i64>>,
    /// Also report both factorization patterns at this prime.
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long, conflicts_with_all = ["f", "g"])]
    pub demo: Option<Demo>,
}

#[derive(Debug, Args)]
pub struct DedekindArgs {
    #[arg(long, help = POLY_HELP, value_parser = parse_ints, allow_hyphen_values = true)]
    #[arg(required_unless_present = "demo")]
    pub f: Option<List<i64>>,
    #[arg(long, default_value_t = 2.0)]
    pub s: f64,
    #[arg(long, conflicts_with = "f")]
    pub demo: Option<Demo>,
}

#[derive(Debug, Args)]
pub struct GassmannArgs {
    /// JSON file: {"domain_size", "generators": [[images]], "h1": {...}, "h2": {...}},
    /// subgroups given by "generators" or "elements" image arrays.
    #[arg(long, required_unless_present = "demo")]
    pub group: Option<std::path::PathBuf>,
    #[arg(long, conflicts_with = "group")]
    pub demo: Option<Demo>,
    /// Compare H1 with itself (control).
    #[arg(long)]
    pub same: bool,
}

#[derive(Debug, Args)]
pub struct BcActArgs {
    /// Level M.
    #[arg(long)]
    pub level: u64,
    #[arg(long)]
    pub n: u64,
    /// Residue mod M.
    #[arg(long)]
    pub x: u64,
    /// Time for the phase n^{it}.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<f64>,
}

#[derive(Debug, Args)]
pub struct BcStateArgs {
    #[arg(long)]
    pub level: u64,
    #[arg(long)]
    pub beta: f64,
    /// Base point, a unit mod M.
    #[arg(long, default_value_t = 1)]
    pub x0: u64,
    /// Observable as a JSON array of M [re, im] pairs; default constant 1.
    #[arg(long, conflicts_with = "character")]
    pub observable: Option<String>,
    /// Use the Dirichlet character with these exponents as the observable.
    #[arg(long, value_parser = parse_uints)]
    pub character: Option<List<u64>>,
    /// Also evaluate the truncated direct sum with this many terms.
    #[arg(long)]
    pub direct: Option<u64>,
}

#[derive(Debug, Args)]
pub struct BcIsoArgs {
    #[arg(long)]
    pub level: u64,
    /// Point map x -> u x mod M.
    #[arg(long, default_value_t = 1)]
    pub unit: u64,
    /// Swap two primes in the semigroup map, e.g. 2,3.
    #[arg(long, value_parser = parse_uints)]
    pub swap: Option<List<u64>>,
}

#[derive(Debug, Args)]
pub struct LseriesArgs {
    #[arg(long)]
    pub modulus: u64,
    /// Character exponent vector; default principal.
    #[arg(long, value_parser = parse_uints)]
    pub chi: Option<List<u64>>,
    #[arg(long)]
    pub s: f64,
    /// Also print chi(n) for n = 0..M-1.
    #[arg(long)]
    pub table: bool,
}

#[derive(Debug, Args)]
pub struct FingerprintArgs {
    #[arg(long)]
    pub modulus: u64,
    /// Integer points s >= 2.
    #[arg(long, value_parser = parse_uints, default_value = "2,3")]
    pub s: List<u64>,
}

#[derive(Debug, Args)]
pub struct EpsteinArgs {
    /// a,b,c
    #[arg(long, value_parser = parse_reals, allow_hyphen_values = true)]
    pub form: List<f64>,
    #[arg(long)]
    pub s: f64,
    /// Also run the direct sum over m^2 + n^2 <= R^2 (R >= 10).
    #[arg(long)]
    pub radius: Option<f64>,
}

#[derive(Debug, Args)]
pub struct EisensteinArgs {
    /// x,y with y > 0
    #[arg(long, value_parser = parse_reals, allow_hyphen_values = true)]
    pub tau: List<f64>,
    #[arg(long)]
    pub s: f64,
}

#[derive(Debug, Args)]
pub struct DilogArgs {
    /// re,im
    #[arg(long, value_parser = parse_reals, allow_hyphen_values = true)]
    pub z: List<f64>,
}

#[derive(Debug, Args)]
pub struct TorusZetaArgs {
    /// Basis v1x,v1y,v2x,v2y
    #[arg(long, value_parser = parse_reals, allow_hyphen_values = true)]
    pub lattice: List<f64>,
    #[arg(long)]
    pub s: f64,
}

#[derive(Debug, Args)]
pub struct TorusDistanceArgs {
    /// Basis v1x,v1y,v2x,v2y
    #[arg(long, value_parser = parse_reals, allow_hyphen_values = true)]
    pub l1: List<f64>,
    #[arg(long, value_parser = parse_reals, allow_hyphen_values = true)]
    pub l2: List<f64>,
    #[arg(long, default_value_t = 2.0)]
    pub s_lo: f64,
    #[arg(long, default_value_t = 3.0)]
    pub s_hi: f64,
}

/// Comma-separated values of one flag.
#[derive(Debug, Clone, PartialEq)]
pub struct List<T>(pub Vec<T>);

fn split<T: std::str::FromStr>(s: &str) -> Result<List<T>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| format!("cannot parse `{t}`")))
        .collect::<Result<Vec<T>, String>>()
        .map(List)
}

fn parse_ints(s: &str) -> Result<List<i64>, String> {
    split(s)
}

fn parse_uints(s: &str) -> Result<List<u64>, String> {
    split(s)
}

fn parse_reals(s: &str) -> Result<List<f64>, String> {
    split(s)
}
