//! Command-line front end for `zetakit`.
//!
//! [`run`] parses an argument vector, dispatches to the library and returns a
//! [`CommandResult`] together with the process exit code: 0 on success, 1 on a
//! usage error, 2 on a domain error, 3 when a size or enumeration cap is
//! exceeded and 4 on an internal consistency failure.

mod args;
mod commands;
pub mod output;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{json, Value};

pub use args::Cli;

/// JSON schema version carried in every payload.
pub const SCHEMA: u64 = 1;

pub const SUBCOMMANDS: [&str; 16] = [
    "curve-count",
    "curve-zeta",
    "split-compare",
    "dedekind",
    "gassmann",
    "bc-act",
    "bc-state",
    "bc-check-iso",
    "lseries",
    "l-fingerprint",
    "epstein",
    "eisenstein",
    "dilog",
    "torus-zeta",
    "torus-distance",
    "paper-check",
];

/// Which subcommand exposes each library operation. Numeric kernels that
/// only feed other operations are listed under the command that drives them.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("numeric::bernoulli_numbers", "lseries"),
    ("numeric::hurwitz_zeta", "lseries"),
    ("numeric::riemann_zeta", "bc-state"),
    ("numeric::dilog", "dilog"),
    ("numeric::bloch_wigner", "dilog"),
    ("ff_curves::make_extension_field", "curve-count"),
    ("ff_curves::count_points", "curve-count"),
    ("ff_curves::zeta_numerator", "curve-zeta"),
    ("ff_curves::predict_counts", "curve-zeta"),
    ("arith_equiv::factor_degrees_mod_p", "split-compare"),
    ("arith_equiv::splitting_types_equal", "split-compare"),
    ("arith_equiv::partial_dedekind_zeta", "dedekind"),
    ("arith_equiv::group_closure", "gassmann"),
    ("arith_equiv::conjugacy_classes", "gassmann"),
    ("arith_equiv::gassmann_check", "gassmann"),
    ("bc_system::act", "bc-act"),
    ("bc_system::time_evolution_phase", "bc-act"),
    ("bc_system::partition_function", "bc-state"),
    ("bc_system::gibbs_state", "bc-state"),
    ("bc_system::check_iso_candidate", "bc-check-iso"),
    ("dirichlet::unit_group_structure", "l-fingerprint"),
    ("dirichlet::evaluate", "lseries"),
    ("dirichlet::l_series", "lseries"),
    ("dirichlet::l_fingerprint", "l-fingerprint"),
    ("spectral_torus::epstein_direct", "epstein"),
    ("spectral_torus::epstein_accelerated", "epstein"),
    ("spectral_torus::eisenstein", "eisenstein"),
    ("spectral_torus::spectral_zeta_flat_torus", "torus-zeta"),
    ("spectral_torus::torus_length_bound", "torus-distance"),
    ("spectral_torus::paper_constant_check", "paper-check"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Error,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub human_text: String,
    /// `--json` was given.
    pub json: bool,
}

impl CommandResult {
    /// What the binary prints: pretty JSON with `--json`, the table otherwise.
    pub fn render(&self) -> String {
        if self.json {
            serde_json::to_string_pretty(&self.payload).expect("payload serializes")
        } else {
            self.human_text.clone()
        }
    }
}

#[derive(Debug)]
pub(crate) enum CliError {
    Usage(String),
    Lib(zetakit::Error),
}

impl From<zetakit::Error> for CliError {
    fn from(e: zetakit::Error) -> Self {
        CliError::Lib(e)
    }
}

fn error_result(kind: &str, message: String, human: String, json_flag: bool, command: Option<&str>) -> CommandResult {
    CommandResult {
        status: Status::Error,
        payload: json!({
            "schema": SCHEMA,
            "status": "error",
            "command": command,
            "error": { "kind": kind, "message": message },
        }),
        human_text: human,
        json: json_flag,
    }
}

pub fn run<I, T>(argv: I) -> (CommandResult, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let wants_json = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let r = CommandResult {
                    status: Status::Ok,
                    payload: json!({ "schema": SCHEMA, "status": "ok", "help": text }),
                    human_text: text,
                    json: false,
                };
                return (r, 0);
            }
            let msg = e.kind().to_string();
            return (error_result("usage", msg, text, wants_json, None), 1);
        }
    };
    let name = command_name(&cli);
    match commands::dispatch(&cli) {
        Ok((payload, human_text)) => {
            let mut body = match payload {
                Value::Object(m) => m,
                other => {
                    let mut m = serde_json::Map::new();
                    m.insert("result".into(), other);
                    m
                }
            };
            body.insert("schema".into(), json!(SCHEMA));
            body.insert("status".into(), json!("ok"));
            body.insert("command".into(), json!(name));
            let r = CommandResult {
                status: Status::Ok,
                payload: Value::Object(body),
                human_text,
                json: cli.json,
            };
            (r, 0)
        }
        Err(CliError::Usage(msg)) => {
            let human = format!("error: {msg}\n\nRun `zetakit {name} --help` for usage.");
            (error_result("usage", msg, human, cli.json, Some(name)), 1)
        }
        Err(CliError::Lib(e)) => {
            let (kind, code) = match e {
                zetakit::Error::Domain(_) => ("domain", 2),
                zetakit::Error::Unsupported(_) => ("unsupported", 2),
                zetakit::Error::Size(_) => ("size", 3),
                zetakit::Error::Internal(_) => ("internal", 4),
            };
            let human = format!("error: {e}");
            (error_result(kind, e.to_string(), human, cli.json, Some(name)), code)
        }
    }
}

fn command_name(cli: &Cli) -> &'static str {
    use args::Command::*;
    match cli.command {
        CurveCount(_) => "curve-count",
        CurveZeta(_) => "curve-zeta",
        SplitCompare(_) => "split-compare",
        Dedekind(_) => "dedekind",
        Gassmann(_) => "gassmann",
        BcAct(_) => "bc-act",
        BcState(_) => "bc-state",
        BcCheckIso(_) => "bc-check-iso",
        Lseries(_) => "lseries",
        LFingerprint(_) => "l-fingerprint",
        Epstein(_) => "epstein",
        Eisenstein(_) => "eisenstein",
        Dilog(_) => "dilog",
        TorusZeta(_) => "torus-zeta",
        TorusDistance(_) => "torus-distance",
        PaperCheck => "paper-check",
    }
}
