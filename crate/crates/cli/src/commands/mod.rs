mod dfa;
mod energy;
mod gen;
mod oracle;
mod qfa;

use std::path::Path;

use aec_core::{Dfa, Qfa};

use crate::args::{Cli, Format, Group};
use crate::error::{CliError, CliResult};
use crate::output::{read, Input, Outcome};

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    let format = cli.format;
    match &cli.group {
        Group::Dfa(cmd) => dfa::run(cmd, format),
        Group::Energy(cmd) => energy::run(cmd, format),
        Group::Qfa(cmd) => qfa::run(cmd, format),
        Group::Gen(cmd) => gen::run(cmd, format),
        Group::Oracle(cmd) => oracle::run(cmd, format),
    }
}

pub(crate) fn load_dfa(path: &Path) -> CliResult<(Dfa, Input)> {
    let bytes = read(path)?;
    let text = String::from_utf8_lossy(&bytes);
    let d = Dfa::parse(&text).map_err(|source| CliError::Load { path: path.to_path_buf(), source })?;
    Ok((d, Input::file(path, &bytes)))
}

pub(crate) fn load_qfa(path: &Path) -> CliResult<(Qfa, Input)> {
    let bytes = read(path)?;
    let m = Qfa::from_json(&String::from_utf8_lossy(&bytes))
        .map_err(|source| CliError::Load { path: path.to_path_buf(), source })?;
    Ok((m, Input::file(path, &bytes)))
}

/// Commands whose only output is a machine accept the text format and
/// nothing else.
pub(crate) fn machine_output(format: Format) -> CliResult<()> {
    match format {
        Format::Text => Ok(()),
        other => Err(CliError::Usage(format!("--format {other:?} is not supported for machine output").to_lowercase())),
    }
}

pub(crate) fn no_csv(format: Format) -> CliResult<()> {
    match format {
        Format::Csv => Err(CliError::Usage("--format csv is only supported by `energy profile`".into())),
        _ => Ok(()),
    }
}
