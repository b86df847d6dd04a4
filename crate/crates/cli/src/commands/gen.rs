use aec_core::transforms::{gen_lbb, gen_li, gen_lj};
use aec_core::Alphabet;

use super::machine_output;
use crate::args::{Format, GenCmd};
use crate::error::{CliError, CliResult};
use crate::output::Outcome;

pub fn run(cmd: &GenCmd, format: Format) -> CliResult<Outcome> {
    machine_output(format)?;
    let d = match cmd {
        GenCmd::Lbb => gen_lbb(),
        GenCmd::Li { alphabet } => gen_li(Alphabet::new(alphabet.iter().cloned())?),
        GenCmd::Lj { j } => {
            if *j == 0 {
                return Err(CliError::Usage("--j must be at least 1".into()));
            }
            gen_lj(*j)
        }
    };
    Ok(Outcome::ok(d.to_text()))
}
