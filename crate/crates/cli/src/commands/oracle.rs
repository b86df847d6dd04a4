use aec_core::energy::energy_complexity;
use aec_core::oracles::{
    brute_force_energy, find_reversible_recognizer_with, inflow_search, monte_carlo_step_energy, EnumerationSpec,
};
use aec_core::transforms::gen_lj;
use serde_json::json;

use super::{load_dfa, no_csv};
use crate::args::{Format, OracleCmd};
use crate::error::{CliError, CliResult};
use crate::output::{fixed, Input, Outcome, Report};

pub fn run(cmd: &OracleCmd, format: Format) -> CliResult<Outcome> {
    no_csv(format)?;
    match cmd {
        OracleCmd::MinInflow { j, max_states, guard } => {
            if *j == 0 {
                return Err(CliError::Usage("--j must be at least 1".into()));
            }
            let target = gen_lj(*j);
            let spec = EnumerationSpec::canonical(*max_states, target.alphabet().clone()).with_guard(guard.guard);
            let search = inflow_search(&target, &spec)?;
            let bound = j + 1;
            let minimal = target.minimize().state_count();
            let holds = search.min_inflow.is_none_or(|b| b >= bound);
            if format == Format::Json {
                let payload = json!({
                    "min_inflow": search.min_inflow,
                    "bound": bound,
                    "holds": holds,
                    "recognizers": search.recognizers,
                    "minimal_states": minimal,
                    "witness": search.witness.as_ref().map(|d| d.to_text()),
                });
                let params = json!({ "j": j, "max_states": max_states, "guard": guard.guard.to_string() });
                let input = Input::generated(&format!("lj {j}"), &target.to_text());
                let report = Report::new("verification", vec![input], params, payload).render();
                return Ok(if holds { Outcome::ok(report) } else { Outcome::failed(report) });
            }
            let text = match search.min_inflow {
                Some(b) if b == bound => format!(
                    "min inflow = {b} (bound j+1={bound} attained; verified for ≤{max_states} states)\n"
                ),
                Some(b) if b > bound => {
                    format!("min inflow = {b} (bound j+1={bound} holds; verified for ≤{max_states} states)\n")
                }
                Some(b) => format!(
                    "min inflow = {b} (bound j+1={bound} VIOLATED by a recognizer with ≤{max_states} states)\n"
                ),
                None => format!(
                    "no recognizer with ≤{max_states} states (the minimal one has {minimal}); bound j+1={bound} holds vacuously\n"
                ),
            };
            Ok(if holds { Outcome::ok(text) } else { Outcome::failed(text) })
        }
        OracleCmd::Energy { file, len } => {
            let (d, input) = load_dfa(file)?;
            let brute: f64 = brute_force_energy(&d, *len)?;
            let dp: f64 = energy_complexity(&d, *len);
            let agree = (brute - dp).abs() <= 1e-9;
            let data = if format == Format::Json {
                let payload = json!({ "brute_force_bits": brute, "dynamic_program_bits": dp, "agree": agree });
                Report::new("verification", vec![input], json!({ "len": len }), payload).render()
            } else if agree {
                format!("E({len}) = {} (all words enumerated; dynamic program agrees)\n", fixed(brute))
            } else {
                format!("E({len}) = {} by enumeration but {} by dynamic program\n", fixed(brute), fixed(dp))
            };
            Ok(if agree { Outcome::ok(data) } else { Outcome::failed(data) })
        }
        OracleCmd::Reversible { file, max_states, guard } => {
            let (d, input) = load_dfa(file)?;
            let spec = EnumerationSpec::canonical(*max_states, d.alphabet().clone()).with_guard(guard.guard);
            let found = find_reversible_recognizer_with(&d, &spec)?;
            if format == Format::Json {
                let payload = json!({ "found": found.is_some(), "dfa": found.as_ref().map(|r| r.to_text()) });
                let params = json!({ "max_states": max_states, "guard": guard.guard.to_string() });
                return Ok(Outcome::ok(Report::new("verification", vec![input], params, payload).render()));
            }
            Ok(Outcome::ok(match found {
                Some(r) => format!("# reversible recognizer with {} states\n{}", r.state_count(), r.to_text()),
                None => format!("no reversible recognizer with ≤{max_states} states\n"),
            }))
        }
        OracleCmd::Mc { file, len, samples, seed } => {
            let (d, input) = load_dfa(file)?;
            let mc = monte_carlo_step_energy::<f64>(&d, *len, *samples, *seed)?;
            if format == Format::Json {
                let payload = json!({ "mean_bits_per_step": mc.mean, "standard_error": mc.std_error });
                let params = json!({ "len": len, "samples": samples, "seed": seed, "generator": "ChaCha8" });
                return Ok(Outcome::ok(Report::new("expectation", vec![input], params, payload).render()));
            }
            Ok(Outcome::ok(format!(
                "{} ± {} bits per step ({samples} words of length {len}, seed {seed})\n",
                fixed(mc.mean),
                fixed(mc.std_error)
            )))
        }
    }
}
