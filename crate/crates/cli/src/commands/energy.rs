use aec_core::energy::{
    bits_to_joules, energy_curve_with_witnesses, energy_rate, expected_step_energy, lower_bound_margin,
    restricted_profile, stationary,
};
use aec_core::{Distribution, ExactDistribution};
use serde_json::json;

use super::{load_dfa, no_csv};
use crate::args::{EnergyCmd, Format};
use crate::error::CliResult;
use crate::output::{fixed, scientific, Outcome, Report};

pub fn run(cmd: &EnergyCmd, format: Format) -> CliResult<Outcome> {
    match cmd {
        EnergyCmd::Profile { file, max_len } => {
            let (d, input) = load_dfa(file)?;
            let curve = energy_curve_with_witnesses::<f64>(&d, *max_len);
            let witnesses: Vec<String> = curve
                .witnesses
                .as_ref()
                .expect("requested witnesses")
                .iter()
                .map(|w| d.alphabet().format_word(w))
                .collect();
            let data = match format {
                Format::Csv => {
                    let mut w = csv::Writer::from_writer(Vec::new());
                    w.write_record(["n", "bits", "witness"])?;
                    for (n, (bits, witness)) in curve.values.iter().zip(&witnesses).enumerate() {
                        w.write_record([n.to_string(), fixed(*bits), witness.clone()])?;
                    }
                    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8 fields")
                }
                Format::Json => {
                    let rows: Vec<_> = curve
                        .values
                        .iter()
                        .zip(&witnesses)
                        .enumerate()
                        .map(|(n, (bits, witness))| json!({ "n": n, "bits": bits, "witness": witness }))
                        .collect();
                    Report::new("energy-curve", vec![input], json!({ "max_len": max_len }), json!(rows)).render()
                }
                Format::Text => {
                    let mut s = format!("{:>4}  {:>18}  witness\n", "n", "bits");
                    for (n, (bits, witness)) in curve.values.iter().zip(&witnesses).enumerate() {
                        s.push_str(&format!("{n:>4}  {:>18}  {witness}\n", fixed(*bits)));
                    }
                    s
                }
            };
            Ok(Outcome::ok(data))
        }
        EnergyCmd::Rate { file } => {
            no_csv(format)?;
            let (d, input) = load_dfa(file)?;
            let rate: f64 = energy_rate(&d);
            Ok(Outcome::ok(match format {
                Format::Json => Report::new("rate", vec![input], json!({}), json!({ "bits_per_step": rate })).render(),
                _ => format!("{}\n", fixed(rate)),
            }))
        }
        EnergyCmd::Expected { file, temperature } => {
            no_csv(format)?;
            let (d, input) = load_dfa(file)?;
            let exact: ExactDistribution = stationary(&d);
            let dist: Distribution = exact.to_real();
            let chi: f64 = expected_step_energy(&d, &dist, &d.in_degree_profile())?;
            let psi: f64 = expected_step_energy(&d, &dist, &restricted_profile(&d, &exact))?;
            let joules = temperature.map(|t| bits_to_joules(chi, t)).transpose()?;
            let fractions: Vec<String> = exact.probs.iter().map(|p| p.to_string()).collect();
            if format == Format::Json {
                let payload = json!({
                    "stationary": fractions,
                    "bits_per_step": chi,
                    "bits_per_step_restricted": psi,
                    "joules_per_step": joules,
                });
                let params = json!({ "temperature_kelvin": temperature });
                return Ok(Outcome::ok(Report::new("expectation", vec![input], params, payload).render()));
            }
            let mut s = format!(
                "stationary: {}\nexpected bits per step: {}\nexpected bits per step (recurrent sources only): {}\n",
                fractions.join(" "),
                fixed(chi),
                fixed(psi)
            );
            if let (Some(t), Some(j)) = (temperature, joules) {
                s.push_str(&format!("expected joules per step at {t} K: {}\n", scientific(j)));
            }
            Ok(Outcome::ok(s))
        }
        EnergyCmd::Margin { file } => {
            no_csv(format)?;
            let (d, input) = load_dfa(file)?;
            let margin: f64 = lower_bound_margin(&d);
            Ok(Outcome::ok(match format {
                Format::Json => Report::new("expectation", vec![input], json!({}), json!({ "margin_bits": margin })).render(),
                _ => format!("{}\n", fixed(margin)),
            }))
        }
    }
}
