use aec_core::transforms::{cycle_expand, rebalance, tree_expand_with_cap};
use aec_core::Equivalence;
use serde_json::json;

use super::{load_dfa, machine_output, no_csv};
use crate::args::{DfaCmd, Format};
use crate::error::CliResult;
use crate::output::{quoted_word, Outcome, Report};

pub fn run(cmd: &DfaCmd, format: Format) -> CliResult<Outcome> {
    match cmd {
        DfaCmd::Validate { file } => {
            no_csv(format)?;
            let (d, input) = load_dfa(file)?;
            let p = d.in_degree_profile();
            let payload = json!({
                "states": d.state_count(),
                "alphabet": d.alphabet().symbols(),
                "accepting": d.accepting_states(),
                "max_in_degree": p.max(),
                "reversible": d.is_reversible(),
                "group_language": d.is_group_language(),
                "minimal_states": d.minimize().state_count(),
            });
            if format == Format::Json {
                return Ok(Outcome::ok(Report::new("verification", vec![input], json!({}), payload).render()));
            }
            Ok(Outcome::ok(format!(
                "valid DFA: {} states over {{{}}}, {} accepting\nmax same-symbol in-degree: {}\nreversible: {}\ngroup language: {}\nminimal states: {}\n",
                d.state_count(),
                d.alphabet().symbols().join(", "),
                d.accepting_states().len(),
                p.max(),
                yes_no(d.is_reversible()),
                yes_no(d.is_group_language()),
                d.minimize().state_count(),
            )))
        }
        DfaCmd::Minimize { file } => {
            machine_output(format)?;
            Ok(Outcome::ok(load_dfa(file)?.0.minimize().to_text()))
        }
        DfaCmd::Equiv { a, b } => {
            no_csv(format)?;
            let (da, ia) = load_dfa(a)?;
            let (db, ib) = load_dfa(b)?;
            let eq = da.equivalent(&db)?;
            let witness = eq.counterexample().map(|w| da.alphabet().format_word(w));
            let text = match &witness {
                None => "equivalent\n".to_string(),
                Some(w) => format!("not equivalent: shortest counterexample {}\n", quoted_word(w)),
            };
            let data = if format == Format::Json {
                let payload = json!({ "equivalent": eq.is_equivalent(), "counterexample": witness });
                Report::new("verification", vec![ia, ib], json!({}), payload).render()
            } else {
                text
            };
            Ok(match eq {
                Equivalence::Equivalent => Outcome::ok(data),
                Equivalence::Counterexample(_) => Outcome::failed(data),
            })
        }
        DfaCmd::Rebalance { file } => {
            machine_output(format)?;
            Ok(Outcome::ok(rebalance(&load_dfa(file)?.0)?.to_text()))
        }
        DfaCmd::Expand { file, depth, cap } => {
            machine_output(format)?;
            Ok(Outcome::ok(tree_expand_with_cap(&load_dfa(file)?.0, *depth, *cap)?.to_text()))
        }
        DfaCmd::CycleExpand { file, state, m } => {
            machine_output(format)?;
            Ok(Outcome::ok(cycle_expand(&load_dfa(file)?.0, *state, *m)?.to_text()))
        }
        DfaCmd::Canon { file } => {
            machine_output(format)?;
            Ok(Outcome::ok(load_dfa(file)?.0.renumber_canonical().to_text()))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
