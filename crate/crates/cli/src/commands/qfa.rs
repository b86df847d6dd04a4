use aec_core::qfa::{
    accept_prob, branch_run, extract, from_dfa, gen_m2, gen_mj, is_zero_error, max_error_with_witness, step_energy,
    ExtractOptions,
};
use aec_core::transforms::{gen_lbb, gen_lj, in_lbb, in_li, in_lj};
use aec_core::{Error, Qfa};
use serde_json::json;

use super::{load_dfa, load_qfa, machine_output, no_csv};
use crate::args::{Format, QfaCmd};
use crate::error::{CliError, CliResult};
use crate::output::{fixed, probability, quoted_word, Outcome, Report};

enum Lang {
    Lbb,
    Li,
    Lj(usize),
}

impl Lang {
    fn parse(tokens: &[String]) -> CliResult<Self> {
        match tokens {
            [l] if l == "lbb" => Ok(Lang::Lbb),
            [l] if l == "li" => Ok(Lang::Li),
            [l, j] if l == "lj" => j
                .parse()
                .ok()
                .filter(|&j| j >= 1)
                .map(Lang::Lj)
                .ok_or_else(|| CliError::Usage(format!("--lang lj expects a positive integer, got {j:?}"))),
            _ => Err(CliError::Usage(format!("--lang expects lbb, li or lj J, got {:?}", tokens.join(" ")))),
        }
    }

    fn name(&self) -> String {
        match self {
            Lang::Lbb => "lbb".into(),
            Lang::Li => "li".into(),
            Lang::Lj(j) => format!("lj {j}"),
        }
    }

    /// The language's own alphabet must match the machine's.
    fn check_alphabet(&self, m: &Qfa) -> CliResult<()> {
        let expected = match self {
            Lang::Lbb => gen_lbb().alphabet().clone(),
            Lang::Lj(j) => gen_lj(*j).alphabet().clone(),
            Lang::Li => return Ok(()),
        };
        if &expected != m.alphabet() {
            return Err(Error::AlphabetMismatch(expected.symbols().to_vec(), m.alphabet().symbols().to_vec()).into());
        }
        Ok(())
    }

    fn contains(&self, w: &[usize]) -> bool {
        match self {
            Lang::Lbb => in_lbb(w),
            Lang::Li => in_li(w),
            Lang::Lj(j) => in_lj(*j, w),
        }
    }
}

pub fn run(cmd: &QfaCmd, format: Format) -> CliResult<Outcome> {
    match cmd {
        QfaCmd::Validate { file } => {
            no_csv(format)?;
            let (m, input) = load_qfa(file)?;
            let residual = (0..m.alphabet().len())
                .map(|s| m.superoperator(s).completeness_residual())
                .fold(m.endmarker().completeness_residual(), f64::max);
            let payload = json!({
                "states": m.state_count(),
                "alphabet": m.alphabet().symbols(),
                "operation_elements": m.element_count(),
                "step_bits": step_energy(&m),
                "max_completeness_residual": residual,
            });
            if format == Format::Json {
                return Ok(Outcome::ok(Report::new("verification", vec![input], json!({}), payload).render()));
            }
            Ok(Outcome::ok(format!(
                "valid QFA: {} states over {{{}}}, {} operation elements per symbol\nbits per step: {}\nmax completeness residual: {residual:.3e}\n",
                m.state_count(),
                m.alphabet().symbols().join(", "),
                m.element_count(),
                fixed(step_energy(&m)),
            )))
        }
        QfaCmd::Sim { file, word, branches } => {
            no_csv(format)?;
            let (m, input) = load_qfa(file)?;
            let w = m.alphabet().parse_word(word)?;
            let p = accept_prob(&m, &w)?;
            let ensemble = if *branches { Some(branch_run(&m, &w)?) } else { None };
            if format == Format::Json {
                let branch_list = ensemble.as_ref().map(|e| {
                    e.branches
                        .iter()
                        .map(|b| {
                            json!({
                                "probability": b.probability,
                                "state": b.state.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
                            })
                        })
                        .collect::<Vec<_>>()
                });
                let payload = json!({ "accept_probability": p, "branches": branch_list });
                let params = json!({ "word": m.alphabet().format_word(&w) });
                return Ok(Outcome::ok(Report::new("verification", vec![input], params, payload).render()));
            }
            let mut s = format!("{}\n", probability(p));
            if let Some(e) = ensemble {
                for (i, b) in e.branches.iter().enumerate() {
                    let amps: Vec<String> = b
                        .state
                        .iter()
                        .enumerate()
                        .filter(|(_, z)| z.norm_sqr() > 1e-24)
                        .map(|(q, z)| format!("{q}:{}", fmt_complex(z.re, z.im)))
                        .collect();
                    s.push_str(&format!("branch {i}: probability {} state {}\n", probability(b.probability), amps.join(" ")));
                }
            }
            Ok(Outcome::ok(s))
        }
        QfaCmd::FromDfa { file } => {
            machine_output(format)?;
            let mut s = from_dfa::<f64>(&load_dfa(file)?.0).to_json();
            s.push('\n');
            Ok(Outcome::ok(s))
        }
        QfaCmd::Extract { file, verify_len } => {
            no_csv(format)?;
            let (m, input) = load_qfa(file)?;
            let x = extract(&m, ExtractOptions { verify_len: *verify_len })?;
            if format == Format::Json {
                let payload = json!({
                    "dfa": x.dfa.to_text(),
                    "subspace_dimensions": x.subspaces.iter().map(|s| s.dim()).collect::<Vec<_>>(),
                    "max_in_degree": x.dfa.in_degree_profile().max(),
                });
                let params = json!({ "verify_len": verify_len });
                return Ok(Outcome::ok(Report::new("extraction", vec![input], params, payload).render()));
            }
            Ok(Outcome::ok(x.dfa.to_text()))
        }
        QfaCmd::ZeroError { file, max_len } => {
            no_csv(format)?;
            let (m, input) = load_qfa(file)?;
            let check = is_zero_error(&m, *max_len)?;
            let witness = check.witness.as_ref().map(|w| m.alphabet().format_word(w));
            let data = if format == Format::Json {
                let payload = json!({
                    "zero_error": check.zero_error,
                    "witness": witness,
                    "probability": check.probability,
                });
                Report::new("verification", vec![input], json!({ "max_len": max_len }), payload).render()
            } else if check.zero_error {
                format!("zero-error on all words of length <= {max_len}\n")
            } else {
                format!(
                    "not zero-error: word {} accepted with probability {}\n",
                    quoted_word(witness.as_deref().unwrap_or_default()),
                    probability(check.probability.unwrap_or(f64::NAN))
                )
            };
            Ok(if check.zero_error { Outcome::ok(data) } else { Outcome::failed(data) })
        }
        QfaCmd::MaxError { file, lang, max_len } => {
            no_csv(format)?;
            let lang = Lang::parse(lang)?;
            let (m, input) = load_qfa(file)?;
            lang.check_alphabet(&m)?;
            let worst = max_error_with_witness(&m, |w| lang.contains(w), *max_len);
            let word = m.alphabet().format_word(&worst.word);
            if format == Format::Json {
                let payload = json!({ "max_error": worst.error, "word": word });
                let params = json!({ "lang": lang.name(), "max_len": max_len });
                return Ok(Outcome::ok(Report::new("verification", vec![input], params, payload).render()));
            }
            Ok(Outcome::ok(format!(
                "max error = {} (word {}; all words of length <= {max_len})\n",
                probability(worst.error),
                quoted_word(&word)
            )))
        }
        QfaCmd::GenM2 => {
            machine_output(format)?;
            Ok(Outcome::ok(gen_m2::<f64>().to_json() + "\n"))
        }
        QfaCmd::GenMj { j } => {
            machine_output(format)?;
            Ok(Outcome::ok(gen_mj::<f64>(*j)?.to_json() + "\n"))
        }
    }
}

fn fmt_complex(re: f64, im: f64) -> String {
    let clean = |x: f64| if x.abs() < 5e-13 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im == 0.0 {
        fixed(re)
    } else if im < 0.0 {
        format!("{}-{}i", fixed(re), fixed(-im))
    } else {
        format!("{}+{}i", fixed(re), fixed(im))
    }
}
