use std::collections::BTreeMap;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::automata::{Alphabet, ENDMARKER};
use crate::error::{Error, Result};
use crate::qfa::machine::{Qfa, Superoperator};
use crate::qfa::matrix::ComplexMatrix;
use crate::scalar::Real;

/// Entry `[i][j]` is the `[re, im]` amplitude from state `j` to state `i`.
type RawElement = Vec<Vec<[f64; 2]>>;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQfa {
    n: usize,
    alphabet: Vec<String>,
    start: usize,
    accept: Vec<usize>,
    superoperators: BTreeMap<String, Vec<RawElement>>,
}

impl<T: Real> Qfa<T> {
    /// Parses and validates the JSON form.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawQfa = serde_json::from_str(text)?;
        let alphabet = Alphabet::new(raw.alphabet)?;
        let mut ops = raw.superoperators;
        let mut take = |symbol: &str| -> Result<Superoperator<T>> {
            let elements = ops
                .remove(symbol)
                .ok_or_else(|| Error::Dimension(format!("missing superoperator for {symbol:?}")))?;
            elements
                .into_iter()
                .map(|rows| {
                    if rows.len() != raw.n || rows.iter().any(|r| r.len() != raw.n) {
                        return Err(Error::Dimension(format!(
                            "element of {symbol:?} is not {n}x{n}",
                            n = raw.n
                        )));
                    }
                    let rows = rows
                        .into_iter()
                        .map(|r| r.into_iter().map(|[re, im]| Complex::new(T::cast(re), T::cast(im))).collect())
                        .collect();
                    Ok(ComplexMatrix::from_rows(rows).expect("rows checked"))
                })
                .collect::<Result<Vec<_>>>()
                .map(Superoperator::new)
        };
        let endmarker = take(ENDMARKER)?;
        let symbol_ops = alphabet.symbols().iter().map(|s| take(s)).collect::<Result<Vec<_>>>()?;
        if let Some(extra) = ops.keys().next() {
            return Err(Error::UnknownSymbol(extra.clone()));
        }
        let m = Qfa::new(alphabet, symbol_ops, endmarker, raw.start, raw.accept)?;
        if m.state_count() != raw.n {
            return Err(Error::Dimension(format!("declared n = {} but elements are {}x{}", raw.n, m.state_count(), m.state_count())));
        }
        m.validate()?;
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        let element = |e: &ComplexMatrix<T>| -> RawElement {
            (0..e.rows())
                .map(|i| {
                    e.row(i)
                        .iter()
                        .map(|z| [z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN)])
                        .collect()
                })
                .collect()
        };
        let op = |s: &Superoperator<T>| s.elements().iter().map(element).collect::<Vec<_>>();
        let mut superoperators = BTreeMap::new();
        superoperators.insert(ENDMARKER.to_string(), op(self.endmarker()));
        for (i, symbol) in self.alphabet().symbols().iter().enumerate() {
            superoperators.insert(symbol.clone(), op(self.superoperator(i)));
        }
        let raw = RawQfa {
            n: self.state_count(),
            alphabet: self.alphabet().symbols().to_vec(),
            start: self.start(),
            accept: self.accepting_states(),
            superoperators,
        };
        serde_json::to_string_pretty(&raw).expect("plain data serializes")
    }
}
