//! Line-based text format:
//!
//! ```text
//! alphabet: a b
//! states: 4
//! start: 0
//! accept: 2
//! trans: 0 a 0
//! ```
//!
//! `#` starts a comment. Exactly one `trans:` line per (state, symbol).

use std::fmt::Write as _;
use std::str::FromStr;

use super::{Alphabet, Dfa, ENDMARKER};
use crate::error::{Error, Result};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_index(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a state index, got {tok:?}")))
}

impl Dfa {
    pub fn parse(text: &str) -> Result<Dfa> {
        let mut alphabet: Option<Alphabet> = None;
        let mut states: Option<usize> = None;
        let mut start: Option<usize> = None;
        let mut accept: Option<Vec<usize>> = None;
        let mut trans: Vec<(usize, usize, String, usize)> = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let lineno = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| parse_err(lineno, "expected `key: value`"))?;
            let toks: Vec<&str> = rest.split_whitespace().collect();
            match key.trim() {
                "alphabet" => {
                    if alphabet.is_some() {
                        return Err(parse_err(lineno, "duplicate alphabet line"));
                    }
                    if toks.contains(&ENDMARKER) {
                        return Err(Error::ReservedSymbol);
                    }
                    alphabet = Some(Alphabet::new(toks.iter().copied())?);
                }
                "states" => {
                    if toks.len() != 1 {
                        return Err(parse_err(lineno, "states takes one count"));
                    }
                    let n = parse_index(lineno, toks[0])?;
                    if n == 0 {
                        return Err(parse_err(lineno, "state count must be positive"));
                    }
                    states = Some(n);
                }
                "start" => {
                    if toks.len() != 1 {
                        return Err(parse_err(lineno, "start takes one state"));
                    }
                    start = Some(parse_index(lineno, toks[0])?);
                }
                "accept" => {
                    let list = toks
                        .iter()
                        .map(|t| parse_index(lineno, t))
                        .collect::<Result<Vec<_>>>()?;
                    accept.get_or_insert_with(Vec::new).extend(list);
                }
                "trans" => {
                    if toks.len() != 3 {
                        return Err(parse_err(lineno, "trans takes `from symbol to`"));
                    }
                    if toks[1] == ENDMARKER {
                        return Err(Error::ReservedSymbol);
                    }
                    trans.push((
                        lineno,
                        parse_index(lineno, toks[0])?,
                        toks[1].to_string(),
                        parse_index(lineno, toks[2])?,
                    ));
                }
                other => return Err(parse_err(lineno, format!("unknown key {other:?}"))),
            }
        }

        let alphabet = alphabet.ok_or_else(|| parse_err(0, "missing alphabet line"))?;
        let n = states.ok_or_else(|| parse_err(0, "missing states line"))?;
        let start = start.ok_or_else(|| parse_err(0, "missing start line"))?;
        let accept = accept.unwrap_or_default();
        let k = alphabet.len();

        let mut delta = vec![None; n * k];
        for (_, from, sym, to) in trans {
            if from >= n {
                return Err(Error::UnknownState { state: from, count: n });
            }
            if to >= n {
                return Err(Error::UnknownState { state: to, count: n });
            }
            let s = alphabet.index_of(&sym)?;
            if delta[from * k + s].replace(to).is_some() {
                return Err(Error::DuplicateTransition { state: from, symbol: sym });
            }
        }
        let mut table = Vec::with_capacity(n * k);
        for (i, t) in delta.into_iter().enumerate() {
            match t {
                Some(t) => table.push(t),
                None => {
                    return Err(Error::NonTotal {
                        state: i / k,
                        symbol: alphabet.symbol(i % k).to_string(),
                    })
                }
            }
        }
        Dfa::new(alphabet, n, table, start, accept)
    }

    /// Canonical text: states ascending, symbols in alphabet order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "alphabet: {}", self.alphabet);
        let _ = writeln!(out, "states: {}", self.state_count);
        let _ = writeln!(out, "start: {}", self.start);
        let acc: Vec<String> = self.accepting_states().iter().map(|q| q.to_string()).collect();
        if acc.is_empty() {
            out.push_str("accept:\n");
        } else {
            let _ = writeln!(out, "accept: {}", acc.join(" "));
        }
        for q in 0..self.state_count {
            for s in 0..self.symbol_count() {
                let _ = writeln!(out, "trans: {} {} {}", q, self.alphabet.symbol(s), self.next(q, s));
            }
        }
        out
    }
}

impl FromStr for Dfa {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Dfa::parse(s)
    }
}
