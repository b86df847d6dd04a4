use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::qfa::machine::Qfa;
use crate::qfa::matrix::{basis_vector, ComplexMatrix};
use crate::qfa::simulate::zero_error_tolerance;
use crate::qfa::subspace::{projector_tolerance, Subspace};
use crate::scalar::Real;
use crate::transforms::expand_bags;

/// Words checked against the extracted DFA are capped at this many.
pub const VERIFY_WORD_CAP: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtractOptions {
    /// Longest word on which the result is compared with the QFA.
    pub verify_len: usize,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        Self { verify_len: 8 }
    }
}

#[derive(Debug, Clone)]
pub struct Extraction<T> {
    /// Pairwise orthogonal subspaces, one per state of `quotient`.
    pub subspaces: Vec<Subspace<T>>,
    /// One state per subspace.
    pub quotient: Dfa,
    /// `quotient` with subspace `i` split into `dim(S_i)` states.
    pub dfa: Dfa,
}

pub fn extract_dfa<T: Real>(m: &Qfa<T>) -> Result<Dfa> {
    Ok(extract(m, ExtractOptions::default())?.dfa)
}

/// Converts a zero-error QFA into a DFA with at most `n` states whose
/// largest same-symbol in-degree is at most the QFA's element count.
///
/// The closure starts from the span of the endmarker images of the start
/// vector and maps a subspace `S` on symbol `s` to the span of all `E v`
/// with `v` in `S`. Images that overlap an existing subspace without lying
/// inside it are merged with it, so the final subspaces are pairwise
/// orthogonal and each one is mapped into a single subspace per symbol.
pub fn extract<T: Real>(m: &Qfa<T>, options: ExtractOptions) -> Result<Extraction<T>> {
    m.validate()?;
    let n = m.state_count();
    let k = m.alphabet().len();
    let ptol = projector_tolerance::<T>();
    let initial = Subspace::span(n, m.endmarker().elements().iter().map(|e| e.apply(&basis_vector(n, m.start()))));
    classify(m, &initial)?;
    let mut nodes = vec![initial.clone()];
    'closure: loop {
        let total: usize = nodes.iter().map(Subspace::dim).sum();
        if total > n {
            return Err(Error::Numerical(format!("closure subspaces span {total} > {n} dimensions")));
        }
        for i in 0..nodes.len() {
            for s in 0..k {
                let img = nodes[i].image(m.superoperator(s).elements());
                let hits: Vec<usize> = (0..nodes.len()).filter(|&t| img.overlap(&nodes[t]) > ptol).collect();
                if let [t] = hits[..] {
                    if nodes[t].contains(&img, ptol) {
                        continue;
                    }
                }
                let merged = hits.iter().fold(img, |acc, &t| acc.join(&nodes[t]));
                classify(m, &merged)?;
                match hits.first() {
                    Some(&first) => {
                        for &t in hits.iter().skip(1).rev() {
                            nodes.remove(t);
                        }
                        nodes[first] = merged;
                    }
                    None => nodes.push(merged),
                }
                continue 'closure;
            }
        }
        break;
    }

    let locate = |s: &Subspace<T>| -> Result<usize> {
        (0..nodes.len())
            .find(|&t| nodes[t].contains(s, ptol))
            .ok_or_else(|| Error::Numerical("image not contained in a closure subspace".into()))
    };
    let start = locate(&initial)?;
    let mut delta = Vec::with_capacity(nodes.len() * k);
    for node in &nodes {
        for s in 0..k {
            delta.push(locate(&node.image(m.superoperator(s).elements()))?);
        }
    }
    let mut accepting = Vec::new();
    for (i, node) in nodes.iter().enumerate() {
        if classify(m, node)? {
            accepting.push(i);
        }
    }
    let quotient = Dfa::new(m.alphabet().clone(), nodes.len(), delta, start, accepting)?;
    let sizes: Vec<usize> = nodes.iter().map(Subspace::dim).collect();
    let dfa = expand_bags(&quotient, &sizes);
    verify(m, &dfa, options.verify_len)?;
    Ok(Extraction { subspaces: nodes, quotient, dfa })
}

/// `true` if the subspace lies in the accepting coordinates, `false` if it
/// lies in the rejecting ones.
fn classify<T: Real>(m: &Qfa<T>, s: &Subspace<T>) -> Result<bool> {
    let tol = zero_error_tolerance::<T>();
    let rejecting = s.weight_on(|q| !m.is_accepting(q));
    let accepting = s.weight_on(|q| m.is_accepting(q));
    if rejecting <= tol {
        Ok(true)
    } else if accepting <= tol {
        Ok(false)
    } else {
        Err(Error::NotZeroError("mixed subspace".into()))
    }
}

fn verify<T: Real>(m: &Qfa<T>, d: &Dfa, max_len: usize) -> Result<()> {
    let k = m.alphabet().len().max(1);
    let mut len = 0;
    let mut words = 1usize;
    let mut level = 1usize;
    while len < max_len {
        level = level.saturating_mul(k);
        if words.saturating_add(level) > VERIFY_WORD_CAP {
            break;
        }
        words += level;
        len += 1;
    }
    let rho = m.endmarker().apply_density(&m.initial_density());
    let mut word = Vec::new();
    check(m, d, len, &mut word, &rho, d.start())
}

fn check<T: Real>(
    m: &Qfa<T>,
    d: &Dfa,
    max_len: usize,
    word: &mut Vec<usize>,
    rho: &ComplexMatrix<T>,
    state: usize,
) -> Result<()> {
    let p = m.acceptance(rho);
    let expected = if d.is_accepting(state) { T::one() } else { T::zero() };
    if (p - expected).abs() > zero_error_tolerance() {
        return Err(Error::NotZeroError(format!(
            "word {:?} accepted with probability {p}, extracted DFA says {expected}",
            m.alphabet().format_word(word)
        )));
    }
    if word.len() == max_len {
        return Ok(());
    }
    for s in 0..m.alphabet().len() {
        word.push(s);
        check(m, d, max_len, word, &m.evolve(rho, s), d.next(state, s))?;
        word.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::qfa::{from_dfa, gen_m2, gen_mj, Superoperator};
    use crate::transforms::gen_lbb;
    use num_complex::Complex;

    #[test]
    fn lbb_round_trip() {
        let d = gen_lbb();
        let e = extract_dfa(&from_dfa::<f64>(&d)).unwrap();
        assert_eq!(e.state_count(), 4);
        assert!(e.equivalent(&d).unwrap().is_equivalent());
        assert!(e.in_degree_profile().max() <= 3);
    }

    #[test]
    fn reversible_round_trip_stays_reversible() {
        let d = Dfa::from_fn(Alphabet::indexed(2).unwrap(), 4, 0, [1, 3], |q, s| (q + 1 + 2 * s) % 4).unwrap();
        let e = extract_dfa(&from_dfa::<f64>(&d)).unwrap();
        assert!(e.is_reversible());
        assert!(e.equivalent(&d).unwrap().is_equivalent());
    }

    #[test]
    fn bounded_error_machines_are_rejected() {
        for m in [gen_m2::<f64>(), gen_mj(3).unwrap()] {
            match extract_dfa(&m) {
                Err(Error::NotZeroError(msg)) => assert_eq!(msg, "mixed subspace"),
                other => panic!("expected mixed subspace, got {other:?}"),
            }
        }
    }

    /// `a` rotates states 0 and 1 into each other, so both end up in one
    /// 2-dimensional rejecting subspace; `b` moves that subspace to the
    /// accepting state 2 and state 2 back to 0.
    #[test]
    fn superposed_class_gives_multi_copy_bag() {
        let n = 3;
        let h = 1.0 / 2f64.sqrt();
        let mut rot = ComplexMatrix::zeros(n, n);
        rot[(0, 0)] = Complex::new(h, 0.0);
        rot[(0, 1)] = Complex::new(0.0, h);
        rot[(1, 0)] = Complex::new(0.0, h);
        rot[(1, 1)] = Complex::new(h, 0.0);
        rot[(2, 2)] = Complex::new(1.0, 0.0);
        let a = Superoperator::new(vec![rot]);
        let b = Superoperator::deterministic(&[2, 2, 0]);
        let endmarker = Superoperator::new(vec![ComplexMatrix::identity(n)]);
        let alphabet = Alphabet::new(["a", "b"]).unwrap();
        let m = Qfa::new(alphabet, vec![a.padded(2), b], endmarker.padded(2), 0, [2]).unwrap();
        m.validate().unwrap();
        let x = extract(&m, ExtractOptions::default()).unwrap();
        let dims: Vec<usize> = x.subspaces.iter().map(Subspace::dim).collect();
        assert_eq!(dims, vec![2, 1]);
        assert_eq!(x.dfa.state_count(), 3);
        assert!(x.dfa.in_degree_profile().max() <= 2);
        assert!(x.subspaces[0].projector().mul(&x.subspaces[1].projector()).frobenius_norm() <= 1e-6);
        let lang = Dfa::from_fn(m.alphabet().clone(), 2, 0, [1], |q, s| if s == 1 { 1 - q } else { q }).unwrap();
        assert!(x.dfa.equivalent(&lang).unwrap().is_equivalent());
    }
}
