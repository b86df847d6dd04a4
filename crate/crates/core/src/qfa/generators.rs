use num_complex::Complex;

use crate::automata::Alphabet;
use crate::error::{Error, Result};
use crate::qfa::machine::{Qfa, Superoperator};
use crate::qfa::matrix::ComplexMatrix;
use crate::scalar::Real;

/// Endmarker sending `start` to `sum amp_i |target_i>` (element 0) while
/// element 1 fixes every other basis state.
fn branching_endmarker<T: Real>(n: usize, start: usize, targets: &[(usize, T)]) -> Superoperator<T> {
    let mut split = ComplexMatrix::zeros(n, n);
    for &(q, amp) in targets {
        split[(q, start)] = Complex::new(amp, T::zero());
    }
    let mut rest = ComplexMatrix::identity(n);
    rest[(start, start)] = Complex::new(T::zero(), T::zero());
    Superoperator::new(vec![split, rest])
}

/// Classical per-symbol maps and a branching endmarker, padded to a common
/// element count.
fn assemble<T: Real>(
    alphabet: Alphabet,
    maps: Vec<Vec<usize>>,
    endmarker: Superoperator<T>,
    start: usize,
    accepting: Vec<usize>,
) -> Qfa<T> {
    let ops: Vec<Superoperator<T>> = maps.iter().map(|image| Superoperator::deterministic(image)).collect();
    let l = ops.iter().map(Superoperator::len).chain([endmarker.len()]).max().unwrap_or(1);
    let ops = ops.into_iter().map(|op| op.padded(l)).collect();
    Qfa::new(alphabet, ops, endmarker.padded(l), start, accepting).expect("generator shapes are consistent")
}

/// Ten-state QFA with two operation elements per symbol recognizing
/// "ends with s1 s2 or s2 s1" with error 1/3.
///
/// State 0 branches on `^` with amplitude `1/sqrt 3` into three
/// submachines: states 1-4 track "ends with s1 s2" (accepting 3), states
/// 5-8 track "ends with s2 s1" (accepting 7), and state 9 accepts always.
pub fn gen_m2<T: Real>() -> Qfa<T> {
    let s1 = vec![0, 2, 2, 4, 4, 5, 7, 5, 7, 9];
    let s2 = vec![0, 1, 3, 1, 3, 6, 6, 8, 8, 9];
    let amp = T::one() / T::cast(3.0).sqrt();
    let endmarker = branching_endmarker(10, 0, &[(1, amp), (5, amp), (9, amp)]);
    assemble(Alphabet::indexed(2).unwrap(), vec![s1, s2], endmarker, 0, vec![3, 7, 9])
}

/// QFA with three operation elements per symbol recognizing
/// "ends with s_i s_{F(i)}" over `j >= 3` symbols, `F(i) = i mod j + 1`,
/// with error `(j - 1) / (2j - 1)`.
///
/// State 0 branches on `^` into `j` three-state submachines with amplitude
/// `1/sqrt(2j - 1)` each and into the always-accepting state `3j + 1` with
/// amplitude `sqrt(j - 1) / sqrt(2j - 1)`. Submachine `i` occupies
/// `3i + 1..=3i + 3` (idle, saw `s_i`, accepting) in 0-based symbol
/// numbering.
pub fn gen_mj<T: Real>(j: usize) -> Result<Qfa<T>> {
    if j < 3 {
        return Err(Error::InvalidArgument(format!("gen_mj needs j >= 3, got {j}")));
    }
    let n = 3 * j + 2;
    let always = n - 1;
    let maps = (0..j)
        .map(|s| {
            let mut image: Vec<usize> = (0..n).collect();
            for i in 0..j {
                let (idle, saw, hit) = (3 * i + 1, 3 * i + 2, 3 * i + 3);
                let succ = (i + 1) % j;
                image[idle] = if s == i { saw } else { idle };
                image[saw] = if s == i {
                    saw
                } else if s == succ {
                    hit
                } else {
                    idle
                };
                image[hit] = if s == i { saw } else { idle };
            }
            image
        })
        .collect();
    let denom = T::from_count(2 * j - 1).sqrt();
    let amp = T::one() / denom;
    let mut targets: Vec<(usize, T)> = (0..j).map(|i| (3 * i + 1, amp)).collect();
    targets.push((always, T::from_count(j - 1).sqrt() / denom));
    let endmarker = branching_endmarker(n, 0, &targets);
    let accepting = (0..j).map(|i| 3 * i + 3).chain([always]).collect();
    Ok(assemble(Alphabet::indexed(j)?, maps, endmarker, 0, accepting))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::words_up_to;
    use crate::qfa::{accept_prob, branch_run, is_zero_error, max_error, step_energy};
    use crate::transforms::in_lj;

    fn word(m: &Qfa<f64>, text: &str) -> Vec<usize> {
        m.alphabet().parse_word(text).unwrap()
    }

    #[test]
    fn m2_structure_and_probabilities() {
        let m: Qfa<f64> = gen_m2();
        m.validate().unwrap();
        assert_eq!(m.element_count(), 2);
        assert_eq!(step_energy(&m), 1.0);
        assert_eq!(m.accepting_states(), vec![3, 7, 9]);
        assert!((accept_prob(&m, &word(&m, "s1 s2")).unwrap() - 2.0 / 3.0).abs() < 1e-12);
        assert!((accept_prob(&m, &word(&m, "s1 s1")).unwrap() - 1.0 / 3.0).abs() < 1e-12);
        let ens = branch_run(&m, &[]).unwrap();
        assert_eq!(ens.branches.len(), 1);
        let v = &ens.branches[0].state;
        for q in [1, 5, 9] {
            assert!((v[q].re - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        }
    }

    #[test]
    fn m2_is_not_zero_error() {
        let m: Qfa<f64> = gen_m2();
        let check = is_zero_error(&m, 2).unwrap();
        assert!(!check.zero_error);
        assert_eq!(check.witness, Some(vec![]));
        assert!((check.probability.unwrap() - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn mj_probabilities() {
        let m: Qfa<f64> = gen_mj(3).unwrap();
        m.validate().unwrap();
        assert_eq!(m.element_count(), 3);
        assert_eq!(m.state_count(), 11);
        assert!((accept_prob(&m, &[]).unwrap() - 0.4).abs() < 1e-12);
        assert!((accept_prob(&m, &word(&m, "s1 s1")).unwrap() - 0.4).abs() < 1e-12);
        assert!((accept_prob(&m, &word(&m, "s1 s2")).unwrap() - 0.6).abs() < 1e-12);
        assert!((accept_prob(&m, &word(&m, "s2 s3")).unwrap() - 0.6).abs() < 1e-12);
        assert!(!is_zero_error(&m, 1).unwrap().zero_error);
        for w in words_up_to(3, 5) {
            let p = accept_prob(&m, &w).unwrap();
            let expected = if in_lj(3, &w) { 0.6 } else { 0.4 };
            assert!((p - expected).abs() < 1e-12, "{w:?}");
        }
    }

    #[test]
    fn mj_error_bound() {
        let m: Qfa<f64> = gen_mj(4).unwrap();
        let e = max_error(&m, |w| in_lj(4, w), 4);
        assert!((e - 3.0 / 7.0).abs() < 1e-12);
        assert!(gen_mj::<f64>(2).is_err());
    }

    #[test]
    fn single_precision_agrees() {
        let m: Qfa<f32> = gen_m2();
        m.validate().unwrap();
        let p = accept_prob(&m, &[0, 1]).unwrap();
        assert!((p - 2.0 / 3.0).abs() < 1e-5);
    }
}
