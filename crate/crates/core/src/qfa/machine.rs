use num_complex::Complex;
use num_traits::One;

use crate::automata::{Alphabet, Dfa, ENDMARKER};
use crate::error::{Error, Result};
use crate::qfa::matrix::ComplexMatrix;
use crate::scalar::Real;

/// Operation elements `E_1..E_l` of one symbol; a valid superoperator has
/// `sum E_j^dagger E_j = I`.
#[derive(Debug, Clone, PartialEq)]
pub struct Superoperator<T> {
    elements: Vec<ComplexMatrix<T>>,
}

impl<T: Real> Superoperator<T> {
    pub fn new(elements: Vec<ComplexMatrix<T>>) -> Self {
        Self { elements }
    }

    /// Superoperator of the classical map `q -> image[q]`. Element `k` moves
    /// each state that is the `k`-th smallest preimage of its target, so the
    /// element count is the largest preimage size (at least 1).
    pub fn deterministic(image: &[usize]) -> Self {
        let n = image.len();
        let mut seen = vec![0usize; n];
        let mut elements: Vec<ComplexMatrix<T>> = Vec::new();
        for (q, &target) in image.iter().enumerate() {
            let k = seen[target];
            seen[target] += 1;
            if elements.len() <= k {
                elements.push(ComplexMatrix::zeros(n, n));
            }
            elements[k][(target, q)] = Complex::one();
        }
        if elements.is_empty() {
            elements.push(ComplexMatrix::zeros(n, n));
        }
        Self { elements }
    }

    pub fn elements(&self) -> &[ComplexMatrix<T>] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Appends zero elements until there are `l`.
    pub fn padded(mut self, l: usize) -> Self {
        if let Some(first) = self.elements.first() {
            let (r, c) = (first.rows(), first.cols());
            while self.elements.len() < l {
                self.elements.push(ComplexMatrix::zeros(r, c));
            }
        }
        self
    }

    /// `|| sum E^dagger E - I ||_F`.
    pub fn completeness_residual(&self) -> T {
        let Some(first) = self.elements.first() else {
            return T::infinity();
        };
        let n = first.cols();
        let sum = self
            .elements
            .iter()
            .fold(ComplexMatrix::zeros(n, n), |acc, e| acc.add(&e.adjoint().mul(e)));
        sum.sub(&ComplexMatrix::identity(n)).frobenius_norm()
    }

    /// `rho -> sum E rho E^dagger`.
    pub fn apply_density(&self, rho: &ComplexMatrix<T>) -> ComplexMatrix<T> {
        let n = rho.rows();
        self.elements
            .iter()
            .filter(|e| !e.is_zero())
            .fold(ComplexMatrix::zeros(n, n), |acc, e| acc.add(&e.conjugate(rho)))
    }

    pub fn cast<U: Real>(&self) -> Superoperator<U> {
        Superoperator {
            elements: self
                .elements
                .iter()
                .map(|e| e.map(|x| U::cast(x.to_f64().unwrap_or(f64::NAN))))
                .collect(),
        }
    }
}

/// Quantum finite automaton: one superoperator per input symbol plus one
/// for the left endmarker `^`, which is read before the input.
#[derive(Debug, Clone, PartialEq)]
pub struct Qfa<T> {
    n: usize,
    alphabet: Alphabet,
    superoperators: Vec<Superoperator<T>>,
    endmarker: Superoperator<T>,
    start: usize,
    accepting: Vec<bool>,
}

impl<T: Real> Qfa<T> {
    /// Checks shapes only; see [`Qfa::validate`] for completeness.
    pub fn new(
        alphabet: Alphabet,
        superoperators: Vec<Superoperator<T>>,
        endmarker: Superoperator<T>,
        start: usize,
        accepting: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        if superoperators.len() != alphabet.len() {
            return Err(Error::Dimension(format!(
                "{} superoperators for {} symbols",
                superoperators.len(),
                alphabet.len()
            )));
        }
        let Some(n) = endmarker.elements().first().map(ComplexMatrix::rows) else {
            return Err(Error::Dimension("endmarker has no operation elements".into()));
        };
        if n == 0 {
            return Err(Error::Dimension("machine has no states".into()));
        }
        let l = endmarker.len();
        let named = std::iter::once((ENDMARKER, &endmarker))
            .chain(alphabet.symbols().iter().map(String::as_str).zip(&superoperators));
        for (symbol, op) in named {
            if op.len() != l {
                return Err(Error::Dimension(format!(
                    "symbol {symbol:?} has {} operation elements, expected {l}",
                    op.len()
                )));
            }
            for e in op.elements() {
                if e.rows() != n || e.cols() != n {
                    return Err(Error::Dimension(format!(
                        "symbol {symbol:?} has a {}x{} element, expected {n}x{n}",
                        e.rows(),
                        e.cols()
                    )));
                }
                if !e.is_finite() {
                    return Err(Error::Numerical(format!("non-finite entry for symbol {symbol:?}")));
                }
            }
        }
        if start >= n {
            return Err(Error::UnknownState { state: start, count: n });
        }
        let mut acc = vec![false; n];
        for q in accepting {
            if q >= n {
                return Err(Error::UnknownState { state: q, count: n });
            }
            acc[q] = true;
        }
        Ok(Self { n, alphabet, superoperators, endmarker, start, accepting: acc })
    }

    /// Per-symbol completeness check, endmarker first.
    pub fn validate(&self) -> Result<()> {
        let named = std::iter::once((ENDMARKER, &self.endmarker))
            .chain(self.alphabet.symbols().iter().map(String::as_str).zip(&self.superoperators));
        for (symbol, op) in named {
            let r = op.completeness_residual();
            if !(r <= T::tolerance()) {
                return Err(Error::Completeness {
                    symbol: symbol.to_string(),
                    residual: r.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(())
    }

    pub fn state_count(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Number of operation elements per superoperator.
    pub fn element_count(&self) -> usize {
        self.endmarker.len()
    }

    pub fn superoperator(&self, symbol: usize) -> &Superoperator<T> {
        &self.superoperators[symbol]
    }

    pub fn endmarker(&self) -> &Superoperator<T> {
        &self.endmarker
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn accepting_states(&self) -> Vec<usize> {
        (0..self.n).filter(|&q| self.accepting[q]).collect()
    }

    /// Mutable access for building deliberately broken machines in tests.
    pub fn superoperator_mut(&mut self, symbol: usize) -> &mut Vec<ComplexMatrix<T>> {
        &mut self.superoperators[symbol].elements
    }

    pub fn cast<U: Real>(&self) -> Qfa<U> {
        Qfa {
            n: self.n,
            alphabet: self.alphabet.clone(),
            superoperators: self.superoperators.iter().map(Superoperator::cast).collect(),
            endmarker: self.endmarker.cast(),
            start: self.start,
            accepting: self.accepting.clone(),
        }
    }
}

pub fn validate_qfa<T: Real>(m: &Qfa<T>) -> Result<()> {
    m.validate()
}

/// Zero-error QFA tracking `d` exactly. Element `k` of symbol `s` carries
/// the transition `q -> delta(q, s)` when `q` is the `k`-th smallest
/// `s`-source of that target; the endmarker acts as the identity.
pub fn from_dfa<T: Real>(d: &Dfa) -> Qfa<T> {
    let n = d.state_count();
    let ops: Vec<Superoperator<T>> = (0..d.symbol_count())
        .map(|s| Superoperator::deterministic(&(0..n).map(|q| d.next(q, s)).collect::<Vec<_>>()))
        .collect();
    let l = ops.iter().map(Superoperator::len).max().unwrap_or(1);
    let ops = ops.into_iter().map(|op| op.padded(l)).collect();
    let endmarker = Superoperator::new(vec![ComplexMatrix::identity(n)]).padded(l);
    Qfa::new(d.alphabet().clone(), ops, endmarker, d.start(), d.accepting_states())
        .expect("DFA shapes are consistent")
}

/// Bits overwritten in the auxiliary register per step: `log2 l`.
pub fn step_energy<T: Real>(m: &Qfa<T>) -> T {
    T::log2_count(m.element_count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{gen_lbb, gen_lj};

    #[test]
    fn lbb_compiles_to_three_elements() {
        let m: Qfa<f64> = from_dfa(&gen_lbb());
        assert_eq!(m.element_count(), 3);
        m.validate().unwrap();
        assert!((step_energy(&m) - 3f64.log2()).abs() < 1e-12);
        // b-transitions into state 2 come from 1, 2, 3 in that element order
        let b = m.superoperator(1);
        assert_eq!(b.elements()[0][(2, 1)], Complex::one());
        assert_eq!(b.elements()[1][(2, 2)], Complex::one());
        assert_eq!(b.elements()[2][(2, 3)], Complex::one());
    }

    #[test]
    fn reversible_dfa_needs_one_element() {
        let d = Dfa::from_fn(Alphabet::indexed(2).unwrap(), 3, 0, [0], |q, s| (q + s + 1) % 3).unwrap();
        let m: Qfa<f64> = from_dfa(&d);
        assert_eq!(m.element_count(), 1);
        assert_eq!(step_energy(&m), 0.0);
    }

    #[test]
    fn halved_element_reports_residual() {
        let mut m: Qfa<f64> = from_dfa(&gen_lbb());
        let e = &mut m.superoperator_mut(0)[0];
        *e = e.scale(0.5);
        match m.validate() {
            Err(Error::Completeness { symbol, residual }) => {
                assert_eq!(symbol, "a");
                // two unit columns of element 0 for symbol a shrink to 1/4 in E^dagger E
                assert!((residual - (2.0f64 * 0.75 * 0.75).sqrt()).abs() < 1e-12, "{residual}");
            }
            other => panic!("expected completeness error, got {other:?}"),
        }
    }

    #[test]
    fn shape_errors() {
        let d = gen_lj(2);
        let m: Qfa<f64> = from_dfa(&d);
        let ops = vec![m.superoperator(0).clone()];
        assert!(matches!(
            Qfa::new(d.alphabet().clone(), ops, m.endmarker().clone(), 0, []),
            Err(Error::Dimension(_))
        ));
        let ops = vec![m.superoperator(0).clone(), m.superoperator(1).clone().padded(5)];
        assert!(matches!(
            Qfa::new(d.alphabet().clone(), ops, m.endmarker().clone(), 0, []),
            Err(Error::Dimension(_))
        ));
    }
}
