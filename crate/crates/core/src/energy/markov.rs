use num_rational::BigRational;
use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::automata::{Dfa, TransitionCounts};
use crate::error::{Error, Result};
use crate::scalar::{Field, Real};

use super::linalg::solve;

/// Largest `||pi P - pi||_inf` accepted as stationary.
pub const STATIONARY_TOLERANCE: f64 = 1e-9;

/// Mass below this is treated as zero when deciding the support.
const SUPPORT_EPS: f64 = 1e-12;

/// Probability distribution over the states of a DFA.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution<F> {
    pub probs: Vec<F>,
}

impl<F: Field> Distribution<F> {
    pub fn prob(&self, state: usize) -> &F {
        &self.probs[state]
    }

    pub fn in_support(&self, state: usize) -> bool {
        self.probs[state].approx_f64() > SUPPORT_EPS
    }

    /// `||pi P - pi||_inf` for the chain driven by uniformly random symbols.
    pub fn residual(&self, d: &Dfa) -> f64 {
        let k = d.symbol_count() as f64;
        let mut pushed = vec![0.0; d.state_count()];
        for q in 0..d.state_count() {
            let p = self.probs[q].approx_f64();
            for s in 0..d.symbol_count() {
                pushed[d.next(q, s)] += p / k;
            }
        }
        pushed
            .iter()
            .zip(&self.probs)
            .map(|(a, b)| (a - b.approx_f64()).abs())
            .fold(0.0, f64::max)
    }

    pub fn to_real<T: Real>(&self) -> Distribution<T> {
        Distribution { probs: self.probs.iter().map(|p| T::cast(p.approx_f64())).collect() }
    }
}

/// Transition matrix entry `P(q -> t)` under uniform symbols, as a count of
/// symbols.
fn symbol_counts(d: &Dfa, q: usize) -> Vec<(usize, u64)> {
    let mut out: Vec<(usize, u64)> = Vec::new();
    for s in 0..d.symbol_count() {
        let t = d.next(q, s);
        match out.iter_mut().find(|(u, _)| *u == t) {
            Some((_, c)) => *c += 1,
            None => out.push((t, 1)),
        }
    }
    out
}

/// Long-run state distribution of `d` started in its start state and fed
/// uniformly random symbols (the Cesàro limit of the chain).
///
/// Recurrent classes are the closed strongly connected components of the
/// reachable part. Each class has a unique stationary vector, obtained by a
/// direct solve; the classes are weighted by their absorption probabilities
/// from the start state.
pub fn stationary<F: Field>(d: &Dfa) -> Distribution<F> {
    let n = d.state_count();
    let k = d.symbol_count() as u64;
    let reach = d.reachable();

    let mut graph = DiGraph::<usize, ()>::new();
    let nodes: Vec<_> = (0..n).map(|q| graph.add_node(q)).collect();
    for q in (0..n).filter(|&q| reach[q]) {
        for (t, _) in symbol_counts(d, q) {
            graph.add_edge(nodes[q], nodes[t], ());
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for scc in tarjan_scc(&graph) {
        let mut members: Vec<usize> = scc.iter().map(|&i| graph[i]).filter(|&q| reach[q]).collect();
        if members.is_empty() {
            continue;
        }
        members.sort_unstable();
        for &q in &members {
            class_of[q] = classes.len();
        }
        classes.push(members);
    }
    let closed: Vec<bool> = classes
        .iter()
        .enumerate()
        .map(|(c, members)| {
            members.iter().all(|&q| (0..d.symbol_count()).all(|s| class_of[d.next(q, s)] == c))
        })
        .collect();

    let transient: Vec<usize> =
        (0..n).filter(|&q| reach[q] && !closed[class_of[q]]).collect();
    let recurrent: Vec<usize> = (0..classes.len()).filter(|&c| closed[c]).collect();

    // absorption[c] = probability of ending in recurrent class recurrent[c]
    let absorption: Vec<F> = if closed[class_of[d.start()]] {
        recurrent
            .iter()
            .map(|&c| if c == class_of[d.start()] { F::one() } else { F::zero() })
            .collect()
    } else {
        let pos = |q: usize| transient.iter().position(|&t| t == q);
        let m = transient.len();
        let mut a = vec![vec![F::zero(); m]; m];
        let mut b = vec![vec![F::zero(); recurrent.len()]; m];
        for (i, &q) in transient.iter().enumerate() {
            a[i][i] = F::one();
            for (t, c) in symbol_counts(d, q) {
                let p = F::ratio(c, k);
                match pos(t) {
                    Some(j) => a[i][j] = a[i][j].clone() - p,
                    None => {
                        let r = recurrent.iter().position(|&rc| rc == class_of[t]).expect("closed");
                        b[i][r] = b[i][r].clone() + p;
                    }
                }
            }
        }
        let h = solve(a, b).expect("transient block of an absorbing chain is invertible");
        h[pos(d.start()).expect("start is transient")].clone()
    };

    let mut probs = vec![F::zero(); n];
    for (weight, &c) in absorption.into_iter().zip(&recurrent) {
        if weight.is_zero() {
            continue;
        }
        let members = &classes[c];
        let m = members.len();
        let local = |q: usize| members.iter().position(|&x| x == q).expect("closed class");
        // (P^T - I) pi = 0 with the last row replaced by sum(pi) = 1
        let mut a = vec![vec![F::zero(); m]; m];
        for (j, &q) in members.iter().enumerate() {
            for (t, cnt) in symbol_counts(d, q) {
                let i = local(t);
                a[i][j] = a[i][j].clone() + F::ratio(cnt, k);
            }
        }
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = row[i].clone() - F::one();
        }
        let mut b = vec![vec![F::zero()]; m];
        a[m - 1] = vec![F::one(); m];
        b[m - 1][0] = F::one();
        let pi = solve(a, b).expect("irreducible class has a unique stationary vector");
        for (row, &q) in pi.into_iter().zip(members) {
            probs[q] = probs[q].clone() + weight.clone() * row[0].clone();
        }
    }
    Distribution { probs }
}

/// `psi(q, s)`: incoming `s`-transitions of `q` that leave a state of
/// positive probability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedProfile {
    symbols: usize,
    counts: Vec<usize>,
}

impl RestrictedProfile {
    pub fn psi(&self, state: usize, symbol: usize) -> usize {
        self.counts[state * self.symbols + symbol]
    }
}

impl TransitionCounts for RestrictedProfile {
    fn count(&self, state: usize, symbol: usize) -> usize {
        self.psi(state, symbol)
    }
}

pub fn restricted_profile<F: Field>(d: &Dfa, dist: &Distribution<F>) -> RestrictedProfile {
    let k = d.symbol_count();
    let mut counts = vec![0; d.state_count() * k];
    for q in (0..d.state_count()).filter(|&q| dist.in_support(q)) {
        for s in 0..k {
            counts[d.next(q, s) * k + s] += 1;
        }
    }
    RestrictedProfile { symbols: k, counts }
}

/// Expected bits forgotten per step when the state is distributed as `dist`
/// and the symbol is uniform, charging `log2 profile(entered, symbol)`.
pub fn expected_step_energy<T: Real, F: Field>(
    d: &Dfa,
    dist: &Distribution<F>,
    profile: &impl TransitionCounts,
) -> Result<T> {
    let residual = dist.residual(d);
    if residual > STATIONARY_TOLERANCE {
        return Err(Error::NotStationary(residual));
    }
    let k = d.symbol_count();
    let mut total = T::zero();
    for q in 0..d.state_count() {
        let p = T::cast(dist.probs[q].approx_f64());
        if p == T::zero() {
            continue;
        }
        for s in 0..k {
            let c = profile.count(d.next(q, s), s);
            total = total + p * T::log2_count(c) / T::from_count(k);
        }
    }
    Ok(total)
}

/// Per-step gap `E[log2 chi - log2 psi]` certified by a single pair: the
/// maximum over `(q, s)` with `psi(q, s) < chi(q, s)` of
/// `P(the step enters q reading s) * (log2 chi(q, s) - log2 psi(q, s))`.
/// Zero when no pair entered with positive probability loses sources.
///
/// The stationary distribution is computed exactly, so the support is not
/// subject to rounding.
pub fn lower_bound_margin<T: Real>(d: &Dfa) -> T {
    let dist = stationary::<BigRational>(d);
    let psi = restricted_profile(d, &dist);
    let chi = d.in_degree_profile();
    let k = d.symbol_count();
    let mut enter = vec![0.0f64; d.state_count() * k];
    for q in 0..d.state_count() {
        let p = dist.probs[q].approx_f64();
        for s in 0..k {
            enter[d.next(q, s) * k + s] += p / k as f64;
        }
    }
    let mut best = T::zero();
    for q in 0..d.state_count() {
        for s in 0..k {
            let (c, r) = (chi.chi(q, s), psi.psi(q, s));
            let p = enter[q * k + s];
            if p > SUPPORT_EPS && r < c {
                let gap = T::cast(p) * (T::log2_count(c) - T::log2_count(r));
                best = best.max(gap);
            }
        }
    }
    best
}
