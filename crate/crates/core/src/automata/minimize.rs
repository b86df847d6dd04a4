use super::Dfa;

impl Dfa {
    /// Minimal equivalent DFA, renumbered canonically (breadth-first from the
    /// start state). Unreachable states are removed before refinement.
    pub fn minimize(&self) -> Dfa {
        let trimmed = self.trim();
        let blocks = hopcroft(&trimmed);
        let mut block_of = vec![0; trimmed.state_count()];
        for (b, members) in blocks.iter().enumerate() {
            for &q in members {
                block_of[q] = b;
            }
        }
        let quotient = Dfa::from_fn(
            trimmed.alphabet().clone(),
            blocks.len(),
            block_of[trimmed.start()],
            (0..blocks.len()).filter(|&b| trimmed.is_accepting(blocks[b][0])),
            |b, s| block_of[trimmed.next(blocks[b][0], s)],
        )
        .expect("quotient of a valid DFA is valid");
        quotient.renumber_canonical()
    }
}

/// Coarsest partition of the states compatible with acceptance and the
/// transition function (Hopcroft's partition refinement).
fn hopcroft(d: &Dfa) -> Vec<Vec<usize>> {
    let n = d.state_count();
    let k = d.symbol_count();

    // preimage[s][t] = states with an s-transition into t
    let mut preimage = vec![vec![Vec::new(); n]; k];
    for q in 0..n {
        for s in 0..k {
            preimage[s][d.next(q, s)].push(q);
        }
    }

    let (acc, rej): (Vec<usize>, Vec<usize>) = (0..n).partition(|&q| d.is_accepting(q));
    let mut blocks: Vec<Vec<usize>> = [acc, rej].into_iter().filter(|b| !b.is_empty()).collect();
    let mut block_of = vec![0; n];
    for (b, members) in blocks.iter().enumerate() {
        for &q in members {
            block_of[q] = b;
        }
    }

    let mut work: Vec<(usize, usize)> = Vec::new();
    if blocks.len() == 2 {
        let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
        for s in 0..k {
            work.push((smaller, s));
        }
    }

    let mut marked = vec![false; n];
    while let Some((splitter, s)) = work.pop() {
        let mut touched: Vec<usize> = Vec::new();
        for &t in &blocks[splitter] {
            for &q in &preimage[s][t] {
                if !marked[q] {
                    marked[q] = true;
                    touched.push(q);
                }
            }
        }
        let mut affected: Vec<usize> = touched.iter().map(|&q| block_of[q]).collect();
        affected.sort_unstable();
        affected.dedup();
        for b in affected {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                blocks[b].iter().partition(|&&q| marked[q]);
            if outside.is_empty() {
                continue;
            }
            let new_id = blocks.len();
            let (keep, moved) = if inside.len() <= outside.len() {
                (outside, inside)
            } else {
                (inside, outside)
            };
            for &q in &moved {
                block_of[q] = new_id;
            }
            blocks[b] = keep;
            blocks.push(moved);
            // Whether or not (b, c) is still queued, queueing the moved half
            // suffices: it is never larger than the half that kept id b.
            work.extend((0..k).map(|c| (new_id, c)));
        }
        for q in touched {
            marked[q] = false;
        }
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::Alphabet;
    use crate::transforms::gen_lbb;

    #[test]
    fn lbb_is_minimal() {
        let d = gen_lbb();
        assert_eq!(d.minimize(), d);
    }

    #[test]
    fn duplicated_state_is_merged() {
        let d = gen_lbb();
        // state 4 is a copy of state 3 (accepting), entered from state 3 on b
        let padded = Dfa::from_fn(d.alphabet().clone(), 5, 0, [2, 4], |q, s| match (q, s) {
            (2, 1) => 4,
            (4, s) => d.next(2, s),
            (q, s) => d.next(q, s),
        })
        .unwrap();
        assert_eq!(padded.state_count(), 5);
        let m = padded.minimize();
        assert_eq!(m.state_count(), 4);
        assert!(m.equivalent(&d).unwrap().is_equivalent());
    }

    #[test]
    fn all_accepting_collapses() {
        let d = Dfa::from_fn(Alphabet::new(["a", "b"]).unwrap(), 3, 0, [0, 1, 2], |q, s| (q + s + 1) % 3)
            .unwrap();
        assert_eq!(d.minimize().state_count(), 1);
    }

    #[test]
    fn idempotent() {
        let d = gen_lbb();
        assert_eq!(d.minimize().minimize(), d.minimize());
    }
}
