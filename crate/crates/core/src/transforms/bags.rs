use crate::automata::Dfa;

/// Replaces state `i` of `quotient` by `sizes[i]` equivalent copies
/// ("bag" `i`). Bag `i` occupies states `offset[i]..offset[i] + sizes[i]`.
///
/// For every symbol, the transitions entering a bag are spread over its
/// copies round-robin: sources are visited in (source bag, copy) order and
/// each (target bag, symbol) pair keeps its own cursor. A bag receiving
/// `T` transitions on a symbol therefore gives each copy at most
/// `ceil(T / size)` of them. The start state is copy 0 of the start bag.
pub fn expand_bags(quotient: &Dfa, sizes: &[usize]) -> Dfa {
    assert_eq!(sizes.len(), quotient.state_count());
    assert!(sizes.iter().all(|&s| s >= 1), "every bag needs a state");
    let k = quotient.symbol_count();
    let mut offset = Vec::with_capacity(sizes.len());
    let mut total = 0;
    for &s in sizes {
        offset.push(total);
        total += s;
    }
    let mut cursor = vec![0usize; quotient.state_count() * k];
    let mut delta = vec![0usize; total * k];
    for bag in 0..quotient.state_count() {
        for copy in 0..sizes[bag] {
            for s in 0..k {
                let target = quotient.next(bag, s);
                let c = &mut cursor[target * k + s];
                delta[(offset[bag] + copy) * k + s] = offset[target] + *c;
                *c = (*c + 1) % sizes[target];
            }
        }
    }
    let accepting = (0..quotient.state_count())
        .filter(|&b| quotient.is_accepting(b))
        .flat_map(|b| offset[b]..offset[b] + sizes[b])
        .collect::<Vec<_>>();
    Dfa::new(quotient.alphabet().clone(), total, delta, offset[quotient.start()], accepting)
        .expect("bag expansion preserves validity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::gen_lbb;

    #[test]
    fn unit_sizes_are_identity() {
        let d = gen_lbb();
        assert_eq!(expand_bags(&d, &[1, 1, 1, 1]), d);
    }

    #[test]
    fn splitting_the_sink_spreads_in_degree() {
        let d = gen_lbb();
        let e = expand_bags(&d, &[1, 1, 2, 1]);
        assert_eq!(e.state_count(), 5);
        assert!(e.equivalent(&d).unwrap().is_equivalent());
        // the four b-transitions into bag 2 (from states 1, 2, 3, 4) split 2 / 2
        let p = e.in_degree_profile();
        assert_eq!(p.chi(2, 1), 2);
        assert_eq!(p.chi(3, 1), 2);
    }
}
