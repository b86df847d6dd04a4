use crate::automata::{Alphabet, Dfa};

/// Minimal DFA over `{a, b}` for "contains `bb` and ends with `b`".
///
/// ```text
/// 0 -a-> 0   0 -b-> 1   1 -a-> 0   1 -b-> 2
/// 2 -a-> 3   2 -b-> 2   3 -a-> 3   3 -b-> 2      accept {2}
/// ```
pub fn gen_lbb() -> Dfa {
    const NEXT: [[usize; 2]; 4] = [[0, 1], [0, 2], [3, 2], [3, 2]];
    Dfa::from_fn(Alphabet::new(["a", "b"]).unwrap(), 4, 0, [2], |q, s| NEXT[q][s]).unwrap()
}

/// Two-state minimal DFA for the non-empty words over `alphabet`.
pub fn gen_li(alphabet: Alphabet) -> Dfa {
    Dfa::from_fn(alphabet, 2, 0, [1], |_, _| 1).unwrap()
}

/// DFA for `L_j` over `{s1, ..., sj}`: words ending in `s_i s_{F(i)}` with
/// `F(i) = (i mod j) + 1`. For `j = 1` this is the set of non-empty words.
///
/// For `j >= 2` the states are `I = 0`, `A_i = i` and `R_i = j + i`
/// (`1 <= i <= j`): `A_i` / `R_i` are entered by `s_i`, `A_i` exactly when
/// the previous symbol was `s_{F^-1(i)}`. `A_i` are accepting.
pub fn gen_lj(j: usize) -> Dfa {
    assert!(j >= 1, "L_j needs j >= 1");
    let alphabet = Alphabet::indexed(j).unwrap();
    if j == 1 {
        return gen_li(alphabet);
    }
    // 1-based index of the last symbol read in `state`, if any
    let last = |state: usize| match state {
        0 => None,
        q if q <= j => Some(q),
        q => Some(q - j),
    };
    let successor = |i: usize| i % j + 1;
    Dfa::from_fn(alphabet, 2 * j + 1, 0, 1..=j, |q, s| {
        let i = s + 1;
        match last(q) {
            Some(p) if successor(p) == i => i,
            _ => j + i,
        }
    })
    .unwrap()
}

/// Membership in the "contains `bb` and ends with `b`" language (a = 0, b = 1).
pub fn in_lbb(word: &[usize]) -> bool {
    word.last() == Some(&1) && word.windows(2).any(|w| w == [1, 1])
}

pub fn in_li(word: &[usize]) -> bool {
    !word.is_empty()
}

/// Membership in `L_j` for 0-based symbol indices.
pub fn in_lj(j: usize, word: &[usize]) -> bool {
    if j == 1 {
        return !word.is_empty();
    }
    match word {
        [.., x, y] => *y == (*x + 1) % j,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::words_up_to;

    #[test]
    fn lbb_matches_predicate() {
        let d = gen_lbb();
        for w in words_up_to(2, 8) {
            assert_eq!(d.accepts(&w).unwrap(), in_lbb(&w), "{w:?}");
        }
        assert!(d.accepts_str("abb").unwrap());
        assert!(!d.accepts_str("bba").unwrap());
        assert_eq!(d.minimize().state_count(), 4);
    }

    #[test]
    fn li_basics() {
        let d = gen_li(Alphabet::new(["a", "b", "c"]).unwrap());
        assert!(!d.accepts(&[]).unwrap());
        for s in 0..3 {
            assert!(d.accepts(&[s]).unwrap());
            assert_eq!(d.in_degree_profile().chi(1, s), 2);
        }
    }

    #[test]
    fn lj_matches_predicate() {
        for j in 1..=4 {
            let d = gen_lj(j);
            let max_len = if j <= 2 { 8 } else { 5 };
            for w in words_up_to(j, max_len) {
                assert_eq!(d.accepts(&w).unwrap(), in_lj(j, &w), "j={j} {w:?}");
            }
        }
    }

    #[test]
    fn lj_examples() {
        let d2 = gen_lj(2);
        assert_eq!(d2.state_count(), 5);
        assert!(d2.accepts_str("s2 s1").unwrap());
        assert!(d2.accepts_str("s1 s2").unwrap());
        assert!(!d2.accepts_str("s1 s1").unwrap());
        // R_1 = state 3 receives s1 from I, A_1, R_1
        assert_eq!(d2.in_degree_profile().chi(3, 0), 3);

        let d1 = gen_lj(1);
        assert!(!d1.accepts(&[]).unwrap());
        assert!(d1.accepts(&[0, 0, 0]).unwrap());
    }

    #[test]
    fn lj_minimal_machine_needs_j_plus_one() {
        for j in 1..=3 {
            let m = gen_lj(j).minimize();
            assert_eq!(m.state_count(), if j == 1 { 2 } else { 2 * j + 1 });
            assert!(m.in_degree_profile().max() >= j + 1, "j={j}");
        }
    }
}
