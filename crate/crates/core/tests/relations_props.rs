use abelwords::parikh::Word;
use abelwords::relations::{commute_check, sim_n};
use proptest::prelude::*;

/// Words of length `blocks * n` over `k` letters.
fn blocked_word(k: u32, n: usize, blocks: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..k, n * blocks).prop_map(move |l| Word::new(l, k as usize).unwrap())
}

/// Words whose length-`n` blocks are all permutations of one random block.
fn uniform_word(n: usize, blocks: usize) -> impl Strategy<Value = Word> {
    (
        prop::collection::vec(0u32..3, n),
        prop::collection::vec(any::<u64>(), blocks),
    )
        .prop_map(move |(base, seeds)| {
            let mut letters = Vec::with_capacity(n * blocks);
            for seed in seeds {
                let mut block = base.clone();
                let mut s = seed;
                for i in (1..block.len()).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
                    block.swap(i, (s >> 33) as usize % (i + 1));
                }
                letters.extend(block);
            }
            Word::new(letters, 3).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 512, ..ProptestConfig::default() })]

    #[test]
    fn sim_is_reflexive_on_uniform_words(w in uniform_word(3, 4)) {
        prop_assert!(sim_n(&w, &w, 3).unwrap());
    }

    #[test]
    fn sim_is_symmetric(u in blocked_word(2, 2, 3), x in blocked_word(2, 2, 3)) {
        prop_assert_eq!(sim_n(&u, &x, 2).unwrap(), sim_n(&x, &u, 2).unwrap());
    }

    #[test]
    fn sim_is_transitive(
        base in prop::collection::vec(0u32..3, 3),
        seeds in prop::collection::vec(any::<u64>(), 9),
    ) {
        // three words built from permutations of one block, plus a perturbed copy
        let make = |range: std::ops::Range<usize>| {
            let mut letters = Vec::new();
            for &seed in &seeds[range] {
                let mut block = base.clone();
                block.rotate_left(seed as usize % 3);
                letters.extend(block);
            }
            Word::new(letters, 3).unwrap()
        };
        let (a, b, c) = (make(0..3), make(3..6), make(6..9));
        prop_assert!(sim_n(&a, &b, 3).unwrap() && sim_n(&b, &c, 3).unwrap());
        prop_assert!(sim_n(&a, &c, 3).unwrap());
    }

    #[test]
    fn sim_transitivity_never_fails_on_random_triples(
        a in blocked_word(2, 2, 2),
        b in blocked_word(2, 2, 2),
        c in blocked_word(2, 2, 2),
    ) {
        if sim_n(&a, &b, 2).unwrap() && sim_n(&b, &c, 2).unwrap() {
            prop_assert!(sim_n(&a, &c, 2).unwrap());
        }
    }

    #[test]
    fn witnesses_reassemble_their_inputs(
        u in prop::collection::vec(0u32..3, 1..20),
        x in prop::collection::vec(0u32..3, 1..20),
        n in 1usize..8,
    ) {
        let total = u.len() + x.len();
        prop_assume!(total % n == 0);
        let u = Word::new(u, 3).unwrap();
        let x = Word::new(x, 3).unwrap();
        let related = sim_n(&u.concat(&x), &x.concat(&u), n).unwrap();
        let witness = commute_check(&u, &x, n).unwrap();
        prop_assert_eq!(related, witness.is_some());
        if let Some(w) = witness {
            let (ru, rx) = w.reassemble();
            prop_assert_eq!(ru.letters(), u.letters());
            prop_assert_eq!(rx.letters(), x.letters());
        }
    }

    #[test]
    fn uniform_rotations_commute(w in uniform_word(4, 5), cut in 1usize..20) {
        // block-aligned cuts of a uniform word always commute
        let cut = cut.min(w.len() - 1);
        let (u, x) = (w.slice(0, cut), w.slice(cut, w.len()));
        if cut % 4 == 0 {
            prop_assert!(commute_check(&u, &x, 4).unwrap().is_some());
        }
    }
}
