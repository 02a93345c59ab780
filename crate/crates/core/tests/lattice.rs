use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use framestab::lattice::leech_member;
use framestab::{ALattice, LeechWord, Z4Code, Z4Word};

mod common;

#[test]
fn construction_a_equivalences_on_self_orthogonal_codes() {
    let (self_dual, type_ii) = common::construction_a_sweep(0x5eed, 120);
    // Both sides of each equivalence were exercised.
    assert!(self_dual > 10 && type_ii > 0 && self_dual < 120, "{self_dual} {type_ii}");
}

#[test]
fn construction_a_equivalences_on_arbitrary_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..60 {
        let n = rng.gen_range(1..=8);
        let gens: Vec<Z4Word> = (0..rng.gen_range(0..4)).map(|_| common::random_word(&mut rng, n)).collect();
        common::check_equivalences(&Z4Code::span(n, &gens).unwrap());
    }
}

#[test]
fn construction_a_basics() {
    let c = Z4Code::parse("3111 3111\n1111 2000\n1320 1100\n1010 1032").unwrap();
    let l = ALattice::construction_a(&c);
    assert!(l.is_even() && l.is_unimodular());
    assert_eq!(l.rank(), 8);
    assert!(l.contains_doubled(&[3, 1, 1, 1, 3, 1, 1, 1]));
    assert!(l.contains_doubled(&[4, 0, 0, 0, 0, 0, 0, 0]));
    assert!(!l.contains_doubled(&[2, 0, 0, 0, 0, 0, 0, 0]));
    assert!(!l.contains_doubled(&[1, 1, 1, 1, 1, 1, 1, 1]));

    let z2 = ALattice::from_doubled_basis(vec![vec![2, 0], vec![0, 2]]).unwrap();
    assert!(z2.is_unimodular() && !z2.is_even());
    assert!(ALattice::from_doubled_basis(vec![vec![2, 0], vec![4, 0]]).is_err());
}

#[test]
fn leech_membership() {
    common::check_leech_membership();
}

#[test]
fn leech_is_closed_under_sums() {
    let code = common::leech_code();
    let words: Vec<LeechWord> = ALattice::construction_a(&code)
        .doubled_basis()
        .iter()
        .map(|r| LeechWord::from_doubled_a4(r).unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..200 {
        let mut acc = LeechWord { x: [0; 24] };
        for w in &words {
            match rng.gen_range(0..3) {
                0 => acc = acc.add(w),
                1 => acc = acc.add(&w.neg()),
                _ => {}
            }
        }
        assert!(leech_member(&acc));
        // Λ is even unimodular with no roots.
        assert!(acc.norm_times_8() % 16 == 0 && acc.norm_times_8() != 8 * 2);
    }
}
