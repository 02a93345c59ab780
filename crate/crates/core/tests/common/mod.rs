//! Checks shared by the module suites and the acceptance run. Each check
//! panics on failure.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use framestab::gf2::{family, BinaryCode, BinaryWord};
use framestab::lattice::{leech_golay, leech_member, verify_quotient};
use framestab::{catalog, ALattice, LeechWord, Perm, SignedPerm, Z4Code, Z4Word};

/// The seven properties of a code isomorphic to d(𝓔_n).
pub fn check_en(w: &BinaryCode, n: usize, rng: &mut impl Rng, upto: usize) {
    let w4 = w.weight_words(4).unwrap();
    let dual = w.dual();
    // (1)
    assert_eq!(&BinaryCode::span(2 * n, &w4).unwrap(), w);
    // (2): |w1 ∩ w2| is even on all of W, i.e. W ⊆ W⊥ by bilinearity.
    assert!(w.is_subcode_of(&dual));
    // (3)
    for a in &w4 {
        assert_eq!(w4.iter().filter(|b| a.intersection_count(b) == 2).count(), 2 * n - 4);
    }
    // (4) along random chains.
    for _ in 0..4 {
        let mut chain = vec![w4.choose(rng).unwrap().clone()];
        loop {
            let k = chain.len();
            let fits = |c: &BinaryWord| {
                chain
                    .iter()
                    .enumerate()
                    .all(|(i, x)| x.intersection_count(c) == if i + 1 == k { 2 } else { 0 })
            };
            let candidates: Vec<&BinaryWord> = w4.iter().filter(|c| fits(c)).collect();
            if k >= 2 {
                assert_eq!(candidates.len(), n - k - 1, "chain of length {k}");
            }
            match candidates.choose(rng) {
                Some(c) => chain.push((*c).clone()),
                None => break,
            }
        }
    }
    if upto < 5 {
        return;
    }
    let dual4 = dual.weight_words(4).unwrap();
    let dual2 = dual.weight_words(2).unwrap();
    // (5)
    if n > 8 {
        assert_eq!(dual4.iter().collect::<BTreeSet<_>>(), w4.iter().collect::<BTreeSet<_>>());
    }
    if n > 2 {
        // (6)
        for a in &w4 {
            let splits = dual2
                .iter()
                .enumerate()
                .flat_map(|(i, x)| dual2[i + 1..].iter().map(move |y| (x, y)))
                .filter(|(x, y)| &x.xor(y) == a)
                .count();
            assert_eq!(splits, 1);
        }
        // (7)
        for (i, x) in dual2.iter().enumerate() {
            for y in &dual2[i + 1..] {
                assert!(w.contains(&x.xor(y)));
            }
        }
    }
}

pub fn random_perm(len: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..len).collect();
    p.shuffle(rng);
    p
}

/// The decomposition of the weight-4 words of C = span{d(E_8), e(H_8)}.
pub fn check_weight4_decomposition_h8() {
    let h8 = family::hamming8();
    let e8 = family::even_weight(8);
    let c = e8.d_map().sum(&h8.e_map()).unwrap();
    let c4: BTreeSet<BinaryWord> = c.weight_words(4).unwrap().into_iter().collect();

    let first: Vec<(BinaryWord, BinaryWord)> =
        e8.weight_words(2).unwrap().into_iter().map(|x| (x.clone(), x.d_map())).collect();
    let mut second: Vec<(BinaryWord, BinaryWord)> = Vec::new();
    for y in h8.weight_words(4).unwrap() {
        e8.for_each_codeword(8, |z| {
            if z.is_subset_of(&y) {
                second.push((y.clone(), y.e_map().xor(&z.d_map())));
            }
        })
        .unwrap();
    }
    // (1)
    let built: BTreeSet<BinaryWord> = first.iter().chain(&second).map(|(_, u)| u.clone()).collect();
    assert_eq!(built, c4);
    // (2)
    for (y, u) in &second {
        for (x, dx) in &first {
            let meet = u.intersection_count(dx);
            assert_eq!(meet == 0, x.intersection_count(y) == 0);
            assert_eq!(meet == 2, x.is_subset_of(y));
        }
    }
    // (3)
    for (y, u) in &second {
        for (y2, u2) in &second {
            if u.intersection_count(u2) == 2 {
                assert!([2, 4].contains(&y.intersection_count(y2)));
            }
        }
    }
}

pub fn random_word(rng: &mut ChaCha8Rng, n: usize) -> Z4Word {
    Z4Word::new((0..n).map(|_| rng.gen_range(0..4)).collect())
}

/// Greedily adds random words that keep the code self-orthogonal.
pub fn random_self_orthogonal(rng: &mut ChaCha8Rng, n: usize) -> Z4Code {
    let mut gens: Vec<Z4Word> = Vec::new();
    for _ in 0..rng.gen_range(1..60) {
        let mut w = random_word(rng, n);
        if rng.gen_bool(0.5) {
            // Doubled words are orthogonal to much more, so they fill the
            // code up faster.
            w = w.scale(2);
        }
        if w.dot(&w) == 0 && gens.iter().all(|g| g.dot(&w) == 0) {
            gens.push(w);
        }
    }
    Z4Code::span(n, &gens).unwrap()
}

/// A random monomial image (permutation and signs) of a length-8 Type II
/// code from the catalog.
pub fn random_type_ii(rng: &mut ChaCha8Rng) -> Z4Code {
    let id = format!("z4-len8-{}", rng.gen_range(1..=4));
    let code = framestab::catalog::get(&id).unwrap().z4_code().unwrap();
    let mut images: Vec<usize> = (0..8).collect();
    for i in (1..8).rev() {
        images.swap(i, rng.gen_range(0..=i));
    }
    let negate: Vec<bool> = (0..8).map(|_| rng.gen_bool(0.5)).collect();
    let g = SignedPerm::new(Perm::from_images(images).unwrap(), negate);
    let gens: Vec<Z4Word> = code.generators().iter().map(|w| g.apply(w)).collect();
    Z4Code::span(8, &gens).unwrap()
}

pub fn check_equivalences(code: &Z4Code) {
    let l = ALattice::construction_a(code);
    assert!(l.four_frame_check());
    assert!(verify_quotient(code));
    assert_eq!(l.is_integral(), code.is_self_orthogonal(), "{code:?}");
    let weights_mod_8 = {
        let mut ok = true;
        code.for_each_weight(24, |w| ok &= w % 8 == 0).unwrap();
        ok
    };
    assert_eq!(l.is_even(), weights_mod_8);
    assert_eq!(l.is_integral() && l.is_unimodular(), code.is_self_dual());
    assert_eq!(l.is_even() && l.is_unimodular(), code.is_type_ii());
}

/// Checks the Construction A equivalences on `count` random
/// self-orthogonal codes of length at most 12; returns how many were
/// self-dual and how many Type II.
pub fn construction_a_sweep(seed: u64, count: usize) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut self_dual, mut type_ii) = (0, 0);
    for _ in 0..count {
        let n = rng.gen_range(1..=12);
        let code = if rng.gen_bool(0.2) {
            random_type_ii(&mut rng)
        } else {
            random_self_orthogonal(&mut rng, n)
        };
        assert!(code.is_self_orthogonal());
        check_equivalences(&code);
        self_dual += code.is_self_dual() as usize;
        type_ii += code.is_type_ii() as usize;
    }
    (self_dual, type_ii)
}

pub fn leech_code() -> Z4Code {
    catalog::get("z4-leech-standard").unwrap().z4_code().unwrap()
}

/// The scaled generators of A_4 of the Leech code and the frame vectors lie
/// in Λ; (2, 0, …, 0) does not.
pub fn check_leech_membership() {
    let code = leech_code();
    let l = ALattice::construction_a(&code);
    assert!(l.is_even() && l.is_unimodular());
    let gens = code.generators();
    assert_eq!(gens.len(), 18);
    for g in &gens {
        let x: Vec<i64> = g.digits().iter().map(|&d| d as i64).collect();
        assert!(leech_member(&LeechWord::from_doubled_a4(&x).unwrap()), "{g:?}");
    }
    for i in 0..24 {
        let mut x = vec![0; 24];
        x[i] = 4;
        let w = LeechWord::from_doubled_a4(&x).unwrap();
        assert_eq!(w.norm_times_8(), 32);
        assert!(leech_member(&w));
    }
    for r in l.doubled_basis() {
        assert!(leech_member(&LeechWord::from_doubled_a4(r).unwrap()));
    }
    let mut x = [0i64; 24];
    x[0] = 2;
    assert!(!leech_member(&LeechWord { x }));
    // The classical minimal vector (−3, 1^23).
    let mut x = [1i64; 24];
    x[0] = -3;
    assert!(leech_member(&LeechWord { x }));
    assert_eq!(LeechWord { x }.norm_times_8(), 32);
    assert!(leech_golay().is_doubly_even());
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn brute_aut(code: &BinaryCode) -> u64 {
    permutations(code.len()).iter().filter(|p| code.is_fixed_by(p)).count() as u64
}

/// Binary codes of length at most 8 from the catalog and the length-8
/// Z4 codes, plus their duals.
pub fn corpus() -> Vec<(String, BinaryCode)> {
    let mut out = Vec::new();
    for n in 2..=8 {
        let id = format!("bin-even-{n}");
        out.push((id.clone(), catalog::get(&id).unwrap().binary_code().unwrap()));
    }
    out.push(("bin-hamming8".into(), catalog::get("bin-hamming8").unwrap().binary_code().unwrap()));
    for case in 1..=4 {
        let c = catalog::get(&format!("z4-len8-{case}")).unwrap().z4_code().unwrap();
        out.push((format!("z4-len8-{case} residue"), c.residue().clone()));
        out.push((format!("z4-len8-{case} torsion"), c.torsion().clone()));
    }
    let duals: Vec<_> = out.iter().map(|(id, c)| (format!("{id} dual"), c.dual())).collect();
    out.extend(duals);
    out
}

