use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use framestab::autsearch::aut_binary;
use framestab::catalog;
use framestab::frames::*;
use framestab::gf2::{family, BinaryCode, BinaryWord};
use framestab::{Error, Z4Code, Z4Word};

mod common;

fn z4(id: &str) -> Z4Code {
    catalog::get(id).unwrap().z4_code().unwrap()
}

fn lattice(id: &str) -> StructureCodes {
    structure_codes_lattice(&z4(id)).unwrap()
}

fn orbifold(id: &str) -> StructureCodes {
    structure_codes_orbifold(&z4(id)).unwrap()
}

fn code(rows: &[&str]) -> BinaryCode {
    BinaryCode::parse(&rows.join("\n")).unwrap()
}

fn word(bits: &str) -> BinaryWord {
    BinaryWord::parse(bits).unwrap()
}

#[test]
fn length8_structure_codes() {
    let sc = lattice("z4-len8-1");
    assert_eq!(sc.c_code, family::even_weight(16));
    assert_eq!(sc.d_code, family::repetition(16));

    let sc = lattice("z4-len8-2");
    assert_eq!(sc.c_code, family::even_weight(8).direct_sum(&family::even_weight(8)));
    assert_eq!(sc.d_code, code(&["1111111100000000", "0000000011111111"]));

    let sc = lattice("z4-len8-3");
    let e4 = family::even_weight(4);
    let e4_4 = e4.direct_sum(&e4).direct_sum(&e4).direct_sum(&e4);
    let extra = BinaryCode::span(16, &[word("1000100010001000")]).unwrap();
    assert_eq!(sc.c_code, e4_4.sum(&extra).unwrap());
    assert_eq!(
        sc.d_code,
        code(&["1111111100000000", "0000000011111111", "1111000011110000"])
    );
    assert_eq!(compute_p(&sc), e4_4);

    let sc = lattice("z4-len8-4");
    let h8 = family::hamming8();
    assert_eq!(sc.c_code, family::full(8).d_map().sum(&h8.e_map()).unwrap());
    assert_eq!(sc.d_code, h8.d_map());
}

#[test]
fn zero_code_structure() {
    for n in 1..6 {
        let sc = structure_codes_lattice(&Z4Code::zero(n)).unwrap();
        assert_eq!(sc.c_code, family::full(n).d_map());
        assert_eq!(sc.d_code.dim(), 0);
        assert!(!holomorphic(&sc));
    }
}

#[test]
fn orbifold_structure_codes() {
    let sc = orbifold("z4-len8-4");
    let h8 = family::hamming8();
    assert_eq!(sc.c_code, family::even_weight(8).d_map().sum(&h8.e_map()).unwrap());
    let rm = family::reed_muller(2, 4).unwrap();
    assert!(framestab::gf2::is_equivalent(&sc.c_code, &rm).unwrap().is_some());

    let sc = orbifold("z4-pseudo-golay-1");
    let g = sc.c0.clone();
    assert!(framestab::gf2::is_equivalent(&g, &family::golay24()).unwrap().is_some());
    assert_eq!(sc.c_code, family::even_weight(24).d_map().sum(&g.e_map()).unwrap());
    assert_eq!(sc.d_code, sc.c1.d_map().sum(&family::repetition(24).e_map()).unwrap());
}

#[test]
fn moonshine_d_matches_published_matrix() {
    let sc = orbifold("z4-leech-standard");
    let published = catalog::get("bin-moonshine-d").unwrap().binary_code().unwrap();
    assert_eq!(sc.d_code, published);
}

#[test]
fn preconditions() {
    // 2 is self-orthogonal but A_4 is odd.
    let odd = Z4Code::parse("2 0").unwrap();
    assert!(matches!(structure_codes_lattice(&odd), Err(Error::Precondition(_))));
    let not_type_ii = Z4Code::parse("2 2 0 0").unwrap();
    assert!(matches!(structure_codes_orbifold(&not_type_ii), Err(Error::Precondition(_))));
    let err = frame_report(&z4("z4-len8-1"), Variant::Orbifold, &FrameOptions::default()).unwrap_err();
    assert!(err.to_string().contains("minimum weight of C0 is 2"), "{err}");
    let sc = orbifold("z4-len8-1");
    assert!(matches!(enumerate_h_orbifold(&sc), Err(Error::Precondition(_))));
    assert!(enumerate_h_lattice(&sc).is_err());
}

#[test]
fn dims_and_pointwise() {
    let cases = [
        (lattice("z4-len8-1"), 15, (1, 14)),
        (lattice("z4-len8-2"), 14, (2, 12)),
        (lattice("z4-len8-3"), 12, (3, 9)),
        (lattice("z4-len8-4"), 9, (4, 5)),
        (orbifold("z4-len8-4"), 5, (5, 0)),
        (orbifold("z4-pseudo-golay-1"), 13, (13, 0)),
        (orbifold("z4-pseudo-golay-2"), 13, (13, 0)),
        (orbifold("z4-leech-standard"), 27, (7, 20)),
    ];
    for (sc, p, (a, b)) in cases {
        assert_eq!(compute_p(&sc).dim(), p);
        assert_eq!(pointwise_order(&sc), Pointwise { a, b });
        assert!(holomorphic(&sc));
    }
    let pg = orbifold("z4-pseudo-golay-1");
    assert_eq!(compute_p(&pg), pg.d_code);
}

#[test]
fn structure_invariants_on_catalog() {
    let mut all = Vec::new();
    for id in ["z4-len8-1", "z4-len8-2", "z4-len8-3", "z4-len8-4", "z4-pseudo-golay-1", "z4-leech-standard"] {
        all.push(lattice(id));
        if let Ok(sc) = structure_codes_orbifold(&z4(id)) {
            all.push(sc);
        }
    }
    for sc in &all {
        assert!(sc.c_code.is_subcode_of(&sc.d_code.dual()));
        assert!(sc.c_code.is_even() && sc.d_code.is_even());
        // Every ξ in C⊥ has α·ξ ∈ C for all α ∈ D.
        let p = compute_p(sc);
        assert!(sc.c_code.dual().is_subcode_of(&p));
        for xi in sc.c_code.dual().basis() {
            assert!(sc.d_code.basis().iter().all(|a| sc.c_code.contains(&a.and(xi))));
        }
    }
}

#[test]
fn non_self_dual_lattice_input_is_not_holomorphic() {
    let c = Z4Code::parse("2 2 2 2 0 0 0 0\n0 0 0 0 2 2 2 2").unwrap();
    let sc = structure_codes_lattice(&c).unwrap();
    assert!(sc.c_code.dim() + sc.d_code.dim() < 16);
    assert!(!holomorphic(&sc));
}

#[test]
fn lift_order_examples() {
    let sc = lattice("z4-len8-3");
    // e(10101010) meets each block of E_4^4 once.
    let xi = word("10101010").e_map();
    assert!(!compute_p(&sc).contains(&xi));
    assert_eq!(lift_order(&sc, &xi).unwrap(), LiftOrder::NotLiftable);
    assert_eq!(lift_order_brute(&sc, &xi).unwrap(), LiftOrder::NotLiftable);
    assert!(matches!(lift_order(&sc, &word("1")), Err(Error::LengthMismatch { .. })));

    // (α, α, α) with α a weight-4 word of RM(2,4), against the moonshine D.
    let sc = orbifold("z4-leech-standard");
    let rm = family::reed_muller(2, 4).unwrap();
    for alpha in rm.weight_words(4).unwrap().iter().take(30) {
        let xi = alpha.concat(alpha).concat(alpha);
        let by_basis = lift_order(&sc, &xi).unwrap();
        assert_eq!(by_basis, lift_order_brute(&sc, &xi).unwrap());
        let mod4 = sc
            .d_code
            .basis()
            .iter()
            .all(|b| b.and(&xi).weight() % 4 == 0);
        if by_basis != LiftOrder::NotLiftable && !mod4 {
            assert_eq!(by_basis, LiftOrder::Four);
        }
    }
}

#[test]
fn lifts_commute_examples() {
    let sc = lattice("z4-len8-1");
    let p = compute_p(&sc);
    let zero = BinaryWord::zeros(16);
    for xi in p.basis() {
        assert!(lifts_commute(&sc, xi, &zero).unwrap());
        let even = sc.d_code.basis().iter().all(|a| a.and(xi).weight() % 2 == 0);
        assert_eq!(lifts_commute(&sc, xi, xi).unwrap(), even);
    }
    let outside = word("1000000000000000");
    assert!(matches!(lifts_commute(&sc, &outside, &zero), Err(Error::Precondition(_))));
}

fn random_member(code: &BinaryCode, rng: &mut impl Rng) -> BinaryWord {
    let mut w = BinaryWord::zeros(code.len());
    for b in code.basis() {
        if rng.gen() {
            w.xor_assign(b);
        }
    }
    w
}

fn structures() -> Vec<StructureCodes> {
    vec![
        lattice("z4-len8-1"),
        lattice("z4-len8-2"),
        lattice("z4-len8-3"),
        lattice("z4-len8-4"),
        orbifold("z4-len8-4"),
        orbifold("z4-leech-standard"),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn lift_order_basis_matches_brute_force(which in 0usize..6, seed in any::<u64>(), in_p in any::<bool>()) {
        let sc = &structures()[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let xi = if in_p {
            random_member(&compute_p(sc), &mut rng)
        } else {
            let bits: Vec<u8> = (0..sc.r).map(|_| rng.gen_range(0..2)).collect();
            BinaryWord::from_bits(&bits)
        };
        prop_assert_eq!(lift_order(sc, &xi).unwrap(), lift_order_brute(sc, &xi).unwrap());
        prop_assert_eq!(lift_order(sc, &xi).unwrap() != LiftOrder::NotLiftable, compute_p(sc).contains(&xi));
    }

    #[test]
    fn lifts_commute_basis_matches_brute_force(which in 0usize..6, seed in any::<u64>()) {
        let sc = &structures()[which];
        let p = compute_p(sc);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_member(&p, &mut rng), random_member(&p, &mut rng));
        prop_assert_eq!(lifts_commute(sc, &x, &y).unwrap(), lifts_commute_brute(sc, &x, &y).unwrap());
    }
}

#[test]
fn h_counts_lattice() {
    let expected: [(&str, u64); 4] = [("z4-len8-1", 2027025), ("z4-len8-2", 11025), ("z4-len8-3", 81), ("z4-len8-4", 1)];
    for (id, count) in expected {
        let sc = lattice(id);
        let h = enumerate_h_lattice(&sc).unwrap();
        assert_eq!(h.count, BigUint::from(count), "{id}");
        let aut_c = aut_binary(&sc.c_code).unwrap().order();
        let aut_c0 = aut_binary(&sc.c0).unwrap().order();
        assert_eq!(h_index(&sc, &aut_c, &aut_c0), h.count, "{id}");
    }
    // Case 3 by hand: |Aut(C)| = 7962624 = (4!)^4 · 4!, |Aut(C0)| = 384.
    let sc = lattice("z4-len8-3");
    assert_eq!(aut_binary(&sc.c_code).unwrap().order(), BigUint::from(7962624u64));
}

#[test]
fn h_members_lattice() {
    let sc = lattice("z4-len8-3");
    let h = enumerate_h_lattice(&sc).unwrap();
    let members = h.members.unwrap();
    assert_eq!(members.len(), 81);
    let distinct: BTreeSet<Vec<BinaryWord>> = members.iter().map(|m| m.basis().to_vec()).collect();
    assert_eq!(distinct.len(), 81);
    for m in &members {
        assert!(m.is_subcode_of(&sc.c_code));
        assert_eq!(m.dim(), 8);
        let pairs = m.weight_words(2).unwrap();
        assert_eq!(pairs.len(), 8);
        let union = pairs.iter().fold(BinaryWord::zeros(16), |acc, p| acc.xor(p));
        assert_eq!(union.weight(), 16);
    }
    assert!(enumerate_h_lattice(&lattice("z4-len8-1")).unwrap().members.is_none());
}

#[test]
fn h_counts_orbifold() {
    let sc = orbifold("z4-len8-4");
    let h = enumerate_h_orbifold(&sc).unwrap();
    assert_eq!(h.count, BigUint::from(15u32));
    let aut_c = aut_binary(&sc.c_code).unwrap().order();
    assert_eq!(aut_c, BigUint::from(322560u32));
    let aut_c0 = aut_binary(&sc.c0).unwrap().order();
    assert_eq!(h_index(&sc, &aut_c, &aut_c0), h.count);
    // Every w-choice collapses to one generator modulo ⟨d(x_i)⟩.
    assert_eq!(h.w_choices_distinct, 7);
    assert_eq!(h.w_choices_tried, 7 * 64);

    let sc = orbifold("z4-leech-standard");
    assert_eq!(enumerate_h_orbifold(&sc).unwrap().count, BigUint::from(15u32));
    let sc = orbifold("z4-pseudo-golay-1");
    assert_eq!(enumerate_h_orbifold(&sc).unwrap().count, BigUint::from(1u32));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn d_even_weight_properties(n in prop::sample::select(vec![6usize, 8, 10, 12]), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = family::even_weight(n).d_map().permuted(&common::random_perm(2 * n, &mut rng));
        common::check_en(&w, n, &mut rng, 7);
    }
}

#[test]
fn d_even_weight_properties_on_orbifold_members() {
    let sc = orbifold("z4-len8-4");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let members = enumerate_h_orbifold(&sc).unwrap().members.unwrap();
    assert_eq!(members.len(), 15);
    for e in &members {
        assert!(e.is_subcode_of(&sc.c_code));
        common::check_en(e, 8, &mut rng, 4);
    }
}

#[test]
fn weight4_decomposition_for_hamming8() {
    common::check_weight4_decomposition_h8();
}

fn random_even_code(n: usize, k: usize, rng: &mut impl Rng) -> BinaryCode {
    let words: Vec<BinaryWord> = (0..k)
        .map(|_| {
            let mut bits: Vec<u8> = (0..n).map(|_| rng.gen_range(0..2)).collect();
            bits[n - 1] = bits[..n - 1].iter().sum::<u8>() % 2;
            BinaryWord::from_bits(&bits)
        })
        .collect();
    BinaryCode::span(n, &words).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn h_lattice_direct_equals_index(n in 3usize..=10, k in 0usize..6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random_even_code(n, k, &mut rng);
        let gens: Vec<Z4Word> = b.basis().iter().map(Z4Word::doubled).collect();
        let c = Z4Code::span(n, &gens).unwrap();
        let sc = structure_codes_lattice(&c).unwrap();
        let direct = enumerate_h_lattice(&sc).unwrap().count;
        let aut_c = aut_binary(&sc.c_code).unwrap().order();
        let aut_c0 = aut_binary(&sc.c0).unwrap().order();
        prop_assert_eq!(direct, h_index(&sc, &aut_c, &aut_c0));
    }
}

#[test]
fn reports() {
    let opts = |id: &str| FrameOptions {
        code_id: id.into(),
        cross_check: true,
        ..Default::default()
    };
    let r = frame_report(&z4("z4-len8-1"), Variant::Lattice, &opts("z4-len8-1")).unwrap();
    let sixteen_factorial = BigUint::from(20922789888000u64);
    assert_eq!(r.stab_order, ((BigUint::from(1u32) << 15usize) * &sixteen_factorial).to_string());
    assert_eq!(r.k_order, sixteen_factorial.to_string());
    let cc = r.cross_check.as_ref().unwrap();
    assert_eq!(cc.h_direct, "2027025");
    assert_eq!(cc.h_index.as_deref(), Some("2027025"));
    assert_eq!(Some(cc.index_by_division.clone()), r.index_aut_c_k);

    let r = frame_report(&z4("z4-len8-4"), Variant::Orbifold, &opts("e8")).unwrap();
    let cc = r.cross_check.unwrap();
    assert_eq!(cc.h_index.as_deref(), Some("15"));
    assert_eq!(r.index_aut_c_k.as_deref(), Some("1"));
    assert_eq!(cc.index_by_division, "1");
    assert_eq!(r.stab_factored, "2^5 * 2^4 * 1344 * 15");

    // Minimum weight of C0 above 4: no index formula and no cross-check.
    let r = frame_report(&z4("z4-pseudo-golay-1"), Variant::Orbifold, &opts("pg1")).unwrap();
    assert_eq!(r.index_aut_c_k, None);
    assert!(r.cross_check.is_none());
    let shape = (BigUint::from(1u32) << 25usize) * BigUint::from(6072u32);
    assert_eq!(r.stab_order, shape.to_string());
}

#[test]
fn report_json_schema() {
    let r = frame_report(&z4("z4-len8-4"), Variant::Lattice, &FrameOptions::default()).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    let keys: BTreeSet<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    let expected: BTreeSet<&str> = [
        "code_id", "variant", "n", "r", "dims", "holomorphic", "pointwise", "aut", "h_count", "k_order",
        "stab_order", "stab_factored", "index_autC_K",
    ]
    .into_iter()
    .collect();
    assert_eq!(keys, expected);
    assert_eq!(v["variant"], "lattice");
    assert_eq!(v["dims"]["P"], 9);
    assert_eq!(v["pointwise"]["b"], 5);
    assert_eq!(v["aut"]["z4_bar"], "1344");
    let back: FrameReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}
