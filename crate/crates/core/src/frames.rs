//! Structure codes of the framed VOAs attached to a Z4-code, the code P,
//! the pointwise frame stabilizer, the subcode family 𝓗 and the frame
//! stabilizer order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::autsearch::{self, SearchConfig};
use crate::error::{Error, Result};
use crate::gf2::{family, BinaryCode, BinaryWord};
use crate::lattice::ALattice;
use crate::z4::Z4Code;

/// Codes of dimension above this are not enumerated by the brute-force
/// cross-checks.
const BRUTE_FORCE_LOG2: usize = 20;

/// 𝓗 members are materialized only up to this many.
pub const MEMBER_CAP: u64 = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// The lattice VOA V_L.
    Lattice,
    /// Its Z2-orbifold.
    Orbifold,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Variant::Lattice => "lattice",
            Variant::Orbifold => "orbifold",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Variant> {
        match s {
            "lattice" => Ok(Variant::Lattice),
            "orbifold" => Ok(Variant::Orbifold),
            _ => Err(Error::InvalidParameters(format!("unknown variant `{s}`"))),
        }
    }
}

/// The structure codes (C, D) of length r = 2n, with the torsion and
/// residue codes they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCodes {
    pub n: usize,
    pub r: usize,
    pub c_code: BinaryCode,
    pub d_code: BinaryCode,
    pub variant: Variant,
    pub c0: BinaryCode,
    pub c1: BinaryCode,
}

/// D = d(𝒞_1), C = ⟨d(Z2^n), e(𝒞_0)⟩. Requires A_4(𝒞) to be even.
pub fn structure_codes_lattice(code: &Z4Code) -> Result<StructureCodes> {
    if !ALattice::construction_a(code).is_even() {
        return Err(Error::Precondition("A_4 of the code is not an even lattice".into()));
    }
    let n = code.len();
    let c0 = code.torsion().clone();
    let c1 = code.residue().clone();
    let c_code = family::full(n).d_map().sum(&c0.e_map())?;
    Ok(StructureCodes {
        n,
        r: 2 * n,
        c_code,
        d_code: c1.d_map(),
        variant: Variant::Lattice,
        c0,
        c1,
    })
}

/// D = ⟨d(𝒞_1), e(1^n)⟩, C = ⟨d(𝓔_n), e(𝒞_0)⟩. Requires Type II.
pub fn structure_codes_orbifold(code: &Z4Code) -> Result<StructureCodes> {
    if !code.is_type_ii() {
        return Err(Error::Precondition("the orbifold variant requires a Type II code".into()));
    }
    let n = code.len();
    let c0 = code.torsion().clone();
    let c1 = code.residue().clone();
    let c_code = family::even_weight(n).d_map().sum(&c0.e_map())?;
    let d_code = c1.d_map().sum(&family::repetition(n).e_map())?;
    Ok(StructureCodes {
        n,
        r: 2 * n,
        c_code,
        d_code,
        variant: Variant::Orbifold,
        c0,
        c1,
    })
}

pub fn structure_codes(code: &Z4Code, variant: Variant) -> Result<StructureCodes> {
    match variant {
        Variant::Lattice => structure_codes_lattice(code),
        Variant::Orbifold => structure_codes_orbifold(code),
    }
}

/// C = D⊥.
pub fn holomorphic(sc: &StructureCodes) -> bool {
    sc.c_code == sc.d_code.dual()
}

/// P = {ξ : α·ξ ∈ C for all α ∈ D}. Since ⟨α·ξ, h⟩ = ⟨ξ, α·h⟩, P is the
/// dual of the span of α·h over bases of D and C⊥.
pub fn compute_p(sc: &StructureCodes) -> BinaryCode {
    let checks = sc.c_code.dual();
    let rows: Vec<BinaryWord> = sc
        .d_code
        .basis()
        .iter()
        .flat_map(|a| checks.basis().iter().map(move |h| a.and(h)))
        .collect();
    BinaryCode::span(sc.r, &rows).expect("lengths agree").dual()
}

/// Exponents (a, b) with |Stab^pt| = 2^{a+b}: a = r − dim D⊥ and
/// b = dim P − dim C⊥.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pointwise {
    pub a: usize,
    pub b: usize,
}

pub fn pointwise_order(sc: &StructureCodes) -> Pointwise {
    let p = compute_p(sc);
    Pointwise {
        a: sc.r - sc.d_code.dual().dim(),
        b: p.dim() - sc.c_code.dual().dim(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftOrder {
    NotLiftable,
    Two,
    Four,
}

fn check_len(sc: &StructureCodes, xi: &BinaryWord) -> Result<()> {
    if xi.len() != sc.r {
        return Err(Error::LengthMismatch {
            expected: sc.r,
            found: xi.len(),
        });
    }
    Ok(())
}

/// Whether σ_ξ lifts to the pointwise stabilizer, and the order of a lift.
///
/// Liftability is linear in α, so the basis of D suffices. The order test
/// needs wt(α·ξ) ≡ 0 mod 4 on all of D; with q(α) = wt(α·ξ) one has
/// q(α+β) = q(α) + q(β) − 2|α∩β∩ξ|, so it is enough that q vanishes on the
/// basis and every |α_i∩α_j∩ξ| is even.
pub fn lift_order(sc: &StructureCodes, xi: &BinaryWord) -> Result<LiftOrder> {
    check_len(sc, xi)?;
    let products: Vec<BinaryWord> = sc.d_code.basis().iter().map(|a| a.and(xi)).collect();
    if !products.iter().all(|p| sc.c_code.contains(p)) {
        return Ok(LiftOrder::NotLiftable);
    }
    let diagonal = products.iter().all(|p| p.weight() % 4 == 0);
    let cross = products
        .iter()
        .enumerate()
        .all(|(i, p)| products[i + 1..].iter().all(|q| p.intersection_count(q) % 2 == 0));
    Ok(if diagonal && cross { LiftOrder::Two } else { LiftOrder::Four })
}

/// lift_order by running over every element of D.
pub fn lift_order_brute(sc: &StructureCodes, xi: &BinaryWord) -> Result<LiftOrder> {
    check_len(sc, xi)?;
    let mut liftable = true;
    let mut order_two = true;
    sc.d_code.for_each_codeword(BRUTE_FORCE_LOG2, |a| {
        let p = a.and(xi);
        liftable &= sc.c_code.contains(&p);
        order_two &= p.weight() % 4 == 0;
    })?;
    Ok(match (liftable, order_two) {
        (false, _) => LiftOrder::NotLiftable,
        (true, true) => LiftOrder::Two,
        (true, false) => LiftOrder::Four,
    })
}

/// Whether lifts of σ_{ξ1} and σ_{ξ2} commute: ⟨α·ξ1, α·ξ2⟩ = 0 for all
/// α ∈ D. Over GF(2), ⟨α·ξ1, α·ξ2⟩ = ⟨α, ξ1·ξ2⟩ is linear in α, so the
/// basis of D suffices.
pub fn lifts_commute(sc: &StructureCodes, xi1: &BinaryWord, xi2: &BinaryWord) -> Result<bool> {
    check_p_members(sc, xi1, xi2)?;
    let both = xi1.and(xi2);
    Ok(sc.d_code.basis().iter().all(|a| !a.dot(&both)))
}

/// lifts_commute by running over every element of D.
pub fn lifts_commute_brute(sc: &StructureCodes, xi1: &BinaryWord, xi2: &BinaryWord) -> Result<bool> {
    check_p_members(sc, xi1, xi2)?;
    let mut ok = true;
    sc.d_code.for_each_codeword(BRUTE_FORCE_LOG2, |a| {
        ok &= a.and(xi1).intersection_count(&a.and(xi2)) % 2 == 0;
    })?;
    Ok(ok)
}

fn check_p_members(sc: &StructureCodes, xi1: &BinaryWord, xi2: &BinaryWord) -> Result<()> {
    check_len(sc, xi1)?;
    check_len(sc, xi2)?;
    let p = compute_p(sc);
    if !p.contains(xi1) || !p.contains(xi2) {
        return Err(Error::Precondition("both words must lie in P".into()));
    }
    Ok(())
}

/// Result of a direct count of 𝓗.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HEnumeration {
    pub count: BigUint,
    /// The members in increasing order of canonical basis, when there are
    /// at most [`MEMBER_CAP`] of them.
    pub members: Option<Vec<BinaryCode>>,
    /// Parameter choices tried for the second orbifold family, and how many
    /// distinct codes they gave. Zero for the lattice variant.
    pub w_choices_tried: u64,
    pub w_choices_distinct: u64,
}

/// Coordinate syndromes: bit k of `s[i]` is coordinate i of the k-th
/// basis word of `checks`.
fn syndromes(checks: &BinaryCode) -> Vec<Vec<u64>> {
    let n = checks.len();
    let limbs = checks.dim().div_ceil(64).max(1);
    let mut s = vec![vec![0u64; limbs]; n];
    for (k, h) in checks.basis().iter().enumerate() {
        for i in h.support() {
            s[i][k / 64] |= 1 << (k % 64);
        }
    }
    s
}

fn double_factorial_odd(m: usize) -> BigUint {
    // (m − 1)!! for even m.
    (1..m).step_by(2).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// All perfect matchings of `points`.
fn matchings(points: &[usize], out: &mut Vec<Vec<(usize, usize)>>, current: &mut Vec<(usize, usize)>) {
    let Some((&first, rest)) = points.split_first() else {
        out.push(current.clone());
        return;
    };
    for k in 0..rest.len() {
        let remaining: Vec<usize> = rest.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &p)| p).collect();
        current.push((first, rest[k]));
        matchings(&remaining, out, current);
        current.pop();
    }
}

/// Subcodes of C isomorphic to d(Z2^n) (lattice variant).
///
/// Such a subcode is spanned by n disjoint weight-2 words of C, so members
/// correspond to perfect matchings of the graph C(2) on the 2n coordinates.
/// {i, j} ∈ C exactly when coordinates i and j have the same parity-check
/// column, so C(2) is a disjoint union of cliques and the matchings are
/// products of matchings of the cliques.
pub fn enumerate_h_lattice(sc: &StructureCodes) -> Result<HEnumeration> {
    if sc.variant != Variant::Lattice {
        return Err(Error::Precondition("lattice variant required".into()));
    }
    let s = syndromes(&sc.c_code.dual());
    let mut classes: HashMap<&[u64], Vec<usize>> = HashMap::new();
    for (i, key) in s.iter().enumerate() {
        classes.entry(key.as_slice()).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = classes.into_values().collect();
    classes.sort();
    if classes.iter().any(|c| c.len() % 2 == 1) {
        return Ok(HEnumeration {
            count: BigUint::zero(),
            members: Some(Vec::new()),
            w_choices_tried: 0,
            w_choices_distinct: 0,
        });
    }
    let count = classes
        .iter()
        .fold(BigUint::one(), |acc, c| acc * double_factorial_odd(c.len()));
    let members = (count <= BigUint::from(MEMBER_CAP)).then(|| {
        let per_class: Vec<Vec<Vec<(usize, usize)>>> = classes
            .iter()
            .map(|c| {
                let mut out = Vec::new();
                matchings(c, &mut out, &mut Vec::new());
                out
            })
            .collect();
        let mut codes: Vec<BinaryCode> = Vec::new();
        let mut choice = vec![0usize; per_class.len()];
        loop {
            let words: Vec<BinaryWord> = per_class
                .iter()
                .zip(&choice)
                .flat_map(|(m, &k)| m[k].iter().map(|&(i, j)| BinaryWord::from_support(sc.r, &[i, j])))
                .collect();
            codes.push(BinaryCode::span(sc.r, &words).expect("lengths agree"));
            // Odometer over the per-class choices.
            let mut level = 0;
            loop {
                if level == choice.len() {
                    codes.sort_by(|a, b| a.basis().cmp(b.basis()));
                    return codes;
                }
                choice[level] += 1;
                if choice[level] < per_class[level].len() {
                    break;
                }
                choice[level] = 0;
                level += 1;
            }
        }
    });
    Ok(HEnumeration {
        count,
        members,
        w_choices_tried: 0,
        w_choices_distinct: 0,
    })
}

/// Checks the chain pattern r_1, …, r_{n−1} with r_{2i−1} = d(x_i) and
/// r_{2j} = g_j adjusted by d(x_j) and/or d(x_{j+1}): weight 4 everywhere,
/// |r_i ∩ r_k| = 2 for neighbours and 0 otherwise, and independence. Such a
/// chain spans a code isomorphic to d(𝓔_n).
fn chain_test(r: usize, xs: &[BinaryWord], gs: &[BinaryWord]) -> bool {
    let dx: Vec<BinaryWord> = xs.iter().map(BinaryWord::d_map).collect();
    let mut rows: Vec<BinaryWord> = Vec::with_capacity(2 * xs.len());
    for (j, g) in gs.iter().enumerate() {
        rows.push(dx[j].clone());
        let options = [
            g.clone(),
            g.xor(&dx[j]),
            g.xor(&dx[j + 1]),
            g.xor(&dx[j]).xor(&dx[j + 1]),
        ];
        let previous = (j > 0).then(|| rows[rows.len() - 2].clone());
        let Some(pick) = options
            .into_iter()
            .find(|o| o.weight() == 4 && previous.as_ref().is_none_or(|p| p.intersection_count(o) == 0))
        else {
            return false;
        };
        rows.push(pick);
    }
    rows.push(dx[xs.len() - 1].clone());
    let pattern = rows.iter().enumerate().all(|(i, a)| {
        a.weight() == 4
            && rows[i + 1..]
                .iter()
                .enumerate()
                .all(|(k, b)| a.intersection_count(b) == if k == 0 { 2 } else { 0 })
    });
    pattern && BinaryCode::span(r, &rows).expect("lengths agree").dim() == rows.len()
}

/// Subcodes of C isomorphic to d(𝓔_n) (orbifold variant).
///
/// If the minimum weight of 𝒞_0 exceeds 4 the only member is d(𝓔_n).
/// Otherwise every other member comes from a partition of the n coordinates
/// into pairs x_i whose pairwise sums lie in 𝒞_0, in one of two families:
/// ⟨d(x_i), e(y_j)⟩ or ⟨d(x_i), e(y_j) + d(w_j)⟩ with y_j = x_j + x_{j+1}
/// and w_j meeting x_j and x_{j+1} in one point each. All partitions, both
/// families and all four w_j per j are tried; candidates must lie in C and
/// pass the chain test, and are deduplicated by canonical basis.
pub fn enumerate_h_orbifold(sc: &StructureCodes) -> Result<HEnumeration> {
    if sc.variant != Variant::Orbifold {
        return Err(Error::Precondition("orbifold variant required".into()));
    }
    let n = sc.n;
    let min_weight = c0_min_weight(&sc.c0)?;
    if min_weight < 4 {
        return Err(Error::Precondition(format!(
            "the minimum weight of C0 is {min_weight}; the orbifold frame analysis needs at least 4"
        )));
    }
    let base = family::even_weight(n).d_map();
    let mut found: BTreeSet<Vec<BinaryWord>> = BTreeSet::new();
    found.insert(base.basis().to_vec());
    let (mut tried, mut distinct) = (0u64, 0u64);
    if min_weight == 4 {
        for pairs in c0_pair_partitions(&sc.c0) {
            let xs: Vec<BinaryWord> = pairs.iter().map(|&(p, q)| BinaryWord::from_support(n, &[p, q])).collect();
            let ys: Vec<BinaryWord> = xs.windows(2).map(|w| w[0].xor(&w[1])).collect();
            let dx: Vec<BinaryWord> = xs.iter().map(BinaryWord::d_map).collect();
            let dx_span = BinaryCode::span(2 * n, &dx)?;

            let first: Vec<BinaryWord> = ys.iter().map(BinaryWord::e_map).collect();
            consider(sc, &xs, &dx, &first, &mut found)?;

            // Each w_j choice changes the j-th generator; collect the
            // distinct generators modulo ⟨d(x_i)⟩ per j and take products.
            let mut per_j: Vec<Vec<BinaryWord>> = Vec::with_capacity(ys.len());
            for j in 0..ys.len() {
                let (a, b) = pairs[j];
                let (c, d) = pairs[j + 1];
                let mut reps: BTreeSet<BinaryWord> = BTreeSet::new();
                for w in [[a, c], [a, d], [b, c], [b, d]] {
                    let g = ys[j].e_map().xor(&BinaryWord::from_support(n, &w).d_map());
                    reps.insert(dx_span.reduced(&g));
                }
                per_j.push(reps.into_iter().collect());
            }
            tried += 4u64.saturating_pow(ys.len() as u32);
            let combos: u64 = per_j.iter().map(|v| v.len() as u64).product();
            if combos > 1 << BRUTE_FORCE_LOG2 {
                return Err(Error::SizeCap {
                    log2_size: combos.ilog2() as usize,
                    cap: BRUTE_FORCE_LOG2,
                });
            }
            distinct += combos;
            let mut choice = vec![0usize; per_j.len()];
            'combos: loop {
                let gs: Vec<BinaryWord> = per_j.iter().zip(&choice).map(|(v, &k)| v[k].clone()).collect();
                consider(sc, &xs, &dx, &gs, &mut found)?;
                for level in 0..choice.len() {
                    choice[level] += 1;
                    if choice[level] < per_j[level].len() {
                        continue 'combos;
                    }
                    choice[level] = 0;
                }
                break;
            }
        }
    }
    let count = BigUint::from(found.len());
    let members = (found.len() as u64 <= MEMBER_CAP).then(|| {
        found
            .iter()
            .map(|b| BinaryCode::span(2 * n, b).expect("lengths agree"))
            .collect()
    });
    Ok(HEnumeration {
        count,
        members,
        w_choices_tried: tried,
        w_choices_distinct: distinct,
    })
}

fn consider(
    sc: &StructureCodes,
    xs: &[BinaryWord],
    dx: &[BinaryWord],
    gs: &[BinaryWord],
    found: &mut BTreeSet<Vec<BinaryWord>>,
) -> Result<()> {
    if !gs.iter().all(|g| sc.c_code.contains(g)) || !chain_test(sc.r, xs, gs) {
        return Ok(());
    }
    let mut rows = dx.to_vec();
    rows.extend_from_slice(gs);
    let e = BinaryCode::span(sc.r, &rows)?;
    found.insert(e.basis().to_vec());
    Ok(())
}

/// Partitions of the coordinates into pairs lying in a single coset of
/// 𝒞_0 (so all pairwise sums are in 𝒞_0), ordered by the partner of the
/// first coordinate. Needs min weight of 𝒞_0 at least 3, which makes the
/// coordinate syndromes distinct, so the partner of coordinate 0
/// determines the partition.
fn c0_pair_partitions(c0: &BinaryCode) -> Vec<Vec<(usize, usize)>> {
    let n = c0.len();
    let s = syndromes(&c0.dual());
    let index: HashMap<&[u64], usize> = s.iter().enumerate().map(|(i, k)| (k.as_slice(), i)).collect();
    let mut out = Vec::new();
    for q in 1..n {
        let shift: Vec<u64> = s[0].iter().zip(&s[q]).map(|(a, b)| a ^ b).collect();
        let mut partner = vec![usize::MAX; n];
        let ok = (0..n).all(|p| {
            let key: Vec<u64> = s[p].iter().zip(&shift).map(|(a, b)| a ^ b).collect();
            match index.get(key.as_slice()) {
                Some(&m) if m != p => {
                    partner[p] = m;
                    true
                }
                _ => false,
            }
        });
        if ok {
            let pairs: Vec<(usize, usize)> = (0..n).filter(|&p| p < partner[p]).map(|p| (p, partner[p])).collect();
            out.push(pairs);
        }
    }
    out
}

/// |Aut(C)| / (2^n·|Aut(𝒞_0)|) for the lattice variant, or
/// |Aut(C)| / (2^{dim 𝒞_0⊥}·|Aut(𝒞_0)|) for the orbifold variant.
pub fn h_index(sc: &StructureCodes, aut_c: &BigUint, aut_c0: &BigUint) -> BigUint {
    let kernel = match sc.variant {
        Variant::Lattice => sc.n,
        Variant::Orbifold => sc.n - sc.c0.dim(),
    };
    aut_c / ((BigUint::one() << kernel) * aut_c0)
}

/// Minimum weight of 𝒞_0, with the zero code counting as unbounded.
fn c0_min_weight(c0: &BinaryCode) -> Result<usize> {
    if c0.dim() == 0 {
        return Ok(usize::MAX);
    }
    c0.min_weight()
}

/// Options for [`frame_report`].
#[derive(Clone, Debug, Default)]
pub struct FrameOptions {
    pub code_id: String,
    /// Also compute Aut(C) and check the count of 𝓗 and the index
    /// |Aut(C):K| against it.
    pub cross_check: bool,
    pub search: SearchConfig,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dims {
    #[serde(rename = "C")]
    pub c: usize,
    #[serde(rename = "D")]
    pub d: usize,
    #[serde(rename = "P")]
    pub p: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutOrders {
    pub z4_total: String,
    pub z4_bar: String,
    pub c0: String,
}

/// Both counts of 𝓗 and both values of |Aut(C):K|.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub aut_c: String,
    pub h_direct: String,
    pub h_index: Option<String>,
    pub index_by_division: String,
    /// Orbifold variant: w-choices tried in the second family, and the
    /// number of distinct generator tuples they gave.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w_choices: Option<(u64, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameReport {
    pub code_id: String,
    pub variant: Variant,
    pub n: usize,
    pub r: usize,
    pub dims: Dims,
    pub holomorphic: bool,
    pub pointwise: Pointwise,
    pub aut: AutOrders,
    pub h_count: String,
    pub k_order: String,
    pub stab_order: String,
    /// |Stab| as 2^{a+b} * 2^k * |Aut(𝒞)‾| * |𝓗|.
    pub stab_factored: String,
    #[serde(rename = "index_autC_K")]
    pub index_aut_c_k: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cross_check: Option<CrossCheck>,
}

fn pow2(k: usize) -> BigUint {
    BigUint::one() << k
}

/// The full frame-stabilizer computation.
///
/// |K| = 2^n·|Aut(𝒞)‾|·|𝓗| (lattice) or 2^{dim 𝒞_0⊥}·|Aut(𝒞)‾|·|𝓗|
/// (orbifold), and |Stab| = 2^{a+b}·|K|. The index |Aut(C):K| comes from
/// |Aut(𝒞_0)|/|Aut(𝒞)‾| where that formula applies, and by division when
/// Aut(C) is computed.
pub fn frame_report(code: &Z4Code, variant: Variant, opts: &FrameOptions) -> Result<FrameReport> {
    let sc = structure_codes(code, variant)?;
    let c0_min = c0_min_weight(&sc.c0)?;
    if variant == Variant::Orbifold && c0_min < 4 {
        return Err(Error::Precondition(format!(
            "the minimum weight of C0 is {c0_min}; the orbifold frame analysis needs at least 4"
        )));
    }
    let p = compute_p(&sc);
    let pw = pointwise_order(&sc);
    let z4 = autsearch::aut_z4_with(code, &opts.search)?;
    let bar = z4.image.order();
    let aut_c0 = autsearch::aut_binary_with(&sc.c0, &opts.search)?.order();

    let h_enum = match variant {
        Variant::Lattice => enumerate_h_lattice(&sc)?,
        Variant::Orbifold => enumerate_h_orbifold(&sc)?,
    };
    let h = h_enum.count.clone();
    let kernel = match variant {
        Variant::Lattice => sc.n,
        Variant::Orbifold => sc.n - sc.c0.dim(),
    };
    let k = pow2(kernel) * &bar * &h;
    let stab = pow2(pw.a + pw.b) * &k;
    let formula_applies = variant == Variant::Lattice || c0_min == 4;
    let mut index = formula_applies.then(|| (&aut_c0 / &bar).to_string());

    // With 𝒞_0 of minimum weight above 4, Aut(C) is the length-2n search
    // the cross-check would need, and 𝓗 is a single code anyway.
    let cross_check = if opts.cross_check && formula_applies {
        let aut_c = autsearch::aut_binary_with(&sc.c_code, &opts.search)?.order();
        let by_division = &aut_c / &k;
        index.get_or_insert_with(|| by_division.to_string());
        Some(CrossCheck {
            h_direct: h.to_string(),
            h_index: Some(h_index(&sc, &aut_c, &aut_c0).to_string()),
            index_by_division: by_division.to_string(),
            aut_c: aut_c.to_string(),
            w_choices: (variant == Variant::Orbifold).then_some((h_enum.w_choices_tried, h_enum.w_choices_distinct)),
        })
    } else {
        None
    };

    Ok(FrameReport {
        code_id: opts.code_id.clone(),
        variant,
        n: sc.n,
        r: sc.r,
        dims: Dims {
            c: sc.c_code.dim(),
            d: sc.d_code.dim(),
            p: p.dim(),
        },
        holomorphic: holomorphic(&sc),
        pointwise: pw,
        aut: AutOrders {
            z4_total: z4.total_order().to_string(),
            z4_bar: bar.to_string(),
            c0: aut_c0.to_string(),
        },
        h_count: h.to_string(),
        k_order: k.to_string(),
        stab_order: stab.to_string(),
        stab_factored: format!("2^{} * 2^{} * {} * {}", pw.a + pw.b, kernel, bar, h),
        index_aut_c_k: index,
        cross_check,
    })
}

impl fmt::Display for FrameReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "code: {}", self.code_id)?;
        writeln!(f, "variant: {}", self.variant)?;
        writeln!(f, "n: {}  r: {}", self.n, self.r)?;
        writeln!(f, "dim C: {}  dim D: {}  dim P: {}", self.dims.c, self.dims.d, self.dims.p)?;
        writeln!(f, "holomorphic: {}", self.holomorphic)?;
        writeln!(
            f,
            "pointwise stabilizer: 2^({}+{})",
            self.pointwise.a, self.pointwise.b
        )?;
        writeln!(
            f,
            "|Aut(Z4 code)|: {}  image in Sym_n: {}  |Aut(C0)|: {}",
            self.aut.z4_total, self.aut.z4_bar, self.aut.c0
        )?;
        writeln!(f, "|H|: {}", self.h_count)?;
        writeln!(f, "|K|: {}", self.k_order)?;
        writeln!(f, "|Stab|: {} = {}", self.stab_order, self.stab_factored)?;
        match &self.index_aut_c_k {
            Some(i) => writeln!(f, "|Aut(C):K|: {i}")?,
            None => writeln!(f, "|Aut(C):K|: not determined")?,
        }
        if let Some(c) = &self.cross_check {
            writeln!(f, "|Aut(C)|: {}", c.aut_c)?;
            writeln!(
                f,
                "|H| direct: {}  by index: {}",
                c.h_direct,
                c.h_index.as_deref().unwrap_or("-")
            )?;
            writeln!(f, "|Aut(C):K| by division: {}", c.index_by_division)?;
            if let Some((tried, distinct)) = c.w_choices {
                writeln!(f, "w-choices tried: {tried}  distinct generator tuples: {distinct}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_code_lattice() {
        let sc = structure_codes_lattice(&Z4Code::zero(3)).unwrap();
        assert_eq!(sc.c_code, family::full(3).d_map());
        assert_eq!(sc.d_code.dim(), 0);
        let one = structure_codes_lattice(&Z4Code::zero(1)).unwrap();
        assert!(!holomorphic(&one));
    }

    #[test]
    fn zero_word_lifts_with_order_two() {
        let sc = structure_codes_lattice(&Z4Code::zero(4)).unwrap();
        let z = BinaryWord::zeros(8);
        assert_eq!(lift_order(&sc, &z).unwrap(), LiftOrder::Two);
        assert!(lifts_commute(&sc, &z, &z).unwrap());
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial_odd(16), BigUint::from(2027025u32));
        assert_eq!(double_factorial_odd(2), BigUint::one());
    }

    #[test]
    fn variant_round_trip() {
        for v in [Variant::Lattice, Variant::Orbifold] {
            assert_eq!(v.to_string().parse::<Variant>().unwrap(), v);
        }
        assert!("torus".parse::<Variant>().is_err());
    }
}
