//! Permutation groups by base and strong generating set.
//!
//! Orders are exact big integers. Construction is the deterministic
//! Schreier–Sims algorithm: every Schreier generator is sifted, so the
//! result is a verified BSGS with no probabilistic step.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::z4::Z4Word;

/// A permutation of {0, …, n−1}; displayed and serialized 1-indexed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// Checks that `images` is a bijection on {0, …, n−1}.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidParameters(format!("not a permutation of degree {n}: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(Error::InvalidParameters(format!("point out of range for degree {n}")));
                }
                images[a] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// First `self`, then `other`: i ↦ other(self(i)).
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, j)| i != *j).map(|(i, _)| i)
    }

    /// 1-indexed image list.
    pub fn to_one_indexed(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    pub fn from_one_indexed(images: &[usize]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidParameters("1-indexed image list contains 0".into()));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.to_one_indexed())
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, 1-indexed; "()" for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_one_indexed().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        Perm::from_one_indexed(&v).map_err(serde::de::Error::custom)
    }
}

/// A coordinate permutation combined with sign changes, acting on Z4^n by
/// (g·x)_{perm(i)} = sign_i · x_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub perm: Perm,
    /// `true` where the coordinate is negated (sign −1).
    pub negate: Vec<bool>,
}

impl SignedPerm {
    pub fn new(perm: Perm, negate: Vec<bool>) -> Self {
        assert_eq!(perm.degree(), negate.len());
        SignedPerm { perm, negate }
    }

    pub fn signs_only(negate: Vec<bool>) -> Self {
        SignedPerm {
            perm: Perm::identity(negate.len()),
            negate,
        }
    }

    pub fn apply(&self, x: &Z4Word) -> Z4Word {
        let mut out = vec![0u8; x.len()];
        for (i, &d) in x.digits().iter().enumerate() {
            out[self.perm.apply(i)] = if self.negate[i] { (4 - d) % 4 } else { d };
        }
        Z4Word::new(out)
    }
}

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Indices into `strong` of the generators fixing every earlier base point.
    gens: Vec<usize>,
    orbit: Vec<usize>,
    /// transversal[p] maps the base point to p, for p in the orbit.
    transversal: Vec<Option<Perm>>,
}

/// A permutation group with a base and strong generating set.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Schreier–Sims from an arbitrary generating set.
    pub fn schreier_sims(degree: usize, generators: &[Perm]) -> Result<Self> {
        Self::with_initial_base(degree, generators, &[])
    }

    /// Schreier–Sims with a prescribed prefix of the base.
    pub fn with_initial_base(degree: usize, generators: &[Perm], base_prefix: &[usize]) -> Result<Self> {
        for g in generators {
            if g.degree() != degree {
                return Err(Error::LengthMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut strong: Vec<Perm> = Vec::new();
        for g in generators {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        let mut base: Vec<usize> = Vec::new();
        for &b in base_prefix {
            if b >= degree {
                return Err(Error::InvalidParameters(format!("base point {b} out of range")));
            }
            if !base.contains(&b) {
                base.push(b);
            }
        }
        for g in &strong {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.first_moved().unwrap());
            }
        }
        let mut group = PermGroup {
            degree,
            strong,
            levels: Vec::new(),
        };
        for &b in &base {
            group.levels.push(Level {
                base_point: b,
                gens: Vec::new(),
                orbit: Vec::new(),
                transversal: Vec::new(),
            });
        }
        for l in 0..group.levels.len() {
            group.rebuild_level(l);
        }
        group.complete();
        group.trim_base(base.len().min(base_prefix.len()));
        Ok(group)
    }

    /// Generators in `strong` fixing base points 0..l.
    fn rebuild_level(&mut self, l: usize) {
        let fixed: Vec<usize> = self.levels[..l].iter().map(|lv| lv.base_point).collect();
        let gens: Vec<usize> = (0..self.strong.len())
            .filter(|&k| fixed.iter().all(|&b| self.strong[k].apply(b) == b))
            .collect();
        let bp = self.levels[l].base_point;
        let mut transversal: Vec<Option<Perm>> = vec![None; self.degree];
        transversal[bp] = Some(Perm::identity(self.degree));
        let mut orbit = vec![bp];
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            head += 1;
            for &k in &gens {
                let q = self.strong[k].apply(p);
                if transversal[q].is_none() {
                    let u = transversal[p].as_ref().unwrap().then(&self.strong[k]);
                    transversal[q] = Some(u);
                    orbit.push(q);
                }
            }
        }
        let level = &mut self.levels[l];
        level.gens = gens;
        level.orbit = orbit;
        level.transversal = transversal;
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// where sifting stopped (`levels.len()` if it went all the way).
    fn strip(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let beta = g.apply(level.base_point);
            match &level.transversal[beta] {
                Some(u) => g = g.then(&u.inverse()),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        while i >= 0 {
            let l = i as usize;
            let mut found: Option<(Perm, usize)> = None;
            'search: for &beta in &self.levels[l].orbit {
                let u_beta = self.levels[l].transversal[beta].as_ref().unwrap();
                for &k in &self.levels[l].gens {
                    let s = &self.strong[k];
                    let img = s.apply(beta);
                    let u_img = self.levels[l].transversal[img].as_ref().unwrap();
                    let schreier = u_beta.then(s).then(&u_img.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip(schreier, l + 1);
                    if j < self.levels.len() || !h.is_identity() {
                        found = Some((h, j));
                        break 'search;
                    }
                }
            }
            match found {
                None => i -= 1,
                Some((h, j)) => {
                    if j == self.levels.len() {
                        let moved = h.first_moved().expect("nonidentity residue");
                        self.levels.push(Level {
                            base_point: moved,
                            gens: Vec::new(),
                            orbit: Vec::new(),
                            transversal: Vec::new(),
                        });
                    }
                    self.strong.push(h);
                    for m in l + 1..=j {
                        self.rebuild_level(m);
                    }
                    i = j as isize;
                }
            }
        }
    }

    /// Drops trailing levels with trivial basic orbits, keeping the first
    /// `keep` levels (a prescribed base prefix).
    fn trim_base(&mut self, keep: usize) {
        while self.levels.len() > keep && self.levels.last().is_some_and(|lv| lv.orbit.len() == 1) {
            self.levels.pop();
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// The basic orbit at `level` (orbit of the level's base point under the
    /// pointwise stabilizer of the earlier base points).
    pub fn basic_orbit(&self, level: usize) -> &[usize] {
        &self.levels[level].orbit
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip(p.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }

    /// |self : sub|, checking that `sub` is a subgroup first.
    pub fn index(&self, sub: &PermGroup) -> Result<BigUint> {
        if sub.degree != self.degree {
            return Err(Error::LengthMismatch {
                expected: self.degree,
                found: sub.degree,
            });
        }
        if let Some(k) = sub.strong.iter().position(|g| !self.contains(g)) {
            return Err(Error::NotSubgroup(k));
        }
        Ok(self.order() / sub.order())
    }

    /// The same group with a BSGS whose base begins with `prefix`.
    pub fn with_base(&self, prefix: &[usize]) -> PermGroup {
        Self::with_initial_base(self.degree, &self.strong, prefix).expect("degree is consistent")
    }

    /// The stabilizer of a point.
    pub fn stabilizer(&self, point: usize) -> PermGroup {
        if self.strong.is_empty() {
            return self.clone();
        }
        let based = self.with_base(&[point]);
        let gens: Vec<Perm> = based.strong.iter().filter(|g| g.apply(point) == point).cloned().collect();
        PermGroup::schreier_sims(self.degree, &gens).expect("degree is consistent")
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    /// Orbits of the whole group on {0, …, n−1}, each sorted, ordered by
    /// their smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.strong)
    }

    /// Orbits of the pointwise stabilizer of the first `level` base points.
    pub fn stabilizer_orbits(&self, level: usize) -> Vec<Vec<usize>> {
        let fixed: Vec<usize> = self.levels[..level.min(self.levels.len())]
            .iter()
            .map(|l| l.base_point)
            .collect();
        let gens: Vec<Perm> = self
            .strong
            .iter()
            .filter(|g| fixed.iter().all(|&b| g.apply(b) == b))
            .cloned()
            .collect();
        orbits_of(self.degree, &gens)
    }

    /// Whether some element maps base[i] to images[i] for every i, where
    /// the images cover a prefix of the base.
    pub fn base_prefix_extends(&self, images: &[usize]) -> bool {
        debug_assert!(images.len() <= self.levels.len());
        let mut g_inv = Perm::identity(self.degree);
        for (l, &r) in images.iter().enumerate() {
            let y = g_inv.apply(r);
            match &self.levels[l].transversal[y] {
                Some(u) => {
                    // new g = u then g; its inverse is g_inv then u^{-1}
                    g_inv = g_inv.then(&u.inverse());
                }
                None => return false,
            }
        }
        true
    }

    /// Every element, for cross-checks on small groups.
    pub fn elements(&self) -> Vec<Perm> {
        let mut out = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for &p in &level.orbit {
                let u = level.transversal[p].as_ref().unwrap();
                for g in &out {
                    next.push(g.then(u));
                }
            }
            out = next;
        }
        out
    }
}

/// Orbits of the group generated by `gens`, each sorted, ordered by
/// smallest point.
pub fn orbits_of(degree: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..degree).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for i in 0..degree {
            let a = find(&mut parent, i);
            let b = find(&mut parent, g.apply(i));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..degree {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

/// The group 2 ≀ G: independent swaps inside each pair together with the
/// action of `top` permuting the pairs (first point to first point).
pub fn wreath_2(pairs: &[(usize, usize)], top: &PermGroup) -> Result<PermGroup> {
    let n = pairs.len();
    if top.degree() != n {
        return Err(Error::LengthMismatch {
            expected: n,
            found: top.degree(),
        });
    }
    let degree = 2 * n;
    let mut seen = vec![false; degree];
    for &(a, b) in pairs {
        for p in [a, b] {
            if p >= degree || seen[p] {
                return Err(Error::InvalidParameters(format!(
                    "pairs must partition 0..{degree}; point {p} repeated or out of range"
                )));
            }
            seen[p] = true;
        }
    }
    let mut gens = Vec::new();
    for &(a, b) in pairs {
        gens.push(Perm::from_cycles(degree, &[&[a, b]])?);
    }
    for g in top.strong_generators() {
        let mut images = vec![0; degree];
        for (k, &(a, b)) in pairs.iter().enumerate() {
            let (ta, tb) = pairs[g.apply(k)];
            images[a] = ta;
            images[b] = tb;
        }
        gens.push(Perm::from_images(images)?);
    }
    PermGroup::schreier_sims(degree, &gens)
}

/// The image of a set of signed permutations in Sym_n.
pub fn project(degree: usize, signed: &[SignedPerm]) -> Result<PermGroup> {
    let perms: Vec<Perm> = signed.iter().map(|s| s.perm.clone()).collect();
    PermGroup::schreier_sims(degree, &perms)
}

/// Sym_n from a transposition and an n-cycle.
pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let t = Perm::from_cycles(n, &[&[0, 1]]).unwrap();
    let cycle: Vec<usize> = (0..n).collect();
    let c = Perm::from_cycles(n, &[&cycle]).unwrap();
    PermGroup::schreier_sims(n, &[t, c]).unwrap()
}
