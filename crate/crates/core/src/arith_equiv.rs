//! Arithmetic equivalence of number fields.
//!
//! Two number fields have the same Dedekind zeta function exactly when their
//! unramified primes split the same way. For `K = Q(α)` with minimal
//! polynomial `f`, the splitting type at a prime `p` not dividing the
//! discriminant of `f` is the multiset of degrees of the irreducible factors of
//! `f mod p`. Agreement of those multisets up to a bound is a fingerprint, not
//! a proof, of arithmetic equivalence.
//!
//! On the group side, [`gassmann_check`] verifies that two subgroups meet every
//! conjugacy class of a permutation group in equally many elements.

use std::collections::{HashMap, HashSet};

use crate::fp_poly::{primes_up_to, PrimeField};
use crate::{par, Error, Result};

/// Largest prime accepted by [`factor_degrees_mod_p`].
pub const MAX_PRIME: u64 = 1_000_000_000;
/// Largest bound accepted by [`splitting_types_equal`] and
/// [`partial_dedekind_zeta`].
pub const MAX_BOUND: u64 = 1_000_000;
/// Default prime bound for comparisons.
pub const DEFAULT_BOUND: u64 = 10_000;

/// `x⁷ − 7x + 3`, one of Perlis's degree-7 arithmetically equivalent pair.
pub const PERLIS_K: [i64; 8] = [1, 0, 0, 0, 0, 0, -7, 3];
/// `x⁷ + 14x⁴ − 42x² − 21x + 9`, the partner of [`PERLIS_K`].
pub const PERLIS_L: [i64; 8] = [1, 0, 0, 14, 0, -42, -21, 9];
/// `x⁸ − 18`, Komatsu's pair with isomorphic adele rings.
pub const KOMATSU_K: [i64; 9] = [1, 0, 0, 0, 0, 0, 0, 0, -18];
/// `x⁸ − 288`.
pub const KOMATSU_L: [i64; 9] = [1, 0, 0, 0, 0, 0, 0, 0, -288];

/// A monic integer polynomial standing for `K = Q(α)`.
///
/// Irreducibility over `Q` is the caller's responsibility and is not checked.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberFieldPoly {
    /// Low-to-high.
    coeffs: Vec<i64>,
}

impl NumberFieldPoly {
    /// From coefficients high-to-low, e.g. `[1, 0, 1]` for `x² + 1`.
    pub fn from_high_to_low(coeffs: &[i64]) -> Result<Self> {
        let trimmed: Vec<i64> = coeffs.iter().copied().skip_while(|&c| c == 0).collect();
        if trimmed.len() < 2 {
            return Err(Error::domain("polynomial must have degree at least 1"));
        }
        if trimmed[0] != 1 {
            return Err(Error::domain("polynomial must be monic"));
        }
        Ok(NumberFieldPoly {
            coeffs: trimmed.into_iter().rev().collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients low-to-high.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitStatus {
    Clean,
    RamifiedOrSingular,
}

/// Factorization pattern of `f mod p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplittingType {
    pub p: u64,
    pub status: SplitStatus,
    /// Ascending factor degrees; empty unless clean.
    pub degrees: Vec<usize>,
}

impl SplittingType {
    pub fn is_clean(&self) -> bool {
        self.status == SplitStatus::Clean
    }
}

/// Splitting type of `f` at `p` by distinct-degree factorization.
///
/// Primes where `gcd(f, f') mod p` is non-constant are reported as
/// ramified-or-singular; this also catches primes dividing the index of
/// `Z[α]`, whose degree data cannot be read off `f` alone.
pub fn factor_degrees_mod_p(f: &NumberFieldPoly, p: u64) -> Result<SplittingType> {
    if p > MAX_PRIME {
        return Err(Error::size(format!("prime {p} exceeds {MAX_PRIME}")));
    }
    let fp = PrimeField::new(p)?;
    Ok(splitting_type_in(f, &fp))
}

fn splitting_type_in(f: &NumberFieldPoly, fp: &PrimeField) -> SplittingType {
    let reduced = fp.from_integers(&f.coeffs);
    if !fp.is_separable(&reduced) {
        return SplittingType {
            p: fp.p(),
            status: SplitStatus::RamifiedOrSingular,
            degrees: Vec::new(),
        };
    }
    SplittingType {
        p: fp.p(),
        status: SplitStatus::Clean,
        degrees: fp.factor_degrees(&reduced),
    }
}

/// Splitting types at every prime up to `bound`, ascending.
pub fn splitting_types(f: &NumberFieldPoly, bound: u64) -> Result<Vec<SplittingType>> {
    if bound > MAX_BOUND {
        return Err(Error::size(format!("bound {bound} exceeds {MAX_BOUND}")));
    }
    let primes = primes_up_to(bound);
    Ok(par::map_slice(&primes, |&p| {
        splitting_type_in(f, &PrimeField::new(p).expect("sieved prime"))
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitComparison {
    pub agree: bool,
    pub first_mismatch: Option<u64>,
    /// Primes where either polynomial is ramified or singular.
    pub skipped: Vec<u64>,
    /// Number of mutually clean primes compared.
    pub compared: usize,
}

/// Compares splitting types of `f` and `g` at every mutually clean prime up
/// to `bound`.
pub fn splitting_types_equal(
    f: &NumberFieldPoly,
    g: &NumberFieldPoly,
    bound: u64,
) -> Result<SplitComparison> {
    if f.degree() != g.degree() {
        return Ok(SplitComparison {
            agree: false,
            first_mismatch: None,
            skipped: Vec::new(),
            compared: 0,
        });
    }
    let tf = splitting_types(f, bound)?;
    let tg = splitting_types(g, bound)?;
    let mut skipped = Vec::new();
    let mut first_mismatch = None;
    let mut compared = 0;
    for (a, b) in tf.iter().zip(&tg) {
        if !a.is_clean() || !b.is_clean() {
            skipped.push(a.p);
            continue;
        }
        compared += 1;
        if a.degrees != b.degrees && first_mismatch.is_none() {
            first_mismatch = Some(a.p);
        }
    }
    Ok(SplitComparison {
        agree: first_mismatch.is_none(),
        first_mismatch,
        skipped,
        compared,
    })
}

/// Euler factor `Π_{d ∈ degrees} (1 − p^{−ds})^{−1}`.
pub fn euler_factor(p: u64, degrees: &[usize], s: f64) -> f64 {
    degrees
        .iter()
        .map(|&d| 1.0 / (1.0 - (p as f64).powf(-(d as f64) * s)))
        .product()
}

/// Truncated Euler product `Π_{p ≤ bound, clean} Π_d (1 − p^{−ds})^{−1}`.
///
/// Ramified and singular primes are omitted, so this is not the full Dedekind
/// zeta even in the limit. Factors are multiplied in ascending prime order.
pub fn partial_dedekind_zeta(f: &NumberFieldPoly, s: f64, bound: u64) -> Result<f64> {
    if !s.is_finite() || s <= 1.0 {
        return Err(Error::domain(format!("Euler product needs real s > 1, got {s}")));
    }
    let types = splitting_types(f, bound)?;
    Ok(types
        .iter()
        .filter(|t| t.is_clean())
        .map(|t| euler_factor(t.p, &t.degrees, s))
        .fold(1.0, |acc, x| acc * x))
}

// ---------------------------------------------------------------------------
// Permutation groups

/// Largest domain a [`PermGroup`] may act on.
pub const MAX_DOMAIN: usize = 16;
/// Largest group order [`group_closure`] will enumerate.
pub const MAX_GROUP_ORDER: usize = 100_000;

/// A permutation of `{0, …, n−1}` stored as its image list.
///
/// Ordering is lexicographic on the image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > MAX_DOMAIN {
            return Err(Error::size(format!("domain size {n} exceeds {MAX_DOMAIN}")));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::domain(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images.into_iter().map(|i| i as u8).collect()))
    }

    /// Builds a permutation of `{0, …, n−1}` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(Error::domain(format!("cycle point out of range 0..{n}")));
                }
                images[a] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// `g ∘ self ∘ g⁻¹`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.compose(self).compose(&g.inverse())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j as usize)
    }
}

/// A finite permutation group with its elements enumerated in sorted order.
#[derive(Debug, Clone)]
pub struct PermGroup {
    domain_size: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

/// Closes `generators` under composition (breadth-first).
pub fn group_closure(domain_size: usize, generators: Vec<Permutation>) -> Result<PermGroup> {
    if domain_size > MAX_DOMAIN {
        return Err(Error::size(format!(
            "domain size {domain_size} exceeds {MAX_DOMAIN}"
        )));
    }
    if let Some(g) = generators.iter().find(|g| g.degree() != domain_size) {
        return Err(Error::domain(format!(
            "generator {:?} does not act on {domain_size} points",
            g.0
        )));
    }
    let id = Permutation::identity(domain_size);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for e in &frontier {
            for g in &generators {
                let h = e.compose(g);
                if !seen.contains(&h) {
                    if seen.len() >= MAX_GROUP_ORDER {
                        return Err(Error::size(format!(
                            "group order exceeds {MAX_GROUP_ORDER}"
                        )));
                    }
                    seen.insert(h.clone());
                    next.push(h);
                }
            }
        }
        frontier = next;
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort();
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), i))
        .collect();
    Ok(PermGroup {
        domain_size,
        generators,
        elements,
        index,
    })
}

impl PermGroup {
    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in lexicographic order; the identity is first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    /// Elements fixing a set of points setwise.
    pub fn setwise_stabilizer(&self, points: &[usize]) -> Subgroup {
        let set: HashSet<usize> = points.iter().copied().collect();
        let members = (0..self.order())
            .filter(|&i| set.iter().all(|&x| set.contains(&self.elements[i].apply(x))))
            .collect();
        Subgroup { members }
    }
}

/// A subgroup, stored as sorted indices into its parent's element list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    /// From an explicit element list; checks membership and closure.
    pub fn from_elements(parent: &PermGroup, elements: &[Permutation]) -> Result<Self> {
        let mut members = Vec::with_capacity(elements.len());
        for e in elements {
            members.push(parent.index_of(e).ok_or_else(|| {
                Error::domain(format!("{:?} is not an element of the group", e.0))
            })?);
        }
        members.sort_unstable();
        members.dedup();
        let set: HashSet<usize> = members.iter().copied().collect();
        if !set.contains(&0) || !parent.elements[0].is_identity() {
            return Err(Error::domain("subgroup must contain the identity"));
        }
        for &a in &members {
            for &b in &members {
                let c = parent.elements[a].compose(&parent.elements[b]);
                if !set.contains(&parent.index[&c]) {
                    return Err(Error::domain("element list is not closed under composition"));
                }
            }
        }
        Ok(Subgroup { members })
    }

    /// The subgroup generated by `generators`, which must lie in `parent`.
    pub fn from_generators(parent: &PermGroup, generators: Vec<Permutation>) -> Result<Self> {
        let closure = group_closure(parent.domain_size, generators)?;
        let mut members = Vec::with_capacity(closure.order());
        for e in closure.elements() {
            members.push(parent.index_of(e).ok_or_else(|| {
                Error::domain(format!("{:?} is not an element of the group", e.0))
            })?);
        }
        members.sort_unstable();
        Ok(Subgroup { members })
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Sorted indices into the parent group.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn elements<'g>(&self, parent: &'g PermGroup) -> Vec<&'g Permutation> {
        self.members.iter().map(|&i| &parent.elements[i]).collect()
    }
}

/// Conjugacy classes as sorted index lists, ordered by smallest member.
pub fn conjugacy_classes(group: &PermGroup) -> Vec<Vec<usize>> {
    let n = group.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let gen_pairs: Vec<(Permutation, Permutation)> = group
        .generators
        .iter()
        .map(|g| (g.clone(), g.inverse()))
        .collect();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut class = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let x = &group.elements[i];
            for (g, g_inv) in &gen_pairs {
                let y = g.compose(x).compose(g_inv);
                let j = group.index[&y];
                if class_of[j] == usize::MAX {
                    class_of[j] = id;
                    class.push(j);
                    stack.push(j);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassIntersection {
    /// Smallest member of the class (index into the parent group).
    pub representative: usize,
    pub class_size: usize,
    pub in_first: usize,
    pub in_second: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GassmannReport {
    /// Every conjugacy class meets both subgroups equally often.
    pub equivalent: bool,
    /// Some `g` has `g H1 g⁻¹ = H2`.
    pub conjugate: bool,
    pub table: Vec<ClassIntersection>,
}

/// Gassmann's criterion for `(G, H1, H2)`, plus an exhaustive conjugacy test.
pub fn gassmann_check(group: &PermGroup, h1: &Subgroup, h2: &Subgroup) -> GassmannReport {
    let classes = conjugacy_classes(group);
    let s1: HashSet<usize> = h1.members.iter().copied().collect();
    let s2: HashSet<usize> = h2.members.iter().copied().collect();
    let table: Vec<ClassIntersection> = classes
        .iter()
        .map(|c| ClassIntersection {
            representative: c[0],
            class_size: c.len(),
            in_first: c.iter().filter(|i| s1.contains(i)).count(),
            in_second: c.iter().filter(|i| s2.contains(i)).count(),
        })
        .collect();
    let equivalent = table.iter().all(|row| row.in_first == row.in_second);
    let conjugate = h1.order() == h2.order()
        && par::any_slice(&group.elements, |g| {
            let g_inv = g.inverse();
            h1.members.iter().all(|&i| {
                let c = g.compose(&group.elements[i]).compose(&g_inv);
                s2.contains(&group.index[&c])
            })
        });
    GassmannReport {
        equivalent,
        conjugate,
        table,
    }
}

/// `GL(3, 2)` acting on the seven nonzero vectors of `F_2³`, with the
/// stabilizer of a vector and the stabilizer of a plane.
///
/// A nonzero vector with bits `(v₀, v₁, v₂)` is the point `v − 1`, where `v`
/// is read as the integer `v₀ + 2v₁ + 4v₂`.
pub fn gl32_demo() -> Result<(PermGroup, Subgroup, Subgroup)> {
    // columns of each matrix, as 3-bit integers
    let transvection = [0b001, 0b011, 0b100]; // e₂ ↦ e₁ + e₂
    let cycle = [0b010, 0b100, 0b001]; // e₁ → e₂ → e₃ → e₁
    let as_perm = |cols: [usize; 3]| {
        let images = (1..8usize)
            .map(|v| {
                let w = (0..3)
                    .filter(|b| v >> b & 1 == 1)
                    .fold(0, |acc, b| acc ^ cols[b]);
                w - 1
            })
            .collect();
        Permutation::from_images(images)
    };
    let group = group_closure(7, vec![as_perm(transvection)?, as_perm(cycle)?])?;
    let vector_stabilizer = group.setwise_stabilizer(&[0]); // e₁
    // plane v₀ = 0: vectors 2, 4, 6
    let plane_stabilizer = group.setwise_stabilizer(&[1, 3, 5]);
    Ok((group, vector_stabilizer, plane_stabilizer))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> NumberFieldPoly {
        NumberFieldPoly::from_high_to_low(c).unwrap()
    }

    #[test]
    fn x2_plus_1() {
        let f = poly(&[1, 0, 1]);
        assert_eq!(factor_degrees_mod_p(&f, 5).unwrap().degrees, vec![1, 1]);
        assert_eq!(factor_degrees_mod_p(&f, 7).unwrap().degrees, vec![2]);
        let at2 = factor_degrees_mod_p(&f, 2).unwrap();
        assert_eq!(at2.status, SplitStatus::RamifiedOrSingular);
        assert!(at2.degrees.is_empty());
        assert!(matches!(factor_degrees_mod_p(&f, 9), Err(Error::Domain(_))));
    }

    #[test]
    fn brute_force_single_prime() {
        // Perlis polynomials at p = 5: count roots by scanning, and compare
        // the number of linear factors with the degree multiset.
        for c in [&PERLIS_K[..], &PERLIS_L[..]] {
            let f = poly(c);
            let t = factor_degrees_mod_p(&f, 5).unwrap();
            assert!(t.is_clean());
            assert_eq!(t.degrees.iter().sum::<usize>(), 7);
            let roots = (0..5i64)
                .filter(|&x| {
                    f.coeffs().iter().rev().fold(0, |acc, &a| (acc * x + a).rem_euclid(5)) == 0
                })
                .count();
            assert_eq!(t.degrees.iter().filter(|&&d| d == 1).count(), roots);
        }
        let a = factor_degrees_mod_p(&poly(&PERLIS_K), 5).unwrap();
        let b = factor_degrees_mod_p(&poly(&PERLIS_L), 5).unwrap();
        assert_eq!(a.degrees, b.degrees);
    }

    #[test]
    fn negative_control() {
        let r = splitting_types_equal(&poly(&PERLIS_K), &poly(&[1, 0, 0, 0, 0, 0, 0, -2]), 100)
            .unwrap();
        assert!(!r.agree);
        assert!(r.first_mismatch.is_some());
        let d = splitting_types_equal(&poly(&[1, 0, 1]), &poly(&[1, 0, 0, 1]), 100).unwrap();
        assert!(!d.agree);
    }

    #[test]
    fn dedekind_of_q_is_riemann_product() {
        let f = poly(&[1, 0]);
        let v = partial_dedekind_zeta(&f, 2.0, 100_000).unwrap();
        let z2 = std::f64::consts::PI.powi(2) / 6.0;
        assert!((v - z2).abs() < 2.0 / 100_000.0);
        assert!(partial_dedekind_zeta(&f, 1.0, 10).is_err());
    }

    #[test]
    fn closure_sizes() {
        assert_eq!(group_closure(3, vec![]).unwrap().order(), 1);
        let s3 = group_closure(
            3,
            vec![
                Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(s3.order(), 6);
        let sizes: Vec<usize> = conjugacy_classes(&s3).iter().map(Vec::len).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        // S_9 is too big
        let big = group_closure(
            9,
            vec![
                Permutation::from_cycles(9, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(9, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8]]).unwrap(),
            ],
        );
        assert!(matches!(big, Err(Error::Size(_))));
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
    }

    #[test]
    fn gl32_classes_by_brute_force() {
        let (g, h1, h2) = gl32_demo().unwrap();
        assert_eq!(g.order(), 168);
        assert_eq!(h1.order(), 24);
        assert_eq!(h2.order(), 24);
        // Brute-force orbits under conjugation by every element.
        let mut brute: Vec<Vec<usize>> = Vec::new();
        let mut done = vec![false; g.order()];
        for i in 0..g.order() {
            if done[i] {
                continue;
            }
            let mut orbit: Vec<usize> = g
                .elements()
                .iter()
                .map(|x| g.index_of(&g.elements()[i].conjugate_by(x)).unwrap())
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            orbit.iter().for_each(|&j| done[j] = true);
            brute.push(orbit);
        }
        assert_eq!(conjugacy_classes(&g), brute);
        let sizes: Vec<usize> = brute.iter().map(Vec::len).collect();
        let mut sorted = sizes.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 21, 24, 24, 42, 56]);
    }

    #[test]
    fn gl32_gassmann_triple() {
        let (g, h1, h2) = gl32_demo().unwrap();
        let r = gassmann_check(&g, &h1, &h2);
        assert!(r.equivalent);
        assert!(!r.conjugate);
        let same = gassmann_check(&g, &h1, &h1);
        assert!(same.equivalent && same.conjugate);
    }

    #[test]
    fn s3_non_equivalent() {
        let s3 = group_closure(
            3,
            vec![
                Permutation::from_cycles(3, &[&[0, 1]]).unwrap(),
                Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            ],
        )
        .unwrap();
        let h1 = Subgroup::from_generators(&s3, vec![Permutation::from_cycles(3, &[&[0, 1]]).unwrap()])
            .unwrap();
        let h2 =
            Subgroup::from_generators(&s3, vec![Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()])
                .unwrap();
        let r = gassmann_check(&s3, &h1, &h2);
        assert!(!r.equivalent);
        assert!(!r.conjugate);
        // explicit element list must be closed
        let bad = Subgroup::from_elements(
            &s3,
            &[Permutation::identity(3), Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap()],
        );
        assert!(bad.is_err());
    }
}
