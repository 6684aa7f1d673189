//! Point counting on odd-degree hyperelliptic curves `y² = f(x)` over `F_p`
//! and its extensions, and exact recovery of the zeta numerator `P(T)`.
//!
//! The zeta function `exp(Σ N_n T^n / n)` of a genus-`g` curve over `F_q` is
//! `P(T) / ((1 − T)(1 − qT))` with `P` an integer polynomial of degree `2g`;
//! the counts `N_1, …, N_{2g}` determine it, and it determines every `N_n`.

use std::sync::atomic::{AtomicU8, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::fp_poly::{is_prime, Poly, PrimeField};
use crate::{par, Error, Result};

/// Largest field size that will be enumerated.
pub const ENUMERATION_CAP: u64 = 10_000_000;

/// `y² = x⁵ + x³ + x² − x − 1` over `F_3`, high-to-low.
pub const HOWE_PLUS: [i64; 6] = [1, 0, 1, 1, -1, -1];
/// `y² = x⁵ − x³ + x² − x − 1` over `F_3`; same zeta function as `HOWE_PLUS`.
pub const HOWE_MINUS: [i64; 6] = [1, 0, -1, 1, -1, -1];

/// The finite field `F_{p^n} = F_p[x] / (modulus)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    base: PrimeField,
    degree: usize,
    /// Monic, low-to-high, degree `n`.
    modulus: Poly,
    order: u64,
}

/// An element of a [`FiniteField`], as coefficients low-to-high in the
/// power basis of the modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldElement<'a> {
    field: &'a FiniteField,
    coeffs: Vec<u64>,
}

fn checked_power(p: u64, n: usize) -> Option<u64> {
    let e = u32::try_from(n).ok()?;
    p.checked_pow(e)
}

/// Builds `F_{p^n}` with a deterministic modulus.
///
/// The modulus is the monic irreducible `x^n + c_{n-1}x^{n-1} + … + c_0`
/// minimising `Σ c_i p^i`, i.e. coefficients are compared from the highest
/// non-leading degree down. For `n = 1` this gives the modulus `x`.
pub fn make_extension_field(p: u64, n: usize) -> Result<FiniteField> {
    if n == 0 {
        return Err(Error::domain("extension degree must be at least 1"));
    }
    if !is_prime(p) {
        return Err(Error::domain(format!("{p} is not prime")));
    }
    let order = enumerable_order(p, n)?;
    let base = PrimeField::new(p)?;
    for code in 0..order {
        let mut modulus = digits(code, p, n);
        modulus.push(1);
        if base.is_irreducible(&modulus) {
            return Ok(FiniteField {
                base,
                degree: n,
                modulus,
                order,
            });
        }
    }
    Err(Error::Internal(format!(
        "no irreducible polynomial of degree {n} over F_{p}"
    )))
}

/// Base-`p` digits of `code`, least significant first, padded to `len`.
fn digits(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len + 1);
    for _ in 0..len {
        out.push(code % p);
        code /= p;
    }
    out
}

impl FiniteField {
    pub fn characteristic(&self) -> u64 {
        self.base.p()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of elements `p^n`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Modulus coefficients, low-to-high (monic).
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement<'_> {
        FieldElement {
            field: self,
            coeffs: vec![0; self.degree],
        }
    }

    /// Element with the given base-`p` index (`Σ c_i p^i`), `index < p^n`.
    pub fn element(&self, index: u64) -> FieldElement<'_> {
        assert!(index < self.order, "index out of range");
        FieldElement {
            field: self,
            coeffs: digits(index, self.base.p(), self.degree),
        }
    }

    pub fn from_integer(&self, c: i64) -> FieldElement<'_> {
        let mut e = self.zero();
        e.coeffs[0] = c.rem_euclid(self.base.p() as i64) as u64;
        e
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement<'_>> + '_ {
        (0..self.order).map(move |i| self.element(i))
    }

    fn mul_raw(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let fp = &self.base;
        let n = self.degree;
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = fp.add(prod[i + j], fp.mul(x, y));
            }
        }
        // reduce with x^n = -(c_0 + … + c_{n-1} x^{n-1})
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (j, &m) in self.modulus[..n].iter().enumerate() {
                prod[k - n + j] = fp.sub(prod[k - n + j], fp.mul(c, m));
            }
        }
        prod.truncate(n);
        prod
    }

    fn pow_raw(&self, a: &[u64], mut exp: u64) -> Vec<u64> {
        let mut acc = vec![0u64; self.degree];
        acc[0] = 1;
        let mut base = a.to_vec();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_raw(&acc, &base);
            }
            exp >>= 1;
            if exp > 0 {
                base = self.mul_raw(&base, &base);
            }
        }
        acc
    }

    /// Quadratic character `a^{(q−1)/2}` as −1, 0 or 1. Needs odd `p`.
    fn chi2_raw(&self, a: &[u64]) -> i8 {
        if a.iter().all(|&c| c == 0) {
            return 0;
        }
        let r = self.pow_raw(a, (self.order - 1) / 2);
        let one = r[0] == 1 && r[1..].iter().all(|&c| c == 0);
        if one {
            1
        } else {
            debug_assert!(r[0] == self.base.p() - 1 && r[1..].iter().all(|&c| c == 0));
            -1
        }
    }

    /// Inverse of [`FiniteField::element`].
    fn index_of(&self, a: &[u64]) -> u64 {
        a.iter().rev().fold(0, |acc, &c| acc * self.base.p() + c)
    }

    /// `|{y : y² = a}|` for every element `a`, by index. Every nonzero square
    /// has exactly two roots since `p` is odd.
    fn square_root_counts(&self) -> Vec<AtomicU8> {
        let table: Vec<AtomicU8> = (0..self.order).map(|_| AtomicU8::new(0)).collect();
        table[0].store(1, Ordering::Relaxed);
        par::for_each_range(1..self.order, |i| {
            let y = digits(i, self.base.p(), self.degree);
            let idx = self.index_of(&self.mul_raw(&y, &y));
            table[idx as usize].store(2, Ordering::Relaxed);
        });
        table
    }

    /// Evaluates an integer polynomial (low-to-high coefficients already
    /// reduced mod p) at `x` by Horner's rule.
    fn eval_raw(&self, coeffs: &[u64], x: &[u64]) -> Vec<u64> {
        let mut acc = vec![0u64; self.degree];
        for &c in coeffs.iter().rev() {
            acc = self.mul_raw(&acc, x);
            acc[0] = self.base.add(acc[0], c);
        }
        acc
    }
}

impl<'a> FieldElement<'a> {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &FieldElement<'a>) -> FieldElement<'a> {
        let fp = &self.field.base;
        FieldElement {
            field: self.field,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| fp.add(a, b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement<'a>) -> FieldElement<'a> {
        FieldElement {
            field: self.field,
            coeffs: self.field.mul_raw(&self.coeffs, &other.coeffs),
        }
    }

    pub fn pow(&self, exp: u64) -> FieldElement<'a> {
        FieldElement {
            field: self.field,
            coeffs: self.field.pow_raw(&self.coeffs, exp),
        }
    }

    /// Quadratic character; errors in characteristic 2.
    pub fn quadratic_character(&self) -> Result<i8> {
        if self.field.characteristic() == 2 {
            return Err(Error::Unsupported(
                "quadratic character in characteristic 2".into(),
            ));
        }
        Ok(self.field.chi2_raw(&self.coeffs))
    }
}

/// The smooth projective curve with affine model `y² = f(x)`, `f` monic of
/// odd degree `2g + 1`, over `F_p` with `p` odd.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperellipticCurve {
    base_p: u64,
    /// Integer coefficients, low-to-high.
    f: Vec<i64>,
}

impl HyperellipticCurve {
    /// Builds a curve from coefficients given high-to-low degree, e.g.
    /// `[1, 0, 1, 1, -1, -1]` for `x⁵ + x³ + x² − x − 1`.
    pub fn from_high_to_low(p: u64, coeffs: &[i64]) -> Result<Self> {
        let mut f: Vec<i64> = coeffs.iter().rev().copied().collect();
        while f.last() == Some(&0) {
            f.pop();
        }
        Self::new(p, f)
    }

    /// Builds a curve from coefficients given low-to-high degree.
    pub fn new(p: u64, f: Vec<i64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        if p == 2 {
            return Err(Error::Unsupported("characteristic 2 is not supported".into()));
        }
        let d = f.len().saturating_sub(1);
        if f.last() != Some(&1) {
            return Err(Error::domain("f must be monic"));
        }
        if d < 3 || d % 2 == 0 {
            return Err(Error::domain(format!(
                "f must have odd degree at least 3, got degree {d}"
            )));
        }
        let fp = PrimeField::new(p)?;
        if !fp.is_separable(&fp.from_integers(&f)) {
            return Err(Error::domain(format!("f is not squarefree modulo {p}")));
        }
        Ok(HyperellipticCurve { base_p: p, f })
    }

    pub fn base_p(&self) -> u64 {
        self.base_p
    }

    pub fn degree(&self) -> usize {
        self.f.len() - 1
    }

    pub fn genus(&self) -> usize {
        (self.degree() - 1) / 2
    }

    /// Coefficients low-to-high.
    pub fn coeffs(&self) -> &[i64] {
        &self.f
    }
}

/// `N_n = |X(F_{p^n})|`: one point at infinity plus `1 + χ₂(f(x))` affine
/// points above each `x ∈ F_{p^n}`.
pub fn count_points(curve: &HyperellipticCurve, n: usize) -> Result<u64> {
    let field = make_extension_field(curve.base_p, n)?;
    count_points_in(curve, &field)
}

/// Point count over an explicitly constructed extension of the base field.
pub fn count_points_in(curve: &HyperellipticCurve, field: &FiniteField) -> Result<u64> {
    if field.characteristic() != curve.base_p {
        return Err(Error::domain("field characteristic differs from the curve's"));
    }
    let p = curve.base_p as i64;
    let f: Vec<u64> = curve.f.iter().map(|c| c.rem_euclid(p) as u64).collect();
    let roots = field.square_root_counts();
    let affine = par::sum_range_u64(0..field.order(), |i| {
        let x = digits(i, curve.base_p, field.degree());
        let y2 = field.eval_raw(&f, &x);
        roots[field.index_of(&y2) as usize].load(Ordering::Relaxed) as u64
    });
    Ok(affine + 1)
}

fn enumerable_order(p: u64, n: usize) -> Result<u64> {
    checked_power(p, n)
        .filter(|&q| q <= ENUMERATION_CAP)
        .ok_or_else(|| Error::size(format!("{p}^{n} exceeds the cap {ENUMERATION_CAP}")))
}

/// Counts `N_1, …, N_m`; fails before counting anything if `p^m` is over
/// the cap.
pub fn count_range(curve: &HyperellipticCurve, m: usize) -> Result<Vec<u64>> {
    enumerable_order(curve.base_p, m)?;
    (1..=m).map(|n| count_points(curve, n)).collect()
}

/// The numerator `P(T) = 1 + a_1 T + … + a_{2g} T^{2g}` of a curve zeta.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaNumerator {
    coeffs: Vec<i64>,
    q: u64,
}

impl ZetaNumerator {
    /// Validates `a_0 = 1`, even degree, and `a_{2g−i} = q^{g−i} a_i`.
    pub fn new(coeffs: Vec<i64>, q: u64) -> Result<Self> {
        if coeffs.first() != Some(&1) {
            return Err(Error::domain("P(0) must be 1"));
        }
        if coeffs.len() % 2 == 0 {
            return Err(Error::domain("P must have even degree 2g"));
        }
        let zn = ZetaNumerator { coeffs, q };
        if !zn.satisfies_functional_equation() {
            return Err(Error::domain("coefficients violate a_{2g-i} = q^{g-i} a_i"));
        }
        Ok(zn)
    }

    /// Coefficients `a_0, …, a_{2g}`.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn genus(&self) -> usize {
        (self.coeffs.len() - 1) / 2
    }

    pub fn satisfies_functional_equation(&self) -> bool {
        let g = self.genus();
        let q = BigInt::from(self.q);
        (0..=g).all(|i| {
            let lhs = BigInt::from(self.coeffs[2 * g - i]);
            let rhs = num_traits::pow(q.clone(), g - i) * BigInt::from(self.coeffs[i]);
            lhs == rhs
        })
    }
}

/// Computes `P(T)` from `N_1, …, N_{2g}` by exact power-series
/// exponentiation: `P = exp(Σ N_n T^n / n) · (1 − T)(1 − qT) mod T^{2g+1}`.
pub fn zeta_numerator(curve: &HyperellipticCurve) -> Result<ZetaNumerator> {
    let g = curve.genus();
    let counts = count_range(curve, 2 * g)?;
    numerator_from_counts(&counts, curve.base_p)
}

/// The numerator determined by the first `2g` counts over `F_q`.
pub fn numerator_from_counts(counts: &[u64], q: u64) -> Result<ZetaNumerator> {
    if counts.len() % 2 == 1 {
        return Err(Error::domain("need an even number 2g of point counts"));
    }
    let len = counts.len() + 1;
    // e_k = (1/k) Σ_{j=1}^{k} N_j e_{k−j}
    let mut exp: Vec<BigRational> = Vec::with_capacity(len);
    exp.push(BigRational::one());
    for k in 1..len {
        let mut acc = BigRational::zero();
        for j in 1..=k {
            acc += BigRational::from_integer(BigInt::from(counts[j - 1])) * &exp[k - j];
        }
        exp.push(acc / BigRational::from_integer(BigInt::from(k)));
    }
    let factor = [
        BigRational::one(),
        -BigRational::from_integer(BigInt::from(q + 1)),
        BigRational::from_integer(BigInt::from(q)),
    ];
    let mut coeffs = Vec::with_capacity(len);
    for k in 0..len {
        let mut c = BigRational::zero();
        for (i, fi) in factor.iter().enumerate() {
            if i <= k {
                c += fi * &exp[k - i];
            }
        }
        if !c.is_integer() {
            return Err(Error::Internal(format!(
                "coefficient a_{k} = {c} is not an integer; the counts are inconsistent"
            )));
        }
        let v = c
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::size(format!("coefficient a_{k} overflows i64")))?;
        coeffs.push(v);
    }
    ZetaNumerator::new(coeffs, q).map_err(|e| match e {
        Error::Domain(msg) => Error::Internal(msg),
        other => other,
    })
}

/// Predicts `N_1, …, N_m` from `P(T)` via `N_n = q^n + 1 − s_n`, where the
/// power sums `s_n` of the reciprocal roots come from Newton's identities
/// `s_n = −n a_n − Σ_{k=1}^{n−1} a_k s_{n−k}`.
pub fn predict_counts(zn: &ZetaNumerator, m: usize) -> Vec<BigInt> {
    let a: Vec<BigInt> = zn.coeffs.iter().map(|&c| BigInt::from(c)).collect();
    let coeff = |k: usize| a.get(k).cloned().unwrap_or_default();
    let q = BigInt::from(zn.q);
    let mut sums: Vec<BigInt> = Vec::with_capacity(m + 1);
    sums.push(BigInt::zero());
    let mut out = Vec::with_capacity(m);
    let mut qn = BigInt::one();
    for n in 1..=m {
        let mut s = -BigInt::from(n) * coeff(n);
        for k in 1..n.min(a.len()) {
            s -= &a[k] * &sums[n - k];
        }
        qn *= &q;
        out.push(&qn + 1 - &s);
        sums.push(s);
    }
    out
}

/// `|N_n − q^n − 1| ≤ 2g q^{n/2}`, checked exactly as a squared inequality.
pub fn within_hasse_weil(count: u64, q: u64, n: usize, genus: usize) -> bool {
    let qn = num_traits::pow(BigInt::from(q), n);
    let dev: BigInt = (BigInt::from(count) - &qn - BigInt::one()).abs();
    let g2 = BigInt::from(2 * genus);
    &dev * &dev <= &g2 * &g2 * qn
}

#[cfg(test)]
mod tests {
    use super::*;

    fn howe(sign: i64) -> HyperellipticCurve {
        HyperellipticCurve::from_high_to_low(3, &[1, 0, sign, 1, -1, -1]).unwrap()
    }

    #[test]
    fn extension_moduli() {
        assert_eq!(make_extension_field(3, 1).unwrap().modulus(), &[0, 1]);
        assert_eq!(make_extension_field(3, 2).unwrap().modulus(), &[1, 0, 1]);
        assert_eq!(make_extension_field(2, 3).unwrap().modulus(), &[1, 1, 0, 1]);
        assert!(matches!(make_extension_field(3, 15), Err(Error::Size(_))));
        assert!(matches!(make_extension_field(6, 1), Err(Error::Domain(_))));
    }

    #[test]
    fn extension_modulus_is_first_irreducible_by_scan() {
        // Exhaustive root/factor scan oracle for degree 2 and 3: a monic
        // quadratic or cubic is irreducible iff it has no root in F_p.
        for &(p, n) in &[(3u64, 2usize), (5, 2), (2, 3), (5, 3), (7, 3)] {
            let mut expected = None;
            'scan: for code in 0..p.pow(n as u32) {
                let mut c = digits(code, p, n);
                c.push(1);
                for x in 0..p {
                    let v = c.iter().rev().fold(0, |acc, &ci| (acc * x + ci) % p);
                    if v == 0 {
                        continue 'scan;
                    }
                }
                expected = Some(c);
                break;
            }
            assert_eq!(make_extension_field(p, n).unwrap().modulus(), &expected.unwrap()[..]);
        }
    }

    #[test]
    fn field_multiplicative_group_is_cyclic_of_right_order() {
        let k = make_extension_field(3, 3).unwrap();
        for e in k.elements().filter(|e| !e.is_zero()) {
            let one = e.pow(k.order() - 1);
            assert_eq!(one.coeffs(), &[1, 0, 0]);
        }
    }

    #[test]
    fn quadratic_character_is_multiplicative() {
        let k = make_extension_field(5, 2).unwrap();
        let elems: Vec<_> = k.elements().collect();
        for (i, a) in elems.iter().enumerate().step_by(3) {
            for b in elems.iter().skip(i % 7).step_by(5) {
                let lhs = a.mul(b).quadratic_character().unwrap();
                let rhs = a.quadratic_character().unwrap() * b.quadratic_character().unwrap();
                assert_eq!(lhs, rhs);
            }
            if !a.is_zero() {
                assert_eq!(a.mul(a).quadratic_character().unwrap(), 1);
            }
        }
        let squares = elems
            .iter()
            .filter(|e| e.quadratic_character().unwrap() == 1)
            .count();
        assert_eq!(squares as u64, (k.order() - 1) / 2);
        let k2 = make_extension_field(2, 2).unwrap();
        assert!(k2.element(1).quadratic_character().is_err());
    }

    #[test]
    fn curve_validation() {
        assert!(matches!(
            HyperellipticCurve::from_high_to_low(2, &[1, 0, 1, 1]),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            HyperellipticCurve::from_high_to_low(3, &[1, 0, 0, 0, 1]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            HyperellipticCurve::from_high_to_low(3, &[2, 0, 1, 1]),
            Err(Error::Domain(_))
        ));
        // x³ − 3x² + 3x − 1 = (x − 1)³ is not squarefree
        assert!(HyperellipticCurve::from_high_to_low(5, &[1, -3, 3, -1]).is_err());
        assert_eq!(howe(1).genus(), 2);
    }

    #[test]
    fn degenerate_fibres() {
        // x³ − x vanishes on all of F_3
        let c = HyperellipticCurve::from_high_to_low(3, &[1, 0, -1, 0]).unwrap();
        assert_eq!(count_points(&c, 1).unwrap(), 4);
    }

    #[test]
    fn howe_curves() {
        let expected = [3, 11, 21, 107, 288, 719, 2271];
        for sign in [1, -1] {
            assert_eq!(count_range(&howe(sign), 7).unwrap(), expected);
            let zn = zeta_numerator(&howe(sign)).unwrap();
            assert_eq!(zn.coeffs(), &[1, -1, 1, -3, 9]);
        }
    }

    #[test]
    fn genus_one() {
        // y² = x³ + x over F_3: x = 0 → 1 point, x = 1 → f = 2 (non-square),
        // x = 2 → f = 10 ≡ 1 → 2 points; plus infinity.
        let c = HyperellipticCurve::from_high_to_low(3, &[1, 0, 1, 0]).unwrap();
        assert_eq!(count_points(&c, 1).unwrap(), 4);
        let zn = zeta_numerator(&c).unwrap();
        assert_eq!(zn.coeffs(), &[1, 0, 3]);
        let pred = predict_counts(&zn, 2);
        assert_eq!(pred, vec![BigInt::from(4), BigInt::from(16)]);
        assert_eq!(count_points(&c, 2).unwrap(), 16);
    }

    #[test]
    fn projective_line() {
        let zn = ZetaNumerator::new(vec![1], 3).unwrap();
        let pred = predict_counts(&zn, 5);
        let expected: Vec<BigInt> = (1..=5).map(|n| BigInt::from(3u64.pow(n) + 1)).collect();
        assert_eq!(pred, expected);
    }

    #[test]
    fn inconsistent_counts_are_caught() {
        assert!(matches!(numerator_from_counts(&[3, 12], 3), Err(Error::Internal(_))));
        assert!(ZetaNumerator::new(vec![1, 0, 4], 3).is_err());
    }

    #[test]
    fn hasse_weil() {
        assert!(within_hasse_weil(4, 3, 1, 1));
        assert!(within_hasse_weil(7, 3, 1, 1)); // |7 − 4| = 3 ≤ 2√3
        assert!(!within_hasse_weil(8, 3, 1, 1));
    }
}
