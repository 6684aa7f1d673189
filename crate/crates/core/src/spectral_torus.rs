//! Epstein zeta functions of positive definite binary quadratic forms, the
//! real-analytic Eisenstein series, spectral zeta functions of flat 2-tori
//! and a zeta-distance bound between two tori.
//!
//! The flat torus `R²/L` has Laplace eigenvalues `4π²|λ*|²` for `λ*` in the
//! dual lattice `L*` (pairing `⟨v_i, v*_j⟩ = δ_ij`), so its spectral zeta is
//! `(4π²)^{−s}` times the Epstein zeta of the Gram form of `L*`.

use std::f64::consts::PI;

use crate::numeric::{bloch_wigner, gamma, upper_incomplete_gamma, CompensatedSum, ComplexValue};
use crate::{par, Error, Result};

/// `Q(m, n) = a m² + b mn + c n²`, positive definite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinaryQuadraticForm {
    a: f64,
    b: f64,
    c: f64,
}

impl BinaryQuadraticForm {
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::domain("form coefficients must be finite"));
        }
        if a <= 0.0 || 4.0 * a * c - b * b <= 0.0 {
            return Err(Error::domain(format!(
                "form ({a}, {b}, {c}) is not positive definite"
            )));
        }
        Ok(BinaryQuadraticForm { a, b, c })
    }

    pub fn coefficients(&self) -> (f64, f64, f64) {
        (self.a, self.b, self.c)
    }

    #[inline]
    pub fn eval(&self, m: f64, n: f64) -> f64 {
        self.a * m * m + self.b * m * n + self.c * n * n
    }

    /// Determinant `ac − b²/4` of the Gram matrix.
    pub fn determinant(&self) -> f64 {
        self.a * self.c - 0.25 * self.b * self.b
    }

    /// Eigenvalues of the Gram matrix, ascending.
    pub fn eigenvalues(&self) -> (f64, f64) {
        let mean = 0.5 * (self.a + self.c);
        let r = (0.25 * (self.a - self.c).powi(2) + 0.25 * self.b * self.b).sqrt();
        // smaller one via the determinant to avoid cancellation
        let big = mean + r;
        (self.determinant() / big, big)
    }

    /// `Q(αm + βn, γm + δn)` for an integer substitution.
    pub fn substitute(&self, alpha: i64, beta: i64, gamma: i64, delta: i64) -> Result<Self> {
        let (al, be, ga, de) = (alpha as f64, beta as f64, gamma as f64, delta as f64);
        let a = self.eval(al, ga);
        let c = self.eval(be, de);
        let b = 2.0 * self.a * al * be + self.b * (al * de + be * ga) + 2.0 * self.c * ga * de;
        Self::new(a, b, c)
    }

    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::new(k * self.a, k * self.b, k * self.c)
    }

    /// Form of the inverse Gram matrix.
    pub fn inverse(&self) -> Self {
        let d = self.determinant();
        BinaryQuadraticForm {
            a: self.c / d,
            b: -self.b / d,
            c: self.a / d,
        }
    }
}

fn check_s(s: f64) -> Result<()> {
    if !s.is_finite() || s <= 1.0 {
        return Err(Error::domain(format!("Epstein zeta needs real s > 1, got {s}")));
    }
    Ok(())
}

/// Result of a truncated lattice sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectSum {
    pub value: f64,
    /// Bound on `|ζ_Q(s) − value|`.
    pub error_bound: f64,
    pub terms: u64,
}

/// `Σ' Q(m, n)^{−s}` over `0 < m² + n² ≤ R²`.
///
/// The bound on the omitted part compares each lattice point `v` with the
/// unit square around it. On that square `|x| ≤ |v| + r₀` with `r₀ = √2/2`,
/// so `|v|^{−2s} ≤ (1 + r₀/R)^{2s} ∫_square |x|^{−2s}` when `|v| > R`, and the
/// squares lie outside the disc of radius `R − r₀`. With `λ` the smallest
/// Gram eigenvalue this gives
/// `Σ_{|v|>R} Q(v)^{−s} ≤ λ^{−s} (1 + r₀/R)^{2s} π (R − r₀)^{2−2s} / (s − 1)`.
pub fn epstein_direct(form: &BinaryQuadraticForm, s: f64, radius: f64) -> Result<DirectSum> {
    check_s(s)?;
    if !(radius >= 10.0) || !radius.is_finite() {
        return Err(Error::domain(format!("radius must be at least 10, got {radius}")));
    }
    let r = radius.floor() as i64;
    let r2 = radius * radius;
    let rows = par::map_range(0..(2 * r + 1) as u64, |i| {
        let m = i as i64 - r;
        let mf = m as f64;
        let span = (r2 - mf * mf).max(0.0).sqrt().floor() as i64;
        let mut acc = CompensatedSum::new();
        let mut count = 0u64;
        for n in (-span..=span).rev() {
            if m == 0 && n == 0 {
                continue;
            }
            acc += form.eval(mf, n as f64).powf(-s);
            count += 1;
        }
        (acc, count)
    });
    let (acc, terms) = rows
        .into_iter()
        .fold((CompensatedSum::new(), 0), |(a, c), (x, k)| (a.merge(x), c + k));
    let lambda = form.eigenvalues().0;
    let r0 = 0.5 * 2f64.sqrt();
    let tail = lambda.powf(-s) * (1.0 + r0 / radius).powf(2.0 * s) * PI
        * (radius - r0).powf(2.0 - 2.0 * s)
        / (s - 1.0);
    let value = acc.value();
    Ok(DirectSum {
        value,
        error_bound: tail + 1e-14 * value,
        terms,
    })
}

/// Cut-off for the exponentially small terms: `e^{−x}` with `x > 50` is
/// below `2·10^{−22}`.
const THETA_CUTOFF: f64 = 50.0;

/// Σ' `h(π Q(v))` over lattice points with `π Q(v) ≤ THETA_CUTOFF`.
fn theta_tail_sum<F>(form: &BinaryQuadraticForm, h: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64> + Sync + Send,
{
    let limit = THETA_CUTOFF / PI;
    let lambda = form.eigenvalues().0;
    let r = (limit / lambda).sqrt().ceil() as i64;
    let rows = par::map_range(0..(2 * r + 1) as u64, |i| -> Result<CompensatedSum> {
        let m = (i as i64 - r) as f64;
        let mut acc = CompensatedSum::new();
        for n in -r..=r {
            if m == 0.0 && n == 0 {
                continue;
            }
            let q = form.eval(m, n as f64);
            if q <= limit {
                acc += h(PI * q)?;
            }
        }
        Ok(acc)
    });
    let mut total = CompensatedSum::new();
    for row in rows {
        total = total.merge(row?);
    }
    Ok(total.value())
}

/// `ζ_Q(s)` to about `1e−13` relative, by the theta-function splitting.
///
/// With `Q` rescaled to determinant 1 and `Q*` its inverse form,
///
/// `π^{−s} Γ(s) ζ_Q(s) = Σ' (πQ)^{−s} Γ(s, πQ) + Σ' (πQ*)^{s−1} Γ(1−s, πQ*)
///  + 1/(s−1) − 1/s`,
///
/// which follows from Mellin-transforming `θ(t) − 1`, splitting at `t = 1`,
/// and applying Poisson summation on `(0, 1)`. Both sums converge like
/// `e^{−πQ}`.
pub fn epstein_accelerated(form: &BinaryQuadraticForm, s: f64) -> Result<f64> {
    check_s(s)?;
    let det = form.determinant();
    let unit = form.scaled(1.0 / det.sqrt())?;
    let dual = unit.inverse();
    let direct = theta_tail_sum(&unit, |x| Ok(upper_incomplete_gamma(s, x)? * x.powf(-s)))?;
    let reciprocal = theta_tail_sum(&dual, |x| {
        Ok(upper_incomplete_gamma(1.0 - s, x)? * x.powf(s - 1.0))
    })?;
    let mut completed = CompensatedSum::new();
    completed += direct;
    completed += reciprocal;
    completed += 1.0 / (s - 1.0);
    completed += -1.0 / s;
    let unit_value = PI.powf(s) * completed.value() / gamma(s);
    Ok(det.powf(-0.5 * s) * unit_value)
}

/// A point `τ = x + iy` of the upper half plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfPoint {
    pub x: f64,
    pub y: f64,
}

impl UpperHalfPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() || !y.is_finite() || y <= 0.0 {
            return Err(Error::domain(format!("τ = {x} + {y}i is not in the upper half plane")));
        }
        Ok(UpperHalfPoint { x, y })
    }

    pub fn i() -> Self {
        UpperHalfPoint { x: 0.0, y: 1.0 }
    }

    /// `ρ = (1 + √−3)/2`.
    pub fn rho() -> Self {
        UpperHalfPoint {
            x: 0.5,
            y: 3f64.sqrt() / 2.0,
        }
    }

    /// `τ + 1`.
    pub fn translate(&self) -> Self {
        UpperHalfPoint {
            x: self.x + 1.0,
            y: self.y,
        }
    }

    /// `−1/τ`.
    pub fn invert(&self) -> Self {
        let r2 = self.x * self.x + self.y * self.y;
        UpperHalfPoint {
            x: -self.x / r2,
            y: self.y / r2,
        }
    }

    /// `|mτ + n|² = (x² + y²) m² + 2x mn + n²`.
    pub fn form(&self) -> BinaryQuadraticForm {
        BinaryQuadraticForm {
            a: self.x * self.x + self.y * self.y,
            b: 2.0 * self.x,
            c: 1.0,
        }
    }
}

/// `E(τ, s) = Σ' y^s / |mτ + n|^{2s} = y^s ζ_{Q_τ}(s)`.
pub fn eisenstein(tau: &UpperHalfPoint, s: f64) -> Result<f64> {
    Ok(tau.y.powf(s) * epstein_accelerated(&tau.form(), s)?)
}

/// A lattice in the plane spanned by two independent vectors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lattice2D {
    pub v1: [f64; 2],
    pub v2: [f64; 2],
}

impl Lattice2D {
    pub fn new(v1: [f64; 2], v2: [f64; 2]) -> Result<Self> {
        if v1.iter().chain(&v2).any(|c| !c.is_finite()) {
            return Err(Error::domain("lattice basis must be finite"));
        }
        let l = Lattice2D { v1, v2 };
        let scale = (v1[0].hypot(v1[1]) * v2[0].hypot(v2[1])).max(f64::MIN_POSITIVE);
        if l.covolume() <= 1e-12 * scale {
            return Err(Error::domain("lattice basis is degenerate"));
        }
        Ok(l)
    }

    pub fn unit_square() -> Self {
        Lattice2D {
            v1: [1.0, 0.0],
            v2: [0.0, 1.0],
        }
    }

    /// Hexagonal lattice of covolume 1.
    pub fn hexagonal_unit_covolume() -> Self {
        let l = (2.0 / 3f64.sqrt()).sqrt();
        Lattice2D {
            v1: [l, 0.0],
            v2: [0.5 * l, 0.5 * 3f64.sqrt() * l],
        }
    }

    /// The lattice `Z + Zτ`.
    pub fn from_tau(tau: &UpperHalfPoint) -> Self {
        Lattice2D {
            v1: [1.0, 0.0],
            v2: [tau.x, tau.y],
        }
    }

    fn det(&self) -> f64 {
        self.v1[0] * self.v2[1] - self.v1[1] * self.v2[0]
    }

    pub fn covolume(&self) -> f64 {
        self.det().abs()
    }

    pub fn scaled(&self, k: f64) -> Result<Self> {
        Self::new(
            [k * self.v1[0], k * self.v1[1]],
            [k * self.v2[0], k * self.v2[1]],
        )
    }

    /// Basis of `L*` with `⟨v_i, v*_j⟩ = δ_ij` (inverse transpose).
    pub fn dual(&self) -> Self {
        let d = self.det();
        Lattice2D {
            v1: [self.v2[1] / d, -self.v2[0] / d],
            v2: [-self.v1[1] / d, self.v1[0] / d],
        }
    }

    /// `|m v1 + n v2|²`.
    pub fn gram_form(&self) -> Result<BinaryQuadraticForm> {
        let dot = |u: [f64; 2], v: [f64; 2]| u[0] * v[0] + u[1] * v[1];
        BinaryQuadraticForm::new(
            dot(self.v1, self.v1),
            2.0 * dot(self.v1, self.v2),
            dot(self.v2, self.v2),
        )
    }
}

/// `Σ_{λ ≠ 0} λ^{−s}` over the Laplace spectrum of `R²/L`.
pub fn spectral_zeta_flat_torus(lattice: &Lattice2D, s: f64) -> Result<f64> {
    let dual_form = lattice.dual().gram_form()?;
    Ok((4.0 * PI * PI).powf(-s) * epstein_accelerated(&dual_form, s)?)
}

/// Lower end of the `s`-range for surfaces.
pub const LENGTH_S_LO: f64 = 2.0;
/// Upper end of the `s`-range for surfaces.
pub const LENGTH_S_HI: f64 = 3.0;
pub const DEFAULT_GRID: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LengthBound {
    /// `sup_{2 ≤ s ≤ 3} |log ζ_X(s) − log ζ_Y(s)|`.
    pub value: f64,
    /// Where the supremum was found.
    pub argmax: f64,
}

/// Supremum over `s ∈ [s_lo, s_hi]` of `|log(ζ_X(s)/ζ_Y(s))|` for the
/// spectral zetas of two flat tori, with constant test functions. Surfaces
/// use `[LENGTH_S_LO, LENGTH_S_HI] = [2, 3]`.
///
/// Evaluated on a uniform grid and refined by golden-section search on the
/// two cells around the best grid point.
pub fn torus_length_bound(
    l1: &Lattice2D,
    l2: &Lattice2D,
    s_lo: f64,
    s_hi: f64,
    grid: usize,
) -> Result<LengthBound> {
    if !(s_lo > 1.0 && s_hi > s_lo && s_hi.is_finite()) {
        return Err(Error::domain(format!("need 1 < s_lo < s_hi, got [{s_lo}, {s_hi}]")));
    }
    if grid < 100 {
        return Err(Error::domain(format!("grid needs at least 100 points, got {grid}")));
    }
    let gap = |s: f64| -> Result<f64> {
        let a = spectral_zeta_flat_torus(l1, s)?;
        let b = spectral_zeta_flat_torus(l2, s)?;
        Ok((a.ln() - b.ln()).abs())
    };
    let step = (s_hi - s_lo) / (grid - 1) as f64;
    let values = par::map_range(0..grid as u64, |i| gap(s_lo + i as f64 * step))
        .into_iter()
        .collect::<Result<Vec<f64>>>()?;
    let (best, &best_value) = values
        .iter()
        .enumerate()
        .fold((0, &values[0]), |acc, (i, v)| if *v > *acc.1 { (i, v) } else { acc });
    let mut lo = s_lo + best.saturating_sub(1) as f64 * step;
    let mut hi = (s_lo + (best + 1) as f64 * step).min(s_hi);
    let mut result = LengthBound {
        value: best_value,
        argmax: s_lo + best as f64 * step,
    };
    if best_value == 0.0 {
        return Ok(result);
    }
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = gap(x1)?;
    let mut f2 = gap(x2)?;
    for _ in 0..60 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = gap(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = gap(x1)?;
        }
        if hi - lo < 1e-12 {
            break;
        }
    }
    for (x, f) in [(x1, f1), (x2, f2)] {
        if f > result.value {
            result = LengthBound { value: f, argmax: x };
        }
    }
    Ok(result)
}

/// Three independently computed ratios around the square and hexagonal tori.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantReport {
    /// `(3√3/4) · D(i) / D(ρ)`.
    pub dilog_ratio: f64,
    pub bloch_wigner_i: f64,
    pub bloch_wigner_rho: f64,
    /// `ζ_{m²+n²}(2) / ζ_{m²−mn+n²}(2)`.
    pub epstein_ratio_s2: f64,
    pub epstein_square_s2: f64,
    /// `ζ_{m²−mn+n²}(2)`.
    pub epstein_hex_minus_s2: f64,
    /// `ζ_{m²+mn+n²}(2)`.
    pub epstein_hex_plus_s2: f64,
    /// `E(i, 2) / E(ρ, 2)`.
    pub eisenstein_ratio_s2: f64,
    pub eisenstein_i_s2: f64,
    pub eisenstein_rho_s2: f64,
}

impl ConstantReport {
    /// `|ζ_{m²−mn+n²}(2) − ζ_{m²+mn+n²}(2)|`.
    pub fn equivalent_forms_gap(&self) -> f64 {
        (self.epstein_hex_minus_s2 - self.epstein_hex_plus_s2).abs()
    }
}

/// Computes the dilogarithm, Epstein and Eisenstein ratios separately,
/// without assuming any relation between them.
pub fn paper_constant_check() -> Result<ConstantReport> {
    let rho = ComplexValue::new(0.5, 3f64.sqrt() / 2.0);
    let d_i = bloch_wigner(ComplexValue::new(0.0, 1.0))?;
    let d_rho = bloch_wigner(rho)?;
    let square = epstein_accelerated(&BinaryQuadraticForm::new(1.0, 0.0, 1.0)?, 2.0)?;
    let hex_minus = epstein_accelerated(&BinaryQuadraticForm::new(1.0, -1.0, 1.0)?, 2.0)?;
    let hex_plus = epstein_accelerated(&BinaryQuadraticForm::new(1.0, 1.0, 1.0)?, 2.0)?;
    let e_i = eisenstein(&UpperHalfPoint::i(), 2.0)?;
    let e_rho = eisenstein(&UpperHalfPoint::rho(), 2.0)?;
    Ok(ConstantReport {
        dilog_ratio: 3.0 * 3f64.sqrt() / 4.0 * d_i / d_rho,
        bloch_wigner_i: d_i,
        bloch_wigner_rho: d_rho,
        epstein_ratio_s2: square / hex_minus,
        epstein_square_s2: square,
        epstein_hex_minus_s2: hex_minus,
        epstein_hex_plus_s2: hex_plus,
        eisenstein_ratio_s2: e_i / e_rho,
        eisenstein_i_s2: e_i,
        eisenstein_rho_s2: e_rho,
    })
}
