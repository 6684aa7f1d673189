//! The Bost–Connes system over `Q` at finite level `M`.
//!
//! The level-`M` shadow of the space `G^ab ×_{Ẑ*} Ẑ` is the set of residues
//! `Z/M`: a class `[(γ, ρ)]` is represented by the single residue `γρ mod M`,
//! and the semigroup of positive integers acts by multiplication. The
//! partition function is the Riemann zeta function, and the Gibbs state
//! `ω_{β,x₀}` at inverse temperature `β > 1` weights the orbit point `n·x₀` by
//! `n^{−β} / ζ(β)`.

use std::collections::BTreeMap;

use num_integer::Integer;

use crate::dirichlet::DirichletCharacter;
use crate::fp_poly::is_prime;
use crate::numeric::{hurwitz_zeta_progression, riemann_zeta, CompensatedSum, ComplexValue, PrecisionPolicy};
use crate::{par, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteLevelSystem {
    level: u64,
}

impl FiniteLevelSystem {
    pub fn new(level: u64) -> Result<Self> {
        if level == 0 {
            return Err(Error::domain("level must be at least 1"));
        }
        Ok(FiniteLevelSystem { level })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// `n ∗ x = n·x mod M`.
    pub fn act(&self, n: u64, x: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::domain("0 is not in the semigroup of positive integers"));
        }
        if x >= self.level {
            return Err(Error::domain(format!("residue {x} is not below the level {}", self.level)));
        }
        Ok(((n % self.level) as u128 * x as u128 % self.level as u128) as u64)
    }

    /// Whether `x` is a unit mod `M`.
    pub fn is_unit(&self, x: u64) -> bool {
        x.gcd(&self.level) == 1
    }
}

/// `σ_t(μ_n) = n^{it} μ_n`: the phase `e^{it log n}`.
pub fn time_evolution_phase(n: u64, t: f64) -> Result<ComplexValue> {
    if n == 0 {
        return Err(Error::domain("phase is defined for n ≥ 1"));
    }
    if !t.is_finite() {
        return Err(Error::domain("time must be finite"));
    }
    Ok(ComplexValue::from_polar(1.0, t * (n as f64).ln()))
}

/// The partition function `Σ n^{−β} = ζ(β)`.
pub fn partition_function(beta: f64, policy: &PrecisionPolicy) -> Result<f64> {
    if !beta.is_finite() || beta <= 1.0 {
        return Err(Error::domain(format!(
            "partition function diverges for β ≤ 1 (got {beta})"
        )));
    }
    riemann_zeta(beta, policy)
}

/// A function on the level-`M` residues.
#[derive(Debug, Clone, PartialEq)]
pub struct Observable {
    values: Vec<ComplexValue>,
}

impl Observable {
    pub fn new(sys: &FiniteLevelSystem, values: Vec<ComplexValue>) -> Result<Self> {
        if values.len() as u64 != sys.level {
            return Err(Error::domain(format!(
                "observable has {} values, level is {}",
                values.len(),
                sys.level
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::domain("observable values must be finite"));
        }
        Ok(Observable { values })
    }

    pub fn real(sys: &FiniteLevelSystem, values: &[f64]) -> Result<Self> {
        Self::new(sys, values.iter().map(|&v| ComplexValue::new(v, 0.0)).collect())
    }

    pub fn constant(sys: &FiniteLevelSystem, c: f64) -> Self {
        Observable {
            values: vec![ComplexValue::new(c, 0.0); sys.level as usize],
        }
    }

    /// `x ↦ χ(x)`, zero off the units.
    pub fn from_character(sys: &FiniteLevelSystem, chi: &DirichletCharacter<'_>) -> Result<Self> {
        if chi.modulus() != sys.level {
            return Err(Error::domain("character modulus differs from the level"));
        }
        Ok(Observable {
            values: (0..sys.level).map(|x| chi.evaluate(x as i64)).collect(),
        })
    }

    /// `x ↦ f(u·x)`.
    pub fn precompose_multiplication(&self, u: u64) -> Observable {
        let m = self.values.len() as u64;
        Observable {
            values: (0..m).map(|x| self.values[(u % m * x % m) as usize]).collect(),
        }
    }

    pub fn values(&self) -> &[ComplexValue] {
        &self.values
    }

    pub fn at(&self, x: u64) -> ComplexValue {
        self.values[x as usize]
    }

    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

fn check_state_args(sys: &FiniteLevelSystem, beta: f64, x0: u64, f: &Observable) -> Result<()> {
    if !beta.is_finite() || beta <= 1.0 {
        return Err(Error::domain(format!("Gibbs states need β > 1, got {beta}")));
    }
    if x0 >= sys.level || !sys.is_unit(x0) {
        return Err(Error::domain(format!(
            "base point {x0} must be a unit residue mod {}",
            sys.level
        )));
    }
    if f.values.len() as u64 != sys.level {
        return Err(Error::domain("observable does not match the level"));
    }
    Ok(())
}

/// `ω_{β,x₀}(f) = ζ(β)^{−1} Σ_{n≥1} n^{−β} f(n·x₀ mod M)`.
///
/// Evaluated without truncation by grouping `n ≡ r (mod M)`:
/// `Σ_{k≥0} (r + kM)^{−β} = M^{−β} ζ(β, r/M)` for `r = 1, …, M`; the residue
/// class `0` is represented by `r = M`.
pub fn gibbs_state(
    sys: &FiniteLevelSystem,
    beta: f64,
    x0: u64,
    f: &Observable,
    policy: &PrecisionPolicy,
) -> Result<ComplexValue> {
    check_state_args(sys, beta, x0, f)?;
    let m = sys.level;
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for r in 1..=m {
        let v = f.at(sys.act(r, x0)?);
        if v.re == 0.0 && v.im == 0.0 {
            continue;
        }
        let w = hurwitz_zeta_progression(beta, r, m, policy)?;
        re += v.re * w;
        im += v.im * w;
    }
    let scale = 1.0 / riemann_zeta(beta, policy)?;
    Ok(ComplexValue::new(re.value() * scale, im.value() * scale))
}

/// Truncated-sum evaluation of the Gibbs state, for cross-checking.
///
/// Returns `(Σ_{n≤N} n^{−β} f(n x₀) / Σ_{n≤N} n^{−β}, bound)` where the bound
/// `2‖f‖∞ N^{1−β} / ((β−1) Σ_{n≤N} n^{−β})` covers both truncated tails.
pub fn gibbs_state_direct(
    sys: &FiniteLevelSystem,
    beta: f64,
    x0: u64,
    f: &Observable,
    terms: u64,
) -> Result<(ComplexValue, f64)> {
    check_state_args(sys, beta, x0, f)?;
    if terms == 0 {
        return Err(Error::domain("need at least one term"));
    }
    const CHUNK: u64 = 16_384;
    let chunks = terms.div_ceil(CHUNK);
    let m = sys.level;
    let partials = par::map_range(0..chunks, |c| {
        let lo = c * CHUNK + 1;
        let hi = ((c + 1) * CHUNK).min(terms);
        let (mut re, mut im, mut z) = (CompensatedSum::new(), CompensatedSum::new(), CompensatedSum::new());
        for n in (lo..=hi).rev() {
            let w = (n as f64).powf(-beta);
            let v = f.values[((n % m) as u128 * x0 as u128 % m as u128) as usize];
            re += v.re * w;
            im += v.im * w;
            z += w;
        }
        (re, im, z)
    });
    let (re, im, z) = partials.into_iter().rev().fold(
        (CompensatedSum::new(), CompensatedSum::new(), CompensatedSum::new()),
        |(a, b, c), (x, y, w)| (a.merge(x), b.merge(y), c.merge(w)),
    );
    let z = z.value();
    let tail = (terms as f64).powf(1.0 - beta) / (beta - 1.0);
    let bound = 2.0 * f.sup_norm() * tail / z;
    Ok((ComplexValue::new(re.value() / z, im.value() / z), bound))
}

/// A candidate isomorphism `(Φ, φ)` between two level-`M` systems.
///
/// `φ` is given on primes and extended multiplicatively; integers with a
/// prime factor outside its domain are not in scope of the check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCandidate {
    point_map: Vec<u64>,
    prime_map: BTreeMap<u64, u64>,
}

impl IsoCandidate {
    pub fn new(point_map: Vec<u64>, prime_map: BTreeMap<u64, u64>) -> Result<Self> {
        let m = point_map.len();
        let mut seen = vec![false; m];
        for &y in &point_map {
            if y as usize >= m || seen[y as usize] {
                return Err(Error::domain("point map is not a bijection of the residues"));
            }
            seen[y as usize] = true;
        }
        if let Some((&p, &img)) = prime_map.iter().find(|(&p, &img)| !is_prime(p) || img == 0) {
            return Err(Error::domain(format!(
                "semigroup map must send primes to positive integers (got {p} ↦ {img})"
            )));
        }
        Ok(IsoCandidate {
            point_map,
            prime_map,
        })
    }

    /// `φ(p) = p` on every prime up to `prime_bound`.
    pub fn identity_semigroup(point_map: Vec<u64>, prime_bound: u64) -> Result<Self> {
        let primes = crate::fp_poly::primes_up_to(prime_bound);
        Self::new(point_map, primes.into_iter().map(|p| (p, p)).collect())
    }

    /// `Φ(x) = u·x mod M`, `φ = id`.
    pub fn unit_multiplication(level: u64, u: u64, prime_bound: u64) -> Result<Self> {
        Self::identity_semigroup((0..level).map(|x| u % level * x % level).collect(), prime_bound)
    }

    pub fn level(&self) -> u64 {
        self.point_map.len() as u64
    }

    pub fn point_map(&self) -> &[u64] {
        &self.point_map
    }

    pub fn prime_map(&self) -> &BTreeMap<u64, u64> {
        &self.prime_map
    }

    /// `φ(n)` if every prime factor of `n` is in the domain; `None` otherwise
    /// and `Some(None)` on overflow.
    fn semigroup_image(&self, mut n: u64) -> Option<Option<u64>> {
        let mut image: Option<u64> = Some(1);
        for (&p, &q) in &self.prime_map {
            while n % p == 0 {
                n /= p;
                image = image.and_then(|v| v.checked_mul(q));
            }
        }
        (n == 1).then_some(image)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoReport {
    /// `Φ(n ∗ x) = φ(n) ∗ Φ(x)` for every checked `(n, x)`.
    pub equivariant: bool,
    /// `N(φ(n)) = N(n)`, i.e. `φ(n) = n`, for every checked `n`.
    pub norm_preserving: bool,
    /// Smallest `(n, x)` violating equivariance.
    pub equivariance_witness: Option<(u64, u64)>,
    /// Smallest `n` violating norm preservation.
    pub norm_witness: Option<u64>,
    /// Integers `n ≤ bound` in the domain of `φ`.
    pub checked: usize,
}

/// Exhaustively checks the isomorphism conditions for every residue and every
/// `n ≤ bound` built from primes in the candidate's domain.
pub fn check_iso_candidate(
    sys_k: &FiniteLevelSystem,
    sys_l: &FiniteLevelSystem,
    cand: &IsoCandidate,
    bound: u64,
) -> Result<IsoReport> {
    if sys_k.level != sys_l.level || cand.level() != sys_k.level {
        return Err(Error::domain("finite-level checks need equal levels on both sides"));
    }
    let m = sys_k.level;
    let images: Vec<(u64, Option<u64>)> = (1..=bound)
        .filter_map(|n| cand.semigroup_image(n).map(|img| (n, img)))
        .collect();
    let norm_witness = images
        .iter()
        .find(|&&(n, img)| img != Some(n))
        .map(|&(n, _)| n);
    let phi = &cand.point_map;
    let equivariance_witness = par::find_first_range(0..images.len() as u64, |i| {
        let (n, img) = images[i as usize];
        let img_mod = img.map(|v| v % m);
        (0..m).find_map(|x| {
            let lhs = phi[sys_k.act(n, x).ok()? as usize];
            let rhs = img_mod.map(|k| (k as u128 * phi[x as usize] as u128 % m as u128) as u64);
            (Some(lhs) != rhs).then_some((n, x))
        })
    });
    Ok(IsoReport {
        equivariant: equivariance_witness.is_none(),
        norm_preserving: norm_witness.is_none(),
        equivariance_witness,
        norm_witness,
        checked: images.len(),
    })
}
