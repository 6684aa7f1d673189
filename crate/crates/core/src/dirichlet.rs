//! Dirichlet characters modulo `M` and their L-series for real `s > 1`.
//!
//! Characters are indexed by exponent vectors against a fixed decomposition of
//! `(Z/M)*` into cyclic factors: odd prime powers use their smallest primitive
//! root, and `2^k` uses `−1` (for `k ≥ 2`) and `5` (for `k ≥ 3`). Each factor's
//! generator is lifted by CRT to be `1` modulo the other prime-power blocks.

use num_integer::Integer;

use crate::fp_poly::prime_factors;
use crate::numeric::{hurwitz_zeta_progression, CompensatedSum, ComplexValue, PrecisionPolicy};
use crate::{par, Error, Result};

/// Largest modulus supported.
pub const MAX_MODULUS: u64 = 1_000_000;

const UNUSED: u32 = u32::MAX;

/// One cyclic factor of `(Z/M)*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitComponent {
    /// Residue mod `M` generating the factor.
    pub generator: u64,
    /// Multiplicative order of the generator.
    pub order: u64,
    /// The prime-power block `p^k` the factor lives in.
    pub block_modulus: u64,
}

#[derive(Debug, Clone)]
enum BlockLog {
    /// `table[x mod p^k] = log_g x`
    Cyclic { modulus: u64, table: Vec<u32> },
    /// `2^k`, `k ≥ 2`: x = (−1)^a 5^b; `five` is `None` for `k = 2`.
    TwoPower { modulus: u64, five: Option<Vec<u32>> },
}

/// `(Z/M)*` as a direct product of cyclic factors, with discrete-log tables.
#[derive(Debug, Clone)]
pub struct UnitGroupStructure {
    modulus: u64,
    components: Vec<UnitComponent>,
    blocks: Vec<BlockLog>,
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// `x ≡ r mod m`, `x ≡ 1 mod (modulus / m)`.
fn crt_lift(r: u64, m: u64, modulus: u64) -> u64 {
    let other = modulus / m;
    if other == 1 {
        return r % modulus;
    }
    // x = 1 + other * t with other * t ≡ r − 1 (mod m)
    let inv = (other as i64).extended_gcd(&(m as i64)).x.rem_euclid(m as i64) as u64;
    let t = ((r + m - 1) % m) * inv % m;
    (1 + other * t) % modulus
}

fn smallest_primitive_root(pk: u64, phi: u64) -> u64 {
    let rs = prime_factors(phi);
    (2..pk)
        .find(|&g| g.gcd(&pk) == 1 && rs.iter().all(|&r| pow_mod(g, phi / r, pk) != 1))
        .expect("odd prime powers have primitive roots")
}

/// Decomposes `(Z/M)*`.
pub fn unit_group_structure(modulus: u64) -> Result<UnitGroupStructure> {
    if modulus == 0 {
        return Err(Error::domain("modulus must be positive"));
    }
    if modulus > MAX_MODULUS {
        return Err(Error::size(format!("modulus {modulus} exceeds {MAX_MODULUS}")));
    }
    let mut components = Vec::new();
    let mut blocks = Vec::new();
    for p in prime_factors(modulus) {
        let mut pk = 1;
        while modulus % (pk * p) == 0 {
            pk *= p;
        }
        if p == 2 {
            if pk < 4 {
                continue;
            }
            components.push(UnitComponent {
                generator: crt_lift(pk - 1, pk, modulus),
                order: 2,
                block_modulus: pk,
            });
            let five = if pk >= 8 {
                let order = pk / 4;
                components.push(UnitComponent {
                    generator: crt_lift(5, pk, modulus),
                    order,
                    block_modulus: pk,
                });
                let mut table = vec![UNUSED; pk as usize];
                let mut x = 1;
                for e in 0..order {
                    table[x as usize] = e as u32;
                    x = x * 5 % pk;
                }
                Some(table)
            } else {
                None
            };
            blocks.push(BlockLog::TwoPower { modulus: pk, five });
        } else {
            let phi = pk / p * (p - 1);
            let g = smallest_primitive_root(pk, phi);
            components.push(UnitComponent {
                generator: crt_lift(g, pk, modulus),
                order: phi,
                block_modulus: pk,
            });
            let mut table = vec![UNUSED; pk as usize];
            let mut x = 1;
            for e in 0..phi {
                table[x as usize] = e as u32;
                x = x * g % pk;
            }
            blocks.push(BlockLog::Cyclic { modulus: pk, table });
        }
    }
    Ok(UnitGroupStructure {
        modulus,
        components,
        blocks,
    })
}

impl UnitGroupStructure {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn components(&self) -> &[UnitComponent] {
        &self.components
    }

    /// `φ(M)`.
    pub fn order(&self) -> u64 {
        self.components.iter().map(|c| c.order).product()
    }

    /// Exponents of `n` with respect to the generators, or `None` when
    /// `gcd(n, M) > 1`.
    pub fn discrete_logs(&self, n: i64) -> Option<Vec<u64>> {
        let m = self.modulus as i64;
        let r = n.rem_euclid(m) as u64;
        if r.gcd(&self.modulus) != 1 {
            return None;
        }
        let mut logs = Vec::with_capacity(self.components.len());
        for block in &self.blocks {
            match block {
                BlockLog::Cyclic { modulus, table } => {
                    logs.push(table[(r % modulus) as usize] as u64);
                }
                BlockLog::TwoPower { modulus, five } => {
                    let x = r % modulus;
                    let a = u64::from(x % 4 == 3);
                    logs.push(a);
                    if let Some(table) = five {
                        let y = if a == 1 { modulus - x } else { x };
                        logs.push(table[y as usize] as u64);
                    }
                }
            }
        }
        Some(logs)
    }

    /// All exponent vectors, in lexicographic order.
    pub fn exponent_vectors(&self) -> Vec<Vec<u64>> {
        let mut out: Vec<Vec<u64>> = vec![Vec::new()];
        for c in &self.components {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..c.order).map(move |e| {
                        let mut w = v.clone();
                        w.push(e);
                        w
                    })
                })
                .collect();
        }
        out
    }

    pub fn character(&self, exponents: Vec<u64>) -> Result<DirichletCharacter<'_>> {
        if exponents.len() != self.components.len()
            || exponents.iter().zip(&self.components).any(|(&e, c)| e >= c.order)
        {
            return Err(Error::domain(format!(
                "exponents {exponents:?} do not match the unit group of {}",
                self.modulus
            )));
        }
        Ok(DirichletCharacter {
            group: self,
            exponents,
        })
    }

    pub fn principal(&self) -> DirichletCharacter<'_> {
        DirichletCharacter {
            group: self,
            exponents: vec![0; self.components.len()],
        }
    }

    pub fn characters(&self) -> Vec<DirichletCharacter<'_>> {
        self.exponent_vectors()
            .into_iter()
            .map(|exponents| DirichletCharacter {
                group: self,
                exponents,
            })
            .collect()
    }
}

/// `χ(g_i) = e^{2πi e_i / order_i}`, extended by zero off the units.
#[derive(Debug, Clone)]
pub struct DirichletCharacter<'a> {
    group: &'a UnitGroupStructure,
    exponents: Vec<u64>,
}

/// `e^{2πi num/den}` with exact values at multiples of a quarter turn.
fn root_of_unity(num: u64, den: u64) -> ComplexValue {
    let num = num % den;
    if num == 0 {
        ComplexValue::new(1.0, 0.0)
    } else if 2 * num == den {
        ComplexValue::new(-1.0, 0.0)
    } else if 4 * num == den {
        ComplexValue::new(0.0, 1.0)
    } else if 4 * num == 3 * den {
        ComplexValue::new(0.0, -1.0)
    } else {
        let (s, c) = (std::f64::consts::TAU * num as f64 / den as f64).sin_cos();
        ComplexValue::new(c, s)
    }
}

impl<'a> DirichletCharacter<'a> {
    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn group(&self) -> &'a UnitGroupStructure {
        self.group
    }

    pub fn is_principal(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// The complex conjugate character.
    pub fn conj(&self) -> DirichletCharacter<'a> {
        DirichletCharacter {
            group: self.group,
            exponents: self
                .exponents
                .iter()
                .zip(&self.group.components)
                .map(|(&e, c)| (c.order - e) % c.order)
                .collect(),
        }
    }

    /// `χ(n)`; zero when `gcd(n, M) > 1`.
    pub fn evaluate(&self, n: i64) -> ComplexValue {
        let Some(logs) = self.group.discrete_logs(n) else {
            return ComplexValue::new(0.0, 0.0);
        };
        let den = self.group.components.iter().fold(1u64, |l, c| l.lcm(&c.order));
        let num = logs
            .iter()
            .zip(&self.exponents)
            .zip(&self.group.components)
            .fold(0u64, |acc, ((&l, &e), c)| {
                (acc + (l * e % c.order) * (den / c.order)) % den
            });
        root_of_unity(num, den)
    }
}

/// `L(s, χ) = M^{−s} Σ_{a=1}^{M} χ(a) ζ(s, a/M)`.
pub fn l_series(chi: &DirichletCharacter<'_>, s: f64, policy: &PrecisionPolicy) -> Result<ComplexValue> {
    if !s.is_finite() || s <= 1.0 {
        return Err(Error::domain(format!("L-series needs real s > 1, got {s}")));
    }
    let m = chi.modulus();
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for a in 1..=m {
        let c = chi.evaluate(a as i64);
        if c.re == 0.0 && c.im == 0.0 {
            continue;
        }
        let h = hurwitz_zeta_progression(s, a, m, policy)?;
        re += c.re * h;
        im += c.im * h;
    }
    Ok(ComplexValue::new(re.value(), im.value()))
}

/// Truncated Euler product `Π_{p ≤ bound} (1 − χ(p) p^{−s})^{−1}`.
pub fn l_series_euler_product(chi: &DirichletCharacter<'_>, s: f64, bound: u64) -> ComplexValue {
    crate::fp_poly::primes_up_to(bound)
        .into_iter()
        .map(|p| {
            let c = chi.evaluate(p as i64);
            (ComplexValue::new(1.0, 0.0) - c * (p as f64).powf(-s)).inv()
        })
        .fold(ComplexValue::new(1.0, 0.0), |acc, f| acc * f)
}

/// Direct partial sum `Σ_{n ≤ terms} χ(n) n^{−s}` and the bound
/// `terms^{1−s} / (s − 1)` on the omitted tail.
pub fn l_series_direct(chi: &DirichletCharacter<'_>, s: f64, terms: u64) -> (ComplexValue, f64) {
    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for n in (1..=terms).rev() {
        let c = chi.evaluate(n as i64);
        let w = (n as f64).powf(-s);
        re += c.re * w;
        im += c.im * w;
    }
    let tail = (terms as f64).powf(1.0 - s) / (s - 1.0);
    (ComplexValue::new(re.value(), im.value()), tail)
}

/// L-values of every character mod `M` at a list of integer points.
#[derive(Debug, Clone)]
pub struct LFingerprint {
    pub modulus: u64,
    pub s_values: Vec<u32>,
    /// `(exponent vector, [L(s, χ) for s in s_values])`, sorted by exponents.
    pub rows: Vec<(Vec<u64>, Vec<ComplexValue>)>,
}

pub fn l_fingerprint(modulus: u64, s_values: &[u32], policy: &PrecisionPolicy) -> Result<LFingerprint> {
    if let Some(&s) = s_values.iter().find(|&&s| s < 2) {
        return Err(Error::domain(format!("fingerprint points must be ≥ 2, got {s}")));
    }
    let group = unit_group_structure(modulus)?;
    let exps = group.exponent_vectors();
    let rows = par::map_slice(&exps, |e| {
        let chi = group.character(e.clone())?;
        let values = s_values
            .iter()
            .map(|&s| l_series(&chi, s as f64, policy))
            .collect::<Result<Vec<_>>>()?;
        Ok((e.clone(), values))
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(LFingerprint {
        modulus,
        s_values: s_values.to_vec(),
        rows,
    })
}

impl LFingerprint {
    /// Whether `L(χ) = L'(map(χ))` for every character, within `tol`.
    ///
    /// `map` sends an exponent vector of this table to one of `other`; it
    /// stands for the dual of a unit-group isomorphism.
    pub fn matches_under<F>(&self, other: &LFingerprint, map: F, tol: f64) -> bool
    where
        F: Fn(&[u64]) -> Vec<u64>,
    {
        if self.rows.len() != other.rows.len() || self.s_values != other.s_values {
            return false;
        }
        self.rows.iter().all(|(e, vals)| {
            let target = map(e);
            match other.rows.binary_search_by(|(k, _)| k.as_slice().cmp(&target)) {
                Ok(i) => vals
                    .iter()
                    .zip(&other.rows[i].1)
                    .all(|(a, b)| (a - b).norm() <= tol),
                Err(_) => false,
            }
        })
    }

    /// Multiset equality of the value rows, within `tol`, ignoring labels.
    pub fn same_values(&self, other: &LFingerprint, tol: f64) -> bool {
        if self.rows.len() != other.rows.len() || self.s_values != other.s_values {
            return false;
        }
        let mut used = vec![false; other.rows.len()];
        self.rows.iter().all(|(_, vals)| {
            let hit = other.rows.iter().enumerate().position(|(i, (_, w))| {
                !used[i] && vals.iter().zip(w).all(|(a, b)| (a - b).norm() <= tol)
            });
            match hit {
                Some(i) => {
                    used[i] = true;
                    true
                }
                None => false,
            }
        })
    }
}
