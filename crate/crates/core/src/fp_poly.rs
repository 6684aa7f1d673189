//! Dense polynomials over a prime field `F_p`, `p < 2^32`.
//!
//! Coefficient vectors are stored low-to-high degree and kept trimmed (no
//! trailing zeros); the zero polynomial is the empty vector.

use crate::{Error, Result};

/// Polynomial arithmetic modulo a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub type Poly = Vec<u64>;

impl PrimeField {
    /// `p` must be prime and below `2^32`; primality is checked.
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 {
            return Err(Error::size(format!("prime {p} exceeds 2^32")));
        }
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero residue (Fermat).
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    /// Reduces integer coefficients (given low-to-high) into the field.
    pub fn from_integers(&self, coeffs: &[i64]) -> Poly {
        let p = self.p as i64;
        let mut out: Poly = coeffs.iter().map(|&c| c.rem_euclid(p) as u64).collect();
        trim(&mut out);
        out
    }

    pub fn sub_poly(&self, a: &[u64], b: &[u64]) -> Poly {
        let n = a.len().max(b.len());
        let mut out: Poly = (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                self.sub(x, y)
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn mul_poly(&self, a: &[u64], b: &[u64]) -> Poly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        trim(&mut out);
        out
    }

    /// Quotient and remainder of `a` by nonzero `b`.
    pub fn div_rem(&self, a: &[u64], b: &[u64]) -> (Poly, Poly) {
        assert!(!b.is_empty(), "division by the zero polynomial");
        let mut rem = a.to_vec();
        trim(&mut rem);
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let lead_inv = self.inv(*b.last().unwrap());
        let db = b.len() - 1;
        let mut quot = vec![0u64; rem.len() - db];
        for i in (0..quot.len()).rev() {
            let c = self.mul(rem[i + db], lead_inv);
            quot[i] = c;
            if c != 0 {
                for (j, &bj) in b.iter().enumerate() {
                    rem[i + j] = self.sub(rem[i + j], self.mul(c, bj));
                }
            }
        }
        rem.truncate(db);
        trim(&mut rem);
        trim(&mut quot);
        (quot, rem)
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> Poly {
        self.div_rem(a, b).1
    }

    pub fn mul_mod(&self, a: &[u64], b: &[u64], m: &[u64]) -> Poly {
        self.rem(&self.mul_poly(a, b), m)
    }

    /// `base^exp mod m`.
    pub fn pow_mod(&self, base: &[u64], mut exp: u64, m: &[u64]) -> Poly {
        let mut acc = self.rem(&[1], m);
        let mut b = self.rem(base, m);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_mod(&acc, &b, m);
            }
            exp >>= 1;
            if exp > 0 {
                b = self.mul_mod(&b, &b, m);
            }
        }
        acc
    }

    pub fn make_monic(&self, a: &[u64]) -> Poly {
        match a.last() {
            None => Vec::new(),
            Some(&lead) => {
                let inv = self.inv(lead);
                a.iter().map(|&c| self.mul(c, inv)).collect()
            }
        }
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> Poly {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = y;
            y = r;
        }
        self.make_monic(&x)
    }

    pub fn derivative(&self, a: &[u64]) -> Poly {
        let mut out: Poly = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        trim(&mut out);
        out
    }

    /// Whether `gcd(f, f') = 1`, i.e. `f` is squarefree with nonzero degree
    /// contribution from every factor.
    pub fn is_separable(&self, f: &[u64]) -> bool {
        degree(&self.gcd(f, &self.derivative(f))) == Some(0)
    }

    /// Degrees of the irreducible factors of a monic separable `f`, by
    /// distinct-degree splitting, ascending.
    pub fn factor_degrees(&self, f: &[u64]) -> Vec<usize> {
        let mut rest = self.make_monic(f);
        let mut degrees = Vec::new();
        let x: Poly = vec![0, 1];
        let mut h = self.rem(&x, &rest); // x^{p^d} mod rest, d = 0
        let mut d = 0;
        while let Some(deg) = degree(&rest) {
            if deg < 2 * (d + 1) {
                if deg > 0 {
                    degrees.push(deg);
                }
                break;
            }
            d += 1;
            h = self.pow_mod(&h, self.p, &rest);
            let g = self.gcd(&rest, &self.sub_poly(&h, &x));
            let gd = degree(&g).unwrap_or(0);
            if gd > 0 {
                degrees.extend(std::iter::repeat_n(d, gd / d));
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
            }
        }
        degrees.sort_unstable();
        degrees
    }

    /// Rabin's test for a monic polynomial of degree ≥ 1.
    pub fn is_irreducible(&self, f: &[u64]) -> bool {
        let n = match degree(f) {
            None | Some(0) => return false,
            Some(n) => n,
        };
        if n == 1 {
            return true;
        }
        let x: Poly = vec![0, 1];
        // frob[k] = x^{p^k} mod f
        let mut frob = Vec::with_capacity(n + 1);
        frob.push(self.rem(&x, f));
        for k in 1..=n {
            let next = self.pow_mod(&frob[k - 1], self.p, f);
            frob.push(next);
        }
        if self.sub_poly(&frob[n], &self.rem(&x, f)) != Vec::<u64>::new() {
            return false;
        }
        prime_factors(n as u64).into_iter().all(|r| {
            let g = self.gcd(f, &self.sub_poly(&frob[n / r as usize], &x));
            degree(&g) == Some(0)
        })
    }
}

pub fn trim(a: &mut Poly) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Degree of a trimmed polynomial; `None` for zero.
pub fn degree(a: &[u64]) -> Option<usize> {
    if a.is_empty() {
        None
    } else {
        Some(a.len() - 1)
    }
}

/// Deterministic primality test by trial division (fine for `n < 2^40`).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Primes up to and including `bound`, by the sieve of Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u64))
        .collect()
}
