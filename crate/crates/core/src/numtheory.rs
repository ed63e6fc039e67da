//! Exact 64-bit integer arithmetic: factorization, totients, radicals,
//! the ψ function, multiplicative orders and CRT-based unit search.
//!
//! Everything here is a pure function. Modular products go through `u128`
//! and any result that would not fit in a `u64` is reported as
//! [`NumError::Overflow`].

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Inputs to [`psi`] above this bound are rejected.
pub const PSI_INPUT_CAP: u64 = 1_000_000_000;

/// Largest accepted input to [`factorize`].
pub const FACTORIZE_MAX: u64 = i64::MAX as u64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("input must be a positive integer")]
    Zero,
    #[error("{0} exceeds the supported range (2^63 - 1)")]
    OutOfRange(u64),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("psi input {0} exceeds the cap {PSI_INPUT_CAP}")]
    PsiCapExceeded(u64),
    #[error("{r} is not a unit modulo {n}")]
    NotAUnit { r: u64, n: u64 },
    #[error("moduli {a} and {b} are not coprime")]
    ModuliNotCoprime { a: u64, b: u64 },
    #[error("{divisor} does not divide {modulus}")]
    NotADivisor { divisor: u64, modulus: u64 },
}

pub type Result<T> = std::result::Result<T, NumError>;

/// Prime-power decomposition of a positive integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeFactorization {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    pub fn value(&self) -> u64 {
        self.value
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in the factorization (0 when `p` does not divide).
    pub fn valuation(&self, p: u64) -> u32 {
        self.factors
            .iter()
            .find(|&&(q, _)| q == p)
            .map_or(0, |&(_, e)| e)
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// The single prime when the value is a prime power `p^e`, `e >= 1`.
    pub fn prime_power_base(&self) -> Option<u64> {
        match self.factors.as_slice() {
            [(p, _)] => Some(*p),
            _ => None,
        }
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn is_cube_free(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e <= 2)
    }

    pub fn euler_phi(&self) -> u64 {
        // Cannot overflow: the result is at most `value`.
        self.factors
            .iter()
            .map(|&(p, e)| p.pow(e - 1) * (p - 1))
            .product()
    }

    pub fn radical(&self) -> u64 {
        self.primes().product()
    }

    /// All positive divisors in increasing order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut divs = vec![1u64];
        for &(p, e) in &self.factors {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, &(p, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

#[inline]
pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = base % m;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for the full `u64` range.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Trial division by 2, 3 and then `6k ± 1`, stopping as soon as the
/// remaining cofactor is prime.
pub fn factorize(n: u64) -> Result<PrimeFactorization> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    if n > FACTORIZE_MAX {
        return Err(NumError::OutOfRange(n));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut strip = |p: u64, rest: &mut u64| {
        let mut e = 0;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
        e > 0
    };
    strip(2, &mut rest);
    strip(3, &mut rest);
    let mut k = 5u64;
    let mut cofactor_prime = is_prime(rest);
    while rest > 1 && !cofactor_prime && k.saturating_mul(k) <= rest {
        let hit = strip(k, &mut rest) | strip(k + 2, &mut rest);
        if hit {
            cofactor_prime = is_prime(rest);
        }
        k += 6;
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(PrimeFactorization { value: n, factors })
}

pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(factorize(n)?.euler_phi())
}

pub fn radical(n: u64) -> Result<u64> {
    Ok(factorize(n)?.radical())
}

/// `ψ(p^e) = ∏_{i=1..e} (p^i − 1)`, extended multiplicatively, `ψ(1) = 1`.
pub fn psi(n: u64) -> Result<u64> {
    if n > PSI_INPUT_CAP {
        return Err(NumError::PsiCapExceeded(n));
    }
    let fac = factorize(n)?;
    let mut acc = 1u64;
    for &(p, e) in fac.factors() {
        let mut pi = 1u64;
        for _ in 0..e {
            pi *= p;
            acc = acc.checked_mul(pi - 1).ok_or(NumError::Overflow("psi"))?;
        }
    }
    Ok(acc)
}

/// Below this modulus the order is found by direct iteration.
const ORDER_ITERATION_THRESHOLD: u64 = 64;

/// Smallest `k >= 1` with `r^k ≡ 1 (mod n)`.
pub fn multiplicative_order(r: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(NumError::Zero);
    }
    if gcd(r % n, n) != 1 {
        return Err(NumError::NotAUnit { r, n });
    }
    if n == 1 {
        return Ok(1);
    }
    let r = r % n;
    if n <= ORDER_ITERATION_THRESHOLD {
        let (mut k, mut x) = (1, r);
        while x != 1 {
            x = mul_mod(x, r, n);
            k += 1;
        }
        return Ok(k);
    }
    let group_order = factorize(n)?.euler_phi();
    let mut order = group_order;
    for &(p, _) in factorize(group_order)?.factors() {
        while order % p == 0 && pow_mod(r, order / p, n) == 1 {
            order /= p;
        }
    }
    Ok(order)
}

/// Extended Euclid on signed values: returns `(g, x)` with `a·x ≡ g (mod b)`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r, old_s)
}

/// Solves the simultaneous congruences `x ≡ residue (mod modulus)`.
///
/// The moduli must be pairwise coprime; the returned value lies in
/// `[0, ∏ moduli)`.
pub fn crt_combine(residues: &[(u64, u64)]) -> Result<u64> {
    let mut acc = 0u64;
    let mut modulus = 1u64;
    for &(res, m) in residues {
        if m == 0 {
            return Err(NumError::Zero);
        }
        if gcd(modulus, m) != 1 {
            return Err(NumError::ModuliNotCoprime { a: modulus, b: m });
        }
        let res = res % m;
        let next_modulus = modulus
            .checked_mul(m)
            .ok_or(NumError::Overflow("crt modulus"))?;
        // acc + modulus * t ≡ res (mod m)
        let (_, inv) = ext_gcd(modulus as i128 % m as i128, m as i128);
        let inv = inv.rem_euclid(m as i128) as u64;
        let diff = (res as i128 - acc as i128).rem_euclid(m as i128) as u64;
        let t = mul_mod(diff, inv, m);
        acc = (acc as u128 + modulus as u128 * t as u128) as u64;
        modulus = next_modulus;
    }
    debug_assert!(residues.iter().all(|&(r, m)| acc % m == r % m));
    Ok(acc)
}

/// Smallest unit `r` modulo `modulus` with `r^exponent ≡ 1 (mod modulus)`
/// and `r ≢ 1 (mod nontrivial_mod)`, or `None` if there is none.
pub fn find_unit(modulus: u64, exponent: u64, nontrivial_mod: u64) -> Result<Option<u64>> {
    if modulus == 0 || nontrivial_mod == 0 {
        return Err(NumError::Zero);
    }
    if modulus % nontrivial_mod != 0 {
        return Err(NumError::NotADivisor {
            divisor: nontrivial_mod,
            modulus,
        });
    }
    Ok((2..modulus).find(|&r| {
        gcd(r, modulus) == 1
            && pow_mod(r, exponent, modulus) == 1
            && r % nontrivial_mod != 1 % nontrivial_mod
    }))
}
