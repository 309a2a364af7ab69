//! Multiplicative number theory support: factorization against a prime
//! table, divisor enumeration and profiles, the modified divisor sum
//! `f(n) = Σ_{d|n} d/P⁺(d)`, and the prime product inequality scan.
//!
//! All values are exact; rationals are `num_rational::BigRational`.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    let l = (a / gcd(a, b)) as u128 * b as u128;
    u64::try_from(l).expect("lcm overflows u64")
}

pub(crate) fn rational(num: u64, den: u64) -> Rational {
    BigRational::new(BigUint::from(num).into(), BigUint::from(den).into())
}

pub(crate) fn rational_int(n: u64) -> Rational {
    BigRational::from_integer(BigUint::from(n).into())
}

/// Prime table from a linear sieve. Factorization accepts any `n` up to
/// `limit²` (one prime factor above the table is then provably prime);
/// larger inputs are rejected rather than factored probabilistically.
pub struct Sieve {
    limit: u64,
    spf: Vec<u32>,
    primes: Vec<u64>,
}

pub const DEFAULT_SIEVE_LIMIT: u64 = 1_000_000;

impl Sieve {
    pub fn new(limit: u64) -> Self {
        let limit = limit.max(3);
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut primes: Vec<u64> = Vec::new();
        for i in 2..=n {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u64);
            }
            for &p in &primes {
                let ip = i * p as usize;
                if p > spf[i] as u64 || ip > n {
                    break;
                }
                spf[ip] = p as u32;
            }
        }
        Self { limit, spf, primes }
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// i-th prime, 1-based: `nth_prime(1) = 2`.
    pub fn nth_prime(&self, i: usize) -> Result<u64> {
        self.primes
            .get(i.wrapping_sub(1))
            .copied()
            .ok_or(Error::SieveTooSmall {
                need: i,
                have: self.primes.len(),
            })
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        if n < 2 {
            return Ok(false);
        }
        if n <= self.limit {
            return Ok(self.spf[n as usize] as u64 == n);
        }
        if n > self.limit * self.limit {
            return Err(Error::BeyondFactorLimit {
                n,
                limit: self.limit * self.limit,
            });
        }
        for &p in &self.primes {
            if p * p > n {
                break;
            }
            if n % p == 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Prime factorization `n = ∏ p_i^{e_i}` with ascending primes.
    pub fn factorize(&self, n: u64) -> Result<Vec<(u64, u32)>> {
        if n == 0 {
            return Err(Error::NotPositive(0));
        }
        if n > self.limit * self.limit {
            return Err(Error::BeyondFactorLimit {
                n,
                limit: self.limit * self.limit,
            });
        }
        let mut out = Vec::new();
        let mut m = n;
        if m <= self.limit {
            while m > 1 {
                let p = self.spf[m as usize] as u64;
                let mut e = 0;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                out.push((p, e));
            }
            return Ok(out);
        }
        for &p in &self.primes {
            if p * p > m {
                break;
            }
            if m % p == 0 {
                let mut e = 0;
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                out.push((p, e));
            }
        }
        if m > 1 {
            out.push((m, 1));
            out.sort_unstable();
        }
        Ok(out)
    }
}

pub fn default_sieve() -> &'static Sieve {
    static SIEVE: OnceLock<Sieve> = OnceLock::new();
    SIEVE.get_or_init(|| Sieve::new(DEFAULT_SIEVE_LIMIT))
}

pub fn factorize(n: u64) -> Result<Vec<(u64, u32)>> {
    default_sieve().factorize(n)
}

pub fn is_prime(n: u64) -> Result<bool> {
    default_sieve().is_prime(n)
}

/// `P⁻(n)`: smallest prime divisor, 1 for n = 1.
pub fn smallest_prime_factor(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NotPositive(0));
    }
    if n == 1 {
        return Ok(1);
    }
    Ok(factorize(n)?[0].0)
}

/// `P⁺(n)`: greatest prime divisor, 1 for n = 1.
pub fn greatest_prime_factor(n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::NotPositive(0));
    }
    if n == 1 {
        return Ok(1);
    }
    Ok(factorize(n)?.last().unwrap().0)
}

/// `ν_p(n)`: exponent of the prime `p` in `n`.
pub fn p_adic_valuation(n: u64, p: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::NotPositive(0));
    }
    if !is_prime(p)? {
        return Err(Error::NotPrime(p));
    }
    let mut e = 0;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        e += 1;
    }
    Ok(e)
}

/// Sum of divisors `σ(n)`.
pub fn sigma(n: u64) -> Result<u64> {
    let mut s: u128 = 1;
    for (p, e) in factorize(n)? {
        let pe = (p as u128).pow(e + 1);
        s *= (pe - 1) / (p as u128 - 1);
    }
    u64::try_from(s).map_err(|_| Error::OrderOverflow)
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let mut divs = vec![1u64];
    for (p, e) in factorize(n)? {
        let prev = divs.clone();
        let mut pe = 1u64;
        for _ in 0..e {
            pe *= p;
            divs.extend(prev.iter().map(|d| d * pe));
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

/// The nontrivial divisors of `n` grouped by greatest prime factor, with
/// the cumulative prime-power products that bound each block.
///
/// For `n = 12`: primes `[2, 3]`, blocks `[{2,4}, {3,6,12}]`, cumulative
/// products `[4, 12]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorProfile {
    pub n: u64,
    /// Distinct primes `q_1 < ... < q_k` of `n`.
    pub primes: Vec<u64>,
    /// `ν_{q_i}(n)` for each prime.
    pub valuations: Vec<u32>,
    /// Block i: divisors `d > 1` of `n` with `P⁺(d) = q_i`, ascending.
    pub blocks: Vec<Vec<u64>>,
    /// `Δ_i = q_1^{α_1} ··· q_i^{α_i}`.
    pub cumulative: Vec<u64>,
}

pub fn divisor_profile(n: u64) -> Result<DivisorProfile> {
    let fac = factorize(n)?;
    let primes: Vec<u64> = fac.iter().map(|&(p, _)| p).collect();
    let valuations: Vec<u32> = fac.iter().map(|&(_, e)| e).collect();
    let mut blocks: Vec<Vec<u64>> = vec![Vec::new(); primes.len()];
    for d in divisors(n)? {
        if d == 1 {
            continue;
        }
        let q = greatest_prime_factor(d)?;
        let i = primes.iter().position(|&p| p == q).unwrap();
        blocks[i].push(d);
    }
    let mut cumulative = Vec::with_capacity(primes.len());
    let mut acc = 1u64;
    for (&p, &e) in primes.iter().zip(&valuations) {
        acc *= p.pow(e);
        cumulative.push(acc);
    }
    Ok(DivisorProfile {
        n,
        primes,
        valuations,
        blocks,
        cumulative,
    })
}

/// `f(n) = Σ_{d|n} d / P⁺(d)` with `P⁺(1) = 1`. Every term is an integer
/// because `P⁺(d)` divides `d`, so the rational is always integral; it is
/// returned as a rational to keep the definition visible at the type.
pub fn f_divisor_sum(n: u64) -> Result<Rational> {
    let mut s: u64 = 0;
    for d in divisors(n)? {
        s += d / greatest_prime_factor(d)?;
    }
    Ok(rational_int(s))
}

/// Closed form at prime powers: `f(q^a) = 1 + (q^a - 1)/(q - 1)`.
pub fn f_prime_power(q: u64, a: u32) -> Result<Rational> {
    if !is_prime(q)? {
        return Err(Error::NotPrime(q));
    }
    let qa = q
        .checked_pow(a)
        .ok_or(Error::OrderOverflow)?;
    Ok(rational_int(1) + rational(qa - 1, q - 1))
}

/// Checks `f(m·q^β) = f(m) + σ(m)·(q^β - 1)/(q - 1)` for a prime `q`
/// strictly above every prime factor of `m`.
pub fn f_recursion_check(m: u64, q: u64, beta: u32) -> Result<bool> {
    if !is_prime(q)? {
        return Err(Error::NotPrime(q));
    }
    if q <= greatest_prime_factor(m)? {
        return Err(Error::PreconditionViolated(format!(
            "need q > P+(m), got q = {q}, P+({m}) = {}",
            greatest_prime_factor(m)?
        )));
    }
    let qb = q.checked_pow(beta).ok_or(Error::OrderOverflow)?;
    let lhs = f_divisor_sum(m.checked_mul(qb).ok_or(Error::OrderOverflow)?)?;
    let rhs = f_divisor_sum(m)? + rational_int(sigma(m)?) * rational(qb - 1, q - 1);
    Ok(lhs == rhs)
}

/// `f(n)` for every `n ≤ limit` by a divisor-lattice sweep; `out[n] = f(n)`,
/// `out[0]` unused. Each value is an integer (see [`f_divisor_sum`]).
pub fn f_batch(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut gpf = vec![1u64; n + 1];
    for i in 2..=n {
        if gpf[i] == 1 {
            let mut m = i;
            while m <= n {
                gpf[m] = i as u64;
                m += i;
            }
        }
    }
    let mut f = vec![0u64; n + 1];
    for d in 1..=n {
        let g = d as u64 / gpf[d];
        let mut m = d;
        while m <= n {
            f[m] += g;
            m += d;
        }
    }
    f
}

/// One row of the prime product scan: the exact product
/// `∏_{i≤ℓ} p_i/(p_i - 1)` compared against `p_{ℓ+1} - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimesProductRow {
    pub ell: usize,
    /// Integer part of the product (the product itself stays below the
    /// bound, so this fits easily).
    pub product_floor: u64,
    pub bound: u64,
    pub holds: bool,
}

/// Exact check of `∏_{i≤ℓ} (1 + 1/(p_i - 1)) ≤ p_{ℓ+1} - 1` for one `ℓ`.
pub struct PrimesProductCheck {
    pub ell: usize,
    pub product: Rational,
    pub bound: u64,
    pub holds: bool,
}

pub fn primes_product_inequality(ell: usize) -> Result<PrimesProductCheck> {
    if ell == 0 {
        return Err(Error::NotPositive(0));
    }
    let sieve = default_sieve();
    let next = sieve.nth_prime(ell + 1)?;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=ell {
        let p = sieve.nth_prime(i)?;
        num *= BigUint::from(p);
        den *= BigUint::from(p - 1);
    }
    let bound = next - 1;
    let holds = num <= &den * BigUint::from(bound);
    Ok(PrimesProductCheck {
        ell,
        product: BigRational::new(num.into(), den.into()),
        bound,
        holds,
    })
}

/// Incremental scan of the product inequality for every `ℓ ≤ max_ell`.
pub fn primes_product_scan(max_ell: usize) -> Result<Vec<PrimesProductRow>> {
    if max_ell == 0 {
        return Err(Error::NotPositive(0));
    }
    let sieve = default_sieve();
    sieve.nth_prime(max_ell + 1)?;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    let mut rows = Vec::with_capacity(max_ell);
    for ell in 1..=max_ell {
        let p = sieve.nth_prime(ell)?;
        num *= BigUint::from(p);
        den *= BigUint::from(p - 1);
        let bound = sieve.nth_prime(ell + 1)? - 1;
        let holds = num <= &den * BigUint::from(bound);
        let product_floor = (&num / &den)
            .to_u64()
            .expect("product below a u64 prime bound");
        rows.push(PrimesProductRow {
            ell,
            product_floor,
            bound,
            holds,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_and_primality() {
        assert_eq!(factorize(1).unwrap(), vec![]);
        assert_eq!(factorize(12).unwrap(), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97).unwrap(), vec![(97, 1)]);
        assert!(factorize(0).is_err());
        assert!(is_prime(2).unwrap());
        assert!(!is_prime(1).unwrap());
        assert!(!is_prime(0).unwrap());
        assert!(is_prime(999_983).unwrap());
        assert!(is_prime(1_000_003).unwrap());
        assert_eq!(
            factorize(999_983 * 1_000_003).unwrap(),
            vec![(999_983, 1), (1_000_003, 1)]
        );
        let limit = DEFAULT_SIEVE_LIMIT;
        assert!(factorize(limit * limit + 1).is_err());
    }

    #[test]
    fn prime_factor_extremes() {
        assert_eq!(smallest_prime_factor(1).unwrap(), 1);
        assert_eq!(greatest_prime_factor(1).unwrap(), 1);
        assert_eq!(smallest_prime_factor(12).unwrap(), 2);
        assert_eq!(greatest_prime_factor(12).unwrap(), 3);
        assert_eq!(greatest_prime_factor(97).unwrap(), 97);
    }

    #[test]
    fn valuation_and_sigma() {
        assert_eq!(p_adic_valuation(12, 2).unwrap(), 2);
        assert_eq!(p_adic_valuation(12, 3).unwrap(), 1);
        assert_eq!(p_adic_valuation(12, 5).unwrap(), 0);
        assert!(p_adic_valuation(12, 4).is_err());
        assert_eq!(sigma(1).unwrap(), 1);
        assert_eq!(sigma(6).unwrap(), 12);
        assert_eq!(sigma(12).unwrap(), 28);
    }

    #[test]
    fn divisor_lists_and_profile() {
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        let p = divisor_profile(12).unwrap();
        assert_eq!(p.primes, vec![2, 3]);
        assert_eq!(p.valuations, vec![2, 1]);
        assert_eq!(p.blocks, vec![vec![2, 4], vec![3, 6, 12]]);
        assert_eq!(p.cumulative, vec![4, 12]);
        let q = divisor_profile(1).unwrap();
        assert!(q.primes.is_empty() && q.blocks.is_empty());
    }

    #[test]
    fn divisor_sum_function() {
        assert_eq!(f_divisor_sum(12).unwrap(), rational_int(11));
        assert_eq!(f_divisor_sum(1).unwrap(), rational_int(1));
        assert_eq!(f_divisor_sum(6).unwrap(), rational_int(5));
        for n in 1..=500u64 {
            assert!(f_divisor_sum(n).unwrap() <= rational_int(n), "f({n}) > {n}");
        }
    }

    #[test]
    fn divisor_sum_closed_forms() {
        assert_eq!(f_prime_power(2, 3).unwrap(), f_divisor_sum(8).unwrap());
        assert_eq!(f_prime_power(3, 2).unwrap(), rational_int(5));
        assert!(f_prime_power(6, 2).is_err());
        assert!(f_recursion_check(12, 5, 2).unwrap());
        assert!(f_recursion_check(1, 2, 3).unwrap());
        assert!(f_recursion_check(12, 3, 1).is_err());
        assert!(f_recursion_check(12, 4, 1).is_err());
    }

    #[test]
    fn batch_matches_single() {
        let f = f_batch(300);
        for n in 1..=300u64 {
            assert_eq!(rational_int(f[n as usize]), f_divisor_sum(n).unwrap());
        }
    }

    #[test]
    fn prime_product_inequality_examples() {
        let c = primes_product_inequality(4).unwrap();
        assert_eq!(c.product, rational(35, 8));
        assert_eq!(c.bound, 10);
        assert!(c.holds);
        let rows = primes_product_scan(50).unwrap();
        assert_eq!(rows.len(), 50);
        assert!(rows.iter().all(|r| r.holds));
        assert_eq!(rows[0], PrimesProductRow { ell: 1, product_floor: 2, bound: 2, holds: true });
        assert_eq!(rows[3].product_floor, 4);
        assert_eq!(rows[3].bound, 10);
        assert!(primes_product_scan(0).is_err());
    }

    #[test]
    fn nth_prime_bounds() {
        let s = default_sieve();
        assert_eq!(s.nth_prime(1).unwrap(), 2);
        assert_eq!(s.nth_prime(5).unwrap(), 11);
        assert_eq!(s.nth_prime(10_001).unwrap(), 104_743);
        assert!(s.nth_prime(100_000).is_err());
        assert!(matches!(s.nth_prime(0), Err(Error::SieveTooSmall { .. })));
    }

    #[test]
    fn gcd_lcm_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 7), 7);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(lcm(0, 5), 0);
    }
}
