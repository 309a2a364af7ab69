//! Closed-form bounds and reductions for the zero-sum invariants, with a
//! registry for the rank constants `c_r` and assembled consistency
//! reports.
//!
//! All rationals are exact. Integer-valued bounds derived from a
//! non-integral `c_r` are rounded up, which preserves their validity as
//! upper bounds.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::arith::{self, Rational};
use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;

fn ratio(num: u64, den: u64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn integer(n: u64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

fn ceil_to_u64(r: &Rational) -> Result<u64> {
    r.ceil().to_integer().to_u64().ok_or(Error::OrderOverflow)
}

/// How a `c_r` entry entered the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Proven,
    Configured,
}

/// Per-rank constants `c_r` for the bound formulas. Ranks 1 and 2 are
/// preloaded with the proven values 1 and 3; higher ranks must be
/// configured explicitly, and asking for an absent rank is an error.
#[derive(Debug, Clone)]
pub struct ConstantRegistry {
    entries: BTreeMap<usize, (Rational, Provenance)>,
}

impl Default for ConstantRegistry {
    fn default() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(1, (integer(1), Provenance::Proven));
        entries.insert(2, (integer(3), Provenance::Proven));
        Self { entries }
    }
}

impl ConstantRegistry {
    pub fn get(&self, rank: usize) -> Result<&Rational> {
        self.entries
            .get(&rank)
            .map(|(v, _)| v)
            .ok_or(Error::MissingConstant(rank))
    }

    pub fn provenance(&self, rank: usize) -> Option<Provenance> {
        self.entries.get(&rank).map(|&(_, p)| p)
    }

    /// Configures `c_rank`. The preloaded proven values cannot be
    /// lowered; a larger value for rank 1 or 2 is accepted (still a
    /// valid constant, merely weaker).
    pub fn set(&mut self, rank: usize, value: Rational) -> Result<()> {
        if !value.is_positive() {
            return Err(Error::PreconditionViolated(format!(
                "c_{rank} must be positive"
            )));
        }
        if let Some((proven, Provenance::Proven)) = self.entries.get(&rank) {
            if value < *proven {
                return Err(Error::ConstantBelowProven {
                    rank,
                    value: value.to_string(),
                    proven: proven.to_string(),
                });
            }
        }
        self.entries.insert(rank, (value, Provenance::Configured));
        Ok(())
    }
}

/// `(2^r - 1)(n - 1) + 1`, the homocyclic lower bound for `η(C_n^r)`.
pub fn eta_lower_bound(r: usize, n: u64) -> Result<u64> {
    if r < 1 || n < 2 {
        return Err(Error::PreconditionViolated(format!(
            "homocyclic lower bound needs r >= 1 and n >= 2, got r = {r}, n = {n}"
        )));
    }
    if r > 62 {
        return Err(Error::OrderOverflow);
    }
    let v = ((1u128 << r) - 1) * (n as u128 - 1) + 1;
    u64::try_from(v).map_err(|_| Error::OrderOverflow)
}

/// Lower bound for `η(G)` and `t(G)` on an arbitrary group: the
/// homocyclic bound of the subgroup `C_exp^s` spanned by the invariant
/// factors equal to the exponent. That subgroup shares the exponent of
/// `G`, so its short-zero-sum-avoiding sequences stay avoiding in `G`.
pub fn eta_lower_bound_group(g: &FiniteAbelianGroup) -> Result<u64> {
    let exp = g.exponent();
    if exp == 1 {
        return Ok(1);
    }
    let s = g
        .invariant_factors()
        .iter()
        .filter(|&&f| f == exp)
        .count();
    eta_lower_bound(s, exp)
}

/// `η(C_m ⊕ C_n) = 2m + n - 2` for `m | n` (with `m = 1` the cyclic
/// `η(C_n) = n`).
pub fn eta_rank_two(m: u64, n: u64) -> Result<u64> {
    if m < 1 || n < m || n % m != 0 {
        return Err(Error::NotDivisible { m, n });
    }
    Ok(2 * m + n - 2)
}

/// `D(C_{p^α_1} ⊕ ... ⊕ C_{p^α_r}) = Σ(p^α_i - 1) + 1`.
pub fn davenport_pgroup(p: u64, alphas: &[u32]) -> Result<u64> {
    if !arith::is_prime(p)? {
        return Err(Error::NotPrime(p));
    }
    if alphas.iter().any(|&a| a == 0) {
        return Err(Error::NotPositive(0));
    }
    let mut acc: u64 = 1;
    for &a in alphas {
        let pa = p.checked_pow(a).ok_or(Error::OrderOverflow)?;
        acc = acc.checked_add(pa - 1).ok_or(Error::OrderOverflow)?;
    }
    Ok(acc)
}

/// Closed-form Davenport constant where one is known: cyclic groups
/// (`D(C_n) = n`) and p-groups.
pub fn davenport_formula(g: &FiniteAbelianGroup) -> Result<Option<u64>> {
    if g.is_trivial() {
        return Ok(Some(1));
    }
    if g.rank() == 1 {
        return Ok(Some(g.exponent()));
    }
    if let Some(p) = g.p_group_prime() {
        let alphas: Vec<u32> = g
            .invariant_factors()
            .iter()
            .map(|&f| arith::p_adic_valuation(f, p))
            .collect::<Result<_>>()?;
        return Ok(Some(davenport_pgroup(p, &alphas)?));
    }
    Ok(None)
}

fn check_divisor_pair(g: &FiniteAbelianGroup, d_prime: u64, d: u64) -> Result<()> {
    let exponent = g.exponent();
    if d == 0 || exponent % d != 0 {
        return Err(Error::NotDivisorOfExponent { d, exponent });
    }
    if d_prime == 0 || d % d_prime != 0 {
        return Err(Error::InvalidDivisorPair {
            d_prime,
            d,
            exponent,
        });
    }
    Ok(())
}

/// The reduction target for `η_(d',d)(G)`: the group
/// `C_{υ_1} ⊕ ... ⊕ C_{υ_r}` with `υ_i = A_i / gcd(A_i, B_i)`,
/// `A_i = gcd(d', n_i)`, `B_i = lcm(d, n_i)/lcm(d', n_i)` (trivial
/// components vanish under normalization; the last `υ` is always `d'`).
pub fn upsilon_group(g: &FiniteAbelianGroup, d_prime: u64, d: u64) -> Result<FiniteAbelianGroup> {
    check_divisor_pair(g, d_prime, d)?;
    let mut upsilon = Vec::with_capacity(g.rank());
    for &n_i in g.invariant_factors() {
        let a = arith::gcd(d_prime, n_i);
        let b = arith::lcm(d, n_i) / arith::lcm(d_prime, n_i);
        upsilon.push(a / arith::gcd(a, b));
    }
    if let Some(&last) = upsilon.last() {
        debug_assert_eq!(last, d_prime);
    }
    FiniteAbelianGroup::from_moduli(&upsilon)
}

/// `η_(d',d)(G) ≤ c_r(d' - 1) + 1`, rounded up for non-integral `c_r`.
pub fn eta_pair_upper(
    g: &FiniteAbelianGroup,
    d_prime: u64,
    d: u64,
    registry: &ConstantRegistry,
) -> Result<u64> {
    check_divisor_pair(g, d_prime, d)?;
    if d_prime == 1 {
        return Ok(1);
    }
    let c = registry.get(g.rank())?;
    Ok(ceil_to_u64(&(c * integer(d_prime - 1)))? + 1)
}

/// Removes every copy of the largest prime factor: `d / P⁺(d)^{ν}`.
fn strip_top_prime(d: u64) -> Result<u64> {
    let fac = arith::factorize(d)?;
    match fac.last() {
        Some(&(p, e)) => Ok(d / p.pow(e)),
        None => Ok(1),
    }
}

fn main_bound_divisor_sum(n: u64) -> Result<u64> {
    let mut s = 0u64;
    for d in arith::divisors(n)? {
        s += strip_top_prime(d)? - 1;
    }
    Ok(s)
}

/// `t(G) ≤ c_r Σ_{d|n}(d/P⁺(d)^{ν_{P⁺(d)}(d)} - 1) + c_r(n-1) + 1`,
/// rounded up for non-integral `c_r`.
pub fn t_main_bound(g: &FiniteAbelianGroup, registry: &ConstantRegistry) -> Result<u64> {
    let n = g.exponent();
    if n == 1 {
        return Ok(1);
    }
    let c = registry.get(g.rank())?;
    let s = main_bound_divisor_sum(n)?;
    Ok(ceil_to_u64(&(c * integer(s + n - 1)))? + 1)
}

/// `t(G) ≤ 2c_r(n - 1) + 1`, rounded up for non-integral `c_r`.
pub fn t_linear_bound(r: usize, n: u64, registry: &ConstantRegistry) -> Result<u64> {
    if n == 1 {
        return Ok(1);
    }
    let c = registry.get(r)?;
    Ok(ceil_to_u64(&(c * integer(2 * (n - 1))))? + 1)
}

/// For a p-group the main bound collapses to `c_r(p^α - 1) + 1` because
/// every divisor of the exponent is a power of `p`.
pub fn t_pgroup_bound(
    g: &FiniteAbelianGroup,
    registry: &ConstantRegistry,
) -> Result<Option<u64>> {
    if g.p_group_prime().is_none() {
        return Ok(None);
    }
    let c = registry.get(g.rank())?;
    Ok(Some(ceil_to_u64(&(c * integer(g.exponent() - 1)))? + 1))
}

/// `ρ(G) ≤ c_r Σ_{d|n} (P⁻(d) - 1)/d` as an exact rational (`d = 1`
/// contributes nothing since `P⁻(1) = 1`).
pub fn rho_divisor_bound(r: usize, n: u64, registry: &ConstantRegistry) -> Result<Rational> {
    if n == 1 {
        return Ok(integer(0));
    }
    let c = registry.get(r)?;
    let mut s = integer(0);
    for d in arith::divisors(n)? {
        let p = arith::smallest_prime_factor(d)?;
        s += ratio(p - 1, d);
    }
    Ok(c * s)
}

/// `ρ(G) ≤ |G| / P⁻(exp(G))`.
pub fn rho_gs_bound(g: &FiniteAbelianGroup) -> Result<Rational> {
    let p = arith::smallest_prime_factor(g.exponent())?;
    Ok(ratio(g.order(), p))
}

/// Supplies `η_(d',d)(G)` values for the polytope bound, either exactly
/// (a search) or through the `c_r(d'-1)+1` estimate. Values are rational
/// so that estimate-based evaluation stays exact for fractional `c_r`.
pub trait PairValues {
    fn eta_pair(&self, g: &FiniteAbelianGroup, d_prime: u64, d: u64) -> Result<Rational>;
}

/// The `c_r(d'-1)+1` estimate as a pair-value source.
pub struct BoundedPairValues<'a>(pub &'a ConstantRegistry);

impl PairValues for BoundedPairValues<'_> {
    fn eta_pair(&self, g: &FiniteAbelianGroup, d_prime: u64, d: u64) -> Result<Rational> {
        check_divisor_pair(g, d_prime, d)?;
        if d_prime == 1 {
            return Ok(integer(1));
        }
        let c = self.0.get(g.rank())?;
        Ok(c * integer(d_prime - 1) + integer(1))
    }
}

/// `ρ(G) ≤ Σ_{d|n, d>1} (min_{d'|d, d'>1} η_(d',d)(G) - 1)/d`.
///
/// The feasible region for per-stratum counts is a box, so the linear
/// objective peaks at the upper corner and no solver is needed; the
/// `d = 1` stratum is absent because an avoiding sequence contains no
/// identity elements.
pub fn rho_polytope_bound(
    g: &FiniteAbelianGroup,
    source: &dyn PairValues,
) -> Result<Rational> {
    let n = g.exponent();
    let mut total = integer(0);
    for d in arith::divisors(n)? {
        if d == 1 {
            continue;
        }
        let mut cap: Option<Rational> = None;
        for d_prime in arith::divisors(d)? {
            if d_prime == 1 {
                continue;
            }
            let v = source.eta_pair(g, d_prime, d)?;
            if cap.as_ref().map_or(true, |c| v < *c) {
                cap = Some(v);
            }
        }
        let cap = cap.expect("every d > 1 has a divisor > 1");
        total += (cap - integer(1)) / integer(d);
    }
    Ok(total)
}

/// `η(G) ≤ D(G) + exp(G) - 1` for p-groups whose formula Davenport
/// constant satisfies `D(G) ≤ 2·exp(G) - 1`; absent when the condition
/// fails.
pub fn eta_from_davenport(g: &FiniteAbelianGroup) -> Result<Option<u64>> {
    if g.p_group_prime().is_none() {
        return Err(Error::NotPGroup);
    }
    let d = davenport_formula(g)?.expect("p-groups have a formula value");
    let exp = g.exponent();
    if d <= 2 * exp - 1 {
        Ok(Some(d + exp - 1))
    } else {
        Ok(None)
    }
}

/// Witness that rank-`r` groups can separate `t` from `η`: for
/// `G = C_3^{r-1} ⊕ C_{3^α}` with `3^α` in the window
/// `[2r-1, 2^r - r]`, the chain
/// `η(G) ≤ 2r + 2·3^α - 3 < 2^{r+1} - 1 ≤ η(C_3^r)` holds, and since
/// tiny-zero-sum avoidance passes from the subgroup `C_3^r` (where
/// tiny and short coincide) to `G`, it follows that `t(G) > η(G)`.
#[derive(Debug, Clone)]
pub struct RankGapCertificate {
    pub r: usize,
    pub alpha: u32,
    /// `C_3^{r-1} ⊕ C_{3^α}`, the group with the small `η`.
    pub group: FiniteAbelianGroup,
    /// `C_3^r`, embedded in `group` since `3 | 3^α`.
    pub subgroup: FiniteAbelianGroup,
    /// `2r + 2·3^α - 3`, an upper bound for `η(group)`.
    pub eta_upper: u64,
    /// `2^{r+1} - 1`, a lower bound for `η(subgroup)` and hence for
    /// `t(group)`.
    pub eta_lower: u64,
    pub chain_holds: bool,
}

pub fn rank_gap_certificate(r: usize) -> Result<RankGapCertificate> {
    if r < 4 {
        return Err(Error::GapRankTooSmall(r));
    }
    if r > 62 {
        return Err(Error::GapRankTooLarge(r));
    }
    let lo = 2 * r as u64 - 1;
    let hi = (1u64 << r) - r as u64;
    let mut alpha = 0u32;
    let mut pow3 = 1u64;
    while pow3 < lo {
        alpha += 1;
        pow3 = pow3.checked_mul(3).ok_or(Error::OrderOverflow)?;
    }
    if pow3 > hi {
        return Err(Error::GapWindowEmpty(r));
    }
    let mut moduli = vec![3u64; r - 1];
    moduli.push(pow3);
    let group = FiniteAbelianGroup::from_moduli(&moduli)?;
    let subgroup = FiniteAbelianGroup::from_moduli(&vec![3u64; r])?;
    let eta_upper = 2 * r as u64 + 2 * pow3 - 3;
    debug_assert_eq!(eta_from_davenport(&group)?, Some(eta_upper));
    let eta_lower = eta_lower_bound(r, 3)?;
    Ok(RankGapCertificate {
        r,
        alpha,
        group,
        subgroup,
        eta_upper,
        eta_lower,
        chain_holds: eta_upper < eta_lower,
    })
}

#[derive(Debug, Clone)]
pub struct BoundReportOptions {
    /// Run the searches and include their values; bounds alone otherwise.
    pub compute_exact: bool,
    pub search: crate::search::SearchOptions,
    pub registry: ConstantRegistry,
}

impl Default for BoundReportOptions {
    fn default() -> Self {
        BoundReportOptions {
            compute_exact: true,
            search: crate::search::SearchOptions::default(),
            registry: ConstantRegistry::default(),
        }
    }
}

/// Every closed-form bound the registry can evaluate for one group,
/// next to the exact values when the searches finished within budget.
/// Absent fields are inapplicable (wrong rank, not a p-group, missing
/// constant) or, for exact values, out of budget.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub group: FiniteAbelianGroup,
    pub davenport_exact: Option<u64>,
    pub eta_exact: Option<u64>,
    pub t_exact: Option<u64>,
    pub rho_exact: Option<Rational>,
    pub eta_lower: Option<u64>,
    pub eta_rank_two: Option<u64>,
    pub t_main: Option<u64>,
    pub t_linear: Option<u64>,
    pub t_pgroup: Option<u64>,
    pub davenport_formula: Option<u64>,
    pub eta_from_davenport: Option<u64>,
    pub rho_divisor: Option<Rational>,
    pub rho_polytope: Option<Rational>,
    pub rho_gs: Rational,
    pub cardinality: u64,
}

/// One recomputed consistency check; `holds: None` when a constituent
/// is absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyFlag {
    pub name: &'static str,
    pub holds: Option<bool>,
}

fn le_flag(name: &'static str, a: Option<u64>, b: Option<u64>) -> ConsistencyFlag {
    ConsistencyFlag {
        name,
        holds: a.zip(b).map(|(x, y)| x <= y),
    }
}

fn eq_flag(name: &'static str, a: Option<u64>, b: Option<u64>) -> ConsistencyFlag {
    ConsistencyFlag {
        name,
        holds: a.zip(b).map(|(x, y)| x == y),
    }
}

fn le_flag_q(name: &'static str, a: Option<&Rational>, b: Option<&Rational>) -> ConsistencyFlag {
    ConsistencyFlag {
        name,
        holds: a.zip(b).map(|(x, y)| x <= y),
    }
}

impl BoundReport {
    /// Recomputes every sandwich from the stored values.
    pub fn flags(&self) -> Vec<ConsistencyFlag> {
        vec![
            le_flag("eta_lower_le_eta_exact", self.eta_lower, self.eta_exact),
            eq_flag("eta_exact_eq_eta_rank_two", self.eta_exact, self.eta_rank_two),
            le_flag("eta_exact_le_t_exact", self.eta_exact, self.t_exact),
            le_flag("davenport_exact_le_t_exact", self.davenport_exact, self.t_exact),
            le_flag("t_exact_le_t_main", self.t_exact, self.t_main),
            le_flag("t_main_le_t_linear", self.t_main, self.t_linear),
            le_flag("t_exact_le_t_pgroup", self.t_exact, self.t_pgroup),
            le_flag(
                "t_exact_le_cardinality",
                self.t_exact,
                Some(self.cardinality),
            ),
            eq_flag(
                "davenport_exact_eq_davenport_formula",
                self.davenport_exact,
                self.davenport_formula,
            ),
            le_flag(
                "eta_exact_le_eta_from_davenport",
                self.eta_exact,
                self.eta_from_davenport,
            ),
            le_flag_q(
                "rho_exact_le_rho_polytope",
                self.rho_exact.as_ref(),
                self.rho_polytope.as_ref(),
            ),
            le_flag_q(
                "rho_polytope_le_rho_gs",
                self.rho_polytope.as_ref(),
                Some(&self.rho_gs),
            ),
            le_flag_q(
                "rho_exact_le_rho_divisor",
                self.rho_exact.as_ref(),
                self.rho_divisor.as_ref(),
            ),
            le_flag_q(
                "rho_polytope_le_rho_divisor",
                self.rho_polytope.as_ref(),
                self.rho_divisor.as_ref(),
            ),
        ]
    }

    pub fn all_consistent(&self) -> bool {
        self.flags().iter().all(|f| f.holds != Some(false))
    }

    pub fn rows(&self) -> Vec<(&'static str, Option<Rational>)> {
        let int = |v: Option<u64>| v.map(integer);
        vec![
            ("davenport_exact", int(self.davenport_exact)),
            ("eta_exact", int(self.eta_exact)),
            ("t_exact", int(self.t_exact)),
            ("rho_exact", self.rho_exact.clone()),
            ("eta_lower", int(self.eta_lower)),
            ("eta_rank_two", int(self.eta_rank_two)),
            ("t_main", int(self.t_main)),
            ("t_linear", int(self.t_linear)),
            ("t_pgroup", int(self.t_pgroup)),
            ("davenport_formula", int(self.davenport_formula)),
            ("eta_from_davenport", int(self.eta_from_davenport)),
            ("rho_divisor", self.rho_divisor.clone()),
            ("rho_polytope", self.rho_polytope.clone()),
            ("rho_gs", Some(self.rho_gs.clone())),
            ("cardinality", Some(integer(self.cardinality))),
        ]
    }

    pub fn to_json(&self) -> serde_json::Value {
        use serde_json::json;
        let q = |r: &Rational| match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => json!({ "num": n, "den": d }),
            _ => json!({ "num": r.numer().to_string(), "den": r.denom().to_string() }),
        };
        let mut values = serde_json::Map::new();
        for (name, v) in self.rows() {
            values.insert(
                name.to_string(),
                match v {
                    Some(r) => {
                        if r.is_integer() {
                            match r.to_integer().to_u64() {
                                Some(i) => json!(i),
                                None => q(&r),
                            }
                        } else {
                            q(&r)
                        }
                    }
                    None => serde_json::Value::Null,
                },
            );
        }
        let flags: Vec<_> = self
            .flags()
            .iter()
            .map(|f| json!({ "name": f.name, "holds": f.holds }))
            .collect();
        json!({
            "group": self.group.to_string(),
            "values": values,
            "flags": flags,
        })
    }

    /// One row per bound. A row is consistent when no applicable flag
    /// mentioning its name fails.
    pub fn to_csv(&self) -> String {
        let flags = self.flags();
        let mut out = String::from("name,value_num,value_den,applicable,consistent\n");
        for (name, v) in self.rows() {
            let consistent = flags
                .iter()
                .filter(|f| f.name.contains(name))
                .all(|f| f.holds != Some(false));
            match v {
                Some(r) => {
                    out.push_str(&format!(
                        "{name},{},{},true,{consistent}\n",
                        r.numer(),
                        r.denom()
                    ));
                }
                None => {
                    out.push_str(&format!("{name},,,false,{consistent}\n"));
                }
            }
        }
        out
    }
}

/// Evaluates every applicable bound for `g`, running the exact searches
/// when asked. A search that exceeds its budget contributes no value
/// rather than an inexact one.
pub fn bound_report(g: &FiniteAbelianGroup, options: &BoundReportOptions) -> Result<BoundReport> {
    use crate::search;

    let reg = &options.registry;
    let f = g.invariant_factors();
    let rank = g.rank();

    let eta_rank_two_value = if rank <= 2 {
        let m = if rank == 2 { f[0] } else { 1 };
        let n = if rank >= 1 { f[rank - 1] } else { 1 };
        Some(eta_rank_two(m, n)?)
    } else {
        None
    };

    let mut report = BoundReport {
        group: g.clone(),
        davenport_exact: None,
        eta_exact: None,
        t_exact: None,
        rho_exact: None,
        eta_lower: Some(eta_lower_bound_group(g)?),
        eta_rank_two: eta_rank_two_value,
        t_main: t_main_bound(g, reg).ok(),
        t_linear: t_linear_bound(rank.max(1), g.exponent(), reg).ok(),
        t_pgroup: t_pgroup_bound(g, reg).ok().flatten(),
        davenport_formula: davenport_formula(g)?,
        eta_from_davenport: eta_from_davenport(g).ok().flatten(),
        rho_divisor: rho_divisor_bound(rank.max(1), g.exponent(), reg).ok(),
        rho_polytope: None,
        rho_gs: rho_gs_bound(g)?,
        cardinality: g.order(),
    };

    if options.compute_exact {
        let keep = |res: crate::search::ExactResult| -> Option<crate::search::ExactResult> {
            res.exact.then_some(res)
        };
        report.davenport_exact = keep(search::davenport_exact(g, &options.search)?)
            .and_then(|r| r.value.as_length());
        report.eta_exact =
            keep(search::eta_exact(g, &options.search)?).and_then(|r| r.value.as_length());
        report.t_exact =
            keep(search::t_exact(g, &options.search)?).and_then(|r| r.value.as_length());
        report.rho_exact = keep(search::rho_exact(g, &options.search)?)
            .map(|r| r.value.to_rational());
        let exact_source = search::ExactPairValues::new(options.search);
        report.rho_polytope = rho_polytope_bound(g, &exact_source)
            .or_else(|_| rho_polytope_bound(g, &BoundedPairValues(reg)))
            .ok();
    } else {
        report.rho_polytope = rho_polytope_bound(g, &BoundedPairValues(reg)).ok();
    }

    Ok(report)
}
