//! Multisets of group elements, exact cross numbers, and detection of
//! distinguished zero-sum subsequences by dynamic programming over sums.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};

/// Cross number scaled by the group exponent: the represented value is
/// `scaled / exponent`. An element of order `m` contributes
/// `exponent / m`, an integer, so all arithmetic stays in `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScaledCross {
    pub scaled: u64,
    pub exponent: u64,
}

impl ScaledCross {
    pub fn zero(exponent: u64) -> Self {
        Self { scaled: 0, exponent }
    }

    pub fn as_rational(&self) -> Rational {
        BigRational::new(
            BigInt::from(self.scaled),
            BigInt::from(self.exponent.max(1)),
        )
    }
}

impl PartialOrd for ScaledCross {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ScaledCross {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let lhs = self.scaled as u128 * other.exponent.max(1) as u128;
        let rhs = other.scaled as u128 * self.exponent.max(1) as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for ScaledCross {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.exponent.max(1);
        let g = crate::arith::gcd(self.scaled, e).max(1);
        let (num, den) = (self.scaled / g, e / g);
        if den == 1 {
            write!(f, "{num}")
        } else {
            write!(f, "{num}/{den}")
        }
    }
}

/// A finite multiset of elements of a fixed group, the "sequence" of
/// combinatorial zero-sum theory (order never matters). Stored as counts
/// keyed by the lexicographically ordered elements, so iteration and
/// printing are canonical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSequence {
    group: FiniteAbelianGroup,
    counts: BTreeMap<GroupElement, u64>,
    len: u64,
}

impl GroupSequence {
    pub fn new(group: FiniteAbelianGroup) -> Self {
        Self {
            group,
            counts: BTreeMap::new(),
            len: 0,
        }
    }

    pub fn from_elements<I>(group: FiniteAbelianGroup, elems: I) -> Result<Self>
    where
        I: IntoIterator<Item = GroupElement>,
    {
        let mut seq = Self::new(group);
        for g in elems {
            seq.push(g, 1)?;
        }
        Ok(seq)
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn push(&mut self, g: GroupElement, copies: u64) -> Result<()> {
        if !self.group.contains(&g) {
            return Err(Error::DimensionMismatch {
                want: self.group.rank(),
                got: g.coords().len(),
            });
        }
        if copies > 0 {
            *self.counts.entry(g).or_insert(0) += copies;
            self.len += copies;
        }
        Ok(())
    }

    pub fn with_push(&self, g: GroupElement, copies: u64) -> Result<Self> {
        let mut out = self.clone();
        out.push(g, copies)?;
        Ok(out)
    }

    /// Removes one copy; false if the element is absent.
    pub fn remove_one(&mut self, g: &GroupElement) -> bool {
        match self.counts.get_mut(g) {
            Some(c) => {
                *c -= 1;
                if *c == 0 {
                    self.counts.remove(g);
                }
                self.len -= 1;
                true
            }
            None => false,
        }
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn count(&self, g: &GroupElement) -> u64 {
        self.counts.get(g).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = (&GroupElement, u64)> {
        self.counts.iter().map(|(g, &c)| (g, c))
    }

    /// All copies in canonical order.
    pub fn expanded(&self) -> Vec<GroupElement> {
        let mut out = Vec::new();
        for (g, &c) in &self.counts {
            for _ in 0..c {
                out.push(g.clone());
            }
        }
        out
    }

    pub fn sum(&self) -> GroupElement {
        let mut acc = self.group.identity();
        for (g, &c) in &self.counts {
            acc = self.group.add(&acc, &self.group.scale(c, g));
        }
        acc
    }

    /// `k(S) = Σ 1/ord(g)` over all copies.
    pub fn cross_number(&self) -> Rational {
        self.scaled_cross_wide().as_rational_wide()
    }

    /// Cross number as an exact multiple of `1/exp(G)`.
    pub fn scaled_cross(&self) -> Result<ScaledCross> {
        let wide = self.scaled_cross_wide();
        Ok(ScaledCross {
            scaled: u64::try_from(wide.scaled).map_err(|_| Error::OrderOverflow)?,
            exponent: wide.exponent,
        })
    }

    fn scaled_cross_wide(&self) -> WideCross {
        let exp = self.group.exponent();
        let mut scaled: u128 = 0;
        for (g, &c) in &self.counts {
            scaled += c as u128 * (exp / self.group.element_order(g)) as u128;
        }
        WideCross {
            scaled,
            exponent: exp,
        }
    }

    /// The copies whose order is exactly `d`.
    pub fn order_stratum(&self, d: u64) -> Self {
        let mut out = Self::new(self.group.clone());
        for (g, &c) in &self.counts {
            if self.group.element_order(g) == d {
                out.push(g.clone(), c).unwrap();
            }
        }
        out
    }

    /// True when every copy has order dividing `d`.
    pub fn lies_in_order_dividing(&self, d: u64) -> Result<bool> {
        for (g, _) in self.support() {
            if !self.group.in_order_dividing_subgroup(g, d)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True when `other` is a subsequence (counts dominated pointwise).
    pub fn contains_subsequence(&self, other: &GroupSequence) -> bool {
        other
            .support()
            .all(|(g, c)| self.count(g) >= c)
    }
}

struct WideCross {
    scaled: u128,
    exponent: u64,
}

impl WideCross {
    fn as_rational_wide(&self) -> Rational {
        BigRational::new(
            BigInt::from(self.scaled),
            BigInt::from(self.exponent.max(1)),
        )
    }
}

impl fmt::Display for GroupSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, &c) in &self.counts {
            if !first {
                write!(f, ";")?;
            }
            first = false;
            write!(f, "{g}")?;
            if c > 1 {
                write!(f, "*{c}")?;
            }
        }
        Ok(())
    }
}

/// Parses a sequence literal such as `(1,0)*2;(0,1)` over the given
/// group. The empty string is the empty sequence.
pub fn parse_sequence(group: &FiniteAbelianGroup, text: &str) -> Result<GroupSequence> {
    let mut seq = GroupSequence::new(group.clone());
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(seq);
    }
    for (at, raw_term) in trimmed.split(';').enumerate() {
        let term = raw_term.trim();
        let (elem_part, copies) = match term.split_once('*') {
            Some((e, k)) => {
                let copies: u64 = k.trim().parse().map_err(|_| Error::SequenceParse {
                    at,
                    reason: format!("bad multiplicity {:?}", k.trim()),
                })?;
                if copies == 0 {
                    return Err(Error::SequenceParse {
                        at,
                        reason: "zero multiplicity".into(),
                    });
                }
                (e.trim(), copies)
            }
            None => (term, 1),
        };
        let inner = elem_part
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::SequenceParse {
                at,
                reason: format!("expected (a,b,...), got {elem_part:?}"),
            })?;
        let coords: Vec<u64> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|c| {
                    c.trim().parse().map_err(|_| Error::SequenceParse {
                        at,
                        reason: format!("bad coordinate {:?}", c.trim()),
                    })
                })
                .collect::<Result<_>>()?
        };
        let elem = group.element(coords).map_err(|e| Error::SequenceParse {
            at,
            reason: e.to_string(),
        })?;
        seq.push(elem, copies)?;
    }
    Ok(seq)
}

/// The four families of forbidden subsequences. A nonempty subsequence
/// `T` qualifies when its sum lands in the family's target subgroup and
/// its weight stays under the family's cap:
///
/// * `Zero`: sum 0, no cap,
/// * `Short`: sum 0, `|T| ≤ exp(G)`,
/// * `Tiny`: sum 0, `k(T) ≤ 1`,
/// * `Pair`: sequence over the order-`d` subgroup, sum of order
///   dividing `d/d_prime`, `|T| ≤ d_prime`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZeroSumPredicate {
    Zero,
    Short,
    Tiny,
    Pair { d_prime: u64, d: u64 },
}

impl ZeroSumPredicate {
    pub fn validate(&self, group: &FiniteAbelianGroup) -> Result<()> {
        if let ZeroSumPredicate::Pair { d_prime, d } = *self {
            let exponent = group.exponent();
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
        }
        Ok(())
    }

    /// Weight of one copy of `g` in the capped quantity.
    pub fn weight(&self, group: &FiniteAbelianGroup, g: &GroupElement) -> u64 {
        match self {
            ZeroSumPredicate::Tiny => group.exponent() / group.element_order(g),
            _ => 1,
        }
    }

    /// Cap on the total weight of a qualifying subsequence.
    pub fn weight_cap(&self, group: &FiniteAbelianGroup) -> u64 {
        match *self {
            ZeroSumPredicate::Zero => u64::MAX,
            ZeroSumPredicate::Short => group.exponent(),
            ZeroSumPredicate::Tiny => group.exponent(),
            ZeroSumPredicate::Pair { d_prime, .. } => d_prime,
        }
    }

    /// Whether a subsequence sum `s` qualifies.
    pub fn is_target(&self, group: &FiniteAbelianGroup, s: &GroupElement) -> Result<bool> {
        match *self {
            ZeroSumPredicate::Pair { d_prime, d } => {
                group.in_order_dividing_subgroup(s, d / d_prime)
            }
            _ => Ok(s == &group.identity()),
        }
    }

    /// The pool a sequence under this predicate may draw from: all of
    /// `G`, except that `Pair` restricts to the order-`d` subgroup.
    pub fn universe(&self, group: &FiniteAbelianGroup) -> Result<Vec<GroupElement>> {
        match *self {
            ZeroSumPredicate::Pair { d, .. } => {
                let mut out = Vec::new();
                for i in 0..group.order() {
                    let g = group.element_at(i);
                    if group.in_order_dividing_subgroup(&g, d)? {
                        out.push(g);
                    }
                }
                Ok(out)
            }
            _ => Ok((0..group.order()).map(|i| group.element_at(i)).collect()),
        }
    }

    fn check_sequence(&self, seq: &GroupSequence) -> Result<()> {
        if let ZeroSumPredicate::Pair { d, .. } = *self {
            if !seq.lies_in_order_dividing(d)? {
                return Err(Error::PreconditionViolated(format!(
                    "sequence has an element of order not dividing {d}"
                )));
            }
        }
        Ok(())
    }
}

const INF: u32 = u32::MAX;
const TABLE_CELL_LIMIT: u64 = 1 << 28;

/// Layered table of minimum subsequence weights: `rows[t][s]` is the
/// least total weight of a nonempty subsequence of the first `t` copies
/// summing to the element with index `s`, or `INF`.
struct SumTable<'a> {
    group: &'a FiniteAbelianGroup,
    copies: Vec<(GroupElement, u64, u32)>,
    rows: Vec<Vec<u32>>,
    targets: Vec<bool>,
    cap: u64,
}

impl<'a> SumTable<'a> {
    /// With `stop_on_hit` the table stops at the first prefix containing
    /// a qualifying subsequence (existence only); without it all rows are
    /// built and the final row carries the global minima.
    fn build(
        seq: &'a GroupSequence,
        pred: ZeroSumPredicate,
        stop_on_hit: bool,
    ) -> Result<(Self, bool)> {
        let group = seq.group();
        let n = group.order();
        let expanded = seq.expanded();
        let cells = (expanded.len() as u64 + 1)
            .checked_mul(n)
            .ok_or(Error::OrderOverflow)?;
        if cells > TABLE_CELL_LIMIT {
            return Err(Error::TableTooLarge {
                cells,
                limit: TABLE_CELL_LIMIT,
            });
        }
        let cap = pred.weight_cap(group);
        let mut targets = vec![false; n as usize];
        for s in 0..n {
            targets[s as usize] = pred.is_target(group, &group.element_at(s))?;
        }
        let copies: Vec<(GroupElement, u64, u32)> = expanded
            .into_iter()
            .map(|g| {
                let idx = group.index_of(&g);
                let w = pred.weight(group, &g);
                (g, idx, u32::try_from(w).unwrap_or(INF))
            })
            .collect();
        let mut table = SumTable {
            group,
            copies,
            rows: vec![vec![INF; n as usize]],
            targets,
            cap,
        };
        let mut hit = false;
        for t in 0..table.copies.len() {
            table.push_row(t);
            if !hit && table.best_target(table.rows.len() - 1).is_some() {
                hit = true;
                if stop_on_hit {
                    break;
                }
            }
        }
        Ok((table, hit))
    }

    fn push_row(&mut self, t: usize) {
        let (_, gi, w) = self.copies[t];
        let prev = self.rows.last().unwrap();
        let mut next = prev.clone();
        for s in 0..prev.len() as u64 {
            let v = prev[s as usize];
            if v == INF {
                continue;
            }
            let dst = self.group.add_indices(s, gi) as usize;
            let cand = v.saturating_add(w);
            if cand < next[dst] {
                next[dst] = cand;
            }
        }
        let fresh = gi as usize;
        if w < next[fresh] {
            next[fresh] = w;
        }
        self.rows.push(next);
    }

    /// Lowest-weight qualifying sum in a row (first index on ties).
    fn best_target(&self, row: usize) -> Option<u64> {
        let mut best: Option<(u32, u64)> = None;
        for (s, &is_t) in self.targets.iter().enumerate() {
            if !is_t {
                continue;
            }
            let v = self.rows[row][s];
            if v == INF || v as u64 > self.cap {
                continue;
            }
            if best.map_or(true, |(bv, _)| v < bv) {
                best = Some((v, s as u64));
            }
        }
        best.map(|(_, s)| s)
    }

    /// Walks back from `rows[t][s]`, preferring "copy not used", and
    /// collects the used copies.
    fn reconstruct(&self, mut t: usize, mut s: u64) -> GroupSequence {
        let mut out = GroupSequence::new(self.group.clone());
        let mut v = self.rows[t][s as usize];
        while t > 0 {
            let prev = &self.rows[t - 1];
            if prev[s as usize] == v {
                t -= 1;
                continue;
            }
            let (g, gi, w) = &self.copies[t - 1];
            out.push(g.clone(), 1).unwrap();
            if s == *gi && v == *w {
                break;
            }
            s = self.group.sub_indices(s, *gi);
            v -= *w;
            t -= 1;
        }
        out
    }
}

/// Minimum-weight forbidden subsequence under the predicate, or `None`
/// when the sequence avoids the family entirely.
pub fn find_zero_sum(
    seq: &GroupSequence,
    pred: ZeroSumPredicate,
) -> Result<Option<GroupSequence>> {
    pred.validate(seq.group())?;
    pred.check_sequence(seq)?;
    if seq.is_empty() {
        return Ok(None);
    }
    let (table, hit) = SumTable::build(seq, pred, false)?;
    if !hit {
        return Ok(None);
    }
    let last = table.rows.len() - 1;
    let s = table.best_target(last).unwrap();
    Ok(Some(table.reconstruct(last, s)))
}

/// First-hit variant of [`find_zero_sum`]: stops at the shortest prefix
/// containing a qualifying subsequence and reconstructs within it.
/// Existence agrees with the full table; the witness may differ.
pub(crate) fn find_zero_sum_first(
    seq: &GroupSequence,
    pred: ZeroSumPredicate,
) -> Result<Option<GroupSequence>> {
    pred.validate(seq.group())?;
    pred.check_sequence(seq)?;
    if seq.is_empty() {
        return Ok(None);
    }
    let (table, hit) = SumTable::build(seq, pred, true)?;
    if !hit {
        return Ok(None);
    }
    let last = table.rows.len() - 1;
    let s = table.best_target(last).unwrap();
    Ok(Some(table.reconstruct(last, s)))
}

pub fn avoids(seq: &GroupSequence, pred: ZeroSumPredicate) -> Result<bool> {
    pred.validate(seq.group())?;
    pred.check_sequence(seq)?;
    if seq.is_empty() {
        return Ok(true);
    }
    let (_, hit) = SumTable::build(seq, pred, true)?;
    Ok(!hit)
}

/// True when the sequence avoids the family and appending any single
/// element of the predicate's universe stops it avoiding.
pub fn is_locally_maximal(seq: &GroupSequence, pred: ZeroSumPredicate) -> Result<bool> {
    pred.validate(seq.group())?;
    pred.check_sequence(seq)?;
    let group = seq.group();
    let n = group.order();
    let cap = pred.weight_cap(group);
    let (table, hit) = SumTable::build(seq, pred, true)?;
    if hit {
        return Ok(false);
    }
    let last = table.rows.last().unwrap();
    for g in pred.universe(group)? {
        let gi = group.index_of(&g);
        let w = pred.weight(group, &g);
        let mut violated = w <= cap && pred.is_target(group, &g)?;
        if !violated {
            for s in 0..n {
                let v = last[s as usize];
                if v == INF {
                    continue;
                }
                let total = v as u64 + w;
                if total <= cap && pred.is_target(group, &group.element_at(group.add_indices(s, gi)))? {
                    violated = true;
                    break;
                }
            }
        }
        if !violated {
            return Ok(false);
        }
    }
    Ok(true)
}
