#![allow(dead_code)]

use zerosum::arith::{self, Rational};
use zerosum::group::{FiniteAbelianGroup, GroupElement};
use zerosum::sequence::{GroupSequence, ZeroSumPredicate};

pub fn rat(n: u64) -> Rational {
    Rational::from_integer(n.into())
}

/// Every nontrivial group of order at most `max`, one per
/// invariant-factor chain, sorted by (order, rank, factors).
pub fn groups_up_to_order(max: u64) -> Vec<FiniteAbelianGroup> {
    let mut out = Vec::new();
    let mut chain = Vec::new();
    grow(&mut chain, 1, max, &mut out);
    out.sort_by_key(|g| (g.order(), g.rank(), g.invariant_factors().to_vec()));
    out
}

fn grow(chain: &mut Vec<u64>, order: u64, max: u64, out: &mut Vec<FiniteAbelianGroup>) {
    if !chain.is_empty() {
        out.push(FiniteAbelianGroup::from_moduli(chain).expect("divisibility chain"));
    }
    let base = chain.last().copied().unwrap_or(1);
    let (mut f, step) = if base == 1 { (2, 1) } else { (base, base) };
    while order.saturating_mul(f) <= max {
        chain.push(f);
        grow(chain, order * f, max, out);
        chain.pop();
        f += step;
    }
}

pub fn seq_from_indices(group: &FiniteAbelianGroup, idxs: &[u64]) -> GroupSequence {
    let mut s = GroupSequence::new(group.clone());
    for &i in idxs {
        s.push(group.element_at(i % group.order()), 1).unwrap();
    }
    s
}

/// Exhaustive check over all 2^k - 1 nonempty subsequences; the
/// independent oracle the dynamic program is measured against.
pub fn oracle_has_subsequence(
    group: &FiniteAbelianGroup,
    elems: &[GroupElement],
    pred: ZeroSumPredicate,
) -> bool {
    let k = elems.len();
    assert!(k <= 20, "oracle is exponential in the length");
    for mask in 1u32..(1u32 << k) {
        let mut sum = group.identity();
        let mut weight = 0u64;
        for (i, e) in elems.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sum = group.add(&sum, e);
                weight += pred.weight(group, e);
            }
        }
        if weight <= pred.weight_cap(group) && pred.is_target(group, &sum).unwrap() {
            return true;
        }
    }
    false
}

/// Re-validates a finder witness without the dynamic program:
/// membership, sum condition, budget condition.
pub fn assert_valid_witness(parent: &GroupSequence, w: &GroupSequence, pred: ZeroSumPredicate) {
    let group = parent.group();
    assert!(!w.is_empty(), "witness must be nonempty");
    assert!(parent.contains_subsequence(w), "witness not a subsequence");
    assert!(
        pred.is_target(group, &w.sum()).unwrap(),
        "witness sum fails the target condition"
    );
    let weight: u64 = w
        .support()
        .map(|(e, c)| pred.weight(group, e) * c)
        .sum();
    assert!(
        weight <= pred.weight_cap(group),
        "witness weight {weight} exceeds the cap"
    );
}

/// All (d', d) with d | exp(G) and d' | d.
pub fn divisor_pairs(group: &FiniteAbelianGroup) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for d in arith::divisors(group.exponent()).unwrap() {
        for d_prime in arith::divisors(d).unwrap() {
            out.push((d_prime, d));
        }
    }
    out
}
