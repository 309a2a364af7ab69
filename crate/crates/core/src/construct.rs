//! Extremal lower-bound sequences: the homocyclic subset-sum
//! construction and the standard rank-two sequence, together with a
//! machine check that they avoid short zero-sums.

use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;
use crate::sequence::{self, GroupSequence, ZeroSumPredicate};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstructionKind {
    HomocyclicEta,
    RankTwoEta,
}

impl ConstructionKind {
    pub fn label(self) -> &'static str {
        match self {
            ConstructionKind::HomocyclicEta => "HOMOCYCLIC_ETA",
            ConstructionKind::RankTwoEta => "RANK_TWO_ETA",
        }
    }
}

/// A generated extremal sequence. `verified` is set by
/// [`verify_construction`] and implies the sequence has no short
/// zero-sum subsequence (hence no tiny one).
#[derive(Debug, Clone)]
pub struct ConstructionRecord {
    pub kind: ConstructionKind,
    /// `(r, n)` for the homocyclic family, `(m, n)` for rank two.
    pub parameters: (u64, u64),
    pub sequence: GroupSequence,
    pub expected_length: u64,
    pub verified: bool,
}

/// Over `C_n^r`, takes `n - 1` copies of each non-empty subset sum of
/// the basis: length `(2^r - 1)(n - 1)`, and no short zero-sum
/// subsequence, so the short threshold exceeds this length.
pub fn homocyclic_eta_extremal(r: u64, n: u64) -> Result<ConstructionRecord> {
    if r < 1 || n < 2 {
        return Err(Error::PreconditionViolated(format!(
            "homocyclic construction needs r >= 1 and n >= 2, got ({r}, {n})"
        )));
    }
    let group = FiniteAbelianGroup::new(vec![n; r as usize])?;
    let mut sequence = GroupSequence::new(group.clone());
    for mask in 1u64..(1u64 << r) {
        let coords: Vec<u64> = (0..r).map(|i| (mask >> i) & 1).collect();
        sequence.push(group.element(coords)?, n - 1)?;
    }
    let expected_length = ((1u64 << r) - 1) * (n - 1);
    assert_eq!(sequence.len(), expected_length);
    Ok(ConstructionRecord {
        kind: ConstructionKind::HomocyclicEta,
        parameters: (r, n),
        sequence,
        expected_length,
        verified: false,
    })
}

/// Over `C_m ⊕ C_n` with `m | n`: `m - 1` copies each of `e_1` and
/// `e_1 + e_2` plus `n - 1` copies of `e_2`, of length `2m + n - 3`.
/// Verification certifies the tiny threshold is at least `2m + n - 2`.
pub fn rank_two_eta_extremal(m: u64, n: u64) -> Result<ConstructionRecord> {
    if m < 2 {
        return Err(Error::PreconditionViolated(format!(
            "rank-two construction needs m >= 2, got {m}"
        )));
    }
    if n % m != 0 {
        return Err(Error::NotDivisible { m, n });
    }
    let group = FiniteAbelianGroup::new(vec![m, n])?;
    let mut sequence = GroupSequence::new(group.clone());
    sequence.push(group.element(vec![1, 0])?, m - 1)?;
    sequence.push(group.element(vec![1, 1])?, m - 1)?;
    sequence.push(group.element(vec![0, 1])?, n - 1)?;
    let expected_length = 2 * m + n - 3;
    assert_eq!(sequence.len(), expected_length);
    Ok(ConstructionRecord {
        kind: ConstructionKind::RankTwoEta,
        parameters: (m, n),
        sequence,
        expected_length,
        verified: false,
    })
}

/// Checks the record: the stated length must match and the sequence
/// must contain no short zero-sum subsequence. The verdict lands in
/// `verified`, never silently.
pub fn verify_construction(rec: ConstructionRecord) -> Result<ConstructionRecord> {
    let length_ok = rec.sequence.len() == rec.expected_length;
    let avoids_short =
        sequence::find_zero_sum(&rec.sequence, ZeroSumPredicate::Short)?.is_none();
    Ok(ConstructionRecord {
        verified: length_ok && avoids_short,
        ..rec
    })
}
