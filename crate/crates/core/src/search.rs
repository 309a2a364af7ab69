//! Exact invariant computation by canonical depth-first search.
//!
//! Avoiding multisets are enumerated exactly once as non-decreasing
//! sequences of candidate indices. Every node carries an incremental
//! table of reachable subsequence sums, so testing whether one more
//! element creates a forbidden subsequence is a single relaxation step.
//! On groups of order at most 64 the sum sets are packed into `u64`
//! words and the relaxation becomes a handful of masked shifts.
//!
//! Searches are deterministic: identical values, witnesses and node
//! counts for any worker count, as long as the node budget is not hit.
//! A budget-truncated search still returns its best avoiding sequence,
//! flagged `exact: false`.

use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::json;

use crate::arith;
use crate::bounds;
use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement};
use crate::sequence::{self, GroupSequence, ScaledCross, ZeroSumPredicate};

/// Default number of extension attempts before a search gives up.
pub const DEFAULT_NODE_BUDGET: u64 = 1_000_000_000;

const BIT_ORDER_LIMIT: u64 = 64;
const SEARCH_CELL_LIMIT: u64 = 1 << 28;
const INF: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// Longest avoiding sequence.
    MaxLength,
    /// Largest cross number, tracked as an integer multiple of
    /// `1/exp(G)`.
    MaxScaledCross,
}

/// A bounded avoidance maximization problem.
#[derive(Debug, Clone)]
pub struct AvoidanceProblem {
    pub group: FiniteAbelianGroup,
    pub predicate: ZeroSumPredicate,
    pub objective: Objective,
    /// Proven upper bound on the length of any avoiding sequence. The
    /// search never descends past it, so termination never depends on
    /// the node budget. A maximum that *reaches* the cap is reported
    /// with `exact: false`, since longer sequences were out of scope.
    pub length_cap: u64,
}

#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Extension attempts allowed before the search stops with a
    /// flagged partial result.
    pub budget: u64,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_NODE_BUDGET,
            workers: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactValue {
    Length(u64),
    Cross(ScaledCross),
}

impl ExactValue {
    pub fn as_length(&self) -> Option<u64> {
        match *self {
            ExactValue::Length(v) => Some(v),
            ExactValue::Cross(_) => None,
        }
    }

    pub fn as_cross(&self) -> Option<ScaledCross> {
        match *self {
            ExactValue::Cross(c) => Some(c),
            ExactValue::Length(_) => None,
        }
    }

    pub fn to_rational(&self) -> arith::Rational {
        match self {
            ExactValue::Length(v) => arith::rational_int(*v),
            ExactValue::Cross(c) => c.as_rational(),
        }
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Length(v) => write!(f, "{v}"),
            ExactValue::Cross(c) => write!(f, "{c}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExactResult {
    pub value: ExactValue,
    /// An avoiding sequence attaining the maximum, lexicographically
    /// least among the attainers.
    pub extremal_witness: GroupSequence,
    /// Extension attempts made, probe included.
    pub nodes_explored: u64,
    pub wall_time: Duration,
    /// `false` when the node budget tripped or the length cap was
    /// reached; the value is then only a lower bound.
    pub exact: bool,
}

impl ExactResult {
    /// Flat record for machine consumption. Rational values are split
    /// into numerator and denominator.
    pub fn json_record(&self, invariant: &str) -> serde_json::Value {
        let mut rec = json!({
            "group": self.extremal_witness.group().to_string(),
            "invariant": invariant,
            "witness": self.extremal_witness.to_string(),
            "nodes": self.nodes_explored,
            "millis": self.wall_time.as_millis() as u64,
            "exact": self.exact,
        });
        match &self.value {
            ExactValue::Length(v) => {
                rec["value"] = json!(v);
            }
            ExactValue::Cross(c) => {
                let q = c.as_rational();
                rec["value"] = json!({
                    "num": q.numer().to_u64().expect("numerator fits u64"),
                    "den": q.denom().to_u64().expect("denominator fits u64"),
                });
            }
        }
        rec
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum EngineKind {
    /// One reachability word, zero-sum predicate only.
    Bits,
    /// One reachability word per weight level up to the cap.
    Layers,
    /// Dense minimum-weight rows, any group size.
    Rows,
}

/// Rotation of the packed element enumeration by a fixed summand,
/// decomposed into one masked double-shift per nonzero coordinate.
#[derive(Debug, Clone, Default)]
struct ShiftPlan {
    steps: Vec<ShiftStep>,
}

#[derive(Debug, Clone)]
struct ShiftStep {
    low_mask: u64,
    shl: u32,
    high_mask: u64,
    shr: u32,
}

impl ShiftPlan {
    #[inline]
    fn apply(&self, x: u64) -> u64 {
        let mut acc = x;
        for s in &self.steps {
            acc = ((acc & s.low_mask) << s.shl) | ((acc & s.high_mask) >> s.shr);
        }
        acc
    }
}

fn shift_plan(group: &FiniteAbelianGroup, e: &GroupElement) -> Result<ShiftPlan> {
    let n = group.order();
    let factors = group.invariant_factors().to_vec();
    let mut steps = Vec::new();
    for (i, &ni) in factors.iter().enumerate() {
        let gi = e.coords()[i];
        if gi == 0 {
            continue;
        }
        let place = group.index_of(&group.basis_element(i)?);
        let mut low = 0u64;
        let mut high = 0u64;
        for idx in 0..n {
            let d = group.element_at(idx).coords()[i];
            if d < ni - gi {
                low |= 1 << idx;
            } else {
                high |= 1 << idx;
            }
        }
        steps.push(ShiftStep {
            low_mask: low,
            shl: (gi * place) as u32,
            high_mask: high,
            shr: ((ni - gi) * place) as u32,
        });
    }
    let plan = ShiftPlan { steps };
    #[cfg(debug_assertions)]
    {
        let ei = group.index_of(e);
        for idx in 0..n {
            debug_assert_eq!(plan.apply(1 << idx), 1 << group.add_indices(idx, ei));
        }
    }
    Ok(plan)
}

/// Immutable search setup shared by every worker.
struct Prepared {
    group: FiniteAbelianGroup,
    objective: Objective,
    /// Zero-sum-free prefixes gain at least one new subset sum per
    /// element, so `|G| - #sums` bounds the remaining extension length.
    zero_slack: bool,
    length_cap: u64,
    elems: Vec<GroupElement>,
    weights: Vec<u32>,
    obj_weights: Vec<u64>,
    caps: Vec<u64>,
    /// `suffix_obj[j]` = total objective available from candidates
    /// `j..`, saturating.
    suffix_obj: Vec<u64>,
    weight_cap: u64,
    kind: EngineKind,
    perms: Vec<Vec<u32>>,
    targets: Vec<bool>,
    plans: Vec<ShiftPlan>,
    target_mask: u64,
    /// Objective value that cannot be exceeded (proven cap); reaching
    /// it ends the search early.
    ceiling: Option<u64>,
}

impl Prepared {
    fn build(
        problem: &AvoidanceProblem,
        ceiling: Option<u64>,
        forced: Option<EngineKind>,
    ) -> Result<Prepared> {
        let group = &problem.group;
        problem.predicate.validate(group)?;
        let pred = problem.predicate;
        let n = group.order();
        let exp = group.exponent();

        let mut elems = Vec::new();
        let mut weights = Vec::new();
        let mut obj_weights = Vec::new();
        let mut caps = Vec::new();
        for e in pred.universe(group)? {
            let ord = group.element_order(&e);
            let cap = match pred {
                ZeroSumPredicate::Pair { d_prime, d } => {
                    let q = ord / arith::gcd(ord, d / d_prime);
                    q - 1
                }
                _ => ord - 1,
            };
            if cap == 0 {
                continue;
            }
            let w = pred.weight(group, &e);
            debug_assert!(w <= u32::MAX as u64);
            let ow = match problem.objective {
                Objective::MaxLength => 1,
                Objective::MaxScaledCross => exp / ord,
            };
            elems.push(e);
            weights.push(w as u32);
            obj_weights.push(ow);
            caps.push(cap);
        }

        let k = elems.len();
        let mut suffix_obj = vec![0u64; k + 1];
        for j in (0..k).rev() {
            let chunk = caps[j].min(problem.length_cap).saturating_mul(obj_weights[j]);
            suffix_obj[j] = suffix_obj[j + 1].saturating_add(chunk);
        }

        let weight_cap = pred.weight_cap(group);
        let kind = forced.unwrap_or(if n <= BIT_ORDER_LIMIT {
            match pred {
                ZeroSumPredicate::Zero => EngineKind::Bits,
                _ if weight_cap <= BIT_ORDER_LIMIT => EngineKind::Layers,
                _ => EngineKind::Rows,
            }
        } else {
            EngineKind::Rows
        });

        let mut perms = Vec::new();
        let mut targets = Vec::new();
        let mut plans = Vec::new();
        let mut target_mask = 0u64;
        match kind {
            EngineKind::Rows => {
                let cells = n.saturating_mul(problem.length_cap.saturating_add(1));
                if cells > SEARCH_CELL_LIMIT {
                    return Err(Error::TableTooLarge {
                        cells,
                        limit: SEARCH_CELL_LIMIT,
                    });
                }
                for s in 0..n {
                    targets.push(pred.is_target(group, &group.element_at(s))?);
                }
                for e in &elems {
                    let ei = group.index_of(e);
                    perms.push((0..n).map(|s| group.add_indices(s, ei) as u32).collect());
                }
            }
            EngineKind::Bits | EngineKind::Layers => {
                for s in 0..n {
                    if pred.is_target(group, &group.element_at(s))? {
                        target_mask |= 1 << s;
                    }
                }
                for e in &elems {
                    plans.push(shift_plan(group, e)?);
                }
            }
        }

        Ok(Prepared {
            group: group.clone(),
            objective: problem.objective,
            zero_slack: pred == ZeroSumPredicate::Zero
                && problem.objective == Objective::MaxLength,
            length_cap: problem.length_cap,
            elems,
            weights,
            obj_weights,
            caps,
            suffix_obj,
            weight_cap,
            kind,
            perms,
            targets,
            plans,
            target_mask,
            ceiling,
        })
    }
}

/// Per-worker DP state: a stack of sum tables, one frame per element of
/// the current prefix.
struct Walker<'a> {
    prep: &'a Prepared,
    bits: Vec<u64>,
    layers: Vec<u64>,
    rows: Vec<u32>,
}

impl<'a> Walker<'a> {
    fn new(prep: &'a Prepared) -> Walker<'a> {
        let mut w = Walker {
            prep,
            bits: Vec::new(),
            layers: Vec::new(),
            rows: Vec::new(),
        };
        match prep.kind {
            EngineKind::Bits => w.bits.push(1),
            EngineKind::Layers => {
                // Layer k holds sums reachable with weight <= k; the
                // empty subsequence (bit 0) is reachable at every level.
                let stride = prep.weight_cap as usize + 1;
                w.layers.resize(stride, 1);
            }
            EngineKind::Rows => {
                w.rows.resize(prep.group.order() as usize, INF);
            }
        }
        w
    }

    /// Attempt to extend the prefix by candidate `j`. Returns `true`
    /// and leaves the state untouched when the extension would create a
    /// forbidden subsequence.
    fn try_push(&mut self, j: usize) -> bool {
        match self.prep.kind {
            EngineKind::Bits => {
                let plan = &self.prep.plans[j];
                let top = *self.bits.last().expect("root frame");
                let shifted = plan.apply(top);
                if shifted & self.prep.target_mask != 0 {
                    return true;
                }
                self.bits.push(top | shifted);
                false
            }
            EngineKind::Layers => {
                let stride = self.prep.weight_cap as usize + 1;
                let w = self.prep.weights[j] as usize;
                let base = self.layers.len() - stride;
                let plan = &self.prep.plans[j];
                if plan.apply(self.layers[base + stride - 1 - w]) & self.prep.target_mask != 0 {
                    return true;
                }
                self.layers.extend_from_within(base..base + stride);
                let nb = base + stride;
                for k in (w..stride).rev() {
                    let add = plan.apply(self.layers[base + k - w]);
                    self.layers[nb + k] |= add;
                }
                false
            }
            EngineKind::Rows => {
                let n = self.prep.group.order() as usize;
                let base = self.rows.len() - n;
                let w = self.prep.weights[j];
                let wc = self.prep.weight_cap;
                let perm = &self.prep.perms[j];
                let fresh = perm[0] as usize;
                if w as u64 <= wc && self.prep.targets[fresh] {
                    return true;
                }
                for s in 0..n {
                    let v = self.rows[base + s];
                    if v == INF {
                        continue;
                    }
                    let nv = v.saturating_add(w);
                    if nv as u64 <= wc && self.prep.targets[perm[s] as usize] {
                        return true;
                    }
                }
                self.rows.extend_from_within(base..base + n);
                let nb = base + n;
                for s in 0..n {
                    let v = self.rows[base + s];
                    if v == INF {
                        continue;
                    }
                    let dst = nb + perm[s] as usize;
                    let nv = v.saturating_add(w);
                    if nv < self.rows[dst] {
                        self.rows[dst] = nv;
                    }
                }
                let dst = nb + fresh;
                if w < self.rows[dst] {
                    self.rows[dst] = w;
                }
                false
            }
        }
    }

    /// Upper bound on how many more elements any zero-sum-free
    /// extension of the current prefix can add.
    fn extension_slack(&self) -> Option<u64> {
        if !self.prep.zero_slack {
            return None;
        }
        let n = self.prep.group.order();
        match self.prep.kind {
            EngineKind::Bits => {
                let top = *self.bits.last().expect("root frame");
                Some(n - u64::from(top.count_ones()))
            }
            EngineKind::Rows => {
                let n = n as usize;
                let base = self.rows.len() - n;
                let finite = self.rows[base..].iter().filter(|&&v| v != INF).count();
                Some((n - 1 - finite) as u64)
            }
            EngineKind::Layers => None,
        }
    }

    fn pop(&mut self) {
        match self.prep.kind {
            EngineKind::Bits => {
                self.bits.pop();
            }
            EngineKind::Layers => {
                let stride = self.prep.weight_cap as usize + 1;
                self.layers.truncate(self.layers.len() - stride);
            }
            EngineKind::Rows => {
                let n = self.prep.group.order() as usize;
                self.rows.truncate(self.rows.len() - n);
            }
        }
    }
}

/// Shared extension-attempt counter with a trip wire.
struct BudgetGate {
    limit: u64,
    used: AtomicU64,
    tripped: AtomicBool,
}

impl BudgetGate {
    fn new(limit: u64) -> Self {
        BudgetGate {
            limit,
            used: AtomicU64::new(0),
            tripped: AtomicBool::new(false),
        }
    }

    fn try_spend(&self) -> bool {
        if self.tripped.load(Ordering::Relaxed) {
            return false;
        }
        let prev = self.used.fetch_add(1, Ordering::Relaxed);
        if prev >= self.limit {
            self.tripped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    fn tripped(&self) -> bool {
        self.tripped.load(Ordering::Relaxed)
    }

    fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed).min(self.limit)
    }
}

struct Dfs<'a> {
    prep: &'a Prepared,
    walker: Walker<'a>,
    budget: &'a BudgetGate,
    counts: Vec<u64>,
    len: u64,
    obj: u64,
    best_obj: u64,
    /// `None` while the seed value (the shared probe) is unbeaten.
    best_counts: Option<Vec<u64>>,
}

impl Dfs<'_> {
    fn run(&mut self, start: usize) {
        if self.budget.tripped() {
            return;
        }
        if self.obj > self.best_obj {
            self.best_obj = self.obj;
            self.best_counts = Some(self.counts.clone());
        }
        if let Some(c) = self.prep.ceiling {
            if self.best_obj >= c {
                return;
            }
        }
        if self.len >= self.prep.length_cap {
            return;
        }
        if let Some(slack) = self.walker.extension_slack() {
            if self.len.saturating_add(slack) <= self.best_obj {
                return;
            }
        }
        for j in start..self.prep.elems.len() {
            let used_here = if j == start {
                self.counts[j].saturating_mul(self.prep.obj_weights[j])
            } else {
                0
            };
            let avail = self.prep.suffix_obj[j] - used_here;
            if self.obj.saturating_add(avail) <= self.best_obj {
                break;
            }
            if self.counts[j] >= self.prep.caps[j] {
                continue;
            }
            if !self.budget.try_spend() {
                return;
            }
            if self.walker.try_push(j) {
                continue;
            }
            self.counts[j] += 1;
            self.len += 1;
            self.obj += self.prep.obj_weights[j];
            self.run(j);
            self.walker.pop();
            self.counts[j] -= 1;
            self.len -= 1;
            self.obj -= self.prep.obj_weights[j];
        }
    }
}

/// Longest-prefix greedy pass. Its result is the lexicographically
/// least maximal avoiding sequence, which seeds every branch: a branch
/// only reports strict improvements, so the final reduce keeps the
/// lexicographically least witness among the attainers of the maximum.
fn greedy_probe(prep: &Prepared, budget: &BudgetGate) -> (Vec<u64>, u64) {
    let k = prep.elems.len();
    let mut walker = Walker::new(prep);
    let mut counts = vec![0u64; k];
    let mut len = 0u64;
    let mut obj = 0u64;
    'all: for j in 0..k {
        while counts[j] < prep.caps[j] && len < prep.length_cap {
            if !budget.try_spend() {
                break 'all;
            }
            if walker.try_push(j) {
                break;
            }
            counts[j] += 1;
            len += 1;
            obj += prep.obj_weights[j];
        }
        if len >= prep.length_cap {
            break;
        }
        if let Some(c) = prep.ceiling {
            if obj >= c {
                break;
            }
        }
    }
    (counts, obj)
}

fn run_branch(
    prep: &Prepared,
    budget: &BudgetGate,
    seed_obj: u64,
    j0: usize,
) -> Option<(u64, Vec<u64>)> {
    if budget.tripped() {
        return None;
    }
    if prep.suffix_obj[j0] <= seed_obj {
        return None;
    }
    if !budget.try_spend() {
        return None;
    }
    let mut walker = Walker::new(prep);
    if walker.try_push(j0) {
        return None;
    }
    let mut counts = vec![0u64; prep.elems.len()];
    counts[j0] = 1;
    let mut dfs = Dfs {
        prep,
        walker,
        budget,
        counts,
        len: 1,
        obj: prep.obj_weights[j0],
        best_obj: seed_obj,
        best_counts: None,
    };
    dfs.run(j0);
    dfs.best_counts.map(|c| (dfs.best_obj, c))
}

fn solve(prep: &Prepared, opts: &SearchOptions) -> (u64, Vec<u64>, u64, bool) {
    let budget = BudgetGate::new(opts.budget);
    let (mut champ_counts, mut champ_obj) = greedy_probe(prep, &budget);
    let k = prep.elems.len();
    let at_ceiling = prep.ceiling.map_or(false, |c| champ_obj >= c);
    // A probe that fills the length cap already maximizes a length
    // objective; a cross objective can still do better in other
    // branches.
    let probe_len: u64 = champ_counts.iter().sum();
    let cap_filled = prep.objective == Objective::MaxLength && probe_len >= prep.length_cap;
    if k > 0 && !at_ceiling && !cap_filled && !budget.tripped() {
        let seed = champ_obj;
        let branch = |j0: usize| run_branch(prep, &budget, seed, j0);
        let results: Vec<Option<(u64, Vec<u64>)>> = match opts.workers {
            Some(1) => (0..k).map(branch).collect(),
            Some(workers) => rayon::ThreadPoolBuilder::new()
                .num_threads(workers)
                .build()
                .expect("worker pool")
                .install(|| (0..k).into_par_iter().map(branch).collect()),
            None => (0..k).into_par_iter().map(branch).collect(),
        };
        for r in results.into_iter().flatten() {
            if r.0 > champ_obj {
                champ_obj = r.0;
                champ_counts = r.1;
            }
        }
    }
    (champ_obj, champ_counts, budget.used(), budget.tripped())
}

fn max_avoiding_with(
    problem: &AvoidanceProblem,
    opts: &SearchOptions,
    ceiling: Option<u64>,
    forced: Option<EngineKind>,
) -> Result<ExactResult> {
    let start = Instant::now();
    let prep = Prepared::build(problem, ceiling, forced)?;
    let (obj, counts, nodes, tripped) = solve(&prep, opts);

    let mut witness = GroupSequence::new(problem.group.clone());
    let mut total_len = 0u64;
    for (j, &c) in counts.iter().enumerate() {
        if c > 0 {
            witness.push(prep.elems[j].clone(), c)?;
            total_len += c;
        }
    }
    assert!(
        sequence::avoids(&witness, problem.predicate)?,
        "search returned a non-avoiding witness"
    );

    let cap_hit = problem.objective == Objective::MaxLength && total_len >= problem.length_cap;
    let value = match problem.objective {
        Objective::MaxLength => ExactValue::Length(obj),
        Objective::MaxScaledCross => ExactValue::Cross(ScaledCross {
            scaled: obj,
            exponent: problem.group.exponent(),
        }),
    };
    Ok(ExactResult {
        value,
        extremal_witness: witness,
        nodes_explored: nodes,
        wall_time: start.elapsed(),
        exact: !tripped && !cap_hit,
    })
}

/// Exact maximum of the objective over predicate-avoiding sequences.
///
/// The result is deterministic for any worker count. Exceeding the node
/// budget yields the best avoiding sequence found so far with
/// `exact: false`, never an error and never a silently wrong value.
pub fn max_avoiding(problem: &AvoidanceProblem, opts: &SearchOptions) -> Result<ExactResult> {
    max_avoiding_with(problem, opts, None, None)
}

fn bump_length(res: &mut ExactResult) {
    if let ExactValue::Length(v) = res.value {
        res.value = ExactValue::Length(v + 1);
    }
}

/// Smallest length forcing a non-empty zero-sum subsequence.
pub fn davenport_exact(group: &FiniteAbelianGroup, opts: &SearchOptions) -> Result<ExactResult> {
    let problem = AvoidanceProblem {
        group: group.clone(),
        predicate: ZeroSumPredicate::Zero,
        objective: Objective::MaxLength,
        length_cap: group.order(),
    };
    let mut res = max_avoiding(&problem, opts)?;
    bump_length(&mut res);
    Ok(res)
}

fn short_length_cap(group: &FiniteAbelianGroup) -> u64 {
    if group.is_trivial() {
        return 1;
    }
    let f = group.invariant_factors();
    let mut cap = group.order();
    if f.len() == 2 {
        if let Ok(v) = bounds::eta_rank_two(f[0], f[1]) {
            cap = cap.min(v);
        }
    }
    if f.len() == 1 {
        cap = cap.min(f[0]);
    }
    if group.p_group_prime().is_some() {
        if let Ok(Some(v)) = bounds::eta_from_davenport(group) {
            cap = cap.min(v);
        }
    }
    cap
}

/// Smallest length forcing a zero-sum subsequence of length at most
/// `exp(G)`.
pub fn eta_exact(group: &FiniteAbelianGroup, opts: &SearchOptions) -> Result<ExactResult> {
    let problem = AvoidanceProblem {
        group: group.clone(),
        predicate: ZeroSumPredicate::Short,
        objective: Objective::MaxLength,
        length_cap: short_length_cap(group),
    };
    let mut res = max_avoiding(&problem, opts)?;
    bump_length(&mut res);
    Ok(res)
}

fn tiny_length_cap(group: &FiniteAbelianGroup) -> u64 {
    if group.is_trivial() {
        return 1;
    }
    let mut cap = group.order();
    if group.rank() <= 2 {
        let reg = bounds::ConstantRegistry::default();
        if let Ok(v) = bounds::t_main_bound(group, &reg) {
            cap = cap.min(v);
        }
    }
    cap
}

/// Smallest length forcing a zero-sum subsequence of cross number at
/// most 1.
pub fn t_exact(group: &FiniteAbelianGroup, opts: &SearchOptions) -> Result<ExactResult> {
    let problem = AvoidanceProblem {
        group: group.clone(),
        predicate: ZeroSumPredicate::Tiny,
        objective: Objective::MaxLength,
        length_cap: tiny_length_cap(group),
    };
    let mut res = max_avoiding(&problem, opts)?;
    bump_length(&mut res);
    Ok(res)
}

/// Smallest length forcing, in sequences over the order-`d` subgroup, a
/// non-empty subsequence of length at most `d_prime` whose sum has
/// order dividing `d / d_prime`.
pub fn eta_pair_exact(
    group: &FiniteAbelianGroup,
    d_prime: u64,
    d: u64,
    opts: &SearchOptions,
) -> Result<ExactResult> {
    let pred = ZeroSumPredicate::Pair { d_prime, d };
    pred.validate(group)?;
    let mut cap = group.order_dividing_subgroup_size(d)?;
    if group.rank() <= 2 {
        let reg = bounds::ConstantRegistry::default();
        if let Ok(v) = bounds::eta_pair_upper(group, d_prime, d, &reg) {
            cap = cap.min(v);
        }
    }
    let problem = AvoidanceProblem {
        group: group.clone(),
        predicate: pred,
        objective: Objective::MaxLength,
        length_cap: cap,
    };
    let mut res = max_avoiding(&problem, opts)?;
    bump_length(&mut res);
    Ok(res)
}

/// Largest cross number among sequences with no tiny zero-sum
/// subsequence, as an exact rational.
///
/// Runs `t_exact` first: avoiding sequences are shorter than `t(G)`,
/// which caps the depth. Node counts of both phases are combined. On
/// rank at most 2 the proven cross-number cap also stops the search as
/// soon as it is attained.
pub fn rho_exact(group: &FiniteAbelianGroup, opts: &SearchOptions) -> Result<ExactResult> {
    let start = Instant::now();
    let t_res = t_exact(group, opts)?;
    let depth_cap = if t_res.exact {
        t_res.value.as_length().expect("length value") - 1
    } else {
        group.order() - 1
    };
    let mut ceiling = None;
    if !group.is_trivial() && group.rank() <= 2 {
        let reg = bounds::ConstantRegistry::default();
        if let Ok(b) = bounds::rho_divisor_bound(group.rank(), group.exponent(), &reg) {
            ceiling = (b * arith::rational_int(group.exponent()))
                .floor()
                .to_integer()
                .to_u64();
        }
    }
    let problem = AvoidanceProblem {
        group: group.clone(),
        predicate: ZeroSumPredicate::Tiny,
        objective: Objective::MaxScaledCross,
        length_cap: depth_cap,
    };
    let mut res = max_avoiding_with(&problem, opts, ceiling, None)?;
    res.nodes_explored += t_res.nodes_explored;
    res.wall_time = start.elapsed();
    Ok(res)
}

/// Search-backed source of `η_(d',d)(G)` values for the polytope
/// bound. A search that exceeds its budget is reported as an error so
/// the caller can fall back to estimates instead of consuming a
/// non-exact value.
pub struct ExactPairValues {
    opts: SearchOptions,
}

impl ExactPairValues {
    pub fn new(opts: SearchOptions) -> Self {
        ExactPairValues { opts }
    }
}

impl bounds::PairValues for ExactPairValues {
    fn eta_pair(&self, g: &FiniteAbelianGroup, d_prime: u64, d: u64) -> Result<arith::Rational> {
        let res = eta_pair_exact(g, d_prime, d, &self.opts)?;
        if !res.exact {
            return Err(Error::PreconditionViolated(
                "pair value search exceeded its budget".into(),
            ));
        }
        Ok(arith::rational_int(
            res.value.as_length().expect("length value"),
        ))
    }
}
