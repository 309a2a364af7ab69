//! One test per release criterion. Every assertion is exact; the
//! printed line per criterion carries the measured wall time.

mod common;

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::time::{Duration, Instant};
use zerosum::arith::{self, Rational};
use zerosum::bounds::{self, ConstantRegistry};
use zerosum::construct;
use zerosum::finder;
use zerosum::group::{parse_group, FiniteAbelianGroup};
use zerosum::search::{self, ExactPairValues, SearchOptions};
use zerosum::sequence::{self, GroupSequence, ZeroSumPredicate};

fn grp(s: &str) -> FiniteAbelianGroup {
    parse_group(s).unwrap()
}

fn budget(nodes: u64) -> SearchOptions {
    SearchOptions {
        budget: nodes,
        ..SearchOptions::default()
    }
}

fn exact_len(res: &search::ExactResult) -> u64 {
    assert!(res.exact, "search exhausted its node budget");
    res.value.as_length().unwrap()
}

fn finish(id: u32, t0: Instant, limit: Option<Duration>, detail: &str) {
    let dt = t0.elapsed();
    println!("criterion {id:02} PASS in {dt:.2?}: {detail}");
    if let Some(l) = limit {
        assert!(dt <= l, "criterion {id:02} took {dt:?}, over the {l:?} target");
    }
}

#[test]
fn criterion_01_cyclic_groups_are_exact() {
    let t0 = Instant::now();
    let opts = SearchOptions::default();
    for n in 2..=12u64 {
        let g = FiniteAbelianGroup::cyclic(n).unwrap();
        assert_eq!(exact_len(&search::eta_exact(&g, &opts).unwrap()), n, "eta(C{n})");
        assert_eq!(exact_len(&search::t_exact(&g, &opts).unwrap()), n, "t(C{n})");
    }
    finish(1, t0, Some(Duration::from_secs(10)), "t = eta = n on C_n for n in 2..=12");
}

#[test]
fn criterion_02_rank_two_eta_values() {
    let t0 = Instant::now();
    let opts = SearchOptions::default();
    for (m, n) in [(2, 2), (2, 4), (3, 3), (2, 6)] {
        let g = FiniteAbelianGroup::from_moduli(&[m, n]).unwrap();
        assert_eq!(
            exact_len(&search::eta_exact(&g, &opts).unwrap()),
            2 * m + n - 2,
            "eta(C{m}xC{n})"
        );
    }
    finish(2, t0, Some(Duration::from_secs(120)), "eta(C_m x C_n) = 2m+n-2 on four rank-two groups");
}

#[test]
fn criterion_03_elementary_two_groups() {
    let t0 = Instant::now();
    for r in 1..=3u32 {
        let g = FiniteAbelianGroup::from_moduli(&vec![2; r as usize]).unwrap();
        assert_eq!(
            exact_len(&search::t_exact(&g, &SearchOptions::default()).unwrap()),
            1 << r,
            "t(C2^{r})"
        );
    }
    let g = FiniteAbelianGroup::from_moduli(&[2, 2, 2, 2]).unwrap();
    assert_eq!(
        exact_len(&search::t_exact(&g, &budget(4_000_000_000)).unwrap()),
        16,
        "t(C2^4)"
    );
    finish(3, t0, Some(Duration::from_secs(60)), "t(C_2^r) = 2^r for r in 1..=3, stretch r = 4 included");
}

#[test]
fn criterion_04_rank_two_p_group_t() {
    let t0 = Instant::now();
    let opts = SearchOptions::default();
    for p in [2, 3u64] {
        let g = FiniteAbelianGroup::from_moduli(&[p, p]).unwrap();
        assert_eq!(
            exact_len(&search::t_exact(&g, &opts).unwrap()),
            3 * p - 2,
            "t(C{p}xC{p})"
        );
    }
    finish(4, t0, Some(Duration::from_secs(300)), "t(C_p x C_p) = 3p-2 for p in {2, 3}");
}

#[test]
fn criterion_05_davenport_matches_formula_on_p_groups() {
    let t0 = Instant::now();
    let opts = budget(24_000_000_000);
    let mut checked = 0;
    for g in groups_up_to_order(64) {
        if g.p_group_prime().is_none() {
            continue;
        }
        let formula = bounds::davenport_formula(&g).unwrap().expect("p-group formula");
        let res = search::davenport_exact(&g, &opts).unwrap();
        assert_eq!(exact_len(&res), formula, "D({g})");
        checked += 1;
    }
    finish(
        5,
        t0,
        Some(Duration::from_secs(300)),
        &format!("davenport_exact = 1 + sum(n_i - 1) on all {checked} p-groups of order <= 64"),
    );
}

#[test]
fn criterion_06_pair_invariant_reduces_to_upsilon_group() {
    let t0 = Instant::now();
    let opts = budget(8_000_000_000);
    let mut checked = 0;
    for g in groups_up_to_order(32) {
        for (d_prime, d) in divisor_pairs(&g) {
            let pair = exact_len(&search::eta_pair_exact(&g, d_prime, d, &opts).unwrap());
            let u = bounds::upsilon_group(&g, d_prime, d).unwrap();
            let direct = exact_len(&search::eta_exact(&u, &opts).unwrap());
            assert_eq!(pair, direct, "{g} at ({d_prime},{d}) vs {u}");
            checked += 1;
        }
    }
    finish(
        6,
        t0,
        Some(Duration::from_secs(600)),
        &format!("eta_(d',d)(G) = eta(upsilon-group) on {checked} divisor pairs over groups of order <= 32"),
    );
}

#[test]
fn criterion_07_bound_sandwich_has_zero_violations() {
    let t0 = Instant::now();
    let opts = SearchOptions::default();
    let registry = ConstantRegistry::default();
    let mut checked = 0;
    for g in groups_up_to_order(36) {
        if g.rank() > 2 {
            continue;
        }
        let eta = exact_len(&search::eta_exact(&g, &opts).unwrap());
        let t = exact_len(&search::t_exact(&g, &opts).unwrap());
        let lower = bounds::eta_lower_bound_group(&g).unwrap();
        let main = bounds::t_main_bound(&g, &registry).unwrap();
        let linear = bounds::t_linear_bound(g.rank(), g.exponent(), &registry).unwrap();
        assert!(
            lower <= eta && eta <= t && t <= main && main <= linear,
            "{g}: {lower} <= {eta} <= {t} <= {main} <= {linear} broken"
        );
        assert!(t <= g.order(), "{g}: t = {t} exceeds |G|");
        checked += 1;
    }
    finish(
        7,
        t0,
        None,
        &format!("eta_lower <= eta <= t <= t_main <= t_linear and t <= |G| on {checked} groups of order <= 36, rank <= 2"),
    );
}

#[test]
fn criterion_08_rho_values_and_bound_chain() {
    let t0 = Instant::now();
    let opts = SearchOptions::default();
    let half = Rational::new(1.into(), 2.into());
    let two_thirds = Rational::new(2.into(), 3.into());
    let r2 = search::rho_exact(&grp("C2"), &opts).unwrap();
    assert!(r2.exact);
    assert_eq!(r2.value.to_rational(), half);
    let r3 = search::rho_exact(&grp("C3"), &opts).unwrap();
    assert!(r3.exact);
    assert_eq!(r3.value.to_rational(), two_thirds);

    let source = ExactPairValues::new(SearchOptions::default());
    let mut checked = 0;
    for g in groups_up_to_order(16) {
        let res = search::rho_exact(&g, &opts).unwrap();
        assert!(res.exact, "rho({g})");
        let rho = res.value.to_rational();
        let polytope = bounds::rho_polytope_bound(&g, &source).unwrap();
        let gs = bounds::rho_gs_bound(&g).unwrap();
        assert!(rho <= polytope, "{g}: rho {rho} > polytope {polytope}");
        assert!(polytope <= gs, "{g}: polytope {polytope} > gs {gs}");
        checked += 1;
    }
    finish(
        8,
        t0,
        None,
        &format!("rho(C2) = 1/2, rho(C3) = 2/3, rho <= polytope <= gs on {checked} groups of order <= 16"),
    );
}

#[test]
fn criterion_09_arithmetic_inequalities_hold_at_scale() {
    let t0 = Instant::now();
    let f = arith::f_batch(1_000_000);
    for n in 1..=1_000_000usize {
        assert!(f[n] <= n as u64, "f({n}) = {} exceeds n", f[n]);
    }
    let rows = arith::primes_product_scan(10_000).unwrap();
    assert_eq!(rows.len(), 10_000);
    for row in &rows {
        assert!(row.holds, "prime product inequality fails at ell = {}", row.ell);
    }
    finish(
        9,
        t0,
        Some(Duration::from_secs(60)),
        "f(n) <= n for n <= 10^6 and the prime product inequality for ell <= 10^4",
    );
}

#[test]
fn criterion_10_erdos_lemke_bulk_property() {
    let t0 = Instant::now();
    (2u64..=200).into_par_iter().for_each(|n| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1e11e ^ n);
        for _ in 0..10_000 {
            let values: Vec<i64> = (0..n).map(|_| rng.gen()).collect();
            let sol = finder::solve_erdos_lemke(&values, n).unwrap();
            let sum: i128 = sol.indices.iter().map(|&i| values[i - 1] as i128).sum();
            assert_eq!(sum.rem_euclid(n as i128), 0, "n = {n}: sum not divisible");
            let gcds: u64 = sol
                .indices
                .iter()
                .map(|&i| arith::gcd(values[i - 1].rem_euclid(n as i64) as u64, n))
                .sum();
            assert!(gcds <= n, "n = {n}: gcd budget {gcds} exceeds n");
        }
    });
    finish(
        10,
        t0,
        Some(Duration::from_secs(120)),
        "10^4 instances per n in 2..=200, both divisibility and gcd budget verified",
    );
}

#[test]
fn criterion_11_rank_gap_certificate() {
    let t0 = Instant::now();
    let cert = bounds::rank_gap_certificate(4).unwrap();
    assert_eq!(cert.group, grp("C3xC3xC3xC9"));
    assert_eq!(cert.subgroup, grp("C3xC3xC3xC3"));
    assert_eq!(cert.eta_upper, 23);
    assert_eq!(cert.eta_lower, 31);
    assert!(cert.chain_holds);
    finish(
        11,
        t0,
        Some(Duration::from_secs(5)),
        "rank 4 certificate: eta(C3^3 x C9) <= 23 < 31 <= t(C3^3 x C9)",
    );
}

#[test]
fn criterion_12_dp_agrees_with_enumeration_in_bulk() {
    let t0 = Instant::now();
    let groups = groups_up_to_order(16);
    let mut rng = ChaCha8Rng::seed_from_u64(0xd9);
    for _ in 0..10_000 {
        let g = &groups[rng.gen_range(0..groups.len())];
        let len = rng.gen_range(0..=12);
        let idxs: Vec<u64> = (0..len).map(|_| rng.gen_range(0..g.order())).collect();
        let seq = seq_from_indices(g, &idxs);
        for pred in [ZeroSumPredicate::Tiny, ZeroSumPredicate::Short] {
            assert_eq!(
                sequence::find_zero_sum(&seq, pred).unwrap().is_some(),
                oracle_has_subsequence(g, &seq.expanded(), pred),
                "{pred:?} on {seq}"
            );
        }
        let pairs = divisor_pairs(g);
        let (d_prime, d) = pairs[rng.gen_range(0..pairs.len())];
        let pred = ZeroSumPredicate::Pair { d_prime, d };
        let mut stratum = GroupSequence::new(g.clone());
        for e in seq.expanded() {
            if g.in_order_dividing_subgroup(&e, d).unwrap() {
                stratum.push(e, 1).unwrap();
            }
        }
        assert_eq!(
            sequence::find_zero_sum(&stratum, pred).unwrap().is_some(),
            oracle_has_subsequence(g, &stratum.expanded(), pred),
            "{pred:?} on {stratum}"
        );
    }
    finish(
        12,
        t0,
        Some(Duration::from_secs(120)),
        "tiny/short/pair finders match subset enumeration on 10^4 random sequences, |S| <= 12, order <= 16",
    );
}

#[test]
fn criterion_13_homocyclic_constructions_verify() {
    let t0 = Instant::now();
    let mut checked = 0;
    for (r, ns) in [(1u64, 2..=8u64), (2, 2..=5), (3, 2..=3)] {
        for n in ns {
            let rec = construct::verify_construction(
                construct::homocyclic_eta_extremal(r, n).unwrap(),
            )
            .unwrap();
            let expected = ((1u64 << r) - 1) * (n - 1);
            assert_eq!(rec.sequence.len(), expected, "length of the (r={r}, n={n}) record");
            assert_eq!(rec.expected_length, expected);
            assert!(rec.verified, "(r={r}, n={n}) record failed verification");
            checked += 1;
        }
    }
    finish(
        13,
        t0,
        Some(Duration::from_secs(60)),
        &format!("{checked} homocyclic records verified short-zero-sum-free at length (2^r - 1)(n - 1)"),
    );
}
