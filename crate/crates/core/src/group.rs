//! Finite Abelian groups in invariant-factor form.
//!
//! A group is stored as its invariant factors `1 < n_1 | n_2 | ... | n_r`;
//! the trivial group is the empty list. Elements are coordinate vectors
//! reduced modulo the factors. Enumeration order is lexicographic on
//! coordinates and every search and witness in this crate refers to that
//! fixed order.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};

/// `C_{n_1} ⊕ ... ⊕ C_{n_r}` with `1 < n_1 | n_2 | ... | n_r`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteAbelianGroup {
    factors: Vec<u64>,
    order: u64,
}

/// An element of a [`FiniteAbelianGroup`], one coordinate per invariant
/// factor, each reduced modulo its factor. Derived `Ord` is lexicographic,
/// matching the enumeration order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupElement(Vec<u64>);

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<u64> {
        self.0
    }
}

impl FiniteAbelianGroup {
    /// Builds a group from factors that must already be a divisibility chain
    /// with every entry above 1.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.iter().any(|&f| f < 2) {
            return Err(Error::InvariantChain(factors));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::InvariantChain(factors));
        }
        let mut order: u64 = 1;
        for &f in &factors {
            order = order.checked_mul(f).ok_or(Error::OrderOverflow)?;
        }
        Ok(Self { factors, order })
    }

    /// Builds a group from arbitrary positive moduli by normalizing them to
    /// invariant factors (`[4, 6]` becomes `C_2 ⊕ C_12`).
    pub fn from_moduli(moduli: &[u64]) -> Result<Self> {
        Self::new(normalize_invariant_factors(moduli)?)
    }

    pub fn trivial() -> Self {
        Self {
            factors: Vec::new(),
            order: 1,
        }
    }

    /// `C_n`; `n = 1` gives the trivial group.
    pub fn cyclic(n: u64) -> Result<Self> {
        Self::from_moduli(&[n])
    }

    pub fn invariant_factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// Largest invariant factor; 1 for the trivial group.
    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// True when every invariant factor is a power of a single prime `p`
    /// (the trivial group is not counted as a p-group).
    pub fn p_group_prime(&self) -> Option<u64> {
        let p = arith::smallest_prime_factor(*self.factors.first()?).ok()?;
        for &f in &self.factors {
            let mut m = f;
            while m % p == 0 {
                m /= p;
            }
            if m != 1 {
                return None;
            }
        }
        Some(p)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(vec![0; self.factors.len()])
    }

    /// Validates a coordinate vector against the factor list.
    pub fn element(&self, coords: Vec<u64>) -> Result<GroupElement> {
        if coords.len() != self.factors.len() {
            return Err(Error::DimensionMismatch {
                want: self.factors.len(),
                got: coords.len(),
            });
        }
        for (&c, &f) in coords.iter().zip(&self.factors) {
            if c >= f {
                return Err(Error::CoordinateRange {
                    value: c,
                    modulus: f,
                });
            }
        }
        Ok(GroupElement(coords))
    }

    /// Accepts any coordinate vector of the right rank, reducing modulo the
    /// factors.
    pub fn element_reduced(&self, coords: &[u64]) -> Result<GroupElement> {
        if coords.len() != self.factors.len() {
            return Err(Error::DimensionMismatch {
                want: self.factors.len(),
                got: coords.len(),
            });
        }
        Ok(GroupElement(
            coords
                .iter()
                .zip(&self.factors)
                .map(|(&c, &f)| c % f)
                .collect(),
        ))
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.0.len() == self.factors.len() && g.0.iter().zip(&self.factors).all(|(&c, &f)| c < f)
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if !self.contains(g) {
            return Err(Error::DimensionMismatch {
                want: self.factors.len(),
                got: g.0.len(),
            });
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        debug_assert!(self.contains(a) && self.contains(b));
        GroupElement(
            a.0.iter()
                .zip(&b.0)
                .zip(&self.factors)
                .map(|((&x, &y), &f)| {
                    let s = x + y;
                    if s >= f {
                        s - f
                    } else {
                        s
                    }
                })
                .collect(),
        )
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        debug_assert!(self.contains(a));
        GroupElement(
            a.0.iter()
                .zip(&self.factors)
                .map(|(&x, &f)| if x == 0 { 0 } else { f - x })
                .collect(),
        )
    }

    /// `k · a` by coordinate-wise modular multiplication.
    pub fn scale(&self, k: u64, a: &GroupElement) -> GroupElement {
        debug_assert!(self.contains(a));
        GroupElement(
            a.0.iter()
                .zip(&self.factors)
                .map(|(&x, &f)| ((k % f) as u128 * x as u128 % f as u128) as u64)
                .collect(),
        )
    }

    /// Order of `g`: the lcm over coordinates of `n_i / gcd(n_i, g_i)`.
    pub fn element_order(&self, g: &GroupElement) -> u64 {
        debug_assert!(self.contains(g));
        g.0.iter()
            .zip(&self.factors)
            .map(|(&c, &f)| f / arith::gcd(f, c))
            .fold(1u64, arith::lcm)
    }

    /// Membership in `G_d = {x : d·x = 0}`; requires `d | exp(G)`.
    pub fn in_order_dividing_subgroup(&self, g: &GroupElement, d: u64) -> Result<bool> {
        self.check(g)?;
        let exponent = self.exponent();
        if d == 0 || exponent % d != 0 {
            return Err(Error::NotDivisorOfExponent { d, exponent });
        }
        Ok(d % self.element_order(g) == 0)
    }

    /// `|G_d| = ∏ gcd(n_i, d)`; requires `d | exp(G)`.
    pub fn order_dividing_subgroup_size(&self, d: u64) -> Result<u64> {
        let exponent = self.exponent();
        if d == 0 || exponent % d != 0 {
            return Err(Error::NotDivisorOfExponent { d, exponent });
        }
        Ok(self.factors.iter().map(|&f| arith::gcd(f, d)).product())
    }

    /// Index of the sum of the elements at indices `a` and `b`, computed
    /// digit-wise in the mixed radix of the factors.
    pub fn add_indices(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.order && b < self.order);
        let (mut pa, mut pb) = (a, b);
        let mut place = 1u64;
        let mut acc = 0u64;
        for &f in self.factors.iter().rev() {
            let da = pa % f;
            let db = pb % f;
            pa /= f;
            pb /= f;
            let mut s = da + db;
            if s >= f {
                s -= f;
            }
            acc += s * place;
            place *= f;
        }
        acc
    }

    /// Index of the difference of the elements at indices `a` and `b`.
    pub fn sub_indices(&self, a: u64, b: u64) -> u64 {
        debug_assert!(a < self.order && b < self.order);
        let (mut pa, mut pb) = (a, b);
        let mut place = 1u64;
        let mut acc = 0u64;
        for &f in self.factors.iter().rev() {
            let da = pa % f;
            let db = pb % f;
            pa /= f;
            pb /= f;
            let s = if da >= db { da - db } else { da + f - db };
            acc += s * place;
            place *= f;
        }
        acc
    }

    /// Dense index of an element in the lexicographic enumeration.
    pub fn index_of(&self, g: &GroupElement) -> u64 {
        debug_assert!(self.contains(g));
        let mut idx = 0u64;
        for (&c, &f) in g.0.iter().zip(&self.factors) {
            idx = idx * f + c;
        }
        idx
    }

    pub fn element_at(&self, mut idx: u64) -> GroupElement {
        debug_assert!(idx < self.order);
        let mut coords = vec![0u64; self.factors.len()];
        for i in (0..self.factors.len()).rev() {
            coords[i] = idx % self.factors[i];
            idx /= self.factors[i];
        }
        GroupElement(coords)
    }

    /// All elements in lexicographic coordinate order, optionally restricted
    /// to elements of exactly the given order.
    pub fn enumerate_elements(&self, order_filter: Option<u64>) -> Result<Vec<GroupElement>> {
        if order_filter == Some(0) {
            return Err(Error::InvalidOrderFilter);
        }
        let mut out = Vec::new();
        for idx in 0..self.order {
            let g = self.element_at(idx);
            match order_filter {
                Some(d) if self.element_order(&g) != d => {}
                _ => out.push(g),
            }
        }
        Ok(out)
    }

    /// Standard basis vector `e_i` (0-based `i`), which has order `n_i`.
    pub fn basis_element(&self, i: usize) -> Result<GroupElement> {
        if i >= self.factors.len() {
            return Err(Error::DimensionMismatch {
                want: self.factors.len(),
                got: i + 1,
            });
        }
        let mut coords = vec![0u64; self.factors.len()];
        coords[i] = 1;
        Ok(GroupElement(coords))
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "C1");
        }
        let parts: Vec<String> = self.factors.iter().map(|n| format!("C{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl fmt::Debug for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Reduces arbitrary positive moduli to the invariant-factor chain of the
/// direct sum they present. Factors of 1 disappear; `[4, 6]` yields `[2, 12]`.
pub fn normalize_invariant_factors(moduli: &[u64]) -> Result<Vec<u64>> {
    use std::collections::BTreeMap;

    let mut powers: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &m in moduli {
        if m == 0 {
            return Err(Error::GroupParse {
                text: "0".into(),
                reason: "zero modulus".into(),
            });
        }
        for (p, e) in arith::factorize(m)? {
            powers.entry(p).or_default().push(p.pow(e));
        }
    }
    let depth = powers.values().map(Vec::len).max().unwrap_or(0);
    for comps in powers.values_mut() {
        comps.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut factors = Vec::with_capacity(depth);
    for k in 0..depth {
        let mut f: u64 = 1;
        for comps in powers.values() {
            if let Some(&q) = comps.get(k) {
                f = f.checked_mul(q).ok_or(Error::OrderOverflow)?;
            }
        }
        factors.push(f);
    }
    factors.reverse();
    Ok(factors)
}

/// Parses `"C2xC4"` (case-insensitive) or `"[2,4]"`. `"C1"` and `"[]"` give
/// the trivial group. Moduli are normalized, so `"C4xC6"` equals `"C2xC12"`.
pub fn parse_group(text: &str) -> Result<FiniteAbelianGroup> {
    let t = text.trim();
    let err = |reason: &str| Error::GroupParse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    if t.is_empty() {
        return Err(err("empty input"));
    }
    let moduli: Vec<u64> = if let Some(inner) = t.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| err("missing ']'"))?;
        let inner = inner.trim();
        if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u64>()
                        .map_err(|_| err(&format!("bad modulus '{tok}'")))
                })
                .collect::<Result<_>>()?
        }
    } else {
        t.split(['x', 'X'])
            .map(|tok| {
                let tok = tok.trim();
                let digits = tok
                    .strip_prefix(['c', 'C'])
                    .ok_or_else(|| err(&format!("expected 'C<n>', got '{tok}'")))?;
                digits
                    .parse::<u64>()
                    .map_err(|_| err(&format!("bad modulus '{digits}'")))
            })
            .collect::<Result<_>>()?
    };
    if moduli.iter().any(|&m| m == 0) {
        return Err(err("zero modulus"));
    }
    FiniteAbelianGroup::from_moduli(&moduli)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_merges_coprime_parts() {
        assert_eq!(
            FiniteAbelianGroup::from_moduli(&[4, 6]).unwrap().invariant_factors(),
            &[2, 12]
        );
        assert_eq!(
            FiniteAbelianGroup::from_moduli(&[1, 1]).unwrap(),
            FiniteAbelianGroup::trivial()
        );
        assert_eq!(
            FiniteAbelianGroup::from_moduli(&[6, 10, 15]).unwrap().invariant_factors(),
            &[30, 30]
        );
    }

    #[test]
    fn new_rejects_broken_chains() {
        assert!(matches!(
            FiniteAbelianGroup::new(vec![3, 4]),
            Err(Error::InvariantChain(_))
        ));
        assert!(matches!(
            FiniteAbelianGroup::new(vec![1, 2]),
            Err(Error::InvariantChain(_))
        ));
        FiniteAbelianGroup::new(vec![2, 4, 8]).unwrap();
    }

    #[test]
    fn parse_both_syntaxes() {
        let a = parse_group("C2xC4").unwrap();
        let b = parse_group("[2,4]").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_group("c2Xc4").unwrap(), a);
        assert_eq!(parse_group(" [ 2 , 4 ] ").unwrap(), a);
        assert_eq!(parse_group("C1").unwrap(), FiniteAbelianGroup::trivial());
        assert_eq!(parse_group("[]").unwrap(), FiniteAbelianGroup::trivial());
        assert_eq!(parse_group("C4xC6").unwrap().invariant_factors(), &[2, 12]);
        assert!(parse_group("").is_err());
        assert!(parse_group("C0").is_err());
        assert!(parse_group("[2,0]").is_err());
        assert!(parse_group("D4").is_err());
        assert!(parse_group("[2,").is_err());
    }

    #[test]
    fn display_round_trip() {
        for text in ["C1", "C6", "C2xC2xC4"] {
            let g = parse_group(text).unwrap();
            assert_eq!(g.to_string(), text);
            assert_eq!(parse_group(&g.to_string()).unwrap(), g);
        }
    }

    #[test]
    fn basic_invariants() {
        let g = parse_group("C2xC4").unwrap();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.exponent(), 4);
        assert_eq!(g.order(), 8);
        let t = FiniteAbelianGroup::trivial();
        assert_eq!(t.rank(), 0);
        assert_eq!(t.exponent(), 1);
        assert_eq!(t.order(), 1);
        assert!(t.is_trivial());
    }

    #[test]
    fn p_group_detection() {
        assert_eq!(parse_group("C2xC4").unwrap().p_group_prime(), Some(2));
        assert_eq!(parse_group("C3xC9").unwrap().p_group_prime(), Some(3));
        assert_eq!(parse_group("C6").unwrap().p_group_prime(), None);
        assert_eq!(FiniteAbelianGroup::trivial().p_group_prime(), None);
    }

    #[test]
    fn arithmetic_and_orders() {
        let g = parse_group("C2xC4").unwrap();
        let a = g.element(vec![1, 3]).unwrap();
        let b = g.element(vec![1, 2]).unwrap();
        assert_eq!(g.add(&a, &b), g.element(vec![0, 1]).unwrap());
        assert_eq!(g.neg(&a), g.element(vec![1, 1]).unwrap());
        assert_eq!(g.add(&a, &g.neg(&a)), g.identity());
        assert_eq!(g.scale(3, &a), g.element(vec![1, 1]).unwrap());
        assert_eq!(g.element_order(&a), 4);
        assert_eq!(g.element_order(&b), 2);
        assert_eq!(g.element_order(&g.identity()), 1);
        assert_eq!(g.element_reduced(&[3, 7]).unwrap(), a);
        assert!(g.element(vec![2, 0]).is_err());
        assert!(g.element(vec![0]).is_err());
    }

    #[test]
    fn index_enumeration_round_trip() {
        let g = parse_group("C2xC4").unwrap();
        for i in 0..g.order() {
            let e = g.element_at(i);
            assert_eq!(g.index_of(&e), i);
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ea = g.element_at(a);
                let eb = g.element_at(b);
                assert_eq!(g.add_indices(a, b), g.index_of(&g.add(&ea, &eb)));
                assert_eq!(
                    g.sub_indices(a, b),
                    g.index_of(&g.add(&ea, &g.neg(&eb)))
                );
            }
        }
    }

    #[test]
    fn subgroup_of_order_dividing() {
        let g = parse_group("C2xC4").unwrap();
        assert_eq!(g.order_dividing_subgroup_size(2).unwrap(), 4);
        assert_eq!(g.order_dividing_subgroup_size(4).unwrap(), 8);
        assert_eq!(g.order_dividing_subgroup_size(1).unwrap(), 1);
        assert!(g.order_dividing_subgroup_size(3).is_err());
        let x = g.element(vec![1, 2]).unwrap();
        assert!(g.in_order_dividing_subgroup(&x, 2).unwrap());
        let y = g.element(vec![0, 1]).unwrap();
        assert!(!y.coords().is_empty());
        assert!(!g.in_order_dividing_subgroup(&y, 2).unwrap());
        let count = (0..g.order())
            .filter(|&i| g.in_order_dividing_subgroup(&g.element_at(i), 2).unwrap())
            .count() as u64;
        assert_eq!(count, 4);
    }

    #[test]
    fn enumeration_with_order_filter() {
        let g = parse_group("C2xC4").unwrap();
        assert_eq!(g.enumerate_elements(None).unwrap().len(), 8);
        let of_order_4 = g.enumerate_elements(Some(4)).unwrap();
        assert_eq!(of_order_4.len(), 4);
        for e in &of_order_4 {
            assert_eq!(g.element_order(e), 4);
        }
        assert!(g.enumerate_elements(Some(0)).is_err());
        assert_eq!(g.enumerate_elements(Some(5)).unwrap().len(), 0);
    }

    #[test]
    fn basis_elements() {
        let g = parse_group("C2xC4").unwrap();
        assert_eq!(g.basis_element(0).unwrap(), g.element(vec![1, 0]).unwrap());
        assert_eq!(g.basis_element(1).unwrap(), g.element(vec![0, 1]).unwrap());
        assert!(g.basis_element(2).is_err());
        assert_eq!(g.element_order(&g.basis_element(0).unwrap()), 2);
    }
}
