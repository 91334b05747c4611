//! Validated numerical semigroups and the brute-force oracles every closed
//! form in this crate is checked against.
//!
//! A [`NumericalSemigroup`] is always stored by its minimal generating set,
//! sorted increasingly, with gcd one. All arithmetic is done on `i64` with
//! checked operations; generators are capped (2^30 by default) so that the
//! quadratic quantities appearing in the formulas stay representable.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest generator accepted by [`NumericalSemigroup::new`] unless lowered
/// through [`CAP_ENV`].
pub const DEFAULT_GENERATOR_CAP: i64 = 1 << 30;

/// Environment variable that lowers the generator cap.
pub const CAP_ENV: &str = "NUMSGP_MAX_GEN";

/// The active generator cap. Read once from [`CAP_ENV`]; values above the
/// default, non-positive values, and garbage are ignored.
pub fn generator_cap() -> i64 {
    static CAP: OnceLock<i64> = OnceLock::new();
    *CAP.get_or_init(|| parse_cap(std::env::var(CAP_ENV).ok().as_deref()))
}

pub(crate) fn parse_cap(raw: Option<&str>) -> i64 {
    raw.and_then(|s| s.trim().parse::<i64>().ok())
        .filter(|&c| c >= 1)
        .map_or(DEFAULT_GENERATOR_CAP, |c| c.min(DEFAULT_GENERATOR_CAP))
}

/// Shortest distances from residue 0 in the graph on `0..modulus` with an
/// edge `i -> (i + g) mod modulus` of weight `g` for every generator `g`.
///
/// Entry `i` is the least nonnegative combination of `gens` congruent to `i`,
/// or `None` when that residue class is never reached.
pub fn residue_distances(gens: &[i64], modulus: i64) -> Result<Vec<Option<i64>>> {
    if modulus <= 0 {
        return Err(Error::NotAnElement(modulus));
    }
    let m = usize::try_from(modulus).map_err(|_| Error::overflow("modulus"))?;
    let mut dist: Vec<Option<i64>> = vec![None; m];
    dist[0] = Some(0);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0usize)));
    while let Some(Reverse((d, node))) = heap.pop() {
        if dist[node] != Some(d) {
            continue;
        }
        for &g in gens {
            let next = (node + (g % modulus) as usize) % m;
            let nd = d
                .checked_add(g)
                .ok_or_else(|| Error::overflow("residue distance"))?;
            if dist[next].map_or(true, |cur| nd < cur) {
                dist[next] = Some(nd);
                heap.push(Reverse((nd, next)));
            }
        }
    }
    Ok(dist)
}

fn gcd_all(values: &[i64]) -> i64 {
    values.iter().fold(0i64, |acc, &v| acc.gcd(&v))
}

/// A numerical semigroup given by its minimal generating set.
#[derive(Clone)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    // Apery set with respect to the multiplicity, filled on first use.
    residues: OnceLock<Vec<i64>>,
}

impl NumericalSemigroup {
    /// Validates `gens` as a minimal generating set with gcd one.
    ///
    /// Duplicates are dropped and the list is sorted, but a redundant
    /// generator is rejected with [`Error::NotMinimal`].
    pub fn new(gens: &[i64]) -> Result<Self> {
        Self::with_cap(gens, generator_cap())
    }

    pub fn with_cap(gens: &[i64], cap: i64) -> Result<Self> {
        let sorted = Self::prepare(gens, cap)?;
        for k in 1..sorted.len() {
            let g = sorted[k];
            if Self::generated_by(&sorted[..k], g)? {
                return Err(Error::NotMinimal { generator: g });
            }
        }
        Ok(Self::from_minimal(sorted))
    }

    /// Builds the semigroup generated by `gens`, discarding redundant
    /// generators instead of rejecting them.
    pub fn from_generating_set(gens: &[i64]) -> Result<Self> {
        let sorted = Self::prepare(gens, generator_cap())?;
        let mut minimal: Vec<i64> = Vec::with_capacity(sorted.len());
        for g in sorted {
            if minimal.is_empty() || !Self::generated_by(&minimal, g)? {
                minimal.push(g);
            }
        }
        Ok(Self::from_minimal(minimal))
    }

    fn prepare(gens: &[i64], cap: i64) -> Result<Vec<i64>> {
        if gens.is_empty() {
            return Err(Error::Empty);
        }
        if let Some(&bad) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::NonPositive(bad));
        }
        if let Some(&big) = gens.iter().find(|&&g| g > cap) {
            return Err(Error::overflow(format!(
                "generator {big} exceeds the cap {cap}"
            )));
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let gcd = gcd_all(&sorted);
        if gcd != 1 {
            return Err(Error::GcdNotOne { gcd });
        }
        Ok(sorted)
    }

    fn generated_by(smaller: &[i64], g: i64) -> Result<bool> {
        let table = residue_distances(smaller, smaller[0])?;
        Ok(table[(g % smaller[0]) as usize].is_some_and(|w| w <= g))
    }

    fn from_minimal(generators: Vec<i64>) -> Self {
        Self {
            generators,
            residues: OnceLock::new(),
        }
    }

    /// The semigroup of all nonnegative integers.
    pub fn naturals() -> Self {
        Self::from_minimal(vec![1])
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    pub fn largest_generator(&self) -> i64 {
        *self.generators.last().expect("nonempty")
    }

    pub fn is_naturals(&self) -> bool {
        self.generators == [1]
    }

    fn residue_table(&self) -> &[i64] {
        self.residues.get_or_init(|| {
            residue_distances(&self.generators, self.multiplicity())
                .expect("generators are capped, distances fit in i64")
                .into_iter()
                .map(|d| d.expect("gcd one reaches every residue"))
                .collect()
        })
    }

    /// Membership test; negative integers are never members.
    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            return false;
        }
        let table = self.residue_table();
        table[(n % self.multiplicity()) as usize] <= n
    }

    /// The Apery set of the semigroup with respect to the element `h`.
    pub fn apery_set(&self, h: i64) -> Result<AperyTable> {
        if h <= 0 || !self.contains(h) {
            return Err(Error::NotAnElement(h));
        }
        let omegas = if h == self.multiplicity() {
            self.residue_table().to_vec()
        } else {
            residue_distances(&self.generators, h)?
                .into_iter()
                .map(|d| d.ok_or_else(|| Error::InternalInconsistency("unreached residue".into())))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(AperyTable { base: h, omegas })
    }

    /// Apery set with respect to the multiplicity.
    pub fn apery_multiplicity(&self) -> AperyTable {
        AperyTable {
            base: self.multiplicity(),
            omegas: self.residue_table().to_vec(),
        }
    }

    /// Largest integer outside the semigroup, `-1` for the naturals.
    pub fn frobenius(&self) -> i64 {
        self.residue_table().iter().copied().max().unwrap_or(0) - self.multiplicity()
    }

    /// Genus computed from the Apery set with respect to the multiplicity.
    pub fn genus(&self) -> i64 {
        let n1 = self.multiplicity();
        self.residue_table().iter().map(|w| w / n1).sum()
    }

    /// Upper bound on the Frobenius number that does not depend on the Apery
    /// computation: `(n1 - 1)(ne - 1) - 1`.
    fn sieve_bound(&self) -> i64 {
        (self.multiplicity() - 1) * (self.largest_generator() - 1)
    }

    /// Reachability sieve over `0..=bound`, independent of the residue graph.
    fn sieve(&self) -> Vec<bool> {
        let bound = self.sieve_bound().max(0) as usize;
        let mut member = vec![false; bound + 1];
        member[0] = true;
        for n in 1..=bound {
            member[n] = self
                .generators
                .iter()
                .any(|&g| (g as usize) <= n && member[n - g as usize]);
        }
        member
    }

    /// All gaps, in increasing order, by direct enumeration.
    pub fn gaps(&self) -> Vec<i64> {
        self.sieve()
            .iter()
            .enumerate()
            .filter(|(_, &m)| !m)
            .map(|(n, _)| n as i64)
            .collect()
    }

    pub fn genus_by_gaps(&self) -> i64 {
        self.sieve().iter().filter(|&&m| !m).count() as i64
    }

    /// Genus from the Apery set with respect to `h`:
    /// `(sum of the Apery set) / h - (h - 1) / 2`.
    pub fn genus_by_apery(&self, h: i64) -> Result<i64> {
        let table = self.apery_set(h)?;
        let sum = table.sum()?;
        let numerator = sum
            .checked_mul(2)
            .and_then(|s| s.checked_sub(h.checked_mul(h - 1)?))
            .ok_or_else(|| Error::overflow("genus numerator"))?;
        let denominator = 2 * h;
        if numerator % denominator != 0 {
            return Err(Error::InternalInconsistency(format!(
                "Apery sum {sum} does not give an integral genus for h = {h}"
            )));
        }
        Ok(numerator / denominator)
    }

    /// Maximal number of generators (with repetition) summing to `n`.
    pub fn order(&self, n: i64) -> Result<u32> {
        if !self.contains(n) {
            return Err(Error::NotAnElement(n));
        }
        Ok(OrderTable::new(self, n)
            .get(n)
            .expect("member has an order"))
    }

    /// Table of orders for `0..=bound`.
    pub fn order_table(&self, bound: i64) -> OrderTable {
        OrderTable::new(self, bound)
    }

    pub fn is_symmetric(&self) -> bool {
        2 * self.genus() == self.frobenius() + 1
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// The Apery set `Ap(H, base)`, indexed by residue: `omegas[i]` is the least
/// element of the semigroup congruent to `i` modulo `base`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AperyTable {
    base: i64,
    omegas: Vec<i64>,
}

impl AperyTable {
    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn omegas(&self) -> &[i64] {
        &self.omegas
    }

    pub fn get(&self, i: usize) -> Option<i64> {
        self.omegas.get(i).copied()
    }

    pub fn max(&self) -> i64 {
        self.omegas.iter().copied().max().unwrap_or(0)
    }

    pub fn sum(&self) -> Result<i64> {
        self.omegas
            .iter()
            .try_fold(0i64, |acc, &w| acc.checked_add(w))
            .ok_or_else(|| Error::overflow("Apery sum"))
    }

    /// Whether `omega_0 < omega_1 < ... < omega_{base-1}`.
    pub fn is_strictly_increasing(&self) -> bool {
        self.omegas.windows(2).all(|w| w[0] < w[1])
    }

    /// Checks the defining properties against membership in `h`.
    pub fn satisfies_invariants(&self, h: &NumericalSemigroup) -> bool {
        self.omegas.len() as i64 == self.base
            && self.omegas.first() == Some(&0)
            && self.omegas.iter().enumerate().all(|(i, &w)| {
                w.rem_euclid(self.base) == i as i64
                    && h.contains(w)
                    && (i == 0 || !h.contains(w - self.base))
            })
    }
}

/// Orders of all integers in `0..=bound`; non-members have no order.
#[derive(Clone, Debug)]
pub struct OrderTable {
    orders: Vec<i32>,
}

impl OrderTable {
    fn new(h: &NumericalSemigroup, bound: i64) -> Self {
        let len = bound.max(0) as usize + 1;
        let mut orders = vec![-1i32; len];
        orders[0] = 0;
        for n in 1..len {
            let mut best = -1;
            for &g in h.generators() {
                let g = g as usize;
                if g > n {
                    break;
                }
                let prev = orders[n - g];
                if prev >= 0 && prev + 1 > best {
                    best = prev + 1;
                }
            }
            orders[n] = best;
        }
        Self { orders }
    }

    pub fn bound(&self) -> i64 {
        self.orders.len() as i64 - 1
    }

    pub fn get(&self, n: i64) -> Option<u32> {
        if n < 0 {
            return None;
        }
        self.orders
            .get(n as usize)
            .and_then(|&o| u32::try_from(o).ok())
    }

    /// `(n, ord(n))` for every member `n` in the table.
    pub fn members(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.orders
            .iter()
            .enumerate()
            .filter(|(_, &o)| o >= 0)
            .map(|(n, &o)| (n as i64, o as u32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    // Brute force: least element of each residue class, searching
    // combinations below a generous bound.
    fn brute_apery(gens: &[i64], h: i64) -> Vec<i64> {
        let bound = (h + 1) * gens.iter().max().unwrap() * 2;
        let mut member = vec![false; bound as usize + 1];
        member[0] = true;
        for n in 1..=bound as usize {
            member[n] = gens
                .iter()
                .any(|&g| g as usize <= n && member[n - g as usize]);
        }
        (0..h)
            .map(|i| {
                (i..=bound)
                    .step_by(h as usize)
                    .find(|&n| member[n as usize])
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn construction() {
        let h = sg(&[2, 3]);
        assert_eq!(h.multiplicity(), 2);
        assert_eq!(h.embedding_dimension(), 2);
        assert_eq!(sg(&[8, 5, 6]).generators(), &[5, 6, 8]);
        assert_eq!(sg(&[5, 5, 6]).generators(), &[5, 6]);
        assert_eq!(
            NumericalSemigroup::new(&[4, 6, 8]),
            Err(Error::GcdNotOne { gcd: 2 })
        );
        assert_eq!(
            NumericalSemigroup::new(&[3, 5, 8]),
            Err(Error::NotMinimal { generator: 8 })
        );
        assert_eq!(
            NumericalSemigroup::new(&[1, 2]),
            Err(Error::NotMinimal { generator: 2 })
        );
        assert_eq!(NumericalSemigroup::new(&[]), Err(Error::Empty));
        assert_eq!(NumericalSemigroup::new(&[0, 3]), Err(Error::NonPositive(0)));
        assert!(matches!(
            NumericalSemigroup::with_cap(&[5, 7], 6),
            Err(Error::Overflow(_))
        ));
        assert!(sg(&[1]).is_naturals());
    }

    #[test]
    fn cap_parsing() {
        assert_eq!(parse_cap(None), DEFAULT_GENERATOR_CAP);
        assert_eq!(parse_cap(Some("1000")), 1000);
        assert_eq!(parse_cap(Some("99999999999")), DEFAULT_GENERATOR_CAP);
        assert_eq!(parse_cap(Some("-4")), DEFAULT_GENERATOR_CAP);
        assert_eq!(parse_cap(Some("lots")), DEFAULT_GENERATOR_CAP);
    }

    #[test]
    fn normalizing_constructor() {
        let h = NumericalSemigroup::from_generating_set(&[5, 2, 4]).unwrap();
        assert_eq!(h.generators(), &[2, 5]);
        let n = NumericalSemigroup::from_generating_set(&[5, 1, 2]).unwrap();
        assert!(n.is_naturals());
    }

    #[test]
    fn membership() {
        let h = sg(&[5, 6, 8]);
        assert!(!h.contains(9));
        assert!(h.contains(0));
        assert!(h.contains(19));
        assert!(!h.contains(-5));
        assert!(h.contains(1_000_000));
    }

    #[test]
    fn apery_examples() {
        assert_eq!(sg(&[2, 3]).apery_set(2).unwrap().omegas(), &[0, 3]);
        assert_eq!(
            sg(&[5, 6, 13]).apery_set(5).unwrap().omegas(),
            &[0, 6, 12, 13, 19]
        );
        assert_eq!(
            sg(&[6, 7, 11]).apery_set(6).unwrap().omegas(),
            &[0, 7, 14, 21, 22, 11]
        );
        assert_eq!(brute_apery(&[5, 6, 13], 5), vec![0, 6, 12, 13, 19]);
        assert_eq!(brute_apery(&[6, 7, 11], 6), vec![0, 7, 14, 21, 22, 11]);
        assert_eq!(sg(&[5, 6, 8]).apery_set(9), Err(Error::NotAnElement(9)));
        assert_eq!(sg(&[5, 6, 8]).apery_set(0), Err(Error::NotAnElement(0)));
    }

    #[test]
    fn apery_matches_brute_force_for_non_multiplicity_bases() {
        for gens in [[5, 6, 13], [7, 8, 12], [4, 9, 11]] {
            let h = sg(&gens);
            for base in (1..=3 * gens[0]).filter(|&b| h.contains(b)) {
                let t = h.apery_set(base).unwrap();
                assert_eq!(t.omegas(), brute_apery(&gens, base).as_slice());
                assert!(t.satisfies_invariants(&h));
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(sg(&[2, 3]).frobenius(), 1);
        assert_eq!(sg(&[5, 6, 13]).frobenius(), 14);
        assert_eq!(sg(&[7, 8, 12]).frobenius(), 25);
        assert_eq!(sg(&[1]).frobenius(), -1);
        assert_eq!(*sg(&[7, 8, 12]).gaps().last().unwrap(), 25);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(sg(&[2, 3]).gaps(), vec![1]);
        assert_eq!(sg(&[2, 3]).genus_by_gaps(), 1);
        assert_eq!(sg(&[7, 8, 10]).genus_by_gaps(), 11);
        assert_eq!(sg(&[6, 7, 11]).genus_by_gaps(), 10);
        assert_eq!(sg(&[1]).genus_by_gaps(), 0);
        assert_eq!(sg(&[2, 3]).genus_by_apery(2), Ok(1));
        assert_eq!(sg(&[5, 6, 13]).genus_by_apery(5), Ok(8));
        assert_eq!(sg(&[5, 6, 13]).genus_by_gaps(), 8);
        // Apery sum of <7,8,12> w.r.t. 7 is 112, so 112/7 - 3 = 13.
        assert_eq!(sg(&[7, 8, 12]).apery_set(7).unwrap().sum(), Ok(112));
        assert_eq!(sg(&[7, 8, 12]).genus_by_apery(7), Ok(13));
        assert_eq!(sg(&[7, 8, 12]).genus_by_gaps(), 13);
    }

    #[test]
    fn order_examples() {
        let h = sg(&[6, 7, 11]);
        assert_eq!(h.order(0), Ok(0));
        assert_eq!(h.order(22), Ok(2));
        assert_eq!(h.order(28), Ok(4));
        assert_eq!(h.order(8), Err(Error::NotAnElement(8)));
    }

    #[test]
    fn symmetry_examples() {
        assert!(sg(&[2, 3]).is_symmetric());
        assert!(!sg(&[7, 8, 10]).is_symmetric());
        assert!(!sg(&[3, 4, 5]).is_symmetric());
        assert!(sg(&[1]).is_symmetric());
    }

    #[test]
    fn two_generator_closed_forms() {
        for a in 2..=40i64 {
            for b in a + 1..=40 {
                if a.gcd(&b) != 1 {
                    continue;
                }
                let h = sg(&[a, b]);
                assert_eq!(h.frobenius(), a * b - a - b);
                assert_eq!(h.genus_by_gaps(), (a - 1) * (b - 1) / 2);
            }
        }
    }
}
