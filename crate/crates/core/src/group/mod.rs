//! Finite groups given by explicit multiplication tables.
//!
//! Elements are dense indices `0..n` and the identity is always index 0.
//! Every constructor funnels through [`FiniteGroup::from_table`], which
//! checks the group laws (subject to [`Limits::validation`]) and caches the
//! per-element orders, inverses and the center.

mod cayley;
mod construct;

use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arith::{self, prime_power_base};
use crate::error::{Error, Result};
use crate::spec::GroupSpec;

pub use cayley::to_cayley_text;
pub use construct::{permutation_closure, product_index};

pub const DEFAULT_MAX_ORDER: usize = 512;

/// Largest order checked exhaustively for associativity under
/// [`Validation::Auto`].
pub const FULL_VALIDATION_CUTOFF: usize = 256;

const SAMPLE_SEED: u64 = 0x5eed_ca11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Validation {
    /// Exhaustive up to [`FULL_VALIDATION_CUTOFF`], sampled above it.
    #[default]
    Auto,
    Full,
    Sampled,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub validation: Validation,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_order: DEFAULT_MAX_ORDER, validation: Validation::Auto }
    }
}

impl Limits {
    pub fn with_max_order(max_order: usize) -> Self {
        Limits { max_order, ..Limits::default() }
    }

    pub(crate) fn check_order(&self, order: usize) -> Result<()> {
        if order == 0 {
            return Err(Error::Parameter("group order must be positive".into()));
        }
        if order > self.max_order {
            return Err(Error::Size { order, max: self.max_order });
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<u64>,
    center: Vec<usize>,
    spec: GroupSpec,
}

/// Primary decomposition of a finite abelian group: one cyclic factor of
/// order `p^t` per entry.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AbelianShape {
    prime_powers: Vec<u64>,
}

impl FiniteGroup {
    /// Builds a group from a row-major `n x n` table whose identity is
    /// already at index 0.
    pub fn from_table(table: Vec<u32>, spec: GroupSpec, limits: &Limits) -> Result<Self> {
        let order = (table.len() as f64).sqrt().round() as usize;
        if order * order != table.len() {
            return Err(Error::Parse(format!("table has {} entries, which is not a square", table.len())));
        }
        limits.check_order(order)?;
        check_closure(&table, order)?;
        check_latin(&table, order)?;
        if (0..order).any(|i| table[i] as usize != i || table[i * order] as usize != i) {
            return Err(Error::NoIdentity);
        }
        let validation = match limits.validation {
            Validation::Auto if order <= FULL_VALIDATION_CUTOFF => Validation::Full,
            Validation::Auto => Validation::Sampled,
            v => v,
        };
        match validation {
            Validation::Full => check_associative_full(&table, order)?,
            Validation::Sampled => check_associative_sampled(&table, order)?,
            _ => {}
        }
        Ok(Self::assemble(order, table, spec))
    }

    fn assemble(order: usize, table: Vec<u32>, spec: GroupSpec) -> Self {
        let mut inverses = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            inverses[a] = row.iter().position(|&x| x == 0).expect("Latin row contains identity") as u32;
        }
        let mut orders = vec![1u64; order];
        for (x, o) in orders.iter_mut().enumerate().skip(1) {
            let mut k = 1;
            let mut y = x;
            while y != 0 {
                y = table[y * order + x] as usize;
                k += 1;
            }
            *o = k;
        }
        let center = (0..order).filter(|&z| (0..order).all(|g| table[z * order + g] == table[g * order + z])).collect();
        FiniteGroup { order, table, inverses, orders, center, spec }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn spec(&self) -> &GroupSpec {
        &self.spec
    }

    pub fn name(&self) -> &str {
        &self.spec.name
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn pow(&self, x: usize, k: u64) -> usize {
        let k = k % self.orders[x];
        (0..k).fold(0, |acc, _| self.mul(acc, x))
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn element_order(&self, x: usize) -> Result<u64> {
        self.check_index(x)?;
        Ok(self.orders[x])
    }

    pub(crate) fn check_index(&self, x: usize) -> Result<()> {
        if x >= self.order {
            return Err(Error::IndexOutOfRange { index: x, order: self.order });
        }
        Ok(())
    }

    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn is_abelian(&self) -> bool {
        self.center.len() == self.order
    }

    pub fn is_cyclic(&self) -> bool {
        self.orders.iter().any(|&o| o as usize == self.order)
    }

    /// The prime `p` when `|G| = p^k` with `k >= 1`; `None` for the trivial
    /// group and for orders with two or more prime divisors.
    pub fn p_group_prime(&self) -> Option<u64> {
        prime_power_base(self.order as u64)
    }

    pub fn is_p_group(&self) -> bool {
        self.p_group_prime().is_some()
    }

    /// Primes dividing `|G|`.
    pub fn prime_divisors(&self) -> Vec<u64> {
        arith::prime_divisors(self.order as u64)
    }

    /// Primes dividing `|Z(G)|`.
    pub fn center_prime_divisors(&self) -> Vec<u64> {
        arith::prime_divisors(self.center.len() as u64)
    }

    /// True when every non-identity element has order 2 (vacuously for the
    /// trivial group).
    pub fn is_elementary_abelian_2(&self) -> bool {
        self.orders.iter().skip(1).all(|&o| o == 2)
    }

    /// `<x>` listed as `e, x, x^2, ...`.
    pub fn cyclic_subgroup(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.orders[x] as usize);
        let mut y = 0;
        loop {
            out.push(y);
            y = self.mul(y, x);
            if y == 0 {
                break;
            }
        }
        out
    }

    /// The subgroup generated by `gens`, sorted.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let a = members[i];
            for &g in gens {
                let b = self.mul(a, g);
                if !seen[b] {
                    seen[b] = true;
                    members.push(b);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    /// Smallest normal subgroup containing `x`: the subgroup generated by all
    /// conjugates `g x g^-1`.
    pub fn normal_closure(&self, x: usize) -> Result<Vec<usize>> {
        self.check_index(x)?;
        let conjugates: HashSet<usize> = (0..self.order).map(|g| self.mul(self.mul(g, x), self.inverse(g))).collect();
        let mut gens: Vec<usize> = conjugates.into_iter().collect();
        gens.sort_unstable();
        Ok(self.subgroup_generated(&gens))
    }

    pub fn is_simple(&self) -> Result<bool> {
        if self.order < 2 {
            return Err(Error::TrivialGroup("is_simple"));
        }
        for x in 1..self.order {
            if self.normal_closure(x)?.len() != self.order {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Number of distinct subgroups of prime order.
    pub fn prime_order_subgroup_count(&self) -> Result<usize> {
        if self.order < 2 {
            return Err(Error::TrivialGroup("prime_order_subgroup_count"));
        }
        let mut subgroups: HashSet<Vec<usize>> = HashSet::new();
        for x in 1..self.order {
            if arith::is_prime(self.orders[x]) {
                let mut c = self.cyclic_subgroup(x);
                c.sort_unstable();
                subgroups.insert(c);
            }
        }
        Ok(subgroups.len())
    }

    pub fn has_unique_minimal_subgroup(&self) -> Result<bool> {
        Ok(self.prime_order_subgroup_count()? == 1)
    }

    /// Non-abelian 2-group with exactly one subgroup of order 2.
    pub fn is_generalized_quaternion(&self) -> bool {
        self.order >= 8
            && self.p_group_prime() == Some(2)
            && !self.is_abelian()
            && self.orders.iter().filter(|&&o| o == 2).count() == 1
    }

    /// Primary decomposition, derived from element-order statistics: inside
    /// the Sylow `p`-part, `log_p |{x : x^(p^k) = e}|` equals `sum_i min(t_i, k)`
    /// over the factor exponents `t_i`.
    pub fn abelian_shape(&self) -> Result<AbelianShape> {
        if !self.is_abelian() {
            return Err(Error::NonAbelian);
        }
        let mut prime_powers = Vec::new();
        for (p, max_exp) in arith::factorize(self.order as u64) {
            // cumulative[k] = log_p of the number of elements with order dividing p^k
            let mut cumulative = Vec::with_capacity(max_exp as usize + 1);
            for k in 0..=max_exp {
                let bound = p.pow(k);
                let count = self.orders.iter().filter(|&&o| bound % o == 0).count() as u64;
                cumulative.push(log_exact(count, p));
            }
            // at_least[k] = number of factors with exponent >= k
            let at_least: Vec<u32> = (1..=max_exp as usize).map(|k| cumulative[k] - cumulative[k - 1]).collect();
            for (i, &count) in at_least.iter().enumerate() {
                let next = at_least.get(i + 1).copied().unwrap_or(0);
                for _ in 0..(count - next) {
                    prime_powers.push(p.pow(i as u32 + 1));
                }
            }
        }
        prime_powers.sort_unstable();
        Ok(AbelianShape { prime_powers })
    }
}

fn log_exact(mut value: u64, p: u64) -> u32 {
    let mut e = 0;
    while value > 1 {
        debug_assert_eq!(value % p, 0, "Sylow counts are powers of p");
        value /= p;
        e += 1;
    }
    e
}

impl AbelianShape {
    pub fn new(mut prime_powers: Vec<u64>) -> Self {
        prime_powers.sort_unstable();
        AbelianShape { prime_powers }
    }

    pub fn prime_powers(&self) -> &[u64] {
        &self.prime_powers
    }

    pub fn order(&self) -> u64 {
        self.prime_powers.iter().product()
    }

    /// Some Sylow subgroup is cyclic: exactly one factor is a power of `p`
    /// for some prime `p`.
    pub fn has_cyclic_sylow(&self) -> bool {
        let primes: Vec<u64> = self.prime_powers.iter().filter_map(|&q| prime_power_base(q)).collect();
        primes.iter().any(|p| primes.iter().filter(|&q| q == p).count() == 1)
    }

    /// Cyclic iff no prime appears twice.
    pub fn is_cyclic(&self) -> bool {
        let primes: Vec<u64> = self.prime_powers.iter().filter_map(|&q| prime_power_base(q)).collect();
        let distinct: HashSet<u64> = primes.iter().copied().collect();
        distinct.len() == primes.len()
    }
}

fn check_closure(table: &[u32], order: usize) -> Result<()> {
    if let Some(pos) = table.iter().position(|&v| v as usize >= order) {
        return Err(Error::Closure { row: pos / order, col: pos % order, value: table[pos] as usize, order });
    }
    Ok(())
}

fn check_latin(table: &[u32], order: usize) -> Result<()> {
    let mut seen = vec![usize::MAX; order];
    for r in 0..order {
        for c in 0..order {
            let v = table[r * order + c] as usize;
            if seen[v] == r {
                return Err(Error::LatinSquare { line: "row", index: r, value: v });
            }
            seen[v] = r;
        }
    }
    seen.fill(usize::MAX);
    for c in 0..order {
        for r in 0..order {
            let v = table[r * order + c] as usize;
            if seen[v] == c {
                return Err(Error::LatinSquare { line: "column", index: c, value: v });
            }
            seen[v] = c;
        }
    }
    Ok(())
}

fn check_associative_full(table: &[u32], n: usize) -> Result<()> {
    for a in 0..n {
        for b in 0..n {
            let ab = table[a * n + b] as usize;
            for c in 0..n {
                let bc = table[b * n + c] as usize;
                if table[ab * n + c] != table[a * n + bc] {
                    return Err(Error::Associativity { a, b, c });
                }
            }
        }
    }
    Ok(())
}

fn check_associative_sampled(table: &[u32], n: usize) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(SAMPLE_SEED);
    let samples = (4 * n * n).min(1 << 20);
    for _ in 0..samples {
        let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
        let ab = table[a * n + b] as usize;
        let bc = table[b * n + c] as usize;
        if table[ab * n + c] != table[a * n + bc] {
            return Err(Error::Associativity { a, b, c });
        }
    }
    Ok(())
}
