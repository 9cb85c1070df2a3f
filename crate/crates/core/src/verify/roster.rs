//! Deterministic listings of concrete groups.

use std::fmt;
use std::str::FromStr;

use crate::arith::{gcd, multiplicative_order};
use crate::error::{Error, Result};
use crate::group::DEFAULT_MAX_ORDER;
use crate::spec::{parse_cycles, Family, GroupSpec};

/// Largest order a roster may request.
pub const ROSTER_MAX_ORDER: usize = DEFAULT_MAX_ORDER;

/// Families a roster can draw from, in listing order for equal group orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RosterFamily {
    Cyclic,
    /// Non-cyclic abelian groups, one per isomorphism type.
    Abelian,
    Dihedral,
    Dicyclic,
    /// `Z_m : Z_n` twisted by `k`, excluding the dihedral twist.
    Metacyclic,
    /// S3, A4, S4 and A5 as permutation groups.
    Perm,
}

impl RosterFamily {
    pub const ALL: [RosterFamily; 6] = [
        RosterFamily::Cyclic,
        RosterFamily::Abelian,
        RosterFamily::Dihedral,
        RosterFamily::Dicyclic,
        RosterFamily::Metacyclic,
        RosterFamily::Perm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RosterFamily::Cyclic => "cyclic",
            RosterFamily::Abelian => "abelian",
            RosterFamily::Dihedral => "dihedral",
            RosterFamily::Dicyclic => "dicyclic",
            RosterFamily::Metacyclic => "metacyclic",
            RosterFamily::Perm => "perm",
        }
    }
}

impl fmt::Display for RosterFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RosterFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        RosterFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown roster family {s:?}")))
    }
}

/// A roster member with its sort key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RosterEntry {
    pub order: usize,
    pub family: RosterFamily,
    pub params: Vec<usize>,
    pub spec: GroupSpec,
}

const PERMUTATION_GROUPS: [(&str, usize, usize, &[&str]); 4] = [
    ("S3", 6, 3, &["(0 1)", "(0 1 2)"]),
    ("A4", 12, 4, &["(0 1 2)", "(1 2 3)"]),
    ("S4", 24, 4, &["(0 1)", "(0 1 2 3)"]),
    ("A5", 60, 5, &["(0 1 2)", "(0 1 2 3 4)"]),
];

/// Roster members of order at most `max_order` from `families`, sorted by
/// (order, family, parameters).
pub fn roster_entries(max_order: usize, families: &[RosterFamily]) -> Result<Vec<RosterEntry>> {
    if max_order == 0 {
        return Err(Error::Parameter("roster max order must be positive".into()));
    }
    if max_order > ROSTER_MAX_ORDER {
        return Err(Error::Size { order: max_order, max: ROSTER_MAX_ORDER });
    }
    let mut out = Vec::new();
    let wants = |f: RosterFamily| families.contains(&f);
    if wants(RosterFamily::Cyclic) {
        for n in 1..=max_order {
            out.push(entry(n, RosterFamily::Cyclic, vec![n], GroupSpec::cyclic(n)));
        }
    }
    if wants(RosterFamily::Abelian) {
        for shape in noncyclic_abelian_shapes(max_order) {
            let order = shape.iter().product();
            let spec = GroupSpec::product(shape.iter().map(|&q| GroupSpec::cyclic(q)).collect());
            out.push(entry(order, RosterFamily::Abelian, shape, spec));
        }
    }
    if wants(RosterFamily::Dihedral) {
        for m in 3..=max_order / 2 {
            out.push(entry(2 * m, RosterFamily::Dihedral, vec![m], GroupSpec::dihedral(m)));
        }
    }
    if wants(RosterFamily::Dicyclic) {
        for m in 2..=max_order / 4 {
            out.push(entry(4 * m, RosterFamily::Dicyclic, vec![m], GroupSpec::dicyclic(m)));
        }
    }
    if wants(RosterFamily::Metacyclic) {
        for m in 3..=max_order / 2 {
            for n in 2..=max_order / m {
                for k in 2..m {
                    let dihedral = n == 2 && k == m - 1;
                    if !dihedral
                        && gcd(k as u64, m as u64) == 1
                        && multiplicative_order(k as u64, m as u64) == Some(n as u64)
                    {
                        let spec = GroupSpec::metacyclic(m, n, k);
                        out.push(entry(m * n, RosterFamily::Metacyclic, vec![m, n, k], spec));
                    }
                }
            }
        }
    }
    if wants(RosterFamily::Perm) {
        for (i, &(name, order, degree, gens)) in PERMUTATION_GROUPS.iter().enumerate() {
            if order <= max_order {
                let generators = gens.iter().map(|g| parse_cycles(g, degree)).collect::<Result<Vec<_>>>()?;
                let spec = GroupSpec::named(Family::PermClosure { degree, generators }, name);
                out.push(entry(order, RosterFamily::Perm, vec![i], spec));
            }
        }
    }
    out.sort_by(|a, b| (a.order, a.family, &a.params).cmp(&(b.order, b.family, &b.params)));
    Ok(out)
}

/// The specs of [`roster_entries`].
pub fn roster_generate(max_order: usize, families: &[RosterFamily]) -> Result<Vec<GroupSpec>> {
    Ok(roster_entries(max_order, families)?.into_iter().map(|e| e.spec).collect())
}

fn entry(order: usize, family: RosterFamily, params: Vec<usize>, spec: GroupSpec) -> RosterEntry {
    RosterEntry { order, family, params, spec }
}

/// Factor lists (ascending prime powers) of every non-cyclic abelian group of
/// order at most `max_order`.
fn noncyclic_abelian_shapes(max_order: usize) -> Vec<Vec<usize>> {
    let primes: Vec<usize> = (2..=max_order).filter(|&p| crate::arith::is_prime(p as u64)).collect();
    let mut out = Vec::new();
    extend_shapes(&primes, 0, 1, max_order, &mut Vec::new(), false, &mut out);
    out
}

fn extend_shapes(
    primes: &[usize],
    next: usize,
    order: usize,
    max_order: usize,
    factors: &mut Vec<usize>,
    noncyclic: bool,
    out: &mut Vec<Vec<usize>>,
) {
    if noncyclic {
        let mut shape = factors.clone();
        shape.sort_unstable();
        out.push(shape);
    }
    for (i, &p) in primes.iter().enumerate().skip(next) {
        if order * p > max_order {
            break;
        }
        // every partition of the exponent of p, as a non-increasing list
        let mut partitions = Vec::new();
        exponent_partitions(p, max_order / order, usize::MAX, &mut Vec::new(), &mut partitions);
        for parts in partitions {
            let sub: usize = parts.iter().product();
            let len = factors.len();
            factors.extend(&parts);
            extend_shapes(primes, i + 1, order * sub, max_order, factors, noncyclic || parts.len() > 1, out);
            factors.truncate(len);
        }
    }
}

/// Non-empty lists of powers of `p`, non-increasing, with product at most
/// `budget`.
fn exponent_partitions(p: usize, budget: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    let mut q = p;
    while q <= budget && q <= cap {
        current.push(q);
        out.push(current.clone());
        exponent_partitions(p, budget / q, q, current, out);
        current.pop();
        q *= p;
    }
}
