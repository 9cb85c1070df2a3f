use std::collections::HashMap;

use super::{FiniteGroup, Limits};
use crate::arith::{gcd, pow_mod};
use crate::error::{Error, Result};
use crate::spec::{Family, GroupSpec, Permutation};

/// Index of the tuple `coords` in a direct product whose factors have the
/// given orders. The first factor is the most significant digit.
pub fn product_index(factor_orders: &[usize], coords: &[usize]) -> usize {
    assert_eq!(factor_orders.len(), coords.len());
    factor_orders.iter().zip(coords).fold(0, |acc, (&n, &c)| {
        debug_assert!(c < n);
        acc * n + c
    })
}

impl FiniteGroup {
    /// `Z_n` under addition; element `i` is the residue `i`.
    pub fn cyclic(n: usize, limits: &Limits) -> Result<Self> {
        limits.check_order(n)?;
        let table = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        Self::from_table(table, GroupSpec::cyclic(n), limits)
    }

    /// Componentwise product, indexed by [`product_index`].
    pub fn direct_product(parts: &[&FiniteGroup], limits: &Limits) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Parameter("direct product of zero groups".into()));
        }
        let order = parts
            .iter()
            .try_fold(1usize, |acc, g| acc.checked_mul(g.order()))
            .filter(|&o| o <= limits.max_order)
            .ok_or_else(|| Error::Size {
                order: parts.iter().fold(1usize, |a, g| a.saturating_mul(g.order())),
                max: limits.max_order,
            })?;
        let orders: Vec<usize> = parts.iter().map(|g| g.order()).collect();
        let decode = |mut x: usize| {
            let mut coords = vec![0; parts.len()];
            for i in (0..parts.len()).rev() {
                coords[i] = x % orders[i];
                x /= orders[i];
            }
            coords
        };
        let coords: Vec<Vec<usize>> = (0..order).map(decode).collect();
        let mut table = Vec::with_capacity(order * order);
        for a in &coords {
            for b in &coords {
                let prod = a.iter().zip(b).zip(parts).fold(0, |acc, ((&x, &y), g)| acc * g.order() + g.mul(x, y));
                table.push(prod as u32);
            }
        }
        let spec = GroupSpec::product(parts.iter().map(|g| g.spec().clone()).collect());
        Self::from_table(table, spec, limits)
    }

    /// Pairs `(i, j)` with `i` in `Z_2m`, `j` in `{0, 1}`, stored at index
    /// `j * 2m + i`; `a = (1, 0)`, `b = (0, 1)`, `b^2 = a^m`, `b a b^-1 = a^-1`.
    pub fn dicyclic(m: usize, limits: &Limits) -> Result<Self> {
        if m < 2 {
            return Err(Error::Parameter(format!("dicyclic needs m >= 2, got {m}")));
        }
        let order = m.checked_mul(4).ok_or(Error::Size { order: usize::MAX, max: limits.max_order })?;
        limits.check_order(order)?;
        let r = 2 * m;
        let index = |i: usize, j: usize| (j * r + i) as u32;
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let (i1, j1) = (a % r, a / r);
            for b in 0..order {
                let (i2, j2) = (b % r, b / r);
                let prod = match (j1, j2) {
                    (0, _) => index((i1 + i2) % r, j2),
                    (1, 0) => index((i1 + r - i2) % r, 1),
                    _ => index((i1 + r - i2 + m) % r, 0),
                };
                table.push(prod);
            }
        }
        Self::from_table(table, GroupSpec::dicyclic(m), limits)
    }

    /// `Z_m x| Z_n` with `(i1, j1)(i2, j2) = (i1 + k^j1 i2, j1 + j2)`, stored
    /// at index `j * m + i`.
    pub fn metacyclic(m: usize, n: usize, k: usize, limits: &Limits) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Parameter("metacyclic needs m, n >= 1".into()));
        }
        let (m64, k64) = (m as u64, k as u64);
        if gcd(k64 % m64, m64) != 1 {
            return Err(Error::Parameter(format!("gcd({k}, {m}) != 1")));
        }
        if pow_mod(k64, n as u64, m64) != 1 % m64 {
            return Err(Error::Parameter(format!("{k}^{n} is not 1 mod {m}")));
        }
        let order = m.checked_mul(n).ok_or(Error::Size { order: usize::MAX, max: limits.max_order })?;
        limits.check_order(order)?;
        let twist: Vec<usize> = (0..n).map(|j| pow_mod(k64, j as u64, m64) as usize).collect();
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            let (i1, j1) = (a % m, a / m);
            for b in 0..order {
                let (i2, j2) = (b % m, b / m);
                let i = (i1 + twist[j1] * i2) % m;
                let j = (j1 + j2) % n;
                table.push((j * m + i) as u32);
            }
        }
        let spec = GroupSpec::metacyclic(m, n, k);
        Self::from_table(table, spec, limits)
    }

    /// The dihedral group of order `2m`, as `metacyclic(m, 2, m - 1)`.
    pub fn dihedral(m: usize, limits: &Limits) -> Result<Self> {
        if m == 0 {
            return Err(Error::Parameter("dihedral needs m >= 1".into()));
        }
        let mut g = Self::metacyclic(m, 2, m - 1, limits)?;
        g.spec = GroupSpec::dihedral(m);
        Ok(g)
    }

    /// Breadth-first closure of `generators` under composition. Elements are
    /// numbered in discovery order starting from the identity. The product
    /// `p * q` is the permutation `x -> p(q(x))`.
    pub fn from_permutations(degree: usize, generators: &[Permutation], limits: &Limits) -> Result<Self> {
        let (elements, _) = permutation_closure(degree, generators, limits.max_order)?;
        let index: HashMap<&[usize], usize> = elements.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for p in &elements {
            for q in &elements {
                let pq: Permutation = q.iter().map(|&x| p[x]).collect();
                table.push(index[pq.as_slice()] as u32);
            }
        }
        let spec = GroupSpec::perm(degree, generators.to_vec());
        Self::from_table(table, spec, limits)
    }

    /// Builds the group a spec describes. The returned group carries `spec`
    /// (including its display name) as provenance.
    pub fn from_spec(spec: &GroupSpec, limits: &Limits) -> Result<Self> {
        let mut g = Self::from_family(&spec.family, limits)?;
        g.spec = spec.clone();
        Ok(g)
    }

    fn from_family(family: &Family, limits: &Limits) -> Result<Self> {
        match family {
            &Family::Cyclic(n) => Self::cyclic(n, limits),
            &Family::Dihedral(m) => Self::dihedral(m, limits),
            &Family::Dicyclic(m) => Self::dicyclic(m, limits),
            &Family::Metacyclic { m, n, k } => Self::metacyclic(m, n, k, limits),
            Family::PermClosure { degree, generators } => Self::from_permutations(*degree, generators, limits),
            Family::DirectProduct(parts) => {
                let groups = parts.iter().map(|p| Self::from_family(p, limits)).collect::<Result<Vec<_>>>()?;
                let refs: Vec<&FiniteGroup> = groups.iter().collect();
                Self::direct_product(&refs, limits)
            }
            Family::CayleyFile(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io { path: path.clone(), message: e.to_string() })?;
                let mut g = Self::from_cayley(&text, limits)?;
                g.spec = GroupSpec::new(family.clone());
                Ok(g)
            }
        }
    }
}

/// All elements of the permutation group generated by `generators`, in the
/// order [`FiniteGroup::from_permutations`] numbers them, paired with the degree.
pub fn permutation_closure(
    degree: usize,
    generators: &[Permutation],
    max_order: usize,
) -> Result<(Vec<Permutation>, usize)> {
    if degree == 0 {
        return Err(Error::Parameter("permutation degree must be positive".into()));
    }
    for g in generators {
        let mut seen = vec![false; degree];
        let valid = g.len() == degree && g.iter().all(|&x| x < degree && !std::mem::replace(&mut seen[x], true));
        if !valid {
            return Err(Error::Parameter(format!("{g:?} is not a permutation of 0..{degree}")));
        }
    }
    let identity: Permutation = (0..degree).collect();
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(identity.clone(), 0);
    let mut elements = vec![identity];
    let mut i = 0;
    while i < elements.len() {
        for g in generators {
            let next: Permutation = g.iter().map(|&x| elements[i][x]).collect();
            if !index.contains_key(&next) {
                if elements.len() == max_order {
                    return Err(Error::Size { order: max_order + 1, max: max_order });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        i += 1;
    }
    Ok((elements, degree))
}
