//! Cayley table text format.
//!
//! ```text
//! # comment lines start with '#'
//! 2
//! 0 1
//! 1 0
//! ```
//!
//! The first line is the order `n`, followed by `n` rows of `n`
//! whitespace-separated 0-based indices. The identity may sit at any index;
//! it is swapped to index 0 on ingestion.

use super::{check_closure, check_latin, FiniteGroup, Limits};
use crate::error::{Error, Result};
use crate::spec::{Family, GroupSpec};

impl FiniteGroup {
    pub fn from_cayley(text: &str, limits: &Limits) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (lineno, header) = lines.next().ok_or_else(|| Error::Parse("empty Cayley file".into()))?;
        let order: usize = header
            .parse()
            .map_err(|_| Error::Parse(format!("line {lineno}: expected the group order, got {header:?}")))?;
        limits.check_order(order)?;

        let mut table = Vec::with_capacity(order * order);
        for row in 0..order {
            let (lineno, line) =
                lines.next().ok_or_else(|| Error::Parse(format!("expected {order} rows, found {row}")))?;
            let entries = line
                .split_whitespace()
                .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("line {lineno}: bad entry {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if entries.len() != order {
                return Err(Error::Parse(format!("line {lineno}: expected {order} entries, found {}", entries.len())));
            }
            table.extend(entries);
        }
        if let Some((lineno, _)) = lines.next() {
            return Err(Error::Parse(format!("line {lineno}: trailing data after {order} rows")));
        }

        check_closure(&table, order)?;
        check_latin(&table, order)?;
        let identity = (0..order)
            .find(|&e| (0..order).all(|i| table[e * order + i] as usize == i && table[i * order + e] as usize == i))
            .ok_or(Error::NoIdentity)?;
        let table = swap_labels(&table, order, 0, identity);
        Self::from_table(table, GroupSpec::new(Family::CayleyFile("<inline>".into())), limits)
    }
}

/// Relabels elements `a` and `b` in a row-major table.
fn swap_labels(table: &[u32], order: usize, a: usize, b: usize) -> Vec<u32> {
    if a == b {
        return table.to_vec();
    }
    let relabel = |x: usize| {
        if x == a {
            b
        } else if x == b {
            a
        } else {
            x
        }
    };
    let mut out = vec![0u32; table.len()];
    for i in 0..order {
        for j in 0..order {
            out[relabel(i) * order + relabel(j)] = relabel(table[i * order + j] as usize) as u32;
        }
    }
    out
}

/// Writes a table in the Cayley file format.
pub fn to_cayley_text(group: &FiniteGroup) -> String {
    let n = group.order();
    let mut out = format!("# {}\n{n}\n", group.name());
    for row in group.table().chunks(n) {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
