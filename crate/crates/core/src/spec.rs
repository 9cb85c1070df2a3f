//! Serializable descriptors of group constructions.
//!
//! The textual grammar is flat and shared by the CLI, the theorem reports
//! and the roster listing:
//!
//! ```text
//! cyclic:<n>
//! dihedral:<m>
//! dicyclic:<m>
//! metacyclic:<m>:<n>:<k>
//! perm:<degree>:<gen>,<gen>,...      generators in cycle notation, e.g. (0 1 2)(3 4)
//! product:<spec>,<spec>,...          nested products and perms are wrapped in [...]
//! file:<path>
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `0..degree` in one-line image notation: `images[x]` is
/// the image of `x`.
pub type Permutation = Vec<usize>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cyclic(usize),
    DirectProduct(Vec<Family>),
    Dihedral(usize),
    Dicyclic(usize),
    Metacyclic { m: usize, n: usize, k: usize },
    PermClosure { degree: usize, generators: Vec<Permutation> },
    CayleyFile(String),
}

/// A group construction plus the name it is displayed under.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub family: Family,
    pub name: String,
}

impl GroupSpec {
    pub fn new(family: Family) -> Self {
        let name = family.default_name();
        GroupSpec { family, name }
    }

    pub fn named(family: Family, name: impl Into<String>) -> Self {
        GroupSpec { family, name: name.into() }
    }

    pub fn cyclic(n: usize) -> Self {
        Self::new(Family::Cyclic(n))
    }

    pub fn dihedral(m: usize) -> Self {
        Self::new(Family::Dihedral(m))
    }

    pub fn dicyclic(m: usize) -> Self {
        Self::new(Family::Dicyclic(m))
    }

    pub fn metacyclic(m: usize, n: usize, k: usize) -> Self {
        Self::new(Family::Metacyclic { m, n, k })
    }

    pub fn product(parts: Vec<GroupSpec>) -> Self {
        let name = parts
            .iter()
            .map(|p| match p.family {
                Family::DirectProduct(_) => format!("({})", p.name),
                _ => p.name.clone(),
            })
            .collect::<Vec<_>>()
            .join(" x ");
        GroupSpec { family: Family::DirectProduct(parts.into_iter().map(|p| p.family).collect()), name }
    }

    pub fn perm(degree: usize, generators: Vec<Permutation>) -> Self {
        Self::new(Family::PermClosure { degree, generators })
    }

    /// The grammar text for this spec.
    pub fn text(&self) -> String {
        self.family.to_string()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(GroupSpec::new(s.parse()?))
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.text())
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Family {
    pub fn default_name(&self) -> String {
        match self {
            Family::Cyclic(n) => format!("Z{n}"),
            Family::DirectProduct(parts) => parts
                .iter()
                .map(|p| match p {
                    Family::DirectProduct(_) => format!("({})", p.default_name()),
                    _ => p.default_name(),
                })
                .collect::<Vec<_>>()
                .join(" x "),
            Family::Dihedral(m) => format!("D{}", 2 * m),
            Family::Dicyclic(m) if m.is_power_of_two() => format!("Q{}", 4 * m),
            Family::Dicyclic(m) => format!("Dic{m}"),
            &Family::Metacyclic { m, n, k } => {
                if n == 2 && m >= 3 && k == m - 1 {
                    format!("D{}", 2 * m)
                } else if n == 2 && m >= 8 && m.is_power_of_two() && k == m / 2 - 1 {
                    format!("SD{}", 2 * m)
                } else if n == 2 && m >= 8 && m.is_power_of_two() && k == m / 2 + 1 {
                    format!("M{}", 2 * m)
                } else {
                    format!("Z{m}:Z{n}({k})")
                }
            }
            Family::PermClosure { .. } => self.to_string(),
            Family::CayleyFile(path) => std::path::Path::new(path)
                .file_name()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| path.clone()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "cyclic:{n}"),
            Family::Dihedral(m) => write!(f, "dihedral:{m}"),
            Family::Dicyclic(m) => write!(f, "dicyclic:{m}"),
            Family::Metacyclic { m, n, k } => write!(f, "metacyclic:{m}:{n}:{k}"),
            Family::PermClosure { degree, generators } => {
                let gens: Vec<String> = generators.iter().map(|g| cycle_notation(g)).collect();
                write!(f, "perm:{degree}:{}", gens.join(","))
            }
            Family::DirectProduct(parts) => {
                let parts: Vec<String> = parts
                    .iter()
                    .map(|p| match p {
                        Family::DirectProduct(_) | Family::PermClosure { .. } => format!("[{p}]"),
                        _ => p.to_string(),
                    })
                    .collect();
                write!(f, "product:{}", parts.join(","))
            }
            Family::CayleyFile(path) => write!(f, "file:{path}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) =
            s.split_once(':').ok_or_else(|| Error::Parse(format!("expected <family>:<parameters>, got {s:?}")))?;
        match kind.trim() {
            "cyclic" => Ok(Family::Cyclic(parse_usize(rest, "cyclic order")?)),
            "dihedral" => Ok(Family::Dihedral(parse_usize(rest, "dihedral parameter")?)),
            "dicyclic" => Ok(Family::Dicyclic(parse_usize(rest, "dicyclic parameter")?)),
            "metacyclic" => {
                let fields: Vec<&str> = rest.split(':').collect();
                if fields.len() != 3 {
                    return Err(Error::Parse(format!("metacyclic expects m:n:k, got {rest:?}")));
                }
                Ok(Family::Metacyclic {
                    m: parse_usize(fields[0], "metacyclic m")?,
                    n: parse_usize(fields[1], "metacyclic n")?,
                    k: parse_usize(fields[2], "metacyclic k")?,
                })
            }
            "perm" => {
                let (degree, gens) =
                    rest.split_once(':').ok_or_else(|| Error::Parse("perm expects <degree>:<generators>".into()))?;
                let degree = parse_usize(degree, "permutation degree")?;
                if degree == 0 {
                    return Err(Error::Parse("permutation degree must be positive".into()));
                }
                let generators = split_top_level(gens)?
                    .into_iter()
                    .filter(|g| !g.trim().is_empty())
                    .map(|g| parse_cycles(g, degree))
                    .collect::<Result<Vec<_>>>()?;
                Ok(Family::PermClosure { degree, generators })
            }
            "product" => {
                let parts = split_top_level(rest)?;
                if parts.is_empty() || parts.iter().any(|p| p.trim().is_empty()) {
                    return Err(Error::Parse("product expects a non-empty list of specs".into()));
                }
                let parts = parts
                    .into_iter()
                    .map(|p| {
                        let p = p.trim();
                        let inner = p.strip_prefix('[').and_then(|p| p.strip_suffix(']')).unwrap_or(p);
                        inner.parse()
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Family::DirectProduct(parts))
            }
            "file" => {
                if rest.is_empty() {
                    return Err(Error::Parse("file expects a path".into()));
                }
                Ok(Family::CayleyFile(rest.to_string()))
            }
            other => Err(Error::Parse(format!("unknown group family {other:?}"))),
        }
    }
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse(format!("{what}: expected a non-negative integer, got {s:?}")))
}

/// Splits on commas that are not nested inside `()` or `[]`.
fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth: i32 = 0;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
                }
            }
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in {s:?}")));
    }
    parts.push(&s[start..]);
    Ok(parts)
}

/// Parses a product of cycles such as `(0 1 2)(3 4)` into one-line images.
/// Cycles compose right to left. Entries may be separated by spaces or commas;
/// surrounding quotes are ignored.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let text = text.trim().trim_matches(|c| c == '"' || c == '\'').trim();
    let mut perm: Permutation = (0..degree).collect();
    if text.is_empty() || text == "()" || text == "e" {
        return Ok(perm);
    }
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let open =
            rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' in cycle notation {text:?}")))?;
        let close = open.find(')').ok_or_else(|| Error::Parse(format!("unterminated cycle in {text:?}")))?;
        let points = open[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                let p = parse_usize(t, "cycle point")?;
                if p >= degree {
                    return Err(Error::Parse(format!("point {p} out of range for degree {degree}")));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut seen = vec![false; degree];
        for &p in &points {
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parse(format!("point {p} repeated within a cycle")));
            }
        }
        cycles.push(points);
        rest = open[close + 1..].trim_start();
    }
    // rightmost cycle acts first
    for cycle in cycles.iter().rev() {
        let mut step: Permutation = (0..degree).collect();
        for (i, &p) in cycle.iter().enumerate() {
            step[p] = cycle[(i + 1) % cycle.len()];
        }
        perm = perm.iter().map(|&x| step[x]).collect();
    }
    Ok(perm)
}

/// Disjoint-cycle notation of a one-line permutation; the identity is `()`.
pub fn cycle_notation(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = perm[start];
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        let body: Vec<String> = cycle.iter().map(|p| p.to_string()).collect();
        out.push('(');
        out.push_str(&body.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}
