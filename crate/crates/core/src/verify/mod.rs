//! Machine checks of the structural theorems about enhanced power graphs.
//!
//! Each [`TheoremCheck`] pairs an applicability filter with an evaluation
//! comparing a graph-side predicate to a group-side one. Checks run over a
//! roster of concrete groups and produce a [`TheoremReport`]; a
//! counterexample always means an implementation bug.

mod checks;
mod roster;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::arith::gcd;
use crate::epg::EpgBundle;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Limits};
use crate::spec::GroupSpec;

pub use roster::{roster_entries, roster_generate, RosterEntry, RosterFamily, ROSTER_MAX_ORDER};

/// Identifiers of the encoded theorems, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    T2_1,
    T2_2,
    C2_3,
    T2_4,
    T3_1,
    T3_2,
    T3_3,
    T3_4,
    T4_1,
    T4_2,
    T5_1,
    T5_2,
    T5_3,
    T5_4,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::T2_1,
        TheoremId::T2_2,
        TheoremId::C2_3,
        TheoremId::T2_4,
        TheoremId::T3_1,
        TheoremId::T3_2,
        TheoremId::T3_3,
        TheoremId::T3_4,
        TheoremId::T4_1,
        TheoremId::T4_2,
        TheoremId::T5_1,
        TheoremId::T5_2,
        TheoremId::T5_3,
        TheoremId::T5_4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::T2_1 => "T2.1",
            TheoremId::T2_2 => "T2.2",
            TheoremId::C2_3 => "C2.3",
            TheoremId::T2_4 => "T2.4",
            TheoremId::T3_1 => "T3.1",
            TheoremId::T3_2 => "T3.2",
            TheoremId::T3_3 => "T3.3",
            TheoremId::T3_4 => "T3.4",
            TheoremId::T4_1 => "T4.1",
            TheoremId::T4_2 => "T4.2",
            TheoremId::T5_1 => "T5.1",
            TheoremId::T5_2 => "T5.2",
            TheoremId::T5_3 => "T5.3",
            TheoremId::T5_4 => "T5.4",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown theorem id {s:?}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Iff,
    /// The group side implies the graph side; the filter carries the
    /// hypothesis, so the group side is constant.
    Implies,
}

/// Both sides of a check on one group.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Evaluation {
    pub graph_side: Value,
    pub group_side: Value,
    pub holds: bool,
    pub witness: Value,
}

type Filter = fn(&GroupSpec, &FiniteGroup) -> bool;
type Evaluate = fn(&GroupSpec, &EpgBundle<'_>) -> Evaluation;

#[derive(Clone, Copy)]
pub struct TheoremCheck {
    pub id: TheoremId,
    pub direction: Direction,
    pub filter: Filter,
    pub evaluate: Evaluate,
}

impl fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TheoremCheck").field("id", &self.id).field("direction", &self.direction).finish()
    }
}

/// Orders a non-cyclic group and the cyclic factor may take in the coprime
/// product roster.
const EXTENSION_BASE_MAX: usize = 24;
const EXTENSION_FACTORS: [usize; 4] = [3, 5, 7, 9];

impl TheoremCheck {
    pub fn get(id: TheoremId) -> Self {
        use checks::*;
        use Direction::*;
        let (direction, filter, evaluate): (Direction, Filter, Evaluate) = match id {
            TheoremId::T2_1 => (Iff, any_group, gen_classes_apart),
            TheoremId::T2_2 => (Iff, any_group, cycle_iff_order_three),
            TheoremId::C2_3 => (Iff, any_group, bipartite_tree_star),
            TheoremId::T2_4 => (Iff, any_group, complete_iff_cyclic),
            TheoremId::T3_1 => (Implies, coprime_cyclic_extension, coprime_extension_cone),
            TheoremId::T3_2 => (Iff, abelian, abelian_cone_iff_cyclic_sylow),
            TheoremId::T3_3 => (Iff, nonabelian_p_group, p_group_cone_iff_quaternion),
            TheoremId::T3_4 => (Implies, nonabelian_simple, simple_has_no_cone),
            TheoremId::T4_1 => (Iff, any_group, planar_iff_small_orders),
            TheoremId::T4_2 => (Iff, any_group, eulerian_iff_odd),
            TheoremId::T5_1 => (Iff, p_group, connected_iff_unique_minimal),
            TheoremId::T5_2 => (Implies, center_two_primes, deleted_connected),
            TheoremId::T5_3 => (Iff, center_p_group, connected_iff_escape),
            TheoremId::T5_4 => (Iff, any_group, forest_iff_orders_below_four),
        };
        TheoremCheck { id, direction, filter, evaluate }
    }

    pub fn all() -> Vec<TheoremCheck> {
        TheoremId::ALL.into_iter().map(TheoremCheck::get).collect()
    }

    /// Smallest roster bound at which the default roster admits a group.
    pub fn first_instance_order(&self) -> usize {
        match self.id {
            TheoremId::T3_1 | TheoremId::T5_3 => 12,
            TheoremId::T3_3 => 8,
            TheoremId::T3_4 => 60,
            TheoremId::T5_1 => 2,
            TheoremId::T5_2 => 6,
            _ => 1,
        }
    }

    /// The roster this check runs over for a given bound: the full roster,
    /// except for the coprime products `G x Z_n` used by the cone-extension
    /// check.
    pub fn default_roster(&self, max_order: usize) -> Result<Vec<GroupSpec>> {
        if self.id != TheoremId::T3_1 {
            return roster_generate(max_order, &RosterFamily::ALL);
        }
        let base_families = &RosterFamily::ALL[1..];
        let bases = roster_entries(max_order.min(EXTENSION_BASE_MAX), base_families)?;
        let mut pairs = Vec::new();
        for (i, base) in bases.iter().enumerate() {
            for n in EXTENSION_FACTORS {
                if gcd(base.order as u64, n as u64) == 1 && base.order * n <= max_order {
                    pairs.push((base.order * n, i, n));
                }
            }
        }
        pairs.sort_unstable();
        Ok(pairs
            .into_iter()
            .map(|(_, i, n)| GroupSpec::product(vec![bases[i].spec.clone(), GroupSpec::cyclic(n)]))
            .collect())
    }
}

/// A group that failed a check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub spec: GroupSpec,
    pub graph_side: Value,
    pub group_side: Value,
    pub witness: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub tested: usize,
    pub passed: usize,
    pub vacuous: bool,
    pub counterexamples: Vec<Counterexample>,
    /// Wall time in milliseconds; the only nondeterministic field.
    pub ms: u64,
}

impl TheoremReport {
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// The evaluation of one admitted roster member.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub spec: GroupSpec,
    pub evaluation: Evaluation,
}

/// Evaluates `check` on every roster member passing its filter, in roster
/// order. Groups are built and checked in parallel.
pub fn evaluate_roster(check: &TheoremCheck, roster: &[GroupSpec]) -> Result<Vec<Outcome>> {
    let limits = Limits::with_max_order(ROSTER_MAX_ORDER.max(1));
    let results: Vec<Result<Option<Outcome>>> = roster
        .par_iter()
        .map(|spec| {
            let group = FiniteGroup::from_spec(spec, &limits)?;
            if !(check.filter)(spec, &group) {
                return Ok(None);
            }
            let bundle = EpgBundle::new(&group);
            Ok(Some(Outcome { spec: spec.clone(), evaluation: (check.evaluate)(spec, &bundle) }))
        })
        .collect();
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

pub fn run_check(check: &TheoremCheck, roster: &[GroupSpec]) -> Result<TheoremReport> {
    Ok(run_check_detailed(check, roster)?.0)
}

/// [`run_check`] together with the per-group outcomes.
pub fn run_check_detailed(check: &TheoremCheck, roster: &[GroupSpec]) -> Result<(TheoremReport, Vec<Outcome>)> {
    let start = Instant::now();
    let outcomes = evaluate_roster(check, roster)?;
    let counterexamples: Vec<Counterexample> = outcomes
        .iter()
        .filter(|o| !o.evaluation.holds)
        .map(|o| Counterexample {
            spec: o.spec.clone(),
            graph_side: o.evaluation.graph_side.clone(),
            group_side: o.evaluation.group_side.clone(),
            witness: o.evaluation.witness.clone(),
        })
        .collect();
    let report = TheoremReport {
        theorem: check.id,
        tested: outcomes.len(),
        passed: outcomes.len() - counterexamples.len(),
        vacuous: outcomes.is_empty(),
        counterexamples,
        ms: start.elapsed().as_millis() as u64,
    };
    Ok((report, outcomes))
}

/// Runs the checks in `ids` (report order follows `ids`) over their default
/// rosters for `max_order`.
pub fn run_selected(ids: &[TheoremId], max_order: usize) -> Result<Vec<TheoremReport>> {
    ids.iter()
        .map(|&id| {
            let check = TheoremCheck::get(id);
            run_check(&check, &check.default_roster(max_order)?)
        })
        .collect()
}

/// All fourteen checks, ordered by theorem id.
pub fn run_all(max_order: usize) -> Result<Vec<TheoremReport>> {
    run_selected(&TheoremId::ALL, max_order)
}

/// True when a report is vacuous although its default roster should have
/// admitted a group at this bound.
pub fn unexpectedly_vacuous(report: &TheoremReport, max_order: usize) -> bool {
    report.vacuous && max_order >= TheoremCheck::get(report.theorem).first_instance_order()
}
