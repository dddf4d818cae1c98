//! Enumeration of algebra types of a given dimension, filtered by
//! divisibility rules with a per-candidate elimination trace.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::fusion::{Profile, TypeSignature};
use crate::groups::prime_factors;
use crate::search::{search_fusion, SearchOutcome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("unknown rule {0}")]
    UnknownRule(String),
    #[error("several types fit: {}", .0.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(" | "))]
    Ambiguous(Vec<TypeSignature>),
    #[error("no type fits: {0}")]
    NoSolution(String),
}

/// Identifier of a census rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    R8,
    R9,
    R10,
}

pub const ALL_RULES: [RuleId; 10] = [
    RuleId::R1,
    RuleId::R2,
    RuleId::R3,
    RuleId::R4,
    RuleId::R5,
    RuleId::R6,
    RuleId::R7,
    RuleId::R8,
    RuleId::R9,
    RuleId::R10,
];

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}", *self as u8 + 1)
    }
}

impl FromStr for RuleId {
    type Err = CensusError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let k: usize = s
            .trim()
            .trim_start_matches(['R', 'r'])
            .parse()
            .map_err(|_| CensusError::UnknownRule(s.to_string()))?;
        ALL_RULES
            .get(k.wrapping_sub(1))
            .copied()
            .ok_or_else(|| CensusError::UnknownRule(s.to_string()))
    }
}

impl Serialize for RuleId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Parses `all`, `R1..R8`, or a comma-separated list such as `R1,R4,R5`.
pub fn parse_rule_set(s: &str) -> Result<Vec<RuleId>, CensusError> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("all") {
        return Ok(ALL_RULES.to_vec());
    }
    let mut set = BTreeSet::new();
    for part in s.split(',') {
        let part = part.trim();
        if let Some((a, b)) = part
            .split_once("..")
            .or_else(|| part.split_once('-'))
            .or_else(|| part.split_once('–'))
        {
            let (a, b): (RuleId, RuleId) = (a.parse()?, b.parse()?);
            for r in ALL_RULES {
                if a <= r && r <= b {
                    set.insert(r);
                }
            }
        } else {
            set.insert(part.parse()?);
        }
    }
    set.insert(RuleId::R1);
    Ok(set.into_iter().collect())
}

/// Facts the rules are derived from, as named results.
pub fn rule_citation(rule: RuleId) -> &'static str {
    match rule {
        RuleId::R1 => "Wedderburn decomposition of a semisimple algebra",
        RuleId::R2 | RuleId::R3 => "Nichols-Zoeller freeness over the group algebra of G(H*)",
        RuleId::R4 => "Nichols-Zoeller with the degree-one count n = 1",
        RuleId::R5 => "Nichols-Zoeller: an irreducible of degree 2 forces even dimension",
        RuleId::R6 => "Nichols-Richmond: degree 2 with no nontrivial group-likes gives a quotient of dimension 60",
        RuleId::R7 => "Nichols-Richmond with stable degree-2 characters and Nichols-Zoeller",
        RuleId::R8 => "Nichols-Richmond: nontrivial stabilizers of degree-2 characters contain involutions",
        RuleId::R9 => {
            "stable degree-2 characters span a standard subalgebra, hence a quotient Hopf algebra (Nichols-Zoeller)"
        }
        RuleId::R10 => "decomposition of χχ* with the stabilizer order dividing (deg χ)²",
    }
}

fn no_special_divisor(dim: u64) -> bool {
    [12, 24, 60].iter().all(|x| !dim.is_multiple_of(*x))
}

/// Whether the rule's hypotheses apply to the candidate.
pub fn rule_applies(rule: RuleId, dim: u64, ty: &TypeSignature) -> bool {
    let n2 = ty.multiplicity(2);
    match rule {
        RuleId::R1 | RuleId::R2 | RuleId::R3 | RuleId::R10 => true,
        RuleId::R4 => ty.n == 1,
        RuleId::R5 => n2 > 0,
        RuleId::R6 => ty.n == 1 && n2 > 0,
        RuleId::R7 => ty.n == 2 && n2 > 0 && no_special_divisor(dim),
        RuleId::R8 => n2 > 0 && no_special_divisor(dim),
        RuleId::R9 => !dim.is_multiple_of(12) && ty.multiplicity(4) == 0 && n2 > 0,
    }
}

fn n_span_contains(value: u64, gens: &[u64]) -> bool {
    let v = value as usize;
    let mut ok = vec![false; v + 1];
    ok[0] = true;
    for i in 1..=v {
        ok[i] = gens.iter().any(|&d| i >= d as usize && ok[i - d as usize]);
    }
    ok[v]
}

/// `None` when the candidate passes, otherwise the reason it is eliminated.
pub fn rule_check(rule: RuleId, dim: u64, ty: &TypeSignature) -> Option<String> {
    if !rule_applies(rule, dim, ty) {
        return None;
    }
    let n = ty.n;
    let n2 = ty.multiplicity(2);
    match rule {
        RuleId::R1 => (ty.dim() != dim).then(|| format!("{} != {dim}", ty.dim())),
        RuleId::R2 => (!dim.is_multiple_of(n)).then(|| format!("{n} does not divide {dim}")),
        RuleId::R3 => ty
            .entries
            .iter()
            .find(|&&(d, m)| (m * d * d) % n != 0)
            .map(|&(d, m)| format!("{n} does not divide {m}·{d}²={}", m * d * d)),
        RuleId::R4 => {
            (ty.entries.len() < 3).then(|| format!("only {} distinct degrees above 1 with n = 1", ty.entries.len()))
        }
        RuleId::R5 => (!dim.is_multiple_of(2)).then(|| format!("degree 2 present but {dim} is odd")),
        RuleId::R6 => (!dim.is_multiple_of(60)).then(|| format!("60 does not divide {dim}")),
        RuleId::R7 => {
            (!dim.is_multiple_of(2 + 4 * n2)).then(|| format!("2+4·{n2}={} does not divide {dim}", 2 + 4 * n2))
        }
        RuleId::R8 => (!n.is_multiple_of(2)).then(|| format!("degree 2 present but n = {n} is odd")),
        RuleId::R9 => {
            (!dim.is_multiple_of(n + 4 * n2)).then(|| format!("{n}+4·{n2}={} does not divide {dim}", n + 4 * n2))
        }
        RuleId::R10 => {
            let degrees: Vec<u64> = ty.entries.iter().map(|e| e.0).collect();
            for &d in &degrees {
                let g = n.gcd(&(d * d));
                let dp: BTreeSet<u64> = prime_factors(d).into_iter().collect();
                let ok = (1..=g).any(|s| {
                    g % s == 0
                        && prime_factors(s).iter().all(|p| dp.contains(p))
                        && n_span_contains(d * d - s, &degrees)
                });
                if !ok {
                    return Some(format!(
                        "no stabilizer order s | gcd({n},{}) leaves {}-s in the span of the degrees",
                        d * d,
                        d * d
                    ));
                }
            }
            None
        }
    }
}

/// All types `(1,n; d_1,n_1; …)` of dimension `dim`, in canonical order.
pub fn r1_solutions(dim: u64, proper_only: bool, n_filter: Option<u64>) -> Vec<TypeSignature> {
    let ns: Vec<u64> = (1..=dim).filter(|&n| n_filter.is_none_or(|f| f == n)).collect();
    ns.par_iter()
        .map(|&n| {
            let mut out = Vec::new();
            let mut cur = Vec::new();
            partitions(dim - n, 2, &mut cur, &mut |entries| {
                if proper_only && entries.is_empty() {
                    return;
                }
                out.push(TypeSignature::new(n, entries).expect("valid partition"));
            });
            out.sort();
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

type Entries = [(u64, u64)];

fn partitions(rem: u64, min_d: u64, cur: &mut Vec<(u64, u64)>, emit: &mut dyn FnMut(&Entries)) {
    if rem == 0 {
        emit(cur);
        return;
    }
    let mut d = min_d;
    while d * d <= rem {
        for m in 1..=rem / (d * d) {
            cur.push((d, m));
            partitions(rem - m * d * d, d + 1, cur, emit);
            cur.pop();
        }
        d += 1;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Elimination {
    #[serde(rename = "type")]
    pub ty: TypeSignature,
    pub rule: RuleId,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    #[serde(rename = "type")]
    pub ty: TypeSignature,
    pub verdict: String,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusResult {
    pub dim: u64,
    pub rules: Vec<RuleId>,
    pub survivors: Vec<TypeSignature>,
    pub eliminated: Vec<Elimination>,
    pub oracle: Vec<OracleVerdict>,
    /// Survivors not refuted by the oracle.
    #[serde(rename = "final")]
    pub final_types: Vec<TypeSignature>,
}

#[derive(Debug, Clone)]
pub struct CensusOptions {
    pub rules: Vec<RuleId>,
    pub proper_only: bool,
    pub n_filter: Option<u64>,
    /// Survivors to run the fusion search on; `None` runs it on none.
    pub oracle: Option<Vec<TypeSignature>>,
    pub budget: u64,
}

impl CensusOptions {
    pub fn new(rules: Vec<RuleId>) -> Self {
        CensusOptions {
            rules,
            proper_only: true,
            n_filter: None,
            oracle: None,
            budget: crate::search::DEFAULT_BUDGET,
        }
    }
}

/// Enumerates the types of dimension `dim` and filters them by the chosen rules.
pub fn enumerate_types(dim: u64, opts: &CensusOptions) -> CensusResult {
    let mut rules: Vec<RuleId> = opts.rules.iter().copied().filter(|&r| r != RuleId::R1).collect();
    rules.sort();
    rules.dedup();
    let mut survivors = Vec::new();
    let mut eliminated = Vec::new();
    for ty in r1_solutions(dim, opts.proper_only, opts.n_filter) {
        match rules.iter().find_map(|&r| rule_check(r, dim, &ty).map(|d| (r, d))) {
            Some((rule, detail)) => eliminated.push(Elimination { ty, rule, detail }),
            None => survivors.push(ty),
        }
    }
    let targets: Vec<TypeSignature> = match &opts.oracle {
        None => Vec::new(),
        Some(list) => list.iter().filter(|t| survivors.contains(t)).cloned().collect(),
    };
    let oracle: Vec<OracleVerdict> = targets
        .iter()
        .map(|ty| {
            let out = search_fusion(ty, Profile::Hopf, opts.budget);
            let trace = match &out {
                SearchOutcome::Infeasible { trace, .. } => trace.clone(),
                SearchOutcome::Inconclusive { reason, .. } => vec![reason.clone()],
                SearchOutcome::Feasible { .. } => Vec::new(),
            };
            OracleVerdict {
                ty: ty.clone(),
                verdict: out.verdict().to_string(),
                nodes: out.nodes(),
                trace,
            }
        })
        .collect();
    let refuted: BTreeSet<&TypeSignature> = oracle
        .iter()
        .filter(|o| o.verdict == "infeasible")
        .map(|o| &o.ty)
        .collect();
    let final_types = survivors.iter().filter(|t| !refuted.contains(t)).cloned().collect();
    let mut all_rules = vec![RuleId::R1];
    all_rules.extend(rules);
    CensusResult {
        dim,
        rules: all_rules,
        survivors,
        eliminated,
        oracle,
        final_types,
    }
}

/// Algebra type of `A ⊗ B` from the types of `A` and `B`.
pub fn tensor_type(a: &TypeSignature, b: &TypeSignature) -> TypeSignature {
    a.tensor(b)
}

/// The unique type of dimension `dim` with `n` degree-one entries and other degrees from `allowed`.
pub fn complete_type(dim: u64, n: u64, allowed: &[u64]) -> Result<TypeSignature, CensusError> {
    if n == 0 || n > dim || !dim.is_multiple_of(n) {
        return Err(CensusError::NoSolution(format!("{n} does not divide {dim}")));
    }
    let mut degrees: Vec<u64> = allowed.iter().copied().filter(|&d| d >= 2).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut found = Vec::new();
    let mut cur = Vec::new();
    partitions(dim - n, 2, &mut cur, &mut |entries| {
        if entries.iter().all(|e| degrees.contains(&e.0)) {
            found.push(TypeSignature::new(n, entries).expect("valid partition"));
        }
    });
    match found.len() {
        0 => Err(CensusError::NoSolution(format!(
            "{} is not a sum of the allowed squares",
            dim - n
        ))),
        1 => Ok(found.pop().unwrap()),
        _ => {
            found.sort();
            Err(CensusError::Ambiguous(found))
        }
    }
}
