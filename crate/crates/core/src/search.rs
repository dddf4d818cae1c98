//! Backtracking search for fusion data of a given algebra type.
//!
//! Unknowns are the structure constants up to the six-fold symmetry
//! `T(a,b,c) = N[a][b][c*]` (invariant under rotation and
//! `(a,b,c) ↦ (c*,b*,a*)`). Degree rows and associativity are stored as
//! polynomial equalities of degree at most two and propagated by interval
//! reasoning. Stabilizer and quotient-dimension constraints are checked on
//! the determined part of each node, and every leaf is verified in full.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::fusion::{FusionDatum, Profile, TypeSignature};

/// Largest basis size the search accepts.
pub const MAX_SEARCH_RANK: u64 = 12;

/// Default node limit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum SearchOutcome {
    Feasible { witness: FusionDatum, nodes: u64 },
    Infeasible { nodes: u64, trace: Vec<String> },
    Inconclusive { nodes: u64, reason: String },
}

impl SearchOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, SearchOutcome::Feasible { .. })
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, SearchOutcome::Infeasible { .. })
    }

    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Feasible { nodes, .. }
            | SearchOutcome::Infeasible { nodes, .. }
            | SearchOutcome::Inconclusive { nodes, .. } => *nodes,
        }
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            SearchOutcome::Feasible { .. } => "feasible",
            SearchOutcome::Infeasible { .. } => "infeasible",
            SearchOutcome::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Searches for a fusion datum of type `ty` satisfying `profile`, exploring at most `budget` nodes.
pub fn search_fusion(ty: &TypeSignature, profile: Profile, budget: u64) -> SearchOutcome {
    let rank = ty.rank();
    if rank > MAX_SEARCH_RANK {
        return SearchOutcome::Inconclusive {
            nodes: 0,
            reason: format!("basis size {rank} exceeds the search limit {MAX_SEARCH_RANK}"),
        };
    }
    let degrees = ty.degrees();
    let branches = duality_branches(&degrees);
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<BranchResult> = branches
        .par_iter()
        .enumerate()
        .map(|(idx, dual)| {
            let problem = Problem::new(&degrees, dual, profile);
            let mut solver = Solver::new(&problem, budget, idx, &best);
            let res = solver.run();
            if matches!(res, BranchResult::Found { .. }) {
                best.fetch_min(idx, Ordering::SeqCst);
            }
            res
        })
        .collect();
    let mut total = 0u64;
    let mut trace = Vec::new();
    for (idx, res) in results.into_iter().enumerate() {
        match res {
            BranchResult::Found { nodes, witness } => {
                total += nodes;
                if total > budget {
                    return exhausted(budget);
                }
                return SearchOutcome::Feasible { witness, nodes: total };
            }
            BranchResult::Refuted { nodes, first_conflict } => {
                total += nodes;
                if total > budget {
                    return exhausted(budget);
                }
                trace.push(format!(
                    "duality {}: refuted after {nodes} nodes; first conflict: {first_conflict}",
                    describe_duality(&branches[idx])
                ));
            }
            BranchResult::OutOfBudget => return exhausted(budget),
            BranchResult::Cancelled => unreachable!("only branches after a feasible one are cancelled"),
        }
    }
    SearchOutcome::Infeasible { nodes: total, trace }
}

fn exhausted(budget: u64) -> SearchOutcome {
    SearchOutcome::Inconclusive {
        nodes: budget,
        reason: format!("node budget {budget} exhausted"),
    }
}

fn describe_duality(dual: &[usize]) -> String {
    let pairs: Vec<String> = dual
        .iter()
        .enumerate()
        .filter(|&(i, &d)| i < d)
        .map(|(i, &d)| format!("{i}<->{d}"))
        .collect();
    if pairs.is_empty() {
        "all self-dual".to_string()
    } else {
        pairs.join(",")
    }
}

/// Duality involutions up to relabeling inside each degree class: fixed points first, then adjacent pairs.
pub fn duality_branches(degrees: &[u64]) -> Vec<Vec<usize>> {
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    while start < degrees.len() {
        let mut end = start;
        while end < degrees.len() && degrees[end] == degrees[start] {
            end += 1;
        }
        // the unit is always fixed
        let s = if start == 0 { 1 } else { start };
        classes.push((s, end));
        start = end;
    }
    let mut out = vec![(0..degrees.len()).collect::<Vec<usize>>()];
    for &(s, e) in &classes {
        let m = e - s;
        let mut next = Vec::new();
        for base in &out {
            let mut f = m;
            loop {
                if (m - f) % 2 == 0 {
                    let mut d = base.clone();
                    let mut p = s + f;
                    while p + 1 < e {
                        d[p] = p + 1;
                        d[p + 1] = p;
                        p += 2;
                    }
                    next.push(d);
                }
                if f == 0 {
                    break;
                }
                f -= 1;
            }
        }
        out = next;
    }
    out
}

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Term {
    coef: i64,
    a: u32,
    b: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Kind {
    Degree(usize, usize),
    Assoc(usize, usize, usize, usize),
}

impl Kind {
    fn describe(&self) -> String {
        match *self {
            Kind::Degree(i, j) => format!("degree row ({i},{j})"),
            Kind::Assoc(i, j, k, l) => format!("associativity ({i},{j},{k},{l})"),
        }
    }
}

struct Constraint {
    terms: Vec<Term>,
    rhs: i64,
    kind: Kind,
    /// Each variable with the indices of the terms it occurs in.
    vars: Vec<(u32, Vec<usize>)>,
}

#[derive(Clone, Copy)]
enum Slot {
    Const(i64),
    Var(u32),
}

/// A fixed duality branch with its variables and constraints.
struct Problem {
    r: usize,
    degrees: Vec<u64>,
    dual: Vec<usize>,
    profile: Profile,
    dim: u64,
    /// `slot[(i*r + j)*r + k]` describes `N[i][j][k]`.
    slots: Vec<Slot>,
    lo: Vec<i32>,
    hi: Vec<i32>,
    order: Vec<u32>,
    constraints: Vec<Constraint>,
    watch: Vec<Vec<u32>>,
    ones: Vec<usize>,
}

impl Problem {
    fn new(degrees: &[u64], dual: &[usize], profile: Profile) -> Self {
        let r = degrees.len();
        let idx = |a: usize, b: usize, c: usize| (a * r + b) * r + c;
        // orbits of T-triples
        let mut orbit_of = vec![u32::MAX; r * r * r];
        let mut orbits: Vec<Vec<(usize, usize, usize)>> = Vec::new();
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    if orbit_of[idx(a, b, c)] != u32::MAX {
                        continue;
                    }
                    let id = orbits.len() as u32;
                    let mut members = vec![(a, b, c)];
                    orbit_of[idx(a, b, c)] = id;
                    let mut p = 0;
                    while p < members.len() {
                        let (x, y, z) = members[p];
                        for t in [(y, z, x), (dual[z], dual[y], dual[x])] {
                            if orbit_of[idx(t.0, t.1, t.2)] == u32::MAX {
                                orbit_of[idx(t.0, t.1, t.2)] = id;
                                members.push(t);
                            }
                        }
                        p += 1;
                    }
                    orbits.push(members);
                }
            }
        }
        // constants and variables
        let ones: Vec<usize> = (0..r).filter(|&i| degrees[i] == 1).collect();
        let mut var_of_orbit = vec![None; orbits.len()];
        let mut const_of_orbit = vec![0i64; orbits.len()];
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        let mut var_orbit = Vec::new();
        for (o, members) in orbits.iter().enumerate() {
            if let Some(&(x, y, z)) = members.iter().find(|m| m.0 == 0) {
                let _ = x;
                // T(0, y, z) = N[0][y][z*] = δ(y, z*)
                const_of_orbit[o] = i64::from(y == dual[z]);
                continue;
            }
            let mut bound = i64::MAX;
            for &(x, y, z) in members {
                // N[x][y][z*] <= d_x d_y / d_z
                bound = bound.min((degrees[x] * degrees[y] / degrees[z]) as i64);
                // N[i][i*][g] <= 1 for degree-one g
                if y == dual[x] && degrees[z] == 1 {
                    bound = bound.min(1);
                }
            }
            var_of_orbit[o] = Some(lo.len() as u32);
            lo.push(0);
            hi.push(bound as i32);
            var_orbit.push(o);
        }
        let mut slots = Vec::with_capacity(r * r * r);
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let o = orbit_of[idx(i, j, dual[k])] as usize;
                    slots.push(match var_of_orbit[o] {
                        Some(v) => Slot::Var(v),
                        None => Slot::Const(const_of_orbit[o]),
                    });
                }
            }
        }
        // variable order: products χχ* first by degree of χ, then by degree sum
        let mut keys: Vec<(u8, u64, usize, usize, usize, u32)> = Vec::new();
        for (v, &o) in var_orbit.iter().enumerate() {
            let members = &orbits[o];
            let chi = members
                .iter()
                .filter(|m| m.1 == dual[m.0])
                .map(|m| (0u8, degrees[m.0], m.0, m.2, 0usize))
                .min();
            let key = chi.unwrap_or_else(|| {
                let m = members.iter().min().unwrap();
                (1u8, degrees[m.0] + degrees[m.1] + degrees[m.2], m.0, m.1, m.2)
            });
            keys.push((key.0, key.1, key.2, key.3, key.4, v as u32));
        }
        keys.sort_unstable();
        let order: Vec<u32> = keys.iter().map(|k| k.5).collect();

        let mut problem = Problem {
            r,
            degrees: degrees.to_vec(),
            dual: dual.to_vec(),
            profile,
            dim: degrees.iter().map(|d| d * d).sum(),
            slots,
            lo,
            hi,
            order,
            constraints: Vec::new(),
            watch: Vec::new(),
            ones,
        };
        problem.build_constraints();
        problem
    }

    fn slot(&self, i: usize, j: usize, k: usize) -> Slot {
        self.slots[(i * self.r + j) * self.r + k]
    }

    fn build_constraints(&mut self) {
        let r = self.r;
        let mut seen: HashSet<(Vec<Term>, i64)> = HashSet::new();
        let mut constraints = Vec::new();
        let mut add = |acc: BTreeMap<(u32, u32), i64>, constant: i64, kind: Kind, constraints: &mut Vec<Constraint>| {
            let mut terms: Vec<Term> = acc
                .into_iter()
                .filter(|&(_, c)| c != 0)
                .map(|((a, b), coef)| Term { coef, a, b })
                .collect();
            let mut rhs = -constant;
            if terms.is_empty() {
                // a constant identity; a nonzero residue is an immediate contradiction
                if rhs != 0 {
                    constraints.push(Constraint {
                        terms,
                        rhs,
                        kind,
                        vars: Vec::new(),
                    });
                }
                return;
            }
            terms.sort_unstable_by_key(|t| (t.a, t.b));
            if terms[0].coef < 0 {
                for t in terms.iter_mut() {
                    t.coef = -t.coef;
                }
                rhs = -rhs;
            }
            if !seen.insert((terms.clone(), rhs)) {
                return;
            }
            let mut vars: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
            for (p, t) in terms.iter().enumerate() {
                vars.entry(t.a).or_default().push(p);
                if t.b != NONE && t.b != t.a {
                    vars.entry(t.b).or_default().push(p);
                }
            }
            constraints.push(Constraint {
                terms,
                rhs,
                kind,
                vars: vars.into_iter().collect(),
            });
        };
        // degree rows
        for i in 1..r {
            for j in 1..r {
                let mut acc = BTreeMap::new();
                let mut constant = -((self.degrees[i] * self.degrees[j]) as i64);
                for k in 0..r {
                    let d = self.degrees[k] as i64;
                    match self.slot(i, j, k) {
                        Slot::Const(c) => constant += c * d,
                        Slot::Var(v) => *acc.entry((v, NONE)).or_insert(0) += d,
                    }
                }
                add(acc, constant, Kind::Degree(i, j), &mut constraints);
            }
        }
        // associativity: Σ_t N[i][j][t] N[t][k][l] = Σ_t N[j][k][t] N[i][t][l]
        let mul = |x: Slot, y: Slot, sign: i64, acc: &mut BTreeMap<(u32, u32), i64>, constant: &mut i64| match (x, y) {
            (Slot::Const(a), Slot::Const(b)) => *constant += sign * a * b,
            (Slot::Const(a), Slot::Var(v)) | (Slot::Var(v), Slot::Const(a)) => {
                if a != 0 {
                    *acc.entry((v, NONE)).or_insert(0) += sign * a;
                }
            }
            (Slot::Var(u), Slot::Var(v)) => {
                let key = if u <= v { (u, v) } else { (v, u) };
                *acc.entry(key).or_insert(0) += sign;
            }
        };
        for i in 1..r {
            for j in 1..r {
                for k in 1..r {
                    for l in 1..r {
                        let mut acc = BTreeMap::new();
                        let mut constant = 0i64;
                        for t in 0..r {
                            mul(self.slot(i, j, t), self.slot(t, k, l), 1, &mut acc, &mut constant);
                            mul(self.slot(j, k, t), self.slot(i, t, l), -1, &mut acc, &mut constant);
                        }
                        add(acc, constant, Kind::Assoc(i, j, k, l), &mut constraints);
                    }
                }
            }
        }
        let mut watch = vec![Vec::new(); self.lo.len()];
        for (c, con) in constraints.iter().enumerate() {
            for (v, _) in &con.vars {
                watch[*v as usize].push(c as u32);
            }
        }
        self.constraints = constraints;
        self.watch = watch;
    }
}

enum BranchResult {
    Found { nodes: u64, witness: FusionDatum },
    Refuted { nodes: u64, first_conflict: String },
    OutOfBudget,
    Cancelled,
}

enum Abort {
    Budget,
    Cancelled,
}

struct Solver<'a> {
    p: &'a Problem,
    lo: Vec<i32>,
    hi: Vec<i32>,
    trail: Vec<(u32, i32, i32)>,
    queue: VecDeque<u32>,
    queued: Vec<bool>,
    nodes: u64,
    budget: u64,
    branch: usize,
    best: &'a AtomicUsize,
    first_conflict: Option<String>,
    witness: Option<FusionDatum>,
}

impl<'a> Solver<'a> {
    fn new(p: &'a Problem, budget: u64, branch: usize, best: &'a AtomicUsize) -> Self {
        Solver {
            p,
            lo: p.lo.clone(),
            hi: p.hi.clone(),
            trail: Vec::new(),
            queue: VecDeque::new(),
            queued: vec![false; p.constraints.len()],
            nodes: 0,
            budget,
            branch,
            best,
            first_conflict: None,
            witness: None,
        }
    }

    fn run(&mut self) -> BranchResult {
        for c in 0..self.p.constraints.len() {
            self.enqueue(c as u32);
        }
        let ok = self.propagate();
        let result = if ok { self.dfs() } else { Ok(false) };
        match result {
            Ok(true) => BranchResult::Found {
                nodes: self.nodes,
                witness: self.witness.take().unwrap(),
            },
            Ok(false) => BranchResult::Refuted {
                nodes: self.nodes.max(1),
                first_conflict: self.first_conflict.clone().unwrap_or_else(|| "none recorded".into()),
            },
            Err(Abort::Budget) => BranchResult::OutOfBudget,
            Err(Abort::Cancelled) => BranchResult::Cancelled,
        }
    }

    fn note_conflict(&mut self, what: impl FnOnce() -> String) {
        if self.first_conflict.is_none() {
            self.first_conflict = Some(what());
        }
    }

    fn enqueue(&mut self, c: u32) {
        if !self.queued[c as usize] {
            self.queued[c as usize] = true;
            self.queue.push_back(c);
        }
    }

    fn set_bounds(&mut self, v: u32, lo: i32, hi: i32) {
        let (ol, oh) = (self.lo[v as usize], self.hi[v as usize]);
        if ol == lo && oh == hi {
            return;
        }
        self.trail.push((v, ol, oh));
        self.lo[v as usize] = lo;
        self.hi[v as usize] = hi;
        for &c in &self.p.watch[v as usize] {
            self.enqueue(c);
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (v, l, h) = self.trail.pop().unwrap();
            self.lo[v as usize] = l;
            self.hi[v as usize] = h;
        }
    }

    fn clear_queue(&mut self) {
        while let Some(c) = self.queue.pop_front() {
            self.queued[c as usize] = false;
        }
    }

    #[inline]
    fn range(&self, v: u32, fixed: Option<(u32, i32)>) -> (i64, i64) {
        if let Some((x, val)) = fixed {
            if x == v {
                return (val as i64, val as i64);
            }
        }
        (self.lo[v as usize] as i64, self.hi[v as usize] as i64)
    }

    #[inline]
    fn term_range(&self, t: &Term, fixed: Option<(u32, i32)>) -> (i64, i64) {
        let (a0, a1) = self.range(t.a, fixed);
        let (p0, p1) = if t.b == NONE {
            (a0, a1)
        } else {
            let (b0, b1) = self.range(t.b, fixed);
            (a0 * b0, a1 * b1)
        };
        if t.coef >= 0 {
            (t.coef * p0, t.coef * p1)
        } else {
            (t.coef * p1, t.coef * p0)
        }
    }

    /// Interval propagation to a fixpoint; false on contradiction.
    fn propagate(&mut self) -> bool {
        while let Some(c) = self.queue.pop_front() {
            self.queued[c as usize] = false;
            if !self.revise(c as usize) {
                let kind = self.p.constraints[c as usize].kind;
                self.note_conflict(|| kind.describe());
                self.clear_queue();
                return false;
            }
        }
        true
    }

    fn revise(&mut self, c: usize) -> bool {
        let con = &self.p.constraints[c];
        let mut smin = 0i64;
        let mut smax = 0i64;
        let ranges: Vec<(i64, i64)> = con.terms.iter().map(|t| self.term_range(t, None)).collect();
        for &(a, b) in &ranges {
            smin += a;
            smax += b;
        }
        if con.rhs < smin || con.rhs > smax {
            return false;
        }
        if smin == smax {
            return true;
        }
        let mut updates: Vec<(u32, i32, i32)> = Vec::new();
        for (v, idxs) in &con.vars {
            let (l, h) = (self.lo[*v as usize], self.hi[*v as usize]);
            if l == h {
                continue;
            }
            let mut omin = smin;
            let mut omax = smax;
            for &p in idxs {
                omin -= ranges[p].0;
                omax -= ranges[p].1;
            }
            let feasible = |val: i32| {
                let mut a = omin;
                let mut b = omax;
                for &p in idxs {
                    let (x, y) = self.term_range(&con.terms[p], Some((*v, val)));
                    a += x;
                    b += y;
                }
                a <= con.rhs && con.rhs <= b
            };
            let mut nl = l;
            while nl <= h && !feasible(nl) {
                nl += 1;
            }
            if nl > h {
                return false;
            }
            let mut nh = h;
            while nh > nl && !feasible(nh) {
                nh -= 1;
            }
            if nl != l || nh != h {
                updates.push((*v, nl, nh));
            }
        }
        for (v, l, h) in updates {
            self.set_bounds(v, l, h);
        }
        true
    }

    fn fixed(&self, s: Slot) -> Option<i64> {
        match s {
            Slot::Const(c) => Some(c),
            Slot::Var(v) => (self.lo[v as usize] == self.hi[v as usize]).then(|| self.lo[v as usize] as i64),
        }
    }

    fn bounds(&self, s: Slot) -> (i64, i64) {
        match s {
            Slot::Const(c) => (c, c),
            Slot::Var(v) => (self.lo[v as usize] as i64, self.hi[v as usize] as i64),
        }
    }

    fn dfs(&mut self) -> Result<bool, Abort> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Abort::Budget);
        }
        if self.nodes.is_multiple_of(1024) && self.best.load(Ordering::Relaxed) < self.branch {
            return Err(Abort::Cancelled);
        }
        if self.p.profile == Profile::Hopf {
            if let Some(msg) = self.profile_conflict() {
                self.note_conflict(|| msg);
                return Ok(false);
            }
        }
        let next = self
            .p
            .order
            .iter()
            .copied()
            .find(|&v| self.lo[v as usize] < self.hi[v as usize]);
        let Some(var) = next else {
            return Ok(self.leaf());
        };
        let (l, h) = (self.lo[var as usize], self.hi[var as usize]);
        for val in l..=h {
            let mark = self.trail.len();
            self.set_bounds(var, val, val);
            if self.propagate() && self.dfs()? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }

    fn leaf(&mut self) -> bool {
        let r = self.p.r;
        let mut constants = vec![0u32; r * r * r];
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    constants[(i * r + j) * r + k] = self.fixed(self.p.slot(i, j, k)).unwrap() as u32;
                }
            }
        }
        let datum =
            FusionDatum::new(self.p.degrees.clone(), self.p.dual.clone(), 0, constants).expect("well-formed datum");
        let report = datum.verify(self.p.profile);
        if report.passed() {
            self.witness = Some(datum);
            true
        } else {
            let failure = report.first_failure().unwrap();
            let msg = format!("leaf fails {}", failure.axiom.name());
            self.note_conflict(|| msg);
            false
        }
    }

    /// Profile constraints that are already violated by every completion of this node.
    fn profile_conflict(&self) -> Option<String> {
        let p = self.p;
        let r = p.r;
        let n = p.ones.len() as u64;
        // stabilizer sizes: some admissible order must lie between the certain and possible counts
        let mut stab_fixed: Vec<Option<Vec<usize>>> = vec![None; r];
        for i in 1..r {
            let d = p.degrees[i];
            let mut certain = 0u64;
            let mut possible = 0u64;
            let mut members = Vec::new();
            for &g in &p.ones {
                let (l, h) = self.bounds(p.slot(g, i, i));
                if l >= 1 {
                    certain += 1;
                    members.push(g);
                }
                if h >= 1 {
                    possible += 1;
                }
            }
            if !(certain..=possible).any(|s| s >= 1 && (d * d).is_multiple_of(s) && n.is_multiple_of(s)) {
                return Some(format!("no admissible stabilizer order for {i}"));
            }
            if certain == possible {
                stab_fixed[i] = Some(members);
            }
        }
        // stabilizer exponents, once the group of degree-one elements is determined
        if let Some(table) = self.group_table() {
            for i in 1..r {
                if let Some(stab) = &stab_fixed[i] {
                    for &g in stab {
                        let o = element_order(&table, &p.ones, g);
                        if !p.degrees[i].is_multiple_of(o) {
                            return Some(format!("stabilizer of {i} contains an element of order {o}"));
                        }
                    }
                }
            }
        }
        // standard subalgebras generated by one element
        for x in 1..r {
            let lower = self.closure(x, true);
            let upper = self.closure(x, false);
            let dl: u64 = lower.iter().map(|&i| p.degrees[i] * p.degrees[i]).sum();
            let du: u64 = upper.iter().map(|&i| p.degrees[i] * p.degrees[i]).sum();
            if !(dl..=du).any(|d| p.dim.is_multiple_of(d)) {
                return Some(format!(
                    "subalgebra generated by {x} has no admissible dimension in [{dl},{du}]"
                ));
            }
        }
        // degree-2 dichotomy, for determined trivial stabilizers
        let has_three = p.degrees.contains(&3);
        for i in 1..r {
            if p.degrees[i] != 2 {
                continue;
            }
            let Some(stab) = &stab_fixed[i] else { continue };
            if stab.len() > 1 {
                continue;
            }
            if !has_three {
                return Some(format!(
                    "degree-2 element {i} has trivial stabilizer and no degree-3 partner exists"
                ));
            }
            let di = p.dual[i];
            for k in 1..r {
                if p.degrees[k] != 3 && self.bounds(p.slot(i, di, k)).0 > 0 {
                    return Some(format!("{i}·{i}* contains {k} though its stabilizer is trivial"));
                }
            }
        }
        None
    }

    fn group_table(&self) -> Option<HashMap<(usize, usize), usize>> {
        let p = self.p;
        let mut table = HashMap::new();
        for &g in &p.ones {
            for &h in &p.ones {
                let k = p.ones.iter().copied().find(|&k| self.bounds(p.slot(g, h, k)).0 >= 1)?;
                table.insert((g, h), k);
            }
        }
        Some(table)
    }

    /// Closure of `{x}` along certainly nonzero (`lower`) or possibly nonzero products.
    fn closure(&self, x: usize, lower: bool) -> Vec<usize> {
        let p = self.p;
        let r = p.r;
        let mut inside = vec![false; r];
        let mut members = vec![0, x];
        inside[0] = true;
        inside[x] = true;
        let mut idx = 0;
        while idx < members.len() {
            let a = members[idx];
            let da = p.dual[a];
            if !inside[da] {
                inside[da] = true;
                members.push(da);
            }
            for q in 0..=idx {
                let b = members[q];
                for k in 0..r {
                    if inside[k] {
                        continue;
                    }
                    let hit = |s: Slot| {
                        let (l, h) = self.bounds(s);
                        if lower {
                            l > 0
                        } else {
                            h > 0
                        }
                    };
                    if hit(p.slot(a, b, k)) || hit(p.slot(b, a, k)) {
                        inside[k] = true;
                        members.push(k);
                    }
                }
            }
            idx += 1;
        }
        members
    }
}

fn element_order(table: &HashMap<(usize, usize), usize>, ones: &[usize], g: usize) -> u64 {
    let mut x = g;
    let mut k = 1;
    while x != 0 && k <= ones.len() as u64 {
        x = table[&(x, g)];
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::from_group_characters;
    use crate::groups::builtin;

    fn run(ty: &str, profile: Profile) -> SearchOutcome {
        search_fusion(&ty.parse().unwrap(), profile, 1_000_000)
    }

    #[test]
    fn duality_branches_cover_involution_types() {
        // degrees 1,1,1,2,2: the unit fixed, two degree-one labels (2 choices), two degree-2 labels (2 choices)
        let b = duality_branches(&[1, 1, 1, 2, 2]);
        assert_eq!(b.len(), 4);
        for d in &b {
            assert_eq!(d[0], 0);
            for i in 0..5 {
                assert_eq!(d[d[i]], i);
            }
        }
    }

    #[test]
    fn s3_type_is_feasible() {
        let out = run("1,2;2,1", Profile::Hopf);
        let SearchOutcome::Feasible { witness, .. } = out else {
            panic!("expected a witness, got {out:?}");
        };
        assert!(witness.verify(Profile::Hopf).passed());
        let s3 = from_group_characters(&builtin("S3").unwrap()).unwrap();
        assert!(witness.is_isomorphic(&s3));
    }

    #[test]
    fn small_excluded_type_is_infeasible() {
        assert!(run("1,2;2,1;4,1", Profile::Hopf).is_infeasible());
    }

    #[test]
    fn group_rings_are_found() {
        assert!(run("1,4", Profile::Fusion).is_feasible());
        assert!(run("1,4;2,1", Profile::Hopf).is_feasible());
    }

    #[test]
    fn oversized_types_are_inconclusive() {
        let out = run("1,16;2,4;4,1", Profile::Hopf);
        assert!(matches!(out, SearchOutcome::Inconclusive { .. }));
    }
}
