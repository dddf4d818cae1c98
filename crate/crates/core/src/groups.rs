//! Finite groups given by multiplication tables, with the invariants the
//! rest of the crate consumes: classes, centralizers, abelian bases, dual
//! characters and alternating bicharacters.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use serde_json::Value;
use thiserror::Error;

use crate::cyclotomic::{CycError, CycNumber};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("action is not by automorphisms: {0}")]
    NotAutomorphismAction(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("subset is not an abelian subgroup")]
    NotAbelianSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("irreducible degrees are not determined by counting: {0}")]
    AmbiguousDegrees(String),
    #[error("unknown group: {0}")]
    UnknownGroup(String),
    #[error("bad group specification: {0}")]
    BadSpec(String),
    #[error("invalid bicharacter: {0}")]
    InvalidBicharacter(String),
    #[error(transparent)]
    Cyc(#[from] CycError),
}

/// A subgroup or subset, as a sorted list of element indices of its parent.
pub type Subgroup = Vec<usize>;

#[derive(Default, Clone)]
struct Derived {
    classes: OnceLock<Vec<Vec<usize>>>,
    center: OnceLock<Subgroup>,
    commutator: OnceLock<Subgroup>,
    degrees: OnceLock<Result<Vec<u64>, GroupError>>,
}

/// A finite group stored by its multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    derived: Arc<Derived>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order)
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.identity == other.identity
    }
}

impl FiniteGroup {
    /// Validates a table (Latin square, identity, associativity) and builds the group.
    pub fn from_table(name: &str, order: usize, table: Vec<usize>) -> Result<Self, GroupError> {
        if order == 0 || table.len() != order * order {
            return Err(GroupError::InvalidTable("table size mismatch".into()));
        }
        if table.iter().any(|&x| x >= order) {
            return Err(GroupError::InvalidTable("entry out of range".into()));
        }
        for i in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for j in 0..order {
                row[table[i * order + j]] = true;
                col[table[j * order + i]] = true;
            }
            if row.iter().chain(col.iter()).any(|&b| !b) {
                return Err(GroupError::InvalidTable(format!(
                    "row or column {i} is not a permutation"
                )));
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|g| table[e * order + g] == g && table[g * order + e] == g))
            .ok_or_else(|| GroupError::InvalidTable("no identity".into()))?;
        for a in 0..order {
            for b in 0..order {
                let ab = table[a * order + b];
                for c in 0..order {
                    if table[ab * order + c] != table[a * order + table[b * order + c]] {
                        return Err(GroupError::InvalidTable(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let inverses = (0..order)
            .map(|g| (0..order).find(|&h| table[g * order + h] == identity).unwrap())
            .collect();
        Ok(FiniteGroup {
            name: name.to_string(),
            order,
            table,
            identity,
            inverses,
            derived: Arc::new(Derived::default()),
        })
    }

    /// Builds a group from a closed multiplication rule on `0..order`.
    fn from_rule(name: &str, order: usize, rule: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(rule(a, b));
            }
        }
        Self::from_table(name, order, table).expect("constructed table is a group")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        let mut acc = self.identity;
        for _ in 0..e {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> u64 {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> u64 {
        self.elements().fold(1, |acc, g| acc.lcm(&self.element_order(g)))
    }

    // ---- constructions ----

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs n >= 1");
        Self::from_rule(&format!("Z{n}"), n, |a, b| (a + b) % n)
    }

    /// Dihedral group of order `2n`; `r^i s^j` has index `i + n*j`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1, "dihedral group needs n >= 1");
        Self::from_rule(&format!("D{n}"), 2 * n, |a, b| {
            let (i, j) = (a % n, a / n);
            let (k, l) = (b % n, b / n);
            // s r^k = r^{-k} s
            let rot = if j == 0 { (i + k) % n } else { (i + n - k) % n };
            rot + n * ((j + l) % 2)
        })
    }

    /// Quaternion group; index `k + 4j` stands for `i^k j^j` with `i^4 = 1`, `j^2 = i^2`, `j i = i^{-1} j`.
    pub fn quaternion() -> Self {
        Self::from_rule("Q8", 8, |a, b| {
            let (k1, j1) = (a % 4, a / 4);
            let (k2, j2) = (b % 4, b / 4);
            let k2 = if j1 == 1 { (4 - k2) % 4 } else { k2 };
            let mut k = (k1 + k2) % 4;
            if j1 == 1 && j2 == 1 {
                k = (k + 2) % 4;
            }
            k + 4 * ((j1 + j2) % 2)
        })
    }

    /// Symmetric group on `n <= 4` letters, elements in lexicographic permutation order.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        if n == 0 || n > 4 {
            return Err(GroupError::BadSpec(format!("symmetric group S{n} unsupported")));
        }
        let perms = permutations(n);
        let index: HashMap<Vec<usize>, usize> = perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        // (a b)(x) = a(b(x))
        Ok(Self::from_rule(&format!("S{n}"), perms.len(), |a, b| {
            let p: Vec<usize> = (0..n).map(|x| perms[a][perms[b][x]]).collect();
            index[&p]
        }))
    }

    /// Direct product; `(g, h)` has index `g * |H| + h`.
    pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let m = h.order;
        Self::from_rule(&format!("{}x{}", g.name, h.name), g.order * m, |a, b| {
            g.mul(a / m, b / m) * m + h.mul(a % m, b % m)
        })
    }

    /// Semidirect product `N ⋊ Q`; `(n, q)` has index `n + |N| * q` and
    /// `(n,q)(n',q') = (n·(q▸n'), qq')`.
    pub fn semidirect(n: &FiniteGroup, q: &FiniteGroup, act: &GroupAction) -> Result<Self, GroupError> {
        if act.actor.order != q.order || act.target_size != n.order {
            return Err(GroupError::NotAutomorphismAction("action size mismatch".into()));
        }
        act.check_by_automorphisms(n)?;
        let size = n.order;
        Ok(Self::from_rule(
            &format!("{}:{}", n.name, q.name),
            size * q.order,
            |a, b| {
                let (n1, q1) = (a % size, a / size);
                let (n2, q2) = (b % size, b / size);
                n.mul(n1, act.apply(q1, n2)) + size * q.mul(q1, q2)
            },
        ))
    }

    /// The group on the elements of a subgroup, reindexed by position.
    pub fn subgroup_as_group(&self, sub: &[usize]) -> Result<Self, GroupError> {
        if !self.is_subgroup(sub) {
            return Err(GroupError::InvalidTable("subset is not a subgroup".into()));
        }
        let pos: HashMap<usize, usize> = sub.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        Ok(Self::from_rule(&format!("sub({})", self.name), sub.len(), |a, b| {
            pos[&self.mul(sub[a], sub[b])]
        }))
    }

    // ---- subgroups ----

    pub fn is_subgroup(&self, sub: &[usize]) -> bool {
        let set: BTreeSet<usize> = sub.iter().copied().collect();
        !set.is_empty()
            && set.contains(&self.identity)
            && set
                .iter()
                .all(|&a| set.iter().all(|&b| set.contains(&self.mul(a, self.inv(b)))))
    }

    pub fn is_normal(&self, sub: &[usize]) -> bool {
        let set: BTreeSet<usize> = sub.iter().copied().collect();
        self.is_subgroup(sub)
            && self
                .elements()
                .all(|g| set.iter().all(|&a| set.contains(&self.conjugate(g, a))))
    }

    /// Subgroup generated by a list of elements.
    pub fn generated(&self, gens: &[usize]) -> Subgroup {
        let mut set: BTreeSet<usize> = BTreeSet::new();
        set.insert(self.identity);
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn centralizer(&self, g: usize) -> Subgroup {
        self.elements().filter(|&h| self.mul(g, h) == self.mul(h, g)).collect()
    }

    /// Elements commuting with every element of `sub`.
    pub fn centralizer_of_set(&self, sub: &[usize]) -> Subgroup {
        self.elements()
            .filter(|&h| sub.iter().all(|&a| self.mul(a, h) == self.mul(h, a)))
            .collect()
    }

    pub fn center(&self) -> &Subgroup {
        self.derived.center.get_or_init(|| {
            self.elements()
                .filter(|&g| self.elements().all(|h| self.mul(g, h) == self.mul(h, g)))
                .collect()
        })
    }

    /// Conjugacy classes, each sorted, ordered by smallest element.
    pub fn conjugacy_classes(&self) -> &Vec<Vec<usize>> {
        self.derived.classes.get_or_init(|| {
            let mut seen = vec![false; self.order];
            let mut classes = Vec::new();
            for a in self.elements() {
                if seen[a] {
                    continue;
                }
                let class: BTreeSet<usize> = self.elements().map(|g| self.conjugate(g, a)).collect();
                for &c in &class {
                    seen[c] = true;
                }
                classes.push(class.into_iter().collect());
            }
            classes
        })
    }

    pub fn commutator_subgroup(&self) -> &Subgroup {
        self.derived.commutator.get_or_init(|| {
            let comms: BTreeSet<usize> = self
                .elements()
                .flat_map(|a| {
                    self.elements()
                        .map(move |b| self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b))))
                })
                .collect();
            let gens: Vec<usize> = comms.into_iter().collect();
            self.generated(&gens)
        })
    }

    /// Invariant factors of `G / [G, G]`.
    pub fn abelianization(&self) -> AbelianStructure {
        let comm = self.commutator_subgroup();
        let set: BTreeSet<usize> = comm.iter().copied().collect();
        // cosets of the commutator subgroup
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(g);
            for &c in &set {
                coset_of[self.mul(g, c)] = id;
            }
        }
        let k = reps.len();
        let quotient = Self::from_rule("ab", k, |a, b| coset_of[self.mul(reps[a], reps[b])]);
        let all: Vec<usize> = quotient.elements().collect();
        AbelianStructure::of_subgroup(&quotient, &all).expect("abelianization is abelian")
    }

    /// Degrees of the irreducible complex representations, inferred by counting.
    pub fn irreducible_degrees(&self) -> Result<Vec<u64>, GroupError> {
        self.derived
            .degrees
            .get_or_init(|| {
                let n = self.order as u64;
                let linear = self.abelianization().order();
                let classes = self.conjugacy_classes().len() as u64;
                let rest = classes - linear;
                let target = n - linear;
                let divisors: Vec<u64> = (2..=n).filter(|d| n.is_multiple_of(*d) && d * d <= target).collect();
                let mut solutions = Vec::new();
                let mut current = Vec::new();
                degree_solutions(&divisors, 0, rest, target, &mut current, &mut solutions);
                match solutions.len() {
                    1 => {
                        let mut out = vec![1u64; linear as usize];
                        out.extend(solutions.pop().unwrap());
                        Ok(out)
                    }
                    0 => Err(GroupError::AmbiguousDegrees(format!(
                        "no degree solution for order {n}"
                    ))),
                    k => Err(GroupError::AmbiguousDegrees(format!(
                        "{k} degree solutions for order {n}"
                    ))),
                }
            })
            .clone()
    }
}

fn degree_solutions(
    divisors: &[u64],
    start: usize,
    remaining_count: u64,
    remaining_sum: u64,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    if remaining_count == 0 {
        if remaining_sum == 0 {
            out.push(current.clone());
        }
        return;
    }
    for (i, &d) in divisors.iter().enumerate().skip(start) {
        let sq = d * d;
        if sq * remaining_count > remaining_sum {
            break;
        }
        current.push(d);
        degree_solutions(divisors, i, remaining_count - 1, remaining_sum - sq, current, out);
        current.pop();
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n {
            if !prefix.contains(&x) {
                prefix.push(x);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

/// An action of a group on a finite set `0..target_size`.
#[derive(Debug, Clone)]
pub struct GroupAction {
    pub actor: FiniteGroup,
    pub target_size: usize,
    /// `map[g * target_size + x]` is `g · x`.
    map: Vec<usize>,
}

impl GroupAction {
    /// Validates that the identity acts trivially and the action is compatible with multiplication.
    pub fn new(actor: FiniteGroup, target_size: usize, map: Vec<usize>) -> Result<Self, GroupError> {
        if map.len() != actor.order * target_size || map.iter().any(|&x| x >= target_size) {
            return Err(GroupError::NotAutomorphismAction("action table size mismatch".into()));
        }
        let act = GroupAction {
            actor,
            target_size,
            map,
        };
        let e = act.actor.identity;
        if (0..target_size).any(|x| act.apply(e, x) != x) {
            return Err(GroupError::NotAutomorphismAction("identity acts nontrivially".into()));
        }
        for g in act.actor.elements() {
            for h in act.actor.elements() {
                let gh = act.actor.mul(g, h);
                for x in 0..target_size {
                    if act.apply(gh, x) != act.apply(g, act.apply(h, x)) {
                        return Err(GroupError::NotAutomorphismAction(format!(
                            "(gh)·x != g·(h·x) at g={g}, h={h}, x={x}"
                        )));
                    }
                }
            }
        }
        Ok(act)
    }

    /// Builds an action from a closure.
    pub fn from_fn(
        actor: FiniteGroup,
        target_size: usize,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, GroupError> {
        let mut map = Vec::with_capacity(actor.order * target_size);
        for g in actor.elements() {
            for x in 0..target_size {
                map.push(f(g, x));
            }
        }
        Self::new(actor, target_size, map)
    }

    pub fn trivial(actor: FiniteGroup, target_size: usize) -> Self {
        Self::from_fn(actor, target_size, |_, x| x).expect("trivial action")
    }

    #[inline]
    pub fn apply(&self, g: usize, x: usize) -> usize {
        self.map[g * self.target_size + x]
    }

    /// Checks that every actor element acts by an automorphism of `target`.
    pub fn check_by_automorphisms(&self, target: &FiniteGroup) -> Result<(), GroupError> {
        if target.order != self.target_size {
            return Err(GroupError::NotAutomorphismAction("target size mismatch".into()));
        }
        for g in self.actor.elements() {
            for a in target.elements() {
                for b in target.elements() {
                    if self.apply(g, target.mul(a, b)) != target.mul(self.apply(g, a), self.apply(g, b)) {
                        return Err(GroupError::NotAutomorphismAction(format!(
                            "element {g} does not preserve the product of {a} and {b}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Invariant factors `m_1 | m_2 | … | m_k` of a finite abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct AbelianStructure {
    pub invariant_factors: Vec<u64>,
}

impl AbelianStructure {
    pub fn new(invariant_factors: Vec<u64>) -> Result<Self, GroupError> {
        if invariant_factors.iter().any(|&m| m < 2) {
            return Err(GroupError::BadSpec("invariant factors must be at least 2".into()));
        }
        if invariant_factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(GroupError::BadSpec(
                "invariant factors must form a divisibility chain".into(),
            ));
        }
        Ok(AbelianStructure { invariant_factors })
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// Invariant factors of an abelian subgroup, from element-order counts per prime.
    pub fn of_subgroup(g: &FiniteGroup, sub: &[usize]) -> Result<Self, GroupError> {
        check_abelian_subgroup(g, sub)?;
        let n = sub.len() as u64;
        let mut per_prime: Vec<Vec<u64>> = Vec::new();
        for p in prime_factors(n) {
            // a_j = log_p #{x : x^{p^j} = 1}; exponents e_i satisfy a_j = Σ min(e_i, j)
            let mut counts = vec![0u32];
            let mut j = 1;
            loop {
                let pj = p.pow(j);
                let c = sub.iter().filter(|&&x| g.pow(x, pj) == g.identity).count() as u64;
                let a = ilog(c, p);
                counts.push(a);
                if j > 1 && counts[j as usize] == counts[j as usize - 1] {
                    break;
                }
                j += 1;
            }
            // number of cyclic factors with exponent >= j is a_j - a_{j-1}
            let mut powers = Vec::new();
            for j in 1..counts.len() {
                let at_least_j = counts[j] - counts[j - 1];
                let at_least_next = if j + 1 < counts.len() {
                    counts[j + 1] - counts[j]
                } else {
                    0
                };
                for _ in 0..(at_least_j - at_least_next) {
                    powers.push(p.pow(j as u32));
                }
            }
            powers.sort_unstable_by(|a, b| b.cmp(a));
            per_prime.push(powers);
        }
        let k = per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
        let mut factors: Vec<u64> = (0..k)
            .map(|i| per_prime.iter().map(|v| v.get(i).copied().unwrap_or(1)).product())
            .collect();
        factors.reverse();
        Ok(AbelianStructure {
            invariant_factors: factors,
        })
    }
}

fn ilog(mut c: u64, p: u64) -> u32 {
    let mut k = 0;
    while c > 1 {
        c /= p;
        k += 1;
    }
    k
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn check_abelian_subgroup(g: &FiniteGroup, sub: &[usize]) -> Result<(), GroupError> {
    if !g.is_subgroup(sub) {
        return Err(GroupError::NotAbelianSubgroup);
    }
    for &a in sub {
        for &b in sub {
            if g.mul(a, b) != g.mul(b, a) {
                return Err(GroupError::NotAbelianSubgroup);
            }
        }
    }
    Ok(())
}

/// A basis `a_1, …, a_k` of an abelian subgroup with `ord(a_i) = m_i`, plus coordinates of every element.
#[derive(Debug, Clone)]
pub struct AbelianBasis {
    pub structure: AbelianStructure,
    /// Generators as element indices of the parent group.
    pub generators: Vec<usize>,
    /// Sorted elements of the subgroup.
    pub elements: Vec<usize>,
    /// `coords[p]` are the coordinates of `elements[p]`.
    pub coords: Vec<Vec<u64>>,
}

impl AbelianBasis {
    pub fn new(g: &FiniteGroup, sub: &[usize]) -> Result<Self, GroupError> {
        let mut elements = sub.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let structure = AbelianStructure::of_subgroup(g, &elements)?;
        let orders = &structure.invariant_factors;
        let mut chosen = Vec::new();
        if !choose_basis(g, &elements, orders, &mut chosen) {
            return Err(GroupError::NotAbelianSubgroup);
        }
        let mut coord_of: HashMap<usize, Vec<u64>> = HashMap::new();
        for x in mixed_radix(orders) {
            let mut e = g.identity;
            for (i, &c) in x.iter().enumerate() {
                e = g.mul(e, g.pow(chosen[i], c));
            }
            coord_of.insert(e, x);
        }
        let coords = elements.iter().map(|e| coord_of[e].clone()).collect();
        Ok(AbelianBasis {
            structure,
            generators: chosen,
            elements,
            coords,
        })
    }

    pub fn orders(&self) -> &[u64] {
        &self.structure.invariant_factors
    }

    pub fn position(&self, element: usize) -> Option<usize> {
        self.elements.binary_search(&element).ok()
    }

    /// Position of the element with the given coordinates.
    pub fn position_of_coords(&self, x: &[u64]) -> usize {
        self.coords.iter().position(|c| c == x).expect("coordinates in range")
    }

    /// Characters of the subgroup, indexed by mixed-radix coordinates of the dual.
    pub fn characters(&self) -> Result<Vec<Character>, GroupError> {
        let orders = self.orders().to_vec();
        mixed_radix(&orders)
            .into_iter()
            .map(|x| {
                let values = self
                    .coords
                    .iter()
                    .map(|a| dual_pairing(&orders, &x, a))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Character { coords: x, values })
            })
            .collect()
    }
}

/// `x(a) = ∏ ζ_{m_i}^{x_i a_i}`.
pub fn dual_pairing(orders: &[u64], x: &[u64], a: &[u64]) -> Result<CycNumber, CycError> {
    let mut acc = CycNumber::one();
    for i in 0..orders.len() {
        let e = (x[i] * a[i]) % orders[i];
        if e != 0 {
            acc = acc.try_mul(&CycNumber::root_of_unity(orders[i] as i64, e as i64)?)?;
        }
    }
    Ok(acc)
}

fn choose_basis(g: &FiniteGroup, elements: &[usize], orders: &[u64], chosen: &mut Vec<usize>) -> bool {
    // choose generators for the largest factors first, then reorder
    let k = orders.len();
    let mut picks: Vec<usize> = Vec::new();
    fn rec(
        g: &FiniteGroup,
        elements: &[usize],
        orders: &[u64],
        idx: isize,
        span: BTreeSet<usize>,
        picks: &mut Vec<usize>,
    ) -> bool {
        if idx < 0 {
            return true;
        }
        let m = orders[idx as usize];
        for &a in elements {
            if g.element_order(a) != m {
                continue;
            }
            let cyc = g.generated(&[a]);
            if cyc.iter().any(|c| *c != g.identity && span.contains(c)) {
                continue;
            }
            let mut next = BTreeSet::new();
            for &s in &span {
                for &c in &cyc {
                    next.insert(g.mul(s, c));
                }
            }
            if next.len() as u64 != span.len() as u64 * m {
                continue;
            }
            picks.push(a);
            if rec(g, elements, orders, idx - 1, next, picks) {
                return true;
            }
            picks.pop();
        }
        false
    }
    let mut start = BTreeSet::new();
    start.insert(g.identity);
    if !rec(g, elements, orders, k as isize - 1, start, &mut picks) {
        return false;
    }
    picks.reverse();
    *chosen = picks;
    true
}

/// All coordinate vectors for the given orders, first coordinate fastest.
pub fn mixed_radix(orders: &[u64]) -> Vec<Vec<u64>> {
    let total: u64 = orders.iter().product();
    (0..total)
        .map(|mut t| {
            orders
                .iter()
                .map(|&m| {
                    let c = t % m;
                    t /= m;
                    c
                })
                .collect()
        })
        .collect()
}

/// Index of a coordinate vector in [`mixed_radix`] order.
pub fn mixed_radix_index(orders: &[u64], x: &[u64]) -> usize {
    let mut idx = 0u64;
    let mut scale = 1u64;
    for (i, &m) in orders.iter().enumerate() {
        idx += (x[i] % m) * scale;
        scale *= m;
    }
    idx as usize
}

/// A character of an abelian group with its dual coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    pub coords: Vec<u64>,
    /// Values on the subgroup elements, in the basis' element order.
    pub values: Vec<CycNumber>,
}

/// Characters of an abelian group.
pub fn character_group(a: &FiniteGroup) -> Result<Vec<Character>, GroupError> {
    if !a.is_abelian() {
        return Err(GroupError::NotAbelian);
    }
    let all: Vec<usize> = a.elements().collect();
    AbelianBasis::new(a, &all)?.characters()
}

/// `|Hom(Λ²A, k×)| = ∏_{i<j} gcd(m_i, m_j)`.
pub fn hom_lambda2_order(a: &AbelianStructure) -> u64 {
    let m = &a.invariant_factors;
    let mut acc = 1;
    for i in 0..m.len() {
        for j in i + 1..m.len() {
            acc *= m[i].gcd(&m[j]);
        }
    }
    acc
}

/// An alternating bicharacter on a dual group `Â` with basis orders `m_i`,
/// stored by its values on basis pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct AltBicharacter {
    pub orders: Vec<u64>,
    pub values: Vec<Vec<CycNumber>>,
}

impl AltBicharacter {
    pub fn new(orders: Vec<u64>, values: Vec<Vec<CycNumber>>) -> Result<Self, GroupError> {
        let k = orders.len();
        if values.len() != k || values.iter().any(|r| r.len() != k) {
            return Err(GroupError::InvalidBicharacter(
                "matrix shape does not match the basis".into(),
            ));
        }
        for i in 0..k {
            if !values[i][i].is_one() {
                return Err(GroupError::InvalidBicharacter(format!("B(e{i},e{i}) != 1")));
            }
            for j in 0..k {
                let g = orders[i].gcd(&orders[j]);
                if !values[i][j].pow(g as i64)?.is_one() {
                    return Err(GroupError::InvalidBicharacter(format!(
                        "B(e{i},e{j}) is not a root of unity of order dividing {g}"
                    )));
                }
                if !(&values[i][j] * &values[j][i]).is_one() {
                    return Err(GroupError::InvalidBicharacter(format!(
                        "B(e{i},e{j}) B(e{j},e{i}) != 1"
                    )));
                }
            }
        }
        Ok(AltBicharacter { orders, values })
    }

    pub fn trivial(orders: Vec<u64>) -> Self {
        let k = orders.len();
        AltBicharacter {
            orders,
            values: vec![vec![CycNumber::one(); k]; k],
        }
    }

    /// Builds `B` with `B(e_i, e_j) = ζ^{t_ij}` from exponents in units of turns `t_ij / gcd`.
    pub fn from_upper_exponents(orders: Vec<u64>, upper: &[(usize, usize, u64)]) -> Result<Self, GroupError> {
        let k = orders.len();
        let mut values = vec![vec![CycNumber::one(); k]; k];
        for &(i, j, t) in upper {
            let g = orders[i].gcd(&orders[j]);
            let z = CycNumber::root_of_unity(g as i64, t as i64)?;
            values[j][i] = z.inv()?;
            values[i][j] = z;
        }
        Self::new(orders, values)
    }

    /// `B(x, y) = ∏ B(e_i, e_j)^{x_i y_j}`.
    pub fn eval(&self, x: &[u64], y: &[u64]) -> Result<CycNumber, CycError> {
        let mut acc = CycNumber::one();
        for i in 0..self.orders.len() {
            for j in 0..self.orders.len() {
                let e = x[i] * y[j];
                if e != 0 && !self.values[i][j].is_one() {
                    acc = acc.try_mul(&self.values[i][j].pow(e as i64)?)?;
                }
            }
        }
        Ok(acc)
    }

    /// Multiplicative order of the bicharacter's values.
    pub fn order(&self) -> u64 {
        self.values
            .iter()
            .flatten()
            .map(|v| v.root_of_unity_order().unwrap_or(1) as u64)
            .fold(1, |a, b| a.lcm(&b))
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().flatten().all(|v| v.is_one())
    }

    /// Pointwise power `B^t`.
    pub fn power(&self, t: i64) -> Result<Self, CycError> {
        Ok(AltBicharacter {
            orders: self.orders.clone(),
            values: self
                .values
                .iter()
                .map(|r| r.iter().map(|v| v.pow(t)).collect::<Result<Vec<_>, _>>())
                .collect::<Result<Vec<_>, _>>()?,
        })
    }

    /// Whether the associated form on `Â` has trivial radical.
    pub fn is_nondegenerate(&self) -> Result<bool, CycError> {
        let all = mixed_radix(&self.orders);
        for x in &all {
            if x.iter().all(|&c| c == 0) {
                continue;
            }
            let mut radical = true;
            for i in 0..self.orders.len() {
                let mut e = vec![0; self.orders.len()];
                e[i] = 1;
                if !self.eval(x, &e)?.is_one() {
                    radical = false;
                    break;
                }
            }
            if radical {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// The exponent class `t mod order(B)` with `B(g·x, g·y) = B(x, y)^t`, or `NonScalar`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ActionScalar {
    Exponent { exponent: u64, modulus: u64 },
    NonScalar,
}

impl ActionScalar {
    pub fn is_invariant(&self) -> bool {
        match *self {
            ActionScalar::Exponent { exponent, modulus } => exponent % modulus == 1 % modulus,
            ActionScalar::NonScalar => false,
        }
    }
}

/// Action on `Â` (in dual coordinates) induced from an action on the subgroup.
///
/// `(g·χ)(a) = χ(g⁻¹·a)`. The returned action acts on mixed-radix indices of `Â`.
pub fn induced_dual_action(basis: &AbelianBasis, act: &GroupAction) -> Result<GroupAction, GroupError> {
    let orders = basis.orders().to_vec();
    let n = basis.elements.len();
    if act.target_size != n {
        return Err(GroupError::NotAutomorphismAction(
            "action target is not the subgroup".into(),
        ));
    }
    let actor = act.actor.clone();
    let duals = mixed_radix(&orders);
    let gen_pos: Vec<usize> = basis.generators.iter().map(|&g| basis.position(g).unwrap()).collect();
    let mut map = Vec::with_capacity(actor.order() * duals.len());
    for g in actor.elements() {
        let ginv = actor.inv(g);
        for x in &duals {
            // coordinates of g·χ: value on generator a_j is χ(g⁻¹·a_j)
            let mut y = Vec::with_capacity(orders.len());
            for (j, &p) in gen_pos.iter().enumerate() {
                let moved = act.apply(ginv, p);
                let a = &basis.coords[moved];
                // χ(a) = ζ_lcm^{...}; compute as exponent in units of 1/m_j
                let mut turns = num_rational::Ratio::<i64>::from_integer(0);
                for i in 0..orders.len() {
                    turns += num_rational::Ratio::new((x[i] * a[i]) as i64, orders[i] as i64);
                }
                let frac = turns - turns.floor();
                let scaled = frac * num_rational::Ratio::from_integer(orders[j] as i64);
                if !scaled.is_integer() {
                    return Err(GroupError::NotAutomorphismAction(
                        "induced map does not preserve element orders".into(),
                    ));
                }
                y.push(*scaled.numer() as u64);
            }
            map.push(mixed_radix_index(&orders, &y));
        }
    }
    GroupAction::new(actor, duals.len(), map)
}

/// Compares `B(g·e_i, g·e_j)` with powers of `B(e_i, e_j)` on all basis pairs.
pub fn bichar_action_scalar(b: &AltBicharacter, dual_act: &GroupAction, g: usize) -> Result<ActionScalar, GroupError> {
    let orders = b.orders.clone();
    let k = orders.len();
    let size: u64 = orders.iter().product();
    if dual_act.target_size as u64 != size {
        return Err(GroupError::NotAutomorphismAction(
            "action does not act on the dual group".into(),
        ));
    }
    let duals = mixed_radix(&orders);
    // the action must be by automorphisms of the dual group
    for x in &duals {
        for y in &duals {
            let sum: Vec<u64> = (0..k).map(|i| (x[i] + y[i]) % orders[i]).collect();
            let lhs = dual_act.apply(g, mixed_radix_index(&orders, &sum));
            let gx = &duals[dual_act.apply(g, mixed_radix_index(&orders, x))];
            let gy = &duals[dual_act.apply(g, mixed_radix_index(&orders, y))];
            let rhs: Vec<u64> = (0..k).map(|i| (gx[i] + gy[i]) % orders[i]).collect();
            if lhs != mixed_radix_index(&orders, &rhs) {
                return Err(GroupError::NotAutomorphismAction(format!(
                    "element {g} is not an automorphism of the dual group"
                )));
            }
        }
    }
    let unit = |i: usize| {
        let mut e = vec![0; k];
        e[i] = 1;
        e
    };
    let images: Vec<Vec<u64>> = (0..k)
        .map(|i| duals[dual_act.apply(g, mixed_radix_index(&orders, &unit(i)))].clone())
        .collect();
    let modulus = b.order();
    for t in 1..=modulus {
        let mut ok = true;
        'pairs: for i in 0..k {
            for j in 0..k {
                let lhs = b.eval(&images[i], &images[j])?;
                if lhs != b.values[i][j].pow(t as i64)? {
                    ok = false;
                    break 'pairs;
                }
            }
        }
        if ok {
            return Ok(ActionScalar::Exponent { exponent: t, modulus });
        }
    }
    Ok(ActionScalar::NonScalar)
}

/// Conjugation action of `G` on the positions of a normal subgroup.
pub fn conjugation_action(g: &FiniteGroup, sub: &[usize]) -> Result<GroupAction, GroupError> {
    if !g.is_normal(sub) {
        return Err(GroupError::NotNormal);
    }
    let pos: BTreeMap<usize, usize> = sub.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    GroupAction::from_fn(g.clone(), sub.len(), |x, p| pos[&g.conjugate(x, sub[p])])
}

// ---- built-ins ----

/// `Z3 ⋊ (Z2 × Z2)` with both generators of `Z2 × Z2` inverting `Z3`.
pub fn build_g12() -> FiniteGroup {
    let f = FiniteGroup::cyclic(3);
    let gamma = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    // q = 2*s + t in the product indexing; each nontrivial generator acts by a -> a^2
    let act = GroupAction::from_fn(gamma.clone(), 3, |q, a| {
        let (s, t) = (q / 2, q % 2);
        if (s + t) % 2 == 1 {
            (2 * a) % 3
        } else {
            a
        }
    })
    .expect("valid action");
    FiniteGroup::semidirect(&f, &gamma, &act)
        .expect("automorphism action")
        .with_name("G12")
}

/// The subgroup `Γ = {(0, q)}` of [`build_g12`].
pub fn g12_gamma() -> Subgroup {
    (0..4).map(|q| 3 * q).collect()
}

/// `(Z3 × Z3) ⋊ Z2` with the generator acting by `s ↦ s², t ↦ t`.
pub fn build_g18() -> FiniteGroup {
    let gamma = FiniteGroup::product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(3));
    let z2 = FiniteGroup::cyclic(2);
    let act = GroupAction::from_fn(z2.clone(), 9, |a, x| {
        let (s, t) = (x / 3, x % 3);
        if a == 1 {
            ((2 * s) % 3) * 3 + t
        } else {
            x
        }
    })
    .expect("valid action");
    FiniteGroup::semidirect(&gamma, &z2, &act)
        .expect("automorphism action")
        .with_name("G18")
}

/// The normal subgroup `Γ ≅ Z3 × Z3` of [`build_g18`].
pub fn g18_gamma() -> Subgroup {
    (0..9).collect()
}

/// Reflection pair `{(1,1), (r,1), (1,r'), (r,r')}` in `D3 × D3`.
pub fn d3xd3_reflections() -> Subgroup {
    // reflection s in D3 has index 3; (g, h) -> 6g + h
    let mut v = vec![0, 3, 18, 21];
    v.sort_unstable();
    v
}

pub const BUILTIN_GROUPS: &[&str] = &["Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8", "D3xD3", "G12", "G18"];

pub fn builtin(name: &str) -> Result<FiniteGroup, GroupError> {
    let g = match name {
        "Z2" => FiniteGroup::cyclic(2),
        "Z3" => FiniteGroup::cyclic(3),
        "Z4" => FiniteGroup::cyclic(4),
        "Z2xZ2" => FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)),
        "S3" => FiniteGroup::symmetric(3)?,
        "D4" => FiniteGroup::dihedral(4),
        "Q8" => FiniteGroup::quaternion(),
        "D3xD3" => FiniteGroup::product(&FiniteGroup::dihedral(3), &FiniteGroup::dihedral(3)),
        "G12" => build_g12(),
        "G18" => build_g18(),
        other => return Err(GroupError::UnknownGroup(other.to_string())),
    };
    Ok(g.with_name(name))
}

/// Parses a group from a built-in name or a JSON construction spec.
pub fn group_from_spec(spec: &Value) -> Result<FiniteGroup, GroupError> {
    let bad = |m: &str| GroupError::BadSpec(m.to_string());
    if let Some(name) = spec.as_str() {
        return builtin(name);
    }
    let obj = spec.as_object().ok_or_else(|| bad("expected a name or an object"))?;
    let construct = obj
        .get("construct")
        .and_then(Value::as_str)
        .ok_or_else(|| bad("missing \"construct\""))?;
    let int = |key: &str| -> Result<usize, GroupError> {
        obj.get(key)
            .and_then(Value::as_u64)
            .filter(|&n| (1..=64).contains(&n))
            .map(|n| n as usize)
            .ok_or_else(|| bad(&format!("missing or invalid \"{key}\"")))
    };
    let sub = |key: &str| -> Result<FiniteGroup, GroupError> {
        group_from_spec(obj.get(key).ok_or_else(|| bad(&format!("missing \"{key}\"")))?)
    };
    let g = match construct {
        "cyclic" => FiniteGroup::cyclic(int("n")?),
        "dihedral" => FiniteGroup::dihedral(int("n")?),
        "quaternion" => FiniteGroup::quaternion(),
        "symmetric" => FiniteGroup::symmetric(int("n")?)?,
        "builtin" => builtin(
            obj.get("name")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("missing \"name\""))?,
        )?,
        "product" => FiniteGroup::product(&sub("left")?, &sub("right")?),
        "semidirect" => {
            let n = sub("normal")?;
            let q = sub("acting")?;
            let rows = obj
                .get("action")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing \"action\" table"))?;
            let mut map = Vec::new();
            for row in rows {
                let row = row.as_array().ok_or_else(|| bad("action rows must be arrays"))?;
                for x in row {
                    map.push(x.as_u64().ok_or_else(|| bad("action entries must be integers"))? as usize);
                }
            }
            let act = GroupAction::new(q.clone(), n.order(), map)?;
            FiniteGroup::semidirect(&n, &q, &act)?
        }
        other => return Err(bad(&format!("unknown construct \"{other}\""))),
    };
    if g.order() > 64 {
        return Err(bad("groups of order above 64 are not supported"));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_sizes(g: &FiniteGroup) -> Vec<usize> {
        let mut v: Vec<usize> = g.conjugacy_classes().iter().map(Vec::len).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn constructions_have_expected_orders() {
        assert_eq!(FiniteGroup::dihedral(4).order(), 8);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(FiniteGroup::product(&s3, &s3).order(), 36);
        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
        assert!(FiniteGroup::symmetric(5).is_err());
    }

    #[test]
    fn g12_center_by_brute_force() {
        let g = build_g12();
        assert_eq!(g.order(), 12);
        let brute: Vec<usize> = (0..12)
            .filter(|&a| (0..12).all(|b| g.mul(a, b) == g.mul(b, a)))
            .collect();
        assert_eq!(g.center(), &brute);
        // the product of the two inverting involutions acts trivially, so it is central
        assert_eq!(brute.len(), 2);
    }

    #[test]
    fn class_and_center_examples() {
        assert_eq!(FiniteGroup::dihedral(4).center().len(), 2);
        assert_eq!(sorted_sizes(&FiniteGroup::symmetric(3).unwrap()), vec![1, 2, 3]);
        let q8 = FiniteGroup::quaternion();
        assert_eq!(q8.commutator_subgroup().len(), 2);
        assert_eq!(q8.abelianization().invariant_factors, vec![2, 2]);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(
            FiniteGroup::symmetric(3).unwrap().irreducible_degrees().unwrap(),
            vec![1, 1, 2]
        );
        assert_eq!(
            FiniteGroup::quaternion().irreducible_degrees().unwrap(),
            vec![1, 1, 1, 1, 2]
        );
        let d3 = FiniteGroup::dihedral(3);
        let d = FiniteGroup::product(&d3, &d3).irreducible_degrees().unwrap();
        // oracle: pairwise products of the factor degrees
        let f = d3.irreducible_degrees().unwrap();
        let mut oracle: Vec<u64> = f.iter().flat_map(|a| f.iter().map(move |b| a * b)).collect();
        oracle.sort_unstable();
        assert_eq!(d, oracle);
        assert_eq!(d, vec![1, 1, 1, 1, 2, 2, 2, 2, 4]);
    }

    #[test]
    fn character_group_examples() {
        let z2 = character_group(&FiniteGroup::cyclic(2)).unwrap();
        assert_eq!(z2.len(), 2);
        assert_eq!(z2[1].values, vec![CycNumber::one(), CycNumber::from_integer(-1)]);
        let v4 = builtin("Z2xZ2").unwrap();
        let chars = character_group(&v4).unwrap();
        assert_eq!(chars.len(), 4);
        for c in &chars {
            for v in &c.values {
                assert!(v.is_one() || *v == CycNumber::from_integer(-1));
            }
        }
        let z3 = character_group(&FiniteGroup::cyclic(3)).unwrap();
        let allowed = [
            CycNumber::one(),
            crate::cyclotomic::zeta(3),
            crate::cyclotomic::zeta(3).pow(2).unwrap(),
        ];
        for c in &z3 {
            assert!(c.values.iter().all(|v| allowed.contains(v)));
        }
        assert_eq!(
            character_group(&FiniteGroup::symmetric(3).unwrap()),
            Err(GroupError::NotAbelian)
        );
    }

    #[test]
    fn lambda2_examples() {
        assert_eq!(hom_lambda2_order(&AbelianStructure::new(vec![2, 2]).unwrap()), 2);
        assert_eq!(hom_lambda2_order(&AbelianStructure::new(vec![12]).unwrap()), 1);
        assert_eq!(hom_lambda2_order(&AbelianStructure::new(vec![3, 3]).unwrap()), 3);
    }

    #[test]
    fn invariant_factors_of_products() {
        let z2 = FiniteGroup::cyclic(2);
        let z4 = FiniteGroup::cyclic(4);
        let z3 = FiniteGroup::cyclic(3);
        let g = FiniteGroup::product(&FiniteGroup::product(&z2, &z4), &z3);
        let all: Vec<usize> = g.elements().collect();
        assert_eq!(
            AbelianStructure::of_subgroup(&g, &all).unwrap().invariant_factors,
            vec![2, 12]
        );
        let basis = AbelianBasis::new(&g, &all).unwrap();
        assert_eq!(basis.generators.len(), 2);
        assert_eq!(g.element_order(basis.generators[0]), 2);
        assert_eq!(g.element_order(basis.generators[1]), 12);
    }

    #[test]
    fn semidirect_rejects_non_automorphisms() {
        let n = FiniteGroup::cyclic(3);
        let q = FiniteGroup::cyclic(2);
        // swapping 0 and 1 is a permutation action but moves the identity
        let act = GroupAction::from_fn(q.clone(), 3, |g, x| if g == 1 { [1, 0, 2][x] } else { x }).unwrap();
        assert!(matches!(
            FiniteGroup::semidirect(&n, &q, &act),
            Err(GroupError::NotAutomorphismAction(_))
        ));
    }

    #[test]
    fn action_scalar_examples() {
        // trivial action
        let b = AltBicharacter::from_upper_exponents(vec![3, 3], &[(0, 1, 1)]).unwrap();
        let trivial = GroupAction::trivial(FiniteGroup::cyclic(2), 9);
        let s = bichar_action_scalar(&b, &trivial, 1).unwrap();
        assert!(s.is_invariant());

        // G18 on its Z3 × Z3: exponent 2 modulo 3
        let g = build_g18();
        let gamma = g18_gamma();
        let basis = AbelianBasis::new(&g, &gamma).unwrap();
        let conj = conjugation_action(&g, &gamma).unwrap();
        let dual = induced_dual_action(&basis, &conj).unwrap();
        let a = 9; // (0, a)
        assert_eq!(
            bichar_action_scalar(&b, &dual, a).unwrap(),
            ActionScalar::Exponent {
                exponent: 2,
                modulus: 3
            }
        );

        // inversion on Z2 × Z2 with the nondegenerate form
        let b2 = AltBicharacter::from_upper_exponents(vec![2, 2], &[(0, 1, 1)]).unwrap();
        let inv = GroupAction::from_fn(FiniteGroup::cyclic(2), 4, |_, x| x).unwrap();
        let s2 = bichar_action_scalar(&b2, &inv, 1).unwrap();
        assert_eq!(
            s2,
            ActionScalar::Exponent {
                exponent: 1,
                modulus: 2
            }
        );
    }

    #[test]
    fn builtins_parse() {
        for name in BUILTIN_GROUPS {
            let g = builtin(name).unwrap();
            assert_eq!(g.name(), *name);
        }
        let spec: Value = serde_json::json!({
            "construct": "product",
            "left": {"construct": "cyclic", "n": 2},
            "right": {"construct": "dihedral", "n": 3}
        });
        assert_eq!(group_from_spec(&spec).unwrap().order(), 12);
        assert!(group_from_spec(&serde_json::json!("nope")).is_err());
    }
}
