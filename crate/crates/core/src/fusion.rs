//! Character rings as fusion data: degrees, duality, integer structure
//! constants, their axioms, standard subalgebras and stabilizers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};
use thiserror::Error;

use crate::groups::{mixed_radix, mixed_radix_index, FiniteGroup, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("malformed type string: {0}")]
    BadType(String),
    #[error("malformed fusion datum: {0}")]
    Malformed(String),
    #[error("no shipped character ring for group {0}")]
    UnsupportedGroup(String),
    #[error("inconsistent orbit data: {0}")]
    InconsistentOrbitData(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An algebra type `(1, n; d_1, n_1; …; d_r, n_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeSignature {
    pub n: u64,
    /// Sorted by degree, degrees distinct and at least 2, multiplicities positive.
    pub entries: Vec<(u64, u64)>,
}

impl TypeSignature {
    /// Builds a signature, merging repeated degrees and dropping zero multiplicities.
    pub fn new(n: u64, entries: &[(u64, u64)]) -> Result<Self, FusionError> {
        if n == 0 {
            return Err(FusionError::BadType(
                "the number of degree-one entries must be positive".into(),
            ));
        }
        let mut map: BTreeMap<u64, u64> = BTreeMap::new();
        let mut ones = n;
        for &(d, m) in entries {
            match d {
                0 => return Err(FusionError::BadType("degree 0".into())),
                1 => ones += m,
                _ => *map.entry(d).or_default() += m,
            }
        }
        Ok(TypeSignature {
            n: ones,
            entries: map.into_iter().filter(|&(_, m)| m > 0).collect(),
        })
    }

    pub fn dim(&self) -> u64 {
        self.n + self.entries.iter().map(|&(d, m)| m * d * d).sum::<u64>()
    }

    /// Number of irreducible components.
    pub fn rank(&self) -> u64 {
        self.n + self.entries.iter().map(|&(_, m)| m).sum::<u64>()
    }

    pub fn multiplicity(&self, d: u64) -> u64 {
        if d == 1 {
            return self.n;
        }
        self.entries.iter().find(|e| e.0 == d).map_or(0, |e| e.1)
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut out = vec![1; self.n as usize];
        for &(d, m) in &self.entries {
            out.extend(std::iter::repeat_n(d, m as usize));
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        self.entries.is_empty()
    }

    /// Type of the tensor product of two semisimple algebras.
    pub fn tensor(&self, other: &TypeSignature) -> TypeSignature {
        let mut a = vec![(1, self.n)];
        a.extend(self.entries.iter().copied());
        let mut b = vec![(1, other.n)];
        b.extend(other.entries.iter().copied());
        let mut parts = Vec::new();
        for &(d, m) in &a {
            for &(e, k) in &b {
                parts.push((d * e, m * k));
            }
        }
        TypeSignature::new_from_parts(&parts)
    }

    fn new_from_parts(parts: &[(u64, u64)]) -> TypeSignature {
        let n = parts.iter().filter(|p| p.0 == 1).map(|p| p.1).sum();
        let rest: Vec<(u64, u64)> = parts.iter().copied().filter(|p| p.0 != 1).collect();
        TypeSignature::new(n, &rest).expect("tensor of valid types")
    }
}

impl fmt::Display for TypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1,{}", self.n)?;
        for (d, m) in &self.entries {
            write!(f, ";{d},{m}")?;
        }
        Ok(())
    }
}

impl FromStr for TypeSignature {
    type Err = FusionError;

    /// Parses `"1,n;d1,n1;…"`; parentheses and spaces are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FusionError::BadType(s.to_string());
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
            .collect();
        let mut parts = Vec::new();
        for chunk in cleaned.split(';') {
            let (d, m) = chunk.split_once(',').ok_or_else(bad)?;
            let d: u64 = d.parse().map_err(|_| bad())?;
            let m: u64 = m.parse().map_err(|_| bad())?;
            if m == 0 {
                return Err(bad());
            }
            parts.push((d, m));
        }
        if parts.first().map(|p| p.0) != Some(1) {
            return Err(bad());
        }
        let mut seen = BTreeSet::new();
        if !parts.iter().all(|p| seen.insert(p.0)) {
            return Err(bad());
        }
        TypeSignature::new(parts[0].1, &parts[1..])
    }
}

impl Serialize for TypeSignature {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for TypeSignature {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Which axioms a datum is checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    /// Fusion-ring axioms only.
    Fusion,
    /// Fusion axioms plus the stabilizer, quotient-dimension and degree-2 constraints
    /// satisfied by character rings of semisimple Hopf algebras.
    Hopf,
}

impl FromStr for Profile {
    type Err = FusionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "fusion" | "basic" => Ok(Profile::Fusion),
            "hopf" => Ok(Profile::Hopf),
            other => Err(FusionError::Malformed(format!("unknown profile {other}"))),
        }
    }
}

/// A based ring with nonnegative integer structure constants
/// `N[i][j][k] = m(χ_k, χ_i χ_j)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FusionDatum {
    degrees: Vec<u64>,
    dual: Vec<usize>,
    unit: usize,
    constants: Vec<u32>,
}

impl FusionDatum {
    /// Builds a datum from dense constants `constants[(i*r + j)*r + k]`.
    pub fn new(degrees: Vec<u64>, dual: Vec<usize>, unit: usize, constants: Vec<u32>) -> Result<Self, FusionError> {
        let r = degrees.len();
        if r == 0 || dual.len() != r || constants.len() != r * r * r || unit >= r {
            return Err(FusionError::Malformed("dimensions do not match".into()));
        }
        if dual.iter().any(|&d| d >= r) {
            return Err(FusionError::Malformed("dual index out of range".into()));
        }
        if degrees.contains(&0) {
            return Err(FusionError::Malformed("degree 0".into()));
        }
        Ok(FusionDatum {
            degrees,
            dual,
            unit,
            constants,
        })
    }

    /// Builds a datum from sparse `(i, j, k, value)` entries.
    pub fn from_sparse(
        degrees: Vec<u64>,
        dual: Vec<usize>,
        entries: &[(usize, usize, usize, u32)],
    ) -> Result<Self, FusionError> {
        let r = degrees.len();
        let mut constants = vec![0u32; r * r * r];
        for &(i, j, k, v) in entries {
            if i >= r || j >= r || k >= r {
                return Err(FusionError::Malformed(format!("index out of range in ({i},{j},{k})")));
            }
            constants[(i * r + j) * r + k] = v;
        }
        // the unit is the degree-one index acting as identity; fall back to 0
        let probe = FusionDatum::new(degrees.clone(), dual.clone(), 0, constants.clone())?;
        let unit = (0..r)
            .find(|&u| (0..r).all(|j| (0..r).all(|k| probe.n(u, j, k) == u32::from(j == k))))
            .unwrap_or(0);
        FusionDatum::new(degrees, dual, unit, constants)
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> u64 {
        self.degrees[i]
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn duals(&self) -> &[usize] {
        &self.dual
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    #[inline]
    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.degrees.len();
        self.constants[(i * r + j) * r + k]
    }

    /// `Σ deg²`, the dimension of the underlying Hopf algebra.
    pub fn dim(&self) -> u64 {
        self.degrees.iter().map(|d| d * d).sum()
    }

    pub fn type_signature(&self) -> TypeSignature {
        let ones = self.degrees.iter().filter(|&&d| d == 1).count() as u64;
        let rest: Vec<(u64, u64)> = self.degrees.iter().filter(|&&d| d > 1).map(|&d| (d, 1)).collect();
        TypeSignature::new(ones.max(1), &rest).expect("valid degrees")
    }

    /// Support of `χ_i χ_j` with multiplicities.
    pub fn product(&self, i: usize, j: usize) -> Vec<(usize, u32)> {
        (0..self.rank())
            .filter_map(|k| {
                let v = self.n(i, j, k);
                (v > 0).then_some((k, v))
            })
            .collect()
    }

    pub fn degree_one(&self) -> Vec<usize> {
        (0..self.rank()).filter(|&i| self.degrees[i] == 1).collect()
    }

    /// Sparse constants in lexicographic order.
    pub fn sparse_constants(&self) -> Vec<(usize, usize, usize, u32)> {
        let r = self.rank();
        let mut out = Vec::new();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let v = self.n(i, j, k);
                    if v > 0 {
                        out.push((i, j, k, v));
                    }
                }
            }
        }
        out
    }

    /// Relabels by a permutation: new index `p[i]` carries old index `i`.
    pub fn relabel(&self, p: &[usize]) -> FusionDatum {
        let r = self.rank();
        let mut degrees = vec![0; r];
        let mut dual = vec![0; r];
        let mut constants = vec![0u32; r * r * r];
        for i in 0..r {
            degrees[p[i]] = self.degrees[i];
            dual[p[i]] = p[self.dual[i]];
            for j in 0..r {
                for k in 0..r {
                    constants[(p[i] * r + p[j]) * r + p[k]] = self.n(i, j, k);
                }
            }
        }
        FusionDatum {
            degrees,
            dual,
            unit: p[self.unit],
            constants,
        }
    }

    /// Whether two data agree up to relabeling.
    pub fn is_isomorphic(&self, other: &FusionDatum) -> bool {
        let r = self.rank();
        if r != other.rank() || r > 9 {
            return false;
        }
        let mut a = self.degrees.clone();
        let mut b = other.degrees.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return false;
        }
        fn rec(s: &FusionDatum, o: &FusionDatum, p: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let r = s.rank();
            if p.len() == r {
                return s.relabel(p) == *o;
            }
            let i = p.len();
            for c in 0..r {
                if !used[c] && s.degrees[i] == o.degrees[c] {
                    used[c] = true;
                    p.push(c);
                    if rec(s, o, p, used) {
                        return true;
                    }
                    p.pop();
                    used[c] = false;
                }
            }
            false
        }
        rec(self, other, &mut Vec::new(), &mut vec![false; r])
    }

    /// The group formed by the degree-one elements, indexed by position in [`Self::degree_one`].
    pub fn degree_one_group(&self) -> Option<FiniteGroup> {
        let ones = self.degree_one();
        let pos: BTreeMap<usize, usize> = ones.iter().enumerate().map(|(p, &g)| (g, p)).collect();
        let mut table = Vec::with_capacity(ones.len() * ones.len());
        for &g in &ones {
            for &h in &ones {
                let prod = self.product(g, h);
                match prod.as_slice() {
                    [(k, 1)] if pos.contains_key(k) => table.push(pos[k]),
                    _ => return None,
                }
            }
        }
        FiniteGroup::from_table("G", ones.len(), table).ok()
    }

    /// `G[χ_i] = {g : N[g][i][i] = 1}`.
    pub fn left_stabilizer(&self, i: usize) -> Vec<usize> {
        self.degree_one()
            .into_iter()
            .filter(|&g| self.n(g, i, i) == 1)
            .collect()
    }

    /// Smallest subset containing `seed` and the unit, closed under duals and products.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let r = self.rank();
        let mut inside = vec![false; r];
        let mut members = Vec::new();
        for &s in std::iter::once(&self.unit).chain(seed) {
            if !inside[s] {
                inside[s] = true;
                members.push(s);
            }
        }
        let mut idx = 0;
        while idx < members.len() {
            let a = members[idx];
            let mut found = vec![self.dual[a]];
            for &b in &members[..=idx] {
                found.extend((0..r).filter(|&k| self.n(a, b, k) > 0 || self.n(b, a, k) > 0));
            }
            for k in found {
                if !inside[k] {
                    inside[k] = true;
                    members.push(k);
                }
            }
            idx += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn subset_dim(&self, subset: &[usize]) -> u64 {
        subset.iter().map(|&i| self.degrees[i] * self.degrees[i]).sum()
    }

    /// All standard subalgebras with their dimensions, sorted by dimension then members.
    pub fn standard_subalgebras(&self) -> Vec<(Vec<usize>, u64)> {
        let r = self.rank();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut frontier = vec![self.closure(&[])];
        found.insert(frontier[0].clone());
        while let Some(s) = frontier.pop() {
            for x in 0..r {
                if s.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = s.clone();
                seed.push(x);
                let c = self.closure(&seed);
                if found.insert(c.clone()) {
                    frontier.push(c);
                }
            }
        }
        let mut out: Vec<(Vec<usize>, u64)> = found
            .into_iter()
            .map(|s| {
                let d = self.subset_dim(&s);
                (s, d)
            })
            .collect();
        out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// `Σ_{g ∈ G} N[i*][i][g]`, the dimension of the endomorphisms in the quotient by `G`.
    pub fn quotient_end_dim(&self, group: &[usize], i: usize) -> u32 {
        group.iter().map(|&g| self.n(self.dual[i], i, g)).sum()
    }

    /// The unique index `k` with `N[a][b][k] = 1` when `χ_a χ_b` is irreducible.
    fn single_product(&self, a: usize, b: usize) -> Option<usize> {
        match self.product(a, b).as_slice() {
            [(k, 1)] => Some(*k),
            _ => None,
        }
    }

    /// Orbits of `(g, h)·χ = g χ h⁻¹` on the degree-`d` elements.
    pub fn biaction_orbits(&self, d: u64) -> BiactionReport {
        let ones = self.degree_one();
        let xs: Vec<usize> = (0..self.rank()).filter(|&i| self.degrees[i] == d).collect();
        let act = |g: usize, h: usize, x: usize| -> Option<usize> {
            let gx = self.single_product(g, x)?;
            self.single_product(gx, self.dual[h])
        };
        let mut seen = BTreeSet::new();
        let mut orbits = Vec::new();
        for &x in &xs {
            if seen.contains(&x) {
                continue;
            }
            let mut orbit = BTreeSet::new();
            for &g in &ones {
                for &h in &ones {
                    if let Some(y) = act(g, h, x) {
                        orbit.insert(y);
                    }
                }
            }
            seen.extend(orbit.iter().copied());
            let stabilizers = orbit
                .iter()
                .map(|&y| {
                    let pairs: Vec<(usize, usize)> = ones
                        .iter()
                        .flat_map(|&g| ones.iter().map(move |&h| (g, h)))
                        .filter(|&(g, h)| act(g, h, y) == Some(y))
                        .collect();
                    (y, pairs)
                })
                .collect();
            orbits.push(BiactionOrbit {
                members: orbit.into_iter().collect(),
                stabilizers,
            });
        }
        let check = self.prime_pair_check(d, &xs);
        BiactionReport {
            degree: d,
            orbits,
            prime_pair_check: check,
        }
    }

    /// For `G` nonabelian of order `pq` (`p < q` primes, `p = d`) with every degree-`p`
    /// stabilizer nontrivial, `q²` divides the number of degree-`p` elements.
    fn prime_pair_check(&self, d: u64, xs: &[usize]) -> PrimePairCheck {
        let vacuous = PrimePairCheck {
            hypotheses_hold: false,
            holds: true,
        };
        let Some(group) = self.degree_one_group() else {
            return vacuous;
        };
        let order = group.order() as u64;
        let is_prime = |x: u64| x >= 2 && (2..x).take_while(|k| k * k <= x).all(|k| !x.is_multiple_of(k));
        if !is_prime(d) || !order.is_multiple_of(d) {
            return vacuous;
        }
        let q = order / d;
        if !(is_prime(q) && q > d) || group.is_abelian() {
            return vacuous;
        }
        if xs.iter().any(|&x| self.left_stabilizer(x).len() <= 1) {
            return vacuous;
        }
        PrimePairCheck {
            hypotheses_hold: true,
            holds: (xs.len() as u64).is_multiple_of(q * q),
        }
    }

    /// Checks the axioms of `profile`, one entry per axiom.
    pub fn verify(&self, profile: Profile) -> VerifyReport {
        let mut checks = vec![
            self.check_involution(),
            self.check_unit(),
            self.check_duality(),
            self.check_frobenius(),
            self.check_degrees(),
            self.check_group_like_multiplicity(),
            self.check_group_like_closure(),
            self.check_associativity(),
        ];
        if profile == Profile::Hopf {
            let structural_ok = checks.iter().all(|c| c.passed);
            if structural_ok {
                checks.extend(self.check_hopf_axioms());
            } else {
                for axiom in HOPF_AXIOMS {
                    checks.push(AxiomCheck::fail(axiom, "structural axioms fail".into()));
                }
            }
        }
        VerifyReport { profile, checks }
    }

    fn check_involution(&self) -> AxiomCheck {
        for i in 0..self.rank() {
            let d = self.dual[i];
            if self.dual[d] != i || self.degrees[d] != self.degrees[i] {
                return AxiomCheck::fail(Axiom::DualInvolution, format!("index {i}"));
            }
        }
        if self.dual[self.unit] != self.unit || self.degrees[self.unit] != 1 {
            return AxiomCheck::fail(
                Axiom::DualInvolution,
                "unit is not a self-dual degree-one element".into(),
            );
        }
        AxiomCheck::pass(Axiom::DualInvolution)
    }

    fn check_unit(&self) -> AxiomCheck {
        let u = self.unit;
        for j in 0..self.rank() {
            for k in 0..self.rank() {
                let want = u32::from(j == k);
                if self.n(u, j, k) != want || self.n(j, u, k) != want {
                    return AxiomCheck::fail(Axiom::Unit, format!("(unit,{j},{k})"));
                }
            }
        }
        AxiomCheck::pass(Axiom::Unit)
    }

    fn check_duality(&self) -> AxiomCheck {
        for i in 0..self.rank() {
            for j in 0..self.rank() {
                if self.n(i, j, self.unit) != u32::from(j == self.dual[i]) {
                    return AxiomCheck::fail(Axiom::Duality, format!("({i},{j},unit) = {}", self.n(i, j, self.unit)));
                }
            }
        }
        AxiomCheck::pass(Axiom::Duality)
    }

    fn check_frobenius(&self) -> AxiomCheck {
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let v = self.n(i, j, k);
                    let (di, dk) = (self.dual[i], self.dual[k]);
                    if v != self.n(j, dk, di) || v != self.n(di, k, j) {
                        return AxiomCheck::fail(Axiom::Frobenius, format!("({i},{j},{k})"));
                    }
                }
            }
        }
        AxiomCheck::pass(Axiom::Frobenius)
    }

    fn check_degrees(&self) -> AxiomCheck {
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                let s: u64 = (0..r).map(|k| self.n(i, j, k) as u64 * self.degrees[k]).sum();
                if s != self.degrees[i] * self.degrees[j] {
                    return AxiomCheck::fail(Axiom::Degree, format!("row ({i},{j}) sums to {s}"));
                }
            }
        }
        AxiomCheck::pass(Axiom::Degree)
    }

    fn check_group_like_multiplicity(&self) -> AxiomCheck {
        for g in self.degree_one() {
            for i in 0..self.rank() {
                if self.n(i, self.dual[i], g) > 1 {
                    return AxiomCheck::fail(Axiom::GroupLikeMultiplicity, format!("({i},{i}*,{g})"));
                }
            }
        }
        AxiomCheck::pass(Axiom::GroupLikeMultiplicity)
    }

    fn check_group_like_closure(&self) -> AxiomCheck {
        let ones = self.degree_one();
        for &g in &ones {
            if self.degrees[self.dual[g]] != 1 {
                return AxiomCheck::fail(Axiom::GroupLikeClosure, format!("dual of {g}"));
            }
            for &h in &ones {
                match self.product(g, h).as_slice() {
                    [(k, 1)] if self.degrees[*k] == 1 => {}
                    _ => return AxiomCheck::fail(Axiom::GroupLikeClosure, format!("product ({g},{h})")),
                }
            }
        }
        AxiomCheck::pass(Axiom::GroupLikeClosure)
    }

    fn check_associativity(&self) -> AxiomCheck {
        let r = self.rank();
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let lhs: u64 = (0..r).map(|t| self.n(i, j, t) as u64 * self.n(t, k, l) as u64).sum();
                        let rhs: u64 = (0..r).map(|t| self.n(j, k, t) as u64 * self.n(i, t, l) as u64).sum();
                        if lhs != rhs {
                            return AxiomCheck::fail(Axiom::Associativity, format!("({i},{j},{k},{l})"));
                        }
                    }
                }
            }
        }
        AxiomCheck::pass(Axiom::Associativity)
    }

    fn check_hopf_axioms(&self) -> Vec<AxiomCheck> {
        let group = self.degree_one_group();
        let ones = self.degree_one();
        let mut divides = AxiomCheck::pass(Axiom::StabilizerOrder);
        let mut exponent = AxiomCheck::pass(Axiom::StabilizerExponent);
        for i in 0..self.rank() {
            let d = self.degrees[i];
            let stab = self.left_stabilizer(i);
            if divides.passed && !(d * d).is_multiple_of(stab.len() as u64) {
                divides = AxiomCheck::fail(
                    Axiom::StabilizerOrder,
                    format!("|G[{i}]| = {} does not divide {}", stab.len(), d * d),
                );
            }
            if let Some(group) = &group {
                for &g in &stab {
                    let p = ones.iter().position(|&x| x == g).unwrap();
                    let o = group.element_order(p);
                    if exponent.passed && !d.is_multiple_of(o) {
                        exponent = AxiomCheck::fail(
                            Axiom::StabilizerExponent,
                            format!("element {g} of order {o} stabilizes {i} of degree {d}"),
                        );
                    }
                }
            }
        }
        let n = self.dim();
        let mut closure = AxiomCheck::pass(Axiom::ClosureDivisibility);
        for (s, dim) in self.standard_subalgebras() {
            if !n.is_multiple_of(dim) {
                closure = AxiomCheck::fail(
                    Axiom::ClosureDivisibility,
                    format!("standard subalgebra {s:?} has dimension {dim}, not dividing {n}"),
                );
                break;
            }
        }
        let nr = match self.nr_violation() {
            None => AxiomCheck::pass(Axiom::NrDichotomy),
            Some(msg) => AxiomCheck::fail(Axiom::NrDichotomy, msg),
        };
        vec![divides, exponent, closure, nr]
    }

    /// First degree-2 element violating the dichotomy, if any.
    pub fn nr_violation(&self) -> Option<String> {
        let has_four = self.degrees.contains(&4);
        for i in 0..self.rank() {
            if self.degrees[i] != 2 || self.left_stabilizer(i).len() > 1 {
                continue;
            }
            if let Some(msg) = nr_second_branch(self, i, has_four) {
                return Some(msg);
            }
        }
        None
    }
}

/// Why degree-2 `χ_i` with trivial stabilizer fails `χχ* = ε + ψ` and its follow-up, if it does.
fn nr_second_branch(f: &FusionDatum, i: usize, has_four: bool) -> Option<String> {
    let prod = f.product(i, f.dual(i));
    let others: Vec<(usize, u32)> = prod.into_iter().filter(|&(k, _)| k != f.unit()).collect();
    let psi = match others.as_slice() {
        [(k, 1)] if f.degree(*k) == 3 => *k,
        _ => {
            return Some(format!(
                "G[{i}] is trivial and {i}·{i}* is not ε plus one degree-3 element"
            ))
        }
    };
    if has_four {
        return None;
    }
    let stab = f.left_stabilizer(psi);
    if stab.len() != 3 {
        return Some(format!("|G[{psi}]| = {} where 3 is required", stab.len()));
    }
    let r = f.rank();
    for k in 0..r {
        let want = if stab.contains(&k) {
            1
        } else if k == psi {
            2
        } else {
            0
        };
        if f.n(psi, f.dual(psi), k) != want {
            return Some(format!("{psi}·{psi}* differs from Σ G[{psi}] + 2·{psi} at {k}"));
        }
    }
    None
}

/// The axioms checked on fusion data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    DualInvolution,
    Unit,
    Duality,
    Frobenius,
    Degree,
    GroupLikeMultiplicity,
    GroupLikeClosure,
    Associativity,
    StabilizerOrder,
    StabilizerExponent,
    ClosureDivisibility,
    NrDichotomy,
}

const HOPF_AXIOMS: [Axiom; 4] = [
    Axiom::StabilizerOrder,
    Axiom::StabilizerExponent,
    Axiom::ClosureDivisibility,
    Axiom::NrDichotomy,
];

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::DualInvolution => "dual_involution",
            Axiom::Unit => "unit",
            Axiom::Duality => "duality",
            Axiom::Frobenius => "frobenius",
            Axiom::Degree => "degree",
            Axiom::GroupLikeMultiplicity => "group_like_multiplicity",
            Axiom::GroupLikeClosure => "group_like_closure",
            Axiom::Associativity => "associativity",
            Axiom::StabilizerOrder => "stabilizer_order",
            Axiom::StabilizerExponent => "stabilizer_exponent",
            Axiom::ClosureDivisibility => "closure_divisibility",
            Axiom::NrDichotomy => "nr_dichotomy",
        }
    }

    /// The fact each axiom rests on.
    pub fn citation(self) -> &'static str {
        match self {
            Axiom::DualInvolution | Axiom::Unit | Axiom::Degree => "multiplicativity of characters and degrees",
            Axiom::Duality => "m(ε, χψ) = δ(ψ, χ*) for irreducible characters",
            Axiom::Frobenius => "Frobenius reciprocity m(χ, ψλ) = m(ψ*, λχ*)",
            Axiom::GroupLikeMultiplicity => "m(g, χχ*) = 1 exactly when gχ = χ",
            Axiom::GroupLikeClosure => "degree-one characters form the group G(H*)",
            Axiom::Associativity => "associativity of the character algebra",
            Axiom::StabilizerOrder => "Nichols-Zoeller: |G[χ]| divides (deg χ)²",
            Axiom::StabilizerExponent => "the exponent of G[χ] divides deg χ",
            Axiom::ClosureDivisibility => "standard subalgebras correspond to quotient Hopf algebras (Nichols-Zoeller)",
            Axiom::NrDichotomy => "Nichols-Richmond theorem on irreducible characters of degree 2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

impl AxiomCheck {
    fn pass(axiom: Axiom) -> Self {
        AxiomCheck {
            axiom,
            passed: true,
            violation: None,
        }
    }

    fn fail(axiom: Axiom, violation: String) -> Self {
        AxiomCheck {
            axiom,
            passed: false,
            violation: Some(violation),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub profile: Profile,
    pub checks: Vec<AxiomCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiactionOrbit {
    pub members: Vec<usize>,
    /// Point stabilizers as lists of pairs `(g, h)`.
    pub stabilizers: Vec<(usize, Vec<(usize, usize)>)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrimePairCheck {
    pub hypotheses_hold: bool,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BiactionReport {
    pub degree: u64,
    pub orbits: Vec<BiactionOrbit>,
    pub prime_pair_check: PrimePairCheck,
}

/// One orbit of a group of group-likes acting on simple subcoalgebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDatum {
    /// Dimension `d²` of the simple subcoalgebra.
    pub component_dim: u64,
    pub orbit_size: u64,
    pub stabilizer_order: u64,
}

/// Dimensions of the simple components of the quotient coalgebra by a group action.
pub fn quotient_coalgebra_type(ty: &TypeSignature, orbits: &[OrbitDatum]) -> Result<Vec<u64>, FusionError> {
    let bad = |m: String| FusionError::InconsistentOrbitData(m);
    let Some(first) = orbits.first() else {
        return Err(bad("no orbits".into()));
    };
    let g = first.orbit_size * first.stabilizer_order;
    if g == 0 {
        return Err(bad("empty orbit".into()));
    }
    let mut per_dim: BTreeMap<u64, u64> = BTreeMap::new();
    let mut out = Vec::new();
    for o in orbits {
        if o.orbit_size * o.stabilizer_order != g {
            return Err(bad(format!(
                "orbit size {} times stabilizer {} is not the group order {g}",
                o.orbit_size, o.stabilizer_order
            )));
        }
        let total = o.component_dim * o.orbit_size;
        if total % g != 0 {
            return Err(bad(format!(
                "component dimension {} over the orbit is not divisible by {g}",
                total
            )));
        }
        *per_dim.entry(o.component_dim).or_default() += o.orbit_size;
        out.push(total / g);
    }
    let mut expected: BTreeMap<u64, u64> = BTreeMap::new();
    expected.insert(1, ty.n);
    for &(d, m) in &ty.entries {
        expected.insert(d * d, m);
    }
    if per_dim != expected {
        return Err(bad("orbits do not cover the simple components of the type".into()));
    }
    if !ty.dim().is_multiple_of(g) {
        return Err(bad(format!("group order {g} does not divide {}", ty.dim())));
    }
    out.sort_unstable();
    Ok(out)
}

/// Character ring of a group: abelian groups, and nonabelian groups of order 6 or 8.
pub fn from_group_characters(g: &FiniteGroup) -> Result<FusionDatum, FusionError> {
    let ab = g.abelianization();
    let orders = ab.invariant_factors.clone();
    let m = ab.order() as usize;
    let linear = mixed_radix(&orders);
    let add = |a: usize, b: usize| -> usize {
        let x = &linear[a];
        let y = &linear[b];
        let s: Vec<u64> = (0..orders.len()).map(|i| (x[i] + y[i]) % orders[i]).collect();
        mixed_radix_index(&orders, &s)
    };
    let neg = |a: usize| -> usize {
        let x = &linear[a];
        let s: Vec<u64> = (0..orders.len()).map(|i| (orders[i] - x[i]) % orders[i]).collect();
        mixed_radix_index(&orders, &s)
    };
    let mut entries = Vec::new();
    for a in 0..m {
        for b in 0..m {
            entries.push((a, b, add(a, b), 1));
        }
    }
    let mut degrees = vec![1u64; m];
    let mut dual: Vec<usize> = (0..m).map(neg).collect();
    if g.is_abelian() {
        return FusionDatum::from_sparse(degrees, dual, &entries);
    }
    let chi = m;
    match (g.order(), m) {
        // S3: sgn χ = χ, χ² = ε + sgn + χ
        (6, 2) => {
            degrees.push(2);
            dual.push(chi);
            for a in 0..2 {
                entries.push((a, chi, chi, 1));
                entries.push((chi, a, chi, 1));
                entries.push((chi, chi, a, 1));
            }
            entries.push((chi, chi, chi, 1));
        }
        // order 8: gχ = χ, χ² = Σ g
        (8, 4) => {
            degrees.push(2);
            dual.push(chi);
            for a in 0..4 {
                entries.push((a, chi, chi, 1));
                entries.push((chi, a, chi, 1));
                entries.push((chi, chi, a, 1));
            }
        }
        _ => return Err(FusionError::UnsupportedGroup(g.name().to_string())),
    }
    FusionDatum::from_sparse(degrees, dual, &entries)
}

impl Serialize for FusionDatum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let constants: Vec<[u64; 4]> = self
            .sparse_constants()
            .into_iter()
            .map(|(i, j, k, v)| [i as u64, j as u64, k as u64, v as u64])
            .collect();
        json!({
            "degrees": self.degrees,
            "dual": self.dual,
            "constants": constants,
        })
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FusionDatum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(deserializer)?;
        FusionDatum::from_json(&v).map_err(serde::de::Error::custom)
    }
}

impl FusionDatum {
    pub fn from_json(v: &Value) -> Result<Self, FusionError> {
        let bad = |m: &str| FusionError::Malformed(m.to_string());
        let degrees: Vec<u64> = v
            .get("degrees")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"degrees\""))?
            .iter()
            .map(|d| d.as_u64().ok_or_else(|| bad("degrees must be positive integers")))
            .collect::<Result<_, _>>()?;
        let dual: Vec<usize> = v
            .get("dual")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"dual\""))?
            .iter()
            .map(|d| {
                d.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| bad("dual entries must be indices"))
            })
            .collect::<Result<_, _>>()?;
        let mut entries = Vec::new();
        for c in v
            .get("constants")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing \"constants\""))?
        {
            let c = c
                .as_array()
                .filter(|a| a.len() == 4)
                .ok_or_else(|| bad("constants are [i,j,k,value]"))?;
            let x: Vec<u64> = c
                .iter()
                .map(|e| {
                    e.as_u64()
                        .ok_or_else(|| bad("constant entries must be nonnegative integers"))
                })
                .collect::<Result<_, _>>()?;
            entries.push((x[0] as usize, x[1] as usize, x[2] as usize, x[3] as u32));
        }
        FusionDatum::from_sparse(degrees, dual, &entries)
    }
}
