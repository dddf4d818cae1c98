//! Finite-dimensional Hopf algebras given by exact structure constants.
//!
//! A [`HopfData`] stores multiplication, unit, comultiplication, counit and
//! antipode densely over a fixed basis, together with sparse views used by
//! the arithmetic. Everything here is exact over cyclotomic fields.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use serde_json::{json, Value};
use thiserror::Error;

use crate::cyclotomic::{CycError, CycNumber, Rational, MAX_CONDUCTOR};
use crate::fusion::{FusionError, TypeSignature};
use crate::groups::{
    bichar_action_scalar, conjugation_action, dual_pairing, induced_dual_action, mixed_radix, AbelianBasis,
    AltBicharacter, FiniteGroup, GroupError,
};

type Cyc = CycNumber;

/// Largest dimension accepted by the twisting operations.
pub const MAX_TWIST_DIM: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error("malformed Hopf data: {0}")]
    Malformed(String),
    #[error("generators span a subalgebra of dimension {span}, not {dim}")]
    GeneratorsDoNotSpan { span: usize, dim: usize },
    #[error("minimal polynomial does not split over the working field: {0}")]
    CandidateOutsideField(String),
    #[error("twist is not a normalized invertible 2-cocycle: {0}")]
    TwistInvalid(String),
    #[error("dimension {0} exceeds the twisting limit {MAX_TWIST_DIM}")]
    TooLarge(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Cyc(#[from] CycError),
    #[error(transparent)]
    Fusion(#[from] FusionError),
}

type Result<T> = std::result::Result<T, HopfError>;

/// Sparse element of `H ⊗ H` as sorted `(i, j, coefficient)` triples.
pub type Tensor2 = Vec<(usize, usize, Cyc)>;

fn madd(acc: &mut Cyc, a: &Cyc, b: &Cyc) -> std::result::Result<(), CycError> {
    if a.is_zero() || b.is_zero() {
        return Ok(());
    }
    let p = if a.is_one() {
        b.clone()
    } else if b.is_one() {
        a.clone()
    } else {
        a.try_mul(b)?
    };
    *acc = acc.try_add(&p)?;
    Ok(())
}

fn msub(acc: &mut Cyc, a: &Cyc, b: &Cyc) -> std::result::Result<(), CycError> {
    madd(acc, &-a, b)
}

fn sparse(v: &[Cyc]) -> Vec<(usize, Cyc)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn finish2<K: Ord + Copy>(map: HashMap<K, Cyc>) -> Vec<(K, Cyc)> {
    let mut out: Vec<(K, Cyc)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by_key(|a| a.0);
    out
}

fn to_tensor2(v: Vec<((usize, usize), Cyc)>) -> Tensor2 {
    v.into_iter().map(|((i, j), c)| (i, j, c)).collect()
}

/// A Hopf algebra (or candidate) on the basis `e_0, …, e_{m-1}`.
#[derive(Clone)]
pub struct HopfData {
    labels: Vec<String>,
    /// `mult[(i*m + j)*m + k]` is the coefficient of `e_k` in `e_i e_j`.
    mult: Vec<Cyc>,
    unit: Vec<Cyc>,
    /// `comult[(i*m + j)*m + k]` is the coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    comult: Vec<Cyc>,
    counit: Vec<Cyc>,
    /// `antipode[i*m + j]` is the coefficient of `e_j` in `S(e_i)`.
    antipode: Vec<Cyc>,
    sp_mult: Vec<Vec<(usize, Cyc)>>,
    sp_comult: Vec<Tensor2>,
    sp_antipode: Vec<Vec<(usize, Cyc)>>,
}

impl fmt::Debug for HopfData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HopfData(dim {}, labels {:?})", self.dim(), self.labels)
    }
}

impl PartialEq for HopfData {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.mult == other.mult
            && self.unit == other.unit
            && self.comult == other.comult
            && self.counit == other.counit
            && self.antipode == other.antipode
    }
}

impl HopfData {
    pub fn new(
        labels: Vec<String>,
        mult: Vec<Cyc>,
        unit: Vec<Cyc>,
        comult: Vec<Cyc>,
        counit: Vec<Cyc>,
        antipode: Vec<Cyc>,
    ) -> Result<Self> {
        let m = labels.len();
        if m == 0 {
            return Err(HopfError::Malformed("dimension 0".into()));
        }
        let checks = [
            ("mult", mult.len(), m * m * m),
            ("unit", unit.len(), m),
            ("comult", comult.len(), m * m * m),
            ("counit", counit.len(), m),
            ("antipode", antipode.len(), m * m),
        ];
        for (name, got, want) in checks {
            if got != want {
                return Err(HopfError::Malformed(format!(
                    "{name} has {got} entries, expected {want}"
                )));
            }
        }
        let sp_mult = (0..m * m).map(|p| sparse(&mult[p * m..(p + 1) * m])).collect();
        let sp_comult = (0..m)
            .map(|i| {
                sparse(&comult[i * m * m..(i + 1) * m * m])
                    .into_iter()
                    .map(|(p, c)| (p / m, p % m, c))
                    .collect()
            })
            .collect();
        let sp_antipode = (0..m).map(|i| sparse(&antipode[i * m..(i + 1) * m])).collect();
        Ok(HopfData {
            labels,
            mult,
            unit,
            comult,
            counit,
            antipode,
            sp_mult,
            sp_comult,
            sp_antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Index of the basis element with the given label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &[Cyc] {
        &self.unit
    }

    pub fn counit(&self) -> &[Cyc] {
        &self.counit
    }

    /// `e_i e_j` as sparse `(k, coefficient)` pairs.
    pub fn mult_basis(&self, i: usize, j: usize) -> &[(usize, Cyc)] {
        &self.sp_mult[i * self.dim() + j]
    }

    /// `Δ(e_i)` as sparse triples.
    pub fn comult_basis(&self, i: usize) -> &Tensor2 {
        &self.sp_comult[i]
    }

    /// `S(e_i)` as sparse pairs.
    pub fn antipode_basis(&self, i: usize) -> &[(usize, Cyc)] {
        &self.sp_antipode[i]
    }

    pub fn basis(&self, i: usize) -> Vec<Cyc> {
        let mut v = vec![Cyc::zero(); self.dim()];
        v[i] = Cyc::one();
        v
    }

    pub fn mul(&self, a: &[Cyc], b: &[Cyc]) -> Result<Vec<Cyc>> {
        let m = self.dim();
        let mut out = vec![Cyc::zero(); m];
        let sb = sparse(b);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in &sb {
                let xy = x.try_mul(y)?;
                for (k, c) in self.mult_basis(i, *j) {
                    madd(&mut out[*k], &xy, c)?;
                }
            }
        }
        Ok(out)
    }

    pub fn comult(&self, a: &[Cyc]) -> Result<Tensor2> {
        let mut acc: HashMap<(usize, usize), Cyc> = HashMap::new();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, k, c) in self.comult_basis(i) {
                madd(acc.entry((*j, *k)).or_default(), x, c)?;
            }
        }
        Ok(to_tensor2(finish2(acc)))
    }

    pub fn counit_of(&self, a: &[Cyc]) -> Result<Cyc> {
        let mut acc = Cyc::zero();
        for (x, e) in a.iter().zip(&self.counit) {
            madd(&mut acc, x, e)?;
        }
        Ok(acc)
    }

    pub fn antipode_of(&self, a: &[Cyc]) -> Result<Vec<Cyc>> {
        let mut out = vec![Cyc::zero(); self.dim()];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, c) in self.antipode_basis(i) {
                madd(&mut out[*j], x, c)?;
            }
        }
        Ok(out)
    }

    /// Product in `H ⊗ H`.
    pub fn mul2(&self, x: &[(usize, usize, Cyc)], y: &[(usize, usize, Cyc)]) -> Result<Tensor2> {
        let mut acc: HashMap<(usize, usize), Cyc> = HashMap::new();
        for (a1, a2, c) in x {
            for (b1, b2, d) in y {
                let cd = c.try_mul(d)?;
                for (p, u) in self.mult_basis(*a1, *b1) {
                    let cdu = cd.try_mul(u)?;
                    for (q, v) in self.mult_basis(*a2, *b2) {
                        madd(acc.entry((*p, *q)).or_default(), &cdu, v)?;
                    }
                }
            }
        }
        Ok(to_tensor2(finish2(acc)))
    }

    /// `a ⊗ b` for elements `a`, `b`.
    pub fn tensor(&self, a: &[Cyc], b: &[Cyc]) -> Result<Tensor2> {
        let mut out = Vec::new();
        for (i, x) in sparse(a) {
            for (j, y) in sparse(b) {
                out.push((i, j, x.try_mul(&y)?));
            }
        }
        Ok(out)
    }

    pub fn is_commutative(&self) -> bool {
        let m = self.dim();
        (0..m).all(|i| (0..m).all(|j| self.mult_basis(i, j) == self.mult_basis(j, i)))
    }

    /// `Δ = flip ∘ Δ` on every basis element.
    pub fn is_cocommutative(&self) -> bool {
        let m = self.dim();
        (0..m).all(|i| {
            let block = &self.comult[i * m * m..(i + 1) * m * m];
            (0..m).all(|j| (0..m).all(|k| block[j * m + k] == block[k * m + j]))
        })
    }

    /// The same data with `Δ(e_i)` replaced.
    pub fn with_comult(&self, i: usize, terms: &[(usize, usize, Cyc)]) -> Result<HopfData> {
        let m = self.dim();
        let mut comult = self.comult.clone();
        for c in &mut comult[i * m * m..(i + 1) * m * m] {
            *c = Cyc::zero();
        }
        for (j, k, c) in terms {
            comult[(i * m + j) * m + k] = c.clone();
        }
        HopfData::new(
            self.labels.clone(),
            self.mult.clone(),
            self.unit.clone(),
            comult,
            self.counit.clone(),
            self.antipode.clone(),
        )
    }

    /// Human-readable form of an element.
    pub fn format_element(&self, v: &[Cyc]) -> String {
        let terms: Vec<String> = sparse(v)
            .into_iter()
            .map(|(i, c)| {
                if c.is_one() {
                    self.labels[i].clone()
                } else {
                    format!("({c})*{}", self.labels[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Reads the JSON form written by `Serialize`.
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |s: &str| HopfError::Malformed(s.to_string());
        let labels: Vec<String> = serde_json::from_value(v["labels"].clone()).map_err(|e| bad(&e.to_string()))?;
        let m = labels.len();
        let vector = |key: &str| -> Result<Vec<Cyc>> {
            let out: Vec<Cyc> = serde_json::from_value(v[key].clone()).map_err(|e| bad(&e.to_string()))?;
            if out.len() != m {
                return Err(bad(&format!("{key} has the wrong length")));
            }
            Ok(out)
        };
        let triples = |key: &str| -> Result<Vec<Cyc>> {
            let rows: Vec<(usize, usize, usize, Cyc)> =
                serde_json::from_value(v[key].clone()).map_err(|e| bad(&e.to_string()))?;
            let mut out = vec![Cyc::zero(); m * m * m];
            for (i, j, k, c) in rows {
                if i >= m || j >= m || k >= m {
                    return Err(bad(&format!("{key} index out of range")));
                }
                out[(i * m + j) * m + k] = c;
            }
            Ok(out)
        };
        let rows: Vec<(usize, usize, Cyc)> =
            serde_json::from_value(v["antipode"].clone()).map_err(|e| bad(&e.to_string()))?;
        let mut antipode = vec![Cyc::zero(); m * m];
        for (i, j, c) in rows {
            if i >= m || j >= m {
                return Err(bad("antipode index out of range"));
            }
            antipode[i * m + j] = c;
        }
        HopfData::new(
            labels,
            triples("mult")?,
            vector("unit")?,
            triples("comult")?,
            vector("counit")?,
            antipode,
        )
    }
}

impl Serialize for HopfData {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let m = self.dim();
        let mut mult = Vec::new();
        for i in 0..m {
            for j in 0..m {
                for (k, c) in self.mult_basis(i, j) {
                    mult.push(json!([i, j, k, c]));
                }
            }
        }
        let mut comult = Vec::new();
        for i in 0..m {
            for (j, k, c) in self.comult_basis(i) {
                comult.push(json!([i, j, k, c]));
            }
        }
        let mut antipode = Vec::new();
        for i in 0..m {
            for (j, c) in self.antipode_basis(i) {
                antipode.push(json!([i, j, c]));
            }
        }
        json!({
            "dim": m,
            "labels": self.labels,
            "mult": mult,
            "comult": comult,
            "unit": self.unit,
            "counit": self.counit,
            "antipode": antipode,
        })
        .serialize(s)
    }
}

// ---- constructions ----

/// The group algebra `kG` with `Δg = g ⊗ g` and `S g = g⁻¹`.
pub fn from_group(g: &FiniteGroup) -> HopfData {
    let m = g.order();
    let mut mult = vec![Cyc::zero(); m * m * m];
    let mut comult = vec![Cyc::zero(); m * m * m];
    let mut antipode = vec![Cyc::zero(); m * m];
    for a in 0..m {
        for b in 0..m {
            mult[(a * m + b) * m + g.mul(a, b)] = Cyc::one();
        }
        comult[(a * m + a) * m + a] = Cyc::one();
        antipode[a * m + g.inv(a)] = Cyc::one();
    }
    let mut unit = vec![Cyc::zero(); m];
    unit[g.identity()] = Cyc::one();
    let labels = (0..m).map(|a| format!("g{a}")).collect();
    HopfData::new(labels, mult, unit, comult, vec![Cyc::one(); m], antipode).expect("group algebra is well formed")
}

fn dual_label(l: &str) -> String {
    match l.strip_prefix("p[").and_then(|r| r.strip_suffix(']')) {
        Some(inner) => inner.to_string(),
        None => format!("p[{l}]"),
    }
}

/// The dual Hopf algebra on the dual basis: every structure tensor is transposed.
pub fn dual(h: &HopfData) -> HopfData {
    let m = h.dim();
    let mut mult = vec![Cyc::zero(); m * m * m];
    let mut comult = vec![Cyc::zero(); m * m * m];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                mult[(i * m + j) * m + k] = h.comult[(k * m + i) * m + j].clone();
                comult[(k * m + i) * m + j] = h.mult[(i * m + j) * m + k].clone();
            }
        }
    }
    let mut antipode = vec![Cyc::zero(); m * m];
    for i in 0..m {
        for j in 0..m {
            antipode[i * m + j] = h.antipode[j * m + i].clone();
        }
    }
    let labels = h.labels.iter().map(|l| dual_label(l)).collect();
    HopfData::new(labels, mult, h.counit.clone(), comult, h.unit.clone(), antipode).expect("dual is well formed")
}

/// Labels of the eight-dimensional algebra in basis order.
pub const H8_LABELS: [&str; 8] = ["1", "x", "y", "xy", "z", "xz", "yz", "xyz"];

fn h8_index(k: usize, c: usize) -> usize {
    k + 4 * c
}

/// The eight-dimensional semisimple Hopf algebra generated by `x, y, z` with
/// `x² = y² = 1`, `xy = yx`, `zx = yz`, `zy = xz`, `z² = ½(1 + x + y − xy)`,
/// `Δ(z) = ½((1 + y) ⊗ 1 + (1 − y) ⊗ x)(z ⊗ z)`.
pub fn build_h8() -> HopfData {
    let m = 8;
    let half = Cyc::from_frac(1, 2);
    let swap = |k: usize| ((k & 1) << 1) | ((k >> 1) & 1);
    let mut mult = vec![Cyc::zero(); m * m * m];
    for i in 0..m {
        for j in 0..m {
            let (k1, c1) = (i % 4, i / 4);
            let (k2, c2) = (j % 4, j / 4);
            let k2 = if c1 == 1 { swap(k2) } else { k2 };
            let base = k1 ^ k2;
            let row = &mut mult[(i * m + j) * m..(i * m + j + 1) * m];
            if c1 + c2 < 2 {
                row[h8_index(base, c1 + c2)] = Cyc::one();
            } else {
                row[base] = half.clone();
                row[base ^ 1] = half.clone();
                row[base ^ 2] = half.clone();
                row[base ^ 3] = -&half;
            }
        }
    }
    let mut unit = vec![Cyc::zero(); m];
    unit[0] = Cyc::one();
    let counit = vec![Cyc::one(); m];
    let zero_tensor = vec![Cyc::zero(); m * m * m];
    let zero_s = vec![Cyc::zero(); m * m];
    let labels: Vec<String> = H8_LABELS.iter().map(|s| s.to_string()).collect();
    // multiplication only, to expand the coalgebra structure
    let algebra = HopfData::new(
        labels.clone(),
        mult.clone(),
        unit.clone(),
        zero_tensor,
        counit.clone(),
        zero_s,
    )
    .expect("shape");
    let (z, xz, yz) = (4, 5, 6);
    let delta_z: Tensor2 = vec![
        (z, z, half.clone()),
        (z, xz, half.clone()),
        (yz, z, half.clone()),
        (yz, xz, -&half),
    ];
    let mut comult = vec![Cyc::zero(); m * m * m];
    let mut antipode = vec![Cyc::zero(); m * m];
    for k in 0..4 {
        comult[(k * m + k) * m + k] = Cyc::one();
        antipode[k * m + k] = Cyc::one();
        let gz = h8_index(k, 1);
        let d = algebra.mul2(&[(k, k, Cyc::one())], &delta_z).unwrap();
        for (a, b, c) in d {
            comult[(gz * m + a) * m + b] = c;
        }
        // the antipode identity on Δ(z) forces S(z) = z, so S(gz) = z g
        let s = algebra.mul(&algebra.basis(z), &algebra.basis(k)).unwrap();
        antipode[gz * m..(gz + 1) * m].clone_from_slice(&s);
    }
    HopfData::new(labels, mult, unit, comult, counit, antipode).expect("H8 is well formed")
}

// ---- axiom verification ----

/// Outcome of one checked identity.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub violation: Option<String>,
}

impl Check {
    fn from(name: &'static str, violation: Option<String>) -> Self {
        Check {
            name,
            passed: violation.is_none(),
            violation,
        }
    }
}

/// Per-identity verification outcome.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<Check>,
    /// Whether `S² = id`; only filled in for Hopf axiom reports.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antipode_squared_identity: Option<bool>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn is_zero_map<K>(m: &HashMap<K, Cyc>) -> bool {
    m.values().all(|c| c.is_zero())
}

fn check_associativity(h: &HopfData) -> Result<Option<String>> {
    let m = h.dim();
    let mut acc = vec![Cyc::zero(); m];
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                acc.iter_mut().for_each(|c| *c = Cyc::zero());
                for (p, c) in h.mult_basis(i, j) {
                    for (q, d) in h.mult_basis(*p, k) {
                        madd(&mut acc[*q], c, d)?;
                    }
                }
                for (p, c) in h.mult_basis(j, k) {
                    for (q, d) in h.mult_basis(i, *p) {
                        msub(&mut acc[*q], c, d)?;
                    }
                }
                if acc.iter().any(|c| !c.is_zero()) {
                    return Ok(Some(format!("(e{i} e{j}) e{k} != e{i} (e{j} e{k})")));
                }
            }
        }
    }
    Ok(None)
}

fn check_unit(h: &HopfData) -> Result<Option<String>> {
    for i in 0..h.dim() {
        let e = h.basis(i);
        if h.mul(&h.unit, &e)? != e || h.mul(&e, &h.unit)? != e {
            return Ok(Some(format!("1 e{i} != e{i} or e{i} 1 != e{i}")));
        }
    }
    Ok(None)
}

fn check_coassociativity(h: &HopfData) -> Result<Option<String>> {
    for i in 0..h.dim() {
        let mut acc: HashMap<(usize, usize, usize), Cyc> = HashMap::new();
        for (j, k, c) in h.comult_basis(i) {
            for (p, q, d) in h.comult_basis(*j) {
                madd(acc.entry((*p, *q, *k)).or_default(), c, d)?;
            }
            for (p, q, d) in h.comult_basis(*k) {
                msub(acc.entry((*j, *p, *q)).or_default(), c, d)?;
            }
        }
        if !is_zero_map(&acc) {
            return Ok(Some(format!("(Δ⊗id)Δ(e{i}) != (id⊗Δ)Δ(e{i})")));
        }
    }
    Ok(None)
}

fn check_counit(h: &HopfData) -> Result<Option<String>> {
    let m = h.dim();
    for i in 0..m {
        let mut left = vec![Cyc::zero(); m];
        let mut right = vec![Cyc::zero(); m];
        for (j, k, c) in h.comult_basis(i) {
            madd(&mut left[*k], c, &h.counit[*j])?;
            madd(&mut right[*j], c, &h.counit[*k])?;
        }
        let e = h.basis(i);
        if left != e || right != e {
            return Ok(Some(format!("(ε⊗id)Δ(e{i}) or (id⊗ε)Δ(e{i}) differs from e{i}")));
        }
    }
    Ok(None)
}

/// A small set of basis indices generating `H` as an algebra.
pub fn algebra_generators(h: &HopfData) -> Vec<usize> {
    let mut span = Span::new(h);
    let mut gens = Vec::new();
    for i in 0..h.dim() {
        if span.dim() == h.dim() {
            break;
        }
        if !span.contains(&h.basis(i)) {
            gens.push(i);
            span.add_generator(h, i).expect("closure arithmetic");
        }
    }
    gens
}

fn check_bialgebra(h: &HopfData) -> Result<Option<String>> {
    let m = h.dim();
    // Δ(1) = 1 ⊗ 1 and ε(1) = 1
    let one_one = h.tensor(&h.unit, &h.unit)?;
    if h.comult(&h.unit)? != one_one {
        return Ok(Some("Δ(1) != 1⊗1".into()));
    }
    if !h.counit_of(&h.unit)?.is_one() {
        return Ok(Some("ε(1) != 1".into()));
    }
    for i in 0..m {
        for j in 0..m {
            let mut acc = Cyc::zero();
            for (k, c) in h.mult_basis(i, j) {
                madd(&mut acc, c, &h.counit[*k])?;
            }
            let rhs = h.counit[i].try_mul(&h.counit[j])?;
            if acc != rhs {
                return Ok(Some(format!("ε(e{i} e{j}) != ε(e{i}) ε(e{j})")));
            }
        }
    }
    // Δ(g b) = Δ(g)Δ(b) for algebra generators g and all basis b implies
    // multiplicativity everywhere once associativity holds.
    for g in algebra_generators(h) {
        for b in 0..m {
            let lhs = h.comult(&h.mul(&h.basis(g), &h.basis(b))?)?;
            let rhs = h.mul2(h.comult_basis(g), h.comult_basis(b))?;
            if lhs != rhs {
                return Ok(Some(format!("Δ(e{g} e{b}) != Δ(e{g})Δ(e{b})")));
            }
        }
    }
    Ok(None)
}

fn check_antipode(h: &HopfData) -> Result<Option<String>> {
    let m = h.dim();
    for i in 0..m {
        let mut left = vec![Cyc::zero(); m];
        let mut right = vec![Cyc::zero(); m];
        for (j, k, c) in h.comult_basis(i) {
            for (p, s) in h.antipode_basis(*j) {
                let cs = c.try_mul(s)?;
                for (q, d) in h.mult_basis(*p, *k) {
                    madd(&mut left[*q], &cs, d)?;
                }
            }
            for (p, s) in h.antipode_basis(*k) {
                let cs = c.try_mul(s)?;
                for (q, d) in h.mult_basis(*j, *p) {
                    madd(&mut right[*q], &cs, d)?;
                }
            }
        }
        let target: Vec<Cyc> = h
            .unit
            .iter()
            .map(|u| u.try_mul(&h.counit[i]))
            .collect::<std::result::Result<_, _>>()?;
        if left != target || right != target {
            return Ok(Some(format!("m(S⊗id)Δ(e{i}) or m(id⊗S)Δ(e{i}) != ε(e{i})1")));
        }
    }
    Ok(None)
}

fn antipode_squared_identity(h: &HopfData) -> Result<bool> {
    for i in 0..h.dim() {
        let s = h.antipode_of(&h.basis(i))?;
        if h.antipode_of(&s)? != h.basis(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks associativity, unit, coassociativity, counit, bialgebra
/// compatibility and the antipode identities, and records whether `S² = id`.
pub fn verify_hopf_axioms(h: &HopfData) -> AxiomReport {
    let run = |f: fn(&HopfData) -> Result<Option<String>>| match f(h) {
        Ok(v) => v,
        Err(e) => Some(format!("arithmetic failure: {e}")),
    };
    let checks = vec![
        Check::from("associativity", run(check_associativity)),
        Check::from("unit", run(check_unit)),
        Check::from("coassociativity", run(check_coassociativity)),
        Check::from("counit", run(check_counit)),
        Check::from("bialgebra", run(check_bialgebra)),
        Check::from("antipode", run(check_antipode)),
    ];
    AxiomReport {
        checks,
        antipode_squared_identity: Some(antipode_squared_identity(h).unwrap_or(false)),
    }
}

// ---- linear algebra ----

/// Row-echelon basis of a subspace, each row carrying a linear tag.
struct Echelon<T> {
    rows: Vec<(usize, Vec<Cyc>, T)>,
}

trait Tag: Clone {
    fn sub_scaled(&mut self, c: &Cyc, other: &Self) -> std::result::Result<(), CycError>;
    fn scale(&mut self, c: &Cyc) -> std::result::Result<(), CycError>;
}

impl Tag for () {
    fn sub_scaled(&mut self, _: &Cyc, _: &Self) -> std::result::Result<(), CycError> {
        Ok(())
    }
    fn scale(&mut self, _: &Cyc) -> std::result::Result<(), CycError> {
        Ok(())
    }
}

impl Tag for Cyc {
    fn sub_scaled(&mut self, c: &Cyc, other: &Self) -> std::result::Result<(), CycError> {
        msub(self, c, other)
    }
    fn scale(&mut self, c: &Cyc) -> std::result::Result<(), CycError> {
        *self = self.try_mul(c)?;
        Ok(())
    }
}

impl Tag for Vec<Cyc> {
    fn sub_scaled(&mut self, c: &Cyc, other: &Self) -> std::result::Result<(), CycError> {
        if self.len() < other.len() {
            self.resize(other.len(), Cyc::zero());
        }
        for (a, b) in self.iter_mut().zip(other) {
            msub(a, c, b)?;
        }
        Ok(())
    }
    fn scale(&mut self, c: &Cyc) -> std::result::Result<(), CycError> {
        for a in self.iter_mut() {
            *a = a.try_mul(c)?;
        }
        Ok(())
    }
}

impl<T: Tag> Clone for Echelon<T> {
    fn clone(&self) -> Self {
        Echelon {
            rows: self.rows.clone(),
        }
    }
}

impl<T: Tag> Echelon<T> {
    fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    fn reduce(&self, v: &mut [Cyc], t: &mut T) -> std::result::Result<(), CycError> {
        for (p, row, tag) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let c = v[*p].clone();
            for (a, b) in v.iter_mut().zip(row) {
                msub(a, &c, b)?;
            }
            t.sub_scaled(&c, tag)?;
        }
        Ok(())
    }

    /// Inserts a reduced nonzero vector, returning its row index.
    fn insert_reduced(&mut self, mut v: Vec<Cyc>, mut t: T) -> std::result::Result<usize, CycError> {
        let p = v.iter().position(|c| !c.is_zero()).expect("nonzero vector");
        let inv = v[p].inv()?;
        for a in v.iter_mut() {
            *a = a.try_mul(&inv)?;
        }
        t.scale(&inv)?;
        self.rows.push((p, v, t));
        Ok(self.rows.len() - 1)
    }
}

/// The subalgebra generated by a growing list of basis elements.
struct Span {
    ech: Echelon<()>,
    gens: Vec<usize>,
}

impl Span {
    fn new(h: &HopfData) -> Self {
        let mut ech = Echelon::new();
        ech.insert_reduced(h.unit.clone(), ()).expect("unit is invertible");
        Span { ech, gens: Vec::new() }
    }

    fn dim(&self) -> usize {
        self.ech.rows.len()
    }

    fn contains(&self, v: &[Cyc]) -> bool {
        let mut w = v.to_vec();
        self.ech.reduce(&mut w, &mut ()).expect("reduction arithmetic");
        w.iter().all(|c| c.is_zero())
    }

    fn add_generator(&mut self, h: &HopfData, g: usize) -> Result<()> {
        self.gens.push(g);
        let t = self.gens.len() - 1;
        let mut queue: Vec<(usize, usize)> = (0..self.ech.rows.len()).map(|r| (r, t)).collect();
        while let Some((r, k)) = queue.pop() {
            let mut w = h.mul(&self.ech.rows[r].1, &h.basis(self.gens[k]))?;
            self.ech.reduce(&mut w, &mut ())?;
            if w.iter().any(|c| !c.is_zero()) {
                let new = self.ech.insert_reduced(w, ())?;
                queue.extend((0..self.gens.len()).map(|k| (new, k)));
            }
        }
        Ok(())
    }
}

/// Minimal polynomial of `a` (monic, coefficients from low to high degree).
pub fn minimal_polynomial(h: &HopfData, a: &[Cyc]) -> Result<Vec<Cyc>> {
    let mut ech: Echelon<Vec<Cyc>> = Echelon::new();
    let mut power = h.unit.clone();
    for k in 0..=h.dim() {
        let mut tag = vec![Cyc::zero(); k + 1];
        tag[k] = Cyc::one();
        let mut v = power.clone();
        ech.reduce(&mut v, &mut tag)?;
        if v.iter().all(|c| c.is_zero()) {
            // tag now holds a polynomial vanishing at a, monic in degree k
            tag.resize(k + 1, Cyc::zero());
            return Ok(tag);
        }
        ech.insert_reduced(v, tag)?;
        power = h.mul(&power, a)?;
    }
    Err(HopfError::Malformed("no minimal polynomial found".into()))
}

fn poly_eval(p: &[Cyc], x: &Cyc) -> std::result::Result<Cyc, CycError> {
    let mut acc = Cyc::zero();
    for c in p.iter().rev() {
        acc = acc.try_mul(x)?.try_add(c)?;
    }
    Ok(acc)
}

/// Divides by `(x - r)`, assuming `r` is a root.
fn deflate(p: &[Cyc], r: &Cyc) -> std::result::Result<Vec<Cyc>, CycError> {
    let n = p.len() - 1;
    let mut q = vec![Cyc::zero(); n];
    let mut carry = Cyc::zero();
    for k in (0..n).rev() {
        carry = p[k + 1].try_add(&carry.try_mul(r)?)?;
        q[k] = carry.clone();
    }
    Ok(q)
}

fn divisors(n: i64) -> Vec<i64> {
    let n = n.abs();
    (1..=n).filter(|d| n % d == 0).collect()
}

fn rational_root_candidates(p: &[Cyc]) -> Vec<Cyc> {
    let Some(qs) = p.iter().map(|c| c.to_rational()).collect::<Option<Vec<Rational>>>() else {
        return Vec::new();
    };
    let lcm = qs.iter().fold(1i64, |a, q| a.lcm(q.denom()));
    let ints: Vec<i64> = qs
        .iter()
        .map(|q| (q * Rational::from_integer(lcm)).to_integer())
        .collect();
    let Some(low) = ints.iter().position(|c| *c != 0) else {
        return Vec::new();
    };
    let (a0, ad) = (ints[low], *ints.last().unwrap());
    if a0.abs() > 1_000_000 || ad.abs() > 1_000_000 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for num in divisors(a0) {
        for den in divisors(ad) {
            let q = Rational::new(num, den);
            for s in [q, -q] {
                out.push(Cyc::from_rational(s));
            }
        }
    }
    out
}

fn root_candidates(p: &[Cyc]) -> Vec<Cyc> {
    let mut out = vec![Cyc::zero()];
    for n in 1..=MAX_CONDUCTOR as i64 {
        for k in 0..n {
            if k.gcd(&n) == 1 {
                out.push(Cyc::root_of_unity(n, k).expect("order within range"));
            }
        }
    }
    out.extend(rational_root_candidates(p));
    let mut seen = BTreeSet::new();
    out.retain(|c| seen.insert(c.clone()));
    out
}

/// A square root of `d` of the form `r·ζ` with `r` rational, if one exists.
fn sqrt_cyc(d: &Cyc) -> Result<Option<Cyc>> {
    if d.is_zero() {
        return Ok(Some(Cyc::zero()));
    }
    for n in 1..=MAX_CONDUCTOR as i64 {
        for k in 0..n {
            if k.gcd(&n) != 1 {
                continue;
            }
            let z = Cyc::root_of_unity(n, k)?;
            let Some(q) = d.try_div(&z)?.to_rational() else {
                continue;
            };
            let Some(r) = rational_sqrt(q.abs()) else {
                continue;
            };
            // √(q ζ_n^k) = √|q| · ζ_{2n}^{k} (times ζ_4 when q < 0)
            let Ok(mut s) = Cyc::root_of_unity(2 * n, k) else {
                continue;
            };
            if q < Rational::zero() {
                s = s.try_mul(&Cyc::root_of_unity(4, 1)?)?;
            }
            let s = s.try_mul(&Cyc::from_rational(r))?;
            if &s.try_mul(&s)? == d {
                return Ok(Some(s));
            }
        }
    }
    Ok(None)
}

fn rational_sqrt(q: Rational) -> Option<Rational> {
    let isqrt = |n: i64| -> Option<i64> {
        let r = (n as f64).sqrt().round() as i64;
        (r - 1..=r + 1).find(|&s| s >= 0 && s * s == n)
    };
    Some(Rational::new(isqrt(*q.numer())?, isqrt(*q.denom())?))
}

/// Distinct roots of `p` if it splits completely over the working field.
///
/// Roots of unity, zero and rational roots are tried first; a leftover
/// factor of degree at most two is solved directly.
pub fn split_roots(p: &[Cyc]) -> Result<Option<Vec<Cyc>>> {
    let mut rest = p.to_vec();
    let mut roots = Vec::new();
    let push = |roots: &mut Vec<Cyc>, r: Cyc| {
        if !roots.contains(&r) {
            roots.push(r);
        }
    };
    for r in root_candidates(p) {
        if rest.len() == 1 {
            break;
        }
        let mut hit = false;
        while rest.len() > 1 && poly_eval(&rest, &r)?.is_zero() {
            rest = deflate(&rest, &r)?;
            hit = true;
        }
        if hit {
            push(&mut roots, r);
        }
    }
    match rest.len() {
        1 => {}
        2 => push(&mut roots, (-&rest[0]).try_div(&rest[1])?),
        3 => {
            let (c0, c1, c2) = (&rest[0], &rest[1], &rest[2]);
            let disc = c1
                .try_mul(c1)?
                .try_sub(&Cyc::from_integer(4).try_mul(c0)?.try_mul(c2)?)?;
            let Some(s) = sqrt_cyc(&disc)? else {
                return Ok(None);
            };
            let two_a = Cyc::from_integer(2).try_mul(c2)?;
            for sign in [Cyc::one(), -Cyc::one()] {
                let r = (-c1).try_add(&sign.try_mul(&s)?)?.try_div(&two_a)?;
                push(&mut roots, r);
            }
        }
        _ => return Ok(None),
    }
    Ok(Some(roots))
}

// ---- characters and group-likes ----

/// A multiplicative functional `η: H → k`, given by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CharacterFunctional {
    pub values: Vec<Cyc>,
}

impl CharacterFunctional {
    pub fn eval(&self, v: &[Cyc]) -> Result<Cyc> {
        let mut acc = Cyc::zero();
        for (a, b) in v.iter().zip(&self.values) {
            madd(&mut acc, a, b)?;
        }
        Ok(acc)
    }

    /// The counit viewed as a character.
    pub fn counit(h: &HopfData) -> Self {
        CharacterFunctional {
            values: h.counit.clone(),
        }
    }

    /// Convolution product `(η ⊗ η')Δ`.
    pub fn convolve(&self, other: &Self, h: &HopfData) -> Result<Self> {
        let mut values = Vec::with_capacity(h.dim());
        for i in 0..h.dim() {
            let mut acc = Cyc::zero();
            for (j, k, c) in h.comult_basis(i) {
                madd(&mut acc, c, &self.values[*j].try_mul(&other.values[*k])?)?;
            }
            values.push(acc);
        }
        Ok(CharacterFunctional { values })
    }
}

struct CharSearch<'a> {
    h: &'a HopfData,
    gens: &'a [usize],
    candidates: Vec<Vec<Cyc>>,
    found: Vec<CharacterFunctional>,
}

/// Echelon of the generated subalgebra with character values as tags.
#[derive(Clone)]
struct CharState {
    ech: Echelon<Cyc>,
    values: Vec<Cyc>,
}

impl CharSearch<'_> {
    /// Adds generator `t` with value `v`; false on an inconsistency.
    fn extend(&self, st: &mut CharState, t: usize, v: Cyc) -> Result<bool> {
        st.values.push(v);
        let mut queue: Vec<(usize, usize)> = (0..st.ech.rows.len()).map(|r| (r, t)).collect();
        while let Some((r, k)) = queue.pop() {
            let (_, row, val) = &st.ech.rows[r];
            let mut w = self.h.mul(row, &self.h.basis(self.gens[k]))?;
            let mut tag = val.try_mul(&st.values[k])?;
            st.ech.reduce(&mut w, &mut tag)?;
            if w.iter().all(|c| c.is_zero()) {
                if !tag.is_zero() {
                    return Ok(false);
                }
            } else {
                let new = st.ech.insert_reduced(w, tag)?;
                queue.extend((0..=t).map(|k| (new, k)));
            }
        }
        Ok(true)
    }

    fn finish(&self, st: &CharState) -> Result<Option<CharacterFunctional>> {
        let h = self.h;
        let m = h.dim();
        let mut values = Vec::with_capacity(m);
        for i in 0..m {
            let mut v = h.basis(i);
            let mut tag = Cyc::zero();
            st.ech.reduce(&mut v, &mut tag)?;
            values.push(-tag);
        }
        let eta = CharacterFunctional { values };
        if !eta.eval(&h.unit)?.is_one() {
            return Ok(None);
        }
        for i in 0..m {
            for j in 0..m {
                let mut acc = Cyc::zero();
                for (k, c) in h.mult_basis(i, j) {
                    madd(&mut acc, c, &eta.values[*k])?;
                }
                if acc != eta.values[i].try_mul(&eta.values[j])? {
                    return Ok(None);
                }
            }
        }
        Ok(Some(eta))
    }

    fn dfs(&mut self, st: CharState, t: usize) -> Result<()> {
        if t == self.gens.len() {
            if let Some(eta) = self.finish(&st)? {
                self.found.push(eta);
            }
            return Ok(());
        }
        for v in self.candidates[t].clone() {
            let mut next = st.clone();
            if self.extend(&mut next, t, v)? {
                self.dfs(next, t + 1)?;
            }
        }
        Ok(())
    }
}

/// All characters of `H`, found by assigning minimal-polynomial roots to the
/// given algebra generators and extending multiplicatively.
pub fn algebra_characters(h: &HopfData, generators: &[usize]) -> Result<Vec<CharacterFunctional>> {
    let m = h.dim();
    if let Some(&g) = generators.iter().find(|&&g| g >= m) {
        return Err(HopfError::Malformed(format!("generator index {g} out of range")));
    }
    let mut span = Span::new(h);
    for &g in generators {
        span.add_generator(h, g)?;
    }
    if span.dim() != m {
        return Err(HopfError::GeneratorsDoNotSpan {
            span: span.dim(),
            dim: m,
        });
    }
    let mut candidates = Vec::new();
    for &g in generators {
        let p = minimal_polynomial(h, &h.basis(g))?;
        match split_roots(&p)? {
            Some(r) => candidates.push(r),
            None => {
                return Err(HopfError::CandidateOutsideField(format!(
                    "generator {} has minimal polynomial {}",
                    h.labels[g],
                    format_poly(&p)
                )))
            }
        }
    }
    let mut ech = Echelon::new();
    ech.insert_reduced(h.unit.clone(), Cyc::one())?;
    let mut search = CharSearch {
        h,
        gens: generators,
        candidates,
        found: Vec::new(),
    };
    search.dfs(
        CharState {
            ech,
            values: Vec::new(),
        },
        0,
    )?;
    let mut found = search.found;
    found.sort();
    found.dedup();
    Ok(found)
}

/// Generators whose minimal polynomials split over the candidate roots.
pub fn splitting_generators(h: &HopfData) -> Result<Vec<usize>> {
    let mut span = Span::new(h);
    let mut gens = Vec::new();
    let mut skipped = Vec::new();
    for i in 0..h.dim() {
        if span.dim() == h.dim() {
            break;
        }
        if span.contains(&h.basis(i)) {
            continue;
        }
        let p = minimal_polynomial(h, &h.basis(i))?;
        if split_roots(&p)?.is_none() {
            skipped.push(h.labels[i].clone());
            continue;
        }
        gens.push(i);
        span.add_generator(h, i)?;
    }
    if span.dim() != h.dim() {
        return Err(HopfError::CandidateOutsideField(format!(
            "no splitting generating set; non-splitting basis elements: {}",
            skipped.join(", ")
        )));
    }
    Ok(gens)
}

fn format_poly(p: &[Cyc]) -> String {
    let terms: Vec<String> = p
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| match k {
            0 => format!("({c})"),
            1 => format!("({c})*t"),
            _ => format!("({c})*t^{k}"),
        })
        .collect();
    terms.join(" + ")
}

/// Group-like elements of `H`, as characters of the dual pulled back to `H`.
pub fn group_like_elements(h: &HopfData) -> Result<Vec<Vec<Cyc>>> {
    let d = dual(h);
    let gens = splitting_generators(&d)?;
    let chars = algebra_characters(&d, &gens)?;
    let mut out = Vec::new();
    for eta in chars {
        let v = eta.values;
        if h.comult(&v)? == h.tensor(&v, &v)? && h.counit_of(&v)?.is_one() {
            out.push(v);
        }
    }
    out.sort();
    Ok(out)
}

/// Basis elements `e_i` with `Δ(e_i) = e_i ⊗ e_i`.
pub fn group_like_basis_elements(h: &HopfData) -> Vec<usize> {
    (0..h.dim())
        .filter(|&i| {
            let d = h.comult_basis(i);
            d.len() == 1 && d[0].0 == i && d[0].1 == i && d[0].2.is_one()
        })
        .collect()
}

/// Group-likes commuting with every basis element.
pub fn central_group_likes(h: &HopfData) -> Result<Vec<Vec<Cyc>>> {
    let mut out = Vec::new();
    for g in group_like_elements(h)? {
        let mut central = true;
        for i in 0..h.dim() {
            let e = h.basis(i);
            if h.mul(&g, &e)? != h.mul(&e, &g)? {
                central = false;
                break;
            }
        }
        if central {
            out.push(g);
        }
    }
    Ok(out)
}

/// `η ⇀ v = Σ η(v₂) v₁`.
pub fn hit_left(eta: &CharacterFunctional, v: &[Cyc], h: &HopfData) -> Result<Vec<Cyc>> {
    let mut out = vec![Cyc::zero(); h.dim()];
    for (j, k, c) in h.comult(v)? {
        madd(&mut out[j], &c, &eta.values[k])?;
    }
    Ok(out)
}

/// `v ↼ η = Σ η(v₁) v₂`.
pub fn hit_right(v: &[Cyc], eta: &CharacterFunctional, h: &HopfData) -> Result<Vec<Cyc>> {
    let mut out = vec![Cyc::zero(); h.dim()];
    for (j, k, c) in h.comult(v)? {
        madd(&mut out[k], &c, &eta.values[j])?;
    }
    Ok(out)
}

/// A one-dimensional Yetter–Drinfeld module `V_{g,η}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct YdPair {
    pub group_like: Vec<Cyc>,
    pub group_like_label: String,
    pub character: CharacterFunctional,
}

/// The pairs `(g, η)` with `(η ⇀ h)g = g(h ↼ η)` and the group they form.
#[derive(Debug, Clone, Serialize)]
pub struct YdPairReport {
    pub pairs: Vec<YdPair>,
    pub group_likes: Vec<Vec<Cyc>>,
    pub characters: Vec<CharacterFunctional>,
    /// Multiplication table of the pairs under componentwise product.
    #[serde(skip)]
    pub group: FiniteGroup,
    pub abelian: bool,
    pub invariant_factors: Option<Vec<u64>>,
    pub exponent: u64,
}

impl YdPairReport {
    pub fn order(&self) -> usize {
        self.pairs.len()
    }

    /// Position of the pair with the given group-like and character.
    pub fn position(&self, g: &[Cyc], eta: &CharacterFunctional) -> Option<usize> {
        self.pairs.iter().position(|p| p.group_like == g && &p.character == eta)
    }
}

pub fn yd_one_dim_pairs(h: &HopfData) -> Result<YdPairReport> {
    let group_likes = group_like_elements(h)?;
    let gens = splitting_generators(h)?;
    let characters = algebra_characters(h, &gens)?;
    let mut pairs = Vec::new();
    for g in &group_likes {
        for eta in &characters {
            let mut ok = true;
            for i in 0..h.dim() {
                let e = h.basis(i);
                let lhs = h.mul(&hit_left(eta, &e, h)?, g)?;
                let rhs = h.mul(g, &hit_right(&e, eta, h)?)?;
                if lhs != rhs {
                    ok = false;
                    break;
                }
            }
            if ok {
                pairs.push(YdPair {
                    group_like: g.clone(),
                    group_like_label: h.format_element(g),
                    character: eta.clone(),
                });
            }
        }
    }
    let index: HashMap<(Vec<Cyc>, Vec<Cyc>), usize> = pairs
        .iter()
        .enumerate()
        .map(|(i, p)| ((p.group_like.clone(), p.character.values.clone()), i))
        .collect();
    let n = pairs.len();
    let mut table = Vec::with_capacity(n * n);
    for a in &pairs {
        for b in &pairs {
            let g = h.mul(&a.group_like, &b.group_like)?;
            let eta = a.character.convolve(&b.character, h)?;
            let idx = index
                .get(&(g, eta.values))
                .ok_or_else(|| HopfError::Malformed("pairs are not closed under products".into()))?;
            table.push(*idx);
        }
    }
    let group = FiniteGroup::from_table("yd-pairs", n, table)?;
    let abelian = group.is_abelian();
    let invariant_factors = if abelian {
        let all: Vec<usize> = group.elements().collect();
        Some(crate::groups::AbelianStructure::of_subgroup(&group, &all)?.invariant_factors)
    } else {
        None
    };
    let exponent = group.exponent();
    Ok(YdPairReport {
        pairs,
        group_likes,
        characters,
        group,
        abelian,
        invariant_factors,
        exponent,
    })
}

/// Algebra type of the Drinfeld double `D(G)`: one block of size
/// `[G : C_G(g)] · deg ρ` per class representative `g` and irreducible `ρ` of `C_G(g)`.
pub fn drinfeld_double_group_type(g: &FiniteGroup) -> Result<TypeSignature> {
    let mut counts: std::collections::BTreeMap<u64, u64> = std::collections::BTreeMap::new();
    for class in g.conjugacy_classes() {
        let c = g.centralizer(class[0]);
        let cg = g.subgroup_as_group(&c)?;
        for d in cg.irreducible_degrees()? {
            *counts.entry(class.len() as u64 * d).or_default() += 1;
        }
    }
    let ones = counts.remove(&1).unwrap_or(0);
    let entries: Vec<(u64, u64)> = counts.into_iter().collect();
    Ok(TypeSignature::new(ones, &entries)?)
}

// ---- twists ----

/// An invertible element `φ ∈ H ⊗ H` with its inverse, stored densely
/// (`value[i*m + j]` is the coefficient of `e_i ⊗ e_j`).
#[derive(Debug, Clone, PartialEq)]
pub struct TwistElement {
    pub dim: usize,
    pub value: Vec<Cyc>,
    pub inverse: Vec<Cyc>,
}

impl TwistElement {
    pub fn new(dim: usize, value: Vec<Cyc>, inverse: Vec<Cyc>) -> Result<Self> {
        if value.len() != dim * dim || inverse.len() != dim * dim {
            return Err(HopfError::Malformed("twist matrices must be dim × dim".into()));
        }
        Ok(TwistElement { dim, value, inverse })
    }

    /// `1 ⊗ 1`.
    pub fn trivial(h: &HopfData) -> Self {
        let m = h.dim();
        let mut value = vec![Cyc::zero(); m * m];
        for (i, a) in sparse(&h.unit) {
            for (j, b) in sparse(&h.unit) {
                value[i * m + j] = &a * &b;
            }
        }
        TwistElement {
            dim: m,
            inverse: value.clone(),
            value,
        }
    }

    pub fn value_sparse(&self) -> Tensor2 {
        to_sparse2(&self.value, self.dim)
    }

    pub fn inverse_sparse(&self) -> Tensor2 {
        to_sparse2(&self.inverse, self.dim)
    }
}

fn to_sparse2(v: &[Cyc], m: usize) -> Tensor2 {
    sparse(v).into_iter().map(|(p, c)| (p / m, p % m, c)).collect()
}

impl Serialize for TwistElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = |t: Tensor2| t.into_iter().map(|(i, j, c)| json!([i, j, c])).collect::<Vec<_>>();
        json!({
            "dim": self.dim,
            "value": rows(self.value_sparse()),
            "inverse": rows(self.inverse_sparse()),
        })
        .serialize(s)
    }
}

/// `δ_x = (1/|A|) Σ_a x(a) a` for every `x ∈ Â`, as vectors in `kG`, in
/// mixed-radix order of the dual coordinates.
pub fn dual_idempotents(g: &FiniteGroup, basis: &AbelianBasis) -> Result<Vec<Vec<Cyc>>> {
    let orders = basis.orders().to_vec();
    let size = Cyc::from_frac(1, basis.elements.len() as i64);
    mixed_radix(&orders)
        .into_iter()
        .map(|x| {
            let mut v = vec![Cyc::zero(); g.order()];
            for (a, coords) in basis.elements.iter().zip(&basis.coords) {
                v[*a] = dual_pairing(&orders, &x, coords)?.try_mul(&size)?;
            }
            Ok(v)
        })
        .collect()
}

fn abelian_basis_of(g: &FiniteGroup, a: &[usize]) -> Result<AbelianBasis> {
    if !g.is_subgroup(a) {
        return Err(GroupError::NotAbelianSubgroup.into());
    }
    let sub = g.subgroup_as_group(a)?;
    if !sub.is_abelian() {
        return Err(GroupError::NotAbelianSubgroup.into());
    }
    Ok(AbelianBasis::new(g, a)?)
}

/// `φ = Σ ω(x, y) δ_x ⊗ δ_y` for a table `ω` on `Â × Â` (mixed-radix indices).
pub fn twist_from_table(g: &FiniteGroup, a: &[usize], omega: &[Vec<Cyc>]) -> Result<TwistElement> {
    let m = g.order();
    if m > MAX_TWIST_DIM {
        return Err(HopfError::TooLarge(m));
    }
    let basis = abelian_basis_of(g, a)?;
    let deltas = dual_idempotents(g, &basis)?;
    let n = deltas.len();
    if omega.len() != n || omega.iter().any(|r| r.len() != n) {
        return Err(HopfError::Malformed(format!("cocycle table must be {n} × {n}")));
    }
    let mut value = vec![Cyc::zero(); m * m];
    let mut inverse = vec![Cyc::zero(); m * m];
    for x in 0..n {
        for y in 0..n {
            let w = &omega[x][y];
            let winv = w.inv()?;
            for (i, a) in sparse(&deltas[x]) {
                for (j, b) in sparse(&deltas[y]) {
                    let ab = a.try_mul(&b)?;
                    madd(&mut value[i * m + j], w, &ab)?;
                    madd(&mut inverse[i * m + j], &winv, &ab)?;
                }
            }
        }
    }
    TwistElement::new(m, value, inverse)
}

/// The twist lifted from `A` whose cocycle is `ω(x, y) = ∏_{i<j} B(e_i, e_j)^{x_i y_j}`.
pub fn build_lifted_twist(g: &FiniteGroup, a: &[usize], b: &AltBicharacter) -> Result<TwistElement> {
    let basis = abelian_basis_of(g, a)?;
    if basis.orders() != b.orders.as_slice() {
        return Err(GroupError::InvalidBicharacter(format!(
            "bicharacter is given on orders {:?} but the subgroup has basis orders {:?}",
            b.orders,
            basis.orders()
        ))
        .into());
    }
    let duals = mixed_radix(&b.orders);
    let k = b.orders.len();
    let mut omega = Vec::with_capacity(duals.len());
    for x in &duals {
        let mut row = Vec::with_capacity(duals.len());
        for y in &duals {
            let mut w = Cyc::one();
            for i in 0..k {
                for j in i + 1..k {
                    let e = x[i] * y[j];
                    if e != 0 {
                        w = w.try_mul(&b.values[i][j].pow(e as i64)?)?;
                    }
                }
            }
            row.push(w);
        }
        omega.push(row);
    }
    twist_from_table(g, a, &omega)
}

type Tensor3 = HashMap<(usize, usize, usize), Cyc>;

fn mul3(h: &HopfData, x: &Tensor3, y: &Tensor3, sign: &Cyc, acc: &mut Tensor3) -> Result<()> {
    for ((a1, a2, a3), c) in x {
        if c.is_zero() {
            continue;
        }
        for ((b1, b2, b3), d) in y {
            if d.is_zero() {
                continue;
            }
            let cd = c.try_mul(d)?.try_mul(sign)?;
            for (p, u) in h.mult_basis(*a1, *b1) {
                let cdu = cd.try_mul(u)?;
                for (q, v) in h.mult_basis(*a2, *b2) {
                    let cduv = cdu.try_mul(v)?;
                    for (r, w) in h.mult_basis(*a3, *b3) {
                        madd(acc.entry((*p, *q, *r)).or_default(), &cduv, w)?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Checks invertibility, counit normalization and the 2-cocycle identity
/// `(φ ⊗ 1)(Δ ⊗ id)(φ) = (1 ⊗ φ)(id ⊗ Δ)(φ)`.
pub fn verify_twist(h: &HopfData, phi: &TwistElement) -> AxiomReport {
    let run = |f: &dyn Fn() -> Result<Option<String>>| match f() {
        Ok(v) => v,
        Err(e) => Some(format!("arithmetic failure: {e}")),
    };
    if phi.dim != h.dim() {
        return AxiomReport {
            checks: vec![Check::from(
                "shape",
                Some("twist dimension differs from the algebra".into()),
            )],
            antipode_squared_identity: None,
        };
    }
    let value = phi.value_sparse();
    let inverse = phi.inverse_sparse();
    let invertibility = run(&|| {
        let one = h.tensor(&h.unit, &h.unit)?;
        if h.mul2(&value, &inverse)? != one || h.mul2(&inverse, &value)? != one {
            return Ok(Some("φ φ⁻¹ or φ⁻¹ φ differs from 1⊗1".into()));
        }
        Ok(None)
    });
    let normalization = run(&|| {
        let m = h.dim();
        let mut left = vec![Cyc::zero(); m];
        let mut right = vec![Cyc::zero(); m];
        for (i, j, c) in &value {
            madd(&mut left[*j], c, &h.counit[*i])?;
            madd(&mut right[*i], c, &h.counit[*j])?;
        }
        if left != h.unit || right != h.unit {
            return Ok(Some("(ε⊗id)φ or (id⊗ε)φ differs from 1".into()));
        }
        Ok(None)
    });
    let cocycle = run(&|| {
        let units = sparse(&h.unit);
        let mut phi1: Tensor3 = HashMap::new();
        let mut one_phi: Tensor3 = HashMap::new();
        let mut delta_id: Tensor3 = HashMap::new();
        let mut id_delta: Tensor3 = HashMap::new();
        for (i, j, c) in &value {
            for (u, e) in &units {
                madd(phi1.entry((*i, *j, *u)).or_default(), c, e)?;
                madd(one_phi.entry((*u, *i, *j)).or_default(), c, e)?;
            }
            for (p, q, d) in h.comult_basis(*i) {
                madd(delta_id.entry((*p, *q, *j)).or_default(), c, d)?;
            }
            for (p, q, d) in h.comult_basis(*j) {
                madd(id_delta.entry((*i, *p, *q)).or_default(), c, d)?;
            }
        }
        let mut acc: Tensor3 = HashMap::new();
        mul3(h, &phi1, &delta_id, &Cyc::one(), &mut acc)?;
        mul3(h, &one_phi, &id_delta, &-Cyc::one(), &mut acc)?;
        if !is_zero_map(&acc) {
            return Ok(Some("(φ⊗1)(Δ⊗id)(φ) != (1⊗φ)(id⊗Δ)(φ)".into()));
        }
        Ok(None)
    });
    AxiomReport {
        checks: vec![
            Check::from("invertibility", invertibility),
            Check::from("counit-normalization", normalization),
            Check::from("cocycle", cocycle),
        ],
        antipode_squared_identity: None,
    }
}

/// Two-sided inverse of an element, if it exists.
pub fn inverse_element(h: &HopfData, u: &[Cyc]) -> Result<Option<Vec<Cyc>>> {
    let m = h.dim();
    // columns of left multiplication by u
    let cols: Vec<Vec<Cyc>> = (0..m).map(|j| h.mul(u, &h.basis(j))).collect::<Result<_>>()?;
    // augmented rows [L_u | 1]
    let mut rows: Vec<Vec<Cyc>> = (0..m)
        .map(|i| {
            let mut r: Vec<Cyc> = (0..m).map(|j| cols[j][i].clone()).collect();
            r.push(h.unit[i].clone());
            r
        })
        .collect();
    for col in 0..m {
        let Some(piv) = (col..m).find(|&r| !rows[r][col].is_zero()) else {
            return Ok(None);
        };
        rows.swap(col, piv);
        let inv = rows[col][col].inv()?;
        for c in rows[col].iter_mut() {
            *c = c.try_mul(&inv)?;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (a, b) in row.iter_mut().zip(&pivot_row) {
                msub(a, &f, b)?;
            }
        }
    }
    let v: Vec<Cyc> = rows.iter().map(|r| r[m].clone()).collect();
    if h.mul(&v, u)? != h.unit {
        return Ok(None);
    }
    Ok(Some(v))
}

/// `H_φ`: comultiplication `φ Δ(·) φ⁻¹` and antipode `U S(·) U⁻¹` with
/// `U = Σ φ¹ S(φ²)`; multiplication, unit and counit are unchanged.
pub fn twist_hopf(h: &HopfData, phi: &TwistElement) -> Result<HopfData> {
    let m = h.dim();
    if m > MAX_TWIST_DIM {
        return Err(HopfError::TooLarge(m));
    }
    let report = verify_twist(h, phi);
    if let Some(fail) = report.first_failure() {
        return Err(HopfError::TwistInvalid(format!(
            "{}: {}",
            fail.name,
            fail.violation.clone().unwrap_or_default()
        )));
    }
    let value = phi.value_sparse();
    let inverse = phi.inverse_sparse();
    let mut comult = vec![Cyc::zero(); m * m * m];
    for i in 0..m {
        let left = h.mul2(&value, h.comult_basis(i))?;
        for (j, k, c) in h.mul2(&left, &inverse)? {
            comult[(i * m + j) * m + k] = c;
        }
    }
    let mut u = vec![Cyc::zero(); m];
    for (i, j, c) in &value {
        let mut term = h.basis(*i);
        term = h.mul(&term, &h.antipode_of(&h.basis(*j))?)?;
        for (a, b) in u.iter_mut().zip(&term) {
            madd(a, c, b)?;
        }
    }
    let u_inv = inverse_element(h, &u)?.ok_or_else(|| HopfError::TwistInvalid("U is not invertible".into()))?;
    let mut antipode = vec![Cyc::zero(); m * m];
    for i in 0..m {
        let s = h.antipode_of(&h.basis(i))?;
        let twisted = h.mul(&h.mul(&u, &s)?, &u_inv)?;
        antipode[i * m..(i + 1) * m].clone_from_slice(&twisted);
    }
    HopfData::new(
        h.labels.clone(),
        h.mult.clone(),
        h.unit.clone(),
        comult,
        h.counit.clone(),
        antipode,
    )
}

/// Group elements `g` with `(g ⊗ g)φ = φ(g ⊗ g)`, i.e. `Δ_φ(g) = g ⊗ g`.
pub fn surviving_group_likes(g: &FiniteGroup, phi: &TwistElement) -> Result<Vec<usize>> {
    let h = from_group(g);
    let report = verify_twist(&h, phi);
    if let Some(fail) = report.first_failure() {
        return Err(HopfError::TwistInvalid(fail.name.to_string()));
    }
    let value = phi.value_sparse();
    let mut out = Vec::new();
    for x in g.elements() {
        let gg = vec![(x, x, Cyc::one())];
        if h.mul2(&gg, &value)? == h.mul2(&value, &gg)? {
            out.push(x);
        }
    }
    Ok(out)
}

/// Whether `B(g·x, g·y) = B(x, y)` for every `g ∈ G`, with `G` acting on `Â`
/// contragrediently to conjugation on the normal abelian subgroup `A`.
pub fn cocommutativity_criterion(g: &FiniteGroup, a: &[usize], b: &AltBicharacter) -> Result<bool> {
    let basis = abelian_basis_of(g, a)?;
    if basis.orders() != b.orders.as_slice() {
        return Err(GroupError::InvalidBicharacter("bicharacter orders do not match the subgroup".into()).into());
    }
    let act = conjugation_action(g, &basis.elements)?;
    let dual_act = induced_dual_action(&basis, &act)?;
    for x in g.elements() {
        if !bichar_action_scalar(b, &dual_act, x)?.is_invariant() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{build_g12, build_g18, d3xd3_reflections, g12_gamma, g18_gamma};

    fn c(n: i64) -> Cyc {
        Cyc::from_integer(n)
    }

    fn i4() -> Cyc {
        Cyc::root_of_unity(4, 1).unwrap()
    }

    fn basis_set(h: &HopfData, labels: &[&str]) -> Vec<Vec<Cyc>> {
        let mut v: Vec<Vec<Cyc>> = labels.iter().map(|l| h.basis(h.index_of(l).unwrap())).collect();
        v.sort();
        v
    }

    #[test]
    fn group_algebras_pass_axioms() {
        for g in [
            FiniteGroup::cyclic(2),
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::quaternion(),
        ] {
            let h = from_group(&g);
            let r = verify_hopf_axioms(&h);
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.antipode_squared_identity, Some(true));
            assert!(verify_hopf_axioms(&dual(&h)).passed());
        }
        let z2 = from_group(&FiniteGroup::cyclic(2));
        assert_eq!(z2.dim(), 2);
        assert!(z2.is_commutative() && z2.is_cocommutative());
    }

    #[test]
    fn double_dual_is_identity() {
        for h in [from_group(&FiniteGroup::symmetric(3).unwrap()), build_h8()] {
            assert_eq!(dual(&dual(&h)), h);
        }
    }

    #[test]
    fn h8_structure() {
        let h = build_h8();
        let r = verify_hopf_axioms(&h);
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.antipode_squared_identity, Some(true));
        let z = h.basis(4);
        let z2 = h.mul(&z, &z).unwrap();
        let z4 = h.mul(&z2, &z2).unwrap();
        assert_eq!(z4, h.basis(0));
        let x = h.basis(1);
        assert_ne!(h.mul(&z, &x).unwrap(), h.mul(&x, &z).unwrap());
        assert_eq!(h.mul(&z, &x).unwrap(), h.mul(&h.basis(2), &z).unwrap());
        assert_eq!(group_like_basis_elements(&h), vec![0, 1, 2, 3]);
        assert!(!h.is_commutative() && !h.is_cocommutative());
    }

    #[test]
    fn broken_h8_fails_bialgebra() {
        let h = build_h8();
        let broken = h.with_comult(4, &[(4, 4, Cyc::one())]).unwrap();
        let r = verify_hopf_axioms(&broken);
        assert!(!r.get("bialgebra").unwrap().passed);
    }

    #[test]
    fn h8_characters() {
        let h = build_h8();
        let chars = algebra_characters(&h, &[1, 2, 4]).unwrap();
        assert_eq!(chars.len(), 4);
        for eta in &chars {
            let (x, y, z) = (&eta.values[1], &eta.values[2], &eta.values[4]);
            assert_eq!(x, y);
            if x.is_one() {
                assert!(z == &c(1) || z == &c(-1));
            } else {
                assert_eq!(x, &c(-1));
                assert!(z == &i4() || z == &-i4());
            }
        }
        let nontrivial_x: Vec<_> = chars.iter().filter(|e| e.values[1] == c(-1)).collect();
        assert_eq!(nontrivial_x.len(), 2);
        assert!(matches!(
            algebra_characters(&h, &[1, 2]),
            Err(HopfError::GeneratorsDoNotSpan { .. })
        ));
    }

    #[test]
    fn h8_group_likes_and_center() {
        let h = build_h8();
        assert_eq!(group_like_elements(&h).unwrap(), basis_set(&h, &["1", "x", "y", "xy"]));
        assert_eq!(central_group_likes(&h).unwrap(), basis_set(&h, &["1", "xy"]));
    }

    #[test]
    fn h8_hit_left_on_z() {
        let h = build_h8();
        let z = h.basis(4);
        for eta in algebra_characters(&h, &[1, 2, 4]).unwrap() {
            let got = hit_left(&eta, &z, &h).unwrap();
            // ½(1 + y + η(x)(1 − y)) η(z) z
            let ex = &eta.values[1];
            let half = Cyc::from_frac(1, 2);
            let mut factor = vec![Cyc::zero(); 8];
            factor[0] = &half * &(&c(1) + ex);
            factor[2] = &half * &(&c(1) - ex);
            let mut want = h.mul(&factor, &z).unwrap();
            for w in want.iter_mut() {
                *w = &*w * &eta.values[4];
            }
            assert_eq!(got, want);
            if ex == &c(-1) {
                let mut yz = h.basis(6);
                yz[6] = eta.values[4].clone();
                assert_eq!(got, yz);
            }
        }
    }

    #[test]
    fn hit_with_counit_is_identity() {
        for h in [build_h8(), from_group(&FiniteGroup::symmetric(3).unwrap())] {
            let eps = CharacterFunctional::counit(&h);
            for i in 0..h.dim() {
                let e = h.basis(i);
                assert_eq!(hit_left(&eps, &e, &h).unwrap(), e);
                assert_eq!(hit_right(&e, &eps, &h).unwrap(), e);
            }
        }
    }

    #[test]
    fn hit_on_group_algebra() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let h = from_group(&g);
        let gens = splitting_generators(&h).unwrap();
        for eta in algebra_characters(&h, &gens).unwrap() {
            for x in g.elements() {
                let mut want = h.basis(x);
                want[x] = eta.values[x].clone();
                assert_eq!(hit_left(&eta, &h.basis(x), &h).unwrap(), want);
            }
        }
    }

    #[test]
    fn character_counts() {
        let s3 = from_group(&FiniteGroup::symmetric(3).unwrap());
        let gens = splitting_generators(&s3).unwrap();
        assert_eq!(algebra_characters(&s3, &gens).unwrap().len(), 2);
        let dz2 = dual(&from_group(&FiniteGroup::cyclic(2)));
        let gens = splitting_generators(&dz2).unwrap();
        assert_eq!(algebra_characters(&dz2, &gens).unwrap().len(), 2);
    }

    #[test]
    fn group_likes_of_group_algebras_and_duals() {
        let g = FiniteGroup::symmetric(3).unwrap();
        let h = from_group(&g);
        let gl = group_like_elements(&h).unwrap();
        let mut want: Vec<Vec<Cyc>> = (0..6).map(|i| h.basis(i)).collect();
        want.sort();
        assert_eq!(gl, want);
        assert_eq!(group_like_elements(&dual(&h)).unwrap().len(), 2);
    }

    #[test]
    fn yd_pairs() {
        let h8 = yd_one_dim_pairs(&build_h8()).unwrap();
        assert_eq!(h8.order(), 8);
        assert_eq!(h8.invariant_factors, Some(vec![2, 2, 2]));
        let s3 = yd_one_dim_pairs(&from_group(&FiniteGroup::symmetric(3).unwrap())).unwrap();
        assert_eq!(s3.order(), 2);
        assert!(s3.pairs.iter().all(|p| p.group_like_label == "g0"));
        let z4 = yd_one_dim_pairs(&from_group(&FiniteGroup::cyclic(4))).unwrap();
        assert_eq!(z4.order(), 16);
    }

    #[test]
    fn double_types() {
        let t = |g: &FiniteGroup| drinfeld_double_group_type(g).unwrap().to_string();
        assert_eq!(t(&FiniteGroup::dihedral(4)), "1,8;2,14");
        assert_eq!(t(&FiniteGroup::quaternion()), "1,8;2,14");
        assert_eq!(t(&FiniteGroup::symmetric(3).unwrap()), "1,2;2,4;3,2");
        assert_eq!(t(&FiniteGroup::cyclic(2)), "1,4");
    }

    fn nondegenerate(orders: Vec<u64>) -> AltBicharacter {
        AltBicharacter::from_upper_exponents(orders, &[(0, 1, 1)]).unwrap()
    }

    #[test]
    fn trivial_twist() {
        let g = build_g12();
        let h = from_group(&g);
        let b = AltBicharacter::trivial(vec![2, 2]);
        let phi = build_lifted_twist(&g, &g12_gamma(), &b).unwrap();
        assert_eq!(phi, TwistElement::trivial(&h));
        assert!(verify_twist(&h, &phi).passed());
        let t = twist_hopf(&h, &phi).unwrap();
        assert_eq!(t, h);
        assert!(t.is_cocommutative());
        assert_eq!(surviving_group_likes(&g, &phi).unwrap().len(), 12);
    }

    #[test]
    fn g12_twist() {
        let g = build_g12();
        let h = from_group(&g);
        let phi = build_lifted_twist(&g, &g12_gamma(), &nondegenerate(vec![2, 2])).unwrap();
        assert!(verify_twist(&h, &phi).passed());
        let t = twist_hopf(&h, &phi).unwrap();
        let r = verify_hopf_axioms(&t);
        assert!(r.passed(), "{r:?}");
        assert!(!t.is_commutative());
        assert!(!t.is_cocommutative());
        let surv = surviving_group_likes(&g, &phi).unwrap();
        assert_eq!(surv, g12_gamma());
    }

    #[test]
    fn non_bicharacter_table_breaks_cocycle() {
        let g = build_g12();
        let h = from_group(&g);
        let mut omega = vec![vec![c(1); 4]; 4];
        omega[1][1] = c(-1);
        let phi = twist_from_table(&g, &g12_gamma(), &omega).unwrap();
        let r = verify_twist(&h, &phi);
        assert!(!r.get("cocycle").unwrap().passed);
        assert!(matches!(twist_hopf(&h, &phi), Err(HopfError::TwistInvalid(_))));
    }

    #[test]
    fn criterion_examples() {
        let g = build_g18();
        let omega = AltBicharacter::from_upper_exponents(vec![3, 3], &[(0, 1, 1)]).unwrap();
        assert!(!cocommutativity_criterion(&g, &g18_gamma(), &omega).unwrap());
        assert!(cocommutativity_criterion(&g, &g18_gamma(), &AltBicharacter::trivial(vec![3, 3])).unwrap());
        let ab = FiniteGroup::product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4));
        let all: Vec<usize> = ab.elements().collect();
        assert!(cocommutativity_criterion(&ab, &all, &nondegenerate(vec![2, 4])).unwrap());
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let sub = s3.generated(&[1]);
        if !s3.is_normal(&sub) {
            let basis_orders = AbelianBasis::new(&s3, &sub).unwrap().orders().to_vec();
            assert!(matches!(
                cocommutativity_criterion(&s3, &sub, &AltBicharacter::trivial(basis_orders)),
                Err(HopfError::Group(GroupError::NotNormal))
            ));
        }
    }

    #[test]
    fn central_subgroup_survives_twist() {
        // D4 with the Klein subgroup containing the center
        let g = FiniteGroup::dihedral(4);
        let klein = g.generated(&[2, 4]);
        assert_eq!(klein.len(), 4);
        let orders = AbelianBasis::new(&g, &klein).unwrap().orders().to_vec();
        let phi = build_lifted_twist(&g, &klein, &nondegenerate(orders)).unwrap();
        let t = twist_hopf(&from_group(&g), &phi).unwrap();
        assert!(verify_hopf_axioms(&t).passed());
        let central = central_group_likes(&t).unwrap();
        for &z in g.center() {
            assert!(central.contains(&t.basis(z)));
        }
    }

    #[test]
    fn json_round_trip() {
        let h = build_h8();
        let v = serde_json::to_value(&h).unwrap();
        assert_eq!(v["dim"], 8);
        assert_eq!(HopfData::from_json(&v).unwrap(), h);
    }

    #[test]
    fn minimal_polynomial_of_z() {
        let h = build_h8();
        let p = minimal_polynomial(&h, &h.basis(4)).unwrap();
        assert_eq!(p, vec![c(-1), c(0), c(0), c(0), c(1)]);
        assert_eq!(split_roots(&p).unwrap().unwrap().len(), 4);
        assert!(split_roots(&[c(-2), c(0), c(1)]).unwrap().is_none());
    }

    #[test]
    fn d3xd3_twist() {
        let d3 = FiniteGroup::dihedral(3);
        let g = FiniteGroup::product(&d3, &d3);
        let a = d3xd3_reflections();
        let phi = build_lifted_twist(&g, &a, &nondegenerate(vec![2, 2])).unwrap();
        let h = from_group(&g);
        assert!(verify_twist(&h, &phi).passed());
        let t = twist_hopf(&h, &phi).unwrap();
        assert_eq!(t.dim(), 36);
        assert!(verify_hopf_axioms(&t).passed());
        assert!(!t.is_cocommutative());
        assert_eq!(surviving_group_likes(&g, &phi).unwrap().len(), 4);
    }
}
