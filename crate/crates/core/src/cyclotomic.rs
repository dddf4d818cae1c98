//! Exact arithmetic in cyclotomic fields ℚ(ζ_n).
//!
//! A [`CycNumber`] is stored in the power basis `1, ζ_n, …, ζ_n^{φ(n)-1}` of
//! ℚ(ζ_n), reduced modulo the cyclotomic polynomial Φ_n. The conductor is
//! always the smallest `n` (with `n ≢ 2 mod 4`) whose field contains the
//! value, so two numbers are equal exactly when their representations are.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::{smallvec, SmallVec};
use thiserror::Error;

/// Largest conductor the arithmetic accepts.
pub const MAX_CONDUCTOR: u32 = 24;

pub type Rational = Ratio<i64>;

type Coeffs = SmallVec<[Rational; 4]>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {0} exceeds the supported maximum {MAX_CONDUCTOR}")]
    ConductorTooLarge(u64),
    #[error("invalid root of unity order {0}")]
    InvalidOrder(i64),
    #[error("malformed number: {0}")]
    Parse(String),
    #[error("coefficient exceeds the 64-bit rational range")]
    Overflow,
}

#[inline]
pub(crate) fn radd(a: &Rational, b: &Rational) -> Rational {
    a.checked_add(b).expect("rational overflow in exact arithmetic")
}

#[inline]
pub(crate) fn rsub(a: &Rational, b: &Rational) -> Rational {
    a.checked_sub(b).expect("rational overflow in exact arithmetic")
}

#[inline]
pub(crate) fn rmul(a: &Rational, b: &Rational) -> Rational {
    a.checked_mul(b).expect("rational overflow in exact arithmetic")
}

pub fn euler_phi(n: u32) -> u32 {
    let mut m = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Per-conductor data: `powers[e]` is `x^e mod Φ_n` for `0 <= e < n`.
struct FieldTable {
    phi: usize,
    powers: Vec<Vec<i64>>,
}

/// Maps ℚ(ζ_m) into ℚ(ζ_n) and back, for `m | n`.
struct Embedding {
    /// `columns[k]` is the image of `ζ_m^k` in the basis of ℚ(ζ_n).
    columns: Vec<Vec<i64>>,
    /// Rows of the embedding matrix forming an invertible square block.
    pivot_rows: Vec<usize>,
    /// Inverse of that block.
    inverse: Vec<Vec<Rational>>,
}

struct Tables {
    fields: Vec<Option<FieldTable>>,
    embeddings: HashMap<(u32, u32), Embedding>,
}

fn is_valid_conductor(n: u32) -> bool {
    n >= 1 && n % 4 != 2
}

fn poly_divide_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // both little-endian, den monic
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let mut quot = vec![0i64; num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn cyclotomic_polys(max: u32) -> Vec<Vec<i64>> {
    let mut polys: Vec<Vec<i64>> = vec![Vec::new(); max as usize + 1];
    for n in 1..=max {
        let mut p = vec![0i64; n as usize + 1];
        p[0] = -1;
        p[n as usize] = 1;
        for d in 1..n {
            if n % d == 0 {
                p = poly_divide_exact(&p, &polys[d as usize]);
            }
        }
        polys[n as usize] = p;
    }
    polys
}

fn build_embedding(fields: &[Option<FieldTable>], n: u32, m: u32) -> Embedding {
    let big = fields[n as usize].as_ref().unwrap();
    let small = fields[m as usize].as_ref().unwrap();
    let step = (n / m) as usize;
    let columns: Vec<Vec<i64>> = (0..small.phi)
        .map(|k| big.powers[(k * step) % n as usize].clone())
        .collect();
    // Pick pivot rows by elimination on the transpose.
    let rows = big.phi;
    let cols = small.phi;
    let mut mat: Vec<Vec<Rational>> = (0..rows)
        .map(|r| (0..cols).map(|c| Rational::from_integer(columns[c][r])).collect())
        .collect();
    let mut pivot_rows = Vec::new();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for (r, row) in mat.iter_mut().enumerate() {
        let mut v = row.clone();
        for (b, &p) in basis.iter().zip(pivots.iter()) {
            if !v[p].is_zero() {
                let f = v[p];
                for c in 0..cols {
                    v[c] = rsub(&v[c], &rmul(&f, &b[c]));
                }
            }
        }
        if let Some(p) = (0..cols).find(|&c| !v[c].is_zero()) {
            let f = v[p].recip();
            for c in 0..cols {
                v[c] = rmul(&v[c], &f);
            }
            basis.push(v);
            pivots.push(p);
            pivot_rows.push(r);
            if pivot_rows.len() == cols {
                break;
            }
        }
    }
    let block: Vec<Vec<Rational>> = pivot_rows
        .iter()
        .map(|&r| (0..cols).map(|c| Rational::from_integer(columns[c][r])).collect())
        .collect();
    let inverse = invert_rational(&block).expect("embedding block is invertible");
    Embedding {
        columns,
        pivot_rows,
        inverse,
    }
}

pub(crate) fn invert_rational(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let f = a[col][col].recip();
        for c in 0..2 * n {
            a[col][c] = rmul(&a[col][c], &f);
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let g = a[r][col];
                for c in 0..2 * n {
                    let t = rmul(&g, &a[col][c]);
                    a[r][c] = rsub(&a[r][c], &t);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `m y = rhs` with arbitrary-precision intermediates.
fn solve_exact(m: &[Vec<Rational>], rhs: &[Rational]) -> Result<Option<Vec<Rational>>, CycError> {
    let big = |q: &Rational| BigRational::new(BigInt::from(*q.numer()), BigInt::from(*q.denom()));
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| row.iter().chain(std::iter::once(b)).map(big).collect())
        .collect();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(None);
        };
        a.swap(col, piv);
        let f = a[col][col].recip();
        for c in col..=n {
            a[col][c] = &a[col][c] * &f;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let g = a[r][col].clone();
                for c in col..=n {
                    let t = &g * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
    }
    a.iter()
        .map(|row| {
            let q = &row[n];
            match (q.numer().to_i64(), q.denom().to_i64()) {
                (Some(p), Some(d)) => Ok(Rational::new(p, d)),
                _ => Err(CycError::Overflow),
            }
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let polys = cyclotomic_polys(MAX_CONDUCTOR);
        let mut fields: Vec<Option<FieldTable>> = Vec::new();
        fields.push(None);
        for n in 1..=MAX_CONDUCTOR {
            if !is_valid_conductor(n) {
                fields.push(None);
                continue;
            }
            let phi = euler_phi(n) as usize;
            let modulus = &polys[n as usize];
            let mut powers = Vec::with_capacity(n as usize);
            let mut cur = vec![0i64; phi];
            cur[0] = 1;
            for _ in 0..n {
                powers.push(cur.clone());
                // multiply by x and reduce with the monic modulus
                let top = cur[phi - 1];
                let mut next = vec![0i64; phi];
                for i in (1..phi).rev() {
                    next[i] = cur[i - 1];
                }
                for i in 0..phi {
                    next[i] -= top * modulus[i];
                }
                cur = next;
            }
            fields.push(Some(FieldTable { phi, powers }));
        }
        let mut embeddings = HashMap::new();
        for n in 1..=MAX_CONDUCTOR {
            if !is_valid_conductor(n) {
                continue;
            }
            for m in 1..n {
                if n % m == 0 && is_valid_conductor(m) {
                    embeddings.insert((n, m), build_embedding(&fields, n, m));
                }
            }
        }
        Tables { fields, embeddings }
    })
}

fn field(n: u32) -> &'static FieldTable {
    tables().fields[n as usize].as_ref().expect("conductor table present")
}

/// Exact element of a cyclotomic field.
#[derive(Clone)]
pub struct CycNumber {
    conductor: u32,
    coeffs: Coeffs,
}

impl PartialEq for CycNumber {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for CycNumber {}

impl Hash for CycNumber {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.conductor.hash(state);
        for c in &self.coeffs {
            c.numer().hash(state);
            c.denom().hash(state);
        }
    }
}

impl PartialOrd for CycNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A total order used only to sort results deterministically.
impl Ord for CycNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.conductor
            .cmp(&other.conductor)
            .then_with(|| self.coeffs.iter().cmp(other.coeffs.iter()))
    }
}

fn lcm_checked(a: u32, b: u32) -> Result<u32, CycError> {
    let l = (a as u64).lcm(&(b as u64));
    if l > MAX_CONDUCTOR as u64 {
        return Err(CycError::ConductorTooLarge(l));
    }
    Ok(l as u32)
}

impl CycNumber {
    pub fn zero() -> Self {
        CycNumber {
            conductor: 1,
            coeffs: smallvec![Rational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    pub fn from_rational(q: Rational) -> Self {
        CycNumber {
            conductor: 1,
            coeffs: smallvec![q],
        }
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(num, den))
    }

    /// Builds a number from power-basis coefficients in ℚ(ζ_n), reducing as needed.
    pub fn from_coeffs(n: u32, coeffs: &[Rational]) -> Result<Self, CycError> {
        if n == 0 {
            return Err(CycError::InvalidOrder(0));
        }
        let mut acc = CycNumber::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = Self::root_of_unity(n as i64, k as i64)?.scale(c);
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }

    /// `ζ_n^k`.
    pub fn root_of_unity(n: i64, k: i64) -> Result<Self, CycError> {
        if n < 1 {
            return Err(CycError::InvalidOrder(n));
        }
        if n > MAX_CONDUCTOR as i64 {
            return Err(CycError::ConductorTooLarge(n as u64));
        }
        let n = n as u32;
        let k = k.rem_euclid(n as i64) as u32;
        if n % 4 == 2 {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m
            let m = n / 2;
            let e = (m.div_ceil(2) * k) % m;
            let base = Self::root_of_unity(m as i64, e as i64)?;
            return Ok(if k % 2 == 1 { -base } else { base });
        }
        let tab = field(n);
        let coeffs: Coeffs = tab.powers[k as usize]
            .iter()
            .map(|&c| Rational::from_integer(c))
            .collect();
        Ok(Self::normalize(n, coeffs))
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0])
    }

    /// Nonnegative integer value, if the number is one.
    pub fn to_u64(&self) -> Option<u64> {
        let q = self.to_rational()?;
        (q.is_integer() && !q.is_negative()).then(|| *q.numer() as u64)
    }

    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| rmul(c, q)).collect(),
        }
    }

    /// Coefficients of `self` rewritten in the basis of ℚ(ζ_n), `conductor | n`.
    fn lift(&self, n: u32) -> Coeffs {
        if self.conductor == n {
            return self.coeffs.clone();
        }
        let tab = field(n);
        let step = (n / self.conductor) as usize;
        let mut out: Coeffs = smallvec![Rational::zero(); tab.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &tab.powers[(k * step) % n as usize];
            for (o, &r) in out.iter_mut().zip(row.iter()) {
                if r != 0 {
                    *o = radd(o, &rmul(c, &Rational::from_integer(r)));
                }
            }
        }
        out
    }

    /// Canonical form: smallest conductor whose field holds the value.
    fn normalize(n: u32, coeffs: Coeffs) -> Self {
        if n == 1 {
            return CycNumber { conductor: 1, coeffs };
        }
        if coeffs.iter().all(|c| c.is_zero()) {
            return Self::zero();
        }
        let tabs = tables();
        for m in 1..n {
            if !n.is_multiple_of(m) || !is_valid_conductor(m) {
                continue;
            }
            let emb = &tabs.embeddings[&(n, m)];
            let small = emb.inverse.len();
            let cand: Coeffs = (0..small)
                .map(|i| {
                    let mut acc = Rational::zero();
                    for (j, &r) in emb.pivot_rows.iter().enumerate() {
                        if !coeffs[r].is_zero() && !emb.inverse[i][j].is_zero() {
                            acc = radd(&acc, &rmul(&emb.inverse[i][j], &coeffs[r]));
                        }
                    }
                    acc
                })
                .collect();
            let fits = (0..coeffs.len()).all(|row| {
                let mut acc = Rational::zero();
                for (k, c) in cand.iter().enumerate() {
                    let e = emb.columns[k][row];
                    if e != 0 && !c.is_zero() {
                        acc = radd(&acc, &rmul(c, &Rational::from_integer(e)));
                    }
                }
                acc == coeffs[row]
            });
            if fits {
                return CycNumber {
                    conductor: m,
                    coeffs: cand,
                };
            }
        }
        CycNumber { conductor: n, coeffs }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, CycError> {
        if self.conductor == 1 && other.conductor == 1 {
            return Ok(Self::from_rational(radd(&self.coeffs[0], &other.coeffs[0])));
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        let n = lcm_checked(self.conductor, other.conductor)?;
        let a = self.lift(n);
        let b = other.lift(n);
        let sum: Coeffs = a.iter().zip(b.iter()).map(|(x, y)| radd(x, y)).collect();
        Ok(Self::normalize(n, sum))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, CycError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, CycError> {
        if self.conductor == 1 {
            return Ok(other.scale(&self.coeffs[0]));
        }
        if other.conductor == 1 {
            return Ok(self.scale(&other.coeffs[0]));
        }
        let n = lcm_checked(self.conductor, other.conductor)?;
        let a = self.lift(n);
        let b = other.lift(n);
        let tab = field(n);
        let mut raw: Vec<Rational> = vec![Rational::zero(); 2 * tab.phi];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] = radd(&raw[i + j], &rmul(x, y));
                }
            }
        }
        let mut out: Coeffs = smallvec![Rational::zero(); tab.phi];
        for (e, c) in raw.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &tab.powers[e % n as usize];
            for (o, &r) in out.iter_mut().zip(row.iter()) {
                if r != 0 {
                    *o = radd(o, &rmul(c, &Rational::from_integer(r)));
                }
            }
        }
        Ok(Self::normalize(n, out))
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if self.conductor == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        // Solve self * y = 1 with the multiplication matrix of self.
        let n = self.conductor;
        let phi = field(n).phi;
        let mut cols: Vec<Coeffs> = Vec::with_capacity(phi);
        for k in 0..phi {
            let basis = Self::root_of_unity(n as i64, k as i64)?;
            cols.push(self.try_mul(&basis)?.lift(n));
        }
        let mat: Vec<Vec<Rational>> = (0..phi).map(|r| (0..phi).map(|c| cols[c][r]).collect()).collect();
        let mut rhs = vec![Rational::zero(); phi];
        rhs[0] = Rational::one();
        let coeffs = solve_exact(&mat, &rhs)?.ok_or(CycError::DivisionByZero)?;
        Ok(Self::normalize(n, coeffs.into_iter().collect()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, CycError> {
        self.try_mul(&other.inv()?)
    }

    /// Image under `ζ ↦ ζ^{-1}` (complex conjugation).
    pub fn conjugate(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor;
        let tab = field(n);
        let mut out: Coeffs = smallvec![Rational::zero(); tab.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let row = &tab.powers[(n as usize - k) % n as usize];
            for (o, &r) in out.iter_mut().zip(row.iter()) {
                if r != 0 {
                    *o = radd(o, &rmul(c, &Rational::from_integer(r)));
                }
            }
        }
        Self::normalize(n, out)
    }

    pub fn pow(&self, e: i64) -> Result<Self, CycError> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// If the number is a root of unity, its multiplicative order.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        let n = self.conductor;
        // every root of unity in ℚ(ζ_n) has order dividing 2n
        let bound = 2 * n;
        let mut acc = self.clone();
        for k in 1..=bound {
            if acc.is_one() {
                return Some(k);
            }
            acc = acc.try_mul(self).ok()?;
        }
        None
    }

    /// `k` with `self = ζ_n^k`, if any.
    pub fn log_root_of_unity(&self, n: u32) -> Option<u32> {
        (0..n).find(|&k| Self::root_of_unity(n as i64, k as i64).ok().as_ref() == Some(self))
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// GAP-style rendering, e.g. `1/2 - E(4)`.
impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conductor == 1 {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let root = match k {
                0 => String::new(),
                1 => format!("E({})", self.conductor),
                _ => format!("E({})^{}", self.conductor, k),
            };
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{root}")?;
            } else {
                write!(f, "{mag}*{root}")?;
            }
        }
        Ok(())
    }
}

impl Add for &CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        self.try_add(rhs).expect("cyclotomic addition")
    }
}

impl Add for CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: CycNumber) -> CycNumber {
        &self + &rhs
    }
}

impl Sub for &CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        self.try_sub(rhs).expect("cyclotomic subtraction")
    }
}

impl Sub for CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: CycNumber) -> CycNumber {
        &self - &rhs
    }
}

impl Mul for &CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        self.try_mul(rhs).expect("cyclotomic multiplication")
    }
}

impl Mul for CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: CycNumber) -> CycNumber {
        &self * &rhs
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        -&self
    }
}

impl Default for CycNumber {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycNumber {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for CycNumber {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, CycError> {
    let s = s.trim();
    let bad = || CycError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(CycError::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

#[derive(Serialize, Deserialize)]
struct CycJson {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycNumber {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CycJson {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(format_rational).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CycNumber {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = CycJson::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        if raw.conductor == 0 || raw.conductor > MAX_CONDUCTOR {
            return Err(serde::de::Error::custom(CycError::ConductorTooLarge(
                raw.conductor as u64,
            )));
        }
        let expected = if raw.conductor % 4 == 2 {
            euler_phi(raw.conductor / 2)
        } else {
            euler_phi(raw.conductor)
        };
        if coeffs.len() != expected as usize {
            return Err(serde::de::Error::custom(format!(
                "expected {expected} coefficients for conductor {}",
                raw.conductor
            )));
        }
        if raw.conductor % 4 == 2 {
            return CycNumber::from_coeffs(raw.conductor / 2, &coeffs).map_err(serde::de::Error::custom);
        }
        CycNumber::from_coeffs(raw.conductor, &coeffs).map_err(serde::de::Error::custom)
    }
}

/// `ζ_n` as a convenience.
pub fn zeta(n: i64) -> CycNumber {
    CycNumber::root_of_unity(n, 1).expect("supported conductor")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> CycNumber {
        CycNumber::from_frac(n, d)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&q(1, 2) + &q(1, 2), CycNumber::one());
        let z3 = zeta(3);
        assert_eq!(&z3 + &(&z3 * &z3), CycNumber::from_integer(-1));
        assert_eq!(&zeta(4) + &CycNumber::zero(), zeta(4));
    }

    #[test]
    fn mul_and_inverse_examples() {
        assert_eq!(&zeta(4) * &zeta(4), CycNumber::from_integer(-1));
        assert_eq!(CycNumber::from_integer(2).inv().unwrap(), q(1, 2));
        let z3 = zeta(3);
        assert_eq!(&z3 * &z3.pow(2).unwrap(), CycNumber::one());
        assert_eq!(CycNumber::zero().inv(), Err(CycError::DivisionByZero));
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(CycNumber::root_of_unity(1, 0).unwrap(), CycNumber::one());
        assert_eq!(CycNumber::root_of_unity(2, 1).unwrap(), CycNumber::from_integer(-1));
        assert_eq!(CycNumber::root_of_unity(4, 2).unwrap(), CycNumber::from_integer(-1));
        assert_eq!(CycNumber::root_of_unity(6, 3).unwrap(), CycNumber::from_integer(-1));
        // ζ_6 = -ζ_3², checked by squaring: ζ_6² = ζ_3
        let z6 = CycNumber::root_of_unity(6, 1).unwrap();
        assert_eq!(z6, -zeta(3).pow(2).unwrap());
        assert_eq!(&z6 * &z6, zeta(3));
        assert!(matches!(
            CycNumber::root_of_unity(25, 1),
            Err(CycError::ConductorTooLarge(25))
        ));
    }

    #[test]
    fn roots_have_the_right_order() {
        for n in 1..=12i64 {
            for k in 0..n {
                let z = CycNumber::root_of_unity(n, k).unwrap();
                assert!(z.pow(n).unwrap().is_one(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(zeta(4).conjugate(), -zeta(4));
        assert_eq!(q(3, 7).conjugate(), q(3, 7));
        assert_eq!(zeta(3).conjugate(), zeta(3).pow(2).unwrap());
    }

    #[test]
    fn conductor_is_minimized() {
        // ζ_12^3 = ζ_4, ζ_12^4 = ζ_3
        assert_eq!(CycNumber::root_of_unity(12, 3).unwrap().conductor(), 4);
        assert_eq!(CycNumber::root_of_unity(12, 4).unwrap().conductor(), 3);
        // ζ_8 + ζ_8^{-1} = √2 stays in conductor 8
        let z8 = zeta(8);
        let s = &z8 + &z8.conjugate();
        assert_eq!(s.conductor(), 8);
        assert_eq!(&s * &s, CycNumber::from_integer(2));
        // ζ_4 + ζ_3 - ζ_3 collapses back to conductor 4
        let w = &(&zeta(4) + &zeta(3)) - &zeta(3);
        assert_eq!(w, zeta(4));
    }

    #[test]
    fn conductor_overflow_is_an_error() {
        let a = zeta(8);
        let b = zeta(5);
        assert!(matches!(a.try_mul(&b), Err(CycError::ConductorTooLarge(40))));
    }

    #[test]
    fn json_form() {
        let x = &q(1, 2) + &zeta(4);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"conductor":4,"coeffs":["1/2","1"]}"#);
        let back: CycNumber = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn root_order_detection() {
        assert_eq!(zeta(12).root_of_unity_order(), Some(12));
        assert_eq!(CycNumber::from_integer(-1).root_of_unity_order(), Some(2));
        assert_eq!(CycNumber::from_integer(2).root_of_unity_order(), None);
        assert_eq!(zeta(3).pow(2).unwrap().log_root_of_unity(3), Some(2));
    }
}
