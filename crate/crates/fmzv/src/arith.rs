//! Exact rational scalars, p-adic valuations, Bernoulli numbers and dense
//! linear algebra over the rationals.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Error, Result};

/// The single scalar type. `num-rational` keeps values in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders "p/q", or "n" when the denominator is one.
pub fn fmt_rational(x: &Rational) -> String {
    x.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse { pos: 0, expected: format!("rational number, got {s:?}") };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// A p-adic valuation; `Infinity` is reserved for zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
            (Valuation::Finite(_), Valuation::Infinity) => Ordering::Less,
            (Valuation::Infinity, Valuation::Finite(_)) => Ordering::Greater,
            (Valuation::Infinity, Valuation::Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinity => write!(f, "inf"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn int_valuation(p: &BigInt, n: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (quo, rem) = n.div_rem(p);
        if !rem.is_zero() {
            return v;
        }
        n = quo;
        v += 1;
    }
}

pub fn nu_p(p: u64, x: &Rational) -> Result<Valuation> {
    if !is_prime(p) {
        return invalid(format!("{p} is not prime"));
    }
    if x.is_zero() {
        return Ok(Valuation::Infinity);
    }
    let p = BigInt::from(p);
    Ok(Valuation::Finite(int_valuation(&p, x.numer()) - int_valuation(&p, x.denom())))
}

pub fn nu_2(x: &Rational) -> Valuation {
    nu_p(2, x).expect("2 is prime")
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// Binomial coefficient, zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

static BERNOULLI: OnceLock<RwLock<Vec<Rational>>> = OnceLock::new();

/// Bernoulli number B_k with B_1 = -1/2, from Σ_{j≤k} binom(k+1, j) B_j = 0.
pub fn bernoulli(k: usize) -> Rational {
    let cache = BERNOULLI.get_or_init(|| RwLock::new(vec![Rational::one()]));
    if let Some(b) = cache.read().unwrap().get(k) {
        return b.clone();
    }
    let mut table = cache.read().unwrap().clone();
    while table.len() <= k {
        let m = table.len() as u64;
        let mut s = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            s += Rational::from_integer(binomial(m + 1, j as u64)) * b;
        }
        table.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    let out = table[k].clone();
    let mut w = cache.write().unwrap();
    if w.len() < table.len() {
        *w = table;
    }
    out
}

/// b_n = (-1)^{n+1} B_{2n} 24^n / (2 (2n)!).
pub fn b_coeff(n: usize) -> Rational {
    assert!(n >= 1, "b_coeff needs n >= 1");
    let sign = if n % 2 == 1 { qi(1) } else { qi(-1) };
    let num = Rational::from_integer(num_traits::pow(BigInt::from(24), n));
    let den = Rational::from_integer(factorial(2 * n as u64) * 2);
    sign * bernoulli(2 * n) * num / den
}

/// Dense row-major matrix of rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(QMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Rational) {
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(fmt_rational).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            (0..self.rows)
                .map(|i| self.row(i).iter().map(|x| serde_json::Value::String(fmt_rational(x))).collect())
                .collect(),
        )
    }

    /// Exact determinant by fraction-free Bareiss elimination after clearing
    /// denominators column by column.
    pub fn det_exact(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("{}x{} matrix has no determinant", self.rows, self.cols)));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut scale = BigInt::one();
        let mut a: Vec<Vec<BigInt>> = vec![Vec::with_capacity(n); n];
        for j in 0..n {
            let l = (0..n).fold(BigInt::one(), |acc, i| acc.lcm(self.get(i, j).denom()));
            for (i, row) in a.iter_mut().enumerate() {
                let x = self.get(i, j);
                row.push(x.numer() * (&l / x.denom()));
            }
            scale *= l;
        }
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = Rational::new(a[n - 1][n - 1].clone(), scale);
        Ok(if sign < 0 { -det } else { det })
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.to_rows();
        let pivots = rref_in_place(&mut m, self.cols);
        let rows = m.len();
        let mut out = QMatrix { rows, cols: self.cols, entries: m.into_iter().flatten().collect() };
        out.rows = rows;
        (out, pivots)
    }

    /// Exact rank and a basis of the right null space; every kernel vector is
    /// scaled so that its first nonzero entry is 1.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Rational>>) {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut kernel = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, f).clone();
            }
            normalize_leading_one(&mut v);
            kernel.push(v);
        }
        (pivots.len(), kernel)
    }

    /// 2-adic invertibility certificate: strictly lower entries have ν₂ ≥ 1,
    /// and each diagonal entry is finite, ≤ 0, and minimal in its column.
    pub fn two_adic_certificate(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::Dimension("two-adic certificate needs a square matrix".into()));
        }
        let n = self.rows;
        for j in 0..n {
            let diag = nu_2(self.get(j, j));
            if diag > Valuation::Finite(0) {
                return Ok(false);
            }
            for i in 0..n {
                let v = nu_2(self.get(i, j));
                if i > j && v < Valuation::Finite(1) {
                    return Ok(false);
                }
                if v < diag {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

pub(crate) fn normalize_leading_one(v: &mut [Rational]) {
    if let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() {
        if !lead.is_one() {
            for x in v.iter_mut() {
                *x = &*x / &lead;
            }
        }
    }
}

/// Gauss–Jordan elimination; drops zero rows and returns pivot columns.
fn rref_in_place(m: &mut Vec<Vec<Rational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][c].recip();
        for x in m[row].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = m[row].clone();
        for (i, other) in m.iter_mut().enumerate() {
            if i == row || other[c].is_zero() {
                continue;
            }
            let f = other[c].clone();
            for (x, y) in other.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    m.truncate(row);
    pivots
}

const PRIME: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn bigint_mod(x: &BigInt) -> u64 {
    let m = BigInt::from(PRIME);
    x.mod_floor(&m).to_u64().expect("reduced below prime")
}

fn rational_mod(x: &Rational) -> Option<u64> {
    let d = bigint_mod(x.denom());
    (d != 0).then(|| mulmod(bigint_mod(x.numer()), powmod(d, PRIME - 2)))
}

/// An exact row space over the rationals held in reduced row echelon form.
///
/// Independent rows are located by elimination modulo a large prime; the
/// echelon form of those rows is then computed exactly and every remaining
/// row is checked exactly against it, so the result never depends on the
/// prime.
#[derive(Debug, Clone)]
pub struct Subspace {
    ncols: usize,
    pivots: Vec<usize>,
    basis: Vec<Vec<Rational>>,
    pivot_of: Vec<Option<usize>>,
}

impl Subspace {
    pub fn from_rows(ncols: usize, rows: &[Vec<Rational>]) -> Self {
        let mut selected = modular_independent_rows(ncols, rows);
        loop {
            let mut m: Vec<Vec<Rational>> = selected.iter().map(|&i| rows[i].clone()).collect();
            let pivots = rref_in_place(&mut m, ncols);
            let mut pivot_of = vec![None; ncols];
            for (k, &p) in pivots.iter().enumerate() {
                pivot_of[p] = Some(k);
            }
            let space = Subspace { ncols, pivots, basis: m, pivot_of };
            let missing: Vec<usize> = (0..rows.len())
                .filter(|i| !selected.contains(i))
                .filter(|&i| !space.contains(&rows[i]))
                .collect();
            if missing.is_empty() {
                return space;
            }
            selected.extend(missing);
            selected.sort_unstable();
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivot_of[c].is_none()).collect()
    }

    /// Canonical representative of `v` modulo the space: zero on every pivot
    /// column.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (k, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, y) in out.iter_mut().zip(&self.basis[k]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.free_columns_residual(v).iter().all(Zero::is_zero)
    }

    fn free_columns_residual(&self, v: &[Rational]) -> Vec<Rational> {
        let free = self.free_columns();
        free.iter()
            .map(|&f| {
                let mut acc = v[f].clone();
                for (k, &p) in self.pivots.iter().enumerate() {
                    if !v[p].is_zero() && !self.basis[k][f].is_zero() {
                        acc -= &v[p] * &self.basis[k][f];
                    }
                }
                acc
            })
            .collect()
    }
}

fn modular_independent_rows(ncols: usize, rows: &[Vec<Rational>]) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut selected = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let Some(mut v) = row.iter().map(rational_mod).collect::<Option<Vec<u64>>>() else {
            selected.push(idx);
            continue;
        };
        for (p, b) in &basis {
            let f = v[*p];
            if f == 0 {
                continue;
            }
            for (x, y) in v.iter_mut().zip(b) {
                if *y != 0 {
                    *x = (*x + PRIME - mulmod(f, *y)) % PRIME;
                }
            }
        }
        if let Some(p) = (0..ncols).find(|&c| v[c] != 0) {
            let inv = powmod(v[p], PRIME - 2);
            for x in v.iter_mut() {
                *x = mulmod(*x, inv);
            }
            basis.push((p, v));
            selected.push(idx);
        }
        if basis.len() == ncols {
            break;
        }
    }
    selected
}
