//! Dense linear algebra over prime fields `F_p`.
//!
//! Everything here is small and exact: matrices are row-major `u32` residues, elimination is
//! plain Gauss–Jordan, and subspaces are carried as reduced row echelon bases so that equal
//! subspaces have equal representations.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u32);

impl Prime {
    /// Moduli are capped at 2^16 so that products of residues fit comfortably in a `u64`.
    pub const MAX: u32 = 1 << 16;

    pub fn new(p: u32) -> Result<Self> {
        if !(2..=Self::MAX).contains(&p)
            || (2..p)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.0 as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self, a: u32) -> Option<u32> {
        let a = a % self.0;
        (a != 0).then(|| self.pow(a, (self.0 - 2) as u64))
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> u32 {
        let p = self.0;
        if p == 2 {
            return 1;
        }
        let mut factors = Vec::new();
        let mut n = p - 1;
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                factors.push(d);
                while n.is_multiple_of(d) {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            factors.push(n);
        }
        (2..p)
            .find(|&g| {
                factors
                    .iter()
                    .all(|&f| self.pow(g, ((p - 1) / f) as u64) != 1)
            })
            .expect("every prime field has a primitive root")
    }
}

impl TryFrom<u32> for Prime {
    type Error = Error;
    fn try_from(p: u32) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A residue class together with its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u32,
    modulus: Prime,
}

impl FieldElement {
    pub fn new(value: u64, modulus: Prime) -> Self {
        FieldElement {
            value: (value % modulus.get() as u64) as u32,
            modulus,
        }
    }

    pub fn zero(modulus: Prime) -> Self {
        Self::new(0, modulus)
    }

    pub fn one(modulus: Prime) -> Self {
        Self::new(1, modulus)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> Prime {
        self.modulus
    }

    pub fn inv(self) -> Option<Self> {
        self.modulus.inv(self.value).map(|value| FieldElement {
            value,
            modulus: self.modulus,
        })
    }

    fn check(self, other: Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "field elements from different fields"
        );
    }
}

impl Add for FieldElement {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.check(rhs);
        FieldElement {
            value: self.modulus.add(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Sub for FieldElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.check(rhs);
        FieldElement {
            value: self.modulus.sub(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Mul for FieldElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.check(rhs);
        FieldElement {
            value: self.modulus.mul(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Neg for FieldElement {
    type Output = Self;
    fn neg(self) -> Self {
        FieldElement {
            value: self.modulus.neg(self.value),
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dense row-major matrix over `F_p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: Prime,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(p: Prime, rows: usize, cols: usize) -> Self {
        Matrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: Prime, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major integer entries, reducing them modulo `p`.
    pub fn from_entries(p: Prime, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        let modulus = p.get() as i64;
        let data = entries
            .iter()
            .map(|&x| x.rem_euclid(modulus) as u32)
            .collect();
        Ok(Matrix {
            p,
            rows,
            cols,
            data,
        })
    }

    /// Like [`Matrix::from_entries`] for residues already in `[0, p)`.
    pub(crate) fn from_raw(p: Prime, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&x| x < p.get()));
        Matrix {
            p,
            rows,
            cols,
            data,
        }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.p.get();
    }

    pub fn element(&self, r: usize, c: usize) -> FieldElement {
        FieldElement::new(self.get(r, c) as u64, self.p)
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.p, other.p, "matrices over different fields");
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let p = self.p.get() as u64;
        let mut out = Matrix::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = 0u64;
                for k in 0..self.cols {
                    acc += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                out.data[i * other.cols + j] = (acc % p) as u32;
            }
        }
        out
    }

    /// `self * v` for a column vector given as a slice.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.p.get() as u64;
        (0..self.rows)
            .map(|i| {
                let acc: u64 = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (acc % p) as u32
            })
            .collect()
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| self.p.sub(a, b))
            .collect();
        Matrix::from_raw(self.p, self.rows, self.cols, data)
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diag(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.p, other.p);
        let mut out = Matrix::zeros(self.p, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c));
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                out.set(self.rows + r, self.cols + c, other.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(found) = (row..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            if found != row {
                for c in 0..self.cols {
                    self.data.swap(found * self.cols + c, row * self.cols + c);
                }
            }
            let inv = p.inv(self.get(row, col)).unwrap();
            for c in col..self.cols {
                let v = p.mul(self.get(row, c), inv);
                self.data[row * self.cols + c] = v;
            }
            for r in 0..self.rows {
                if r == row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor == 0 {
                    continue;
                }
                for c in col..self.cols {
                    let v = p.sub(self.get(r, c), p.mul(factor, self.get(row, c)));
                    self.data[r * self.cols + c] = v;
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}`, each basis vector returned as a `cols x 1` matrix.
    pub fn nullspace(&self) -> Vec<Matrix> {
        let (r, pivots) = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![0u32; self.cols];
                x[f] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    x[pc] = p.neg(r.get(i, f));
                }
                Matrix::from_raw(p, self.cols, 1, x)
            })
            .collect()
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(self.p, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || (n > 0 && pivots[n - 1] != n - 1) {
            return None;
        }
        let mut inv = Matrix::zeros(self.p, n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(u32::to_string).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "] mod {}", self.p)
    }
}

/// A subspace of `F_p^n`, held as the reduced row echelon basis that spans it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: Prime, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(p, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: Prime, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(p, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// The row space of `rows` (rows need not be independent).
    pub fn span(rows: &Matrix) -> Self {
        let (r, pivots) = rows.rref();
        let k = pivots.len();
        let basis = Matrix::from_raw(
            rows.prime(),
            k,
            rows.cols(),
            r.entries()[..k * rows.cols()].to_vec(),
        );
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo the subspace, clearing every pivot coordinate.
    pub fn reduce(&self, v: &mut [u32]) {
        let p = self.basis.prime();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let factor = v[pc];
            if factor == 0 {
                continue;
            }
            for (x, &b) in v.iter_mut().zip(self.basis.row(i)) {
                *x = p.sub(*x, p.mul(factor, b));
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        self.contains(v)
            .then(|| self.pivots.iter().map(|&pc| v[pc]).collect())
    }

    /// Coordinates of `v + self` in the quotient, using the non-pivot standard basis vectors as
    /// a basis of the complement.
    pub fn quotient_coordinates(&self, v: &[u32]) -> Vec<u32> {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        (0..w.len())
            .filter(|c| !self.pivots.contains(c))
            .map(|c| w[c])
            .collect()
    }

    /// Standard basis vectors spanning a complement, in increasing order.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient_dim())
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }
}

/// Iterator over all `k`-dimensional subspaces of `F_p^n`, yielding each exactly once as its
/// reduced row echelon basis.
///
/// Subspaces are grouped by pivot set (in lexicographic order of the pivot columns); within a
/// pivot set the free entries count up in base `p`.
pub struct Subspaces {
    p: Prime,
    n: usize,
    k: usize,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    counter: Vec<u32>,
}

pub fn enumerate_subspaces(ambient_dim: usize, sub_dim: usize, p: Prime) -> Result<Subspaces> {
    if sub_dim > ambient_dim {
        return Err(Error::SubspaceTooLarge {
            sub: sub_dim,
            ambient: ambient_dim,
        });
    }
    let mut it = Subspaces {
        p,
        n: ambient_dim,
        k: sub_dim,
        pivots: Some((0..sub_dim).collect()),
        free: Vec::new(),
        counter: Vec::new(),
    };
    it.reset_free();
    Ok(it)
}

impl Subspaces {
    fn reset_free(&mut self) {
        self.free.clear();
        if let Some(pivots) = &self.pivots {
            for (i, &pc) in pivots.iter().enumerate() {
                for c in pc + 1..self.n {
                    if !pivots.contains(&c) {
                        self.free.push((i, c));
                    }
                }
            }
        }
        self.counter = vec![0; self.free.len()];
    }

    fn current(&self) -> Subspace {
        let pivots = self.pivots.clone().unwrap();
        let mut basis = Matrix::zeros(self.p, self.k, self.n);
        for (i, &pc) in pivots.iter().enumerate() {
            basis.set(i, pc, 1);
        }
        for (&(i, c), &v) in self.free.iter().zip(&self.counter) {
            basis.set(i, c, v);
        }
        Subspace { basis, pivots }
    }

    /// Advance the free-entry counter; on overflow move to the next pivot set.
    fn advance(&mut self) {
        for digit in self.counter.iter_mut() {
            *digit += 1;
            if *digit < self.p.get() {
                return;
            }
            *digit = 0;
        }
        let pivots = self.pivots.as_mut().unwrap();
        let (n, k) = (self.n, self.k);
        let mut i = k;
        loop {
            if i == 0 {
                self.pivots = None;
                return;
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for j in i + 1..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
        self.reset_free();
    }
}

impl Iterator for Subspaces {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        self.pivots.as_ref()?;
        let out = self.current();
        self.advance();
        Some(out)
    }
}

/// The Gaussian binomial coefficient `[n choose k]_q`, the number of `k`-dimensional subspaces
/// of `F_q^n`. Computed by the q-Pascal recurrence.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    // row[j] = [i choose j]_q
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            // [i, j] = [i-1, j-1] + q^j [i-1, j]
            row[j] = row[j - 1] + (q as u128).pow(j as u32) * row[j];
        }
    }
    row[k]
}

/// `|GL_n(F_q)| = prod_{i<n} (q^n - q^i)`.
pub fn gl_order(n: usize, q: u64) -> u128 {
    let q = q as u128;
    let qn = q.pow(n as u32);
    (0..n as u32).map(|i| qn - q.pow(i)).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Prime {
        Prime::new(p).unwrap()
    }

    #[test]
    fn primes_validate() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(5).is_ok());
        assert!(Prime::new(4).is_err());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(0).is_err());
        assert_eq!(f(7).primitive_root(), 3);
        assert_eq!(f(5).primitive_root(), 2);
    }

    #[test]
    fn field_axioms_small() {
        for p in [2, 3, 5, 7] {
            let p = f(p);
            for a in 0..p.get() {
                let a = FieldElement::new(a as u64, p);
                assert_eq!((a + -a).value(), 0);
                if a.value() != 0 {
                    assert_eq!((a * a.inv().unwrap()).value(), 1);
                } else {
                    assert!(a.inv().is_none());
                }
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(Matrix::zeros(f(2), 0, 0).rank(), 0);
        assert_eq!(Matrix::identity(f(2), 2).rank(), 2);
        let m = Matrix::from_entries(f(2), 2, 2, &[1, 1, 1, 1]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn rank_matches_row_space_enumeration() {
        // |row space| = p^rank; enumerate all combinations of the rows.
        let p = f(3);
        let m = Matrix::from_entries(p, 3, 3, &[1, 2, 0, 2, 1, 0, 0, 1, 1]).unwrap();
        let mut span = std::collections::HashSet::new();
        for coeffs in 0..27u32 {
            let c = [coeffs % 3, coeffs / 3 % 3, coeffs / 9];
            let v: Vec<u32> = (0..3)
                .map(|j| (0..3).map(|i| c[i] * m.get(i, j)).sum::<u32>() % 3)
                .collect();
            span.insert(v);
        }
        assert_eq!(span.len(), 3usize.pow(m.rank() as u32));
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn nullspace_examples() {
        let p = f(3);
        assert!(Matrix::identity(p, 2).nullspace().is_empty());
        assert_eq!(Matrix::zeros(p, 2, 2).nullspace().len(), 2);
        let m = Matrix::from_entries(p, 1, 2, &[1, 2]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul(&ns[0]).is_zero());
        // brute force: exactly 3 of the 9 vectors are killed, i.e. a 1-dim kernel spanned by (1,1)
        let killed: Vec<(u32, u32)> = (0..3)
            .flat_map(|a| (0..3).map(move |b| (a, b)))
            .filter(|&(a, b)| (a + 2 * b) % 3 == 0)
            .collect();
        assert_eq!(killed, vec![(0, 0), (1, 1), (2, 2)]);
        assert_eq!(ns[0].column(0), vec![1, 1]);
    }

    #[test]
    fn inverse_roundtrip() {
        let p = f(5);
        let m = Matrix::from_entries(p, 2, 2, &[1, 2, 3, 4]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(p, 2));
        let singular = Matrix::from_entries(p, 2, 2, &[1, 2, 2, 4]).unwrap();
        assert!(singular.inverse().is_none());
        assert_eq!(
            Matrix::zeros(p, 0, 0).inverse(),
            Some(Matrix::zeros(p, 0, 0))
        );
    }

    #[test]
    fn subspace_examples() {
        assert_eq!(enumerate_subspaces(2, 1, f(2)).unwrap().count(), 3);
        let zero: Vec<_> = enumerate_subspaces(3, 0, f(3)).unwrap().collect();
        assert_eq!(zero.len(), 1);
        assert_eq!(zero[0].dim(), 0);
        assert_eq!(enumerate_subspaces(4, 2, f(2)).unwrap().count(), 35);
        assert!(matches!(
            enumerate_subspaces(2, 3, f(2)),
            Err(Error::SubspaceTooLarge { .. })
        ));
        assert_eq!(enumerate_subspaces(0, 0, f(2)).unwrap().count(), 1);
    }

    #[test]
    fn projective_line_by_scalar_classes() {
        // Nonzero vectors of F_q^2 up to scalars: (q^2 - 1) / (q - 1).
        for q in [2u32, 3, 5] {
            let n = enumerate_subspaces(2, 1, f(q)).unwrap().count() as u32;
            assert_eq!(n, (q * q - 1) / (q - 1));
        }
    }

    #[test]
    fn subspace_coordinates() {
        let p = f(3);
        let rows = Matrix::from_entries(p, 2, 3, &[1, 1, 0, 2, 2, 1]).unwrap();
        let s = Subspace::span(&rows);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.pivots(), &[0, 2]);
        assert!(s.contains(&[2, 2, 1]));
        assert!(!s.contains(&[0, 1, 0]));
        assert_eq!(s.coordinates(&[2, 2, 1]), Some(vec![2, 1]));
        assert_eq!(s.quotient_coordinates(&[0, 1, 0]), vec![1]);
        assert_eq!(s.complement_indices(), vec![1]);
    }

    #[test]
    fn gl_orders() {
        assert_eq!(gl_order(0, 2), 1);
        assert_eq!(gl_order(1, 3), 2);
        assert_eq!(gl_order(2, 2), 6);
        assert_eq!(gl_order(2, 3), 48);
    }
}
