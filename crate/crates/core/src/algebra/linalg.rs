use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
                .collect(),
        )
        .expect("rectangular")
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> Result<QMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension("vector length".into()));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let rows: Vec<Vec<Rational>> = self.to_rows();
        let (red, pivots) = rref_fraction_free(rows, self.cols);
        let m = QMatrix {
            rows: self.rows,
            cols: self.cols,
            data: red.into_iter().flatten().collect(),
        };
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                v
            })
            .collect()
    }

    /// Determinant via Bareiss elimination on a common-denominator integer matrix.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let mut denom = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let (row, d) = integer_row(self.row(i));
            denom *= d;
            m.push(row);
        }
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                    Some(i) => {
                        m.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(Rational::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                    m[i][j] = v;
                }
            }
            prev = m[k][k].clone();
        }
        Ok(Rational::new(sign * &m[n - 1][n - 1], denom))
    }

    pub fn inverse(&self) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = QMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, Rational::one());
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularSystem);
        }
        let mut out = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(out)
    }
}

/// Scale a rational row to a primitive integer row; returns the row and the
/// factor it was multiplied by.
fn integer_row(row: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let mut l = BigInt::one();
    for x in row {
        l = l.lcm(x.denom());
    }
    let out = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    (out, l)
}

fn remove_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g > BigInt::one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Gauss-Jordan on integer-scaled rows with content removal after each step.
fn rref_fraction_free(rows: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r).0).collect();
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        remove_content(&mut m[r]);
        for i in 0..nrows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let a = m[r][c].clone();
            let b = m[i][c].clone();
            let g = a.gcd(&b);
            let (a, b) = (&a / &g, &b / &g);
            let (top, rest) = if i < r {
                let (x, y) = m.split_at_mut(r);
                (&mut x[i], &y[0])
            } else {
                let (x, y) = m.split_at_mut(i);
                (&mut y[0], &x[r])
            };
            for j in 0..cols {
                top[j] = &top[j] * &a - &rest[j] * &b;
            }
            remove_content(top);
        }
        pivots.push(c);
        r += 1;
    }
    let out = m
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            if i < pivots.len() {
                let lead = row[pivots[i]].clone();
                row.into_iter().map(|x| Rational::new(x, lead.clone())).collect()
            } else {
                vec![Rational::zero(); cols]
            }
        })
        .collect();
    (out, pivots)
}

/// Structure of the solution set of `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<Rational>),
    Affine {
        particular: Vec<Rational>,
        kernel: Vec<Vec<Rational>>,
    },
}

impl Solution {
    pub fn particular(&self) -> &[Rational] {
        match self {
            Solution::Unique(x) => x,
            Solution::Affine { particular, .. } => particular,
        }
    }
}

pub fn solve_linear(a: &QMatrix, b: &[Rational]) -> Result<Solution> {
    if b.len() != a.rows {
        return Err(Error::Dimension(format!(
            "matrix has {} rows, right-hand side {}",
            a.rows,
            b.len()
        )));
    }
    let n = a.cols;
    let rows: Vec<Vec<Rational>> = (0..a.rows)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let (red, pivots) = rref_fraction_free(rows, n + 1);
    if pivots.last() == Some(&n) {
        return Err(Error::NoSolution);
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = red[i][n].clone();
    }
    if pivots.len() == n {
        return Ok(Solution::Unique(x));
    }
    let kernel = a.nullspace();
    Ok(Solution::Affine {
        particular: x,
        kernel,
    })
}

/// Incremental sparse row reduction. Rows are keyed by column index and
/// pivot at their smallest column; `reduce` returns the canonical remainder
/// supported on non-pivot columns.
#[derive(Clone, Debug, Default)]
pub struct RowReducer {
    pivots: BTreeMap<usize, BTreeMap<usize, Rational>>,
}

impl RowReducer {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, c: usize) -> bool {
        self.pivots.contains_key(&c)
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = &usize> {
        self.pivots.keys()
    }

    pub fn reduce(&self, v: &BTreeMap<usize, Rational>) -> BTreeMap<usize, Rational> {
        let mut v = v.clone();
        let mut from = 0;
        loop {
            let hit = v
                .range(from..)
                .map(|(c, _)| *c)
                .find(|c| self.pivots.contains_key(c));
            let Some(c) = hit else {
                return v;
            };
            let f = v.remove(&c).unwrap();
            for (j, x) in self.pivots[&c].iter().skip(1) {
                let e = v.entry(*j).or_insert_with(Rational::zero);
                *e -= &f * x;
                if e.is_zero() {
                    v.remove(j);
                }
            }
            from = c + 1;
        }
    }

    /// Insert a row; returns false when it was already in the span.
    pub fn insert(&mut self, v: &BTreeMap<usize, Rational>) -> bool {
        let r = self.reduce(v);
        let Some((&c, lead)) = r.iter().next() else {
            return false;
        };
        let inv = Rational::one() / lead;
        let row: BTreeMap<usize, Rational> = r.iter().map(|(j, x)| (*j, x * &inv)).collect();
        self.pivots.insert(c, row);
        true
    }
}

pub fn abs_max(v: &[Rational]) -> Rational {
    v.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
}
