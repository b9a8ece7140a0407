//! Exact integer matrices: Hermite and Smith normal forms with unimodular
//! transforms, determinants and lattice kernels.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

/// `U·A = H` with `U` unimodular and `H` in row Hermite normal form.
#[derive(Clone, Debug)]
pub struct Hermite {
    pub h: IntegerMatrix,
    pub u: IntegerMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// `U·A·V = D` with `D` diagonal, `d₁ | d₂ | ...`, all non-negative.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl Smith {
    pub fn divisors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have unequal lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    pub fn from_rows_with_cols(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * cols + j] = BigInt::from(x);
            }
        }
        m
    }

    /// Builds a matrix from column vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "ragged matrix");
            for (i, &x) in col.iter().enumerate() {
                m.set(i, j, BigInt::from(x));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Panics on a dimension mismatch.
    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let s: BigInt = (0..self.cols).map(|j| self.get(i, j) * v[j]).sum();
                s.to_i64().expect("entry fits in i64")
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += q * row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let delta = self.get(src, j) * q;
            self.data[dst * self.cols + j] += delta;
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let delta = self.get(i, src) * q;
            self.data[i * self.cols + dst] += delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let x = -self.get(r, j);
            self.set(r, j, x);
        }
    }

    /// Replaces rows `(a, b)` by `(x·a + y·b, s·a + t·b)`.
    fn combine_rows(&mut self, a: usize, b: usize, [x, y, s, t]: [&BigInt; 4]) {
        for j in 0..self.cols {
            let (ra, rb) = (self.get(a, j).clone(), self.get(b, j).clone());
            self.set(a, j, x * &ra + y * &rb);
            self.set(b, j, s * &ra + t * &rb);
        }
    }

    /// Row Hermite normal form: echelon, positive pivots, entries above a
    /// pivot reduced into `[0, pivot)`.
    pub fn hermite(&self) -> Hermite {
        let mut h = self.clone();
        let mut u = Self::identity(self.rows);
        let mut r = 0;
        let mut pivots = Vec::new();
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            for i in r + 1..self.rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let (a, b) = (h.get(r, c).clone(), h.get(i, c).clone());
                let ext = a.extended_gcd(&b);
                let (mut g, mut x, mut y) = (ext.gcd, ext.x, ext.y);
                if g.is_negative() {
                    g = -g;
                    x = -x;
                    y = -y;
                }
                let (a, b) = (&a / &g, &b / &g);
                let nb = -&b;
                let coeffs = [&x, &y, &nb, &a];
                h.combine_rows(r, i, coeffs);
                u.combine_rows(r, i, coeffs);
            }
            if h.get(r, c).is_zero() {
                continue;
            }
            if h.get(r, c).is_negative() {
                h.negate_row(r);
                u.negate_row(r);
            }
            let p = h.get(r, c).clone();
            for i in 0..r {
                let q = -h.get(i, c).div_floor(&p);
                if !q.is_zero() {
                    h.add_row(i, r, &q);
                    u.add_row(i, r, &q);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Hermite {
            h,
            u,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.hermite().rank
    }

    pub fn smith(&self) -> Smith {
        let mut d = self.clone();
        let mut u = Self::identity(self.rows);
        let mut v = Self::identity(self.cols);
        let (m, n) = (self.rows, self.cols);
        for t in 0..m.min(n) {
            loop {
                let mut best: Option<(usize, usize)> = None;
                for i in t..m {
                    for j in t..n {
                        let x = d.get(i, j);
                        if !x.is_zero()
                            && best.map_or(true, |(bi, bj)| x.abs() < d.get(bi, bj).abs())
                        {
                            best = Some((i, j));
                        }
                    }
                }
                let Some((bi, bj)) = best else {
                    return Smith { u, d, v };
                };
                d.swap_rows(t, bi);
                u.swap_rows(t, bi);
                d.swap_cols(t, bj);
                v.swap_cols(t, bj);
                let p = d.get(t, t).clone();
                let mut clean = true;
                for i in t + 1..m {
                    let q = -d.get(i, t).div_floor(&p);
                    if !q.is_zero() {
                        d.add_row(i, t, &q);
                        u.add_row(i, t, &q);
                    }
                    clean &= d.get(i, t).is_zero();
                }
                for j in t + 1..n {
                    let q = -d.get(t, j).div_floor(&p);
                    if !q.is_zero() {
                        d.add_col(j, t, &q);
                        v.add_col(j, t, &q);
                    }
                    clean &= d.get(t, j).is_zero();
                }
                if !clean {
                    continue;
                }
                let offender = (t + 1..m)
                    .find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&p)));
                match offender {
                    Some(i) => {
                        let one = BigInt::one();
                        d.add_row(t, i, &one);
                        u.add_row(t, i, &one);
                    }
                    None => break,
                }
            }
            if d.get(t, t).is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
        }
        Smith { u, d, v }
    }

    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        self.smith().divisors()
    }

    /// Fraction-free (Bareiss) elimination. Panics unless square.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let x = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, x);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    /// Columns form a basis of the lattice `{x ∈ ℤⁿ : A·x = 0}`.
    pub fn kernel(&self) -> IntegerMatrix {
        let hnf = self.transpose().hermite();
        let k = self.cols - hnf.rank;
        let mut out = Self::zeros(self.cols, k);
        for (col, row) in (hnf.rank..self.cols).enumerate() {
            for j in 0..self.cols {
                out.set(j, col, hnf.u.get(row, j).clone());
            }
        }
        // Present the basis in Hermite form for determinism.
        let canon = out.transpose().hermite().h;
        canon.transpose()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    /// Surjective onto `ℤ^rows`: full row rank with unit elementary divisors.
    pub fn is_surjective(&self) -> bool {
        let divisors = self.elementary_divisors();
        divisors.len() == self.rows && divisors.iter().all(One::is_one)
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j).to_i64().expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| {
                    Value::Array(
                        (0..self.cols)
                            .map(|j| match self.get(i, j).to_i64() {
                                Some(x) => Value::from(x),
                                None => Value::from(self.get(i, j).to_string()),
                            })
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl fmt::Display for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn hermite_example() {
        let a = IntegerMatrix::from_rows(&[vec![2, 4], vec![3, 5]]);
        let h = a.hermite();
        assert_eq!(h.u.mul(&a), h.h);
        assert_eq!(h.h, IntegerMatrix::from_rows(&[vec![1, 1], vec![0, 2]]));
        assert!(h.u.is_unimodular());
    }

    #[test]
    fn smith_example() {
        let a = IntegerMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(a.elementary_divisors(), vec![big(2), big(6), big(12)]);
        let s = a.smith();
        assert_eq!(s.u.mul(&a).mul(&s.v), s.d);
    }

    #[test]
    fn determinants() {
        assert_eq!(IntegerMatrix::identity(3).determinant(), big(1));
        let a = IntegerMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.determinant(), big(-1));
        let b = IntegerMatrix::from_rows(&[vec![2, -3, 1], vec![2, 0, -1], vec![1, 4, 5]]);
        assert_eq!(b.determinant(), big(49));
    }

    #[test]
    fn kernel_of_rbar_shape() {
        // Two loops and a column that traces both loops forwards and back.
        let a = IntegerMatrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let k = a.kernel();
        assert_eq!(k, IntegerMatrix::from_rows(&[vec![0], vec![0], vec![1]]));
        assert!(a.is_surjective());
        assert!(!IntegerMatrix::from_rows(&[vec![2]]).is_surjective());
        assert_eq!(IntegerMatrix::from_rows(&[vec![2]]).rank(), 1);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-6i64..7, c), r)
        })
    }

    proptest! {
        #[test]
        fn hermite_transform_is_certified(rows in small_matrix()) {
            let a = IntegerMatrix::from_rows(&rows);
            let h = a.hermite();
            prop_assert_eq!(h.u.mul(&a), h.h.clone());
            prop_assert!(h.u.is_unimodular());
            for (r, &c) in h.pivots.iter().enumerate() {
                prop_assert!(h.h.get(r, c).is_positive());
                for i in 0..r {
                    let x = h.h.get(i, c);
                    prop_assert!(!x.is_negative() && x < h.h.get(r, c));
                }
                for i in r + 1..a.rows() {
                    prop_assert!(h.h.get(i, c).is_zero());
                }
            }
        }

        #[test]
        fn smith_transform_is_certified(rows in small_matrix()) {
            let a = IntegerMatrix::from_rows(&rows);
            let s = a.smith();
            prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
            prop_assert!(s.u.is_unimodular() && s.v.is_unimodular());
            let divs = s.divisors();
            for w in divs.windows(2) {
                prop_assert!(w[1].is_multiple_of(&w[0]));
            }
            prop_assert_eq!(divs.len(), a.rank());
        }

        #[test]
        fn kernel_is_exact(rows in small_matrix()) {
            let a = IntegerMatrix::from_rows(&rows);
            let k = a.kernel();
            prop_assert!(a.mul(&k).is_zero());
            prop_assert_eq!(k.cols() + a.rank(), a.cols());
            // Saturated: the kernel basis extends to a basis of ℤⁿ.
            if k.cols() > 0 {
                prop_assert!(k.transpose().is_surjective());
            }
        }

        #[test]
        fn determinant_is_multiplicative(x in small_matrix(), y in small_matrix()) {
            let n = x.len().min(y.len()).min(x[0].len()).min(y[0].len());
            let cut = |m: &Vec<Vec<i64>>| {
                IntegerMatrix::from_rows(&m[..n].iter().map(|r| r[..n].to_vec()).collect::<Vec<_>>())
            };
            let (a, b) = (cut(&x), cut(&y));
            prop_assert_eq!(a.mul(&b).determinant(), a.determinant() * b.determinant());
        }
    }
}
