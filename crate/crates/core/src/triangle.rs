//! Lower-triangular number tables `t(n, k)`, `0 <= k <= n`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

/// Row `n` holds `t(n, 0..=n)`. Entries outside the stored triangle read
/// as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle<T = BigInt> {
    rows: Vec<Vec<T>>,
}

impl<T: Clone + Zero> Triangle<T> {
    pub fn zeros(rows: usize) -> Self {
        Self {
            rows: (0..rows).map(|n| vec![T::zero(); n + 1]).collect(),
        }
    }

    pub fn from_fn(rows: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        Self {
            rows: (0..rows)
                .map(|n| (0..=n).map(|k| f(n, k)).collect())
                .collect(),
        }
    }

    /// Builds a triangle from rows; short rows are zero-padded, long rows
    /// must only carry zeros above the diagonal.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let rows = rows
            .into_iter()
            .enumerate()
            .map(|(n, mut row)| {
                assert!(
                    row.iter().skip(n + 1).all(Zero::is_zero),
                    "row {n} has entries above the diagonal"
                );
                row.resize(n + 1, T::zero());
                row
            })
            .collect();
        Self { rows }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// `t(n, k)`, zero for `k > n`, negative indices or rows not stored.
    pub fn get(&self, n: i64, k: i64) -> T {
        if n < 0 || k < 0 {
            return T::zero();
        }
        self.rows
            .get(n as usize)
            .and_then(|r| r.get(k as usize))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, n: usize, k: usize, value: T) {
        self.rows[n][k] = value;
    }

    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn column(&self, k: usize) -> Vec<T> {
        (0..self.rows.len())
            .map(|n| self.get(n as i64, k as i64))
            .collect()
    }

    /// The leading `rows x rows` block.
    pub fn leading(&self, rows: usize) -> Self {
        assert!(
            rows <= self.rows.len(),
            "only {} rows available",
            self.rows.len()
        );
        Self {
            rows: self.rows[..rows].to_vec(),
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Triangle<U> {
        Triangle {
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }
}

impl Triangle<BigInt> {
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn to_rational(&self) -> Triangle<BigRational> {
        self.map(|v| BigRational::from_integer(v.clone()))
    }
}

impl Triangle<BigRational> {
    /// Integer view; `None` if any entry is fractional.
    pub fn to_integer(&self) -> Option<Triangle<BigInt>> {
        if self.rows.iter().flatten().all(|v| v.is_integer()) {
            Some(self.map(|v| v.to_integer()))
        } else {
            None
        }
    }
}

impl<T> Triangle<T>
where
    T: Clone + Zero,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    /// Product of the leading square blocks as lower-triangular matrices.
    pub fn matmul(&self, other: &Self) -> Self {
        let n = self.num_rows().min(other.num_rows());
        Self::from_fn(n, |i, j| {
            let mut acc = T::zero();
            for m in j..=i {
                acc = acc + &self.rows[i][m] * &other.rows[m][j];
            }
            acc
        })
    }
}

impl<T: fmt::Display> fmt::Display for Triangle<T> {
    /// Right-aligned table including the zeros above the diagonal.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1);
        let size = self.rows.len();
        for row in &self.rows {
            let cells: Vec<String> = (0..size)
                .map(|k| match row.get(k) {
                    Some(v) => format!("{v:>width$}"),
                    None => format!("{:>width$}", 0),
                })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
