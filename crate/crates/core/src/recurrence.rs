//! Linear recurrences for `t(n, k)` and convolution recurrences for
//! column 0.
//!
//! Peak-less rows satisfy, for `n >= 2`, `k >= 1`,
//!
//! ```text
//! t(n,k) = t(n,k-1) + t(n-1,k) - t(n-1,k-2) - t(n-2,k)
//! ```
//!
//! Valley-less rows satisfy the same four-term rule for `k >= 2` and
//! UU-less rows satisfy, for `k >= 2`,
//!
//! ```text
//! t(n,k) = t(n,k-1) + t(n-1,k) - t(n-1,k-1) - t(n-2,k) - t(n-2,k-2) - t(n-3,k-1)
//! ```
//!
//! In both of these classes column 1 is not covered by the linear rule
//! (for instance valley-less `t(2,1) = 2` while the four-term rule gives 3).
//! It is filled from column 0 instead, using
//!
//! ```text
//! t(n,1) = t(n-1,0) + sum_{i+j=n-2} t(i,0) t(j,0)
//! ```

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::path::AvoidanceClass;
use crate::triangle::Triangle;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RecurrenceError {
    #[error("no recurrence is implemented for class `{0}`")]
    Unsupported(AvoidanceClass),
}

/// Column 0 of the triangle, `t_0 .. t_{len-1}`, from the class's
/// convolution recurrence.
pub fn column_zero(class: AvoidanceClass, len: usize) -> Result<Vec<BigInt>, RecurrenceError> {
    if class == AvoidanceClass::Unrestricted {
        return Err(RecurrenceError::Unsupported(class));
    }
    let mut t: Vec<BigInt> = Vec::with_capacity(len);
    for n in 0..len {
        let next = if n == 0 {
            BigInt::one()
        } else {
            convolution_rhs(class, &t, n as i64)?
        };
        t.push(next);
    }
    Ok(t)
}

/// Right-hand side of the convolution recurrence for `t_n`, reading
/// `t_0 .. t_{n-1}` from `known`.
///
/// - peak-less, `n >= 1`:
///   `t_{n-1} + sum_{k=0}^{n-3} t_k t_{n-k-3} + sum_{k=2}^{n-1} (t_k - t_{k-1}) t_{n-k-1}`
/// - valley-less, `n >= 1`, with `t_{-1} = 1`:
///   `t_{n-1} + sum_{k=0}^{n-2} t_{k-1} t_{n-k-3} + sum_{k=2}^{n} (t_{k-1} - t_{k-2}) t_{n-k-1}`
/// - UU-less, `n >= 1`, negative indices read as 0:
///   `t_{n-1} + t_{n-2} + t_{n-3} + sum_{k=2}^{n-2} t_{k-2} t_{n-k-2}
///   + sum_{k=3}^{n-1} (t_{k-1} - t_{k-2}) t_{n-k-1}`
pub fn convolution_rhs(
    class: AvoidanceClass,
    known: &[BigInt],
    n: i64,
) -> Result<BigInt, RecurrenceError> {
    let minus_one = match class {
        AvoidanceClass::ValleyLess => BigInt::one(),
        _ => BigInt::zero(),
    };
    let t = |i: i64| -> BigInt {
        match i {
            i if i >= 0 => known[i as usize].clone(),
            -1 => minus_one.clone(),
            _ => BigInt::zero(),
        }
    };
    let value = match class {
        AvoidanceClass::PeakLess => {
            let a: BigInt = (0..=n - 3).map(|k| t(k) * t(n - k - 3)).sum();
            let b: BigInt = (2..n).map(|k| (t(k) - t(k - 1)) * t(n - k - 1)).sum();
            t(n - 1) + a + b
        }
        AvoidanceClass::ValleyLess => {
            let a: BigInt = (0..=n - 2).map(|k| t(k - 1) * t(n - k - 3)).sum();
            let b: BigInt = (2..=n).map(|k| (t(k - 1) - t(k - 2)) * t(n - k - 1)).sum();
            t(n - 1) + a + b
        }
        AvoidanceClass::DoubleRiseLess => {
            let a: BigInt = (2..=n - 2).map(|k| t(k - 2) * t(n - k - 2)).sum();
            let b: BigInt = (3..n).map(|k| (t(k - 1) - t(k - 2)) * t(n - k - 1)).sum();
            t(n - 1) + t(n - 2) + t(n - 3) + a + b
        }
        AvoidanceClass::Unrestricted => return Err(RecurrenceError::Unsupported(class)),
    };
    Ok(value)
}

/// `t(n,k-1) + t(n-1,k) - t(n-1,k-2) - t(n-2,k)`.
pub fn four_term_rhs(t: &Triangle, n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    t.get(n, k - 1) + t.get(n - 1, k) - t.get(n - 1, k - 2) - t.get(n - 2, k)
}

/// `t(n,k-1) + t(n-1,k) - t(n-1,k-1) - t(n-2,k) - t(n-2,k-2) - t(n-3,k-1)`.
pub fn six_term_rhs(t: &Triangle, n: usize, k: usize) -> BigInt {
    let (n, k) = (n as i64, k as i64);
    t.get(n, k - 1) + t.get(n - 1, k)
        - t.get(n - 1, k - 1)
        - t.get(n - 2, k)
        - t.get(n - 2, k - 2)
        - t.get(n - 3, k - 1)
}

/// `t(n-1,0) + sum_{i+j=n-2} t(i,0) t(j,0)`.
pub fn column_one_rhs(col0: &[BigInt], n: usize) -> BigInt {
    let Some(m) = n.checked_sub(1) else {
        return BigInt::zero();
    };
    let conv: BigInt = match n.checked_sub(2) {
        Some(s) => (0..=s).map(|i| &col0[i] * &col0[s - i]).sum(),
        None => BigInt::zero(),
    };
    &col0[m] + conv
}

/// The linear rule that holds for column `k` of the class, if any.
pub fn linear_rule_applies(class: AvoidanceClass, n: usize, k: usize) -> bool {
    match class {
        AvoidanceClass::PeakLess => n >= 2 && k >= 1,
        AvoidanceClass::ValleyLess | AvoidanceClass::DoubleRiseLess => n >= 2 && k >= 2,
        AvoidanceClass::Unrestricted => false,
    }
}

/// Rows `0 .. rows` built purely from recurrences: column 0 by convolution,
/// the rest by the linear rule (plus the column-1 identity where needed).
pub fn triangle(class: AvoidanceClass, rows: usize) -> Result<Triangle, RecurrenceError> {
    let col0 = column_zero(class, rows)?;
    let mut t = Triangle::zeros(rows);
    for n in 0..rows {
        t.set(n, 0, col0[n].clone());
        for k in 1..=n {
            let value = if n == 1 {
                BigInt::one()
            } else if linear_rule_applies(class, n, k) {
                match class {
                    AvoidanceClass::DoubleRiseLess => six_term_rhs(&t, n, k),
                    _ => four_term_rhs(&t, n, k),
                }
            } else {
                column_one_rhs(&col0, n)
            };
            t.set(n, k, value);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::count_table_brute;

    const PEAK: AvoidanceClass = AvoidanceClass::PeakLess;
    const VALLEY: AvoidanceClass = AvoidanceClass::ValleyLess;
    const UU: AvoidanceClass = AvoidanceClass::DoubleRiseLess;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn column_zero_values() {
        assert_eq!(
            column_zero(PEAK, 10).unwrap(),
            ints(&[1, 1, 1, 2, 5, 12, 29, 73, 190, 505])
        );
        assert_eq!(
            column_zero(VALLEY, 10).unwrap(),
            ints(&[1, 1, 2, 5, 12, 29, 73, 190, 505, 1363])
        );
        assert_eq!(
            column_zero(UU, 10).unwrap(),
            ints(&[1, 1, 2, 4, 9, 20, 47, 112, 274, 679])
        );
    }

    #[test]
    fn column_zero_matches_enumeration_to_20() {
        for class in AvoidanceClass::RESTRICTED {
            let table = crate::enumerate::count_table_dp(20, class);
            assert_eq!(
                column_zero(class, 21).unwrap(),
                table.total.column(0),
                "{class}"
            );
        }
    }

    #[test]
    fn triangles_match_enumeration() {
        for class in AvoidanceClass::RESTRICTED {
            let table = count_table_brute(14, class);
            assert_eq!(triangle(class, 15).unwrap(), table.total, "{class}");
        }
    }

    #[test]
    fn linear_rules_where_they_hold() {
        for class in AvoidanceClass::RESTRICTED {
            let t = count_table_brute(14, class).total;
            for n in 2..=14 {
                for k in 1..=n {
                    if !linear_rule_applies(class, n, k) {
                        continue;
                    }
                    let rhs = match class {
                        UU => six_term_rhs(&t, n, k),
                        _ => four_term_rhs(&t, n, k),
                    };
                    assert_eq!(rhs, t.get(n as i64, k as i64), "{class} ({n},{k})");
                }
            }
        }
    }

    #[test]
    fn linear_rules_fail_in_column_one() {
        let valley = count_table_brute(6, VALLEY).total;
        assert_eq!(valley.get(2, 1), BigInt::from(2));
        assert_eq!(four_term_rhs(&valley, 2, 1), BigInt::from(3));
        let uu = count_table_brute(6, UU).total;
        assert_eq!(uu.get(3, 1), BigInt::from(4));
        assert_eq!(six_term_rhs(&uu, 3, 1), BigInt::from(2));
        for class in [VALLEY, UU] {
            let t = count_table_brute(14, class).total;
            let col0 = t.column(0);
            for n in 1..=14 {
                assert_eq!(
                    column_one_rhs(&col0, n),
                    t.get(n as i64, 1),
                    "{class} n={n}"
                );
            }
        }
    }

    #[test]
    fn unrestricted_is_rejected() {
        assert!(triangle(AvoidanceClass::Unrestricted, 3).is_err());
    }
}
