//! Riordan arrays, their group structure, A- and Z-sequences, and the
//! closed-form coefficient formulas of the path triangles.
//!
//! A Riordan array `(g, f)` is the lower-triangular matrix whose column `k`
//! has generating function `g f^k`. Products and inverses follow
//!
//! ```text
//! (g, f) * (h, l) = (g h(f), l(f))
//! (g, f)^-1       = (1 / g(fbar), fbar)      fbar = compositional inverse of f
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::series::{SeriesError, TruncatedSeries};
use crate::triangle::Triangle;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RiordanError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("g(0) must be nonzero")]
    ZeroG0,
    #[error("f must satisfy f(0) = 0 and f'(0) != 0")]
    InvalidF,
    #[error("{rows} rows requested but the series are only known to order {order}")]
    TooManyRows { rows: usize, order: usize },
    #[error("entry ({n}, {k}) is {value}, expected an integer")]
    NonIntegral {
        n: usize,
        k: usize,
        value: BigRational,
    },
    #[error("index ({n}, {k}) is out of range")]
    OutOfRange { n: i64, k: i64 },
    #[error("the A-sequence must start with a nonzero term")]
    ZeroA0,
    #[error("{rows} rows need {needed} sequence terms, only {available} given")]
    InsufficientTerms {
        rows: usize,
        needed: usize,
        available: usize,
    },
    #[error("re-indexing {rows} rows needs {needed} source rows, only {available} given")]
    InsufficientDepth {
        rows: usize,
        needed: usize,
        available: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RiordanArray {
    g: TruncatedSeries,
    f: TruncatedSeries,
}

impl RiordanArray {
    /// Validates and truncates both series to their common order.
    pub fn new(g: TruncatedSeries, f: TruncatedSeries) -> Result<Self, RiordanError> {
        let order = g.order().min(f.order());
        if order < 1 {
            return Err(RiordanError::InvalidF);
        }
        let (g, f) = (g.truncate(order), f.truncate(order));
        if g.coeff(0).is_zero() {
            return Err(RiordanError::ZeroG0);
        }
        if !f.coeff(0).is_zero() || f.coeff(1).is_zero() {
            return Err(RiordanError::InvalidF);
        }
        Ok(Self { g, f })
    }

    pub fn identity(order: usize) -> Self {
        Self {
            g: TruncatedSeries::one(order),
            f: TruncatedSeries::z(order),
        }
    }

    pub fn g(&self) -> &TruncatedSeries {
        &self.g
    }

    pub fn f(&self) -> &TruncatedSeries {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    /// `g f^k`.
    pub fn column(&self, k: usize) -> TruncatedSeries {
        &self.g * &self.f.pow(k)
    }

    /// Entries `[z^n] g f^k` for `0 <= k <= n < rows`.
    pub fn triangle(&self, rows: usize) -> Result<Triangle<BigRational>, RiordanError> {
        if rows > self.order() + 1 {
            return Err(RiordanError::TooManyRows {
                rows,
                order: self.order(),
            });
        }
        let mut t = Triangle::zeros(rows);
        let mut col = self.g.clone();
        for k in 0..rows {
            for n in k..rows {
                t.set(n, k, col.coeff(n));
            }
            col = &col * &self.f;
        }
        Ok(t)
    }

    pub fn integer_triangle(&self, rows: usize) -> Result<Triangle, RiordanError> {
        to_integer_triangle(&self.triangle(rows)?)
    }

    pub fn product(&self, other: &Self) -> Result<Self, RiordanError> {
        let g = &self.g * &other.g.compose(&self.f)?;
        let f = other.f.compose(&self.f)?;
        Self::new(g, f)
    }

    pub fn inverse(&self) -> Result<Self, RiordanError> {
        let fbar = self.f.comp_inverse()?;
        let g = self.g.compose(&fbar)?.recip()?;
        Self::new(g, fbar)
    }
}

/// The A-sequence `a_0, a_1, ...` and Z-sequence `z_0, z_1, ...`:
///
/// ```text
/// d(n+1, k+1) = sum_j a_j d(n, k+j)
/// d(n+1, 0)   = sum_j z_j d(n, j)
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AZSequences {
    pub a: Vec<BigRational>,
    pub z_seq: Vec<BigRational>,
}

/// From the inverse array `(d, h)`: `A = z / h` and `Z = (1 - d00 d) / h`,
/// where `d00 = g(0)` is the corner entry of the original array.
pub fn a_and_z_sequences(r: &RiordanArray, count: usize) -> Result<AZSequences, RiordanError> {
    let inv = r.inverse()?;
    let order = inv.order();
    let h = inv.f();
    let a = TruncatedSeries::z(order).div(h)?;
    let d00 = r.g().coeff(0);
    let num = &TruncatedSeries::one(order) - &inv.g().scale(&d00);
    let z = num.div(h)?;
    let available = a.order().min(z.order()) + 1;
    if count > available {
        return Err(RiordanError::InsufficientTerms {
            rows: count,
            needed: count,
            available,
        });
    }
    Ok(AZSequences {
        a: a.coeffs()[..count].to_vec(),
        z_seq: z.coeffs()[..count].to_vec(),
    })
}

/// Regenerates `rows` rows from the corner entry and the two sequences.
pub fn rebuild_from_az(
    row0: &BigRational,
    az: &AZSequences,
    rows: usize,
) -> Result<Triangle<BigRational>, RiordanError> {
    if az.a.first().is_none_or(Zero::is_zero) {
        return Err(RiordanError::ZeroA0);
    }
    let needed = rows.saturating_sub(1);
    let available = az.a.len().min(az.z_seq.len());
    if available < needed {
        return Err(RiordanError::InsufficientTerms {
            rows,
            needed,
            available,
        });
    }
    let mut t: Triangle<BigRational> = Triangle::zeros(rows);
    if rows == 0 {
        return Ok(t);
    }
    t.set(0, 0, row0.clone());
    for n in 0..rows - 1 {
        let prev = t.row(n).to_vec();
        let first: BigRational = prev.iter().zip(&az.z_seq).map(|(d, z)| d * z).sum();
        t.set(n + 1, 0, first);
        for k in 0..=n {
            let value: BigRational = prev[k..].iter().zip(&az.a).map(|(d, a)| d * a).sum();
            t.set(n + 1, k + 1, value);
        }
    }
    Ok(t)
}

/// `C(z) = (1 - sqrt(1 - 4z)) / (2z)`.
pub fn catalan(order: usize) -> Result<TruncatedSeries, RiordanError> {
    let n = order + 1;
    let root = TruncatedSeries::from_ints(&[1, -4], n).sqrt()?;
    let c = (&TruncatedSeries::one(n) - &root).div(&TruncatedSeries::monomial(2, 1, n))?;
    Ok(c.truncate(order))
}

/// `C(z(1 - z + z^2))`.
fn catalan_of_trinomial(order: usize) -> Result<TruncatedSeries, RiordanError> {
    let inner = TruncatedSeries::from_ints(&[0, 1, -1, 1], order);
    Ok(catalan(order)?.compose(&inner)?)
}

/// `(C(z(1-z+z^2)), z C(z(1-z+z^2)))`, the peak-less triangle.
pub fn peakless_array(order: usize) -> Result<RiordanArray, RiordanError> {
    let c = catalan_of_trinomial(order)?;
    let f = &TruncatedSeries::z(order) * &c;
    RiordanArray::new(c, f)
}

/// `((z^2-z+1) C(z(1-z+z^2))^2, z C(z(1-z+z^2)))`, the valley-less triangle.
pub fn valleyless_array(order: usize) -> Result<RiordanArray, RiordanError> {
    let c = catalan_of_trinomial(order)?;
    let g = &TruncatedSeries::from_ints(&[1, -1, 1], order) * &(&c * &c);
    let f = &TruncatedSeries::z(order) * &c;
    RiordanArray::new(g, f)
}

/// `t(z) = (1 + z(1-z)^2 - sqrt((1-3z+z^3)(1+z+z^3))) / (2z(1-z+z^2))`.
pub fn uuless_t(order: usize) -> Result<TruncatedSeries, RiordanError> {
    let n = order + 1;
    let disc = &TruncatedSeries::from_ints(&[1, -3, 0, 1], n)
        * &TruncatedSeries::from_ints(&[1, 1, 0, 1], n);
    let num = &TruncatedSeries::from_ints(&[1, 1, -2, 1], n) - &disc.sqrt()?;
    let den = TruncatedSeries::from_ints(&[0, 2, -2, 2], n);
    Ok(num.div(&den)?.truncate(order))
}

/// `(t(z), t(z) - 1)`, whose triangle is the re-indexed UU-less table.
pub fn uuless_g_array(order: usize) -> Result<RiordanArray, RiordanError> {
    let t = uuless_t(order)?;
    let f = &t - &TruncatedSeries::one(order);
    RiordanArray::new(t, f)
}

/// `g2 = (-1 + z^2 + sqrt(1 - 2z^2 + 4z^3 - 3z^4)) / (2z^3)`; the inverse of
/// the peak-less array is `(g2, z g2)`.
pub fn peakless_inverse_g2(order: usize) -> Result<TruncatedSeries, RiordanError> {
    let n = order + 3;
    let root = TruncatedSeries::from_ints(&[1, 0, -2, 4, -3], n).sqrt()?;
    let num = &TruncatedSeries::from_ints(&[-1, 0, 1], n) + &root;
    Ok(num
        .div(&TruncatedSeries::monomial(2, 3, n))?
        .truncate(order))
}

/// `A(z) = 2z^3 / (-1 + z^2 + sqrt(1 - 2z^2 + 4z^3 - 3z^4)) = 1 / g2`.
pub fn peakless_a_series(order: usize) -> Result<TruncatedSeries, RiordanError> {
    Ok(peakless_inverse_g2(order)?.recip()?)
}

/// `g(0,0) = 1` and `g(n,k) = t(n+k-1, k)` for `n >= 1`.
pub fn g_triangle_reindex(t: &Triangle, rows: usize) -> Result<Triangle, RiordanError> {
    let needed = (2 * rows).saturating_sub(2);
    if t.num_rows() < needed {
        return Err(RiordanError::InsufficientDepth {
            rows,
            needed,
            available: t.num_rows(),
        });
    }
    Ok(Triangle::from_fn(rows, |n, k| {
        if n == 0 {
            BigInt::one()
        } else {
            t.get((n + k - 1) as i64, k as i64)
        }
    }))
}

/// Binomial coefficient with arbitrary integer upper index:
/// `C(m, r) = m (m-1) ... (m-r+1) / r!` for `r >= 0`, and 0 for `r < 0`.
pub fn binomial(m: i64, r: i64) -> BigInt {
    if r < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..r {
        num *= BigInt::from(m - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

fn trinomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > 2 * n {
        return BigInt::zero();
    }
    let sum: BigInt = (0..=n)
        .map(|i| binomial(n, i) * binomial(n - i, k - 2 * i))
        .sum();
    if k % 2 == 0 {
        sum
    } else {
        -sum
    }
}

/// `a(n,k) = (-1)^k sum_i C(n,i) C(n-i,k-2i) = [z^k] (1 - z + z^2)^n`.
pub fn trinomial_a(n: i64, k: i64) -> Result<BigInt, RiordanError> {
    if n < 0 || k < 0 || k > 2 * n {
        return Err(RiordanError::OutOfRange { n, k });
    }
    Ok(trinomial(n, k))
}

fn closed_form(n: i64, k: i64, shift: i64) -> Result<BigInt, RiordanError> {
    if k < 0 || k > n {
        return Err(RiordanError::OutOfRange { n, k });
    }
    let mut sum = BigRational::zero();
    for j in 0..=n - k {
        let top = 2 * (n - j) - k + shift;
        let term = BigRational::new(BigInt::from(k + shift), BigInt::from(top))
            * BigRational::from_integer(
                binomial(top, n - k - j) * trinomial(n - k - j + shift - 1, j),
            );
        sum += term;
    }
    if !sum.is_integer() {
        return Err(RiordanError::NonIntegral {
            n: n as usize,
            k: k as usize,
            value: sum,
        });
    }
    Ok(sum.to_integer())
}

/// `t(n,k) = sum_{j=0}^{n-k} (k+1)/(2(n-j)-k+1) C(2(n-j)-k+1, n-k-j) a(n-k-j, j)`.
pub fn closed_form_peakless(n: i64, k: i64) -> Result<BigInt, RiordanError> {
    closed_form(n, k, 1)
}

/// `t(n,k) = sum_{j=0}^{n-k} (k+2)/(2(n-j)-k+2) C(2(n-j)-k+2, n-k-j) a(n-k-j+1, j)`.
pub fn closed_form_valleyless(n: i64, k: i64) -> Result<BigInt, RiordanError> {
    closed_form(n, k, 2)
}

/// `a(0) = 1` and, for `n >= 1`,
/// `a(n) = (-1)^(n+1) sum_{k=1}^n sum_{j=0}^k (1/k) C(j, n-k-j) C(k, j) C(n-k-2, k-1)`.
///
/// `C(n-k-2, k-1)` is read with the general binomial when `n - k - 2 < 0`;
/// with those terms set to zero instead, `a(1)` would come out as 0.
pub fn explicit_a(n: i64) -> Result<BigInt, RiordanError> {
    if n < 0 {
        return Err(RiordanError::OutOfRange { n, k: 0 });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut sum = BigRational::zero();
    for k in 1..=n {
        let outer = binomial(n - k - 2, k - 1);
        if outer.is_zero() {
            continue;
        }
        for j in 0..=k {
            let b = binomial(j, n - k - j) * binomial(k, j) * &outer;
            sum += BigRational::new(b, BigInt::from(k));
        }
    }
    if !sum.is_integer() {
        return Err(RiordanError::NonIntegral {
            n: n as usize,
            k: 0,
            value: sum,
        });
    }
    let value = sum.to_integer();
    Ok(if n % 2 == 1 { value } else { -value })
}

/// Rational triangle to integers, failing on the first fractional entry.
pub fn to_integer_triangle(t: &Triangle<BigRational>) -> Result<Triangle, RiordanError> {
    for (n, row) in t.rows().iter().enumerate() {
        if let Some((k, value)) = row.iter().enumerate().find(|(_, v)| !v.is_integer()) {
            return Err(RiordanError::NonIntegral {
                n,
                k,
                value: value.clone(),
            });
        }
    }
    Ok(t.map(|v| v.to_integer()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::count_table_brute;
    use crate::path::AvoidanceClass;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn rats(v: &[BigRational]) -> Vec<BigInt> {
        v.iter().map(|x| x.to_integer()).collect()
    }

    fn random_array(rng: &mut StdRng, order: usize) -> RiordanArray {
        let mut g = vec![1i64];
        let mut f = vec![0i64, 1];
        g.extend((1..=order).map(|_| rng.gen_range(-3..=3)));
        f.extend((2..=order).map(|_| rng.gen_range(-3..=3)));
        RiordanArray::new(
            TruncatedSeries::from_ints(&g, order),
            TruncatedSeries::from_ints(&f, order),
        )
        .unwrap()
    }

    fn identity_matrix(rows: usize) -> Triangle<BigRational> {
        Triangle::from_fn(rows, |n, k| {
            if n == k {
                BigRational::one()
            } else {
                BigRational::zero()
            }
        })
    }

    #[test]
    fn named_arrays_match_enumeration() {
        let order = 16;
        let peak = peakless_array(order).unwrap().integer_triangle(13).unwrap();
        assert_eq!(peak, count_table_brute(12, AvoidanceClass::PeakLess).total);
        assert_eq!(peak.row(5), &ints(&[12, 15, 13, 10, 5, 1])[..]);
        let valley = valleyless_array(order)
            .unwrap()
            .integer_triangle(13)
            .unwrap();
        assert_eq!(
            valley,
            count_table_brute(12, AvoidanceClass::ValleyLess).total
        );
        assert_eq!(valley.row(4), &ints(&[12, 10, 7, 4, 1])[..]);
        let g = uuless_g_array(order).unwrap().integer_triangle(9).unwrap();
        let t = count_table_brute(16, AvoidanceClass::DoubleRiseLess).total;
        assert_eq!(g, g_triangle_reindex(&t, 9).unwrap());
        assert_eq!(
            g.row(8),
            &ints(&[112, 298, 372, 319, 203, 97, 34, 8, 1])[..]
        );
        assert_eq!(g.row(4), &ints(&[4, 9, 8, 4, 1])[..]);
    }

    #[test]
    fn reindex_depth() {
        let t = count_table_brute(10, AvoidanceClass::DoubleRiseLess).total;
        assert_eq!(
            g_triangle_reindex(&t, 9),
            Err(RiordanError::InsufficientDepth {
                rows: 9,
                needed: 16,
                available: 11
            })
        );
        assert_eq!(g_triangle_reindex(&t, 2).unwrap().get(1, 0), BigInt::one());
    }

    #[test]
    fn uuless_t_from_kernel_root() {
        let order = 20;
        let w = crate::genfun::kernel_roots(AvoidanceClass::DoubleRiseLess, order + 1)
            .unwrap()
            .w;
        let from_root = &w.div_z_pow(1).unwrap() + &TruncatedSeries::one(order);
        assert_eq!(uuless_t(order).unwrap(), from_root);
    }

    #[test]
    fn peakless_inverse_and_sequences() {
        let order = 20;
        let r = peakless_array(order).unwrap();
        let inv = r.inverse().unwrap();
        let g2 = peakless_inverse_g2(order).unwrap();
        assert_eq!(inv.g(), &g2);
        assert_eq!(inv.f(), &(&TruncatedSeries::z(order) * &g2));

        let listed = ints(&[1, 1, 0, 1, 0, 1, -1, 2, -3, 6, -10]);
        let az = a_and_z_sequences(&r, 11).unwrap();
        assert_eq!(rats(&az.a), listed);
        assert_eq!(rats(&az.z_seq[..10]), listed[1..]);
        let a_gf = peakless_a_series(10).unwrap().to_integers().unwrap();
        assert_eq!(a_gf, listed);
        let explicit: Vec<BigInt> = (0..=10).map(|n| explicit_a(n).unwrap()).collect();
        assert_eq!(explicit, listed);
        let a_gf = peakless_a_series(24).unwrap().to_integers().unwrap();
        for (n, a) in a_gf.iter().enumerate() {
            assert_eq!(&explicit_a(n as i64).unwrap(), a, "a({n})");
        }
    }

    #[test]
    fn rebuild_reproduces_triangles() {
        for r in [
            peakless_array(16).unwrap(),
            valleyless_array(16).unwrap(),
            uuless_g_array(16).unwrap(),
        ] {
            let az = a_and_z_sequences(&r, 13).unwrap();
            let rebuilt = rebuild_from_az(&r.g().coeff(0), &az, 13).unwrap();
            assert_eq!(rebuilt, r.triangle(13).unwrap());
        }
        let trivial = RiordanArray::identity(6);
        let az = a_and_z_sequences(&trivial, 5).unwrap();
        assert_eq!(rats(&az.a), ints(&[1, 0, 0, 0, 0]));
        assert_eq!(rats(&az.z_seq), ints(&[0, 0, 0, 0, 0]));
        assert_eq!(
            rebuild_from_az(&BigRational::one(), &az, 5).unwrap(),
            identity_matrix(5)
        );
        let bad = AZSequences {
            a: vec![BigRational::zero()],
            z_seq: vec![BigRational::zero()],
        };
        assert_eq!(
            rebuild_from_az(&BigRational::one(), &bad, 2),
            Err(RiordanError::ZeroA0)
        );
    }

    #[test]
    fn column_zero_from_a_sequence() {
        let t = count_table_brute(12, AvoidanceClass::PeakLess).total;
        let a: Vec<BigInt> = (0..=13).map(|n| explicit_a(n).unwrap()).collect();
        for n in 0..12 {
            let next: BigInt = (0..=n).map(|j| &a[j + 1] * t.get(n as i64, j as i64)).sum();
            assert_eq!(next, t.get(n as i64 + 1, 0), "t_{}", n + 1);
            for k in 0..=n {
                let inner: BigInt = (0..=n - k)
                    .map(|j| &a[j] * t.get(n as i64, (k + j) as i64))
                    .sum();
                assert_eq!(inner, t.get(n as i64 + 1, k as i64 + 1));
            }
        }
    }

    #[test]
    fn trinomial_matches_expansion() {
        let base = TruncatedSeries::from_ints(&[1, -1, 1], 16);
        for n in 0..=8 {
            let expansion = base.pow(n as usize).to_integers().unwrap();
            for k in 0..=2 * n {
                assert_eq!(
                    trinomial_a(n, k).unwrap(),
                    expansion[k as usize],
                    "a({n},{k})"
                );
            }
        }
        assert_eq!(trinomial_a(0, 0).unwrap(), BigInt::one());
        assert_eq!(trinomial_a(1, 1).unwrap(), BigInt::from(-1));
        assert_eq!(
            trinomial_a(1, 3),
            Err(RiordanError::OutOfRange { n: 1, k: 3 })
        );
    }

    #[test]
    fn closed_forms_match_enumeration() {
        let peak = count_table_brute(12, AvoidanceClass::PeakLess).total;
        let valley = count_table_brute(12, AvoidanceClass::ValleyLess).total;
        for n in 0..=12i64 {
            for k in 0..=n {
                assert_eq!(
                    closed_form_peakless(n, k).unwrap(),
                    peak.get(n, k),
                    "peak ({n},{k})"
                );
                assert_eq!(
                    closed_form_valleyless(n, k).unwrap(),
                    valley.get(n, k),
                    "valley ({n},{k})"
                );
            }
        }
        assert_eq!(closed_form_peakless(5, 1).unwrap(), BigInt::from(15));
        assert_eq!(closed_form_valleyless(4, 0).unwrap(), BigInt::from(12));
        assert!(closed_form_peakless(2, 3).is_err());
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial(4, -1), BigInt::zero());
    }

    #[test]
    fn validation() {
        let z = TruncatedSeries::z(4);
        let one = TruncatedSeries::one(4);
        assert_eq!(
            RiordanArray::new(TruncatedSeries::zero(4), z.clone()),
            Err(RiordanError::ZeroG0)
        );
        assert_eq!(
            RiordanArray::new(one.clone(), one.clone()),
            Err(RiordanError::InvalidF)
        );
        assert_eq!(RiordanArray::new(one, &z * &z), Err(RiordanError::InvalidF));
        assert!(matches!(
            RiordanArray::identity(4).triangle(6),
            Err(RiordanError::TooManyRows { rows: 6, order: 4 })
        ));
    }

    #[test]
    fn group_laws_on_random_arrays() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        let order = 11;
        let rows = 10;
        let id = RiordanArray::identity(order);
        for _ in 0..20 {
            let r1 = random_array(&mut rng, order);
            let r2 = random_array(&mut rng, order);
            let r3 = random_array(&mut rng, order);
            let m1 = r1.triangle(rows).unwrap();
            let m2 = r2.triangle(rows).unwrap();
            let m3 = r3.triangle(rows).unwrap();
            let p12 = r1.product(&r2).unwrap();
            assert_eq!(p12.triangle(rows).unwrap(), m1.matmul(&m2));
            let left = p12.product(&r3).unwrap();
            let right = r1.product(&r2.product(&r3).unwrap()).unwrap();
            assert_eq!(left, right);
            assert_eq!(left.triangle(rows).unwrap(), m1.matmul(&m2).matmul(&m3));
            assert_eq!(r1.product(&id).unwrap(), r1);
            assert_eq!(id.product(&r1).unwrap(), r1);
            let inv = r1.inverse().unwrap();
            assert_eq!(r1.product(&inv).unwrap(), id);
            assert_eq!(inv.inverse().unwrap(), r1);
            assert_eq!(
                inv.triangle(rows).unwrap().matmul(&m1),
                identity_matrix(rows)
            );
        }
    }

    #[test]
    fn group_laws_on_named_arrays() {
        let order = 14;
        let rows = 12;
        let named = [
            peakless_array(order).unwrap(),
            valleyless_array(order).unwrap(),
            uuless_g_array(order).unwrap(),
        ];
        let id = RiordanArray::identity(order);
        for r in &named {
            let inv = r.inverse().unwrap();
            assert_eq!(r.product(&inv).unwrap(), id);
            assert_eq!(inv.product(r).unwrap(), id);
            assert_eq!(&inv.inverse().unwrap(), r);
            let m = r.triangle(rows).unwrap();
            assert_eq!(
                inv.triangle(rows).unwrap().matmul(&m),
                identity_matrix(rows)
            );
            assert_eq!(
                m.matmul(&inv.triangle(rows).unwrap()),
                identity_matrix(rows)
            );
        }
        for a in &named {
            for b in &named {
                let p = a.product(b).unwrap();
                assert_eq!(
                    p.triangle(rows).unwrap(),
                    a.triangle(rows).unwrap().matmul(&b.triangle(rows).unwrap())
                );
            }
        }
        assert_eq!(id.inverse().unwrap(), id);
    }

    #[test]
    fn catalan_numbers() {
        assert_eq!(
            catalan(5).unwrap().to_integers().unwrap(),
            ints(&[1, 1, 2, 5, 14, 42])
        );
        assert_eq!(
            catalan_of_trinomial(6).unwrap().to_integers().unwrap(),
            ints(&[1, 1, 1, 2, 5, 12, 29])
        );
    }
}
