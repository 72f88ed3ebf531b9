//! Generating functions from the kernel method.
//!
//! For each avoidance class the series `f_k`, `g_k`, `h_k` (paths ending at
//! height `k` with an up, down or horizontal step) satisfy a linear system
//! whose kernel is quadratic in the catalytic variable `u`. Its small root
//! `s` is a power series; the large root `r` has a pole at `z = 0`, so
//! every formula here is written in `w = 1/r` instead:
//!
//! | class       | kernel                                   | `w`                              |
//! |-------------|------------------------------------------|----------------------------------|
//! | peak-less   | `u^2 z + z^2 - u - z + 1`                | `2z / (1 + sqrt(1-4z+4z^2-4z^3))` |
//! | valley-less | same                                     | same                             |
//! | UU-less     | `u^2 z^2 + u(z^3 + z - 1) + z^2 - z + 1` | `2z^2 / (1 - z - z^3 + sqrt(D))` |
//!
//! with `D = z^6 - 2z^4 + 2z^3 - 3z^2 - 2z + 1`.

use num_bigint::BigInt;
use thiserror::Error;

use crate::path::AvoidanceClass;
use crate::series::{SeriesError, TruncatedSeries};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenfunError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("no generating function is implemented for class `{0}`")]
    Unsupported(AvoidanceClass),
    #[error("residual of `{equation}` at k = {k} is nonzero from z^{valuation} on")]
    ResidualNonzero {
        equation: String,
        k: usize,
        valuation: usize,
    },
    #[error("order must be at least 2, got {0}")]
    OrderTooSmall(usize),
}

/// Roots of the kernel, as power series truncated at `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelRoots {
    pub class: AvoidanceClass,
    /// `1/r`.
    pub w: TruncatedSeries,
    pub s: TruncatedSeries,
    /// The polynomial under the square root.
    pub discriminant: TruncatedSeries,
}

impl KernelRoots {
    pub fn order(&self) -> usize {
        self.w.order().min(self.s.order())
    }

    /// The defining quadratic of `w`:
    /// `(z^2 - z + 1) w^2 - w + z` for the peak- and valley-less kernels,
    /// `(z^2 - z + 1) w^2 + (z^3 + z - 1) w + z^2` for the UU-less one.
    pub fn quadratic_residual(&self) -> TruncatedSeries {
        let n = self.order();
        let w = self.w.truncate(n);
        let c2 = TruncatedSeries::from_ints(&[1, -1, 1], n);
        match self.class {
            AvoidanceClass::DoubleRiseLess => {
                let c1 = TruncatedSeries::from_ints(&[-1, 1, 0, 1], n);
                let c0 = TruncatedSeries::monomial(1, 2, n);
                &(&(&c2 * &(&w * &w)) + &(&c1 * &w)) + &c0
            }
            _ => &(&(&c2 * &(&w * &w)) - &w) + &TruncatedSeries::z(n),
        }
    }

    /// Root-sum relation `r + s = 1/z` (resp. `(1 - z - z^3)/z^2`), cleared
    /// of denominators: `z s w + z - w` (resp. `z^2 s w + z^2 - (1 - z - z^3) w`).
    pub fn root_sum_residual(&self) -> TruncatedSeries {
        let n = self.order();
        let w = self.w.truncate(n);
        let s = self.s.truncate(n);
        let sw = &s * &w;
        match self.class {
            AvoidanceClass::DoubleRiseLess => {
                let z2 = TruncatedSeries::monomial(1, 2, n);
                let lin = TruncatedSeries::from_ints(&[1, -1, 0, -1], n);
                &(&(&z2 * &sw) + &z2) - &(&lin * &w)
            }
            _ => {
                let z = TruncatedSeries::z(n);
                &(&(&z * &sw) + &z) - &w
            }
        }
    }
}

/// `f_k`, `g_k`, `h_k` and their sum for one end height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffFamily {
    pub class: AvoidanceClass,
    pub k: usize,
    pub f: TruncatedSeries,
    pub g: TruncatedSeries,
    pub h: TruncatedSeries,
    pub total: TruncatedSeries,
}

/// Kernel data for one class, computed with enough headroom that every
/// derived series is exact up to `order`.
#[derive(Clone, Debug)]
pub struct GenFun {
    class: AvoidanceClass,
    order: usize,
    roots: KernelRoots,
}

/// Precision lost to divisions by powers of `z` along the way.
const HEADROOM: usize = 4;

impl GenFun {
    pub fn new(class: AvoidanceClass, order: usize) -> Result<Self, GenfunError> {
        if order < 2 {
            return Err(GenfunError::OrderTooSmall(order));
        }
        let roots = compute_roots(class, order + HEADROOM)?;
        Ok(Self {
            class,
            order,
            roots,
        })
    }

    pub fn class(&self) -> AvoidanceClass {
        self.class
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn roots(&self) -> KernelRoots {
        KernelRoots {
            class: self.class,
            w: self.roots.w.truncate(self.order),
            s: self.roots.s.truncate(self.order),
            discriminant: self.roots.discriminant.truncate(self.order),
        }
    }

    fn work_order(&self) -> usize {
        self.roots.order()
    }

    fn finish(&self, s: TruncatedSeries) -> TruncatedSeries {
        s.truncate(self.order)
    }

    /// `f_k`, `g_k`, `h_k` in terms of `w = 1/r` and `s`:
    ///
    /// - peak-less: `1/r^k`, `(s-1)/r^(k+1)`, `1/r^(k+1)`
    /// - valley-less: `1/r^k`, `(s-1)/(z r^(k+1))`, `s/r^(k+1)`
    /// - UU-less, `k >= 1`: `1/(z r^k)`, `(s+z)/r^(k+1)`, `(1+zr)/(z r^(k+1))`,
    ///   the last one taken as `w^(k+1)/z + w^k`; at `k = 0`:
    ///   `1`, `(s+z)/r`, `1/(zr)`.
    pub fn family(&self, k: usize) -> Result<CoeffFamily, GenfunError> {
        let n = self.work_order();
        let w = &self.roots.w;
        let s = &self.roots.s;
        let one = TruncatedSeries::one(n);
        let z = TruncatedSeries::z(n);
        let wk = w.pow(k);
        let wk1 = &wk * w;
        let (f, g, h) = match self.class {
            AvoidanceClass::PeakLess => (wk, &(s - &one) * &wk1, wk1),
            AvoidanceClass::ValleyLess => {
                let g = (&(s - &one) * &wk1).div_z_pow(1)?;
                (wk, g, s * &wk1)
            }
            AvoidanceClass::DoubleRiseLess => {
                let s_plus_z = s + &z;
                if k == 0 {
                    (one, &s_plus_z * w, w.div_z_pow(1)?)
                } else {
                    let f = wk.div_z_pow(1)?;
                    let h = &wk1.div_z_pow(1)? + &wk;
                    (f, &s_plus_z * &wk1, h)
                }
            }
            AvoidanceClass::Unrestricted => return Err(GenfunError::Unsupported(self.class)),
        };
        let total = self.total_column(k)?;
        Ok(CoeffFamily {
            class: self.class,
            k,
            f: self.finish(f),
            g: self.finish(g),
            h: self.finish(h),
            total,
        })
    }

    /// `[u^k] Total(z, u)`:
    ///
    /// - peak-less: `1/(z r^(k+1)) = w^(k+1)/z`
    /// - valley-less: `s/(z r^(k+1)) = s w^(k+1)/z`
    /// - UU-less: `1/(z^2 r) = w/z^2` at `k = 0`, otherwise
    ///   `(rz+1)/(z^2 r^(k+1)) = w^(k+1)/z^2 + w^k/z`.
    pub fn total_column(&self, k: usize) -> Result<TruncatedSeries, GenfunError> {
        let w = &self.roots.w;
        let wk1 = w.pow(k + 1);
        let col = match self.class {
            AvoidanceClass::PeakLess => wk1.div_z_pow(1)?,
            AvoidanceClass::ValleyLess => (&self.roots.s * &wk1).div_z_pow(1)?,
            AvoidanceClass::DoubleRiseLess if k == 0 => w.div_z_pow(2)?,
            AvoidanceClass::DoubleRiseLess => {
                let wk = w.pow(k);
                &wk1.div_z_pow(2)? + &wk.div_z_pow(1)?
            }
            AvoidanceClass::Unrestricted => return Err(GenfunError::Unsupported(self.class)),
        };
        Ok(self.finish(col))
    }

    /// `Total(z, 1)`, the row sums, using `1/(r-1) = w/(1-w)`:
    /// `1/(z(r-1))`, `s/(z(r-1))` and `(1+z)/((r-1) z^2)` respectively.
    pub fn total_at_one(&self) -> Result<TruncatedSeries, GenfunError> {
        let n = self.work_order();
        let w = &self.roots.w;
        let one = TruncatedSeries::one(n);
        let inv_r_minus_1 = w.div(&(&one - w))?;
        let t = match self.class {
            AvoidanceClass::PeakLess => inv_r_minus_1.div_z_pow(1)?,
            AvoidanceClass::ValleyLess => (&self.roots.s * &inv_r_minus_1).div_z_pow(1)?,
            AvoidanceClass::DoubleRiseLess => {
                let one_plus_z = TruncatedSeries::from_ints(&[1, 1], n);
                (&one_plus_z * &inv_r_minus_1).div_z_pow(2)?
            }
            AvoidanceClass::Unrestricted => return Err(GenfunError::Unsupported(self.class)),
        };
        Ok(self.finish(t))
    }

    /// Substitutes the closed forms into the class's functional-equation
    /// system for every `k <= order`. Tail sums stop at `l = order`: a path
    /// ending at height `l` has length at least `l`, so the omitted terms
    /// vanish modulo `z^(order+1)` and the check is exact.
    pub fn verify_system(&self) -> Result<SystemReport, GenfunError> {
        let n = self.order;
        let families: Vec<CoeffFamily> = (0..=n + 1)
            .map(|k| self.family(k))
            .collect::<Result<_, _>>()?;
        let z = TruncatedSeries::z(n);
        let zero = TruncatedSeries::zero(n);
        let tail = |k: usize, pick: &dyn Fn(&CoeffFamily) -> &TruncatedSeries| {
            families[k + 1..=n]
                .iter()
                .fold(zero.clone(), |acc, fam| &acc + pick(fam))
        };
        let mut checks = Vec::new();
        let mut push = |equation: &str, k: usize, residual: TruncatedSeries| {
            checks.push(Residual {
                equation: equation.to_string(),
                k,
                valuation: residual.valuation(),
            });
        };
        for k in 0..=n {
            let fam = &families[k];
            let all = &(&fam.f + &fam.g) + &fam.h;
            push("h_k = z(f_k + g_k + h_k)", k, &fam.h - &(&z * &all));
            push("total_k = f_k + g_k + h_k", k, &fam.total - &all);
            let prev = k.checked_sub(1).map(|j| &families[j]);
            match self.class {
                AvoidanceClass::PeakLess => {
                    let rhs = match prev {
                        None => TruncatedSeries::one(n),
                        Some(p) => &z * &(&(&p.f + &p.g) + &p.h),
                    };
                    push("f_k = z(f_{k-1} + g_{k-1} + h_{k-1})", k, &fam.f - &rhs);
                    push(
                        "g_k = z sum_{l>k} h_l",
                        k,
                        &fam.g - &(&z * &tail(k, &|f| &f.h)),
                    );
                }
                AvoidanceClass::ValleyLess | AvoidanceClass::DoubleRiseLess => {
                    let rhs = match (self.class, prev) {
                        (_, None) => TruncatedSeries::one(n),
                        (AvoidanceClass::ValleyLess, Some(p)) => &z * &(&p.f + &p.h),
                        (_, Some(p)) if k == 1 => &z * &(&(&TruncatedSeries::one(n) + &p.g) + &p.h),
                        (_, Some(p)) => &z * &(&p.g + &p.h),
                    };
                    let label = match self.class {
                        AvoidanceClass::ValleyLess => "f_k = z(f_{k-1} + h_{k-1})",
                        _ if k == 1 => "f_1 = z + z g_0 + z h_0",
                        _ => "f_k = z(g_{k-1} + h_{k-1})",
                    };
                    push(label, k, &fam.f - &rhs);
                    let sums = &tail(k, &|f| &f.f) + &tail(k, &|f| &f.h);
                    push("g_k = z sum_{l>k} (f_l + h_l)", k, &fam.g - &(&z * &sums));
                }
                AvoidanceClass::Unrestricted => unreachable!("rejected by family()"),
            }
        }
        // scalar relations between F(1) and H(1)
        let f1 = families[..=n]
            .iter()
            .fold(zero.clone(), |acc, fam| &acc + &fam.f);
        let h1 = families[..=n]
            .iter()
            .fold(zero.clone(), |acc, fam| &acc + &fam.h);
        let one = TruncatedSeries::one(n);
        match self.class {
            AvoidanceClass::PeakLess => push("F(1) - H(1) = 1", 0, &(&f1 - &h1) - &one),
            AvoidanceClass::ValleyLess => {
                let lhs = &TruncatedSeries::from_ints(&[1, -1], n) * &f1;
                push("(1 - z)F(1) = 1 + zH(1)", 0, &lhs - &(&one + &(&z * &h1)));
            }
            AvoidanceClass::DoubleRiseLess => {
                let rhs = &TruncatedSeries::from_ints(&[1, 1], n) * &(&f1 - &one);
                push("H(1) = (1 + z)(F(1) - 1)", 0, &h1 - &rhs);
            }
            AvoidanceClass::Unrestricted => {}
        }
        let roots = self.roots();
        push("kernel quadratic in w", 0, roots.quadratic_residual());
        push("root sum r + s", 0, roots.root_sum_residual());

        let report = SystemReport {
            class: self.class,
            order: n,
            checks,
        };
        if let Some(bad) = report.checks.iter().find(|c| c.valuation.is_some()) {
            return Err(GenfunError::ResidualNonzero {
                equation: bad.equation.clone(),
                k: bad.k,
                valuation: bad.valuation.unwrap_or_default(),
            });
        }
        Ok(report)
    }
}

fn compute_roots(class: AvoidanceClass, order: usize) -> Result<KernelRoots, GenfunError> {
    let one = TruncatedSeries::one(order);
    match class {
        AvoidanceClass::PeakLess | AvoidanceClass::ValleyLess => {
            // r, s = (1 +- sqrt(1 - 4z + 4z^2 - 4z^3)) / (2z)
            let disc = TruncatedSeries::from_ints(&[1, -4, 4, -4], order);
            let root = disc.sqrt()?;
            let w = TruncatedSeries::monomial(2, 1, order).div(&(&one + &root))?;
            let s = (&one - &root).div(&TruncatedSeries::monomial(2, 1, order))?;
            Ok(KernelRoots {
                class,
                w,
                s,
                discriminant: disc,
            })
        }
        AvoidanceClass::DoubleRiseLess => {
            // r, s = (1 - z - z^3 +- sqrt(D)) / (2z^2)
            let disc = TruncatedSeries::from_ints(&[1, -2, -3, 2, -2, 0, 1], order);
            let root = disc.sqrt()?;
            let lin = TruncatedSeries::from_ints(&[1, -1, 0, -1], order);
            let w = TruncatedSeries::monomial(2, 2, order).div(&(&lin + &root))?;
            let s = (&lin - &root).div(&TruncatedSeries::monomial(2, 2, order))?;
            Ok(KernelRoots {
                class,
                w,
                s,
                discriminant: disc,
            })
        }
        AvoidanceClass::Unrestricted => Err(GenfunError::Unsupported(class)),
    }
}

/// One substituted equation: `valuation` is `None` when the residual
/// vanishes identically up to the truncation order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub equation: String,
    pub k: usize,
    pub valuation: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemReport {
    pub class: AvoidanceClass,
    pub order: usize,
    pub checks: Vec<Residual>,
}

impl SystemReport {
    pub fn all_zero(&self) -> bool {
        self.checks.iter().all(|c| c.valuation.is_none())
    }
}

pub fn kernel_roots(class: AvoidanceClass, order: usize) -> Result<KernelRoots, GenfunError> {
    Ok(GenFun::new(class, order)?.roots())
}

pub fn coeff_family(
    class: AvoidanceClass,
    k: usize,
    order: usize,
) -> Result<CoeffFamily, GenfunError> {
    GenFun::new(class, order)?.family(k)
}

pub fn total_column(
    class: AvoidanceClass,
    k: usize,
    order: usize,
) -> Result<TruncatedSeries, GenfunError> {
    GenFun::new(class, order)?.total_column(k)
}

pub fn total_at_one(class: AvoidanceClass, order: usize) -> Result<TruncatedSeries, GenfunError> {
    GenFun::new(class, order)?.total_at_one()
}

pub fn verify_system(class: AvoidanceClass, order: usize) -> Result<SystemReport, GenfunError> {
    GenFun::new(class, order)?.verify_system()
}

/// `t(n, k)` for `n < rows` by coefficient extraction from the columns.
/// Integrality and non-negativity of every coefficient are enforced.
pub fn triangle_from_series(
    class: AvoidanceClass,
    rows: usize,
) -> Result<crate::Triangle, GenfunError> {
    let gf = GenFun::new(class, rows.max(2))?;
    let mut tri = crate::Triangle::zeros(rows);
    for k in 0..rows {
        let col = gf.total_column(k)?.to_counts()?;
        for (n, v) in col.into_iter().enumerate().take(rows).skip(k) {
            tri.set(n, k, v);
        }
    }
    Ok(tri)
}

/// Leading coefficients of a count series as integers.
pub fn counts(series: &TruncatedSeries, terms: usize) -> Result<Vec<BigInt>, GenfunError> {
    Ok(series.truncate(terms - 1).to_counts()?)
}
