//! Constructive bijections:
//!
//! - `psi`: peak-less MAP of length `n` onto Dyck paths in `D_n(2,1)`,
//! - `phi`: valley-less MAP of length `n` onto peak-less MAP of length `n+1`,
//! - `chi`: UU-less MAP of length `n` onto Motzkin paths of length `n`
//!   without `UHU`.
//!
//! Each map is driven by a first-arch (or last-arch) decomposition of its
//! argument; [`Decomposition`] records the grammar case and components.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::enumerate::{enumerate_dyck_21, enumerate_map, enumerate_motzkin_uhu};
use crate::path::{AvoidanceClass, LatticePath, PathError, Step};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("path {path} is not {class}")]
    NotInClass { path: String, class: AvoidanceClass },
    #[error("path {0} does not end on the x-axis")]
    NotMap(String),
    #[error("the empty path has no decomposition")]
    EmptyPath,
    #[error("sharp of {0} would create the peak UD")]
    WouldCreatePeak(String),
    #[error("sharp does not apply to {path}: {reason}")]
    NotSharpable { path: String, reason: String },
    #[error("counterexample {path}: {reason}")]
    CounterexampleFound { path: String, reason: String },
    #[error("unknown bijection `{0}` (expected psi, phi or chi)")]
    UnknownBijection(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BijectionName {
    Psi,
    Phi,
    Chi,
}

impl BijectionName {
    pub const ALL: [BijectionName; 3] =
        [BijectionName::Psi, BijectionName::Phi, BijectionName::Chi];

    pub fn domain_class(self) -> AvoidanceClass {
        match self {
            BijectionName::Psi => AvoidanceClass::PeakLess,
            BijectionName::Phi => AvoidanceClass::ValleyLess,
            BijectionName::Chi => AvoidanceClass::DoubleRiseLess,
        }
    }

    pub fn apply(self, path: &LatticePath) -> Result<LatticePath, BijectionError> {
        match self {
            BijectionName::Psi => psi(path),
            BijectionName::Phi => phi(path),
            BijectionName::Chi => chi(path),
        }
    }
}

impl fmt::Display for BijectionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BijectionName::Psi => "psi",
            BijectionName::Phi => "phi",
            BijectionName::Chi => "chi",
        })
    }
}

impl FromStr for BijectionName {
    type Err = BijectionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "psi" => Ok(BijectionName::Psi),
            "phi" => Ok(BijectionName::Phi),
            "chi" => Ok(BijectionName::Chi),
            other => Err(BijectionError::UnknownBijection(other.to_string())),
        }
    }
}

/// One step of a grammar parse. Components are stored re-based at height 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// `ε`.
    Empty,
    /// `H alpha` (peak-less and UU-less grammars).
    LeadingH { alpha: LatticePath },
    /// `U alpha_1 U alpha_2 ... U alpha_k H D_k beta`.
    Spine {
        alphas: Vec<LatticePath>,
        beta: LatticePath,
    },
    /// `alpha H`.
    TrailingH { alpha: LatticePath },
    /// `U alpha D`, or `beta H U alpha D` when `beta` is present.
    Arch {
        beta: Option<LatticePath>,
        alpha: LatticePath,
    },
    /// `U gamma D_k` with `k >= 2`, or `beta H U gamma D_k`.
    RaisedArch {
        beta: Option<LatticePath>,
        gamma: LatticePath,
        k: u32,
    },
    /// `U D alpha`.
    UpDown { alpha: LatticePath },
    /// `U H D alpha`.
    UpHDown { alpha: LatticePath },
    /// `U H alpha H D beta`.
    HArch {
        alpha: LatticePath,
        beta: LatticePath,
    },
    /// `U H^k gamma D_i beta` with `i >= 2` and `k` maximal.
    HRaisedArch {
        k: usize,
        gamma: LatticePath,
        i: u32,
        beta: LatticePath,
    },
}

impl Decomposition {
    pub fn case_label(&self) -> &'static str {
        match self {
            Decomposition::Empty => "(i)",
            Decomposition::LeadingH { .. } | Decomposition::TrailingH { .. } => "(ii)",
            Decomposition::Spine { .. } | Decomposition::UpDown { .. } => "(iii)",
            Decomposition::Arch { beta: None, .. } => "(iii)",
            Decomposition::Arch { beta: Some(_), .. } => "(iv)",
            Decomposition::UpHDown { .. } => "(iv)",
            Decomposition::RaisedArch { beta: None, .. } | Decomposition::HArch { .. } => "(v)",
            Decomposition::RaisedArch { beta: Some(_), .. } | Decomposition::HRaisedArch { .. } => {
                "(vi)"
            }
        }
    }

    /// Concatenates the components back into the decomposed path.
    pub fn reassemble(&self) -> Result<LatticePath, PathError> {
        use Step::{Horizontal as H, Up as U};
        let mut out: Vec<Step> = Vec::new();
        match self {
            Decomposition::Empty => {}
            Decomposition::LeadingH { alpha } => {
                out.push(H);
                out.extend_from_slice(alpha.steps());
            }
            Decomposition::Spine { alphas, beta } => {
                for alpha in alphas {
                    out.push(U);
                    out.extend_from_slice(alpha.steps());
                }
                out.extend([H, Step::Down(alphas.len() as u32)]);
                out.extend_from_slice(beta.steps());
            }
            Decomposition::TrailingH { alpha } => {
                out.extend_from_slice(alpha.steps());
                out.push(H);
            }
            Decomposition::Arch { beta, alpha } => {
                if let Some(beta) = beta {
                    out.extend_from_slice(beta.steps());
                    out.push(H);
                }
                out.push(U);
                out.extend_from_slice(alpha.steps());
                out.push(Step::D);
            }
            Decomposition::RaisedArch { beta, gamma, k } => {
                if let Some(beta) = beta {
                    out.extend_from_slice(beta.steps());
                    out.push(H);
                }
                out.push(U);
                out.extend_from_slice(gamma.steps());
                out.push(Step::Down(*k));
            }
            Decomposition::UpDown { alpha } => {
                out.extend([U, Step::D]);
                out.extend_from_slice(alpha.steps());
            }
            Decomposition::UpHDown { alpha } => {
                out.extend([U, H, Step::D]);
                out.extend_from_slice(alpha.steps());
            }
            Decomposition::HArch { alpha, beta } => {
                out.extend([U, H]);
                out.extend_from_slice(alpha.steps());
                out.extend([H, Step::D]);
                out.extend_from_slice(beta.steps());
            }
            Decomposition::HRaisedArch { k, gamma, i, beta } => {
                out.push(U);
                out.extend(std::iter::repeat_n(H, *k));
                out.extend_from_slice(gamma.steps());
                out.push(Step::Down(*i));
                out.extend_from_slice(beta.steps());
            }
        }
        LatticePath::new(out)
    }
}

fn show(p: &LatticePath) -> String {
    if p.is_empty() {
        "ε".to_string()
    } else {
        p.to_string()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}", self.case_label())?;
        match self {
            Decomposition::Empty => Ok(()),
            Decomposition::LeadingH { alpha }
            | Decomposition::TrailingH { alpha }
            | Decomposition::UpDown { alpha }
            | Decomposition::UpHDown { alpha } => write!(f, ": alpha={}", show(alpha)),
            Decomposition::Spine { alphas, beta } => {
                write!(f, ": k={}", alphas.len())?;
                for (j, alpha) in alphas.iter().enumerate() {
                    write!(f, " alpha{}={}", j + 1, show(alpha))?;
                }
                write!(f, " beta={}", show(beta))
            }
            Decomposition::Arch { beta, alpha } => {
                write!(f, ":")?;
                if let Some(beta) = beta {
                    write!(f, " beta={}", show(beta))?;
                }
                write!(f, " alpha={}", show(alpha))
            }
            Decomposition::RaisedArch { beta, gamma, k } => {
                write!(f, ":")?;
                if let Some(beta) = beta {
                    write!(f, " beta={}", show(beta))?;
                }
                write!(f, " gamma={} k={k}", show(gamma))
            }
            Decomposition::HArch { alpha, beta } => {
                write!(f, ": alpha={} beta={}", show(alpha), show(beta))
            }
            Decomposition::HRaisedArch { k, gamma, i, beta } => {
                write!(f, ": k={k} gamma={} i={i} beta={}", show(gamma), show(beta))
            }
        }
    }
}

fn check_domain(p: &LatticePath, class: AvoidanceClass) -> Result<(), BijectionError> {
    if !p.is_map() {
        return Err(BijectionError::NotMap(p.to_string()));
    }
    if !p.avoids(class) {
        return Err(BijectionError::NotInClass {
            path: p.to_string(),
            class,
        });
    }
    Ok(())
}

/// Index of the first step that lands back on the x-axis.
fn first_return(p: &LatticePath) -> usize {
    p.heights()
        .iter()
        .position(|&h| h == 0)
        .expect("a MAP returns to the axis")
}

fn down_size(step: Step) -> u32 {
    match step {
        Step::Down(k) => k,
        _ => unreachable!("a return to the axis is a down-step"),
    }
}

pub fn decompose_peakless(p: &LatticePath) -> Result<Decomposition, BijectionError> {
    check_domain(p, AvoidanceClass::PeakLess)?;
    let steps = p.steps();
    match steps.first() {
        None => Err(BijectionError::EmptyPath),
        Some(Step::Horizontal) => Ok(Decomposition::LeadingH {
            alpha: p.lifted(1, p.len())?,
        }),
        Some(_) => {
            let ret = first_return(p);
            let k = down_size(steps[ret]);
            // the step before D_k is H: not U (peak), not D (two downs)
            let mut end = ret - 1;
            let mut alphas = Vec::with_capacity(k as usize);
            for level in (1..=k).rev() {
                let mut start = end;
                while p.height_at(start - 1) >= level {
                    start -= 1;
                }
                alphas.push(p.lifted(start, end)?);
                end = start - 1;
            }
            alphas.reverse();
            Ok(Decomposition::Spine {
                alphas,
                beta: p.lifted(ret + 1, p.len())?,
            })
        }
    }
}

/// `psi(ε) = ε`, `psi(H alpha) = U D psi(alpha)`,
/// `psi(U alpha_1 ... U alpha_k H D_k beta) =
///  U^3 psi(alpha_1) D U psi(alpha_2) ... D U psi(alpha_k) D^3 psi(beta)`.
pub fn psi(p: &LatticePath) -> Result<LatticePath, BijectionError> {
    let mut out = Vec::with_capacity(2 * p.len());
    psi_into(p, &mut out, &mut Tracer::off(), 0)?;
    Ok(LatticePath::plain(out)?)
}

fn psi_into(
    p: &LatticePath,
    out: &mut Vec<Step>,
    tr: &mut Tracer,
    depth: usize,
) -> Result<(), BijectionError> {
    if p.is_empty() {
        check_domain(p, AvoidanceClass::PeakLess)?;
        tr.note(depth, "psi", p, &Decomposition::Empty);
        return Ok(());
    }
    let d = decompose_peakless(p)?;
    tr.note(depth, "psi", p, &d);
    match d {
        Decomposition::LeadingH { alpha } => {
            out.extend([Step::Up, Step::D]);
            psi_into(&alpha, out, tr, depth + 1)?;
        }
        Decomposition::Spine { alphas, beta } => {
            out.extend([Step::Up; 3]);
            for (j, alpha) in alphas.iter().enumerate() {
                if j > 0 {
                    out.extend([Step::D, Step::Up]);
                }
                psi_into(alpha, out, tr, depth + 1)?;
            }
            out.extend([Step::D; 3]);
            psi_into(&beta, out, tr, depth + 1)?;
        }
        _ => unreachable!("not produced by decompose_peakless"),
    }
    Ok(())
}

pub fn decompose_valleyless(p: &LatticePath) -> Result<Decomposition, BijectionError> {
    check_domain(p, AvoidanceClass::ValleyLess)?;
    let steps = p.steps();
    let n = p.len();
    match steps.last() {
        None => Ok(Decomposition::Empty),
        Some(Step::Horizontal) => Ok(Decomposition::TrailingH {
            alpha: p.lifted(0, n - 1)?,
        }),
        Some(&last) => {
            let k = down_size(last);
            // start of the final arch: the last point on the axis
            let start = (0..n)
                .rev()
                .find(|&pt| p.height_at(pt) == 0)
                .expect("point 0 is on the axis");
            let beta = match start {
                0 => None,
                _ if steps[start - 1] == Step::Horizontal => Some(p.lifted(0, start - 1)?),
                _ => {
                    return Err(BijectionError::NotInClass {
                        path: p.to_string(),
                        class: AvoidanceClass::ValleyLess,
                    })
                }
            };
            let inner = p.lifted(start + 1, n - 1)?;
            Ok(if k == 1 {
                Decomposition::Arch { beta, alpha: inner }
            } else {
                Decomposition::RaisedArch {
                    beta,
                    gamma: inner,
                    k,
                }
            })
        }
    }
}

/// `(alpha D_{k-1})^# = U alpha D_k`. For `k = 1` the missing `D_0` is
/// read as the empty step, so `Q^# = U Q D`.
pub fn sharp(q: &LatticePath, k: u32) -> Result<LatticePath, BijectionError> {
    let not_sharpable = |reason: &str| BijectionError::NotSharpable {
        path: show(q),
        reason: reason.to_string(),
    };
    if !q.is_map() || !q.avoids(AvoidanceClass::PeakLess) {
        return Err(not_sharpable("not a peak-less MAP"));
    }
    let mut steps = Vec::with_capacity(q.len() + 2);
    steps.push(Step::Up);
    match k {
        0 => return Err(not_sharpable("k must be at least 1")),
        1 => {
            if q.is_empty() {
                return Err(BijectionError::WouldCreatePeak(show(q)));
            }
            if q.last_step().is_some_and(Step::is_down) {
                return Err(not_sharpable("ends with a down-step"));
            }
            steps.extend_from_slice(q.steps());
            steps.push(Step::D);
        }
        _ => {
            if q.last_step() != Some(Step::Down(k - 1)) {
                return Err(not_sharpable(&format!("does not end with D{}", k - 1)));
            }
            steps.extend_from_slice(&q.steps()[..q.len() - 1]);
            steps.push(Step::Down(k));
        }
    }
    Ok(LatticePath::new(steps)?)
}

/// `phi(ε) = H`, `phi(alpha H) = phi(alpha) H`,
/// `phi([beta H] U alpha D) = [phi(beta)] U phi(alpha) D`,
/// `phi([beta H] U gamma D_k) = [phi(beta)] phi(gamma D_{k-1})^#` for `k >= 2`.
pub fn phi(p: &LatticePath) -> Result<LatticePath, BijectionError> {
    let mut out = Vec::with_capacity(p.len() + 1);
    phi_into(p, &mut out, &mut Tracer::off(), 0)?;
    Ok(LatticePath::new(out)?)
}

fn phi_into(
    p: &LatticePath,
    out: &mut Vec<Step>,
    tr: &mut Tracer,
    depth: usize,
) -> Result<(), BijectionError> {
    let d = decompose_valleyless(p)?;
    tr.note(depth, "phi", p, &d);
    match d {
        Decomposition::Empty => out.push(Step::Horizontal),
        Decomposition::TrailingH { alpha } => {
            phi_into(&alpha, out, tr, depth + 1)?;
            out.push(Step::Horizontal);
        }
        Decomposition::Arch { beta, alpha } => {
            if let Some(beta) = beta {
                phi_into(&beta, out, tr, depth + 1)?;
            }
            out.push(Step::Up);
            phi_into(&alpha, out, tr, depth + 1)?;
            out.push(Step::D);
        }
        Decomposition::RaisedArch { beta, gamma, k } => {
            if let Some(beta) = beta {
                phi_into(&beta, out, tr, depth + 1)?;
            }
            let mut closed = gamma.steps().to_vec();
            closed.push(Step::Down(k - 1));
            let closed = LatticePath::new(closed)?;
            let mut inner = Vec::with_capacity(closed.len() + 1);
            phi_into(&closed, &mut inner, tr, depth + 1)?;
            out.extend_from_slice(sharp(&LatticePath::new(inner)?, k)?.steps());
        }
        _ => unreachable!("not produced by decompose_valleyless"),
    }
    Ok(())
}

pub fn decompose_uuless(p: &LatticePath) -> Result<Decomposition, BijectionError> {
    check_domain(p, AvoidanceClass::DoubleRiseLess)?;
    let steps = p.steps();
    let n = p.len();
    match steps.first() {
        None => Ok(Decomposition::Empty),
        Some(Step::Horizontal) => Ok(Decomposition::LeadingH {
            alpha: p.lifted(1, n)?,
        }),
        Some(_) => {
            let ret = first_return(p);
            let i = down_size(steps[ret]);
            let beta = p.lifted(ret + 1, n)?;
            if ret == 1 {
                return Ok(Decomposition::UpDown { alpha: beta });
            }
            if ret == 2 && steps[1] == Step::Horizontal {
                return Ok(Decomposition::UpHDown { alpha: beta });
            }
            if i == 1 {
                // the arch interior is H alpha H
                return Ok(Decomposition::HArch {
                    alpha: p.lifted(2, ret - 1)?,
                    beta,
                });
            }
            let k = steps[1..ret]
                .iter()
                .take_while(|&&s| s == Step::Horizontal)
                .count();
            Ok(Decomposition::HRaisedArch {
                k,
                gamma: p.lifted(1 + k, ret)?,
                i,
                beta,
            })
        }
    }
}

/// `chi(ε) = ε`, `chi(H alpha) = H chi(alpha)`, `chi(U D alpha) = U D chi(alpha)`,
/// `chi(U H D alpha) = U H D chi(alpha)`,
/// `chi(U H alpha H D beta) = U H H chi(alpha) D chi(beta)`,
/// `chi(U H^k gamma D_i beta) = U chi(gamma D_{i-1}) H^{k-1} D chi(beta)` for `i >= 2`.
pub fn chi(p: &LatticePath) -> Result<LatticePath, BijectionError> {
    let mut out = Vec::with_capacity(p.len());
    chi_into(p, &mut out, &mut Tracer::off(), 0)?;
    Ok(LatticePath::plain(out)?)
}

fn chi_into(
    p: &LatticePath,
    out: &mut Vec<Step>,
    tr: &mut Tracer,
    depth: usize,
) -> Result<(), BijectionError> {
    let d = decompose_uuless(p)?;
    tr.note(depth, "chi", p, &d);
    match d {
        Decomposition::Empty => {}
        Decomposition::LeadingH { alpha } => {
            out.push(Step::Horizontal);
            chi_into(&alpha, out, tr, depth + 1)?;
        }
        Decomposition::UpDown { alpha } => {
            out.extend([Step::Up, Step::D]);
            chi_into(&alpha, out, tr, depth + 1)?;
        }
        Decomposition::UpHDown { alpha } => {
            out.extend([Step::Up, Step::Horizontal, Step::D]);
            chi_into(&alpha, out, tr, depth + 1)?;
        }
        Decomposition::HArch { alpha, beta } => {
            out.extend([Step::Up, Step::Horizontal, Step::Horizontal]);
            chi_into(&alpha, out, tr, depth + 1)?;
            out.push(Step::D);
            chi_into(&beta, out, tr, depth + 1)?;
        }
        Decomposition::HRaisedArch { k, gamma, i, beta } => {
            let mut closed = gamma.steps().to_vec();
            closed.push(Step::Down(i - 1));
            out.push(Step::Up);
            chi_into(&LatticePath::new(closed)?, out, tr, depth + 1)?;
            out.extend(std::iter::repeat_n(Step::Horizontal, k - 1));
            out.push(Step::D);
            chi_into(&beta, out, tr, depth + 1)?;
        }
        _ => unreachable!("not produced by decompose_uuless"),
    }
    Ok(())
}

struct Tracer {
    lines: Option<Vec<String>>,
}

impl Tracer {
    fn off() -> Self {
        Self { lines: None }
    }

    fn on() -> Self {
        Self {
            lines: Some(Vec::new()),
        }
    }

    fn note(&mut self, depth: usize, name: &str, p: &LatticePath, d: &Decomposition) {
        if let Some(lines) = &mut self.lines {
            lines.push(format!("{}{name}({}): {d}", "  ".repeat(depth), show(p)));
        }
    }
}

/// Applies a map and returns its image with the decomposition tree, one
/// indented line per recursive call.
pub fn apply_traced(
    map: BijectionName,
    p: &LatticePath,
) -> Result<(LatticePath, Vec<String>), BijectionError> {
    let mut tr = Tracer::on();
    let mut out = Vec::new();
    let image = match map {
        BijectionName::Psi => {
            psi_into(p, &mut out, &mut tr, 0)?;
            LatticePath::plain(out)?
        }
        BijectionName::Phi => {
            phi_into(p, &mut out, &mut tr, 0)?;
            LatticePath::new(out)?
        }
        BijectionName::Chi => {
            chi_into(p, &mut out, &mut tr, 0)?;
            LatticePath::plain(out)?
        }
    };
    Ok((image, tr.lines.unwrap_or_default()))
}

/// Outcome of an exhaustive bijectivity check at one domain length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BijectionReport {
    pub map: BijectionName,
    /// Length of the domain paths.
    pub n: usize,
    pub image_length: usize,
    pub domain_size: usize,
    pub codomain_size: usize,
}

/// Enumerates the domain of length `n`, checks that every image lies in the
/// codomain, that images are pairwise distinct, and that both sides have
/// the same size.
pub fn verify_bijection(map: BijectionName, n: usize) -> Result<BijectionReport, BijectionError> {
    let domain = enumerate_map(n, map.domain_class());
    let (image_length, codomain_size) = match map {
        BijectionName::Psi => (2 * n, enumerate_dyck_21(n).len()),
        BijectionName::Phi => (n + 1, enumerate_map(n + 1, AvoidanceClass::PeakLess).len()),
        BijectionName::Chi => (n, enumerate_motzkin_uhu(n).len()),
    };
    let mut seen = HashSet::with_capacity(domain.len());
    for p in &domain {
        let fail = |reason: String| BijectionError::CounterexampleFound {
            path: show(p),
            reason,
        };
        let image = map.apply(p).map_err(|e| fail(e.to_string()))?;
        if image.len() != image_length {
            return Err(fail(format!("image {image} has length {}", image.len())));
        }
        let in_codomain = match map {
            BijectionName::Psi => image.is_dyck_no_peak2_no_valley1_mod3()?,
            BijectionName::Phi => image.is_map() && image.avoids(AvoidanceClass::PeakLess),
            BijectionName::Chi => image.is_motzkin_uhu_less()?,
        };
        if !in_codomain {
            return Err(fail(format!("image {image} is outside the codomain")));
        }
        if !seen.insert(image.clone()) {
            return Err(fail(format!("image {image} is hit twice")));
        }
    }
    if domain.len() != codomain_size {
        return Err(BijectionError::CounterexampleFound {
            path: String::new(),
            reason: format!(
                "domain has {} paths, codomain {codomain_size}",
                domain.len()
            ),
        });
    }
    Ok(BijectionReport {
        map,
        n,
        image_length,
        domain_size: domain.len(),
        codomain_size,
    })
}
