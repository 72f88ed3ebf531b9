//! Steps, validated lattice paths and pattern scanning.
//!
//! A path is a sequence of steps `U = (1,1)`, `H = (1,0)` and `D_k = (1,-k)`
//! starting at the origin. It must stay in the first quadrant and two
//! down-steps may never be adjacent. A path that ends on the x-axis is a
//! Motzkin path with air pockets (MAP); any valid path is a prefix (PMAP).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A single step. The derived order (`U < H < D_1 < D_2 < ...`) is the
/// generation order used by the enumerator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Horizontal,
    /// Drop of the given magnitude; `Down(1)` is the ordinary `D`.
    Down(u32),
}

impl Step {
    pub const D: Step = Step::Down(1);

    pub fn is_down(self) -> bool {
        matches!(self, Step::Down(_))
    }

    pub fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Horizontal => 0,
            Step::Down(k) => -i64::from(k),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Up => f.write_str("U"),
            Step::Horizontal => f.write_str("H"),
            Step::Down(1) => f.write_str("D"),
            Step::Down(k) => write!(f, "D{k}"),
        }
    }
}

/// Pattern family that a path is required to avoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AvoidanceClass {
    /// No `U D_k`.
    PeakLess,
    /// No `D_k U`.
    ValleyLess,
    /// No `U U`.
    DoubleRiseLess,
    Unrestricted,
}

impl AvoidanceClass {
    pub const ALL: [AvoidanceClass; 4] = [
        AvoidanceClass::PeakLess,
        AvoidanceClass::ValleyLess,
        AvoidanceClass::DoubleRiseLess,
        AvoidanceClass::Unrestricted,
    ];

    /// The three restricted families.
    pub const RESTRICTED: [AvoidanceClass; 3] = [
        AvoidanceClass::PeakLess,
        AvoidanceClass::ValleyLess,
        AvoidanceClass::DoubleRiseLess,
    ];

    /// Command-line token of the class.
    pub fn name(self) -> &'static str {
        match self {
            AvoidanceClass::PeakLess => "peakless",
            AvoidanceClass::ValleyLess => "valleyless",
            AvoidanceClass::DoubleRiseLess => "uuless",
            AvoidanceClass::Unrestricted => "none",
        }
    }

    /// Whether `next` may directly follow `prev` in a path of this class,
    /// judged on the forbidden pair alone (the no-consecutive-downs rule is
    /// shared by all classes and checked separately).
    pub fn allows_pair(self, prev: Step, next: Step) -> bool {
        match self {
            AvoidanceClass::PeakLess => !(prev == Step::Up && next.is_down()),
            AvoidanceClass::ValleyLess => !(prev.is_down() && next == Step::Up),
            AvoidanceClass::DoubleRiseLess => !(prev == Step::Up && next == Step::Up),
            AvoidanceClass::Unrestricted => true,
        }
    }
}

impl fmt::Display for AvoidanceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown class `{0}` (expected peakless, valleyless, uuless or none)")]
pub struct UnknownClass(pub String);

impl FromStr for AvoidanceClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "peakless" => Ok(AvoidanceClass::PeakLess),
            "valleyless" => Ok(AvoidanceClass::ValleyLess),
            "uuless" => Ok(AvoidanceClass::DoubleRiseLess),
            "none" => Ok(AvoidanceClass::Unrestricted),
            other => Err(UnknownClass(other.to_string())),
        }
    }
}

/// Errors raised while building or classifying paths. Positions are
/// 1-based step indices (or 0-based byte offsets for syntax errors).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("path goes below the x-axis at step {0}")]
    NegativeHeight(usize),
    #[error("two consecutive down-steps at step {0}")]
    ConsecutiveDowns(usize),
    #[error("down-step at step {0} has magnitude 0")]
    InvalidDownMagnitude(usize),
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("not a Dyck path: {0}")]
    NotADyckPath(String),
    #[error("not a Motzkin path: {0}")]
    NotAMotzkinPath(String),
}

/// A validated path together with its height profile.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LatticePath {
    steps: Vec<Step>,
    /// `heights[i]` is the height after step `i`.
    heights: Vec<u32>,
}

impl LatticePath {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Validates a step sequence starting at height 0 under the air-pocket
    /// rules.
    pub fn new(steps: Vec<Step>) -> Result<Self, PathError> {
        Self::build(steps, false)
    }

    /// Validates an ordinary lattice path (Dyck, Motzkin): only the
    /// first-quadrant condition applies and down-steps may follow each other.
    pub fn plain(steps: Vec<Step>) -> Result<Self, PathError> {
        Self::build(steps, true)
    }

    fn build(steps: Vec<Step>, allow_consecutive_downs: bool) -> Result<Self, PathError> {
        let mut heights = Vec::with_capacity(steps.len());
        let mut h = 0i64;
        let mut prev: Option<Step> = None;
        for (i, &step) in steps.iter().enumerate() {
            let pos = i + 1;
            if step == Step::Down(0) {
                return Err(PathError::InvalidDownMagnitude(pos));
            }
            if !allow_consecutive_downs && step.is_down() && prev.is_some_and(Step::is_down) {
                return Err(PathError::ConsecutiveDowns(pos));
            }
            h += step.delta();
            if h < 0 {
                return Err(PathError::NegativeHeight(pos));
            }
            heights.push(h as u32);
            prev = Some(step);
        }
        Ok(Self { steps, heights })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Heights after each step (the origin is implicit).
    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Height before step `i` (0-based), i.e. the height of point `i`.
    pub fn height_at(&self, point: usize) -> u32 {
        if point == 0 {
            0
        } else {
            self.heights[point - 1]
        }
    }

    pub fn final_height(&self) -> u32 {
        self.heights.last().copied().unwrap_or(0)
    }

    pub fn max_height(&self) -> u32 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    /// True when the path ends on the x-axis.
    pub fn is_map(&self) -> bool {
        self.final_height() == 0
    }

    pub fn last_step(&self) -> Option<Step> {
        self.steps.last().copied()
    }

    pub fn scan_patterns(&self) -> PatternCounts {
        let mut counts = PatternCounts::default();
        for pair in self.steps.windows(2) {
            match (pair[0], pair[1]) {
                (Step::Up, Step::Down(_)) => counts.peaks += 1,
                (Step::Down(_), Step::Up) => counts.valleys += 1,
                (Step::Up, Step::Up) => counts.double_rises += 1,
                _ => {}
            }
        }
        counts
    }

    pub fn avoids(&self, class: AvoidanceClass) -> bool {
        let counts = self.scan_patterns();
        match class {
            AvoidanceClass::PeakLess => counts.peaks == 0,
            AvoidanceClass::ValleyLess => counts.valleys == 0,
            AvoidanceClass::DoubleRiseLess => counts.double_rises == 0,
            AvoidanceClass::Unrestricted => true,
        }
    }

    /// Concatenates paths whose pieces are all MAPs except possibly the last.
    pub fn concat(parts: &[&LatticePath]) -> Result<Self, PathError> {
        Self::new(concat_steps(parts))
    }

    /// Like [`LatticePath::concat`] for ordinary lattice paths.
    pub fn concat_plain(parts: &[&LatticePath]) -> Result<Self, PathError> {
        Self::plain(concat_steps(parts))
    }

    /// Membership in `D_n(2,1)`: a Dyck path with no peak whose apex has
    /// height 2 (mod 3) and no valley whose trough has height 1 (mod 3).
    pub fn is_dyck_no_peak2_no_valley1_mod3(&self) -> Result<bool, PathError> {
        if let Some(bad) = self
            .steps
            .iter()
            .find(|s| !matches!(s, Step::Up | Step::Down(1)))
        {
            return Err(PathError::NotADyckPath(format!("contains step {bad}")));
        }
        if !self.is_map() {
            return Err(PathError::NotADyckPath(format!(
                "ends at height {}",
                self.final_height()
            )));
        }
        for i in 1..self.steps.len() {
            let apex_or_trough = self.heights[i - 1];
            match (self.steps[i - 1], self.steps[i]) {
                (Step::Up, Step::Down(_)) if apex_or_trough % 3 == 2 => return Ok(false),
                (Step::Down(_), Step::Up) if apex_or_trough % 3 == 1 => return Ok(false),
                _ => {}
            }
        }
        Ok(true)
    }

    /// Membership in the Motzkin paths without a `UHU` factor.
    pub fn is_motzkin_uhu_less(&self) -> Result<bool, PathError> {
        if let Some(bad) = self
            .steps
            .iter()
            .find(|s| matches!(s, Step::Down(k) if *k > 1))
        {
            return Err(PathError::NotAMotzkinPath(format!("contains step {bad}")));
        }
        if !self.is_map() {
            return Err(PathError::NotAMotzkinPath(format!(
                "ends at height {}",
                self.final_height()
            )));
        }
        Ok(!self
            .steps
            .windows(3)
            .any(|w| w == [Step::Up, Step::Horizontal, Step::Up]))
    }

    /// Steps `from..to` as a path re-based at 0. Fails if the slice dips
    /// below the level it starts from.
    pub(crate) fn lifted(&self, from: usize, to: usize) -> Result<LatticePath, PathError> {
        Self::new(self.steps[from..to].to_vec())
    }
}

fn concat_steps(parts: &[&LatticePath]) -> Vec<Step> {
    parts.iter().flat_map(|p| p.steps.iter().copied()).collect()
}

/// Adjacent-pair pattern occurrences in a path.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PatternCounts {
    pub peaks: usize,
    pub valleys: usize,
    pub double_rises: usize,
}

/// Parses the textual step grammar: `U`, `H`, `D` (= `D_1`) and `D<k>`,
/// with optional whitespace between tokens.
pub fn parse_steps(text: &str) -> Result<Vec<Step>, PathError> {
    let bytes = text.as_bytes();
    let mut steps = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'U' => {
                steps.push(Step::Up);
                i += 1;
            }
            b'H' => {
                steps.push(Step::Horizontal);
                i += 1;
            }
            b'D' => {
                let start = i + 1;
                let mut end = start;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                let k = if end == start {
                    1
                } else {
                    text[start..end]
                        .parse::<u32>()
                        .map_err(|e| PathError::Syntax {
                            position: start,
                            message: format!("bad down-step magnitude: {e}"),
                        })?
                };
                steps.push(Step::Down(k));
                i = end;
            }
            c if c.is_ascii_whitespace() => i += 1,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(PathError::Syntax {
                    position: i,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        }
    }
    Ok(steps)
}

pub fn parse_path(text: &str) -> Result<LatticePath, PathError> {
    LatticePath::new(parse_steps(text)?)
}

/// Parses an ordinary lattice path such as a Dyck path, see
/// [`LatticePath::plain`].
pub fn parse_plain_path(text: &str) -> Result<LatticePath, PathError> {
    LatticePath::plain(parse_steps(text)?)
}

pub fn render_path(path: &LatticePath) -> String {
    path.to_string()
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = PathError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_path(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Step::*;

    fn p(s: &str) -> LatticePath {
        parse_plain_path(s).unwrap()
    }

    #[test]
    fn validate_examples() {
        let arch = LatticePath::new(vec![Up, Horizontal, Down(1)]).unwrap();
        assert_eq!(arch.final_height(), 0);
        assert_eq!(arch.heights(), &[1, 1, 0]);
        assert_eq!(
            LatticePath::new(vec![Up, Down(2)]),
            Err(PathError::NegativeHeight(2))
        );
        assert_eq!(
            LatticePath::new(vec![Up, Up, Down(1), Down(1)]),
            Err(PathError::ConsecutiveDowns(4))
        );
        assert_eq!(
            LatticePath::new(vec![Up, Down(0)]),
            Err(PathError::InvalidDownMagnitude(2))
        );
        assert!(LatticePath::new(vec![]).unwrap().is_map());
    }

    #[test]
    fn pattern_scan() {
        assert_eq!(p("UUHDHUHUHD3HH").scan_patterns().peaks, 0);
        assert_eq!(
            p("UD").scan_patterns(),
            PatternCounts {
                peaks: 1,
                valleys: 0,
                double_rises: 0
            }
        );
        let c = p("UHUHD2UDUHUHHUD3H").scan_patterns();
        assert_eq!(c.double_rises, 0);
        assert_eq!(c.peaks, 2);
        assert_eq!(c.valleys, 2);
    }

    #[test]
    fn avoidance() {
        assert!(p("HHH").avoids(AvoidanceClass::PeakLess));
        assert!(!p("UD").avoids(AvoidanceClass::PeakLess));
        assert!(p("UHD").avoids(AvoidanceClass::ValleyLess));
        assert!(p("UDUD").avoids(AvoidanceClass::Unrestricted));
        assert!(!p("UDUD").avoids(AvoidanceClass::ValleyLess));
    }

    #[test]
    fn dyck_mod3_membership() {
        assert_eq!(
            p("UUUUUUDDDUDDUUDDUDDDUDUD").is_dyck_no_peak2_no_valley1_mod3(),
            Ok(true)
        );
        assert_eq!(p("UD").is_dyck_no_peak2_no_valley1_mod3(), Ok(true));
        assert_eq!(p("UUDD").is_dyck_no_peak2_no_valley1_mod3(), Ok(false));
        // valley at height 1
        assert_eq!(p("UUUDDUDD").is_dyck_no_peak2_no_valley1_mod3(), Ok(false));
        assert!(matches!(
            p("UHD").is_dyck_no_peak2_no_valley1_mod3(),
            Err(PathError::NotADyckPath(_))
        ));
        assert!(matches!(
            p("UU").is_dyck_no_peak2_no_valley1_mod3(),
            Err(PathError::NotADyckPath(_))
        ));
    }

    #[test]
    fn motzkin_uhu() {
        assert_eq!(p("UUHDDUDUUUDHDDH").is_motzkin_uhu_less(), Ok(true));
        assert_eq!(p("UHUDD").is_motzkin_uhu_less(), Ok(false));
        assert_eq!(p("HHH").is_motzkin_uhu_less(), Ok(true));
        assert!(p("UUD2").is_motzkin_uhu_less().is_err());
        assert!(p("UH").is_motzkin_uhu_less().is_err());
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(
            parse_steps("U H D2").unwrap(),
            vec![Up, Horizontal, Down(2)]
        );
        assert_eq!(p("UUHDHUHUHD3HH").len(), 12);
        assert_eq!(parse_path("UUDD"), Err(PathError::ConsecutiveDowns(4)));
        assert_eq!(
            render_path(&LatticePath::new(vec![Up, Down(1)]).unwrap()),
            "UD"
        );
        assert_eq!(p("U U H D2 H").to_string(), "UUHD2H");
        assert!(parse_steps("D 2").is_err());
        assert!(matches!(
            parse_steps("UXD"),
            Err(PathError::Syntax { position: 1, .. })
        ));
        assert!(parse_steps("u").is_err());
        assert_eq!(p(""), LatticePath::empty());
    }

    #[test]
    fn lifted_subpaths() {
        let path = p("UUHDHUHUHD3HH");
        // steps 1..5 = UHDH at level 1
        let alpha = path.lifted(1, 5).unwrap();
        assert_eq!(alpha.to_string(), "UHDH");
        assert!(alpha.is_map());
    }
}
