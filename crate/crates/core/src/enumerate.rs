//! Brute-force generation of paths, and the count tables derived from it.
//!
//! Everything here is independent of the generating-function machinery and
//! serves as its oracle. Generation is depth-first in lexicographic order
//! with `U < H < D_1 < D_2 < ...`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::path::{AvoidanceClass, LatticePath, Step};
use crate::triangle::Triangle;

/// Above this length `count_table` switches from path enumeration to the
/// state-machine count.
pub const BRUTE_FORCE_LIMIT: usize = 20;

/// Kind of the last step of a path; the empty path counts with `Up`,
/// matching the convention `f_0 = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LastStep {
    Up,
    Down,
    Horizontal,
}

/// `t(n, k)` for `0 <= k <= n <= n_max`, with the split by last step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub class: AvoidanceClass,
    pub total: Triangle,
    /// Paths ending with `U` (plus the empty path at `(0, 0)`).
    pub up: Triangle,
    /// Paths ending with a down-step.
    pub down: Triangle,
    /// Paths ending with `H`.
    pub horizontal: Triangle,
}

impl CountTable {
    fn empty(class: AvoidanceClass, n_max: usize) -> Self {
        let z = Triangle::zeros(n_max + 1);
        Self {
            class,
            total: z.clone(),
            up: z.clone(),
            down: z.clone(),
            horizontal: z,
        }
    }

    pub fn n_max(&self) -> usize {
        self.total.num_rows() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> BigInt {
        self.total.get(n as i64, k as i64)
    }

    pub fn part(&self, last: LastStep) -> &Triangle {
        match last {
            LastStep::Up => &self.up,
            LastStep::Down => &self.down,
            LastStep::Horizontal => &self.horizontal,
        }
    }

    /// Row sums `sum_k t(n, k)`.
    pub fn row_totals(&self) -> Vec<BigInt> {
        self.total.rows().iter().map(|r| r.iter().sum()).collect()
    }
}

fn may_follow(class: AvoidanceClass, prev: Option<Step>, next: Step) -> bool {
    match prev {
        None => true,
        Some(p) => !(p.is_down() && next.is_down()) && class.allows_pair(p, next),
    }
}

/// Depth-first walk over all valid paths of length `<= max_len` in the
/// class. `visit` sees every node (including the empty path) and returns
/// whether to descend further.
fn walk(class: AvoidanceClass, max_len: usize, visit: &mut impl FnMut(&[Step], u32) -> bool) {
    fn go(
        class: AvoidanceClass,
        max_len: usize,
        steps: &mut Vec<Step>,
        height: u32,
        visit: &mut impl FnMut(&[Step], u32) -> bool,
    ) {
        if !visit(steps, height) || steps.len() == max_len {
            return;
        }
        let prev = steps.last().copied();
        let candidates = [Step::Up, Step::Horizontal]
            .into_iter()
            .chain((1..=height).map(Step::Down));
        for next in candidates {
            if !may_follow(class, prev, next) {
                continue;
            }
            let h = (i64::from(height) + next.delta()) as u32;
            steps.push(next);
            go(class, max_len, steps, h, visit);
            steps.pop();
        }
    }
    go(class, max_len, &mut Vec::with_capacity(max_len), 0, visit);
}

/// All paths of length `n` in the class, optionally only those ending at
/// `end_height`, in generation order.
pub fn enumerate_pmap(
    n: usize,
    class: AvoidanceClass,
    end_height: Option<u32>,
) -> Vec<LatticePath> {
    let mut out = Vec::new();
    walk(class, n, &mut |steps, h| {
        let remaining = (n - steps.len()) as u32;
        if let Some(target) = end_height {
            if h + remaining < target {
                return false;
            }
        }
        if steps.len() == n && end_height.is_none_or(|t| t == h) {
            out.push(LatticePath::new(steps.to_vec()).expect("walk only produces valid paths"));
        }
        true
    });
    out
}

/// Motzkin paths with air pockets (ending at height 0) of length `n`.
pub fn enumerate_map(n: usize, class: AvoidanceClass) -> Vec<LatticePath> {
    enumerate_pmap(n, class, Some(0))
}

/// Counts by exhaustive walk, without materialising paths. Every prefix of
/// an admissible path is admissible, so one walk to depth `n_max` fills all
/// rows.
pub fn count_table_brute(n_max: usize, class: AvoidanceClass) -> CountTable {
    let rows = n_max + 1;
    let mut counts = vec![[0u64; 3]; rows * rows];
    walk(class, n_max, &mut |steps, h| {
        let n = steps.len();
        let slot = match steps.last() {
            None | Some(Step::Up) => 0,
            Some(Step::Down(_)) => 1,
            Some(Step::Horizontal) => 2,
        };
        counts[n * rows + h as usize][slot] += 1;
        true
    });
    let mut table = CountTable::empty(class, n_max);
    for n in 0..rows {
        for k in 0..=n {
            let [u, d, hz] = counts[n * rows + k];
            table.up.set(n, k, u.into());
            table.down.set(n, k, d.into());
            table.horizontal.set(n, k, hz.into());
            table.total.set(n, k, (u + d + hz).into());
        }
    }
    table
}

/// State of the counting automaton: the kind of the last step, or the
/// start state for the empty path.
#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Start,
    Up,
    Down,
    Horizontal,
}

/// Which states may precede a new step, read off the functional-equation
/// systems: `f_k` is fed by the families on the right of its equation,
/// `g_k` likewise, and `h_k = z(f_k + g_k + h_k)` by everything. The empty
/// path is the `f_0 = 1` term.
fn predecessors(class: AvoidanceClass, next: LastStep) -> &'static [State] {
    use State::*;
    const ALL: &[State] = &[Start, Up, Down, Horizontal];
    match (class, next) {
        (_, LastStep::Horizontal) => ALL,
        // f_k = z f_{k-1} + z g_{k-1} + z h_{k-1}
        (AvoidanceClass::PeakLess, LastStep::Up) => ALL,
        // g_k = z sum_{l > k} h_l
        (AvoidanceClass::PeakLess, LastStep::Down) => &[Horizontal],
        // f_k = z f_{k-1} + z h_{k-1}
        (AvoidanceClass::ValleyLess, LastStep::Up) => &[Start, Up, Horizontal],
        // g_k = z sum_{l > k} f_l + z sum_{l > k} h_l
        (AvoidanceClass::ValleyLess | AvoidanceClass::DoubleRiseLess, LastStep::Down) => {
            &[Up, Horizontal]
        }
        // f_1 = z + z g_0 + z h_0, f_k = z g_{k-1} + z h_{k-1}
        (AvoidanceClass::DoubleRiseLess, LastStep::Up) => &[Start, Down, Horizontal],
        (AvoidanceClass::Unrestricted, LastStep::Up) => ALL,
        (AvoidanceClass::Unrestricted, LastStep::Down) => &[Up, Horizontal],
    }
}

/// Counts by dynamic programming over `(height, state)`.
pub fn count_table_dp(n_max: usize, class: AvoidanceClass) -> CountTable {
    let slot = |s: State| match s {
        State::Start => 0,
        State::Up => 1,
        State::Down => 2,
        State::Horizontal => 3,
    };
    let fresh = || {
        vec![
            [
                BigInt::zero(),
                BigInt::zero(),
                BigInt::zero(),
                BigInt::zero()
            ];
            n_max + 2
        ]
    };
    let mut table = CountTable::empty(class, n_max);
    table.up.set(0, 0, BigInt::one());
    table.total.set(0, 0, BigInt::one());
    let mut current = fresh();
    current[0][slot(State::Start)] = BigInt::one();
    for n in 1..=n_max {
        let feed = |cur: &[[BigInt; 4]], k: usize, next: LastStep| -> BigInt {
            predecessors(class, next)
                .iter()
                .map(|&s| &cur[k][slot(s)])
                .sum()
        };
        let mut next = fresh();
        for k in 0..n {
            next[k + 1][slot(State::Up)] = feed(&current, k, LastStep::Up);
            next[k][slot(State::Horizontal)] = feed(&current, k, LastStep::Horizontal);
        }
        // D_j from height l lands on any k < l
        let mut suffix = BigInt::zero();
        for l in (1..n).rev() {
            suffix += feed(&current, l, LastStep::Down);
            next[l - 1][slot(State::Down)] = suffix.clone();
        }
        for (k, counts) in next.iter().enumerate().take(n + 1) {
            let [_, u, d, h] = counts;
            table.up.set(n, k, u.clone());
            table.down.set(n, k, d.clone());
            table.horizontal.set(n, k, h.clone());
            table.total.set(n, k, u + d + h);
        }
        current = next;
    }
    table
}

/// Count table by enumeration up to [`BRUTE_FORCE_LIMIT`], by the state
/// machine beyond.
pub fn count_table(n_max: usize, class: AvoidanceClass) -> CountTable {
    if n_max <= BRUTE_FORCE_LIMIT {
        count_table_brute(n_max, class)
    } else {
        count_table_dp(n_max, class)
    }
}

/// Dyck paths with `2n` steps in `D_n(2,1)`: no peak apex at height
/// `2 (mod 3)` and no valley trough at height `1 (mod 3)`.
pub fn enumerate_dyck_21(n: usize) -> Vec<LatticePath> {
    fn go(len: usize, steps: &mut Vec<Step>, h: usize, out: &mut Vec<LatticePath>) {
        if steps.len() == len {
            if h == 0 {
                out.push(LatticePath::plain(steps.clone()).expect("valid Dyck path"));
            }
            return;
        }
        let remaining = len - steps.len();
        let prev = steps.last().copied();
        // U: closes a valley if the previous step was D
        if h < remaining && !(prev == Some(Step::D) && h % 3 == 1) {
            steps.push(Step::Up);
            go(len, steps, h + 1, out);
            steps.pop();
        }
        // D: closes a peak if the previous step was U
        if h > 0 && !(prev == Some(Step::Up) && h % 3 == 2) {
            steps.push(Step::D);
            go(len, steps, h - 1, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    go(2 * n, &mut Vec::with_capacity(2 * n), 0, &mut out);
    out
}

/// Motzkin paths (steps `U`, `H`, `D`) of length `n` without a `UHU` factor.
pub fn enumerate_motzkin_uhu(n: usize) -> Vec<LatticePath> {
    fn go(len: usize, steps: &mut Vec<Step>, h: usize, out: &mut Vec<LatticePath>) {
        if steps.len() == len {
            if h == 0 {
                out.push(LatticePath::plain(steps.clone()).expect("valid Motzkin path"));
            }
            return;
        }
        let remaining = len - steps.len();
        let k = steps.len();
        let closes_uhu = k >= 2 && steps[k - 2] == Step::Up && steps[k - 1] == Step::Horizontal;
        if h < remaining && !closes_uhu {
            steps.push(Step::Up);
            go(len, steps, h + 1, out);
            steps.pop();
        }
        if h < remaining {
            steps.push(Step::Horizontal);
            go(len, steps, h, out);
            steps.pop();
        }
        if h > 0 {
            steps.push(Step::D);
            go(len, steps, h - 1, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn row(t: &CountTable, n: usize) -> Vec<u64> {
        t.total
            .row(n)
            .iter()
            .map(|v| u64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(
            enumerate_pmap(5, AvoidanceClass::PeakLess, Some(1)).len(),
            15
        );
        assert_eq!(
            enumerate_pmap(4, AvoidanceClass::DoubleRiseLess, Some(0)).len(),
            9
        );
        for class in AvoidanceClass::ALL {
            assert_eq!(
                enumerate_pmap(0, class, Some(0)),
                vec![LatticePath::empty()]
            );
        }
        assert_eq!(
            enumerate_pmap(4, AvoidanceClass::ValleyLess, Some(0)).len(),
            12
        );
    }

    #[test]
    fn generation_order_is_lexicographic() {
        let paths = enumerate_pmap(4, AvoidanceClass::Unrestricted, None);
        let mut sorted = paths.clone();
        sorted.sort_by(|a, b| a.steps().cmp(b.steps()));
        assert_eq!(paths, sorted);
        let first: Vec<String> = paths.iter().take(3).map(|p| p.to_string()).collect();
        assert_eq!(first, ["UUUU", "UUUH", "UUUD"]);
    }

    #[test]
    fn printed_last_rows() {
        let peak = count_table(8, AvoidanceClass::PeakLess);
        assert_eq!(row(&peak, 8), [190, 248, 229, 172, 110, 62, 28, 8, 1]);
        let valley = count_table(8, AvoidanceClass::ValleyLess);
        assert_eq!(row(&valley, 8), [505, 467, 361, 241, 139, 70, 29, 8, 1]);
        let uu = count_table(8, AvoidanceClass::DoubleRiseLess);
        assert_eq!(row(&uu, 8), [274, 298, 143, 39, 5, 0, 0, 0, 0]);
    }

    #[test]
    fn split_sums_to_total() {
        for class in AvoidanceClass::ALL {
            let t = count_table_brute(9, class);
            for n in 0..=9 {
                for k in 0..=n {
                    let parts = t.up.get(n as i64, k as i64)
                        + t.down.get(n as i64, k as i64)
                        + t.horizontal.get(n as i64, k as i64);
                    assert_eq!(parts, t.get(n, k));
                }
            }
        }
    }

    #[test]
    fn dp_agrees_with_brute_force() {
        for class in AvoidanceClass::ALL {
            assert_eq!(
                count_table_dp(14, class),
                count_table_brute(14, class),
                "{class}"
            );
        }
    }

    #[test]
    fn table_matches_enumeration() {
        for class in AvoidanceClass::ALL {
            let t = count_table_brute(7, class);
            for n in 0..=7 {
                for k in 0..=n {
                    let listed = enumerate_pmap(n, class, Some(k as u32)).len();
                    assert_eq!(t.get(n, k), BigInt::from(listed));
                }
            }
        }
    }

    #[test]
    fn enumerated_paths_are_distinct_and_admissible() {
        for class in AvoidanceClass::ALL {
            for n in 0..=8 {
                let paths = enumerate_pmap(n, class, None);
                let set: HashSet<_> = paths.iter().collect();
                assert_eq!(set.len(), paths.len());
                for p in &paths {
                    assert_eq!(p.len(), n);
                    assert!(p.avoids(class));
                    assert_eq!(LatticePath::new(p.steps().to_vec()).as_ref(), Ok(p));
                }
            }
        }
    }

    #[test]
    fn diagonal() {
        for class in AvoidanceClass::ALL {
            let t = count_table(12, class);
            for n in 0..=12 {
                let expect = if class == AvoidanceClass::DoubleRiseLess && n >= 2 {
                    0
                } else {
                    1
                };
                assert_eq!(t.get(n, n), BigInt::from(expect), "{class} n={n}");
            }
        }
    }

    #[test]
    fn restricted_dyck_counts() {
        let counts: Vec<usize> = (0..=9).map(|n| enumerate_dyck_21(n).len()).collect();
        assert_eq!(counts, [1, 1, 1, 2, 5, 12, 29, 73, 190, 505]);
        assert_eq!(enumerate_dyck_21(0), vec![LatticePath::empty()]);
        assert_eq!(enumerate_dyck_21(2)[0].to_string(), "UDUD");
        for p in enumerate_dyck_21(7) {
            assert_eq!(p.is_dyck_no_peak2_no_valley1_mod3(), Ok(true));
        }
    }

    #[test]
    fn uhu_less_motzkin_counts() {
        let counts: Vec<usize> = (0..=9).map(|n| enumerate_motzkin_uhu(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 9, 20, 47, 112, 274, 679]);
        assert_eq!(enumerate_motzkin_uhu(1)[0].to_string(), "H");
        for p in enumerate_motzkin_uhu(8) {
            assert_eq!(p.is_motzkin_uhu_less(), Ok(true));
        }
    }

    #[test]
    fn large_tables_use_the_state_machine() {
        let t = count_table(24, AvoidanceClass::PeakLess);
        assert_eq!(t.n_max(), 24);
        assert_eq!(t.get(24, 24), BigInt::one());
    }
}
