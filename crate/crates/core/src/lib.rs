//! Exact enumeration of Motzkin paths with air pockets.
//!
//! Paths use up-steps `U`, horizontal steps `H` and down-steps `D_k` of any
//! magnitude `k >= 1`, stay weakly above the x-axis, and never take two
//! down-steps in a row. This crate counts such paths (and their prefixes)
//! when peaks `U D_k`, valleys `D_k U` or double rises `U U` are forbidden,
//! along several independent routes:
//!
//! - [`enumerate`]: brute-force generation and a state-machine count,
//! - [`genfun`]: kernel-method generating functions over exact series,
//! - [`recurrence`]: the linear and convolution recurrences,
//! - [`riordan`]: Riordan arrays, A/Z-sequences and closed forms,
//!
//! plus the constructive bijections in [`bijection`] onto restricted Dyck
//! and Motzkin paths. All arithmetic is exact.

pub mod bijection;
pub mod enumerate;
pub mod genfun;
pub mod path;
pub mod recurrence;
pub mod riordan;
pub mod series;
pub mod triangle;

pub use bijection::{BijectionError, BijectionName, Decomposition};
pub use enumerate::{count_table, enumerate_pmap, CountTable};
pub use genfun::{CoeffFamily, GenFun, GenfunError, KernelRoots};
pub use path::{
    parse_path, parse_plain_path, render_path, AvoidanceClass, LatticePath, PathError,
    PatternCounts, Step,
};
pub use recurrence::RecurrenceError;
pub use riordan::{AZSequences, RiordanArray, RiordanError};
pub use series::{SeriesError, TruncatedSeries, DEFAULT_ORDER};
pub use triangle::Triangle;
