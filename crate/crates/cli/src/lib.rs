//! Command-line front end: counting, triangles, series, bijections,
//! verification suites and path rendering.

use std::fmt::Display;
use std::io::{self, Write};
use std::time::Instant;

use airpockets::bijection::{apply_traced, verify_bijection};
use airpockets::enumerate::count_table;
use airpockets::recurrence;
use airpockets::riordan::{self, a_and_z_sequences, rebuild_from_az};
use airpockets::{
    genfun, parse_path, AvoidanceClass, BijectionName, GenFun, RiordanArray, Triangle,
    TruncatedSeries, DEFAULT_ORDER,
};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

/// Environment variable overriding the working truncation order.
pub const ORDER_ENV: &str = "AIRPOCKETS_ORDER";

pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_DISAGREEMENT: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "airpockets",
    version,
    about = "Motzkin paths with air pockets: counts, series, triangles and bijections"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print t(n,k), or row n when k is omitted.
    Count {
        #[arg(value_parser = parse_class)]
        class: AvoidanceClass,
        n: usize,
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
        /// Run every applicable engine and require agreement.
        #[arg(long)]
        check: bool,
    },
    /// Print rows 0..rows of the count triangle.
    Triangle {
        #[arg(value_parser = parse_class)]
        class: AvoidanceClass,
        rows: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Also print the leading coefficients of the Riordan pair (g, f).
        #[arg(long)]
        riordan: bool,
        /// UU-less only: print g(n,k) = t(n+k-1,k) instead of t(n,k).
        #[arg(long = "reindex-g")]
        reindex_g: bool,
    },
    /// Print coefficients 0..=order of a named series:
    /// `total1 <class> <order>`, `total0 <class> <order>`, `aseq <class> <order>`,
    /// `zseq <class> <order>` or `catalan <order>`.
    Series {
        #[arg(value_enum)]
        name: SeriesName,
        /// `[class] order`
        #[arg(num_args = 1..=2, required = true)]
        args: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// First index in b-file output.
        #[arg(long, default_value_t = 0)]
        offset: i64,
    },
    /// Apply psi, phi or chi to a path.
    Bijection {
        #[arg(value_parser = parse_bijection)]
        name: BijectionName,
        path: String,
        /// Print the decomposition tree.
        #[arg(long)]
        trace: bool,
    },
    /// Run cross-engine checks; exits 1 if any fails.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 12)]
        nmax: usize,
    },
    /// Draw the height profile of a path.
    Render { path: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Brute,
    Series,
    Recurrence,
    ClosedForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    Total1,
    Total0,
    Aseq,
    Zseq,
    Catalan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Systems,
    Triangles,
    Bijections,
    Riordan,
    All,
}

fn parse_class(s: &str) -> Result<AvoidanceClass, String> {
    s.parse()
        .map_err(|e: airpockets::path::UnknownClass| e.to_string())
}

fn parse_bijection(s: &str) -> Result<BijectionName, String> {
    s.parse()
        .map_err(|e: airpockets::BijectionError| e.to_string())
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Disagreement(String),
    VerifyFailed(usize),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => EXIT_USAGE,
            CliError::Disagreement(_) => EXIT_DISAGREEMENT,
            CliError::VerifyFailed(_) => EXIT_VERIFY_FAILED,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "error: {msg}"),
            CliError::Disagreement(msg) => write!(f, "engines disagree: {msg}"),
            CliError::VerifyFailed(n) => write!(f, "{n} check(s) failed"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn usage(e: impl Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Working truncation order: `AIRPOCKETS_ORDER` or the default, raised to
/// `needed` when a request asks for more terms.
pub fn working_order(needed: usize) -> Result<usize, CliError> {
    let base = match std::env::var(ORDER_ENV) {
        Ok(v) => v.trim().parse::<usize>().map_err(|_| {
            CliError::Usage(format!(
                "{ORDER_ENV} must be a non-negative integer, got `{v}`"
            ))
        })?,
        Err(_) => DEFAULT_ORDER,
    };
    Ok(base.max(needed).max(2))
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Count {
            class,
            n,
            k,
            method,
            check,
        } => cmd_count(out, class, n, k, method, check),
        Command::Triangle {
            class,
            rows,
            format,
            riordan,
            reindex_g,
        } => cmd_triangle(out, class, rows, format, riordan, reindex_g),
        Command::Series {
            name,
            args,
            format,
            offset,
        } => cmd_series(out, name, &args, format, offset),
        Command::Bijection { name, path, trace } => cmd_bijection(out, name, &path, trace),
        Command::Verify { suite, nmax } => cmd_verify(out, suite, nmax),
        Command::Render { path } => cmd_render(out, &path),
    }
}

fn engines_for(class: AvoidanceClass) -> Vec<Method> {
    match class {
        AvoidanceClass::PeakLess | AvoidanceClass::ValleyLess => {
            vec![
                Method::Brute,
                Method::Series,
                Method::Recurrence,
                Method::ClosedForm,
            ]
        }
        AvoidanceClass::DoubleRiseLess => vec![Method::Brute, Method::Series, Method::Recurrence],
        AvoidanceClass::Unrestricted => vec![Method::Brute],
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Brute => "brute",
        Method::Series => "series",
        Method::Recurrence => "recurrence",
        Method::ClosedForm => "closed-form",
    }
}

/// Row `n` of the triangle by one engine.
fn row_by(class: AvoidanceClass, n: usize, method: Method) -> Result<Vec<BigInt>, CliError> {
    if !engines_for(class).contains(&method) {
        return Err(CliError::Usage(format!(
            "method {} is not available for class {class}",
            method_name(method)
        )));
    }
    match method {
        Method::Brute => Ok(count_table(n, class).total.row(n).to_vec()),
        Method::Series => {
            let gf = GenFun::new(class, working_order(n)?).map_err(usage)?;
            (0..=n)
                .map(|k| {
                    let col = gf.total_column(k).map_err(usage)?;
                    let c = col.coeff(n);
                    if c.is_integer() {
                        Ok(c.to_integer())
                    } else {
                        Err(CliError::Usage(format!("non-integral coefficient {c}")))
                    }
                })
                .collect()
        }
        Method::Recurrence => Ok(recurrence::triangle(class, n + 1)
            .map_err(usage)?
            .row(n)
            .to_vec()),
        Method::ClosedForm => {
            let f = match class {
                AvoidanceClass::PeakLess => riordan::closed_form_peakless,
                _ => riordan::closed_form_valleyless,
            };
            (0..=n as i64)
                .map(|k| f(n as i64, k).map_err(usage))
                .collect()
        }
    }
}

fn cmd_count(
    out: &mut dyn Write,
    class: AvoidanceClass,
    n: usize,
    k: Option<usize>,
    method: Method,
    check: bool,
) -> Result<(), CliError> {
    let pick = |row: &[BigInt]| -> Vec<BigInt> {
        match k {
            Some(k) => vec![row.get(k).cloned().unwrap_or_default()],
            None => row.to_vec(),
        }
    };
    let line = |v: &[BigInt]| {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    if !check {
        let row = row_by(class, n, method)?;
        writeln!(out, "{}", line(&pick(&row)))?;
        return Ok(());
    }
    let engines = engines_for(class);
    let results = engines
        .iter()
        .map(|&m| Ok((m, pick(&row_by(class, n, m)?))))
        .collect::<Result<Vec<_>, CliError>>()?;
    let reference = &results[0].1;
    let agree = results.iter().all(|(_, v)| v == reference);
    writeln!(out, "{}", line(reference))?;
    let names: Vec<&str> = engines.iter().map(|&m| method_name(m)).collect();
    if agree {
        writeln!(out, "engines agree: {}", names.join(", "))?;
        Ok(())
    } else {
        let detail: Vec<String> = results
            .iter()
            .map(|(m, v)| format!("{}={}", method_name(*m), line(v)))
            .collect();
        writeln!(out, "{}", detail.join("; "))?;
        Err(CliError::Disagreement(detail.join("; ")))
    }
}

fn riordan_for(class: AvoidanceClass, order: usize) -> Result<RiordanArray, CliError> {
    match class {
        AvoidanceClass::PeakLess => riordan::peakless_array(order),
        AvoidanceClass::ValleyLess => riordan::valleyless_array(order),
        AvoidanceClass::DoubleRiseLess => riordan::uuless_g_array(order),
        AvoidanceClass::Unrestricted => {
            return Err(CliError::Usage(
                "no Riordan array is known for class none".into(),
            ))
        }
    }
    .map_err(usage)
}

fn join<T: Display>(v: &[T], sep: &str) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn json_number(v: &impl Display) -> Value {
    let text = v.to_string();
    serde_json::from_str(&text).unwrap_or(Value::String(text))
}

fn cmd_triangle(
    out: &mut dyn Write,
    class: AvoidanceClass,
    rows: usize,
    format: Format,
    with_riordan: bool,
    reindex_g: bool,
) -> Result<(), CliError> {
    let table = if reindex_g {
        if class != AvoidanceClass::DoubleRiseLess {
            return Err(CliError::Usage(
                "--reindex-g applies to class uuless only".into(),
            ));
        }
        let depth = (2 * rows).saturating_sub(2).max(1);
        riordan::g_triangle_reindex(&count_table(depth - 1, class).total, rows).map_err(usage)?
    } else if rows == 0 {
        Triangle::zeros(0)
    } else {
        count_table(rows - 1, class).total
    };
    let pair = if with_riordan {
        let r = riordan_for(class, working_order(rows)?)?;
        let take = |s: &TruncatedSeries| s.coeffs()[..rows.min(s.order() + 1)].to_vec();
        Some((take(r.g()), take(r.f())))
    } else {
        None
    };
    match format {
        Format::Table => write!(out, "{table}")?,
        Format::Csv => {
            for row in table.rows() {
                writeln!(
                    out,
                    "{}",
                    row.iter()
                        .map(ToString::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                )?;
            }
        }
        Format::Json => {
            let rows_json: Vec<Value> = table
                .rows()
                .iter()
                .map(|r| Value::Array(r.iter().map(json_number).collect()))
                .collect();
            let mut doc = json!({ "class": class.to_string(), "rows": rows_json });
            if let Some((g, f)) = &pair {
                doc["riordan"] = json!({
                    "g": g.iter().map(json_number).collect::<Vec<_>>(),
                    "f": f.iter().map(json_number).collect::<Vec<_>>(),
                });
            }
            writeln!(out, "{doc}")?;
        }
        Format::Bfile => {
            for (i, v) in table.rows().iter().flatten().enumerate() {
                writeln!(out, "{i} {v}")?;
            }
        }
    }
    if let (Some((g, f)), false) = (&pair, format == Format::Json) {
        let sep = if format == Format::Csv { "," } else { " " };
        writeln!(out, "# g: {}", join(g, sep))?;
        writeln!(out, "# f: {}", join(f, sep))?;
    }
    Ok(())
}

fn series_values(
    name: SeriesName,
    class: Option<AvoidanceClass>,
    order: usize,
) -> Result<Vec<String>, CliError> {
    let work = working_order(order + 1)?;
    let need_class = || class.ok_or_else(|| CliError::Usage("this series needs a class".into()));
    let to_strings = |s: &TruncatedSeries| {
        s.coeffs()[..=order]
            .iter()
            .map(ToString::to_string)
            .collect()
    };
    match name {
        SeriesName::Catalan => {
            if class.is_some() {
                return Err(CliError::Usage("catalan takes no class".into()));
            }
            Ok(to_strings(&riordan::catalan(work).map_err(usage)?))
        }
        SeriesName::Total1 | SeriesName::Total0 => {
            let class = need_class()?;
            if class == AvoidanceClass::Unrestricted {
                let table = count_table(order, class);
                let v = match name {
                    SeriesName::Total1 => table.row_totals(),
                    _ => table.total.column(0),
                };
                return Ok(v.iter().map(ToString::to_string).collect());
            }
            let s = match name {
                SeriesName::Total1 => genfun::total_at_one(class, work),
                _ => genfun::total_column(class, 0, work),
            }
            .map_err(usage)?;
            Ok(to_strings(&s))
        }
        SeriesName::Aseq | SeriesName::Zseq => {
            let r = riordan_for(need_class()?, work + 2)?;
            let az = a_and_z_sequences(&r, order + 1).map_err(usage)?;
            let v = if name == SeriesName::Aseq {
                az.a
            } else {
                az.z_seq
            };
            Ok(v.iter().map(ToString::to_string).collect())
        }
    }
}

fn cmd_series(
    out: &mut dyn Write,
    name: SeriesName,
    args: &[String],
    format: Format,
    offset: i64,
) -> Result<(), CliError> {
    let (class, order_text) = match args {
        [order] => (None, order),
        [class, order] => (Some(parse_class(class).map_err(CliError::Usage)?), order),
        _ => return Err(CliError::Usage("expected `[class] order`".into())),
    };
    let order: usize = order_text.parse().map_err(|_| {
        CliError::Usage(format!(
            "order must be a non-negative integer, got `{order_text}`"
        ))
    })?;
    let values = series_values(name, class, order)?;
    match format {
        Format::Table => writeln!(out, "{}", values.join(" "))?,
        Format::Csv => writeln!(out, "{}", values.join(","))?,
        Format::Json => writeln!(
            out,
            "{}",
            Value::Array(values.iter().map(json_number).collect())
        )?,
        Format::Bfile => {
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{} {v}", i as i64 + offset)?;
            }
        }
    }
    Ok(())
}

fn cmd_bijection(
    out: &mut dyn Write,
    name: BijectionName,
    text: &str,
    trace: bool,
) -> Result<(), CliError> {
    let path = parse_path(text).map_err(usage)?;
    let (image, lines) = apply_traced(name, &path).map_err(usage)?;
    if trace {
        for line in lines {
            writeln!(out, "{line}")?;
        }
    }
    writeln!(out, "{image}")?;
    Ok(())
}

/// ASCII profile: one column per step, `/` for `U`, `_` for `H`, and `\`
/// over `|` for a down-step of size `k`, followed by the height sequence.
pub fn render(path: &airpockets::LatticePath) -> String {
    if path.is_empty() {
        return String::new();
    }
    let bands = path
        .steps()
        .iter()
        .enumerate()
        .map(|(i, step)| match step {
            airpockets::Step::Down(_) => path.height_at(i) as usize,
            _ => path.height_at(i) as usize + 1,
        })
        .max()
        .unwrap_or(1);
    let mut grid = vec![vec![' '; path.len()]; bands];
    for (i, step) in path.steps().iter().enumerate() {
        let h = path.height_at(i) as usize;
        match step {
            airpockets::Step::Up => grid[h][i] = '/',
            airpockets::Step::Horizontal => grid[h][i] = '_',
            airpockets::Step::Down(k) => {
                let k = *k as usize;
                grid[h - 1][i] = '\\';
                for row in &mut grid[h - k..h - 1] {
                    row[i] = '|';
                }
            }
        }
    }
    let mut text = String::new();
    for row in grid.iter().rev() {
        let line: String = row.iter().collect();
        text.push_str(line.trim_end());
        text.push('\n');
    }
    let heights: Vec<String> = path.heights().iter().map(ToString::to_string).collect();
    text.push_str(&format!("heights: {}\n", heights.join(" ")));
    text
}

fn cmd_render(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    let path = parse_path(text).map_err(usage)?;
    write!(out, "{}", render(&path))?;
    Ok(())
}

struct Check {
    name: String,
    result: Result<String, String>,
    seconds: f64,
}

fn timed(name: impl Into<String>, f: impl FnOnce() -> Result<String, String>) -> Check {
    let start = Instant::now();
    let result = f();
    Check {
        name: name.into(),
        result,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn suite_systems(order: usize) -> Vec<Check> {
    AvoidanceClass::RESTRICTED
        .iter()
        .map(|&class| {
            timed(format!("systems/{class}"), || {
                let report = genfun::verify_system(class, order).map_err(|e| e.to_string())?;
                Ok(format!(
                    "{} residuals zero to order {order}",
                    report.checks.len()
                ))
            })
        })
        .collect()
}

fn suite_triangles(nmax: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for class in AvoidanceClass::RESTRICTED {
        checks.push(timed(format!("triangles/{class}"), || {
            let base = count_table(nmax, class).total;
            let series =
                genfun::triangle_from_series(class, nmax + 1).map_err(|e| e.to_string())?;
            let rec = recurrence::triangle(class, nmax + 1).map_err(|e| e.to_string())?;
            let order = working_order(nmax + 1).map_err(|e| e.to_string())?;
            let r = riordan_for(class, order).map_err(|e| e.to_string())?;
            let from_array = r.integer_triangle(nmax + 1).map_err(|e| e.to_string())?;
            let array_target = if class == AvoidanceClass::DoubleRiseLess {
                let deep = count_table((2 * nmax).max(1), class).total;
                riordan::g_triangle_reindex(&deep, nmax + 1).map_err(|e| e.to_string())?
            } else {
                base.clone()
            };
            if series != base {
                return Err("series engine differs from enumeration".into());
            }
            if rec != base {
                return Err("recurrence engine differs from enumeration".into());
            }
            if from_array != array_target {
                return Err("Riordan array differs from enumeration".into());
            }
            let mut engines = 4;
            if class != AvoidanceClass::DoubleRiseLess {
                engines += 1;
                for n in 0..=nmax as i64 {
                    for k in 0..=n {
                        let v = match class {
                            AvoidanceClass::PeakLess => riordan::closed_form_peakless(n, k),
                            _ => riordan::closed_form_valleyless(n, k),
                        }
                        .map_err(|e| e.to_string())?;
                        if v != base.get(n, k) {
                            return Err(format!("closed form differs at ({n},{k})"));
                        }
                    }
                }
            }
            Ok(format!("{engines} engines agree for n <= {nmax}"))
        }));
    }
    checks
}

fn suite_bijections(nmax: usize) -> Vec<Check> {
    BijectionName::ALL
        .iter()
        .map(|&map| {
            timed(format!("bijections/{map}"), || {
                let mut sizes = Vec::new();
                for n in 0..=nmax {
                    let r = verify_bijection(map, n).map_err(|e| format!("n={n}: {e}"))?;
                    sizes.push(format!("{}={}", r.domain_size, r.codomain_size));
                }
                Ok(format!("n=0..{nmax}: {}", sizes.join(" ")))
            })
        })
        .collect()
}

fn suite_riordan(nmax: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for class in AvoidanceClass::RESTRICTED {
        checks.push(timed(format!("riordan/{class}"), || {
            let order = working_order(nmax + 2).map_err(|e| e.to_string())?;
            let r = riordan_for(class, order).map_err(|e| e.to_string())?;
            let rows = nmax + 1;
            let inv = r.inverse().map_err(|e| e.to_string())?;
            let id = RiordanArray::identity(r.order());
            if r.product(&inv).map_err(|e| e.to_string())? != id {
                return Err("R * R^-1 is not the identity".into());
            }
            let m = r.triangle(rows).map_err(|e| e.to_string())?;
            let mi = inv.triangle(rows).map_err(|e| e.to_string())?;
            let prod = mi.matmul(&m);
            let is_identity = prod.rows().iter().enumerate().all(|(n, row)| {
                row.iter().enumerate().all(|(k, v)| {
                    if n == k {
                        *v == BigInt::from(1).into()
                    } else {
                        *v == BigInt::from(0).into()
                    }
                })
            });
            if !is_identity {
                return Err("inverse block times block is not the identity".into());
            }
            let az = a_and_z_sequences(&r, rows).map_err(|e| e.to_string())?;
            let rebuilt = rebuild_from_az(&r.g().coeff(0), &az, rows).map_err(|e| e.to_string())?;
            if rebuilt != m {
                return Err("A/Z rebuild differs".into());
            }
            if class == AvoidanceClass::PeakLess {
                for (n, a) in az.a.iter().enumerate() {
                    let e = riordan::explicit_a(n as i64).map_err(|e| e.to_string())?;
                    if *a != e.into() {
                        return Err(format!("explicit a({n}) differs"));
                    }
                }
            }
            Ok(format!("group laws and A/Z rebuild hold on {rows} rows"))
        }));
    }
    checks
}

fn cmd_verify(out: &mut dyn Write, suite: Suite, nmax: usize) -> Result<(), CliError> {
    let order = working_order(nmax)?;
    let mut checks = Vec::new();
    if matches!(suite, Suite::Systems | Suite::All) {
        checks.extend(suite_systems(order));
    }
    if matches!(suite, Suite::Triangles | Suite::All) {
        checks.extend(suite_triangles(nmax));
    }
    if matches!(suite, Suite::Bijections | Suite::All) {
        checks.extend(suite_bijections(nmax));
    }
    if matches!(suite, Suite::Riordan | Suite::All) {
        checks.extend(suite_riordan(nmax));
    }
    let mut failed = 0;
    for c in &checks {
        match &c.result {
            Ok(detail) => writeln!(out, "PASS {} ({:.2}s) {detail}", c.name, c.seconds)?,
            Err(detail) => {
                failed += 1;
                writeln!(out, "FAIL {} ({:.2}s) {detail}", c.name, c.seconds)?;
            }
        }
    }
    writeln!(out, "{} passed, {failed} failed", checks.len() - failed)?;
    if failed > 0 {
        Err(CliError::VerifyFailed(failed))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<(), CliError>, String) {
        let cli =
            Cli::try_parse_from(std::iter::once("airpockets").chain(args.iter().copied())).unwrap();
        let mut out = Vec::new();
        let r = run(cli, &mut out);
        (r, String::from_utf8(out).unwrap())
    }

    #[test]
    fn render_arch() {
        let (r, text) = run_args(&["render", "UHD"]);
        r.unwrap();
        assert_eq!(text, " _\n/ \\\nheights: 1 1 0\n");
    }

    #[test]
    fn render_drop() {
        let text = render(&parse_path("UUHD2").unwrap());
        assert_eq!(text, "  _\n / \\\n/  |\nheights: 1 2 2 0\n");
        assert_eq!(render(&parse_path("").unwrap()), "");
    }

    #[test]
    fn every_count_method() {
        for method in ["brute", "series", "recurrence", "closed-form"] {
            let (r, text) = run_args(&["count", "peakless", "5", "1", "--method", method]);
            r.unwrap();
            assert_eq!(text.trim(), "15", "{method}");
        }
        let (r, _) = run_args(&["count", "uuless", "5", "--method", "closed-form"]);
        assert_eq!(r.unwrap_err().exit_code(), EXIT_USAGE);
    }

    #[test]
    fn series_formats_agree() {
        let (_, table) = run_args(&["series", "aseq", "peakless", "10"]);
        let (_, csv) = run_args(&["series", "aseq", "peakless", "10", "--format", "csv"]);
        let (_, json) = run_args(&["series", "aseq", "peakless", "10", "--format", "json"]);
        let (_, bfile) = run_args(&[
            "series", "aseq", "peakless", "10", "--format", "bfile", "--offset", "1",
        ]);
        assert_eq!(table.trim(), "1 1 0 1 0 1 -1 2 -3 6 -10");
        assert_eq!(csv.trim(), "1,1,0,1,0,1,-1,2,-3,6,-10");
        assert_eq!(json.trim(), "[1,1,0,1,0,1,-1,2,-3,6,-10]");
        let from_bfile: Vec<&str> = bfile
            .lines()
            .map(|l| l.split(' ').nth(1).unwrap())
            .collect();
        assert_eq!(from_bfile.join(" "), table.trim());
        assert!(bfile.starts_with("1 1\n"));
    }
}
