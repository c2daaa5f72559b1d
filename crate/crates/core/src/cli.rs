//! Command-line surface.
//!
//! Every command writes its result lines to `out` and usage problems to
//! `err`, and reports one of three exit statuses: 0 for success, 1 when an
//! object is invalid or a check fails, 2 for usage errors.

use std::collections::BTreeSet;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arity::Arity;
use crate::bijection::{path_to_tree, tree_to_path};
use crate::combinat::{
    count_paths, count_walks_brute, enumerate_paths, enumerate_trees, enumerate_walks, BigCount,
    MAX_WALK_N,
};
use crate::error::Error;
use crate::lattice::FrogWalk;
use crate::path::{classify, Path, Step};
use crate::tree::TAryTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Invalid = 1,
    Usage = 2,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }

    fn and(self, other: Status) -> Status {
        if self.code() >= other.code() {
            self
        } else {
            other
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "smotzkin",
    version,
    about = "S-Motzkin paths, ternary trees and frog walks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check whether an object is well formed and in its class.
    Validate {
        kind: Kind,
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
    /// Convert between paths, trees and walks.
    Convert {
        #[arg(long)]
        from: Kind,
        #[arg(long)]
        to: Kind,
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
    /// List every path or tree of a given size.
    Enumerate {
        kind: ShapeKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        t: usize,
        /// Print only the number of objects.
        #[arg(long, conflicts_with = "summary")]
        count_only: bool,
        /// Append a `total N` line.
        #[arg(long)]
        summary: bool,
    },
    /// Print the closed-form count.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        t: usize,
        /// Cross-check against exhaustive enumeration.
        #[arg(long)]
        brute: bool,
    },
    /// Draw a path or tree as ASCII art.
    Render {
        kind: ShapeKind,
        object: String,
        #[arg(long, default_value_t = 3)]
        t: usize,
    },
    /// Run the invariant suite up to a given size.
    Check {
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_delimiter = ',', default_value = "3")]
        t: Vec<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Path,
    Walk,
    Tree,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShapeKind {
    Path,
    Tree,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// The object in its text encoding.
    pub object: Option<String>,
    /// Newline-delimited objects, one result line each.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Status {
    match dispatch(cli, out, err) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            Status::Usage
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> io::Result<Status> {
    match &cli.command {
        Command::Validate { kind, input, t } => {
            let Some(arity) = arity_or_report(*t, err)? else {
                return Ok(Status::Usage);
            };
            for_each_object(input, out, err, |text| validate(*kind, arity, text))
        }
        Command::Convert { from, to, input, t } => {
            let Some(arity) = arity_or_report(*t, err)? else {
                return Ok(Status::Usage);
            };
            if from != to && arity != Arity::TERNARY {
                writeln!(
                    err,
                    "error: conversion {} -> {} is only defined for t = 3",
                    kind_name(*from),
                    kind_name(*to)
                )?;
                return Ok(Status::Usage);
            }
            for_each_object(input, out, err, |text| convert(*from, *to, arity, text))
        }
        Command::Enumerate {
            kind,
            n,
            t,
            count_only,
            summary,
        } => {
            let Some(arity) = arity_or_report(*t, err)? else {
                return Ok(Status::Usage);
            };
            cmd_enumerate(*kind, *n, arity, *count_only, *summary, out, err)
        }
        Command::Count { n, t, brute } => {
            let Some(arity) = arity_or_report(*t, err)? else {
                return Ok(Status::Usage);
            };
            cmd_count(*n, arity, *brute, out, err)
        }
        Command::Render { kind, object, t } => {
            let Some(arity) = arity_or_report(*t, err)? else {
                return Ok(Status::Usage);
            };
            match render(*kind, arity, object) {
                Ok(lines) => {
                    for line in lines {
                        writeln!(out, "{line}")?;
                    }
                    Ok(Status::Success)
                }
                Err(diagnostic) => {
                    writeln!(out, "{diagnostic}")?;
                    Ok(Status::Invalid)
                }
            }
        }
        Command::Check { max_n, t } => cmd_check(*max_n, t, out, err),
    }
}

fn arity_or_report(t: usize, err: &mut dyn Write) -> io::Result<Option<Arity>> {
    match Arity::new(t) {
        Ok(a) => Ok(Some(a)),
        Err(e) => {
            writeln!(err, "error: {e}")?;
            Ok(None)
        }
    }
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Path => "path",
        Kind::Walk => "walk",
        Kind::Tree => "tree",
    }
}

/// Runs `f` over the single positional object or every line of `--file`,
/// writing one line per object.
fn for_each_object(
    input: &Input,
    out: &mut dyn Write,
    err: &mut dyn Write,
    f: impl Fn(&str) -> Result<String, String>,
) -> io::Result<Status> {
    let contents;
    let objects: Vec<&str> = match (&input.object, &input.file) {
        (Some(object), None) => vec![object.as_str()],
        (None, Some(file)) => match fs::read_to_string(file) {
            Ok(text) => {
                contents = text;
                contents.lines().collect()
            }
            Err(e) => {
                writeln!(err, "error: cannot read {}: {e}", file.display())?;
                return Ok(Status::Usage);
            }
        },
        _ => {
            writeln!(err, "error: pass exactly one object or --file")?;
            return Ok(Status::Usage);
        }
    };

    let mut status = Status::Success;
    for object in objects {
        match f(object) {
            Ok(line) => writeln!(out, "{line}")?,
            Err(diagnostic) => {
                writeln!(out, "{diagnostic}")?;
                status = status.and(Status::Invalid);
            }
        }
    }
    Ok(status)
}

fn parse_error(e: Error) -> String {
    format!("parse-error: {e}")
}

/// Parses and validates a path of the given class.
fn checked_path(text: &str, arity: Arity) -> Result<Path, String> {
    let path = Path::parse(text).map_err(parse_error)?;
    let report = classify(&path, arity);
    if report.is_valid() {
        Ok(path)
    } else {
        Err(report.to_string())
    }
}

/// Parses a walk that stays in Ω and ends on the diagonal.
fn checked_walk(text: &str) -> Result<FrogWalk, String> {
    let walk = FrogWalk::parse(text).map_err(parse_error)?;
    if let Some(k) = walk.first_omega_violation() {
        return Err(format!("outside-omega at move {k}"));
    }
    let end = walk.endpoint();
    if !end.is_diagonal() {
        return Err(format!("not-closed: ends at {end}"));
    }
    Ok(walk)
}

fn checked_tree(text: &str, arity: Arity) -> Result<TAryTree, String> {
    TAryTree::parse(text, arity).map_err(parse_error)
}

fn validate(kind: Kind, arity: Arity, text: &str) -> Result<String, String> {
    match kind {
        Kind::Path => checked_path(text, arity).map(|_| ()),
        Kind::Walk => checked_walk(text).map(|_| ()),
        Kind::Tree => checked_tree(text, arity).map(|_| ()),
    }
    .map(|()| "valid".to_string())
}

fn ternary_tree_of(path: &Path) -> Result<TAryTree, String> {
    let tree = path_to_tree(path).map_err(|e| e.to_string())?;
    let back = tree_to_path(&tree).map_err(|e| e.to_string())?;
    if &back != path {
        return Err(format!("internal-error: {path} -> {tree} -> {back}"));
    }
    Ok(tree)
}

fn ternary_path_of(tree: &TAryTree) -> Result<Path, String> {
    let path = tree_to_path(tree).map_err(|e| e.to_string())?;
    let back = path_to_tree(&path).map_err(|e| e.to_string())?;
    if &back != tree {
        return Err(format!("internal-error: {tree} -> {path} -> {back}"));
    }
    Ok(path)
}

fn convert(from: Kind, to: Kind, arity: Arity, text: &str) -> Result<String, String> {
    let path = match from {
        Kind::Path => checked_path(text, arity)?,
        Kind::Walk => checked_walk(text)?.to_path(),
        Kind::Tree => {
            let tree = checked_tree(text, arity)?;
            if to == Kind::Tree {
                return Ok(tree.to_string());
            }
            ternary_path_of(&tree)?
        }
    };
    Ok(match to {
        Kind::Path => path.to_string(),
        Kind::Walk => FrogWalk::from_path(&path).to_string(),
        Kind::Tree => ternary_tree_of(&path)?.to_string(),
    })
}

fn cmd_enumerate(
    kind: ShapeKind,
    n: usize,
    arity: Arity,
    count_only: bool,
    summary: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<Status> {
    let items: Box<dyn Iterator<Item = String>> = match kind {
        ShapeKind::Path => match enumerate_paths(n, arity) {
            Ok(it) => Box::new(it.map(|p| p.to_string())),
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(Status::Usage);
            }
        },
        ShapeKind::Tree => match enumerate_trees(n, arity) {
            Ok(it) => Box::new(it.map(|t| t.to_string())),
            Err(e) => {
                writeln!(err, "error: {e}")?;
                return Ok(Status::Usage);
            }
        },
    };

    let mut total = 0usize;
    for item in items {
        total += 1;
        if !count_only {
            writeln!(out, "{item}")?;
        }
    }
    if count_only {
        writeln!(out, "{total}")?;
    } else if summary {
        writeln!(out, "total {total}")?;
    }
    Ok(Status::Success)
}

fn cmd_count(
    n: usize,
    arity: Arity,
    brute: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<Status> {
    let formula = count_paths(n as u64, arity);
    if !brute {
        writeln!(out, "{formula}")?;
        return Ok(Status::Success);
    }
    let (paths, trees) = match (enumerate_paths(n, arity), enumerate_trees(n, arity)) {
        (Ok(p), Ok(t)) => (p.count(), t.count()),
        (Err(e), _) | (_, Err(e)) => {
            writeln!(err, "error: {e}")?;
            return Ok(Status::Usage);
        }
    };
    if formula == BigCount::from(paths) && formula == BigCount::from(trees) {
        writeln!(out, "{formula}")?;
        Ok(Status::Success)
    } else {
        writeln!(
            out,
            "mismatch: formula {formula}, paths {paths}, trees {trees}"
        )?;
        Ok(Status::Invalid)
    }
}

fn render(kind: ShapeKind, arity: Arity, text: &str) -> Result<Vec<String>, String> {
    match kind {
        ShapeKind::Path => checked_path(text, arity).map(|p| render_path(&p)),
        ShapeKind::Tree => checked_tree(text, arity).map(|t| render_tree(&t)),
    }
}

/// Draws a path on a character grid, highest level first. Column `i` holds
/// step `i`: `_` at its level for a flat, `/` on the upper level of an up,
/// `\` on the upper level of a down.
pub fn render_path(path: &Path) -> Vec<String> {
    if path.is_empty() {
        return Vec::new();
    }
    let heights = path.height_profile();
    let top = heights.iter().copied().max().unwrap_or(0).max(0) as usize;
    let mut grid = vec![vec![b' '; path.len()]; top + 1];
    for (i, step) in path.iter().enumerate() {
        let (level, glyph) = match step {
            Step::F => (heights[i], b'_'),
            Step::U => (heights[i + 1], b'/'),
            Step::D => (heights[i], b'\\'),
        };
        // invalid paths never reach here, but keep negative levels off-grid
        if level >= 0 {
            grid[level as usize][i] = glyph;
        }
    }
    grid.into_iter()
        .rev()
        .map(|row| {
            String::from_utf8(row)
                .expect("ascii")
                .trim_end()
                .to_string()
        })
        .collect()
}

/// Indented outline of a tree, one node per line. Children carry their
/// position: `L`/`M`/`R` for ternary trees, `C0`..`C{t-1}` otherwise.
pub fn render_tree(tree: &TAryTree) -> Vec<String> {
    let ternary = tree.arity() == Arity::TERNARY;
    tree.preorder()
        .map(|(depth, position, _)| {
            let indent = "  ".repeat(depth);
            match position {
                None => format!("{indent}*"),
                Some(c) if ternary => format!("{indent}{}: *", ["L", "M", "R"][c]),
                Some(c) => format!("{indent}C{c}: *"),
            }
        })
        .collect()
}

struct CheckLog<'a> {
    out: &'a mut dyn Write,
    passed: usize,
    failed: usize,
}

impl CheckLog<'_> {
    fn record(&mut self, name: &str, result: Result<(), String>) -> io::Result<()> {
        match result {
            Ok(()) => {
                self.passed += 1;
                writeln!(self.out, "PASS {name}")
            }
            Err(why) => {
                self.failed += 1;
                writeln!(self.out, "FAIL {name}: {why}")
            }
        }
    }
}

fn cmd_check(
    max_n: usize,
    t_set: &[usize],
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> io::Result<Status> {
    let mut arities = Vec::new();
    for &t in t_set {
        let Some(arity) = arity_or_report(t, err)? else {
            return Ok(Status::Usage);
        };
        // probe the bound once so no check starts that cannot finish
        if let Err(e) = enumerate_paths(max_n, arity) {
            writeln!(err, "error: {e}")?;
            return Ok(Status::Usage);
        }
        arities.push(arity);
    }

    let mut log = CheckLog {
        out,
        passed: 0,
        failed: 0,
    };
    for &arity in &arities {
        let t = arity.get();
        for n in 0..=max_n {
            log.record(&format!("count t={t} n={n}"), check_counts(n, arity))?;
            log.record(
                &format!("paths-valid t={t} n={n}"),
                check_paths_valid(n, arity),
            )?;
            if arity == Arity::TERNARY {
                log.record(&format!("roundtrip-path n={n}"), check_path_roundtrip(n))?;
                log.record(&format!("roundtrip-tree n={n}"), check_tree_roundtrip(n))?;
                log.record(&format!("bijection n={n}"), check_bijection(n))?;
                if n <= MAX_WALK_N {
                    log.record(&format!("walks n={n}"), check_walks(n))?;
                }
            }
        }
    }

    let (passed, failed) = (log.passed, log.failed);
    if failed == 0 {
        writeln!(log.out, "all {passed} checks passed")?;
        Ok(Status::Success)
    } else {
        writeln!(log.out, "{failed} of {} checks failed", passed + failed)?;
        Ok(Status::Invalid)
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn check_counts(n: usize, arity: Arity) -> Result<(), String> {
    let formula = count_paths(n as u64, arity);
    let paths = enumerate_paths(n, arity)
        .map_err(|e| e.to_string())?
        .count();
    let trees = enumerate_trees(n, arity)
        .map_err(|e| e.to_string())?
        .count();
    ensure(
        formula == BigCount::from(paths) && formula == BigCount::from(trees),
        || format!("formula {formula}, paths {paths}, trees {trees}"),
    )
}

fn check_paths_valid(n: usize, arity: Arity) -> Result<(), String> {
    for p in enumerate_paths(n, arity).map_err(|e| e.to_string())? {
        let report = classify(&p, arity);
        ensure(report.is_valid(), || format!("{p}: {report}"))?;
    }
    Ok(())
}

fn check_path_roundtrip(n: usize) -> Result<(), String> {
    for p in enumerate_paths(n, Arity::TERNARY).map_err(|e| e.to_string())? {
        let tree = path_to_tree(&p).map_err(|e| format!("{p}: {e}"))?;
        ensure(tree.size() == n, || format!("{p} -> {tree} has wrong size"))?;
        let back = tree_to_path(&tree).map_err(|e| e.to_string())?;
        ensure(back == p, || format!("{p} -> {tree} -> {back}"))?;
    }
    Ok(())
}

fn check_tree_roundtrip(n: usize) -> Result<(), String> {
    for tree in enumerate_trees(n, Arity::TERNARY).map_err(|e| e.to_string())? {
        let p = tree_to_path(&tree).map_err(|e| e.to_string())?;
        let report = classify(&p, Arity::TERNARY);
        ensure(report.is_valid(), || format!("{tree} -> {p}: {report}"))?;
        let back = path_to_tree(&p).map_err(|e| e.to_string())?;
        ensure(back == tree, || format!("{tree} -> {p} -> {back}"))?;
    }
    Ok(())
}

fn check_bijection(n: usize) -> Result<(), String> {
    let mut image = BTreeSet::new();
    for p in enumerate_paths(n, Arity::TERNARY).map_err(|e| e.to_string())? {
        let tree = path_to_tree(&p).map_err(|e| e.to_string())?.to_string();
        ensure(image.insert(tree.clone()), || format!("{tree} hit twice"))?;
    }
    let trees: BTreeSet<String> = enumerate_trees(n, Arity::TERNARY)
        .map_err(|e| e.to_string())?
        .map(|t| t.to_string())
        .collect();
    ensure(image == trees, || {
        format!("image has {} trees, expected {}", image.len(), trees.len())
    })
}

fn check_walks(n: usize) -> Result<(), String> {
    let count = count_walks_brute(n).map_err(|e| e.to_string())?;
    let formula = count_paths(n as u64, Arity::TERNARY);
    ensure(count == formula, || {
        format!("walks {count}, formula {formula}")
    })?;
    let from_walks: BTreeSet<Path> = enumerate_walks(n)
        .map_err(|e| e.to_string())?
        .map(|w| w.to_path())
        .collect();
    let paths: BTreeSet<Path> = enumerate_paths(n, Arity::TERNARY)
        .map_err(|e| e.to_string())?
        .collect();
    ensure(from_walks == paths, || {
        "relabelled walks differ from paths".into()
    })
}
