//! The lattice `L_m` and the encoding of descending plane partitions as
//! families of `m-1` non-intersecting lattice paths.
//!
//! The real part of the lattice consists of starting points
//! `S_i = (0, i+1)`, ending points `E_i = (i, 0)`, and the rectangle
//! `{1..m-1} x {1..m}`, with rightward and downward arcs between adjacent
//! points (never between two starting or two ending points). Row `i` of a
//! partition becomes the path whose `j`-th horizontal step has height equal
//! to the `j`-th part, so a row with first part `v` starts at `S_{v-1}`.
//!
//! Terminals not used by real paths are joined by virtual paths through two
//! diagonals `D1 = {(-x, x)}` and `D2 = {(-x, x+1)}` left of the axis. For
//! each `i` there is exactly one virtual path `S_i -> E_i`, and for each
//! `i <= m-2` exactly one virtual path `S_i -> E_{i+1}`; the latter carry
//! weight `-1` so that signed path counts reproduce the counting determinant.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Deserializer, Serialize};
use thiserror::Error;

use crate::dpp::{validate_dpp, Dpp, DppError};
use crate::exact::binomial;

pub type Point = (i32, i32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("lattice dimension must be at least 2, got {m}")]
    DimensionTooSmall { m: usize },

    #[error("part {value} exceeds dimension {m}")]
    PartExceedsDimension { m: usize, value: u32 },

    #[error("terminal index ({i}, {j}) out of range 1..={max}")]
    IndexOutOfRange { i: usize, j: usize, max: usize },

    #[error("family must contain {expected} paths, got {got}")]
    WrongPathCount { expected: usize, got: usize },

    #[error("paths intersect at point ({}, {})", .0.0, .0.1)]
    Intersecting(Point),

    #[error("terminal {0} used twice")]
    TerminalReused(String),

    #[error("ill-formed virtual path from S_{start} to E_{end}")]
    IllFormedVirtual { start: usize, end: usize },

    #[error("ill-formed real path from S_{start} to E_{end}: {reason}")]
    IllFormedReal { start: usize, end: usize, reason: String },

    #[error("decoded array is not a descending plane partition: {0}")]
    InvalidDecodedDpp(#[from] DppError),
}

/// The directed lattice `L_m` with its arc weights.
#[derive(Clone)]
pub struct LatticeM {
    m: usize,
    arcs: BTreeMap<Point, Vec<(Point, i8)>>,
    points: BTreeSet<Point>,
}

pub fn start_point(i: usize) -> Point {
    (0, i as i32 + 1)
}

pub fn end_point(i: usize) -> Point {
    (i as i32, 0)
}

/// Builds `L_m` for `m >= 2`.
pub fn build_lattice(m: usize) -> Result<LatticeM, LatticeError> {
    if m < 2 {
        return Err(LatticeError::DimensionTooSmall { m });
    }
    let mi = m as i32;
    let mut points: BTreeSet<Point> = BTreeSet::new();
    let starts: BTreeSet<Point> = (1..m).map(start_point).collect();
    let ends: BTreeSet<Point> = (1..m).map(end_point).collect();
    points.extend(&starts);
    points.extend(&ends);
    for x in 1..mi {
        for y in 1..=mi {
            points.insert((x, y));
        }
    }
    for x in 2..mi {
        points.insert((-x, x)); // D1
    }
    for x in 1..mi {
        points.insert((-x, x + 1)); // D2
    }

    let mut arcs: BTreeMap<Point, Vec<(Point, i8)>> = BTreeMap::new();
    let add = |arcs: &mut BTreeMap<Point, Vec<(Point, i8)>>, p: Point, q: Point, w: i8| {
        arcs.entry(p).or_default().push((q, w));
    };

    // real arcs: rightward and downward between adjacent points of S ∪ E ∪ R,
    // never joining two starting or two ending points
    let real: BTreeSet<Point> = points.iter().copied().filter(|&(x, _)| x >= 0).collect();
    for &p in &real {
        for q in [(p.0 + 1, p.1), (p.0, p.1 - 1)] {
            if !real.contains(&q) {
                continue;
            }
            if starts.contains(&p) && starts.contains(&q) {
                continue;
            }
            if ends.contains(&p) && ends.contains(&q) {
                continue;
            }
            add(&mut arcs, p, q, 1);
        }
    }

    // virtual arcs; the leftward moves along D2 -> D1 discriminate the
    // S_i -> E_{i+1} paths and carry weight -1
    for i in 1..mi {
        add(&mut arcs, (0, i + 1), (-i, i + 1), 1);
    }
    for i in 1..mi - 1 {
        add(&mut arcs, (-i, i + 1), (-i - 1, i + 1), -1);
    }
    for i in 2..mi {
        add(&mut arcs, (-i, i + 1), (-i, i), 1);
        add(&mut arcs, (-i, i), (i, 0), 1);
    }
    add(&mut arcs, (-1, 2), (1, 0), 1);

    for targets in arcs.values_mut() {
        targets.sort();
    }
    Ok(LatticeM { m, arcs, points })
}

impl LatticeM {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn points(&self) -> &BTreeSet<Point> {
        &self.points
    }

    pub fn arcs_from(&self, p: Point) -> &[(Point, i8)] {
        self.arcs.get(&p).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn has_arc(&self, p: Point, q: Point) -> bool {
        self.arcs_from(p).iter().any(|&(t, _)| t == q)
    }

    fn check_indices(&self, i: usize, j: usize) -> Result<(), LatticeError> {
        if i < 1 || i > self.m - 1 || j < 1 || j > self.m - 1 {
            return Err(LatticeError::IndexOutOfRange { i, j, max: self.m - 1 });
        }
        Ok(())
    }

    /// Number of lattice paths from `S_i` to `E_j`, by exhaustive memoized
    /// DFS over the arc relation.
    pub fn count_paths(&self, i: usize, j: usize) -> Result<u64, LatticeError> {
        self.check_indices(i, j)?;
        let (count, _) = self.dfs(start_point(i), end_point(j));
        debug_assert_eq!(count, path_count_formula(i, j));
        Ok(count)
    }

    /// Signed count: each path weighs the product of its arc weights, so the
    /// unique virtual `S_i -> E_{i+1}` path contributes `-1`.
    pub fn weighted_count(&self, i: usize, j: usize) -> Result<i64, LatticeError> {
        self.check_indices(i, j)?;
        let (_, weighted) = self.dfs(start_point(i), end_point(j));
        debug_assert_eq!(weighted, weighted_count_formula(i, j));
        Ok(weighted)
    }

    fn dfs(&self, from: Point, to: Point) -> (u64, i64) {
        fn go(
            lat: &LatticeM,
            p: Point,
            to: Point,
            memo: &mut HashMap<Point, (u64, i64)>,
        ) -> (u64, i64) {
            if p == to {
                return (1, 1);
            }
            if let Some(&cached) = memo.get(&p) {
                return cached;
            }
            let mut acc = (0u64, 0i64);
            for &(q, w) in lat.arcs_from(p) {
                let (c, s) = go(lat, q, to, memo);
                acc.0 += c;
                acc.1 += w as i64 * s;
            }
            memo.insert(p, acc);
            acc
        }
        go(self, from, to, &mut HashMap::new())
    }
}

/// Closed form `C(i+j-1, j-1) + [i=j] + [i+1=j]` for the path count.
pub fn path_count_formula(i: usize, j: usize) -> u64 {
    let c: u64 = binomial((i + j - 1) as u64, j as i64 - 1)
        .try_into()
        .expect("binomial fits u64 at desk scale");
    c + u64::from(i == j) + u64::from(i + 1 == j)
}

/// Closed form `C(i+j-1, j-1) + [i=j] - [i+1=j]` for the signed path count.
pub fn weighted_count_formula(i: usize, j: usize) -> i64 {
    let c: i64 = binomial((i + j - 1) as u64, j as i64 - 1)
        .try_into()
        .expect("binomial fits i64 at desk scale");
    c + i64::from(i == j) - i64::from(i + 1 == j)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    Real,
    Virtual,
}

/// One lattice path with its full vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePath {
    pub kind: PathKind,
    pub start: usize,
    pub end: usize,
    pub points: Vec<Point>,
}

impl LatticePath {
    /// Heights of the horizontal steps, in order.
    pub fn step_heights(&self) -> Vec<u32> {
        self.points
            .windows(2)
            .filter(|w| w[1].0 == w[0].0 + 1 && w[1].1 == w[0].1)
            .map(|w| w[0].1 as u32)
            .collect()
    }

    /// Number of horizontal steps.
    pub fn length(&self) -> usize {
        self.step_heights().len()
    }
}

/// The canonical vertex list of the unique virtual path `S_i -> E_i`.
pub fn virtual_path_straight(i: usize) -> LatticePath {
    let ii = i as i32;
    let points = if i == 1 {
        vec![(0, 2), (-1, 2), (1, 0)]
    } else {
        vec![(0, ii + 1), (-ii, ii + 1), (-ii, ii), (ii, 0)]
    };
    LatticePath { kind: PathKind::Virtual, start: i, end: i, points }
}

/// The canonical vertex list of the unique virtual path `S_i -> E_{i+1}`.
pub fn virtual_path_shifted(i: usize) -> LatticePath {
    let ii = i as i32;
    LatticePath {
        kind: PathKind::Virtual,
        start: i,
        end: i + 1,
        points: vec![(0, ii + 1), (-ii, ii + 1), (-ii - 1, ii + 1), (ii + 1, 0)],
    }
}

/// A family of `m-1` pairwise vertex-disjoint paths using every starting and
/// every ending point exactly once. Paths are stored from the highest
/// starting index down, so the real paths appear in row order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFamily {
    m: usize,
    paths: Vec<LatticePath>,
}

impl PathFamily {
    /// Validates and canonicalizes a family.
    pub fn new(m: usize, mut paths: Vec<LatticePath>) -> Result<Self, LatticeError> {
        if m < 2 {
            return Err(LatticeError::DimensionTooSmall { m });
        }
        if paths.len() != m - 1 {
            return Err(LatticeError::WrongPathCount { expected: m - 1, got: paths.len() });
        }
        let mut starts_seen = vec![false; m];
        let mut ends_seen = vec![false; m];
        for path in &paths {
            let (s, e) = (path.start, path.end);
            if s < 1 || s > m - 1 || e < 1 || e > m - 1 {
                return Err(LatticeError::IndexOutOfRange { i: s, j: e, max: m - 1 });
            }
            if std::mem::replace(&mut starts_seen[s], true) {
                return Err(LatticeError::TerminalReused(format!("S_{s}")));
            }
            if std::mem::replace(&mut ends_seen[e], true) {
                return Err(LatticeError::TerminalReused(format!("E_{e}")));
            }
            match path.kind {
                PathKind::Virtual => {
                    let expected = if e == s {
                        virtual_path_straight(s)
                    } else if e == s + 1 && s + 1 <= m - 1 {
                        virtual_path_shifted(s)
                    } else {
                        return Err(LatticeError::IllFormedVirtual { start: s, end: e });
                    };
                    if path.points != expected.points {
                        return Err(LatticeError::IllFormedVirtual { start: s, end: e });
                    }
                }
                PathKind::Real => validate_real_path(m, path)?,
            }
        }
        let mut seen: BTreeSet<Point> = BTreeSet::new();
        for path in &paths {
            for &p in &path.points {
                if !seen.insert(p) {
                    return Err(LatticeError::Intersecting(p));
                }
            }
        }
        paths.sort_by(|a, b| b.start.cmp(&a.start));
        Ok(PathFamily { m, paths })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn real_paths(&self) -> impl Iterator<Item = &LatticePath> {
        self.paths.iter().filter(|p| p.kind == PathKind::Real)
    }

    pub fn virtual_paths(&self) -> impl Iterator<Item = &LatticePath> {
        self.paths.iter().filter(|p| p.kind == PathKind::Virtual)
    }
}

fn validate_real_path(m: usize, path: &LatticePath) -> Result<(), LatticeError> {
    let err = |reason: &str| LatticeError::IllFormedReal {
        start: path.start,
        end: path.end,
        reason: reason.to_string(),
    };
    let mi = m as i32;
    if path.points.first() != Some(&start_point(path.start)) {
        return Err(err("does not begin at its starting point"));
    }
    if path.points.last() != Some(&end_point(path.end)) {
        return Err(err("does not end at its ending point"));
    }
    let mut horizontal = 0usize;
    for w in path.points.windows(2) {
        let (p, q) = (w[0], w[1]);
        if q == (p.0 + 1, p.1) {
            horizontal += 1;
        } else if q != (p.0, p.1 - 1) {
            return Err(err("contains a step that is neither rightward nor downward"));
        }
    }
    if horizontal == 0 {
        return Err(err("has no horizontal step"));
    }
    for &(x, y) in &path.points[1..path.points.len() - 1] {
        if !(1 <= x && x < mi && 1 <= y && y <= mi) {
            return Err(err("leaves the rectangle of the lattice"));
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct PathFamilyJson {
    m: usize,
    paths: Vec<LatticePath>,
}

impl Serialize for PathFamily {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Borrowed<'a> {
            m: usize,
            paths: &'a [LatticePath],
        }
        Borrowed { m: self.m, paths: &self.paths }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PathFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = PathFamilyJson::deserialize(deserializer)?;
        PathFamily::new(raw.m, raw.paths).map_err(serde::de::Error::custom)
    }
}

/// Builds the real path encoding one row: the `j`-th horizontal step is at
/// height equal to the `j`-th part.
fn real_path_for_row(row: &[u32]) -> LatticePath {
    let first = row[0] as i32;
    let len = row.len();
    let mut points: Vec<Point> = vec![(0, first)];
    for (t0, &part) in row.iter().enumerate() {
        let x = t0 as i32 + 1;
        let h = part as i32;
        points.push((x, h));
        let next = if t0 + 1 < len { row[t0 + 1] as i32 } else { 0 };
        for y in (next..h).rev() {
            points.push((x, y));
        }
    }
    LatticePath {
        kind: PathKind::Real,
        start: row[0] as usize - 1,
        end: len,
        points,
    }
}

/// Encodes a descending plane partition of dimension `m` as its unique
/// non-intersecting path family.
///
/// Rows become real paths top-down; after placing the real path `S_b -> E_c`
/// for a row with first part `b+1` and length `c`, the starting points left
/// unused above it get straight virtual paths `S_i -> E_i`, and the gap
/// `c <= i < b` gets shifted virtual paths `S_i -> E_{i+1}`. Leftover
/// bottom pairs are joined `S_i -> E_i`.
pub fn encode(d: &Dpp, m: usize) -> Result<PathFamily, LatticeError> {
    if m < 2 {
        return Err(LatticeError::DimensionTooSmall { m });
    }
    if d.max_part() as usize > m {
        return Err(LatticeError::PartExceedsDimension { m, value: d.max_part() });
    }
    let mut paths: Vec<LatticePath> = Vec::with_capacity(m - 1);
    let mut a = m - 1;
    for row in d.rows() {
        let b = row[0] as usize - 1;
        let c = row.len();
        for i in b + 1..=a {
            paths.push(virtual_path_straight(i));
        }
        paths.push(real_path_for_row(row));
        for i in c..b {
            paths.push(virtual_path_shifted(i));
        }
        a = c - 1;
    }
    for i in 1..=a {
        paths.push(virtual_path_straight(i));
    }
    PathFamily::new(m, paths)
}

/// Reads the unique descending plane partition off a family: the heights of
/// the horizontal steps of the real paths, top-down.
pub fn decode(f: &PathFamily) -> Result<Dpp, LatticeError> {
    let rows: Vec<Vec<i64>> = f
        .real_paths()
        .map(|p| p.step_heights().iter().map(|&h| h as i64).collect())
        .collect();
    Ok(validate_dpp(&rows)?)
}

/// Horizontal steps of real paths in the special range strictly below the
/// diagonal `y = x`: the `t`-th step of a path is special exactly when its
/// height is at most `t - 1`, which matches the special parts of the
/// decoded partition.
pub fn special_steps(f: &PathFamily) -> Vec<(Point, Point)> {
    let mut out = Vec::new();
    for path in f.real_paths() {
        for w in path.points.windows(2) {
            let (p, q) = (w[0], w[1]);
            if q == (p.0 + 1, p.1) && q.1 < q.0 {
                out.push((p, q));
            }
        }
    }
    out
}
