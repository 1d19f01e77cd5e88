//! Exhaustive enumeration of the pattern families `𝒦(λ;n)`, `𝒜(λ;n)` and
//! `ℬ(λ;b,n)`, and the bijection between `𝒜` and `ℬ`.
//!
//! Candidates are generated shape-first. For `𝒦` every partition `ν ⊇ λ`
//! with at most `n` rows inside a bounding region is decomposed into Dyck
//! paths. For `𝒜` and `ℬ` every intermediate partition `μ ⊇ λ` fixes the
//! bullets `μ \ λ`, and one search places paths outside `μ` so that `μ` plus
//! the paths is again a partition. Each candidate is then filtered through
//! [`check_admissible`].
//!
//! The region spans columns `1..=λ₁ + W`. `W` starts at `2n` and doubles
//! whenever an accepted member reaches the last column, so truncation shows up
//! as a boundary touch instead of silently dropping members.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dyck::{check_admissible, lambda_of, lambda_of_bullets, DyckPath, DyckPattern};
use crate::error::{Error, Result};
use crate::par;
use crate::partition::{Cell, Partition};

/// Region widths beyond this are treated as a bound bug.
pub const MAX_REGION_WIDTH: u32 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    KacFactors,
    SyzygyPatterns,
    BSide,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub pattern: DyckPattern,
    pub label: Partition,
    /// The intermediate partition `μ` of a `ℬ`-side pair.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Partition>,
    pub d: u32,
    pub b: u32,
}

impl FamilyMember {
    fn new(pattern: DyckPattern, label: Partition, mu: Option<Partition>) -> FamilyMember {
        let sizes = pattern.sizes();
        FamilyMember {
            d: sizes.dyck_size,
            b: sizes.bullet_size,
            pattern,
            label,
            mu,
        }
    }
}

/// A multiset of `(pattern, label)` pairs in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternFamily {
    pub base: Partition,
    pub n: usize,
    pub kind: FamilyKind,
    pub members: Vec<FamilyMember>,
}

impl PatternFamily {
    fn new(base: &Partition, n: usize, kind: FamilyKind, mut members: Vec<FamilyMember>) -> PatternFamily {
        members.sort_by(|a, b| {
            (a.label.size(), &a.label, &a.mu, &a.pattern).cmp(&(b.label.size(), &b.label, &b.mu, &b.pattern))
        });
        PatternFamily {
            base: base.clone(),
            n,
            kind,
            members,
        }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn labels(&self) -> Vec<Partition> {
        self.members.iter().map(|m| m.label.clone()).collect()
    }

    /// Label multiplicities, never deduplicated.
    pub fn label_counts(&self) -> BTreeMap<Partition, usize> {
        let mut counts = BTreeMap::new();
        for m in &self.members {
            *counts.entry(m.label.clone()).or_insert(0) += 1;
        }
        counts
    }

    /// Labels occurring more than once.
    pub fn repeated_labels(&self) -> Vec<(Partition, usize)> {
        self.label_counts().into_iter().filter(|(_, k)| *k > 1).collect()
    }

    /// Members with the given bullet size.
    pub fn strand(&self, b: u32) -> impl Iterator<Item = &FamilyMember> {
        self.members.iter().filter(move |m| m.b == b)
    }

    pub fn max_bullet_size(&self) -> Option<u32> {
        self.members.iter().map(|m| m.b).max()
    }
}

/// All partitions `ν ⊇ lower` with at most `rows` rows, `ν₁ ≤ max_first` and
/// at most `max_extra` boxes beyond `lower`.
pub(crate) fn partitions_above(lower: &Partition, rows: usize, max_first: u32, max_extra: u32) -> Vec<Partition> {
    bounded_above(lower, &vec![max_first; rows], max_extra)
}

/// Partitions `ν ⊇ lower` with `ν_i ≤ caps[i−1]`, at most `caps.len()` rows and
/// at most `max_extra` boxes beyond `lower`.
fn bounded_above(lower: &Partition, caps: &[u32], max_extra: u32) -> Vec<Partition> {
    fn go(lower: &Partition, caps: &[u32], row: usize, cap: u32, budget: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if row > caps.len() {
            out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
            return;
        }
        let low = lower.part(row as u32);
        let cap = cap.min(caps[row - 1]);
        if low > cap {
            return;
        }
        let high = cap.min(low.saturating_add(budget));
        for v in low..=high {
            cur.push(v);
            go(lower, caps, row + 1, v, budget - (v - low), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lower.length() > caps.len() {
        return out;
    }
    go(lower, caps, 1, u32::MAX, max_extra, &mut Vec::new(), &mut out);
    out
}

/// Every way to tile the skew shape `outer \ inner` by disjoint Dyck paths of
/// length at least `min_len`.
///
/// Boxes are visited top row first, left to right within a row. The first
/// untiled box in that order can only be the first box of its path, since a
/// predecessor would come earlier in the order.
pub(crate) fn path_tilings(inner: &Partition, outer: &Partition, min_len: usize) -> Vec<Vec<DyckPath>> {
    let mut order = Vec::new();
    for y in (1..=outer.length() as u32).rev() {
        for x in inner.part(y) + 1..=outer.part(y) {
            order.push(Cell::new(x, y));
        }
    }
    let mut tiler = Tiler {
        inner,
        outer,
        min_len,
        width: outer.part(1) as usize,
        taken: vec![false; outer.part(1) as usize * outer.length()],
        order,
        current: Vec::new(),
        out: Vec::new(),
    };
    tiler.search(0);
    tiler.out
}

struct Tiler<'a> {
    inner: &'a Partition,
    outer: &'a Partition,
    min_len: usize,
    width: usize,
    taken: Vec<bool>,
    order: Vec<Cell>,
    current: Vec<DyckPath>,
    out: Vec<Vec<DyckPath>>,
}

impl Tiler<'_> {
    fn idx(&self, c: Cell) -> usize {
        (c.y as usize - 1) * self.width + c.x as usize - 1
    }

    fn free(&self, c: Cell) -> bool {
        self.outer.contains(c) && !self.inner.contains(c) && !self.taken[self.idx(c)]
    }

    fn set(&mut self, c: Cell, v: bool) {
        let i = self.idx(c);
        self.taken[i] = v;
    }

    fn search(&mut self, from: usize) {
        let next = (from..self.order.len()).find(|&i| !self.taken[self.idx(self.order[i])]);
        match next {
            None => self.out.push(self.current.clone()),
            Some(i) => {
                let start = self.order[i];
                self.set(start, true);
                let mut cells = vec![start];
                self.grow(&mut cells, i);
                self.set(start, false);
            }
        }
    }

    fn grow(&mut self, cells: &mut Vec<Cell>, resume: usize) {
        let level = cells[0].diagonal();
        let end = *cells.last().expect("nonempty");
        if end.diagonal() == level && cells.len() >= self.min_len {
            let path = DyckPath::new(cells.clone()).expect("tiler builds Dyck paths");
            self.current.push(path);
            self.search(resume + 1);
            self.current.pop();
        }
        let mut steps = vec![end.east()];
        if let Some(s) = end.south() {
            if s.diagonal() >= level {
                steps.push(s);
            }
        }
        for c in steps {
            if self.free(c) {
                self.set(c, true);
                cells.push(c);
                self.grow(cells, resume);
                cells.pop();
                self.set(c, false);
            }
        }
    }
}

/// Every `ν ⊇ inner` with at most `rows` rows and `ν₁ ≤ max_col`, paired with
/// each tiling of `ν \ inner` by Dyck paths of length at least `min_len`.
///
/// Cells are visited in the same order as [`path_tilings`], so an uncovered
/// cell either starts a path or is the first cell past the end of its row.
/// Paths only run east and south, so when a row is reached every path cell it
/// will ever hold is already placed.
pub(crate) fn outer_tilings(inner: &Partition, rows: usize, max_col: u32, min_len: usize) -> Vec<(Partition, Vec<DyckPath>)> {
    let mut search = OuterSearch {
        inner,
        rows: rows as u32,
        max_col,
        min_len,
        taken: vec![false; max_col as usize * rows],
        ends: vec![0; rows],
        current: Vec::new(),
        out: Vec::new(),
    };
    if inner.length() <= rows && inner.part(1) <= max_col {
        search.cell(rows as u32, inner.part(rows as u32) + 1);
    }
    search.out
}

struct OuterSearch<'a> {
    inner: &'a Partition,
    rows: u32,
    max_col: u32,
    min_len: usize,
    taken: Vec<bool>,
    /// `ends[y − 1]` is `ν_y` once row `y` is closed.
    ends: Vec<u32>,
    current: Vec<DyckPath>,
    out: Vec<(Partition, Vec<DyckPath>)>,
}

impl OuterSearch<'_> {
    fn idx(&self, c: Cell) -> usize {
        (c.y as usize - 1) * self.max_col as usize + c.x as usize - 1
    }

    fn free(&self, c: Cell) -> bool {
        c.x <= self.max_col && c.y >= 1 && !self.inner.contains(c) && !self.taken[self.idx(c)]
    }

    fn covered_from(&self, x: u32, y: u32) -> bool {
        (x..=self.max_col).any(|x| self.taken[self.idx(Cell::new(x, y))])
    }

    fn cell(&mut self, y: u32, x: u32) {
        if x <= self.max_col && self.taken[self.idx(Cell::new(x, y))] {
            return self.cell(y, x + 1);
        }
        // close row y at x − 1
        let above = if y == self.rows { 0 } else { self.ends[y as usize] };
        if x - 1 >= above && (x > self.max_col || !self.covered_from(x, y)) {
            self.ends[y as usize - 1] = x - 1;
            if y == 1 {
                let nu = Partition::new(self.ends.clone()).expect("rows weakly decrease");
                self.out.push((nu, self.current.clone()));
            } else {
                self.cell(y - 1, self.inner.part(y - 1) + 1);
            }
        }
        if x <= self.max_col {
            let start = Cell::new(x, y);
            self.set(start, true);
            self.grow(&mut vec![start]);
            self.set(start, false);
        }
    }

    fn set(&mut self, c: Cell, v: bool) {
        let i = self.idx(c);
        self.taken[i] = v;
    }

    fn grow(&mut self, cells: &mut Vec<Cell>) {
        let start = cells[0];
        let end = *cells.last().expect("nonempty");
        if end.diagonal() == start.diagonal() && cells.len() >= self.min_len {
            self.current.push(DyckPath::new(cells.clone()).expect("search builds Dyck paths"));
            self.cell(start.y, start.x + 1);
            self.current.pop();
        }
        let mut steps = vec![end.east()];
        if let Some(s) = end.south() {
            if s.diagonal() >= start.diagonal() {
                steps.push(s);
            }
        }
        for c in steps {
            if self.free(c) {
                self.set(c, true);
                cells.push(c);
                self.grow(cells);
                cells.pop();
                self.set(c, false);
            }
        }
    }
}

fn check_base(lambda: &Partition, n: usize) -> Result<()> {
    if lambda.length() > n {
        return Err(Error::Precondition(format!(
            "{lambda} has more than n = {n} rows"
        )));
    }
    Ok(())
}

/// Runs `scan` with growing region widths until no member touches the last column.
fn with_adaptive_region<F>(lambda: &Partition, n: usize, width_cap: Option<u32>, scan: F) -> Result<Vec<FamilyMember>>
where
    F: Fn(u32) -> Vec<FamilyMember>,
{
    let mut width = (2 * n as u32).max(1);
    loop {
        if let Some(cap) = width_cap {
            if width >= cap {
                return Ok(scan(cap));
            }
        }
        let members = scan(width);
        let edge = lambda.part(1) + width;
        let touches = members.iter().any(|m| m.label.part(1) >= edge);
        if !touches {
            return Ok(members);
        }
        width *= 2;
        if width > MAX_REGION_WIDTH {
            return Err(Error::RegionOverflow { width });
        }
    }
}

/// `𝒦(λ;n)`: bullet-free λ-admissible patterns with `l(λ(𝔻)) ≤ n` and `d(𝔻) ≤ size_bound`.
pub fn enumerate_kac_patterns(lambda: &Partition, n: usize, size_bound: u32) -> Result<PatternFamily> {
    check_base(lambda, n)?;
    let members = with_adaptive_region(lambda, n, Some(size_bound.max(1)), |width| {
        let shapes = partitions_above(lambda, n, lambda.part(1) + width, size_bound);
        par::flat_map(&shapes, |nu| kac_members(lambda, nu))
    })?;
    Ok(PatternFamily::new(lambda, n, FamilyKind::KacFactors, members))
}

/// The default size bound `n²` for `𝒦(λ;n)`.
pub fn default_kac_bound(n: usize) -> u32 {
    (n * n) as u32
}

fn kac_members(lambda: &Partition, nu: &Partition) -> Vec<FamilyMember> {
    path_tilings(lambda, nu, 1)
        .into_iter()
        .filter_map(|paths| {
            let pattern = DyckPattern::new(paths, []).ok()?;
            check_admissible(lambda, &pattern).ok()?;
            Some(FamilyMember::new(pattern, nu.clone(), None))
        })
        .collect()
}

/// `𝒜(λ;n)`: λ-admissible augmented patterns with every path of length at
/// least 3 and `l(λ(𝔻)) ≤ n`.
pub fn enumerate_syzygy_patterns(lambda: &Partition, n: usize) -> Result<PatternFamily> {
    check_base(lambda, n)?;
    let members = with_adaptive_region(lambda, n, None, |width| {
        let max_col = lambda.part(1) + width;
        let shapes = partitions_above(lambda, n, max_col, u32::MAX);
        par::flat_map(&shapes, |mu| syzygy_members(lambda, mu, n, max_col))
    })?;
    Ok(PatternFamily::new(lambda, n, FamilyKind::SyzygyPatterns, members))
}

fn syzygy_members(lambda: &Partition, mu: &Partition, n: usize, max_col: u32) -> Vec<FamilyMember> {
    let bullets: Vec<Cell> = mu.cells().filter(|c| !lambda.contains(*c)).collect();
    outer_tilings(mu, n, max_col, 3)
        .into_iter()
        .filter_map(|(nu, paths)| {
            let pattern = DyckPattern::new(paths, bullets.iter().copied()).ok()?;
            check_admissible(lambda, &pattern).ok()?;
            Some(FamilyMember::new(pattern, nu, None))
        })
        .collect()
}

/// Whether every corner of `μ` that is either enclosed on its N, E and NE
/// sides by a single path, or has none of those three boxes in the support,
/// already lies in `λ`.
pub fn b_side_corners_ok(lambda: &Partition, mu: &Partition, pattern: &DyckPattern) -> bool {
    let support = pattern.support();
    mu.corners().into_iter().all(|corner| {
        let above = corner.upper_neighbors();
        let enclosed = pattern
            .paths()
            .iter()
            .any(|p| above.iter().all(|c| p.contains(*c)));
        let untouched = above.iter().all(|c| !support.contains(c));
        !(enclosed || untouched) || lambda.contains(corner)
    })
}

/// `ℬ(λ;b,n)` for every `b` at once.
pub fn enumerate_b_side_all(lambda: &Partition, n: usize) -> Result<PatternFamily> {
    check_base(lambda, n)?;
    let members = with_adaptive_region(lambda, n, None, |width| {
        let max_col = lambda.part(1) + width;
        let shapes = partitions_above(lambda, n, max_col, u32::MAX);
        par::flat_map(&shapes, |mu| b_side_members(lambda, mu, n, max_col))
    })?;
    Ok(PatternFamily::new(lambda, n, FamilyKind::BSide, members))
}

/// `ℬ(λ;b,n)`: pairs `(μ, 𝔻′)` with `|μ| − |λ| = b`.
pub fn enumerate_b_side(lambda: &Partition, b: u32, n: usize) -> Result<PatternFamily> {
    let mut all = enumerate_b_side_all(lambda, n)?;
    all.members
        .retain(|m| m.mu.as_ref().map(|mu| mu.size() - lambda.size()) == Some(b));
    Ok(all)
}

fn b_side_members(lambda: &Partition, mu: &Partition, n: usize, max_col: u32) -> Vec<FamilyMember> {
    outer_tilings(mu, n, max_col, 3)
        .into_iter()
        .filter_map(|(nu, paths)| {
            let pattern = DyckPattern::new(paths, []).ok()?;
            check_admissible(mu, &pattern).ok()?;
            b_side_corners_ok(lambda, mu, &pattern).then_some(())?;
            let mut member = FamilyMember::new(pattern, nu, Some(mu.clone()));
            // the bullet size of a ℬ-side pair is |μ| − |λ|
            member.b = mu.size() - lambda.size();
            Some(member)
        })
        .collect()
}

/// Forward map of the `𝒜 ↔ ℬ` bijection: absorb the bullets into `λ`.
pub fn a_to_b(lambda: &Partition, pattern: &DyckPattern) -> Result<(Partition, DyckPattern)> {
    check_admissible(lambda, pattern).map_err(|v| Error::Precondition(v.to_string()))?;
    if pattern.paths().iter().any(|p| p.len() < 3) {
        return Err(Error::Precondition("pattern has a path shorter than 3".into()));
    }
    let mu = lambda_of_bullets(lambda, pattern)?;
    Ok((mu, pattern.without_bullets()))
}

/// Inverse map: the boxes of `μ \ λ` become bullets.
pub fn b_to_a(lambda: &Partition, mu: &Partition, pattern: &DyckPattern) -> Result<DyckPattern> {
    if !lambda.leq(mu) {
        return Err(Error::Precondition(format!("{lambda} is not contained in {mu}")));
    }
    if !pattern.bullets().is_empty() {
        return Err(Error::Precondition("ℬ-side pattern carries bullets".into()));
    }
    check_admissible(mu, pattern).map_err(|v| Error::Precondition(v.to_string()))?;
    if !b_side_corners_ok(lambda, mu, pattern) {
        return Err(Error::Precondition(format!(
            "a corner of {mu} outside {lambda} violates the ℬ-side condition"
        )));
    }
    let bullets = mu.cells().filter(|c| !lambda.contains(*c));
    let out = DyckPattern::new(pattern.paths().to_vec(), bullets)?;
    debug_assert_eq!(lambda_of(lambda, &out).ok(), lambda_of(mu, pattern).ok());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts)
    }

    #[test]
    fn partitions_above_counts() {
        // partitions inside a 2x2 box
        let all = partitions_above(&Partition::empty(), 2, 2, u32::MAX);
        assert_eq!(all.len(), 6);
        let bounded = partitions_above(&Partition::empty(), 2, 2, 1);
        assert_eq!(bounded, vec![p(&[]), p(&[1])]);
        assert!(partitions_above(&p(&[3]), 2, 2, 5).is_empty());
    }

    #[test]
    fn tilings_of_small_shapes() {
        // a single box
        assert_eq!(path_tilings(&p(&[]), &p(&[1]), 1).len(), 1);
        // (2,2) minus (1): the hook (1,2),(2,2),(2,1) is one Dyck path; or three singletons
        let t = path_tilings(&p(&[1]), &p(&[2, 2]), 1);
        assert_eq!(t.len(), 2);
        let t = path_tilings(&p(&[1]), &p(&[2, 2]), 3);
        assert_eq!(t.len(), 1);
        assert_eq!(t[0][0].len(), 3);
        // nothing to tile
        assert_eq!(path_tilings(&p(&[2]), &p(&[2]), 3), vec![Vec::<DyckPath>::new()]);
    }

    /// The single outer search agrees with tiling every `ν` separately.
    #[test]
    fn outer_tilings_match_per_shape_tilings() {
        for inner in [p(&[]), p(&[1]), p(&[2, 1]), p(&[3, 1, 1])] {
            for min_len in [1, 3] {
                let mut direct: Vec<(Partition, Vec<DyckPath>)> = partitions_above(&inner, 3, 5, u32::MAX)
                    .into_iter()
                    .flat_map(|nu| path_tilings(&inner, &nu, min_len).into_iter().map(move |t| (nu.clone(), t)))
                    .collect();
                let mut outer = outer_tilings(&inner, 3, 5, min_len);
                direct.sort();
                outer.sort();
                assert_eq!(outer, direct, "inner {inner}, min_len {min_len}");
            }
        }
    }

    #[test]
    fn kac_one_row() {
        for d in 0..5 {
            let fam = enumerate_kac_patterns(&p(&[d]), 1, 1).unwrap();
            assert_eq!(fam.labels(), vec![p(&[d]), p(&[d + 1])]);
            assert!(fam.members[0].pattern.is_empty());
            assert_eq!(fam.members[1].pattern.paths()[0].cells(), &[Cell::new(d + 1, 1)]);
        }
    }

    #[test]
    fn kac_empty_bound_zero() {
        let fam = enumerate_kac_patterns(&Partition::empty(), 3, 0).unwrap();
        assert_eq!(fam.len(), 1);
        assert!(fam.members[0].pattern.is_empty());
    }

    #[test]
    fn syzygy_small_cases() {
        for n in 1..=3 {
            let fam = enumerate_syzygy_patterns(&Partition::empty(), n).unwrap();
            assert_eq!(fam.len(), 1, "n = {n}");
        }
        for d in 1..4 {
            let fam = enumerate_syzygy_patterns(&p(&[d]), 1).unwrap();
            assert_eq!(fam.len(), 1);
        }
    }

    #[test]
    fn precondition_rows() {
        assert!(matches!(
            enumerate_kac_patterns(&p(&[1, 1, 1]), 2, 4),
            Err(Error::Precondition(_))
        ));
    }
}
