//! Dyck paths, augmented Dyck paths and Dyck patterns, and the λ-admissibility
//! predicate that selects the patterns indexing composition factors and syzygies.
//!
//! A path is a chain of boxes where each step goes one box east or one box
//! south. A Dyck path of level `d` starts and ends on the antidiagonal
//! `x + y = d` and never goes below it. A pattern is a family of disjoint Dyck
//! paths together with a set of bullet boxes, each bullet lying in a contiguous
//! run west of some path's first box (its head) or south of some path's last
//! box (its tail).

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Cell>", into = "Vec<Cell>")]
pub struct DyckPath {
    cells: Vec<Cell>,
}

impl DyckPath {
    /// Validates the step rule and the Dyck condition.
    pub fn new(cells: Vec<Cell>) -> Result<DyckPath> {
        let (first, last) = match (cells.first(), cells.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return Err(Error::NotDyck("a path has at least one box".into())),
        };
        for (i, w) in cells.windows(2).enumerate() {
            let (a, b) = (w[0], w[1]);
            let east = b.x == a.x + 1 && b.y == a.y;
            let south = b.x == a.x && b.y + 1 == a.y;
            if !(east || south) {
                return Err(Error::NotAPath { index: i + 1 });
            }
        }
        let level = first.diagonal();
        if last.diagonal() != level {
            return Err(Error::NotDyck(format!(
                "endpoints {first} and {last} lie on different antidiagonals"
            )));
        }
        if let Some(c) = cells.iter().find(|c| c.diagonal() < level) {
            return Err(Error::NotDyck(format!("box {c} lies below level {level}")));
        }
        Ok(DyckPath { cells })
    }

    pub fn singleton(cell: Cell) -> DyckPath {
        DyckPath { cells: vec![cell] }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn start(&self) -> Cell {
        self.cells[0]
    }

    pub fn end(&self) -> Cell {
        self.cells[self.cells.len() - 1]
    }

    pub fn level(&self) -> u32 {
        self.start().diagonal()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn east_steps(&self) -> usize {
        self.cells.windows(2).filter(|w| w[1].y == w[0].y).count()
    }

    pub fn south_steps(&self) -> usize {
        self.cells.windows(2).filter(|w| w[1].x == w[0].x).count()
    }

    /// Inner and outer corners of the path.
    ///
    /// A corner is an interior box where the path turns. It is inner when it
    /// is entered by a south step (and left by an east step) and outer when
    /// it is entered by an east step (and left by a south step).
    pub fn corners(&self) -> PathCorners {
        let mut corners = PathCorners::default();
        for w in self.cells.windows(3) {
            let (prev, cur, next) = (w[0], w[1], w[2]);
            // paths only move east or south, so the row difference is taken downward
            if next.x - prev.x == 1 && prev.y - next.y == 1 {
                if prev.x == cur.x {
                    corners.inner.push(cur);
                } else {
                    corners.outer.push(cur);
                }
            }
        }
        corners
    }

    fn sort_key(&self) -> (u32, u32, usize) {
        let s = self.start();
        (s.y, s.x, self.len())
    }
}

impl Ord for DyckPath {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then_with(|| self.cells.cmp(&other.cells))
    }
}

impl PartialOrd for DyckPath {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<Cell>> for DyckPath {
    type Error = Error;

    fn try_from(cells: Vec<Cell>) -> Result<Self> {
        DyckPath::new(cells)
    }
}

impl From<DyckPath> for Vec<Cell> {
    fn from(p: DyckPath) -> Self {
        p.cells
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.cells.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PathCorners {
    pub inner: Vec<Cell>,
    pub outer: Vec<Cell>,
}

/// A Dyck path with `head` bullets running west from its first box and
/// `tail` bullets running south from its last box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedDyckPath {
    path: DyckPath,
    head: u32,
    tail: u32,
}

impl AugmentedDyckPath {
    pub fn new(path: DyckPath, head: u32, tail: u32) -> Result<AugmentedDyckPath> {
        if head >= path.start().x {
            return Err(Error::Precondition(format!(
                "head of length {head} runs past column 1 from {}",
                path.start()
            )));
        }
        if tail >= path.end().y {
            return Err(Error::Precondition(format!(
                "tail of length {tail} runs past row 1 from {}",
                path.end()
            )));
        }
        Ok(AugmentedDyckPath { path, head, tail })
    }

    pub fn path(&self) -> &DyckPath {
        &self.path
    }

    pub fn head_cells(&self) -> Vec<Cell> {
        let s = self.path.start();
        (s.x - self.head..s.x).map(|x| Cell::new(x, s.y)).collect()
    }

    pub fn tail_cells(&self) -> Vec<Cell> {
        let e = self.path.end();
        (1..=self.tail).map(|k| Cell::new(e.x, e.y - k)).collect()
    }

    pub fn bullets(&self) -> Vec<Cell> {
        let mut b = self.head_cells();
        b.extend(self.tail_cells());
        b
    }

    pub fn len(&self) -> usize {
        self.path.len() + (self.head + self.tail) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RunSide {
    Head,
    Tail,
}

/// The ways one bullet can be covered: `(path index, side)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BulletAssignment {
    pub bullet: Cell,
    pub options: Vec<(usize, RunSide)>,
}

/// Dyck size, bullet size and total size of a pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PatternSizes {
    pub dyck_size: u32,
    pub bullet_size: u32,
    pub total: u32,
}

/// A collection of disjoint Dyck paths and a set of bullets.
///
/// Paths are kept sorted by (start row, start column, length), so two
/// patterns compare equal regardless of the order their paths were given in.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPattern", into = "RawPattern")]
pub struct DyckPattern {
    paths: Vec<DyckPath>,
    bullets: BTreeSet<Cell>,
}

#[derive(Serialize, Deserialize)]
struct RawPattern {
    paths: Vec<DyckPath>,
    #[serde(default)]
    bullets: Vec<Cell>,
}

impl TryFrom<RawPattern> for DyckPattern {
    type Error = Error;

    fn try_from(raw: RawPattern) -> Result<Self> {
        DyckPattern::new(raw.paths, raw.bullets)
    }
}

impl From<DyckPattern> for RawPattern {
    fn from(p: DyckPattern) -> Self {
        RawPattern {
            paths: p.paths,
            bullets: p.bullets.into_iter().collect(),
        }
    }
}

impl DyckPattern {
    /// Checks disjointness and that every bullet is covered by some head or tail run.
    pub fn new(paths: Vec<DyckPath>, bullets: impl IntoIterator<Item = Cell>) -> Result<DyckPattern> {
        let mut paths = paths;
        paths.sort();
        let mut seen = BTreeSet::new();
        for c in paths.iter().flat_map(|p| p.cells()) {
            if !seen.insert(*c) {
                return Err(Error::Overlap(*c));
            }
        }
        let mut set = BTreeSet::new();
        for b in bullets {
            if seen.contains(&b) || !set.insert(b) {
                return Err(Error::Overlap(b));
            }
        }
        cover_options(&paths, &set)?;
        Ok(DyckPattern { paths, bullets: set })
    }

    pub fn empty() -> DyckPattern {
        DyckPattern {
            paths: Vec::new(),
            bullets: BTreeSet::new(),
        }
    }

    pub fn paths(&self) -> &[DyckPath] {
        &self.paths
    }

    pub fn bullets(&self) -> &BTreeSet<Cell> {
        &self.bullets
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty() && self.bullets.is_empty()
    }

    /// All path boxes and bullets.
    pub fn support(&self) -> BTreeSet<Cell> {
        let mut s: BTreeSet<Cell> = self.paths.iter().flat_map(|p| p.cells().iter().copied()).collect();
        s.extend(self.bullets.iter().copied());
        s
    }

    pub fn dyck_size(&self) -> u32 {
        self.paths.iter().map(|p| p.len() as u32).sum()
    }

    pub fn bullet_size(&self) -> u32 {
        self.bullets.len() as u32
    }

    pub fn sizes(&self) -> PatternSizes {
        let dyck_size = self.dyck_size();
        let bullet_size = self.bullet_size();
        PatternSizes {
            dyck_size,
            bullet_size,
            total: dyck_size + bullet_size,
        }
    }

    /// Same paths, no bullets.
    pub fn without_bullets(&self) -> DyckPattern {
        DyckPattern {
            paths: self.paths.clone(),
            bullets: BTreeSet::new(),
        }
    }

    /// Largest column and row touched by the support.
    pub fn extent(&self) -> (u32, u32) {
        self.support()
            .iter()
            .fold((0, 0), |(x, y), c| (x.max(c.x), y.max(c.y)))
    }

    fn owners(&self) -> HashMap<Cell, Owner> {
        let mut map = HashMap::new();
        for (i, p) in self.paths.iter().enumerate() {
            for &c in p.cells() {
                map.insert(c, Owner::Path(i));
            }
        }
        for &b in &self.bullets {
            map.insert(b, Owner::Bullet);
        }
        map
    }
}

impl fmt::Debug for DyckPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "paths {:?}", self.paths)?;
        if !self.bullets.is_empty() {
            f.write_str(" bullets {")?;
            for (i, b) in self.bullets.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{b}")?;
            }
            f.write_str("}")?;
        }
        Ok(())
    }
}

impl fmt::Display for DyckPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Owner {
    Path(usize),
    Bullet,
}

fn cover_options(paths: &[DyckPath], bullets: &BTreeSet<Cell>) -> Result<Vec<BulletAssignment>> {
    let mut out = Vec::with_capacity(bullets.len());
    for &b in bullets {
        let mut options = Vec::new();
        for (i, p) in paths.iter().enumerate() {
            let s = p.start();
            if s.y == b.y && b.x < s.x && (b.x + 1..s.x).all(|x| bullets.contains(&Cell::new(x, b.y))) {
                options.push((i, RunSide::Head));
            }
            let e = p.end();
            if e.x == b.x && b.y < e.y && (b.y + 1..e.y).all(|y| bullets.contains(&Cell::new(b.x, y))) {
                options.push((i, RunSide::Tail));
            }
        }
        if options.is_empty() {
            return Err(Error::UncoverableBullet(b));
        }
        out.push(BulletAssignment { bullet: b, options });
    }
    Ok(out)
}

/// Every feasible head/tail assignment of every bullet of the pattern.
///
/// Covers need not be disjoint or unique, so all options are reported.
pub fn decompose_bullets(pattern: &DyckPattern) -> Result<Vec<BulletAssignment>> {
    cover_options(&pattern.paths, &pattern.bullets)
}

/// `λ ∪ supp(𝔻)` as a partition.
pub fn lambda_of(lambda: &Partition, pattern: &DyckPattern) -> Result<Partition> {
    extend_partition(lambda, pattern.support())
}

/// `λ ⊔ 𝔹`, the partition obtained by adding only the bullets.
pub fn lambda_of_bullets(lambda: &Partition, pattern: &DyckPattern) -> Result<Partition> {
    extend_partition(lambda, pattern.bullets.clone())
}

fn extend_partition(lambda: &Partition, extra: BTreeSet<Cell>) -> Result<Partition> {
    if let Some(c) = extra.iter().find(|c| lambda.contains(**c)) {
        return Err(Error::Overlap(*c));
    }
    let mut all = extra;
    all.extend(lambda.cells());
    Partition::from_boxes(&all)
}

/// The four admissibility conditions, in the order they are checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// The support meets the diagram of λ.
    Disjoint,
    /// `λ ∪ supp(𝔻)` is not a partition.
    Partition,
    /// A path touches another from the N, E or NE without being enclosed by the pair.
    Covering,
    /// A bullet sits directly N, E or NE of a path box.
    BulletPlacement,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::Disjoint => "(1) support disjoint from λ",
            Condition::Partition => "(2) λ(𝔻) is a partition",
            Condition::Covering => "(3) N/E/NE covering between paths",
            Condition::BulletPlacement => "(4) no bullet N/E/NE of a path box",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub witness: Cell,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} fails at {}", self.condition, self.witness)
    }
}

/// Checks λ-admissibility, reporting the first violated condition and a witness box.
pub fn check_admissible(lambda: &Partition, pattern: &DyckPattern) -> Result<(), Violation> {
    let support = pattern.support();

    if let Some(&c) = support.iter().find(|c| lambda.contains(**c)) {
        return Err(Violation { condition: Condition::Disjoint, witness: c });
    }

    let in_union = |c: Cell| lambda.contains(c) || support.contains(&c);
    for &c in &support {
        let missing = [c.west(), c.south()].into_iter().flatten().find(|&n| !in_union(n));
        if let Some(n) = missing {
            return Err(Violation { condition: Condition::Partition, witness: n });
        }
    }

    let owners = pattern.owners();
    let paths = &pattern.paths;
    for (i, di) in paths.iter().enumerate() {
        let above: Vec<Cell> = di.cells().iter().flat_map(|c| c.upper_neighbors()).collect();
        for j in (0..paths.len()).filter(|&j| j != i) {
            let touches = above.iter().any(|c| owners.get(c) == Some(&Owner::Path(j)));
            if !touches {
                continue;
            }
            let escape = above.iter().find(|c| {
                let o = owners.get(c);
                o != Some(&Owner::Path(i)) && o != Some(&Owner::Path(j))
            });
            if let Some(&c) = escape {
                return Err(Violation { condition: Condition::Covering, witness: c });
            }
        }
    }

    for p in paths {
        for c in p.cells() {
            if let Some(&b) = c.upper_neighbors().iter().find(|n| pattern.bullets.contains(n)) {
                return Err(Violation { condition: Condition::BulletPlacement, witness: b });
            }
        }
    }
    Ok(())
}

pub fn is_admissible(lambda: &Partition, pattern: &DyckPattern) -> bool {
    check_admissible(lambda, pattern).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: u32, y: u32) -> Cell {
        Cell::new(x, y)
    }

    fn path(cells: &[(u32, u32)]) -> DyckPath {
        DyckPath::new(cells.iter().map(|&(x, y)| c(x, y)).collect()).unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::from_parts(parts)
    }

    #[test]
    fn validate_examples() {
        let d = path(&[(2, 2), (3, 2), (3, 1)]);
        assert_eq!(d.level(), 4);
        assert_eq!(d.len(), 3);
        assert!(matches!(
            DyckPath::new(vec![c(2, 1), c(3, 1)]),
            Err(Error::NotDyck(_))
        ));
        let s = DyckPath::new(vec![c(5, 1)]).unwrap();
        assert_eq!(s.level(), 6);
        assert!(matches!(
            DyckPath::new(vec![c(1, 1), c(2, 2)]),
            Err(Error::NotAPath { index: 1 })
        ));
        // dips below the starting antidiagonal
        assert!(matches!(
            DyckPath::new(vec![c(2, 2), c(2, 1), c(3, 1)]),
            Err(Error::NotDyck(_))
        ));
        assert!(DyckPath::new(vec![]).is_err());
    }

    #[test]
    fn corners_of_paths() {
        let d = path(&[(2, 2), (3, 2), (3, 1)]);
        assert_eq!(d.corners(), PathCorners { inner: vec![], outer: vec![c(3, 2)] });
        assert_eq!(DyckPath::singleton(c(4, 4)).corners(), PathCorners::default());
        let d = path(&[(1, 3), (2, 3), (2, 2), (3, 2), (3, 1)]);
        assert_eq!(
            d.corners(),
            PathCorners { inner: vec![c(2, 2)], outer: vec![c(2, 3), c(3, 2)] }
        );
        // the length-9 path with two inner and three outer corners
        let d = path(&[(2, 6), (3, 6), (4, 6), (4, 5), (5, 5), (5, 4), (5, 3), (6, 3), (6, 2)]);
        let k = d.corners();
        assert_eq!(k.inner.len(), 2);
        assert_eq!(k.outer.len(), 3);
    }

    #[test]
    fn augmented_path_cells() {
        let d = path(&[(2, 6), (3, 6), (4, 6), (4, 5), (5, 5), (5, 4), (5, 3), (6, 3), (6, 2)]);
        let a = AugmentedDyckPath::new(d.clone(), 1, 1).unwrap();
        assert_eq!(a.head_cells(), vec![c(1, 6)]);
        assert_eq!(a.tail_cells(), vec![c(6, 1)]);
        assert_eq!(a.len(), 11);
        assert!(AugmentedDyckPath::new(d.clone(), 2, 0).is_err());
        assert!(AugmentedDyckPath::new(d, 0, 2).is_err());
    }

    #[test]
    fn support_examples() {
        let d = path(&[(2, 2), (3, 2), (3, 1)]);
        let pat = DyckPattern::new(vec![d.clone()], []).unwrap();
        assert_eq!(pat.support(), d.cells().iter().copied().collect());
        assert!(DyckPattern::empty().support().is_empty());
        let pat = DyckPattern::new(vec![DyckPath::singleton(c(5, 1))], []).unwrap();
        assert_eq!(pat.support(), [c(5, 1)].into());
    }

    #[test]
    fn lambda_of_examples() {
        let pat = DyckPattern::new(vec![path(&[(4, 2), (5, 2), (5, 1)])], []).unwrap();
        assert_eq!(lambda_of(&p(&[4, 3, 1, 1]), &pat).unwrap(), p(&[5, 5, 1, 1]));
        let pat = DyckPattern::new(vec![path(&[(2, 3), (3, 3), (3, 2)])], [c(1, 3)]).unwrap();
        assert_eq!(lambda_of(&p(&[3, 2]), &pat).unwrap(), p(&[3, 3, 3]));
        assert_eq!(lambda_of(&p(&[3, 2]), &DyckPattern::empty()).unwrap(), p(&[3, 2]));
        let pat = DyckPattern::new(vec![DyckPath::singleton(c(3, 2))], []).unwrap();
        assert_eq!(lambda_of(&p(&[3, 3]), &pat), Err(Error::Overlap(c(3, 2))));
        let pat = DyckPattern::new(vec![DyckPath::singleton(c(5, 1))], []).unwrap();
        assert!(matches!(lambda_of(&p(&[3]), &pat), Err(Error::NotAPartition(_))));
    }

    #[test]
    fn lambda_of_bullets_examples() {
        let pat = DyckPattern::new(vec![path(&[(2, 3), (3, 3), (3, 2)])], [c(1, 3)]).unwrap();
        assert_eq!(lambda_of_bullets(&p(&[3, 2]), &pat).unwrap(), p(&[3, 2, 1]));
        let pat = DyckPattern::new(vec![path(&[(3, 3), (4, 3), (5, 3), (5, 2), (5, 1)])], [c(1, 3), c(2, 3)])
            .unwrap();
        assert_eq!(lambda_of_bullets(&p(&[3, 2]), &pat).unwrap(), p(&[3, 2, 2]));
        assert_eq!(lambda_of_bullets(&p(&[3, 2]), &pat.without_bullets()).unwrap(), p(&[3, 2]));
    }

    fn five_five_five() -> DyckPattern {
        DyckPattern::new(
            vec![
                path(&[(3, 2), (4, 2), (4, 1)]),
                path(&[(3, 3), (4, 3), (5, 3), (5, 2), (5, 1)]),
            ],
            [c(1, 3), c(2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let pat = DyckPattern::new(vec![path(&[(4, 2), (5, 2), (5, 1)])], []).unwrap();
        assert!(is_admissible(&p(&[4, 3, 1, 1]), &pat));

        let pat = five_five_five();
        assert!(is_admissible(&p(&[3, 2]), &pat));
        assert_eq!(pat.sizes(), PatternSizes { dyck_size: 8, bullet_size: 2, total: 10 });
        assert_eq!(lambda_of(&p(&[3, 2]), &pat).unwrap(), p(&[5, 5, 5]));

        let pat = DyckPattern::new(
            vec![DyckPath::singleton(c(3, 1)), DyckPath::singleton(c(4, 1))],
            [],
        )
        .unwrap();
        let v = check_admissible(&p(&[2]), &pat).unwrap_err();
        assert_eq!(v.condition, Condition::Covering);
        assert!(v.witness == c(3, 2) || v.witness == c(4, 2));
    }

    #[test]
    fn admissibility_diagnostics() {
        let pat = DyckPattern::new(vec![DyckPath::singleton(c(2, 2))], []).unwrap();
        assert_eq!(
            check_admissible(&p(&[2, 2]), &pat),
            Err(Violation { condition: Condition::Disjoint, witness: c(2, 2) })
        );
        assert_eq!(
            check_admissible(&p(&[1]), &pat),
            Err(Violation { condition: Condition::Partition, witness: c(1, 2) })
        );
        let pat = DyckPattern::new(vec![path(&[(3, 2), (4, 2), (4, 1)])], []).unwrap();
        assert!(is_admissible(&p(&[3, 2]), &pat));
        assert_eq!(
            check_admissible(&p(&[2, 1]), &pat),
            Err(Violation { condition: Condition::Partition, witness: c(2, 2) })
        );
        let pat = DyckPattern::new(vec![path(&[(2, 3), (3, 3), (3, 2)])], [c(1, 3)]).unwrap();
        assert_eq!(check_admissible(&p(&[3, 2]), &pat), Ok(()));
        let pat = DyckPattern::new(vec![DyckPath::singleton(c(2, 1))], [c(2, 2), c(1, 2)]);
        // (2,2) is not in a head or tail run of the singleton
        assert_eq!(pat.unwrap_err(), Error::UncoverableBullet(c(1, 2)));
    }

    #[test]
    fn decompose_examples() {
        let pat = five_five_five();
        let a = decompose_bullets(&pat).unwrap();
        let long = pat.paths().iter().position(|p| p.len() == 5).unwrap();
        assert_eq!(a.len(), 2);
        for asg in &a {
            assert_eq!(asg.options, vec![(long, RunSide::Head)]);
        }
        let pat = DyckPattern::new(vec![path(&[(4, 3), (5, 3), (5, 2)])], [c(5, 1)]).unwrap();
        assert_eq!(decompose_bullets(&pat).unwrap()[0].options, vec![(0, RunSide::Tail)]);
        assert_eq!(
            DyckPattern::new(vec![DyckPath::singleton(c(3, 1))], [c(1, 1)]).unwrap_err(),
            Error::UncoverableBullet(c(1, 1))
        );
    }

    #[test]
    fn pattern_equality_ignores_order() {
        let a = path(&[(3, 2), (4, 2), (4, 1)]);
        let b = path(&[(3, 3), (4, 3), (5, 3), (5, 2), (5, 1)]);
        let x = DyckPattern::new(vec![a.clone(), b.clone()], [c(1, 3), c(2, 3)]).unwrap();
        let y = DyckPattern::new(vec![b, a], [c(2, 3), c(1, 3)]).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn pattern_json_schema() {
        let pat = five_five_five();
        let json = serde_json::to_string(&pat).unwrap();
        assert_eq!(
            json,
            r#"{"paths":[[[3,2],[4,2],[4,1]],[[3,3],[4,3],[5,3],[5,2],[5,1]]],"bullets":[[1,3],[2,3]]}"#
        );
        let back: DyckPattern = serde_json::from_str(&json).unwrap();
        assert_eq!(back, pat);
        assert!(serde_json::from_str::<DyckPattern>(r#"{"paths":[[[2,1],[3,1]]],"bullets":[]}"#).is_err());
        assert!(serde_json::from_str::<DyckPattern>(r#"{"paths":[[[3,1]]],"bullets":[[1,1]]}"#).is_err());
    }
}
