//! Test-only brute-force pattern generator.
//!
//! Shares nothing with the library's tiler: candidate paths are every Dyck
//! path inside the skew shape, covers are found by choosing any path through
//! the lowest uncovered box, and bullet sets range over all subsets of the
//! skew shape rather than over intermediate partitions.

#![allow(dead_code)]

use std::collections::BTreeSet;

use dyck_syzygy::{Cell, DyckPath, DyckPattern, Partition};

/// Every partition with at most `rows` rows and `|λ| ≤ max_size`.
pub fn partitions_up_to(max_size: u32, rows: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(|k| Partition::all_of_size(k, rows)).collect()
}

/// Every `ν ⊇ λ` with at most `rows` rows and `|ν| − |λ| ≤ extra`, found by
/// adding boxes one at a time.
pub fn supersets(lambda: &Partition, rows: usize, extra: u32) -> Vec<Partition> {
    let mut seen: BTreeSet<Partition> = BTreeSet::from([lambda.clone()]);
    let mut layer = vec![lambda.clone()];
    for _ in 0..extra {
        let mut next = BTreeSet::new();
        for nu in &layer {
            for row in 1..=rows as u32 {
                if let Some(bigger) = nu.with_box_in_row(row) {
                    if !seen.contains(&bigger) {
                        next.insert(bigger);
                    }
                }
            }
        }
        seen.extend(next.iter().cloned());
        layer = next.into_iter().collect();
    }
    seen.into_iter().collect()
}

/// The boxes of `outer` not in `inner`.
pub fn skew(inner: &Partition, outer: &Partition) -> BTreeSet<Cell> {
    outer.cells().filter(|c| !inner.contains(*c)).collect()
}

/// Every Dyck path whose boxes all lie in `cells`.
pub fn dyck_paths_within(cells: &BTreeSet<Cell>) -> Vec<DyckPath> {
    fn extend(cells: &BTreeSet<Cell>, level: u32, cur: &mut Vec<Cell>, out: &mut Vec<DyckPath>) {
        let last = *cur.last().expect("nonempty");
        if last.x + last.y == level {
            out.push(DyckPath::new(cur.clone()).expect("built by the definition"));
        }
        let mut steps = vec![Cell::new(last.x + 1, last.y)];
        if last.y > 1 {
            steps.push(Cell::new(last.x, last.y - 1));
        }
        for next in steps {
            if next.x + next.y >= level && cells.contains(&next) {
                cur.push(next);
                extend(cells, level, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    for &start in cells {
        extend(cells, start.x + start.y, &mut vec![start], &mut out);
    }
    out
}

/// Every way to write `cells` as a disjoint union of paths from `paths`.
pub fn exact_covers(cells: &BTreeSet<Cell>, paths: &[DyckPath]) -> Vec<Vec<DyckPath>> {
    fn go(left: &mut BTreeSet<Cell>, paths: &[DyckPath], chosen: &mut Vec<DyckPath>, out: &mut Vec<Vec<DyckPath>>) {
        let Some(&first) = left.iter().next() else {
            out.push(chosen.clone());
            return;
        };
        for p in paths.iter().filter(|p| p.contains(first)) {
            if p.cells().iter().all(|c| left.contains(c)) {
                for c in p.cells() {
                    left.remove(c);
                }
                chosen.push(p.clone());
                go(left, paths, chosen, out);
                chosen.pop();
                left.extend(p.cells().iter().copied());
            }
        }
    }
    let mut out = Vec::new();
    go(&mut cells.clone(), paths, &mut Vec::new(), &mut out);
    out
}

/// Every structurally valid pattern with support `ν \ λ` for some `ν ⊇ λ` with
/// at most `rows` rows and `|ν \ λ| ≤ max_support`, paths of length at least
/// `min_len`, and bullets only when `with_bullets`. Admissibility is not checked.
pub fn candidates(
    lambda: &Partition,
    rows: usize,
    max_support: u32,
    min_len: usize,
    with_bullets: bool,
) -> Vec<DyckPattern> {
    let mut out = BTreeSet::new();
    for nu in supersets(lambda, rows, max_support) {
        let support = skew(lambda, &nu);
        let cells: Vec<Cell> = support.iter().copied().collect();
        let masks = if with_bullets { 1u32 << cells.len() } else { 1 };
        for mask in 0..masks {
            let bullets: BTreeSet<Cell> = (0..cells.len()).filter(|i| mask >> i & 1 == 1).map(|i| cells[i]).collect();
            let rest: BTreeSet<Cell> = support.difference(&bullets).copied().collect();
            let paths: Vec<DyckPath> = dyck_paths_within(&rest).into_iter().filter(|p| p.len() >= min_len).collect();
            for cover in exact_covers(&rest, &paths) {
                if let Ok(pattern) = DyckPattern::new(cover, bullets.iter().copied()) {
                    out.insert(pattern);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Brute-force `𝒦(λ;n)` with Dyck size at most `bound`, as sorted `(label, pattern)` pairs.
pub fn brute_kac(lambda: &Partition, n: usize, bound: u32) -> Vec<(Partition, DyckPattern)> {
    let mut out: Vec<_> = candidates(lambda, n, bound, 1, false)
        .into_iter()
        .filter(|p| dyck_syzygy::is_admissible(lambda, p))
        .map(|p| (dyck_syzygy::lambda_of(lambda, &p).expect("admissible"), p))
        .collect();
    out.sort();
    out
}

/// Brute-force `𝒜(λ;n)` restricted to support size at most `max_support`.
pub fn brute_syzygy(lambda: &Partition, n: usize, max_support: u32) -> Vec<(Partition, DyckPattern)> {
    let mut out: Vec<_> = candidates(lambda, n, max_support, 3, true)
        .into_iter()
        .filter(|p| dyck_syzygy::is_admissible(lambda, p))
        .map(|p| (dyck_syzygy::lambda_of(lambda, &p).expect("admissible"), p))
        .collect();
    out.sort();
    out
}

pub fn p(s: &str) -> Partition {
    s.parse().expect("valid partition literal")
}
