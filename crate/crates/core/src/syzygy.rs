//! Homology classes of the BGG complex of a principal ideal `I_λ` and the
//! Betti table they determine.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::dyck::DyckPattern;
use crate::enumerate::enumerate_syzygy_patterns;
use crate::error::{Error, Result};
use crate::grothendieck::HilbertCalculator;
use crate::par;
use crate::partition::Partition;
use crate::series::HilbertSeries;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandMember {
    pub pattern: DyckPattern,
    pub label: Partition,
    pub d: u32,
    pub series: HilbertSeries,
}

/// `[H_{|λ|+b}]` for every `b`, as multisets of simple classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyResult {
    pub lambda: Partition,
    pub m: u32,
    pub n: u32,
    /// Keyed by bullet size; empty strands are absent.
    pub strands: BTreeMap<u32, Vec<StrandMember>>,
}

impl HomologyResult {
    pub fn members(&self) -> impl Iterator<Item = (u32, &StrandMember)> {
        self.strands
            .iter()
            .flat_map(|(b, ms)| ms.iter().map(move |m| (*b, m)))
    }

    /// Keeps only strand `b`.
    pub fn restrict(&self, b: u32) -> HomologyResult {
        HomologyResult {
            strands: self.strands.iter().filter(|(k, _)| **k == b).map(|(k, v)| (*k, v.clone())).collect(),
            ..self.clone()
        }
    }
}

pub fn homology_classes(lambda: &Partition, m: u32, n: u32) -> Result<HomologyResult> {
    homology_classes_with(HilbertCalculator::global(), lambda, m, n)
}

pub fn homology_classes_with(calc: &HilbertCalculator, lambda: &Partition, m: u32, n: u32) -> Result<HomologyResult> {
    if n > m {
        return Err(Error::Precondition(format!("n = {n} exceeds m = {m}")));
    }
    let family = enumerate_syzygy_patterns(lambda, n as usize)?;
    let series = par::map(&family.members, |mem| calc.simple(&mem.label, m, n, None));
    let mut strands: BTreeMap<u32, Vec<StrandMember>> = BTreeMap::new();
    for (mem, s) in family.members.into_iter().zip(series) {
        strands.entry(mem.b).or_default().push(StrandMember {
            pattern: mem.pattern,
            label: mem.label,
            d: mem.d,
            series: s?,
        });
    }
    Ok(HomologyResult {
        lambda: lambda.clone(),
        m,
        n,
        strands,
    })
}

/// Graded Betti numbers `β_{col, row+col}`, keyed by `(row, col)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    // no zero values
    entries: BTreeMap<(u32, u32), BigInt>,
}

impl BettiTable {
    pub fn from_homology(result: &HomologyResult) -> BettiTable {
        let mut table = BettiTable::default();
        let base = result.lambda.size();
        for (b, member) in result.members() {
            table.add_series(base + b, &member.series);
        }
        table
    }

    /// Adds the series of one linear strand lying in `row`.
    pub fn add_series(&mut self, row: u32, series: &HilbertSeries) {
        for (degree, c) in series.terms() {
            let col = degree.checked_sub(row).expect("a strand series starts at or above its row");
            let entry = self.entries.entry((row, col)).or_default();
            *entry += c;
        }
        self.entries.retain(|_, c| !c.is_zero());
    }

    pub fn get(&self, row: u32, col: u32) -> BigInt {
        self.entries.get(&(row, col)).cloned().unwrap_or_default()
    }

    pub fn entries(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn rows(&self) -> Vec<u32> {
        let mut rows: Vec<u32> = self.entries.keys().map(|(r, _)| *r).collect();
        rows.dedup();
        rows
    }

    pub fn max_column(&self) -> Option<u32> {
        self.entries.keys().map(|(_, c)| *c).max()
    }

    /// Entries of one row from column 0 through the last nonzero column of the table.
    pub fn row(&self, row: u32) -> Vec<BigInt> {
        let width = self.max_column().map_or(0, |c| c + 1);
        (0..width).map(|col| self.get(row, col)).collect()
    }

    /// Macaulay2-style rendering: a header of column indices, one `r:` line
    /// per nonzero row, right-aligned entries and `.` for zeros.
    pub fn to_text(&self) -> String {
        let rows = self.rows();
        let Some(max_col) = self.max_column() else {
            return String::new();
        };
        let cell = |r: u32, c: u32| {
            let v = self.get(r, c);
            if v.is_zero() { ".".to_string() } else { v.to_string() }
        };
        let label_width = rows.iter().map(|r| r.to_string().len() + 1).max().unwrap_or(0);
        let widths: Vec<usize> = (0..=max_col)
            .map(|c| {
                rows.iter()
                    .map(|r| cell(*r, c).len())
                    .chain([c.to_string().len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        let mut out = String::new();
        out.push_str(&" ".repeat(label_width));
        for (c, w) in widths.iter().enumerate() {
            write!(out, " {c:>w$}").unwrap();
        }
        out.push('\n');
        for r in rows {
            write!(out, "{:>label_width$}", format!("{r}:")).unwrap();
            for (c, w) in widths.iter().enumerate() {
                write!(out, " {:>w$}", cell(r, c as u32)).unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// `{row: {col: value}}` with string keys, as JSON objects require.
    pub fn rows_json(&self) -> Value {
        let mut rows = Map::new();
        for ((r, c), v) in &self.entries {
            let row = rows.entry(r.to_string()).or_insert_with(|| Value::Object(Map::new()));
            row.as_object_mut()
                .expect("rows are objects")
                .insert(c.to_string(), integer_json(v));
        }
        Value::Object(rows)
    }
}

fn integer_json(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

pub fn betti_table(lambda: &Partition, m: u32, n: u32) -> Result<BettiTable> {
    Ok(BettiTable::from_homology(&homology_classes(lambda, m, n)?))
}

/// The JSON document `{"lambda", "m", "n", "rows", "strands"}`.
pub fn betti_json(result: &HomologyResult, table: &BettiTable) -> Value {
    json!({
        "lambda": result.lambda,
        "m": result.m,
        "n": result.n,
        "rows": table.rows_json(),
        "strands": result.strands,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InclusionExclusionTerm {
    /// 1-based indices into the input list, increasing.
    pub subset: Vec<usize>,
    pub union: Partition,
    /// `+1` for odd subsets, `−1` for even ones.
    pub sign: i8,
}

/// The terms `(S, ∪_{i∈S} λ_i, (−1)^{|S|+1})` over all nonempty subsets `S`,
/// ordered by subset size and then lexicographically.
pub fn general_ideal_terms(lambdas: &[Partition]) -> Result<Vec<InclusionExclusionTerm>> {
    if lambdas.is_empty() {
        return Err(Error::Precondition("no partitions given".into()));
    }
    if lambdas.len() > 20 {
        return Err(Error::Precondition("at most 20 partitions are supported".into()));
    }
    for (i, a) in lambdas.iter().enumerate() {
        for b in &lambdas[i + 1..] {
            if a.leq(b) || b.leq(a) {
                return Err(Error::ComparablePair(a.to_string(), b.to_string()));
            }
        }
    }
    let k = lambdas.len();
    let mut subsets: Vec<Vec<usize>> = (1u32..1 << k)
        .map(|mask| (0..k).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect())
        .collect();
    subsets.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    Ok(subsets
        .into_iter()
        .map(|subset| {
            let union = subset
                .iter()
                .fold(Partition::empty(), |acc, i| acc.union(&lambdas[i - 1]));
            let sign = if subset.len() % 2 == 1 { 1 } else { -1 };
            InclusionExclusionTerm { subset, union, sign }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn empty_lambda_is_free() {
        let h = homology_classes(&Partition::empty(), 3, 3).unwrap();
        assert_eq!(h.strands.len(), 1);
        assert_eq!(h.strands[&0].len(), 1);
        assert_eq!(h.strands[&0][0].series, HilbertSeries::monomial(1, 0));
        let t = BettiTable::from_homology(&h);
        assert_eq!(t.entries().count(), 1);
        assert_eq!(t.get(0, 0), BigInt::from(1));
        assert_eq!(t.to_text(), "   0\n0: 1\n");
    }

    #[test]
    fn maximal_minors_three_by_two() {
        let h = homology_classes(&p("(1,1)"), 3, 2).unwrap();
        let labels: Vec<_> = h.members().map(|(b, m)| (b, m.label.clone())).collect();
        assert_eq!(labels, vec![(0, p("(1,1)"))]);
        let t = BettiTable::from_homology(&h);
        assert_eq!(t.row(2), vec![BigInt::from(3), BigInt::from(2)]);
    }

    #[test]
    fn text_layout() {
        let mut t = BettiTable::default();
        t.add_series(5, &HilbertSeries::from_coeffs([0, 0, 0, 0, 0, 225, 1132]));
        t.add_series(6, &HilbertSeries::monomial(1, 9));
        assert_eq!(t.to_text(), "     0    1 2 3\n5: 225 1132 . .\n6:   .    . . 1\n");
        let rows = t.rows_json();
        assert_eq!(rows["5"]["1"], json!(1132));
        assert_eq!(rows["6"]["3"], json!(1));
    }

    #[test]
    fn general_terms() {
        let terms = general_ideal_terms(&[p("(4,3,1,1)"), p("(4,3,2)")]).unwrap();
        let got: Vec<_> = terms.iter().map(|t| (t.union.to_string(), t.sign)).collect();
        assert_eq!(
            got,
            vec![
                ("(4,3,1,1)".to_string(), 1),
                ("(4,3,2)".to_string(), 1),
                ("(4,3,2,1)".to_string(), -1)
            ]
        );
        let single = general_ideal_terms(&[p("(2)")]).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].sign, 1);
        let terms = general_ideal_terms(&[p("(2)"), p("(1,1)")]).unwrap();
        assert_eq!(terms[2].union, p("(2,1)"));
        assert_eq!(terms[2].subset, vec![1, 2]);
        assert!(matches!(
            general_ideal_terms(&[p("(2)"), p("(3)")]),
            Err(Error::ComparablePair(_, _))
        ));
    }
}
