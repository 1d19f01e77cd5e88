//! Brute-force verifiers that share no code path with the pattern machinery:
//! exactness of the subset cube complex, the degree-wise Euler identity of
//! the BGG complex, tableau counting, and the Eagon–Northcott resolution.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::enumerate::partitions_above;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::syzygy::{homology_classes, HomologyResult};

type Matrix = Vec<Vec<BigRational>>;

/// The complex `0 → F_0 → F_1 → … → F_n → 0` with `F_i` spanned by the
/// `i`-subsets of `{0, …, n−1}` and `d_i(e_A)` supported on the supersets
/// `A ∪ {j}`.
#[derive(Clone, Debug)]
pub struct CubeComplex {
    pub n: usize,
    // subsets of each size, as bitmasks in increasing order
    bases: Vec<Vec<u32>>,
    // differentials[i]: rows indexed by bases[i + 1], columns by bases[i]
    pub differentials: Vec<Matrix>,
}

impl CubeComplex {
    /// Koszul signs: the entry at `(A ∪ {j}, A)` is `(−1)^{#{a ∈ A : a < j}}`.
    pub fn koszul(n: usize) -> CubeComplex {
        CubeComplex::build(n, |_| BigRational::one())
    }

    /// The Koszul complex conjugated by a random positive diagonal change of
    /// basis, which keeps every containment entry nonzero.
    pub fn rescaled(n: usize, seed: u64) -> CubeComplex {
        let mut rng = StdRng::seed_from_u64(seed);
        let scales: Vec<BigRational> = (0..1u32 << n)
            .map(|_| BigRational::new(rng.gen_range(1..=9).into(), rng.gen_range(1..=9).into()))
            .collect();
        CubeComplex::build(n, |mask| scales[mask as usize].clone())
    }

    fn build(n: usize, scale: impl Fn(u32) -> BigRational) -> CubeComplex {
        let mut bases = vec![Vec::new(); n + 1];
        for mask in 0..1u32 << n {
            bases[mask.count_ones() as usize].push(mask);
        }
        let differentials = (0..n)
            .map(|i| {
                let index: BTreeMap<u32, usize> = bases[i + 1].iter().enumerate().map(|(k, b)| (*b, k)).collect();
                let mut d = vec![vec![BigRational::zero(); bases[i].len()]; bases[i + 1].len()];
                for (col, &a) in bases[i].iter().enumerate() {
                    for j in (0..n).filter(|j| a >> j & 1 == 0) {
                        let b = a | 1 << j;
                        let below = (a & ((1 << j) - 1)).count_ones();
                        let sign = if below % 2 == 0 { BigRational::one() } else { -BigRational::one() };
                        d[index[&b]][col] = sign * scale(b) / scale(a);
                    }
                }
                d
            })
            .collect();
        CubeComplex { n, bases, differentials }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// Whether every entry is nonzero exactly on the containments `A ⊂ B`.
    pub fn respects_containment(&self) -> bool {
        self.differentials.iter().enumerate().all(|(i, d)| {
            d.iter().enumerate().all(|(r, row)| {
                row.iter().enumerate().all(|(c, x)| {
                    let (a, b) = (self.bases[i][c], self.bases[i + 1][r]);
                    (a & b == a) != x.is_zero()
                })
            })
        })
    }
}

fn multiply(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| {
                    (0..inner)
                        .filter(|k| !row[*k].is_zero() && !b[*k][c].is_zero())
                        .map(|k| &row[k] * &b[k][c])
                        .sum()
                })
                .collect()
        })
        .collect()
}

/// Rank by Gaussian elimination over the rationals.
pub fn rank(matrix: &Matrix) -> usize {
    let mut m = matrix.clone();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|r| !m[*r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubeReport {
    pub n: usize,
    pub dims: Vec<usize>,
    /// `rank d_i` for `i = 0..n`.
    pub ranks: Vec<usize>,
    pub d_squared_zero: bool,
    pub exact: bool,
}

impl CubeReport {
    pub fn passed(&self) -> bool {
        self.d_squared_zero && self.exact
    }
}

pub fn check_complex(complex: &CubeComplex) -> CubeReport {
    let d = &complex.differentials;
    let d_squared_zero = complex.respects_containment()
        && d.windows(2)
            .all(|w| multiply(&w[1], &w[0]).iter().flatten().all(Zero::is_zero));
    let ranks: Vec<usize> = d.iter().map(rank).collect();
    let dims = complex.dims();
    let exact = (0..=complex.n).all(|i| {
        let incoming = if i == 0 { 0 } else { ranks[i - 1] };
        let outgoing = ranks.get(i).copied().unwrap_or(0);
        incoming + outgoing == dims[i]
    });
    CubeReport {
        n: complex.n,
        dims,
        ranks,
        d_squared_zero,
        exact,
    }
}

/// Builds the Koszul-signed cube complex on `n` points and verifies `d² = 0`
/// and exactness in every position.
pub fn cube_complex_check(n: usize) -> Result<CubeReport> {
    if !(1..=12).contains(&n) {
        return Err(Error::Precondition(format!("cube size {n} outside 1..=12")));
    }
    Ok(check_complex(&CubeComplex::koszul(n)))
}

/// Number of semistandard tableaux of shape `λ` with entries in `1..=k`.
pub fn ssyt_count(lambda: &Partition, k: u32) -> u64 {
    fn fill(parts: &[u32], k: u32, row: usize, col: usize, grid: &mut Vec<Vec<u32>>) -> u64 {
        if row == parts.len() {
            return 1;
        }
        if col == parts[row] as usize {
            return fill(parts, k, row + 1, 0, grid);
        }
        let left = if col > 0 { grid[row][col - 1] } else { 1 };
        let above = if row > 0 { grid[row - 1][col] + 1 } else { 1 };
        let mut total = 0;
        for v in left.max(above)..=k {
            grid[row][col] = v;
            total += fill(parts, k, row, col + 1, grid);
        }
        total
    }
    let parts = lambda.parts();
    let mut grid: Vec<Vec<u32>> = parts.iter().map(|p| vec![0; *p as usize]).collect();
    fill(parts, k, 0, 0, &mut grid)
}

/// `β_i = C(m, n+i) · C(n+i−1, i)` for `i = 0..=m−n`, all in row `n`.
pub fn eagon_northcott_betti(m: u32, n: u32) -> Result<Vec<(u32, BigUint)>> {
    if n == 0 || n > m {
        return Err(Error::Precondition(format!("need m ≥ n ≥ 1, got m = {m}, n = {n}")));
    }
    Ok((0..=m - n)
        .map(|i| {
            let b = binomial(BigUint::from(m), BigUint::from(n + i)) * binomial(BigUint::from(n + i - 1), BigUint::from(i));
            (i, b)
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerDegree {
    pub degree: u32,
    /// Alternating sum over the terms of the complex.
    pub complex_side: String,
    /// Alternating sum over the homology strands.
    pub homology_side: String,
}

impl EulerDegree {
    pub fn holds(&self) -> bool {
        self.complex_side == self.homology_side
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerReport {
    pub lambda: Partition,
    pub m: u32,
    pub n: u32,
    pub degrees: Vec<EulerDegree>,
}

impl EulerReport {
    pub fn first_mismatch(&self) -> Option<&EulerDegree> {
        self.degrees.iter().find(|d| !d.holds())
    }

    pub fn passed(&self) -> bool {
        self.first_mismatch().is_none()
    }
}

/// Compares, degree by degree up to `d_max`, the Euler characteristic of the
/// complex `⊕_{|μ|=t, λ⊆μ, ℓ(μ)≤n} K_μ` (computed from Cauchy dimensions and
/// binomials alone) with the alternating sum of the homology strands.
pub fn euler_check(lambda: &Partition, m: u32, n: u32, d_max: u32) -> Result<EulerReport> {
    if d_max < lambda.size() {
        return Err(Error::Precondition(format!("d_max = {d_max} is below |λ| = {}", lambda.size())));
    }
    euler_check_with(&homology_classes(lambda, m, n)?, d_max)
}

/// [`euler_check`] against already computed homology.
pub fn euler_check_with(homology: &HomologyResult, d_max: u32) -> Result<EulerReport> {
    let (lambda, m, n) = (&homology.lambda, homology.m, homology.n);
    if d_max < lambda.size() {
        return Err(Error::Precondition(format!("d_max = {d_max} is below |λ| = {}", lambda.size())));
    }
    let extra = d_max - lambda.size();
    let mut rank_by_size: BTreeMap<u32, BigInt> = BTreeMap::new();
    for mu in partitions_above(lambda, n as usize, lambda.part(1) + extra, extra) {
        let rank = BigInt::from(mu.schur_dim(m)) * BigInt::from(mu.schur_dim(n));
        *rank_by_size.entry(mu.size()).or_default() += rank;
    }
    let mn = m * n;
    let sign = |k: u32| if k % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let degrees = (0..=d_max)
        .map(|d| {
            let complex_side: BigInt = rank_by_size
                .range(d.saturating_sub(mn)..=d)
                .map(|(t, rank)| sign(*t) * rank * binomial(BigInt::from(mn), BigInt::from(d - t)))
                .sum();
            let homology_side: BigInt = homology
                .members()
                .map(|(b, mem)| sign(lambda.size() + b) * mem.series.coeff(d))
                .sum();
            EulerDegree {
                degree: d,
                complex_side: complex_side.to_string(),
                homology_side: homology_side.to_string(),
            }
        })
        .collect();
    Ok(EulerReport {
        lambda: lambda.clone(),
        m,
        n,
        degrees,
    })
}
