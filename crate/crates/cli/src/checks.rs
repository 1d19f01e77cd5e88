//! Oracle suites behind the `check` subcommand.

use clap::ValueEnum;
use dyck_syzygy::oracle::{check_complex, cube_complex_check, eagon_northcott_betti, euler_check, ssyt_count, CubeComplex};
use dyck_syzygy::{betti_table, hilbert_series_simple, HilbertSeries, Partition};
use num_bigint::BigInt;
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    /// Exactness of the signed subset cube, plain and rescaled.
    Cube,
    /// Degree-wise Euler characteristic of the BGG complex.
    Euler,
    /// Hook-content dimensions against tableau counts.
    Ssyt,
    /// Maximal-minor Betti rows against the Eagon–Northcott formula.
    EagonNorthcott,
    /// Nonnegativity, order and leading term of simple-module series.
    Canary,
    /// Reference series and Betti table of `I_(3,2)` for `m = n = 3`.
    Reference,
}

pub struct Outcome {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

impl Outcome {
    fn new(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Outcome {
        Outcome {
            name: name.into(),
            ok,
            detail: detail.into(),
        }
    }

    fn from_result(name: impl Into<String>, r: anyhow::Result<()>) -> Outcome {
        match r {
            Ok(()) => Outcome::new(name, true, ""),
            Err(e) => Outcome::new(name, false, e.to_string()),
        }
    }
}

pub fn run(suite: Suite) -> Vec<Outcome> {
    match suite {
        Suite::Cube => cube(),
        Suite::Euler => euler(),
        Suite::Ssyt => ssyt(),
        Suite::EagonNorthcott => eagon_northcott(),
        Suite::Canary => canary(),
        Suite::Reference => reference(),
    }
}

fn cube() -> Vec<Outcome> {
    let mut out = Vec::new();
    for n in 1..=8 {
        let r = cube_complex_check(n).expect("n in range");
        out.push(Outcome::new(format!("cube n={n}"), r.passed(), format!("ranks {:?}", r.ranks)));
    }
    for seed in 0..3 {
        let r = check_complex(&CubeComplex::rescaled(6, seed));
        out.push(Outcome::new(format!("cube n=6 rescaled seed={seed}"), r.passed(), ""));
    }
    out
}

fn euler() -> Vec<Outcome> {
    ["()", "(1)", "(2)", "(1,1)", "(2,1)", "(3,2)"]
        .into_iter()
        .map(|s| {
            let lambda: Partition = s.parse().expect("literal");
            Outcome::from_result(format!("euler {s} m=3 n=3"), (|| {
                let r = euler_check(&lambda, 3, 3, lambda.size() + 9)?;
                if let Some(bad) = r.first_mismatch() {
                    anyhow::bail!(
                        "degree {}: complex {} vs homology {}",
                        bad.degree,
                        bad.complex_side,
                        bad.homology_side
                    );
                }
                Ok(())
            })())
        })
        .collect()
}

fn ssyt() -> Vec<Outcome> {
    let mut bad = Vec::new();
    let mut count = 0;
    for size in 0..=6 {
        for lambda in Partition::all_of_size(size, size as usize) {
            for k in 0..=5 {
                count += 1;
                if lambda.schur_dim(k) != ssyt_count(&lambda, k).into() {
                    bad.push(format!("{lambda} k={k}"));
                }
            }
        }
    }
    vec![Outcome::new(format!("ssyt {count} cases"), bad.is_empty(), bad.join(", "))]
}

fn eagon_northcott() -> Vec<Outcome> {
    [(2, 2), (3, 2), (4, 2), (3, 3)]
        .into_iter()
        .map(|(m, n)| {
            Outcome::from_result(format!("eagon-northcott m={m} n={n}"), (|| {
                let lambda = Partition::new(vec![1; n as usize])?;
                let row = betti_table(&lambda, m, n)?.row(n);
                let expected: Vec<_> = eagon_northcott_betti(m, n)?.into_iter().map(|(_, b)| BigInt::from(b)).collect();
                anyhow::ensure!(row == expected, "row {n} is {row:?}, expected {expected:?}");
                Ok(())
            })())
        })
        .collect()
}

fn canary() -> Vec<Outcome> {
    let mut out = Vec::new();
    for k in 1..=3u32 {
        out.push(Outcome::from_result(format!("canary |μ|≤6 m=n={k}"), (|| {
            for size in (0..=6).rev() {
                for mu in Partition::all_of_size(size, k as usize) {
                    let s = hilbert_series_simple(&mu, k, k, None)?;
                    let lead = BigInt::from(mu.schur_dim(k)).pow(2);
                    anyhow::ensure!(s.order() == Some(mu.size()), "order of HS{mu} is {:?}", s.order());
                    anyhow::ensure!(s.coeff(mu.size()) == lead, "leading coefficient of HS{mu}");
                }
            }
            Ok(())
        })()));
    }
    out
}

fn reference() -> Vec<Outcome> {
    let expected: [(&str, u32, &[i64]); 5] = [
        ("(3,2)", 5, &[225, 1132, 2673, 3582, 2785, 1188, 225]),
        ("(4,4)", 8, &[225, 700, 828, 450, 100]),
        ("(3,3,3)", 9, &[1]),
        ("(4,4,3)", 11, &[9, 16, 9]),
        ("(5,5,5)", 15, &[1]),
    ];
    let mut out: Vec<Outcome> = expected
        .into_iter()
        .map(|(s, min_deg, coeffs)| {
            Outcome::from_result(format!("series {s} m=3 n=3"), (|| {
                let want: HilbertSeries = serde_json::from_value(json!({"min_deg": min_deg, "coeffs": coeffs}))?;
                let got = hilbert_series_simple(&s.parse()?, 3, 3, None)?;
                anyhow::ensure!(got == want, "got {got}");
                Ok(())
            })())
        })
        .collect();
    out.push(Outcome::from_result("betti (3,2) m=3 n=3", (|| {
        let text = betti_table(&"(3,2)".parse()?, 3, 3)?.to_text();
        anyhow::ensure!(text == crate::REFERENCE_BETTI_32, "got\n{text}");
        Ok(())
    })()));
    out
}
