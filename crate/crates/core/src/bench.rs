//! Empirical scaling harness for [`gwp_with_stats`].
//!
//! Each `(n, M)` cell runs seeded trials: a random `x` with nonzero exponent
//! sum, a random exponent `c`, and `y` built by relation-fuzzing `x^c`. The
//! lengths are chosen so that `|x^c| ≈ M`. Every record is reproducible from
//! the base seed, `n`, `M` and the trial number alone; trials run in parallel
//! but are reported in cell order.

use std::io;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{fuzz, BraidIndex, BraidWord, Letter};
use crate::exponent::exp_sum;
use crate::gwp::{gwp_with_stats, Verdict};

/// Largest `|c|` drawn by the harness.
pub const MAX_BENCH_EXPONENT: i64 = 4;

/// Uniform letters over `σ_1^{±1} .. σ_{n-1}^{±1}`.
pub fn random_word<R: Rng + ?Sized>(index: BraidIndex, len: usize, rng: &mut R) -> BraidWord {
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=index.generators());
            if rng.gen_bool(0.5) {
                Letter::sigma(i)
            } else {
                Letter::sigma_inv(i)
            }
        })
        .collect();
    BraidWord::from_valid(index, letters)
}

/// [`random_word`] resampled until the exponent sum is nonzero. `len` must be positive.
pub fn random_word_nonzero_exp<R: Rng + ?Sized>(index: BraidIndex, len: usize, rng: &mut R) -> BraidWord {
    assert!(len > 0, "a nonzero exponent sum needs at least one letter");
    loop {
        let w = random_word(index, len, rng);
        if !exp_sum(&w).is_zero() {
            return w;
        }
    }
}

/// SplitMix64 finaliser.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of one trial, derived from the run seed and the cell coordinates.
pub fn trial_seed(seed: u64, n: u16, m: usize, trial: usize) -> u64 {
    mix(mix(mix(mix(seed) ^ n as u64) ^ m as u64) ^ trial as u64)
}

/// One CSV row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub n: u16,
    /// Actual `max(|x|, |y|)`.
    #[serde(rename = "M")]
    pub m: usize,
    #[serde(rename = "L_min")]
    pub l_min: u64,
    pub c: i64,
    pub verdict: String,
    pub letters_scanned: u64,
    pub factor_ops: u64,
    pub wall_ns: u64,
    pub seed: u64,
    /// Nominal cell length; not part of the CSV.
    #[serde(skip)]
    pub cell_m: usize,
}

/// Runs one trial of the `(n, m)` cell from its trial seed.
pub fn run_trial(index: BraidIndex, m: usize, seed: u64) -> BenchRecord {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let magnitude = rng.gen_range(1..=MAX_BENCH_EXPONENT);
    let c = if rng.gen_bool(0.5) { magnitude } else { -magnitude };
    let x_len = m.div_ceil(magnitude as usize).max(1);
    let x = random_word_nonzero_exp(index, x_len, &mut rng);
    let y = fuzz(&x.pow(c), m / 8, rng.gen());

    let (result, stats) = gwp_with_stats(&x, &y).expect("indices agree by construction");
    let verdict = match result.verdict {
        Verdict::Power(_) => "power",
        Verdict::NotPower(_) => "not_power",
        Verdict::ZeroExponentUnsupported => "unsupported",
    };
    BenchRecord {
        n: index.strands(),
        m: x.len().max(y.len()),
        l_min: stats.min_canonical_length,
        c,
        verdict: verdict.to_string(),
        letters_scanned: stats.letters_scanned,
        factor_ops: stats.factor_ops,
        wall_ns: stats.wall_ns,
        seed,
        cell_m: m,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub indices: Vec<BraidIndex>,
    pub lengths: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
}

/// All trials, ordered by `n`, then `M`, then trial number.
pub fn run_bench(config: &BenchConfig) -> Vec<BenchRecord> {
    let jobs: Vec<(BraidIndex, usize, usize)> = config
        .indices
        .iter()
        .flat_map(|&n| config.lengths.iter().flat_map(move |&m| (0..config.trials).map(move |t| (n, m, t))))
        .collect();
    jobs.par_iter().map(|&(n, m, t)| run_trial(n, m, trial_seed(config.seed, n.strands(), m, t))).collect()
}

/// Writes the records as CSV. With `omit_timing` the `wall_ns` column is
/// zeroed so that output is byte-identical across runs.
pub fn write_csv<W: io::Write>(records: &[BenchRecord], out: W, omit_timing: bool) -> csv::Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    for r in records {
        if omit_timing {
            wtr.serialize(BenchRecord { wall_ns: 0, ..r.clone() })?;
        } else {
            wtr.serialize(r)?;
        }
    }
    wtr.flush()?;
    Ok(())
}

/// Least-squares slope of `ln y` against `ln x`. Needs two distinct positive `x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> =
        points.iter().filter(|(x, y)| *x > 0.0 && *y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

/// Per-cell means.
#[derive(Debug, Clone, PartialEq)]
pub struct CellMean {
    pub n: u16,
    pub cell_m: usize,
    pub mean_m: f64,
    pub mean_factor_ops: f64,
    pub mean_wall_ns: f64,
}

pub fn cell_means(records: &[BenchRecord]) -> Vec<CellMean> {
    let mut cells: Vec<CellMean> = Vec::new();
    let mut counts: Vec<f64> = Vec::new();
    for r in records {
        let idx = match cells.iter().position(|c| c.n == r.n && c.cell_m == r.cell_m) {
            Some(i) => i,
            None => {
                cells.push(CellMean { n: r.n, cell_m: r.cell_m, mean_m: 0.0, mean_factor_ops: 0.0, mean_wall_ns: 0.0 });
                counts.push(0.0);
                cells.len() - 1
            }
        };
        let c = &mut cells[idx];
        c.mean_m += r.m as f64;
        c.mean_factor_ops += r.factor_ops as f64;
        c.mean_wall_ns += r.wall_ns as f64;
        counts[idx] += 1.0;
    }
    for (c, k) in cells.iter_mut().zip(counts) {
        c.mean_m /= k;
        c.mean_factor_ops /= k;
        c.mean_wall_ns /= k;
    }
    cells
}

/// Fitted log-log exponents of one series.
#[derive(Debug, Clone, PartialEq)]
pub struct Slope {
    /// The fixed coordinate (`n` for slopes in `M`, nominal `M` for slopes in `n`).
    pub fixed: usize,
    pub factor_ops: Option<f64>,
    pub wall_time: Option<f64>,
}

/// Slopes against `M` for each fixed `n`.
pub fn slopes_in_m(cells: &[CellMean]) -> Vec<Slope> {
    let mut ns: Vec<u16> = cells.iter().map(|c| c.n).collect();
    ns.dedup();
    ns.into_iter()
        .map(|n| {
            let row: Vec<&CellMean> = cells.iter().filter(|c| c.n == n).collect();
            Slope {
                fixed: n as usize,
                factor_ops: loglog_slope(&row.iter().map(|c| (c.mean_m, c.mean_factor_ops)).collect::<Vec<_>>()),
                wall_time: loglog_slope(&row.iter().map(|c| (c.mean_m, c.mean_wall_ns)).collect::<Vec<_>>()),
            }
        })
        .collect()
}

/// Slopes against `n` for each fixed nominal `M`.
pub fn slopes_in_n(cells: &[CellMean]) -> Vec<Slope> {
    let mut ms: Vec<usize> = cells.iter().map(|c| c.cell_m).collect();
    ms.sort_unstable();
    ms.dedup();
    ms.into_iter()
        .map(|m| {
            let col: Vec<&CellMean> = cells.iter().filter(|c| c.cell_m == m).collect();
            Slope {
                fixed: m,
                factor_ops: loglog_slope(&col.iter().map(|c| (c.n as f64, c.mean_factor_ops)).collect::<Vec<_>>()),
                wall_time: loglog_slope(&col.iter().map(|c| (c.n as f64, c.mean_wall_ns)).collect::<Vec<_>>()),
            }
        })
        .collect()
}

/// `a..b` (every integer, inclusive) or a comma list.
pub fn parse_index_range(spec: &str) -> Result<Vec<BraidIndex>, String> {
    let values = parse_range(spec, |v| v + 1)?;
    values
        .into_iter()
        .map(|v| u32::try_from(v).ok().and_then(|v| BraidIndex::new(v).ok()).ok_or(format!("invalid braid index {v}")))
        .collect()
}

/// `a..b` (doubling from `a` up to `b`) or a comma list.
pub fn parse_length_range(spec: &str) -> Result<Vec<usize>, String> {
    let values = parse_range(spec, |v| v * 2)?;
    if values.contains(&0) {
        return Err("word lengths must be positive".into());
    }
    Ok(values)
}

fn parse_range(spec: &str, next: impl Fn(usize) -> usize) -> Result<Vec<usize>, String> {
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("not a number: {s:?}"));
    let values = if let Some((a, b)) = spec.split_once("..") {
        let (a, b) = (num(a)?, num(b)?);
        if a == 0 || a > b {
            return Err(format!("empty range {spec:?}"));
        }
        let mut v = Vec::new();
        let mut cur = a;
        while cur <= b {
            v.push(cur);
            cur = next(cur);
        }
        v
    } else {
        spec.split(',').map(num).collect::<Result<Vec<_>, _>>()?
    };
    if values.is_empty() {
        return Err(format!("empty range {spec:?}"));
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        let ns: Vec<u16> = parse_index_range("4..8").unwrap().iter().map(|n| n.strands()).collect();
        assert_eq!(ns, vec![4, 5, 6, 7, 8]);
        let ns: Vec<u16> = parse_index_range("4,8").unwrap().iter().map(|n| n.strands()).collect();
        assert_eq!(ns, vec![4, 8]);
        assert_eq!(parse_length_range("16..256").unwrap(), vec![16, 32, 64, 128, 256]);
        assert_eq!(parse_length_range("32,48").unwrap(), vec![32, 48]);
        assert!(parse_index_range("1..3").is_err());
        assert!(parse_index_range("8..4").is_err());
        assert!(parse_length_range("0..4").is_err());
        assert!(parse_length_range("x").is_err());
        assert!(parse_length_range("").is_err());
    }

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<(f64, f64)> = [2.0f64, 4.0, 8.0, 16.0].iter().map(|&x| (x, 3.0 * x.powi(2))).collect();
        assert!((loglog_slope(&pts).unwrap() - 2.0).abs() < 1e-12);
        assert_eq!(loglog_slope(&[(1.0, 1.0)]), None);
        assert_eq!(loglog_slope(&[(2.0, 1.0), (2.0, 5.0)]), None);
    }

    #[test]
    fn trials_are_reproducible() {
        let n = BraidIndex::new(4).unwrap();
        let s = trial_seed(7, 4, 32, 0);
        let a = run_trial(n, 32, s);
        let b = run_trial(n, 32, s);
        assert_eq!(BenchRecord { wall_ns: 0, ..a.clone() }, BenchRecord { wall_ns: 0, ..b });
        assert_eq!(a.verdict, "power");
        assert_ne!(trial_seed(7, 4, 32, 0), trial_seed(7, 4, 32, 1));
        assert_ne!(trial_seed(7, 4, 32, 0), trial_seed(7, 5, 32, 0));
    }

    #[test]
    fn nonzero_exp_sampler() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let n = BraidIndex::new(3).unwrap();
        for len in 1..20 {
            let w = random_word_nonzero_exp(n, len, &mut rng);
            assert_eq!(w.len(), len);
            assert!(!exp_sum(&w).is_zero());
        }
    }
}
