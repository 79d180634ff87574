//! Finite-field experimentation on rank strata of minor varieties: uniform
//! and rank-constrained matrix sampling, exhaustive censuses for tiny
//! instances, and Monte Carlo codimension estimates from hit frequencies
//! (frequency ~ q^-codim for an irreducible stratum).

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::minors::principal_minor_ideal;
use crate::scalar::Field;

/// Sampling parameters. `rank` constrains the sampling distribution (via a
/// rank-r product factorization); `invertible` is counted as part of the
/// membership event.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SampleConfig {
    pub n: usize,
    pub t: usize,
    pub q: u64,
    pub samples: u64,
    pub rank: Option<usize>,
    pub invertible: bool,
    pub seed: u64,
}

impl SampleConfig {
    pub fn new(n: usize, t: usize, q: u64, samples: u64, seed: u64) -> Result<SampleConfig> {
        Field::prime(q)?;
        if samples == 0 {
            return Err(Error::Invalid("sample count must be positive".into()));
        }
        if n == 0 || t == 0 || t > n {
            return Err(Error::Invalid(format!("bad stratum parameters n={n} t={t}")));
        }
        Ok(SampleConfig { n, t, q, samples, rank: None, invertible: false, seed })
    }

    pub fn with_rank(mut self, r: usize) -> Result<SampleConfig> {
        if r > self.n {
            return Err(Error::Invalid(format!("rank {r} exceeds n={}", self.n)));
        }
        self.rank = Some(r);
        Ok(self)
    }

    pub fn invertible_only(mut self) -> SampleConfig {
        self.invertible = true;
        self
    }
}

/// Monte Carlo codimension estimate. `c_hat = -log_q(hits/samples)`; the
/// interval maps a 95% Wilson interval for the hit probability through the
/// same logarithm. `ci_wide` flags an interval wider than the unit band a
/// +-0.5 tolerance can resolve.
#[derive(Clone, Debug, Serialize)]
pub struct CodimEstimate {
    pub hits: u64,
    pub samples: u64,
    pub freq: f64,
    pub c_hat: Option<f64>,
    pub c_lo: Option<f64>,
    pub c_hi: Option<f64>,
    pub ci_wide: bool,
}

impl CodimEstimate {
    fn from_counts(hits: u64, samples: u64, q: u64) -> CodimEstimate {
        let n = samples as f64;
        let p = hits as f64 / n;
        let lq = (q as f64).ln();
        let c_hat = if hits > 0 { Some(-(p.ln()) / lq) } else { None };
        // Wilson score interval at 95%
        let z = 1.959964f64;
        let denom = 1.0 + z * z / n;
        let center = (p + z * z / (2.0 * n)) / denom;
        let half = (z / denom) * (p * (1.0 - p) / n + z * z / (4.0 * n * n)).sqrt();
        let p_lo = (center - half).max(0.0);
        let p_hi = (center + half).min(1.0);
        // larger probability -> smaller codimension
        let c_lo = if p_hi > 0.0 { Some(-(p_hi.ln()) / lq) } else { None };
        let c_hi = if p_lo > 0.0 { Some(-(p_lo.ln()) / lq) } else { None };
        let ci_wide = match (c_lo, c_hi) {
            (Some(lo), Some(hi)) => hi - lo > 1.0,
            _ => true,
        };
        CodimEstimate { hits, samples, freq: p, c_hat, c_lo, c_hi, ci_wide }
    }

    /// True when the estimate exists and lies within `tol` of `expected`.
    pub fn within(&self, expected: f64, tol: f64) -> bool {
        self.c_hat.is_some_and(|c| (c - expected).abs() <= tol)
    }
}

/// A polynomial baked down to mod-q arithmetic for tight evaluation loops.
struct CompiledPoly {
    terms: Vec<(u64, Vec<(u16, u16)>)>,
}

impl CompiledPoly {
    fn eval(&self, vals: &[u64], q: u64) -> u64 {
        let mut acc = 0u64;
        for (coeff, powers) in &self.terms {
            let mut v = *coeff;
            for &(var, exp) in powers {
                let x = vals[var as usize];
                if x == 0 {
                    v = 0;
                    break;
                }
                for _ in 0..exp {
                    v = (v * x) % q;
                }
            }
            acc = (acc + v) % q;
        }
        acc
    }
}

fn compile_ideal(ideal: &Ideal, q: u64) -> Result<Vec<CompiledPoly>> {
    let mut out = Vec::with_capacity(ideal.num_gens());
    for g in ideal.gens() {
        let mut terms = Vec::with_capacity(g.num_terms());
        for t in g.terms() {
            let coeff = match t.coeff.as_mod() {
                Some(v) => {
                    if ideal.ring().field() != Field::Prime(q) {
                        return Err(Error::RingMismatch(format!(
                            "ideal over {} compiled for F_{q}",
                            ideal.ring().field()
                        )));
                    }
                    v
                }
                None => {
                    let (num, den) = t.coeff.as_rational().unwrap();
                    let fq = Field::Prime(q);
                    let n = fq.from_bigint(num).as_mod().unwrap();
                    let d = fq.from_bigint(den).as_mod().unwrap();
                    if d == 0 {
                        return Err(Error::Invalid(format!(
                            "coefficient denominator divisible by {q}"
                        )));
                    }
                    (n * crate::scalar::invm(d, q)) % q
                }
            };
            let powers: Vec<(u16, u16)> =
                t.mon.support().map(|v| (v as u16, t.mon.exp(v))).collect();
            terms.push((coeff, powers));
        }
        out.push(CompiledPoly { terms });
    }
    Ok(out)
}

/// Row-echelon rank of a flat row-major matrix over F_q.
pub fn rank_mod(entries: &[u64], nrows: usize, ncols: usize, q: u64) -> usize {
    let mut m = entries.to_vec();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| m[r * ncols + col] % q != 0) else {
            continue;
        };
        for j in 0..ncols {
            m.swap(rank * ncols + j, pivot * ncols + j);
        }
        let inv = crate::scalar::invm(m[rank * ncols + col], q);
        for r in rank + 1..nrows {
            let factor = (m[r * ncols + col] * inv) % q;
            if factor == 0 {
                continue;
            }
            for j in col..ncols {
                let sub = (factor * m[rank * ncols + j]) % q;
                m[r * ncols + j] = (m[r * ncols + j] + q - sub) % q;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Determinant over F_q by elimination.
pub fn det_mod(entries: &[u64], n: usize, q: u64) -> u64 {
    let mut m = entries.to_vec();
    let mut det = 1u64 % q;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r * n + col] % q != 0) else {
            return 0;
        };
        if pivot != col {
            for j in 0..n {
                m.swap(col * n + j, pivot * n + j);
            }
            det = (q - det) % q;
        }
        det = (det * m[col * n + col]) % q;
        let inv = crate::scalar::invm(m[col * n + col], q);
        for r in col + 1..n {
            let factor = (m[r * n + col] * inv) % q;
            if factor == 0 {
                continue;
            }
            for j in col..n {
                let sub = (factor * m[col * n + j]) % q;
                m[r * n + j] = (m[r * n + j] + q - sub) % q;
            }
        }
    }
    det
}

const RANK_RESAMPLE_LIMIT: usize = 10_000;

/// Draws one matrix per the config: uniform entries, or a product of
/// uniform n-by-r and r-by-n full-rank factors when a rank is prescribed.
pub fn sample_matrix<R: Rng>(cfg: &SampleConfig, rng: &mut R) -> Result<Vec<u64>> {
    let (n, q) = (cfg.n, cfg.q);
    match cfg.rank {
        None => Ok((0..n * n).map(|_| rng.gen_range(0..q)).collect()),
        Some(0) => Ok(vec![0; n * n]),
        Some(r) => {
            for _ in 0..RANK_RESAMPLE_LIMIT {
                let a: Vec<u64> = (0..n * r).map(|_| rng.gen_range(0..q)).collect();
                let b: Vec<u64> = (0..r * n).map(|_| rng.gen_range(0..q)).collect();
                if rank_mod(&a, n, r, q) != r || rank_mod(&b, r, n, q) != r {
                    continue;
                }
                let mut m = vec![0u64; n * n];
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = 0u64;
                        for k in 0..r {
                            acc = (acc + a[i * r + k] * b[k * n + j]) % q;
                        }
                        m[i * n + j] = acc;
                    }
                }
                return Ok(m);
            }
            Err(Error::Invalid(format!(
                "rank-{r} sampling failed {RANK_RESAMPLE_LIMIT} times"
            )))
        }
    }
}

fn is_member(compiled: &[CompiledPoly], vals: &[u64], q: u64) -> bool {
    compiled.iter().all(|p| p.eval(vals, q) == 0)
}

/// Estimates the codimension of the locus cut out by `ideal` (intersected
/// with the invertibility condition when requested) from the hit frequency
/// of uniform samples. Parallel over fixed-size chunks with per-chunk RNG
/// streams, so the result depends only on the seed.
pub fn estimate_codim(cfg: &SampleConfig, ideal: &Ideal) -> Result<CodimEstimate> {
    if ideal.ring().n() != cfg.n {
        return Err(Error::RingMismatch(format!(
            "ideal over a {}x{} ring vs samples of size {}",
            ideal.ring().n(),
            ideal.ring().n(),
            cfg.n
        )));
    }
    let compiled = compile_ideal(ideal, cfg.q)?;
    const CHUNK: u64 = 1 << 14;
    let chunks = cfg.samples.div_ceil(CHUNK);
    let hits: u64 = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let mut rng = ChaCha12Rng::seed_from_u64(cfg.seed);
            rng.set_stream(chunk + 1);
            let lo = chunk * CHUNK;
            let hi = (lo + CHUNK).min(cfg.samples);
            let mut local = 0u64;
            for _ in lo..hi {
                let m = sample_matrix(cfg, &mut rng).expect("sampler exhausted retries");
                if is_member(&compiled, &m, cfg.q)
                    && (!cfg.invertible || rank_mod(&m, cfg.n, cfg.n, cfg.q) == cfg.n)
                {
                    local += 1;
                }
            }
            local
        })
        .sum();
    Ok(CodimEstimate::from_counts(hits, cfg.samples, cfg.q))
}

/// Exact census of `V(P_t)(F_q)` partitioned by matrix rank, with the
/// all-matrices rank distribution alongside.
#[derive(Clone, Debug, Serialize)]
pub struct Census {
    pub n: usize,
    pub q: u64,
    pub t: usize,
    /// count of rank-r matrices in the variety, r = 0..=n
    pub variety_by_rank: Vec<u64>,
    /// count of all rank-r matrices, r = 0..=n
    pub total_by_rank: Vec<u64>,
}

impl Census {
    pub fn variety_total(&self) -> u64 {
        self.variety_by_rank.iter().sum()
    }

    pub fn grand_total(&self) -> u64 {
        self.total_by_rank.iter().sum()
    }

    /// CSV rows `n,q,t,rank,count` for the variety counts.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,q,t,rank,count\n");
        for (r, c) in self.variety_by_rank.iter().enumerate() {
            out.push_str(&format!("{},{},{},{},{}\n", self.n, self.q, self.t, r, c));
        }
        out
    }
}

const CENSUS_BUDGET: u64 = 1 << 24;

/// Walks every matrix in `F_q^(n x n)`; budgeted at `q^(n^2) <= 2^24`.
pub fn exhaustive_count(n: usize, q: u64, t: usize) -> Result<Census> {
    Field::prime(q)?;
    if n == 0 || t == 0 || t > n {
        return Err(Error::Invalid(format!("bad census parameters n={n} t={t}")));
    }
    let cells = (n * n) as u32;
    let total = q.checked_pow(cells).filter(|&v| v <= CENSUS_BUDGET);
    let Some(total) = total else {
        return Err(Error::Budget { what: "census size", limit: CENSUS_BUDGET });
    };
    let ideal = principal_minor_ideal(n, t, Field::Prime(q))?;
    let compiled = compile_ideal(&ideal, q)?;

    let mut variety_by_rank = vec![0u64; n + 1];
    let mut total_by_rank = vec![0u64; n + 1];
    let mut m = vec![0u64; n * n];
    for counter in 0..total {
        let mut c = counter;
        for cell in m.iter_mut() {
            *cell = c % q;
            c /= q;
        }
        let r = rank_mod(&m, n, n, q);
        total_by_rank[r] += 1;
        if is_member(&compiled, &m, q) {
            variety_by_rank[r] += 1;
        }
    }
    Ok(Census { n, q, t, variety_by_rank, total_by_rank })
}
