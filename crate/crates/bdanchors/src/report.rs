//! CSV rows and the computations behind the reporting subcommands.

use anyhow::Result;
use bdanchors_core::oracles::{evaluate_f1, gen_synthetic, SyntheticConfig, TrialStats};
use bdanchors_core::sampling::{default_r, sample, Order, ReductionRule, Sample, Scheme, SchemeParams};
use bdanchors_core::similarity::{top_k_query, DictionaryIndex, QueryParams, TopK};
use bdanchors_core::Text;

pub const SAMPLE_HEADER: &str = "scheme,ell,w,k,r,n,sample_size,density";
pub const AVG_HEADER: &str = "n,ell,sigma,mode,trials,avg,stderr";
pub const TOPK_HEADER: &str = "query_id,rank,string_id,E,UB";
pub const EVAL_HEADER: &str = "ell,queries,k,tau,delta,mean_f1,min_f1";
pub const SEARCH_HEADER: &str = "pattern_id,start";

fn opt(v: Option<usize>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

pub fn sample_row(s: &Sample) -> String {
    let p = s.params();
    let r = (p.scheme == Scheme::Rbda).then_some(p.r);
    format!(
        "{},{},{},{},{},{},{},{:.6}",
        p.scheme.name(),
        p.ell,
        opt(p.w),
        opt(p.k),
        opt(r),
        s.text_len(),
        s.len(),
        s.density()
    )
}

/// Reduction used when none is given: the experimental default for the
/// alphabet of `text`, or 0 when that is undefined (`ℓ < 2` or a unary text).
pub fn auto_r(text: &[u8], ell: usize) -> usize {
    let sigma = Text::new(text.to_vec()).map(|t| t.sigma()).unwrap_or(0);
    default_r(ell, sigma, ReductionRule::Experiment).unwrap_or(0)
}

/// One row per scheme and `ℓ`; minimizer schemes get one row per
/// `(w, k)` with `w + k - 1 = ℓ` (restricted to `ws` when given).
pub fn density_rows(
    text: &[u8],
    ells: &[usize],
    schemes: &[Scheme],
    r: Option<usize>,
    ws: Option<&[usize]>,
    order: Order,
) -> Result<Vec<String>> {
    let mut rows = Vec::new();
    for &ell in ells {
        for &scheme in schemes {
            let params: Vec<SchemeParams> = match scheme {
                Scheme::Bda => vec![SchemeParams::bda(ell)],
                Scheme::Rbda => vec![SchemeParams::rbda(ell, r.unwrap_or_else(|| auto_r(text, ell)))],
                Scheme::MinStd | Scheme::MinWin => (1..=ell)
                    .filter(|w| ws.is_none_or(|ws| ws.contains(w)))
                    .map(|w| SchemeParams::minimizers(scheme, w, ell + 1 - w, order))
                    .collect(),
            };
            for p in params {
                rows.push(sample_row(&sample(text, p)?));
            }
        }
    }
    Ok(rows)
}

pub fn avg_row(s: &TrialStats) -> String {
    format!("{},{},{},{},{},{:.6},{:.6}", s.n, s.ell, s.sigma, s.mode.name(), s.trials, s.avg_count, s.stderr)
}

pub fn topk_rows(query_id: usize, top: &TopK) -> Vec<String> {
    top.candidates
        .iter()
        .enumerate()
        .map(|(rank, c)| format!("{query_id},{},{},{},{}", rank + 1, c.string_id, c.e, opt(c.ub)))
        .collect()
}

/// Per-query F1 of top-K search over a generated benchmark, with `K` equal
/// to the cluster size.
pub fn synthetic_f1(cfg: &SyntheticConfig, ell: usize, tau: usize, delta: usize) -> Result<Vec<f64>> {
    let data = gen_synthetic(cfg)?;
    let dix = DictionaryIndex::build(data.dictionary, ell)?;
    let params = QueryParams { k: cfg.k, tau, delta };
    data.queries
        .iter()
        .zip(&data.truth)
        .map(|(q, truth)| {
            let top = top_k_query(&dix, q, params)?;
            let ids: Vec<usize> = top.candidates.iter().map(|c| c.string_id).collect();
            Ok(evaluate_f1(&ids, truth, cfg.k))
        })
        .collect()
}

pub fn eval_row(cfg: &SyntheticConfig, ell: usize, tau: usize, delta: usize, f1: &[f64]) -> String {
    let mean = f1.iter().sum::<f64>() / f1.len() as f64;
    let min = f1.iter().copied().fold(f64::INFINITY, f64::min);
    format!("{ell},{},{},{tau},{delta},{mean:.6},{min:.6}", f1.len(), cfg.k)
}
