//! Scaling measurements on maximal random instances.
//!
//! Generation is excluded from the timings. Each size first finds its
//! optimum stretch, then times the single-query solve at that bound and the
//! full search separately, taking the median over repeated runs.

use std::time::Instant;

use serde_json::{json, Value};

use crate::outerplanar::{random_outerplanar, Fraction};
use crate::solver::{min_stretch, tree_t_spanner};

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    /// Optimum stretch of the generated instance; the solve column queries
    /// exactly this bound.
    pub t: u32,
    pub solve_ms: f64,
    pub min_stretch_ms: f64,
}

#[derive(Clone, Debug)]
pub struct BenchReport {
    pub runs: usize,
    pub rows: Vec<BenchRow>,
}

pub const DEFAULT_SIZES: [usize; 3] = [100_000, 200_000, 400_000];
pub const DEFAULT_RUNS: usize = 3;

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

pub fn benchmark(sizes: &[usize], runs: usize, seed: u64) -> BenchReport {
    assert!(runs >= 1);
    let mut rows = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let g = random_outerplanar(n, Fraction::ONE, seed ^ ((i as u64) << 32));
        let t = min_stretch(&g).expect("generated instances are valid").t;
        let mut solve_times = Vec::with_capacity(runs);
        let mut search_times = Vec::with_capacity(runs);
        for _ in 0..runs {
            let clock = Instant::now();
            let r = tree_t_spanner(&g, t).expect("generated instances are valid");
            solve_times.push(clock.elapsed().as_secs_f64() * 1e3);
            assert!(r.exists());

            let clock = Instant::now();
            let r = min_stretch(&g).expect("generated instances are valid");
            search_times.push(clock.elapsed().as_secs_f64() * 1e3);
            assert_eq!(r.t, t);
        }
        rows.push(BenchRow {
            n,
            m: g.m(),
            t,
            solve_ms: median(solve_times),
            min_stretch_ms: median(search_times),
        });
    }
    BenchReport { runs, rows }
}

impl BenchReport {
    pub fn render(&self) -> String {
        let mut out = format!("runs {}\n", self.runs);
        for r in &self.rows {
            out.push_str(&format!(
                "n {} m {} t {} solve_ms {:.2} minstretch_ms {:.2}\n",
                r.n, r.m, r.t, r.solve_ms, r.min_stretch_ms
            ));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "runs": self.runs,
            "rows": self.rows.iter().map(|r| json!({
                "n": r.n,
                "m": r.m,
                "t": r.t,
                "solve_ms": r.solve_ms,
                "minstretch_ms": r.min_stretch_ms,
            })).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_populates_rows() {
        let report = benchmark(&[50, 100], 1, 7);
        assert_eq!(report.rows.len(), 2);
        for row in &report.rows {
            // maximal: every polygon split kept
            assert_eq!(row.m, 2 * row.n - 3);
            assert!(row.t >= 2);
            assert!(row.solve_ms >= 0.0);
        }
        let text = report.render();
        assert!(text.contains("n 50 m 97"));
        assert_eq!(report.to_json()["rows"][1]["n"], 100);
    }
}
