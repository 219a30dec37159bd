use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use valspec::oracle::{composition_count, oracle_spectrum};
use valspec::padic::Prime;
use valspec::spectra::{spectrum, SpectrumQuery};

/// One sampled `n` and its timings.
pub struct Row {
    pub digits: usize,
    pub trial: usize,
    pub n: BigUint,
    pub matrix: Duration,
    pub oracle: Option<Duration>,
}

/// Draws `n` with exactly `digits` base-`p` digits. The generator is seeded
/// once, so the sequence of samples depends only on the seed and arguments.
fn sample(rng: &mut ChaCha8Rng, p: u64, digits: usize) -> BigUint {
    let mut n = BigUint::zero();
    for pos in 0..digits {
        let low = u64::from(pos == 0);
        n = n * p + rng.gen_range(low..p);
    }
    n
}

pub fn run(
    p: Prime,
    k: usize,
    digit_counts: &[usize],
    trials: usize,
    seed: u64,
    budget: u64,
) -> Vec<Row> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    for &digits in digit_counts {
        for trial in 0..trials {
            let n = sample(&mut rng, p.get(), digits);
            let q = SpectrumQuery::new(p, k, n.clone()).expect("k validated by caller");
            let start = Instant::now();
            std::hint::black_box(spectrum(&q));
            let matrix = start.elapsed();
            let oracle = (composition_count(k, &n) <= BigUint::from(budget)).then(|| {
                let start = Instant::now();
                std::hint::black_box(oracle_spectrum(&q, budget).expect("within budget"));
                start.elapsed()
            });
            rows.push(Row {
                digits,
                trial,
                n,
                matrix,
                oracle,
            });
        }
    }
    rows
}

fn median(mut xs: Vec<Duration>) -> Option<Duration> {
    xs.sort();
    let mid = xs.len() / 2;
    match xs.len() {
        0 => None,
        len if len % 2 == 1 => Some(xs[mid]),
        _ => Some((xs[mid - 1] + xs[mid]) / 2),
    }
}

fn secs(d: Option<Duration>) -> String {
    d.map_or_else(
        || "skipped".to_string(),
        |d| format!("{:.6}", d.as_secs_f64()),
    )
}

/// `digits,trial,n,matrix_seconds,matrix_median_seconds,oracle_seconds,oracle_median_seconds`;
/// medians are over the trials of the same digit count.
pub fn to_csv(rows: &[Row]) -> String {
    let mut out = String::from(
        "digits,trial,n,matrix_seconds,matrix_median_seconds,oracle_seconds,oracle_median_seconds\n",
    );
    for row in rows {
        let group: Vec<&Row> = rows.iter().filter(|r| r.digits == row.digits).collect();
        let matrix_median = median(group.iter().map(|r| r.matrix).collect());
        let oracle_median = if group.iter().all(|r| r.oracle.is_some()) {
            median(group.iter().filter_map(|r| r.oracle).collect())
        } else {
            None
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            row.digits,
            row.trial,
            row.n,
            secs(Some(row.matrix)),
            secs(matrix_median),
            secs(row.oracle),
            secs(oracle_median),
        ));
    }
    out
}
