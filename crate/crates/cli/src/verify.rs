use std::fmt;

use num_bigint::{BigInt, BigUint};
use valspec::oracle::{oracle_spectrum, CompositionCursor};
use valspec::padic::{check_valuation_relation, Prime, Tuple};
use valspec::sequences::check_stern_identity;
use valspec::spectra::{
    fine_count, fine_count_by_subwords, multinomial_fine_count, spectrum, spectrum_by_recurrence,
    SpectrumQuery,
};
use valspec::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Oracle,
    Recurrence,
    Lemma,
    Stern,
    Fine,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::Recurrence => "recurrence",
            Suite::Lemma => "lemma",
            Suite::Stern => "stern",
            Suite::Fine => "fine",
            Suite::All => "all",
        }
    }
}

/// Parameters shared by every suite. Empty lists mean the suite's defaults.
pub struct Plan {
    pub limit: u64,
    pub primes: Vec<Prime>,
    pub ks: Vec<usize>,
    pub budget: u64,
}

/// A failed check: the first counterexample, spelled out.
#[derive(Debug)]
pub struct Failure {
    pub suite: &'static str,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} check failed: {}", self.suite, self.detail)
    }
}

/// Either a counterexample or a hard error (bad input, oracle budget).
pub enum Outcome {
    Failed(Failure),
    Error(Error),
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::Error(e)
    }
}

fn fail(suite: &'static str, detail: String) -> Outcome {
    Outcome::Failed(Failure { suite, detail })
}

impl Plan {
    fn primes_or(&self, default: &[u64]) -> Vec<Prime> {
        if self.primes.is_empty() {
            default
                .iter()
                .map(|&p| Prime::new(p).expect("default primes"))
                .collect()
        } else {
            self.primes.clone()
        }
    }

    fn ks_or(&self, default: &[usize]) -> Vec<usize> {
        if self.ks.is_empty() {
            default.to_vec()
        } else {
            self.ks.clone()
        }
    }
}

pub fn run(suite: Suite, plan: &Plan) -> Result<u64, Outcome> {
    match suite {
        Suite::Oracle => oracle(plan),
        Suite::Recurrence => recurrence(plan),
        Suite::Lemma => lemma(plan),
        Suite::Stern => stern(plan),
        Suite::Fine => fine(plan),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

pub const ALL: [Suite; 5] = [
    Suite::Oracle,
    Suite::Recurrence,
    Suite::Lemma,
    Suite::Stern,
    Suite::Fine,
];

/// Matrix product against brute-force enumeration, `n ≤ limit`.
fn oracle(plan: &Plan) -> Result<u64, Outcome> {
    let mut count = 0;
    for p in plan.primes_or(&[2, 3, 5]) {
        for k in plan.ks_or(&[2]) {
            for n in 0..=plan.limit {
                let q = SpectrumQuery::new(p, k, BigUint::from(n))?;
                let fast = spectrum(&q);
                let slow = oracle_spectrum(&q, plan.budget)?;
                if fast != slow {
                    return Err(fail(
                        "oracle",
                        format!("p={p} k={k} n={n}: matrix {fast}, oracle {slow}"),
                    ));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Scalar recurrence against the matrix product, binomial rows only.
fn recurrence(plan: &Plan) -> Result<u64, Outcome> {
    let mut count = 0;
    for p in plan.primes_or(&[2, 3, 5, 7]) {
        for n in 0..=plan.limit {
            let q = SpectrumQuery::binomial(p, BigUint::from(n));
            let rec = spectrum_by_recurrence(&q)?;
            let mat = spectrum(&q);
            if rec != mat {
                return Err(fail(
                    "recurrence",
                    format!("p={p} k=2 n={n}: recurrence {rec}, matrix {mat}"),
                ));
            }
            count += 1;
        }
    }
    Ok(count)
}

/// Valuation relation for every k-tuple with total ≤ limit and every
/// admissible digit `d` and shift `i`.
fn lemma(plan: &Plan) -> Result<u64, Outcome> {
    let mut count = 0;
    for p in plan.primes_or(&[2, 3]) {
        let base = p.get();
        for k in plan.ks_or(&[3]) {
            for total in 0..=plan.limit {
                for m in CompositionCursor::new(k, total) {
                    let tuple = Tuple::from_u64s(&m);
                    for i in 0..k as u64 {
                        for d in 0..base {
                            let shifted = total + i;
                            if shifted < d || (shifted - d) % base != 0 {
                                continue;
                            }
                            let n = BigUint::from((shifted - d) / base);
                            let report = check_valuation_relation(&tuple, p, &n, d, i as usize)?;
                            if !report.holds() {
                                return Err(fail(
                                    "lemma",
                                    format!("p={p} k={k} m={m:?} n={n} d={d} i={i}: {report:?}"),
                                ));
                            }
                            count += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(count)
}

fn stern(plan: &Plan) -> Result<u64, Outcome> {
    for n in 0..=plan.limit {
        let r = check_stern_identity(&BigUint::from(n));
        if !r.holds() {
            return Err(fail(
                "stern",
                format!(
                    "p=2 k=2 n={n}: T_2(n,-1) = {}, (-1)^t(n) S(n+1,-2) = {}",
                    r.lhs, r.rhs
                ),
            ));
        }
    }
    Ok(plan.limit + 1)
}

/// Mass `T(n, 1)` and the constant term against the Fine digit products.
fn fine(plan: &Plan) -> Result<u64, Outcome> {
    let mut count = 0;
    for p in plan.primes_or(&[2, 3, 5, 7]) {
        for k in plan.ks_or(&[2, 3, 4]) {
            for n in 0..=plan.limit {
                let q = SpectrumQuery::new(p, k, BigUint::from(n))?;
                let t = spectrum(&q);
                let constant = t.coeff(0);
                let product = BigInt::from(multinomial_fine_count(q.n(), p, k));
                if constant != product {
                    return Err(fail(
                        "fine",
                        format!("p={p} k={k} n={n}: constant {constant}, digit product {product}"),
                    ));
                }
                if k == 2 {
                    let mass = t.coeff_sum();
                    if mass != BigInt::from(n + 1) {
                        return Err(fail(
                            "fine",
                            format!("p={p} k=2 n={n}: T(n,1) = {mass}, expected {}", n + 1),
                        ));
                    }
                    let direct = fine_count(q.n(), p);
                    let words = fine_count_by_subwords(q.n(), p);
                    if BigInt::from(direct.clone()) != constant || direct != words {
                        return Err(fail(
                            "fine",
                            format!("p={p} k=2 n={n}: constant {constant}, fine {direct}, subword form {words}"),
                        ));
                    }
                }
                count += 1;
            }
        }
    }
    Ok(count)
}
