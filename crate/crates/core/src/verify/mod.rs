//! Identity suites. Each suite computes both sides of every identity by
//! separate routes (continued fractions, closed forms, recurrences, raw
//! enumeration) and reports the first disagreement it finds.

mod ballot;
mod check;
mod oracle;
mod suites;

pub use ballot::{alpha, alpha_inv, ballot_index, beta, beta_inv, last_minus_one_is_peak, BallotError};
pub use check::Failure;
pub use oracle::{
    ballot, ballot_closed, ballot_rows, binomial, check_all, g_poly, r_closed, sequence, t_closed, u_multiple_sum,
    Route, SequenceName, SequenceOracle,
};
pub use suites::conjecture::{conjecture_rows, ConjectureRow, LISTED_F, LISTED_G};

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Outcome of one suite run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub params: Value,
    pub status: Status,
    pub counterexample: Option<Value>,
    pub elapsed_ms: u64,
}

impl Report {
    fn new(suite: Suite, params: Value, outcome: check::Outcome, elapsed: Duration) -> Self {
        let (status, counterexample) = match outcome {
            Ok(()) => (Status::Pass, None),
            Err(f) => (Status::Fail, Some(f.to_json())),
        };
        Report {
            suite: suite.id().to_string(),
            params,
            status,
            counterexample,
            elapsed_ms: elapsed.as_millis() as u64,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Report {
    /// One line, without timing so repeated runs print the same bytes.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        };
        write!(f, "{status} {} {}", self.suite, self.params)?;
        if let Some(c) = &self.counterexample {
            write!(f, " counterexample={c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Ten,
    Gamma,
    MinusOneExc,
    MinusOneDes,
    Equidist,
    Wex,
    Propositions,
    Recurrences,
    Ballot,
    Section6,
    Conjecture,
    Mansour,
    Mfs,
    Properties,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Ten,
        Suite::Gamma,
        Suite::MinusOneExc,
        Suite::MinusOneDes,
        Suite::Equidist,
        Suite::Wex,
        Suite::Propositions,
        Suite::Recurrences,
        Suite::Ballot,
        Suite::Section6,
        Suite::Conjecture,
        Suite::Mansour,
        Suite::Mfs,
        Suite::Properties,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Ten => "ten",
            Suite::Gamma => "gamma",
            Suite::MinusOneExc => "minus-one-exc",
            Suite::MinusOneDes => "minus-one-des",
            Suite::Equidist => "equidist",
            Suite::Wex => "wex",
            Suite::Propositions => "propositions",
            Suite::Recurrences => "recurrences",
            Suite::Ballot => "ballot",
            Suite::Section6 => "section6",
            Suite::Conjecture => "conjecture",
            Suite::Mansour => "mansour",
            Suite::Mfs => "mfs",
            Suite::Properties => "properties",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Suite::Ten => "ten (pattern, statistic) interpretations of C_n(t,q)",
            Suite::Gamma => "gamma expansions of C_n(t,q) and the adi/adi* variants",
            Suite::MinusOneExc => "t = -1 evaluations with respect to exc",
            Suite::MinusOneDes => "t = -1 evaluations with respect to des",
            Suite::Equidist => "equidistributions on S_n and their continued fractions",
            Suite::Wex => "the weak excedance variant and its gamma expansions",
            Suite::Propositions => "further interpretations of the Carlitz q-Catalan numbers",
            Suite::Recurrences => "convolution recurrences over coderangements",
            Suite::Ballot => "ballot numbers and the bijections alpha and beta",
            Suite::Section6 => "separable and (1342,2431)-avoiding alternating permutations",
            Suite::Conjecture => "G_n(t) over D_n(123): gamma positivity and F_n",
            Suite::Mansour => "|A_2n+1(231)| = |A_2n(231)| = C_n",
            Suite::Mfs => "the modified Foata-Strehl action",
            Suite::Properties => "randomized algebra and continued fraction properties",
        }
    }

    /// Largest permutation length checked when no override is given.
    pub fn default_n_max(self, deep: bool) -> usize {
        match self {
            Suite::Ten | Suite::Gamma | Suite::Wex => 8,
            Suite::MinusOneExc | Suite::MinusOneDes => 10,
            Suite::Equidist | Suite::Mfs => 7,
            Suite::Propositions | Suite::Recurrences => 9,
            Suite::Ballot => 12,
            Suite::Section6 | Suite::Mansour => 13,
            Suite::Conjecture => {
                if deep {
                    10
                } else {
                    9
                }
            }
            Suite::Properties => 6,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm = s.trim().to_ascii_lowercase().replace('_', "-");
        Suite::ALL.into_iter().find(|x| x.id() == norm).ok_or_else(|| {
            let ids: Vec<&str> = Suite::ALL.iter().map(|x| x.id()).collect();
            format!("unknown suite `{s}` (expected all or one of {})", ids.join(", "))
        })
    }
}

/// Overrides shared by all suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SuiteConfig {
    /// Largest permutation length; each suite has its own default.
    pub n_max: Option<usize>,
    pub deep: bool,
    /// Randomized trials for the property suite.
    pub trials: Option<usize>,
    pub seed: Option<u64>,
}

pub const DEFAULT_TRIALS: usize = 1000;
pub const DEFAULT_SEED: u64 = 0x5eed_cafe;

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Report {
    let start = Instant::now();
    let n = cfg.n_max.unwrap_or_else(|| suite.default_n_max(cfg.deep));
    let full = n.min(8);
    let (params, outcome) = match suite {
        Suite::Ten => (json!({ "n_max": n }), suites::interpretations::ten(n)),
        Suite::Gamma => (json!({ "n_max": n }), suites::interpretations::gamma(n)),
        Suite::MinusOneExc => (
            json!({ "n_max": n, "full_n_max": full, "no_identity": suites::minus_one::TABLE_EXC_STARS }),
            suites::minus_one::exc(n, full),
        ),
        Suite::MinusOneDes => (
            json!({ "n_max": n, "full_n_max": full, "no_identity": suites::minus_one::TABLE_DES_STARS }),
            suites::minus_one::des(n, full),
        ),
        Suite::Equidist => (json!({ "n_max": n }), suites::equidist::equidist(n)),
        Suite::Wex => (json!({ "n_max": n }), suites::equidist::wex(n)),
        Suite::Propositions => (json!({ "n_max": n }), suites::props::propositions(n)),
        Suite::Recurrences => (json!({ "n_max": n, "full_n_max": full }), suites::props::recurrences(n, full)),
        Suite::Ballot => (json!({ "n_max": n }), suites::props::ballot_suite(n)),
        Suite::Section6 => {
            let odd = if n % 2 == 1 { n } else { n.saturating_sub(1) };
            let even = n - n % 2;
            let gamma_n = n.min(9);
            (
                json!({ "n_max_odd": odd, "n_max_even": even, "gamma_n_max": gamma_n }),
                suites::section6::section6(odd, even, gamma_n),
            )
        }
        Suite::Conjecture => (json!({ "n_max": n, "deep": cfg.deep }), suites::conjecture::explore(n)),
        Suite::Mansour => (json!({ "n_max": n }), suites::section6::mansour(n)),
        Suite::Mfs => (json!({ "n_max": n }), suites::mfs_suite::mfs(n)),
        Suite::Properties => {
            let trials = cfg.trials.unwrap_or(DEFAULT_TRIALS);
            let seed = cfg.seed.unwrap_or(DEFAULT_SEED);
            (
                json!({ "trials": trials, "seed": seed, "n_max": n }),
                suites::properties::properties(trials, seed, n),
            )
        }
    };
    Report::new(suite, params, outcome, start.elapsed())
}

fn with_n(n_max: usize) -> SuiteConfig {
    SuiteConfig { n_max: Some(n_max), ..SuiteConfig::default() }
}

pub fn check_ten_interpretations(n_max: usize) -> Report {
    run_suite(Suite::Ten, &with_n(n_max))
}

pub fn check_gamma_theorems(n_max: usize) -> Report {
    run_suite(Suite::Gamma, &with_n(n_max))
}

pub fn check_minus_one_exc(n_max: usize) -> Report {
    run_suite(Suite::MinusOneExc, &with_n(n_max))
}

pub fn check_minus_one_des(n_max: usize) -> Report {
    run_suite(Suite::MinusOneDes, &with_n(n_max))
}

pub fn check_equidistributions(n_max: usize) -> Report {
    run_suite(Suite::Equidist, &with_n(n_max))
}

pub fn check_wex_variant(n_max: usize) -> Report {
    run_suite(Suite::Wex, &with_n(n_max))
}

pub fn check_propositions(n_max: usize) -> Report {
    run_suite(Suite::Propositions, &with_n(n_max))
}

pub fn check_recurrences(n_max: usize) -> Report {
    run_suite(Suite::Recurrences, &with_n(n_max))
}

pub fn check_ballot(n_max: usize) -> Report {
    run_suite(Suite::Ballot, &with_n(n_max))
}

/// Odd lengths up to `n_max_odd`, even lengths up to `n_max_even`.
pub fn check_section6(n_max_odd: usize, n_max_even: usize) -> Report {
    let start = Instant::now();
    let gamma_n = n_max_odd.max(n_max_even).min(9);
    let params = json!({ "n_max_odd": n_max_odd, "n_max_even": n_max_even, "gamma_n_max": gamma_n });
    let outcome = suites::section6::section6(n_max_odd, n_max_even, gamma_n);
    Report::new(Suite::Section6, params, outcome, start.elapsed())
}

pub fn explore_conjecture(n_max: usize) -> Report {
    run_suite(Suite::Conjecture, &with_n(n_max))
}

pub fn check_mansour_alt(n_max: usize) -> Report {
    run_suite(Suite::Mansour, &with_n(n_max))
}

pub fn check_mfs(n_max: usize) -> Report {
    run_suite(Suite::Mfs, &with_n(n_max))
}

pub fn check_properties(trials: usize, seed: u64) -> Report {
    run_suite(Suite::Properties, &SuiteConfig { trials: Some(trials), seed: Some(seed), ..SuiteConfig::default() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_ids_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.id().parse::<Suite>(), Ok(s));
        }
        assert!("everything".parse::<Suite>().is_err());
    }

    #[test]
    fn report_json_shape() {
        let r = check_mansour_alt(5);
        let v = serde_json::to_value(&r).unwrap();
        for key in ["suite", "params", "status", "counterexample", "elapsed_ms"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["status"], "pass");
        assert!(v["counterexample"].is_null());
        let back: Report = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn failing_outcome_carries_details() {
        let f = Failure::new("demo", json!({ "left": "1", "right": "2" }));
        let r = Report::new(Suite::Ten, json!({}), Err(f), Duration::ZERO);
        assert!(!r.passed());
        assert_eq!(r.counterexample.as_ref().unwrap()["check"], "demo");
        assert!(r.to_string().starts_with("FAIL ten"));
    }
}
