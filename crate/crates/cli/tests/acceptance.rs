//! Acceptance battery: ten criteria, each under its own time limit. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::path::{Path, PathBuf};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use qtcat::verify::{
    check_ballot, check_equidistributions, check_gamma_theorems, check_mansour_alt, check_mfs, check_minus_one_des,
    check_minus_one_exc, check_properties, check_section6, check_ten_interpretations, check_wex_variant,
    SequenceName, SequenceOracle,
};
use qtcat::{run_suite, Report, Suite, SuiteConfig};

type Check = Result<(), String>;

fn qtcat(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qtcat")).args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("qtcat {} exited with {}: {}", args.join(" "), out.status, String::from_utf8_lossy(&out.stderr)));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn reports(rs: impl IntoIterator<Item = Report>) -> Check {
    for r in rs {
        if !r.passed() {
            return Err(r.to_string());
        }
    }
    Ok(())
}

fn lines(family: &str, hi: usize, want: &[&str]) -> Check {
    let got = qtcat(&["poly", family, "0", "--to", &hi.to_string()])?;
    let got: Vec<&str> = got.lines().collect();
    if got != want {
        return Err(format!("{family}: got {got:?}, listed {want:?}"));
    }
    Ok(())
}

fn golden() -> Check {
    lines("carlitz", 4, &["1", "1", "q+1", "q^3+q^2+2*q+1", "q^6+q^5+2*q^4+3*q^3+3*q^2+3*q+1"])?;
    lines(
        "cstar",
        5,
        &["1", "1", "2*q", "2*q^4+3*q^2", "2*q^9+2*q^7+6*q^5+4*q^3", "2*q^16+2*q^14+4*q^12+8*q^10+9*q^8+12*q^6+5*q^4"],
    )?;
    lines(
        "chat",
        5,
        &[
            "1",
            "1",
            "q^2+q",
            "q^6+q^5+q^4+q^3+q^2",
            "q^12+q^11+q^10+2*q^9+q^8+2*q^7+2*q^6+2*q^5+q^4+q^3",
            "q^20+q^19+q^18+2*q^17+2*q^16+2*q^15+3*q^14+3*q^13+4*q^12+3*q^11+5*q^10+3*q^9+4*q^8+3*q^7+3*q^6+q^5+q^4",
        ],
    )?;
    lines(
        "cbar",
        6,
        &[
            "1",
            "1",
            "q+1",
            "2*q^2+2*q+1",
            "5*q^3+5*q^2+3*q+1",
            "14*q^4+14*q^3+9*q^2+4*q+1",
            "42*q^5+42*q^4+28*q^3+14*q^2+5*q+1",
        ],
    )
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("data").join(name)
}

/// Exports a b-file through the binary and compares it with the reference prefix.
fn bfile(seq: &str, reference: &str) -> Check {
    let want = std::fs::read_to_string(data(reference)).map_err(|e| e.to_string())?;
    let count = want.lines().count();
    let out = std::env::temp_dir().join(format!("qtcat-acceptance-{}-{seq}.txt", std::process::id()));
    qtcat(&["seq", seq, &count.to_string(), "--format", "bfile", "--out", out.to_str().expect("utf-8 path")])?;
    let got = std::fs::read_to_string(&out).map_err(|e| e.to_string())?;
    let _ = std::fs::remove_file(&out);
    if got != want {
        return Err(format!("b-file for {seq} differs from {reference}:\n{got}"));
    }
    Ok(())
}

fn section6() -> Check {
    for name in [SequenceName::R, SequenceName::T, SequenceName::U] {
        SequenceOracle::new(name, 7).check().map_err(|f| format!("{f:?}"))?;
    }
    bfile("r", "b027307.txt")?;
    bfile("t", "b032349.txt")?;
    reports([check_section6(13, 12), check_mansour_alt(13)])
}

fn timed(limit: Duration, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    if took > limit {
        return Err(format!("took {:.1} s against a {} s limit", took.as_secs_f64(), limit.as_secs()));
    }
    Ok(())
}

/// Default range under two minutes, then the deep range under thirty.
fn conjecture() -> Check {
    timed(secs(120), || {
        reports([run_suite(Suite::Conjecture, &SuiteConfig::default())])?;
        let out = qtcat(&["conjecture"])?;
        for f in ["F_1 = 1", "F_2 = 7", "F_3 = 58", "F_4 = 545"] {
            if !out.contains(f) {
                return Err(format!("`{f}` missing from the conjecture table"));
            }
        }
        Ok(())
    })?;
    timed(secs(1800), || {
        reports([run_suite(Suite::Conjecture, &SuiteConfig { deep: true, ..SuiteConfig::default() })])?;
        let out = qtcat(&["conjecture", "--deep"])?;
        if !out.contains("F_5 = 5570") {
            return Err("`F_5 = 5570` missing from the deep conjecture table".into());
        }
        Ok(())
    })
}

struct Criterion {
    id: &'static str,
    what: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: "1", what: "golden polynomials", limit: secs(5), run: golden },
        Criterion { id: "2", what: "ten interpretations, n <= 8", limit: secs(60), run: || reports([check_ten_interpretations(8)]) },
        Criterion {
            id: "3",
            what: "gamma expansions, n <= 8",
            limit: secs(120),
            run: || reports([check_gamma_theorems(8), check_wex_variant(8)]),
        },
        Criterion {
            id: "4",
            what: "(-1)-evaluations, n <= 10",
            limit: secs(300),
            run: || reports([check_minus_one_exc(10), check_minus_one_des(10)]),
        },
        Criterion { id: "5", what: "equidistributions, n <= 7", limit: secs(60), run: || reports([check_equidistributions(7)]) },
        Criterion { id: "6", what: "MFS actions, n <= 7", limit: secs(60), run: || reports([check_mfs(7)]) },
        Criterion { id: "7", what: "ballot classes and bijections", limit: secs(30), run: || reports([check_ballot(12)]) },
        Criterion { id: "8", what: "separable and (1342,2431) alternating", limit: secs(300), run: section6 },
        Criterion { id: "9", what: "conjecture explorer, plain and deep", limit: secs(1920), run: conjecture },
        Criterion {
            id: "10",
            what: "randomized properties, 1000 trials",
            limit: secs(60),
            run: || reports([check_properties(1000, 0x5eed_cafe)]),
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let took = start.elapsed();
        let verdict = match result {
            Ok(()) if took <= c.limit => Ok(()),
            Ok(()) => Err(format!("took {:.1} s, over the limit", took.as_secs_f64())),
            Err(e) => Err(e),
        };
        let time = format!("{:.1} s / {} s", took.as_secs_f64(), c.limit.as_secs());
        match verdict {
            Ok(()) => println!("PASS {:<2} {} ({time})", c.id, c.what),
            Err(e) => {
                failed += 1;
                println!("FAIL {:<2} {} ({time}): {e}", c.id, c.what);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
