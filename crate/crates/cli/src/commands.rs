use std::fmt::Write as _;
use std::io::Read;

use anyhow::{anyhow, Context};
use qtcat::algebra::{gamma_expand_in, GammaBasis, GammaResult};
use qtcat::cfrac::{cf_series, named_family, named_spec};
use qtcat::mfs::{orbit, representative};
use qtcat::perm::{distribution, stat, StatKey};
use qtcat::verify::{conjecture_rows, ballot_rows, SequenceName, SequenceOracle};
use qtcat::{run_suite, MultiPoly, Report, Suite, SuiteConfig, Var, Weight};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::args::{BasisArg, Cli, Command, Format, VerifyArgs};

/// What a command produced: the text to write and the exit code.
pub struct Output {
    pub text: String,
    pub code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(e) | CliError::Runtime(e) => write!(f, "{e:#}"),
        }
    }
}

fn usage(msg: impl std::fmt::Display) -> CliError {
    CliError::Usage(anyhow!("{msg}"))
}

fn runtime(e: anyhow::Error) -> CliError {
    CliError::Runtime(e)
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn no_bfile(format: Format, cmd: &str) -> Result<(), CliError> {
    if format == Format::Bfile {
        return Err(usage(format!("`--format bfile` applies to `seq`, not `{cmd}`")));
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Poly { family, n, to } => {
            no_bfile(f, "poly")?;
            let hi = to.unwrap_or(*n);
            if hi < *n {
                return Err(usage(format!("--to {hi} is below n = {n}")));
            }
            let rows: Vec<(usize, MultiPoly)> = (*n..=hi).map(|k| (k, named_family(*family, k))).collect();
            Ok(Output::ok(match f {
                Format::Json => json_text(&Value::Array(
                    rows.iter().map(|(k, p)| json!({ "family": family.name(), "n": k, "poly": p.to_string() })).collect(),
                )),
                Format::Tsv => rows.iter().map(|(k, p)| format!("{k}\t{p}\n")).collect(),
                _ => rows.iter().map(|(_, p)| format!("{p}\n")).collect(),
            }))
        }
        Command::Dist { class, weights } => {
            no_bfile(f, "dist")?;
            let w = Weight::parse_list(weights).map_err(usage)?;
            let p = distribution(class, &w);
            Ok(Output::ok(match f {
                Format::Json => json_text(&json!({ "class": class.to_string(), "weights": weights, "poly": p.to_string() })),
                Format::Tsv => format!("{class}\t{weights}\t{p}\n"),
                _ => format!("{p}\n"),
            }))
        }
        Command::Cf { name, order } => {
            no_bfile(f, "cf")?;
            let spec = named_spec(name).ok_or_else(|| {
                usage(format!("unknown fraction `{name}` (expected catalan, qt-catalan, quint, ceks or u-series)"))
            })?;
            let s = cf_series(&spec, *order);
            Ok(Output::ok(match f {
                Format::Json => json_text(&json!({
                    "name": name,
                    "order": order,
                    "coefficients": s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })),
                Format::Tsv => s.coeffs().iter().enumerate().map(|(k, c)| format!("{k}\t{c}\n")).collect(),
                _ => s.to_string(),
            }))
        }
        Command::Gamma { poly, span, var, basis } => {
            no_bfile(f, "gamma")?;
            gamma(f, poly, *span, *var, *basis)
        }
        Command::Orbit { permutation, kind, representative: only_rep } => {
            no_bfile(f, "orbit")?;
            let rep = representative(permutation, *kind).map_err(|e| runtime(e.into()))?;
            let orb = orbit(permutation, *kind);
            if *only_rep {
                return Ok(Output::ok(match f {
                    Format::Json => json_text(&json!({ "permutation": permutation.to_string(), "representative": rep.to_string() })),
                    _ => format!("{rep}\n"),
                }));
            }
            let des = |p: &qtcat::Permutation| stat(p, &StatKey::Des);
            Ok(Output::ok(match f {
                Format::Json => json_text(&json!({
                    "permutation": permutation.to_string(),
                    "kind": kind.to_string(),
                    "representative": rep.to_string(),
                    "orbit": orb.iter().map(|p| json!({ "permutation": p.to_string(), "des": des(p) })).collect::<Vec<_>>(),
                })),
                Format::Tsv => orb.iter().map(|p| format!("{p}\t{}\n", des(p))).collect(),
                _ => {
                    let mut s = String::new();
                    for p in &orb {
                        let mark = if *p == rep { "  representative" } else { "" };
                        writeln!(s, "{p}  des={}{mark}", des(p)).expect("string");
                    }
                    s
                }
            }))
        }
        Command::Seq { name, count, offset } => seq(f, name, *count, *offset),
        Command::Verify(args) => {
            no_bfile(f, "verify")?;
            verify(f, args)
        }
        Command::Conjecture { n_max, deep } => {
            no_bfile(f, "conjecture")?;
            conjecture(f, *n_max, *deep)
        }
    }
}

fn read_poly(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin").map_err(runtime)?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}")).map_err(runtime)
    } else {
        Ok(arg.to_string())
    }
}

fn gamma(f: Format, arg: &str, span: Option<u32>, var: Var, basis: BasisArg) -> Result<Output, CliError> {
    let src = read_poly(arg)?;
    let p = MultiPoly::parse(src.trim()).map_err(usage)?;
    let span = span.unwrap_or_else(|| p.degree_range(var).map_or(0, |(_, hi)| hi.max(0) as u32));
    let b = match basis {
        BasisArg::OnePlusT => GammaBasis::one_plus_t(span),
        BasisArg::OnePlusTOverQ => GammaBasis::one_plus_t_over_q(span),
    };
    let result = gamma_expand_in(&p, var, b).map_err(|e| runtime(e.into()))?;
    let (ok, coeffs, rem) = match &result {
        GammaResult::Success(g) => (true, g.clone(), None),
        GammaResult::Failure { partial, remainder } => (false, partial.clone(), Some(remainder.to_string())),
    };
    let text = match f {
        Format::Json => json_text(&json!({
            "poly": p.to_string(),
            "var": var.to_string(),
            "span": span,
            "success": ok,
            "gamma": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            "remainder": rem,
        })),
        Format::Tsv => coeffs.iter().enumerate().map(|(k, c)| format!("{k}\t{c}\n")).collect(),
        _ => {
            let mut s: String = coeffs.iter().enumerate().map(|(k, c)| format!("gamma_{k}: {c}\n")).collect();
            if let Some(r) = &rem {
                writeln!(s, "no expansion with span {span}; remainder {r}").expect("string");
            }
            s
        }
    };
    Ok(Output { text, code: if ok { 0 } else { 1 } })
}

fn seq(f: Format, name: &str, count: usize, offset: Option<usize>) -> Result<Output, CliError> {
    let name: SequenceName = name.parse().map_err(usage)?;
    if name == SequenceName::Ballot {
        let rows = ballot_rows(count);
        let flat: Vec<String> = rows.iter().flatten().map(|v| v.to_string()).collect();
        let start = offset.unwrap_or(0);
        return Ok(Output::ok(match f {
            Format::Json => json_text(&json!({ "name": "ballot", "rows": rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>() })),
            Format::Tsv => {
                let mut s = String::new();
                for (n, row) in rows.iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        writeln!(s, "{n}\t{k}\t{v}").expect("string");
                    }
                }
                s
            }
            Format::Bfile => flat.iter().enumerate().map(|(i, v)| format!("{} {v}\n", i + start)).collect(),
            Format::Text => rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ") + "\n")
                .collect(),
        }));
    }
    let values = SequenceOracle::new(name, count).values();
    let start = offset.unwrap_or(name.offset());
    Ok(Output::ok(match f {
        Format::Json => json_text(&json!({
            "name": name.name(),
            "offset": start,
            "values": values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
        })),
        Format::Tsv => values.iter().enumerate().map(|(i, v)| format!("{}\t{v}\n", i + start)).collect(),
        Format::Bfile => values.iter().enumerate().map(|(i, v)| format!("{} {v}\n", i + start)).collect(),
        Format::Text => values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ") + "\n",
    }))
}

fn verify(f: Format, args: &VerifyArgs) -> Result<Output, CliError> {
    let suites: Vec<Suite> = if args.suite.eq_ignore_ascii_case("all") {
        Suite::ALL.to_vec()
    } else {
        args.suite.split(',').map(|s| s.parse::<Suite>().map_err(usage)).collect::<Result<_, _>>()?
    };
    let cfg = SuiteConfig { n_max: args.n_max, deep: args.deep, trials: args.trials, seed: args.seed };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = args.workers {
        if w == 0 {
            return Err(usage("--workers must be at least 1"));
        }
        pool = pool.num_threads(w);
    }
    let pool = pool.build().context("starting worker threads").map_err(runtime)?;
    let reports: Vec<Report> = pool.install(|| suites.par_iter().map(|s| run_suite(*s, &cfg)).collect());
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let text = match f {
        Format::Json => json_text(&serde_json::to_value(&reports).expect("serializable")),
        Format::Tsv => reports
            .iter()
            .map(|r| format!("{}\t{}\t{}\n", r.suite, if r.passed() { "pass" } else { "fail" }, r.params))
            .collect(),
        _ => {
            let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
            writeln!(s, "{} passed, {failed} failed", reports.len() - failed).expect("string");
            s
        }
    };
    Ok(Output { text, code: if failed == 0 { 0 } else { 3 } })
}

fn conjecture(f: Format, n_max: Option<usize>, deep: bool) -> Result<Output, CliError> {
    let n = n_max.unwrap_or(Suite::Conjecture.default_n_max(deep));
    let rows = conjecture_rows(n);
    let report = run_suite(Suite::Conjecture, &SuiteConfig { n_max: Some(n), deep, ..SuiteConfig::default() });
    let text = match f {
        Format::Json => json_text(&json!({ "rows": rows, "report": report })),
        Format::Tsv => {
            let mut s = String::from("n\tG\tG(1)\tgamma\tgamma_nonnegative\tF\n");
            for r in &rows {
                writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    r.n,
                    r.g,
                    r.g_at_one,
                    r.gamma.join(","),
                    r.gamma_nonnegative,
                    r.f.as_deref().unwrap_or("")
                )
                .expect("string");
            }
            s
        }
        _ => {
            let mut s = String::new();
            for r in &rows {
                write!(s, "G_{}(t) = {}  G_{}(1) = {}  gamma = [{}]", r.n, r.g, r.n, r.g_at_one, r.gamma.join(", "))
                    .expect("string");
                if let Some(v) = &r.f {
                    write!(s, "  F_{} = {v}", r.n / 2).expect("string");
                }
                s.push('\n');
            }
            writeln!(s, "{report}").expect("string");
            s
        }
    };
    Ok(Output { text, code: if report.passed() { 0 } else { 3 } })
}
