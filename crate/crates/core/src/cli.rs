//! The `schurweyl verify` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for bad
//! configuration, guard breaches and violated preconditions.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};

use crate::brauer::{double_factorial_odd, enumerate, relations_report, ENUMERATE_MAX};
use crate::cellular::{cell_labels, enyang_basis, expansion_matrix, ENYANG_MAX};
use crate::crystal::{
    highest_weight_word, inclusion_check, j_zero, raise_with_order, CrystalWord, DEFAULT_MAX_WORDS, J0_ASSUMPTION,
};
use crate::exactla::{rank, Field, FieldSpec, Rationals, SpanBasis};
use crate::hyperalgebra::{
    alpha, bimodule_check, brauer_commutant, duality_report, hyperalgebra_image, phi_kernel, sp_commutant,
    DEFAULT_MAX_DIM,
};
use crate::report::{render, Check, Format, SuiteReport};
use crate::schur::schur_report;
use crate::tensor::{phi, restriction_check};
use crate::{with_field, Error, Result};

#[derive(Debug, Parser)]
#[command(name = "schurweyl", version, about = "Exact checks of symplectic Schur-Weyl duality")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Brauer,
    Schur,
    Duality,
    Crystal,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Brauer => "brauer",
            Suite::Schur => "schur",
            Suite::Duality => "duality",
            Suite::Crystal => "crystal",
            Suite::All => "all",
        }
    }
}

/// Integer lists accept `1,2,5` and inclusive ranges `1..3`.
#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Half the dimension of V
    #[arg(long)]
    pub m: Option<String>,
    /// Number of tensor factors
    #[arg(long)]
    pub n: Option<String>,
    /// Larger rank for inclusion and restriction checks
    #[arg(long)]
    pub m0: Option<String>,
    /// Loop parameters for the Brauer suite
    #[arg(long, allow_hyphen_values = true)]
    pub x: Option<String>,
    /// `q` or `fp:P`; repeatable
    #[arg(long = "field")]
    pub fields: Vec<String>,
    /// json, csv or md
    #[arg(long)]
    pub format: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Cap on (2m)^(2n) for commutant solves
    #[arg(long)]
    pub max_dim: Option<usize>,
    /// Cap on (2m)^N words scanned by crystal checks
    #[arg(long)]
    pub max_words: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// File of `key = value` lines using the flag names; flags win
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Leave wall_time_ms empty so reports are byte-stable
    #[arg(long)]
    pub no_timing: bool,
}

/// Settings after merging the config file with the flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub suite: Suite,
    pub m: Option<Vec<usize>>,
    pub n: Option<Vec<usize>>,
    pub m0: Option<Vec<usize>>,
    pub x: Option<Vec<i64>>,
    pub fields: Vec<FieldSpec>,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub max_dim: usize,
    pub max_words: usize,
    pub seed: u64,
    pub timing: bool,
}

fn parse_list<T: std::str::FromStr + Copy + Into<i128> + TryFrom<i128>>(s: &str) -> Result<Vec<T>> {
    let bad = || Error::Parse(format!("cannot read integer list {s:?}"));
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let a: T = a.trim().parse().map_err(|_| bad())?;
            let b: T = b.trim().parse().map_err(|_| bad())?;
            for v in a.into()..=b.into() {
                out.push(T::try_from(v).map_err(|_| bad())?);
            }
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    if out.is_empty() {
        return Err(bad());
    }
    Ok(out)
}

fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>> {
    const KEYS: [&str; 11] = ["m", "n", "m0", "x", "field", "format", "out", "max-dim", "max-words", "seed", "no-timing"];
    let mut map = BTreeMap::new();
    for (k, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("config line {}: expected key = value", k + 1)))?;
        let key = key.trim().replace('_', "-");
        if !KEYS.contains(&key.as_str()) {
            return Err(Error::Parse(format!("config line {}: unknown key {key:?}", k + 1)));
        }
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

impl RunConfig {
    pub fn from_args(args: &VerifyArgs) -> Result<Self> {
        let file = match &args.config {
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Error::Parse(format!("cannot read config {}: {e}", p.display())))?;
                parse_config_file(&text)?
            }
            None => BTreeMap::new(),
        };
        let pick = |flag: &Option<String>, key: &str| flag.clone().or_else(|| file.get(key).cloned());
        let list_u = |flag: &Option<String>, key: &str| pick(flag, key).map(|s| parse_list::<u32>(&s)).transpose();
        let to_usize = |v: Option<Vec<u32>>| v.map(|v| v.into_iter().map(|x| x as usize).collect::<Vec<_>>());
        let num = |flag: Option<usize>, key: &str, default: usize| -> Result<usize> {
            match flag {
                Some(v) => Ok(v),
                None => file.get(key).map_or(Ok(default), |s| {
                    s.parse().map_err(|_| Error::Parse(format!("{key} must be a positive integer")))
                }),
            }
        };
        let field_strings: Vec<String> = if !args.fields.is_empty() {
            args.fields.clone()
        } else if let Some(s) = file.get("field") {
            s.split(',').map(|t| t.trim().to_string()).collect()
        } else {
            vec!["q".into(), "fp:2".into()]
        };
        let fields = field_strings.iter().map(|s| s.parse()).collect::<Result<Vec<FieldSpec>>>()?;
        let format = pick(&args.format, "format").map_or(Ok(Format::Md), |s| s.parse())?;
        let max_dim = num(args.max_dim, "max-dim", DEFAULT_MAX_DIM)?;
        let max_words = num(args.max_words, "max-words", DEFAULT_MAX_WORDS)?;
        if max_dim == 0 || max_words == 0 {
            return Err(Error::Parse("guards must be positive".into()));
        }
        let seed = match args.seed {
            Some(s) => s,
            None => file.get("seed").map_or(Ok(0), |s| s.parse().map_err(|_| Error::Parse("seed must be an integer".into())))?,
        };
        let no_timing = args.no_timing
            || file
                .get("no-timing")
                .is_some_and(|v| matches!(v.to_ascii_lowercase().as_str(), "true" | "1" | "yes"));
        let ms = to_usize(list_u(&args.m, "m")?);
        if ms.as_ref().is_some_and(|v| v.contains(&0)) {
            return Err(Error::Parse("m must be positive".into()));
        }
        Ok(RunConfig {
            suite: args.suite,
            m: ms,
            n: to_usize(list_u(&args.n, "n")?),
            m0: to_usize(list_u(&args.m0, "m0")?),
            x: pick(&args.x, "x").map(|s| parse_list::<i64>(&s)).transpose()?,
            fields,
            format,
            out: args.out.clone().or_else(|| file.get("out").map(PathBuf::from)),
            max_dim,
            max_words,
            seed,
            timing: !no_timing,
        })
    }
}

fn fields_value(fields: &[FieldSpec]) -> Value {
    Value::from(fields.iter().map(|f| f.to_string()).collect::<Vec<_>>())
}

fn pairs(ms: &[usize], ns: &[usize]) -> Vec<(usize, usize)> {
    ms.iter().flat_map(|&m| ns.iter().map(move |&n| (m, n))).collect()
}

fn span_equal<F: Field>(a: &SpanBasis<F>, b: &SpanBasis<F>) -> Result<bool> {
    Ok(a.len() == b.len() && a.contains_span(b)? && b.contains_span(a)?)
}

fn brauer_suite(cfg: &RunConfig) -> Result<SuiteReport> {
    let ns = cfg.n.clone().unwrap_or_else(|| vec![2, 3, 4]);
    let xs = cfg.x.clone().unwrap_or_else(|| vec![-2, -4, -6, 3]);
    let mut config = Map::new();
    config.insert("n".into(), Value::from(ns.clone()));
    config.insert("x".into(), Value::from(xs.clone()));
    config.insert("fields".into(), fields_value(&cfg.fields));
    let mut checks = Vec::new();
    for &n in &ns {
        if n > ENUMERATE_MAX {
            return Err(Error::Guard(format!("n = {n} exceeds the diagram limit {ENUMERATE_MAX}")));
        }
        let count = enumerate(n)?.len();
        checks.push(Check::new(format!("diagram count n={n}"), "diagram-count", double_factorial_odd(n), count));
        let cells: u128 = cell_labels(n).iter().map(|(_, _, d)| d * d).sum();
        checks.push(Check::new(format!("sum of squared cell dims n={n}"), "cellular", double_factorial_odd(n), cells));
    }
    for &spec in &cfg.fields {
        with_field!(spec, field => {
            for &n in &ns {
                for &x in &xs {
                    let xe = field.from_i64(x);
                    #[allow(clippy::clone_on_copy)]
                    for r in relations_report(field, n, xe.clone())? {
                        checks.push(Check::new(
                            format!("{} n={n} x={x} {spec}", r.family),
                            "brauer-relations",
                            format!("{} of {} hold", r.instances, r.instances),
                            format!("{} of {} hold", r.instances - r.failures, r.instances),
                        ));
                    }
                    if n <= ENYANG_MAX.min(4) {
                        let els: Vec<_> = enyang_basis(field, n, xe)?.into_iter().map(|e| e.element).collect();
                        let r = rank(&expansion_matrix(field, &els, &enumerate(n)?)?);
                        checks.push(Check::new(format!("cellular basis rank n={n} x={x} {spec}"), "cellular-basis", double_factorial_odd(n), r));
                    }
                }
            }
        });
    }
    Ok(SuiteReport { suite: "brauer".into(), config, checks, wall_time_ms: None })
}

fn duality_suite(cfg: &RunConfig) -> Result<SuiteReport> {
    let ms = cfg.m.clone().unwrap_or_else(|| vec![1, 2]);
    let ns = cfg.n.clone().unwrap_or_else(|| vec![2, 3]);
    let mut config = Map::new();
    config.insert("m".into(), Value::from(ms.clone()));
    config.insert("n".into(), Value::from(ns.clone()));
    config.insert("fields".into(), fields_value(&cfg.fields));
    config.insert("max_dim".into(), Value::from(cfg.max_dim));
    let mut checks = Vec::new();
    let mut dims: BTreeMap<(usize, usize), Vec<(FieldSpec, usize, usize)>> = BTreeMap::new();
    for (m, n) in pairs(&ms, &ns) {
        for &spec in &cfg.fields {
            with_field!(spec, field => {
                let tag = format!("m={m} n={n} {spec}");
                let rep = duality_report(field, m, n, cfg.max_dim)?;
                checks.push(Check::new(format!("rank phi = dim commutant {tag}"), "double-centralizer", rep.dim_commutant, rep.rank_phi));
                checks.push(Check::new(format!("phi in commutant {tag}"), "double-centralizer", true, rep.containments.phi_in_comm));
                checks.push(Check::new(format!("commutant in phi {tag}"), "double-centralizer", true, rep.containments.comm_in_phi));
                if m >= n {
                    checks.push(Check::new(format!("faithful {tag}"), "faithfulness", double_factorial_odd(n), rep.rank_phi));
                }
                if (m, n) == (2, 3) {
                    let a = alpha(field, field.from_i64(-4))?;
                    checks.push(Check::new(format!("phi(alpha) = 0 {tag}"), "explicit-kernel", true, phi(&a, 2)?.is_zero()));
                    checks.push(Check::new(format!("kernel dim {tag}"), "explicit-kernel", 1, rep.kernel_dim));
                    let ker = phi_kernel(field, m, n)?;
                    let proportional = ker.len() == 1 && {
                        let (d, c) = a.terms().iter().next().expect("alpha is nonzero");
                        let k = ker[0].coeff(d);
                        !field.is_zero(&k) && ker[0].scale(&field.mul(c, &field.inv(&k).expect("nonzero"))) == a
                    };
                    checks.push(Check::new(format!("kernel = span alpha {tag}"), "explicit-kernel", true, proportional));
                }
                let bm = bimodule_check(field, m, n)?;
                checks.push(Check::new(format!("nonzero commutators of the two actions {tag}"), "bimodule", 0, bm.nonzero));
                let hyper = hyperalgebra_image(field, m, n, cfg.max_dim)?;
                let bc = brauer_commutant(field, m, n, cfg.max_dim)?;
                checks.push(Check::new(format!("divided-power algebra = Brauer commutant {tag}"), "hyperalgebra-image", true, span_equal(&hyper, &bc)?));
                dims.entry((m, n)).or_default().push((spec, rep.rank_phi, rep.dim_commutant));
            });
        }
    }
    for ((m, n), v) in dims {
        let first = (v[0].1, v[0].2);
        for (spec, r, c) in &v[1..] {
            checks.push(Check::new(
                format!("field independence m={m} n={n} {} vs {spec}", v[0].0),
                "field-independence",
                format!("rank {} commutant {}", first.0, first.1),
                format!("rank {r} commutant {c}"),
            ));
        }
    }
    Ok(SuiteReport { suite: "duality".into(), config, checks, wall_time_ms: None })
}

fn schur_suite(cfg: &RunConfig) -> Result<SuiteReport> {
    let ms = cfg.m.clone().unwrap_or_else(|| vec![1, 2]);
    let ns = cfg.n.clone().unwrap_or_else(|| vec![1, 2, 3]);
    let mut config = Map::new();
    config.insert("m".into(), Value::from(ms.clone()));
    config.insert("n".into(), Value::from(ns.clone()));
    config.insert("fields".into(), fields_value(&cfg.fields));
    config.insert("max_dim".into(), Value::from(cfg.max_dim));
    let mut checks = Vec::new();
    for (m, n) in pairs(&ms, &ns) {
        let mut first: Option<(FieldSpec, usize)> = None;
        for &spec in &cfg.fields {
            with_field!(spec, field => {
                let tag = format!("m={m} n={n} {spec}");
                let r = schur_report(field, m, n, cfg.max_dim)?;
                let counts: Vec<String> = r.families.iter().map(|f| format!("{}:{}/{}", f.family, f.distinct, f.instances)).collect();
                checks.push(Check::judged(
                    format!("condition rows {tag} (family:distinct/instances {})", counts.join(" ")),
                    "schur-conditions",
                    "rows assembled",
                    r.condition_rows,
                    true,
                ));
                if n == 1 {
                    checks.push(Check::new(format!("no conditions for one factor {tag}"), "schur-conditions", (2 * m) * (2 * m), r.dim_schur));
                }
                checks.push(Check::new(format!("dim S^s = dim Brauer commutant {tag}"), "schur-identification", r.dim_brauer_commutant, r.dim_schur));
                checks.push(Check::new(format!("evaluation injective {tag}"), "schur-identification", r.dim_schur, r.rank_evaluation));
                checks.push(Check::new(format!("image in commutant {tag}"), "schur-identification", true, r.image_in_commutant));
                checks.push(Check::new(format!("commutant in image {tag}"), "schur-identification", true, r.commutant_in_image));
                match first {
                    None => first = Some((spec, r.dim_schur)),
                    Some((s0, d0)) => checks.push(Check::new(format!("field independence m={m} n={n} {s0} vs {spec}"), "field-independence", d0, r.dim_schur)),
                }
            });
        }
    }
    Ok(SuiteReport { suite: "schur".into(), config, checks, wall_time_ms: None })
}

fn crystal_suite(cfg: &RunConfig) -> Result<SuiteReport> {
    let ms = cfg.m.clone().unwrap_or_else(|| vec![1, 2]);
    let ns = cfg.n.clone().unwrap_or_else(|| vec![1, 2]);
    let mut config = Map::new();
    config.insert("m".into(), Value::from(ms.clone()));
    config.insert("n".into(), Value::from(ns.clone()));
    if let Some(m0) = &cfg.m0 {
        config.insert("m0".into(), Value::from(m0.clone()));
    } else {
        config.insert("m0".into(), Value::from("m+2"));
    }
    config.insert("fields".into(), fields_value(&cfg.fields));
    config.insert("max_dim".into(), Value::from(cfg.max_dim));
    config.insert("max_words".into(), Value::from(cfg.max_words));
    config.insert("seed".into(), Value::from(cfg.seed));
    config.insert("note".into(), Value::from(J0_ASSUMPTION));
    let mut checks = Vec::new();
    for (m, n) in pairs(&ms, &ns) {
        let dim = sp_commutant(Rationals, m, n, cfg.max_dim)?.len();
        let j0 = j_zero(m, 2 * n, cfg.max_words)?.len();
        checks.push(Check::new(format!("|J0(m={m}, N={})| = dim End_Sp (q)", 2 * n), "crystal-dimension", dim, j0));
        let m0s = cfg.m0.clone().unwrap_or_else(|| vec![m + 2]);
        for m0 in m0s {
            let r = inclusion_check(m, m0, 2 * n, cfg.max_words)?;
            checks.push(Check::judged(
                format!("J0 inclusion m={m} m0={m0} N={} ({} in {})", 2 * n, r.size_small, r.size_big),
                "crystal-inclusion",
                "0 missing",
                format!("{} missing", r.missing.len()),
                r.holds(),
            ));
            for &spec in &cfg.fields {
                with_field!(spec, field => {
                    let (count, bad) = restriction_check(field, m, m0, n)?;
                    checks.push(Check::new(format!("restriction to V^n m={m} m0={m0} n={n} {spec} ({count} diagrams)"), "restriction", 0, bad));
                });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut disagreements = 0;
    let trials = 50;
    for _ in 0..trials {
        let m = rng.gen_range(1..=3);
        let len = rng.gen_range(1..=6);
        let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=2 * m)).collect();
        let w = CrystalWord::new(m, letters)?;
        let reference = highest_weight_word(&w);
        let shuffled = raise_with_order(&w, |_| {
            let mut o: Vec<usize> = (1..=m).collect();
            o.shuffle(&mut rng);
            o
        });
        if shuffled != reference {
            disagreements += 1;
        }
    }
    checks.push(Check::new(format!("highest weight independent of raising order ({trials} random words)"), "crystal-confluence", 0, disagreements));
    Ok(SuiteReport { suite: "crystal".into(), config, checks, wall_time_ms: None })
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<Vec<SuiteReport>> {
    let order: Vec<Suite> = match suite {
        Suite::All => vec![Suite::Brauer, Suite::Schur, Suite::Duality, Suite::Crystal],
        s => vec![s],
    };
    let mut out = Vec::new();
    for s in order {
        let start = Instant::now();
        let mut rep = match s {
            Suite::Brauer => brauer_suite(cfg)?,
            Suite::Schur => schur_suite(cfg)?,
            Suite::Duality => duality_suite(cfg)?,
            Suite::Crystal => crystal_suite(cfg)?,
            Suite::All => unreachable!("expanded above"),
        };
        if cfg.timing {
            rep.wall_time_ms = Some(start.elapsed().as_millis() as u64);
        }
        out.push(rep);
    }
    Ok(out)
}

/// Parses `args` (including the program name), runs the command and
/// returns the process exit code.
pub fn run(args: impl IntoIterator<Item = impl Into<OsString> + Clone>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    let Command::Verify(args) = cli.command;
    let result = RunConfig::from_args(&args).and_then(|cfg| {
        let reports = run_suite(cfg.suite, &cfg)?;
        Ok((cfg, reports))
    });
    let (cfg, reports) = match result {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "schurweyl {}: {e}", args.suite.name());
            return 2;
        }
    };
    let text = render(&reports, cfg.format);
    let written = match &cfg.out {
        Some(p) => std::fs::write(p, &text).map_err(|e| e.to_string()),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "schurweyl: cannot write report: {e}");
        return 2;
    }
    for r in &reports {
        for c in r.checks.iter().filter(|c| !c.pass) {
            let _ = writeln!(stderr, "FAIL [{}] {}: expected {}, got {}", c.theorem, c.name, c.expected, c.actual);
        }
    }
    if reports.iter().all(SuiteReport::pass) {
        0
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(parse_list::<u32>("1,3..5").unwrap(), vec![1, 3, 4, 5]);
        assert_eq!(parse_list::<i64>("-4,-2").unwrap(), vec![-4, -2]);
        assert!(parse_list::<u32>("a").is_err());
        assert!(parse_list::<u32>("").is_err());
    }

    #[test]
    fn config_file() {
        let map = parse_config_file("# comment\nm = 1,2\nmax_dim=100\n").unwrap();
        assert_eq!(map["m"], "1,2");
        assert_eq!(map["max-dim"], "100");
        assert!(parse_config_file("bogus = 1").is_err());
        assert!(parse_config_file("m 1").is_err());
    }
}
