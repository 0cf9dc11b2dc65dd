//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use weylroots_core::chartables::{bn_table, properness_sweep, sn_table};
use weylroots_core::classfn::ClassFunction;
use weylroots_core::combinatorics::{enumerate_bipartitions, Bipartition};
use weylroots_core::hlc::{
    divides_k, divides_k_minus, psi_bruteforce_character, psi_k_sum, psi_series, spsi_k_sum,
    HlcResult, PrimitiveRoot, PsiRows,
};
use weylroots_core::rootcount::{
    brute_force_root_enumerator, brute_force_root_enumerator_s,
    brute_force_subgroup_root_enumerator, combine_for_subgroup, root_enumerator, root_enumerator_s,
    subgroup_root_enumerator,
};
use weylroots_core::series::root_enumerator_from_series;
use weylroots_core::{Bounds, Error, GroupTag, Twist};

use crate::format::{self, Format};
use crate::suites::{all_suites, run_suite, Suite};

#[derive(Debug, Parser)]
#[command(
    name = "weylroots",
    version,
    about = "Root enumerators and higher Lie characters of hyperoctahedral groups"
)]
pub struct Cli {
    /// Output format (default: csv for `chartable`, json otherwise).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Raise or lower an enumeration limit, e.g. `brute-force=8`.
    #[arg(long = "bound-override", global = true, value_name = "NAME=VALUE", value_parser = parse_override)]
    pub bound_override: Vec<(String, usize)>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Class,
    Brute,
    Series,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HlcMethod {
    Series,
    Brute,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Aggregate {
    Plain,
    Signed,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Conjugacy classes with sizes, centralizer orders and linear characters.
    Classes {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "B", value_parser = parse_group)]
        group: GroupTag,
    },
    /// The k-th root enumerator as a class function.
    Roots {
        #[arg(long, value_parser = parse_group)]
        group: GroupTag,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, default_value = "1", value_parser = parse_twist)]
        twist: Twist,
        #[arg(long, value_enum, default_value = "class")]
        method: Method,
    },
    /// Higher Lie characters psi^lambda, or their sums psi_k and psi~_k.
    Hlc {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_bipartition, conflicts_with = "k")]
        lambda: Option<Bipartition>,
        #[arg(long, allow_negative_numbers = true, requires = "aggregate")]
        k: Option<i64>,
        #[arg(long, value_enum, requires = "k")]
        aggregate: Option<Aggregate>,
        #[arg(long, value_enum, default_value = "series")]
        method: HlcMethod,
    },
    /// Irreducible character table of S_n or B_n.
    Chartable {
        #[arg(long, value_parser = parse_group)]
        group: GroupTag,
        #[arg(long)]
        n: usize,
    },
    /// Decomposes root enumerators into irreducibles.
    Properness {
        #[arg(long, value_parser = parse_group)]
        group: GroupTag,
        #[arg(long)]
        n: usize,
        /// `a..b` (inclusive) or a comma-separated list.
        #[arg(long = "k-set", default_value = "1..12", allow_hyphen_values = true, value_parser = parse_k_set)]
        k_set: KSet,
    },
    /// Runs a verification suite; every suite when none is named.
    Verify {
        #[arg(long, value_enum)]
        suite: Option<Suite>,
        #[arg(long = "n-max")]
        n_max: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KSet(pub Vec<i64>);

fn parse_group(s: &str) -> Result<GroupTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_twist(s: &str) -> Result<Twist, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_bipartition(s: &str) -> Result<Bipartition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_override(s: &str) -> Result<(String, usize), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    if !Bounds::NAMES.contains(&name) {
        return Err(format!(
            "unknown bound `{name}`; known: {}",
            Bounds::NAMES.join(", ")
        ));
    }
    let value = value
        .parse()
        .map_err(|e| format!("bad value `{value}`: {e}"))?;
    Ok((name.to_string(), value))
}

fn parse_k_set(s: &str) -> Result<KSet, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|e| format!("bad k `{t}`: {e}"))
    };
    if let Some((a, b)) = s.split_once("..") {
        let (a, b) = (num(a)?, num(b)?);
        if a > b {
            return Err(format!("empty range {s}"));
        }
        return Ok(KSet((a..=b).collect()));
    }
    s.split(',').map(num).collect::<Result<_, _>>().map(KSet)
}

/// Exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } => EXIT_BOUND,
        Error::InvalidArgument(_)
        | Error::Parse(_)
        | Error::RankMismatch { .. }
        | Error::SplitClass { .. } => EXIT_USAGE,
        Error::NonIntegral { .. } | Error::Precision { .. } | Error::Inconsistent(_) => EXIT_FAILED,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

/// Parses `args` (including the program name), writes the result to `out`
/// and diagnostics to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let mut bounds = Bounds::default();
    for (name, value) in &cli.bound_override {
        bounds.set(name, *value).expect("validated by the parser");
    }
    match execute(&cli, &bounds) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: &Cli, b: &Bounds) -> Result<(String, i32), Error> {
    let fmt = |default| cli.format.unwrap_or(default);
    let ok = |s: String| Ok((s, EXIT_OK));
    match &cli.command {
        Command::Classes { n, group } => ok(format::classes(*group, *n, fmt(Format::Json))?),
        Command::Roots {
            group,
            n,
            k,
            twist,
            method,
        } => {
            let extra = [("k", json!(k)), ("twist", json!(twist.name()))];
            let (n, k, t) = (*n, *k, *twist);
            if *method == Method::Series && k == 0 {
                return Err(usage("the generating-function method needs k != 0"));
            }
            if *group != GroupTag::B && t != Twist::One {
                return Err(usage(format!("twists apply to B only, not {group}")));
            }
            let out = match group {
                GroupTag::S => {
                    let f = match method {
                        Method::Class => root_enumerator_s(n, k, b)?,
                        Method::Brute => brute_force_root_enumerator_s(n, k, b)?,
                        Method::Series => return Err(usage("no generating-function method for S")),
                    };
                    format::class_function(&f, &extra, fmt(Format::Json))?
                }
                GroupTag::B => {
                    let f = match method {
                        Method::Class => root_enumerator(n, k, t, b)?,
                        Method::Brute => brute_force_root_enumerator(n, k, t, b)?,
                        Method::Series => root_enumerator_from_series(n, k, t, b)?,
                    };
                    format::class_function(&f, &extra, fmt(Format::Json))?
                }
                GroupTag::Sub(sub) => {
                    let f = match method {
                        Method::Class => subgroup_root_enumerator(n, k, *sub, b)?,
                        Method::Brute => brute_force_subgroup_root_enumerator(n, k, *sub, b)?,
                        Method::Series => combine_for_subgroup(n, k, *sub, |t| {
                            root_enumerator_from_series(n, k, t, b)
                        })?,
                    };
                    format::class_function(&f, &extra, fmt(Format::Json))?
                }
            };
            ok(out)
        }
        Command::Hlc {
            n,
            lambda,
            k,
            aggregate,
            method,
        } => {
            let n = *n;
            let brute = |l: &Bipartition| psi_bruteforce_character(l, PrimitiveRoot::First, b);
            if let Some(lambda) = lambda {
                if lambda.size() != n {
                    return Err(Error::RankMismatch {
                        left: lambda.size(),
                        right: n,
                    });
                }
                let r = match method {
                    HlcMethod::Series => psi_series(lambda, b)?,
                    HlcMethod::Brute => brute(lambda)?,
                };
                return ok(format::hlc_results(&[r], fmt(Format::Json))?);
            }
            if let (Some(k), Some(agg)) = (k, aggregate) {
                let f = match (method, agg) {
                    (HlcMethod::Series, Aggregate::Plain) => psi_k_sum(n, *k, b)?,
                    (HlcMethod::Series, Aggregate::Signed) => spsi_k_sum(n, *k, b)?,
                    (HlcMethod::Brute, agg) => {
                        let classes = enumerate_bipartitions(n);
                        let mut total = ClassFunction::zero(GroupTag::B, n, &classes);
                        for l in &classes {
                            let take = match agg {
                                Aggregate::Plain => divides_k(l, *k),
                                Aggregate::Signed => divides_k_minus(l, *k),
                            };
                            if take {
                                total = total.add(&brute(l)?.values)?;
                            }
                        }
                        total
                    }
                };
                let name = match agg {
                    Aggregate::Plain => "plain",
                    Aggregate::Signed => "signed",
                };
                let extra = [("k", json!(k)), ("aggregate", json!(name))];
                return ok(format::class_function(&f, &extra, fmt(Format::Json))?);
            }
            let rows: Vec<HlcResult> = match method {
                HlcMethod::Series => PsiRows::new(n, b)?
                    .rows()
                    .iter()
                    .map(|(l, _)| psi_series(l, b))
                    .collect::<Result<_, _>>()?,
                HlcMethod::Brute => enumerate_bipartitions(n)
                    .iter()
                    .map(brute)
                    .collect::<Result<_, _>>()?,
            };
            ok(format::hlc_results(&rows, fmt(Format::Json))?)
        }
        Command::Chartable { group, n } => {
            let f = fmt(Format::Csv);
            match group {
                GroupTag::S => ok(format::chartable(&sn_table(*n, b)?, f)?),
                GroupTag::B => ok(format::chartable(&bn_table(*n, b)?, f)?),
                GroupTag::Sub(_) => Err(usage("character tables are available for S and B")),
            }
        }
        Command::Properness { group, n, k_set } => {
            let reports = properness_sweep(*group, *n, &k_set.0, b)?;
            ok(format::reports(&reports, fmt(Format::Json))?)
        }
        Command::Verify { suite, n_max } => {
            let suites = match suite {
                Some(s) => vec![*s],
                None => all_suites(),
            };
            let mut outcomes = Vec::with_capacity(suites.len());
            for s in suites {
                outcomes.push(run_suite(s, *n_max, b)?);
            }
            let code = if outcomes.iter().all(|o| o.passed()) {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            Ok((format::suite_outcomes(&outcomes, fmt(Format::Json))?, code))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_kinds_map_to_exit_codes() {
        let bound = Error::BoundExceeded {
            name: "table",
            limit: 1,
            requested: 2,
        };
        assert_eq!(exit_code(&bound), EXIT_BOUND);
        assert_eq!(exit_code(&Error::Parse("x".into())), EXIT_USAGE);
        assert_eq!(
            exit_code(&Error::SplitClass {
                class: "[|2]".into()
            }),
            EXIT_USAGE
        );
        assert_eq!(exit_code(&Error::Inconsistent("x".into())), EXIT_FAILED);
    }

    #[test]
    fn k_sets() {
        assert_eq!(parse_k_set("1..4").unwrap(), KSet(vec![1, 2, 3, 4]));
        assert_eq!(parse_k_set("10,70,-3").unwrap(), KSet(vec![10, 70, -3]));
        assert!(parse_k_set("5..1").is_err());
        assert!(parse_k_set("a").is_err());
    }
}
