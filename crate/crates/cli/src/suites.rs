//! Named verification suites. Each runs its cases in canonical order
//! (`n`, then `k`, then class) and stops at the first failure, which is
//! reported as the witness.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use weylroots_core::chartables::{
    bn_table, decompose, gelfand_check_b, gelfand_check_d, properness_sweep, row_sum, sn_table,
    Verdict,
};
use weylroots_core::classfn::{ClassFunction, ClassLabel};
use weylroots_core::combinatorics::{enumerate_bipartitions, Bipartition};
use weylroots_core::hlc::{
    divides_k, divides_k_minus, dn_odd_check, psi_bruteforce_character, scharf_check,
    PrimitiveRoot, PsiRows,
};
use weylroots_core::rootcount::{
    brute_force_all_twists, class_power, class_size_q, root_enumerator, subgroup_root_enumerator,
};
use weylroots_core::series::{psi_series_character, root_enumerator_from_series};
use weylroots_core::{Bounds, Error, GroupTag, Subgroup, Twist};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    /// Class-level root enumerators equal literal counts.
    #[value(name = "oracle")]
    Oracle,
    /// Generating function for `r_k`.
    #[value(name = "B-roots")]
    BRoots,
    /// Generating function for the `χ`-twisted enumerator.
    #[value(name = "B-signed")]
    BSigned,
    /// Generating functions for the `χ′`- and `χχ′`-twisted enumerators.
    #[value(name = "index2-gf")]
    Index2Gf,
    /// Higher Lie characters: centralizer sums against the series.
    #[value(name = "hlc-gf")]
    HlcGf,
    /// `ψ_k = r_k`.
    #[value(name = "B-identity")]
    BIdentity,
    /// `ψ̃_k = s̃r_k`.
    #[value(name = "B-signed-identity")]
    BSignedIdentity,
    /// `ψ_k + ψ̃_k = 2 r_k^{D_n}` on `D_n`, 0 elsewhere.
    #[value(name = "D-half")]
    DHalf,
    /// `r_k^{D_n} = Σ ψ_{D_n}^C` for `n` or `k` odd.
    #[value(name = "D-odd")]
    DOdd,
    /// `r_k^{S_n} = Σ ψ^λ` over `λ` with parts dividing `k`.
    #[value(name = "A-scharf")]
    AScharf,
    /// Character tables of `S_n` and `B_n`.
    #[value(name = "orthogonality")]
    Orthogonality,
    /// `r₂^{B_n}` is the sum of all irreducibles.
    #[value(name = "fs")]
    Fs,
    #[value(name = "gelfand-B")]
    GelfandB,
    #[value(name = "gelfand-D")]
    GelfandD,
    /// Root enumerators of `A(B_10)` for `k = 10, 70` are not proper.
    #[value(name = "counterexample")]
    Counterexample,
    /// `⊢_k` and `⊢_{k,-}` match the power map.
    #[value(name = "power-map")]
    PowerMap,
    /// Root enumerators of `B_n` and `D_n` are proper.
    #[value(name = "properness")]
    Properness,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Oracle => "oracle",
            Suite::BRoots => "B-roots",
            Suite::BSigned => "B-signed",
            Suite::Index2Gf => "index2-gf",
            Suite::HlcGf => "hlc-gf",
            Suite::BIdentity => "B-identity",
            Suite::BSignedIdentity => "B-signed-identity",
            Suite::DHalf => "D-half",
            Suite::DOdd => "D-odd",
            Suite::AScharf => "A-scharf",
            Suite::Orthogonality => "orthogonality",
            Suite::Fs => "fs",
            Suite::GelfandB => "gelfand-B",
            Suite::GelfandD => "gelfand-D",
            Suite::Counterexample => "counterexample",
            Suite::PowerMap => "power-map",
            Suite::Properness => "properness",
        }
    }

    /// Largest rank checked when `--n-max` is not given.
    pub fn default_n_max(self) -> usize {
        match self {
            Suite::Oracle | Suite::BIdentity | Suite::BSignedIdentity | Suite::AScharf => 6,
            Suite::Fs | Suite::GelfandB | Suite::GelfandD => 6,
            Suite::BRoots | Suite::BSigned | Suite::Index2Gf | Suite::DHalf => 8,
            Suite::PowerMap | Suite::Orthogonality => 8,
            Suite::HlcGf => 5,
            Suite::DOdd | Suite::Properness => 7,
            Suite::Counterexample => 10,
        }
    }
}

/// The first failing case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub n: usize,
    pub k: Option<i64>,
    pub class: Option<String>,
    pub detail: String,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some(k) = self.k {
            write!(f, " k={k}")?;
        }
        if let Some(c) = &self.class {
            write!(f, " class={c}")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOutcome {
    pub suite: Suite,
    pub n_max: usize,
    pub cases: usize,
    pub failure: Option<Witness>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Collects cases; a case either passes, fails with a witness, or errors.
struct Runner {
    cases: usize,
    failure: Option<Witness>,
}

impl Runner {
    fn new() -> Self {
        Runner {
            cases: 0,
            failure: None,
        }
    }

    fn done(&self) -> bool {
        self.failure.is_some()
    }

    /// Runs one case. Bound violations propagate; any other error becomes
    /// the witness.
    fn case(
        &mut self,
        n: usize,
        k: Option<i64>,
        check: impl FnOnce() -> Result<Option<(Option<String>, String)>, Error>,
    ) -> Result<(), Error> {
        if self.done() {
            return Ok(());
        }
        self.cases += 1;
        let outcome = match check() {
            Ok(o) => o,
            Err(e @ Error::BoundExceeded { .. }) => return Err(e),
            Err(e) => Some((None, e.to_string())),
        };
        if let Some((class, detail)) = outcome {
            self.failure = Some(Witness {
                n,
                k,
                class,
                detail,
            });
        }
        Ok(())
    }
}

fn compare<L: ClassLabel>(
    got: &ClassFunction<L>,
    expected: &ClassFunction<L>,
    what: &str,
) -> Option<(Option<String>, String)> {
    got.first_difference(expected).map(|(c, a, b)| {
        (
            Some(c.to_string()),
            format!("{what}: got {a}, expected {b}"),
        )
    })
}

fn flag(ok: bool, detail: &str) -> Option<(Option<String>, String)> {
    (!ok).then(|| (None, detail.to_string()))
}

const ORACLE_KS: [i64; 9] = [0, 1, 2, 3, 4, 5, 6, 8, 12];
const GF_KS: [i64; 6] = [1, 2, 3, 4, 6, 12];

fn gf_suite(r: &mut Runner, twists: &[Twist], n_max: usize, b: &Bounds) -> Result<(), Error> {
    for n in 0..=n_max {
        for k in GF_KS {
            for &t in twists {
                r.case(n, Some(k), || {
                    let series = root_enumerator_from_series(n, k, t, b)?;
                    let class = root_enumerator(n, k, t, b)?;
                    Ok(compare(
                        &series,
                        &class,
                        &format!("series vs class-level, twist {t}"),
                    ))
                })?;
            }
        }
    }
    Ok(())
}

pub fn run_suite(suite: Suite, n_max: Option<usize>, b: &Bounds) -> Result<SuiteOutcome, Error> {
    let n_max = n_max.unwrap_or_else(|| suite.default_n_max());
    let mut r = Runner::new();
    match suite {
        Suite::Oracle => {
            for n in 0..=n_max {
                for k in ORACLE_KS {
                    r.case(n, Some(k), || {
                        let brute = brute_force_all_twists(n, k, b)?;
                        for (t, bf) in Twist::ALL.iter().zip(&brute) {
                            let class = root_enumerator(n, k, *t, b)?;
                            if let Some(w) = compare(
                                &class,
                                bf,
                                &format!("class-level vs brute force, twist {t}"),
                            ) {
                                return Ok(Some(w));
                            }
                        }
                        Ok(None)
                    })?;
                }
            }
        }
        Suite::BRoots => gf_suite(&mut r, &[Twist::One], n_max, b)?,
        Suite::BSigned => gf_suite(&mut r, &[Twist::Chi], n_max, b)?,
        Suite::Index2Gf => gf_suite(&mut r, &[Twist::ChiPrime, Twist::ChiChiPrime], n_max, b)?,
        Suite::HlcGf => {
            for n in 0..=n_max {
                for lambda in enumerate_bipartitions(n) {
                    r.case(n, None, || {
                        let series = psi_series_character(&lambda, b)?;
                        let brute = psi_bruteforce_character(&lambda, PrimitiveRoot::First, b)?;
                        if let Some(w) = compare(
                            &brute.values,
                            &series,
                            &format!("psi^{lambda} brute force vs series"),
                        ) {
                            return Ok(Some(w));
                        }
                        let degree = series.get(&Bipartition::identity(n)).cloned();
                        Ok(flag(
                            degree == Some(class_size_q(&lambda)),
                            &format!("psi^{lambda}(1) is not |C_lambda|"),
                        ))
                    })?;
                }
            }
        }
        Suite::BIdentity | Suite::BSignedIdentity | Suite::DHalf => {
            for n in 0..=n_max {
                let rows = PsiRows::new(n, b)?;
                for k in 0..=12 {
                    r.case(n, Some(k), || match suite {
                        Suite::BIdentity => Ok(compare(
                            &rows.psi_k_sum(k, b)?,
                            &root_enumerator(n, k, Twist::One, b)?,
                            "psi_k vs r_k",
                        )),
                        Suite::BSignedIdentity => Ok(compare(
                            &rows.spsi_k_sum(k, b)?,
                            &root_enumerator(n, k, Twist::Chi, b)?,
                            "psi~_k vs signed r_k",
                        )),
                        _ => {
                            let sum = rows.psi_k_sum(k, b)?.add(&rows.spsi_k_sum(k, b)?)?;
                            let rd = subgroup_root_enumerator(n, k, Subgroup::D, b)?;
                            let two = BigRational::from_integer(BigInt::from(2));
                            let expected = sum.map_values(|mu, _| {
                                rd.get(mu).map(|v| v * &two).unwrap_or_default()
                            });
                            Ok(compare(&sum, &expected, "psi_k + psi~_k vs 2 r_k^D"))
                        }
                    })?;
                }
            }
        }
        Suite::DOdd => {
            for n in 0..=n_max {
                for k in 0..=12 {
                    if n % 2 == 0 && k % 2 == 0 {
                        continue;
                    }
                    r.case(n, Some(k), || {
                        Ok(flag(
                            dn_odd_check(n, k, b)?,
                            "r_k^D differs from the sum of psi_D",
                        ))
                    })?;
                }
            }
        }
        Suite::AScharf => {
            for n in 0..=n_max {
                for k in 1..=8 {
                    r.case(n, Some(k), || {
                        Ok(flag(
                            scharf_check(n, k, b)?,
                            "r_k^S differs from the sum of psi^lambda",
                        ))
                    })?;
                }
            }
        }
        Suite::Orthogonality => {
            // construction certifies; a failure surfaces as an error witness
            for n in 0..=n_max {
                r.case(n, None, || sn_table(n, b).map(|_| None))?;
                r.case(n, None, || bn_table(n, b).map(|_| None))?;
            }
        }
        Suite::Fs => {
            for n in 0..=n_max {
                r.case(n, Some(2), || {
                    let t = bn_table(n, b)?;
                    let r2 = root_enumerator(n, 2, Twist::One, b)?;
                    if let Some(w) = compare(&row_sum(&t), &r2, "sum of irreducibles vs r_2") {
                        return Ok(Some(w));
                    }
                    Ok(flag(
                        decompose(&r2, &t)?.all_exactly(1),
                        "r_2 is not multiplicity-free",
                    ))
                })?;
            }
        }
        Suite::GelfandB => {
            for n in 1..=n_max {
                r.case(n, Some(2), || {
                    Ok(flag(
                        gelfand_check_b(n, b)?,
                        "sum of psi over involution types is not a Gelfand model",
                    ))
                })?;
            }
        }
        Suite::GelfandD => {
            for n in 2..=n_max {
                r.case(n, Some(2), || {
                    Ok(flag(
                        gelfand_check_d(n, b)?,
                        "half-sum is not a double Gelfand model of D_n",
                    ))
                })?;
            }
        }
        Suite::Counterexample => {
            let n = 10;
            let reports = properness_sweep(GroupTag::Sub(Subgroup::AB), n, &[3, 5, 7, 10, 70], b)?;
            for rep in reports {
                let k = rep.k.expect("sweep sets k");
                let expected = if k % 2 == 1 {
                    Verdict::Proper
                } else {
                    Verdict::NotProper
                };
                r.case(n, Some(k), || {
                    Ok(flag(
                        rep.verdict == expected,
                        &format!(
                            "verdict {} for A(B_10), expected {}",
                            rep.verdict.name(),
                            expected.name()
                        ),
                    ))
                })?;
            }
        }
        Suite::PowerMap => {
            for n in 0..=n_max {
                let id = Bipartition::identity(n);
                let w0 = Bipartition::longest(n);
                for k in 0..=12 {
                    r.case(n, Some(k), || {
                        for lambda in enumerate_bipartitions(n) {
                            let p = class_power(&lambda, k);
                            if divides_k(&lambda, k) != (p == id)
                                || divides_k_minus(&lambda, k) != (p == w0)
                            {
                                return Ok(Some((
                                    Some(lambda.to_string()),
                                    format!("predicates disagree with power {p}"),
                                )));
                            }
                        }
                        Ok(None)
                    })?;
                }
            }
        }
        Suite::Properness => {
            let ks: Vec<i64> = (0..=12).collect();
            for n in 0..=n_max {
                for g in [GroupTag::B, GroupTag::Sub(Subgroup::D)] {
                    for rep in properness_sweep(g, n, &ks, b)? {
                        let k = rep.k;
                        r.case(n, k, || {
                            Ok(rep.negative_witnesses().next().map(|c| {
                                (
                                    Some(c.label.clone()),
                                    format!("{g}: multiplicity {}", c.multiplicity),
                                )
                            }))
                        })?;
                    }
                }
            }
        }
    }
    Ok(SuiteOutcome {
        suite,
        n_max,
        cases: r.cases,
        failure: r.failure,
    })
}

/// Every suite with its default range, in declaration order.
pub fn all_suites() -> Vec<Suite> {
    use clap::ValueEnum;
    Suite::value_variants().to_vec()
}
