//! Named identity checks with uniform reports, shared by the command line
//! `verify` subcommand and the acceptance tests.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::formulas::{
    bracket_complement_check, c_tilde, deligne_derivative_form, deligne_doubled_sum,
    deligne_numerator, deligne_window, graded_height, list_deligne, omega_reflection_check,
    q_dimension_direct, q_dimension_specialized, sl2_two_term, sl_half_lattice, sp_character,
    sp_parity_rewriting_check, twisted_denominator_check, CharacterRequest, FormulaId, Side,
    SpParityVariant, SpVariant,
};
use crate::lie::{FiniteWeight, RootSystem, RootType};
use crate::linalg::q;
use crate::oracles::{
    fock_sl_oracle, sigma_characters, sp_restriction_oracle, superdenominator_from_sl_characters,
    superdenominator_sum_sl, superdenominator_sum_spo,
};
use crate::series::{
    alt_weyl_sum, divide_by_denominator, superdenominator_sl, superdenominator_spo, translate,
    AffineWeight, Comparison, ExpSeries,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One identity or property, with its parameters.
#[derive(Clone, Debug)]
pub enum Check {
    /// Product against sum side of the `sl(n|1)` superdenominator.
    SuperdenominatorSl { n: usize, order: u32 },
    /// Product against sum side of the `spo(2n'|2)` superdenominator.
    SuperdenominatorSpo { n_prime: usize, order: u32 },
    /// The `sl(n|1)` superdenominator rebuilt from the half-lattice numerators.
    SuperdenominatorAssembly { n: usize, order: u32 },
    /// Half-lattice characters of affine `sl_n` against the Fock space.
    SlFock {
        n: usize,
        s: u32,
        side: Side,
        order: u32,
    },
    /// The lattice sum for affine `sl_2` has exactly two terms.
    Sl2TwoTerm { s: u32 },
    /// `-(1+s) Lambda_0 + s Lambda_1` of affine `sp_n` against the restricted Fock space.
    SpRestriction { n: usize, s: u32, order: u32 },
    /// `-Lambda_0` and `-2 Lambda_0 + Lambda_2` of affine `sp_n` against the
    /// sigma-eigenspace decomposition of the charge zero Fock space.
    SpSigma { n: usize, order: u32 },
    /// `R_hat` times the half-sum characters equals the parity lattice sums.
    SpParityRewriting { n: usize, order: u32 },
    /// The twisted denominator identity on the even-parity sublattice.
    TwistedDenominator { n_prime: usize, order: u32 },
    /// `[j_1 >= 0, odd] = -[j_1 < 0, even]`.
    BracketComplement { n_prime: usize, order: u32 },
    /// Sum over `omega` equals minus the sum over its reflection.
    OmegaReflection {
        n_prime: usize,
        omega: Vec<Vec<i64>>,
        order: u32,
    },
    /// Every listed weight of level `k`: integral, nonnegative character with
    /// leading coefficient 1, and q-dimension agreeing along two paths.
    Deligne {
        kind: RootType,
        rank: usize,
        k: i64,
        order: u32,
        qdim_order: u32,
    },
    /// The same properties for one weight given by its affine labels.
    DeligneWeight {
        kind: RootType,
        rank: usize,
        labels: Vec<i64>,
        order: u32,
        qdim_order: u32,
    },
    /// The derivative form of the Deligne coefficients gives the same sum.
    DeligneDerivative {
        kind: RootType,
        rank: usize,
        labels: Vec<i64>,
        order: u32,
    },
    /// The character has nonnegative coefficients and leading coefficient 1.
    Positivity {
        request: CharacterRequest,
        order: u32,
    },
    /// Grade slices known to be complete are invariant under the simple reflections.
    WeylInvariance {
        request: CharacterRequest,
        order: u32,
    },
    /// The q-dimension by direct lattice sum and by specialization agree.
    QDimension {
        request: CharacterRequest,
        order: u32,
    },
}

/// Outcome of one check. `passed == false` is a mathematical finding, not a
/// crash.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: String,
    pub params: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CheckReport {
    /// The report without timing, for byte-stable output.
    pub fn summary(&self) -> String {
        format!(
            "{} {} [{}]: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.params,
            self.detail
        )
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({:.2?})", self.summary(), self.elapsed)
    }
}

fn compare(c: Comparison) -> (bool, String) {
    (c.holds(), c.to_string())
}

fn combine(parts: Vec<(&str, (bool, String))>) -> (bool, String) {
    let passed = parts.iter().all(|(_, (p, _))| *p);
    let detail = parts
        .into_iter()
        .map(|(label, (_, d))| format!("{label}: {d}"))
        .collect::<Vec<_>>()
        .join("; ");
    (passed, detail)
}

impl Check {
    pub fn name(&self) -> &'static str {
        match self {
            Check::SuperdenominatorSl { .. } => "superdenominator-sl",
            Check::SuperdenominatorSpo { .. } => "superdenominator-spo",
            Check::SuperdenominatorAssembly { .. } => "superdenominator-assembly",
            Check::SlFock { .. } => "sl-fock",
            Check::Sl2TwoTerm { .. } => "sl2-two-term",
            Check::SpRestriction { .. } => "sp-restriction",
            Check::SpSigma { .. } => "sp-sigma",
            Check::SpParityRewriting { .. } => "sp-parity-rewriting",
            Check::TwistedDenominator { .. } => "twisted-denominator",
            Check::BracketComplement { .. } => "bracket-complement",
            Check::OmegaReflection { .. } => "omega-reflection",
            Check::Deligne { .. } => "deligne",
            Check::DeligneWeight { .. } => "deligne-weight",
            Check::DeligneDerivative { .. } => "deligne-derivative",
            Check::Positivity { .. } => "positivity",
            Check::WeylInvariance { .. } => "weyl-invariance",
            Check::QDimension { .. } => "qdim-two-paths",
        }
    }

    fn params(&self) -> String {
        let req = |r: &CharacterRequest| {
            let mut s = format!("{} {}{}", r.formula, r.kind, r.rank);
            if r.s != 0 {
                s += &format!(" s={}", r.s);
            }
            if let Some(l) = &r.labels {
                s += &format!(" labels={l:?}");
            }
            s
        };
        match self {
            Check::SuperdenominatorSl { n, order }
            | Check::SuperdenominatorAssembly { n, order } => {
                format!("n={n} order={order}")
            }
            Check::SuperdenominatorSpo { n_prime, order }
            | Check::TwistedDenominator { n_prime, order }
            | Check::BracketComplement { n_prime, order } => format!("n'={n_prime} order={order}"),
            Check::SlFock { n, s, side, order } => {
                format!("n={n} s={s} side={side:?} order={order}")
            }
            Check::Sl2TwoTerm { s } => format!("s={s}"),
            Check::SpRestriction { n, s, order } => format!("n={n} s={s} order={order}"),
            Check::SpSigma { n, order } | Check::SpParityRewriting { n, order } => {
                format!("n={n} order={order}")
            }
            Check::OmegaReflection {
                n_prime,
                omega,
                order,
            } => {
                format!("n'={n_prime} omega={omega:?} order={order}")
            }
            Check::Deligne {
                kind,
                rank,
                k,
                order,
                qdim_order,
            } => {
                format!("{kind}{rank} k={k} order={order} qdim_order={qdim_order}")
            }
            Check::DeligneWeight {
                kind,
                rank,
                labels,
                order,
                qdim_order,
            } => {
                format!("{kind}{rank} labels={labels:?} order={order} qdim_order={qdim_order}")
            }
            Check::DeligneDerivative {
                kind,
                rank,
                labels,
                order,
            } => {
                format!("{kind}{rank} labels={labels:?} order={order}")
            }
            Check::Positivity { request, order }
            | Check::WeylInvariance { request, order }
            | Check::QDimension { request, order } => format!("{} order={order}", req(request)),
        }
    }

    /// Runs the check. Configuration problems are errors; failed identities
    /// are reports with `passed == false`.
    pub fn run(&self) -> Result<CheckReport> {
        let start = Instant::now();
        let (passed, detail) = self.evaluate()?;
        Ok(CheckReport {
            name: self.name().to_string(),
            params: self.params(),
            passed,
            detail,
            elapsed: start.elapsed(),
        })
    }

    fn evaluate(&self) -> Result<(bool, String)> {
        Ok(match self {
            Check::SuperdenominatorSl { n, order } => compare(Comparison::of(
                &superdenominator_sl(*n, *order),
                &superdenominator_sum_sl(*n, *order)?,
            )),
            Check::SuperdenominatorSpo { n_prime, order } => compare(Comparison::of(
                &superdenominator_spo(*n_prime, *order)?,
                &superdenominator_sum_spo(*n_prime, *order)?,
            )),
            Check::SuperdenominatorAssembly { n, order } => compare(Comparison::of(
                &superdenominator_sl(*n, *order),
                &superdenominator_from_sl_characters(*n, *order)?,
            )),
            Check::SlFock { n, s, side, order } => {
                let rs = RootSystem::new(RootType::A, n - 1)?;
                let ch = divide_by_denominator(&rs, &sl_half_lattice(*n, *s, *side, *order)?)?;
                compare(Comparison::of(&ch, &fock_sl_oracle(*n, *s, *side, *order)?))
            }
            Check::Sl2TwoTerm { s } => {
                let order = s + 3;
                let got = sl2_two_term(*s, order)?;
                let mut want = ExpSeries::zero(got.base().clone(), 2, order);
                want.add_term(vec![0, 0], BigInt::from(1));
                want.add_term(vec![0, s + 1], BigInt::from(-1));
                compare(Comparison::of(&got, &want))
            }
            Check::SpRestriction { n, s, order } => compare(Comparison::of(
                &sp_character(*n, SpVariant::Lambda1, *s, *order)?,
                &sp_restriction_oracle(*n, *s, *order)?,
            )),
            Check::SpSigma { n, order } => {
                let (vac, second) = sigma_characters(*n, order + 2)?;
                combine(vec![
                    (
                        "-Lambda_0",
                        compare(Comparison::of(
                            &sp_character(*n, SpVariant::Vacuum, 0, *order)?,
                            &vac,
                        )),
                    ),
                    (
                        "-2Lambda_0+Lambda_2",
                        compare(Comparison::of(
                            &sp_character(*n, SpVariant::Lambda2, 0, *order)?,
                            &second,
                        )),
                    ),
                ])
            }
            Check::SpParityRewriting { n, order } => combine(vec![
                (
                    "-Lambda_0",
                    compare(sp_parity_rewriting_check(
                        *n,
                        SpParityVariant::Vacuum,
                        *order,
                    )?),
                ),
                (
                    "-2Lambda_0+Lambda_2",
                    compare(sp_parity_rewriting_check(
                        *n,
                        SpParityVariant::Lambda2,
                        *order,
                    )?),
                ),
            ]),
            Check::TwistedDenominator { n_prime, order } => {
                compare(twisted_denominator_check(*n_prime, *order)?)
            }
            Check::BracketComplement { n_prime, order } => {
                compare(bracket_complement_check(*n_prime, *order)?)
            }
            Check::OmegaReflection {
                n_prime,
                omega,
                order,
            } => compare(omega_reflection_check(*n_prime, omega, *order)?),
            Check::Deligne {
                kind,
                rank,
                k,
                order,
                qdim_order,
            } => deligne_suite(*kind, *rank, *k, *order, *qdim_order)?,
            Check::DeligneWeight {
                kind,
                rank,
                labels,
                order,
                qdim_order,
            } => {
                let rs = RootSystem::new(*kind, *rank)?;
                let failures = deligne_weight_findings(&rs, labels, *order, *qdim_order)?;
                if failures.is_empty() {
                    (true, "integral, positive, q-dimensions agree".to_string())
                } else {
                    (false, failures.join("; "))
                }
            }
            Check::DeligneDerivative {
                kind,
                rank,
                labels,
                order,
            } => {
                let rs = RootSystem::new(*kind, *rank)?;
                let lambda = AffineWeight::from_labels(&rs, labels, Zero::zero())?;
                compare(Comparison::of(
                    &deligne_doubled_sum(&rs, &lambda, *order, false)?,
                    &deligne_derivative_form(&rs, &lambda, *order)?,
                ))
            }
            Check::Positivity { request, order } => {
                let ch = request.character(*order)?;
                match positivity(&ch) {
                    None => (
                        true,
                        format!("{} terms, all positive, leading coefficient 1", ch.len()),
                    ),
                    Some(why) => (false, why),
                }
            }
            Check::WeylInvariance { request, order } => {
                let rs = request.root_system()?;
                let ch = request.character(*order)?;
                let mut grades = 0;
                while graded_height(request, grades)? <= *order {
                    grades += 1;
                }
                if grades == 0 {
                    return Err(Error::Precondition(format!(
                        "order {order} holds no complete grade; need at least {}",
                        graded_height(request, 0)?
                    )));
                }
                match weyl_invariance(&rs, &ch, grades - 1)? {
                    None => (true, format!("grades 0..={} invariant", grades - 1)),
                    Some(why) => (false, why),
                }
            }
            Check::QDimension { request, order } => {
                let a = q_dimension_direct(request, *order)?;
                let b = q_dimension_specialized(request, *order)?;
                if a == b {
                    (true, format!("{a}"))
                } else {
                    (false, format!("direct {a} vs specialized {b}"))
                }
            }
        })
    }
}

fn deligne_suite(
    kind: RootType,
    rank: usize,
    k: i64,
    order: u32,
    qdim_order: u32,
) -> Result<(bool, String)> {
    let rs = RootSystem::new(kind, rank)?;
    let window = deligne_window(&rs).ok_or_else(|| {
        Error::Precondition(format!("{} is not in the exceptional series", rs.label()))
    })?;
    let weights = list_deligne(&rs, k, window)?;
    if weights.is_empty() {
        return Ok((false, format!("no weights at level {k}")));
    }
    let mut failures = Vec::new();
    for w in &weights {
        let labels: Vec<i64> = w
            .lambda
            .labels(&rs)
            .iter()
            .map(|x| x.to_integer())
            .collect();
        failures.extend(deligne_weight_findings(&rs, &labels, order, qdim_order)?);
    }
    if failures.is_empty() {
        Ok((
            true,
            format!(
                "{} weights integral, positive, q-dimensions agree",
                weights.len()
            ),
        ))
    } else {
        Ok((false, failures.join("; ")))
    }
}

/// Everything wrong with the Deligne formula at one weight: a coefficient
/// not divisible by 2, a term above the highest weight, a negative or wrong
/// leading coefficient, or disagreeing q-dimensions. Empty when it passes.
fn deligne_weight_findings(
    rs: &RootSystem,
    labels: &[i64],
    order: u32,
    qdim_order: u32,
) -> Result<Vec<String>> {
    let lambda = AffineWeight::from_labels(rs, labels, q(0))?;
    let num = match deligne_numerator(rs, &lambda, order, false) {
        Ok(num) => num,
        Err(Error::NonIntegral {
            exps,
            coeff,
            divisor,
        }) => {
            return Ok(vec![format!(
                "{labels:?}: coefficient {coeff} at {exps:?} not divisible by {divisor}"
            )])
        }
        Err(Error::OutsideCone(exps)) => {
            return Ok(vec![format!(
                "{labels:?}: term at {exps:?} lies above the highest weight"
            )])
        }
        Err(e) => return Err(e),
    };
    let mut out = Vec::new();
    let ch = divide_by_denominator(rs, &num)?;
    if let Some(why) = positivity(&ch) {
        out.push(format!("{labels:?}: {why}"));
    }
    let req = CharacterRequest::new(FormulaId::Deligne, rs.kind(), rs.rank())
        .with_labels(labels.to_vec());
    let a = q_dimension_direct(&req, qdim_order)?;
    let b = q_dimension_specialized(&req, qdim_order)?;
    if a != b {
        out.push(format!("{labels:?}: q-dimension {a} vs {b}"));
    }
    Ok(out)
}

/// `None` if every coefficient is positive and the leading one is 1,
/// otherwise a description of the first violation.
pub fn positivity(ch: &ExpSeries) -> Option<String> {
    let zero = vec![0u32; ch.nvars()];
    let lead = ch.coeff(&zero);
    if lead != BigInt::from(1) {
        return Some(format!("leading coefficient {lead}"));
    }
    ch.terms()
        .iter()
        .find(|(_, c)| !c.is_positive())
        .map(|(e, c)| format!("coefficient {c} at {e:?}"))
}

/// Checks that the grades `0..=max_grade` of a character (base `Lambda`,
/// exponent 0 counting `alpha_0`) are invariant under every simple
/// reflection of the finite Weyl group. Returns a description of the first
/// violation.
pub fn weyl_invariance(rs: &RootSystem, ch: &ExpSeries, max_grade: u32) -> Result<Option<String>> {
    let l = rs.rank();
    let top = &ch.base().fin;
    let theta = rs.theta();
    // Finite weight of each term, grouped by grade.
    let mut slices: BTreeMap<u32, BTreeMap<Vec<i64>, BigInt>> = BTreeMap::new();
    for (e, c) in ch.terms() {
        if e[0] > max_grade {
            continue;
        }
        let mut mu = top + &theta.scale(q(e[0] as i64));
        for i in 0..l {
            mu = &mu - &rs.simple_root(i).scale(q(e[i + 1] as i64));
        }
        let key: Vec<i64> = mu.coords().iter().map(|x| x.to_integer()).collect();
        slices.entry(e[0]).or_default().insert(key, c.clone());
    }
    for (grade, slice) in &slices {
        for (mu, c) in slice {
            for i in 0..l {
                let image = rs.reflect_simple(&crate::lie::FiniteWeight::from_ints(mu), i);
                let key: Vec<i64> = image.coords().iter().map(|x| x.to_integer()).collect();
                let other = slice.get(&key).cloned().unwrap_or_default();
                if &other != c {
                    return Ok(Some(format!(
                        "grade {grade}: weight {mu:?} has multiplicity {c} but its r_{} image {key:?} has {other}",
                        i + 1
                    )));
                }
            }
        }
    }
    Ok(None)
}

/// The exact identity checks backing criteria 1 to 8 of the acceptance
/// suite, grouped by criterion number.
pub fn acceptance_suite() -> Vec<(u32, Vec<Check>)> {
    vec![
        (
            1,
            vec![
                Check::SuperdenominatorSl { n: 3, order: 5 },
                Check::SuperdenominatorSl { n: 4, order: 5 },
            ],
        ),
        (
            2,
            (0..=2)
                .map(|s| Check::SlFock {
                    n: 3,
                    s,
                    side: Side::First,
                    order: 4,
                })
                .collect(),
        ),
        (3, (0..=3).map(|s| Check::Sl2TwoTerm { s }).collect()),
        (
            4,
            (1..=2)
                .map(|s| Check::SpRestriction { n: 4, s, order: 3 })
                .collect(),
        ),
        (5, vec![Check::SpSigma { n: 4, order: 3 }]),
        (
            6,
            vec![
                Check::TwistedDenominator {
                    n_prime: 2,
                    order: 5,
                },
                Check::TwistedDenominator {
                    n_prime: 3,
                    order: 3,
                },
            ],
        ),
        (
            7,
            vec![
                Check::SpParityRewriting { n: 4, order: 4 },
                Check::BracketComplement {
                    n_prime: 2,
                    order: 4,
                },
            ],
        ),
        (
            8,
            vec![
                Check::Deligne {
                    kind: RootType::D,
                    rank: 4,
                    k: -1,
                    order: 3,
                    qdim_order: 3,
                },
                Check::DeligneWeight {
                    kind: RootType::D,
                    rank: 4,
                    labels: vec![-2, 0, 0, 0, 0],
                    order: 3,
                    qdim_order: 3,
                },
            ],
        ),
    ]
}

fn random_series<R: Rng>(rng: &mut R, nvars: usize, order: u32, unit: bool) -> ExpSeries {
    let mut s = ExpSeries::zero(AffineWeight::zero(nvars - 1), nvars, order);
    for _ in 0..rng.gen_range(0..6) {
        let e: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..3)).collect();
        s.add_term(e, BigInt::from(rng.gen_range(-4i64..=4)));
    }
    if unit {
        let zero = vec![0u32; nvars];
        let c = s.coeff(&zero);
        s.add_term(
            zero,
            BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 }) - c,
        );
    }
    s
}

fn random_weight<R: Rng>(rng: &mut R, rank: usize, span: i64) -> FiniteWeight {
    FiniteWeight::from_ints(
        &(0..rank)
            .map(|_| rng.gen_range(-span..=span))
            .collect::<Vec<_>>(),
    )
}

fn random_coroot<R: Rng>(rng: &mut R, rs: &RootSystem, span: i64) -> FiniteWeight {
    rs.coroot_basis()
        .iter()
        .fold(FiniteWeight::zero(rs.rank()), |acc, b| {
            &acc + &b.scale(q(rng.gen_range(-span..=span)))
        })
}

/// Seeded randomized checks of the algebraic invariants the evaluators rely
/// on: ring laws and truncation of series, translations acting as a group
/// and commuting with `W` as `w t_gamma w^{-1} = t_{w gamma}`, antisymmetry
/// and wall vanishing of alternating Weyl sums, and `c~(r_alpha gamma - alpha) = -c~(gamma)`.
pub fn random_properties(seed: u64, cases: u32) -> Result<Vec<CheckReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let systems = [
        RootSystem::new(RootType::A, 2)?,
        RootSystem::new(RootType::C, 2)?,
        RootSystem::new(RootType::D, 4)?,
    ];
    let groups: Vec<Vec<crate::lie::WeylElement>> = systems
        .iter()
        .map(|rs| crate::lie::weyl_group(rs, false))
        .collect::<Result<_>>()?;
    let params = format!("seed={seed} cases={cases}");
    let mut reports = Vec::new();
    let mut run =
        |name: &str, f: &mut dyn FnMut(&mut ChaCha8Rng) -> Result<Option<String>>| -> Result<()> {
            let start = Instant::now();
            let mut failure = None;
            for i in 0..cases {
                if let Some(why) = f(&mut rng)? {
                    failure = Some(format!("case {i}: {why}"));
                    break;
                }
            }
            reports.push(CheckReport {
                name: name.to_string(),
                params: params.clone(),
                passed: failure.is_none(),
                detail: failure.unwrap_or_else(|| format!("{cases} cases")),
                elapsed: start.elapsed(),
            });
            Ok(())
        };

    run("ring-laws", &mut |rng| {
        let order = rng.gen_range(0..7);
        let (a, b, c) = (
            random_series(rng, 3, order, false),
            random_series(rng, 3, order, false),
            random_series(rng, 3, order, false),
        );
        let u = random_series(rng, 3, order, true);
        let ok = a.mul(&b)? == b.mul(&a)?
            && a.mul(&b)?.mul(&c)? == a.mul(&b.mul(&c)?)?
            && a.add(&b)?.mul(&c)? == a.mul(&c)?.add(&b.mul(&c)?)?
            && u.mul(&u.invert()?)?.with_base(u.base().clone())
                == ExpSeries::one(u.base().clone(), 3, order);
        Ok((!ok).then(|| format!("a = {a}, b = {b}, c = {c}, u = {u}")))
    })?;

    run("truncation", &mut |rng| {
        let order = rng.gen_range(1..8);
        let k = rng.gen_range(0..=order);
        let a = random_series(rng, 3, order, false);
        let b = random_series(rng, 3, order, false);
        let full = a.mul(&b)?.truncate(k);
        let cut = a.truncate(k).mul(&b.truncate(k))?;
        Ok((full != cut).then(|| format!("a = {a}, b = {b}, k = {k}")))
    })?;

    run("translation-action", &mut |rng| {
        let i = rng.gen_range(0..systems.len());
        let rs = &systems[i];
        let w = &groups[i][rng.gen_range(0..groups[i].len())];
        let lambda = AffineWeight::new(
            random_weight(rng, rs.rank(), 3),
            q(rng.gen_range(-3..=5)),
            q(rng.gen_range(-2..=2)),
        );
        let (g1, g2) = (random_coroot(rng, rs, 2), random_coroot(rng, rs, 2));
        let composed = translate(rs, &translate(rs, &lambda, &g1), &g2);
        let direct = translate(rs, &lambda, &(&g1 + &g2));
        let act = |x: &AffineWeight| AffineWeight::new(w.apply(&x.fin), x.level, x.delta);
        let conj = act(&translate(rs, &lambda, &g1));
        let moved = translate(rs, &act(&lambda), &w.apply(&g1));
        Ok((composed != direct || conj != moved)
            .then(|| format!("{} lambda = {lambda}, gammas {g1}, {g2}", rs.label())))
    })?;

    run("alternating-sum", &mut |rng| {
        let i = rng.gen_range(0..2);
        let rs = &systems[i];
        let w = &groups[i][rng.gen_range(0..groups[i].len())];
        let mu = AffineWeight::new(random_weight(rng, rs.rank(), 4), q(1), q(0));
        let a = alt_weyl_sum(rs, &mu, 4)?;
        let moved = AffineWeight::new(w.apply(&mu.fin), mu.level, mu.delta);
        let b = alt_weyl_sum(rs, &moved, 4)?;
        let expect = if w.sign() < 0 { a.neg() } else { a.clone() };
        let wall_ok = !rs.is_singular(&mu.fin) || a.is_empty();
        Ok((b != expect || !wall_ok).then(|| format!("{} mu = {mu}", rs.label())))
    })?;

    run("c-tilde-antisymmetry", &mut |rng| {
        let rs = &systems[2];
        let roots = rs.positive_roots();
        let alpha = &roots[rng.gen_range(0..roots.len())];
        let gamma = random_coroot(rng, rs, 5);
        let image = &rs.reflect(&gamma, alpha) - alpha;
        let ok = c_tilde(rs, alpha, &image) == -c_tilde(rs, alpha, &gamma);
        Ok((!ok).then(|| format!("alpha = {alpha}, gamma = {gamma}")))
    })?;

    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_checks_pass() {
        let checks = vec![
            Check::SuperdenominatorSl { n: 2, order: 4 },
            Check::Sl2TwoTerm { s: 1 },
            Check::BracketComplement {
                n_prime: 2,
                order: 3,
            },
            Check::OmegaReflection {
                n_prime: 2,
                omega: vec![vec![0, 0]],
                order: 3,
            },
            Check::OmegaReflection {
                n_prime: 2,
                omega: vec![],
                order: 3,
            },
            Check::QDimension {
                request: CharacterRequest::new(FormulaId::SlHalfLast, RootType::A, 2).with_s(1),
                order: 3,
            },
        ];
        for c in checks {
            let r = c.run().unwrap();
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn invariance_holds_for_an_integrable_module() {
        let request =
            CharacterRequest::new(FormulaId::WeylKac, RootType::A, 2).with_labels(vec![1, 1, 0]);
        let order = graded_height(&request, 1).unwrap();
        let r = Check::WeylInvariance { request, order }.run().unwrap();
        assert!(r.passed, "{r}");
    }

    #[test]
    fn invariance_detects_a_broken_character() {
        let rs = RootSystem::new(RootType::A, 1).unwrap();
        let base = AffineWeight::from_labels(&rs, &[0, 1], Zero::zero()).unwrap();
        let mut ch = ExpSeries::zero(base, 2, 3);
        ch.add_term(vec![0, 0], BigInt::from(1));
        assert!(weyl_invariance(&rs, &ch, 0).unwrap().is_some());
        ch.add_term(vec![0, 1], BigInt::from(1));
        assert!(weyl_invariance(&rs, &ch, 0).unwrap().is_none());
    }

    #[test]
    fn random_properties_hold() {
        for r in random_properties(7, 50).unwrap() {
            assert!(r.passed, "{r}");
        }
    }

    #[test]
    fn positivity_reports_negative_terms() {
        let rs = RootSystem::new(RootType::A, 1).unwrap();
        let base = AffineWeight::zero(1);
        let mut ch = ExpSeries::one(base, 2, 3);
        assert!(positivity(&ch).is_none());
        ch.add_term(vec![1, 0], BigInt::from(-2));
        assert!(positivity(&ch).unwrap().contains("-2"));
        let _ = rs;
    }
}
