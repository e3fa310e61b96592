use std::fs;
use std::io::{ErrorKind, Write};
use std::path::Path;

use bqo_core::arrays::{find_good_pair, perfect_check, tri_pres_check, ArrayValues, TriPresVerdict};
use bqo_core::corpus::{random_code, random_family, random_reflexive, seeded};
use bqo_core::families::{block_check, smooth_check, star, BlockStatus, BlockVerdict, SmoothViolation};
use bqo_core::pouzet::{pouzet_order, respects_enumeration, verify_contained, verify_order_axioms, OrderViolation};
use bqo_core::reduction::{QxPoint, Reduction};
use bqo_core::{BlockArray, Error as CoreError, FinSeq, FreeSeq, OrderMatrix, RelationMatrix, SeqFamily, SigmaCode, Window};
use rand::Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::error::CliError;
use crate::{BoundaryPolicy, RunConfig};

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Schema {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}

fn emit<T: Serialize>(config: &RunConfig, report: &T) -> Result<(), CliError> {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    match &config.out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        }),
        None => match std::io::stdout().lock().write_all(text.as_bytes()) {
            Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(CliError::Io {
                path: "<stdout>".into(),
                source: e,
            }),
            _ => Ok(()),
        },
    }
}

#[derive(Serialize)]
struct SmoothVerdict {
    smooth: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<SmoothViolation>,
}

impl From<Option<SmoothViolation>> for SmoothVerdict {
    fn from(violation: Option<SmoothViolation>) -> Self {
        SmoothVerdict {
            smooth: violation.is_none(),
            violation,
        }
    }
}

#[derive(Serialize)]
struct SmoothReport {
    input: SmoothVerdict,
    star: SeqFamily,
    star_smooth: SmoothVerdict,
}

pub fn smooth(config: &RunConfig, input: &Path) -> Result<(), CliError> {
    let family: SeqFamily = read_json(input)?;
    let family = family.with_window(config.window(family.window())?)?;
    let starred = star(&family)?;
    let report = SmoothReport {
        input: smooth_check(&family).into(),
        star_smooth: smooth_check(&starred).into(),
        star: starred,
    };
    emit(config, &report)?;
    eprintln!(
        "smooth: |C|={} |C*|={} C smooth={} C* smooth={}",
        family.len(),
        report.star.len(),
        report.input.smooth,
        report.star_smooth.smooth
    );
    if !report.star_smooth.smooth {
        return Err(CliError::Counterexample("C* is not smooth".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct AxiomVerdict {
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    violation: Option<OrderViolation>,
}

#[derive(Serialize)]
struct PouzetReport {
    order: OrderMatrix,
    axioms: AxiomVerdict,
    contained: bool,
    respects_enumeration: bool,
}

pub fn pouzet(config: &RunConfig, input: &Path) -> Result<(), CliError> {
    let relation: RelationMatrix = read_json(input)?;
    let order = pouzet_order(&relation).map_err(|e| CliError::Schema {
        path: input.to_path_buf(),
        message: e.to_string(),
    })?;
    let violation = verify_order_axioms(&order);
    let report = PouzetReport {
        axioms: AxiomVerdict {
            ok: violation.is_none(),
            violation,
        },
        contained: verify_contained(&order, &relation)?,
        respects_enumeration: respects_enumeration(&order),
        order,
    };
    emit(config, &report)?;
    let ok = report.axioms.ok && report.contained && report.respects_enumeration;
    eprintln!("pouzet: n={} verified={ok}", relation.size());
    if !ok {
        return Err(CliError::Counterexample("constructed order failed verification".into()));
    }
    Ok(())
}

#[derive(Serialize)]
struct Query {
    p: usize,
    q: usize,
    related: bool,
}

#[derive(Serialize)]
struct SublemmaVerdict {
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<FinSeq>,
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
enum BadArrayOutcome {
    Checked {
        block: BlockVerdict,
        pairs_checked: usize,
        values_in_qx: bool,
        good_pair: Option<(FinSeq, FinSeq)>,
        array: Vec<QxPoint>,
    },
    PreconditionFailed {
        reason: String,
    },
}

#[derive(Serialize)]
struct ReduceReport {
    x_prefix: FreeSeq,
    carrier: Vec<QxPoint>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    queries: Vec<Query>,
    #[serde(skip_serializing_if = "Option::is_none")]
    y_prefix: Option<FreeSeq>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cxy: Option<SeqFamily>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sublemma: Option<SublemmaVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    bad_array: Option<BadArrayOutcome>,
}

pub fn reduce(
    config: &RunConfig,
    code_path: &Path,
    x_path: &Path,
    y_path: Option<&Path>,
    queries: &[(usize, usize)],
) -> Result<(), CliError> {
    let code: SigmaCode = read_json(code_path)?;
    let window = config.window(code.window())?;
    let code = if window == code.window() {
        code
    } else {
        SigmaCode::new(window, code.triples().iter().cloned())?
    };
    let x: FreeSeq = read_json(x_path)?;
    let reduction = Reduction::new(&code, &x)?;
    let relation = reduction.enumerate_qx();

    let mut answered = Vec::new();
    for &(p, q) in queries {
        for i in [p, q] {
            if i >= relation.len() {
                return Err(CoreError::IndexOutOfCarrier {
                    index: i,
                    size: relation.len(),
                }
                .into());
            }
        }
        answered.push(Query {
            p,
            q,
            related: relation.related(p, q),
        });
    }

    let mut report = ReduceReport {
        x_prefix: reduction.x_prefix().clone(),
        carrier: relation.carrier,
        queries: answered,
        y_prefix: None,
        cxy: None,
        sublemma: None,
        bad_array: None,
    };
    let mut failure = None;
    if let Some(y_path) = y_path {
        let y: FreeSeq = read_json(y_path)?;
        let family = reduction.cxy(&y)?;
        let counterexample = reduction.sublemma_verify(&y)?;
        if let Some(s) = &counterexample {
            failure = Some(format!("sublemma fails at {s}"));
        }
        report.bad_array = Some(match reduction.bad_array_witness(&y) {
            Ok(r) => {
                if !r.is_bad() {
                    failure = Some("the array on C*_{x,y} is not bad".into());
                }
                BadArrayOutcome::Checked {
                    block: r.block,
                    pairs_checked: r.pairs_checked,
                    values_in_qx: r.values_in_qx,
                    good_pair: r.good_pair,
                    array: r.carrier,
                }
            }
            Err(CoreError::NotABlock(reason)) => BadArrayOutcome::PreconditionFailed { reason },
            Err(e) => return Err(e.into()),
        });
        report.sublemma = Some(SublemmaVerdict {
            ok: counterexample.is_none(),
            counterexample,
        });
        report.cxy = Some(family);
        report.y_prefix = Some(y.restrict(window.l).expect("cxy checked the length"));
    }
    emit(config, &report)?;
    eprintln!(
        "reduce: |Q_x|={} sublemma={} bad-array={}",
        report.carrier.len(),
        report.sublemma.as_ref().map_or("-", |v| if v.ok { "ok" } else { "FAILED" }),
        match &report.bad_array {
            None => "-",
            Some(BadArrayOutcome::PreconditionFailed { .. }) => "n/a",
            Some(BadArrayOutcome::Checked { good_pair: None, .. }) => "bad",
            Some(BadArrayOutcome::Checked { .. }) => "GOOD PAIR",
        }
    );
    match failure {
        Some(msg) => Err(CliError::Counterexample(msg)),
        None => Ok(()),
    }
}

#[derive(Serialize)]
struct PairVerdict {
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pair: Option<(FinSeq, FinSeq)>,
}

impl From<Option<(FinSeq, FinSeq)>> for PairVerdict {
    fn from(pair: Option<(FinSeq, FinSeq)>) -> Self {
        PairVerdict {
            found: pair.is_some(),
            pair,
        }
    }
}

#[derive(Serialize)]
struct CheckReport {
    block: BlockVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    good_pair: Option<PairVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    perfection_counterexample: Option<PairVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tri_pres: Option<TriPresVerdict>,
}

pub fn check(
    config: &RunConfig,
    family_path: &Path,
    array_path: Option<&Path>,
    relation_path: Option<&Path>,
    codomain_path: Option<&Path>,
) -> Result<(), CliError> {
    let family: SeqFamily = read_json(family_path)?;
    let family = family.with_window(config.window(family.window())?)?;
    let mut report = CheckReport {
        block: block_check(&family),
        good_pair: None,
        perfection_counterexample: None,
        tri_pres: None,
    };
    let mut failure = None;
    if let Some(array_path) = array_path {
        let array: BlockArray = read_json(array_path)?;
        if array.family().members() != family.members() {
            return Err(CliError::Schema {
                path: array_path.to_path_buf(),
                message: "array is not defined on the given family".into(),
            });
        }
        match array.values() {
            ArrayValues::Index(_) => {
                let path = relation_path
                    .ok_or_else(|| CliError::Config("index-valued arrays need --relation".into()))?;
                let relation: RelationMatrix = read_json(path)?;
                report.good_pair = Some(find_good_pair(&array, &relation)?.into());
                report.perfection_counterexample = Some(perfect_check(&array, &relation)?.into());
            }
            ArrayValues::Seq(_) => {
                let path = codomain_path
                    .ok_or_else(|| CliError::Config("sequence-valued arrays need --codomain".into()))?;
                let codomain: SeqFamily = read_json(path)?;
                let verdict = tri_pres_check(&codomain, &array)?;
                if !verdict.holds() && !verdict.is_precondition_failure() {
                    failure = Some(format!("tri-pres conclusion fails: {verdict:?}"));
                }
                report.tri_pres = Some(verdict);
            }
        }
    }
    emit(config, &report)?;
    eprintln!("check: block={:?}", report.block.status);
    if let Some(msg) = failure {
        return Err(CliError::Counterexample(msg));
    }
    if report.block.status == BlockStatus::IndeterminateAtBoundary {
        let detail = format!("{:?}", report.block.witness);
        match config.boundary_policy {
            BoundaryPolicy::Strict => return Err(CliError::Boundary(detail)),
            BoundaryPolicy::Warn => eprintln!("warning: block verdict indeterminate at {detail}"),
        }
    }
    Ok(())
}

#[derive(Serialize, Default)]
struct SelftestReport {
    seed: u64,
    families: usize,
    stars_completed: usize,
    star_smoothness_failures: usize,
    relations: usize,
    pouzet_failures: usize,
    codes: usize,
    sublemma_checks: usize,
    sublemma_failures: usize,
    bad_arrays_checked: usize,
    bad_arrays_skipped: usize,
    bad_array_failures: usize,
}

pub fn selftest(config: &RunConfig, cases: usize) -> Result<(), CliError> {
    let mut rng = seeded(config.seed);
    let mut report = SelftestReport {
        seed: config.seed,
        ..Default::default()
    };
    for _ in 0..cases {
        let window = config.window(Window::new(rng.gen_range(3..=10), rng.gen_range(1..=3)))?;
        let family = random_family(&mut rng, window);
        report.families += 1;
        if let Ok(starred) = star(&family) {
            report.stars_completed += 1;
            if smooth_check(&starred).is_some() {
                report.star_smoothness_failures += 1;
            }
        }

        let n = rng.gen_range(0..=30);
        let density = rng.gen_range(0.1..0.9);
        let r = random_reflexive(&mut rng, n, density);
        let order = pouzet_order(&r)?;
        report.relations += 1;
        if verify_order_axioms(&order).is_some() || !verify_contained(&order, &r)? {
            report.pouzet_failures += 1;
        }

        let window = config.window(Window::new(rng.gen_range(4..=10), rng.gen_range(1..=3)))?;
        let case = random_code(&mut rng, window, 30, 4);
        let reduction = Reduction::new(&case.code, &case.x)?;
        report.codes += 1;
        for y in &case.ys {
            report.sublemma_checks += 1;
            if reduction.sublemma_verify(y)?.is_some() {
                report.sublemma_failures += 1;
            }
            match reduction.bad_array_witness(y) {
                Ok(r) => {
                    report.bad_arrays_checked += 1;
                    if !r.is_bad() {
                        report.bad_array_failures += 1;
                    }
                }
                Err(CoreError::NotABlock(_)) => report.bad_arrays_skipped += 1,
                Err(e) => return Err(e.into()),
            }
        }
    }
    emit(config, &report)?;
    let failures = report.star_smoothness_failures
        + report.pouzet_failures
        + report.sublemma_failures
        + report.bad_array_failures;
    eprintln!("selftest: seed={} cases={cases} failures={failures}", config.seed);
    if failures > 0 {
        return Err(CliError::Counterexample(format!("{failures} selftest failures")));
    }
    Ok(())
}
