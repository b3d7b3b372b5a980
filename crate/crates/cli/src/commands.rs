use std::collections::BTreeMap;

use anyhow::{bail, Context, Result};
use qdl_core::checkers::{self, Arm, CheckOptions, CheckerReport};
use qdl_core::interval;
use qdl_core::json::{CategoryJson, QuantaleJson};
use qdl_core::qcat::{
    self, check_adjunction, find_left_adjoint, validate_category, PresheafCategory, QCategory,
    QFunctor,
};
use qdl_core::quantale::{self, FiniteQuantale, Standard};
use qdl_core::tnorm::{self, ComponentKind};
use serde_json::{json, Value};

use crate::args::{CheckKind, Command, IntervalCmd, QcatCmd, QuantaleCmd, StandardKind, TnormCmd};
use crate::corpus;
use crate::load::{
    load_category, load_category_parts, load_quantale, load_quantale_table, load_tnorm,
};

pub struct Outcome {
    pub result: Value,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Outcome {
            result,
            exit_code: 0,
        }
    }

    /// Exit 0 when `verdict` holds, 1 otherwise.
    fn verdict(result: Value, verdict: bool) -> Self {
        Outcome {
            result,
            exit_code: if verdict { 0 } else { 1 },
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

pub fn run_check(
    kind: CheckKind,
    a: &QCategory,
    opts: CheckOptions,
) -> qdl_core::Result<CheckerReport> {
    match kind {
        CheckKind::Cocomplete => checkers::is_cocomplete(a, opts),
        CheckKind::Complete => checkers::is_complete(a, opts),
        CheckKind::Cd => checkers::is_completely_distributive(a, opts),
        CheckKind::Cocd => checkers::is_completely_codistributive(a, opts),
        CheckKind::Continuous => checkers::is_continuous_qcat(a, opts),
        CheckKind::LambdaGamma => checkers::check_lambda_gamma(a, opts),
        CheckKind::Inclusion => checkers::check_inclusion_left_adjoint(a, opts),
        CheckKind::CotensorScott => checkers::check_cotensor_scott_continuity(a, opts),
    }
}

pub fn dispatch(command: &Command, cap: usize) -> Result<Outcome> {
    match command {
        Command::Tnorm(c) => tnorm_cmd(c),
        Command::Interval(c) => interval_cmd(c),
        Command::Quantale(c) => quantale_cmd(c),
        Command::Qcat(c) => qcat_cmd(c, cap),
        Command::Check(args) => {
            let a = load_category(&args.cat.cat)?;
            let arm = if args.oracle {
                Arm::Both
            } else {
                Arm::Criteria
            };
            let report = run_check(args.which, &a, CheckOptions { arm, cap })?;
            Ok(Outcome::verdict(to_value(&report), report.verdict))
        }
        Command::Corpus { path } => corpus::run(path, cap),
    }
}

fn tnorm_cmd(c: &TnormCmd) -> Result<Outcome> {
    match c {
        TnormCmd::Eval(a) => {
            let t = load_tnorm(&a.spec.spec)?;
            let v = t.eval(&a.x, &a.y)?;
            Ok(Outcome::ok(json!({"x": a.x, "y": a.y, "value": v})))
        }
        TnormCmd::Residuum(a) => {
            let t = load_tnorm(&a.spec.spec)?;
            let v = t.residuum(&a.x, &a.y)?;
            Ok(Outcome::ok(json!({"x": a.x, "y": a.y, "value": v})))
        }
        TnormCmd::Classify(s) => {
            let t = load_tnorm(&s.spec)?;
            Ok(Outcome::ok(to_value(&tnorm::classify(&t))))
        }
        TnormCmd::Witness { spec, lo } => {
            let t = load_tnorm(&spec.spec)?;
            let comp = match lo {
                Some(lo) => t.components().iter().find(|c| &c.lo == lo).cloned(),
                None => t
                    .components()
                    .iter()
                    .find(|c| c.kind == ComponentKind::Lukasiewicz && c.lo.is_positive())
                    .cloned(),
            };
            let Some(comp) = comp else {
                return Err(
                    qdl_core::Error::NotApplicable("no matching offending summand".into()).into(),
                );
            };
            let w = tnorm::discontinuity_witness(&t, &comp)?;
            Ok(Outcome::ok(json!({"component": comp, "witness": w})))
        }
        TnormCmd::Scan { spec, step, tol } => {
            let t = load_tnorm(&spec.spec)?;
            let points = tnorm::scan_offdiagonal(&t, step, tol)?;
            let passes = tnorm::classify(&t).verdict.passes();
            Ok(Outcome::ok(json!({
                "step": step,
                "tol": tol,
                "count": points.len(),
                "agrees_with_classify": points.is_empty() == passes,
                "points": points,
            })))
        }
        TnormCmd::Idempotents(s) => {
            let t = load_tnorm(&s.spec)?;
            let set = t.idempotents();
            Ok(Outcome::ok(
                json!({"set": set.to_string(), "pieces": set.pieces}),
            ))
        }
    }
}

fn interval_cmd(c: &IntervalCmd) -> Result<Outcome> {
    match c {
        IntervalCmd::Phi(a) => {
            let t = load_tnorm(&a.spec.spec)?;
            let v = interval::eval_ideal_weight(&t, &a.c, &a.x)?;
            Ok(Outcome::ok(json!({"c": a.c, "x": a.x, "value": v})))
        }
        IntervalCmd::Check(a) => {
            let t = load_tnorm(&a.spec.spec)?;
            let r = interval::continuity_equation_check(&t, &a.c, &a.x)?;
            Ok(Outcome::verdict(to_value(&r), r.equal))
        }
        IntervalCmd::Counterexample { spec, samples } => {
            let t = load_tnorm(&spec.spec)?;
            let r = interval::counterexample_report(&t, *samples)?;
            Ok(Outcome::verdict(to_value(&r), r.is_empty()))
        }
    }
}

fn quantale_cmd(c: &QuantaleCmd) -> Result<Outcome> {
    match c {
        QuantaleCmd::Validate(f) => match load_quantale_table(&f.file)? {
            Ok(table) => {
                let violations = quantale::validate(&table)?;
                let valid = violations.is_empty();
                let integral = if valid {
                    Some(FiniteQuantale::new(table)?.is_integral())
                } else {
                    None
                };
                Ok(Outcome::verdict(
                    json!({"valid": valid, "integral": integral, "violations": violations}),
                    valid,
                ))
            }
            Err(q) => Ok(Outcome::ok(json!({
                "valid": true,
                "integral": q.is_integral(),
                "violations": [],
            }))),
        },
        QuantaleCmd::Residuum { file, p, r } => {
            let q = load_quantale(&file.file)?;
            let v = q.residuum(p, r)?;
            Ok(Outcome::ok(json!({"p": p, "r": r, "value": v})))
        }
        QuantaleCmd::FromTnorm {
            spec,
            points,
            closure_cap,
        } => {
            let t = load_tnorm(&spec.spec)?;
            let q = FiniteQuantale::from_tnorm(&t, points, *closure_cap)?;
            Ok(Outcome::ok(to_value(&QuantaleJson::from_quantale(&q))))
        }
        QuantaleCmd::Standard { kind, n } => {
            let kind = match kind {
                StandardKind::Boolean => Standard::Boolean,
                StandardKind::GodelChain => Standard::GodelChain(*n),
                StandardKind::LukasiewiczChain => Standard::LukasiewiczChain(*n),
            };
            let q = FiniteQuantale::standard(kind)?;
            Ok(Outcome::ok(to_value(&QuantaleJson::from_quantale(&q))))
        }
    }
}

fn objects(a: &QCategory, labels: &[String]) -> Result<Vec<usize>> {
    labels
        .iter()
        .map(|l| a.index_of(l).map_err(Into::into))
        .collect()
}

fn elements(q: &FiniteQuantale, labels: &[String]) -> Result<Vec<usize>> {
    labels
        .iter()
        .map(|l| q.index_of(l).map_err(Into::into))
        .collect()
}

fn qcat_cmd(c: &QcatCmd, cap: usize) -> Result<Outcome> {
    match c {
        QcatCmd::Validate(f) => {
            let (q, j) = load_category_parts(&f.cat)?;
            let hom = j
                .hom
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|l| q.index_of(l))
                        .collect::<qdl_core::Result<Vec<_>>>()
                })
                .collect::<qdl_core::Result<Vec<_>>>()?;
            let violations = validate_category(&q, &j.objects, &hom)?;
            if !violations.is_empty() {
                let msgs: Vec<String> = violations.iter().map(|v| v.to_string()).collect();
                return Ok(Outcome::verdict(
                    json!({"valid": false, "violations": violations, "messages": msgs}),
                    false,
                ));
            }
            let a = j.build(q)?;
            let order: BTreeMap<&str, Vec<&str>> = a
                .objects()
                .map(|x| {
                    (
                        a.label(x),
                        a.objects()
                            .filter(|&y| a.below(x, y))
                            .map(|y| a.label(y))
                            .collect(),
                    )
                })
                .collect();
            Ok(Outcome::ok(json!({
                "valid": true,
                "violations": [],
                "separated": a.is_separated(),
                "integral": a.quantale().is_integral(),
                "below": order,
            })))
        }
        QcatCmd::Presheaf { cat, co } => {
            let a = load_category(&cat.cat)?;
            let p = if *co {
                PresheafCategory::copresheaves(&a, cap)?
            } else {
                PresheafCategory::presheaves(&a, cap)?
            };
            Ok(Outcome::ok(to_value(&CategoryJson::from_category(
                p.category(),
            ))))
        }
        QcatCmd::Sup { cat, weight, co } => {
            let a = load_category(&cat.cat)?;
            let v = elements(a.quantale(), weight)?;
            if v.len() != a.size() {
                bail!("expected {} values, got {}", a.size(), v.len());
            }
            let valid = if *co {
                qcat::is_coweight(&a, &v)
            } else {
                qcat::is_weight(&a, &v)
            };
            if !valid {
                let what = if *co { "coweight" } else { "weight" };
                return Err(qdl_core::Error::Shape(format!(
                    "({}) is not a {what}",
                    weight.join(",")
                ))
                .into());
            }
            let found = if *co {
                qcat::inf_coweight(&a, &v)
            } else {
                qcat::sup_weight(&a, &v)
            };
            let object = found.ok().map(|o| a.label(o).to_string());
            let key = if *co { "inf" } else { "sup" };
            Ok(Outcome::verdict(
                json!({"weight": weight, "exists": object.is_some(), key: object}),
                object.is_some(),
            ))
        }
        QcatCmd::Tensor { cat, p, x, co } => {
            let a = load_category(&cat.cat)?;
            let pe = a.quantale().index_of(p)?;
            let xo = a.index_of(x)?;
            let found = if *co {
                qcat::cotensor(&a, pe, xo)
            } else {
                qcat::tensor(&a, pe, xo)
            };
            let object = found.ok().map(|o| a.label(o).to_string());
            let key = if *co { "cotensor" } else { "tensor" };
            Ok(Outcome::verdict(
                json!({"p": p, "x": x, "exists": object.is_some(), key: object}),
                object.is_some(),
            ))
        }
        QcatCmd::Adjoint { cat, target, f, g } => {
            let a = load_category(&cat.cat)?;
            let b = match target {
                Some(path) => load_category(path)?,
                None => a.clone(),
            };
            let g_map = objects(&a, g)?;
            let g_fun =
                QFunctor::new(b.clone(), a.clone(), g_map).context("g is not a functor B → A")?;
            match f {
                Some(f) => {
                    let f_fun = QFunctor::new(a.clone(), b.clone(), objects(&b, f)?)
                        .context("f is not a functor A → B")?;
                    let adj = check_adjunction(&f_fun, &g_fun)?;
                    Ok(Outcome::verdict(json!({"adjoint": adj}), adj))
                }
                None => match find_left_adjoint(&g_fun) {
                    Ok(fl) => {
                        let map: BTreeMap<&str, &str> = a
                            .objects()
                            .map(|x| (a.label(x), b.label(fl.apply(x))))
                            .collect();
                        Ok(Outcome::ok(json!({"exists": true, "left_adjoint": map})))
                    }
                    Err(x) => Ok(Outcome::verdict(
                        json!({"exists": false, "no_image_for": a.label(x)}),
                        false,
                    )),
                },
            }
        }
    }
}
