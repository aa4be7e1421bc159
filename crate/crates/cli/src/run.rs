//! Command dispatch: resolve named objects from the problem file, run one
//! library operation, and render the outcome as a canonical JSON envelope
//! `{command, ok, result, report}`.
//!
//! Ideals are rendered as their reduced Groebner basis, each element
//! integer-cleared with positive leading coefficient, sorted ascending by
//! leading monomial — a canonical, byte-stable presentation.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde_json::{json, Value};

use idealclosure::closure::{
    self, closure_ascent, grow_integral_elements, is_integrally_closed, jacobian_test,
    JacobianVariant, Method, Verdict,
};
use idealclosure::matrix::pfaffians;
use idealclosure::monomial_ideal::{brute_force_oracle, monomial_integral_closure};
use idealclosure::parse::parse_polynomial;
use idealclosure::rees::{
    colon_ascent_chain, hypersurface_normality, is_reduction, kernel_of_ring_map,
    power_closure_check, rees_presentation,
};
use idealclosure::{Error, GroebnerConfig, IdealHandle};

use crate::problem::ProblemFile;

pub struct CommandOutput {
    pub json: Value,
    pub exit: i32,
}

pub const COMMANDS: &[&str] = &[
    "gb",
    "colon",
    "intersect",
    "saturate",
    "dim",
    "height",
    "unmixed",
    "gci",
    "radical0",
    "closed",
    "grow",
    "ascend",
    "jacobian-test",
    "gorenstein-test",
    "mono-closure",
    "rees-present",
    "rees-ascend",
    "reduction",
    "power-check",
    "pfaffians",
    "kernel",
    "hyp-normal",
    "witness",
];

/// Boolean flags (present/absent, no value).
pub const BOOL_FLAGS: &[&str] = &["assert-gen-gorenstein"];

struct Ctx<'a> {
    problem: &'a ProblemFile,
    flags: &'a BTreeMap<String, String>,
    bools: &'a BTreeSet<String>,
    limits: GroebnerConfig,
}

impl<'a> Ctx<'a> {
    fn flag(&self, name: &str) -> Result<&str, Error> {
        self.flags
            .get(name)
            .map(|s| s.as_str())
            .ok_or_else(|| Error::Degenerate(format!("missing required flag --{name}")))
    }

    fn uint_flag(&self, name: &str, default: u32) -> Result<u32, Error> {
        match self.flags.get(name) {
            None => Ok(default),
            Some(v) => v
                .parse::<u32>()
                .map_err(|_| Error::Degenerate(format!("flag --{name} expects an integer"))),
        }
    }

    fn ideal(&self, flag: &str) -> Result<IdealHandle, Error> {
        let name = self.flag(flag)?;
        let gens = self
            .problem
            .ideals
            .get(name)
            .ok_or_else(|| Error::Degenerate(format!("unknown ideal `{name}`")))?;
        Ok(IdealHandle::new(Arc::clone(&self.problem.ring), gens.clone())?
            .with_limits(self.limits))
    }

    fn render_ideal(&self, handle: &IdealHandle) -> Result<Value, Error> {
        render_basis(handle)
    }
}

fn render_basis(handle: &IdealHandle) -> Result<Value, Error> {
    let gb = handle.gb()?;
    Ok(json!(handle.ring().render_generators(gb.polys())))
}

fn envelope(command: &str, result: Value, report: Value) -> Value {
    json!({
        "ok": true,
        "command": command,
        "result": result,
        "report": report,
    })
}

fn error_exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } => 2,
        Error::HypothesesNotMet(_) | Error::RefutedRadical(_) => 3,
        Error::PairLimitExceeded { .. } | Error::TermLimitExceeded { .. } => 4,
        _ => 1,
    }
}

fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::Parse { .. } => "parse",
        Error::HypothesesNotMet(_) => "hypotheses-not-met",
        Error::RefutedRadical(_) => "refuted-radical",
        Error::PairLimitExceeded { .. } | Error::TermLimitExceeded { .. } => "resource-limit",
        _ => "error",
    }
}

pub fn error_output(command: &str, err: &Error) -> CommandOutput {
    let mut json = json!({
        "ok": false,
        "command": command,
        "error": {
            "kind": error_kind(err),
            "message": err.to_string(),
        },
    });
    if let Error::Parse { line, col, .. } = err {
        json["error"]["line"] = json!(line);
        json["error"]["col"] = json!(col);
    }
    CommandOutput {
        json,
        exit: error_exit_code(err),
    }
}

pub fn run(
    command: &str,
    flags: &BTreeMap<String, String>,
    bools: &BTreeSet<String>,
    problem: &ProblemFile,
) -> CommandOutput {
    let mut limits = GroebnerConfig::default();
    if let Some(v) = flags.get("max-pairs") {
        match v.parse::<usize>() {
            Ok(n) => limits.max_pairs = n,
            Err(_) => {
                return error_output(
                    command,
                    &Error::Degenerate("flag --max-pairs expects an integer".into()),
                )
            }
        }
    }
    let ctx = Ctx {
        problem,
        flags,
        bools,
        limits,
    };
    match dispatch(command, &ctx) {
        Ok(out) => out,
        Err(e) => error_output(command, &e),
    }
}

fn dispatch(command: &str, ctx: &Ctx) -> Result<CommandOutput, Error> {
    let out = match command {
        "gb" => {
            let ideal = ctx.ideal("ideal")?;
            let result = ctx.render_ideal(&ideal)?;
            let report = json!({ "order": ideal.gb()?.order().name() });
            CommandOutput {
                json: envelope(command, result, report),
                exit: 0,
            }
        }
        "colon" => {
            let num = ctx.ideal("num")?;
            let den = ctx.ideal("den")?;
            let result = ctx.render_ideal(&num.colon(&den)?)?;
            CommandOutput {
                json: envelope(command, result, Value::Null),
                exit: 0,
            }
        }
        "intersect" => {
            let first = ctx.ideal("first")?;
            let second = ctx.ideal("second")?;
            let result = ctx.render_ideal(&first.intersect(&second)?)?;
            CommandOutput {
                json: envelope(command, result, Value::Null),
                exit: 0,
            }
        }
        "saturate" => {
            let num = ctx.ideal("num")?;
            let den = ctx.ideal("den")?;
            let result = ctx.render_ideal(&num.saturate(&den)?)?;
            CommandOutput {
                json: envelope(command, result, Value::Null),
                exit: 0,
            }
        }
        "dim" => {
            let ideal = ctx.ideal("ideal")?;
            CommandOutput {
                json: envelope(command, json!(ideal.dimension()?), Value::Null),
                exit: 0,
            }
        }
        "height" => {
            let ideal = ctx.ideal("ideal")?;
            CommandOutput {
                json: envelope(command, json!(ideal.height()?), Value::Null),
                exit: 0,
            }
        }
        "unmixed" => {
            let ideal = ctx.ideal("ideal")?;
            let seed: u64 = ctx
                .flag("seed")?
                .parse()
                .map_err(|_| Error::Degenerate("flag --seed expects an integer".into()))?;
            let result = ideal.is_unmixed(seed)?;
            let report = json!({ "seed": seed });
            CommandOutput {
                json: envelope(command, json!(result), report),
                exit: 0,
            }
        }
        "gci" => {
            let ideal = ctx.ideal("ideal")?;
            CommandOutput {
                json: envelope(command, json!(ideal.is_generically_ci()?), Value::Null),
                exit: 0,
            }
        }
        "radical0" => {
            let ideal = ctx.ideal("ideal")?;
            let result = ctx.render_ideal(&ideal.radical_zero_dim()?)?;
            CommandOutput {
                json: envelope(command, result, Value::Null),
                exit: 0,
            }
        }
        "closed" => {
            let ideal = ctx.ideal("ideal")?;
            let rad = ctx.ideal("radical")?;
            let method = Method::from_name(ctx.flags.get("method").map(|s| s.as_str()).unwrap_or("auto"))
                .ok_or_else(|| Error::Degenerate("unknown --method".into()))?;
            let assert_gg = ctx.bools.contains("assert-gen-gorenstein");
            let report = is_integrally_closed(&ideal, &rad, method, assert_gg)?;
            let exit = if report.verdict == Verdict::Inconclusive {
                3
            } else {
                0
            };
            let json_report = render_closedness_report(&report)?;
            CommandOutput {
                json: envelope(command, json!(report.verdict.name()), json_report),
                exit,
            }
        }
        "grow" => {
            let ideal = ctx.ideal("ideal")?;
            let rad = ctx.ideal("radical")?;
            let growth = grow_integral_elements(&ideal, &rad)?;
            let result = render_basis(&growth.grown)?;
            let mut witnesses = serde_json::Map::new();
            for (name, handle) in &growth.witnesses {
                witnesses.insert(name.clone(), render_basis(handle)?);
            }
            let report = json!({
                "certified": growth.certified,
                "witnesses": Value::Object(witnesses),
                "new_elements": !growth.grown.equal(&ideal)?,
            });
            CommandOutput {
                json: envelope(command, result, report),
                exit: 0,
            }
        }
        "ascend" => {
            let ideal = ctx.ideal("ideal")?;
            let rad = ctx.ideal("radical")?;
            let rounds = ctx.uint_flag("max-rounds", 8)? as usize;
            let ascent = closure_ascent(&ideal, &rad, rounds)?;
            let chain: Vec<Value> = ascent
                .chain
                .iter()
                .map(render_basis)
                .collect::<Result<_, _>>()?;
            let report = json!({
                "status": ascent.status.name(),
                "rounds": ascent.chain.len() - 1,
            });
            CommandOutput {
                json: envelope(command, json!(chain), report),
                exit: 0,
            }
        }
        "jacobian-test" => {
            let ideal = ctx.ideal("ideal")?;
            let variant = JacobianVariant::from_name(
                ctx.flags
                    .get("variant")
                    .map(|s| s.as_str())
                    .unwrap_or("ideal-plus-minors"),
            )
            .ok_or_else(|| Error::Degenerate("unknown --variant".into()))?;
            let result = jacobian_test(&ideal, variant)?;
            let report = json!({ "variant": variant.name() });
            CommandOutput {
                json: envelope(command, json!(result), report),
                exit: 0,
            }
        }
        "gorenstein-test" => {
            let ideal = ctx.ideal("ideal")?;
            let result = closure::gorenstein_gci_test(&ideal)?;
            CommandOutput {
                json: envelope(command, json!(result), Value::Null),
                exit: 0,
            }
        }
        "mono-closure" => {
            let ideal = ctx.ideal("ideal")?;
            let closure = monomial_integral_closure(&ideal)?;
            let result = ctx.render_ideal(&closure)?;
            let report = match ctx.flags.get("oracle-K") {
                None => Value::Null,
                Some(v) => {
                    let k: u32 = v.parse().map_err(|_| {
                        Error::Degenerate("flag --oracle-K expects an integer".into())
                    })?;
                    let gens = idealclosure::monomial_ideal::monomial_generators(&ideal)?
                        .ok_or(Error::NotMonomial)?;
                    let exps: Vec<Vec<u32>> =
                        gens.iter().map(|m| m.exponents().to_vec()).collect();
                    let agrees = closure.gb()?.polys().iter().all(|p| {
                        brute_force_oracle(p.leading_monomial().unwrap(), &exps, k)
                    });
                    json!({ "oracle_k": k, "oracle_agrees": agrees })
                }
            };
            CommandOutput {
                json: envelope(command, result, report),
                exit: 0,
            }
        }
        "rees-present" => {
            let ideal = ctx.ideal("ideal")?;
            let pres = rees_presentation(&ideal)?;
            let q = pres.ideal();
            let result = render_basis(q)?;
            let report = json!({
                "tag_ring": q.ring().vars(),
                "tags": pres.tag_names(),
            });
            CommandOutput {
                json: envelope(command, result, report),
                exit: 0,
            }
        }
        "rees-ascend" => {
            let ideal = ctx.ideal("ideal")?;
            let rad = ctx.ideal("radical")?;
            let kmax = ctx.uint_flag("kmax", 3)?;
            let chain = colon_ascent_chain(&ideal, &rad, kmax)?;
            let mut steps = Vec::new();
            for step in &chain {
                steps.push(json!({
                    "k": step.k,
                    "ideal": render_basis(&step.ideal)?,
                    "reduction_ok": step.reduction_ok,
                }));
            }
            CommandOutput {
                json: envelope(command, json!(steps), Value::Null),
                exit: 0,
            }
        }
        "reduction" => {
            let sub = ctx.ideal("sub")?;
            let ideal = ctx.ideal("ideal")?;
            let rmax = ctx.uint_flag("rmax", 5)?;
            let r = is_reduction(&sub, &ideal, rmax)?;
            let report = json!({ "rmax": rmax });
            CommandOutput {
                json: envelope(command, json!(r), report),
                exit: 0,
            }
        }
        "power-check" => {
            let pair = ctx.ideal("pair")?;
            let closure_ideal = ctx.ideal("closure")?;
            let nmax = ctx.uint_flag("nmax", 3)?;
            let result = power_closure_check(&pair, &closure_ideal, nmax)?;
            let report = json!({ "nmax": nmax });
            CommandOutput {
                json: envelope(command, json!(result), report),
                exit: 0,
            }
        }
        "pfaffians" => {
            let name = ctx.flag("matrix")?;
            let matrix = ctx
                .problem
                .matrices
                .get(name)
                .ok_or_else(|| Error::Degenerate(format!("unknown matrix `{name}`")))?;
            let size = ctx.uint_flag("size", matrix.rows() as u32)? as usize;
            let pfs = pfaffians(&ctx.problem.ring, matrix, size)?;
            let result = json!(ctx.problem.ring.render_generators(&pfs));
            CommandOutput {
                json: envelope(command, result, Value::Null),
                exit: 0,
            }
        }
        "kernel" => {
            let ideal = ctx.ideal("ideal")?;
            let kernel = kernel_of_ring_map(&ctx.problem.ring, ideal.gens(), &ctx.limits)?;
            let result = render_basis(&kernel)?;
            let report = json!({ "tag_ring": kernel.ring().vars() });
            CommandOutput {
                json: envelope(command, result, report),
                exit: 0,
            }
        }
        "hyp-normal" => {
            let ideal = ctx.ideal("ideal")?;
            if ideal.gens().len() != 1 {
                return Err(Error::Degenerate(
                    "hyp-normal expects a principal ideal".into(),
                ));
            }
            let result = hypersurface_normality(&ctx.problem.ring, &ideal.gens()[0])?;
            CommandOutput {
                json: envelope(command, json!(result), Value::Null),
                exit: 0,
            }
        }
        "witness" => {
            let ideal = ctx.ideal("ideal")?;
            let expr = ctx.flag("element")?;
            let f = parse_polynomial(&ctx.problem.ring, expr)?;
            let rmax = ctx.uint_flag("rmax", 5)?;
            let result = closure::integrality_witness_check(&f, &ideal, rmax)?;
            let report = json!({ "rmax": rmax });
            CommandOutput {
                json: envelope(command, json!(result), report),
                exit: 0,
            }
        }
        other => {
            return Err(Error::Degenerate(format!(
                "unknown command `{other}` (expected one of: {})",
                COMMANDS.join(", ")
            )))
        }
    };
    Ok(out)
}

fn render_closedness_report(report: &closure::ClosednessReport) -> Result<Value, Error> {
    let mut checks = serde_json::Map::new();
    for (name, status) in &report.hypothesis_checks {
        checks.insert(name.clone(), json!(status.name()));
    }
    let mut witnesses = serde_json::Map::new();
    for (name, handle) in &report.witnesses {
        witnesses.insert(name.clone(), render_basis(handle)?);
    }
    Ok(json!({
        "method": report.method.name(),
        "hypothesis_checks": Value::Object(checks),
        "raw_result": report.raw_result,
        "verdict": report.verdict.name(),
        "witnesses": Value::Object(witnesses),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::problem::parse_problem;

    fn problem() -> ProblemFile {
        parse_problem("ring Q[x,y]\nideal I = x^2, x*y\nideal M = x, y\n").unwrap()
    }

    fn go(command: &str, pairs: &[(&str, &str)]) -> CommandOutput {
        let flags: BTreeMap<String, String> = pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        run(command, &flags, &BTreeSet::new(), &problem())
    }

    #[test]
    fn colon_through_dispatch() {
        let out = go("colon", &[("num", "I"), ("den", "M")]);
        assert_eq!(out.exit, 0);
        assert_eq!(out.json["result"], json!(["x"]));
    }

    #[test]
    fn unknown_ideal_is_an_error() {
        let out = go("dim", &[("ideal", "NoSuch")]);
        assert_eq!(out.exit, 1);
        assert_eq!(out.json["ok"], json!(false));
    }

    #[test]
    fn missing_flag_is_an_error() {
        let out = go("colon", &[("num", "I")]);
        assert_eq!(out.exit, 1);
    }

    #[test]
    fn unknown_command_is_an_error() {
        let out = go("frobnicate", &[]);
        assert_eq!(out.exit, 1);
        assert_eq!(out.json["ok"], json!(false));
    }

    #[test]
    fn seed_is_required_for_unmixed() {
        let out = go("unmixed", &[("ideal", "I")]);
        assert_eq!(out.exit, 1);
        let out = go("unmixed", &[("ideal", "I"), ("seed", "3")]);
        assert_eq!(out.exit, 0);
    }
}

