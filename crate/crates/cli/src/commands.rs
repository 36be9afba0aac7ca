//! Command bodies, independent of argument parsing. Each returns a JSON
//! value, a human rendering and an exit code.

use serde::Serialize;
use serde_json::{json, Value};

use sympdec_core::homotopy::{Family, GroupQuery, Space};
use sympdec_core::induced::{self, FormulaContext, InducedOp, InducedResult, ZParam};
use sympdec_core::lifting::{self, DecisionReport, ObstructionKind};

use crate::verify::{self, Suite, VerifyConfig};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub json: Value,
    pub human: String,
    pub exit: u8,
}

impl Outcome {
    fn ok(json: Value, human: String) -> Self {
        Outcome {
            json,
            human,
            exit: EXIT_OK,
        }
    }

    pub fn error(msg: impl Into<String>) -> Self {
        let msg = msg.into();
        Outcome {
            json: json!({ "error": msg }),
            human: format!("error: {msg}"),
            exit: EXIT_USAGE,
        }
    }
}

fn to_json<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

pub fn pi(family: Family, n: u64, i: u64, space: Space) -> Outcome {
    if n == 0 {
        return Outcome::error("n must be at least 1");
    }
    let ans = GroupQuery { family, n, i, space }.answer();
    let prefix = match space {
        Space::Group => format!("pi_{i} {family}({n})"),
        Space::Classifying => format!("pi_{i} B{family}({n})"),
    };
    let human = format!("{prefix} = {}\n  {}", ans.group, ans.provenance);
    Outcome::ok(to_json(&ans), human)
}

pub struct InducedArgs {
    pub op: InducedOp,
    pub i: u64,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub r: Option<u64>,
    pub u: Option<u64>,
    pub v: Option<u64>,
    pub z: Option<u8>,
}

pub fn induced(args: &InducedArgs) -> Outcome {
    let mut ctx = FormulaContext::new(args.i);
    ctx.m = args.m;
    ctx.n = args.n;
    ctx.r = args.r;
    ctx.u = args.u;
    ctx.v = args.v;
    ctx.z = match args.z {
        None => ZParam::Unknown,
        Some(0) => ZParam::Zero,
        Some(1) => ZParam::One,
        Some(z) => return Outcome::error(format!("z must be 0 or 1, got {z}")),
    };
    let mut witness = None;
    if matches!(args.op, InducedOp::Ttilde | InducedOp::J) && (ctx.u.is_none() || ctx.v.is_none()) {
        let (Some(m), Some(n)) = (ctx.m, ctx.n) else {
            return Outcome::error("missing parameter `m` or `n`");
        };
        match lifting::bezout_uv(m, n) {
            Ok(w) => {
                ctx.u = Some(w.u);
                ctx.v = Some(w.v);
                witness = Some(w);
            }
            Err(e) => return Outcome::error(e.to_string()),
        }
    }
    match induced::evaluate(args.op, &ctx) {
        Ok(res) => render_induced(&res, &ctx, witness.map(|w| to_json(&w))),
        Err(e) => Outcome::error(e.to_string()),
    }
}

fn render_induced(res: &InducedResult, ctx: &FormulaContext, witness: Option<Value>) -> Outcome {
    let first = &res.candidates[0].hom;
    let z_dependent = !res.is_z_independent();
    let mut out = json!({
        "op": res.op.name(),
        "i": ctx.i,
        "source": to_json(first.source()),
        "target": to_json(first.target()),
        "matrix": if z_dependent { Value::Null } else { to_json(first)["matrix"].clone() },
        "isomorphism": if z_dependent { Value::Null } else { json!(first.is_isomorphism()) },
        "valid_range": res.op.valid_range(),
        "provenance": res.op.provenance(),
        "z_dependent": z_dependent,
    });
    if z_dependent {
        out["candidates"] = res
            .candidates
            .iter()
            .map(|c| {
                json!({
                    "z": c.z,
                    "matrix": to_json(&c.hom)["matrix"].clone(),
                    "isomorphism": c.hom.is_isomorphism(),
                })
            })
            .collect();
    }
    if let Some(w) = witness {
        out["witness"] = w;
    }
    let mut human = format!("{} at i = {}: {} -> {}\n", res.op, ctx.i, first.source(), first.target());
    for c in &res.candidates {
        if z_dependent {
            human.push_str(&format!("  z = {}: {}\n", c.z.unwrap_or(0), c.hom));
        } else {
            human.push_str(&format!("  {}\n", c.hom));
            break;
        }
    }
    human.push_str(&format!("  valid for {}\n  {}", res.op.valid_range(), res.op.provenance()));
    Outcome::ok(out, human)
}

fn render_decision(r: &DecisionReport) -> Outcome {
    let mut human = format!("verdict: {:?}\ntheorem: {}\n", r.verdict, r.theorem);
    for h in &r.hypotheses {
        human.push_str(&format!("  [{}] {}\n", if h.holds { "x" } else { " " }, h.name));
    }
    if let Some(f) = &r.factors {
        human.push_str(&format!("factors: {} and {}\n", f.first, f.second));
    }
    if let Some(w) = &r.witnesses {
        human.push_str(&format!(
            "bezout: u = {}, v = {}, vn - 4um^2 = {}, N = {}\n",
            w.u, w.v, w.sign, w.big_n
        ));
    }
    if let Some(o) = &r.obstruction {
        human.push_str(&format!("obstruction: degree {}, image {}\n", o.degree, o.image));
    }
    for note in &r.notes {
        human.push_str(&format!("note: {note}\n"));
    }
    Outcome::ok(to_json(r), human.trim_end().to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecideKind {
    Azumaya,
    Bundle,
}

pub fn decide(kind: DecideKind, m: u64, n: u64, dim: u64) -> Outcome {
    if m == 0 || n == 0 || dim == 0 {
        return Outcome::error("m, n and dim must be positive");
    }
    let r = match kind {
        DecideKind::Azumaya => lifting::decide_azumaya(m, n, dim),
        DecideKind::Bundle => lifting::decide_bundle(m, n, dim),
    };
    render_decision(&r)
}

pub fn example(kind: ObstructionKind, m: u64, n: u64) -> Outcome {
    match lifting::example_obstruction(kind, m, n) {
        Ok(r) => render_decision(&r),
        Err(e) => Outcome::error(e.to_string()),
    }
}

pub fn bezout(m: u64, n: u64) -> Outcome {
    match lifting::bezout_uv(m, n) {
        Ok(w) => Outcome::ok(
            to_json(&w),
            format!(
                "u = {}, v = {}: {}*{} - 4*{}*{}^2 = {}, N = {}",
                w.u, w.v, w.v, w.n, w.u, w.m, w.sign, w.big_n
            ),
        ),
        Err(e) => Outcome::error(e.to_string()),
    }
}

pub fn connectivity(m: u64, n: u64) -> Outcome {
    match lifting::connectivity_report(m, n) {
        Ok(r) => {
            let mut human = format!("J is {}-connected (d = {})\n", r.connectivity, r.d);
            for j in &r.degrees {
                human.push_str(&format!(
                    "  J_{:<2} iso={} onto={}  {}\n",
                    j.i, j.isomorphism, j.surjective, j.hom
                ));
            }
            Outcome::ok(to_json(&r), human.trim_end().to_string())
        }
        Err(e) => Outcome::error(e.to_string()),
    }
}

pub fn postnikov(m: u64, n: u64) -> Outcome {
    match lifting::postnikov_degree_check(m, n) {
        Ok(r) => {
            let mut human = format!("n = {}: {}\n", n, if r.pass { "pass" } else { "FAIL" });
            for s in &r.stages {
                human.push_str(&format!(
                    "  i = {:<3} degrees {:?} {}\n",
                    s.i,
                    s.degrees,
                    if s.pass { "ok" } else { "hits a multiple of 4" }
                ));
            }
            human.push_str("  k1 -> K(Z/2, 3): handled by factoring through the n-skeleton");
            let exit = if r.pass { EXIT_OK } else { EXIT_FAILURE };
            Outcome {
                json: to_json(&r),
                human,
                exit,
            }
        }
        Err(e) => Outcome::error(e.to_string()),
    }
}

pub fn run_verify(suite: Suite, cfg: &VerifyConfig, timing: bool) -> Outcome {
    match verify::run(suite, cfg, timing) {
        Ok(report) => {
            let mut human = String::new();
            let rows: Vec<&verify::VerifyReport> = if report.parts.is_empty() {
                vec![&report]
            } else {
                report.parts.iter().chain([&report]).collect()
            };
            for p in rows {
                human.push_str(&format!(
                    "{:<14} {:>7} cases {:>5} failures",
                    p.suite,
                    p.cases,
                    p.failures.len()
                ));
                if let Some(ms) = p.elapsed_ms {
                    human.push_str(&format!("  {ms} ms"));
                }
                human.push('\n');
            }
            for f in &report.failures {
                human.push_str(&format!("FAIL {} {} : {}\n", f.check, f.inputs, f.detail));
            }
            let exit = if report.passed() { EXIT_OK } else { EXIT_FAILURE };
            Outcome {
                json: to_json(&report),
                human: human.trim_end().to_string(),
                exit,
            }
        }
        Err(e) => Outcome::error(e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_json_shape() {
        let o = pi(Family::Sp, 1, 6, Space::Group);
        assert_eq!(o.json["group"], json!([12]));
        let o = pi(Family::SO, 9, 20, Space::Group);
        assert_eq!(o.json["group"], json!("out-of-range"));
    }

    #[test]
    fn induced_fills_bezout() {
        let o = induced(&InducedArgs {
            op: InducedOp::J,
            i: 4,
            m: Some(2),
            n: Some(9),
            r: None,
            u: None,
            v: None,
            z: None,
        });
        assert_eq!(o.exit, EXIT_OK);
        assert_eq!(o.json["matrix"], json!([[9, 4], [16, 7]]));
        assert_eq!(o.json["witness"]["u"], json!(4));
    }

    #[test]
    fn z_dependent_output() {
        let o = induced(&InducedArgs {
            op: InducedOp::J,
            i: 2,
            m: Some(2),
            n: Some(9),
            r: None,
            u: None,
            v: None,
            z: None,
        });
        assert_eq!(o.json["z_dependent"], json!(true));
        assert_eq!(o.json["candidates"][1]["matrix"], json!([[1, 0], [1, 1]]));
    }
}
