use serde_json::{json, Map, Value};

use ftau_core::{Error, Ideal, Result};

use crate::exec::{Execution, Outcome};
use crate::job::{CommandKind, Format};

fn lines(i: &Ideal) -> Result<Vec<String>> {
    i.canonical_lines()
}

fn join(v: &[String]) -> String {
    let mut s = v.join("\n");
    s.push('\n');
    s
}

/// Canonical text: deterministic, no timings.
pub fn canonical(out: &Outcome) -> Result<String> {
    Ok(match out {
        Outcome::Ideal(i) => join(&lines(i)?),
        Outcome::Tau { comp, .. } => join(&lines(comp.result.as_ref().ok_or(
            Error::NotStabilized {
                e_max: comp.chain.len() as u32,
            },
        )?)?),
        Outcome::Dim { dimension, height } => format!("dimension {dimension}\nheight {height}\n"),
        Outcome::Fedder { holds, .. } => format!("{holds}\n"),
        Outcome::Sfr(s) => {
            let w = s.witness_e.map_or("none".to_string(), |e| e.to_string());
            format!(
                "holds {}\nwitness_e {w}\nsearched_up_to {}\n",
                s.holds, s.searched_up_to
            )
        }
        Outcome::Link { fs, link, .. } => {
            let mut v: Vec<String> = fs.iter().map(|f| format!("f = {f}")).collect();
            v.push(format!("link = {link}"));
            join(&v)
        }
        Outcome::Claim2 { link, report } => format!(
            "holds {}\nequality {}\nq {}\nlink = {link}\n",
            report.holds, report.equality, report.q
        ),
        Outcome::Restrict(r) => {
            let mut v = vec!["lhs:".to_string()];
            v.extend(r.lhs.iter().map(|g| format!("  {g}")));
            v.push("rhs:".into());
            v.extend(r.rhs.iter().map(|g| format!("  {g}")));
            v.push(format!("containment_holds {}", r.containment_holds));
            v.push(format!("equality_holds {}", r.equality_holds));
            join(&v)
        }
    })
}

/// JSON value: the same generator strings plus diagnostics and timing.
pub fn json_value(cmd: CommandKind, ex: &Execution) -> Result<Value> {
    let mut m = Map::new();
    m.insert("command".into(), json!(cmd.name()));
    match &ex.outcome {
        Outcome::Ideal(i) => {
            m.insert("generators".into(), json!(lines(i)?));
        }
        Outcome::Tau { comp, gamma } => {
            let gens = match &comp.result {
                Some(r) => lines(r)?,
                None => Vec::new(),
            };
            m.insert("generators".into(), json!(gens));
            m.insert("stabilized_at".into(), json!(comp.stabilized_at));
            m.insert("n_used".into(), json!(comp.n_used));
            m.insert("certified".into(), json!(comp.certified));
            m.insert("gamma".into(), json!(gamma.to_string()));
            let chain = comp.chain.iter().map(lines).collect::<Result<Vec<_>>>()?;
            m.insert("chain".into(), json!(chain));
        }
        Outcome::Dim { dimension, height } => {
            m.insert("dimension".into(), json!(dimension));
            m.insert("height".into(), json!(height));
        }
        Outcome::Fedder { e, holds } => {
            m.insert("e".into(), json!(e));
            m.insert("holds".into(), json!(holds));
        }
        Outcome::Sfr(s) => {
            m.insert("result".into(), json!(s));
        }
        Outcome::Link { fs, link, height } => {
            let fs: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
            m.insert("height".into(), json!(height));
            m.insert("regular_sequence".into(), json!(fs));
            m.insert("link_generator".into(), json!(link.to_string()));
        }
        Outcome::Claim2 { link, report } => {
            m.insert("link_generator".into(), json!(link.to_string()));
            m.insert("result".into(), json!(report));
        }
        Outcome::Restrict(r) => {
            let Value::Object(obj) = json!(r) else {
                unreachable!()
            };
            m.extend(obj);
        }
    }
    m.insert("elapsed_ms".into(), json!(ex.elapsed_ms as u64));
    Ok(Value::Object(m))
}

/// Structured error; `NotStabilized` carries only its bound.
pub fn error_value(e: &Error) -> Value {
    let mut m = Map::new();
    m.insert("error".into(), json!(e.kind()));
    match e {
        Error::NotStabilized { e_max } => {
            m.insert("e_max".into(), json!(e_max));
        }
        Error::Parse {
            line,
            token,
            message,
        } => {
            m.insert("line".into(), json!(line));
            m.insert("token".into(), json!(token));
            m.insert("message".into(), json!(message));
        }
        other => {
            m.insert("message".into(), json!(other.to_string()));
        }
    }
    Value::Object(m)
}

/// Formats a finished job; errors are rendered, not propagated.
pub fn emit_result(cmd: CommandKind, res: &Result<Execution>, format: Format) -> String {
    match (res, format) {
        (Ok(ex), Format::Canonical) => {
            canonical(&ex.outcome).unwrap_or_else(|e| format!("error: {e}\n"))
        }
        (Ok(ex), Format::Json) => match json_value(cmd, ex) {
            Ok(v) => format!("{v}\n"),
            Err(e) => format!("{}\n", error_value(&e)),
        },
        (Err(e), Format::Canonical) => format!("error: {e}\n"),
        (Err(e), Format::Json) => format!("{}\n", error_value(e)),
    }
}
