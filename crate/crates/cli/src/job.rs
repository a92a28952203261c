//! The job file format.
//!
//! ```text
//! # comments start with '#'
//! ring p=7 vars=x,y order=grevlex
//! ideal I = x^3 + y^5
//! ideal A = x, y
//! poly g = y
//! gamma = g
//! a = A
//! t = 3/2
//! emax = 4
//! cmd tau-along I
//! ```
//!
//! Settings: `e`, `emax`, `gamma`, `N`, `seed`, `degree-limit`, `format`
//! (`canonical` or `json`). `a` lists factor ideals and `t` their exponents.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use ftau_core::{
    parse_exponent, Error, Exponent, Ideal, Limits, MonomialOrder, Polynomial, Result, Ring,
    RingRef,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Gb,
    Colon,
    Intersect,
    Dim,
    Bracket,
    Root,
    Tau,
    TauAlong,
    Fedder,
    Sfr,
    Link,
    Claim2,
    Restrict,
}

impl CommandKind {
    pub const ALL: [CommandKind; 13] = [
        CommandKind::Gb,
        CommandKind::Colon,
        CommandKind::Intersect,
        CommandKind::Dim,
        CommandKind::Bracket,
        CommandKind::Root,
        CommandKind::Tau,
        CommandKind::TauAlong,
        CommandKind::Fedder,
        CommandKind::Sfr,
        CommandKind::Link,
        CommandKind::Claim2,
        CommandKind::Restrict,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Gb => "gb",
            CommandKind::Colon => "colon",
            CommandKind::Intersect => "intersect",
            CommandKind::Dim => "dim",
            CommandKind::Bracket => "bracket",
            CommandKind::Root => "root",
            CommandKind::Tau => "tau",
            CommandKind::TauAlong => "tau-along",
            CommandKind::Fedder => "fedder",
            CommandKind::Sfr => "sfr",
            CommandKind::Link => "link",
            CommandKind::Claim2 => "claim2",
            CommandKind::Restrict => "restrict",
        }
    }

    /// Number of ideal arguments.
    pub fn arity(self) -> usize {
        match self {
            CommandKind::Colon | CommandKind::Intersect => 2,
            CommandKind::Tau => 0,
            _ => 1,
        }
    }

    pub fn needs_seed(self) -> bool {
        matches!(
            self,
            CommandKind::Link | CommandKind::Claim2 | CommandKind::Restrict
        )
    }
}

impl fmt::Display for CommandKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CommandKind {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        CommandKind::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Canonical,
    Json,
}

#[derive(Clone, Debug)]
pub struct Params {
    pub e: u32,
    pub e_max: u32,
    pub factors: Vec<(Ideal, Exponent)>,
    pub gamma: Option<Polynomial>,
    pub n: Option<u32>,
    pub seed: Option<u64>,
    pub format: Format,
}

/// A fully validated job.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub ring: RingRef,
    pub ideals: BTreeMap<String, Ideal>,
    pub polys: BTreeMap<String, Polynomial>,
    pub command: CommandKind,
    pub args: Vec<Ideal>,
    pub arg_names: Vec<String>,
    pub params: Params,
}

fn perr(line: usize, token: &str, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        token: token.to_string(),
        message: message.into(),
    }
}

/// Attaches the job line to errors from the polynomial parser.
fn at_line(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { token, message, .. } => Error::Parse {
            line,
            token,
            message,
        },
        other => other,
    }
}

fn parse_num<T: FromStr>(line: usize, token: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| perr(line, token, "expected a nonnegative integer"))
}

fn parse_order(line: usize, s: &str) -> Result<MonomialOrder> {
    match s {
        "grevlex" => Ok(MonomialOrder::GrevLex),
        "lex" => Ok(MonomialOrder::Lex),
        _ => Err(perr(line, s, "unknown monomial order")),
    }
}

fn split_list(s: &str) -> Vec<&str> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .collect()
}

/// Parses a job document.
pub fn parse_job(text: &str) -> Result<JobSpec> {
    struct RingLine {
        line: usize,
        p: u64,
        vars: Vec<String>,
        order: MonomialOrder,
    }
    let mut ring_line: Option<RingLine> = None;
    let mut ideal_lines: Vec<(usize, String, String)> = Vec::new();
    let mut poly_lines: Vec<(usize, String, String)> = Vec::new();
    let mut settings: BTreeMap<String, (usize, String)> = BTreeMap::new();
    let mut cmd: Option<(usize, CommandKind, Vec<String>)> = None;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap().trim();
        if body.is_empty() {
            continue;
        }
        let (head, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        match head {
            "ring" => {
                if ring_line.is_some() {
                    return Err(perr(line, "ring", "ring declared twice"));
                }
                let (mut p, mut vars, mut order) = (None, None, MonomialOrder::GrevLex);
                for kv in rest.split_whitespace() {
                    let (key, val) = kv
                        .split_once('=')
                        .ok_or_else(|| perr(line, kv, "expected key=value"))?;
                    match key {
                        "p" => p = Some(parse_num::<u64>(line, val)?),
                        "vars" => {
                            vars = Some(split_list(val).iter().map(|s| s.to_string()).collect())
                        }
                        "order" => order = parse_order(line, val)?,
                        _ => return Err(perr(line, key, "unknown ring attribute")),
                    }
                }
                ring_line = Some(RingLine {
                    line,
                    p: p.ok_or_else(|| perr(line, "ring", "missing p="))?,
                    vars: vars.ok_or_else(|| perr(line, "ring", "missing vars="))?,
                    order,
                });
            }
            "ideal" => {
                let (name, gens) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(line, rest, "expected `ideal NAME = generators`"))?;
                let name = name.trim();
                if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(perr(line, name, "bad ideal name"));
                }
                if ideal_lines.iter().any(|(_, n, _)| n == name) {
                    return Err(perr(line, name, "ideal declared twice"));
                }
                ideal_lines.push((line, name.to_string(), gens.trim().to_string()));
            }
            "poly" => {
                let (name, text) = rest
                    .split_once('=')
                    .ok_or_else(|| perr(line, rest, "expected `poly NAME = expression`"))?;
                let name = name.trim();
                if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(perr(line, name, "bad polynomial name"));
                }
                if poly_lines.iter().any(|(_, n, _)| n == name) {
                    return Err(perr(line, name, "polynomial declared twice"));
                }
                poly_lines.push((line, name.to_string(), text.trim().to_string()));
            }
            "cmd" => {
                if cmd.is_some() {
                    return Err(perr(line, "cmd", "only one command per job"));
                }
                let mut parts = rest.split_whitespace();
                let name = parts
                    .next()
                    .ok_or_else(|| perr(line, "cmd", "missing command name"))?;
                let kind: CommandKind = name
                    .parse()
                    .map_err(|_| perr(line, name, "unknown command"))?;
                cmd = Some((line, kind, parts.map(String::from).collect()));
            }
            _ => {
                let (key, val) = body
                    .split_once('=')
                    .ok_or_else(|| perr(line, head, "unknown statement"))?;
                let key = key.trim();
                const KEYS: [&str; 9] = [
                    "e",
                    "emax",
                    "gamma",
                    "N",
                    "seed",
                    "degree-limit",
                    "format",
                    "a",
                    "t",
                ];
                if !KEYS.contains(&key) {
                    return Err(perr(line, key, "unknown setting"));
                }
                settings.insert(key.to_string(), (line, val.trim().to_string()));
            }
        }
    }

    let rl = ring_line.ok_or_else(|| perr(0, "", "missing `ring` line"))?;
    let mut limits = Limits::default();
    if let Some((line, v)) = settings.get("degree-limit") {
        limits.degree_limit = parse_num(*line, v)?;
    }
    let ring = Ring::with_limits(rl.p, &rl.vars, rl.order, limits).map_err(|e| match e {
        Error::InvalidInput(m) => perr(rl.line, "ring", m),
        other => other,
    })?;

    let mut ideals = BTreeMap::new();
    for (line, name, gens) in ideal_lines {
        let polys = split_list(&gens)
            .into_iter()
            .map(|g| Polynomial::parse(&ring, g).map_err(|e| at_line(line, e)))
            .collect::<Result<Vec<_>>>()?;
        ideals.insert(name, Ideal::new(&ring, polys)?);
    }

    let mut polys = BTreeMap::new();
    for (line, name, text) in poly_lines {
        polys.insert(
            name,
            Polynomial::parse(&ring, &text).map_err(|e| at_line(line, e))?,
        );
    }

    let lookup = |line: usize, name: &str| -> Result<Ideal> {
        ideals
            .get(name)
            .cloned()
            .ok_or_else(|| perr(line, name, "undefined ideal"))
    };

    let (cline, command, arg_names) = cmd.ok_or_else(|| perr(0, "", "missing `cmd` line"))?;
    if arg_names.len() != command.arity() {
        return Err(perr(
            cline,
            command.name(),
            format!("expects {} ideal argument(s)", command.arity()),
        ));
    }
    let args = arg_names
        .iter()
        .map(|n| lookup(cline, n))
        .collect::<Result<Vec<_>>>()?;

    let mut factors = Vec::new();
    if let Some((aline, names)) = settings.get("a") {
        let names = split_list(names);
        let ts: Vec<(usize, String)> = match settings.get("t") {
            Some((tline, ts)) => split_list(ts)
                .into_iter()
                .map(|t| (*tline, t.to_string()))
                .collect(),
            None => return Err(perr(*aline, "a", "factors given without `t`")),
        };
        if ts.len() != names.len() {
            return Err(perr(*aline, "t", "`a` and `t` have different lengths"));
        }
        for (name, (tline, t)) in names.iter().zip(ts) {
            let ideal = lookup(*aline, name)?;
            let r =
                parse_exponent(&t).map_err(|_| perr(tline, &t, "expected a rational num/den"))?;
            if *r.numer() == 0 {
                return Err(perr(tline, &t, "exponents must be positive"));
            }
            if ideal.is_zero() {
                return Err(perr(*aline, name, "factor ideal is zero"));
            }
            factors.push((ideal, r));
        }
    } else if let Some((tline, t)) = settings.get("t") {
        // a lone `t` still has to be a valid rational
        for t in split_list(t) {
            parse_exponent(t).map_err(|_| perr(*tline, t, "expected a rational num/den"))?;
        }
    }

    let get_num = |key: &str| -> Result<Option<u64>> {
        settings
            .get(key)
            .map(|(line, v)| parse_num::<u64>(*line, v))
            .transpose()
    };
    let to_u32 = |key: &str, v: u64| -> Result<u32> {
        u32::try_from(v).map_err(|_| perr(settings[key].0, &v.to_string(), "value too large"))
    };
    let e = match get_num("e")? {
        Some(v) => to_u32("e", v)?,
        None => 1,
    };
    let e_max = match get_num("emax")? {
        Some(v) => to_u32("emax", v)?,
        None => 4,
    };
    let n = match get_num("N")? {
        Some(0) => return Err(perr(settings["N"].0, "0", "N must be positive")),
        Some(v) => Some(to_u32("N", v)?),
        None => None,
    };
    let gamma = settings
        .get("gamma")
        .map(|(line, g)| match polys.get(g) {
            Some(p) => Ok(p.clone()),
            None => Polynomial::parse(&ring, g).map_err(|e| at_line(*line, e)),
        })
        .transpose()?;
    let format = match settings.get("format") {
        None => Format::Canonical,
        Some((_, f)) if f == "canonical" => Format::Canonical,
        Some((_, f)) if f == "json" => Format::Json,
        Some((line, f)) => return Err(perr(*line, f, "format must be canonical or json")),
    };
    let seed = get_num("seed")?;
    if command.needs_seed() && seed.is_none() {
        return Err(perr(
            cline,
            command.name(),
            "randomized command needs an explicit seed",
        ));
    }

    Ok(JobSpec {
        ring,
        ideals,
        polys,
        command,
        args,
        arg_names,
        params: Params {
            e,
            e_max,
            factors,
            gamma,
            n,
            seed,
            format,
        },
    })
}
