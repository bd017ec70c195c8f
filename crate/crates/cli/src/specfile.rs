//! Line-oriented ideal spec files.
//!
//! ```text
//! # comment
//! ring X, Y, Z over QQ
//! ideal I = Y^3, X^3*Y^2, Z^7
//! ideal J = X^7 + Z^7, X^2*Z, Y^3
//! set order=grevlex nmax_reduction=6 nmax_vv=auto mode=exact
//! ```

use std::sync::Arc;

use blowup_core::groebner::Ideal;
use blowup_core::kernel::{PrimeModulus, DEFAULT_PRIME};
use blowup_core::poly::{parse_poly, FieldKind, MonomialOrder, RingSpec};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Modular,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exact => "exact",
            Mode::Modular => "modular",
        }
    }

    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "exact" => Some(Mode::Exact),
            "modular" => Some(Mode::Modular),
            _ => None,
        }
    }
}

/// Analysis bounds and switches. `None` bounds mean the engine default.
#[derive(Clone, Debug, PartialEq)]
pub struct Options {
    pub order: String,
    pub mode: Mode,
    pub nmax_reduction: u32,
    pub nmax_vv: Option<u32>,
    pub nmax_joint: u32,
    pub nmax_colon: u32,
    pub nmax_fiber: Option<u32>,
    /// Per-call Gröbner watchdog in seconds.
    pub timeout: Option<f64>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            order: "grevlex".into(),
            mode: Mode::Exact,
            nmax_reduction: blowup_core::blowup::DEFAULT_REDUCTION_BOUND,
            nmax_vv: None,
            nmax_joint: blowup_core::blowup::DEFAULT_JOINT_BOUND,
            nmax_colon: blowup_core::blowup::DEFAULT_COLON_BOUND,
            nmax_fiber: None,
            timeout: None,
        }
    }
}

/// Command-line values that win over `set` lines.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub order: Option<String>,
    pub mode: Option<Mode>,
    pub nmax_reduction: Option<u32>,
    pub nmax_vv: Option<u32>,
    pub nmax_joint: Option<u32>,
    pub nmax_colon: Option<u32>,
    pub nmax_fiber: Option<u32>,
    pub timeout: Option<f64>,
}

impl Options {
    pub fn apply(&mut self, o: &Overrides) {
        if let Some(v) = &o.order {
            self.order = v.clone();
        }
        if let Some(v) = o.mode {
            self.mode = v;
        }
        if let Some(v) = o.nmax_reduction {
            self.nmax_reduction = v;
        }
        if let Some(v) = o.nmax_vv {
            self.nmax_vv = Some(v);
        }
        if let Some(v) = o.nmax_joint {
            self.nmax_joint = v;
        }
        if let Some(v) = o.nmax_colon {
            self.nmax_colon = v;
        }
        if let Some(v) = o.nmax_fiber {
            self.nmax_fiber = Some(v);
        }
        if let Some(v) = o.timeout {
            self.timeout = Some(v);
        }
    }

    pub fn monomial_order(&self) -> Result<MonomialOrder, CliError> {
        MonomialOrder::parse(&self.order).ok_or_else(|| CliError::Usage(format!("unknown order `{}`", self.order)))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct IdealSpecFile {
    pub vars: Vec<String>,
    pub field: FieldKind,
    pub i: Vec<String>,
    pub j: Option<Vec<String>>,
    pub options: Options,
}

fn parse_err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { line, message: message.into() }
}

fn split_list(text: &str) -> Vec<String> {
    text.split(',').map(|s| s.trim().to_string()).collect()
}

fn parse_field(text: &str, line: usize) -> Result<FieldKind, CliError> {
    let t = text.trim();
    if t == "QQ" {
        return Ok(FieldKind::Rationals);
    }
    let p = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| parse_err(line, format!("unknown field `{t}`")))?;
    let p: u64 = p.trim().parse().map_err(|_| parse_err(line, format!("bad prime `{p}`")))?;
    let m = PrimeModulus::new(p).map_err(|e| parse_err(line, e.to_string()))?;
    Ok(FieldKind::Prime(m))
}

fn parse_u32(key: &str, v: &str, line: usize) -> Result<u32, CliError> {
    v.parse().map_err(|_| parse_err(line, format!("`{key}` needs a nonnegative integer, got `{v}`")))
}

fn parse_set(rest: &str, opts: &mut Options, line: usize) -> Result<(), CliError> {
    for item in rest.split_whitespace() {
        let (k, v) = item.split_once('=').ok_or_else(|| parse_err(line, format!("expected key=value, got `{item}`")))?;
        match k {
            "order" => opts.order = v.to_string(),
            "mode" => opts.mode = Mode::parse(v).ok_or_else(|| parse_err(line, format!("unknown mode `{v}`")))?,
            "nmax_reduction" => opts.nmax_reduction = parse_u32(k, v, line)?,
            "nmax_vv" => opts.nmax_vv = if v == "auto" { None } else { Some(parse_u32(k, v, line)?) },
            "nmax_joint" => opts.nmax_joint = parse_u32(k, v, line)?,
            "nmax_colon" => opts.nmax_colon = parse_u32(k, v, line)?,
            "nmax_fiber" => opts.nmax_fiber = if v == "auto" { None } else { Some(parse_u32(k, v, line)?) },
            "timeout" => {
                opts.timeout = Some(v.parse().map_err(|_| parse_err(line, format!("bad timeout `{v}`")))?);
            }
            _ => return Err(parse_err(line, format!("unknown setting `{k}`"))),
        }
    }
    Ok(())
}

pub fn parse_spec(text: &str) -> Result<IdealSpecFile, CliError> {
    let mut ring: Option<(Vec<String>, FieldKind)> = None;
    let mut i = None;
    let mut j = None;
    let mut options = Options::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (word, rest) = content.split_once(char::is_whitespace).unwrap_or((content, ""));
        match word {
            "ring" => {
                if ring.is_some() {
                    return Err(parse_err(line, "second ring declaration"));
                }
                let (vars, field) =
                    rest.rsplit_once(" over ").ok_or_else(|| parse_err(line, "expected `ring <vars> over <field>`"))?;
                let vars = split_list(vars);
                if vars.iter().any(String::is_empty) {
                    return Err(parse_err(line, "empty variable name"));
                }
                ring = Some((vars, parse_field(field, line)?));
            }
            "ideal" => {
                let (name, gens) = rest.split_once('=').ok_or_else(|| parse_err(line, "expected `ideal <name> = ...`"))?;
                let gens = split_list(gens);
                if gens.iter().any(String::is_empty) {
                    return Err(parse_err(line, "empty generator"));
                }
                let slot = match name.trim() {
                    "I" => &mut i,
                    "J" => &mut j,
                    other => return Err(parse_err(line, format!("unknown ideal `{other}`; only I and J are read"))),
                };
                if slot.is_some() {
                    return Err(parse_err(line, format!("ideal {} declared twice", name.trim())));
                }
                *slot = Some(gens);
            }
            "set" => parse_set(rest, &mut options, line)?,
            _ => return Err(parse_err(line, format!("unknown directive `{word}`"))),
        }
    }
    let (vars, field) = ring.ok_or_else(|| parse_err(0, "missing ring declaration"))?;
    let i = i.ok_or_else(|| parse_err(0, "missing `ideal I`"))?;
    Ok(IdealSpecFile { vars, field, i, j, options })
}

impl IdealSpecFile {
    /// The coefficient field after applying the mode.
    pub fn effective_field(&self) -> FieldKind {
        match (self.options.mode, self.field) {
            (Mode::Modular, FieldKind::Rationals) => {
                FieldKind::Prime(PrimeModulus::new(DEFAULT_PRIME as u64).expect("default prime"))
            }
            (_, f) => f,
        }
    }

    pub fn ring(&self) -> Result<Arc<RingSpec>, CliError> {
        Ok(Arc::new(RingSpec::new(self.vars.iter().cloned(), self.effective_field())?))
    }

    pub fn ideals(&self, ring: &Arc<RingSpec>) -> Result<(Ideal, Option<Ideal>), CliError> {
        let build = |gens: &[String]| -> Result<Ideal, CliError> {
            let polys = gens.iter().map(|g| parse_poly(g, ring)).collect::<Result<Vec<_>, _>>()?;
            Ok(Ideal::new(ring, polys)?)
        };
        let i = build(&self.i)?;
        let j = self.j.as_deref().map(build).transpose()?;
        Ok((i, j))
    }

    /// Renders back to the file format.
    pub fn to_text(&self) -> String {
        let field = match self.field {
            FieldKind::Rationals => "QQ".to_string(),
            FieldKind::Prime(p) => format!("GF({})", p.get()),
        };
        let mut out = format!("ring {} over {field}\nideal I = {}\n", self.vars.join(", "), self.i.join(", "));
        if let Some(j) = &self.j {
            out.push_str(&format!("ideal J = {}\n", j.join(", ")));
        }
        let o = &self.options;
        let auto = |v: Option<u32>| v.map_or("auto".to_string(), |v| v.to_string());
        out.push_str(&format!(
            "set order={} mode={} nmax_reduction={} nmax_vv={} nmax_joint={} nmax_colon={} nmax_fiber={}\n",
            o.order,
            o.mode.as_str(),
            o.nmax_reduction,
            auto(o.nmax_vv),
            o.nmax_joint,
            o.nmax_colon,
            auto(o.nmax_fiber)
        ));
        if let Some(t) = o.timeout {
            out.push_str(&format!("set timeout={t}\n"));
        }
        out
    }
}
