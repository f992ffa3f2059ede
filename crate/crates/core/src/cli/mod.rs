//! Job scripts: one statement per line, `#` starts a comment.
//!
//! ```text
//! ring Q[x,y,z,w]
//! ideal I = x*z, x*w, y*z, y*w
//! ideal J = x - z, y - w
//! serre I J
//! output structured
//! ```

mod run;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use run::{run_job, RunOptions, RunOutcome};

use crate::ring::{parse_poly, FieldSpec, MonomialOrder, Poly, PolyRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JobError {
    #[error("line {line}: syntax error: {message}")]
    SyntaxError { line: usize, message: String },
    #[error("line {line}: undeclared name '{name}'")]
    UndeclaredName { line: usize, name: String },
    #[error("line {line}: duplicate name '{name}'")]
    DuplicateName { line: usize, name: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BindingKind {
    Ideal,
    Poly,
    Seq,
}

impl fmt::Display for BindingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BindingKind::Ideal => "ideal",
            BindingKind::Poly => "poly",
            BindingKind::Seq => "seq",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Binding {
    pub kind: BindingKind,
    pub name: String,
    pub polys: Vec<Poly>,
}

/// A scalar argument: a declared `poly` name or an inline polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Scalar {
    pub source: String,
    pub value: Poly,
}

#[derive(Clone, Debug, PartialEq)]
pub enum VerifyCommand {
    Prop31 { seq: String, x: Scalar, q: usize },
    Cor32 { seq: String, x: Scalar, q: usize },
    Pullback { seq: String, x: Scalar, q: usize },
    TorInd { ideal: String, x: Scalar },
    Main { seq: String, x: Scalar, qmax: usize },
    Fuzz { count: Option<usize> },
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Serre { i: String, j: String },
    Tor { i: String, j: String, qmax: Option<usize> },
    Multitor { seq: String, qmax: Option<usize> },
    Resolve { ideal: String, max_len: Option<usize> },
    Koszul { seq: String },
    Verify(VerifyCommand),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Job {
    pub ring: Arc<PolyRing>,
    pub bindings: Vec<Binding>,
    pub command: Command,
    pub output: OutputFormat,
}

impl Job {
    pub fn binding(&self, name: &str) -> Option<&Binding> {
        self.bindings.iter().find(|b| b.name == name)
    }

    /// Polynomials bound to `name`; parsing guarantees it exists.
    pub fn polys(&self, name: &str) -> &[Poly] {
        &self.binding(name).expect("names are resolved at parse time").polys
    }

    /// Canonical script text; parsing it yields an equal job.
    pub fn to_script(&self) -> String {
        let mut out = format!("ring {}\n", self.ring);
        for b in &self.bindings {
            let polys: Vec<String> = b.polys.iter().map(ToString::to_string).collect();
            out.push_str(&format!("{} {} = {}\n", b.kind, b.name, polys.join(", ")));
        }
        out.push_str(&self.command.to_string());
        out.push('\n');
        if self.output == OutputFormat::Structured {
            out.push_str("output structured\n");
        }
        out
    }
}

fn opt(n: &Option<usize>) -> String {
    n.map(|n| format!(" {n}")).unwrap_or_default()
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Command::Serre { i, j } => write!(f, "serre {i} {j}"),
            Command::Tor { i, j, qmax } => write!(f, "tor {i} {j}{}", opt(qmax)),
            Command::Multitor { seq, qmax } => write!(f, "multitor {seq}{}", opt(qmax)),
            Command::Resolve { ideal, max_len } => write!(f, "resolve {ideal}{}", opt(max_len)),
            Command::Koszul { seq } => write!(f, "koszul {seq}"),
            Command::Verify(v) => match v {
                VerifyCommand::Prop31 { seq, x, q } => write!(f, "verify prop31 {seq} {} {q}", x.source),
                VerifyCommand::Cor32 { seq, x, q } => write!(f, "verify cor32 {seq} {} {q}", x.source),
                VerifyCommand::Pullback { seq, x, q } => write!(f, "verify pullback {seq} {} {q}", x.source),
                VerifyCommand::TorInd { ideal, x } => write!(f, "verify torind {ideal} {}", x.source),
                VerifyCommand::Main { seq, x, qmax } => write!(f, "verify main {seq} {} {qmax}", x.source),
                VerifyCommand::Fuzz { count } => write!(f, "verify fuzz{}", opt(count)),
            },
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_ring(line: usize, spec: &str) -> Result<Arc<PolyRing>, JobError> {
    let syntax = |message: String| JobError::SyntaxError { line, message };
    let spec: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let (field, rest) = spec.split_once('[').ok_or_else(|| syntax("expected Field[v1,...,vn]".into()))?;
    let vars = rest.strip_suffix(']').ok_or_else(|| syntax("missing ']'".into()))?;
    let field = match field {
        "Q" => FieldSpec::Rationals,
        f => {
            let p = f
                .strip_prefix('F')
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| syntax(format!("unknown field '{f}'")))?;
            FieldSpec::prime(p).map_err(|e| syntax(e.to_string()))?
        }
    };
    let vars: Vec<&str> = if vars.is_empty() { Vec::new() } else { vars.split(',').collect() };
    PolyRing::new(vars, field, MonomialOrder::GrevLex).map_err(|e| syntax(e.to_string()))
}

struct Parser {
    ring: Option<Arc<PolyRing>>,
    bindings: Vec<Binding>,
    command: Option<Command>,
    output: OutputFormat,
}

impl Parser {
    fn ring(&self, line: usize) -> Result<&Arc<PolyRing>, JobError> {
        self.ring.as_ref().ok_or(JobError::SyntaxError { line, message: "missing ring declaration".into() })
    }

    fn lookup(&self, line: usize, name: &str) -> Result<String, JobError> {
        match self.bindings.iter().find(|b| b.name == name) {
            Some(_) => Ok(name.to_string()),
            None => Err(JobError::UndeclaredName { line, name: name.into() }),
        }
    }

    fn scalar(&self, line: usize, token: &str) -> Result<Scalar, JobError> {
        if let Some(b) = self.bindings.iter().find(|b| b.name == token) {
            if b.polys.len() != 1 {
                return Err(JobError::SyntaxError { line, message: format!("'{token}' is not a single polynomial") });
            }
            return Ok(Scalar { source: token.into(), value: b.polys[0].clone() });
        }
        let ring = self.ring(line)?;
        match parse_poly(token, ring) {
            Ok(value) => Ok(Scalar { source: token.into(), value }),
            Err(crate::ring::RingError::UnknownVariable(_)) if is_identifier(token) => {
                Err(JobError::UndeclaredName { line, name: token.into() })
            }
            Err(e) => Err(JobError::SyntaxError { line, message: e.to_string() }),
        }
    }

    fn statement(&mut self, line: usize, text: &str) -> Result<(), JobError> {
        let syntax = |message: &str| JobError::SyntaxError { line, message: message.into() };
        let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
        let rest = rest.trim();
        if self.ring.is_none() && head != "ring" {
            return Err(syntax("missing ring declaration"));
        }
        match head {
            "ring" => {
                if self.ring.is_some() {
                    return Err(syntax("ring declared twice"));
                }
                self.ring = Some(parse_ring(line, rest)?);
            }
            "ideal" | "poly" | "seq" => {
                let kind = match head {
                    "ideal" => BindingKind::Ideal,
                    "poly" => BindingKind::Poly,
                    _ => BindingKind::Seq,
                };
                let (name, body) = rest.split_once('=').ok_or_else(|| syntax("expected '<name> = ...'"))?;
                let name = name.trim();
                if !is_identifier(name) {
                    return Err(syntax(&format!("invalid name '{name}'")));
                }
                let ring = self.ring(line)?.clone();
                if self.bindings.iter().any(|b| b.name == name) || ring.var_index(name).is_some() {
                    return Err(JobError::DuplicateName { line, name: name.into() });
                }
                let body = body.trim();
                let polys = if body.is_empty() {
                    Vec::new()
                } else {
                    body.split(',')
                        .map(|p| parse_poly(p.trim(), &ring).map_err(|e| syntax(&e.to_string())))
                        .collect::<Result<Vec<_>, _>>()?
                };
                if kind == BindingKind::Poly && polys.len() != 1 {
                    return Err(syntax("poly takes exactly one polynomial"));
                }
                self.bindings.push(Binding { kind, name: name.into(), polys });
            }
            "output" => {
                self.output = match rest {
                    "text" => OutputFormat::Text,
                    "structured" => OutputFormat::Structured,
                    _ => return Err(syntax("output must be 'text' or 'structured'")),
                };
            }
            _ => {
                if self.command.is_some() {
                    return Err(syntax("only one command per job"));
                }
                self.command = Some(self.command(line, head, rest)?);
            }
        }
        Ok(())
    }

    fn command(&self, line: usize, head: &str, rest: &str) -> Result<Command, JobError> {
        let args: Vec<&str> = rest.split_whitespace().collect();
        let syntax = |message: String| JobError::SyntaxError { line, message };
        let arity = |min: usize, max: usize| {
            if args.len() < min || args.len() > max {
                Err(syntax(format!("'{head}' takes {min} to {max} arguments, found {}", args.len())))
            } else {
                Ok(())
            }
        };
        let num = |s: &str| s.parse::<usize>().map_err(|_| syntax(format!("expected a natural number, found '{s}'")));
        let opt_num = |i: usize| args.get(i).map(|s| num(s)).transpose();
        Ok(match head {
            "serre" => {
                arity(2, 2)?;
                Command::Serre { i: self.lookup(line, args[0])?, j: self.lookup(line, args[1])? }
            }
            "tor" => {
                arity(2, 3)?;
                Command::Tor { i: self.lookup(line, args[0])?, j: self.lookup(line, args[1])?, qmax: opt_num(2)? }
            }
            "multitor" => {
                arity(1, 2)?;
                Command::Multitor { seq: self.lookup(line, args[0])?, qmax: opt_num(1)? }
            }
            "resolve" => {
                arity(1, 2)?;
                Command::Resolve { ideal: self.lookup(line, args[0])?, max_len: opt_num(1)? }
            }
            "koszul" => {
                arity(1, 1)?;
                Command::Koszul { seq: self.lookup(line, args[0])? }
            }
            "verify" => {
                let (sub, args) = args.split_first().ok_or_else(|| syntax("verify needs a claim".into()))?;
                let expect = |n: usize| {
                    if args.len() == n {
                        Ok(())
                    } else {
                        Err(syntax(format!("'verify {sub}' takes {n} arguments, found {}", args.len())))
                    }
                };
                Command::Verify(match *sub {
                    "prop31" | "cor32" | "pullback" | "main" => {
                        expect(3)?;
                        let seq = self.lookup(line, args[0])?;
                        let x = self.scalar(line, args[1])?;
                        let q = num(args[2])?;
                        match *sub {
                            "prop31" => VerifyCommand::Prop31 { seq, x, q },
                            "cor32" => VerifyCommand::Cor32 { seq, x, q },
                            "pullback" => VerifyCommand::Pullback { seq, x, q },
                            _ => VerifyCommand::Main { seq, x, qmax: q },
                        }
                    }
                    "torind" => {
                        expect(2)?;
                        VerifyCommand::TorInd { ideal: self.lookup(line, args[0])?, x: self.scalar(line, args[1])? }
                    }
                    "fuzz" => {
                        if args.len() > 1 {
                            return Err(syntax("'verify fuzz' takes at most 1 argument".into()));
                        }
                        VerifyCommand::Fuzz { count: args.first().map(|s| num(s)).transpose()? }
                    }
                    other => return Err(syntax(format!("unknown claim '{other}'"))),
                })
            }
            other => return Err(syntax(format!("unknown statement '{other}'"))),
        })
    }
}

pub fn parse_job(source: &str) -> Result<Job, JobError> {
    let mut p = Parser { ring: None, bindings: Vec::new(), command: None, output: OutputFormat::Text };
    let mut last = 0;
    for (i, raw) in source.lines().enumerate() {
        let text = raw.split('#').next().unwrap_or("").trim();
        last = i + 1;
        if text.is_empty() {
            continue;
        }
        p.statement(i + 1, text)?;
    }
    let ring = p.ring.ok_or(JobError::SyntaxError { line: last.max(1), message: "missing ring declaration".into() })?;
    let command = p.command.ok_or(JobError::SyntaxError { line: last.max(1), message: "missing command".into() })?;
    Ok(Job { ring, bindings: p.bindings, command, output: p.output })
}
