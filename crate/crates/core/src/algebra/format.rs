//! Plain-text polynomial formats.
//!
//! * Sparse: a `vars x y ...` header, then one term per line as
//!   `coeff e_x e_y ...`. Several polynomials are separated by `---`.
//! * Univariate shorthand: one polynomial per line, `c0 c1 ... cn`.
//! * Expressions: one infix polynomial per line, e.g. `x^2 - 3*a*x + 1`.
//!
//! Blank lines and `#` comments are ignored everywhere.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::BigInt;

use super::multipoly::{MultiPoly, Vars};
use super::unipoly::UniPoly;
use crate::error::FormatError;

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError { line, message: message.into() }
}

/// Content lines with their 1-based numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn parse_int(tok: &str, line: usize) -> Result<BigInt, FormatError> {
    BigInt::from_str(tok).map_err(|_| err(line, format!("expected an integer, found {tok:?}")))
}

pub fn parse_shorthand(text: &str) -> Result<Vec<UniPoly>, FormatError> {
    content_lines(text)
        .map(|(n, l)| {
            l.split_whitespace()
                .map(|t| parse_int(t, n))
                .collect::<Result<Vec<_>, _>>()
                .map(UniPoly::new)
        })
        .collect()
}

pub fn write_shorthand(polys: &[UniPoly]) -> String {
    polys.iter().map(|p| p.to_shorthand() + "\n").collect()
}

pub fn parse_sparse(text: &str) -> Result<Vec<MultiPoly>, FormatError> {
    let mut lines = content_lines(text);
    let (n, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let mut words = header.split_whitespace();
    if words.next() != Some("vars") {
        return Err(err(n, "sparse format must start with a `vars` header"));
    }
    let names: Vec<&str> = words.collect();
    if names.iter().collect::<BTreeSet<_>>().len() != names.len() {
        return Err(err(n, "duplicate variable name"));
    }
    let vars = Vars::new(&names);
    let mut out = Vec::new();
    let mut terms: Vec<(Vec<u32>, BigInt)> = Vec::new();
    for (n, l) in lines {
        if l == "---" {
            out.push(MultiPoly::from_terms(&vars, std::mem::take(&mut terms)));
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != names.len() + 1 {
            return Err(err(
                n,
                format!("expected 1 coefficient and {} exponents", names.len()),
            ));
        }
        let c = parse_int(toks[0], n)?;
        let exps = toks[1..]
            .iter()
            .map(|t| t.parse::<u32>().map_err(|_| err(n, format!("bad exponent {t:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        terms.push((exps, c));
    }
    out.push(MultiPoly::from_terms(&vars, terms));
    Ok(out)
}

/// Sparse form; every polynomial must share the first one's registry.
pub fn write_sparse(polys: &[MultiPoly]) -> String {
    let Some(first) = polys.first() else {
        return String::new();
    };
    let mut s = format!("vars {}\n", first.vars().names().join(" "));
    for (k, p) in polys.iter().enumerate() {
        if k > 0 {
            s.push_str("---\n");
        }
        for (m, c) in p.terms() {
            s.push_str(&c.to_string());
            for e in m.exponents() {
                s.push_str(&format!(" {e}"));
            }
            s.push('\n');
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(src: &str, line: usize) -> Result<Vec<Tok>, FormatError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Tok::Num(parse_int(&s, line)?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Ident(chars[start..i].iter().collect()));
        } else if "+-*^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(err(line, format!("unexpected character {c:?} at column {}", i + 1)));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Tok>,
    pos: usize,
    vars: &'a Vars,
    line: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<MultiPoly, FormatError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly, FormatError> {
        let mut acc = self.unary()?;
        while self.eat('*') {
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly, FormatError> {
        if self.eat('-') {
            return Ok(-&self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly, FormatError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Num(k)) => {
                self.pos += 1;
                let k = u32::try_from(&k).map_err(|_| err(self.line, "exponent too large"))?;
                Ok(base.pow(k))
            }
            _ => Err(err(self.line, "expected a nonnegative integer exponent after '^'")),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, FormatError> {
        let tok = self.toks.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Num(c)) => Ok(MultiPoly::constant(self.vars, c)),
            Some(Tok::Ident(name)) => {
                MultiPoly::var(self.vars, &name).map_err(|e| err(self.line, e.to_string()))
            }
            Some(Tok::Op('(')) => {
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(err(self.line, "expected ')'"));
                }
                Ok(inner)
            }
            Some(t) => Err(err(self.line, format!("unexpected token {t:?}"))),
            None => Err(err(self.line, "unexpected end of expression")),
        }
    }
}

/// Parses one infix expression over the given registry.
pub fn parse_expr(src: &str, vars: &Vars) -> Result<MultiPoly, FormatError> {
    parse_expr_at(src, vars, 1)
}

fn parse_expr_at(src: &str, vars: &Vars, line: usize) -> Result<MultiPoly, FormatError> {
    let toks = tokenize(src, line)?;
    let mut p = Parser { toks, pos: 0, vars, line };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(line, format!("trailing input after position {}", p.pos)));
    }
    Ok(out)
}

/// Parses several expressions over a shared registry holding every identifier
/// that occurs, sorted by name. `extra` names are always included.
pub fn parse_exprs(sources: &[&str], extra: &[&str]) -> Result<Vec<MultiPoly>, FormatError> {
    let mut names: BTreeSet<String> = extra.iter().map(|s| s.to_string()).collect();
    for (k, src) in sources.iter().enumerate() {
        for t in tokenize(src, k + 1)? {
            if let Tok::Ident(s) = t {
                names.insert(s);
            }
        }
    }
    let vars = Vars::new(&names.into_iter().collect::<Vec<_>>());
    sources
        .iter()
        .enumerate()
        .map(|(k, s)| parse_expr_at(s, &vars, k + 1))
        .collect()
}

/// Reads polynomials in any of the three formats, telling them apart by the
/// first content line.
pub fn parse_any(text: &str, extra_vars: &[&str]) -> Result<Vec<MultiPoly>, FormatError> {
    let Some((_, first)) = content_lines(text).next() else {
        return Err(err(1, "empty input"));
    };
    if first.starts_with("vars") {
        return parse_sparse(text);
    }
    let numeric = content_lines(text)
        .all(|(_, l)| l.split_whitespace().all(|t| BigInt::from_str(t).is_ok()));
    if numeric && extra_vars.len() <= 1 {
        let var = extra_vars.first().copied().unwrap_or("x");
        let vars = Vars::new(&[var]);
        return Ok(parse_shorthand(text)?
            .iter()
            .map(|p| MultiPoly::from_unipoly(&vars, 0, p))
            .collect());
    }
    let lines: Vec<&str> = content_lines(text).map(|(_, l)| l).collect();
    parse_exprs(&lines, extra_vars)
}
