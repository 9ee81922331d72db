//! Text syntax for diagrams.
//!
//! ```text
//! term   := factor (';' factor)*
//! factor := atom ('*' atom)*
//! atom   := 'id<' obj '>' | 'sym<' sobj ',' sobj '>' | 'div<' n '>' | 'gat<' n '>'
//!         | 'split<' obj '>' | 'gather<' obj '>' | 'scale<' k '>(' term ')'
//!         | 'perm[' ints ']' | 'fun<' m '>[' ints ']' | 'box<' semiring '>[' matrix ']'
//!         | NAME ['(' params ')'] | '(' term ')'
//! obj    := '0' | n (',' n)*
//! sobj   := '0' | n | '[' obj ']'
//! ```
//!
//! `;` is left-to-right composition and binds looser than `*`. Parameters are
//! rationals (`-1/2`), complex numbers (`1/2-3i`), identifiers or quoted strings.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use scaprop_core::boxes::BoxValue;
use scaprop_core::linalg::{parse_matrix_literal, Rational};
use scaprop_core::scalable::multiplex;
use scaprop_core::semantics::{FinFn, SemiMatrix, Semiring};
use scaprop_core::wire::{gather_obj, split_obj};
use scaprop_core::{Diagram, Error, Node, Param, Permutation, Signature, SizedObject};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DslError {
    #[error("{line}:{col}: syntax error: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("{line}:{col}: in `{subterm}`: {error}")]
    Type {
        line: usize,
        col: usize,
        subterm: String,
        error: Error,
    },
}

/// Parses `text` against the generators of `sig`.
pub fn parse(text: &str, sig: &Signature) -> Result<Diagram, DslError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        sig,
    };
    let d = p.term()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax(format!("unexpected `{}`", p.rest_preview())));
    }
    Ok(d)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn line_col(&self, pos: usize) -> (usize, usize) {
        let before = &self.src[..pos];
        let line = before.matches('\n').count() + 1;
        let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        (line, col)
    }

    fn syntax(&self, msg: String) -> DslError {
        let (line, col) = self.line_col(self.pos);
        DslError::Syntax { line, col, msg }
    }

    fn type_error(&self, start: usize, error: Error) -> DslError {
        let (line, col) = self.line_col(start);
        DslError::Type {
            line,
            col,
            subterm: self.src[start..self.pos].trim().to_string(),
            error,
        }
    }

    fn rest_preview(&self) -> String {
        self.src[self.pos..].chars().take(12).collect()
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), DslError> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => Err(self.syntax(format!("expected `{c}`, found `{found}`"))),
                None => Err(self.syntax(format!("expected `{c}`, found end of input"))),
            }
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let mut end = 0;
        for (i, c) in rest.char_indices() {
            let ok = if i == 0 {
                c.is_ascii_alphabetic() || c == '_'
            } else {
                c.is_ascii_alphanumeric() || c == '_'
            };
            if !ok {
                break;
            }
            end = i + c.len_utf8();
        }
        if end == 0 {
            return None;
        }
        self.pos += end;
        Some(&rest[..end])
    }

    fn number(&mut self) -> Result<usize, DslError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let end = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if end == 0 {
            return Err(self.syntax(format!("expected a number, found `{}`", self.rest_preview())));
        }
        let n = rest[..end]
            .parse()
            .map_err(|_| self.syntax(format!("number `{}` out of range", &rest[..end])))?;
        self.pos += end;
        Ok(n)
    }

    fn positive(&mut self) -> Result<usize, DslError> {
        let start = self.pos;
        let n = self.number()?;
        if n == 0 {
            self.pos = start;
            self.skip_ws();
            return Err(self.syntax("size must be positive".into()));
        }
        Ok(n)
    }

    fn int_list(&mut self, close: char) -> Result<Vec<usize>, DslError> {
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(self.number()?);
            if self.eat(close) {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn obj(&mut self) -> Result<SizedObject, DslError> {
        self.skip_ws();
        let start = self.pos;
        let first = self.number()?;
        if first == 0 {
            return Ok(SizedObject::empty());
        }
        let mut sizes = vec![first];
        loop {
            let save = self.pos;
            if !self.eat(',') {
                break;
            }
            self.skip_ws();
            if !self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos = save;
                break;
            }
            sizes.push(self.positive()?);
        }
        SizedObject::new(sizes).map_err(|_| {
            self.pos = start;
            self.syntax("size must be positive".into())
        })
    }

    fn sym_obj(&mut self) -> Result<SizedObject, DslError> {
        if self.eat('[') {
            let o = self.obj()?;
            self.expect(']')?;
            Ok(o)
        } else {
            let n = self.number()?;
            Ok(if n == 0 {
                SizedObject::empty()
            } else {
                SizedObject::cable(n)
            })
        }
    }

    fn term(&mut self) -> Result<Diagram, DslError> {
        self.skip_ws();
        let start = self.pos;
        let mut acc = self.factor()?;
        while self.eat(';') {
            let rhs = self.factor()?;
            acc = Diagram::seq(acc, rhs).map_err(|e| self.type_error(start, e))?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Diagram, DslError> {
        let mut acc = self.atom()?;
        while self.eat('*') {
            let rhs = self.atom()?;
            acc = Diagram::par(acc, rhs);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Diagram, DslError> {
        self.skip_ws();
        let start = self.pos;
        if self.eat('(') {
            let d = self.term()?;
            self.expect(')')?;
            return Ok(d);
        }
        let Some(name) = self.ident() else {
            return Err(match self.peek() {
                Some(c) => self.syntax(format!("unexpected `{c}`")),
                None => self.syntax("unexpected end of input".into()),
            });
        };
        let angle = self.peek() == Some('<');
        let bracket = self.peek() == Some('[');
        match name {
            "id" if angle => {
                self.expect('<')?;
                let a = self.obj()?;
                self.expect('>')?;
                Ok(Diagram::id(a))
            }
            "sym" if angle => {
                self.expect('<')?;
                let a = self.sym_obj()?;
                self.expect(',')?;
                let b = self.sym_obj()?;
                self.expect('>')?;
                Ok(Diagram::sym(a, b))
            }
            "div" | "gat" if angle => {
                self.expect('<')?;
                let n = self.positive()?;
                self.expect('>')?;
                Ok(if name == "div" {
                    Diagram::div(n)
                } else {
                    Diagram::gat(n)
                }
                .expect("positive"))
            }
            "split" | "gather" if angle => {
                self.expect('<')?;
                let a = self.obj()?;
                self.expect('>')?;
                Ok(if name == "split" {
                    split_obj(&a)
                } else {
                    gather_obj(&a)
                })
            }
            "scale" if angle => {
                self.expect('<')?;
                let k = self.positive()?;
                self.expect('>')?;
                self.expect('(')?;
                let inner = self.term()?;
                self.expect(')')?;
                multiplex(&inner, k).map_err(|e| self.type_error(start, e))
            }
            "perm" if bracket => {
                self.expect('[')?;
                let images = self.int_list(']')?;
                let p = Permutation::new(images).map_err(|e| self.type_error(start, e))?;
                Ok(Diagram::boxed(BoxValue::Perm(p)))
            }
            "fun" if angle => {
                self.expect('<')?;
                let m = self.number()?;
                self.expect('>')?;
                self.expect('[')?;
                let images = self.int_list(']')?;
                let f = FinFn::new(images, m).map_err(|e| self.type_error(start, e))?;
                Ok(Diagram::boxed(BoxValue::Fun(f)))
            }
            "box" if angle => {
                self.expect('<')?;
                let sr_name = self.ident().ok_or_else(|| self.syntax("expected a semiring name".into()))?;
                let sr = Semiring::from_name(sr_name)
                    .ok_or_else(|| self.syntax(format!("unknown semiring `{sr_name}`")))?;
                self.expect('>')?;
                self.expect('[')?;
                let body_start = self.pos;
                let close = self.src[self.pos..]
                    .find(']')
                    .ok_or_else(|| self.syntax("unterminated matrix literal".into()))?;
                let body = &self.src[body_start..body_start + close];
                let m = parse_matrix_literal(body).map_err(|_| {
                    self.syntax(format!("bad matrix literal `{}`", body.trim()))
                })?;
                self.pos = body_start + close + 1;
                let m = SemiMatrix::new(sr, m).map_err(|e| self.type_error(start, e))?;
                Ok(Diagram::boxed(BoxValue::Mat(m)))
            }
            _ => {
                let params = if self.eat('(') { self.params()? } else { Vec::new() };
                self.sig.gen(name, params).map_err(|e| self.type_error(start, e))
            }
        }
    }

    fn params(&mut self) -> Result<Vec<Param>, DslError> {
        let mut out = Vec::new();
        if self.eat(')') {
            return Ok(out);
        }
        loop {
            out.push(self.param()?);
            if self.eat(')') {
                return Ok(out);
            }
            self.expect(',')?;
        }
    }

    fn param(&mut self) -> Result<Param, DslError> {
        self.skip_ws();
        if self.peek() == Some('"') {
            self.pos += 1;
            let mut s = String::new();
            loop {
                let Some(c) = self.peek() else {
                    return Err(self.syntax("unterminated string".into()));
                };
                self.pos += c.len_utf8();
                match c {
                    '"' => return Ok(Param::Token(s)),
                    '\\' => {
                        let Some(e) = self.peek() else {
                            return Err(self.syntax("unterminated string".into()));
                        };
                        self.pos += e.len_utf8();
                        s.push(e);
                    }
                    c => s.push(c),
                }
            }
        }
        if let Some(name) = self.ident() {
            return Ok(Param::Token(name.to_string()));
        }
        let rest = &self.src[self.pos..];
        let end = rest
            .find(|c: char| !(c.is_ascii_digit() || matches!(c, '+' | '-' | '/' | 'i')))
            .unwrap_or(rest.len());
        let text = &rest[..end];
        let param = parse_number_param(text).ok_or_else(|| self.syntax(format!("bad parameter `{text}`")))?;
        self.pos += end;
        Ok(param)
    }
}

fn parse_number_param(text: &str) -> Option<Param> {
    let rational = |s: &str| -> Option<Rational> {
        if s.is_empty() || s.contains('i') {
            return None;
        }
        Rational::from_str(s).ok()
    };
    let Some(body) = text.strip_suffix('i') else {
        return rational(text).map(Param::Rational);
    };
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(i, _)| i)
        .last();
    let (re, im) = match split {
        Some(i) => (rational(&body[..i])?, &body[i..]),
        None => (Rational::from_integer(0.into()), body),
    };
    let im = match im {
        "" | "+" => Rational::from_integer(1.into()),
        "-" => Rational::from_integer((-1).into()),
        s => rational(s.strip_prefix('+').unwrap_or(s))?,
    };
    Some(Param::Complex(re, im))
}

/// Canonical text of a term. `parse(&print(d))` rebuilds `d` exactly.
pub fn print(d: &Diagram) -> String {
    d.to_string()
}

/// Human-oriented text: units simplified away and multi-cable identities
/// written as tensors of single-cable identities.
pub fn pretty(d: &Diagram) -> String {
    let mut s = String::new();
    write_pretty(&d.simplify(), &mut s).expect("writing to a string");
    s
}

// Whether the pretty form of `d` is a tensor at top level.
fn pretty_is_par(d: &Diagram) -> bool {
    match d.node() {
        Node::Par(..) => true,
        Node::Id(a) => a.len() > 1,
        _ => false,
    }
}

fn write_pretty(d: &Diagram, out: &mut String) -> fmt::Result {
    match d.node() {
        Node::Id(a) if a.len() > 1 => {
            for (i, s) in a.sizes().iter().enumerate() {
                if i > 0 {
                    out.push_str(" * ");
                }
                write!(out, "id<{s}>")?;
            }
            Ok(())
        }
        Node::Seq(f, g) => {
            write_pretty(f, out)?;
            out.push_str(" ; ");
            if matches!(g.node(), Node::Seq(..)) {
                out.push('(');
                write_pretty(g, out)?;
                out.push(')');
                Ok(())
            } else {
                write_pretty(g, out)
            }
        }
        Node::Par(f, g) => {
            if matches!(f.node(), Node::Seq(..)) {
                out.push('(');
                write_pretty(f, out)?;
                out.push(')');
            } else {
                write_pretty(f, out)?;
            }
            out.push_str(" * ");
            if matches!(g.node(), Node::Seq(..)) || pretty_is_par(g) {
                out.push('(');
                write_pretty(g, out)?;
                out.push(')');
                Ok(())
            } else {
                write_pretty(g, out)
            }
        }
        _ => write!(out, "{d}"),
    }
}

/// An object in the `obj` syntax: `0` or comma-separated sizes.
pub fn print_obj(a: &SizedObject) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let parts: Vec<String> = a.sizes().iter().map(|s| s.to_string()).collect();
    parts.join(",")
}
