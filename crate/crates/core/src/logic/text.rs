//! Textual formula grammar (ASCII, whitespace-insensitive):
//!
//! ```text
//! formula := 'E' var '.' formula | 'A' var '.' formula | disj ('->' formula)?
//! disj    := conj ('|' conj)*
//! conj    := lit ('&' lit)*
//! lit     := '!' lit | '(' formula ')' | atom
//! atom    := var ('~' | '=' | '!~' | '!=') var
//! var     := [a-z][a-zA-Z0-9_]*
//! ```
//!
//! `!~` and `!=` are sugar for negated atoms. Quantifier scope extends
//! maximally to the right. Only sentences parse: unbound atom variables and
//! shadowing quantifiers are rejected with positions.

use super::{Formula, LogicError};

pub fn parse(text: &str) -> Result<Formula, LogicError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        scope: Vec::new(),
    };
    let f = p.formula()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(f)
}

/// Canonical fully parenthesized text; `parse(print(f)) == f` for any
/// sentence built through the public constructors.
pub fn print(f: &Formula) -> String {
    match f {
        Formula::Exists(v, b) => format!("E{v}.{}", print(b)),
        Formula::Forall(v, b) => format!("A{v}.{}", print(b)),
        Formula::Not(inner) => format!("!({})", print(inner)),
        Formula::And(items) => items
            .iter()
            .map(print_operand)
            .collect::<Vec<_>>()
            .join(" & "),
        Formula::Or(items) => items
            .iter()
            .map(print_operand)
            .collect::<Vec<_>>()
            .join(" | "),
        Formula::Implies(a, b) => format!("{} -> {}", print_operand(a), print(b)),
        Formula::Adj(u, v) => format!("{u}~{v}"),
        Formula::Eq(u, v) => format!("{u}={v}"),
    }
}

/// Operands of `&`, `|`, and implication antecedents must be lits; atoms and
/// negations already are, everything else gets parentheses.
fn print_operand(f: &Formula) -> String {
    match f {
        Formula::Adj(..) | Formula::Eq(..) | Formula::Not(_) => print(f),
        _ => format!("({})", print(f)),
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    scope: Vec<String>,
}

impl Parser {
    fn error(&self, msg: impl Into<String>) -> LogicError {
        let mut line = 1;
        let mut col = 1;
        for &c in &self.chars[..self.pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        LogicError::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn expect(&mut self, c: char) -> Result<(), LogicError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn formula(&mut self) -> Result<Formula, LogicError> {
        match self.peek() {
            Some(q @ ('E' | 'A')) => {
                self.pos += 1;
                let var = self.var_token()?;
                if self.scope.contains(&var) {
                    return Err(self.error(format!("quantifier shadows in-scope variable `{var}`")));
                }
                self.expect('.')?;
                self.scope.push(var.clone());
                let body = self.formula()?;
                self.scope.pop();
                Ok(if q == 'E' {
                    Formula::exists(var, body)
                } else {
                    Formula::forall(var, body)
                })
            }
            _ => {
                let lhs = self.disj()?;
                if self.peek() == Some('-') {
                    self.pos += 1;
                    if self.bump() != Some('>') {
                        return Err(self.error("expected `->`"));
                    }
                    let rhs = self.formula()?;
                    Ok(Formula::implies(lhs, rhs))
                } else {
                    Ok(lhs)
                }
            }
        }
    }

    fn disj(&mut self) -> Result<Formula, LogicError> {
        let mut items = vec![self.conj()?];
        while self.peek() == Some('|') {
            self.pos += 1;
            items.push(self.conj()?);
        }
        Ok(Formula::or(items))
    }

    fn conj(&mut self) -> Result<Formula, LogicError> {
        let mut items = vec![self.lit()?];
        while self.peek() == Some('&') {
            self.pos += 1;
            items.push(self.lit()?);
        }
        Ok(Formula::and(items))
    }

    fn lit(&mut self) -> Result<Formula, LogicError> {
        match self.peek() {
            Some('!') => {
                self.pos += 1;
                Ok(Formula::not(self.lit()?))
            }
            Some('(') => {
                self.pos += 1;
                let f = self.formula()?;
                self.expect(')')?;
                Ok(f)
            }
            Some(c) if c.is_ascii_lowercase() => self.atom(),
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn atom(&mut self) -> Result<Formula, LogicError> {
        let u = self.scoped_var()?;
        let (negated, op) = match self.peek() {
            Some('~') => {
                self.pos += 1;
                (false, '~')
            }
            Some('=') => {
                self.pos += 1;
                (false, '=')
            }
            Some('!') => {
                self.pos += 1;
                match self.bump() {
                    Some('~') => (true, '~'),
                    Some('=') => (true, '='),
                    _ => return Err(self.error("expected `!~` or `!=`")),
                }
            }
            _ => return Err(self.error("expected `~`, `=`, `!~`, or `!=`")),
        };
        let v = self.scoped_var()?;
        let atom = if op == '~' {
            Formula::adj(u, v)
        } else {
            Formula::eq(u, v)
        };
        Ok(if negated { Formula::not(atom) } else { atom })
    }

    fn scoped_var(&mut self) -> Result<String, LogicError> {
        let var = self.var_token()?;
        if !self.scope.contains(&var) {
            return Err(self.error(format!("unbound variable `{var}`")));
        }
        Ok(var)
    }

    fn var_token(&mut self) -> Result<String, LogicError> {
        self.skip_ws();
        match self.chars.get(self.pos) {
            Some(c) if c.is_ascii_lowercase() => {}
            _ => return Err(self.error("expected a variable (lowercase start)")),
        }
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_ascii_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }
}
