//! Presentation files: a `generators:` line followed by one relation per
//! line. A relation is an expression or `lhs = rhs`; `#` starts a comment.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::freealg::{Alphabet, NcPoly};
use crate::gbasis::Presentation;

pub fn parse_presentation(text: &str, field: FieldSpec) -> Result<Presentation> {
    let mut alphabet: Option<Alphabet> = None;
    let mut relations = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        match &alphabet {
            None => alphabet = Some(parse_generators(line, line_no)?),
            Some(a) => {
                let rel = Parser::new(line, line_no, a, field).relation()?;
                if rel.is_zero() {
                    return Err(err(line_no, 1, "relation is identically zero"));
                }
                relations.push(rel);
            }
        }
    }
    let alphabet = alphabet.ok_or_else(|| err(1, 1, "missing `generators:` line"))?;
    Presentation::new("file", alphabet, field, relations)
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_generators(line: &str, line_no: usize) -> Result<Alphabet> {
    let offset = line.len() - line.trim_start().len();
    let rest = line
        .trim_start()
        .strip_prefix("generators:")
        .ok_or_else(|| err(line_no, offset + 1, "expected `generators:`"))?;
    let names: Vec<&str> = rest.split_whitespace().collect();
    if names.is_empty() {
        return Err(err(line_no, line.len() + 1, "no generators listed"));
    }
    for name in &names {
        let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            let col = line.find(name).unwrap_or(0) + 1;
            return Err(err(line_no, col, format!("invalid generator name {name:?}")));
        }
    }
    Alphabet::new(names.iter().copied()).map_err(|e| err(line_no, 1, e.to_string()))
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    alphabet: &'a Alphabet,
    field: FieldSpec,
}

impl<'a> Parser<'a> {
    fn new(text: &str, line: usize, alphabet: &'a Alphabet, field: FieldSpec) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            line,
            alphabet,
            field,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        err(self.line, self.pos + 1, message)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn relation(mut self) -> Result<NcPoly> {
        let lhs = self.expr()?;
        let rel = if self.eat('=') { &lhs - &self.expr()? } else { lhs };
        match self.peek() {
            None => Ok(rel),
            Some(c) => Err(self.error(format!("unexpected {c:?}"))),
        }
    }

    fn expr(&mut self) -> Result<NcPoly> {
        let mut acc = NcPoly::zero(self.field);
        let mut sign = 1;
        if self.eat('-') {
            sign = -1;
        } else {
            self.eat('+');
        }
        loop {
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_' || c == '(')
    }

    fn term(&mut self) -> Result<NcPoly> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.starts_factor() {
                acc = &acc * &self.factor()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<NcPoly> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let n = self.integer()?;
            let n: u32 = n.try_into().map_err(|_| self.error("exponent too large"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        digits.parse().map_err(|_| {
            self.pos = start;
            self.error("integer out of range")
        })
    }

    fn scalar(&mut self) -> Result<Scalar> {
        let num = self.integer()?;
        let f = self.field;
        let num = f.from_bigint(&num.into());
        if self.eat('/') {
            self.skip_ws();
            let at = self.pos;
            let den = self.integer()?;
            let den = f.from_bigint(&den.into());
            return f.div(&num, &den).map_err(|_| {
                self.pos = at;
                self.error("zero denominator in this field")
            });
        }
        Ok(num)
    }

    fn atom(&mut self) -> Result<NcPoly> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(NcPoly::constant(self.field, self.scalar()?)),
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.generator(),
            Some(c) => Err(self.error(format!("unexpected {c:?}"))),
            None => Err(self.error("unexpected end of line")),
        }
    }

    /// Longest generator name that is a prefix of the remaining input, so
    /// that juxtaposed names such as `abc` or `x1x2` split correctly.
    fn generator(&mut self) -> Result<NcPoly> {
        let rest: String = self.chars[self.pos..].iter().collect();
        let best = self
            .alphabet
            .names()
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len());
        match best {
            Some((i, name)) => {
                self.pos += name.chars().count();
                Ok(NcPoly::generator(self.field, i))
            }
            None => {
                let ident: String = rest
                    .chars()
                    .take_while(|c| c.is_ascii_alphanumeric() || *c == '_')
                    .collect();
                Err(self.error(format!("unknown generator {ident:?}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gbasis::complete;

    const F: FieldSpec = FieldSpec::Prime(10009);

    #[test]
    fn fomin_kirillov_file() {
        let text = "# E3\ngenerators: a b c\na^2\nb^2\nc^2\nca + bc + ab\ncb + ba + ac  # second cyclic relation\n";
        let p = parse_presentation(text, F).unwrap();
        assert_eq!(p.relations.len(), 5);
        assert_eq!(complete(&p, 12, 200).unwrap().dimension().unwrap(), 12);
    }

    #[test]
    fn grammar() {
        let text = "generators: x1 x2\nx1x2 + x2*x1 = 2/3\n-(x1 + 2)^2 + 4 x1\n3*x2^3 - x2 x2 x2 - x2^3";
        let p = parse_presentation(text, FieldSpec::Rationals).unwrap();
        let q = FieldSpec::Rationals;
        let g = |i| NcPoly::generator(q, i);
        let expected0 = &(&(&g(0) * &g(1)) + &(&g(1) * &g(0))) - &NcPoly::constant(q, q.from_ratio(2, 3).unwrap());
        assert_eq!(p.relations[0], expected0);
        // −(x1 + 2)² + 4x1 = −x1² − 4
        assert_eq!(p.relations[1], &(-&(&g(0) * &g(0))) - &NcPoly::from_i64(q, 4));
        assert_eq!(parse_presentation("generators: x\nx^2 - 2x + 1", q).unwrap().relations.len(), 1);
    }

    fn error_at(text: &str) -> (usize, usize) {
        match parse_presentation(text, F) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_report_positions() {
        assert_eq!(error_at("generators: a b\na + q"), (2, 5));
        assert_eq!(error_at("generators: a b\n(a + b"), (2, 7));
        assert_eq!(error_at("generators: a\na^"), (2, 3));
        assert_eq!(error_at("relations: a\n"), (1, 1));
        assert_eq!(error_at("generators: a 9b\n"), (1, 15));
        assert_eq!(error_at("generators: a\na - a"), (2, 1));
        assert_eq!(error_at("generators: a\na/0"), (2, 2));
        assert_eq!(error_at("generators: a\n1/0 a"), (2, 3));
        assert!(matches!(parse_presentation("", F), Err(Error::Parse { .. })));
    }
}
