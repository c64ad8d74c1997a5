//! A small grammar for graph polynomials in one or more labels:
//!
//! ```text
//! poly  := term (('+' | '-') term)*
//! term  := [coef ['*']] atom
//! coef  := decimal | integer '/' integer
//! atom  := label ['*'] | 'row(' label ')' | 'col(' label ')'
//! ```
//!
//! A leading `-` negates the first term. Whitespace is free.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;
use traffic_graph::coeff::{parse_decimal, real};
use traffic_graph::{GraphMonomial, TrafficPolynomial};

/// Parse failure with a 1-based character column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor {
            chars: text.char_indices().collect(),
            pos: 0,
            text,
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error(&self, message: impl fmt::Display) -> ParseError {
        ParseError {
            column: self.column(),
            message: message.to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self
            .chars
            .get(self.pos)
            .map_or(self.text.len(), |&(i, _)| i);
        while self.peek().is_some_and(&f) {
            self.pos += 1;
        }
        let end = self
            .chars
            .get(self.pos)
            .map_or(self.text.len(), |&(i, _)| i);
        &self.text[start..end]
    }

    fn coefficient(&mut self) -> Result<Option<BigRational>, ParseError> {
        self.skip_ws();
        if !self.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
            return Ok(None);
        }
        let col = self.column();
        let lit = self.take_while(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E'));
        let bad = || ParseError {
            column: col,
            message: format!("bad number `{lit}`"),
        };
        let mut value = parse_decimal(lit).ok_or_else(bad)?;
        if self.eat('/') {
            self.skip_ws();
            let dcol = self.column();
            let den = self.take_while(|c| c.is_ascii_digit());
            let d = parse_decimal(den)
                .filter(|d| !d.is_zero())
                .ok_or(ParseError {
                    column: dcol,
                    message: "bad denominator".into(),
                })?;
            value /= d;
        }
        Ok(Some(value))
    }

    fn label(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return Err(self.error("expected a label"));
        }
        Ok(self.take_while(|c| c.is_ascii_alphanumeric() || c == '_'))
    }

    fn atom(&mut self) -> Result<GraphMonomial, ParseError> {
        let name = self.label()?;
        if (name == "row" || name == "col") && self.eat('(') {
            let inner = self.label()?;
            if !self.eat(')') {
                return Err(self.error("expected `)`"));
            }
            return Ok(if name == "row" {
                GraphMonomial::row_op(inner)
            } else {
                GraphMonomial::col_op(inner)
            });
        }
        if self.eat('*') {
            return Ok(GraphMonomial::edge_star(name));
        }
        Ok(GraphMonomial::edge(name))
    }

    fn term(&mut self) -> Result<(BigRational, GraphMonomial), ParseError> {
        let coef = self.coefficient()?;
        if coef.is_some() {
            self.eat('*');
        }
        Ok((coef.unwrap_or_else(BigRational::one), self.atom()?))
    }
}

/// Parses a polynomial such as `1*x - 0.5*row(x) - 1/2 col(x)`.
pub fn parse_polynomial(text: &str) -> Result<TrafficPolynomial, ParseError> {
    let mut cur = Cursor::new(text);
    let mut poly = TrafficPolynomial::zero();
    let mut sign = if cur.eat('-') {
        -BigRational::one()
    } else {
        BigRational::one()
    };
    loop {
        let (c, m) = cur.term()?;
        poly.add_term(&m, real(sign * c))
            .expect("single-edge monomials are small");
        cur.skip_ws();
        sign = match cur.peek() {
            None => return Ok(poly),
            Some('+') => BigRational::one(),
            Some('-') => -BigRational::one(),
            Some(other) => return Err(cur.error(format!("unexpected `{other}`"))),
        };
        cur.pos += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use traffic_graph::coeff::{from_int, ratio};

    #[test]
    fn markov_form() {
        let p = parse_polynomial("1*x - 1*row(x) ").unwrap();
        assert_eq!(
            p.coefficient(&GraphMonomial::edge("x")).unwrap(),
            from_int(1)
        );
        assert_eq!(
            p.coefficient(&GraphMonomial::row_op("x")).unwrap(),
            from_int(-1)
        );
        let q = parse_polynomial("-x + 0.5 row(x) + 1/2*col(x) + y*").unwrap();
        assert_eq!(q.len(), 4);
        assert_eq!(
            q.coefficient(&GraphMonomial::col_op("x")).unwrap(),
            real(ratio(1, 2))
        );
    }

    #[test]
    fn errors_have_columns() {
        assert_eq!(parse_polynomial("x + ").unwrap_err().column, 5);
        assert_eq!(parse_polynomial("2*row(x").unwrap_err().column, 8);
        assert_eq!(parse_polynomial("x ? y").unwrap_err().column, 3);
        assert!(parse_polynomial("1/0 x").is_err());
        assert!(parse_polynomial("").is_err());
    }

    #[test]
    fn cancellation() {
        assert!(parse_polynomial("x - x").unwrap().is_empty());
    }
}
