//! Boolean combinations of modifiers.
//!
//! ```text
//! or   := and ("OR" and)*
//! and  := not ("AND" not)*
//! not  := "NOT" not | atom
//! atom := "m(" word "/" CAT ")" | "(" or ")"
//! ```

use std::fmt;

use thiserror::Error;

use crate::corpus::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LogicExpr {
    Atom(Word),
    And(Box<LogicExpr>, Box<LogicExpr>),
    Or(Box<LogicExpr>, Box<LogicExpr>),
    Not(Box<LogicExpr>),
}

impl fmt::Display for LogicExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogicExpr::Atom(w) => write!(f, "m({w})"),
            LogicExpr::And(a, b) => write!(f, "({a} AND {b})"),
            LogicExpr::Or(a, b) => write!(f, "({a} OR {b})"),
            LogicExpr::Not(a) => write!(f, "NOT {a}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("logic expression error at offset {offset}: {message}")]
pub struct LogicError {
    pub offset: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Atom(Word),
    And,
    Or,
    Not,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, LogicError> {
    let err = |offset, message: &str| LogicError {
        offset,
        message: message.to_string(),
    };
    let mut out = Vec::new();
    let mut i = 0;
    let bytes = text.as_bytes();
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c == b'(' {
            out.push((i, Tok::Open));
            i += 1;
        } else if c == b')' {
            out.push((i, Tok::Close));
            i += 1;
        } else if text[i..].starts_with("m(") {
            let start = i + 2;
            let end = text[start..]
                .find(')')
                .map(|k| start + k)
                .ok_or_else(|| err(i, "unterminated m("))?;
            let word: Word = text[start..end]
                .trim()
                .parse()
                .map_err(|_| err(start, "expected word/CAT inside m(..)"))?;
            out.push((i, Tok::Atom(word)));
            i = end + 1;
        } else {
            let end = text[i..]
                .find(|ch: char| ch.is_whitespace() || ch == '(' || ch == ')')
                .map_or(text.len(), |k| i + k);
            let tok = match &text[i..end] {
                "AND" => Tok::And,
                "OR" => Tok::Or,
                "NOT" => Tok::Not,
                other => return Err(err(i, &format!("unexpected `{other}`"))),
            };
            out.push((i, tok));
            i = end;
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn fail<T>(&self, message: &str) -> Result<T, LogicError> {
        Err(LogicError {
            offset: self.offset(),
            message: message.to_string(),
        })
    }

    fn or(&mut self) -> Result<LogicExpr, LogicError> {
        let mut lhs = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            lhs = LogicExpr::Or(Box::new(lhs), Box::new(self.and()?));
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<LogicExpr, LogicError> {
        let mut lhs = self.not()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            lhs = LogicExpr::And(Box::new(lhs), Box::new(self.not()?));
        }
        Ok(lhs)
    }

    fn not(&mut self) -> Result<LogicExpr, LogicError> {
        if self.peek() == Some(&Tok::Not) {
            self.pos += 1;
            return Ok(LogicExpr::Not(Box::new(self.not()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<LogicExpr, LogicError> {
        match self.peek().cloned() {
            Some(Tok::Atom(w)) => {
                self.pos += 1;
                Ok(LogicExpr::Atom(w))
            }
            Some(Tok::Open) => {
                self.pos += 1;
                let inner = self.or()?;
                if self.peek() != Some(&Tok::Close) {
                    return self.fail("expected `)`");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(_) => self.fail("expected m(word/CAT), NOT or `(`"),
            None => self.fail("unexpected end of expression"),
        }
    }
}

pub fn parse_logic(text: &str) -> Result<LogicExpr, LogicError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let expr = parser.or()?;
    if parser.pos != parser.tokens.len() {
        return parser.fail("trailing input");
    }
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn atom(s: &str) -> Box<LogicExpr> {
        Box::new(LogicExpr::Atom(s.parse().unwrap()))
    }

    #[test]
    fn precedence() {
        let e = parse_logic("m(lazy/Adj) OR m(the/Det) AND NOT m(quick/Adj)").unwrap();
        assert_eq!(
            e,
            LogicExpr::Or(
                atom("lazy/Adj"),
                Box::new(LogicExpr::And(
                    atom("the/Det"),
                    Box::new(LogicExpr::Not(atom("quick/Adj")))
                ))
            )
        );
        let e = parse_logic("(m(a/Adj) OR m(b/Adj)) AND m(c/Adj)").unwrap();
        assert_eq!(
            e,
            LogicExpr::And(Box::new(LogicExpr::Or(atom("a/Adj"), atom("b/Adj"))), atom("c/Adj"))
        );
    }

    #[test]
    fn round_trip_display() {
        let e = parse_logic("NOT NOT m(x/Adj) AND m(y/Adv)").unwrap();
        assert_eq!(parse_logic(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn errors() {
        for bad in ["", "m(x/Adj) AND", "m(x)", "(m(x/Adj)", "m(x/Adj) m(y/Adj)", "x/Adj", "m(x/Adj"] {
            assert!(parse_logic(bad).is_err(), "{bad}");
        }
    }
}
