//! Reader for the bracketed corpus format.
//!
//! ```text
//! # id: s1
//! (S (NP (N dogs)) (VP (V bark)))
//! ```
//!
//! One s-expression per sentence, whitespace-insensitive. `#` starts a
//! comment running to the end of the line; a comment of the form
//! `# id: NAME` names the tree that follows it.

use thiserror::Error;

use super::{CategoryConfig, ConstituentTree, Corpus, Sentence, SentenceId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown category `{label}` at line {line}, column {column}")]
    UnknownCategory {
        label: String,
        line: usize,
        column: usize,
    },
    #[error("bad leaf `{label}` at line {line}, column {column}: {message}")]
    LeafShape {
        label: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("duplicate sentence id `{0}`")]
    DuplicateId(String),
}

impl ParseError {
    pub fn code(&self) -> &'static str {
        match self {
            ParseError::Syntax { .. } => "SyntaxError",
            ParseError::UnknownCategory { .. } => "UnknownCategory",
            ParseError::LeafShape { .. } => "LeafShape",
            ParseError::DuplicateId(_) => "DuplicateId",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Open,
    Close,
    Atom(String),
    Id(String),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1, 1);

    while let Some(&c) = chars.peek() {
        let (tl, tc) = (line, column);
        match c {
            '\n' => {
                chars.next();
                line += 1;
                column = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                column += 1;
            }
            '(' | ')' => {
                chars.next();
                column += 1;
                let tok = if c == '(' { Tok::Open } else { Tok::Close };
                out.push(Token { tok, line: tl, column: tc });
            }
            '#' => {
                let mut comment = String::new();
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    comment.push(c);
                    chars.next();
                    column += 1;
                }
                if let Some(rest) = comment[1..].trim().strip_prefix("id:") {
                    out.push(Token {
                        tok: Tok::Id(rest.trim().to_string()),
                        line: tl,
                        column: tc,
                    });
                }
            }
            _ => {
                let mut atom = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' {
                        break;
                    }
                    atom.push(c);
                    chars.next();
                    column += 1;
                }
                out.push(Token {
                    tok: Tok::Atom(atom),
                    line: tl,
                    column: tc,
                });
            }
        }
    }
    out
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    config: &'a CategoryConfig,
    next_position: usize,
    eof: (usize, usize),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn syntax(&self, at: Option<&Token>, message: impl Into<String>) -> ParseError {
        let (line, column) = at.map(|t| (t.line, t.column)).unwrap_or(self.eof);
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    /// Parses one node; the opening parenthesis has not been consumed yet.
    fn node(&mut self) -> Result<ConstituentTree, ParseError> {
        let open = self.bump();
        debug_assert!(matches!(open.as_ref().map(|t| &t.tok), Some(Tok::Open)));

        let label_tok = match self.bump() {
            Some(t) => t,
            None => return Err(self.syntax(None, "unbalanced parenthesis")),
        };
        let label = match &label_tok.tok {
            Tok::Atom(a) => a.clone(),
            Tok::Close => return Err(self.syntax(Some(&label_tok), "empty node")),
            Tok::Open => return Err(self.syntax(Some(&label_tok), "node without label")),
            Tok::Id(_) => return Err(self.syntax(Some(&label_tok), "id directive inside a tree")),
        };
        if !self.config.is_known(&label) {
            return Err(ParseError::UnknownCategory {
                label,
                line: label_tok.line,
                column: label_tok.column,
            });
        }
        let leaf_err = |message: &str| ParseError::LeafShape {
            label: label.clone(),
            line: label_tok.line,
            column: label_tok.column,
            message: message.to_string(),
        };

        let mut children = Vec::new();
        let mut surface: Option<String> = None;
        loop {
            let tok = self.peek().cloned();
            match tok.as_ref().map(|t| &t.tok) {
                None => return Err(self.syntax(None, "unbalanced parenthesis")),
                Some(Tok::Close) => {
                    self.pos += 1;
                    break;
                }
                Some(Tok::Open) => {
                    if surface.is_some() {
                        return Err(leaf_err("leaf mixes a surface token with subtrees"));
                    }
                    children.push(self.node()?);
                }
                Some(Tok::Atom(a)) => {
                    if surface.is_some() {
                        return Err(leaf_err("leaf has more than one surface token"));
                    }
                    if !children.is_empty() {
                        return Err(leaf_err("leaf mixes a surface token with subtrees"));
                    }
                    surface = Some(a.clone());
                    self.pos += 1;
                }
                Some(Tok::Id(_)) => {
                    return Err(self.syntax(tok.as_ref(), "id directive inside a tree"))
                }
            }
        }

        match surface {
            Some(s) => {
                self.next_position += 1;
                let surface = if self.config.lowercase {
                    s.to_lowercase()
                } else {
                    s
                };
                Ok(ConstituentTree::Leaf {
                    label,
                    surface,
                    position: self.next_position,
                })
            }
            None if children.is_empty() => Err(leaf_err("leaf without surface token")),
            None => Ok(ConstituentTree::Internal { label, children }),
        }
    }
}

/// Parses bracketed corpus text. Sentences without an `# id:` directive are
/// named `s<k>` after their 1-based index in the input.
pub fn parse_corpus(text: &str, config: &CategoryConfig) -> Result<Corpus, ParseError> {
    let line_count = text.lines().count().max(1);
    let last_len = text.lines().last().map(|l| l.chars().count()).unwrap_or(0);
    let mut parser = Parser {
        tokens: tokenize(text),
        pos: 0,
        config,
        next_position: 0,
        eof: (line_count, last_len + 1),
    };

    let mut sentences: Vec<Sentence> = Vec::new();
    let mut pending_id: Option<String> = None;
    while let Some(tok) = parser.peek().cloned() {
        match &tok.tok {
            Tok::Id(id) => {
                if pending_id.is_some() {
                    return Err(parser.syntax(Some(&tok), "two id directives for one tree"));
                }
                if id.is_empty() {
                    return Err(parser.syntax(Some(&tok), "empty sentence id"));
                }
                pending_id = Some(id.clone());
                parser.pos += 1;
            }
            Tok::Open => {
                parser.next_position = 0;
                let tree = parser.node()?;
                let id = pending_id
                    .take()
                    .unwrap_or_else(|| format!("s{}", sentences.len() + 1));
                let id = SentenceId(id);
                if sentences.iter().any(|s| s.id == id) {
                    return Err(ParseError::DuplicateId(id.0));
                }
                sentences.push(Sentence::from_tree(id, tree));
            }
            Tok::Close => return Err(parser.syntax(Some(&tok), "unbalanced parenthesis")),
            Tok::Atom(a) => {
                return Err(parser.syntax(Some(&tok), format!("token `{a}` outside a tree")))
            }
        }
    }
    if pending_id.is_some() {
        return Err(parser.syntax(None, "id directive not followed by a tree"));
    }

    Ok(Corpus {
        sentences,
        config: config.clone(),
    })
}
