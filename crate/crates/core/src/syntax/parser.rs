// SPDX-License-Identifier: Apache-2.0

use std::sync::Arc;

use thiserror::Error;

use super::lexer::{tokenize, Pos, Token};
use super::SurfaceAst;
use crate::expr::Name;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    pub(super) fn new(pos: Pos, kind: ParseErrorKind) -> Self {
        ParseError {
            line: pos.line,
            column: pos.column,
            kind,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("integer literal {0} out of range")]
    IntegerOutOfRange(String),
    #[error("expected {expected}, found {found}")]
    Expected {
        expected: &'static str,
        found: String,
    },
    #[error("reserved word `{0}` cannot be used as an identifier")]
    ReservedWord(&'static str),
}

pub fn parse(text: &str) -> Result<SurfaceAst, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, at: 0 };
    let ast = parser.expr()?;
    parser.expect(Token::Eof, "`+`, `-` or end of input")?;
    Ok(ast)
}

struct Parser {
    tokens: Vec<(Token, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &(Token, Pos) {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> (Token, Pos) {
        let t = self.tokens[self.at].clone();
        if t.0 != Token::Eof {
            self.at += 1;
        }
        t
    }

    fn error_here(&self, expected: &'static str) -> ParseError {
        let (tok, pos) = self.peek();
        let kind = match tok {
            Token::Let => ParseErrorKind::ReservedWord("let"),
            Token::In => ParseErrorKind::ReservedWord("in"),
            other => ParseErrorKind::Expected {
                expected,
                found: other.describe(),
            },
        };
        ParseError::new(*pos, kind)
    }

    fn expect(&mut self, want: Token, expected: &'static str) -> Result<(), ParseError> {
        if self.peek().0 == want {
            self.bump();
            Ok(())
        } else {
            Err(ParseError::new(
                self.peek().1,
                ParseErrorKind::Expected {
                    expected,
                    found: self.peek().0.describe(),
                },
            ))
        }
    }

    fn expr(&mut self) -> Result<SurfaceAst, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek().0 {
                Token::Plus => {
                    self.bump();
                    acc = SurfaceAst::Add(Arc::new(acc), Arc::new(self.term()?));
                }
                Token::Minus => {
                    self.bump();
                    acc = SurfaceAst::Sub(Arc::new(acc), Arc::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<SurfaceAst, ParseError> {
        match self.peek().0.clone() {
            Token::Int(n) => {
                self.bump();
                Ok(SurfaceAst::Constant(n))
            }
            Token::Ident(name) => {
                self.bump();
                Ok(SurfaceAst::VarRef(identifier(name)))
            }
            Token::Minus => {
                self.bump();
                Ok(SurfaceAst::Neg(Arc::new(self.term()?)))
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            Token::Let => {
                self.bump();
                let name = match self.peek().0.clone() {
                    Token::Ident(name) => {
                        self.bump();
                        identifier(name)
                    }
                    _ => return Err(self.error_here("identifier")),
                };
                self.expect(Token::Equals, "`=`")?;
                let bound = self.expr()?;
                self.expect(Token::In, "`in`")?;
                let body = self.expr()?;
                Ok(SurfaceAst::Let {
                    name,
                    bound: Arc::new(bound),
                    body: Arc::new(body),
                })
            }
            _ => Err(self.error_here("expression")),
        }
    }
}

fn identifier(name: String) -> Name {
    Name::try_from(name).expect("lexer never yields empty identifiers")
}
