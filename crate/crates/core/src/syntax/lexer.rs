// SPDX-License-Identifier: Apache-2.0

use super::parser::{ParseError, ParseErrorKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(super) enum Token {
    Int(i64),
    Ident(String),
    Let,
    In,
    Plus,
    Minus,
    Equals,
    LParen,
    RParen,
    Eof,
}

impl Token {
    pub(super) fn describe(&self) -> String {
        match self {
            Token::Int(n) => format!("integer {n}"),
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::Let => "`let`".into(),
            Token::In => "`in`".into(),
            Token::Plus => "`+`".into(),
            Token::Minus => "`-`".into(),
            Token::Equals => "`=`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(super) struct Pos {
    pub line: usize,
    pub column: usize,
}

pub(super) fn tokenize(text: &str) -> Result<Vec<(Token, Pos)>, ParseError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    let (mut line, mut column) = (1, 1);

    while let Some(&(start, c)) = chars.peek() {
        let pos = Pos { line, column };
        if c == '\n' {
            chars.next();
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            column += 1;
            continue;
        }

        let single = match c {
            '+' => Some(Token::Plus),
            '-' => Some(Token::Minus),
            '=' => Some(Token::Equals),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            column += 1;
            tokens.push((tok, pos));
            continue;
        }

        let mut end = start;
        let mut take_while = |pred: fn(char) -> bool| {
            while let Some(&(i, c)) = chars.peek() {
                if !pred(c) {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
        };

        if c.is_ascii_digit() {
            take_while(|c| c.is_ascii_digit());
            let digits = &text[start..end];
            column += digits.len();
            tokens.push((Token::Int(integer_literal(digits, pos)?), pos));
        } else if c.is_ascii_alphabetic() || c == '_' {
            take_while(|c| c.is_ascii_alphanumeric() || c == '_');
            let word = &text[start..end];
            column += word.len();
            let tok = match word {
                "let" => Token::Let,
                "in" => Token::In,
                _ => Token::Ident(word.to_owned()),
            };
            tokens.push((tok, pos));
        } else {
            return Err(ParseError::new(pos, ParseErrorKind::UnexpectedChar(c)));
        }
    }

    tokens.push((Token::Eof, Pos { line, column }));
    Ok(tokens)
}

// Magnitudes up to 2^63 are accepted so that the most negative integer can be
// written; 2^63 itself wraps to i64::MIN.
fn integer_literal(digits: &str, pos: Pos) -> Result<i64, ParseError> {
    match digits.parse::<u64>() {
        Ok(n) if n <= 1 << 63 => Ok(n as i64),
        _ => Err(ParseError::new(
            pos,
            ParseErrorKind::IntegerOutOfRange(digits.to_owned()),
        )),
    }
}
