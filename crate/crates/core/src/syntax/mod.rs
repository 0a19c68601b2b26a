// SPDX-License-Identifier: Apache-2.0

//! Concrete syntax.
//!
//! ```text
//! expr := term (('+' | '-') term)*
//! term := integer | identifier | '-' term | '(' expr ')'
//!       | 'let' identifier '=' expr 'in' expr
//! ```
//!
//! `+` and `-` share one precedence level and associate to the left. A `let`
//! body extends as far to the right as possible. Identifiers match
//! `[A-Za-z_][A-Za-z0-9_]*`; `let` and `in` are reserved.

mod ast;
mod elaborate;
mod lexer;
mod parser;

pub use ast::SurfaceAst;
pub use elaborate::elaborate;
pub use parser::{parse, ParseError, ParseErrorKind};
