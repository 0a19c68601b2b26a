// SPDX-License-Identifier: Apache-2.0

//! Infix layout shared by the flat and `let` printers.
//!
//! Output uses no parentheses unless re-parsing would change the value:
//! the right operand of `-` when it is a sum, the operand of prefix `-` when
//! it is a sum or a `let`, and any expression that ends in an open `let`
//! (a `let` body extends as far right as possible) when something follows it.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Atom,
    Sum,
    Let,
}

/// Rendered program text plus the layout facts needed to embed it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rendered {
    text: String,
    shape: Shape,
    // Ends in an unparenthesized `let`.
    open_let: bool,
}

impl Rendered {
    pub fn as_str(&self) -> &str {
        &self.text
    }

    pub fn into_string(self) -> String {
        self.text
    }

    pub(crate) fn atom(text: String) -> Self {
        Rendered {
            text,
            shape: Shape::Atom,
            open_let: false,
        }
    }

    fn parenthesized(self) -> Self {
        Rendered::atom(format!("({})", self.text))
    }

    fn close_let(self) -> Self {
        if self.open_let {
            self.parenthesized()
        } else {
            self
        }
    }

    pub(crate) fn add(left: Rendered, right: Rendered) -> Self {
        Rendered::infix(left, " + ", right)
    }

    pub(crate) fn sub(left: Rendered, right: Rendered) -> Self {
        let right = if right.shape == Shape::Sum {
            right.parenthesized()
        } else {
            right
        };
        Rendered::infix(left, " - ", right)
    }

    fn infix(left: Rendered, op: &str, right: Rendered) -> Self {
        let left = left.close_let();
        Rendered {
            text: format!("{}{op}{}", left.text, right.text),
            shape: Shape::Sum,
            open_let: right.open_let,
        }
    }

    pub(crate) fn neg(operand: Rendered) -> Self {
        let operand = match operand.shape {
            Shape::Atom => operand.close_let(),
            Shape::Sum | Shape::Let => operand.parenthesized(),
        };
        Rendered::atom(format!("-{}", operand.text))
    }

    pub(crate) fn let_in(name: &str, bound: Rendered, body: Rendered) -> Self {
        let bound = if bound.shape == Shape::Let {
            bound.parenthesized()
        } else {
            bound.close_let()
        };
        Rendered {
            text: format!("let {name} = {} in {}", bound.text, body.text),
            shape: Shape::Let,
            open_let: true,
        }
    }
}

impl fmt::Display for Rendered {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text)
    }
}
