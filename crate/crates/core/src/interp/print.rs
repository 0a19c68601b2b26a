// SPDX-License-Identifier: Apache-2.0

use super::Rendered;
use crate::expr::{Exp, ExpArith, ExpLet, Name};

/// Flat infix printer, e.g. `i1 + i1 + i1 + i1`.
///
/// It has no notation for sharing: `let_` is flipped application, so a
/// shared expression is printed again at every use.
#[derive(Debug, Clone, Copy)]
pub struct Print;

pub fn print_flat(program: &Rendered) -> String {
    program.as_str().to_owned()
}

impl Exp for Print {
    type Repr = Rendered;

    fn constant(value: i64) -> Rendered {
        Rendered::atom(value.to_string())
    }

    fn variable(name: Name) -> Rendered {
        Rendered::atom(name.to_string())
    }

    fn add(left: Rendered, right: Rendered) -> Rendered {
        Rendered::add(left, right)
    }
}

impl ExpArith for Print {
    fn neg(operand: Rendered) -> Rendered {
        Rendered::neg(operand)
    }

    fn sub(left: Rendered, right: Rendered) -> Rendered {
        Rendered::sub(left, right)
    }
}

impl ExpLet for Print {
    fn let_<F>(bound: Rendered, body: F) -> Rendered
    where
        F: Fn(Rendered) -> Rendered + Send + Sync + 'static,
    {
        body(bound)
    }
}

/// Fully parenthesized printer for debugging, e.g. `((v1+v2)+v3)`.
#[derive(Debug, Clone, Copy)]
pub struct Parens;

impl Exp for Parens {
    type Repr = String;

    fn constant(value: i64) -> String {
        value.to_string()
    }

    fn variable(name: Name) -> String {
        name.to_string()
    }

    fn add(left: String, right: String) -> String {
        format!("({left}+{right})")
    }
}

impl ExpArith for Parens {
    fn neg(operand: String) -> String {
        format!("(-{operand})")
    }

    fn sub(left: String, right: String) -> String {
        format!("({left}-{right})")
    }
}

impl ExpLet for Parens {
    fn let_<F>(bound: String, body: F) -> String
    where
        F: Fn(String) -> String + Send + Sync + 'static,
    {
        body(bound)
    }
}
