// SPDX-License-Identifier: Apache-2.0

use crate::expr::{Exp, ExpArith, ExpLet, Name};

/// Counts constructors. A `let_`-bound expression is counted once, however
/// often the body uses it; uses of the bound variable cost nothing.
#[derive(Debug, Clone, Copy)]
pub struct Size;

pub fn size(program: u64) -> u64 {
    program
}

impl Exp for Size {
    type Repr = u64;

    fn constant(_: i64) -> u64 {
        1
    }

    fn variable(_: Name) -> u64 {
        1
    }

    fn add(left: u64, right: u64) -> u64 {
        left.saturating_add(right).saturating_add(1)
    }
}

impl ExpArith for Size {
    fn neg(operand: u64) -> u64 {
        operand.saturating_add(1)
    }

    fn sub(left: u64, right: u64) -> u64 {
        left.saturating_add(right).saturating_add(1)
    }
}

impl ExpLet for Size {
    fn let_<F>(bound: u64, body: F) -> u64
    where
        F: Fn(u64) -> u64 + Send + Sync + 'static,
    {
        bound.saturating_add(body(0))
    }
}
