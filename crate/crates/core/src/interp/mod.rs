// SPDX-License-Identifier: Apache-2.0

//! Pure interpreters: evaluation, size, flat printing, and printing with
//! `let` forms.

mod env;
mod eval;
mod print;
mod render;
mod show;
mod size;

pub use env::Env;
pub use eval::{eval, Eval, EvalError, Reader};
pub use print::{print_flat, Parens, Print};
pub use render::Rendered;
pub use show::{print_let, LetDoc, LetPrint};
pub use size::{size, Size};
